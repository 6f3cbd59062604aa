//! Standard families, the three named fixture groups, and corpus expansion.
//!
//! Family constructors use natural actions: `Z_n` on `n` points, dihedral
//! groups on the vertices of a polygon, `S_n`/`A_n` on `n` points, elementary
//! abelian groups as products of disjoint `p`-cycles. Direct products act on
//! disjoint point sets.

use std::sync::{Arc, OnceLock};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::SubgroupLattice;
use crate::perm::Permutation;

fn cycle_on(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let cycle: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[cycle]).expect("cycle lies within the degree")
}

/// `Z_n` acting regularly on `n` points (the trivial group acts on one point).
pub fn make_cyclic(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic group of order 0".into()));
    }
    if n == 1 {
        return Ok(FiniteGroup::trivial(1));
    }
    FiniteGroup::closure(n, &[cycle_on(n, 1..=n)], cap)
}

/// Dihedral group of the given order `2m`: the symmetries of an `m`-gon for
/// `m ≥ 3`, `Z_2` for order 2 and the Klein four-group on 4 points for order 4.
pub fn make_dihedral(order: usize, cap: usize) -> Result<FiniteGroup> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "dihedral group order must be even and positive, got {order}"
        )));
    }
    let m = order / 2;
    match m {
        1 => make_cyclic(2, cap),
        2 => {
            let gens = [cycle_on(4, [1, 2]), cycle_on(4, [3, 4])];
            FiniteGroup::closure(4, &gens, cap)
        }
        _ => {
            let rotation = cycle_on(m, 1..=m);
            // fixes vertex 1 and swaps i with m + 2 - i
            let images: Vec<usize> = (1..=m).map(|i| if i == 1 { 1 } else { m + 2 - i }).collect();
            let reflection = Permutation::from_images(&images)?;
            FiniteGroup::closure(m, &[rotation, reflection], cap)
        }
    }
}

pub fn make_symmetric(n: usize, cap: usize) -> Result<FiniteGroup> {
    match n {
        0 => Err(Error::InvalidParameter("symmetric group of degree 0".into())),
        1 => Ok(FiniteGroup::trivial(1)),
        2 => FiniteGroup::closure(2, &[cycle_on(2, [1, 2])], cap),
        _ => FiniteGroup::closure(n, &[cycle_on(n, 1..=n), cycle_on(n, [1, 2])], cap),
    }
}

/// `A_n`, generated by the 3-cycles `(i i+1 i+2)`.
pub fn make_alternating(n: usize, cap: usize) -> Result<FiniteGroup> {
    match n {
        0 => Err(Error::InvalidParameter("alternating group of degree 0".into())),
        1 | 2 => Ok(FiniteGroup::trivial(n)),
        _ => {
            let gens: Vec<Permutation> = (1..=n - 2).map(|i| cycle_on(n, [i, i + 1, i + 2])).collect();
            FiniteGroup::closure(n, &gens, cap)
        }
    }
}

/// `(Z_p)^k` as `k` disjoint `p`-cycles.
pub fn make_elementary_abelian(p: u64, k: usize, cap: usize) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Ok(FiniteGroup::trivial(1));
    }
    let p = p as usize;
    let degree = p * k;
    let gens: Vec<Permutation> = (0..k)
        .map(|j| cycle_on(degree, j * p + 1..=(j + 1) * p))
        .collect();
    FiniteGroup::closure(degree, &gens, cap)
}

fn shift(p: &Permutation, offset: usize, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=degree).collect();
    for x in 1..=p.degree() {
        images[offset + x - 1] = offset + p.image(x);
    }
    Permutation::from_images(&images).expect("shifted permutation is a bijection")
}

/// `G1 × G2` with `G1` on the first `deg G1` points and `G2` on the rest.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let degree = g1.degree() + g2.degree();
    let gens: Vec<Permutation> = g1
        .generators()
        .iter()
        .map(|p| shift(p, 0, degree))
        .chain(g2.generators().iter().map(|p| shift(p, g1.degree(), degree)))
        .collect();
    FiniteGroup::closure(degree, &gens, cap)
}

/// Row vectors over `F_p` indexed by `Σ v_i p^i`.
fn vector_of(index: usize, p: u32, dim: usize) -> Vec<u32> {
    let mut rest = index as u32;
    (0..dim)
        .map(|_| {
            let d = rest % p;
            rest /= p;
            d
        })
        .collect()
}

fn index_of_vector(v: &[u32], p: u32) -> usize {
    v.iter().rev().fold(0usize, |acc, &x| acc * p as usize + x as usize)
}

/// `v ↦ vM + t` over `F_p`.
fn affine_map(v: &[u32], m: &[Vec<u32>], t: &[u32], p: u32) -> Vec<u32> {
    (0..v.len())
        .map(|j| {
            let s: u32 = v.iter().zip(m).map(|(&vi, row)| vi * row[j]).sum::<u32>() + t[j];
            s % p
        })
        .collect()
}

/// Permutation of all `p^dim` vectors (point `1 + index`) induced by `v ↦ vM + t`.
fn affine_permutation(p: u32, m: &[Vec<u32>], t: &[u32]) -> Permutation {
    let dim = m.len();
    let size = (p as usize).pow(dim as u32);
    let images: Vec<usize> = (0..size)
        .map(|i| index_of_vector(&affine_map(&vector_of(i, p, dim), m, t, p), p) + 1)
        .collect();
    Permutation::from_images(&images).expect("invertible affine map")
}

/// Permutation of the nonzero vectors (point = index) induced by `v ↦ vM`.
fn linear_permutation(p: u32, m: &[Vec<u32>]) -> Permutation {
    let dim = m.len();
    let size = (p as usize).pow(dim as u32);
    let zero = vec![0; dim];
    let images: Vec<usize> = (1..size)
        .map(|i| index_of_vector(&affine_map(&vector_of(i, p, dim), m, &zero, p), p))
        .collect();
    Permutation::from_images(&images).expect("invertible linear map")
}

fn identity_matrix(dim: usize) -> Vec<Vec<u32>> {
    (0..dim)
        .map(|i| (0..dim).map(|j| u32::from(i == j)).collect())
        .collect()
}

/// The affine group generated by all translations of `F_p^dim` and the given matrices.
fn affine_group(p: u32, matrices: &[Vec<Vec<u32>>], cap: usize) -> Result<FiniteGroup> {
    let dim = matrices[0].len();
    let id = identity_matrix(dim);
    let zero = vec![0; dim];
    let mut gens: Vec<Permutation> = (0..dim)
        .map(|i| {
            let mut t = zero.clone();
            t[i] = 1;
            affine_permutation(p, &id, &t)
        })
        .collect();
    gens.extend(matrices.iter().map(|m| affine_permutation(p, m, &zero)));
    FiniteGroup::closure((p as usize).pow(dim as u32), &gens, cap)
}

/// `PSL(2,7)` on the projective line over `F_7`, generated by `x ↦ x+1` and
/// `x ↦ −1/x` (points `0..6` are `1..7`, `∞` is 8).
pub fn make_psl27() -> FiniteGroup {
    let a = Permutation::parse_cycles(8, "(1 2 3 4 5 6 7)").expect("valid cycle");
    let b = Permutation::parse_cycles(8, "(1 8)(2 7)(3 4)(5 6)").expect("valid cycle");
    let g = FiniteGroup::closure(8, &[a, b], usize::MAX).expect("no cap");
    assert_eq!(g.order(), 168, "PSL(2,7) must have order 168");
    g
}

/// The order-16 group `⟨a, b | a⁴ = b⁴ = (ab)² = (a⁻¹b)² = 1⟩` with its
/// distinguished generators.
pub struct Example27 {
    pub group: FiniteGroup,
    pub a: Permutation,
    pub b: Permutation,
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn involutive_product(x: &[u32], y: &[u32]) -> bool {
    // (x then y) squared is the identity
    (0..x.len()).all(|i| {
        let once = y[x[i] as usize] as usize;
        y[x[once] as usize] as usize == i
    })
}

/// Smallest degree first, then lexicographically first `(a, b)` among
/// permutations of order 4 satisfying the other two relations and
/// generating a group of order 16.
fn search_example_2_7() -> (Vec<u32>, Vec<u32>) {
    for degree in 1..=8usize {
        let mut candidates = Vec::new();
        let mut v: Vec<u32> = (0..degree as u32).collect();
        loop {
            // order exactly 4: if a or b were an involution the relations
            // would make it invert the other, giving a dihedral group of order ≤ 8
            let fourth = (0..degree).all(|i| v[v[v[v[i] as usize] as usize] as usize] as usize == i);
            let square_moves = (0..degree).any(|i| v[v[i] as usize] as usize != i);
            if fourth && square_moves {
                candidates.push(v.clone());
            }
            if !next_permutation(&mut v) {
                break;
            }
        }
        for a in &candidates {
            let mut a_inv = vec![0u32; degree];
            for (i, &x) in a.iter().enumerate() {
                a_inv[x as usize] = i as u32;
            }
            for b in &candidates {
                if !involutive_product(a, b) || !involutive_product(&a_inv, b) {
                    continue;
                }
                let gens = [Permutation::from_raw(a.clone()), Permutation::from_raw(b.clone())];
                if let Ok(g) = FiniteGroup::closure(degree, &gens, 16) {
                    if g.order() == 16 {
                        return (a.clone(), b.clone());
                    }
                }
            }
        }
    }
    panic!("no realization of the order-16 presentation up to degree 8");
}

/// Because the presentation defines a group of order exactly 16, any pair of
/// permutations satisfying the relations and generating 16 elements is a
/// faithful realization; the search result is cached per process.
pub fn make_example_2_7() -> Example27 {
    static FOUND: OnceLock<(Vec<u32>, Vec<u32>)> = OnceLock::new();
    let (a, b) = FOUND.get_or_init(search_example_2_7);
    let a = Permutation::from_raw(a.clone());
    let b = Permutation::from_raw(b.clone());
    let group = FiniteGroup::closure(a.degree(), &[a.clone(), b.clone()], 16).expect("order 16");
    assert_eq!(group.order(), 16);
    Example27 { group, a, b }
}

/// `[U]S_3` with `U = F_7²` and `S_3` acting through its 2-dimensional
/// irreducible representation, as an affine group of degree 49 (point
/// `1 + u + 7v` is the vector `(u, v)`).
pub fn make_wu_not_u() -> FiniteGroup {
    const P: u32 = 7;
    // r = [[0,-1],[1,-1]] of order 3, s = [[0,1],[1,0]] inverting it
    let r = vec![vec![0, P - 1], vec![1, P - 1]];
    let s = vec![vec![0, 1], vec![1, 0]];
    let zero = [0, 0];

    let linear = FiniteGroup::closure(
        49,
        &[affine_permutation(P, &r, &zero), affine_permutation(P, &s, &zero)],
        usize::MAX,
    )
    .expect("no cap");
    assert_eq!(linear.order(), 6, "S3 must act faithfully");
    assert!(!linear.is_abelian_subgroup(&linear.whole()));

    let lines: Vec<[u32; 2]> = (0..P).map(|t| [1, t]).chain([[0, 1]]).collect();
    let invariant = |v: &[u32; 2], m: &[Vec<u32>]| {
        let w = affine_map(v, m, &zero, P);
        (0..P).any(|lambda| w[0] == lambda * v[0] % P && w[1] == lambda * v[1] % P)
    };
    for line in &lines {
        assert!(
            !(invariant(line, &r) && invariant(line, &s)),
            "the module must be irreducible, but line {line:?} is invariant"
        );
    }

    let g = affine_group(P, &[r, s], usize::MAX).expect("no cap");
    assert_eq!(g.order(), 294);
    g
}

/// `SL(2,3)` on the 8 nonzero vectors of `F_3²`.
fn make_sl23(cap: usize) -> Result<FiniteGroup> {
    let t = vec![vec![1, 1], vec![0, 1]];
    let w = vec![vec![0, 2], vec![1, 0]];
    FiniteGroup::closure(8, &[linear_permutation(3, &t), linear_permutation(3, &w)], cap)
}

/// `AGL(1,p)`-type Frobenius groups `x ↦ x + 1`, `x ↦ kx`.
fn make_frobenius(p: u32, k: u32, cap: usize) -> Result<FiniteGroup> {
    affine_group(p, &[vec![vec![k]]], cap)
}

fn from_cycles(degree: usize, gens: &[&str], cap: usize) -> Result<FiniteGroup> {
    let gens: Vec<Permutation> = gens
        .iter()
        .map(|s| Permutation::parse_cycles(degree, s))
        .collect::<Result<_>>()?;
    FiniteGroup::closure(degree, &gens, cap)
}

fn product_of(
    a: fn(usize) -> Result<FiniteGroup>,
    b: fn(usize) -> Result<FiniteGroup>,
    cap: usize,
) -> Result<FiniteGroup> {
    direct_product(&a(cap)?, &b(cap)?, cap)
}

/// A registered group.
pub struct CatalogEntry {
    pub name: &'static str,
    /// Constructor and parameters, for display.
    pub params: &'static str,
    pub expected_order: usize,
    pub note: &'static str,
    build: fn(usize) -> Result<FiniteGroup>,
}

impl CatalogEntry {
    /// Builds the group, refusing up front if the expected order exceeds `cap`.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        if self.expected_order > cap {
            return Err(Error::OrderCapExceeded { cap });
        }
        let g = (self.build)(cap)?;
        assert_eq!(
            g.order(),
            self.expected_order,
            "catalog entry {} built with the wrong order",
            self.name
        );
        Ok(g)
    }
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("params", &self.params)
            .field("expected_order", &self.expected_order)
            .finish()
    }
}

macro_rules! entry {
    ($name:expr, $params:expr, $order:expr, $note:expr, $build:expr) => {
        CatalogEntry {
            name: $name,
            params: $params,
            expected_order: $order,
            note: $note,
            build: $build,
        }
    };
}

/// All registered groups in display order.
pub fn registry() -> &'static [CatalogEntry] {
    static REGISTRY: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        vec![
            entry!("trivial", "cyclic(1)", 1, "trivial group", |c| make_cyclic(1, c)),
            entry!("Z2", "cyclic(2)", 2, "", |c| make_cyclic(2, c)),
            entry!("Z3", "cyclic(3)", 3, "", |c| make_cyclic(3, c)),
            entry!("Z4", "cyclic(4)", 4, "", |c| make_cyclic(4, c)),
            entry!("Z5", "cyclic(5)", 5, "", |c| make_cyclic(5, c)),
            entry!("Z6", "cyclic(6)", 6, "", |c| make_cyclic(6, c)),
            entry!("Z8", "cyclic(8)", 8, "", |c| make_cyclic(8, c)),
            entry!("V4", "elementary_abelian(2, 2)", 4, "Klein four-group", |c| {
                make_elementary_abelian(2, 2, c)
            }),
            entry!("Z4xZ2", "cyclic(4) x cyclic(2)", 8, "", |c| {
                product_of(|c| make_cyclic(4, c), |c| make_cyclic(2, c), c)
            }),
            entry!("E8", "elementary_abelian(2, 3)", 8, "", |c| {
                make_elementary_abelian(2, 3, c)
            }),
            entry!("E9", "elementary_abelian(3, 2)", 9, "", |c| {
                make_elementary_abelian(3, 2, c)
            }),
            entry!("D8", "dihedral(8)", 8, "symmetries of a square", |c| make_dihedral(8, c)),
            entry!("Q8", "regular quaternion", 8, "quaternion group, regular action", |c| {
                from_cycles(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], c)
            }),
            entry!("D10", "dihedral(10)", 10, "", |c| make_dihedral(10, c)),
            entry!("D12", "dihedral(12)", 12, "", |c| make_dihedral(12, c)),
            entry!("Dic12", "Z3 : Z4", 12, "dicyclic group of order 12", |c| {
                from_cycles(7, &["(1 2 3)", "(2 3)(4 5 6 7)"], c)
            }),
            entry!("S3", "symmetric(3)", 6, "", |c| make_symmetric(3, c)),
            entry!("A4", "alternating(4)", 12, "", |c| make_alternating(4, c)),
            entry!("S4", "symmetric(4)", 24, "", |c| make_symmetric(4, c)),
            entry!("A5", "alternating(5)", 60, "smallest nonabelian simple group", |c| {
                make_alternating(5, c)
            }),
            entry!("S5", "symmetric(5)", 120, "", |c| make_symmetric(5, c)),
            entry!("Z3xS3", "cyclic(3) x symmetric(3)", 18, "", |c| {
                product_of(|c| make_cyclic(3, c), |c| make_symmetric(3, c), c)
            }),
            entry!("S3xS3", "symmetric(3) x symmetric(3)", 36, "", |c| {
                product_of(|c| make_symmetric(3, c), |c| make_symmetric(3, c), c)
            }),
            entry!("Z2xD8", "cyclic(2) x dihedral(8)", 16, "", |c| {
                product_of(|c| make_cyclic(2, c), |c| make_dihedral(8, c), c)
            }),
            entry!("A4xZ2", "alternating(4) x cyclic(2)", 24, "", |c| {
                product_of(|c| make_alternating(4, c), |c| make_cyclic(2, c), c)
            }),
            entry!("F20", "x -> x+1, x -> 2x over F5", 20, "Frobenius group AGL(1,5)", |c| {
                make_frobenius(5, 2, c)
            }),
            entry!("F21", "x -> x+1, x -> 2x over F7", 21, "Frobenius group Z7 : Z3", |c| {
                make_frobenius(7, 2, c)
            }),
            entry!("F42", "x -> x+1, x -> 3x over F7", 42, "Frobenius group AGL(1,7)", |c| {
                make_frobenius(7, 3, c)
            }),
            entry!("SL23", "SL(2,3) on nonzero vectors of F3^2", 24, "not supersoluble", |c| {
                make_sl23(c)
            }),
            entry!(
                "psl27",
                "x -> x+1, x -> -1/x on the projective line over F7",
                168,
                "PSL(2,7); a Sylow 3-subgroup is permuteral but not strongly permuteral",
                |_| Ok(make_psl27())
            ),
            entry!(
                "example2.7",
                "<a, b | a^4 = b^4 = (ab)^2 = (a^-1 b)^2 = 1>",
                16,
                "(Z4 x Z2)Z2; the presentation defines order exactly 16, so the first \
                 relation-satisfying pair found by search is faithful; P(<ba>) is elementary \
                 abelian of order 8",
                |_| Ok(make_example_2_7().group)
            ),
            entry!(
                "wu-not-u",
                "[F7^2]S3, affine action on 49 points",
                294,
                "w-supersoluble but not supersoluble",
                |_| Ok(make_wu_not_u())
            ),
        ]
    })
}

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    registry().iter().find(|e| e.name == name)
}

/// A group name resolved to a construction.
#[derive(Debug, Clone)]
pub enum GroupSpec {
    Entry(&'static CatalogEntry),
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian(u64, usize),
    Product(Vec<GroupSpec>),
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

impl GroupSpec {
    /// Order of the group this spec builds, `None` on overflow.
    pub fn expected_order(&self) -> Option<usize> {
        match self {
            GroupSpec::Entry(e) => Some(e.expected_order),
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) => Some(*n),
            GroupSpec::Symmetric(n) => factorial(*n),
            GroupSpec::Alternating(n) => factorial(*n).map(|f| if *n >= 2 { f / 2 } else { f }),
            GroupSpec::ElementaryAbelian(p, k) => {
                (*p as usize).checked_pow(u32::try_from(*k).ok()?)
            }
            GroupSpec::Product(parts) => parts
                .iter()
                .try_fold(1usize, |acc, s| acc.checked_mul(s.expected_order()?)),
        }
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        match self.expected_order() {
            Some(n) if n <= cap => {}
            _ => return Err(Error::OrderCapExceeded { cap }),
        }
        match self {
            GroupSpec::Entry(e) => e.build(cap),
            GroupSpec::Cyclic(n) => make_cyclic(*n, cap),
            GroupSpec::Dihedral(n) => make_dihedral(*n, cap),
            GroupSpec::Symmetric(n) => make_symmetric(*n, cap),
            GroupSpec::Alternating(n) => make_alternating(*n, cap),
            GroupSpec::ElementaryAbelian(p, k) => make_elementary_abelian(*p, *k, cap),
            GroupSpec::Product(parts) => {
                let mut acc = parts[0].build(cap)?;
                for part in &parts[1..] {
                    acc = direct_product(&acc, &part.build(cap)?, cap)?;
                }
                Ok(acc)
            }
        }
    }
}

fn parse_family(name: &str) -> Option<GroupSpec> {
    let (head, rest) = name.split_at(name.char_indices().nth(1)?.0);
    let number = |s: &str| -> Option<usize> {
        (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())).then(|| s.parse().ok()).flatten()
    };
    match head {
        "Z" => number(rest).filter(|&n| n >= 1).map(GroupSpec::Cyclic),
        "D" => number(rest)
            .filter(|&n| n >= 2 && n % 2 == 0)
            .map(GroupSpec::Dihedral),
        "S" => number(rest).filter(|&n| n >= 1).map(GroupSpec::Symmetric),
        "A" => number(rest).filter(|&n| n >= 1).map(GroupSpec::Alternating),
        "E" => {
            let (p, k) = rest.split_once('^')?;
            let p = number(p)? as u64;
            is_prime(p).then_some(GroupSpec::ElementaryAbelian(p, number(k)?))
        }
        _ => None,
    }
}

/// Resolves a registered name, a family name (`Z<n>`, `D<order>`, `S<n>`,
/// `A<n>`, `E<p>^<k>`) or an `x`-separated direct product of those.
pub fn lookup(name: &str) -> Result<GroupSpec> {
    if let Some(e) = entry(name) {
        return Ok(GroupSpec::Entry(e));
    }
    if let Some(spec) = parse_family(name) {
        return Ok(spec);
    }
    if name.contains('x') {
        let parts: Option<Vec<GroupSpec>> = name
            .split('x')
            .map(|part| {
                entry(part)
                    .map(GroupSpec::Entry)
                    .or_else(|| parse_family(part))
            })
            .collect();
        if let Some(parts) = parts.filter(|p| p.len() >= 2) {
            return Ok(GroupSpec::Product(parts));
        }
    }
    Err(Error::UnknownGroup(name.to_string()))
}

pub fn build_named(name: &str, cap: usize) -> Result<FiniteGroup> {
    lookup(name)?.build(cap)
}

/// One corpus member; construction failures (such as the order cap) are kept
/// per member so a run can report them instead of aborting.
#[derive(Debug)]
pub struct CorpusMember {
    pub name: String,
    pub group: Result<FiniteGroup>,
}

pub const DEFAULT_CORPUS_EXPANDERS: [&str; 2] = ["subgroups-of:S4", "subgroups-of:S5"];

/// Expands a comma-separated corpus spec. `default` is every registered group
/// followed by the subgroup classes of `S4` and `S5`; `subgroups-of:<name>`
/// yields one representative per conjugacy class of subgroups of `<name>`,
/// ordered canonically and named `<name>.c<k>`.
pub fn corpus(spec: &str, cap: usize) -> Result<Vec<CorpusMember>> {
    let mut out = Vec::new();
    let tokens: Vec<&str> = spec.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    if tokens.is_empty() {
        return Err(Error::UnknownGroup(spec.to_string()));
    }
    for token in tokens {
        if token == "default" {
            for e in registry() {
                out.push(CorpusMember {
                    name: e.name.to_string(),
                    group: e.build(cap),
                });
            }
            for expander in DEFAULT_CORPUS_EXPANDERS {
                expand_subgroups(expander, &expander["subgroups-of:".len()..], cap, &mut out)?;
            }
        } else if let Some(base) = token.strip_prefix("subgroups-of:") {
            expand_subgroups(token, base, cap, &mut out)?;
        } else {
            let group = lookup(token)?.build(cap);
            out.push(CorpusMember {
                name: token.to_string(),
                group,
            });
        }
    }
    Ok(out)
}

fn expand_subgroups(token: &str, base: &str, cap: usize, out: &mut Vec<CorpusMember>) -> Result<()> {
    let built = lookup(base)?
        .build(cap)
        .and_then(|g| SubgroupLattice::build(Arc::new(g)));
    let lat = match built {
        Ok(lat) => lat,
        Err(e) => {
            out.push(CorpusMember {
                name: token.to_string(),
                group: Err(e),
            });
            return Ok(());
        }
    };
    let g = lat.group();
    let mut reps: Vec<usize> = lat.classes().iter().map(|c| *c.iter().min().expect("nonempty class")).collect();
    reps.sort_unstable();
    for (k, rep) in reps.into_iter().enumerate() {
        let gens: Vec<Permutation> = lat
            .node_generators(rep)
            .iter()
            .map(|&x| g.element(x).clone())
            .collect();
        out.push(CorpusMember {
            name: format!("{base}.c{k:02}"),
            group: FiniteGroup::closure(g.degree(), &gens, cap),
        });
    }
    Ok(())
}
