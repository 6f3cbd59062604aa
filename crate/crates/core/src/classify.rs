//! Structural predicates and distinguished subgroups: solubility, nilpotency,
//! supersolubility, Ore dispersiveness, Fitting/Frattini/socle, p-nilpotent
//! radicals, chief series, residuals and nilpotent length.
//!
//! Everything here is computed inside the parent group from its subgroup
//! lattice; quotients `G/N` are handled through the normal subgroups of `G`
//! that contain `N`, never by building a second group.

use std::collections::BTreeMap;

use crate::arith;
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::lattice::SubgroupLattice;
use crate::permutizer;

/// Formations whose residuals we compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formation {
    Nilpotent,
    Supersoluble,
}

#[derive(Clone, Debug)]
pub struct ChiefSeries {
    /// Node indices, ascending from the trivial subgroup to the whole group.
    pub terms: Vec<usize>,
    pub factor_orders: Vec<usize>,
}

impl ChiefSeries {
    pub fn factors(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.terms.windows(2).map(|w| (w[0], w[1]))
    }
}

/// How `G` acts on a chief factor `H/K`, summarized by `G/C_G(H/K)`.
#[derive(Clone, Debug)]
pub struct ChiefFactorAction {
    pub centralizer: Subgroup,
    pub quotient_order: usize,
    pub abelian: bool,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub order: usize,
    pub soluble: bool,
    pub nilpotent: bool,
    pub abelian: bool,
    pub supersoluble: bool,
    pub w_supersoluble: bool,
    pub metanilpotent: bool,
    pub ore_dispersive: bool,
    pub nilpotent_length: Option<usize>,
    pub p_closed: BTreeMap<u64, bool>,
}

impl Classification {
    pub fn of(lat: &SubgroupLattice) -> Classification {
        let g = lat.group();
        let soluble = is_soluble(g);
        let nilpotent_length = nilpotent_length(lat).ok();
        Classification {
            order: g.order(),
            soluble,
            nilpotent: g.is_nilpotent_subgroup(&g.whole()),
            abelian: g.is_abelian_subgroup(&g.whole()),
            supersoluble: is_supersoluble(lat),
            w_supersoluble: permutizer::is_w_supersoluble(lat),
            metanilpotent: nilpotent_length.is_some_and(|l| l <= 2),
            ore_dispersive: is_ore_dispersive(lat),
            nilpotent_length,
            p_closed: g
                .primes()
                .into_iter()
                .map(|p| (p, is_p_closed(lat, p).expect("p divides |G|")))
                .collect(),
        }
    }
}

/// Derived series of `H` down to its perfect core.
pub fn derived_series(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = g.commutator_subgroup(last, last);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let w = g.whole();
    g.commutator_subgroup(&w, &w)
}

pub fn is_soluble_subgroup(g: &FiniteGroup, h: &Subgroup) -> bool {
    derived_series(g, h).last().expect("nonempty").is_trivial()
}

pub fn is_soluble(g: &FiniteGroup) -> bool {
    is_soluble_subgroup(g, &g.whole())
}

/// Lower central series `γ₁ = M, γᵢ₊₁ = [γᵢ, M]` until it stabilizes.
pub fn lower_central_series(g: &FiniteGroup, m: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![m.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = g.commutator_subgroup(last, m);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

fn join_all(g: &FiniteGroup, subs: impl IntoIterator<Item = Subgroup>) -> Subgroup {
    subs.into_iter()
        .fold(g.trivial_subgroup(), |acc, s| g.join(&acc, &s))
}

/// Product of all normal nilpotent subgroups.
pub fn fitting(lat: &SubgroupLattice) -> Subgroup {
    let g = lat.group();
    join_all(
        g,
        lat.normal_indices()
            .into_iter()
            .map(|i| lat.node(i))
            .filter(|s| g.is_nilpotent_subgroup(s))
            .cloned(),
    )
}

/// Intersection of the maximal subgroups (the whole group when trivial).
pub fn frattini(lat: &SubgroupLattice) -> Subgroup {
    let g = lat.group();
    let mut acc = ElementSet::full(g.order());
    for &m in lat.lower_covers(lat.top()) {
        acc.intersect_with(lat.node(m).members());
    }
    lat.node(lat.index_of_set(&acc).expect("intersection of subgroups is a node"))
        .clone()
}

/// Product of the minimal normal subgroups.
pub fn socle(lat: &SubgroupLattice) -> Subgroup {
    let g = lat.group();
    join_all(
        g,
        lat.minimal_normal_indices()
            .into_iter()
            .map(|i| lat.node(i).clone()),
    )
}

/// `H` has a normal `p`-complement: its `p'`-elements generate a subgroup
/// of order `|H|_{p'}`.
pub fn is_p_nilpotent_subgroup(g: &FiniteGroup, h: &Subgroup, p: u64) -> bool {
    let n = h.order() as u64;
    let p_part = arith::pi_part(n, &[p]);
    let p_prime: Vec<usize> = h
        .members()
        .iter()
        .filter(|&x| !g.element_order(x).is_multiple_of(p))
        .collect();
    g.close(&p_prime).count() as u64 == n / p_part
}

/// `F_p(G)`, the product of all normal p-nilpotent subgroups.
pub fn p_nilpotent_radical(lat: &SubgroupLattice, p: u64) -> Subgroup {
    let g = lat.group();
    join_all(
        g,
        lat.normal_indices()
            .into_iter()
            .map(|i| lat.node(i))
            .filter(|s| is_p_nilpotent_subgroup(g, s, p))
            .cloned(),
    )
}

/// A chief series of `G` through the normal node `base`, continued up to `G`.
/// Each step takes the canonically first normal subgroup minimal over the
/// current term.
pub fn chief_series_from(lat: &SubgroupLattice, base: usize) -> ChiefSeries {
    let normals = lat.normal_indices();
    let mut terms = vec![base];
    let mut current = base;
    while current != lat.top() {
        let above: Vec<usize> = normals
            .iter()
            .copied()
            .filter(|&m| m != current && lat.contains(m, current))
            .collect();
        let next = above
            .iter()
            .copied()
            .find(|&m| !above.iter().any(|&o| o != m && lat.contains(m, o)))
            .expect("the whole group lies above every proper term");
        terms.push(next);
        current = next;
    }
    let factor_orders = terms
        .windows(2)
        .map(|w| lat.node(w[1]).order() / lat.node(w[0]).order())
        .collect();
    ChiefSeries {
        terms,
        factor_orders,
    }
}

pub fn chief_series(lat: &SubgroupLattice) -> ChiefSeries {
    chief_series_from(lat, 0)
}

/// No normal subgroup of `G` lies strictly between `K < H`, both normal.
pub fn is_chief_factor(lat: &SubgroupLattice, k: usize, h: usize) -> bool {
    k != h
        && lat.contains(h, k)
        && lat.is_normal(k)
        && lat.is_normal(h)
        && !lat
            .normal_indices()
            .into_iter()
            .any(|m| m != k && m != h && lat.contains(m, k) && lat.contains(h, m))
}

/// `C_G(H/K) = {g : [g, h] ∈ K for all h ∈ H}`.
pub fn factor_centralizer(g: &FiniteGroup, k: &Subgroup, h: &Subgroup) -> Subgroup {
    let hgens = g.generators_of(h);
    let set = ElementSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| hgens.iter().all(|&y| k.contains(g.commutator(x, y)))),
    );
    g.subgroup_from_set(set).expect("centralizer of a section is a subgroup")
}

/// Exponent of `A/N` computed inside `G`: lcm over `a ∈ A` of the least `e` with `aᵉ ∈ N`.
pub fn relative_exponent(g: &FiniteGroup, a: &Subgroup, n: &Subgroup) -> u64 {
    a.members().iter().fold(1, |acc, x| {
        let mut e = 1;
        let mut y = x;
        while !n.contains(y) {
            y = g.mul(y, x);
            e += 1;
        }
        arith::lcm(acc, e)
    })
}

pub fn chief_factor_action(lat: &SubgroupLattice, k: usize, h: usize) -> Result<ChiefFactorAction> {
    if !is_chief_factor(lat, k, h) {
        return Err(Error::NotChiefFactor);
    }
    let g = lat.group();
    let c = factor_centralizer(g, lat.node(k), lat.node(h));
    let derived = derived_subgroup(g);
    Ok(ChiefFactorAction {
        quotient_order: g.order() / c.order(),
        abelian: derived.is_subgroup_of(&c),
        exponent: relative_exponent(g, &g.whole(), &c),
        centralizer: c,
    })
}

/// Soluble with every chief factor of prime order.
pub fn is_supersoluble(lat: &SubgroupLattice) -> bool {
    is_soluble(lat.group())
        && chief_series(lat)
            .factor_orders
            .iter()
            .all(|&o| arith::is_prime(o as u64))
}

/// `G/N` supersoluble for a normal node `N`, read off the chief factors of `G` above `N`.
pub fn quotient_is_supersoluble(lat: &SubgroupLattice, n: usize) -> bool {
    chief_series_from(lat, n)
        .factor_orders
        .iter()
        .all(|&o| arith::is_prime(o as u64))
}

/// Huppert's criterion on node `i`: every maximal subgroup has prime index.
pub fn is_supersoluble_node(lat: &SubgroupLattice, i: usize) -> bool {
    let order = lat.node(i).order();
    lat.lower_covers(i)
        .iter()
        .all(|&m| arith::is_prime((order / lat.node(m).order()) as u64))
}

/// Primes `p₁ > p₂ > …` of `|G|`: a normal subgroup of order `p₁^a₁⋯pᵢ^aᵢ` exists for each `i`.
pub fn is_ore_dispersive(lat: &SubgroupLattice) -> bool {
    let n = lat.group().order() as u64;
    let mut primes = arith::prime_divisors(n);
    primes.reverse();
    let normals = lat.normal_indices();
    (1..=primes.len()).all(|i| {
        let target = arith::pi_part(n, &primes[..i]) as usize;
        normals.iter().any(|&m| lat.node(m).order() == target)
    })
}

/// `G` has a normal Sylow `p`-subgroup.
pub fn is_p_closed(lat: &SubgroupLattice, p: u64) -> Result<bool> {
    Ok(lat.sylow_indices(p)?.len() == 1)
}

/// The Fitting series `1 = F₀ < F₁ < … < F_l = G` as node indices.
pub fn fitting_series(lat: &SubgroupLattice) -> Result<Vec<usize>> {
    let g = lat.group();
    if !is_soluble(g) {
        return Err(Error::NotSoluble);
    }
    let normals = lat.normal_indices();
    let mut series = vec![0usize];
    while *series.last().expect("nonempty") != lat.top() {
        let k = *series.last().expect("nonempty");
        let base = lat.node(k);
        // preimage of F(G/K): join of normal M ≥ K with M/K nilpotent
        let next = join_all(
            g,
            normals
                .iter()
                .filter(|&&m| lat.contains(m, k))
                .map(|&m| lat.node(m))
                .filter(|m| {
                    lower_central_series(g, m)
                        .last()
                        .expect("nonempty")
                        .is_subgroup_of(base)
                })
                .cloned(),
        );
        let idx = lat.require(&next)?;
        if idx == k {
            return Err(Error::NotSoluble);
        }
        series.push(idx);
    }
    Ok(series)
}

pub fn nilpotent_length(lat: &SubgroupLattice) -> Result<usize> {
    Ok(fitting_series(lat)?.len() - 1)
}

pub fn is_metanilpotent(lat: &SubgroupLattice) -> bool {
    nilpotent_length(lat).is_ok_and(|l| l <= 2)
}

/// `G/N` lies in the formation, for a normal node `N`.
pub fn quotient_in_formation(lat: &SubgroupLattice, n: usize, f: Formation) -> bool {
    let g = lat.group();
    match f {
        Formation::Nilpotent => lower_central_series(g, &g.whole())
            .last()
            .expect("nonempty")
            .is_subgroup_of(lat.node(n)),
        Formation::Supersoluble => quotient_is_supersoluble(lat, n),
    }
}

/// Intersection of all normal `N` with `G/N` in the formation.
pub fn residual(lat: &SubgroupLattice, f: Formation) -> Subgroup {
    let g = lat.group();
    let mut acc = ElementSet::full(g.order());
    for n in lat.normal_indices() {
        if quotient_in_formation(lat, n, f) {
            acc.intersect_with(lat.node(n).members());
        }
    }
    g.subgroup_from_set(acc).expect("intersection of normal subgroups")
}

/// Membership of `H` in the class of abelian groups of exponent dividing `p − 1`.
pub fn in_abelian_exponent_class(g: &FiniteGroup, h: &Subgroup, p: u64) -> bool {
    g.is_abelian_subgroup(h) && (p - 1).is_multiple_of(g.exponent_of(h))
}

/// The same test for `A/N` with `N ⊴ A`, computed inside `G`.
fn section_in_abelian_exponent_class(g: &FiniteGroup, a: &Subgroup, n: &Subgroup, p: u64) -> bool {
    g.commutator_subgroup(a, a).is_subgroup_of(n) && (p - 1).is_multiple_of(relative_exponent(g, a, n))
}

/// For every prime `p` of `|G|`, `G/F_p(G)` is soluble and its Sylow subgroups
/// are abelian of exponent dividing `p − 1`.
pub fn wu_local_check(lat: &SubgroupLattice) -> bool {
    let g = lat.group();
    let series = derived_series(g, &g.whole());
    let bottom = series.last().expect("nonempty");
    g.primes().into_iter().all(|p| {
        let fp = p_nilpotent_radical(lat, p);
        if !bottom.is_subgroup_of(&fp) {
            return false;
        }
        let quotient_order = (g.order() / fp.order()) as u64;
        arith::prime_divisors(quotient_order).into_iter().all(|r| {
            let sylow = lat.node(lat.sylow_indices(r).expect("r divides |G|")[0]);
            let section = g.join(sylow, &fp);
            section_in_abelian_exponent_class(g, &section, &fp, p)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use std::sync::Arc;

    fn lattice(deg: usize, gens: &[&str]) -> SubgroupLattice {
        let perms: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(deg, s).unwrap())
            .collect();
        SubgroupLattice::build(Arc::new(FiniteGroup::from_generators(deg, &perms).unwrap())).unwrap()
    }

    fn s3() -> SubgroupLattice {
        lattice(3, &["(1 2 3)", "(1 2)"])
    }
    fn a4() -> SubgroupLattice {
        lattice(4, &["(1 2 3)", "(1 2)(3 4)"])
    }
    fn s4() -> SubgroupLattice {
        lattice(4, &["(1 2)", "(1 2 3 4)"])
    }
    fn a5() -> SubgroupLattice {
        lattice(5, &["(1 2 3)", "(1 2 3 4 5)"])
    }
    fn d8() -> SubgroupLattice {
        lattice(4, &["(1 2 3 4)", "(1 3)"])
    }

    #[test]
    fn distinguished_subgroups_of_s3() {
        let l = s3();
        assert_eq!(fitting(&l).order(), 3);
        assert!(frattini(&l).is_trivial());
        assert_eq!(socle(&l).order(), 3);
        assert_eq!(derived_subgroup(l.group()).order(), 3);
    }

    #[test]
    fn fitting_of_nilpotent_is_whole() {
        let l = d8();
        assert_eq!(fitting(&l), l.group().whole());
        assert_eq!(frattini(&l).order(), 2);
    }

    #[test]
    fn p_nilpotent_radicals() {
        let l = s3();
        assert_eq!(p_nilpotent_radical(&l, 2).order(), 6);
        assert_eq!(p_nilpotent_radical(&l, 3).order(), 3);
        let d = d8();
        assert_eq!(p_nilpotent_radical(&d, 2).order(), 8);
    }

    #[test]
    fn chief_series_orders() {
        assert_eq!(chief_series(&s3()).factor_orders, vec![3, 2]);
        assert_eq!(chief_series(&a5()).factor_orders, vec![60]);
        let z5 = lattice(5, &["(1 2 3 4 5)"]);
        assert_eq!(chief_series(&z5).factor_orders, vec![5]);
        assert_eq!(chief_series(&s4()).factor_orders, vec![4, 3, 2]);
    }

    #[test]
    fn chief_factor_action_on_s3() {
        let l = s3();
        let series = chief_series(&l);
        let (k, h) = series.factors().next().unwrap();
        let act = chief_factor_action(&l, k, h).unwrap();
        assert_eq!(act.centralizer.order(), 3);
        assert_eq!(act.quotient_order, 2);
        assert!(act.abelian);
        assert_eq!(act.exponent, 2);
        // A3/1 action: the top factor S3/A3 is central
        let (k2, h2) = series.factors().nth(1).unwrap();
        assert_eq!(chief_factor_action(&l, k2, h2).unwrap().quotient_order, 1);
        assert!(matches!(chief_factor_action(&l, 0, l.top()), Err(Error::NotChiefFactor)));
    }

    #[test]
    fn abelian_group_acts_trivially() {
        let l = lattice(5, &["(1 2)", "(3 4 5)"]);
        let series = chief_series(&l);
        for (k, h) in series.factors() {
            assert_eq!(chief_factor_action(&l, k, h).unwrap().quotient_order, 1);
        }
    }

    #[test]
    fn supersolubility() {
        assert!(is_supersoluble(&s3()));
        assert!(!is_supersoluble(&a4()));
        assert!(is_supersoluble(&d8()));
        assert!(!is_supersoluble(&a5()));
        for l in [s3(), a4(), d8(), s4(), a5()] {
            assert_eq!(is_supersoluble(&l), is_supersoluble_node(&l, l.top()));
        }
    }

    #[test]
    fn ore_dispersive() {
        assert!(is_ore_dispersive(&s3()));
        assert!(!is_ore_dispersive(&a4()));
        assert!(is_ore_dispersive(&d8()));
    }

    #[test]
    fn p_closed() {
        assert!(is_p_closed(&s3(), 3).unwrap());
        assert!(!is_p_closed(&s3(), 2).unwrap());
        assert!(is_p_closed(&a4(), 2).unwrap());
        assert!(is_p_closed(&d8(), 2).unwrap());
        assert!(is_p_closed(&s3(), 5).is_err());
    }

    #[test]
    fn nilpotent_lengths() {
        assert_eq!(nilpotent_length(&d8()).unwrap(), 1);
        assert_eq!(nilpotent_length(&lattice(1, &[])).unwrap(), 0);
        assert_eq!(nilpotent_length(&s3()).unwrap(), 2);
        assert_eq!(nilpotent_length(&s4()).unwrap(), 3);
        assert!(is_metanilpotent(&a4()));
        assert!(!is_metanilpotent(&s4()));
        assert_eq!(nilpotent_length(&a5()).unwrap_err(), Error::NotSoluble);
    }

    #[test]
    fn residuals() {
        assert_eq!(residual(&s3(), Formation::Nilpotent).order(), 3);
        assert!(residual(&s3(), Formation::Supersoluble).is_trivial());
        assert_eq!(residual(&a5(), Formation::Supersoluble).order(), 60);
        assert_eq!(residual(&a4(), Formation::Supersoluble).order(), 4);
        assert_eq!(residual(&s4(), Formation::Nilpotent).order(), 12);
    }

    #[test]
    fn abelian_exponent_class() {
        let z2 = lattice(2, &["(1 2)"]);
        let z3 = lattice(3, &["(1 2 3)"]);
        let s = s3();
        assert!(in_abelian_exponent_class(z2.group(), &z2.group().whole(), 3));
        assert!(!in_abelian_exponent_class(z3.group(), &z3.group().whole(), 3));
        assert!(!in_abelian_exponent_class(s.group(), &s.group().whole(), 7));
    }

    #[test]
    fn local_check() {
        assert!(wu_local_check(&s3()));
        assert!(!wu_local_check(&s4()));
        assert!(wu_local_check(&d8()));
        assert!(!wu_local_check(&a4()));
    }
}
