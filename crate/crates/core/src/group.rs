//! Finite permutation groups with fully enumerated, canonically ordered
//! elements, and subgroups represented as bitsets over that order.
//!
//! Elements are sorted lexicographically by image array, so the identity is
//! always index 0. Every operation here works on element indices; the
//! multiplication table (or, above [`TABLE_LIMIT`], a hash lookup) turns a
//! pair of indices into the index of their left-to-right product.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::arith;
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on group order.
pub const DEFAULT_ORDER_CAP: usize = 5000;

/// Groups up to this order get a dense multiplication table.
pub const TABLE_LIMIT: usize = 2048;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

pub struct FiniteGroup {
    id: u64,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    table: Option<Vec<u32>>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    generator_indices: Vec<usize>,
}

impl FiniteGroup {
    /// `⟨gens⟩` on `degree` points, failing if the order would exceed `cap`.
    pub fn closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<FiniteGroup> {
        if degree == 0 {
            return Err(Error::PointOutOfRange {
                point: 0,
                degree: 0,
            });
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id_perm = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(id_perm.clone(), ());
        let mut queue = VecDeque::from([id_perm]);
        let distinct: Vec<&Permutation> = {
            let mut v: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();
            v.sort();
            v.dedup();
            v
        };
        while let Some(x) = queue.pop_front() {
            for g in &distinct {
                let y = x.then(g);
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_keys().collect();
        elements.sort();
        Ok(Self::from_sorted(degree, gens.to_vec(), elements))
    }

    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<FiniteGroup> {
        Self::closure(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn trivial(degree: usize) -> FiniteGroup {
        Self::from_sorted(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    fn from_sorted(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> FiniteGroup {
        let n = elements.len();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let generator_indices: Vec<usize> = generators
            .iter()
            .map(|g| index[g] as usize)
            .filter(|&i| i != 0)
            .collect();
        let inverse = elements
            .iter()
            .map(|p| index[&p.inverse()])
            .collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let table = (n <= TABLE_LIMIT).then(|| build_table(&elements, &index, &generator_indices));
        FiniteGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            degree,
            generators,
            elements,
            index,
            table,
            inverse,
            orders,
            generator_indices,
        }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Indices of the (non-identity) generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Index of the left-to-right product `a` then `b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].then(&self.elements[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g⁻¹ a g`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a] as u64
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        let mut acc = 0;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Distinct prime divisors of the order.
    pub fn primes(&self) -> Vec<u64> {
        arith::prime_divisors(self.order() as u64)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::new(self.id, ElementSet::full(self.order()))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::new(self.id, ElementSet::from_indices(self.order(), [0]))
    }

    pub(crate) fn make(&self, members: ElementSet) -> Subgroup {
        debug_assert_eq!(members.universe(), self.order());
        Subgroup::new(self.id, members)
    }

    pub fn check_parent(&self, h: &Subgroup) -> Result<()> {
        if h.parent == self.id {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Closure of the given element indices.
    pub fn close(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::empty(self.order());
        set.insert(0);
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        if gens.is_empty() {
            return set;
        }
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// Closure of `base` (already a subgroup generated by `base_gens`) with `extra`.
    pub fn close_over(&self, base: &ElementSet, base_gens: &[usize], extra: &[usize]) -> ElementSet {
        let mut set = base.clone();
        let gens: Vec<usize> = base_gens.iter().chain(extra).copied().collect();
        let mut queue: Vec<usize> = base.iter().collect();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        self.make(self.close(gens))
    }

    /// Subgroup generated by explicit permutations, which must lie in the group.
    pub fn subgroup_from_permutations(&self, gens: &[Permutation]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|g| self.index_of(g).ok_or(Error::NotInGroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup_generated(&idx))
    }

    /// Wraps a member set after checking closure under multiplication.
    pub fn subgroup_from_set(&self, members: ElementSet) -> Result<Subgroup> {
        if members.universe() != self.order() || !members.contains(0) {
            return Err(Error::NotASubgroup);
        }
        let list = members.to_vec();
        for &a in &list {
            for &b in &list {
                if !members.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(self.make(members))
    }

    /// A small generating set chosen greedily in canonical element order.
    pub fn generators_of(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = ElementSet::from_indices(self.order(), [0]);
        for x in h.members.iter() {
            if !current.contains(x) {
                current = self.close_over(&current, &gens, &[x]);
                gens.push(x);
            }
        }
        gens
    }

    pub fn cyclic(&self, a: usize) -> Subgroup {
        self.subgroup_generated(&[a])
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        let ga = self.generators_of(a);
        let gb = self.generators_of(b);
        self.make(self.close_over(&a.members, &ga, &gb))
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.make(a.members.intersection(&b.members))
    }

    /// The complex product `HK` as an element set.
    pub fn set_product(&self, h: &Subgroup, k: &Subgroup) -> Result<ElementSet> {
        self.check_parent(h)?;
        self.check_parent(k)?;
        Ok(self.product_set(&h.members, &k.members))
    }

    pub(crate) fn product_set(&self, h: &ElementSet, k: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.order());
        let ks: Vec<usize> = k.iter().collect();
        for a in h.iter() {
            for &b in &ks {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// `HK = KH` as sets.
    pub fn permutes(&self, h: &Subgroup, k: &Subgroup) -> Result<bool> {
        self.check_parent(h)?;
        self.check_parent(k)?;
        Ok(self.sets_permute(&h.members, &k.members))
    }

    pub(crate) fn sets_permute(&self, h: &ElementSet, k: &ElementSet) -> bool {
        if h.is_subset(k) || k.is_subset(h) {
            return true;
        }
        let hk = self.product_set(h, k);
        let hs: Vec<usize> = h.iter().collect();
        // |KH| = |HK|, so inclusion suffices.
        k.iter()
            .all(|b| hs.iter().all(|&a| hk.contains(self.mul(b, a))))
    }

    /// `HK` when it is a subgroup.
    pub fn product_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Option<Subgroup> {
        self.sets_permute(&h.members, &k.members)
            .then(|| self.make(self.product_set(&h.members, &k.members)))
    }

    pub(crate) fn conjugate_set(&self, h: &ElementSet, g: usize) -> ElementSet {
        let mut out = ElementSet::empty(self.order());
        for x in h.iter() {
            out.insert(self.conj(x, g));
        }
        out
    }

    /// `H^g` for the element index `g`.
    pub fn conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        self.make(self.conjugate_set(&h.members, g))
    }

    /// `H^g = {g⁻¹hg}`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: &Permutation) -> Result<Subgroup> {
        self.check_parent(h)?;
        let gi = self.index_of(g).ok_or(Error::NotInGroup)?;
        Ok(self.conjugate(h, gi))
    }

    /// True when `H^g = H`, tested on a generating set of `H`.
    fn normalizes(&self, h: &Subgroup, h_gens: &[usize], g: usize) -> bool {
        h_gens.iter().all(|&x| h.members.contains(self.conj(x, g)))
    }

    /// `N_A(H)` for an ambient subgroup `A`.
    pub fn normalizer_in(&self, ambient: &Subgroup, h: &Subgroup) -> Subgroup {
        let gens = self.generators_of(h);
        let set = ElementSet::from_indices(
            self.order(),
            ambient.members.iter().filter(|&g| self.normalizes(h, &gens, g)),
        );
        self.make(set)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_parent(h)?;
        Ok(self.normalizer_in(&self.whole(), h))
    }

    /// `C_A(S)` for an element set `S`.
    pub fn centralizer_in(&self, ambient: &Subgroup, s: &ElementSet) -> Subgroup {
        let gens: Vec<usize> = if s.count() > 8 {
            // commuting with a generating set of <S> is enough
            self.generators_of(&self.make(self.close(&s.to_vec())))
        } else {
            s.to_vec()
        };
        let set = ElementSet::from_indices(
            self.order(),
            ambient
                .members
                .iter()
                .filter(|&g| gens.iter().all(|&x| self.mul(g, x) == self.mul(x, g))),
        );
        self.make(set)
    }

    pub fn centralizer(&self, s: &ElementSet) -> Subgroup {
        self.centralizer_in(&self.whole(), s)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer_in(&self.whole(), &ElementSet::full(self.order()))
    }

    /// Intersection of the `A`-conjugates of `M`.
    pub fn core_in(&self, ambient: &Subgroup, m: &Subgroup) -> Subgroup {
        let mut acc = m.members.clone();
        for g in ambient.members.iter() {
            acc.intersect_with(&self.conjugate_set(&m.members, g));
            if acc.count() == 1 {
                break;
            }
        }
        self.make(acc)
    }

    pub fn core(&self, m: &Subgroup) -> Result<Subgroup> {
        self.check_parent(m)?;
        Ok(self.core_in(&self.whole(), m))
    }

    /// `H ⊴ A`, assuming `H ≤ A`.
    pub fn is_normal_in(&self, ambient: &Subgroup, h: &Subgroup) -> bool {
        let hg = self.generators_of(h);
        self.generators_of(ambient)
            .into_iter()
            .all(|g| self.normalizes(h, &hg, g))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let hg = self.generators_of(h);
        self.generator_indices
            .iter()
            .all(|&g| self.normalizes(h, &hg, g))
    }

    /// `[A, B]`, generated by commutators `[a, b]`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut comms = ElementSet::empty(self.order());
        for x in a.members.iter() {
            for y in b.members.iter() {
                comms.insert(self.commutator(x, y));
            }
        }
        self.make(self.close(&comms.to_vec()))
    }

    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        let gens = self.generators_of(h);
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent_of(&self, h: &Subgroup) -> u64 {
        h.members
            .iter()
            .fold(1, |acc, x| arith::lcm(acc, self.element_order(x)))
    }

    /// Nilpotent iff, for each prime p, the p-elements number exactly |H|_p
    /// (that is, every Sylow subgroup is unique).
    pub fn is_nilpotent_subgroup(&self, h: &Subgroup) -> bool {
        let n = h.order() as u64;
        arith::factorize(n).into_iter().all(|(p, e)| {
            let count = h
                .members
                .iter()
                .filter(|&x| arith::is_power_of(self.element_order(x), p, true))
                .count() as u64;
            count == p.pow(e)
        })
    }
}

fn build_table(
    elements: &[Permutation],
    index: &HashMap<Permutation, u32>,
    gens: &[usize],
) -> Vec<u32> {
    let n = elements.len();
    // right multiplication by each generator
    let right: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| {
            elements
                .iter()
                .map(|x| index[&x.then(&elements[g])])
                .collect()
        })
        .collect();
    // breadth-first spanning tree: element j = parent(j) * gen(j)
    let mut parent = vec![(u32::MAX, 0usize); n];
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    visited[0] = true;
    order.push(0usize);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for (gi, r) in right.iter().enumerate() {
            let y = r[x] as usize;
            if !visited[y] {
                visited[y] = true;
                parent[y] = (x as u32, gi);
                order.push(y);
            }
        }
    }
    debug_assert_eq!(order.len(), n);
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        let row = &mut table[i * n..(i + 1) * n];
        row[0] = i as u32;
        for &j in &order[1..] {
            let (p, gi) = parent[j];
            row[j] = right[gi][row[p as usize] as usize];
        }
    }
    table
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// A subgroup of a fixed parent group, identified by its member set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent: u64,
    members: ElementSet,
    order: usize,
}

impl Subgroup {
    fn new(parent: u64, members: ElementSet) -> Self {
        let order = members.count();
        Subgroup {
            parent,
            members,
            order,
        }
    }

    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Index `|other : self|`, assuming containment.
    pub fn index_in(&self, other: &Subgroup) -> usize {
        other.order / self.order
    }

    pub fn permutations<'a>(&'a self, g: &'a FiniteGroup) -> impl Iterator<Item = &'a Permutation> + 'a {
        self.members.iter().map(move |i| g.element(i))
    }
}

/// Canonical order: by order, then by ascending member list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order, self.members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(deg: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(deg, s).unwrap()
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::from_generators(3, &[p(3, "(1 2 3)"), p(3, "(1 2)")]).unwrap()
    }

    fn sub(g: &FiniteGroup, gens: &[&str]) -> Subgroup {
        let perms: Vec<_> = gens.iter().map(|s| p(g.degree(), s)).collect();
        g.subgroup_from_permutations(&perms).unwrap()
    }

    #[test]
    fn closure_of_s3() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
        let mut sorted = g.elements().to_vec();
        sorted.sort();
        assert_eq!(sorted, g.elements());
    }

    #[test]
    fn closure_of_nothing_is_trivial() {
        let g = FiniteGroup::from_generators(4, &[]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn closure_of_projective_line_generators() {
        let g = FiniteGroup::from_generators(
            8,
            &[p(8, "(1 2 3 4 5 6 7)"), p(8, "(1 8)(2 7)(3 4)(5 6)")],
        )
        .unwrap();
        assert_eq!(g.order(), 168);
    }

    #[test]
    fn cap_is_an_error_not_a_truncation() {
        let r = FiniteGroup::closure(3, &[p(3, "(1 2 3)"), p(3, "(1 2)")], 5);
        assert_eq!(r.unwrap_err(), Error::OrderCapExceeded { cap: 5 });
        assert!(FiniteGroup::closure(3, &[p(3, "(1 2 3)"), p(3, "(1 2)")], 6).is_ok());
    }

    #[test]
    fn closure_rejects_mixed_degrees() {
        let r = FiniteGroup::from_generators(3, &[p(4, "(1 2)")]);
        assert!(matches!(r, Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn table_agrees_with_direct_composition() {
        let g = s3();
        for i in 0..6 {
            for j in 0..6 {
                let direct = g.element(i).then(g.element(j));
                assert_eq!(g.element(g.mul(i, j)), &direct);
            }
            assert_eq!(g.mul(i, g.inv(i)), 0);
        }
    }

    #[test]
    fn set_products_in_s3() {
        let g = s3();
        let a3 = sub(&g, &["(1 2 3)"]);
        let t = sub(&g, &["(1 2)"]);
        let one = g.trivial_subgroup();
        assert_eq!(g.set_product(&a3, &one).unwrap(), *a3.members());
        assert_eq!(g.set_product(&a3, &t).unwrap().count(), 6);
        assert_eq!(g.set_product(&t, &t).unwrap(), *t.members());
    }

    #[test]
    fn permutability_in_s3() {
        let g = s3();
        let t12 = sub(&g, &["(1 2)"]);
        let t13 = sub(&g, &["(1 3)"]);
        let c3 = sub(&g, &["(1 2 3)"]);
        assert!(g.permutes(&t12, &t12).unwrap());
        assert!(g.permutes(&t12, &c3).unwrap());
        assert!(!g.permutes(&t12, &t13).unwrap());
        assert_eq!(g.set_product(&t12, &t13).unwrap().count(), 4);
    }

    #[test]
    fn parent_mismatch_is_reported() {
        let g = s3();
        let h = s3();
        assert_eq!(
            g.permutes(&g.whole(), &h.whole()),
            Err(Error::ParentMismatch)
        );
    }

    #[test]
    fn conjugation_in_s3() {
        let g = s3();
        let t12 = sub(&g, &["(1 2)"]);
        let id = Permutation::identity(3);
        assert_eq!(g.conjugate_subgroup(&t12, &id).unwrap(), t12);
        assert_eq!(
            g.conjugate_subgroup(&t12, &p(3, "(1 2 3)")).unwrap(),
            sub(&g, &["(2 3)"])
        );
        let a3 = sub(&g, &["(1 2 3)"]);
        assert_eq!(g.conjugate_subgroup(&a3, &p(3, "(1 3)")).unwrap(), a3);
    }

    #[test]
    fn conjugating_by_foreign_element_fails() {
        let g = FiniteGroup::from_generators(4, &[p(4, "(1 2)")]).unwrap();
        let h = g.whole();
        assert_eq!(
            g.conjugate_subgroup(&h, &p(4, "(3 4)")),
            Err(Error::NotInGroup)
        );
    }

    #[test]
    fn normalizers_centralizers_cores() {
        let g = s3();
        let t12 = sub(&g, &["(1 2)"]);
        assert_eq!(g.normalizer(&t12).unwrap(), t12);
        let c = g.centralizer(&ElementSet::from_indices(
            6,
            [g.index_of(&p(3, "(1 2 3)")).unwrap()],
        ));
        assert_eq!(c, sub(&g, &["(1 2 3)"]));
        assert!(g.center().is_trivial());
        assert!(g.core(&t12).unwrap().is_trivial());
        assert_eq!(g.core(&g.whole()).unwrap(), g.whole());
        let a3 = sub(&g, &["(1 2 3)"]);
        assert_eq!(g.core(&a3).unwrap(), a3);
        assert!(g.is_normal(&a3) && !g.is_normal(&t12));
    }

    #[test]
    fn center_of_abelian_group_is_everything() {
        let g = FiniteGroup::from_generators(5, &[p(5, "(1 2)"), p(5, "(3 4 5)")]).unwrap();
        assert_eq!(g.center(), g.whole());
    }

    #[test]
    fn subgroup_from_set_checks_closure() {
        let g = s3();
        let bad = ElementSet::from_indices(6, [0, g.index_of(&p(3, "(1 2 3)")).unwrap()]);
        assert_eq!(g.subgroup_from_set(bad), Err(Error::NotASubgroup));
    }

    #[test]
    fn nilpotency_by_sylow_uniqueness() {
        let g = s3();
        assert!(!g.is_nilpotent_subgroup(&g.whole()));
        assert!(g.is_nilpotent_subgroup(&sub(&g, &["(1 2 3)"])));
        assert_eq!(g.commutator_subgroup(&g.whole(), &g.whole()), sub(&g, &["(1 2 3)"]));
        assert_eq!(g.exponent_of(&g.whole()), 6);
    }
}
