//! Permutizers and the subgroup embeddings built on them.
//!
//! The permutizer of `H` in `U` is the subgroup generated by every `x ∈ U`
//! whose cyclic subgroup permutes with `H`, i.e. `⟨x⟩H = H⟨x⟩`. `H` is
//! permuteral in `U` when that subgroup is all of `U`, and strongly
//! permuteral in `G` when it is permuteral in every `U` between `H` and `G`.

use std::collections::HashSet;

use crate::arith;
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::lattice::SubgroupLattice;

/// A chain `H = H₀ < H₁ < … < Hₙ = G` with every `|Hᵢ₊₁ : Hᵢ|` prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWitness {
    pub terms: Vec<Subgroup>,
    pub indices: Vec<u64>,
}

/// The first intermediate subgroup `U` (ascending) with `P_U(H) ≠ U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongFailure {
    pub intermediate: Subgroup,
    pub permutizer: Subgroup,
}

/// `P_U(H)` for `H ≤ U ≤ G`.
pub fn permutizer_in(g: &FiniteGroup, ambient: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    g.check_parent(ambient)?;
    g.check_parent(h)?;
    if !h.is_subgroup_of(ambient) {
        return Err(Error::NotContained);
    }
    let n = g.order();
    // elements generating an already-tested cyclic subgroup are skipped
    let mut decided = ElementSet::empty(n);
    let mut result = ElementSet::from_indices(n, [0]);
    let mut result_gens: Vec<usize> = Vec::new();
    for x in ambient.members().iter() {
        if decided.contains(x) {
            continue;
        }
        let ord = g.element_order(x);
        let mut cyclic = ElementSet::empty(n);
        let mut y = 0;
        for k in 0..ord {
            if arith::gcd(k, ord) == 1 {
                decided.insert(y);
            }
            cyclic.insert(y);
            y = g.mul(y, x);
        }
        if result.contains(x) {
            continue;
        }
        if g.sets_permute(&cyclic, h.members()) {
            result = g.close_over(&result, &result_gens, &[x]);
            result_gens.push(x);
        }
    }
    Ok(g.make(result))
}

/// `P_G(H) = ⟨x ∈ G | ⟨x⟩H = H⟨x⟩⟩`.
pub fn permutizer(g: &FiniteGroup, h: &Subgroup) -> Result<Subgroup> {
    permutizer_in(g, &g.whole(), h)
}

pub fn is_permuteral_in(g: &FiniteGroup, ambient: &Subgroup, h: &Subgroup) -> Result<bool> {
    Ok(permutizer_in(g, ambient, h)? == *ambient)
}

/// `P_G(H) = G`.
pub fn is_permuteral(g: &FiniteGroup, h: &Subgroup) -> Result<bool> {
    is_permuteral_in(g, &g.whole(), h)
}

/// Scans `H ≤ U ≤ K` in ascending order and returns the first `U` with `P_U(H) ≠ U`.
pub fn strong_failure_in(lat: &SubgroupLattice, h: usize, k: usize) -> Option<StrongFailure> {
    let g = lat.group();
    let hs = lat.node(h);
    lat.interval(h, k).into_iter().find_map(|u| {
        let us = lat.node(u);
        let p = permutizer_in(g, us, hs).expect("H ≤ U by construction");
        (p != *us).then(|| StrongFailure {
            intermediate: us.clone(),
            permutizer: p,
        })
    })
}

/// `None` when `H` is strongly permuteral in `G`, otherwise the first failing `U`.
pub fn strong_failure(lat: &SubgroupLattice, h: &Subgroup) -> Result<Option<StrongFailure>> {
    let i = lat.require(h)?;
    Ok(strong_failure_in(lat, i, lat.top()))
}

pub fn is_strongly_permuteral(lat: &SubgroupLattice, h: &Subgroup) -> Result<bool> {
    Ok(strong_failure(lat, h)?.is_none())
}

/// Shortest prime-index chain from node `h` up to node `k`, lexicographically
/// smallest by node index among the shortest.
pub fn prime_chain_between(lat: &SubgroupLattice, h: usize, k: usize) -> Option<ChainWitness> {
    if !lat.prime_chain_exists(h, k) {
        return None;
    }
    let reach = lat.prime_reach(h);
    // distance to k over prime-index covers, for nodes on some chain from h
    let mut dist = vec![usize::MAX; lat.len()];
    dist[k] = 0;
    let nodes: Vec<usize> = reach.iter().filter(|&v| lat.contains(k, v)).collect();
    for &v in nodes.iter().rev() {
        if v == k {
            continue;
        }
        let order = lat.node(v).order();
        dist[v] = lat
            .upper_covers(v)
            .iter()
            .filter(|&&w| dist[w] != usize::MAX)
            .filter(|&&w| arith::is_prime((lat.node(w).order() / order) as u64))
            .map(|&w| dist[w] + 1)
            .min()
            .unwrap_or(usize::MAX);
    }
    let mut terms = vec![h];
    let mut cur = h;
    while cur != k {
        let order = lat.node(cur).order();
        cur = lat
            .upper_covers(cur)
            .iter()
            .copied()
            .filter(|&w| arith::is_prime((lat.node(w).order() / order) as u64))
            .find(|&w| dist[w] != usize::MAX && dist[w] + 1 == dist[cur])
            .expect("a cover one step closer to the target exists");
        terms.push(cur);
    }
    let indices = terms
        .windows(2)
        .map(|w| (lat.node(w[1]).order() / lat.node(w[0]).order()) as u64)
        .collect();
    Some(ChainWitness {
        terms: terms.into_iter().map(|i| lat.node(i).clone()).collect(),
        indices,
    })
}

/// A prime-index chain from `H` to `G` when `H` is ℙ-subnormal; an empty chain when `H = G`.
pub fn p_subnormal_chain(lat: &SubgroupLattice, h: &Subgroup) -> Result<Option<ChainWitness>> {
    let i = lat.require(h)?;
    Ok(prime_chain_between(lat, i, lat.top()))
}

pub fn is_p_subnormal(lat: &SubgroupLattice, h: &Subgroup) -> Result<bool> {
    let i = lat.require(h)?;
    Ok(lat.prime_chain_exists(i, lat.top()))
}

/// One Sylow `p`-subgroup of node `k` for each prime `p` of `|K|`.
pub fn sylow_representatives_of(lat: &SubgroupLattice, k: usize) -> Vec<usize> {
    let order = lat.node(k).order() as u64;
    arith::prime_divisors(order)
        .into_iter()
        .map(|p| {
            let target = arith::pi_part(order, &[p]) as usize;
            (0..=k)
                .find(|&i| lat.node(i).order() == target && lat.contains(k, i))
                .expect("Sylow subgroups exist")
        })
        .collect()
}

/// Node `k`, viewed as a group, has every Sylow subgroup ℙ-subnormal in it.
pub fn is_w_supersoluble_node(lat: &SubgroupLattice, k: usize) -> bool {
    sylow_representatives_of(lat, k)
        .into_iter()
        .all(|s| lat.prime_chain_exists(s, k))
}

/// Every Sylow subgroup is ℙ-subnormal; one representative per prime is
/// checked since ℙ-subnormality is preserved by conjugation.
pub fn is_w_supersoluble(lat: &SubgroupLattice) -> bool {
    is_w_supersoluble_node(lat, lat.top())
}

/// `H` and `H^x` are conjugate in `⟨H, H^x⟩` for every `x` in the ambient subgroup.
pub fn is_pronormal_in(g: &FiniteGroup, ambient: &Subgroup, h: &Subgroup) -> bool {
    let hgens = g.generators_of(h);
    let mut seen: HashSet<ElementSet> = HashSet::new();
    for x in ambient.members().iter() {
        let conj = g.conjugate_set(h.members(), x);
        if !seen.insert(conj.clone()) {
            continue;
        }
        if conj == *h.members() {
            continue;
        }
        let xgens: Vec<usize> = hgens.iter().map(|&a| g.conj(a, x)).collect();
        let join = g.close_over(h.members(), &hgens, &xgens);
        let found = join
            .iter()
            .any(|j| hgens.iter().all(|&a| conj.contains(g.conj(a, j))));
        if !found {
            return false;
        }
    }
    true
}

pub fn is_pronormal(g: &FiniteGroup, h: &Subgroup) -> Result<bool> {
    g.check_parent(h)?;
    Ok(is_pronormal_in(g, &g.whole(), h))
}

/// `x ∈ ⟨H, H^x⟩` for every `x` in the ambient subgroup. The condition is
/// constant on right cosets `Hx`, so one representative per coset is tested.
pub fn is_abnormal_in(g: &FiniteGroup, ambient: &Subgroup, h: &Subgroup) -> bool {
    let hgens = g.generators_of(h);
    let hs: Vec<usize> = h.members().iter().collect();
    let mut covered = ElementSet::empty(g.order());
    for x in ambient.members().iter() {
        if covered.contains(x) {
            continue;
        }
        for &a in &hs {
            covered.insert(g.mul(a, x));
        }
        let xgens: Vec<usize> = hgens.iter().map(|&a| g.conj(a, x)).collect();
        let join = g.close_over(h.members(), &hgens, &xgens);
        if !join.contains(x) {
            return false;
        }
    }
    true
}

pub fn is_abnormal(g: &FiniteGroup, h: &Subgroup) -> Result<bool> {
    g.check_parent(h)?;
    Ok(is_abnormal_in(g, &g.whole(), h))
}

/// Nilpotent self-normalizing subgroups, as node indices.
pub fn carter_indices(lat: &SubgroupLattice) -> Vec<usize> {
    let g = lat.group();
    (0..lat.len())
        .filter(|&i| {
            let s = lat.node(i);
            g.is_nilpotent_subgroup(s) && g.normalizer_in(&g.whole(), s) == *s
        })
        .collect()
}

pub fn carter_subgroups(lat: &SubgroupLattice) -> Vec<Subgroup> {
    carter_indices(lat)
        .into_iter()
        .map(|i| lat.node(i).clone())
        .collect()
}

/// `H < P_G(H)` for every proper subgroup `H`.
pub fn satisfies_permutizer_condition(lat: &SubgroupLattice) -> bool {
    let g = lat.group();
    (0..lat.top()).all(|i| {
        let h = lat.node(i);
        permutizer(g, h).expect("node of this lattice").order() > h.order()
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

    fn sub(l: &SubgroupLattice, gens: &[&str]) -> Subgroup {
        let d = l.group().degree();
        let perms: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(d, s).unwrap())
            .collect();
        l.group().subgroup_from_permutations(&perms).unwrap()
    }

    #[test]
    fn permutizer_trivial_cases() {
        let l = lattice(3, &["(1 2 3)", "(1 2)"]);
        let g = l.group();
        assert_eq!(permutizer(g, &g.whole()).unwrap(), g.whole());
        assert_eq!(permutizer(g, &g.trivial_subgroup()).unwrap(), g.whole());
        // every 3-cycle permutes with <(1 2)>, giving S3
        assert_eq!(permutizer(g, &sub(&l, &["(1 2)"])).unwrap(), g.whole());
    }

    #[test]
    fn permutizer_requires_containment() {
        let l = lattice(3, &["(1 2 3)", "(1 2)"]);
        let g = l.group();
        let a3 = sub(&l, &["(1 2 3)"]);
        let t = sub(&l, &["(1 2)"]);
        assert_eq!(permutizer_in(g, &a3, &t), Err(Error::NotContained));
    }

    #[test]
    fn prime_chains_in_a5() {
        let l = lattice(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let c3 = sub(&l, &["(1 2 3)"]);
        assert!(!is_p_subnormal(&l, &c3).unwrap());
        assert!(p_subnormal_chain(&l, &c3).unwrap().is_none());
        let v4 = sub(&l, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let chain = p_subnormal_chain(&l, &v4).unwrap().unwrap();
        assert_eq!(chain.indices, vec![3, 5]);
        assert_eq!(chain.terms.iter().map(|t| t.order()).collect::<Vec<_>>(), vec![4, 12, 60]);
        let top = p_subnormal_chain(&l, &l.group().whole()).unwrap().unwrap();
        assert!(top.indices.is_empty());
        assert_eq!(top.terms.len(), 1);
    }

    #[test]
    fn w_supersolubility() {
        assert!(is_w_supersoluble(&lattice(3, &["(1 2 3)", "(1 2)"])));
        assert!(!is_w_supersoluble(&lattice(4, &["(1 2)", "(1 2 3 4)"])));
        assert!(is_w_supersoluble(&lattice(1, &[])));
    }

    #[test]
    fn pronormal_and_abnormal_in_s3() {
        let l = lattice(3, &["(1 2 3)", "(1 2)"]);
        let g = l.group();
        let t = sub(&l, &["(1 2)"]);
        let a3 = sub(&l, &["(1 2 3)"]);
        assert!(is_pronormal(g, &t).unwrap());
        assert!(is_abnormal(g, &t).unwrap());
        assert!(is_pronormal(g, &a3).unwrap());
        assert!(!is_abnormal(g, &a3).unwrap());
        assert!(!is_abnormal(g, &g.trivial_subgroup()).unwrap());
    }

    #[test]
    fn non_pronormal_subgroup() {
        // <(1 2)(3 4)> in D8 = <(1 2 3 4), (1 3)> is subnormal but not normal
        let l = lattice(4, &["(1 2 3 4)", "(1 3)"]);
        let g = l.group();
        let h = sub(&l, &["(1 3)"]);
        assert!(!is_pronormal(g, &h).unwrap());
    }

    #[test]
    fn carter_subgroups_of_small_groups() {
        let s3 = lattice(3, &["(1 2 3)", "(1 2)"]);
        let orders: Vec<usize> = carter_subgroups(&s3).iter().map(|c| c.order()).collect();
        assert_eq!(orders, vec![2, 2, 2]);
        let s4 = lattice(4, &["(1 2)", "(1 2 3 4)"]);
        let orders: Vec<usize> = carter_subgroups(&s4).iter().map(|c| c.order()).collect();
        assert_eq!(orders, vec![8, 8, 8]);
        let d8 = lattice(4, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(carter_indices(&d8), vec![d8.top()]);
    }

    #[test]
    fn strongly_permuteral_whole_group() {
        let l = lattice(4, &["(1 2)", "(1 2 3 4)"]);
        assert!(is_strongly_permuteral(&l, &l.group().whole()).unwrap());
    }
}
