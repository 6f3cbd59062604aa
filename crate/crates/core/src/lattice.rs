//! Exhaustive subgroup lattices.
//!
//! Construction seeds the node set with every cyclic subgroup and then joins
//! each node with cyclic subgroups of prime-power order until nothing new
//! appears. Every subgroup is generated by its prime-power-order elements, so
//! the fixpoint is the full lattice.

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith;
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// Default cap on the number of subgroups.
pub const DEFAULT_SUBGROUP_CAP: usize = 100_000;

pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    nodes: Vec<Subgroup>,
    gens: Vec<Vec<usize>>,
    lookup: HashMap<ElementSet, usize>,
    /// Strict overgroups of each node, as a bitset over node indices.
    supers: Vec<ElementSet>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    /// Nodes reachable upward through prime-index covers, self included.
    prime_reach: Vec<ElementSet>,
}

impl SubgroupLattice {
    pub fn build(group: Arc<FiniteGroup>) -> Result<Self> {
        Self::build_with_cap(group, DEFAULT_SUBGROUP_CAP)
    }

    pub fn build_with_cap(group: Arc<FiniteGroup>, cap: usize) -> Result<Self> {
        let g = &*group;
        let n = g.order();
        let mut lookup: HashMap<ElementSet, usize> = HashMap::new();
        let mut sets: Vec<ElementSet> = Vec::new();
        let mut gens: Vec<Vec<usize>> = Vec::new();

        let mut push = |set: ElementSet, gs: Vec<usize>, sets: &mut Vec<ElementSet>, gens: &mut Vec<Vec<usize>>| -> Result<Option<usize>> {
            if lookup.contains_key(&set) {
                return Ok(None);
            }
            if sets.len() >= cap {
                return Err(Error::SubgroupCapExceeded { cap });
            }
            let id = sets.len();
            lookup.insert(set.clone(), id);
            sets.push(set);
            gens.push(gs);
            Ok(Some(id))
        };

        push(ElementSet::from_indices(n, [0]), Vec::new(), &mut sets, &mut gens)?;
        let mut prime_power_cyclics: Vec<usize> = Vec::new();
        for x in 1..n {
            let set = g.close(&[x]);
            let is_pp = arith::factorize(g.element_order(x)).len() == 1;
            if let Some(id) = push(set, vec![x], &mut sets, &mut gens)? {
                if is_pp {
                    prime_power_cyclics.push(id);
                }
            }
        }
        let cyclic_gens: Vec<usize> = prime_power_cyclics.iter().map(|&c| gens[c][0]).collect();

        let mut head = 0;
        while head < sets.len() {
            let base = sets[head].clone();
            let base_gens = gens[head].clone();
            head += 1;
            for &c in &cyclic_gens {
                if base.contains(c) {
                    continue;
                }
                let joined = g.close_over(&base, &base_gens, &[c]);
                let mut gs = base_gens.clone();
                gs.push(c);
                push(joined, gs, &mut sets, &mut gens)?;
            }
        }

        // canonical order
        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by(|&a, &b| {
            sets[a]
                .count()
                .cmp(&sets[b].count())
                .then_with(|| sets[a].cmp(&sets[b]))
        });
        let nodes: Vec<Subgroup> = order.iter().map(|&i| g.make(sets[i].clone())).collect();
        let gens: Vec<Vec<usize>> = order.iter().map(|&i| gens[i].clone()).collect();
        let lookup: HashMap<ElementSet, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();

        let k = nodes.len();
        let mut supers = vec![ElementSet::empty(k); k];
        for i in 0..k {
            let oi = nodes[i].order();
            for j in i + 1..k {
                let oj = nodes[j].order();
                if oj > oi && oj.is_multiple_of(oi) && nodes[i].members().is_subset(nodes[j].members()) {
                    supers[i].insert(j);
                }
            }
        }
        let mut upper = vec![Vec::new(); k];
        let mut lower = vec![Vec::new(); k];
        for i in 0..k {
            let mut covers = supers[i].clone();
            for l in supers[i].iter() {
                covers = covers.difference(&supers[l]);
            }
            for j in covers.iter() {
                upper[i].push(j);
                lower[j].push(i);
            }
        }

        let mut class_of = vec![usize::MAX; k];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..k {
            if class_of[i] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            class_of[i] = cid;
            let mut members = vec![i];
            let mut head = 0;
            while head < members.len() {
                let cur = members[head];
                head += 1;
                for &x in g.generator_indices() {
                    let c = g.conjugate_set(nodes[cur].members(), x);
                    let j = lookup[&c];
                    if class_of[j] == usize::MAX {
                        class_of[j] = cid;
                        members.push(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }

        let mut prime_reach = vec![ElementSet::empty(k); k];
        for i in (0..k).rev() {
            let mut r = ElementSet::from_indices(k, [i]);
            for &j in &upper[i] {
                if arith::is_prime(nodes[i].index_in(&nodes[j]) as u64) {
                    r.union_with(&prime_reach[j]);
                }
            }
            prime_reach[i] = r;
        }

        Ok(SubgroupLattice {
            group,
            nodes,
            gens,
            lookup,
            supers,
            upper,
            lower,
            class_of,
            classes,
            prime_reach,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        &self.nodes[i]
    }

    /// Generators recorded for node `i` during construction.
    pub fn node_generators(&self, i: usize) -> &[usize] {
        &self.gens[i]
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        if h.parent_id() != self.group.id() {
            return None;
        }
        self.lookup.get(h.members()).copied()
    }

    pub fn require(&self, h: &Subgroup) -> Result<usize> {
        self.group.check_parent(h)?;
        self.index_of(h).ok_or(Error::NotInLattice)
    }

    /// Node index for a member set known to be a subgroup.
    pub fn index_of_set(&self, s: &ElementSet) -> Option<usize> {
        self.lookup.get(s).copied()
    }

    /// `i ≤ j` as subgroups.
    pub fn contains(&self, j: usize, i: usize) -> bool {
        i == j || self.supers[i].contains(j)
    }

    /// Strict overgroups of node `i`, ascending.
    pub fn strict_overgroups(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.supers[i].iter()
    }

    /// Nodes `U` with `H ≤ U ≤ G`, both endpoints included, ascending.
    pub fn intermediate(&self, i: usize) -> Vec<usize> {
        std::iter::once(i).chain(self.supers[i].iter()).collect()
    }

    pub fn intermediate_subgroups(&self, h: &Subgroup) -> Result<Vec<Subgroup>> {
        let i = self.require(h)?;
        Ok(self
            .intermediate(i)
            .into_iter()
            .map(|j| self.nodes[j].clone())
            .collect())
    }

    /// Nodes contained in node `j` (including `j`), ascending.
    pub fn subgroups_of(&self, j: usize) -> Vec<usize> {
        (0..=j).filter(|&i| self.contains(j, i)).collect()
    }

    /// Nodes `V` with `i ≤ V ≤ j`.
    pub fn interval(&self, i: usize, j: usize) -> Vec<usize> {
        self.intermediate(i)
            .into_iter()
            .filter(|&v| self.contains(j, v))
            .collect()
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    /// Maximal subgroups of node `i`.
    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn maximal_subgroups(&self) -> Vec<Subgroup> {
        self.lower[self.top()]
            .iter()
            .map(|&i| self.nodes[i].clone())
            .collect()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Conjugacy classes of nodes, each ascending, ordered by first member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.classes[self.class_of[i]].len() == 1
    }

    pub fn normal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_normal(i)).collect()
    }

    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        self.normal_indices()
            .into_iter()
            .map(|i| self.nodes[i].clone())
            .collect()
    }

    pub fn minimal_normal_indices(&self) -> Vec<usize> {
        let normals = self.normal_indices();
        normals
            .iter()
            .copied()
            .filter(|&i| {
                i != 0
                    && !normals
                        .iter()
                        .any(|&m| m != 0 && m != i && self.contains(i, m))
            })
            .collect()
    }

    pub fn minimal_normal_subgroups(&self) -> Vec<Subgroup> {
        self.minimal_normal_indices()
            .into_iter()
            .map(|i| self.nodes[i].clone())
            .collect()
    }

    pub fn sylow_indices(&self, p: u64) -> Result<Vec<usize>> {
        let n = self.group.order() as u64;
        if !arith::is_prime(p) || !n.is_multiple_of(p) {
            return Err(Error::PrimeNotDividing { p });
        }
        let target = arith::pi_part(n, &[p]) as usize;
        Ok((0..self.len())
            .filter(|&i| self.nodes[i].order() == target)
            .collect())
    }

    /// All Sylow `p`-subgroups; `p` must divide the group order.
    pub fn sylow_subgroups(&self, p: u64) -> Result<Vec<Subgroup>> {
        Ok(self
            .sylow_indices(p)?
            .into_iter()
            .map(|i| self.nodes[i].clone())
            .collect())
    }

    pub fn hall_indices(&self, primes: &[u64]) -> Vec<usize> {
        let target = arith::pi_part(self.group.order() as u64, primes) as usize;
        (0..self.len())
            .filter(|&i| self.nodes[i].order() == target)
            .collect()
    }

    /// Subgroups whose order is the full π-part of `|G|`; may be empty.
    pub fn hall_subgroups(&self, primes: &[u64]) -> Vec<Subgroup> {
        self.hall_indices(primes)
            .into_iter()
            .map(|i| self.nodes[i].clone())
            .collect()
    }

    /// Every node whose order is coprime to its index.
    pub fn all_hall_indices(&self) -> Vec<usize> {
        let n = self.group.order() as u64;
        (0..self.len())
            .filter(|&i| {
                let o = self.nodes[i].order() as u64;
                arith::gcd(o, n / o) == 1
            })
            .collect()
    }

    /// Nodes reachable from `i` by a chain of prime-index steps (including `i`).
    pub fn prime_reach(&self, i: usize) -> &ElementSet {
        &self.prime_reach[i]
    }

    /// `H ℙ-sn K` for nodes `h ≤ k`: a chain from `h` to `k` with prime indices.
    pub fn prime_chain_exists(&self, h: usize, k: usize) -> bool {
        self.prime_reach[h].contains(k)
    }
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group_order", &self.group.order())
            .field("subgroups", &self.nodes.len())
            .field("classes", &self.classes.len())
            .finish()
    }
}
