//! A corpus member prepared for checking: its lattice, classification and
//! lazily filled caches shared by every suite run against it.

use std::sync::{Arc, OnceLock};

use permlab::classify::Classification;
use permlab::permutizer;
use permlab::{quotient_group, FiniteGroup, Quotient, Result, Subgroup, SubgroupLattice};

/// `G/N` with its own lattice.
pub struct QuotientData {
    pub quotient: Quotient,
    pub lat: SubgroupLattice,
}

impl QuotientData {
    /// Node of `HN/N` in the quotient lattice.
    pub fn image_node(&self, h: &Subgroup) -> usize {
        self.lat
            .require(&self.quotient.image(h))
            .expect("image of a subgroup is a node")
    }

    pub fn group(&self) -> &FiniteGroup {
        self.lat.group()
    }
}

pub struct Member {
    pub name: String,
    pub lat: SubgroupLattice,
    pub class: Classification,
    permutizers: Vec<OnceLock<Subgroup>>,
    strong: Vec<OnceLock<Option<usize>>>,
    pronormal: Vec<OnceLock<bool>>,
    abnormal: Vec<OnceLock<bool>>,
    normals: Vec<usize>,
    quotients: Vec<OnceLock<QuotientData>>,
}

impl Member {
    pub fn new(name: String, group: FiniteGroup) -> Result<Member> {
        let lat = SubgroupLattice::build(Arc::new(group))?;
        let class = Classification::of(&lat);
        let n = lat.len();
        let normals = lat.normal_indices();
        let quotients = (0..normals.len()).map(|_| OnceLock::new()).collect();
        Ok(Member {
            name,
            class,
            permutizers: (0..n).map(|_| OnceLock::new()).collect(),
            strong: (0..n).map(|_| OnceLock::new()).collect(),
            pronormal: (0..n).map(|_| OnceLock::new()).collect(),
            abnormal: (0..n).map(|_| OnceLock::new()).collect(),
            normals,
            quotients,
            lat,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.lat.group()
    }

    pub fn order(&self) -> usize {
        self.group().order()
    }

    pub fn top(&self) -> usize {
        self.lat.top()
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        self.lat.node(i)
    }

    pub fn index(&self, h: &Subgroup) -> usize {
        self.lat.require(h).expect("subgroup of this member's group")
    }

    /// `P_G(H)` for node `i`.
    pub fn permutizer(&self, i: usize) -> &Subgroup {
        self.permutizers[i].get_or_init(|| {
            permutizer::permutizer(self.group(), self.node(i)).expect("node of this lattice")
        })
    }

    pub fn is_permuteral(&self, i: usize) -> bool {
        self.permutizer(i).order() == self.order()
    }

    /// First intermediate node `U` with `P_U(H) ≠ U`, if any.
    pub fn strong_failure(&self, i: usize) -> Option<usize> {
        *self.strong[i].get_or_init(|| {
            permutizer::strong_failure_in(&self.lat, i, self.top())
                .map(|f| self.index(&f.intermediate))
        })
    }

    pub fn is_strongly_permuteral(&self, i: usize) -> bool {
        self.strong_failure(i).is_none()
    }

    pub fn is_pronormal(&self, i: usize) -> bool {
        *self.pronormal[i].get_or_init(|| {
            let g = self.group();
            permutizer::is_pronormal_in(g, &g.whole(), self.node(i))
        })
    }

    pub fn is_abnormal(&self, i: usize) -> bool {
        *self.abnormal[i].get_or_init(|| {
            let g = self.group();
            permutizer::is_abnormal_in(g, &g.whole(), self.node(i))
        })
    }

    /// Node of `N_G(H)`.
    pub fn normalizer(&self, i: usize) -> usize {
        let g = self.group();
        self.index(&g.normalizer_in(&g.whole(), self.node(i)))
    }

    pub fn is_p_subnormal(&self, i: usize) -> bool {
        self.lat.prime_chain_exists(i, self.top())
    }

    pub fn normal_nodes(&self) -> &[usize] {
        &self.normals
    }

    /// `G/N` for the normal node `n`.
    pub fn quotient(&self, n: usize) -> &QuotientData {
        let pos = self
            .normals
            .binary_search(&n)
            .expect("quotient by a normal subgroup");
        self.quotients[pos].get_or_init(|| {
            let quotient = quotient_group(self.group(), self.node(n)).expect("normal subgroup");
            let lat = SubgroupLattice::build(Arc::clone(quotient.group_arc()))
                .expect("quotient lattice is no larger than the parent's");
            QuotientData { quotient, lat }
        })
    }

    /// Representatives (canonical minimum) of each conjugacy class of subgroups.
    pub fn class_representatives(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = self
            .lat
            .classes()
            .iter()
            .map(|c| *c.iter().min().expect("nonempty class"))
            .collect();
        reps.sort_unstable();
        reps
    }

    pub fn sylow_nodes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for p in self.group().primes() {
            out.extend(self.lat.sylow_indices(p).expect("p divides |G|"));
        }
        out.sort_unstable();
        out
    }

    pub fn hall_nodes(&self) -> Vec<usize> {
        self.lat.all_hall_indices()
    }

    /// Short human-readable description of node `i`.
    pub fn describe(&self, i: usize) -> String {
        describe_subgroup(&self.lat, i)
    }
}

/// `order n, gens (..), (..)` for node `i`.
pub fn describe_subgroup(lat: &SubgroupLattice, i: usize) -> String {
    let g = lat.group();
    let gens: Vec<String> = lat
        .node_generators(i)
        .iter()
        .map(|&x| g.element(x).to_string())
        .collect();
    if gens.is_empty() {
        format!("order {}, trivial", lat.node(i).order())
    } else {
        format!("order {}, gens {}", lat.node(i).order(), gens.join(", "))
    }
}
