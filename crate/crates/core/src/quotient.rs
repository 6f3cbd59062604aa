//! Quotients `G/N` realized as permutation groups on the right cosets of `N`.

use std::sync::Arc;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::perm::Permutation;

/// A quotient group together with the natural epimorphism from its parent.
#[derive(Debug)]
pub struct Quotient {
    group: Arc<FiniteGroup>,
    kernel: Subgroup,
    map: Vec<usize>,
}

impl Quotient {
    /// The quotient as a standalone permutation group of degree `|G:N|`.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Shared handle to the quotient, e.g. for building its subgroup lattice.
    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Image in `G/N` of the parent's element `g`.
    pub fn map_element(&self, g: usize) -> usize {
        self.map[g]
    }

    /// `HN/N`.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let set = ElementSet::from_indices(self.group.order(), h.members().iter().map(|x| self.map[x]));
        self.group
            .subgroup_from_set(set)
            .expect("homomorphic image of a subgroup is a subgroup")
    }

    /// Full preimage in `G` of a subgroup of `G/N`.
    pub fn preimage(&self, q: &Subgroup, parent: &FiniteGroup) -> Subgroup {
        let set = ElementSet::from_indices(
            self.map.len(),
            (0..self.map.len()).filter(|&g| q.contains(self.map[g])),
        );
        parent
            .subgroup_from_set(set)
            .expect("preimage of a subgroup is a subgroup")
    }
}

/// `G/N` via the action of `G` on right cosets `Nx`.
pub fn quotient_group(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient> {
    g.check_parent(n)?;
    if !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    let kernel: Vec<usize> = n.members().iter().collect();
    for x in 0..order {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &k in &kernel {
            coset_of[g.mul(k, x)] = id;
        }
    }
    let degree = reps.len();
    let act = |e: usize| -> Permutation {
        let images: Vec<usize> = reps.iter().map(|&r| coset_of[g.mul(r, e)] + 1).collect();
        Permutation::from_images(&images).expect("coset action is a permutation")
    };
    let gens: Vec<Permutation> = g.generator_indices().iter().map(|&e| act(e)).collect();
    let qgroup = FiniteGroup::closure(degree, &gens, usize::MAX)?;
    let map = (0..order)
        .map(|e| {
            qgroup
                .index_of(&act(e))
                .expect("coset action of an element lies in the quotient")
        })
        .collect();
    Ok(Quotient {
        group: Arc::new(qgroup),
        kernel: n.clone(),
        map,
    })
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

    fn assert_epimorphism(g: &FiniteGroup, q: &Quotient, n: &Subgroup) {
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(
                    q.map_element(g.mul(a, b)),
                    q.group().mul(q.map_element(a), q.map_element(b))
                );
            }
        }
        let kernel: Vec<usize> = (0..g.order()).filter(|&a| q.map_element(a) == 0).collect();
        assert_eq!(kernel, n.members().to_vec());
    }

    #[test]
    fn quotient_by_everything_is_trivial() {
        let g = s3();
        let q = quotient_group(&g, &g.whole()).unwrap();
        assert_eq!(q.group().order(), 1);
        assert_epimorphism(&g, &q, &g.whole());
    }

    #[test]
    fn s3_mod_a3_has_order_two() {
        let g = s3();
        let a3 = g.subgroup_from_permutations(&[p(3, "(1 2 3)")]).unwrap();
        let q = quotient_group(&g, &a3).unwrap();
        assert_eq!(q.group().order(), 2);
        assert_eq!(q.group().degree(), 2);
        assert_epimorphism(&g, &q, &a3);
    }

    #[test]
    fn quotient_by_trivial_is_a_copy() {
        let g = s3();
        let one = g.trivial_subgroup();
        let q = quotient_group(&g, &one).unwrap();
        assert_eq!(q.group().order(), 6);
        assert_epimorphism(&g, &q, &one);
        let image = q.image(&g.whole());
        assert_eq!(image.order(), 6);
        assert_eq!(q.preimage(&q.group().trivial_subgroup(), &g), one);
    }

    #[test]
    fn non_normal_kernel_is_rejected() {
        let g = s3();
        let t = g.subgroup_from_permutations(&[p(3, "(1 2)")]).unwrap();
        assert_eq!(quotient_group(&g, &t).unwrap_err(), Error::NotNormal);
    }
}
