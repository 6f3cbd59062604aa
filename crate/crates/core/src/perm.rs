//! Permutations of `{1..degree}` stored as image arrays.
//!
//! Composition is left-to-right: `a.compose(&b)` applies `a` first, then `b`,
//! so the image of point `x` is `b(a(x))`. Conjugation follows the same
//! convention, `h^g = g⁻¹ h g`, which sends the cycle `(x y ..)` of `h` to
//! `(g(x) g(y) ..)`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{1..degree}`. Internally points are 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds from 1-based images: `images[i-1]` is the image of point `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree {
                return Err(Error::PointOutOfRange { point: img, degree });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::NotABijection { degree });
            }
            out.push((img - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// Builds from 0-based images without validation beyond a debug check.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles of 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut touched[p - 1], true) {
                    return Err(Error::BadCycle(format!("point {p} repeated")));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::BadCycle(format!("expected `(` in `{text}`")));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::BadCycle(format!("unclosed cycle in `{text}`")));
            };
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::BadCycle(format!("bad point `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of 1-based point `p`.
    pub fn image(&self, p: usize) -> usize {
        self.images[p - 1] as usize + 1
    }

    /// 1-based image array.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition for callers that already know degrees agree.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        Ok(g.inverse().compose(self)?.then(g))
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| crate::arith::lcm(acc, c.len() as u64))
    }

    /// Restricts to the first `degree` points; `None` if those points are not invariant.
    pub fn restrict(&self, degree: usize) -> Option<Permutation> {
        let images: Vec<u32> = self.images.iter().take(degree).copied().collect();
        if images.len() == degree && images.iter().all(|&v| (v as usize) < degree) {
            Some(Permutation { images })
        } else {
            None
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(deg: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(deg, s).unwrap()
    }

    #[test]
    fn transposition_is_an_involution() {
        let t = p(3, "(1 2)");
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn identity_is_neutral() {
        let x = p(5, "(1 3 5)(2 4)");
        let id = Permutation::identity(5);
        assert_eq!(id.compose(&x).unwrap(), x);
        assert_eq!(x.compose(&id).unwrap(), x);
    }

    #[test]
    fn three_cycle_squared() {
        // images of (1 2 3) are [2,3,1]; applying twice gives [3,1,2] = (1 3 2)
        let c = p(3, "(1 2 3)");
        assert_eq!(c.compose(&c).unwrap(), p(3, "(1 3 2)"));
        assert_eq!(c.compose(&c).unwrap().images(), vec![3, 1, 2]);
    }

    #[test]
    fn composition_is_left_to_right() {
        // (1 2) then (1 3): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
        let a = p(3, "(1 2)");
        let b = p(3, "(1 3)");
        assert_eq!(a.compose(&b).unwrap().images(), vec![2, 3, 1]);
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let h = p(3, "(1 2)");
        let g = p(3, "(1 2 3)");
        assert_eq!(h.conjugate_by(&g).unwrap(), p(3, "(2 3)"));
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let a = p(3, "(1 2)");
        let b = p(4, "(1 2)");
        assert_eq!(
            a.compose(&b),
            Err(Error::DegreeMismatch {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse_cycles(3, "(1 4)"),
            Err(Error::PointOutOfRange { point: 4, degree: 3 })
        ));
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "1 2").is_err());
        assert!(Permutation::parse_cycles(3, "()").unwrap().is_identity());
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
    }

    #[test]
    fn display_round_trip() {
        let x = p(8, "(1 8)(2 7)(3 4)(5 6)");
        assert_eq!(x.to_string(), "(1 8)(2 7)(3 4)(5 6)");
        assert_eq!(x.order(), 2);
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    proptest! {
        #[test]
        fn composition_is_associative(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_and_cycle_text_round_trip(a in arb_perm(9)) {
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
            prop_assert_eq!(Permutation::parse_cycles(9, &a.to_string()).unwrap(), a.clone());
            prop_assert!(a.pow(a.order()).is_identity());
        }
    }
}
