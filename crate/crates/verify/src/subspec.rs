//! Subgroup specs on the command line: `sylow:<p>`, `hall:<p1,p2,...>`,
//! `gens:(cycles);(cycles)`, `fitting`, `carter:<index>`.
//!
//! Sylow, Hall and Carter specs pick from the lattice in canonical node
//! order, so the same spec always names the same subgroup.

use permlab::classify;
use permlab::permutizer::carter_indices;
use permlab::{Permutation, SubgroupLattice};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubSpec {
    Sylow(u64),
    Hall(Vec<u64>),
    Gens(Vec<String>),
    Fitting,
    Carter(usize),
}

impl SubSpec {
    pub fn parse(text: &str) -> Result<SubSpec, CliError> {
        let bad = |reason: &str| CliError::SubgroupSpec {
            spec: text.to_string(),
            reason: reason.to_string(),
        };
        let spec = text.trim();
        if spec == "fitting" {
            return Ok(SubSpec::Fitting);
        }
        let (kind, arg) = spec
            .split_once(':')
            .ok_or_else(|| bad("expected sylow:, hall:, gens:, carter: or fitting"))?;
        match kind {
            "sylow" => arg.trim().parse().map(SubSpec::Sylow).map_err(|_| bad("expected a prime")),
            "hall" => {
                let primes: Result<Vec<u64>, _> = arg.split(',').map(|p| p.trim().parse()).collect();
                match primes {
                    Ok(p) if !p.is_empty() => Ok(SubSpec::Hall(p)),
                    _ => Err(bad("expected a comma-separated list of primes")),
                }
            }
            "gens" => Ok(SubSpec::Gens(
                arg.split(';').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
            )),
            "carter" => arg.trim().parse().map(SubSpec::Carter).map_err(|_| bad("expected an index")),
            _ => Err(bad("unknown kind")),
        }
    }

    /// Node of the lattice named by this spec.
    pub fn resolve(&self, lat: &SubgroupLattice) -> Result<usize, CliError> {
        let g = lat.group();
        let missing = |reason: String| CliError::SubgroupSpec {
            spec: self.to_string(),
            reason,
        };
        match self {
            SubSpec::Sylow(p) => Ok(lat.sylow_indices(*p)?[0]),
            SubSpec::Hall(primes) => {
                for &p in primes {
                    if !permlab::arith::is_prime(p) || !(g.order() as u64).is_multiple_of(p) {
                        return Err(permlab::Error::PrimeNotDividing { p }.into());
                    }
                }
                lat.hall_indices(primes)
                    .first()
                    .copied()
                    .ok_or_else(|| missing(format!("no Hall {primes:?}-subgroup")))
            }
            SubSpec::Gens(cycles) => {
                let perms = cycles
                    .iter()
                    .map(|c| Permutation::parse_cycles(g.degree(), c))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(lat.require(&g.subgroup_from_permutations(&perms)?)?)
            }
            SubSpec::Fitting => Ok(lat.require(&classify::fitting(lat))?),
            SubSpec::Carter(i) => {
                let carters = carter_indices(lat);
                carters
                    .get(*i)
                    .copied()
                    .ok_or_else(|| missing(format!("only {} Carter subgroups", carters.len())))
            }
        }
    }
}

impl std::fmt::Display for SubSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SubSpec::Sylow(p) => write!(f, "sylow:{p}"),
            SubSpec::Hall(ps) => {
                let ps: Vec<String> = ps.iter().map(u64::to_string).collect();
                write!(f, "hall:{}", ps.join(","))
            }
            SubSpec::Gens(cs) => write!(f, "gens:{}", cs.join(";")),
            SubSpec::Fitting => f.write_str("fitting"),
            SubSpec::Carter(i) => write!(f, "carter:{i}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use permlab::catalog::{make_psl27, make_symmetric};
    use std::sync::Arc;

    fn lattice(g: permlab::FiniteGroup) -> SubgroupLattice {
        SubgroupLattice::build(Arc::new(g)).unwrap()
    }

    #[test]
    fn parses_every_kind() {
        assert_eq!(SubSpec::parse("sylow:3").unwrap(), SubSpec::Sylow(3));
        assert_eq!(SubSpec::parse("hall:2,3").unwrap(), SubSpec::Hall(vec![2, 3]));
        assert_eq!(
            SubSpec::parse("gens:(1 2 3);(1 2)").unwrap(),
            SubSpec::Gens(vec!["(1 2 3)".into(), "(1 2)".into()])
        );
        assert_eq!(SubSpec::parse("fitting").unwrap(), SubSpec::Fitting);
        assert_eq!(SubSpec::parse("carter:0").unwrap(), SubSpec::Carter(0));
        for bad in ["sylow:x", "hall:", "nonsense", "carter:-1", "foo:1"] {
            assert!(SubSpec::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for text in ["sylow:7", "hall:2,3", "gens:(1 2);(3 4)", "fitting", "carter:1"] {
            assert_eq!(SubSpec::parse(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn resolves_in_s4() {
        let lat = lattice(make_symmetric(4, 1000).unwrap());
        assert_eq!(lat.node(SubSpec::Sylow(3).resolve(&lat).unwrap()).order(), 3);
        assert_eq!(lat.node(SubSpec::Hall(vec![2]).resolve(&lat).unwrap()).order(), 8);
        assert_eq!(lat.node(SubSpec::Fitting.resolve(&lat).unwrap()).order(), 4);
        let d8 = SubSpec::parse("gens:(1 2 3 4);(1 3)").unwrap();
        assert_eq!(lat.node(d8.resolve(&lat).unwrap()).order(), 8);
        // the Carter subgroups of S4 are its Sylow 2-subgroups
        assert_eq!(lat.node(SubSpec::Carter(0).resolve(&lat).unwrap()).order(), 8);
        assert!(SubSpec::Carter(3).resolve(&lat).is_err());
        assert!(SubSpec::Sylow(5).resolve(&lat).is_err());
        assert!(SubSpec::Hall(vec![5]).resolve(&lat).is_err());
    }

    #[test]
    fn missing_hall_subgroup_is_reported() {
        let lat = lattice(make_psl27());
        // PSL(2,7) has no subgroup of order 56
        assert!(SubSpec::Hall(vec![2, 7]).resolve(&lat).is_err());
        assert_eq!(lat.node(SubSpec::Hall(vec![7, 3]).resolve(&lat).unwrap()).order(), 21);
    }
}
