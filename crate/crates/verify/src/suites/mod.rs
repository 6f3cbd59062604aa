//! Property suites. Each suite checks one result on a single prepared corpus
//! member and records every evaluated assertion; the runner aggregates
//! members into a [`SuiteReport`](crate::report::SuiteReport).
//!
//! Quantifier sweeps are exhaustive on groups of order at most
//! [`Options::exhaustive_limit`]. Above that, sweeps over large families of
//! tuples are sampled with a ChaCha8 generator seeded from
//! [`Options::seed`] mixed with the suite id and member name, so a run is
//! reproducible and independent of scheduling.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::member::Member;

mod characterizations;
mod consistency;
mod permutizers;
mod preliminaries;

/// Base seed for sampled sweeps (the ASCII bytes of "permlab!").
pub const DEFAULT_SEED: u64 = 0x7065_726d_6c61_6221;
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 100;
pub const DEFAULT_SAMPLE_SIZE: usize = 200;
/// Failures recorded per member before the rest are summarized.
const MAX_FAILURES_PER_MEMBER: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub exhaustive_limit: usize,
    pub sample_size: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
            sample_size: DEFAULT_SAMPLE_SIZE,
            seed: DEFAULT_SEED,
        }
    }
}

/// Result of one suite on one member.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub checks: u64,
    pub skipped: bool,
    pub failures: Vec<String>,
}

/// Per-(suite, member) state handed to a suite body.
pub struct Ctx<'a> {
    pub m: &'a Member,
    opts: &'a Options,
    rng: ChaCha8Rng,
    out: Outcome,
    suppressed: usize,
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

impl<'a> Ctx<'a> {
    pub fn new(suite: &str, m: &'a Member, opts: &'a Options) -> Self {
        let key = format!("{suite}/{}", m.name);
        Ctx {
            m,
            opts,
            rng: ChaCha8Rng::seed_from_u64(opts.seed ^ fnv1a(key.as_bytes())),
            out: Outcome::default(),
            suppressed: 0,
        }
    }

    /// Records one assertion; the witness is only rendered on failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.out.checks += 1;
        if !ok {
            if self.out.failures.len() < MAX_FAILURES_PER_MEMBER {
                self.out.failures.push(witness());
            } else {
                self.suppressed += 1;
            }
        }
    }

    /// Marks the member as not satisfying the suite's hypothesis.
    pub fn skip(&mut self) {
        self.out.skipped = true;
    }

    pub fn exhaustive(&self) -> bool {
        self.m.order() <= self.opts.exhaustive_limit
    }

    /// All items on exhaustive groups, otherwise a seeded sample (kept in
    /// original order).
    pub fn pick<T>(&mut self, items: Vec<T>) -> Vec<T> {
        if self.exhaustive() || items.len() <= self.opts.sample_size {
            return items;
        }
        let mut chosen = index::sample(&mut self.rng, items.len(), self.opts.sample_size).into_vec();
        chosen.sort_unstable();
        let mut keep = vec![false; items.len()];
        for i in chosen {
            keep[i] = true;
        }
        items
            .into_iter()
            .zip(keep)
            .filter_map(|(x, k)| k.then_some(x))
            .collect()
    }

    /// Every subgroup on exhaustive groups, otherwise one per conjugacy class.
    /// Only for properties invariant under conjugation.
    pub fn subgroup_sweep(&self) -> Vec<usize> {
        if self.exhaustive() {
            (0..self.m.lat.len()).collect()
        } else {
            self.m.class_representatives()
        }
    }

    pub fn finish(mut self) -> Outcome {
        // evaluating the hypothesis on a member is itself a check
        self.out.checks = self.out.checks.max(1);
        if self.suppressed > 0 {
            self.out
                .failures
                .push(format!("... and {} further failures", self.suppressed));
        }
        self.out
    }
}

pub struct Suite {
    pub id: &'static str,
    pub title: &'static str,
    pub run: fn(&mut Ctx),
}

impl std::fmt::Debug for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Suite({})", self.id)
    }
}

impl Suite {
    pub fn run_on(&self, m: &Member, opts: &Options) -> Outcome {
        let mut cx = Ctx::new(self.id, m, opts);
        (self.run)(&mut cx);
        cx.finish()
    }
}

pub static SUITES: &[Suite] = &[
    Suite { id: "L1.1", title: "chief factors: F_p(G) centralizes, no normal p-subgroup in G/C", run: preliminaries::l1_1 },
    Suite { id: "L1.2", title: "residuals of quotients are images of residuals", run: preliminaries::l1_2 },
    Suite { id: "T1.3", title: "soluble G/Phi(G): Fitting = its centralizer = socle", run: preliminaries::t1_3 },
    Suite { id: "L1.5", title: "calculus of P-subnormal subgroups", run: preliminaries::l1_5 },
    Suite { id: "P1.6", title: "w-supersoluble groups are Ore dispersive", run: preliminaries::p1_6 },
    Suite { id: "T1.7", title: "w-supersolubility: local definition and formation properties", run: preliminaries::t1_7 },
    Suite { id: "T1.8", title: "biprimary subgroups of w-supersoluble groups are supersoluble", run: preliminaries::t1_8 },
    Suite { id: "T1.9", title: "chief p-factor has order p iff Aut_G is abelian of exponent dividing p-1", run: preliminaries::t1_9 },
    Suite { id: "L1.10", title: "normalizers of pronormal subgroups are abnormal", run: preliminaries::l1_10 },
    Suite { id: "L1.11", title: "characterizations of abnormal subgroups", run: preliminaries::l1_11 },
    Suite { id: "L1.12", title: "pronormality in overgroups and quotients", run: preliminaries::l1_12 },
    Suite { id: "L1.13", title: "nilpotent factorizations with a self-centralizing minimal normal subgroup", run: preliminaries::l1_13 },
    Suite { id: "L2.1", title: "basic properties of permutizers", run: permutizers::l2_1 },
    Suite { id: "L2.2", title: "permuterality under quotients and products with normal subgroups", run: permutizers::l2_2 },
    Suite { id: "L2.3", title: "G = HQ with H Sylow for the largest prime and Q cyclic is p-closed", run: permutizers::l2_3 },
    Suite { id: "L2.4", title: "permuteral Sylow subgroup for the largest prime is normal", run: permutizers::l2_4 },
    Suite { id: "L2.5", title: "all Sylow subgroups permuteral implies Ore dispersive", run: permutizers::l2_5 },
    Suite { id: "L2.6", title: "supersoluble: pronormal, Sylow, Carter and Hall subgroups are strongly permuteral", run: permutizers::l2_6 },
    Suite { id: "L2.8", title: "soluble: P-subnormal Hall subgroups are strongly permuteral", run: permutizers::l2_8 },
    Suite { id: "T3.1", title: "w-supersoluble iff every Sylow subgroup is strongly permuteral", run: characterizations::t3_1 },
    Suite { id: "T3.2", title: "metanilpotent: supersoluble iff Sylows strongly permuteral iff Sylows permuteral", run: characterizations::t3_2 },
    Suite { id: "T3.3", title: "supersoluble iff pronormal or Hall subgroups are (strongly) permuteral", run: characterizations::t3_3 },
    Suite { id: "C3.3.1", title: "all Hall subgroups P-subnormal implies supersoluble", run: characterizations::c3_3_1 },
    Suite { id: "T3.4", title: "supersoluble iff product of two (strongly) permuteral nilpotent subgroups", run: characterizations::t3_4 },
    Suite { id: "C3.4.1", title: "product of two Sylow subgroups: supersoluble iff both permuteral", run: characterizations::c3_4_1 },
    Suite { id: "C3.4.2", title: "supersoluble iff G = F(G)H for a permuteral Carter subgroup H", run: characterizations::c3_4_2 },
    Suite { id: "KW", title: "products of two nilpotent subgroups are soluble", run: characterizations::kw },
    Suite { id: "CLS", title: "classification consistency and enumerator cross-checks", run: consistency::cls },
];

/// Accepted alternative spellings of suite ids.
const ALIASES: &[(&str, &str)] = &[("L1.3", "T1.3"), ("T1.7-local", "T1.7")];

pub fn suite(id: &str) -> Option<&'static Suite> {
    let id = ALIASES
        .iter()
        .find(|(alias, _)| *alias == id)
        .map_or(id, |(_, target)| target);
    SUITES.iter().find(|s| s.id == id)
}

/// Every in-scope result that must have a suite.
pub const REQUIRED_SUITES: &[&str] = &[
    "L1.1", "L1.2", "T1.3", "L1.5", "P1.6", "T1.7", "T1.8", "T1.9", "L1.10", "L1.11", "L1.12",
    "L1.13", "L2.1", "L2.2", "L2.3", "L2.4", "L2.5", "L2.6", "L2.8", "T3.1", "T3.2", "T3.3",
    "C3.3.1", "T3.4", "C3.4.1", "C3.4.2", "KW",
];

/// `|AB| = |A||B|/|A ∩ B|` for nodes `a`, `b`.
pub(crate) fn product_order(m: &Member, a: usize, b: usize) -> usize {
    let (sa, sb) = (m.node(a), m.node(b));
    let meet = sa.members().intersection(sb.members()).count();
    sa.order() * sb.order() / meet
}

pub(crate) fn meet_node(m: &Member, a: usize, b: usize) -> usize {
    let set = m.node(a).members().intersection(m.node(b).members());
    m.lat.index_of_set(&set).expect("intersection of subgroups is a node")
}

/// Node of `⟨A, B⟩`.
pub(crate) fn join_node(m: &Member, a: usize, b: usize) -> usize {
    m.index(&m.group().join(m.node(a), m.node(b)))
}

pub(crate) fn is_cyclic_node(m: &Member, i: usize) -> bool {
    let g = m.group();
    let order = m.node(i).order() as u64;
    m.node(i).members().iter().any(|x| g.element_order(x) == order)
}

pub(crate) fn is_nilpotent_node(m: &Member, i: usize) -> bool {
    m.group().is_nilpotent_subgroup(m.node(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_required_result_has_a_suite() {
        for id in REQUIRED_SUITES {
            assert!(suite(id).is_some(), "missing suite {id}");
        }
    }

    #[test]
    fn suite_ids_are_unique() {
        let mut ids: Vec<&str> = SUITES.iter().map(|s| s.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), SUITES.len());
    }

    #[test]
    fn aliases_resolve() {
        assert_eq!(suite("L1.3").unwrap().id, "T1.3");
        assert_eq!(suite("T1.7-local").unwrap().id, "T1.7");
        assert!(suite("T9.9").is_none());
    }

    #[test]
    fn seeds_depend_on_suite_and_member() {
        assert_ne!(fnv1a(b"T3.1/S4"), fnv1a(b"T3.1/S5"));
        assert_ne!(fnv1a(b"L2.1/S4"), fnv1a(b"T3.1/S4"));
    }
}
