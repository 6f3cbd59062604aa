//! Acceptance criteria, one PASS/FAIL line each. Runs without the test
//! harness so the lines print in order; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use permlab::catalog::{corpus, make_example_2_7, make_psl27, make_wu_not_u};
use permlab::{classify, permutizer, FiniteGroup, Subgroup, SubgroupLattice};
use permlab_verify::report::ReportConfig;
use permlab_verify::runner::{self, Prepared};
use permlab_verify::suites::{self, Options};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn psl27_sylow3() -> Verdict {
    let lat = SubgroupLattice::build(Arc::new(make_psl27())).map_err(|e| e.to_string())?;
    let g = lat.group();
    ensure(g.order() == 168, "PSL(2,7) has the wrong order")?;
    let h = lat.sylow_indices(3).map_err(|e| e.to_string())?[0];
    let hs = lat.node(h);
    ensure(permutizer::is_permuteral(g, hs).unwrap(), "Sylow 3-subgroup not permuteral")?;
    let f = permutizer::strong_failure_in(&lat, h, lat.top()).ok_or("Sylow 3-subgroup strongly permuteral")?;
    ensure(f.intermediate.order() == 12, format!("witness U has order {}", f.intermediate.order()))?;
    let pu = permutizer::permutizer_in(g, &f.intermediate, hs).unwrap();
    ensure(&pu == hs, "P_U(H) ≠ H")?;
    Ok("permuteral; not strongly permuteral; U of order 12 with P_U(H) = H".into())
}

fn example_order_16() -> Verdict {
    let ex = make_example_2_7();
    let g: &FiniteGroup = &ex.group;
    let ba = ex.b.compose(&ex.a).unwrap();
    let h = g.subgroup_from_permutations(&[ba]).unwrap();
    let p = permutizer::permutizer(g, &h).unwrap();
    ensure(p.order() == 8, format!("P_G(<ba>) has order {}", p.order()))?;
    ensure(g.is_abelian_subgroup(&p) && g.exponent_of(&p) == 2, "P_G(<ba>) not elementary abelian")?;
    ensure(p.order() != g.order(), "<ba> permuteral")?;
    Ok("P_G(<ba>) elementary abelian of order 8; <ba> not permuteral".into())
}

fn wu_not_u() -> Verdict {
    let lat = SubgroupLattice::build(Arc::new(make_wu_not_u())).map_err(|e| e.to_string())?;
    ensure(lat.group().order() == 294, "wrong order")?;
    ensure(permutizer::is_w_supersoluble(&lat), "not w-supersoluble")?;
    ensure(!classify::is_supersoluble(&lat), "supersoluble")?;
    let mut chains = 0;
    for p in lat.group().primes() {
        for s in lat.sylow_indices(p).unwrap() {
            let c = permutizer::prime_chain_between(&lat, s, lat.top()).ok_or(format!("no chain for a Sylow {p}-subgroup"))?;
            ensure(c.indices.iter().all(|&i| permlab::arith::is_prime(i)), "non-prime index in chain")?;
            ensure(c.terms.first() == Some(lat.node(s)) && c.terms.last() == Some(lat.node(lat.top())), "chain endpoints")?;
            for (w, &i) in c.terms.windows(2).zip(&c.indices) {
                ensure(w[0].is_subgroup_of(&w[1]) && w[1].order() / w[0].order() == i as usize, "chain step")?;
            }
            chains += 1;
        }
    }
    Ok(format!("w-supersoluble, not supersoluble; {chains} Sylow chains with prime indices"))
}

struct Corpus {
    pool: rayon::ThreadPool,
    prepared: Vec<Prepared>,
}

impl Corpus {
    fn default_corpus() -> Corpus {
        let pool = runner::pool(std::thread::available_parallelism().map_or(1, |n| n.get()));
        let prepared = runner::prepare(&pool, corpus("default", 5000).unwrap());
        Corpus { pool, prepared }
    }

    fn run(&self, ids: &[&str]) -> Verdict {
        let opts = Options::default();
        let mut summary = Vec::new();
        for id in ids {
            let suite = suites::suite(id).ok_or(format!("unknown suite {id}"))?;
            let config = ReportConfig {
                corpus: "default".into(),
                max_order: 5000,
                exhaustive_limit: opts.exhaustive_limit,
                sample_size: opts.sample_size,
                seed: format!("{:#x}", opts.seed),
            };
            let r = runner::run_suite(&self.pool, suite, &self.prepared, &opts, config, false);
            if !r.passed {
                let first = &r.failures[0];
                return Err(format!("{id}: {} failures, first in {}: {}", r.failures.len(), first.group, first.witness));
            }
            summary.push(format!("{id} {} checks/{} skipped", r.checks_run, r.skipped));
        }
        Ok(summary.join(", "))
    }
}

fn subgroups_by_subset_filter(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    fn walk(g: &FiniteGroup, i: usize, chosen: &mut Vec<usize>, member: &mut [bool], out: &mut BTreeSet<Vec<usize>>) {
        let n = g.order();
        if i == n {
            let closed = chosen.iter().all(|&a| chosen.iter().all(|&b| member[g.mul(a, b)]));
            if n.is_multiple_of(chosen.len()) && closed {
                out.insert(chosen.clone());
            }
            return;
        }
        let inv = g.inv(i);
        for take in [false, true] {
            if inv < i && member[inv] != take {
                continue;
            }
            if take {
                chosen.push(i);
                member[i] = true;
            }
            walk(g, i + 1, chosen, member, out);
            if take {
                chosen.pop();
                member[i] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut member = vec![false; g.order()];
    member[0] = true;
    walk(g, 1, &mut vec![0], &mut member, &mut out);
    out
}

fn permutes_by_closure_order(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> bool {
    let mut seen = vec![false; g.order()];
    let mut queue: Vec<usize> = h.members().iter().chain(k.members().iter()).collect();
    for &x in &queue {
        seen[x] = true;
    }
    let gens = queue.clone();
    while let Some(x) = queue.pop() {
        for &y in &gens {
            let z = g.mul(x, y);
            if !seen[z] {
                seen[z] = true;
                queue.push(z);
            }
        }
    }
    let join = seen.iter().filter(|&&b| b).count();
    let meet = h.members().iter().filter(|&x| k.contains(x)).count();
    join * meet == h.order() * k.order()
}

fn oracles() -> Verdict {
    let groups: Vec<(String, FiniteGroup)> = corpus("default", 5000)
        .unwrap()
        .into_iter()
        .filter_map(|m| m.group.ok().map(|g| (m.name, g)))
        .collect();
    let mut compared = 0;
    let mut lattices = Vec::new();
    for (name, g) in groups {
        let small = g.order() <= 24;
        let oracle = small.then(|| subgroups_by_subset_filter(&g));
        let lat = SubgroupLattice::build(Arc::new(g)).map_err(|e| e.to_string())?;
        if let Some(oracle) = oracle {
            let found: BTreeSet<Vec<usize>> = lat.nodes().iter().map(|s| s.members().to_vec()).collect();
            ensure(found.len() == lat.len() && found == oracle, format!("{name}: lattice differs from the oracle"))?;
            compared += 1;
        }
        lattices.push(lat);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6163_6365_7074_0008);
    for _ in 0..1000 {
        let lat = &lattices[rng.gen_range(0..lattices.len())];
        let (h, k) = (lat.node(rng.gen_range(0..lat.len())), lat.node(rng.gen_range(0..lat.len())));
        let g = lat.group();
        ensure(g.permutes(h, k).unwrap() == permutes_by_closure_order(g, h, k), "permutes disagrees with the oracle")?;
    }
    Ok(format!("{compared} lattices of order ≤ 24 match; 1000 random pairs agree"))
}

fn determinism() -> Verdict {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_permlab"))
            .args(["verify", "--suite", "all", "--corpus", "default", "--format", "json", "--jobs", jobs])
            .env_remove("PERMLAB_MAX_ORDER")
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run("1")?, run("8")?);
    ensure(a.status.success() && b.status.success(), "verify run failed")?;
    ensure(a.stdout == b.stdout, "reports differ between --jobs 1 and --jobs 8")?;
    Ok(format!("{} bytes identical across all suites", a.stdout.len()))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |n: usize, name: &str, limit: Option<Duration>, f: &dyn Fn() -> Verdict| {
        let start = Instant::now();
        let verdict = f();
        let elapsed = start.elapsed();
        let verdict = match (verdict, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (v, _) => v,
        };
        match verdict {
            Ok(detail) => println!("criterion {n} PASS {name}: {detail} ({elapsed:.2?})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n} FAIL {name}: {detail} ({elapsed:.2?})");
            }
        }
    };
    report(1, "PSL(2,7) Sylow 3-subgroup", Some(Duration::from_secs(60)), &psl27_sylow3);
    report(2, "order-16 example permutizer", Some(Duration::from_secs(1)), &example_order_16);
    report(3, "w-supersoluble, not supersoluble group of order 294", Some(Duration::from_secs(120)), &wu_not_u);
    let corpus = Corpus::default_corpus();
    report(4, "Sylow characterization of w-supersolubility", Some(Duration::from_secs(600)), &|| corpus.run(&["T3.1"]));
    report(5, "metanilpotent and pronormal/Hall characterizations", None, &|| corpus.run(&["T3.2", "T3.3"]));
    report(6, "nilpotent factorizations and Carter subgroups", None, &|| corpus.run(&["T3.4", "C3.4.2"]));
    let lemmas = [
        "L1.1", "L1.2", "L1.3", "L1.5", "L1.10", "L1.11", "L1.12", "L1.13", "L2.1", "L2.2", "L2.3", "L2.4", "L2.5",
        "L2.6", "L2.8", "T1.7-local", "T1.8", "T1.9", "P1.6", "KW",
    ];
    report(7, "lemma suites", None, &|| corpus.run(&lemmas));
    report(8, "brute-force oracles", None, &oracles);
    report(9, "report determinism across worker counts", None, &determinism);
    if failed == 0 {
        println!("all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
