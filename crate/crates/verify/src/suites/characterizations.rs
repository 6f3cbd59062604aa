//! Characterizations of w-supersoluble and supersoluble groups through
//! (strongly) permuteral subgroups, and nilpotent factorizations.

use permlab::classify;
use permlab::permutizer;

use super::{is_nilpotent_node, join_node, product_order, Ctx};

/// First node in `nodes` failing `pred`, described.
fn first_failure(cx: &Ctx, nodes: &[usize], pred: impl Fn(usize) -> bool) -> Option<String> {
    nodes.iter().find(|&&h| !pred(h)).map(|&h| cx.m.describe(h))
}

fn verdict(holds: bool, counterexample: &Option<String>) -> String {
    match counterexample {
        None => holds.to_string(),
        Some(w) => format!("{holds} (fails at [{w}])"),
    }
}

pub fn t3_1(cx: &mut Ctx) {
    let m = cx.m;
    let sylows = m.sylow_nodes();
    let bad = first_failure(cx, &sylows, |h| m.is_strongly_permuteral(h));
    let w = m.class.w_supersoluble;
    cx.check(w == bad.is_none(), || {
        format!(
            "w-supersoluble is {w} but all Sylow subgroups strongly permuteral is {}",
            verdict(bad.is_none(), &bad)
        )
    });
}

pub fn t3_2(cx: &mut Ctx) {
    let m = cx.m;
    if !m.class.metanilpotent {
        cx.skip();
        return;
    }
    let sylows = m.sylow_nodes();
    let strong = first_failure(cx, &sylows, |h| m.is_strongly_permuteral(h));
    let plain = first_failure(cx, &sylows, |h| m.is_permuteral(h));
    let ss = m.class.supersoluble;
    let s2 = verdict(strong.is_none(), &strong);
    let s3 = verdict(plain.is_none(), &plain);
    cx.check(ss == strong.is_none(), || {
        format!("supersoluble is {ss} but Sylows strongly permuteral is {s2}")
    });
    cx.check(ss == plain.is_none(), || {
        format!("supersoluble is {ss} but Sylows permuteral is {s3}")
    });
}

pub fn t3_3(cx: &mut Ctx) {
    let m = cx.m;
    // every property involved is invariant under conjugation
    let reps = m.class_representatives();
    let pronormal: Vec<usize> = reps.iter().copied().filter(|&h| m.is_pronormal(h)).collect();
    let hall: Vec<usize> = m
        .hall_nodes()
        .into_iter()
        .filter(|h| reps.binary_search(h).is_ok())
        .collect();
    let statements = [
        ("(2) pronormal subgroups strongly permuteral", first_failure(cx, &pronormal, |h| m.is_strongly_permuteral(h))),
        ("(3) pronormal subgroups permuteral", first_failure(cx, &pronormal, |h| m.is_permuteral(h))),
        ("(4) Hall subgroups strongly permuteral", first_failure(cx, &hall, |h| m.is_strongly_permuteral(h))),
        ("(5) Hall subgroups permuteral", first_failure(cx, &hall, |h| m.is_permuteral(h))),
    ];
    let ss = m.class.supersoluble;
    for (label, bad) in &statements {
        cx.check(ss == bad.is_none(), || {
            format!("supersoluble is {ss} but {label} is {}", verdict(bad.is_none(), bad))
        });
    }
}

pub fn c3_3_1(cx: &mut Ctx) {
    let m = cx.m;
    let hall = m.hall_nodes();
    if hall.iter().all(|&h| m.is_p_subnormal(h)) {
        cx.check(m.class.supersoluble, || {
            "every Hall subgroup is P-subnormal but G is not supersoluble".into()
        });
    } else {
        cx.skip();
    }
}

/// A nilpotent factorization `G = AB` with both factors satisfying `pred`.
/// `A` ranges over class representatives: conjugating a factorization by
/// any element gives another one with the same properties.
fn nilpotent_factorization(cx: &Ctx, pred: impl Fn(usize) -> bool) -> Option<(usize, usize)> {
    let m = cx.m;
    let nilpotent: Vec<usize> = (0..m.lat.len())
        .filter(|&i| is_nilpotent_node(m, i) && pred(i))
        .collect();
    let reps = m.class_representatives();
    for &a in nilpotent.iter().filter(|a| reps.binary_search(a).is_ok()) {
        for &b in &nilpotent {
            if product_order(m, a, b) == m.order() {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn t3_4(cx: &mut Ctx) {
    let m = cx.m;
    let ss = m.class.supersoluble;
    let strong = nilpotent_factorization(cx, |i| m.is_strongly_permuteral(i));
    let plain = nilpotent_factorization(cx, |i| m.is_permuteral(i));
    let describe = |f: Option<(usize, usize)>| match f {
        Some((a, b)) => format!("true (A = [{}], B = [{}])", m.describe(a), m.describe(b)),
        None => "false".into(),
    };
    cx.check(ss == strong.is_some(), || {
        format!("supersoluble is {ss} but product of strongly permuteral nilpotent subgroups is {}", describe(strong))
    });
    cx.check(ss == plain.is_some(), || {
        format!("supersoluble is {ss} but product of permuteral nilpotent subgroups is {}", describe(plain))
    });
    if ss {
        let f = m.index(&classify::fitting(&m.lat));
        for c in permutizer::carter_indices(&m.lat) {
            cx.check(product_order(m, f, c) == m.order(), || {
                format!("F(G)C ≠ G for Carter subgroup C = [{}]", m.describe(c))
            });
            cx.check(m.is_strongly_permuteral(f) && m.is_strongly_permuteral(c), || {
                format!(
                    "F(G) strongly permuteral is {}, Carter subgroup [{}] strongly permuteral is {}",
                    m.is_strongly_permuteral(f),
                    m.describe(c),
                    m.is_strongly_permuteral(c)
                )
            });
        }
    }
}

pub fn c3_4_1(cx: &mut Ctx) {
    let m = cx.m;
    let sylows = m.sylow_nodes();
    let mut found = false;
    for &a in &sylows {
        for &b in &sylows {
            if b < a || product_order(m, a, b) != m.order() {
                continue;
            }
            found = true;
            let both = m.is_permuteral(a) && m.is_permuteral(b);
            let ss = m.class.supersoluble;
            cx.check(ss == both, || {
                format!(
                    "G = AB with A = [{}], B = [{}]: supersoluble is {ss} but both permuteral is {both}",
                    m.describe(a),
                    m.describe(b)
                )
            });
        }
    }
    if !found {
        cx.skip();
    }
}

pub fn c3_4_2(cx: &mut Ctx) {
    let m = cx.m;
    let f = m.index(&classify::fitting(&m.lat));
    let carters = permutizer::carter_indices(&m.lat);
    let witness = carters
        .iter()
        .copied()
        .find(|&c| m.is_permuteral(c) && product_order(m, f, c) == m.order());
    let ss = m.class.supersoluble;
    cx.check(ss == witness.is_some(), || match witness {
        Some(c) => format!("not supersoluble but G = F(G)H for permuteral Carter H = [{}]", m.describe(c)),
        None => format!(
            "supersoluble but no permuteral Carter subgroup H with F(G)H = G among {} Carter subgroups",
            carters.len()
        ),
    });
}

pub fn kw(cx: &mut Ctx) {
    let m = cx.m;
    if let Some((a, b)) = nilpotent_factorization(cx, |_| true) {
        cx.check(m.class.soluble, || {
            format!("G = AB with nilpotent A = [{}], B = [{}] but G is insoluble", m.describe(a), m.describe(b))
        });
    }
    // every subgroup that is a product of two nilpotent subgroups
    let nilpotent: Vec<usize> = (0..m.lat.len()).filter(|&i| is_nilpotent_node(m, i)).collect();
    let pairs: Vec<(usize, usize)> = nilpotent
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| nilpotent[i..].iter().map(move |&b| (a, b)))
        .collect();
    for (a, b) in cx.pick(pairs) {
        let j = join_node(m, a, b);
        if product_order(m, a, b) == m.node(j).order() {
            cx.check(classify::is_soluble_subgroup(m.group(), m.node(j)), || {
                format!(
                    "AB = [{}] with nilpotent A = [{}], B = [{}] is insoluble",
                    m.describe(j),
                    m.describe(a),
                    m.describe(b)
                )
            });
        }
    }
}
