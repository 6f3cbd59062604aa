//! Preliminary results: chief factors, residuals, Fitting/Frattini/socle,
//! ℙ-subnormality calculus, w-supersolubility, pronormal and abnormal
//! subgroups, nilpotent factorizations.

use std::collections::BTreeMap;

use permlab::arith::{is_power_of, prime_divisors};
use permlab::classify::{self, Formation};
use permlab::permutizer;

use super::{is_nilpotent_node, join_node, meet_node, product_order, Ctx};

/// Pairs `(K, H)` of normal nodes with `H/K` a chief factor.
fn chief_factors(cx: &Ctx) -> Vec<(usize, usize)> {
    let lat = &cx.m.lat;
    let normals = cx.m.normal_nodes();
    let mut out = Vec::new();
    for &k in normals {
        for &h in normals {
            if classify::is_chief_factor(lat, k, h) {
                out.push((k, h));
            }
        }
    }
    out
}

pub fn l1_1(cx: &mut Ctx) {
    let m = cx.m;
    let (g, lat) = (m.group(), &m.lat);
    let mut radicals = BTreeMap::new();
    for (k, h) in chief_factors(cx) {
        let c = classify::factor_centralizer(g, m.node(k), m.node(h));
        let ci = m.index(&c);
        let factor = (m.node(h).order() / m.node(k).order()) as u64;
        for p in prime_divisors(factor) {
            let fp = radicals
                .entry(p)
                .or_insert_with(|| classify::p_nilpotent_radical(lat, p));
            cx.check(fp.is_subgroup_of(&c), || {
                format!(
                    "F_{p}(G) (order {}) is not in C_G(H/K) (order {}) for H = [{}], K = [{}]",
                    fp.order(),
                    c.order(),
                    m.describe(h),
                    m.describe(k)
                )
            });
            let normal_p = m.normal_nodes().iter().copied().find(|&n| {
                n != ci
                    && lat.contains(n, ci)
                    && is_power_of((m.node(n).order() / c.order()) as u64, p, false)
            });
            cx.check(normal_p.is_none(), || {
                format!(
                    "G/C_G(H/K) has a normal {p}-subgroup [{}]/C for H = [{}], K = [{}]",
                    m.describe(normal_p.unwrap_or(0)),
                    m.describe(h),
                    m.describe(k)
                )
            });
        }
    }
}

pub fn l1_2(cx: &mut Ctx) {
    let m = cx.m;
    let normals = cx.pick(m.normal_nodes().to_vec());
    let residuals = [
        (Formation::Nilpotent, classify::residual(&m.lat, Formation::Nilpotent)),
        (Formation::Supersoluble, classify::residual(&m.lat, Formation::Supersoluble)),
    ];
    for k in normals {
        let q = m.quotient(k);
        for (f, res) in &residuals {
            let expected = q.quotient.image(res);
            let actual = classify::residual(&q.lat, *f);
            cx.check(expected == actual, || {
                format!(
                    "{f:?} residual of G/K has order {} but G^F K/K has order {} for K = [{}]",
                    actual.order(),
                    expected.order(),
                    m.describe(k)
                )
            });
        }
    }
}

pub fn t1_3(cx: &mut Ctx) {
    let m = cx.m;
    if !m.class.soluble {
        cx.skip();
        return;
    }
    let phi = m.index(&classify::frattini(&m.lat));
    let q = m.quotient(phi);
    let qg = q.group();
    let f = classify::fitting(&q.lat);
    let c = qg.centralizer(f.members());
    let s = classify::socle(&q.lat);
    cx.check(f == c, || {
        format!(
            "in G/Phi(G): F has order {} but C(F) has order {}",
            f.order(),
            c.order()
        )
    });
    cx.check(f == s, || {
        format!("in G/Phi(G): F has order {} but Soc has order {}", f.order(), s.order())
    });
}

pub fn l1_5(cx: &mut Ctx) {
    let m = cx.m;
    let lat = &m.lat;
    let n = lat.len();
    let psn: Vec<bool> = (0..n).map(|i| m.is_p_subnormal(i)).collect();
    let normals = m.normal_nodes().to_vec();

    // (1) and (2)
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|h| normals.iter().map(move |&k| (h, k)))
        .collect();
    for (h, k) in cx.pick(pairs) {
        let q = m.quotient(k);
        let img = q.image_node(m.node(h));
        let img_psn = q.lat.prime_chain_exists(img, q.lat.top());
        if psn[h] {
            let meet = meet_node(m, h, k);
            cx.check(lat.prime_chain_exists(meet, k), || {
                format!("(1) H∩N not P-sn in N for H = [{}], N = [{}]", m.describe(h), m.describe(k))
            });
            cx.check(img_psn, || {
                format!("(1) HN/N not P-sn in G/N for H = [{}], N = [{}]", m.describe(h), m.describe(k))
            });
        }
        if lat.contains(h, k) && img_psn {
            cx.check(psn[h], || {
                format!("(2) H/N P-sn in G/N but H not P-sn for H = [{}], N = [{}]", m.describe(h), m.describe(k))
            });
        }
    }

    // (3)
    let mut triples = Vec::new();
    for h in 0..n {
        for (a, &n1) in normals.iter().enumerate() {
            for &n2 in &normals[a..] {
                triples.push((h, n1, n2));
            }
        }
    }
    for (h, n1, n2) in cx.pick(triples) {
        let (hn1, hn2) = (join_node(m, h, n1), join_node(m, h, n2));
        if psn[hn1] && psn[hn2] {
            let meet = meet_node(m, hn1, hn2);
            cx.check(psn[meet], || {
                format!(
                    "(3) HN1 ∩ HN2 not P-sn for H = [{}], N1 = [{}], N2 = [{}]",
                    m.describe(h),
                    m.describe(n1),
                    m.describe(n2)
                )
            });
        }
    }

    // (4)
    let chains: Vec<(usize, usize)> = (0..n)
        .flat_map(|h| lat.intermediate(h).into_iter().map(move |k| (h, k)))
        .filter(|&(h, k)| psn[k] && lat.prime_chain_exists(h, k))
        .collect();
    for (h, k) in cx.pick(chains) {
        cx.check(psn[h], || {
            format!("(4) H P-sn K P-sn G but H not P-sn for H = [{}], K = [{}]", m.describe(h), m.describe(k))
        });
    }

    // (5): conjugacy classes are the orbits under conjugation
    for class in lat.classes() {
        let first = psn[class[0]];
        for &i in class {
            cx.check(psn[i] == first, || {
                format!("(5) P-subnormality differs between conjugates [{}] and [{}]", m.describe(class[0]), m.describe(i))
            });
        }
    }

    // (6)
    let res = m.index(&classify::residual(lat, Formation::Supersoluble));
    for h in lat.intermediate(res) {
        cx.check(psn[h], || {
            format!("(6) G^U ≤ H but H not P-sn for H = [{}]", m.describe(h))
        });
    }

    if m.class.soluble {
        // (7)
        let pairs: Vec<(usize, usize)> = (0..n)
            .filter(|&h| psn[h])
            .flat_map(|h| (0..n).map(move |k| (h, k)))
            .collect();
        for (h, k) in cx.pick(pairs) {
            let meet = meet_node(m, h, k);
            cx.check(lat.prime_chain_exists(meet, k), || {
                format!("(7) H∩K not P-sn in K for H = [{}], K = [{}]", m.describe(h), m.describe(k))
            });
        }
        // (8)
        let sn: Vec<usize> = (0..n).filter(|&h| psn[h]).collect();
        let pairs: Vec<(usize, usize)> = sn
            .iter()
            .enumerate()
            .flat_map(|(a, &h1)| sn[a..].iter().map(move |&h2| (h1, h2)))
            .collect();
        for (h1, h2) in cx.pick(pairs) {
            let meet = meet_node(m, h1, h2);
            cx.check(psn[meet], || {
                format!("(8) H1∩H2 not P-sn for H1 = [{}], H2 = [{}]", m.describe(h1), m.describe(h2))
            });
        }
    }
}

pub fn p1_6(cx: &mut Ctx) {
    let c = &cx.m.class;
    let ok = !c.w_supersoluble || c.ore_dispersive;
    cx.check(ok, || "w-supersoluble but not Ore dispersive".into());
}

pub fn t1_7(cx: &mut Ctx) {
    let m = cx.m;
    let lat = &m.lat;
    let w = m.class.w_supersoluble;
    let local = classify::wu_local_check(lat);
    cx.check(local == w, || {
        format!("local-function test gives {local} but Sylow P-subnormality gives {w}")
    });

    // quotient membership for every normal subgroup
    let normals = m.normal_nodes().to_vec();
    let quotient_w: Vec<bool> = normals
        .iter()
        .map(|&k| permutizer::is_w_supersoluble(&m.quotient(k).lat))
        .collect();
    if w {
        for k in 0..lat.len() {
            cx.check(permutizer::is_w_supersoluble_node(lat, k), || {
                format!("subgroup [{}] of a w-supersoluble group is not w-supersoluble", m.describe(k))
            });
        }
        for (&k, &qw) in normals.iter().zip(&quotient_w) {
            cx.check(qw, || format!("quotient by [{}] is not w-supersoluble", m.describe(k)));
        }
    }
    // G/A, G/B in the class implies G/(A∩B) in the class
    for (a, &na) in normals.iter().enumerate() {
        for (b, &nb) in normals.iter().enumerate().skip(a) {
            if quotient_w[a] && quotient_w[b] {
                let meet = meet_node(m, na, nb);
                let pos = normals.binary_search(&meet).expect("meet of normal subgroups is normal");
                cx.check(quotient_w[pos], || {
                    format!(
                        "G/A and G/B w-supersoluble but not G/(A∩B) for A = [{}], B = [{}]",
                        m.describe(na),
                        m.describe(nb)
                    )
                });
            }
        }
    }
    // saturation
    let phi = m.index(&classify::frattini(lat));
    let pos = normals.binary_search(&phi).expect("Frattini subgroup is normal");
    if quotient_w[pos] {
        cx.check(w, || "G/Phi(G) is w-supersoluble but G is not".into());
    }
}

pub fn t1_8(cx: &mut Ctx) {
    let m = cx.m;
    if !m.class.w_supersoluble {
        cx.skip();
        return;
    }
    for k in cx.subgroup_sweep() {
        if prime_divisors(m.node(k).order() as u64).len() == 2 {
            cx.check(classify::is_supersoluble_node(&m.lat, k), || {
                format!("biprimary subgroup [{}] is not supersoluble", m.describe(k))
            });
        }
    }
}

pub fn t1_9(cx: &mut Ctx) {
    let m = cx.m;
    for (k, h) in chief_factors(cx) {
        let factor = (m.node(h).order() / m.node(k).order()) as u64;
        let primes = prime_divisors(factor);
        if primes.len() != 1 {
            continue;
        }
        let p = primes[0];
        if !is_power_of(factor, p, false) {
            continue;
        }
        // a chief factor of prime-power order is elementary abelian
        let exponent = classify::relative_exponent(m.group(), m.node(h), m.node(k));
        cx.check(exponent == p, || {
            format!("chief factor [{}]/[{}] of order {factor} has exponent {exponent}", m.describe(h), m.describe(k))
        });
        let action = classify::chief_factor_action(&m.lat, k, h).expect("chief factor");
        let small = factor == p;
        let in_class = action.abelian && (p - 1).is_multiple_of(action.exponent);
        cx.check(small == in_class, || {
            format!(
                "chief factor [{}]/[{}] of order {factor}: Aut_G has order {}, abelian {}, exponent {}",
                m.describe(h),
                m.describe(k),
                action.quotient_order,
                action.abelian,
                action.exponent
            )
        });
    }
}

pub fn l1_10(cx: &mut Ctx) {
    let m = cx.m;
    for h in cx.subgroup_sweep() {
        if m.is_pronormal(h) {
            let n = m.normalizer(h);
            cx.check(m.is_abnormal(n), || {
                format!("H = [{}] pronormal but N_G(H) = [{}] not abnormal", m.describe(h), m.describe(n))
            });
        }
    }
}

pub fn l1_11(cx: &mut Ctx) {
    let m = cx.m;
    let (g, lat) = (m.group(), &m.lat);
    for h in cx.subgroup_sweep() {
        let abnormal = m.is_abnormal(h);
        let pronormal = m.is_pronormal(h);
        let self_normalizing = m.normalizer(h) == h;
        // (2): H ≤ U ∩ U^x forces x ∈ U; U^x depends only on the coset Ux
        let mut cond2 = true;
        'outer: for u in lat.intermediate(h) {
            let us = m.node(u);
            let mut covered = permlab::ElementSet::empty(g.order());
            for x in 0..g.order() {
                if covered.contains(x) {
                    continue;
                }
                for a in us.members().iter() {
                    covered.insert(g.mul(a, x));
                }
                if us.contains(x) {
                    continue;
                }
                let conj = g.conjugate(us, x);
                if m.node(h).is_subgroup_of(&conj) {
                    cond2 = false;
                    break 'outer;
                }
            }
        }
        let cond3 = pronormal && lat.intermediate(h).into_iter().all(|u| m.normalizer(u) == u);
        let cond4 = pronormal && self_normalizing;
        for (label, value) in [("(2)", cond2), ("(3)", cond3), ("(4)", cond4)] {
            cx.check(value == abnormal, || {
                format!(
                    "H = [{}]: abnormal is {abnormal} but condition {label} is {value}",
                    m.describe(h)
                )
            });
        }
    }
}

pub fn l1_12(cx: &mut Ctx) {
    let m = cx.m;
    let (g, lat) = (m.group(), &m.lat);
    let sweep = cx.subgroup_sweep();
    // (1)
    let pairs: Vec<(usize, usize)> = sweep
        .iter()
        .copied()
        .filter(|&h| m.is_pronormal(h))
        .flat_map(|h| lat.intermediate(h).into_iter().map(move |u| (h, u)))
        .collect();
    for (h, u) in cx.pick(pairs) {
        cx.check(permutizer::is_pronormal_in(g, m.node(u), m.node(h)), || {
            format!("H = [{}] pronormal in G but not in U = [{}]", m.describe(h), m.describe(u))
        });
    }
    // (2) and (3)
    let normals = m.normal_nodes().to_vec();
    let pairs: Vec<(usize, usize)> = sweep
        .iter()
        .flat_map(|&h| normals.iter().map(move |&k| (h, k)))
        .collect();
    for (h, k) in cx.pick(pairs) {
        let q = m.quotient(k);
        let qg = q.group();
        let img = q.image_node(m.node(h));
        let img_pronormal = permutizer::is_pronormal_in(qg, &qg.whole(), q.lat.node(img));
        if lat.contains(h, k) {
            cx.check(img_pronormal == m.is_pronormal(h), || {
                format!(
                    "(2) H = [{}] pronormal {} but H/N pronormal {img_pronormal} for N = [{}]",
                    m.describe(h),
                    m.is_pronormal(h),
                    m.describe(k)
                )
            });
        }
        if m.is_pronormal(h) {
            cx.check(img_pronormal, || {
                format!("(3) HN/N not pronormal for H = [{}], N = [{}]", m.describe(h), m.describe(k))
            });
        }
    }
}

pub fn l1_13(cx: &mut Ctx) {
    let m = cx.m;
    let g = m.group();
    let order = m.order();
    let self_centralizing: Vec<usize> = m
        .lat
        .minimal_normal_indices()
        .into_iter()
        .filter(|&n| n != m.top() && g.centralizer(m.node(n).members()) == *m.node(n))
        .collect();
    if self_centralizing.is_empty() {
        cx.skip();
        return;
    }
    let nilpotent: Vec<usize> = (0..m.lat.len()).filter(|&i| is_nilpotent_node(m, i)).collect();
    let mut factorizations = Vec::new();
    for &a in &nilpotent {
        for &b in &nilpotent {
            if product_order(m, a, b) == order {
                factorizations.push((a, b));
            }
        }
    }
    let factorizations = cx.pick(factorizations);
    if factorizations.is_empty() {
        cx.skip();
        return;
    }
    for (a, b) in factorizations {
        let describe = || format!("A = [{}], B = [{}]", m.describe(a), m.describe(b));
        cx.check(meet_node(m, a, b) == 0, || format!("(1) A∩B ≠ 1 for {}", describe()));
        for &n in &self_centralizing {
            let ns = m.node(n);
            let union = m.node(a).members().union(m.node(b).members());
            cx.check(ns.members().is_subset(&union), || {
                format!("(2) N = [{}] not inside A ∪ B for {}", m.describe(n), describe())
            });
            if ns.is_subgroup_of(m.node(a)) {
                let a_order = m.node(a).order() as u64;
                let primes = prime_divisors(a_order);
                let ok = primes.len() == 1 && !(m.node(b).order() as u64).is_multiple_of(primes[0]);
                cx.check(ok, || {
                    format!("(3) N = [{}] ≤ A but A, B not a p-group and a p'-group for {}", m.describe(n), describe())
                });
            }
        }
    }
}
