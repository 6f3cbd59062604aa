//! Properties of permutizers and (strongly) permuteral subgroups.

use permlab::permutizer;

use super::{is_cyclic_node, product_order, Ctx};

pub fn l2_1(cx: &mut Ctx) {
    let m = cx.m;
    let (g, lat) = (m.group(), &m.lat);
    let sweep = cx.subgroup_sweep();

    // (1)
    let pairs: Vec<(usize, usize)> = sweep
        .iter()
        .flat_map(|&h| lat.intermediate(h).into_iter().map(move |u| (h, u)))
        .collect();
    for (h, u) in cx.pick(pairs) {
        let pu = permutizer::permutizer_in(g, m.node(u), m.node(h)).expect("H ≤ U");
        cx.check(pu.is_subgroup_of(m.permutizer(h)), || {
            format!(
                "(1) P_U(H) (order {}) not in P_G(H) (order {}) for H = [{}], U = [{}]",
                pu.order(),
                m.permutizer(h).order(),
                m.describe(h),
                m.describe(u)
            )
        });
    }

    // (2)
    let pairs: Vec<(usize, usize)> = sweep
        .iter()
        .flat_map(|&h| (0..g.order()).map(move |x| (h, x)))
        .collect();
    for (h, x) in cx.pick(pairs) {
        let hx = m.index(&g.conjugate(m.node(h), x));
        let lhs = g.conjugate(m.permutizer(h), x);
        cx.check(&lhs == m.permutizer(hx), || {
            format!("(2) P_G(H)^x ≠ P_G(H^x) for H = [{}], x = {}", m.describe(h), g.element(x))
        });
    }

    // (3)
    for &h in &sweep {
        let n = m.normalizer(h);
        cx.check(m.node(n).is_subgroup_of(m.permutizer(h)), || {
            format!("(3) N_G(H) not in P_G(H) for H = [{}]", m.describe(h))
        });
    }

    // (4) and (5)
    let normals = m.normal_nodes().to_vec();
    let pairs: Vec<(usize, usize)> = sweep
        .iter()
        .flat_map(|&h| normals.iter().map(move |&n| (h, n)))
        .collect();
    for (h, n) in cx.pick(pairs) {
        let q = m.quotient(n);
        let img = q.image_node(m.node(h));
        let pq = permutizer::permutizer(q.group(), q.lat.node(img)).expect("node of the quotient");
        let pimg = q.quotient.image(m.permutizer(h));
        cx.check(pimg.is_subgroup_of(&pq), || {
            format!(
                "(4) P_G(H)N/N (order {}) not in P_G/N(HN/N) (order {}) for H = [{}], N = [{}]",
                pimg.order(),
                pq.order(),
                m.describe(h),
                m.describe(n)
            )
        });
        if lat.contains(h, n) {
            cx.check(pimg == pq, || {
                format!(
                    "(5) P_G/N(H/N) has order {} but P_G(H)/N has order {} for H = [{}], N = [{}]",
                    pq.order(),
                    pimg.order(),
                    m.describe(h),
                    m.describe(n)
                )
            });
        }
    }
}

pub fn l2_2(cx: &mut Ctx) {
    let m = cx.m;
    let lat = &m.lat;
    let normals = m.normal_nodes().to_vec();
    let pairs: Vec<(usize, usize)> = cx
        .subgroup_sweep()
        .into_iter()
        .flat_map(|h| normals.iter().map(move |&n| (h, n)))
        .collect();
    for (h, n) in cx.pick(pairs) {
        let q = m.quotient(n);
        let qg = q.group();
        let img = q.image_node(m.node(h));
        let img_permuteral = permutizer::permutizer(qg, q.lat.node(img))
            .expect("node of the quotient")
            .order()
            == qg.order();
        let describe = || format!("H = [{}], N = [{}]", m.describe(h), m.describe(n));
        if m.is_permuteral(h) {
            cx.check(img_permuteral, || format!("(1) HN/N not permuteral for {}", describe()));
            let hn = super::join_node(m, h, n);
            cx.check(m.is_permuteral(hn), || format!("(2) HN not permuteral for {}", describe()));
        }
        if lat.contains(h, n) {
            cx.check(m.is_permuteral(h) == img_permuteral, || {
                format!(
                    "(3) H permuteral is {} but H/N permuteral is {img_permuteral} for {}",
                    m.is_permuteral(h),
                    describe()
                )
            });
        }
        if m.is_strongly_permuteral(h) {
            let failure = permutizer::strong_failure_in(&q.lat, img, q.lat.top());
            cx.check(failure.is_none(), || {
                let f = failure.as_ref().expect("failure present");
                format!(
                    "(4) HN/N not strongly permuteral (P_U(HN/N) has order {} in U of order {}) for {}",
                    f.permutizer.order(),
                    f.intermediate.order(),
                    describe()
                )
            });
        }
    }
}

fn largest_prime(cx: &Ctx) -> Option<u64> {
    cx.m.group().primes().into_iter().max()
}

fn p_closed(cx: &Ctx, p: u64) -> bool {
    cx.m.class.p_closed[&p]
}

pub fn l2_3(cx: &mut Ctx) {
    let m = cx.m;
    let Some(p) = largest_prime(cx) else {
        cx.skip();
        return;
    };
    let sylows = m.lat.sylow_indices(p).expect("p divides |G|");
    let cyclic: Vec<usize> = (0..m.lat.len()).filter(|&q| is_cyclic_node(m, q)).collect();
    let mut found = false;
    for &h in &sylows {
        for &q in &cyclic {
            if product_order(m, h, q) == m.order() {
                found = true;
                cx.check(p_closed(cx, p), || {
                    format!(
                        "G = HQ with H = [{}], Q = [{}] cyclic but G is not {p}-closed",
                        m.describe(h),
                        m.describe(q)
                    )
                });
            }
        }
    }
    if !found {
        cx.skip();
    }
}

pub fn l2_4(cx: &mut Ctx) {
    let m = cx.m;
    let Some(p) = largest_prime(cx) else {
        cx.skip();
        return;
    };
    let sylows = m.lat.sylow_indices(p).expect("p divides |G|");
    for h in sylows {
        if m.is_permuteral(h) {
            cx.check(p_closed(cx, p), || {
                format!("Sylow {p}-subgroup [{}] permuteral but G not {p}-closed", m.describe(h))
            });
        }
    }
}

pub fn l2_5(cx: &mut Ctx) {
    let m = cx.m;
    let all = m.sylow_nodes().into_iter().all(|h| m.is_permuteral(h));
    if all {
        cx.check(m.class.ore_dispersive, || {
            "every Sylow subgroup is permuteral but G is not Ore dispersive".into()
        });
    } else {
        cx.skip();
    }
}

fn check_strong(cx: &mut Ctx, label: &str, h: usize) {
    let m = cx.m;
    let failure = m.strong_failure(h);
    cx.check(failure.is_none(), || {
        let u = failure.expect("failure present");
        format!(
            "{label} [{}] not strongly permuteral: P_U(H) ≠ U for U = [{}]",
            m.describe(h),
            m.describe(u)
        )
    });
}

pub fn l2_6(cx: &mut Ctx) {
    let m = cx.m;
    if !m.class.supersoluble {
        cx.skip();
        return;
    }
    for h in cx.subgroup_sweep() {
        if m.is_pronormal(h) {
            check_strong(cx, "pronormal subgroup", h);
        }
    }
    for h in m.sylow_nodes() {
        check_strong(cx, "Sylow subgroup", h);
    }
    for h in permutizer::carter_indices(&m.lat) {
        check_strong(cx, "Carter subgroup", h);
    }
    for h in m.hall_nodes() {
        check_strong(cx, "Hall subgroup", h);
    }
}

pub fn l2_8(cx: &mut Ctx) {
    let m = cx.m;
    if !m.class.soluble {
        cx.skip();
        return;
    }
    for h in m.hall_nodes() {
        if m.is_p_subnormal(h) {
            check_strong(cx, "P-subnormal Hall subgroup", h);
        }
    }
    if m.class.w_supersoluble {
        for h in m.sylow_nodes() {
            check_strong(cx, "Sylow subgroup of a w-supersoluble group", h);
        }
    }
}
