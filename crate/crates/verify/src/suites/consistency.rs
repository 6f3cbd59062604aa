//! Cross-checks between the classifier and independent enumerations.

use permlab::arith::pi_part;
use permlab::classify::{self, Formation};

use super::Ctx;

pub fn cls(cx: &mut Ctx) {
    let m = cx.m;
    let c = &m.class;
    let (g, lat) = (m.group(), &m.lat);
    let n = m.order() as u64;

    let implications = [
        ("abelian", c.abelian, "nilpotent", c.nilpotent),
        ("nilpotent", c.nilpotent, "supersoluble", c.supersoluble),
        ("supersoluble", c.supersoluble, "w-supersoluble", c.w_supersoluble),
        ("w-supersoluble", c.w_supersoluble, "Ore dispersive", c.ore_dispersive),
        ("Ore dispersive", c.ore_dispersive, "soluble", c.soluble),
        ("supersoluble", c.supersoluble, "metanilpotent", c.metanilpotent),
        ("metanilpotent", c.metanilpotent, "soluble", c.soluble),
    ];
    for (a, va, b, vb) in implications {
        cx.check(!va || vb, || format!("{a} but not {b}"));
    }

    let residual = classify::residual(lat, Formation::Nilpotent);
    let residual_nilpotent = g.is_nilpotent_subgroup(&residual);
    cx.check(c.metanilpotent == residual_nilpotent, || {
        format!(
            "metanilpotent is {} (nilpotent length {:?}) but nilpotent residual nilpotent is {residual_nilpotent}",
            c.metanilpotent, c.nilpotent_length
        )
    });
    cx.check(c.soluble == c.nilpotent_length.is_some(), || {
        format!("soluble is {} but nilpotent length is {:?}", c.soluble, c.nilpotent_length)
    });

    let huppert = c.soluble && classify::is_supersoluble_node(lat, lat.top());
    cx.check(c.supersoluble == huppert, || {
        format!("chief-series test gives {} but maximal-subgroup indices give {huppert}", c.supersoluble)
    });

    let mut all_sylows_normal = true;
    for p in g.primes() {
        let sylows = lat.sylow_indices(p).expect("p divides |G|");
        let count = sylows.len() as u64;
        all_sylows_normal &= count == 1;
        cx.check(count % p == 1 % p && n.is_multiple_of(count), || {
            format!("{count} Sylow {p}-subgroups")
        });
        let normal_p = lat
            .normal_indices()
            .into_iter()
            .any(|i| lat.node(i).order() as u64 == pi_part(n, &[p]));
        cx.check(c.p_closed[&p] == normal_p, || {
            format!("{p}-closed is {} but a normal Sylow {p}-subgroup exists is {normal_p}", c.p_closed[&p])
        });
        for s in sylows {
            cx.check(m.is_pronormal(s), || format!("Sylow subgroup [{}] not pronormal", m.describe(s)));
        }
    }
    cx.check(c.nilpotent == all_sylows_normal, || {
        format!("nilpotent is {} but all Sylow subgroups normal is {all_sylows_normal}", c.nilpotent)
    });

    if c.soluble {
        let primes = g.primes();
        for mask in 0u32..(1 << primes.len()) {
            let pi: Vec<u64> = (0..primes.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| primes[i])
                .collect();
            let halls = lat.hall_indices(&pi);
            let one_class = halls.iter().all(|&h| lat.class_of(h) == lat.class_of(halls[0]));
            cx.check(!halls.is_empty() && one_class, || {
                format!("soluble group has {} Hall {pi:?}-subgroups, one class {one_class}", halls.len())
            });
        }
    }
}
