//! Counterexample search: boolean expressions over named predicates of a
//! group and of its subgroups, evaluated across a corpus.
//!
//! Grammar: `expr := term ('&' term)*`, `term := '!' term | '(' expr ')' | name`.
//! When the expression names a subgroup predicate it is evaluated on one
//! representative of each conjugacy class of subgroups (every predicate here
//! is invariant under conjugation); otherwise once per group.

use permlab::permutizer;

use crate::error::CliError;
use crate::member::Member;
use crate::suites::{is_cyclic_node, is_nilpotent_node};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupPred {
    Soluble,
    Nilpotent,
    Abelian,
    Supersoluble,
    WSupersoluble,
    Metanilpotent,
    OreDispersive,
    Simple,
    PermutizerCondition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubPred {
    Sylow,
    Hall,
    Normal,
    Pronormal,
    Abnormal,
    Permuteral,
    StronglyPermuteral,
    PSubnormal,
    Carter,
    Maximal,
    SelfNormalizing,
    NilpotentSubgroup,
    Cyclic,
    Trivial,
    Proper,
}

pub const GROUP_PREDICATES: &[(&str, GroupPred)] = &[
    ("soluble", GroupPred::Soluble),
    ("nilpotent", GroupPred::Nilpotent),
    ("abelian", GroupPred::Abelian),
    ("supersoluble", GroupPred::Supersoluble),
    ("w-supersoluble", GroupPred::WSupersoluble),
    ("metanilpotent", GroupPred::Metanilpotent),
    ("ore-dispersive", GroupPred::OreDispersive),
    ("simple", GroupPred::Simple),
    ("permutizer-condition", GroupPred::PermutizerCondition),
];

pub const SUBGROUP_PREDICATES: &[(&str, SubPred)] = &[
    ("sylow", SubPred::Sylow),
    ("hall", SubPred::Hall),
    ("normal", SubPred::Normal),
    ("pronormal", SubPred::Pronormal),
    ("abnormal", SubPred::Abnormal),
    ("permuteral", SubPred::Permuteral),
    ("strongly-permuteral", SubPred::StronglyPermuteral),
    ("p-subnormal", SubPred::PSubnormal),
    ("carter", SubPred::Carter),
    ("maximal", SubPred::Maximal),
    ("self-normalizing", SubPred::SelfNormalizing),
    ("nilpotent-subgroup", SubPred::NilpotentSubgroup),
    ("cyclic", SubPred::Cyclic),
    ("trivial", SubPred::Trivial),
    ("proper", SubPred::Proper),
];

pub fn group_predicate(name: &str) -> Option<GroupPred> {
    GROUP_PREDICATES.iter().find(|(n, _)| *n == name).map(|&(_, p)| p)
}

pub fn subgroup_predicate(name: &str) -> Option<SubPred> {
    SUBGROUP_PREDICATES.iter().find(|(n, _)| *n == name).map(|&(_, p)| p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Group(GroupPred),
    Sub(SubPred),
    Not(Box<Expr>),
    And(Vec<Expr>),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr, CliError> {
        let mut p = Parser { text, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn mentions_subgroups(&self) -> bool {
        match self {
            Expr::Group(_) => false,
            Expr::Sub(_) => true,
            Expr::Not(e) => e.mentions_subgroups(),
            Expr::And(es) => es.iter().any(Expr::mentions_subgroups),
        }
    }

    /// Truth value on member `m`, at subgroup node `h` when one is given.
    pub fn eval(&self, m: &Member, h: Option<usize>) -> bool {
        match self {
            Expr::Group(p) => eval_group(*p, m),
            Expr::Sub(p) => eval_sub(*p, m, h.expect("subgroup predicates need a subgroup")),
            Expr::Not(e) => !e.eval(m, h),
            Expr::And(es) => es.iter().all(|e| e.eval(m, h)),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> CliError {
        CliError::Expression {
            expr: self.text.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some('&') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { Expr::And(terms) })
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        match self.peek() {
            Some('!') => {
                self.pos += 1;
                Ok(Expr::Not(Box::new(self.term()?)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let rest = &self.text[self.pos..];
                let len = rest
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '-'))
                    .unwrap_or(rest.len());
                let name = &rest[..len];
                let e = if let Some(p) = group_predicate(name) {
                    Expr::Group(p)
                } else if let Some(p) = subgroup_predicate(name) {
                    Expr::Sub(p)
                } else {
                    return Err(self.error(&format!("unknown predicate `{name}`")));
                };
                self.pos += len;
                Ok(e)
            }
            Some(_) => Err(self.error("expected a predicate name, `!` or `(`")),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

fn eval_group(p: GroupPred, m: &Member) -> bool {
    let c = &m.class;
    match p {
        GroupPred::Soluble => c.soluble,
        GroupPred::Nilpotent => c.nilpotent,
        GroupPred::Abelian => c.abelian,
        GroupPred::Supersoluble => c.supersoluble,
        GroupPred::WSupersoluble => c.w_supersoluble,
        GroupPred::Metanilpotent => c.metanilpotent,
        GroupPred::OreDispersive => c.ore_dispersive,
        GroupPred::Simple => m.order() > 1 && m.normal_nodes().len() == 2,
        GroupPred::PermutizerCondition => (0..m.top()).all(|i| m.permutizer(i).order() > m.node(i).order()),
    }
}

pub fn eval_sub(p: SubPred, m: &Member, h: usize) -> bool {
    let order = m.node(h).order() as u64;
    let n = m.order() as u64;
    match p {
        SubPred::Sylow => {
            let primes = permlab::arith::prime_divisors(order);
            primes.len() == 1 && permlab::arith::gcd(order, n / order) == 1
        }
        SubPred::Hall => permlab::arith::gcd(order, n / order) == 1,
        SubPred::Normal => m.lat.is_normal(h),
        SubPred::Pronormal => m.is_pronormal(h),
        SubPred::Abnormal => m.is_abnormal(h),
        SubPred::Permuteral => m.is_permuteral(h),
        SubPred::StronglyPermuteral => m.is_strongly_permuteral(h),
        SubPred::PSubnormal => m.is_p_subnormal(h),
        SubPred::Carter => is_nilpotent_node(m, h) && m.normalizer(h) == h,
        SubPred::Maximal => m.lat.lower_covers(m.top()).contains(&h),
        SubPred::SelfNormalizing => m.normalizer(h) == h,
        SubPred::NilpotentSubgroup => is_nilpotent_node(m, h),
        SubPred::Cyclic => is_cyclic_node(m, h),
        SubPred::Trivial => order == 1,
        SubPred::Proper => h != m.top(),
    }
}

/// A group (and subgroup class representative) satisfying the expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub group: String,
    pub subgroup: Option<String>,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.subgroup {
            Some(s) => write!(f, "{}: {s}", self.group),
            None => f.write_str(&self.group),
        }
    }
}

/// Witnesses in `m`, in canonical node order.
pub fn search_member(expr: &Expr, m: &Member) -> Vec<Witness> {
    if !expr.mentions_subgroups() {
        return if expr.eval(m, None) {
            vec![Witness { group: m.name.clone(), subgroup: None }]
        } else {
            Vec::new()
        };
    }
    m.class_representatives()
        .into_iter()
        .filter(|&h| expr.eval(m, Some(h)))
        .map(|h| Witness {
            group: m.name.clone(),
            subgroup: Some(m.describe(h)),
        })
        .collect()
}

/// Chain, failure and permutizer details for `check`.
pub fn explain(p: SubPred, m: &Member, h: usize) -> Vec<String> {
    let mut out = Vec::new();
    match p {
        SubPred::Permuteral => {
            out.push(format!("P_G(H): {}", describe_set(m, m.permutizer(h))));
        }
        SubPred::StronglyPermuteral => {
            if let Some(f) = permutizer::strong_failure_in(&m.lat, h, m.top()) {
                let u = m.index(&f.intermediate);
                out.push(format!("witness U: {}", m.describe(u)));
                out.push(format!("P_U(H): {}", describe_set(m, &f.permutizer)));
            }
        }
        SubPred::PSubnormal => {
            if let Some(chain) = permutizer::prime_chain_between(&m.lat, h, m.top()) {
                let orders: Vec<String> = chain.terms.iter().map(|t| t.order().to_string()).collect();
                let indices: Vec<String> = chain.indices.iter().map(u64::to_string).collect();
                out.push(format!("chain orders: {}", orders.join(" < ")));
                out.push(format!("indices: {}", indices.join(", ")));
            }
        }
        SubPred::Pronormal | SubPred::Abnormal | SubPred::SelfNormalizing | SubPred::Carter => {
            out.push(format!("N_G(H): {}", m.describe(m.normalizer(h))));
        }
        _ => {}
    }
    out
}

fn describe_set(m: &Member, s: &permlab::Subgroup) -> String {
    m.describe(m.index(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use permlab::catalog::{build_named, make_psl27};

    fn member(name: &str) -> Member {
        Member::new(name.into(), build_named(name, 5000).unwrap()).unwrap()
    }

    #[test]
    fn parses_nested_expressions() {
        let e = Expr::parse("sylow & !(permuteral & normal)").unwrap();
        assert!(e.mentions_subgroups());
        assert_eq!(
            e,
            Expr::And(vec![
                Expr::Sub(SubPred::Sylow),
                Expr::Not(Box::new(Expr::And(vec![
                    Expr::Sub(SubPred::Permuteral),
                    Expr::Sub(SubPred::Normal)
                ])))
            ])
        );
        assert!(!Expr::parse("supersoluble & !nilpotent").unwrap().mentions_subgroups());
    }

    #[test]
    fn rejects_malformed_expressions() {
        for bad in ["", "sylow &", "(sylow", "sylow)", "bogus", "sylow | normal", "!"] {
            assert!(Expr::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn psl27_sylow3_is_permuteral_but_not_strongly() {
        let m = Member::new("psl27".into(), make_psl27()).unwrap();
        let e = Expr::parse("sylow & permuteral & !strongly-permuteral").unwrap();
        let w = search_member(&e, &m);
        assert_eq!(w.len(), 1);
        assert!(w[0].subgroup.as_ref().unwrap().starts_with("order 3,"));
    }

    #[test]
    fn s3_sylows_are_permuteral() {
        let e = Expr::parse("sylow & !permuteral").unwrap();
        assert!(search_member(&e, &member("S3")).is_empty());
    }

    #[test]
    fn group_level_expressions_yield_the_group() {
        let e = Expr::parse("simple & !abelian").unwrap();
        assert_eq!(search_member(&e, &member("A5")).len(), 1);
        assert!(search_member(&e, &member("S4")).is_empty());
        assert!(search_member(&Expr::parse("simple").unwrap(), &member("trivial")).is_empty());
    }
}
