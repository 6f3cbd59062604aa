//! Line-oriented group files.
//!
//! ```text
//! # comments and blank lines are ignored
//! degree 3
//! gen (1 2 3)
//! gen (1 2)
//! ```
//!
//! The first significant line declares the degree; each `gen` line holds one
//! generator in disjoint-cycle notation with 1-based points. Output always
//! uses LF line endings.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

pub fn parse_group_file(text: &str, cap: usize) -> Result<FiniteGroup> {
    let mut degree: Option<(usize, usize)> = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = |message: String| Error::Syntax {
            line: line_no,
            message,
        };
        let (keyword, rest) = line
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((line, ""));
        match (keyword, degree) {
            ("degree", None) => {
                let n: usize = rest
                    .parse()
                    .map_err(|_| syntax(format!("invalid degree `{rest}`")))?;
                if n == 0 {
                    return Err(syntax("degree must be positive".into()));
                }
                degree = Some((n, line_no));
            }
            ("degree", Some((_, first))) => {
                return Err(syntax(format!("degree already declared on line {first}")));
            }
            (_, None) => return Err(syntax("expected `degree <n>` first".into())),
            ("gen", Some((n, _))) => {
                let p = Permutation::parse_cycles(n, rest).map_err(|e| syntax(e.to_string()))?;
                gens.push(p);
            }
            (other, Some(_)) => return Err(syntax(format!("unknown directive `{other}`"))),
        }
    }
    let Some((n, _)) = degree else {
        return Err(Error::Syntax {
            line: text.lines().count().max(1),
            message: "missing `degree <n>` line".into(),
        });
    };
    FiniteGroup::closure(n, &gens, cap)
}

pub fn write_group_file(g: &FiniteGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for p in g.generators() {
        out.push_str("gen ");
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ORDER_CAP;

    #[test]
    fn parses_s3() {
        let g = parse_group_file("degree 3\ngen (1 2 3)\ngen (1 2)\n", DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn degree_only_is_trivial() {
        let g = parse_group_file("degree 1\n", DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# S3\n\ndegree 3\n  # rotation\ngen (1 2 3)\n\ngen (1 2)\n";
        assert_eq!(parse_group_file(text, DEFAULT_ORDER_CAP).unwrap().order(), 6);
    }

    #[test]
    fn out_of_range_point_reports_line() {
        let err = parse_group_file("degree 3\ngen (1 4)", DEFAULT_ORDER_CAP).unwrap_err();
        match err {
            Error::Syntax { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("out of range"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn other_syntax_errors() {
        for (text, line) in [
            ("gen (1 2)\n", 1),
            ("degree x\n", 1),
            ("degree 3\nfoo\n", 2),
            ("degree 3\ndegree 4\n", 2),
            ("# nothing\n", 1),
            ("degree 3\ngen (1 2\n", 2),
        ] {
            match parse_group_file(text, DEFAULT_ORDER_CAP) {
                Err(Error::Syntax { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn cap_applies() {
        let r = parse_group_file("degree 4\ngen (1 2)\ngen (1 2 3 4)\n", 10);
        assert_eq!(r.unwrap_err(), Error::OrderCapExceeded { cap: 10 });
    }

    #[test]
    fn write_uses_cycles_and_lf() {
        let g = parse_group_file("degree 4\ngen (1 2)(3 4)\ngen ()\n", DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(write_group_file(&g), "degree 4\ngen (1 2)(3 4)\ngen ()\n");
    }
}
