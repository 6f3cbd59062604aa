//! The `permlab` command line.
//!
//! Exit codes: 0 on success, 1 when a suite fails or `search --expect-none`
//! finds a witness, 2 on usage or input errors.

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use permlab::catalog::{self, registry};
use permlab::{classify, parse_group_file, FiniteGroup, DEFAULT_ORDER_CAP};

use crate::error::CliError;
use crate::member::Member;
use crate::report::ReportConfig;
use crate::runner::{self, Prepared};
use crate::search::{self, Expr};
use crate::subspec::SubSpec;
use crate::suites::{self, Options, SUITES};

pub const MAX_ORDER_ENV: &str = "PERMLAB_MAX_ORDER";

#[derive(Parser, Debug)]
#[command(name = "permlab", version, about = "Permutizers, permuteral subgroups and supersolubility checks for small finite groups")]
pub struct Cli {
    /// Largest group order to construct (overrides PERMLAB_MAX_ORDER).
    #[arg(long, global = true)]
    pub max_order: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Registered groups.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Order, generators and classification of a group.
    Show { group: String },
    /// Conjugacy classes of subgroups.
    Subgroups { group: String },
    /// The permutizer of a subgroup.
    Permutizer {
        group: String,
        #[arg(long)]
        sub: String,
    },
    /// Evaluates one subgroup property, with a witness where one exists.
    Check {
        group: String,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        prop: String,
    },
    /// Runs a property suite (or `all`) over a corpus.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value = "default")]
        corpus: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include elapsed time and worker count in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Lists groups or subgroup classes satisfying a predicate expression.
    Search {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value = "default")]
        corpus: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Exit with status 1 if any witness is found.
        #[arg(long)]
        expect_none: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Order cap from the flag, then the environment, then the default.
pub fn resolve_max_order(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match env {
        Some(v) => v.trim().parse().map_err(|_| CliError::InvalidSetting {
            name: MAX_ORDER_ENV,
            value: v.to_string(),
        }),
        None => Ok(DEFAULT_ORDER_CAP),
    }
}

/// A catalog name, or a path to a group file.
pub fn load_group(arg: &str, cap: usize) -> Result<FiniteGroup, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: arg.to_string(),
            source,
        })?;
        return Ok(parse_group_file(&text, cap)?);
    }
    Ok(catalog::build_named(arg, cap)?)
}

fn load_member(arg: &str, cap: usize) -> Result<Member, CliError> {
    Ok(Member::new(arg.to_string(), load_group(arg, cap)?)?)
}

pub fn main_with(cli: Cli, out: &mut dyn Write) -> ExitCode {
    let env = std::env::var(MAX_ORDER_ENV).ok();
    let result = resolve_max_order(cli.max_order, env.as_deref())
        .and_then(|cap| dispatch(cli.command, cap, out));
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("permlab: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, cap: usize, out: &mut dyn Write) -> Result<ExitCode, CliError> {
    let mut text = String::new();
    let code = match command {
        Command::Catalog { action: CatalogAction::List } => {
            for e in registry() {
                text.push_str(&format!("{:<10} {:>4}  {}", e.name, e.expected_order, e.params));
                if !e.note.is_empty() {
                    text.push_str(&format!("  ({})", e.note));
                }
                text.push('\n');
            }
            ExitCode::SUCCESS
        }
        Command::Show { group } => {
            let m = load_member(&group, cap)?;
            text = show(&m);
            ExitCode::SUCCESS
        }
        Command::Subgroups { group } => {
            let m = load_member(&group, cap)?;
            text = subgroups(&m);
            ExitCode::SUCCESS
        }
        Command::Permutizer { group, sub } => {
            let m = load_member(&group, cap)?;
            let h = SubSpec::parse(&sub)?.resolve(&m.lat)?;
            let p = m.index(m.permutizer(h));
            text = format!(
                "H: {}\nP_G(H): {}\npermuteral: {}\n",
                m.describe(h),
                m.describe(p),
                m.is_permuteral(h)
            );
            ExitCode::SUCCESS
        }
        Command::Check { group, sub, prop } => {
            let pred = search::subgroup_predicate(&prop).ok_or(CliError::UnknownProperty(prop))?;
            let m = load_member(&group, cap)?;
            let h = SubSpec::parse(&sub)?.resolve(&m.lat)?;
            text = format!("{}\nH: {}\n", search::eval_sub(pred, &m, h), m.describe(h));
            for line in search::explain(pred, &m, h) {
                text.push_str(&line);
                text.push('\n');
            }
            ExitCode::SUCCESS
        }
        Command::Verify { suite, corpus, jobs, format, timing } => {
            let selected: Vec<&suites::Suite> = if suite == "all" {
                SUITES.iter().collect()
            } else {
                vec![suites::suite(&suite).ok_or(CliError::UnknownSuite(suite))?]
            };
            let members = catalog::corpus(&corpus, cap)?;
            let pool = runner::pool(jobs);
            let prepared = runner::prepare(&pool, members);
            let opts = Options::default();
            let config = ReportConfig {
                corpus: corpus.clone(),
                max_order: cap,
                exhaustive_limit: opts.exhaustive_limit,
                sample_size: opts.sample_size,
                seed: format!("{:#018x}", opts.seed),
            };
            let reports: Vec<_> = selected
                .into_iter()
                .map(|s| runner::run_suite(&pool, s, &prepared, &opts, config.clone(), timing))
                .collect();
            let passed = reports.iter().all(|r| r.passed);
            text = match (format, reports.as_slice()) {
                (Format::Json, [single]) => single.to_json(),
                (Format::Json, many) => serde_json::to_string_pretty(many).expect("reports serialize") + "\n",
                (Format::Text, many) => many.iter().map(|r| r.to_text()).collect(),
            };
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Search { expr, corpus, jobs, expect_none } => {
            let e = Expr::parse(&expr)?;
            let members = catalog::corpus(&corpus, cap)?;
            let pool = runner::pool(jobs);
            let prepared = runner::prepare(&pool, members);
            let mut found = 0usize;
            for p in &prepared {
                match p {
                    Prepared::Ready(m) => {
                        for w in search::search_member(&e, m) {
                            found += 1;
                            text.push_str(&format!("{w}\n"));
                        }
                    }
                    Prepared::Failed { name, error } => eprintln!("permlab: skipping {name}: {error}"),
                }
            }
            text.push_str(&format!("{found} witnesses\n"));
            if expect_none && found > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
    };
    // a closed stdout is not worth a distinct exit status
    let _ = out.write_all(text.as_bytes());
    Ok(code)
}

fn show(m: &Member) -> String {
    let g = m.group();
    let c = &m.class;
    let gens: Vec<String> = g.generators().iter().map(ToString::to_string).collect();
    let fitting = m.index(&classify::fitting(&m.lat));
    let p_closed: Vec<String> = c.p_closed.iter().filter(|(_, &v)| v).map(|(p, _)| p.to_string()).collect();
    let mut s = format!(
        "name: {}\ndegree: {}\norder: {}\ngenerators: {}\nsubgroups: {} in {} classes\nnormal subgroups: {}\n",
        m.name,
        g.degree(),
        g.order(),
        if gens.is_empty() { "none".into() } else { gens.join(", ") },
        m.lat.len(),
        m.lat.classes().len(),
        m.normal_nodes().len(),
    );
    for (label, v) in [
        ("abelian", c.abelian),
        ("nilpotent", c.nilpotent),
        ("supersoluble", c.supersoluble),
        ("w-supersoluble", c.w_supersoluble),
        ("Ore dispersive", c.ore_dispersive),
        ("metanilpotent", c.metanilpotent),
        ("soluble", c.soluble),
    ] {
        s.push_str(&format!("{label}: {v}\n"));
    }
    match c.nilpotent_length {
        Some(l) => s.push_str(&format!("nilpotent length: {l}\n")),
        None => s.push_str("nilpotent length: undefined\n"),
    }
    s.push_str(&format!(
        "p-closed for: {}\nFitting subgroup: {}\n",
        if p_closed.is_empty() { "none".into() } else { p_closed.join(", ") },
        m.describe(fitting)
    ));
    s
}

fn subgroups(m: &Member) -> String {
    let mut s = String::new();
    for (k, class) in m.lat.classes().iter().enumerate() {
        let rep = *class.iter().min().expect("nonempty class");
        let mut flags = Vec::new();
        if class.len() == 1 {
            flags.push("normal");
        }
        if m.is_permuteral(rep) {
            flags.push("permuteral");
        }
        if m.is_strongly_permuteral(rep) {
            flags.push("strongly-permuteral");
        }
        if m.is_p_subnormal(rep) {
            flags.push("p-subnormal");
        }
        s.push_str(&format!(
            "class {k}: {} conjugate(s), {}{}{}\n",
            class.len(),
            m.describe(rep),
            if flags.is_empty() { "" } else { "; " },
            flags.join(" ")
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_order_precedence() {
        assert_eq!(resolve_max_order(Some(10), Some("20")).unwrap(), 10);
        assert_eq!(resolve_max_order(None, Some("20")).unwrap(), 20);
        assert_eq!(resolve_max_order(None, None).unwrap(), DEFAULT_ORDER_CAP);
        assert!(resolve_max_order(None, Some("many")).is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
