//! The `synsemi` command line.
//!
//! Exit codes: 0 on success, 1 on usage, parse or range errors, 2 when a
//! verification (`tables --check`, `pairs`, `rev-bound`) finds a mismatch.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::automata::{
    dfa_from_json, dfa_to_dot, dfa_to_json, minimize, nfa_to_dot, quotient_count,
    syntactic_complexity, Dfa,
};
use crate::bounds::{trees_s, trees_s_rooted, BoundReport};
use crate::error::{Error, Result};
use crate::freeness::{classify_language, FreenessClass, PredicateName};
use crate::verify::{
    compare_with_printed, conflict_pairs, count_predicate, enumerate_predicate, reproduce_table,
    reversal_complexity, verify_reversal_bound, PairOptions,
};
use crate::witnesses::{claimed_alphabet_size, Variant, WitnessSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "synsemi",
    version,
    about = "Syntactic complexity of free regular languages"
)]
pub struct Cli {
    /// Worker threads for enumeration and pair search (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Upper bounds on syntactic complexity for a class.
    Bounds {
        #[arg(long)]
        class: FreenessClass,
        #[arg(long)]
        n: usize,
        /// List every formula, not only the tight, conjectured and weak values.
        #[arg(long)]
        all_formulas: bool,
    },
    /// Emit a witness DFA (formats: json, dot, text).
    Witness {
        #[arg(long)]
        class: FreenessClass,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "v")]
        variant: Variant,
    },
    /// Quotient complexity and freeness classes of a DFA file.
    Analyze {
        file: PathBuf,
        /// Also compute the syntactic semigroup size.
        #[arg(long)]
        semigroup: bool,
    },
    /// List or count the transformations in a named set.
    Enumerate {
        #[arg(long)]
        set: PredicateName,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
        /// Allow degree 9.
        #[arg(long)]
        extended: bool,
    },
    /// Conflict pairs between the bound set and the candidate set.
    Pairs {
        #[arg(long)]
        class: FreenessClass,
        #[arg(long)]
        n: usize,
        /// Count all partners of each element and look for distinct partners.
        #[arg(long)]
        multiplicity: bool,
        /// Candidate set to search instead of the default.
        #[arg(long)]
        candidate: Option<PredicateName>,
    },
    /// Quotient complexity of the reverse of a DFA file's language.
    Reverse {
        file: PathBuf,
        /// Print the subset automaton as DOT instead.
        #[arg(long)]
        dot: bool,
    },
    /// Check a reversal witness against the reversal bound.
    RevBound {
        #[arg(long)]
        class: FreenessClass,
        #[arg(long)]
        n: usize,
    },
    /// Reproduce a bounds table as CSV (formats: csv, json).
    Tables {
        #[arg(long)]
        which: u8,
        /// Cross-check with enumeration and witness automata.
        #[arg(long)]
        check: bool,
    },
    /// Labelled trees on m nodes of height at most h.
    Trees {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h: usize,
        /// Count rooted trees with a fixed root label instead.
        #[arg(long)]
        rooted: bool,
    },
}

/// Parses `argv` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => {
                let mut buf = Vec::new();
                let r = pool.install(|| execute(&cli, &mut buf));
                out.write_all(&buf).map_err(Error::from).and(r)
            }
            Err(e) => Err(Error::Parse(format!("--threads: {e}"))),
        },
        None => execute(&cli, out),
    };
    match result {
        Ok(code) => code,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn allow(cmd: &str, format: Option<Format>, allowed: &[Format]) -> Result<Format> {
    let f = format.unwrap_or(allowed[0]);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Error::Parse(format!(
            "{cmd} does not support --format {}",
            format!("{f:?}").to_lowercase()
        )))
    }
}

fn read_dfa(path: &PathBuf) -> Result<Dfa> {
    let text = std::fs::read_to_string(path)?;
    dfa_from_json(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn class_names(classes: &BTreeSet<FreenessClass>) -> Vec<&'static str> {
    classes.iter().map(|c| c.as_str()).collect()
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    use Format::*;
    match &cli.command {
        Command::Bounds {
            class,
            n,
            all_formulas,
        } => {
            let r = BoundReport::new(*class, *n)?;
            match allow("bounds", cli.format, &[Text, Json])? {
                Json => writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?,
                _ => {
                    writeln!(out, "class  {}-free", r.class)?;
                    writeln!(out, "n      {}", r.n)?;
                    let show = |x: &Option<_>| match x {
                        Some(v) => format!("{v}"),
                        None => "-".into(),
                    };
                    writeln!(out, "tight  {}", show(&r.tight))?;
                    writeln!(out, "conj   {}", show(&r.conjectured))?;
                    writeln!(out, "weak   {}", r.weak)?;
                    if *all_formulas {
                        let w = r.values.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                        for (k, v) in &r.values {
                            writeln!(out, "{k:<w$}  {v}")?;
                        }
                    }
                }
            }
        }
        Command::Witness { class, n, variant } => {
            let w = WitnessSpec::new(*class, *n, *variant).build()?;
            match allow("witness", cli.format, &[Json, Dot, Text])? {
                Json => writeln!(out, "{}", dfa_to_json(&w.dfa))?,
                Dot => write!(out, "{}", dfa_to_dot(&w.dfa, false))?,
                _ => {
                    writeln!(
                        out,
                        "{}-free witness, n = {}, {} letters",
                        class,
                        n,
                        w.dfa.alphabet().len()
                    )?;
                    if !w.in_proved_range {
                        writeln!(
                            out,
                            "warning: n = {n} is outside the proved range for this construction"
                        )?;
                    }
                    if let Some(c) = &w.claimed_complexity {
                        writeln!(out, "claimed syntactic complexity {c}")?;
                    }
                    if let Some(r) = w.claimed_reversal {
                        writeln!(out, "claimed reversal complexity {r}")?;
                    }
                    if let Some(a) = claimed_alphabet_size(*class, *variant, *n) {
                        writeln!(out, "stated alphabet size {a}")?;
                    }
                    for (a, t) in w.dfa.letters() {
                        writeln!(out, "{a} = {t}")?;
                    }
                }
            }
        }
        Command::Analyze { file, semigroup } => {
            let d = read_dfa(file)?;
            let kappa = quotient_count(&d);
            let classes = classify_language(&d);
            let sigma = if *semigroup {
                Some(syntactic_complexity(&d)?)
            } else {
                None
            };
            match allow("analyze", cli.format, &[Text, Json])? {
                Json => {
                    let v = json!({
                        "n": d.n(),
                        "alphabet": d.alphabet().len(),
                        "kappa": kappa,
                        "sigma": sigma.as_ref().map(|s| s.to_string()),
                        "classes": class_names(&classes),
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
                }
                _ => {
                    writeln!(out, "states    {}", d.n())?;
                    writeln!(out, "letters   {}", d.alphabet().len())?;
                    writeln!(out, "kappa     {kappa}")?;
                    if let Some(s) = sigma {
                        writeln!(out, "sigma     {s}")?;
                    }
                    writeln!(out, "classes   {{{}}}", class_names(&classes).join(","))?;
                }
            }
        }
        Command::Enumerate {
            set,
            n,
            count_only,
            extended,
        } => {
            let f = allow("enumerate", cli.format, &[Text, Json])?;
            if *count_only {
                let c = count_predicate(*set, *n, *extended)?;
                match f {
                    Json => writeln!(out, "{}", json!({"set": set, "n": n, "count": c}))?,
                    _ => writeln!(out, "{c}")?,
                }
            } else {
                let e = enumerate_predicate(*set, *n, *extended)?;
                match f {
                    Json => writeln!(
                        out,
                        "{}",
                        json!({"set": set, "n": n, "count": e.count(), "elements": e.elements})
                    )?,
                    _ => {
                        for t in &e.elements {
                            writeln!(out, "{t}")?;
                        }
                        writeln!(out, "# {} elements", e.count())?;
                    }
                }
            }
        }
        Command::Pairs {
            class,
            n,
            multiplicity,
            candidate,
        } => {
            let f = allow("pairs", cli.format, &[Text, Json])?;
            let r = conflict_pairs(
                *class,
                *n,
                PairOptions {
                    multiplicity: *multiplicity,
                    candidate: *candidate,
                },
            )?;
            let invalid = r.certificates.iter().filter(|c| !c.revalidate()).count();
            match f {
                Json => {
                    for c in &r.certificates {
                        writeln!(out, "{}", serde_json::to_string(c)?)?;
                    }
                }
                _ => {
                    writeln!(
                        out,
                        "{}-free n={}: |{}| = {}, |{}| = {}, difference {}",
                        class,
                        n,
                        r.bound_set,
                        r.bound_size,
                        r.candidate_set,
                        r.candidate_size,
                        r.difference_size()
                    )?;
                    for c in &r.certificates {
                        write!(out, "{} <-> {}  via {}", c.s, c.t, c.witness)?;
                        match c.t_multiplicity {
                            Some(m) => writeln!(out, "  ({m} partners)")?,
                            None => writeln!(out)?,
                        }
                    }
                    for s in &r.unmatched {
                        writeln!(out, "{s} has no partner")?;
                    }
                    if *multiplicity {
                        let found = if r.matching.is_some() {
                            "found"
                        } else {
                            "none"
                        };
                        writeln!(out, "distinct partners: {found}")?;
                    }
                    if let Some(cmp) = compare_with_printed(&r) {
                        writeln!(
                            out,
                            "printed pairs: same set {}, all conflict {}, first hits differ in {}",
                            cmp.same_difference_set,
                            cmp.all_pairs_conflict,
                            cmp.first_hit_differences.len()
                        )?;
                    }
                    writeln!(out, "revalidation failures: {invalid}")?;
                }
            }
            if !r.unmatched.is_empty() || invalid > 0 {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Reverse { file, dot } => {
            let d = read_dfa(file)?;
            if *dot {
                let subsets = crate::automata::determinize(&crate::automata::reverse(&d), true)?;
                write!(out, "{}", dfa_to_dot(&minimize(subsets.dfa()), false))?;
                return Ok(EXIT_OK);
            }
            let (kappa, subsets) = reversal_complexity(&d)?;
            match allow("reverse", cli.format, &[Text, Json, Dot])? {
                Json => writeln!(out, "{}", json!({"kappa": kappa, "subset_states": subsets}))?,
                Dot => write!(out, "{}", nfa_to_dot(&crate::automata::reverse(&d), false))?,
                _ => writeln!(out, "{kappa}")?,
            }
        }
        Command::RevBound { class, n } => {
            let r = verify_reversal_bound(*class, *n)?;
            match allow("rev-bound", cli.format, &[Text, Json])? {
                Json => writeln!(out, "{}", serde_json::to_string(&r)?)?,
                _ => writeln!(
                    out,
                    "kappa {} bound {} meets {} reverse-deterministic {}",
                    r.kappa, r.bound, r.meets, r.reverse_deterministic
                )?,
            }
            if !r.meets {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Tables { which, check } => {
            let t = reproduce_table(*which, *check)?;
            match allow("tables", cli.format, &[Csv, Json])? {
                Json => writeln!(out, "{}", serde_json::to_string_pretty(&t)?)?,
                _ => write!(out, "{}", t.to_csv())?,
            }
            if !t.ok() {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Trees { m, h, rooted } => {
            let v = if *rooted {
                trees_s_rooted(*m, *h)?
            } else {
                trees_s(*m, *h)?
            };
            writeln!(out, "{v}")?;
        }
    }
    Ok(EXIT_OK)
}
