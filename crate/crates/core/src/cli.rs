//! Command-line front end. [`run`] takes the argument list and returns the
//! exit code: 0 success, 1 usage or input error, 2 a domain-negative answer
//! (the sequence is not a tree eccentric sequence), 3 an internal assertion
//! that failed.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::enumerate::{
    audit_formulas, caterpillars_with_sequence, explore_conjecture, free_trees_with_codes,
    random_tree, trees_with_sequence, verify_all, verify_extremal, verify_order_diameter,
    with_jobs, Budget, EnumError,
};
use crate::extremal::{extremal_tree, max_subtrees_value, min_wiener_derivation, ExtremalError};
use crate::invariants::{invariant_report, subtree_count, wiener, wiener_pairwise};
use crate::seq::{EccSequence, SequenceError, Validity};
use crate::transform::{apply_move, find_move};
use crate::tree::Tree;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub const DEFAULT_LAMBDAS: &[f64] = &[1.0, 1.5, 2.0, 3.0];
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "ecctree",
    version,
    about = "Trees with a prescribed eccentric sequence"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Largest order enumerated exhaustively.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    /// Allow --max-n up to 14.
    #[arg(long, global = true)]
    pub extended: bool,
    /// Comma-separated exponents for W(T; lambda).
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        global = true
    )]
    pub lambda: Option<Vec<f64>>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a sequence is the eccentric sequence of a tree.
    Validate { sequence: String },
    /// Build the extremal caterpillar with its Wiener index and subtree count.
    Extremal { sequence: String },
    /// Every index of the tree in a tree file ("-" reads stdin).
    Invariants { file: PathBuf },
    /// Check the construction against every tree with the same sequence.
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        sequence: Option<String>,
        /// Every sequence of order 3..=max-n.
        #[arg(long)]
        all: bool,
    },
    /// Check the order-and-diameter caterpillar against every tree of order
    /// N and diameter D.
    OrderDiameter { n: usize, d: usize },
    /// Printed closed forms against derivations and brute force.
    Audit,
    /// Hyper-Wiener and W(T; lambda) minimisers per sequence.
    Explore,
    /// Rewrite a tree into a caterpillar with the same eccentric sequence.
    Caterpillarize {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<PathBuf>,
        /// Start from a random tree on this many vertices (see --seed).
        #[arg(long)]
        random: Option<usize>,
    },
    /// Number of nonisomorphic caterpillars with a sequence.
    Count { sequence: String },
    /// List the free trees of an order, or those with a sequence.
    Trees {
        #[arg(required_unless_present = "sequence", conflicts_with = "sequence")]
        n: Option<usize>,
        #[arg(long)]
        sequence: Option<String>,
    },
}

/// Result of one invocation, before anything is written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn out(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Debug)]
struct Failure(i32, String);

fn enum_failure(e: EnumError) -> Failure {
    let code = match &e {
        EnumError::Sequence(_) => EXIT_NEGATIVE,
        EnumError::Extremal(ExtremalError::Sequence(_)) => EXIT_NEGATIVE,
        EnumError::Extremal(ExtremalError::ConstructionMismatch { .. }) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    };
    Failure(code, e.to_string())
}

fn extremal_failure(e: ExtremalError) -> Failure {
    enum_failure(EnumError::Extremal(e))
}

/// Parses a sequence; a gap between values is a domain answer, anything
/// else malformed is a usage error.
fn parse_sequence(text: &str) -> Result<EccSequence, Failure> {
    EccSequence::parse(text).map_err(|e| {
        let code = match e {
            SequenceError::Gap(..) => EXIT_NEGATIVE,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    })
}

fn read_tree(path: &PathBuf) -> Result<Tree, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure(EXIT_USAGE, format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    }
    Tree::parse(&text).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialise");
    s.push('\n');
    s
}

fn budget(g: &Global) -> Result<Budget, Failure> {
    let max = g.max_n.unwrap_or(crate::enumerate::DEFAULT_MAX_N);
    Budget::new(max, g.extended).map_err(enum_failure)
}

fn lambdas(g: &Global) -> Vec<f64> {
    g.lambda.clone().unwrap_or_else(|| DEFAULT_LAMBDAS.to_vec())
}

/// Parses `args` (program name first) and runs the command.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::out(EXIT_OK, text)
            };
        }
    };
    let jobs = cli.global.jobs;
    match with_jobs(jobs, || dispatch(&cli)) {
        Ok(Ok(o)) => o,
        Ok(Err(Failure(code, msg))) => Outcome::fail(code, msg),
        Err(e) => Outcome::fail(EXIT_USAGE, e),
    }
}

/// Runs the command line and writes its output; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let o = execute(args);
    // a closed pipe is not worth a second error
    let _ = out.write_all(o.stdout.as_bytes());
    let _ = err.write_all(o.stderr.as_bytes());
    o.code
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Validate { sequence } => cmd_validate(g, sequence),
        Command::Extremal { sequence } => cmd_extremal(g, sequence),
        Command::Invariants { file } => cmd_invariants(g, file),
        Command::Verify { sequence, all } => cmd_verify(g, sequence.as_deref(), *all),
        Command::OrderDiameter { n, d } => cmd_order_diameter(g, *n, *d),
        Command::Audit => cmd_audit(g),
        Command::Explore => cmd_explore(g),
        Command::Caterpillarize { file, random } => cmd_caterpillarize(g, file.as_ref(), *random),
        Command::Count { sequence } => cmd_count(g, sequence),
        Command::Trees { n, sequence } => cmd_trees(g, *n, sequence.as_deref()),
    }
}

fn cmd_validate(g: &Global, text: &str) -> Result<Outcome, Failure> {
    let (sequence, reason, detail) = match EccSequence::parse(text) {
        Ok(s) => {
            let v = s.validate();
            let reason = match v {
                Validity::Valid => None,
                Validity::Invalid(r) => Some(r.to_string()),
            };
            (Some(s), reason, None)
        }
        Err(e @ SequenceError::Gap(..)) => (None, Some("Gap".to_string()), Some(e.to_string())),
        Err(e) => return Err(Failure(EXIT_USAGE, e.to_string())),
    };
    let valid = reason.is_none();
    let code = if valid { EXIT_OK } else { EXIT_NEGATIVE };
    let stdout = match g.format {
        Format::Json => to_json(&json!({
            "input": text,
            "sequence": sequence,
            "valid": valid,
            "reason": reason,
            "detail": detail,
        })),
        Format::Text => match (&reason, &sequence) {
            (None, Some(s)) => format!("valid: {s} (n = {})\n", s.len()),
            (Some(r), _) => match detail {
                Some(d) => format!("invalid: {r} ({d})\n"),
                None => format!("invalid: {r}\n"),
            },
            (None, None) => unreachable!("a valid answer always has a sequence"),
        },
    };
    Ok(Outcome::out(code, stdout))
}

fn cmd_extremal(g: &Global, text: &str) -> Result<Outcome, Failure> {
    let s = parse_sequence(text)?;
    let t = extremal_tree(&s).map_err(extremal_failure)?;
    let w = min_wiener_derivation(&s).map_err(extremal_failure)?;
    let n_sub = max_subtrees_value(&s).map_err(extremal_failure)?;
    let (q, pendants) = s
        .extremal_params()
        .map_err(|e| Failure(EXIT_NEGATIVE, e.to_string()))?;
    let oracle_w = wiener_pairwise(&t);
    let oracle_n = subtree_count(&t);
    if oracle_w as i64 != w || oracle_n != n_sub {
        return Err(Failure(
            EXIT_INTERNAL,
            format!("closed forms W = {w}, N = {n_sub} disagree with the tree (W = {oracle_w}, N = {oracle_n})"),
        ));
    }
    let stdout = match g.format {
        Format::Json => to_json(&json!({
            "sequence": s,
            "n": t.order(),
            "q": q,
            "pendants": pendants,
            "wiener": w,
            "subtrees": n_sub.to_string(),
            "tree": t.to_tree_file(),
        })),
        Format::Text => format!(
            "# sequence {s}\n# q = {q}, pendants {pendants:?}\n# W = {w}\n# N = {n_sub}\n{t}"
        ),
    };
    Ok(Outcome::out(EXIT_OK, stdout))
}

fn cmd_invariants(g: &Global, file: &PathBuf) -> Result<Outcome, Failure> {
    let t = read_tree(file)?;
    let r = invariant_report(&t, &lambdas(g)).map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
    let code = if r.relation_residuals.all_zero() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    };
    let stdout = match g.format {
        Format::Json => to_json(&r),
        Format::Text => {
            let mut s = format!(
                "n                  {}\nW                  {}\nN                  {}\nW_e                {}\nW'_e               {}\nW_ve               {}\nW_+ (Schultz)      {}\nW_- (Gutman)       {}\nHW                 {}\n",
                r.n,
                r.wiener,
                r.subtrees,
                r.edge_wiener,
                r.edge_wiener_line,
                r.vertex_edge_wiener,
                r.schultz,
                r.gutman,
                r.hyper_wiener
            );
            for (l, v) in &r.wiener_lambda {
                s.push_str(&format!("{:<19}{}\n", format!("W(T; {l})"), v));
            }
            s.push_str(&format!(
                "relations          {}\n",
                if r.relation_residuals.all_zero() {
                    "hold"
                } else {
                    "VIOLATED"
                }
            ));
            s
        }
    };
    Ok(Outcome::out(code, stdout))
}

fn cmd_verify(g: &Global, sequence: Option<&str>, all: bool) -> Result<Outcome, Failure> {
    let b = budget(g)?;
    if all {
        let reports = verify_all(&b).map_err(enum_failure)?;
        let failed = reports.iter().filter(|r| !r.confirms()).count();
        let code = if failed == 0 { EXIT_OK } else { EXIT_INTERNAL };
        let stdout = match g.format {
            Format::Json => to_json(&json!({
                "max_n": b.max_n(),
                "sequences": reports.len(),
                "confirmed": reports.len() - failed,
                "reports": reports,
            })),
            Format::Text => {
                let mut s = format!(
                    "{:<28} {:>6} {:>8} {:>12}  {}\n",
                    "sequence", "trees", "min W", "max N", "status"
                );
                for r in &reports {
                    s.push_str(&format!(
                        "{:<28} {:>6} {:>8} {:>12}  {}\n",
                        r.sequence.to_string(),
                        r.trees_examined,
                        r.min_wiener.value,
                        r.max_subtrees.value.to_string(),
                        if r.confirms() { "ok" } else { "FAILED" }
                    ));
                }
                s.push_str(&format!(
                    "{} of {} sequences confirmed for n <= {}\n",
                    reports.len() - failed,
                    reports.len(),
                    b.max_n()
                ));
                s
            }
        };
        return Ok(Outcome::out(code, stdout));
    }
    let s = parse_sequence(sequence.expect("clap requires a sequence without --all"))?;
    let r = verify_extremal(&s, &b).map_err(enum_failure)?;
    let code = if r.confirms() { EXIT_OK } else { EXIT_INTERNAL };
    let stdout = match g.format {
        Format::Json => to_json(&r),
        Format::Text => format!("{r}"),
    };
    Ok(Outcome::out(code, stdout))
}

fn cmd_order_diameter(g: &Global, n: usize, d: usize) -> Result<Outcome, Failure> {
    let r = verify_order_diameter(n, d, &budget(g)?).map_err(enum_failure)?;
    let code = if r.confirms() { EXIT_OK } else { EXIT_INTERNAL };
    let stdout = match g.format {
        Format::Json => to_json(&r),
        Format::Text => format!(
            "order {n}, diameter {d}: {} trees, min W {} ({} achiever(s)), max N {} ({} achiever(s)), construction {}\n",
            r.trees_examined,
            r.min_wiener.value,
            r.min_wiener.achievers.len(),
            r.max_subtrees.value,
            r.max_subtrees.achievers.len(),
            if r.confirms() { "is the unique optimum" } else { "is NOT the unique optimum" }
        ),
    };
    Ok(Outcome::out(code, stdout))
}

fn cmd_audit(g: &Global) -> Result<Outcome, Failure> {
    let a = audit_formulas(budget(g)?.max_n()).map_err(enum_failure)?;
    let code = if a.is_sound() { EXIT_OK } else { EXIT_INTERNAL };
    let stdout = match g.format {
        Format::Json => to_json(&a),
        Format::Text => format!("{a}\n"),
    };
    Ok(Outcome::out(code, stdout))
}

fn cmd_explore(g: &Global) -> Result<Outcome, Failure> {
    let r = explore_conjecture(&budget(g)?, &lambdas(g)).map_err(enum_failure)?;
    let stdout = match g.format {
        Format::Json => to_json(&r),
        Format::Text => format!("{r}\n"),
    };
    Ok(Outcome::out(EXIT_OK, stdout))
}

#[derive(Serialize)]
struct MoveRecord {
    path: Vec<usize>,
    pivot: usize,
    hub: usize,
    moved: Vec<usize>,
    target: usize,
    wiener_delta: i64,
}

fn cmd_caterpillarize(
    g: &Global,
    file: Option<&PathBuf>,
    random: Option<usize>,
) -> Result<Outcome, Failure> {
    let start = match (file, random) {
        (Some(f), _) => read_tree(f)?,
        (None, Some(n)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
            random_tree(n, &mut rng).map_err(enum_failure)?
        }
        (None, None) => unreachable!("clap requires a file or --random"),
    };
    let sequence = start.eccentric_sequence();
    let (w0, n0) = (wiener(&start), subtree_count(&start));
    let mut cur = start.clone();
    let mut moves = Vec::new();
    while let Some(m) = find_move(&cur) {
        let predicted = m.predicted_wiener_delta(&cur);
        let next = apply_move(&cur, &m).map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))?;
        let actual = wiener(&next) as i64 - wiener(&cur) as i64;
        if actual != predicted || next.eccentric_sequence() != sequence {
            return Err(Failure(
                EXIT_INTERNAL,
                format!(
                    "move at hub {} broke an invariant (W delta {actual}, predicted {predicted})",
                    m.hub
                ),
            ));
        }
        moves.push(MoveRecord {
            path: m.path,
            pivot: m.pivot,
            hub: m.hub,
            moved: m.moved,
            target: m.target,
            wiener_delta: actual,
        });
        cur = next;
    }
    let (w1, n1): (u64, BigUint) = (wiener(&cur), subtree_count(&cur));
    let stdout = match g.format {
        Format::Json => to_json(&json!({
            "sequence": sequence,
            "input": start.to_tree_file(),
            "output": cur.to_tree_file(),
            "wiener_before": w0,
            "wiener_after": w1,
            "subtrees_before": n0.to_string(),
            "subtrees_after": n1.to_string(),
            "moves": moves,
        })),
        Format::Text => {
            let mut s = format!("# sequence {sequence}\n# W {w0} -> {w1}\n# N {n0} -> {n1}\n");
            for m in &moves {
                s.push_str(&format!(
                    "# move: hub {} off v_{} = {}, {:?} -> {}, dW {}\n",
                    m.hub, m.pivot, m.path[m.pivot], m.moved, m.target, m.wiener_delta
                ));
            }
            s.push_str(&cur.to_tree_file());
            s
        }
    };
    Ok(Outcome::out(EXIT_OK, stdout))
}

fn cmd_count(g: &Global, text: &str) -> Result<Outcome, Failure> {
    let s = parse_sequence(text)?;
    let reason = match s.validate() {
        Validity::Valid => None,
        Validity::Invalid(r) => Some(r.to_string()),
    };
    let count = caterpillars_with_sequence(&s).len();
    let code = if reason.is_none() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    let stdout = match g.format {
        Format::Json => to_json(&json!({
            "sequence": s,
            "valid": reason.is_none(),
            "reason": reason,
            "caterpillars": count,
        })),
        Format::Text => match &reason {
            None => format!("{count}\n"),
            Some(r) => format!("0 (invalid: {r})\n"),
        },
    };
    Ok(Outcome::out(code, stdout))
}

fn cmd_trees(g: &Global, n: Option<usize>, sequence: Option<&str>) -> Result<Outcome, Failure> {
    let b = budget(g)?;
    let (n, coded): (usize, Vec<(String, Tree)>) = match (n, sequence) {
        (_, Some(text)) => {
            let s = parse_sequence(text)?;
            b.check(s.len()).map_err(enum_failure)?;
            let trees = trees_with_sequence(&s).map_err(enum_failure)?;
            (
                s.len(),
                trees
                    .into_iter()
                    .map(|t| (t.canonical_code().to_string(), t))
                    .collect(),
            )
        }
        (Some(n), None) => {
            b.check(n).map_err(enum_failure)?;
            let coded = free_trees_with_codes(n).map_err(enum_failure)?;
            (
                n,
                coded.into_iter().map(|(c, t)| (c.to_string(), t)).collect(),
            )
        }
        (None, None) => unreachable!("clap requires an order or --sequence"),
    };
    let stdout = match g.format {
        Format::Json => to_json(&json!({
            "n": n,
            "count": coded.len(),
            "trees": coded
                .iter()
                .map(|(c, t)| json!({ "code": c, "tree": t.to_tree_file() }))
                .collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = format!("# {} tree(s) on {n} vertices\n", coded.len());
            for (c, t) in &coded {
                s.push_str(&format!("\n# {c}\n{t}"));
            }
            s
        }
    };
    Ok(Outcome::out(EXIT_OK, stdout))
}
