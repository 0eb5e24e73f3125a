//! Command dispatch.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hdecomp::closure::{
    check_corollary, check_split_theorem, enumerate_closed_sets, forward_chain, ClosureSystem, ItemStatus, LatticeViolation,
    DEFAULT_LIMIT,
};
use hdecomp::connectivity::body_connected_components;
use hdecomp::decomposition::{
    build_factor_tree, build_tree, find_split, validate_factor_tree, validate_htree, BuildOutcome, FactorTree, HTree,
};
use hdecomp::oracle::{self, oracle_body_components, oracle_closed_sets, oracle_has_split, oracle_is_hdecomposable};
use hdecomp::{Dihypergraph, Error, VertexSet};
use serde_json::{json, Value};

use crate::parse::parse;
use crate::tree_io::{tree_from_json, tree_to_dot, tree_to_json, tree_to_text, TreeJsonError};

#[derive(Parser)]
#[command(name = "hdecomp", version, about = "Split decomposition of directed hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Common {
    /// Instance file, or `-` for standard input
    input: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Largest vertex count for closed-set enumeration
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build the H-tree, or report the body-connected part that blocks it
    Decompose(Common),
    /// Build the tree with body-connected factor leaves
    Factors(Common),
    /// List the closed sets, or the closure of `--set`
    Closure {
        #[command(flatten)]
        common: Common,
        /// Vertex names separated by commas or spaces
        #[arg(long)]
        set: Option<String>,
    },
    /// Check a JSON tree against the instance
    Verify {
        #[command(flatten)]
        common: Common,
        tree: PathBuf,
    },
    /// Relate the closed sets of the instance to those of a split's sides
    CheckSplit {
        #[command(flatten)]
        common: Common,
        /// Vertices of the first side; the rest form the second
        #[arg(long)]
        u1: String,
    },
    /// Check that the closed sets form a meet-sublattice of the product of
    /// the factor closure systems
    CheckCorollary(Common),
    /// Compare the library against brute-force references
    Oracle(Common),
}

/// Why a command did not produce an answer.
enum Failure {
    Usage(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GroundSetTooLarge { .. } | Error::InstanceTooLarge { .. } => Failure::Limit(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line `args` (program name first) and returns the exit
/// code: 0 success, 1 negative answer, 2 input or usage error, 3 size
/// limit exceeded.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Limit(m)) => {
            let _ = writeln!(err, "error: {m}");
            3
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text)).map(|_| ())
    };
    res.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load(path: &Path) -> Result<Dihypergraph, Failure> {
    let text = read(path)?;
    parse(&text).map_err(|e| Failure::Usage(format!("{}:{e}", path.display())))
}

fn names(h: &Dihypergraph, list: &str) -> Result<VertexSet, Failure> {
    let parts = list.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty());
    Ok(h.vertex_set(parts)?)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(format!("writing output: {e}")))
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    emit(out, &format!("{v}\n"))
}

fn no_dot(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(Failure::Usage(format!("DOT output is only available for trees, not for {what}")))
    } else {
        Ok(())
    }
}

fn set_json(h: &hdecomp::Universe, s: &VertexSet) -> Value {
    json!(h.set_names(s))
}

fn system_json(f: &ClosureSystem) -> Value {
    json!(f.names())
}

fn system_lines(f: &ClosureSystem) -> String {
    f.sets().iter().map(|s| format!("{}\n", f.display_set(s))).collect()
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Decompose(c) => decompose(&c, out),
        Command::Factors(c) => {
            let h = load(&c.input)?;
            write_tree(&build_factor_tree(&h), c.format, out)?;
            Ok(0)
        }
        Command::Closure { common, set } => closure(&common, set.as_deref(), out),
        Command::Verify { common, tree } => verify(&common, &tree, out),
        Command::CheckSplit { common, u1 } => check_split(&common, &u1, out),
        Command::CheckCorollary(c) => corollary(&c, out),
        Command::Oracle(c) => run_oracle(&c, out),
    }
}

fn write_tree(t: &hdecomp::Tree, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let text = match format {
        Format::Text => tree_to_text(t),
        Format::Json => tree_to_json(t) + "\n",
        Format::Dot => tree_to_dot(t),
    };
    emit(out, &text)
}

fn decompose(c: &Common, out: &mut dyn Write) -> Outcome {
    let h = load(&c.input)?;
    match build_tree(&h) {
        BuildOutcome::Tree(t) => {
            write_tree(&t, c.format, out)?;
            Ok(0)
        }
        BuildOutcome::Fail { component } => {
            if c.format == Format::Json {
                emit_json(out, &json!({"fail": "body-connected", "component": set_json(h.universe(), &component)}))?;
            } else {
                emit(out, &format!("FAIL: body-connected subhypergraph on {}\n", h.display_set(&component)))?;
            }
            Ok(1)
        }
    }
}

fn closure(c: &Common, set: Option<&str>, out: &mut dyn Write) -> Outcome {
    no_dot(c.format, "closed sets")?;
    let h = load(&c.input)?;
    if let Some(list) = set {
        let x = names(&h, list)?;
        let closed = forward_chain(&h, &x)?;
        match c.format {
            Format::Json => emit_json(out, &set_json(h.universe(), &closed))?,
            _ => emit(out, &format!("{}\n", h.display_set(&closed)))?,
        }
        return Ok(0);
    }
    let f = enumerate_closed_sets(&h, c.limit)?;
    match c.format {
        Format::Json => emit_json(out, &system_json(&f))?,
        _ => emit(out, &system_lines(&f))?,
    }
    Ok(0)
}

fn verify(c: &Common, tree_path: &Path, out: &mut dyn Write) -> Outcome {
    no_dot(c.format, "verification reports")?;
    let h = load(&c.input)?;
    let text = read(tree_path)?;
    let tree = match tree_from_json(&h, &text) {
        Ok(t) => t,
        Err(TreeJsonError::Malformed(m)) => return Err(Failure::Usage(format!("{}: {m}", tree_path.display()))),
        Err(TreeJsonError::Foreign(m)) => {
            match c.format {
                Format::Json => emit_json(out, &json!({"valid": false, "detail": m}))?,
                _ => emit(out, &format!("INVALID: {m}\n"))?,
            }
            return Ok(1);
        }
    };
    let (kind, result) = if tree.factor_count() > 0 {
        ("factor tree", validate_factor_tree(&h, &FactorTree::new(tree)))
    } else {
        let t = HTree::new(tree).expect("no factor leaves");
        ("H-tree", validate_htree(&h, &t))
    };
    let code = if result.is_ok() { 0 } else { 1 };
    match (result, c.format) {
        (Ok(()), Format::Json) => emit_json(out, &json!({"valid": true, "kind": kind}))?,
        (Ok(()), _) => emit(out, &format!("OK: valid {kind}\n"))?,
        (Err(v), Format::Json) => emit_json(
            out,
            &json!({"valid": false, "condition": v.condition.to_string(), "node": v.node.map(|n| n.0), "detail": v.detail}),
        )?,
        (Err(v), _) => emit(out, &format!("INVALID: {v}\n"))?,
    }
    Ok(code)
}

fn status_text(s: &ItemStatus) -> String {
    match s {
        ItemStatus::Violation(d) => format!("VIOLATION: {d}"),
        other => other.as_str().to_string(),
    }
}

fn check_split(c: &Common, u1: &str, out: &mut dyn Write) -> Outcome {
    no_dot(c.format, "split reports")?;
    let h = load(&c.input)?;
    let u1 = names(&h, u1)?;
    let u2 = h.vertices().difference(&u1);
    let r = check_split_theorem(&h, &u1, &u2, c.limit)?;
    match c.format {
        Format::Json => {
            let items: serde_json::Map<String, Value> =
                r.items().iter().map(|(k, s)| (k.to_string(), json!(status_text(s)))).collect();
            emit_json(
                out,
                &json!({
                    "u1": set_json(h.universe(), &u1),
                    "u2": set_json(h.universe(), &u2),
                    "closed": system_json(&r.closed),
                    "first": system_json(&r.first),
                    "second": system_json(&r.second),
                    "items": items,
                }),
            )?;
        }
        _ => {
            let mut text = format!(
                "split {} | {}\nclosed sets ({}): {}\nfirst side ({}): {}\nsecond side ({}): {}\n",
                h.display_set(&u1),
                h.display_set(&u2),
                r.closed.len(),
                r.closed,
                r.first.len(),
                r.first,
                r.second.len(),
                r.second
            );
            for (k, s) in r.items() {
                text.push_str(&format!("item ({k}): {}\n", status_text(s)));
            }
            emit(out, &text)?;
        }
    }
    Ok(if r.has_violation() { 1 } else { 0 })
}

fn corollary(c: &Common, out: &mut dyn Write) -> Outcome {
    no_dot(c.format, "corollary reports")?;
    let h = load(&c.input)?;
    let r = check_corollary(&h, c.limit)?;
    let u = h.universe();
    let witness = r.violation.as_ref().map(|v| match v {
        LatticeViolation::NotContained(s) => format!("{} is not in the product", u.display_set(s)),
        LatticeViolation::Meet(a, b) => format!("meet of {} and {} escapes", u.display_set(a), u.display_set(b)),
        LatticeViolation::Join(a, b) => format!("join of {} and {} escapes", u.display_set(a), u.display_set(b)),
    });
    match c.format {
        Format::Json => emit_json(
            out,
            &json!({
                "factors": r.factors,
                "closed": r.closed.len(),
                "product": r.product.len(),
                "meet_sublattice": r.violation.is_none(),
                "witness": witness,
            }),
        )?,
        _ => {
            let verdict = match &witness {
                None => "yes".to_string(),
                Some(w) => format!("NO ({w})"),
            };
            emit(
                out,
                &format!(
                    "factors: {}\nclosed sets: {}\nproduct of factor systems: {}\nmeet-sublattice: {verdict}\n",
                    r.factors,
                    r.closed.len(),
                    r.product.len()
                ),
            )?;
        }
    }
    Ok(if r.violation.is_none() { 0 } else { 1 })
}

fn verdict(agree: bool) -> &'static str {
    if agree {
        "agree"
    } else {
        "DISAGREE"
    }
}

fn run_oracle(c: &Common, out: &mut dyn Write) -> Outcome {
    no_dot(c.format, "oracle reports")?;
    let h = load(&c.input)?;
    let mut checks: Vec<(&str, &str)> = Vec::new();

    checks.push(("components", verdict(body_connected_components(&h) == oracle_body_components(&h)?)));

    let library_split = if h.vertex_count() < 2 { None } else { find_split(&h)? };
    checks.push(("split", verdict(library_split.is_some() == oracle_has_split(&h)?.is_some())));

    if h.vertex_count() <= oracle::DECOMPOSABLE_LIMIT {
        checks.push(("decomposable", verdict(build_tree(&h).is_tree() == oracle_is_hdecomposable(&h)?)));
    } else {
        checks.push(("decomposable", "skipped"));
    }

    let closed = enumerate_closed_sets(&h, c.limit)?;
    checks.push(("closed sets", verdict(closed == oracle_closed_sets(&h)?)));

    match c.format {
        Format::Json => {
            let m: serde_json::Map<String, Value> = checks.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            emit_json(out, &Value::Object(m))?
        }
        _ => emit(out, &checks.iter().map(|(k, v)| format!("{k}: {v}\n")).collect::<String>())?,
    }
    Ok(if checks.iter().any(|(_, v)| *v == "DISAGREE") { 1 } else { 0 })
}
