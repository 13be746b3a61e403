//! Command-line front end. [`execute`] runs a parsed [`Cli`] against
//! explicit streams and returns the process exit code.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::density::Sign;
use crate::error::Error;
use crate::generators::FamilySpec;
use crate::graph::{parse_edge_list, ClusterLabeling, Instance};
use crate::graph6::{parse_graph6, to_graph6};
use crate::measures::{qd, DiscordReport};
use crate::oracle::{
    exhaustive_equivalence, qd_oracle_sweep, sampled_equivalence, VerificationSummary, MAX_EXHAUSTIVE_ORDER,
};
use crate::report::{to_csv_row, to_json, to_plain, ReportRecord, CSV_HEADER};
use crate::search::{search_labelings, SearchMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DIMENSION: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "graph-discord", version, about = "Combinatorial quantum discord of graph states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate QD for one graph and labeling.
    Compute(ComputeArgs),
    /// Search labelings for the smallest and largest QD.
    Classify(ClassifyArgs),
    /// Check the counting measures against direct matrix products.
    Verify(VerifyArgs),
    /// Emit a generated family member as an edge list.
    Generate(GenerateArgs),
    /// Evaluate QD for every graph6 line on standard input.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    L,
    Q,
    Both,
}

impl SignArg {
    pub fn signs(self) -> Vec<Sign> {
        match self {
            SignArg::L => vec![Sign::Laplacian],
            SignArg::Q => vec![Sign::Signless],
            SignArg::Both => Sign::BOTH.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge-list file, `-` for standard input.
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    pub input: Option<PathBuf>,
    /// Generated family instead of a file.
    #[arg(long)]
    pub family: Option<String>,
    /// Family parameters, e.g. `n=3,r=2,seed=1`.
    #[arg(long, default_value = "")]
    pub params: String,
    /// Number of clusters; overrides the input.
    #[arg(long)]
    pub m: Option<usize>,
    /// Cluster size; overrides the input.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// `natural`, `random`, or a file holding a 1-based permutation.
    #[arg(long)]
    pub labeling: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    pub sign: SignArg,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// `exhaustive` or `random`; defaults to exhaustive when N <= 8.
    #[arg(long)]
    pub labeling: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    pub sign: SignArg,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Labelings sampled in random mode.
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest matrix order; orders above 3 are sampled.
    #[arg(long, default_value_t = 3)]
    pub order: usize,
    /// Random pairs per sampled order.
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random graphs whose QD is compared with the matrix-product value.
    #[arg(long, default_value_t = 0)]
    pub graphs: u64,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value = "")]
    pub params: String,
    /// Write graph6 instead of an edge list.
    #[arg(long)]
    pub graph6: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "both")]
    pub sign: SignArg,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Also report the minimum QD over all labelings (N <= 8).
    #[arg(long)]
    pub minimize: bool,
}

/// Failure carried to the exit code.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::VertexOutOfRange { .. } | Error::SelfPair(_) | Error::NotBijective(_) => {
            EXIT_PARSE
        }
        Error::Dimension(_) => EXIT_DIMENSION,
        _ => EXIT_FAILURE,
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs one command. Reports go to `out`, warnings and errors to `err`.
pub fn execute(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Compute(a) => compute(a, stdin, out),
        Command::Classify(a) => classify(a, stdin, out),
        Command::Verify(a) => verify(a, out),
        Command::Generate(a) => generate(a, out),
        Command::Enumerate(a) => enumerate(a, stdin, out, err),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_PARSE
        }
        Err(Failure::Mismatch) => {
            let _ = writeln!(err, "error: verification found mismatches");
            EXIT_MISMATCH
        }
    }
}

fn read_source(path: &PathBuf, stdin: &mut dyn BufRead) -> std::result::Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
    }
}

/// Loads the instance and a display id, applying any `--m`/`--n` override.
fn load(input: &InputArgs, stdin: &mut dyn BufRead) -> std::result::Result<(Instance, String), Failure> {
    let (inst, id) = match (&input.input, &input.family) {
        (Some(path), _) => {
            let doc = parse_edge_list(&read_source(path, stdin)?)?;
            let id = path.display().to_string();
            let count = doc.graph.vertex_count();
            let (m, n) = if input.m.is_none() && input.n.is_none() {
                resolve_shape(Some(doc.m), Some(doc.n), count)?
            } else {
                resolve_shape(input.m, input.n, count)?
            };
            let labeling = match &doc.permutation {
                Some(p) => ClusterLabeling::new(m, n, p)?,
                None => ClusterLabeling::natural(m, n)?,
            };
            (Instance::new(doc.graph, labeling)?, id)
        }
        (None, Some(name)) => {
            let inst = FamilySpec::parse(name, &input.params)?.generate()?;
            if input.m.is_none() && input.n.is_none() {
                (inst, name.clone())
            } else {
                let (m, n) = resolve_shape(input.m, input.n, inst.graph.vertex_count())?;
                let labeling = ClusterLabeling::from_zero_based(m, n, inst.labeling.permutation().to_vec())?;
                (Instance::new(inst.graph, labeling)?, name.clone())
            }
        }
        (None, None) => return Err(Error::InvalidParameter("need --input or --family".into()).into()),
    };
    Ok((inst, id))
}

/// Fills in a missing `m` or `n` from the vertex count and checks `m*n = N`.
fn resolve_shape(m: Option<usize>, n: Option<usize>, count: usize) -> crate::error::Result<(usize, usize)> {
    let derive = |k: usize| {
        if k == 0 || count % k != 0 {
            Err(Error::Dimension(format!("{k} does not divide N = {count}")))
        } else {
            Ok(count / k)
        }
    };
    let (m, n) = match (m, n) {
        (Some(m), Some(n)) => (m, n),
        (Some(m), None) => (m, derive(m)?),
        (None, Some(n)) => (derive(n)?, n),
        (None, None) => return Err(Error::Dimension("cluster shape unknown".into())),
    };
    if m * n != count {
        return Err(Error::Dimension(format!("m*n = {} but N = {count}", m * n)));
    }
    Ok((m, n))
}

fn read_permutation(text: &str) -> crate::error::Result<Vec<usize>> {
    let body = text
        .lines()
        .map(str::trim)
        .find(|l| l.starts_with("perm:"))
        .map(|l| &l["perm:".len()..])
        .unwrap_or(text);
    body.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::parse(1, format!("bad permutation entry {t:?}")))
        })
        .collect()
}

fn emit_reports(out: &mut dyn Write, id: &str, reports: &[DiscordReport], format: Format) -> std::io::Result<()> {
    for r in reports {
        match format {
            Format::Json => writeln!(out, "{}", to_json(r))?,
            Format::Csv => writeln!(out, "{}", to_csv_row(id, r))?,
            Format::Plain => writeln!(out, "{}", to_plain(id, r))?,
        }
    }
    Ok(())
}

fn compute(a: &ComputeArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Outcome {
    let (mut inst, id) = load(&a.input, stdin)?;
    let (m, n) = (inst.labeling.m(), inst.labeling.n());
    match a.labeling.as_deref() {
        None => {}
        Some("natural") => inst.labeling = ClusterLabeling::natural(m, n)?,
        Some("random") => {
            let mut order: Vec<usize> = (0..m * n).collect();
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(a.seed));
            inst.labeling = ClusterLabeling::from_zero_based(m, n, order)?;
        }
        Some("exhaustive") => {
            return Err(Error::InvalidParameter("exhaustive labeling search is the classify command".into()).into())
        }
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
            inst.labeling = ClusterLabeling::new(m, n, &read_permutation(&text)?)?;
        }
    }
    let reports = a
        .sign
        .signs()
        .into_iter()
        .map(|s| qd(&inst.graph, &inst.labeling, s))
        .collect::<crate::error::Result<Vec<_>>>()?;
    if a.format == Format::Csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    emit_reports(out, &id, &reports, a.format)?;
    Ok(())
}

fn classify(a: &ClassifyArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Outcome {
    let (inst, id) = load(&a.input, stdin)?;
    let count = inst.graph.vertex_count();
    let mode = match a.labeling.as_deref() {
        None => SearchMode::auto(count),
        Some("exhaustive") => SearchMode::Exhaustive,
        Some("random") => SearchMode::Sampled,
        Some(other) => {
            return Err(Error::InvalidParameter(format!("classify labeling must be exhaustive or random, got {other:?}")).into())
        }
    };
    let results = search_labelings(
        &inst.graph,
        inst.labeling.m(),
        inst.labeling.n(),
        &a.sign.signs(),
        mode,
        a.trials,
        a.seed,
    )?;
    if a.format == Format::Csv {
        writeln!(out, "graph_id,m,n,s,mode,searched,min_qd,max_qd,zero_found")?;
    }
    for r in &results {
        match a.format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(r).expect("plain data"))?,
            Format::Csv => writeln!(
                out,
                "{id},{},{},{},{},{},{},{},{}",
                r.m,
                r.n,
                r.s,
                if r.mode == SearchMode::Exhaustive { "exhaustive" } else { "sampled" },
                r.searched,
                r.min.qd,
                r.max.qd,
                r.zero_found
            )?,
            Format::Plain => writeln!(
                out,
                "{id} s={:+} searched={} min={} at {:?} max={} at {:?} zero_found={}",
                r.s, r.searched, r.min.qd, r.min.witness, r.max.qd, r.max.witness, r.zero_found
            )?,
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SuiteLine<'a> {
    suite: &'a str,
    #[serde(flatten)]
    summary: &'a VerificationSummary,
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let mut suites = Vec::new();
    let exhaustive = exhaustive_equivalence(a.order.min(MAX_EXHAUSTIVE_ORDER))?;
    suites.push(("matrices", exhaustive));
    if a.order > MAX_EXHAUSTIVE_ORDER {
        suites.push((
            "matrices",
            sampled_equivalence(MAX_EXHAUSTIVE_ORDER + 1..=a.order, a.trials, a.seed),
        ));
    }
    if a.graphs > 0 {
        suites.push(("graphs", qd_oracle_sweep(&[(a.m, a.n)], a.graphs, a.seed)?));
    }
    if a.format == Format::Csv {
        writeln!(out, "suite,mode,checked,mismatches,seed")?;
    }
    for (name, s) in &suites {
        match a.format {
            Format::Json => writeln!(
                out,
                "{}",
                serde_json::to_string(&SuiteLine { suite: name, summary: s }).expect("plain data")
            )?,
            Format::Csv => writeln!(
                out,
                "{name},{},{},{},{}",
                json!(s.mode).as_str().unwrap_or_default(),
                s.checked,
                s.mismatches,
                s.seed
            )?,
            Format::Plain => writeln!(
                out,
                "{name} {}: checked {} mismatches {} seed {}",
                json!(s.mode).as_str().unwrap_or_default(),
                s.checked,
                s.mismatches,
                s.seed
            )?,
        }
    }
    if suites.iter().all(|(_, s)| s.passed()) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn generate(a: &GenerateArgs, out: &mut dyn Write) -> Outcome {
    let inst = FamilySpec::parse(&a.family, &a.params)?.generate()?;
    if a.graph6 {
        writeln!(out, "{}", to_graph6(&inst.graph)?)?;
    } else {
        writeln!(out, "# family={} params={}", a.family, a.params.trim())?;
        write!(out, "{}", inst.to_edge_list())?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CensusRecord<'a> {
    index: usize,
    graph_id: &'a str,
    reports: Vec<ReportRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_qd: Option<Vec<u64>>,
}

fn enumerate(a: &EnumerateArgs, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let signs = a.sign.signs();
    let natural = ClusterLabeling::natural(a.m, a.n)?;
    if a.minimize && a.m * a.n > crate::search::MAX_EXHAUSTIVE_VERTICES {
        return Err(Error::SearchCap("--minimize needs m*n <= 8".into()).into());
    }
    if a.format == Format::Csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    let (mut records, mut skipped, mut edgeless) = (0usize, 0usize, 0usize);
    for (idx, line) in stdin.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = match parse_graph6(&line) {
            Ok(g) if g.vertex_count() == natural.vertex_count() => g,
            Ok(g) => {
                writeln!(
                    err,
                    "warning: line {}: {} vertices, expected {}; skipped",
                    idx + 1,
                    g.vertex_count(),
                    natural.vertex_count()
                )?;
                skipped += 1;
                continue;
            }
            Err(e) => {
                writeln!(err, "warning: line {}: {e}; skipped", idx + 1)?;
                skipped += 1;
                continue;
            }
        };
        let id = line.trim().trim_start_matches(">>graph6<<");
        if g.total_degree() == 0 {
            writeln!(err, "warning: line {}: edgeless graph has no density matrix; skipped", idx + 1)?;
            edgeless += 1;
            continue;
        }
        let reports = signs
            .iter()
            .map(|&s| qd(&g, &natural, s))
            .collect::<crate::error::Result<Vec<_>>>()?;
        let min_qd = if a.minimize {
            let found = search_labelings(&g, a.m, a.n, &signs, SearchMode::Exhaustive, 0, 0)?;
            Some(found.iter().map(|r| r.min.qd).collect())
        } else {
            None
        };
        match a.format {
            Format::Json => {
                let rec = CensusRecord {
                    index: idx + 1,
                    graph_id: id,
                    reports: reports.iter().map(ReportRecord::from).collect(),
                    min_qd,
                };
                writeln!(out, "{}", serde_json::to_string(&rec).expect("plain data"))?;
            }
            Format::Csv | Format::Plain => {
                emit_reports(out, id, &reports, a.format)?;
                if let (Format::Plain, Some(mins)) = (a.format, &min_qd) {
                    writeln!(out, "{id} min_qd={mins:?}")?;
                }
            }
        }
        records += 1;
    }
    writeln!(err, "enumerated {records} graphs, skipped {skipped} malformed, {edgeless} edgeless")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_resolution() {
        assert_eq!(resolve_shape(Some(2), None, 6).unwrap(), (2, 3));
        assert_eq!(resolve_shape(None, Some(2), 6).unwrap(), (3, 2));
        assert!(matches!(resolve_shape(Some(4), None, 6), Err(Error::Dimension(_))));
        assert!(matches!(resolve_shape(Some(2), Some(2), 6), Err(Error::Dimension(_))));
    }

    #[test]
    fn permutation_files() {
        assert_eq!(read_permutation("perm: 2 1 3\n").unwrap(), vec![2, 1, 3]);
        assert_eq!(read_permutation("3 1 2").unwrap(), vec![3, 1, 2]);
        assert!(read_permutation("1 x").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::parse(1, "x")), EXIT_PARSE);
        assert_eq!(exit_code(&Error::Dimension("x".into())), EXIT_DIMENSION);
        assert_eq!(exit_code(&Error::EmptyGraph), EXIT_FAILURE);
    }
}
