//! Command-line front end: JSON/polynomial-text input, deterministic
//! canonical output, and the cross-oracle `verify` and `selftest` commands.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse or validation
//! error.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::dichromatic::{
    r1_forest_expansion, r1_recursive, r1_tree_expansion, r_recursive, r_statesum,
};
use crate::graph::{EdgeOrder, SignedMultigraph, WeightedGraph};
use crate::homfly::{homflypt_to_r, parse_homfly, r_to_homflypt, render_homfly};
use crate::link::{homotopy_polynomial, hp_via_dichromatic, BraidWord, LinkingMatrix};
use crate::poly::{parse_hpoly, parse_qlaurent, render_flat, render_grouped, HPoly, QSubst};
use crate::qlie::{
    jacobi_defect, normal_form, qbracket_lie, render_group_elem, render_word_sum, Deformation,
    FormMatrix, GroupAlgElem, TensorWordSum,
};
use crate::verify::{batch_verify, check_matrix, CheckResult};
use crate::young::{recover_from_w1, recover_linking};

#[derive(Parser)]
#[command(
    name = "qskein",
    version,
    about = "Exact homotopy-polynomial link invariants and dichromatic graph polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Homotopy polynomial of a link given by its linking matrix
    Hp(HpArgs),
    /// Linking matrix (or homotopy polynomial) of a braid closure
    Braid(BraidArgs),
    /// Dichromatic polynomial of a signed or weighted graph
    Graphpoly(GraphpolyArgs),
    /// Recover linking numbers from a homotopy polynomial or from w1
    Recover(RecoverArgs),
    /// Convert between dichromatic and HOMFLYPT polynomials
    Convert(ConvertArgs),
    /// q-Lie bracket, Jacobi spot checks and PBW normal forms
    Qlie(QlieArgs),
    /// Cross-oracle verification on one matrix or a seeded random batch
    Verify(VerifyArgs),
    /// Built-in fixture suite
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum HpMethod {
    /// Direct acyclic-subset formula
    Formula,
    /// Deletion-contraction on the signed graph
    Graph,
}

#[derive(Args)]
struct HpArgs {
    /// JSON linking matrix {"n": int, "matrix": [[int, ...], ...]}
    #[arg(long, value_name = "FILE")]
    matrix: PathBuf,
    #[arg(long, value_enum, default_value = "formula")]
    method: HpMethod,
    /// Specialize to q = 1
    #[arg(long)]
    q1: bool,
    #[arg(long)]
    json: bool,
    /// One monomial per term instead of grouped coefficients
    #[arg(long)]
    flat: bool,
}

#[derive(Args)]
struct BraidArgs {
    /// JSON braid word {"strands": int, "word": [int, ...]}
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Print the linking matrix of the closure instead of its polynomial
    #[arg(long)]
    emit_matrix: bool,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    flat: bool,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["signed", "weighted"])))]
struct GraphpolyArgs {
    /// JSON signed multigraph; methods: recursion|statesum
    #[arg(long, value_name = "FILE")]
    signed: Option<PathBuf>,
    /// JSON weighted graph; methods: recursion|tree|forest
    #[arg(long, value_name = "FILE")]
    weighted: Option<PathBuf>,
    #[arg(long)]
    method: String,
    /// Edge order for the activity expansions: lex|id|random:SEED
    #[arg(long)]
    order: Option<String>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    flat: bool,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["hp", "w1"])))]
struct RecoverArgs {
    /// Homotopy polynomial text, e.g. "q^2 t^2 + q t z"
    #[arg(long, value_name = "POLY", allow_hyphen_values = true)]
    hp: Option<String>,
    /// The w1 coefficient alone (polynomial in q); needs --lk
    #[arg(long, value_name = "POLY", requires = "lk", allow_hyphen_values = true)]
    w1: Option<String>,
    /// Total linking number accompanying --w1
    #[arg(long, allow_negative_numbers = true)]
    lk: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertTarget {
    Homflypt,
    Dichromatic,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["r", "p"])))]
struct ConvertArgs {
    /// Dichromatic polynomial text (variables q, t, z)
    #[arg(long, value_name = "POLY", allow_hyphen_values = true)]
    r: Option<String>,
    /// HOMFLYPT polynomial text (variables v, z)
    #[arg(long, value_name = "POLY", allow_hyphen_values = true)]
    p: Option<String>,
    /// Number of link components (= vertices of the graph)
    #[arg(long)]
    components: usize,
    #[arg(long, value_enum)]
    to: ConvertTarget,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    flat: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symq,
    Envq,
    Envqz,
}

impl From<ModeArg> for Deformation {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Symq => Deformation::SymQ,
            ModeArg::Envq => Deformation::EnvQ,
            ModeArg::Envqz => Deformation::EnvQz,
        }
    }
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("action").required(true).args(["bracket", "normalize", "jacobi"])))]
struct QlieArgs {
    /// JSON form matrix {"r": int, "F": [[int, ...], ...]}
    #[arg(long, value_name = "FILE")]
    form: PathBuf,
    /// Bracket of two group elements, e.g. "1,0;0,1"
    #[arg(long, value_name = "G;H")]
    bracket: Option<String>,
    /// JSON word file to normalize; needs --mode
    #[arg(long, value_name = "FILE", requires = "mode")]
    normalize: Option<PathBuf>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Check the Jacobi identity on random triples
    #[arg(long)]
    jacobi: bool,
    /// Number of random triples for --jacobi
    #[arg(long, default_value = "100")]
    random: usize,
    #[arg(long, default_value = "0")]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["matrix", "random"])))]
struct VerifyArgs {
    /// Run the oracle panel on one linking matrix
    #[arg(long, value_name = "FILE")]
    matrix: Option<PathBuf>,
    /// Run a random batch of this many matrices and graphs
    #[arg(long, value_name = "COUNT")]
    random: Option<usize>,
    #[arg(long, default_value = "0")]
    seed: u64,
    /// Write the batch report to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long)]
    json: bool,
}

/// Word-file schema shared by `qlie --normalize` input and output.
#[derive(Serialize, Deserialize)]
struct WordFile {
    words: Vec<WordEntry>,
}

#[derive(Serialize, Deserialize)]
struct WordEntry {
    coeff: String,
    letters: Vec<Vec<i64>>,
}

struct CliError(String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn bad(msg: impl std::fmt::Display) -> CliError {
    CliError(msg.to_string())
}

/// Parses the argument list and executes; returns
/// `(exit code, stdout, stderr)`. All output is deterministic for fixed
/// inputs and seeds.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string(), String::new());
            }
            return (2, String::new(), e.to_string());
        }
    };
    match execute(cli) {
        Ok((out, code)) => (code, out, String::new()),
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}

fn execute(cli: Cli) -> Result<(String, i32), CliError> {
    match cli.command {
        Command::Hp(args) => cmd_hp(args),
        Command::Braid(args) => cmd_braid(args),
        Command::Graphpoly(args) => cmd_graphpoly(args),
        Command::Recover(args) => cmd_recover(args),
        Command::Convert(args) => cmd_convert(args),
        Command::Qlie(args) => cmd_qlie(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Selftest(args) => cmd_selftest(args),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))
}

fn poly_output(p: &HPoly, json: bool, flat: bool) -> String {
    if json {
        let value = serde_json::json!({
            "polynomial": render_flat(p),
            "grouped": render_grouped(p),
        });
        format!("{value}\n")
    } else if flat {
        format!("{}\n", render_flat(p))
    } else {
        format!("{}\n", render_grouped(p))
    }
}

fn cmd_hp(args: HpArgs) -> Result<(String, i32), CliError> {
    let m: LinkingMatrix = read_json(&args.matrix)?;
    let mut p = match args.method {
        HpMethod::Formula => homotopy_polynomial(&m),
        HpMethod::Graph => hp_via_dichromatic(&m),
    };
    if args.q1 {
        p = p.substitute_q(QSubst::One);
    }
    Ok((poly_output(&p, args.json, args.flat), 0))
}

fn cmd_braid(args: BraidArgs) -> Result<(String, i32), CliError> {
    let b: BraidWord = read_json(&args.input)?;
    let m = b.linking_matrix();
    if args.emit_matrix {
        let text = serde_json::to_string(&m).map_err(bad)?;
        Ok((format!("{text}\n"), 0))
    } else {
        Ok((
            poly_output(&homotopy_polynomial(&m), args.json, args.flat),
            0,
        ))
    }
}

fn parse_order(spec: Option<&str>, g: &WeightedGraph) -> Result<EdgeOrder, CliError> {
    match spec.unwrap_or("lex") {
        "lex" => Ok(EdgeOrder::lex(g)),
        "id" => Ok(EdgeOrder::by_id(g.edges().len())),
        other => {
            if let Some(seed) = other.strip_prefix("random:") {
                let seed: u64 = seed
                    .parse()
                    .map_err(|_| bad(format!("bad seed in '{other}'")))?;
                Ok(EdgeOrder::random(g.edges().len(), seed))
            } else {
                Err(bad(format!(
                    "unknown order '{other}' (expected lex|id|random:SEED)"
                )))
            }
        }
    }
}

fn cmd_graphpoly(args: GraphpolyArgs) -> Result<(String, i32), CliError> {
    let p = if let Some(path) = &args.signed {
        let g: SignedMultigraph = read_json(path)?;
        match args.method.as_str() {
            "recursion" => r_recursive(&g),
            "statesum" => r_statesum(&g).map_err(bad)?,
            other => {
                return Err(bad(format!(
                    "unknown method '{other}' for signed graphs (expected recursion|statesum)"
                )))
            }
        }
    } else {
        let g: WeightedGraph = read_json(args.weighted.as_ref().expect("clap group"))?;
        let order = parse_order(args.order.as_deref(), &g)?;
        match args.method.as_str() {
            "recursion" => r1_recursive(&g),
            "tree" => r1_tree_expansion(&g, &order).map_err(bad)?,
            "forest" => r1_forest_expansion(&g, &order).map_err(bad)?,
            other => {
                return Err(bad(format!(
                    "unknown method '{other}' for weighted graphs (expected recursion|tree|forest)"
                )))
            }
        }
    };
    Ok((poly_output(&p, args.json, args.flat), 0))
}

fn cmd_recover(args: RecoverArgs) -> Result<(String, i32), CliError> {
    let value = if let Some(text) = &args.hp {
        let p = parse_hpoly(text).map_err(bad)?;
        let r = recover_linking(&p).map_err(bad)?;
        serde_json::to_value(&r).map_err(bad)?
    } else {
        let w1 = parse_qlaurent(args.w1.as_ref().expect("clap group")).map_err(bad)?;
        let lk = args.lk.expect("clap requires");
        let nonzero = recover_from_w1(&w1, lk).map_err(bad)?;
        serde_json::json!({ "lk": lk, "nonzero": nonzero })
    };
    Ok((format!("{value}\n"), 0))
}

fn cmd_convert(args: ConvertArgs) -> Result<(String, i32), CliError> {
    if args.components == 0 {
        return Err(bad("--components must be at least 1"));
    }
    let m = args.components - 1;
    match (&args.r, &args.p, args.to) {
        (Some(text), None, ConvertTarget::Homflypt) => {
            let r = parse_hpoly(text).map_err(bad)?;
            let p = r_to_homflypt(&r, m).map_err(bad)?;
            let rendered = render_homfly(&p);
            let out = if args.json {
                format!("{}\n", serde_json::json!({ "polynomial": rendered }))
            } else {
                format!("{rendered}\n")
            };
            Ok((out, 0))
        }
        (None, Some(text), ConvertTarget::Dichromatic) => {
            let p = parse_homfly(text).map_err(bad)?;
            let r = homflypt_to_r(&p, m).map_err(bad)?;
            Ok((poly_output(&r, args.json, args.flat), 0))
        }
        (Some(_), None, ConvertTarget::Dichromatic) => Err(bad(
            "--r provides a dichromatic polynomial; use --to homflypt",
        )),
        (None, Some(_), ConvertTarget::Homflypt) => Err(bad(
            "--p provides a HOMFLYPT polynomial; use --to dichromatic",
        )),
        _ => unreachable!("clap group guarantees exactly one input"),
    }
}

fn parse_vector(text: &str, rank: usize) -> Result<Vec<i64>, CliError> {
    let cleaned = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    let v: Result<Vec<i64>, _> = cleaned
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect();
    let v = v.map_err(|_| bad(format!("cannot parse vector '{text}'")))?;
    if v.len() != rank {
        return Err(bad(format!(
            "vector '{text}' has length {}, expected {rank}",
            v.len()
        )));
    }
    Ok(v)
}

fn word_sum_from_file(file: &WordFile, rank: usize) -> Result<TensorWordSum, CliError> {
    let mut w = TensorWordSum::zero(rank);
    for entry in &file.words {
        let coeff = parse_hpoly(&entry.coeff).map_err(bad)?;
        if coeff.deg_t().unwrap_or(0) > 0 {
            return Err(bad(format!(
                "coefficient '{}' must not contain t",
                entry.coeff
            )));
        }
        w.add_word(entry.letters.clone(), &coeff).map_err(bad)?;
    }
    Ok(w)
}

fn word_sum_to_file(w: &TensorWordSum) -> WordFile {
    WordFile {
        words: w
            .iter()
            .map(|(letters, coeff)| WordEntry {
                coeff: render_flat(coeff),
                letters: letters.clone(),
            })
            .collect(),
    }
}

fn random_group_elem(rng: &mut impl Rng, rank: usize) -> GroupAlgElem {
    let mut e = GroupAlgElem::zero(rank);
    for _ in 0..rng.gen_range(1..=2) {
        let v: Vec<i64> = (0..rank).map(|_| rng.gen_range(-3..=3)).collect();
        e.add_term(
            v,
            &crate::poly::QLaurent::constant(rng.gen_range(-2..=2i64)),
        );
    }
    e
}

fn cmd_qlie(args: QlieArgs) -> Result<(String, i32), CliError> {
    let form: FormMatrix = read_json(&args.form)?;
    if let Some(spec) = &args.bracket {
        let (g, h) = spec
            .split_once(';')
            .ok_or_else(|| bad("--bracket expects \"g;h\" with comma-separated entries"))?;
        let g = GroupAlgElem::basis(parse_vector(g, form.rank())?);
        let h = GroupAlgElem::basis(parse_vector(h, form.rank())?);
        let result = qbracket_lie(&g, &h, &form).map_err(bad)?;
        let rendered = render_group_elem(&result);
        let out = if args.json {
            format!("{}\n", serde_json::json!({ "result": rendered }))
        } else {
            format!("{rendered}\n")
        };
        return Ok((out, 0));
    }
    if let Some(path) = &args.normalize {
        let file: WordFile = read_json(path)?;
        let w = word_sum_from_file(&file, form.rank())?;
        let mode: Deformation = args.mode.expect("clap requires").into();
        let nf = normal_form(&w, &form, mode).map_err(bad)?;
        let out = if args.json {
            format!(
                "{}\n",
                serde_json::to_string(&word_sum_to_file(&nf)).map_err(bad)?
            )
        } else {
            format!("{}\n", render_word_sum(&nf))
        };
        return Ok((out, 0));
    }
    // --jacobi
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
    for i in 0..args.random {
        let x = random_group_elem(&mut rng, form.rank());
        let y = random_group_elem(&mut rng, form.rank());
        let z = random_group_elem(&mut rng, form.rank());
        let defect = jacobi_defect(&x, &y, &z, &form).map_err(bad)?;
        if !defect.is_zero() {
            let out = format!(
                "FAIL jacobi defect nonzero on triple {i}: {}\n",
                render_group_elem(&defect)
            );
            return Ok((out, 1));
        }
    }
    let out = if args.json {
        format!(
            "{}\n",
            serde_json::json!({ "triples": args.random, "seed": args.seed, "defect": "0" })
        )
    } else {
        format!(
            "jacobi defect zero on {} random triples (rank {}, seed {})\n",
            args.random,
            form.rank(),
            args.seed
        )
    };
    Ok((out, 0))
}

fn render_check_lines(results: &[CheckResult]) -> (String, i32) {
    let mut out = String::new();
    let mut failures = 0;
    for r in results {
        if r.passed {
            out.push_str(&format!("ok {}\n", r.name));
        } else {
            failures += 1;
            out.push_str(&format!(
                "FAIL {}: {}\n",
                r.name,
                r.detail.as_deref().unwrap_or("")
            ));
        }
    }
    out.push_str(&format!(
        "{} checks, {} failures\n",
        results.len(),
        failures
    ));
    (out, if failures == 0 { 0 } else { 1 })
}

fn cmd_verify(args: VerifyArgs) -> Result<(String, i32), CliError> {
    if let Some(path) = &args.matrix {
        let m: LinkingMatrix = read_json(path)?;
        let results = check_matrix(&m);
        if args.json {
            let code = if results.iter().all(|r| r.passed) {
                0
            } else {
                1
            };
            return Ok((
                format!("{}\n", serde_json::to_string(&results).map_err(bad)?),
                code,
            ));
        }
        return Ok(render_check_lines(&results));
    }
    let count = args.random.expect("clap group");
    let report = batch_verify(args.seed, count);
    let code = if report.passed { 0 } else { 1 };
    let text = serde_json::to_string(&report).map_err(bad)?;
    if let Some(path) = &args.out {
        std::fs::write(path, format!("{text}\n"))
            .map_err(|e| bad(format!("{}: {e}", path.display())))?;
        let summary = format!(
            "{}: {} checks on {} matrices and {} graphs, {} failures\n",
            if report.passed { "ok" } else { "FAIL" },
            report.checks_run,
            report.matrices_checked,
            report.graphs_checked,
            report.failures.len()
        );
        Ok((summary, code))
    } else {
        Ok((format!("{text}\n"), code))
    }
}

fn selftest_fixtures() -> Vec<(&'static str, bool)> {
    let mut out = Vec::new();

    let m_a = LinkingMatrix::from_upper(3, &[2, 3, -2]).unwrap();
    out.push((
        "three_component_polynomial_a",
        render_grouped(&homotopy_polynomial(&m_a))
            == "q^6 t^3 + (q + 2 q^3 + 2 q^5 - q^7 - q^9) t^2 z - (q^4 + 2 q^6 + q^8) t z^2",
    ));

    let m_b = LinkingMatrix::from_upper(3, &[4, -1, 0]).unwrap();
    out.push((
        "three_component_polynomial_b",
        render_grouped(&homotopy_polynomial(&m_b))
            == "q^6 t^3 + (q^-1 + q + q^3 + q^5 - q^7) t^2 z - (1 + q^2 + q^4 + q^6) t z^2",
    ));

    out.push((
        "w1_closed_form",
        crate::young::w1_from_linking(&m_a)
            == parse_qlaurent("q + 2 q^3 + 2 q^5 - q^7 - q^9").unwrap(),
    ));

    let w1 = parse_qlaurent("-q^3 - q + 2 q^-1").unwrap();
    out.push((
        "mirror_w1",
        w1.subst_neg_inverse() == parse_qlaurent("q^-3 + q^-1 - 2 q").unwrap(),
    ));
    out.push((
        "recover_from_w1",
        recover_from_w1(&w1, 0).ok() == Some([1, 1, -2].into_iter().collect()),
    ));

    let path = LinkingMatrix::from_upper(4, &[1, 0, 0, 1, 0, 1]).unwrap();
    let star = LinkingMatrix::from_upper(4, &[1, 1, 1, 0, 0, 0]).unwrap();
    let cube = parse_hpoly("t").unwrap() * parse_hpoly("q^2 t + q z").unwrap().pow(3);
    out.push((
        "unit_trees",
        homotopy_polynomial(&path) == cube && homotopy_polynomial(&star) == cube,
    ));

    let hopf_r = parse_hpoly("q^2 t^2 + q t z").unwrap();
    out.push((
        "hopf_homflypt",
        r_to_homflypt(&hopf_r, 1).ok() == parse_homfly("(v - v^3) z^-1 + v z").ok(),
    ));

    let form = FormMatrix::new(vec![vec![0, 1], vec![-1, 0]]).unwrap();
    let word = TensorWordSum::word(vec![vec![0, 1], vec![1, 0]], HPoly::one()).unwrap();
    let nf = normal_form(&word, &form, Deformation::EnvQz).unwrap();
    out.push((
        "pbw_single_step",
        render_word_sum(&nf) == "(q^-2) (1,0)(x)(0,1) + (-q^-1 z) (1,1)",
    ));

    out.push((
        "unlink_values",
        homotopy_polynomial(&LinkingMatrix::zero(3)) == parse_hpoly("t^3").unwrap()
            && homotopy_polynomial(&LinkingMatrix::zero(0)) == HPoly::one(),
    ));

    out
}

fn cmd_selftest(args: SelftestArgs) -> Result<(String, i32), CliError> {
    let fixtures = selftest_fixtures();
    let failures = fixtures.iter().filter(|(_, ok)| !ok).count();
    if args.json {
        let value: Vec<serde_json::Value> = fixtures
            .iter()
            .map(|(name, ok)| serde_json::json!({ "name": name, "passed": ok }))
            .collect();
        let code = if failures == 0 { 0 } else { 1 };
        return Ok((format!("{}\n", serde_json::Value::Array(value)), code));
    }
    let mut out = String::new();
    for (name, ok) in &fixtures {
        out.push_str(&format!("{} {}\n", if *ok { "ok" } else { "FAIL" }, name));
    }
    out.push_str(&format!(
        "{} fixtures, {} failures\n",
        fixtures.len(),
        failures
    ));
    Ok((out, if failures == 0 { 0 } else { 1 }))
}
