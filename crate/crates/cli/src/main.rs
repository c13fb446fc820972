//! `weylsmooth`: cells, smoothness verdicts, closed-form checks and tableaux from
//! the command line.
//!
//! Exit status is 0 when every check passes, 1 on a mismatch against a closed
//! form, and 2 on a usage or input error.

mod render;

use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use weylsmooth::av;
use weylsmooth::cells::{self, Side};
use weylsmooth::closed_forms;
use weylsmooth::smoothness;
use weylsmooth::tableaux::rs_insert;
use weylsmooth::weyl::DEFAULT_INTERVAL_CAP;
use weylsmooth::{CartanType, Error, Family, RootSystem, SignedSequence, WeylElement};

use render::{document, element_json, element_text, elements_json, to_value, w0_form, Format};

#[derive(Debug, Parser)]
#[command(name = "weylsmooth", version, about = "Weyl group cells and Schubert variety smoothness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Debug, Args)]
struct ConfigArgs {
    /// Family letter (A-G), or a full type such as `E6`.
    #[arg(long = "type", global = true)]
    cartan_type: Option<String>,
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// Generator index of the cell; all nodes when omitted.
    #[arg(long, global = true)]
    node: Option<usize>,
    /// `c` for the right cell itself, `w0` for its translate by the longest element.
    #[arg(long, global = true, default_value = "c")]
    side: Side,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Allow subsystem enumeration in E7 and E8.
    #[arg(long, global = true)]
    extended: bool,
    /// Largest lower interval the Poincaré oracle will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_INTERVAL_CAP)]
    oracle_cap: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ElementArgs {
    /// Reduced or unreduced word (`3 2 3 4`, `2,1`, `w0 3 2 1`) or a one-line form `(-2,-3,1)`.
    #[arg(short = 'w', long = "word", allow_hyphen_values = true)]
    word: Option<String>,
    /// One-line form, with or without parentheses.
    #[arg(long = "one-line", allow_hyphen_values = true)]
    one_line: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the elements of C_i or w0 C_i.
    Cells,
    /// Decide smoothness of one Schubert variety.
    Smooth(ElementArgs),
    /// Check cells, smooth sets and representatives against their closed forms.
    Verify,
    /// Associated-variety representative of an element of w0 C.
    Av(ElementArgs),
    /// Insertion and recording tableaux of a one-line form.
    Rs(ElementArgs),
    /// Poincaré polynomial of the lower Bruhat interval.
    Oracle(ElementArgs),
}

struct RunConfig {
    rs: Arc<RootSystem>,
    node: Option<usize>,
    side: Side,
    format: Format,
    extended: bool,
    oracle_cap: usize,
}

/// How a successful run ended.
enum Outcome {
    Pass,
    Mismatch,
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(Error::NonUniqueMinimum { .. }) => 1,
            _ => 2,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        anyhow::Error::from(error).into()
    }
}

fn main() -> ExitCode {
    // Fixed level: the tool reads no environment variables.
    env_logger::Builder::new().filter_level(log::LevelFilter::Warn).format_timestamp(None).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn resolve(args: &ConfigArgs) -> anyhow::Result<RunConfig> {
    let text = args.cartan_type.as_deref().ok_or_else(|| anyhow!("--type is required"))?;
    let ct = match (text.parse::<Family>(), args.rank) {
        (Ok(family), Some(rank)) => CartanType::new(family, rank)?,
        (Ok(_), None) => bail!("--rank is required with a bare family letter"),
        (Err(_), rank) => {
            let ct: CartanType = text.parse()?;
            if rank.is_some_and(|r| r != ct.rank()) {
                bail!("--rank {} contradicts --type {text}", rank.unwrap_or_default());
            }
            ct
        }
    };
    if let Some(node) = args.node {
        if node == 0 || node > ct.rank() {
            return Err(Error::InvalidNode { node, rank: ct.rank() }.into());
        }
    }
    Ok(RunConfig {
        rs: RootSystem::shared(ct),
        node: args.node,
        side: args.side,
        format: args.format,
        extended: args.extended,
        oracle_cap: args.oracle_cap,
    })
}

fn element(cfg: &RunConfig, args: &ElementArgs) -> anyhow::Result<WeylElement> {
    if let Some(word) = &args.word {
        return WeylElement::parse(&cfg.rs, word).with_context(|| format!("cannot read element `{word}`"));
    }
    let raw = args.one_line.as_deref().unwrap_or_default().trim();
    let wrapped = if raw.starts_with('(') { raw.to_string() } else { format!("({raw})") };
    let seq: SignedSequence = wrapped.parse().with_context(|| format!("cannot read one-line form `{raw}`"))?;
    Ok(WeylElement::from_one_line(&cfg.rs, &seq)?)
}

fn nodes(cfg: &RunConfig) -> Vec<usize> {
    match cfg.node {
        Some(i) => vec![i],
        None => (1..=cfg.rs.rank()).collect(),
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let cfg = resolve(&cli.config)?;
    match &cli.command {
        Command::Cells => cmd_cells(&cfg),
        Command::Smooth(e) => cmd_smooth(&cfg, &element(&cfg, e)?),
        Command::Verify => cmd_verify(&cfg),
        Command::Av(e) => cmd_av(&cfg, &element(&cfg, e)?),
        Command::Rs(e) => cmd_rs(&cfg, &element(&cfg, e)?),
        Command::Oracle(e) => cmd_oracle(&cfg, &element(&cfg, e)?),
    }
}

fn emit(cfg: &RunConfig, command: &str, results: Vec<Value>, text: impl FnOnce() -> String) {
    match cfg.format {
        Format::Json => println!("{}", document(cfg.rs.cartan_type(), command, results)),
        Format::Text => print!("{}", text()),
    }
}

fn cmd_cells(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let ct = cfg.rs.cartan_type();
    let listings =
        nodes(cfg).into_iter().map(|i| cells::cell(&cfg.rs, i, cfg.side)).collect::<weylsmooth::Result<Vec<_>>>()?;
    let results = listings
        .iter()
        .map(|c| {
            json!({
                "node": c.descriptor.node,
                "side": c.descriptor.side.to_string(),
                "size": c.len(),
                "elements": elements_json(&c.elements),
            })
        })
        .collect();
    emit(cfg, "cells", results, || {
        let mut out = String::new();
        for c in &listings {
            out += &format!("{}_{} of {ct}: {} elements\n", c.descriptor.side, c.descriptor.node, c.len());
            for w in &c.elements {
                let extra =
                    if c.descriptor.side == Side::W0Cell { format!("  = {}", w0_form(w)) } else { String::new() };
                out += &format!("  {}{extra}\n", element_text(w));
            }
        }
        out
    });
    Ok(Outcome::Pass)
}

fn cmd_smooth(cfg: &RunConfig, w: &WeylElement) -> Result<Outcome, Failure> {
    let verdict = smoothness::is_smooth(w, cfg.extended)?;
    let results = vec![json!({
        "element": element_json(w),
        "smooth": verdict.smooth,
        "engine": to_value(&verdict.engine),
        "witness": to_value(&verdict.witness),
    })];
    emit(cfg, "smooth", results, || {
        let status = if verdict.smooth { "smooth" } else { "singular" };
        let mut out = format!("{}\n{status} (engine {})\n", element_text(w), verdict.engine);
        if let Some(witness) = &verdict.witness {
            out += &format!("witness: {witness}\n");
        }
        out
    });
    Ok(Outcome::Pass)
}

/// Per-node checks: cell against its closed form and tabulated size, smooth
/// part of the translate, and the named minimal representative.
fn verify_node(cfg: &RunConfig, i: usize) -> Result<(Value, Vec<String>, bool), Failure> {
    let rs = &cfg.rs;
    let ct = rs.cartan_type();
    let mut ok = true;
    let mut lines = Vec::new();

    let (cell_size, cell_ok) = match cells::right_cell(rs, i) {
        Ok(c) => (Some(c.len()), true),
        Err(e @ Error::CellMismatch { .. }) => {
            lines.push(format!("  {e}"));
            (None, false)
        }
        Err(e) => return Err(e.into()),
    };
    let expected_size = cells::classical_cell_size(ct, i);
    let size_ok = cell_ok && expected_size.is_none_or(|s| Some(s) == cell_size);
    ok &= size_ok;
    lines.push(format!(
        "  cell C_{i}: {} elements{} [{}]",
        cell_size.map_or("?".to_string(), |s| s.to_string()),
        expected_size.map_or(String::new(), |s| format!(" (expected {s})")),
        if size_ok { "ok" } else { "MISMATCH" }
    ));

    let smooth = match closed_forms::expected_smooth_set(rs, i)? {
        Some(mut expected) => {
            cells::sort_elements(&mut expected);
            let computed = smoothness::smooth_elements_of_cell(rs, i, cfg.extended)?;
            let matches = computed == expected;
            ok &= matches;
            lines.push(format!(
                "  smooth part of w0C_{i}: {} computed, {} expected [{}]",
                computed.len(),
                expected.len(),
                if matches { "ok" } else { "MISMATCH" }
            ));
            if !matches {
                for w in &computed {
                    lines.push(format!("    computed {}", w0_form(w)));
                }
                for w in &expected {
                    lines.push(format!("    expected {}", w0_form(w)));
                }
            }
            json!({ "computed": elements_json(&computed), "expected": elements_json(&expected), "match": matches })
        }
        None => {
            lines.push(format!("  smooth part of w0C_{i}: no closed form"));
            Value::Null
        }
    };

    let data = av::av_cell(rs, i)?;
    let named = closed_forms::expected_min_representative(rs, i)?;
    let unique = data.min_length_elements.len() == 1;
    let av_match = named.as_ref().map(|e| unique && data.min_length_elements[0] == *e);
    if let Some(m) = av_match {
        ok &= m;
    }
    let mins: Vec<String> = data.min_length_elements.iter().map(w0_form).collect();
    lines.push(format!(
        "  minimal elements of w0C_{i}: {}{}{}",
        mins.join(", "),
        named.as_ref().map_or(String::new(), |e| format!(" (named {})", w0_form(e))),
        match av_match {
            Some(true) => " [ok]",
            Some(false) => " [MISMATCH]",
            None => "",
        }
    ));
    let result = json!({
        "node": i,
        "cell_size": cell_size,
        "expected_cell_size": expected_size,
        "smooth": smooth,
        "av": {
            "min_length_elements": elements_json(&data.min_length_elements),
            "max_length_elements": elements_json(&data.max_length_elements),
            "expected_min": named.as_ref().map(element_json),
            "match": av_match,
        },
    });
    Ok((result, lines, ok))
}

fn cmd_verify(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let ct = cfg.rs.cartan_type();
    let mut results = Vec::new();
    let mut text = String::new();
    let mut all_ok = true;
    for i in nodes(cfg) {
        let (value, lines, ok) = verify_node(cfg, i)?;
        all_ok &= ok;
        results.push(value);
        text += &format!("{ct} node {i}: {}\n", if ok { "PASS" } else { "FAIL" });
        for l in lines {
            text += &l;
            text.push('\n');
        }
    }
    text += if all_ok { "PASS\n" } else { "FAIL\n" };
    emit(cfg, "verify", results, || text);
    Ok(if all_ok { Outcome::Pass } else { Outcome::Mismatch })
}

fn cmd_av(cfg: &RunConfig, w: &WeylElement) -> Result<Outcome, Failure> {
    let res = av::av_representative(w)?;
    let results = vec![json!({
        "element": element_json(w),
        "node": res.node,
        "representative_min": element_json(&res.representative_min),
        "representative_max": res.representative_max.as_ref().map(element_json),
        "irreducible": res.irreducible,
    })];
    emit(cfg, "av", results, || {
        let mut out = format!("{} lies in w0C_{}\n", element_text(w), res.node);
        out += &format!("w_min = {}  {}\n", w0_form(&res.representative_min), element_text(&res.representative_min));
        if let Some(max) = &res.representative_max {
            out += &format!("w_max = {}  {}\n", w0_form(max), element_text(max));
        }
        out
    });
    Ok(Outcome::Pass)
}

fn cmd_rs(cfg: &RunConfig, w: &WeylElement) -> Result<Outcome, Failure> {
    let line = w.one_line()?;
    let (p, q) = rs_insert(line.entries())?;
    let results = vec![json!({
        "element": element_json(w),
        "p": p.rows,
        "q": q.rows,
        "shape": p.shape(),
    })];
    emit(cfg, "rs", results, || format!("{}\nP (shape {:?}):\n{p}\nQ:\n{q}\n", element_text(w), p.shape()));
    Ok(Outcome::Pass)
}

fn cmd_oracle(cfg: &RunConfig, w: &WeylElement) -> Result<Outcome, Failure> {
    let p = smoothness::poincare(w, cfg.oracle_cap)?;
    let results = vec![json!({
        "element": element_json(w),
        "coefficients": p.coefficients,
        "palindromic": p.is_palindromic(),
        "interval_size": p.evaluate_at_one(),
    })];
    emit(cfg, "oracle", results, || {
        let verdict = if p.is_palindromic() { "palindromic" } else { "not palindromic" };
        format!("{}\n{p}\n{verdict}\n", element_text(w))
    });
    Ok(Outcome::Pass)
}
