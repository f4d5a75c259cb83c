//! Command-line front end. [`run`] parses arguments and returns the exit code
//! with the text destined for stdout and stderr, so it can be driven in-process.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use whsing::brieskorn::{bci_data, fundamental_cycle_checked, maximal_ideal_cycle, BrieskornData};
use whsing::cycles::{deg_on_central, fundamental_cycle, l_n, CycleReport};
use whsing::graph::{seifert_of_graph, star_graph, ResolutionGraph, SeifertArm, SeifertInvariant};
use whsing::json as wj;
use whsing::numerics::{pg_from_series, HilbertSeries, NumericalSemigroup};
use whsing::pdmodel::case2334::{table_hypotheses, CI_HYPOTHESIS};
use whsing::pdmodel::{
    case_study_2334, multiplicity_bound, mz_criterion_weighted, pg_max, pinkham_sum, table1,
    table2, AnalyticModel, Overrides2334, PDDegreeModel, TableRow,
};
use whsing::{Error, ErrorKind};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "whsing",
    version,
    about = "Invariants of weighted homogeneous surface singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Series truncation order (and number of L_n / deg D_n terms shown).
    #[arg(long, global = true)]
    order: Option<usize>,

    /// Newline-delimited exponent tuples; one JSON line of output per tuple.
    #[arg(long, global = true)]
    batch: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
    Tsv,
}

/// Where a graph comes from: Brieskorn exponents, a Seifert invariant or a
/// graph JSON file.
#[derive(Args, Debug, Clone)]
struct Source {
    /// Brieskorn exponents a_1 ... a_m.
    exponents: Vec<u64>,

    /// Seifert invariant as `g,c0,alpha/beta,...`.
    #[arg(long)]
    seifert: Option<String>,

    /// Graph in the JSON shape printed by `graph`.
    #[arg(long = "graph-file")]
    graph_file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report for a Brieskorn complete intersection.
    Bci { exponents: Vec<u64> },
    /// The resolution graph.
    Graph(Source),
    /// Fundamental, canonical and L_n cycles.
    Cycles(Source),
    /// Geometric genus: series and Pinkham sum for exponents, Pinkham sum of a
    /// model otherwise.
    Pg {
        #[command(flatten)]
        source: Source,
        /// h0 overrides `n=h,...` on top of the hyperelliptic-max model.
        #[arg(long)]
        h0: Option<String>,
    },
    /// Largest geometric genus for the graph.
    Pgmax(Source),
    /// Hilbert series of a Brieskorn complete intersection, or of
    /// `prod (1 - t^n) / prod (1 - t^d)` given by --num / --den.
    Series {
        exponents: Vec<u64>,
        #[arg(long, value_delimiter = ',')]
        num: Vec<u64>,
        #[arg(long, value_delimiter = ',')]
        den: Vec<u64>,
    },
    /// Numerical semigroup generated by the arguments.
    Semigroup {
        generators: Vec<u64>,
        #[arg(long)]
        member: Option<u64>,
    },
    /// Γ(2,3,3,4) classification under M_X = Z_X.
    Case2334 {
        /// `h3,h4,h5,h7`; all 16 in-bounds vectors when omitted.
        #[arg(long)]
        overrides: Option<String>,
    },
    /// Special types and M_X = Z_X tables for Γ(2,3,3,4).
    Table,
}

/// Exit status and captured streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(kind: ErrorKind) -> i32 {
    match kind {
        ErrorKind::BadInput => 2,
        ErrorKind::ModelInconsistency => 3,
        ErrorKind::Internal => 4,
    }
}

fn error_json(e: &Error) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "error": e.to_string(),
        "code": exit_code(e.kind()),
    })
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let err = json!({
                    "schema_version": SCHEMA_VERSION,
                    "error": rendered.trim_end(),
                    "code": 2,
                });
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("{err}\n"),
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = match &cli.batch {
        Some(path) => run_batch(&cli, path),
        None => execute(&cli, None),
    };
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(e.kind()),
            stdout: String::new(),
            stderr: format!("{}\n", error_json(&e)),
        },
    }
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> whsing::Result<Format> {
    let f = cli.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(bad(format!(
            "format {f:?} is not available for this subcommand"
        )
        .to_lowercase()))
    }
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn with_schema(command: &str, mut v: Value) -> Value {
    let mut out = serde_json::Map::new();
    out.insert("schema_version".into(), json!(SCHEMA_VERSION));
    out.insert("command".into(), json!(command));
    if let Value::Object(m) = &mut v {
        out.append(m);
    } else {
        out.insert("result".into(), v);
    }
    Value::Object(out)
}

/// Runs the parsed command; `exponents` replaces the positional exponents in
/// batch mode.
fn execute(cli: &Cli, exponents: Option<&[u64]>) -> whsing::Result<(i32, String)> {
    let order = cli.order;
    let out = match &cli.command {
        Command::Bci { exponents: e } => {
            let e = exponents.unwrap_or(e);
            let data = bci_data(e)?;
            let report = bci_report(&data, e, order.unwrap_or(12))?;
            match format_or(cli, Format::Json, &[Format::Json, Format::Text])? {
                Format::Json => render_json(&with_schema("bci", report)),
                _ => bci_text(&report),
            }
        }
        Command::Graph(src) => {
            let input = resolve(src, exponents)?;
            let g = input.graph()?;
            match format_or(
                cli,
                Format::Json,
                &[Format::Json, Format::Dot, Format::Text],
            )? {
                Format::Dot => g.to_dot(),
                Format::Text => graph_text(&g),
                _ => render_json(&with_schema("graph", json!({ "graph": g.to_json_value() }))),
            }
        }
        Command::Cycles(src) => {
            let input = resolve(src, exponents)?;
            let report = cycles_report(&input, order.unwrap_or(12))?;
            match format_or(cli, Format::Json, &[Format::Json, Format::Text])? {
                Format::Json => render_json(&with_schema("cycles", report)),
                _ => cycles_text(&report),
            }
        }
        Command::Pg { source, h0 } => {
            let input = resolve(source, exponents)?;
            let report = pg_report(&input, h0.as_deref())?;
            match format_or(cli, Format::Json, &[Format::Json, Format::Text])? {
                Format::Json => render_json(&with_schema("pg", report)),
                _ => format!("{}\n", report["pg"]),
            }
        }
        Command::Pgmax(src) => {
            let input = resolve(src, exponents)?;
            let p = pg_max(&input.seifert()?)?;
            match format_or(cli, Format::Text, &[Format::Json, Format::Text])? {
                Format::Json => render_json(&with_schema(
                    "pgmax",
                    json!({
                        "value": wj::int(&p.value),
                        "exact": p.exact,
                        "hyperelliptic_type": p.hyperelliptic_type,
                        "label": p.label(),
                    }),
                )),
                _ if p.exact => format!("{}\n", p.value),
                _ => format!("{} ({})\n", p.value, p.label()),
            }
        }
        Command::Series {
            exponents: e,
            num,
            den,
        } => {
            let e = exponents.unwrap_or(e);
            let h = if e.is_empty() {
                if den.is_empty() && num.is_empty() {
                    return Err(bad("series needs exponents or --num/--den factors"));
                }
                HilbertSeries::from_factors(num, den)?
            } else {
                if !num.is_empty() || !den.is_empty() {
                    return Err(bad("give either exponents or --num/--den, not both"));
                }
                bci_data(e)?.hilbert_series()?
            };
            let order = order.unwrap_or(20);
            match format_or(cli, Format::Json, &[Format::Json, Format::Text])? {
                Format::Json => render_json(&with_schema("series", series_json(&h, order)?)),
                _ => format!(
                    "H(t) = {}\n     = {}\np_g = {}\n",
                    h,
                    h.expansion_pretty(order),
                    pg_from_series(&h)?
                ),
            }
        }
        Command::Semigroup { generators, member } => {
            let gens = exponents.unwrap_or(generators);
            let s = NumericalSemigroup::new(gens)?;
            let frob = s.frobenius().ok();
            let default = if member.is_some() {
                Format::Text
            } else {
                Format::Json
            };
            match format_or(cli, default, &[Format::Json, Format::Text])? {
                Format::Json => {
                    let mut v = json!({
                        "generators": gens,
                        "minimal_generators": s.minimal_generators(),
                        "multiplicity": s.multiplicity(),
                        "embedding_dimension": s.embedding_dimension(),
                        "gcd": s.gcd(),
                        "frobenius": frob,
                    });
                    if let Some(n) = member {
                        v["member"] = json!({ "n": n, "value": s.contains(*n) });
                    }
                    render_json(&with_schema("semigroup", v))
                }
                _ => match member {
                    Some(n) => format!("{}\n", s.contains(*n)),
                    None => format!(
                        "<{}>\nmultiplicity {}\nembedding dimension {}\nfrobenius {}\n",
                        join(s.minimal_generators()),
                        s.multiplicity(),
                        s.embedding_dimension(),
                        frob.map_or("undefined (gcd > 1)".to_string(), |f| f.to_string())
                    ),
                },
            }
        }
        Command::Case2334 { overrides } => match overrides {
            Some(text) => {
                let o: Overrides2334 = text.parse()?;
                let r = case_study_2334(o)?;
                match format_or(cli, Format::Json, &[Format::Json, Format::Text])? {
                    Format::Json => render_json(&with_schema("case2334", r.to_json())),
                    _ => r.to_text(),
                }
            }
            None => case_sweep(format_or(cli, Format::Json, &[Format::Json, Format::Tsv])?)?,
        },
        Command::Table => {
            let t1 = table1()?;
            let t2 = table2()?;
            match format_or(cli, Format::Tsv, &[Format::Tsv, Format::Json])? {
                Format::Json => render_json(&with_schema(
                    "table",
                    json!({
                        "special_types": t1.iter().map(row_json).collect::<Vec<_>>(),
                        "m_equals_z": t2.iter().map(row_json).collect::<Vec<_>>(),
                        "hypotheses": table_hypotheses(),
                    }),
                )),
                _ => tables_tsv(&t1, &t2),
            }
        }
    };
    Ok((0, out))
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn parse_tuple(line: &str) -> whsing::Result<Vec<u64>> {
    line.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| bad(format!("malformed exponent {t:?}")))
        })
        .collect()
}

/// One compact JSON line per tuple; the exit code is the largest error code.
fn run_batch(cli: &Cli, path: &PathBuf) -> whsing::Result<(i32, String)> {
    if matches!(cli.command, Command::Case2334 { .. } | Command::Table) {
        return Err(bad("--batch applies to subcommands that take exponents"));
    }
    if cli.format.is_some_and(|f| f != Format::Json) {
        return Err(bad("--batch writes JSON lines only"));
    }
    let text = fs::read_to_string(path)
        .map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
    let mut out = String::new();
    let mut code = 0;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v = match parse_tuple(line).and_then(|t| {
            execute(cli, Some(&t)).and_then(|(_, s)| {
                serde_json::from_str::<Value>(&s).map_err(|e| Error::Internal(e.to_string()))
            })
        }) {
            Ok(result) => json!({ "input": line, "result": result }),
            Err(e) => {
                code = code.max(exit_code(e.kind()));
                json!({ "input": line, "error": e.to_string(), "code": exit_code(e.kind()) })
            }
        };
        out.push_str(&serde_json::to_string(&v).expect("JSON values serialize"));
        out.push('\n');
    }
    Ok((code, out))
}

enum Input {
    Bci(BrieskornData),
    Seifert(SeifertInvariant),
    Graph(ResolutionGraph),
}

impl Input {
    fn graph(&self) -> whsing::Result<ResolutionGraph> {
        match self {
            Input::Bci(d) => d.graph(),
            Input::Seifert(s) => star_graph(s),
            Input::Graph(g) => Ok(g.clone()),
        }
    }

    fn seifert(&self) -> whsing::Result<SeifertInvariant> {
        match self {
            Input::Bci(d) => Ok(d.seifert()),
            Input::Seifert(s) => Ok(s.clone()),
            Input::Graph(g) => seifert_of_graph(g),
        }
    }
}

fn resolve(src: &Source, exponents: Option<&[u64]>) -> whsing::Result<Input> {
    let exps = exponents.unwrap_or(&src.exponents);
    let given = [
        !exps.is_empty(),
        src.seifert.is_some(),
        src.graph_file.is_some(),
    ];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(bad(
            "give exactly one of: exponents, --seifert, --graph-file",
        ));
    }
    if !exps.is_empty() {
        return Ok(Input::Bci(bci_data(exps)?));
    }
    if let Some(s) = &src.seifert {
        return Ok(Input::Seifert(parse_seifert(s)?));
    }
    let path = src.graph_file.as_ref().expect("checked above");
    let text = fs::read_to_string(path)
        .map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| bad(format!("graph JSON: {e}")))?;
    let spec = v.get("graph").unwrap_or(&v);
    Ok(Input::Graph(ResolutionGraph::from_json_value(spec)?))
}

/// `g,c0,alpha/beta,...`; `alpha/beta` may be repeated as `k*alpha/beta`.
fn parse_seifert(s: &str) -> whsing::Result<SeifertInvariant> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() < 2 {
        return Err(bad(format!("Seifert invariant {s:?} needs at least g,c0")));
    }
    let genus: u64 = parts[0]
        .parse()
        .map_err(|_| bad(format!("bad genus {:?}", parts[0])))?;
    let c0: i64 = parts[1]
        .parse()
        .map_err(|_| bad(format!("bad c0 {:?}", parts[1])))?;
    let mut arms = Vec::new();
    for p in &parts[2..] {
        let (count, frac) = match p.split_once('*') {
            Some((k, f)) => (
                k.parse::<usize>()
                    .map_err(|_| bad(format!("bad arm count in {p:?}")))?,
                f,
            ),
            None => (1, *p),
        };
        let (a, b) = frac
            .split_once('/')
            .ok_or_else(|| bad(format!("arm {p:?} is not alpha/beta")))?;
        let alpha = a.parse().map_err(|_| bad(format!("bad alpha in {p:?}")))?;
        let beta = b.parse().map_err(|_| bad(format!("bad beta in {p:?}")))?;
        arms.extend(std::iter::repeat_n(SeifertArm::new(alpha, beta), count));
    }
    SeifertInvariant::new(genus, c0, arms)
}

fn seifert_json(s: &SeifertInvariant) -> Value {
    json!({
        "text": s.to_string(),
        "genus": s.genus,
        "c0": s.c0,
        "arms": s.arms.iter().map(|a| json!([a.alpha, a.beta])).collect::<Vec<_>>(),
    })
}

fn deg_list(d: &PDDegreeModel, upto: usize) -> Value {
    Value::Array(
        (0..=upto)
            .map(|n| wj::int(&BigInt::from(d.deg(n as i128))))
            .collect(),
    )
}

fn series_json(h: &HilbertSeries, order: usize) -> whsing::Result<Value> {
    Ok(json!({
        "numerator": wj::int_list(h.numerator().coeffs()),
        "denominators": h.denominators(),
        "display": h.to_string(),
        "expansion": wj::int_list(&h.expand(order)),
        "pg": wj::int(&pg_from_series(h)?),
    }))
}

fn bci_report(data: &BrieskornData, input: &[u64], order: usize) -> whsing::Result<Value> {
    let graph = data.graph()?;
    let zx = fundamental_cycle_checked(data, &graph)?;
    let mx = maximal_ideal_cycle(data, &graph)?;
    let zk = graph.canonical_cycle();
    let two_zx = 2 * &zx;
    let h = data.hilbert_series()?;
    let pg = pg_from_series(&h)?;
    let model = AnalyticModel::bci(data)?;
    let pinkham = pinkham_sum(&model)?;
    if pinkham.pg != pg {
        return Err(Error::Internal(format!(
            "p_g is {pg} from the series but {} from the Pinkham sum",
            pinkham.pg
        )));
    }
    let mz = mz_criterion_weighted(&model)?;
    let mult = multiplicity_bound(&graph, &mx)?;
    let top = pg_max(&data.seifert())?;
    let e_sg = data.e_semigroup()?;
    let ghat_sg = data.ghat_semigroup()?;
    let degrees = data.degree_model();
    Ok(json!({
        "input": input,
        "data": data.to_json(),
        "seifert": seifert_json(&data.seifert()),
        "graph": graph.to_json_value(),
        "Z_X": wj::cycle_map(&zx),
        "M_X": wj::cycle_map(&mx),
        "Z_K": wj::qcycle_map(&zk),
        "numerically_gorenstein": zk.is_integral(),
        "cycles": {
            "Z_X": CycleReport::new(&graph, &zx)?.to_json(),
            "2Z_X": CycleReport::new(&graph, &two_zx)?.to_json(),
            "M_X": CycleReport::new(&graph, &mx)?.to_json(),
        },
        "pa_zx": wj::int(&CycleReport::new(&graph, &zx)?.pa),
        "pa_2zx": wj::int(&CycleReport::new(&graph, &two_zx)?.pa),
        "m_equals_z": mz.holds,
        "m_equals_z_detail": mz.to_json(),
        "a_invariant": wj::int(&BigInt::from(data.a_invariant())),
        "a_invariant_in_e_semigroup": data.a_invariant() >= 0 && e_sg.contains(data.a_invariant() as u64),
        "series": series_json(&h, order)?,
        "pg": wj::int(&pg),
        "pinkham": pinkham.to_json(),
        "pg_max": {
            "value": wj::int(&top.value),
            "exact": top.exact,
            "hyperelliptic_type": top.hyperelliptic_type,
        },
        "deg_D": deg_list(&degrees, order),
        "e_semigroup": e_sg.minimal_generators(),
        "ghat_semigroup": ghat_sg.minimal_generators(),
        "minus_m_squared": wj::int(&mult.minus_m_squared),
        "multiplicity": mult.to_json(),
    }))
}

fn cycle_tuple(v: &Value) -> String {
    let items: Vec<String> = v
        .as_object()
        .map(|m| {
            m.values()
                .map(|x| x.to_string().trim_matches('"').to_string())
                .collect()
        })
        .unwrap_or_default();
    format!("({})", items.join(", "))
}

fn bci_text(r: &Value) -> String {
    let d = &r["data"];
    format!(
        "exponents {}\nell = {}  e = {}  alpha_i = {}  alpha = {}\nghat = {}  ghat_i = {}  beta = {}\n\
         Seifert invariant {}\nZ_X = {}  p_a = {}\nM_X = {}  -M_X^2 = {}\nZ_K = {}\np_a(2Z_X) = {}\n\
         a(R) = {}\np_g = {}\nM_X = Z_X: {}\n",
        d["exponents"],
        d["ell"],
        d["e"],
        d["alpha_i"],
        d["alpha"],
        d["ghat"],
        d["ghat_i"],
        d["beta"],
        r["seifert"]["text"].as_str().unwrap_or_default(),
        cycle_tuple(&r["Z_X"]),
        r["pa_zx"],
        cycle_tuple(&r["M_X"]),
        r["minus_m_squared"],
        cycle_tuple(&r["Z_K"]),
        r["pa_2zx"],
        r["a_invariant"],
        r["pg"],
        r["m_equals_z"],
    )
}

fn graph_text(g: &ResolutionGraph) -> String {
    let mut s = String::new();
    for (i, v) in g.vertices().iter().enumerate() {
        let nb: Vec<String> = g.neighbors(i).iter().map(usize::to_string).collect();
        s.push_str(&format!(
            "{i}: selfint {} genus {} -- {}\n",
            v.selfint,
            v.genus,
            nb.join(" ")
        ));
    }
    s
}

fn cycles_report(input: &Input, order: usize) -> whsing::Result<Value> {
    let graph = input.graph()?;
    let zx = fundamental_cycle(&graph);
    let zk = graph.canonical_cycle();
    let mut v = json!({
        "graph": graph.to_json_value(),
        "Z_X": CycleReport::new(&graph, &zx)?.to_json(),
        "Z_K": wj::qcycle_map(&zk),
        "numerically_gorenstein": zk.is_integral(),
    });
    if graph.star_shape().is_ok() && seifert_of_graph(&graph).is_ok() {
        let degrees = PDDegreeModel::from_graph(&graph)?;
        let mut ls = Vec::new();
        for n in 1..=order {
            let c = l_n(&graph, n as i64)?;
            ls.push(json!({
                "n": n,
                "cycle": wj::cycle_map(&c),
                "deg": wj::int(&deg_on_central(&graph, &c)?),
            }));
        }
        v["L_n"] = Value::Array(ls);
        v["deg_D"] = deg_list(&degrees, order);
    }
    if let Input::Bci(d) = input {
        v["M_X"] = CycleReport::new(&graph, &maximal_ideal_cycle(d, &graph)?)?.to_json();
    }
    Ok(v)
}

fn cycles_text(r: &Value) -> String {
    let mut s = format!(
        "Z_X = {}  Z_X^2 = {}  p_a = {}\nZ_K = {}\n",
        cycle_tuple(&r["Z_X"]["cycle"]),
        r["Z_X"]["self_intersection"],
        r["Z_X"]["pa"],
        cycle_tuple(&r["Z_K"]),
    );
    if let Some(m) = r.get("M_X") {
        s.push_str(&format!(
            "M_X = {}  M_X^2 = {}\n",
            cycle_tuple(&m["cycle"]),
            m["self_intersection"]
        ));
    }
    if let Some(ls) = r.get("L_n").and_then(Value::as_array) {
        for l in ls {
            s.push_str(&format!(
                "L_{} = {}  deg D = {}\n",
                l["n"],
                cycle_tuple(&l["cycle"]),
                l["deg"]
            ));
        }
    }
    s
}

fn parse_h0(text: &str) -> whsing::Result<BTreeMap<u64, u64>> {
    let mut m = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (n, h) = item
            .split_once('=')
            .ok_or_else(|| bad(format!("override {item:?} is not n=h")))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad degree in {item:?}")))?;
        let h = h
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad value in {item:?}")))?;
        m.insert(n, h);
    }
    Ok(m)
}

fn pg_report(input: &Input, h0: Option<&str>) -> whsing::Result<Value> {
    match (input, h0) {
        (Input::Bci(d), None) => {
            let pg = pg_from_series(&d.hilbert_series()?)?;
            let sum = pinkham_sum(&AnalyticModel::bci(d)?)?;
            if sum.pg != pg {
                return Err(Error::Internal(format!(
                    "p_g is {pg} from the series but {} from the Pinkham sum",
                    sum.pg
                )));
            }
            Ok(json!({ "model": "bci", "pg": wj::int(&pg), "pinkham": sum.to_json() }))
        }
        _ => {
            let degrees = PDDegreeModel::from_seifert(&input.seifert()?);
            let model = match h0 {
                Some(t) => AnalyticModel::with_overrides(degrees, &parse_h0(t)?)?,
                None => AnalyticModel::hyperelliptic_max(degrees),
            };
            let sum = pinkham_sum(&model)?;
            Ok(json!({
                "model": model.kind_name(),
                "pg": wj::int(&sum.pg),
                "pinkham": sum.to_json(),
            }))
        }
    }
}

fn case_sweep(format: Format) -> whsing::Result<String> {
    let mut rows = Vec::new();
    for o in Overrides2334::all_in_bounds() {
        rows.push(match case_study_2334(o) {
            Ok(r) => json!({
                "overrides": o.to_string(),
                "status": "accepted",
                "pg": wj::int(&r.pg),
                "mult": r.multiplicity,
                "emb": r.embedding_dimension,
                "gorenstein": r.gorenstein,
                "generator_degrees": r.generator_degrees,
            }),
            Err(e) => json!({
                "overrides": o.to_string(),
                "status": "rejected",
                "reason": e.to_string(),
                "code": exit_code(e.kind()),
            }),
        });
    }
    Ok(match format {
        Format::Tsv => {
            let mut s = String::from("overrides\tstatus\tpg\tmult\temb\tgorenstein\tgenerators\n");
            for r in &rows {
                if r["status"] == "accepted" {
                    let gens: Vec<u64> = serde_json::from_value(r["generator_degrees"].clone())
                        .expect("written above");
                    s.push_str(&format!(
                        "{}\taccepted\t{}\t{}\t{}\t{}\t{}\n",
                        r["overrides"].as_str().unwrap_or_default(),
                        r["pg"],
                        r["mult"],
                        r["emb"],
                        r["gorenstein"],
                        join(&gens)
                    ));
                } else {
                    s.push_str(&format!(
                        "{}\trejected\t\t\t\t\t{}\n",
                        r["overrides"].as_str().unwrap_or_default(),
                        r["reason"].as_str().unwrap_or_default()
                    ));
                }
            }
            s
        }
        _ => render_json(&with_schema("case2334", json!({ "cases": rows }))),
    })
}

fn row_json(r: &TableRow) -> Value {
    json!({
        "label": r.label,
        "pg": wj::int(&r.pg),
        "mult": wj::int(&r.mult),
        "emb": r.emb,
        "gorenstein": r.gorenstein,
        "generator_degrees": r.generator_degrees,
    })
}

fn tables_tsv(t1: &[TableRow], t2: &[TableRow]) -> String {
    let mut s = String::from("# special types\ntype\tpg\tmult\temb\tgenerators\n");
    for r in t1 {
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.label,
            r.pg,
            r.mult,
            r.emb,
            join(&r.generator_degrees)
        ));
    }
    s.push_str(&format!(
        "# emb from a complete-intersection presentation; {CI_HYPOTHESIS}\n"
    ));
    s.push_str("# M_X = Z_X\noverrides\tpg\tmult\temb\tring\tgenerators\n");
    for r in t2 {
        let ring = if r.gorenstein == Some(true) {
            "Gorenstein"
        } else {
            "non Gorenstein"
        };
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            r.label,
            r.pg,
            r.mult,
            r.emb,
            ring,
            join(&r.generator_degrees)
        ));
    }
    s
}
