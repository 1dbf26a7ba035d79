//! Command-line surface.
//!
//! [`run_command`] parses an argument vector and returns the exit code with the
//! buffered output, so the binary and the tests share one code path. Exit code
//! 0 means success or a passing check, 1 a failing check (witnesses are
//! printed) and 2 a usage or input error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arc::{parse_arc_list, Arc, ModelParams};
use crate::arc_set::{ArcSet, Window};
use crate::cotorsion::{check_pair, core, rigidity_check, PairReport};
use crate::error::{Error, Result};
use crate::hom_ext::{ext1_case, ext_dim, ext_profile, ext_triangle, hom_dim, ExtCase};
use crate::io::{parse_document, Document, Report, Verdict};
use crate::mutation::{mutate_pair, rotate_arc, DividerSet};
use crate::oracle;
use crate::render::{render, RenderSpec, RenderStyle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "ncluster",
    version,
    about = "Arc-model toolkit for n-cluster categories of type A-infinity"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Args)]
struct Common {
    /// JSON document with `n` and named arc sets.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Value of n; overrides the document's.
    #[arg(long, global = true)]
    n: Option<i64>,
    /// Inclusive window LO..HI.
    #[arg(long, global = true, allow_hyphen_values = true, value_name = "LO..HI")]
    window: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output (for `render`, the picture) to a file.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Ext^i between two arcs, or the whole profile when --degree is omitted.
    Ext {
        #[arg(long, allow_hyphen_values = true)]
        arcs: String,
        #[arg(long)]
        degree: Option<i64>,
    },
    /// Hom between two arcs.
    Hom {
        #[arg(long, allow_hyphen_values = true)]
        arcs: String,
    },
    /// Whether two arcs cross, or which listed arcs cross a named set.
    Cross {
        #[arg(long, allow_hyphen_values = true)]
        arcs: String,
        #[arg(long)]
        set: Option<String>,
    },
    /// Arcs in the window crossing no member of the set.
    Nc(SetArgs),
    /// Fountain loci and functorial finiteness.
    Fountains(SetArgs),
    /// Members crossing no other member.
    Frame(SetArgs),
    /// Ptolemy condition on the window, plus the nc-nc closure for finite sets.
    Ptolemy(SetArgs),
    /// Checks the four n-cotorsion-pair conditions.
    CheckPair(PairArgs),
    /// X ∩ Y on the window, with a rigidity check.
    Core(PairArgs),
    /// Mutates the pair at D by rotating inside the D-cells.
    Mutate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        d: String,
        /// Also rotate these arcs and report their images.
        #[arg(long, allow_hyphen_values = true)]
        arcs: Option<String>,
        /// Mutate even when the input pair fails its check.
        #[arg(long)]
        force: bool,
    },
    /// Brute-force cross-checks of the closed forms.
    Oracle {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
    /// Draws sets as an SVG arc diagram or a text grid.
    Render {
        /// Sets to draw (repeatable); all sets when omitted.
        #[arg(long)]
        set: Vec<String>,
        #[arg(long)]
        highlight: Option<String>,
        #[arg(long, default_value = "svg")]
        style: RenderStyle,
    },
}

#[derive(Debug, Args)]
struct SetArgs {
    /// Named set from the document.
    #[arg(long)]
    set: Option<String>,
    /// Inline finite set, e.g. "(-4,3) (-4,6)".
    #[arg(long, allow_hyphen_values = true)]
    arcs: Option<String>,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Suite {
    All,
    Crossing,
    Serre,
    Rotation,
}

/// What a command produced, before formatting.
struct Out {
    verdict: Verdict,
    inputs: Value,
    witnesses: Vec<Value>,
    result: Value,
    text: String,
    /// Raw artifact for `render`.
    artifact: Option<Vec<u8>>,
    warnings: Vec<String>,
}

impl Out {
    fn ok(inputs: Value, result: Value, text: String) -> Self {
        Out {
            verdict: Verdict::Ok,
            inputs,
            witnesses: Vec::new(),
            result,
            text,
            artifact: None,
            warnings: Vec::new(),
        }
    }
}

struct Ctx {
    doc: Option<Document>,
    params: Option<ModelParams>,
    window: Option<Window>,
}

impl Ctx {
    fn load(c: &Common) -> Result<Self> {
        let override_n = c.n.map(ModelParams::new).transpose()?;
        let doc = match &c.input {
            None => None,
            Some(path) => {
                let bytes = std::fs::read(path).map_err(|e| Error::Validation {
                    locus: path.display().to_string(),
                    message: e.to_string(),
                })?;
                let doc = match override_n {
                    Some(p) => {
                        let mut v: Value =
                            serde_json::from_slice(&bytes).map_err(|e| Error::Parse {
                                line: e.line(),
                                column: e.column(),
                                message: e.to_string(),
                            })?;
                        if let Some(obj) = v.as_object_mut() {
                            obj.insert("n".into(), json!(p.n()));
                        }
                        parse_document(v.to_string().as_bytes())?
                    }
                    None => parse_document(&bytes)?,
                };
                Some(doc)
            }
        };
        let params = override_n.or(doc.as_ref().map(|d| d.n));
        let window = c.window.as_deref().map(str::parse).transpose()?;
        Ok(Ctx {
            doc,
            params,
            window,
        })
    }

    fn params(&self) -> Result<ModelParams> {
        self.params.ok_or_else(|| Error::Validation {
            locus: "--n".into(),
            message: "pass --n or an --input document".into(),
        })
    }

    fn window(&self) -> Result<Window> {
        self.window.ok_or_else(|| Error::Validation {
            locus: "--window".into(),
            message: "this command needs --window LO..HI".into(),
        })
    }

    fn doc(&self) -> Result<&Document> {
        self.doc.as_ref().ok_or_else(|| Error::Validation {
            locus: "--input".into(),
            message: "this command needs an --input document".into(),
        })
    }

    fn named(&self, name: &str) -> Result<ArcSet> {
        self.doc()?.set(name).cloned()
    }

    fn set(&self, a: &SetArgs) -> Result<(String, ArcSet)> {
        match (&a.set, &a.arcs) {
            (Some(name), None) => Ok((name.clone(), self.named(name)?)),
            (None, Some(list)) => {
                let set = ArcSet::from_arcs(self.params()?, parse_arc_list(list)?)?;
                Ok(("inline".into(), set))
            }
            _ => Err(Error::Validation {
                locus: "--set/--arcs".into(),
                message: "give exactly one of --set NAME or --arcs LIST".into(),
            }),
        }
    }
}

fn two_arcs(list: &str) -> Result<(Arc, Arc)> {
    match parse_arc_list(list)?.as_slice() {
        [x, y] => Ok((*x, *y)),
        other => Err(Error::Validation {
            locus: "--arcs".into(),
            message: format!("expected two arcs, got {}", other.len()),
        }),
    }
}

fn arc_list_text(arcs: &[Arc]) -> String {
    if arcs.is_empty() {
        return "(none)".into();
    }
    arcs.iter()
        .map(Arc::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// `{"explicit": [...], "families": [...]}`, as in input documents.
pub fn set_json(s: &ArcSet) -> Value {
    json!({ "explicit": s.explicit(), "families": s.families() })
}

fn set_text(s: &ArcSet) -> String {
    let mut t = arc_list_text(&s.explicit().iter().copied().collect::<Vec<_>>());
    for f in s.families() {
        let _ = write!(t, " + {f}");
    }
    t
}

fn base_inputs(c: &Common, ctx: &Ctx) -> Value {
    json!({
        "input": c.input.as_ref().map(|p| p.display().to_string()),
        "n": ctx.params.map(|p| p.n()),
        "window": ctx.window.map(|w| w.to_string()),
    })
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Some(a), Value::Object(b)) = (a.as_object_mut(), b) {
        a.extend(b);
    }
    a
}

fn pair_witnesses(r: &PairReport) -> Vec<Value> {
    let mut w = Vec::new();
    for (clause, eq) in [
        ("x_equals_nc_y", &r.x_equals_nc_y),
        ("y_equals_nc_x", &r.y_equals_nc_x),
    ] {
        w.extend(
            eq.missing
                .iter()
                .map(|a| json!({"clause": clause, "arc": a, "kind": "missing"})),
        );
        w.extend(
            eq.extra
                .iter()
                .map(|a| json!({"clause": clause, "arc": a, "kind": "extra"})),
        );
    }
    if let Some(p) = r.x_contravariant.witness {
        w.push(json!({"clause": "x_contravariant", "point": p}));
    }
    if let Some(p) = r.y_covariant.witness {
        w.push(json!({"clause": "y_covariant", "point": p}));
    }
    w
}

fn pair_text(r: &PairReport) -> String {
    let mut s = String::new();
    let status = |b: bool| if b { "PASS" } else { "FAIL" };
    for (name, eq) in [
        ("X = nc Y", &r.x_equals_nc_y),
        ("Y = nc X", &r.y_equals_nc_x),
    ] {
        let _ = write!(s, "{name}: {} (windowed, {})", status(eq.holds), r.window);
        if !eq.missing.is_empty() {
            let _ = write!(s, "; missing {}", arc_list_text(&eq.missing));
        }
        if !eq.extra.is_empty() {
            let _ = write!(s, "; extra {}", arc_list_text(&eq.extra));
        }
        s.push('\n');
    }
    for (name, c) in [
        ("X contravariantly finite", &r.x_contravariant),
        ("Y covariantly finite", &r.y_covariant),
    ] {
        let _ = write!(s, "{name}: {} (exact)", status(c.holds));
        if let Some(p) = c.witness {
            let _ = write!(s, "; witness {p}");
        }
        s.push('\n');
    }
    let _ = writeln!(s, "verdict: {}", status(r.verdict));
    s
}

fn run(cli: &Cli) -> Result<Out> {
    let ctx = Ctx::load(&cli.common)?;
    let inputs = base_inputs(&cli.common, &ctx);
    match &cli.cmd {
        Cmd::Ext { arcs, degree } => {
            let p = ctx.params()?;
            let (x, y) = two_arcs(arcs)?;
            let inputs = merge(inputs, json!({"arcs": [x, y], "degree": degree}));
            let case = ext1_case(&x, &y, &p)?;
            let triangle = if case.kind != ExtCase::Zero {
                Some(ext_triangle(&x, &y, &p)?)
            } else {
                None
            };
            match degree {
                Some(i) => {
                    let d = ext_dim(&x, &y, *i, &p)?;
                    let result = json!({"dim": d, "ext1_case": case, "triangle": triangle});
                    Ok(Out::ok(inputs, result, format!("{d}\n")))
                }
                None => {
                    let prof = ext_profile(&x, &y, &p)?;
                    let text = format!(
                        "Ext^i({x},{y}) for i=1..{}: {}\n",
                        p.n(),
                        prof.iter().map(u8::to_string).collect::<Vec<_>>().join(" ")
                    );
                    let result = json!({"profile": prof, "ext1_case": case, "triangle": triangle});
                    Ok(Out::ok(inputs, result, text))
                }
            }
        }
        Cmd::Hom { arcs } => {
            let p = ctx.params()?;
            let (x, y) = two_arcs(arcs)?;
            let d = hom_dim(&x, &y, &p)?;
            let inputs = merge(inputs, json!({"arcs": [x, y]}));
            Ok(Out::ok(inputs, json!({"dim": d}), format!("{d}\n")))
        }
        Cmd::Cross { arcs, set } => {
            let list = parse_arc_list(arcs)?;
            match set {
                None => {
                    let (x, y) = two_arcs(arcs)?;
                    let c = x.crosses(&y);
                    let inputs = merge(inputs, json!({"arcs": [x, y]}));
                    Ok(Out::ok(inputs, json!({"crosses": c}), format!("{c}\n")))
                }
                Some(name) => {
                    let s = ctx.named(name)?;
                    let mut rows = Vec::new();
                    let mut text = String::new();
                    for a in &list {
                        let c = s.crosses(a)?;
                        rows.push(json!({"arc": a, "crosses": c}));
                        let _ = writeln!(text, "{a}: {c}");
                    }
                    let inputs = merge(inputs, json!({"arcs": list, "set": name}));
                    Ok(Out::ok(inputs, json!({"results": rows}), text))
                }
            }
        }
        Cmd::Nc(a) => {
            let (name, s) = ctx.set(a)?;
            let w = ctx.window()?;
            let nc = s.nc_window(&w);
            let inputs = merge(inputs, json!({"set": name}));
            let text = format!(
                "nc {name} on {w} ({} arcs): {}\n",
                nc.len(),
                arc_list_text(&nc)
            );
            Ok(Out::ok(
                inputs,
                json!({"count": nc.len(), "arcs": nc}),
                text,
            ))
        }
        Cmd::Fountains(a) => {
            let (name, s) = ctx.set(a)?;
            let loci = s.fountain_loci();
            let fin = s.finiteness_check();
            let inputs = merge(inputs, json!({"set": name}));
            let yes_no = |ok: bool, w: Option<i64>| match (ok, w) {
                (true, _) => "yes".to_string(),
                (false, Some(p)) => format!("no (witness {p})"),
                (false, None) => "no".to_string(),
            };
            let text = format!(
                "left fountains: {}\nright fountains: {}\ncontravariantly finite: {}\ncovariantly finite: {}\n",
                loci.left,
                loci.right,
                yes_no(fin.contravariant_ok, fin.contravariant_witness),
                yes_no(fin.covariant_ok, fin.covariant_witness),
            );
            let result = json!({
                "left": loci.left.to_string(),
                "right": loci.right.to_string(),
                "loci": loci,
                "finiteness": fin,
            });
            Ok(Out::ok(inputs, result, text))
        }
        Cmd::Frame(a) => {
            let (name, s) = ctx.set(a)?;
            let w = ctx.window()?;
            let f = s.frame(&w);
            let inputs = merge(inputs, json!({"set": name}));
            let text = format!("frame of {name} on {w}: {}\n", arc_list_text(&f));
            Ok(Out::ok(inputs, json!({"arcs": f}), text))
        }
        Cmd::Ptolemy(a) => {
            let (name, s) = ctx.set(a)?;
            let w = ctx.window()?;
            let violation = s.ptolemy_violation(&w);
            let inputs = merge(inputs, json!({"set": name}));
            let mut text = match &violation {
                None => format!("{name} satisfies the Ptolemy condition on {w}\n"),
                Some(v) => format!(
                    "{name} violates the Ptolemy condition: {} and {} cross but {} is missing\n",
                    v.pair.0, v.pair.1, v.missing
                ),
            };
            let closure_extra = if s.is_finite() {
                let mut extra = Vec::new();
                for b in w.arcs(s.params()) {
                    if !s.explicit().contains(&b) && s.in_nc_nc(&b)? {
                        extra.push(b);
                    }
                }
                let _ = writeln!(
                    text,
                    "arcs of nc nc {name} on {w} outside {name}: {}",
                    arc_list_text(&extra)
                );
                Some(extra)
            } else {
                None
            };
            let witnesses = violation
                .iter()
                .map(|v| json!({"clause": "ptolemy", "pair": [v.pair.0, v.pair.1], "arc": v.missing}))
                .collect();
            Ok(Out {
                verdict: Verdict::from_check(violation.is_none()),
                inputs,
                witnesses,
                result: json!({"ptolemy": violation.is_none(), "violation": violation, "nc_nc_extra": closure_extra}),
                text,
                artifact: None,
                warnings: Vec::new(),
            })
        }
        Cmd::CheckPair(pa) => {
            let (x, y, w) = (ctx.named(&pa.x)?, ctx.named(&pa.y)?, ctx.window()?);
            let r = check_pair(&x, &y, &w)?;
            let inputs = merge(inputs, json!({"x": pa.x, "y": pa.y}));
            Ok(Out {
                verdict: Verdict::from_check(r.verdict),
                inputs,
                witnesses: pair_witnesses(&r),
                result: serde_json::to_value(&r).expect("report serializes"),
                text: pair_text(&r),
                artifact: None,
                warnings: Vec::new(),
            })
        }
        Cmd::Core(pa) => {
            let (x, y, w) = (ctx.named(&pa.x)?, ctx.named(&pa.y)?, ctx.window()?);
            let c = core(&x, &y, &w)?;
            let rig = rigidity_check(&c, x.params())?;
            let inputs = merge(inputs, json!({"x": pa.x, "y": pa.y}));
            let text = format!("core on {w}: {}\nrigid: {}\n", arc_list_text(&c), rig.rigid);
            Ok(Out::ok(inputs, json!({"core": c, "rigidity": rig}), text))
        }
        Cmd::Mutate {
            pair,
            d,
            arcs,
            force,
        } => {
            let (x, y, w) = (ctx.named(&pair.x)?, ctx.named(&pair.y)?, ctx.window()?);
            let dset = DividerSet::from_set(&ctx.named(d)?)?;
            let inputs = merge(
                inputs,
                json!({"x": pair.x, "y": pair.y, "d": d, "arcs": arcs, "force": force}),
            );
            let mut rotations = Vec::new();
            let mut text = String::new();
            if let Some(list) = arcs {
                for a in parse_arc_list(list)? {
                    let b = rotate_arc(&a, &dset)?;
                    let _ = writeln!(text, "rho_D{a} = {b}");
                    rotations.push(json!({"arc": a, "image": b}));
                }
            }
            let outcome = match mutate_pair(&x, &y, &dset, &w, *force) {
                Ok(o) => o,
                Err(Error::PairNotCertified(before)) => {
                    let _ = writeln!(text, "input pair is not certified on {w}:");
                    text.push_str(&pair_text(&before));
                    return Ok(Out {
                        verdict: Verdict::Fail,
                        inputs,
                        witnesses: pair_witnesses(&before),
                        result: json!({"rotations": rotations, "before": *before, "mutated": null}),
                        text,
                        artifact: None,
                        warnings: Vec::new(),
                    });
                }
                Err(e) => return Err(e),
            };
            let _ = writeln!(text, "mu(X) = {}", set_text(&outcome.x));
            let _ = writeln!(text, "mu(Y) = {}", set_text(&outcome.y));
            let _ = writeln!(text, "mutated pair on {}:", outcome.window);
            text.push_str(&pair_text(&outcome.after));
            Ok(Out {
                verdict: Verdict::from_check(outcome.after.verdict),
                inputs,
                witnesses: pair_witnesses(&outcome.after),
                result: json!({
                    "rotations": rotations,
                    "x": set_json(&outcome.x),
                    "y": set_json(&outcome.y),
                    "window": outcome.window,
                    "before": outcome.before,
                    "after": outcome.after,
                }),
                text,
                artifact: None,
                warnings: Vec::new(),
            })
        }
        Cmd::Oracle { suite, seed, cases } => run_oracle(&ctx, inputs, *suite, *seed, *cases),
        Cmd::Render {
            set,
            highlight,
            style,
        } => {
            let doc = ctx.doc()?;
            let window = ctx.window()?;
            let color = *style == RenderStyle::Text
                && cli.common.out.is_none()
                && std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty());
            let spec = RenderSpec {
                window,
                style: *style,
                highlight: highlight.clone(),
                sets: (!set.is_empty()).then(|| set.clone()),
                color,
            };
            let r = render(doc, &spec)?;
            let inputs = merge(
                inputs,
                json!({"sets": set, "highlight": highlight, "style": format!("{style:?}").to_lowercase()}),
            );
            let body = String::from_utf8(r.bytes.clone()).expect("render emits UTF-8");
            let result = json!({
                "arcs": r.arcs,
                "highlighted": r.highlighted,
                "bytes": r.bytes.len(),
                "content": if cli.common.out.is_none() { Some(body) } else { None },
            });
            Ok(Out {
                verdict: Verdict::Ok,
                inputs,
                witnesses: Vec::new(),
                result,
                text: String::new(),
                artifact: Some(r.bytes),
                warnings: r.warnings,
            })
        }
    }
}

fn run_oracle(ctx: &Ctx, inputs: Value, suite: Suite, seed: u64, cases: usize) -> Result<Out> {
    let window = ctx.window.unwrap_or(Window::new(-12, 12)?);
    let ns: Vec<ModelParams> = match ctx.params {
        Some(p) => vec![p],
        None => [1, 2, 3, 5].map(|n| ModelParams::new(n).unwrap()).to_vec(),
    };
    let inputs = merge(
        inputs,
        json!({"suite": suite, "seed": seed, "cases": cases}),
    );
    let mut passed = true;
    let mut witnesses = Vec::new();
    let mut results = serde_json::Map::new();
    let mut text = String::new();
    let status = |b: bool| if b { "PASS" } else { "FAIL" };

    for (name, wanted, f) in [
        (
            "crossing",
            Suite::Crossing,
            oracle::crossing_ext_sweep as fn(&ModelParams, &Window) -> oracle::SweepReport,
        ),
        ("serre", Suite::Serre, oracle::serre_sweep),
    ] {
        if suite != Suite::All && suite != wanted {
            continue;
        }
        let mut rows = Vec::new();
        for p in &ns {
            let r = f(p, &window);
            passed &= r.passed();
            let _ = writeln!(
                text,
                "{name} n={} on {window}: {} pairs, {} mismatches: {}",
                p.n(),
                r.pairs,
                r.mismatches.len(),
                status(r.passed())
            );
            witnesses.extend(
                r.mismatches
                    .iter()
                    .take(10)
                    .map(|(a, b)| json!({"clause": name, "pair": [a, b]})),
            );
            rows.push(json!({"n": p.n(), "pairs": r.pairs, "mismatches": r.mismatches.len()}));
        }
        results.insert(name.into(), Value::Array(rows));
    }

    if matches!(suite, Suite::All | Suite::Rotation) {
        let corpus = oracle::rotation_corpus(seed, cases, 60, 8);
        let mut fails = [0usize; 3];
        for case in &corpus {
            let c = oracle::check_rotation_case(case);
            for (k, (clause, v)) in [
                ("involution", &c.involution),
                ("cell_walk", &c.cell_walk),
                ("triangle", &c.triangle),
            ]
            .into_iter()
            .enumerate()
            {
                if !v.is_empty() {
                    fails[k] += 1;
                    if witnesses.len() < 30 {
                        witnesses.push(json!({
                            "clause": clause,
                            "arc": case.arc,
                            "n": case.n,
                            "dividers": case.dividers,
                            "details": v,
                        }));
                    }
                }
            }
        }
        passed &= fails.iter().all(|&f| f == 0);
        let _ = writeln!(
            text,
            "rotation corpus ({} cases, seed {seed}): involution {}, cell walk {}, triangle {}",
            corpus.len(),
            status(fails[0] == 0),
            status(fails[1] == 0),
            status(fails[2] == 0)
        );
        results.insert(
            "rotation".into(),
            json!({"cases": corpus.len(), "involution_failures": fails[0],
                   "cell_walk_failures": fails[1], "triangle_failures": fails[2]}),
        );
    }
    Ok(Out {
        verdict: Verdict::from_check(passed),
        inputs,
        witnesses,
        result: Value::Object(results),
        text,
        artifact: None,
        warnings: Vec::new(),
    })
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Ext { .. } => "ext",
        Cmd::Hom { .. } => "hom",
        Cmd::Cross { .. } => "cross",
        Cmd::Nc(_) => "nc",
        Cmd::Fountains(_) => "fountains",
        Cmd::Frame(_) => "frame",
        Cmd::Ptolemy(_) => "ptolemy",
        Cmd::CheckPair(_) => "check-pair",
        Cmd::Core(_) => "core",
        Cmd::Mutate { .. } => "mutate",
        Cmd::Oracle { .. } => "oracle",
        Cmd::Render { .. } => "render",
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let msg = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: msg,
                }
            } else {
                Outcome {
                    code,
                    stdout: msg,
                    stderr: String::new(),
                }
            };
        }
    };
    let started = Instant::now();
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let timing_ms = started.elapsed().as_secs_f64() * 1000.0;
    let code = if out.verdict == Verdict::Fail { 1 } else { 0 };
    let mut stderr: String = out
        .warnings
        .iter()
        .map(|w| format!("warning: {w}\n"))
        .collect();

    let report = Report {
        command: command_name(&cli.cmd).into(),
        inputs: out.inputs,
        verdict: out.verdict,
        witnesses: out.witnesses,
        result: out.result,
        timing_ms,
    };
    let formatted = match cli.common.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Text => out.text,
    };

    let mut stdout = formatted;
    if let Some(path) = &cli.common.out {
        let payload = match &out.artifact {
            Some(bytes) => bytes.clone(),
            None => std::mem::take(&mut stdout).into_bytes(),
        };
        if let Err(e) = std::fs::write(path, payload) {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr,
            };
        }
        if out.artifact.is_some() && cli.common.format == Format::Text {
            stdout = format!("wrote {}\n", path.display());
        }
    } else if let (Some(bytes), Format::Text) = (&out.artifact, cli.common.format) {
        stdout = String::from_utf8_lossy(bytes).into_owned();
    }
    Outcome {
        code,
        stdout,
        stderr,
    }
}
