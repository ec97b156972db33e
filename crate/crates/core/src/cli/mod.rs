//! The `pargal` command line: load an extension document, run one
//! computation, print a report. Exit codes: 0 pass, 1 mathematical failure,
//! 2 unreadable or malformed input, 3 resource cap.

mod docs;

pub use docs::{CochainDoc, CochainEntry, PsiDoc};

use crate::action::{check_galois_coordinates, find_galois_coordinates, validate_twisting, ActionDoc, GaloisExtension, LoadedExtension};
use crate::cohomology::{Cochain, Complex, DEFAULT_CAP};
use crate::crossed::{detect_trivial_class, j_map, CrossedProduct};
use crate::error::{check_cap, Error, Result};
use crate::pics::{alpha_star, check_phi0, check_rep, phi0_combined, phi_f, tensor_oracle, PicSDoc, RepTarget, TwistedIdempotents};
use crate::report::{first_violation, ValidationReport};
use crate::seven_term::{check_phi1_multiplicative, phi1, phi2, phi3, phi3_change_witness, phi4, phi6, verify_composites, PsiFamily};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

/// Largest `m` tried when searching Galois coordinates.
const COORD_SEARCH: usize = 3;

#[derive(Parser, Debug)]
#[command(name = "pargal", version, about = "Partial Galois theory over finite commutative rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Extension document (ring, group, action, optional twisting and coordinates).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "human", global = true)]
    pub format: Format,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Largest search space enumerated exhaustively.
    #[arg(long, env = "PARGAL_ENUM_CAP", default_value_t = DEFAULT_CAP as u64, global = true)]
    pub cap: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the partial-action axioms, the twisting and the coordinates.
    Validate,
    /// List the invariant subring.
    Invariants,
    /// Trace of one element, or of all of them.
    Trace {
        #[arg(long)]
        element: Option<String>,
    },
    /// Check the supplied Galois coordinates, or search for some.
    Coords,
    /// Zⁿ, Bⁿ and Hⁿ with class representatives.
    Cohomology {
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Also enumerate all cochains and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// The crossed product by the document's twisting.
    Crossed {
        /// Multiply two elements given as `[[g, coefficient], ...]`.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        multiply: Option<Vec<String>>,
        /// Emit the full multiplication table.
        #[arg(long)]
        table: bool,
        /// Search for u with omega = delta1(u).
        #[arg(long)]
        detect: bool,
    },
    /// PicS with the induced action, its invariants, 1-cocycles and Φ₀.
    Pics {
        /// Symbolic PicS document instead of the concrete one.
        #[arg(long)]
        symbolic: Option<PathBuf>,
        /// Compare the twisted-idempotent product with literal tensor products.
        #[arg(long)]
        oracle: bool,
    },
    /// Invariant modules R_f^G.
    Phi1 {
        #[arg(long)]
        cocycle: Option<PathBuf>,
    },
    /// Image of [R^alpha] in PicS.
    Phi2,
    /// 2-cocycles from ψ families.
    Phi3 {
        #[arg(long)]
        psi: Option<PathBuf>,
    },
    /// Crossed-product class of a 2-cocycle.
    Phi4 {
        #[arg(long)]
        cocycle: Option<PathBuf>,
    },
    /// 3-cocycle δ²(ρ⁻¹).
    Phi6 {
        #[arg(long)]
        rho: Option<PathBuf>,
    },
    /// Empirical composite probes.
    Verify,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Invariants => "invariants",
            Command::Trace { .. } => "trace",
            Command::Coords => "coords",
            Command::Cohomology { .. } => "cohomology",
            Command::Crossed { .. } => "crossed",
            Command::Pics { .. } => "pics",
            Command::Phi1 { .. } => "phi1",
            Command::Phi2 => "phi2",
            Command::Phi3 { .. } => "phi3",
            Command::Phi4 { .. } => "phi4",
            Command::Phi6 { .. } => "phi6",
            Command::Verify => "verify",
        }
    }
}

/// What a command produced.
#[derive(Default)]
struct Outcome {
    result: Value,
    report: ValidationReport,
    /// Set when part of the work was skipped for the cap.
    partial: Option<String>,
    lines: Vec<String>,
}

struct Ctx {
    cap: u128,
    input: Option<PathBuf>,
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

impl Ctx {
    fn load(&self) -> Result<(LoadedExtension, String)> {
        let path = self.input.as_ref().ok_or_else(|| Error::Parse("--input is required".into()))?;
        let doc = ActionDoc::parse(&read(path)?).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })?;
        Ok((doc.build()?, doc.hash()))
    }

    fn galois(&self, ext: LoadedExtension) -> Result<GaloisExtension> {
        GaloisExtension::new(ext.action, ext.coords, COORD_SEARCH)
    }
}

/// What `pargal` prints and how it exits.
#[derive(Clone, Debug)]
pub struct Rendered {
    pub text: String,
    pub code: i32,
    /// Usage errors go to stderr; reports always go to stdout.
    pub stderr: bool,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Rendered
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let stderr = e.use_stderr();
            return Rendered { text: e.render().to_string(), code: if stderr { 2 } else { 0 }, stderr };
        }
    };
    let name = cli.command.name();
    let mut config = json!({
        "command": name,
        "input": cli.input.as_ref().map(|p| p.display().to_string()),
        "format": if cli.format == Format::Json { "json" } else { "human" },
        "cap": cli.cap,
    });
    match &cli.command {
        Command::Cohomology { degree, oracle } => {
            config["degree"] = json!(degree);
            config["oracle"] = json!(oracle);
        }
        Command::Pics { symbolic, oracle } => {
            config["symbolic"] = json!(symbolic.as_ref().map(|p| p.display().to_string()));
            config["oracle"] = json!(oracle);
        }
        Command::Phi1 { cocycle } | Command::Phi4 { cocycle } => config["cocycle"] = json!(cocycle.as_ref().map(|p| p.display().to_string())),
        Command::Phi3 { psi } => config["psi"] = json!(psi.as_ref().map(|p| p.display().to_string())),
        Command::Phi6 { rho } => config["rho"] = json!(rho.as_ref().map(|p| p.display().to_string())),
        Command::Trace { element } => config["element"] = json!(element),
        Command::Crossed { multiply, table, detect } => {
            config["multiply"] = json!(multiply);
            config["table"] = json!(table);
            config["detect"] = json!(detect);
        }
        _ => {}
    }
    let ctx = Ctx { cap: cli.cap as u128, input: cli.input.clone() };
    let start = Instant::now();
    let outcome = dispatch(&ctx, &cli.command);
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    let (status, code) = match &outcome {
        Ok(o) if !o.report.is_ok() => ("fail", 1),
        Ok(o) if o.partial.is_some() => ("partial", 3),
        Ok(_) => ("pass", 0),
        Err(Error::Parse(_) | Error::Malformed(_)) => ("error", 2),
        Err(Error::Cap { .. }) => ("error", 3),
        Err(Error::Precondition(_)) => ("fail", 1),
    };
    let text = match cli.format {
        Format::Json => {
            let mut doc = json!({ "command": name, "config": config, "status": status });
            match &outcome {
                Ok(o) => {
                    doc["result"] = o.result.clone();
                    doc["checks"] = serde_json::to_value(&o.report.checks).expect("serializable");
                    if let Some(p) = &o.partial {
                        doc["partial"] = json!(p);
                    }
                }
                Err(e) => doc["error"] = json!(e.to_string()),
            }
            if cli.timing {
                doc["timing_ms"] = json!(elapsed);
            }
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Human => {
            let mut out = vec![format!("pargal {name} {}", human_config(&config))];
            match &outcome {
                Ok(o) => {
                    out.extend(o.report.checks.iter().map(|c| match &c.witness {
                        None => format!("  PASS {}", c.name),
                        Some(w) => format!("  FAIL {}: {w}", c.name),
                    }));
                    out.extend(o.lines.iter().map(|l| format!("  {l}")));
                    if let Some(p) = &o.partial {
                        out.push(format!("  partial: {p}"));
                    }
                }
                Err(e) => out.push(format!("  error: {e}")),
            }
            if cli.timing {
                out.push(format!("  time: {elapsed:.1} ms"));
            }
            out.push(format!("status: {status}"));
            out.join("\n") + "\n"
        }
    };
    Rendered { text, code, stderr: false }
}

fn human_config(config: &Value) -> String {
    config
        .as_object()
        .expect("object")
        .iter()
        .filter(|(k, v)| *k != "command" && !v.is_null())
        .map(|(k, v)| format!("{k}={}", v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())))
        .collect::<Vec<_>>()
        .join(" ")
}

fn dispatch(ctx: &Ctx, cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Validate => validate(ctx),
        Command::Invariants => invariants(ctx),
        Command::Trace { element } => trace(ctx, element.as_deref()),
        Command::Coords => coords(ctx),
        Command::Cohomology { degree, oracle } => cohomology(ctx, *degree, *oracle),
        Command::Crossed { multiply, table, detect } => crossed(ctx, multiply.as_deref(), *table, *detect),
        Command::Pics { symbolic, oracle } => match symbolic {
            Some(p) => pics_symbolic(ctx, p),
            None => pics(ctx, *oracle),
        },
        Command::Phi1 { cocycle } => cmd_phi1(ctx, cocycle.as_ref()),
        Command::Phi2 => cmd_phi2(ctx),
        Command::Phi3 { psi } => cmd_phi3(ctx, psi.as_ref()),
        Command::Phi4 { cocycle } => cmd_phi4(ctx, cocycle.as_ref()),
        Command::Phi6 { rho } => cmd_phi6(ctx, rho.as_ref()),
        Command::Verify => verify(ctx),
    }
}

fn validate(ctx: &Ctx) -> Result<Outcome> {
    let (ext, hash) = ctx.load()?;
    let pa = &ext.action;
    let mut report = pa.validate();
    if let Some(w) = &ext.twisting {
        report.extend("twisting: ", validate_twisting(pa, w)?);
    }
    if let Some(c) = &ext.coords {
        report.extend("coordinates: ", check_galois_coordinates(pa, c)?);
    }
    let r = &*pa.ring;
    let ones: Vec<Value> = pa.ones().iter().map(|&e| r.to_json(e)).collect();
    let lines = vec![
        format!("ring {} with {} elements", r.describe(), r.size()),
        format!("group of order {}", pa.order()),
        format!("hash {hash}"),
    ];
    Ok(Outcome {
        result: json!({ "ring": r.describe(), "ring_size": r.size(), "group_order": pa.order(), "ones": ones, "extension_hash": hash }),
        report,
        partial: None,
        lines,
    })
}

fn invariants(ctx: &Ctx) -> Result<Outcome> {
    let (ext, _) = ctx.load()?;
    let pa = &ext.action;
    let r = &*pa.ring;
    let inv = pa.invariants();
    let mut report = ValidationReport::new();
    report.record(
        "closed under + and *",
        first_violation(inv.iter().flat_map(|&a| inv.iter().map(move |&b| (a, b))), |&(a, b)| pa.is_invariant(r.add(a, b)) && pa.is_invariant(r.mul(a, b)), |&(a, b)| {
            format!("{} {}", r.show(a), r.show(b))
        }),
    );
    Ok(Outcome {
        result: json!({ "invariants": inv.iter().map(|&x| r.to_json(x)).collect::<Vec<_>>() }),
        report,
        partial: None,
        lines: vec![format!("R^alpha = {{{}}}", inv.iter().map(|&x| r.show(x)).collect::<Vec<_>>().join(", "))],
    })
}

fn trace(ctx: &Ctx, element: Option<&str>) -> Result<Outcome> {
    let (ext, _) = ctx.load()?;
    let pa = &ext.action;
    let r = &*pa.ring;
    let xs = match element {
        Some(s) => vec![r.from_json(&serde_json::from_str(s).map_err(|e| Error::Parse(format!("--element: {e}")))?)?],
        None => r.elements().collect(),
    };
    let pairs: Vec<_> = xs.iter().map(|&x| (x, pa.trace(x))).collect();
    let mut report = ValidationReport::new();
    report.record("trace lands in R^alpha", first_violation(pairs.iter(), |(_, t)| pa.is_invariant(*t), |(x, _)| r.show(*x)));
    Ok(Outcome {
        result: json!(pairs.iter().map(|&(x, t)| json!({ "x": r.to_json(x), "trace": r.to_json(t) })).collect::<Vec<_>>()),
        report,
        partial: None,
        lines: pairs.iter().map(|&(x, t)| format!("tr({}) = {}", r.show(x), r.show(t))).collect(),
    })
}

fn coords(ctx: &Ctx) -> Result<Outcome> {
    let (ext, _) = ctx.load()?;
    let pa = &ext.action;
    let r = &*pa.ring;
    let (c, mut report) = match &ext.coords {
        Some(c) => (Some(c.clone()), check_galois_coordinates(pa, c)?),
        None => {
            let found = find_galois_coordinates(pa, COORD_SEARCH);
            let mut rep = ValidationReport::new();
            rep.record(format!("coordinate system with m <= {COORD_SEARCH}"), found.is_none().then(|| "none found".to_string()));
            (found, rep)
        }
    };
    if let Some(c) = &c {
        if ext.coords.is_none() {
            report.extend("", check_galois_coordinates(pa, c)?);
        }
    }
    let show = |v: &[crate::ring::Elem]| v.iter().map(|&x| r.show(x)).collect::<Vec<_>>().join(", ");
    let lines = c.iter().map(|c| format!("x = [{}], y = [{}]", show(&c.x), show(&c.y))).collect();
    Ok(Outcome {
        result: json!(c.map(|c| json!({
            "x": c.x.iter().map(|&v| r.to_json(v)).collect::<Vec<_>>(),
            "y": c.y.iter().map(|&v| r.to_json(v)).collect::<Vec<_>>(),
        }))),
        report,
        partial: None,
        lines,
    })
}

fn cochain_json(pa: &crate::action::PartialAction, f: &Cochain, hash: &str) -> Value {
    serde_json::to_value(CochainDoc::from_cochain(pa, f, hash)).expect("serializable")
}

fn cohomology(ctx: &Ctx, degree: usize, oracle: bool) -> Result<Outcome> {
    let (ext, hash) = ctx.load()?;
    let pa = &ext.action;
    let cx = Complex::new(pa);
    let h = cx.cohomology(degree, ctx.cap)?;
    let mut report = ValidationReport::new();
    let mut lines = vec![
        format!("|Z^{degree}| = {}, |B^{degree}| = {}, |H^{degree}| = {}", h.z_order, h.b_order, h.h_order),
        format!("H^{degree} divisors {:?}", h.divisors),
    ];
    if oracle {
        let o = cx.oracle(degree, ctx.cap)?;
        let same = o.z_order() == h.z_order && o.b_order() == h.b_order && o.h_order() == h.h_order && h.representatives.as_ref() == Some(&o.representatives);
        report.record(
            "linear and oracle agree",
            (!same).then(|| format!("oracle |Z| = {}, |B| = {}, |H| = {}", o.z_order(), o.b_order(), o.h_order())),
        );
        lines.push(format!("oracle: |Z^{degree}| = {}, |B^{degree}| = {}, |H^{degree}| = {}", o.z_order(), o.b_order(), o.h_order()));
    }
    if let Some(reps) = &h.representatives {
        for f in reps {
            lines.push(format!("class of {}", f.show(pa)));
        }
    }
    let reps = h.representatives.as_ref().map(|rs| rs.iter().map(|f| cochain_json(pa, f, &hash)).collect::<Vec<_>>());
    let mut result = serde_json::to_value(&h).expect("serializable");
    result["representatives"] = json!(reps);
    Ok(Outcome { result, report, partial: h.note.clone(), lines })
}

fn crossed(ctx: &Ctx, multiply: Option<&[String]>, table: bool, detect: bool) -> Result<Outcome> {
    let (ext, _) = ctx.load()?;
    let pa = ext.action.clone();
    let omega = ext.twisting.clone().unwrap_or_else(|| Cochain::identity(&pa, 2));
    let mut report = validate_twisting(&pa, &omega)?;
    let cp = CrossedProduct::new(pa.clone(), omega.clone())?;
    report.extend("", cp.check_associativity());
    let mut lines = vec![format!("|R * G| = {}", cp.size())];
    let mut partial = None;
    if omega == Cochain::identity(&pa, 2) {
        match j_map(&pa, ctx.cap) {
            Ok(j) => {
                lines.push(format!("|End_R^alpha(R)| = {}", j.endomorphisms.len()));
                report.extend("", j.report);
            }
            Err(e @ Error::Cap { .. }) => partial = Some(format!("j map skipped: {e}")),
            Err(e) => return Err(e),
        }
    }
    let mut result = json!({ "size": cp.size().to_string(), "twisting": omega.show(&pa) });
    if let Some([a, b]) = multiply {
        let parse = |s: &str| serde_json::from_str::<Value>(s).map_err(|e| Error::Parse(format!("--multiply: {e}"))).and_then(|v| cp.from_json(&v));
        let (x, y) = (parse(a)?, parse(b)?);
        let xy = cp.multiply(&x, &y)?;
        lines.push(format!("({}) * ({}) = {}", cp.show(&x), cp.show(&y), cp.show(&xy)));
        result["product"] = cp.to_json(&xy);
    }
    if table {
        check_cap("multiplication table", cp.size().saturating_mul(cp.size()), ctx.cap)?;
        let els = cp.elements();
        let mut rows = Vec::new();
        for x in &els {
            for y in &els {
                let xy = cp.mul(x, y);
                lines.push(format!("({}) * ({}) = {}", cp.show(x), cp.show(y), cp.show(&xy)));
                rows.push(json!([cp.to_json(x), cp.to_json(y), cp.to_json(&xy)]));
            }
        }
        result["table"] = json!(rows);
    }
    if detect {
        let u = detect_trivial_class(&pa, &omega, ctx.cap)?;
        match &u {
            Some(u) => lines.push(format!("omega = delta1(u), u = {}", u.show(&pa))),
            None => lines.push("omega is not a coboundary".into()),
        }
        result["coboundary_witness"] = json!(u.as_ref().map(|u| u.show(&pa)));
    }
    Ok(Outcome { result, report, partial, lines })
}

fn pics(ctx: &Ctx, oracle: bool) -> Result<Outcome> {
    let (ext, _) = ctx.load()?;
    let pa = &ext.action;
    let act = alpha_star(pa);
    let m = &act.monoid;
    let mut report = ValidationReport::new();
    report.extend("PicS: ", m.verify());
    report.extend("alpha*: ", act.validate());
    report.extend("invariants: ", act.check_invariants());
    let inv = act.invariants();
    let z1 = crate::pics::z1_pics(&act, ctx.cap)?;
    report.record("z1 is the singleton g -> [D_g]", (z1.len() != 1).then(|| format!("{} cocycles", z1.len())));
    report.extend("Phi0 (twisted): ", check_phi0(pa));
    report.extend("Phi0 (combined): ", check_rep(&act, &phi0_combined(&act), true));
    if oracle {
        let tw = TwistedIdempotents::new(pa);
        let els = tw.elements();
        report.record(
            "product rule matches tensor oracle",
            first_violation(els.iter().flat_map(|&x| els.iter().map(move |&y| (x, y))), |&(x, y)| tensor_oracle(pa, x, y).matches, |&(x, y)| {
                format!("{} {}", tw.show(&x), tw.show(&y))
            }),
        );
    }
    let comps: Vec<String> = (0..m.components()).map(|e| m.labels[e].clone()).collect();
    let invs: Vec<String> = inv.iter().map(|x| m.show(x)).collect();
    let lines = vec![
        format!("components: {}", comps.join(", ")),
        format!("invariants: {}", invs.join(", ")),
        format!("1-cocycles: {}", z1.len()),
    ];
    Ok(Outcome { result: json!({ "components": comps, "invariants": invs, "z1": z1.len() }), report, partial: None, lines })
}

fn pics_symbolic(ctx: &Ctx, path: &PathBuf) -> Result<Outcome> {
    let doc = PicSDoc::parse(&read(path)?)?;
    let (m, act) = doc.build()?;
    let mut report = ValidationReport::new();
    report.extend("PicS: ", m.verify());
    let mut lines = vec![format!("{} elements in {} components", m.elements().len(), m.components())];
    let mut result = json!({ "elements": m.elements().len(), "components": m.components() });
    if let Some(act) = act {
        report.extend("alpha*: ", act.validate());
        let z1 = crate::pics::z1_pics(&act, ctx.cap)?;
        for f in &z1 {
            let shown: Vec<String> = f.iter().map(|x| m.show(x)).collect();
            report.extend(&format!("Phi_f for f = [{}]: ", shown.join(", ")), check_rep(&act, &phi_f(&act, f)?, false));
        }
        let shown: Vec<Vec<String>> = z1.iter().map(|f| f.iter().map(|x| m.show(x)).collect()).collect();
        lines.push(format!("1-cocycles: {}", z1.len()));
        for f in &shown {
            lines.push(format!("f = [{}]", f.join(", ")));
        }
        result["z1"] = json!(shown);
        result["invariants"] = json!(act.invariants().iter().map(|x| m.show(x)).collect::<Vec<_>>());
    }
    Ok(Outcome { result, report, partial: None, lines })
}

fn z1(cx: &Complex, cap: u128) -> Result<Vec<Cochain>> {
    let mut out = Vec::new();
    for f in cx.cochains(1, cap)? {
        if cx.is_cocycle(&f)? {
            out.push(f);
        }
    }
    Ok(out)
}

fn cmd_phi1(ctx: &Ctx, cocycle: Option<&PathBuf>) -> Result<Outcome> {
    let (ext, hash) = ctx.load()?;
    let pa = ext.action.clone();
    let g = ctx.galois(ext)?;
    let r = &*pa.ring;
    let cx = Complex::new(&pa);
    let fs = match cocycle {
        Some(p) => vec![CochainDoc::parse(&read(p)?)?.build(&pa, &hash)?],
        None => z1(&cx, ctx.cap)?,
    };
    let mut report = ValidationReport::new();
    let mut results = Vec::new();
    let mut lines = Vec::new();
    for f in &fs {
        let res = phi1(&g, f)?;
        report.extend(&format!("f = {}: ", f.show(&pa)), res.report.clone());
        lines.push(format!(
            "f = {}: R_f^G = {{{}}}, generator {}",
            f.show(&pa),
            res.elements.iter().map(|&x| r.show(x)).collect::<Vec<_>>().join(", "),
            res.generator.map(|x| r.show(x)).unwrap_or_else(|| "none".into())
        ));
        results.push(json!({
            "cocycle": cochain_json(&pa, f, &hash),
            "module": res.elements.iter().map(|&x| r.to_json(x)).collect::<Vec<_>>(),
            "generator": res.generator.map(|x| r.to_json(x)),
            "coboundary_of": res.coboundary_of.map(|x| r.to_json(x)),
            "class": res.class,
        }));
    }
    if cocycle.is_none() {
        report.extend("", check_phi1_multiplicative(&g, &fs)?);
    }
    Ok(Outcome { result: json!(results), report, partial: None, lines })
}

fn cmd_phi2(ctx: &Ctx) -> Result<Outcome> {
    let (ext, _) = ctx.load()?;
    let g = ctx.galois(ext)?;
    let res = phi2(&g);
    let act = alpha_star(&g.action);
    let shown = act.monoid.show(&res.image);
    Ok(Outcome { result: json!({ "image": shown }), report: res.report, partial: None, lines: vec![format!("phi2([R^alpha]) = {shown}")] })
}

fn cmd_phi3(ctx: &Ctx, psi: Option<&PathBuf>) -> Result<Outcome> {
    let (ext, hash) = ctx.load()?;
    let pa = ext.action.clone();
    let cx = Complex::new(&pa);
    let r = &*pa.ring;
    let families = match psi {
        Some(p) => vec![PsiDoc::parse(&read(p)?)?.build(&pa, &hash)?],
        None => PsiFamily::all_units(&pa, ctx.cap)?,
    };
    let mut report = ValidationReport::new();
    let mut omegas = Vec::new();
    for u in &families {
        let res = phi3(&pa, &PsiFamily::from_units(&pa, u)?)?;
        if families.len() == 1 {
            report.extend("", res.report);
        } else if let Some(c) = res.report.failures().next() {
            report.fail(format!("family [{}]: {}", u.iter().map(|&x| r.show(x)).collect::<Vec<_>>().join(", "), c.name), c.witness.clone().unwrap_or_default());
        }
        omegas.push(res.omega);
    }
    let mut lines = vec![format!("{} psi families", families.len())];
    if families.len() > 1 {
        let pairs = (families.len() as u128).pow(2);
        if pairs <= ctx.cap {
            let mut bad = None;
            'outer: for (i, u) in families.iter().enumerate() {
                for (j, u2) in families.iter().enumerate() {
                    let w = phi3_change_witness(&pa, u, u2);
                    if cx.mul(&omegas[i], &cx.coboundary(&w)?) != omegas[j] {
                        bad = Some(format!("families {i} and {j}"));
                        break 'outer;
                    }
                }
            }
            report.record("omega' = omega delta1(w) for all pairs", bad);
        } else {
            return Err(Error::Cap { what: "psi family pairs".into(), size: pairs, cap: ctx.cap });
        }
    }
    let mut distinct = omegas.clone();
    distinct.sort();
    distinct.dedup();
    lines.push(format!("{} distinct omega", distinct.len()));
    if families.len() == 1 {
        lines.push(format!("omega = {}", omegas[0].show(&pa)));
    }
    let result = if families.len() == 1 {
        json!({ "omega": cochain_json(&pa, &omegas[0], &hash) })
    } else {
        json!({ "families": families.len(), "distinct_omega": distinct.len() })
    };
    Ok(Outcome { result, report, partial: None, lines })
}

fn cmd_phi4(ctx: &Ctx, cocycle: Option<&PathBuf>) -> Result<Outcome> {
    let (ext, hash) = ctx.load()?;
    let pa = ext.action.clone();
    let omega = match cocycle {
        Some(p) => CochainDoc::parse(&read(p)?)?.build(&pa, &hash)?,
        None => ext.twisting.clone().unwrap_or_else(|| Cochain::identity(&pa, 2)),
    };
    let g = ctx.galois(ext)?;
    let rec = phi4(&g, &omega, ctx.cap)?;
    let class = if rec.trivial { "trivial" } else { "nontrivial" };
    let mut lines = vec![format!("class {class}")];
    if let Some(u) = &rec.witness {
        lines.push(format!("omega = delta1(u), u = {}", u.show(&pa)));
    }
    Ok(Outcome {
        result: json!({ "class": class, "witness": rec.witness.as_ref().map(|u| cochain_json(&pa, u, &hash)) }),
        report: rec.report,
        partial: None,
        lines,
    })
}

fn cmd_phi6(ctx: &Ctx, rho: Option<&PathBuf>) -> Result<Outcome> {
    let (ext, hash) = ctx.load()?;
    let pa = &ext.action;
    let rho = match rho {
        Some(p) => Some(CochainDoc::parse(&read(p)?)?.build(pa, &hash)?),
        None => None,
    };
    let act = alpha_star(pa);
    let f = crate::pics::z1_pics(&act, ctx.cap)?;
    let res = phi6(pa, f.first().map(|v| v.as_slice()), rho.as_ref())?;
    Ok(Outcome {
        result: json!({ "rho": cochain_json(pa, &res.rho, &hash), "omega": cochain_json(pa, &res.omega, &hash) }),
        report: res.report,
        partial: None,
        lines: vec![format!("omega = {}", res.omega.show(pa))],
    })
}

fn verify(ctx: &Ctx) -> Result<Outcome> {
    let (ext, _) = ctx.load()?;
    let g = ctx.galois(ext)?;
    let rep = verify_composites(&g, ctx.cap)?;
    let mut report = ValidationReport::new();
    for p in &rep.probes {
        report.record(p.name.clone(), p.witness.clone());
    }
    let mut lines: Vec<String> = rep.probes.iter().map(|p| format!("{}: {}", p.name, p.detail)).collect();
    lines.push(rep.note.to_string());
    Ok(Outcome { result: serde_json::to_value(&rep).expect("serializable"), report, partial: None, lines })
}
