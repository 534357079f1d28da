//! The `garside` command-line front end.
//!
//! Reports go to stdout as key-sorted JSON (or `key: value` lines with
//! `--text`); diagnostics go to stderr. Exit codes: 0 success, 1 usage
//! error, 2 domain error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::conjugacy::{is_conjugate, summit_invariants, super_summit_set, DEFAULT_CAP};
use crate::element::Element;
use crate::error::GarsideError;
use crate::format::parse_raw;
use crate::instances::InstanceSpec;
use crate::periodicity::{
    commensurable, delta_root_certificate, garside_element_from_central, gcd_periodic_exponent, is_central,
    is_garside_element_with_cap, lens_profile, periodicity_class, translation_numbers,
};
use crate::quotient::{certify_cyclic, enumerate_type_i, group_by_conjugacy, quotient_order, QuotientOrder};
use crate::structure::{validate_structure, StructureTable};

pub const CAP_ENV: &str = "GARSIDE_CAP";

#[derive(Parser, Debug)]
#[command(name = "garside", version, about = "Computations in finite Garside structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a structure against the Garside axioms.
    Validate(Options),
    /// Left normal form of --word.
    Nf(Options),
    /// inf, sup and canonical length of --word.
    Invariants(Options),
    /// Summit invariants and super summit set of --word.
    Summit(Options),
    /// Decide whether --left and --right are conjugate.
    Conjugate(Options),
    /// Translation numbers and periodicity class of --word.
    Periodic(Options),
    /// Certify that g^b is conjugate to Δ^a (--a, --b); with --gcd, that
    /// g^gcd(a,b) is conjugate to a power of Δ.
    Roots(Options),
    /// Garside-element test, and the Garside element of a central --word.
    GarsideElement(Options),
    /// Order of the image of --word in the quotient by the central Δ-power.
    QuotientOrder(Options),
    /// Enumerate finite cyclic subgroup generators of the quotient.
    EnumerateFinite(Options),
    /// Single generator of the quotient subgroup generated by the --word
    /// arguments.
    CertifyCyclic(Options),
    /// Search for k, l with --left^k conjugate to --right^l.
    Commensurable(Options),
}

#[derive(Args, Debug)]
struct Options {
    /// braid:N, torus:A:B, free_abelian:L or custom:PATH
    #[arg(long)]
    instance: String,
    /// Word in the simples; may repeat for certify-cyclic.
    #[arg(long, allow_hyphen_values = true)]
    word: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    left: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    right: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<i64>,
    #[arg(long)]
    bound: Option<i64>,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    gcd: bool,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
}

enum Failure {
    Usage(String),
    Domain(GarsideError),
    /// Domain failure that still produced a report for stdout.
    DomainWithReport(Value, String),
}

impl From<GarsideError> for Failure {
    fn from(e: GarsideError) -> Self {
        Failure::Domain(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let (opts, result) = dispatch(&cli.command);
    let text = opts.text;
    match result {
        Ok(report) => {
            let _ = stdout.write_all(render(&report, text).as_bytes());
            0
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            1
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
        Err(Failure::DomainWithReport(report, message)) => {
            let _ = stdout.write_all(render(&report, text).as_bytes());
            let _ = writeln!(stderr, "error: {message}");
            2
        }
    }
}

fn dispatch(command: &Command) -> (&Options, Outcome<Value>) {
    match command {
        Command::Validate(o) => (o, validate(o)),
        Command::Nf(o) => (o, with_word(o, |g| Ok(element_json(&g)))),
        Command::Invariants(o) => (o, with_word(o, |g| Ok(json!({"inf": g.inf(), "sup": g.sup(), "len": g.canonical_length()})))),
        Command::Summit(o) => (o, summit(o)),
        Command::Conjugate(o) => (o, conjugate(o)),
        Command::Periodic(o) => (o, with_word(o, periodic)),
        Command::Roots(o) => (o, roots(o)),
        Command::GarsideElement(o) => (o, garside_element(o)),
        Command::QuotientOrder(o) => (o, with_word(o, quotient)),
        Command::EnumerateFinite(o) => (o, enumerate_finite(o)),
        Command::CertifyCyclic(o) => (o, certify(o)),
        Command::Commensurable(o) => (o, commensurable_cmd(o)),
    }
}

fn render(report: &Value, text: bool) -> String {
    if !text {
        return format!("{report}\n");
    }
    match report {
        Value::Object(map) => map.iter().map(|(k, v)| format!("{k}: {}\n", text_value(v))).collect(),
        other => format!("{}\n", text_value(other)),
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) if m.contains_key("inf") && m.contains_key("factors") => {
            let factors: Vec<&str> = m["factors"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
            let inf = m["inf"].as_i64().unwrap_or(0);
            let mut parts = Vec::new();
            if inf != 0 {
                parts.push(format!("D^{inf}"));
            }
            parts.extend(factors.iter().map(|s| s.to_string()));
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join(" ")
            }
        }
        other => other.to_string(),
    }
}

fn element_json(g: &Element) -> Value {
    json!({"inf": g.inf(), "factors": g.factor_names()})
}

fn cap(o: &Options) -> Outcome<usize> {
    if let Some(c) = o.cap {
        return Ok(c);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{CAP_ENV} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn instance(o: &Options) -> Outcome<Arc<StructureTable>> {
    let spec: InstanceSpec = o.instance.parse().map_err(|e: GarsideError| Failure::Usage(e.to_string()))?;
    Ok(spec.build()?)
}

fn parse_word(table: &Arc<StructureTable>, flag: &str, text: &str) -> Outcome<Element> {
    Element::parse(table, text).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn single_word(o: &Options) -> Outcome<&str> {
    match &o.word[..] {
        [w] => Ok(w),
        [] => Err(Failure::Usage("--word is required".into())),
        _ => Err(Failure::Usage("--word given more than once".into())),
    }
}

fn with_word(o: &Options, f: impl FnOnce(Element) -> Outcome<Value>) -> Outcome<Value> {
    let w = single_word(o)?;
    let table = instance(o)?;
    f(parse_word(&table, "word", w)?)
}

fn left_right(o: &Options) -> Outcome<(Element, Element)> {
    let (Some(l), Some(r)) = (&o.left, &o.right) else {
        return Err(Failure::Usage("--left and --right are required".into()));
    };
    let table = instance(o)?;
    Ok((parse_word(&table, "left", l)?, parse_word(&table, "right", r)?))
}

fn validate(o: &Options) -> Outcome<Value> {
    let spec: InstanceSpec = o.instance.parse().map_err(|e: GarsideError| Failure::Usage(e.to_string()))?;
    let raw = match &spec {
        InstanceSpec::Custom(path) => read_custom(path)?,
        _ => spec.build()?.to_raw(),
    };
    let report = validate_structure(&raw).map_err(GarsideError::from)?;
    let mut out = Map::new();
    out.insert("valid".into(), json!(report.passed()));
    out.insert("violations".into(), json!(report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>()));
    out.insert("skipped".into(), json!(report.skipped));
    out.insert("caveats".into(), json!(report.caveats));
    out.insert("simples".into(), json!(raw.names.len()));
    if !report.passed() {
        return Err(Failure::DomainWithReport(Value::Object(out), "structure violates the Garside axioms".into()));
    }
    let table = StructureTable::from_raw(raw)?;
    out.insert("atoms".into(), json!(table.atoms().iter().map(|&a| table.name(a)).collect::<Vec<_>>()));
    out.insert("delta".into(), json!(table.name(table.delta())));
    out.insert("garside_norm".into(), json!(table.garside_norm()));
    out.insert("tau_order".into(), json!(table.tau_order()));
    out.insert("central_exponent".into(), json!(table.central_exponent()));
    Ok(Value::Object(out))
}

fn read_custom(path: &Path) -> Outcome<crate::structure::RawStructure> {
    let bytes = std::fs::read(path)
        .map_err(|e| GarsideError::Instance(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_raw(&bytes)?)
}

fn summit(o: &Options) -> Outcome<Value> {
    let cap = cap(o)?;
    with_word(o, |g| {
        let s = summit_invariants(&g);
        let sss = super_summit_set(&g, cap)?;
        Ok(json!({
            "infs": s.infs,
            "sups": s.sups,
            "lens": s.lens,
            "representative": element_json(&s.representative),
            "conjugator": element_json(&s.conjugator),
            "super_summit_set": sss.iter().map(element_json).collect::<Vec<_>>(),
        }))
    })
}

fn conjugate(o: &Options) -> Outcome<Value> {
    let cap = cap(o)?;
    let (g, h) = left_right(o)?;
    Ok(match is_conjugate(&g, &h, cap)? {
        Some(w) => json!({"conjugate": true, "conjugator": element_json(&w)}),
        None => json!({"conjugate": false}),
    })
}

fn periodic(g: Element) -> Outcome<Value> {
    let t = translation_numbers(&g);
    let mut out = Map::new();
    out.insert("inf".into(), json!(t.inf.to_string()));
    out.insert("sup".into(), json!(t.sup.to_string()));
    out.insert("len".into(), json!(t.len.to_string()));
    match periodicity_class(&g)? {
        Some(r) => {
            out.insert("periodic".into(), json!(true));
            out.insert("p".into(), json!(r.p));
            out.insert("q".into(), json!(r.q));
            out.insert("conjugator".into(), element_json(&r.conjugator));
            out.insert("lens_profile".into(), json!(lens_profile(&g, 2 * r.q as usize)?));
            out.insert("check".into(), json!("g^q is conjugate to Δ^p and lens(g^k) vanishes exactly at multiples of q"));
        }
        None => {
            out.insert("periodic".into(), json!(false));
        }
    }
    Ok(Value::Object(out))
}

fn roots(o: &Options) -> Outcome<Value> {
    let (Some(a), Some(b)) = (o.a, o.b) else {
        return Err(Failure::Usage("--a and --b are required".into()));
    };
    with_word(o, |g| {
        if o.gcd {
            let c = gcd_periodic_exponent(&g, a, b)?;
            verify(g.power(c.d).conjugate_by(&c.conjugator) == Element::delta_power(g.table(), c.e))?;
            return Ok(json!({
                "a": a,
                "b": b,
                "d": c.d,
                "e": c.e,
                "conjugator": element_json(&c.conjugator),
                "check": "g^a and g^b conjugate to Δ-powers implies the same for g^gcd(a,b)",
            }));
        }
        let c = delta_root_certificate(&g, a, b)?;
        verify(g.power(c.q).conjugate_by(&c.conjugator) == Element::delta_power(g.table(), c.p))?;
        Ok(json!({
            "a": a,
            "b": b,
            "p": c.p,
            "q": c.q,
            "conjugator": element_json(&c.conjugator),
            "check": "g^b is conjugate to Δ^a when INF(g) = a/b",
        }))
    })
}

fn verify(ok: bool) -> Outcome<()> {
    if ok {
        Ok(())
    } else {
        Err(GarsideError::Internal("certificate failed verification".into()).into())
    }
}

fn garside_element(o: &Options) -> Outcome<Value> {
    let cap = cap(o)?;
    with_word(o, |g| {
        let garside = g.is_positive() && is_garside_element_with_cap(&g, cap)?;
        let central = is_central(&g);
        let mut out = Map::new();
        out.insert("is_garside_element".into(), json!(garside));
        out.insert("central".into(), json!(central));
        if central && !g.is_identity() {
            let (k, c) = garside_element_from_central(&g)?;
            out.insert("k".into(), json!(k));
            out.insert("garside_element".into(), element_json(&c));
            out.insert("check".into(), json!("Δ^k·g is a Garside element for central g"));
        }
        Ok(Value::Object(out))
    })
}

fn quotient(g: Element) -> Outcome<Value> {
    let m = g.table().central_exponent();
    Ok(match quotient_order(&g)? {
        QuotientOrder::Finite(n) => json!({"order": n, "central_exponent": m, "check": "order equals qm/gcd(p,m)"}),
        QuotientOrder::Infinite => json!({"order": "infinite", "central_exponent": m}),
    })
}

fn enumerate_finite(o: &Options) -> Outcome<Value> {
    let cap = cap(o)?;
    let table = instance(o)?;
    let gens = enumerate_type_i(&table)?;
    let classes = group_by_conjugacy(&gens, cap)?;
    let list: Vec<Value> = gens
        .iter()
        .map(|g| {
            json!({
                "u": g.u,
                "a": table.name(g.a),
                "q": g.q,
                "order": g.order,
                "element": element_json(&g.element),
            })
        })
        .collect();
    Ok(json!({
        "central_exponent": table.central_exponent(),
        "generators": list,
        "classes": classes,
        "check": "twisted product of a equals Δ and (Δ^u·a)^q = Δ^(uq+1)",
    }))
}

fn certify(o: &Options) -> Outcome<Value> {
    let cap = cap(o)?;
    if o.word.is_empty() {
        return Err(Failure::Usage("at least one --word is required".into()));
    }
    let table = instance(o)?;
    let gens = o.word.iter().map(|w| parse_word(&table, "word", w)).collect::<Outcome<Vec<_>>>()?;
    let (generator, order) = certify_cyclic(&gens, cap)?;
    Ok(json!({
        "generator": element_json(&generator),
        "order": order,
        "check": "finite subgroups of the quotient are cyclic",
    }))
}

fn commensurable_cmd(o: &Options) -> Outcome<Value> {
    let bound = o.bound.unwrap_or(10);
    if bound < 1 {
        return Err(Failure::Usage("--bound must be at least 1".into()));
    }
    let (g, h) = left_right(o)?;
    Ok(match commensurable(&g, &h, bound)? {
        Some((k, l)) => json!({"commensurable": true, "k": k, "l": l}),
        None => json!({"commensurable": false, "bound": bound}),
    })
}
