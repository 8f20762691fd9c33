//! Input documents (TOML or JSON) and report rendering (CSV or JSON).
//!
//! Rationals are written as `"p/q"` strings. On input, integers are also
//! accepted wherever a rational or an integer is expected.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, Poly, RatFunc, Rational};
use crate::bounds::{BoundConstants, BoundReport, DegreeReport, PlaceSetS, ZannierInstance, ZannierOutcome};
use crate::error::{Error, Result};
use crate::numfield::{EpsilonReport, IntRecurrence, SandwichOutcome};
use crate::places::Place;
use crate::recurrence::{PowerSumSpec, PowerSumTerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocFormat {
    Toml,
    Json,
}

impl DocFormat {
    /// JSON for a `.json` extension, TOML otherwise.
    pub fn from_path(path: &Path) -> DocFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => DocFormat::Json,
            _ => DocFormat::Toml,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum NumberText {
    Int(i64),
    Text(String),
}

impl NumberText {
    fn rational(&self) -> Result<Rational> {
        match self {
            NumberText::Int(v) => Ok(Rational::from_integer((*v).into())),
            NumberText::Text(s) => parse_rational(s),
        }
    }

    fn integer(&self) -> Result<BigInt> {
        match self {
            NumberText::Int(v) => Ok((*v).into()),
            NumberText::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        }
    }

    fn from_rational(r: &Rational) -> Self {
        NumberText::Text(format_rational(r))
    }
}

fn poly_of(v: &[NumberText]) -> Result<Poly> {
    Ok(Poly::new(v.iter().map(NumberText::rational).collect::<Result<_>>()?))
}

fn ints_of(v: &[NumberText]) -> Result<Vec<BigInt>> {
    v.iter().map(NumberText::integer).collect()
}

fn one() -> Vec<NumberText> {
    vec![NumberText::Text("1/1".into())]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncDoc {
    num: Vec<NumberText>,
    #[serde(default = "one")]
    den: Vec<NumberText>,
}

impl RatFuncDoc {
    pub fn to_ratfunc(&self) -> Result<RatFunc> {
        RatFunc::normalize(poly_of(&self.num)?, poly_of(&self.den)?)
    }

    pub fn from_ratfunc(f: &RatFunc) -> Self {
        let conv = |p: &Poly| p.coeffs().iter().map(NumberText::from_rational).collect();
        RatFuncDoc {
            num: conv(f.num()),
            den: conv(f.den()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct TermDoc {
    alpha: RatFuncDoc,
    coeffs: Vec<RatFuncDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct SpecDoc {
    terms: Vec<TermDoc>,
}

fn decode<T: for<'de> Deserialize<'de>>(text: &str, fmt: DocFormat) -> Result<T> {
    match fmt {
        DocFormat::Toml => toml::from_str(text).map_err(|e| Error::Parse(e.to_string())),
        DocFormat::Json => serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string())),
    }
}

fn encode<T: Serialize>(v: &T, fmt: DocFormat) -> String {
    match fmt {
        DocFormat::Toml => toml::to_string(v).expect("serializable"),
        DocFormat::Json => serde_json::to_string_pretty(v).expect("serializable") + "\n",
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn parse_spec(text: &str, fmt: DocFormat) -> Result<PowerSumSpec> {
    let doc: SpecDoc = decode(text, fmt)?;
    let terms = doc
        .terms
        .iter()
        .map(|t| {
            let coeffs = t.coeffs.iter().map(RatFuncDoc::to_ratfunc).collect::<Result<_>>()?;
            Ok(PowerSumTerm::new(coeffs, t.alpha.to_ratfunc()?))
        })
        .collect::<Result<Vec<_>>>()?;
    PowerSumSpec::new(terms)
}

pub fn serialize_spec(spec: &PowerSumSpec, fmt: DocFormat) -> String {
    let doc = SpecDoc {
        terms: spec
            .terms()
            .iter()
            .map(|t| TermDoc {
                alpha: RatFuncDoc::from_ratfunc(&t.alpha),
                coeffs: t.coeffs.iter().map(RatFuncDoc::from_ratfunc).collect(),
            })
            .collect(),
    };
    encode(&doc, fmt)
}

/// `"inf"`, `point:<rational>`, `factor:<poly>`, or a bare polynomial
/// such as `x^2+1`.
pub fn parse_place(s: &str) -> Result<Place> {
    let s = s.trim();
    if s == "∞" {
        return Ok(Place::Infinity);
    }
    if s.eq_ignore_ascii_case("inf") || s.starts_with("point:") || s.starts_with("factor:") {
        return parse_mu(s);
    }
    Place::finite(s.parse::<Poly>()?)
}

/// `inf`, `point:<rational>` or `factor:<poly>`.
pub fn parse_mu(s: &str) -> Result<Place> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("inf") {
        return Ok(Place::Infinity);
    }
    if let Some(c) = s.strip_prefix("point:") {
        return Ok(Place::point(&parse_rational(c)?));
    }
    if let Some(f) = s.strip_prefix("factor:") {
        return Place::finite(f.parse::<Poly>()?);
    }
    Err(Error::Parse(format!(
        "place must be inf, point:<rational> or factor:<poly>, got {s:?}"
    )))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct ZannierDoc {
    phis: Vec<RatFuncDoc>,
    #[serde(default)]
    r: usize,
    places: Vec<String>,
}

pub fn parse_zannier(text: &str, fmt: DocFormat) -> Result<ZannierInstance> {
    let doc: ZannierDoc = decode(text, fmt)?;
    let phis = doc.phis.iter().map(RatFuncDoc::to_ratfunc).collect::<Result<_>>()?;
    let places = doc.places.iter().map(|s| parse_place(s)).collect::<Result<Vec<_>>>()?;
    ZannierInstance::new(phis, doc.r, PlaceSetS::from_places(places)?)
}

pub fn serialize_zannier(inst: &ZannierInstance, fmt: DocFormat) -> String {
    let doc = ZannierDoc {
        phis: inst.phis().iter().map(RatFuncDoc::from_ratfunc).collect(),
        r: inst.r(),
        places: inst.s().places().map(|p| p.to_string()).collect(),
    };
    encode(&doc, fmt)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct SandwichDoc {
    f: Vec<NumberText>,
    r: Vec<NumberText>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct NumfieldDoc {
    char_coeffs: Vec<NumberText>,
    initial_terms: Vec<NumberText>,
    #[serde(default)]
    epsilon: Option<NumberText>,
    #[serde(default)]
    n_max: Option<u64>,
    #[serde(default)]
    precision_bits: Option<u32>,
    #[serde(default)]
    sandwich: Option<SandwichDoc>,
}

pub const DEFAULT_PRECISION_BITS: u32 = 256;

/// A parsed numfield input. Absent fields are left to the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumfieldInput {
    pub char_coeffs: Vec<BigInt>,
    pub initial_terms: Vec<BigInt>,
    pub epsilon: Option<Rational>,
    pub n_max: Option<u64>,
    pub precision_bits: u32,
    /// `(f, r values)` for product sandwich checks.
    pub sandwich: Option<(Vec<BigInt>, Vec<BigInt>)>,
}

impl NumfieldInput {
    pub fn recurrence(&self) -> Result<IntRecurrence> {
        IntRecurrence::new(self.char_coeffs.clone(), self.initial_terms.clone(), self.precision_bits)
    }
}

pub fn parse_numfield(text: &str, fmt: DocFormat) -> Result<NumfieldInput> {
    let doc: NumfieldDoc = decode(text, fmt)?;
    Ok(NumfieldInput {
        char_coeffs: ints_of(&doc.char_coeffs)?,
        initial_terms: ints_of(&doc.initial_terms)?,
        epsilon: doc.epsilon.as_ref().map(NumberText::rational).transpose()?,
        n_max: doc.n_max,
        precision_bits: doc.precision_bits.unwrap_or(DEFAULT_PRECISION_BITS),
        sandwich: doc
            .sandwich
            .as_ref()
            .map(|s| Ok::<_, Error>((ints_of(&s.f)?, ints_of(&s.r)?)))
            .transpose()?,
    })
}

pub fn serialize_numfield(inp: &NumfieldInput, fmt: DocFormat) -> String {
    let ints = |v: &[BigInt]| v.iter().map(|x| NumberText::Text(x.to_string())).collect();
    let doc = NumfieldDoc {
        char_coeffs: ints(&inp.char_coeffs),
        initial_terms: ints(&inp.initial_terms),
        epsilon: inp.epsilon.as_ref().map(NumberText::from_rational),
        n_max: inp.n_max,
        precision_bits: Some(inp.precision_bits),
        sandwich: inp.sandwich.as_ref().map(|(f, r)| SandwichDoc { f: ints(f), r: ints(r) }),
    };
    encode(&doc, fmt)
}

// ---- reports ----

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf8")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

pub fn constants_json(c: &BoundConstants) -> String {
    json(c)
}

pub fn constants_csv(c: &BoundConstants) -> String {
    let s: Vec<String> = c.s.places().map(|p| p.to_string()).collect();
    let ks: Vec<String> = c.k_js.iter().map(|k| k.to_string()).collect();
    let rows = [
        ("c_tilde", c.c_tilde.to_string()),
        ("q", c.q.to_string()),
        ("genus", c.genus.to_string()),
        ("k_js", ks.join(";")),
        ("S", s.join(";")),
        ("size_over_C", c.size_over_c.to_string()),
        ("c1", c.c1.to_string()),
        ("c2", c.c2.to_string()),
        ("min_mu_alpha", c.min_mu_alpha.to_string()),
        ("upper_constant", c.upper_constant.to_string()),
    ];
    csv_text(&["key", "value"], rows.into_iter().map(|(k, v)| vec![k.to_string(), v]))
}

pub fn bound_report_csv(r: &BoundReport) -> String {
    let mut out = format!(
        "# place={}\n# n0_observed={}\n# independence_horizon={}\n",
        r.place,
        opt(r.n0_observed),
        opt(r.independence_horizon)
    );
    out += &csv_text(
        &["n", "mu_Gn", "lower", "upper", "ok", "zero_skip"],
        r.rows.iter().map(|row| {
            vec![
                row.n.to_string(),
                opt(row.mu_gn),
                row.lower.to_string(),
                row.upper.to_string(),
                row.ok.to_string(),
                row.zero_skip().to_string(),
            ]
        }),
    );
    out
}

pub fn bound_report_json(r: &BoundReport) -> String {
    json(r)
}

pub fn degree_report_csv(r: &DegreeReport) -> String {
    let mut out = format!(
        "# constant={}\n# max_alpha_degree={}\n# n0_observed={}\n",
        r.constant,
        r.max_alpha_degree,
        opt(r.n0_observed)
    );
    out += &csv_text(
        &["n", "deg_Gn", "bound", "slack", "ok"],
        r.rows.iter().map(|row| {
            vec![
                row.n.to_string(),
                opt(row.deg_gn),
                row.bound.to_string(),
                opt(row.slack),
                row.ok.to_string(),
            ]
        }),
    );
    out
}

pub fn degree_report_json(r: &DegreeReport) -> String {
    json(r)
}

#[derive(Serialize)]
struct HorizonDoc<'a> {
    horizon: Option<u64>,
    independent: &'a [bool],
}

pub fn horizon_csv(horizon: Option<u64>, profile: &[bool]) -> String {
    let mut out = format!("# horizon={}\n", opt(horizon));
    out += &csv_text(
        &["n", "independent"],
        profile
            .iter()
            .enumerate()
            .map(|(n, ok)| vec![n.to_string(), ok.to_string()]),
    );
    out
}

pub fn horizon_json(horizon: Option<u64>, profile: &[bool]) -> String {
    json(&HorizonDoc {
        horizon,
        independent: profile,
    })
}

pub fn zannier_csv(o: &ZannierOutcome) -> String {
    csv_text(
        &["lhs", "rhs", "ok"],
        [vec![o.lhs.to_string(), o.rhs.to_string(), o.ok.to_string()]],
    )
}

pub fn zannier_json(o: &ZannierOutcome) -> String {
    json(o)
}

/// Everything the numfield command reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumfieldSummary {
    pub epsilon: String,
    pub precision_bits: u32,
    pub distinct_roots: u64,
    pub max_multiplicity: u32,
    /// `ln c(k, a)` as a decimal string, absent when too large to expand.
    pub schmidt_log_bound: Option<String>,
    pub report: EpsilonReport,
    pub sandwich: Vec<SandwichRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SandwichRecord {
    pub r: String,
    #[serde(flatten)]
    pub outcome: SandwichOutcome,
}

pub fn numfield_csv(s: &NumfieldSummary) -> String {
    let mut out = format!(
        "# epsilon={}\n# precision_bits={}\n# min_n={}\n",
        s.epsilon,
        s.precision_bits,
        opt(s.report.min_n)
    );
    out += &csv_text(
        &["n", "abs_Gn_digits", "threshold_log", "ok"],
        s.report.rows.iter().map(|row| {
            vec![
                row.n.to_string(),
                row.abs_gn_digits.to_string(),
                row.threshold_log.clone(),
                row.ok.to_string(),
            ]
        }),
    );
    out
}

pub fn numfield_json(s: &NumfieldSummary) -> String {
    json(s)
}
