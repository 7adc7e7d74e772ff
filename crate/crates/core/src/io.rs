//! APX and TGF input, and JSON / text rendering of results.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::argset::ArgSet;
use crate::criteria::{CriterionReport, Witness};
use crate::error::{Error, Result};
use crate::extension::{ExtensionSet, Semantics};
use crate::framework::Framework;
use crate::generators::{TruncationReport, Verdict};

pub const SCHEMA: u32 = 1;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parse `arg(X).` and `att(X,Y).` facts; `%` starts a comment. Arguments
/// keep the order of their first declaration.
pub fn parse_apx(text: &str) -> Result<Framework> {
    let mut labels: Vec<String> = Vec::new();
    let mut declared = HashSet::new();
    let mut attacks: Vec<(usize, String, String)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let mut rest = raw.split('%').next().unwrap_or("").trim();
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| parse_error(line_no, format!("expected a fact, found `{rest}`")))?;
            let name = rest[..open].trim();
            let close = rest[open..]
                .find(')')
                .map(|i| open + i)
                .ok_or_else(|| parse_error(line_no, "missing `)`"))?;
            let args: Vec<&str> = rest[open + 1..close].split(',').map(str::trim).collect();
            let after = rest[close + 1..].trim_start();
            rest = after
                .strip_prefix('.')
                .ok_or_else(|| parse_error(line_no, "missing `.` after fact"))?
                .trim_start();
            if args
                .iter()
                .any(|a| a.is_empty() || a.contains(char::is_whitespace) || a.contains('('))
            {
                return Err(parse_error(line_no, "malformed argument name"));
            }
            match (name, args.as_slice()) {
                ("arg", [a]) => {
                    if declared.insert(a.to_string()) {
                        labels.push(a.to_string());
                    }
                }
                ("att", [a, b]) => attacks.push((line_no, a.to_string(), b.to_string())),
                ("arg" | "att", _) => {
                    return Err(parse_error(line_no, format!("wrong arity for `{name}`")))
                }
                _ => return Err(parse_error(line_no, format!("unknown predicate `{name}`"))),
            }
        }
    }
    for (line_no, a, b) in &attacks {
        for x in [a, b] {
            if !declared.contains(x) {
                return Err(parse_error(*line_no, format!("undeclared argument `{x}`")));
            }
        }
    }
    Framework::build(labels, attacks.into_iter().map(|(_, a, b)| (a, b)))
}

fn check_label(label: &str) -> Result<()> {
    let bad =
        label.is_empty() || label.contains(|c: char| c.is_whitespace() || "(),%#".contains(c));
    if bad {
        Err(Error::InvalidParams(format!(
            "label `{label}` cannot be written"
        )))
    } else {
        Ok(())
    }
}

pub fn serialize_apx(f: &Framework) -> Result<String> {
    let mut out = String::new();
    for l in f.labels() {
        check_label(l)?;
        writeln!(out, "arg({l}).").expect("string write");
    }
    for (a, b) in f.attack_pairs() {
        writeln!(out, "att({},{}).", f.label(a), f.label(b)).expect("string write");
    }
    Ok(out)
}

/// Node lines (first token is the identifier), a `#` line, then edge lines
/// `FROM TO`.
pub fn parse_tgf(text: &str) -> Result<Framework> {
    let mut labels: Vec<String> = Vec::new();
    let mut known = HashSet::new();
    let mut attacks = Vec::new();
    let mut in_edges = false;
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if in_edges {
                return Err(parse_error(line_no, "second `#` separator"));
            }
            in_edges = true;
            continue;
        }
        let mut tokens = line.split_whitespace();
        if !in_edges {
            let id = tokens.next().expect("non-empty line");
            if !known.insert(id.to_string()) {
                return Err(parse_error(line_no, format!("duplicate node `{id}`")));
            }
            labels.push(id.to_string());
        } else {
            let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
                return Err(parse_error(line_no, "edge line needs two node identifiers"));
            };
            for x in [a, b] {
                if !known.contains(x) {
                    return Err(parse_error(line_no, format!("unknown node `{x}`")));
                }
            }
            attacks.push((a.to_string(), b.to_string()));
        }
    }
    if !in_edges {
        return Err(parse_error(last_line.max(1), "missing `#` separator"));
    }
    Framework::build(labels, attacks)
}

pub fn serialize_tgf(f: &Framework) -> Result<String> {
    let mut out = String::new();
    for l in f.labels() {
        check_label(l)?;
        writeln!(out, "{l}").expect("string write");
    }
    out.push_str("#\n");
    for (a, b) in f.attack_pairs() {
        writeln!(out, "{} {}", f.label(a), f.label(b)).expect("string write");
    }
    Ok(out)
}

/// Input formats accepted by [`parse`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Apx,
    Tgf,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "apx" => Ok(Format::Apx),
            "tgf" => Ok(Format::Tgf),
            _ => Err(Error::InvalidParams(format!("unknown format `{s}`"))),
        }
    }
}

impl Format {
    /// Guess from a file name: `.tgf` is TGF, anything else APX.
    pub fn from_path(path: &str) -> Format {
        if path.ends_with(".tgf") {
            Format::Tgf
        } else {
            Format::Apx
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Framework> {
    match format {
        Format::Apx => parse_apx(text),
        Format::Tgf => parse_tgf(text),
    }
}

/// Labels of `s`, in argument order.
fn labels(f: &Framework, s: &ArgSet) -> Vec<String> {
    f.labels_of(s)
}

fn with_schema(mut v: Value) -> Value {
    let mut out = serde_json::Map::new();
    out.insert("schema".into(), json!(SCHEMA));
    if let Value::Object(m) = &mut v {
        out.append(m);
    }
    Value::Object(out)
}

fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

pub fn extensions_json(f: &Framework, which: Semantics, es: &ExtensionSet) -> String {
    render(&with_schema(json!({
        "semantics": which,
        "count": es.len(),
        "extensions": es.labels(f),
    })))
}

pub fn extensions_text(f: &Framework, which: Semantics, es: &ExtensionSet) -> String {
    let mut out = format!("{which}: {} extension(s)\n", es.len());
    for s in es {
        writeln!(out, "  {{{}}}", labels(f, s).join(", ")).expect("string write");
    }
    out
}

/// Whether an argument is accepted, credulously or skeptically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Credulous,
    Skeptical,
}

pub fn acceptance_json(which: Semantics, mode: Mode, argument: &str, accepted: bool) -> String {
    render(&with_schema(json!({
        "semantics": which,
        "mode": mode,
        "argument": argument,
        "accepted": accepted,
    })))
}

pub fn acceptance_text(which: Semantics, mode: Mode, argument: &str, accepted: bool) -> String {
    let m = match mode {
        Mode::Credulous => "credulously",
        Mode::Skeptical => "skeptically",
    };
    let verdict = if accepted { "YES" } else { "NO" };
    format!("{verdict}: {argument} {m} accepted under {which}\n")
}

fn witness_value(f: &Framework, w: &Witness) -> Value {
    match w {
        Witness::Nested { smaller, larger } => json!({
            "kind": "nested",
            "smaller": labels(f, smaller),
            "larger": labels(f, larger),
        }),
        Witness::Defended {
            extension,
            argument,
        } => json!({
            "kind": "defended",
            "extension": labels(f, extension),
            "argument": f.label(*argument),
        }),
        Witness::MissingGrounded {
            extension,
            argument,
        } => json!({
            "kind": "missing-grounded",
            "extension": labels(f, extension),
            "argument": f.label(*argument),
        }),
        Witness::Directionality {
            unattacked,
            restricted,
            projected,
        } => json!({
            "kind": "directionality",
            "unattacked": labels(f, unattacked),
            "restricted": restricted.labels(f),
            "projected": projected.labels(f),
        }),
        Witness::Skepticism {
            relation,
            left,
            right,
        } => json!({
            "kind": "skepticism",
            "relation": relation,
            "left": left.labels(f),
            "right": right.labels(f),
        }),
    }
}

fn report_value(f: &Framework, r: &CriterionReport) -> Value {
    json!({
        "criterion": r.criterion,
        "semantics": r.semantics,
        "holds": r.holds,
        "witness": r.witness.as_ref().map(|w| witness_value(f, w)),
    })
}

pub fn report_json(f: &Framework, r: &CriterionReport) -> String {
    render(&with_schema(report_value(f, r)))
}

pub fn reports_json(f: &Framework, rs: &[CriterionReport]) -> String {
    let all: Vec<Value> = rs.iter().map(|r| report_value(f, r)).collect();
    render(&with_schema(json!({ "reports": all })))
}

fn set_text(f: &Framework, s: &ArgSet) -> String {
    format!("{{{}}}", labels(f, s).join(", "))
}

fn family_text(f: &Framework, es: &ExtensionSet) -> String {
    let parts: Vec<String> = es.iter().map(|s| set_text(f, s)).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn report_text(f: &Framework, r: &CriterionReport) -> String {
    let sem = r.semantics.map(|s| format!(" [{s}]")).unwrap_or_default();
    let mut out = format!(
        "{}{}: {}\n",
        r.criterion,
        sem,
        if r.holds { "holds" } else { "fails" }
    );
    if let Some(w) = &r.witness {
        let line = match w {
            Witness::Nested { smaller, larger } => {
                format!(
                    "{} is a proper subset of {}",
                    set_text(f, smaller),
                    set_text(f, larger)
                )
            }
            Witness::Defended {
                extension,
                argument,
            } => {
                format!(
                    "{} defends {} but omits it",
                    set_text(f, extension),
                    f.label(*argument)
                )
            }
            Witness::MissingGrounded {
                extension,
                argument,
            } => format!(
                "{} omits grounded argument {}",
                set_text(f, extension),
                f.label(*argument)
            ),
            Witness::Directionality {
                unattacked,
                restricted,
                projected,
            } => format!(
                "U = {}: restricted {} vs projected {}",
                set_text(f, unattacked),
                family_text(f, restricted),
                family_text(f, projected)
            ),
            Witness::Skepticism {
                relation,
                left,
                right,
            } => format!(
                "{} is not {:?}-below {}",
                family_text(f, left),
                relation,
                family_text(f, right)
            ),
        };
        writeln!(out, "  witness: {line}").expect("string write");
    }
    out
}

pub fn truncation_json(r: &TruncationReport) -> String {
    let v = serde_json::to_value(r).expect("report serializes");
    render(&with_schema(v))
}

pub fn truncation_text(r: &TruncationReport) -> String {
    let mut out = r.family.clone();
    for (k, v) in &r.params {
        write!(out, " {k}={v}").expect("string write");
    }
    writeln!(out, " under {}", r.semantics).expect("string write");
    let mut header = format!("{:<16}", "level");
    for n in &r.levels {
        write!(header, "{n:>10}").expect("string write");
    }
    out.push_str(header.trim_end());
    out.push('\n');
    let mut counts = format!("{:<16}", "extensions");
    for c in &r.extension_counts {
        let shown = c.map_or("-".to_string(), |c| c.to_string());
        write!(counts, "{shown:>10}").expect("string write");
    }
    out.push_str(counts.trim_end());
    out.push('\n');
    let tracked: BTreeMap<&String, &Vec<Verdict>> = r.tracked.iter().collect();
    for (label, row) in tracked {
        let mut line = format!("{label:<16}");
        for v in row {
            let shown = match v {
                Verdict::Accepted => "in",
                Verdict::Rejected => "out",
                Verdict::Absent => "absent",
                Verdict::Gap => "gap",
            };
            write!(line, "{shown:>10}").expect("string write");
        }
        let stable = if r.stabilized[label] {
            "stable"
        } else {
            "unstable"
        };
        writeln!(line, "  {stable}").expect("string write");
        out.push_str(&line);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scc_semantics::enumerate_semantics;
    use crate::Limits;
    use proptest::prelude::*;

    #[test]
    fn apx_parsing() {
        let f = parse_apx("arg(a). arg(b). att(a,b).").unwrap();
        assert_eq!(f, fixtures::single_attack());
        let err = parse_apx("arg(a).\natt(a,c).").unwrap_err();
        assert_eq!(err, parse_error(2, "undeclared argument `c`"));
        assert!(matches!(
            parse_apx("arg(a)\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_apx("arg(a).\nfoo(a).\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_apx("att(a).\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        let commented = parse_apx("% header\narg( a ). % trailing\n\narg(b).att(b,a).\n").unwrap();
        assert_eq!(commented.attack_pairs(), vec![(1, 0)]);
        assert!(parse_apx("").unwrap().is_empty());
    }

    #[test]
    fn tgf_parsing() {
        let f = parse_tgf("1\n2\n#\n1 2").unwrap();
        assert_eq!(f.labels(), ["1", "2"]);
        assert_eq!(f.attack_pairs(), vec![(0, 1)]);
        assert!(parse_tgf("#\n").unwrap().is_empty());
        assert!(matches!(
            parse_tgf("1\n#\n1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_tgf("1\n#\n1 9\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_tgf("1\n2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn round_trips_on_fixtures() {
        for (name, f) in fixtures::all() {
            assert_eq!(parse_apx(&serialize_apx(&f).unwrap()).unwrap(), f, "{name}");
            assert_eq!(parse_tgf(&serialize_tgf(&f).unwrap()).unwrap(), f, "{name}");
        }
        let odd = Framework::build(["a b"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(serialize_apx(&odd).is_err());
    }

    #[test]
    fn extension_json_shape() {
        let pt = fixtures::pentagon_tail();
        let es = enumerate_semantics(&pt, Semantics::Cf2, &Limits::default()).unwrap();
        let v: Value = serde_json::from_str(&extensions_json(&pt, Semantics::Cf2, &es)).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["semantics"], "cf2");
        assert_eq!(v["extensions"], json!([["a", "b1", "b3"]]));

        let none = ExtensionSet::default();
        let v: Value =
            serde_json::from_str(&extensions_json(&pt, Semantics::Stage, &none)).unwrap();
        assert_eq!(v["extensions"], json!([]));
    }

    #[test]
    fn directionality_witness_json() {
        let ab = fixtures::single_attack();
        let r =
            crate::criteria::check_directionality(&ab, Semantics::Naive, None, &Limits::default())
                .unwrap();
        let v: Value = serde_json::from_str(&report_json(&ab, &r)).unwrap();
        assert_eq!(v["holds"], false);
        assert_eq!(v["witness"]["kind"], "directionality");
        assert_eq!(v["witness"]["unattacked"], json!(["a"]));
        assert_eq!(v["witness"]["restricted"], json!([["a"]]));
        assert_eq!(v["witness"]["projected"], json!([[], ["a"]]));
        assert!(report_text(&ab, &r).contains("U = {a}"));
    }

    proptest! {
        #[test]
        fn apx_round_trip(f in crate::testing::arb_framework(10)) {
            prop_assert_eq!(parse_apx(&serialize_apx(&f).unwrap()).unwrap(), f);
        }
    }
}
