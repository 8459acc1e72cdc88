//! Machine-checkable verification reports with deterministic JSON
//! rendering: object keys keep insertion order, floats print in shortest
//! round-trip form, and no volatile data enters byte-compared outputs
//! (runtime is optional and omitted from reproducibility-sensitive
//! reports).

use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq)]
pub enum JsonValue {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    Array(Vec<JsonValue>),
    Object(Vec<(String, JsonValue)>),
}

impl From<bool> for JsonValue {
    fn from(v: bool) -> Self {
        JsonValue::Bool(v)
    }
}
impl From<i64> for JsonValue {
    fn from(v: i64) -> Self {
        JsonValue::Int(v)
    }
}
impl From<usize> for JsonValue {
    fn from(v: usize) -> Self {
        JsonValue::Int(v as i64)
    }
}
impl From<u64> for JsonValue {
    fn from(v: u64) -> Self {
        JsonValue::Int(v as i64)
    }
}
impl From<f64> for JsonValue {
    fn from(v: f64) -> Self {
        JsonValue::Float(v)
    }
}
impl From<&str> for JsonValue {
    fn from(v: &str) -> Self {
        JsonValue::Str(v.to_string())
    }
}
impl From<String> for JsonValue {
    fn from(v: String) -> Self {
        JsonValue::Str(v)
    }
}
impl From<Vec<JsonValue>> for JsonValue {
    fn from(v: Vec<JsonValue>) -> Self {
        JsonValue::Array(v)
    }
}

/// Shortest decimal that parses back to exactly `x`, capped at 12
/// significant digits so renderings stay stable golden files, always with
/// a decimal point so floats stay visibly floats.
fn fmt_float(x: f64) -> String {
    if !x.is_finite() {
        return "null".to_string();
    }
    let mut s = format!("{x}");
    if significant_digits(&s) > 12 {
        let rounded: f64 = format!("{x:.11e}").parse().unwrap();
        s = format!("{rounded}");
    }
    if !s.contains('.') {
        s.push_str(".0");
    }
    s
}

/// Digits excluding the leading zeros of sub-1 magnitudes; trailing zeros
/// of wide integers overcount, which only triggers a value-preserving
/// re-round.
fn significant_digits(s: &str) -> usize {
    let mut seen_nonzero = false;
    let mut count = 0usize;
    for b in s.bytes() {
        if b.is_ascii_digit() {
            if b != b'0' {
                seen_nonzero = true;
            }
            if seen_nonzero {
                count += 1;
            }
        }
    }
    count
}

fn escape_into(s: &str, out: &mut String) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

impl JsonValue {
    pub fn object(pairs: Vec<(&str, JsonValue)>) -> JsonValue {
        JsonValue::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out);
        out
    }

    fn render_into(&self, out: &mut String) {
        match self {
            JsonValue::Null => out.push_str("null"),
            JsonValue::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            JsonValue::Int(i) => {
                let _ = write!(out, "{i}");
            }
            JsonValue::Float(x) => out.push_str(&fmt_float(*x)),
            JsonValue::Str(s) => escape_into(s, out),
            JsonValue::Array(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.render_into(out);
                }
                out.push(']');
            }
            JsonValue::Object(pairs) => {
                out.push('{');
                for (i, (k, v)) in pairs.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    escape_into(k, out);
                    out.push(':');
                    v.render_into(out);
                }
                out.push('}');
            }
        }
    }
}

/// Outcome of one verification driver run.
#[derive(Clone, Debug)]
pub struct Report {
    /// Which claim was checked, e.g. "spectral-bound" or "eta-table".
    pub claim: String,
    /// Input parameters, in a fixed order.
    pub params: Vec<(String, JsonValue)>,
    /// "exhaustive" or "certificate".
    pub mode: String,
    pub pass: bool,
    /// Re-checkable evidence: graph6 strings, witnesses, eigenvalues.
    pub certificates: Vec<JsonValue>,
    /// Named counts and measured quantities, in a fixed order.
    pub tallies: Vec<(String, JsonValue)>,
    /// Wall-clock duration; None keeps the rendering reproducible.
    pub runtime_ms: Option<u64>,
}

impl Report {
    pub fn new(claim: &str, mode: &str) -> Self {
        Report {
            claim: claim.to_string(),
            params: Vec::new(),
            mode: mode.to_string(),
            pass: false,
            certificates: Vec::new(),
            tallies: Vec::new(),
            runtime_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<JsonValue>) -> Self {
        self.params.push((key.to_string(), value.into()));
        self
    }

    pub fn tally(&mut self, key: &str, value: impl Into<JsonValue>) {
        self.tallies.push((key.to_string(), value.into()));
    }

    pub fn to_json_value(&self) -> JsonValue {
        let mut pairs: Vec<(String, JsonValue)> = vec![
            ("claim".into(), JsonValue::Str(self.claim.clone())),
            ("params".into(), JsonValue::Object(self.params.clone())),
            ("mode".into(), JsonValue::Str(self.mode.clone())),
            ("pass".into(), JsonValue::Bool(self.pass)),
            (
                "certificates".into(),
                JsonValue::Array(self.certificates.clone()),
            ),
            ("tallies".into(), JsonValue::Object(self.tallies.clone())),
        ];
        if let Some(ms) = self.runtime_ms {
            pairs.push(("runtime_ms".into(), JsonValue::Int(ms as i64)));
        }
        JsonValue::Object(pairs)
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().render()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_rendering() {
        assert_eq!(fmt_float(6.0), "6.0");
        assert_eq!(fmt_float(0.5), "0.5");
        assert_eq!(fmt_float(-2.0), "-2.0");
        // wider values are capped at 12 significant digits
        assert_eq!(fmt_float(1.0 + 2.0_f64.sqrt()), "2.41421356237");
        assert_eq!(fmt_float(1.0 + 28.0_f64.sqrt()), "6.29150262213");
        assert_eq!(fmt_float(5.999999999999999), "6.0");
        assert_eq!(fmt_float(-1.0 / 3.0), "-0.333333333333");
        // values within the cap round-trip to the identical bits
        for x in [0.25, 1e-12, 6.0001, 123456789.125] {
            let s = fmt_float(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
        // capped values stay within a relative 1e-11 of the input
        for x in [
            1.0 / 3.0,
            2.0_f64.sqrt(),
            6.000000000000001,
            298.0_f64.sqrt() + 1.0,
        ] {
            let s = fmt_float(x);
            let back: f64 = s.parse().unwrap();
            assert!(((back - x) / x).abs() < 1e-11, "{s}");
        }
        assert_eq!(fmt_float(f64::NAN), "null");
    }

    #[test]
    fn escaping() {
        let v = JsonValue::Str("a\\b\"c\n\u{1}".to_string());
        assert_eq!(v.render(), "\"a\\\\b\\\"c\\n\\u0001\"");
    }

    #[test]
    fn object_order_is_insertion_order() {
        let v = JsonValue::object(vec![
            ("zebra", 1i64.into()),
            ("apple", 2i64.into()),
            ("mango", JsonValue::Array(vec![JsonValue::Null, true.into()])),
        ]);
        assert_eq!(v.render(), r#"{"zebra":1,"apple":2,"mango":[null,true]}"#);
    }

    #[test]
    fn report_shape() {
        let mut r = Report::new("spectral-bound", "certificate").param("m", 27usize);
        r.pass = true;
        r.tally("lambda", 6.0);
        assert_eq!(
            r.to_json(),
            r#"{"claim":"spectral-bound","params":{"m":27},"mode":"certificate","pass":true,"certificates":[],"tallies":{"lambda":6.0}}"#
        );
        r.runtime_ms = Some(12);
        assert!(r.to_json().ends_with(r#""runtime_ms":12}"#));
    }
}
