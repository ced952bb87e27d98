//! Machine-readable check reports shared by the verification suites and
//! the command-line front end.

use std::collections::BTreeMap;

use serde::Serialize;

pub const REPORT_SCHEMA: &str = "cp2q-report/1";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, got: impl ToString, pass: bool) -> Self {
        Check { name: name.into(), expected: expected.to_string(), got: got.to_string(), pass, witness: None }
    }

    /// A check whose expected and observed values are compared as strings.
    pub fn eq(name: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        let (e, g) = (expected.to_string(), got.to_string());
        let pass = e == g;
        Check { name: name.into(), expected: e, got: g, pass, witness: None }
    }

    /// An identity `lhs = 0`; `residual` is displayed when it fails.
    pub fn vanishes(name: impl Into<String>, residual: Option<String>) -> Self {
        let pass = residual.is_none();
        Check {
            name: name.into(),
            expected: "0".into(),
            got: if pass { "0".into() } else { "nonzero".into() },
            pass,
            witness: residual,
        }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: String,
    pub params: BTreeMap<String, serde_json::Value>,
    /// Computed values that are not pass/fail checks.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub results: BTreeMap<String, serde_json::Value>,
    pub checks: Vec<Check>,
    pub pass: bool,
    /// Not part of the deterministic body; see [`SuiteReport::body_json`].
    pub wall_time_ms: u128,
    pub versions: BTreeMap<String, String>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        let mut versions = BTreeMap::new();
        versions.insert("cp2q".into(), env!("CARGO_PKG_VERSION").into());
        versions.insert("rewrite-cache".into(), crate::ncpoly::CACHE_VERSION.to_string());
        SuiteReport {
            schema: REPORT_SCHEMA,
            suite: suite.into(),
            params: BTreeMap::new(),
            results: BTreeMap::new(),
            checks: Vec::new(),
            pass: true,
            wall_time_ms: 0,
            versions,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.into(), serde_json::to_value(value).expect("serializable parameter"));
        self
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.into(), serde_json::to_value(value).expect("serializable result"));
    }

    pub fn push(&mut self, c: Check) {
        self.pass &= c.pass;
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        for c in cs {
            self.push(c);
        }
    }

    /// Appends another report's checks under a name prefix.
    pub fn absorb(&mut self, other: SuiteReport) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.push(c);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// JSON with the wall time zeroed, so identical runs are byte-identical.
    pub fn body_json(&self) -> String {
        let mut r = self.clone();
        r.wall_time_ms = 0;
        serde_json::to_string_pretty(&r).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check: `suite name pass expected got`.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("suite\tcheck\tpass\texpected\tgot\n");
        for (k, v) in &self.results {
            let text = match v {
                serde_json::Value::String(x) => x.clone(),
                other => other.to_string(),
            };
            s.push_str(&format!("{}\tresult:{}\t\t\t{}\n", self.suite, k, text.replace(['\t', '\n'], " ")));
        }
        for c in &self.checks {
            s.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", self.suite, c.name, c.pass, c.expected.replace('\t', " "), c.got.replace('\t', " ")));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_pass_tracks_checks() {
        let mut r = SuiteReport::new("t");
        r.push(Check::eq("a", 1, 1));
        assert!(r.pass);
        r.push(Check::eq("b", 1, 2));
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.body_json(), r.body_json());
    }
}
