use serde::Serialize;

use k3lab::verify::SuiteReport;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct JsonCheck<'a> {
    pub id: &'a str,
    pub description: &'a str,
    pub status: &'static str,
    pub witness: &'a str,
}

#[derive(Serialize)]
pub struct JsonReport<'a> {
    pub suite: &'a str,
    pub status: &'static str,
    pub checks: Vec<JsonCheck<'a>>,
    pub elapsed_ms: u128,
    pub version: &'static str,
    pub mutation: Option<&'a str>,
}

fn status(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

pub fn to_json(r: &SuiteReport, mutation: Option<&str>) -> String {
    let doc = JsonReport {
        suite: &r.suite,
        status: status(r.passed()),
        checks: r
            .checks
            .iter()
            .map(|c| JsonCheck {
                id: &c.id,
                description: &c.description,
                status: status(c.passed),
                witness: &c.witness,
            })
            .collect(),
        elapsed_ms: r.elapsed_ms,
        version: VERSION,
        mutation,
    };
    serde_json::to_string_pretty(&doc).expect("report serialises")
}

pub fn to_text(r: &SuiteReport, mutation: Option<&str>) -> String {
    let id_w = r
        .checks
        .iter()
        .map(|c| c.id.len())
        .max()
        .unwrap_or(2)
        .max(2);
    let mut out = format!(
        "suite {}  status {}  checks {}  elapsed_ms {}  version {VERSION}\n",
        r.suite,
        status(r.passed()),
        r.checks.len(),
        r.elapsed_ms
    );
    if let Some(m) = mutation {
        out.push_str(&format!("mutation {m}\n"));
    }
    out.push_str(&format!("{:<id_w$}  {:<6}  witness\n", "id", "status"));
    for c in &r.checks {
        out.push_str(&format!(
            "{:<id_w$}  {:<6}  {}\n",
            c.id,
            status(c.passed),
            c.witness
        ));
    }
    let failed: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
    if !failed.is_empty() {
        out.push_str(&format!("failed: {}\n", failed.join(", ")));
    }
    out
}
