//! Structured output documents. Every report serializes to JSON and parses
//! back under the same schema; the text and CSV renderings are for humans
//! and spreadsheets.

use serde::{Deserialize, Serialize};

use crate::distance::DistanceResult;
use crate::dual::{CheckStatus, DualCheck};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct DistanceSummary {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub work: u64,
    pub ops: u64,
}

impl DistanceSummary {
    pub fn of(r: &DistanceResult) -> DistanceSummary {
        DistanceSummary { lower: r.lower, upper: r.upper, exact: r.exact, work: r.work, ops: r.ops }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CheckOutcome {
    pub name: String,
    /// "pass" | "fail" | "n/a"
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl CheckOutcome {
    pub fn of(check: &DualCheck) -> CheckOutcome {
        let (status, detail) = match &check.status {
            CheckStatus::Pass => ("pass", None),
            CheckStatus::Fail(d) => ("fail", Some(d.clone())),
            CheckStatus::NotApplicable(d) => ("n/a", Some(d.clone())),
        };
        CheckOutcome { name: check.name.clone(), status: status.into(), detail }
    }

    pub fn passing(name: &str) -> CheckOutcome {
        CheckOutcome { name: name.into(), status: "pass".into(), detail: None }
    }

    pub fn failing(name: &str, detail: String) -> CheckOutcome {
        CheckOutcome { name: name.into(), status: "fail".into(), detail: Some(detail) }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsReport {
    pub q: u32,
    pub modulus: Vec<u32>,
    pub i: u32,
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<DistanceSummary>,
    pub module_closed: bool,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualReport {
    pub n: usize,
    pub k: usize,
    pub dual_k: usize,
    pub gamma: usize,
    pub module_closed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub g_bar_v: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub g_bar_vp: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l_bar_v: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l_bar_vp: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h_bar_v: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h_bar_vp: Option<String>,
    pub checks: Vec<CheckOutcome>,
    pub cardinality_checks: Vec<CheckOutcome>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructReport {
    pub n: usize,
    pub k_plain: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d_plain: Option<DistanceSummary>,
    pub k_built: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d_built: Option<DistanceSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub output_path: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRowOutcome {
    pub id: String,
    pub expected_n: usize,
    pub expected_k: usize,
    pub expected_d: usize,
    pub n: usize,
    pub k: usize,
    pub d_lower: usize,
    pub d_upper: usize,
    pub exact: bool,
    /// "plain" | "lengthened"
    pub path: String,
    /// "pass" | "bounded" | "contradiction"
    pub status: String,
    pub module_closed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableReport {
    pub rows: Vec<TableRowOutcome>,
    pub pass: usize,
    pub bounded: usize,
    pub contradictions: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureReport {
    pub path: String,
    pub q: u32,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<DistanceSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected_d: Option<usize>,
    /// "pass" | "bounded" | "contradiction"
    pub status: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchEvent {
    pub g_v: String,
    pub g_vp: String,
    pub l_v: String,
    pub l_vp: String,
    pub h_v: String,
    pub h_vp: String,
    pub n: usize,
    pub k: usize,
    pub d_lower: usize,
    pub d_upper: usize,
    pub exact: bool,
    pub module_closed: bool,
}

fn fmt_d(d: &Option<DistanceSummary>) -> String {
    match d {
        None => "-".into(),
        Some(s) if s.exact => format!("{}", s.upper),
        Some(s) => format!("[{}, {}]", s.lower, s.upper),
    }
}

pub fn render_params_text(rep: &ParamsReport) -> String {
    let mut out = format!(
        "code over GF({}) (modulus {:?}), theta_{}, lengths ({}, {})\n\
         gray image: [n, k, d] = [{}, {}, {}]\n\
         shift-closed: {}\n",
        rep.q,
        rep.modulus,
        rep.i,
        rep.r,
        rep.s,
        rep.n,
        rep.k,
        fmt_d(&rep.d),
        if rep.module_closed { "yes" } else { "no" },
    );
    for c in &rep.checks {
        out.push_str(&format!(
            "  check {:<40} {}{}\n",
            c.name,
            c.status,
            c.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default()
        ));
    }
    out
}

pub fn render_dual_text(rep: &DualReport) -> String {
    let mut out = format!(
        "primal [n, k] = [{}, {}], dual k = {}, gamma = {}\n",
        rep.n, rep.k, rep.dual_k, rep.gamma
    );
    if let (Some(gv), Some(gvp)) = (&rep.g_bar_v, &rep.g_bar_vp) {
        out.push_str(&format!("g-bar: v: {gv}\n       v': {gvp}\n"));
    }
    if let (Some(lv), Some(lvp)) = (&rep.l_bar_v, &rep.l_bar_vp) {
        out.push_str(&format!("l-bar: v: {lv}\n       v': {lvp}\n"));
    }
    if let (Some(hv), Some(hvp)) = (&rep.h_bar_v, &rep.h_bar_vp) {
        out.push_str(&format!("h-bar: v: {hv}\n       v': {hvp}\n"));
    }
    for c in rep.checks.iter().chain(&rep.cardinality_checks) {
        out.push_str(&format!(
            "  check {:<50} {}{}\n",
            c.name,
            c.status,
            c.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default()
        ));
    }
    out
}

pub fn render_construct_text(rep: &ConstructReport) -> String {
    let mut out = format!(
        "plain:      [n, k, d] = [{}, {}, {}]\nlengthened: [n, k, d] = [{}, {}, {}]\n",
        rep.n,
        rep.k_plain,
        fmt_d(&rep.d_plain),
        rep.n,
        rep.k_built,
        fmt_d(&rep.d_built),
    );
    if let Some(p) = &rep.output_path {
        out.push_str(&format!("generator matrix written to {p}\n"));
    }
    out
}

pub fn render_table_text(rep: &TableReport) -> String {
    let mut out = String::from(
        "id                 expected        got               path        status\n",
    );
    for row in &rep.rows {
        let got = if row.exact {
            format!("[{}, {}, {}]", row.n, row.k, row.d_upper)
        } else {
            format!("[{}, {}, {}..{}]", row.n, row.k, row.d_lower, row.d_upper)
        };
        out.push_str(&format!(
            "{:<18} [{}, {}, {}]{:<4} {:<17} {:<11} {}\n",
            row.id,
            row.expected_n,
            row.expected_k,
            row.expected_d,
            "",
            got,
            row.path,
            row.status,
        ));
    }
    out.push_str(&format!(
        "{} pass, {} bounded, {} contradictions\n",
        rep.pass, rep.bounded, rep.contradictions
    ));
    out
}

pub fn render_table_csv(rep: &TableReport) -> String {
    let mut out = String::from(
        "id,expected_n,expected_k,expected_d,n,k,d_lower,d_upper,exact,path,status,module_closed\n",
    );
    for r in &rep.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.id,
            r.expected_n,
            r.expected_k,
            r.expected_d,
            r.n,
            r.k,
            r.d_lower,
            r.d_upper,
            r.exact,
            r.path,
            r.status,
            r.module_closed
        ));
    }
    out
}

pub fn render_fixture_text(rep: &FixtureReport) -> String {
    format!(
        "{}: {}x{} over GF({}), rank {}{}, d {}{} -> {}\n",
        rep.path,
        rep.rows,
        rep.cols,
        rep.q,
        rep.rank,
        rep.expected_rank.map(|r| format!(" (expected {r})")).unwrap_or_default(),
        fmt_d(&rep.d),
        rep.expected_d.map(|d| format!(" (expected {d})")).unwrap_or_default(),
        rep.status
    )
}

pub fn render_search_event_text(ev: &SearchEvent) -> String {
    format!(
        "[n, k, d] = [{}, {}, {}] g_v={} g_v'={} l_v={} l_v'={} h_v={} h_v'={} closed={}\n",
        ev.n,
        ev.k,
        if ev.exact { format!("{}", ev.d_upper) } else { format!("{}..{}", ev.d_lower, ev.d_upper) },
        ev.g_v,
        ev.g_vp,
        ev.l_v,
        ev.l_vp,
        ev.h_v,
        ev.h_vp,
        ev.module_closed,
    )
}
