//! Verification suites behind `plabic verify`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Value};

use plabic::equivalence::{certify_fflv, gt_evidence, w0_check, Check};
use plabic::flows::{pluecker_check, FlowModel, PlueckerMode};
use plabic::polyhedra::{ehrhart_counts, lattice_points, minkowski_sum};
use plabic::poset::GridPoset;
use plabic::rec::{build_rec, dualize, RecGraph};
use plabic::valuation::{no_level1, no_level_r, ValuationContext};
use plabic::{Error, Result, Subset};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Figures,
    Plucker,
    Stanley,
    Minkowski,
    Fflv,
    Gt,
    W0,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Figures => "figures",
            Suite::Plucker => "plucker",
            Suite::Stanley => "stanley",
            Suite::Minkowski => "minkowski",
            Suite::Fflv => "fflv",
            Suite::Gt => "gt",
            Suite::W0 => "w0",
            Suite::All => "all",
        }
    }
}

pub struct Report {
    k: usize,
    n: usize,
    suites: Vec<(&'static str, Vec<Check>, Value)>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites
            .iter()
            .all(|(_, checks, _)| checks.iter().all(|c| c.passed))
    }

    pub fn to_json(&self) -> Value {
        let suites: Vec<Value> = self
            .suites
            .iter()
            .map(|(name, checks, data)| {
                json!({
                    "suite": name,
                    "passed": checks.iter().all(|c| c.passed),
                    "checks": checks,
                    "data": data,
                })
            })
            .collect();
        json!({ "k": self.k, "n": self.n, "passed": self.passed(), "suites": suites })
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for (name, checks, _) in &self.suites {
            for c in checks {
                writeln!(
                    out,
                    "[{}] {name}/{}: {}",
                    if c.passed { "ok" } else { "FAIL" },
                    c.name,
                    c.detail
                )
                .unwrap();
            }
        }
        out
    }
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

const REC_4_7_LABELS: [&str; 13] = [
    "167", "127", "123", "267", "237", "234", "367", "347", "345", "467", "457", "456", "567",
];

pub fn run_suite(
    suite: Suite,
    k: usize,
    n: usize,
    seed: u64,
    output: Option<&Path>,
) -> Result<Report> {
    // validates the range before any suite runs
    build_rec(k, n)?;
    let suites = match suite {
        Suite::All => [
            Suite::Figures,
            Suite::Plucker,
            Suite::Stanley,
            Suite::Minkowski,
            Suite::Fflv,
            Suite::Gt,
            Suite::W0,
        ]
        .into_iter()
        .map(|s| one(s, k, n, seed, output))
        .collect::<Result<Vec<_>>>()?,
        s => vec![one(s, k, n, seed, output)?],
    };
    Ok(Report { k, n, suites })
}

fn one(
    suite: Suite,
    k: usize,
    n: usize,
    seed: u64,
    output: Option<&Path>,
) -> Result<(&'static str, Vec<Check>, Value)> {
    if crate::verbose() {
        eprintln!("running suite {} for ({k},{n})", suite.name());
    }
    let (checks, data) = match suite {
        Suite::Figures => figures(k, n)?,
        Suite::Plucker => plucker(k, n, seed)?,
        Suite::Stanley => stanley(k, n)?,
        Suite::Minkowski => minkowski(k, n)?,
        Suite::Fflv => fflv(k, n, output)?,
        Suite::Gt => gt(k, n)?,
        Suite::W0 => w0(k, n)?,
        Suite::All => unreachable!("expanded by run_suite"),
    };
    Ok((suite.name(), checks, data))
}

fn figures(k: usize, n: usize) -> Result<(Vec<Check>, Value)> {
    let m = n - k;
    let primal = build_rec(k, n)?;
    let dual = dualize(&primal)?;
    let mut checks = Vec::new();

    let perm = primal.graph().trip_permutation()?;
    let expected: Vec<usize> = (1..=n).map(|i| (i + m - 1) % n + 1).collect();
    checks.push(check(
        "trip permutation",
        perm == expected,
        format!("{perm:?}"),
    ));

    let faces = primal.graph().faces().len();
    checks.push(check(
        "face count",
        faces == k * m + 1,
        format!("{faces} faces"),
    ));

    let labels: Vec<String> = primal.net.labels().iter().map(Subset::to_string).collect();
    if (k, n) == (4, 7) {
        let mut got = labels.clone();
        let mut want: Vec<String> = REC_4_7_LABELS.iter().map(|s| s.to_string()).collect();
        got.sort();
        want.sort();
        let matched = want.iter().filter(|l| got.contains(l)).count();
        checks.push(check(
            "rec(4,7) labels",
            got == want,
            format!("{matched} of 13 labels matched"),
        ));
    }

    let empty = ValuationContext::new(&primal.net)?.empty_face_label();
    checks.push(check(
        "primal F_empty",
        empty == Subset::range(k + 1, n),
        format!("{empty}"),
    ));
    let dual_empty = ValuationContext::new(&dual.net)?.empty_face_label();
    checks.push(check(
        "dual F_empty",
        dual_empty == Subset::range(m + 1, n),
        format!("{dual_empty}"),
    ));

    checks.push(check(
        "dual sources",
        dual.net.sources() == Subset::interval(k),
        format!("{}", dual.net.sources()),
    ));
    let complements = primal
        .net
        .labels()
        .iter()
        .zip(dual.net.labels())
        .all(|(p, d)| *d == p.complement(n));
    checks.push(check(
        "dual complements",
        complements,
        "every dual face label is the primal complement",
    ));

    let mut data = json!({ "permutation": perm, "labels": labels });
    if m >= 2 && k >= 3 {
        // minimal path from 3 to n - 1 in the dual: up the left column, then along a row
        let model = FlowModel::new(&dual.net)?;
        let (path, _) = model.minimal_path(3, n - 1)?;
        let ids: Vec<String> = path
            .vertices(&dual.net)
            .iter()
            .map(|&v| dual.graph().vertices()[v].id.clone())
            .collect();
        let shape = vertical_then_horizontal(&dual, &ids);
        checks.push(check("minimal path 3 -> n-1", shape, ids.join(" -> ")));
        data["minimal_path"] = json!(ids);
    }
    Ok((checks, data))
}

/// Internal vertices climb one grid column (two adjacent x values, rising y),
/// then run along one grid row (two adjacent y values, rising x).
fn vertical_then_horizontal(rec: &RecGraph, ids: &[String]) -> bool {
    let pos: BTreeMap<&str, (f64, f64)> = rec
        .graph()
        .vertices()
        .iter()
        .map(|v| (v.id.as_str(), v.pos.to_f64()))
        .collect();
    let inner: Vec<(f64, f64)> = ids[1..ids.len() - 1]
        .iter()
        .map(|id| pos[id.as_str()])
        .collect();
    if inner.len() < 3 {
        return false;
    }
    let x0 = inner[0].0;
    let turn = inner
        .windows(2)
        .position(|w| !(w[1].1 > w[0].1 && (w[1].0 - x0).abs() <= 1.0))
        .unwrap_or(inner.len() - 1);
    let row = &inner[turn..];
    let y_lo = row.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let y_hi = row.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    turn > 0 && row.len() > 1 && y_hi - y_lo <= 1.0 && row.windows(2).all(|w| w[1].0 > w[0].0)
}

fn plucker(k: usize, n: usize, seed: u64) -> Result<(Vec<Check>, Value)> {
    let primal = build_rec(k, n)?;
    let dual = dualize(&primal)?;
    let mut checks = Vec::new();
    let mut data = serde_json::Map::new();
    for (role, net) in [("primal", &primal.net), ("dual", &dual.net)] {
        let mode = if n <= 5 {
            PlueckerMode::Symbolic
        } else {
            PlueckerMode::Numeric
        };
        let report = pluecker_check(net, mode, seed)?;
        let detail = match report.failures.first() {
            None => format!("{} relations vanish ({mode:?})", report.relations),
            Some(f) => format!(
                "{} of {} relations fail; {f}",
                report.failures.len(),
                report.relations
            ),
        };
        checks.push(check(
            &format!("{role} relations"),
            report.failures.is_empty(),
            detail,
        ));
        if mode == PlueckerMode::Numeric {
            checks.push(check(
                &format!("{role} positivity"),
                report.nonpositive.is_empty(),
                format!(
                    "{} values, {} nonpositive",
                    report.evaluated,
                    report.nonpositive.len()
                ),
            ));
        }
        data.insert(
            role.into(),
            json!({ "relations": report.relations, "seed": seed }),
        );
    }
    Ok((checks, Value::Object(data)))
}

fn stanley(k: usize, n: usize) -> Result<(Vec<Check>, Value)> {
    let poset = GridPoset::new(k, n)?;
    let order = ehrhart_counts(&poset.order_polytope_h(1), &[1, 2, 3])?;
    let chain = ehrhart_counts(&poset.chain_polytope_h(1), &[1, 2, 3])?;
    let checks = vec![check(
        "ehrhart equality",
        order == chain,
        format!("order {order:?}, chain {chain:?}"),
    )];
    Ok((checks, json!({ "order": order, "chain": chain })))
}

fn minkowski(k: usize, n: usize) -> Result<(Vec<Check>, Value)> {
    let poset = GridPoset::new(k, n)?;
    let mut checks = Vec::new();
    for (name, h1, h2) in [
        (
            "order",
            poset.order_polytope_h(1),
            poset.order_polytope_h(2),
        ),
        (
            "chain",
            poset.chain_polytope_h(1),
            poset.chain_polytope_h(2),
        ),
    ] {
        let s1 = lattice_points(&h1)?;
        let s2 = lattice_points(&h2)?;
        let sum = minkowski_sum(&s1, &s1)?;
        checks.push(check(
            &format!("{name} S1+S1 = S2"),
            sum.same_points(&s2),
            format!("{} sums, {} level-2 points", sum.len(), s2.len()),
        ));
    }
    let dual = dualize(&build_rec(k, n)?)?;
    let ctx = ValuationContext::new(&dual.net)?;
    let no2 = no_level_r(&ctx, 2)?.len();
    let c2 = lattice_points(&poset.chain_polytope_h(2))?.len();
    checks.push(check(
        "dual level 2 count",
        no2 == c2,
        format!("{no2} Minkowski points, {c2} FFLV points"),
    ));
    Ok((checks, json!({ "level2": no2 })))
}

fn fflv(k: usize, n: usize, output: Option<&Path>) -> Result<(Vec<Check>, Value)> {
    let cert = certify_fflv(k, n)?;
    let default = format!("fflv-certificate-{k}-{n}.json");
    let path = output
        .map(Path::to_path_buf)
        .unwrap_or_else(|| default.into());
    let mut text = serde_json::to_string_pretty(&cert.to_json())?;
    text.push('\n');
    fs::write(&path, text)
        .map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display())))?;
    let data = json!({ "status": cert.status, "determinant": cert.determinant, "certificate": path.display().to_string() });
    Ok((cert.checks, data))
}

fn gt(k: usize, n: usize) -> Result<(Vec<Check>, Value)> {
    let ev = gt_evidence(k, n)?;
    let checks = ev
        .comparisons
        .iter()
        .map(|c| {
            let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
            let skipped = c.no_side.is_none() && c.gt_side.is_none();
            let detail = format!("{} vs {} {}", show(c.no_side), show(c.gt_side), c.note)
                .trim_end()
                .to_string();
            check(&c.quantity, skipped || c.agrees(), detail)
        })
        .collect();
    Ok((checks, serde_json::to_value(&ev)?))
}

/// Passes on matching point counts; the full certificate outcome is reported as data.
fn w0(k: usize, n: usize) -> Result<(Vec<Check>, Value)> {
    let cert = w0_check(k, n)?;
    let counts = cert
        .check("counts")
        .cloned()
        .expect("certificates carry a counts check");
    let no1 = no_level1(&ValuationContext::new(&build_rec(k, n)?.net)?)?.len();
    let data = json!({
        "status": cert.status,
        "determinant": cert.determinant,
        "checks": cert.checks,
        "primal_points": no1,
    });
    Ok((vec![counts], data))
}
