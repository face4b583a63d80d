//! The minimal-path map `ψ` from the chain polytope of `P_{k,n}` to the
//! Newton-Okounkov points of the dual rec graph, its certification, and the
//! weaker evidence collected on the order-polytope side.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::flows::FlowModel;
use crate::polyhedra::{
    ehrhart_counts, facets, lattice_points, vertex_indices, LatticePointSet, LinearMapZ,
};
use crate::poset::{j_to_antichain, GridPoset};
use crate::rec::{apply_w0, build_rec, dualize, Network};
use crate::subset::Subset;
use crate::valuation::{no_level1, no_level_r, ValuationContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Certified,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// One row of the bijection table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Correspondence {
    pub j: String,
    pub antichain: String,
    /// Characteristic vector of the antichain.
    pub source: Vec<i64>,
    /// `ν(P_J)`.
    pub target: Vec<i64>,
    /// Sum of the minimal-path weights over the antichain, computed from the graph.
    pub additive: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceCertificate {
    pub label: String,
    pub map: LinearMapZ,
    pub determinant: String,
    pub bijection: Vec<Correspondence>,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl EquivalenceCertificate {
    pub fn certified(&self) -> bool {
        self.status == Status::Certified
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("certificates serialize")
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}: {:?}", self.label, self.status).unwrap();
        writeln!(
            out,
            "  map {}x{}, det = {}",
            self.map.rows.len(),
            self.map.cols.len(),
            self.determinant
        )
        .unwrap();
        for c in &self.checks {
            writeln!(
                out,
                "  [{}] {}: {}",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.detail
            )
            .unwrap();
        }
        out
    }
}

fn element_names(a: &[(usize, usize)]) -> String {
    let names: Vec<String> = a.iter().map(|&e| GridPoset::name(e)).collect();
    format!("{{{}}}", names.join(","))
}

/// Runs the four checks on a map and a bijection table.
///
/// `source` and `target` are the two point sets; every correspondence must use
/// each of their points exactly once.
pub fn certify_parts(
    label: &str,
    map: LinearMapZ,
    source: &LatticePointSet,
    target: &LatticePointSet,
    bijection: Vec<Correspondence>,
) -> EquivalenceCertificate {
    let mut checks = Vec::new();

    let counts_ok = source.len() == target.len() && bijection.len() == source.len();
    checks.push(Check {
        name: "counts".into(),
        passed: counts_ok,
        detail: format!(
            "|source| = {}, |target| = {}, pairs = {}",
            source.len(),
            target.len(),
            bijection.len()
        ),
    });

    let bad_add: Vec<&Correspondence> = bijection
        .iter()
        .filter(|c| c.additive != c.target)
        .collect();
    checks.push(Check {
        name: "additivity".into(),
        passed: bad_add.is_empty(),
        detail: match bad_add.first() {
            None => format!(
                "nu(P_J) equals the sum over the antichain for all {} J",
                bijection.len()
            ),
            Some(c) => format!(
                "{} violations; first J = {}: nu = {:?}, sum = {:?}",
                bad_add.len(),
                c.j,
                c.target,
                c.additive
            ),
        },
    });

    let mut map_failures = Vec::new();
    for c in &bijection {
        let image = map.apply(&c.source);
        if image != c.target {
            map_failures.push(format!(
                "J = {} (antichain {}): psi(chi) = {:?} but nu(P_J) = {:?}",
                c.j, c.antichain, image, c.target
            ));
        }
    }
    let sources: BTreeSet<&Vec<i64>> = bijection.iter().map(|c| &c.source).collect();
    let targets: BTreeSet<&Vec<i64>> = bijection.iter().map(|c| &c.target).collect();
    let covers = sources.len() == bijection.len()
        && targets.len() == bijection.len()
        && sources == source.points.iter().collect()
        && targets == target.points.iter().collect();
    if !covers {
        map_failures.push("bijection does not cover both point sets exactly once".into());
    }
    checks.push(Check {
        name: "map".into(),
        passed: map_failures.is_empty(),
        detail: match map_failures.first() {
            None => format!(
                "psi maps all {} characteristic vectors onto nu(P_J)",
                bijection.len()
            ),
            Some(first) => format!("{} violations; {first}", map_failures.len()),
        },
    });

    let det = map.determinant();
    let (det_text, det_ok) = match &det {
        Ok(d) => (d.to_string(), d.abs() == BigInt::one()),
        Err(e) => (format!("undefined ({e})"), false),
    };
    checks.push(Check {
        name: "determinant".into(),
        passed: det_ok,
        detail: format!("det = {det_text}"),
    });

    let status = if checks.iter().all(|c| c.passed) {
        Status::Certified
    } else {
        Status::Failed
    };
    EquivalenceCertificate {
        label: label.into(),
        map,
        determinant: det_text,
        bijection,
        checks,
        status,
    }
}

/// Column for `p_{i,j}`: the weight of the minimal path from `i` to `j`, restricted to `V°`.
pub fn minimal_path_map(
    net: &Network,
    ctx: &ValuationContext,
    poset: &GridPoset,
) -> Result<LinearMapZ> {
    let model = FlowModel::new(net)?;
    let rows = ctx.reduced_names();
    let mut entries = vec![vec![0i64; poset.len()]; rows.len()];
    for (col, &(i, j)) in poset.elements().iter().enumerate() {
        let (_, weight) = model.minimal_path(i, j)?;
        for (row, v) in ctx.project(weight).into_iter().enumerate() {
            entries[row][col] = v;
        }
    }
    LinearMapZ::new(rows, poset.var_names(), entries)
}

/// `ψ` for `(k, n)`, built on the dual rec graph.
pub fn psi_map(k: usize, n: usize) -> Result<LinearMapZ> {
    let dual = dualize(&build_rec(k, n)?)?;
    let ctx = ValuationContext::new(&dual.net)?;
    minimal_path_map(&dual.net, &ctx, &GridPoset::new(k, n)?)
}

/// Inputs for certification of a network whose sources are `{1, …, rank}`
/// against the chain polytope of `P_{rank,n}`.
pub struct Pipeline {
    pub label: String,
    pub poset: GridPoset,
    pub ctx: ValuationContext,
    pub map: LinearMapZ,
    pub chain_points: LatticePointSet,
    pub no_points: LatticePointSet,
    pub bijection: Vec<Correspondence>,
}

impl Pipeline {
    pub fn new(label: &str, net: &Network) -> Result<Self> {
        let n = net.n();
        let rank = net.sources().len();
        if net.sources() != Subset::interval(rank) {
            return Err(Error::Parameter(format!(
                "sources {} are not an initial interval",
                net.sources()
            )));
        }
        let poset = GridPoset::new(rank, n)?;
        let ctx = ValuationContext::new(net)?;
        let map = minimal_path_map(net, &ctx, &poset)?;
        let chain_points = lattice_points(&poset.chain_polytope_h(1))?;
        let no_points = no_level1(&ctx)?;
        let model = FlowModel::new(net)?;
        let mut bijection = Vec::new();
        for p in ctx.polynomials() {
            let antichain = j_to_antichain(rank, n, p.j)?;
            let mut additive = vec![0i64; ctx.reduced_basis().len()];
            for &(i, j) in &antichain {
                let (_, w) = model.minimal_path(i, j)?;
                for (a, b) in additive.iter_mut().zip(ctx.project(w)) {
                    *a += b;
                }
            }
            bijection.push(Correspondence {
                j: p.j.to_string(),
                antichain: element_names(&antichain),
                source: poset.indicator(&antichain),
                target: ctx.valuation(p)?.coords,
                additive,
            });
        }
        Ok(Pipeline {
            label: label.into(),
            poset,
            ctx,
            map,
            chain_points,
            no_points,
            bijection,
        })
    }

    pub fn certify(&self) -> EquivalenceCertificate {
        self.certify_with(self.map.clone())
    }

    /// Certify with a replacement map (used for negative controls).
    pub fn certify_with(&self, map: LinearMapZ) -> EquivalenceCertificate {
        certify_parts(
            &self.label,
            map,
            &self.chain_points,
            &self.no_points,
            self.bijection.clone(),
        )
    }
}

/// Certify `conv(NO¹)` of the dual rec graph against `FFLV¹_{k,n}`.
pub fn certify_fflv(k: usize, n: usize) -> Result<EquivalenceCertificate> {
    Ok(fflv_pipeline(k, n)?.certify())
}

pub fn fflv_pipeline(k: usize, n: usize) -> Result<Pipeline> {
    let dual = dualize(&build_rec(k, n)?)?;
    Pipeline::new(&format!("FFLV({k},{n}) vs dual rec({k},{n})"), &dual.net)
}

/// Identity map of `S(FFLV¹_{k,n})` onto itself.
pub fn identity_certificate(k: usize, n: usize) -> Result<EquivalenceCertificate> {
    let poset = GridPoset::new(k, n)?;
    let points = lattice_points(&poset.chain_polytope_h(1))?;
    let bijection = Subset::all_of_size(n, k)
        .into_iter()
        .map(|j| {
            let a = j_to_antichain(k, n, j)?;
            let chi = poset.indicator(&a);
            Ok(Correspondence {
                j: j.to_string(),
                antichain: element_names(&a),
                source: chi.clone(),
                target: chi.clone(),
                additive: chi,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(certify_parts(
        &format!("identity on FFLV({k},{n})"),
        LinearMapZ::identity(poset.var_names()),
        &points,
        &points,
        bijection,
    ))
}

/// Adds one to a single entry.
pub fn corrupt(map: &LinearMapZ, row: usize, col: usize) -> LinearMapZ {
    let mut m = map.clone();
    m.entries[row][col] += 1;
    m
}

/// The `ψ`-style pipeline on the `w0`-relabelled primal graph against `FFLV¹_{n-k,n}`.
pub fn w0_check(k: usize, n: usize) -> Result<EquivalenceCertificate> {
    let w0 = apply_w0(&build_rec(k, n)?)?;
    Ok(Pipeline::new(&format!("FFLV({},{n}) vs w0 rec({k},{n})", n - k), &w0.net)?.certify())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub quantity: String,
    pub no_side: Option<usize>,
    pub gt_side: Option<usize>,
    pub note: String,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.no_side.is_some() && self.no_side == self.gt_side
    }

    fn skipped(&self) -> bool {
        self.no_side.is_none() && self.gt_side.is_none()
    }
}

/// Necessary-condition comparison of `NO¹` of `rec(k,n)` with `S(GT¹_{n-k,n})`.
#[derive(Clone, Debug, Serialize)]
pub struct GtEvidence {
    pub k: usize,
    pub n: usize,
    pub comparisons: Vec<Comparison>,
}

impl GtEvidence {
    /// All performed comparisons agree; skipped ones are ignored.
    pub fn consistent(&self) -> bool {
        self.comparisons.iter().all(|c| c.skipped() || c.agrees())
    }

    pub fn get(&self, quantity: &str) -> Option<&Comparison> {
        self.comparisons.iter().find(|c| c.quantity == quantity)
    }

    pub fn summary(&self) -> String {
        let mut out = format!("GT evidence for rec({},{}):\n", self.k, self.n);
        for c in &self.comparisons {
            let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
            writeln!(
                out,
                "  {}: {} vs {} {}",
                c.quantity,
                show(c.no_side),
                show(c.gt_side),
                c.note
            )
            .unwrap();
        }
        out
    }
}

pub fn gt_evidence(k: usize, n: usize) -> Result<GtEvidence> {
    let rec = build_rec(k, n)?;
    let ctx = ValuationContext::new(&rec.net)?;
    let m = n - k;
    let poset = GridPoset::new(m, n)?;
    let order = poset.order_polytope_h(1);
    let no1 = no_level1(&ctx)?;
    let gt1 = lattice_points(&order)?;
    let mut comparisons = vec![
        Comparison {
            quantity: "points".into(),
            no_side: Some(no1.len()),
            gt_side: Some(gt1.len()),
            note: String::new(),
        },
        Comparison {
            quantity: "vertices".into(),
            no_side: Some(vertex_indices(&no1).len()),
            gt_side: Some(vertex_indices(&gt1).len()),
            note: String::new(),
        },
    ];
    let counts = ehrhart_counts(&order, &[1, 2])?;
    for (r, count) in [1usize, 2].into_iter().zip(counts) {
        comparisons.push(Comparison {
            quantity: format!("ehrhart r={r}"),
            no_side: Some(no_level_r(&ctx, r)?.len()),
            gt_side: Some(count),
            note: "level-r Minkowski sum vs lattice count".into(),
        });
    }
    let facet_cmp = match (facets(&no1), facets(&gt1)) {
        (Ok(a), Ok(b)) => Comparison {
            quantity: "facets".into(),
            no_side: Some(a.facets.len()),
            gt_side: Some(b.facets.len()),
            note: String::new(),
        },
        (Err(Error::DimensionGuard { dim, max }), _)
        | (_, Err(Error::DimensionGuard { dim, max })) => Comparison {
            quantity: "facets".into(),
            no_side: None,
            gt_side: None,
            note: format!("skipped: affine dimension {dim} exceeds the hull guard of {max}"),
        },
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    comparisons.push(facet_cmp);
    Ok(GtEvidence { k, n, comparisons })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_determinants() {
        for (k, n) in [(2, 4), (4, 7)] {
            let psi = psi_map(k, n).unwrap();
            assert_eq!(psi.rows.len(), k * (n - k));
            assert_eq!(psi.cols.len(), k * (n - k));
            assert!(psi.entries.iter().flatten().all(|&v| v == 0 || v == 1));
            assert_eq!(psi.determinant().unwrap().abs(), BigInt::one());
        }
    }

    #[test]
    fn small_certificates() {
        for (k, n) in [(2, 4), (2, 5), (3, 5)] {
            let cert = certify_fflv(k, n).unwrap();
            assert!(cert.certified(), "{}", cert.summary());
            assert_eq!(cert.bijection[0].target, vec![0; k * (n - k)]);
        }
    }

    #[test]
    fn identity_harness() {
        let cert = identity_certificate(2, 4).unwrap();
        assert!(cert.certified());
        assert_eq!(cert.determinant, "1");
    }

    #[test]
    fn corrupted_map_fails_at_map_check() {
        let pipe = fflv_pipeline(2, 4).unwrap();
        let cert = pipe.certify_with(corrupt(&pipe.map, 0, 0));
        assert_eq!(cert.status, Status::Failed);
        assert!(cert.check("counts").unwrap().passed);
        assert!(cert.check("additivity").unwrap().passed);
        let map = cert.check("map").unwrap();
        assert!(!map.passed);
        assert!(map.detail.contains("J = "), "{}", map.detail);
    }

    #[test]
    fn certificate_json() {
        let cert = certify_fflv(2, 4).unwrap();
        let v = cert.to_json();
        assert_eq!(v["status"], "certified");
        assert_eq!(v["bijection"].as_array().unwrap().len(), 6);
        assert_eq!(v["map"]["entries"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn gt_small() {
        let ev = gt_evidence(2, 4).unwrap();
        assert!(ev.consistent(), "{}", ev.summary());
        assert_eq!(ev.get("points").unwrap().no_side, Some(6));
        assert_eq!(ev.get("ehrhart r=2").unwrap().gt_side, Some(20));
    }

    #[test]
    fn w0_counts() {
        let cert = w0_check(2, 4).unwrap();
        assert!(cert.check("counts").unwrap().passed);
    }
}
