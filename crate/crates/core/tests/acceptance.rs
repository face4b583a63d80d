//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p plabic-core --test acceptance` (add `--release` for
//! representative timings).

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Signed;

use plabic::equivalence::{certify_fflv, corrupt, fflv_pipeline, gt_evidence, Status};
use plabic::flows::{pluecker_check, positive_at, random_positive_values, FlowModel, PlueckerMode};
use plabic::polyhedra::{facets, lattice_points, minkowski_power};
use plabic::poset::GridPoset;
use plabic::rec::{build_rec, dualize, RecGraph};
use plabic::valuation::{no_level1, ValuationContext};
use plabic::Subset;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: plabic::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, || {
        format!("took {spent:.2?}, limit {limit:?}")
    })
}

const REC_4_7_LABELS: [&str; 13] = [
    "167", "127", "123", "267", "237", "234", "367", "347", "345", "467", "457", "456", "567",
];

fn rec_4_7() -> Outcome {
    let start = Instant::now();
    let rec = lib(build_rec(4, 7))?;
    let perm = lib(rec.graph().trip_permutation())?;
    ensure(perm == vec![4, 5, 6, 7, 1, 2, 3], || {
        format!("trip permutation {perm:?}")
    })?;
    let faces = rec.graph().faces().len();
    ensure(faces == 13, || format!("{faces} faces"))?;
    let mut got: Vec<Subset> = rec.net.labels().to_vec();
    let mut want: Vec<Subset> = REC_4_7_LABELS
        .iter()
        .map(|s| Subset::parse(s).unwrap())
        .collect();
    got.sort();
    want.sort();
    ensure(got == want, || format!("labels {got:?}"))?;
    let empty = lib(ValuationContext::new(&rec.net))?.empty_face_label();
    ensure(empty == Subset::parse("567").unwrap(), || {
        format!("F_empty = {empty}")
    })?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("13 faces, F_empty = 567, {:.2?}", start.elapsed()))
}

/// Internal vertices of the path: first a run up one column, then a run to the
/// right along one row.
fn vertical_then_horizontal(rec: &RecGraph, vertices: &[usize]) -> bool {
    let pos: Vec<(f64, f64)> = vertices
        .iter()
        .map(|&v| rec.graph().vertices()[v].pos.to_f64())
        .collect();
    let inner = &pos[1..pos.len() - 1];
    let Some(turn) = (1..inner.len()).find(|&t| (inner[t].0 - inner[0].0).abs() > 1.0) else {
        return false;
    };
    let column = &inner[..turn];
    let row = &inner[turn - 1..];
    let climbs = column.len() > 1 && column.windows(2).all(|w| w[1].1 > w[0].1);
    let ys: Vec<f64> = row.iter().map(|p| p.1).collect();
    let flat = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        - ys.iter().cloned().fold(f64::INFINITY, f64::min)
        <= 1.0;
    let rightward = row.windows(2).all(|w| w[1].0 > w[0].0);
    climbs && flat && rightward
}

fn dual_rec_4_7() -> Outcome {
    let start = Instant::now();
    let primal = lib(build_rec(4, 7))?;
    let dual = lib(dualize(&primal))?;
    let sources = dual.net.sources();
    ensure(sources == Subset::parse("1234").unwrap(), || {
        format!("sources {sources}")
    })?;
    ensure(
        primal.graph().faces().len() == dual.graph().faces().len(),
        || "face counts differ".into(),
    )?;
    for (p, d) in primal.net.labels().iter().zip(dual.net.labels()) {
        ensure(*d == p.complement(7), || {
            format!("dual label {d} is not the complement of {p}")
        })?;
    }
    let model = lib(FlowModel::new(&dual.net))?;
    let (path, _) = lib(model.minimal_path(3, 6))?;
    let described = path.describe(&dual.net);
    ensure(
        described == "3 -> w3_3 -> b2_3 -> w2_3 -> b1_3 -> w2_2 -> b1_2 -> w2_1 -> b1_1 -> 6",
        || format!("path {described}"),
    )?;
    ensure(
        vertical_then_horizontal(&dual, &path.vertices(&dual.net)),
        || format!("path {described} has the wrong shape"),
    )?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("3 -> 6: {described}"))
}

const MAIN_CASES: [(usize, usize, usize); 4] = [(2, 4, 6), (2, 5, 10), (3, 6, 20), (4, 7, 35)];

fn fflv_certificates() -> Outcome {
    let start = Instant::now();
    let mut dets = Vec::new();
    for (k, n, count) in MAIN_CASES {
        let cert = lib(certify_fflv(k, n))?;
        ensure(cert.certified(), || cert.summary())?;
        ensure(cert.bijection.len() == count, || {
            format!("({k},{n}): {} points", cert.bijection.len())
        })?;
        let det = lib(cert.map.determinant())?;
        ensure(det.abs() == 1.into(), || format!("({k},{n}): det {det}"))?;
        let targets: BTreeSet<&Vec<i64>> = cert.bijection.iter().map(|c| &c.target).collect();
        ensure(targets.len() == count, || {
            format!("({k},{n}): valuations collide")
        })?;
        for c in &cert.bijection {
            ensure(c.additive == c.target, || {
                format!("({k},{n}) J = {}: not additive", c.j)
            })?;
            ensure(cert.map.apply(&c.source) == c.target, || {
                format!("({k},{n}) J = {}: psi mismatch", c.j)
            })?;
        }
        dets.push(format!("det({k},{n}) = {det}"));
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{}, {:.2?}", dets.join(", "), start.elapsed()))
}

fn strong_minimality() -> Outcome {
    let mut checked = 0;
    for (k, n, _) in MAIN_CASES {
        let primal = lib(build_rec(k, n))?;
        let dual = lib(dualize(&primal))?;
        for (role, net) in [("rec", &primal.net), ("dual", &dual.net)] {
            let ctx = lib(ValuationContext::new(net))?;
            for p in ctx.polynomials() {
                ensure(ctx.strongly_minimal(p), || {
                    format!("{role}({k},{n}) P_{} has no minimal term", p.j)
                })?;
                checked += 1;
            }
            let base = lib(no_level1(&ctx))?;
            let reversed = lib(no_level1(&ctx.clone().with_reversed_order()))?;
            let mut rotated_order = ctx.order().to_vec();
            rotated_order.rotate_left(1);
            let rotated = lib(no_level1(&lib(ctx.clone().with_order(rotated_order))?))?;
            ensure(
                base.same_points(&reversed) && base.same_points(&rotated),
                || format!("{role}({k},{n}): NO1 depends on the variable order"),
            )?;
        }
    }
    Ok(format!(
        "{checked} flow polynomials strongly minimal, NO1 order independent"
    ))
}

fn gt_side() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (k, n, count, facet_count) in [(2, 4, 6, 6), (3, 6, 20, 14)] {
        let ev = lib(gt_evidence(k, n))?;
        for q in ["points", "vertices", "ehrhart r=1", "ehrhart r=2", "facets"] {
            let c = ev.get(q).ok_or_else(|| format!("({k},{n}): {q} missing"))?;
            ensure(c.agrees(), || {
                format!(
                    "({k},{n}) {q}: {:?} vs {:?} {}",
                    c.no_side, c.gt_side, c.note
                )
            })?;
        }
        ensure(ev.get("points").unwrap().no_side == Some(count), || {
            format!("({k},{n}) point count")
        })?;
        let f = ev.get("facets").unwrap();
        ensure(f.no_side == Some(facet_count), || {
            format!("({k},{n}) facets {:?}", f.no_side)
        })?;
        parts.push(format!("({k},{n}) facets {facet_count}/{facet_count}"));
    }
    within(start, Duration::from_secs(60))?;
    Ok(parts.join(", "))
}

fn grid_sizes(max_dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=13 {
        for k in 1..n {
            if k * (n - k) <= max_dim {
                out.push((k, n));
            }
        }
    }
    out
}

fn stanley() -> Outcome {
    let sizes = grid_sizes(12);
    for &(k, n) in &sizes {
        let poset = lib(GridPoset::new(k, n))?;
        for r in 1..=3 {
            let order = lib(lattice_points(&poset.order_polytope_h(r)))?.len();
            let chain = lib(lattice_points(&poset.chain_polytope_h(r)))?.len();
            ensure(order == chain, || {
                format!("P_({k},{n}) r = {r}: {order} vs {chain}")
            })?;
        }
    }
    let p24 = lib(GridPoset::new(2, 4))?;
    let counts: Vec<usize> = (1..=3)
        .map(|r| lattice_points(&p24.chain_polytope_h(r)).map(|s| s.len()))
        .collect::<plabic::Result<_>>()
        .map_err(|e| e.to_string())?;
    ensure(counts == vec![6, 20, 50], || {
        format!("P_(2,4) counts {counts:?}")
    })?;
    Ok(format!("{} grid posets, P_(2,4): {counts:?}", sizes.len()))
}

fn idp() -> Outcome {
    let sizes = grid_sizes(9);
    for &(k, n) in &sizes {
        let poset = lib(GridPoset::new(k, n))?;
        for (kind, h1, h2) in [
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
            let doubled = lib(minkowski_power(&lib(lattice_points(&h1))?, 2))?;
            let level2 = lib(lattice_points(&h2))?;
            ensure(doubled.same_points(&level2), || {
                format!(
                    "{kind} P_({k},{n}): {} sums vs {} points",
                    doubled.len(),
                    level2.len()
                )
            })?;
        }
    }
    Ok(format!("{} grid posets", sizes.len()))
}

fn pluecker() -> Outcome {
    let mut notes = Vec::new();
    for (k, n, mode) in [
        (2, 4, PlueckerMode::Symbolic),
        (2, 5, PlueckerMode::Symbolic),
        (3, 6, PlueckerMode::Numeric),
        (4, 7, PlueckerMode::Numeric),
    ] {
        let primal = lib(build_rec(k, n))?;
        let dual = lib(dualize(&primal))?;
        for (role, net) in [("rec", &primal.net), ("dual", &dual.net)] {
            let seeds: &[u64] = if mode == PlueckerMode::Numeric {
                &[0, 1, 2]
            } else {
                &[0]
            };
            for &seed in seeds {
                let report = lib(pluecker_check(net, mode, seed))?;
                ensure(report.relations > 0, || {
                    format!("{role}({k},{n}): no relations")
                })?;
                ensure(report.passed(), || {
                    format!(
                        "{role}({k},{n}) seed {seed}: {:?} {:?}",
                        report.failures.first(),
                        report.nonpositive
                    )
                })?;
            }
            let values = random_positive_values(net.basis().len(), 7);
            for p in lib(lib(FlowModel::new(net))?.all_polynomials())? {
                ensure(!p.is_zero() && positive_at(&p, &values), || {
                    format!("{role}({k},{n}) P_{} not positive", p.j)
                })?;
            }
        }
        notes.push(format!("({k},{n}) {mode:?}"));
    }
    Ok(notes.join(", "))
}

fn separation() -> Outcome {
    let poset = lib(GridPoset::new(3, 6))?;
    let fflv = lib(facets(&lib(lattice_points(&poset.chain_polytope_h(1)))?))?
        .facets
        .len();
    let gt = lib(facets(&lib(lattice_points(&poset.order_polytope_h(1)))?))?
        .facets
        .len();
    ensure(fflv == 15 && gt == 14, || {
        format!("FFLV {fflv} facets, GT {gt} facets")
    })?;
    Ok(format!("FFLV(3,6) {fflv} facets, GT(3,6) {gt} facets"))
}

fn negative_control() -> Outcome {
    let pipe = lib(fflv_pipeline(3, 6))?;
    let cert = pipe.certify_with(corrupt(&pipe.map, 0, 0));
    ensure(cert.status == Status::Failed, || {
        "corrupted map still certified".into()
    })?;
    let map = cert.check("map").ok_or("no map check")?;
    ensure(!map.passed, || "map check passed".into())?;
    ensure(
        map.detail.contains("J = ") && map.detail.contains("antichain"),
        || format!("unnamed: {}", map.detail),
    )?;
    Ok(map.detail.clone())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("rec(4,7) trips, faces, labels", rec_4_7),
        (
            "dual rec(4,7) sources, complements, 3 -> 6 path",
            dual_rec_4_7,
        ),
        (
            "FFLV certificates for (2,4), (2,5), (3,6), (4,7)",
            fflv_certificates,
        ),
        (
            "strong minimality and order independence",
            strong_minimality,
        ),
        ("GT evidence for (2,4) and (3,6)", gt_side),
        ("Stanley: order and chain Ehrhart counts agree", stanley),
        ("IDP: level-2 points are sums of level-1 points", idp),
        ("Pluecker relations and positivity", pluecker),
        ("FFLV(3,6) and GT(3,6) facet counts differ", separation),
        ("corrupted psi fails certification", negative_control),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
