//! Lattice point sets, inequality systems and exact polyhedral kernels:
//! a Bland's-rule simplex, lattice-point enumeration, double-description
//! facet enumeration and Bareiss determinants.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};

type Q = BigRational;

fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// Largest affine dimension accepted by [`facets`].
pub const HULL_DIMENSION_GUARD: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePointSet {
    pub basis: Vec<String>,
    pub points: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Vec<String>>,
}

impl LatticePointSet {
    /// Builds a set, rejecting duplicates and length mismatches.
    pub fn new(
        basis: Vec<String>,
        points: Vec<Vec<i64>>,
        provenance: Option<Vec<String>>,
    ) -> Result<Self> {
        if let Some(p) = &provenance {
            if p.len() != points.len() {
                return Err(Error::Parameter(
                    "provenance length differs from point count".into(),
                ));
            }
        }
        let mut seen = BTreeSet::new();
        for (i, pt) in points.iter().enumerate() {
            if pt.len() != basis.len() {
                return Err(Error::Parameter(format!(
                    "point {i} has length {} for a basis of {}",
                    pt.len(),
                    basis.len()
                )));
            }
            if !seen.insert(pt) {
                return Err(Error::Parameter(format!("duplicate point {pt:?}")));
            }
        }
        Ok(LatticePointSet {
            basis,
            points,
            provenance,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn point_set(&self) -> BTreeSet<Vec<i64>> {
        self.points.iter().cloned().collect()
    }

    pub fn same_points(&self, other: &LatticePointSet) -> bool {
        self.basis == other.basis && self.point_set() == other.point_set()
    }

    /// Columns: the basis labels, preceded by `J` when provenance is present.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let mut header: Vec<String> = Vec::new();
        if self.provenance.is_some() {
            header.push("J".into());
        }
        header.extend(self.basis.iter().cloned());
        out.push_str(&header.join(","));
        out.push('\n');
        for (i, p) in self.points.iter().enumerate() {
            let mut row: Vec<String> = Vec::new();
            if let Some(prov) = &self.provenance {
                row.push(prov[i].clone());
            }
            row.extend(p.iter().map(|v| v.to_string()));
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("point sets serialize")
    }
}

/// Pairwise sums, deduplicated and sorted.
pub fn minkowski_sum(a: &LatticePointSet, b: &LatticePointSet) -> Result<LatticePointSet> {
    if a.basis != b.basis {
        return Err(Error::Parameter(
            "Minkowski sum of point sets over different bases".into(),
        ));
    }
    let mut sums = BTreeSet::new();
    for p in &a.points {
        for r in &b.points {
            sums.insert(p.iter().zip(r).map(|(x, y)| x + y).collect::<Vec<i64>>());
        }
    }
    Ok(LatticePointSet {
        basis: a.basis.clone(),
        points: sums.into_iter().collect(),
        provenance: None,
    })
}

/// `r`-fold Minkowski sum; `r = 0` gives the origin.
pub fn minkowski_power(a: &LatticePointSet, r: usize) -> Result<LatticePointSet> {
    let mut acc = LatticePointSet {
        basis: a.basis.clone(),
        points: vec![vec![0; a.dim()]],
        provenance: None,
    };
    if r == 1 {
        return Ok(a.clone());
    }
    for _ in 0..r {
        acc = minkowski_sum(&acc, a)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rel {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "==")]
    Eq,
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rel::Le => "<=",
            Rel::Ge => ">=",
            Rel::Eq => "==",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Inequality {
    pub coeffs: Vec<i64>,
    pub rel: Rel,
    pub rhs: i64,
}

impl PartialOrd for Rel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (*self as u8).cmp(&(*other as u8))
    }
}

impl Inequality {
    pub fn holds(&self, x: &[i64]) -> bool {
        let lhs: i64 = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.rel {
            Rel::Le => lhs <= self.rhs,
            Rel::Ge => lhs >= self.rhs,
            Rel::Eq => lhs == self.rhs,
        }
    }

    pub fn is_tight(&self, x: &[i64]) -> bool {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() == self.rhs
    }

    /// `a·x <= b` forms: one for `<=`/`>=`, two for `==`.
    fn as_le(&self) -> Vec<(Vec<i64>, i64)> {
        let neg = || (self.coeffs.iter().map(|c| -c).collect(), -self.rhs);
        match self.rel {
            Rel::Le => vec![(self.coeffs.clone(), self.rhs)],
            Rel::Ge => vec![neg()],
            Rel::Eq => vec![(self.coeffs.clone(), self.rhs), neg()],
        }
    }

    pub fn display(&self, vars: &[String]) -> String {
        let mut lhs = String::new();
        for (&c, v) in self.coeffs.iter().zip(vars) {
            if c == 0 {
                continue;
            }
            match (lhs.is_empty(), c < 0) {
                (true, true) => lhs.push('-'),
                (true, false) => {}
                (false, true) => lhs.push_str(" - "),
                (false, false) => lhs.push_str(" + "),
            }
            if c.abs() != 1 {
                lhs.push_str(&format!("{} ", c.abs()));
            }
            lhs.push_str(v);
        }
        if lhs.is_empty() {
            lhs.push('0');
        }
        format!("{lhs} {} {}", self.rel, self.rhs)
    }
}

/// Inequality system over named integer variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub vars: Vec<String>,
    pub ineqs: Vec<Inequality>,
}

impl HRep {
    pub fn new(vars: Vec<String>) -> Self {
        HRep {
            vars,
            ineqs: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn push(&mut self, coeffs: Vec<i64>, rel: Rel, rhs: i64) {
        debug_assert_eq!(coeffs.len(), self.vars.len());
        self.ineqs.push(Inequality { coeffs, rel, rhs });
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.ineqs.iter().all(|i| i.holds(x))
    }

    /// Multiply every right-hand side by `r`, giving the `r`-th dilation.
    pub fn dilate(&self, r: i64) -> HRep {
        HRep {
            vars: self.vars.clone(),
            ineqs: self
                .ineqs
                .iter()
                .map(|i| Inequality {
                    coeffs: i.coeffs.clone(),
                    rel: i.rel,
                    rhs: i.rhs * r,
                })
                .collect(),
        }
    }

    /// `{"vars": [...], "ineqs": [{"coeffs": {var: int}, "rel": "<=", "rhs": int}]}`.
    pub fn to_json(&self) -> Value {
        let ineqs: Vec<Value> = self
            .ineqs
            .iter()
            .map(|i| {
                let coeffs: serde_json::Map<String, Value> = self
                    .vars
                    .iter()
                    .zip(&i.coeffs)
                    .filter(|(_, &c)| c != 0)
                    .map(|(v, &c)| (v.clone(), json!(c)))
                    .collect();
                json!({ "coeffs": coeffs, "rel": i.rel, "rhs": i.rhs })
            })
            .collect();
        json!({ "vars": self.vars, "ineqs": ineqs })
    }

    pub fn from_json(value: &Value) -> Result<HRep> {
        let bad = |m: &str| Error::Format(format!("HRep: {m}"));
        let vars: Vec<String> = serde_json::from_value(
            value
                .get("vars")
                .cloned()
                .ok_or_else(|| bad("missing vars"))?,
        )?;
        let mut h = HRep::new(vars);
        for ineq in value
            .get("ineqs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing ineqs"))?
        {
            let rel: Rel = serde_json::from_value(
                ineq.get("rel").cloned().ok_or_else(|| bad("missing rel"))?,
            )?;
            let rhs = ineq
                .get("rhs")
                .and_then(Value::as_i64)
                .ok_or_else(|| bad("missing rhs"))?;
            let mut coeffs = vec![0; h.dim()];
            for (var, c) in ineq
                .get("coeffs")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("missing coeffs"))?
            {
                let idx = h
                    .vars
                    .iter()
                    .position(|v| v == var)
                    .ok_or_else(|| bad(&format!("unknown variable {var}")))?;
                coeffs[idx] = c.as_i64().ok_or_else(|| bad("non-integer coefficient"))?;
            }
            h.push(coeffs, rel, rhs);
        }
        Ok(h)
    }
}

// ---------------------------------------------------------------------------
// simplex

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Q, x: Vec<Q> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    obj: Vec<Q>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (v, pv) in self.obj.iter_mut().zip(&prow) {
                *v -= &f * pv;
            }
        }
        self.basis[r] = c;
    }

    fn set_costs(&mut self, cost: &[Q]) {
        let mut obj: Vec<Q> = (0..=self.cols)
            .map(|j| {
                if j < self.cols {
                    cost[j].clone()
                } else {
                    Q::zero()
                }
            })
            .collect();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (v, a) in obj.iter_mut().zip(row) {
                *v -= cb * a;
            }
        }
        self.obj = obj;
    }

    /// Minimizes with Bland's rule over the allowed columns. `false` means unbounded.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[self.cols] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => {
                            ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                        }
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// Minimizes `c·x` subject to `A x = b`, `x ≥ 0`, in exact arithmetic.
pub fn minimize_standard(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let cols = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (ai, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut row: Vec<Q> = ai
            .iter()
            .map(|v| if flip { -v } else { v.clone() })
            .collect();
        row.extend((0..m).map(|t| if t == i { Q::one() } else { Q::zero() }));
        row.push(if flip { -bi } else { bi.clone() });
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        obj: Vec::new(),
        basis: (n..n + m).collect(),
        cols,
    };
    let phase1: Vec<Q> = (0..cols)
        .map(|j| if j < n { Q::zero() } else { Q::one() })
        .collect();
    t.set_costs(&phase1);
    t.run(cols);
    if !t.obj[cols].is_zero() {
        return LpOutcome::Infeasible;
    }
    // drive artificials out of the basis, dropping redundant rows
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            match (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.rows.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    let mut phase2: Vec<Q> = c.to_vec();
    phase2.extend((0..m).map(|_| Q::zero()));
    t.set_costs(&phase2);
    if !t.run(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Q::zero(); n];
    for (i, &bv) in t.basis.iter().enumerate() {
        if bv < n {
            x[bv] = t.rows[i][cols].clone();
        }
    }
    LpOutcome::Optimal {
        value: -t.obj[cols].clone(),
        x,
    }
}

/// Maximizes `c·x` subject to `A x ≤ b` with `x` free.
pub fn maximize_ineq(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    let rows: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, ai)| {
            let mut row: Vec<Q> = ai.clone();
            row.extend(ai.iter().map(|v| -v));
            row.extend((0..m).map(|t| if t == i { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let mut cost: Vec<Q> = c.iter().map(|v| -v).collect();
    cost.extend(c.iter().cloned());
    cost.extend((0..m).map(|_| Q::zero()));
    match minimize_standard(&rows, b, &cost) {
        LpOutcome::Optimal { value, x } => LpOutcome::Optimal {
            value: -value,
            x: (0..n).map(|i| &x[i] - &x[n + i]).collect(),
        },
        other => other,
    }
}

// ---------------------------------------------------------------------------
// vertices

fn in_hull_of_others(points: &[Vec<i64>], idx: usize) -> bool {
    let others: Vec<&Vec<i64>> = points
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .map(|(_, p)| p)
        .collect();
    if others.is_empty() {
        return false;
    }
    let d = points[idx].len();
    let mut a: Vec<Vec<Q>> = (0..d)
        .map(|r| others.iter().map(|p| q(p[r])).collect())
        .collect();
    a.push(vec![Q::one(); others.len()]);
    let mut b: Vec<Q> = points[idx].iter().map(|&v| q(v)).collect();
    b.push(Q::one());
    let c = vec![Q::zero(); others.len()];
    matches!(minimize_standard(&a, &b, &c), LpOutcome::Optimal { .. })
}

/// Indices of points that are not convex combinations of the others.
pub fn vertex_indices(a: &LatticePointSet) -> Vec<usize> {
    (0..a.len())
        .filter(|&i| !in_hull_of_others(&a.points, i))
        .collect()
}

pub fn vertices(a: &LatticePointSet) -> LatticePointSet {
    let idx = vertex_indices(a);
    LatticePointSet {
        basis: a.basis.clone(),
        points: idx.iter().map(|&i| a.points[i].clone()).collect(),
        provenance: a
            .provenance
            .as_ref()
            .map(|p| idx.iter().map(|&i| p[i].clone()).collect()),
    }
}

// ---------------------------------------------------------------------------
// lattice points

/// Integer bounding box of `{x : H}`; `None` when the system is infeasible.
pub fn bounding_box(h: &HRep) -> Result<Option<Vec<(i64, i64)>>> {
    let rows: Vec<(Vec<i64>, i64)> = h.ineqs.iter().flat_map(Inequality::as_le).collect();
    let a: Vec<Vec<Q>> = rows
        .iter()
        .map(|(c, _)| c.iter().map(|&v| q(v)).collect())
        .collect();
    let b: Vec<Q> = rows.iter().map(|(_, r)| q(*r)).collect();
    let mut out = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let mut bounds = [0i64; 2];
        for (s, sign) in [(0, -1), (1, 1)] {
            let c: Vec<Q> = (0..h.dim())
                .map(|j| if j == i { q(sign) } else { Q::zero() })
                .collect();
            match maximize_ineq(&a, &b, &c) {
                LpOutcome::Optimal { value, .. } => {
                    bounds[s] = if sign > 0 {
                        to_i64(&value.floor())?
                    } else {
                        -to_i64(&value.floor())?
                    };
                }
                LpOutcome::Infeasible => return Ok(None),
                LpOutcome::Unbounded => {
                    return Err(Error::Unbounded(format!(
                        "variable {} is unbounded",
                        h.vars[i]
                    )));
                }
            }
        }
        out.push((bounds[0], bounds[1]));
    }
    Ok(Some(out))
}

fn to_i64(v: &Q) -> Result<i64> {
    v.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Parameter(format!("value {v} exceeds the integer range")))
}

struct Enumerator<'a> {
    rows: &'a [(Vec<i64>, i64)],
    bounds: &'a [(i64, i64)],
    /// `tail_min[i][t]`: minimum of `Σ_{s>t} a_{i,s} x_s` over the box.
    tail_min: Vec<Vec<i64>>,
    x: Vec<i64>,
    out: Vec<Vec<i64>>,
}

impl Enumerator<'_> {
    fn go(&mut self, t: usize, slack: &mut Vec<i64>) {
        let d = self.bounds.len();
        if t == d {
            if slack.iter().all(|&s| s >= 0) {
                self.out.push(self.x.clone());
            }
            return;
        }
        let (mut lo, mut hi) = self.bounds[t];
        for (i, (coeffs, _)) in self.rows.iter().enumerate() {
            let room = slack[i] - self.tail_min[i][t];
            let a = coeffs[t];
            if a > 0 {
                hi = hi.min(Integer::div_floor(&room, &a));
            } else if a < 0 {
                lo = lo.max(Integer::div_ceil(&(-room), &(-a)));
            } else if room < 0 {
                return;
            }
        }
        for v in lo..=hi {
            self.x[t] = v;
            for (i, (coeffs, _)) in self.rows.iter().enumerate() {
                slack[i] -= coeffs[t] * v;
            }
            self.go(t + 1, slack);
            for (i, (coeffs, _)) in self.rows.iter().enumerate() {
                slack[i] += coeffs[t] * v;
            }
        }
    }
}

/// All integer points of a bounded system, in lexicographic order.
pub fn lattice_points(h: &HRep) -> Result<LatticePointSet> {
    let Some(bounds) = bounding_box(h)? else {
        return Ok(LatticePointSet {
            basis: h.vars.clone(),
            points: Vec::new(),
            provenance: None,
        });
    };
    let rows: Vec<(Vec<i64>, i64)> = h.ineqs.iter().flat_map(Inequality::as_le).collect();
    let d = h.dim();
    let tail_min: Vec<Vec<i64>> = rows
        .iter()
        .map(|(coeffs, _)| {
            let mut tm = vec![0; d];
            let mut acc = 0;
            for t in (0..d).rev() {
                tm[t] = acc;
                let (lo, hi) = bounds[t];
                acc += (coeffs[t] * lo).min(coeffs[t] * hi);
            }
            tm
        })
        .collect();
    let mut slack: Vec<i64> = rows.iter().map(|(_, b)| *b).collect();
    let mut e = Enumerator {
        rows: &rows,
        bounds: &bounds,
        tail_min,
        x: vec![0; d],
        out: Vec::new(),
    };
    e.go(0, &mut slack);
    let points = e.out;
    debug_assert!(points.iter().all(|p| h.contains(p)));
    Ok(LatticePointSet {
        basis: h.vars.clone(),
        points,
        provenance: None,
    })
}

/// `|S(r·Q)|` for each `r`.
pub fn ehrhart_counts(h: &HRep, rs: &[i64]) -> Result<Vec<usize>> {
    rs.iter()
        .map(|&r| Ok(lattice_points(&h.dilate(r))?.len()))
        .collect()
}

// ---------------------------------------------------------------------------
// facets

/// Affine hull description and facet inequalities of `conv(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetDescription {
    pub affine_dim: usize,
    pub equations: Vec<Inequality>,
    pub facets: Vec<Inequality>,
}

impl FacetDescription {
    pub fn to_hrep(&self, vars: &[String]) -> HRep {
        HRep {
            vars: vars.to_vec(),
            ineqs: self.equations.iter().chain(&self.facets).cloned().collect(),
        }
    }
}

/// Reduced row echelon form; returns pivot columns.
fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v /= &pv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Scale a rational vector to a primitive integer vector with the same direction.
fn primitive(v: &[Q]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

fn big_to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::Parameter(format!("coefficient {v} exceeds the integer range")))
}

struct Ray {
    dir: Vec<Q>,
    tight: Vec<u64>,
}

fn bit(set: &[u64], i: usize) -> bool {
    set[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(set: &mut [u64], i: usize) {
    set[i / 64] |= 1 << (i % 64);
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Facets of `conv(A)` by incremental double description, after projecting
/// onto coordinates that parametrize the affine hull.
pub fn facets(a: &LatticePointSet) -> Result<FacetDescription> {
    if a.is_empty() {
        return Err(Error::Parameter("facets of an empty point set".into()));
    }
    let d = a.dim();
    let p0 = &a.points[0];
    let mut diffs: Vec<Vec<Q>> = a
        .points
        .iter()
        .skip(1)
        .map(|p| p.iter().zip(p0).map(|(x, y)| q(x - y)).collect())
        .collect();
    let pivots = rref(&mut diffs);
    let r = pivots.len();
    if r > HULL_DIMENSION_GUARD {
        return Err(Error::DimensionGuard {
            dim: r,
            max: HULL_DIMENSION_GUARD,
        });
    }

    // equations: one per non-pivot coordinate
    let mut equations = Vec::new();
    for f in (0..d).filter(|c| !pivots.contains(c)) {
        let mut e = vec![Q::zero(); d];
        e[f] = Q::one();
        for (row, &pc) in pivots.iter().enumerate() {
            e[pc] = -diffs[row][f].clone();
        }
        let e = primitive(&e);
        let coeffs: Vec<i64> = e.iter().map(big_to_i64).collect::<Result<_>>()?;
        let rhs = coeffs.iter().zip(p0).map(|(c, x)| c * x).sum();
        equations.push(Inequality {
            coeffs,
            rel: Rel::Eq,
            rhs,
        });
    }
    equations.sort();
    if r == 0 {
        return Ok(FacetDescription {
            affine_dim: 0,
            equations,
            facets: Vec::new(),
        });
    }

    // homogenized generators (1, projected point)
    let gens: Vec<Vec<Q>> = a
        .points
        .iter()
        .map(|p| {
            std::iter::once(Q::one())
                .chain(pivots.iter().map(|&c| q(p[c])))
                .collect()
        })
        .collect();
    let dim = r + 1;
    let words = gens.len().div_ceil(64);

    // initial basis of generators
    let mut chosen: Vec<usize> = Vec::new();
    let mut echelon: Vec<Vec<Q>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let mut trial = echelon.clone();
        trial.push(g.clone());
        if rref(&mut trial).len() > echelon.len() {
            echelon = trial;
            chosen.push(i);
            if chosen.len() == dim {
                break;
            }
        }
    }
    let inv = invert(&chosen.iter().map(|&i| gens[i].clone()).collect::<Vec<_>>());
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let dir: Vec<Q> = (0..dim).map(|i| inv[i][j].clone()).collect();
            let mut tight = vec![0u64; words];
            for (t, &ci) in chosen.iter().enumerate() {
                if t != j {
                    set_bit(&mut tight, ci);
                }
            }
            Ray { dir, tight }
        })
        .collect();
    let mut processed: Vec<usize> = chosen.clone();

    for (gi, g) in gens.iter().enumerate() {
        if chosen.contains(&gi) {
            continue;
        }
        let vals: Vec<Q> = rays.iter().map(|ray| dot(&ray.dir, g)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (ray, v) in rays.iter().zip(&vals) {
            if !v.is_negative() {
                let mut tight = ray.tight.clone();
                if v.is_zero() {
                    set_bit(&mut tight, gi);
                }
                next.push(Ray {
                    dir: ray.dir.clone(),
                    tight,
                });
            }
        }
        for (pi, p) in rays.iter().enumerate() {
            if !vals[pi].is_positive() {
                continue;
            }
            for (ni, n) in rays.iter().enumerate() {
                if !vals[ni].is_negative() {
                    continue;
                }
                let common: Vec<u64> = p.tight.iter().zip(&n.tight).map(|(x, y)| x & y).collect();
                let count: u32 = common.iter().map(|w| w.count_ones()).sum();
                if (count as usize) + 2 < dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(oi, o)| oi == pi || oi == ni || !is_subset(&common, &o.tight));
                if !adjacent {
                    continue;
                }
                let dir: Vec<Q> = p
                    .dir
                    .iter()
                    .zip(&n.dir)
                    .map(|(pv, nv)| &vals[pi] * nv - &vals[ni] * pv)
                    .collect();
                let dir: Vec<Q> = primitive(&dir).into_iter().map(Q::from_integer).collect();
                let mut tight = common;
                set_bit(&mut tight, gi);
                next.push(Ray { dir, tight });
            }
        }
        rays = next;
        processed.push(gi);
    }
    debug_assert!(processed.iter().all(|&i| i < gens.len()));

    let mut facets = Vec::new();
    for ray in &rays {
        let v = primitive(&ray.dir);
        let mut coeffs = vec![0i64; d];
        for (t, &pc) in pivots.iter().enumerate() {
            coeffs[pc] = big_to_i64(&v[t + 1])?;
        }
        facets.push(Inequality {
            coeffs,
            rel: Rel::Ge,
            rhs: -big_to_i64(&v[0])?,
        });
    }
    facets.sort();
    facets.dedup();
    debug_assert!(rays
        .iter()
        .all(|r| (0..gens.len()).filter(|&i| bit(&r.tight, i)).count() + 1 >= dim));
    Ok(FacetDescription {
        affine_dim: r,
        equations,
        facets,
    })
}

fn invert(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    assert_eq!(piv.len(), n, "matrix is singular");
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}

// ---------------------------------------------------------------------------
// integer linear maps

/// Integer matrix with labelled rows (target basis) and columns (source basis).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMapZ {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl LinearMapZ {
    pub fn new(rows: Vec<String>, cols: Vec<String>, entries: Vec<Vec<i64>>) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::Parameter(
                "matrix shape does not match its bases".into(),
            ));
        }
        Ok(LinearMapZ {
            rows,
            cols,
            entries,
        })
    }

    pub fn identity(basis: Vec<String>) -> Self {
        let n = basis.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        LinearMapZ {
            rows: basis.clone(),
            cols: basis,
            entries,
        }
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.entries.iter().map(|r| r[j]).collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        let n = self.rows.len();
        if n != self.cols.len() {
            return Err(Error::Parameter(format!(
                "determinant of a {n}x{} matrix",
                self.cols.len()
            )));
        }
        Ok(bareiss(
            self.entries
                .iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        ))
    }
}

pub fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}
