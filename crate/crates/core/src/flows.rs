//! Directed paths, vertex-disjoint flows and flow polynomials `P_J` on a perfectly
//! oriented plabic graph.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::planar::Dart;
use crate::rec::Network;
use crate::subset::Subset;

/// Exponents indexed by the coordinates of [`Network::basis`].
pub type ExponentVector = Vec<u32>;

/// A directed path between two boundary vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedPath {
    pub source: usize,
    pub sink: usize,
    pub darts: Vec<Dart>,
}

impl DirectedPath {
    /// Vertex indices along the path, endpoints included.
    pub fn vertices(&self, net: &Network) -> Vec<usize> {
        let g = &net.graph;
        let mut out = vec![g.tail(self.darts[0])];
        out.extend(self.darts.iter().map(|&d| g.head(d)));
        out
    }

    /// Vertex ids along the path.
    pub fn describe(&self, net: &Network) -> String {
        let ids: Vec<&str> = self
            .vertices(net)
            .iter()
            .map(|&v| net.graph.vertices()[v].id.as_str())
            .collect();
        ids.join(" -> ")
    }
}

/// Pairwise vertex-disjoint paths from `I_O \ J` to `J \ I_O`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flow {
    pub paths: Vec<DirectedPath>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowPolynomial {
    pub j: Subset,
    /// Exponent vector ↦ number of flows with that weight.
    pub terms: BTreeMap<ExponentVector, u64>,
}

impl FlowPolynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn flow_count(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.clone(), BigInt::from(c)))
                .collect(),
        }
    }

    pub fn evaluate(&self, values: &[BigRational]) -> BigRational {
        self.to_poly().evaluate(values)
    }

    /// `{"J": [...], "terms": [{"coeff": c, "exponents": {"167": 1, ...}}]}`.
    pub fn to_json(&self, basis: &[Subset]) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(exp, &coeff)| {
                let exponents: serde_json::Map<String, Value> = exp
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (basis[i].to_string(), json!(e)))
                    .collect();
                json!({ "coeff": coeff, "exponents": exponents })
            })
            .collect();
        json!({ "J": self.j.to_vec(), "terms": terms })
    }

    /// Human-readable form such as `x167 x127^2 + 2 x123`, or `1`.
    pub fn display(&self, basis: &[Subset]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (exp, &coeff) in &self.terms {
            let mut mono = String::new();
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push(' ');
                }
                write!(mono, "x{}", basis[i]).unwrap();
                if e > 1 {
                    write!(mono, "^{e}").unwrap();
                }
            }
            parts.push(match (coeff, mono.is_empty()) {
                (c, true) => c.to_string(),
                (1, false) => mono,
                (c, false) => format!("{c} {mono}"),
            });
        }
        parts.join(" + ")
    }
}

/// Sparse polynomial with integer coefficients, used for relation checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsePoly {
    pub terms: BTreeMap<ExponentVector, BigInt>,
}

impl SparsePoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exp: ExponentVector, coeff: BigInt) {
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: ExponentVector = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn evaluate(&self, values: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (exp, coeff) in &self.terms {
            let mut term = BigRational::from_integer(coeff.clone());
            for (v, &e) in values.iter().zip(exp) {
                for _ in 0..e {
                    term *= v;
                }
            }
            total += term;
        }
        total
    }
}

/// Bitset over vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct VertexSet(Vec<u64>);

impl VertexSet {
    fn new(size: usize) -> Self {
        VertexSet(vec![0; size.div_ceil(64)])
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == 0)
    }

    fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn remove_all(&mut self, other: &VertexSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
}

fn check_source_sink(net: &Network, i: usize, j: usize) -> Result<()> {
    let n = net.n();
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::Parameter(format!(
            "boundary labels must lie in 1..{n}"
        )));
    }
    if i == j {
        return Err(Error::Parameter(format!("source and sink coincide ({i})")));
    }
    if !net.sources().contains(i) {
        return Err(Error::Parameter(format!("{i} is not a boundary source")));
    }
    if net.sources().contains(j) {
        return Err(Error::Parameter(format!("{j} is not a boundary sink")));
    }
    Ok(())
}

/// All directed paths from boundary source `i` to boundary sink `j`,
/// in lexicographic order of their dart sequences.
pub fn enumerate_paths(net: &Network, i: usize, j: usize) -> Result<Vec<DirectedPath>> {
    check_source_sink(net, i, j)?;
    let g = &net.graph;
    let target = g.boundary_vertex(j);
    let start = g.boundary_vertex(i);
    let mut out = Vec::new();
    let mut visited = vec![false; g.vertices().len()];
    visited[start] = true;
    let mut stack = Vec::new();
    dfs_paths(net, start, target, &mut visited, &mut stack, &mut |darts| {
        out.push(DirectedPath {
            source: i,
            sink: j,
            darts: darts.to_vec(),
        });
    });
    Ok(out)
}

fn dfs_paths(
    net: &Network,
    v: usize,
    target: usize,
    visited: &mut [bool],
    stack: &mut Vec<Dart>,
    emit: &mut impl FnMut(&[Dart]),
) {
    if v == target {
        emit(stack);
        return;
    }
    let g = &net.graph;
    if !stack.is_empty() && g.boundary_label(v).is_some() {
        return;
    }
    let mut next: Vec<Dart> = net.orientation.out_darts(g, v).collect();
    next.sort_unstable();
    for d in next {
        let w = g.head(d);
        if visited[w] {
            continue;
        }
        visited[w] = true;
        stack.push(d);
        dfs_paths(net, w, target, visited, stack, emit);
        stack.pop();
        visited[w] = false;
    }
}

/// 0/1 vector of the faces to the left of `path`.
pub fn path_weight(net: &Network, path: &DirectedPath) -> Result<ExponentVector> {
    let mut exp = vec![0; net.basis().len()];
    for f in net.graph.left_region(&path.darts)? {
        exp[net.coordinate(f)] = 1;
    }
    Ok(exp)
}

/// Sum of path weights.
pub fn flow_weight(net: &Network, flow: &Flow) -> Result<ExponentVector> {
    let mut exp = vec![0; net.basis().len()];
    for p in &flow.paths {
        for (a, b) in exp.iter_mut().zip(path_weight(net, p)?) {
            *a += b;
        }
    }
    Ok(exp)
}

fn add_into(acc: &mut [u32], other: &[u32]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
}

/// Coordinatewise `a ≤ b`.
pub fn dominated(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

struct PathEntry {
    path: DirectedPath,
    weight: ExponentVector,
    vertices: VertexSet,
}

/// Path tables for every (source, sink) pair, shared across all `J`.
pub struct FlowModel<'a> {
    net: &'a Network,
    paths: HashMap<(usize, usize), Vec<PathEntry>>,
}

impl<'a> FlowModel<'a> {
    pub fn new(net: &'a Network) -> Result<Self> {
        let n = net.n();
        let nv = net.graph.vertices().len();
        let mut paths = HashMap::new();
        for i in net.sources().iter() {
            for j in (1..=n).filter(|&j| !net.sources().contains(j)) {
                let mut entries = Vec::new();
                for path in enumerate_paths(net, i, j)? {
                    let weight = path_weight(net, &path)?;
                    let mut vertices = VertexSet::new(nv);
                    for v in path.vertices(net) {
                        vertices.insert(v);
                    }
                    entries.push(PathEntry {
                        path,
                        weight,
                        vertices,
                    });
                }
                paths.insert((i, j), entries);
            }
        }
        Ok(FlowModel { net, paths })
    }

    pub fn network(&self) -> &Network {
        self.net
    }

    fn split(&self, j: Subset) -> Result<(Vec<usize>, Vec<usize>)> {
        let sources = self.net.sources();
        if j.len() != sources.len() || !j.is_subset(Subset::full(self.net.n())) {
            return Err(Error::Parameter(format!(
                "J = {j} must be a {}-subset of 1..{}",
                sources.len(),
                self.net.n()
            )));
        }
        Ok((
            sources.difference(j).to_vec(),
            j.difference(sources).to_vec(),
        ))
    }

    pub fn paths(&self, i: usize, j: usize) -> Vec<&DirectedPath> {
        self.paths
            .get(&(i, j))
            .map(|v| v.iter().map(|e| &e.path).collect())
            .unwrap_or_default()
    }

    fn for_each_flow(&self, j: Subset, mut emit: impl FnMut(&[&PathEntry])) -> Result<()> {
        let (srcs, sinks) = self.split(j)?;
        let nv = self.net.graph.vertices().len();
        let mut chosen = Vec::new();
        let mut used = VertexSet::new(nv);
        let mut sink_used = vec![false; sinks.len()];
        self.extend(
            &srcs,
            &sinks,
            0,
            &mut used,
            &mut sink_used,
            &mut chosen,
            &mut emit,
        );
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn extend<'b>(
        &'b self,
        srcs: &[usize],
        sinks: &[usize],
        at: usize,
        used: &mut VertexSet,
        sink_used: &mut [bool],
        chosen: &mut Vec<&'b PathEntry>,
        emit: &mut impl FnMut(&[&PathEntry]),
    ) {
        if at == srcs.len() {
            emit(chosen);
            return;
        }
        for (t, &sink) in sinks.iter().enumerate() {
            if sink_used[t] {
                continue;
            }
            for entry in &self.paths[&(srcs[at], sink)] {
                if !entry.vertices.disjoint(used) {
                    continue;
                }
                sink_used[t] = true;
                used.union_with(&entry.vertices);
                chosen.push(entry);
                self.extend(srcs, sinks, at + 1, used, sink_used, chosen, emit);
                chosen.pop();
                used.remove_all(&entry.vertices);
                sink_used[t] = false;
            }
        }
    }

    pub fn flows(&self, j: Subset) -> Result<Vec<Flow>> {
        let mut out = Vec::new();
        self.for_each_flow(j, |entries| {
            out.push(Flow {
                paths: entries.iter().map(|e| e.path.clone()).collect(),
            });
        })?;
        Ok(out)
    }

    pub fn polynomial(&self, j: Subset) -> Result<FlowPolynomial> {
        let dim = self.net.basis().len();
        let mut terms = BTreeMap::new();
        self.for_each_flow(j, |entries| {
            let mut exp = vec![0; dim];
            for e in entries {
                add_into(&mut exp, &e.weight);
            }
            *terms.entry(exp).or_insert(0) += 1;
        })?;
        Ok(FlowPolynomial { j, terms })
    }

    /// `P_J` for every `J` of the source-set size, in colex order.
    pub fn all_polynomials(&self) -> Result<Vec<FlowPolynomial>> {
        Subset::all_of_size(self.net.n(), self.net.sources().len())
            .into_iter()
            .map(|j| self.polynomial(j))
            .collect()
    }

    /// The path from `i` to `j` whose weight is coordinatewise below every other one.
    pub fn minimal_path(&self, i: usize, j: usize) -> Result<(&DirectedPath, &ExponentVector)> {
        check_source_sink(self.net, i, j)?;
        let entries = &self.paths[&(i, j)];
        let best = entries
            .iter()
            .find(|cand| {
                entries
                    .iter()
                    .all(|other| dominated(&cand.weight, &other.weight))
            })
            .ok_or_else(|| {
                Error::NotStronglyMinimal(if entries.is_empty() {
                    format!("no directed path from {i} to {j}")
                } else {
                    format!("no path from {i} to {j} has coordinatewise minimal weight")
                })
            })?;
        Ok((&best.path, &best.weight))
    }

    /// Pair sources `i_1 < … < i_r` of `I_O \ J` with sinks `j_1 > … > j_r` of
    /// `J \ I_O` and take the minimal path for each pair.
    pub fn strongly_minimal_flow(&self, j: Subset) -> Result<Flow> {
        let (srcs, mut sinks) = self.split(j)?;
        sinks.reverse();
        let nv = self.net.graph.vertices().len();
        let mut used = VertexSet::new(nv);
        let mut paths = Vec::new();
        let mut weight = vec![0; self.net.basis().len()];
        for (&i, &t) in srcs.iter().zip(&sinks) {
            let (path, w) = self.minimal_path(i, t)?;
            let entry = self.paths[&(i, t)]
                .iter()
                .find(|e| &e.path == path)
                .expect("path is tabulated");
            if !entry.vertices.disjoint(&used) {
                return Err(Error::NotStronglyMinimal(format!(
                    "minimal paths for J = {j} intersect at the path from {i} to {t}"
                )));
            }
            used.union_with(&entry.vertices);
            add_into(&mut weight, w);
            paths.push(path.clone());
        }
        let poly = self.polynomial(j)?;
        if let Some(bad) = poly.terms.keys().find(|term| !dominated(&weight, term)) {
            return Err(Error::NotStronglyMinimal(format!(
                "flow of minimal paths for J = {j} is not below the term {bad:?}"
            )));
        }
        if poly.terms.get(&weight) != Some(&1) {
            return Err(Error::NotStronglyMinimal(format!(
                "minimal weight for J = {j} is not attained by exactly one flow"
            )));
        }
        Ok(Flow { paths })
    }
}

pub fn enumerate_flows(net: &Network, j: Subset) -> Result<Vec<Flow>> {
    FlowModel::new(net)?.flows(j)
}

pub fn flow_polynomial(net: &Network, j: Subset) -> Result<FlowPolynomial> {
    FlowModel::new(net)?.polynomial(j)
}

pub fn strongly_minimal_flow(net: &Network, j: Subset) -> Result<Flow> {
    FlowModel::new(net)?.strongly_minimal_flow(j)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlueckerMode {
    Symbolic,
    Numeric,
}

#[derive(Clone, Debug)]
pub struct PlueckerReport {
    pub mode: PlueckerMode,
    pub relations: usize,
    pub failures: Vec<String>,
    /// Numeric mode: number of `P_J` evaluated, all required to be positive.
    pub evaluated: usize,
    pub nonpositive: Vec<Subset>,
}

impl PlueckerReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.nonpositive.is_empty()
    }
}

/// Every three-term relation `P_{Sac} P_{Sbd} = P_{Sab} P_{Scd} + P_{Sad} P_{Sbc}`
/// with `a < b < c < d` outside `S`.
pub fn three_term_relations(n: usize, size: usize) -> Vec<(Subset, [usize; 4])> {
    let mut out = Vec::new();
    if size < 2 || n < size + 2 {
        return out;
    }
    for s in Subset::all_of_size(n, size - 2) {
        let rest: Vec<usize> = (1..=n).filter(|&i| !s.contains(i)).collect();
        for quad in Subset::all_of_size(rest.len(), 4) {
            let q: Vec<usize> = quad.iter().map(|x| rest[x - 1]).collect();
            out.push((s, [q[0], q[1], q[2], q[3]]));
        }
    }
    out
}

fn with(s: Subset, a: usize, b: usize) -> Subset {
    let mut t = s;
    t.insert(a);
    t.insert(b);
    t
}

/// Check the three-term Plücker relations on the flow polynomials.
///
/// Symbolic mode multiplies polynomials exactly; numeric mode evaluates every
/// `P_J` at seeded positive rationals and also requires each value to be positive.
pub fn pluecker_check(net: &Network, mode: PlueckerMode, seed: u64) -> Result<PlueckerReport> {
    let model = FlowModel::new(net)?;
    let polys = model.all_polynomials()?;
    let index: HashMap<Subset, usize> = polys.iter().enumerate().map(|(i, p)| (p.j, i)).collect();
    let relations = three_term_relations(net.n(), net.sources().len());
    let mut failures = Vec::new();
    let mut nonpositive = Vec::new();
    let name = |s: Subset, a: usize, b: usize| with(s, a, b).to_string();
    match mode {
        PlueckerMode::Symbolic => {
            let sym: Vec<SparsePoly> = polys.iter().map(|p| p.to_poly()).collect();
            let p = |s: Subset, a: usize, b: usize| &sym[index[&with(s, a, b)]];
            for &(s, [a, b, c, d]) in &relations {
                let lhs = p(s, a, c).mul(p(s, b, d));
                let rhs = p(s, a, b).mul(p(s, c, d)).add(&p(s, a, d).mul(p(s, b, c)));
                let residual = lhs.sub(&rhs);
                if !residual.is_zero() {
                    failures.push(format!(
                        "P{}·P{} - P{}·P{} - P{}·P{} has {} nonzero terms",
                        name(s, a, c),
                        name(s, b, d),
                        name(s, a, b),
                        name(s, c, d),
                        name(s, a, d),
                        name(s, b, c),
                        residual.terms.len()
                    ));
                }
            }
        }
        PlueckerMode::Numeric => {
            let values = random_positive_values(net.basis().len(), seed);
            let vals: Vec<BigRational> = polys.iter().map(|p| p.evaluate(&values)).collect();
            for (p, v) in polys.iter().zip(&vals) {
                if !v.is_positive() {
                    nonpositive.push(p.j);
                }
            }
            let v = |s: Subset, a: usize, b: usize| &vals[index[&with(s, a, b)]];
            for &(s, [a, b, c, d]) in &relations {
                let residual =
                    v(s, a, c) * v(s, b, d) - v(s, a, b) * v(s, c, d) - v(s, a, d) * v(s, b, c);
                if !residual.is_zero() {
                    failures.push(format!(
                        "P{}·P{} - P{}·P{} - P{}·P{} = {residual}",
                        name(s, a, c),
                        name(s, b, d),
                        name(s, a, b),
                        name(s, c, d),
                        name(s, a, d),
                        name(s, b, c)
                    ));
                }
            }
        }
    }
    Ok(PlueckerReport {
        mode,
        relations: relations.len(),
        failures,
        evaluated: if mode == PlueckerMode::Numeric {
            polys.len()
        } else {
            0
        },
        nonpositive,
    })
}

/// Seeded positive rationals `p/q` with `1 ≤ p, q ≤ 97`.
pub fn random_positive_values(count: usize, seed: u64) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let p: i64 = rng.gen_range(1..=97);
            let q: i64 = rng.gen_range(1..=97);
            BigRational::new(p.into(), q.into())
        })
        .collect()
}

/// `true` when every coefficient is positive (always, by construction) and the
/// polynomial evaluates positively at the given positive point.
pub fn positive_at(poly: &FlowPolynomial, values: &[BigRational]) -> bool {
    poly.terms.values().all(|&c| c > 0)
        && (poly.is_zero() || poly.evaluate(values) > BigRational::zero())
}

/// `1` as a flow polynomial over `dim` coordinates.
pub fn unit_polynomial(j: Subset, dim: usize) -> FlowPolynomial {
    let mut terms = BTreeMap::new();
    terms.insert(vec![0; dim], 1);
    FlowPolynomial { j, terms }
}

impl SparsePoly {
    pub fn one(dim: usize) -> SparsePoly {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; dim], BigInt::one());
        SparsePoly { terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rec::{build_rec, dualize};

    fn s(t: &str) -> Subset {
        Subset::parse(t).unwrap()
    }

    /// Brute force: every walk along oriented edges, no repeated vertex, by plain recursion
    /// over the edge list (no rotation order involved).
    fn brute_paths(net: &Network, i: usize, j: usize) -> Vec<Vec<usize>> {
        let g = &net.graph;
        let arcs: Vec<(usize, usize)> = net.orientation.pairs(g);
        fn go(
            v: usize,
            target: usize,
            arcs: &[(usize, usize)],
            seen: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if v == target {
                out.push(seen.clone());
                return;
            }
            for &(t, h) in arcs {
                if t == v && !seen.contains(&h) {
                    seen.push(h);
                    go(h, target, arcs, seen, out);
                    seen.pop();
                }
            }
        }
        let mut out = Vec::new();
        let start = g.boundary_vertex(i);
        go(
            start,
            g.boundary_vertex(j),
            &arcs,
            &mut vec![start],
            &mut out,
        );
        out.sort();
        out
    }

    #[test]
    fn path_enumeration_matches_brute_force() {
        for n in 4..=7 {
            for k in 2..=n - 2 {
                let primal = build_rec(k, n).unwrap();
                let dual = dualize(&primal).unwrap();
                for net in [&primal.net, &dual.net] {
                    for i in net.sources().iter() {
                        for j in (1..=n).filter(|&j| !net.sources().contains(j)) {
                            let mut ours: Vec<Vec<usize>> = enumerate_paths(net, i, j)
                                .unwrap()
                                .iter()
                                .map(|p| p.vertices(net))
                                .collect();
                            ours.sort();
                            assert_eq!(
                                ours,
                                brute_paths(net, i, j),
                                "paths {i}->{j} in rec({k},{n})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn paths_are_lexicographic_and_simple() {
        let rec = build_rec(2, 4).unwrap();
        let paths = enumerate_paths(&rec.net, 1, 3).unwrap();
        assert!(!paths.is_empty());
        assert!(paths.windows(2).all(|w| w[0].darts < w[1].darts));
        for p in &paths {
            let mut vs = p.vertices(&rec.net);
            let len = vs.len();
            vs.sort();
            vs.dedup();
            assert_eq!(vs.len(), len);
        }
        assert!(matches!(
            enumerate_paths(&rec.net, 1, 1),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            enumerate_paths(&rec.net, 3, 4),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn trivial_flow_polynomial_is_one() {
        let dual = dualize(&build_rec(4, 7).unwrap()).unwrap();
        let model = FlowModel::new(&dual.net).unwrap();
        let p = model.polynomial(s("1234")).unwrap();
        assert_eq!(p, unit_polynomial(s("1234"), 13));
        assert_eq!(p.display(dual.net.basis()), "1");
        assert_eq!(
            model.flows(s("1234")).unwrap(),
            vec![Flow { paths: vec![] }]
        );
        assert!(matches!(
            model.polynomial(s("123")),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn minimal_path_three_to_six_in_dual() {
        let dual = dualize(&build_rec(4, 7).unwrap()).unwrap();
        let net = &dual.net;
        let model = FlowModel::new(net).unwrap();
        let (path, weight) = model.minimal_path(3, 6).unwrap();
        // up the left column, then right along the middle row
        assert_eq!(
            path.describe(net),
            "3 -> w3_3 -> b2_3 -> w2_3 -> b1_3 -> w2_2 -> b1_2 -> w2_1 -> b1_1 -> 6"
        );
        let support: Vec<String> = net
            .basis()
            .iter()
            .zip(weight)
            .filter(|(_, &e)| e == 1)
            .map(|(l, _)| l.to_string())
            .collect();
        let mut expected = vec!["1237", "1236", "1235", "1234", "1245", "1345", "2345"];
        expected.sort();
        assert_eq!(support, expected);
        let flows = model.flows(s("1246")).unwrap();
        assert!(flows
            .iter()
            .all(|f| f.paths.len() == 1 && f.paths[0].source == 3 && f.paths[0].sink == 6));
        let p = model.polynomial(s("1246")).unwrap();
        assert!(p.terms.contains_key(weight));
        assert_eq!(p.flow_count() as usize, flows.len());
    }

    #[test]
    fn two_path_flows_in_dual() {
        let dual = dualize(&build_rec(4, 7).unwrap()).unwrap();
        let model = FlowModel::new(&dual.net).unwrap();
        let flows = model.flows(s("2356")).unwrap();
        assert!(!flows.is_empty());
        for f in &flows {
            let mut pairs: Vec<(usize, usize)> =
                f.paths.iter().map(|p| (p.source, p.sink)).collect();
            pairs.sort();
            assert_eq!(pairs, vec![(1, 6), (4, 5)]);
        }
        let smf = model.strongly_minimal_flow(s("2356")).unwrap();
        let pairs: Vec<(usize, usize)> = smf.paths.iter().map(|p| (p.source, p.sink)).collect();
        assert_eq!(pairs, vec![(1, 6), (4, 5)]);
        assert!(model
            .strongly_minimal_flow(s("1234"))
            .unwrap()
            .paths
            .is_empty());
    }

    #[test]
    fn coefficients_count_flows() {
        for (k, n) in [(2, 4), (2, 5)] {
            let primal = build_rec(k, n).unwrap();
            let dual = dualize(&primal).unwrap();
            for net in [&primal.net, &dual.net] {
                let model = FlowModel::new(net).unwrap();
                for j in Subset::all_of_size(n, net.sources().len()) {
                    let flows = model.flows(j).unwrap();
                    let mut tally: BTreeMap<ExponentVector, u64> = BTreeMap::new();
                    for f in &flows {
                        *tally.entry(flow_weight(net, f).unwrap()).or_default() += 1;
                    }
                    let p = model.polynomial(j).unwrap();
                    assert_eq!(p.terms, tally);
                    assert_eq!(p.flow_count() as usize, flows.len());
                }
            }
        }
    }

    #[test]
    fn flows_are_vertex_disjoint() {
        let dual = dualize(&build_rec(3, 6).unwrap()).unwrap();
        let model = FlowModel::new(&dual.net).unwrap();
        for j in Subset::all_of_size(6, 3) {
            for f in model.flows(j).unwrap() {
                let mut all: Vec<usize> =
                    f.paths.iter().flat_map(|p| p.vertices(&dual.net)).collect();
                let len = all.len();
                all.sort();
                all.dedup();
                assert_eq!(all.len(), len);
            }
        }
    }

    #[test]
    fn pluecker_symbolic_small() {
        let dual = dualize(&build_rec(2, 4).unwrap()).unwrap();
        let report = pluecker_check(&dual.net, PlueckerMode::Symbolic, 0).unwrap();
        assert_eq!(report.relations, 1);
        assert!(report.passed(), "{:?}", report.failures);
        let primal = build_rec(2, 5).unwrap();
        let report = pluecker_check(&primal.net, PlueckerMode::Symbolic, 0).unwrap();
        assert_eq!(report.relations, 5);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn pluecker_numeric_detects_tampering() {
        let dual = dualize(&build_rec(2, 4).unwrap()).unwrap();
        let model = FlowModel::new(&dual.net).unwrap();
        let mut polys = model.all_polynomials().unwrap();
        let values = random_positive_values(dual.net.basis().len(), 3);
        // doubling one polynomial breaks P13 P24 = P12 P34 + P14 P23
        for c in polys[0].terms.values_mut() {
            *c *= 2;
        }
        let v: Vec<BigRational> = polys.iter().map(|p| p.evaluate(&values)).collect();
        let idx = |t: &str| polys.iter().position(|p| p.j == s(t)).unwrap();
        let residual = &v[idx("13")] * &v[idx("24")]
            - &v[idx("12")] * &v[idx("34")]
            - &v[idx("14")] * &v[idx("23")];
        assert!(!residual.is_zero());
    }

    #[test]
    fn seeded_values_are_reproducible() {
        assert_eq!(random_positive_values(5, 1), random_positive_values(5, 1));
        assert_ne!(random_positive_values(5, 1), random_positive_values(5, 2));
        assert!(random_positive_values(50, 9)
            .iter()
            .all(|v| v.is_positive()));
    }
}
