//! The rectangular plabic graphs `rec(k, n)`, their duals and `w₀` relabellings,
//! together with perfect orientations.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planar::{check_labels, Color, Dart, PlabicGraph, Point, Vertex};
use crate::subset::Subset;

/// Edge directions for a plabic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectOrientation {
    /// `forward[e]`: edge `e` points from its first endpoint to its second.
    pub forward: Vec<bool>,
    /// Boundary labels whose edge points into the disk.
    pub sources: Subset,
    pub acyclic: bool,
}

impl PerfectOrientation {
    /// Check the one-out-at-black / one-in-at-white rule and derive sources and acyclicity.
    pub fn new(graph: &PlabicGraph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != graph.edges().len() {
            return Err(Error::Parameter(format!(
                "orientation has {} entries for {} edges",
                forward.len(),
                graph.edges().len()
            )));
        }
        let mut out_deg = vec![0usize; graph.vertices().len()];
        for (e, &(a, b)) in graph.edges().iter().enumerate() {
            out_deg[if forward[e] { a } else { b }] += 1;
        }
        let mut sources = Subset::EMPTY;
        for (v, vert) in graph.vertices().iter().enumerate() {
            let deg = graph.degree(v);
            match vert.color {
                Color::Black if out_deg[v] != 1 => {
                    return Err(Error::Structural(format!(
                        "black vertex {} has {} outgoing edges",
                        vert.id, out_deg[v]
                    )))
                }
                Color::White if deg - out_deg[v] != 1 => {
                    return Err(Error::Structural(format!(
                        "white vertex {} has {} incoming edges",
                        vert.id,
                        deg - out_deg[v]
                    )))
                }
                Color::Boundary if out_deg[v] == 1 => {
                    sources.insert(
                        graph
                            .boundary_label(v)
                            .expect("boundary vertex has a label"),
                    );
                }
                _ => {}
            }
        }
        let acyclic = is_acyclic(graph, &forward);
        Ok(PerfectOrientation {
            forward,
            sources,
            acyclic,
        })
    }

    /// From `(tail, head)` vertex-index pairs, one per edge.
    pub fn from_pairs(graph: &PlabicGraph, pairs: &[(usize, usize)]) -> Result<Self> {
        let index: HashMap<(usize, usize), usize> = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(a, b))| ((a, b), e))
            .collect();
        let mut forward = vec![None; graph.edges().len()];
        for &(t, h) in pairs {
            let (e, dir) = if let Some(&e) = index.get(&(t, h)) {
                (e, true)
            } else if let Some(&e) = index.get(&(h, t)) {
                (e, false)
            } else {
                return Err(Error::Parameter(format!(
                    "orientation names a non-edge ({t}, {h})"
                )));
            };
            if forward[e].replace(dir).is_some() {
                return Err(Error::Parameter(format!("edge {e} oriented twice")));
            }
        }
        let forward = forward
            .into_iter()
            .enumerate()
            .map(|(e, f)| f.ok_or_else(|| Error::Parameter(format!("edge {e} has no direction"))))
            .collect::<Result<Vec<_>>>()?;
        PerfectOrientation::new(graph, forward)
    }

    /// The dart of edge `e` in its oriented direction.
    pub fn dart(&self, e: usize) -> Dart {
        if self.forward[e] {
            2 * e
        } else {
            2 * e + 1
        }
    }

    pub fn is_oriented(&self, d: Dart) -> bool {
        self.dart(d / 2) == d
    }

    /// Oriented darts leaving `v`, in rotation order.
    pub fn out_darts<'a>(
        &'a self,
        graph: &'a PlabicGraph,
        v: usize,
    ) -> impl Iterator<Item = Dart> + 'a {
        graph.out_darts(v).filter(move |&d| self.is_oriented(d))
    }

    /// `(tail, head)` pairs.
    pub fn pairs(&self, graph: &PlabicGraph) -> Vec<(usize, usize)> {
        (0..self.forward.len())
            .map(|e| {
                let d = self.dart(e);
                (graph.tail(d), graph.head(d))
            })
            .collect()
    }

    pub fn reversed(&self, graph: &PlabicGraph) -> Result<Self> {
        PerfectOrientation::new(graph, self.forward.iter().map(|f| !f).collect())
    }
}

fn is_acyclic(graph: &PlabicGraph, forward: &[bool]) -> bool {
    let nv = graph.vertices().len();
    let mut indeg = vec![0usize; nv];
    let mut succ = vec![Vec::new(); nv];
    for (e, &(a, b)) in graph.edges().iter().enumerate() {
        let (t, h) = if forward[e] { (a, b) } else { (b, a) };
        succ[t].push(h);
        indeg[h] += 1;
    }
    let mut stack: Vec<usize> = (0..nv).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    seen == nv
}

/// A plabic graph with a perfect orientation and a face labelling (indexed by face id).
///
/// Exponent vectors over faces use the coordinate order of [`Network::basis`]:
/// labels sorted in sorted-tuple lexicographic order.
#[derive(Clone, Debug)]
pub struct Network {
    pub graph: PlabicGraph,
    pub orientation: PerfectOrientation,
    labels: Vec<Subset>,
    basis: Vec<Subset>,
    coord_of_face: Vec<usize>,
}

impl Network {
    /// Labels are computed from trips.
    pub fn new(graph: PlabicGraph, orientation: PerfectOrientation) -> Result<Self> {
        let labels = graph.face_labelling()?;
        Network::with_labels(graph, orientation, labels)
    }

    pub fn with_labels(
        graph: PlabicGraph,
        orientation: PerfectOrientation,
        labels: Vec<Subset>,
    ) -> Result<Self> {
        if labels.len() != graph.faces().len() {
            return Err(Error::Labelling(format!(
                "{} labels for {} faces",
                labels.len(),
                graph.faces().len()
            )));
        }
        check_labels(&labels)?;
        let mut basis = labels.clone();
        basis.sort();
        let coord_of_face = labels
            .iter()
            .map(|l| basis.binary_search(l).expect("label is in the basis"))
            .collect();
        Ok(Network {
            graph,
            orientation,
            labels,
            basis,
            coord_of_face,
        })
    }

    /// Label of every face, indexed by face id.
    pub fn labels(&self) -> &[Subset] {
        &self.labels
    }

    /// All face labels, sorted; the coordinate order for exponent vectors.
    pub fn basis(&self) -> &[Subset] {
        &self.basis
    }

    /// Coordinate of a face in [`Network::basis`].
    pub fn coordinate(&self, face: usize) -> usize {
        self.coord_of_face[face]
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn sources(&self) -> Subset {
        self.orientation.sources
    }

    pub fn face_with_label(&self, label: Subset) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Primal,
    Dual,
    W0,
}

#[derive(Clone, Debug)]
pub struct RecGraph {
    pub k: usize,
    pub n: usize,
    pub role: Role,
    pub net: Network,
}

fn check_range(k: usize, n: usize) -> Result<()> {
    if k < 2 || k + 2 > n {
        return Err(Error::Parameter(format!(
            "rec(k, n) needs 2 <= k <= n - 2, got k = {k}, n = {n}"
        )));
    }
    if n > 64 {
        return Err(Error::Parameter(format!(
            "n = {n} exceeds the supported 64 boundary vertices"
        )));
    }
    Ok(())
}

/// `rec(k, n)` on the integer grid, with its canonical acyclic perfect orientation.
///
/// With `m = n - k`: white `w(r, c)` (`r ≤ m`, `c ≤ k-1`) sits at `(6-3c, 6-3r)` and
/// black `b(r, c)` (`r ≤ m-1`, `c ≤ k`) at `(7-3c, 4-3r)`. Boundary `1` and `2..=m`
/// sit on the right, `m+1..=n` along the bottom and left.
pub fn build_rec(k: usize, n: usize) -> Result<RecGraph> {
    check_range(k, n)?;
    let m = n - k;
    let (ki, mi) = (k as i64, m as i64);

    let mut vertices = Vec::new();
    let mut index = HashMap::new();
    let mut add = |id: String, color: Color, x: i64, y: i64, vertices: &mut Vec<Vertex>| {
        index.insert(id.clone(), vertices.len());
        vertices.push(Vertex {
            id,
            color,
            pos: Point::from_ints(x, y),
        });
    };
    add("1".into(), Color::Boundary, 6, 3, &mut vertices);
    for r in 1..m as i64 {
        add(
            (r + 1).to_string(),
            Color::Boundary,
            7,
            4 - 3 * r,
            &mut vertices,
        );
    }
    for c in 1..ki {
        add(
            (mi + c).to_string(),
            Color::Boundary,
            6 - 3 * c,
            3 - 3 * mi,
            &mut vertices,
        );
    }
    add(
        n.to_string(),
        Color::Boundary,
        7 - 3 * ki,
        4 - 3 * mi,
        &mut vertices,
    );
    for r in 1..=mi {
        for c in 1..ki {
            add(
                format!("w{r}_{c}"),
                Color::White,
                6 - 3 * c,
                6 - 3 * r,
                &mut vertices,
            );
        }
    }
    for r in 1..mi {
        for c in 1..=ki {
            add(
                format!("b{r}_{c}"),
                Color::Black,
                7 - 3 * c,
                4 - 3 * r,
                &mut vertices,
            );
        }
    }

    let w = |r: usize, c: usize| index[&format!("w{r}_{c}")];
    let b = |r: usize, c: usize| index[&format!("b{r}_{c}")];
    let bd = |i: usize| index[&i.to_string()];

    // every pair is (tail, head) in the canonical orientation
    let mut arrows = vec![(bd(1), w(1, 1))];
    for r in 1..m {
        arrows.push((bd(r + 1), b(r, 1)));
    }
    for c in 1..k - 1 {
        arrows.push((w(1, c), w(1, c + 1)));
    }
    for c in 1..k {
        arrows.push((w(1, c), b(1, c)));
    }
    arrows.push((w(1, k - 1), b(1, k)));
    for r in 1..m {
        for c in 1..k {
            arrows.push((b(r, c), w(r + 1, c)));
            if c >= 2 {
                arrows.push((w(r + 1, c - 1), b(r, c)));
            }
            if r >= 2 {
                arrows.push((w(r, c), b(r, c)));
            }
        }
        arrows.push((w(r + 1, k - 1), b(r, k)));
        if r + 1 < m {
            arrows.push((b(r, k), b(r + 1, k)));
        }
    }
    arrows.push((b(m - 1, k), bd(n)));
    for c in 1..k {
        arrows.push((w(m, c), bd(m + c)));
    }

    let graph = PlabicGraph::new(n, vertices, arrows.clone())?;
    let orientation = PerfectOrientation::new(&graph, vec![true; arrows.len()])?;
    if !orientation.acyclic || orientation.sources != Subset::interval(m) {
        return Err(Error::Structural(format!(
            "canonical orientation of rec({k},{n}) is not acyclic with sources 1..{m}"
        )));
    }
    let net = Network::new(graph, orientation)?;
    Ok(RecGraph {
        k,
        n,
        role: Role::Primal,
        net,
    })
}

impl RecGraph {
    pub fn graph(&self) -> &PlabicGraph {
        &self.net.graph
    }

    pub fn network(&self) -> &Network {
        &self.net
    }

    /// Cardinality of the source set (`n - k` primal, `k` dual).
    pub fn rank(&self) -> usize {
        self.net.sources().len()
    }
}

/// Swap internal colours, reverse the orientation and relabel the boundary `r ↦ r + k (mod n)`.
pub fn dualize(rec: &RecGraph) -> Result<RecGraph> {
    if rec.role != Role::Primal {
        return Err(Error::Parameter(
            "only primal rec graphs can be dualized".into(),
        ));
    }
    let (k, n) = (rec.k, rec.n);
    let graph = rec.graph().recoloured(|r| (r + k - 1) % n + 1)?;
    let orientation = PerfectOrientation::new(
        &graph,
        rec.net.orientation.forward.iter().map(|f| !f).collect(),
    )?;
    let net = Network::new(graph, orientation)?;
    for (f, (&primal, &dual)) in rec.net.labels().iter().zip(net.labels()).enumerate() {
        if dual != primal.complement(n) {
            return Err(Error::Labelling(format!(
                "dual face {f} has label {dual}, expected the complement of {primal}"
            )));
        }
    }
    Ok(RecGraph {
        k,
        n,
        role: Role::Dual,
        net,
    })
}

/// Replace every face label `I` by `{n + 1 - i : i ∈ I}`; graph and orientation are kept.
pub fn apply_w0(rec: &RecGraph) -> Result<RecGraph> {
    if rec.role != Role::Primal {
        return Err(Error::Parameter(
            "w0 relabelling applies to primal rec graphs".into(),
        ));
    }
    let n = rec.n;
    let labels = rec
        .net
        .labels()
        .iter()
        .map(|l| l.map(|i| n + 1 - i))
        .collect();
    let net = Network::with_labels(rec.net.graph.clone(), rec.net.orientation.clone(), labels)?;
    Ok(RecGraph {
        k: rec.k,
        n,
        role: Role::W0,
        net,
    })
}

/// Outcome of [`find_perfect_orientation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrientationSearch {
    Found(PerfectOrientation),
    Infeasible,
}

/// Size every source set must have: edges minus the forced out-degrees of internal vertices.
pub fn feasible_source_count(graph: &PlabicGraph) -> Result<usize> {
    let mut forced = 0usize;
    for (v, vert) in graph.vertices().iter().enumerate() {
        match vert.color {
            Color::Black => forced += 1,
            Color::White => forced += graph.degree(v) - 1,
            Color::Boundary => {}
        }
    }
    graph
        .edges()
        .len()
        .checked_sub(forced)
        .filter(|&s| s <= graph.n())
        .ok_or_else(|| {
            Error::Structural("colour/degree counts admit no perfect orientation".into())
        })
}

/// Exhaustive search for a perfect orientation with the given boundary sources,
/// preferring an acyclic one.
pub fn find_perfect_orientation(graph: &PlabicGraph, sources: Subset) -> Result<OrientationSearch> {
    let need = feasible_source_count(graph)?;
    if sources.len() != need || !sources.is_subset(Subset::full(graph.n())) {
        return Err(Error::Parameter(format!(
            "source set {sources} must be a {need}-subset of 1..{}",
            graph.n()
        )));
    }
    let mut search = Search::new(graph, sources);
    for acyclic_only in [true, false] {
        let mut state = search.initial.clone();
        if let Some(forward) = search.solve(&mut state, acyclic_only) {
            return PerfectOrientation::new(graph, forward).map(OrientationSearch::Found);
        }
    }
    Ok(OrientationSearch::Infeasible)
}

struct Search<'a> {
    graph: &'a PlabicGraph,
    initial: Vec<Option<bool>>,
    incident: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(graph: &'a PlabicGraph, sources: Subset) -> Self {
        let nv = graph.vertices().len();
        let mut incident = vec![Vec::new(); nv];
        for (e, &(a, b)) in graph.edges().iter().enumerate() {
            incident[a].push(e);
            incident[b].push(e);
        }
        let mut initial = vec![None; graph.edges().len()];
        for i in 1..=graph.n() {
            let v = graph.boundary_vertex(i);
            let e = incident[v][0];
            let points_out_of_v = sources.contains(i);
            initial[e] = Some((graph.edges()[e].0 == v) == points_out_of_v);
        }
        Search {
            graph,
            initial,
            incident,
        }
    }

    fn leaves(&self, e: usize, v: usize, dir: bool) -> bool {
        (self.graph.edges()[e].0 == v) == dir
    }

    /// Unit propagation; `false` on conflict.
    fn propagate(&self, state: &mut [Option<bool>]) -> bool {
        loop {
            let mut changed = false;
            for (v, vert) in self.graph.vertices().iter().enumerate() {
                // black: exactly one out; white: exactly one in
                let want_out = match vert.color {
                    Color::Black => true,
                    Color::White => false,
                    Color::Boundary => continue,
                };
                let mut special = 0;
                let mut open = Vec::new();
                for &e in &self.incident[v] {
                    match state[e] {
                        Some(dir) if self.leaves(e, v, dir) == want_out => special += 1,
                        Some(_) => {}
                        None => open.push(e),
                    }
                }
                if special > 1 || (special == 0 && open.is_empty()) {
                    return false;
                }
                let forced_special = special == 0 && open.len() == 1;
                if special == 1 || forced_special {
                    for &e in &open {
                        let leaves = if forced_special { want_out } else { !want_out };
                        state[e] = Some((self.graph.edges()[e].0 == v) == leaves);
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn has_cycle(&self, state: &[Option<bool>]) -> bool {
        let forward: Vec<Option<(usize, usize)>> = state
            .iter()
            .enumerate()
            .map(|(e, s)| {
                s.map(|f| {
                    let (a, b) = self.graph.edges()[e];
                    if f {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
            })
            .collect();
        let nv = self.graph.vertices().len();
        let mut indeg = vec![0usize; nv];
        let mut succ = vec![Vec::new(); nv];
        for &(t, h) in forward.iter().flatten() {
            succ[t].push(h);
            indeg[h] += 1;
        }
        let mut stack: Vec<usize> = (0..nv).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        seen != nv
    }

    fn solve(&mut self, state: &mut [Option<bool>], acyclic_only: bool) -> Option<Vec<bool>> {
        if !self.propagate(state) || (acyclic_only && self.has_cycle(state)) {
            return None;
        }
        match state.iter().position(|s| s.is_none()) {
            None => Some(state.iter().map(|s| s.unwrap()).collect()),
            Some(e) => {
                for dir in [true, false] {
                    let mut next = state.to_vec();
                    next[e] = Some(dir);
                    if let Some(found) = self.solve(&mut next, acyclic_only) {
                        return Some(found);
                    }
                }
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels_of(rec: &RecGraph) -> Vec<String> {
        let mut out: Vec<String> = rec.net.labels().iter().map(|l| l.to_string()).collect();
        out.sort();
        out
    }

    #[test]
    fn rec_4_7_trips_and_labels() {
        let rec = build_rec(4, 7).unwrap();
        let g = rec.graph();
        let whites = g
            .vertices()
            .iter()
            .filter(|v| v.color == Color::White)
            .count();
        let blacks = g
            .vertices()
            .iter()
            .filter(|v| v.color == Color::Black)
            .count();
        assert_eq!((whites, blacks), (9, 8));
        assert_eq!(g.faces().len(), 13);
        assert_eq!(g.trip_permutation().unwrap(), vec![4, 5, 6, 7, 1, 2, 3]);
        assert_eq!(g.trip(1).unwrap().end, 4);
        assert_eq!(g.trip(5).unwrap().end, 1);
        let mut expected = vec![
            "167", "127", "123", "267", "237", "234", "367", "347", "345", "467", "457", "456",
            "567",
        ];
        expected.sort();
        assert_eq!(labels_of(&rec), expected);
        assert_eq!(rec.net.sources(), Subset::interval(3));
        assert!(rec.net.orientation.acyclic);
    }

    #[test]
    fn dual_4_7_sources_and_labels() {
        let primal = build_rec(4, 7).unwrap();
        let dual = dualize(&primal).unwrap();
        assert_eq!(dual.net.sources(), Subset::interval(4));
        assert_eq!(
            dual.graph().trip_permutation().unwrap(),
            vec![5, 6, 7, 1, 2, 3, 4]
        );
        let f = primal
            .net
            .face_with_label(Subset::parse("167").unwrap())
            .unwrap();
        assert_eq!(dual.net.labels()[f], Subset::parse("2345").unwrap());
        let whites = dual
            .graph()
            .vertices()
            .iter()
            .filter(|v| v.color == Color::White)
            .count();
        let blacks = dual
            .graph()
            .vertices()
            .iter()
            .filter(|v| v.color == Color::Black)
            .count();
        assert_eq!((whites, blacks), (8, 9));
        assert!(dual.net.orientation.acyclic);
        assert!(dualize(&dual).is_err());
    }

    #[test]
    fn family_invariants_up_to_nine() {
        for n in 4..=9 {
            for k in 2..=n - 2 {
                let rec = build_rec(k, n).unwrap();
                let m = n - k;
                let g = rec.graph();
                assert_eq!(g.faces().len(), k * m + 1, "faces of rec({k},{n})");
                let whites = g
                    .vertices()
                    .iter()
                    .filter(|v| v.color == Color::White)
                    .count();
                let blacks = g
                    .vertices()
                    .iter()
                    .filter(|v| v.color == Color::Black)
                    .count();
                assert_eq!(whites, m * (k - 1));
                assert_eq!(blacks, (m - 1) * k);
                let pi = g.trip_permutation().unwrap();
                let expected: Vec<usize> = (1..=n).map(|i| (i + m - 1) % n + 1).collect();
                assert_eq!(pi, expected, "trip permutation of rec({k},{n})");
                assert!(rec.net.labels().iter().all(|l| l.len() == m));
                let dual = dualize(&rec).unwrap();
                assert_eq!(dual.net.sources(), Subset::interval(k));
                assert!(dual.net.orientation.acyclic);
            }
        }
    }

    #[test]
    fn parameter_range() {
        assert!(matches!(build_rec(1, 3), Err(Error::Parameter(_))));
        assert!(matches!(build_rec(3, 4), Err(Error::Parameter(_))));
        assert!(build_rec(2, 4).is_ok());
    }

    #[test]
    fn w0_relabels_faces() {
        let rec = build_rec(4, 7).unwrap();
        let w0 = apply_w0(&rec).unwrap();
        let f = rec
            .net
            .face_with_label(Subset::parse("167").unwrap())
            .unwrap();
        assert_eq!(w0.net.labels()[f], Subset::parse("127").unwrap());
        let f = rec
            .net
            .face_with_label(Subset::parse("567").unwrap())
            .unwrap();
        assert_eq!(w0.net.labels()[f], Subset::parse("123").unwrap());
        check_labels(w0.net.labels()).unwrap();
        assert_eq!(w0.net.orientation, rec.net.orientation);
    }

    #[test]
    fn colour_swap_twice_restores_graph() {
        let rec = build_rec(3, 6).unwrap();
        let (k, n) = (rec.k, rec.n);
        let once = rec.graph().recoloured(|r| (r + k - 1) % n + 1).unwrap();
        let twice = once.recoloured(|r| (r + k - 1) % n + 1).unwrap();
        for (a, b) in rec.graph().vertices().iter().zip(twice.vertices()) {
            assert_eq!(a.color, b.color);
            assert_eq!(a.pos, b.pos);
        }
        // labels moved by 2k mod n
        let moved: usize = twice.vertices()[rec.graph().boundary_vertex(1)]
            .id
            .parse()
            .unwrap();
        assert_eq!(moved, (1 + 2 * k - 1) % n + 1);
        let back = rec
            .net
            .orientation
            .reversed(&once)
            .unwrap()
            .reversed(&twice)
            .unwrap();
        assert_eq!(back.forward, rec.net.orientation.forward);
    }

    #[test]
    fn orientation_search() {
        let rec = build_rec(4, 7).unwrap();
        let g = rec.graph();
        assert_eq!(feasible_source_count(g).unwrap(), 3);
        match find_perfect_orientation(g, Subset::parse("123").unwrap()).unwrap() {
            OrientationSearch::Found(o) => {
                assert_eq!(o.sources, Subset::parse("123").unwrap());
                assert!(o.acyclic);
            }
            OrientationSearch::Infeasible => panic!("canonical sources must be feasible"),
        }
        match find_perfect_orientation(g, Subset::parse("124").unwrap()).unwrap() {
            OrientationSearch::Found(o) => assert_eq!(o.sources, Subset::parse("124").unwrap()),
            OrientationSearch::Infeasible => panic!("every 3-subset is a basis of the top cell"),
        }
        assert!(matches!(
            find_perfect_orientation(g, Subset::parse("12").unwrap()),
            Err(Error::Parameter(_))
        ));
        PerfectOrientation::new(g, rec.net.orientation.forward.clone()).unwrap();
    }

    #[test]
    fn non_perfect_orientation_rejected() {
        let rec = build_rec(2, 4).unwrap();
        let mut forward = rec.net.orientation.forward.clone();
        forward[0] = !forward[0];
        assert!(PerfectOrientation::new(rec.graph(), forward).is_err());
    }
}
