//! Plabic graphs embedded in a disk: rotation systems, faces, trips, face labels
//! and regions to the left of boundary-to-boundary walks.
//!
//! Every undirected edge `e` owns two darts, `2e` (first endpoint to second) and
//! `2e + 1` (reverse). The `n` boundary arcs `i → i+1` are appended after the graph
//! edges with the same convention, so that faces touching the boundary circle are
//! ordinary bounded orbits and the region outside the disk is the single orbit
//! `1 → 2 → … → n → 1`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::Subset;

pub type Rational = BigRational;

/// Index of a directed half-edge.
pub type Dart = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(
            Rational::from_integer(x.into()),
            Rational::from_integer(y.into()),
        )
    }

    fn sub(&self, other: &Point) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.x.to_f64().unwrap_or(0.0),
            self.y.to_f64().unwrap_or(0.0),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
    Boundary,
}

impl Color {
    /// Black and white are exchanged; boundary stays boundary.
    pub fn swapped(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
            Color::Boundary => Color::Boundary,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub color: Color,
    pub pos: Point,
}

/// A bounded face: the orbit of darts that keep it on their left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub darts: Vec<Dart>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trip {
    pub start: usize,
    pub steps: Vec<Dart>,
    pub end: usize,
}

/// Half-plane index then cross product: a total order on directions by angle in `[0, 2π)`.
fn angle_cmp(a: &(Rational, Rational), b: &(Rational, Rational)) -> Ordering {
    let half = |v: &(Rational, Rational)| -> u8 {
        if v.1.is_positive() || (v.1.is_zero() && v.0.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a.0 * &b.1 - &a.1 * &b.0;
        // positive cross: b is counterclockwise from a, so a comes first
        Rational::zero().cmp(&cross)
    })
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    let (ax, ay) = a.sub(o);
    let (bx, by) = b.sub(o);
    ax * by - ay * bx
}

fn segments_intersect(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> bool {
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    let opposite = |a: &Rational, b: &Rational| {
        (a.is_positive() && b.is_negative()) || (a.is_negative() && b.is_positive())
    };
    if opposite(&d1, &d2) && opposite(&d3, &d4) {
        return true;
    }
    let on_segment = |a: &Point, b: &Point, p: &Point| {
        let lo_x = a.x.clone().min(b.x.clone());
        let hi_x = a.x.clone().max(b.x.clone());
        let lo_y = a.y.clone().min(b.y.clone());
        let hi_y = a.y.clone().max(b.y.clone());
        lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y
    };
    (d1.is_zero() && on_segment(q1, q2, p1))
        || (d2.is_zero() && on_segment(q1, q2, p2))
        || (d3.is_zero() && on_segment(p1, p2, q1))
        || (d4.is_zero() && on_segment(p1, p2, q2))
}

/// An embedded plabic graph. Immutable after construction; faces are computed eagerly.
#[derive(Clone, Debug)]
pub struct PlabicGraph {
    n: usize,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    /// `boundary[i - 1]` is the vertex carrying boundary label `i`.
    boundary: Vec<usize>,
    boundary_label: Vec<Option<usize>>,
    tail: Vec<usize>,
    head: Vec<usize>,
    /// Outgoing darts at each vertex in counterclockwise order.
    rotation: Vec<Vec<Dart>>,
    rot_index: Vec<usize>,
    face_of: Vec<Option<usize>>,
    faces: Vec<Face>,
}

impl PlabicGraph {
    /// Build from vertices and edges given as vertex indices.
    ///
    /// Boundary vertices must have ids `"1"`, …, `"n"`; their ids are their labels.
    pub fn new(n: usize, vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter(
                "a plabic graph needs at least one boundary vertex".into(),
            ));
        }
        let nv = vertices.len();
        let mut ids = HashSet::new();
        for v in &vertices {
            if !ids.insert(v.id.as_str()) {
                return Err(Error::Embedding(format!("duplicate vertex id {:?}", v.id)));
            }
        }
        let mut seen_pos = HashMap::new();
        for v in &vertices {
            if let Some(other) = seen_pos.insert(&v.pos, &v.id) {
                return Err(Error::Embedding(format!(
                    "vertices {:?} and {:?} share a position",
                    other, v.id
                )));
            }
        }

        let mut boundary = vec![usize::MAX; n];
        let mut boundary_label = vec![None; nv];
        for (idx, v) in vertices.iter().enumerate() {
            if v.color != Color::Boundary {
                continue;
            }
            let label: usize = v.id.parse().map_err(|_| {
                Error::Embedding(format!(
                    "boundary vertex id {:?} is not a label in 1..{n}",
                    v.id
                ))
            })?;
            if !(1..=n).contains(&label) || boundary[label - 1] != usize::MAX {
                return Err(Error::Embedding(format!(
                    "boundary label {label} invalid or repeated"
                )));
            }
            boundary[label - 1] = idx;
            boundary_label[idx] = Some(label);
        }
        if let Some(missing) = boundary.iter().position(|&b| b == usize::MAX) {
            return Err(Error::Embedding(format!(
                "boundary label {} missing",
                missing + 1
            )));
        }

        let mut edge_set = HashSet::new();
        for &(a, b) in &edges {
            if a >= nv || b >= nv {
                return Err(Error::Embedding(format!(
                    "edge ({a}, {b}) references a missing vertex"
                )));
            }
            if a == b {
                return Err(Error::Embedding(format!("loop at {:?}", vertices[a].id)));
            }
            if !edge_set.insert((a.min(b), a.max(b))) {
                return Err(Error::Embedding(format!(
                    "repeated edge {:?}–{:?}",
                    vertices[a].id, vertices[b].id
                )));
            }
        }

        let ne = edges.len();
        let ndarts = 2 * (ne + n);
        let mut tail = vec![0; ndarts];
        let mut head = vec![0; ndarts];
        for (e, &(a, b)) in edges.iter().enumerate() {
            tail[2 * e] = a;
            head[2 * e] = b;
            tail[2 * e + 1] = b;
            head[2 * e + 1] = a;
        }
        for a in 0..n {
            let from = boundary[a];
            let to = boundary[(a + 1) % n];
            let d = 2 * (ne + a);
            tail[d] = from;
            head[d] = to;
            tail[d + 1] = to;
            head[d + 1] = from;
        }

        // rotation: internal vertices by exact angle, boundary vertices combinatorially
        let mut rotation: Vec<Vec<Dart>> = vec![Vec::new(); nv];
        for d in 0..2 * ne {
            rotation[tail[d]].push(d);
        }
        for (v, rot) in rotation.iter_mut().enumerate() {
            if vertices[v].color == Color::Boundary {
                if rot.len() != 1 {
                    return Err(Error::Embedding(format!(
                        "boundary vertex {} is incident to {} edges, expected exactly one",
                        vertices[v].id,
                        rot.len()
                    )));
                }
                continue;
            }
            if rot.is_empty() {
                return Err(Error::Embedding(format!(
                    "internal vertex {} is isolated",
                    vertices[v].id
                )));
            }
            let origin = &vertices[v].pos;
            let mut keyed: Vec<((Rational, Rational), Dart)> = rot
                .iter()
                .map(|&d| (vertices[head[d]].pos.sub(origin), d))
                .collect();
            keyed.sort_by(|a, b| angle_cmp(&a.0, &b.0));
            for w in keyed.windows(2) {
                if angle_cmp(&w[0].0, &w[1].0) == Ordering::Equal {
                    return Err(Error::Embedding(format!(
                        "two edges leave {} in the same direction",
                        vertices[v].id
                    )));
                }
            }
            *rot = keyed.into_iter().map(|(_, d)| d).collect();
        }
        // at boundary label i: interior edge, arc to i+1, arc to i-1 (counterclockwise)
        for (a, &v) in boundary.iter().enumerate() {
            let to_next = 2 * (ne + a);
            let to_prev = 2 * (ne + (a + n - 1) % n) + 1;
            let interior = rotation[v][0];
            rotation[v] = vec![interior, to_next, to_prev];
        }

        let mut rot_index = vec![0; ndarts];
        for rot in &rotation {
            for (i, &d) in rot.iter().enumerate() {
                rot_index[d] = i;
            }
        }

        let mut graph = PlabicGraph {
            n,
            vertices,
            edges,
            boundary,
            boundary_label,
            tail,
            head,
            rotation,
            rot_index,
            face_of: Vec::new(),
            faces: Vec::new(),
        };
        graph.check_boundary_polygon()?;
        graph.trace_faces()?;
        Ok(graph)
    }

    /// Build from vertex-id pairs.
    pub fn from_id_edges(
        n: usize,
        vertices: Vec<Vertex>,
        edges: &[(String, String)],
    ) -> Result<Self> {
        let index: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id.as_str(), i))
            .collect();
        let mut out = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let ia = *index
                .get(a.as_str())
                .ok_or_else(|| Error::Embedding(format!("edge endpoint {a:?} unknown")))?;
            let ib = *index
                .get(b.as_str())
                .ok_or_else(|| Error::Embedding(format!("edge endpoint {b:?} unknown")))?;
            out.push((ia, ib));
        }
        PlabicGraph::new(n, vertices, out)
    }

    fn check_boundary_polygon(&self) -> Result<()> {
        let n = self.n;
        if n < 3 {
            return Ok(());
        }
        let pts: Vec<&Point> = self
            .boundary
            .iter()
            .map(|&v| &self.vertices[v].pos)
            .collect();
        let mut area = Rational::zero();
        for i in 0..n {
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            area += &a.x * &b.y - &a.y * &b.x;
        }
        if !area.is_negative() {
            return Err(Error::Embedding(
                "boundary vertices 1..n are not in clockwise order".into(),
            ));
        }
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    continue;
                }
                if segments_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]) {
                    return Err(Error::Embedding(format!(
                        "boundary polygon self-intersects between arcs {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    fn trace_faces(&mut self) -> Result<()> {
        let ndarts = self.tail.len();
        let mut orbit_of = vec![usize::MAX; ndarts];
        let mut orbits: Vec<Vec<Dart>> = Vec::new();
        for start in 0..ndarts {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                if orbit_of[d] != usize::MAX {
                    return Err(Error::Embedding(
                        "face traversal is not a permutation".into(),
                    ));
                }
                orbit_of[d] = id;
                orbit.push(d);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            orbits.push(orbit);
        }

        let outer_id = orbit_of[self.arc_dart(0)];
        let outer = &orbits[outer_id];
        if outer.len() != self.n || !outer.iter().all(|&d| self.is_arc(d) && d % 2 == 0) {
            return Err(Error::Embedding(
                "the orbit outside the disk is not the boundary circle; rotation system is inconsistent".into(),
            ));
        }

        let mut faces = Vec::new();
        let mut face_of = vec![None; ndarts];
        for (oid, orbit) in orbits.into_iter().enumerate() {
            if oid == outer_id {
                continue;
            }
            let fid = faces.len();
            for &d in &orbit {
                face_of[d] = Some(fid);
            }
            faces.push(Face {
                id: fid,
                darts: orbit,
            });
        }

        // V - E + F = 2, with the n arcs as edges and the outside as one face
        let v = self.vertices.len() as i64;
        let e = (self.edges.len() + self.n) as i64;
        let f = faces.len() as i64 + 1;
        if v - e + f != 2 {
            return Err(Error::Embedding(format!(
                "Euler check failed: V - E + F = {v} - {e} + {f} != 2"
            )));
        }
        self.face_of = face_of;
        self.faces = faces;
        Ok(())
    }

    /// From `u → v` continue with the dart at `v` just clockwise of `v → u`.
    fn next_in_face(&self, d: Dart) -> Dart {
        let back = d ^ 1;
        let v = self.tail[back];
        let rot = &self.rotation[v];
        let i = self.rot_index[back];
        rot[(i + rot.len() - 1) % rot.len()]
    }

    fn arc_dart(&self, a: usize) -> Dart {
        2 * (self.edges.len() + a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex index of boundary label `i` (1-based).
    pub fn boundary_vertex(&self, i: usize) -> usize {
        self.boundary[i - 1]
    }

    pub fn boundary_label(&self, v: usize) -> Option<usize> {
        self.boundary_label[v]
    }

    pub fn color(&self, v: usize) -> Color {
        self.vertices[v].color
    }

    pub fn tail(&self, d: Dart) -> usize {
        self.tail[d]
    }

    pub fn head(&self, d: Dart) -> usize {
        self.head[d]
    }

    pub fn is_arc(&self, d: Dart) -> bool {
        d >= 2 * self.edges.len()
    }

    /// The undirected edge of a graph dart.
    pub fn edge_of(&self, d: Dart) -> usize {
        d / 2
    }

    /// Dart for edge `e` oriented from `from`.
    pub fn dart_from(&self, e: usize, from: usize) -> Dart {
        if self.edges[e].0 == from {
            2 * e
        } else {
            2 * e + 1
        }
    }

    /// Graph darts leaving `v` in counterclockwise order (arcs excluded).
    pub fn out_darts(&self, v: usize) -> impl Iterator<Item = Dart> + '_ {
        self.rotation[v]
            .iter()
            .copied()
            .filter(move |&d| !self.is_arc(d))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out_darts(v).count()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Face on the left of a dart; `None` for the arcs bounding the outside.
    pub fn left_face(&self, d: Dart) -> Option<usize> {
        self.face_of[d]
    }

    pub fn right_face(&self, d: Dart) -> Option<usize> {
        self.face_of[d ^ 1]
    }

    /// Mean position of the vertices around a face.
    pub fn face_centroid(&self, f: usize) -> Point {
        let darts = &self.faces[f].darts;
        let mut x = Rational::zero();
        let mut y = Rational::zero();
        for &d in darts {
            x += &self.vertices[self.tail[d]].pos.x;
            y += &self.vertices[self.tail[d]].pos.y;
        }
        let len = Rational::from_integer((darts.len() as i64).into());
        Point::new(x / &len, y / len)
    }

    /// Same embedding with internal colours swapped and boundary labels renamed.
    ///
    /// `relabel(i)` must be a cyclic rotation of `1..=n` so the clockwise order survives.
    pub fn recoloured(&self, relabel: impl Fn(usize) -> usize) -> Result<PlabicGraph> {
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .map(|(idx, v)| Vertex {
                id: match self.boundary_label[idx] {
                    Some(i) => relabel(i).to_string(),
                    None => v.id.clone(),
                },
                color: v.color.swapped(),
                pos: v.pos.clone(),
            })
            .collect();
        PlabicGraph::new(self.n, vertices, self.edges.clone())
    }

    /// Follow the trip from boundary label `i`: rightmost turn at black vertices,
    /// leftmost at white ones.
    pub fn trip(&self, i: usize) -> Result<Trip> {
        if !(1..=self.n).contains(&i) {
            return Err(Error::Parameter(format!(
                "boundary label {i} outside 1..{}",
                self.n
            )));
        }
        let bound = 2 * self.edges.len();
        let start_vertex = self.boundary[i - 1];
        let mut d = self.rotation[start_vertex][0];
        let mut steps = vec![d];
        loop {
            let v = self.head[d];
            if let Some(end) = self.boundary_label[v] {
                return Ok(Trip {
                    start: i,
                    steps,
                    end,
                });
            }
            if steps.len() >= bound {
                return Err(Error::NonTermination { start: i, bound });
            }
            let back = d ^ 1;
            let rot = &self.rotation[v];
            let idx = self.rot_index[back];
            d = match self.vertices[v].color {
                Color::Black => rot[(idx + 1) % rot.len()],
                Color::White => rot[(idx + rot.len() - 1) % rot.len()],
                Color::Boundary => unreachable!(),
            };
            steps.push(d);
        }
    }

    /// `π(i)` for `i = 1..n`, as a vector indexed by `i - 1`.
    pub fn trip_permutation(&self) -> Result<Vec<usize>> {
        let ends: Vec<usize> = (1..=self.n)
            .map(|i| self.trip(i).map(|t| t.end))
            .collect::<Result<_>>()?;
        let fixed: Vec<usize> = (1..=self.n).filter(|&i| ends[i - 1] == i).collect();
        if !fixed.is_empty() {
            return Err(Error::NotBijective(format!(
                "trips from {fixed:?} return to their start (lollipop)"
            )));
        }
        let mut hit: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, &e) in ends.iter().enumerate() {
            hit.entry(e).or_default().push(i + 1);
        }
        let mut collisions: Vec<String> = hit
            .iter()
            .filter(|(_, starts)| starts.len() > 1)
            .map(|(end, starts)| format!("{starts:?} -> {end}"))
            .collect();
        if !collisions.is_empty() {
            collisions.sort();
            return Err(Error::NotBijective(collisions.join("; ")));
        }
        Ok(ends)
    }

    fn check_walk(&self, path: &[Dart]) -> Result<()> {
        let first = *path
            .first()
            .ok_or_else(|| Error::Path("empty path".into()))?;
        if path.iter().any(|&d| d >= self.tail.len() || self.is_arc(d)) {
            return Err(Error::Path(
                "path uses a boundary arc or an unknown dart".into(),
            ));
        }
        if self.boundary_label[self.tail[first]].is_none() {
            return Err(Error::Path(
                "path does not start at a boundary vertex".into(),
            ));
        }
        let last = *path.last().unwrap();
        if self.boundary_label[self.head[last]].is_none() {
            return Err(Error::Path("path does not end at a boundary vertex".into()));
        }
        for w in path.windows(2) {
            if self.head[w[0]] != self.tail[w[1]] {
                return Err(Error::Path(
                    "consecutive steps do not share a vertex".into(),
                ));
            }
        }
        let mut used = HashSet::new();
        for &d in path {
            if !used.insert(d / 2) {
                return Err(Error::Path(format!(
                    "edge {}–{} used twice",
                    self.vertices[self.tail[d]].id, self.vertices[self.head[d]].id
                )));
            }
        }
        Ok(())
    }

    /// Faces in the region to the left of a boundary-to-boundary walk.
    ///
    /// Seeds are the left faces of the walk's darts; the region grows across graph
    /// edges the walk does not use. Reaching a face on the right of the walk is a
    /// separation failure.
    pub fn left_region(&self, path: &[Dart]) -> Result<BTreeSet<usize>> {
        self.check_walk(path)?;
        let used: HashSet<usize> = path.iter().map(|d| d / 2).collect();
        let right: HashSet<usize> = path.iter().filter_map(|&d| self.right_face(d)).collect();
        let mut region = BTreeSet::new();
        let mut queue = VecDeque::new();
        for &d in path {
            if let Some(f) = self.left_face(d) {
                if region.insert(f) {
                    queue.push_back(f);
                }
            }
        }
        while let Some(f) = queue.pop_front() {
            if right.contains(&f) {
                return Err(Error::Separation(format!(
                    "face {f} lies on both sides of the walk"
                )));
            }
            for &d in &self.faces[f].darts {
                if self.is_arc(d) || used.contains(&(d / 2)) {
                    continue;
                }
                if let Some(g) = self.right_face(d) {
                    if region.insert(g) {
                        queue.push_back(g);
                    }
                }
            }
        }
        Ok(region)
    }

    /// `λ(F) = { i : F lies left of trip T_i }`, indexed by face id.
    pub fn face_labelling(&self) -> Result<Vec<Subset>> {
        self.trip_permutation()?;
        let mut labels = vec![Subset::EMPTY; self.faces.len()];
        for i in 1..=self.n {
            let trip = self.trip(i)?;
            for f in self.left_region(&trip.steps)? {
                labels[f].insert(i);
            }
        }
        check_labels(&labels)?;
        Ok(labels)
    }
}

/// Labels must be pairwise distinct and of one common size.
pub fn check_labels(labels: &[Subset]) -> Result<()> {
    if let Some(first) = labels.first() {
        if let Some(bad) = labels.iter().find(|l| l.len() != first.len()) {
            return Err(Error::Labelling(format!(
                "labels {first} and {bad} have different sizes"
            )));
        }
    }
    let mut seen = HashMap::new();
    for (f, l) in labels.iter().enumerate() {
        if let Some(g) = seen.insert(*l, f) {
            return Err(Error::Labelling(format!(
                "faces {g} and {f} share the label {l}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn vertex(id: &str, color: Color, x: i64, y: i64) -> Vertex {
        Vertex {
            id: id.into(),
            color,
            pos: Point::from_ints(x, y),
        }
    }

    /// One white vertex joined to boundary 1, 2, 3 placed clockwise.
    pub fn tripod(color: Color) -> PlabicGraph {
        let vertices = vec![
            vertex("1", Color::Boundary, 0, 4),
            vertex("2", Color::Boundary, 4, -3),
            vertex("3", Color::Boundary, -4, -3),
            vertex("c", color, 0, 0),
        ];
        PlabicGraph::new(3, vertices, vec![(0, 3), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn tripod_faces_and_trips() {
        let g = tripod(Color::White);
        assert_eq!(g.faces().len(), 3);
        assert_eq!(g.trip(1).unwrap().end, 2);
        assert_eq!(g.trip_permutation().unwrap(), vec![2, 3, 1]);
        let mut labels = g.face_labelling().unwrap();
        labels.sort();
        assert_eq!(
            labels,
            vec![
                Subset::parse("1").unwrap(),
                Subset::parse("2").unwrap(),
                Subset::parse("3").unwrap()
            ]
        );
    }

    #[test]
    fn black_tripod_turns_the_other_way() {
        let g = tripod(Color::Black);
        assert_eq!(g.trip_permutation().unwrap(), vec![3, 1, 2]);
        assert!(g.face_labelling().unwrap().iter().all(|l| l.len() == 2));
    }

    #[test]
    fn orbits_partition_darts() {
        let g = tripod(Color::White);
        let total: usize = g.faces().iter().map(|f| f.darts.len()).sum();
        // 3 edges and 3 arcs, both directions, minus the 3 outside darts
        assert_eq!(total, 2 * 6 - 3);
    }

    #[test]
    fn backtracking_walk_rejected() {
        let g = tripod(Color::White);
        let d = g.rotation[g.boundary_vertex(1)][0];
        assert!(matches!(g.left_region(&[d, d ^ 1]), Err(Error::Path(_))));
        assert!(matches!(g.left_region(&[]), Err(Error::Path(_))));
    }

    #[test]
    fn counterclockwise_boundary_rejected() {
        let vertices = vec![
            vertex("1", Color::Boundary, 0, 4),
            vertex("2", Color::Boundary, -4, -3),
            vertex("3", Color::Boundary, 4, -3),
            vertex("c", Color::White, 0, 0),
        ];
        let err = PlabicGraph::new(3, vertices, vec![(0, 3), (1, 3), (2, 3)]).unwrap_err();
        assert!(matches!(err, Error::Embedding(_)));
    }

    #[test]
    fn repeated_direction_rejected() {
        let vertices = vec![
            vertex("1", Color::Boundary, 0, 4),
            vertex("2", Color::Boundary, 4, -3),
            vertex("3", Color::Boundary, -4, -3),
            vertex("c", Color::White, 0, 0),
            vertex("d", Color::Black, 0, 2),
        ];
        // c-d and c-1 point the same way
        let err = PlabicGraph::new(3, vertices, vec![(0, 4), (3, 4), (1, 3), (2, 3), (0, 3)]);
        assert!(err.is_err());
    }

    #[test]
    fn boundary_degree_enforced() {
        let vertices = vec![
            vertex("1", Color::Boundary, 0, 4),
            vertex("2", Color::Boundary, 4, -3),
            vertex("3", Color::Boundary, -4, -3),
            vertex("c", Color::White, 0, 0),
        ];
        let err = PlabicGraph::new(3, vertices, vec![(0, 3), (1, 3)]).unwrap_err();
        assert!(err.to_string().contains("boundary vertex 3"));
    }

    #[test]
    fn angle_order_is_counterclockwise() {
        let q = |x: i64, y: i64| {
            (
                Rational::from_integer(x.into()),
                Rational::from_integer(y.into()),
            )
        };
        let mut dirs = vec![q(0, -1), q(-1, 0), q(1, 1), q(1, 0), q(0, 1), q(1, -1)];
        dirs.sort_by(angle_cmp);
        assert_eq!(
            dirs,
            vec![q(1, 0), q(1, 1), q(0, 1), q(-1, 0), q(0, -1), q(1, -1)]
        );
    }
}
