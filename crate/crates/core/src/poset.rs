//! Grid posets `P_{k,n}`, their antichains and maximal chains, the dilated order
//! and chain polytopes, and the dictionary between `k`-subsets and antichains.

use crate::error::{Error, Result};
use crate::polyhedra::{HRep, LatticePointSet, Rel};
use crate::subset::Subset;

/// Element `p_{i,j}`.
pub type Element = (usize, usize);

/// Elements `p_{i,j}`, `1 ≤ i ≤ k < j ≤ n`, with covers `p_{i+1,j} ≺ p_{i,j}`
/// and `p_{i,j+1} ≺ p_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPoset {
    k: usize,
    n: usize,
    elements: Vec<Element>,
}

impl GridPoset {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k < 1 || k + 1 > n {
            return Err(Error::Parameter(format!(
                "grid poset needs 1 <= k <= n-1, got k={k}, n={n}"
            )));
        }
        let elements = (1..=k)
            .flat_map(|i| (k + 1..=n).map(move |j| (i, j)))
            .collect();
        Ok(GridPoset { k, n, elements })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row-major: `p_{1,k+1}, p_{1,k+2}, …, p_{k,n}`.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index(&self, (i, j): Element) -> Option<usize> {
        (1..=self.k).contains(&i).then_some(())?;
        (self.k + 1..=self.n).contains(&j).then_some(())?;
        Some((i - 1) * (self.n - self.k) + (j - self.k - 1))
    }

    pub fn name((i, j): Element) -> String {
        format!("p{i}_{j}")
    }

    pub fn var_names(&self) -> Vec<String> {
        self.elements.iter().map(|&e| Self::name(e)).collect()
    }

    /// `p ≤ q`.
    pub fn le(&self, p: Element, q: Element) -> bool {
        p.0 >= q.0 && p.1 >= q.1
    }

    pub fn comparable(&self, p: Element, q: Element) -> bool {
        self.le(p, q) || self.le(q, p)
    }

    /// Pairs `(lower, upper)` of covering relations.
    pub fn covers(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::new();
        for &(i, j) in &self.elements {
            if i < self.k {
                out.push(((i + 1, j), (i, j)));
            }
            if j < self.n {
                out.push(((i, j + 1), (i, j)));
            }
        }
        out
    }

    pub fn minimum(&self) -> Element {
        (self.k, self.n)
    }

    pub fn maximum(&self) -> Element {
        (1, self.k + 1)
    }

    pub fn minimal_elements(&self) -> Vec<Element> {
        vec![self.minimum()]
    }

    pub fn maximal_elements(&self) -> Vec<Element> {
        vec![self.maximum()]
    }

    /// All antichains, the empty one first.
    pub fn antichains(&self) -> Vec<Vec<Element>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.grow_antichains(0, &mut current, &mut out);
        out
    }

    fn grow_antichains(
        &self,
        from: usize,
        current: &mut Vec<Element>,
        out: &mut Vec<Vec<Element>>,
    ) {
        out.push(current.clone());
        for t in from..self.elements.len() {
            let e = self.elements[t];
            if current.iter().all(|&c| !self.comparable(c, e)) {
                current.push(e);
                self.grow_antichains(t + 1, current, out);
                current.pop();
            }
        }
    }

    /// Maximal chains listed from the minimum upwards.
    pub fn maximal_chains(&self) -> Vec<Vec<Element>> {
        let mut out = Vec::new();
        let mut chain = vec![self.minimum()];
        self.grow_chains(&mut chain, &mut out);
        out
    }

    fn grow_chains(&self, chain: &mut Vec<Element>, out: &mut Vec<Vec<Element>>) {
        let (i, j) = *chain.last().expect("chain is nonempty");
        if (i, j) == self.maximum() {
            out.push(chain.clone());
            return;
        }
        for next in [(i.wrapping_sub(1), j), (i, j - 1)] {
            if next.0 >= 1 && next.1 > self.k {
                chain.push(next);
                self.grow_chains(chain, out);
                chain.pop();
            }
        }
    }

    pub fn indicator(&self, set: &[Element]) -> Vec<i64> {
        let mut x = vec![0; self.len()];
        for &e in set {
            x[self.index(e).expect("element of the poset")] = 1;
        }
        x
    }

    fn unit(&self, e: Element, c: i64) -> Vec<i64> {
        let mut x = vec![0; self.len()];
        x[self.index(e).expect("element of the poset")] = c;
        x
    }

    /// `O(P, r)`: order-preserving maps `P → [0, r]`, one inequality per cover.
    pub fn order_polytope_h(&self, r: i64) -> HRep {
        let mut h = HRep::new(self.var_names());
        for m in self.minimal_elements() {
            h.push(self.unit(m, 1), Rel::Ge, 0);
        }
        for (lo, hi) in self.covers() {
            let mut c = self.unit(lo, 1);
            c[self.index(hi).unwrap()] = -1;
            h.push(c, Rel::Le, 0);
        }
        for m in self.maximal_elements() {
            h.push(self.unit(m, 1), Rel::Le, r);
        }
        h
    }

    /// `C(P, r)`: nonnegative vectors with every maximal-chain sum at most `r`.
    pub fn chain_polytope_h(&self, r: i64) -> HRep {
        let mut h = HRep::new(self.var_names());
        for &e in &self.elements {
            h.push(self.unit(e, 1), Rel::Ge, 0);
        }
        for chain in self.maximal_chains() {
            h.push(self.indicator(&chain), Rel::Le, r);
        }
        h
    }

    /// Indicator vectors of all antichains, with the matching `J` as provenance.
    pub fn antichain_points(&self) -> Result<LatticePointSet> {
        let mut pts = Vec::new();
        let mut prov = Vec::new();
        for j in Subset::all_of_size(self.n, self.k) {
            let a = j_to_antichain(self.k, self.n, j)?;
            pts.push(self.indicator(&a));
            prov.push(j.to_string());
        }
        LatticePointSet::new(self.var_names(), pts, Some(prov))
    }
}

/// Pair `[k] \ J` (increasing) with `J \ [k]` (decreasing).
pub fn j_to_antichain(k: usize, n: usize, j: Subset) -> Result<Vec<Element>> {
    if j.len() != k || !j.is_subset(Subset::full(n)) {
        return Err(Error::Parameter(format!(
            "J = {j} is not a {k}-subset of 1..{n}"
        )));
    }
    let top = Subset::interval(k);
    let sources = top.difference(j).to_vec();
    let sinks: Vec<usize> = j.difference(top).iter().rev().collect();
    Ok(sources.into_iter().zip(sinks).collect())
}

pub fn antichain_to_j(k: usize, n: usize, antichain: &[Element]) -> Result<Subset> {
    let poset = GridPoset::new(k, n)?;
    let mut j = Subset::interval(k);
    for (t, &(a, b)) in antichain.iter().enumerate() {
        if poset.index((a, b)).is_none() {
            return Err(Error::Parameter(format!("p{a}_{b} is not in P({k},{n})")));
        }
        if antichain[..t].iter().any(|&e| poset.comparable(e, (a, b))) {
            return Err(Error::Parameter(
                "elements are comparable; not an antichain".into(),
            ));
        }
        j = j.difference(Subset::from_iter([a]));
        j.insert(b);
    }
    Ok(j)
}
