//! The face `F_∅`, minimal-term valuations of flow polynomials, and the
//! Newton-Okounkov point sets at level 1 and (as Minkowski sums) level `r`.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::flows::{dominated, ExponentVector, FlowModel, FlowPolynomial, SparsePoly};
use crate::polyhedra::{minkowski_power, LatticePointSet};
use crate::rec::Network;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationPoint {
    /// Coordinates over the reduced basis `V°`.
    pub coords: Vec<i64>,
    pub j: Option<Subset>,
    /// Set when no term is coordinatewise minimal and the variable order decided.
    pub order_dependent: bool,
}

/// Flow polynomials of a network together with the reduced basis that omits `F_∅`.
#[derive(Clone, Debug)]
pub struct ValuationContext {
    n: usize,
    rank: usize,
    labels: Vec<Subset>,
    empty_face: usize,
    reduced: Vec<usize>,
    order: Vec<usize>,
    polys: Vec<FlowPolynomial>,
}

impl ValuationContext {
    /// Computes every `P_J` and locates `F_∅`.
    pub fn new(net: &Network) -> Result<Self> {
        let model = FlowModel::new(net)?;
        let polys = model.all_polynomials()?;
        Self::from_parts(net.n(), net.sources().len(), net.basis().to_vec(), polys)
    }

    /// `labels` is the full coordinate basis of the exponent vectors.
    pub fn from_parts(
        n: usize,
        rank: usize,
        labels: Vec<Subset>,
        polys: Vec<FlowPolynomial>,
    ) -> Result<Self> {
        let used: Vec<bool> = (0..labels.len())
            .map(|c| polys.iter().any(|p| p.terms.keys().any(|e| e[c] > 0)))
            .collect();
        let unused: Vec<usize> = (0..labels.len()).filter(|&c| !used[c]).collect();
        let empty_face = match unused.as_slice() {
            [c] => *c,
            [] => {
                return Err(Error::Structural(
                    "every face variable occurs in some P_J; no F_∅".into(),
                ))
            }
            many => {
                let names: Vec<String> = many.iter().map(|&c| labels[c].to_string()).collect();
                return Err(Error::Structural(format!(
                    "several faces occur in no P_J: {}",
                    names.join(", ")
                )));
            }
        };
        let reduced: Vec<usize> = (0..labels.len()).filter(|&c| c != empty_face).collect();
        let order = (0..reduced.len()).collect();
        Ok(ValuationContext {
            n,
            rank,
            labels,
            empty_face,
            reduced,
            order,
            polys,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn empty_face_label(&self) -> Subset {
        self.labels[self.empty_face]
    }

    /// Labels of `V°`, sorted.
    pub fn reduced_basis(&self) -> Vec<Subset> {
        self.reduced.iter().map(|&c| self.labels[c]).collect()
    }

    pub fn reduced_names(&self) -> Vec<String> {
        self.reduced_basis().iter().map(Subset::to_string).collect()
    }

    pub fn polynomials(&self) -> &[FlowPolynomial] {
        &self.polys
    }

    pub fn polynomial(&self, j: Subset) -> Option<&FlowPolynomial> {
        self.polys.iter().find(|p| p.j == j)
    }

    /// Priority of `V°` coordinates for lexicographic tie-breaking.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn with_order(mut self, order: Vec<usize>) -> Result<Self> {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..self.reduced.len()).collect::<Vec<_>>() {
            return Err(Error::Parameter(
                "variable order must permute the reduced basis".into(),
            ));
        }
        self.order = order;
        Ok(self)
    }

    pub fn with_reversed_order(self) -> Self {
        let order = (0..self.reduced.len()).rev().collect();
        self.with_order(order).expect("reversal is a permutation")
    }

    /// Restrict a full exponent vector to `V°`.
    pub fn project(&self, exp: &[u32]) -> Vec<i64> {
        self.reduced.iter().map(|&c| i64::from(exp[c])).collect()
    }

    fn lex_cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        self.order
            .iter()
            .map(|&c| a[c].cmp(&b[c]))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    fn value_of<'a>(
        &self,
        exps: impl Iterator<Item = &'a ExponentVector>,
        j: Option<Subset>,
    ) -> Result<ValuationPoint> {
        let projected: Vec<Vec<i64>> = exps.map(|e| self.project(e)).collect();
        if projected.is_empty() {
            return Err(Error::Parameter("valuation of the zero polynomial".into()));
        }
        let le = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
        if let Some(min) = projected
            .iter()
            .find(|a| projected.iter().all(|b| le(a, b)))
        {
            return Ok(ValuationPoint {
                coords: min.clone(),
                j,
                order_dependent: false,
            });
        }
        let min = projected
            .iter()
            .min_by(|a, b| self.lex_cmp(a, b))
            .expect("nonempty");
        Ok(ValuationPoint {
            coords: min.clone(),
            j,
            order_dependent: true,
        })
    }

    /// Minimal-term valuation.
    pub fn valuation(&self, p: &FlowPolynomial) -> Result<ValuationPoint> {
        self.value_of(p.terms.keys(), Some(p.j))
    }

    pub fn valuation_of(&self, p: &SparsePoly) -> Result<ValuationPoint> {
        self.value_of(p.terms.keys(), None)
    }

    /// `true` when `P_J` has a coordinatewise-minimal term.
    pub fn strongly_minimal(&self, p: &FlowPolynomial) -> bool {
        p.terms
            .keys()
            .any(|a| p.terms.keys().all(|b| dominated(a, b)))
    }

    /// `ν(P_J)` for every `J`, in colex order.
    pub fn level1_points(&self) -> Result<Vec<ValuationPoint>> {
        self.polys.iter().map(|p| self.valuation(p)).collect()
    }
}

/// `{ν(P_J)}` with provenance `J`; fails if two `J` share a value.
pub fn no_level1(ctx: &ValuationContext) -> Result<LatticePointSet> {
    let pts = ctx.level1_points()?;
    let mut seen: HashMap<&Vec<i64>, Subset> = HashMap::new();
    for p in &pts {
        let j = p.j.expect("flow polynomials carry J");
        if let Some(prev) = seen.insert(&p.coords, j) {
            return Err(Error::Structural(format!(
                "P_{prev} and P_{j} have the same valuation {:?}",
                p.coords
            )));
        }
    }
    LatticePointSet::new(
        ctx.reduced_names(),
        pts.iter().map(|p| p.coords.clone()).collect(),
        Some(pts.iter().map(|p| p.j.unwrap().to_string()).collect()),
    )
}

/// `r`-fold Minkowski sum of the level-1 points.
pub fn no_level_r(ctx: &ValuationContext, r: usize) -> Result<LatticePointSet> {
    let level1 = no_level1(ctx)?;
    if r == 1 {
        return Ok(level1);
    }
    minkowski_power(&level1, r)
}
