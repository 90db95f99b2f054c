use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use super::{MapError, MultiFunction};
use crate::topology::{DigitalImage, Point, PointSet};

/// A total function from the points of one image to the points of another.
///
/// Values are stored by index: `values[i]` is the codomain index of the
/// image of domain point `i`.
#[derive(Clone, Debug)]
pub struct DigitalFunction {
    domain: Arc<DigitalImage>,
    codomain: Arc<DigitalImage>,
    values: Vec<usize>,
}

impl PartialEq for DigitalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && same_image(&self.domain, &other.domain) && same_image(&self.codomain, &other.codomain)
    }
}

impl Eq for DigitalFunction {}

pub(crate) fn same_image(a: &Arc<DigitalImage>, b: &Arc<DigitalImage>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Why a map fails to be shy. The first failure in canonical order wins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotShy {
    Discontinuous { x: Point, x_prime: Point },
    NotSurjective { missed: Point },
    /// The preimage of `target` (a point or an adjacent pair) is disconnected.
    DisconnectedPreimage { target: PointSet },
}

impl NotShy {
    pub fn reason(&self) -> &'static str {
        match self {
            NotShy::Discontinuous { .. } => "not-continuous",
            NotShy::NotSurjective { .. } => "not-surjective",
            NotShy::DisconnectedPreimage { .. } => "disconnected-preimage",
        }
    }

    pub fn witness(&self) -> Vec<Point> {
        match self {
            NotShy::Discontinuous { x, x_prime } => vec![x.clone(), x_prime.clone()],
            NotShy::NotSurjective { missed } => vec![missed.clone()],
            NotShy::DisconnectedPreimage { target } => target.iter().cloned().collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MapClassification {
    pub continuous: bool,
    pub surjective: bool,
    pub injective: bool,
    pub shy: bool,
    pub isomorphism: bool,
}

impl DigitalFunction {
    /// Builds a map from explicit `(x, f(x))` pairs.
    pub fn from_pairs<I>(domain: Arc<DigitalImage>, codomain: Arc<DigitalImage>, pairs: I) -> Result<Self, MapError>
    where
        I: IntoIterator<Item = (Point, Point)>,
    {
        let mut values: Vec<Option<usize>> = vec![None; domain.len()];
        for (x, y) in pairs {
            let i = domain.index_of(&x).ok_or_else(|| MapError::UnknownDomainPoint(x.clone()))?;
            let j = codomain.index_of(&y).ok_or(MapError::ValueOutsideCodomain(y))?;
            if values[i].replace(j).is_some() {
                return Err(MapError::DuplicateAssignment(x));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| MapError::MissingAssignment(domain.point(i).clone())))
            .collect::<Result<_, _>>()?;
        Ok(DigitalFunction {
            domain,
            codomain,
            values,
        })
    }

    pub fn from_fn<F>(domain: Arc<DigitalImage>, codomain: Arc<DigitalImage>, mut f: F) -> Result<Self, MapError>
    where
        F: FnMut(&Point) -> Point,
    {
        let values = domain
            .points()
            .iter()
            .map(|x| {
                let y = f(x);
                codomain.index_of(&y).ok_or(MapError::ValueOutsideCodomain(y))
            })
            .collect::<Result<_, _>>()?;
        Ok(DigitalFunction {
            domain,
            codomain,
            values,
        })
    }

    pub fn from_indices(domain: Arc<DigitalImage>, codomain: Arc<DigitalImage>, values: Vec<usize>) -> Result<Self, MapError> {
        if values.len() != domain.len() {
            return Err(MapError::WrongLength {
                expected: domain.len(),
                found: values.len(),
            });
        }
        if let Some(&bad) = values.iter().find(|&&v| v >= codomain.len()) {
            return Err(MapError::IndexOutOfRange(bad));
        }
        Ok(DigitalFunction {
            domain,
            codomain,
            values,
        })
    }

    pub(crate) fn from_indices_unchecked(domain: Arc<DigitalImage>, codomain: Arc<DigitalImage>, values: Vec<usize>) -> Self {
        debug_assert_eq!(values.len(), domain.len());
        DigitalFunction {
            domain,
            codomain,
            values,
        }
    }

    pub fn identity(image: Arc<DigitalImage>) -> Self {
        let values = (0..image.len()).collect();
        DigitalFunction {
            domain: image.clone(),
            codomain: image,
            values,
        }
    }

    pub fn constant(domain: Arc<DigitalImage>, codomain: Arc<DigitalImage>, value: &Point) -> Result<Self, MapError> {
        let j = codomain
            .index_of(value)
            .ok_or_else(|| MapError::ValueOutsideCodomain(value.clone()))?;
        let values = vec![j; domain.len()];
        Ok(DigitalFunction {
            domain,
            codomain,
            values,
        })
    }

    pub fn domain(&self) -> &Arc<DigitalImage> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<DigitalImage> {
        &self.codomain
    }

    /// Codomain indices, in domain point order.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: &Point) -> Option<&Point> {
        self.domain
            .index_of(x)
            .map(|i| self.codomain.point(self.values[i]))
    }

    pub fn value_at(&self, i: usize) -> &Point {
        self.codomain.point(self.values[i])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        self.domain
            .points()
            .iter()
            .zip(&self.values)
            .map(|(x, &j)| (x, self.codomain.point(j)))
    }

    /// The first adjacent pair `x < x'` whose values are neither equal nor adjacent.
    pub fn continuity_violation(&self) -> Option<(Point, Point)> {
        for i in 0..self.domain.len() {
            for &k in self.domain.neighbor_indices(i) {
                if k <= i {
                    continue;
                }
                let (a, b) = (self.values[i], self.values[k]);
                if a != b && !self.codomain.adjacent_indices(a, b) {
                    return Some((self.domain.point(i).clone(), self.domain.point(k).clone()));
                }
            }
        }
        None
    }

    pub fn is_continuous(&self) -> bool {
        self.continuity_violation().is_none()
    }

    /// The first codomain point with empty preimage.
    pub fn missed_point(&self) -> Option<Point> {
        let mut hit = vec![false; self.codomain.len()];
        for &v in &self.values {
            hit[v] = true;
        }
        hit.iter()
            .position(|h| !h)
            .map(|j| self.codomain.point(j).clone())
    }

    pub fn is_surjective(&self) -> bool {
        self.missed_point().is_none()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.values.len());
        self.values.iter().all(|v| seen.insert(*v))
    }

    pub fn is_bijective(&self) -> bool {
        self.values.len() == self.codomain.len() && self.is_injective()
    }

    /// A continuous bijection whose inverse is continuous.
    pub fn is_isomorphism(&self) -> bool {
        if !self.is_bijective() || !self.is_continuous() {
            return false;
        }
        let mut inverse = vec![0; self.codomain.len()];
        for (i, &j) in self.values.iter().enumerate() {
            inverse[j] = i;
        }
        (0..self.codomain.len()).all(|j| {
            self.codomain
                .neighbor_indices(j)
                .iter()
                .all(|&k| self.domain.adjacent_indices(inverse[j], inverse[k]))
        })
    }

    /// Membership vector of the preimage of the codomain indices in `targets`.
    pub fn preimage_members(&self, targets: &[usize]) -> Vec<bool> {
        self.values.iter().map(|v| targets.contains(v)).collect()
    }

    pub fn preimage(&self, targets: &PointSet) -> Result<PointSet, MapError> {
        let mask = self.codomain.membership(targets)?;
        Ok(self
            .values
            .iter()
            .enumerate()
            .filter(|(_, &v)| mask[v])
            .map(|(i, _)| self.domain.point(i).clone())
            .collect())
    }

    /// Checks shyness from point preimages and preimages of adjacent pairs.
    pub fn shyness(&self) -> Result<(), NotShy> {
        if let Some((x, x_prime)) = self.continuity_violation() {
            return Err(NotShy::Discontinuous { x, x_prime });
        }
        if let Some(missed) = self.missed_point() {
            return Err(NotShy::NotSurjective { missed });
        }
        let cod = &self.codomain;
        for y in 0..cod.len() {
            if !self.domain.is_connected_among(&self.preimage_members(&[y])) {
                return Err(NotShy::DisconnectedPreimage {
                    target: cod.to_point_set(&[y]),
                });
            }
        }
        for y0 in 0..cod.len() {
            for &y1 in cod.neighbor_indices(y0) {
                if y1 > y0 && !self.domain.is_connected_among(&self.preimage_members(&[y0, y1])) {
                    return Err(NotShy::DisconnectedPreimage {
                        target: cod.to_point_set(&[y0, y1]),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_shy(&self) -> bool {
        self.shyness().is_ok()
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &DigitalFunction) -> Result<DigitalFunction, MapError> {
        compose(self, inner)
    }

    /// `y ↦ f⁻¹(y)`; requires a surjection.
    pub fn inverse_multifunction(&self) -> Result<MultiFunction, MapError> {
        let mut fibers = vec![Vec::new(); self.codomain.len()];
        for (i, &j) in self.values.iter().enumerate() {
            fibers[j].push(i);
        }
        if let Some(j) = fibers.iter().position(Vec::is_empty) {
            return Err(MapError::NotSurjective(self.codomain.point(j).clone()));
        }
        Ok(MultiFunction::from_index_sets(self.codomain.clone(), self.domain.clone(), fibers))
    }

    pub fn classify(&self) -> MapClassification {
        let continuous = self.is_continuous();
        let surjective = self.is_surjective();
        let injective = self.is_injective();
        MapClassification {
            continuous,
            surjective,
            injective,
            shy: continuous && surjective && self.is_shy(),
            isomorphism: continuous && surjective && injective && self.is_isomorphism(),
        }
    }
}

/// Pointwise composition `g ∘ f`. The codomain of `f` must equal the
/// domain of `g` (same points, same adjacency).
pub fn compose(g: &DigitalFunction, f: &DigitalFunction) -> Result<DigitalFunction, MapError> {
    if !same_image(&f.codomain, &g.domain) {
        return Err(MapError::ImageMismatch);
    }
    let values = f.values.iter().map(|&j| g.values[j]).collect();
    Ok(DigitalFunction {
        domain: f.domain.clone(),
        codomain: g.codomain.clone(),
        values,
    })
}
