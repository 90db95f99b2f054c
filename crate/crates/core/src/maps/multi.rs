use std::sync::Arc;

use super::MapError;
use crate::topology::{DigitalImage, Point, PointSet};

/// A multivalued function: every source point maps to a nonempty set of
/// target points.
#[derive(Clone, Debug)]
pub struct MultiFunction {
    source: Arc<DigitalImage>,
    target: Arc<DigitalImage>,
    values: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotConnectivityPreserving {
    /// Adjacent source points whose value sets are not adjacent.
    NotWeaklyContinuous { x: Point, y: Point },
    DisconnectedValue { x: Point },
}

impl MultiFunction {
    pub fn new<I>(source: Arc<DigitalImage>, target: Arc<DigitalImage>, assignments: I) -> Result<Self, MapError>
    where
        I: IntoIterator<Item = (Point, PointSet)>,
    {
        let mut values: Vec<Option<Vec<usize>>> = vec![None; source.len()];
        for (x, ys) in assignments {
            let i = source.index_of(&x).ok_or_else(|| MapError::UnknownDomainPoint(x.clone()))?;
            if ys.is_empty() {
                return Err(MapError::EmptyValue(x));
            }
            let set = ys
                .into_iter()
                .map(|y| target.index_of(&y).ok_or(MapError::ValueOutsideCodomain(y)))
                .collect::<Result<Vec<_>, _>>()?;
            if values[i].replace(set).is_some() {
                return Err(MapError::DuplicateAssignment(x));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| MapError::MissingAssignment(source.point(i).clone())))
            .collect::<Result<_, _>>()?;
        Ok(MultiFunction { source, target, values })
    }

    pub(crate) fn from_index_sets(source: Arc<DigitalImage>, target: Arc<DigitalImage>, values: Vec<Vec<usize>>) -> Self {
        debug_assert!(values.iter().all(|v| !v.is_empty()));
        MultiFunction { source, target, values }
    }

    pub fn source(&self) -> &Arc<DigitalImage> {
        &self.source
    }

    pub fn target(&self) -> &Arc<DigitalImage> {
        &self.target
    }

    pub fn value_indices(&self, i: usize) -> &[usize] {
        &self.values[i]
    }

    pub fn value(&self, x: &Point) -> Option<PointSet> {
        self.source
            .index_of(x)
            .map(|i| self.target.to_point_set(&self.values[i]))
    }

    fn members(&self, i: usize) -> Vec<bool> {
        let mut mask = vec![false; self.target.len()];
        for &j in &self.values[i] {
            mask[j] = true;
        }
        mask
    }

    fn values_adjacent(&self, i: usize, k: usize) -> bool {
        let other = self.members(k);
        self.values[i]
            .iter()
            .any(|&a| other[a] || self.target.neighbor_indices(a).iter().any(|&b| other[b]))
    }

    /// First adjacent pair `x < y` in the source whose value sets are not adjacent.
    pub fn weak_continuity_violation(&self) -> Option<(Point, Point)> {
        for i in 0..self.source.len() {
            for &k in self.source.neighbor_indices(i) {
                if k > i && !self.values_adjacent(i, k) {
                    return Some((self.source.point(i).clone(), self.source.point(k).clone()));
                }
            }
        }
        None
    }

    pub fn has_weak_continuity(&self) -> bool {
        self.weak_continuity_violation().is_none()
    }

    /// Connectivity preservation as weak continuity plus connected values.
    pub fn connectivity_preservation(&self) -> Result<(), NotConnectivityPreserving> {
        if let Some((x, y)) = self.weak_continuity_violation() {
            return Err(NotConnectivityPreserving::NotWeaklyContinuous { x, y });
        }
        for i in 0..self.source.len() {
            if !self.target.is_connected_among(&self.members(i)) {
                return Err(NotConnectivityPreserving::DisconnectedValue {
                    x: self.source.point(i).clone(),
                });
            }
        }
        Ok(())
    }

    pub fn is_connectivity_preserving(&self) -> bool {
        self.connectivity_preservation().is_ok()
    }
}
