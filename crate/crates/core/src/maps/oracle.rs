//! Subset-quantified characterizations, checked by brute force.
//!
//! Each oracle walks every connected subset of one side of a map, so its
//! cost is exponential in the size of that side. The point count is
//! guarded by a limit ([`DEFAULT_ORACLE_LIMIT`] unless overridden).

use std::sync::Arc;

use super::{DigitalFunction, MapError, MultiFunction};
use crate::topology::{DigitalImage, PointSet};

pub const DEFAULT_ORACLE_LIMIT: usize = 15;

/// All connected subsets of an image, enumerated once and reused across
/// many oracle queries against the same image.
#[derive(Clone, Debug)]
pub struct ConnectedSubsetTable {
    image: Arc<DigitalImage>,
    subsets: Vec<Vec<usize>>,
}

impl ConnectedSubsetTable {
    pub fn new(image: Arc<DigitalImage>, limit: usize) -> Result<Self, MapError> {
        if image.len() > limit.min(64) {
            return Err(MapError::OracleLimit {
                points: image.len(),
                limit: limit.min(64),
            });
        }
        let subsets = image.connected_subset_indices(image.len()).collect();
        Ok(ConnectedSubsetTable { image, subsets })
    }

    pub fn image(&self) -> &Arc<DigitalImage> {
        &self.image
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    fn check_image(&self, other: &Arc<DigitalImage>) {
        assert!(
            Arc::ptr_eq(&self.image, other) || *self.image == **other,
            "subset table built for a different image"
        );
    }
}

fn connected_indices(image: &DigitalImage, indices: impl Iterator<Item = usize>) -> bool {
    if image.len() <= 64 {
        image.is_connected_mask(indices.fold(0u64, |m, i| m | (1 << i)))
    } else {
        let mut members = vec![false; image.len()];
        indices.for_each(|i| members[i] = true);
        image.is_connected_among(&members)
    }
}

/// First connected `A ⊆ domain` (in table order) whose image is disconnected.
pub fn continuity_counterexample(f: &DigitalFunction, domain_subsets: &ConnectedSubsetTable) -> Option<PointSet> {
    domain_subsets.check_image(f.domain());
    let values = f.values();
    domain_subsets
        .subsets()
        .iter()
        .find(|a| !connected_indices(f.codomain(), a.iter().map(|&i| values[i])))
        .map(|a| f.domain().to_point_set(a))
}

/// Continuity as "connected sets have connected images".
pub fn continuity_oracle(f: &DigitalFunction) -> Result<bool, MapError> {
    continuity_oracle_with_limit(f, DEFAULT_ORACLE_LIMIT)
}

pub fn continuity_oracle_with_limit(f: &DigitalFunction, limit: usize) -> Result<bool, MapError> {
    let table = ConnectedSubsetTable::new(f.domain().clone(), limit)?;
    Ok(continuity_counterexample(f, &table).is_none())
}

/// First connected `Y' ⊆ codomain` whose preimage is disconnected.
///
/// Requires a continuous surjection.
pub fn shyness_counterexample(f: &DigitalFunction, codomain_subsets: &ConnectedSubsetTable) -> Result<Option<PointSet>, MapError> {
    codomain_subsets.check_image(f.codomain());
    if let Some((x, y)) = f.continuity_violation() {
        return Err(MapError::NotContinuous(x, y));
    }
    if let Some(y) = f.missed_point() {
        return Err(MapError::NotSurjective(y));
    }
    let values = f.values();
    let mut wanted = vec![false; f.codomain().len()];
    for ys in codomain_subsets.subsets() {
        wanted.iter_mut().for_each(|w| *w = false);
        ys.iter().for_each(|&y| wanted[y] = true);
        let preimage = (0..values.len()).filter(|&i| wanted[values[i]]);
        if !connected_indices(f.domain(), preimage) {
            return Ok(Some(f.codomain().to_point_set(ys)));
        }
    }
    Ok(None)
}

/// Shyness as "every connected subset of the codomain has a connected preimage".
pub fn shyness_oracle(f: &DigitalFunction) -> Result<bool, MapError> {
    shyness_oracle_with_limit(f, DEFAULT_ORACLE_LIMIT)
}

pub fn shyness_oracle_with_limit(f: &DigitalFunction, limit: usize) -> Result<bool, MapError> {
    let table = ConnectedSubsetTable::new(f.codomain().clone(), limit)?;
    Ok(shyness_counterexample(f, &table)?.is_none())
}

/// First connected `A ⊆ source` whose image `⋃ m(a)` is disconnected.
pub fn connectivity_preservation_counterexample(m: &MultiFunction, source_subsets: &ConnectedSubsetTable) -> Option<PointSet> {
    source_subsets.check_image(m.source());
    let target = m.target();
    source_subsets
        .subsets()
        .iter()
        .find(|a| {
            let mut image: Vec<usize> = a.iter().flat_map(|&i| m.value_indices(i).iter().copied()).collect();
            image.sort_unstable();
            image.dedup();
            !connected_indices(target, image.into_iter())
        })
        .map(|a| m.source().to_point_set(a))
}

/// Connectivity preservation checked on every connected subset of the source.
pub fn connectivity_preserving_oracle(m: &MultiFunction) -> Result<bool, MapError> {
    let table = ConnectedSubsetTable::new(m.source().clone(), DEFAULT_ORACLE_LIMIT)?;
    Ok(connectivity_preservation_counterexample(m, &table).is_none())
}
