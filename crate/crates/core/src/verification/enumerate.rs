use std::sync::Arc;

use super::VerifyError;
use crate::maps::DigitalFunction;
use crate::topology::DigitalImage;

/// Default cap on `|codomain|^|domain|` before pruning.
pub const DEFAULT_ENUMERATION_BOUND: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapFilter {
    All,
    Continuous,
    ContinuousSurjections,
    Shy,
}

impl MapFilter {
    fn continuous(self) -> bool {
        !matches!(self, MapFilter::All)
    }

    fn surjective(self) -> bool {
        matches!(self, MapFilter::ContinuousSurjections | MapFilter::Shy)
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationSpec {
    pub domain: Arc<DigitalImage>,
    pub codomain: Arc<DigitalImage>,
    pub filter: MapFilter,
    pub limit: Option<usize>,
    pub bound: u128,
}

impl EnumerationSpec {
    pub fn new(domain: Arc<DigitalImage>, codomain: Arc<DigitalImage>, filter: MapFilter) -> Self {
        EnumerationSpec {
            domain,
            codomain,
            filter,
            limit: None,
            bound: DEFAULT_ENUMERATION_BOUND,
        }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn with_bound(mut self, bound: u128) -> Self {
        self.bound = bound;
        self
    }
}

/// `codomain_len ^ domain_len`, saturating.
pub fn candidate_count(domain_len: usize, codomain_len: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..domain_len {
        total = total.saturating_mul(codomain_len as u128);
    }
    total
}

/// Streams the maps selected by `spec` in lexicographic order of their
/// value vectors (codomain indices in domain point order).
pub fn enumerate_maps(spec: &EnumerationSpec) -> Result<MapEnumerator, VerifyError> {
    let candidates = candidate_count(spec.domain.len(), spec.codomain.len());
    if spec.limit.is_none() && candidates > spec.bound {
        return Err(VerifyError::BoundExceeded {
            candidates,
            bound: spec.bound,
        });
    }
    let n = spec.domain.len();
    Ok(MapEnumerator {
        domain: spec.domain.clone(),
        codomain: spec.codomain.clone(),
        filter: spec.filter,
        remaining: spec.limit,
        values: vec![0; n],
        next_value: vec![0; n],
        hits: vec![0; spec.codomain.len()],
        covered: 0,
        depth: 0,
        done: false,
    })
}

/// Depth-first search over partial assignments. A branch is cut as soon
/// as the newest point breaks continuity with an earlier neighbour, or
/// too few points remain to cover the codomain.
pub struct MapEnumerator {
    domain: Arc<DigitalImage>,
    codomain: Arc<DigitalImage>,
    filter: MapFilter,
    remaining: Option<usize>,
    values: Vec<usize>,
    next_value: Vec<usize>,
    hits: Vec<usize>,
    covered: usize,
    depth: usize,
    done: bool,
}

impl MapEnumerator {
    fn assign(&mut self, i: usize, v: usize) {
        self.values[i] = v;
        self.hits[v] += 1;
        if self.hits[v] == 1 {
            self.covered += 1;
        }
    }

    fn unassign(&mut self, i: usize) {
        let v = self.values[i];
        self.hits[v] -= 1;
        if self.hits[v] == 0 {
            self.covered -= 1;
        }
    }

    fn consistent(&self, i: usize) -> bool {
        if self.filter.continuous() {
            let v = self.values[i];
            let ok = self.domain.neighbor_indices(i).iter().take_while(|&&k| k < i).all(|&k| {
                let w = self.values[k];
                w == v || self.codomain.adjacent_indices(v, w)
            });
            if !ok {
                return false;
            }
        }
        if self.filter.surjective() {
            let unassigned = self.values.len() - i - 1;
            if self.covered + unassigned < self.codomain.len() {
                return false;
            }
        }
        true
    }

    fn next_values(&mut self) -> Option<Vec<usize>> {
        let n = self.values.len();
        let m = self.codomain.len();
        loop {
            if self.done {
                return None;
            }
            if self.depth == n {
                let out = self.values.clone();
                if n == 0 {
                    self.done = true;
                } else {
                    self.depth -= 1;
                    self.unassign(self.depth);
                }
                if !self.filter.surjective() || self.covered_by(&out) {
                    return Some(out);
                }
                continue;
            }
            let i = self.depth;
            let v = self.next_value[i];
            if v >= m {
                self.next_value[i] = 0;
                if i == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.unassign(self.depth);
                continue;
            }
            self.next_value[i] = v + 1;
            self.assign(i, v);
            if self.consistent(i) {
                self.depth += 1;
            } else {
                self.unassign(i);
            }
        }
    }

    fn covered_by(&self, values: &[usize]) -> bool {
        let mut hit = vec![false; self.codomain.len()];
        values.iter().for_each(|&v| hit[v] = true);
        hit.into_iter().all(|h| h)
    }
}

impl Iterator for MapEnumerator {
    type Item = DigitalFunction;

    fn next(&mut self) -> Option<DigitalFunction> {
        if self.remaining == Some(0) {
            return None;
        }
        loop {
            let values = self.next_values()?;
            let f = DigitalFunction::from_indices_unchecked(self.domain.clone(), self.codomain.clone(), values);
            if self.filter == MapFilter::Shy && !f.is_shy() {
                continue;
            }
            if let Some(r) = self.remaining.as_mut() {
                *r -= 1;
            }
            return Some(f);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::interval;

    fn arc(img: DigitalImage) -> Arc<DigitalImage> {
        Arc::new(img)
    }

    fn values(spec: &EnumerationSpec) -> Vec<Vec<usize>> {
        enumerate_maps(spec).unwrap().map(|f| f.values().to_vec()).collect()
    }

    #[test]
    fn all_maps_in_lexicographic_order() {
        let i1 = arc(interval(0, 1).unwrap());
        let spec = EnumerationSpec::new(i1.clone(), i1, MapFilter::All);
        assert_eq!(values(&spec), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn continuous_surjections_match_filtering() {
        let (i2, i1) = (arc(interval(0, 2).unwrap()), arc(interval(0, 1).unwrap()));
        let spec = EnumerationSpec::new(i2.clone(), i1.clone(), MapFilter::ContinuousSurjections);
        let brute: Vec<Vec<usize>> = enumerate_maps(&EnumerationSpec::new(i2, i1, MapFilter::All))
            .unwrap()
            .filter(|f| f.is_continuous() && f.is_surjective())
            .map(|f| f.values().to_vec())
            .collect();
        // Every map [0,2] -> [0,1] is continuous; the two constants are not onto.
        assert_eq!(brute.len(), 6);
        assert_eq!(values(&spec), brute);
    }

    #[test]
    fn shy_is_subset_of_continuous_surjections() {
        let (i3, i1) = (arc(interval(0, 3).unwrap()), arc(interval(0, 1).unwrap()));
        let shy = values(&EnumerationSpec::new(i3.clone(), i1.clone(), MapFilter::Shy));
        let cs = values(&EnumerationSpec::new(i3, i1, MapFilter::ContinuousSurjections));
        assert!(shy.iter().all(|v| cs.contains(v)));
        assert_eq!(shy, vec![vec![0, 0, 0, 1], vec![0, 0, 1, 1], vec![0, 1, 1, 1], vec![1, 0, 0, 0], vec![1, 1, 0, 0], vec![1, 1, 1, 0]]);
    }

    #[test]
    fn bound_and_limit() {
        let (i9, i9b) = (arc(interval(0, 9).unwrap()), arc(interval(0, 9).unwrap()));
        let spec = EnumerationSpec::new(i9, i9b, MapFilter::All);
        assert!(matches!(enumerate_maps(&spec), Err(VerifyError::BoundExceeded { .. })));
        assert_eq!(enumerate_maps(&spec.clone().with_limit(5)).unwrap().count(), 5);
        assert!(enumerate_maps(&spec.with_bound(u128::MAX)).is_ok());
    }

    #[test]
    fn degenerate_images() {
        let empty = arc(DigitalImage::new(1, crate::topology::Adjacency::Cu(1), []).unwrap());
        let i1 = arc(interval(0, 1).unwrap());
        assert_eq!(values(&EnumerationSpec::new(empty.clone(), i1.clone(), MapFilter::All)), vec![Vec::<usize>::new()]);
        assert_eq!(values(&EnumerationSpec::new(i1.clone(), empty.clone(), MapFilter::All)).len(), 0);
        assert_eq!(values(&EnumerationSpec::new(empty, i1, MapFilter::ContinuousSurjections)).len(), 0);
    }

    #[test]
    fn candidate_count_saturates() {
        assert_eq!(candidate_count(3, 2), 8);
        assert_eq!(candidate_count(0, 0), 1);
        assert_eq!(candidate_count(200, 10), u128::MAX);
    }
}
