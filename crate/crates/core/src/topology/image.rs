use std::collections::{HashMap, VecDeque};

use super::{Adjacency, ImageError, Point, PointSet};

/// A finite set of lattice points together with an adjacency relation.
///
/// Points are kept in canonical (lexicographic) order; a point's position
/// in [`DigitalImage::points`] is its index everywhere in this crate.
/// Neighbour lists are computed once at construction.
#[derive(Clone, Debug)]
pub struct DigitalImage {
    dim: usize,
    adjacency: Adjacency,
    points: Vec<Point>,
    index: HashMap<Point, usize>,
    neighbors: Vec<Vec<usize>>,
}

impl PartialEq for DigitalImage {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.adjacency == other.adjacency && self.points == other.points
    }
}

impl Eq for DigitalImage {}

impl DigitalImage {
    pub fn new<I>(dim: usize, adjacency: Adjacency, points: I) -> Result<Self, ImageError>
    where
        I: IntoIterator<Item = Point>,
    {
        if dim == 0 {
            return Err(ImageError::ZeroDimension);
        }
        adjacency.validate(dim)?;
        let mut points: Vec<Point> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(ImageError::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        points.sort();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(ImageError::DuplicatePoint(w[0].clone()));
        }
        let index: HashMap<Point, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        if let Adjacency::Explicit(edges) = &adjacency {
            if let Some(p) = edges.endpoints().find(|p| !index.contains_key(*p)) {
                return Err(ImageError::EdgeOutsideImage(p.clone()));
            }
        }
        let neighbors = points
            .iter()
            .map(|p| {
                let mut ns: Vec<usize> = adjacency
                    .lattice_neighbors(p)
                    .iter()
                    .filter_map(|q| index.get(q).copied())
                    .collect();
                ns.sort_unstable();
                ns.dedup();
                ns
            })
            .collect();
        Ok(DigitalImage {
            dim,
            adjacency,
            points,
            index,
            neighbors,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn adjacency(&self) -> &Adjacency {
        &self.adjacency
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub(crate) fn require_index(&self, p: &Point) -> Result<usize, ImageError> {
        self.index_of(p).ok_or_else(|| ImageError::NotInImage(p.clone()))
    }

    pub fn neighbor_indices(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn adjacent_indices(&self, i: usize, j: usize) -> bool {
        self.neighbors[i].binary_search(&j).is_ok()
    }

    /// Number of adjacent pairs.
    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, x: &Point) -> Result<PointSet, ImageError> {
        let i = self.require_index(x)?;
        Ok(self.neighbors[i].iter().map(|&j| self.points[j].clone()).collect())
    }

    /// Maximal connected subsets, ordered by their smallest point.
    pub fn connected_components(&self) -> Vec<PointSet> {
        let all = vec![true; self.len()];
        self.components_among(&all)
            .into_iter()
            .map(|block| self.to_point_set(&block))
            .collect()
    }

    /// The empty image counts as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_among(&vec![true; self.len()])
    }

    pub fn is_connected_subset(&self, set: &PointSet) -> Result<bool, ImageError> {
        let mask = self.membership(set)?;
        Ok(self.is_connected_among(&mask))
    }

    /// Whether some `a` in `a_set` and `b` in `b_set` are equal or adjacent.
    pub fn sets_adjacent(&self, a_set: &PointSet, b_set: &PointSet) -> Result<bool, ImageError> {
        let a = self.indices_of(a_set)?;
        let b_mask = self.membership(b_set)?;
        Ok(a.iter()
            .any(|&i| b_mask[i] || self.neighbors[i].iter().any(|&j| b_mask[j])))
    }

    /// Every nonempty connected subset with at most `max_size` points,
    /// each exactly once.
    pub fn connected_subsets(&self, max_size: usize) -> impl Iterator<Item = PointSet> + '_ {
        self.connected_subset_indices(max_size)
            .map(move |s| self.to_point_set(&s))
    }

    pub fn connected_subset_indices(&self, max_size: usize) -> ConnectedSubsets<'_> {
        ConnectedSubsets {
            image: self,
            max_size,
            next_root: 0,
            stack: Vec::new(),
        }
    }

    /// The sub-image on `subset`. Explicit edges leaving the subset are dropped.
    pub fn restrict(&self, subset: &PointSet) -> Result<DigitalImage, ImageError> {
        self.indices_of(subset)?;
        let adjacency = match &self.adjacency {
            Adjacency::Explicit(edges) => Adjacency::Explicit(edges.retain(|p| subset.contains(p))),
            other => other.clone(),
        };
        DigitalImage::new(self.dim, adjacency, subset.iter().cloned())
    }

    pub fn is_connected_among(&self, members: &[bool]) -> bool {
        let Some(start) = members.iter().position(|&m| m) else {
            return true;
        };
        let total = members.iter().filter(|&&m| m).count();
        self.reach_count(start, members) == total
    }

    /// Components of the sub-image induced by `members`, each sorted, in
    /// order of smallest index.
    pub fn components_among(&self, members: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut blocks = Vec::new();
        for start in 0..self.len() {
            if !members[start] || seen[start] {
                continue;
            }
            let mut block = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for &j in &self.neighbors[i] {
                    if members[j] && !seen[j] {
                        seen[j] = true;
                        block.push(j);
                        queue.push_back(j);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    /// Connectivity of the subset whose indices are the set bits of `mask`.
    /// Only meaningful for images with at most 64 points.
    pub fn is_connected_mask(&self, mask: u64) -> bool {
        debug_assert!(self.len() <= 64);
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut reached = 1u64 << start;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &j in &self.neighbors[i] {
                let bit = 1u64 << j;
                if mask & bit != 0 && reached & bit == 0 {
                    reached |= bit;
                    stack.push(j);
                }
            }
        }
        reached == mask
    }

    fn reach_count(&self, start: usize, members: &[bool]) -> usize {
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for &j in &self.neighbors[i] {
                if members[j] && !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count
    }

    pub(crate) fn indices_of(&self, set: &PointSet) -> Result<Vec<usize>, ImageError> {
        set.iter().map(|p| self.require_index(p)).collect()
    }

    pub(crate) fn membership(&self, set: &PointSet) -> Result<Vec<bool>, ImageError> {
        let mut mask = vec![false; self.len()];
        for i in self.indices_of(set)? {
            mask[i] = true;
        }
        Ok(mask)
    }

    pub fn to_point_set(&self, indices: &[usize]) -> PointSet {
        indices.iter().map(|&i| self.points[i].clone()).collect()
    }
}

/// Depth-first enumeration of connected subsets rooted at their smallest
/// index. A branch that adds candidate `w` excludes the candidates tried
/// before it, so every subset is produced once.
pub struct ConnectedSubsets<'a> {
    image: &'a DigitalImage,
    max_size: usize,
    next_root: usize,
    stack: Vec<Frame>,
}

struct Frame {
    members: Vec<usize>,
    candidates: Vec<usize>,
    seen: Vec<bool>,
    next: usize,
}

impl Iterator for ConnectedSubsets<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.max_size == 0 {
            return None;
        }
        let n = self.image.len();
        loop {
            let Some(frame) = self.stack.last_mut() else {
                if self.next_root >= n {
                    return None;
                }
                let root = self.next_root;
                self.next_root += 1;
                let mut seen = vec![false; n];
                seen[..=root].iter_mut().for_each(|s| *s = true);
                let mut candidates = Vec::new();
                for &j in self.image.neighbor_indices(root) {
                    if !seen[j] {
                        seen[j] = true;
                        candidates.push(j);
                    }
                }
                self.stack.push(Frame {
                    members: vec![root],
                    candidates,
                    seen,
                    next: 0,
                });
                return Some(vec![root]);
            };
            if frame.members.len() >= self.max_size || frame.next >= frame.candidates.len() {
                self.stack.pop();
                continue;
            }
            let i = frame.next;
            frame.next += 1;
            let w = frame.candidates[i];
            let mut seen = frame.seen.clone();
            let mut candidates = frame.candidates[i + 1..].to_vec();
            for &j in self.image.neighbor_indices(w) {
                if !seen[j] {
                    seen[j] = true;
                    candidates.push(j);
                }
            }
            let mut members = frame.members.clone();
            members.push(w);
            let mut out = members.clone();
            out.sort_unstable();
            self.stack.push(Frame {
                members,
                candidates,
                seen,
                next: 0,
            });
            return Some(out);
        }
    }
}
