use std::collections::{BTreeMap, BTreeSet};

use super::{ImageError, Point};

/// A symmetric, irreflexive relation on lattice points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Adjacency {
    /// `c_u`: distinct points whose coordinates all differ by at most 1,
    /// with at most `u` coordinates differing.
    Cu(usize),
    /// An arbitrary graph on labelled points.
    Explicit(EdgeSet),
    /// The normal (strong) product of two adjacencies. A point of the
    /// product is the concatenation of a `left_dim` point and a
    /// `right_dim` point.
    NormalProduct {
        left: Box<Adjacency>,
        left_dim: usize,
        right: Box<Adjacency>,
        right_dim: usize,
    },
}

/// Undirected edges without self-loops, stored as a symmetric neighbour map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeSet {
    adj: BTreeMap<Point, BTreeSet<Point>>,
}

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I>(pairs: I) -> Result<Self, ImageError>
    where
        I: IntoIterator<Item = (Point, Point)>,
    {
        let mut edges = EdgeSet::new();
        for (a, b) in pairs {
            edges.insert(a, b)?;
        }
        Ok(edges)
    }

    pub fn insert(&mut self, a: Point, b: Point) -> Result<(), ImageError> {
        if a.dim() != b.dim() {
            return Err(ImageError::DimensionMismatch {
                expected: a.dim(),
                found: b.dim(),
            });
        }
        if a == b {
            return Err(ImageError::SelfLoop(a));
        }
        self.adj.entry(a.clone()).or_default().insert(b.clone());
        self.adj.entry(b).or_default().insert(a);
        Ok(())
    }

    pub fn contains(&self, a: &Point, b: &Point) -> bool {
        self.adj.get(a).is_some_and(|n| n.contains(b))
    }

    /// Each edge once, as `(a, b)` with `a < b`, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        self.adj
            .iter()
            .flat_map(|(a, ns)| ns.range(a..).filter(move |b| *b != a).map(move |b| (a, b)))
    }

    pub fn len(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors<'a>(&'a self, p: &Point) -> impl Iterator<Item = &'a Point> + 'a {
        self.adj.get(p).into_iter().flatten()
    }

    /// Points that occur in at least one edge.
    pub fn endpoints(&self) -> impl Iterator<Item = &Point> + '_ {
        self.adj.keys()
    }

    /// Keeps only edges with both endpoints satisfying `keep`.
    pub fn retain(&self, mut keep: impl FnMut(&Point) -> bool) -> EdgeSet {
        let mut out = EdgeSet::new();
        for (a, b) in self.edges() {
            if keep(a) && keep(b) {
                out.adj.entry(a.clone()).or_default().insert(b.clone());
                out.adj.entry(b.clone()).or_default().insert(a.clone());
            }
        }
        out
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = self.clone();
        for (a, ns) in &other.adj {
            out.adj.entry(a.clone()).or_default().extend(ns.iter().cloned());
        }
        out
    }
}

/// Tests `c_u`-adjacency of two points of `Z^n`.
pub fn cu_adjacent(x: &Point, y: &Point, u: usize) -> Result<bool, ImageError> {
    if x.dim() != y.dim() {
        return Err(ImageError::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    check_cu(u, x.dim())?;
    Ok(cu_relates(x, y, u))
}

fn check_cu(u: usize, dim: usize) -> Result<(), ImageError> {
    if u == 0 || u > dim {
        return Err(ImageError::CuOutOfRange { u, dim });
    }
    Ok(())
}

fn cu_relates(x: &Point, y: &Point, u: usize) -> bool {
    let mut differing = 0;
    for (a, b) in x.coords().iter().zip(y.coords()) {
        match (a - b).abs() {
            0 => {}
            1 => differing += 1,
            _ => return false,
        }
    }
    differing >= 1 && differing <= u
}

impl Adjacency {
    pub fn normal_product(left: Adjacency, left_dim: usize, right: Adjacency, right_dim: usize) -> Self {
        Adjacency::NormalProduct {
            left: Box::new(left),
            left_dim,
            right: Box::new(right),
            right_dim,
        }
    }

    /// Checks that this adjacency makes sense on `Z^dim`.
    pub fn validate(&self, dim: usize) -> Result<(), ImageError> {
        match self {
            Adjacency::Cu(u) => check_cu(*u, dim),
            Adjacency::Explicit(edges) => match edges.endpoints().find(|p| p.dim() != dim) {
                Some(p) => Err(ImageError::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                }),
                None => Ok(()),
            },
            Adjacency::NormalProduct {
                left,
                left_dim,
                right,
                right_dim,
            } => {
                if left_dim + right_dim != dim || *left_dim == 0 || *right_dim == 0 {
                    return Err(ImageError::ProductDimensions {
                        left_dim: *left_dim,
                        right_dim: *right_dim,
                        dim,
                    });
                }
                left.validate(*left_dim)?;
                right.validate(*right_dim)
            }
        }
    }

    /// Tests adjacency of two points, validating dimensions first.
    pub fn adjacent(&self, x: &Point, y: &Point) -> Result<bool, ImageError> {
        if x.dim() != y.dim() {
            return Err(ImageError::DimensionMismatch {
                expected: x.dim(),
                found: y.dim(),
            });
        }
        self.validate(x.dim())?;
        Ok(self.relates(x, y))
    }

    /// Adjacency test without dimension checks.
    pub(crate) fn relates(&self, x: &Point, y: &Point) -> bool {
        match self {
            Adjacency::Cu(u) => cu_relates(x, y, *u),
            Adjacency::Explicit(edges) => edges.contains(x, y),
            Adjacency::NormalProduct {
                left, left_dim, right, ..
            } => {
                let (xl, xr) = x.split(*left_dim);
                let (yl, yr) = y.split(*left_dim);
                let left_eq = xl == yl;
                let right_eq = xr == yr;
                (left_eq || left.relates(&xl, &yl))
                    && (right_eq || right.relates(&xr, &yr))
                    && !(left_eq && right_eq)
            }
        }
    }

    /// Every point of the ambient lattice adjacent to `x`. Finite for all
    /// supported kinds.
    pub(crate) fn lattice_neighbors(&self, x: &Point) -> Vec<Point> {
        match self {
            Adjacency::Cu(u) => {
                let mut out = Vec::new();
                let mut coords = x.coords().to_vec();
                cu_offsets(&mut coords, 0, *u, 0, &mut out);
                out
            }
            Adjacency::Explicit(edges) => edges.neighbors(x).cloned().collect(),
            Adjacency::NormalProduct {
                left, left_dim, right, ..
            } => {
                let (xl, xr) = x.split(*left_dim);
                let mut ls = left.lattice_neighbors(&xl);
                ls.push(xl);
                let mut rs = right.lattice_neighbors(&xr);
                rs.push(xr);
                let mut out = Vec::with_capacity(ls.len() * rs.len());
                for l in &ls {
                    for r in &rs {
                        let p = l.concat(r);
                        if &p != x {
                            out.push(p);
                        }
                    }
                }
                out
            }
        }
    }
}

fn cu_offsets(coords: &mut Vec<i64>, pos: usize, u: usize, changed: usize, out: &mut Vec<Point>) {
    if pos == coords.len() {
        if changed > 0 {
            out.push(Point::new(coords.clone()));
        }
        return;
    }
    cu_offsets(coords, pos + 1, u, changed, out);
    if changed < u {
        for delta in [-1, 1] {
            coords[pos] += delta;
            cu_offsets(coords, pos + 1, u, changed + 1, out);
            coords[pos] -= delta;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(c: [i64; N]) -> Point {
        Point::from(c)
    }

    #[test]
    fn cu_examples() {
        assert!(cu_adjacent(&p([0, 0]), &p([0, 1]), 1).unwrap());
        assert!(!cu_adjacent(&p([0, 0]), &p([1, 1]), 1).unwrap());
        assert!(cu_adjacent(&p([0, 0]), &p([1, 1]), 2).unwrap());
        assert!(!cu_adjacent(&p([0, 0]), &p([0, 0]), 1).unwrap());
        assert!(!cu_adjacent(&p([0, 0]), &p([0, 2]), 2).unwrap());
    }

    #[test]
    fn cu_rejects_bad_input() {
        assert!(matches!(
            cu_adjacent(&p([0]), &p([0, 1]), 1),
            Err(ImageError::DimensionMismatch { .. })
        ));
        assert!(matches!(cu_adjacent(&p([0]), &p([1]), 2), Err(ImageError::CuOutOfRange { .. })));
        assert!(matches!(cu_adjacent(&p([0]), &p([1]), 0), Err(ImageError::CuOutOfRange { .. })));
    }

    #[test]
    fn normal_product_examples() {
        let k = Adjacency::normal_product(Adjacency::Cu(1), 1, Adjacency::Cu(1), 1);
        assert!(k.adjacent(&p([0, 0]), &p([0, 1])).unwrap());
        assert!(k.adjacent(&p([0, 0]), &p([1, 1])).unwrap());
        assert!(!k.adjacent(&p([0, 0]), &p([2, 1])).unwrap());
        assert!(!k.adjacent(&p([0, 0]), &p([0, 0])).unwrap());
    }

    #[test]
    fn lattice_neighbor_counts() {
        // 2, 4, 8, 6, 18, 26 neighbours for the c_u adjacencies of Z, Z^2, Z^3.
        let cases = [(1, 1, 2), (2, 1, 4), (2, 2, 8), (3, 1, 6), (3, 2, 18), (3, 3, 26)];
        for (dim, u, expected) in cases {
            let origin = Point::new(vec![0; dim]);
            assert_eq!(Adjacency::Cu(u).lattice_neighbors(&origin).len(), expected, "dim {dim} u {u}");
        }
        let k = Adjacency::normal_product(Adjacency::Cu(1), 1, Adjacency::Cu(2), 2);
        assert_eq!(k.lattice_neighbors(&p([0, 0, 0])).len(), 26);
    }

    #[test]
    fn edge_set_basics() {
        let e = EdgeSet::from_pairs([(p([0]), p([1])), (p([2]), p([1])), (p([1]), p([0]))]).unwrap();
        assert_eq!(e.len(), 2);
        assert!(e.contains(&p([1]), &p([2])));
        let listed: Vec<_> = e.edges().collect();
        assert_eq!(listed, vec![(&p([0]), &p([1])), (&p([1]), &p([2]))]);
        assert!(matches!(EdgeSet::from_pairs([(p([0]), p([0]))]), Err(ImageError::SelfLoop(_))));
    }

    #[test]
    fn validation() {
        assert!(Adjacency::Cu(2).validate(1).is_err());
        let k = Adjacency::normal_product(Adjacency::Cu(1), 1, Adjacency::Cu(1), 1);
        assert!(k.validate(2).is_ok());
        assert!(matches!(k.validate(3), Err(ImageError::ProductDimensions { .. })));
    }
}
