use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A lattice point in `Z^n`.
///
/// Points order lexicographically by coordinate, which is the canonical
/// order used everywhere a deterministic ordering is needed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<i64>);

/// A set of points in canonical order.
pub type PointSet = BTreeSet<Point>;

impl Point {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Point(coords.into())
    }

    /// A one-dimensional point, used for abstract vertex labels.
    pub fn label(v: i64) -> Self {
        Point(vec![v])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Splits the coordinates at `at`, the inverse of [`Point::concat`].
    pub fn split(&self, at: usize) -> (Point, Point) {
        let (l, r) = self.0.split_at(at);
        (Point(l.to_vec()), Point(r.to_vec()))
    }

    pub fn concat(&self, other: &Point) -> Point {
        let mut coords = Vec::with_capacity(self.dim() + other.dim());
        coords.extend_from_slice(&self.0);
        coords.extend_from_slice(&other.0);
        Point(coords)
    }
}

impl From<Vec<i64>> for Point {
    fn from(coords: Vec<i64>) -> Self {
        Point(coords)
    }
}

impl<const N: usize> From<[i64; N]> for Point {
    fn from(coords: [i64; N]) -> Self {
        Point(coords.to_vec())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [v] = self.0.as_slice() {
            return write!(f, "{v}");
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_inverts_concat() {
        let a = Point::from([1, -2]);
        let b = Point::from([7]);
        let ab = a.concat(&b);
        assert_eq!(ab.coords(), &[1, -2, 7]);
        assert_eq!(ab.split(2), (a, b));
    }

    #[test]
    fn lexicographic_order() {
        let mut pts = vec![Point::from([1, 0]), Point::from([0, 5]), Point::from([0, -1])];
        pts.sort();
        assert_eq!(pts, vec![Point::from([0, -1]), Point::from([0, 5]), Point::from([1, 0])]);
    }

    #[test]
    fn display() {
        assert_eq!(Point::label(3).to_string(), "3");
        assert_eq!(Point::from([0, -1]).to_string(), "(0,-1)");
    }
}
