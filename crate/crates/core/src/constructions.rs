//! Standard images (intervals, cycles, rooted trees) and the product and
//! wedge constructions on images and maps.

use std::collections::VecDeque;
use std::sync::Arc;

use thiserror::Error;

use crate::maps::{DigitalFunction, MapError};
use crate::topology::{Adjacency, DigitalImage, EdgeSet, ImageError, Point, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("empty interval [{0}, {1}]")]
    EmptyInterval(i64, i64),
    #[error("a simple closed curve needs at least 4 points, got {0}")]
    CurveTooSmall(usize),
    #[error("root {0} is not a vertex of the tree")]
    RootMissing(Point),
    #[error("edges do not form a connected graph")]
    DisconnectedTree,
    #[error("edges contain a cycle")]
    CyclicTree,
    #[error("image is not a normal product")]
    NotAProduct,
    #[error("image is not the full product of its projections")]
    IncompleteProduct,
    #[error("junction {0} does not lie in both parts")]
    MissingJunction(Point),
    #[error("parts share {0} besides the junction")]
    Overlap(Point),
    #[error("{0} and {1} are adjacent across the wedge without passing through the junction")]
    CrossAdjacency(Point, Point),
    #[error("parts carry incompatible adjacencies")]
    IncompatibleAdjacency,
    #[error("map does not match the {0} part of the wedge")]
    WedgePartMismatch(&'static str),
    #[error("maps disagree at the junction: {left} vs {right}, expected {expected}")]
    JunctionDisagreement { left: Point, right: Point, expected: Point },
    #[error(transparent)]
    Image(#[from] ImageError),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// The digital interval `[u, v]_Z` under `c_1`.
pub fn interval(u: i64, v: i64) -> Result<DigitalImage, ConstructionError> {
    if u > v {
        return Err(ConstructionError::EmptyInterval(u, v));
    }
    Ok(DigitalImage::new(1, Adjacency::Cu(1), (u..=v).map(Point::label))?)
}

/// An abstract `m`-cycle on labels `0..m`, every point with exactly two
/// neighbours.
pub fn simple_closed_curve(m: usize) -> Result<DigitalImage, ConstructionError> {
    if m < 4 {
        return Err(ConstructionError::CurveTooSmall(m));
    }
    let m = m as i64;
    let edges = EdgeSet::from_pairs((0..m).map(|i| (Point::label(i), Point::label((i + 1) % m))))?;
    Ok(DigitalImage::new(1, Adjacency::Explicit(edges), (0..m).map(Point::label))?)
}

/// A tree with a distinguished root, split into one branch per child of
/// the root. Each branch holds the root, the child and the child's
/// descendants.
#[derive(Clone, Debug)]
pub struct RootedTree {
    pub image: Arc<DigitalImage>,
    pub root: Point,
    pub branches: Vec<PointSet>,
}

pub fn rooted_tree(edges: &[(Point, Point)], root: Point) -> Result<RootedTree, ConstructionError> {
    let edge_set = EdgeSet::from_pairs(edges.iter().cloned())?;
    if !edge_set.is_empty() && !edge_set.endpoints().any(|p| *p == root) {
        return Err(ConstructionError::RootMissing(root));
    }
    let mut points: PointSet = edge_set.endpoints().cloned().collect();
    points.insert(root.clone());
    let edge_count = edge_set.len();
    let image = DigitalImage::new(root.dim(), Adjacency::Explicit(edge_set), points)?;
    if !image.is_connected() {
        return Err(ConstructionError::DisconnectedTree);
    }
    if edge_count + 1 != image.len() {
        return Err(ConstructionError::CyclicTree);
    }

    let r = image.index_of(&root).expect("root is a vertex");
    let mut outside_root = vec![true; image.len()];
    outside_root[r] = false;
    let mut branches = Vec::new();
    for &child in image.neighbor_indices(r) {
        let mut seen = vec![false; image.len()];
        seen[child] = true;
        let mut queue = VecDeque::from([child]);
        let mut members = vec![r, child];
        while let Some(i) = queue.pop_front() {
            for &j in image.neighbor_indices(i) {
                if outside_root[j] && !seen[j] {
                    seen[j] = true;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        branches.push(image.to_point_set(&members));
    }
    Ok(RootedTree {
        image: Arc::new(image),
        root,
        branches,
    })
}

/// An 11-vertex tree whose root has three children with subtrees of 1, 3
/// and 4 further vertices.
///
/// Labels: root `0`; children `1, 2, 3`; `4` below `2` with leaves `6, 7`;
/// `5` below `3` with leaves `8, 9, 10`.
pub fn three_branch_tree() -> RootedTree {
    let e = |a: i64, b: i64| (Point::label(a), Point::label(b));
    let edges = [
        e(0, 1),
        e(0, 2),
        e(0, 3),
        e(2, 4),
        e(4, 6),
        e(4, 7),
        e(3, 5),
        e(5, 8),
        e(5, 9),
        e(5, 10),
    ];
    rooted_tree(&edges, Point::label(0)).expect("fixed tree is valid")
}

/// `X × Y` under the normal product adjacency; points are coordinate
/// concatenations.
pub fn product_image(x: &DigitalImage, y: &DigitalImage) -> DigitalImage {
    let adjacency = Adjacency::normal_product(x.adjacency().clone(), x.dim(), y.adjacency().clone(), y.dim());
    let points = x
        .points()
        .iter()
        .flat_map(|a| y.points().iter().map(move |b| a.concat(b)));
    DigitalImage::new(x.dim() + y.dim(), adjacency, points).expect("product of valid images is valid")
}

/// `(f × g)(a, b) = (f(a), g(b))` between freshly built product images.
pub fn product_map(f: &DigitalFunction, g: &DigitalFunction) -> DigitalFunction {
    let domain = Arc::new(product_image(f.domain(), g.domain()));
    let codomain = Arc::new(product_image(f.codomain(), g.codomain()));
    product_map_between(f, g, &domain, &codomain).expect("images built from the factors")
}

/// `f × g` between product images the caller already holds, so repeated
/// products over the same factors share their images.
pub fn product_map_between(
    f: &DigitalFunction,
    g: &DigitalFunction,
    domain: &Arc<DigitalImage>,
    codomain: &Arc<DigitalImage>,
) -> Result<DigitalFunction, ConstructionError> {
    let expect_product = |img: &DigitalImage, l: &DigitalImage, r: &DigitalImage| {
        let adjacency = Adjacency::normal_product(l.adjacency().clone(), l.dim(), r.adjacency().clone(), r.dim());
        img.len() == l.len() * r.len() && *img.adjacency() == adjacency
    };
    if !expect_product(domain, f.domain(), g.domain()) || !expect_product(codomain, f.codomain(), g.codomain()) {
        return Err(ConstructionError::NotAProduct);
    }
    // Lexicographic order on concatenations is the order on (left, right) pairs.
    let (nb, nd) = (g.domain().len(), g.codomain().len());
    let values = (0..domain.len())
        .map(|i| f.values()[i / nb] * nd + g.values()[i % nb])
        .collect();
    Ok(DigitalFunction::from_indices_unchecked(domain.clone(), codomain.clone(), values))
}

/// The two factor images of a product image.
pub fn factors(product: &DigitalImage) -> Result<(DigitalImage, DigitalImage), ConstructionError> {
    let Adjacency::NormalProduct {
        left, left_dim, right, ..
    } = product.adjacency()
    else {
        return Err(ConstructionError::NotAProduct);
    };
    let (mut ls, mut rs) = (PointSet::new(), PointSet::new());
    for p in product.points() {
        let (l, r) = p.split(*left_dim);
        ls.insert(l);
        rs.insert(r);
    }
    if ls.len() * rs.len() != product.len() {
        return Err(ConstructionError::IncompleteProduct);
    }
    let right_dim = product.dim() - left_dim;
    let restrict_edges = |adj: &Adjacency, pts: &PointSet| match adj {
        Adjacency::Explicit(edges) => Adjacency::Explicit(edges.retain(|p| pts.contains(p))),
        other => other.clone(),
    };
    let l_img = DigitalImage::new(*left_dim, restrict_edges(left, &ls), ls)?;
    let r_img = DigitalImage::new(right_dim, restrict_edges(right, &rs), rs)?;
    Ok((l_img, r_img))
}

/// The projections `p_1(x, y) = x` and `p_2(x, y) = y` of a product image.
pub fn projections(product: &Arc<DigitalImage>) -> Result<(DigitalFunction, DigitalFunction), ConstructionError> {
    let (l, r) = factors(product)?;
    let left_dim = l.dim();
    let p1 = DigitalFunction::from_fn(product.clone(), Arc::new(l), |p| p.split(left_dim).0)?;
    let p2 = DigitalFunction::from_fn(product.clone(), Arc::new(r), |p| p.split(left_dim).1)?;
    Ok((p1, p2))
}

/// An image split as the wedge of two parts meeting in one point.
#[derive(Clone, Debug)]
pub struct WedgeDecomposition {
    pub whole: Arc<DigitalImage>,
    pub left: PointSet,
    pub right: PointSet,
    pub junction: Point,
    pub left_image: Arc<DigitalImage>,
    pub right_image: Arc<DigitalImage>,
}

fn union_adjacency(a: &Adjacency, b: &Adjacency) -> Result<Adjacency, ConstructionError> {
    match (a, b) {
        (Adjacency::Explicit(x), Adjacency::Explicit(y)) => Ok(Adjacency::Explicit(x.union(y))),
        _ if a == b => Ok(a.clone()),
        _ => Err(ConstructionError::IncompatibleAdjacency),
    }
}

/// Validates `left ∨ right` at `junction`. The parts must already share
/// exactly the junction; nothing is translated or relabelled.
pub fn wedge_image(left: &DigitalImage, right: &DigitalImage, junction: Point) -> Result<WedgeDecomposition, ConstructionError> {
    if left.dim() != right.dim() {
        return Err(ImageError::DimensionMismatch {
            expected: left.dim(),
            found: right.dim(),
        }
        .into());
    }
    if !left.contains(&junction) || !right.contains(&junction) {
        return Err(ConstructionError::MissingJunction(junction));
    }
    if let Some(p) = left.points().iter().find(|p| **p != junction && right.contains(p)) {
        return Err(ConstructionError::Overlap(p.clone()));
    }
    let adjacency = union_adjacency(left.adjacency(), right.adjacency())?;
    let whole = DigitalImage::new(
        left.dim(),
        adjacency,
        left.points().iter().chain(right.points()).filter(|p| **p != junction).cloned().chain([junction.clone()]),
    )?;
    for x in left.points().iter().filter(|p| **p != junction) {
        let i = whole.index_of(x).expect("left point in union");
        for &j in whole.neighbor_indices(i) {
            let y = whole.point(j);
            if *y != junction && right.contains(y) {
                return Err(ConstructionError::CrossAdjacency(x.clone(), y.clone()));
            }
        }
    }
    Ok(WedgeDecomposition {
        left: left.points().iter().cloned().collect(),
        right: right.points().iter().cloned().collect(),
        whole: Arc::new(whole),
        junction,
        left_image: Arc::new(left.clone()),
        right_image: Arc::new(right.clone()),
    })
}

/// Pastes `f` on the left part and `g` on the right part into `f ∧ g`.
pub fn wedge_map(
    f: &DigitalFunction,
    g: &DigitalFunction,
    dom: &WedgeDecomposition,
    cod: &WedgeDecomposition,
) -> Result<DigitalFunction, ConstructionError> {
    if **f.domain() != *dom.left_image || **f.codomain() != *cod.left_image {
        return Err(ConstructionError::WedgePartMismatch("left"));
    }
    if **g.domain() != *dom.right_image || **g.codomain() != *cod.right_image {
        return Err(ConstructionError::WedgePartMismatch("right"));
    }
    let fx = f.apply(&dom.junction).expect("junction in left part");
    let gx = g.apply(&dom.junction).expect("junction in right part");
    if *fx != cod.junction || *gx != cod.junction {
        return Err(ConstructionError::JunctionDisagreement {
            left: fx.clone(),
            right: gx.clone(),
            expected: cod.junction.clone(),
        });
    }
    Ok(DigitalFunction::from_fn(dom.whole.clone(), cod.whole.clone(), |x| {
        if dom.left.contains(x) {
            part_value(f, x)
        } else {
            part_value(g, x)
        }
    })?)
}

fn part_value(f: &DigitalFunction, x: &Point) -> Point {
    f.apply(x).expect("point of the part").clone()
}
