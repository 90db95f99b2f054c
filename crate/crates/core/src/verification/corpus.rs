//! Fixed families of small images used by the default audits.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::constructions::{interval, product_image, rooted_tree, simple_closed_curve, RootedTree};
use crate::topology::{Adjacency, DigitalImage, EdgeSet, Point};

fn lattice(dim: usize, u: usize, pts: &[&[i64]]) -> DigitalImage {
    DigitalImage::new(dim, Adjacency::Cu(u), pts.iter().map(|c| Point::new(c.to_vec()))).expect("valid corpus image")
}

/// Sixteen images of at most six points: intervals, cycles, a star,
/// small lattice shapes under several `c_u`, a normal product and one
/// disconnected image.
pub fn standard_corpus() -> Vec<Arc<DigitalImage>> {
    let star = rooted_tree(
        &[(Point::label(0), Point::label(1)), (Point::label(0), Point::label(2)), (Point::label(0), Point::label(3))],
        Point::label(0),
    )
    .expect("star");
    let images = vec![
        interval(0, 0).unwrap(),
        interval(0, 1).unwrap(),
        interval(0, 2).unwrap(),
        interval(0, 3).unwrap(),
        interval(0, 5).unwrap(),
        lattice(1, 1, &[&[0], &[2]]),
        lattice(2, 2, &[&[0, 0], &[1, 1]]),
        lattice(2, 1, &[&[0, 0], &[1, 0], &[0, 1]]),
        lattice(2, 2, &[&[0, 0], &[1, 0], &[0, 1]]),
        lattice(2, 1, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
        lattice(2, 2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
        lattice(3, 1, &[&[0, 0, 0], &[1, 0, 0], &[1, 1, 0], &[1, 1, 1]]),
        (*star.image).clone(),
        simple_closed_curve(5).unwrap(),
        simple_closed_curve(6).unwrap(),
        product_image(&interval(0, 1).unwrap(), &interval(0, 2).unwrap()),
    ];
    images.into_iter().map(Arc::new).collect()
}

/// Members of [`standard_corpus`] with at most `max_points` points.
pub fn corpus_up_to(max_points: usize) -> Vec<Arc<DigitalImage>> {
    standard_corpus()
        .into_iter()
        .filter(|img| img.len() <= max_points)
        .collect()
}

type Tree = Vec<Vec<usize>>;

fn rooted_code(tree: &Tree, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = tree[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(tree, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn canonical_code(tree: &Tree) -> String {
    (0..tree.len())
        .map(|r| rooted_code(tree, r, usize::MAX))
        .min()
        .unwrap_or_default()
}

/// All trees on `n` vertices up to isomorphism, keyed by canonical code.
fn trees_by_size(max_vertices: usize) -> Vec<BTreeMap<String, Tree>> {
    let mut levels: Vec<BTreeMap<String, Tree>> = vec![BTreeMap::new(); max_vertices + 1];
    if max_vertices == 0 {
        return levels;
    }
    let single: Tree = vec![vec![]];
    levels[1].insert(canonical_code(&single), single);
    for n in 2..=max_vertices {
        let prev: Vec<Tree> = levels[n - 1].values().cloned().collect();
        for t in prev {
            for v in 0..t.len() {
                let mut grown = t.clone();
                grown.push(vec![v]);
                grown[v].push(n - 1);
                levels[n].entry(canonical_code(&grown)).or_insert(grown);
            }
        }
    }
    levels
}

/// `count` pairwise non-isomorphic trees with 4 to `max_vertices`
/// vertices, spread evenly over the full list ordered by size and then
/// canonical code. Each is rooted at a vertex of maximum degree.
pub fn generated_trees(count: usize, max_vertices: usize) -> Vec<RootedTree> {
    let all: Vec<Tree> = trees_by_size(max_vertices)
        .into_iter()
        .skip(4)
        .flat_map(|level| level.into_values())
        .collect();
    if all.is_empty() || count == 0 {
        return Vec::new();
    }
    let picks: Vec<usize> = if count >= all.len() {
        (0..all.len()).collect()
    } else {
        (0..count).map(|i| i * all.len() / count).collect()
    };
    picks.into_iter().map(|i| to_rooted(&all[i])).collect()
}

fn to_rooted(tree: &Tree) -> RootedTree {
    let root = (0..tree.len())
        .max_by_key(|&v| (tree[v].len(), std::cmp::Reverse(v)))
        .expect("nonempty tree");
    let edges: Vec<(Point, Point)> = tree
        .iter()
        .enumerate()
        .flat_map(|(v, ns)| {
            ns.iter()
                .filter(move |&&w| w > v)
                .map(move |&w| (Point::label(v as i64), Point::label(w as i64)))
        })
        .collect();
    rooted_tree(&edges, Point::label(root as i64)).expect("generated tree is valid")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// One labelled representative of every graph on 1 to `max_vertices`
/// vertices up to isomorphism, connected or not. Each representative
/// is the edge set with the smallest bitmask in its class.
pub fn graphs_up_to(max_vertices: usize) -> Vec<Arc<DigitalImage>> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let slot = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).expect("pair");
        let perms = permutations(n);
        for mask in 0u64..1 << pairs.len() {
            let canonical = perms.iter().all(|perm| {
                let image = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u64, |acc, (_, &(a, b))| acc | 1 << slot(perm[a], perm[b]));
                image >= mask
            });
            if !canonical {
                continue;
            }
            let edges = EdgeSet::from_pairs(
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &(a, b))| (Point::label(a as i64), Point::label(b as i64))),
            )
            .expect("graph edges");
            let img = DigitalImage::new(1, Adjacency::Explicit(edges), (0..n as i64).map(Point::label)).expect("graph");
            out.push(Arc::new(img));
        }
    }
    out
}

/// A path on `n` labelled vertices with explicit edges.
pub fn path_graph(n: usize) -> DigitalImage {
    let edges = EdgeSet::from_pairs((1..n as i64).map(|i| (Point::label(i - 1), Point::label(i)))).expect("path edges");
    DigitalImage::new(1, Adjacency::Explicit(edges), (0..n as i64).map(Point::label)).expect("path")
}
