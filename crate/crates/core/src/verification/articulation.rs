use super::VerifyError;
use crate::topology::{DigitalImage, PointSet};

/// Points whose removal disconnects a connected image (Tarjan low-link,
/// iterative).
pub fn find_articulation_points(img: &DigitalImage) -> Result<PointSet, VerifyError> {
    if !img.is_connected() {
        return Err(VerifyError::Disconnected);
    }
    let n = img.len();
    if n == 0 {
        return Ok(PointSet::new());
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;

    // (vertex, parent, next neighbour position)
    let mut stack = vec![(0usize, UNSEEN, 0usize)];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    let mut root_children = 0;

    while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
        let ns = img.neighbor_indices(v);
        if *pos < ns.len() {
            let w = ns[*pos];
            *pos += 1;
            if disc[w] == UNSEEN {
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != UNSEEN {
                low[parent] = low[parent].min(low[v]);
                if parent != 0 && low[v] >= disc[parent] {
                    is_cut[parent] = true;
                }
            }
        }
    }
    is_cut[0] = root_children > 1;

    Ok(is_cut
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(i, _)| img.point(i).clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{interval, rooted_tree, simple_closed_curve};
    use crate::topology::Point;

    /// Removes each point in turn and counts components.
    fn brute_force(img: &DigitalImage) -> PointSet {
        (0..img.len())
            .filter(|&r| {
                let mut members = vec![true; img.len()];
                members[r] = false;
                !img.is_connected_among(&members)
            })
            .map(|r| img.point(r).clone())
            .collect()
    }

    #[test]
    fn examples() {
        let e = |a: i64, b: i64| (Point::label(a), Point::label(b));
        let star = rooted_tree(&[e(0, 1), e(0, 2), e(0, 3)], Point::label(0)).unwrap();
        assert_eq!(find_articulation_points(&star.image).unwrap(), PointSet::from([Point::label(0)]));
        assert!(find_articulation_points(&simple_closed_curve(6).unwrap()).unwrap().is_empty());
        let i = interval(0, 4).unwrap();
        assert_eq!(
            find_articulation_points(&i).unwrap(),
            (1..=3).map(Point::label).collect::<PointSet>()
        );
    }

    #[test]
    fn disconnected_input() {
        let img = DigitalImage::new(1, crate::topology::Adjacency::Cu(1), [Point::label(0), Point::label(2)]).unwrap();
        assert_eq!(find_articulation_points(&img), Err(VerifyError::Disconnected));
    }

    #[test]
    fn agrees_with_removal_on_corpus() {
        for img in crate::verification::corpus::standard_corpus() {
            if img.is_connected() {
                assert_eq!(find_articulation_points(&img).unwrap(), brute_force(&img));
            }
        }
        for t in crate::verification::corpus::generated_trees(20, 9) {
            assert_eq!(find_articulation_points(&t.image).unwrap(), brute_force(&t.image));
        }
    }
}
