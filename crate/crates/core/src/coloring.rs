//! Proper edge colouring of bipartite multigraphs with exactly `Δ` colours
//! (König's theorem), by alternating-path recolouring.
//!
//! Double-number fibers come in two kinds (`Δ⁺` and `Δ⁻`), so "one element per
//! fiber" is a matching in the bipartite graph whose vertices are fiber values
//! and whose edges are the elements. Splitting into `Δ` matchings is what the
//! multiplicity-one partition and multiplicity pruning need.

use alloc::vec;
use alloc::vec::Vec;

/// Colours edges `(left, right)` so that no two edges sharing an endpoint get
/// the same colour. Uses `max degree` colours; returns one colour per edge and
/// the number of colours.
pub fn bipartite_edge_coloring(left_count: usize, right_count: usize, edges: &[(usize, usize)]) -> (Vec<usize>, usize) {
    let vertex_count = left_count + right_count;
    let mut degree = vec![0usize; vertex_count];
    for &(u, v) in edges {
        assert!(u < left_count && v < right_count, "edge endpoint out of range");
        degree[u] += 1;
        degree[left_count + v] += 1;
    }
    let colors = degree.iter().copied().max().unwrap_or(0);
    // at[vertex * colors + c] = edge currently coloured c at vertex
    let mut at: Vec<Option<usize>> = vec![None; vertex_count * colors];
    let mut color_of = vec![usize::MAX; edges.len()];
    let ends = |e: usize| (edges[e].0, left_count + edges[e].1);

    for (e, _) in edges.iter().enumerate() {
        let (u, v) = ends(e);
        let free_at = |at: &[Option<usize>], x: usize| (0..colors).find(|&c| at[x * colors + c].is_none());
        let a = free_at(&at, u).expect("vertex degree exceeds colour count");
        let b = free_at(&at, v).expect("vertex degree exceeds colour count");
        if at[v * colors + a].is_some() {
            // Walk the a/b alternating path from v and swap its colours; the
            // path cannot reach u, so a becomes free at v while staying free at u.
            let mut path = Vec::new();
            let mut vertex = v;
            let mut want = a;
            while let Some(edge) = at[vertex * colors + want] {
                path.push(edge);
                let (x, y) = ends(edge);
                vertex = if x == vertex { y } else { x };
                want = if want == a { b } else { a };
            }
            for &edge in &path {
                let (x, y) = ends(edge);
                at[x * colors + color_of[edge]] = None;
                at[y * colors + color_of[edge]] = None;
            }
            for &edge in &path {
                let (x, y) = ends(edge);
                let flipped = if color_of[edge] == a { b } else { a };
                color_of[edge] = flipped;
                at[x * colors + flipped] = Some(edge);
                at[y * colors + flipped] = Some(edge);
            }
        }
        debug_assert!(at[u * colors + a].is_none() && at[v * colors + a].is_none());
        color_of[e] = a;
        at[u * colors + a] = Some(e);
        at[v * colors + a] = Some(e);
    }
    (color_of, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(left: usize, right: usize, edges: &[(usize, usize)]) {
        let (colors, count) = bipartite_edge_coloring(left, right, edges);
        let mut max_deg = 0;
        for x in 0..left {
            max_deg = max_deg.max(edges.iter().filter(|e| e.0 == x).count());
        }
        for y in 0..right {
            max_deg = max_deg.max(edges.iter().filter(|e| e.1 == y).count());
        }
        assert_eq!(count, max_deg);
        for i in 0..edges.len() {
            assert!(colors[i] < count);
            for j in i + 1..edges.len() {
                let share = edges[i].0 == edges[j].0 || edges[i].1 == edges[j].1;
                if share {
                    assert_ne!(colors[i], colors[j], "edges {i} and {j} clash");
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        check(0, 0, &[]);
        check(1, 1, &[(0, 0), (0, 0), (0, 0)]);
        check(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        // a greedy order that would need a fourth colour
        check(3, 3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 0), (0, 2), (1, 0), (2, 1)]);
    }

    proptest! {
        #[test]
        fn uses_max_degree_colours(edges in proptest::collection::vec((0usize..6, 0usize..6), 0..40)) {
            check(6, 6, &edges);
        }
    }
}
