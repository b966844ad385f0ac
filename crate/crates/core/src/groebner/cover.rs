//! Minimum vertex covers of the support hypergraph of a monomial ideal.
//!
//! A set `S` of variables is independent modulo a monomial ideal when no
//! generator is supported inside `S`; its complement is then a vertex cover
//! of the generator supports. Minimal primes of a monomial ideal are the
//! coordinate primes on minimal covers.

use std::collections::BTreeSet;

fn uncovered<'a>(edges: &'a [Vec<usize>], chosen: &[bool]) -> Option<&'a Vec<usize>> {
    edges.iter().find(|e| !e.iter().any(|&v| chosen[v]))
}

fn search(
    edges: &[Vec<usize>],
    chosen: &mut Vec<bool>,
    depth: usize,
    limit: usize,
    found: &mut BTreeSet<Vec<usize>>,
    first_only: bool,
) {
    if first_only && !found.is_empty() {
        return;
    }
    let Some(edge) = uncovered(edges, chosen) else {
        let cover = (0..chosen.len()).filter(|&v| chosen[v]).collect();
        found.insert(cover);
        return;
    };
    if depth == limit {
        return;
    }
    // the cheapest edge to branch on is the smallest uncovered one
    let edge = edges
        .iter()
        .filter(|e| !e.iter().any(|&v| chosen[v]))
        .min_by_key(|e| e.len())
        .unwrap_or(edge);
    for &v in edge {
        chosen[v] = true;
        search(edges, chosen, depth + 1, limit, found, first_only);
        chosen[v] = false;
    }
}

fn normalize(edges: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut es: Vec<Vec<usize>> = edges
        .iter()
        .map(|e| {
            let mut e = e.clone();
            e.sort_unstable();
            e.dedup();
            e
        })
        .collect();
    es.sort();
    es.dedup();
    // supersets of other edges never constrain a cover
    let copy = es.clone();
    es.retain(|e| !copy.iter().any(|f| f != e && f.iter().all(|v| e.contains(v))));
    es
}

fn covers_of_min_size(nvars: usize, edges: &[Vec<usize>], first_only: bool) -> Option<(usize, Vec<Vec<usize>>)> {
    if edges.iter().any(|e| e.is_empty()) {
        return None;
    }
    let edges = normalize(edges);
    let mut chosen = vec![false; nvars];
    for limit in 0..=nvars {
        let mut found = BTreeSet::new();
        search(&edges, &mut chosen, 0, limit, &mut found, first_only);
        if !found.is_empty() {
            return Some((limit, found.into_iter().collect()));
        }
    }
    None
}

/// All vertex covers of minimum cardinality, sorted. `None` when some edge
/// is empty (the ideal contains 1).
pub fn minimum_vertex_covers(nvars: usize, edges: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    covers_of_min_size(nvars, edges, false).map(|(_, c)| c)
}

/// Cardinality of a minimum vertex cover.
pub fn minimum_cover_size(nvars: usize, edges: &[Vec<usize>]) -> Option<usize> {
    covers_of_min_size(nvars, edges, true).map(|(k, _)| k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let edges = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        assert_eq!(minimum_cover_size(3, &edges), Some(2));
        assert_eq!(
            minimum_vertex_covers(3, &edges).unwrap(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
    }

    #[test]
    fn empty_edge_means_unit_ideal() {
        assert_eq!(minimum_vertex_covers(2, &[vec![]]), None);
        assert_eq!(minimum_cover_size(2, &[]), Some(0));
    }

    #[test]
    fn superset_edges_are_ignored() {
        let edges = vec![vec![0], vec![0, 1, 2]];
        assert_eq!(minimum_vertex_covers(3, &edges).unwrap(), vec![vec![0]]);
    }
}
