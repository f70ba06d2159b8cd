use std::collections::BTreeSet;

use syncagents::topology::{deterministic_scale_free, validate};

/// Replication construction kept as explicit node-name lists: every node is
/// named by the sequence of `(round, copy)` pairs that produced it, and the
/// edge set is rebuilt from names each round.
fn replica_oracle(iterations: u32) -> (usize, BTreeSet<(usize, usize)>, usize) {
    type Name = Vec<(u32, u8)>;
    let mut nodes: Vec<Name> = vec![vec![]];
    let mut edges: Vec<(Name, Name)> = Vec::new();
    let mut bottom: Vec<Name> = vec![vec![]];

    for round in 1..=iterations {
        let rename = |name: &Name, copy: u8| {
            let mut n = vec![(round, copy)];
            n.extend_from_slice(name);
            n
        };
        let mut new_nodes = nodes.clone();
        let mut new_edges = edges.clone();
        let mut new_bottom = Vec::new();
        for copy in [1u8, 2u8] {
            new_nodes.extend(nodes.iter().map(|n| rename(n, copy)));
            new_edges.extend(edges.iter().map(|(a, b)| (rename(a, copy), rename(b, copy))));
            for b in &bottom {
                let c = rename(b, copy);
                new_edges.push((vec![], c.clone()));
                new_bottom.push(c);
            }
        }
        nodes = new_nodes;
        edges = new_edges;
        bottom = new_bottom;
    }

    let index = |name: &Name| nodes.iter().position(|n| n == name).unwrap();
    let set: BTreeSet<(usize, usize)> = edges
        .iter()
        .map(|(a, b)| {
            let (i, j) = (index(a), index(b));
            (i.min(j), i.max(j))
        })
        .collect();
    let root_degree = set.iter().filter(|&&(i, j)| i == 0 || j == 0).count();
    (nodes.len(), set, root_degree)
}

#[test]
fn matches_replica_oracle() {
    for k in 0..=4 {
        let g = deterministic_scale_free(k).unwrap();
        let (n, edges, root_degree) = replica_oracle(k);
        assert_eq!(g.n(), n);
        let got: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
        assert_eq!(got, edges, "k = {k}");
        assert_eq!(g.degree(0), root_degree);
    }
}

#[test]
fn counts_follow_recurrence() {
    let mut expected_edges = 0usize;
    for k in 0..=5u32 {
        if k > 0 {
            expected_edges = 3 * expected_edges + (1 << k);
        }
        let g = deterministic_scale_free(k).unwrap();
        assert_eq!(g.n(), 3usize.pow(k));
        assert_eq!(g.edge_count(), expected_edges);
        assert_eq!(g.degree(0), 2 * ((1 << k) - 1));
        assert!(validate(&g).is_empty());
    }
    assert_eq!(deterministic_scale_free(4).unwrap().edge_count(), 130);
}

#[test]
fn heavy_tailed_degrees() {
    let g = deterministic_scale_free(4).unwrap();
    let mut d = g.degrees();
    d.sort();
    let median = d[d.len() / 2];
    assert_eq!(g.max_degree(), 30);
    assert!(30 >= 5 * median, "median {median}");
}

#[test]
fn construction_is_deterministic() {
    let a = deterministic_scale_free(4).unwrap();
    let b = deterministic_scale_free(4).unwrap();
    assert_eq!(a.entries(), b.entries());
    assert_eq!(a.levels(), b.levels());
}

#[test]
fn graph_is_connected() {
    let g = deterministic_scale_free(4).unwrap();
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &(j, _) in g.row(i) {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    assert!(seen.into_iter().all(|s| s));
}
