//! Network topologies: the complete graph and the deterministic hierarchical
//! scale-free graph built by iterated replication, plus edge-list IO and
//! structural validation.
//!
//! Edge-list text format:
//!
//! ```text
//! # comment
//! n=5
//! 0 1
//! 1 2
//! ```
//!
//! The optional `n=<count>` line must precede any edge. Each undirected edge
//! is listed once as a whitespace-separated pair of 0-based ids.

use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Symmetric binary connection matrix with optional per-node level labels.
///
/// Entries are stored densely as `u8` so that malformed matrices can be
/// represented and reported by [`validate`]. Neighbor lists are derived once
/// at construction and visited in ascending column order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    n: usize,
    entries: Vec<u8>,
    levels: Option<Vec<u32>>,
    neighbors: Vec<Vec<(usize, u8)>>,
}

impl Adjacency {
    /// Builds an adjacency from a row-major `n * n` matrix. No structural
    /// checks beyond the shape are performed; see [`validate`].
    pub fn from_dense(n: usize, entries: Vec<u8>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("adjacency needs at least one node".into()));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                what: "adjacency entries",
                expected: n * n,
                found: entries.len(),
                index: None,
            });
        }
        let neighbors = (0..n)
            .map(|i| {
                entries[i * n..(i + 1) * n]
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a != 0)
                    .map(|(j, &a)| (j, a))
                    .collect()
            })
            .collect();
        Ok(Self {
            n,
            entries,
            levels: None,
            neighbors,
        })
    }

    /// Builds a symmetric adjacency from undirected edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("adjacency needs at least one node".into()));
        }
        let mut entries = vec![0u8; n * n];
        for (k, &(i, j)) in edges.iter().enumerate() {
            if i >= n || j >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge {k} ({i}, {j}) references a node outside 0..{n}"
                )));
            }
            if i == j {
                return Err(Error::InvalidParameter(format!("edge {k} is a self-loop at node {i}")));
            }
            entries[i * n + j] = 1;
            entries[j * n + i] = 1;
        }
        Self::from_dense(n, entries)
    }

    /// Attaches per-node level labels.
    pub fn with_levels(mut self, levels: Vec<u32>) -> Result<Self> {
        if levels.len() != self.n {
            return Err(Error::DimensionMismatch {
                what: "level labels",
                expected: self.n,
                found: levels.len(),
                index: None,
            });
        }
        self.levels = Some(levels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn levels(&self) -> Option<&[u32]> {
        self.levels.as_deref()
    }

    /// Nonzero entries of row `i` as `(column, value)`, ascending by column.
    #[inline]
    pub fn row(&self, i: usize) -> &[(usize, u8)] {
        &self.neighbors[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors[i].iter().filter(|&&(j, _)| j != i).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(i)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Number of unordered off-diagonal pairs `{i, j}` with a nonzero entry
    /// in either direction.
    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Undirected edges `(i, j)` with `i < j`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != 0 || self.get(j, i) != 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Short human-readable description, used in run metadata.
    pub fn describe(&self) -> String {
        format!("{} nodes, {} edges", self.n, self.edge_count())
    }
}

/// Complete graph on `n` nodes without self-loops.
pub fn all_to_all(n: usize) -> Result<Adjacency> {
    if n == 0 {
        return Err(Error::InvalidParameter("all-to-all network needs n >= 1".into()));
    }
    let mut entries = vec![1u8; n * n];
    for i in 0..n {
        entries[i * n + i] = 0;
    }
    Adjacency::from_dense(n, entries)
}

/// Deterministic hierarchical scale-free graph after `iterations` rounds of
/// replication.
///
/// Round `k` copies the current graph twice and wires every bottom node of
/// both copies to the root. The bottom nodes of the new graph are the copies'
/// bottom nodes (`2^k` of them); the bottom of the single-node seed is the
/// root itself. Node order is original block, first copy, second copy, so the
/// root is always node 0. Each node is labelled with the round in which it
/// was created.
pub fn deterministic_scale_free(iterations: u32) -> Result<Adjacency> {
    let n_total = 3usize
        .checked_pow(iterations)
        .ok_or_else(|| Error::InvalidParameter(format!("3^{iterations} nodes overflows")))?;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut levels: Vec<u32> = Vec::with_capacity(n_total);
    levels.push(0);
    let mut bottom = vec![0usize];
    let mut n = 1usize;

    for round in 1..=iterations {
        let base_edges = edges.len();
        let mut next_bottom = Vec::with_capacity(bottom.len() * 2);
        for copy in 1..=2 {
            let offset = copy * n;
            for e in 0..base_edges {
                let (a, b) = edges[e];
                edges.push((a + offset, b + offset));
            }
            for &b in &bottom {
                edges.push((0, b + offset));
                next_bottom.push(b + offset);
            }
            levels.extend(std::iter::repeat_n(round, n));
        }
        bottom = next_bottom;
        n *= 3;
    }

    Adjacency::from_edges(n, &edges)?.with_levels(levels)
}

/// A structural problem found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonzeroDiagonal(usize),
    Asymmetric(usize, usize),
    NonBinary { row: usize, col: usize, value: u8 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonzeroDiagonal(i) => write!(f, "nonzero diagonal at {i}"),
            Violation::Asymmetric(i, j) => write!(f, "asymmetric at ({i},{j})"),
            Violation::NonBinary { row, col, value } => {
                write!(f, "non-binary entry {value} at ({row},{col})")
            }
        }
    }
}

/// Lists every violated invariant (symmetric, zero diagonal, binary). Empty
/// means the matrix is a valid undirected simple graph.
pub fn validate(adjacency: &Adjacency) -> Vec<Violation> {
    let n = adjacency.n();
    let mut out = Vec::new();
    for i in 0..n {
        if adjacency.get(i, i) != 0 {
            out.push(Violation::NonzeroDiagonal(i));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if adjacency.get(i, j) != adjacency.get(j, i) {
                out.push(Violation::Asymmetric(i, j));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let value = adjacency.get(i, j);
            if value > 1 {
                out.push(Violation::NonBinary { row: i, col: j, value });
            }
        }
    }
    out
}

/// Parses the edge-list text format.
pub fn load_adjacency<R: BufRead>(reader: R) -> Result<Adjacency> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line: lineno, message };

        if let Some(rest) = trimmed.strip_prefix("n=") {
            if declared.is_some() || !edges.is_empty() {
                return Err(parse_err("node-count header must appear once, before any edge".into()));
            }
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| parse_err(format!("invalid node count {:?}", rest.trim())))?;
            declared = Some(n);
            continue;
        }

        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens
            .first()
            .is_some_and(|t| t.eq_ignore_ascii_case("directed") || t.eq_ignore_ascii_case("asymmetric"))
        {
            return Err(parse_err(format!(
                "directive {:?} not supported: edges are undirected",
                tokens[0]
            )));
        }
        if tokens.len() != 2 {
            return Err(parse_err(format!("expected `i j`, found {trimmed:?}")));
        }
        let parse_id = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| parse_err(format!("non-numeric node id {t:?}")))
        };
        let i = parse_id(tokens[0])?;
        let j = parse_id(tokens[1])?;
        if i == j {
            return Err(parse_err(format!("self-loop at node {i}")));
        }
        if let Some(n) = declared {
            if i >= n || j >= n {
                return Err(parse_err(format!("edge ({i}, {j}) exceeds declared n={n}")));
            }
        }
        max_id = Some(max_id.map_or(i.max(j), |m| m.max(i).max(j)));
        edges.push((i, j));
    }

    let n = match (declared, max_id) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    if n == 0 {
        return Err(Error::Parse {
            line: 0,
            message: "edge list defines no nodes".into(),
        });
    }
    Adjacency::from_edges(n, &edges)
}

/// Writes the edge-list text format: header line, then each undirected edge
/// once with `i < j`.
pub fn save_adjacency<W: Write>(adjacency: &Adjacency, mut out: W) -> Result<()> {
    writeln!(out, "n={}", adjacency.n())?;
    for (i, j) in adjacency.edges() {
        writeln!(out, "{i} {j}")?;
    }
    out.flush()?;
    Ok(())
}
