//! Finite simple undirected graphs: construction, edge-list parsing,
//! breadth-first distances and bipartite two-coloring.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use thiserror::Error;

/// Errors raised while building, parsing or querying a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not bipartite (odd cycle of length {})", cycle.len())]
    NotBipartite { cycle: Vec<usize> },
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized as `(u, v)` with `u < v`, in order of first
/// insertion; the position of an edge in that list is its edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        };
        for (u, v) in edges {
            g.add_edge(u, v, 0)?;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    // `line` is only used for error reporting by the parser.
    fn add_edge(&mut self, u: usize, v: usize, line: usize) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if self.adj[a].iter().any(|&(w, _)| w == b) {
            return Ok(false);
        }
        let id = self.edges.len();
        self.edges.push((a, b));
        self.adj[a].push((b, id));
        self.adj[b].push((a, id));
        Ok(true)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges as `(u, v)` pairs with `u < v`, indexed by edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().map(|&(v, _)| v)
    }

    /// Neighbors of `u` paired with the index of the connecting edge.
    pub fn incident(&self, u: usize) -> &[(usize, usize)] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].iter().any(|&(w, _)| w == v)
    }

    /// Index of the edge joining `u` and `v`, if any.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n {
            return None;
        }
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, id)| id)
    }

    /// Serializes to the edge-list text format, always with an `n` header.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Edge sets compared as unordered sets of pairs.
    pub fn same_edges(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

/// Parses the edge-list text format.
///
/// Each non-blank line not starting with `#` holds two non-negative integers.
/// The first such line may instead be `n <count>`, which fixes the vertex
/// count; otherwise the count is one more than the largest index mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared: Option<usize> = None;
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    let mut seen_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !seen_content && fields.first() == Some(&"n") {
            seen_content = true;
            if fields.len() != 2 {
                return Err(parse_err(line_no, "expected `n <count>`"));
            }
            let count = fields[1]
                .parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("invalid vertex count `{}`", fields[1])))?;
            declared = Some(count);
            continue;
        }
        seen_content = true;
        if fields.len() != 2 {
            return Err(parse_err(
                line_no,
                format!("expected two vertex indices, found {} fields", fields.len()),
            ));
        }
        let mut ends = [0usize; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            *slot = field
                .parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("invalid vertex index `{field}`")))?;
        }
        if ends[0] == ends[1] {
            return Err(GraphError::SelfLoop {
                line: line_no,
                vertex: ends[0],
            });
        }
        pairs.push((ends[0], ends[1], line_no));
    }

    let implied = pairs.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(count) => {
            if let Some(&(u, v, line)) = pairs.iter().find(|&&(u, v, _)| u.max(v) >= count) {
                return Err(parse_err(
                    line,
                    format!("edge {u} {v} exceeds declared vertex count {count}"),
                ));
            }
            count
        }
        None => implied,
    };

    let mut g = Graph::empty(n);
    for (u, v, line) in pairs {
        g.add_edge(u, v, line)?;
    }
    Ok(g)
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

/// Hop counts from one source; `None` marks an unreachable vertex.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Option<usize>>, GraphError> {
    if source >= g.n {
        return Err(GraphError::VertexOutOfRange { vertex: source, n: g.n });
    }
    let mut dist = vec![None; g.n];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap_or_default();
        for v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

/// All-pairs hop distances, one BFS per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<usize>>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Distance between `u` and `v`, or `None` when they are disconnected.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.dist[u * self.n + v]
    }

    /// Distance between two vertices known to be connected.
    ///
    /// Panics if `u` and `v` lie in different components.
    pub fn hops(&self, u: usize, v: usize) -> usize {
        self.get(u, v)
            .unwrap_or_else(|| panic!("vertices {u} and {v} are not connected"))
    }

    pub fn row(&self, u: usize) -> &[Option<usize>] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let mut dist = Vec::with_capacity(g.n * g.n);
    for s in 0..g.n {
        dist.extend(bfs_distances(g, s).expect("source in range"));
    }
    DistanceMatrix { n: g.n, dist }
}

/// True iff every vertex is reachable from vertex 0.
pub fn check_connected(g: &Graph) -> bool {
    first_unreachable(g).is_none()
}

/// Some vertex not reachable from vertex 0, if the graph is disconnected.
pub fn first_unreachable(g: &Graph) -> Option<usize> {
    if g.n <= 1 {
        return None;
    }
    let dist = bfs_distances(g, 0).expect("vertex 0 exists");
    dist.iter().position(Option::is_none)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::White => "white",
            Color::Black => "black",
        })
    }
}

/// A proper two-coloring of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColoring {
    colors: Vec<Color>,
}

impl TwoColoring {
    pub fn from_colors(colors: Vec<Color>) -> Self {
        TwoColoring { colors }
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn is_white(&self, v: usize) -> bool {
        self.colors[v] == Color::White
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// The same bipartition with the two color classes exchanged.
    pub fn swapped(&self) -> TwoColoring {
        TwoColoring {
            colors: self.colors.iter().map(|c| c.opposite()).collect(),
        }
    }

    /// True iff every edge joins a white vertex to a black one.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count() && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Two-colors the graph with vertex 0 white.
///
/// Every component is colored from its smallest vertex, which is made
/// white. On failure the error carries an odd cycle, listed as consecutive
/// adjacent vertices (the last vertex is adjacent to the first).
pub fn two_color(g: &Graph) -> Result<TwoColoring, GraphError> {
    let mut color: Vec<Option<Color>> = vec![None; g.n];
    let mut parent = vec![usize::MAX; g.n];
    let mut depth = vec![0usize; g.n];

    for root in 0..g.n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(Color::White);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(cu.opposite());
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        return Err(GraphError::NotBipartite {
                            cycle: odd_cycle(u, v, &parent, &depth),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }

    Ok(TwoColoring {
        colors: color.into_iter().map(|c| c.expect("all colored")).collect(),
    })
}

// Closes the BFS-tree paths from `u` and `v` up to their common ancestor
// with the edge u-v.
fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    // up_a ends at the ancestor; drop it from up_b and walk back down to v.
    up_b.pop();
    up_a.extend(up_b.into_iter().rev());
    up_a
}

/// Relabels vertices by a permutation: vertex `v` becomes `perm[v]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.vertex_count(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v])))
        .expect("a permutation keeps the graph simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn parses_simple_path() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_empty_text() {
        let g = parse_edge_list("").unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_lines_collapse() {
        let g = parse_edge_list("0 1\n0 1").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        let g = parse_edge_list("0 1\n1 0").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn header_and_comments() {
        let g = parse_edge_list("# a comment\n\nn 5\n0 1\n   # indented comment\n3 1\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges(), &[(0, 1), (1, 3)]);
        assert_eq!(g.degree(4), 0);
    }

    #[test]
    fn header_too_small_is_rejected() {
        let err = parse_edge_list("n 2\n0 2\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        assert!(matches!(
            parse_edge_list("0 1\n1 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n\n1 2 3\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("-1 2\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\nn 4\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn self_loop_is_rejected() {
        assert_eq!(
            parse_edge_list("0 1\n2 2\n"),
            Err(GraphError::SelfLoop { line: 2, vertex: 2 })
        );
        assert!(matches!(
            Graph::new(3, [(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1, .. })
        ));
    }

    #[test]
    fn out_of_range_edge_is_rejected() {
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = cycle(5);
        for u in 0..5 {
            for v in g.neighbors(u) {
                assert!(g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn bfs_examples() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(bfs_distances(&p3, 0).unwrap(), vec![Some(0), Some(1), Some(2)]);
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(bfs_distances(&k2, 1).unwrap(), vec![Some(1), Some(0)]);
        let two = Graph::empty(2);
        assert_eq!(bfs_distances(&two, 0).unwrap(), vec![Some(0), None]);
        assert!(matches!(
            bfs_distances(&two, 2),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn all_pairs_examples() {
        let c6 = cycle(6);
        let dm = all_pairs_distances(&c6);
        assert_eq!(dm.get(0, 3), Some(3));
        assert_eq!(dm.get(1, 5), Some(2));
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let dm = all_pairs_distances(&k2);
        assert_eq!(dm.row(0), &[Some(0), Some(1)]);
        assert_eq!(dm.row(1), &[Some(1), Some(0)]);
        assert_eq!(all_pairs_distances(&cycle(4)).get(0, 2), Some(2));
    }

    #[test]
    fn coloring_examples() {
        let c6 = two_color(&cycle(6)).unwrap();
        for v in 0..6 {
            let expected = if v % 2 == 0 { Color::White } else { Color::Black };
            assert_eq!(c6.color(v), expected);
        }
        let k2 = two_color(&Graph::new(2, [(0, 1)]).unwrap()).unwrap();
        assert_eq!(k2.colors(), &[Color::White, Color::Black]);
        match two_color(&cycle(3)) {
            Err(GraphError::NotBipartite { cycle }) => assert_eq!(cycle.len(), 3),
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn odd_cycle_witness_is_a_closed_walk() {
        // C7 with a pendant path, so the conflict is found deep in the BFS tree.
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i + 2, (i + 1) % 7 + 2)).collect();
        edges.push((0, 1));
        edges.push((1, 2));
        let g = Graph::new(9, edges).unwrap();
        let Err(GraphError::NotBipartite { cycle }) = two_color(&g) else {
            panic!("C7 is not bipartite");
        };
        assert_eq!(cycle.len() % 2, 1);
        for i in 0..cycle.len() {
            assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn connectivity_examples() {
        assert!(check_connected(&cycle(6)));
        assert!(!check_connected(&Graph::empty(2)));
        assert!(check_connected(&Graph::empty(1)));
        assert!(check_connected(&Graph::empty(0)));
        assert_eq!(first_unreachable(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()), Some(2));
    }

    #[test]
    fn swapped_coloring_is_still_proper() {
        let g = cycle(8);
        let c = two_color(&g).unwrap();
        let s = c.swapped();
        assert!(s.is_proper(&g));
        assert_eq!(s.color(0), Color::Black);
    }
}
