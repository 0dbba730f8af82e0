//! Bipartiteness, short cycles, Hamiltonian walks, chromatic numbers and
//! the Heawood number.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::KSignature;
use crate::quotient::{build_heawood_graph, QuotientGraph};
use crate::tiling::{self, OrderedPartition, TilingFace, TilingVertex};

/// Default vertex bound for exact chromatic search.
pub const CHROMATIC_CAP: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// A proper 2-coloring.
    Coloring(Vec<u8>),
    /// A closed walk of odd length, listed without repeating its start.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Coloring(_))
    }
}

/// BFS 2-coloring, with a witness either way.
pub fn is_bipartite(g: &Graph) -> Bipartition {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return Bipartition::OddCycle(odd_cycle(&parent, v, u));
                }
            }
        }
    }
    Bipartition::Coloring(color)
}

fn odd_cycle(parent: &[usize], a: usize, b: usize) -> Vec<usize> {
    let path = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let pa = path(a);
    let pb = path(b);
    let on_a: BTreeSet<usize> = pa.iter().copied().collect();
    let meet = *pb.iter().find(|v| on_a.contains(v)).expect("same BFS tree");
    let mut cycle: Vec<usize> = pa.iter().copied().take_while(|&v| v != meet).collect();
    cycle.push(meet);
    let mut back: Vec<usize> = pb.iter().copied().take_while(|&v| v != meet).collect();
    back.reverse();
    cycle.extend(back);
    cycle
}

/// Minimal rotation/reflection of a cyclic sequence.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..n {
        for dir in [false, true] {
            let cand: Vec<usize> = (0..n)
                .map(|i| {
                    if dir {
                        cycle[(start + n - i) % n]
                    } else {
                        cycle[(start + i) % n]
                    }
                })
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Simple cycles of exactly `len` vertices through `v`, each listed once,
/// starting at `v`, in the lexicographically smaller direction.
pub fn simple_cycles_through(g: &Graph, v: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = BTreeSet::new();
    if len < 3 {
        return Vec::new();
    }
    let mut path = vec![v];
    let mut on_path = vec![false; g.vertex_count()];
    on_path[v] = true;
    extend_path(g, len, &mut path, &mut on_path, &mut out);
    out.into_iter().collect()
}

fn extend_path(
    g: &Graph,
    len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut BTreeSet<Vec<usize>>,
) {
    let last = *path.last().expect("nonempty");
    if path.len() == len {
        if g.has_edge(last, path[0]) && path[1] < path[len - 1] {
            out.insert(path.clone());
        }
        return;
    }
    for &u in g.neighbors(last) {
        if !on_path[u] {
            on_path[u] = true;
            path.push(u);
            extend_path(g, len, path, on_path, out);
            path.pop();
            on_path[u] = false;
        }
    }
}

/// All simple cycles of length `3..=max_len`, each in canonical form.
pub fn cycles_up_to(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let mut set = BTreeSet::new();
    for v in 0..g.vertex_count() {
        for len in 3..=max_len {
            for c in simple_cycles_through(g, v, len) {
                set.insert(canonical_cycle(&c));
            }
        }
    }
    set.into_iter().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleClass {
    HexagonFace,
    SquareFace,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub length: usize,
    pub vertices: Vec<usize>,
    pub classification: CycleClass,
}

/// Vertex sets (as sorted quotient indices) of the 2-faces of the tiling
/// at vertex `v`, each tagged hexagon or square.
pub fn two_faces_at(q: &QuotientGraph, v: usize) -> Result<Vec<(Vec<usize>, CycleClass)>> {
    let n = q.d() + 1;
    if n < 3 {
        return Ok(Vec::new());
    }
    let x = q.vertex(v);
    let mut out = Vec::new();
    for t in x.tiles_containing() {
        for p in OrderedPartition::all_with_blocks(n, n - 2) {
            let face = TilingFace::new(p, t.clone());
            let verts = tiling::face_vertices(&face);
            if !verts.contains(x) {
                continue;
            }
            let mut ids = verts
                .iter()
                .map(|y| q.index_of(y))
                .collect::<Result<Vec<_>>>()?;
            ids.sort_unstable();
            let class = if face.partition.blocks().iter().any(|b| b.len() == 3) {
                CycleClass::HexagonFace
            } else {
                CycleClass::SquareFace
            };
            let entry = (ids, class);
            if !out.contains(&entry) {
                out.push(entry);
            }
        }
    }
    Ok(out)
}

/// Simple cycles of length `len` through `v`, classified by whether their
/// vertex set is a 2-face of the tiling.
pub fn cycles_through(q: &QuotientGraph, v: usize, len: usize) -> Result<Vec<CycleReport>> {
    let faces = two_faces_at(q, v)?;
    Ok(simple_cycles_through(q.graph(), v, len)
        .into_iter()
        .map(|c| {
            let mut set = c.clone();
            set.sort_unstable();
            let classification = faces
                .iter()
                .find(|(ids, _)| *ids == set)
                .map_or(CycleClass::Other, |(_, class)| *class);
            CycleReport {
                length: len,
                vertices: c,
                classification,
            }
        })
        .collect())
}

pub fn six_cycles_through(q: &QuotientGraph, v: usize) -> Result<Vec<CycleReport>> {
    cycles_through(q, v, 6)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonianOutcome {
    /// Vertex indices in walk order; the cycle closes back to the first.
    HamiltonianCycle(Vec<usize>),
    /// The walk revisited a vertex after `length` distinct vertices.
    PrematureClosure { length: usize },
    /// The search space was exhausted.
    NoneFound,
    /// The search budget ran out first.
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkMode {
    Alternating(usize),
    Backtracking,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianWalkResult {
    pub mode: WalkMode,
    pub outcome: HamiltonianOutcome,
    pub vertex_count: usize,
}

/// Whether `cycle` visits every vertex once and consecutive entries
/// (cyclically) are adjacent.
pub fn is_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Walks from `(1, …, d+1)` using alternately the edge along
/// `e_i − e_{i+1}` and the edge along `e_{i−1} − e_i` (1-based, cyclic),
/// and stops at the first revisited vertex.
///
/// Each step moves one unit between the two coordinates in whichever
/// direction is an edge. For `d = 2` exactly one direction always is; for
/// larger `d` the move can fail, which is reported as
/// [`Error::InvalidMove`].
pub fn hamiltonian_alternating(k: &KSignature, i: usize) -> Result<HamiltonianWalkResult> {
    let q = build_heawood_graph(k)?;
    hamiltonian_alternating_on(&q, i)
}

pub fn hamiltonian_alternating_on(q: &QuotientGraph, i: usize) -> Result<HamiltonianWalkResult> {
    let n = q.d() + 1;
    if i == 0 || i > n {
        return Err(Error::Shape {
            expected: n,
            found: i,
        });
    }
    let a = i - 1;
    let pairs = [(a, (a + 1) % n), ((a + n - 1) % n, a)];
    let start = q.index_of(&TilingVertex::seed(q.d()))?;
    let mut seen = vec![false; q.vertex_count()];
    let mut walk = vec![start];
    seen[start] = true;
    let mut x = q.vertex(start).clone();
    for step in 0.. {
        let (p, r) = pairs[step % 2];
        let next = x
            .step(r, p)
            .or_else(|| x.step(p, r))
            .ok_or(Error::InvalidMove { step })?;
        let j = q.index_of(&next)?;
        debug_assert!(q.graph().has_edge(*walk.last().expect("nonempty"), j));
        if seen[j] {
            let outcome = if j == start && walk.len() == q.vertex_count() && step % 2 == 1 {
                debug_assert!(is_hamiltonian_cycle(q.graph(), &walk));
                HamiltonianOutcome::HamiltonianCycle(walk)
            } else {
                HamiltonianOutcome::PrematureClosure { length: walk.len() }
            };
            return Ok(HamiltonianWalkResult {
                mode: WalkMode::Alternating(i),
                outcome,
                vertex_count: q.vertex_count(),
            });
        }
        seen[j] = true;
        walk.push(j);
        x = next;
    }
    unreachable!()
}

/// Depth-first search for a Hamiltonian cycle, trying the neighbor with
/// the fewest free neighbors first. `budget` bounds the number of search
/// nodes.
pub fn hamiltonian_backtracking(g: &Graph, budget: u64) -> HamiltonianWalkResult {
    let n = g.vertex_count();
    let done = |outcome| HamiltonianWalkResult {
        mode: WalkMode::Backtracking,
        outcome,
        vertex_count: n,
    };
    if n < 3 || g.adjacency().iter().any(|l| l.len() < 2) || !g.is_connected() {
        return done(HamiltonianOutcome::NoneFound);
    }
    let mut st = HamSearch {
        g,
        path: vec![0],
        used: vec![false; n],
        free_degree: (0..n).map(|v| g.degree(v)).collect(),
        nodes: 0,
        budget,
    };
    st.used[0] = true;
    for &u in g.neighbors(0) {
        st.free_degree[u] -= 1;
    }
    match st.search() {
        Some(true) => done(HamiltonianOutcome::HamiltonianCycle(st.path)),
        Some(false) => done(HamiltonianOutcome::NoneFound),
        None => done(HamiltonianOutcome::Indeterminate),
    }
}

struct HamSearch<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    used: Vec<bool>,
    // unused neighbors of each vertex
    free_degree: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl HamSearch<'_> {
    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn search(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let n = self.g.vertex_count();
        let last = *self.path.last().expect("nonempty");
        if self.path.len() == n {
            return Some(self.g.has_edge(last, 0));
        }
        // an unused vertex needs two ways in: free neighbors, plus the
        // current end or the start
        for v in 0..n {
            if !self.used[v] {
                let extra =
                    usize::from(self.g.has_edge(v, last)) + usize::from(self.g.has_edge(v, 0));
                if self.free_degree[v] + extra.min(2) < 2 {
                    return Some(false);
                }
            }
        }
        let mut next: Vec<usize> = self
            .g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&u| !self.used[u])
            .collect();
        next.sort_by_key(|&u| (self.free_degree[u], u));
        for u in next {
            self.used[u] = true;
            for &w in self.g.neighbors(u) {
                self.free_degree[w] -= 1;
            }
            self.path.push(u);
            let r = self.search();
            if r != Some(false) {
                return r;
            }
            self.path.pop();
            for &w in self.g.neighbors(u) {
                self.free_degree[w] += 1;
            }
            self.used[u] = false;
        }
        Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticBounds {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    /// A proper coloring with `upper` colors.
    pub coloring: Vec<usize>,
}

impl ChromaticBounds {
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.upper)
    }
}

/// DSATUR gives an upper bound, a greedy clique and odd cycles a lower
/// bound; below `cap` vertices a backtracking search closes the gap.
pub fn chromatic_number(g: &Graph, cap: usize) -> ChromaticBounds {
    let n = g.vertex_count();
    if n == 0 {
        return ChromaticBounds {
            lower: 0,
            upper: 0,
            exact: true,
            coloring: Vec::new(),
        };
    }
    let mut coloring = dsatur(g);
    let mut upper = coloring.iter().max().map_or(0, |&c| c + 1);
    let mut lower = greedy_clique(g).max(1);
    if g.edge_count() > 0 {
        lower = lower.max(2);
    }
    if !is_bipartite(g).is_bipartite() {
        lower = lower.max(3);
    }
    if n > cap {
        return ChromaticBounds {
            lower,
            upper,
            exact: lower == upper,
            coloring,
        };
    }
    while lower < upper {
        match color_with(g, upper - 1) {
            Some(c) => {
                coloring = c;
                upper -= 1;
            }
            None => lower = upper,
        }
    }
    ChromaticBounds {
        lower,
        upper,
        exact: true,
        coloring,
    }
}

fn dsatur(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut sat: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (sat[v].len(), g.degree(v), core::cmp::Reverse(v)))
            .expect("uncolored vertex");
        let c = (0..).find(|c| !sat[v].contains(c)).expect("free color");
        color[v] = c;
        for &u in g.neighbors(v) {
            sat[u].insert(c);
        }
    }
    color
}

fn greedy_clique(g: &Graph) -> usize {
    let mut best = 0;
    for v in 0..g.vertex_count() {
        let mut clique = vec![v];
        let mut cand: Vec<usize> = g.neighbors(v).to_vec();
        cand.sort_by_key(|&u| core::cmp::Reverse(g.degree(u)));
        for u in cand {
            if clique.iter().all(|&w| g.has_edge(u, w)) {
                clique.push(u);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// A proper coloring with at most `k` colors, by DSATUR-ordered
/// backtracking with symmetry breaking on fresh colors.
fn color_with(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    if backtrack_color(g, k, &mut color, 0, 0) {
        Some(color)
    } else {
        None
    }
}

fn backtrack_color(g: &Graph, k: usize, color: &mut [usize], colored: usize, used: usize) -> bool {
    let n = g.vertex_count();
    if colored == n {
        return true;
    }
    let saturation = |v: usize, color: &[usize]| {
        let mut s: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&u| color[u])
            .filter(|&c| c != usize::MAX)
            .collect();
        s.sort_unstable();
        s.dedup();
        s.len()
    };
    let v = (0..n)
        .filter(|&v| color[v] == usize::MAX)
        .max_by_key(|&v| (saturation(v, color), g.degree(v), core::cmp::Reverse(v)))
        .expect("uncolored vertex");
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().any(|&u| color[u] == c) {
            continue;
        }
        color[v] = c;
        if backtrack_color(g, k, color, colored + 1, used.max(c + 1)) {
            return true;
        }
        color[v] = usize::MAX;
    }
    false
}

/// `⌊(7 + √(1 + 48p)) / 2⌋`, in integer arithmetic.
pub fn heawood_number(p: u64) -> u64 {
    let r = (1u128 + 48 * u128::from(p)).sqrt();
    ((7 + r) / 2) as u64
}
