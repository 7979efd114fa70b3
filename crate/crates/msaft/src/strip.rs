//! Strip graph of secant columns, lattice-path counting, reflection
//! arguments, and the determinant count of maximal secant sets.
//!
//! Secants are arranged in n+1 columns, column k holding parallel family
//! k mod n and column n repeating column 0. Edges are right-neighbor moves,
//! so directed paths across the strip are exactly the secant walks read off
//! column by column. The same picture embeds in the integer lattice: secant
//! {a,b} (unwrapped endpoints, a <= b) sits at (a+b, -(b-a)), steps are
//! (1,1) and (1,-1), and the strip is -n <= y <= 0.

use crate::binom::{binom, BigCount};
use crate::error::Error;
use crate::ngon::{NGon, Secant, SecantSet};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Secant sitting at lattice point (x, y), which must have x + y even.
/// The endpoints are (x+y)/2 and (x-y)/2 reduced mod n.
pub fn secant_at_lattice_point(n: usize, x: i64, y: i64) -> Secant {
    assert!((x + y) % 2 == 0, "lattice points satisfy x + y even");
    let ni = n as i64;
    let a = ((x + y) / 2).rem_euclid(ni);
    let b = ((x - y) / 2).rem_euclid(ni);
    Secant::new(a as usize, b as usize)
}

/// Directed acyclic graph of secants in n+1 columns.
///
/// Rows within a column run top to bottom in lattice order (y descending).
/// Vertex ids are contiguous, column-major, so ids are topologically sorted.
pub struct StripGraph {
    n: usize,
    columns: Vec<Vec<Secant>>,
    col_offsets: Vec<u32>,
    adj: Vec<Vec<u32>>,
}

/// Builds the strip graph: columns from the lattice picture, edges from
/// right-neighbor moves. Panics if a column repeats a secant or holds one
/// outside its family, neither of which can happen for a correct neighbor
/// rule.
pub fn build_strip_graph(g: &NGon) -> StripGraph {
    let n = g.n();
    let ni = n as i64;
    let mut columns: Vec<Vec<Secant>> = Vec::with_capacity(n + 1);
    for x in 0..=ni {
        let mut col = Vec::new();
        let mut y = -(x & 1);
        while y >= -ni {
            col.push(secant_at_lattice_point(n, x, y));
            y -= 2;
        }
        columns.push(col);
    }

    let mut col_offsets = Vec::with_capacity(n + 2);
    let mut total = 0u32;
    for col in &columns {
        col_offsets.push(total);
        total += col.len() as u32;
    }
    col_offsets.push(total);

    let mut row_of: Vec<HashMap<Secant, u32>> = Vec::with_capacity(n + 1);
    for (x, col) in columns.iter().enumerate() {
        let mut rows = HashMap::with_capacity(col.len());
        for (r, &s) in col.iter().enumerate() {
            assert_eq!(g.family_of(s), x % n, "column {x} holds family {} only", x % n);
            let prev = rows.insert(s, r as u32);
            assert!(prev.is_none(), "duplicate secant {s} in column {x}");
        }
        row_of.push(rows);
    }

    let mut adj = vec![Vec::new(); total as usize];
    for x in 0..n {
        for (r, &s) in columns[x].iter().enumerate() {
            let id = (col_offsets[x] + r as u32) as usize;
            for t in g.right_neighbors(s) {
                let tr = row_of[x + 1][&t];
                adj[id].push(col_offsets[x + 1] + tr);
            }
            adj[id].sort_unstable();
        }
    }

    StripGraph {
        n,
        columns,
        col_offsets,
        adj,
    }
}

impl StripGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The n+1 columns, each a top-to-bottom list of secants.
    pub fn columns(&self) -> &[Vec<Secant>] {
        &self.columns
    }

    pub fn vertex_count(&self) -> usize {
        *self.col_offsets.last().unwrap() as usize
    }

    pub fn vertex_id(&self, col: usize, row: usize) -> u32 {
        assert!(row < self.columns[col].len());
        self.col_offsets[col] + row as u32
    }

    /// Inverse of vertex_id.
    pub fn column_row(&self, id: u32) -> (usize, usize) {
        let col = self.col_offsets.partition_point(|&o| o <= id) - 1;
        (col, (id - self.col_offsets[col]) as usize)
    }

    pub fn secant_of(&self, id: u32) -> Secant {
        let (col, row) = self.column_row(id);
        self.columns[col][row]
    }

    pub fn out_neighbors(&self, id: u32) -> &[u32] {
        &self.adj[id as usize]
    }

    /// Number of path labels: 0..=floor(n/2).
    pub fn label_count(&self) -> usize {
        self.n / 2 + 1
    }

    /// Vertex of label i in column 0, the secant {i, (n-i) mod n}.
    pub fn start_vertex(&self, label: usize) -> u32 {
        assert!(label < self.label_count());
        self.vertex_id(0, label)
    }

    /// Vertex of label j in column n: the same secant as label j in
    /// column 0, sitting at lattice height -n+2j.
    pub fn end_vertex(&self, label: usize) -> u32 {
        assert!(label < self.label_count());
        // Label j sits at height y = -n + 2j; the column top is 0 or -1.
        let y_top = -((self.n as i64) & 1);
        let row = (y_top + self.n as i64 - 2 * label as i64) / 2;
        self.vertex_id(self.n, row as usize)
    }
}

/// Exact number of column-0-to-column-n paths between two labels, by
/// forward dynamic programming over the topologically sorted vertex ids.
pub fn count_paths(sg: &StripGraph, i: usize, j: usize) -> BigCount {
    let mut weight = vec![BigCount::zero(); sg.vertex_count()];
    weight[sg.start_vertex(i) as usize] = BigCount::one();
    for id in 0..sg.vertex_count() {
        if weight[id].is_zero() {
            continue;
        }
        let w = weight[id].clone();
        for &t in sg.out_neighbors(id as u32) {
            weight[t as usize] += &w;
        }
    }
    weight[sg.end_vertex(j) as usize].clone()
}

/// Closed form for the bounded path count:
/// `C(n,i+j) - C(n,j-i-1) - C(n,i-j-1)`.
pub fn e_closed(g: &NGon, i: usize, j: usize) -> BigCount {
    let n = g.n() as u64;
    assert!(i <= g.n() / 2 && j <= g.n() / 2, "labels range over 0..=n/2");
    let (i, j) = (i as i64, j as i64);
    let v = BigInt::from(binom(n, i + j))
        - BigInt::from(binom(n, j - i - 1))
        - BigInt::from(binom(n, i - j - 1));
    assert!(v >= BigInt::zero(), "bounded path count cannot be negative");
    v.try_into().expect("nonnegative by assertion")
}

/// Closed form for the unbounded path count `C(n, i+j)`; labels may be
/// negative (reflected endpoints), where the count is 0 for i+j < 0.
pub fn e_unbounded_closed(g: &NGon, i: i64, j: i64) -> BigCount {
    binom(g.n() as u64, i + j)
}

/// Symmetric matrix of bounded path counts e(i,j), labels 0..=floor(n/2).
pub struct PathMatrix {
    size: usize,
    entries: Vec<BigCount>,
}

impl PathMatrix {
    /// Fills the matrix by dynamic programming on the strip graph.
    pub fn from_counts(sg: &StripGraph) -> PathMatrix {
        let size = sg.label_count();
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            let mut weight = vec![BigCount::zero(); sg.vertex_count()];
            weight[sg.start_vertex(i) as usize] = BigCount::one();
            for id in 0..sg.vertex_count() {
                if weight[id].is_zero() {
                    continue;
                }
                let w = weight[id].clone();
                for &t in sg.out_neighbors(id as u32) {
                    weight[t as usize] += &w;
                }
            }
            for j in 0..size {
                entries.push(weight[sg.end_vertex(j) as usize].clone());
            }
        }
        PathMatrix { size, entries }
    }

    /// Fills the matrix from the closed form, no graph needed.
    pub fn from_closed_form(g: &NGon) -> PathMatrix {
        let size = g.n() / 2 + 1;
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(e_closed(g, i, j));
            }
        }
        PathMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigCount {
        assert!(i < self.size && j < self.size);
        &self.entries[i * self.size + j]
    }
}

/// Counts maximal forbidden-triple-free secant sets as a sum of 2x2 path
/// determinants: for each label pair i < j the disjoint-path-pair count is
/// e(i,j)^2 - e(i,i)e(j,j).
pub fn count_msafts_lgv(g: &NGon) -> BigCount {
    let m = PathMatrix::from_closed_form(g);
    let mut total = BigCount::zero();
    for i in 0..m.size() {
        for j in i + 1..m.size() {
            let d = BigInt::from(m.entry(i, j) * m.entry(j, i))
                - BigInt::from(m.entry(i, i) * m.entry(j, j));
            assert!(
                d >= BigInt::zero(),
                "pair ({i},{j}) has a negative disjoint-path count"
            );
            total += BigCount::try_from(d).expect("nonnegative by assertion");
        }
    }
    total
}

/// All paths between two labels, each as its vertex-id sequence.
/// Exhaustive; intended for small n.
pub fn enumerate_paths(sg: &StripGraph, i: usize, j: usize) -> Vec<Vec<u32>> {
    let target = sg.end_vertex(j);
    let mut out = Vec::new();
    let mut stack = vec![sg.start_vertex(i)];
    dfs_paths(sg, target, &mut stack, &mut out);
    out
}

fn dfs_paths(sg: &StripGraph, target: u32, stack: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let cur = *stack.last().unwrap();
    if cur == target {
        out.push(stack.clone());
        return;
    }
    for &t in sg.out_neighbors(cur) {
        stack.push(t);
        dfs_paths(sg, target, stack, out);
        stack.pop();
    }
}

/// All vertex-disjoint pairs (P, Q) with P from label i1 to label i2 and Q
/// from label i2 to label i1, for a label pair A = {i1 < i2}. These are the
/// only disjoint routings: keeping both endpoints forces a crossing, hence
/// a shared vertex.
pub fn enumerate_disjoint_path_pairs(
    sg: &StripGraph,
    a: (usize, usize),
) -> Vec<(Vec<u32>, Vec<u32>)> {
    let (i1, i2) = (a.0.min(a.1), a.0.max(a.1));
    assert!(i1 != i2, "the label pair must have two distinct labels");
    let ps = enumerate_paths(sg, i1, i2);
    let qs = enumerate_paths(sg, i2, i1);
    let words = sg.vertex_count().div_ceil(64);
    let mask = |path: &[u32]| {
        let mut m = vec![0u64; words];
        for &v in path {
            m[v as usize / 64] |= 1u64 << (v % 64);
        }
        m
    };
    let pmasks: Vec<Vec<u64>> = ps.iter().map(|p| mask(p)).collect();
    let qmasks: Vec<Vec<u64>> = qs.iter().map(|q| mask(q)).collect();
    let mut out = Vec::new();
    for (p, pm) in ps.iter().zip(&pmasks) {
        for (q, qm) in qs.iter().zip(&qmasks) {
            if pm.iter().zip(qm).all(|(a, b)| a & b == 0) {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    out
}

/// The set of secants a path's vertices pass through.
pub fn path_secants(sg: &StripGraph, path: &[u32]) -> SecantSet {
    let g = NGon::new(sg.n());
    let mut set = SecantSet::new(&g);
    for &v in path {
        set.insert(sg.secant_of(v));
    }
    set
}

/// One diagonal lattice step.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    fn dy(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }
}

/// Lattice path: a start point and a sequence of diagonal steps.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticePath {
    start: (i64, i64),
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: (i64, i64), steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    pub fn start(&self) -> (i64, i64) {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn end(&self) -> (i64, i64) {
        let y: i64 = self.start.1 + self.steps.iter().map(|s| s.dy()).sum::<i64>();
        (self.start.0 + self.steps.len() as i64, y)
    }

    /// The steps.len()+1 visited points.
    pub fn positions(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = self.start;
        out.push((x, y));
        for s in &self.steps {
            x += 1;
            y += s.dy();
            out.push((x, y));
        }
        out
    }
}

/// The two lines just outside the strip.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum StripBoundary {
    Top,
    Bottom,
}

impl StripBoundary {
    /// y = 1 above the strip, y = -n-1 below it.
    pub fn line(self, n: usize) -> i64 {
        match self {
            StripBoundary::Top => 1,
            StripBoundary::Bottom => -(n as i64) - 1,
        }
    }
}

/// Reflects a boundary-touching path across the boundary line: the segment
/// up to the first touch for Top (moving the start), the segment after the
/// first touch for Bottom (moving the end). An involution on the set of
/// touching paths; fails on paths that never touch the line.
pub fn reflect_path(n: usize, p: &LatticePath, b: StripBoundary) -> Result<LatticePath, Error> {
    let line = b.line(n);
    let t = p
        .positions()
        .iter()
        .position(|&(_, y)| y == line)
        .ok_or(Error::NoBoundaryTouch { line })?;
    let mut steps = p.steps.clone();
    match b {
        StripBoundary::Top => {
            for s in &mut steps[..t] {
                *s = s.flip();
            }
            Ok(LatticePath::new((p.start.0, 2 * line - p.start.1), steps))
        }
        StripBoundary::Bottom => {
            for s in &mut steps[t..] {
                *s = s.flip();
            }
            Ok(LatticePath::new(p.start, steps))
        }
    }
}
