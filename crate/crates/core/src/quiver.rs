//! Quivers embedded in the two-torus as square grids, plus the abstract
//! (embedding-free) quivers that mutation and the counterexample fixtures use.
//!
//! Grid conventions: vertices sit at integer cells `(col, row)` with
//! `0 <= col < n`, `0 <= row < m`. The torus identification is
//! `(col, m) ~ (col + shift, 0)` and `(n, row) ~ (0, row)`. Rows increase
//! upward, so "clockwise" means negative shoelace area in `(col, row)`.

use crate::error::{Error, Result};
use crate::monomial::Monomial4;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub type VertexId = usize;
pub type ArrowId = usize;

/// The eight geometric arrow classes on the square grid.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum ArrowClass {
    E,
    W,
    N,
    S,
    NE,
    SW,
    SE,
    NW,
}

impl ArrowClass {
    pub const ALL: [ArrowClass; 8] = [
        ArrowClass::E,
        ArrowClass::W,
        ArrowClass::N,
        ArrowClass::S,
        ArrowClass::NE,
        ArrowClass::SW,
        ArrowClass::SE,
        ArrowClass::NW,
    ];

    /// Grid displacement head - tail.
    pub fn displacement(self) -> (i64, i64) {
        match self {
            ArrowClass::E => (1, 0),
            ArrowClass::W => (-1, 0),
            ArrowClass::N => (0, 1),
            ArrowClass::S => (0, -1),
            ArrowClass::NE => (1, 1),
            ArrowClass::SW => (-1, -1),
            ArrowClass::SE => (1, -1),
            ArrowClass::NW => (-1, 1),
        }
    }

    /// The monomial label in k[x1,x2,y1,y2] attached to this class.
    pub fn monomial(self) -> Monomial4 {
        match self {
            ArrowClass::E => Monomial4::new(1, 0, 0, 0),
            ArrowClass::W => Monomial4::new(0, 1, 0, 0),
            ArrowClass::N => Monomial4::new(0, 0, 1, 0),
            ArrowClass::S => Monomial4::new(0, 0, 0, 1),
            ArrowClass::NE => Monomial4::new(1, 0, 1, 0),
            ArrowClass::SW => Monomial4::new(0, 1, 0, 1),
            ArrowClass::SE => Monomial4::new(1, 0, 0, 1),
            ArrowClass::NW => Monomial4::new(0, 1, 1, 0),
        }
    }

    pub fn from_monomial(m: &Monomial4) -> Option<ArrowClass> {
        ArrowClass::ALL.into_iter().find(|c| c.monomial() == *m)
    }

    pub fn opposite(self) -> ArrowClass {
        match self {
            ArrowClass::E => ArrowClass::W,
            ArrowClass::W => ArrowClass::E,
            ArrowClass::N => ArrowClass::S,
            ArrowClass::S => ArrowClass::N,
            ArrowClass::NE => ArrowClass::SW,
            ArrowClass::SW => ArrowClass::NE,
            ArrowClass::SE => ArrowClass::NW,
            ArrowClass::NW => ArrowClass::SE,
        }
    }

    pub fn is_diagonal(self) -> bool {
        matches!(
            self,
            ArrowClass::NE | ArrowClass::SW | ArrowClass::SE | ArrowClass::NW
        )
    }

    /// Counterclockwise compass index: E=0, NE=1, N=2, NW=3, W=4, SW=5, S=6, SE=7.
    pub fn compass(self) -> usize {
        match self {
            ArrowClass::E => 0,
            ArrowClass::NE => 1,
            ArrowClass::N => 2,
            ArrowClass::NW => 3,
            ArrowClass::W => 4,
            ArrowClass::SW => 5,
            ArrowClass::S => 6,
            ArrowClass::SE => 7,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
}

/// One unit cycle: the oriented boundary of a diagonal-free unit square, or
/// an oriented triangle with two unit-length sides. Arrows are listed in
/// traversal order (first traversed first).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnitCycle {
    pub arrows: Vec<ArrowId>,
    pub orientation: Orientation,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Vertex {
    pub id: VertexId,
    pub col: usize,
    pub row: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Arrow {
    pub id: ArrowId,
    pub tail: VertexId,
    pub head: VertexId,
    pub class: ArrowClass,
}

/// Outcome of the square-condition validation. Violations are reported,
/// never thrown.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<String>,
}

/// A quiver on the n x m torus grid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorusQuiver {
    n: usize,
    m: usize,
    shift: usize,
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    /// cell (col, row) -> vertex id
    cell_to_vertex: Vec<VertexId>,
    /// (tail, class) -> arrow id
    by_tail_class: BTreeMap<(VertexId, ArrowClass), ArrowId>,
}

impl TorusQuiver {
    /// Build a torus quiver with row-major vertex ids `row * n + col + 1` and
    /// arrow ids assigned in the order given.
    pub fn from_arrows(
        n: usize,
        m: usize,
        shift: usize,
        arrow_specs: &[(VertexId, VertexId, ArrowClass)],
    ) -> Result<Self> {
        let mut vertices = Vec::with_capacity(n * m);
        for row in 0..m {
            for col in 0..n {
                vertices.push(Vertex { id: row * n + col + 1, col, row });
            }
        }
        let arrows = arrow_specs
            .iter()
            .enumerate()
            .map(|(k, &(tail, head, class))| Arrow { id: k + 1, tail, head, class })
            .collect();
        Self::new(n, m, shift, vertices, arrows)
    }

    pub fn new(
        n: usize,
        m: usize,
        shift: usize,
        vertices: Vec<Vertex>,
        arrows: Vec<Arrow>,
    ) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::Parse("grid dimensions must be positive".into()));
        }
        if shift >= n {
            return Err(Error::Parse(format!("shift {shift} out of range [0, {n})")));
        }
        if vertices.len() != n * m {
            return Err(Error::Parse(format!(
                "expected {} vertices for a {n}x{m} grid, got {}",
                n * m,
                vertices.len()
            )));
        }
        let mut cell_to_vertex = vec![0usize; n * m];
        let mut seen_ids = vec![false; n * m];
        for v in &vertices {
            if v.id == 0 || v.id > n * m || seen_ids[v.id - 1] {
                return Err(Error::Parse(format!("vertex ids must be exactly 1..{}", n * m)));
            }
            seen_ids[v.id - 1] = true;
            if v.col >= n || v.row >= m {
                return Err(Error::Parse(format!(
                    "vertex {} cell ({}, {}) out of grid",
                    v.id, v.col, v.row
                )));
            }
            let cell = v.col * m + v.row;
            if cell_to_vertex[cell] != 0 {
                return Err(Error::Parse(format!("two vertices at cell ({}, {})", v.col, v.row)));
            }
            cell_to_vertex[cell] = v.id;
        }
        let mut q = TorusQuiver {
            n,
            m,
            shift,
            vertices,
            arrows: Vec::new(),
            cell_to_vertex,
            by_tail_class: BTreeMap::new(),
        };
        q.vertices.sort_by_key(|v| v.id);
        let mut seen_arrow = vec![false; arrows.len()];
        for a in &arrows {
            if a.id == 0 || a.id > arrows.len() || seen_arrow[a.id - 1] {
                return Err(Error::Parse(format!("arrow ids must be exactly 1..{}", arrows.len())));
            }
            seen_arrow[a.id - 1] = true;
            if a.tail == 0 || a.tail > n * m {
                return Err(Error::UnknownVertex(a.tail));
            }
            if a.head == 0 || a.head > n * m {
                return Err(Error::UnknownVertex(a.head));
            }
            let (tc, tr) = q.cell_of(a.tail);
            let (dc, dr) = a.class.displacement();
            let expected = q.vertex_at(tc as i64 + dc, tr as i64 + dr);
            if expected != a.head {
                return Err(Error::Parse(format!(
                    "arrow {}: class {:?} from vertex {} should point to {}, not {}",
                    a.id, a.class, a.tail, expected, a.head
                )));
            }
            if q.by_tail_class.insert((a.tail, a.class), a.id).is_some() {
                return Err(Error::Parse(format!(
                    "two arrows with tail {} and class {:?}",
                    a.tail, a.class
                )));
            }
        }
        q.arrows = arrows;
        q.arrows.sort_by_key(|a| a.id);
        Ok(q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> Result<&Arrow> {
        self.arrows.get(id.wrapping_sub(1)).ok_or(Error::UnknownArrow(id))
    }

    pub fn cell_of(&self, v: VertexId) -> (usize, usize) {
        let v = &self.vertices[v - 1];
        (v.col, v.row)
    }

    /// Vertex at an arbitrary cover cell, folded onto the fundamental domain.
    pub fn vertex_at(&self, col: i64, row: i64) -> VertexId {
        let m = self.m as i64;
        let n = self.n as i64;
        let wraps = row.div_euclid(m);
        let r = row.rem_euclid(m);
        let c = (col + wraps * self.shift as i64).rem_euclid(n);
        self.cell_to_vertex[(c as usize) * self.m + r as usize]
    }

    pub fn arrow_from(&self, tail: VertexId, class: ArrowClass) -> Option<ArrowId> {
        self.by_tail_class.get(&(tail, class)).copied()
    }

    /// Arrow realizing a unit step from the cover cell `from` in direction
    /// `class`, either forward or (when `None`) reversed.
    fn step_arrow(&self, from: (i64, i64), class: ArrowClass) -> StepArrow {
        let (dc, dr) = class.displacement();
        let to = (from.0 + dc, from.1 + dr);
        let fwd = self.arrow_from(self.vertex_at(from.0, from.1), class);
        let bwd = self.arrow_from(self.vertex_at(to.0, to.1), class.opposite());
        StepArrow { forward: fwd, backward: bwd }
    }

    /// Check the square-quiver conditions: all boundary edges present, at
    /// most one diagonal per unit square, diagonal-free squares oriented
    /// 4-cycles, triangles oriented 3-cycles.
    pub fn validate_square(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for j in 0..self.m as i64 {
            for i in 0..self.n as i64 {
                self.check_square(i, j, &mut violations);
            }
        }
        ValidationReport { ok: violations.is_empty(), violations }
    }

    fn check_square(&self, i: i64, j: i64, violations: &mut Vec<String>) {
        let a = (i, j);
        let b = (i + 1, j);
        let c = (i + 1, j + 1);
        let d = (i, j + 1);
        let boundary = [
            (a, ArrowClass::E, "bottom"),
            (b, ArrowClass::N, "right"),
            (c, ArrowClass::W, "top"),
            (d, ArrowClass::S, "left"),
        ];
        let steps: Vec<StepArrow> =
            boundary.iter().map(|&(from, cls, _)| self.step_arrow(from, cls)).collect();
        for (s, (_, _, side)) in steps.iter().zip(boundary.iter()) {
            if s.forward.is_none() && s.backward.is_none() {
                violations.push(format!("square ({i},{j}): missing {side} edge"));
            }
            if s.forward.is_some() && s.backward.is_some() {
                violations.push(format!(
                    "square ({i},{j}): {side} edge carries two opposite arrows"
                ));
            }
        }
        let main = self.step_arrow(a, ArrowClass::NE);
        let anti = self.step_arrow(d, ArrowClass::SE);
        for (diag, name) in [(&main, "main"), (&anti, "anti")] {
            if diag.forward.is_some() && diag.backward.is_some() {
                violations.push(format!(
                    "square ({i},{j}): {name} diagonal carries two opposite arrows"
                ));
            }
        }
        if main.present() && anti.present() {
            violations.push(format!("square ({i},{j}): both diagonals present"));
            return;
        }
        if steps.iter().any(|s| !s.present()) {
            return;
        }
        if !main.present() && !anti.present() {
            if self.n == 1 && self.m == 1 {
                // Degenerate one-cell torus: the two loops bound the square
                // twice over; accept when each edge carries a single arrow.
                return;
            }
            let all_fwd = steps.iter().all(|s| s.forward.is_some());
            let all_bwd = steps.iter().all(|s| s.backward.is_some());
            if !(all_fwd || all_bwd) {
                violations.push(format!("square ({i},{j}): boundary is not an oriented 4-cycle"));
            }
        } else {
            let tris = self.square_triangles(i, j, anti.present());
            for (steps, name) in tris {
                let resolved: Vec<StepArrow> =
                    steps.iter().map(|&(from, cls)| self.step_arrow(from, cls)).collect();
                let all_fwd = resolved.iter().all(|s| s.forward.is_some());
                let all_bwd = resolved.iter().all(|s| s.backward.is_some());
                if !(all_fwd || all_bwd) {
                    violations
                        .push(format!("square ({i},{j}): {name} triangle is not oriented"));
                }
            }
        }
    }

    /// The two triangle step-lists of a square with a diagonal, each walked
    /// counterclockwise.
    fn square_triangles(
        &self,
        i: i64,
        j: i64,
        anti: bool,
    ) -> [(Vec<((i64, i64), ArrowClass)>, &'static str); 2] {
        let a = (i, j);
        let b = (i + 1, j);
        let c = (i + 1, j + 1);
        let d = (i, j + 1);
        if anti {
            [
                (
                    vec![(a, ArrowClass::E), (b, ArrowClass::NW), (d, ArrowClass::S)],
                    "lower-left",
                ),
                (
                    vec![(b, ArrowClass::N), (c, ArrowClass::W), (d, ArrowClass::SE)],
                    "upper-right",
                ),
            ]
        } else {
            [
                (
                    vec![(a, ArrowClass::E), (b, ArrowClass::N), (c, ArrowClass::SW)],
                    "lower-right",
                ),
                (
                    vec![(a, ArrowClass::NE), (c, ArrowClass::W), (d, ArrowClass::S)],
                    "upper-left",
                ),
            ]
        }
    }

    /// Enumerate every unit cycle once, with its orientation.
    pub fn unit_cycles(&self) -> Result<Vec<UnitCycle>> {
        let report = self.validate_square();
        if !report.ok {
            return Err(Error::NotSquare(report.violations.join("; ")));
        }
        let mut cycles = Vec::new();
        for j in 0..self.m as i64 {
            for i in 0..self.n as i64 {
                let a = (i, j);
                let b = (i + 1, j);
                let c = (i + 1, j + 1);
                let d = (i, j + 1);
                let main = self.step_arrow(a, ArrowClass::NE);
                let anti = self.step_arrow(d, ArrowClass::SE);
                if !main.present() && !anti.present() {
                    if self.n == 1 && self.m == 1 {
                        cycles.push(self.degenerate_cell_cycle()?);
                        continue;
                    }
                    let steps = [
                        (a, ArrowClass::E),
                        (b, ArrowClass::N),
                        (c, ArrowClass::W),
                        (d, ArrowClass::S),
                    ];
                    cycles.push(self.walk_cycle(&steps));
                } else {
                    for (steps, _) in self.square_triangles(i, j, anti.present()) {
                        cycles.push(self.walk_cycle(&steps));
                    }
                }
            }
        }
        Ok(cycles)
    }

    /// Resolve a counterclockwise step walk into a unit cycle, flipping to
    /// clockwise when the arrows run the other way.
    fn walk_cycle(&self, steps: &[((i64, i64), ArrowClass)]) -> UnitCycle {
        let resolved: Vec<StepArrow> =
            steps.iter().map(|&(from, cls)| self.step_arrow(from, cls)).collect();
        if resolved.iter().all(|s| s.forward.is_some()) {
            UnitCycle {
                arrows: resolved.iter().map(|s| s.forward.unwrap()).collect(),
                orientation: Orientation::CounterClockwise,
            }
        } else {
            UnitCycle {
                arrows: resolved.iter().rev().map(|s| s.backward.unwrap()).collect(),
                orientation: Orientation::Clockwise,
            }
        }
    }

    /// Unit cycle of the 1x1 diagonal-free torus: the two loops alternate,
    /// each traversed twice.
    fn degenerate_cell_cycle(&self) -> Result<UnitCycle> {
        let v = self.cell_to_vertex[0];
        let h = [ArrowClass::E, ArrowClass::W]
            .into_iter()
            .find_map(|c| self.arrow_from(v, c).map(|a| (a, c)));
        let vert = [ArrowClass::N, ArrowClass::S]
            .into_iter()
            .find_map(|c| self.arrow_from(v, c).map(|a| (a, c)));
        let ((ha, hc), (va, vc)) = h.zip(vert).ok_or_else(|| {
            Error::NotSquare("degenerate 1x1 square needs one horizontal and one vertical loop".into())
        })?;
        let (hd, vd) = (hc.displacement(), vc.displacement());
        let orientation = if hd.0 * vd.1 - hd.1 * vd.0 > 0 {
            Orientation::CounterClockwise
        } else {
            Orientation::Clockwise
        };
        Ok(UnitCycle { arrows: vec![ha, va, ha, va], orientation })
    }

    /// Same quiver with permuted vertex ids; `perm[old - 1] = new`.
    pub fn relabeled(&self, perm: &[VertexId]) -> Result<TorusQuiver> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex { id: perm[v.id - 1], col: v.col, row: v.row })
            .collect();
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                id: a.id,
                tail: perm[a.tail - 1],
                head: perm[a.head - 1],
                class: a.class,
            })
            .collect();
        TorusQuiver::new(self.n, self.m, self.shift, vertices, arrows)
    }

    /// Forget the embedding.
    pub fn abstract_quiver(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertices.len(),
            arrows: self
                .arrows
                .iter()
                .map(|a| QuiverArrow { id: a.id, tail: a.tail, head: a.head })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&QuiverJson::from(self)).expect("quiver serialization")
    }

    pub fn from_json(data: &str) -> Result<TorusQuiver> {
        let raw: QuiverJson =
            serde_json::from_str(data).map_err(|e| Error::Parse(e.to_string()))?;
        TorusQuiver::new(raw.n, raw.m, raw.shift, raw.vertices, raw.arrows)
    }

    /// GraphViz rendering with one edge statement per arrow.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  v{} [label=\"{} ({},{})\"];", v.id, v.id, v.col, v.row);
        }
        for a in &self.arrows {
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"a{}:{:?}\"];",
                a.tail, a.head, a.id, a.class
            );
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Copy, Debug)]
struct StepArrow {
    forward: Option<ArrowId>,
    backward: Option<ArrowId>,
}

impl StepArrow {
    fn present(&self) -> bool {
        self.forward.is_some() || self.backward.is_some()
    }
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    n: usize,
    m: usize,
    shift: usize,
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
}

impl From<&TorusQuiver> for QuiverJson {
    fn from(q: &TorusQuiver) -> Self {
        QuiverJson {
            n: q.n,
            m: q.m,
            shift: q.shift,
            vertices: q.vertices.clone(),
            arrows: q.arrows.clone(),
        }
    }
}

/// An abstract quiver: just arrows between numbered vertices. Mutation can
/// leave the torus, and the resolution counterexamples never lived on it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<QuiverArrow>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuiverArrow {
    pub id: ArrowId,
    pub tail: VertexId,
    pub head: VertexId,
}

impl Quiver {
    pub fn new(vertex_count: usize, pairs: &[(VertexId, VertexId)]) -> Quiver {
        Quiver {
            vertex_count,
            arrows: pairs
                .iter()
                .enumerate()
                .map(|(k, &(tail, head))| QuiverArrow { id: k + 1, tail, head })
                .collect(),
        }
    }

    pub fn arrow(&self, id: ArrowId) -> Result<&QuiverArrow> {
        self.arrows.iter().find(|a| a.id == id).ok_or(Error::UnknownArrow(id))
    }

    pub fn out_arrows(&self, v: VertexId) -> Vec<&QuiverArrow> {
        self.arrows.iter().filter(|a| a.tail == v).collect()
    }

    pub fn in_arrows(&self, v: VertexId) -> Vec<&QuiverArrow> {
        self.arrows.iter().filter(|a| a.head == v).collect()
    }

    /// Arrow multiset as a (tail, head) -> count map.
    fn adjacency(&self) -> BTreeMap<(VertexId, VertexId), usize> {
        let mut adj = BTreeMap::new();
        for a in &self.arrows {
            *adj.entry((a.tail, a.head)).or_insert(0) += 1;
        }
        adj
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self
                .arrows
                .iter()
                .map(|a| QuiverArrow { id: a.id, tail: a.head, head: a.tail })
                .collect(),
        }
    }

    /// Multigraph isomorphism by backtracking on degree-compatible maps.
    pub fn is_isomorphic_to(&self, other: &Quiver) -> bool {
        if self.vertex_count != other.vertex_count || self.arrows.len() != other.arrows.len() {
            return false;
        }
        let n = self.vertex_count;
        let adj_a = self.adjacency();
        let adj_b = other.adjacency();
        let profile = |adj: &BTreeMap<(usize, usize), usize>, v: usize| {
            let mut outd = 0;
            let mut ind = 0;
            for (&(t, h), &c) in adj {
                if t == v {
                    outd += c;
                }
                if h == v {
                    ind += c;
                }
            }
            (outd, ind)
        };
        let prof_a: Vec<_> = (1..=n).map(|v| profile(&adj_a, v)).collect();
        let prof_b: Vec<_> = (1..=n).map(|v| profile(&adj_b, v)).collect();
        {
            let mut sa = prof_a.clone();
            let mut sb = prof_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return false;
            }
        }
        let mut map = vec![0usize; n + 1];
        let mut used = vec![false; n + 1];
        fn assign(
            v: usize,
            n: usize,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            prof_a: &[(usize, usize)],
            prof_b: &[(usize, usize)],
            adj_a: &BTreeMap<(usize, usize), usize>,
            adj_b: &BTreeMap<(usize, usize), usize>,
        ) -> bool {
            if v > n {
                return true;
            }
            for w in 1..=n {
                if used[w] || prof_a[v - 1] != prof_b[w - 1] {
                    continue;
                }
                let mut ok = true;
                for u in 1..v {
                    let c1 = adj_a.get(&(v, u)).copied().unwrap_or(0);
                    let c2 = adj_b.get(&(w, map[u])).copied().unwrap_or(0);
                    let c3 = adj_a.get(&(u, v)).copied().unwrap_or(0);
                    let c4 = adj_b.get(&(map[u], w)).copied().unwrap_or(0);
                    let c5 = adj_a.get(&(v, v)).copied().unwrap_or(0);
                    let c6 = adj_b.get(&(w, w)).copied().unwrap_or(0);
                    if c1 != c2 || c3 != c4 || c5 != c6 {
                        ok = false;
                        break;
                    }
                }
                if v == 1 {
                    ok = adj_a.get(&(v, v)).copied().unwrap_or(0)
                        == adj_b.get(&(w, w)).copied().unwrap_or(0);
                }
                if !ok {
                    continue;
                }
                map[v] = w;
                used[w] = true;
                if assign(v + 1, n, map, used, prof_a, prof_b, adj_a, adj_b) {
                    return true;
                }
                used[w] = false;
                map[v] = 0;
            }
            false
        }
        assign(1, n, &mut map, &mut used, &prof_a, &prof_b, &adj_a, &adj_b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn conifold_is_square() {
        let q = fixtures::conifold();
        let report = q.validate_square();
        assert!(report.ok, "{:?}", report.violations);
        let cycles = q.unit_cycles().unwrap();
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.arrows.len() == 4));
        let cw = cycles.iter().filter(|c| c.orientation == Orientation::Clockwise).count();
        assert_eq!(cw, 1);
    }

    #[test]
    fn three_loop_has_two_triangles() {
        let q = fixtures::three_loop();
        assert!(q.validate_square().ok);
        let cycles = q.unit_cycles().unwrap();
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.arrows.len() == 3));
        let orientations: Vec<_> = cycles.iter().map(|c| c.orientation).collect();
        assert!(orientations.contains(&Orientation::Clockwise));
        assert!(orientations.contains(&Orientation::CounterClockwise));
    }

    #[test]
    fn plain_2x2_has_four_squares() {
        let q = fixtures::plain_2x2();
        assert!(q.validate_square().ok, "{:?}", q.validate_square().violations);
        let cycles = q.unit_cycles().unwrap();
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.arrows.len() == 4));
    }

    #[test]
    fn duplicated_diagonal_is_flagged() {
        // conifold plus both orientations of one diagonal
        let mut specs = fixtures::conifold_arrow_specs();
        specs.push((1, 1, ArrowClass::NE));
        specs.push((1, 1, ArrowClass::SW));
        let q = TorusQuiver::from_arrows(2, 1, 1, &specs).unwrap();
        let report = q.validate_square();
        assert!(!report.ok);
        assert!(report.violations.iter().any(|v| v.contains("two opposite arrows")));
    }

    #[test]
    fn both_diagonals_are_flagged() {
        let mut specs = fixtures::conifold_arrow_specs();
        specs.push((1, 1, ArrowClass::NE));
        specs.push((2, 2, ArrowClass::SE));
        let q = TorusQuiver::from_arrows(2, 1, 1, &specs).unwrap();
        let report = q.validate_square();
        assert!(!report.ok);
        assert!(report.violations.iter().any(|v| v.contains("both diagonals")));
    }

    #[test]
    fn unit_cycle_count_is_relabeling_invariant() {
        let q = fixtures::conifold();
        let relabeled = q.relabeled(&[2, 1]).unwrap();
        assert_eq!(
            q.unit_cycles().unwrap().len(),
            relabeled.unit_cycles().unwrap().len()
        );
    }

    #[test]
    fn cycles_balance_degrees_at_each_vertex() {
        for q in [fixtures::conifold(), fixtures::three_loop(), fixtures::plain_2x2()] {
            for cycle in q.unit_cycles().unwrap() {
                let mut balance: BTreeMap<VertexId, i64> = BTreeMap::new();
                for id in &cycle.arrows {
                    let a = q.arrow(*id).unwrap();
                    *balance.entry(a.tail).or_default() -= 1;
                    *balance.entry(a.head).or_default() += 1;
                }
                assert!(balance.values().all(|b| *b == 0));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let q = fixtures::conifold();
        let json = q.to_json();
        let back = TorusQuiver::from_json(&json).unwrap();
        assert_eq!(q, back);
    }

    #[test]
    fn json_missing_arrows_is_parse_error() {
        let err = TorusQuiver::from_json(r#"{"n":2,"m":1,"shift":1,"vertices":[]}"#);
        assert!(matches!(err, Err(Error::Parse(_))));
    }

    #[test]
    fn dot_has_one_edge_per_arrow() {
        let q = fixtures::conifold();
        let dot = q.to_dot();
        assert_eq!(dot.matches("->").count(), q.arrows().len());
    }

    #[test]
    fn isomorphism_detects_relabeling_and_rejects_reversal() {
        let a = Quiver::new(3, &[(1, 2), (2, 3), (3, 1), (1, 2)]);
        let b = Quiver::new(3, &[(2, 3), (3, 1), (1, 2), (2, 3)]);
        assert!(a.is_isomorphic_to(&b));
        let c = Quiver::new(3, &[(1, 2), (2, 3), (3, 1), (2, 1)]);
        assert!(!a.is_isomorphic_to(&c));
    }
}
