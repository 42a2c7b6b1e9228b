//! Dual-lattice contour machinery.
//!
//! A contour is a finite primal edge set whose removal leaves exactly one
//! finite connected component of `Z^2`, minimal in the sense that the edge
//! boundary of that component is the set itself. Its image under the
//! primal/dual edge bijection is a self-avoiding circuit in the dual
//! lattice, which we manipulate as a base vertex plus a word over
//! `{R, L, U, D}`.
//!
//! Dual vertices are stored as integer pairs `(i, j)` meaning the point
//! `(i + 1/2, j + 1/2)`.

mod beta;
mod census;
mod companion;

pub use beta::{alpha_sequence, beta, beta_closed_form, AlphaRow, AlphaSequence};
pub use census::{
    census, census_to_csv, verify_counting_lemma, ContourCensus, EnumerationBudget, LemmaReport,
};
pub use companion::{companion_paths, corner_edges, enumerate_minimal_contours, CompanionPaths};

use crate::error::Error;
use crate::model::{Edge, Vertex};
use crate::Result;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

/// A vertex of the dual lattice; `(i, j)` encodes the point `(i+1/2, j+1/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualVertex {
    pub i: i64,
    pub j: i64,
}

impl DualVertex {
    pub const fn new(i: i64, j: i64) -> Self {
        DualVertex { i, j }
    }

    pub fn step(self, s: Step) -> DualVertex {
        let (di, dj) = s.delta();
        DualVertex::new(self.i + di, self.j + dj)
    }
}

impl fmt::Display for DualVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+1/2,{}+1/2)", self.i, self.j)
    }
}

/// Unit step of a dual walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    R,
    L,
    U,
    D,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::U, Step::R, Step::D, Step::L];

    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::R => (1, 0),
            Step::L => (-1, 0),
            Step::U => (0, 1),
            Step::D => (0, -1),
        }
    }

    pub fn from_char(c: char) -> Result<Step> {
        match c {
            'R' => Ok(Step::R),
            'L' => Ok(Step::L),
            'U' => Ok(Step::U),
            'D' => Ok(Step::D),
            other => Err(Error::invalid(format!("unknown step letter '{other}'"))),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Step::R => 'R',
            Step::L => 'L',
            Step::U => 'U',
            Step::D => 'D',
        }
    }

    /// Step between two adjacent dual vertices.
    pub fn between(from: DualVertex, to: DualVertex) -> Option<Step> {
        match (to.i - from.i, to.j - from.j) {
            (1, 0) => Some(Step::R),
            (-1, 0) => Some(Step::L),
            (0, 1) => Some(Step::U),
            (0, -1) => Some(Step::D),
            _ => None,
        }
    }
}

/// The primal edge crossed when walking a dual edge from `from` in
/// direction `s`.
pub fn primal_edge_of_dual_step(from: DualVertex, s: Step) -> Edge {
    match s {
        // vertical dual edge crosses a horizontal primal edge
        Step::U => Edge::horizontal(Vertex::new(from.i, from.j + 1)),
        Step::D => Edge::horizontal(Vertex::new(from.i, from.j)),
        // horizontal dual edge crosses a vertical primal edge
        Step::R => Edge::vertical(Vertex::new(from.i + 1, from.j)),
        Step::L => Edge::vertical(Vertex::new(from.i, from.j)),
    }
}

/// Endpoints of the dual edge crossing a primal edge.
pub fn dual_edge_of_primal(e: Edge) -> (DualVertex, DualVertex) {
    use crate::model::Orientation;
    match e.orientation() {
        Orientation::Horizontal => (
            DualVertex::new(e.a.x, e.a.y - 1),
            DualVertex::new(e.a.x, e.a.y),
        ),
        Orientation::Vertical => (
            DualVertex::new(e.a.x - 1, e.a.y),
            DualVertex::new(e.a.x, e.a.y),
        ),
    }
}

/// A self-avoiding circuit in the dual lattice: a base vertex and a closed
/// word over `{R, L, U, D}` of even length at least 4 that revisits no dual
/// vertex except for returning to the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCircuit {
    base: DualVertex,
    word: Vec<Step>,
}

impl DualCircuit {
    /// Decode a word from a base vertex, validating closure and
    /// self-avoidance.
    pub fn from_word(base: DualVertex, word: Vec<Step>) -> Result<Self> {
        if word.len() < 4 {
            return Err(Error::invalid(format!(
                "circuit word must have at least 4 steps, got {}",
                word.len()
            )));
        }
        if word.len() % 2 != 0 {
            return Err(Error::invalid("circuit word length must be even"));
        }
        let mut seen = HashSet::with_capacity(word.len());
        seen.insert(base);
        let mut v = base;
        for (k, &s) in word.iter().enumerate() {
            v = v.step(s);
            let last = k + 1 == word.len();
            if last {
                if v != base {
                    return Err(Error::invalid("word does not close up"));
                }
            } else if !seen.insert(v) {
                return Err(Error::invalid("word revisits a dual vertex"));
            }
        }
        Ok(DualCircuit { base, word })
    }

    /// Parse from a base vertex and a string like `"URDL"`.
    pub fn parse(base: DualVertex, word: &str) -> Result<Self> {
        let steps = word.chars().map(Step::from_char).collect::<Result<_>>()?;
        DualCircuit::from_word(base, steps)
    }

    pub fn base(&self) -> DualVertex {
        self.base
    }

    pub fn word(&self) -> &[Step] {
        &self.word
    }

    pub fn word_string(&self) -> String {
        self.word.iter().map(|s| s.to_char()).collect()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Dual vertices in traversal order, starting at the base; length equals
    /// the word length (the closing return to the base is not repeated).
    pub fn vertices(&self) -> Vec<DualVertex> {
        let mut out = Vec::with_capacity(self.word.len());
        let mut v = self.base;
        out.push(v);
        for &s in &self.word[..self.word.len() - 1] {
            v = v.step(s);
            out.push(v);
        }
        out
    }

    /// The crossed primal edges, sorted. Two circuits describe the same
    /// contour exactly when these sets agree, regardless of base or
    /// direction.
    pub fn primal_edges(&self) -> Vec<Edge> {
        let mut v = self.base;
        let mut out: Vec<Edge> = Vec::with_capacity(self.word.len());
        for &s in &self.word {
            out.push(primal_edge_of_dual_step(v, s));
            v = v.step(s);
        }
        out.sort();
        out
    }
}

/// Test whether a finite primal edge set is a contour.
///
/// Returns the vertex interior (sorted) when it is: removing the edges from
/// `Z^2` leaves exactly one finite connected component whose edge boundary
/// is precisely the given set. Returns `None` for anything else, including
/// empty input.
pub fn is_contour(edges: &[Edge]) -> Option<Vec<Vertex>> {
    let set: BTreeSet<Edge> = edges.iter().copied().collect();
    if set.is_empty() {
        return None;
    }
    let mut checker = ContourChecker::for_edges(&set);
    checker.interior_of(&set)
}

/// Flood-fill workspace for contour validation, reusable across many checks
/// on a fixed bounding box.
pub(crate) struct ContourChecker {
    x_lo: i64,
    x_hi: i64,
    y_lo: i64,
    y_hi: i64,
    width: usize,
    height: usize,
    mark: Vec<u32>,
    stamp: u32,
    queue: VecDeque<usize>,
}

impl ContourChecker {
    /// Workspace covering the endpoints of `edges` with a one-vertex margin.
    pub(crate) fn for_edges(edges: &BTreeSet<Edge>) -> Self {
        let mut x_lo = i64::MAX;
        let mut x_hi = i64::MIN;
        let mut y_lo = i64::MAX;
        let mut y_hi = i64::MIN;
        for e in edges {
            for v in [e.a, e.b] {
                x_lo = x_lo.min(v.x);
                x_hi = x_hi.max(v.x);
                y_lo = y_lo.min(v.y);
                y_hi = y_hi.max(v.y);
            }
        }
        ContourChecker::new(x_lo - 1, x_hi + 1, y_lo - 1, y_hi + 1)
    }

    /// Workspace for a fixed vertex box; all checked edge sets must have
    /// their endpoints strictly inside the box frame.
    pub(crate) fn new(x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> Self {
        let width = (x_hi - x_lo + 1) as usize;
        let height = (y_hi - y_lo + 1) as usize;
        ContourChecker {
            x_lo,
            x_hi,
            y_lo,
            y_hi,
            width,
            height,
            mark: vec![0; width * height],
            stamp: 0,
            queue: VecDeque::new(),
        }
    }

    fn index(&self, v: Vertex) -> usize {
        (v.y - self.y_lo) as usize * self.width + (v.x - self.x_lo) as usize
    }

    fn in_box(&self, v: Vertex) -> bool {
        self.x_lo <= v.x && v.x <= self.x_hi && self.y_lo <= v.y && v.y <= self.y_hi
    }

    /// Core check; `edges` must be a set (no duplicates).
    pub(crate) fn interior_of(&mut self, edges: &BTreeSet<Edge>) -> Option<Vec<Vertex>> {
        if edges.is_empty() {
            return None;
        }
        for e in edges {
            for v in [e.a, e.b] {
                if !self.in_box(v) || self.on_frame(v) {
                    return None; // workspace too small for this set
                }
            }
        }
        self.stamp = self.stamp.wrapping_add(2);
        if self.stamp == 0 || self.stamp == 1 {
            self.mark.fill(0);
            self.stamp = 2;
        }
        let exterior = self.stamp;
        let interior = self.stamp + 1;
        self.stamp = interior;

        // flood the exterior from the frame; frame vertices touch no edge of
        // the set, so the frame is connected through the outside
        self.queue.clear();
        for x in self.x_lo..=self.x_hi {
            for y in [self.y_lo, self.y_hi] {
                let idx = self.index(Vertex::new(x, y));
                if self.mark[idx] != exterior {
                    self.mark[idx] = exterior;
                    self.queue.push_back(idx);
                }
            }
        }
        for y in self.y_lo..=self.y_hi {
            for x in [self.x_lo, self.x_hi] {
                let idx = self.index(Vertex::new(x, y));
                if self.mark[idx] != exterior {
                    self.mark[idx] = exterior;
                    self.queue.push_back(idx);
                }
            }
        }
        while let Some(idx) = self.queue.pop_front() {
            let v = Vertex::new(
                self.x_lo + (idx % self.width) as i64,
                self.y_lo + (idx / self.width) as i64,
            );
            for w in v.neighbors() {
                if !self.in_box(w) {
                    continue;
                }
                let widx = self.index(w);
                if self.mark[widx] == exterior || edges.contains(&Edge::new(v, w)) {
                    continue;
                }
                self.mark[widx] = exterior;
                self.queue.push_back(widx);
            }
        }

        // the finite components are whatever the exterior flood missed;
        // grow the first one and demand there is no second
        let mut seed = None;
        for y in self.y_lo..=self.y_hi {
            for x in self.x_lo..=self.x_hi {
                let v = Vertex::new(x, y);
                if self.mark[self.index(v)] != exterior {
                    seed = Some(v);
                    break;
                }
            }
            if seed.is_some() {
                break;
            }
        }
        let seed = seed?;
        let mut component = Vec::new();
        self.queue.clear();
        self.mark[self.index(seed)] = interior;
        self.queue.push_back(self.index(seed));
        component.push(seed);
        while let Some(idx) = self.queue.pop_front() {
            let v = Vertex::new(
                self.x_lo + (idx % self.width) as i64,
                self.y_lo + (idx / self.width) as i64,
            );
            for w in v.neighbors() {
                debug_assert!(self.in_box(w), "interior flood escaped the box");
                let widx = self.index(w);
                if self.mark[widx] == exterior
                    || self.mark[widx] == interior
                    || edges.contains(&Edge::new(v, w))
                {
                    continue;
                }
                self.mark[widx] = interior;
                self.queue.push_back(widx);
                component.push(w);
            }
        }
        // any unmarked vertex left means a second finite component
        for y in self.y_lo..=self.y_hi {
            for x in self.x_lo..=self.x_hi {
                let m = self.mark[self.index(Vertex::new(x, y))];
                if m != exterior && m != interior {
                    return None;
                }
            }
        }
        // minimality: the edge boundary of the component must equal the set
        let mut boundary_size = 0usize;
        for &v in &component {
            for w in v.neighbors() {
                let inside = self.in_box(w) && self.mark[self.index(w)] == interior;
                if !inside {
                    if !edges.contains(&Edge::new(v, w)) {
                        return None;
                    }
                    boundary_size += 1;
                }
            }
        }
        if boundary_size != edges.len() {
            return None;
        }
        component.sort();
        Some(component)
    }

    fn on_frame(&self, v: Vertex) -> bool {
        v.x == self.x_lo || v.x == self.x_hi || v.y == self.y_lo || v.y == self.y_hi
    }
}

/// A validated contour: its primal edges, cached vertex interior, and the
/// horizontal/vertical edge counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contour {
    edges: Vec<Edge>,
    interior: Vec<Vertex>,
    h_count: usize,
    v_count: usize,
}

impl Contour {
    /// Validate an edge set as a contour. Duplicate edges are rejected.
    pub fn try_new(mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(Error::invalid("duplicate edges in contour candidate"));
        }
        let interior = is_contour(&edges)
            .ok_or_else(|| Error::invalid("edge set is not a contour"))?;
        Ok(Contour::from_validated(edges, interior))
    }

    pub(crate) fn from_validated(edges: Vec<Edge>, interior: Vec<Vertex>) -> Self {
        use crate::model::Orientation;
        let h_count = edges
            .iter()
            .filter(|e| e.orientation() == Orientation::Horizontal)
            .count();
        let v_count = edges.len() - h_count;
        Contour {
            edges,
            interior,
            h_count,
            v_count,
        }
    }

    /// Sorted primal edges; the canonical identity of the contour.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted vertices of the unique finite component.
    pub fn interior(&self) -> &[Vertex] {
        &self.interior
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn h_count(&self) -> usize {
        self.h_count
    }

    pub fn v_count(&self) -> usize {
        self.v_count
    }

    pub fn surrounds(&self, v: Vertex) -> bool {
        self.interior.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }
}

/// Convert a contour to its dual circuit.
///
/// The base is the smallest dual vertex on the circuit and the first step
/// the smaller of its two circuit directions, which makes the output
/// deterministic. `primal_of` inverts this up to the choice of base and
/// direction: the primal edge sets agree.
pub fn dual_of(contour: &Contour) -> Result<DualCircuit> {
    let adjacency = dual_adjacency(contour.edges())?;
    let &start = adjacency.keys().min().expect("nonempty circuit");
    walk_circuit(&adjacency, start, None)
}

/// Edge set of a circuit back in the primal lattice.
pub fn primal_of(circuit: &DualCircuit) -> Vec<Edge> {
    circuit.primal_edges()
}

/// Build the dual adjacency of an edge set, requiring every dual vertex to
/// have degree exactly 2 (a single circuit).
fn dual_adjacency(edges: &[Edge]) -> Result<HashMap<DualVertex, Vec<DualVertex>>> {
    let mut adjacency: HashMap<DualVertex, Vec<DualVertex>> = HashMap::new();
    for &e in edges {
        let (u, v) = dual_edge_of_primal(e);
        adjacency.entry(u).or_default().push(v);
        adjacency.entry(v).or_default().push(u);
    }
    for (v, ns) in &adjacency {
        if ns.len() != 2 {
            return Err(Error::invalid(format!(
                "dual vertex {v} has degree {}, expected 2",
                ns.len()
            )));
        }
    }
    Ok(adjacency)
}

/// Traverse a degree-2 adjacency from `start`; `first` picks the initial
/// neighbor (defaults to the smaller one).
fn walk_circuit(
    adjacency: &HashMap<DualVertex, Vec<DualVertex>>,
    start: DualVertex,
    first: Option<DualVertex>,
) -> Result<DualCircuit> {
    let neighbors = &adjacency[&start];
    let first = first.unwrap_or_else(|| std::cmp::min(neighbors[0], neighbors[1]));
    let mut word = Vec::with_capacity(adjacency.len());
    let mut prev = start;
    let mut cur = first;
    word.push(
        Step::between(start, first).ok_or_else(|| Error::invalid("non-adjacent dual step"))?,
    );
    while cur != start {
        let ns = &adjacency[&cur];
        let next = if ns[0] == prev { ns[1] } else { ns[0] };
        word.push(
            Step::between(cur, next).ok_or_else(|| Error::invalid("non-adjacent dual step"))?,
        );
        prev = cur;
        cur = next;
    }
    if word.len() != adjacency.len() {
        return Err(Error::invalid(
            "edge set is not a single circuit (disconnected dual)",
        ));
    }
    DualCircuit::from_word(start, word)
}

/// Canonical word encoding: re-anchor a circuit at its leftmost crossing of
/// the x-axis, oriented upward first.
///
/// Among the circuit's vertical dual edges joining `(i, -1)` to `(i, 0)`
/// (these cross the primal x-axis at `i + 1/2`), the leftmost one is chosen;
/// the base becomes its bottom vertex and the first letter of the word is
/// `U`. Errors when the circuit does not cross the x-axis.
pub fn word_encode(circuit: &DualCircuit) -> Result<DualCircuit> {
    let adjacency = dual_adjacency(&circuit.primal_edges())?;
    let mut leftmost: Option<i64> = None;
    for (v, ns) in &adjacency {
        if v.j == -1 && ns.iter().any(|w| w.i == v.i && w.j == 0) {
            leftmost = Some(leftmost.map_or(v.i, |b: i64| b.min(v.i)));
        }
    }
    let i = leftmost.ok_or_else(|| {
        Error::domain("circuit does not cross the x-axis; no leftmost crossing edge exists")
    })?;
    let base = DualVertex::new(i, -1);
    walk_circuit(&adjacency, base, Some(DualVertex::new(i, 0)))
}

/// Decode a word from a base vertex; inverse of [`word_encode`] for
/// canonically encoded circuits.
pub fn word_decode(base: DualVertex, word: &str) -> Result<DualCircuit> {
    DualCircuit::parse(base, word)
}

/// Counts map key helper: counts of crossings of the horizontal primal line
/// `y = line` strictly left of `x_right`, used for surround parity tests.
pub(crate) fn crossings_left_of(
    vertices: &[DualVertex],
    line: i64,
    x_right: i64,
) -> usize {
    let n = vertices.len();
    let mut count = 0;
    for k in 0..n {
        let a = vertices[k];
        let b = vertices[(k + 1) % n];
        if a.i == b.i && a.i < x_right {
            let (lo, hi) = if a.j < b.j { (a.j, b.j) } else { (b.j, a.j) };
            if lo == line - 1 && hi == line {
                count += 1;
            }
        }
    }
    count
}

/// True when the circuit winds around the primal vertex `p` (ray-parity
/// test along the leftward horizontal ray from `p`).
pub fn circuit_surrounds(circuit: &DualCircuit, p: Vertex) -> bool {
    let vs = circuit.vertices();
    crossings_left_of(&vs, p.y, p.x) % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_contour_edges() -> Vec<Edge> {
        let o = Vertex::new(0, 0);
        vec![
            Edge::horizontal(Vertex::new(-1, 0)),
            Edge::horizontal(o),
            Edge::vertical(Vertex::new(0, -1)),
            Edge::vertical(o),
        ]
    }

    #[test]
    fn unit_contour_is_contour() {
        let interior = is_contour(&unit_contour_edges()).expect("unit contour");
        assert_eq!(interior, vec![Vertex::new(0, 0)]);
    }

    #[test]
    fn three_edges_are_not_a_contour() {
        let mut edges = unit_contour_edges();
        edges.pop();
        assert!(is_contour(&edges).is_none());
    }

    #[test]
    fn block_boundary_is_contour() {
        // edge boundary of the 2x2 vertex block {0,1}^2
        let block: Vec<Vertex> = vec![
            Vertex::new(0, 0),
            Vertex::new(0, 1),
            Vertex::new(1, 0),
            Vertex::new(1, 1),
        ];
        let inside: std::collections::HashSet<_> = block.iter().copied().collect();
        let mut edges = Vec::new();
        for &v in &block {
            for w in v.neighbors() {
                if !inside.contains(&w) {
                    edges.push(Edge::new(v, w));
                }
            }
        }
        assert_eq!(edges.len(), 8);
        let interior = is_contour(&edges).expect("block boundary");
        let mut expect = block.clone();
        expect.sort();
        assert_eq!(interior, expect);
    }

    #[test]
    fn two_separate_squares_rejected() {
        let mut edges = unit_contour_edges();
        let far = Vertex::new(10, 10);
        edges.push(Edge::horizontal(Vertex::new(9, 10)));
        edges.push(Edge::horizontal(far));
        edges.push(Edge::vertical(Vertex::new(10, 9)));
        edges.push(Edge::vertical(far));
        assert!(is_contour(&edges).is_none());
    }

    #[test]
    fn dual_roundtrip_unit() {
        let contour = Contour::try_new(unit_contour_edges()).unwrap();
        let circuit = dual_of(&contour).unwrap();
        assert_eq!(circuit.len(), 4);
        assert_eq!(primal_of(&circuit), contour.edges());
    }

    #[test]
    fn word_encode_unit() {
        let contour = Contour::try_new(unit_contour_edges()).unwrap();
        let canonical = word_encode(&dual_of(&contour).unwrap()).unwrap();
        // leftmost x-axis crossing of the unit circuit around the origin is
        // the dual edge at i = -1, so the base sits at (-1, -1) and the
        // word starts upward
        assert_eq!(canonical.base(), DualVertex::new(-1, -1));
        assert_eq!(canonical.word_string(), "URDL");
        assert_eq!(primal_of(&canonical), contour.edges());
    }

    #[test]
    fn non_closed_word_rejected() {
        assert!(DualCircuit::parse(DualVertex::new(0, 0), "RRUU").is_err());
    }

    #[test]
    fn self_intersecting_word_rejected() {
        // figure-eight through the shared corner
        assert!(DualCircuit::parse(DualVertex::new(0, 0), "RULURDLD").is_err());
        assert!(DualCircuit::parse(DualVertex::new(0, 0), "RLRL").is_err());
    }

    #[test]
    fn odd_word_rejected() {
        assert!(DualCircuit::parse(DualVertex::new(0, 0), "RULDL").is_err());
    }

    #[test]
    fn surround_parity() {
        let contour = Contour::try_new(unit_contour_edges()).unwrap();
        let c = dual_of(&contour).unwrap();
        assert!(circuit_surrounds(&c, Vertex::new(0, 0)));
        assert!(!circuit_surrounds(&c, Vertex::new(1, 0)));
        assert!(!circuit_surrounds(&c, Vertex::new(-1, 0)));
    }

    #[test]
    fn word_encode_requires_crossing() {
        // square circuit around (0, 5): never crosses the x-axis
        let mut edges = Vec::new();
        let v = Vertex::new(0, 5);
        for w in v.neighbors() {
            edges.push(Edge::new(v, w));
        }
        let contour = Contour::try_new(edges).unwrap();
        let c = dual_of(&contour).unwrap();
        assert!(matches!(word_encode(&c), Err(Error::Domain(_))));
    }
}
