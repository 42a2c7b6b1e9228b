//! Shared domain types: percolation parameters, lattice regions with a
//! frozen edge indexing, edge configurations, and the target pair `(x, x')`.

use crate::error::Error;
use crate::Result;
use num::rational::Ratio;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A vertex of `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub x: i64,
    pub y: i64,
}

impl Vertex {
    pub const fn new(x: i64, y: i64) -> Self {
        Vertex { x, y }
    }

    pub fn neighbors(self) -> [Vertex; 4] {
        [
            Vertex::new(self.x + 1, self.y),
            Vertex::new(self.x - 1, self.y),
            Vertex::new(self.x, self.y + 1),
            Vertex::new(self.x, self.y - 1),
        ]
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Orientation of a lattice edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A nearest-neighbor edge of `Z^2`, stored with its lexicographically
/// smaller endpoint first so that equal edges compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: Vertex,
    pub b: Vertex,
}

impl Edge {
    /// Canonical edge between two adjacent vertices.
    pub fn new(u: Vertex, v: Vertex) -> Self {
        debug_assert_eq!((u.x - v.x).abs() + (u.y - v.y).abs(), 1, "not adjacent");
        if u <= v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    pub fn horizontal(left: Vertex) -> Self {
        Edge {
            a: left,
            b: Vertex::new(left.x + 1, left.y),
        }
    }

    pub fn vertical(bottom: Vertex) -> Self {
        Edge {
            a: bottom,
            b: Vertex::new(bottom.x, bottom.y + 1),
        }
    }

    pub fn orientation(&self) -> Orientation {
        if self.a.y == self.b.y {
            Orientation::Horizontal
        } else {
            Orientation::Vertical
        }
    }

    /// Reflect across the main diagonal (swap coordinates of both endpoints).
    pub fn reflected(&self) -> Edge {
        Edge::new(reflect(self.a), reflect(self.b))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.a, self.b)
    }
}

/// Swap the coordinates of a vertex: `(x1, x2) -> (x2, x1)`. An involution.
pub fn reflect(v: Vertex) -> Vertex {
    Vertex::new(v.y, v.x)
}

/// Size of a minimal contour surrounding `{0, x}`: `2(x1 + x2 + 2)`.
/// Requires both coordinates positive.
pub fn norm_x(x: Vertex) -> Result<u64> {
    if x.x <= 0 || x.y <= 0 {
        return Err(Error::invalid(format!(
            "norm is defined for positive coordinates, got {x}"
        )));
    }
    Ok(2 * (x.x as u64 + x.y as u64 + 2))
}

/// Percolation parameters `(p_h, p_v)` with `0 < p_h <= p_v <= 1`.
///
/// The closed-to-open odds `lambda_h = (1-p_h)/p_h`, `lambda_v` and their
/// ratio `eta = lambda_v / lambda_h` are always recomputed from the stored
/// probabilities, never cached.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    p_h: f64,
    p_v: f64,
}

impl Params {
    pub fn p_h(&self) -> f64 {
        self.p_h
    }

    pub fn p_v(&self) -> f64 {
        self.p_v
    }

    pub fn lambda_h(&self) -> f64 {
        (1.0 - self.p_h) / self.p_h
    }

    pub fn lambda_v(&self) -> f64 {
        (1.0 - self.p_v) / self.p_v
    }

    /// `lambda_v / lambda_h`, in `(0, 1]`; 0 when `p_v = 1`.
    pub fn eta(&self) -> f64 {
        self.lambda_v() / self.lambda_h()
    }

    pub fn p(&self, orientation: Orientation) -> f64 {
        match orientation {
            Orientation::Horizontal => self.p_h,
            Orientation::Vertical => self.p_v,
        }
    }
}

/// Build parameters from the two edge probabilities.
///
/// Rejects `p_h = 0` (the odds `lambda_h` would be undefined) and the
/// unordered case `p_h > p_v`.
pub fn make_params(p_h: f64, p_v: f64) -> Result<Params> {
    if !(p_h > 0.0 && p_h <= 1.0) || !p_v.is_finite() {
        return Err(Error::invalid(format!(
            "need 0 < p_h <= 1, got p_h = {p_h}"
        )));
    }
    if !(p_v >= p_h && p_v <= 1.0) {
        return Err(Error::invalid(format!(
            "need p_h <= p_v <= 1, got p_h = {p_h}, p_v = {p_v}"
        )));
    }
    Ok(Params { p_h, p_v })
}

/// Build parameters from `p_h` and the anisotropy ratio `eta`, solving
/// `p_v = 1 / (1 + eta * lambda_h)`.
pub fn params_from_eta(p_h: f64, eta: f64) -> Result<Params> {
    if !(p_h > 0.0 && p_h < 1.0) {
        return Err(Error::invalid(format!("need 0 < p_h < 1, got {p_h}")));
    }
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(Error::invalid(format!("need 0 < eta <= 1, got {eta}")));
    }
    let lambda_h = (1.0 - p_h) / p_h;
    let p_v = 1.0 / (1.0 + eta * lambda_h);
    make_params(p_h, p_v)
}

/// A finite rectangular vertex box `[x_lo, x_hi] x [y_lo, y_hi]`.
///
/// Edge indexing is a fixed bijection relied upon by configurations, file
/// formats and the exhaustive engines: all horizontal edges come first in
/// row-major order (rows bottom to top, left to right within a row), then
/// all vertical edges in the same order. Concretely, with `W = width()` and
/// `H = height()`:
///
/// - horizontal edge `<(x,y),(x+1,y)>` has index `(y - y_lo)*(W-1) + (x - x_lo)`,
/// - vertical edge `<(x,y),(x,y+1)>` has index
///   `H*(W-1) + (y - y_lo)*W + (x - x_lo)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeRegion {
    pub x_lo: i64,
    pub x_hi: i64,
    pub y_lo: i64,
    pub y_hi: i64,
}

impl LatticeRegion {
    pub fn new(x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> Result<Self> {
        if x_lo > x_hi || y_lo > y_hi {
            return Err(Error::invalid(format!(
                "degenerate region [{x_lo},{x_hi}]x[{y_lo},{y_hi}]"
            )));
        }
        Ok(LatticeRegion {
            x_lo,
            x_hi,
            y_lo,
            y_hi,
        })
    }

    /// Centered square `[-n, n]^2`.
    pub fn centered_square(n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::invalid(format!("negative half-width {n}")));
        }
        LatticeRegion::new(-n, n, -n, n)
    }

    pub fn width(&self) -> usize {
        (self.x_hi - self.x_lo + 1) as usize
    }

    pub fn height(&self) -> usize {
        (self.y_hi - self.y_lo + 1) as usize
    }

    pub fn vertex_count(&self) -> usize {
        self.width() * self.height()
    }

    pub fn horizontal_edge_count(&self) -> usize {
        (self.width() - 1) * self.height()
    }

    pub fn vertical_edge_count(&self) -> usize {
        self.width() * (self.height() - 1)
    }

    pub fn edge_count(&self) -> usize {
        self.horizontal_edge_count() + self.vertical_edge_count()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.x_lo <= v.x && v.x <= self.x_hi && self.y_lo <= v.y && v.y <= self.y_hi
    }

    /// Vertices of the box adjacent to its complement (the box frame).
    pub fn is_internal_boundary(&self, v: Vertex) -> bool {
        self.contains(v)
            && (v.x == self.x_lo || v.x == self.x_hi || v.y == self.y_lo || v.y == self.y_hi)
    }

    /// Strictly inside the box, i.e. in the box but not on its frame.
    pub fn is_interior(&self, v: Vertex) -> bool {
        self.contains(v) && !self.is_internal_boundary(v)
    }

    /// True when the box is symmetric under the diagonal reflection
    /// `(x, y) -> (y, x)`.
    pub fn is_diagonally_symmetric(&self) -> bool {
        self.x_lo == self.y_lo && self.x_hi == self.y_hi
    }

    pub fn vertex_index(&self, v: Vertex) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        Some((v.y - self.y_lo) as usize * self.width() + (v.x - self.x_lo) as usize)
    }

    /// Index of an edge under the frozen ordering, `None` when the edge is
    /// not contained in the box.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        if !self.contains(e.a) || !self.contains(e.b) {
            return None;
        }
        let w = self.width();
        match e.orientation() {
            Orientation::Horizontal => {
                Some((e.a.y - self.y_lo) as usize * (w - 1) + (e.a.x - self.x_lo) as usize)
            }
            Orientation::Vertical => Some(
                self.horizontal_edge_count()
                    + (e.a.y - self.y_lo) as usize * w
                    + (e.a.x - self.x_lo) as usize,
            ),
        }
    }

    /// Inverse of [`edge_index`](Self::edge_index).
    pub fn edge_at(&self, index: usize) -> Option<Edge> {
        let w = self.width();
        let h_count = self.horizontal_edge_count();
        if index < h_count {
            let row = index / (w - 1).max(1);
            let col = index % (w - 1).max(1);
            if w < 2 {
                return None;
            }
            Some(Edge::horizontal(Vertex::new(
                self.x_lo + col as i64,
                self.y_lo + row as i64,
            )))
        } else if index < self.edge_count() {
            let rel = index - h_count;
            let row = rel / w;
            let col = rel % w;
            Some(Edge::vertical(Vertex::new(
                self.x_lo + col as i64,
                self.y_lo + row as i64,
            )))
        } else {
            None
        }
    }

    /// All edges in index order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.edge_count()).map(|i| self.edge_at(i).expect("index in range"))
    }

    /// All vertices in row-major order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let (x_lo, x_hi, y_lo, y_hi) = (self.x_lo, self.x_hi, self.y_lo, self.y_hi);
        (y_lo..=y_hi).flat_map(move |y| (x_lo..=x_hi).map(move |x| Vertex::new(x, y)))
    }

    /// True when `other` fits inside this box.
    pub fn contains_region(&self, other: &LatticeRegion) -> bool {
        self.x_lo <= other.x_lo
            && other.x_hi <= self.x_hi
            && self.y_lo <= other.y_lo
            && other.y_hi <= self.y_hi
    }
}

impl fmt::Display for LatticeRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}]x[{},{}]",
            self.x_lo, self.x_hi, self.y_lo, self.y_hi
        )
    }
}

/// Assignment of open/closed to every edge of a region, stored as a bitset
/// over the region's edge index space. A set bit marks a *closed* edge, so
/// a configuration is specified by its closed-edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    region: LatticeRegion,
    closed: Vec<u64>,
}

impl Configuration {
    /// All-open configuration.
    pub fn all_open(region: LatticeRegion) -> Self {
        let words = region.edge_count().div_ceil(64);
        Configuration {
            region,
            closed: vec![0; words],
        }
    }

    pub fn region(&self) -> &LatticeRegion {
        &self.region
    }

    pub fn set_closed(&mut self, index: usize, closed: bool) {
        debug_assert!(index < self.region.edge_count());
        let (w, b) = (index / 64, index % 64);
        if closed {
            self.closed[w] |= 1 << b;
        } else {
            self.closed[w] &= !(1 << b);
        }
    }

    pub fn is_closed(&self, index: usize) -> bool {
        debug_assert!(index < self.region.edge_count());
        self.closed[index / 64] >> (index % 64) & 1 == 1
    }

    pub fn is_open(&self, index: usize) -> bool {
        !self.is_closed(index)
    }

    pub fn closed_count(&self) -> usize {
        self.closed.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn open_count(&self) -> usize {
        self.region.edge_count() - self.closed_count()
    }
}

/// A target vertex `x = (x1, x2)` with `0 < x1 < x2`, together with its
/// swap-reflection `x' = (x2, x1)`, the minimal contour size and the slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetPair {
    pub x: Vertex,
    pub x_prime: Vertex,
    pub norm: u64,
    /// Slope `x2 / x1` as a reduced rational (numerator, denominator).
    pub rho: (i64, i64),
}

impl TargetPair {
    pub fn new(x: Vertex) -> Result<Self> {
        if !(0 < x.x && x.x < x.y) {
            return Err(Error::invalid(format!(
                "target must satisfy 0 < x1 < x2, got {x}"
            )));
        }
        let rho = Ratio::new(x.y, x.x);
        Ok(TargetPair {
            x,
            x_prime: reflect(x),
            norm: norm_x(x)?,
            rho: (*rho.numer(), *rho.denom()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_isotropic() {
        let p = make_params(0.5, 0.5).unwrap();
        assert_eq!(p.lambda_h(), 1.0);
        assert_eq!(p.lambda_v(), 1.0);
        assert_eq!(p.eta(), 1.0);
    }

    #[test]
    fn params_validity_edge() {
        // p_h = 64/65 gives lambda_h = 1/64; p_v = 1 gives lambda_v = 0.
        let p = make_params(64.0 / 65.0, 1.0).unwrap();
        assert!((p.lambda_h() - 1.0 / 64.0).abs() < 1e-15);
        assert_eq!(p.lambda_v(), 0.0);
        assert_eq!(p.eta(), 0.0);
    }

    #[test]
    fn params_anisotropic_arithmetic() {
        let p = make_params(0.9, 0.99).unwrap();
        assert!((p.lambda_h() - 1.0 / 9.0).abs() < 1e-16);
        assert!((p.lambda_v() - 1.0 / 99.0).abs() < 1e-16);
        assert!((p.eta() - 1.0 / 11.0).abs() < 1e-15);
    }

    #[test]
    fn params_rejections() {
        assert!(make_params(0.0, 0.5).is_err());
        assert!(make_params(0.6, 0.5).is_err());
        assert!(make_params(0.5, 1.1).is_err());
    }

    #[test]
    fn params_from_eta_isotropy() {
        let p = params_from_eta(0.5, 1.0).unwrap();
        assert_eq!(p.p_v(), 0.5);
    }

    #[test]
    fn params_from_eta_roundtrip() {
        let p = params_from_eta(0.99, 0.5).unwrap();
        assert!((p.p_v() - 1.0 / (1.0 + 0.5 / 99.0)).abs() < 1e-15);
        assert!((p.eta() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn params_from_eta_rejects_zero() {
        assert!(params_from_eta(0.5, 0.0).is_err());
        assert!(params_from_eta(0.5, 1.5).is_err());
        assert!(params_from_eta(1.0, 0.5).is_err());
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(Vertex::new(1, 2)), Vertex::new(2, 1));
        assert_eq!(reflect(Vertex::new(3, 3)), Vertex::new(3, 3));
        assert_eq!(reflect(Vertex::new(2, 5)), Vertex::new(5, 2));
        assert_eq!(reflect(reflect(Vertex::new(-4, 7))), Vertex::new(-4, 7));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm_x(Vertex::new(1, 1)).unwrap(), 8);
        assert_eq!(norm_x(Vertex::new(1, 2)).unwrap(), 10);
        assert_eq!(norm_x(Vertex::new(2, 4)).unwrap(), 16);
        assert!(norm_x(Vertex::new(0, 2)).is_err());
        assert!(norm_x(Vertex::new(3, -1)).is_err());
    }

    #[test]
    fn edge_counts_add_up() {
        let r = LatticeRegion::new(-1, 2, -1, 1).unwrap();
        assert_eq!(r.width(), 4);
        assert_eq!(r.height(), 3);
        assert_eq!(r.horizontal_edge_count(), 9);
        assert_eq!(r.vertical_edge_count(), 8);
        assert_eq!(r.edge_count(), 17);
    }

    #[test]
    fn edge_index_roundtrip() {
        let r = LatticeRegion::new(-2, 3, -1, 2).unwrap();
        for i in 0..r.edge_count() {
            let e = r.edge_at(i).unwrap();
            assert_eq!(r.edge_index(e), Some(i));
        }
        assert_eq!(r.edge_at(r.edge_count()), None);
        // horizontal edges occupy the leading indices
        for i in 0..r.horizontal_edge_count() {
            assert_eq!(
                r.edge_at(i).unwrap().orientation(),
                Orientation::Horizontal
            );
        }
    }

    #[test]
    fn interior_and_boundary() {
        let r = LatticeRegion::centered_square(1).unwrap();
        assert!(r.is_interior(Vertex::new(0, 0)));
        assert!(r.is_internal_boundary(Vertex::new(1, 0)));
        assert!(!r.is_interior(Vertex::new(2, 0)));
        let boundary: usize = r
            .vertices()
            .filter(|&v| r.is_internal_boundary(v))
            .count();
        assert_eq!(boundary, 8);
    }

    #[test]
    fn configuration_bits() {
        let r = LatticeRegion::centered_square(1).unwrap();
        let mut c = Configuration::all_open(r);
        assert_eq!(c.closed_count(), 0);
        c.set_closed(3, true);
        c.set_closed(11, true);
        assert!(c.is_closed(3));
        assert!(c.is_open(4));
        assert_eq!(c.closed_count(), 2);
        assert_eq!(c.open_count(), 10);
        c.set_closed(3, false);
        assert_eq!(c.closed_count(), 1);
    }

    #[test]
    fn target_pair_basics() {
        let t = TargetPair::new(Vertex::new(1, 2)).unwrap();
        assert_eq!(t.x_prime, Vertex::new(2, 1));
        assert_eq!(t.norm, 10);
        assert_eq!(t.rho, (2, 1));
        assert!(TargetPair::new(Vertex::new(2, 2)).is_err());
        assert!(TargetPair::new(Vertex::new(0, 2)).is_err());
        let t = TargetPair::new(Vertex::new(2, 4)).unwrap();
        assert_eq!(t.rho, (2, 1));
    }
}
