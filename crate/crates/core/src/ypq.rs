//! The Y^{p,q} family: width-2 torus quivers stacked from three row tiles,
//! their center formula, R-charges, and torus-action weights.

use crate::error::{Error, Result};
use crate::impression::{center_generators, Impression};
use crate::monomial::Monomial4;
use crate::quiver::{ArrowClass, TorusQuiver, VertexId};
use crate::toric::ExponentMonoid;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One row of unit squares between grid rows j and j+1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Tile {
    /// No diagonals; both squares are oriented 4-cycles.
    Plain,
    /// Diagonals meet the middle vertex of the tile's bottom row.
    DiagA,
    /// Diagonals meet the middle vertex of the tile's top row.
    DiagB,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TileSequence {
    pub tiles: Vec<Tile>,
    pub shift: usize,
}

impl TileSequence {
    /// (p-q) plain tiles under q type-A tiles; shift forced by orientability.
    pub fn canonical(p: usize, q: usize) -> Result<TileSequence> {
        if p == 0 || q > p {
            return Err(Error::InvalidPQ(format!("need 1 <= p and 0 <= q <= p, got ({p},{q})")));
        }
        let mut tiles = vec![Tile::Plain; p - q];
        tiles.extend(vec![Tile::DiagA; q]);
        Ok(TileSequence { tiles, shift: (p - q) % 2 })
    }

    /// Parse a string like "PPA" or "pab".
    pub fn parse(text: &str, shift: usize) -> Result<TileSequence> {
        let tiles = text
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'P' => Ok(Tile::Plain),
                'A' => Ok(Tile::DiagA),
                'B' => Ok(Tile::DiagB),
                other => Err(Error::Parse(format!("unknown tile '{other}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if tiles.is_empty() {
            return Err(Error::Parse("empty tile sequence".into()));
        }
        Ok(TileSequence { tiles, shift })
    }

    pub fn p(&self) -> usize {
        self.tiles.len()
    }

    /// q = p - #plain - 2 * #(type-A tile directly below a type-B tile),
    /// counted cyclically.
    pub fn q_value(&self) -> i64 {
        let p = self.tiles.len();
        let plain = self.tiles.iter().filter(|t| **t == Tile::Plain).count();
        let doubles = (0..p)
            .filter(|&j| self.tiles[j] == Tile::DiagA && self.tiles[(j + 1) % p] == Tile::DiagB)
            .count();
        p as i64 - plain as i64 - 2 * doubles as i64
    }
}

/// Undirected edge slots of the tiled torus, keyed by canonical location.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum EdgeKey {
    /// Between cells (c, r) and (c+1, r).
    H { c: usize, r: usize },
    /// Between cells (c, r) and (c, r+1).
    V { c: usize, r: usize },
    /// Main diagonal of square (c, r): (c, r) - (c+1, r+1).
    Main { c: usize, r: usize },
    /// Anti diagonal of square (c, r): (c, r+1) - (c+1, r).
    Anti { c: usize, r: usize },
}

struct Layout {
    p: usize,
    shift: usize,
}

impl Layout {
    fn fold(&self, c: i64, r: i64) -> (usize, usize) {
        let p = self.p as i64;
        let wraps = r.div_euclid(p);
        let rr = r.rem_euclid(p);
        let cc = (c + wraps * self.shift as i64).rem_euclid(2);
        (cc as usize, rr as usize)
    }

    /// The edge a unit step from cover cell (c, r) traverses, and whether the
    /// step runs along the canonical direction.
    fn step(&self, c: i64, r: i64, class: ArrowClass) -> (EdgeKey, i64) {
        match class {
            ArrowClass::E => {
                let (cc, rr) = self.fold(c, r);
                (EdgeKey::H { c: cc, r: rr }, 1)
            }
            ArrowClass::W => {
                let (cc, rr) = self.fold(c - 1, r);
                (EdgeKey::H { c: cc, r: rr }, -1)
            }
            ArrowClass::N => {
                let (cc, rr) = self.fold(c, r);
                (EdgeKey::V { c: cc, r: rr }, 1)
            }
            ArrowClass::S => {
                let (cc, rr) = self.fold(c, r - 1);
                (EdgeKey::V { c: cc, r: rr }, -1)
            }
            ArrowClass::NE => {
                let (cc, rr) = self.fold(c, r);
                (EdgeKey::Main { c: cc, r: rr }, 1)
            }
            ArrowClass::SW => {
                let (cc, rr) = self.fold(c - 1, r - 1);
                (EdgeKey::Main { c: cc, r: rr }, -1)
            }
            ArrowClass::SE => {
                let (cc, rr) = self.fold(c, r - 1);
                (EdgeKey::Anti { c: cc, r: rr }, 1)
            }
            ArrowClass::NW => {
                let (cc, rr) = self.fold(c - 1, r);
                (EdgeKey::Anti { c: cc, r: rr }, -1)
            }
        }
    }

    fn vertex(&self, c: i64, r: i64) -> VertexId {
        let (cc, rr) = self.fold(c, r);
        rr * 2 + cc + 1
    }
}

/// Assemble the Y^{p,q} quiver from a tile sequence; the orientation is the
/// 2-coloring of the unit-cycle adjacency graph, with the first cycle of
/// square (0,0) counterclockwise.
pub fn generate_ypq(p: usize, q: usize, tiles: Option<TileSequence>) -> Result<TorusQuiver> {
    let seq = match tiles {
        Some(seq) => {
            if seq.p() != p {
                return Err(Error::TileMismatch(format!(
                    "sequence has {} tiles, expected {p}",
                    seq.p()
                )));
            }
            if seq.q_value() != q as i64 {
                return Err(Error::TileMismatch(format!(
                    "sequence yields q = {}, expected {q}",
                    seq.q_value()
                )));
            }
            if seq.shift >= 2 {
                return Err(Error::TileMismatch("shift must be 0 or 1".into()));
            }
            seq
        }
        None => TileSequence::canonical(p, q)?,
    };
    if q > p || p == 0 {
        return Err(Error::InvalidPQ(format!("({p},{q})")));
    }
    let layout = Layout { p, shift: seq.shift };

    // unit cycles as counterclockwise step walks, two per diagonal square
    let mut cycles: Vec<Vec<((i64, i64), ArrowClass)>> = Vec::new();
    for j in 0..p as i64 {
        let tile = seq.tiles[j as usize];
        for i in 0..2i64 {
            let a = (i, j);
            let b = (i + 1, j);
            let c = (i + 1, j + 1);
            let d = (i, j + 1);
            let diag = match (tile, i) {
                (Tile::Plain, _) => None,
                (Tile::DiagA, 0) => Some(false), // anti in the left square
                (Tile::DiagA, _) => Some(true),  // main in the right square
                (Tile::DiagB, 0) => Some(true),
                (Tile::DiagB, _) => Some(false),
            };
            match diag {
                None => cycles.push(vec![
                    (a, ArrowClass::E),
                    (b, ArrowClass::N),
                    (c, ArrowClass::W),
                    (d, ArrowClass::S),
                ]),
                Some(true) => {
                    cycles.push(vec![(a, ArrowClass::E), (b, ArrowClass::N), (c, ArrowClass::SW)]);
                    cycles.push(vec![(a, ArrowClass::NE), (c, ArrowClass::W), (d, ArrowClass::S)]);
                }
                Some(false) => {
                    cycles.push(vec![(a, ArrowClass::E), (b, ArrowClass::NW), (d, ArrowClass::S)]);
                    cycles.push(vec![(b, ArrowClass::N), (c, ArrowClass::W), (d, ArrowClass::SE)]);
                }
            }
        }
    }

    // every edge borders exactly two unit cycles
    let mut incidence: BTreeMap<EdgeKey, Vec<(usize, i64)>> = BTreeMap::new();
    for (idx, cycle) in cycles.iter().enumerate() {
        for &((c, r), class) in cycle {
            let (key, sign) = layout.step(c, r, class);
            incidence.entry(key).or_default().push((idx, sign));
        }
    }
    for (key, inc) in &incidence {
        if inc.len() != 2 {
            return Err(Error::InternalInconsistency(format!(
                "edge {key:?} borders {} cycles",
                inc.len()
            )));
        }
    }

    // 2-color the cycles: color(c2) = color(c1) * s1 * s2 across each edge
    let mut color = vec![0i64; cycles.len()];
    color[0] = 1;
    let mut stack = vec![0usize];
    while let Some(at) = stack.pop() {
        for &((c, r), class) in &cycles[at] {
            let (key, s_at) = layout.step(c, r, class);
            for &(other, s_other) in &incidence[&key] {
                if other == at {
                    continue;
                }
                let want = color[at] * s_at * s_other;
                if color[other] == 0 {
                    color[other] = want;
                    stack.push(other);
                } else if color[other] != want {
                    return Err(Error::TileMismatch(
                        "tile sequence admits no compatible orientation (check the shift parity)"
                            .into(),
                    ));
                }
            }
        }
    }
    if color.iter().any(|c| *c == 0) {
        return Err(Error::InternalInconsistency("disconnected unit-cycle graph".into()));
    }

    // orient each edge and emit arrows
    let mut specs: Vec<(VertexId, VertexId, ArrowClass)> = Vec::new();
    for (key, inc) in &incidence {
        let (cycle, sign) = inc[0];
        let dir = color[cycle] * sign;
        let (tail_cell, class) = match (*key, dir) {
            (EdgeKey::H { c, r }, 1) => ((c as i64, r as i64), ArrowClass::E),
            (EdgeKey::H { c, r }, _) => ((c as i64 + 1, r as i64), ArrowClass::W),
            (EdgeKey::V { c, r }, 1) => ((c as i64, r as i64), ArrowClass::N),
            (EdgeKey::V { c, r }, _) => ((c as i64, r as i64 + 1), ArrowClass::S),
            (EdgeKey::Main { c, r }, 1) => ((c as i64, r as i64), ArrowClass::NE),
            (EdgeKey::Main { c, r }, _) => ((c as i64 + 1, r as i64 + 1), ArrowClass::SW),
            (EdgeKey::Anti { c, r }, 1) => ((c as i64, r as i64 + 1), ArrowClass::SE),
            (EdgeKey::Anti { c, r }, _) => ((c as i64 + 1, r as i64), ArrowClass::NW),
        };
        let tail = layout.vertex(tail_cell.0, tail_cell.1);
        let head = {
            let (dc, dr) = class.displacement();
            layout.vertex(tail_cell.0 + dc, tail_cell.1 + dr)
        };
        specs.push((tail, head, class));
    }
    let quiver = TorusQuiver::from_arrows(2, p, seq.shift, &specs)?;
    let report = quiver.validate_square();
    if !report.ok {
        return Err(Error::InternalInconsistency(format!(
            "generated quiver is not square: {}",
            report.violations.join("; ")
        )));
    }
    Ok(quiver)
}

/// The center generators of Y^{p,q} as exponent vectors: unit-square cycles
/// x_a x_b y1 y2, vertical cycles y1^p (p+q x's) and y2^p (p-q x's).
pub fn ypq_center_formula(p: usize, q: usize) -> Result<ExponentMonoid> {
    if p == 0 || q > p {
        return Err(Error::InvalidPQ(format!("({p},{q})")));
    }
    let p = p as u32;
    let q = q as u32;
    let mut gens = Vec::new();
    for a1 in 0..=2 {
        gens.push(Monomial4::new(a1, 2 - a1, 1, 1));
    }
    for a1 in 0..=(p + q) {
        gens.push(Monomial4::new(a1, p + q - a1, p, 0));
    }
    for a1 in 0..=(p - q) {
        gens.push(Monomial4::new(a1, p - q - a1, 0, p));
    }
    Ok(ExponentMonoid::new(&gens))
}

/// The generated quiver's center monoid equals the closed-form monoid up to
/// the weight cap.
pub fn center_matches_formula(p: usize, q: usize, max_degree: u32) -> Result<bool> {
    let quiver = generate_ypq(p, q, None)?;
    center_matches_formula_for(&quiver, p, q, max_degree)
}

pub fn center_matches_formula_for(
    quiver: &TorusQuiver,
    p: usize,
    q: usize,
    max_degree: u32,
) -> Result<bool> {
    let tau = Impression::build_tau(quiver)?;
    let computed = ExponentMonoid::new(&center_generators(quiver, &tau, max_degree)?);
    let formula = ypq_center_formula(p, q)?;
    Ok(computed.equals_upto(&formula, max_degree))
}

/// R-charges of the five orientation classes, from the closed-form
/// a-maximization values.
#[derive(Clone, Debug, Serialize)]
pub struct RChargeTable {
    pub p: usize,
    pub q: usize,
    /// r(x_a y_1) for the diagonals carrying y1 (NE, NW).
    pub r_xy1: f64,
    /// r(x_a) for horizontal arrows.
    pub r_x: f64,
    pub r_y2: f64,
    pub r_y1: f64,
    /// r(x_a y_2) for the diagonals carrying y2 (SE, SW).
    pub r_xy2: f64,
}

impl RChargeTable {
    /// Largest additivity defect |r(x y_b) - r(x) - r(y_b)|.
    pub fn additivity_defect(&self) -> f64 {
        let d1 = (self.r_xy1 - self.r_x - self.r_y1).abs();
        let d2 = (self.r_xy2 - self.r_x - self.r_y2).abs();
        d1.max(d2)
    }
}

pub fn rcharge_table(p: usize, q: usize) -> Result<RChargeTable> {
    if p == 0 || q == 0 || q > p {
        return Err(Error::InvalidPQ(format!(
            "R-charges need 1 <= q <= p, got ({p},{q})"
        )));
    }
    let pf = p as f64;
    let qf = q as f64;
    let s = (4.0 * pf * pf - 3.0 * qf * qf).sqrt();
    Ok(RChargeTable {
        p,
        q,
        r_xy1: (3.0 * qf - 2.0 * pf + s) / (3.0 * qf),
        r_x: 2.0 * pf * (2.0 * pf - s) / (3.0 * qf * qf),
        r_y2: (-4.0 * pf * pf + 3.0 * qf * qf + 2.0 * pf * qf + (2.0 * pf - qf) * s)
            / (3.0 * qf * qf),
        r_y1: (-4.0 * pf * pf + 3.0 * qf * qf - 2.0 * pf * qf + (2.0 * pf + qf) * s)
            / (3.0 * qf * qf),
        r_xy2: (3.0 * qf + 2.0 * pf - s) / (3.0 * qf),
    })
}

/// Weights of the torus action whose invariants form the center.
#[derive(Clone, Debug, Serialize)]
pub struct TorusWeights {
    /// One-parameter weights on (x1, x2, y1, y2).
    pub lambda: [i64; 4],
    /// Finite-order weights, taken modulo `omega_order`.
    pub omega: [i64; 4],
    pub omega_order: i64,
}

pub fn torus_action_weights(p: usize, q: usize) -> TorusWeights {
    let (p, q) = (p as i64, q as i64);
    TorusWeights {
        lambda: [-p, -p, p + q, p - q],
        omega: [-1, -1, 2, 0],
        omega_order: p - q,
    }
}

impl TorusWeights {
    pub fn lambda_weight(&self, m: &Monomial4) -> i64 {
        m.0.iter().zip(self.lambda.iter()).map(|(&e, &w)| e as i64 * w).sum()
    }

    pub fn omega_weight(&self, m: &Monomial4) -> i64 {
        let raw: i64 = m.0.iter().zip(self.omega.iter()).map(|(&e, &w)| e as i64 * w).sum();
        if self.omega_order == 0 {
            0
        } else {
            raw.rem_euclid(self.omega_order)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SuperpotentialAlgebra;
    use crate::impression::{check_well_defined, homogeneity_check, vertex_module_generators};

    #[test]
    fn q_counting_matches_the_tile_pictures() {
        let t = |s: &str| TileSequence::parse(s, 0).unwrap().q_value();
        assert_eq!(t("AAAA"), 4);
        assert_eq!(t("PAAA"), 3);
        assert_eq!(t("BAAA"), 2);
        assert_eq!(t("PPAA"), 2);
        assert_eq!(t("ABAB"), 0);
        assert_eq!(t("PPPP"), 0);
        assert_eq!(t("P"), 0);
        assert_eq!(t("A"), 1);
    }

    #[test]
    fn canonical_y10_is_the_conifold() {
        let q = generate_ypq(1, 0, None).unwrap();
        assert_eq!(q.n(), 2);
        assert_eq!(q.m(), 1);
        assert_eq!(q.shift(), 1);
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arrows().len(), 4);
        assert!(q.validate_square().ok);
        let tau = Impression::build_tau(&q).unwrap();
        let gens = center_generators(&q, &tau, 8).unwrap();
        assert_eq!(gens.len(), 4);
        let formula = ypq_center_formula(1, 0).unwrap();
        assert!(ExponentMonoid::new(&gens).equals_upto(&formula, 8));
    }

    #[test]
    fn generated_quivers_are_square_and_well_defined() {
        for (p, q) in [(1, 0), (2, 1), (3, 1), (4, 2), (4, 4), (5, 3)] {
            let quiver = generate_ypq(p, q, None).unwrap();
            assert!(quiver.validate_square().ok, "({p},{q})");
            let alg = SuperpotentialAlgebra::from_torus(&quiver).unwrap();
            let tau = Impression::build_tau(&quiver).unwrap();
            assert!(check_well_defined(&alg, &tau), "({p},{q})");
            assert!(
                homogeneity_check(&quiver, &tau, 2 * (p as u32 + 2)).homogeneous,
                "({p},{q})"
            );
        }
    }

    #[test]
    fn figure_presentations_of_y42_exist() {
        for tiles in ["BAAA", "PPAA", "BBAA"] {
            let seq = TileSequence::parse(tiles, 0).unwrap();
            assert_eq!(seq.q_value(), 2, "{tiles}");
            let quiver = generate_ypq(4, 2, Some(seq)).unwrap();
            assert!(quiver.validate_square().ok, "{tiles}");
        }
    }

    #[test]
    fn wrong_shift_parity_is_rejected() {
        let seq = TileSequence { tiles: vec![Tile::Plain], shift: 0 };
        assert!(matches!(
            generate_ypq(1, 0, Some(seq)),
            Err(Error::TileMismatch(_))
        ));
    }

    #[test]
    fn formula_for_y21_contains_the_listed_generators() {
        let monoid = ypq_center_formula(2, 1).unwrap();
        for m in [
            Monomial4::new(3, 0, 2, 0),
            Monomial4::new(2, 1, 2, 0),
            Monomial4::new(1, 2, 2, 0),
            Monomial4::new(0, 3, 2, 0),
            Monomial4::new(1, 0, 0, 2),
            Monomial4::new(0, 1, 0, 2),
        ] {
            assert!(monoid.generators().contains(&m), "{m}");
        }
    }

    #[test]
    fn orbifold_case_degenerates_to_a_single_y2_generator() {
        let monoid = ypq_center_formula(3, 3).unwrap();
        let y2_family: Vec<_> = monoid
            .generators()
            .iter()
            .filter(|m| m.0[3] == 3 && m.0[2] == 0)
            .collect();
        assert_eq!(y2_family, vec![&Monomial4::new(0, 0, 0, 3)]);
    }

    #[test]
    fn center_matches_formula_small_cases() {
        assert!(center_matches_formula(1, 0, 8).unwrap());
        assert!(center_matches_formula(2, 1, 8).unwrap());
    }

    #[test]
    fn rcharges_for_y21() {
        let t = rcharge_table(2, 1).unwrap();
        let root13 = 13f64.sqrt();
        assert!((t.r_xy1 - (-1.0 + root13) / 3.0).abs() < 1e-12);
        assert!((t.r_y2 - (-3.0 + root13)).abs() < 1e-12);
        assert!((t.r_x - 4.0 / 3.0 * (4.0 - root13)).abs() < 1e-12);
        assert!((t.r_y1 - (-17.0 + 5.0 * root13) / 3.0).abs() < 1e-12);
        assert!(t.additivity_defect() < 1e-9);
        assert!(matches!(rcharge_table(2, 0), Err(Error::InvalidPQ(_))));
    }

    #[test]
    fn formula_generators_are_torus_invariant() {
        for (p, q) in [(1, 0), (2, 1), (4, 2), (4, 4)] {
            let weights = torus_action_weights(p, q);
            for g in ypq_center_formula(p, q).unwrap().generators() {
                assert_eq!(weights.lambda_weight(g), 0, "({p},{q}) {g}");
                assert_eq!(weights.omega_weight(g), 0, "({p},{q}) {g}");
            }
        }
    }

    #[test]
    fn y40_double_impurity_module_generators() {
        let seq = TileSequence::parse("ABAB", 0).unwrap();
        assert_eq!(seq.q_value(), 0);
        let quiver = generate_ypq(4, 0, Some(seq)).unwrap();
        let tau = Impression::build_tau(&quiver).unwrap();
        let gens = vertex_module_generators(&quiver, &tau, 1, 10).unwrap();
        let target = vec![Monomial4::new(0, 0, 0, 2), Monomial4::new(0, 0, 2, 0)];
        assert!(
            gens.values().any(|g| *g == target),
            "no vertex generated by y1^2, y2^2 over the center: {gens:?}"
        );
    }
}
