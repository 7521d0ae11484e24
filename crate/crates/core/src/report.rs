//! Serializable report structures shared by the command-line front end.
//! Rationals print as "p/q" strings and floats as fixed-precision decimals so
//! reports diff byte-stably.

use crate::impression::HomogeneityReport;
use crate::linalg::Q;
use crate::monomial::Monomial4;
use crate::quiver::ArrowId;
use crate::toric::{BinomialRelation, RegularSequenceCycles, SocleReport};
use crate::ypq::RChargeTable;
use serde::Serialize;
use std::collections::BTreeMap;

pub fn rational_string(q: &Q) -> String {
    if q.denom() == &num::BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn float_string(x: f64) -> String {
    format!("{x:.12}")
}

#[derive(Serialize)]
pub struct CenterReport {
    pub max_degree: u32,
    pub homogeneous: bool,
    pub generators: Vec<[u32; 4]>,
}

#[derive(Serialize)]
pub struct ModuleGeneratorsEntry {
    pub vertex: usize,
    pub generators: Vec<[u32; 4]>,
}

#[derive(Serialize)]
pub struct HomogeneityJson {
    pub max_degree: u32,
    pub homogeneous: bool,
    pub witness: Option<WitnessJson>,
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub monomial: [u32; 4],
    pub vertex_with: usize,
    pub vertex_without: usize,
}

impl From<&HomogeneityReport> for HomogeneityJson {
    fn from(r: &HomogeneityReport) -> Self {
        HomogeneityJson {
            max_degree: r.max_degree,
            homogeneous: r.homogeneous,
            witness: r.witness.as_ref().map(|w| WitnessJson {
                monomial: w.monomial.0,
                vertex_with: w.vertex_with,
                vertex_without: w.vertex_without,
            }),
        }
    }
}

#[derive(Serialize)]
pub struct ToricReport {
    pub rank: usize,
    pub generators: Vec<[u32; 4]>,
    pub saturated: bool,
    pub saturation_bound: u32,
    pub saturation_witness: Option<[u32; 4]>,
    pub socle_dimension: usize,
    pub socle_representatives: Vec<[u32; 4]>,
    pub gorenstein: bool,
    pub relations: Vec<RelationJson>,
    pub directional_cycles: DirectionalCyclesJson,
}

#[derive(Serialize)]
pub struct RelationJson {
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
    pub exponent: [u32; 4],
}

impl From<&BinomialRelation> for RelationJson {
    fn from(r: &BinomialRelation) -> Self {
        RelationJson { lhs: r.lhs.clone(), rhs: r.rhs.clone(), exponent: r.exponent.0 }
    }
}

#[derive(Serialize)]
pub struct DirectionalCyclesJson {
    pub alpha1: [u32; 4],
    pub alpha2: [u32; 4],
    pub beta1: [u32; 4],
    pub beta2: [u32; 4],
    pub sigma: [u32; 4],
    pub swapped: bool,
    pub socle_exponent_note: String,
}

impl DirectionalCyclesJson {
    pub fn new(c: &RegularSequenceCycles) -> Self {
        DirectionalCyclesJson {
            alpha1: c.alpha1.0,
            alpha2: c.alpha2.0,
            beta1: c.beta1.0,
            beta2: c.beta2.0,
            sigma: c.sigma.0,
            swapped: c.swapped,
            socle_exponent_note: if c.swapped {
                "roles of x and y exchanged; socle exponent taken from the swapped formula".into()
            } else {
                "".into()
            },
        }
    }
}

pub fn socle_json(r: &SocleReport) -> (usize, Vec<[u32; 4]>, bool) {
    (
        r.dimension,
        r.representatives.iter().map(|m| m.0).collect(),
        r.gorenstein,
    )
}

#[derive(Serialize)]
pub struct BdReport {
    pub vertex: usize,
    pub terms: Vec<Vec<usize>>,
    pub is_complex: bool,
    pub max_degree: u64,
    /// (junction, degree) -> homology dimension, nonzero entries only.
    pub homology: Vec<HomologyEntry>,
    pub exact: bool,
}

#[derive(Serialize)]
pub struct HomologyEntry {
    pub junction: usize,
    pub degree: u64,
    pub dimension: usize,
}

#[derive(Serialize)]
pub struct RepReport {
    pub point: [String; 4],
    pub scalars: BTreeMap<ArrowId, String>,
    pub irreducible: bool,
    pub support: Vec<ArrowId>,
}

#[derive(Serialize)]
pub struct RChargeReport {
    pub p: usize,
    pub q: usize,
    pub r_xy1: String,
    pub r_x: String,
    pub r_y2: String,
    pub r_y1: String,
    pub r_xy2: String,
    pub additivity_defect: String,
}

impl From<&RChargeTable> for RChargeReport {
    fn from(t: &RChargeTable) -> Self {
        RChargeReport {
            p: t.p,
            q: t.q,
            r_xy1: float_string(t.r_xy1),
            r_x: float_string(t.r_x),
            r_y2: float_string(t.r_y2),
            r_y1: float_string(t.r_y1),
            r_xy2: float_string(t.r_xy2),
            additivity_defect: float_string(t.additivity_defect()),
        }
    }
}

pub fn monomials_json(ms: &[Monomial4]) -> Vec<[u32; 4]> {
    ms.iter().map(|m| m.0).collect()
}
