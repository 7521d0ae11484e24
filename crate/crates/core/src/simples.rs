//! Large simple representations from points of the impression space,
//! irreducibility by span saturation, and moment-map moduli scans.

use crate::algebra::SuperpotentialAlgebra;
use crate::error::{Error, Result};
use crate::impression::Impression;
use crate::linalg::{qint, Q, RowSpace};
use crate::monomial::Monomial4;
use crate::quiver::{ArrowId, TorusQuiver};
use num::complex::Complex64;
use num::traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// An exact one-dimensional-per-vertex representation: every arrow acts by
/// the scalar obtained by evaluating its monomial label at a point.
#[derive(Clone, Debug)]
pub struct Representation {
    pub point: [Q; 4],
    pub scalars: BTreeMap<ArrowId, Q>,
    pub vertex_count: usize,
    /// tail/head of each arrow, for the span computation.
    arrows: Vec<(ArrowId, usize, usize)>,
}

fn eval_monomial(point: &[Q; 4], m: &Monomial4) -> Q {
    let mut out = Q::one();
    for (k, &e) in m.0.iter().enumerate() {
        for _ in 0..e {
            out *= &point[k];
        }
    }
    out
}

/// Evaluate the impression at a point of k^4 and verify the relations vanish
/// exactly on the resulting representation.
pub fn large_simple(
    alg: &SuperpotentialAlgebra,
    tau: &Impression,
    point: [Q; 4],
) -> Result<Representation> {
    let mut scalars = BTreeMap::new();
    let mut arrows = Vec::new();
    for a in &alg.quiver().arrows {
        scalars.insert(a.id, eval_monomial(&point, &tau.arrow_monomial(a.id)?));
        arrows.push((a.id, a.tail, a.head));
    }
    for rel in alg.relations() {
        let mut sum = Q::zero();
        for (p, c) in rel.element.terms() {
            sum += c * &eval_monomial(&point, &tau.tau_path(p));
        }
        if !sum.is_zero() {
            return Err(Error::RelationViolation(format!(
                "derivative of arrow {} evaluates to {sum}",
                rel.arrow
            )));
        }
    }
    Ok(Representation { point, scalars, vertex_count: alg.vertex_count(), arrows })
}

impl Representation {
    /// Arrows acting by a nonzero scalar.
    pub fn support(&self) -> BTreeSet<ArrowId> {
        self.scalars
            .iter()
            .filter(|(_, s)| !s.is_zero())
            .map(|(a, _)| *a)
            .collect()
    }

    /// Every vertex block is one-dimensional by construction.
    pub fn block_dims(&self) -> Vec<usize> {
        vec![1; self.vertex_count]
    }
}

/// Burnside criterion: the algebra generated by the vertex idempotents and
/// the arrow matrices spans the full matrix algebra.
pub fn is_irreducible(rep: &Representation) -> Result<bool> {
    let n = rep.vertex_count;
    if n > 64 {
        return Err(Error::DimensionCap(format!("{n} > 64")));
    }
    let dim = n * n;
    let mat = |entries: Vec<(usize, usize, Q)>| -> Vec<Q> {
        let mut m = vec![Q::zero(); dim];
        for (r, c, v) in entries {
            m[r * n + c] += v;
        }
        m
    };
    let mut gens: Vec<Vec<Q>> = Vec::new();
    for i in 0..n {
        gens.push(mat(vec![(i, i, Q::one())]));
    }
    for &(id, tail, head) in &rep.arrows {
        let s = rep.scalars[&id].clone();
        if !s.is_zero() {
            gens.push(mat(vec![(head - 1, tail - 1, s)]));
        }
    }
    let mul = |a: &[Q], b: &[Q]| -> Vec<Q> {
        let mut out = vec![Q::zero(); dim];
        for r in 0..n {
            for k in 0..n {
                if a[r * n + k].is_zero() {
                    continue;
                }
                for c in 0..n {
                    if !b[k * n + c].is_zero() {
                        out[r * n + c] += &a[r * n + k] * &b[k * n + c];
                    }
                }
            }
        }
        out
    };
    let mut space = RowSpace::new(dim);
    let mut worklist: Vec<Vec<Q>> = Vec::new();
    for g in &gens {
        if space.insert(g.clone()) {
            worklist.push(g.clone());
        }
    }
    while let Some(m) = worklist.pop() {
        if space.dim() == dim {
            return Ok(true);
        }
        for g in &gens {
            let prod = mul(&m, g);
            if space.insert(prod.clone()) {
                worklist.push(prod);
            }
        }
    }
    Ok(space.dim() == dim)
}

/// The real moment map of the (p, q) torus action.
pub fn moment_map(p: usize, q: usize, point: &[Complex64; 4]) -> f64 {
    let (p, q) = (p as f64, q as f64);
    0.5 * (-p * point[0].norm_sqr() - p * point[1].norm_sqr()
        + (p + q) * point[2].norm_sqr()
        + (p - q) * point[3].norm_sqr())
}

/// One sampled representation on a moment-map level set.
#[derive(Clone, Debug, Serialize)]
pub struct ModuliSample {
    /// (re, im) pairs for (x1, x2, y1, y2).
    pub point: [(f64, f64); 4],
    pub mu: f64,
    pub support: BTreeSet<ArrowId>,
    pub irreducible: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SupportGroup {
    pub support: Vec<ArrowId>,
    pub count: usize,
    pub irreducible: Vec<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuliScan {
    pub p: usize,
    pub q: usize,
    pub level: f64,
    pub samples: Vec<ModuliSample>,
    pub groups: Vec<SupportGroup>,
}

/// Sample the level set mu = sign(r) r^2/2 on the slice picked by the sign of
/// r (x1 = x2 = 0 above, y1 = y2 = 0 below, everything nonzero at zero),
/// recording support patterns and irreducibility.
pub fn moduli_scan(
    quiver: &TorusQuiver,
    tau: &Impression,
    alg: &SuperpotentialAlgebra,
    p: usize,
    q: usize,
    level: f64,
    samples: usize,
    seed: u64,
) -> Result<ModuliScan> {
    if samples == 0 {
        return Err(Error::EmptyLevelSet("need at least one sample".into()));
    }
    if p == 0 || q > p {
        return Err(Error::InvalidPQ(format!("({p},{q})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..samples {
        let point = sample_point(&mut rng, p, q, level)?;
        let mu = moment_map(p, q, &point);
        let target = level.signum() * level * level / 2.0;
        if (mu - target).abs() > 1e-12 {
            return Err(Error::InternalInconsistency(format!(
                "sampled mu {mu} differs from the level {target}"
            )));
        }
        // exact surrogate with the same vanishing pattern decides
        // irreducibility; the Burnside span only sees the support
        let surrogate: [Q; 4] = [
            rational_like(point[0], 2),
            rational_like(point[1], 3),
            rational_like(point[2], 5),
            rational_like(point[3], 7),
        ];
        let rep = large_simple(alg, tau, surrogate)?;
        let support: BTreeSet<ArrowId> = quiver
            .arrows()
            .iter()
            .filter(|a| {
                let m = tau.arrow_monomial(a.id).unwrap();
                m.0.iter().zip(point.iter()).all(|(&e, z)| e == 0 || z.norm_sqr() > 0.0)
            })
            .map(|a| a.id)
            .collect();
        debug_assert_eq!(support, rep.support());
        let irreducible = is_irreducible(&rep)?;
        out.push(ModuliSample {
            point: point.map(|z| (z.re, z.im)),
            mu,
            support,
            irreducible,
        });
    }
    let mut grouped: BTreeMap<Vec<ArrowId>, SupportGroup> = BTreeMap::new();
    for s in &out {
        let key: Vec<ArrowId> = s.support.iter().copied().collect();
        let entry = grouped.entry(key.clone()).or_insert_with(|| SupportGroup {
            support: key,
            count: 0,
            irreducible: Vec::new(),
        });
        entry.count += 1;
        if !entry.irreducible.contains(&s.irreducible) {
            entry.irreducible.push(s.irreducible);
        }
    }
    Ok(ModuliScan {
        p,
        q,
        level,
        samples: out,
        groups: grouped.into_values().collect(),
    })
}

fn rational_like(z: Complex64, prime: i64) -> Q {
    if z.norm_sqr() > 0.0 {
        qint(prime)
    } else {
        Q::zero()
    }
}

fn unit_phase(rng: &mut ChaCha8Rng) -> Complex64 {
    let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    Complex64::new(theta.cos(), theta.sin())
}

fn sample_point(rng: &mut ChaCha8Rng, p: usize, q: usize, level: f64) -> Result<[Complex64; 4]> {
    let (pf, qf) = (p as f64, q as f64);
    let r2 = level * level;
    let zero = Complex64::new(0.0, 0.0);
    if level > 0.0 {
        // x1 = x2 = 0: (p+q)|y1|^2 + (p-q)|y2|^2 = r^2
        let (m1, m2) = if p == q {
            ((r2 / (pf + qf)).sqrt(), rng.gen_range(0.1..1.0))
        } else {
            let t: f64 = rng.gen_range(0.05..0.95);
            (
                (r2 * t / (pf + qf)).sqrt(),
                (r2 * (1.0 - t) / (pf - qf)).sqrt(),
            )
        };
        Ok([zero, zero, unit_phase(rng) * m1, unit_phase(rng) * m2])
    } else if level < 0.0 {
        // y1 = y2 = 0: p(|x1|^2 + |x2|^2) = r^2
        let t: f64 = rng.gen_range(0.05..0.95);
        let m1 = (r2 * t / pf).sqrt();
        let m2 = (r2 * (1.0 - t) / pf).sqrt();
        Ok([unit_phase(rng) * m1, unit_phase(rng) * m2, zero, zero])
    } else {
        // everything nonzero on the zero level
        let y1: f64 = rng.gen_range(0.2..1.0);
        let y2: f64 = rng.gen_range(0.2..1.0);
        let xx = ((pf + qf) * y1 * y1 + (pf - qf) * y2 * y2) / pf;
        let t: f64 = rng.gen_range(0.05..0.95);
        let m1 = (xx * t).sqrt();
        let m2 = (xx * (1.0 - t)).sqrt();
        Ok([
            unit_phase(rng) * m1,
            unit_phase(rng) * m2,
            unit_phase(rng) * y1,
            unit_phase(rng) * y2,
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ypq::generate_ypq;

    fn qp(a: i64, b: i64, c: i64, d: i64) -> [Q; 4] {
        [qint(a), qint(b), qint(c), qint(d)]
    }

    #[test]
    fn conifold_point_representations() {
        let q = fixtures::conifold();
        let alg = fixtures::conifold_algebra();
        let tau = Impression::build_tau(&q).unwrap();
        let rep = large_simple(&alg, &tau, qp(1, 1, 1, 1)).unwrap();
        assert!(rep.scalars.values().all(|s| *s == Q::one()));
        assert!(is_irreducible(&rep).unwrap());
        let rep2 = large_simple(&alg, &tau, qp(2, 3, 5, 7)).unwrap();
        assert_eq!(rep2.scalars[&3], qint(2)); // x1 arrow
        assert!(is_irreducible(&rep2).unwrap());
        // y1 = y2 = 0 leaves an invariant vertex subspace
        let rep3 = large_simple(&alg, &tau, qp(1, 1, 0, 0)).unwrap();
        assert!(!is_irreducible(&rep3).unwrap());
    }

    #[test]
    fn block_dims_are_all_one() {
        let q = fixtures::conifold();
        let alg = fixtures::conifold_algebra();
        let tau = Impression::build_tau(&q).unwrap();
        let rep = large_simple(&alg, &tau, qp(1, 2, 3, 4)).unwrap();
        assert!(rep.block_dims().iter().all(|d| *d == 1));
    }

    #[test]
    fn moment_map_values() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(moment_map(1, 0, &[one, one, one, one]), 0.0);
        assert_eq!(moment_map(4, 2, &[zero, zero, one, one]), 4.0);
    }

    #[test]
    fn moment_map_is_phase_invariant() {
        let z = Complex64::new(0.6, 0.8);
        let w = Complex64::new(-0.8, 0.6);
        assert!(
            (moment_map(3, 1, &[z, w, z, w]) - moment_map(3, 1, &[w, z, w, z])).abs() < 1e-12
        );
    }

    #[test]
    fn center_monomials_act_by_the_same_scalar_everywhere() {
        use crate::impression::{center_generators, recover_path};
        let q = generate_ypq(2, 1, None).unwrap();
        let alg = crate::algebra::SuperpotentialAlgebra::from_torus(&q).unwrap();
        let tau = Impression::build_tau(&q).unwrap();
        let point = qp(2, 3, 5, 7);
        let rep = large_simple(&alg, &tau, point.clone()).unwrap();
        for g in center_generators(&q, &tau, 8).unwrap() {
            let mut values = BTreeSet::new();
            for v in q.vertices() {
                let path = recover_path(&q, &tau, v.id, v.id, g).expect("cycle exists everywhere");
                let mut s = Q::one();
                for a in path {
                    s *= &rep.scalars[&a];
                }
                values.insert(s);
            }
            assert_eq!(values.len(), 1, "{g}");
        }
    }

    #[test]
    fn scan_patterns_for_y42() {
        let quiver = generate_ypq(4, 2, None).unwrap();
        let alg = crate::algebra::SuperpotentialAlgebra::from_torus(&quiver).unwrap();
        let tau = Impression::build_tau(&quiver).unwrap();
        let scan = moduli_scan(&quiver, &tau, &alg, 4, 2, 1.5, 8, 11).unwrap();
        let expected: BTreeSet<ArrowId> = quiver
            .arrows()
            .iter()
            .filter(|a| {
                let m = tau.arrow_monomial(a.id).unwrap();
                m.0[0] == 0 && m.0[1] == 0
            })
            .map(|a| a.id)
            .collect();
        for s in &scan.samples {
            assert_eq!(s.support, expected);
            assert!(!s.irreducible);
        }
        let zero_scan = moduli_scan(&quiver, &tau, &alg, 4, 2, 0.0, 8, 11).unwrap();
        for s in &zero_scan.samples {
            assert!(s.irreducible);
            assert_eq!(s.support.len(), quiver.arrows().len());
        }
    }
}
