//! Toric data of the center: exponent monoids, rank, saturation, binomial
//! relations, directional regular-sequence cycles, and the Gorenstein (socle)
//! invariant via the interior ideal.

use crate::error::{Error, Result};
use crate::impression::{corner_monomials, homogeneity_check, Impression};
use crate::linalg::{Cone, IntLattice};
use crate::monomial::Monomial4;
use crate::quiver::TorusQuiver;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A finitely generated submonoid of N^4 with its ambient lattice and cone.
#[derive(Clone, Debug)]
pub struct ExponentMonoid {
    gens: Vec<Monomial4>,
    lattice: IntLattice,
    cone: Cone,
}

impl ExponentMonoid {
    pub fn new(generators: &[Monomial4]) -> ExponentMonoid {
        let mut gens: Vec<Monomial4> =
            generators.iter().copied().filter(|g| !g.is_one()).collect();
        gens.sort();
        gens.dedup();
        let vectors: Vec<Vec<i64>> = gens
            .iter()
            .map(|g| g.0.iter().map(|&x| x as i64).collect())
            .collect();
        let lattice = IntLattice::span(&vectors, 4);
        let cone = Cone::from_generators(&vectors, 4);
        ExponentMonoid { gens, lattice, cone }
    }

    pub fn generators(&self) -> &[Monomial4] {
        &self.gens
    }

    /// Rank of the lattice generated by the monoid.
    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    /// All monoid elements of total degree at most `max_degree`.
    pub fn elements_upto(&self, max_degree: u32) -> BTreeSet<Monomial4> {
        let mut out = BTreeSet::new();
        let mut queue = VecDeque::new();
        out.insert(Monomial4::ONE);
        queue.push_back(Monomial4::ONE);
        while let Some(m) = queue.pop_front() {
            for g in &self.gens {
                let next = m + *g;
                if next.degree() <= max_degree && out.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        out
    }

    /// Monoids agree on every element of degree at most `max_degree`.
    pub fn equals_upto(&self, other: &ExponentMonoid, max_degree: u32) -> bool {
        self.elements_upto(max_degree) == other.elements_upto(max_degree)
    }

    fn vec_of(m: &Monomial4) -> Vec<i64> {
        m.0.iter().map(|&x| x as i64).collect()
    }

    /// Every lattice point of the cone with coordinate sum at most `bound`
    /// lies in the monoid; the witness is the first gap found.
    pub fn saturation_check(&self, bound: u32) -> (bool, Option<Monomial4>) {
        let elements = self.elements_upto(bound);
        let mut point = [0u32; 4];
        let mut witness = None;
        enumerate_points(&mut point, 0, bound, &mut |p| {
            if witness.is_some() {
                return;
            }
            let m = Monomial4(*p);
            if m.is_one() || elements.contains(&m) {
                return;
            }
            let v = Self::vec_of(&m);
            if self.lattice.contains(&v) && self.cone.contains(&v) {
                witness = Some(m);
            }
        });
        (witness.is_none(), witness)
    }

    /// Inclusion-minimal binomial relations among the generators: pairs of
    /// distinct multiplicity vectors with equal exponent sums, total
    /// multiplicity at most `degree_bound`.
    pub fn binomial_relations(&self, degree_bound: u32) -> Vec<BinomialRelation> {
        let g = self.gens.len();
        let mut by_exponent: BTreeMap<Monomial4, Vec<Vec<u32>>> = BTreeMap::new();
        let mut combo = vec![0u32; g];
        enumerate_combos(&mut combo, 0, degree_bound, &mut |c| {
            let mut m = Monomial4::ONE;
            for (k, &mult) in c.iter().enumerate() {
                m += self.gens[k].pow(mult);
            }
            by_exponent.entry(m).or_default().push(c.to_vec());
        });
        let mut relations: Vec<BinomialRelation> = Vec::new();
        for (exponent, combos) in &by_exponent {
            for i in 0..combos.len() {
                for j in (i + 1)..combos.len() {
                    let (lhs, rhs) = if combos[i] <= combos[j] {
                        (combos[i].clone(), combos[j].clone())
                    } else {
                        (combos[j].clone(), combos[i].clone())
                    };
                    relations.push(BinomialRelation { lhs, rhs, exponent: *exponent });
                }
            }
        }
        relations.sort();
        let minimal: Vec<BinomialRelation> = relations
            .iter()
            .filter(|r| {
                !relations.iter().any(|other| {
                    other != *r
                        && ((le(&other.lhs, &r.lhs) && le(&other.rhs, &r.rhs))
                            || (le(&other.lhs, &r.rhs) && le(&other.rhs, &r.lhs)))
                })
            })
            .cloned()
            .collect();
        minimal
    }

    /// Monoid membership of a single monomial, degree-bounded by the element.
    pub fn contains(&self, m: &Monomial4) -> bool {
        self.elements_upto(m.degree()).contains(m)
    }

    /// Minimal generators of the interior (canonical) ideal found up to the
    /// cap: elements strictly inside the cone that are not a monoid generator
    /// plus another interior element.
    pub fn interior_generators(&self, cap: u32) -> Vec<Monomial4> {
        let elements = self.elements_upto(cap);
        let interior: BTreeSet<Monomial4> = elements
            .iter()
            .filter(|m| self.cone.contains_strictly(&Self::vec_of(m)))
            .copied()
            .collect();
        interior
            .iter()
            .filter(|e| {
                !self.gens.iter().filter(|g| g.divides(e)).any(|g| {
                    interior.contains(&g.checked_div(e).unwrap())
                })
            })
            .copied()
            .collect()
    }

    /// Basis of the monomial quotient by the ideal the given elements
    /// generate, certified finite by an empty top-window frontier.
    ///
    /// Divisibility is componentwise, which agrees with monoid divisibility
    /// for the centers handled here (the divisibility-transfer property).
    pub fn monomial_quotient(
        &self,
        ideal: &[Monomial4],
        cap: u32,
    ) -> Result<Vec<Monomial4>> {
        let elements = self.elements_upto(cap);
        let survivors: Vec<Monomial4> = elements
            .iter()
            .filter(|m| !ideal.iter().any(|a| a.divides(m)))
            .copied()
            .collect();
        let max_gen = self.gens.iter().map(|g| g.degree()).max().unwrap_or(1);
        if cap < 2 * max_gen {
            return Err(Error::QuotientNotFiniteWithinCap(format!(
                "cap {cap} too small against generator degree {max_gen}"
            )));
        }
        // A survivor of degree > cap would leave a survivor prefix in the top
        // window, since survivors are closed under monoid prefixes.
        if let Some(bad) = survivors.iter().find(|m| m.degree() > cap - max_gen) {
            return Err(Error::QuotientNotFiniteWithinCap(format!(
                "survivor {bad} in the top degree window"
            )));
        }
        Ok(survivors)
    }
}

fn le(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

fn enumerate_points(buf: &mut [u32; 4], k: usize, remaining: u32, f: &mut impl FnMut(&[u32; 4])) {
    if k == 4 {
        f(buf);
        return;
    }
    for v in 0..=remaining {
        buf[k] = v;
        enumerate_points(buf, k + 1, remaining - v, f);
    }
    buf[k] = 0;
}

fn enumerate_combos(buf: &mut Vec<u32>, k: usize, remaining: u32, f: &mut impl FnMut(&[u32])) {
    if k == buf.len() {
        f(buf);
        return;
    }
    for v in 0..=remaining {
        buf[k] = v;
        enumerate_combos(buf, k + 1, remaining - v, f);
    }
    buf[k] = 0;
}

/// A binomial relation between generator multisets: lhs and rhs are
/// multiplicity vectors over the sorted generator list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BinomialRelation {
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
    pub exponent: Monomial4,
}

/// The four directional cycles and the unit cycle, with their wrap data.
#[derive(Clone, Debug)]
pub struct RegularSequenceCycles {
    pub alpha1: Monomial4,
    pub alpha2: Monomial4,
    pub beta1: Monomial4,
    pub beta2: Monomial4,
    pub sigma: Monomial4,
    /// Roles of x and y were exchanged (the grid is wider than tall).
    pub swapped: bool,
    /// Horizontal wrap multiplicity and transverse dressing of alpha1.
    pub u: u32,
    pub t: u32,
    /// Vertical wrap multiplicity and dressing of beta1.
    pub v: u32,
    pub s: u32,
}

/// Find cycles with images x1^{nu}(y1y2)^t, x2^{nu}(y1y2)^{nu-t},
/// y1^{mv}(x1x2)^s, y2^{mv}(x1x2)^{mv-s}, minimizing the wrap multiplicities
/// and then t, s. Roles of x and y are exchanged when n > m.
pub fn regular_sequence_cycles(
    q: &TorusQuiver,
    tau: &Impression,
    max_degree: u32,
) -> Result<RegularSequenceCycles> {
    let report = homogeneity_check(q, tau, max_degree);
    if !report.homogeneous {
        return Err(Error::NotHomogeneous(
            "directional cycles need equal corner rings".into(),
        ));
    }
    let corner = corner_monomials(q, tau, 1, max_degree);
    let swapped = q.n() > q.m();
    let search: BTreeSet<Monomial4> = if swapped {
        corner.iter().map(|m| m.transpose()).collect()
    } else {
        corner.clone()
    };
    let (n, m) = if swapped {
        (q.m() as u32, q.n() as u32)
    } else {
        (q.n() as u32, q.m() as u32)
    };
    let horizontal = directional_pair(&search, n, max_degree, |deg, dress| {
        (
            Monomial4::new(deg, 0, dress, dress),
            Monomial4::new(0, deg, deg - dress, deg - dress),
        )
    })
    .ok_or_else(|| Error::NotFound("no horizontal cycle pair within the cap".into()))?;
    let vertical = directional_pair(&search, m, max_degree, |deg, dress| {
        (
            Monomial4::new(dress, dress, deg, 0),
            Monomial4::new(deg - dress, deg - dress, 0, deg),
        )
    })
    .ok_or_else(|| Error::NotFound("no vertical cycle pair within the cap".into()))?;
    let sigma = Monomial4::new(1, 1, 1, 1);
    if !search.contains(&sigma) {
        return Err(Error::NotFound("unit cycle missing from the corner ring".into()));
    }
    let back = |m: Monomial4| if swapped { m.transpose() } else { m };
    Ok(RegularSequenceCycles {
        alpha1: back(horizontal.0),
        alpha2: back(horizontal.1),
        beta1: back(vertical.0),
        beta2: back(vertical.1),
        sigma,
        swapped,
        u: horizontal.2 / n,
        t: horizontal.3,
        v: vertical.2 / m,
        s: vertical.3,
    })
}

/// Smallest wrap multiple `deg` of `step`, then smallest dressing, with both
/// paired monomials realized.
fn directional_pair(
    set: &BTreeSet<Monomial4>,
    step: u32,
    max_degree: u32,
    make: impl Fn(u32, u32) -> (Monomial4, Monomial4),
) -> Option<(Monomial4, Monomial4, u32, u32)> {
    let mut deg = step;
    while deg <= max_degree {
        for dress in 0..=deg {
            let (first, second) = make(deg, dress);
            if first.degree() > max_degree || second.degree() > max_degree {
                continue;
            }
            if set.contains(&first) && set.contains(&second) {
                return Some((first, second, deg, dress));
            }
        }
        deg += step;
    }
    None
}

/// Socle data of an artinian reduction: the Cohen-Macaulay type, computed as
/// the number of minimal generators of the interior ideal, with those
/// generators as representatives. Type one means Gorenstein.
#[derive(Clone, Debug)]
pub struct SocleReport {
    pub dimension: usize,
    pub representatives: Vec<Monomial4>,
    pub gorenstein: bool,
    pub cap: u32,
}

pub fn gorenstein_socle(monoid: &ExponentMonoid, cap: u32) -> Result<SocleReport> {
    if monoid.generators().is_empty() {
        return Err(Error::NotFound("empty monoid".into()));
    }
    let reps = monoid.interior_generators(cap);
    let max_gen = monoid.generators().iter().map(|g| g.degree()).max().unwrap_or(1);
    if reps.iter().any(|r| r.degree() + max_gen > cap) {
        return Err(Error::QuotientNotFiniteWithinCap(format!(
            "interior generators too close to the cap {cap}"
        )));
    }
    Ok(SocleReport {
        dimension: reps.len(),
        gorenstein: reps.len() == 1,
        representatives: reps,
        cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::impression;

    fn conifold_monoid() -> ExponentMonoid {
        ExponentMonoid::new(&[
            Monomial4::new(1, 0, 1, 0),
            Monomial4::new(0, 1, 0, 1),
            Monomial4::new(1, 0, 0, 1),
            Monomial4::new(0, 1, 1, 0),
        ])
    }

    #[test]
    fn ranks() {
        assert_eq!(conifold_monoid().rank(), 3);
        let free3 = ExponentMonoid::new(&[
            Monomial4::new(0, 1, 0, 0),
            Monomial4::new(0, 0, 1, 0),
            Monomial4::new(1, 0, 0, 1),
        ]);
        assert_eq!(free3.rank(), 3);
        let single = ExponentMonoid::new(&[Monomial4::new(2, 0, 0, 0)]);
        assert_eq!(single.rank(), 1);
    }

    #[test]
    fn saturation() {
        let (ok, _) = conifold_monoid().saturation_check(8);
        assert!(ok);
        let gapped = ExponentMonoid::new(&[
            Monomial4::new(2, 0, 0, 0),
            Monomial4::new(3, 0, 0, 0),
        ]);
        let (ok, witness) = gapped.saturation_check(8);
        assert!(!ok);
        assert_eq!(witness, Some(Monomial4::new(1, 0, 0, 0)));
    }

    #[test]
    fn conifold_binomials() {
        let rels = conifold_monoid().binomial_relations(3);
        assert_eq!(rels.len(), 1);
        let r = &rels[0];
        // generators sort as b=(0,1,0,1), d=(0,1,1,0), c=(1,0,0,1), a=(1,0,1,0):
        // a b = c d appears as multiplicities {0,3} vs {1,2}
        assert_eq!(r.lhs, vec![1, 0, 0, 1]);
        assert_eq!(r.rhs, vec![0, 1, 1, 0]);
        assert_eq!(r.exponent, Monomial4::new(1, 1, 1, 1));
    }

    #[test]
    fn free_monoid_has_no_binomials() {
        let free3 = ExponentMonoid::new(&[
            Monomial4::new(0, 1, 0, 0),
            Monomial4::new(0, 0, 1, 0),
            Monomial4::new(1, 0, 0, 1),
        ]);
        assert!(free3.binomial_relations(4).is_empty());
    }

    #[test]
    fn conifold_socle_is_sigma() {
        let report = gorenstein_socle(&conifold_monoid(), 10).unwrap();
        assert_eq!(report.dimension, 1);
        assert!(report.gorenstein);
        assert_eq!(report.representatives, vec![Monomial4::new(1, 1, 1, 1)]);
    }

    #[test]
    fn veronese_cubic_has_type_two() {
        let veronese = ExponentMonoid::new(&[
            Monomial4::new(3, 0, 0, 0),
            Monomial4::new(2, 1, 0, 0),
            Monomial4::new(1, 2, 0, 0),
            Monomial4::new(0, 3, 0, 0),
        ]);
        let report = gorenstein_socle(&veronese, 12).unwrap();
        assert_eq!(report.dimension, 2);
        assert!(!report.gorenstein);
        assert_eq!(
            report.representatives,
            vec![Monomial4::new(1, 2, 0, 0), Monomial4::new(2, 1, 0, 0)]
        );
    }

    #[test]
    fn conifold_directional_cycles() {
        let q = fixtures::conifold();
        let tau = impression::Impression::build_tau(&q).unwrap();
        let cycles = regular_sequence_cycles(&q, &tau, 8).unwrap();
        assert!(cycles.swapped);
        // swapped: the alpha pair runs vertically (y-powers)
        assert_eq!(cycles.alpha1, Monomial4::new(1, 1, 2, 0));
        assert_eq!(cycles.alpha2, Monomial4::new(1, 1, 0, 2));
        assert_eq!(cycles.beta1, Monomial4::new(2, 0, 1, 1));
        assert_eq!(cycles.beta2, Monomial4::new(0, 2, 1, 1));
        assert_eq!(cycles.sigma, Monomial4::new(1, 1, 1, 1));
    }

    #[test]
    fn three_monomial_quotient_of_the_conifold_is_not_finite() {
        // the quotient by three directional cycles keeps a whole extreme ray
        let monoid = conifold_monoid();
        let ideal = [
            Monomial4::new(1, 1, 2, 0),
            Monomial4::new(1, 1, 0, 2),
            Monomial4::new(2, 0, 1, 1),
        ];
        assert!(matches!(
            monoid.monomial_quotient(&ideal, 12),
            Err(Error::QuotientNotFiniteWithinCap(_))
        ));
    }

    #[test]
    fn quotient_by_all_four_generators_is_the_ground_field() {
        let monoid = conifold_monoid();
        let ideal: Vec<Monomial4> = monoid.generators().to_vec();
        let basis = monoid.monomial_quotient(&ideal, 10).unwrap();
        assert_eq!(basis, vec![Monomial4::ONE]);
    }
}
