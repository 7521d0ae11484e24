//! The impression: arrows labeled by monomials in k[x1,x2,y1,y2] according to
//! their geometric class, extended multiplicatively to paths, and the
//! corner-ring computations built on top of it (well-definedness, degreewise
//! injectivity, homogeneity, center and module generators).

use crate::algebra::{AlgebraElement, Path, SuperpotentialAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::monomial::Monomial4;
use crate::quiver::{ArrowId, TorusQuiver, VertexId};
use num::traits::Zero;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

/// Arrow-to-monomial labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Impression {
    exps: BTreeMap<ArrowId, Monomial4>,
}

impl Impression {
    /// The class labeling: E -> x1, W -> x2, N -> y1, S -> y2 and the four
    /// diagonal products.
    pub fn build_tau(q: &TorusQuiver) -> Result<Impression> {
        let report = q.validate_square();
        if !report.ok {
            return Err(Error::NotSquare(report.violations.join("; ")));
        }
        Ok(Impression::from_classes(q))
    }

    /// The class labeling without the square precondition.
    pub fn from_classes(q: &TorusQuiver) -> Impression {
        Impression {
            exps: q.arrows().iter().map(|a| (a.id, a.class.monomial())).collect(),
        }
    }

    pub fn arrow_monomial(&self, a: ArrowId) -> Result<Monomial4> {
        self.exps.get(&a).copied().ok_or(Error::UnknownArrow(a))
    }

    /// Componentwise sum of the arrow exponent vectors; vertex paths map to 1.
    pub fn tau_path(&self, p: &Path) -> Monomial4 {
        let mut out = Monomial4::ONE;
        for a in p.arrows() {
            out += self.exps[a];
        }
        out
    }

    /// Copy with one arrow relabeled (perturbation control for tests).
    pub fn with_label(&self, a: ArrowId, m: Monomial4) -> Impression {
        let mut out = self.clone();
        out.exps.insert(a, m);
        out
    }
}

/// True iff every relation generator, pushed through the impression
/// termwise, cancels exactly.
pub fn check_well_defined(alg: &SuperpotentialAlgebra, tau: &Impression) -> bool {
    for rel in alg.relations() {
        let mut sums: BTreeMap<Monomial4, Q> = BTreeMap::new();
        for (p, c) in rel.element.terms() {
            *sums.entry(tau.tau_path(p)).or_insert_with(Q::zero) += c;
        }
        if sums.values().any(|v| !v.is_zero()) {
            return false;
        }
    }
    true
}

/// Per-vertex sets of path monomials reachable from a start vertex.
#[derive(Clone, Debug)]
pub struct ReachableMonomials {
    pub start: VertexId,
    pub max_degree: u32,
    sets: BTreeMap<VertexId, BTreeSet<Monomial4>>,
}

impl ReachableMonomials {
    pub fn at(&self, v: VertexId) -> &BTreeSet<Monomial4> {
        static EMPTY: std::sync::OnceLock<BTreeSet<Monomial4>> = std::sync::OnceLock::new();
        self.sets.get(&v).unwrap_or_else(|| EMPTY.get_or_init(BTreeSet::new))
    }
}

/// Breadth-first enumeration of {tau(p) : p a path start -> v, deg <= D},
/// memoized on (vertex, monomial) states so only images are stored.
pub fn reachable_monomials(
    q: &TorusQuiver,
    tau: &Impression,
    start: VertexId,
    max_degree: u32,
) -> ReachableMonomials {
    let mut sets: BTreeMap<VertexId, BTreeSet<Monomial4>> = BTreeMap::new();
    let mut seen: HashSet<(VertexId, Monomial4)> = HashSet::new();
    let mut queue: VecDeque<(VertexId, Monomial4)> = VecDeque::new();
    seen.insert((start, Monomial4::ONE));
    queue.push_back((start, Monomial4::ONE));
    while let Some((v, m)) = queue.pop_front() {
        sets.entry(v).or_default().insert(m);
        for a in q.arrows().iter().filter(|a| a.tail == v) {
            let next = m + tau.arrow_monomial(a.id).unwrap();
            if next.degree() > max_degree {
                continue;
            }
            if seen.insert((a.head, next)) {
                queue.push_back((a.head, next));
            }
        }
    }
    ReachableMonomials { start, max_degree, sets }
}

/// Monomials of cycles at a vertex up to the degree cap.
pub fn corner_monomials(
    q: &TorusQuiver,
    tau: &Impression,
    vertex: VertexId,
    max_degree: u32,
) -> BTreeSet<Monomial4> {
    reachable_monomials(q, tau, vertex, max_degree).at(vertex).clone()
}

/// Recover one path start -> target realizing the given monomial, if any.
pub fn recover_path(
    q: &TorusQuiver,
    tau: &Impression,
    start: VertexId,
    target: VertexId,
    monomial: Monomial4,
) -> Option<Vec<ArrowId>> {
    let cap = monomial.degree();
    let mut parent: HashMap<(VertexId, Monomial4), (VertexId, Monomial4, ArrowId)> =
        HashMap::new();
    let mut queue: VecDeque<(VertexId, Monomial4)> = VecDeque::new();
    let mut seen: HashSet<(VertexId, Monomial4)> = HashSet::new();
    seen.insert((start, Monomial4::ONE));
    queue.push_back((start, Monomial4::ONE));
    while let Some((v, m)) = queue.pop_front() {
        if v == target && m == monomial {
            let mut arrows = Vec::new();
            let mut at = (v, m);
            while at != (start, Monomial4::ONE) {
                let (pv, pm, a) = parent[&at];
                arrows.push(a);
                at = (pv, pm);
            }
            arrows.reverse();
            return Some(arrows);
        }
        for a in q.arrows().iter().filter(|a| a.tail == v) {
            let next = m + tau.arrow_monomial(a.id).unwrap();
            if next.degree() > cap || !next.divides(&monomial) {
                continue;
            }
            if seen.insert((a.head, next)) {
                parent.insert((a.head, next), (v, m, a.id));
                queue.push_back((a.head, next));
            }
        }
    }
    None
}

/// Failure witness for the degreewise injectivity check.
#[derive(Clone, Debug)]
pub struct InjectivityFailure {
    pub tail: VertexId,
    pub head: VertexId,
    pub weight: u64,
    pub first: Path,
    pub second: Path,
}

/// Degreewise injectivity of the impression: in every slice, paths with equal
/// monomials must be exactly equal modulo the relations, and distinct
/// monomials must stay independent.
pub fn tau_injective_upto(
    alg: &SuperpotentialAlgebra,
    tau: &Impression,
    max_weight: u64,
) -> Result<Option<InjectivityFailure>> {
    let n = alg.vertex_count();
    for tail in 1..=n {
        for head in 1..=n {
            for weight in 0..=max_weight {
                let slice = alg.slice(tail, head, weight);
                let mut groups: BTreeMap<Monomial4, Vec<&Path>> = BTreeMap::new();
                for p in slice.paths() {
                    groups.entry(tau.tau_path(p)).or_default().push(p);
                }
                let mut rep_coords: Vec<(&Path, Vec<Q>)> = Vec::new();
                for (_, members) in &groups {
                    let rep = members[0];
                    let rep_c = slice
                        .coords(&AlgebraElement::from_path(rep.clone()))
                        .expect("path lives in its slice");
                    if rep_c.iter().all(|c| c.is_zero()) {
                        return Ok(Some(InjectivityFailure {
                            tail,
                            head,
                            weight,
                            first: rep.clone(),
                            second: rep.clone(),
                        }));
                    }
                    for other in &members[1..] {
                        let diff = AlgebraElement::from_path((*other).clone())
                            .sub(&AlgebraElement::from_path(rep.clone()));
                        let c = slice.coords(&diff).expect("path lives in its slice");
                        if c.iter().any(|x| !x.is_zero()) {
                            return Ok(Some(InjectivityFailure {
                                tail,
                                head,
                                weight,
                                first: rep.clone(),
                                second: (*other).clone(),
                            }));
                        }
                    }
                    rep_coords.push((rep, normalize(rep_c)));
                }
                for i in 0..rep_coords.len() {
                    for j in (i + 1)..rep_coords.len() {
                        if rep_coords[i].1 == rep_coords[j].1 {
                            return Ok(Some(InjectivityFailure {
                                tail,
                                head,
                                weight,
                                first: rep_coords[i].0.clone(),
                                second: rep_coords[j].0.clone(),
                            }));
                        }
                    }
                }
                if slice.dim() != groups.len() {
                    return Err(Error::InternalInconsistency(format!(
                        "slice ({tail},{head},{weight}): dim {} vs {} monomials",
                        slice.dim(),
                        groups.len()
                    )));
                }
            }
        }
    }
    Ok(None)
}

fn normalize(mut v: Vec<Q>) -> Vec<Q> {
    if let Some(lead) = v.iter().find(|c| !c.is_zero()).cloned() {
        for c in v.iter_mut() {
            *c /= &lead;
        }
    }
    v
}

/// All products of corner-cycle basis classes at `vertex` commute up to the
/// weight cap.
pub fn corner_commutative_check(
    alg: &SuperpotentialAlgebra,
    vertex: VertexId,
    max_weight: u64,
) -> bool {
    let mut bases: Vec<Vec<Path>> = Vec::new();
    for d in 0..=max_weight {
        bases.push(alg.graded_basis(vertex, vertex, d).0);
    }
    for d1 in 1..=max_weight {
        for d2 in d1..=max_weight {
            if d1 + d2 > max_weight {
                break;
            }
            for p in &bases[d1 as usize] {
                for r in &bases[d2 as usize] {
                    let pq = AlgebraElement::from_path(p.clone())
                        .mul(&AlgebraElement::from_path(r.clone()));
                    let qp = AlgebraElement::from_path(r.clone())
                        .mul(&AlgebraElement::from_path(p.clone()));
                    if !alg.equal_mod_relations(&pq, &qp) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct HomogeneityWitness {
    pub monomial: Monomial4,
    /// Vertex whose corner ring contains the monomial.
    pub vertex_with: VertexId,
    /// Vertex whose corner ring lacks it.
    pub vertex_without: VertexId,
}

#[derive(Clone, Debug)]
pub struct HomogeneityReport {
    pub max_degree: u32,
    pub homogeneous: bool,
    pub witness: Option<HomogeneityWitness>,
}

/// Compare the corner monomial sets of all vertices up to the degree cap.
/// "Homogeneous" only certifies equality up to that degree.
pub fn homogeneity_check(q: &TorusQuiver, tau: &Impression, max_degree: u32) -> HomogeneityReport {
    let corners: Vec<(VertexId, BTreeSet<Monomial4>)> = q
        .vertices()
        .iter()
        .map(|v| (v.id, corner_monomials(q, tau, v.id, max_degree)))
        .collect();
    let mut witness: Option<HomogeneityWitness> = None;
    for (i, (vi, si)) in corners.iter().enumerate() {
        for (vj, sj) in corners.iter().skip(i + 1) {
            for m in si.symmetric_difference(sj) {
                let (with, without) = if si.contains(m) { (*vi, *vj) } else { (*vj, *vi) };
                let better = match &witness {
                    None => true,
                    Some(w) => {
                        (m.degree(), *m, with) < (w.monomial.degree(), w.monomial, w.vertex_with)
                    }
                };
                if better {
                    witness = Some(HomogeneityWitness {
                        monomial: *m,
                        vertex_with: with,
                        vertex_without: without,
                    });
                }
            }
        }
    }
    HomogeneityReport { max_degree, homogeneous: witness.is_none(), witness }
}

/// Monoid-minimal generators of the common corner monomials, up to the cap.
pub fn center_generators(
    q: &TorusQuiver,
    tau: &Impression,
    max_degree: u32,
) -> Result<Vec<Monomial4>> {
    let report = homogeneity_check(q, tau, max_degree);
    if !report.homogeneous {
        let w = report.witness.unwrap();
        return Err(Error::NotHomogeneous(format!(
            "{} realized at vertex {} but not at vertex {}",
            w.monomial, w.vertex_with, w.vertex_without
        )));
    }
    let common = corner_monomials(q, tau, 1, max_degree);
    Ok(minimal_monoid_elements(&common))
}

/// Elements of the set that are not sums of two nonzero elements of the set.
pub fn minimal_monoid_elements(set: &BTreeSet<Monomial4>) -> Vec<Monomial4> {
    set.iter()
        .filter(|m| !m.is_one())
        .filter(|m| {
            !set.iter()
                .filter(|f| !f.is_one() && *f != *m && f.divides(m))
                .any(|f| set.contains(&f.checked_div(m).unwrap()))
        })
        .copied()
        .collect()
}

/// Per-vertex minimal generators, over the center monoid, of the monomials of
/// paths from `base`.
pub fn vertex_module_generators(
    q: &TorusQuiver,
    tau: &Impression,
    base: VertexId,
    max_degree: u32,
) -> Result<BTreeMap<VertexId, Vec<Monomial4>>> {
    let report = homogeneity_check(q, tau, max_degree);
    if !report.homogeneous {
        return Err(Error::NotHomogeneous("corner rings differ".into()));
    }
    let center: BTreeSet<Monomial4> = corner_monomials(q, tau, base, max_degree)
        .into_iter()
        .filter(|m| !m.is_one())
        .collect();
    let reach = reachable_monomials(q, tau, base, max_degree);
    let mut out = BTreeMap::new();
    for v in q.vertices() {
        let set = reach.at(v.id);
        let gens: Vec<Monomial4> = set
            .iter()
            .filter(|g| {
                !center
                    .iter()
                    .filter(|z| z.divides(g))
                    .any(|z| set.contains(&z.checked_div(g).unwrap()))
            })
            .copied()
            .collect();
        out.insert(v.id, gens);
    }
    Ok(out)
}

/// For every corner monomial fitting the wrapped-torus product form, the
/// complementary cycle multiplying up to a power of the unit cycle exists.
pub fn eta_eta_prime_check(
    q: &TorusQuiver,
    tau: &Impression,
    vertex: VertexId,
    max_degree: u32,
) -> bool {
    let sigma = Monomial4::new(1, 1, 1, 1);
    let corner = corner_monomials(q, tau, vertex, max_degree);
    let (n, m) = (q.n() as u32, q.m() as u32);
    for eta in &corner {
        let [a1, a2, b1, b2] = eta.0;
        let (nu, s) = (a1.abs_diff(a2), a1.min(a2));
        let (mv, t) = (b1.abs_diff(b2), b1.min(b2));
        if nu % n != 0 || mv % m != 0 || t > nu || s > mv {
            continue;
        }
        let u = nu / n;
        let v = mv / m;
        let total = sigma.pow(n * u + m * v);
        let Some(eta_prime) = eta.checked_div(&total) else { continue };
        if eta_prime.degree() <= max_degree && !corner.contains(&eta_prime) {
            return false;
        }
    }
    true
}

/// Degree-truncated divisibility transfer: if paths k->i and k->j have
/// monomials differing by s, some path i->j realizes s.
pub fn divisibility_check(q: &TorusQuiver, tau: &Impression, max_degree: u32) -> bool {
    let reaches: BTreeMap<VertexId, ReachableMonomials> = q
        .vertices()
        .iter()
        .map(|v| (v.id, reachable_monomials(q, tau, v.id, max_degree)))
        .collect();
    for k in q.vertices() {
        let from_k = &reaches[&k.id];
        for i in q.vertices() {
            for j in q.vertices() {
                for a in from_k.at(i.id) {
                    for b in from_k.at(j.id) {
                        let Some(s) = a.checked_div(b) else { continue };
                        if s.degree() <= max_degree && !reaches[&i.id].at(j.id).contains(&s) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn labels_follow_the_class_table() {
        let q = fixtures::conifold();
        let tau = Impression::build_tau(&q).unwrap();
        assert_eq!(tau.arrow_monomial(1).unwrap(), Monomial4::new(0, 0, 1, 0)); // y1
        assert_eq!(tau.arrow_monomial(2).unwrap(), Monomial4::new(0, 0, 0, 1)); // y2
        assert_eq!(tau.arrow_monomial(3).unwrap(), Monomial4::new(1, 0, 0, 0)); // x1
        assert_eq!(tau.arrow_monomial(4).unwrap(), Monomial4::new(0, 1, 0, 0)); // x2

        let three = fixtures::three_loop();
        let tau3 = Impression::build_tau(&three).unwrap();
        assert_eq!(tau3.arrow_monomial(3).unwrap().degree(), 2); // diagonal z
    }

    #[test]
    fn tau_path_is_multiplicative() {
        let q = fixtures::conifold();
        let abs = q.abstract_quiver();
        let tau = Impression::build_tau(&q).unwrap();
        let p = Path::from_arrow_ids(&abs, &[3, 2]).unwrap(); // y2 x1
        assert_eq!(tau.tau_path(&p), Monomial4::new(1, 0, 0, 1));
        assert_eq!(tau.tau_path(&Path::vertex(1)), Monomial4::ONE);
    }

    #[test]
    fn conifold_well_defined_and_perturbation_detected() {
        let q = fixtures::conifold();
        let alg = fixtures::conifold_algebra();
        let tau = Impression::build_tau(&q).unwrap();
        assert!(check_well_defined(&alg, &tau));
        let bad = tau.with_label(1, Monomial4::new(0, 0, 0, 1));
        assert!(!check_well_defined(&alg, &bad));
    }

    #[test]
    fn conifold_injective_small_degrees() {
        let q = fixtures::conifold();
        let alg = fixtures::conifold_algebra();
        let tau = Impression::build_tau(&q).unwrap();
        assert!(tau_injective_upto(&alg, &tau, 5).unwrap().is_none());
    }

    #[test]
    fn wrong_sign_superpotential_fails_injectivity() {
        use crate::algebra::{Grading, Superpotential, SuperpotentialAlgebra};
        use crate::linalg::qint;
        let q = fixtures::conifold();
        let abs = q.abstract_quiver();
        let mut w = Superpotential::new();
        // both unit cycles with the same sign
        w.add_cycle(&abs, &Path::from_arrow_ids(&abs, &[3, 2, 4, 1]).unwrap(), qint(1)).unwrap();
        w.add_cycle(&abs, &Path::from_arrow_ids(&abs, &[3, 1, 4, 2]).unwrap(), qint(1)).unwrap();
        let alg =
            SuperpotentialAlgebra::new(abs, w, Grading::impression(&q)).unwrap();
        let tau = Impression::build_tau(&q).unwrap();
        let failure = tau_injective_upto(&alg, &tau, 4).unwrap();
        assert!(failure.is_some());
    }

    #[test]
    fn corner_rings_commute() {
        let conifold = fixtures::conifold_algebra();
        assert!(corner_commutative_check(&conifold, 1, 6));
        let three = fixtures::three_loop_algebra();
        assert!(corner_commutative_check(&three, 1, 6));
        let free = fixtures::free_two_loop();
        assert!(!corner_commutative_check(&free, 1, 2));
    }

    #[test]
    fn conifold_center_generators() {
        let q = fixtures::conifold();
        let tau = Impression::build_tau(&q).unwrap();
        assert!(homogeneity_check(&q, &tau, 8).homogeneous);
        let gens = center_generators(&q, &tau, 8).unwrap();
        let expected = vec![
            Monomial4::new(0, 1, 0, 1),
            Monomial4::new(0, 1, 1, 0),
            Monomial4::new(1, 0, 0, 1),
            Monomial4::new(1, 0, 1, 0),
        ];
        assert_eq!(gens, expected);
    }

    #[test]
    fn three_loop_center_is_free_on_three_monomials() {
        let q = fixtures::three_loop();
        let tau = Impression::build_tau(&q).unwrap();
        let gens = center_generators(&q, &tau, 6).unwrap();
        assert_eq!(
            gens,
            vec![
                Monomial4::new(0, 0, 1, 0), // y
                Monomial4::new(0, 1, 0, 0), // x
                Monomial4::new(1, 0, 0, 1), // z
            ]
        );
    }

    #[test]
    fn non_noetherian_corner_witness() {
        let q = fixtures::non_noetherian_center();
        let tau = Impression::build_tau(&q).unwrap();
        let report = homogeneity_check(&q, &tau, 8);
        assert!(!report.homogeneous);
        // the cell labels of the paper witness: s = y1^4 x1^4 at (0,1), not (0,0)
        let v_with = q.vertex_at(0, 1);
        let v_without = q.vertex_at(0, 0);
        let s = Monomial4::new(4, 0, 4, 0);
        assert!(corner_monomials(&q, &tau, v_with, 8).contains(&s));
        assert!(!corner_monomials(&q, &tau, v_without, 8).contains(&s));
    }

    #[test]
    fn conifold_module_generators() {
        let q = fixtures::conifold();
        let tau = Impression::build_tau(&q).unwrap();
        let gens = vertex_module_generators(&q, &tau, 1, 8).unwrap();
        assert_eq!(gens[&1], vec![Monomial4::ONE]);
        assert_eq!(
            gens[&2],
            vec![Monomial4::new(0, 0, 0, 1), Monomial4::new(0, 0, 1, 0)]
        );
    }

    #[test]
    fn structural_invariants_hold_on_conifold() {
        let q = fixtures::conifold();
        let tau = Impression::build_tau(&q).unwrap();
        assert!(eta_eta_prime_check(&q, &tau, 1, 8));
        assert!(divisibility_check(&q, &tau, 6));
    }

    #[test]
    fn recover_path_finds_a_witness_cycle() {
        let q = fixtures::conifold();
        let tau = Impression::build_tau(&q).unwrap();
        let p = recover_path(&q, &tau, 1, 1, Monomial4::new(1, 0, 1, 0)).unwrap();
        assert_eq!(p.len(), 2);
        let abs = q.abstract_quiver();
        let path = Path::from_arrow_ids(&abs, &p).unwrap();
        assert_eq!(tau.tau_path(&path), Monomial4::new(1, 0, 1, 0));
    }
}
