//! Quiver mutation and the impression-preserving tau-mutation, with
//! center-invariance checking.

use crate::error::{Error, Result};
use crate::impression::{center_generators, Impression};
use crate::quiver::{Arrow, ArrowClass, Quiver, QuiverArrow, TorusQuiver, VertexId};
use crate::toric::ExponentMonoid;

/// Mutation at a vertex: reverse the arrows at it, add a composite for every
/// 2-path through it, cancel the 2-cycles that formed.
pub fn quiver_mutate(q: &Quiver, vertex: VertexId) -> Quiver {
    let mut kept: Vec<(VertexId, VertexId, bool)> = Vec::new(); // (tail, head, is_new)
    for a in &q.arrows {
        if a.tail == vertex || a.head == vertex {
            kept.push((a.head, a.tail, false));
        } else {
            kept.push((a.tail, a.head, false));
        }
    }
    for a in &q.arrows {
        if a.head != vertex || a.tail == vertex {
            continue;
        }
        for b in &q.arrows {
            if b.tail != vertex || b.head == vertex {
                continue;
            }
            kept.push((a.tail, b.head, true));
        }
    }
    cancel_two_cycles(&mut kept);
    Quiver::new(
        q.vertex_count,
        &kept.iter().map(|&(t, h, _)| (t, h)).collect::<Vec<_>>(),
    )
}

/// Greedily remove antiparallel pairs that involve at least one new arrow.
fn cancel_two_cycles(arrows: &mut Vec<(VertexId, VertexId, bool)>) {
    loop {
        let mut cancel: Option<(usize, usize)> = None;
        'outer: for i in 0..arrows.len() {
            if !arrows[i].2 {
                continue;
            }
            for j in 0..arrows.len() {
                if i == j {
                    continue;
                }
                if arrows[j].0 == arrows[i].1 && arrows[j].1 == arrows[i].0 {
                    cancel = Some((i.min(j), i.max(j)));
                    break 'outer;
                }
            }
        }
        match cancel {
            Some((i, j)) => {
                arrows.remove(j);
                arrows.remove(i);
            }
            None => return,
        }
    }
}

/// Tau-mutation: push every arrow at the vertex through it keeping its
/// monomial label, add impression-forced composites for the 2-paths that are
/// no longer realized, and cancel complementary-class 2-cycles.
pub fn tau_mutate(
    q: &TorusQuiver,
    tau: &Impression,
    vertex: VertexId,
) -> Result<(TorusQuiver, Impression)> {
    let report = q.validate_square();
    if !report.ok {
        return Err(Error::NotSquare(report.violations.join("; ")));
    }
    if vertex == 0 || vertex > q.vertex_count() {
        return Err(Error::UnknownVertex(vertex));
    }
    let (vc, vr) = q.cell_of(vertex);
    let (vc, vr) = (vc as i64, vr as i64);
    let ins: Vec<&Arrow> =
        q.arrows().iter().filter(|a| a.head == vertex && a.tail != vertex).collect();
    let outs: Vec<&Arrow> =
        q.arrows().iter().filter(|a| a.tail == vertex && a.head != vertex).collect();
    let in_classes: Vec<ArrowClass> = ins.iter().map(|a| a.class).collect();
    let out_classes: Vec<ArrowClass> = outs.iter().map(|a| a.class).collect();

    let mut specs: Vec<(VertexId, VertexId, ArrowClass)> = Vec::new();
    for a in q.arrows() {
        if a.head == vertex && a.tail != vertex {
            // in-arrow becomes an out-arrow of the same class
            let (dc, dr) = a.class.displacement();
            specs.push((vertex, q.vertex_at(vc + dc, vr + dr), a.class));
        } else if a.tail == vertex && a.head != vertex {
            // out-arrow becomes an in-arrow of the same class
            let (dc, dr) = a.class.displacement();
            specs.push((q.vertex_at(vc - dc, vr - dr), vertex, a.class));
        } else {
            specs.push((a.tail, a.head, a.class));
        }
    }
    // composites for 2-paths whose realization was lost
    for a in &ins {
        for b in &outs {
            if out_classes.contains(&a.class) && in_classes.contains(&b.class) {
                continue;
            }
            let monomial = tau.arrow_monomial(a.id)? + tau.arrow_monomial(b.id)?;
            let class = ArrowClass::from_monomial(&monomial).ok_or_else(|| {
                Error::ClassUnresolvable(format!(
                    "no class carries {monomial} for the 2-path through vertex {vertex}"
                ))
            })?;
            let (tc, tr) = q.cell_of(a.tail);
            let (dc, dr) = class.displacement();
            let head = q.vertex_at(tc as i64 + dc, tr as i64 + dr);
            if head != b.head {
                return Err(Error::ClassUnresolvable(format!(
                    "class {class:?} from vertex {} reaches {head}, not {}",
                    a.tail, b.head
                )));
            }
            specs.push((a.tail, b.head, class));
        }
    }
    // cancel antiparallel pairs of complementary classes, lowest first
    loop {
        let mut cancel: Option<(usize, usize)> = None;
        'outer: for i in 0..specs.len() {
            for j in (i + 1)..specs.len() {
                if specs[j].0 == specs[i].1
                    && specs[j].1 == specs[i].0
                    && specs[j].2 == specs[i].2.opposite()
                {
                    cancel = Some((i, j));
                    break 'outer;
                }
            }
        }
        match cancel {
            Some((i, j)) => {
                specs.remove(j);
                specs.remove(i);
            }
            None => break,
        }
    }
    let quiver = TorusQuiver::from_arrows(q.n(), q.m(), q.shift(), &specs)?;
    // non-square outcomes still carry the class labeling
    let new_tau = Impression::from_classes(&quiver);
    Ok((quiver, new_tau))
}

/// Equal center monoids up to the weight cap.
pub fn center_invariance_check(
    q1: &TorusQuiver,
    q2: &TorusQuiver,
    max_degree: u32,
) -> Result<bool> {
    let tau1 = Impression::build_tau(q1)?;
    let tau2 = Impression::build_tau(q2)?;
    let m1 = ExponentMonoid::new(&center_generators(q1, &tau1, max_degree)?);
    let m2 = ExponentMonoid::new(&center_generators(q2, &tau2, max_degree)?);
    Ok(m1.equals_upto(&m2, max_degree))
}

/// Arrow multiset of a torus quiver as (tail, head, class) triples.
pub fn arrow_multiset(q: &TorusQuiver) -> Vec<(VertexId, VertexId, ArrowClass)> {
    let mut v: Vec<_> = q.arrows().iter().map(|a| (a.tail, a.head, a.class)).collect();
    v.sort();
    v
}

/// Convenience: abstract arrows as (tail, head) pairs, for mutation tests.
pub fn abstract_multiset(q: &Quiver) -> Vec<(VertexId, VertexId)> {
    let mut v: Vec<_> = q.arrows.iter().map(|a: &QuiverArrow| (a.tail, a.head)).collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ypq::{generate_ypq, TileSequence};

    #[test]
    fn double_mutation_at_a_two_valent_vertex_is_involutive() {
        let bl = generate_ypq(4, 2, Some(TileSequence::parse("BAAA", 0).unwrap())).unwrap();
        let v = bl.vertex_at(0, 1);
        let abs = bl.abstract_quiver();
        let once = quiver_mutate(&abs, v);
        let twice = quiver_mutate(&once, v);
        assert!(twice.is_isomorphic_to(&abs));
    }

    #[test]
    fn mutation_with_no_in_arrows_just_reverses() {
        let q = Quiver::new(3, &[(1, 2), (1, 3), (2, 3)]);
        let m = quiver_mutate(&q, 1);
        assert_eq!(abstract_multiset(&m), vec![(2, 1), (2, 3), (3, 1)]);
    }

    #[test]
    fn tau_mutation_fixes_the_three_loop_quiver() {
        let q = fixtures::three_loop();
        let tau = Impression::build_tau(&q).unwrap();
        let (mutated, _) = tau_mutate(&q, &tau, 1).unwrap();
        assert_eq!(arrow_multiset(&q), arrow_multiset(&mutated));
    }

    #[test]
    fn tau_mutation_of_the_conifold_swaps_the_roles() {
        let q = fixtures::conifold();
        let tau = Impression::build_tau(&q).unwrap();
        let (mutated, _) = tau_mutate(&q, &tau, 1).unwrap();
        assert!(mutated.validate_square().ok);
        // the mutated quiver is again a conifold presentation
        assert!(mutated.abstract_quiver().is_isomorphic_to(&q.abstract_quiver()));
        assert!(center_invariance_check(&q, &mutated, 8).unwrap());
    }

    #[test]
    fn tau_and_abstract_mutation_agree_at_two_valent_vertices() {
        let bl = generate_ypq(4, 2, Some(TileSequence::parse("BAAA", 0).unwrap())).unwrap();
        let tau = Impression::build_tau(&bl).unwrap();
        let v = bl.vertex_at(0, 1);
        let (tau_mutated, new_tau) = tau_mutate(&bl, &tau, v).unwrap();
        assert!(tau_mutated.validate_square().ok);
        let abstract_mutated = quiver_mutate(&bl.abstract_quiver(), v);
        assert!(tau_mutated.abstract_quiver().is_isomorphic_to(&abstract_mutated));
        // monomials preserved arrow-for-arrow through step 1
        for a in tau_mutated.arrows() {
            assert_eq!(new_tau.arrow_monomial(a.id).unwrap(), a.class.monomial());
        }
    }

    #[test]
    fn y42_mutation_reaches_the_other_presentation() {
        let bl = generate_ypq(4, 2, Some(TileSequence::parse("BAAA", 0).unwrap())).unwrap();
        let br = generate_ypq(4, 2, Some(TileSequence::parse("PPAA", 0).unwrap())).unwrap();
        let v = bl.vertex_at(0, 1);
        let mutated = quiver_mutate(&bl.abstract_quiver(), v);
        assert!(mutated.is_isomorphic_to(&br.abstract_quiver()));
        assert!(center_invariance_check(&bl, &br, 10).unwrap());
    }
}
