//! Hand-built quivers and superpotential algebras used throughout the tests
//! and the `fixtures` CLI subcommand.

use crate::algebra::{Grading, Path, Superpotential, SuperpotentialAlgebra};
use crate::linalg::qint;
use crate::quiver::{ArrowClass, Quiver, TorusQuiver, VertexId};
use std::collections::BTreeMap;

/// Conifold quiver on the 2x1 torus (shift 1).
/// Arrows: 1 = y1 (N, 1->2), 2 = y2 (S, 1->2), 3 = x1 (E, 2->1), 4 = x2 (W, 2->1).
pub fn conifold_arrow_specs() -> Vec<(VertexId, VertexId, ArrowClass)> {
    vec![
        (1, 2, ArrowClass::N),
        (1, 2, ArrowClass::S),
        (2, 1, ArrowClass::E),
        (2, 1, ArrowClass::W),
    ]
}

pub fn conifold() -> TorusQuiver {
    TorusQuiver::from_arrows(2, 1, 1, &conifold_arrow_specs()).expect("conifold quiver")
}

pub fn conifold_algebra() -> SuperpotentialAlgebra {
    SuperpotentialAlgebra::from_torus(&conifold()).expect("conifold algebra")
}

/// One-vertex three-loop quiver on the 1x1 torus with an anti-diagonal.
/// Arrows: 1 = x (W), 2 = y (N), 3 = z (SE).
pub fn three_loop() -> TorusQuiver {
    TorusQuiver::from_arrows(
        1,
        1,
        0,
        &[(1, 1, ArrowClass::W), (1, 1, ArrowClass::N), (1, 1, ArrowClass::SE)],
    )
    .expect("three-loop quiver")
}

pub fn three_loop_algebra() -> SuperpotentialAlgebra {
    SuperpotentialAlgebra::from_torus(&three_loop()).expect("three-loop algebra")
}

/// Diagonal-free 2x2 torus quiver with checkerboard orientation.
pub fn plain_2x2() -> TorusQuiver {
    TorusQuiver::from_arrows(
        2,
        2,
        0,
        &[
            (1, 2, ArrowClass::E),
            (2, 4, ArrowClass::N),
            (4, 3, ArrowClass::W),
            (3, 1, ArrowClass::S),
            (1, 2, ArrowClass::W),
            (4, 3, ArrowClass::E),
            (3, 1, ArrowClass::N),
            (2, 4, ArrowClass::S),
        ],
    )
    .expect("2x2 quiver")
}

/// 4x4 torus quiver whose center is non-noetherian: the corner rings at
/// cells (0,0) and (0,1) differ (witness y1^4 x1^4).
pub fn non_noetherian_center() -> TorusQuiver {
    let cell = |c: usize, r: usize| -> VertexId { r * 4 + c + 1 };
    let mut specs: Vec<(VertexId, VertexId, ArrowClass)> = Vec::new();
    // verticals
    for (tail, head, class) in [
        ((0, 1), (0, 0), ArrowClass::S),
        ((0, 1), (0, 2), ArrowClass::N),
        ((0, 3), (0, 2), ArrowClass::S),
        ((0, 3), (0, 0), ArrowClass::N),
        ((1, 1), (1, 0), ArrowClass::S),
        ((1, 1), (1, 2), ArrowClass::N),
        ((1, 3), (1, 2), ArrowClass::S),
        ((1, 3), (1, 0), ArrowClass::N),
        ((2, 0), (2, 1), ArrowClass::N),
        ((2, 2), (2, 1), ArrowClass::S),
        ((2, 2), (2, 3), ArrowClass::N),
        ((2, 0), (2, 3), ArrowClass::S),
        ((3, 0), (3, 1), ArrowClass::N),
        ((3, 2), (3, 1), ArrowClass::S),
        ((3, 2), (3, 3), ArrowClass::N),
        ((3, 0), (3, 3), ArrowClass::S),
    ] {
        specs.push((cell(tail.0, tail.1), cell(head.0, head.1), class));
    }
    // horizontals
    for (tail, head, class) in [
        ((0, 0), (1, 0), ArrowClass::E),
        ((1, 0), (2, 0), ArrowClass::E),
        ((3, 0), (2, 0), ArrowClass::W),
        ((0, 0), (3, 0), ArrowClass::W),
        ((0, 1), (1, 1), ArrowClass::E),
        ((2, 1), (1, 1), ArrowClass::W),
        ((3, 1), (2, 1), ArrowClass::W),
        ((3, 1), (0, 1), ArrowClass::E),
        ((0, 2), (1, 2), ArrowClass::E),
        ((1, 2), (2, 2), ArrowClass::E),
        ((3, 2), (2, 2), ArrowClass::W),
        ((0, 2), (3, 2), ArrowClass::W),
        ((0, 3), (1, 3), ArrowClass::E),
        ((2, 3), (1, 3), ArrowClass::W),
        ((3, 3), (2, 3), ArrowClass::W),
        ((3, 3), (0, 3), ArrowClass::E),
    ] {
        specs.push((cell(tail.0, tail.1), cell(head.0, head.1), class));
    }
    // diagonals
    for (tail, head, class) in [
        ((1, 0), (0, 1), ArrowClass::NW),
        ((1, 2), (0, 1), ArrowClass::SW),
        ((1, 2), (0, 3), ArrowClass::NW),
        ((1, 0), (0, 3), ArrowClass::SW),
        ((2, 1), (3, 0), ArrowClass::SE),
        ((2, 1), (3, 2), ArrowClass::NE),
        ((2, 3), (3, 2), ArrowClass::SE),
        ((2, 3), (3, 0), ArrowClass::NE),
    ] {
        specs.push((cell(tail.0, tail.1), cell(head.0, head.1), class));
    }
    TorusQuiver::from_arrows(4, 4, 0, &specs).expect("non-noetherian quiver")
}

fn potential_from_terms(q: &Quiver, terms: &[(&[usize], i64)]) -> Superpotential {
    let mut w = Superpotential::new();
    for (ids, c) in terms {
        let p = Path::from_arrow_ids(q, ids).expect("cycle composes");
        w.add_cycle(q, &p, qint(*c)).expect("genuine cycle");
    }
    w
}

/// One vertex, loops a = 1, b = 2, W = a^2 b. The center is k[b^2] and the
/// vertex simple has a periodic infinite resolution.
pub fn two_loop_a2b() -> SuperpotentialAlgebra {
    let q = Quiver::new(1, &[(1, 1), (1, 1)]);
    let w = potential_from_terms(&q, &[(&[2, 1, 1], 1)]);
    let g = Grading::unit(&q);
    SuperpotentialAlgebra::new(q, w, g).expect("a^2 b algebra")
}

/// Two vertices with loops c1 = 1 at 1, c2 = 3 at 2 and arrows a = 2 (1->2),
/// b = 4 (2->1); W = c1 b a - c2 a b.
pub fn two_vertex_c1ba() -> SuperpotentialAlgebra {
    let q = Quiver::new(2, &[(1, 1), (1, 2), (2, 2), (2, 1)]);
    let w = potential_from_terms(&q, &[(&[2, 4, 1], 1), (&[4, 2, 3], -1)]);
    let g = Grading::unit(&q);
    SuperpotentialAlgebra::new(q, w, g).expect("c1 b a algebra")
}

/// Six vertices, twelve arrows, superpotential made of eight signed
/// triangles. Arrow ids:
/// x1=1: 1->4, y1=2: 1->6, x2=3: 2->6, y2=4: 2->4, x3=5: 3->2, y3=6: 3->1,
/// x4=7: 4->5, y4=8: 4->3, x5=9: 5->1, y5=10: 5->2, x6=11: 6->3, y6=12: 6->5.
pub fn six_vertex_triangles() -> SuperpotentialAlgebra {
    let q = Quiver::new(
        6,
        &[
            (1, 4),
            (1, 6),
            (2, 6),
            (2, 4),
            (3, 2),
            (3, 1),
            (4, 5),
            (4, 3),
            (5, 1),
            (5, 2),
            (6, 3),
            (6, 5),
        ],
    );
    let w = potential_from_terms(
        &q,
        &[
            (&[1, 7, 9], 1),   // x5 x4 x1
            (&[2, 12, 9], -1), // x5 y6 y1
            (&[1, 8, 6], -1),  // y3 y4 x1
            (&[2, 11, 6], 1),  // y3 x6 y1
            (&[4, 7, 10], 1),  // y5 x4 y2
            (&[3, 12, 10], -1), // y5 y6 x2
            (&[4, 8, 5], -1),  // x3 y4 y2
            (&[3, 11, 5], 1),  // x3 x6 x2
        ],
    );
    let g = Grading::unit(&q);
    SuperpotentialAlgebra::new(q, w, g).expect("six-vertex algebra")
}

/// One loop x = 1 with W = x^3, so the algebra is k[x]/(x^2).
pub fn one_loop_cubed() -> SuperpotentialAlgebra {
    let q = Quiver::new(1, &[(1, 1)]);
    let w = potential_from_terms(&q, &[(&[1, 1, 1], 1)]);
    let g = Grading::unit(&q);
    SuperpotentialAlgebra::new(q, w, g).expect("x^3 algebra")
}

/// Five vertices; W = a1 b1 d1 - a2 b3 b2 d1 with b1 of weight 2 so both
/// cycles are homogeneous. Global dimension 5. Arrow ids:
/// d1=1: 1->3, b1=2: 3->2, a1=3: 2->1, b2=4: 3->4, b3=5: 4->5, a2=6: 5->1.
pub fn five_vertex_gldim5() -> SuperpotentialAlgebra {
    let q = Quiver::new(5, &[(1, 3), (3, 2), (2, 1), (3, 4), (4, 5), (5, 1)]);
    let w = potential_from_terms(&q, &[(&[1, 2, 3], 1), (&[1, 4, 5, 6], -1)]);
    let weights: BTreeMap<usize, u64> =
        [(1, 1), (2, 2), (3, 1), (4, 1), (5, 1), (6, 1)].into_iter().collect();
    let g = Grading::custom(weights);
    SuperpotentialAlgebra::new(q, w, g).expect("gldim-5 algebra")
}

/// Free algebra on two loops (W = 0): the corner ring is noncommutative.
pub fn free_two_loop() -> SuperpotentialAlgebra {
    let q = Quiver::new(1, &[(1, 1), (1, 1)]);
    let g = Grading::unit(&q);
    SuperpotentialAlgebra::new(q, Superpotential::new(), g).expect("free algebra")
}
