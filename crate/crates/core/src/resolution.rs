//! Graded free complexes over a superpotential algebra: the length-3 complex
//! over a vertex simple with the second-derivative middle matrix, generic
//! exactness measurement by degreewise exact linear algebra, and the explicit
//! counterexample resolutions.

use crate::algebra::{
    cyclic_derivative, w_hg, AlgebraElement, Path, SuperpotentialAlgebra,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::linalg::{nullspace_rational, Q, RowSpace};
use crate::quiver::{ArrowId, TorusQuiver, VertexId};
use num::traits::Zero;
use std::collections::BTreeMap;

/// A complex of free left modules ... -> T_2 -> T_1 -> T_0; each term is a
/// list of vertex idempotents and each map acts by right multiplication.
/// `maps[l]` sends T_{l+1} to T_l; entry (r, c) lies in e_{T_{l+1}[r]} A
/// e_{T_l[c]}.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    pub terms: Vec<Vec<VertexId>>,
    pub maps: Vec<Vec<Vec<AlgebraElement>>>,
    /// The leftmost term is preceded by zero (finite resolution), so its
    /// junction must be exact too.
    pub closed_left: bool,
}

impl FreeComplex {
    pub fn new(
        alg: &SuperpotentialAlgebra,
        terms: Vec<Vec<VertexId>>,
        maps: Vec<Vec<Vec<AlgebraElement>>>,
        closed_left: bool,
    ) -> Result<FreeComplex> {
        if maps.len() + 1 != terms.len() {
            return Err(Error::InternalInconsistency(
                "a complex with k maps needs k+1 terms".into(),
            ));
        }
        for (l, map) in maps.iter().enumerate() {
            let (src, dst) = (&terms[l + 1], &terms[l]);
            if map.len() != src.len() || map.iter().any(|row| row.len() != dst.len()) {
                return Err(Error::InternalInconsistency(format!(
                    "map {l} has the wrong shape"
                )));
            }
            for (r, row) in map.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    for (p, _) in entry.terms() {
                        if p.tail() != dst[c] || p.head() != src[r] {
                            return Err(Error::InternalInconsistency(format!(
                                "map {l} entry ({r},{c}) has a term {p} outside e_{} A e_{}",
                                src[r], dst[c]
                            )));
                        }
                    }
                }
            }
        }
        let complex = FreeComplex { terms, maps, closed_left };
        complex.shifts(alg)?;
        Ok(complex)
    }

    /// Internal degree shifts per term component, propagated from T_0.
    fn shifts(&self, alg: &SuperpotentialAlgebra) -> Result<Vec<Vec<u64>>> {
        let grading = alg.grading();
        let mut shifts: Vec<Vec<Option<u64>>> =
            self.terms.iter().map(|t| vec![None; t.len()]).collect();
        for s in shifts[0].iter_mut() {
            *s = Some(0);
        }
        for (l, map) in self.maps.iter().enumerate() {
            for (r, row) in map.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    let Some((p, _)) = entry.terms().next() else { continue };
                    let w = p.weight(grading);
                    for (p2, _) in entry.terms() {
                        if p2.weight(grading) != w {
                            return Err(Error::InhomogeneousRelations(format!(
                                "map {l} entry ({r},{c}) mixes weights"
                            )));
                        }
                    }
                    let Some(base) = shifts[l][c] else {
                        return Err(Error::InternalInconsistency(format!(
                            "component {c} of term {l} has no degree shift"
                        )));
                    };
                    let new = base + w;
                    match shifts[l + 1][r] {
                        None => shifts[l + 1][r] = Some(new),
                        Some(old) if old != new => {
                            return Err(Error::InhomogeneousRelations(format!(
                                "term {} component {r} gets shifts {old} and {new}",
                                l + 1
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
        shifts
            .into_iter()
            .enumerate()
            .map(|(l, t)| {
                t.into_iter()
                    .map(|s| {
                        s.ok_or_else(|| {
                            Error::InternalInconsistency(format!(
                                "term {l} has a component never hit by a map"
                            ))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// First composite entry that fails to vanish modulo the relations.
    pub fn first_defect(&self, alg: &SuperpotentialAlgebra) -> Option<ComplexDefect> {
        for l in 0..self.maps.len().saturating_sub(1) {
            let outer = &self.maps[l];
            let inner = &self.maps[l + 1];
            for (r, inner_row) in inner.iter().enumerate() {
                for c in 0..self.terms[l].len() {
                    let mut entry = AlgebraElement::zero();
                    for (k, mid) in inner_row.iter().enumerate() {
                        entry = entry.add(&mid.mul(&outer[k][c]));
                    }
                    if !alg.is_zero_mod_relations(&entry) {
                        return Some(ComplexDefect { junction: l + 1, row: r, col: c, entry });
                    }
                }
            }
        }
        None
    }

    pub fn is_complex(&self, alg: &SuperpotentialAlgebra) -> bool {
        self.first_defect(alg).is_none()
    }

    /// Basis of the degree-d piece of term `l`, as (component, path) pairs.
    fn term_basis(
        &self,
        alg: &SuperpotentialAlgebra,
        shifts: &[Vec<u64>],
        l: usize,
        degree: u64,
    ) -> Vec<(usize, Path)> {
        let mut out = Vec::new();
        for (comp, &v) in self.terms[l].iter().enumerate() {
            let shift = shifts[l][comp];
            if degree < shift {
                continue;
            }
            let w = degree - shift;
            for head in 1..=alg.vertex_count() {
                for p in alg.graded_basis(v, head, w).0 {
                    out.push((comp, p));
                }
            }
        }
        out
    }

    /// Rank of map `l` restricted to internal degree d.
    fn map_rank(
        &self,
        alg: &SuperpotentialAlgebra,
        shifts: &[Vec<u64>],
        l: usize,
        degree: u64,
    ) -> usize {
        let dom = self.term_basis(alg, shifts, l + 1, degree);
        let target = self.target_index(alg, shifts, l, degree);
        let mut space = RowSpace::new(target.len());
        let mut rank = 0;
        for (comp, p) in dom {
            let v = self.apply_entry_row(alg, l, comp, &p, &target);
            if space.insert(v) {
                rank += 1;
            }
        }
        rank
    }

    fn target_index(
        &self,
        alg: &SuperpotentialAlgebra,
        shifts: &[Vec<u64>],
        l: usize,
        degree: u64,
    ) -> TargetIndex {
        TargetIndex::build(alg, &self.terms[l], &shifts[l], degree)
    }

    fn apply_entry_row(
        &self,
        alg: &SuperpotentialAlgebra,
        l: usize,
        comp: usize,
        p: &Path,
        target: &TargetIndex,
    ) -> Vec<Q> {
        let mut out = vec![Q::zero(); target.len()];
        for (c, entry) in self.maps[l][comp].iter().enumerate() {
            let image = AlgebraElement::from_path(p.clone()).mul(entry);
            target.accumulate(c, &image, &mut out);
        }
        out
    }

    /// Homology dimensions per internal degree at every junction.
    pub fn exactness_report(
        &self,
        alg: &SuperpotentialAlgebra,
        max_degree: u64,
    ) -> Result<ExactnessReport> {
        let shifts = self.shifts(alg)?;
        let top = if self.closed_left { self.terms.len() - 1 } else { self.terms.len() - 2 };
        let mut junctions = Vec::new();
        for l in 1..=top {
            let mut homology = BTreeMap::new();
            for d in 0..=max_degree {
                let dim = self.term_basis(alg, &shifts, l, d).len();
                let out_rank = self.map_rank(alg, &shifts, l - 1, d);
                let in_rank = if l < self.terms.len() - 1 {
                    self.map_rank(alg, &shifts, l, d)
                } else {
                    0
                };
                let h = dim - out_rank - in_rank;
                if h > 0 {
                    homology.insert(d, h);
                }
            }
            junctions.push(JunctionReport { junction: l, homology });
        }
        Ok(ExactnessReport { max_degree, junctions })
    }
}

/// Index of the degree-d basis of a term, flattened over components.
struct TargetIndex {
    slices: Vec<Vec<(VertexId, std::rc::Rc<crate::algebra::Slice>, usize)>>,
    total: usize,
}

impl TargetIndex {
    fn build(
        alg: &SuperpotentialAlgebra,
        term: &[VertexId],
        shifts: &[u64],
        degree: u64,
    ) -> TargetIndex {
        let mut slices = Vec::new();
        let mut total = 0usize;
        for (comp, &v) in term.iter().enumerate() {
            let mut comp_slices = Vec::new();
            if degree >= shifts[comp] {
                let w = degree - shifts[comp];
                for head in 1..=alg.vertex_count() {
                    let slice = alg.slice(v, head, w);
                    let dim = slice.dim();
                    if dim > 0 {
                        comp_slices.push((head, slice, total));
                        total += dim;
                    }
                }
            }
            slices.push(comp_slices);
        }
        TargetIndex { slices, total }
    }

    fn len(&self) -> usize {
        self.total
    }

    fn accumulate(&self, comp: usize, image: &AlgebraElement, out: &mut [Q]) {
        if image.is_zero() {
            return;
        }
        for (head, slice, offset) in &self.slices[comp] {
            let mut part = AlgebraElement::zero();
            for (p, c) in image.terms() {
                if p.head() == *head {
                    part.add_term(p.clone(), c.clone());
                }
            }
            if part.is_zero() {
                continue;
            }
            let coords = slice.coords(&part).expect("image stays in its slice");
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    out[offset + k] += c;
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComplexDefect {
    pub junction: usize,
    pub row: usize,
    pub col: usize,
    pub entry: AlgebraElement,
}

#[derive(Clone, Debug)]
pub struct JunctionReport {
    pub junction: usize,
    /// degree -> homology dimension; empty means exact up to the cap.
    pub homology: BTreeMap<u64, usize>,
}

impl JunctionReport {
    pub fn exact(&self) -> bool {
        self.homology.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct ExactnessReport {
    pub max_degree: u64,
    pub junctions: Vec<JunctionReport>,
}

impl ExactnessReport {
    pub fn all_exact(&self) -> bool {
        self.junctions.iter().all(|j| j.exact())
    }

    pub fn junction(&self, l: usize) -> Option<&JunctionReport> {
        self.junctions.iter().find(|j| j.junction == l)
    }
}

/// The length-3 complex 0 -> Ae_i -> (+) Ae_{t(h)} -> (+) Ae_{h(g)} -> Ae_i
/// over the vertex simple at i, with middle matrix (W_{h_k, g_j}).
#[derive(Clone, Debug)]
pub struct BDComplex {
    pub complex: FreeComplex,
    pub vertex: VertexId,
    /// Out-arrows g_j of the vertex, in matrix column order.
    pub gs: Vec<ArrowId>,
    /// In-arrows h_k, in matrix row order.
    pub hs: Vec<ArrowId>,
}

/// Build the complex with orderings taken from the torus star (clockwise by
/// direction, rotated so the matrix is bidiagonal when possible).
pub fn build_bd_complex(
    alg: &SuperpotentialAlgebra,
    torus: Option<&TorusQuiver>,
    vertex: VertexId,
) -> Result<BDComplex> {
    let q = alg.quiver();
    let mut gs: Vec<ArrowId> = q.out_arrows(vertex).iter().map(|a| a.id).collect();
    let mut hs: Vec<ArrowId> = q.in_arrows(vertex).iter().map(|a| a.id).collect();
    if gs.is_empty() || hs.is_empty() {
        return Err(Error::EmptyStar(vertex));
    }
    if let Some(tq) = torus {
        // clockwise = decreasing compass angle of the arrow direction seen
        // from the vertex; ties broken by arrow id
        let angle = |id: ArrowId, outgoing: bool| -> (usize, ArrowId) {
            let class = tq.arrow(id).unwrap().class;
            let compass = if outgoing { class.compass() } else { class.opposite().compass() };
            (8 - compass, id)
        };
        gs.sort_by_key(|&id| angle(id, true));
        hs.sort_by_key(|&id| angle(id, false));
        rotate_to_min_id(&mut gs);
    } else {
        gs.sort();
        hs.sort();
    }
    // rotate hs so the middle matrix is cyclically bidiagonal; fall back to
    // any rotation with a nonzero top-left entry
    let w = alg.potential();
    let mut chosen: Option<Vec<ArrowId>> = None;
    for k in 0..hs.len() {
        let mut rot = hs[k..].to_vec();
        rot.extend_from_slice(&hs[..k]);
        let matrix = bd_middle(alg, &rot, &gs)?;
        if bidiagonal_pattern_ok(&matrix) {
            chosen = Some(rot);
            break;
        }
    }
    let hs = match chosen {
        Some(rot) => rot,
        None => {
            let mut fallback = hs.clone();
            for k in 0..hs.len() {
                let mut rot = hs[k..].to_vec();
                rot.extend_from_slice(&hs[..k]);
                if !w_hg(alg.quiver(), w, rot[0], gs[0])?.is_zero() {
                    fallback = rot;
                    break;
                }
            }
            fallback
        }
    };
    let middle = bd_middle(alg, &hs, &gs)?;
    let i = vertex;
    let terms = vec![
        vec![i],
        gs.iter().map(|&g| q.arrow(g).unwrap().head).collect(),
        hs.iter().map(|&h| q.arrow(h).unwrap().tail).collect(),
        vec![i],
    ];
    let delta0: Vec<Vec<AlgebraElement>> = gs
        .iter()
        .map(|&g| vec![AlgebraElement::from_path(Path::from_arrow_ids(q, &[g]).unwrap())])
        .collect();
    let delta2: Vec<Vec<AlgebraElement>> = vec![hs
        .iter()
        .map(|&h| AlgebraElement::from_path(Path::from_arrow_ids(q, &[h]).unwrap()))
        .collect()];
    let complex = FreeComplex::new(alg, terms, vec![delta0, middle, delta2], true)?;
    Ok(BDComplex { complex, vertex, gs, hs })
}

fn rotate_to_min_id(ids: &mut Vec<ArrowId>) {
    if let Some(pos) = ids.iter().enumerate().min_by_key(|(_, id)| **id).map(|(k, _)| k) {
        ids.rotate_left(pos);
    }
}

fn bd_middle(
    alg: &SuperpotentialAlgebra,
    hs: &[ArrowId],
    gs: &[ArrowId],
) -> Result<Vec<Vec<AlgebraElement>>> {
    hs.iter()
        .map(|&h| gs.iter().map(|&g| w_hg(alg.quiver(), alg.potential(), h, g)).collect())
        .collect()
}

/// Nonzero entries confined to the diagonal and one cyclic off-diagonal.
pub fn bidiagonal_pattern_ok(matrix: &[Vec<AlgebraElement>]) -> bool {
    let n = matrix.len();
    if n == 0 || matrix[0].len() != n {
        return false;
    }
    for (k, row) in matrix.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if !entry.is_zero() && k != j && k != (j + 1) % n {
                return false;
            }
        }
    }
    true
}

/// Check the defining identities of the middle matrix: composing with the
/// boundary rows and columns recovers the raw cyclic derivatives, so both
/// composites vanish modulo the relations.
pub fn verify_bd(alg: &SuperpotentialAlgebra, bd: &BDComplex) -> Result<bool> {
    let q = alg.quiver();
    let w = alg.potential();
    for (j, &g) in bd.gs.iter().enumerate() {
        let mut sum = AlgebraElement::zero();
        for (k, &h) in bd.hs.iter().enumerate() {
            let h_elem = AlgebraElement::from_path(Path::from_arrow_ids(q, &[h]).unwrap());
            sum = sum.add(&h_elem.mul(&bd.complex.maps[1][k][j]));
        }
        if sum != cyclic_derivative(q, w, g)? {
            return Ok(false);
        }
    }
    for (k, &h) in bd.hs.iter().enumerate() {
        let mut sum = AlgebraElement::zero();
        for (j, &g) in bd.gs.iter().enumerate() {
            let g_elem = AlgebraElement::from_path(Path::from_arrow_ids(q, &[g]).unwrap());
            sum = sum.add(&bd.complex.maps[1][k][j].mul(&g_elem));
        }
        if sum != cyclic_derivative(q, w, h)? {
            return Ok(false);
        }
    }
    Ok(bd.complex.is_complex(alg))
}

/// Degreewise kernel of right multiplication by an arrow.
#[derive(Clone, Debug)]
pub struct RightMultKernel {
    pub arrow: ArrowId,
    /// degree -> kernel dimension (zero degrees omitted).
    pub kernel_dims: BTreeMap<u64, usize>,
    /// One witness element per nonzero degree.
    pub witnesses: Vec<AlgebraElement>,
    /// The W_{h,g} with W_{h,g} g = W_h as raw elements.
    pub predicted_generators: Vec<AlgebraElement>,
}

pub fn right_mult_kernel(
    alg: &SuperpotentialAlgebra,
    g: ArrowId,
    max_degree: u64,
) -> Result<RightMultKernel> {
    let q = alg.quiver();
    let arrow = *q.arrow(g)?;
    let g_elem = AlgebraElement::from_path(Path::from_arrow_ids(q, &[g])?);
    let g_weight = alg.grading().weight(g);
    let mut kernel_dims = BTreeMap::new();
    let mut witnesses = Vec::new();
    for d in 0..=max_degree {
        // domain: degree-d piece of Ae_{h(g)}
        let mut dom: Vec<Path> = Vec::new();
        for head in 1..=alg.vertex_count() {
            dom.extend(alg.graded_basis(arrow.head, head, d).0);
        }
        if dom.is_empty() {
            continue;
        }
        let target = TargetIndex::build(alg, &[arrow.tail], &[0], d + g_weight);
        let rows: Vec<Vec<Q>> = dom
            .iter()
            .map(|p| {
                let mut out = vec![Q::zero(); target.len()];
                let image = AlgebraElement::from_path(p.clone()).mul(&g_elem);
                target.accumulate(0, &image, &mut out);
                out
            })
            .collect();
        // kernel of the row action: right nullspace of the transpose
        let width = rows.len();
        let cols: Vec<Vec<Q>> = (0..target.len())
            .map(|c| rows.iter().map(|r| r[c].clone()).collect())
            .collect();
        let null = nullspace_rational(&cols, width);
        if !null.is_empty() {
            kernel_dims.insert(d, null.len());
            let mut witness = AlgebraElement::zero();
            for (p, c) in dom.iter().zip(null[0].iter()) {
                witness.add_term(p.clone(), c.clone());
            }
            witnesses.push(witness);
        }
    }
    let mut predicted = Vec::new();
    for h in q.in_arrows(arrow.tail).iter().map(|a| a.id) {
        let whg = w_hg(q, alg.potential(), h, g)?;
        if whg.is_zero() {
            continue;
        }
        let wh = cyclic_derivative(q, alg.potential(), h)?;
        if whg.mul(&g_elem) == wh {
            predicted.push(whg);
        }
    }
    Ok(RightMultKernel { arrow: g, kernel_dims, witnesses, predicted_generators: predicted })
}

/// A named algebra together with one of the explicitly displayed resolutions.
pub struct FixtureResolution {
    pub name: &'static str,
    pub algebra: SuperpotentialAlgebra,
    pub complex: FreeComplex,
}

/// The explicit periodic and finite resolutions of the counterexample
/// algebras, built verbatim from their displayed matrices.
pub fn fixture_resolutions() -> Result<Vec<FixtureResolution>> {
    let mut out = Vec::new();

    // one vertex, W = a^2 b: period three after the first map
    {
        let alg = fixtures::two_loop_a2b();
        let e = |ids: &[usize]| {
            AlgebraElement::from_path(Path::from_arrow_ids(alg.quiver(), ids).unwrap())
        };
        let zero = AlgebraElement::zero();
        let a = e(&[1]);
        let b = e(&[2]);
        let d0 = vec![vec![a.clone()], vec![b.clone()]];
        let d1 = vec![vec![b.clone(), a.clone()], vec![a.clone(), zero.clone()]];
        let d2 = vec![vec![a.clone(), b.clone()], vec![zero.clone(), a.clone()]];
        let d3 = vec![vec![zero.clone(), a.clone()], vec![a.clone(), b.clone()]];
        let maps = vec![d0, d1.clone(), d2.clone(), d3.clone(), d1.clone(), d2, d3, d1];
        let terms: Vec<Vec<VertexId>> =
            std::iter::once(vec![1]).chain(std::iter::repeat(vec![1, 1]).take(8)).collect();
        let complex = FreeComplex::new(&alg, terms, maps, false)?;
        out.push(FixtureResolution { name: "a2b_periodic", algebra: alg, complex });
    }

    // two vertices, W = c1 b a - c2 a b: period two
    {
        let alg = fixtures::two_vertex_c1ba();
        let e = |ids: &[usize]| {
            AlgebraElement::from_path(Path::from_arrow_ids(alg.quiver(), ids).unwrap())
        };
        let zero = AlgebraElement::zero();
        let (c1, a, c2, b) = (e(&[1]), e(&[2]), e(&[3]), e(&[4]));
        let d0 = vec![vec![c1.clone()], vec![a.clone()]];
        let d1 = vec![vec![a.clone(), c2.neg()], vec![zero.clone(), b.clone()]];
        let d2 = vec![vec![b.clone(), c1.clone()], vec![zero.clone(), a.clone()]];
        let maps = vec![d0, d1.clone(), d2.clone(), d1.clone(), d2, d1];
        let terms = vec![
            vec![1],
            vec![1, 2],
            vec![2, 1],
            vec![1, 2],
            vec![2, 1],
            vec![1, 2],
            vec![2, 1],
        ];
        let complex = FreeComplex::new(&alg, terms, maps, false)?;
        out.push(FixtureResolution { name: "c1ba_periodic", algebra: alg, complex });
    }

    // six vertices, eight triangles: period three after the second map
    {
        let alg = fixtures::six_vertex_triangles();
        let e = |ids: &[usize]| {
            AlgebraElement::from_path(Path::from_arrow_ids(alg.quiver(), ids).unwrap())
        };
        let (x1, y1, x2, y2) = (e(&[1]), e(&[2]), e(&[3]), e(&[4]));
        let (x4, y4) = (e(&[7]), e(&[8]));
        let (x5, y5) = (e(&[9]), e(&[10]));
        let (x3, y3) = (e(&[5]), e(&[6]));
        let (x6, y6) = (e(&[11]), e(&[12]));
        let d0 = vec![vec![x1.clone()], vec![y1.clone()]];
        let d1 = vec![vec![x4.clone(), y6.neg()], vec![y4.neg(), x6.clone()]];
        let d2 = vec![vec![x5.clone(), y3.clone()], vec![y5.clone(), x3.clone()]];
        let d3 = vec![vec![y1.clone(), x2.neg()], vec![x1.neg(), y2.clone()]];
        let d4 = vec![vec![y6.clone(), x4.clone()], vec![x6.clone(), y4.clone()]];
        let maps = vec![d0, d1, d2.clone(), d3.clone(), d4.clone(), d2, d3, d4];
        let terms = vec![
            vec![1],
            vec![4, 6],
            vec![5, 3],
            vec![1, 2],
            vec![6, 4],
            vec![5, 3],
            vec![1, 2],
            vec![6, 4],
            vec![5, 3],
        ];
        let complex = FreeComplex::new(&alg, terms, maps, false)?;
        out.push(FixtureResolution { name: "six_vertex_periodic", algebra: alg, complex });
    }

    // one loop, W = x^3: alternating x, 3x
    {
        let alg = fixtures::one_loop_cubed();
        let x = AlgebraElement::from_path(Path::from_arrow_ids(alg.quiver(), &[1]).unwrap());
        let x3 = x.scale(&crate::linalg::qint(3));
        let maps = vec![
            vec![vec![x.clone()]],
            vec![vec![x3.clone()]],
            vec![vec![x.clone()]],
            vec![vec![x3.clone()]],
            vec![vec![x.clone()]],
            vec![vec![x3]],
        ];
        let terms = vec![vec![1]; 7];
        let complex = FreeComplex::new(&alg, terms, maps, false)?;
        out.push(FixtureResolution { name: "xcubed_periodic", algebra: alg, complex });
    }

    // five vertices: the finite length-5 resolution
    {
        let alg = fixtures::five_vertex_gldim5();
        let q = alg.quiver();
        let e = |ids: &[usize]| AlgebraElement::from_path(Path::from_arrow_ids(q, ids).unwrap());
        let (d1, b1, a1, b2, b3, a2) = (e(&[1]), e(&[2]), e(&[3]), e(&[4]), e(&[5]), e(&[6]));
        let a2b3 = e(&[5, 6]); // word a2 b3
        let b3b2 = e(&[4, 5]); // word b3 b2
        let maps = vec![
            vec![vec![b1.clone()], vec![b2.clone()]],
            vec![vec![a1.clone(), a2b3.neg()]],
            vec![vec![d1.clone()]],
            vec![vec![b1], vec![b3b2.neg()]],
            vec![vec![a1, a2]],
        ];
        let terms = vec![vec![3], vec![2, 4], vec![1], vec![3], vec![2, 5], vec![1]];
        let complex = FreeComplex::new(&alg, terms, maps, true)?;
        out.push(FixtureResolution { name: "gldim5_finite", algebra: alg, complex });
    }

    Ok(out)
}
