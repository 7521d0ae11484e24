//! Small exact linear algebra: rational row spaces and integer lattices.
//!
//! Everything here is dense and meant for the small systems that show up in
//! this crate (path-space slices, rank-3 exponent lattices, 4-variable cones).

use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::BigInt;

pub type Q = BigRational;

pub fn qint(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Incremental row-echelon basis of a rational row space.
///
/// Rows are kept reduced; `insert` returns false when the row was already in
/// the span. `reduce` returns the residue of a vector against the basis.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    /// (pivot column, reduced row) sorted by pivot column.
    rows: Vec<(usize, Vec<Q>)>,
    width: usize,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace { rows: Vec::new(), width }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        assert_eq!(v.len(), self.width);
        for (piv, row) in &self.rows {
            if !v[*piv].is_zero() {
                let c = v[*piv].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x -= &c * r;
                }
            }
        }
        v
    }

    /// Reduce and insert; returns true when the vector enlarged the span.
    pub fn insert(&mut self, v: Vec<Q>) -> bool {
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[piv].clone();
        for x in v.iter_mut() {
            *x /= &lead;
        }
        // back-substitute into existing rows so reduction stays one pass
        for (_, row) in self.rows.iter_mut() {
            if !row[piv].is_zero() {
                let c = row[piv].clone();
                for (x, r) in row.iter_mut().zip(v.iter()) {
                    *x -= &c * r;
                }
            }
        }
        let pos = self.rows.partition_point(|(p, _)| *p < piv);
        self.rows.insert(pos, (piv, v));
        true
    }

    pub fn contains(&self, v: Vec<Q>) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }
}

pub fn rank_rational(rows: &[Vec<Q>]) -> usize {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut space = RowSpace::new(width);
    for r in rows {
        space.insert(r.clone());
    }
    space.dim()
}

/// Basis of the right nullspace {v : M v = 0} of a small rational matrix.
pub fn nullspace_rational(rows: &[Vec<Q>], width: usize) -> Vec<Vec<Q>> {
    let mut space = RowSpace::new(width);
    for r in rows {
        space.insert(r.clone());
    }
    let pivots = space.pivots();
    let mut basis = Vec::new();
    for free in 0..width {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Q::zero(); width];
        v[free] = Q::one();
        for (piv, row) in space.rows.iter().rev() {
            // row has 1 at *piv; solve for the pivot coordinate
            let mut s = Q::zero();
            for c in (piv + 1)..width {
                s += &row[c] * &v[c];
            }
            v[*piv] = -s;
        }
        basis.push(v);
    }
    basis
}

pub fn dot_q(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

pub fn dot_i(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Integer lattice spanned by a list of vectors, in row-echelon (Hermite-like)
/// form. Supports exact membership tests.
#[derive(Clone, Debug)]
pub struct IntLattice {
    /// Echelon basis rows; pivot entry positive, rows sorted by pivot column.
    basis: Vec<Vec<i64>>,
    width: usize,
}

impl IntLattice {
    pub fn span(vectors: &[Vec<i64>], width: usize) -> Self {
        let mut basis: Vec<Vec<i64>> = Vec::new();
        for v in vectors {
            insert_int_row(&mut basis, v.clone());
        }
        normalize_int_basis(&mut basis);
        IntLattice { basis, width }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let mut v = v.to_vec();
        for row in &self.basis {
            let piv = pivot_col(row).unwrap();
            if v[piv] != 0 {
                if v[piv] % row[piv] != 0 {
                    return false;
                }
                let k = v[piv] / row[piv];
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x -= k * r;
                }
            }
        }
        v.iter().all(|x| *x == 0)
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }
}

fn pivot_col(row: &[i64]) -> Option<usize> {
    row.iter().position(|x| *x != 0)
}

/// Insert a row into an integer echelon basis via gcd elimination.
fn insert_int_row(basis: &mut Vec<Vec<i64>>, mut v: Vec<i64>) {
    loop {
        let Some(piv) = pivot_col(&v) else { return };
        match basis.iter().position(|r| pivot_col(r) == Some(piv)) {
            None => {
                if v[piv] < 0 {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
                let pos = basis.partition_point(|r| pivot_col(r).unwrap() < piv);
                basis.insert(pos, v);
                return;
            }
            Some(i) => {
                // Euclid on the pivot entries
                while v[piv] != 0 {
                    let q = v[piv] / basis[i][piv];
                    for (x, r) in v.iter_mut().zip(basis[i].iter()) {
                        *x -= q * r;
                    }
                    if v[piv] == 0 {
                        break;
                    }
                    std::mem::swap(&mut v, &mut basis[i]);
                }
            }
        }
    }
}

fn normalize_int_basis(basis: &mut [Vec<i64>]) {
    for row in basis.iter_mut() {
        if let Some(piv) = pivot_col(row) {
            if row[piv] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
        }
    }
    // reduce entries above each pivot
    for i in (0..basis.len()).rev() {
        let piv = pivot_col(&basis[i]).unwrap();
        let pval = basis[i][piv];
        for j in 0..i {
            let x = basis[j][piv];
            let k = x.div_euclid(pval);
            if k != 0 {
                for c in 0..basis[j].len() {
                    basis[j][c] -= k * basis[i][c];
                }
            }
        }
    }
}

/// A strongly convex rational cone given by generators inside its own span,
/// with facet normals for exact membership tests.
#[derive(Clone, Debug)]
pub struct Cone {
    /// Echelonized rational basis of the linear span over the ambient space.
    span_basis: Vec<Vec<Q>>,
    /// Facet normals in span coordinates (inward, >= 0 on the cone).
    facets: Vec<Vec<Q>>,
    rank: usize,
    width: usize,
}

impl Cone {
    pub fn from_generators(gens: &[Vec<i64>], width: usize) -> Self {
        let mut span = RowSpace::new(width);
        for g in gens {
            span.insert(g.iter().map(|x| qint(*x)).collect());
        }
        let rank = span.dim();
        let span_basis: Vec<Vec<Q>> = span.rows.iter().map(|(_, r)| r.clone()).collect();
        let gens_local: Vec<Vec<Q>> = gens
            .iter()
            .map(|g| {
                local_coords(&span_basis, &g.iter().map(|x| qint(*x)).collect::<Vec<_>>())
            })
            .collect();
        let facets = facet_normals(&gens_local, rank);
        Cone { span_basis, facets, rank, width }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn local(&self, v: &[i64]) -> Option<Vec<Q>> {
        assert_eq!(v.len(), self.width);
        let vq: Vec<Q> = v.iter().map(|x| qint(*x)).collect();
        // membership in the span is part of back-substitution: residue must vanish
        let mut res = vq.clone();
        for b in &self.span_basis {
            let piv = b.iter().position(|x| !x.is_zero()).unwrap();
            if !res[piv].is_zero() {
                let c = &res[piv] / &b[piv];
                for (x, r) in res.iter_mut().zip(b.iter()) {
                    *x -= &c * r;
                }
            }
        }
        if res.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(local_coords(&self.span_basis, &vq))
    }

    /// Membership in the closed cone.
    pub fn contains(&self, v: &[i64]) -> bool {
        match self.local(v) {
            None => false,
            Some(loc) => self.facets.iter().all(|n| !dot_q(n, &loc).is_negative()),
        }
    }

    /// Membership in the topological interior relative to the span.
    pub fn contains_strictly(&self, v: &[i64]) -> bool {
        match self.local(v) {
            None => false,
            Some(loc) => {
                if self.rank == 1 {
                    return loc.iter().any(|x| !x.is_zero());
                }
                self.facets.iter().all(|n| dot_q(n, &loc).is_positive())
            }
        }
    }
}

fn local_coords(basis: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    // Solve sum c_i basis_i = v by Gaussian elimination; basis rows are
    // echelonized so this is back-substitution against their pivots.
    let mut coords = vec![Q::zero(); basis.len()];
    let mut v = v.to_vec();
    for (i, b) in basis.iter().enumerate() {
        let piv = b.iter().position(|x| !x.is_zero()).unwrap();
        let c = &v[piv] / &b[piv];
        for (x, r) in v.iter_mut().zip(b.iter()) {
            *x -= &c * r;
        }
        coords[i] = c;
    }
    debug_assert!(v.iter().all(|x| x.is_zero()));
    coords
}

/// Facet normals of the cone generated by `gens` (full-dimensional in QQ^rank).
fn facet_normals(gens: &[Vec<Q>], rank: usize) -> Vec<Vec<Q>> {
    if rank <= 1 || gens.is_empty() {
        return Vec::new();
    }
    let n = gens.len();
    let mut normals: Vec<Vec<Q>> = Vec::new();
    let mut subset = vec![0usize; rank - 1];
    enumerate_subsets(n, rank - 1, &mut subset, 0, 0, &mut |idx| {
        let rows: Vec<Vec<Q>> = idx.iter().map(|i| gens[*i].clone()).collect();
        let null = nullspace_rational(&rows, rank);
        if null.len() != 1 {
            return;
        }
        let cand = primitive_direction(&null[0]);
        let mut pos = false;
        let mut neg = false;
        for g in gens {
            let d = dot_q(&cand, g);
            if d.is_positive() {
                pos = true;
            } else if d.is_negative() {
                neg = true;
            }
        }
        let keep = match (pos, neg) {
            (true, false) => Some(cand),
            (false, true) => Some(cand.iter().map(|x| -x.clone()).collect()),
            _ => None,
        };
        if let Some(nrm) = keep {
            if !normals.contains(&nrm) {
                normals.push(nrm);
            }
        }
    });
    normals
}

fn enumerate_subsets(
    n: usize,
    k: usize,
    buf: &mut Vec<usize>,
    start: usize,
    depth: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if depth == k {
        f(buf);
        return;
    }
    for i in start..n {
        buf[depth] = i;
        enumerate_subsets(n, k, buf, i + 1, depth + 1, f);
    }
}

/// Scale a rational vector to a primitive integer direction, first nonzero
/// entry positive.
fn primitive_direction(v: &[Q]) -> Vec<Q> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = num::integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = num::integer::gcd(g, x.clone());
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    let mut out: Vec<BigInt> = ints.into_iter().map(|x| x / &g).collect();
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            out.iter_mut().for_each(|x| *x = -x.clone());
        }
    }
    out.into_iter().map(BigRational::from_integer).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|x| qint(*x)).collect()
    }

    #[test]
    fn rowspace_rank_and_membership() {
        let mut s = RowSpace::new(3);
        assert!(s.insert(qv(&[1, 2, 3])));
        assert!(s.insert(qv(&[0, 1, 1])));
        assert!(!s.insert(qv(&[1, 3, 4])));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(qv(&[2, 5, 7])));
        assert!(!s.contains(qv(&[0, 0, 1])));
    }

    #[test]
    fn lattice_membership_with_gaps() {
        // span{(2,0),(3,0)} = Z(1,0); span{(2,0)} misses (1,0)
        let l = IntLattice::span(&[vec![2, 0], vec![3, 0]], 2);
        assert!(l.contains(&[1, 0]));
        let l2 = IntLattice::span(&[vec![2, 0]], 2);
        assert!(!l2.contains(&[1, 0]));
        assert!(l2.contains(&[-4, 0]));
    }

    #[test]
    fn cone_membership_quadrant() {
        let gens = vec![vec![1, 0], vec![0, 1]];
        let c = Cone::from_generators(&gens, 2);
        assert!(c.contains(&[3, 5]));
        assert!(!c.contains(&[-1, 2]));
        assert!(c.contains_strictly(&[1, 1]));
        assert!(!c.contains_strictly(&[1, 0]));
    }

    #[test]
    fn cone_rank_deficient_ambient() {
        // the conifold square cone inside Z^4
        let gens = vec![
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 0, 1],
            vec![0, 1, 1, 0],
        ];
        let c = Cone::from_generators(&gens, 4);
        assert_eq!(c.rank(), 3);
        assert!(c.contains(&[1, 1, 1, 1]));
        assert!(c.contains_strictly(&[1, 1, 1, 1]));
        assert!(!c.contains_strictly(&[1, 0, 1, 0]));
        assert!(!c.contains(&[1, 0, 0, 0]));
    }
}
