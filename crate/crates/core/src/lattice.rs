//! Exact integer linear algebra: Hermite and Smith normal forms, lattices
//! given by generators, indices, kernels and determinants.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{self, dot, fmt_vecs, Int};

/// Dense integer matrix stored by rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<Z> {
    rows: Vec<Vec<Z>>,
    cols: usize,
}

impl<Z: Int> Matrix<Z> {
    /// Builds a matrix from rows. `cols` is needed so that a matrix with no
    /// rows still knows its width.
    pub fn new(cols: usize, rows: Vec<Vec<Z>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged matrix");
        }
        Matrix { rows, cols }
    }

    pub fn from_rows(rows: Vec<Vec<Z>>) -> Self {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        Self::new(cols, rows)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| scalar::vector(r)).collect())
    }

    pub fn zeros(nrows: usize, cols: usize) -> Self {
        Matrix { rows: vec![scalar::zeros(cols); nrows], cols }
    }

    pub fn identity(n: usize) -> Self {
        Matrix { rows: (0..n).map(|i| scalar::unit(n, i)).collect(), cols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Z>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Z>> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &[Z] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Z {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<Z> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols).map(|j| self.column(j)).collect();
        Matrix { rows, cols: self.rows.len() }
    }

    pub fn mul(&self, other: &Matrix<Z>) -> Self {
        assert_eq!(self.cols, other.nrows(), "incompatible matrix product");
        let ot = other.transpose();
        let rows = self.rows.iter().map(|r| ot.rows.iter().map(|c| dot(r, c)).collect()).collect();
        Matrix { rows, cols: other.cols }
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Z]) -> Vec<Z> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix width");
        self.rows.iter().map(|r| dot(r, v)).collect()
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[Z]) -> Vec<Z> {
        assert_eq!(v.len(), self.rows.len());
        let mut out: Vec<Z> = scalar::zeros(self.cols);
        for (c, r) in v.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(r) {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Z> {
        if self.nrows() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: self.nrows() });
        }
        let n = self.cols;
        let mut a = self.rows.clone();
        let mut sign = Z::one();
        let mut prev = Z::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(Z::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = v / prev.clone();
                }
                a[i][k] = Z::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { Z::one() } else { sign * a[n - 1][n - 1].clone() })
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.rows.swap(i, j);
    }

    /// row_i += q * row_j
    fn add_row(&mut self, i: usize, j: usize, q: &Z) {
        if q.is_zero() {
            return;
        }
        let src = self.rows[j].clone();
        for (x, y) in self.rows[i].iter_mut().zip(&src) {
            *x = x.clone() + q.clone() * y.clone();
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.rows[i].iter_mut() {
            *x = -x.clone();
        }
    }

    /// Replaces rows (i, j) by (a*r_i + b*r_j, c*r_i + d*r_j).
    fn mix_rows(&mut self, i: usize, j: usize, a: &Z, b: &Z, c: &Z, d: &Z) {
        let ri = self.rows[i].clone();
        let rj = self.rows[j].clone();
        self.rows[i] = ri.iter().zip(&rj).map(|(x, y)| a.clone() * x.clone() + b.clone() * y.clone()).collect();
        self.rows[j] = ri.iter().zip(&rj).map(|(x, y)| c.clone() * x.clone() + d.clone() * y.clone()).collect();
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.rows.iter_mut() {
            r.swap(i, j);
        }
    }

    /// col_i += q * col_j
    fn add_col(&mut self, i: usize, j: usize, q: &Z) {
        if q.is_zero() {
            return;
        }
        for r in self.rows.iter_mut() {
            let v = r[i].clone() + q.clone() * r[j].clone();
            r[i] = v;
        }
    }
}

impl<Z: Int> fmt::Display for Matrix<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_vecs(&self.rows))
    }
}

/// Returns (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g.
pub fn extended_gcd<Z: Int>(a: &Z, b: &Z) -> (Z, Z, Z) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Z::one(), Z::zero());
    let (mut t0, mut t1) = (Z::zero(), Z::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = r0 - q.clone() * r1.clone();
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = s0 - q.clone() * s1.clone();
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = t0 - q * t1.clone();
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `H = U·A`, `U` unimodular, the nonzero rows of `H`
/// first, pivots strictly increasing and positive, and entries above a pivot
/// reduced into `[0, pivot)`.
pub fn hermite_normal_form<Z: Int>(a: &Matrix<Z>) -> (Matrix<Z>, Matrix<Z>) {
    let m = a.nrows();
    let n = a.ncols();
    let mut h = a.clone();
    let mut u = Matrix::identity(m);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if h.rows[i][c].is_zero() {
                continue;
            }
            let (g, x, y) = extended_gcd(&h.rows[r][c], &h.rows[i][c]);
            let p = h.rows[r][c].clone() / g.clone();
            let q = h.rows[i][c].clone() / g;
            // [[x, y], [-q, p]] has determinant x*p + y*q = 1.
            h.mix_rows(r, i, &x, &y, &-q.clone(), &p);
            u.mix_rows(r, i, &x, &y, &-q, &p);
        }
        if h.rows[r][c].is_zero() {
            continue;
        }
        if h.rows[r][c].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.rows[i][c].div_floor(&h.rows[r][c]);
            if !q.is_zero() {
                h.add_row(i, r, &-q.clone());
                u.add_row(i, r, &-q);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form with both transformations and the inverse of the
/// column transformation.
#[derive(Debug, Clone)]
pub struct Smith<Z> {
    /// Diagonal matrix with `d_1 | d_2 | ...`, all non-negative.
    pub d: Matrix<Z>,
    pub u: Matrix<Z>,
    pub v: Matrix<Z>,
    pub v_inv: Matrix<Z>,
}

impl<Z: Int> Smith<Z> {
    pub fn diagonal(&self) -> Vec<Z> {
        (0..self.d.nrows().min(self.d.ncols()))
            .map(|i| self.d.rows[i][i].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

/// Smith normal form: `U·A·V = D`.
pub fn smith_normal_form<Z: Int>(a: &Matrix<Z>) -> Smith<Z> {
    let m = a.nrows();
    let n = a.ncols();
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let mut vi = Matrix::identity(n);
    // Column op col_i += q col_j on D and V is the row op row_j -= q row_i on V^-1.
    fn col_add<Z: Int>(d: &mut Matrix<Z>, v: &mut Matrix<Z>, vi: &mut Matrix<Z>, i: usize, j: usize, q: &Z) {
        d.add_col(i, j, q);
        v.add_col(i, j, q);
        vi.add_row(j, i, &-q.clone());
    }
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if d.rows[i][j].is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => d.rows[i][j].abs() < d.rows[bi][bj].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Smith { d, u, v, v_inv: vi };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            vi.swap_rows(t, pj);
            let mut clean = true;
            for i in t + 1..m {
                let q = d.rows[i][t].div_floor(&d.rows[t][t]);
                d.add_row(i, t, &-q.clone());
                u.add_row(i, t, &-q);
                if !d.rows[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = d.rows[t][j].div_floor(&d.rows[t][t]);
                col_add(&mut d, &mut v, &mut vi, j, t, &-q);
                if !d.rows[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.rows[i][j].is_multiple_of(&d.rows[t][t])));
            match bad {
                Some(i) => {
                    d.add_row(t, i, &Z::one());
                    u.add_row(t, i, &Z::one());
                }
                None => break,
            }
        }
        if d.rows[t][t].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Smith { d, u, v, v_inv: vi }
}

/// Integer solutions of `x·G = target`, with `G` given by its rows.
/// Returns one coefficient vector when a solution exists.
pub fn solve_left<Z: Int>(generators: &[Vec<Z>], target: &[Z]) -> Option<Vec<Z>> {
    let g = Matrix::new(target.len(), generators.to_vec());
    let (h, u) = hermite_normal_form(&g);
    let mut rest = target.to_vec();
    let mut y = scalar::zeros::<Z>(h.nrows());
    for (i, row) in h.rows.iter().enumerate() {
        let Some(p) = row.iter().position(|x| !x.is_zero()) else { break };
        if rest[p].is_zero() {
            continue;
        }
        if !rest[p].is_multiple_of(&row[p]) {
            return None;
        }
        let q = rest[p].clone() / row[p].clone();
        for (r, x) in rest.iter_mut().zip(row) {
            *r = r.clone() - q.clone() * x.clone();
        }
        y[i] = q;
    }
    if !scalar::is_zero(&rest) {
        return None;
    }
    Some(u.left_apply(&y))
}

/// Basis of `{x : A x = 0}` as an HNF lattice (saturated by construction).
pub fn kernel<Z: Int>(a: &Matrix<Z>) -> Lattice<Z> {
    let at = a.transpose();
    let (h, u) = hermite_normal_form(&at);
    let gens: Vec<Vec<Z>> = (0..h.nrows()).filter(|&i| scalar::is_zero(h.row(i))).map(|i| u.row(i).to_vec()).collect();
    Lattice::span(a.ncols(), &gens)
}

/// Index of a sublattice: finite, or infinite when the ranks differ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Index<Z> {
    Finite(Z),
    Infinite,
}

impl<Z: Int> Index<Z> {
    pub fn is_one(&self) -> bool {
        matches!(self, Index::Finite(z) if z.is_one())
    }

    pub fn finite(&self) -> Option<&Z> {
        match self {
            Index::Finite(z) => Some(z),
            Index::Infinite => None,
        }
    }
}

impl<Z: Int> fmt::Display for Index<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(z) => write!(f, "{z}"),
            Index::Infinite => write!(f, "infinite"),
        }
    }
}

/// A subgroup of `Z^ambient`, stored by the nonzero rows of its Hermite
/// normal form, so two lattices are equal iff their fields are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice<Z> {
    ambient: usize,
    basis: Vec<Vec<Z>>,
}

impl<Z: Int> Lattice<Z> {
    /// The subgroup generated by `vectors` (which may be empty).
    pub fn span(ambient: usize, vectors: &[Vec<Z>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector outside the ambient lattice");
        }
        let (h, _) = hermite_normal_form(&Matrix::new(ambient, vectors.to_vec()));
        let basis = h.into_rows().into_iter().filter(|r| !scalar::is_zero(r)).collect();
        Lattice { ambient, basis }
    }

    /// The full lattice `Z^d`.
    pub fn full(ambient: usize) -> Self {
        Lattice { ambient, basis: (0..ambient).map(|i| scalar::unit(ambient, i)).collect() }
    }

    pub fn zero(ambient: usize) -> Self {
        Lattice { ambient, basis: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Z>] {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.ambient)
    }

    /// Coordinates of `v` in the HNF basis, if `v` belongs to the lattice.
    pub fn coordinates(&self, v: &[Z]) -> Option<Vec<Z>> {
        assert_eq!(v.len(), self.ambient);
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero basis row");
            if !rest[p].is_multiple_of(&row[p]) {
                return None;
            }
            let q = rest[p].clone() / row[p].clone();
            for (r, x) in rest.iter_mut().zip(row) {
                *r = r.clone() - q.clone() * x.clone();
            }
            coords.push(q);
        }
        scalar::is_zero(&rest).then_some(coords)
    }

    pub fn contains(&self, v: &[Z]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice<Z>) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Point of the lattice with the given coordinates.
    pub fn combine(&self, coords: &[Z]) -> Vec<Z> {
        Matrix::new(self.ambient, self.basis.clone()).left_apply(coords)
    }

    /// `[amb : self]`. Errors if `self` is not contained in `amb`.
    pub fn index_in(&self, amb: &Lattice<Z>) -> Result<Index<Z>> {
        if self.ambient != amb.ambient {
            return Err(Error::DimensionMismatch { expected: amb.ambient, found: self.ambient });
        }
        if !amb.contains_lattice(self) {
            return Err(Error::NotContained);
        }
        if self.rank() != amb.rank() {
            return Ok(Index::Infinite);
        }
        let rows: Vec<Vec<Z>> = self.basis.iter().map(|b| amb.coordinates(b).expect("checked containment")).collect();
        let smith = smith_normal_form(&Matrix::new(amb.rank(), rows));
        let idx = smith.diagonal().into_iter().fold(Z::one(), |a, b| a * b);
        Ok(Index::Finite(idx))
    }

    /// The linear functionals vanishing on the lattice, as a saturated lattice.
    pub fn annihilator(&self) -> Lattice<Z> {
        kernel(&Matrix::new(self.ambient, self.basis.clone()))
    }

    /// `(Q ⊗ L) ∩ Z^d`.
    pub fn saturation(&self) -> Lattice<Z> {
        self.annihilator().annihilator()
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation() == *self
    }

    pub fn sum(&self, other: &Lattice<Z>) -> Lattice<Z> {
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Lattice::span(self.ambient, &gens)
    }

    pub fn intersect(&self, other: &Lattice<Z>) -> Lattice<Z> {
        let k = self.rank();
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().map(|b| scalar::neg(b)));
        // c·[B; -B'] = 0 gives c1·B = c2·B'.
        let rel = kernel(&Matrix::new(self.ambient, rows).transpose());
        let gens: Vec<Vec<Z>> = rel.basis.iter().map(|c| self.combine(&c[..k])).collect();
        Lattice::span(self.ambient, &gens)
    }

    /// Vectors completing a basis of a saturated lattice to a basis of `Z^d`.
    pub fn complement(&self) -> Result<Vec<Vec<Z>>> {
        if !self.is_saturated() {
            return Err(Error::Internal("complement of a non-saturated lattice".into()));
        }
        let d = self.ambient;
        let mut chosen: Vec<Vec<Z>> = Vec::new();
        let mut current = self.clone();
        for i in 0..d {
            if current.rank() == d {
                break;
            }
            let e = scalar::unit(d, i);
            let next = current.sum(&Lattice::span(d, std::slice::from_ref(&e)));
            if next.rank() > current.rank() && next.is_saturated() {
                chosen.push(e);
                current = next;
            }
        }
        if current.rank() == d {
            return Ok(chosen);
        }
        // Rows of V^-1 beyond the rank span a complement when B·V = [I|0]·...
        let smith = smith_normal_form(&Matrix::new(d, self.basis.clone()));
        Ok(smith.v_inv.rows[self.rank()..].to_vec())
    }
}

impl<Z: Int> fmt::Display for Lattice<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.basis.iter().map(|b| format!("Z{}", scalar::fmt_vec(b).replace('[', "(").replace(']', ")"))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Homomorphism `Z^source -> Z^target`, stored as a `target × source` matrix
/// acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap<Z> {
    matrix: Matrix<Z>,
}

impl<Z: Int> LinearMap<Z> {
    pub fn new(source: usize, rows: Vec<Vec<Z>>) -> Self {
        LinearMap { matrix: Matrix::new(source, rows) }
    }

    /// Map sending the i-th basis vector of the source to `images[i]`.
    pub fn from_images(target: usize, images: &[Vec<Z>]) -> Self {
        let m = Matrix::new(target, images.to_vec()).transpose();
        LinearMap { matrix: Matrix::new(images.len(), m.into_rows()) }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { matrix: Matrix::identity(n) }
    }

    pub fn matrix(&self) -> &Matrix<Z> {
        &self.matrix
    }

    pub fn source(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn target(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn apply(&self, v: &[Z]) -> Vec<Z> {
        self.matrix.apply(v)
    }

    /// The dual map between dual lattices.
    pub fn transpose(&self) -> Self {
        LinearMap { matrix: self.matrix.transpose() }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap<Z>) -> Result<Self> {
        if other.target() != self.source() {
            return Err(Error::DimensionMismatch { expected: self.source(), found: other.target() });
        }
        Ok(LinearMap { matrix: self.matrix.mul(&other.matrix) })
    }

    pub fn kernel(&self) -> Lattice<Z> {
        kernel(&self.matrix)
    }

    pub fn image(&self) -> Lattice<Z> {
        Lattice::span(self.target(), &self.matrix.transpose().into_rows())
    }
}

/// Kernel of a linear map, saturated in the source lattice.
pub fn kernel_lattice<Z: Int>(b: &LinearMap<Z>) -> Lattice<Z> {
    b.kernel()
}

/// The lattice generated by `vectors` inside `Z^ambient`.
pub fn lattice_span<Z: Int>(ambient: usize, vectors: &[Vec<Z>]) -> Lattice<Z> {
    Lattice::span(ambient, vectors)
}

/// `[amb : sub]`.
pub fn sublattice_index<Z: Int>(sub: &Lattice<Z>, amb: &Lattice<Z>) -> Result<Index<Z>> {
    sub.index_in(amb)
}

/// True iff the `d` vectors in `Z^d` are linearly independent.
pub fn wedge_nonzero<Z: Int>(vectors: &[Vec<Z>]) -> Result<bool> {
    let d = vectors.len();
    for v in vectors {
        if v.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: v.len() });
        }
    }
    Ok(!Matrix::new(d, vectors.to_vec()).determinant()?.is_zero())
}

/// Rank over the rationals of a set of integer vectors.
pub fn rank<Z: Int>(ambient: usize, vectors: &[Vec<Z>]) -> usize {
    Lattice::span(ambient, vectors).rank()
}
