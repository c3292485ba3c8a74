//! Exact dense linear and multilinear algebra over the rationals.
//!
//! Everything here is small and dense: the structures this crate handles
//! live in dimension at most a handful, so clarity wins over sparsity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{ensure_shape, shape, Result};
use crate::rational::{is_zero_vec, unit_vec, zero_vec, Rational, Vector};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|q| q.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        ensure_shape(data.len() == rows * cols, || {
            format!("{} entries for a {rows}x{cols} matrix", data.len())
        })?;
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from rows; `cols` disambiguates the zero-row case.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            ensure_shape(r.len() == cols, || {
                format!("row {} has {} entries, expected {cols}", i + 1, r.len())
            })?;
            data.extend(r);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// Integer literal helper, mostly for tests and the example library.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix literal");
                r.iter().map(|&x| crate::rational::int(x))
            })
            .collect();
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn entries_mut(&mut self) -> &mut [Rational] {
        &mut self.data
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        let mut out = zero_vec(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = &self.data[r * self.cols + c];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        ensure_shape(self.cols == other.rows, || {
            format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )
        })?;
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut m = Self::zeros(self.rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[r * cols + c] = self.get(r, c).clone();
            }
            for c in 0..other.cols {
                m.data[r * cols + self.cols + c] = other.get(r, c).clone();
            }
        }
        m
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        m
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    /// Column-major flattening, matching `vec(AXB) = (Bᵀ ⊗ A) vec(X)`.
    pub fn vec_column_major(&self) -> Vector {
        let mut v = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                v.push(self.get(r, c).clone());
            }
        }
        v
    }

    pub fn from_vec_column_major(rows: usize, cols: usize, v: &[Rational]) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        let mut m = Self::zeros(rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                m.set(r, c, v[c * rows + r].clone());
            }
        }
        m
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = &factor * m.get(row, c);
                    if !sub.is_zero() {
                        *m.get_mut(r, c) -= sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }
}

/// Returns one exact solution of `a · x = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero.
pub fn solve(a: &Matrix, b: &[Rational]) -> Result<Option<Vector>> {
    ensure_shape(a.rows() == b.len(), || {
        format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            a.rows()
        )
    })?;
    let aug = a.hstack(&Matrix::from_columns(a.rows(), &[b.to_vec()]));
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&a.cols()) {
        return Ok(None);
    }
    let mut x = zero_vec(a.cols());
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, a.cols()).clone();
    }
    Ok(Some(x))
}

/// Kernel of `a` as a canonical subspace of `Q^{cols}`.
pub fn nullspace(a: &Matrix) -> Subspace {
    let n = a.cols();
    let (r, pivots) = a.rref();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = zero_vec(n);
        v[free] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free);
        }
        basis.push(v);
    }
    Subspace::span(n, &basis)
}

/// Image (column space) of `a` in `Q^{rows}`.
pub fn image(a: &Matrix) -> Subspace {
    Subspace::span(a.rows(), &a.columns())
}

/// Linear subspace in canonical reduced column echelon form: the basis
/// columns, read as rows, form a reduced row echelon matrix. Two subspaces
/// are equal exactly when their representations are equal entry-wise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(ambient, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors, canonicalized.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let rows: Vec<Vector> = vectors
            .iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "spanning vector length mismatch"))
            .cloned()
            .collect();
        let m = Matrix::from_rows(rows, ambient).expect("checked lengths");
        let (r, pivots) = m.rref();
        let k = pivots.len();
        let basis = r.block(0, 0, k, ambient).transpose();
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.columns()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.basis.apply(&c) == v).then_some(c)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.ambient, &vs)
    }

    /// Image of this subspace under `f`.
    pub fn map(&self, f: &Matrix) -> Subspace {
        assert_eq!(f.cols(), self.ambient);
        let vs: Vec<Vector> = self.basis_vectors().iter().map(|v| f.apply(v)).collect();
        Subspace::span(f.rows(), &vs)
    }

    /// True when `f` maps this subspace into itself.
    pub fn is_invariant_under(&self, f: &Matrix) -> bool {
        self.basis_vectors().iter().all(|v| self.contains(&f.apply(v)))
    }

    /// Matrix of `f` restricted to this subspace and corestricted to
    /// `target`, when `f(self) ⊆ target`.
    pub fn restrict_map(&self, f: &Matrix, target: &Subspace) -> Option<Matrix> {
        let mut cols = Vec::with_capacity(self.dim());
        for v in self.basis_vectors() {
            cols.push(target.coordinates(&f.apply(&v))?);
        }
        Some(Matrix::from_columns(target.dim(), &cols))
    }
}

/// Which slot of a bilinear map the closure absorbs against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Subspace element on the left: `B(s, v) ∈ S` for all ambient `v`.
    Left,
    /// Subspace element on the right: `B(v, s) ∈ S` for all ambient `v`.
    Right,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub subspace: Subspace,
    /// Number of passes that strictly enlarged the subspace.
    pub rounds: usize,
}

/// Smallest subspace containing `seed`, invariant under every matrix in
/// `unary`, and absorbing under every bilinear map in `binary` on the
/// indicated side.
pub fn closure(seed: &Subspace, unary: &[Matrix], binary: &[(&Bilinear, Side)]) -> Result<Closure> {
    let n = seed.ambient_dim();
    let mut ops: Vec<Matrix> = Vec::new();
    for (k, u) in unary.iter().enumerate() {
        ensure_shape(u.rows() == n && u.cols() == n, || {
            format!("unary operator {} is {}x{}, ambient dimension is {n}", k + 1, u.rows(), u.cols())
        })?;
        ops.push(u.clone());
    }
    for (k, (b, side)) in binary.iter().enumerate() {
        if b.dim_out() != n {
            return Err(shape(format!("binary operator {} lands in dimension {}, expected {n}", k + 1, b.dim_out())));
        }
        if matches!(side, Side::Left | Side::Both) {
            ensure_shape(b.dim_left() == n, || format!("binary operator {} left slot has dimension {}", k + 1, b.dim_left()))?;
            for j in 0..b.dim_right() {
                ops.push(b.right_operator(&unit_vec(b.dim_right(), j)));
            }
        }
        if matches!(side, Side::Right | Side::Both) {
            ensure_shape(b.dim_right() == n, || format!("binary operator {} right slot has dimension {}", k + 1, b.dim_right()))?;
            for i in 0..b.dim_left() {
                ops.push(b.left_operator(&unit_vec(b.dim_left(), i)));
            }
        }
    }
    let mut current = seed.clone();
    let mut rounds = 0;
    loop {
        let mut vs = current.basis_vectors();
        for v in current.basis_vectors() {
            for op in &ops {
                vs.push(op.apply(&v));
            }
        }
        let next = Subspace::span(n, &vs);
        if next.dim() == current.dim() {
            return Ok(Closure {
                subspace: current,
                rounds,
            });
        }
        rounds += 1;
        current = next;
    }
}

/// Bilinear map `Q^left × Q^right → Q^out` stored densely as `c[k][i][j]`,
/// meaning `(e_i, e_j) ↦ Σ_k c[k][i][j] e_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bilinear {
    out: usize,
    left: usize,
    right: usize,
    coeffs: Vec<Rational>,
}

impl fmt::Debug for Bilinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bilinear({}x{}->{})[", self.left, self.right, self.out)?;
        let mut first = true;
        for k in 0..self.out {
            for i in 0..self.left {
                for j in 0..self.right {
                    let c = self.get(k, i, j);
                    if !c.is_zero() {
                        if !first {
                            write!(f, ", ")?;
                        }
                        first = false;
                        write!(f, "c[{}][{}][{}]={}", k + 1, i + 1, j + 1, c)?;
                    }
                }
            }
        }
        write!(f, "]")
    }
}

impl Bilinear {
    pub fn zeros(out: usize, left: usize, right: usize) -> Self {
        Self {
            out,
            left,
            right,
            coeffs: vec![Rational::zero(); out * left * right],
        }
    }

    pub fn from_vec(out: usize, left: usize, right: usize, coeffs: Vec<Rational>) -> Result<Self> {
        ensure_shape(coeffs.len() == out * left * right, || {
            format!("{} coefficients for a {left}x{right}->{out} tensor", coeffs.len())
        })?;
        Ok(Self {
            out,
            left,
            right,
            coeffs,
        })
    }

    /// Builds the tensor from its values on basis pairs.
    pub fn from_fn(out: usize, left: usize, right: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut b = Self::zeros(out, left, right);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.len(), out, "basis product has wrong length");
                for (k, x) in v.into_iter().enumerate() {
                    b.set(k, i, j, x);
                }
            }
        }
        b
    }

    pub fn dim_out(&self) -> usize {
        self.out
    }

    pub fn dim_left(&self) -> usize {
        self.left
    }

    pub fn dim_right(&self) -> usize {
        self.right
    }

    fn idx(&self, k: usize, i: usize, j: usize) -> usize {
        (k * self.left + i) * self.right + j
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.coeffs[self.idx(k, i, j)]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, value: Rational) {
        let ix = self.idx(k, i, j);
        self.coeffs[ix] = value;
    }

    pub fn get_mut(&mut self, k: usize, i: usize, j: usize) -> &mut Rational {
        let ix = self.idx(k, i, j);
        &mut self.coeffs[ix]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Rational] {
        &mut self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    /// `B(e_i, e_j)`
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        (0..self.out).map(|k| self.get(k, i, j).clone()).collect()
    }

    pub fn apply(&self, u: &[Rational], v: &[Rational]) -> Vector {
        assert_eq!(u.len(), self.left, "left argument length mismatch");
        assert_eq!(v.len(), self.right, "right argument length mismatch");
        let mut out = zero_vec(self.out);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(k, i, j);
                    if !c.is_zero() {
                        *o += c * &ab;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `v ↦ B(u, v)`.
    pub fn left_operator(&self, u: &[Rational]) -> Matrix {
        assert_eq!(u.len(), self.left);
        let mut m = Matrix::zeros(self.out, self.right);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for k in 0..self.out {
                for j in 0..self.right {
                    let c = self.get(k, i, j);
                    if !c.is_zero() {
                        *m.get_mut(k, j) += c * a;
                    }
                }
            }
        }
        m
    }

    /// Matrix of `u ↦ B(u, v)`.
    pub fn right_operator(&self, v: &[Rational]) -> Matrix {
        assert_eq!(v.len(), self.right);
        let mut m = Matrix::zeros(self.out, self.left);
        for (j, b) in v.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for k in 0..self.out {
                for i in 0..self.left {
                    let c = self.get(k, i, j);
                    if !c.is_zero() {
                        *m.get_mut(k, i) += c * b;
                    }
                }
            }
        }
        m
    }

    /// `(a, b) ↦ out_map · B(left_map · a, right_map · b)`.
    pub fn transform(&self, out_map: &Matrix, left_map: &Matrix, right_map: &Matrix) -> Bilinear {
        assert_eq!(out_map.cols(), self.out);
        assert_eq!(left_map.rows(), self.left);
        assert_eq!(right_map.rows(), self.right);
        let lcols = left_map.columns();
        let rcols = right_map.columns();
        Bilinear::from_fn(out_map.rows(), left_map.cols(), right_map.cols(), |a, b| {
            out_map.apply(&self.apply(&lcols[a], &rcols[b]))
        })
    }

    /// Swaps the argument order: `(u, v) ↦ B(v, u)`.
    pub fn flipped(&self) -> Bilinear {
        Bilinear::from_fn(self.out, self.right, self.left, |i, j| self.basis_product(j, i))
    }

    pub fn scale(&self, c: &Rational) -> Bilinear {
        Bilinear {
            out: self.out,
            left: self.left,
            right: self.right,
            coeffs: self.coeffs.iter().map(|x| c * x).collect(),
        }
    }

    pub fn add(&self, other: &Bilinear) -> Bilinear {
        assert_eq!((self.out, self.left, self.right), (other.out, other.left, other.right));
        Bilinear {
            out: self.out,
            left: self.left,
            right: self.right,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Quotient of `Q^ambient` by a subspace, with a fixed complement: the
/// representatives are spanned by the standard basis vectors at the non-pivot
/// positions of the subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientStructure {
    ambient: usize,
    subspace: Subspace,
    projection: Matrix,
    section: Matrix,
}

impl QuotientStructure {
    pub fn new(subspace: Subspace) -> Self {
        let n = subspace.ambient_dim();
        let comp: Vec<usize> = (0..n).filter(|i| !subspace.pivots().contains(i)).collect();
        let q = comp.len();
        let mut section = Matrix::zeros(n, q);
        for (col, &i) in comp.iter().enumerate() {
            section.set(i, col, Rational::one());
        }
        // v ↦ v - Σ v[p_i] b_i, then read off the complement coordinates.
        let mut reduce = Matrix::identity(n);
        for (col, &p) in subspace.pivots().iter().enumerate() {
            for r in 0..n {
                let b = subspace.basis().get(r, col);
                if !b.is_zero() {
                    *reduce.get_mut(r, p) -= b;
                }
            }
        }
        let projection = &section.transpose() * &reduce;
        Self {
            ambient: n,
            subspace,
            projection,
            section,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.subspace.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// Ambient → quotient coordinates.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// Quotient coordinates → ambient representatives.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    /// Map induced on the quotient by an endomorphism of the ambient space;
    /// `None` when `f` does not preserve the subspace.
    pub fn induced_endomorphism(&self, f: &Matrix) -> Option<Matrix> {
        assert_eq!((f.rows(), f.cols()), (self.ambient, self.ambient));
        if !self.subspace.is_invariant_under(f) {
            return None;
        }
        Some(&(&self.projection * f) * &self.section)
    }

    /// Map out of the quotient induced by `g`; `None` unless `g` kills the
    /// subspace.
    pub fn induced_map_out(&self, g: &Matrix) -> Option<Matrix> {
        assert_eq!(g.cols(), self.ambient);
        if !(g * self.subspace.basis()).is_zero() {
            return None;
        }
        Some(g * &self.section)
    }

    /// Map into the quotient: `v ↦ p(g v)`.
    pub fn map_into(&self, g: &Matrix) -> Matrix {
        &self.projection * g
    }

    /// Product induced on the quotient by an ambient product; requires the
    /// subspace to be a two-sided ideal for it.
    pub fn induced_product(&self, b: &Bilinear) -> Option<Bilinear> {
        let n = self.ambient;
        assert_eq!((b.dim_out(), b.dim_left(), b.dim_right()), (n, n, n));
        for s in self.subspace.basis_vectors() {
            for j in 0..n {
                let e = unit_vec(n, j);
                if !self.subspace.contains(&b.apply(&s, &e)) || !self.subspace.contains(&b.apply(&e, &s)) {
                    return None;
                }
            }
        }
        Some(b.transform(&self.projection, &self.section, &self.section))
    }

    /// Left action `X ⊗ V → V` induced on the quotient of `V`.
    pub fn induced_left_action(&self, b: &Bilinear) -> Option<Bilinear> {
        let n = self.ambient;
        assert_eq!((b.dim_out(), b.dim_right()), (n, n));
        for s in self.subspace.basis_vectors() {
            for i in 0..b.dim_left() {
                if !self.subspace.contains(&b.apply(&unit_vec(b.dim_left(), i), &s)) {
                    return None;
                }
            }
        }
        Some(b.transform(&self.projection, &Matrix::identity(b.dim_left()), &self.section))
    }

    /// Right action `V ⊗ X → V` induced on the quotient of `V`.
    pub fn induced_right_action(&self, b: &Bilinear) -> Option<Bilinear> {
        let n = self.ambient;
        assert_eq!((b.dim_out(), b.dim_left()), (n, n));
        for s in self.subspace.basis_vectors() {
            for j in 0..b.dim_right() {
                if !self.subspace.contains(&b.apply(&s, &unit_vec(b.dim_right(), j))) {
                    return None;
                }
            }
        }
        Some(b.transform(&self.projection, &self.section, &Matrix::identity(b.dim_right())))
    }
}

/// Solves the linear system `Σ_k A_k · H · B_k = C_k` (one equation per
/// term group) for an unknown `rows × cols` matrix `H`.
///
/// Returns a particular solution (or `None`) and the kernel of the
/// homogeneous system, as a subspace of column-major flattened matrices.
pub fn solve_matrix_equations(
    rows: usize,
    cols: usize,
    equations: &[MatrixEquation],
) -> Result<(Option<Matrix>, Subspace)> {
    let unknowns = rows * cols;
    let mut system = Matrix::zeros(0, unknowns);
    let mut rhs: Vector = Vec::new();
    for (n, eq) in equations.iter().enumerate() {
        let mut block: Option<Matrix> = None;
        for (a, b) in &eq.terms {
            ensure_shape(a.cols() == rows && b.rows() == cols, || {
                format!("equation {} term does not fit a {rows}x{cols} unknown", n + 1)
            })?;
            ensure_shape(a.rows() == eq.rhs.rows() && b.cols() == eq.rhs.cols(), || {
                format!("equation {} term does not match its right-hand side", n + 1)
            })?;
            let k = b.transpose().kron(a);
            block = Some(match block {
                None => k,
                Some(acc) => &acc + &k,
            });
        }
        if let Some(block) = block {
            system = system.vstack(&block);
            rhs.extend(eq.rhs.vec_column_major());
        }
    }
    let kernel = nullspace(&system);
    let particular = solve(&system, &rhs)?.map(|x| Matrix::from_vec_column_major(rows, cols, &x));
    Ok((particular, kernel))
}

/// One linear matrix equation `Σ A · H · B = rhs`.
#[derive(Clone, Debug)]
pub struct MatrixEquation {
    pub terms: Vec<(Matrix, Matrix)>,
    pub rhs: Matrix,
}

impl MatrixEquation {
    /// `A · H = rhs`
    pub fn left(a: Matrix, cols: usize, rhs: Matrix) -> Self {
        Self {
            terms: vec![(a, Matrix::identity(cols))],
            rhs,
        }
    }

    /// `H · B = rhs`
    pub fn right(rows: usize, b: Matrix, rhs: Matrix) -> Self {
        Self {
            terms: vec![(Matrix::identity(rows), b)],
            rhs,
        }
    }

    /// `A · H - H · B = 0`
    pub fn commute(a: Matrix, b: Matrix, rows: usize, cols: usize) -> Self {
        let rhs = Matrix::zeros(rows, cols);
        Self {
            terms: vec![(a, Matrix::identity(cols)), (-&Matrix::identity(rows), b)],
            rhs,
        }
    }
}
