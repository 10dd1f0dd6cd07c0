//! Exact integer matrices: Smith normal form with unimodular transforms,
//! integer kernels, subquotient presentations.
//!
//! Everything here is generic over [`Scalar`] and exact. The pivot rule is
//! fixed (nonzero entry of minimal absolute value, ties broken by smallest
//! row then column index) so all outputs are deterministic. Fixed-width runs
//! abort with [`Overflow`] rather than wrap; the drivers at the bottom retry
//! over `BigInt`.

use crate::scalar::{Overflow, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense row-major matrix over an exact integer scalar.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Arbitrary-precision matrix; the general-purpose instantiation.
pub type IntMatrix = Matrix<BigInt>;

/// Machine-word matrix used on fast paths with checked arithmetic.
pub type WordMatrix = Matrix<i64>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row_slice(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Columns `lo..hi` as a new matrix.
    pub fn column_block(&self, lo: usize, hi: usize) -> Self {
        Self::from_fn(self.rows, hi - lo, |i, j| self.at(i, lo + j).clone())
    }

    /// Rows `lo..hi` as a new matrix.
    pub fn row_block(&self, lo: usize, hi: usize) -> Self {
        Self::from_fn(hi - lo, self.cols, |i, j| self.at(lo + i, j).clone())
    }

    pub fn hstack(blocks: &[&Matrix<T>]) -> Self {
        assert!(!blocks.is_empty());
        let rows = blocks[0].rows;
        assert!(blocks.iter().all(|b| b.rows == rows));
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    m.set(i, off + j, b.at(i, j).clone());
                }
            }
            off += b.cols;
        }
        m
    }

    pub fn vstack(blocks: &[&Matrix<T>]) -> Self {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        assert!(blocks.iter().all(|b| b.cols == cols));
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..cols {
                    m.set(off + i, j, b.at(i, j).clone());
                }
            }
            off += b.rows;
        }
        m
    }

    /// Block-diagonal assembly.
    pub fn block_diag(blocks: &[&Matrix<T>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(ro + i, co + j, b.at(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    /// Product, skipping zero entries of `self` (fast on permutation-like
    /// matrices).
    pub fn checked_mul_mat(&self, other: &Matrix<T>) -> Result<Matrix<T>, Overflow> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.checked_mul_ref(b)?;
                    let cur = out.at(i, j).checked_add_ref(&t)?;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn checked_mul_vec(&self, v: &[T]) -> Result<Vec<T>, Overflow> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![T::zero(); self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() || v[k].is_zero() {
                    continue;
                }
                out[i] = out[i].checked_add_ref(&a.checked_mul_ref(&v[k])?)?;
            }
        }
        Ok(out)
    }

    pub fn checked_add_mat(&self, other: &Matrix<T>) -> Result<Matrix<T>, Overflow> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.checked_add_ref(b)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Matrix<T> {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = T::zero() - a.clone();
        }
        out
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_big(&self) -> IntMatrix {
        self.map(|v| {
            v.to_i64()
                .map(BigInt::from)
                .unwrap_or_else(|| format!("{v}").parse().expect("decimal integer"))
        })
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }
}

impl IntMatrix {
    /// Exact product over `BigInt`; cannot overflow.
    pub fn mul_big(&self, other: &IntMatrix) -> IntMatrix {
        self.checked_mul_mat(other).expect("BigInt never overflows")
    }

    pub fn to_word(&self) -> Option<WordMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for v in &self.data {
            data.push(v.to_i64()?);
        }
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Which unimodular transforms an SNF run should track.
#[derive(Clone, Copy, Default)]
pub struct SnfOptions {
    pub u: bool,
    pub uinv: bool,
    pub v: bool,
}

impl SnfOptions {
    pub fn all() -> Self {
        SnfOptions {
            u: true,
            uinv: true,
            v: true,
        }
    }

    pub fn none() -> Self {
        SnfOptions::default()
    }
}

/// Smith normal form `U * A * V = S` with `S` diagonal, nonnegative, and
/// each diagonal entry dividing the next.
pub struct Snf<T> {
    pub s: Matrix<T>,
    pub u: Option<Matrix<T>>,
    pub uinv: Option<Matrix<T>>,
    pub v: Option<Matrix<T>>,
    pub rank: usize,
}

impl<T: Scalar> Snf<T> {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.s.at(i, i).clone()).collect()
    }
}

/// Generic SNF. Deterministic: pivots are chosen as the nonzero entry of
/// minimal absolute value, ties broken by smallest row then column.
pub fn snf_generic<T: Scalar>(a: &Matrix<T>, opts: SnfOptions) -> Result<Snf<T>, Overflow> {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = opts.u.then(|| Matrix::<T>::identity(m));
    let mut uinv = opts.uinv.then(|| Matrix::<T>::identity(m));
    let mut v = opts.v.then(|| Matrix::<T>::identity(n));

    // Row op: row_i += c * row_j on S and U; Uinv gets col_j -= c * col_i.
    // Implemented inline to keep borrows simple.
    macro_rules! row_axpy {
        ($i:expr, $j:expr, $c:expr) => {{
            let (i, j, c) = ($i, $j, $c);
            axpy_row(&mut s, i, j, &c)?;
            if let Some(u) = u.as_mut() {
                axpy_row(u, i, j, &c)?;
            }
            if let Some(ui) = uinv.as_mut() {
                let nc = c.checked_neg_ref()?;
                axpy_col(ui, j, i, &nc)?;
            }
        }};
    }
    macro_rules! col_axpy {
        ($j:expr, $i:expr, $c:expr) => {{
            // col_j += c * col_i
            let (j, i, c) = ($j, $i, $c);
            axpy_col(&mut s, j, i, &c)?;
            if let Some(v) = v.as_mut() {
                axpy_col(v, j, i, &c)?;
            }
        }};
    }

    let kmax = m.min(n);
    let mut k = 0;
    while k < kmax {
        let Some((pi, pj)) = find_pivot(&s, k) else { break };
        if pi != k {
            swap_rows(&mut s, k, pi);
            if let Some(u) = u.as_mut() {
                swap_rows(u, k, pi);
            }
            if let Some(ui) = uinv.as_mut() {
                swap_cols(ui, k, pi);
            }
        }
        if pj != k {
            swap_cols(&mut s, k, pj);
            if let Some(v) = v.as_mut() {
                swap_cols(v, k, pj);
            }
        }
        if s.at(k, k).is_negative() {
            negate_row(&mut s, k)?;
            if let Some(u) = u.as_mut() {
                negate_row(u, k)?;
            }
            if let Some(ui) = uinv.as_mut() {
                negate_col(ui, k)?;
            }
        }

        // Eliminate row and column k; repeat while residues appear.
        loop {
            let mut clean = true;
            for i in k + 1..m {
                if s.at(i, k).is_zero() {
                    continue;
                }
                let q = s.at(i, k).rounded_div(s.at(k, k))?;
                if !q.is_zero() {
                    let nq = q.checked_neg_ref()?;
                    row_axpy!(i, k, nq);
                }
                if !s.at(i, k).is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..n {
                if s.at(k, j).is_zero() {
                    continue;
                }
                let q = s.at(k, j).rounded_div(s.at(k, k))?;
                if !q.is_zero() {
                    let nq = q.checked_neg_ref()?;
                    col_axpy!(j, k, nq);
                }
                if !s.at(k, j).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // A residue strictly smaller than the pivot exists; re-pivot
            // within the cross to keep entries shrinking.
            let mut best = (k, k);
            for i in k + 1..m {
                if !s.at(i, k).is_zero() && s.at(i, k).abs() < s.at(best.0, best.1).abs() {
                    best = (i, k);
                }
            }
            for j in k + 1..n {
                if !s.at(k, j).is_zero() && s.at(k, j).abs() < s.at(best.0, best.1).abs() {
                    best = (k, j);
                }
            }
            if best.0 != k {
                swap_rows(&mut s, k, best.0);
                if let Some(u) = u.as_mut() {
                    swap_rows(u, k, best.0);
                }
                if let Some(ui) = uinv.as_mut() {
                    swap_cols(ui, k, best.0);
                }
            } else if best.1 != k {
                swap_cols(&mut s, k, best.1);
                if let Some(v) = v.as_mut() {
                    swap_cols(v, k, best.1);
                }
            }
            if s.at(k, k).is_negative() {
                negate_row(&mut s, k)?;
                if let Some(u) = u.as_mut() {
                    negate_row(u, k)?;
                }
                if let Some(ui) = uinv.as_mut() {
                    negate_col(ui, k)?;
                }
            }
        }

        // Divisibility fix-up: fold in any entry the pivot does not divide.
        let d = s.at(k, k).clone();
        let mut offender: Option<(usize, usize)> = None;
        'scan: for i in k + 1..m {
            for j in k + 1..n {
                if !s.at(i, j).mod_floor(&d).is_zero() {
                    offender = Some((i, j));
                    break 'scan;
                }
            }
        }
        if let Some((i, _)) = offender {
            row_axpy!(k, i, T::one());
            continue; // redo position k with the folded row
        }
        k += 1;
    }

    let rank = (0..kmax).take_while(|&i| !s.at(i, i).is_zero()).count();
    Ok(Snf {
        s,
        u,
        uinv,
        v,
        rank,
    })
}

fn swap_rows<T: Scalar>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let x = m.at(a, j).clone();
        let y = m.at(b, j).clone();
        m.set(a, j, y);
        m.set(b, j, x);
    }
}

fn swap_cols<T: Scalar>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let x = m.at(i, a).clone();
        let y = m.at(i, b).clone();
        m.set(i, a, y);
        m.set(i, b, x);
    }
}

fn negate_row<T: Scalar>(m: &mut Matrix<T>, i: usize) -> Result<(), Overflow> {
    for j in 0..m.cols() {
        let v = m.at(i, j).checked_neg_ref()?;
        m.set(i, j, v);
    }
    Ok(())
}

fn negate_col<T: Scalar>(m: &mut Matrix<T>, j: usize) -> Result<(), Overflow> {
    for i in 0..m.rows() {
        let v = m.at(i, j).checked_neg_ref()?;
        m.set(i, j, v);
    }
    Ok(())
}

/// row_i += c * row_j
fn axpy_row<T: Scalar>(m: &mut Matrix<T>, i: usize, j: usize, c: &T) -> Result<(), Overflow> {
    debug_assert_ne!(i, j);
    for col in 0..m.cols() {
        let b = m.at(j, col);
        if b.is_zero() {
            continue;
        }
        let t = c.checked_mul_ref(b)?;
        let nv = m.at(i, col).checked_add_ref(&t)?;
        m.set(i, col, nv);
    }
    Ok(())
}

/// col_j += c * col_i
fn axpy_col<T: Scalar>(m: &mut Matrix<T>, j: usize, i: usize, c: &T) -> Result<(), Overflow> {
    debug_assert_ne!(i, j);
    for row in 0..m.rows() {
        let b = m.at(row, i);
        if b.is_zero() {
            continue;
        }
        let t = c.checked_mul_ref(b)?;
        let nv = m.at(row, j).checked_add_ref(&t)?;
        m.set(row, j, nv);
    }
    Ok(())
}

/// Public SNF result over `BigInt`, always carrying both transforms.
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SnfResult {
    pub fn factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s.at(i, i).clone()).collect()
    }
}

/// Runs the word-sized fast path first and falls back to arbitrary
/// precision on overflow, so results are always exact.
fn snf_auto(a: &IntMatrix, opts: SnfOptions) -> Snf<BigInt> {
    if let Some(w) = a.to_word() {
        if let Ok(snf) = snf_generic(&w, opts) {
            return Snf {
                s: snf.s.to_big(),
                u: snf.u.map(|m| m.to_big()),
                uinv: snf.uinv.map(|m| m.to_big()),
                v: snf.v.map(|m| m.to_big()),
                rank: snf.rank,
            };
        }
    }
    snf_generic(a, opts).expect("BigInt SNF cannot overflow")
}

/// Smith normal form with unimodular transforms: `u * a * v = s`.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let r = snf_auto(
        a,
        SnfOptions {
            u: true,
            uinv: false,
            v: true,
        },
    );
    SnfResult {
        s: r.s,
        u: r.u.unwrap(),
        v: r.v.unwrap(),
        rank: r.rank,
    }
}

/// Invariant factors only (no transforms tracked).
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    snf_auto(a, SnfOptions::none()).factors()
}

/// Columns form a basis of the integer kernel `{x : a * x = 0}`. The basis
/// is saturated: the kernel is a direct summand of the ambient lattice.
/// Each basis column is normalized so its first nonzero entry is positive.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let r = snf_auto(
        a,
        SnfOptions {
            u: false,
            uinv: false,
            v: true,
        },
    );
    let v = r.v.unwrap();
    let mut k = v.column_block(r.rank, a.cols());
    for j in 0..k.cols() {
        let lead = (0..k.rows()).find(|&i| !k.at(i, j).is_zero());
        if let Some(i) = lead {
            if k.at(i, j).is_negative() {
                for row in 0..k.rows() {
                    let nv = -k.at(row, j).clone();
                    k.set(row, j, nv);
                }
            }
        }
    }
    k
}

/// A finitely generated abelian group in invariant-factor form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianPresentation {
    pub free_rank: usize,
    /// Invariant factors, each > 1, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl AbelianPresentation {
    pub fn trivial() -> Self {
        AbelianPresentation {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Group order; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product::<BigInt>().max(BigInt::one()))
    }

    /// Renders as `0`, `Z/2 x Z/4`, `Z^2 x Z/3`, ...
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" x ")
        }
    }
}

impl fmt::Display for AbelianPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Presents `Z^ambient_rank / column-span(sub_basis)`.
pub fn quotient_presentation(ambient_rank: usize, sub_basis: &IntMatrix) -> AbelianPresentation {
    assert_eq!(sub_basis.rows(), ambient_rank, "sub-basis not in Z^n");
    let factors = invariant_factors(sub_basis);
    AbelianPresentation {
        free_rank: ambient_rank - factors.len(),
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Failure of the exact solve `K * C = B`; callers treat this as a broken
/// internal exactness assumption (a `d∘d != 0`-class bug), not user error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessViolation(pub String);

impl fmt::Display for ExactnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exactness violation: {}", self.0)
    }
}

/// Given a saturated kernel basis `K` (columns) and a matrix `B` whose
/// columns lie in the span of `K`, returns `C` with `K * C = B`, exactly.
pub fn image_in_kernel_coordinates(
    b: &IntMatrix,
    k: &IntMatrix,
) -> Result<IntMatrix, ExactnessViolation> {
    assert_eq!(b.rows(), k.rows(), "ambient dimension mismatch");
    let kc = k.cols();
    let snf = snf_auto(
        k,
        SnfOptions {
            u: true,
            uinv: false,
            v: true,
        },
    );
    if snf.rank != kc || snf.factors().iter().any(|d| !d.is_one()) {
        return Err(ExactnessViolation(
            "kernel basis is not saturated or not independent".into(),
        ));
    }
    let u = snf.u.unwrap();
    let v = snf.v.unwrap();
    let ub = u.mul_big(b);
    for i in kc..ub.rows() {
        for j in 0..ub.cols() {
            if !ub.at(i, j).is_zero() {
                return Err(ExactnessViolation(format!(
                    "column {j} not in the kernel span"
                )));
            }
        }
    }
    let top = ub.row_block(0, kc);
    Ok(v.mul_big(&top))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> IntMatrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    fn check_snf(a: &IntMatrix) -> SnfResult {
        let r = snf(a);
        // U * A * V = S, exactly.
        assert_eq!(r.u.mul_big(a).mul_big(&r.v), r.s);
        // Diagonal, nonnegative, divisibility chain, zeros trailing.
        for i in 0..r.s.rows() {
            for j in 0..r.s.cols() {
                if i != j {
                    assert!(r.s.at(i, j).is_zero());
                }
            }
        }
        let d = (0..r.s.rows().min(r.s.cols()))
            .map(|i| r.s.at(i, i).clone())
            .collect::<Vec<_>>();
        for w in d.windows(2) {
            if !w[0].is_zero() {
                assert!(w[1].is_zero() || (&w[1] % &w[0]).is_zero(), "chain broken");
            } else {
                assert!(w[1].is_zero(), "zero before nonzero");
            }
        }
        r
    }

    #[test]
    fn snf_identity() {
        let r = check_snf(&m(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]));
        assert_eq!(r.s, IntMatrix::identity(3));
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn snf_2x2_example() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8.
        let r = check_snf(&m(vec![vec![2, 4], vec![6, 8]]));
        assert_eq!(r.factors(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn snf_zero_matrix() {
        let r = check_snf(&m(vec![vec![0, 0], vec![0, 0], vec![0, 0]]));
        assert!(r.s.is_zero());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn snf_empty_matrices() {
        let r = check_snf(&IntMatrix::zeros(0, 3));
        assert_eq!(r.rank, 0);
        let r = check_snf(&IntMatrix::zeros(3, 0));
        assert_eq!(r.rank, 0);
        let r = check_snf(&IntMatrix::zeros(0, 0));
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = kernel_basis(&IntMatrix::identity(4));
        assert_eq!(k.cols(), 0);
        assert_eq!(k.rows(), 4);
    }

    #[test]
    fn kernel_of_ones_row() {
        let k = kernel_basis(&m(vec![vec![1, 1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![BigInt::from(1), BigInt::from(-1)]);
    }

    #[test]
    fn kernel_primitive_generator() {
        // 2x + 4y = 0 over Z has primitive solution (2, -1).
        let k = kernel_basis(&m(vec![vec![2, 4]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![BigInt::from(2), BigInt::from(-1)]);
    }

    #[test]
    fn kernel_is_saturated() {
        let a = m(vec![vec![2, 4, 6], vec![0, 10, 4]]);
        let k = kernel_basis(&a);
        for f in invariant_factors(&k) {
            assert!(f.is_one());
        }
    }

    #[test]
    fn quotient_presentation_examples() {
        // Z / 2Z
        let p = quotient_presentation(1, &m(vec![vec![2]]));
        assert_eq!(p.free_rank, 0);
        assert_eq!(p.torsion, vec![BigInt::from(2)]);
        // Z (empty subgroup)
        let p = quotient_presentation(1, &IntMatrix::zeros(1, 0));
        assert_eq!(p.free_rank, 1);
        assert!(p.torsion.is_empty());
        // Z^2 / <(1,0),(0,6)> = Z/6
        let p = quotient_presentation(2, &m(vec![vec![1, 0], vec![0, 6]]));
        assert_eq!(p.free_rank, 0);
        assert_eq!(p.torsion, vec![BigInt::from(6)]);
    }

    #[test]
    fn image_in_kernel_identity_case() {
        let k = m(vec![vec![2, 0], vec![-1, 1], vec![0, 3]]);
        let c = image_in_kernel_coordinates(&k, &k).unwrap();
        assert_eq!(c, IntMatrix::identity(2));
    }

    #[test]
    fn image_in_kernel_zero_and_forced() {
        let k = m(vec![vec![2], vec![-1]]);
        let z = IntMatrix::zeros(2, 1);
        assert_eq!(
            image_in_kernel_coordinates(&z, &k).unwrap(),
            IntMatrix::zeros(1, 1)
        );
        let b = m(vec![vec![4], vec![-2]]);
        assert_eq!(image_in_kernel_coordinates(&b, &k).unwrap(), m(vec![vec![2]]));
    }

    #[test]
    fn image_in_kernel_rejects_outside_vectors() {
        let k = m(vec![vec![2], vec![-1]]);
        let b = m(vec![vec![1], vec![1]]);
        assert!(image_in_kernel_coordinates(&b, &k).is_err());
    }

    #[test]
    fn presentation_rendering() {
        assert_eq!(AbelianPresentation::trivial().render(), "0");
        let p = AbelianPresentation {
            free_rank: 0,
            torsion: vec![BigInt::from(2), BigInt::from(4)],
        };
        assert_eq!(p.render(), "Z/2 x Z/4");
        assert_eq!(p.order(), Some(BigInt::from(8)));
        let p = AbelianPresentation {
            free_rank: 2,
            torsion: vec![BigInt::from(3)],
        };
        assert_eq!(p.render(), "Z^2 x Z/3");
        assert_eq!(p.order(), None);
    }

    #[test]
    fn fallback_handles_word_overflow() {
        // Entries near i64::MAX force the BigInt path immediately.
        let big = BigInt::from(i64::MAX);
        let a = IntMatrix::from_rows(vec![
            vec![big.clone(), big.clone() - 1],
            vec![big.clone() + 1, big.clone()],
        ]);
        let r = snf(&a);
        assert_eq!(r.u.mul_big(&a).mul_big(&r.v), r.s);
    }
}
