//! Dense matrices over an exact field, with deterministic Gauss–Jordan
//! elimination (first-nonzero pivoting) so that representative choices are
//! reproducible run to run.

use crate::scalar::Scalar;

/// A dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> std::fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of running reduced row-echelon elimination.
#[derive(Debug, Clone)]
pub struct Rref<S: Scalar> {
    pub matrix: Matrix<S>,
    pub pivot_columns: Vec<usize>,
}

impl<S: Scalar> Rref<S> {
    pub fn rank(&self) -> usize {
        self.pivot_columns.len()
    }
}

/// Outcome of expressing a target vector in a spanning set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpanSolution<S> {
    Coordinates(Vec<S>),
    NotInSpan,
}

impl<S: Scalar> Matrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for j in 0..n {
            m.set(j, j, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix construction"
        );
        Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Build a matrix whose columns are the given vectors (each of length
    /// `ambient_dim`; the vector list may be empty).
    pub fn from_columns(columns: &[Vec<S>], ambient_dim: usize) -> Self {
        assert!(
            columns.iter().all(|c| c.len() == ambient_dim),
            "column length does not match ambient dimension"
        );
        let mut m = Self::zero(ambient_dim, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, value) in col.iter().enumerate() {
                m.set(i, j, value.clone());
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

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: S) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for c in 0..self.cols {
                    if !v[c].is_zero() {
                        acc = acc.add(&self.get(r, c).mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row-echelon form with deterministic first-nonzero pivoting.
    pub fn rref(&self) -> Rref<S> {
        let mut m = self.clone();
        let mut pivot_columns = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // First nonzero entry at or below `row` picks the pivot.
            let Some(pivot_row) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(pivot_row, c).clone();
                    m.set(row, c, b);
                    m.set(pivot_row, c, a);
                }
            }
            let inv = m.get(row, col).inverse().expect("pivot is nonzero");
            for c in 0..m.cols {
                let scaled = m.get(row, c).mul(&inv);
                m.set(row, c, scaled);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in 0..m.cols {
                    let updated = m.get(r, c).sub(&factor.mul(m.get(row, c)));
                    m.set(r, c, updated);
                }
            }
            pivot_columns.push(col);
            row += 1;
        }
        Rref {
            matrix: m,
            pivot_columns,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of the kernel (null space), one coordinate vector per free
    /// column, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let rref = self.rref();
        let pivots = &rref.pivot_columns;
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = rref.matrix.get(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }
}

/// Express `target` in the span of `basis` (vectors of equal length).
///
/// Returns the coordinates when the system is consistent; the linear
/// combination then reproduces `target` exactly.
pub fn solve_in_span<S: Scalar>(basis: &[Vec<S>], target: &[S]) -> SpanSolution<S> {
    let dim = target.len();
    assert!(
        basis.iter().all(|v| v.len() == dim),
        "basis vector length does not match target length"
    );
    // Augmented system [basis | target], solved via RREF.
    let mut m = Matrix::zero(dim, basis.len() + 1);
    for (j, v) in basis.iter().enumerate() {
        for (i, value) in v.iter().enumerate() {
            m.set(i, j, value.clone());
        }
    }
    for (i, value) in target.iter().enumerate() {
        m.set(i, basis.len(), value.clone());
    }
    let rref = m.rref();
    if rref.pivot_columns.contains(&basis.len()) {
        return SpanSolution::NotInSpan;
    }
    let mut coords = vec![S::zero(); basis.len()];
    for (row, &pc) in rref.pivot_columns.iter().enumerate() {
        coords[pc] = rref.matrix.get(row, basis.len()).clone();
    }
    SpanSolution::Coordinates(coords)
}

/// Representatives of a basis of `ambient / span(sub)`, as coordinate
/// vectors of the ambient space.
///
/// The representatives are standard basis vectors whose columns are not
/// pivots of `[sub | identity]`, making the choice deterministic.
pub fn quotient_basis<S: Scalar>(sub: &[Vec<S>], ambient_dim: usize) -> Vec<Vec<S>> {
    assert!(
        sub.iter().all(|v| v.len() == ambient_dim),
        "subspace vector length does not match ambient dimension"
    );
    let mut m = Matrix::zero(ambient_dim, sub.len() + ambient_dim);
    for (j, v) in sub.iter().enumerate() {
        for (i, value) in v.iter().enumerate() {
            m.set(i, j, value.clone());
        }
    }
    for i in 0..ambient_dim {
        m.set(i, sub.len() + i, S::one());
    }
    let rref = m.rref();
    let mut reps = Vec::new();
    for &pc in &rref.pivot_columns {
        if pc >= sub.len() {
            let mut v = vec![S::zero(); ambient_dim];
            v[pc - sub.len()] = S::one();
            reps.push(v);
        }
    }
    reps
}

/// Slow reference computations used as oracles by the test suites.
pub mod oracle {
    use super::*;

    /// Determinant by cofactor (minor) expansion along the first row.
    pub fn determinant<S: Scalar>(m: &Matrix<S>) -> S {
        assert_eq!(m.rows(), m.cols(), "determinant of non-square matrix");
        let n = m.rows();
        if n == 0 {
            return S::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut det = S::zero();
        for c in 0..n {
            let cofactor = m.get(0, c);
            if cofactor.is_zero() {
                continue;
            }
            let mut minor = Matrix::zero(n - 1, n - 1);
            for r in 1..n {
                let mut mc = 0;
                for cc in 0..n {
                    if cc == c {
                        continue;
                    }
                    minor.set(r - 1, mc, m.get(r, cc).clone());
                    mc += 1;
                }
            }
            let term = cofactor.mul(&determinant(&minor));
            det = if c % 2 == 0 { det.add(&term) } else { det.sub(&term) };
        }
        det
    }

    /// Rank as the largest size of a square submatrix with nonzero
    /// determinant — independent of the elimination code path.
    pub fn rank_by_minors<S: Scalar>(m: &Matrix<S>) -> usize {
        let max = m.rows().min(m.cols());
        for size in (1..=max).rev() {
            if has_nonzero_minor(m, size) {
                return size;
            }
        }
        0
    }

    fn has_nonzero_minor<S: Scalar>(m: &Matrix<S>, size: usize) -> bool {
        let row_sets = subsets(m.rows(), size);
        let col_sets = subsets(m.cols(), size);
        for rows in &row_sets {
            for cols in &col_sets {
                let mut sub = Matrix::zero(size, size);
                for (i, &r) in rows.iter().enumerate() {
                    for (j, &c) in cols.iter().enumerate() {
                        sub.set(i, j, m.get(r, c).clone());
                    }
                }
                if !determinant(&sub).is_zero() {
                    return true;
                }
            }
        }
        false
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if current.len() == k {
                out.push(current.clone());
                return;
            }
            for i in start..n {
                current.push(i);
                go(i + 1, n, k, current, out);
                current.pop();
            }
        }
        go(0, n, k, &mut current, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn qm(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(q).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::<Rational>::identity(2);
        let rref = m.rref();
        assert_eq!(rref.matrix, Matrix::identity(2));
        assert_eq!(rref.pivot_columns, vec![0, 1]);
        assert_eq!(rref.rank(), 2);
    }

    #[test]
    fn rref_proportional_rows() {
        let m = qm(vec![vec![1, 2], vec![2, 4]]);
        let rref = m.rref();
        assert_eq!(rref.rank(), 1);
        assert_eq!(rref.matrix, qm(vec![vec![1, 2], vec![0, 0]]));
    }

    #[test]
    fn rref_idempotent() {
        let m = qm(vec![vec![2, 4, 1], vec![1, 3, 0], vec![3, 7, 1]]);
        let once = m.rref().matrix;
        let twice = once.rref().matrix;
        assert_eq!(once, twice);
    }

    #[test]
    fn solve_in_span_examples() {
        let e1 = vec![q(1), q(0)];
        let e2 = vec![q(0), q(1)];
        let target = vec![q(1), q(3)];
        assert_eq!(
            solve_in_span(&[e1.clone(), e2], &target),
            SpanSolution::Coordinates(vec![q(1), q(3)])
        );
        assert_eq!(
            solve_in_span(&[e1], &vec![q(0), q(1)]),
            SpanSolution::NotInSpan
        );
    }

    #[test]
    fn quotient_basis_counts() {
        assert_eq!(quotient_basis::<Rational>(&[], 2).len(), 2);
        let full: Vec<Vec<Rational>> = vec![
            vec![q(1), q(0), q(0)],
            vec![q(0), q(1), q(0)],
            vec![q(0), q(0), q(1)],
        ];
        assert!(quotient_basis(&full, 3).is_empty());
        let sub = vec![vec![q(1), q(1), q(0)]];
        let reps = quotient_basis(&sub, 3);
        assert_eq!(reps.len(), 2);
        // Representatives must be independent of the subspace: stack and
        // check the rank grows by the number of representatives.
        let mut all = sub.clone();
        all.extend(reps);
        let m = Matrix::from_columns(&all, 3);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn kernel_basis_annihilates() {
        let m = qm(vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 2);
        for v in kernel {
            assert!(m.apply(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_transpose_invariant() {
        let m = qm(vec![vec![1, 2, 0], vec![0, 1, 1]]);
        assert_eq!(m.rank(), m.transpose().rank());
    }
}
