//! Exact linear algebra over the integers and over prime fields.
//!
//! Everything here is exact: integer matrices use arbitrary-precision
//! entries, prime-field matrices store reduced residues. No floating point
//! anywhere. The two workhorses are column-style Hermite normal form (used
//! to extract canonical bases of integer lattices) and row reduction /
//! nullspaces over F_p (used for everything mod p).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    /// The target vector has no integral solution over the given lattice
    /// basis. In the module-building pipeline this is fatal: it means a
    /// vector that must lie in the lattice does not.
    #[error("target vector is not in the integer column lattice")]
    NotInLattice,
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// Integer matrices
// ---------------------------------------------------------------------------

/// Dense matrix with arbitrary-precision integer entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*v));
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, col: &[BigInt]) {
        assert_eq!(col.len(), self.rows);
        for (i, v) in col.iter().enumerate() {
            self.set(i, j, v.clone());
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .sum::<BigInt>()
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rank over Q, by fraction-free (Bareiss-style) elimination.
    pub fn rank(&self) -> usize {
        let mut ech = IntRowEchelon::new(self.cols);
        for i in 0..self.rows {
            let row: Vec<BigInt> = (0..self.cols).map(|j| self.get(i, j).clone()).collect();
            ech.try_add_row(row);
        }
        ech.rank()
    }

    fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_column(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// col_dst -= q * col_src
    fn sub_scaled_column(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, dst) - q * self.get(i, src);
            self.set(i, dst, v);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of a column-style Hermite reduction: `matrix * transform = h`,
/// with `transform` unimodular. Columns of `h` beyond `rank` are zero; the
/// pivot of column `k` sits at row `pivot_rows[k]` (strictly increasing), is
/// positive, and earlier columns are reduced modulo it in the pivot row.
pub struct ColumnHnf {
    pub h: IntMatrix,
    pub transform: IntMatrix,
    pub pivot_rows: Vec<usize>,
    pub rank: usize,
}

/// Column Hermite normal form with transformation record.
///
/// The column span over Z is preserved exactly: every original column is an
/// integer combination of the HNF columns and vice versa.
pub fn hnf_columns(m: &IntMatrix) -> ColumnHnf {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.cols());
    let n = m.cols();
    let mut r = 0usize;
    let mut pivot_rows = Vec::new();

    for i in 0..m.rows() {
        if r == n {
            break;
        }
        // Euclid over the entries of row i in columns r..n until one survives.
        loop {
            let mut jmin: Option<usize> = None;
            for j in r..n {
                if !h.get(i, j).is_zero() {
                    jmin = match jmin {
                        None => Some(j),
                        Some(k) if h.get(i, j).abs() < h.get(i, k).abs() => Some(j),
                        keep => keep,
                    };
                }
            }
            let Some(jm) = jmin else { break };
            h.swap_columns(r, jm);
            u.swap_columns(r, jm);
            let mut done = true;
            for j in r + 1..n {
                if !h.get(i, j).is_zero() {
                    let q = h.get(i, j) / h.get(i, r);
                    h.sub_scaled_column(j, r, &q);
                    u.sub_scaled_column(j, r, &q);
                    if !h.get(i, j).is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h.get(i, r).is_zero() {
            continue;
        }
        if h.get(i, r).is_negative() {
            h.negate_column(r);
            u.negate_column(r);
        }
        // Canonicalize: entries left of the pivot in its row lie in [0, pivot).
        for j in 0..r {
            let q = h.get(i, j).div_floor(h.get(i, r));
            h.sub_scaled_column(j, r, &q);
            u.sub_scaled_column(j, r, &q);
        }
        pivot_rows.push(i);
        r += 1;
    }

    ColumnHnf {
        h,
        transform: u,
        rank: r,
        pivot_rows,
    }
}

/// Solve `basis * x = target` over the integers. The basis columns must be
/// Z-linearly independent; a missing or non-integral solution is reported as
/// `NotInLattice`.
pub fn solve_integral(basis: &IntMatrix, target: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
    assert_eq!(basis.rows(), target.len());
    let hnf = hnf_columns(basis);
    let z = solve_hnf(&hnf.h, &hnf.pivot_rows, hnf.rank, target)?;
    let mut z_ext = vec![BigInt::zero(); basis.cols()];
    z_ext[..hnf.rank].clone_from_slice(&z);
    Ok(hnf.transform.mul_vec(&z_ext))
}

/// Solve `h * z = target` where `h` is in column Hermite form with the given
/// pivot rows. Verifies the full system, not just the pivot rows.
pub fn solve_hnf(
    h: &IntMatrix,
    pivot_rows: &[usize],
    rank: usize,
    target: &[BigInt],
) -> Result<Vec<BigInt>, LinalgError> {
    let mut z = vec![BigInt::zero(); rank];
    for k in 0..rank {
        let row = pivot_rows[k];
        let mut v = target[row].clone();
        for (j, zj) in z.iter().enumerate().take(k) {
            v -= h.get(row, j) * zj;
        }
        let (q, rem) = v.div_rem(h.get(row, k));
        if !rem.is_zero() {
            return Err(LinalgError::NotInLattice);
        }
        z[k] = q;
    }
    // Non-pivot rows must also match.
    for i in 0..h.rows() {
        let mut acc = BigInt::zero();
        for (j, zj) in z.iter().enumerate() {
            acc += h.get(i, j) * zj;
        }
        if acc != target[i] {
            return Err(LinalgError::NotInLattice);
        }
    }
    Ok(z)
}

/// Incremental fraction-free row echelon over Q, for rank bookkeeping of
/// integer rows. Rows are stored primitive (divided by their content).
pub struct IntRowEchelon {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntRowEchelon {
    pub fn new(cols: usize) -> Self {
        IntRowEchelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Returns true when the row enlarged the row space.
    pub fn try_add_row(&mut self, mut row: Vec<BigInt>) -> bool {
        assert_eq!(row.len(), self.cols);
        for (er, &pc) in self.rows.iter().zip(&self.pivots) {
            if row[pc].is_zero() {
                continue;
            }
            let a = er[pc].clone();
            let b = row[pc].clone();
            for j in 0..self.cols {
                row[j] = &row[j] * &a - &er[j] * &b;
            }
        }
        let Some(pivot) = row.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        let mut g = BigInt::zero();
        for v in &row {
            g = g.gcd(v);
        }
        if !g.is_one() {
            for v in row.iter_mut() {
                *v = &*v / &g;
            }
        }
        if row[pivot].is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&pc| pc > pivot)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, row);
        self.pivots.insert(at, pivot);
        true
    }
}

// ---------------------------------------------------------------------------
// Prime-field matrices
// ---------------------------------------------------------------------------

/// Dense matrix over F_p with entries reduced into [0, p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zero(p: u32, rows: usize, cols: usize) -> Self {
        debug_assert!(is_prime(p), "modulus {p} is not prime");
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = FpMatrix::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u32, rows: &[Vec<u32>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = FpMatrix::zero(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        m
    }

    /// Reduce an integer matrix mod p.
    pub fn from_int(m: &IntMatrix, p: u32) -> Self {
        let mut out = FpMatrix::zero(p, m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, reduce_mod(m.get(i, j), p));
            }
        }
        out
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(v < self.p);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zero(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p = self.p as u64;
        let mut out = FpMatrix::zero(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc = (acc + self.get(i, k) as u64 * other.get(k, j) as u64) % p;
                }
                out.set(i, j, acc as u32);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc = (acc + self.get(i, j) as u64 * v[j] as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.p, other.p);
        let mut out = FpMatrix::zero(self.p, self.rows + other.rows, self.cols);
        out.data[..self.data.len()].copy_from_slice(&self.data);
        out.data[self.data.len()..].copy_from_slice(&other.data);
        out
    }

    pub fn rank(&self) -> usize {
        rref_fp(self).2
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix(p={}) {}x{} [", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

fn reduce_mod(v: &BigInt, p: u32) -> u32 {
    use num_traits::ToPrimitive;
    let m = v.mod_floor(&BigInt::from(p));
    m.to_u32().expect("residue fits u32")
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) mod p
    debug_assert!(a % p != 0);
    let mut base = a as u64 % p as u64;
    let mut exp = p as u64 - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Reduced row echelon form over F_p. Returns (rref, pivot columns, rank).
pub fn rref_fp(m: &FpMatrix) -> (FpMatrix, Vec<usize>, usize) {
    let mut a = m.clone();
    let p = a.p as u64;
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(pr) = (r..a.rows).find(|&i| a.get(i, c) != 0) else {
            continue;
        };
        for j in 0..a.cols {
            let tmp = a.get(r, j);
            a.set(r, j, a.get(pr, j));
            a.set(pr, j, tmp);
        }
        let inv = inv_mod(a.get(r, c), a.p) as u64;
        for j in 0..a.cols {
            let v = (a.get(r, j) as u64 * inv % p) as u32;
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i != r && a.get(i, c) != 0 {
                let f = a.get(i, c) as u64;
                for j in 0..a.cols {
                    let v = (a.get(i, j) as u64 + (p - f) * a.get(r, j) as u64) % p;
                    a.set(i, j, v as u32);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots, r)
}

/// Basis of the right kernel of `m`, as rows of the returned matrix.
pub fn nullspace_fp(m: &FpMatrix) -> FpMatrix {
    let (rref, pivots, rank) = rref_fp(m);
    let p = m.p;
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = FpMatrix::zero(p, free.len(), m.cols);
    for (k, &f) in free.iter().enumerate() {
        out.set(k, f, 1);
        for (row, &pc) in pivots.iter().enumerate().take(rank) {
            let v = rref.get(row, f);
            if v != 0 {
                out.set(k, pc, p - v);
            }
        }
    }
    out
}

/// Row space membership: reduce `row` against the rows of an rref matrix.
/// Returns the residual after elimination (zero iff `row` lies in the span).
pub fn reduce_against_rref(rref: &FpMatrix, pivots: &[usize], row: &[u32]) -> Vec<u32> {
    let p = rref.p as u64;
    let mut v: Vec<u32> = row.to_vec();
    for (k, &pc) in pivots.iter().enumerate() {
        if v[pc] != 0 {
            let f = v[pc] as u64;
            for j in 0..rref.cols() {
                v[j] = ((v[j] as u64 + (p - f) * rref.get(k, j) as u64) % p) as u32;
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_identity_mod_2() {
        let m = FpMatrix::identity(2, 2);
        let (r, pivots, rank) = rref_fp(&m);
        assert_eq!(r, m);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_zero_matrix() {
        let m = FpMatrix::zero(2, 3, 3);
        let (r, pivots, rank) = rref_fp(&m);
        assert!(r.is_zero());
        assert!(pivots.is_empty());
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_rank_one_mod_2() {
        let m = FpMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]);
        let (r, _, rank) = rref_fp(&m);
        assert_eq!(rank, 1);
        assert_eq!(r, FpMatrix::from_rows(2, &[vec![1, 1], vec![0, 0]]));
    }

    #[test]
    fn nullspace_identity_is_empty() {
        let m = FpMatrix::identity(5, 4);
        assert_eq!(nullspace_fp(&m).rows(), 0);
    }

    #[test]
    fn nullspace_zero_row() {
        let m = FpMatrix::zero(2, 1, 3);
        assert_eq!(nullspace_fp(&m).rows(), 3);
    }

    #[test]
    fn nullspace_sum_mod_2() {
        let m = FpMatrix::from_rows(2, &[vec![1, 1]]);
        let ns = nullspace_fp(&m);
        assert_eq!(ns.rows(), 1);
        assert_eq!(ns.row(0), &[1, 1]);
    }

    #[test]
    fn hnf_identity() {
        let m = IntMatrix::identity(3);
        let hnf = hnf_columns(&m);
        assert_eq!(hnf.h, m);
        assert_eq!(hnf.rank, 3);
    }

    #[test]
    fn hnf_single_column_already_reduced() {
        let m = IntMatrix::from_rows(&[vec![2], vec![4]]);
        let hnf = hnf_columns(&m);
        assert_eq!(hnf.h, m);
        assert_eq!(hnf.pivot_rows, vec![0]);
    }

    #[test]
    fn hnf_two_by_two() {
        // columns (2,0) and (1,1): the lattice of points with even x−y,
        // canonical column HNF [[1,0],[1,2]] (index 2 in Z²)
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![0, 1]]);
        let hnf = hnf_columns(&m);
        assert_eq!(hnf.rank, 2);
        assert_eq!(hnf.h, IntMatrix::from_rows(&[vec![1, 0], vec![1, 2]]));
        assert_eq!(hnf.pivot_rows, vec![0, 1]);
        assert_eq!(m.mul(&hnf.transform), hnf.h);
    }

    #[test]
    fn hnf_unimodular_columns_span_z2() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        let hnf = hnf_columns(&m);
        assert_eq!(hnf.rank, 2);
        assert_eq!(hnf.h, IntMatrix::identity(2));
    }

    #[test]
    fn solve_integral_identity() {
        let basis = IntMatrix::identity(2);
        let t = vec![BigInt::from(3), BigInt::from(5)];
        assert_eq!(solve_integral(&basis, &t).unwrap(), t);
    }

    #[test]
    fn solve_integral_scaled() {
        let basis = IntMatrix::from_rows(&[vec![2]]);
        let t = vec![BigInt::from(4)];
        assert_eq!(solve_integral(&basis, &t).unwrap(), vec![BigInt::from(2)]);
    }

    #[test]
    fn solve_integral_parity_obstruction() {
        let basis = IntMatrix::from_rows(&[vec![2]]);
        let t = vec![BigInt::from(3)];
        assert_eq!(
            solve_integral(&basis, &t),
            Err(LinalgError::NotInLattice)
        );
    }

    #[test]
    fn solve_integral_inconsistent() {
        let basis = IntMatrix::from_rows(&[vec![1], vec![1]]);
        let t = vec![BigInt::from(1), BigInt::from(2)];
        assert_eq!(
            solve_integral(&basis, &t),
            Err(LinalgError::NotInLattice)
        );
    }

    // Naive fraction-free elimination oracle for ranks of small matrices.
    fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let nrows = a.len();
        let ncols = a.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..ncols {
            let Some(pr) = (rank..nrows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(rank, pr);
            for i in 0..nrows {
                if i != rank && !a[i][c].is_zero() {
                    let (f1, f2) = (a[rank][c].clone(), a[i][c].clone());
                    for j in 0..ncols {
                        a[i][j] = &a[i][j] * &f1 - &a[rank][j] * &f2;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
        })
    }

    proptest! {
        #[test]
        fn fp_rank_plus_nullity_is_cols(rows in small_matrix(), pidx in 0usize..3) {
            let p = [2u32, 3, 5][pidx];
            let urows: Vec<Vec<u32>> = rows.iter()
                .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u32).collect())
                .collect();
            let m = FpMatrix::from_rows(p, &urows);
            let (_, _, rank) = rref_fp(&m);
            let ns = nullspace_fp(&m);
            prop_assert_eq!(rank + ns.rows(), m.cols());
            // every kernel row is annihilated
            for i in 0..ns.rows() {
                let img = m.mul_vec(ns.row(i));
                prop_assert!(img.iter().all(|&v| v == 0));
            }
        }

        #[test]
        fn rref_preserves_row_space(rows in small_matrix()) {
            let p = 3u32;
            let urows: Vec<Vec<u32>> = rows.iter()
                .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u32).collect())
                .collect();
            let m = FpMatrix::from_rows(p, &urows);
            let (rr, pivots, _) = rref_fp(&m);
            for i in 0..m.rows() {
                let resid = reduce_against_rref(&rr, &pivots, m.row(i));
                prop_assert!(resid.iter().all(|&v| v == 0));
            }
        }

        #[test]
        fn hnf_preserves_column_lattice(rows in small_matrix()) {
            let m = IntMatrix::from_rows(&rows);
            let hnf = hnf_columns(&m);
            prop_assert_eq!(hnf.rank, bareiss_rank(&rows));
            // h columns lie in the lattice of m and conversely, via the
            // unimodular transform: m * u = h exactly.
            prop_assert_eq!(m.mul(&hnf.transform), hnf.h.clone());
            // round trip: each original column solves over the HNF basis
            if hnf.rank > 0 {
                let mut basis = IntMatrix::zero(m.rows(), hnf.rank);
                for k in 0..hnf.rank {
                    basis.set_column(k, &hnf.h.column(k));
                }
                for j in 0..m.cols() {
                    let col = m.column(j);
                    prop_assert!(solve_integral(&basis, &col).is_ok());
                }
            }
        }

        #[test]
        fn echelon_rank_matches_bareiss(rows in small_matrix()) {
            let mut ech = IntRowEchelon::new(rows[0].len());
            for r in &rows {
                ech.try_add_row(r.iter().map(|&v| BigInt::from(v)).collect());
            }
            prop_assert_eq!(ech.rank(), bareiss_rank(&rows));
        }
    }
}
