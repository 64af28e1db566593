//! Exact arbitrary-precision integer and rational linear algebra.
//!
//! Everything downstream runs on the primitives in this module: dense
//! matrices over `BigInt`/`BigRational`, the column-style Hermite normal
//! form, Smith normal form, integer kernels and lattice preimages, and the
//! classification of finitely generated abelian groups by invariant
//! factors. All operations are pure and exact; intermediate entries can
//! exceed 64 bits even for small inputs, hence the arbitrary precision.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for building a `BigInt` from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for building a reduced `BigRational`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Dense rectangular matrix, row-major. Used with `Int` and `Rat` entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rat>;

impl<T: Clone + Zero> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds the matrix whose j-th column is `cols[j]`; `ambient` fixes the
    /// row count so an empty generator list still knows its ambient rank.
    pub fn from_columns(ambient: usize, cols: &[Vec<T>]) -> Self {
        for c in cols {
            assert_eq!(c.len(), ambient, "column of wrong length");
        }
        Matrix::from_fn(ambient, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<T> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn is_zero_col(&self, c: usize) -> bool {
        (0..self.rows).all(|r| self.at(r, c).is_zero())
    }
}

impl Matrix<Int> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { Int::one() } else { Int::zero() })
    }

    /// col_j -= q * col_p
    fn col_sub(&mut self, j: usize, p: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.at(r, j) - q * self.at(r, p);
            self.set(r, j, v);
        }
    }

    /// row_i -= q * row_p
    fn row_sub(&mut self, i: usize, p: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(i, c) - q * self.at(p, c);
            self.set(i, c, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -self.at(r, j).clone();
            self.set(r, j, v);
        }
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c) * &v[c]).sum())
            .collect()
    }
}

impl Matrix<Rat> {
    pub fn mul_int_vec(&self, v: &[Int]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.at(r, c) * Rat::from_integer(v[c].clone()))
                    .sum()
            })
            .collect()
    }

    /// Least common multiple of all entry denominators.
    pub fn common_denominator(&self) -> Int {
        let mut d = Int::one();
        for e in &self.entries {
            d = d.lcm(e.denom());
        }
        d
    }

    /// The integer matrix `scale * self`; panics if any entry fails to clear.
    pub fn scaled_to_int(&self, scale: &Int) -> IntMatrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            let v = self.at(r, c) * Rat::from_integer(scale.clone());
            assert!(v.is_integer(), "scale does not clear denominators");
            v.to_integer()
        })
    }
}

impl fmt::Debug for Matrix<Int> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Column-style Hermite normal form.
///
/// The result spans the same column lattice as the input. Normalization:
/// pivot rows strictly increase left to right, pivots are positive, entries
/// to the right of a pivot are zero and entries left of a pivot (in its
/// row) are reduced into `[0, pivot)`. Zero columns collect at the right.
/// Lattice equality is therefore testable by matrix equality.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let mut h = m.clone();
    hnf_in_place(&mut h, None);
    h
}

/// As [`hnf`], also returning a unimodular `U` with `m * U = H`.
pub fn hnf_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.cols);
    hnf_in_place(&mut h, Some(&mut u));
    (h, u)
}

fn hnf_in_place(h: &mut IntMatrix, mut u: Option<&mut IntMatrix>) {
    let (rows, cols) = (h.rows, h.cols);
    let mut pivot = 0usize;
    for r in 0..rows {
        if pivot == cols {
            break;
        }
        // Euclid over the columns >= pivot until row r has a single nonzero
        // entry sitting at `pivot`.
        loop {
            let mut best: Option<usize> = None;
            for j in pivot..cols {
                if !h.at(r, j).is_zero() {
                    best = match best {
                        Some(b) if h.at(r, b).abs() <= h.at(r, j).abs() => Some(b),
                        _ => Some(j),
                    };
                }
            }
            let Some(b) = best else { break };
            if b != pivot {
                h.swap_cols(b, pivot);
                if let Some(u) = u.as_deref_mut() {
                    u.swap_cols(b, pivot);
                }
            }
            let p = h.at(r, pivot).clone();
            let mut cleared = true;
            for j in pivot + 1..cols {
                if !h.at(r, j).is_zero() {
                    let q = h.at(r, j) / &p;
                    h.col_sub(j, pivot, &q);
                    if let Some(u) = u.as_deref_mut() {
                        u.col_sub(j, pivot, &q);
                    }
                    if !h.at(r, j).is_zero() {
                        cleared = false;
                    }
                }
            }
            if cleared {
                break;
            }
        }
        if h.at(r, pivot).is_zero() {
            continue; // no pivot in this row
        }
        if h.at(r, pivot).is_negative() {
            h.negate_col(pivot);
            if let Some(u) = u.as_deref_mut() {
                u.negate_col(pivot);
            }
        }
        // Reduce the entries left of the pivot into [0, pivot).
        let p = h.at(r, pivot).clone();
        for j in 0..pivot {
            let q = h.at(r, j).div_floor(&p);
            h.col_sub(j, pivot, &q);
            if let Some(u) = u.as_deref_mut() {
                u.col_sub(j, pivot, &q);
            }
        }
        pivot += 1;
    }
}

/// Basis of the integer kernel `{ v : m v = 0 }`, returned as the columns of
/// a `m.cols() x nullity` matrix.
pub fn kernel(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf_with_transform(m);
    let rank = (0..h.cols).filter(|&c| !h.is_zero_col(c)).count();
    Matrix::from_fn(m.cols, m.cols - rank, |r, c| u.at(r, rank + c).clone())
}

/// Diagonal of the Smith normal form: non-negative `d_1 | d_2 | ...` of
/// length `min(rows, cols)`, zeros trailing for rank deficiency. The product
/// of the first `j` entries equals the gcd of all `j x j` minors.
pub fn snf(m: &IntMatrix) -> Vec<Int> {
    let mut a = m.clone();
    let dim = a.rows.min(a.cols);
    let mut p = 0usize;
    while p < dim {
        // Move a minimal-magnitude nonzero entry of the trailing submatrix
        // to the pivot seat.
        let mut best: Option<(usize, usize)> = None;
        for i in p..a.rows {
            for j in p..a.cols {
                if !a.at(i, j).is_zero() {
                    best = match best {
                        Some((bi, bj)) if a.at(bi, bj).abs() <= a.at(i, j).abs() => Some((bi, bj)),
                        _ => Some((i, j)),
                    };
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap_rows(p, bi);
        a.swap_cols(p, bj);
        loop {
            let mut changed = false;
            for i in p + 1..a.rows {
                if !a.at(i, p).is_zero() {
                    let q = a.at(i, p) / a.at(p, p);
                    a.row_sub(i, p, &q);
                    if !a.at(i, p).is_zero() {
                        a.swap_rows(p, i);
                        changed = true;
                    }
                }
            }
            for j in p + 1..a.cols {
                if !a.at(p, j).is_zero() {
                    let q = a.at(p, j) / a.at(p, p);
                    a.col_sub(j, p, &q);
                    if !a.at(p, j).is_zero() {
                        a.swap_cols(p, j);
                        changed = true;
                    }
                }
            }
            if changed {
                continue;
            }
            // Pivot row and column are clear; force the pivot to divide the
            // rest of the submatrix before moving on.
            let mut divides = true;
            'scan: for i in p + 1..a.rows {
                for j in p + 1..a.cols {
                    if !(a.at(i, j) % a.at(p, p)).is_zero() {
                        let one = Int::one();
                        let neg = -&one;
                        a.row_sub(p, i, &neg); // row_p += row_i
                        divides = false;
                        break 'scan;
                    }
                }
            }
            if divides {
                break;
            }
        }
        p += 1;
    }
    let mut diag: Vec<Int> = (0..dim).map(|i| a.at(i, i).abs()).collect();
    // Chain is guaranteed by the divisibility pass; normalize defensively is
    // unnecessary, but assert in debug builds.
    debug_assert!(diag
        .windows(2)
        .all(|w| w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()) || w[0].is_one()));
    for d in diag.iter_mut() {
        if d.is_negative() {
            *d = -d.clone();
        }
    }
    diag
}

/// A sublattice of `Z^n`, stored as a canonical column-HNF basis with zero
/// columns dropped. Two lattices are equal iff their stored bases are.
#[derive(Clone, PartialEq, Eq)]
pub struct IntLattice {
    ambient: usize,
    basis: IntMatrix,
}

impl IntLattice {
    /// Lattice spanned by the columns of `gens` (need not be independent).
    pub fn from_generators(ambient: usize, gens: &IntMatrix) -> Self {
        assert_eq!(gens.rows(), ambient, "generator length mismatch");
        let h = hnf(gens);
        let rank = (0..h.cols()).filter(|&c| !h.is_zero_col(c)).count();
        let basis = Matrix::from_fn(ambient, rank, |r, c| h.at(r, c).clone());
        IntLattice { ambient, basis }
    }

    pub fn standard(n: usize) -> Self {
        IntLattice {
            ambient: n,
            basis: IntMatrix::identity(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        IntLattice {
            ambient: n,
            basis: IntMatrix::zero(n, 0),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical HNF basis, columns.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Int>> {
        (0..self.rank()).map(|c| self.basis.column(c)).collect()
    }

    /// The lattice `c * self` for `c > 0`.
    pub fn scaled(&self, c: &Int) -> Self {
        assert!(c.is_positive(), "scale must be positive");
        IntLattice {
            ambient: self.ambient,
            basis: Matrix::from_fn(self.basis.rows(), self.basis.cols(), |r, j| {
                self.basis.at(r, j) * c
            }),
        }
    }

    /// Integer coordinates of `v` in the HNF basis, if `v` lies in the
    /// lattice.
    pub fn coordinates(&self, v: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut rem: Vec<Int> = v.to_vec();
        let mut coords = vec![Int::zero(); self.rank()];
        // Pivot rows increase with the column index, so peel columns left to
        // right against the first not-yet-cleared row of each.
        for j in 0..self.rank() {
            let pr = (0..self.ambient).find(|&r| !self.basis.at(r, j).is_zero())?;
            let p = self.basis.at(pr, j);
            let (q, r) = rem[pr].div_rem(p);
            if !r.is_zero() {
                return None;
            }
            for i in 0..self.ambient {
                rem[i] = &rem[i] - &q * self.basis.at(i, j);
            }
            coords[j] = q;
        }
        if rem.iter().all(Int::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `[Z^n : L]` as the product of HNF pivots, when the lattice has full
    /// rank; `None` otherwise.
    pub fn index_in_ambient(&self) -> Option<Int> {
        if self.rank() != self.ambient {
            return None;
        }
        let mut idx = Int::one();
        for j in 0..self.rank() {
            let pr = (0..self.ambient).find(|&r| !self.basis.at(r, j).is_zero())?;
            idx *= self.basis.at(pr, j);
        }
        Some(idx)
    }
}

impl fmt::Debug for IntLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntLattice(ambient={}, rank={}) basis {:?}",
            self.ambient,
            self.rank(),
            self.basis
        )
    }
}

/// The lattice `{ v in Z^m : M v in lat }` for a rational `n x m` matrix.
///
/// Computed from the integer kernel of `[D*M | -D*B]` where `B` is the basis
/// of `lat` and `D` clears all denominators: a vector lands in the lattice
/// iff its unique rational coordinates w.r.t. `B` are integers.
pub fn integer_preimage(m: &RatMatrix, lat: &IntLattice) -> IntLattice {
    assert_eq!(m.rows(), lat.ambient_rank(), "ambient rank mismatch");
    let d = m.common_denominator();
    let mi = m.scaled_to_int(&d);
    let b = lat.basis();
    let stacked = Matrix::from_fn(m.rows(), m.cols() + b.cols(), |r, c| {
        if c < m.cols() {
            mi.at(r, c).clone()
        } else {
            -(b.at(r, c - m.cols()) * &d)
        }
    });
    let ker = kernel(&stacked);
    let proj = Matrix::from_fn(m.cols(), ker.cols(), |r, c| ker.at(r, c).clone());
    IntLattice::from_generators(m.cols(), &proj)
}

/// Isomorphism type of a finitely generated abelian group: free rank plus
/// the invariant-factor chain `d_1 | d_2 | ...` with every factor >= 2.
#[derive(Clone, PartialEq, Eq)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<Int>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        FgAbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Cyclic group of order `n >= 1` (`n = 1` gives the trivial group).
    pub fn cyclic(n: &Int) -> Self {
        assert!(n.is_positive(), "cyclic order must be positive");
        if n.is_one() {
            FgAbelianGroup::trivial()
        } else {
            FgAbelianGroup {
                free_rank: 0,
                torsion: vec![n.clone()],
            }
        }
    }

    /// Canonicalizes an arbitrary list of cyclic orders (0 meaning a free
    /// summand) into invariant factors, adding `free_rank` free summands.
    pub fn from_factors(free_rank: usize, factors: &[Int]) -> Self {
        let nonzero: Vec<Int> = factors.iter().filter(|f| !f.is_zero()).cloned().collect();
        let extra_free = factors.len() - nonzero.len();
        for f in &nonzero {
            assert!(f.is_positive(), "cyclic order must be non-negative");
        }
        let diag = Matrix::from_fn(nonzero.len(), nonzero.len(), |r, c| {
            if r == c {
                nonzero[r].clone()
            } else {
                Int::zero()
            }
        });
        let chain = snf(&diag);
        FgAbelianGroup {
            free_rank: free_rank + extra_free,
            torsion: chain.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    /// Builds directly from an SNF diagonal: entries of 1 are dropped,
    /// entries of 0 become free summands.
    pub fn from_snf_diagonal(diag: &[Int], extra_free: usize) -> Self {
        let free = extra_free + diag.iter().filter(|d| d.is_zero()).count();
        let torsion = diag
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect();
        FgAbelianGroup {
            free_rank: free,
            torsion,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut factors = self.torsion.clone();
        factors.extend_from_slice(&other.torsion);
        FgAbelianGroup::from_factors(self.free_rank + other.free_rank, &factors)
    }

    /// Order of the group if finite.
    pub fn order(&self) -> Option<Int> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    /// Prime-power decomposition of the torsion, sorted ascending: the
    /// `⊕ Z/p^e` presentation of the same group.
    pub fn primary_decomposition(&self) -> Vec<Int> {
        let mut out: Vec<Int> = Vec::new();
        for d in &self.torsion {
            let mut n = d.clone();
            let mut p = int(2);
            while &p * &p <= n {
                if (&n % &p).is_zero() {
                    let mut q = Int::one();
                    while (&n % &p).is_zero() {
                        n /= &p;
                        q *= &p;
                    }
                    out.push(q);
                }
                p += 1;
            }
            if !n.is_one() {
                out.push(n);
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.free_rank == 1 {
            write!(f, "Z")?;
            first = false;
        } else if self.free_rank > 1 {
            write!(f, "Z^{}", self.free_rank)?;
            first = false;
        }
        for d in &self.torsion {
            if !first {
                write!(f, " ⊕ ")?;
            }
            write!(f, "Z/{}", d)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Isomorphism type of the subgroup of `Z^r ⊕ Z/n_1 ⊕ ... ⊕ Z/n_t`
/// generated by the given elements. Each generator lists its `r` free
/// coordinates first and then one coordinate per torsion factor.
///
/// The subgroup is `Z^s / ker(phi)` for `phi : Z^s -> ambient` sending basis
/// vectors to the generators; the kernel is an integer preimage and the
/// quotient structure is read off the SNF of its basis.
pub fn subgroup_structure(
    free_rank: usize,
    torsion_orders: &[Int],
    generators: &[Vec<Int>],
) -> FgAbelianGroup {
    let n = free_rank + torsion_orders.len();
    for g in generators {
        assert_eq!(g.len(), n, "generator coordinate count mismatch");
    }
    for o in torsion_orders {
        assert!(o.is_positive(), "torsion orders must be positive");
    }
    if generators.is_empty() {
        return FgAbelianGroup::trivial();
    }
    let g = Matrix::from_fn(n, generators.len(), |r, c| {
        Rat::from_integer(generators[c][r].clone())
    });
    // Relation lattice: 0 on the free part, n_i Z on each torsion factor.
    let rel_cols: Vec<Vec<Int>> = torsion_orders
        .iter()
        .enumerate()
        .map(|(i, o)| {
            let mut col = vec![Int::zero(); n];
            col[free_rank + i] = o.clone();
            col
        })
        .collect();
    let rel = IntLattice::from_generators(n, &Matrix::from_columns(n, &rel_cols));
    let ker = integer_preimage(&g, &rel);
    let diag = snf(ker.basis());
    FgAbelianGroup::from_snf_diagonal(&diag, generators.len() - ker.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn hnf_identity_and_zero() {
        let id = IntMatrix::identity(2);
        assert_eq!(hnf(&id), id);
        let z = IntMatrix::zero(3, 2);
        assert_eq!(hnf(&z), z);
    }

    #[test]
    fn hnf_worked_example() {
        // By-hand column reduction: c2 -> c2 - 2*c1.
        let m = im(&[&[2, 4], &[0, 4]]);
        assert_eq!(hnf(&m), im(&[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn hnf_transform_is_consistent() {
        let m = im(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
        let (h, u) = hnf_with_transform(&m);
        // m * u = h, column by column.
        for c in 0..3 {
            assert_eq!(m.mul_vec(&u.column(c)), h.column(c));
        }
    }

    #[test]
    fn snf_examples() {
        assert_eq!(snf(&im(&[&[2, 0], &[0, 3]])), vec![int(1), int(6)]);
        assert_eq!(snf(&IntMatrix::identity(4)), vec![Int::one(); 4]);
        assert_eq!(snf(&im(&[&[2, 4], &[0, 4]])), vec![int(2), int(4)]);
        assert_eq!(snf(&IntMatrix::zero(2, 3)), vec![Int::zero(); 2]);
    }

    #[test]
    fn kernel_of_projection() {
        // (x, y) -> x + 2y has kernel generated by (2, -1) (up to sign).
        let m = im(&[&[1, 2]]);
        let k = kernel(&m);
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert!(m.mul_vec(&v).iter().all(Int::is_zero));
        assert!(!v.iter().all(Int::is_zero));
    }

    #[test]
    fn preimage_examples() {
        // M = [2], Lambda = 4Z: preimage 2Z.
        let m = Matrix::from_rows(vec![vec![rat(2, 1)]]);
        let lam = IntLattice::from_generators(1, &im(&[&[4]]));
        let pre = integer_preimage(&m, &lam);
        assert_eq!(pre.basis(), &im(&[&[2]]));

        // M = identity, Lambda = Z^2: everything.
        let m = Matrix::from_fn(2, 2, |r, c| if r == c { rat(1, 1) } else { rat(0, 1) });
        let pre = integer_preimage(&m, &IntLattice::standard(2));
        assert_eq!(pre.basis(), &IntMatrix::identity(2));

        // M = [1/2], Lambda = Z: v/2 integral iff v even.
        let m = Matrix::from_rows(vec![vec![rat(1, 2)]]);
        let pre = integer_preimage(&m, &IntLattice::standard(1));
        assert_eq!(pre.basis(), &im(&[&[2]]));
    }

    #[test]
    fn preimage_respects_membership() {
        let m = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(0, 1), rat(1, 6)],
        ]);
        let lam = IntLattice::from_generators(2, &im(&[&[2, 0], &[0, 3]]));
        let pre = integer_preimage(&m, &lam);
        assert_eq!(pre.rank(), 2);
        for v in pre.basis_vectors() {
            let mv = m.mul_int_vec(&v);
            assert!(mv.iter().all(Rat::is_integer));
            let mvi: Vec<Int> = mv.into_iter().map(|x| x.to_integer()).collect();
            assert!(lam.contains(&mvi));
        }
    }

    #[test]
    fn lattice_membership_and_index() {
        let lat = IntLattice::from_generators(2, &im(&[&[2, 0], &[0, 3]]));
        assert!(lat.contains(&[int(4), int(3)]));
        assert!(!lat.contains(&[int(1), int(0)]));
        assert_eq!(lat.index_in_ambient(), Some(int(6)));
        let thin = IntLattice::from_generators(2, &im(&[&[1], &[1]]));
        assert_eq!(thin.index_in_ambient(), None);
        assert!(thin.contains(&[int(5), int(5)]));
        assert!(!thin.contains(&[int(5), int(4)]));
    }

    #[test]
    fn subgroup_examples() {
        // <2> in Z/8 is Z/4.
        let g = subgroup_structure(0, &[int(8)], &[vec![int(2)]]);
        assert_eq!(g, FgAbelianGroup::cyclic(&int(4)));

        // Generators of the whole Z + Z/4.
        let g = subgroup_structure(
            1,
            &[int(4)],
            &[vec![int(1), int(0)], vec![int(0), int(1)]],
        );
        assert_eq!(g, FgAbelianGroup::from_factors(1, &[int(4)]));

        // <(1,2),(0,2)> in (Z/4)^2 has 8 elements: Z/4 + Z/2.
        let g = subgroup_structure(
            0,
            &[int(4), int(4)],
            &[vec![int(1), int(2)], vec![int(0), int(2)]],
        );
        assert_eq!(g, FgAbelianGroup::from_factors(0, &[int(2), int(4)]));
    }

    #[test]
    fn group_canonicalization() {
        // Z/4 ⊕ Z/6 = Z/2 ⊕ Z/12 in invariant factors.
        let g = FgAbelianGroup::from_factors(0, &[int(4), int(6)]);
        assert_eq!(g.torsion(), &[int(2), int(12)]);
        assert_eq!(g.primary_decomposition(), vec![int(2), int(3), int(4)]);
        let h = FgAbelianGroup::cyclic(&int(4)).direct_sum(&FgAbelianGroup::cyclic(&int(6)));
        assert_eq!(g, h);
        assert_eq!(g.order(), Some(int(24)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FgAbelianGroup::free(2).to_string(), "Z^2");
        let g = FgAbelianGroup::from_factors(1, &[int(2), int(4)]);
        assert_eq!(g.to_string(), "Z ⊕ Z/2 ⊕ Z/4");
    }
}
