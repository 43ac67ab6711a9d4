use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use super::finab::FinAbGroup;

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        IntMatrix { rows, cols, data: data.iter().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        let mut m = IntMatrix::zero(n, n);
        for (i, e) in entries.iter().enumerate() {
            *m.at_mut(i, i) = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "vector length must equal column count");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "column counts must agree");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "row counts must agree");
        let mut out = IntMatrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = self.at(i, j).clone();
            }
            for j in 0..other.cols {
                *out.at_mut(i, self.cols + j) = other.at(i, j).clone();
            }
        }
        out
    }

    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> IntMatrix {
        let mut out = IntMatrix::zero(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length must equal row count");
            for i in 0..rows {
                *out.at_mut(i, j) = col[i].clone();
            }
        }
        out
    }

    /// Kronecker product, blocks ordered by the entries of `self`.
    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zero(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        *out.at_mut(i * other.rows + k, j * other.cols + l) = a * other.at(k, l);
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let t = self.at(src, j) * c;
            *self.at_mut(dst, j) += t;
        }
    }

    /// col[dst] += c * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let t = self.at(i, src) * c;
            *self.at_mut(i, dst) += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.at(i, j).clone();
            *self.at_mut(i, j) = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.at(i, j).clone();
            *self.at_mut(i, j) = v;
        }
    }

    /// Parses the plain text format: first line `rows cols`, then one line of
    /// integers per row.
    pub fn parse_text(text: &str) -> Result<IntMatrix, String> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or("empty input")?;
        let mut parts = header.split_whitespace();
        let rows: usize = parts
            .next()
            .ok_or("missing row count")?
            .parse()
            .map_err(|e| format!("bad row count: {e}"))?;
        let cols: usize = parts
            .next()
            .ok_or("missing column count")?
            .parse()
            .map_err(|e| format!("bad column count: {e}"))?;
        if parts.next().is_some() {
            return Err("header must be exactly `rows cols`".into());
        }
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            let line = lines.next().ok_or_else(|| format!("missing row {}", i + 1))?;
            let entries: Result<Vec<BigInt>, _> = line
                .split_whitespace()
                .map(|tok| BigInt::from_str(tok).map_err(|e| format!("row {}: {e}", i + 1)))
                .collect();
            let entries = entries?;
            if entries.len() != cols {
                return Err(format!("row {} has {} entries, expected {cols}", i + 1, entries.len()));
            }
            data.extend(entries);
        }
        if lines.next().is_some() {
            return Err("trailing data after last row".into());
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact Smith decomposition `u * a * v = s` with `u`, `v` unimodular and `s`
/// diagonal with non-negative entries forming a divisor chain.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s.at(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub(crate) struct SnfCore {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub uinv: Option<IntMatrix>,
    pub vinv: Option<IntMatrix>,
}

/// Quotient `q` rounded to nearest, so `|a - q*p| <= |p| / 2`.
fn div_nearest(a: &BigInt, p: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(p);
    if r.abs() * 2 > p.abs() {
        if r.sign() == p.sign() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Minimal-absolute-value pivot in the trailing submatrix starting at `t`;
/// ties broken by row-major scan order.
fn pivot_min_abs(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs = BigInt::zero();
    for i in t..s.rows() {
        for j in t..s.cols() {
            let v = s.at(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.is_none() || a < best_abs {
                best = Some((i, j));
                best_abs = a;
            }
        }
    }
    best
}

pub(crate) fn snf_core(a: &IntMatrix, want_uinv: bool, want_vinv: bool) -> SnfCore {
    let (r, c) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut uinv = if want_uinv { Some(IntMatrix::identity(r)) } else { None };
    let mut vinv = if want_vinv { Some(IntMatrix::identity(c)) } else { None };

    // Row op on s (left multiplication) updates u the same way and uinv by the
    // inverse column op; col op on s (right multiplication) updates v the same
    // way and vinv by the inverse row op.
    macro_rules! swap_rows {
        ($a:expr, $b:expr) => {{
            s.swap_rows($a, $b);
            u.swap_rows($a, $b);
            if let Some(m) = uinv.as_mut() {
                m.swap_cols($a, $b);
            }
        }};
    }
    macro_rules! swap_cols {
        ($a:expr, $b:expr) => {{
            s.swap_cols($a, $b);
            v.swap_cols($a, $b);
            if let Some(m) = vinv.as_mut() {
                m.swap_rows($a, $b);
            }
        }};
    }
    macro_rules! row_axpy {
        ($dst:expr, $src:expr, $c:expr) => {{
            let coef: BigInt = $c;
            s.row_axpy($dst, $src, &coef);
            u.row_axpy($dst, $src, &coef);
            if let Some(m) = uinv.as_mut() {
                m.col_axpy($src, $dst, &(-&coef));
            }
        }};
    }
    macro_rules! col_axpy {
        ($dst:expr, $src:expr, $c:expr) => {{
            let coef: BigInt = $c;
            s.col_axpy($dst, $src, &coef);
            v.col_axpy($dst, $src, &coef);
            if let Some(m) = vinv.as_mut() {
                m.row_axpy($src, $dst, &(-&coef));
            }
        }};
    }

    let bound = r.min(c);
    let mut t = 0;
    while t < bound {
        let Some((pi, pj)) = pivot_min_abs(&s, t) else { break };
        swap_rows!(t, pi);
        swap_cols!(t, pj);
        loop {
            // Clear column t below the pivot; a leftover remainder is strictly
            // smaller than the pivot and is promoted in its place.
            let mut changed = false;
            for i in t + 1..r {
                if s.at(i, t).is_zero() {
                    continue;
                }
                let q = div_nearest(s.at(i, t), s.at(t, t));
                if !q.is_zero() {
                    row_axpy!(i, t, -q);
                }
                if !s.at(i, t).is_zero() {
                    swap_rows!(t, i);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            for j in t + 1..c {
                if s.at(t, j).is_zero() {
                    continue;
                }
                let q = div_nearest(s.at(t, j), s.at(t, t));
                if !q.is_zero() {
                    col_axpy!(j, t, -q);
                }
                if !s.at(t, j).is_zero() {
                    swap_cols!(t, j);
                    changed = true;
                    break;
                }
            }
            if changed {
                continue;
            }
            break;
        }
        // Absorb any trailing entry not divisible by the pivot, then repeat;
        // the pivot shrinks to a gcd each time, so this terminates.
        let mut nondivisible = None;
        'scan: for i in t + 1..r {
            for j in t + 1..c {
                if !(s.at(i, j) % s.at(t, t)).is_zero() {
                    nondivisible = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = nondivisible {
            row_axpy!(t, i, BigInt::one());
            continue;
        }
        if s.at(t, t).sign() == num_bigint::Sign::Minus {
            s.negate_row(t);
            u.negate_row(t);
            if let Some(m) = uinv.as_mut() {
                m.negate_col(t);
            }
        }
        t += 1;
    }
    SnfCore { u, s, v, uinv, vinv }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let core = snf_core(a, false, false);
    SmithForm { u: core.u, s: core.s, v: core.v }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &IntMatrix) -> BigInt {
    assert!(a.is_square(), "determinant requires a square matrix");
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m.at(k, k).is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m.at(i, k).is_zero()) else {
                return BigInt::zero();
            };
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                let _ = r;
                m.set(i, j, q);
            }
            m.set(i, k, BigInt::zero());
        }
        prev = m.at(k, k).clone();
    }
    sign * m.at(n - 1, n - 1).clone()
}

/// Basis of the integer kernel `{x : a x = 0}`; columns of `v` at zero
/// diagonal positions of the Smith form, hence a saturated lattice basis.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let bound = a.rows().min(a.cols());
    let mut basis = Vec::new();
    for j in 0..a.cols() {
        let diag_zero = j >= bound || snf.s.at(j, j).is_zero();
        if diag_zero {
            basis.push(snf.v.column(j));
        }
    }
    basis
}

/// Structure of `Z^rows / column span of a`.
pub fn cokernel_structure(a: &IntMatrix) -> FinAbGroup {
    let snf = smith_normal_form(a);
    let bound = a.rows().min(a.cols());
    let mut factors = Vec::new();
    let mut rank = 0usize;
    for i in 0..bound {
        let d = snf.s.at(i, i);
        if d.is_zero() {
            break;
        }
        rank += 1;
        factors.push(d.to_biguint().expect("diagonal entries are non-negative"));
    }
    FinAbGroup::from_invariant_factors(factors, a.rows() - rank)
}

/// Solves `a x = b` over the integers; `None` when no integral solution exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length must equal row count");
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b);
    let bound = a.rows().min(a.cols());
    let mut y = vec![BigInt::zero(); a.cols()];
    for i in 0..a.rows() {
        let d = if i < bound { snf.s.at(i, i).clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !c[i].is_zero() {
                return None;
            }
        } else {
            let (q, r) = c[i].div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(snf.v.mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn check_snf(a: &IntMatrix) -> SmithForm {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.s, "u*a*v must equal s");
        assert_eq!(determinant(&snf.u).abs(), big(1), "u must be unimodular");
        assert_eq!(determinant(&snf.v).abs(), big(1), "v must be unimodular");
        let d = snf.diagonal();
        for i in 0..d.len() {
            assert!(d[i] >= big(0));
            if i + 1 < d.len() && !d[i].is_zero() && !d[i + 1].is_zero() {
                assert!((&d[i + 1] % &d[i]).is_zero(), "diagonal must form a divisor chain");
            }
            if d[i].is_zero() && i + 1 < d.len() {
                assert!(d[i + 1].is_zero(), "zeros must trail");
            }
        }
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    assert!(snf.s.at(i, j).is_zero(), "s must be diagonal");
                }
            }
        }
        snf
    }

    #[test]
    fn snf_golden_examples() {
        let a = IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]);
        let snf = check_snf(&a);
        assert_eq!(snf.diagonal(), vec![big(1), big(3)]);

        let id3 = IntMatrix::identity(3);
        let snf = check_snf(&id3);
        assert_eq!(snf.diagonal(), vec![big(1), big(1), big(1)]);

        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let snf = check_snf(&a);
        assert_eq!(snf.diagonal(), vec![big(2), big(4)]);
    }

    #[test]
    fn snf_rectangular_and_zero() {
        let a = IntMatrix::from_rows(&[vec![1], vec![1], vec![1]]);
        let snf = check_snf(&a);
        assert_eq!(snf.diagonal(), vec![big(1)]);

        let z = IntMatrix::zero(2, 2);
        let snf = check_snf(&z);
        assert_eq!(snf.diagonal(), vec![big(0), big(0)]);

        let a = IntMatrix::from_rows(&[vec![6, 10, 15]]);
        let snf = check_snf(&a);
        assert_eq!(snf.diagonal(), vec![big(1)]);
    }

    #[test]
    fn snf_inverse_tracking() {
        let a = IntMatrix::from_rows(&[vec![4, 7, 2], vec![0, 3, 5], vec![1, 1, 9]]);
        let core = snf_core(&a, true, true);
        let uinv = core.uinv.unwrap();
        let vinv = core.vinv.unwrap();
        assert_eq!(core.u.mul(&uinv), IntMatrix::identity(3));
        assert_eq!(uinv.mul(&core.u), IntMatrix::identity(3));
        assert_eq!(core.v.mul(&vinv), IntMatrix::identity(3));
        assert_eq!(vinv.mul(&core.v), IntMatrix::identity(3));
        assert_eq!(core.u.mul(&a).mul(&core.v), core.s);
    }

    #[test]
    fn cokernel_golden_examples() {
        let delta = IntMatrix::from_rows(&[vec![1], vec![1], vec![1]]);
        let g = cokernel_structure(&delta);
        assert!(g.invariant_factors().is_empty());
        assert_eq!(g.free_rank(), 2);

        let a = IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]);
        let g = cokernel_structure(&a);
        assert_eq!(g.invariant_factors(), &[3u32.into()]);
        assert_eq!(g.free_rank(), 0);

        let z = IntMatrix::zero(2, 2);
        let g = cokernel_structure(&z);
        assert!(g.invariant_factors().is_empty());
        assert_eq!(g.free_rank(), 2);
    }

    #[test]
    fn determinant_matches_snf_product() {
        let a = IntMatrix::from_rows(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]);
        assert_eq!(determinant(&a), big(4));
        let snf = smith_normal_form(&a);
        let prod: BigInt = snf.diagonal().iter().product();
        assert_eq!(prod, big(4));
        let singular = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(determinant(&singular), big(0));
    }

    #[test]
    fn integer_kernel_is_saturated() {
        let a = IntMatrix::from_rows(&[vec![1, 1, 1]]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = v.iter().sum();
            assert!(s.is_zero());
        }
        let a = IntMatrix::from_rows(&[vec![2, 4]]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 1);
        // (2, -1) generates the kernel; (4, -2) would not be saturated.
        let g = num_integer::gcd(k[0][0].clone(), k[0][1].clone());
        assert_eq!(g.abs(), big(1));
    }

    #[test]
    fn solve_integer_roundtrip() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let x = solve_integer(&a, &[big(4), big(9)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![big(4), big(9)]);
        assert!(solve_integer(&a, &[big(1), big(9)]).is_none());
    }

    #[test]
    fn text_roundtrip() {
        let a = IntMatrix::from_rows(&[vec![2, -1], vec![0, 7]]);
        let text = a.to_text();
        assert!(text.starts_with("2 2\n"));
        let b = IntMatrix::parse_text(&text).unwrap();
        assert_eq!(a, b);
        assert!(IntMatrix::parse_text("2 2\n1 2\n3").is_err());
        assert!(IntMatrix::parse_text("").is_err());
    }
}
