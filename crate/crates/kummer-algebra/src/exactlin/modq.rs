//! Dense elimination over Z/p^e with transform tracking.
//!
//! Over a local ring a minimal-valuation pivot divides every remaining entry,
//! so diagonalization needs one clearing pass per pivot and the diagonal comes
//! out as p-powers with non-decreasing exponents.

use super::sparse::{inv_mod, pow_i64};

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct ModQMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl ModQMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ModQMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ModQMat::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_cols(rows: usize, cols: &[Vec<i64>], q: i64) -> Self {
        let mut m = ModQMat::zero(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for i in 0..rows {
                m.data[i * cols.len() + j] = col[i].rem_euclid(q);
            }
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &ModQMat, q: i64) -> ModQMat {
        assert_eq!(self.cols, other.rows);
        let mut out = ModQMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cell = &mut out.data[i * other.cols + j];
                    *cell = (*cell + a * other.at(k, j)) % q;
                }
            }
        }
        for cell in &mut out.data {
            *cell = cell.rem_euclid(q);
        }
        out
    }

    pub fn mul_vec(&self, x: &[i64], q: i64) -> Vec<i64> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = 0i64;
                for j in 0..self.cols {
                    acc = (acc + self.at(i, j) * x[j]) % q;
                }
                acc.rem_euclid(q)
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.at(i, j)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn row_axpy(&mut self, dst: usize, src: usize, c: i64, q: i64) {
        if c == 0 {
            return;
        }
        for j in 0..self.cols {
            let v = (self.at(dst, j) + c * self.at(src, j)).rem_euclid(q);
            self.set(dst, j, v);
        }
    }

    fn col_axpy(&mut self, dst: usize, src: usize, c: i64, q: i64) {
        if c == 0 {
            return;
        }
        for i in 0..self.rows {
            let v = (self.at(i, dst) + c * self.at(i, src)).rem_euclid(q);
            self.set(i, dst, v);
        }
    }

    fn scale_row(&mut self, i: usize, c: i64, q: i64) {
        for j in 0..self.cols {
            self.set(i, j, (self.at(i, j) * c).rem_euclid(q));
        }
    }

    fn scale_col(&mut self, j: usize, c: i64, q: i64) {
        for i in 0..self.rows {
            self.set(i, j, (self.at(i, j) * c).rem_euclid(q));
        }
    }
}

#[derive(Clone, Copy, Default)]
pub(crate) struct Want {
    pub u: bool,
    pub uinv: bool,
    pub v: bool,
    pub vinv: bool,
}

pub(crate) struct DiagModQ {
    /// Valuations of the diagonal, non-decreasing; `e` encodes a zero entry.
    pub vals: Vec<u32>,
    pub u: Option<ModQMat>,
    pub uinv: Option<ModQMat>,
    pub v: Option<ModQMat>,
    pub vinv: Option<ModQMat>,
}

/// Computes u * m * v = diag(p^vals) over Z/p^e.
pub(crate) fn diagonalize_mod_q(m: &ModQMat, p: i64, e: u32, want: Want) -> DiagModQ {
    let q = pow_i64(p, e);
    let (r, c) = (m.rows, m.cols);
    let mut s = m.clone();
    for cell in &mut s.data {
        *cell = cell.rem_euclid(q);
    }
    let mut u = want.u.then(|| ModQMat::identity(r));
    let mut uinv = want.uinv.then(|| ModQMat::identity(r));
    let mut v = want.v.then(|| ModQMat::identity(c));
    let mut vinv = want.vinv.then(|| ModQMat::identity(c));

    let val = |x: i64| -> u32 {
        if x == 0 {
            return e;
        }
        let mut x = x;
        let mut a = 0;
        while x % p == 0 {
            x /= p;
            a += 1;
        }
        a
    };

    let bound = r.min(c);
    let mut vals = vec![e; bound];
    for t in 0..bound {
        // Minimal-valuation pivot in the trailing submatrix, scan-order ties.
        let mut best: Option<(usize, usize, u32)> = None;
        for i in t..r {
            for j in t..c {
                let x = s.at(i, j);
                if x == 0 {
                    continue;
                }
                let a = val(x);
                if best.map_or(true, |(_, _, ba)| a < ba) {
                    best = Some((i, j, a));
                }
                if a == 0 {
                    break;
                }
            }
            if matches!(best, Some((_, _, 0))) {
                break;
            }
        }
        let Some((pi, pj, a)) = best else { break };
        s.swap_rows(t, pi);
        if let Some(mu) = u.as_mut() {
            mu.swap_rows(t, pi);
        }
        if let Some(mu) = uinv.as_mut() {
            mu.swap_cols(t, pi);
        }
        s.swap_cols(t, pj);
        if let Some(mv) = v.as_mut() {
            mv.swap_cols(t, pj);
        }
        if let Some(mv) = vinv.as_mut() {
            mv.swap_rows(t, pj);
        }
        // Normalize the pivot to exactly p^a.
        let unit = s.at(t, t) / pow_i64(p, a);
        let unit_inv = inv_mod(unit, q);
        s.scale_row(t, unit_inv, q);
        if let Some(mu) = u.as_mut() {
            mu.scale_row(t, unit_inv, q);
        }
        if let Some(mu) = uinv.as_mut() {
            mu.scale_col(t, unit, q);
        }
        let pa = pow_i64(p, a);
        for i in t + 1..r {
            let x = s.at(i, t);
            if x != 0 {
                let coef = -(x / pa);
                s.row_axpy(i, t, coef, q);
                if let Some(mu) = u.as_mut() {
                    mu.row_axpy(i, t, coef, q);
                }
                if let Some(mu) = uinv.as_mut() {
                    mu.col_axpy(t, i, -coef, q);
                }
            }
        }
        for j in t + 1..c {
            let x = s.at(t, j);
            if x != 0 {
                let coef = -(x / pa);
                s.col_axpy(j, t, coef, q);
                if let Some(mv) = v.as_mut() {
                    mv.col_axpy(j, t, coef, q);
                }
                if let Some(mv) = vinv.as_mut() {
                    mv.row_axpy(t, j, -coef, q);
                }
            }
        }
        vals[t] = a;
    }
    DiagModQ { vals, u, uinv, v, vinv }
}

/// Structure and generating representatives of span(k_gens) / span(i_gens)
/// inside (Z/p^e)^n.  Returns the p-power factors as ascending exponents plus
/// one representative per factor; i_gens must lie in the span of k_gens.
pub(crate) fn subquotient_mod_q(
    n: usize,
    p: i64,
    e: u32,
    k_gens: &[Vec<i64>],
    i_gens: &[Vec<i64>],
) -> (Vec<u32>, Vec<Vec<i64>>) {
    let q = pow_i64(p, e);
    if k_gens.is_empty() {
        for b in i_gens {
            assert!(b.iter().all(|&x| x.rem_euclid(q) == 0), "subgroup not contained in span");
        }
        return (Vec::new(), Vec::new());
    }
    let kappa = k_gens.len();
    let kmat = ModQMat::from_cols(n, k_gens, q);
    let d1 = diagonalize_mod_q(&kmat, p, e, Want { u: true, uinv: true, ..Default::default() });
    let u1 = d1.u.unwrap();
    let u1inv = d1.uinv.unwrap();
    let bound = n.min(kappa);
    // Cyclic pieces of the span: position i contributes Z/p^(e - c_i).
    let kept: Vec<(usize, u32)> = (0..bound)
        .map(|i| (i, d1.vals[i]))
        .filter(|&(_, ci)| ci < e)
        .collect();
    let s = kept.len();
    let cyc_gens: Vec<Vec<i64>> = kept
        .iter()
        .map(|&(i, ci)| {
            let f = pow_i64(p, ci);
            (0..n).map(|row| (u1inv.at(row, i) * f).rem_euclid(q)).collect()
        })
        .collect();
    if s == 0 {
        for b in i_gens {
            assert!(b.iter().all(|&x| x.rem_euclid(q) == 0), "subgroup not contained in span");
        }
        return (Vec::new(), Vec::new());
    }
    // Express each i_gen in the cyclic coordinates.
    let nb = i_gens.len();
    let mut m2 = ModQMat::zero(s, nb + s);
    for (col, b) in i_gens.iter().enumerate() {
        let z = u1.mul_vec(b, q);
        for (row, &(i, ci)) in kept.iter().enumerate() {
            let pc = pow_i64(p, ci);
            assert!(z[i] % pc == 0, "subgroup not contained in span");
            let oi = pow_i64(p, e - ci);
            m2.set(row, col, (z[i] / pc).rem_euclid(oi));
        }
        for (i, &zi) in z.iter().enumerate() {
            let ci = if i < bound { d1.vals[i] } else { e };
            assert!(zi % pow_i64(p, ci.min(e)) == 0, "subgroup not contained in span");
        }
    }
    for (row, &(_, ci)) in kept.iter().enumerate() {
        m2.set(row, nb + row, pow_i64(p, e - ci).rem_euclid(q));
    }
    let d2 = diagonalize_mod_q(&m2, p, e, Want { uinv: true, ..Default::default() });
    let u2inv = d2.uinv.unwrap();
    let mut exps = Vec::new();
    let mut reps = Vec::new();
    for (j, &dj) in d2.vals.iter().enumerate() {
        if dj == 0 {
            continue;
        }
        exps.push(dj);
        let mut rep = vec![0i64; n];
        for (i, gen) in cyc_gens.iter().enumerate() {
            let coef = u2inv.at(i, j);
            if coef != 0 {
                for (slot, &g) in rep.iter_mut().zip(gen) {
                    *slot = (*slot + coef * g).rem_euclid(q);
                }
            }
        }
        reps.push(rep);
    }
    // Ascending exponents give the invariant-factor chain directly.
    let mut order: Vec<usize> = (0..exps.len()).collect();
    order.sort_by_key(|&i| exps[i]);
    let exps_sorted: Vec<u32> = order.iter().map(|&i| exps[i]).collect();
    let reps_sorted: Vec<Vec<i64>> = order.iter().map(|&i| reps[i].clone()).collect();
    (exps_sorted, reps_sorted)
}
