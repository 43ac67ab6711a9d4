//! Sparse elimination over Z/p^e.
//!
//! Columns are kept in a saturated echelon: one frozen pivot column per
//! leading row, chosen with minimal p-valuation of its leading entry, and for
//! every pivot with leading valuation a > 0 the scaled column p^(e-a) * col is
//! re-inserted once.  Saturation makes greedy reduction a complete membership
//! test and makes the product of p^(e - a_j) over pivots the exact span size.

use std::collections::BTreeMap;

/// Sorted (index, value) pairs; values reduced to [1, q).
pub(crate) type SparseVec = Vec<(u32, i64)>;

pub(crate) fn pow_i64(p: i64, e: u32) -> i64 {
    p.checked_pow(e).expect("modulus overflow")
}

fn val_p(mut x: i64, p: i64) -> u32 {
    debug_assert!(x != 0);
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

/// Inverse of a unit modulo q via the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: i64, q: i64) -> i64 {
    let (mut r0, mut r1) = (q, a.rem_euclid(q));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    assert!(r0 == 1, "inv_mod of a non-unit: {a} mod {q}");
    t0.rem_euclid(q)
}

/// a + c * b, entrywise mod q, zeros dropped.
pub(crate) fn sv_axpy(a: &SparseVec, b: &SparseVec, c: i64, q: i64) -> SparseVec {
    let c = c.rem_euclid(q);
    if c == 0 {
        return a.clone();
    }
    let mut out = SparseVec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&(ia, va)), Some(&(ib, vb))) => {
                if ia < ib {
                    i += 1;
                    (ia, va)
                } else if ib < ia {
                    j += 1;
                    (ib, (c * vb) % q)
                } else {
                    i += 1;
                    j += 1;
                    (ia, (va + c * vb) % q)
                }
            }
            (Some(&(ia, va)), None) => {
                i += 1;
                (ia, va)
            }
            (None, Some(&(ib, vb))) => {
                j += 1;
                (ib, (c * vb) % q)
            }
            (None, None) => unreachable!(),
        };
        let v = next.1.rem_euclid(q);
        if v != 0 {
            out.push((next.0, v));
        }
    }
    out
}

pub(crate) fn sv_scale(v: &SparseVec, c: i64, q: i64) -> SparseVec {
    let c = c.rem_euclid(q);
    let mut out = SparseVec::with_capacity(v.len());
    for &(i, x) in v {
        let y = (x * c).rem_euclid(q);
        if y != 0 {
            out.push((i, y));
        }
    }
    out
}

pub(crate) fn sv_from_dense(xs: &[i64], q: i64) -> SparseVec {
    xs.iter()
        .enumerate()
        .filter_map(|(i, &x)| {
            let y = x.rem_euclid(q);
            (y != 0).then_some((i as u32, y))
        })
        .collect()
}

pub(crate) fn sv_to_dense(v: &SparseVec, n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n];
    for &(i, x) in v {
        out[i as usize] = x;
    }
    out
}

struct Pivot {
    val: SparseVec,
    coord: Option<SparseVec>,
    lead_val: u32,
    unit_inv: i64,
}

pub(crate) struct SatEchelon {
    p: i64,
    e: u32,
    q: i64,
    track_coords: bool,
    next_coord: u32,
    pivots: BTreeMap<u32, Pivot>,
    kernel: Vec<SparseVec>,
}

impl SatEchelon {
    pub fn new(p: i64, e: u32, track_coords: bool) -> Self {
        assert!(e >= 1);
        let q = pow_i64(p, e);
        SatEchelon { p, e, q, track_coords, next_coord: 0, pivots: BTreeMap::new(), kernel: Vec::new() }
    }

    pub fn modulus(&self) -> i64 {
        self.q
    }

    /// Inserts a column whose coordinate is the next unit vector.
    pub fn insert_col(&mut self, val: SparseVec) {
        let coord = self.track_coords.then(|| vec![(self.next_coord, 1i64)]);
        self.next_coord += 1;
        self.process(val, coord);
    }

    /// Inserts a column carrying an explicit coordinate vector.
    pub fn insert_with_coord(&mut self, val: SparseVec, coord: SparseVec) {
        assert!(self.track_coords);
        self.process(val, Some(coord));
    }

    fn process(&mut self, val: SparseVec, coord: Option<SparseVec>) {
        let mut work = vec![(val, coord)];
        while let Some((mut v, mut c)) = work.pop() {
            loop {
                let Some(&(lead_row, lead_entry)) = v.first() else {
                    if let Some(c) = c {
                        if !c.is_empty() {
                            self.kernel.push(c);
                        }
                    }
                    break;
                };
                let a = val_p(lead_entry, self.p);
                let mut reduced = false;
                if let Some(piv) = self.pivots.get(&lead_row) {
                    if piv.lead_val <= a {
                        let coef =
                            ((lead_entry / pow_i64(self.p, piv.lead_val)) % self.q * piv.unit_inv) % self.q;
                        v = sv_axpy(&v, &piv.val, -coef, self.q);
                        if let Some(cc) = c.as_mut() {
                            let pc = piv.coord.as_ref().expect("coords tracked for all pivots");
                            *cc = sv_axpy(cc, pc, -coef, self.q);
                        }
                        debug_assert!(v.first().map_or(true, |&(r, _)| r > lead_row));
                        reduced = true;
                    }
                }
                if reduced {
                    continue;
                }
                // Install as a pivot, displacing any shallower one.  Saturate
                // once when the leading valuation is positive.
                if a > 0 {
                    let f = pow_i64(self.p, self.e - a);
                    let sv = sv_scale(&v, f, self.q);
                    let sc = c.as_ref().map(|c| sv_scale(c, f, self.q));
                    work.push((sv, sc));
                }
                let unit_inv = inv_mod(lead_entry / pow_i64(self.p, a), self.q);
                let newpiv = Pivot { val: v, coord: c, lead_val: a, unit_inv };
                if let Some(old) = self.pivots.insert(lead_row, newpiv) {
                    work.push((old.val, old.coord));
                }
                break;
            }
        }
    }

    /// Greedily reduces `b` against the pivots; returns the remainder and,
    /// when coordinates are tracked, the combination used.
    pub fn reduce(&self, b: &SparseVec) -> (SparseVec, Option<SparseVec>) {
        let mut v = b.clone();
        let mut sol = self.track_coords.then(SparseVec::new);
        loop {
            let Some(&(lead_row, lead_entry)) = v.first() else { break };
            let a = val_p(lead_entry, self.p);
            match self.pivots.get(&lead_row) {
                Some(piv) if piv.lead_val <= a => {
                    let coef =
                        ((lead_entry / pow_i64(self.p, piv.lead_val)) % self.q * piv.unit_inv) % self.q;
                    v = sv_axpy(&v, &piv.val, -coef, self.q);
                    if let Some(s) = sol.as_mut() {
                        let pc = piv.coord.as_ref().expect("coords tracked for all pivots");
                        *s = sv_axpy(s, pc, coef, self.q);
                    }
                }
                _ => break,
            }
        }
        (v, sol)
    }

    /// Solves `sum_j x_j col_j = b`; requires coordinate tracking.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        assert!(self.track_coords);
        let (rem, sol) = self.reduce(b);
        rem.is_empty().then(|| sol.unwrap())
    }

    pub fn contains(&self, b: &SparseVec) -> bool {
        self.reduce(b).0.is_empty()
    }

    /// log_p of the cardinality of the column span.
    pub fn span_log(&self) -> u64 {
        self.pivots.values().map(|piv| (self.e - piv.lead_val) as u64).sum()
    }

    pub fn pivot_count(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates of the columns that reduced to zero; these generate the
    /// kernel of the inserted-columns matrix.
    pub fn kernel_coords(&self) -> &[SparseVec] {
        &self.kernel
    }

    pub fn into_kernel_coords(self) -> Vec<SparseVec> {
        self.kernel
    }
}

/// Kernel generators of the matrix with the given columns, as coordinate
/// vectors over Z/p^e, together with log_p of the kernel cardinality.
pub(crate) fn kernel_mod_prime_power(cols: &[SparseVec], ncols: usize, p: i64, e: u32) -> (Vec<SparseVec>, u64) {
    assert_eq!(cols.len(), ncols);
    let mut ech = SatEchelon::new(p, e, true);
    for col in cols {
        ech.insert_col(col.clone());
    }
    let log = ncols as u64 * e as u64 - ech.span_log();
    (ech.into_kernel_coords(), log)
}
