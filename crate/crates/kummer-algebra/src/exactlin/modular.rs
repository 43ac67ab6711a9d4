use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::dense::{smith_normal_form, IntMatrix};
use super::finab::{factor_prime_powers, FinAbGroup};
use super::sparse::{kernel_mod_prime_power, pow_i64, SatEchelon, SparseVec};

/// Above this dimension the elimination switches to the sparse engine.
pub const DENSE_DIM_LIMIT: usize = 512;

/// Kernel of a matrix acting on (Z/m)^cols, as generators plus structure.
#[derive(Clone, Debug)]
pub struct ModKernel {
    pub modulus: BigUint,
    /// Entries reduced to [0, m); together they generate the kernel.
    pub generators: Vec<Vec<BigInt>>,
    pub structure: FinAbGroup,
}

/// Prime-power factors of m, ascending by prime: 12 -> [4, 3].
pub fn crt_decompose(m: &BigUint) -> Vec<BigUint> {
    assert!(*m >= BigUint::from(2u32), "modulus must be at least 2");
    factor_prime_powers(m).into_iter().map(|(p, e)| p.pow(e)).collect()
}

pub fn kernel_mod(a: &IntMatrix, m: &BigUint) -> ModKernel {
    assert!(*m >= BigUint::from(2u32), "modulus must be at least 2");
    if a.rows().max(a.cols()) <= DENSE_DIM_LIMIT {
        kernel_mod_dense(a, m)
    } else {
        kernel_mod_sparse(a, m)
    }
}

/// Dense path: from u a v = s, the kernel mod m is generated by the columns
/// (m / gcd(s_j, m)) * v_j with cyclic orders gcd(s_j, m), which already form
/// a divisor chain.
fn kernel_mod_dense(a: &IntMatrix, m: &BigUint) -> ModKernel {
    let mbig = BigInt::from(m.clone());
    let snf = smith_normal_form(a);
    let bound = a.rows().min(a.cols());
    let mut generators = Vec::new();
    let mut factors = Vec::new();
    for j in 0..a.cols() {
        let d = if j < bound { snf.s.at(j, j).clone() } else { BigInt::zero() };
        let g = d.gcd(&mbig);
        if g > BigInt::one() {
            let scale = &mbig / &g;
            let gen: Vec<BigInt> =
                (0..a.cols()).map(|i| (snf.v.at(i, j) * &scale).mod_floor(&mbig)).collect();
            generators.push(gen);
            factors.push(g.to_biguint().unwrap());
        }
    }
    ModKernel {
        modulus: m.clone(),
        generators,
        structure: FinAbGroup::from_invariant_factors(factors, 0),
    }
}

fn sparse_cols_mod(a: &IntMatrix, q: i64) -> Vec<SparseVec> {
    let qb = BigInt::from(q);
    (0..a.cols())
        .map(|j| {
            (0..a.rows())
                .filter_map(|i| {
                    let v = a.at(i, j).mod_floor(&qb).to_i64().unwrap();
                    (v != 0).then_some((i as u32, v))
                })
                .collect()
        })
        .collect()
}

fn prime_power_parts(m: &BigUint) -> Vec<(i64, u32)> {
    factor_prime_powers(m)
        .into_iter()
        .map(|(p, e)| {
            let p = p.to_i64().expect("sparse path needs word-sized prime factors");
            assert!(pow_i64(p, e) > 0);
            (p, e)
        })
        .collect()
}

/// CRT coefficient: 1 mod q, 0 mod m/q.
fn crt_coefficient(m: &BigUint, q: i64) -> BigInt {
    let mbig = BigInt::from(m.clone());
    let qbig = BigInt::from(q);
    let rest = &mbig / &qbig;
    let inv = mod_inverse(&rest.mod_floor(&qbig), &qbig).expect("coprime by construction");
    (rest * inv).mod_floor(&mbig)
}

/// Number of Z/p^j factors from the layer sizes log_p |K[p^j]|.
fn primary_from_layers(p: i64, e: u32, layer_logs: &[u64]) -> Vec<(BigUint, u32)> {
    assert_eq!(layer_logs.len(), e as usize);
    let mut big_m = vec![0i64; e as usize + 2];
    for j in 1..=e as usize {
        let prev = if j >= 2 { layer_logs[j - 2] } else { 0 };
        big_m[j] = layer_logs[j - 1] as i64 - prev as i64;
    }
    let mut out = Vec::new();
    for j in 1..=e as usize {
        let count = big_m[j] - big_m[j + 1];
        assert!(count >= 0, "layer sizes must be concave");
        for _ in 0..count {
            out.push((BigUint::from(p as u64), j as u32));
        }
    }
    out
}

fn kernel_mod_sparse(a: &IntMatrix, m: &BigUint) -> ModKernel {
    let n = a.cols();
    let mbig = BigInt::from(m.clone());
    let mut generators: Vec<Vec<BigInt>> = Vec::new();
    let mut primary: Vec<(BigUint, u32)> = Vec::new();
    for (p, e) in prime_power_parts(m) {
        let q = pow_i64(p, e);
        let cols = sparse_cols_mod(a, q);
        let (gens, _log) = kernel_mod_prime_power(&cols, n, p, e);
        let alpha = crt_coefficient(m, q);
        for g in &gens {
            let mut lifted = vec![BigInt::zero(); n];
            for &(i, v) in g {
                lifted[i as usize] = (BigInt::from(v) * &alpha).mod_floor(&mbig);
            }
            generators.push(lifted);
        }
        // Structure from the filtration layers K[p^j] = K meet p^(e-j) R^n.
        let mut layer_logs = Vec::with_capacity(e as usize);
        let log_k = {
            let mut ech = SatEchelon::new(p, e, false);
            for g in &gens {
                ech.insert_col(g.clone());
            }
            ech.span_log()
        };
        for j in 1..=e {
            if j == e {
                layer_logs.push(log_k);
                continue;
            }
            let mut ech = SatEchelon::new(p, e, false);
            for g in &gens {
                ech.insert_col(g.clone());
            }
            let scale = pow_i64(p, e - j);
            for i in 0..n {
                ech.insert_col(vec![(i as u32, scale)]);
            }
            // |K[p^j]| = |K| * |p^(e-j) R^n| / |K + p^(e-j) R^n|
            layer_logs.push(log_k + (j as u64) * (n as u64) - ech.span_log());
        }
        primary.extend(primary_from_layers(p, e, &layer_logs));
    }
    ModKernel {
        modulus: m.clone(),
        generators,
        structure: FinAbGroup::from_primary_decomposition(primary, 0),
    }
}

fn mod_inverse(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let ext = a.extended_gcd(n);
    if ext.gcd.is_one() {
        Some(ext.x.mod_floor(n))
    } else {
        None
    }
}

/// Solves a x = b over Z/m; `None` when no solution exists.
pub fn solve_mod(a: &IntMatrix, b: &[BigInt], m: &BigUint) -> Option<Vec<BigInt>> {
    assert!(*m >= BigUint::from(2u32), "modulus must be at least 2");
    assert_eq!(a.rows(), b.len(), "right-hand side length must equal row count");
    if a.rows().max(a.cols()) <= DENSE_DIM_LIMIT {
        solve_mod_dense(a, b, m)
    } else {
        solve_mod_sparse(a, b, m)
    }
}

fn solve_mod_dense(a: &IntMatrix, b: &[BigInt], m: &BigUint) -> Option<Vec<BigInt>> {
    let mbig = BigInt::from(m.clone());
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b);
    let bound = a.rows().min(a.cols());
    let mut y = vec![BigInt::zero(); a.cols()];
    for (j, cj) in c.iter().enumerate() {
        let d = if j < bound { snf.s.at(j, j).clone() } else { BigInt::zero() };
        let g = d.gcd(&mbig);
        if g == mbig {
            if !cj.mod_floor(&mbig).is_zero() {
                return None;
            }
        } else {
            if !(cj % &g).is_zero() {
                return None;
            }
            let m1 = &mbig / &g;
            let d1 = (&d / &g).mod_floor(&m1);
            let inv = mod_inverse(&d1, &m1).expect("d/g is a unit mod m/g");
            if j < a.cols() {
                y[j] = ((cj / &g) * inv).mod_floor(&m1);
            }
        }
    }
    Some(snf.v.mul_vec(&y).into_iter().map(|x| x.mod_floor(&mbig)).collect())
}

fn solve_mod_sparse(a: &IntMatrix, b: &[BigInt], m: &BigUint) -> Option<Vec<BigInt>> {
    let n = a.cols();
    let mbig = BigInt::from(m.clone());
    let mut x = vec![BigInt::zero(); n];
    for (p, e) in prime_power_parts(m) {
        let q = pow_i64(p, e);
        let qb = BigInt::from(q);
        let cols = sparse_cols_mod(a, q);
        let mut ech = SatEchelon::new(p, e, true);
        for col in cols {
            ech.insert_col(col);
        }
        let bq: SparseVec = b
            .iter()
            .enumerate()
            .filter_map(|(i, v)| {
                let v = v.mod_floor(&qb).to_i64().unwrap();
                (v != 0).then_some((i as u32, v))
            })
            .collect();
        let xq = ech.solve(&bq)?;
        let alpha = crt_coefficient(m, q);
        for &(i, v) in &xq {
            x[i as usize] = (&x[i as usize] + BigInt::from(v) * &alpha).mod_floor(&mbig);
        }
    }
    Some(x)
}
