use kummer_algebra::exactlin::{
    cokernel_structure, determinant, kernel_mod, smith_normal_form, solve_mod, IntMatrix,
};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use std::collections::HashSet;

fn matrix_strategy(max_dim: usize, max_abs: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-max_abs..=max_abs, r * c)
            .prop_map(move |data| IntMatrix::from_i64(r, c, &data))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_decomposition_is_exact(a in matrix_strategy(5, 20)) {
        let snf = smith_normal_form(&a);
        prop_assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.s.clone());
        prop_assert_eq!(determinant(&snf.u).abs(), BigInt::from(1));
        prop_assert_eq!(determinant(&snf.v).abs(), BigInt::from(1));
        let d = snf.diagonal();
        for i in 0..d.len() {
            prop_assert!(d[i] >= BigInt::zero());
            if i + 1 < d.len() {
                if d[i].is_zero() {
                    prop_assert!(d[i + 1].is_zero());
                } else if !d[i + 1].is_zero() {
                    prop_assert!((&d[i + 1] % &d[i]).is_zero());
                }
            }
        }
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    prop_assert!(snf.s.at(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn cokernel_order_is_product_of_divisors(a in matrix_strategy(4, 12)) {
        let g = cokernel_structure(&a);
        let snf = smith_normal_form(&a);
        let nonzero: Vec<BigInt> = snf.diagonal().into_iter().filter(|d| !d.is_zero()).collect();
        if g.free_rank() == 0 {
            let product: BigInt = nonzero.iter().product();
            prop_assert_eq!(g.order().unwrap(), product.to_biguint().unwrap());
        } else {
            prop_assert_eq!(g.free_rank(), a.rows() - nonzero.len());
        }
    }

    #[test]
    fn kernel_mod_matches_enumeration(
        (r, c) in (1usize..=3, 1usize..=3).prop_filter("budget", |(r, c)| r * c <= 6),
        m in 2u64..=7,
        seed_entries in proptest::collection::vec(-9i64..=9, 9),
    ) {
        let entries = &seed_entries[..r * c];
        let a = IntMatrix::from_i64(r, c, entries);
        let k = kernel_mod(&a, &BigUint::from(m));
        let mb = BigInt::from(m as i64);
        let mut brute = HashSet::new();
        for code in 0..m.pow(c as u32) {
            let mut x = vec![0u64; c];
            let mut t = code;
            for slot in x.iter_mut() { *slot = t % m; t /= m; }
            let xb: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
            if a.mul_vec(&xb).iter().all(|v| v.mod_floor(&mb).is_zero()) {
                brute.insert(x);
            }
        }
        prop_assert_eq!(k.structure.order().unwrap(), BigUint::from(brute.len() as u64));
        for g in &k.generators {
            let image = a.mul_vec(g);
            prop_assert!(image.iter().all(|v| v.mod_floor(&mb).is_zero()));
        }
        // Closure of the generators is the whole kernel.
        let mut span: HashSet<Vec<u64>> = HashSet::new();
        span.insert(vec![0; c]);
        loop {
            let snapshot: Vec<Vec<u64>> = span.iter().cloned().collect();
            let before = span.len();
            for x in &snapshot {
                for g in &k.generators {
                    let y: Vec<u64> = x
                        .iter()
                        .zip(g)
                        .map(|(&a, b)| {
                            let gv: u64 = b.to_string().parse().unwrap();
                            (a + gv) % m
                        })
                        .collect();
                    span.insert(y);
                }
            }
            if span.len() == before {
                break;
            }
        }
        prop_assert_eq!(span, brute);
    }

    #[test]
    fn solve_mod_matches_enumeration(
        (r, c) in (1usize..=3, 1usize..=3).prop_filter("budget", |(r, c)| r * c <= 6),
        m in 2u64..=7,
        seed_entries in proptest::collection::vec(-9i64..=9, 9),
        rhs in proptest::collection::vec(0i64..=6, 3),
    ) {
        let entries = &seed_entries[..r * c];
        let a = IntMatrix::from_i64(r, c, entries);
        let b: Vec<BigInt> = rhs[..r].iter().map(|&v| BigInt::from(v % m as i64)).collect();
        let mb = BigInt::from(m as i64);
        let got = solve_mod(&a, &b, &BigUint::from(m));
        let mut exists = false;
        for code in 0..m.pow(c as u32) {
            let mut x = vec![0u64; c];
            let mut t = code;
            for slot in x.iter_mut() { *slot = t % m; t /= m; }
            let xb: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
            if a.mul_vec(&xb).iter().zip(&b).all(|(l, r)| (l - r).mod_floor(&mb).is_zero()) {
                exists = true;
                break;
            }
        }
        prop_assert_eq!(got.is_some(), exists);
        if let Some(x) = got {
            prop_assert!(a.mul_vec(&x).iter().zip(&b).all(|(l, r)| (l - r).mod_floor(&mb).is_zero()));
        }
    }
}
