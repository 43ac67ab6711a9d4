use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::fmt;

/// Finitely generated abelian group in invariant-factor form.
///
/// `factors` lists the torsion invariant factors, each at least 2 and each
/// dividing the next; `free_rank` counts free summands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinAbGroup {
    factors: Vec<BigUint>,
    free_rank: usize,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup { factors: Vec::new(), free_rank: 0 }
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup { factors: Vec::new(), free_rank: rank }
    }

    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1, "cyclic order must be positive");
        if n == 1 {
            FinAbGroup::trivial()
        } else {
            FinAbGroup { factors: vec![BigUint::from(n)], free_rank: 0 }
        }
    }

    /// Accepts factors already in divisor-chain order; entries equal to 1 are dropped.
    pub fn from_invariant_factors(factors: Vec<BigUint>, free_rank: usize) -> Self {
        let one = BigUint::one();
        let factors: Vec<BigUint> = factors.into_iter().filter(|f| *f > one).collect();
        for w in factors.windows(2) {
            assert!(
                (&w[1] % &w[0]).is_zero(),
                "invariant factors must form a divisor chain: {} does not divide {}",
                w[0],
                w[1]
            );
        }
        FinAbGroup { factors, free_rank }
    }

    /// Normalizes an arbitrary multiset of cyclic orders into invariant-factor form.
    pub fn from_factor_multiset(orders: Vec<BigUint>, free_rank: usize) -> Self {
        let mut primary: Vec<(BigUint, u32)> = Vec::new();
        for n in orders {
            primary.extend(factor_prime_powers(&n));
        }
        Self::from_primary_decomposition(primary, free_rank)
    }

    /// Builds the group from a multiset of prime-power cyclic factors (p, e).
    pub fn from_primary_decomposition(primary: Vec<(BigUint, u32)>, free_rank: usize) -> Self {
        use std::collections::BTreeMap;
        let mut by_prime: BTreeMap<BigUint, Vec<u32>> = BTreeMap::new();
        for (p, e) in primary {
            if e > 0 {
                by_prime.entry(p).or_default().push(e);
            }
        }
        let mut slots = 0usize;
        for exps in by_prime.values_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            slots = slots.max(exps.len());
        }
        // Slot 0 collects the largest exponent of every prime, so the factors
        // built from later slots divide the earlier ones.
        let mut desc: Vec<BigUint> = Vec::with_capacity(slots);
        for i in 0..slots {
            let mut f = BigUint::one();
            for (p, exps) in &by_prime {
                if let Some(&e) = exps.get(i) {
                    f *= p.pow(e);
                }
            }
            desc.push(f);
        }
        desc.reverse();
        FinAbGroup { factors: desc, free_rank }
    }

    pub fn invariant_factors(&self) -> &[BigUint] {
        &self.factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.free_rank == 0
    }

    pub fn torsion_order(&self) -> BigUint {
        self.factors.iter().product()
    }

    /// Total order; `None` when the group is infinite.
    pub fn order(&self) -> Option<BigUint> {
        if self.free_rank > 0 {
            None
        } else {
            Some(self.torsion_order())
        }
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut orders = self.factors.clone();
        orders.extend(other.factors.iter().cloned());
        FinAbGroup::from_factor_multiset(orders, self.free_rank + other.free_rank)
    }

    /// The subgroup of m-torsion points, using that the group is a product of cyclics.
    pub fn torsion_subgroup(&self, m: &BigUint) -> FinAbGroup {
        assert!(self.free_rank == 0, "m-torsion of a free part is not finite");
        let orders = self
            .factors
            .iter()
            .map(|f| gcd_biguint(f, m))
            .collect();
        FinAbGroup::from_factor_multiset(orders, 0)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.factors {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn gcd_biguint(a: &BigUint, b: &BigUint) -> BigUint {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Trial-division factorization into (prime, exponent) pairs; inputs here are
/// small cyclic orders, never cryptographic-size integers.
pub(crate) fn factor_prime_powers(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let one = BigUint::one();
    let mut out = Vec::new();
    if n <= one {
        return out;
    }
    let mut p = BigUint::from(2u32);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            let mut e = 0u32;
            while (&n % &p).is_zero() {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += 1u32;
    }
    if n > one {
        out.push((n, 1));
    }
    out
}
