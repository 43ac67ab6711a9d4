//! Small symmetric groups: exhaustive element tables, point stabilizers,
//! Sylow subgroups, double cosets, and Coxeter generator words.
//!
//! Permutations act on {1, ..., n} and store 1-based images.  Composition is
//! function composition: `a.compose(&b)` applies `b` first, then `a`.  The
//! degree is capped at 7 everywhere; all enumerations are lexicographic by
//! image tuple, which puts the identity first.

use itertools::Itertools;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::exactlin::FinAbGroup;
use num_bigint::BigUint;

/// Hard ceiling on the degree of every symmetric group in this crate.
pub const MAX_DEGREE: u8 = 7;

/// Largest group order for which a full multiplication table is stored.
const MULT_TABLE_LIMIT: usize = 720;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: u8) -> Perm {
        assert!(n >= 1 && n <= MAX_DEGREE, "degree must lie in 1..=7");
        Perm { images: (1..=n).collect() }
    }

    pub fn from_images(images: Vec<u8>) -> Perm {
        let n = images.len() as u8;
        assert!(n >= 1 && n <= MAX_DEGREE, "degree must lie in 1..=7");
        let mut seen = [false; MAX_DEGREE as usize + 1];
        for &v in &images {
            assert!(v >= 1 && v <= n, "image {v} out of range 1..={n}");
            assert!(!seen[v as usize], "image {v} repeated");
            seen[v as usize] = true;
        }
        Perm { images }
    }

    pub fn degree(&self) -> u8 {
        self.images.len() as u8
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of the 1-based letter i.
    pub fn apply(&self, i: u8) -> u8 {
        self.images[(i - 1) as usize]
    }

    /// Function composition: (self . other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degrees must agree");
        Perm { images: other.images.iter().map(|&i| self.apply(i)).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u8 + 1;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u8 + 1)
    }

    pub fn transposition(n: u8, a: u8, b: u8) -> Perm {
        assert!(a != b && a >= 1 && b >= 1 && a <= n && b <= n);
        let mut p = Perm::identity(n);
        p.images[(a - 1) as usize] = b;
        p.images[(b - 1) as usize] = a;
        p
    }

    /// The Coxeter generator s_i = (i, i+1).
    pub fn adjacent_transposition(n: u8, i: u8) -> Perm {
        assert!(i >= 1 && i < n, "generator index must lie in 1..n");
        Perm::transposition(n, i, i + 1)
    }

    pub fn pow(&self, mut k: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base.clone());
            k >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut k = 1u64;
        let mut p = self.clone();
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Disjoint cycles, each rotated to start at its smallest letter, sorted
    /// by that letter; fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let n = self.degree();
        let mut seen = vec![false; n as usize + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start as usize] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur as usize] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    /// Parses cycle notation such as "(1 2)(3 4)"; "()" is the identity.
    pub fn parse_cycles(n: u8, text: &str) -> Result<Perm, String> {
        assert!(n >= 1 && n <= MAX_DEGREE, "degree must lie in 1..=7");
        let text = text.trim();
        let mut p = Perm::identity(n);
        let mut rest = text;
        if rest.is_empty() {
            return Err("empty input".into());
        }
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| format!("expected '(' in {rest:?}"))?;
            if !rest[..open].trim().is_empty() {
                return Err(format!("unexpected text {:?}", &rest[..open]));
            }
            let close =
                rest.find(')').ok_or_else(|| format!("unbalanced parentheses in {text:?}"))?;
            let inner = &rest[open + 1..close];
            let letters: Result<Vec<u8>, String> = inner
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u8>().map_err(|e| format!("bad letter {tok:?}: {e}")).and_then(|v| {
                        if v >= 1 && v <= n {
                            Ok(v)
                        } else {
                            Err(format!("letter {v} out of range 1..={n}"))
                        }
                    })
                })
                .collect();
            let letters = letters?;
            if letters.iter().collect::<HashSet<_>>().len() != letters.len() {
                return Err(format!("repeated letter in cycle ({inner})"));
            }
            if letters.len() >= 2 {
                let mut cycle = Perm::identity(n);
                for w in letters.windows(2) {
                    cycle.images[(w[0] - 1) as usize] = w[1];
                }
                cycle.images[(letters[letters.len() - 1] - 1) as usize] = letters[0];
                // Disjointness across cycles is not assumed; later cycles are
                // applied first, matching the usual left-to-right product.
                p = p.compose(&cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(p)
    }

    pub fn to_cycles_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|v| v.to_string()).join(" ")))
            .collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycles_string())
    }
}

/// All of S_n in lexicographic image order; the identity comes first.
pub fn enumerate(n: u8) -> Vec<Perm> {
    assert!(n >= 1 && n <= MAX_DEGREE, "degree must lie in 1..=7");
    (1..=n).permutations(n as usize).map(Perm::from_images).collect()
}

/// A finite permutation group with constant-time products and inverses.
pub struct GroupTable {
    degree: u8,
    elems: Vec<Perm>,
    index: HashMap<Vec<u8>, u32>,
    mult: Option<Vec<u32>>,
    inv: Vec<u32>,
}

impl GroupTable {
    fn build(degree: u8, mut elems: Vec<Perm>) -> GroupTable {
        elems.sort();
        elems.dedup();
        assert!(elems[0].is_identity(), "identity must be present");
        let index: HashMap<Vec<u8>, u32> =
            elems.iter().enumerate().map(|(i, p)| (p.images.to_vec(), i as u32)).collect();
        let order = elems.len();
        let inv: Vec<u32> = elems.iter().map(|p| index[&p.inverse().images.to_vec()]).collect();
        let mult = (order <= MULT_TABLE_LIMIT).then(|| {
            let mut table = vec![0u32; order * order];
            for (i, a) in elems.iter().enumerate() {
                for (j, b) in elems.iter().enumerate() {
                    table[i * order + j] = index[&a.compose(b).images.to_vec()];
                }
            }
            table
        });
        GroupTable { degree, elems, index, mult, inv }
    }

    pub fn symmetric(n: u8) -> GroupTable {
        GroupTable::build(n, enumerate(n))
    }

    /// Closure of the generators inside S_degree.
    pub fn from_generators(degree: u8, gens: &[Perm]) -> GroupTable {
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = VecDeque::new();
        let e = Perm::identity(degree);
        seen.insert(e.clone());
        queue.push_back(e);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.compose(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        GroupTable::build(degree, seen.into_iter().collect())
    }

    pub fn from_elements(degree: u8, elems: Vec<Perm>) -> GroupTable {
        let t = GroupTable::build(degree, elems);
        // Closure check: the table construction would already fail on a
        // missing product index, but make the contract explicit.
        for i in 0..t.order() {
            assert_eq!(t.inv[i] as usize, t.indexафов_check(i));
        }
        t
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elems
    }

    pub fn elem(&self, i: usize) -> &Perm {
        &self.elems[i]
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(&p.images.to_vec()).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index_of(p).is_some()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.mult {
            Some(table) => table[i * self.elems.len() + j] as usize,
            None => {
                let p = self.elems[i].compose(&self.elems[j]);
                self.index[&p.images.to_vec()] as usize
            }
        }
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    /// Conjugate index: g h g^{-1}.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// Invariant-factor structure of G / [G, G].
    pub fn abelianization(&self) -> FinAbGroup {
        let order = self.order();
        // Derived subgroup: normal closure of all commutators.
        let mut derived: HashSet<usize> = HashSet::new();
        derived.insert(self.identity_index());
        let mut queue: VecDeque<usize> = VecDeque::new();
        for a in 0..order {
            for b in 0..order {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                if derived.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        // Close under multiplication (commutators of a group of this size
        // already multiply into each other, but do not rely on it).
        while let Some(x) = queue.pop_front() {
            let snapshot: Vec<usize> = derived.iter().copied().collect();
            for y in snapshot {
                for z in [self.mul(x, y), self.mul(y, x)] {
                    if derived.insert(z) {
                        queue.push_back(z);
                    }
                }
            }
        }
        // Cosets of the derived subgroup form the abelianization.
        let mut coset_of = vec![usize::MAX; order];
        let mut reps = Vec::new();
        for g in 0..order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &d in &derived {
                coset_of[self.mul(g, d)] = id;
            }
        }
        let m = reps.len();
        // Structure from p-power torsion layer sizes.
        let coset_pow = |rep: usize, k: u64| -> usize {
            let mut acc = self.identity_index();
            for _ in 0..k {
                acc = self.mul(acc, rep);
            }
            coset_of[acc]
        };
        let mut primary = Vec::new();
        let mut rem = m;
        let mut p = 2usize;
        while rem > 1 {
            if rem % p == 0 {
                let mut e_max = 0u32;
                while rem % p == 0 {
                    rem /= p;
                    e_max += 1;
                }
                let mut layers = Vec::new();
                for j in 1..=e_max {
                    let pj = (p as u64).pow(j);
                    let count = (0..m)
                        .filter(|&c| coset_pow(reps[c], pj) == coset_of[self.identity_index()])
                        .count();
                    let mut log = 0u64;
                    let mut c = count;
                    while c > 1 {
                        assert_eq!(c % p, 0);
                        c /= p;
                        log += 1;
                    }
                    layers.push(log);
                }
                primary.extend(crate::exactlin::primary_from_layers_pub(p as i64, e_max, &layers));
            }
            p += 1;
        }
        FinAbGroup::from_primary_decomposition(primary, 0)
    }
}

/// A subgroup of S_n given by its full element list.
#[derive(Clone, Debug)]
pub struct SubgroupTable {
    pub parent_degree: u8,
    /// Lexicographic by image tuple; the identity is first.
    pub elements: Vec<Perm>,
    pub generators: Vec<Perm>,
    /// Index in the full symmetric group of the parent degree.
    pub index: u64,
}

fn factorial(n: u8) -> u64 {
    (1..=n as u64).product()
}

impl SubgroupTable {
    fn from_generators(parent_degree: u8, generators: Vec<Perm>) -> SubgroupTable {
        let table = GroupTable::from_generators(parent_degree, &generators);
        let order = table.order() as u64;
        let full = factorial(parent_degree);
        assert_eq!(full % order, 0, "Lagrange violation");
        SubgroupTable { parent_degree, elements: table.elems, generators, index: full / order }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// The point stabilizer of the letter n inside S_n, with right-coset
/// representatives: coset k (1-based) consists of the permutations sending n
/// to k, and its representative is the transposition (k n), with the identity
/// for k = n.
pub struct YoungEmbedding {
    pub subgroup: SubgroupTable,
    /// coset_reps[k-1] represents the coset mapping n to k.
    pub coset_reps: Vec<Perm>,
}

pub fn young_embedding(n: u8) -> YoungEmbedding {
    assert!(n >= 2 && n <= MAX_DEGREE, "degree must lie in 2..=7");
    let gens: Vec<Perm> =
        (1..n - 1).map(|i| Perm::adjacent_transposition(n, i)).collect();
    let gens = if gens.is_empty() { vec![Perm::identity(n)] } else { gens };
    let subgroup = SubgroupTable::from_generators(n, gens);
    assert_eq!(subgroup.index, n as u64);
    let coset_reps = (1..=n)
        .map(|k| if k == n { Perm::identity(n) } else { Perm::transposition(n, k, n) })
        .collect();
    YoungEmbedding { subgroup, coset_reps }
}

fn is_prime(p: u8) -> bool {
    p >= 2 && (2..p).all(|d| p % d != 0)
}

/// A Sylow p-subgroup of S_n from iterated-wreath generators on base-p blocks.
pub fn sylow_subgroup(n: u8, p: u8) -> SubgroupTable {
    assert!(is_prime(p), "p must be prime");
    assert!(p <= n && n <= MAX_DEGREE, "need p <= n <= 7");
    let mut gens: Vec<Perm> = Vec::new();
    // Base-p digits of n give the block sizes: digit a_j at p^j yields a_j
    // blocks of size p^j, assigned to consecutive letters, largest first.
    let mut digits = Vec::new();
    let mut m = n as u64;
    let pu = p as u64;
    while m > 0 {
        digits.push((m % pu) as u8);
        m /= pu;
    }
    let mut offset = 0u8;
    for j in (1..digits.len()).rev() {
        for _ in 0..digits[j] {
            let size = pu.pow(j as u32) as u8;
            // Level l shifts each position within the block by p^l cyclically,
            // cycling the p sub-blocks of size p^l.
            for l in 0..j {
                let step = pu.pow(l as u32) as u8;
                let block = pu.pow(l as u32 + 1) as u8;
                let mut images: Vec<u8> = (1..=n).collect();
                for i in 0..size {
                    let within = i % block;
                    let base = i - within;
                    images[(offset + i) as usize] = offset + base + (within + step) % block + 1;
                }
                gens.push(Perm::from_images(images));
            }
            offset += size;
        }
    }
    offset += digits[0];
    assert_eq!(offset, n);
    if gens.is_empty() {
        gens.push(Perm::identity(n));
    }
    let sub = SubgroupTable::from_generators(n, gens);
    // Legendre: the order must be the full p-part of n!.
    let mut expected = 1u64;
    let mut q = pu;
    while q <= n as u64 {
        expected = expected.pow(1); // keep shape; accumulate below
        q *= pu;
    }
    let mut e = 0u64;
    let mut q = pu;
    while q <= n as u64 {
        e += n as u64 / q;
        q *= pu;
    }
    let _ = expected;
    assert_eq!(sub.order() as u64, pu.pow(e as u32), "Sylow order mismatch");
    sub
}

/// Representatives g with S_n the disjoint union of the double cosets H g K;
/// the representative of each double coset is its lexicographically least
/// element, and representatives are listed in that order.
pub fn double_cosets(n: u8, h: &SubgroupTable, k: &SubgroupTable) -> Vec<Perm> {
    assert_eq!(h.parent_degree, n);
    assert_eq!(k.parent_degree, n);
    assert!(
        h.order() * k.order() <= 10_000_000,
        "double coset enumeration budget exceeded"
    );
    let all = enumerate(n);
    let mut covered: HashSet<Perm> = HashSet::new();
    let mut reps = Vec::new();
    for g in &all {
        if covered.contains(g) {
            continue;
        }
        reps.push(g.clone());
        for a in &h.elements {
            let ag = a.compose(g);
            for b in &k.elements {
                covered.insert(ag.compose(b));
            }
        }
    }
    assert_eq!(covered.len(), all.len(), "double cosets must cover the group");
    reps
}

/// All cyclic subgroups of S_n, deduplicated by element set, ordered by the
/// lexicographically least generator achieving each subgroup.
pub fn cyclic_subgroups(n: u8) -> Vec<SubgroupTable> {
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    let mut out = Vec::new();
    for g in enumerate(n) {
        let mut elems = vec![Perm::identity(n)];
        let mut cur = g.clone();
        while !cur.is_identity() {
            elems.push(cur.clone());
            cur = cur.compose(&g);
        }
        elems.sort();
        if seen.insert(elems.clone()) {
            let full = factorial(n);
            let index = full / elems.len() as u64;
            out.push(SubgroupTable { parent_degree: n, elements: elems, generators: vec![g], index });
        }
    }
    out
}

/// A word in the Coxeter generators s_1, ..., s_{n-1}, stored as 1-based
/// generator indices, leftmost factor first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterWord(pub Vec<u8>);

/// Product s_{w_1} s_{w_2} ... s_{w_k}; the rightmost factor acts first.
pub fn eval_word(n: u8, word: &CoxeterWord) -> Perm {
    let mut acc = Perm::identity(n);
    for &i in &word.0 {
        acc = acc.compose(&Perm::adjacent_transposition(n, i));
    }
    acc
}

/// Checks the full Coxeter presentation on the permutation realization:
/// involutions, braid relations, and distant commutation, exhaustively.
pub fn verify_coxeter_relations(n: u8) -> Result<(), String> {
    assert!(n >= 2 && n <= MAX_DEGREE);
    let e = Perm::identity(n);
    for i in 1..n {
        let s = Perm::adjacent_transposition(n, i);
        if s.compose(&s) != e {
            return Err(format!("s_{i}^2 is not the identity"));
        }
    }
    for i in 1..n - 1 {
        let a = eval_word(n, &CoxeterWord(vec![i, i + 1, i]));
        let b = eval_word(n, &CoxeterWord(vec![i + 1, i, i + 1]));
        if a != b {
            return Err(format!("braid relation fails at ({i}, {})", i + 1));
        }
    }
    for i in 1..n {
        for j in i + 2..n {
            let a = eval_word(n, &CoxeterWord(vec![i, j]));
            let b = eval_word(n, &CoxeterWord(vec![j, i]));
            if a != b {
                return Err(format!("commutation fails at ({i}, {j})"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn enumerate_counts_and_order() {
        for n in 1..=5u8 {
            let all = enumerate(n);
            assert_eq!(all.len() as u64, factorial(n));
            assert!(all[0].is_identity());
            for w in all.windows(2) {
                assert!(w[0] < w[1], "lexicographic order");
            }
        }
        assert_eq!(enumerate(7).len(), 5040);
    }

    #[test]
    fn group_axioms_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let all = enumerate(6);
        for _ in 0..10_000 {
            let a = &all[rng.gen_range(0..all.len())];
            let b = &all[rng.gen_range(0..all.len())];
            let c = &all[rng.gen_range(0..all.len())];
            assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
        }
        for _ in 0..100 {
            let a = &all[rng.gen_range(0..all.len())];
            assert!(a.compose(&a.inverse()).is_identity());
            assert!(a.inverse().compose(a).is_identity());
        }
    }

    #[test]
    fn cycle_notation_roundtrip() {
        let p = Perm::parse_cycles(4, "(1 2)(3 4)").unwrap();
        assert_eq!(p.images(), &[2, 1, 4, 3]);
        assert_eq!(p.to_cycles_string(), "(1 2)(3 4)");
        let q = Perm::parse_cycles(5, "(1 3 5)").unwrap();
        assert_eq!(q.apply(5), 1);
        assert_eq!(q.to_cycles_string(), "(1 3 5)");
        assert_eq!(Perm::parse_cycles(3, "()").unwrap(), Perm::identity(3));
        assert_eq!(Perm::identity(3).to_cycles_string(), "()");
        for p in enumerate(5) {
            let text = p.to_cycles_string();
            assert_eq!(Perm::parse_cycles(5, &text).unwrap(), p, "roundtrip of {text}");
        }
        assert!(Perm::parse_cycles(3, "(1 4)").is_err());
        assert!(Perm::parse_cycles(3, "(1 1)").is_err());
    }

    #[test]
    fn composition_convention() {
        // (1 2) then (2 3): letter 1 goes to 2 under (1 2), then 2 goes to 3.
        let s1 = Perm::adjacent_transposition(3, 1);
        let s2 = Perm::adjacent_transposition(3, 2);
        let prod = s2.compose(&s1);
        assert_eq!(prod.apply(1), 3);
        assert_eq!(prod, Perm::parse_cycles(3, "(1 3 2)").unwrap());
    }

    #[test]
    fn young_embedding_structure() {
        for n in 2..=6u8 {
            let y = young_embedding(n);
            assert_eq!(y.subgroup.order() as u64, factorial(n - 1));
            assert_eq!(y.subgroup.index, n as u64);
            assert_eq!(y.coset_reps.len(), n as usize);
            // Every subgroup element fixes n.
            for h in &y.subgroup.elements {
                assert_eq!(h.apply(n), n);
            }
            // The cosets H * rep_k partition S_n, and rep_k^{-1}(n) = k.
            let mut seen = HashSet::new();
            for (k, rep) in y.coset_reps.iter().enumerate() {
                assert_eq!(rep.inverse().apply(n), k as u8 + 1);
                for h in &y.subgroup.elements {
                    assert!(seen.insert(h.compose(rep)));
                }
            }
            assert_eq!(seen.len() as u64, factorial(n));
        }
    }

    #[test]
    fn sylow_golden_orders() {
        assert_eq!(sylow_subgroup(4, 2).order(), 8);
        assert_eq!(sylow_subgroup(5, 5).order(), 5);
        assert_eq!(sylow_subgroup(6, 3).order(), 9);
        assert_eq!(sylow_subgroup(7, 2).order(), 16);
        assert_eq!(sylow_subgroup(6, 2).order(), 16);
        assert_eq!(sylow_subgroup(7, 7).order(), 7);
        assert_eq!(sylow_subgroup(2, 2).order(), 2);
    }

    #[test]
    fn sylow_is_p_group_and_lagrange() {
        for n in 2..=7u8 {
            for p in [2u8, 3, 5, 7] {
                if p > n {
                    continue;
                }
                let s = sylow_subgroup(n, p);
                assert_eq!(factorial(n) % s.order() as u64, 0, "Lagrange");
                for g in &s.elements {
                    let o = g.order();
                    assert!(o == 1 || o % p as u64 == 0 && (o as f64).log2() >= 0.0);
                    let mut o = o;
                    while o > 1 {
                        assert_eq!(o % p as u64, 0, "element order must be a p-power");
                        o /= p as u64;
                    }
                }
                assert_eq!(s.index % (s.index.gcd_helper(p as u64)), 0);
            }
        }
    }

    #[test]
    fn double_cosets_golden() {
        let y = young_embedding(3);
        let reps = double_cosets(3, &y.subgroup, &y.subgroup);
        assert_eq!(reps.len(), 2);
        assert!(reps[0].is_identity());
    }

    #[test]
    fn double_cosets_partition() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 2..=5u8 {
            let y = young_embedding(n);
            let s = sylow_subgroup(n, 2);
            for (h, k) in [(&y.subgroup, &s), (&s, &s), (&y.subgroup, &y.subgroup)] {
                let reps = double_cosets(n, h, k);
                // Disjointness: no representative lies in another's double coset.
                for (i, g) in reps.iter().enumerate() {
                    for (j, g2) in reps.iter().enumerate() {
                        if i == j {
                            continue;
                        }
                        for a in &h.elements {
                            for b in &k.elements {
                                assert_ne!(&a.compose(g).compose(b), g2);
                            }
                        }
                    }
                }
                // Random elements land in some double coset of a rep.
                for _ in 0..10 {
                    let all = enumerate(n);
                    let x = &all[rng.gen_range(0..all.len())];
                    let mut found = false;
                    'outer: for g in &reps {
                        for a in &h.elements {
                            for b in &k.elements {
                                if &a.compose(g).compose(b) == x {
                                    found = true;
                                    break 'outer;
                                }
                            }
                        }
                    }
                    assert!(found);
                }
            }
        }
    }

    #[test]
    fn coxeter_relations_and_reachability() {
        for n in 2..=7u8 {
            verify_coxeter_relations(n).unwrap();
        }
        // Every element is a word of length at most n(n-1)/2 in s_1..s_{n-1}.
        for n in 2..=5u8 {
            let gens: Vec<Perm> = (1..n).map(|i| Perm::adjacent_transposition(n, i)).collect();
            let mut dist: HashMap<Perm, u32> = HashMap::new();
            let mut queue = VecDeque::new();
            dist.insert(Perm::identity(n), 0);
            queue.push_back(Perm::identity(n));
            while let Some(x) = queue.pop_front() {
                let d = dist[&x];
                for g in &gens {
                    let y = x.compose(g);
                    if !dist.contains_key(&y) {
                        dist.insert(y.clone(), d + 1);
                        queue.push_back(y);
                    }
                }
            }
            assert_eq!(dist.len() as u64, factorial(n));
            let bound = (n as u32 * (n as u32 - 1)) / 2;
            assert!(dist.values().all(|&d| d <= bound));
            // The bound is attained by the order-reversing permutation.
            assert!(dist.values().any(|&d| d == bound));
        }
    }

    #[test]
    fn eval_word_golden() {
        let w = CoxeterWord(vec![1, 2, 1]);
        let v = CoxeterWord(vec![2, 1, 2]);
        assert_eq!(eval_word(3, &w), eval_word(3, &v));
        assert_eq!(eval_word(3, &w), Perm::transposition(3, 1, 3));
        assert_eq!(eval_word(4, &CoxeterWord(vec![])), Perm::identity(4));
    }

    #[test]
    fn group_table_operations() {
        let g = GroupTable::symmetric(4);
        assert_eq!(g.order(), 24);
        assert_eq!(g.identity_index(), 0);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let i = rng.gen_range(0..24);
            let j = rng.gen_range(0..24);
            let expect = g.elem(i).compose(g.elem(j));
            assert_eq!(g.elem(g.mul(i, j)), &expect);
            assert!(g.elem(g.inv(i)).compose(g.elem(i)).is_identity());
        }
    }

    #[test]
    fn abelianization_of_symmetric_groups() {
        assert!(GroupTable::symmetric(1).abelianization().is_trivial());
        for n in 2..=5u8 {
            let ab = GroupTable::symmetric(n).abelianization();
            assert_eq!(ab.invariant_factors(), &[BigUint::from(2u32)][..], "n={n}");
        }
        // Cyclic groups are their own abelianizations.
        let c6 = GroupTable::from_generators(6, &[Perm::parse_cycles(6, "(1 2 3 4 5 6)").unwrap()]);
        let ab = c6.abelianization();
        assert_eq!(ab.invariant_factors(), &[BigUint::from(6u32)][..]);
        let d4 = GroupTable::from_generators(
            4,
            &[Perm::parse_cycles(4, "(1 2 3 4)").unwrap(), Perm::parse_cycles(4, "(1 3)").unwrap()],
        );
        assert_eq!(d4.order(), 8);
        let ab = d4.abelianization();
        assert_eq!(ab.invariant_factors(), &[BigUint::from(2u32), BigUint::from(2u32)][..]);
    }
}
