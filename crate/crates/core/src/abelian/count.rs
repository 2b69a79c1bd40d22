//! Automorphism, homomorphism and surjection counts.
//!
//! `aut_order` is the closed-form partition formula (Hillar-Rhea); the brute
//! count over endomorphism matrices is kept as a test oracle. Surjections are
//! counted by Möbius inversion of `hom_count` over the subgroup lattice of
//! the target, which stays small in every use.

use super::subgroup::subgroups_with_mobius;
use super::{GroupError, GroupType};

/// |Aut(A)| by the closed-form formula for abelian p-groups.
///
/// With exponents e_1 <= ... <= e_n, d_k = max{l : e_l = e_k} and
/// c_k = min{l : e_l = e_k}:
///
/// |Aut| = prod_k (p^{d_k} - p^{k-1})
///       * prod_j p^{e_j (n - d_j)}
///       * prod_i p^{(e_i - 1)(n - c_i + 1)}
pub fn aut_order(a: &GroupType) -> u128 {
    let p = a.p() as u128;
    let mut e: Vec<u32> = a.lambda().to_vec();
    e.reverse(); // non-decreasing
    let n = e.len();
    if n == 0 {
        return 1;
    }
    let d: Vec<usize> = (0..n).map(|k| (0..n).filter(|&l| e[l] == e[k]).max().unwrap() + 1).collect();
    let c: Vec<usize> = (0..n).map(|k| (0..n).position(|l| e[l] == e[k]).unwrap() + 1).collect();

    let mut out: u128 = 1;
    for k in 0..n {
        out *= p.pow(d[k] as u32) - p.pow(k as u32);
    }
    for j in 0..n {
        out *= p.pow(e[j] * (n - d[j]) as u32);
    }
    for i in 0..n {
        out *= p.pow((e[i] - 1) * (n - c[i] + 1) as u32);
    }
    out
}

/// Brute-force |Aut(A)|: every surjective endomorphism of a finite group is
/// bijective, so this is the surjection count of A onto itself. Test oracle.
pub fn aut_order_brute(a: &GroupType) -> Result<u128, GroupError> {
    sur_count_brute(a, a)
}

/// |Hom(B, A)| = prod over pairs (i, j) of p^{min(lambda_i(B), lambda_j(A))}.
pub fn hom_count(b: &GroupType, a: &GroupType) -> Result<u128, GroupError> {
    if b.p() != a.p() {
        return Err(GroupError::PrimeMismatch(b.p(), a.p()));
    }
    let p = a.p() as u128;
    let mut exp = 0u32;
    for &lb in b.lambda() {
        for &la in a.lambda() {
            exp += lb.min(la);
        }
    }
    if f64::from(exp) * (p as f64).log2() > 126.0 {
        return Err(GroupError::Overflow);
    }
    Ok(p.pow(exp))
}

/// |Hom(G, A)| for a source given by invariant factors (any finite abelian
/// group): `prod_{i,j} gcd(d_i, p^{lambda_j})`.
pub fn hom_count_invariants(inv: &[u64], a: &GroupType) -> u128 {
    let mut out = 1u128;
    for &d in inv {
        for &la in a.lambda() {
            out *= num_integer::gcd(d, a.p().pow(la)) as u128;
        }
    }
    out
}

/// Precomputed subgroup lattice of a target group, for repeated surjection
/// counts against many sources. Holds one (type, Möbius weight) pair per
/// subgroup of `target`.
#[derive(Clone, Debug)]
pub struct SurCounter {
    target: GroupType,
    terms: Vec<(GroupType, i64)>,
}

impl SurCounter {
    pub fn new(target: &GroupType) -> Result<Self, GroupError> {
        let terms = subgroups_with_mobius(target)?;
        Ok(SurCounter { target: target.clone(), terms })
    }

    pub fn target(&self) -> &GroupType {
        &self.target
    }

    /// |Sur(B, target)| by Möbius inversion over the subgroup lattice.
    pub fn count(&self, b: &GroupType) -> Result<u128, GroupError> {
        let mut acc: i128 = 0;
        for (h, mu) in &self.terms {
            acc += *mu as i128 * hom_count(b, h)? as i128;
        }
        debug_assert!(acc >= 0);
        Ok(acc as u128)
    }

    /// |Sur(G, target)| for a source given by invariant factors.
    pub fn count_invariants(&self, inv: &[u64]) -> u128 {
        let mut acc: i128 = 0;
        for (h, mu) in &self.terms {
            acc += *mu as i128 * hom_count_invariants(inv, h) as i128;
        }
        debug_assert!(acc >= 0);
        acc as u128
    }
}

/// |Sur(B, A)|. `A` must be within the subgroup-lattice cap.
pub fn sur_count(b: &GroupType, a: &GroupType) -> Result<u128, GroupError> {
    if b.p() != a.p() {
        return Err(GroupError::PrimeMismatch(b.p(), a.p()));
    }
    SurCounter::new(a)?.count(b)
}

/// |Sur(G, A)| from invariant factors of any finite abelian source.
pub fn sur_count_invariants(inv: &[u64], a: &GroupType) -> Result<u128, GroupError> {
    Ok(SurCounter::new(a)?.count_invariants(inv))
}

/// Brute-force surjection count: enumerate all homs by generator images and
/// test surjectivity via the rank of the reduction mod p. Test oracle.
pub fn sur_count_brute(b: &GroupType, a: &GroupType) -> Result<u128, GroupError> {
    if b.p() != a.p() {
        return Err(GroupError::PrimeMismatch(b.p(), a.p()));
    }
    let mut count = 0u128;
    for_each_hom(b, a, |cols| {
        if columns_span_mod_p(cols, a) {
            count += 1;
        }
    })?;
    Ok(count)
}

pub(crate) const MAX_RANK: usize = 12;

/// Enumerate every homomorphism B -> A by the images of B's generators.
/// `f` receives the image columns (one GroupElement per generator of B).
pub(crate) fn for_each_hom<F: FnMut(&[super::GroupElement])>(
    b: &GroupType,
    a: &GroupType,
    mut f: F,
) -> Result<(), GroupError> {
    let total = hom_count(b, a)?;
    if total > 1u128 << 40 {
        return Err(GroupError::CapExceeded { order: total, cap: 1 << 40 });
    }
    let nb = b.rank();
    let na = a.rank();
    assert!(nb <= MAX_RANK && na <= MAX_RANK);
    let mut cols = vec![a.zero(); nb];
    if nb == 0 || na == 0 {
        f(&cols);
        return Ok(());
    }
    // image of generator j ranges over A[p^{lambda_j(B)}]; coordinate i of
    // that torsion subgroup is step_ij * t for t mod radix_ij
    let mut radix = vec![[0u64; MAX_RANK]; nb];
    let mut step = vec![[0u64; MAX_RANK]; nb];
    for j in 0..nb {
        let lb = b.lambda()[j];
        for i in 0..na {
            let la = a.lambda()[i];
            radix[j][i] = a.p().pow(la.min(lb));
            step[j][i] = a.p().pow(la - la.min(lb));
        }
    }
    let mut counters = vec![[0u64; MAX_RANK]; nb];
    loop {
        f(&cols);
        // odometer over all (j, i), updating the affected column in place
        let mut done = true;
        'adv: for j in 0..nb {
            for i in 0..na {
                counters[j][i] += 1;
                if counters[j][i] < radix[j][i] {
                    cols[j].coords[i] = counters[j][i] * step[j][i];
                    done = false;
                    break 'adv;
                }
                counters[j][i] = 0;
                cols[j].coords[i] = 0;
            }
        }
        if done {
            return Ok(());
        }
    }
}

/// Do the given columns generate A? Equivalent to spanning A/pA (Nakayama):
/// rank of the coordinates mod p must equal the rank of A.
pub(crate) fn columns_span_mod_p(cols: &[super::GroupElement], a: &GroupType) -> bool {
    let na = a.rank();
    if na == 0 {
        return true;
    }
    let k = cols.len();
    if k < na {
        return false;
    }
    let p = a.p();
    let mut rows = [[0u64; MAX_RANK]; MAX_RANK];
    for (j, c) in cols.iter().enumerate() {
        for i in 0..na {
            rows[j][i] = c.coords[i] % p;
        }
    }
    // row-reduce the k x na matrix; columns of the hom span iff rank == na
    let mut rank = 0usize;
    for col in 0..na {
        let Some(pivot) = (rank..k).find(|&r| rows[r][col] != 0) else {
            return false;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col], p);
        for r in 0..k {
            if r != rank && rows[r][col] != 0 {
                let c = rows[r][col] * inv % p;
                for cc in col..na {
                    rows[r][cc] = (rows[r][cc] + (p - c) * rows[rank][cc]) % p;
                }
            }
        }
        rank += 1;
    }
    true
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a not divisible by p
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::super::enumerate_types;
    use super::*;

    #[test]
    fn aut_order_small_cases() {
        assert_eq!(aut_order(&GroupType::cyclic(3, 1)), 2); // units mod 3
        assert_eq!(aut_order(&GroupType::cyclic(3, 2)), 6); // units mod 9
        assert_eq!(aut_order(&GroupType::new(3, vec![1, 1]).unwrap()), 48); // |GL2(F3)|
        assert_eq!(aut_order(&GroupType::trivial(3)), 1);
    }

    #[test]
    fn aut_order_matches_brute_force_p3() {
        for g in enumerate_types(3, 4).unwrap() {
            assert_eq!(aut_order(&g), aut_order_brute(&g).unwrap(), "type {:?}", g.lambda());
        }
    }

    #[test]
    fn aut_order_matches_brute_force_p5() {
        for g in enumerate_types(5, 3).unwrap() {
            assert_eq!(aut_order(&g), aut_order_brute(&g).unwrap(), "type {:?}", g.lambda());
        }
    }

    #[test]
    fn hom_count_examples() {
        let z9 = GroupType::cyclic(3, 2);
        let z3 = GroupType::cyclic(3, 1);
        let g33 = GroupType::new(3, vec![1, 1]).unwrap();
        assert_eq!(hom_count(&z9, &z3).unwrap(), 3);
        assert_eq!(hom_count(&g33, &z9).unwrap(), 9);
        assert_eq!(hom_count(&GroupType::trivial(3), &z9).unwrap(), 1);
        let z5 = GroupType::cyclic(5, 1);
        assert!(hom_count(&z9, &z5).is_err());
    }

    #[test]
    fn hom_count_matches_enumeration() {
        let types = enumerate_types(3, 3).unwrap();
        for b in &types {
            for a in &types {
                let mut n = 0u128;
                for_each_hom(b, a, |_| n += 1).unwrap();
                assert_eq!(n, hom_count(b, a).unwrap());
            }
        }
    }

    #[test]
    fn sur_count_examples() {
        let z9 = GroupType::cyclic(3, 2);
        let z3 = GroupType::cyclic(3, 1);
        let g33 = GroupType::new(3, vec![1, 1]).unwrap();
        assert_eq!(sur_count(&z9, &z3).unwrap(), 2);
        assert_eq!(sur_count(&g33, &z3).unwrap(), 8); // 9 homs, 1 not onto
        assert_eq!(sur_count(&z3, &z9).unwrap(), 0); // no surjection onto larger
        assert_eq!(sur_count(&GroupType::trivial(3), &GroupType::trivial(3)).unwrap(), 1);
    }

    #[test]
    fn sur_count_matches_brute_force() {
        // all pairs with |A|, |B| <= 3^4
        let types = enumerate_types(3, 4).unwrap();
        for b in &types {
            for a in &types {
                assert_eq!(
                    sur_count(b, a).unwrap(),
                    sur_count_brute(b, a).unwrap(),
                    "B={:?} A={:?}",
                    b.lambda(),
                    a.lambda()
                );
            }
        }
    }

    #[test]
    fn hom_count_is_sum_of_sur_counts_over_subgroups() {
        use super::super::subgroup::subgroups_with_types;
        let types = enumerate_types(3, 3).unwrap();
        for a in &types {
            let subs = subgroups_with_types(a).unwrap();
            for b in &types {
                let total: u128 = subs.iter().map(|h| sur_count(b, h).unwrap()).sum();
                assert_eq!(total, hom_count(b, a).unwrap(), "B={:?} A={:?}", b.lambda(), a.lambda());
            }
        }
    }

    #[test]
    fn invariant_factor_source_agrees_with_p_group_source() {
        let a = GroupType::new(3, vec![2, 1]).unwrap();
        let b = GroupType::new(3, vec![3, 1, 1]).unwrap();
        assert_eq!(hom_count_invariants(&b.invariant_factors(), &a), hom_count(&b, &a).unwrap());
        assert_eq!(
            sur_count_invariants(&b.invariant_factors(), &a).unwrap(),
            sur_count(&b, &a).unwrap()
        );
        // composite invariant factors: only the 3-part matters
        assert_eq!(
            sur_count_invariants(&[2, 6, 54, 7], &a).unwrap(),
            sur_count(&GroupType::new(3, vec![3, 1]).unwrap(), &a).unwrap()
        );
    }
}
