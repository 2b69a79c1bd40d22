//! Finite abelian p-groups as exponent partitions.
//!
//! A group is `⊕_i Z/p^{lambda_i}` for a non-increasing partition `lambda`;
//! the empty partition is the trivial group. Everything downstream (measures,
//! curve scans, class-group statistics) indexes its sums and histograms by
//! these types.
//!
//! Operations that walk the elements of a group (orbits, pointed surjection
//! counts, subgroup lattices) are brute force by design and guarded by an
//! order cap; the closed-form counts (`aut_order`, `hom_count`) have no cap.

mod count;
mod orbit;
mod quotient;
mod subgroup;

pub use count::{aut_order, aut_order_brute, hom_count, hom_count_invariants, sur_count, sur_count_brute, sur_count_invariants, SurCounter};
pub use orbit::{canonical_pointed, element_orbits, pointed_sur_count, pointed_sur_count_invariants};
pub use quotient::quotient_by_elements;
pub use subgroup::subgroups_with_mobius;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Order cap for element-walking operations. 3^8; configurable per call via
/// the `*_capped` variants.
pub const DEFAULT_ORDER_CAP: u128 = 6561;

/// Order cap for subgroup-lattice enumeration (targets of surjection
/// counting stay small in every scan).
pub const SUBGROUP_CAP: u128 = 360;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("groups live over different primes: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("group order {order} exceeds brute-force cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("p must be an odd prime, got {0}")]
    BadPrime(u64),
    #[error("exponent partition must be non-increasing and positive: {0:?}")]
    BadPartition(Vec<u32>),
    #[error("element has {got} coordinates, group has {want}")]
    CoordLength { got: usize, want: usize },
    #[error("quotient is not a p-group (invariant factor {0})")]
    NotPPower(i128),
    #[error("count overflow")]
    Overflow,
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Isomorphism type of a finite abelian p-group: `⊕ Z/p^{lambda_i}` with
/// `lambda` non-increasing. The empty partition is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupType {
    p: u64,
    lambda: Vec<u32>,
}

impl GroupType {
    pub fn new(p: u64, lambda: Vec<u32>) -> Result<Self, GroupError> {
        if !is_odd_prime(p) {
            return Err(GroupError::BadPrime(p));
        }
        if lambda.iter().any(|&e| e == 0) || lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(GroupError::BadPartition(lambda));
        }
        Ok(GroupType { p, lambda })
    }

    pub fn trivial(p: u64) -> Self {
        GroupType::new(p, vec![]).expect("trivial group")
    }

    /// Cyclic group Z/p^k (k = 0 gives the trivial group).
    pub fn cyclic(p: u64, k: u32) -> Self {
        let lambda = if k == 0 { vec![] } else { vec![k] };
        GroupType::new(p, lambda).expect("cyclic group")
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.lambda.is_empty()
    }

    pub fn log_order(&self) -> u32 {
        self.lambda.iter().sum()
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.log_order())
    }

    /// Modulus p^{lambda_i} of the i-th coordinate.
    pub fn modulus(&self, i: usize) -> u64 {
        self.p.pow(self.lambda[i])
    }

    /// Invariant factors in ascending divisibility order d_1 | d_2 | ...
    pub fn invariant_factors(&self) -> Vec<u64> {
        self.lambda.iter().rev().map(|&e| self.p.pow(e)).collect()
    }

    /// Group type of the p-part of a group given by invariant factors.
    pub fn from_invariant_factors(p: u64, inv: &[u64]) -> Result<Self, GroupError> {
        let mut lambda: Vec<u32> = inv
            .iter()
            .filter_map(|&d| {
                let mut d = d;
                let mut e = 0u32;
                while d % p == 0 {
                    d /= p;
                    e += 1;
                }
                (e > 0).then_some(e)
            })
            .collect();
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        GroupType::new(p, lambda)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.lambda.len()] }
    }

    pub fn element(&self, coords: Vec<u64>) -> Result<GroupElement, GroupError> {
        if coords.len() != self.lambda.len() {
            return Err(GroupError::CoordLength { got: coords.len(), want: self.lambda.len() });
        }
        let coords = coords.iter().enumerate().map(|(i, &c)| c % self.modulus(i)).collect();
        Ok(GroupElement { coords })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .enumerate()
            .map(|(i, (&x, &y))| (x + y) % self.modulus(i))
            .collect();
        GroupElement { coords }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .enumerate()
            .map(|(i, &x)| if x == 0 { 0 } else { self.modulus(i) - x })
            .collect();
        GroupElement { coords }
    }

    pub fn scalar_mul(&self, k: u64, a: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let m = self.modulus(i) as u128;
                ((k as u128 * x as u128) % m) as u64
            })
            .collect();
        GroupElement { coords }
    }

    /// Rank of an element in the mixed-radix enumeration of the group.
    pub fn index_of(&self, a: &GroupElement) -> u64 {
        let mut idx = 0u64;
        for (i, &c) in a.coords.iter().enumerate() {
            idx = idx * self.modulus(i) + c;
        }
        idx
    }

    pub fn element_at(&self, mut idx: u64) -> GroupElement {
        let mut coords = vec![0u64; self.lambda.len()];
        for i in (0..self.lambda.len()).rev() {
            let m = self.modulus(i);
            coords[i] = idx % m;
            idx /= m;
        }
        GroupElement { coords }
    }

    /// Iterate all elements in mixed-radix order. Caller checks the cap.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order() as u64).map(move |i| self.element_at(i))
    }

    pub fn check_cap(&self, cap: u128) -> Result<(), GroupError> {
        if self.order() > cap {
            return Err(GroupError::CapExceeded { order: self.order(), cap });
        }
        Ok(())
    }

    /// #A[p^k]: number of p^k-torsion elements, `∏ p^{min(k, lambda_i)}`.
    pub fn torsion_count(&self, k: u32) -> u128 {
        self.lambda.iter().map(|&e| (self.p as u128).pow(e.min(k))).product()
    }

    /// #(∧²A)[q-1]. With invariant factors d_1 | d_2 | ... the exterior
    /// square is `⊕_{i<j} Z/d_i`, so the (q-1)-torsion has size
    /// `∏_{i<j} gcd(p^{min(lambda_i,lambda_j)}, q-1)`. Equal to 1 whenever
    /// gcd(q-1, |A|) = 1; this is the component-count bound for scans.
    pub fn ext_square_torsion(&self, q: u64) -> u128 {
        let mut out = 1u128;
        for i in 0..self.lambda.len() {
            for j in i + 1..self.lambda.len() {
                let d = self.p.pow(self.lambda[i].min(self.lambda[j]));
                out *= num_integer::gcd(d, q - 1) as u128;
            }
        }
        out
    }

    /// Human-readable form like `Z/9 x Z/3`, `1` for the trivial group.
    pub fn display(&self) -> String {
        if self.lambda.is_empty() {
            return "1".to_string();
        }
        self.lambda
            .iter()
            .map(|&e| format!("Z/{}", self.p.pow(e)))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Element of a [`GroupType`]; coordinate i is a residue mod p^{lambda_i}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub coords: Vec<u64>,
}

impl GroupElement {
    pub fn order_in(&self, g: &GroupType) -> u64 {
        // order of (x_i) is p^max over i of (lambda_i - v_p(x_i))
        let mut ord = 1u64;
        for (i, &x) in self.coords.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let mut x = x;
            let mut e = g.lambda[i];
            while x % g.p == 0 {
                x /= g.p;
                e -= 1;
            }
            ord = ord.max(g.p.pow(e));
        }
        ord
    }
}

/// A group together with the Aut-orbit of a marked element, identified by
/// the lexicographically least coordinate vector in the orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointedClass {
    pub group: GroupType,
    pub marked: GroupElement,
}

impl PointedClass {
    /// Canonicalize (A, a); fails above the order cap.
    pub fn new(group: GroupType, marked: GroupElement) -> Result<Self, GroupError> {
        canonical_pointed(group, marked, DEFAULT_ORDER_CAP)
    }

    pub fn display(&self) -> String {
        let coords: Vec<String> = self.marked.coords.iter().map(u64::to_string).collect();
        format!("({}, ({}))", self.group.display(), coords.join(","))
    }
}

/// All group types of order p^n for n = 0..=max_log_order, ordered by n and
/// then by descending-lexicographic partition: one type per partition.
pub fn enumerate_types(p: u64, max_log_order: u32) -> Result<Vec<GroupType>, GroupError> {
    if !is_odd_prime(p) {
        return Err(GroupError::BadPrime(p));
    }
    let mut out = Vec::new();
    for n in 0..=max_log_order {
        for part in partitions(n) {
            out.push(GroupType { p, lambda: part });
        }
    }
    Ok(out)
}

/// Partitions of n as non-increasing vectors, in descending lex order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let hi = n.min(max);
        for k in (1..=hi).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
