//! Brute-force subgroup lattice of a small abelian p-group, with the Möbius
//! function of the lattice. Correctness over cleverness: targets of
//! surjection counting never exceed a few hundred elements.

use super::{GroupError, GroupType, SUBGROUP_CAP};
use std::collections::{BTreeSet, HashMap};

/// Subgroup generated by a subgroup `base` and one extra element, as an
/// element-index set. Finite abelian closure: saturate sums with a queue;
/// inverses come for free from cycling.
fn close(a: &GroupType, base: &BTreeSet<u64>, extra: u64) -> BTreeSet<u64> {
    let mut set = base.clone();
    let mut queue = Vec::new();
    if set.insert(extra) {
        queue.push(extra);
    }
    while let Some(x) = queue.pop() {
        let xe = a.element_at(x);
        let members: Vec<u64> = set.iter().copied().collect();
        for y in members {
            let s = a.index_of(&a.add(&xe, &a.element_at(y)));
            if set.insert(s) {
                queue.push(s);
            }
        }
    }
    set
}

/// All subgroups of `a` as sorted element-index sets.
fn subgroup_sets(a: &GroupType) -> Result<Vec<BTreeSet<u64>>, GroupError> {
    a.check_cap(SUBGROUP_CAP)?;
    let order = a.order() as u64;
    let trivial: BTreeSet<u64> = std::iter::once(0u64).collect();
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut out: Vec<BTreeSet<u64>> = Vec::new();
    let mut queue = vec![trivial.clone()];
    seen.insert(trivial.iter().copied().collect());
    while let Some(h) = queue.pop() {
        for g in 1..order {
            if h.contains(&g) {
                continue;
            }
            let bigger = close(a, &h, g);
            let key: Vec<u64> = bigger.iter().copied().collect();
            if seen.insert(key) {
                queue.push(bigger);
            }
        }
        out.push(h);
    }
    Ok(out)
}

/// Isomorphism type of a subgroup given by its element set: recover the
/// exponent partition from the tower of p^k-torsion counts (the partial sums
/// of the conjugate partition).
fn type_of_subset(a: &GroupType, set: &BTreeSet<u64>) -> GroupType {
    let p = a.p();
    let max_e = a.lambda().first().copied().unwrap_or(0);
    let mut conj = Vec::new();
    let mut prev = 1u64;
    for k in 1..=max_e {
        let count = set
            .iter()
            .filter(|&&i| {
                let x = a.element_at(i);
                a.scalar_mul(p.pow(k), &x) == a.zero()
            })
            .count() as u64;
        let mut ratio = count / prev;
        let mut c = 0u32;
        while ratio > 1 {
            ratio /= p;
            c += 1;
        }
        conj.push(c);
        prev = count;
    }
    // conjugate back: lambda_i = #{k : conj_k >= i}
    let rank = conj.first().copied().unwrap_or(0);
    let lambda: Vec<u32> = (1..=rank).map(|i| conj.iter().filter(|&&c| c >= i).count() as u32).collect();
    GroupType::new(p, lambda).expect("subgroup type")
}

/// Subgroups of `a` as group types (one entry per subgroup, with repeats).
pub fn subgroups_with_types(a: &GroupType) -> Result<Vec<GroupType>, GroupError> {
    Ok(subgroup_sets(a)?.iter().map(|s| type_of_subset(a, s)).collect())
}

/// Subgroups of `a` paired with the Möbius function mu(H, A) of the subgroup
/// lattice, for inverting `hom = sum over subgroups of sur`.
pub fn subgroups_with_mobius(a: &GroupType) -> Result<Vec<(GroupType, i64)>, GroupError> {
    let sets = subgroup_sets(a)?;
    let n = sets.len();
    let full = sets
        .iter()
        .position(|s| s.len() as u128 == a.order())
        .expect("full subgroup present");
    // mu(H, A) = 1 if H = A; else -sum over K with H < K <= A of mu(K, A)
    let strictly_above: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && sets[i].is_subset(&sets[j])).collect())
        .collect();
    let mut mu: HashMap<usize, i64> = HashMap::new();
    mu.insert(full, 1);
    // by decreasing size, so every strictly-larger subgroup is already done
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(sets[i].len()));
    for &i in &order {
        if i == full {
            continue;
        }
        let s: i64 = strictly_above[i].iter().map(|&j| mu[&j]).sum();
        mu.insert(i, -s);
    }
    Ok((0..n).map(|i| (type_of_subset(a, &sets[i]), mu[&i])).collect())
}
