//! Orbits of Aut(A) on the elements of A, canonical pointed classes, and
//! pointed surjection counts.
//!
//! Orbits are computed by breadth-first closure under a generating set of
//! Aut(A): coordinate scalings by a primitive root, transvections
//! e_j -> e_j + p^{max(0, lambda_i - lambda_j)} e_i, and swaps of equal
//! exponents. The test suite checks the resulting partition against full
//! enumeration of Aut on every group of order <= 3^4.

use super::count::{columns_span_mod_p, for_each_hom};
use super::{GroupElement, GroupError, GroupType, PointedClass, DEFAULT_ORDER_CAP};

/// One elementary automorphism, acting on coordinate vectors.
enum Gen {
    /// coords[i] *= unit
    Scale { i: usize, unit: u64 },
    /// coords[i] += c * coords[j]  (i != j), c a multiple of
    /// p^{max(0, lambda_i - lambda_j)} so the map respects orders
    Transvect { i: usize, j: usize, c: u64 },
    /// swap coordinates with equal exponent
    Swap { i: usize, j: usize },
}

impl Gen {
    fn apply(&self, g: &GroupType, x: &GroupElement) -> GroupElement {
        let mut c = x.coords.clone();
        match *self {
            Gen::Scale { i, unit } => {
                let m = g.modulus(i) as u128;
                c[i] = ((c[i] as u128 * unit as u128) % m) as u64;
            }
            Gen::Transvect { i, j, c: t } => {
                let m = g.modulus(i) as u128;
                c[i] = ((c[i] as u128 + t as u128 * c[j] as u128) % m) as u64;
            }
            Gen::Swap { i, j } => c.swap(i, j),
        }
        GroupElement { coords: c }
    }
}

/// Smallest primitive root mod p^k (cyclic for odd p).
fn primitive_root(p: u64, k: u32) -> u64 {
    let m = p.pow(k);
    let phi = m / p * (p - 1);
    let mut factors = Vec::new();
    let mut n = phi;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    'cand: for g in 2..m {
        if g % p == 0 {
            continue;
        }
        for &f in &factors {
            if pow_mod(g, phi / f, m) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("odd prime powers have primitive roots")
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u128;
    let mm = m as u128;
    let mut bb = b as u128 % mm;
    while e > 0 {
        if e & 1 == 1 {
            r = r * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    b = r as u64;
    b
}

fn aut_generators(g: &GroupType) -> Vec<Gen> {
    let n = g.rank();
    let mut gens = Vec::new();
    for i in 0..n {
        gens.push(Gen::Scale { i, unit: primitive_root(g.p(), g.lambda()[i]) });
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (li, lj) = (g.lambda()[i], g.lambda()[j]);
            let c = g.p().pow(li.saturating_sub(lj));
            if c < g.modulus(i) {
                gens.push(Gen::Transvect { i, j, c });
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        if g.lambda()[i] == g.lambda()[i + 1] {
            gens.push(Gen::Swap { i, j: i + 1 });
        }
    }
    gens
}

/// Orbit of one element under Aut(A), as element indices.
fn orbit_of(g: &GroupType, gens: &[Gen], start: &GroupElement) -> Vec<u64> {
    let mut seen = vec![false; g.order() as usize];
    let s = g.index_of(start);
    seen[s as usize] = true;
    let mut queue = vec![s];
    let mut out = vec![s];
    while let Some(x) = queue.pop() {
        let xe = g.element_at(x);
        for gen in gens {
            let y = g.index_of(&gen.apply(g, &xe));
            if !seen[y as usize] {
                seen[y as usize] = true;
                queue.push(y);
                out.push(y);
            }
        }
    }
    out
}

/// Partition of the elements of A into Aut(A)-orbits, each orbit reported as
/// its canonical pointed class together with the orbit size.
pub fn element_orbits(a: &GroupType) -> Result<Vec<(PointedClass, u64)>, GroupError> {
    element_orbits_capped(a, DEFAULT_ORDER_CAP)
}

pub fn element_orbits_capped(a: &GroupType, cap: u128) -> Result<Vec<(PointedClass, u64)>, GroupError> {
    a.check_cap(cap)?;
    let gens = aut_generators(a);
    let order = a.order() as u64;
    let mut assigned = vec![false; order as usize];
    let mut out = Vec::new();
    for idx in 0..order {
        if assigned[idx as usize] {
            continue;
        }
        let orbit = orbit_of(a, &gens, &a.element_at(idx));
        let size = orbit.len() as u64;
        let min = orbit.iter().copied().min().expect("nonempty orbit");
        for i in &orbit {
            assigned[*i as usize] = true;
        }
        out.push((
            PointedClass { group: a.clone(), marked: a.element_at(min) },
            size,
        ));
    }
    // orbit sizes partition the group
    debug_assert_eq!(out.iter().map(|(_, s)| *s as u128).sum::<u128>(), a.order());
    Ok(out)
}

/// Canonicalize a pointed group: replace the marked element by the
/// lexicographically least coordinate vector in its Aut-orbit.
pub fn canonical_pointed(group: GroupType, marked: GroupElement, cap: u128) -> Result<PointedClass, GroupError> {
    group.check_cap(cap)?;
    if marked.coords.len() != group.rank() {
        return Err(GroupError::CoordLength { got: marked.coords.len(), want: group.rank() });
    }
    let gens = aut_generators(&group);
    let orbit = orbit_of(&group, &gens, &marked);
    let min = orbit.iter().copied().min().expect("nonempty orbit");
    let marked = group.element_at(min);
    Ok(PointedClass { group, marked })
}

/// |Sur((B,b),(A,a))|: surjections B -> A taking b to a, by brute force over
/// homomorphisms.
pub fn pointed_sur_count(bb: &PointedClass, aa: &PointedClass) -> Result<u64, GroupError> {
    pointed_sur_count_capped(bb, aa, DEFAULT_ORDER_CAP)
}

pub fn pointed_sur_count_capped(bb: &PointedClass, aa: &PointedClass, cap: u128) -> Result<u64, GroupError> {
    let (b, a) = (&bb.group, &aa.group);
    if b.p() != a.p() {
        return Err(GroupError::PrimeMismatch(b.p(), a.p()));
    }
    b.check_cap(cap)?;
    a.check_cap(cap)?;
    let na = a.rank();
    let mut count = 0u64;
    for_each_hom(b, a, |cols| {
        // image of the marked element under this hom
        let mut img = a.zero();
        for (j, col) in cols.iter().enumerate() {
            for i in 0..na {
                let m = a.modulus(i) as u128;
                img.coords[i] =
                    ((img.coords[i] as u128 + bb.marked.coords[j] as u128 * col.coords[i] as u128) % m) as u64;
            }
        }
        if img == aa.marked && columns_span_mod_p(cols, a) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Pointed surjection count where the source is any finite abelian group
/// given by invariant factors `inv` with a distinguished element `delta`
/// in the corresponding coordinates. Counts surjections onto `aa.group`
/// sending delta to the marked element.
pub fn pointed_sur_count_invariants(
    inv: &[u64],
    delta: &[u64],
    aa: &PointedClass,
) -> Result<u64, GroupError> {
    assert_eq!(inv.len(), delta.len());
    let a = &aa.group;
    let na = a.rank();
    if na == 0 {
        // the trivial target: one (empty) surjection, delta maps to 0 = a
        return Ok(1);
    }
    // image of generator j lies in A[inv_j]; coordinate i ranges over
    // multiples of p^{lambda_i}/gcd(p^{lambda_i}, inv_j)
    let k = inv.len();
    let mut radix = vec![vec![0u64; na]; k];
    let mut step = vec![vec![0u64; na]; k];
    let mut total: u128 = 1;
    for j in 0..k {
        for i in 0..na {
            let m = a.modulus(i);
            let r = num_integer::gcd(m, inv[j]);
            radix[j][i] = r;
            step[j][i] = m / r;
            total *= r as u128;
        }
    }
    if total > 1u128 << 34 {
        return Err(GroupError::CapExceeded { order: total, cap: 1 << 34 });
    }
    let mut counters = vec![vec![0u64; na]; k];
    let mut cols = vec![a.zero(); k];
    let mut count = 0u64;
    loop {
        // delta image and surjectivity
        let mut img = a.zero();
        for (j, col) in cols.iter().enumerate() {
            for i in 0..na {
                let m = a.modulus(i) as u128;
                img.coords[i] = ((img.coords[i] as u128 + delta[j] as u128 * col.coords[i] as u128) % m) as u64;
            }
        }
        if img == aa.marked && columns_span_mod_p(&cols, a) {
            count += 1;
        }
        let mut done = true;
        'adv: for j in 0..k {
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
            return Ok(count);
        }
    }
}
