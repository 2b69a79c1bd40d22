//! Quotients of a p-group by the subgroup generated by a list of elements,
//! via Smith normal form of the relation matrix.

use crate::snf::{cokernel_invariants, IntMat};

use super::{GroupElement, GroupError, GroupType};

/// A / <g_1, ..., g_u>. Relations: the coordinate lattice p^{lambda_i} e_i
/// plus one row per g; the quotient's invariant factors come out of the SNF
/// diagonal and must be p-powers.
pub fn quotient_by_elements(a: &GroupType, gs: &[GroupElement]) -> Result<GroupType, GroupError> {
    let n = a.rank();
    if n == 0 {
        return Ok(a.clone());
    }
    for g in gs {
        if g.coords.len() != n {
            return Err(GroupError::CoordLength { got: g.coords.len(), want: n });
        }
    }
    let mut rows: Vec<Vec<i128>> = Vec::with_capacity(n + gs.len());
    for i in 0..n {
        let mut row = vec![0i128; n];
        row[i] = a.modulus(i) as i128;
        rows.push(row);
    }
    for g in gs {
        rows.push(g.coords.iter().map(|&c| c as i128).collect());
    }
    let inv = cokernel_invariants(&IntMat::from_rows(&rows)).expect("relation lattice has full rank");
    let mut lambda = Vec::new();
    for d in inv {
        let mut d = d;
        let mut e = 0u32;
        while d % a.p() as i128 == 0 {
            d /= a.p() as i128;
            e += 1;
        }
        if d != 1 {
            return Err(GroupError::NotPPower(d));
        }
        lambda.push(e);
    }
    lambda.sort_unstable_by(|x, y| y.cmp(x));
    GroupType::new(a.p(), lambda)
}

#[cfg(test)]
mod tests {
    use super::super::enumerate_types;
    use super::*;

    #[test]
    fn quotient_examples() {
        let z9 = GroupType::cyclic(3, 2);
        let q = quotient_by_elements(&z9, &[z9.element(vec![3]).unwrap()]).unwrap();
        assert_eq!(q, GroupType::cyclic(3, 1));

        let g33 = GroupType::new(3, vec![1, 1]).unwrap();
        let q = quotient_by_elements(&g33, &[g33.element(vec![1, 0]).unwrap()]).unwrap();
        assert_eq!(q, GroupType::cyclic(3, 1));

        // quotient by the trivial element changes nothing
        let q = quotient_by_elements(&z9, &[z9.element(vec![0]).unwrap()]).unwrap();
        assert_eq!(q, z9);
    }

    #[test]
    fn quotient_by_nothing_and_by_generators() {
        for a in enumerate_types(3, 4).unwrap() {
            assert_eq!(quotient_by_elements(&a, &[]).unwrap(), a);
            // quotient by a full generating set is trivial
            let gens: Vec<GroupElement> = (0..a.rank())
                .map(|i| {
                    let mut c = vec![0u64; a.rank()];
                    c[i] = 1;
                    GroupElement { coords: c }
                })
                .collect();
            assert_eq!(quotient_by_elements(&a, &gens).unwrap(), GroupType::trivial(3));
        }
    }

    #[test]
    fn quotient_order_matches_subgroup_index() {
        // |A / <g>| * |<g>| = |A|, and <g> is cyclic of the element's order
        let a = GroupType::new(3, vec![2, 1, 1]).unwrap();
        for g in a.elements() {
            let ord = g.order_in(&a) as u128;
            let q = quotient_by_elements(&a, &[g]).unwrap();
            assert_eq!(q.order() * ord, a.order());
        }
    }
}
