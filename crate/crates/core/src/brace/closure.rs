use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::group;
use crate::SubSet;

use super::FiniteSkewBrace;

/// Least sub-skew-brace containing `seed ∪ {0}`.
///
/// Alternates additive and circle subgroup closures until neither adds an
/// element; finite closure under both operations already gives inverses.
pub fn generated_subbrace(brace: &FiniteSkewBrace, seed: &SubSet) -> Result<SubSet> {
    check_parent(brace, seed)?;
    Ok(SubSet::from_bits(close_both(brace, seed.iter())))
}

pub(crate) fn close_both(brace: &FiniteSkewBrace, seed: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let n = brace.order();
    let mut members = group::subgroup_closure(brace.add_flat(), n, seed);
    loop {
        let circ = group::subgroup_closure(brace.circ_flat(), n, members.ones());
        if circ == members {
            return members;
        }
        let add = group::subgroup_closure(brace.add_flat(), n, circ.ones());
        if add == circ {
            return add;
        }
        members = add;
    }
}

/// `B * C`: the sub-skew-brace generated by all `b * c`.
pub fn star_product(brace: &FiniteSkewBrace, left: &SubSet, right: &SubSet) -> Result<SubSet> {
    check_parent(brace, left)?;
    check_parent(brace, right)?;
    let mut stars = FixedBitSet::with_capacity(brace.order());
    for b in left.iter() {
        for c in right.iter() {
            stars.insert(brace.star(b, c));
        }
    }
    Ok(SubSet::from_bits(close_both(brace, stars.ones())))
}

pub(crate) fn check_parent(brace: &FiniteSkewBrace, s: &SubSet) -> Result<()> {
    if s.order() != brace.order() {
        return Err(crate::Error::input(format!(
            "subset of a carrier of order {} used with a brace of order {}",
            s.order(),
            brace.order()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::tests::{r4, t2};

    fn set(n: usize, xs: &[usize]) -> SubSet {
        SubSet::from_indices(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn generated_examples() {
        let r4 = r4();
        assert_eq!(generated_subbrace(&r4, &SubSet::empty(4)).unwrap(), set(4, &[0]));
        // label 4 is index 2
        assert_eq!(generated_subbrace(&r4, &set(4, &[2])).unwrap(), set(4, &[0, 2]));
        assert!(generated_subbrace(&r4, &set(4, &[1])).unwrap().is_full());
    }

    #[test]
    fn star_product_examples() {
        let t2 = t2();
        assert!(star_product(&t2, &SubSet::full(2), &SubSet::full(2)).unwrap().is_zero());
        let r4 = r4();
        let full = SubSet::full(4);
        assert_eq!(star_product(&r4, &full, &full).unwrap(), set(4, &[0, 2]));
        assert!(star_product(&r4, &set(4, &[0]), &full).unwrap().is_zero());
    }

    #[test]
    fn mismatched_parent_is_an_input_error() {
        assert!(generated_subbrace(&r4(), &SubSet::zero(2)).is_err());
    }
}
