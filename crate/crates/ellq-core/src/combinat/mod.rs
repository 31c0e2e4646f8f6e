//! Partitions, symmetric-group characters, the hook-content generating
//! function and Springer symbols of distinguished classes.

pub mod mn;
pub mod partition;
pub mod symbols;

pub use mn::{bipartition_character, mn_character, rim_hooks};
pub use partition::{bipartitions, factorial, partitions, Bipartition, Partition};
pub use symbols::{
    adjacent_flip_reps, distinguished_partitions, flip_adjacent, is_distinguished, separation_check,
    symbol_to_component_rep, triv_symbol, ClassicalKind, ComponentRep, SSymbol,
};

use crate::error::{Error, Result};
use crate::exactq::RatFunc;

/// t^{n(λ)} ∏ (1 + s t^{c}) / ∏ (1 - t^{h}), products over the cells of λ.
pub fn g_poly(lambda: &Partition, t: &RatFunc, s: &RatFunc) -> Result<RatFunc> {
    let mut num = t.pow(lambda.n() as i32)?;
    for c in lambda.contents() {
        num = &num * &(&RatFunc::one() + &(s * &t.pow(c)?));
    }
    let mut den = RatFunc::one();
    for (_, h) in lambda.hook_lengths() {
        den = &den * &(&RatFunc::one() - &t.pow(h as i32)?);
    }
    if den.is_zero() {
        return Err(Error::Arithmetic(format!("hook denominator of {lambda:?} vanishes at this point")));
    }
    num.checked_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::QPoly;

    #[test]
    fn one_cell() {
        let t = RatFunc::q();
        let s = RatFunc::from_int(3);
        let g = g_poly(&Partition::new(vec![1]), &t, &s).unwrap();
        let expect = RatFunc::new(QPoly::from_ints(&[4]), QPoly::from_ints(&[1, -1])).unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn b1_specialization() {
        let q = RatFunc::q();
        let g = g_poly(&Partition::new(vec![1]), &(&q * &q), &(-&q)).unwrap();
        let expect = RatFunc::new(QPoly::from_ints(&[1, -1]), QPoly::from_ints(&[1, 0, -1])).unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn pole_is_reported() {
        assert!(g_poly(&Partition::new(vec![2]), &RatFunc::one(), &RatFunc::zero()).is_err());
    }
}
