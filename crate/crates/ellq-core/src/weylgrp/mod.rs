//! Finite Weyl groups: realizations, conjugacy classes, character tables,
//! fake degrees and induction.

pub mod cartan;
pub mod group;
pub mod mat;
pub mod roots;
pub mod weyl;

pub use cartan::{CartanType, GroupSpec};
pub use group::{Class, FiniteGroup, DEFAULT_BOUND};
pub use mat::Mat;
pub use weyl::{poincare_from_exponents, CharacterTable, ClassFunction, WeylGroup};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{QPoly, Rational};

    #[test]
    fn s3_table_matches_mn() {
        let w = WeylGroup::parse("A2").unwrap();
        assert_eq!(w.labels(), &["3", "21", "111"]);
        // classes sorted by size: identity, 3-cycles, transpositions
        assert_eq!(w.class_sizes(), vec![1, 2, 3]);
        assert_eq!(w.table().values, vec![vec![1, 1, 1], vec![2, -1, 0], vec![1, 1, -1]]);
        assert_eq!(w.elliptic_classes(), vec![1]);
    }

    #[test]
    fn g2_basics() {
        let w = WeylGroup::parse("G2").unwrap();
        assert_eq!(w.order(), 12);
        let mut degs: Vec<i64> = (0..w.num_irreps()).map(|i| w.degree(i)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 1, 2, 2]);
        assert_eq!(w.elliptic_classes().len(), 3);
        let sgn = w.fake_degree(&w.sign());
        assert_eq!(sgn.as_polynomial(), Some(&QPoly::q_pow(6)));
        assert_eq!(w.length_generating_function(), w.poincare());
    }

    #[test]
    fn f4_elliptic_classes() {
        let w = WeylGroup::parse("F4").unwrap();
        assert_eq!(w.order(), 1152);
        assert_eq!(w.num_irreps(), 25);
        assert_eq!(w.elliptic_classes().len(), 9);
    }

    #[test]
    fn d4_split_labels() {
        let w = WeylGroup::parse("D4").unwrap();
        assert_eq!(w.num_irreps(), 13);
        assert!(w.labels().iter().any(|l| l == "11.11+"));
        let total: Rational = (0..w.num_irreps()).map(|i| Rational::from_integer((w.degree(i) * w.degree(i)).into())).sum();
        assert_eq!(total, Rational::from_integer(192.into()));
    }

    #[test]
    fn product_table() {
        let w = WeylGroup::parse("A1xA1").unwrap();
        assert_eq!(w.order(), 4);
        assert_eq!(w.labels()[0], "2 x 2");
        assert_eq!(w.elliptic_classes().len(), 1);
    }
}
