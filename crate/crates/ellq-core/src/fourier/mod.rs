//! Lusztig's nonabelian Fourier transform and the data built on it.

pub mod family;
pub mod small;

pub use family::{ef_induction_check, ef_map, generic_degree, generic_degrees, plancherel_defect, Family, FamilyData};
pub use small::{CentralizerChar, FourierBlock, MPair, SmallGroup};
