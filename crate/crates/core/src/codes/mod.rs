//! Codeword statistics, simultaneous-congruence code specifications,
//! membership, brute-force enumeration and the named code families.

mod family;
mod spec;
mod statistic;

pub use family::{
    an_code, binary_vt, blc, exponential_coefficient, han_vinck_morita, helberg, lc, le_nguyen,
    levenshtein, linear_code, make_family, nonbinary_svt, odd_coefficient, shifted_vt,
    tenengolts, ternary_integer, FamilyParams, TenengoltsVariant, FAMILY_NAMES,
};
pub use spec::{AllWords, Budget, CodeSpec, Constraint};
pub use statistic::{weight_sequence, CustomStatistic, Statistic, Word};
