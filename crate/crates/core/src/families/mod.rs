//! Per-degree constructions for equal sums of six like powers.
//!
//! Each family exposes its displayed forms generically over [`Ring`], so the
//! same definition yields a numeric instance (`Rational`) or the symbolic
//! identity (`MultiPoly`) that tests expand to zero.
//!
//! [`Ring`]: crate::Ring

mod conic;
mod deg2;
mod deg3;
mod deg4;
mod deg5;
mod deg6;
mod deg7;
mod deg8;
mod deg9;

pub use conic::{conic_line_parameterize, ConicPoint};
pub use deg2::{deg2_family, deg2_forms, DEG2_BASE};
pub use deg3::{
    deg3_shift_family, deg3_symmetric_condition, deg3_symmetric_family, deg3_symmetric_forms,
    Deg3Shift, DEG3_SHIFT_BASE,
};
pub use deg4::{deg4_family, deg4_forms, DEG4_BASE};
pub use deg5::{
    deg5_66_family, deg5_66_forms, deg5_half_forms, deg5_half_identity, deg5_uvw, Deg5Base, DEG5_BASE_1,
    DEG5_BASE_2,
};
pub use deg6::{
    deg6_case_corrected_display, deg6_case_display, deg6_case_division, deg6_case_division_corrected,
    deg6_case_residual, deg6_family, deg6_forms, CaseDivision, DEG6_CASES, DEG6_CORRECTED,
};
pub use deg7::{
    deg7_conditions, deg7_family, odd_cancel, piezas_forms, shift_extend, shift_forms,
};
pub use deg8::{
    deg8_condition_f, deg8_discriminant, deg8_family, deg8_solve_ab, deg8_triple_forms, deg8_triples,
    ratio_to_ab, sinha_forms, sinha_lift, Deg8Triples,
};
pub use deg9::{
    deg9_condition, deg9_expression, deg9_family, deg9_forms, deg9_k9_residual, deg9_quartic_rhs,
    Deg9Params, Deg9Solution,
};

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::pair::PowerSumPair;
use crate::rational::{denominator_lcm, Rational};

/// Builds a pair from rational forms, multiplying every entry by the lcm of
/// the denominators so the result is integral (order and signs kept).
pub(crate) fn cleared_pair<D: IntoIterator<Item = u32>>(
    lhs: Vec<Rational>,
    rhs: Vec<Rational>,
    degrees: D,
    source: String,
) -> Result<PowerSumPair> {
    let l = Rational::from(denominator_lcm(lhs.iter().chain(&rhs)));
    let scale = |xs: Vec<Rational>| xs.into_iter().map(|x| &x * &l).collect();
    PowerSumPair::new(scale(lhs), scale(rhs), degrees, source)
}

pub(crate) fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| Rational::from(x)).collect()
}
