//! Rational points on Weierstrass curves and the quartic models that feed
//! the degree-8 and degree-9 families.

mod curve;
mod deg8;
mod deg9;
mod quartic;

pub use curve::{integrality_check, CurvePoint, WeierstrassCurve};
pub use deg8::{
    deg8_base, deg8_curve, deg8_model, deg8_q, deg8_quartic_to_weier, deg8_weier_to_quartic, Deg8Bridge,
};
pub use deg9::{deg9_base, deg9_bridge, deg9_curve, deg9_model, deg9_p};
pub use quartic::{generate_parameters, quartic_double, Bridge, QuarticBridge, QuarticModel, QuarticPoint};
