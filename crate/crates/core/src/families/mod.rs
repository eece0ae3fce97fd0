//! The M(X) family and the free group of rank two it is compared against.

mod mx;
mod oracle;

pub use mx::{
    is_mx_normal_form, mx_alphabet, mx_ball, mx_ball_with_budget, mx_isometry_check, mx_normal_form,
    mx_normal_form_traced, mx_presentation, mx_successors, mx_truncated_presentation, mx_word_problem,
    IsometryReport, MxNormalForm, MxRules, A, B, C, D, E,
};
pub use oracle::{
    parse_oracle, CofiniteSet, Evens, FiniteSet, MembershipOracle, OracleKind, UltimatelyPeriodic, ORACLE_KINDS,
};

use crate::cayley::{enumerate_ball_with, BallOptions, CayleyBall, UndirectedView};
use crate::error::Result;
use crate::presentation::builtin;

/// Ball of the free group on x, y with reduced words as representatives.
pub fn f2_ball(radius: usize) -> Result<(CayleyBall, UndirectedView)> {
    let ball = enumerate_ball_with(&builtin("f2_group")?, radius, &BallOptions::default())?;
    let view = UndirectedView::from_ball(&ball);
    Ok((ball, view))
}
