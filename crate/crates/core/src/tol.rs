//! Numerical thresholds shared across modules.

/// Relative tolerance on `p·p` for a momentum to count as null.
pub const NULL: f64 = 1e-10;
/// Relative tolerance on `p·p = m²` for on-shell checks.
pub const SHELL: f64 = 1e-10;
/// Accepted deviation of `det A` from one.
pub const DETERMINANT: f64 = 1e-9;
/// Relative size of the spin eigenvalue below which projectors are refused.
pub const DEGENERATE_SPIN: f64 = 1e-10;
/// Relative size of `t·p` below which a direction counts as orthogonal.
pub const ORTHOGONAL: f64 = 1e-12;
/// Relative size of `p^BB' nu_B nubar_B'` below which a reference spinor is refused.
pub const REFERENCE: f64 = 1e-14;
/// Relative disagreement that flags a mismatched (phi, F) pair.
pub const INCONSISTENT_PAIR: f64 = 1e-8;
/// Relative mismatch between a frame momentum and a field momentum.
pub const FRAME_MATCH: f64 = 1e-10;
