//! Bargmann-Wigner momentum-space components of spin `n/2`.

mod component;
mod massive;
mod massless;
mod multispinor;
mod norm;
mod transform;

pub use component::{default_frame, Amplitudes, BwComponent, DirectionSpec};
pub use massive::{
    extract_massive, extract_pattern_amplitudes, field_equation_residual_massive, project_massive,
    synth_massive,
};
pub use massless::{
    extract_massless, helicity_residual_massless, hertz_eta, hertz_psi, synth_massless,
    wigner_state,
};
pub use multispinor::{apply_slot, contract_full, sym_outer, SymMultiSpinor};
pub use norm::{
    check_directions, contract_t, norm_integrand, norm_integrand_p_form, norm_integrand_with,
    standard_integrand,
};
pub use transform::transform_component;

/// Largest supported spin-doubled rank.
pub const MAX_RANK: usize = 10;

/// Binomial coefficient `C(n, k)` as a float.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}
