use num_complex::Complex64;

use super::{lower_both, lower_first, lower_second, FourVector, Mat2, I, METRIC, ONE, ZERO};

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn pauli(a: usize) -> Mat2 {
    match a {
        0 => Mat2::new(ONE, ZERO, ZERO, ONE),
        1 => Mat2::new(ZERO, ONE, ONE, ZERO),
        2 => Mat2::new(ZERO, -I, I, ZERO),
        3 => Mat2::new(ONE, ZERO, ZERO, -ONE),
        _ => panic!("world index {a} out of range"),
    }
}

/// `g_a^{AA'} = σ_a / √2`, rows `A`, columns `A'`.
pub fn ivdw(a: usize) -> Mat2 {
    pauli(a).scale(FRAC_1_SQRT_2)
}

/// `g^{aAA'}` (world index raised).
pub fn ivdw_upper(a: usize) -> Mat2 {
    ivdw(a).scale(METRIC[a])
}

/// `g_{aAA'}` (spinor indices lowered).
pub fn ivdw_lower(a: usize) -> Mat2 {
    lower_both(&ivdw(a))
}

/// `g^a_{AA'}`, the inverse symbol: `x^a = X^{AA'} g^a_{AA'}`.
pub fn ivdw_mixed(a: usize) -> Mat2 {
    ivdw_lower(a).scale(METRIC[a])
}

/// `Σ_a x^a g_a^{AA'}` for complex components.
pub fn upper_dyad_complex(x: &[Complex64; 4]) -> Mat2 {
    let s = FRAC_1_SQRT_2;
    Mat2::new(
        (x[0] + x[3]) * s,
        (x[1] - I * x[2]) * s,
        (x[1] + I * x[2]) * s,
        (x[0] - x[3]) * s,
    )
}

/// Components `x^a = X^{AA'} g^a_{AA'}` of an upper dyad.
pub fn complex_vector_from_upper(m: &Mat2) -> [Complex64; 4] {
    let s = FRAC_1_SQRT_2;
    [
        (m[(0, 0)] + m[(1, 1)]) * s,
        (m[(0, 1)] + m[(1, 0)]) * s,
        I * (m[(0, 1)] - m[(1, 0)]) * s,
        (m[(0, 0)] - m[(1, 1)]) * s,
    ]
}

/// Real part of [`complex_vector_from_upper`]; exact for Hermitian input.
pub fn vector_from_upper(m: &Mat2) -> FourVector {
    FourVector(complex_vector_from_upper(m).map(|z| z.re))
}

/// `p^{AA'}`.
pub fn upper_dyad(p: &FourVector) -> Mat2 {
    upper_dyad_complex(&p.0.map(|x| Complex64::new(x, 0.0)))
}

/// `p_{AA'}`.
pub fn lower_dyad(p: &FourVector) -> Mat2 {
    lower_both(&upper_dyad(p))
}

/// `p_A^{B'}`, rows `A`, columns `B'`.
pub fn mixed_lower_first(p: &FourVector) -> Mat2 {
    lower_first(&upper_dyad(p))
}

/// `p^A_{B'}`, rows `A`, columns `B'`.
pub fn mixed_lower_second(p: &FourVector) -> Mat2 {
    lower_second(&upper_dyad(p))
}

/// Levi-Civita symbol with `e^{0123} = +1`.
pub fn levi_civita_upper(a: usize, b: usize, c: usize, d: usize) -> f64 {
    let idx = [a, b, c, d];
    for i in 0..4 {
        for j in i + 1..4 {
            if idx[i] == idx[j] {
                return 0.0;
            }
        }
    }
    let mut perm = idx;
    let mut sign = 1.0;
    for i in 0..4 {
        while perm[i] != i {
            let j = perm[i];
            perm.swap(i, j);
            sign = -sign;
        }
    }
    sign
}

/// `e_{abcd} = -e^{abcd}` in Lorentzian signature.
pub fn levi_civita_lower(a: usize, b: usize, c: usize, d: usize) -> f64 {
    -levi_civita_upper(a, b, c, d)
}

/// Lorentz generators in the two chirality representations.
///
/// `unprimed[a][b]` holds `σ^{ab}{_X}{^Y}` and `primed[a][b]` holds
/// `σ̄^{ab}{_{X'}}{^{Y'}}`, both with rows as the lower index.
#[derive(Clone, Debug, PartialEq)]
pub struct Generators {
    pub unprimed: [[Mat2; 4]; 4],
    pub primed: [[Mat2; 4]; 4],
}

impl Generators {
    /// Builds both tables from the Infeld-van der Waerden symbols.
    pub fn new() -> Self {
        let half_over_i = Complex64::new(0.0, -0.5);
        let unprimed = std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                // g^a_{XA'} g^{bYA'} summed over A'.
                let ab = ivdw_mixed(a) * ivdw_upper(b).transpose();
                let ba = ivdw_mixed(b) * ivdw_upper(a).transpose();
                (ab - ba) * half_over_i
            })
        });
        let primed = std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                // g^a_{AX'} g^{bAY'} summed over A.
                let ab = ivdw_mixed(a).transpose() * ivdw_upper(b);
                let ba = ivdw_mixed(b).transpose() * ivdw_upper(a);
                (ab - ba) * half_over_i
            })
        });
        Self { unprimed, primed }
    }

    /// Generators with both world indices lowered, `σ_{ab}`.
    pub fn lowered(&self) -> Self {
        let f = |t: &[[Mat2; 4]; 4]| {
            std::array::from_fn(|a| std::array::from_fn(|b| t[a][b].scale(METRIC[a] * METRIC[b])))
        };
        Self {
            unprimed: f(&self.unprimed),
            primed: f(&self.primed),
        }
    }

    /// Dual `*σ^{ab} = ½ e^{abcd} σ_{cd}` of both tables.
    pub fn dual(&self) -> Self {
        let low = self.lowered();
        let f = |t: &[[Mat2; 4]; 4]| {
            std::array::from_fn(|a| {
                std::array::from_fn(|b| {
                    let mut acc = Mat2::zeros();
                    for c in 0..4 {
                        for d in 0..4 {
                            let e = levi_civita_upper(a, b, c, d);
                            if e != 0.0 {
                                acc += t[c][d].scale(0.5 * e);
                            }
                        }
                    }
                    acc
                })
            })
        };
        Self {
            unprimed: f(&low.unprimed),
            primed: f(&low.primed),
        }
    }
}

impl Default for Generators {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::max_abs;

    #[test]
    fn rest_vector_dyad() {
        let m = upper_dyad(&FourVector::time());
        let s = FRAC_1_SQRT_2;
        assert!(max_abs(&(m - Mat2::identity().scale(s))) < 1e-16);
    }

    #[test]
    fn null_z_vector_dyad() {
        let m = upper_dyad(&FourVector::new(1.0, 0.0, 0.0, 1.0));
        let want = Mat2::new(ONE.scale(2f64.sqrt()), ZERO, ZERO, ZERO);
        assert!(max_abs(&(m - want)) < 1e-15);
    }

    #[test]
    fn inverse_symbol_contracts_to_delta() {
        for a in 0..4 {
            for b in 0..4 {
                let s: Complex64 = ivdw(a).component_mul(&ivdw_mixed(b)).sum();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((s - want).norm() < 1e-15, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn levi_civita_orientation() {
        assert_eq!(levi_civita_upper(0, 1, 2, 3), 1.0);
        assert_eq!(levi_civita_upper(1, 0, 2, 3), -1.0);
        assert_eq!(levi_civita_upper(3, 2, 1, 0), 1.0);
        assert_eq!(levi_civita_upper(0, 0, 2, 3), 0.0);
        assert_eq!(levi_civita_lower(0, 1, 2, 3), -1.0);
    }

    #[test]
    fn generators_vanish_on_diagonal() {
        let g = Generators::new();
        for a in 0..4 {
            assert_eq!(max_abs(&g.unprimed[a][a]), 0.0);
            assert_eq!(max_abs(&g.primed[a][a]), 0.0);
        }
    }

    #[test]
    fn generators_are_traceless() {
        let g = Generators::new();
        for a in 0..4 {
            for b in 0..4 {
                assert!(g.unprimed[a][b].trace().norm() < 1e-15);
                assert!(g.primed[a][b].trace().norm() < 1e-15);
            }
        }
    }
}
