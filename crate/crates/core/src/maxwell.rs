//! Electromagnetic spinor of a single-frequency-sign Fourier component, its
//! potential form, the stress tensor and the Gross-Kaiser integrand.

use num_complex::Complex64;

use crate::bw::check_directions;
use crate::spinor::{
    epsilon, ivdw, ivdw_upper, lower_dyad, lower_first, max_abs,
    upper_dyad, upper_dyad_complex, FourVector, Generators, Mat2, METRIC,
};
use crate::{tol, Error, Result, Sign};

pub type ComplexVector = [Complex64; 4];
pub type ComplexTensor = [[Complex64; 4]; 4];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Antisymmetric `F^{qr}` with upper indices.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldStrength(ComplexTensor);

impl FieldStrength {
    pub fn new(f: ComplexTensor) -> Result<Self> {
        let mut worst: f64 = 0.0;
        for q in 0..4 {
            for r in 0..4 {
                worst = worst.max((f[q][r] + f[r][q]).norm());
            }
        }
        if worst > 0.0 {
            return Err(Error::NotAntisymmetric(worst));
        }
        Ok(Self(f))
    }

    pub fn zero() -> Self {
        Self([[ZERO; 4]; 4])
    }

    /// Field with `E_i = F^{i0}` and `B = (-F^{23}, -F^{31}, -F^{12})`.
    pub fn from_e_b(e: [Complex64; 3], b: [Complex64; 3]) -> Self {
        let mut f = [[ZERO; 4]; 4];
        for i in 0..3 {
            f[i + 1][0] = e[i];
            f[0][i + 1] = -e[i];
        }
        let pairs = [(2, 3, 0), (3, 1, 1), (1, 2, 2)];
        for (j, k, i) in pairs {
            f[j][k] = -b[i];
            f[k][j] = b[i];
        }
        Self(f)
    }

    pub fn upper(&self) -> &ComplexTensor {
        &self.0
    }

    /// `F_{qr}`.
    pub fn lower(&self) -> ComplexTensor {
        std::array::from_fn(|q| std::array::from_fn(|r| self.0[q][r] * (METRIC[q] * METRIC[r])))
    }

    pub fn electric(&self) -> [Complex64; 3] {
        [self.0[1][0], self.0[2][0], self.0[3][0]]
    }

    /// `B_i = -½ e_{ijk} F^{jk}`.
    pub fn magnetic(&self) -> [Complex64; 3] {
        [-self.0[2][3], -self.0[3][1], -self.0[1][2]]
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |m, z| m.max(z.norm()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for q in 0..4 {
            for r in 0..4 {
                worst = worst.max((self.0[q][r] - other.0[q][r]).norm());
            }
        }
        worst
    }
}

/// Symmetric `φ_{AB}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EmSpinor(pub Mat2);

impl EmSpinor {
    /// `|φ_{01} - φ_{10}|`.
    pub fn asymmetry(&self) -> f64 {
        (self.0[(0, 1)] - self.0[(1, 0)]).norm()
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(|z| z.conj()))
    }
}

/// `φ_{AB} = (i/2) F^{qr} σ_{qrA}{}^Z ε_{ZB}`.
pub fn em_spinor(f: &FieldStrength) -> EmSpinor {
    let g = Generators::new().lowered();
    EmSpinor(contract_generators(f, &g.unprimed))
}

/// `φ̃_{A'B'} = (i/2) F^{qr} σ̄_{qrA'}{}^{Z'} ε_{Z'B'}`; equals `φ̄` for real `F`.
pub fn primed_em_spinor(f: &FieldStrength) -> EmSpinor {
    let g = Generators::new().lowered();
    EmSpinor(contract_generators(f, &g.primed))
}

fn contract_generators(f: &FieldStrength, sigma: &[[Mat2; 4]; 4]) -> Mat2 {
    let mut acc = Mat2::zeros();
    for q in 0..4 {
        for r in 0..4 {
            acc += sigma[q][r] * f.0[q][r];
        }
    }
    acc * epsilon() * Complex64::new(0.0, 0.5)
}

/// `F^{ab}` from `F_{AA'BB'} = φ_{AB} ε_{A'B'} + φ̃_{A'B'} ε_{AB}`.
pub fn field_from_spinors(phi: &EmSpinor, phi_tilde: &EmSpinor) -> FieldStrength {
    let e = epsilon();
    let g: Vec<Mat2> = (0..4).map(ivdw_upper).collect();
    let mut f = [[ZERO; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            let mut acc = ZERO;
            for aa in 0..2 {
                for ap in 0..2 {
                    for bb in 0..2 {
                        for bp in 0..2 {
                            let w = g[a][(aa, ap)] * g[b][(bb, bp)];
                            acc += w
                                * (phi.0[(aa, bb)] * e[(ap, bp)]
                                    + phi_tilde.0[(ap, bp)] * e[(aa, bb)]);
                        }
                    }
                }
            }
            f[a][b] = acc;
        }
    }
    FieldStrength(f)
}

/// Real field `F_{AA'BB'} = φ_{AB} ε_{A'B'} + φ̄_{A'B'} ε_{AB}`.
pub fn field_from_spinor(phi: &EmSpinor) -> FieldStrength {
    field_from_spinors(phi, &phi.conj())
}

fn check_null(p: &FourVector) -> Result<()> {
    if !(p[0] > 0.0) {
        return Err(Error::NotFuturePointing);
    }
    if p.square().abs() > tol::NULL * p[0] * p[0] {
        return Err(Error::NotNull(p.square()));
    }
    Ok(())
}

/// `F^{ab} = ∓i (p^a φ^b - p^b φ^a)` for the potential `φ^a` of the `±` component.
pub fn field_from_potential(a: &ComplexVector, p: &FourVector, energy: Sign) -> FieldStrength {
    let c = Complex64::new(0.0, -energy.value());
    FieldStrength(std::array::from_fn(|q| {
        std::array::from_fn(|r| c * (a[r] * p[q] - a[q] * p[r]))
    }))
}

/// Both index placements `∓i p_{AA'} φ_B{}^{A'}` and `∓i p_{BA'} φ_A{}^{A'}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PotentialSpinor {
    pub first: Mat2,
    pub second: Mat2,
}

impl PotentialSpinor {
    /// `max |first - second|`.
    pub fn asymmetry(&self) -> f64 {
        max_abs(&(self.first - self.second))
    }

    /// Symmetric part as an electromagnetic spinor.
    pub fn spinor(&self) -> EmSpinor {
        EmSpinor((self.first + self.second).scale(0.5))
    }
}

pub fn phi_from_potential(
    a: &ComplexVector,
    p: &FourVector,
    energy: Sign,
) -> Result<PotentialSpinor> {
    check_null(p)?;
    let pl = lower_dyad(p);
    // φ_B{}^{A'} with rows B.
    let mixed = lower_first(&upper_dyad_complex(a));
    let first = pl * mixed.transpose() * Complex64::new(0.0, -energy.value());
    Ok(PotentialSpinor {
        first,
        second: first.transpose(),
    })
}

/// `|p_{AA'} φ^{AA'}| / (|p| |φ|)`.
pub fn lorenz_residual(a: &ComplexVector, p: &FourVector) -> f64 {
    let dot: Complex64 = (0..4).map(|q| a[q] * (p[q] * METRIC[q])).sum();
    let norm = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt() * p.euclidean_norm();
    if norm == 0.0 {
        0.0
    } else {
        dot.norm() / norm
    }
}

/// Stress tensor `T_{ab}` by the spinor and tensor routes.
#[derive(Clone, Debug, PartialEq)]
pub struct StressTensor {
    /// `φ_{AB} φ̃_{A'B'}`.
    pub spinor: ComplexTensor,
    /// `½(¼ g_{ab} F_{cd}F^{cd} - F_{ac} F_b{}^c)`.
    pub tensor: ComplexTensor,
    /// `max |spinor - tensor|`.
    pub residual: f64,
}

impl StressTensor {
    pub fn t00(&self) -> Complex64 {
        self.tensor[0][0]
    }
}

/// `g_a{}^{AA'} g_b{}^{BB'} X_{AB} Y_{A'B'}`.
pub fn world_tensor(x: &Mat2, y: &Mat2) -> ComplexTensor {
    let g: Vec<Mat2> = (0..4).map(ivdw).collect();
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            let mut acc = ZERO;
            for aa in 0..2 {
                for ap in 0..2 {
                    for bb in 0..2 {
                        for bp in 0..2 {
                            acc += g[a][(aa, ap)] * g[b][(bb, bp)] * x[(aa, bb)] * y[(ap, bp)];
                        }
                    }
                }
            }
            acc
        })
    })
}

/// `½(¼ g_{ab} F_{cd}F^{cd} - F_{ac} F_b{}^c)`.
pub fn tensor_stress(f: &FieldStrength) -> ComplexTensor {
    let up = f.upper();
    let low = f.lower();
    let mut inv = ZERO;
    for c in 0..4 {
        for d in 0..4 {
            inv += low[c][d] * up[c][d];
        }
    }
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            let mut acc = ZERO;
            for c in 0..4 {
                acc += low[a][c] * up[b][c] * METRIC[b];
            }
            let g = if a == b { METRIC[a] } else { 0.0 };
            (inv * (0.25 * g) - acc) * 0.5
        })
    })
}

fn max_diff(x: &ComplexTensor, y: &ComplexTensor) -> f64 {
    let mut worst: f64 = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            worst = worst.max((x[a][b] - y[a][b]).norm());
        }
    }
    worst
}

/// Both routes; `InconsistentPair` when `φ` and `F` describe different fields.
pub fn stress_tensor(phi: &EmSpinor, f: &FieldStrength) -> Result<StressTensor> {
    let spinor = world_tensor(&phi.0, &primed_em_spinor(f).0);
    let tensor = tensor_stress(f);
    let residual = max_diff(&spinor, &tensor);
    let scale = f.max_abs().powi(2).max(max_abs(&phi.0).powi(2));
    if residual > tol::INCONSISTENT_PAIR * scale.max(f64::MIN_POSITIVE) && residual > 0.0 {
        return Err(Error::InconsistentPair(residual));
    }
    Ok(StressTensor {
        spinor,
        tensor,
        residual,
    })
}

/// `¼(E·E + B·B)`.
pub fn energy_density(f: &FieldStrength) -> Complex64 {
    let e = f.electric();
    let b = f.magnetic();
    (0..3).map(|i| e[i] * e[i] + b[i] * b[i]).sum::<Complex64>() * 0.25
}

/// `½ p_a p_b φ_c φ^c` for potential-built fields.
pub fn potential_stress(a: &ComplexVector, p: &FourVector) -> ComplexTensor {
    let sq: Complex64 = (0..4).map(|q| a[q] * a[q] * METRIC[q]).sum();
    let pl = p.lowered();
    std::array::from_fn(|x| std::array::from_fn(|y| sq * (0.5 * pl[x] * pl[y])))
}

/// `t_1^a t_2^b φ_{AB} φ̄_{A'B'} / (t_1·p t_2·p)`.
pub fn gk_norm_integrand(
    phi: &EmSpinor,
    p: &FourVector,
    t1: &FourVector,
    t2: &FourVector,
) -> Result<f64> {
    check_directions(&[*t1, *t2], p)?;
    let (u1, u2) = (upper_dyad(t1), upper_dyad(t2));
    let c = phi.conj().0;
    let mut acc = ZERO;
    for aa in 0..2 {
        for ap in 0..2 {
            for bb in 0..2 {
                for bp in 0..2 {
                    acc += u1[(aa, ap)] * u2[(bb, bp)] * phi.0[(aa, bb)] * c[(ap, bp)];
                }
            }
        }
    }
    Ok(acc.re / (t1.dot(p) * t2.dot(p)))
}
