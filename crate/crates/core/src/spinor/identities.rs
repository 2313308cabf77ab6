//! Residuals of the exact spinor identities, evaluated over all index values.

use num_complex::Complex64;

use super::{
    epsilon, ivdw, ivdw_mixed, ivdw_upper, lower_dyad, max_abs, FourVector, Generators, Mat2, I,
    METRIC,
};

/// Max-abs deviation of `p_{AB'} p_{BA'} = p_a p_b - (p·p / 2) g_{ab}` over all `(a, b)`.
pub fn trace_reversal_residual(p: &FourVector) -> f64 {
    let pl = lower_dyad(p);
    let low = p.lowered();
    let m2 = p.square();
    let mut worst: f64 = 0.0;
    for a in 0..4 {
        let ga = ivdw(a);
        for b in 0..4 {
            let gb = ivdw(b);
            let mut lhs = Complex64::new(0.0, 0.0);
            for ua in 0..2 {
                for pa in 0..2 {
                    for ub in 0..2 {
                        for pb in 0..2 {
                            lhs += ga[(ua, pa)] * gb[(ub, pb)] * pl[(ua, pb)] * pl[(ub, pa)];
                        }
                    }
                }
            }
            let g = if a == b { METRIC[a] } else { 0.0 };
            let rhs = low[a] * low[b] - 0.5 * m2 * g;
            worst = worst.max((lhs - rhs).norm());
        }
    }
    worst
}

/// `g^a_{XA'} g^{bYA'}` (unprimed) and `g^a_{AX'} g^{bAY'}` (primed).
fn products(a: usize, b: usize) -> (Mat2, Mat2) {
    (
        ivdw_mixed(a) * ivdw_upper(b).transpose(),
        ivdw_mixed(a).transpose() * ivdw_upper(b),
    )
}

fn metric(a: usize, b: usize) -> f64 {
    if a == b {
        METRIC[a]
    } else {
        0.0
    }
}

/// Residual of the symmetric Infeld-van der Waerden relations
/// `g^a_{XA'} g^{bYA'} + g^b_{XA'} g^{aYA'} = g^{ab} δ_X^Y` and their primed analogue.
pub fn iw_symmetric_residual() -> f64 {
    let mut worst: f64 = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            let (u_ab, p_ab) = products(a, b);
            let (u_ba, p_ba) = products(b, a);
            let id = Mat2::identity().scale(metric(a, b));
            worst = worst.max(max_abs(&(u_ab + u_ba - id)));
            worst = worst.max(max_abs(&(p_ab + p_ba - id)));
        }
    }
    worst
}

/// Residual of `g^a_{XA'} g^{bYA'} = ½ g^{ab} δ_X^Y + i σ^{ab}{_X}{^Y}` and the primed analogue.
pub fn iw_product_residual(generators: &Generators) -> f64 {
    let mut worst: f64 = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            let (u, p) = products(a, b);
            let id = Mat2::identity().scale(0.5 * metric(a, b));
            worst = worst.max(max_abs(&(u - id - generators.unprimed[a][b] * I)));
            worst = worst.max(max_abs(&(p - id - generators.primed[a][b] * I)));
        }
    }
    worst
}

/// Residual of `σ^{ab} = -σ^{ba}` in both tables.
pub fn generator_antisymmetry_residual(generators: &Generators) -> f64 {
    let mut worst: f64 = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            worst = worst.max(max_abs(&(generators.unprimed[a][b] + generators.unprimed[b][a])));
            worst = worst.max(max_abs(&(generators.primed[a][b] + generators.primed[b][a])));
        }
    }
    worst
}

/// Residual between the world-index generators converted to spinor indices and
/// the purely spinor expressions
/// `σ_{AA'BB'XY} = (1/2i) ε_{A'B'}(ε_{AX}ε_{BY} + ε_{BX}ε_{AY})` and
/// `σ̄_{AA'BB'X'Y'} = (1/2i) ε_{AB}(ε_{A'X'}ε_{B'Y'} + ε_{B'X'}ε_{A'Y'})`.
pub fn spinor_form_residual(generators: &Generators) -> f64 {
    let e = epsilon();
    let low = generators.lowered();
    let half_over_i = Complex64::new(0.0, -0.5);
    // σ_{ab X}^Z ε_{ZY}: last index lowered.
    let u: Vec<Vec<Mat2>> = (0..4)
        .map(|a| (0..4).map(|b| low.unprimed[a][b] * e).collect())
        .collect();
    let p: Vec<Vec<Mat2>> = (0..4)
        .map(|a| (0..4).map(|b| low.primed[a][b] * e).collect())
        .collect();
    let g: Vec<Mat2> = (0..4).map(ivdw_mixed).collect();
    let mut worst: f64 = 0.0;
    for ua in 0..2 {
        for pa in 0..2 {
            for ub in 0..2 {
                for pb in 0..2 {
                    for x in 0..2 {
                        for y in 0..2 {
                            let mut wu = Complex64::new(0.0, 0.0);
                            let mut wp = Complex64::new(0.0, 0.0);
                            for a in 0..4 {
                                for b in 0..4 {
                                    let w = g[a][(ua, pa)] * g[b][(ub, pb)];
                                    wu += w * u[a][b][(x, y)];
                                    wp += w * p[a][b][(x, y)];
                                }
                            }
                            let su = half_over_i
                                * e[(pa, pb)]
                                * (e[(ua, x)] * e[(ub, y)] + e[(ub, x)] * e[(ua, y)]);
                            let sp = half_over_i
                                * e[(ua, ub)]
                                * (e[(pa, x)] * e[(pb, y)] + e[(pb, x)] * e[(pa, y)]);
                            worst = worst.max((wu - su).norm()).max((wp - sp).norm());
                        }
                    }
                }
            }
        }
    }
    worst
}

/// Residual of the duality relations `*σ^{ab} = -i σ^{ab}` and `*σ̄^{ab} = +i σ̄^{ab}`.
pub fn duality_residual(generators: &Generators) -> f64 {
    let d = generators.dual();
    let mut worst: f64 = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            worst = worst.max(max_abs(&(d.unprimed[a][b] + generators.unprimed[a][b] * I)));
            worst = worst.max(max_abs(&(d.primed[a][b] - generators.primed[a][b] * I)));
        }
    }
    worst
}
