use std::ops::{Add, Index, Mul, Neg, Sub};

use super::METRIC;

/// A real world-vector with upper components `x^0..x^3` in signature (+,-,-,-).
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self([x0, x1, x2, x3])
    }

    /// Unit time direction `(1, 0, 0, 0)`.
    pub const fn time() -> Self {
        Self([1.0, 0.0, 0.0, 0.0])
    }

    /// Future-pointing on-shell momentum with the given mass and spatial part.
    pub fn on_shell(mass: f64, spatial: [f64; 3]) -> Self {
        let e = (mass * mass + spatial.iter().map(|x| x * x).sum::<f64>()).sqrt();
        Self([e, spatial[0], spatial[1], spatial[2]])
    }

    /// Lower components `x_a = g_ab x^b`.
    pub fn lowered(&self) -> [f64; 4] {
        std::array::from_fn(|a| METRIC[a] * self.0[a])
    }

    pub fn dot(&self, other: &Self) -> f64 {
        (0..4).map(|a| METRIC[a] * self.0[a] * other.0[a]).sum()
    }

    /// Minkowski square `x·x`.
    pub fn square(&self) -> f64 {
        self.dot(self)
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// Euclidean length of the component array, used as a scale for relative tolerances.
    pub fn euclidean_norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    /// Invariant mass `sqrt(max(p·p, 0))`.
    pub fn mass(&self) -> f64 {
        self.square().max(0.0).sqrt()
    }

    /// True when `x^0 > 0` and `x` lies inside or on the light cone.
    pub fn is_future_causal(&self, rel_tol: f64) -> bool {
        self.0[0] > 0.0 && self.square() >= -rel_tol * self.0[0] * self.0[0]
    }

    /// Relative deviation from the light cone, `|x·x| / (x^0)^2`.
    pub fn null_defect(&self) -> f64 {
        let s = self.euclidean_norm();
        if s == 0.0 {
            0.0
        } else {
            self.square().abs() / (s * s)
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (0..4).fold(0.0, |m, a| m.max((self.0[a] - other.0[a]).abs()))
    }
}

impl Index<usize> for FourVector {
    type Output = f64;
    fn index(&self, a: usize) -> &f64 {
        &self.0[a]
    }
}

impl Add for FourVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self(std::array::from_fn(|a| self.0[a] + o.0[a]))
    }
}

impl Sub for FourVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self(std::array::from_fn(|a| self.0[a] - o.0[a]))
    }
}

impl Neg for FourVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|x| -x))
    }
}

impl Mul<f64> for FourVector {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self(self.0.map(|x| x * s))
    }
}

impl Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, v: FourVector) -> FourVector {
        v * self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowering_is_an_involution() {
        let v = FourVector::new(1.5, -0.2, 0.7, 3.0);
        let l = v.lowered();
        let back = FourVector(std::array::from_fn(|a| METRIC[a] * l[a]));
        assert_eq!(back, v);
    }

    #[test]
    fn on_shell_mass() {
        let p = FourVector::on_shell(2.0, [0.3, -1.0, 0.5]);
        assert!((p.square() - 4.0).abs() < 1e-14);
        assert!(p.is_future_causal(0.0));
    }

    #[test]
    fn null_vector_defect() {
        let p = FourVector::new(1.0, 0.0, 0.0, 1.0);
        assert_eq!(p.null_defect(), 0.0);
        assert_eq!(p.mass(), 0.0);
    }
}
