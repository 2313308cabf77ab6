use num_complex::Complex64;

use crate::spinor::{Mat2, Vec2};
use crate::{Error, Result};

use super::binomial;

/// Totally symmetric multispinor with `r` unprimed and `s` primed indices.
///
/// Component `(i, j)` is the common value of every index assignment with `i`
/// ones among the unprimed slots and `j` ones among the primed slots. In the
/// dense expansion bit `l` of the flat index holds the value of slot `l`,
/// unprimed slots first.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMultiSpinor {
    r: usize,
    s: usize,
    comps: Vec<Complex64>,
}

impl SymMultiSpinor {
    pub fn zeros(r: usize, s: usize) -> Self {
        Self {
            r,
            s,
            comps: vec![Complex64::new(0.0, 0.0); (r + 1) * (s + 1)],
        }
    }

    /// Builds from graded components laid out row-major in `(i, j)`.
    pub fn from_components(r: usize, s: usize, comps: Vec<Complex64>) -> Result<Self> {
        let want = (r + 1) * (s + 1);
        if comps.len() != want {
            return Err(Error::valence(want, comps.len()));
        }
        Ok(Self { r, s, comps })
    }

    /// Rank-zero multispinor holding the scalar `z`.
    pub fn scalar(z: Complex64) -> Self {
        Self {
            r: 0,
            s: 0,
            comps: vec![z],
        }
    }

    pub fn unprimed(&self) -> usize {
        self.r
    }

    pub fn primed(&self) -> usize {
        self.s
    }

    pub fn rank(&self) -> usize {
        self.r + self.s
    }

    pub fn components(&self) -> &[Complex64] {
        &self.comps
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.comps[i * (self.s + 1) + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.comps[i * (self.s + 1) + j] = z;
    }

    fn class_of(&self, idx: usize) -> (usize, usize) {
        let low = (1usize << self.r) - 1;
        (
            (idx & low).count_ones() as usize,
            (idx >> self.r).count_ones() as usize,
        )
    }

    /// Dense `2^{r+s}` array of all index values.
    pub fn to_dense(&self) -> Vec<Complex64> {
        (0..1usize << self.rank())
            .map(|idx| {
                let (i, j) = self.class_of(idx);
                self.get(i, j)
            })
            .collect()
    }

    /// Symmetric part of a dense array, averaging each index class.
    pub fn from_dense(r: usize, s: usize, dense: &[Complex64]) -> Result<Self> {
        if dense.len() != 1usize << (r + s) {
            return Err(Error::valence(1usize << (r + s), dense.len()));
        }
        let mut out = Self::zeros(r, s);
        for (idx, z) in dense.iter().enumerate() {
            let (i, j) = out.class_of(idx);
            out.comps[i * (s + 1) + j] += z;
        }
        for i in 0..=r {
            for j in 0..=s {
                let w = binomial(r, i) * binomial(s, j);
                out.comps[i * (s + 1) + j] /= w;
            }
        }
        Ok(out)
    }

    /// Complex conjugate; unprimed and primed slots swap roles.
    pub fn conj(&self) -> Self {
        let mut out = Self::zeros(self.s, self.r);
        for i in 0..=self.r {
            for j in 0..=self.s {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self {
            r: self.r,
            s: self.s,
            comps: self.comps.iter().map(|c| c * z).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            r: self.r,
            s: self.s,
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect(),
        })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if (self.r, self.s) != (other.r, other.s) {
            return Err(Error::valence(
                format!("({}, {})", self.r, self.s),
                format!("({}, {})", other.r, other.s),
            ));
        }
        Ok(())
    }

    /// `Σ |ψ|²` over all dense index values.
    pub fn dense_norm_sqr(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..=self.r {
            for j in 0..=self.s {
                acc += binomial(self.r, i) * binomial(self.s, j) * self.get(i, j).norm_sqr();
            }
        }
        acc
    }

    /// `Σ conj(self) other` over all dense index values.
    pub fn dense_inner(&self, other: &Self) -> Result<Complex64> {
        self.same_shape(other)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..=self.r {
            for j in 0..=self.s {
                let w = binomial(self.r, i) * binomial(self.s, j);
                acc += self.get(i, j).conj() * other.get(i, j) * w;
            }
        }
        Ok(acc)
    }

    pub fn max_abs(&self) -> f64 {
        self.comps.iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    /// `max |self - other|` over graded components; infinite on shape mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.same_shape(other).is_err() {
            return f64::INFINITY;
        }
        self.comps
            .iter()
            .zip(&other.comps)
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }

    pub fn is_finite(&self) -> bool {
        self.comps.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Applies `a` to every unprimed slot and `b` to every primed slot,
    /// `ψ_X ↦ M_X^Y ψ_Y`.
    pub fn map_slots(&self, a: &Mat2, b: &Mat2) -> Self {
        let mut dense = self.to_dense();
        let n = self.rank();
        for l in 0..n {
            apply_slot(&mut dense, l, if l < self.r { a } else { b });
        }
        Self::from_dense(self.r, self.s, &dense).expect("shape preserved")
    }
}

/// `v ↦ M v` on slot `l` of a dense multi-index array.
pub fn apply_slot(dense: &mut [Complex64], l: usize, m: &Mat2) {
    let bit = 1usize << l;
    for idx in 0..dense.len() {
        if idx & bit == 0 {
            let (x0, x1) = (dense[idx], dense[idx | bit]);
            dense[idx] = m[(0, 0)] * x0 + m[(0, 1)] * x1;
            dense[idx | bit] = m[(1, 0)] * x0 + m[(1, 1)] * x1;
        }
    }
}

/// Coefficients of `Π_l (v_l[0] + x v_l[1])`, i.e. the sums over all ways of
/// picking `i` factors to contribute their second component.
fn elementary(factors: &[Vec2]) -> Vec<Complex64> {
    let mut poly = vec![Complex64::new(1.0, 0.0)];
    for v in factors {
        let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c * v[0];
            next[i + 1] += c * v[1];
        }
        poly = next;
    }
    poly
}

/// Symmetrised tensor product `κ_{(A_1} … λ_{A'_s)}` of unprimed and primed factors.
pub fn sym_outer(unprimed: &[Vec2], primed: &[Vec2]) -> SymMultiSpinor {
    let (r, s) = (unprimed.len(), primed.len());
    let eu = elementary(unprimed);
    let ep = elementary(primed);
    let mut out = SymMultiSpinor::zeros(r, s);
    for i in 0..=r {
        for j in 0..=s {
            out.set(i, j, eu[i] * ep[j] / (binomial(r, i) * binomial(s, j)));
        }
    }
    out
}

/// Full contraction `S_{A_1…A'_s} κ^{A_1} … λ^{A'_s}`.
pub fn contract_full(s: &SymMultiSpinor, unprimed: &[Vec2], primed: &[Vec2]) -> Result<Complex64> {
    if unprimed.len() != s.r {
        return Err(Error::valence(format!("{} unprimed", s.r), unprimed.len()));
    }
    if primed.len() != s.s {
        return Err(Error::valence(format!("{} primed", s.s), primed.len()));
    }
    let eu = elementary(unprimed);
    let ep = elementary(primed);
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..=s.r {
        for j in 0..=s.s {
            acc += s.get(i, j) * eu[i] * ep[j];
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::{random_complex, random_spinor, Spinor};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_sym<R: rand::Rng>(r: usize, s: usize, rng: &mut R) -> SymMultiSpinor {
        let comps = (0..(r + 1) * (s + 1)).map(|_| random_complex(rng)).collect();
        SymMultiSpinor::from_components(r, s, comps).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Average over all permutations within the unprimed and primed groups.
    fn brute_symmetrize(r: usize, s: usize, dense: &[Complex64]) -> Vec<Complex64> {
        let pu = permutations(r);
        let pp = permutations(s);
        let count = (pu.len() * pp.len()) as f64;
        (0..dense.len())
            .map(|idx| {
                let mut acc = Complex64::new(0.0, 0.0);
                for a in &pu {
                    for b in &pp {
                        let mut src = 0;
                        for l in 0..r {
                            src |= ((idx >> a[l]) & 1) << l;
                        }
                        for l in 0..s {
                            src |= ((idx >> (r + b[l])) & 1) << (r + l);
                        }
                        acc += dense[src];
                    }
                }
                acc / count
            })
            .collect()
    }

    fn brute_outer(unprimed: &[Vec2], primed: &[Vec2]) -> Vec<Complex64> {
        let all: Vec<&Vec2> = unprimed.iter().chain(primed).collect();
        (0..1usize << all.len())
            .map(|idx| {
                all.iter()
                    .enumerate()
                    .fold(Complex64::new(1.0, 0.0), |acc, (l, v)| acc * v[(idx >> l) & 1])
            })
            .collect()
    }

    #[test]
    fn rank_one_contraction() {
        let w = Spinor::real(0.0, 2f64.powf(-0.25));
        let pi = Spinor::real(2f64.powf(0.25), 0.0);
        let s = sym_outer(&[w.lower().0], &[]);
        let c = contract_full(&s, &[pi.0], &[]).unwrap();
        assert!((c - w.lower().contract(&pi)).norm() < 1e-15);
    }

    #[test]
    fn outer_is_symmetric_in_factors() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (a, b) = (random_spinor(&mut rng).0, random_spinor(&mut rng).0);
        assert!(sym_outer(&[a, b], &[]).max_abs_diff(&sym_outer(&[b, a], &[])) < 1e-15);
    }

    #[test]
    fn dense_expansion_is_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (r, s) in [(3, 0), (2, 2), (1, 3), (0, 4)] {
            let d = random_sym(r, s, &mut rng).to_dense();
            let sym = brute_symmetrize(r, s, &d);
            let worst = d.iter().zip(&sym).fold(0.0f64, |m, (a, b)| m.max((a - b).norm()));
            assert!(worst < 1e-13);
        }
    }

    #[test]
    fn outer_matches_permutation_average() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (r, s) in [(3, 0), (2, 1), (2, 2), (1, 3)] {
            let u: Vec<Vec2> = (0..r).map(|_| random_spinor(&mut rng).0).collect();
            let v: Vec<Vec2> = (0..s).map(|_| random_spinor(&mut rng).0).collect();
            let want = brute_symmetrize(r, s, &brute_outer(&u, &v));
            let got = sym_outer(&u, &v).to_dense();
            let worst = got.iter().zip(&want).fold(0.0f64, |m, (a, b)| m.max((a - b).norm()));
            assert!(worst < 1e-13, "{r},{s}");
        }
    }

    #[test]
    fn contraction_matches_dense_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for (r, s) in [(2, 2), (4, 0), (1, 3)] {
            let t = random_sym(r, s, &mut rng);
            let u: Vec<Vec2> = (0..r).map(|_| random_spinor(&mut rng).0).collect();
            let v: Vec<Vec2> = (0..s).map(|_| random_spinor(&mut rng).0).collect();
            let want: Complex64 = t
                .to_dense()
                .iter()
                .zip(brute_outer(&u, &v))
                .map(|(a, b)| a * b)
                .sum();
            let got = contract_full(&t, &u, &v).unwrap();
            assert!((got - want).norm() < 1e-12 * (1.0 + want.norm()));
        }
    }

    #[test]
    fn wrong_counts_are_rejected() {
        let t = SymMultiSpinor::zeros(2, 1);
        let v = Vec2::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        assert!(matches!(
            contract_full(&t, &[v], &[v]),
            Err(Error::ValenceMismatch { .. })
        ));
    }

    #[test]
    fn dense_round_trip_and_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let t = random_sym(3, 2, &mut rng);
        let d = t.to_dense();
        assert!(SymMultiSpinor::from_dense(3, 2, &d).unwrap().max_abs_diff(&t) < 1e-15);
        let n: f64 = d.iter().map(|z| z.norm_sqr()).sum();
        assert!((n - t.dense_norm_sqr()).abs() < 1e-12 * n);
    }

    #[test]
    fn conjugate_swaps_valence() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let t = random_sym(2, 1, &mut rng);
        let c = t.conj();
        assert_eq!((c.unprimed(), c.primed()), (1, 2));
        assert_eq!(c.get(1, 0), t.get(0, 1).conj());
    }

    #[test]
    fn slot_map_matches_outer_of_mapped_factors() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let u: Vec<Vec2> = (0..2).map(|_| random_spinor(&mut rng).0).collect();
        let v: Vec<Vec2> = (0..2).map(|_| random_spinor(&mut rng).0).collect();
        let a = Mat2::new(
            random_complex(&mut rng),
            random_complex(&mut rng),
            random_complex(&mut rng),
            random_complex(&mut rng),
        );
        let b = a.adjoint();
        let mapped = sym_outer(&u, &v).map_slots(&a, &b);
        let mu: Vec<Vec2> = u.iter().map(|x| a * x).collect();
        let mv: Vec<Vec2> = v.iter().map(|x| b * x).collect();
        assert!(mapped.max_abs_diff(&sym_outer(&mu, &mv)) < 1e-13);
    }
}
