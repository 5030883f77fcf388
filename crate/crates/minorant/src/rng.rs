//! Deterministic, stream-splittable random number generation.
//!
//! A [`RngStream`] is addressed by `(master_seed, stream_id)`. The generator
//! behind it is counter-based (ChaCha8), so distinct stream ids share no
//! state and any stream can be recreated from its address alone. Parallel
//! Monte Carlo loops give replica `i` the stream `base + i` and stay
//! reproducible under any thread count.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::{Error, Result};

/// A single, reproducible random stream.
///
/// Identical `(master_seed, stream_id)` pairs reproduce identical sample
/// sequences; distinct stream ids yield independent streams. Streams are
/// single-owner: move them between threads, never share one.
#[derive(Debug, Clone)]
pub struct RngStream {
    master_seed: u64,
    stream_id: u64,
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn new(master_seed: u64, stream_id: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(master_seed);
        inner.set_stream(stream_id);
        Self {
            master_seed,
            stream_id,
            inner,
        }
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// A fresh stream under the same master seed.
    pub fn stream(&self, stream_id: u64) -> Self {
        Self::new(self.master_seed, stream_id)
    }

    /// Uniform on the open interval (0, 1); endpoints excluded by
    /// construction (offset 53-bit lattice).
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
            + 1.0 / 18_014_398_509_481_984.0
    }

    /// Standard normal draw.
    #[inline]
    pub fn normal(&mut self) -> f64 {
        self.inner.sample(StandardNormal)
    }

    /// Exponential with the given rate (> 0).
    #[inline]
    pub fn exponential(&mut self, rate: f64) -> f64 {
        assert!(rate > 0.0, "exponential rate must be positive");
        let e: f64 = self.inner.sample(Exp1);
        e / rate
    }

    /// Gamma with the given shape and unit rate.
    ///
    /// Shape 1/2 is drawn exactly as Z^2/2, shape 1 as an exponential, shape
    /// 3/2 as their sum; other positive shapes use Marsaglia-Tsang.
    pub fn gamma(&mut self, shape: f64) -> Result<f64> {
        if !(shape > 0.0) {
            return Err(Error::Domain {
                what: "gamma shape",
                value: shape,
            });
        }
        if shape == 0.5 {
            let z = self.normal();
            return Ok(0.5 * z * z);
        }
        if shape == 1.0 {
            return Ok(self.exponential(1.0));
        }
        if shape == 1.5 {
            let z = self.normal();
            return Ok(0.5 * z * z + self.exponential(1.0));
        }
        Ok(self.gamma_marsaglia_tsang(shape))
    }

    fn gamma_marsaglia_tsang(&mut self, shape: f64) -> f64 {
        if shape < 1.0 {
            let g = self.gamma_marsaglia_tsang(shape + 1.0);
            let u = self.uniform();
            return g * u.powf(1.0 / shape);
        }
        let d = shape - 1.0 / 3.0;
        let c = 1.0 / (9.0 * d).sqrt();
        loop {
            let x = self.normal();
            let v = (1.0 + c * x).powi(3);
            if v <= 0.0 {
                continue;
            }
            let u = self.uniform();
            if u.ln() < 0.5 * x * x + d - d * v + d * v.ln() {
                return d * v;
            }
        }
    }

    /// Rayleigh draw (density r e^{-r^2/2}), sampled exactly as sqrt(2 Gamma_1).
    #[inline]
    pub fn rayleigh(&mut self) -> f64 {
        (2.0 * self.exponential(1.0)).sqrt()
    }

    /// Arcsine draw on (0, 1) (density 1/(pi sqrt(x(1-x)))).
    #[inline]
    pub fn arcsine(&mut self) -> f64 {
        let s = (std::f64::consts::FRAC_PI_2 * self.uniform()).sin();
        s * s
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
        self.inner.try_fill_bytes(dest)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::EULER_GAMMA;
    use crate::stats;

    #[test]
    fn streams_are_reproducible_and_disjoint() {
        let mut a = RngStream::new(7, 3);
        let mut b = RngStream::new(7, 3);
        let seq_a: Vec<u64> = (0..32).map(|_| a.next_u64()).collect();
        let seq_b: Vec<u64> = (0..32).map(|_| b.next_u64()).collect();
        assert_eq!(seq_a, seq_b);

        let mut c = RngStream::new(7, 4);
        let seq_c: Vec<u64> = (0..32).map(|_| c.next_u64()).collect();
        assert_ne!(seq_a, seq_c);
    }

    #[test]
    fn uniform_mean_and_open_interval() {
        let mut rng = RngStream::new(42, 0);
        let n = 1_000_000;
        let mut sum = 0.0;
        for _ in 0..n {
            let u = rng.uniform();
            assert!(u > 0.0 && u < 1.0);
            sum += u;
        }
        assert!((sum / n as f64 - 0.5).abs() < 0.002);
    }

    #[test]
    fn normal_unit_variance() {
        let mut rng = RngStream::new(42, 1);
        let n = 1_000_000;
        let (mut s1, mut s2) = (0.0, 0.0);
        for _ in 0..n {
            let z = rng.normal();
            s1 += z;
            s2 += z * z;
        }
        let mean = s1 / n as f64;
        let var = s2 / n as f64 - mean * mean;
        assert!((var - 1.0).abs() < 0.01, "var = {var}");
    }

    #[test]
    fn exponential_unit_mean() {
        let mut rng = RngStream::new(42, 2);
        let n = 1_000_000;
        let mean = (0..n).map(|_| rng.exponential(1.0)).sum::<f64>() / n as f64;
        assert!((mean - 1.0).abs() < 0.005, "mean = {mean}");
    }

    #[test]
    fn gamma_half_mean() {
        let mut rng = RngStream::new(42, 3);
        let n = 1_000_000;
        let mean = (0..n).map(|_| rng.gamma(0.5).unwrap()).sum::<f64>() / n as f64;
        assert!((mean - 0.5).abs() < 0.005, "mean = {mean}");
    }

    #[test]
    fn gamma_log_moments() {
        // E log Gamma_{1/2} = -2 log 2 - gamma and E log Gamma_{3/2} =
        // 2 - gamma - 2 log 2 (digamma at 1/2 and 3/2).
        let want_half = -2.0 * 2.0_f64.ln() - EULER_GAMMA;
        let want_three_half = 2.0 - EULER_GAMMA - 2.0 * 2.0_f64.ln();
        let mut rng = RngStream::new(42, 4);
        let n = 1_000_000;
        let mut m_half = 0.0;
        let mut m_three_half = 0.0;
        for _ in 0..n {
            m_half += rng.gamma(0.5).unwrap().ln();
            m_three_half += rng.gamma(1.5).unwrap().ln();
        }
        m_half /= n as f64;
        m_three_half /= n as f64;
        assert!((m_half - want_half).abs() < 0.02, "got {m_half}, want {want_half}");
        assert!(
            (m_three_half - want_three_half).abs() < 0.02,
            "got {m_three_half}, want {want_three_half}"
        );
    }

    #[test]
    fn gamma_general_shape_moments() {
        let mut rng = RngStream::new(42, 5);
        let n = 400_000;
        let shape = 2.7;
        let mean = (0..n).map(|_| rng.gamma(shape).unwrap()).sum::<f64>() / n as f64;
        assert!((mean - shape).abs() < 0.02, "mean = {mean}");
        assert!(rng.gamma(0.0).is_err());
        assert!(rng.gamma(-1.0).is_err());
    }

    #[test]
    fn rayleigh_square_is_exponential_rate_half() {
        let mut rng = RngStream::new(42, 6);
        let samples: Vec<f64> = (0..100_000).map(|_| {
            let r = rng.rayleigh();
            r * r
        }).collect();
        let report = stats::ks_one_sample(&samples, |x| 1.0 - (-0.5 * x).exp(), "rayleigh-sq").unwrap();
        assert!(report.statistic < 0.01, "D = {}", report.statistic);
    }

    #[test]
    fn arcsine_mean_and_quartile() {
        let mut rng = RngStream::new(42, 7);
        let n = 1_000_000;
        let mut sum = 0.0;
        let mut below_quarter = 0usize;
        for _ in 0..n {
            let x = rng.arcsine();
            sum += x;
            if x < 0.25 {
                below_quarter += 1;
            }
        }
        assert!((sum / n as f64 - 0.5).abs() < 0.005);
        // CDF is (2/pi) arcsin(sqrt(x)); at x = 1/4 that is 1/3.
        let want = 2.0 / std::f64::consts::PI * (0.5_f64).asin();
        assert!((want - 1.0 / 3.0).abs() < 1e-12);
        assert!((below_quarter as f64 / n as f64 - want).abs() < 0.01);
    }
}
