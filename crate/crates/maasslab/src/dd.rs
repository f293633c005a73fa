//! Double-double arithmetic: an unevaluated sum of two `f64`s giving ~31
//! significant decimal digits.
//!
//! Used by the Bessel quadrature oracle, where the integrand of the real-axis
//! representation cancels by tens of orders of magnitude and plain `f64`
//! evaluation would lose every significant digit. Algorithms follow the
//! classical error-free transformations (Dekker, Knuth) and the QD library's
//! exp/sin/cos reductions.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub const DD_LN2: Dd = Dd::new(0.6931471805599453, 2.3190468138462996e-17);
pub const DD_PI: Dd = Dd::new(3.141592653589793, 1.2246467991473532e-16);
pub const DD_PI_OVER_2: Dd = Dd::new(1.5707963267948966, 6.123233995736766e-17);
pub const DD_PI_OVER_4: Dd = Dd::new(0.7853981633974483, 3.061616997868383e-17);

/// 1/k! for k = 3..=23.
const DD_INV_FACT: [(f64, f64); 21] = [
    (0.16666666666666666, 9.25185853854297e-18),
    (0.041666666666666664, 2.3129646346357427e-18),
    (0.008333333333333333, 1.1564823173178714e-19),
    (0.001388888888888889, -5.300543954373577e-20),
    (0.0001984126984126984, 1.7209558293420705e-22),
    (2.48015873015873e-05, 2.1511947866775882e-23),
    (2.7557319223985893e-06, -1.858393274046472e-22),
    (2.755731922398589e-07, 2.3767714622250297e-23),
    (2.505210838544172e-08, -1.448814070935912e-24),
    (2.08767569878681e-09, -1.20734505911326e-25),
    (1.6059043836821613e-10, 1.2585294588752098e-26),
    (1.1470745597729725e-11, 2.0655512752830745e-28),
    (7.647163731819816e-13, 7.03872877733453e-30),
    (4.779477332387385e-14, 4.399205485834081e-31),
    (2.8114572543455206e-15, 1.6508842730861433e-31),
    (1.5619206968586225e-16, 1.1910679660273754e-32),
    (8.22063524662433e-18, 2.2141894119604265e-34),
    (4.110317623312165e-19, 1.4412973378659527e-36),
    (1.9572941063391263e-20, -1.3643503830087908e-36),
    (8.896791392450574e-22, -7.911402614872376e-38),
    (3.868170170630684e-23, -8.843177655482344e-40),
];

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// Dekker split at 2^27 + 1; avoids relying on hardware FMA.
#[inline]
fn split(a: f64) -> (f64, f64) {
    let t = 134217729.0 * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, err)
}

impl Dd {
    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, other.hi);
        let p2 = p2 + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * b);
        Dd { hi, lo }
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        Dd::from_f64(q1).add_f64(q2).add_f64(q3)
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::from_f64(1.0).div(self)
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 { self.neg() } else { self }
    }

    /// exp(self); valid roughly for |x| < 700.
    pub fn exp(self) -> Dd {
        let x = self.to_f64();
        if x < -740.0 {
            return Dd::from_f64(0.0);
        }
        if x > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        let k = (x / std::f64::consts::LN_2).round();
        let r = self.sub(DD_LN2.mul_f64(k));
        // scale into |r| <= ln2/1024, series for expm1, then 9 squarings
        let m = 512.0;
        let rs = r.mul_f64(1.0 / m);
        // expm1(rs) = rs + rs^2/2 + sum_{j>=3} rs^j / j!
        let mut p = rs.mul(rs);
        let mut s = rs.add(p.mul_f64(0.5));
        let mut it = 0;
        loop {
            p = p.mul(rs);
            let (fh, fl) = DD_INV_FACT[it];
            let term = p.mul(Dd::new(fh, fl));
            s = s.add(term);
            it += 1;
            if term.hi.abs() < 1e-35 || it >= DD_INV_FACT.len() {
                break;
            }
        }
        // (1+s)^2 - 1 = s^2 + 2s, applied 9 times to undo the /512
        for _ in 0..9 {
            s = s.mul(s).add(s.mul_f64(2.0));
        }
        let e = s.add_f64(1.0);
        // scale by 2^k exactly
        let scale = f64::powi(2.0, k as i32);
        Dd { hi: e.hi * scale, lo: e.lo * scale }
    }

    /// sin on a reduced argument |x| <= pi/4 + eps, by Taylor series.
    fn sin_reduced(self) -> Dd {
        let x2 = self.mul(self);
        let mut term = self;
        let mut sum = self;
        // x^(2m+1)/(2m+1)!: build from inverse factorial table (k = 3,5,7,...)
        let mut k = 3usize;
        let mut sign = -1.0;
        while k + 2 < DD_INV_FACT.len() + 3 {
            term = term.mul(x2);
            let (fh, fl) = DD_INV_FACT[k - 3];
            let contrib = term.mul(Dd::new(fh, fl)).mul_f64(sign);
            sum = sum.add(contrib);
            if contrib.hi.abs() < 1e-35 {
                break;
            }
            sign = -sign;
            k += 2;
        }
        sum
    }

    /// cos on a reduced argument |x| <= pi/4 + eps, by Taylor series.
    fn cos_reduced(self) -> Dd {
        let x2 = self.mul(self);
        let mut term = x2;
        let mut sum = Dd::from_f64(1.0).sub(x2.mul_f64(0.5));
        let mut k = 4usize;
        let mut sign = 1.0;
        while k + 2 < DD_INV_FACT.len() + 3 {
            term = term.mul(x2);
            let (fh, fl) = DD_INV_FACT[k - 3];
            let contrib = term.mul(Dd::new(fh, fl)).mul_f64(sign);
            sum = sum.add(contrib);
            if contrib.hi.abs() < 1e-35 {
                break;
            }
            sign = -sign;
            k += 2;
        }
        sum
    }

    /// (sin x, cos x) with argument reduction modulo pi/2.
    pub fn sin_cos(self) -> (Dd, Dd) {
        let k = (self.to_f64() / std::f64::consts::FRAC_PI_2).round();
        let r = self.sub(DD_PI_OVER_2.mul_f64(k));
        let q = (k as i64).rem_euclid(4);
        let (s, c) = (r.sin_reduced(), r.cos_reduced());
        match q {
            0 => (s, c),
            1 => (c, s.neg()),
            2 => (s.neg(), c.neg()),
            _ => (c.neg(), s),
        }
    }

    pub fn cos(self) -> Dd {
        self.sin_cos().1
    }

    /// (sinh x, cosh x) via exp; for |x| < 0.5 sinh uses its Taylor series to
    /// avoid cancellation.
    pub fn sinh_cosh(self) -> (Dd, Dd) {
        let e = self.exp();
        let ei = e.recip();
        let cosh = e.add(ei).mul_f64(0.5);
        let sinh = if self.hi.abs() < 0.5 {
            let x2 = self.mul(self);
            let mut term = self;
            let mut sum = self;
            let mut k = 3usize;
            loop {
                term = term.mul(x2);
                let (fh, fl) = DD_INV_FACT[k - 3];
                let contrib = term.mul(Dd::new(fh, fl));
                sum = sum.add(contrib);
                if contrib.hi.abs() < 1e-35 || k + 2 >= DD_INV_FACT.len() + 3 {
                    break;
                }
                k += 2;
            }
            sum
        } else {
            e.sub(ei).mul_f64(0.5)
        };
        (sinh, cosh)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_mul_roundtrip() {
        let a = Dd::from_f64(0.1).add(Dd::from_f64(0.2));
        // 0.1 + 0.2 in dd is much closer to 0.3 than in f64
        let diff = a.sub(Dd::from_f64(0.3)).to_f64().abs();
        assert!(diff < 1e-17, "diff {diff}");
        let b = Dd::from_f64(3.0).recip().mul_f64(3.0);
        assert!((b.to_f64() - 1.0).abs() < 1e-30);
        assert!(b.sub(Dd::from_f64(1.0)).hi.abs() < 1e-30);
    }

    #[test]
    fn exp_matches_reference() {
        // e computed to 33 digits: 2.71828182845904523536028747135266
        let e = Dd::from_f64(1.0).exp();
        assert!((e.hi - 2.718281828459045).abs() < 1e-15);
        assert!((e.lo - 1.44564689172925e-16).abs() < 1e-28, "lo {}", e.lo);
        // exp(-50) = 1.92874984796391778556550246350437e-22
        let v = Dd::from_f64(-50.0).exp();
        let rel = (v.to_f64() - 1.928749847963917785e-22) / 1.93e-22;
        assert!(rel.abs() < 1e-28 / 1.93e-22, "rel {rel}");
        // exp(300)*exp(-300) = 1
        let p = Dd::from_f64(300.0).exp().mul(Dd::from_f64(-300.0).exp());
        assert!(p.sub(Dd::from_f64(1.0)).to_f64().abs() < 1e-28);
    }

    #[test]
    fn sincos_matches_reference() {
        // sin(1) = 0.841470984807896506652502321630299, cos(1) = 0.540302305868139717400936607442977
        let (s, c) = Dd::from_f64(1.0).sin_cos();
        assert!((s.hi - 0.8414709848078965).abs() < 2e-16);
        assert!((c.hi - 0.5403023058681398).abs() < 2e-16);
        let one = s.mul(s).add(c.mul(c));
        assert!(one.sub(Dd::from_f64(1.0)).to_f64().abs() < 1e-30);
        // large argument: sin(1000) = 0.826879540532003294
        let (s, _) = Dd::from_f64(1000.0).sin_cos();
        assert!((s.hi - 0.8268795405320025).abs() < 1e-13);
        // Pythagorean identity at many points, dd-accurate
        for i in 0..200 {
            let x = Dd::from_f64(i as f64 * 7.137 - 700.0);
            let (s, c) = x.sin_cos();
            let r = s.mul(s).add(c.mul(c)).sub(Dd::from_f64(1.0));
            assert!(r.to_f64().abs() < 1e-29, "x={} r={}", x.hi, r.to_f64());
        }
    }

    #[test]
    fn sinh_cosh_identity() {
        for &x in &[0.01, 0.3, 1.0, 4.0, 12.0, -3.0] {
            let (s, c) = Dd::from_f64(x).sinh_cosh();
            let r = c.mul(c).sub(s.mul(s)).sub(Dd::from_f64(1.0));
            assert!(r.to_f64().abs() < 1e-26, "x={x} r={}", r.to_f64());
            assert!((s.to_f64() - x.sinh()).abs() <= 1e-15 * x.sinh().abs().max(1.0));
        }
    }
}
