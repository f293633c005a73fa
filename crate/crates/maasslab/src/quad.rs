//! Quadrature building blocks: compensated summation, adaptive Gauss-Legendre
//! panels in f64, fixed double-double panels for the Bessel oracle, the
//! periodic trapezoid rule, and integration over the standard fundamental
//! domain of the modular group.

use crate::dd::Dd;
use crate::error::{Error, Result};

/// Neumaier variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

// Gauss-Legendre nodes/weights on [-1,1], positive half (symmetric),
// stored as double-double pairs. Generated to 40+ digits.
pub const GL8_NODES: [(f64, f64); 4] = [
    (0.1834346424956498, -2.8967682069859046e-18),
    (0.525532409916329, -4.999907577775897e-18),
    (0.7966664774136267, 1.1625719829749724e-17),
    (0.9602898564975363, -5.54885067908428e-17),
];
pub const GL8_WEIGHTS: [(f64, f64); 4] = [
    (0.362683783378362, -7.24767323521018e-18),
    (0.31370664587788727, 1.826860043779111e-17),
    (0.22238103445337448, -1.1507301429227283e-17),
    (0.10122853629037626, 4.863742266463526e-19),
];
pub const GL16_NODES: [(f64, f64); 8] = [
    (0.09501250983763744, -3.275947755433097e-19),
    (0.2816035507792589, -2.1958791252592132e-18),
    (0.45801677765722737, 1.6662404170959257e-17),
    (0.6178762444026438, -2.2123521973463665e-17),
    (0.755404408355003, 3.5241085894430354e-17),
    (0.8656312023878318, -1.1315677979849837e-17),
    (0.9445750230732326, -2.4190068142444825e-17),
    (0.9894009349916499, -5.914095566469922e-18),
];
pub const GL16_WEIGHTS: [(f64, f64); 8] = [
    (0.1894506104550685, -5.883843495582664e-18),
    (0.18260341504492358, 5.090226510905207e-18),
    (0.16915651939500254, -1.0007172793706196e-17),
    (0.14959598881657674, 3.6354457845394105e-18),
    (0.12462897125553388, -4.56456254989435e-18),
    (0.09515851168249279, -1.5843807517078673e-18),
    (0.062253523938647894, 2.4159069642869493e-18),
    (0.027152459411754096, -5.54144210923762e-19),
];
pub const GL32_NODES: [(f64, f64); 16] = [
    (0.048307665687738316, 7.1479547537495611e-19),
    (0.14447196158279649, 8.1620519227927394e-18),
    (0.23928736225213707, 1.041757313688177e-17),
    (0.33186860228212767, -1.3946619630734862e-17),
    (0.42135127613063533, -1.1818457857726938e-17),
    (0.5068999089322294, -1.2184388466925475e-17),
    (0.5877157572407623, 1.8822799796924334e-17),
    (0.6630442669302152, 5.643846476843636e-17),
    (0.7321821187402897, -1.4903927151337912e-17),
    (0.7944837959679424, 1.7320932632223868e-17),
    (0.8493676137325699, 3.879820718503645e-17),
    (0.8963211557660521, 1.3919316244295494e-17),
    (0.9349060759377397, 2.8510230711580827e-17),
    (0.9647622555875064, 2.2391158425517189e-17),
    (0.9856115115452684, -4.3294405461982296e-17),
    (0.9972638618494816, -4.1950613608528016e-17),
];
pub const GL32_WEIGHTS: [(f64, f64); 16] = [
    (0.09654008851472781, -4.1568881193464578e-18),
    (0.09563872007927486, -2.2099900918568094e-18),
    (0.09384439908080457, -1.09750792985738e-18),
    (0.09117387869576389, -3.2360171179426326e-18),
    (0.08765209300440381, 1.6752299911787633e-18),
    (0.08331192422694676, -4.1817099768794566e-18),
    (0.07819389578707031, -2.0214229001955684e-18),
    (0.07234579410884851, 3.1719564213562337e-18),
    (0.06582222277636185, -6.9712745364515029e-19),
    (0.058684093478535544, 2.6499687585383992e-18),
    (0.050998059262376176, 2.7685854107602288e-18),
    (0.04283589802222668, 7.46716919502073e-19),
    (0.034273862913021433, 1.6493679117042415e-18),
    (0.025392065309262059, 6.6369122250423728e-19),
    (0.016274394730905671, 2.2978344461867998e-19),
    (0.0070186100094700966, 2.3899012840112396e-19),
];

/// GL16 on a single panel [a,b], with |GL16 - GL8| as error estimate.
pub fn gl16_panel<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut s16 = CompensatedSum::new();
    let mut vals = [0.0f64; 16];
    for (i, &(x, _)) in GL16_NODES.iter().enumerate() {
        let f1 = f(c - h * x);
        let f2 = f(c + h * x);
        vals[2 * i] = f1;
        vals[2 * i + 1] = f2;
        s16.add(GL16_WEIGHTS[i].0 * (f1 + f2));
    }
    let mut s8 = CompensatedSum::new();
    for (i, &(x, _)) in GL8_NODES.iter().enumerate() {
        s8.add(GL8_WEIGHTS[i].0 * (f(c - h * x) + f(c + h * x)));
    }
    let v16 = s16.value() * h;
    let v8 = s8.value() * h;
    (v16, (v16 - v8).abs())
}

/// Adaptive Gauss-Legendre over [a,b] to absolute tolerance `tol`.
///
/// `min_panels` presplits the interval (the hard floor for spiky integrands);
/// refinement bisects panels whose error estimate exceeds their share of the
/// budget. Errors if the panel stack exceeds `max_panels`.
pub fn integrate<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    tol: f64,
    min_panels: usize,
    max_panels: usize,
) -> Result<(f64, f64)> {
    if !(b >= a) {
        return Err(Error::Domain(format!("bad interval [{a}, {b}]")));
    }
    if a == b {
        return Ok((0.0, 0.0));
    }
    let span = b - a;
    let m = min_panels.max(1);
    let mut stack: Vec<(f64, f64, u32)> = (0..m)
        .map(|i| {
            (
                a + span * i as f64 / m as f64,
                a + span * (i + 1) as f64 / m as f64,
                0u32,
            )
        })
        .collect();
    let mut total = CompensatedSum::new();
    let mut err_total = 0.0f64;
    let mut used = 0usize;
    while let Some((lo, hi, depth)) = stack.pop() {
        used += 1;
        if used > max_panels {
            return Err(Error::QuadratureStall(format!(
                "panel budget {max_panels} exhausted on [{a}, {b}]"
            )));
        }
        let (v, e) = gl16_panel(f, lo, hi);
        let share = tol * (hi - lo) / span;
        if e <= share || depth >= 52 || (hi - lo) < 1e-14 * span.max(1.0) {
            total.add(v);
            err_total += e;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, depth + 1));
            stack.push((mid, hi, depth + 1));
        }
    }
    Ok((total.value(), err_total))
}

/// Fixed GL32 panel in double-double, with |GL32 - GL16| error estimate.
pub fn gl32_panel_dd<F: FnMut(Dd) -> Dd>(f: &mut F, a: Dd, b: Dd) -> (Dd, f64) {
    let c = a.add(b).mul_f64(0.5);
    let h = b.sub(a).mul_f64(0.5);
    let mut s32 = Dd::from_f64(0.0);
    for (i, &(xh, xl)) in GL32_NODES.iter().enumerate() {
        let x = Dd::new(xh, xl);
        let w = Dd::new(GL32_WEIGHTS[i].0, GL32_WEIGHTS[i].1);
        let f1 = f(c.sub(h.mul(x)));
        let f2 = f(c.add(h.mul(x)));
        s32 = s32.add(w.mul(f1.add(f2)));
    }
    let mut s16 = Dd::from_f64(0.0);
    for (i, &(xh, xl)) in GL16_NODES.iter().enumerate() {
        let x = Dd::new(xh, xl);
        let w = Dd::new(GL16_WEIGHTS[i].0, GL16_WEIGHTS[i].1);
        let f1 = f(c.sub(h.mul(x)));
        let f2 = f(c.add(h.mul(x)));
        s16 = s16.add(w.mul(f1.add(f2)));
    }
    let v32 = s32.mul(h);
    let v16 = s16.mul(h);
    (v32, v32.sub(v16).to_f64().abs())
}

/// Adaptive double-double integration (used only by the Bessel oracle).
pub fn integrate_dd<F: FnMut(Dd) -> Dd>(
    f: &mut F,
    a: f64,
    b: f64,
    tol: f64,
    min_panels: usize,
    max_panels: usize,
) -> Result<(Dd, f64)> {
    let span = b - a;
    if span <= 0.0 {
        return Ok((Dd::from_f64(0.0), 0.0));
    }
    let m = min_panels.max(1);
    let mut stack: Vec<(f64, f64, u32)> = (0..m)
        .map(|i| {
            (
                a + span * i as f64 / m as f64,
                a + span * (i + 1) as f64 / m as f64,
                0u32,
            )
        })
        .collect();
    let mut total = Dd::from_f64(0.0);
    let mut err_total = 0.0f64;
    let mut used = 0usize;
    while let Some((lo, hi, depth)) = stack.pop() {
        used += 1;
        if used > max_panels {
            return Err(Error::QuadratureStall(format!(
                "dd panel budget {max_panels} exhausted"
            )));
        }
        let (v, e) = gl32_panel_dd(f, Dd::from_f64(lo), Dd::from_f64(hi));
        let share = tol * (hi - lo) / span;
        if e <= share || depth >= 48 {
            total = total.add(v);
            err_total += e;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, depth + 1));
            stack.push((mid, hi, depth + 1));
        }
    }
    Ok((total, err_total))
}

/// Periodic trapezoid rule over one period [0,1): exact for trigonometric
/// polynomials of degree < n.
pub fn periodic_trapezoid<F: FnMut(f64) -> f64>(f: &mut F, n: usize) -> f64 {
    let mut s = CompensatedSum::new();
    for k in 0..n {
        s.add(f(k as f64 / n as f64));
    }
    s.value() / n as f64
}

/// Integral of f(x, y) over the standard fundamental domain
/// {|x| <= 1/2, |z| >= 1} truncated at y <= y_max, with measure dx dy / y^2.
///
/// The strip sqrt(3)/2 <= y < 1 is parameterized as y = cos(alpha) so the
/// sqrt-type corner of the x-width at y = 1 becomes smooth; for y >= 1 the
/// x-integral runs over the full period. `f` need not be even in x; both
/// half-ranges are sampled.
pub fn fundamental_domain_integral<F: FnMut(f64, f64) -> f64 + Copy>(
    f: F,
    y_max: f64,
    x_order: usize,
    y_tol: f64,
) -> Result<f64> {
    if y_max < 1.0 {
        return Err(Error::Domain("y_max must be >= 1".into()));
    }
    let x_order = x_order.max(16);

    // x-integral over [x0, 1/2] and [-1/2, -x0] by GL panels
    let row_partial = move |y: f64, x0: f64| -> f64 {
        let mut g = |x: f64| f(x, y);
        let mut s = CompensatedSum::new();
        let panels = (x_order / 16).max(1);
        for side in [-1.0f64, 1.0] {
            let (lo, hi) = if side > 0.0 {
                (x0, 0.5)
            } else {
                (-0.5, -x0)
            };
            let w = (hi - lo) / panels as f64;
            for p in 0..panels {
                let (v, _) = gl16_panel(&mut g, lo + p as f64 * w, lo + (p + 1) as f64 * w);
                s.add(v);
            }
        }
        s.value()
    };
    let row_full = move |y: f64| -> f64 {
        let mut g = |x: f64| f(x, y);
        periodic_trapezoid(&mut g, x_order)
    };

    // lower strip: y = cos(alpha), alpha in (0, pi/6], x-range |x| in [sin(alpha), 1/2]
    let mut lower_integrand = move |alpha: f64| {
        let y = alpha.cos();
        let x0 = alpha.sin();
        row_partial(y, x0) * alpha.sin() / (y * y)
    };
    let (lower, _) = integrate(
        &mut lower_integrand,
        0.0,
        std::f64::consts::FRAC_PI_6,
        y_tol * 0.5,
        8,
        200_000,
    )?;

    // upper part: y in [1, y_max], hard floor 8 panels per unit interval
    let mut upper_integrand = move |y: f64| row_full(y) / (y * y);
    let min_panels = (8.0 * (y_max - 1.0)).ceil() as usize;
    let (upper, _) = integrate(
        &mut upper_integrand,
        1.0,
        y_max,
        y_tol * 0.5,
        min_panels.max(8),
        400_000,
    )?;

    Ok(lower + upper)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_smooth_function() {
        let (v, e) = integrate(&mut |x: f64| x.sin(), 0.0, std::f64::consts::PI, 1e-12, 1, 10_000)
            .unwrap();
        assert!((v - 2.0).abs() < 1e-13, "v={v} e={e}");
    }

    #[test]
    fn integrates_oscillatory() {
        // int_0^10 cos(50 x) dx = sin(500)/50
        let (v, _) =
            integrate(&mut |x: f64| (50.0 * x).cos(), 0.0, 10.0, 1e-12, 16, 100_000).unwrap();
        assert!((v - (500.0f64).sin() / 50.0).abs() < 1e-12);
    }

    #[test]
    fn dd_panel_accuracy() {
        // int_0^1 exp(x) dx = e - 1, to dd accuracy
        let (v, _) = integrate_dd(&mut |x: Dd| x.exp(), 0.0, 1.0, 1e-25, 2, 1000).unwrap();
        let expected_hi = 1.7182818284590452;
        let diff = v.add_f64(-expected_hi).to_f64();
        // remaining digits: e-1 = 1.71828182845904523536...
        assert!((diff - 3.5360287471e-17).abs() < 1e-26, "diff={diff:e}");
    }

    #[test]
    fn trapezoid_exact_for_trig_polys() {
        let mut f = |x: f64| {
            1.0 + (2.0 * std::f64::consts::PI * x).cos() * 0.7
                + (2.0 * std::f64::consts::PI * 3.0 * x).sin() * 0.3
        };
        let v = periodic_trapezoid(&mut f, 8);
        assert!((v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hyperbolic_area_is_pi_over_3() {
        // constant 1 integrand; tail above y_max adds 1/y_max analytically
        let y_max = 12.0;
        let v = fundamental_domain_integral(|_, _| 1.0, y_max, 32, 1e-9).unwrap();
        let expected = std::f64::consts::PI / 3.0 - 1.0 / y_max;
        assert!((v - expected).abs() < 1e-7, "v={v} expected={expected}");
    }
}
