use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Numeric abstraction that problem formulas are written against, so the same
/// code evaluates plain values (`f64`) and derivatives ([`Dual`]).
pub trait Real:
    Clone
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Add<f64, Output = Self>
    + Sub<f64, Output = Self>
    + Mul<f64, Output = Self>
    + Div<f64, Output = Self>
{
    fn constant(c: f64) -> Self;
    fn value(&self) -> f64;
    fn sqrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn powi(self, n: i32) -> Self;
    fn powf(self, p: f64) -> Self;

    fn square(self) -> Self {
        self.powi(2)
    }
}

impl Real for f64 {
    fn constant(c: f64) -> Self {
        c
    }
    fn value(&self) -> f64 {
        *self
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }
    fn powf(self, p: f64) -> Self {
        f64::powf(self, p)
    }
    fn square(self) -> Self {
        self * self
    }
}

/// Forward-mode dual number carrying one partial derivative per seeded
/// variable. An empty `partials` vector denotes a constant.
#[derive(Clone, PartialEq)]
pub struct Dual {
    pub value: f64,
    pub partials: Vec<f64>,
}

impl fmt::Debug for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dual({}, {:?})", self.value, self.partials)
    }
}

impl Dual {
    pub fn constant(value: f64) -> Self {
        Self {
            value,
            partials: Vec::new(),
        }
    }

    /// The `index`-th of `n` independent variables, seeded with a unit partial.
    pub fn variable(value: f64, index: usize, n: usize) -> Self {
        let mut partials = vec![0.0; n];
        partials[index] = 1.0;
        Self { value, partials }
    }

    /// Seeds every coordinate of `x` as an independent variable.
    pub fn seed(x: &[f64]) -> Vec<Dual> {
        x.iter()
            .enumerate()
            .map(|(i, &v)| Dual::variable(v, i, x.len()))
            .collect()
    }

    /// Partial with respect to variable `i` (0 for constants).
    pub fn partial(&self, i: usize) -> f64 {
        self.partials.get(i).copied().unwrap_or(0.0)
    }

    /// Gradient padded to `n` entries.
    pub fn gradient(&self, n: usize) -> Vec<f64> {
        (0..n).map(|i| self.partial(i)).collect()
    }

    /// Applies a scalar function with derivative `slope` at `value`.
    fn chain(self, value: f64, slope: f64) -> Self {
        let mut partials = self.partials;
        for p in &mut partials {
            *p *= slope;
        }
        Self { value, partials }
    }
}

/// `ca * a + cb * b`, treating an empty slice as all zeros.
fn combine(a: &[f64], ca: f64, b: &[f64], cb: f64) -> Vec<f64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let pa = a.get(i).copied().unwrap_or(0.0);
            let pb = b.get(i).copied().unwrap_or(0.0);
            ca * pa + cb * pb
        })
        .collect()
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, rhs: Dual) -> Dual {
        Dual {
            value: self.value + rhs.value,
            partials: combine(&self.partials, 1.0, &rhs.partials, 1.0),
        }
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, rhs: Dual) -> Dual {
        Dual {
            value: self.value - rhs.value,
            partials: combine(&self.partials, 1.0, &rhs.partials, -1.0),
        }
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, rhs: Dual) -> Dual {
        Dual {
            value: self.value * rhs.value,
            partials: combine(&self.partials, rhs.value, &rhs.partials, self.value),
        }
    }
}

impl Div for Dual {
    type Output = Dual;
    fn div(self, rhs: Dual) -> Dual {
        let inv = 1.0 / rhs.value;
        let value = self.value * inv;
        Dual {
            value,
            partials: combine(&self.partials, inv, &rhs.partials, -value * inv),
        }
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        let value = -self.value;
        self.chain(value, -1.0)
    }
}

impl Add<f64> for Dual {
    type Output = Dual;
    fn add(mut self, rhs: f64) -> Dual {
        self.value += rhs;
        self
    }
}

impl Sub<f64> for Dual {
    type Output = Dual;
    fn sub(mut self, rhs: f64) -> Dual {
        self.value -= rhs;
        self
    }
}

impl Mul<f64> for Dual {
    type Output = Dual;
    fn mul(self, rhs: f64) -> Dual {
        let value = self.value * rhs;
        self.chain(value, rhs)
    }
}

impl Div<f64> for Dual {
    type Output = Dual;
    fn div(self, rhs: f64) -> Dual {
        let value = self.value / rhs;
        self.chain(value, 1.0 / rhs)
    }
}

impl Real for Dual {
    fn constant(c: f64) -> Self {
        Dual::constant(c)
    }
    fn value(&self) -> f64 {
        self.value
    }
    fn sqrt(self) -> Self {
        let v = self.value.sqrt();
        self.chain(v, 0.5 / v)
    }
    fn sin(self) -> Self {
        let (s, c) = self.value.sin_cos();
        self.chain(s, c)
    }
    fn cos(self) -> Self {
        let (s, c) = self.value.sin_cos();
        self.chain(c, -s)
    }
    fn exp(self) -> Self {
        let v = self.value.exp();
        self.chain(v, v)
    }
    fn ln(self) -> Self {
        let v = self.value.ln();
        let slope = 1.0 / self.value;
        self.chain(v, slope)
    }
    fn powi(self, n: i32) -> Self {
        let v = self.value.powi(n);
        let slope = if n == 0 {
            0.0
        } else {
            f64::from(n) * self.value.powi(n - 1)
        };
        self.chain(v, slope)
    }
    fn powf(self, p: f64) -> Self {
        let v = self.value.powf(p);
        let slope = if p == 0.0 {
            0.0
        } else {
            p * self.value.powf(p - 1.0)
        };
        self.chain(v, slope)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn var(v: f64) -> Dual {
        Dual::variable(v, 0, 1)
    }

    proptest! {
        #[test]
        fn shift_keeps_derivative(x in -10.0f64..10.0, c in -10.0f64..10.0) {
            prop_assert_eq!((var(x) + c).partial(0), 1.0);
        }

        #[test]
        fn scale_multiplies_derivative(x in -10.0f64..10.0, c in -10.0f64..10.0) {
            prop_assert_eq!((var(x) * c).partial(0), c);
        }

        #[test]
        fn square_rule(x in -10.0f64..10.0) {
            let d = var(x) * var(x);
            prop_assert!((d.partial(0) - 2.0 * x).abs() <= 1e-12 * (1.0 + x.abs()));
            let p = var(x).powi(2);
            prop_assert!((p.partial(0) - 2.0 * x).abs() <= 1e-12 * (1.0 + x.abs()));
        }

        #[test]
        fn product_rule(a in -5.0f64..5.0, b in -5.0f64..5.0) {
            let x = Dual::variable(a, 0, 2);
            let y = Dual::variable(b, 1, 2);
            let p = x * y;
            prop_assert_eq!(p.partial(0), b);
            prop_assert_eq!(p.partial(1), a);
        }

        #[test]
        fn quotient_rule(a in -5.0f64..5.0, b in 0.5f64..5.0) {
            let q = Dual::variable(a, 0, 2) / Dual::variable(b, 1, 2);
            prop_assert!((q.partial(0) - 1.0 / b).abs() < 1e-12);
            prop_assert!((q.partial(1) + a / (b * b)).abs() < 1e-12);
        }
    }

    #[test]
    fn constants_have_no_partials() {
        let c = Dual::constant(3.0);
        let x = var(2.0);
        let y = x.clone() * c.clone() + c;
        assert_eq!(y.value, 9.0);
        assert_eq!(y.partial(0), 3.0);
        assert_eq!(Dual::constant(1.0).gradient(3), vec![0.0; 3]);
    }

    #[test]
    fn elementary_functions() {
        let x = 0.7;
        assert!((Real::sin(var(x)).partial(0) - x.cos()).abs() < 1e-15);
        assert!((Real::cos(var(x)).partial(0) + x.sin()).abs() < 1e-15);
        assert!((Real::exp(var(x)).partial(0) - x.exp()).abs() < 1e-15);
        assert!((Real::ln(var(x)).partial(0) - 1.0 / x).abs() < 1e-15);
        assert!((Real::sqrt(var(x)).partial(0) - 0.5 / x.sqrt()).abs() < 1e-15);
        assert!((Real::powf(var(x), 2.5).partial(0) - 2.5 * x.powf(1.5)).abs() < 1e-15);
    }
}
