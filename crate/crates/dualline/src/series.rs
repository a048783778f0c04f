//! Closed-form coordinate functions: sums of terms `c · tᵏ`,
//! `c · tᵏ cos(ωt)` and `c · tᵏ sin(ωt)`.
//!
//! The term family is closed under differentiation, which is what gives
//! series-defined curves exact derivative evaluators of any order.

use crate::scalar::DualFloat;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Trig<T> {
    None,
    Cos(T),
    Sin(T),
}

/// One term `coeff · t^power · trig(freq · t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term<T> {
    pub coeff: T,
    pub power: u32,
    pub trig: Trig<T>,
}

impl<T: DualFloat> Term<T> {
    pub fn eval(&self, t: T) -> T {
        let mut v = self.coeff;
        for _ in 0..self.power {
            v = v * t;
        }
        match self.trig {
            Trig::None => v,
            Trig::Cos(w) => v * (w * t).cos(),
            Trig::Sin(w) => v * (w * t).sin(),
        }
    }
}

/// A finite sum of terms.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Series<T> {
    pub terms: Vec<Term<T>>,
}

impl<T: DualFloat> Series<T> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self {
            terms: vec![Term {
                coeff: c,
                power: 0,
                trig: Trig::None,
            }],
        }
    }

    /// Polynomial `c0 + c1 t + c2 t² + ...`.
    pub fn poly(coeffs: &[T]) -> Self {
        Self {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != T::zero())
                .map(|(k, &c)| Term {
                    coeff: c,
                    power: k as u32,
                    trig: Trig::None,
                })
                .collect(),
        }
    }

    /// `amp · cos(freq t)`.
    pub fn cos(amp: T, freq: T) -> Self {
        Self {
            terms: vec![Term {
                coeff: amp,
                power: 0,
                trig: Trig::Cos(freq),
            }],
        }
    }

    /// `amp · sin(freq t)`.
    pub fn sin(amp: T, freq: T) -> Self {
        Self {
            terms: vec![Term {
                coeff: amp,
                power: 0,
                trig: Trig::Sin(freq),
            }],
        }
    }

    /// `amp · t^power · cos(freq t)` / `sin` variants.
    pub fn poly_cos(amp: T, power: u32, freq: T) -> Self {
        Self {
            terms: vec![Term {
                coeff: amp,
                power,
                trig: Trig::Cos(freq),
            }],
        }
    }

    pub fn poly_sin(amp: T, power: u32, freq: T) -> Self {
        Self {
            terms: vec![Term {
                coeff: amp,
                power,
                trig: Trig::Sin(freq),
            }],
        }
    }

    pub fn plus(mut self, other: Series<T>) -> Self {
        self.terms.extend(other.terms);
        self
    }

    pub fn eval(&self, t: T) -> T {
        self.terms
            .iter()
            .fold(T::zero(), |acc, term| acc + term.eval(t))
    }

    /// Exact derivative, term by term.
    pub fn derivative(&self) -> Series<T> {
        let mut out = Vec::new();
        for term in &self.terms {
            // d/dt [c t^k f(wt)] = c k t^(k-1) f(wt) + c w t^k f'(wt)
            if term.power > 0 {
                out.push(Term {
                    coeff: term.coeff * T::from_u32(term.power).unwrap(),
                    power: term.power - 1,
                    trig: term.trig,
                });
            }
            match term.trig {
                Trig::None => {}
                Trig::Cos(w) => out.push(Term {
                    coeff: -term.coeff * w,
                    power: term.power,
                    trig: Trig::Sin(w),
                }),
                Trig::Sin(w) => out.push(Term {
                    coeff: term.coeff * w,
                    power: term.power,
                    trig: Trig::Cos(w),
                }),
            }
        }
        Series { terms: out }
    }
}
