//! Evaluation of expressions as polynomials and as truncated series.

use num_traits::{One, Zero};

use super::ast::Expr;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};
use crate::rational::RatNum;

pub fn eval_poly(e: &Expr, ring: &Ring) -> Result<Polynomial> {
    Ok(match e {
        Expr::Num(r) => Polynomial::constant(ring, r.clone()),
        Expr::Var(v) => Polynomial::var_named(ring, v)?,
        Expr::Sum(ts) => {
            let mut acc = Polynomial::zero(ring);
            for (neg, t) in ts {
                let p = eval_poly(t, ring)?;
                acc = if *neg { acc.sub(&p)? } else { acc.add(&p)? };
            }
            acc
        }
        Expr::Prod(fs) => {
            let mut acc = Polynomial::one(ring);
            for f in fs {
                acc = acc.mul(&eval_poly(f, ring)?)?;
            }
            acc
        }
        Expr::Pow(b, k) => {
            if *k < 0 {
                return Err(Error::Invalid(format!("negative exponent in polynomial `{}`", e)));
            }
            eval_poly(b, ring)?.pow(*k as u32)
        }
    })
}

/// Coefficients `c_0..c_m` of a power series in one class symbol, truncated
/// above degree `m`. Negative powers need a nonzero constant term.
pub fn eval_series(e: &Expr, m: usize) -> Result<Vec<RatNum>> {
    Ok(match e {
        Expr::Num(r) => {
            let mut v = vec![RatNum::zero(); m + 1];
            v[0] = r.clone();
            v
        }
        Expr::Var(_) => {
            let mut v = vec![RatNum::zero(); m + 1];
            if m >= 1 {
                v[1] = RatNum::one();
            }
            v
        }
        Expr::Sum(ts) => {
            let mut acc = vec![RatNum::zero(); m + 1];
            for (neg, t) in ts {
                let s = eval_series(t, m)?;
                for (a, b) in acc.iter_mut().zip(s) {
                    if *neg {
                        *a -= b
                    } else {
                        *a += b
                    }
                }
            }
            acc
        }
        Expr::Prod(fs) => {
            let mut acc = eval_series(&Expr::Num(RatNum::one()), m)?;
            for f in fs {
                acc = trunc_mul(&acc, &eval_series(f, m)?);
            }
            acc
        }
        Expr::Pow(b, k) => {
            let mut base = eval_series(b, m)?;
            if *k < 0 {
                base = trunc_inverse(&base).ok_or_else(|| Error::Invalid(format!("`{}` has no inverse", b)))?;
            }
            let mut acc = eval_series(&Expr::Num(RatNum::one()), m)?;
            for _ in 0..k.unsigned_abs() {
                acc = trunc_mul(&acc, &base);
            }
            acc
        }
    })
}

pub(crate) fn trunc_mul(a: &[RatNum], b: &[RatNum]) -> Vec<RatNum> {
    let m = a.len().min(b.len());
    let mut out = vec![RatNum::zero(); m];
    for i in 0..m {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..m - i {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

pub(crate) fn trunc_inverse(a: &[RatNum]) -> Option<Vec<RatNum>> {
    if a[0].is_zero() {
        return None;
    }
    let inv0 = RatNum::one() / &a[0];
    let mut out = vec![RatNum::zero(); a.len()];
    out[0] = inv0.clone();
    for k in 1..a.len() {
        let mut s = RatNum::zero();
        for j in 1..=k {
            s += &a[j] * &out[k - j];
        }
        out[k] = -s * &inv0;
    }
    Some(out)
}
