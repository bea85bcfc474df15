//! Exact multivariate polynomials in the chart coordinates x⁰..x³ and the
//! first-order differential operators that realize the isometry algebra on
//! them. Coefficients are exact rationals, so operator identities (bracket
//! relations on monomials) are decided without tolerances.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::exact::{rat, Rational};

/// Signature of the 4-dimensional Minkowski metric diag(−1, 1, 1, 1).
pub const ETA4_SIGN: [i64; 4] = [-1, 1, 1, 1];

/// Polynomial in x⁰..x³ with rational coefficients, keyed by exponent tuple.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly4 {
    terms: BTreeMap<[u16; 4], Rational>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term([0; 4], c);
        p
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    /// The coordinate monomial `x^idx`.
    pub fn var(idx: usize) -> Self {
        assert!(idx < 4);
        let mut exp = [0u16; 4];
        exp[idx] = 1;
        let mut p = Self::zero();
        p.add_term(exp, rat(1));
        p
    }

    pub fn monomial(exp: [u16; 4], c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    fn add_term(&mut self, exp: [u16; 4], c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(|| rat(0));
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (exp, c) in &rhs.terms {
            out.add_term(*exp, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (exp, c) in &rhs.terms {
            out.add_term(*exp, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (*e, k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(exp, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Exact partial derivative ∂/∂x^idx.
    pub fn partial(&self, idx: usize) -> Self {
        assert!(idx < 4);
        let mut out = Self::zero();
        for (exp, c) in &self.terms {
            if exp[idx] == 0 {
                continue;
            }
            let mut e = *exp;
            e[idx] -= 1;
            out.add_term(e, c.clone() * rat(exp[idx] as i64));
        }
        out
    }

    pub fn total_degree(&self) -> u16 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u16>())
            .max()
            .unwrap_or(0)
    }

    /// All monomials of total degree ≤ `deg` (coefficient 1).
    pub fn monomials_up_to(deg: u16) -> Vec<Self> {
        let mut out = Vec::new();
        for d0 in 0..=deg {
            for d1 in 0..=deg - d0 {
                for d2 in 0..=deg - d0 - d1 {
                    for d3 in 0..=deg - d0 - d1 - d2 {
                        out.push(Self::monomial([d0, d1, d2, d3], rat(1)));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, &e) in exp.iter().enumerate() {
                if e > 0 {
                    write!(f, "*x{i}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// First-order differential operators realizing the isometry algebra with
/// the curvature length set to 1: `J_μ = ∂_μ + x_μ x^ν ∂_ν` and
/// `M_μν = x_μ ∂_ν − x_ν ∂_μ` (indices lowered with diag(−1,1,1,1)).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LieOp {
    J(usize),
    M(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OpError {
    UnknownName(String),
}

impl fmt::Display for OpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpError::UnknownName(n) => write!(f, "unknown operator name: {n}"),
        }
    }
}

impl LieOp {
    /// Parse names of the form `J0..J3`, `M01..M23` (also `M10` etc.).
    pub fn parse(name: &str) -> Result<Self, OpError> {
        let bytes = name.as_bytes();
        match bytes {
            [b'J', d] if d.is_ascii_digit() => {
                let mu = (d - b'0') as usize;
                if mu < 4 {
                    return Ok(LieOp::J(mu));
                }
            }
            [b'M', d1, d2] if d1.is_ascii_digit() && d2.is_ascii_digit() => {
                let mu = (d1 - b'0') as usize;
                let nu = (d2 - b'0') as usize;
                if mu < 4 && nu < 4 && mu != nu {
                    return Ok(LieOp::M(mu, nu));
                }
            }
            _ => {}
        }
        Err(OpError::UnknownName(name.into()))
    }

    pub fn name(&self) -> String {
        match self {
            LieOp::J(mu) => format!("J{mu}"),
            LieOp::M(mu, nu) => format!("M{mu}{nu}"),
        }
    }

    /// Apply the operator to a polynomial, exactly.
    pub fn apply(&self, p: &Poly4) -> Poly4 {
        match *self {
            LieOp::J(mu) => {
                // ∂_μ p + η_μμ x^μ · (x^ν ∂_ν p)
                let mut euler = Poly4::zero();
                for nu in 0..4 {
                    euler = euler.add(&Poly4::var(nu).mul(&p.partial(nu)));
                }
                let lowered = Poly4::var(mu).scale(&rat(ETA4_SIGN[mu]));
                p.partial(mu).add(&lowered.mul(&euler))
            }
            LieOp::M(mu, nu) => {
                // x_μ ∂_ν p − x_ν ∂_μ p
                let xm = Poly4::var(mu).scale(&rat(ETA4_SIGN[mu]));
                let xn = Poly4::var(nu).scale(&rat(ETA4_SIGN[nu]));
                xm.mul(&p.partial(nu)).sub(&xn.mul(&p.partial(mu)))
            }
        }
    }

    /// Commutator `[self, other]` applied to `p`.
    pub fn commutator_on(&self, other: &LieOp, p: &Poly4) -> Poly4 {
        self.apply(&other.apply(p))
            .sub(&other.apply(&self.apply(p)))
    }
}

/// Apply an operator given by name; errors on unknown names.
pub fn poly_apply(op_name: &str, p: &Poly4) -> Result<Poly4, OpError> {
    Ok(LieOp::parse(op_name)?.apply(p))
}
