use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::quad::QuadNum;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Scalars a [`Polynomial`] can be evaluated in.
pub trait Field: Clone + PartialEq
where
    for<'a> &'a Self: Add<&'a Self, Output = Self> + Mul<&'a Self, Output = Self>,
{
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn from_rational(r: &Rational) -> Self;
}

impl Field for Rational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Field for QuadNum {
    fn zero_value() -> Self {
        QuadNum::rational(Rational::zero())
    }
    fn one_value() -> Self {
        QuadNum::rational(Rational::one())
    }
    fn from_rational(r: &Rational) -> Self {
        QuadNum::rational(r.clone())
    }
}

type Exponents = Vec<u32>;

/// A multivariate polynomial with exact rational coefficients.
///
/// Variables are kept sorted by name so that the term map is canonical;
/// stored coefficients are never zero. Equality ignores declared variables
/// that do not occur in any term.
#[derive(Clone, Debug, Default)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        let vars = union_vars(&self.vars, &other.vars);
        self.aligned(&vars) == other.aligned(&vars)
    }
}

impl Eq for Polynomial {}

fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut v: Vec<String> = a.iter().chain(b.iter()).cloned().collect();
    v.sort();
    v.dedup();
    v
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Polynomial {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn int(c: i64) -> Self {
        Polynomial::constant(int(c))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        Polynomial {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, exponents
    /// given in the order of `vars` (which need not be sorted).
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&i, &j| vars[i].cmp(vars[j]));
        let sorted: Vec<String> = order.iter().map(|&i| vars[i].to_string()).collect();
        let mut out = Polynomial {
            vars: sorted,
            terms: BTreeMap::new(),
        };
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent arity mismatch");
            let key: Exponents = order.iter().map(|&i| exps[i]).collect();
            out.add_term(key, c);
        }
        out
    }

    /// Declares additional variables without changing the value.
    pub fn with_variables(&self, names: &[&str]) -> Self {
        let extra: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let vars = union_vars(&self.vars, &extra);
        Polynomial {
            terms: self.aligned(&vars),
            vars,
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(exponents, coefficient)` with exponents in [`Self::variables`] order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (k, v) = self.terms.iter().next().unwrap();
                k.iter().all(|&e| e == 0).then(|| v.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, key: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn index_of(&self, var: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))
    }

    fn aligned(&self, vars: &[String]) -> BTreeMap<Exponents, Rational> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut key = vec![0u32; vars.len()];
            for (i, &e) in k.iter().enumerate() {
                key[map[i]] = e;
            }
            out.insert(key, c.clone());
        }
        out
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let vars = union_vars(&self.vars, &other.vars);
        let mut out = Polynomial {
            terms: self.aligned(&vars),
            vars: vars.clone(),
        };
        for (k, c) in other.aligned(&vars) {
            out.add_term(k, c * int(sign));
        }
        out
    }

    fn product(&self, other: &Self) -> Self {
        let vars = union_vars(&self.vars, &other.vars);
        let a = self.aligned(&vars);
        let b = other.aligned(&vars);
        let mut out = Polynomial {
            vars,
            terms: BTreeMap::new(),
        };
        for (ka, ca) in &a {
            for (kb, cb) in &b {
                let key: Exponents = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                out.add_term(key, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::int(1).with_variables(&self.vars.iter().map(String::as_str).collect::<Vec<_>>());
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// Largest exponent of `var` over all terms.
    pub fn degree_in(&self, var: &str) -> Result<u32> {
        let i = self.index_of(var)?;
        Ok(self.terms.keys().map(|k| k[i]).max().unwrap_or(0))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.iter().sum()).max().unwrap_or(0)
    }

    /// Coefficient of the monomial given as `(variable, exponent)` pairs;
    /// unlisted variables have exponent zero.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> Result<Rational> {
        let mut key = vec![0u32; self.vars.len()];
        for &(v, e) in monomial {
            key[self.index_of(v)?] = e;
        }
        Ok(self.terms.get(&key).cloned().unwrap_or_else(Rational::zero))
    }

    /// Coefficient of `var^deg`, as a polynomial in the other variables.
    pub fn coefficient_in(&self, var: &str, deg: u32) -> Result<Self> {
        let i = self.index_of(var)?;
        let mut out = Polynomial {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (k, c) in &self.terms {
            if k[i] == deg {
                let mut key = k.clone();
                key[i] = 0;
                out.add_term(key, c.clone());
            }
        }
        Ok(out)
    }

    /// Exact partial derivative.
    pub fn derive(&self, var: &str) -> Result<Self> {
        let i = self.index_of(var)?;
        let mut out = Polynomial {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (k, c) in &self.terms {
            if k[i] > 0 {
                let mut key = k.clone();
                key[i] -= 1;
                out.add_term(key, c * int(k[i] as i64));
            }
        }
        Ok(out)
    }

    pub fn derive_n(&self, var: &str, times: u32) -> Result<Self> {
        let mut p = self.clone();
        for _ in 0..times {
            p = p.derive(var)?;
        }
        Ok(p)
    }

    /// Replaces `var` by `value` (itself a polynomial).
    pub fn substitute(&self, var: &str, value: &Polynomial) -> Result<Self> {
        let i = self.index_of(var)?;
        let rest: Vec<String> = self.vars.iter().filter(|v| *v != var).cloned().collect();
        let vars = union_vars(&rest, &value.vars);
        let max_e = self.terms.keys().map(|k| k[i]).max().unwrap_or(0);
        let mut powers = vec![Polynomial::int(1)];
        for e in 1..=max_e as usize {
            let next = powers[e - 1].product(value);
            powers.push(next);
        }
        let mut out = Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        };
        for (k, c) in &self.terms {
            let mut mono = Polynomial {
                vars: rest.clone(),
                terms: BTreeMap::new(),
            };
            let key: Exponents = k.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
            mono.add_term(key, c.clone());
            out = out.combine(&mono.product(&powers[k[i] as usize]), 1);
        }
        out.vars = union_vars(&out.vars, &vars);
        out.terms = out.aligned(&out.vars.clone());
        Ok(out)
    }

    pub fn substitute_rational(&self, var: &str, value: &Rational) -> Result<Self> {
        self.substitute(var, &Polynomial::constant(value.clone()))
    }

    /// Evaluates at a point; every declared variable must be bound.
    pub fn eval<F: Field>(&self, point: &[(&str, F)]) -> Result<F>
    where
        for<'a> &'a F: Add<&'a F, Output = F> + Mul<&'a F, Output = F>,
    {
        let mut values = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let x = point
                .iter()
                .find(|(name, _)| name == v)
                .map(|(_, x)| x.clone())
                .ok_or_else(|| Error::UnboundVariable(v.clone()))?;
            values.push(x);
        }
        let mut powers: Vec<Vec<F>> = Vec::with_capacity(values.len());
        for (i, x) in values.iter().enumerate() {
            let max_e = self.terms.keys().map(|k| k[i]).max().unwrap_or(0) as usize;
            let mut p = vec![F::one_value()];
            for e in 1..=max_e {
                let next = &p[e - 1] * x;
                p.push(next);
            }
            powers.push(p);
        }
        let mut acc = F::zero_value();
        for (k, c) in &self.terms {
            let mut t = F::from_rational(c);
            for (i, &e) in k.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Multivariate division by `divisor` with respect to lex order on the
    /// sorted variables. Returns `(quotient, remainder)`; the remainder is
    /// zero exactly when `divisor` divides `self`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let vars = union_vars(&self.vars, &divisor.vars);
        let d = divisor.aligned(&vars);
        let (lead_k, lead_c) = d.iter().next_back().map(|(k, c)| (k.clone(), c.clone())).unwrap();
        let mut p = Polynomial {
            terms: self.aligned(&vars),
            vars: vars.clone(),
        };
        let mut q = Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        };
        let mut r = Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        };
        while let Some((k, c)) = p.terms.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            if k.iter().zip(&lead_k).all(|(a, b)| a >= b) {
                let tk: Exponents = k.iter().zip(&lead_k).map(|(a, b)| a - b).collect();
                let tc = &c / &lead_c;
                for (dk, dc) in &d {
                    let key: Exponents = dk.iter().zip(&tk).map(|(a, b)| a + b).collect();
                    p.add_term(key, -(dc * &tc));
                }
                q.add_term(tk, tc);
            } else {
                p.terms.remove(&k);
                r.add_term(k, c);
            }
        }
        Ok((q, r))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        self.combine(o, 1)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self.combine(o, -1)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        self.product(o)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&int(-1))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&int(-1))
    }
}

macro_rules! forward_poly {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, o: Polynomial) -> Polynomial {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, o: &Polynomial) -> Polynomial {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $m(self, o: Polynomial) -> Polynomial {
                self.$m(&o)
            }
        }
    };
}
forward_poly!(Add, add);
forward_poly!(Sub, sub);
forward_poly!(Mul, mul);

/// A quotient of polynomials, compared by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFn {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RatFn {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFn { num, den })
    }

    pub fn poly(p: Polynomial) -> Self {
        RatFn {
            num: p,
            den: Polynomial::int(1),
        }
    }

    pub fn div(&self, o: &RatFn) -> Result<RatFn> {
        RatFn::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn derive(&self, var: &str) -> Result<RatFn> {
        let all = union_vars(&self.num.vars, &self.den.vars);
        let names: Vec<&str> = all.iter().map(String::as_str).collect();
        let n = self.num.with_variables(&names);
        let d = self.den.with_variables(&names);
        let top = &n.derive(var)? * &d - &n * &d.derive(var)?;
        RatFn::new(top, &d * &d)
    }

    pub fn substitute(&self, var: &str, value: &Polynomial) -> Result<RatFn> {
        let sub = |p: &Polynomial| -> Result<Polynomial> {
            if p.vars.iter().any(|v| v == var) {
                p.substitute(var, value)
            } else {
                Ok(p.clone())
            }
        };
        RatFn::new(sub(&self.num)?, sub(&self.den)?)
    }

    /// Evaluates at a rational point; a vanishing denominator is an error.
    pub fn eval(&self, point: &[(&str, Rational)]) -> Result<Rational> {
        let den = self.den.eval(point)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(point)? / den)
    }

    /// `self == other` as rational functions.
    pub fn same_as(&self, other: &RatFn) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<'a> Add<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn add(self, o: &RatFn) -> RatFn {
        RatFn {
            num: &self.num * &o.den + &o.num * &self.den,
            den: &self.den * &o.den,
        }
    }
}

impl<'a> Sub<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn sub(self, o: &RatFn) -> RatFn {
        RatFn {
            num: &self.num * &o.den - &o.num * &self.den,
            den: &self.den * &o.den,
        }
    }
}

impl<'a> Mul<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn mul(self, o: &RatFn) -> RatFn {
        RatFn {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;
    use proptest::prelude::*;

    fn x() -> Polynomial {
        Polynomial::var("x")
    }
    fn y() -> Polynomial {
        Polynomial::var("y")
    }

    #[test]
    fn power_rule() {
        let p = &x().pow(2) * &y();
        assert_eq!(p.derive("x").unwrap(), Polynomial::int(2) * x() * y());
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let c = Polynomial::int(7).with_variables(&["x"]);
        assert!(c.derive("x").unwrap().is_zero());
    }

    #[test]
    fn unknown_variable_is_an_error() {
        assert_eq!(x().derive("z"), Err(Error::UnknownVariable("z".into())));
    }

    #[test]
    fn eval_sum() {
        let v = (x() + y()).eval(&[("x", int(1)), ("y", int(2))]).unwrap();
        assert_eq!(v, int(3));
        assert_eq!(
            (x() + y()).eval(&[("x", int(1))]),
            Err(Error::UnboundVariable("y".into()))
        );
    }

    #[test]
    fn eval_minimal_polynomial_at_rho0() {
        let p = Polynomial::int(58) * x().pow(2) - Polynomial::int(33) * x() + Polynomial::int(4);
        let v = p.eval(&[("x", QuadNum::rho0())]).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn from_terms_sorts_variables() {
        let p = Polynomial::from_terms(&["y", "x"], vec![(vec![2, 1], int(3))]);
        assert_eq!(p, Polynomial::int(3) * x() * y().pow(2));
        assert_eq!(p.variables(), &["x".to_string(), "y".to_string()]);
    }

    #[test]
    fn exact_division_and_remainder() {
        let a = x() + y() + Polynomial::int(1);
        let b = x() - Polynomial::constant(rat(1, 2)) * y();
        let (q, r) = (&a * &b).div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, a);
        let (_, r) = (&a * &b + Polynomial::int(1)).div_rem(&b).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn substitution() {
        let p = &x().pow(2) + &y();
        let s = p.substitute("x", &(&y() + &Polynomial::int(1))).unwrap();
        assert_eq!(s, y().pow(2) + Polynomial::int(3) * y() + Polynomial::int(1));
        assert_eq!(s.variables(), &["y".to_string()]);
    }

    #[test]
    fn display_is_readable() {
        let p = Polynomial::int(2) * x() * y() - Polynomial::constant(rat(1, 2));
        assert_eq!(p.to_string(), "2*x*y - 1/2");
    }

    #[test]
    fn ratfn_quotient_rule() {
        // d/dx (1/x) = -1/x²
        let f = RatFn::new(Polynomial::int(1).with_variables(&["x"]), x()).unwrap();
        let want = RatFn::new(Polynomial::int(-1), x().pow(2)).unwrap();
        assert!(f.derive("x").unwrap().same_as(&want));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((0u32..4, 0u32..4, -9i64..10), 1..6)
            .prop_map(|ts| Polynomial::from_terms(&["x", "y"], ts.into_iter().map(|(a, b, c)| (vec![a, b], int(c)))))
    }

    proptest! {
        #[test]
        fn mixed_partials_commute(p in arb_poly()) {
            let xy = p.derive("x").unwrap().derive("y").unwrap();
            let yx = p.derive("y").unwrap().derive("x").unwrap();
            prop_assert_eq!(xy, yx);
        }

        #[test]
        fn product_then_divide(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!q.is_zero());
            let (quot, rem) = (&p * &q).div_rem(&q).unwrap();
            prop_assert!(rem.is_zero());
            prop_assert_eq!(quot, p);
        }

        #[test]
        fn eval_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), a in -5i64..5, b in -5i64..5) {
            let pt = [("x", int(a)), ("y", int(b))];
            let lhs = (&p * &q).eval(&pt).unwrap();
            prop_assert_eq!(lhs, p.eval(&pt).unwrap() * q.eval(&pt).unwrap());
        }
    }
}
