//! Canonical text form: `b*z1^2*z2^2 + z1^2*z2 - 3*z3`.
//!
//! Terms are printed leading term first. Unit coefficients, unit exponents and
//! zero-exponent factors are omitted; the zero polynomial prints as `0`.

use std::fmt;

use thiserror::Error;

use super::{Coeff, MPoly, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePolyError {
    #[error("empty term in {0:?}")]
    EmptyTerm(String),
    #[error("bad coefficient {0:?}")]
    BadCoefficient(String),
    #[error("bad factor {0:?}")]
    BadFactor(String),
    #[error("variable z{index} exceeds the {n_vars} declared variables")]
    VariableOutOfRange { index: usize, n_vars: usize },
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || !abs.is_one() {
                factors.push(abs.to_string());
            }
            push_factor(&mut factors, "b".to_string(), m.beta_degree());
            for (i, &e) in m.z_exponents().iter().enumerate() {
                push_factor(&mut factors, format!("z{}", i + 1), e);
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

fn push_factor(out: &mut Vec<String>, var: String, e: u32) {
    match e {
        0 => {}
        1 => out.push(var),
        _ => out.push(format!("{var}^{e}")),
    }
}

impl<C: Coeff> MPoly<C> {
    /// Parse the canonical text form in a ring with `n_vars` z-variables.
    ///
    /// Whitespace is ignored and terms need not be in canonical order.
    pub fn parse(s: &str, n_vars: usize) -> Result<Self, ParsePolyError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = MPoly::zero(n_vars);
        for (negative, body) in split_terms(&compact)? {
            let (m, c) = parse_term::<C>(body, n_vars)?;
            let c = if negative { -c } else { c };
            out.add_term(m, c);
        }
        Ok(out)
    }
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>, ParsePolyError> {
    let mut terms = Vec::new();
    let mut negative = false;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    if let Some(&first) = bytes.first() {
        if first == b'-' || first == b'+' {
            negative = first == b'-';
            start = 1;
            i = 1;
        }
    }
    while i < bytes.len() {
        if bytes[i] == b'+' || bytes[i] == b'-' {
            terms.push((negative, &s[start..i]));
            negative = bytes[i] == b'-';
            start = i + 1;
        }
        i += 1;
    }
    terms.push((negative, &s[start..]));
    if terms.iter().any(|(_, t)| t.is_empty()) {
        return Err(ParsePolyError::EmptyTerm(s.to_string()));
    }
    Ok(terms)
}

fn parse_term<C: Coeff>(body: &str, n_vars: usize) -> Result<(Monomial, C), ParsePolyError> {
    let mut exps = vec![0u32; n_vars + 1];
    let mut coeff = C::one();
    for (k, factor) in body.split('*').enumerate() {
        if factor.is_empty() {
            return Err(ParsePolyError::BadFactor(body.to_string()));
        }
        let lead = factor.as_bytes()[0];
        if lead == b'b' || lead == b'z' {
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (
                    v,
                    e.parse::<u32>()
                        .map_err(|_| ParsePolyError::BadFactor(factor.to_string()))?,
                ),
                None => (factor, 1),
            };
            let slot = if var == "b" {
                0
            } else {
                let index: usize = var[1..]
                    .parse()
                    .map_err(|_| ParsePolyError::BadFactor(factor.to_string()))?;
                if index == 0 || index > n_vars {
                    return Err(ParsePolyError::VariableOutOfRange { index, n_vars });
                }
                index
            };
            exps[slot] += exp;
        } else if k == 0 {
            coeff = C::from_str_radix(factor, 10)
                .map_err(|_| ParsePolyError::BadCoefficient(factor.to_string()))?;
        } else {
            return Err(ParsePolyError::BadFactor(factor.to_string()));
        }
    }
    Ok((Monomial(exps), coeff))
}

impl<C: Coeff> std::str::FromStr for MPoly<C> {
    type Err = ParsePolyError;

    /// Parses with the number of z-variables inferred from the largest index
    /// present. Use [`MPoly::parse`] when the ring size matters.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut n_vars = 0;
        let mut rest = s;
        while let Some(pos) = rest.find('z') {
            let digits: String = rest[pos + 1..]
                .chars()
                .take_while(|c| c.is_ascii_digit())
                .collect();
            if let Ok(i) = digits.parse::<usize>() {
                n_vars = n_vars.max(i);
            }
            rest = &rest[pos + 1..];
        }
        MPoly::parse(s, n_vars)
    }
}
