//! Laurent polynomials `Σ cₑ ε^e` in one parameter ε with rational
//! coefficients and integer (possibly negative) exponents.
//!
//! These formalize degeneration families: a curve of basis changes like
//! `a₁ ↦ ε⁻¹ a₁, a_ρ ↦ ε a_ρ` turns a tensor's entries into Laurent
//! polynomials, and the degeneration limit `lim_{ε→0}` exists exactly when
//! no entry has a pole at ε = 0 ([`LaurentPoly::limit`]).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{ArithError, ExactDivRing, Rational, Ring};

/// A Laurent polynomial, stored as a sorted exponent → coefficient map with
/// no explicit zero coefficients; the zero polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero_poly() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// The monomial `c·ε^exp` (zero `c` gives the zero polynomial).
    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !Ring::is_zero(&c) {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// Build from any list of (exponent, coefficient) pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut p = Self::zero_poly();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: &Rational) {
        if Ring::is_zero(c) {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(|| Ring::zero());
        *entry = entry.add_ref(c);
        if Ring::is_zero(entry) {
            self.terms.remove(&exp);
        }
    }

    /// Sorted view of the (exponent, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Smallest exponent, if nonzero.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent, if nonzero.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The coefficient of `ε^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Ring::zero)
    }

    /// The ε→0 limit: the constant coefficient when no exponent is negative,
    /// or an error naming the offending exponent when the polynomial has a
    /// pole at ε = 0.
    pub fn limit(&self) -> Result<Rational, ArithError> {
        if let Some(&e) = self.terms.keys().next() {
            if e < 0 {
                return Err(ArithError::NegativeExponent { exponent: e });
            }
        }
        Ok(self.coeff(0))
    }

    /// Evaluate at a nonzero rational ε (used only by tests; degeneration
    /// limits go through [`LaurentPoly::limit`]).
    pub fn eval(&self, eps: &Rational) -> Rational {
        assert!(!Ring::is_zero(eps), "Laurent polynomial evaluated at 0");
        let mut acc: Rational = Ring::zero();
        for (&e, c) in &self.terms {
            let mut pow: Rational = Ring::one();
            let (base, n) = if e >= 0 {
                (eps.clone(), e as u64)
            } else {
                (<Rational as Ring>::one().exact_div(eps), (-e) as u64)
            };
            for _ in 0..n {
                pow = pow.mul_ref(&base);
            }
            acc = acc.add_ref(&c.mul_ref(&pow));
        }
        acc
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        Self::zero_poly()
    }
    fn one() -> Self {
        Self::constant(Ring::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, &c.neg_ref());
        }
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero_poly();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &c1.mul_ref(c2));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg_ref())).collect(),
        }
    }
}

impl ExactDivRing for LaurentPoly {
    /// Exact division of Laurent polynomials: shift both operands to
    /// ordinary polynomials, perform coefficient long division from the top
    /// degree, and shift back.  Panics if the division leaves a remainder;
    /// Bareiss elimination guarantees it never does.
    fn exact_div(&self, d: &Self) -> Self {
        assert!(!Ring::is_zero(d), "exact division by zero polynomial");
        if Ring::is_zero(self) {
            return Self::zero_poly();
        }
        let shift = self.min_exp().unwrap() - d.min_exp().unwrap();
        // Dense coefficient vectors of the shifted ordinary polynomials.
        let num_deg = (self.max_exp().unwrap() - self.min_exp().unwrap()) as usize;
        let den_deg = (d.max_exp().unwrap() - d.min_exp().unwrap()) as usize;
        assert!(num_deg >= den_deg, "non-exact Laurent division (degree)");
        let mut num: Vec<Rational> = (0..=num_deg)
            .map(|i| self.coeff(self.min_exp().unwrap() + i as i64))
            .collect();
        let den: Vec<Rational> = (0..=den_deg)
            .map(|i| d.coeff(d.min_exp().unwrap() + i as i64))
            .collect();
        let lead = den[den_deg].clone();
        let mut quot: Vec<Rational> = alloc::vec![Ring::zero(); num_deg - den_deg + 1];
        for i in (0..quot.len()).rev() {
            let q = num[i + den_deg].exact_div(&lead);
            if !Ring::is_zero(&q) {
                for (j, dc) in den.iter().enumerate() {
                    num[i + j] = num[i + j].sub_ref(&q.mul_ref(dc));
                }
            }
            quot[i] = q;
        }
        assert!(
            num.iter().all(Ring::is_zero),
            "non-exact Laurent division (remainder)"
        );
        Self::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i64, c)),
        )
    }

    fn pivot_weight(&self) -> u64 {
        self.terms
            .values()
            .map(|c| (c.numer().bits() + c.denom().bits()) as u64)
            .sum::<u64>()
            + self.term_count() as u64
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            let cs = format_coeff(c, first);
            first = false;
            match e {
                0 => write!(f, "{cs}")?,
                1 => write!(f, "{cs}*e")?,
                _ => write!(f, "{cs}*e^{e}")?,
            }
        }
        Ok(())
    }
}

fn format_coeff(c: &Rational, first: bool) -> String {
    use alloc::format;
    use num_traits::Signed;
    if first {
        format!("{c}")
    } else if c.is_negative() {
        format!(" - {}", c.neg_ref())
    } else {
        format!(" + {c}")
    }
}
