//! Integer binary quadratic forms `ax^2 + bxy + cy^2` and the right action of
//! integer 2x2 matrices on them.
//!
//! Matrix convention: `M = [p r; s t]` acts by the substitution
//! `x -> px + ry`, `y -> sx + ty`, so `(q . M)(x, y) = q(px + ry, sx + ty)`.
//! The action is a right action: `(q . M) . N = q . (M N)`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::arith::{self, add, mul, sub, Discriminant, Int};
use crate::error::{Error, Result};

/// A binary quadratic form with non-square discriminant. Forms of negative
/// discriminant are always positive definite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Form {
    a: Int,
    b: Int,
    c: Int,
}

impl Form {
    pub fn new(a: Int, b: Int, c: Int) -> Result<Self> {
        let d = sub(mul(b, b)?, mul(4, mul(a, c)?)?)?;
        if arith::is_perfect_square(d) {
            return Err(Error::SquareDiscriminant(d));
        }
        if d < 0 && a <= 0 {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(Form { a, b, c })
    }

    /// The principal form of discriminant `d`: `x^2 - (d/4) y^2` when
    /// `d = 0 mod 4`, `x^2 + xy + ((1 - d)/4) y^2` when `d = 1 mod 4`.
    pub fn principal(d: Discriminant) -> Result<Self> {
        let d = d.value();
        if arith::mod_floor(d, 4) == 0 {
            Form::new(1, 0, -d / 4)
        } else {
            Form::new(1, 1, (1 - d) / 4)
        }
    }

    pub fn a(&self) -> Int {
        self.a
    }

    pub fn b(&self) -> Int {
        self.b
    }

    pub fn c(&self) -> Int {
        self.c
    }

    pub fn coefficients(&self) -> (Int, Int, Int) {
        (self.a, self.b, self.c)
    }

    /// `b^2 - 4ac`. Cannot overflow: it was computed once at construction.
    pub fn disc(&self) -> Int {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn discriminant(&self) -> Discriminant {
        Discriminant::new(self.disc()).expect("validated at construction")
    }

    pub fn eval(&self, x: Int, y: Int) -> Result<Int> {
        let ax2 = mul(self.a, mul(x, x)?)?;
        let bxy = mul(self.b, mul(x, y)?)?;
        let cy2 = mul(self.c, mul(y, y)?)?;
        add(add(ax2, bxy)?, cy2)
    }

    /// `gcd(a, b, c)`, always positive.
    pub fn content(&self) -> Int {
        arith::gcd(arith::gcd(self.a, self.b), self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    pub fn require_primitive(&self) -> Result<()> {
        if self.is_primitive() {
            Ok(())
        } else {
            Err(Error::NotPrimitive(self.to_string()))
        }
    }

    /// `q . M`, with coefficients `(q(p, s), q(p+r, s+t) - q(p, s) - q(r, t), q(r, t))`.
    pub fn act(&self, m: &IntMatrix2) -> Result<Form> {
        if m.det()? == 0 {
            return Err(Error::ZeroDeterminant);
        }
        let (a, b, c) = (self.a, self.b, self.c);
        let new_a = self.eval(m.p, m.s)?;
        let new_c = self.eval(m.r, m.t)?;
        // Expanded middle coefficient: 2apr + b(pt + rs) + 2cst.
        let new_b = add(
            add(mul(2, mul(a, mul(m.p, m.r)?)?)?, mul(b, add(mul(m.p, m.t)?, mul(m.r, m.s)?)?)?)?,
            mul(2, mul(c, mul(m.s, m.t)?)?)?,
        )?;
        Form::new(new_a, new_b, new_c)
    }

    /// Whether `disc(q . M) = det(M)^2 disc(q)`. Always true; exposed as a
    /// self-test predicate for the action.
    pub fn disc_scaling_check(&self, m: &IntMatrix2) -> Result<bool> {
        let image = self.act(m)?;
        let det = m.det()?;
        Ok(image.disc() == mul(mul(det, det)?, self.disc())?)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl FromStr for Form {
    type Err = Error;

    /// Parses `"(a,b,c)"` with optional whitespace anywhere.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a form literal \"(a,b,c)\", got {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(bad());
        };
        let parse = |t: &str| t.parse::<Int>().map_err(|_| bad());
        Form::new(parse(a)?, parse(b)?, parse(c)?)
    }
}

/// A 2x2 integer matrix `[p r; s t]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub p: Int,
    pub r: Int,
    pub s: Int,
    pub t: Int,
}

impl IntMatrix2 {
    pub const IDENTITY: IntMatrix2 = IntMatrix2::new(1, 0, 0, 1);
    /// `S = [0 -1; 1 0]`, acting as `(a, b, c) -> (c, -b, a)`.
    pub const S: IntMatrix2 = IntMatrix2::new(0, -1, 1, 0);
    /// `S^-1 = [0 1; -1 0]`.
    pub const S_INV: IntMatrix2 = IntMatrix2::new(0, 1, -1, 0);
    pub const NEG_IDENTITY: IntMatrix2 = IntMatrix2::new(-1, 0, 0, -1);

    pub const fn new(p: Int, r: Int, s: Int, t: Int) -> Self {
        IntMatrix2 { p, r, s, t }
    }

    /// `T^k = [1 k; 0 1]`.
    pub const fn translation(k: Int) -> Self {
        IntMatrix2::new(1, k, 0, 1)
    }

    pub fn det(&self) -> Result<Int> {
        sub(mul(self.p, self.t)?, mul(self.r, self.s)?)
    }

    pub fn is_unimodular(&self) -> bool {
        self.det() == Ok(1)
    }

    pub fn checked_mul(&self, rhs: &IntMatrix2) -> Result<IntMatrix2> {
        Ok(IntMatrix2::new(
            add(mul(self.p, rhs.p)?, mul(self.r, rhs.s)?)?,
            add(mul(self.p, rhs.r)?, mul(self.r, rhs.t)?)?,
            add(mul(self.s, rhs.p)?, mul(self.t, rhs.s)?)?,
            add(mul(self.s, rhs.r)?, mul(self.t, rhs.t)?)?,
        ))
    }

    /// `[t -r; -s p]`, so that `M adj(M) = det(M) I`.
    pub fn adjugate(&self) -> Result<IntMatrix2> {
        Ok(IntMatrix2::new(
            self.t,
            arith::neg(self.r)?,
            arith::neg(self.s)?,
            self.p,
        ))
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix2> {
        let det = self.det()?;
        if det != 1 {
            return Err(Error::DeterminantMismatch { expected: 1, found: det });
        }
        self.adjugate()
    }
}

impl Mul for IntMatrix2 {
    type Output = IntMatrix2;

    /// Panics on overflow; use [`IntMatrix2::checked_mul`] on untrusted sizes.
    fn mul(self, rhs: IntMatrix2) -> IntMatrix2 {
        self.checked_mul(&rhs).expect("matrix product overflow")
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.p, self.r, self.s, self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: Int, b: Int, c: Int) -> Form {
        Form::new(a, b, c).unwrap()
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(form(1, 1, 1).disc(), -3);
        assert_eq!(form(1, 0, 1).disc(), -4);
        for d in [-4, -36, 8, 12, -400] {
            let q = Form::principal(Discriminant::new(d).unwrap()).unwrap();
            assert_eq!((q.a(), q.b(), q.c()), (1, 0, -d / 4));
            assert_eq!(q.disc(), d);
        }
        let q = Form::principal(Discriminant::new(-23).unwrap()).unwrap();
        assert_eq!(q, form(1, 1, 6));
    }

    #[test]
    fn construction_guards() {
        assert_eq!(Form::new(1, 2, 1), Err(Error::SquareDiscriminant(0)));
        assert_eq!(Form::new(1, 3, 2), Err(Error::SquareDiscriminant(1)));
        assert_eq!(Form::new(-1, 0, -1), Err(Error::NotPositiveDefinite));
        assert!(Form::new(1, 1, -1).is_ok());
        assert_eq!(Form::new(Int::MAX, 0, 2), Err(Error::Overflow));
    }

    #[test]
    fn content_and_primitivity() {
        assert_eq!(form(2, 1, 3).content(), 1);
        assert!(form(2, 1, 3).is_primitive());
        assert_eq!(form(2, 4, 6).content(), 2);
        assert!(!form(2, 4, 6).is_primitive());
        assert!(form(1, 1, 6).is_primitive());
    }

    // Locks the matrix convention against transposition.
    #[test]
    fn generator_actions() {
        for (a, b, c) in [(2, 1, 3), (1, 1, 6), (5, -3, 7), (3, 7, -2)] {
            let q = form(a, b, c);
            assert_eq!(q.act(&IntMatrix2::S).unwrap(), form(c, -b, a));
            for k in -5..=5 {
                assert_eq!(
                    q.act(&IntMatrix2::translation(k)).unwrap(),
                    form(a, b + 2 * k * a, c + k * b + k * k * a)
                );
            }
        }
        assert_eq!(form(2, 1, 3).act(&IntMatrix2::translation(1)).unwrap(), form(2, 5, 6));
    }

    #[test]
    fn act_matches_substitution_definition() {
        let q = form(3, -2, 5);
        let m = IntMatrix2::new(2, -1, 7, 3);
        let expected_a = q.eval(m.p, m.s).unwrap();
        let expected_c = q.eval(m.r, m.t).unwrap();
        let expected_b = q.eval(m.p + m.r, m.s + m.t).unwrap() - expected_a - expected_c;
        let image = q.act(&m).unwrap();
        assert_eq!(image.coefficients(), (expected_a, expected_b, expected_c));
        // q'(x, y) = q(px + ry, sx + ty) at a few points
        for (x, y) in [(1, 0), (0, 1), (2, -3), (-4, 5)] {
            assert_eq!(
                image.eval(x, y).unwrap(),
                q.eval(m.p * x + m.r * y, m.s * x + m.t * y).unwrap()
            );
        }
    }

    #[test]
    fn act_rejects_singular_matrix() {
        let q = form(1, 0, 1);
        assert_eq!(q.act(&IntMatrix2::new(1, 2, 2, 4)), Err(Error::ZeroDeterminant));
    }

    #[test]
    fn disc_scaling_examples() {
        let q = form(1, 0, 1);
        assert!(q.disc_scaling_check(&IntMatrix2::IDENTITY).unwrap());
        let lifted = q.act(&IntMatrix2::new(1, 0, 0, 3)).unwrap();
        assert_eq!(lifted.disc(), -36);
        assert!(q.disc_scaling_check(&IntMatrix2::new(1, 0, 0, 3)).unwrap());
    }

    #[test]
    fn parse_and_print() {
        let q: Form = " ( 2 ,-1,  3 ) ".parse().unwrap();
        assert_eq!(q, form(2, -1, 3));
        assert_eq!(q.to_string(), "(2, -1, 3)");
        assert_eq!(q.to_string().parse::<Form>().unwrap(), q);
        for bad in ["2,1,3", "(2,1)", "(2,1,3,4)", "(a,1,3)", "(2,1,3"] {
            assert!(matches!(bad.parse::<Form>(), Err(Error::Parse(_))), "{bad}");
        }
        assert_eq!("(1,2,1)".parse::<Form>(), Err(Error::SquareDiscriminant(0)));
    }

    #[test]
    fn matrix_helpers() {
        let m = IntMatrix2::new(2, 1, 1, 1);
        assert_eq!(m.det().unwrap(), 1);
        assert_eq!(m * m.inverse_unimodular().unwrap(), IntMatrix2::IDENTITY);
        assert_eq!(IntMatrix2::S * IntMatrix2::S_INV, IntMatrix2::IDENTITY);
        assert_eq!(IntMatrix2::S * IntMatrix2::S, IntMatrix2::NEG_IDENTITY);
        assert_eq!(m.to_string(), "[2 1; 1 1]");
        assert!(IntMatrix2::new(3, 0, 0, 1).inverse_unimodular().is_err());
    }
}
