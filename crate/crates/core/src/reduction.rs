//! Reduction of positive definite forms, equivalence with witnesses, class
//! set enumeration and coprime normalization of the leading coefficient.
//!
//! A definite form `(a, b, c)` is reduced when `|b| <= a <= c`, with
//! `b >= 0` whenever `|b| = a` or `a = c`. Each proper equivalence class
//! contains exactly one reduced form.

use std::cmp::Reverse;
use std::fmt;

use crate::arith::{self, div_floor, mul, sub, Discriminant, Int};
use crate::error::{Error, Result};
use crate::form::{Form, IntMatrix2};
use crate::par::{self, Execution};

/// A reduced positive definite form; the canonical class representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedForm(Form);

impl ReducedForm {
    pub fn new(form: Form) -> Result<Self> {
        if is_reduced(&form) {
            Ok(ReducedForm(form))
        } else {
            Err(Error::NotReduced(form.to_string()))
        }
    }

    pub fn form(&self) -> &Form {
        &self.0
    }

    pub fn into_form(self) -> Form {
        self.0
    }
}

impl fmt::Display for ReducedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A determinant-one matrix `U` with `q1 . U = q2` for the pair it certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EquivWitness(IntMatrix2);

impl EquivWitness {
    pub const IDENTITY: EquivWitness = EquivWitness(IntMatrix2::IDENTITY);

    pub fn new(m: IntMatrix2) -> Result<Self> {
        let det = m.det()?;
        if det == 1 {
            Ok(EquivWitness(m))
        } else {
            Err(Error::DeterminantMismatch { expected: 1, found: det })
        }
    }

    pub fn matrix(&self) -> &IntMatrix2 {
        &self.0
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(EquivWitness(self.0.inverse_unimodular()?))
    }

    pub fn then(&self, next: &EquivWitness) -> Result<Self> {
        Ok(EquivWitness(self.0.checked_mul(&next.0)?))
    }

    /// Whether `from . U = to`.
    pub fn certifies(&self, from: &Form, to: &Form) -> bool {
        from.act(&self.0).as_ref() == Ok(to)
    }
}

impl fmt::Display for EquivWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_reduced(q: &Form) -> bool {
    let (a, b, c) = q.coefficients();
    q.disc() < 0 && b.abs() <= a && a <= c && !((b.abs() == a || a == c) && b < 0)
}

fn require_definite(q: &Form) -> Result<()> {
    if q.disc() < 0 {
        Ok(())
    } else {
        Err(Error::IndefiniteUnsupported(q.disc()))
    }
}

/// Gauss reduction. Returns the reduced form and `U` with `q . U = reduced`.
pub fn reduce(q: &Form) -> Result<(ReducedForm, EquivWitness)> {
    require_definite(q)?;
    let mut cur = *q;
    let mut u = IntMatrix2::IDENTITY;
    let step = |cur: &mut Form, u: &mut IntMatrix2, m: IntMatrix2| -> Result<()> {
        *cur = cur.act(&m)?;
        *u = u.checked_mul(&m)?;
        Ok(())
    };
    loop {
        // Translate b into (-a, a].
        let k = div_floor(sub(cur.a(), cur.b())?, mul(2, cur.a())?)?;
        if k != 0 {
            step(&mut cur, &mut u, IntMatrix2::translation(k))?;
        }
        if cur.a() > cur.c() {
            step(&mut cur, &mut u, IntMatrix2::S)?;
        } else {
            break;
        }
    }
    if cur.a() == cur.c() && cur.b() < 0 {
        step(&mut cur, &mut u, IntMatrix2::S)?;
    }
    debug_assert!(is_reduced(&cur));
    Ok((ReducedForm(cur), EquivWitness(u)))
}

/// Proper equivalence test. Returns `U` with `q1 . U = q2` when the forms are
/// equivalent, `None` when they are not (including different discriminants).
pub fn equivalent(q1: &Form, q2: &Form) -> Result<Option<EquivWitness>> {
    require_definite(q1)?;
    require_definite(q2)?;
    if q1.disc() != q2.disc() {
        return Ok(None);
    }
    let (r1, u1) = reduce(q1)?;
    let (r2, u2) = reduce(q2)?;
    if r1 != r2 {
        return Ok(None);
    }
    Ok(Some(u1.then(&u2.inverse()?)?))
}

/// `H(D)`: reduced representatives of the primitive classes of discriminant `D < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSet {
    discriminant: Discriminant,
    members: Vec<ReducedForm>,
}

impl ClassSet {
    pub fn discriminant(&self) -> Discriminant {
        self.discriminant
    }

    pub fn members(&self) -> &[ReducedForm] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, q: &Form) -> bool {
        self.members.binary_search_by(|m| m.form().cmp(q)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Form> {
        self.members.iter().map(ReducedForm::form)
    }
}

fn negative_discriminant(d: Int) -> Result<Discriminant> {
    let disc = Discriminant::new(d)?;
    if disc.is_negative() {
        Ok(disc)
    } else {
        Err(Error::IndefiniteUnsupported(d))
    }
}

pub fn class_set(d: Int) -> Result<ClassSet> {
    class_set_with(d, Execution::default())
}

/// [`class_set`] with an explicit execution mode for the scan over `a`.
pub fn class_set_with(d: Int, exec: Execution) -> Result<ClassSet> {
    let discriminant = negative_discriminant(d)?;
    let bound = arith::isqrt(d.unsigned_abs() as Int / 3).unwrap_or(0);
    let rows = par::map_vec((1..=bound).collect(), exec, |a| reduced_forms_with_leading(d, a));
    let mut members = Vec::new();
    for row in rows {
        members.extend(row?);
    }
    members.sort();
    Ok(ClassSet { discriminant, members })
}

fn reduced_forms_with_leading(d: Int, a: Int) -> Result<Vec<ReducedForm>> {
    let mut out = Vec::new();
    for b in -a..=a {
        if arith::mod_floor(b - d, 2) != 0 {
            continue;
        }
        let num = sub(mul(b, b)?, d)?;
        if num % (4 * a) != 0 {
            continue;
        }
        let c = num / (4 * a);
        if c < a || ((b.abs() == a || a == c) && b < 0) {
            continue;
        }
        let q = Form::new(a, b, c)?;
        if q.is_primitive() {
            out.push(ReducedForm(q));
        }
    }
    Ok(out)
}

fn distinct_prime_factors(n: Int) -> Int {
    let mut n = n.unsigned_abs();
    let mut count = 0;
    let mut p: u128 = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            count += 1;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

/// Finds `q' ~ q` whose leading coefficient is coprime to `f`.
///
/// Searches primitive vectors `(x, y)` by increasing `max(|x|, |y|)` for
/// `gcd(q(x, y), f) = 1`, then completes `(x, y)` to a determinant-one
/// matrix, whose image has leading coefficient `q(x, y)`.
pub fn normalize_coprime(q: &Form, f: Int) -> Result<(Form, EquivWitness)> {
    q.require_primitive()?;
    if f == 0 {
        return Err(Error::UnsupportedModulus(0));
    }
    let cap = 4 * distinct_prime_factors(f) + 4;
    for radius in 1..=cap {
        let mut ring: Vec<(Int, Int)> = (0..=radius)
            .flat_map(|x| (-radius..=radius).map(move |y| (x, y)))
            .filter(|&(x, y)| x.abs().max(y.abs()) == radius)
            .filter(|&(x, y)| x > 0 || y > 0)
            .filter(|&(x, y)| arith::gcd(x, y) == 1)
            .collect();
        ring.sort_by_key(|&(x, y)| (x.abs() + y.abs(), Reverse(x), Reverse(y)));
        for (x, y) in ring {
            if arith::gcd(q.eval(x, y)?, f) != 1 {
                continue;
            }
            let (_, lambda, mu) = arith::xgcd(x, y)?;
            let witness = EquivWitness::new(IntMatrix2::new(x, arith::neg(mu)?, y, lambda))?;
            return Ok((q.act(witness.matrix())?, witness));
        }
    }
    Err(Error::SearchExhausted(cap))
}

/// Automorphs of a reduced definite form: matrices `Z` of determinant one
/// with `q . Z = q`.
///
/// `{I, -I}` in general; four for `(a, 0, a)` and six for `(a, a, a)`, which
/// for primitive forms are exactly `x^2 + y^2` and `x^2 + xy + y^2`.
pub fn automorphisms(q: &Form) -> Result<Vec<IntMatrix2>> {
    require_definite(q)?;
    if !is_reduced(q) {
        return Err(Error::NotReduced(q.to_string()));
    }
    let mut generators = vec![IntMatrix2::IDENTITY];
    let (a, b, c) = q.coefficients();
    if b == 0 && a == c {
        generators.push(IntMatrix2::S);
    } else if a == b && b == c {
        generators.push(IntMatrix2::new(0, -1, 1, 1));
        generators.push(IntMatrix2::new(1, 1, -1, 0));
    }
    let negated = generators.iter().map(|z| *z * IntMatrix2::NEG_IDENTITY).collect::<Vec<_>>();
    generators.extend(negated);
    Ok(generators)
}
