//! Forms of nested discriminants `D` and `D f^2` for an odd prime `f`.
//!
//! The lift matrices are `R_g = [f g; 0 1]` for `0 <= g < f` and
//! `R_f = [1 0; 0 f]`, all of determinant `f`. Every primitive form of
//! discriminant `D f^2` is equivalent to `q . R_f` for a primitive `q` of
//! discriminant `D` whose class is uniquely determined; [`descend`] computes
//! that class, and [`fiber`] enumerates the classes lying above a given `q`.

use std::fmt;

use crate::arith::{self, add, mul, Discriminant, Int};
use crate::error::{Error, Result};
use crate::form::{Form, IntMatrix2};
use crate::reduction::{self, EquivWitness, ReducedForm};

fn require_odd_prime(f: Int) -> Result<()> {
    if arith::is_odd_prime(f) {
        Ok(())
    } else {
        Err(Error::UnsupportedModulus(f))
    }
}

fn require_coprime(a: Int, f: Int) -> Result<()> {
    if arith::gcd(a, f) == 1 {
        Ok(())
    } else {
        Err(Error::NotCoprime { a, modulus: f })
    }
}

/// Index `g` in `0..=f` selecting the lift matrix `R_g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiftIndex {
    g: Int,
    f: Int,
}

impl LiftIndex {
    pub fn new(g: Int, f: Int) -> Result<Self> {
        require_odd_prime(f)?;
        if !(0..=f).contains(&g) {
            return Err(Error::LiftIndexRange { g, f });
        }
        Ok(LiftIndex { g, f })
    }

    /// The principal index `g = f`.
    pub fn principal(f: Int) -> Result<Self> {
        LiftIndex::new(f, f)
    }

    pub fn g(&self) -> Int {
        self.g
    }

    pub fn conductor(&self) -> Int {
        self.f
    }

    pub fn is_principal(&self) -> bool {
        self.g == self.f
    }

    pub fn matrix(&self) -> IntMatrix2 {
        if self.is_principal() {
            IntMatrix2::new(1, 0, 0, self.f)
        } else {
            IntMatrix2::new(self.f, self.g, 0, 1)
        }
    }
}

impl fmt::Display for LiftIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.g.fmt(f)
    }
}

/// `q . R_g`. For `g < f` this is `(f^2 a, f(2ag + b), ag^2 + bg + c)`; for
/// `g = f` it is `q(x, fy) = (a, fb, f^2 c)`.
pub fn lift_g(q: &Form, idx: LiftIndex) -> Result<Form> {
    q.require_primitive()?;
    q.act(&idx.matrix())
}

/// Indices `g` with `q . R_g` primitive: `g = f` together with every
/// `g < f` such that `q(g, 1)` is not divisible by `f`. There are exactly
/// `f - (D/f)` of them.
pub fn primitive_lift_indices(q: &Form, f: Int) -> Result<Vec<LiftIndex>> {
    q.require_primitive()?;
    require_odd_prime(f)?;
    require_coprime(q.a(), f)?;
    let mut out = Vec::new();
    for g in 0..f {
        if arith::mod_floor(q.eval(g, 1)?, f) != 0 {
            out.push(LiftIndex { g, f });
        }
    }
    out.push(LiftIndex { g: f, f });
    Ok(out)
}

/// Writes a determinant-`f` matrix as `M = R_g U` with `U` unimodular. The
/// index `g` is unique.
pub fn decompose_det_f(m: &IntMatrix2, f: Int) -> Result<(LiftIndex, EquivWitness)> {
    require_odd_prime(f)?;
    let det = m.det()?;
    if det != f {
        return Err(Error::DeterminantMismatch { expected: f, found: det });
    }
    let (p, r, s, t) = (m.p, m.r, m.s, m.t);
    // gcd(s, t) divides the prime f; s = t = 0 is excluded by det = f.
    if arith::gcd(s, t) == f {
        let u = EquivWitness::new(IntMatrix2::new(p, r, s / f, t / f))?;
        return Ok((LiftIndex { g: f, f }, u));
    }
    let (_, lambda, mu) = arith::xgcd(s, t)?;
    let g0 = add(mul(lambda, p)?, mul(mu, r)?)?;
    let k = arith::div_floor(g0, f)?;
    let g = g0 - k * f;
    let u = EquivWitness::new(IntMatrix2::new(
        add(mu, mul(k, s)?)?,
        arith::sub(mul(k, t)?, lambda)?,
        s,
        t,
    ))?;
    Ok((LiftIndex { g, f }, u))
}

/// Translates `Q` to an equivalent `Q'` with the same leading coefficient,
/// `f | B'` and `f^2 | C'`. Requires `gcd(2A, f) = 1`.
pub fn normalize_for_descent(big_q: &Form, f: Int) -> Result<(Form, EquivWitness)> {
    let f2 = mul(f, f)?;
    if big_q.disc() % f2 != 0 {
        return Err(Error::NotDivisible { disc: big_q.disc(), conductor: f });
    }
    let two_a = mul(2, big_q.a())?;
    if arith::gcd(two_a, f) != 1 {
        return Err(Error::NotCoprime { a: big_q.a(), modulus: f });
    }
    // 2 lambda A + mu f = 1, then shift by T^(-lambda B).
    let (_, lambda, _) = arith::xgcd(two_a, f)?;
    let shift = arith::neg(mul(lambda, big_q.b())?)?;
    let w = EquivWitness::new(IntMatrix2::translation(shift))?;
    let normalized = big_q.act(w.matrix())?;
    debug_assert!(normalized.b() % f == 0 && normalized.c() % f2 == 0);
    Ok((normalized, w))
}

/// Image of a form of discriminant `D f^2` under the descent map.
///
/// `base` is primitive of discriminant `D`; for `D < 0` it is the reduced
/// representative of its class. `lift` has determinant `f` and satisfies
/// `base . lift = Q` exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DescentResult {
    pub base: Form,
    pub lift: IntMatrix2,
}

impl DescentResult {
    pub fn reduced_base(&self) -> Result<ReducedForm> {
        ReducedForm::new(self.base)
    }
}

/// The descent map: sends `Q` of discriminant `D f^2` to the class of
/// discriminant `D` it lifts from.
pub fn descend(big_q: &Form, f: Int) -> Result<DescentResult> {
    require_odd_prime(f)?;
    big_q.require_primitive()?;
    let f2 = mul(f, f)?;
    if big_q.disc() % f2 != 0 {
        return Err(Error::NotDivisible { disc: big_q.disc(), conductor: f });
    }
    Discriminant::new(big_q.disc() / f2)?;

    let (coprime, w1) = reduction::normalize_coprime(big_q, f)?;
    let (normalized, w2) = normalize_for_descent(&coprime, f)?;
    let q = Form::new(normalized.a(), normalized.b() / f, normalized.c() / f2)?;
    debug_assert!(q.is_primitive());

    // big_q . w1 w2 = q . R_f, so big_q = q . R_f (w1 w2)^-1.
    let back = w1.then(&w2)?.inverse()?;
    let mut lift = LiftIndex { g: f, f }.matrix().checked_mul(back.matrix())?;
    let mut base = q;
    if q.disc() < 0 {
        let (reduced, v) = reduction::reduce(&q)?;
        base = reduced.into_form();
        lift = v.inverse()?.matrix().checked_mul(&lift)?;
    }
    Ok(DescentResult { base, lift })
}

fn require_same_disc(q1: &Form, q2: &Form) -> Result<()> {
    if q1.disc() == q2.disc() {
        Ok(())
    } else {
        Err(Error::DiscriminantMismatch(q1.disc(), q2.disc()))
    }
}

/// Semi-equivalence of two primitive forms of discriminant `D f^2`, `D < 0`:
/// they descend to the same class of discriminant `D`.
pub fn semi_equivalent(q1: &Form, q2: &Form, f: Int) -> Result<bool> {
    require_same_disc(q1, q2)?;
    if q1.disc() >= 0 {
        return Err(Error::IndefiniteUnsupported(q1.disc()));
    }
    Ok(descend(q1, f)?.base == descend(q2, f)?.base)
}

/// Rewrites `q . R_g` as `q0 . R_f V` with `q0 ~ q` and `V` unimodular.
/// For `g < f`: `q0 = q . [g -1; 1 0]` and `V = S^-1`.
pub fn to_principal_lift(q: &Form, idx: LiftIndex) -> Result<(Form, IntMatrix2)> {
    q.require_primitive()?;
    if idx.is_principal() {
        return Ok((*q, IntMatrix2::IDENTITY));
    }
    let q0 = q.act(&IntMatrix2::new(idx.g, -1, 1, 0))?;
    Ok((q0, IntMatrix2::S_INV))
}

fn require_conjugation_inputs(u: &EquivWitness, f: Int, q: &Form) -> Result<()> {
    require_coprime(q.a(), f)?;
    let det = u.matrix().det()?;
    if det != 1 {
        return Err(Error::DeterminantMismatch { expected: 1, found: det });
    }
    Ok(())
}

/// `V = R_f U R_f^-1 = [p r/f; fs t]` when it is integral, `None` otherwise.
///
/// For `gcd(a, f) = 1`, `q . V` has integer coefficients only when `V` does
/// (see [`conjugate_action_is_integral`]).
pub fn integral_conjugate(u: &EquivWitness, f: Int, q: &Form) -> Result<Option<IntMatrix2>> {
    require_conjugation_inputs(u, f, q)?;
    let m = u.matrix();
    if m.r % f != 0 {
        return Ok(None);
    }
    Ok(Some(IntMatrix2::new(m.p, m.r / f, mul(f, m.s)?, m.t)))
}

/// Whether `q . (R_f U R_f^-1)` has integer coefficients, computed without
/// assuming the conjugate is integral: `f V = [fp r; f^2 s ft]` is integral
/// and `q . (f V) = f^2 (q . V)`.
pub fn conjugate_action_is_integral(u: &EquivWitness, f: Int, q: &Form) -> Result<bool> {
    require_conjugation_inputs(u, f, q)?;
    let m = u.matrix();
    let f2 = mul(f, f)?;
    let scaled = IntMatrix2::new(mul(f, m.p)?, m.r, mul(f2, m.s)?, mul(f, m.t)?);
    let image = q.act(&scaled)?;
    Ok(image.a() % f2 == 0 && image.b() % f2 == 0 && image.c() % f2 == 0)
}

/// One class of discriminant `D f^2` above `q`, with the indices whose lifts land in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberClass {
    pub class: ReducedForm,
    pub indices: Vec<LiftIndex>,
}

/// Classes of the primitive lifts `q . R_g`, grouped by reduced representative
/// in order of first index.
///
/// For `D < -4` every group is a singleton, so there are `f - (D/f)` classes.
/// For `D = -4` the lifts of `x^2 + y^2` pair up as `{g, -1/g mod f}` (with
/// `{0, f}` paired), and for `D = -3` the lifts of `x^2 + xy + y^2` fall into
/// triples `{g, -1/g - 1, -1/(g + 1)}` (with `{0, f - 1, f}` a triple). That
/// is, two indices per class at `D = -4` and three at `D = -3`; the grouping
/// is verified against orbit search in the test suite.
pub fn fiber(q: &Form, f: Int) -> Result<Vec<FiberClass>> {
    if q.disc() >= 0 {
        return Err(Error::IndefiniteUnsupported(q.disc()));
    }
    let indices = primitive_lift_indices(q, f)?;
    let mut classes: Vec<FiberClass> = Vec::new();
    for idx in indices {
        let (class, _) = reduction::reduce(&lift_g(q, idx)?)?;
        match classes.iter_mut().find(|c| c.class == class) {
            Some(existing) => existing.indices.push(idx),
            None => classes.push(FiberClass { class, indices: vec![idx] }),
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::IntMatrix2 as M;
    use crate::reduction::{class_set, equivalent, reduce};

    fn form(a: Int, b: Int, c: Int) -> Form {
        Form::new(a, b, c).unwrap()
    }

    fn idx(g: Int, f: Int) -> LiftIndex {
        LiftIndex::new(g, f).unwrap()
    }

    #[test]
    fn lift_index_guards() {
        assert_eq!(idx(3, 3).matrix(), M::new(1, 0, 0, 3));
        assert_eq!(idx(1, 3).matrix(), M::new(3, 1, 0, 1));
        for g in 0..=7 {
            assert_eq!(idx(g, 7).matrix().det().unwrap(), 7);
        }
        assert_eq!(LiftIndex::new(4, 3), Err(Error::LiftIndexRange { g: 4, f: 3 }));
        assert_eq!(LiftIndex::new(0, 9), Err(Error::UnsupportedModulus(9)));
        assert_eq!(LiftIndex::new(0, 2), Err(Error::UnsupportedModulus(2)));
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_g(&form(1, 0, 1), idx(3, 3)).unwrap(), form(1, 0, 9));
        assert_eq!(lift_g(&form(1, 0, 1), idx(0, 3)).unwrap(), form(9, 0, 1));
        let q = lift_g(&form(1, 1, 1), idx(1, 5)).unwrap();
        assert_eq!(q, form(25, 15, 3));
        assert_eq!(q.disc(), -75);
        assert!(matches!(lift_g(&form(2, 4, 6), idx(0, 3)), Err(Error::NotPrimitive(_))));
    }

    #[test]
    fn lift_formula_for_non_principal_index() {
        let (a, b, c) = (3, -1, 7);
        let f = 11;
        for g in 0..f {
            let lifted = lift_g(&form(a, b, c), idx(g, f)).unwrap();
            assert_eq!(lifted.coefficients(), (f * f * a, f * (2 * a * g + b), a * g * g + b * g + c));
        }
    }

    #[test]
    fn primitive_lift_index_examples() {
        let gs = |q: Form, f| -> Vec<Int> {
            primitive_lift_indices(&q, f).unwrap().iter().map(LiftIndex::g).collect()
        };
        assert_eq!(gs(form(1, 0, 1), 3), vec![0, 1, 2, 3]);
        assert_eq!(gs(form(1, 1, 6), 3).len(), 2);
        assert_eq!(gs(form(1, 1, 1), 3), vec![0, 2, 3]);
        assert_eq!(
            primitive_lift_indices(&form(3, 1, 2), 3),
            Err(Error::NotCoprime { a: 3, modulus: 3 })
        );
    }

    #[test]
    fn primitive_lift_count_is_f_minus_kronecker() {
        for d in [-3, -4, -7, -8, -15, -20, -23, -47, -84, -199] {
            for q in class_set(d).unwrap().iter() {
                for f in [3, 5, 7, 11, 13] {
                    let (q, _) = reduction::normalize_coprime(q, f).unwrap();
                    let indices = primitive_lift_indices(&q, f).unwrap();
                    let expected = f - arith::kronecker(d, f).unwrap() as Int;
                    assert_eq!(indices.len() as Int, expected, "q={q} f={f}");
                    for i in 0..=f {
                        let primitive = lift_g(&q, idx(i, f)).unwrap().is_primitive();
                        assert_eq!(primitive, indices.contains(&idx(i, f)), "q={q} g={i} f={f}");
                    }
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose_det_f(&M::new(1, 0, 0, 3), 3).unwrap(), (idx(3, 3), EquivWitness::IDENTITY));
        assert_eq!(decompose_det_f(&M::new(3, 1, 0, 1), 3).unwrap(), (idx(1, 3), EquivWitness::IDENTITY));
        let m = M::new(2, 1, 1, 2);
        let (g, u) = decompose_det_f(&m, 3).unwrap();
        assert_eq!(g, idx(2, 3));
        assert_eq!(*u.matrix(), M::new(0, -1, 1, 2));
        assert_eq!(g.matrix() * *u.matrix(), m);
    }

    #[test]
    fn decompose_guards() {
        assert_eq!(
            decompose_det_f(&M::new(2, 0, 0, 1), 3),
            Err(Error::DeterminantMismatch { expected: 3, found: 2 })
        );
        assert_eq!(decompose_det_f(&M::new(3, 0, 0, 3), 9), Err(Error::UnsupportedModulus(9)));
    }

    #[test]
    fn normalize_for_descent_examples() {
        let (q, w) = normalize_for_descent(&form(1, 0, 9), 3).unwrap();
        assert_eq!((q, w), (form(1, 0, 9), EquivWitness::IDENTITY));

        let src = form(1, 6, 18);
        assert_eq!(src.disc(), -36);
        let (q, w) = normalize_for_descent(&src, 3).unwrap();
        assert_eq!(q.a(), 1);
        assert_eq!(q.b() % 3, 0);
        assert_eq!(q.c() % 9, 0);
        assert!(w.certifies(&src, &q));

        // A form whose b is not yet divisible by f.
        let src = form(7, 1, 1);
        assert_eq!(src.disc(), -27);
        let (q, w) = normalize_for_descent(&src, 3).unwrap();
        assert_eq!((q.a(), q.b() % 3, q.c() % 9), (7, 0, 0));
        assert!(w.certifies(&src, &q));

        assert_eq!(
            normalize_for_descent(&form(25, 15, 3), 5),
            Err(Error::NotCoprime { a: 25, modulus: 5 })
        );
    }

    #[test]
    fn descend_examples() {
        let r = descend(&form(1, 0, 9), 3).unwrap();
        assert_eq!(r.base, form(1, 0, 1));
        assert_eq!(r.lift.det().unwrap(), 3);
        assert_eq!(r.base.act(&r.lift).unwrap(), form(1, 0, 9));

        let r = descend(&form(25, 15, 3), 5).unwrap();
        assert_eq!(r.base, form(1, 1, 1));
        assert_eq!(r.base.act(&r.lift).unwrap(), form(25, 15, 3));
    }

    #[test]
    fn descend_guards() {
        assert!(matches!(descend(&form(1, 1, 6), 3), Err(Error::NotDivisible { .. })));
        assert_eq!(descend(&form(1, 0, 9), 9), Err(Error::UnsupportedModulus(9)));
        assert_eq!(descend(&form(1, 0, 9), 2), Err(Error::UnsupportedModulus(2)));
        assert!(matches!(descend(&form(3, 0, 27), 3), Err(Error::NotPrimitive(_))));
    }

    #[test]
    fn descend_inverts_every_primitive_lift() {
        for q in class_set(-23).unwrap().iter() {
            let (q, _) = reduction::normalize_coprime(q, 3).unwrap();
            for g in primitive_lift_indices(&q, 3).unwrap() {
                let lifted = lift_g(&q, g).unwrap();
                let r = descend(&lifted, 3).unwrap();
                assert!(equivalent(&r.base, &q).unwrap().is_some(), "q={q} g={g}");
                assert_eq!(r.base.act(&r.lift).unwrap(), lifted);
            }
        }
    }

    #[test]
    fn descend_non_maximal_base_strips_one_factor() {
        // D f^2 = -4 * 9 * 9; one step lands at discriminant -36.
        let q = form(1, 0, 81);
        let r = descend(&q, 3).unwrap();
        assert_eq!(r.base.disc(), -36);
        assert_eq!(descend(&r.base, 3).unwrap().base, form(1, 0, 1));
    }

    #[test]
    fn semi_equivalence_examples() {
        let big_q = lift_g(&form(2, 1, 3), idx(3, 3)).unwrap();
        let moved = big_q.act(&M::new(2, 1, 7, 4)).unwrap();
        assert!(semi_equivalent(&big_q, &moved, 3).unwrap());

        let q = form(1, 1, 6);
        let lifts = primitive_lift_indices(&q, 3).unwrap();
        let (l1, l2) = (lift_g(&q, lifts[0]).unwrap(), lift_g(&q, lifts[1]).unwrap());
        assert!(equivalent(&l1, &l2).unwrap().is_none());
        assert!(semi_equivalent(&l1, &l2, 3).unwrap());

        let a = lift_g(&form(2, 1, 3), idx(3, 3)).unwrap();
        let b = lift_g(&form(1, 1, 6), idx(3, 3)).unwrap();
        assert!(!semi_equivalent(&a, &b, 3).unwrap());

        assert!(matches!(
            semi_equivalent(&a, &form(1, 0, 9), 3),
            Err(Error::DiscriminantMismatch(..))
        ));
    }

    #[test]
    fn principal_lift_examples() {
        let (q0, v) = to_principal_lift(&form(1, 0, 1), idx(3, 3)).unwrap();
        assert_eq!((q0, v), (form(1, 0, 1), M::IDENTITY));

        let (q0, v) = to_principal_lift(&form(1, 0, 1), idx(0, 3)).unwrap();
        assert_eq!(q0, form(1, 0, 1));
        assert_eq!(q0.act(&(idx(3, 3).matrix() * v)).unwrap(), form(9, 0, 1));

        let q = form(1, 1, 6);
        let (q0, v) = to_principal_lift(&q, idx(1, 3)).unwrap();
        assert_eq!((q0.a(), q0.c()), (8, 1));
        assert_eq!(q0.act(&(idx(3, 3).matrix() * v)).unwrap(), lift_g(&q, idx(1, 3)).unwrap());
        assert!(equivalent(&q0, &q).unwrap().is_some());
    }

    #[test]
    fn principal_lift_identity_for_all_indices() {
        for q in class_set(-71).unwrap().iter() {
            for g in 0..=7 {
                let i = idx(g, 7);
                let (q0, v) = to_principal_lift(q, i).unwrap();
                assert!(v.is_unimodular());
                assert_eq!(q0.act(&(idx(7, 7).matrix() * v)).unwrap(), lift_g(q, i).unwrap());
                assert!(equivalent(&q0, q).unwrap().is_some());
            }
        }
    }

    #[test]
    fn integral_conjugate_examples() {
        let q = form(2, 1, 3);
        let id = EquivWitness::IDENTITY;
        assert_eq!(integral_conjugate(&id, 5, &q).unwrap(), Some(M::IDENTITY));

        let t = EquivWitness::new(M::translation(2)).unwrap();
        assert_eq!(integral_conjugate(&t, 5, &q).unwrap(), None);
        assert!(!conjugate_action_is_integral(&t, 5, &q).unwrap());

        let tf = EquivWitness::new(M::translation(5)).unwrap();
        assert_eq!(integral_conjugate(&tf, 5, &q).unwrap(), Some(M::translation(1)));
        assert!(conjugate_action_is_integral(&tf, 5, &q).unwrap());

        assert!(matches!(
            integral_conjugate(&id, 3, &form(3, 1, 2)),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn integral_action_forces_integral_conjugate() {
        // No V with integral q.V may have a non-integral conjugate.
        let q = form(2, 1, 3);
        for f in [3, 5, 7] {
            for p in -6..=6 {
                for r in -6..=6 {
                    for s in -6..=6 {
                        for t in -6..=6 {
                            let Ok(u) = EquivWitness::new(M::new(p, r, s, t)) else { continue };
                            let integral = conjugate_action_is_integral(&u, f, &q).unwrap();
                            let v = integral_conjugate(&u, f, &q).unwrap();
                            assert_eq!(integral, v.is_some(), "U={u} f={f}");
                            if let Some(v) = v {
                                assert!(v.is_unimodular());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fiber_examples() {
        let classes = fiber(&form(1, 1, 6), 3).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.indices.len() == 1));

        let classes = fiber(&form(1, 0, 1), 5).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(class_set(-100).unwrap().len(), 2);
        let groups: Vec<Vec<Int>> = classes.iter().map(|c| c.indices.iter().map(LiftIndex::g).collect()).collect();
        assert_eq!(groups, vec![vec![0, 5], vec![1, 4]]);

        let classes = fiber(&form(1, 1, 1), 5).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(class_set(-75).unwrap().len(), 2);
        let groups: Vec<Vec<Int>> = classes.iter().map(|c| c.indices.iter().map(LiftIndex::g).collect()).collect();
        assert_eq!(groups, vec![vec![0, 4, 5], vec![1, 2, 3]]);
    }

    #[test]
    fn fiber_guards() {
        assert!(matches!(fiber(&form(3, 1, 2), 3), Err(Error::NotCoprime { .. })));
        assert!(matches!(fiber(&form(1, 1, -1), 3), Err(Error::IndefiniteUnsupported(5))));
        assert!(matches!(fiber(&form(1, 1, 6), 4), Err(Error::UnsupportedModulus(4))));
    }

    #[test]
    fn fiber_classes_are_reduced_lifts() {
        for class in fiber(&form(2, 1, 3), 7).unwrap() {
            for i in &class.indices {
                let lifted = lift_g(&form(2, 1, 3), *i).unwrap();
                assert_eq!(reduce(&lifted).unwrap().0, class.class);
            }
        }
    }
}
