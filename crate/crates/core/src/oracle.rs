//! Brute-force reference implementations used to cross-check the main
//! modules: orbit search for equivalence, triple scans for class numbers and
//! pairwise orbit classification of lift fibers.
//!
//! Nothing here calls into `reduction` or `nesting`, and the few arithmetic
//! helpers it needs are restated locally. Forms are handled as raw
//! coefficient triples.

use std::collections::{HashSet, VecDeque};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::form::Form;

type Triple = (Int, Int, Int);

fn gcd(a: Int, b: Int) -> Int {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn is_odd_prime(n: Int) -> bool {
    n > 2 && n % 2 == 1 && (3..).step_by(2).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

fn max_abs((a, b, c): Triple) -> Int {
    a.abs().max(b.abs()).max(c.abs())
}

fn disc((a, b, c): Triple) -> Int {
    b * b - 4 * a * c
}

/// Pruning bounds for the orbit search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitBudget {
    pub max_coefficient: Int,
    pub max_steps: usize,
}

impl OrbitBudget {
    pub fn new(max_coefficient: Int, max_steps: usize) -> Result<Self> {
        if max_coefficient <= 0 || max_steps == 0 {
            return Err(Error::Parse("orbit budget bounds must be positive".into()));
        }
        Ok(OrbitBudget { max_coefficient, max_steps })
    }

    /// 64 times the largest input coefficient, and a million visited forms.
    pub fn for_forms<'a>(forms: impl IntoIterator<Item = &'a Form>) -> Self {
        let largest = forms.into_iter().map(|q| max_abs(q.coefficients())).max().unwrap_or(1);
        OrbitBudget { max_coefficient: 64 * largest.max(1), max_steps: 1_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitVerdict {
    Equivalent,
    /// The bounded orbit closed without reaching the target. Conclusive
    /// because reduction never raises the largest coefficient, so two
    /// equivalent forms inside the bound are connected inside it.
    Inequivalent,
    Inconclusive,
}

enum Closure {
    Closed(HashSet<Triple>),
    Exhausted,
}

// S, T and T^-1 acting on (a, b, c).
fn neighbours((a, b, c): Triple) -> [Triple; 3] {
    [(c, -b, a), (a, b + 2 * a, a + b + c), (a, b - 2 * a, a - b + c)]
}

fn closure(start: Triple, budget: OrbitBudget, stop_at: Option<Triple>) -> Closure {
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if Some(cur) == stop_at {
            return Closure::Closed(seen);
        }
        for next in neighbours(cur) {
            if max_abs(next) <= budget.max_coefficient && seen.insert(next) {
                if seen.len() > budget.max_steps {
                    return Closure::Exhausted;
                }
                queue.push_back(next);
            }
        }
    }
    Closure::Closed(seen)
}

/// Breadth-first search over the `S`, `T`, `T^-1` orbit of `q1`.
pub fn orbit_equivalent(q1: &Form, q2: &Form, budget: OrbitBudget) -> OrbitVerdict {
    let (start, target) = (q1.coefficients(), q2.coefficients());
    if start == target {
        return OrbitVerdict::Equivalent;
    }
    if disc(start) != disc(target) {
        return OrbitVerdict::Inequivalent;
    }
    if max_abs(start) > budget.max_coefficient {
        return OrbitVerdict::Inconclusive;
    }
    match closure(start, budget, Some(target)) {
        Closure::Exhausted => OrbitVerdict::Inconclusive,
        Closure::Closed(seen) if seen.contains(&target) => OrbitVerdict::Equivalent,
        Closure::Closed(_) if max_abs(target) > budget.max_coefficient => OrbitVerdict::Inconclusive,
        Closure::Closed(_) => OrbitVerdict::Inequivalent,
    }
}

/// Number of primitive reduced forms of discriminant `d < 0`, by scanning
/// every triple `(a, b, c)` in the reduced box.
pub fn exhaustive_class_count(d: Int) -> Result<usize> {
    if d >= 0 || !matches!(d.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidDiscriminant(d));
    }
    let mut bound = 0;
    while 3 * (bound + 1) * (bound + 1) <= -d {
        bound += 1;
    }
    let mut count = 0;
    for a in 1..=bound {
        let c_max = (a * a - d) / (4 * a) + 1;
        for b in -a..=a {
            for c in a..=c_max {
                if b * b - 4 * a * c != d || gcd(gcd(a, b), c) != 1 {
                    continue;
                }
                if (b.abs() == a || a == c) && b < 0 {
                    continue;
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Grouping of the primitive lifts `q . R_g` into equivalence classes,
/// decided pairwise by orbit search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    /// Lift indices `g` per class, each group ascending, groups ordered by
    /// smallest index.
    pub groups: Vec<Vec<Int>>,
    /// Some orbit search ran out of budget; the grouping is then unreliable.
    pub inconclusive: bool,
}

impl FiberReport {
    pub fn group_sizes(&self) -> Vec<usize> {
        self.groups.iter().map(Vec::len).collect()
    }
}

fn lift((a, b, c): Triple, g: Int, f: Int) -> Triple {
    if g == f {
        (a, f * b, f * f * c)
    } else {
        (f * f * a, f * (2 * a * g + b), a * g * g + b * g + c)
    }
}

pub fn exhaustive_fiber_check(q: &Form, f: Int) -> Result<FiberReport> {
    let base = q.coefficients();
    if !is_odd_prime(f) {
        return Err(Error::UnsupportedModulus(f));
    }
    if disc(base) >= 0 {
        return Err(Error::IndefiniteUnsupported(disc(base)));
    }
    if gcd(gcd(base.0, base.1), base.2) != 1 {
        return Err(Error::NotPrimitive(q.to_string()));
    }
    if gcd(base.0, f) != 1 {
        return Err(Error::NotCoprime { a: base.0, modulus: f });
    }
    let lifts: Vec<(Int, Triple)> = (0..=f)
        .map(|g| (g, lift(base, g, f)))
        .filter(|&(_, (a, b, c))| gcd(gcd(a, b), c) == 1)
        .collect();
    let largest = lifts.iter().map(|&(_, t)| max_abs(t)).max().unwrap_or(1);
    let budget = OrbitBudget { max_coefficient: 64 * largest, max_steps: 1_000_000 };

    let mut assigned = vec![false; lifts.len()];
    let mut groups = Vec::new();
    let mut inconclusive = false;
    for i in 0..lifts.len() {
        if assigned[i] {
            continue;
        }
        let orbit = match closure(lifts[i].1, budget, None) {
            Closure::Closed(seen) => seen,
            Closure::Exhausted => {
                inconclusive = true;
                HashSet::from([lifts[i].1])
            }
        };
        let mut group = Vec::new();
        for j in i..lifts.len() {
            if !assigned[j] && orbit.contains(&lifts[j].1) {
                assigned[j] = true;
                group.push(lifts[j].0);
            }
        }
        groups.push(group);
    }
    Ok(FiberReport { groups, inconclusive })
}

fn inverse_mod_prime(x: Int, f: Int) -> Int {
    // Fermat: x^(f-2) mod f.
    let (mut base, mut exp, mut acc) = (x.rem_euclid(f), f - 2, 1);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % f;
        }
        base = base * base % f;
        exp >>= 1;
    }
    acc
}

/// Predicted class grouping of the primitive lifts of the unique reduced form
/// at `d = -4` (`x^2 + y^2`) or `d = -3` (`x^2 + xy + y^2`), from the
/// automorph index maps:
///
/// * `d = -4`: `g ~ -1/g mod f`, and `0 ~ f`;
/// * `d = -3`: `g ~ -1/g - 1 ~ -1/(g + 1) mod f`, and `0 ~ f - 1 ~ f`.
///
/// Groups are ascending and ordered by smallest index.
pub fn exceptional_index_groups(d: Int, f: Int) -> Result<Vec<Vec<Int>>> {
    if !is_odd_prime(f) {
        return Err(Error::UnsupportedModulus(f));
    }
    let value = |g: Int| match d {
        -4 => g * g + 1,
        _ => g * g + g + 1,
    };
    let primitive: Vec<Int> = (0..f).filter(|&g| value(g) % f != 0).chain([f]).collect();
    let partners = |g: Int| -> Vec<Int> {
        match d {
            -4 if g == 0 => vec![0, f],
            -4 if g == f => vec![0, f],
            -4 => vec![g, (-inverse_mod_prime(g, f)).rem_euclid(f)],
            _ if g == 0 || g == f - 1 || g == f => vec![0, f - 1, f],
            _ => vec![
                g,
                (-inverse_mod_prime(g, f) - 1).rem_euclid(f),
                (-inverse_mod_prime(g + 1, f)).rem_euclid(f),
            ],
        }
    };
    if d != -3 && d != -4 {
        return Err(Error::InvalidDiscriminant(d));
    }
    let mut groups: Vec<Vec<Int>> = Vec::new();
    for &g in &primitive {
        if groups.iter().any(|grp| grp.contains(&g)) {
            continue;
        }
        let mut group = partners(g);
        group.sort();
        group.dedup();
        groups.push(group);
    }
    Ok(groups)
}
