//! Gluings, the scaled-adjoin construction, and realization of
//! catenary-degree sets.
//!
//! Adjoining `b` to `c·S` gives `T = ⟨c·n_1, …, c·n_k, b⟩`. Its Betti
//! elements are `c·Betti(S) ∪ {c·b}`, every element `n` with `n - c·b ∈ T`
//! has catenary degree `c`, and every other element inherits the degree of
//! the element `m ∈ S` with `n = t·b + c·m`, where `t < c` is forced by
//! `t·b ≡ n (mod c)`. Repeating with increasing `c` adds one catenary degree
//! per step.

mod realize;
mod verify;

pub use realize::{base_monoid, realize, BPolicy, RealizationTrace, TraceStep, Witnesses};
pub use verify::{verify_trace, CheckOutcome, CheckStatus, VerifyBudget, VerifyReport};

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::arith::{self, gcd, mod_inverse};
use crate::catenary::{betti_elements, catenary_element_with, monoid_catenary, CatenaryConfig};
use crate::error::{Error, Result};
use crate::factorization::for_each_factorization;
use crate::monoid::NumericalMonoid;

/// Inputs of a gluing `d1·S1 + d2·S2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingSpec {
    pub s1: NumericalMonoid,
    pub d1: u64,
    pub s2: NumericalMonoid,
    pub d2: u64,
    /// `lcm(d1, d2)`, which lies in both `d1·S1` and `d2·S2`.
    pub d: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gluing {
    pub spec: GluingSpec,
    pub result: NumericalMonoid,
}

impl Gluing {
    /// The scaled generators of both factors are exactly the minimal
    /// generators of the result. Catenary bounds for gluings assume this.
    pub fn is_proper(&self) -> bool {
        self.result.embedding_dimension()
            == self.spec.s1.embedding_dimension() + self.spec.s2.embedding_dimension()
    }
}

/// Glues `s1` and `s2` by `d = lcm(d1, d2)`.
///
/// `d` must lie in both scaled copies, i.e. `d/d1 ∈ S1` and `d/d2 ∈ S2`.
/// Membership of `d` in the unscaled `S1 ∩ S2` is not enough: it admits
/// `5·⟨2,3⟩ + 6·⟨6,7⟩ = ⟨10,15,36,42⟩`, whose catenary degree 8 exceeds
/// every degree of the factors and of `c(30) = 3`.
pub fn glue(s1: &NumericalMonoid, d1: u64, s2: &NumericalMonoid, d2: u64) -> Result<Gluing> {
    if d1 == 0 || d2 == 0 {
        return Err(Error::NonPositiveGenerator);
    }
    let d = arith::lcm(d1, d2)?;
    if !s1.is_element(d / d1) || !s2.is_element(d / d2) {
        return Err(Error::NotAGluing { lcm: d });
    }
    let mut raw = Vec::with_capacity(s1.embedding_dimension() + s2.embedding_dimension());
    for &g in s1.generators() {
        raw.push(arith::mul(d1, g, "scaling the first gluing factor")?);
    }
    for &g in s2.generators() {
        raw.push(arith::mul(d2, g, "scaling the second gluing factor")?);
    }
    let result = NumericalMonoid::new(&raw)?;
    Ok(Gluing {
        spec: GluingSpec {
            s1: s1.clone(),
            d1,
            s2: s2.clone(),
            d2,
            d,
        },
        result,
    })
}

/// A validated `T = ⟨c·n_1, …, c·n_k, b⟩` built from a base monoid `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjoinStep {
    pub base: NumericalMonoid,
    pub c: u64,
    pub b: u64,
    /// `c(S)`, strictly below `c`.
    pub base_catenary: u64,
    pub result: NumericalMonoid,
}

/// Builds `T = ⟨c·n_1, …, c·n_k, b⟩`, computing `c(S)` directly.
pub fn adjoin(base: &NumericalMonoid, c: u64, b: u64) -> Result<AdjoinStep> {
    let base_catenary = monoid_catenary(base)?;
    AdjoinStep::with_base_catenary(base, base_catenary, c, b)
}

impl AdjoinStep {
    /// Builds the step trusting `base_catenary` as `c(S)`; used along a
    /// realization chain where it is known exactly from the previous step.
    pub(crate) fn with_base_catenary(
        base: &NumericalMonoid,
        base_catenary: u64,
        c: u64,
        b: u64,
    ) -> Result<AdjoinStep> {
        check_b(base, base_catenary, c, b)?;
        let mut raw = Vec::with_capacity(base.embedding_dimension() + 1);
        for &g in base.generators() {
            raw.push(arith::mul(c, g, "scaling the base generators")?);
        }
        raw.push(b);
        arith::mul(c, b, "computing c·b")?;
        let result = NumericalMonoid::new(&raw)?;
        debug_assert_eq!(result.embedding_dimension(), raw.len());
        Ok(AdjoinStep {
            base: base.clone(),
            c,
            b,
            base_catenary,
            result,
        })
    }

    /// `c·b`, the Betti element contributed by the step.
    pub fn cb(&self) -> u64 {
        self.c * self.b
    }

    /// Generators in construction order: `c·n_1, …, c·n_k, b`.
    pub fn construction_generators(&self) -> Vec<u64> {
        let mut g: Vec<u64> = self.base.generators().iter().map(|&n| self.c * n).collect();
        g.push(self.b);
        g
    }

    /// `c(T)`, which equals `c`.
    pub fn catenary(&self) -> u64 {
        self.c
    }

    /// `C(T) = C(S) ∪ {c}` given the base set of catenary degrees.
    pub fn claimed_set(&self, base_set: &BTreeSet<u64>) -> BTreeSet<u64> {
        let mut set = base_set.clone();
        set.insert(self.c);
        set
    }

    /// The element `m ∈ S` whose catenary degree `n` inherits, or `None`
    /// when `n - c·b ∈ T` (the degree is then `c`).
    pub fn inherited_from(&self, n: u64) -> Result<Option<u64>> {
        if !self.result.is_element(n) {
            return Err(Error::NotAnElement { value: n as i64 });
        }
        let cb = self.cb();
        if n >= cb && self.result.is_element(n - cb) {
            return Ok(None);
        }
        // Every factorization uses b exactly t times, t·b ≡ n (mod c).
        let inverse = mod_inverse(self.b, self.c).expect("gcd(b, c) = 1");
        let t = ((n % self.c) as u128 * inverse as u128 % self.c as u128) as u64;
        let rest = n - t * self.b;
        debug_assert_eq!(rest % self.c, 0);
        Ok(Some(rest / self.c))
    }

    /// `c_T(n)` from the closed form, with base-side degrees computed directly.
    pub fn catenary_element(&self, n: i64) -> Result<u64> {
        self.catenary_element_with(n, &CatenaryConfig::default())
    }

    pub fn catenary_element_with(&self, n: i64, config: &CatenaryConfig) -> Result<u64> {
        if n < 0 {
            return Err(Error::NotAnElement { value: n });
        }
        match self.inherited_from(n as u64)? {
            None => Ok(self.c),
            Some(m) => catenary_element_with(&self.base, m as i64, config),
        }
    }

    /// `c·Betti(S) ∪ {c·b}`, ascending.
    pub fn betti(&self) -> Vec<u64> {
        let mut out: Vec<u64> = betti_elements(&self.base)
            .into_iter()
            .map(|x| x * self.c)
            .collect();
        out.push(self.cb());
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Closed-form catenary degree of an element of `step.result`.
pub fn adjoined_catenary_element(step: &AdjoinStep, n: i64) -> Result<u64> {
    step.catenary_element(n)
}

/// Betti elements of `step.result` from those of the base.
pub fn adjoined_betti(step: &AdjoinStep) -> Vec<u64> {
    step.betti()
}

/// Reasons a `b` cannot be adjoined with scale `c`; also used by the
/// realization b-policies.
fn check_b(base: &NumericalMonoid, base_catenary: u64, c: u64, b: u64) -> Result<()> {
    if c <= base_catenary || c < 2 {
        return Err(Error::CatenaryTooSmall { c, base_catenary });
    }
    if b == 0 || !base.is_element(b) {
        return Err(Error::NotAnElement { value: b as i64 });
    }
    let g = gcd(b, c);
    if g != 1 {
        return Err(Error::NotCoprime { b, c, gcd: g });
    }
    // With b an atom of S, c·b is a multiple of b and drops out of the
    // generating set.
    if base.generators().binary_search(&b).is_ok() {
        return Err(Error::RedundantGenerator { b });
    }
    // Z_T(c·b) holds (0, …, 0, c) and every (z, 0) with z ∈ Z_S(b), so
    // c_T(c·b) = c needs some factorization of b with at most c atoms.
    if !has_factorization_within(base, b, c) {
        let length = crate::factorization::min_length(base, b).unwrap_or(0);
        return Err(Error::LengthExceedsScale { b, c, length });
    }
    Ok(())
}

fn has_factorization_within(s: &NumericalMonoid, b: u64, max_len: u64) -> bool {
    if b / s.multiplicity() <= max_len {
        return true;
    }
    for_each_factorization(s, b, |a| {
        if a.iter().sum::<u64>() <= max_len {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_break()
}

/// Which necessary condition a candidate catenary set violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetViolation {
    /// (i) `0 ∈ C`
    MissingZero,
    /// (ii) `1 ∉ C`
    ContainsOne,
    /// (iii) `max C >= 3`
    MaxBelowThree,
}

impl fmt::Display for TargetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TargetViolation::MissingZero => "(i) 0 must belong to the set",
            TargetViolation::ContainsOne => "(ii) 1 must not belong to the set",
            TargetViolation::MaxBelowThree => "(iii) the maximum must be at least 3",
        })
    }
}

/// Checks the conditions under which a finite set is the set of catenary
/// degrees of some numerical monoid.
pub fn validate_target(target: &BTreeSet<u64>) -> core::result::Result<(), TargetViolation> {
    if !target.contains(&0) {
        return Err(TargetViolation::MissingZero);
    }
    if target.contains(&1) {
        return Err(TargetViolation::ContainsOne);
    }
    if target.last().copied().unwrap_or(0) < 3 {
        return Err(TargetViolation::MaxBelowThree);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monoid(g: &[u64]) -> NumericalMonoid {
        NumericalMonoid::new(g).unwrap()
    }

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn gluing_examples() {
        let g = glue(&monoid(&[3, 5, 7]), 2, &NumericalMonoid::naturals(), 9).unwrap();
        assert_eq!(g.result.generators(), &[6, 9, 10, 14]);
        assert_eq!(g.spec.d, 18);
        assert!(g.is_proper());
        let g = glue(&monoid(&[3, 5, 7]), 5, &monoid(&[2, 3]), 9).unwrap();
        assert_eq!(g.result.generators(), &[15, 18, 25, 27, 35]);
        // 10 = 4 + 6 is not an atom of the glued monoid.
        let g = glue(&monoid(&[2, 3]), 2, &monoid(&[2, 3]), 5).unwrap();
        assert_eq!(g.result.generators(), &[4, 6, 15]);
        assert!(!g.is_proper());
    }

    #[test]
    fn gluing_errors() {
        // 6 / 2 = 3 is not in ⟨4, 5⟩.
        assert_eq!(
            glue(&monoid(&[4, 5]), 2, &monoid(&[2, 3]), 3),
            Err(Error::NotAGluing { lcm: 6 })
        );
        // 30 lies in ⟨2,3⟩ and ⟨6,7⟩, but 30 / 6 = 5 is not in ⟨6,7⟩.
        assert_eq!(
            glue(&monoid(&[2, 3]), 5, &monoid(&[6, 7]), 6),
            Err(Error::NotAGluing { lcm: 30 })
        );
        // A gluing, but every generator is even.
        assert_eq!(
            glue(&monoid(&[2, 3]), 2, &NumericalMonoid::naturals(), 4),
            Err(Error::NotCofinite { gcd: 2 })
        );
        assert_eq!(
            glue(&monoid(&[2, 3]), 1 << 62, &NumericalMonoid::naturals(), 5).unwrap_err().name(),
            "Overflow"
        );
    }

    #[test]
    fn adjoin_examples() {
        let step = adjoin(&monoid(&[3, 8, 13]), 20, 51).unwrap();
        assert_eq!(step.base_catenary, 7);
        assert_eq!(step.result.generators(), &[51, 60, 160, 260]);
        assert_eq!(step.construction_generators(), [60, 160, 260, 51]);
        assert_eq!(step.cb(), 1020);

        let next = adjoin(&step.result, 26, 1301).unwrap();
        assert_eq!(next.base_catenary, 20);
        assert_eq!(next.result.generators(), &[1301, 1326, 1560, 4160, 6760]);

        assert_eq!(
            adjoin(&monoid(&[3, 8, 13]), 5, 14),
            Err(Error::CatenaryTooSmall { c: 5, base_catenary: 7 })
        );
        assert_eq!(
            adjoin(&monoid(&[3, 8, 13]), 20, 10),
            Err(Error::NotAnElement { value: 10 })
        );
        assert_eq!(
            adjoin(&monoid(&[3, 8, 13]), 20, 16),
            Err(Error::NotCoprime { b: 16, c: 20, gcd: 4 })
        );
        assert_eq!(
            adjoin(&monoid(&[3, 8, 13]), 21, 8),
            Err(Error::RedundantGenerator { b: 8 })
        );
    }

    #[test]
    fn long_b_is_rejected() {
        // ℕ scaled by 2 with b = 3 would give ⟨2, 3⟩, whose catenary degree is 3.
        assert_eq!(
            adjoin(&NumericalMonoid::naturals(), 2, 3),
            Err(Error::LengthExceedsScale { b: 3, c: 2, length: 3 })
        );
        assert!(adjoin(&NumericalMonoid::naturals(), 4, 3).is_ok());
    }

    #[test]
    fn closed_form_examples() {
        let step = adjoin(&monoid(&[3, 8, 13]), 20, 51).unwrap();
        assert_eq!(step.catenary_element(1020).unwrap(), 20);
        assert_eq!(step.catenary_element(120).unwrap(), 0);
        for &atom in step.result.generators() {
            assert_eq!(step.catenary_element(atom as i64).unwrap(), 0);
        }
        assert!(step.catenary_element(1).is_err());
        assert_eq!(step.inherited_from(120).unwrap(), Some(6));
    }

    #[test]
    fn betti_transport_examples() {
        let step = adjoin(&monoid(&[2, 3]), 5, 7).unwrap();
        assert_eq!(step.result.generators(), &[7, 10, 15]);
        assert_eq!(step.betti(), [30, 35]);
        assert_eq!(betti_elements(&step.result), [30, 35]);
    }

    #[test]
    fn target_validation() {
        assert_eq!(validate_target(&set(&[0, 2, 7, 20, 26, 57])), Ok(()));
        assert_eq!(validate_target(&set(&[0, 1, 5])), Err(TargetViolation::ContainsOne));
        assert_eq!(validate_target(&set(&[0, 2])), Err(TargetViolation::MaxBelowThree));
        assert_eq!(validate_target(&set(&[2, 5])), Err(TargetViolation::MissingZero));
        assert_eq!(validate_target(&set(&[])), Err(TargetViolation::MissingZero));
    }
}
