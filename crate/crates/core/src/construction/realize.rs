use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{check_b, validate_target, AdjoinStep, TargetViolation};
use crate::arith::gcd;
use crate::catenary::{catenary_set, monoid_catenary, CatenaryProfile};
use crate::error::{Error, Result};
use crate::monoid::NumericalMonoid;

/// How the adjoined element `b` is picked at each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BPolicy {
    /// Least admissible `b ∈ S` above both `n_k` and every witness.
    Smallest,
    /// One value per step, in increasing order of `c`.
    Explicit(Vec<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub step: AdjoinStep,
    /// Catenary set of `step.result`: the previous set plus `step.c`.
    pub claimed_set: BTreeSet<u64>,
    /// Smallest element of `step.result` attaining each nonzero degree.
    pub witnesses: Witnesses,
}

/// Nonzero catenary degree to the smallest element attaining it.
pub type Witnesses = BTreeMap<u64, u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationTrace {
    pub target: BTreeSet<u64>,
    pub base_monoid: NumericalMonoid,
    /// Verified by direct computation when the base was built.
    pub base_set: BTreeSet<u64>,
    pub base_witnesses: Witnesses,
    pub steps: Vec<TraceStep>,
}

impl RealizationTrace {
    pub fn final_monoid(&self) -> &NumericalMonoid {
        self.steps
            .last()
            .map_or(&self.base_monoid, |s| &s.step.result)
    }

    pub fn final_set(&self) -> &BTreeSet<u64> {
        self.steps.last().map_or(&self.base_set, |s| &s.claimed_set)
    }

    pub fn final_witnesses(&self) -> &Witnesses {
        self.steps
            .last()
            .map_or(&self.base_witnesses, |s| &s.witnesses)
    }
}

/// Witnesses after adjoining `b` with scale `c`.
///
/// Every element of `T` is `t·b + c·m` with `c_T` either `c` or `c_S(m)`,
/// so no degree of `S` appears below `c` times its old witness. When
/// `b` exceeds that witness `w`, the element `c·w` has `c·w − c·b < 0`,
/// hence it keeps degree `c_S(w)`. The new degree `c` first shows up at
/// `c·b`.
fn step_witnesses(old: &Witnesses, c: u64, b: u64) -> Result<Witnesses> {
    let overflow = Error::Overflow { context: "tracking witnesses" };
    let mut out = Witnesses::new();
    for (&degree, &w) in old {
        out.insert(degree, w.checked_mul(c).ok_or(overflow.clone())?);
    }
    out.insert(c, b.checked_mul(c).ok_or(overflow)?);
    Ok(out)
}

fn witnesses_of(profile: &CatenaryProfile) -> Witnesses {
    let mut out = Witnesses::new();
    for &(n, degree) in &profile.entries {
        if degree > 0 {
            out.entry(degree).or_insert(n);
        }
    }
    out
}

/// A monoid whose catenary set is `{0, c}`, or `{0, 2, c}` when
/// `include_two`, verified by a direct sweep before it is returned.
pub fn base_monoid(c: u64, include_two: bool) -> Result<NumericalMonoid> {
    base_with_witnesses(c, include_two).map(|(s, _)| s)
}

fn base_with_witnesses(c: u64, include_two: bool) -> Result<(NumericalMonoid, Witnesses)> {
    if c < 3 {
        return Err(Error::InvalidTarget(TargetViolation::MaxBelowThree));
    }
    if include_two {
        with_two_base(c)
    } else {
        two_generator_base(c)
    }
}

/// Catenary set exactly `expected` on the default window.
fn verified(candidate: &NumericalMonoid, expected: &BTreeSet<u64>) -> Option<Witnesses> {
    let c = *expected.last().expect("nonempty");
    // Cheap rejection before the full sweep.
    match monoid_catenary(candidate) {
        Ok(found) if found == c => {}
        _ => return None,
    }
    match catenary_set(candidate, None) {
        Ok((set, profile)) if &set == expected => Some(witnesses_of(&profile)),
        _ => None,
    }
}

/// `⟨c-1, c⟩`: distinct factorizations in a two-generator monoid differ by
/// multiples of the trade `(c, -(c-1))`, so every element with more than
/// one factorization has catenary degree `c`.
fn two_generator_base(c: u64) -> Result<(NumericalMonoid, Witnesses)> {
    let s = NumericalMonoid::new(&[c - 1, c])?;
    let expected: BTreeSet<u64> = [0, c].into_iter().collect();
    match verified(&s, &expected) {
        Some(w) => Ok((s, w)),
        None => Err(Error::BaseCaseSearchExhausted { c }),
    }
}

/// Candidate families for `{0, 2, c}`, then a bounded search. Each
/// candidate is only accepted after a direct sweep.
fn with_two_base(c: u64) -> Result<(NumericalMonoid, Witnesses)> {
    let expected: BTreeSet<u64> = [0, 2, c].into_iter().collect();
    // ⟨3, c+1, 2c-1⟩ is cofinite unless c ≡ 2 (mod 3); the others were
    // found by search and cover the remaining cases seen so far.
    let families = [
        [3, c + 1, 2 * c - 1],
        [4, c + 2, 2 * c],
        [5, c + 2, 2 * c - 1],
        [6, c + 3, 2 * c],
    ];
    for raw in families {
        if let Ok(s) = NumericalMonoid::new(&raw) {
            if s.embedding_dimension() == 3 {
                if let Some(w) = verified(&s, &expected) {
                    return Ok((s, w));
                }
            }
        }
    }
    search_base(c, &expected)
}

/// Exhaustive search over tuples with at most four generators, each at most
/// `6c`, in order of dimension and then lexicographically.
fn search_base(c: u64, expected: &BTreeSet<u64>) -> Result<(NumericalMonoid, Witnesses)> {
    let limit = 6 * c;
    for k in 3..=4usize {
        let mut tuple: Vec<u64> = (2..2 + k as u64).collect();
        loop {
            if tuple[k - 1] <= limit && crate::arith::gcd_all(&tuple) == 1 {
                if let Ok(s) = NumericalMonoid::new(&tuple) {
                    if s.embedding_dimension() == k {
                        if let Some(w) = verified(&s, expected) {
                            return Ok((s, w));
                        }
                    }
                }
            }
            if !next_tuple(&mut tuple, limit) {
                break;
            }
        }
    }
    Err(Error::BaseCaseSearchExhausted { c })
}

/// Advances a strictly increasing tuple in lexicographic order, values in
/// `2..=limit`.
fn next_tuple(tuple: &mut [u64], limit: u64) -> bool {
    let k = tuple.len();
    for i in (0..k).rev() {
        let cap = limit - (k - 1 - i) as u64;
        if tuple[i] < cap {
            tuple[i] += 1;
            for j in i + 1..k {
                tuple[j] = tuple[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Lower bound a `b` must exceed: `n_k` and every witness of `base`.
fn b_floor(base: &NumericalMonoid, witnesses: &Witnesses) -> u64 {
    witnesses
        .values()
        .copied()
        .fold(base.largest_generator(), u64::max)
}

fn smallest_b(base: &NumericalMonoid, witnesses: &Witnesses, base_catenary: u64, c: u64) -> Result<u64> {
    let start = b_floor(base, witnesses) + 1;
    // Some element of length two above n_k is coprime to c in practice; the
    // cap keeps a pathological input from spinning.
    let end = start
        .checked_add(c.saturating_mul(base.largest_generator()))
        .ok_or(Error::Overflow { context: "searching for b" })?;
    (start..=end)
        .find(|&b| {
            base.is_element(b) && gcd(b, c) == 1 && check_b(base, base_catenary, c, b).is_ok()
        })
        .ok_or(Error::NoAdmissibleB { c })
}

/// Builds a numerical monoid whose set of catenary degrees is `target`.
///
/// The two smallest nonzero degrees seed the base; each further degree
/// `c`, in increasing order, is added by one adjoin step.
pub fn realize(target: &BTreeSet<u64>, policy: &BPolicy) -> Result<RealizationTrace> {
    validate_target(target).map_err(Error::InvalidTarget)?;
    let mut above_two = target.iter().copied().filter(|&x| x > 2);
    let first = above_two.next().expect("max >= 3");
    let rest: Vec<u64> = above_two.collect();

    let mut base_set: BTreeSet<u64> = [0, first].into_iter().collect();
    if target.contains(&2) {
        base_set.insert(2);
    }
    let (base_monoid, base_witnesses) = base_with_witnesses(first, target.contains(&2))?;

    if let BPolicy::Explicit(list) = policy {
        if list.len() != rest.len() {
            return Err(Error::BadExplicitBCount {
                given: list.len(),
                needed: rest.len(),
            });
        }
    }

    let mut steps: Vec<TraceStep> = Vec::with_capacity(rest.len());
    let mut current = base_monoid.clone();
    let mut current_catenary = first;
    let mut current_set = base_set.clone();
    let mut current_witnesses = base_witnesses.clone();
    for (i, &c) in rest.iter().enumerate() {
        let b = match policy {
            BPolicy::Smallest => smallest_b(&current, &current_witnesses, current_catenary, c)?,
            BPolicy::Explicit(list) => {
                let b = list[i];
                if b <= current.largest_generator() {
                    return Err(Error::BadExplicitB {
                        b,
                        c,
                        reason: alloc::format!(
                            "must exceed the largest generator {}",
                            current.largest_generator()
                        ),
                    });
                }
                let floor = b_floor(&current, &current_witnesses);
                if b <= floor {
                    return Err(Error::BadExplicitB {
                        b,
                        c,
                        reason: alloc::format!(
                            "must exceed {floor}, the largest element witnessing a degree of {current}"
                        ),
                    });
                }
                check_b(&current, current_catenary, c, b).map_err(|e| Error::BadExplicitB {
                    b,
                    c,
                    reason: e.to_string(),
                })?;
                b
            }
        };
        let step =
            AdjoinStep::with_base_catenary(&current, current_catenary, c, b).map_err(|e| match e {
                Error::Overflow { .. } => Error::Overflow {
                    context: "adjoining a realization step",
                },
                other => other,
            })?;
        let claimed_set = step.claimed_set(&current_set);
        let witnesses = step_witnesses(&current_witnesses, c, b)?;
        current = step.result.clone();
        current_catenary = c;
        current_set = claimed_set.clone();
        current_witnesses = witnesses.clone();
        steps.push(TraceStep {
            step,
            claimed_set,
            witnesses,
        });
    }

    Ok(RealizationTrace {
        target: target.clone(),
        base_monoid,
        base_set,
        base_witnesses,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn two_generator_bases() {
        for c in 3..=9 {
            let s = base_monoid(c, false).unwrap();
            assert_eq!(s.generators(), &[c - 1, c]);
        }
    }

    #[test]
    fn base_with_two() {
        assert_eq!(base_monoid(7, true).unwrap().generators(), &[3, 8, 13]);
        for c in 3..=10 {
            let s = base_monoid(c, true).unwrap();
            let (found, _) = catenary_set(&s, None).unwrap();
            assert_eq!(found, set(&[0, 2, c]), "{s}");
        }
    }

    #[test]
    fn search_fallback() {
        let (s, _) = search_base(8, &set(&[0, 2, 8])).unwrap();
        assert_eq!(s.generators(), &[6, 11, 16]);
        let (s, _) = search_base(5, &set(&[0, 2, 5])).unwrap();
        assert_eq!(s.generators(), &[4, 7, 10]);
    }

    #[test]
    fn tuple_iteration() {
        let mut t = [2u64, 3];
        let mut seen = alloc::vec![t.to_vec()];
        while next_tuple(&mut t, 5) {
            seen.push(t.to_vec());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &[4, 5]);
    }

    #[test]
    fn chain_up_to_57() {
        let trace = realize(
            &set(&[0, 2, 7, 20, 26, 57]),
            &BPolicy::Explicit(alloc::vec![51, 1301, 57001]),
        )
        .unwrap();
        assert_eq!(trace.base_monoid.generators(), &[3, 8, 13]);
        assert_eq!(
            trace.final_monoid().generators(),
            &[57001, 74157, 75582, 88920, 237120, 385320]
        );
        assert_eq!(trace.final_set(), &set(&[0, 2, 7, 20, 26, 57]));
        assert_eq!(trace.base_witnesses, BTreeMap::from([(2, 16), (7, 21)]));
        assert_eq!(trace.steps[0].witnesses, BTreeMap::from([(2, 320), (7, 420), (20, 1020)]));
    }

    #[test]
    fn small_b_loses_a_degree() {
        // ⟨2,3⟩ with c = 5 and b = 4 passes every adjoin check, but 3 is
        // no longer a catenary degree of ⟨4,10,15⟩.
        let (found, _) = catenary_set(&NumericalMonoid::new(&[4, 10, 15]).unwrap(), None).unwrap();
        assert_eq!(found, set(&[0, 5]));
        let err = realize(&set(&[0, 3, 5]), &BPolicy::Explicit(alloc::vec![4])).unwrap_err();
        assert_eq!(err.name(), "BadExplicitB");
        let trace = realize(&set(&[0, 3, 5]), &BPolicy::Smallest).unwrap();
        assert!(trace.steps[0].step.b > 6);
    }

    #[test]
    fn no_steps() {
        let trace = realize(&set(&[0, 2, 7]), &BPolicy::Smallest).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(trace.final_monoid().generators(), &[3, 8, 13]);
        let trace = realize(&set(&[0, 3]), &BPolicy::Smallest).unwrap();
        assert_eq!(trace.final_monoid().generators(), &[2, 3]);
    }

    #[test]
    fn smallest_policy() {
        let trace = realize(&set(&[0, 3, 5, 8]), &BPolicy::Smallest).unwrap();
        assert_eq!(trace.steps.len(), 2);
        for step in &trace.steps {
            assert!(step.step.b > step.step.base.largest_generator());
        }
        assert_eq!(trace.final_set(), &set(&[0, 3, 5, 8]));
    }

    #[test]
    fn explicit_errors() {
        let target = set(&[0, 2, 7, 20]);
        assert_eq!(
            realize(&target, &BPolicy::Explicit(alloc::vec![])),
            Err(Error::BadExplicitBCount { given: 0, needed: 1 })
        );
        let err = realize(&target, &BPolicy::Explicit(alloc::vec![12])).unwrap_err();
        assert_eq!(err.name(), "BadExplicitB");
        let err = realize(&target, &BPolicy::Explicit(alloc::vec![50])).unwrap_err();
        assert_eq!(err.name(), "BadExplicitB");
        let err = realize(&set(&[0, 1, 5]), &BPolicy::Smallest).unwrap_err();
        assert_eq!(err.name(), "InvalidTarget");
    }
}
