//! Ideal-theoretic predicates: colon ideals, annihilators, graded radicals,
//! weakly prime tests and the multiplication-module search.
//!
//! Every predicate that can fail returns a witness so that theorem-suite
//! failures are diagnosable.

use crate::codeset::CodeSet;
use crate::finite_algebra::Code;
use crate::graded::{GradedIdeal, GradedModule, GradedRing, GradedSubmodule};
use crate::{Error, Result};

/// Verdict of a weakly-prime style scan, with the offending pair on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeaklyPrimeVerdict {
    pub holds: bool,
    pub witness: Option<WeaklyPrimeWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeaklyPrimeWitness {
    NotProper,
    /// Homogeneous elements a, b with `0 != a·b ∈ I` but neither in I.
    ElementPair(Code, Code),
    /// Graded ideals with `{0} != I₁·I₂ ⊆ I` but neither contained in I.
    IdealPair(CodeSet, CodeSet),
    /// r, m with `0 != r·m ∈ P` but `m ∉ P` and `r ∉ (P : M)`.
    ActionPair(Code, Code),
}

impl WeaklyPrimeVerdict {
    fn pass() -> Self {
        WeaklyPrimeVerdict {
            holds: true,
            witness: None,
        }
    }
    fn fail(witness: WeaklyPrimeWitness) -> Self {
        WeaklyPrimeVerdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// `(P :_R M) = { r : r·M ⊆ P }`, always a graded ideal for graded `P`.
pub fn colon_ideal(module: &GradedModule, sub: &GradedSubmodule) -> Result<GradedIdeal> {
    module.require_graded_submodule(&sub.elems)?;
    let ring = module.ring();
    let elems = CodeSet::from_iter(ring.ring().elements().filter(|&r| {
        module
            .carrier()
            .elements()
            .all(|m| sub.elems.contains(module.act(r, m)))
    }));
    // guaranteed by the theory; a failure here is an implementation bug
    assert!(
        ring.is_graded_ideal(&elems),
        "colon ideal {elems} of {sub} is not a graded ideal"
    );
    Ok(GradedIdeal { elems })
}

/// `Ann(M) = (0 :_R M)`.
pub fn annihilator(module: &GradedModule) -> GradedIdeal {
    colon_ideal(module, &module.zero_submodule()).expect("zero submodule is always graded")
}

/// Graded radical: elements all of whose homogeneous components have some
/// positive power in `I`. Exponent search is bounded by the carrier size
/// since powers of an element cycle.
pub fn graded_radical(ring: &GradedRing, ideal: &GradedIdeal) -> Result<GradedIdeal> {
    if !ring.is_proper(ideal) {
        return Err(Error::NotProper(
            "graded radical is defined for proper ideals".into(),
        ));
    }
    let r = ring.ring();
    let has_power_in = |x: Code| -> bool {
        let mut seen = CodeSet::new();
        let mut p = x;
        loop {
            if ideal.contains(p) {
                return true;
            }
            if !seen.insert(p) {
                return false;
            }
            p = r.mul(p, x);
        }
    };
    let elems = CodeSet::from_iter(r.elements().filter(|&x| {
        ring.grading_group()
            .elements()
            .all(|g| has_power_in(ring.component_of(x, g)))
    }));
    assert!(
        ring.is_graded_ideal(&elems),
        "graded radical {elems} is not a graded ideal"
    );
    Ok(GradedIdeal { elems })
}

/// Proper graded ideals fixed by the graded radical.
pub fn radical_ideals(ring: &GradedRing, ideals: &[GradedIdeal]) -> Vec<GradedIdeal> {
    ideals
        .iter()
        .filter(|i| {
            ring.is_proper(i)
                && graded_radical(ring, i).map(|r| r.elems == i.elems).unwrap_or(false)
        })
        .cloned()
        .collect()
}

/// Elementwise weakly prime test over homogeneous pairs:
/// proper, and `0 != a·b ∈ I` forces `a ∈ I` or `b ∈ I`.
pub fn is_graded_weakly_prime_ideal(ring: &GradedRing, ideal: &GradedIdeal) -> WeaklyPrimeVerdict {
    is_graded_weakly_prime_ideal_with(ring, ideal, false)
}

/// Same scan with an optional inverted branch, used by the verify suite's
/// fault-injection meta-test to prove the theorem checks are not vacuous.
pub fn is_graded_weakly_prime_ideal_with(
    ring: &GradedRing,
    ideal: &GradedIdeal,
    invert_branch: bool,
) -> WeaklyPrimeVerdict {
    if !ring.is_proper(ideal) {
        return WeaklyPrimeVerdict::fail(WeaklyPrimeWitness::NotProper);
    }
    let homs = ring.homogeneous_values();
    for a in homs.iter() {
        for b in homs.iter() {
            let ab = ring.ring().mul(a, b);
            if ab != 0 && ideal.contains(ab) {
                let mut ok = ideal.contains(a) || ideal.contains(b);
                if invert_branch {
                    ok = !ok;
                }
                if !ok {
                    return WeaklyPrimeVerdict::fail(WeaklyPrimeWitness::ElementPair(a, b));
                }
            }
        }
    }
    WeaklyPrimeVerdict::pass()
}

/// Ideal-pair weakly prime characterization: proper, and
/// `{0} != I₁·I₂ ⊆ I` forces `I₁ ⊆ I` or `I₂ ⊆ I`, over all graded ideals.
pub fn is_graded_weakly_prime_pairs(
    ring: &GradedRing,
    ideal: &GradedIdeal,
    all_ideals: &[GradedIdeal],
) -> WeaklyPrimeVerdict {
    if !ring.is_proper(ideal) {
        return WeaklyPrimeVerdict::fail(WeaklyPrimeWitness::NotProper);
    }
    for i1 in all_ideals {
        for i2 in all_ideals {
            let prod = ring.product_ideal(i1, i2);
            if prod.elems.len() > 1 && prod.elems.is_subset(&ideal.elems) {
                if !i1.elems.is_subset(&ideal.elems) && !i2.elems.is_subset(&ideal.elems) {
                    return WeaklyPrimeVerdict::fail(WeaklyPrimeWitness::IdealPair(
                        i1.elems.clone(),
                        i2.elems.clone(),
                    ));
                }
            }
        }
    }
    WeaklyPrimeVerdict::pass()
}

/// Graded prime test (no zero exemption); used for the comparison table.
pub fn is_graded_prime_ideal(ring: &GradedRing, ideal: &GradedIdeal) -> WeaklyPrimeVerdict {
    if !ring.is_proper(ideal) {
        return WeaklyPrimeVerdict::fail(WeaklyPrimeWitness::NotProper);
    }
    let homs = ring.homogeneous_values();
    for a in homs.iter() {
        for b in homs.iter() {
            if ideal.contains(ring.ring().mul(a, b)) && !ideal.contains(a) && !ideal.contains(b) {
                return WeaklyPrimeVerdict::fail(WeaklyPrimeWitness::ElementPair(a, b));
            }
        }
    }
    WeaklyPrimeVerdict::pass()
}

/// Weakly prime submodule scan: proper, and `0 != r·m ∈ P` (r, m
/// homogeneous) forces `m ∈ P` or `r ∈ (P : M)`.
pub fn is_graded_weakly_prime_submodule(
    module: &GradedModule,
    sub: &GradedSubmodule,
) -> Result<WeaklyPrimeVerdict> {
    if !module.is_proper(sub) {
        return Ok(WeaklyPrimeVerdict::fail(WeaklyPrimeWitness::NotProper));
    }
    let colon = colon_ideal(module, sub)?;
    let ring_homs = module.ring().homogeneous_values();
    let mod_homs = module.homogeneous_values();
    for r in ring_homs.iter() {
        for m in mod_homs.iter() {
            let rm = module.act(r, m);
            if rm != 0 && sub.elems.contains(rm) && !sub.elems.contains(m) && !colon.contains(r) {
                return Ok(WeaklyPrimeVerdict::fail(WeaklyPrimeWitness::ActionPair(
                    r, m,
                )));
            }
        }
    }
    Ok(WeaklyPrimeVerdict::pass())
}

/// Pseudo weakly prime: the colon ideal is a graded weakly prime ideal.
/// Properness of `P` is automatic because `(M : M) = R` is never proper.
pub fn is_pseudo_weakly_prime(module: &GradedModule, sub: &GradedSubmodule) -> Result<bool> {
    Ok(is_pseudo_weakly_prime_with(module, sub, false)?.0)
}

pub fn is_pseudo_weakly_prime_with(
    module: &GradedModule,
    sub: &GradedSubmodule,
    invert_branch: bool,
) -> Result<(bool, GradedIdeal)> {
    let colon = colon_ideal(module, sub)?;
    let verdict = is_graded_weakly_prime_ideal_with(module.ring(), &colon, invert_branch);
    Ok((verdict.holds, colon))
}

/// Multiplication-module search: every graded submodule must equal `I·M`
/// for some graded ideal `I`. Returns the first submodule with no such
/// ideal as witness.
pub fn is_multiplication_module(
    module: &GradedModule,
    submodules: &[GradedSubmodule],
    ideals: &[GradedIdeal],
) -> (bool, Option<GradedSubmodule>) {
    for p in submodules {
        let found = ideals
            .iter()
            .any(|i| module.ideal_image(i).elems == p.elems);
        if !found {
            return (false, Some(p.clone()));
        }
    }
    (true, None)
}
