//! The Zariski closed-set family of a spectrum as an explicit finite
//! topological space, plus the separation, irreducibility, compactness and
//! spectral-space analyses run against it.
//!
//! `build_zariski` refuses modules whose variety family is not stable under
//! finite unions (equivalently, the χ-identity over semiprime pairs fails);
//! for accepted modules every topology axiom is re-checked as computed set
//! equalities, never assumed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codeset::CodeSet;
use crate::finite_algebra::Code;
use crate::graded::GradedSubmodule;
use crate::spectrum::{PointSet, Spectrum};
use crate::{Error, Result};

/// Explicit finite topological space given by its closed-set family.
///
/// The family is kept sorted and deduplicated. Hand-built families (for
/// counterexample experiments) may violate the axioms; `axiom_report`
/// tells.
#[derive(Debug, Clone)]
pub struct FiniteTopologySpace {
    num_points: u32,
    closed: Vec<CodeSet>,
}

/// Axiom verdicts for a closed-set family.
#[derive(Debug, Clone)]
pub struct TopologyAxioms {
    pub has_empty: bool,
    pub has_full: bool,
    pub intersection_stable: Option<(CodeSet, CodeSet)>,
    pub union_stable: Option<(CodeSet, CodeSet)>,
}

impl TopologyAxioms {
    pub fn all_hold(&self) -> bool {
        self.has_empty
            && self.has_full
            && self.intersection_stable.is_none()
            && self.union_stable.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct IrreducibleVerdict {
    pub holds: bool,
    /// Two proper relatively-closed subsets covering the set.
    pub witness: Option<(CodeSet, CodeSet)>,
}

impl FiniteTopologySpace {
    pub fn from_closed_sets(num_points: u32, sets: Vec<CodeSet>) -> Self {
        let mut closed = sets;
        closed.sort();
        closed.dedup();
        FiniteTopologySpace { num_points, closed }
    }

    pub fn num_points(&self) -> u32 {
        self.num_points
    }

    pub fn points(&self) -> CodeSet {
        CodeSet::full(self.num_points)
    }

    pub fn closed_sets(&self) -> &[CodeSet] {
        &self.closed
    }

    pub fn is_closed(&self, set: &CodeSet) -> bool {
        self.closed.binary_search(set).is_ok()
    }

    /// Open sets as complements of closed sets.
    pub fn open_sets(&self) -> Vec<CodeSet> {
        let full = self.points();
        let mut opens: Vec<CodeSet> = self
            .closed
            .iter()
            .map(|c| CodeSet::from_iter(full.iter().filter(|&p| !c.contains(p))))
            .collect();
        opens.sort();
        opens.dedup();
        opens
    }

    pub fn axiom_report(&self) -> TopologyAxioms {
        let full = self.points();
        let has_empty = self.is_closed(&CodeSet::new());
        let has_full = self.is_closed(&full);
        let mut intersection_stable = None;
        let mut union_stable = None;
        'out: for a in &self.closed {
            for b in &self.closed {
                if !self.is_closed(&a.intersect(b)) {
                    intersection_stable = Some((a.clone(), b.clone()));
                    break 'out;
                }
            }
        }
        'out2: for a in &self.closed {
            for b in &self.closed {
                if !self.is_closed(&a.union(b)) {
                    union_stable = Some((a.clone(), b.clone()));
                    break 'out2;
                }
            }
        }
        TopologyAxioms {
            has_empty,
            has_full,
            intersection_stable,
            union_stable,
        }
    }

    /// Smallest closed superset. Well-defined whenever the family is
    /// intersection-stable and contains the full set.
    pub fn closure(&self, set: &CodeSet) -> CodeSet {
        let mut out = self.points();
        for c in &self.closed {
            if set.is_subset(c) && c.len() < out.len() {
                out = c.clone();
            }
        }
        // with intersection stability the minimal superset is unique
        for c in &self.closed {
            if set.is_subset(c) {
                out = out.intersect(c);
            }
        }
        out
    }

    /// T0: distinct points have distinct closures.
    pub fn t0_witness(&self) -> Option<(Code, Code)> {
        for a in 0..self.num_points {
            for b in (a + 1)..self.num_points {
                if self.closure(&CodeSet::singleton(a)) == self.closure(&CodeSet::singleton(b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_t0(&self) -> bool {
        self.t0_witness().is_none()
    }

    /// T1: every singleton is closed.
    pub fn is_t1(&self) -> bool {
        (0..self.num_points).all(|p| self.is_closed(&CodeSet::singleton(p)))
    }

    pub fn is_closed_point(&self, p: Code) -> bool {
        self.is_closed(&CodeSet::singleton(p))
    }

    /// Relatively closed subsets of a subspace.
    pub fn relatively_closed(&self, subspace: &CodeSet) -> Vec<CodeSet> {
        let mut out: Vec<CodeSet> = self.closed.iter().map(|c| c.intersect(subspace)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Subspace irreducibility: a nonempty set that is not the union of two
    /// proper relatively-closed subsets. The empty set is not irreducible.
    pub fn irreducible(&self, subspace: &CodeSet) -> Result<IrreducibleVerdict> {
        if subspace.is_empty() {
            return Err(Error::Invalid(
                "irreducibility is undefined for the empty set".into(),
            ));
        }
        let rel = self.relatively_closed(subspace);
        for a in &rel {
            if a.len() == subspace.len() {
                continue;
            }
            for b in &rel {
                if b.len() == subspace.len() {
                    continue;
                }
                if a.union(b) == *subspace {
                    return Ok(IrreducibleVerdict {
                        holds: false,
                        witness: Some((a.clone(), b.clone())),
                    });
                }
            }
        }
        Ok(IrreducibleVerdict {
            holds: true,
            witness: None,
        })
    }

    /// Nonempty closed sets that are irreducible.
    pub fn irreducible_closed_sets(&self) -> Vec<CodeSet> {
        self.closed
            .iter()
            .filter(|c| !c.is_empty() && self.irreducible(c).unwrap().holds)
            .cloned()
            .collect()
    }

    /// Irreducible components: maximal irreducible closed subsets.
    pub fn components(&self) -> Vec<CodeSet> {
        let irr = self.irreducible_closed_sets();
        irr.iter()
            .filter(|c| !irr.iter().any(|d| c.is_proper_subset(d)))
            .cloned()
            .collect()
    }

    /// Points whose singleton closure is exactly the given closed set.
    pub fn generic_points(&self, closed: &CodeSet) -> Vec<Code> {
        (0..self.num_points)
            .filter(|&p| self.closure(&CodeSet::singleton(p)) == *closed)
            .collect()
    }

    /// Connected: no clopen set strictly between empty and full. The empty
    /// space is connected under this convention.
    pub fn is_connected(&self) -> bool {
        let full = self.points();
        for c in &self.closed {
            if c.is_empty() || c.len() == full.len() {
                continue;
            }
            let complement = CodeSet::from_iter(full.iter().filter(|&p| !c.contains(p)));
            if self.is_closed(&complement) {
                return false;
            }
        }
        true
    }

    /// Literal open-cover reduction: every subfamily of opens covering `u`
    /// admits a (trivially finite) subcover, confirmed by re-checking
    /// coverage of a greedily minimized subfamily. Enumerates all covers
    /// when the open family is small, which it is for every built space.
    pub fn quasi_compact(&self, u: &CodeSet) -> bool {
        let opens = self.open_sets();
        if opens.len() > 16 {
            // greedy reduction of the full family only
            return covers(&opens, u);
        }
        let n = opens.len();
        for mask in 0u32..(1 << n) {
            let family: Vec<&CodeSet> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &opens[i]).collect();
            let mut covered = CodeSet::new();
            for f in &family {
                covered = covered.union(f);
            }
            if !u.is_subset(&covered) {
                continue;
            }
            // extract a minimal subcover and confirm it still covers
            let mut keep: Vec<&CodeSet> = family.clone();
            let mut i = 0;
            while i < keep.len() {
                let mut rest = CodeSet::new();
                for (j, f) in keep.iter().enumerate() {
                    if j != i {
                        rest = rest.union(f);
                    }
                }
                if u.is_subset(&rest) {
                    keep.remove(i);
                } else {
                    i += 1;
                }
            }
            let mut final_cover = CodeSet::new();
            for f in &keep {
                final_cover = final_cover.union(f);
            }
            if !u.is_subset(&final_cover) {
                return false;
            }
        }
        true
    }

    /// The four conditions characterizing a weakly spectral space, each
    /// computed, plus the Noetherian-style criterion for cross-checking.
    pub fn weakly_spectral_report(&self) -> SpectralReport {
        let t0 = self.is_t0();
        let whole_quasi_compact = self.quasi_compact(&self.points());
        let opens = self.open_sets();
        let qc_opens: Vec<&CodeSet> = opens.iter().filter(|u| self.quasi_compact(u)).collect();
        let mut qc_intersection_stable = true;
        'qc: for a in &qc_opens {
            for b in &qc_opens {
                let meet = a.intersect(b);
                let is_open = opens.contains(&meet);
                if !is_open || !self.quasi_compact(&meet) {
                    qc_intersection_stable = false;
                    break 'qc;
                }
            }
        }
        let generic_points_exist = self
            .irreducible_closed_sets()
            .iter()
            .all(|c| !self.generic_points(c).is_empty());
        SpectralReport {
            t0,
            whole_quasi_compact,
            qc_intersection_stable,
            generic_points_exist,
        }
    }
}

fn covers(family: &[CodeSet], u: &CodeSet) -> bool {
    let mut covered = CodeSet::new();
    for f in family {
        covered = covered.union(f);
    }
    u.is_subset(&covered)
}

/// Weakly-spectral conditions: T0, quasi-compactness, stability of
/// quasi-compact opens under finite intersection, generic points for
/// irreducible closed subsets.
#[derive(Debug, Clone)]
pub struct SpectralReport {
    pub t0: bool,
    pub whole_quasi_compact: bool,
    pub qc_intersection_stable: bool,
    pub generic_points_exist: bool,
}

impl SpectralReport {
    pub fn is_weakly_spectral(&self) -> bool {
        self.t0 && self.whole_quasi_compact && self.qc_intersection_stable && self.generic_points_exist
    }

    /// Finite spaces are Noetherian, so the alternative criterion is
    /// "T0 and generic points exist".
    pub fn noetherian_criterion(&self) -> bool {
        self.t0 && self.generic_points_exist
    }
}

/// The Zariski space of a spectrum: the deduplicated variety family with a
/// canonical submodule label `η(C)` per closed set.
#[derive(Debug)]
pub struct ZariskiSpace {
    pub space: FiniteTopologySpace,
    /// Parallel to `space.closed_sets()`.
    pub labels: Vec<GradedSubmodule>,
}

/// Builds the Zariski space, refusing modules whose variety family is not a
/// topology and re-checking every axiom as set equalities.
pub fn build_zariski(spectrum: &Spectrum) -> Result<ZariskiSpace> {
    let report = spectrum.weakly_topological();
    if !report.union_identity {
        let (p, q) = report.union_identity_witness.expect("witness accompanies failure");
        return Err(Error::NotTopological { p, q });
    }

    let mut family: Vec<CodeSet> = spectrum
        .submodules()
        .iter()
        .map(|p| spectrum.variety_of(p))
        .collect();
    family.sort();
    family.dedup();
    let space = FiniteTopologySpace::from_closed_sets(spectrum.len() as u32, family);

    let axioms = space.axiom_report();
    if !axioms.all_hold() {
        return Err(Error::Internal(format!(
            "variety family fails a topology axiom despite the union identity: {axioms:?}"
        )));
    }

    // the defining identities, as computed set equalities
    for a in spectrum.submodules() {
        for b in spectrum.submodules() {
            let sum = spectrum.module().sum_submodules(a, b);
            let lhs = spectrum.variety_of(a).intersect(&spectrum.variety_of(b));
            if lhs != spectrum.variety_of(&sum) {
                return Err(Error::Internal(format!(
                    "χ({}) ∩ χ({}) differs from χ of the sum",
                    a.elems, b.elems
                )));
            }
            let meet = spectrum.module().intersect_submodules(a, b);
            let union = spectrum.variety_of(a).union(&spectrum.variety_of(b));
            if union != spectrum.variety_of(&meet) {
                return Err(Error::Internal(format!(
                    "χ({}) ∪ χ({}) differs from χ of the intersection",
                    a.elems, b.elems
                )));
            }
        }
    }

    let labels: Vec<GradedSubmodule> = space
        .closed_sets()
        .iter()
        .map(|c| spectrum.eta(c))
        .collect();
    Ok(ZariskiSpace { space, labels })
}

/// Closure computed lattice-theoretically, cross-checked against the
/// algebraic route `χ(η(W))`; a discrepancy is an internal error.
pub fn closure_checked(
    spectrum: &Spectrum,
    zariski: &ZariskiSpace,
    subset: &PointSet,
) -> Result<PointSet> {
    let lattice = zariski.space.closure(subset);
    let algebraic = spectrum.variety_of(&spectrum.eta(subset));
    if lattice != algebraic {
        return Err(Error::Internal(format!(
            "closure mismatch for {subset}: family gives {lattice}, χ(η(W)) gives {algebraic}"
        )));
    }
    Ok(lattice)
}

/// Deterministic subset family for subset-quantified checks: all nonempty
/// subsets up to `exhaustive_limit` points, otherwise all subsets of size
/// <= 3 plus 1000 seeded pseudorandom subsets.
pub fn subset_family(n: u32, exhaustive_limit: u32, seed: u64) -> Vec<PointSet> {
    if n == 0 {
        return Vec::new();
    }
    if n <= exhaustive_limit {
        return (1u64..(1u64 << n))
            .map(|mask| CodeSet::from_iter((0..n).filter(|&i| mask >> i & 1 == 1)))
            .collect();
    }
    let mut out: Vec<PointSet> = Vec::new();
    for a in 0..n {
        out.push(CodeSet::singleton(a));
        for b in (a + 1)..n {
            out.push(CodeSet::from_iter([a, b]));
            for c in (b + 1)..n {
                out.push(CodeSet::from_iter([a, b, c]));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let set = CodeSet::from_iter((0..n).filter(|_| rng.gen_bool(0.5)));
        if !set.is_empty() {
            out.push(set);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Deterministic DOT rendering of the specialization order (containment of
/// points); reflexive edges are omitted from the drawing.
pub fn export_dot(spectrum: &Spectrum) -> Result<String> {
    if spectrum.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let mut s = String::from("digraph specialization {\n  rankdir=BT;\n");
    for (i, p) in spectrum.points().iter().enumerate() {
        s.push_str(&format!("  n{} [label=\"{}\"];\n", i, p.elems));
    }
    for (i, j) in spectrum.specialization_edges() {
        if i != j {
            s.push_str(&format!("  n{i} -> n{j};\n"));
        }
    }
    s.push_str("}\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::{FiniteAbelianGroup, FiniteCommRing};
    use crate::graded::{GradedModule, GradedRing};
    use std::sync::Arc;

    fn self_spectrum(n: u32) -> Spectrum {
        let ring = Arc::new(
            GradedRing::trivial(
                FiniteCommRing::integers_mod(n).unwrap(),
                FiniteAbelianGroup::cyclic(2).unwrap(),
            )
            .unwrap(),
        );
        Spectrum::compute(Arc::new(GradedModule::self_module(&ring).unwrap())).unwrap()
    }

    #[test]
    fn zariski_space_of_z4() {
        let s = self_spectrum(4);
        let z = build_zariski(&s).unwrap();
        let sets: Vec<&CodeSet> = z.space.closed_sets().iter().collect();
        assert_eq!(sets.len(), 3, "∅, {{(2)}}, whole space");
        assert!(z.space.is_closed(&CodeSet::new()));
        assert!(z.space.is_closed(&CodeSet::from_iter([1])));
        assert!(z.space.is_closed(&CodeSet::from_iter([0, 1])));
        // labels are the η of each closed set
        for (c, label) in z.space.closed_sets().iter().zip(&z.labels) {
            assert_eq!(&s.variety_of(label), c);
        }
    }

    #[test]
    fn zariski_refuses_z6_with_semiprime_pair() {
        let s = self_spectrum(6);
        match build_zariski(&s) {
            Err(Error::NotTopological { p, q }) => {
                assert_eq!(p.as_slice(), &[0, 2, 4]);
                assert_eq!(q.as_slice(), &[0, 3]);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn closure_matches_chi_eta_on_all_subsets() {
        let s = self_spectrum(4);
        let z = build_zariski(&s).unwrap();
        for subset in subset_family(s.len() as u32, 12, 0) {
            closure_checked(&s, &z, &subset).unwrap();
        }
        // Cl({(0)}) is the whole space, Cl({(2)}) is itself
        assert_eq!(
            z.space.closure(&CodeSet::singleton(0)).as_slice(),
            &[0, 1]
        );
        assert_eq!(z.space.closure(&CodeSet::singleton(1)).as_slice(), &[1]);
        assert!(z.space.closure(&CodeSet::new()).is_empty());
    }

    #[test]
    fn t0_and_t1_flags() {
        let z4 = build_zariski(&self_spectrum(4)).unwrap();
        assert!(z4.space.is_t0());
        assert!(!z4.space.is_t1(), "(0) is not a closed point");
        assert!(z4.space.is_closed_point(1));
        assert!(!z4.space.is_closed_point(0));

        let z5 = build_zariski(&self_spectrum(5)).unwrap();
        assert!(z5.space.is_t0());
        assert!(z5.space.is_t1());
    }

    #[test]
    fn hand_built_non_t0_space() {
        let space = FiniteTopologySpace::from_closed_sets(
            2,
            vec![CodeSet::new(), CodeSet::from_iter([0, 1])],
        );
        assert!(!space.is_t0());
        let report = space.weakly_spectral_report();
        assert!(!report.t0);
        assert!(!report.is_weakly_spectral());
    }

    #[test]
    fn irreducibility_examples() {
        let s = self_spectrum(4);
        let z = build_zariski(&s).unwrap();
        assert!(z.space.irreducible(&CodeSet::singleton(0)).unwrap().holds);
        assert!(z.space.irreducible(&CodeSet::from_iter([0, 1])).unwrap().holds);
        assert!(z.space.irreducible(&CodeSet::new()).is_err());
    }

    #[test]
    fn reducible_subspace_carries_witness() {
        // two closed points of a T1-ish subspace split it
        let space = FiniteTopologySpace::from_closed_sets(
            2,
            vec![
                CodeSet::new(),
                CodeSet::singleton(0),
                CodeSet::singleton(1),
                CodeSet::from_iter([0, 1]),
            ],
        );
        let verdict = space.irreducible(&CodeSet::from_iter([0, 1])).unwrap();
        assert!(!verdict.holds);
        let (a, b) = verdict.witness.unwrap();
        assert_eq!(a.union(&b).as_slice(), &[0, 1]);
    }

    #[test]
    fn components_and_generic_points_of_z4() {
        let s = self_spectrum(4);
        let z = build_zariski(&s).unwrap();
        let comps = z.space.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].as_slice(), &[0, 1]);
        assert_eq!(z.space.generic_points(&comps[0]), vec![0]);
        for c in z.space.irreducible_closed_sets() {
            assert_eq!(z.space.generic_points(&c).len(), 1, "unique generic point");
        }
    }

    #[test]
    fn connectedness_and_compactness() {
        let z4 = build_zariski(&self_spectrum(4)).unwrap();
        assert!(z4.space.is_connected());
        assert!(z4.space.quasi_compact(&z4.space.points()));
        let report = z4.space.weakly_spectral_report();
        assert!(report.is_weakly_spectral());
        assert_eq!(report.is_weakly_spectral(), report.noetherian_criterion());
    }

    #[test]
    fn disconnected_hand_built_space() {
        let space = FiniteTopologySpace::from_closed_sets(
            2,
            vec![
                CodeSet::new(),
                CodeSet::singleton(0),
                CodeSet::singleton(1),
                CodeSet::from_iter([0, 1]),
            ],
        );
        assert!(!space.is_connected());
    }

    #[test]
    fn subset_family_is_deterministic_and_exhaustive_when_small() {
        assert_eq!(subset_family(3, 12, 7).len(), 7);
        let big1 = subset_family(20, 12, 42);
        let big2 = subset_family(20, 12, 42);
        assert_eq!(big1, big2);
        assert!(big1.iter().all(|s| !s.is_empty()));
    }

    #[test]
    fn dot_export_of_z4() {
        let s = self_spectrum(4);
        let dot = export_dot(&s).unwrap();
        let expected = "digraph specialization {\n  rankdir=BT;\n  n0 [label=\"{0}\"];\n  n1 [label=\"{0,2}\"];\n  n0 -> n1;\n}\n";
        assert_eq!(dot, expected);
    }

    #[test]
    fn dot_export_rejects_empty_spectrum() {
        let ring = Arc::new(
            GradedRing::trivial(
                FiniteCommRing::integers_mod(4).unwrap(),
                FiniteAbelianGroup::cyclic(2).unwrap(),
            )
            .unwrap(),
        );
        let m = GradedModule::self_module(&ring).unwrap();
        let (zero, _) = m.quotient(&m.full_submodule()).unwrap();
        let s = Spectrum::compute(Arc::new(zero)).unwrap();
        assert!(matches!(export_dot(&s), Err(Error::EmptySpectrum)));
    }
}
