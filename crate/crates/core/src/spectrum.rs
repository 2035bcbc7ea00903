//! The pseudo weakly prime spectrum of a graded module and its
//! combinatorics: varieties, fibers, radicals, extraordinariness, the
//! weakly-topological classification and the natural map into the weakly
//! prime ideals of `R/Ann(M)`.

use std::sync::Arc;

use crate::codeset::CodeSet;
use crate::finite_algebra::Code;
use crate::graded::{GradedIdeal, GradedModule, GradedRing, GradedSubmodule};
use crate::predicates::{
    annihilator, is_graded_weakly_prime_ideal_with, is_multiplication_module,
    is_pseudo_weakly_prime_with,
};
use crate::{Error, Result};

/// Sorted set of point indices into [`Spectrum::points`].
pub type PointSet = CodeSet;

/// The spectrum of graded pseudo weakly prime submodules, together with the
/// caches every downstream analysis needs: the full graded-submodule
/// lattice, the graded-ideal lattice of the base ring, per-point colon
/// ideals, the weakly prime ideals of the ring, and the semiprime
/// submodules (fixed points of the pseudo radical).
#[derive(Debug)]
pub struct Spectrum {
    module: Arc<GradedModule>,
    submodules: Vec<GradedSubmodule>,
    ideals: Vec<GradedIdeal>,
    points: Vec<GradedSubmodule>,
    colon_of: Vec<GradedIdeal>,
    gwspec: Vec<GradedIdeal>,
    semiprimes: Vec<GradedSubmodule>,
    invert_wp: bool,
}

/// Verdict of the extraordinary-submodule scan for one point.
#[derive(Debug, Clone)]
pub struct ExtraordinaryVerdict {
    pub holds: bool,
    /// Semiprime pair (I, J) with `{0} != I∩J ⊆ P` but neither inside P.
    pub witness: Option<(CodeSet, CodeSet)>,
}

/// Both routes to "weakly topological".
///
/// `all_points_extraordinary` is the definitional route (empty spectrum or
/// every point extraordinary, with the literal `{0} != I∩J` exemption).
/// `union_identity` is the χ-identity over semiprime pairs,
/// `χ(P) ∪ χ(I) = χ(P ∩ I)`, which is exactly equivalent to the closed-set
/// family being stable under finite unions, i.e. to the variety family
/// being a topology. The two routes provably agree in one direction
/// (identity implies extraordinary, hard-asserted at construction) but an
/// exhaustive search shows they genuinely diverge on some modules; both
/// verdicts are therefore reported.
#[derive(Debug, Clone)]
pub struct WeaklyTopologicalReport {
    pub all_points_extraordinary: bool,
    /// Point index plus the violating semiprime pair.
    pub extraordinary_witness: Option<(usize, CodeSet, CodeSet)>,
    pub union_identity: bool,
    /// Semiprime pair violating the χ-identity.
    pub union_identity_witness: Option<(CodeSet, CodeSet)>,
}

impl WeaklyTopologicalReport {
    /// The operative gate for building the Zariski space.
    pub fn is_topology(&self) -> bool {
        self.union_identity
    }

    /// The definitional verdict.
    pub fn definitional(&self) -> bool {
        self.all_points_extraordinary
    }
}

/// The natural map `P ↦ (P : M)/Ann(M)` into the weakly prime ideals of
/// the quotient ring.
#[derive(Debug)]
pub struct NaturalMap {
    pub quotient_ring: Arc<GradedRing>,
    /// Projection of ring codes onto quotient codes.
    pub projection: Vec<Code>,
    /// The codomain: weakly prime graded ideals of the quotient, sorted.
    pub codomain: Vec<GradedIdeal>,
    /// Point index -> codomain index.
    pub assignment: Vec<usize>,
    pub surjective: bool,
    pub injective: bool,
}

impl Spectrum {
    /// Enumerates the graded-submodule lattice and filters the pseudo
    /// weakly prime points, annotating each with its colon ideal.
    pub fn compute(module: Arc<GradedModule>) -> Result<Self> {
        Self::compute_with(module, false)
    }

    /// Same, with the weakly-prime branch optionally inverted (the verify
    /// suite's fault-injection hook).
    pub fn compute_with(module: Arc<GradedModule>, invert_wp: bool) -> Result<Self> {
        let submodules = module.enumerate_graded_submodules();
        let ideals = module.ring().enumerate_graded_ideals();
        let mut points = Vec::new();
        let mut colon_of = Vec::new();
        for sub in &submodules {
            let (is_point, colon) = is_pseudo_weakly_prime_with(&module, sub, invert_wp)?;
            if is_point {
                points.push(sub.clone());
                colon_of.push(colon);
            }
        }
        let gwspec: Vec<GradedIdeal> = ideals
            .iter()
            .filter(|i| is_graded_weakly_prime_ideal_with(module.ring(), i, invert_wp).holds)
            .cloned()
            .collect();

        let mut spectrum = Spectrum {
            module,
            submodules,
            ideals,
            points,
            colon_of,
            gwspec,
            semiprimes: Vec::new(),
            invert_wp,
        };
        spectrum.semiprimes = spectrum
            .submodules
            .iter()
            .filter(|p| spectrum.pseudo_radical(p).elems == p.elems)
            .cloned()
            .collect();
        Ok(spectrum)
    }

    pub fn module(&self) -> &Arc<GradedModule> {
        &self.module
    }

    pub fn submodules(&self) -> &[GradedSubmodule] {
        &self.submodules
    }

    pub fn ideals(&self) -> &[GradedIdeal] {
        &self.ideals
    }

    pub fn points(&self) -> &[GradedSubmodule] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn colon_of(&self, point: usize) -> &GradedIdeal {
        &self.colon_of[point]
    }

    /// Weakly prime graded ideals of the base ring.
    pub fn gwspec(&self) -> &[GradedIdeal] {
        &self.gwspec
    }

    pub fn semiprimes(&self) -> &[GradedSubmodule] {
        &self.semiprimes
    }

    pub fn invert_wp(&self) -> bool {
        self.invert_wp
    }

    pub fn point_index(&self, sub: &GradedSubmodule) -> Option<usize> {
        self.points.binary_search(sub).ok()
    }

    pub fn all_points(&self) -> PointSet {
        CodeSet::full(self.points.len() as u32)
    }

    /// Index of the zero submodule among the points, when it is one.
    pub fn zero_point(&self) -> Option<usize> {
        self.point_index(&self.module.zero_submodule())
    }

    /// The variety `χ(P)`: the points containing the given element set.
    pub fn variety(&self, elems: &CodeSet) -> PointSet {
        CodeSet::from_iter(self.points.iter().enumerate().filter_map(|(i, p)| {
            if elems.is_subset(&p.elems) {
                Some(i as Code)
            } else {
                None
            }
        }))
    }

    pub fn variety_of(&self, sub: &GradedSubmodule) -> PointSet {
        self.variety(&sub.elems)
    }

    /// Intersection of a set of points; the empty intersection is `M`.
    pub fn eta(&self, pts: &PointSet) -> GradedSubmodule {
        let mut iter = pts.iter();
        let first = match iter.next() {
            None => return self.module.full_submodule(),
            Some(i) => i,
        };
        let mut elems = self.points[first as usize].elems.clone();
        for i in iter {
            elems = elems.intersect(&self.points[i as usize].elems);
        }
        GradedSubmodule { elems }
    }

    /// `η(χ(P))`, the intersection of all points containing `P`;
    /// equals `M` when the variety is empty.
    pub fn pseudo_radical(&self, sub: &GradedSubmodule) -> GradedSubmodule {
        self.eta(&self.variety_of(sub))
    }

    /// Whether `P` is an intersection of points (equivalently a fixed point
    /// of the pseudo radical; any witnessing family refines `χ(P)`).
    pub fn is_semiprime(&self, sub: &GradedSubmodule) -> bool {
        self.pseudo_radical(sub).elems == sub.elems
    }

    /// The fiber over a weakly prime ideal: points with that colon.
    pub fn fiber(&self, ideal: &GradedIdeal) -> Result<PointSet> {
        if !is_graded_weakly_prime_ideal_with(self.module.ring(), ideal, self.invert_wp).holds {
            return Err(Error::Invalid(format!(
                "fiber index {} is not a graded weakly prime ideal",
                ideal.elems
            )));
        }
        Ok(CodeSet::from_iter(self.colon_of.iter().enumerate().filter_map(
            |(i, c)| {
                if c.elems == ideal.elems {
                    Some(i as Code)
                } else {
                    None
                }
            },
        )))
    }

    /// Extraordinary scan for one point, with the literal zero-intersection
    /// exemption.
    pub fn is_extraordinary(&self, point: usize) -> ExtraordinaryVerdict {
        let p = &self.points[point].elems;
        for i in &self.semiprimes {
            for j in &self.semiprimes {
                let meet = i.elems.intersect(&j.elems);
                if meet.len() > 1
                    && meet.is_subset(p)
                    && !i.elems.is_subset(p)
                    && !j.elems.is_subset(p)
                {
                    return ExtraordinaryVerdict {
                        holds: false,
                        witness: Some((i.elems.clone(), j.elems.clone())),
                    };
                }
            }
        }
        ExtraordinaryVerdict {
            holds: true,
            witness: None,
        }
    }

    /// Computes both weakly-topological routes; see
    /// [`WeaklyTopologicalReport`].
    pub fn weakly_topological(&self) -> WeaklyTopologicalReport {
        let mut all_extra = true;
        let mut extra_witness = None;
        for idx in 0..self.points.len() {
            let v = self.is_extraordinary(idx);
            if !v.holds {
                all_extra = false;
                let (i, j) = v.witness.unwrap();
                extra_witness = Some((idx, i, j));
                break;
            }
        }

        let mut identity = true;
        let mut identity_witness = None;
        'outer: for (a, i) in self.semiprimes.iter().enumerate() {
            for j in &self.semiprimes[a..] {
                let lhs = self.variety(&i.elems).union(&self.variety(&j.elems));
                let rhs = self.variety(&i.elems.intersect(&j.elems));
                if lhs != rhs {
                    identity = false;
                    identity_witness = Some((i.elems.clone(), j.elems.clone()));
                    break 'outer;
                }
            }
        }

        // The χ-identity implies every point is extraordinary; the converse
        // genuinely fails on some modules. A violation of the provable
        // direction is an implementation bug.
        assert!(
            !identity || all_extra,
            "union identity holds but a point is not extraordinary"
        );

        WeaklyTopologicalReport {
            all_points_extraordinary: all_extra,
            extraordinary_witness: extra_witness,
            union_identity: identity,
            union_identity_witness: identity_witness,
        }
    }

    /// Multiplication-module verdict from the cached lattices.
    pub fn multiplication(&self) -> (bool, Option<GradedSubmodule>) {
        is_multiplication_module(&self.module, &self.submodules, &self.ideals)
    }

    /// Builds the natural map; requires a nonempty spectrum.
    pub fn natural_map(&self) -> Result<NaturalMap> {
        if self.points.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        let ann = annihilator(&self.module);
        let ring = self.module.ring();
        let (qring, projection) = ring.quotient(&ann)?;
        let qring = Arc::new(qring);
        let codomain: Vec<GradedIdeal> = qring
            .enumerate_graded_ideals()
            .into_iter()
            .filter(|i| is_graded_weakly_prime_ideal_with(&qring, i, self.invert_wp).holds)
            .collect();
        let mut assignment = Vec::with_capacity(self.points.len());
        for colon in &self.colon_of {
            let image = CodeSet::from_iter(colon.elems.iter().map(|x| projection[x as usize]));
            let idx = codomain
                .iter()
                .position(|i| i.elems == image)
                .ok_or_else(|| {
                    Error::Internal(format!(
                        "natural-map image {image} is not weakly prime in the quotient"
                    ))
                })?;
            assignment.push(idx);
        }
        let surjective = (0..codomain.len()).all(|i| assignment.contains(&i));
        let injective = {
            let mut seen = CodeSet::new();
            assignment.iter().all(|&i| seen.insert(i as Code))
        };
        Ok(NaturalMap {
            quotient_ring: qring,
            projection,
            codomain,
            assignment,
            surjective,
            injective,
        })
    }

    /// Primeful: the zero module, or the natural map is surjective.
    pub fn is_primeful(&self) -> Result<bool> {
        if self.module.is_zero_module() {
            return Ok(true);
        }
        if self.points.is_empty() {
            return Ok(false);
        }
        Ok(self.natural_map()?.surjective)
    }

    /// Pseudo weakly injective: the natural map is injective (vacuously so
    /// on an empty spectrum).
    pub fn is_injective(&self) -> Result<bool> {
        if self.points.is_empty() {
            return Ok(true);
        }
        Ok(self.natural_map()?.injective)
    }

    /// Minimal points under containment.
    pub fn minimal_points(&self) -> PointSet {
        CodeSet::from_iter((0..self.points.len()).filter_map(|i| {
            let minimal = !(0..self.points.len()).any(|j| {
                j != i && self.points[j].elems.is_proper_subset(&self.points[i].elems)
            });
            if minimal {
                Some(i as Code)
            } else {
                None
            }
        }))
    }

    /// Specialization edges `P -> Q` for `Q ∈ Cl({P})`, i.e. `P ⊆ Q`;
    /// reflexive and, by antisymmetry of containment, consistent with T0.
    pub fn specialization_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            for (j, q) in self.points.iter().enumerate() {
                if p.elems.is_subset(&q.elems) {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::{FiniteAbelianGroup, FiniteCommRing};

    fn trivial(n: u32) -> Arc<GradedRing> {
        Arc::new(
            GradedRing::trivial(
                FiniteCommRing::integers_mod(n).unwrap(),
                FiniteAbelianGroup::cyclic(2).unwrap(),
            )
            .unwrap(),
        )
    }

    fn self_spectrum(n: u32) -> Spectrum {
        let m = Arc::new(GradedModule::self_module(&trivial(n)).unwrap());
        Spectrum::compute(m).unwrap()
    }

    fn z2_square_spectrum() -> Spectrum {
        let r = trivial(2);
        let m = Arc::new(GradedModule::free_module(&r, &[0, 0]).unwrap());
        Spectrum::compute(m).unwrap()
    }

    #[test]
    fn spectrum_of_z4_has_two_points() {
        let s = self_spectrum(4);
        let pts: Vec<&[Code]> = s.points().iter().map(|p| p.elems.as_slice()).collect();
        assert_eq!(pts, vec![&[0][..], &[0, 2][..]]);
        assert_eq!(s.colon_of(0).elems.as_slice(), &[0]);
        assert_eq!(s.colon_of(1).elems.as_slice(), &[0, 2]);
    }

    #[test]
    fn spectrum_of_field_is_single_point() {
        let s = self_spectrum(5);
        assert_eq!(s.len(), 1);
        assert_eq!(s.points()[0].elems.as_slice(), &[0]);
    }

    #[test]
    fn spectrum_of_zero_module_is_empty() {
        let r = trivial(4);
        let m = GradedModule::self_module(&r).unwrap();
        let (zero, _) = m.quotient(&m.full_submodule()).unwrap();
        let s = Spectrum::compute(Arc::new(zero)).unwrap();
        assert!(s.is_empty());
        assert!(matches!(s.natural_map(), Err(Error::EmptySpectrum)));
    }

    #[test]
    fn variety_examples() {
        let s = self_spectrum(4);
        assert_eq!(
            s.variety_of(&s.module().zero_submodule()),
            s.all_points(),
            "variety of zero is the whole spectrum"
        );
        assert!(s.variety_of(&s.module().full_submodule()).is_empty());
        let two = GradedSubmodule {
            elems: CodeSet::from_iter([0, 2]),
        };
        assert_eq!(s.variety_of(&two).as_slice(), &[1]);
    }

    #[test]
    fn fiber_examples() {
        let s = self_spectrum(4);
        let ring = s.module().ring().clone();
        let two = ring.graded_ideal(CodeSet::from_iter([0, 2])).unwrap();
        assert_eq!(s.fiber(&two).unwrap().as_slice(), &[1]);
        // fibers partition the spectrum
        let mut seen = CodeSet::new();
        for i in s.gwspec() {
            let f = s.fiber(i).unwrap();
            for p in f.iter() {
                assert!(seen.insert(p), "fibers must be disjoint");
            }
        }
        assert_eq!(seen, s.all_points());
        // non weakly prime index is rejected
        assert!(s.fiber(&ring.full_ideal()).is_err());
    }

    #[test]
    fn eta_examples() {
        let s = self_spectrum(4);
        assert_eq!(
            s.eta(&CodeSet::singleton(1)).elems.as_slice(),
            &[0, 2],
            "eta of a singleton is the point"
        );
        assert_eq!(s.eta(&s.all_points()).elems.as_slice(), &[0]);
        assert_eq!(
            s.eta(&CodeSet::new()).elems.len(),
            4,
            "empty intersection is M"
        );
    }

    #[test]
    fn pseudo_radical_examples() {
        let s = self_spectrum(4);
        let zero = s.module().zero_submodule();
        assert_eq!(s.pseudo_radical(&zero).elems, s.eta(&s.all_points()).elems);
        for p in s.submodules() {
            assert!(
                p.elems.is_subset(&s.pseudo_radical(p).elems),
                "pseudo radical is extensive"
            );
        }
        let two = GradedSubmodule {
            elems: CodeSet::from_iter([0, 2]),
        };
        assert_eq!(s.pseudo_radical(&two).elems.as_slice(), &[0, 2]);
    }

    #[test]
    fn pseudo_radical_is_monotone_and_idempotent() {
        for n in [4, 6, 8, 12] {
            let s = self_spectrum(n);
            for a in s.submodules() {
                let ra = s.pseudo_radical(a);
                assert_eq!(
                    s.pseudo_radical(&ra).elems,
                    ra.elems,
                    "idempotent on {}",
                    a.elems
                );
                for b in s.submodules() {
                    if a.elems.is_subset(&b.elems) {
                        assert!(ra.elems.is_subset(&s.pseudo_radical(b).elems));
                    }
                }
            }
        }
    }

    #[test]
    fn semiprime_examples() {
        let s6 = self_spectrum(6);
        let zero = s6.module().zero_submodule();
        assert!(s6.is_semiprime(&zero), "(0) = (2) ∩ (3) in Z_6");

        let s8 = self_spectrum(8);
        let four = GradedSubmodule {
            elems: CodeSet::from_iter([0, 4]),
        };
        assert!(
            !s8.is_semiprime(&four),
            "(4) in Z_8 has pseudo radical (2)"
        );
        for p in s8.points() {
            assert!(s8.is_semiprime(p), "points are semiprime");
        }
    }

    #[test]
    fn all_points_of_z4_extraordinary() {
        let s = self_spectrum(4);
        for i in 0..s.len() {
            assert!(s.is_extraordinary(i).holds);
        }
    }

    #[test]
    fn extraordinary_failure_carries_violating_pair() {
        // Z_4 ⊕ Z_2 over Z_4, built as a quotient of the free rank-2 module:
        // the point {0,(2,0)} is the intersection of the two incomparable
        // Z_4-lines, which breaks extraordinariness.
        let r = trivial(4);
        let free = GradedModule::free_module(&r, &[0, 0]).unwrap();
        let killed = free.graded_submodule(CodeSet::from_iter([0, 8])).unwrap();
        let (m, _) = free.quotient(&killed).unwrap();
        let s = Spectrum::compute(Arc::new(m)).unwrap();
        let report = s.weakly_topological();
        assert!(!report.all_points_extraordinary);
        let (idx, i, j) = report.extraordinary_witness.unwrap();
        let p = &s.points()[idx].elems;
        let meet = i.intersect(&j);
        assert!(meet.len() > 1 && meet.is_subset(p));
        assert!(!i.is_subset(p) && !j.is_subset(p));
        assert!(!report.union_identity);
    }

    #[test]
    fn weakly_topological_routes_agree_on_z4() {
        let report = self_spectrum(4).weakly_topological();
        assert!(report.all_points_extraordinary);
        assert!(report.union_identity);
        assert!(report.is_topology());
    }

    #[test]
    fn weakly_topological_routes_diverge_on_z6() {
        let report = self_spectrum(6).weakly_topological();
        assert!(
            report.all_points_extraordinary,
            "every point of Υ_(Z_6) is extraordinary under the literal exemption"
        );
        assert!(
            !report.union_identity,
            "χ((2)) ∪ χ((3)) is a proper subset of χ((0))"
        );
        let (i, j) = report.union_identity_witness.unwrap();
        assert_eq!(i.as_slice(), &[0, 2, 4]);
        assert_eq!(j.as_slice(), &[0, 3]);
    }

    #[test]
    fn weakly_topological_routes_diverge_on_free_rank2() {
        let report = z2_square_spectrum().weakly_topological();
        assert!(report.all_points_extraordinary);
        assert!(!report.union_identity);
        let (i, j) = report.union_identity_witness.unwrap();
        // two incomparable lines with zero intersection
        assert_eq!(i.intersect(&j).as_slice(), &[0]);
    }

    #[test]
    fn zero_module_is_weakly_topological() {
        let r = trivial(4);
        let m = GradedModule::self_module(&r).unwrap();
        let (zero, _) = m.quotient(&m.full_submodule()).unwrap();
        let report = Spectrum::compute(Arc::new(zero)).unwrap().weakly_topological();
        assert!(report.all_points_extraordinary && report.union_identity);
    }

    #[test]
    fn natural_map_of_self_module_is_bijective() {
        let s = self_spectrum(4);
        let nm = s.natural_map().unwrap();
        assert!(nm.surjective && nm.injective);
        assert_eq!(nm.codomain.len(), 2);
        assert!(s.is_primeful().unwrap());
        assert!(s.is_injective().unwrap());
    }

    #[test]
    fn free_rank2_is_primeful_but_not_injective() {
        let s = z2_square_spectrum();
        assert_eq!(s.len(), 4);
        let nm = s.natural_map().unwrap();
        assert!(nm.surjective);
        assert!(!nm.injective, "all four points share the colon (0)");
    }

    #[test]
    fn multiplication_flags() {
        assert!(self_spectrum(4).multiplication().0);
        assert!(self_spectrum(6).multiplication().0);
        let (ok, witness) = z2_square_spectrum().multiplication();
        assert!(!ok);
        assert!(witness.is_some());
    }

    #[test]
    fn minimal_points_and_specialization() {
        let s = self_spectrum(4);
        assert_eq!(s.minimal_points().as_slice(), &[0]);
        let edges = s.specialization_edges();
        assert!(edges.contains(&(0, 0)) && edges.contains(&(1, 1)), "reflexive");
        assert!(edges.contains(&(0, 1)), "(0) specializes to (2)");
        assert!(!edges.contains(&(1, 0)));
    }

    #[test]
    fn inverted_predicate_changes_the_spectrum() {
        let r = trivial(4);
        let m = Arc::new(GradedModule::self_module(&r).unwrap());
        let honest = Spectrum::compute(Arc::clone(&m)).unwrap();
        let mutant = Spectrum::compute_with(m, true).unwrap();
        assert_ne!(honest.len(), mutant.len());
    }
}
