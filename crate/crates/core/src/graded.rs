//! Graded rings and graded modules over a finite abelian grading group.
//!
//! A grading is stored as one explicit element set per degree. Construction
//! validates the direct-sum decomposition by enumerating all component
//! tuples (the carrier is hit exactly once each), which simultaneously
//! yields the homogeneous-decomposition table used everywhere else.
//!
//! Graded submodules and graded ideals are canonical sorted element sets.
//! The full graded-submodule lattice is enumerated as the join closure of
//! the cyclic graded submodules `R·m`, `m` homogeneous; this is complete
//! because a graded submodule is the sum of the cyclic submodules of its
//! homogeneous elements.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::codeset::CodeSet;
use crate::finite_algebra::{
    AxiomReport, Code, FiniteAbelianGroup, FiniteCommRing, HARD_ACTION_ENTRIES,
};
use crate::{Error, Result};

/// A carrier element together with one degree it inhabits.
///
/// Zero inhabits every degree, so enumerations list it once per degree;
/// deduplicate by `value` when counting elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HomogeneousElement {
    pub value: Code,
    pub degree: Code,
}

/// Graded submodule, identified by its canonical sorted element set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedSubmodule {
    pub elems: CodeSet,
}

/// Graded ideal, identified by its canonical sorted element set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedIdeal {
    pub elems: CodeSet,
}

impl GradedSubmodule {
    pub fn len(&self) -> usize {
        self.elems.len()
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn contains(&self, c: Code) -> bool {
        self.elems.contains(c)
    }
}

impl GradedIdeal {
    pub fn contains(&self, c: Code) -> bool {
        self.elems.contains(c)
    }
}

impl std::fmt::Display for GradedSubmodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.elems)
    }
}

impl std::fmt::Display for GradedIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.elems)
    }
}

/// Validates that `components` decompose `size` elements as a direct sum and
/// returns the decomposition table `decomp[x][g] = x_g`.
fn direct_sum_table(
    group: &FiniteAbelianGroup,
    components: &[CodeSet],
    kind: &'static str,
) -> Result<Vec<Vec<Code>>> {
    let size = group.size() as usize;
    let mut product: u64 = 1;
    for c in components {
        product = product.saturating_mul(c.len() as u64);
    }
    if product > (1 << 24) {
        return Err(Error::SizeBound {
            what: "direct-sum decomposition scan",
            size: product,
            bound: 1 << 24,
        });
    }

    let mut decomp: Vec<Option<Vec<Code>>> = vec![None; size];
    let k = components.len();
    let mut tuple = vec![0usize; k];
    loop {
        let mut sum = 0;
        let mut parts = Vec::with_capacity(k);
        for (g, idx) in tuple.iter().enumerate() {
            let x = components[g].as_slice()[*idx];
            parts.push(x);
            sum = group.add(sum, x);
        }
        match &decomp[sum as usize] {
            Some(first) => {
                return Err(Error::NotGraded {
                    kind,
                    reason: format!(
                        "decomposition not unique: element {sum} = sum of {first:?} and of {parts:?}"
                    ),
                });
            }
            None => decomp[sum as usize] = Some(parts),
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == k {
                // all combinations done; every element must have been hit
                if let Some(missing) = decomp.iter().position(|d| d.is_none()) {
                    return Err(Error::NotGraded {
                        kind,
                        reason: format!("element {missing} is not a sum of homogeneous components"),
                    });
                }
                return Ok(decomp.into_iter().map(|d| d.unwrap()).collect());
            }
            tuple[pos] += 1;
            if tuple[pos] < components[pos].len() {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

/// Finite commutative ring graded by a finite abelian group.
#[derive(Debug)]
pub struct GradedRing {
    grading: FiniteAbelianGroup,
    ring: FiniteCommRing,
    components: Vec<CodeSet>,
    decomp: Vec<Vec<Code>>,
}

impl GradedRing {
    /// Builds and validates a grading: each component is an additive
    /// subgroup, the components form a direct sum, products of components
    /// land in the component of the degree sum, and the unity is of
    /// degree e.
    pub fn new(
        grading: FiniteAbelianGroup,
        ring: FiniteCommRing,
        components: Vec<CodeSet>,
    ) -> Result<Self> {
        if ring.is_zero_ring() {
            return Err(Error::ZeroRing);
        }
        if components.len() != grading.size() as usize {
            return Err(Error::Invalid(format!(
                "{} components for a grading group of order {}",
                components.len(),
                grading.size()
            )));
        }
        for (g, c) in components.iter().enumerate() {
            if !ring.add_group().is_subgroup(c) {
                return Err(Error::NotGraded {
                    kind: "ring component",
                    reason: format!("component {g} = {c} is not an additive subgroup"),
                });
            }
        }
        let decomp = direct_sum_table(ring.add_group(), &components, "ring")?;
        // closure: R_g · R_h ⊆ R_{g+h}
        for g in grading.elements() {
            for h in grading.elements() {
                let gh = grading.add(g, h);
                for a in components[g as usize].iter() {
                    for b in components[h as usize].iter() {
                        let p = ring.mul(a, b);
                        if !components[gh as usize].contains(p) {
                            return Err(Error::NotGraded {
                                kind: "ring",
                                reason: format!(
                                    "component closure fails: deg({a})={g}, deg({b})={h}, product {p} not in component {gh}"
                                ),
                            });
                        }
                    }
                }
            }
        }
        if !components[0].contains(ring.one()) {
            return Err(Error::NotGraded {
                kind: "ring",
                reason: format!("unity {} is not of identity degree", ring.one()),
            });
        }
        Ok(GradedRing {
            grading,
            ring,
            components,
            decomp,
        })
    }

    /// The trivial grading: everything in degree e.
    pub fn trivial(ring: FiniteCommRing, grading: FiniteAbelianGroup) -> Result<Self> {
        if ring.is_zero_ring() {
            return Err(Error::ZeroRing);
        }
        let mut components = vec![CodeSet::singleton(0); grading.size() as usize];
        components[0] = CodeSet::full(ring.size());
        GradedRing::new(grading, ring, components)
    }

    /// Group ring `Z_n[G]` graded by `G`: the degree-g component is the
    /// coefficient line of basis element g.
    pub fn group_ring(n: u32, grading: FiniteAbelianGroup) -> Result<Self> {
        let ring = FiniteCommRing::group_ring(n, &grading)?;
        let mut components = Vec::with_capacity(grading.size() as usize);
        for g in grading.elements() {
            // codes c * n^g, c in 0..n
            let w = n.checked_pow(g).ok_or(Error::SizeBound {
                what: "ring carrier",
                size: u64::MAX,
                bound: crate::finite_algebra::HARD_RING_CAP as u64,
            })?;
            components.push(CodeSet::from_iter((0..n).map(|c| c * w)));
        }
        GradedRing::new(grading, ring, components)
    }

    /// Quotient graded ring by a proper graded ideal, with the projection
    /// map retained for pullbacks.
    pub fn quotient(&self, ideal: &GradedIdeal) -> Result<(GradedRing, Vec<Code>)> {
        self.require_graded_ideal(&ideal.elems)?;
        if ideal.elems.len() == self.ring.size() as usize {
            return Err(Error::NotProper("cannot quotient a ring by itself".into()));
        }
        let (qring, proj) = self.ring.quotient(&ideal.elems)?;
        let components: Vec<CodeSet> = self
            .components
            .iter()
            .map(|c| CodeSet::from_iter(c.iter().map(|x| proj[x as usize])))
            .collect();
        let graded = GradedRing::new(self.grading.clone(), qring, components)?;
        Ok((graded, proj))
    }

    pub fn grading_group(&self) -> &FiniteAbelianGroup {
        &self.grading
    }

    pub fn ring(&self) -> &FiniteCommRing {
        &self.ring
    }

    pub fn size(&self) -> u32 {
        self.ring.size()
    }

    pub fn component(&self, g: Code) -> &CodeSet {
        &self.components[g as usize]
    }

    pub fn components(&self) -> &[CodeSet] {
        &self.components
    }

    /// Homogeneous component of `x` in degree `g`.
    pub fn component_of(&self, x: Code, g: Code) -> Code {
        self.decomp[x as usize][g as usize]
    }

    pub fn decomposition(&self, x: Code) -> &[Code] {
        &self.decomp[x as usize]
    }

    /// All homogeneous elements, listed once per degree they inhabit.
    pub fn homogeneous_elements(&self) -> Vec<HomogeneousElement> {
        let mut out = Vec::new();
        for g in self.grading.elements() {
            for value in self.components[g as usize].iter() {
                out.push(HomogeneousElement { value, degree: g });
            }
        }
        out
    }

    /// Distinct homogeneous element values (h(R) as a set).
    pub fn homogeneous_values(&self) -> CodeSet {
        CodeSet::from_iter(self.homogeneous_elements().iter().map(|h| h.value))
    }

    pub fn is_homogeneous(&self, x: Code) -> bool {
        self.components.iter().any(|c| c.contains(x))
    }

    /// Whether a subset is a graded ideal: an ideal all of whose members
    /// split into components inside the subset.
    pub fn is_graded_ideal(&self, set: &CodeSet) -> bool {
        self.require_graded_ideal(set).is_ok()
    }

    pub fn require_graded_ideal(&self, set: &CodeSet) -> Result<()> {
        if !self.ring.add_group().is_subgroup(set) {
            return Err(Error::NotGraded {
                kind: "ideal",
                reason: format!("{set} is not an additive subgroup"),
            });
        }
        for x in set.iter() {
            for r in self.ring.elements() {
                if !set.contains(self.ring.mul(r, x)) {
                    return Err(Error::NotGraded {
                        kind: "ideal",
                        reason: format!("{set} not closed under multiplication: {r} * {x}"),
                    });
                }
            }
        }
        for x in set.iter() {
            for g in self.grading.elements() {
                let xg = self.component_of(x, g);
                if !set.contains(xg) {
                    return Err(Error::NotGraded {
                        kind: "ideal",
                        reason: format!("component {xg} of member {x} (degree {g}) is missing"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn graded_ideal(&self, set: CodeSet) -> Result<GradedIdeal> {
        self.require_graded_ideal(&set)?;
        Ok(GradedIdeal { elems: set })
    }

    pub fn zero_ideal(&self) -> GradedIdeal {
        GradedIdeal {
            elems: CodeSet::singleton(0),
        }
    }

    pub fn full_ideal(&self) -> GradedIdeal {
        GradedIdeal {
            elems: CodeSet::full(self.size()),
        }
    }

    pub fn is_proper(&self, ideal: &GradedIdeal) -> bool {
        ideal.elems.len() < self.size() as usize
    }

    /// Ideal generated by homogeneous elements: the additive closure of the
    /// lines `R·a`.
    pub fn ideal_generated(&self, gens: &[Code]) -> Result<GradedIdeal> {
        for &a in gens {
            if !self.is_homogeneous(a) {
                return Err(Error::Invalid(format!(
                    "generator {a} is not homogeneous"
                )));
            }
        }
        let mut seed: Vec<Code> = Vec::new();
        for &a in gens {
            for r in self.ring.elements() {
                seed.push(self.ring.mul(r, a));
            }
        }
        let elems = self.ring.add_group().additive_closure(seed);
        debug_assert!(self.is_graded_ideal(&elems));
        Ok(GradedIdeal { elems })
    }

    /// Complete lattice of graded ideals: join closure of the cyclic graded
    /// ideals of homogeneous elements.
    pub fn enumerate_graded_ideals(&self) -> Vec<GradedIdeal> {
        let cyclics: Vec<CodeSet> = self
            .homogeneous_values()
            .iter()
            .map(|a| {
                self.ring
                    .add_group()
                    .additive_closure(self.ring.elements().map(|r| self.ring.mul(r, a)))
            })
            .collect();
        let sets = join_closure(self.ring.add_group(), cyclics);
        sets.into_iter().map(|elems| GradedIdeal { elems }).collect()
    }

    /// Sum of ideals (join in the lattice).
    pub fn sum_ideal(&self, a: &GradedIdeal, b: &GradedIdeal) -> GradedIdeal {
        GradedIdeal {
            elems: self
                .ring
                .add_group()
                .additive_closure(a.elems.iter().chain(b.elems.iter())),
        }
    }

    /// Product of ideals: additive closure of pairwise element products.
    pub fn product_ideal(&self, a: &GradedIdeal, b: &GradedIdeal) -> GradedIdeal {
        let mut prods = Vec::new();
        for x in a.elems.iter() {
            for y in b.elems.iter() {
                prods.push(self.ring.mul(x, y));
            }
        }
        GradedIdeal {
            elems: self.ring.add_group().additive_closure(prods),
        }
    }

    /// Graded maximal ideals (maximal proper elements of the graded-ideal
    /// lattice).
    pub fn gmax_ideals(&self) -> Vec<GradedIdeal> {
        let all = self.enumerate_graded_ideals();
        maximal_proper(all.iter().map(|i| &i.elems), self.size())
            .into_iter()
            .map(|elems| GradedIdeal { elems })
            .collect()
    }

    /// Unique graded maximal ideal?
    pub fn is_quasi_local(&self) -> bool {
        self.gmax_ideals().len() == 1
    }

    /// Re-runs the construction-time validations as a report.
    pub fn check_grading_axioms(&self) -> AxiomReport {
        grading_report(
            self.ring.add_group(),
            &self.components,
            &self.components,
            |a, b| self.ring.mul(a, b),
            &self.grading,
            Some(self.ring.one()),
        )
    }

    /// Deterministic textual dump: group orders, component element codes,
    /// and the multiplication table.
    pub fn canonical_dump(&self) -> String {
        let mut s = String::new();
        writeln!(s, "graded-ring").unwrap();
        writeln!(s, "group-size {}", self.grading.size()).unwrap();
        if let Some(orders) = self.grading.cyclic_orders() {
            writeln!(s, "group-orders {:?}", orders).unwrap();
        }
        writeln!(s, "carrier-size {}", self.size()).unwrap();
        writeln!(s, "one {}", self.ring.one()).unwrap();
        for (g, c) in self.components.iter().enumerate() {
            writeln!(s, "component {g} {c}").unwrap();
        }
        for a in self.ring.elements() {
            let row: Vec<String> = self
                .ring
                .elements()
                .map(|b| self.ring.mul(a, b).to_string())
                .collect();
            writeln!(s, "mul-row {a} {}", row.join(" ")).unwrap();
        }
        s
    }
}

/// Finite graded module over a graded ring.
#[derive(Debug)]
pub struct GradedModule {
    ring: Arc<GradedRing>,
    carrier: FiniteAbelianGroup,
    components: Vec<CodeSet>,
    decomp: Vec<Vec<Code>>,
    /// Row-major action table: `action[r * |M| + m]`.
    action: Vec<Code>,
}

impl GradedModule {
    /// Builds and validates a graded module from an action function.
    ///
    /// Structural checks always run: components are subgroups forming a
    /// direct sum, `R_g · M_h ⊆ M_{g+h}`, the unity acts as the identity
    /// and zero acts as zero. The cubic bilinearity scans live in
    /// [`GradedModule::check_module_axioms`].
    pub fn new(
        ring: Arc<GradedRing>,
        carrier: FiniteAbelianGroup,
        components: Vec<CodeSet>,
        act: impl Fn(Code, Code) -> Code,
    ) -> Result<Self> {
        let rsize = ring.size() as u64;
        let msize = carrier.size() as u64;
        if rsize * msize > HARD_ACTION_ENTRIES {
            return Err(Error::SizeBound {
                what: "action table",
                size: rsize * msize,
                bound: HARD_ACTION_ENTRIES,
            });
        }
        if components.len() != ring.grading_group().size() as usize {
            return Err(Error::Invalid(format!(
                "{} components for a grading group of order {}",
                components.len(),
                ring.grading_group().size()
            )));
        }
        let mut action = vec![0u32; (rsize * msize) as usize];
        for r in 0..rsize as u32 {
            for m in 0..msize as u32 {
                let v = act(r, m);
                if v >= carrier.size() {
                    return Err(Error::Invalid(format!(
                        "action({r},{m}) = {v} is outside the carrier"
                    )));
                }
                action[(r as u64 * msize + m as u64) as usize] = v;
            }
        }
        for (g, c) in components.iter().enumerate() {
            if !carrier.is_subgroup(c) {
                return Err(Error::NotGraded {
                    kind: "module component",
                    reason: format!("component {g} = {c} is not an additive subgroup"),
                });
            }
        }
        let decomp = direct_sum_table(&carrier, &components, "module")?;
        let module = GradedModule {
            ring,
            carrier,
            components,
            decomp,
            action,
        };
        module.validate_structure()?;
        Ok(module)
    }

    fn validate_structure(&self) -> Result<()> {
        let ring = &self.ring;
        let g_group = ring.grading_group();
        // compatibility: R_g · M_h ⊆ M_{g+h}
        for g in g_group.elements() {
            for h in g_group.elements() {
                let gh = g_group.add(g, h);
                for r in ring.component(g).iter() {
                    for m in self.components[h as usize].iter() {
                        let v = self.act(r, m);
                        if !self.components[gh as usize].contains(v) {
                            return Err(Error::NotGraded {
                                kind: "module",
                                reason: format!(
                                    "action compatibility fails: deg({r})={g}, deg({m})={h}, image {v} not in component {gh}"
                                ),
                            });
                        }
                    }
                }
            }
        }
        let one = ring.ring().one();
        for m in self.carrier.elements() {
            if self.act(one, m) != m {
                return Err(Error::AxiomViolation(format!(
                    "unity does not act as identity on {m}"
                )));
            }
        }
        for m in self.carrier.elements() {
            if self.act(0, m) != 0 {
                return Err(Error::AxiomViolation(format!("0 * {m} != 0")));
            }
        }
        Ok(())
    }

    /// The ring as a module over itself.
    pub fn self_module(ring: &Arc<GradedRing>) -> Result<Self> {
        let carrier = ring.ring().add_group().clone();
        let components = ring.components().to_vec();
        let r = Arc::clone(ring);
        let inner = Arc::clone(ring);
        GradedModule::new(r, carrier, components, move |a, m| inner.ring().mul(a, m))
    }

    /// Free module `R^rank` with degree shifts: the slot-i generator is
    /// homogeneous of degree `shifts[i]`, so the degree-g component is the
    /// set of tuples whose i-th entry is homogeneous of degree `g - shifts[i]`.
    pub fn free_module(ring: &Arc<GradedRing>, shifts: &[Code]) -> Result<Self> {
        if shifts.is_empty() {
            return Err(Error::Invalid("free module needs rank >= 1".into()));
        }
        let g_group = ring.grading_group();
        for &s in shifts {
            if s >= g_group.size() {
                return Err(Error::Invalid(format!("shift degree {s} out of range")));
            }
        }
        let rank = shifts.len() as u32;
        let base = ring.ring().add_group().clone();
        let carrier = FiniteAbelianGroup::power(base, rank)?;
        let rsize = ring.size();

        let decode = |m: Code| -> Vec<Code> {
            let mut digits = Vec::with_capacity(rank as usize);
            let mut m = m;
            for _ in 0..rank {
                digits.push(m % rsize);
                m /= rsize;
            }
            digits
        };
        let encode = |digits: &[Code]| -> Code {
            let mut out: u64 = 0;
            for &d in digits.iter().rev() {
                out = out * rsize as u64 + d as u64;
            }
            out as u32
        };

        let mut components = Vec::with_capacity(g_group.size() as usize);
        for g in g_group.elements() {
            // odometer over per-slot component sets
            let slot_sets: Vec<&CodeSet> = shifts
                .iter()
                .map(|&s| ring.component(g_group.sub(g, s)))
                .collect();
            let mut out = Vec::new();
            let mut idx = vec![0usize; slot_sets.len()];
            'outer: loop {
                let digits: Vec<Code> = idx
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| slot_sets[i].as_slice()[j])
                    .collect();
                out.push(encode(&digits));
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        break 'outer;
                    }
                    idx[pos] += 1;
                    if idx[pos] < slot_sets[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
            components.push(CodeSet::from_iter(out));
        }

        let r = Arc::clone(ring);
        let inner = Arc::clone(ring);
        GradedModule::new(r, carrier, components, move |a, m| {
            let digits = decode(m);
            let acted: Vec<Code> = digits.iter().map(|&d| inner.ring().mul(a, d)).collect();
            encode(&acted)
        })
    }

    /// Quotient module `M/P` with the projection map retained.
    pub fn quotient(&self, sub: &GradedSubmodule) -> Result<(GradedModule, Vec<Code>)> {
        self.require_graded_submodule(&sub.elems)?;
        let carrier_q = self.carrier.quotient(&sub.elems)?;
        let proj = carrier_q.quotient_projection().unwrap().to_vec();
        let components: Vec<CodeSet> = self
            .components
            .iter()
            .map(|c| CodeSet::from_iter(c.iter().map(|x| proj[x as usize])))
            .collect();
        let reps: Vec<Code> = (0..carrier_q.size())
            .map(|q| carrier_q.quotient_rep(q).unwrap())
            .collect();
        let proj_for_act = proj.clone();
        let module = GradedModule::new(
            Arc::clone(&self.ring),
            carrier_q,
            components,
            move |r, q| proj_for_act[self.act(r, reps[q as usize]) as usize],
        )?;
        Ok((module, proj))
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn carrier(&self) -> &FiniteAbelianGroup {
        &self.carrier
    }

    pub fn size(&self) -> u32 {
        self.carrier.size()
    }

    pub fn is_zero_module(&self) -> bool {
        self.size() == 1
    }

    pub fn component(&self, g: Code) -> &CodeSet {
        &self.components[g as usize]
    }

    pub fn act(&self, r: Code, m: Code) -> Code {
        self.action[(r as usize) * (self.carrier.size() as usize) + m as usize]
    }

    pub fn component_of(&self, x: Code, g: Code) -> Code {
        self.decomp[x as usize][g as usize]
    }

    pub fn homogeneous_elements(&self) -> Vec<HomogeneousElement> {
        let mut out = Vec::new();
        for (g, c) in self.components.iter().enumerate() {
            for value in c.iter() {
                out.push(HomogeneousElement {
                    value,
                    degree: g as Code,
                });
            }
        }
        out
    }

    pub fn homogeneous_values(&self) -> CodeSet {
        CodeSet::from_iter(self.homogeneous_elements().iter().map(|h| h.value))
    }

    pub fn is_homogeneous(&self, x: Code) -> bool {
        self.components.iter().any(|c| c.contains(x))
    }

    /// Whether a subset is a graded submodule, by the component-splitting
    /// test.
    pub fn is_graded_submodule(&self, set: &CodeSet) -> bool {
        self.require_graded_submodule(set).is_ok()
    }

    pub fn require_graded_submodule(&self, set: &CodeSet) -> Result<()> {
        if !self.carrier.is_subgroup(set) {
            return Err(Error::NotGraded {
                kind: "submodule",
                reason: format!("{set} is not an additive subgroup"),
            });
        }
        for x in set.iter() {
            for r in self.ring.ring().elements() {
                if !set.contains(self.act(r, x)) {
                    return Err(Error::NotGraded {
                        kind: "submodule",
                        reason: format!("{set} not closed under the action: {r} * {x}"),
                    });
                }
            }
        }
        for x in set.iter() {
            for g in self.ring.grading_group().elements() {
                let xg = self.component_of(x, g);
                if !set.contains(xg) {
                    return Err(Error::NotGraded {
                        kind: "submodule",
                        reason: format!("component {xg} of member {x} (degree {g}) is missing"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn graded_submodule(&self, set: CodeSet) -> Result<GradedSubmodule> {
        self.require_graded_submodule(&set)?;
        Ok(GradedSubmodule { elems: set })
    }

    pub fn zero_submodule(&self) -> GradedSubmodule {
        GradedSubmodule {
            elems: CodeSet::singleton(0),
        }
    }

    pub fn full_submodule(&self) -> GradedSubmodule {
        GradedSubmodule {
            elems: CodeSet::full(self.size()),
        }
    }

    pub fn is_proper(&self, sub: &GradedSubmodule) -> bool {
        sub.elems.len() < self.size() as usize
    }

    /// The cyclic submodule `R·m` (an element set; graded when `m` is
    /// homogeneous).
    pub fn cyclic(&self, m: Code) -> CodeSet {
        CodeSet::from_iter(self.ring.ring().elements().map(|r| self.act(r, m)))
    }

    /// Smallest graded submodule containing the given homogeneous
    /// generators.
    pub fn submodule_generated(&self, gens: &[Code]) -> Result<GradedSubmodule> {
        for &m in gens {
            if !self.is_homogeneous(m) {
                return Err(Error::Invalid(format!(
                    "generator {m} is not homogeneous"
                )));
            }
        }
        let mut seed: Vec<Code> = Vec::new();
        for &m in gens {
            seed.extend(self.cyclic(m).iter());
        }
        let elems = self.carrier.additive_closure(seed);
        debug_assert!(self.is_graded_submodule(&elems));
        Ok(GradedSubmodule { elems })
    }

    /// Join (sum) of submodules.
    pub fn sum_submodules(&self, a: &GradedSubmodule, b: &GradedSubmodule) -> GradedSubmodule {
        GradedSubmodule {
            elems: self
                .carrier
                .additive_closure(a.elems.iter().chain(b.elems.iter())),
        }
    }

    pub fn intersect_submodules(
        &self,
        a: &GradedSubmodule,
        b: &GradedSubmodule,
    ) -> GradedSubmodule {
        GradedSubmodule {
            elems: a.elems.intersect(&b.elems),
        }
    }

    /// The image `I·M`: additive closure of all products of ideal members
    /// with module elements.
    pub fn ideal_image(&self, ideal: &GradedIdeal) -> GradedSubmodule {
        let mut prods = Vec::new();
        for i in ideal.elems.iter() {
            for m in self.carrier.elements() {
                prods.push(self.act(i, m));
            }
        }
        GradedSubmodule {
            elems: self.carrier.additive_closure(prods),
        }
    }

    /// Complete lattice of graded submodules, sorted canonically.
    pub fn enumerate_graded_submodules(&self) -> Vec<GradedSubmodule> {
        let cyclics: Vec<CodeSet> = self
            .homogeneous_values()
            .iter()
            .map(|m| self.cyclic(m))
            .collect();
        join_closure(&self.carrier, cyclics)
            .into_iter()
            .map(|elems| GradedSubmodule { elems })
            .collect()
    }

    /// Graded maximal submodules: maximal proper elements of the lattice.
    pub fn gmax_submodules(&self) -> Vec<GradedSubmodule> {
        let all = self.enumerate_graded_submodules();
        maximal_proper(all.iter().map(|s| &s.elems), self.size())
            .into_iter()
            .map(|elems| GradedSubmodule { elems })
            .collect()
    }

    /// Exhaustive module-axiom scan (bilinearity and associativity cubes)
    /// plus the structural grading checks, as a report.
    pub fn check_module_axioms(&self, max_ops: u64) -> Result<AxiomReport> {
        let r = self.ring.ring().size() as u64;
        let m = self.carrier.size() as u64;
        let cost = r * m * m + r * r * m;
        if cost > max_ops {
            return Err(Error::SizeBound {
                what: "module axiom scan",
                size: cost,
                bound: max_ops,
            });
        }
        let mut report = grading_report(
            &self.carrier,
            &self.components,
            self.ring.components(),
            |a, b| self.act(a, b),
            self.ring.grading_group(),
            None,
        );
        let ring = self.ring.ring();

        let mut add_m = crate::finite_algebra::AxiomCheck {
            axiom: "action additive in module argument",
            passed: true,
            witness: vec![],
        };
        'a: for r in ring.elements() {
            for x in self.carrier.elements() {
                for y in self.carrier.elements() {
                    if self.act(r, self.carrier.add(x, y))
                        != self.carrier.add(self.act(r, x), self.act(r, y))
                    {
                        add_m.passed = false;
                        add_m.witness = vec![r, x, y];
                        break 'a;
                    }
                }
            }
        }
        report.checks.push(add_m);

        let mut add_r = crate::finite_algebra::AxiomCheck {
            axiom: "action additive in ring argument",
            passed: true,
            witness: vec![],
        };
        'b: for r in ring.elements() {
            for s in ring.elements() {
                let rs = ring.add(r, s);
                for x in self.carrier.elements() {
                    if self.act(rs, x) != self.carrier.add(self.act(r, x), self.act(s, x)) {
                        add_r.passed = false;
                        add_r.witness = vec![r, s, x];
                        break 'b;
                    }
                }
            }
        }
        report.checks.push(add_r);

        let mut assoc = crate::finite_algebra::AxiomCheck {
            axiom: "action associative with ring multiplication",
            passed: true,
            witness: vec![],
        };
        'c: for r in ring.elements() {
            for s in ring.elements() {
                let rs = ring.mul(r, s);
                for x in self.carrier.elements() {
                    if self.act(rs, x) != self.act(r, self.act(s, x)) {
                        assoc.passed = false;
                        assoc.witness = vec![r, s, x];
                        break 'c;
                    }
                }
            }
        }
        report.checks.push(assoc);

        let mut unity = crate::finite_algebra::AxiomCheck {
            axiom: "unity acts as identity",
            passed: true,
            witness: vec![],
        };
        for x in self.carrier.elements() {
            if self.act(ring.one(), x) != x {
                unity.passed = false;
                unity.witness = vec![x];
                break;
            }
        }
        report.checks.push(unity);

        Ok(report)
    }

    pub fn canonical_dump(&self) -> String {
        let mut s = String::new();
        writeln!(s, "graded-module").unwrap();
        writeln!(s, "ring-size {}", self.ring.size()).unwrap();
        writeln!(s, "carrier-size {}", self.size()).unwrap();
        for (g, c) in self.components.iter().enumerate() {
            writeln!(s, "component {g} {c}").unwrap();
        }
        for r in self.ring.ring().elements() {
            let row: Vec<String> = self
                .carrier
                .elements()
                .map(|m| self.act(r, m).to_string())
                .collect();
            writeln!(s, "action-row {r} {}", row.join(" ")).unwrap();
        }
        s
    }
}

/// Structural grading report shared by rings and modules (`mul` is ring
/// multiplication or the module action; `left_components` are the ring
/// components acting from the left).
fn grading_report(
    carrier: &FiniteAbelianGroup,
    components: &[CodeSet],
    left_components: &[CodeSet],
    mul: impl Fn(Code, Code) -> Code,
    grading: &FiniteAbelianGroup,
    one: Option<Code>,
) -> AxiomReport {
    use crate::finite_algebra::AxiomCheck;
    let mut report = AxiomReport::default();

    let mut subgroups = AxiomCheck {
        axiom: "components are additive subgroups",
        passed: true,
        witness: vec![],
    };
    for (g, c) in components.iter().enumerate() {
        if !carrier.is_subgroup(c) {
            subgroups.passed = false;
            subgroups.witness = vec![g as Code];
            break;
        }
    }
    report.checks.push(subgroups);

    let direct = direct_sum_table(carrier, components, "scan");
    report.checks.push(AxiomCheck {
        axiom: "unique direct-sum decomposition",
        passed: direct.is_ok(),
        witness: vec![],
    });

    let mut closure = AxiomCheck {
        axiom: "component closure under products",
        passed: true,
        witness: vec![],
    };
    'cl: for g in grading.elements() {
        for h in grading.elements() {
            let gh = grading.add(g, h);
            for a in left_components[g as usize].iter() {
                for b in components[h as usize].iter() {
                    if !components[gh as usize].contains(mul(a, b)) {
                        closure.passed = false;
                        closure.witness = vec![a, b];
                        break 'cl;
                    }
                }
            }
        }
    }
    report.checks.push(closure);

    if let Some(one) = one {
        report.checks.push(AxiomCheck {
            axiom: "unity has identity degree",
            passed: components[0].contains(one),
            witness: vec![one],
        });
    }

    report
}

/// Join closure of a family of subgroup element sets (plus the zero
/// subgroup), the complete lattice they generate.
fn join_closure(carrier: &FiniteAbelianGroup, seeds: Vec<CodeSet>) -> Vec<CodeSet> {
    let mut known: BTreeSet<CodeSet> = BTreeSet::new();
    known.insert(CodeSet::singleton(0));
    let mut frontier: Vec<CodeSet> = Vec::new();
    for s in seeds {
        if known.insert(s.clone()) {
            frontier.push(s);
        }
    }
    while let Some(new) = frontier.pop() {
        let existing: Vec<CodeSet> = known.iter().cloned().collect();
        for other in existing {
            let join = carrier.additive_closure(new.iter().chain(other.iter()));
            if known.insert(join.clone()) {
                frontier.push(join);
            }
        }
    }
    known.into_iter().collect()
}

/// Maximal elements among the proper sets of a lattice.
fn maximal_proper<'a, I: Iterator<Item = &'a CodeSet>>(sets: I, full_size: u32) -> Vec<CodeSet> {
    let proper: Vec<&CodeSet> = sets.filter(|s| s.len() < full_size as usize).collect();
    proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| s.is_proper_subset(t))
        })
        .map(|s| (*s).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::AXIOM_SCAN_BOUND;

    fn z_mod(n: u32) -> FiniteCommRing {
        FiniteCommRing::integers_mod(n).unwrap()
    }

    fn z2_group() -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(2).unwrap()
    }

    pub(crate) fn trivial_z4() -> Arc<GradedRing> {
        Arc::new(GradedRing::trivial(z_mod(4), z2_group()).unwrap())
    }

    pub(crate) fn trivial_z6() -> Arc<GradedRing> {
        Arc::new(GradedRing::trivial(z_mod(6), z2_group()).unwrap())
    }

    pub(crate) fn gr2() -> Arc<GradedRing> {
        Arc::new(GradedRing::group_ring(2, z2_group()).unwrap())
    }

    #[test]
    fn trivial_grading_homogeneous_entries() {
        let r = trivial_z4();
        // 4 entries in degree e plus zero again in degree g
        assert_eq!(r.homogeneous_elements().len(), 5);
        assert_eq!(r.homogeneous_values().len(), 4);
    }

    #[test]
    fn trivial_grading_rejects_zero_ring() {
        assert!(matches!(
            GradedRing::trivial(z_mod(1), z2_group()),
            Err(Error::ZeroRing)
        ));
    }

    #[test]
    fn trivial_grading_axiom_scan_passes() {
        for n in [2, 6] {
            let g = FiniteAbelianGroup::cyclic(3).unwrap();
            let r = GradedRing::trivial(z_mod(n), g).unwrap();
            assert!(r.check_grading_axioms().all_passed());
        }
    }

    #[test]
    fn overlapping_components_rejected_with_witness() {
        let err = GradedRing::new(
            z2_group(),
            z_mod(4),
            vec![CodeSet::full(4), CodeSet::from_iter([0, 2])],
        )
        .unwrap_err();
        match err {
            Error::NotGraded { reason, .. } => {
                assert!(reason.contains("not unique"), "reason: {reason}")
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn group_ring_components_and_homogeneous_values() {
        let r = gr2();
        assert_eq!(r.component(0).as_slice(), &[0, 1]);
        assert_eq!(r.component(1).as_slice(), &[0, 2]);
        assert_eq!(r.homogeneous_values().as_slice(), &[0, 1, 2]);
        assert!(r.check_grading_axioms().all_passed());
    }

    #[test]
    fn group_ring_4_identity_component_is_z4() {
        let g = z2_group();
        let r = GradedRing::group_ring(4, g).unwrap();
        assert_eq!(r.size(), 16);
        assert_eq!(r.component(0).as_slice(), &[0, 1, 2, 3]);
        // additive order of the degree-e generator is 4
        assert_eq!(r.ring().add_group().order_of(1), 4);
    }

    #[test]
    fn graded_ideals_of_group_ring_2_exclude_nongraded_ideal() {
        let r = gr2();
        let ideals = r.enumerate_graded_ideals();
        let sets: Vec<&[Code]> = ideals.iter().map(|i| i.elems.as_slice()).collect();
        assert_eq!(sets, vec![&[0][..], &[0, 1, 2, 3][..]]);
        // {0, 1+x} is an ideal but not graded: the component 1 of 1+x is absent
        let hidden = CodeSet::from_iter([0, 3]);
        assert!(r.ring().add_group().is_subgroup(&hidden));
        assert!(!r.is_graded_ideal(&hidden));
    }

    #[test]
    fn graded_ideal_lattice_z4() {
        let r = trivial_z4();
        let ideals = r.enumerate_graded_ideals();
        let sets: Vec<&[Code]> = ideals.iter().map(|i| i.elems.as_slice()).collect();
        assert_eq!(sets, vec![&[0][..], &[0, 1, 2, 3][..], &[0, 2][..]]);
    }

    #[test]
    fn field_has_two_graded_ideals() {
        let r = GradedRing::trivial(z_mod(5), z2_group()).unwrap();
        assert_eq!(r.enumerate_graded_ideals().len(), 2);
    }

    #[test]
    fn quotient_ring_of_z4_by_two() {
        let r = trivial_z4();
        let ideal = r.graded_ideal(CodeSet::from_iter([0, 2])).unwrap();
        let (q, proj) = r.quotient(&ideal).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(proj[3], 1);
        assert!(q.check_grading_axioms().all_passed());
    }

    #[test]
    fn quotient_by_zero_preserves_size() {
        let r = gr2();
        let (q, _) = r.quotient(&r.zero_ideal()).unwrap();
        assert_eq!(q.size(), r.size());
    }

    #[test]
    fn quotient_by_full_ring_rejected() {
        let r = trivial_z4();
        assert!(r.quotient(&r.full_ideal()).is_err());
    }

    #[test]
    fn quotient_map_commutes_with_decomposition() {
        let g = z2_group();
        let r = Arc::new(GradedRing::group_ring(4, g).unwrap());
        let ideal = r.ideal_generated(&[2]).unwrap();
        let (q, proj) = r.quotient(&ideal).unwrap();
        for x in r.ring().elements() {
            for gg in r.grading_group().elements() {
                let lhs = proj[r.component_of(x, gg) as usize];
                let rhs = q.component_of(proj[x as usize], gg);
                assert_eq!(lhs, rhs, "x={x} g={gg}");
            }
        }
    }

    #[test]
    fn self_module_action_is_ring_multiplication() {
        let r = gr2();
        let m = GradedModule::self_module(&r).unwrap();
        for a in r.ring().elements() {
            for b in r.ring().elements() {
                assert_eq!(m.act(a, b), r.ring().mul(a, b));
            }
        }
        assert_eq!(m.component(0), r.component(0));
        assert_eq!(m.component(1), r.component(1));
        assert!(m.check_module_axioms(1 << 26).unwrap().all_passed());
    }

    #[test]
    fn free_module_rank_one_identity_shift_matches_self_module() {
        let r = trivial_z4();
        let free = GradedModule::free_module(&r, &[0]).unwrap();
        let selfm = GradedModule::self_module(&r).unwrap();
        assert_eq!(free.size(), selfm.size());
        for a in r.ring().elements() {
            for m in 0..free.size() {
                assert_eq!(free.act(a, m), selfm.act(a, m));
            }
        }
        for g in r.grading_group().elements() {
            assert_eq!(free.component(g), selfm.component(g));
        }
    }

    #[test]
    fn free_module_z2_rank_two_has_full_identity_component() {
        let r = Arc::new(GradedRing::trivial(z_mod(2), z2_group()).unwrap());
        let m = GradedModule::free_module(&r, &[0, 0]).unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(m.component(0).len(), 4);
        assert_eq!(m.component(1).as_slice(), &[0]);
        assert!(m.check_module_axioms(1 << 26).unwrap().all_passed());
    }

    #[test]
    fn free_module_with_shift_passes_grading_scan() {
        let r = gr2();
        let m = GradedModule::free_module(&r, &[1]).unwrap();
        assert!(m.check_module_axioms(1 << 26).unwrap().all_passed());
        // the slot generator 1 sits in the shifted degree
        assert!(m.component(1).contains(1));
    }

    #[test]
    fn submodule_generated_examples() {
        let r = Arc::new(GradedRing::trivial(z_mod(2), z2_group()).unwrap());
        let m = GradedModule::free_module(&r, &[0, 0]).unwrap();
        assert_eq!(
            m.submodule_generated(&[]).unwrap().elems.as_slice(),
            &[0],
            "empty generators give the zero submodule"
        );
        // codes: (a,b) = a + 2b, so (1,0) is code 1
        assert_eq!(
            m.submodule_generated(&[1]).unwrap().elems.as_slice(),
            &[0, 1]
        );
        let selfm = GradedModule::self_module(&trivial_z4()).unwrap();
        assert_eq!(
            selfm.submodule_generated(&[1]).unwrap().len(),
            4,
            "unity generates everything"
        );
    }

    #[test]
    fn lattice_z4_and_z2sq() {
        let selfm = GradedModule::self_module(&trivial_z4()).unwrap();
        let subs = selfm.enumerate_graded_submodules();
        let sets: Vec<&[Code]> = subs.iter().map(|s| s.elems.as_slice()).collect();
        assert_eq!(sets, vec![&[0][..], &[0, 1, 2, 3][..], &[0, 2][..]]);

        let r = Arc::new(GradedRing::trivial(z_mod(2), z2_group()).unwrap());
        let m = GradedModule::free_module(&r, &[0, 0]).unwrap();
        assert_eq!(m.enumerate_graded_submodules().len(), 5);
    }

    /// Independent oracle: all subsets of the carrier by bitmask, filtered
    /// to additive subgroups closed under the action and graded.
    pub(crate) fn bitmask_submodule_oracle(m: &GradedModule) -> Vec<CodeSet> {
        let n = m.size();
        assert!(n <= 16, "bitmask oracle only runs for |M| <= 16");
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            if mask & 1 == 0 {
                continue; // must contain 0
            }
            let set = CodeSet::from_iter((0..n).filter(|&i| mask >> i & 1 == 1));
            if m.is_graded_submodule(&set) {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn lattice_matches_bitmask_oracle() {
        let cases: Vec<GradedModule> = vec![
            GradedModule::self_module(&trivial_z4()).unwrap(),
            GradedModule::self_module(&trivial_z6()).unwrap(),
            GradedModule::self_module(&gr2()).unwrap(),
            GradedModule::free_module(
                &Arc::new(GradedRing::trivial(z_mod(2), z2_group()).unwrap()),
                &[0, 0],
            )
            .unwrap(),
        ];
        for m in cases {
            let fast: Vec<CodeSet> = m
                .enumerate_graded_submodules()
                .into_iter()
                .map(|s| s.elems)
                .collect();
            let oracle = bitmask_submodule_oracle(&m);
            assert_eq!(fast, oracle);
        }
    }

    #[test]
    fn gmax_submodules_examples() {
        let z4 = GradedModule::self_module(&trivial_z4()).unwrap();
        let g4: Vec<Vec<Code>> = z4
            .gmax_submodules()
            .iter()
            .map(|s| s.elems.as_slice().to_vec())
            .collect();
        assert_eq!(g4, vec![vec![0, 2]]);

        let z6 = GradedModule::self_module(&trivial_z6()).unwrap();
        let mut g6: Vec<Vec<Code>> = z6
            .gmax_submodules()
            .iter()
            .map(|s| s.elems.as_slice().to_vec())
            .collect();
        g6.sort();
        assert_eq!(g6, vec![vec![0, 2, 4], vec![0, 3]]);
    }

    #[test]
    fn quotient_module_coset_count_and_zero_quotient() {
        let r = Arc::new(GradedRing::trivial(z_mod(2), z2_group()).unwrap());
        let m = GradedModule::free_module(&r, &[0, 0]).unwrap();
        let line = m.graded_submodule(CodeSet::from_iter([0, 1])).unwrap();
        let (q, _) = m.quotient(&line).unwrap();
        assert_eq!(q.size(), 2);

        let (same, _) = m.quotient(&m.zero_submodule()).unwrap();
        assert_eq!(same.size(), 4);
        let (zero, _) = m.quotient(&m.full_submodule()).unwrap();
        assert!(zero.is_zero_module());
    }

    #[test]
    fn sum_count_identity_holds_for_trivial_gradings() {
        // Σ_g |R_g| − (|G| − 1) = |R| exactly when only one component is
        // nontrivial; valid for trivial gradings.
        let r = trivial_z6();
        let total: usize = r.components().iter().map(|c| c.len()).sum();
        let g = r.grading_group().size() as usize;
        assert_eq!(total - (g - 1), r.size() as usize);
    }

    #[test]
    fn zero_module_has_single_homogeneous_value() {
        let r = trivial_z4();
        let m = GradedModule::self_module(&r).unwrap();
        let (zero, _) = m.quotient(&m.full_submodule()).unwrap();
        assert_eq!(zero.homogeneous_values().len(), 1);
        assert_eq!(zero.enumerate_graded_submodules().len(), 1);
    }
}
