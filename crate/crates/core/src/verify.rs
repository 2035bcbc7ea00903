//! The verification suite: a fixed registry of theorem checks evaluated by
//! exhaustive enumeration on an instance, plus the analysis report and the
//! deterministic text/machine renderers.
//!
//! Every check reports pass, fail (with a witness in the detail) or
//! not-applicable (its hypotheses do not hold on the instance). Checks
//! needing the Zariski space are gated on the union-identity criterion,
//! matching `build_zariski`.

use std::sync::Arc;

use serde::Serialize;

use crate::codeset::CodeSet;
use crate::graded::{GradedIdeal, GradedModule, GradedSubmodule};
use crate::instance::{catalog, Limits, LoadedInstance, Loader};
use crate::predicates::{
    annihilator, graded_radical, is_graded_prime_ideal, is_graded_weakly_prime_ideal_with,
    is_graded_weakly_prime_pairs, is_pseudo_weakly_prime_with, radical_ideals,
};
use crate::spectrum::{NaturalMap, Spectrum, WeaklyTopologicalReport};
use crate::topology::{build_zariski, closure_checked, subset_family, ZariskiSpace};
use crate::{Error, Result};

/// Fault injection for the suite-sensitivity meta-test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultInjection {
    /// Invert the branch of the elementwise weakly-prime predicate.
    InvertWeaklyPrime,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Exhaustive subset quantification up to this many points.
    pub exhaustive_subset_limit: u32,
    pub fault: Option<FaultInjection>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            exhaustive_subset_limit: 12,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    fn pass(id: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            id,
            status: CheckStatus::Pass,
            detail: detail.into(),
        }
    }
    fn fail(id: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            id,
            status: CheckStatus::Fail,
            detail: detail.into(),
        }
    }
    fn na(id: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            id,
            status: CheckStatus::NotApplicable,
            detail: detail.into(),
        }
    }
}

/// Structural facts about an instance, reported alongside the checks.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceFacts {
    pub ring_size: u32,
    pub module_size: u32,
    pub graded_submodules: usize,
    pub graded_ideals: usize,
    pub points: usize,
    pub multiplication: bool,
    pub primeful: Option<bool>,
    pub injective: Option<bool>,
    pub points_extraordinary: bool,
    pub union_identity: bool,
    pub space_built: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub name: String,
    pub facts: InstanceFacts,
    pub checks: Vec<CheckResult>,
    #[serde(skip)]
    pub elapsed_ms: u64,
}

impl InstanceReport {
    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .count()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub instances: Vec<InstanceReport>,
    pub summary: SuiteSummary,
}

impl SuiteReport {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }
}

/// Everything the checks need, computed once per instance.
struct Ctx {
    module: Arc<GradedModule>,
    spectrum: Spectrum,
    wt: WeaklyTopologicalReport,
    zariski: Option<ZariskiSpace>,
    natural: Option<NaturalMap>,
    natural_error: Option<String>,
    primeful: Option<bool>,
    injective: Option<bool>,
    multiplication: bool,
    /// R as a module over itself, with its space when it has one.
    ring_self: Option<(Spectrum, Option<ZariskiSpace>)>,
    /// R/Ann(M) as a module over itself, with its space.
    rstar_self: Option<(Spectrum, Option<ZariskiSpace>)>,
    invert: bool,
    seed: u64,
    subset_limit: u32,
}

impl Ctx {
    fn build(inst: &LoadedInstance, opts: &VerifyOptions) -> Result<Ctx> {
        let invert = opts.fault == Some(FaultInjection::InvertWeaklyPrime);
        let spectrum = Spectrum::compute_with(Arc::clone(&inst.module), invert)?;
        let wt = spectrum.weakly_topological();
        let zariski = build_zariski(&spectrum).ok();

        let (natural, natural_error) = if spectrum.is_empty() {
            (None, Some("empty spectrum".to_string()))
        } else {
            match spectrum.natural_map() {
                Ok(nm) => (Some(nm), None),
                Err(e) => (None, Some(e.to_string())),
            }
        };
        let primeful = if inst.module.is_zero_module() {
            Some(true)
        } else {
            natural.as_ref().map(|nm| nm.surjective)
        };
        let injective = if spectrum.is_empty() {
            Some(true)
        } else {
            natural.as_ref().map(|nm| nm.injective)
        };
        let multiplication = spectrum.multiplication().0;

        let ring_self = {
            let m = Arc::new(GradedModule::self_module(&inst.ring)?);
            let s = Spectrum::compute_with(m, invert)?;
            let z = build_zariski(&s).ok();
            Some((s, z))
        };
        let rstar_self = match &natural {
            Some(nm) => {
                let m = Arc::new(GradedModule::self_module(&nm.quotient_ring)?);
                let s = Spectrum::compute_with(m, invert)?;
                let z = build_zariski(&s).ok();
                Some((s, z))
            }
            None => None,
        };

        Ok(Ctx {
            module: Arc::clone(&inst.module),
            spectrum,
            wt,
            zariski,
            natural,
            natural_error,
            primeful,
            injective,
            multiplication,
            ring_self,
            rstar_self,
            invert,
            seed: opts.seed,
            subset_limit: opts.exhaustive_subset_limit,
        })
    }

    fn not_topological_note(&self) -> String {
        match &self.wt.union_identity_witness {
            Some((p, q)) => format!(
                "module is not weakly topological in the operative sense: χ-identity fails for semiprime pair {p}, {q}"
            ),
            None => "module is not weakly topological in the operative sense".to_string(),
        }
    }

    fn is_pwp(&self, sub: &GradedSubmodule) -> Result<bool> {
        Ok(is_pseudo_weakly_prime_with(&self.module, sub, self.invert)?.0)
    }
}

type CheckFn = fn(&Ctx) -> Result<CheckResult>;

/// The registry, sorted by check id; every id appears exactly once per
/// instance report.
pub const CHECK_IDS: [&str; 16] = [
    "closed_points_criterion",
    "closure_density_t0",
    "components_and_minimal_points",
    "extraordinary_vs_union_identity",
    "injective_implies_multiplication",
    "irreducibility_corollaries",
    "irreducibility_equivalences",
    "irreducible_iff_intersection_point",
    "multiplication_implies_topological",
    "natural_map_continuity",
    "noetherian_spectral_criterion",
    "quotients_preserve_topological",
    "radical_colon_identity",
    "t1_iff_maximal_points",
    "variety_form_implies_spectral",
    "weakly_prime_pair_criterion",
];

fn registry() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("closed_points_criterion", check_closed_points),
        ("closure_density_t0", check_closure_density_t0),
        ("components_and_minimal_points", check_components),
        ("extraordinary_vs_union_identity", check_extraordinary_vs_identity),
        ("injective_implies_multiplication", check_injective_multiplication),
        ("irreducibility_corollaries", check_corollary_bundle),
        ("irreducibility_equivalences", check_irreducibility_equivalences),
        ("irreducible_iff_intersection_point", check_irreducible_iff_eta),
        ("multiplication_implies_topological", check_multiplication_topological),
        ("natural_map_continuity", check_continuity),
        ("noetherian_spectral_criterion", check_noetherian_criterion),
        ("quotients_preserve_topological", check_quotients_topological),
        ("radical_colon_identity", check_radical_colon),
        ("t1_iff_maximal_points", check_t1),
        ("variety_form_implies_spectral", check_variety_form_spectral),
        ("weakly_prime_pair_criterion", check_weakly_prime_pairs),
    ]
}

/// Runs the full registry on one instance.
pub fn run_instance(inst: &LoadedInstance, opts: &VerifyOptions) -> Result<InstanceReport> {
    let started = std::time::Instant::now();
    let ctx = Ctx::build(inst, opts)?;
    let mut checks = Vec::new();
    for (id, f) in registry() {
        let result = match f(&ctx) {
            Ok(r) => r,
            Err(e) => CheckResult::fail(id, format!("check aborted: {e}")),
        };
        debug_assert_eq!(result.id, id);
        checks.push(result);
    }
    let facts = InstanceFacts {
        ring_size: inst.ring.size(),
        module_size: inst.module.size(),
        graded_submodules: ctx.spectrum.submodules().len(),
        graded_ideals: ctx.spectrum.ideals().len(),
        points: ctx.spectrum.len(),
        multiplication: ctx.multiplication,
        primeful: ctx.primeful,
        injective: ctx.injective,
        points_extraordinary: ctx.wt.all_points_extraordinary,
        union_identity: ctx.wt.union_identity,
        space_built: ctx.zariski.is_some(),
    };
    Ok(InstanceReport {
        name: inst.spec.name.clone(),
        facts,
        checks,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Runs the registry on several instances, sorted by name.
pub fn run_many(instances: &[LoadedInstance], opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut sorted: Vec<&LoadedInstance> = instances.iter().collect();
    sorted.sort_by(|a, b| a.spec.name.cmp(&b.spec.name));
    let mut reports = Vec::new();
    for inst in sorted {
        reports.push(run_instance(inst, opts)?);
    }
    let mut summary = SuiteSummary {
        instances: reports.len(),
        pass: 0,
        fail: 0,
        not_applicable: 0,
    };
    for r in &reports {
        for c in &r.checks {
            match c.status {
                CheckStatus::Pass => summary.pass += 1,
                CheckStatus::Fail => summary.fail += 1,
                CheckStatus::NotApplicable => summary.not_applicable += 1,
            }
        }
    }
    Ok(SuiteReport {
        instances: reports,
        summary,
    })
}

/// Loads and runs the whole built-in catalog.
pub fn run_catalog(opts: &VerifyOptions, limits: Limits) -> Result<SuiteReport> {
    let mut loader = Loader::new(limits);
    let mut instances = Vec::new();
    for entry in catalog() {
        instances.push(loader.resolve(&entry.spec.name)?);
    }
    run_many(&instances, opts)
}

// ---------------------------------------------------------------------------
// the checks

/// Elementwise and ideal-pair weakly prime tests agree on every graded
/// ideal of the base ring.
fn check_weakly_prime_pairs(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "weakly_prime_pair_criterion";
    let ring = ctx.module.ring();
    let ideals = ctx.spectrum.ideals();
    for i in ideals {
        let elementwise = is_graded_weakly_prime_ideal_with(ring, i, ctx.invert).holds;
        let pairwise = is_graded_weakly_prime_pairs(ring, i, ideals).holds;
        if elementwise != pairwise {
            return Ok(CheckResult::fail(
                ID,
                format!(
                    "ideal {}: elementwise={elementwise}, ideal-pair={pairwise}",
                    i.elems
                ),
            ));
        }
    }
    Ok(CheckResult::pass(
        ID,
        format!("both tests agree on all {} graded ideals", ideals.len()),
    ))
}

/// Multiplication modules satisfy the definitional weakly-topological
/// conclusion: the spectrum is empty or every point is extraordinary.
fn check_multiplication_topological(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "multiplication_implies_topological";
    if !ctx.multiplication {
        return Ok(CheckResult::pass(ID, "not a multiplication module; implication vacuous"));
    }
    if ctx.wt.all_points_extraordinary {
        Ok(CheckResult::pass(
            ID,
            "multiplication module and every point is extraordinary",
        ))
    } else {
        let (idx, i, j) = ctx.wt.extraordinary_witness.clone().unwrap();
        Ok(CheckResult::fail(
            ID,
            format!(
                "multiplication module but point {} is not extraordinary (pair {i}, {j})",
                ctx.spectrum.points()[idx].elems
            ),
        ))
    }
}

/// The definitional route (every point extraordinary) against the
/// χ-identity over semiprime pairs. The two are claimed equivalent; the
/// claim is checked literally and fails where they genuinely diverge.
fn check_extraordinary_vs_identity(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "extraordinary_vs_union_identity";
    let d = ctx.wt.all_points_extraordinary;
    let u = ctx.wt.union_identity;
    if d == u {
        Ok(CheckResult::pass(
            ID,
            format!("both routes agree (weakly topological = {d})"),
        ))
    } else {
        let (p, q) = ctx.wt.union_identity_witness.clone().unwrap();
        Ok(CheckResult::fail(
            ID,
            format!(
                "every point extraordinary = {d} but χ-identity = {u}; χ({p}) ∪ χ({q}) ≠ χ({p} ∩ {q})"
            ),
        ))
    }
}

/// Both weakly-topological senses are inherited by every quotient module.
fn check_quotients_topological(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "quotients_preserve_topological";
    if !ctx.wt.all_points_extraordinary && !ctx.wt.union_identity {
        return Ok(CheckResult::pass(
            ID,
            "module is weakly topological in neither sense; implication vacuous",
        ));
    }
    let mut count = 0;
    for p in ctx.spectrum.submodules() {
        let (qmodule, _) = ctx.module.quotient(p)?;
        let qspectrum = Spectrum::compute_with(Arc::new(qmodule), ctx.invert)?;
        let qwt = qspectrum.weakly_topological();
        if ctx.wt.all_points_extraordinary && !qwt.all_points_extraordinary {
            return Ok(CheckResult::fail(
                ID,
                format!("quotient by {} loses the extraordinary property", p.elems),
            ));
        }
        if ctx.wt.union_identity && !qwt.union_identity {
            return Ok(CheckResult::fail(
                ID,
                format!("quotient by {} loses the χ-identity", p.elems),
            ));
        }
        count += 1;
    }
    Ok(CheckResult::pass(
        ID,
        format!("all {count} quotient modules remain weakly topological"),
    ))
}

/// Pseudo weakly injective modules are multiplication modules.
fn check_injective_multiplication(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "injective_implies_multiplication";
    match ctx.injective {
        None => Ok(CheckResult::fail(
            ID,
            format!(
                "injectivity undetermined: {}",
                ctx.natural_error.as_deref().unwrap_or("natural map unavailable")
            ),
        )),
        Some(false) => Ok(CheckResult::pass(
            ID,
            "natural map not injective; implication vacuous",
        )),
        Some(true) => {
            if ctx.multiplication {
                Ok(CheckResult::pass(ID, "injective and multiplication"))
            } else {
                let witness = ctx.spectrum.multiplication().1.unwrap();
                Ok(CheckResult::fail(
                    ID,
                    format!(
                        "injective but submodule {} is not of the form I·M",
                        witness.elems
                    ),
                ))
            }
        }
    }
}

/// For primeful modules and proper graded radical ideals P:
/// `P = (PM : M)` exactly when `Ann(M) ⊆ P`.
fn check_radical_colon(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "radical_colon_identity";
    if ctx.primeful != Some(true) {
        return Ok(CheckResult::na(ID, "module is not primeful"));
    }
    let ring = ctx.module.ring();
    let ann = annihilator(&ctx.module);
    let radicals = radical_ideals(ring, ctx.spectrum.ideals());
    for p in &radicals {
        let image = ctx.module.ideal_image(p);
        let colon = crate::predicates::colon_ideal(&ctx.module, &image)?;
        let lhs = colon.elems == p.elems;
        let rhs = ann.elems.is_subset(&p.elems);
        if lhs != rhs {
            return Ok(CheckResult::fail(
                ID,
                format!(
                    "radical ideal {}: (PM : M) = {} but Ann(M) = {} (containment {rhs})",
                    p.elems, colon.elems, ann.elems
                ),
            ));
        }
    }
    Ok(CheckResult::pass(
        ID,
        format!("biconditional holds for all {} radical ideals", radicals.len()),
    ))
}

/// The preimage identity `φ⁻¹(χ(K/Ann)) = χ(K·M)` for every graded ideal
/// `K ⊇ Ann(M)`, and transfer of connectedness along the natural map.
fn check_continuity(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "natural_map_continuity";
    if ctx.primeful != Some(true) {
        return Ok(CheckResult::na(ID, "module is not primeful"));
    }
    if ctx.spectrum.is_empty() {
        return Ok(CheckResult::na(ID, "empty spectrum, natural map undefined"));
    }
    let Some(zariski) = &ctx.zariski else {
        return Ok(CheckResult::na(ID, ctx.not_topological_note()));
    };
    let natural = ctx.natural.as_ref().expect("nonempty spectrum has a natural map");
    let Some((rstar_spectrum, Some(rstar_space))) = &ctx.rstar_self else {
        return Ok(CheckResult::na(
            ID,
            "quotient-ring spectrum has no topology to compare against",
        ));
    };

    // codomain ideals and quotient-ring self points list the same sets
    if natural.codomain.len() != rstar_spectrum.len()
        || natural
            .codomain
            .iter()
            .zip(rstar_spectrum.points())
            .any(|(i, p)| i.elems != p.elems)
    {
        return Err(Error::Internal(
            "weakly prime ideals of the quotient disagree with its self-module spectrum".into(),
        ));
    }

    let ann = annihilator(&ctx.module);
    let mut checked = 0;
    for k in ctx.spectrum.ideals() {
        if !ann.elems.is_subset(&k.elems) {
            continue;
        }
        let kstar = CodeSet::from_iter(k.elems.iter().map(|x| natural.projection[x as usize]));
        let codomain_variety = rstar_spectrum.variety(&kstar);
        let preimage = CodeSet::from_iter(
            natural
                .assignment
                .iter()
                .enumerate()
                .filter(|(_, &img)| codomain_variety.contains(img as u32))
                .map(|(i, _)| i as u32),
        );
        let km = ctx.module.ideal_image(k);
        let chi_km = ctx.spectrum.variety_of(&km);
        if preimage != chi_km {
            return Ok(CheckResult::fail(
                ID,
                format!(
                    "ideal {}: preimage {preimage} differs from χ(K·M) = {chi_km}",
                    k.elems
                ),
            ));
        }
        checked += 1;
    }

    let connected = zariski.space.is_connected();
    let rstar_connected = rstar_space.space.is_connected();
    if connected && !rstar_connected {
        return Ok(CheckResult::fail(
            ID,
            "spectrum connected but the quotient-ring spectrum is not",
        ));
    }
    Ok(CheckResult::pass(
        ID,
        format!(
            "preimage identity holds for {checked} ideals over Ann(M); connectedness transfers ({connected} -> {rstar_connected})"
        ),
    ))
}

/// Closure formula `Cl(W) = χ(η(W))` over the subset family, T0, and
/// density of subsets containing the zero submodule.
fn check_closure_density_t0(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "closure_density_t0";
    let Some(zariski) = &ctx.zariski else {
        return Ok(CheckResult::na(ID, ctx.not_topological_note()));
    };
    let n = ctx.spectrum.len() as u32;
    let mut subsets = subset_family(n, ctx.subset_limit, ctx.seed);
    subsets.push(CodeSet::new());
    for w in &subsets {
        if let Err(e) = closure_checked(&ctx.spectrum, zariski, w) {
            return Ok(CheckResult::fail(ID, format!("closure formula fails: {e}")));
        }
        // singleton closures are the varieties of their points
        for p in w.iter() {
            let cl = zariski.space.closure(&CodeSet::singleton(p));
            let chi = ctx
                .spectrum
                .variety_of(&ctx.spectrum.points()[p as usize]);
            if cl != chi {
                return Ok(CheckResult::fail(
                    ID,
                    format!("Cl({{{p}}}) = {cl} differs from χ of the point = {chi}"),
                ));
            }
        }
    }
    if let Some((a, b)) = zariski.space.t0_witness() {
        return Ok(CheckResult::fail(
            ID,
            format!("points {a} and {b} share their closure"),
        ));
    }
    let mut density_note = "zero submodule is not a point".to_string();
    if let Some(zp) = ctx.spectrum.zero_point() {
        let full = ctx.spectrum.all_points();
        for w in &subsets {
            if w.contains(zp as u32) && zariski.space.closure(w) != full {
                return Ok(CheckResult::fail(
                    ID,
                    format!("subset {w} contains the zero submodule but is not dense"),
                ));
            }
        }
        density_note = "every subset containing the zero submodule is dense".to_string();
    }
    Ok(CheckResult::pass(
        ID,
        format!(
            "closure formula verified on {} subsets; space is T0; {}",
            subsets.len(),
            density_note
        ),
    ))
}

fn colon_family(ctx: &Ctx) -> Vec<CodeSet> {
    let mut out: Vec<CodeSet> = (0..ctx.spectrum.len())
        .map(|i| ctx.spectrum.colon_of(i).elems.clone())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Theorem 3.5-style conditions for one point: colon maximal among point
/// colons, and its fiber is a singleton.
fn closed_point_rhs(ctx: &Ctx, point: usize) -> bool {
    let colon = &ctx.spectrum.colon_of(point).elems;
    let omega = colon_family(ctx);
    let maximal = !omega.iter().any(|q| colon.is_proper_subset(q));
    let fiber = (0..ctx.spectrum.len())
        .filter(|&i| ctx.spectrum.colon_of(i).elems == *colon)
        .count();
    maximal && fiber == 1
}

/// `{C}` is closed exactly when the colon of C is maximal among point
/// colons and its fiber is a singleton.
fn check_closed_points(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "closed_points_criterion";
    let Some(zariski) = &ctx.zariski else {
        return Ok(CheckResult::na(ID, ctx.not_topological_note()));
    };
    for i in 0..ctx.spectrum.len() {
        let lhs = zariski.space.is_closed_point(i as u32);
        let rhs = closed_point_rhs(ctx, i);
        if lhs != rhs {
            return Ok(CheckResult::fail(
                ID,
                format!(
                    "point {}: closed={lhs} but colon-maximal-and-singleton-fiber={rhs}",
                    ctx.spectrum.points()[i].elems
                ),
            ));
        }
    }
    Ok(CheckResult::pass(
        ID,
        format!("biconditional holds for all {} points", ctx.spectrum.len()),
    ))
}

/// T1 is equivalent to every point being maximal, and to the closed-point
/// conditions holding at every point.
fn check_t1(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "t1_iff_maximal_points";
    let Some(zariski) = &ctx.zariski else {
        return Ok(CheckResult::na(ID, ctx.not_topological_note()));
    };
    let t1 = zariski.space.is_t1();
    let conditions = (0..ctx.spectrum.len()).all(|i| closed_point_rhs(ctx, i));
    let all_maximal = (0..ctx.spectrum.len()).all(|i| {
        !ctx.spectrum.points().iter().any(|q| {
            ctx.spectrum.points()[i].elems.is_proper_subset(&q.elems)
        })
    });
    if t1 == conditions && t1 == all_maximal {
        Ok(CheckResult::pass(
            ID,
            format!("T1 = {t1}, matching maximality and the pointwise conditions"),
        ))
    } else {
        Ok(CheckResult::fail(
            ID,
            format!("T1 = {t1}, pointwise conditions = {conditions}, all points maximal = {all_maximal}"),
        ))
    }
}

/// A nonempty subset is irreducible exactly when the intersection of its
/// points is itself a point.
fn check_irreducible_iff_eta(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "irreducible_iff_intersection_point";
    let Some(zariski) = &ctx.zariski else {
        return Ok(CheckResult::na(ID, ctx.not_topological_note()));
    };
    let subsets = subset_family(ctx.spectrum.len() as u32, ctx.subset_limit, ctx.seed);
    for w in &subsets {
        let irr = zariski.space.irreducible(w)?.holds;
        let eta = ctx.spectrum.eta(w);
        let pwp = ctx.is_pwp(&eta)?;
        if irr != pwp {
            return Ok(CheckResult::fail(
                ID,
                format!(
                    "subset {w}: irreducible={irr} but η(W) = {} pseudo-prime={pwp}",
                    eta.elems
                ),
            ));
        }
    }
    Ok(CheckResult::pass(
        ID,
        format!("biconditional holds on {} subsets", subsets.len()),
    ))
}

/// The irreducibility corollary items, each gated on its hypothesis.
fn check_corollary_bundle(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "irreducibility_corollaries";
    let Some(zariski) = &ctx.zariski else {
        return Ok(CheckResult::na(ID, ctx.not_topological_note()));
    };
    let mut notes: Vec<String> = Vec::new();
    let mut failed = false;

    // (1) χ(P) irreducible iff the pseudo radical of P is a point
    for p in ctx.spectrum.submodules() {
        let chi = ctx.spectrum.variety_of(p);
        let lhs = if chi.is_empty() {
            false
        } else {
            zariski.space.irreducible(&chi)?.holds
        };
        let rhs = ctx.is_pwp(&ctx.spectrum.pseudo_radical(p))?;
        if lhs != rhs {
            notes.push(format!(
                "item 1 FAIL at {}: χ irreducible={lhs}, radical point={rhs}",
                p.elems
            ));
            failed = true;
        }
    }
    if !failed {
        notes.push("item 1 holds for every graded submodule".to_string());
    }

    // (2) the whole space against the radical of zero
    let whole = ctx.spectrum.all_points();
    let whole_irr = if whole.is_empty() {
        false
    } else {
        zariski.space.irreducible(&whole)?.holds
    };
    let rad_zero_point = ctx.is_pwp(&ctx.spectrum.pseudo_radical(&ctx.module.zero_submodule()))?;
    if whole_irr != rad_zero_point {
        notes.push(format!(
            "item 2 FAIL: spectrum irreducible={whole_irr}, radical of zero is a point={rad_zero_point}"
        ));
        failed = true;
    } else {
        notes.push(format!("item 2 holds (both {whole_irr})"));
    }

    // (3) nonempty fibers are irreducible
    let mut fiber_count = 0;
    for j in ctx.spectrum.gwspec() {
        let fiber = ctx.spectrum.fiber(j)?;
        if fiber.is_empty() {
            continue;
        }
        fiber_count += 1;
        if !zariski.space.irreducible(&fiber)?.holds {
            notes.push(format!("item 3 FAIL: fiber over {} is reducible", j.elems));
            failed = true;
        }
    }
    notes.push(format!("item 3 checked on {fiber_count} nonempty fibers"));

    // (4) quasi-local rings: the graded maximal submodules, when they are
    // points, form an irreducible subspace
    if ctx.module.ring().is_quasi_local() {
        let gmax = ctx.module.gmax_submodules();
        let indices: Option<Vec<u32>> = gmax
            .iter()
            .map(|p| ctx.spectrum.point_index(p).map(|i| i as u32))
            .collect();
        match indices {
            Some(idx) if !idx.is_empty() => {
                let set = CodeSet::from_iter(idx);
                if zariski.space.irreducible(&set)?.holds {
                    notes.push("item 4 holds: maximal submodules form an irreducible subspace".into());
                } else {
                    notes.push("item 4 FAIL: maximal submodules form a reducible subspace".into());
                    failed = true;
                }
            }
            Some(_) => notes.push("item 4 not applicable: no graded maximal submodules".into()),
            None => {
                notes.push("item 4 not applicable: a graded maximal submodule is not a point".into())
            }
        }
    } else {
        notes.push("item 4 not applicable: ring is not quasi-local".into());
    }

    // (5) the zero submodule being a point forces irreducibility
    if ctx.spectrum.zero_point().is_some() {
        if whole_irr {
            notes.push("item 5 holds: zero is a point and the spectrum is irreducible".into());
        } else {
            notes.push("item 5 FAIL: zero is a point but the spectrum is reducible".into());
            failed = true;
        }
    } else {
        notes.push("item 5 not applicable: zero submodule is not a point".into());
    }

    // (6) domains with a faithful module have an irreducible spectrum
    let ann = annihilator(&ctx.module);
    if ctx.module.ring().ring().is_domain() && ann.elems.len() == 1 {
        if whole_irr {
            notes.push("item 6 holds: domain with faithful module, spectrum irreducible".into());
        } else {
            notes.push("item 6 FAIL: domain with faithful module but reducible spectrum".into());
            failed = true;
        }
    } else {
        notes.push("item 6 not applicable: ring is not a domain acting faithfully".into());
    }

    let detail = notes.join("; ");
    if failed {
        Ok(CheckResult::fail(ID, detail))
    } else {
        Ok(CheckResult::pass(ID, detail))
    }
}

/// Irreducible closed sets are exactly the varieties of points (with unique
/// generic points), components correspond to minimal points, and for
/// primeful modules the components arise from minimal weakly prime ideals
/// over the annihilator.
fn check_components(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "components_and_minimal_points";
    let Some(zariski) = &ctx.zariski else {
        return Ok(CheckResult::na(ID, ctx.not_topological_note()));
    };
    let mut point_varieties: Vec<CodeSet> = ctx
        .spectrum
        .points()
        .iter()
        .map(|p| ctx.spectrum.variety_of(p))
        .collect();
    point_varieties.sort();
    point_varieties.dedup();
    let irreducible_closed = zariski.space.irreducible_closed_sets();
    if irreducible_closed != point_varieties {
        return Ok(CheckResult::fail(
            ID,
            format!(
                "irreducible closed family {:?} differs from point varieties {:?}",
                irreducible_closed, point_varieties
            ),
        ));
    }
    for c in &irreducible_closed {
        if zariski.space.generic_points(c).len() != 1 {
            return Ok(CheckResult::fail(
                ID,
                format!("irreducible closed set {c} lacks a unique generic point"),
            ));
        }
    }

    let mut components = zariski.space.components();
    components.sort();
    let mut minimal_varieties: Vec<CodeSet> = ctx
        .spectrum
        .minimal_points()
        .iter()
        .map(|i| ctx.spectrum.variety_of(&ctx.spectrum.points()[i as usize]))
        .collect();
    minimal_varieties.sort();
    minimal_varieties.dedup();
    if components != minimal_varieties {
        return Ok(CheckResult::fail(
            ID,
            format!(
                "components {:?} differ from varieties of minimal points {:?}",
                components, minimal_varieties
            ),
        ));
    }
    if components.len() != ctx.spectrum.minimal_points().len() {
        return Ok(CheckResult::fail(
            ID,
            "component count differs from minimal point count".to_string(),
        ));
    }

    let mut primeful_note = "primeful form not applicable".to_string();
    if ctx.primeful == Some(true) && !ctx.spectrum.is_empty() {
        let ann = annihilator(&ctx.module);
        let over_ann: Vec<&GradedIdeal> = ctx
            .spectrum
            .gwspec()
            .iter()
            .filter(|i| ann.elems.is_subset(&i.elems))
            .collect();
        let minimal_ideals: Vec<&&GradedIdeal> = over_ann
            .iter()
            .filter(|i| !over_ann.iter().any(|j| j.elems.is_proper_subset(&i.elems)))
            .collect();
        let mut h_family: Vec<CodeSet> = minimal_ideals
            .iter()
            .map(|l| ctx.spectrum.variety_of(&ctx.module.ideal_image(l)))
            .collect();
        h_family.sort();
        h_family.dedup();
        if h_family != components {
            return Ok(CheckResult::fail(
                ID,
                format!(
                    "primeful component family {:?} differs from components {:?}",
                    h_family, components
                ),
            ));
        }
        primeful_note = format!(
            "primeful form agrees via {} minimal ideals over Ann(M)",
            minimal_ideals.len()
        );
    }

    Ok(CheckResult::pass(
        ID,
        format!(
            "{} irreducible closed sets with unique generic points; {} components match minimal points; {}",
            irreducible_closed.len(),
            components.len(),
            primeful_note
        ),
    ))
}

/// Five equivalent irreducibility conditions for primeful modules.
fn check_irreducibility_equivalences(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "irreducibility_equivalences";
    if ctx.primeful != Some(true) {
        return Ok(CheckResult::na(ID, "module is not primeful"));
    }
    if ctx.spectrum.is_empty() {
        return Ok(CheckResult::na(ID, "empty spectrum"));
    }
    let Some(zariski) = &ctx.zariski else {
        return Ok(CheckResult::na(ID, ctx.not_topological_note()));
    };
    let Some((ring_spectrum, Some(ring_space))) = &ctx.ring_self else {
        return Ok(CheckResult::na(ID, "base-ring spectrum has no topology"));
    };
    let Some((rstar_spectrum, Some(rstar_space))) = &ctx.rstar_self else {
        return Ok(CheckResult::na(ID, "quotient-ring spectrum has no topology"));
    };

    let ann = annihilator(&ctx.module);

    let c1 = zariski.space.irreducible(&ctx.spectrum.all_points())?.holds;
    let c2 = {
        let pts = rstar_spectrum.all_points();
        !pts.is_empty() && rstar_space.space.irreducible(&pts)?.holds
    };
    let c3 = {
        let subspace = ring_spectrum.variety(&ann.elems);
        !subspace.is_empty() && ring_space.space.irreducible(&subspace)?.holds
    };
    let c4 = {
        let rad = graded_radical(ctx.module.ring(), &ann)?;
        is_graded_weakly_prime_ideal_with(ctx.module.ring(), &rad, ctx.invert).holds
    };
    let c5 = ctx
        .spectrum
        .gwspec()
        .iter()
        .filter(|p| ann.elems.is_subset(&p.elems))
        .any(|p| ctx.spectrum.variety_of(&ctx.module.ideal_image(p)) == ctx.spectrum.all_points());

    if c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5 {
        Ok(CheckResult::pass(
            ID,
            format!("all five conditions evaluate to {c1}"),
        ))
    } else {
        Ok(CheckResult::fail(
            ID,
            format!("conditions diverge: spectrum={c1}, quotient-ring={c2}, ideal-subspace={c3}, radical-prime={c4}, variety-form={c5}"),
        ))
    }
}

/// If every variety has the form χ(I·M), the space is weakly spectral.
fn check_variety_form_spectral(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "variety_form_implies_spectral";
    let Some(zariski) = &ctx.zariski else {
        return Ok(CheckResult::na(ID, ctx.not_topological_note()));
    };
    let hypothesis = ctx.spectrum.submodules().iter().all(|p| {
        let chi = ctx.spectrum.variety_of(p);
        ctx.spectrum
            .ideals()
            .iter()
            .any(|i| ctx.spectrum.variety_of(&ctx.module.ideal_image(i)) == chi)
    });
    if !hypothesis {
        return Ok(CheckResult::pass(
            ID,
            "some variety is not of the form χ(I·M); implication vacuous",
        ));
    }
    let report = zariski.space.weakly_spectral_report();
    if report.is_weakly_spectral() {
        Ok(CheckResult::pass(
            ID,
            "every variety has the form χ(I·M) and the space is weakly spectral",
        ))
    } else {
        Ok(CheckResult::fail(
            ID,
            format!("hypothesis holds but the spectral conditions fail: {report:?}"),
        ))
    }
}

/// For (automatically Noetherian) finite spaces, weakly spectral is
/// equivalent to T0 plus generic points in irreducible closed subsets.
fn check_noetherian_criterion(ctx: &Ctx) -> Result<CheckResult> {
    const ID: &str = "noetherian_spectral_criterion";
    let Some(zariski) = &ctx.zariski else {
        return Ok(CheckResult::na(ID, ctx.not_topological_note()));
    };
    let report = zariski.space.weakly_spectral_report();
    let lhs = report.is_weakly_spectral();
    let rhs = report.noetherian_criterion();
    if lhs == rhs {
        Ok(CheckResult::pass(
            ID,
            format!("four-condition and Noetherian criteria agree ({lhs})"),
        ))
    } else {
        Ok(CheckResult::fail(
            ID,
            format!("four-condition = {lhs} but T0-plus-generic = {rhs}"),
        ))
    }
}

// ---------------------------------------------------------------------------
// analysis (the `analyze` command)

#[derive(Debug, Clone, Serialize)]
pub struct IdealRow {
    pub ideal: String,
    pub prime: bool,
    pub weakly_prime: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PointRow {
    pub submodule: String,
    pub colon: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberRow {
    pub ideal: String,
    pub points: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub name: String,
    pub facts: InstanceFacts,
    pub points: Vec<PointRow>,
    pub fibers: Vec<FiberRow>,
    pub ideal_table: Vec<IdealRow>,
    pub closed_sets: Option<Vec<String>>,
    pub not_topological_witness: Option<String>,
}

/// Computes the analysis report for one instance.
pub fn analyze_instance(inst: &LoadedInstance, opts: &VerifyOptions) -> Result<Analysis> {
    let ctx = Ctx::build(inst, opts)?;
    let points = (0..ctx.spectrum.len())
        .map(|i| PointRow {
            submodule: ctx.spectrum.points()[i].elems.to_string(),
            colon: ctx.spectrum.colon_of(i).elems.to_string(),
        })
        .collect();
    let fibers = ctx
        .spectrum
        .gwspec()
        .iter()
        .map(|j| {
            let fiber = ctx.spectrum.fiber(j)?;
            Ok(FiberRow {
                ideal: j.elems.to_string(),
                points: fiber
                    .iter()
                    .map(|i| ctx.spectrum.points()[i as usize].elems.to_string())
                    .collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let ideal_table = ctx
        .spectrum
        .ideals()
        .iter()
        .map(|i| IdealRow {
            ideal: i.elems.to_string(),
            prime: is_graded_prime_ideal(ctx.module.ring(), i).holds,
            weakly_prime: is_graded_weakly_prime_ideal_with(ctx.module.ring(), i, ctx.invert)
                .holds,
        })
        .collect();
    let closed_sets = ctx.zariski.as_ref().map(|z| {
        z.space
            .closed_sets()
            .iter()
            .map(|c| c.to_string())
            .collect()
    });
    let facts = InstanceFacts {
        ring_size: inst.ring.size(),
        module_size: inst.module.size(),
        graded_submodules: ctx.spectrum.submodules().len(),
        graded_ideals: ctx.spectrum.ideals().len(),
        points: ctx.spectrum.len(),
        multiplication: ctx.multiplication,
        primeful: ctx.primeful,
        injective: ctx.injective,
        points_extraordinary: ctx.wt.all_points_extraordinary,
        union_identity: ctx.wt.union_identity,
        space_built: ctx.zariski.is_some(),
    };
    Ok(Analysis {
        name: inst.spec.name.clone(),
        facts,
        points,
        fibers,
        ideal_table,
        closed_sets,
        not_topological_witness: ctx
            .wt
            .union_identity_witness
            .as_ref()
            .map(|(p, q)| format!("{p}, {q}")),
    })
}

// ---------------------------------------------------------------------------
// rendering

fn fmt_flag(v: Option<bool>) -> String {
    match v {
        Some(b) => b.to_string(),
        None => "unknown".to_string(),
    }
}

pub fn render_suite_text(report: &SuiteReport) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    for inst in &report.instances {
        writeln!(
            s,
            "instance {} (|R|={}, |M|={}, points={}, submodules={}, ideals={}) [{} ms]",
            inst.name,
            inst.facts.ring_size,
            inst.facts.module_size,
            inst.facts.points,
            inst.facts.graded_submodules,
            inst.facts.graded_ideals,
            inst.elapsed_ms
        )
        .unwrap();
        writeln!(
            s,
            "  flags: multiplication={} primeful={} injective={} extraordinary={} union-identity={} space={}",
            inst.facts.multiplication,
            fmt_flag(inst.facts.primeful),
            fmt_flag(inst.facts.injective),
            inst.facts.points_extraordinary,
            inst.facts.union_identity,
            if inst.facts.space_built { "built" } else { "refused" }
        )
        .unwrap();
        for c in &inst.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::NotApplicable => "  NA",
            };
            writeln!(s, "  [{tag}] {}: {}", c.id, c.detail).unwrap();
        }
        s.push('\n');
    }
    writeln!(
        s,
        "summary: {} instances, {} pass, {} fail, {} not applicable",
        report.summary.instances, report.summary.pass, report.summary.fail, report.summary.not_applicable
    )
    .unwrap();
    s
}

/// Machine format: canonical JSON, byte-identical across runs (no wall
/// times).
pub fn render_suite_machine(report: &SuiteReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
    out.push('\n');
    out
}

pub fn render_analysis_text(a: &Analysis) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    writeln!(s, "instance {}", a.name).unwrap();
    writeln!(
        s,
        "  ring size {}, module size {}, {} graded submodules, {} graded ideals",
        a.facts.ring_size, a.facts.module_size, a.facts.graded_submodules, a.facts.graded_ideals
    )
    .unwrap();
    writeln!(
        s,
        "  flags: multiplication={} primeful={} injective={} extraordinary={} union-identity={}",
        a.facts.multiplication,
        fmt_flag(a.facts.primeful),
        fmt_flag(a.facts.injective),
        a.facts.points_extraordinary,
        a.facts.union_identity
    )
    .unwrap();
    if a.points.is_empty() {
        writeln!(s, "  spectrum: empty").unwrap();
    } else {
        writeln!(s, "  spectrum ({} points):", a.points.len()).unwrap();
        for p in &a.points {
            writeln!(s, "    point {} with colon {}", p.submodule, p.colon).unwrap();
        }
    }
    writeln!(s, "  fibers:").unwrap();
    for f in &a.fibers {
        writeln!(s, "    over {}: [{}]", f.ideal, f.points.join(", ")).unwrap();
    }
    writeln!(s, "  graded ideals (prime / weakly prime):").unwrap();
    for row in &a.ideal_table {
        writeln!(
            s,
            "    {}  prime={} weakly-prime={}",
            row.ideal, row.prime, row.weakly_prime
        )
        .unwrap();
    }
    match &a.closed_sets {
        Some(sets) => {
            writeln!(s, "  closed sets ({}):", sets.len()).unwrap();
            for c in sets {
                writeln!(s, "    {c}").unwrap();
            }
        }
        None => {
            writeln!(
                s,
                "  no topology: χ-identity fails for semiprime pair {}",
                a.not_topological_witness.as_deref().unwrap_or("?")
            )
            .unwrap();
        }
    }
    s
}

pub fn render_analysis_machine(a: &Analysis) -> String {
    let mut out = serde_json::to_string_pretty(a).expect("analysis serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{Limits, Loader};

    fn load(name: &str) -> LoadedInstance {
        Loader::new(Limits::default()).resolve(name).unwrap()
    }

    #[test]
    fn registry_ids_are_sorted_and_complete() {
        let ids: Vec<&str> = registry().iter().map(|(id, _)| *id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        assert_eq!(ids, CHECK_IDS.to_vec());
    }

    #[test]
    fn z4_instance_passes_everything() {
        let report = run_instance(&load("z4_trivial"), &VerifyOptions::default()).unwrap();
        assert_eq!(report.failures(), 0, "{:#?}", report.checks);
        assert_eq!(report.checks.len(), CHECK_IDS.len());
        assert!(report.facts.space_built);
        assert_eq!(report.facts.points, 2);
    }

    #[test]
    fn z6_instance_fails_exactly_the_equivalence_check() {
        let report = run_instance(&load("z6_trivial"), &VerifyOptions::default()).unwrap();
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.id)
            .collect();
        assert_eq!(failing, vec!["extraordinary_vs_union_identity"]);
        assert!(!report.facts.space_built);
        assert!(report.facts.points_extraordinary);
        assert!(!report.facts.union_identity);
        // space-gated checks report not-applicable
        let na: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::NotApplicable)
            .map(|c| c.id)
            .collect();
        assert!(na.contains(&"closure_density_t0"));
        assert!(na.contains(&"closed_points_criterion"));
    }

    #[test]
    fn free_rank2_fails_exactly_the_equivalence_check() {
        let report = run_instance(&load("free_rank2_z2"), &VerifyOptions::default()).unwrap();
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.id)
            .collect();
        assert_eq!(failing, vec!["extraordinary_vs_union_identity"]);
        assert!(!report.facts.multiplication);
        assert_eq!(report.facts.primeful, Some(true));
        assert_eq!(report.facts.injective, Some(false));
    }

    #[test]
    fn t1_expectations_on_catalog() {
        let z5 = run_instance(&load("z5_trivial"), &VerifyOptions::default()).unwrap();
        let t1_check = z5
            .checks
            .iter()
            .find(|c| c.id == "t1_iff_maximal_points")
            .unwrap();
        assert_eq!(t1_check.status, CheckStatus::Pass);
        assert!(t1_check.detail.contains("T1 = true"), "{}", t1_check.detail);

        let z4 = run_instance(&load("z4_trivial"), &VerifyOptions::default()).unwrap();
        let t1_check = z4
            .checks
            .iter()
            .find(|c| c.id == "t1_iff_maximal_points")
            .unwrap();
        assert_eq!(t1_check.status, CheckStatus::Pass);
        assert!(t1_check.detail.contains("T1 = false"), "{}", t1_check.detail);
    }

    #[test]
    fn fault_injection_causes_failures() {
        let opts = VerifyOptions {
            fault: Some(FaultInjection::InvertWeaklyPrime),
            ..VerifyOptions::default()
        };
        let report = run_instance(&load("z4_trivial"), &opts).unwrap();
        assert!(report.failures() >= 1, "mutant must be caught");
    }

    #[test]
    fn machine_rendering_is_deterministic() {
        let inst = load("z4_trivial");
        let r1 = run_many(std::slice::from_ref(&inst), &VerifyOptions::default()).unwrap();
        let r2 = run_many(std::slice::from_ref(&inst), &VerifyOptions::default()).unwrap();
        assert_eq!(render_suite_machine(&r1), render_suite_machine(&r2));
        assert!(!render_suite_machine(&r1).contains("elapsed"));
    }

    #[test]
    fn analysis_of_free_rank2() {
        let a = analyze_instance(&load("free_rank2_z2"), &VerifyOptions::default()).unwrap();
        assert_eq!(a.points.len(), 4);
        assert!(a.points.iter().all(|p| p.colon == "{0}"));
        assert!(!a.facts.multiplication);
        assert!(a.closed_sets.is_none());
        assert!(a.not_topological_witness.is_some());
    }

    #[test]
    fn analysis_of_zero_module_notes_empty_spectrum() {
        let mut loader = Loader::new(Limits::default());
        let inst = loader
            .load_spec(crate::instance::InstanceSpec {
                name: "zero".into(),
                group: vec![2],
                ring: crate::instance::RingSpec::IntegersMod(4),
                module: crate::instance::ModuleSpec::Quotient {
                    base: "z4_trivial".into(),
                    generators: vec![1],
                },
            })
            .unwrap();
        let a = analyze_instance(&inst, &VerifyOptions::default()).unwrap();
        assert!(a.points.is_empty());
        assert_eq!(a.facts.module_size, 1);
        let text = render_analysis_text(&a);
        assert!(text.contains("spectrum: empty"));
    }
}
