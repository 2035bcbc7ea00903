//! Instance definition files, the built-in catalog and the loader.
//!
//! Instances are described by a small construction language (a line-oriented
//! text format and an equivalent JSON form) and resolved against previously
//! defined instances and the catalog, so quotient constructions can
//! reference named base structures. Loading validates size bounds before
//! construction and runs the exhaustive axiom scans afterwards.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::finite_algebra::{Code, FiniteAbelianGroup, FiniteCommRing};
use crate::graded::{GradedModule, GradedRing};
use crate::{Error, Result};

/// Ring construction descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingSpec {
    /// `Z_n` with the trivial grading.
    IntegersMod(u32),
    /// Group ring `Z_n[G]` graded by the instance's grading group.
    GroupRing(u32),
    /// Quotient of a named ring by the graded ideal generated by
    /// homogeneous element codes.
    Quotient { base: String, generators: Vec<Code> },
}

/// Module construction descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleSpec {
    /// The ring as a module over itself.
    #[serde(rename = "self")]
    SelfModule,
    /// Free module with one degree shift per slot.
    Free { shifts: Vec<Code> },
    /// Quotient of a named instance's module by the graded submodule
    /// generated by homogeneous element codes.
    Quotient { base: String, generators: Vec<Code> },
}

/// A named instance: grading group, ring and module construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub name: String,
    pub group: Vec<u32>,
    pub ring: RingSpec,
    pub module: ModuleSpec,
}

/// Loader size bounds; `--max-size` overrides both carrier bounds.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_ring: u32,
    pub max_module: u32,
    /// Carrier size up to which the exhaustive axiom scans run on load.
    pub axiom_scan: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ring: 4096,
            max_module: 65536,
            axiom_scan: 256,
        }
    }
}

/// A fully constructed and validated instance.
#[derive(Debug, Clone)]
pub struct LoadedInstance {
    pub spec: InstanceSpec,
    pub ring: Arc<GradedRing>,
    pub module: Arc<GradedModule>,
}

/// Catalog entry: the spec plus a one-line description.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub spec: InstanceSpec,
    pub description: &'static str,
}

/// The built-in catalog: zero divisors, a field, nontrivial gradings, a
/// graded quotient ring, a non-multiplication free module, and a quotient
/// module.
pub fn catalog() -> Vec<CatalogEntry> {
    fn spec(name: &str, group: Vec<u32>, ring: RingSpec, module: ModuleSpec) -> InstanceSpec {
        InstanceSpec {
            name: name.to_string(),
            group,
            ring,
            module,
        }
    }
    vec![
        CatalogEntry {
            spec: spec("z4_trivial", vec![2], RingSpec::IntegersMod(4), ModuleSpec::SelfModule),
            description: "Z_4, trivially Z_2-graded, as a module over itself",
        },
        CatalogEntry {
            spec: spec("z5_trivial", vec![2], RingSpec::IntegersMod(5), ModuleSpec::SelfModule),
            description: "the field Z_5, trivially Z_2-graded, over itself",
        },
        CatalogEntry {
            spec: spec("z6_trivial", vec![2], RingSpec::IntegersMod(6), ModuleSpec::SelfModule),
            description: "Z_6, trivially Z_2-graded, over itself",
        },
        CatalogEntry {
            spec: spec("group_ring_2", vec![2], RingSpec::GroupRing(2), ModuleSpec::SelfModule),
            description: "the group ring Z_2[Z_2] with its natural grading, over itself",
        },
        CatalogEntry {
            spec: spec("group_ring_4", vec![2], RingSpec::GroupRing(4), ModuleSpec::SelfModule),
            description: "the group ring Z_4[Z_2] with its natural grading, over itself",
        },
        CatalogEntry {
            spec: spec(
                "group_ring_4_mod_two",
                vec![2],
                RingSpec::Quotient {
                    base: "group_ring_4".to_string(),
                    generators: vec![2],
                },
                ModuleSpec::SelfModule,
            ),
            description: "Z_4[Z_2] modulo the graded ideal (2), over itself",
        },
        CatalogEntry {
            spec: spec(
                "free_rank2_z2",
                vec![2],
                RingSpec::IntegersMod(2),
                ModuleSpec::Free { shifts: vec![0, 0] },
            ),
            description: "the free rank-2 module Z_2 ⊕ Z_2 over trivially graded Z_2",
        },
        CatalogEntry {
            spec: spec(
                "z4_mod_two",
                vec![2],
                RingSpec::IntegersMod(4),
                ModuleSpec::Quotient {
                    base: "z4_trivial".to_string(),
                    generators: vec![2],
                },
            ),
            description: "the quotient module Z_4/(2) over trivially graded Z_4",
        },
    ]
}

pub fn catalog_names() -> Vec<String> {
    catalog().into_iter().map(|e| e.spec.name).collect()
}

/// Resolves and constructs instances, keeping every loaded structure
/// available for later quotient references.
pub struct Loader {
    limits: Limits,
    registry: BTreeMap<String, LoadedInstance>,
}

impl Loader {
    pub fn new(limits: Limits) -> Self {
        Loader {
            limits,
            registry: BTreeMap::new(),
        }
    }

    /// Resolves a name against already-loaded instances, then the catalog.
    pub fn resolve(&mut self, name: &str) -> Result<LoadedInstance> {
        if let Some(inst) = self.registry.get(name) {
            return Ok(inst.clone());
        }
        let entry = catalog()
            .into_iter()
            .find(|e| e.spec.name == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        self.load_spec(entry.spec)
    }

    /// Builds, validates and registers one instance.
    ///
    /// A quotient module lives over its base instance's ring, so for
    /// `module quotient` the ring spec must coincide with the base's and
    /// the constructed ring is shared with it.
    pub fn load_spec(&mut self, spec: InstanceSpec) -> Result<LoadedInstance> {
        if let ModuleSpec::Quotient { base, .. } = &spec.module {
            let base_inst = self.resolve(base)?;
            if base_inst.spec.ring != spec.ring || base_inst.spec.group != spec.group {
                return Err(Error::Invalid(format!(
                    "instance {} quotients the module of {}, so it must declare the same ring and group",
                    spec.name, base
                )));
            }
        }
        let grading = FiniteAbelianGroup::mixed_radix(spec.group.clone())?;

        let ring: Arc<GradedRing> = match &spec.ring {
            RingSpec::IntegersMod(n) => {
                self.check_ring_size(*n as u64)?;
                Arc::new(GradedRing::trivial(
                    FiniteCommRing::integers_mod(*n)?,
                    grading.clone(),
                )?)
            }
            RingSpec::GroupRing(n) => {
                let size = (*n as u64)
                    .checked_pow(grading.size())
                    .unwrap_or(u64::MAX);
                self.check_ring_size(size)?;
                Arc::new(GradedRing::group_ring(*n, grading.clone())?)
            }
            RingSpec::Quotient { base, generators } => {
                let base_inst = self.resolve(base)?;
                if base_inst.spec.group != spec.group {
                    return Err(Error::Invalid(format!(
                        "instance {} and its base {} have different grading groups",
                        spec.name, base
                    )));
                }
                let ideal = base_inst.ring.ideal_generated(generators)?;
                let (qring, _) = base_inst.ring.quotient(&ideal)?;
                Arc::new(qring)
            }
        };

        let (ring, module): (Arc<GradedRing>, Arc<GradedModule>) = match &spec.module {
            ModuleSpec::SelfModule => {
                let m = Arc::new(GradedModule::self_module(&ring)?);
                (ring, m)
            }
            ModuleSpec::Free { shifts } => {
                let size = (ring.size() as u64)
                    .checked_pow(shifts.len() as u32)
                    .unwrap_or(u64::MAX);
                self.check_module_size(size)?;
                let m = Arc::new(GradedModule::free_module(&ring, shifts)?);
                (ring, m)
            }
            ModuleSpec::Quotient { base, generators } => {
                let base_inst = self.resolve(base)?;
                let sub = base_inst.module.submodule_generated(generators)?;
                let (qmodule, _) = base_inst.module.quotient(&sub)?;
                (Arc::clone(base_inst.module.ring()), Arc::new(qmodule))
            }
        };
        self.check_module_size(module.size() as u64)?;

        // exhaustive axiom scans at catalog scale
        if ring.size() <= self.limits.axiom_scan {
            let report = ring.ring().check_ring_axioms(self.limits.axiom_scan)?;
            if !report.all_passed() {
                return Err(Error::AxiomViolation(format!(
                    "ring of instance {} fails: {}",
                    spec.name,
                    report.describe_failures()
                )));
            }
            let grading_report = ring.check_grading_axioms();
            if !grading_report.all_passed() {
                return Err(Error::AxiomViolation(format!(
                    "grading of instance {} fails: {}",
                    spec.name,
                    grading_report.describe_failures()
                )));
            }
        }
        let r = ring.size() as u64;
        let m = module.size() as u64;
        if r * m * m + r * r * m <= 1 << 26 {
            let report = module.check_module_axioms(1 << 26)?;
            if !report.all_passed() {
                return Err(Error::AxiomViolation(format!(
                    "module of instance {} fails: {}",
                    spec.name,
                    report.describe_failures()
                )));
            }
        }

        let loaded = LoadedInstance {
            spec,
            ring,
            module,
        };
        self.registry
            .insert(loaded.spec.name.clone(), loaded.clone());
        Ok(loaded)
    }

    /// Loads every instance of a definition file (text or JSON), in order.
    pub fn load_str(&mut self, content: &str) -> Result<Vec<LoadedInstance>> {
        let specs = parse_instances(content)?;
        specs.into_iter().map(|s| self.load_spec(s)).collect()
    }

    pub fn load_file(&mut self, path: &std::path::Path) -> Result<Vec<LoadedInstance>> {
        let content = std::fs::read_to_string(path)?;
        self.load_str(&content)
    }

    fn check_ring_size(&self, size: u64) -> Result<()> {
        if size > self.limits.max_ring as u64 {
            return Err(Error::SizeBound {
                what: "ring carrier",
                size,
                bound: self.limits.max_ring as u64,
            });
        }
        Ok(())
    }

    fn check_module_size(&self, size: u64) -> Result<()> {
        if size > self.limits.max_module as u64 {
            return Err(Error::SizeBound {
                what: "module carrier",
                size,
                bound: self.limits.max_module as u64,
            });
        }
        Ok(())
    }
}

/// Parses either format: JSON when the first non-space byte is `[` or `{`,
/// the line format otherwise.
pub fn parse_instances(content: &str) -> Result<Vec<InstanceSpec>> {
    let trimmed = content.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return parse_json(content);
    }
    parse_text(content)
}

pub fn parse_json(content: &str) -> Result<Vec<InstanceSpec>> {
    if content.trim_start().starts_with('{') {
        let one: InstanceSpec = serde_json::from_str(content)
            .map_err(|e| Error::Parse {
                line: e.line(),
                msg: e.to_string(),
            })?;
        return Ok(vec![one]);
    }
    serde_json::from_str(content).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })
}

/// Line format:
///
/// ```text
/// instance z4_trivial
/// group 2
/// ring integers_mod 4      # or: group_ring N | quotient BASE GEN..
/// module self              # or: free SHIFT.. | quotient BASE GEN..
/// ```
pub fn parse_text(content: &str) -> Result<Vec<InstanceSpec>> {
    struct Partial {
        name: String,
        line: usize,
        group: Option<Vec<u32>>,
        ring: Option<RingSpec>,
        module: Option<ModuleSpec>,
    }

    fn finish(p: Partial) -> Result<InstanceSpec> {
        Ok(InstanceSpec {
            group: p.group.ok_or(Error::Parse {
                line: p.line,
                msg: format!("instance {} has no group line", p.name),
            })?,
            ring: p.ring.ok_or(Error::Parse {
                line: p.line,
                msg: format!("instance {} has no ring line", p.name),
            })?,
            module: p.module.ok_or(Error::Parse {
                line: p.line,
                msg: format!("instance {} has no module line", p.name),
            })?,
            name: p.name,
        })
    }

    let mut out = Vec::new();
    let mut current: Option<Partial> = None;
    for (idx, raw) in content.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().unwrap();
        let rest: Vec<&str> = tokens.collect();
        let parse_nums = |rest: &[&str]| -> Result<Vec<u32>> {
            rest.iter()
                .map(|t| {
                    t.parse::<u32>().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("expected an integer, found {t:?}"),
                    })
                })
                .collect()
        };
        match keyword {
            "instance" => {
                if rest.len() != 1 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "instance takes exactly one name".into(),
                    });
                }
                if let Some(p) = current.take() {
                    out.push(finish(p)?);
                }
                current = Some(Partial {
                    name: rest[0].to_string(),
                    line: line_no,
                    group: None,
                    ring: None,
                    module: None,
                });
            }
            "group" => {
                let p = current.as_mut().ok_or(Error::Parse {
                    line: line_no,
                    msg: "group line before any instance".into(),
                })?;
                p.group = Some(parse_nums(&rest)?);
            }
            "ring" => {
                let p = current.as_mut().ok_or(Error::Parse {
                    line: line_no,
                    msg: "ring line before any instance".into(),
                })?;
                let kind = rest.first().ok_or(Error::Parse {
                    line: line_no,
                    msg: "ring line needs a construction".into(),
                })?;
                p.ring = Some(match *kind {
                    "integers_mod" => RingSpec::IntegersMod(
                        *parse_nums(&rest[1..])?.first().ok_or(Error::Parse {
                            line: line_no,
                            msg: "integers_mod needs a modulus".into(),
                        })?,
                    ),
                    "group_ring" => RingSpec::GroupRing(
                        *parse_nums(&rest[1..])?.first().ok_or(Error::Parse {
                            line: line_no,
                            msg: "group_ring needs a modulus".into(),
                        })?,
                    ),
                    "quotient" => {
                        let base = rest.get(1).ok_or(Error::Parse {
                            line: line_no,
                            msg: "ring quotient needs a base name".into(),
                        })?;
                        RingSpec::Quotient {
                            base: base.to_string(),
                            generators: parse_nums(&rest[2..])?,
                        }
                    }
                    other => {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("unknown ring construction {other:?}"),
                        })
                    }
                });
            }
            "module" => {
                let p = current.as_mut().ok_or(Error::Parse {
                    line: line_no,
                    msg: "module line before any instance".into(),
                })?;
                let kind = rest.first().ok_or(Error::Parse {
                    line: line_no,
                    msg: "module line needs a construction".into(),
                })?;
                p.module = Some(match *kind {
                    "self" => ModuleSpec::SelfModule,
                    "free" => ModuleSpec::Free {
                        shifts: parse_nums(&rest[1..])?,
                    },
                    "quotient" => {
                        let base = rest.get(1).ok_or(Error::Parse {
                            line: line_no,
                            msg: "module quotient needs a base name".into(),
                        })?;
                        ModuleSpec::Quotient {
                            base: base.to_string(),
                            generators: parse_nums(&rest[2..])?,
                        }
                    }
                    other => {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("unknown module construction {other:?}"),
                        })
                    }
                });
            }
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unknown directive {other:?}"),
                })
            }
        }
    }
    if let Some(p) = current.take() {
        out.push(finish(p)?);
    }
    if out.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "no instances defined".into(),
        });
    }
    Ok(out)
}

/// Canonical text rendering; `parse_text(emit_text(s)) == s`.
pub fn emit_text(specs: &[InstanceSpec]) -> String {
    let mut out = String::new();
    for s in specs {
        out.push_str(&format!("instance {}\n", s.name));
        let orders: Vec<String> = s.group.iter().map(|o| o.to_string()).collect();
        out.push_str(&format!("group {}\n", orders.join(" ")));
        match &s.ring {
            RingSpec::IntegersMod(n) => out.push_str(&format!("ring integers_mod {n}\n")),
            RingSpec::GroupRing(n) => out.push_str(&format!("ring group_ring {n}\n")),
            RingSpec::Quotient { base, generators } => {
                let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
                out.push_str(&format!("ring quotient {base} {}\n", gens.join(" ")));
            }
        }
        match &s.module {
            ModuleSpec::SelfModule => out.push_str("module self\n"),
            ModuleSpec::Free { shifts } => {
                let sh: Vec<String> = shifts.iter().map(|g| g.to_string()).collect();
                out.push_str(&format!("module free {}\n", sh.join(" ")));
            }
            ModuleSpec::Quotient { base, generators } => {
                let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
                out.push_str(&format!("module quotient {base} {}\n", gens.join(" ")));
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_loads_completely() {
        let mut loader = Loader::new(Limits::default());
        for entry in catalog() {
            let inst = loader.resolve(&entry.spec.name).unwrap();
            assert_eq!(inst.spec.name, entry.spec.name);
        }
    }

    #[test]
    fn catalog_expected_sizes() {
        let mut loader = Loader::new(Limits::default());
        let sizes: Vec<(String, u32, u32)> = catalog_names()
            .iter()
            .map(|n| {
                let i = loader.resolve(n).unwrap();
                (n.clone(), i.ring.size(), i.module.size())
            })
            .collect();
        let expected = vec![
            ("z4_trivial".to_string(), 4, 4),
            ("z5_trivial".to_string(), 5, 5),
            ("z6_trivial".to_string(), 6, 6),
            ("group_ring_2".to_string(), 4, 4),
            ("group_ring_4".to_string(), 16, 16),
            ("group_ring_4_mod_two".to_string(), 4, 4),
            ("free_rank2_z2".to_string(), 2, 4),
            ("z4_mod_two".to_string(), 4, 2),
        ];
        assert_eq!(sizes, expected);
    }

    #[test]
    fn text_round_trip() {
        let specs: Vec<InstanceSpec> = catalog().into_iter().map(|e| e.spec).collect();
        let text = emit_text(&specs);
        let parsed = parse_text(&text).unwrap();
        assert_eq!(parsed, specs);
    }

    #[test]
    fn json_round_trip() {
        let specs: Vec<InstanceSpec> = catalog().into_iter().map(|e| e.spec).collect();
        let json = serde_json::to_string_pretty(&specs).unwrap();
        let parsed = parse_json(&json).unwrap();
        assert_eq!(parsed, specs);
    }

    #[test]
    fn parse_error_is_position_annotated() {
        let err = parse_text("instance x\ngroup 2\nring bogus 4\nmodule self\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_homogeneous_generator_rejected() {
        // 3 = 1 + x in Z_2[Z_2] is not homogeneous
        let mut loader = Loader::new(Limits::default());
        let err = loader
            .load_spec(InstanceSpec {
                name: "bad".into(),
                group: vec![2],
                ring: RingSpec::Quotient {
                    base: "group_ring_2".into(),
                    generators: vec![3],
                },
                module: ModuleSpec::SelfModule,
            })
            .unwrap_err();
        assert!(err.to_string().contains("not homogeneous"), "{err}");
    }

    #[test]
    fn oversized_instance_rejected_before_construction() {
        let mut loader = Loader::new(Limits {
            max_ring: 8,
            max_module: 8,
            axiom_scan: 256,
        });
        let err = loader
            .load_spec(InstanceSpec {
                name: "big".into(),
                group: vec![2],
                ring: RingSpec::IntegersMod(9),
                module: ModuleSpec::SelfModule,
            })
            .unwrap_err();
        assert!(matches!(err, Error::SizeBound { .. }));

        let err = loader
            .load_spec(InstanceSpec {
                name: "bigfree".into(),
                group: vec![2],
                ring: RingSpec::IntegersMod(3),
                module: ModuleSpec::Free {
                    shifts: vec![0, 0, 0],
                },
            })
            .unwrap_err();
        assert!(matches!(err, Error::SizeBound { .. }));
    }

    #[test]
    fn unknown_base_name_rejected() {
        let mut loader = Loader::new(Limits::default());
        let err = loader
            .load_spec(InstanceSpec {
                name: "dangling".into(),
                group: vec![2],
                ring: RingSpec::Quotient {
                    base: "nowhere".into(),
                    generators: vec![0],
                },
                module: ModuleSpec::SelfModule,
            })
            .unwrap_err();
        assert!(matches!(err, Error::UnknownName(_)));
    }

    #[test]
    fn file_local_references_resolve_in_order() {
        let text = "\
instance base9
group 3
ring integers_mod 9
module self

instance quot9
group 3
ring quotient base9 3
module self
";
        let mut loader = Loader::new(Limits::default());
        let loaded = loader.load_str(text).unwrap();
        assert_eq!(loaded.len(), 2);
        assert_eq!(loaded[1].ring.size(), 3);
    }
}
