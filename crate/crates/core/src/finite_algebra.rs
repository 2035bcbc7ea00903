//! Exact arithmetic for finite abelian groups and finite commutative rings.
//!
//! Elements of every carrier are dense integer codes in `0..size`. Groups
//! built as direct products of cyclic groups use a mixed-radix encoding, so
//! `Z_n` has element `k` at code `k`. Quotient carriers keep the parent
//! encoding and canonical (minimal-code) coset representatives, which makes
//! quotient maps plain lookup tables.

use crate::codeset::CodeSet;
use crate::{Error, Result};

/// Dense element code of some carrier, in `0..size`.
pub type Code = u32;

/// Hard caps protecting table allocations; loader-configurable bounds sit
/// below these (see `instance::Limits`).
pub const HARD_RING_CAP: u32 = 8192;
pub const HARD_GROUP_CAP: u32 = 1 << 16;
pub const HARD_ACTION_ENTRIES: u64 = 1 << 24;

/// Default carrier size under which exhaustive axiom scans run unprompted.
pub const AXIOM_SCAN_BOUND: u32 = 256;

#[derive(Debug, Clone)]
enum GroupRepr {
    /// Direct product of cyclic groups; code = Σ residue[i] · weight[i]
    /// (little-endian: factor 0 is least significant).
    MixedRadix { orders: Vec<u32>, weights: Vec<u32> },
    /// k-fold direct power of an arbitrary base group.
    Power { base: Box<FiniteAbelianGroup>, copies: u32 },
    /// Quotient of `parent` by a subgroup; element i is the coset with
    /// canonical (minimal) parent representative `reps[i]`.
    Quotient {
        parent: Box<FiniteAbelianGroup>,
        reps: Vec<Code>,
        /// parent code -> quotient code of its coset
        proj: Vec<Code>,
    },
}

/// Finite abelian group with coded elements and identity at code 0.
#[derive(Debug, Clone)]
pub struct FiniteAbelianGroup {
    size: u32,
    repr: GroupRepr,
}

impl FiniteAbelianGroup {
    /// The cyclic group `Z_n`.
    pub fn cyclic(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("cyclic group order must be >= 1".into()));
        }
        Self::mixed_radix(vec![n])
    }

    /// Direct product of cyclic groups with the given orders.
    pub fn mixed_radix(orders: Vec<u32>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::Invalid("group needs at least one cyclic factor".into()));
        }
        if orders.iter().any(|&n| n == 0) {
            return Err(Error::Invalid("cyclic orders must be >= 1".into()));
        }
        let mut size: u64 = 1;
        let mut weights = Vec::with_capacity(orders.len());
        for &n in &orders {
            weights.push(size as u32);
            size *= n as u64;
            if size > HARD_GROUP_CAP as u64 {
                return Err(Error::SizeBound {
                    what: "group carrier",
                    size,
                    bound: HARD_GROUP_CAP as u64,
                });
            }
        }
        Ok(FiniteAbelianGroup {
            size: size as u32,
            repr: GroupRepr::MixedRadix { orders, weights },
        })
    }

    /// Direct product of arbitrary groups (flattens mixed-radix factors).
    pub fn direct_product(factors: &[FiniteAbelianGroup]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Invalid("direct product of zero factors".into()));
        }
        let mut orders = Vec::new();
        for f in factors {
            match &f.repr {
                GroupRepr::MixedRadix { orders: o, .. } => orders.extend_from_slice(o),
                _ => {
                    return Err(Error::Invalid(
                        "direct_product expects mixed-radix factors; use power() for others".into(),
                    ))
                }
            }
        }
        Self::mixed_radix(orders)
    }

    /// k-fold direct power of `base`.
    pub fn power(base: FiniteAbelianGroup, copies: u32) -> Result<Self> {
        if copies == 0 {
            return Err(Error::Invalid("power of zero copies".into()));
        }
        let size = (base.size as u64).checked_pow(copies).ok_or(Error::SizeBound {
            what: "group carrier",
            size: u64::MAX,
            bound: HARD_GROUP_CAP as u64,
        })?;
        if size > HARD_GROUP_CAP as u64 {
            return Err(Error::SizeBound {
                what: "group carrier",
                size,
                bound: HARD_GROUP_CAP as u64,
            });
        }
        // A power of a mixed-radix group is itself mixed-radix.
        if let GroupRepr::MixedRadix { orders, .. } = &base.repr {
            let mut all = Vec::with_capacity(orders.len() * copies as usize);
            for _ in 0..copies {
                all.extend_from_slice(orders);
            }
            return Self::mixed_radix(all);
        }
        Ok(FiniteAbelianGroup {
            size: size as u32,
            repr: GroupRepr::Power {
                base: Box::new(base),
                copies,
            },
        })
    }

    /// Quotient by a subgroup, given as an element set.
    ///
    /// Cosets are labelled by their minimal parent code; quotient codes are
    /// assigned in increasing representative order, so the zero coset is
    /// code 0.
    pub fn quotient(&self, subgroup: &CodeSet) -> Result<Self> {
        if !self.is_subgroup(subgroup) {
            return Err(Error::Invalid(format!(
                "quotient by a non-subgroup {subgroup}"
            )));
        }
        let n = self.size as usize;
        let mut proj: Vec<Code> = vec![Code::MAX; n];
        let mut reps: Vec<Code> = Vec::new();
        for p in 0..self.size {
            if proj[p as usize] != Code::MAX {
                continue;
            }
            let q = reps.len() as Code;
            reps.push(p);
            for s in subgroup.iter() {
                proj[self.add(p, s) as usize] = q;
            }
        }
        Ok(FiniteAbelianGroup {
            size: reps.len() as u32,
            repr: GroupRepr::Quotient {
                parent: Box::new(self.clone()),
                reps,
                proj,
            },
        })
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn zero(&self) -> Code {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = Code> {
        0..self.size
    }

    /// Cyclic orders for groups built as products of cyclics.
    pub fn cyclic_orders(&self) -> Option<&[u32]> {
        match &self.repr {
            GroupRepr::MixedRadix { orders, .. } => Some(orders),
            _ => None,
        }
    }

    /// Residue tuple of an element of a mixed-radix group.
    pub fn residues(&self, a: Code) -> Option<Vec<u32>> {
        match &self.repr {
            GroupRepr::MixedRadix { orders, weights } => Some(
                orders
                    .iter()
                    .zip(weights)
                    .map(|(&n, &w)| (a / w) % n)
                    .collect(),
            ),
            _ => None,
        }
    }

    /// Encodes a residue tuple of a mixed-radix group.
    pub fn encode(&self, residues: &[u32]) -> Option<Code> {
        match &self.repr {
            GroupRepr::MixedRadix { orders, weights } => {
                if residues.len() != orders.len() {
                    return None;
                }
                let mut code = 0u32;
                for ((&r, &n), &w) in residues.iter().zip(orders).zip(weights) {
                    if r >= n {
                        return None;
                    }
                    code += r * w;
                }
                Some(code)
            }
            _ => None,
        }
    }

    pub fn add(&self, a: Code, b: Code) -> Code {
        debug_assert!(a < self.size && b < self.size);
        match &self.repr {
            GroupRepr::MixedRadix { orders, weights } => {
                let mut out = 0u32;
                for (&n, &w) in orders.iter().zip(weights) {
                    let ra = (a / w) % n;
                    let rb = (b / w) % n;
                    out += ((ra + rb) % n) * w;
                }
                out
            }
            GroupRepr::Power { base, copies } => {
                let m = base.size;
                let (mut a, mut b) = (a, b);
                let mut out = 0u64;
                let mut w = 1u64;
                for _ in 0..*copies {
                    out += base.add(a % m, b % m) as u64 * w;
                    a /= m;
                    b /= m;
                    w *= m as u64;
                }
                out as u32
            }
            GroupRepr::Quotient { parent, reps, proj } => {
                proj[parent.add(reps[a as usize], reps[b as usize]) as usize]
            }
        }
    }

    pub fn neg(&self, a: Code) -> Code {
        match &self.repr {
            GroupRepr::MixedRadix { orders, weights } => {
                let mut out = 0u32;
                for (&n, &w) in orders.iter().zip(weights) {
                    let r = (a / w) % n;
                    out += ((n - r) % n) * w;
                }
                out
            }
            GroupRepr::Power { base, copies } => {
                let m = base.size;
                let mut a = a;
                let mut out = 0u64;
                let mut w = 1u64;
                for _ in 0..*copies {
                    out += base.neg(a % m) as u64 * w;
                    a /= m;
                    w *= m as u64;
                }
                out as u32
            }
            GroupRepr::Quotient { parent, reps, proj } => {
                proj[parent.neg(reps[a as usize]) as usize]
            }
        }
    }

    pub fn sub(&self, a: Code, b: Code) -> Code {
        self.add(a, self.neg(b))
    }

    /// Additive order of an element.
    pub fn order_of(&self, a: Code) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    /// Projection map of a quotient group (parent code -> quotient code).
    pub fn quotient_projection(&self) -> Option<&[Code]> {
        match &self.repr {
            GroupRepr::Quotient { proj, .. } => Some(proj),
            _ => None,
        }
    }

    /// Canonical parent representative of a quotient element.
    pub fn quotient_rep(&self, a: Code) -> Option<Code> {
        match &self.repr {
            GroupRepr::Quotient { reps, .. } => Some(reps[a as usize]),
            _ => None,
        }
    }

    /// Whether a code set is a subgroup (contains 0, closed under addition).
    ///
    /// In a finite group closure under addition alone already forces
    /// inverses.
    pub fn is_subgroup(&self, set: &CodeSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        for a in set.iter() {
            for b in set.iter() {
                if !set.contains(self.add(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Additive closure of a set of generators (always contains 0).
    pub fn additive_closure<I: IntoIterator<Item = Code>>(&self, gens: I) -> CodeSet {
        let mut set = CodeSet::singleton(0);
        let mut frontier: Vec<Code> = Vec::new();
        for g in gens {
            if set.insert(g) {
                frontier.push(g);
            }
        }
        while let Some(x) = frontier.pop() {
            let members: Vec<Code> = set.iter().collect();
            for m in members {
                let s = self.add(x, m);
                if set.insert(s) {
                    frontier.push(s);
                }
            }
        }
        set
    }

    /// Exhaustive group-axiom scan; failures carry witness codes.
    pub fn check_group_axioms(&self, scan_bound: u32) -> Result<AxiomReport> {
        if self.size > scan_bound {
            return Err(Error::SizeBound {
                what: "group axiom scan",
                size: self.size as u64,
                bound: scan_bound as u64,
            });
        }
        let mut report = AxiomReport::default();
        let n = self.size;

        let mut closure = AxiomCheck::pass("closure");
        'cl: for a in 0..n {
            for b in 0..n {
                if self.add(a, b) >= n {
                    closure = AxiomCheck::fail("closure", vec![a, b]);
                    break 'cl;
                }
            }
        }
        report.push(closure);

        let mut comm = AxiomCheck::pass("commutativity");
        'co: for a in 0..n {
            for b in a..n {
                if self.add(a, b) != self.add(b, a) {
                    comm = AxiomCheck::fail("commutativity", vec![a, b]);
                    break 'co;
                }
            }
        }
        report.push(comm);

        let mut assoc = AxiomCheck::pass("associativity");
        'as_: for a in 0..n {
            for b in 0..n {
                let ab = self.add(a, b);
                for c in 0..n {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        assoc = AxiomCheck::fail("associativity", vec![a, b, c]);
                        break 'as_;
                    }
                }
            }
        }
        report.push(assoc);

        let mut ident = AxiomCheck::pass("identity");
        for a in 0..n {
            if self.add(0, a) != a || self.add(a, 0) != a {
                ident = AxiomCheck::fail("identity", vec![a]);
                break;
            }
        }
        report.push(ident);

        let mut inv = AxiomCheck::pass("inverses");
        for a in 0..n {
            if self.add(a, self.neg(a)) != 0 {
                inv = AxiomCheck::fail("inverses", vec![a]);
                break;
            }
        }
        report.push(inv);

        Ok(report)
    }
}

/// One axiom check with an optional witness tuple on failure.
#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    pub witness: Vec<Code>,
}

impl AxiomCheck {
    fn pass(axiom: &'static str) -> Self {
        AxiomCheck {
            axiom,
            passed: true,
            witness: Vec::new(),
        }
    }
    fn fail(axiom: &'static str, witness: Vec<Code>) -> Self {
        AxiomCheck {
            axiom,
            passed: false,
            witness,
        }
    }
}

/// Result of an exhaustive axiom scan. Failures are data, not errors.
#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    fn push(&mut self, c: AxiomCheck) {
        self.checks.push(c);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn describe_failures(&self) -> String {
        self.failures()
            .map(|c| format!("{} (witness {:?})", c.axiom, c.witness))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Finite commutative unital ring: an additive group plus a full
/// multiplication table and a distinguished unity.
#[derive(Debug, Clone)]
pub struct FiniteCommRing {
    add: FiniteAbelianGroup,
    mul: Vec<Code>,
    one: Code,
}

impl FiniteCommRing {
    /// `Z_n` with the standard multiplication. `n = 1` is the zero ring.
    pub fn integers_mod(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("modulus must be >= 1".into()));
        }
        let add = FiniteAbelianGroup::cyclic(n)?;
        let mut mul = vec![0u32; (n as usize) * (n as usize)];
        for a in 0..n as u64 {
            for b in 0..n as u64 {
                mul[(a * n as u64 + b) as usize] = ((a * b) % n as u64) as u32;
            }
        }
        Ok(FiniteCommRing {
            add,
            mul,
            one: 1 % n,
        })
    }

    /// Builds a ring from a raw table without validation; pair with
    /// [`FiniteCommRing::check_ring_axioms`].
    pub fn from_table(add: FiniteAbelianGroup, mul: Vec<Code>, one: Code) -> Result<Self> {
        let n = add.size() as usize;
        if add.size() > HARD_RING_CAP {
            return Err(Error::SizeBound {
                what: "ring carrier",
                size: add.size() as u64,
                bound: HARD_RING_CAP as u64,
            });
        }
        if mul.len() != n * n {
            return Err(Error::Invalid(format!(
                "multiplication table has {} entries, expected {}",
                mul.len(),
                n * n
            )));
        }
        if one as usize >= n {
            return Err(Error::Invalid("unity code out of range".into()));
        }
        Ok(FiniteCommRing { add, mul, one })
    }

    /// Group ring `Z_n[G]` with the convolution product. The carrier is the
    /// set of functions `G -> Z_n`, so it has `n^|G|` elements.
    pub fn group_ring(n: u32, g: &FiniteAbelianGroup) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid("group ring coefficient modulus must be >= 2".into()));
        }
        let gs = g.size();
        let size = (n as u64).checked_pow(gs).ok_or(Error::SizeBound {
            what: "ring carrier",
            size: u64::MAX,
            bound: HARD_RING_CAP as u64,
        })?;
        if size > HARD_RING_CAP as u64 {
            return Err(Error::SizeBound {
                what: "ring carrier",
                size,
                bound: HARD_RING_CAP as u64,
            });
        }
        let add = FiniteAbelianGroup::mixed_radix(vec![n; gs as usize])?;
        let size = size as u32;
        let decode = |code: Code| -> Vec<u32> { add.residues(code).unwrap() };
        let mut mul = vec![0u32; (size as usize) * (size as usize)];
        for a in 0..size {
            let fa = decode(a);
            for b in 0..size {
                let fb = decode(b);
                let mut out = vec![0u32; gs as usize];
                for (i, &ca) in fa.iter().enumerate() {
                    if ca == 0 {
                        continue;
                    }
                    for (j, &cb) in fb.iter().enumerate() {
                        if cb == 0 {
                            continue;
                        }
                        let k = g.add(i as Code, j as Code) as usize;
                        out[k] = (out[k] + ca * cb) % n;
                    }
                }
                mul[(a as usize) * (size as usize) + b as usize] = add.encode(&out).unwrap();
            }
        }
        // unity = indicator of the group identity = residue tuple (1,0,..,0)
        let one = add.encode(&{
            let mut t = vec![0u32; gs as usize];
            t[0] = 1;
            t
        })
        .unwrap();
        Ok(FiniteCommRing { add, mul, one })
    }

    /// Quotient ring by an ideal (given as its element set), together with
    /// the projection map parent-code -> quotient-code.
    pub fn quotient(&self, ideal: &CodeSet) -> Result<(FiniteCommRing, Vec<Code>)> {
        let add_q = self.add.quotient(ideal)?;
        let proj = add_q.quotient_projection().unwrap().to_vec();
        let n = add_q.size();
        let mut mul = vec![0u32; (n as usize) * (n as usize)];
        for a in 0..n {
            let ra = add_q.quotient_rep(a).unwrap();
            for b in 0..n {
                let rb = add_q.quotient_rep(b).unwrap();
                mul[(a as usize) * (n as usize) + b as usize] = proj[self.mul(ra, rb) as usize];
            }
        }
        let one = proj[self.one as usize];
        Ok((
            FiniteCommRing {
                add: add_q,
                mul,
                one,
            },
            proj,
        ))
    }

    pub fn add_group(&self) -> &FiniteAbelianGroup {
        &self.add
    }

    pub fn size(&self) -> u32 {
        self.add.size()
    }

    pub fn zero(&self) -> Code {
        0
    }

    pub fn one(&self) -> Code {
        self.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size() == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = Code> {
        0..self.size()
    }

    pub fn add(&self, a: Code, b: Code) -> Code {
        self.add.add(a, b)
    }

    pub fn neg(&self, a: Code) -> Code {
        self.add.neg(a)
    }

    pub fn mul(&self, a: Code, b: Code) -> Code {
        self.mul[(a as usize) * (self.size() as usize) + b as usize]
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: Code, k: u32) -> Code {
        let mut out = a;
        for _ in 1..k {
            out = self.mul(out, a);
        }
        out
    }

    /// Multiplicative inverse, if any.
    pub fn inverse_of(&self, a: Code) -> Option<Code> {
        self.elements().find(|&b| self.mul(a, b) == self.one)
    }

    /// Whether the ring has no nonzero zero divisors.
    pub fn is_domain(&self) -> bool {
        for a in 1..self.size() {
            for b in 1..self.size() {
                if self.mul(a, b) == 0 {
                    return false;
                }
            }
        }
        !self.is_zero_ring()
    }

    /// Exhaustive ring-axiom scan (commutativity, associativity,
    /// distributivity, unity, closure) plus the group axioms of the
    /// additive carrier.
    pub fn check_ring_axioms(&self, scan_bound: u32) -> Result<AxiomReport> {
        let n = self.size();
        if n > scan_bound {
            return Err(Error::SizeBound {
                what: "ring axiom scan",
                size: n as u64,
                bound: scan_bound as u64,
            });
        }
        let mut report = self.add.check_group_axioms(scan_bound)?;

        let mut closure = AxiomCheck::pass("mul closure");
        'cl: for a in 0..n {
            for b in 0..n {
                if self.mul(a, b) >= n {
                    closure = AxiomCheck::fail("mul closure", vec![a, b]);
                    break 'cl;
                }
            }
        }
        report.push(closure);

        let mut comm = AxiomCheck::pass("mul commutativity");
        'co: for a in 0..n {
            for b in a..n {
                if self.mul(a, b) != self.mul(b, a) {
                    comm = AxiomCheck::fail("mul commutativity", vec![a, b]);
                    break 'co;
                }
            }
        }
        report.push(comm);

        let mut assoc = AxiomCheck::pass("mul associativity");
        'as_: for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        assoc = AxiomCheck::fail("mul associativity", vec![a, b, c]);
                        break 'as_;
                    }
                }
            }
        }
        report.push(assoc);

        let mut distr = AxiomCheck::pass("distributivity");
        'di: for a in 0..n {
            for b in 0..n {
                let sum = self.add(a, b);
                for c in 0..n {
                    if self.mul(c, sum) != self.add(self.mul(c, a), self.mul(c, b)) {
                        distr = AxiomCheck::fail("distributivity", vec![c, a, b]);
                        break 'di;
                    }
                }
            }
        }
        report.push(distr);

        // In the zero ring one == zero; the unity law still holds.
        let mut unity = AxiomCheck::pass("unity");
        for a in 0..n {
            if self.mul(self.one, a) != a {
                unity = AxiomCheck::fail("unity", vec![self.one, a]);
                break;
            }
        }
        report.push(unity);

        Ok(report)
    }
}
