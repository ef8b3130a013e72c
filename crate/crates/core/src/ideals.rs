//! Ideals, quotients and semiprimality.
//!
//! An ideal is a normal subgroup of `(A, ∘)` that is invariant under every
//! `λ_a` and satisfies `a + I = I + a`. Ideals are also normal subgroups of
//! `(A, +)` and their `+` and `∘` cosets coincide, which is what makes
//! [`quotient`] well defined.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::brace::{closure::check_parent, star_product};
use crate::error::{Error, Result};
use crate::group::{self, close_right};
use crate::limits::DEFAULT_ENUM_CAP;
use crate::{FiniteSkewBrace, SubSet};

/// A subset known to pass [`is_ideal`] in the brace it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    members: SubSet,
}

impl Ideal {
    /// Checks `members` and wraps it; fails with the first broken rule.
    pub fn new(brace: &FiniteSkewBrace, members: SubSet) -> Result<Self> {
        match is_ideal(brace, &members)? {
            IdealTest::Holds => Ok(Ideal { members }),
            IdealTest::Fails(rule) => Err(Error::precondition(format!("{members} is not an ideal ({rule})"))),
        }
    }

    pub fn zero(brace: &FiniteSkewBrace) -> Self {
        Ideal { members: SubSet::zero(brace.order()) }
    }

    pub fn full(brace: &FiniteSkewBrace) -> Self {
        Ideal { members: SubSet::full(brace.order()) }
    }

    pub fn members(&self) -> &SubSet {
        &self.members
    }

    pub fn into_members(self) -> SubSet {
        self.members
    }

    /// Never zero: every ideal contains 0.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_zero(&self) -> bool {
        self.members.is_zero()
    }

    /// The ideal as a skew brace in its own right, members relabelled in
    /// ascending order.
    pub fn as_brace(&self, parent: &FiniteSkewBrace) -> Result<FiniteSkewBrace> {
        parent.restrict(&self.members, format!("{}|{}", parent.name(), self.members))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.members.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealRule {
    CircSubgroup,
    CircNormal,
    LambdaInvariant,
    AddCosets,
}

impl fmt::Display for IdealRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealRule::CircSubgroup => "not a subgroup of (A,∘)",
            IdealRule::CircNormal => "not normal in (A,∘)",
            IdealRule::LambdaInvariant => "not λ-invariant",
            IdealRule::AddCosets => "a+I ≠ I+a for some a",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealTest {
    Holds,
    Fails(IdealRule),
}

impl IdealTest {
    pub fn holds(self) -> bool {
        self == IdealTest::Holds
    }
}

/// Direct check of the ideal definition against every element of `A`.
pub fn is_ideal(brace: &FiniteSkewBrace, s: &SubSet) -> Result<IdealTest> {
    check_parent(brace, s)?;
    let n = brace.order();
    let members = s.to_vec();
    // A finite nonempty subset closed under ∘ is a subgroup.
    if !s.contains(0) || members.iter().any(|&x| members.iter().any(|&y| !s.contains(brace.circ(x, y)))) {
        return Ok(IdealTest::Fails(IdealRule::CircSubgroup));
    }
    for a in 0..n {
        let ai = brace.inv(a);
        if members.iter().any(|&x| !s.contains(brace.circ(brace.circ(a, x), ai))) {
            return Ok(IdealTest::Fails(IdealRule::CircNormal));
        }
    }
    for a in 0..n {
        if members.iter().any(|&x| !s.contains(brace.lambda(a, x))) {
            return Ok(IdealTest::Fails(IdealRule::LambdaInvariant));
        }
    }
    // a + S = S + a  ⇔  -a + S + a ⊆ S (the sets have equal size).
    for a in 0..n {
        let na = brace.neg(a);
        if members.iter().any(|&x| !s.contains(brace.add(brace.add(na, x), a))) {
            return Ok(IdealTest::Fails(IdealRule::AddCosets));
        }
    }
    Ok(IdealTest::Holds)
}

/// Least ideal containing `seed`.
///
/// Grows a circle subgroup and feeds every new member through the
/// conjugations and `λ` maps of the brace's generators. Invariance under
/// generators gives invariance under the groups they generate, because
/// `a ↦ λ_a` and `a ↦ (x ↦ a∘x∘a⁻¹)` are homomorphisms from `(A, ∘)` and
/// additive conjugations are generated by those of `(A, +)`'s generators.
pub fn ideal_closure(brace: &FiniteSkewBrace, seed: &SubSet) -> Result<Ideal> {
    check_parent(brace, seed)?;
    Ok(Ideal { members: SubSet::from_bits(close_ideal(brace, seed.iter())) })
}

pub(crate) fn close_ideal(brace: &FiniteSkewBrace, seed: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let n = brace.order();
    let circ = brace.circ_flat();
    let mut members = FixedBitSet::with_capacity(n);
    members.insert(0);
    let mut sub_gens: Vec<usize> = Vec::new();
    let mut pending: Vec<usize> = seed.into_iter().collect();
    let mut added = Vec::new();
    while let Some(x) = pending.pop() {
        if members.contains(x) {
            continue;
        }
        sub_gens.push(x);
        added.clear();
        let frontier: Vec<usize> = members.ones().collect();
        close_right(circ, n, &mut members, &sub_gens, frontier, &mut added);
        for &y in &added {
            for &g in brace.circ_generators() {
                let conj = brace.circ(brace.circ(g, y), brace.inv(g));
                let lam = brace.lambda(g, y);
                for z in [conj, lam] {
                    if !members.contains(z) {
                        pending.push(z);
                    }
                }
            }
            for &g in brace.add_generators() {
                let z = brace.add(brace.add(brace.neg(g), y), g);
                if !members.contains(z) {
                    pending.push(z);
                }
            }
        }
    }
    members
}

/// Elementwise sum `{x + y}`.
pub fn sum_set(brace: &FiniteSkewBrace, x: &SubSet, y: &SubSet) -> Result<SubSet> {
    check_parent(brace, x)?;
    check_parent(brace, y)?;
    let mut bits = FixedBitSet::with_capacity(brace.order());
    for a in x.iter() {
        for b in y.iter() {
            bits.insert(brace.add(a, b));
        }
    }
    Ok(SubSet::from_bits(bits))
}

/// All ideals, ascending by size then lexicographically by members.
pub fn enumerate_ideals(brace: &FiniteSkewBrace) -> Result<Vec<Ideal>> {
    enumerate_ideals_with_cap(brace, DEFAULT_ENUM_CAP)
}

/// Every ideal is the join of the principal ideals of its members, and
/// the join of two ideals is their sum set, so closing the principal
/// ideals under pairwise sums finds them all.
pub fn enumerate_ideals_with_cap(brace: &FiniteSkewBrace, cap: usize) -> Result<Vec<Ideal>> {
    let n = brace.order();
    if n > cap {
        return Err(Error::SizeCap { order: n, cap });
    }
    let mut principals: Vec<FixedBitSet> = Vec::new();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(close_ideal(brace, []));
    for a in 1..n {
        let p = close_ideal(brace, [a]);
        if seen.insert(p.clone()) {
            principals.push(p);
        }
    }
    let mut queue: Vec<FixedBitSet> = principals.clone();
    while let Some(i) = queue.pop() {
        for p in &principals {
            if p.is_subset(&i) {
                continue;
            }
            let mut j = FixedBitSet::with_capacity(n);
            for x in i.ones() {
                for y in p.ones() {
                    j.insert(brace.add(x, y));
                }
            }
            if seen.insert(j.clone()) {
                queue.push(j);
            }
        }
    }
    let mut ideals: Vec<Ideal> = seen.into_iter().map(|b| Ideal { members: SubSet::from_bits(b) }).collect();
    ideals.sort_by(|a, b| a.members.cmp_size_lex(&b.members));
    Ok(ideals)
}

/// `A/I` with the coset map. The coset of `0` is index 0 and the other
/// cosets are numbered by their least member.
pub fn quotient(brace: &FiniteSkewBrace, ideal: &SubSet) -> Result<(FiniteSkewBrace, Vec<usize>)> {
    if !is_ideal(brace, ideal)?.holds() {
        return Err(Error::precondition(format!("{ideal} is not an ideal of {}", brace.name())));
    }
    let n = brace.order();
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in 0..n {
        if coset[a] != usize::MAX {
            continue;
        }
        let k = reps.len();
        reps.push(a);
        for i in ideal.iter() {
            coset[brace.add(a, i)] = k;
        }
    }
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut circ = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(coset[brace.add(a, b)] as u16);
            circ.push(coset[brace.circ(a, b)] as u16);
        }
    }
    let q = FiniteSkewBrace::from_flat(format!("{}/{}", brace.name(), ideal), m, add, circ)?;
    Ok((q, coset))
}

/// `A * A = 0`.
pub fn is_trivial(brace: &FiniteSkewBrace) -> bool {
    let n = brace.order();
    (0..n).all(|a| (0..n).all(|b| brace.star(a, b) == 0))
}

/// All pairwise stars of `s` vanish; equivalent to `s * s = {0}`.
pub fn stars_vanish(brace: &FiniteSkewBrace, s: &SubSet) -> bool {
    let m = s.to_vec();
    m.iter().all(|&a| m.iter().all(|&b| brace.star(a, b) == 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SemiprimeMethod {
    /// Principal ideal closures of each nonzero element.
    #[default]
    Fast,
    /// Scan of the full ideal list.
    Exhaustive,
}

impl std::str::FromStr for SemiprimeMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(SemiprimeMethod::Fast),
            "exhaustive" => Ok(SemiprimeMethod::Exhaustive),
            other => Err(Error::input(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiprimeVerdict {
    pub semiprime: bool,
    /// A nonzero ideal `I` with `I * I = 0`, present iff not semiprime.
    pub witness: Option<Ideal>,
    pub method: SemiprimeMethod,
}

impl fmt::Display for SemiprimeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("SEMIPRIME"),
            Some(w) => write!(f, "NOT SEMIPRIME witness {w}"),
        }
    }
}

/// Decides whether the only ideal `I` with `I * I = 0` is zero.
///
/// The fast method is complete: if `I * I = 0` and `a ∈ I` is nonzero then
/// the principal ideal `J` of `a` lies in `I`, so `J * J = 0` too.
pub fn is_semiprime(brace: &FiniteSkewBrace, method: SemiprimeMethod) -> Result<SemiprimeVerdict> {
    let witness = match method {
        SemiprimeMethod::Exhaustive => enumerate_ideals(brace)?
            .into_iter()
            .find(|i| !i.is_zero() && stars_vanish(brace, &i.members)),
        SemiprimeMethod::Fast => fast_witness(brace),
    };
    Ok(SemiprimeVerdict { semiprime: witness.is_none(), witness, method })
}

/// Exhaustive when the enumeration cap allows it, fast otherwise.
pub fn semiprime_auto(brace: &FiniteSkewBrace) -> Result<SemiprimeVerdict> {
    if brace.order() <= DEFAULT_ENUM_CAP {
        is_semiprime(brace, SemiprimeMethod::Exhaustive)
    } else {
        is_semiprime(brace, SemiprimeMethod::Fast)
    }
}

fn fast_witness(brace: &FiniteSkewBrace) -> Option<Ideal> {
    let n = brace.order();
    let mut checked: HashSet<FixedBitSet> = HashSet::new();
    // Elements of an ideal already known to have a nonvanishing star can
    // still generate a smaller witness, so every element is tried.
    for a in 1..n {
        let j = close_ideal(brace, [a]);
        if checked.contains(&j) {
            continue;
        }
        let s = SubSet::from_bits(j.clone());
        if stars_vanish(brace, &s) {
            return Some(Ideal { members: s });
        }
        checked.insert(j);
    }
    None
}

/// Outcome of checking the extension lemma for one ideal.
#[derive(Clone, Debug)]
pub struct ExtensionReport {
    pub ideal_semiprime: bool,
    pub quotient_semiprime: bool,
    pub brace_semiprime: bool,
    /// Ideals `J` for which `(J+I)*(J+I) ⊄ J*J + I`.
    pub containment_failures: Vec<Ideal>,
    pub ideals_checked: usize,
}

impl ExtensionReport {
    /// Semiprime ideal and quotient imply a semiprime brace.
    pub fn implication_holds(&self) -> bool {
        !(self.ideal_semiprime && self.quotient_semiprime) || self.brace_semiprime
    }

    pub fn passed(&self) -> bool {
        self.implication_holds() && self.containment_failures.is_empty()
    }
}

/// Checks that `I` and `A/I` semiprime forces `A` semiprime, and the
/// containment `(J+I)*(J+I) ⊆ J*J + I` for every ideal `J`.
pub fn lemma_ses_check(brace: &FiniteSkewBrace, ideal: &Ideal) -> Result<ExtensionReport> {
    let sub = ideal.as_brace(brace)?;
    let (q, _) = quotient(brace, ideal.members())?;
    let ideals = enumerate_ideals(brace)?;
    let mut failures = Vec::new();
    for j in &ideals {
        if !containment_holds(brace, j.members(), ideal.members())? {
            failures.push(j.clone());
        }
    }
    Ok(ExtensionReport {
        ideal_semiprime: semiprime_auto(&sub)?.semiprime,
        quotient_semiprime: semiprime_auto(&q)?.semiprime,
        brace_semiprime: semiprime_auto(brace)?.semiprime,
        containment_failures: failures,
        ideals_checked: ideals.len(),
    })
}

/// `(J+I)*(J+I) ⊆ J*J + I`.
pub fn containment_holds(brace: &FiniteSkewBrace, j: &SubSet, i: &SubSet) -> Result<bool> {
    let ji = sum_set(brace, j, i)?;
    let lhs = star_product(brace, &ji, &ji)?;
    let rhs = sum_set(brace, &star_product(brace, j, j)?, i)?;
    Ok(lhs.is_subset(&rhs))
}

/// Subgroup of `(A, +)` generated by a set; used by the invariant checks.
pub fn additive_span(brace: &FiniteSkewBrace, s: &SubSet) -> SubSet {
    SubSet::from_bits(group::subgroup_closure(brace.add_flat(), brace.order(), s.iter()))
}
