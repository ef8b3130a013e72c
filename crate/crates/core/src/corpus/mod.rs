//! Brace constructors, holomorph enumeration and the text document format.

mod document;
mod groups;
mod holomorph;

use crate::error::{Error, Result};
use crate::FiniteSkewBrace;

pub use document::{parse_braces, parse_documents, BraceDocument};
pub use groups::{small_groups, GroupSpec, MAX_PERMUTATION_DEGREE};
pub use holomorph::{holomorph_enumerate, holomorph_enumerate_table, DEFAULT_HOLOMORPH_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `a ∘ b = a + b`
    Trivial,
    /// `a ∘ b = b + a`
    AlmostTrivial,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(Variant::Trivial),
            "almost-trivial" | "almost_trivial" => Ok(Variant::AlmostTrivial),
            other => Err(Error::input(format!("unknown variant {other:?}"))),
        }
    }
}

/// The trivial or almost-trivial skew brace on a group.
pub fn group_brace(spec: &GroupSpec, variant: Variant) -> Result<FiniteSkewBrace> {
    let add = spec.table()?;
    let n = add.len();
    let circ: Vec<Vec<usize>> = match variant {
        Variant::Trivial => add.clone(),
        Variant::AlmostTrivial => (0..n).map(|a| (0..n).map(|b| add[b][a]).collect()).collect(),
    };
    let name = match variant {
        Variant::Trivial => format!("{spec}"),
        Variant::AlmostTrivial => format!("{spec}op"),
    };
    FiniteSkewBrace::from_rows(name, &add, &circ)
}

/// Carrier labels of [`radical_ring_brace`]: index `i` is `i·g mod M`.
pub fn radical_ring_labels(modulus: usize, generator: usize) -> Result<Vec<usize>> {
    if modulus < 1 {
        return Err(Error::input("modulus must be positive"));
    }
    let g = generator % modulus;
    let mut labels = vec![0];
    let mut x = g;
    while x != 0 {
        labels.push(x);
        x = (x + g) % modulus;
    }
    Ok(labels)
}

/// The brace of the ideal `gZ/MZ` of `Z/MZ` with `a ∘ b = a + b + ab`.
/// Every element must be nilpotent.
pub fn radical_ring_brace(modulus: usize, generator: usize) -> Result<FiniteSkewBrace> {
    let labels = radical_ring_labels(modulus, generator)?;
    let m = modulus;
    if let Some(&x) = labels.iter().find(|&&x| !nilpotent(x, m)) {
        return Err(Error::precondition(format!("{x} is not nilpotent mod {m}; the ring is not radical")));
    }
    let mut index = vec![usize::MAX; m];
    for (i, &x) in labels.iter().enumerate() {
        index[x] = i;
    }
    let add: Vec<Vec<usize>> = labels.iter().map(|&a| labels.iter().map(|&b| index[(a + b) % m]).collect()).collect();
    let circ: Vec<Vec<usize>> =
        labels.iter().map(|&a| labels.iter().map(|&b| index[(a + b + a * b) % m]).collect()).collect();
    let brace = FiniteSkewBrace::from_rows(format!("R{m}g{generator}"), &add, &circ)?;
    for (i, &a) in labels.iter().enumerate() {
        for (j, &b) in labels.iter().enumerate() {
            if labels[brace.star(i, j)] != a * b % m {
                return Err(Error::precondition(format!("star({a},{b}) differs from the ring product")));
            }
        }
    }
    Ok(brace)
}

fn nilpotent(x: usize, m: usize) -> bool {
    let mut p = x % m;
    for _ in 0..=m {
        if p == 0 {
            return true;
        }
        p = p * x % m;
    }
    false
}

/// The running examples: `T2` and `R4 = radical_ring_brace(8, 2)`.
pub fn t2() -> FiniteSkewBrace {
    group_brace(&GroupSpec::Cyclic(2), Variant::Trivial).unwrap().with_name("T2")
}

pub fn r4() -> FiniteSkewBrace {
    radical_ring_brace(8, 2).unwrap().with_name("R4")
}

/// Radical rings used as examples: `(M, g)` pairs.
pub const RADICAL_RING_EXAMPLES: [(usize, usize); 7] = [(8, 2), (4, 2), (9, 3), (16, 4), (25, 5), (16, 2), (27, 3)];

/// Named examples beyond the holomorph enumeration: T2, R4, the
/// almost-trivial braces on S3, A4, A5 and the radical rings.
pub fn named_examples() -> Result<Vec<FiniteSkewBrace>> {
    let mut out = vec![t2(), r4()];
    for spec in ["S3", "A4", "A5"] {
        out.push(group_brace(&spec.parse()?, Variant::AlmostTrivial)?);
    }
    for (m, g) in RADICAL_RING_EXAMPLES {
        out.push(radical_ring_brace(m, g)?);
    }
    Ok(out)
}

/// Holomorph braces of every group of order `≤ max_order` followed by the
/// named examples, deduplicated by labelled tables and filtered to
/// `≤ max_named_order`.
pub fn standard_corpus(max_order: usize, max_named_order: usize) -> Result<Vec<FiniteSkewBrace>> {
    let mut out: Vec<FiniteSkewBrace> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut push = |b: FiniteSkewBrace, out: &mut Vec<FiniteSkewBrace>| {
        if seen.insert(b.clone()) {
            out.push(b);
        }
    };
    for spec in small_groups(max_order) {
        for b in holomorph_enumerate(&spec, max_order)? {
            push(b, &mut out);
        }
    }
    for b in named_examples()? {
        if b.order() <= max_named_order {
            push(b, &mut out);
        }
    }
    Ok(out)
}
