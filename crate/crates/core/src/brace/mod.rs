//! Finite skew braces as pairs of Cayley tables.

pub(crate) mod closure;
pub(crate) mod validate;

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{self, at};
use crate::limits;

pub use closure::{generated_subbrace, star_product};
pub use validate::{validate, Rule, ValidationReport, Violation, EXHAUSTIVE_CHECK_MAX};

/// Which table [`FiniteSkewBrace::table_eval`] reads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Add,
    Circ,
    Neg,
    Inv,
    Lambda,
    Star,
}

impl TableKind {
    pub fn is_unary(self) -> bool {
        matches!(self, TableKind::Neg | TableKind::Inv)
    }
}

/// A validated skew brace on `{0..n-1}` with `0` the identity of both
/// `+` and `∘`. All derived tables are filled at construction and the value
/// is immutable afterwards.
#[derive(Clone)]
pub struct FiniteSkewBrace {
    name: String,
    order: usize,
    add: Vec<u16>,
    circ: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    lam: Vec<u16>,
    star: Vec<u16>,
    add_gens: Vec<usize>,
    circ_gens: Vec<usize>,
}

impl FiniteSkewBrace {
    /// Builds a brace from nested rows, rejecting ragged or out-of-range
    /// tables with [`Error::Input`] and axiom failures with [`Error::Axioms`].
    pub fn from_rows(name: impl Into<String>, add: &[Vec<usize>], circ: &[Vec<usize>]) -> Result<Self> {
        let n = add.len();
        let add = flatten(add, n, "add")?;
        let circ = flatten(circ, n, "circ")?;
        Self::from_flat(name, n, add, circ)
    }

    /// Builds a brace from row-major flat tables.
    pub fn from_flat(name: impl Into<String>, order: usize, add: Vec<u16>, circ: Vec<u16>) -> Result<Self> {
        limits::check_order(order)?;
        if add.len() != order * order || circ.len() != order * order {
            return Err(Error::input(format!("tables must have {} entries", order * order)));
        }
        if let Some(&bad) = add.iter().chain(circ.iter()).find(|&&v| v as usize >= order) {
            return Err(Error::input(format!("entry {bad} out of range for order {order}")));
        }
        let report = validate::check_flat(&add, &circ, order);
        if !report.ok() {
            return Err(Error::Axioms(Box::new(report)));
        }
        Ok(Self::assemble(name.into(), order, add, circ))
    }

    fn assemble(name: String, n: usize, add: Vec<u16>, circ: Vec<u16>) -> Self {
        let neg = row_inverses(&add, n);
        let inv = row_inverses(&circ, n);
        let mut lam = vec![0u16; n * n];
        let mut star = vec![0u16; n * n];
        for a in 0..n {
            let na = neg[a] as usize;
            for b in 0..n {
                let l = add[na * n + circ[a * n + b] as usize];
                lam[a * n + b] = l;
                star[a * n + b] = add[l as usize * n + neg[b] as usize];
            }
        }
        let add_gens = group::generators(&add, n);
        let circ_gens = group::generators(&circ, n);
        FiniteSkewBrace { name, order: n, add, circ, neg, inv, lam, star, add_gens, circ_gens }
    }

    /// The zero brace of order 1.
    pub fn zero() -> Self {
        Self::assemble("zero".into(), 1, vec![0], vec![0])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        at(&self.add, self.order, a, b)
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        at(&self.circ, self.order, a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `λ_a(b) = -a + a ∘ b`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        at(&self.lam, self.order, a, b)
    }

    /// `a * b = λ_a(b) - b`.
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        at(&self.star, self.order, a, b)
    }

    /// Checked table lookup. `b` must be `None` exactly for `Neg` and `Inv`.
    pub fn table_eval(&self, kind: TableKind, a: usize, b: Option<usize>) -> Result<usize> {
        self.check_index(a)?;
        match (kind.is_unary(), b) {
            (true, None) => Ok(match kind {
                TableKind::Neg => self.neg(a),
                _ => self.inv(a),
            }),
            (false, Some(b)) => {
                self.check_index(b)?;
                Ok(match kind {
                    TableKind::Add => self.add(a, b),
                    TableKind::Circ => self.circ(a, b),
                    TableKind::Lambda => self.lambda(a, b),
                    _ => self.star(a, b),
                })
            }
            (true, Some(_)) => Err(Error::input(format!("{kind:?} takes one argument"))),
            (false, None) => Err(Error::input(format!("{kind:?} takes two arguments"))),
        }
    }

    pub(crate) fn check_index(&self, a: usize) -> Result<()> {
        if a >= self.order {
            return Err(Error::input(format!("element {a} out of range for order {}", self.order)));
        }
        Ok(())
    }

    /// Generators of `(A, +)` chosen greedily in ascending order.
    pub fn add_generators(&self) -> &[usize] {
        &self.add_gens
    }

    /// Generators of `(A, ∘)` chosen greedily in ascending order.
    pub fn circ_generators(&self) -> &[usize] {
        &self.circ_gens
    }

    pub(crate) fn add_flat(&self) -> &[u16] {
        &self.add
    }

    pub(crate) fn circ_flat(&self) -> &[u16] {
        &self.circ
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        rows(&self.add, self.order)
    }

    pub fn circ_rows(&self) -> Vec<Vec<usize>> {
        rows(&self.circ, self.order)
    }

    pub fn is_add_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.add(a, b) == self.add(b, a)))
    }

    pub fn is_circ_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.circ(a, b) == self.circ(b, a)))
    }

    /// Restricts both operations to `members`, relabelled in ascending
    /// order. The caller guarantees closure; the result is re-validated.
    pub fn restrict(&self, members: &crate::SubSet, name: impl Into<String>) -> Result<Self> {
        let elems = members.to_vec();
        let m = elems.len();
        if m == 0 || elems[0] != 0 {
            return Err(Error::precondition("a sub-brace must contain 0"));
        }
        let mut index = vec![usize::MAX; self.order];
        for (k, &e) in elems.iter().enumerate() {
            index[e] = k;
        }
        let mut add = Vec::with_capacity(m * m);
        let mut circ = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                let (s, c) = (index[self.add(a, b)], index[self.circ(a, b)]);
                if s == usize::MAX || c == usize::MAX {
                    return Err(Error::precondition(format!("{members} is not closed under + and ∘")));
                }
                add.push(s as u16);
                circ.push(c as u16);
            }
        }
        Self::from_flat(name, m, add, circ)
    }
}

impl PartialEq for FiniteSkewBrace {
    /// Labelled table equality; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.add == other.add && self.circ == other.circ
    }
}

impl Eq for FiniteSkewBrace {}

impl std::hash::Hash for FiniteSkewBrace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.add.hash(state);
        self.circ.hash(state);
    }
}

impl fmt::Debug for FiniteSkewBrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSkewBrace")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

fn flatten(table: &[Vec<usize>], n: usize, what: &str) -> Result<Vec<u16>> {
    if table.len() != n {
        return Err(Error::input(format!("{what} table has {} rows, expected {n}", table.len())));
    }
    if n == 0 {
        return Err(Error::input("empty table"));
    }
    if n > limits::HARD_MAX_ORDER {
        return Err(Error::SizeCap { order: n, cap: limits::max_order() });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (r, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::input(format!("{what} row {r} has {} entries, expected {n}", row.len())));
        }
        for &v in row {
            if v >= n {
                return Err(Error::input(format!("{what} entry {v} in row {r} out of range for order {n}")));
            }
            flat.push(v as u16);
        }
    }
    Ok(flat)
}

fn rows(table: &[u16], n: usize) -> Vec<Vec<usize>> {
    table.chunks(n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
}

/// `inv[a]` is the unique `b` with `a·b = 0`; only called on group tables.
fn row_inverses(table: &[u16], n: usize) -> Vec<u16> {
    (0..n)
        .map(|a| (0..n).find(|&b| table[a * n + b] == 0).expect("group table has inverses") as u16)
        .collect()
}
