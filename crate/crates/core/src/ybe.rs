//! The set-theoretic Yang–Baxter solution of a skew brace,
//! `r(a, b) = (λ_a(b), λ_a(b)⁻¹ ∘ a ∘ b)`.

use std::fmt;

use crate::FiniteSkewBrace;

/// A map `r: X × X → X × X` on `X = {0..n-1}` stored as two tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionMap {
    name: String,
    n: usize,
    /// `left[a·n + b]` is the first component of `r(a, b)`.
    left: Vec<u16>,
    right: Vec<u16>,
}

impl SolutionMap {
    pub fn from_fn(name: impl Into<String>, n: usize, r: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        let mut left = Vec::with_capacity(n * n);
        let mut right = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (u, v) = r(a, b);
                assert!(u < n && v < n, "r({a},{b}) = ({u},{v}) leaves the carrier");
                left.push(u as u16);
                right.push(v as u16);
            }
        }
        SolutionMap { name: name.into(), n, left, right }
    }

    /// `r(a, b) = (b, a)`.
    pub fn flip(n: usize) -> Self {
        Self::from_fn("flip", n, |a, b| (b, a))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, a: usize, b: usize) -> (usize, usize) {
        let k = a * self.n + b;
        (self.left[k] as usize, self.right[k] as usize)
    }

    pub fn is_flip(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.apply(a, b) == (b, a)))
    }

    /// `r` is a bijection of `X × X`.
    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n * self.n];
        (0..self.n * self.n).all(|k| {
            let p = self.left[k] as usize * self.n + self.right[k] as usize;
            !std::mem::replace(&mut seen[p], true)
        })
    }
}

/// The solution induced by a skew brace. Asserts `u ∘ v = a ∘ b`.
pub fn solution_map(brace: &FiniteSkewBrace) -> SolutionMap {
    let s = SolutionMap::from_fn(brace.name(), brace.order(), |a, b| {
        let u = brace.lambda(a, b);
        (u, brace.circ(brace.inv(u), brace.circ(a, b)))
    });
    debug_assert!((0..s.n).all(|a| (0..s.n).all(|b| {
        let (u, v) = s.apply(a, b);
        brace.circ(u, v) == brace.circ(a, b)
    })));
    s
}

/// Checks `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` on every triple and
/// returns the smallest failing triple.
pub fn check_braid(s: &SolutionMap) -> Result<(), [usize; 3]> {
    let n = s.n;
    for x in 0..n {
        for y in 0..n {
            let (x1, y1) = s.apply(x, y);
            for z in 0..n {
                let (y2, z2) = s.apply(y1, z);
                let lhs_xy = s.apply(x1, y2);

                let (y1r, z1r) = s.apply(y, z);
                let (x2r, y2r) = s.apply(x, y1r);
                let (y3r, z3r) = s.apply(y2r, z1r);

                if (lhs_xy.0, lhs_xy.1, z2) != (x2r, y3r, z3r) {
                    return Err([x, y, z]);
                }
            }
        }
    }
    Ok(())
}

/// Every `b ↦ r(a, b)₁` and every `a ↦ r(a, b)₂` is a permutation.
pub fn check_nondegenerate(s: &SolutionMap) -> bool {
    let n = s.n;
    let mut seen = vec![false; n];
    let mut perm = |f: &dyn Fn(usize) -> usize| {
        seen.iter_mut().for_each(|x| *x = false);
        (0..n).all(|k| !std::mem::replace(&mut seen[f(k)], true))
    };
    (0..n).all(|a| perm(&|b| s.apply(a, b).0)) && (0..n).all(|b| perm(&|a| s.apply(a, b).1))
}

impl fmt::Display for SolutionMap {
    /// Same layout as a brace document: `left` and `right` tables.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "solution {}", self.name)?;
        writeln!(f, "order {}", self.n)?;
        for (label, table) in [("left", &self.left), ("right", &self.right)] {
            writeln!(f, "{label}")?;
            for row in table.chunks(self.n) {
                let line: Vec<String> = row.iter().map(u16::to_string).collect();
                writeln!(f, "{}", line.join(" "))?;
            }
        }
        writeln!(f, "end")
    }
}
