//! Every skew brace structure on a fixed additive group.
//!
//! A skew brace with additive group `N` is a map `λ: N → Aut(N)` for which
//! `{(a, λ_a)}` is closed in the holomorph `N ⋊ Aut(N)`:
//! `λ_{a + λ_a(b)} = λ_a λ_b`. Such a subset is a regular subgroup and
//! `a ∘ b = a + λ_a(b)`. The search assigns `λ` element by element and
//! propagates every forced value.

use std::collections::HashMap;

use crate::actions::group_automorphisms;
use crate::error::{Error, Result};
use crate::group::{at, compose};
use crate::FiniteSkewBrace;

use super::GroupSpec;

pub const DEFAULT_HOLOMORPH_LIMIT: usize = 8;

pub fn holomorph_enumerate(spec: &GroupSpec, limit: usize) -> Result<Vec<FiniteSkewBrace>> {
    holomorph_enumerate_table(&spec.to_string(), &spec.table()?, limit)
}

/// All circle tables making a skew brace with the given additive table,
/// in search order.
pub fn holomorph_enumerate_table(name: &str, add: &[Vec<usize>], limit: usize) -> Result<Vec<FiniteSkewBrace>> {
    let n = add.len();
    if n > limit {
        return Err(Error::SizeCap { order: n, cap: limit });
    }
    let flat: Vec<u16> = add.iter().flatten().map(|&v| v as u16).collect();
    // Validates the group (and range) before searching.
    FiniteSkewBrace::from_flat(name, n, flat.clone(), flat.clone())?;
    let auts = group_automorphisms(&flat, n);
    let index: HashMap<&[usize], usize> = auts.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mul: Vec<Vec<usize>> = auts
        .iter()
        .map(|p| auts.iter().map(|q| index[compose(p, q).as_slice()]).collect())
        .collect();
    let search = Search { n, add: &flat, auts: &auts, mul: &mul };
    let mut lam = vec![None; n];
    lam[0] = Some(0);
    let mut found = Vec::new();
    search.run(&mut lam, &mut found);
    found
        .into_iter()
        .enumerate()
        .map(|(k, lam)| {
            let mut circ = vec![0u16; n * n];
            for a in 0..n {
                for b in 0..n {
                    circ[a * n + b] = at(&flat, n, a, auts[lam[a]][b]) as u16;
                }
            }
            FiniteSkewBrace::from_flat(format!("{name}#{k}"), n, flat.clone(), circ)
        })
        .collect()
}

struct Search<'a> {
    n: usize,
    add: &'a [u16],
    auts: &'a [Vec<usize>],
    mul: &'a [Vec<usize>],
}

impl Search<'_> {
    fn run(&self, lam: &mut Vec<Option<usize>>, found: &mut Vec<Vec<usize>>) {
        let Some(a) = lam.iter().position(Option::is_none) else {
            found.push(lam.iter().map(|x| x.unwrap()).collect());
            return;
        };
        for phi in 0..self.auts.len() {
            let saved = lam.clone();
            lam[a] = Some(phi);
            if self.propagate(lam, a) {
                self.run(lam, found);
            }
            *lam = saved;
        }
    }

    /// Closes the assigned set under the holomorph product; false on a
    /// conflicting forced value.
    fn propagate(&self, lam: &mut [Option<usize>], start: usize) -> bool {
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            let lx = lam[x].unwrap();
            for y in 0..self.n {
                let Some(ly) = lam[y] else { continue };
                for (p, lp, q, lq) in [(x, lx, y, ly), (y, ly, x, lx)] {
                    let c = at(self.add, self.n, p, self.auts[lp][q]);
                    let forced = self.mul[lp][lq];
                    match lam[c] {
                        None => {
                            lam[c] = Some(forced);
                            queue.push(c);
                        }
                        Some(v) if v != forced => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}
