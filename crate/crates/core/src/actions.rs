//! Automorphisms of skew braces and actions `(H, ∘) → Aut(G)`.

use itertools::Itertools;

use crate::group::{at, compose};
use crate::FiniteSkewBrace;

/// Largest order searched by brute force over all identity-fixing
/// permutations; larger braces use generator-image backtracking.
pub const BRUTE_FORCE_AUT_MAX: usize = 8;

/// Skew brace automorphisms of `g`, sorted, identity first.
pub fn brace_automorphisms(g: &FiniteSkewBrace) -> Vec<Vec<usize>> {
    let tables = [g.add_flat(), g.circ_flat()];
    if g.order() <= BRUTE_FORCE_AUT_MAX {
        automorphisms_brute(&tables, g.order())
    } else {
        automorphisms_backtrack(&tables, g.order(), g.add_generators())
    }
}

/// Automorphisms of a group given by a flat table.
pub(crate) fn group_automorphisms(table: &[u16], n: usize) -> Vec<Vec<usize>> {
    let gens = crate::group::generators(table, n);
    automorphisms_backtrack(&[table], n, &gens)
}

/// Every permutation fixing 0 that preserves all `tables`.
pub fn automorphisms_brute(tables: &[&[u16]], n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for tail in (1..n).permutations(n - 1) {
        let mut p = Vec::with_capacity(n);
        p.push(0);
        p.extend(tail);
        if preserves(tables, n, &p) {
            out.push(p);
        }
    }
    out
}

fn preserves(tables: &[&[u16]], n: usize, p: &[usize]) -> bool {
    tables
        .iter()
        .all(|t| (0..n).all(|a| (0..n).all(|b| p[at(t, n, a, b)] == at(t, n, p[a], p[b]))))
}

/// Automorphisms preserving all `tables`, where `gens` generate the group
/// of `tables[0]`. Each map is determined by the images of `gens`.
pub fn automorphisms_backtrack(tables: &[&[u16]], n: usize, gens: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    backtrack(tables, n, gens, &mut images, &mut out);
    out.sort();
    out
}

fn backtrack(tables: &[&[u16]], n: usize, gens: &[usize], images: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if images.len() == gens.len() {
        if let Some(p) = extend_images(tables[0], n, gens, images) {
            if preserves(tables, n, &p) {
                out.push(p);
            }
        }
        return;
    }
    for x in 1..n {
        if images.contains(&x) {
            continue;
        }
        images.push(x);
        backtrack(tables, n, gens, images, out);
        images.pop();
    }
}

/// Extends `gens ↦ images` to a bijective endomorphism of the group, if
/// the assignment is consistent.
fn extend_images(table: &[u16], n: usize, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    map[0] = 0;
    hit[0] = true;
    let mut order = vec![0];
    let mut k = 0;
    while k < order.len() {
        let x = order[k];
        k += 1;
        for (&g, &img) in gens.iter().zip(images) {
            let y = at(table, n, x, g);
            let fy = at(table, n, map[x], img);
            if map[y] == usize::MAX {
                if std::mem::replace(&mut hit[fy], true) {
                    return None;
                }
                map[y] = fy;
                order.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    (order.len() == n).then_some(map)
}

/// Homomorphisms from `(H, ∘)` into the group of permutations `auts`
/// (closed under composition), up to `budget` of them, in lexicographic
/// order of generator images.
pub fn homomorphisms(h: &FiniteSkewBrace, auts: &[Vec<usize>], budget: usize) -> Vec<Vec<Vec<usize>>> {
    let nh = h.order();
    let gens = h.circ_generators();
    let mut out = Vec::new();
    if auts.is_empty() {
        return out;
    }
    let identity: Vec<usize> = (0..auts[0].len()).collect();
    if gens.is_empty() {
        return if budget > 0 { vec![vec![identity]] } else { out };
    }
    for choice in gens.iter().map(|_| 0..auts.len()).multi_cartesian_product() {
        if out.len() >= budget {
            break;
        }
        let mut phi: Vec<Option<Vec<usize>>> = vec![None; nh];
        phi[0] = Some(identity.clone());
        let mut queue = vec![0];
        let mut ok = true;
        let mut k = 0;
        'bfs: while k < queue.len() {
            let x = queue[k];
            k += 1;
            for (&g, &c) in gens.iter().zip(&choice) {
                let y = h.circ(x, g);
                let img = compose(phi[x].as_ref().unwrap(), &auts[c]);
                match &phi[y] {
                    None => {
                        phi[y] = Some(img);
                        queue.push(y);
                    }
                    Some(existing) if *existing != img => {
                        ok = false;
                        break 'bfs;
                    }
                    Some(_) => {}
                }
            }
        }
        if ok {
            out.push(phi.into_iter().map(Option::unwrap).collect());
        }
    }
    out
}
