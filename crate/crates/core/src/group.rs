//! Helpers over flat `n × n` Cayley tables stored row-major as `u16`.

use fixedbitset::FixedBitSet;

#[inline]
pub(crate) fn at(table: &[u16], n: usize, a: usize, b: usize) -> usize {
    table[a * n + b] as usize
}

/// Closes `members` under right multiplication by `gens`, starting the
/// search from `frontier`. Newly added elements are appended to `added`.
pub(crate) fn close_right(
    table: &[u16],
    n: usize,
    members: &mut FixedBitSet,
    gens: &[usize],
    mut frontier: Vec<usize>,
    added: &mut Vec<usize>,
) {
    while let Some(y) = frontier.pop() {
        for &g in gens {
            let z = at(table, n, y, g);
            if !members.put(z) {
                frontier.push(z);
                added.push(z);
            }
        }
    }
}

/// Greedy generating set: ascending elements not yet reached by right
/// multiplication from `0`. For a group table the result generates the
/// group; for any loop the right-multiplication closure is everything.
pub(crate) fn generators(table: &[u16], n: usize) -> Vec<usize> {
    let mut members = FixedBitSet::with_capacity(n);
    members.insert(0);
    let mut gens = Vec::new();
    let mut scratch = Vec::new();
    for a in 1..n {
        if members.contains(a) {
            continue;
        }
        gens.push(a);
        let frontier: Vec<usize> = members.ones().collect();
        close_right(table, n, &mut members, &gens, frontier, &mut scratch);
    }
    gens
}

/// Subgroup of a group table generated by `seed`.
pub(crate) fn subgroup_closure(table: &[u16], n: usize, seed: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut members = FixedBitSet::with_capacity(n);
    members.insert(0);
    let mut gens = Vec::new();
    let mut scratch = Vec::new();
    for x in seed {
        if members.contains(x) {
            continue;
        }
        gens.push(x);
        let frontier: Vec<usize> = members.ones().collect();
        close_right(table, n, &mut members, &gens, frontier, &mut scratch);
    }
    members
}

/// Flattens a permutation-composition `outer ∘ inner`.
pub(crate) fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}
