//! Brute-force oracles shared by the integration tests. Everything here works
//! from the raw tables and the definitions, never from library algorithms.
#![allow(dead_code)]

use brace_forge::corpus;
use brace_forge::FiniteSkewBrace;

pub struct Tables {
    pub n: usize,
    pub add: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
}

impl Tables {
    pub fn of(b: &FiniteSkewBrace) -> Self {
        Tables { n: b.order(), add: b.add_rows(), circ: b.circ_rows() }
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.n).find(|&x| self.add[a][x] == 0).unwrap()
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.n).find(|&x| self.circ[a][x] == 0).unwrap()
    }

    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.add[self.neg(a)][self.circ[a][b]]
    }

    pub fn star(&self, a: usize, b: usize) -> usize {
        self.add[self.lambda(a, b)][self.neg(b)]
    }
}

pub fn is_group(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    let identity = (0..n).all(|a| t[0][a] == a && t[a][0] == a);
    let inverses = (0..n).all(|a| (0..n).any(|b| t[a][b] == 0 && t[b][a] == 0));
    let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])));
    identity && inverses && assoc
}

/// Naive check of every axiom over all triples.
pub fn is_skew_brace(add: &[Vec<usize>], circ: &[Vec<usize>]) -> bool {
    let n = add.len();
    if !is_group(add) || !is_group(circ) {
        return false;
    }
    let neg = |a: usize| (0..n).find(|&x| add[a][x] == 0).unwrap();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| circ[a][add[b][c]] == add[add[circ[a][b]][neg(a)]][circ[a][c]])
        })
    })
}

pub fn members(set: &[bool]) -> Vec<usize> {
    (0..set.len()).filter(|&i| set[i]).collect()
}

pub fn from_members(n: usize, m: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut set = vec![false; n];
    for x in m {
        set[x] = true;
    }
    set
}

/// The ideal definition verbatim: a normal subgroup of (A, ∘), stable under
/// every λ_a, with a + I = I + a.
pub fn is_ideal(t: &Tables, set: &[bool]) -> bool {
    let n = t.n;
    let m = members(set);
    if !set[0] || m.iter().any(|&x| m.iter().any(|&y| !set[t.circ[x][y]])) {
        return false;
    }
    for a in 0..n {
        let ai = t.inv(a);
        for &x in &m {
            if !set[t.circ[t.circ[a][x]][ai]] || !set[t.lambda(a, x)] {
                return false;
            }
        }
        let left = from_members(n, m.iter().map(|&x| t.add[a][x]));
        let right = from_members(n, m.iter().map(|&x| t.add[x][a]));
        if left != right {
            return false;
        }
    }
    true
}

/// Every ideal, by filtering all subsets containing 0.
pub fn all_ideals(t: &Tables) -> Vec<Vec<bool>> {
    let n = t.n;
    assert!(n <= 20);
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let set: Vec<bool> = (0..n).map(|i| i == 0 || mask >> (i - 1) & 1 == 1).collect();
        if is_ideal(t, &set) {
            out.push(set);
        }
    }
    out
}

/// Smallest subset containing `seed` and 0 closed under +, -, ∘ and inverse.
pub fn generated_subbrace(t: &Tables, seed: &[usize]) -> Vec<bool> {
    let mut set = from_members(t.n, seed.iter().copied().chain([0]));
    loop {
        let m = members(&set);
        let mut grew = false;
        for &x in &m {
            for y in [t.neg(x), t.inv(x)].into_iter().chain(m.iter().flat_map(|&y| [t.add[x][y], t.circ[x][y]])) {
                if !set[y] {
                    set[y] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

pub fn star_product(t: &Tables, b: &[bool], c: &[bool]) -> Vec<bool> {
    let stars: Vec<usize> = members(b).into_iter().flat_map(|x| members(c).into_iter().map(move |y| (x, y))).map(|(x, y)| t.star(x, y)).collect();
    generated_subbrace(t, &stars)
}

pub fn is_zero(set: &[bool]) -> bool {
    members(set) == [0]
}

/// Semiprime: no nonzero ideal I with I*I = 0.
pub fn is_semiprime(t: &Tables) -> bool {
    all_ideals(t).iter().filter(|i| !is_zero(i)).all(|i| !is_zero(&star_product(t, i, i)))
}

pub fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, p: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if p.len() == n {
            out.push(p.clone());
            return;
        }
        for x in 1..n {
            if !used[x] {
                used[x] = true;
                p.push(x);
                go(n, p, used, out);
                p.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; n];
    go(n, &mut vec![0], &mut used, &mut out);
    out
}

pub fn preserves(t: &[Vec<usize>], p: &[usize]) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| p[t[a][b]] == t[p[a]][p[b]]))
}

/// Every circle table making `add` a skew brace, by trying every map
/// a ↦ λ_a into Aut(A, +) and keeping those where a∘b = a + λ_a(b) is a brace.
pub fn brace_count(add: &[Vec<usize>]) -> usize {
    let n = add.len();
    let auts: Vec<Vec<usize>> = permutations_fixing_zero(n).into_iter().filter(|p| preserves(add, p)).collect();
    let mut choice = vec![0usize; n];
    let mut count = 0;
    loop {
        // λ_0 must be the identity, which sorts first.
        let circ: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| add[a][auts[choice[a]][b]]).collect()).collect();
        if is_group(&circ) && is_skew_brace(add, &circ) {
            count += 1;
        }
        let mut i = 1;
        while i < n {
            choice[i] += 1;
            if choice[i] < auts.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
    }
}

pub fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Holomorph braces of order ≤ 8 plus the named examples up to `max_named`.
pub fn corpus(max_named: usize) -> Vec<FiniteSkewBrace> {
    corpus::standard_corpus(corpus::DEFAULT_HOLOMORPH_LIMIT, max_named).unwrap()
}
