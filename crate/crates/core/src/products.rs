//! Semidirect and wreath products.
//!
//! Pairs `(g, h)` of `G ⋊ H` are encoded as `g·|H| + h`. The base `W` of
//! the wreath product holds all functions `H → G`; a function `f` is encoded
//! in mixed radix with digit `i` equal to `f(h_i)`, i.e.
//! `f ↦ Σ f(h_i)·|G|^i`.

use crate::error::{Error, Result};
use crate::ideals::is_ideal;
use crate::limits;
use crate::{FiniteSkewBrace, SubSet};

/// A homomorphism `(H, ∘) → Aut(G)` given by one permutation of `G` per
/// element of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaAction {
    g_order: usize,
    perms: Vec<Vec<usize>>,
}

impl SigmaAction {
    pub fn trivial(g: &FiniteSkewBrace, h: &FiniteSkewBrace) -> Self {
        SigmaAction { g_order: g.order(), perms: vec![(0..g.order()).collect(); h.order()] }
    }

    /// `σ(h)(x)`.
    #[inline]
    pub fn apply(&self, h: usize, x: usize) -> usize {
        self.perms[h][x]
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn h_order(&self) -> usize {
        self.perms.len()
    }

    pub fn g_order(&self) -> usize {
        self.g_order
    }

    pub fn is_trivial(&self) -> bool {
        self.perms.iter().all(|p| p.iter().enumerate().all(|(i, &x)| i == x))
    }
}

/// Checks that `perms` is a homomorphism from `(H, ∘)` into the skew brace
/// automorphisms of `G`.
pub fn validate_sigma(g: &FiniteSkewBrace, h: &FiniteSkewBrace, perms: Vec<Vec<usize>>) -> Result<SigmaAction> {
    let (ng, nh) = (g.order(), h.order());
    if perms.len() != nh {
        return Err(Error::input(format!("expected {nh} permutations, got {}", perms.len())));
    }
    for (k, p) in perms.iter().enumerate() {
        if p.len() != ng {
            return Err(Error::input(format!("permutation {k} has length {}, expected {ng}", p.len())));
        }
        let mut seen = vec![false; ng];
        for &x in p {
            if x >= ng || std::mem::replace(&mut seen[x], true) {
                return Err(Error::input(format!("row {k} is not a permutation of 0..{ng}")));
            }
        }
    }
    let fail = |h: usize, rule: &str, w: (usize, usize)| {
        Err(Error::precondition(format!("sigma(h={h}): {rule} at ({},{})", w.0, w.1)))
    };
    for (k, p) in perms.iter().enumerate() {
        if p[0] != 0 {
            return fail(k, "does not fix 0", (0, 0));
        }
        for a in 0..ng {
            for b in 0..ng {
                if p[g.add(a, b)] != g.add(p[a], p[b]) {
                    return fail(k, "does not preserve +", (a, b));
                }
                if p[g.circ(a, b)] != g.circ(p[a], p[b]) {
                    return fail(k, "does not preserve ∘", (a, b));
                }
            }
        }
    }
    if let Some(x) = (0..ng).find(|&x| perms[0][x] != x) {
        return fail(0, "sigma(0) is not the identity", (x, 0));
    }
    for h1 in 0..nh {
        for h2 in 0..nh {
            let prod = &perms[h.circ(h1, h2)];
            if let Some(x) = (0..ng).find(|&x| prod[x] != perms[h1][perms[h2][x]]) {
                return fail(h.circ(h1, h2), "not a homomorphism from (H,∘)", (h1, h2)).map_err(|e| match e {
                    Error::Precondition(m) => Error::Precondition(format!("{m}, element {x}")),
                    other => other,
                });
            }
        }
    }
    Ok(SigmaAction { g_order: ng, perms })
}

/// `G ⋊ H` with `(g1,h1) + (g2,h2) = (g1+g2, h1+h2)` and
/// `(g1,h1) ∘ (g2,h2) = (g1 ∘ σ(h1)(g2), h1 ∘ h2)`.
pub fn semidirect(g: &FiniteSkewBrace, h: &FiniteSkewBrace, sigma: &SigmaAction) -> Result<FiniteSkewBrace> {
    let (ng, nh) = (g.order(), h.order());
    if sigma.g_order() != ng || sigma.h_order() != nh {
        return Err(Error::input("sigma does not match the factors"));
    }
    let n = ng.checked_mul(nh).ok_or(Error::SizeCap { order: usize::MAX, cap: limits::max_order() })?;
    limits::check_order(n)?;
    let mut add = vec![0u16; n * n];
    let mut circ = vec![0u16; n * n];
    for g1 in 0..ng {
        for h1 in 0..nh {
            let row = (g1 * nh + h1) * n;
            for g2 in 0..ng {
                let twisted = g.circ(g1, sigma.apply(h1, g2));
                let sum = g.add(g1, g2);
                for h2 in 0..nh {
                    add[row + g2 * nh + h2] = (sum * nh + h.add(h1, h2)) as u16;
                    circ[row + g2 * nh + h2] = (twisted * nh + h.circ(h1, h2)) as u16;
                }
            }
        }
    }
    let name = if sigma.is_trivial() {
        format!("{}x{}", g.name(), h.name())
    } else {
        format!("{}:{}", g.name(), h.name())
    };
    FiniteSkewBrace::from_flat(name, n, add, circ)
}

/// `{(g, 0)}`, the copy of `G` inside `G ⋊ H`.
pub fn g_slice(g: &FiniteSkewBrace, h: &FiniteSkewBrace) -> SubSet {
    let nh = h.order();
    SubSet::from_indices(g.order() * nh, (0..g.order()).map(|x| x * nh)).expect("in range")
}

/// `{(0, h)}`, the copy of `H` inside `G ⋊ H`.
pub fn h_slice(g: &FiniteSkewBrace, h: &FiniteSkewBrace) -> SubSet {
    SubSet::from_indices(g.order() * h.order(), 0..h.order()).expect("in range")
}

/// Codec and shift action for the base `W` of `G ≀ H`.
#[derive(Clone, Debug)]
pub struct WreathContext {
    g_order: usize,
    h_order: usize,
    powers: Vec<usize>,
    base_order: usize,
    shift: Vec<Vec<usize>>,
}

impl WreathContext {
    pub fn g_order(&self) -> usize {
        self.g_order
    }

    pub fn h_order(&self) -> usize {
        self.h_order
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// `f(h_i)` for the function encoded by `w`.
    #[inline]
    pub fn digit(&self, w: usize, i: usize) -> usize {
        (w / self.powers[i]) % self.g_order
    }

    pub fn decode(&self, w: usize) -> Vec<usize> {
        (0..self.h_order).map(|i| self.digit(w, i)).collect()
    }

    pub fn encode(&self, digits: &[usize]) -> Result<usize> {
        if digits.len() != self.h_order || digits.iter().any(|&d| d >= self.g_order) {
            return Err(Error::input(format!("{digits:?} is not a function H -> G")));
        }
        Ok(digits.iter().zip(&self.powers).map(|(d, p)| d * p).sum())
    }

    /// The permutation of `W` by which `h` acts: `(h·f)(x) = f(x ∘ h)`.
    pub fn shift(&self, h: usize) -> &[usize] {
        &self.shift[h]
    }

    pub fn shift_perms(&self) -> &[Vec<usize>] {
        &self.shift
    }
}

/// `W = G^H` with pointwise `+` and `∘`.
pub fn wreath_base(g: &FiniteSkewBrace, h: &FiniteSkewBrace) -> Result<(FiniteSkewBrace, WreathContext)> {
    let (ng, m) = (g.order(), h.order());
    let too_big = || Error::SizeCap { order: usize::MAX, cap: limits::max_order() };
    let base = u32::try_from(m).ok().and_then(|e| ng.checked_pow(e)).ok_or_else(too_big)?;
    limits::check_order(base)?;
    let mut powers = Vec::with_capacity(m);
    let mut p = 1;
    for _ in 0..m {
        powers.push(p);
        p *= ng;
    }
    let digits: Vec<usize> = {
        let powers = &powers;
        (0..base).flat_map(|w| (0..m).map(move |i| (w / powers[i]) % ng)).collect()
    };
    let mut add = vec![0u16; base * base];
    let mut circ = vec![0u16; base * base];
    for w1 in 0..base {
        let d1 = &digits[w1 * m..(w1 + 1) * m];
        for w2 in 0..base {
            let d2 = &digits[w2 * m..(w2 + 1) * m];
            let (mut s, mut c) = (0, 0);
            for i in 0..m {
                s += g.add(d1[i], d2[i]) * powers[i];
                c += g.circ(d1[i], d2[i]) * powers[i];
            }
            add[w1 * base + w2] = s as u16;
            circ[w1 * base + w2] = c as u16;
        }
    }
    let shift = (0..m)
        .map(|hh| {
            (0..base)
                .map(|w| (0..m).map(|i| digits[w * m + h.circ(i, hh)] * powers[i]).sum())
                .collect()
        })
        .collect();
    let w = FiniteSkewBrace::from_flat(format!("{}^{}", g.name(), h.name()), base, add, circ)?;
    let ctx = WreathContext { g_order: ng, h_order: m, powers, base_order: base, shift };
    Ok((w, ctx))
}

/// `G ≀ H = W ⋊ H` under the shift action.
pub fn wreath(g: &FiniteSkewBrace, h: &FiniteSkewBrace) -> Result<FiniteSkewBrace> {
    let (w, ctx) = wreath_base(g, h)?;
    let total = ctx.base_order().saturating_mul(h.order());
    limits::check_order(total)?;
    let sigma = validate_sigma(&w, h, ctx.shift.clone())?;
    Ok(semidirect(&w, h, &sigma)?.with_name(format!("{}wr{}", g.name(), h.name())))
}

/// The function sending `h` to `g` and everything else to `0`.
pub fn delta_function(ctx: &WreathContext, h: usize, g: usize) -> Result<usize> {
    if h >= ctx.h_order || g >= ctx.g_order {
        return Err(Error::input(format!("({h}, {g}) out of range")));
    }
    Ok(g * ctx.powers[h])
}

/// `ρ_h(S) = { f(h) : f ∈ S }`.
pub fn rho_projection(ctx: &WreathContext, s: &SubSet, h: usize) -> Result<SubSet> {
    if s.order() != ctx.base_order || h >= ctx.h_order {
        return Err(Error::input("subset or h does not match the wreath context"));
    }
    SubSet::from_indices(ctx.g_order, s.iter().map(|f| ctx.digit(f, h)))
}

/// `{ f : f(h) ∈ I for every h }` for an ideal `I` of `G`.
pub fn pointwise_lift(ctx: &WreathContext, g: &FiniteSkewBrace, ideal: &SubSet) -> Result<SubSet> {
    if g.order() != ctx.g_order {
        return Err(Error::input("brace does not match the wreath context"));
    }
    if !is_ideal(g, ideal)?.holds() {
        return Err(Error::precondition(format!("{ideal} is not an ideal of {}", g.name())));
    }
    SubSet::from_indices(
        ctx.base_order,
        (0..ctx.base_order).filter(|&f| (0..ctx.h_order).all(|i| ideal.contains(ctx.digit(f, i)))),
    )
}
