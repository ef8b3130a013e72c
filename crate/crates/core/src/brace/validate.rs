//! Axiom checks for a pair of Cayley tables.
//!
//! Small carriers are checked over every triple. Above
//! [`EXHAUSTIVE_CHECK_MAX`] associativity and the brace relation are
//! checked with the middle (resp. last) argument restricted to a generating
//! set: the elements satisfying either identity for all other arguments
//! form a closed subset, so generators suffice. Any failure found that way
//! is re-located by a lexicographic scan so witnesses are the same as the
//! exhaustive path would report.

use std::fmt;

use crate::error::Result;
use crate::group::{self, at};

use super::{flatten, FiniteSkewBrace};

/// Largest order checked over all `n³` triples.
pub const EXHAUSTIVE_CHECK_MAX: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    AddIdentity,
    AddInverse,
    AddAssociativity,
    CircIdentity,
    CircInverse,
    CircAssociativity,
    /// `a ∘ (b + c) = a ∘ b - a + a ∘ c`
    BraceRelation,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::AddIdentity => "add.identity",
            Rule::AddInverse => "add.inverse",
            Rule::AddAssociativity => "add.associativity",
            Rule::CircIdentity => "circ.identity",
            Rule::CircInverse => "circ.inverse",
            Rule::CircAssociativity => "circ.associativity",
            Rule::BraceRelation => "brace.relation",
        }
    }
}

/// One violated rule with its lexicographically smallest witness. Unused
/// witness slots are 0 (identity and inverse rules use only the first).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub witness: [usize; 3],
}

impl Violation {
    /// Re-evaluates the rule at the witness against raw tables; true when
    /// the violation is reproduced.
    pub fn replay(&self, add: &[Vec<usize>], circ: &[Vec<usize>]) -> bool {
        let [a, b, c] = self.witness;
        let n = add.len();
        let group_rule = |t: &[Vec<usize>], kind: u8| match kind {
            0 => t[0][a] != a || t[a][0] != a,
            1 => !(0..n).any(|x| t[a][x] == 0 && t[x][a] == 0),
            _ => t[t[a][b]][c] != t[a][t[b][c]],
        };
        match self.rule {
            Rule::AddIdentity => group_rule(add, 0),
            Rule::AddInverse => group_rule(add, 1),
            Rule::AddAssociativity => group_rule(add, 2),
            Rule::CircIdentity => group_rule(circ, 0),
            Rule::CircInverse => group_rule(circ, 1),
            Rule::CircAssociativity => group_rule(circ, 2),
            Rule::BraceRelation => {
                let Some(neg_a) = (0..n).find(|&x| add[a][x] == 0) else {
                    return false;
                };
                circ[a][add[b][c]] != add[add[circ[a][b]][neg_a]][circ[a][c]]
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.witness;
        match self.rule {
            Rule::AddIdentity | Rule::CircIdentity | Rule::AddInverse | Rule::CircInverse => {
                write!(f, "{} at {a}", self.rule.name())
            }
            _ => write!(f, "{} at ({a},{b},{c})", self.rule.name()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return f.write_str("ok");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks two nested tables. Malformed input is an `Err`; axiom failures
/// are reported in the returned report alongside `None`.
pub fn validate(
    name: &str,
    add: &[Vec<usize>],
    circ: &[Vec<usize>],
) -> Result<(ValidationReport, Option<FiniteSkewBrace>)> {
    let n = add.len();
    let add = flatten(add, n, "add")?;
    let circ = flatten(circ, n, "circ")?;
    let report = check_flat(&add, &circ, n);
    if !report.ok() {
        return Ok((report, None));
    }
    let brace = FiniteSkewBrace::from_flat(name, n, add, circ)?;
    Ok((report, Some(brace)))
}

pub(crate) fn check_flat(add: &[u16], circ: &[u16], n: usize) -> ValidationReport {
    let exhaustive = n <= EXHAUSTIVE_CHECK_MAX;
    let mut violations = Vec::new();
    let add_ok = check_group(
        add,
        n,
        exhaustive,
        [Rule::AddIdentity, Rule::AddInverse, Rule::AddAssociativity],
        &mut violations,
    );
    check_group(
        circ,
        n,
        exhaustive,
        [Rule::CircIdentity, Rule::CircInverse, Rule::CircAssociativity],
        &mut violations,
    );
    // The relation needs -a; it is only meaningful once + is a group.
    if add_ok {
        let neg: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| at(add, n, a, b) == 0).unwrap()).collect();
        let holds = |a: usize, b: usize, c: usize| {
            at(circ, n, a, at(add, n, b, c)) == at(add, n, at(add, n, at(circ, n, a, b), neg[a]), at(circ, n, a, c))
        };
        let circ_identity = !violations.iter().any(|v| v.rule == Rule::CircIdentity);
        let suspect = if exhaustive {
            true
        } else if !circ_identity {
            false
        } else {
            let gens = group::generators(add, n);
            !(0..n).all(|a| (0..n).all(|b| gens.iter().all(|&c| holds(a, b, c))))
        };
        if suspect {
            if let Some(w) = first_triple(n, holds) {
                violations.push(Violation { rule: Rule::BraceRelation, witness: w });
            }
        }
    }
    ValidationReport { violations }
}

/// Pushes violations of one group's rules; returns whether it is a group.
fn check_group(table: &[u16], n: usize, exhaustive: bool, rules: [Rule; 3], out: &mut Vec<Violation>) -> bool {
    let start = out.len();
    let identity_ok = match (0..n).find(|&a| at(table, n, 0, a) != a || at(table, n, a, 0) != a) {
        Some(a) => {
            out.push(Violation { rule: rules[0], witness: [a, 0, 0] });
            false
        }
        None => true,
    };
    if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| at(table, n, a, b) == 0 && at(table, n, b, a) == 0)) {
        out.push(Violation { rule: rules[1], witness: [a, 0, 0] });
    }
    let assoc = |a: usize, b: usize, c: usize| at(table, n, at(table, n, a, b), c) == at(table, n, a, at(table, n, b, c));
    let suspect = if exhaustive {
        true
    } else if identity_ok {
        let gens = group::generators(table, n);
        !gens.iter().all(|&b| (0..n).all(|a| (0..n).all(|c| assoc(a, b, c))))
    } else {
        // Too large to scan and already known not to be a group.
        false
    };
    if suspect {
        if let Some(w) = first_triple(n, assoc) {
            out.push(Violation { rule: rules[2], witness: w });
        }
    }
    out.len() == start
}

fn first_triple(n: usize, holds: impl Fn(usize, usize, usize) -> bool) -> Option<[usize; 3]> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !holds(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::tests::{r4, t2};

    fn z(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn trivial_z2_is_ok() {
        let (report, brace) = validate("T2", &z(2), &z(2)).unwrap();
        assert!(report.ok());
        assert_eq!(brace.unwrap(), t2());
    }

    #[test]
    fn r4_revalidates() {
        let b = r4();
        let (report, _) = validate("R4", &b.add_rows(), &b.circ_rows()).unwrap();
        assert!(report.ok());
    }

    #[test]
    fn corrupted_circ_has_no_inverse_for_one() {
        let mut circ = z(2);
        circ[1][1] = 1;
        let (report, brace) = validate("bad", &z(2), &circ).unwrap();
        assert!(brace.is_none());
        assert!(report.has(Rule::CircInverse));
        let v = report.violations.iter().find(|v| v.rule == Rule::CircInverse).unwrap();
        assert_eq!(v.witness[0], 1);
        for v in &report.violations {
            assert!(v.replay(&z(2), &circ), "{v} does not replay");
        }
    }

    #[test]
    fn nonzero_identity_is_rejected() {
        // Z2 with identity at index 1.
        let add = vec![vec![1, 0], vec![0, 1]];
        let (report, _) = validate("x", &add, &add).unwrap();
        assert!(report.has(Rule::AddIdentity));
        assert!(report.has(Rule::CircIdentity));
    }

    #[test]
    fn brace_relation_failure_is_witnessed() {
        // + = Z4 and ∘ = Z4 relabelled by the transposition (1 2); both are
        // groups but λ_2 is not additive.
        let phi = [0, 2, 1, 3];
        let circ: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| phi[(phi[a] + phi[b]) % 4]).collect()).collect();
        let (report, _) = validate("x", &z(4), &circ).unwrap();
        assert_eq!(report.violations.len(), 1);
        let v = report.violations[0];
        assert_eq!(v.rule, Rule::BraceRelation);
        assert!(v.replay(&z(4), &circ));
    }

    #[test]
    fn reduced_path_agrees_on_large_cyclic() {
        let n = EXHAUSTIVE_CHECK_MAX + 4;
        let table: Vec<u16> = (0..n * n).map(|k| ((k / n + k % n) % n) as u16).collect();
        assert!(check_flat(&table, &table, n).ok());
        let mut broken = table.clone();
        // Swap two entries in one row: still has identity, breaks associativity.
        broken.swap(3 * n + 5, 3 * n + 6);
        let report = check_flat(&table, &broken, n);
        assert!(report.has(Rule::CircAssociativity));
    }
}
