use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::brace::validate::check_flat;
use crate::error::{Error, Result};

/// Largest degree accepted for symmetric and alternating groups.
pub const MAX_PERMUTATION_DEGREE: usize = 5;

/// A finite group, by name or by Cayley table.
///
/// Names: `C<n>` cyclic, `D<n>` dihedral of order `2n`, `S<n>` and `A<n>`
/// for `n ≤ 5`, `Q8`, and direct products joined by `x` (`C2xC2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion,
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Table(Vec<Vec<usize>>),
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }

    /// Cayley table with identity at index 0.
    pub fn table(&self) -> Result<Vec<Vec<usize>>> {
        let t = match self {
            GroupSpec::Cyclic(n) => {
                positive(*n)?;
                (0..*n).map(|a| (0..*n).map(|b| (a + b) % n).collect()).collect()
            }
            GroupSpec::Dihedral(n) => dihedral(positive(*n)?),
            GroupSpec::Symmetric(n) => permutation_group(*n, false)?,
            GroupSpec::Alternating(n) => permutation_group(*n, true)?,
            GroupSpec::Quaternion => quaternion(),
            GroupSpec::Product(a, b) => direct_product(&a.table()?, &b.table()?),
            GroupSpec::Table(t) => t.clone(),
        };
        check_group_table(&t)?;
        Ok(t)
    }
}

fn positive(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::input("group order must be positive"));
    }
    Ok(n)
}

/// Elements `r^i s^j` at index `j·n + i`.
fn dihedral(n: usize) -> Vec<Vec<usize>> {
    let elem = |x: usize| (x % n, x / n);
    (0..2 * n)
        .map(|x| {
            (0..2 * n)
                .map(|y| {
                    let ((i, a), (k, b)) = (elem(x), elem(y));
                    let rot = if a == 0 { (i + k) % n } else { (i + n - k) % n };
                    ((a + b) % 2) * n + rot
                })
                .collect()
        })
        .collect()
}

/// Permutations of `0..n` in lexicographic order, composed as `(pq)(x) = p(q(x))`.
fn permutation_group(n: usize, even_only: bool) -> Result<Vec<Vec<usize>>> {
    if n == 0 || n > MAX_PERMUTATION_DEGREE {
        return Err(Error::input(format!("permutation degree must be in 1..={MAX_PERMUTATION_DEGREE}")));
    }
    let perms: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .filter(|p| !even_only || inversions(p).is_multiple_of(2))
        .collect();
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
    Ok(perms
        .iter()
        .map(|p| perms.iter().map(|q| index(&q.iter().map(|&x| p[x]).collect())).collect())
        .collect())
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

/// `1, -1, i, -i, j, -j, k, -k` at indices 0..8.
fn quaternion() -> Vec<Vec<usize>> {
    // unit products: (unit, sign) for units 1,i,j,k
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (u, neg) = UNIT[x / 2][y / 2];
                    let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                    2 * u + sign as usize
                })
                .collect()
        })
        .collect()
}

/// `(a, b) ↦ a·|B| + b`.
fn direct_product(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (na, nb) = (a.len(), b.len());
    (0..na * nb)
        .map(|x| (0..na * nb).map(|y| a[x / nb][y / nb] * nb + b[x % nb][y % nb]).collect())
        .collect()
}

fn check_group_table(t: &[Vec<usize>]) -> Result<()> {
    let n = t.len();
    if n == 0 || t.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
        return Err(Error::input("group table must be square with entries in range"));
    }
    let flat: Vec<u16> = t.iter().flatten().map(|&v| v as u16).collect();
    let report = check_flat(&flat, &flat, n);
    if !report.ok() {
        return Err(Error::Axioms(Box::new(report)));
    }
    Ok(())
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once(['x', '×']) {
            return Ok(GroupSpec::product(a.parse()?, b.parse()?));
        }
        let bad = || Error::input(format!("unknown group {s:?}; expected C<n>, D<n>, S<n>, A<n>, Q8 or products"));
        if s == "Q8" {
            return Ok(GroupSpec::Quaternion);
        }
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        match family {
            'C' => Ok(GroupSpec::Cyclic(n)),
            'D' => Ok(GroupSpec::Dihedral(n)),
            'S' => Ok(GroupSpec::Symmetric(n)),
            'A' => Ok(GroupSpec::Alternating(n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Quaternion => f.write_str("Q8"),
            GroupSpec::Product(a, b) => write!(f, "{a}x{b}"),
            GroupSpec::Table(t) => write!(f, "table{}", t.len()),
        }
    }
}

/// One representative per isomorphism type of group of each order up to 8.
pub fn small_groups(max_order: usize) -> Vec<GroupSpec> {
    let c = GroupSpec::Cyclic;
    let all = [
        c(1),
        c(2),
        c(3),
        c(4),
        GroupSpec::product(c(2), c(2)),
        c(5),
        c(6),
        GroupSpec::Symmetric(3),
        c(7),
        c(8),
        GroupSpec::product(c(4), c(2)),
        GroupSpec::product(GroupSpec::product(c(2), c(2)), c(2)),
        GroupSpec::Dihedral(4),
        GroupSpec::Quaternion,
    ];
    all.into_iter()
        .filter(|g| g.table().map(|t| t.len() <= max_order).unwrap_or(false))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (spec, n) in [("C5", 5), ("D4", 8), ("S3", 6), ("A4", 12), ("A5", 60), ("Q8", 8), ("C2xC2xC2", 8)] {
            assert_eq!(spec.parse::<GroupSpec>().unwrap().table().unwrap().len(), n, "{spec}");
        }
        assert!("S6".parse::<GroupSpec>().unwrap().table().is_err());
        assert!("Z4".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let t = quaternion();
        assert_eq!((1..8).filter(|&x| t[x][x] == 0).count(), 1);
    }

    #[test]
    fn small_groups_by_order() {
        assert_eq!(small_groups(8).len(), 14);
        assert_eq!(small_groups(4).len(), 5);
    }
}
