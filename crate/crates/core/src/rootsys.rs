//! Root systems in ambient orthonormal coordinates.
//!
//! Type A_{n} lives in Z^{n+1} with roots e_i - e_j, B/C/D/F4 in Z^n, G2 in the
//! sum-zero plane of Z^3. F4 has half-integral roots in the usual model, so
//! its coordinates are doubled; only ratios of inner products matter.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Result, SigError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G",
            Family::F4 => "F",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = SigError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G" | "G2" => Ok(Family::G2),
            "F" | "F4" => Ok(Family::F4),
            other => Err(SigError::InvalidType {
                family: other.to_string(),
                rank: 0,
            }),
        }
    }
}

/// A root as an integer vector in the ambient lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dot(&self, other: &Root) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Reflection of `self` in the hyperplane orthogonal to `r`.
    pub fn reflect_in(&self, r: &Root) -> Root {
        let num = 2 * self.dot(r);
        let den = r.dot(r);
        debug_assert_eq!(num % den, 0, "non-crystallographic pair");
        let c = num / den;
        Root(self.0.iter().zip(&r.0).map(|(s, x)| s - c * x).collect())
    }

    /// The type-A root e_j - e_k in Z^n (indices 1-based).
    pub fn e_diff(n: usize, j: usize, k: usize) -> Root {
        let mut v = vec![0; n];
        v[j - 1] += 1;
        v[k - 1] -= 1;
        Root(v)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    /// `None` for subsystems produced by [`RootSystem::subsystem`].
    pub family: Option<Family>,
    pub rank: usize,
    pub ambient_dim: usize,
    pub roots: Vec<Root>,
    pub positives: Vec<Root>,
    pub simples: Vec<Root>,
    root_set: HashSet<Root>,
    positive_set: HashSet<Root>,
}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn combo(n: usize, i: usize, a: i64, j: usize, b: i64) -> Root {
    let mut v = unit(n, i, a);
    v[j] += b;
    Root(v)
}

/// Positive roots for the standard choice of each family.
fn standard_positives(family: Family, rank: usize) -> (usize, Vec<Root>) {
    let mut pos = Vec::new();
    match family {
        Family::A => {
            let n = rank + 1;
            for i in 0..n {
                for j in i + 1..n {
                    pos.push(combo(n, i, 1, j, -1));
                }
            }
            (n, pos)
        }
        Family::B | Family::C | Family::D => {
            let n = rank;
            for i in 0..n {
                for j in i + 1..n {
                    pos.push(combo(n, i, 1, j, -1));
                    pos.push(combo(n, i, 1, j, 1));
                }
                match family {
                    Family::B => pos.push(Root(unit(n, i, 1))),
                    Family::C => pos.push(Root(unit(n, i, 2))),
                    _ => {}
                }
            }
            (n, pos)
        }
        Family::G2 => {
            // Simple roots e1-e2 (short) and -2e1+e2+e3 (long).
            let raw: [[i64; 3]; 6] = [
                [1, -1, 0],
                [-2, 1, 1],
                [-1, 0, 1],
                [0, -1, 1],
                [1, -2, 1],
                [-1, -1, 2],
            ];
            (3, raw.iter().map(|r| Root(r.to_vec())).collect())
        }
        Family::F4 => {
            // Doubled coordinates; positivity decided by a regular functional.
            let n = 4;
            let functional = [8, 3, 2, 1];
            let mut all = Vec::new();
            for i in 0..n {
                all.push(Root(unit(n, i, 2)));
                for j in i + 1..n {
                    for (a, b) in [(2, 2), (2, -2)] {
                        all.push(combo(n, i, a, j, b));
                    }
                }
            }
            for mask in 0..16u32 {
                all.push(Root(
                    (0..n)
                        .map(|k| if mask >> k & 1 == 1 { -1 } else { 1 })
                        .collect(),
                ));
            }
            let mut out = Vec::new();
            for r in all {
                let h: i64 = r.0.iter().zip(functional).map(|(x, f)| x * f).sum();
                out.push(if h > 0 { r } else { r.neg() });
            }
            out.sort();
            out.dedup();
            (n, out)
        }
    }
}

/// Positive roots that are not a sum of two positive roots.
fn indecomposables(positives: &[Root], positive_set: &HashSet<Root>) -> Vec<Root> {
    positives
        .iter()
        .filter(|r| {
            !positives.iter().any(|a| {
                let rest = Root(r.0.iter().zip(&a.0).map(|(x, y)| x - y).collect());
                positive_set.contains(&rest)
            })
        })
        .cloned()
        .collect()
}

impl RootSystem {
    /// The root system of the given family and rank with the standard
    /// positive roots (type A: e_i - e_j for i < j).
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        let valid = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::G2 => rank == 2,
            Family::F4 => rank == 4,
        };
        if !valid {
            return Err(SigError::InvalidType {
                family: family.to_string(),
                rank,
            });
        }
        let (ambient_dim, positives) = standard_positives(family, rank);
        let mut sys = Self::from_positives(Some(family), ambient_dim, positives);
        sys.rank = rank;
        Ok(sys)
    }

    fn from_positives(
        family: Option<Family>,
        ambient_dim: usize,
        mut positives: Vec<Root>,
    ) -> Self {
        positives.sort();
        let positive_set: HashSet<Root> = positives.iter().cloned().collect();
        let mut roots: Vec<Root> = positives
            .iter()
            .cloned()
            .chain(positives.iter().map(Root::neg))
            .collect();
        roots.sort();
        let root_set = roots.iter().cloned().collect();
        let simples = indecomposables(&positives, &positive_set);
        RootSystem {
            family,
            rank: simples.len(),
            ambient_dim,
            roots,
            positives,
            simples,
            root_set,
            positive_set,
        }
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.root_set.contains(r)
    }

    pub fn is_positive(&self, r: &Root) -> Result<bool> {
        if !self.contains(r) {
            return Err(SigError::NotARoot(r.0.clone()));
        }
        Ok(self.positive_set.contains(r))
    }

    /// Smallest subset of the roots containing `generators` that is closed
    /// under negation and under reflection in its own members. Positivity is
    /// inherited from `self`.
    pub fn subsystem(&self, generators: &[Root]) -> Result<RootSystem> {
        for g in generators {
            if !self.contains(g) {
                return Err(SigError::NotARoot(g.0.clone()));
            }
        }
        let mut set: BTreeSet<Root> = generators
            .iter()
            .flat_map(|g| [g.clone(), g.neg()])
            .collect();
        loop {
            let current: Vec<Root> = set.iter().cloned().collect();
            let mut grew = false;
            for r in &current {
                for s in &current {
                    let image = s.reflect_in(r);
                    if !self.contains(&image) {
                        return Err(SigError::NotASubsystem(format!(
                            "reflection of {s} in {r} leaves the ambient system"
                        )));
                    }
                    grew |= set.insert(image);
                }
            }
            if !grew {
                break;
            }
        }
        let positives = set
            .into_iter()
            .filter(|r| self.positive_set.contains(r))
            .collect();
        Ok(Self::from_positives(None, self.ambient_dim, positives))
    }

    /// The empty subsystem (trivial Weyl group) in the same ambient space.
    pub fn empty_like(&self) -> RootSystem {
        Self::from_positives(None, self.ambient_dim, Vec::new())
    }

    /// Number of roots the classical formula predicts for this family.
    pub fn classical_root_count(family: Family, rank: usize) -> usize {
        match family {
            Family::A => rank * (rank + 1),
            Family::B | Family::C => 2 * rank * rank,
            Family::D => 2 * rank * (rank - 1),
            Family::G2 => 12,
            Family::F4 => 48,
        }
    }
}
