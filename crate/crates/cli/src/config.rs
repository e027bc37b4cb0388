//! Run configuration documents (JSON).

use serde::Deserialize;
use serde_json::Number;
use sigcalc_core::biquot::{BiquotientSpec, EmbeddingFactor, EmbeddingSpec, TildeRow};
use sigcalc_core::liealg::{unit_from_tag, GroupElement};
use sigcalc_core::rootsys::{Family, Root, RootSystem};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Homogeneous,
    Biquotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Emit {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    EngineEquivalence,
    EulerCount,
    OrientationReversal,
    ScalingInvariance,
}

impl Check {
    pub const ALL: [Check; 4] = [
        Check::EngineEquivalence,
        Check::EulerCount,
        Check::OrientationReversal,
        Check::ScalingInvariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::EngineEquivalence => "engine-equivalence",
            Check::EulerCount => "euler-count",
            Check::OrientationReversal => "orientation-reversal",
            Check::ScalingInvariance => "scaling-invariance",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupConfig {
    pub family: String,
    pub rank: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusWeights {
    pub p: Vec<Number>,
    pub q: Vec<Number>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorConfig {
    /// `k` for an `SU(k)` factor.
    #[serde(default)]
    pub su: Option<usize>,
    #[serde(default)]
    pub torus: Option<TorusWeights>,
    #[serde(default)]
    pub left: Vec<Vec<usize>>,
    #[serde(default)]
    pub right: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupConfig {
    /// Generating roots of `Δ_H` (homogeneous mode).
    #[serde(default)]
    pub roots: Option<Vec<Vec<Number>>>,
    /// Factors of `H ⊂ G × G` (biquotient mode).
    #[serde(default)]
    pub factors: Option<Vec<FactorConfig>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusRow {
    pub left: Vec<Number>,
    pub right: Vec<Number>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionConfig {
    pub torus: Vec<TorusRow>,
    pub circle: Vec<Number>,
    #[serde(default)]
    pub flipped_torus: bool,
}

/// `[row, col, tag]` with 1-based indices and `tag ∈ {"1","-1","i","-i"}`.
pub type Entry = (usize, usize, String);

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub mode: Mode,
    pub group: GroupConfig,
    pub subgroup: SubgroupConfig,
    #[serde(default)]
    pub action: Option<ActionConfig>,
    #[serde(default)]
    pub fixed_points: Option<Vec<Vec<Entry>>>,
    #[serde(default)]
    pub checks: Vec<Check>,
    #[serde(default)]
    pub emit: Emit,
}

/// Parses and validates the shape of a configuration document.
pub fn parse_config(document: &str) -> Result<RunConfig, CliError> {
    let de = &mut serde_json::Deserializer::from_str(document);
    let config: RunConfig = serde_path_to_error::deserialize(de).map_err(|e| CliError::Schema {
        path: e.path().to_string(),
        reason: e.inner().to_string(),
    })?;
    config.validate()?;
    Ok(config)
}

fn integers(values: &[Number], path: &str) -> Result<Vec<i64>, CliError> {
    values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_i64().ok_or_else(|| CliError::Value {
                path: format!("{path}[{i}]"),
                reason: format!("{v} is not an integer"),
            })
        })
        .collect()
}

fn schema(path: &str, reason: &str) -> CliError {
    CliError::Schema {
        path: path.into(),
        reason: reason.into(),
    }
}

impl RunConfig {
    /// Mode-dependent required fields.
    pub fn validate(&self) -> Result<(), CliError> {
        match self.mode {
            Mode::Homogeneous => {
                if self.subgroup.roots.is_none() {
                    return Err(schema("subgroup.roots", "required in homogeneous mode"));
                }
            }
            Mode::Biquotient => {
                if self.subgroup.factors.is_none() {
                    return Err(schema("subgroup.factors", "required in biquotient mode"));
                }
                if self.action.is_none() {
                    return Err(schema("action", "required in biquotient mode"));
                }
            }
        }
        Ok(())
    }

    pub fn family(&self) -> Result<Family, CliError> {
        self.group
            .family
            .parse()
            .map_err(|_| schema("group.family", "expected one of A, B, C, D, G2, F4"))
    }

    /// Root systems `(Δ_G, Δ_H)` for homogeneous mode.
    pub fn root_systems(&self) -> Result<(RootSystem, RootSystem), CliError> {
        let g = RootSystem::build(self.family()?, self.group.rank)?;
        let roots = self
            .subgroup
            .roots
            .as_ref()
            .ok_or_else(|| schema("subgroup.roots", "required in homogeneous mode"))?;
        let gens = roots
            .iter()
            .enumerate()
            .map(|(i, r)| integers(r, &format!("subgroup.roots[{i}]")).map(Root))
            .collect::<Result<Vec<_>, _>>()?;
        let h = if gens.is_empty() {
            g.empty_like()
        } else {
            g.subsystem(&gens)?
        };
        Ok((g, h))
    }

    /// Biquotient specification; `SU(n)` is type `A_{n-1}`.
    pub fn biquotient_spec(&self) -> Result<BiquotientSpec, CliError> {
        if self.family()? != Family::A {
            return Err(CliError::Scope(
                "biquotient mode supports SU(n) (family A) only".into(),
            ));
        }
        let n = self.group.rank + 1;
        let factors = self
            .subgroup
            .factors
            .as_ref()
            .ok_or_else(|| schema("subgroup.factors", "required in biquotient mode"))?;
        let mut embedding = EmbeddingSpec::default();
        for (i, f) in factors.iter().enumerate() {
            let path = format!("subgroup.factors[{i}]");
            let factor = match (f.su, &f.torus) {
                (Some(k), None) => {
                    EmbeddingFactor::special_unitary(k, f.left.clone(), f.right.clone())
                }
                (None, Some(t)) => {
                    if !f.left.is_empty() || !f.right.is_empty() {
                        return Err(schema(&path, "torus factors take weights, not blocks"));
                    }
                    EmbeddingFactor::torus(
                        integers(&t.p, &format!("{path}.torus.p"))?,
                        integers(&t.q, &format!("{path}.torus.q"))?,
                    )
                }
                _ => return Err(schema(&path, "exactly one of `su` and `torus` is required")),
            };
            embedding.factors.push(factor);
        }
        let action = self
            .action
            .as_ref()
            .ok_or_else(|| schema("action", "required in biquotient mode"))?;
        let tilde_torus = action
            .torus
            .iter()
            .enumerate()
            .map(|(i, r)| {
                Ok(TildeRow {
                    left: integers(&r.left, &format!("action.torus[{i}].left"))?,
                    right: integers(&r.right, &format!("action.torus[{i}].right"))?,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let fixed_point_reps = match &self.fixed_points {
            None => None,
            Some(list) => Some(
                list.iter()
                    .enumerate()
                    .map(|(i, entries)| group_element(n, entries, &format!("fixed_points[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        Ok(BiquotientSpec {
            n,
            embedding,
            tilde_torus,
            circle: integers(&action.circle, "action.circle")?,
            fixed_point_reps,
            flipped_torus_mode: action.flipped_torus,
            reversed_orientation: false,
        })
    }
}

fn group_element(n: usize, entries: &[Entry], path: &str) -> Result<GroupElement, CliError> {
    let mut parsed = Vec::with_capacity(entries.len());
    for (i, (r, c, tag)) in entries.iter().enumerate() {
        let z = unit_from_tag(tag).ok_or_else(|| CliError::Value {
            path: format!("{path}[{i}][2]"),
            reason: format!("unknown entry tag {tag:?}"),
        })?;
        parsed.push((*r, *c, z));
    }
    let g = GroupElement::from_entries(n, &parsed)?;
    if !g.generalized_permutation {
        return Err(CliError::Value {
            path: path.into(),
            reason: "not a generalized permutation matrix".into(),
        });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homogeneous_document() {
        let c = parse_config(
            r#"{"mode": "homogeneous", "group": {"family": "A", "rank": 2},
                "subgroup": {"roots": [[1, -1, 0]]}}"#,
        )
        .unwrap();
        assert_eq!(c.mode, Mode::Homogeneous);
        assert_eq!(c.emit, Emit::Text);
        let (g, h) = c.root_systems().unwrap();
        assert_eq!(g.positives.len(), 3);
        assert_eq!(h.positives.len(), 1);
    }

    #[test]
    fn missing_action_is_a_schema_error() {
        let e = parse_config(
            r#"{"mode": "biquotient", "group": {"family": "A", "rank": 2},
                "subgroup": {"factors": []}}"#,
        )
        .unwrap_err();
        assert!(matches!(e, CliError::Schema { ref path, .. } if path == "action"));
    }

    #[test]
    fn unknown_keys_are_rejected_with_a_path() {
        let e = parse_config(
            r#"{"mode": "homogeneous", "group": {"family": "A", "rank": 2, "colour": 1},
                "subgroup": {"roots": []}}"#,
        )
        .unwrap_err();
        match e {
            CliError::Schema { path, reason } => {
                assert_eq!(path, "group.colour");
                assert!(reason.contains("colour"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fractional_weight_is_a_value_error() {
        let c = parse_config(
            r#"{"mode": "homogeneous", "group": {"family": "A", "rank": 2},
                "subgroup": {"roots": [[1, -0.5, 0]]}}"#,
        )
        .unwrap();
        let e = c.root_systems().unwrap_err();
        assert!(matches!(e, CliError::Value { ref path, .. } if path == "subgroup.roots[0][1]"));
    }
}
