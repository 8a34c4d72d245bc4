use crate::error::CliError;
use crate::manifest::{sha256_hex, InputDigest};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rotation_dynamics::{
    code, Arc, ArcSet, ExactNumber, QuadraticIrrational, RotationSystem,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;
use word_core::{
    Alphabet, EventuallyPeriodicSource, ExplicitSource, PeriodicSource, PrefixSource,
    SubstitutionSource, TwoSidedSource, Word,
};

/// A word source in configuration form. Rotation-backed sources are
/// materialized eagerly: the coding is generated up to the command's window
/// once, so later analysis never re-enters exact arithmetic.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SourceConfig {
    Substitution {
        alphabet: String,
        rules: BTreeMap<String, String>,
        seed: String,
    },
    Explicit {
        alphabet: String,
        symbols: String,
    },
    Periodic {
        alphabet: String,
        cycle: String,
    },
    EventuallyPeriodic {
        alphabet: String,
        head: String,
        cycle: String,
    },
    TwoSided {
        forward: Box<SourceConfig>,
        backward: Box<SourceConfig>,
    },
    RotationRef {
        #[serde(default)]
        system: Option<RotationConfig>,
        #[serde(default)]
        path: Option<String>,
    },
}

impl SourceConfig {
    /// Builds the runtime source. `base_dir` anchors relative rotation-ref
    /// paths; `window` sizes materialized rotation codings; any referenced
    /// file is digest-recorded into `inputs`.
    pub fn build(
        &self,
        base_dir: &Path,
        window: usize,
        inputs: &mut Vec<InputDigest>,
    ) -> Result<Box<dyn PrefixSource>, CliError> {
        match self {
            SourceConfig::Substitution {
                alphabet,
                rules,
                seed,
            } => {
                let al = parse_alphabet(alphabet)?;
                let pairs: Vec<(&str, &str)> = rules
                    .iter()
                    .map(|(k, v)| (k.as_str(), v.as_str()))
                    .collect();
                let seed = single_char(seed, "seed")?;
                Ok(Box::new(SubstitutionSource::parse(&al, &pairs, seed)?))
            }
            SourceConfig::Explicit { alphabet, symbols } => {
                let al = parse_alphabet(alphabet)?;
                Ok(Box::new(ExplicitSource::parse(&al, symbols)?))
            }
            SourceConfig::Periodic { alphabet, cycle } => {
                let al = parse_alphabet(alphabet)?;
                Ok(Box::new(PeriodicSource::parse(&al, cycle)?))
            }
            SourceConfig::EventuallyPeriodic {
                alphabet,
                head,
                cycle,
            } => {
                let al = parse_alphabet(alphabet)?;
                Ok(Box::new(EventuallyPeriodicSource::parse(&al, head, cycle)?))
            }
            SourceConfig::TwoSided { forward, backward } => {
                let f = forward.build(base_dir, window, inputs)?;
                let b = backward.build(base_dir, window, inputs)?;
                Ok(Box::new(TwoSidedSource::new(f, b)?))
            }
            SourceConfig::RotationRef { system, path } => {
                let config = match (system, path) {
                    (Some(cfg), None) => cfg.clone(),
                    (None, Some(rel)) => {
                        let full = base_dir.join(rel);
                        let loaded: Loaded<RotationConfig> = load_config(&full)?;
                        inputs.extend(loaded.digests);
                        loaded.value
                    }
                    _ => {
                        return Err(CliError::Config(
                            "rotation-ref needs exactly one of \"system\" or \"path\"".into(),
                        ))
                    }
                };
                let system = config.build_system()?;
                let syms = code(&system, window)?;
                Ok(Box::new(ExplicitSource::new(
                    system.alphabet().clone(),
                    syms,
                )?))
            }
        }
    }
}

/// (a + b*sqrt(d)) / c.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaConfig {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: u64,
}

/// The circle point p + q*alpha mod 1, both coordinates rationals in
/// "num/den" (or plain integer) form.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PointConfig {
    pub p: String,
    pub q: String,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ArcConfig {
    pub left: PointConfig,
    pub right: PointConfig,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CharSetConfig {
    pub symbol: String,
    pub arcs: Vec<ArcConfig>,
}

/// A rotation system in configuration form. Symbol order in charSets fixes
/// the alphabet order. x0 defaults to alpha itself (the classical coding).
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct RotationConfig {
    /// Present on emitted system documents, so they load back unchanged.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<u32>,
    pub alpha: AlphaConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x0: Option<PointConfig>,
    pub char_sets: Vec<CharSetConfig>,
}

impl RotationConfig {
    pub fn build_system(&self) -> Result<RotationSystem, CliError> {
        let angle = QuadraticIrrational::new(
            self.alpha.a,
            self.alpha.b,
            self.alpha.c,
            self.alpha.d,
        )?;
        let alpha = std::sync::Arc::new(angle);
        let mut symbols = Vec::with_capacity(self.char_sets.len());
        let mut sets = Vec::with_capacity(self.char_sets.len());
        for cs in &self.char_sets {
            symbols.push(single_char(&cs.symbol, "charSets symbol")?);
            let mut arcs = Vec::with_capacity(cs.arcs.len());
            for arc in &cs.arcs {
                arcs.push(Arc::new(
                    parse_point(&alpha, &arc.left)?,
                    parse_point(&alpha, &arc.right)?,
                )?);
            }
            sets.push(ArcSet::from_arcs(&alpha, &arcs));
        }
        let alphabet = Alphabet::new(symbols)?;
        let x0 = match &self.x0 {
            Some(point) => parse_point(&alpha, point)?,
            None => ExactNumber::alpha_point(&alpha),
        };
        Ok(RotationSystem::new(alpha, x0, alphabet, sets)?)
    }

    /// Configuration image of a built system; the command that emits a
    /// derived system writes this, so outputs are themselves valid inputs.
    pub fn from_system(system: &RotationSystem) -> Result<RotationConfig, CliError> {
        let angle = system.alpha();
        let to_i64 = |v: &num_bigint::BigInt, name: &str| {
            v.to_i64().ok_or_else(|| {
                CliError::Internal(format!("alpha component {name} exceeds i64"))
            })
        };
        let alpha = AlphaConfig {
            a: to_i64(angle.a(), "a")?,
            b: to_i64(angle.b(), "b")?,
            c: to_i64(angle.c(), "c")?,
            d: angle.d(),
        };
        let x0 = PointConfig {
            p: system.x0().p().to_string(),
            q: system.x0().q().to_string(),
        };
        let mut char_sets = Vec::with_capacity(system.char_sets().len());
        for (i, set) in system.char_sets().iter().enumerate() {
            let symbol = system.alphabet().symbols()[i].to_string();
            let arcs = set
                .arcs()
                .iter()
                .map(|arc| ArcConfig {
                    left: point_config(&arc.left),
                    right: point_config(&arc.right),
                })
                .collect();
            char_sets.push(CharSetConfig { symbol, arcs });
        }
        Ok(RotationConfig {
            schema_version: None,
            alpha,
            x0: Some(x0),
            char_sets,
        })
    }
}

fn point_config(x: &ExactNumber) -> PointConfig {
    PointConfig {
        p: x.p().to_string(),
        q: x.q().to_string(),
    }
}

/// Obstructions are either written out, or derived from a word source cut
/// at a truncation depth.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ObstructionsConfig {
    Explicit(Vec<String>),
    #[serde(rename_all = "camelCase")]
    Generated {
        kind: String,
        source: SourceConfig,
        truncation_depth: usize,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct AlgebraConfig {
    pub alphabet: String,
    pub obstructions: ObstructionsConfig,
}

impl AlgebraConfig {
    pub fn build_algebra(
        &self,
        base_dir: &Path,
        horizon: usize,
        inputs: &mut Vec<InputDigest>,
    ) -> Result<monomial_algebra::MonomialAlgebra, CliError> {
        let alphabet = parse_alphabet(&self.alphabet)?;
        match &self.obstructions {
            ObstructionsConfig::Explicit(words) => {
                let parsed = words
                    .iter()
                    .map(|w| Word::parse(&alphabet, w))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(monomial_algebra::MonomialAlgebra::from_obstructions(
                    alphabet, parsed,
                )?)
            }
            ObstructionsConfig::Generated {
                kind,
                source,
                truncation_depth,
            } => {
                if kind != "from-word-source" {
                    return Err(CliError::Config(format!(
                        "unknown obstruction generator kind {kind:?}; only \
                         \"from-word-source\" is supported"
                    )));
                }
                let src = source.build(base_dir, horizon, inputs)?;
                if src.alphabet() != &alphabet {
                    return Err(CliError::Config(
                        "algebra alphabet differs from the source's alphabet".into(),
                    ));
                }
                Ok(monomial_algebra::MonomialAlgebra::from_word_source(
                    src,
                    *truncation_depth,
                    horizon,
                )?)
            }
        }
    }
}

pub struct Loaded<T> {
    pub value: T,
    /// The parsed document, for the manifest's resolved-config record.
    pub raw: serde_json::Value,
    pub digests: Vec<InputDigest>,
}

pub fn load_config<T: serde::de::DeserializeOwned>(path: &Path) -> Result<Loaded<T>, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let raw: serde_json::Value = serde_json::from_slice(&bytes)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    let value: T = serde_json::from_value(raw.clone())
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    Ok(Loaded {
        value,
        raw,
        digests: vec![InputDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(&bytes),
        }],
    })
}

/// Accepts either a word-source document (tagged by "kind") or a bare
/// rotation-system document (recognized by its "alpha" field).
pub fn source_from_value(value: &serde_json::Value) -> Result<SourceConfig, CliError> {
    if value.get("alpha").is_some() {
        let system: RotationConfig = serde_json::from_value(value.clone())?;
        Ok(SourceConfig::RotationRef {
            system: Some(system),
            path: None,
        })
    } else {
        Ok(serde_json::from_value(value.clone())?)
    }
}

pub fn parse_alphabet(s: &str) -> Result<Alphabet, CliError> {
    Ok(Alphabet::new(s.chars())?)
}

fn single_char(s: &str, what: &str) -> Result<char, CliError> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(CliError::Config(format!(
            "{what} must be a single symbol, got {s:?}"
        ))),
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(s.trim())
        .map_err(|e| CliError::Config(format!("bad rational {s:?}: {e}")))
}

fn parse_point(
    alpha: &rotation_dynamics::AlphaRef,
    point: &PointConfig,
) -> Result<ExactNumber, CliError> {
    Ok(ExactNumber::from_parts(
        alpha,
        parse_rational(&point.p)?,
        parse_rational(&point.q)?,
    ))
}
