use crate::config::{
    load_config, parse_alphabet, source_from_value, AlgebraConfig, RotationConfig,
};
use crate::error::CliError;
use crate::manifest::InputDigest;
use crate::output::{csv_header, emit, json_pretty, CommandResult, Format, OutFile};
use clap::{Args, Parser, Subcommand};
use monomial_algebra::{
    boundary_verdict, classify, good_word_delta, growth_profile, obstruction_bound_check,
    ResourceBudget,
};
use rauzy_graph::{
    build_rauzy, evolution_trace, predecessor_profile, ForkTriple, PredecessorRule, TraceRow,
};
use rotation_dynamics::{block_factors, code, endpoint_lattice, sturmian_recode};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use word_core::{
    consecutive_return_words, factor_language, factors, is_balanced, minimal_forbidden_words,
    return_words, special_factors, BalanceVerdict, PrefixSource, Word,
};

#[derive(Parser)]
#[command(
    name = "slowgrowth",
    version,
    about = "Finite-window analysis of infinite words, their Rauzy graphs, \
             rotation codings, and the growth of monomial algebras"
)]
pub struct Cli {
    /// Write output files plus a run manifest here instead of stdout.
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args)]
pub struct SourceArg {
    /// Word source or rotation system configuration (JSON).
    #[arg(value_name = "CONFIG")]
    config: PathBuf,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print a prefix of the configured word.
    Generate {
        #[command(flatten)]
        source: SourceArg,
        /// Prefix length to emit.
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Tabulate factor counts T(n) and cumulative counts V(n).
    Complexity {
        #[command(flatten)]
        source: SourceArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        horizon: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Check factor balance up to a length, reporting the first witness.
    Balance {
        #[command(flatten)]
        source: SourceArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        horizon: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List return words of factors, under both occurrence notions.
    Returns {
        #[command(flatten)]
        source: SourceArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        horizon: usize,
        /// Restrict to this single base factor.
        #[arg(long)]
        factor: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Tabulate left/right extension data of every factor.
    Specials {
        #[command(flatten)]
        source: SourceArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        horizon: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// List minimal forbidden words of the factor language.
    Obstructions {
        #[command(flatten)]
        source: SourceArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        horizon: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Emit the order-k Rauzy graph.
    Rauzy {
        #[command(flatten)]
        source: SourceArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        horizon: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Trace Rauzy graph shapes over a range of orders.
    Evolve {
        #[command(flatten)]
        source: SourceArg,
        #[arg(long)]
        k_from: usize,
        #[arg(long)]
        k_to: usize,
        #[arg(long)]
        horizon: usize,
        /// Use the alternative collapse rule in the predecessor check.
        #[arg(long)]
        strict_paper: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Build a rotation system, code it, and identify arc endpoints.
    RotationBuild {
        /// Rotation system configuration (JSON).
        #[arg(value_name = "CONFIG")]
        config: PathBuf,
        #[arg(long)]
        horizon: usize,
        /// Identify endpoints n*alpha with |n| up to this bound.
        #[arg(long, default_value_t = 8)]
        lattice_bound: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Recode a two-interval system onto its length-n blocks.
    Recode {
        /// Rotation system configuration (JSON).
        #[arg(value_name = "CONFIG")]
        config: PathBuf,
        /// Block length to recode onto.
        #[arg(long)]
        block_n: usize,
        /// Coding length used to validate the derived system.
        #[arg(long)]
        horizon: usize,
    },
    /// Tabulate growth of a monomial algebra and classify it.
    Algebra {
        /// Algebra configuration (JSON).
        #[arg(value_name = "CONFIG")]
        config: PathBuf,
        #[arg(long)]
        max_n: usize,
        /// Two-sided extension margin for the good-word table.
        /// Defaults to horizon/4.
        #[arg(long)]
        margin: Option<usize>,
        #[arg(long)]
        horizon: usize,
    },
    /// Structurally classify the long normal words of a monomial algebra.
    Classify {
        /// Algebra configuration (JSON).
        #[arg(value_name = "CONFIG")]
        config: PathBuf,
        #[arg(long)]
        horizon: usize,
        /// Margin for the obstruction kill test.
        #[arg(long, default_value_t = 2)]
        margin: usize,
    },
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let budget = budget_from_env()?;
    let out_dir = cli.out.as_deref();
    let (name, result) = match cli.command {
        Command::Generate {
            source,
            length,
            format,
        } => ("generate", generate(&source.config, length, format)?),
        Command::Complexity {
            source,
            max_n,
            horizon,
            format,
        } => (
            "complexity",
            complexity_cmd(&source.config, max_n, horizon, format)?,
        ),
        Command::Balance {
            source,
            max_n,
            horizon,
            format,
        } => (
            "balance",
            balance_cmd(&source.config, max_n, horizon, format)?,
        ),
        Command::Returns {
            source,
            max_n,
            horizon,
            factor,
            format,
        } => (
            "returns",
            returns_cmd(&source.config, max_n, horizon, factor.as_deref(), format)?,
        ),
        Command::Specials {
            source,
            max_n,
            horizon,
            format,
        } => (
            "specials",
            specials_cmd(&source.config, max_n, horizon, format)?,
        ),
        Command::Obstructions {
            source,
            max_n,
            horizon,
            format,
        } => (
            "obstructions",
            obstructions_cmd(&source.config, max_n, horizon, format)?,
        ),
        Command::Rauzy {
            source,
            k,
            horizon,
            format,
        } => ("rauzy", rauzy_cmd(&source.config, k, horizon, format)?),
        Command::Evolve {
            source,
            k_from,
            k_to,
            horizon,
            strict_paper,
            format,
        } => (
            "evolve",
            evolve_cmd(&source.config, k_from, k_to, horizon, strict_paper, format)?,
        ),
        Command::RotationBuild {
            config,
            horizon,
            lattice_bound,
            format,
        } => (
            "rotation-build",
            rotation_build_cmd(&config, horizon, lattice_bound, format)?,
        ),
        Command::Recode {
            config,
            block_n,
            horizon,
        } => ("recode", recode_cmd(&config, block_n, horizon)?),
        Command::Algebra {
            config,
            max_n,
            margin,
            horizon,
        } => (
            "algebra",
            algebra_cmd(&config, max_n, margin, horizon, &budget)?,
        ),
        Command::Classify {
            config,
            horizon,
            margin,
        } => (
            "classify",
            classify_cmd(&config, horizon, margin, &budget)?,
        ),
    };
    emit(name, result, out_dir)
}

fn budget_from_env() -> Result<ResourceBudget, CliError> {
    match std::env::var("SLOWGROWTH_MAX_MEMORY_MB") {
        Ok(s) => {
            let mb: u64 = s.trim().parse().map_err(|_| {
                CliError::Config(format!("SLOWGROWTH_MAX_MEMORY_MB: not a number: {s:?}"))
            })?;
            if mb == 0 {
                return Err(CliError::Config(
                    "SLOWGROWTH_MAX_MEMORY_MB must be positive".into(),
                ));
            }
            Ok(ResourceBudget::from_megabytes(mb))
        }
        Err(std::env::VarError::NotPresent) => Ok(ResourceBudget::from_megabytes(512)),
        Err(e) => Err(CliError::Config(format!("SLOWGROWTH_MAX_MEMORY_MB: {e}"))),
    }
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent()
        .filter(|p| !p.as_os_str().is_empty())
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("."))
}

/// Loads a word-source (or bare rotation) config and builds its source.
fn load_source(
    path: &Path,
    window: usize,
) -> Result<(Box<dyn PrefixSource>, Value, Vec<InputDigest>), CliError> {
    let loaded = load_config::<Value>(path)?;
    let cfg = source_from_value(&loaded.value)?;
    let mut inputs = loaded.digests;
    let source = cfg.build(&base_dir(path), window, &mut inputs)?;
    Ok((source, loaded.raw, inputs))
}

fn require_format(format: Format, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Config(format!(
            "unsupported format {:?} for this command",
            format_name(format)
        )))
    }
}

fn format_name(format: Format) -> &'static str {
    match format {
        Format::Csv => "csv",
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Text => "text",
    }
}

fn config_value(pairs: Vec<(&str, Value)>) -> Value {
    let mut map = serde_json::Map::new();
    for (k, v) in pairs {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

/// JSON document body with the shared schema marker added.
fn json_doc(mut value: Value) -> Result<String, CliError> {
    let map = value
        .as_object_mut()
        .ok_or_else(|| CliError::Internal("json document is not an object".into()))?;
    map.insert("schemaVersion".into(), json!(1));
    json_pretty(&value)
}

fn opt_bool(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}

fn generate(config: &Path, length: usize, format: Format) -> Result<CommandResult, CliError> {
    require_format(format, &[Format::Text])?;
    let (source, raw, inputs) = load_source(config, length)?;
    let window = source.window(length)?;
    let mut text = source.alphabet().render(&window);
    text.push('\n');
    Ok(CommandResult {
        files: vec![OutFile::new("word.txt", text)],
        config: config_value(vec![
            ("source", raw),
            ("length", json!(length)),
            ("format", json!(format_name(format))),
        ]),
        inputs,
    })
}

fn complexity_cmd(
    config: &Path,
    max_n: usize,
    horizon: usize,
    format: Format,
) -> Result<CommandResult, CliError> {
    require_format(format, &[Format::Csv, Format::Json])?;
    let (source, raw, inputs) = load_source(config, horizon)?;
    let profile = word_core::complexity(source.as_ref(), max_n, horizon)?;
    let file = match format {
        Format::Csv => {
            let mut csv = csv_header("complexity", "n,T,V");
            for n in 0..=max_n {
                csv.push_str(&format!(
                    "{n},{},{}\n",
                    profile.values[n], profile.cumulative[n]
                ));
            }
            OutFile::new("complexity.csv", csv)
        }
        _ => OutFile::new(
            "complexity.json",
            json_doc(json!({
                "maxN": max_n,
                "horizon": horizon,
                "T": profile.values,
                "V": profile.cumulative,
            }))?,
        ),
    };
    Ok(CommandResult {
        files: vec![file],
        config: config_value(vec![
            ("source", raw),
            ("maxN", json!(max_n)),
            ("horizon", json!(horizon)),
            ("format", json!(format_name(format))),
        ]),
        inputs,
    })
}

fn balance_cmd(
    config: &Path,
    max_n: usize,
    horizon: usize,
    format: Format,
) -> Result<CommandResult, CliError> {
    require_format(format, &[Format::Json, Format::Text])?;
    let (source, raw, inputs) = load_source(config, horizon)?;
    let verdict = is_balanced(source.as_ref(), max_n, horizon)?;
    let al = source.alphabet().clone();
    let file = match format {
        Format::Text => {
            let text = match &verdict {
                BalanceVerdict::Balanced => {
                    format!("balanced up to length {max_n} within horizon {horizon}\n")
                }
                BalanceVerdict::Witness {
                    length,
                    symbol,
                    u,
                    v,
                } => format!(
                    "imbalance at length {length} for symbol '{}': u={} v={}\n",
                    al.symbols()[*symbol as usize],
                    u.render(&al),
                    v.render(&al)
                ),
            };
            OutFile::new("balance.txt", text)
        }
        _ => {
            let witness = match &verdict {
                BalanceVerdict::Balanced => Value::Null,
                BalanceVerdict::Witness {
                    length,
                    symbol,
                    u,
                    v,
                } => json!({
                    "length": length,
                    "symbol": al.symbols()[*symbol as usize].to_string(),
                    "u": u.render(&al),
                    "v": v.render(&al),
                }),
            };
            OutFile::new(
                "balance.json",
                json_doc(json!({
                    "maxN": max_n,
                    "horizon": horizon,
                    "balanced": matches!(verdict, BalanceVerdict::Balanced),
                    "witness": witness,
                }))?,
            )
        }
    };
    Ok(CommandResult {
        files: vec![file],
        config: config_value(vec![
            ("source", raw),
            ("maxN", json!(max_n)),
            ("horizon", json!(horizon)),
            ("format", json!(format_name(format))),
        ]),
        inputs,
    })
}

fn returns_cmd(
    config: &Path,
    max_n: usize,
    horizon: usize,
    factor: Option<&str>,
    format: Format,
) -> Result<CommandResult, CliError> {
    require_format(format, &[Format::Csv])?;
    let (source, raw, inputs) = load_source(config, horizon)?;
    let al = source.alphabet().clone();
    let bases: Vec<Word> = match factor {
        Some(text) => vec![Word::parse(&al, text)?],
        None => {
            let mut out = Vec::new();
            for n in 1..=max_n {
                out.extend(factors(source.as_ref(), n, horizon)?.factors);
            }
            out
        }
    };
    let mut csv = csv_header("returns", "n,factor,returnCount,consecutiveCount,returns");
    for v in &bases {
        let rs = return_words(source.as_ref(), v, horizon)?;
        let consecutive = consecutive_return_words(source.as_ref(), v, horizon)?;
        let joined: Vec<String> = rs.returns.iter().map(|w| w.render(&al)).collect();
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            v.len(),
            v.render(&al),
            rs.returns.len(),
            consecutive.len(),
            joined.join(";")
        ));
    }
    Ok(CommandResult {
        files: vec![OutFile::new("returns.csv", csv)],
        config: config_value(vec![
            ("source", raw),
            ("maxN", json!(max_n)),
            ("horizon", json!(horizon)),
            ("factor", factor.map_or(Value::Null, |f| json!(f))),
            ("format", json!(format_name(format))),
        ]),
        inputs,
    })
}

fn specials_cmd(
    config: &Path,
    max_n: usize,
    horizon: usize,
    format: Format,
) -> Result<CommandResult, CliError> {
    require_format(format, &[Format::Csv])?;
    let (source, raw, inputs) = load_source(config, horizon)?;
    let al = source.alphabet().clone();
    let mut csv = csv_header(
        "specials",
        "n,factor,leftValence,rightValence,leftSpecial,rightSpecial,bispecial",
    );
    for n in 1..=max_n {
        for f in special_factors(source.as_ref(), n, horizon)? {
            csv.push_str(&format!(
                "{n},{},{},{},{},{},{}\n",
                f.factor.render(&al),
                f.left_valence,
                f.right_valence,
                f.is_left_special,
                f.is_right_special,
                f.is_bispecial
            ));
        }
    }
    Ok(CommandResult {
        files: vec![OutFile::new("specials.csv", csv)],
        config: config_value(vec![
            ("source", raw),
            ("maxN", json!(max_n)),
            ("horizon", json!(horizon)),
            ("format", json!(format_name(format))),
        ]),
        inputs,
    })
}

fn obstructions_cmd(
    config: &Path,
    max_n: usize,
    horizon: usize,
    format: Format,
) -> Result<CommandResult, CliError> {
    require_format(format, &[Format::Csv, Format::Text])?;
    let (source, raw, inputs) = load_source(config, horizon)?;
    let al = source.alphabet().clone();
    let language = factor_language(source.as_ref(), max_n, horizon)?;
    let mut forbidden: Vec<Word> = minimal_forbidden_words(&language)?.into_iter().collect();
    forbidden.sort_by_key(|w| (w.len(), w.clone()));
    let file = match format {
        Format::Text => {
            let mut text = String::new();
            for w in &forbidden {
                text.push_str(&w.render(&al));
                text.push('\n');
            }
            OutFile::new("obstructions.txt", text)
        }
        _ => {
            let mut csv = csv_header("obstructions", "length,word");
            for w in &forbidden {
                csv.push_str(&format!("{},{}\n", w.len(), w.render(&al)));
            }
            OutFile::new("obstructions.csv", csv)
        }
    };
    Ok(CommandResult {
        files: vec![file],
        config: config_value(vec![
            ("source", raw),
            ("maxN", json!(max_n)),
            ("horizon", json!(horizon)),
            ("format", json!(format_name(format))),
        ]),
        inputs,
    })
}

fn rauzy_cmd(
    config: &Path,
    k: usize,
    horizon: usize,
    format: Format,
) -> Result<CommandResult, CliError> {
    require_format(format, &[Format::Dot, Format::Csv])?;
    let (source, raw, inputs) = load_source(config, horizon)?;
    let al = source.alphabet().clone();
    let g = build_rauzy(source.as_ref(), k, horizon)?;
    let file = match format {
        Format::Csv => {
            let mut csv = csv_header("rauzy", "k,from,to,witness");
            for e in g.edges() {
                csv.push_str(&format!(
                    "{k},{},{},{}\n",
                    g.vertices()[e.from].render(&al),
                    g.vertices()[e.to].render(&al),
                    e.witness.render(&al)
                ));
            }
            OutFile::new(format!("rauzy-k{k}.csv"), csv)
        }
        _ => OutFile::new(format!("rauzy-k{k}.dot"), g.to_dot()),
    };
    Ok(CommandResult {
        files: vec![file],
        config: config_value(vec![
            ("source", raw),
            ("k", json!(k)),
            ("horizon", json!(horizon)),
            ("format", json!(format_name(format))),
        ]),
        inputs,
    })
}

/// Predecessor-step cross-check for each consecutive saturated fork pair.
/// None marks rows where the check does not apply (first row, a non-fork
/// shape on either side, unsaturated windows, or a profile the inverse step
/// rejects).
fn predecessor_checks(rows: &[TraceRow], rule: PredecessorRule) -> Vec<Option<bool>> {
    let mut out = vec![None; rows.len()];
    for i in 1..rows.len() {
        let prev = &rows[i - 1];
        let cur = &rows[i];
        if !prev.saturated || !cur.saturated {
            continue;
        }
        let Some((pl, pr, ps)) = prev.profile.triple() else {
            continue;
        };
        if let Ok(t) = predecessor_profile(&cur.profile, rule) {
            out[i] = Some(t.matches_unordered(&ForkTriple::new(pl, pr, ps)));
        }
    }
    out
}

fn evolve_cmd(
    config: &Path,
    k_from: usize,
    k_to: usize,
    horizon: usize,
    strict_paper: bool,
    format: Format,
) -> Result<CommandResult, CliError> {
    require_format(format, &[Format::Csv, Format::Json])?;
    let (source, raw, inputs) = load_source(config, horizon)?;
    let rows = evolution_trace(source.as_ref(), k_from, k_to, horizon)?;
    let rule = if strict_paper {
        PredecessorRule::Variant
    } else {
        PredecessorRule::Standard
    };
    let pred = predecessor_checks(&rows, rule);
    let file = match format {
        Format::Csv => {
            let mut csv = csv_header(
                "evolution",
                "k,shape,l,r,s,stronglyConnected,saturated,consistentWithPrevious,\
                 predecessorConsistent",
            );
            for (row, p) in rows.iter().zip(&pred) {
                let (l, r, s) = match row.profile.triple() {
                    Some((l, r, s)) => (l.to_string(), r.to_string(), s.to_string()),
                    None => (String::new(), String::new(), String::new()),
                };
                csv.push_str(&format!(
                    "{},{},{l},{r},{s},{},{},{},{}\n",
                    row.k,
                    row.profile.shape_name(),
                    row.strongly_connected,
                    row.saturated,
                    opt_bool(row.consistent_with_previous),
                    opt_bool(*p)
                ));
            }
            OutFile::new("evolution.csv", csv)
        }
        _ => {
            let mut out_rows = Vec::with_capacity(rows.len());
            for (row, p) in rows.iter().zip(&pred) {
                let mut v = serde_json::to_value(row)?;
                v.as_object_mut()
                    .expect("trace row serializes to an object")
                    .insert("predecessorConsistent".into(), json!(p));
                out_rows.push(v);
            }
            OutFile::new(
                "evolution.json",
                json_doc(json!({
                    "kFrom": k_from,
                    "kTo": k_to,
                    "horizon": horizon,
                    "rows": out_rows,
                }))?,
            )
        }
    };
    Ok(CommandResult {
        files: vec![file],
        config: config_value(vec![
            ("source", raw),
            ("kFrom", json!(k_from)),
            ("kTo", json!(k_to)),
            ("horizon", json!(horizon)),
            ("strictPaper", json!(strict_paper)),
            ("format", json!(format_name(format))),
        ]),
        inputs,
    })
}

fn rotation_build_cmd(
    config: &Path,
    horizon: usize,
    lattice_bound: u64,
    format: Format,
) -> Result<CommandResult, CliError> {
    require_format(format, &[Format::Csv, Format::Json])?;
    let loaded = load_config::<RotationConfig>(config)?;
    let system = loaded.value.build_system()?;
    let syms = code(&system, horizon)?;
    let mut word = system.alphabet().render(&syms);
    word.push('\n');
    let entries = endpoint_lattice(&system, lattice_bound);
    let lattice_file = match format {
        Format::Csv => {
            let mut csv = csv_header("lattice", "endpoint_p,endpoint_q,lattice_n");
            for e in &entries {
                csv.push_str(&format!(
                    "{},{},{}\n",
                    e.endpoint.p(),
                    e.endpoint.q(),
                    e.lattice
                        .as_ref()
                        .map(|n| n.to_string())
                        .unwrap_or_default()
                ));
            }
            OutFile::new("lattice.csv", csv)
        }
        _ => {
            let rows: Vec<Value> = entries
                .iter()
                .map(|e| {
                    json!({
                        "p": e.endpoint.p().to_string(),
                        "q": e.endpoint.q().to_string(),
                        "lattice": e.lattice.as_ref().map(|n| n.to_string()),
                    })
                })
                .collect();
            OutFile::new(
                "lattice.json",
                json_doc(json!({
                    "latticeBound": lattice_bound,
                    "endpoints": rows,
                }))?,
            )
        }
    };
    let system_doc = json_doc(serde_json::to_value(RotationConfig::from_system(&system)?)?)?;
    Ok(CommandResult {
        files: vec![
            lattice_file,
            OutFile::new("word.txt", word),
            OutFile::new("system.json", system_doc),
        ],
        config: config_value(vec![
            ("system", loaded.raw.clone()),
            ("horizon", json!(horizon)),
            ("latticeBound", json!(lattice_bound)),
            ("format", json!(format_name(format))),
        ]),
        inputs: loaded.digests,
    })
}

fn recode_cmd(config: &Path, block_n: usize, horizon: usize) -> Result<CommandResult, CliError> {
    let loaded = load_config::<RotationConfig>(config)?;
    let base = loaded.value.build_system()?;
    let blocks = block_factors(&base, block_n)?;
    if blocks.len() > 26 {
        return Err(CliError::Config(format!(
            "{} blocks of length {block_n}: more than the 26 symbols available",
            blocks.len()
        )));
    }
    let base_al = base.alphabet().clone();
    let mut ordered: Vec<&Word> = blocks.iter().map(|(w, _)| w).collect();
    ordered.sort();
    let symbols: Vec<char> = (0..ordered.len())
        .map(|i| (b'a' + i as u8) as char)
        .collect();
    let new_alphabet = parse_alphabet(&symbols.iter().collect::<String>())?;
    let grouping: BTreeMap<Word, u8> = ordered
        .iter()
        .enumerate()
        .map(|(i, w)| ((*w).clone(), i as u8))
        .collect();
    let recoded = sturmian_recode(&base, block_n, &new_alphabet, &grouping)?;
    // The recoded coding must exist; a collision here means the derived
    // endpoints are defective, which the horizon-long coding would surface.
    let _ = code(&recoded, horizon)?;
    let system_doc = json_doc(serde_json::to_value(RotationConfig::from_system(&recoded)?)?)?;
    let mut map_csv = csv_header("recode-map", "symbol,block");
    for (w, sym) in &grouping {
        map_csv.push_str(&format!(
            "{},{}\n",
            new_alphabet.symbols()[*sym as usize],
            w.render(&base_al)
        ));
    }
    Ok(CommandResult {
        files: vec![
            OutFile::new("recoded-system.json", system_doc),
            OutFile::new("recode-map.csv", map_csv),
        ],
        config: config_value(vec![
            ("system", loaded.raw.clone()),
            ("blockN", json!(block_n)),
            ("horizon", json!(horizon)),
        ]),
        inputs: loaded.digests,
    })
}

fn algebra_cmd(
    config: &Path,
    max_n: usize,
    margin: Option<usize>,
    horizon: usize,
    budget: &ResourceBudget,
) -> Result<CommandResult, CliError> {
    let loaded = load_config::<AlgebraConfig>(config)?;
    let mut inputs = loaded.digests;
    let alg = loaded
        .value
        .build_algebra(&base_dir(config), horizon, &mut inputs)?;
    let margin = margin.unwrap_or(horizon / 4);
    let profile = growth_profile(&alg, max_n, margin, budget)?;
    let verdict = boundary_verdict(&profile)?;
    let delta = good_word_delta(&profile);
    let mut csv = csv_header("growth", "n,T,V,T_RL,T_minus_n");
    for n in 0..=max_n {
        csv.push_str(&format!(
            "{n},{},{},{},{}\n",
            profile.t[n],
            profile.v[n],
            profile.t_rl[n],
            profile.t[n] as i64 - n as i64
        ));
    }
    let report = json_doc(json!({
        "maxN": max_n,
        "margin": margin,
        "horizon": horizon,
        "verdict": serde_json::to_value(&verdict)?,
        "goodWordDelta": serde_json::to_value(&delta)?,
    }))?;
    let classification = classify(&alg, horizon, budget)?;
    let classification_doc = json_doc(serde_json::to_value(&classification)?)?;
    Ok(CommandResult {
        files: vec![
            OutFile::new("growth.csv", csv),
            OutFile::new("growth-report.json", report),
            OutFile::new("classification.json", classification_doc),
        ],
        config: config_value(vec![
            ("algebra", loaded.raw.clone()),
            ("maxN", json!(max_n)),
            ("margin", json!(margin)),
            ("horizon", json!(horizon)),
        ]),
        inputs,
    })
}

fn classify_cmd(
    config: &Path,
    horizon: usize,
    margin: usize,
    budget: &ResourceBudget,
) -> Result<CommandResult, CliError> {
    let loaded = load_config::<AlgebraConfig>(config)?;
    let mut inputs = loaded.digests;
    let alg = loaded
        .value
        .build_algebra(&base_dir(config), horizon, &mut inputs)?;
    let classification = classify(&alg, horizon, budget)?;
    let classification_doc = json_doc(serde_json::to_value(&classification)?)?;
    let bound = obstruction_bound_check(&alg, horizon, margin, budget)?;
    let bound_doc = json_doc(serde_json::to_value(&bound)?)?;
    Ok(CommandResult {
        files: vec![
            OutFile::new("classification.json", classification_doc),
            OutFile::new("bound-check.json", bound_doc),
        ],
        config: config_value(vec![
            ("algebra", loaded.raw.clone()),
            ("horizon", json!(horizon)),
            ("margin", json!(margin)),
        ]),
        inputs,
    })
}
