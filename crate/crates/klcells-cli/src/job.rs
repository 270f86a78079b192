use std::fmt;
use std::path::Path;
use std::sync::Arc;

use klcells::coxeter::{identity_token, DEFAULT_ELEMENT_CAP};
use klcells::{CoxeterMatrix, CoxeterSystem, CoxeterType, Element, GeneratorSet, WeightFunction};
use serde::Deserialize;

/// Anything wrong with the job file. Maps to exit status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub fn input_err(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Cells,
    Klpolys,
    Vogan,
    AdmissibleCheck,
    VerifyConjecture,
    GroupOrder,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Command::Cells => "cells",
            Command::Klpolys => "klpolys",
            Command::Vogan => "vogan",
            Command::AdmissibleCheck => "admissible-check",
            Command::VerifyConjecture => "verify-conjecture",
            Command::GroupOrder => "group-order",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rho {
    Descent,
    Enhanced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaFamily {
    Delta2,
    Tilde,
    Explicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Left,
    Right,
    TwoSided,
}

/// A user-supplied map on a parabolic subgroup, as `[u, δ(u)]` word pairs.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub generators: Vec<String>,
    pub images: Vec<[String; 2]>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct Options {
    /// `cells`: which partitions to report.
    pub kinds: Option<Vec<Kind>>,
    /// `klpolys`: restrict to these `w`; all elements when absent.
    pub elements: Option<Vec<String>>,
    /// `klpolys`: also list the `M`-polynomials.
    #[serde(default)]
    pub mu: bool,
    pub rho: Option<Rho>,
    pub delta: Option<DeltaFamily>,
    /// `vogan`: classical `T_{s,t}` refinement instead of `δ`-maps.
    #[serde(default)]
    pub classic: bool,
    #[serde(default)]
    pub maps: Vec<MapSpec>,
    /// `group-order`: decimal order or factorisation such as `2^4 * 3`.
    pub expect: Option<String>,
}

/// The file as written.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct JobSpec {
    pub command: Command,
    pub group: Option<String>,
    pub matrix: Option<Vec<Vec<u32>>>,
    pub weights: Option<Vec<i32>>,
    pub labels: Option<Vec<String>>,
    pub element_cap: Option<usize>,
    #[serde(default)]
    pub options: Options,
}

/// A validated job: the group is built, weights and labels checked.
pub struct Job {
    pub command: Command,
    pub group_name: String,
    pub system: Arc<CoxeterSystem>,
    pub weights: WeightFunction,
    pub labels: Vec<String>,
    pub options: Options,
}

impl JobSpec {
    pub fn from_path(path: &Path) -> anyhow::Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| input_err(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> anyhow::Result<Self> {
        toml::from_str(text).map_err(|e| input_err(format!("invalid job file: {e}")))
    }

    pub fn load(self) -> anyhow::Result<Job> {
        let bad = |e: klcells::Error| input_err(e.to_string());
        let (matrix, group_name) = match (&self.group, &self.matrix) {
            (Some(g), None) => {
                let ty: CoxeterType = g.parse().map_err(|e: klcells::ParseError| input_err(e.to_string()))?;
                (CoxeterMatrix::from_type(ty).map_err(bad)?, ty.to_string())
            }
            (None, Some(rows)) => (CoxeterMatrix::new(rows.clone()).map_err(bad)?, "custom".to_string()),
            _ => return Err(input_err("give exactly one of `group` and `matrix`")),
        };
        let rank = matrix.rank();
        let weights = match self.weights {
            Some(w) => WeightFunction::new(&matrix, w).map_err(bad)?,
            None => WeightFunction::equal(&matrix),
        };
        let labels = match self.labels {
            Some(l) => check_labels(l, rank)?,
            None => (0..rank).map(|s| s.to_string()).collect(),
        };
        let cap = self.element_cap.unwrap_or(DEFAULT_ELEMENT_CAP);
        let system = CoxeterSystem::build(matrix, cap).map_err(bad)?;
        let job = Job {
            command: self.command,
            group_name,
            system: Arc::new(system),
            weights,
            labels,
            options: self.options,
        };
        job.check_options()?;
        Ok(job)
    }
}

fn check_labels(labels: Vec<String>, rank: usize) -> anyhow::Result<Vec<String>> {
    if labels.len() != rank {
        return Err(input_err(format!("expected {rank} labels, got {}", labels.len())));
    }
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() || l.contains('.') || l.chars().any(char::is_whitespace) {
            return Err(input_err(format!(
                "label {l:?} must be non-empty, without dots or spaces"
            )));
        }
        if labels[..i].contains(l) {
            return Err(input_err(format!("label {l:?} is repeated")));
        }
    }
    if labels.iter().any(|l| l == identity_token(&labels)) {
        return Err(input_err("labels `1` and `e` cannot both be used"));
    }
    Ok(labels)
}

impl Job {
    fn check_options(&self) -> anyhow::Result<()> {
        let o = &self.options;
        if o.classic && !self.weights.is_equal_parameter() {
            return Err(input_err("`classic` needs equal weights"));
        }
        if o.classic && (o.delta.is_some() || o.rho.is_some()) {
            return Err(input_err("`classic` fixes its own maps; drop `delta` and `rho`"));
        }
        if o.delta == Some(DeltaFamily::Explicit) && o.maps.is_empty() {
            return Err(input_err(
                "`delta = \"explicit\"` needs at least one [[options.maps]] entry",
            ));
        }
        if !o.maps.is_empty() && o.delta != Some(DeltaFamily::Explicit) {
            return Err(input_err("[[options.maps]] is only read with `delta = \"explicit\"`"));
        }
        if let Some(els) = &o.elements {
            for w in els {
                self.parse_word(w)?;
            }
        }
        Ok(())
    }

    pub fn parse_word(&self, text: &str) -> anyhow::Result<Element> {
        self.system
            .parse_word(text, &self.labels)
            .map_err(|e| input_err(format!("word {text:?}: {e}")))
    }

    pub fn word(&self, w: Element) -> String {
        self.system.format_word(w, &self.labels)
    }

    pub fn generator_index(&self, label: &str) -> anyhow::Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| input_err(format!("unknown generator {label:?}")))
    }

    pub fn subset(&self, labels: &[String]) -> anyhow::Result<GeneratorSet> {
        labels.iter().map(|l| self.generator_index(l)).collect()
    }

    pub fn describe(&self) -> String {
        format!("{} weights {:?}", self.group_name, self.weights.as_slice())
    }
}
