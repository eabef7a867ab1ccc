//! JSON input files. See `docs/formats.md` for the field reference.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use sha2::{Digest, Sha256};

use invsg::{close, CayleyTable, FiniteAction, FiniteInverseSemigroup, PartialBijection};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Deserialize)]
struct SemigroupFile {
    version: u32,
    #[serde(flatten)]
    body: SemigroupBody,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum SemigroupBody {
    Generators {
        ground_size: usize,
        generators: Vec<Vec<[usize; 2]>>,
    },
    Table {
        mul: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

/// Either an element index or an element label.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Label(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionFile {
    version: u32,
    semigroup: PathBuf,
    space_size: usize,
    domains: Vec<DomainEntry>,
    act: Vec<Vec<[usize; 2]>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DomainEntry {
    idempotent: ElementRef,
    points: Vec<usize>,
}

/// A semigroup read from disk, with the partial bijections behind each index when
/// it came from generators.
#[derive(Debug, Clone)]
pub struct LoadedSemigroup {
    pub semigroup: FiniteInverseSemigroup,
    pub elements: Option<Vec<PartialBijection>>,
    pub generator_count: Option<usize>,
}

#[derive(Debug)]
pub struct LoadedAction {
    pub semigroup: LoadedSemigroup,
    pub space_size: usize,
    pub domains: Vec<(usize, Vec<usize>)>,
    pub maps: Vec<PartialBijection>,
}

impl LoadedAction {
    pub fn action(&self) -> Result<FiniteAction<'_>, CliError> {
        FiniteAction::new(&self.semigroup.semigroup, self.space_size, &self.domains, self.maps.clone())
            .map_err(|e| CliError::Parse(e.to_string()))
    }
}

/// Streaming digest over every byte the command reads.
#[derive(Default)]
pub struct InputDigest(Sha256);

impl InputDigest {
    pub fn update(&mut self, bytes: &[u8]) {
        self.0.update((bytes.len() as u64).to_le_bytes());
        self.0.update(bytes);
    }

    pub fn finish(self) -> String {
        format!("sha256:{:x}", self.0.finalize())
    }
}

fn read(path: &Path, digest: &mut InputDigest) -> Result<String, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    digest.update(text.as_bytes());
    Ok(text)
}

fn check_version(version: u32) -> Result<(), CliError> {
    if version != FORMAT_VERSION {
        return Err(CliError::Parse(format!("unsupported format version {version}, expected {FORMAT_VERSION}")));
    }
    Ok(())
}

fn structural(e: invsg::Error) -> CliError {
    match e {
        invsg::Error::BudgetExceeded { budget } => CliError::Budget(budget),
        other => CliError::Parse(other.to_string()),
    }
}

pub fn parse_semigroup(text: &str, budget: usize) -> Result<LoadedSemigroup, CliError> {
    let file: SemigroupFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    check_version(file.version)?;
    match file.body {
        SemigroupBody::Generators { ground_size, generators } => {
            let generators = generators
                .iter()
                .map(|pairs| {
                    let pairs: Vec<(usize, usize)> = pairs.iter().map(|[x, y]| (*x, *y)).collect();
                    PartialBijection::from_pairs(ground_size, &pairs)
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(structural)?;
            let closure = close(&generators, budget).map_err(structural)?;
            Ok(LoadedSemigroup {
                semigroup: closure.semigroup,
                elements: Some(closure.elements),
                generator_count: Some(generators.len()),
            })
        }
        SemigroupBody::Table { mul, labels } => {
            if let Some(labels) = &labels {
                if labels.len() != mul.len() {
                    return Err(CliError::Parse(format!("{} labels for {} elements", labels.len(), mul.len())));
                }
            }
            let table = CayleyTable::from_rows(&mul).map_err(structural)?;
            let semigroup = FiniteInverseSemigroup::from_table(table, labels).map_err(structural)?;
            Ok(LoadedSemigroup { semigroup, elements: None, generator_count: None })
        }
    }
}

pub fn load_semigroup(path: &Path, budget: usize, digest: &mut InputDigest) -> Result<LoadedSemigroup, CliError> {
    parse_semigroup(&read(path, digest)?, budget)
}

/// Reads an action file and the semigroup it names, relative to the action file.
pub fn load_action(path: &Path, budget: usize, digest: &mut InputDigest) -> Result<LoadedAction, CliError> {
    let text = read(path, digest)?;
    let file: ActionFile = serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
    check_version(file.version)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let semigroup = load_semigroup(&base.join(&file.semigroup), budget, digest)?;
    let domains = file
        .domains
        .iter()
        .map(|d| Ok((resolve_element(&semigroup.semigroup, &d.idempotent)?, d.points.clone())))
        .collect::<Result<Vec<_>, CliError>>()?;
    let maps = file
        .act
        .iter()
        .map(|pairs| {
            let pairs: Vec<(usize, usize)> = pairs.iter().map(|[x, y]| (*x, *y)).collect();
            PartialBijection::from_pairs(file.space_size, &pairs)
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(structural)?;
    Ok(LoadedAction { semigroup, space_size: file.space_size, domains, maps })
}

fn normalize(label: &str) -> String {
    label.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Looks an element up by label (whitespace-insensitive), then by index.
pub fn resolve_element(semigroup: &FiniteInverseSemigroup, element: &ElementRef) -> Result<usize, CliError> {
    let index = match element {
        ElementRef::Index(i) => Some(*i),
        ElementRef::Label(text) => {
            let wanted = normalize(text);
            semigroup
                .elements()
                .find(|&s| normalize(&semigroup.label(s)) == wanted)
                .or_else(|| text.trim().parse().ok())
        }
    };
    match index {
        Some(i) if i < semigroup.order() => Ok(i),
        _ => Err(CliError::Parse(format!("no element {element:?} in a semigroup of order {}", semigroup.order()))),
    }
}
