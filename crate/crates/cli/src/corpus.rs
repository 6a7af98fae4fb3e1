//! Named fixtures, bundled into the binary or read from a directory.
//!
//! A corpus directory has the subdirectories `fronts`, `framed`, `singular`,
//! `paths`, `ladders` and `descriptors`, each holding `*.json` files named
//! after their fixture. Missing subdirectories are empty.

use std::fs;
use std::path::{Path, PathBuf};

use knotframe::framed::{FramedDiagram, MoveSequence};
use knotframe::fronts::{stabilize, OrientedFront};
use knotframe::topology::ManifoldDescriptor;
use knotframe::vassiliev::{InvariantLadder, SingularFramedDiagram};
use serde::de::DeserializeOwned;
use thiserror::Error;

use crate::schema::{
    DescriptorJson, FramedJson, FrontJson, LadderJson, PathJson, SchemaError, SingularJson,
};

/// Environment variable naming a corpus directory to use instead of the
/// bundled one.
pub const CORPUS_ENV: &str = "KNOTFRAME_CORPUS";

/// Fronts that get a stabilization grid, and its size (`i + j <= GRID_MAX`).
pub const GRID_BASES: [&str; 2] = ["unknot", "trefoil"];
pub const GRID_MAX: usize = 4;

pub const KINDS: [&str; 6] = [
    "fronts",
    "framed",
    "singular",
    "paths",
    "ladders",
    "descriptors",
];

#[derive(Debug, Error)]
pub enum CorpusLoadError {
    #[error("fixture {fixture}: {source}")]
    Fixture {
        fixture: String,
        #[source]
        source: SchemaError,
    },
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CorpusLoadError {
    /// `kind/name` of the offending fixture, if the error is about one.
    pub fn fixture(&self) -> Option<&str> {
        match self {
            CorpusLoadError::Fixture { fixture, .. } => Some(fixture),
            CorpusLoadError::Io { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
}

/// The stabilization `K^{i,j}` of the front named `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridEntry {
    pub base: String,
    pub i: usize,
    pub j: usize,
    pub front: OrientedFront,
}

/// A fixture file before parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Source {
    pub kind: String,
    pub name: String,
    pub text: String,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub fronts: Vec<Named<OrientedFront>>,
    pub grid: Vec<GridEntry>,
    pub framed: Vec<Named<FramedDiagram>>,
    pub singular: Vec<Named<SingularFramedDiagram>>,
    pub paths: Vec<Named<MoveSequence>>,
    pub ladders: Vec<Named<InvariantLadder<i64>>>,
    pub descriptors: Vec<Named<ManifoldDescriptor>>,
    sources: Vec<Source>,
}

macro_rules! bundled {
    ($($kind:literal / $name:literal),* $(,)?) => {
        &[$(($kind, $name, include_str!(concat!("../corpus/", $kind, "/", $name, ".json")))),*]
    };
}

const BUNDLED: &[(&str, &str, &str)] = bundled![
    "fronts" / "unknot",
    "fronts" / "zigzag_down",
    "fronts" / "zigzag_up",
    "fronts" / "trefoil",
    "fronts" / "trefoil_reverse",
    "fronts" / "trefoil_triple_point",
    "framed" / "unknot",
    "framed" / "trefoil",
    "framed" / "trefoil_twisted",
    "framed" / "figure_eight",
    "framed" / "six_crossing",
    "framed" / "cinquefoil",
    "singular" / "trefoil_1",
    "singular" / "trefoil_2",
    "singular" / "trefoil_23",
    "singular" / "figure_eight_1",
    "singular" / "figure_eight_2",
    "singular" / "figure_eight_24",
    "singular" / "six_crossing_1",
    "singular" / "six_crossing_2",
    "singular" / "six_crossing_16",
    "singular" / "cinquefoil_1",
    "singular" / "cinquefoil_2",
    "singular" / "cinquefoil_3",
    "paths" / "gamma4",
    "paths" / "homotopy",
    "ladders" / "trefoil",
    "ladders" / "unknot",
    "ladders" / "constant",
    "descriptors" / "s1xs2",
    "descriptors" / "tight",
    "descriptors" / "torsion",
    "descriptors" / "atoroidal",
];

fn parse<T: DeserializeOwned, U>(
    src: &Source,
    convert: impl FnOnce(&T) -> Result<U, SchemaError>,
) -> Result<Named<U>, CorpusLoadError> {
    let wrap = |source| CorpusLoadError::Fixture {
        fixture: format!("{}/{}", src.kind, src.name),
        source,
    };
    let doc: T = serde_json::from_str(&src.text).map_err(|e| wrap(e.into()))?;
    let value = convert(&doc).map_err(wrap)?;
    Ok(Named {
        name: src.name.clone(),
        value,
    })
}

impl Corpus {
    pub fn bundled() -> Corpus {
        let sources = BUNDLED
            .iter()
            .map(|(kind, name, text)| Source {
                kind: kind.to_string(),
                name: name.to_string(),
                text: text.to_string(),
            })
            .collect();
        Corpus::from_sources(sources).expect("bundled corpus validates")
    }

    /// The directory named by [`CORPUS_ENV`] if set, the bundled corpus
    /// otherwise.
    pub fn load() -> Result<Corpus, CorpusLoadError> {
        match std::env::var_os(CORPUS_ENV) {
            Some(dir) => Corpus::from_dir(Path::new(&dir)),
            None => Ok(Corpus::bundled()),
        }
    }

    pub fn from_dir(dir: &Path) -> Result<Corpus, CorpusLoadError> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CorpusLoadError::Io { path, source }
        };
        let mut sources = Vec::new();
        for kind in KINDS {
            let sub = dir.join(kind);
            if !sub.is_dir() {
                continue;
            }
            let mut files = Vec::new();
            for entry in fs::read_dir(&sub).map_err(io(&sub))? {
                let path = entry.map_err(io(&sub))?.path();
                if path.extension().is_some_and(|e| e == "json") {
                    files.push(path);
                }
            }
            files.sort();
            for path in files {
                let text = fs::read_to_string(&path).map_err(io(&path))?;
                let name = path
                    .file_stem()
                    .unwrap_or_default()
                    .to_string_lossy()
                    .into_owned();
                sources.push(Source {
                    kind: kind.to_string(),
                    name,
                    text,
                });
            }
        }
        Corpus::from_sources(sources)
    }

    /// Parses and validates every source; the first bad fixture aborts the
    /// load. Sources of an unknown kind are ignored. Fixtures are kept sorted
    /// by name whatever order they arrive in.
    pub fn from_sources(mut sources: Vec<Source>) -> Result<Corpus, CorpusLoadError> {
        sources.sort_by(|a, b| (&a.kind, &a.name).cmp(&(&b.kind, &b.name)));
        let mut c = Corpus::default();
        for src in &sources {
            match src.kind.as_str() {
                "fronts" => c.fronts.push(parse(src, FrontJson::to_front)?),
                "framed" => c.framed.push(parse(src, FramedJson::to_framed)?),
                "singular" => c.singular.push(parse(src, SingularJson::to_singular)?),
                "paths" => c.paths.push(parse(src, PathJson::to_path)?),
                "ladders" => c.ladders.push(parse(src, LadderJson::to_ladder)?),
                "descriptors" => c
                    .descriptors
                    .push(parse(src, DescriptorJson::to_descriptor)?),
                _ => {}
            }
        }
        for base in GRID_BASES {
            let Some(f) = find(&c.fronts, base) else {
                continue;
            };
            for i in 0..=GRID_MAX {
                for j in 0..=GRID_MAX - i {
                    c.grid.push(GridEntry {
                        base: base.to_string(),
                        i,
                        j,
                        front: stabilize(f, i, j),
                    });
                }
            }
        }
        c.sources = sources;
        Ok(c)
    }

    /// The raw fixture texts, in load order.
    pub fn sources(&self) -> &[Source] {
        &self.sources
    }

    pub fn front(&self, name: &str) -> Option<&OrientedFront> {
        find(&self.fronts, name)
    }

    pub fn framed(&self, name: &str) -> Option<&FramedDiagram> {
        find(&self.framed, name)
    }

    pub fn path(&self, name: &str) -> Option<&MoveSequence> {
        find(&self.paths, name)
    }

    pub fn ladder(&self, name: &str) -> Option<&InvariantLadder<i64>> {
        find(&self.ladders, name)
    }

    pub fn descriptor(&self, name: &str) -> Option<&ManifoldDescriptor> {
        find(&self.descriptors, name)
    }
}

fn find<'a, T>(items: &'a [Named<T>], name: &str) -> Option<&'a T> {
    items.iter().find(|n| n.name == name).map(|n| &n.value)
}
