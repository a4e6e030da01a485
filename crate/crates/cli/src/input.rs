//! Input documents: a quiver with length-2 relations and an optional field.

use crate::CliError;
use gentle_core::{validate_named, Field, GentlePresentation, Quiver, QuiverError};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    /// `"Q"`, or any name accepted by [`Field::parse`].
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldSpec {
    pub fn resolve(&self) -> Result<Field, CliError> {
        let field = match self {
            FieldSpec::Named(name) => Field::parse(name),
            FieldSpec::Prime { fp } => Field::prime(*fp),
        };
        field.map_err(|e| CliError::Schema(e.to_string()))
    }
}

/// `relations` lists `[first, second]`, the composite "second after first".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
}

/// A parsed document together with the SHA-256 digest of its bytes.
#[derive(Clone, Debug)]
pub struct LoadedInput {
    pub document: InputDocument,
    pub digest: String,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<LoadedInput, CliError> {
        let document = serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))?;
        let digest = Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        Ok(LoadedInput { document, digest })
    }

    pub fn read(path: &std::path::Path) -> Result<LoadedInput, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        InputDocument::parse(&text)
    }

    /// Builds and validates the presentation.
    pub fn presentation(&self) -> Result<GentlePresentation, QuiverError> {
        let arrows: Vec<(&str, &str, &str)> =
            self.arrows.iter().map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str())).collect();
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let quiver = Quiver::new(&vertices, &arrows)?;
        let relations: Vec<(&str, &str)> = self.relations.iter().map(|[x, y]| (x.as_str(), y.as_str())).collect();
        validate_named(quiver, &relations)
    }

    /// The inverse of [`InputDocument::presentation`].
    pub fn from_presentation(g: &GentlePresentation, field: Option<Field>) -> InputDocument {
        let q = g.quiver();
        InputDocument {
            vertices: q.vertex_names().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowSpec {
                    name: a.name.clone(),
                    source: q.vertex_name(a.source).to_string(),
                    target: q.vertex_name(a.target).to_string(),
                })
                .collect(),
            relations: g
                .relations()
                .iter()
                .map(|&(x, y)| [q.arrow(x).name.clone(), q.arrow(y).name.clone()])
                .collect(),
            field: field.map(|f| match f {
                Field::Rational => FieldSpec::Named("Q".into()),
                Field::Prime(p) => FieldSpec::Prime { fp: p },
            }),
        }
    }
}

/// Field precedence: command-line flag, then the document, then
/// `HH1_FIELD`, then `Q`.
pub fn choose_field(flag: Option<&str>, document: &InputDocument) -> Result<Field, CliError> {
    if let Some(text) = flag {
        return Field::parse(text).map_err(|e| CliError::Usage(e.to_string()));
    }
    if let Some(spec) = &document.field {
        return spec.resolve();
    }
    default_field()
}

/// `HH1_FIELD` if set, otherwise `Q`.
pub fn default_field() -> Result<Field, CliError> {
    match std::env::var("HH1_FIELD") {
        Ok(text) => Field::parse(&text).map_err(|e| CliError::Usage(format!("HH1_FIELD: {e}"))),
        Err(_) => Ok(Field::Rational),
    }
}
