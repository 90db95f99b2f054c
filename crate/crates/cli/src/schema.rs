//! JSON documents for images and maps.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use shy_core::maps::MapError;
use shy_core::topology::{EdgeSet, ImageError};
use shy_core::{Adjacency, DigitalFunction, DigitalImage, Point};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {source}")]
    Image {
        field: &'static str,
        #[source]
        source: ImageError,
    },
    #[error("pairs: {0}")]
    Map(#[from] MapError),
}

fn at(field: &'static str) -> impl FnOnce(ImageError) -> SchemaError {
    move |source| SchemaError::Image { field, source }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AdjacencyDoc {
    Cu {
        u: usize,
    },
    Explicit {
        edges: Vec<(Point, Point)>,
    },
    NormalProduct {
        left: Box<AdjacencyDoc>,
        left_dim: usize,
        right: Box<AdjacencyDoc>,
        right_dim: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageDoc {
    pub dimension: usize,
    pub adjacency: AdjacencyDoc,
    pub points: Vec<Point>,
}

/// `domain` and `codomain` optionally name image files, relative to the map file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codomain: Option<String>,
    pub pairs: Vec<(Point, Point)>,
}

impl AdjacencyDoc {
    fn to_adjacency(&self) -> Result<Adjacency, SchemaError> {
        Ok(match self {
            AdjacencyDoc::Cu { u } => Adjacency::Cu(*u),
            AdjacencyDoc::Explicit { edges } => {
                Adjacency::Explicit(EdgeSet::from_pairs(edges.iter().cloned()).map_err(at("adjacency.edges"))?)
            }
            AdjacencyDoc::NormalProduct {
                left,
                left_dim,
                right,
                right_dim,
            } => Adjacency::normal_product(left.to_adjacency()?, *left_dim, right.to_adjacency()?, *right_dim),
        })
    }

    fn from_adjacency(adj: &Adjacency) -> Self {
        match adj {
            Adjacency::Cu(u) => AdjacencyDoc::Cu { u: *u },
            Adjacency::Explicit(edges) => AdjacencyDoc::Explicit {
                edges: edges.edges().map(|(a, b)| (a.clone(), b.clone())).collect(),
            },
            Adjacency::NormalProduct {
                left,
                left_dim,
                right,
                right_dim,
            } => AdjacencyDoc::NormalProduct {
                left: Box::new(Self::from_adjacency(left)),
                left_dim: *left_dim,
                right: Box::new(Self::from_adjacency(right)),
                right_dim: *right_dim,
            },
        }
    }
}

impl ImageDoc {
    pub fn to_image(&self) -> Result<DigitalImage, SchemaError> {
        let adjacency = self.adjacency.to_adjacency()?;
        adjacency.validate(self.dimension).map_err(at("adjacency"))?;
        DigitalImage::new(self.dimension, adjacency, self.points.iter().cloned()).map_err(|e| {
            let field = match e {
                ImageError::ZeroDimension => "dimension",
                ImageError::EdgeOutsideImage(_) => "adjacency.edges",
                _ => "points",
            };
            SchemaError::Image { field, source: e }
        })
    }

    pub fn from_image(img: &DigitalImage) -> Self {
        ImageDoc {
            dimension: img.dim(),
            adjacency: AdjacencyDoc::from_adjacency(img.adjacency()),
            points: img.points().to_vec(),
        }
    }
}

pub fn parse_image(text: &str) -> Result<DigitalImage, SchemaError> {
    serde_json::from_str::<ImageDoc>(text)?.to_image()
}

pub fn parse_map_doc(text: &str) -> Result<MapDoc, SchemaError> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_map(text: &str, domain: Arc<DigitalImage>, codomain: Arc<DigitalImage>) -> Result<DigitalFunction, SchemaError> {
    map_from_doc(&parse_map_doc(text)?, domain, codomain)
}

pub fn map_from_doc(doc: &MapDoc, domain: Arc<DigitalImage>, codomain: Arc<DigitalImage>) -> Result<DigitalFunction, SchemaError> {
    Ok(DigitalFunction::from_pairs(domain, codomain, doc.pairs.iter().cloned())?)
}

pub fn serialize_image(img: &DigitalImage) -> String {
    serde_json::to_string_pretty(&ImageDoc::from_image(img)).expect("image documents serialize")
}

pub fn serialize_map(f: &DigitalFunction) -> String {
    let doc = MapDoc {
        domain: None,
        codomain: None,
        pairs: f.pairs().map(|(x, y)| (x.clone(), y.clone())).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("map documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use shy_core::constructions::{interval, product_image, simple_closed_curve, three_branch_tree};

    #[test]
    fn interval_document() {
        let img = parse_image(r#"{"dimension":1,"adjacency":{"kind":"cu","u":1},"points":[[0],[1],[2]]}"#).unwrap();
        assert_eq!(img, interval(0, 2).unwrap());
    }

    #[test]
    fn duplicate_points_rejected() {
        let err = parse_image(r#"{"dimension":1,"adjacency":{"kind":"cu","u":1},"points":[[0],[1],[1]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("points:"), "{err}");
    }

    #[test]
    fn schema_violations_carry_context() {
        let err = parse_image("{\"dimension\":1,\n\"adjacency\":{\"kind\":\"cu\"},\"points\":[]}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("missing field `u`") && msg.contains("line 2"), "{msg}");
        let err = parse_image(r#"{"dimension":1,"adjacency":{"kind":"cu","u":2},"points":[[0]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("adjacency:"));
        let err = parse_image(r#"{"dimension":2,"adjacency":{"kind":"cu","u":1},"points":[[0]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("points:"));
        let err = parse_image(r#"{"dimension":1,"adjacency":{"kind":"hex"},"points":[]}"#).unwrap_err();
        assert!(matches!(err, SchemaError::Json(_)));
        let err = parse_image(r#"{"dimension":1,"adjacency":{"kind":"explicit","edges":[[[0],[0]]]},"points":[[0]]}"#)
            .unwrap_err();
        assert!(err.to_string().starts_with("adjacency.edges:"));
    }

    #[test]
    fn constructible_images_survive_serialization() {
        for img in [
            interval(-2, 3).unwrap(),
            simple_closed_curve(5).unwrap(),
            (*three_branch_tree().image).clone(),
            product_image(&interval(0, 1).unwrap(), &simple_closed_curve(4).unwrap()),
        ] {
            assert_eq!(parse_image(&serialize_image(&img)).unwrap(), img);
        }
    }

    #[test]
    fn map_documents() {
        let x = Arc::new(interval(0, 2).unwrap());
        let y = Arc::new(interval(0, 1).unwrap());
        let f = parse_map(r#"{"pairs":[[[0],[0]],[[1],[0]],[[2],[1]]]}"#, x.clone(), y.clone()).unwrap();
        assert_eq!(f.values(), &[0, 0, 1]);
        assert!(f.is_shy());
        assert_eq!(parse_map(&serialize_map(&f), x.clone(), y.clone()).unwrap(), f);
        assert!(parse_map(r#"{"pairs":[[[0],[0]],[[1],[0]]]}"#, x.clone(), y.clone()).is_err());
        assert!(parse_map(r#"{"pairs":[[[0],[0]],[[1],[0]],[[2],[5]]]}"#, x, y).is_err());
    }
}
