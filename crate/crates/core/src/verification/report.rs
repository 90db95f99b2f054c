use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::maps::DigitalFunction;
use crate::topology::Point;

/// Outcome of one theorem audit.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub instances_checked: u64,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
    #[serde(serialize_with = "as_seconds")]
    pub wall_time: Duration,
}

fn as_seconds<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// A map given by its `(x, f(x))` pairs, in the map file layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapRecord {
    pub pairs: Vec<(Point, Point)>,
}

impl From<&DigitalFunction> for MapRecord {
    fn from(f: &DigitalFunction) -> Self {
        MapRecord {
            pairs: f.pairs().map(|(x, y)| (x.clone(), y.clone())).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub description: String,
    pub maps: Vec<MapRecord>,
    /// The subset, pair or point that exhibits the failure.
    pub witness: Vec<Point>,
}

impl Counterexample {
    pub fn new(description: impl Into<String>, maps: &[&DigitalFunction], witness: Vec<Point>) -> Self {
        Counterexample {
            description: description.into(),
            maps: maps.iter().map(|f| MapRecord::from(*f)).collect(),
            witness,
        }
    }
}

impl VerificationReport {
    pub(crate) fn finish(theorem_id: &str, instances_checked: u64, counterexamples: Vec<Counterexample>, started: Instant) -> Self {
        VerificationReport {
            theorem_id: theorem_id.to_string(),
            instances_checked,
            passed: counterexamples.is_empty(),
            counterexamples,
            wall_time: started.elapsed(),
        }
    }

    /// Combines per-instance reports into one under `theorem_id`, keeping
    /// counterexamples in input order.
    pub fn merge(theorem_id: &str, parts: impl IntoIterator<Item = VerificationReport>) -> Self {
        let mut out = VerificationReport {
            theorem_id: theorem_id.to_string(),
            instances_checked: 0,
            passed: true,
            counterexamples: Vec::new(),
            wall_time: Duration::ZERO,
        };
        for part in parts {
            out.instances_checked += part.instances_checked;
            out.counterexamples.extend(part.counterexamples);
            out.wall_time += part.wall_time;
        }
        out.passed = out.counterexamples.is_empty();
        out
    }
}
