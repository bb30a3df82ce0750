//! JSON schema for exact (rational) representations.
//!
//! ```json
//! {"n": 3, "kind": "cube", "dims": [[[0,1],[1,2],[2,1]]]}
//! ```
//!
//! `kind` is one of `interval`, `unit`, `box`, `cube`. `dims` holds one array
//! per dimension (exactly one for `interval` and `unit`). Each endpoint is a
//! reduced `[numerator, denominator]` pair. Interval-valued kinds store
//! `[[lo_num, lo_den], [hi_num, hi_den]]` per vertex; unit kinds store the
//! left endpoint only.

use serde::{Deserialize, Serialize};

use super::{
    BoxRepresentation, CubeRepresentation, Dimension, Interval, IntervalRepresentation,
    UnitIntervalRepresentation,
};
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepKind {
    Interval,
    Unit,
    Box,
    Cube,
}

type Pair = [i64; 2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Interval([Pair; 2]),
    Left(Pair),
}

/// Serialized form of any representation kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDoc {
    pub n: usize,
    pub kind: RepKind,
    dims: Vec<Vec<Entry>>,
}

fn pair(r: &Rational) -> Pair {
    [*r.numer(), *r.denom()]
}

fn rational(p: Pair) -> Result<Rational> {
    if p[1] == 0 {
        return Err(Error::Json(format!("zero denominator in {p:?}")));
    }
    Ok(Rational::new(p[0], p[1]))
}

fn interval_entries(d: &IntervalRepresentation<Rational>) -> Vec<Entry> {
    d.as_slice()
        .iter()
        .map(|iv| Entry::Interval([pair(&iv.lo), pair(&iv.hi)]))
        .collect()
}

fn unit_entries(d: &UnitIntervalRepresentation<Rational>) -> Vec<Entry> {
    d.lefts().iter().map(|l| Entry::Left(pair(l))).collect()
}

impl RepresentationDoc {
    pub fn from_interval(rep: &IntervalRepresentation<Rational>) -> Self {
        RepresentationDoc {
            n: rep.n(),
            kind: RepKind::Interval,
            dims: vec![interval_entries(rep)],
        }
    }

    pub fn from_unit(rep: &UnitIntervalRepresentation<Rational>) -> Self {
        RepresentationDoc {
            n: rep.n(),
            kind: RepKind::Unit,
            dims: vec![unit_entries(rep)],
        }
    }

    pub fn from_box(rep: &BoxRepresentation<Rational>) -> Self {
        RepresentationDoc {
            n: rep.n(),
            kind: RepKind::Box,
            dims: rep.dims().iter().map(interval_entries).collect(),
        }
    }

    pub fn from_cube(rep: &CubeRepresentation<Rational>) -> Self {
        RepresentationDoc {
            n: rep.n(),
            kind: RepKind::Cube,
            dims: rep.dims().iter().map(unit_entries).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("representation serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: RepresentationDoc = serde_json::from_str(text)?;
        if matches!(doc.kind, RepKind::Interval | RepKind::Unit) && doc.dims.len() != 1 {
            return Err(Error::Json(format!(
                "{:?} needs exactly one dimension",
                doc.kind
            )));
        }
        if let Some(d) = doc.dims.iter().find(|d| d.len() != doc.n) {
            return Err(Error::Json(format!(
                "dimension has {} entries, n is {}",
                d.len(),
                doc.n
            )));
        }
        Ok(doc)
    }

    fn interval_dims(&self) -> Result<Vec<IntervalRepresentation<Rational>>> {
        self.dims
            .iter()
            .map(|d| {
                let ivs = d
                    .iter()
                    .map(|e| match *e {
                        Entry::Interval([lo, hi]) => Interval::new(rational(lo)?, rational(hi)?),
                        Entry::Left(_) => Err(Error::Json("expected [lo, hi] entry".into())),
                    })
                    .collect::<Result<Vec<_>>>()?;
                IntervalRepresentation::new(ivs)
            })
            .collect()
    }

    fn unit_dims(&self) -> Result<Vec<UnitIntervalRepresentation<Rational>>> {
        self.dims
            .iter()
            .map(|d| {
                d.iter()
                    .map(|e| match *e {
                        Entry::Left(l) => rational(l),
                        Entry::Interval(_) => {
                            Err(Error::Json("expected left endpoint entry".into()))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(UnitIntervalRepresentation::new)
            })
            .collect()
    }

    /// Any kind widened to a box representation (unit intervals become
    /// their closed intervals).
    pub fn to_box(&self) -> Result<BoxRepresentation<Rational>> {
        match self.kind {
            RepKind::Interval | RepKind::Box => {
                BoxRepresentation::new(self.n, self.interval_dims()?)
            }
            RepKind::Unit | RepKind::Cube => Ok(self.to_cube()?.to_box_representation()),
        }
    }

    pub fn to_cube(&self) -> Result<CubeRepresentation<Rational>> {
        match self.kind {
            RepKind::Unit | RepKind::Cube => CubeRepresentation::new(self.n, self.unit_dims()?),
            other => Err(Error::Json(format!(
                "{other:?} is not a cube representation"
            ))),
        }
    }
}
