//! JSON report documents shared by the Nichols and Fomin–Kirillov engines.

use serde::Serialize;

use crate::yd::CharacterSpec;

pub const SCHEMA_VERSION: &str = "1";

/// How a dimension was certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certification {
    /// Exact arithmetic over the rationals.
    Exact,
    /// Ranks agreed modulo two independently drawn primes.
    TwoPrime { primes: [u64; 2] },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algebra {
    Nichols,
    Fk,
}

/// Per-degree dimensions of a graded algebra generated in degree one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub schema: &'static str,
    pub algebra: Algebra,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<CharacterSpec>,
    pub degrees: Vec<usize>,
    pub dims: Vec<u64>,
    /// Sum of `dims`, present once a zero component was reached.
    pub total: Option<u64>,
    pub certified_finite: bool,
    pub field: String,
    pub certification: Certification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl DimensionReport {
    pub fn new(
        algebra: Algebra,
        n: usize,
        character: Option<CharacterSpec>,
        dims: Vec<u64>,
        field: impl Into<String>,
        certification: Certification,
    ) -> Self {
        let certified_finite = dims.last() == Some(&0);
        DimensionReport {
            schema: SCHEMA_VERSION,
            algebra,
            n,
            character,
            degrees: (0..dims.len()).collect(),
            total: certified_finite.then(|| dims.iter().sum()),
            certified_finite,
            dims,
            field: field.into(),
            certification,
            elapsed_ms: None,
        }
    }

    pub fn dim(&self, degree: usize) -> Option<u64> {
        match self.dims.get(degree) {
            Some(&d) => Some(d),
            None if self.certified_finite => Some(0),
            None => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// `degree,dim` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,dim\n");
        for (d, v) in self.degrees.iter().zip(&self.dims) {
            out.push_str(&format!("{d},{v}\n"));
        }
        out
    }
}
