//! Output records and per-format rendering.
//!
//! The JSON shape of every record round-trips through its own parser; the
//! enum is untagged, so each variant is recognized by its field set.

use serde::{Deserialize, Serialize};

use qdivisor_core::erdos_nicolas::MeanPoint;
use qdivisor_core::kr_poly::term_string;
use qdivisor_core::{KrPolynomial, PerimeterDecision, WindowWitness};

/// One structured output row. Serialized compactly, one record per line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OutputRecord {
    Poly {
        n: u64,
        degree: u64,
        coefficients: Vec<u64>,
    },
    FValue {
        n: u64,
        value: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        chain: Option<Vec<u64>>,
    },
    Perimeter {
        n: u64,
        is_perimeter: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        triangle: Option<[u64; 3]>,
        #[serde(skip_serializing_if = "Option::is_none")]
        perimeter: Option<u64>,
    },
    Mean {
        x: u64,
        numerator: u64,
        denominator: u64,
        decimal: String,
    },
    Verify {
        suite: String,
        scale: u64,
        checked: u64,
        pass: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        counterexample: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordKind {
    Poly,
    FValue,
    Perimeter,
    Mean,
    Verify,
}

impl OutputRecord {
    pub fn kind(&self) -> RecordKind {
        match self {
            OutputRecord::Poly { .. } => RecordKind::Poly,
            OutputRecord::FValue { .. } => RecordKind::FValue,
            OutputRecord::Perimeter { .. } => RecordKind::Perimeter,
            OutputRecord::Mean { .. } => RecordKind::Mean,
            OutputRecord::Verify { .. } => RecordKind::Verify,
        }
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_poly(poly: &KrPolynomial) -> Self {
        OutputRecord::Poly {
            n: poly.n(),
            degree: poly.degree(),
            coefficients: poly.full_coefficients(),
        }
    }

    pub fn from_witness(witness: &WindowWitness) -> Self {
        OutputRecord::FValue {
            n: witness.n(),
            value: witness.value(),
            chain: Some(witness.chain().to_vec()),
        }
    }

    pub fn from_scan_row(n: u64, value: u64) -> Self {
        OutputRecord::FValue {
            n,
            value,
            chain: None,
        }
    }

    pub fn from_decision(decision: &PerimeterDecision) -> Self {
        OutputRecord::Perimeter {
            n: decision.n,
            is_perimeter: decision.is_perimeter,
            triangle: decision.witness.map(|w| {
                let (a, b, c) = w.sides();
                [a, b, c]
            }),
            perimeter: decision.witness.map(|w| w.perimeter()),
        }
    }

    pub fn from_mean_point(point: &MeanPoint) -> Self {
        OutputRecord::Mean {
            x: point.x(),
            numerator: point.numerator(),
            denominator: point.denominator(),
            decimal: point.decimal(),
        }
    }
}

/// Width at which the human polynomial listing wraps.
pub const POLY_WRAP_WIDTH: usize = 72;

/// Joins terms with " + ", wrapping lines at `width`; continuation lines
/// begin with "+ ".
pub fn wrap_terms(terms: &[String], width: usize) -> String {
    let mut lines: Vec<String> = Vec::new();
    let mut line = String::new();
    for term in terms {
        if line.is_empty() {
            line.push_str(term);
        } else if line.len() + 3 + term.len() > width {
            lines.push(std::mem::take(&mut line));
            line.push_str("+ ");
            line.push_str(term);
        } else {
            line.push_str(" + ");
            line.push_str(term);
        }
    }
    if !line.is_empty() {
        lines.push(line);
    }
    lines.join("\n")
}

/// The polynomial in descending powers, line-wrapped.
pub fn poly_human(poly: &KrPolynomial) -> String {
    let full = poly.full_coefficients();
    let terms: Vec<String> = full
        .iter()
        .enumerate()
        .rev()
        .filter(|&(_, &c)| c != 0)
        .map(|(power, &c)| term_string(c, power as u64))
        .collect();
    wrap_terms(&terms, POLY_WRAP_WIDTH)
}

/// CSV listing of the polynomial: one row per power, ascending.
pub fn poly_csv(poly: &KrPolynomial) -> String {
    let mut out = String::from("exponent,coefficient\n");
    for (power, &c) in poly.full_coefficients().iter().enumerate() {
        out.push_str(&format!("{power},{c}\n"));
    }
    out
}

pub fn witness_csv(witness: &WindowWitness) -> String {
    let chain: Vec<String> = witness.chain().iter().map(u64::to_string).collect();
    format!(
        "n,value,chain\n{},{},{}\n",
        witness.n(),
        witness.value(),
        chain.join(" ")
    )
}

pub fn decision_human(decision: &PerimeterDecision) -> String {
    let two_n = 2 * decision.n;
    if !decision.is_perimeter {
        return format!("2n = {two_n} is not the perimeter of a Pythagorean triangle");
    }
    match decision.witness {
        Some(w) => {
            let (a, b, c) = w.sides();
            format!("2n = {two_n} is the perimeter of a Pythagorean triangle: ({a}, {b}, {c})")
        }
        None => format!(
            "2n = {two_n} is the perimeter of a Pythagorean triangle (witness skipped at this scale)"
        ),
    }
}

pub fn decision_csv(decision: &PerimeterDecision) -> String {
    let mut out = String::from("n,is_perimeter,a,b,c,perimeter\n");
    match decision.witness {
        Some(w) => {
            let (a, b, c) = w.sides();
            out.push_str(&format!(
                "{},{},{a},{b},{c},{}\n",
                decision.n,
                decision.is_perimeter,
                w.perimeter()
            ));
        }
        None => out.push_str(&format!("{},{},,,,\n", decision.n, decision.is_perimeter)),
    }
    out
}

/// `x numerator/denominator decimal`, one row per checkpoint.
pub fn mean_row_human(point: &MeanPoint) -> String {
    format!(
        "{} {}/{} {}",
        point.x(),
        point.numerator(),
        point.denominator(),
        point.decimal()
    )
}

/// One b-file line: `n value`.
pub fn bfile_line(n: u64, value: u64) -> String {
    format!("{n} {value}\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use qdivisor_core::kr_poly::polynomial;

    #[test]
    fn poly_json_shape() {
        let record = OutputRecord::from_poly(&polynomial(6).unwrap());
        assert_eq!(
            record.to_json(),
            r#"{"n":6,"degree":10,"coefficients":[1,1,1,1,1,2,1,1,1,1,1]}"#
        );
    }

    #[test]
    fn json_round_trips() {
        let records = vec![
            OutputRecord::from_poly(&polynomial(12).unwrap()),
            OutputRecord::from_scan_row(5, 1),
            OutputRecord::Perimeter {
                n: 7,
                is_perimeter: false,
                triangle: None,
                perimeter: None,
            },
            OutputRecord::Mean {
                x: 10,
                numerator: 11,
                denominator: 10,
                decimal: "1.100000".into(),
            },
            OutputRecord::Verify {
                suite: "reflection".into(),
                scale: 100,
                checked: 100,
                pass: true,
                counterexample: None,
            },
        ];
        for record in records {
            let json = record.to_json();
            let parsed: OutputRecord = serde_json::from_str(&json).unwrap();
            assert_eq!(parsed, record, "{json}");
            assert_eq!(parsed.kind(), record.kind());
        }
    }

    #[test]
    fn wrapping_is_stable() {
        let terms: Vec<String> = (0..9).map(|k| format!("q^{k}")).collect();
        assert_eq!(
            wrap_terms(&terms, 20),
            "q^0 + q^1 + q^2\n+ q^3 + q^4 + q^5\n+ q^6 + q^7 + q^8"
        );
        assert_eq!(wrap_terms(&["1".to_string()], 20), "1");
    }

    #[test]
    fn poly_human_skips_zero_terms() {
        assert_eq!(poly_human(&polynomial(3).unwrap()), "q^4 + q^3 + q + 1");
        assert_eq!(poly_human(&polynomial(1).unwrap()), "1");
    }
}
