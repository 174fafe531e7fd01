//! The `w0,w1,...,wn:d` weight-spec grammar.

use fk3_core::WeightSystem;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    /// Malformed text; `column` is 1-based.
    #[error("column {column}: {message}")]
    Syntax {
        column: usize,
        message: &'static str,
    },
    /// Well-formed text describing an impossible weight system.
    #[error("column {column}: {message}")]
    Domain { column: usize, message: String },
}

impl SpecError {
    pub fn column(&self) -> usize {
        match self {
            SpecError::Syntax { column, .. } | SpecError::Domain { column, .. } => *column,
        }
    }
}

fn parse_number(token: &str, column: usize) -> Result<i64, SpecError> {
    let digits = token.strip_prefix('-').unwrap_or(token);
    if digits.is_empty() {
        return Err(SpecError::Syntax {
            column,
            message: "expected a number",
        });
    }
    if let Some(offset) = digits.find(|c: char| !c.is_ascii_digit()) {
        let column = column + token.len() - digits.len() + offset;
        return Err(SpecError::Syntax {
            column,
            message: "expected a digit",
        });
    }
    let value: i64 = token.parse().map_err(|_| SpecError::Syntax {
        column,
        message: "number out of range",
    })?;
    if value <= 0 {
        return Err(SpecError::Domain {
            column,
            message: format!("{value} is not a positive integer"),
        });
    }
    Ok(value)
}

/// Parses `w0,...,wn:d`, sorting the weights.
pub fn parse_weight_spec(text: &str) -> Result<WeightSystem, SpecError> {
    let Some(colon) = text.find(':') else {
        return Err(SpecError::Syntax {
            column: text.len() + 1,
            message: "expected ':' before the degree",
        });
    };
    let (head, degree_text) = (&text[..colon], &text[colon + 1..]);

    let mut weights = Vec::new();
    let mut column = 1;
    for token in head.split(',') {
        weights.push(parse_number(token, column)?);
        column += token.len() + 1;
    }
    let degree_column = colon + 2;
    if degree_text.contains(':') {
        let extra = degree_text.find(':').unwrap_or(0);
        return Err(SpecError::Syntax {
            column: degree_column + extra,
            message: "more than one ':'",
        });
    }
    let degree = parse_number(degree_text, degree_column)?;
    WeightSystem::from_unsorted(weights, degree).map_err(|e| SpecError::Domain {
        column: 1,
        message: e.to_string(),
    })
}

/// Canonical spec text, inverse to [`parse_weight_spec`].
pub fn render_weight_spec(ws: &WeightSystem) -> String {
    ws.to_string()
}
