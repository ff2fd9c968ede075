use std::fmt;

/// One named identity check and its outcome; failures carry a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub outcome: Result<(), String>,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, outcome: Result<(), String>) -> Self {
        CheckLine { name: name.into(), outcome }
    }

    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Ok(()) => write!(f, "{}: OK", self.name),
            Err(w) => write!(f, "{}: FAIL ({w})", self.name),
        }
    }
}

pub fn all_passed(lines: &[CheckLine]) -> bool {
    lines.iter().all(CheckLine::passed)
}
