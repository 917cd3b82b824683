use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::Error;

/// An ordered, finite collection of distinct element labels.
///
/// Construction order is preserved and observable in every operation that
/// iterates over a universe. The optional name is display metadata: it
/// feeds the naming of absolute sets but never participates in equality.
#[derive(Debug, Clone)]
pub struct Universe {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    name: Option<String>,
}

impl Universe {
    /// Builds a universe from element labels, rejecting empty and
    /// duplicate labels.
    pub fn new<I, S>(labels: I) -> Result<Universe, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut elements = Vec::new();
        let mut index = HashMap::new();
        for label in labels {
            let label = label.into();
            if label.is_empty() {
                return Err(Error::EmptyElementLabel);
            }
            if index.insert(label.clone(), elements.len()).is_some() {
                return Err(Error::DuplicateElement(label));
            }
            elements.push(label);
        }
        Ok(Universe {
            elements,
            index,
            name: None,
        })
    }

    /// Returns the universe with the given display name.
    pub fn named(mut self, name: impl Into<String>) -> Universe {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Position of a label in construction order.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }
}

/// Equality compares element labels in order; names are ignored.
impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Universe {}

impl Hash for Universe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}
