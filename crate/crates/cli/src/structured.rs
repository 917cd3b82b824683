//! JSON export/import of families.
//!
//! Degrees travel as their exact text forms (`"0.4"`, `"1/3"`) rather
//! than binary floats, so a document parses back to a family equal to the
//! one it was written from.

use std::sync::Arc;

use nstopo_core::{Degree, NeutrosophicFamily, NeutrosophicSet, NeutrosophicTriple, Universe};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructuredUniverse {
    pub name: Option<String>,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructuredSet {
    pub name: Option<String>,
    /// One `[membership, indeterminacy, non-membership]` entry per
    /// universe element, in universe order.
    pub triples: Vec<[String; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructuredFamily {
    pub universe: StructuredUniverse,
    pub name: Option<String>,
    pub members: Vec<StructuredSet>,
}

impl StructuredFamily {
    /// Captures a family. The family must have a universe.
    pub fn from_family(family: &NeutrosophicFamily) -> Result<StructuredFamily, String> {
        let universe = family
            .universe()
            .ok_or_else(|| "family has no universe".to_owned())?;
        let members = family
            .members()
            .iter()
            .map(|set| StructuredSet {
                name: set.name().map(str::to_owned),
                triples: set
                    .triples()
                    .iter()
                    .map(|t| {
                        [
                            t.membership().to_string(),
                            t.indeterminacy().to_string(),
                            t.nonmembership().to_string(),
                        ]
                    })
                    .collect(),
            })
            .collect();
        Ok(StructuredFamily {
            universe: StructuredUniverse {
                name: universe.name().map(str::to_owned),
                elements: universe.elements().to_vec(),
            },
            name: family.name().map(str::to_owned),
            members,
        })
    }

    /// Rebuilds the family this document was written from.
    pub fn to_family(&self) -> Result<NeutrosophicFamily, String> {
        let mut universe =
            Universe::new(self.universe.elements.iter().cloned()).map_err(|e| e.to_string())?;
        if let Some(name) = &self.universe.name {
            universe = universe.named(name);
        }
        let universe = Arc::new(universe);

        let mut members = Vec::with_capacity(self.members.len());
        for member in &self.members {
            let mut triples = Vec::with_capacity(member.triples.len());
            for [m, i, n] in &member.triples {
                let parse = |text: &str| text.parse::<Degree>().map_err(|e| e.to_string());
                triples.push(NeutrosophicTriple::new(parse(m)?, parse(i)?, parse(n)?));
            }
            let mut set = NeutrosophicSet::new(Arc::clone(&universe), triples)
                .map_err(|e| e.to_string())?;
            set.set_name(member.name.clone());
            members.push(set);
        }

        let mut family = NeutrosophicFamily::new(members).map_err(|e| e.to_string())?;
        family.set_universe(universe).map_err(|e| e.to_string())?;
        family.set_name(self.name.clone());
        Ok(family)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<StructuredFamily, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }
}
