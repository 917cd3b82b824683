//! Parsing of universe/set literals and of the `.nst` script format.
//!
//! Scripts are line oriented. `#` starts a comment and blank lines are
//! ignored. Three declaration forms exist:
//!
//! ```text
//! universe U = a,b,c
//! nset A1 over U = (0.4,0.4,0.3), (0.1,0.1,0.1), (0.2,0.2,0.2)
//! family L = { A1, A2 }
//! family T = {} over U
//! ```
//!
//! Identifiers are unique within a document, every reference resolves to
//! a prior declaration, and the declared identifier becomes the object's
//! display name. Set literals come in a positional form (one `(m,i,n)`
//! triple per universe element, in order) and a keyed form
//! (`< a/(m,i,n), b/(m,i,n), … >` covering every element exactly once);
//! degrees are exact decimals or fractions `p/q` in `[0,1]`.
//!
//! Errors always carry a 1-based line and column; no partial documents
//! are returned.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::degree::{Degree, NeutrosophicTriple};
use crate::family::NeutrosophicFamily;
use crate::set::NeutrosophicSet;
use crate::universe::Universe;

/// A parse failure with its position in the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// One parsed declaration, in document order.
#[derive(Debug, Clone)]
pub struct Declaration {
    pub identifier: String,
    pub line: usize,
    pub value: Value,
}

/// The payload of a declaration.
#[derive(Debug, Clone)]
pub enum Value {
    Universe(Arc<Universe>),
    Set(NeutrosophicSet),
    Family(NeutrosophicFamily),
}

/// A fully resolved script: ordered declarations plus lookup by
/// identifier.
#[derive(Debug, Clone, Default)]
pub struct ScriptDocument {
    declarations: Vec<Declaration>,
    index: HashMap<String, usize>,
}

impl ScriptDocument {
    pub fn declarations(&self) -> &[Declaration] {
        &self.declarations
    }

    pub fn len(&self) -> usize {
        self.declarations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.declarations.is_empty()
    }

    pub fn get(&self, identifier: &str) -> Option<&Value> {
        self.index.get(identifier).map(|&i| &self.declarations[i].value)
    }

    pub fn universe(&self, identifier: &str) -> Option<&Arc<Universe>> {
        match self.get(identifier) {
            Some(Value::Universe(u)) => Some(u),
            _ => None,
        }
    }

    pub fn set(&self, identifier: &str) -> Option<&NeutrosophicSet> {
        match self.get(identifier) {
            Some(Value::Set(s)) => Some(s),
            _ => None,
        }
    }

    pub fn family(&self, identifier: &str) -> Option<&NeutrosophicFamily> {
        match self.get(identifier) {
            Some(Value::Family(f)) => Some(f),
            _ => None,
        }
    }
}

/// Character-oriented scanner over one line (or standalone literal).
/// Columns are 1-based counts of Unicode scalar values.
struct Cursor<'a> {
    text: &'a str,
    /// Byte offset into `text`.
    pos: usize,
    line: usize,
    /// Column of `text`'s first character within the original line.
    base_col: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize, base_col: usize) -> Self {
        Cursor {
            text,
            pos: 0,
            line,
            base_col,
        }
    }

    fn column_at(&self, byte_pos: usize) -> usize {
        self.base_col + self.text[..byte_pos].chars().count()
    }

    fn error_at(&self, byte_pos: usize, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column_at(byte_pos), message)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    fn expect(&mut self, expected: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == expected => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{expected}', found '{c}'"))),
            None => Err(self.error(format!("expected '{expected}', found end of input"))),
        }
    }

    /// Consumes up to (not including) any of `stops` or the end of input.
    /// Returns the raw slice and its starting byte offset.
    fn take_until(&mut self, stops: &[char]) -> (&'a str, usize) {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if stops.contains(&c) {
                break;
            }
            self.bump();
        }
        (&self.text[start..self.pos], start)
    }

    /// Consumes an identifier: a letter or `_`, then letters, digits, `_`.
    fn identifier(&mut self) -> Result<(&'a str, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                self.bump();
            }
            _ => return Err(self.error("expected an identifier")),
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.bump();
        }
        Ok((&self.text[start..self.pos], start))
    }

    /// Consumes a degree literal terminated by one of `stops`.
    fn degree(&mut self, stops: &[char]) -> Result<Degree, ParseError> {
        self.skip_ws();
        let (raw, start) = self.take_until(stops);
        let trimmed = raw.trim_end();
        if trimmed.is_empty() {
            return Err(self.error_at(start, "expected a degree"));
        }
        trimmed
            .parse::<Degree>()
            .map_err(|e| self.error_at(start, e.to_string()))
    }

    /// Consumes `(m,i,n)`.
    fn triple(&mut self) -> Result<NeutrosophicTriple, ParseError> {
        self.expect('(')?;
        let m = self.degree(&[',', ')'])?;
        self.expect(',')?;
        let i = self.degree(&[',', ')'])?;
        self.expect(',')?;
        let n = self.degree(&[',', ')'])?;
        self.expect(')')?;
        Ok(NeutrosophicTriple::new(m, i, n))
    }
}

fn universe_from_cursor(cursor: &mut Cursor<'_>) -> Result<Universe, ParseError> {
    cursor.skip_ws();
    let braced = cursor.peek() == Some('{');
    if braced {
        cursor.bump();
    }
    let mut labels: Vec<String> = Vec::new();
    let mut positions: HashMap<String, usize> = HashMap::new();
    loop {
        cursor.skip_ws();
        let stops: &[char] = if braced { &[',', '}'] } else { &[','] };
        let (raw, start) = cursor.take_until(stops);
        let label = raw.trim();
        if label.is_empty() {
            return Err(cursor.error_at(start, "expected a universe element"));
        }
        if positions.insert(label.to_owned(), start).is_some() {
            return Err(cursor.error_at(start, format!("duplicate universe element '{label}'")));
        }
        labels.push(label.to_owned());
        cursor.skip_ws();
        match cursor.peek() {
            Some(',') => {
                cursor.bump();
            }
            Some('}') if braced => {
                cursor.bump();
                break;
            }
            None if !braced => break,
            Some(c) => return Err(cursor.error(format!("unexpected '{c}'"))),
            None => return Err(cursor.error("expected '}'")),
        }
    }
    if !cursor.at_end() {
        return Err(cursor.error("unexpected trailing input"));
    }
    Universe::new(labels).map_err(|e| cursor.error_at(0, e.to_string()))
}

/// Parses a comma-separated list of element labels, optionally surrounded
/// by braces. Labels are trimmed; duplicates and empty literals are
/// rejected.
pub fn parse_universe_literal(text: &str) -> Result<Universe, ParseError> {
    let mut cursor = Cursor::new(text, 1, 1);
    cursor.skip_ws();
    if cursor.peek().is_none() {
        return Err(cursor.error("empty universe literal"));
    }
    universe_from_cursor(&mut cursor)
}

fn set_from_cursor(
    cursor: &mut Cursor<'_>,
    universe: &Arc<Universe>,
) -> Result<NeutrosophicSet, ParseError> {
    cursor.skip_ws();
    if cursor.peek() == Some('<') {
        keyed_set(cursor, universe)
    } else {
        positional_set(cursor, universe)
    }
}

fn positional_set(
    cursor: &mut Cursor<'_>,
    universe: &Arc<Universe>,
) -> Result<NeutrosophicSet, ParseError> {
    let literal_start = cursor.pos;
    let mut triples = Vec::new();
    loop {
        triples.push(cursor.triple()?);
        cursor.skip_ws();
        match cursor.peek() {
            Some(',') => {
                cursor.bump();
            }
            None => break,
            Some(c) => return Err(cursor.error(format!("unexpected '{c}'"))),
        }
    }
    if triples.len() != universe.len() {
        return Err(cursor.error_at(
            literal_start,
            format!("expected {} triples, got {}", universe.len(), triples.len()),
        ));
    }
    NeutrosophicSet::new(Arc::clone(universe), triples)
        .map_err(|e| cursor.error_at(literal_start, e.to_string()))
}

fn keyed_set(
    cursor: &mut Cursor<'_>,
    universe: &Arc<Universe>,
) -> Result<NeutrosophicSet, ParseError> {
    let literal_start = cursor.pos;
    cursor.expect('<')?;
    let mut by_element: HashMap<usize, NeutrosophicTriple> = HashMap::new();
    loop {
        cursor.skip_ws();
        let (raw, start) = cursor.take_until(&['/', '>']);
        let label = raw.trim();
        if label.is_empty() {
            return Err(cursor.error_at(start, "expected an element label"));
        }
        cursor.expect('/')?;
        let index = universe
            .index_of(label)
            .ok_or_else(|| cursor.error_at(start, format!("unknown element '{label}'")))?;
        let triple = cursor.triple()?;
        if by_element.insert(index, triple).is_some() {
            return Err(cursor.error_at(start, format!("duplicate element '{label}'")));
        }
        cursor.skip_ws();
        match cursor.peek() {
            Some(',') => {
                cursor.bump();
            }
            Some('>') => {
                cursor.bump();
                break;
            }
            Some(c) => return Err(cursor.error(format!("unexpected '{c}'"))),
            None => return Err(cursor.error("expected '>'")),
        }
    }
    if !cursor.at_end() {
        return Err(cursor.error("unexpected trailing input"));
    }
    if let Some((i, label)) = universe
        .elements()
        .iter()
        .enumerate()
        .find(|(i, _)| !by_element.contains_key(i))
        .map(|(i, l)| (i, l.clone()))
    {
        let _ = i;
        return Err(cursor.error_at(literal_start, format!("missing element '{label}'")));
    }
    let triples = (0..universe.len()).map(|i| by_element[&i]).collect();
    NeutrosophicSet::new(Arc::clone(universe), triples)
        .map_err(|e| cursor.error_at(literal_start, e.to_string()))
}

/// Parses a set literal over a known universe: either one positional
/// `(m,i,n)` triple per element in universe order, or the keyed form
/// `< label/(m,i,n), … >` covering every element exactly once.
pub fn parse_set_literal(
    text: &str,
    universe: &Arc<Universe>,
) -> Result<NeutrosophicSet, ParseError> {
    let mut cursor = Cursor::new(text, 1, 1);
    cursor.skip_ws();
    if cursor.peek().is_none() {
        return Err(cursor.error("empty set literal"));
    }
    set_from_cursor(&mut cursor, universe)
}

struct ScriptParser {
    document: ScriptDocument,
}

impl ScriptParser {
    fn declare(
        &mut self,
        identifier: &str,
        id_offset: usize,
        line: usize,
        cursor: &Cursor<'_>,
        value: Value,
    ) -> Result<(), ParseError> {
        if self.document.index.contains_key(identifier) {
            return Err(cursor.error_at(id_offset, format!("duplicate identifier '{identifier}'")));
        }
        self.document
            .index
            .insert(identifier.to_owned(), self.document.declarations.len());
        self.document.declarations.push(Declaration {
            identifier: identifier.to_owned(),
            line,
            value,
        });
        Ok(())
    }

    fn resolve_universe(
        &self,
        identifier: &str,
        offset: usize,
        cursor: &Cursor<'_>,
    ) -> Result<Arc<Universe>, ParseError> {
        match self.document.get(identifier) {
            Some(Value::Universe(u)) => Ok(Arc::clone(u)),
            Some(_) => Err(cursor.error_at(offset, format!("'{identifier}' is not a universe"))),
            None => Err(cursor.error_at(offset, format!("unknown identifier '{identifier}'"))),
        }
    }

    fn resolve_set(
        &self,
        identifier: &str,
        offset: usize,
        cursor: &Cursor<'_>,
    ) -> Result<NeutrosophicSet, ParseError> {
        match self.document.get(identifier) {
            Some(Value::Set(s)) => Ok(s.clone()),
            Some(_) => Err(cursor.error_at(offset, format!("'{identifier}' is not a set"))),
            None => Err(cursor.error_at(offset, format!("unknown identifier '{identifier}'"))),
        }
    }

    fn universe_line(&mut self, cursor: &mut Cursor<'_>, line: usize) -> Result<(), ParseError> {
        let (identifier, id_offset) = cursor.identifier()?;
        let identifier = identifier.to_owned();
        cursor.expect('=')?;
        cursor.skip_ws();
        if cursor.peek().is_none() {
            return Err(cursor.error("empty universe literal"));
        }
        let universe = universe_from_cursor(cursor)?.named(&identifier);
        self.declare(&identifier, id_offset, line, cursor, Value::Universe(Arc::new(universe)))
    }

    fn nset_line(&mut self, cursor: &mut Cursor<'_>, line: usize) -> Result<(), ParseError> {
        let (identifier, id_offset) = cursor.identifier()?;
        let identifier = identifier.to_owned();
        let (keyword, kw_offset) = cursor.identifier()?;
        if keyword != "over" {
            return Err(cursor.error_at(kw_offset, "expected 'over'"));
        }
        let (universe_id, u_offset) = cursor.identifier()?;
        let universe_id = universe_id.to_owned();
        let universe = self.resolve_universe(&universe_id, u_offset, cursor)?;
        cursor.expect('=')?;
        cursor.skip_ws();
        if cursor.peek().is_none() {
            return Err(cursor.error("empty set literal"));
        }
        let set = set_from_cursor(cursor, &universe)?.named(&identifier);
        self.declare(&identifier, id_offset, line, cursor, Value::Set(set))
    }

    fn family_line(&mut self, cursor: &mut Cursor<'_>, line: usize) -> Result<(), ParseError> {
        let (identifier, id_offset) = cursor.identifier()?;
        let identifier = identifier.to_owned();
        cursor.expect('=')?;
        let brace_offset = {
            cursor.skip_ws();
            cursor.pos
        };
        cursor.expect('{')?;
        let mut members = Vec::new();
        cursor.skip_ws();
        if cursor.peek() == Some('}') {
            cursor.bump();
        } else {
            loop {
                let (member_id, m_offset) = cursor.identifier()?;
                let member_id = member_id.to_owned();
                members.push(self.resolve_set(&member_id, m_offset, cursor)?);
                cursor.skip_ws();
                match cursor.peek() {
                    Some(',') => {
                        cursor.bump();
                    }
                    Some('}') => {
                        cursor.bump();
                        break;
                    }
                    Some(c) => return Err(cursor.error(format!("unexpected '{c}'"))),
                    None => return Err(cursor.error("expected '}'")),
                }
            }
        }

        let explicit_universe = {
            cursor.skip_ws();
            if cursor.peek().is_some() {
                let (keyword, kw_offset) = cursor.identifier()?;
                if keyword != "over" {
                    return Err(cursor.error_at(kw_offset, "expected 'over'"));
                }
                let (universe_id, u_offset) = cursor.identifier()?;
                let universe_id = universe_id.to_owned();
                Some(self.resolve_universe(&universe_id, u_offset, cursor)?)
            } else {
                None
            }
        };
        if !cursor.at_end() {
            return Err(cursor.error("unexpected trailing input"));
        }
        if members.is_empty() && explicit_universe.is_none() {
            return Err(cursor.error_at(
                brace_offset,
                "an empty family requires a trailing 'over UNIVERSE'",
            ));
        }

        let mut family = NeutrosophicFamily::new(members)
            .map_err(|e| cursor.error_at(brace_offset, e.to_string()))?;
        if let Some(universe) = explicit_universe {
            family
                .set_universe(universe)
                .map_err(|e| cursor.error_at(brace_offset, e.to_string()))?;
        }
        let family = family.named(&identifier);
        self.declare(&identifier, id_offset, line, cursor, Value::Family(family))
    }
}

/// Parses a whole script document. Declarations are processed in order;
/// the first error aborts the parse.
pub fn parse_script(text: &str) -> Result<ScriptDocument, ParseError> {
    let mut parser = ScriptParser {
        document: ScriptDocument::default(),
    };
    for (line_index, raw_line) in text.lines().enumerate() {
        let line_no = line_index + 1;
        let without_comment = match raw_line.find('#') {
            Some(hash) => &raw_line[..hash],
            None => raw_line,
        };
        let line = without_comment.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let mut cursor = Cursor::new(line, line_no, 1);
        let (keyword, kw_offset) = cursor.identifier()?;
        match keyword {
            "universe" => parser.universe_line(&mut cursor, line_no)?,
            "nset" => parser.nset_line(&mut cursor, line_no)?,
            "family" => parser.family_line(&mut cursor, line_no)?,
            other => {
                return Err(cursor.error_at(
                    kw_offset,
                    format!("unknown keyword '{other}' (expected universe, nset or family)"),
                ))
            }
        }
    }
    Ok(parser.document)
}
