//! Deterministic naming of derived sets and text rendering of sets and
//! families.
//!
//! Two formats exist: the simple one-line form
//! `A1 = < a/(0.4,0.4,0.3), b/(0.1,0.1,0.1), c/(0.2,0.2,0.2) >` and a
//! tabular form with one aligned table per set. Rendering is a pure
//! function of the value and the options: identical inputs always yield
//! byte-identical output.

use std::fmt::Write;

use crate::family::NeutrosophicFamily;
use crate::set::NeutrosophicSet;
use crate::universe::Universe;

/// Width of the first (element/name) column in tabular output.
const NAME_WIDTH: usize = 8;
/// Width of the first column in extended tabular output.
const NAME_WIDTH_EXTENDED: usize = 13;
/// Width of each degree cell (including its one-space left pad).
const VALUE_WIDTH: usize = 16;
/// Header cells for the three degree columns, pre-aligned to
/// `VALUE_WIDTH`.
const HEADER_CELLS: &str = "   membership   |  indeterminacy | non-membership |";

/// Output options shared by the set and family renderers.
///
/// `tabular` switches from the simple one-line form to aligned tables
/// (the simple form is simply the absence of tabular). `label` prefixes
/// the rendered value with `NAME = ` when the value is named. `extended`
/// widens the first tabular column and, in the simple family form,
/// groups members two per line.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RenderOptions {
    pub tabular: bool,
    pub label: bool,
    pub extended: bool,
}

impl RenderOptions {
    /// Reads a format specifier string: `t` tabular, `l` label,
    /// `x` extended, `s` (or nothing) simple. Other characters are
    /// ignored.
    pub fn from_spec(spec: &str) -> RenderOptions {
        RenderOptions {
            tabular: spec.contains('t'),
            label: spec.contains('l'),
            extended: spec.contains('x'),
        }
    }
}

/// Joins the named parts with `" ∩ "`. Absent when no part is named.
pub fn intersection_name<'a, I>(parts: I) -> Option<String>
where
    I: IntoIterator<Item = Option<&'a str>>,
{
    let named: Vec<&str> = parts.into_iter().flatten().collect();
    if named.is_empty() {
        None
    } else {
        Some(named.join(" \u{2229} "))
    }
}

/// Joins the named parts with `" ∪ "`, wrapping any part that already
/// contains `"∩"` in parentheses. Absent when no part is named.
pub fn union_name<'a, I>(parts: I) -> Option<String>
where
    I: IntoIterator<Item = Option<&'a str>>,
{
    let named: Vec<String> = parts
        .into_iter()
        .flatten()
        .map(|name| {
            if name.contains('\u{2229}') {
                format!("({name})")
            } else {
                name.to_owned()
            }
        })
        .collect();
    if named.is_empty() {
        None
    } else {
        Some(named.join(" \u{222A} "))
    }
}

// Double-struck counterparts of C, H, N, P, Q, R, Z live in the
// Letterlike Symbols block; the Mathematical Alphanumeric Symbols block
// leaves holes at those positions.
fn double_struck(c: char) -> Option<char> {
    let mapped = match c {
        'C' => '\u{2102}',
        'H' => '\u{210D}',
        'N' => '\u{2115}',
        'P' => '\u{2119}',
        'Q' => '\u{211A}',
        'R' => '\u{211D}',
        'Z' => '\u{2124}',
        'A'..='Z' => char::from_u32(0x1D538 + (c as u32 - 'A' as u32))?,
        'a'..='z' => char::from_u32(0x1D552 + (c as u32 - 'a' as u32))?,
        '0'..='9' => char::from_u32(0x1D7D8 + (c as u32 - '0' as u32))?,
        _ => return None,
    };
    Some(mapped)
}

fn is_double_struck(c: char) -> bool {
    matches!(c,
        '\u{2102}' | '\u{210D}' | '\u{2115}' | '\u{2119}' | '\u{211A}' | '\u{211D}' | '\u{2124}')
        || ('\u{1D538}'..='\u{1D56B}').contains(&c)
        || ('\u{1D7D8}'..='\u{1D7E1}').contains(&c)
}

/// Maps every ASCII letter and digit to its Mathematical Double-Struck
/// codepoint (`"U"` → `"𝕌"`); all other characters pass through.
pub fn name_to_blackboard(name: &str) -> String {
    name.chars().map(|c| double_struck(c).unwrap_or(c)).collect()
}

/// True when every alphanumeric character is already double-struck.
pub fn is_blackboard(name: &str) -> bool {
    name.chars()
        .filter(|c| c.is_alphanumeric())
        .all(is_double_struck)
}

/// Display name for the absolute set over a universe: the double-struck
/// universe name, the universe name verbatim when already double-struck,
/// or `"1̃"` when the universe is unnamed.
pub fn absolute_name(universe: &Universe) -> String {
    match universe.name() {
        Some(name) if !is_blackboard(name) => name_to_blackboard(name),
        Some(name) => name.to_owned(),
        None => "1\u{0303}".to_owned(),
    }
}

fn label_prefix(name: Option<&str>, opts: &RenderOptions) -> String {
    match name {
        Some(name) if opts.label => format!("{name} = "),
        _ => String::new(),
    }
}

/// Pads to `width` counted in Unicode scalar values.
fn pad(text: &str, width: usize) -> String {
    let len = text.chars().count();
    let mut out = String::from(text);
    for _ in len..width {
        out.push(' ');
    }
    out
}

fn simple_body(set: &NeutrosophicSet) -> String {
    let parts: Vec<String> = set
        .iter()
        .map(|(label, t)| {
            format!(
                "{label}/({},{},{})",
                t.membership(),
                t.indeterminacy(),
                t.nonmembership()
            )
        })
        .collect();
    format!("< {} >", parts.join(", "))
}

fn tabular_body(set: &NeutrosophicSet, opts: &RenderOptions) -> String {
    let name_width = if opts.extended { NAME_WIDTH_EXTENDED } else { NAME_WIDTH };
    let header_name = if opts.label { set.name().unwrap_or("") } else { "" };
    let total = 1 + name_width + 1 + 3 * (VALUE_WIDTH + 1);
    let rule = "-".repeat(total);

    let mut out = String::new();
    out.push('\n');
    let _ = writeln!(out, " {}|{HEADER_CELLS}", pad(header_name, name_width));
    let _ = writeln!(out, "{rule}");
    for (label, t) in set.iter() {
        let _ = writeln!(
            out,
            " {}| {}| {}| {}|",
            pad(label, name_width),
            pad(&t.membership().to_string(), VALUE_WIDTH - 1),
            pad(&t.indeterminacy().to_string(), VALUE_WIDTH - 1),
            pad(&t.nonmembership().to_string(), VALUE_WIDTH - 1),
        );
    }
    let _ = writeln!(out, "{rule}");
    out
}

/// Renders one set. Simple form: `< e/(m,i,n), … >` in universe order,
/// prefixed with `NAME = ` under the label option. Tabular form: an
/// aligned table with a header row, dash rules and one row per element.
pub fn render_set(set: &NeutrosophicSet, opts: &RenderOptions) -> String {
    if opts.tabular {
        tabular_body(set, opts)
    } else {
        format!("{}{}", label_prefix(set.name(), opts), simple_body(set))
    }
}

/// Renders a family. The empty family renders as `∅` (label-prefixed when
/// requested). Non-empty families render as `{ … }` with each member
/// labeled by its own name; the extended simple form places two members
/// per line with continuation lines indented under the opening brace.
pub fn render_family(family: &NeutrosophicFamily, opts: &RenderOptions) -> String {
    let labelname = label_prefix(family.name(), opts);
    if family.is_empty() {
        return format!("{labelname}\u{2205}");
    }
    let member_opts = RenderOptions {
        label: true,
        ..*opts
    };
    let items: Vec<String> = family
        .members()
        .iter()
        .map(|m| render_set(m, &member_opts))
        .collect();
    if !opts.tabular && opts.extended {
        let indentation = " ".repeat(labelname.chars().count() + 2);
        let lines: Vec<String> = items.chunks(2).map(|pair| pair.join(", ")).collect();
        let joined = lines.join(&format!(",\n{indentation}"));
        format!("{labelname}{{ {joined} }}\n")
    } else {
        format!("{labelname}{{ {} }}\n", items.join(", "))
    }
}
