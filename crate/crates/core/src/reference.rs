//! The bundled German reference lexicon.

use crate::lexicon::Lexicon;

/// Source text of the reference lexicon.
pub const GERMAN: &str = include_str!("../lexica/de.lex");

/// Parses [`GERMAN`].
pub fn german() -> Lexicon {
    Lexicon::load(GERMAN).expect("reference lexicon parses")
}
