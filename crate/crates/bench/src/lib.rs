//! Inputs shared by the benchmarks.

/// Sentences over the reference lexicon, grammatical and not.
pub const SENTENCES: &[&str] = &[
    "der Junge sieht den Mann",
    "den Mann hat der Junge gesehen",
    "der Junge hat den Mann gesehen",
    "gesehen hat der Junge den Mann",
    "gesehen der hat Junge Mann den",
];

pub fn tokens(sentence: &str) -> Vec<&str> {
    sentence.split_whitespace().collect()
}
