#![allow(dead_code)]

pub mod random;

use orderdom::{
    parse, reference, DependencyEdge, DependencyStructure, DependencyTree, Lexicon, Placement,
    TemplateShape, WordToken,
};

pub fn german() -> Lexicon {
    reference::german()
}

pub fn tokens(s: &str) -> Vec<&str> {
    s.split_whitespace().collect()
}

/// Sentences over the reference lexicon with their number of structures.
/// The counts were fixed by running the brute-force oracle.
pub const SENTENCES: &[(&str, usize)] = &[
    ("den Mann hat der Junge gesehen", 1),
    ("der Junge hat den Mann gesehen", 2),
    ("den Mann gesehen hat der Junge", 1),
    ("gesehen hat der Junge den Mann", 1),
    ("gesehen hat den Mann der Junge", 1),
    ("der Junge sieht den Hund", 1),
    ("den Hund sieht der Junge", 1),
    ("der Mann sieht den Hund", 1),
    ("den Mann sieht der Hund", 1),
    ("der Hund hat den Mann gesehen", 2),
    ("der Junge hat den Hund gesehen", 2),
    ("gesehen der hat Junge Mann den", 0),
    ("der Junge hat gesehen den Mann", 0),
    ("den Mann der Junge hat gesehen", 0),
    ("hat der Junge den Mann gesehen", 0),
    ("Junge der hat den Mann gesehen", 0),
    ("sieht der Junge den Mann", 0),
    ("der Junge sieht", 0),
    ("der Junge", 0),
    ("Mann", 0),
    ("hat", 0),
    ("der Junge sieht den Mann den", 0),
    ("der Junge der Mann sieht den Hund", 0),
    ("den Mann hat gesehen der Junge", 0),
    ("der Mann sieht der Hund", 0),
];

/// Sentences whose (first) tree seeds the generation corpus, with the
/// number of accepted orders and of (order, structure) pairs, again as
/// enumerated by the oracle.
pub const TREES: &[(&str, usize, usize)] = &[
    ("der Junge hat den Mann gesehen", 5, 6),
    ("der Hund hat den Mann gesehen", 5, 6),
    ("der Junge sieht den Hund", 2, 2),
    ("den Mann sieht der Hund", 2, 2),
    ("der Mann sieht den Hund", 2, 2),
];

pub fn tree_of(sentence: &str, lex: &Lexicon) -> DependencyTree {
    parse(&tokens(sentence), lex)
        .expect("corpus sentence parses")
        .structures[0]
        .tree
        .clone()
}

pub const SEEN_ORDERS: &[&str] = &[
    "den Mann gesehen hat der Junge",
    "den Mann hat der Junge gesehen",
    "der Junge hat den Mann gesehen",
    "gesehen hat den Mann der Junge",
    "gesehen hat der Junge den Mann",
];

/// A structure over the reference lexicon from explicit placements.
pub fn build(
    lex: &Lexicon,
    words: &[(&str, usize)],
    root: usize,
    edges: &[(usize, &str, usize)],
    placements: &[Option<(usize, usize)>],
) -> DependencyStructure {
    let entries: Vec<_> = words
        .iter()
        .map(|(f, e)| lex.entry(f, *e).expect("entry exists"))
        .collect();
    let tree = DependencyTree {
        words: words
            .iter()
            .enumerate()
            .map(|(i, (f, e))| WordToken {
                index: i,
                form: f.to_string(),
                entry: *e,
            })
            .collect(),
        root,
        edges: edges
            .iter()
            .map(|&(h, d, x)| DependencyEdge {
                head: h,
                dependent: x,
                dtype: d.to_string(),
            })
            .collect(),
        classes: entries.iter().map(|e| e.class.clone()).collect(),
    };
    let shapes: Vec<TemplateShape> = entries.iter().map(|e| e.template.shape()).collect();
    let features = entries.iter().map(|e| e.features.clone()).collect();
    let placements: Vec<Option<Placement>> = placements
        .iter()
        .map(|p| p.map(|(positional, slot)| Placement { positional, slot }))
        .collect();
    DependencyStructure::assemble(tree, features, &shapes, &placements)
}
