//! Lexicalized dependency grammar with word order domains.
//!
//! A [`DependencyStructure`] pairs a possibly non-projective dependency tree
//! with a hierarchy of order domains. Every word opens a template of slots
//! and is inserted into a slot of one of its transitive heads, its
//! positional head. Word order is then constrained per domain by the
//! precedence predicates, cardinality limits and feature requirements in
//! the [`Lexicon`].
//!
//! ```
//! use orderdom::{parse, reference};
//!
//! let lex = reference::german();
//! let tokens = ["den", "Mann", "hat", "der", "Junge", "gesehen"];
//! let result = parse(&tokens, &lex).unwrap();
//! assert_eq!(result.structures.len(), 1);
//! // The object is placed in a domain of the finite verb.
//! assert_eq!(result.structures[0].positional[1], Some(2));
//! ```

pub mod constraints;
pub mod engine;
pub mod lexicon;
pub mod oracle;
pub mod reference;
pub mod report;
pub mod serialize;
pub mod structure;
pub mod validate;

pub use constraints::{
    check_cardinality, check_domain_features, check_extraction, check_precedence,
    CardinalityConstraint, ConstraintError, Direction, DomainFeatureRequirement, ExtractionPathSet,
    PrecedencePredicate,
};
pub use engine::{
    generate, parse, Engine, EngineConfig, EngineError, GenerationResult, ParseResult, SearchStats,
};
pub use lexicon::{
    entries_for, load_lexicon, Attribute, ClassRequirement, DomainTemplate, Inventory,
    LexicalEntry, Lexicon, LexiconError, RootEntry, ValencySlot,
};
pub use oracle::{
    oracle_orders, oracle_parse, oracle_realizations, Enumerate, OracleConfig, OracleError,
};
pub use report::{Condition, ValidationReport, Violation};
pub use serialize::{
    parse_structure, parse_tree, render_structure, render_tree, structure_from_json,
    structure_to_json, tree_from_json, tree_to_json, FormatError, JsonStructure,
};
pub use structure::{
    surface_order, DependencyEdge, DependencyStructure, DependencyTree, DomainId, FeatureMap,
    Features, OrderDomain, OrderDomainStructure, Placement, SlotDomain, SurfaceOrderError,
    TemplateShape, WordToken, ROOT_DTYPE,
};
pub use validate::{
    validate_domain_structure, validate_structure, validate_tree, validate_valency, Member,
    StructureView,
};
