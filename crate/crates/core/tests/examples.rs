mod common;

use std::collections::BTreeSet;

use common::{build, german, tokens};
use orderdom::{
    check_cardinality, check_domain_features, check_extraction, check_precedence, entries_for,
    load_lexicon, parse, surface_order, validate_domain_structure, validate_structure,
    validate_tree, validate_valency, CardinalityConstraint, Condition, DependencyEdge,
    DependencyStructure, DependencyTree, DomainFeatureRequirement, DomainId, ExtractionPathSet,
    Features, Lexicon, LexiconError, OrderDomain, OrderDomainStructure, PrecedencePredicate,
    SlotDomain, StructureView, SurfaceOrderError, WordToken,
};

const FRONTED_WORDS: &[(&str, usize)] = &[
    ("den", 0),
    ("Mann", 1),
    ("hat", 0),
    ("der", 0),
    ("Junge", 0),
    ("gesehen", 0),
];
const FRONTED_EDGES: &[(usize, &str, usize)] = &[
    (1, "det", 0),
    (5, "obj", 1),
    (4, "det", 3),
    (2, "subj", 4),
    (2, "vpart", 5),
];

/// "den Mann hat der Junge gesehen" with Mann in the Vorfeld of hat.
fn fronted(lex: &Lexicon) -> DependencyStructure {
    build(
        lex,
        FRONTED_WORDS,
        2,
        FRONTED_EDGES,
        &[
            Some((1, 0)),
            Some((2, 0)),
            None,
            Some((4, 0)),
            Some((2, 1)),
            Some((2, 1)),
        ],
    )
}

/// "hat der Junge den Mann gesehen" or "hat gesehen der Junge den Mann":
/// everything in the Mittelfeld, Vorfeld empty.
fn verb_first(lex: &Lexicon, participle_early: bool) -> DependencyStructure {
    if participle_early {
        // hat=0 gesehen=1 der=2 Junge=3 den=4 Mann=5
        build(
            lex,
            &[
                ("hat", 0),
                ("gesehen", 0),
                ("der", 0),
                ("Junge", 0),
                ("den", 0),
                ("Mann", 1),
            ],
            0,
            &[
                (0, "vpart", 1),
                (0, "subj", 3),
                (3, "det", 2),
                (1, "obj", 5),
                (5, "det", 4),
            ],
            &[
                None,
                Some((0, 1)),
                Some((3, 0)),
                Some((0, 1)),
                Some((5, 0)),
                Some((0, 1)),
            ],
        )
    } else {
        // hat=0 der=1 Junge=2 den=3 Mann=4 gesehen=5
        build(
            lex,
            &[
                ("hat", 0),
                ("der", 0),
                ("Junge", 0),
                ("den", 0),
                ("Mann", 1),
                ("gesehen", 0),
            ],
            0,
            &[
                (0, "subj", 2),
                (2, "det", 1),
                (0, "vpart", 5),
                (5, "obj", 4),
                (4, "det", 3),
            ],
            &[
                None,
                Some((2, 0)),
                Some((0, 1)),
                Some((4, 0)),
                Some((0, 1)),
                Some((0, 1)),
            ],
        )
    }
}

fn hat_predicates(lex: &Lexicon) -> Vec<PrecedencePredicate> {
    lex.entry("hat", 0).unwrap().predicates.clone()
}

fn members(ds: &DependencyStructure) -> BTreeSet<Vec<usize>> {
    ds.domains
        .domains
        .iter()
        .map(|d| d.members.clone())
        .collect()
}

// ---- trees ----

#[test]
fn fronted_object_tree_is_valid() {
    let lex = german();
    let ds = fronted(&lex);
    assert!(validate_tree(&ds.tree, lex.inventory()).is_valid());
    assert!(validate_valency(&ds.tree, &lex).is_valid());
}

#[test]
fn single_word_tree_is_valid() {
    let lex = german();
    let tree = DependencyTree {
        words: vec![WordToken {
            index: 0,
            form: "hat".into(),
            entry: 0,
        }],
        root: 0,
        edges: vec![],
        classes: vec!["Vfin".into()],
    };
    assert!(validate_tree(&tree, lex.inventory()).is_valid());
}

#[test]
fn mutual_heads_are_rejected() {
    let lex = german();
    let edge = |h, d| DependencyEdge {
        head: h,
        dependent: d,
        dtype: "subj".into(),
    };
    let tree = DependencyTree {
        words: (0..2)
            .map(|i| WordToken {
                index: i,
                form: "Junge".into(),
                entry: 0,
            })
            .collect(),
        root: 0,
        edges: vec![edge(0, 1), edge(1, 0)],
        classes: vec!["N".into(); 2],
    };
    let r = validate_tree(&tree, lex.inventory());
    assert!(r.has(Condition::Acyclic), "{r}");
    assert!(r.has(Condition::Root), "{r}");
}

// ---- domain structures ----

#[test]
fn fronted_object_domains() {
    let lex = german();
    let ds = fronted(&lex);
    assert!(validate_domain_structure(&ds.domains, 6).is_valid());
    let expected: BTreeSet<Vec<usize>> = [
        vec![0, 1, 2, 3, 4, 5], // top
        vec![0, 1],             // Vorfeld and the domain of Mann
        vec![2, 3, 4, 5],       // Mittelfeld
        vec![3, 4],             // Junge
        vec![5],                // gesehen
        vec![0],                // den
        vec![3],                // der
    ]
    .into();
    assert_eq!(members(&ds), expected);
    // Two distinct domains share {den, Mann}.
    assert_eq!(
        ds.domains
            .domains
            .iter()
            .filter(|d| d.members == [0, 1])
            .count(),
        2
    );
}

fn bare(domains: Vec<Vec<usize>>, n: usize) -> OrderDomainStructure {
    OrderDomainStructure {
        domains: domains
            .into_iter()
            .enumerate()
            .map(|(i, m)| OrderDomain::new(DomainId(i as u32), m))
            .collect(),
        top: DomainId(0),
        assoc: vec![Vec::new(); n],
    }
}

#[test]
fn overlapping_domains_violate_hierarchy() {
    let r = validate_domain_structure(&bare(vec![vec![0, 1, 2], vec![0, 1], vec![1, 2]], 3), 3);
    assert_eq!(r.conditions(), [Condition::Hierarchy]);
}

#[test]
fn gapped_domain_violates_contiguity() {
    let r = validate_domain_structure(&bare(vec![vec![0, 1, 2], vec![0, 2]], 3), 3);
    assert_eq!(r.conditions(), [Condition::Contiguity]);
}

#[test]
fn top_domain_must_cover_all_words() {
    let r = validate_domain_structure(&bare(vec![vec![0, 1]], 3), 3);
    assert_eq!(r.conditions(), [Condition::TopDomain]);
}

// ---- full structures ----

#[test]
fn fronted_object_structure_is_valid() {
    let lex = german();
    let ds = fronted(&lex);
    let r = validate_structure(&ds, &lex);
    assert!(r.is_valid(), "{r}");
    assert_eq!(
        ds.positional,
        [Some(1), Some(2), None, Some(4), Some(2), Some(2)]
    );
}

#[test]
fn mann_after_participle_in_mittelfeld_violates_precedence() {
    let lex = german();
    // der=0 Junge=1 hat=2 gesehen=3 den=4 Mann=5
    let ds = build(
        &lex,
        &[
            ("der", 0),
            ("Junge", 0),
            ("hat", 0),
            ("gesehen", 0),
            ("den", 0),
            ("Mann", 1),
        ],
        2,
        &[
            (1, "det", 0),
            (2, "subj", 1),
            (2, "vpart", 3),
            (3, "obj", 5),
            (5, "det", 4),
        ],
        &[
            Some((1, 0)),
            Some((2, 0)),
            None,
            Some((2, 1)),
            Some((5, 0)),
            Some((2, 1)),
        ],
    );
    let r = validate_structure(&ds, &lex);
    assert_eq!(r.conditions(), [Condition::Precedence], "{r}");
    assert!(r.violations()[0]
        .message
        .contains("<vpart> after <obj,subj>"));
    assert!(parse(&tokens("der Junge hat gesehen den Mann"), &lex)
        .unwrap()
        .structures
        .is_empty());
}

#[test]
fn empty_extraction_set_rejects_fronted_object() {
    let mut lex = german();
    lex.entries_for_mut("gesehen")[0]
        .slot_mut("obj")
        .unwrap()
        .extraction = ExtractionPathSet::empty();
    let r = validate_structure(&fronted(&lex), &lex);
    assert_eq!(r.conditions(), [Condition::Extraction], "{r}");
}

#[test]
fn condition_two_violation_is_named() {
    let lex = german();
    let mut ds = fronted(&lex);
    // Give hat a second domain overlapping its Mittelfeld.
    let extra = DomainId(99);
    ds.domains.domains.push(OrderDomain::new(extra, vec![2, 3]));
    ds.domains.assoc[2].push(SlotDomain {
        slot: 2,
        domain: extra,
    });
    let r = validate_structure(&ds, &lex);
    assert!(r.has(Condition::Disjoint), "{r}");
    assert!(r.to_string().contains("pairwise disjoint"));
}

// ---- surface order ----

#[test]
fn surface_order_of_fronted_object() {
    let lex = german();
    let ds = fronted(&lex);
    assert_eq!(surface_order(&ds).unwrap(), [0, 1, 2, 3, 4, 5]);
    assert_eq!(ds.surface(), "den Mann hat der Junge gesehen");
}

#[test]
fn surface_order_of_single_word() {
    let lex: Lexicon = Lexicon::load(
        "dtypes: propo\nclasses: N\nroot {\n  slot propo: class=N required extract {};\n}\n\
         entry \"Junge\" class=N {\n  domains [n] self=n;\n}\n",
    )
    .unwrap();
    let r = parse(&["Junge"], &lex).unwrap();
    assert_eq!(r.structures.len(), 1);
    assert_eq!(surface_order(&r.structures[0]).unwrap(), [0]);
}

#[test]
fn surface_order_detects_inverted_sequence() {
    let lex = german();
    let mut ds = fronted(&lex);
    // Swap the Vorfeld and Mittelfeld of hat.
    ds.domains.assoc[2].reverse();
    for (slot, sd) in ds.domains.assoc[2].iter_mut().enumerate() {
        sd.slot = slot;
    }
    assert!(matches!(
        surface_order(&ds),
        Err(SurfaceOrderError::Inconsistent { word: 2, .. })
    ));
    assert!(validate_structure(&ds, &lex).has(Condition::SequenceOrder));
}

// ---- precedence ----

#[test]
fn hat_predicates_hold_on_fronted_object() {
    let lex = german();
    let ds = fronted(&lex);
    let view = StructureView::new(&ds, &lex);
    for p in hat_predicates(&lex) {
        assert!(check_precedence(&p, 2, &view).unwrap().is_valid(), "{p}");
    }
}

#[test]
fn verb_first_with_object_before_participle() {
    let lex = german();
    let ds = verb_first(&lex, false);
    assert_eq!(ds.surface(), "hat der Junge den Mann gesehen");
    let view = StructureView::new(&ds, &lex);
    for p in hat_predicates(&lex) {
        assert!(check_precedence(&p, 0, &view).unwrap().is_valid(), "{p}");
    }
    // The clause is still rejected as a whole: its Vorfeld is empty.
    let r = validate_structure(&ds, &lex);
    assert_eq!(r.conditions(), [Condition::Cardinality], "{r}");
}

#[test]
fn verb_first_with_subject_after_participle() {
    let lex = german();
    let ds = verb_first(&lex, true);
    assert_eq!(ds.surface(), "hat gesehen der Junge den Mann");
    let view = StructureView::new(&ds, &lex);
    let [self_first, labeled] = &hat_predicates(&lex)[..] else {
        panic!("hat has two predicates")
    };
    assert!(check_precedence(self_first, 0, &view).unwrap().is_valid());
    let r = check_precedence(labeled, 0, &view).unwrap();
    // Both the subject and the object follow the participle.
    assert_eq!(r.len(), 2, "{r}");
}

#[test]
fn predicate_with_empty_scope_is_vacuous() {
    let lex = german();
    let ds = fronted(&lex);
    let view = StructureView::new(&ds, &lex);
    // gesehen (5) is alone in its domain.
    for p in hat_predicates(&lex) {
        assert!(check_precedence(&p, 5, &view).unwrap().is_valid());
    }
    for p in &lex.entry("gesehen", 0).unwrap().predicates {
        assert!(check_precedence(p, 5, &view).unwrap().is_valid());
    }
}

#[test]
fn unknown_label_is_an_error() {
    let lex = german();
    let ds = fronted(&lex);
    let view = StructureView::new(&ds, &lex);
    let p = PrecedencePredicate::LabeledPair {
        direction: orderdom::Direction::Precedes,
        left: ["iobj".to_string()].into(),
        right: ["subj".to_string()].into(),
    };
    assert!(check_precedence(&p, 2, &view).is_err());
}

// ---- cardinality and domain features ----

#[test]
fn vorfeld_cardinality() {
    let lex = german();
    let exactly_one = CardinalityConstraint::exactly_one(0);
    let ds = fronted(&lex);
    let view = StructureView::new(&ds, &lex);
    assert!(check_cardinality(&exactly_one, 2, &view)
        .unwrap()
        .is_valid());

    let ds = verb_first(&lex, false);
    let view = StructureView::new(&ds, &lex);
    assert!(!check_cardinality(&exactly_one, 0, &view)
        .unwrap()
        .is_valid());
    for slot in 0..3 {
        let c = CardinalityConstraint::unconstrained(slot);
        assert!(check_cardinality(&c, 0, &view).unwrap().is_valid());
    }
    let out_of_range = CardinalityConstraint::at_most_one(3);
    assert!(check_cardinality(&out_of_range, 0, &view).is_err());
}

#[test]
fn domain_feature_requirements() {
    let lex = german();
    let nom: Features = [("case".to_string(), "nom".to_string())].into();
    let vf_nom = DomainFeatureRequirement {
        slot: 0,
        required: nom,
    };
    let empty = DomainFeatureRequirement {
        slot: 0,
        required: Features::new(),
    };
    let fig = fronted(&lex);
    let view = StructureView::new(&fig, &lex);
    assert!(check_domain_features(&empty, 2, &view).is_valid());
    // Mann (case=acc) heads the Vorfeld member.
    assert_eq!(
        check_domain_features(&vf_nom, 2, &view).conditions(),
        [Condition::DomainFeatures]
    );

    let plain = parse(&tokens("der Junge hat den Mann gesehen"), &lex).unwrap();
    let ds = &plain.structures[0];
    let view = StructureView::new(ds, &lex);
    assert!(check_domain_features(&vf_nom, 2, &view).is_valid());
}

// ---- extraction ----

fn obj_slot(lex: &Lexicon) -> orderdom::ValencySlot {
    lex.entry("gesehen", 0)
        .unwrap()
        .slot("obj")
        .unwrap()
        .clone()
}

#[test]
fn extraction_across_vpart() {
    let lex = german();
    let fig = fronted(&lex);
    let view = StructureView::new(&fig, &lex);
    let mut slot = obj_slot(&lex);
    assert!(check_extraction(&slot, 1, &view).unwrap().is_valid());
    slot.extraction = ["subj"].into_iter().collect();
    let r = check_extraction(&slot, 1, &view).unwrap();
    assert_eq!(r.conditions(), [Condition::Extraction]);
}

#[test]
fn empty_set_with_direct_placement() {
    let lex = german();
    let plain = parse(&tokens("der Junge hat den Mann gesehen"), &lex).unwrap();
    let ds = plain
        .structures
        .iter()
        .find(|ds| ds.positional[4] == Some(5))
        .expect("Mann placed under gesehen");
    let view = StructureView::new(ds, &lex);
    let mut slot = obj_slot(&lex);
    slot.extraction = ExtractionPathSet::empty();
    assert!(check_extraction(&slot, 4, &view).unwrap().is_valid());
}

#[test]
fn extraction_out_of_an_embedded_clause() {
    let lex = Lexicon::load(
        "dtypes: subj propo\nclasses: V N\n\
         root {\n  slot propo: class=V required extract {};\n}\n\
         entry \"glaubt\" class=V {\n  slot subj: class=N required extract {};\n  \
         slot propo: class=V required extract {};\n  domains [vf mf] self=mf;\n}\n\
         entry \"kommt\" class=V {\n  slot subj: class=N required extract {};\n  domains [v] self=v;\n}\n\
         entry \"Hans\" class=N {\n  domains [n] self=n;\n}\n\
         entry \"Maria\" class=N {\n  domains [n] self=n;\n}\n",
    )
    .unwrap();
    // Maria=0 glaubt=1 Hans=2 kommt=3, with Maria fronted out of the clause.
    let ds = build(
        &lex,
        &[("Maria", 0), ("glaubt", 0), ("Hans", 0), ("kommt", 0)],
        1,
        &[(1, "subj", 2), (1, "propo", 3), (3, "subj", 0)],
        &[Some((1, 0)), None, Some((1, 1)), Some((1, 1))],
    );
    let view = StructureView::new(&ds, &lex);
    let slot = lex.entry("kommt", 0).unwrap().slot("subj").unwrap();
    let r = check_extraction(slot, 0, &view).unwrap();
    assert!(r.violations()[0].message.contains("`propo`"), "{r}");
    assert!(validate_structure(&ds, &lex).has(Condition::Extraction));
    let mut open = slot.clone();
    open.extraction = ["propo"].into_iter().collect();
    assert!(check_extraction(&open, 0, &view).unwrap().is_valid());
}

// ---- lexicon ----

#[test]
fn reference_lexicon_loads() {
    let lex = german();
    assert!(lex.entry_count() >= 6);
    assert!(lex.check().is_ok());
    for form in ["hat", "gesehen", "Mann", "Junge", "der", "den"] {
        assert!(!lex.entries_for(form).is_empty(), "{form}");
    }
}

#[test]
fn empty_lexicon_is_valid() {
    let lex = load_lexicon("").unwrap();
    assert_eq!(lex.entry_count(), 0);
    assert!(lex.inventory().dtypes.is_empty());
}

#[test]
fn undeclared_dtype_is_an_unknown_symbol() {
    let src = "dtypes: subj\nclasses: V\nentry \"gibt\" class=V {\n  slot iobj: required extract {};\n  domains [v] self=v;\n}\n";
    match load_lexicon(src) {
        Err(LexiconError::UnknownSymbol { line, symbol, .. }) => {
            assert_eq!(line, 4);
            assert_eq!(symbol, "iobj");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn entry_lookup() {
    let lex = german();
    let hat = entries_for("hat", &lex);
    assert_eq!(hat.len(), 1);
    assert_eq!(hat[0].class, "Vfin");
    assert!(entries_for("xyz", &lex).is_empty());
    let mann = entries_for("Mann", &lex);
    assert_eq!(mann.len(), 2);
    assert_ne!(mann[0].features, mann[1].features);
    assert!(entries_for("mann", &lex).is_empty());
}
