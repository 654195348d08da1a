//! Random structures and a set-based re-implementation of the structural
//! checks, shared by the acceptance gate and the property tests.

use std::collections::{BTreeMap, BTreeSet};

use orderdom::{
    Condition, DependencyEdge, DependencyStructure, DependencyTree, DomainId, OrderDomain,
    OrderDomainStructure, Placement, SlotDomain, TemplateShape, WordToken,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub struct Instance {
    pub ds: DependencyStructure,
}

pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> DependencyTree {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let root = order[0];
    let edges = (1..n)
        .map(|i| DependencyEdge {
            head: order[rng.gen_range(0..i)],
            dependent: order[i],
            dtype: "subj".into(),
        })
        .collect();
    let mut tree = DependencyTree {
        words: (0..n)
            .map(|i| WordToken {
                index: i,
                form: "Junge".into(),
                entry: 0,
            })
            .collect(),
        root,
        edges,
        classes: vec!["N".into(); n],
    };
    tree.canonicalize();
    tree
}

/// Arbitrary domains and associations, mostly ill-formed.
pub fn random_free(rng: &mut ChaCha8Rng) -> Instance {
    let n = rng.gen_range(1..=6);
    let tree = random_tree(rng, n);
    let k = rng.gen_range(1..=7);
    let mut domains = Vec::new();
    for id in 0..k {
        let members: Vec<usize> = if id == 0 && rng.gen_bool(0.6) {
            (0..n).collect()
        } else if rng.gen_bool(0.5) {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(a..n);
            (a..=b).collect()
        } else {
            let mut m: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            if m.is_empty() {
                m.push(rng.gen_range(0..n));
            }
            m
        };
        domains.push(OrderDomain::new(DomainId(id as u32), members));
    }
    let mut assoc = vec![Vec::new(); n];
    for id in 1..k {
        if rng.gen_bool(0.85) {
            let w = rng.gen_range(0..n);
            assoc[w].push(DomainId(id as u32));
        }
    }
    let assoc = assoc
        .into_iter()
        .map(|mut seq| {
            seq.shuffle(rng);
            seq.into_iter()
                .enumerate()
                .map(|(slot, domain)| SlotDomain { slot, domain })
                .collect()
        })
        .collect();
    domains.shuffle(rng);
    Instance {
        ds: DependencyStructure {
            tree,
            features: vec![Default::default(); n],
            domains: OrderDomainStructure {
                domains,
                top: DomainId(0),
                assoc,
            },
            positional: vec![None; n],
        },
    }
}

/// Structures assembled from random placements; well nested, often valid.
pub fn random_assembled(rng: &mut ChaCha8Rng) -> Instance {
    let n = rng.gen_range(1..=6);
    let tree = random_tree(rng, n);
    let heads = tree.heads();
    let shapes: Vec<TemplateShape> = (0..n)
        .map(|_| {
            let len = rng.gen_range(1..=3);
            TemplateShape {
                len,
                self_slot: rng.gen_range(0..len),
            }
        })
        .collect();
    let placements: Vec<Option<Placement>> = (0..n)
        .map(|x| {
            let mut anc = Vec::new();
            let mut cur = heads[x];
            while let Some(h) = cur {
                anc.push(h);
                cur = heads[h];
            }
            anc.choose(rng).map(|&p| Placement {
                positional: p,
                slot: rng.gen_range(0..shapes[p].len),
            })
        })
        .collect();
    let ds = DependencyStructure::assemble(tree, vec![Default::default(); n], &shapes, &placements);
    Instance { ds }
}

pub fn set(m: &[usize]) -> BTreeSet<usize> {
    m.iter().copied().collect()
}

pub fn is_interval(s: &BTreeSet<usize>) -> bool {
    match (s.first(), s.last()) {
        (Some(a), Some(b)) => b - a + 1 == s.len(),
        _ => true,
    }
}

/// Expected verdicts computed directly from the sets.
pub fn expected(ds: &DependencyStructure) -> BTreeMap<Condition, bool> {
    let n = ds.len();
    let dom: BTreeMap<DomainId, BTreeSet<usize>> = ds
        .domains
        .domains
        .iter()
        .map(|d| (d.id, set(&d.members)))
        .collect();
    let everything: BTreeSet<usize> = (0..n).collect();
    let mut owner: BTreeMap<DomainId, usize> = BTreeMap::new();
    for (w, seq) in ds.domains.assoc.iter().enumerate() {
        for sd in seq {
            owner.insert(sd.domain, w);
        }
    }
    let heads = ds.tree.heads();
    let proper_ancestor = |a: usize, w: usize| {
        let mut cur = heads[w];
        while let Some(h) = cur {
            if h == a {
                return true;
            }
            cur = heads[h];
        }
        false
    };

    let contiguity = dom.values().any(|s| !is_interval(s));
    let sets: Vec<&BTreeSet<usize>> = dom.values().collect();
    let mut hierarchy = false;
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            if !a.is_disjoint(b) && !a.is_subset(b) && !b.is_subset(a) {
                hierarchy = true;
            }
        }
    }
    let top = dom.get(&ds.domains.top) != Some(&everything);

    let (mut c1, mut c2, mut c3, mut c4) = (false, false, false, false);
    for w in 0..n {
        let own: Vec<&BTreeSet<usize>> = ds.domains.assoc[w]
            .iter()
            .map(|sd| &dom[&sd.domain])
            .collect();
        c1 |= own.iter().filter(|s| s.contains(&w)).count() != 1;
        for (i, a) in own.iter().enumerate() {
            for b in &own[i + 1..] {
                c2 |= !a.is_disjoint(b);
            }
        }
        let containing: Vec<DomainId> = dom
            .iter()
            .filter(|(_, s)| s.contains(&w))
            .map(|(id, _)| *id)
            .collect();
        let via_head = containing.iter().any(|id| {
            *id == ds.domains.top || owner.get(id).is_some_and(|&o| proper_ancestor(o, w))
        });
        c3 |= containing.len() < 2 || !via_head;
        let ordered = own
            .windows(2)
            .all(|p| p[0].last().unwrap() < p[1].first().unwrap());
        let union: BTreeSet<usize> = own.iter().flat_map(|s| s.iter().copied()).collect();
        // A lone domain's own continuity is the contiguity check's business.
        c4 |= !ordered || (own.len() > 1 && !is_interval(&union));
    }
    BTreeMap::from([
        (Condition::Contiguity, contiguity),
        (Condition::Hierarchy, hierarchy),
        (Condition::TopDomain, top),
        (Condition::OwnDomain, c1),
        (Condition::Disjoint, c2),
        (Condition::HeadDomain, c3),
        (Condition::SequenceOrder, c4),
    ])
}
