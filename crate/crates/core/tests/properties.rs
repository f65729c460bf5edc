//! Property suite: the closure, bound, section, gap, line, and basis laws
//! checked on randomized structures.

use proptest::prelude::*;

use ordcalc_core::poset::{BoundSide, ClosureSide, Poset};
use ordcalc_core::relation::{Comparability, RelationStructure, Side};
use ordcalc_core::set::ElemSet;
use ordcalc_core::transitive::{self, BaseMode};
use ordcalc_core::universal;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

fn arb_poset(max_n: usize) -> BoxedStrategy<Poset> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let cells = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), cells))
        })
        .prop_map(|(n, edges)| {
            let names = names(n);
            let mut pairs = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if edges[k] {
                        pairs.push((names[i].clone(), names[j].clone()));
                    }
                    k += 1;
                }
            }
            Poset::from_generators(
                names.clone(),
                pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .expect("closures of acyclic generators are orders")
        })
        .boxed()
}

fn arb_relation(max_n: usize) -> BoxedStrategy<RelationStructure> {
    (0..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n)))
        .prop_map(|(n, cells)| {
            let names = names(n);
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if cells[i * n + j] {
                        pairs.push((names[i].clone(), names[j].clone()));
                    }
                }
            }
            RelationStructure::new(
                names.clone(),
                pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .unwrap()
        })
        .boxed()
}

fn arb_subset(p: &Poset) -> BoxedStrategy<ElemSet> {
    let n = p.len();
    proptest::collection::vec(any::<bool>(), n)
        .prop_map(move |bits| {
            ElemSet::from_indices(n, (0..n).filter(|&i| bits[i]))
        })
        .boxed()
}

fn poset_and_subset(max_n: usize) -> BoxedStrategy<(Poset, ElemSet)> {
    arb_poset(max_n)
        .prop_flat_map(|p| {
            let s = arb_subset(&p);
            (Just(p), s)
        })
        .boxed()
}

fn pointwise_below(p: &Poset, a: &ElemSet, b: &ElemSet) -> bool {
    a.iter().all(|x| b.iter().all(|y| p.less(x, y)))
}

proptest! {
    #[test]
    fn bound_identities((p, a) in poset_and_subset(7)) {
        let upper = p.bounds(&a, BoundSide::Upper);
        let lower = p.bounds(&a, BoundSide::Lower);

        // the bounds sandwich the set pointwise
        prop_assert!(pointwise_below(&p, &lower, &a));
        prop_assert!(pointwise_below(&p, &a, &upper));

        // upper(A) is the union of every H pointwise above A
        let n = p.len();
        let mut union = ElemSet::empty(n);
        for mask in 0u32..1 << n {
            let h = ElemSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            if pointwise_below(&p, &a, &h) {
                union.union_with(&h);
            }
        }
        prop_assert_eq!(&upper, &union);

        // upper(lower(upper(A))) collapses back, and dually
        let again = p.bounds(&p.bounds(&upper, BoundSide::Lower), BoundSide::Upper);
        prop_assert_eq!(&again, &upper);
        let again = p.bounds(&p.bounds(&lower, BoundSide::Upper), BoundSide::Lower);
        prop_assert_eq!(&again, &lower);

        // the majorant is a final section, and majorizing the initial
        // closure changes nothing
        prop_assert!(p.section_predicates(&upper).is_final);
        let down = p.close(&a, ClosureSide::Initial);
        prop_assert_eq!(&p.bounds(&down, BoundSide::Upper), &upper);
    }

    #[test]
    fn bound_antitonicity((p, a) in poset_and_subset(7), extra in any::<u64>()) {
        let n = p.len();
        let mut b = a.clone();
        for i in 0..n {
            if extra >> i & 1 == 1 {
                b.insert(i);
            }
        }
        // a ⊆ b
        prop_assert!(p.bounds(&b, BoundSide::Upper).is_subset(&p.bounds(&a, BoundSide::Upper)));
        prop_assert!(p.bounds(&b, BoundSide::Lower).is_subset(&p.bounds(&a, BoundSide::Lower)));
        prop_assert!(p.close(&a, ClosureSide::Initial).is_subset(&p.close(&b, ClosureSide::Initial)));
        prop_assert!(p.close(&a, ClosureSide::Final).is_subset(&p.close(&b, ClosureSide::Final)));
    }

    #[test]
    fn closure_coincidence_forces_equal_majorants((p, a) in poset_and_subset(7), extra in any::<u64>()) {
        // b = a plus part of a's initial closure shares a's initial closure
        let down = p.close(&a, ClosureSide::Initial);
        let mut b = a.clone();
        for (k, i) in down.iter().enumerate() {
            if extra >> (k % 64) & 1 == 1 {
                b.insert(i);
            }
        }
        prop_assert_eq!(&p.close(&b, ClosureSide::Initial), &down);
        prop_assert_eq!(
            &p.bounds(&b, BoundSide::Upper),
            &p.bounds(&a, BoundSide::Upper)
        );
    }

    #[test]
    fn initial_sections_are_closed_under_union_and_intersection((p, a) in poset_and_subset(7), b in any::<u64>()) {
        let n = p.len();
        let down_a = p.close(&a, ClosureSide::Initial);
        let down_b = p.close(
            &ElemSet::from_indices(n, (0..n).filter(|&i| b >> i & 1 == 1)),
            ClosureSide::Initial,
        );
        prop_assert!(p.section_predicates(&down_a.union(&down_b)).is_initial);
        prop_assert!(p.section_predicates(&down_a.intersection(&down_b)).is_initial);

        // the initial closure is the least initial section containing the set
        for mask in 0u32..1 << n {
            let s = ElemSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            if p.section_predicates(&s).is_initial && a.is_subset(&s) {
                prop_assert!(down_a.is_subset(&s));
            }
        }
    }

    #[test]
    fn majorant_classes_are_closed_under_union((p, a) in poset_and_subset(5)) {
        let n = p.len();
        let upper = p.bounds(&a, BoundSide::Upper);
        let mut union = ElemSet::empty(n);
        for mask in 0u32..1 << n {
            let h = ElemSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            if p.bounds(&h, BoundSide::Upper) == upper {
                union.union_with(&h);
            }
        }
        prop_assert_eq!(&p.bounds(&union, BoundSide::Upper), &upper);
    }

    #[test]
    fn finally_superior_orders_the_subsets(p in arb_poset(4)) {
        let n = p.len();
        let subsets: Vec<ElemSet> = (0u32..1 << n)
            .map(|m| ElemSet::from_indices(n, (0..n).filter(|&i| m >> i & 1 == 1)))
            .collect();
        let fs = |a: &ElemSet, b: &ElemSet| p.subset_relations(a, b).finally_superior;
        for a in &subsets {
            prop_assert!(!fs(a, a));
        }
        for a in &subsets {
            for b in &subsets {
                if fs(a, b) {
                    for c in &subsets {
                        if fs(b, c) {
                            prop_assert!(fs(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn side_closures_respect_inversion(r in arb_relation(6), mask in any::<u64>()) {
        let n = r.len();
        let a = ElemSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
        let inv = r.invert();
        prop_assert!(a.is_subset(&r.close_side(&a, Side::Left)));
        prop_assert_eq!(r.close_side(&a, Side::Right), inv.close_side(&a, Side::Left));
        prop_assert_eq!(r.close_side(&a, Side::Left), inv.close_side(&a, Side::Right));
        prop_assert_eq!(inv.invert(), r.clone());

        // comparability agrees up to swapping the asymmetric directions
        for x in 0..n {
            for y in 0..n {
                let fwd = r.comparability_idx(x, y);
                let bwd = r.comparability_idx(y, x);
                let expected = match fwd {
                    Comparability::AsymmetricForward => Comparability::AsymmetricBackward,
                    Comparability::AsymmetricBackward => Comparability::AsymmetricForward,
                    other => other,
                };
                prop_assert_eq!(bwd, expected);
            }
        }
    }

    #[test]
    fn components_partition_and_are_relatively_closed(r in arb_relation(6)) {
        let comps = r.connected_components();
        let mut seen: Vec<String> = Vec::new();
        for c in &comps {
            seen.extend(c.names().iter().cloned());
            prop_assert_eq!(c.connected_components().len(), 1);
        }
        seen.sort();
        prop_assert_eq!(&seen[..], r.names());

        let (kernel, residue) = r.kernel();
        prop_assert_eq!(kernel.len() + residue.len(), r.len());
    }

    #[test]
    fn deductive_closure_laws(r in arb_relation(6), denser in arb_relation(6)) {
        let (c, trace) = r.deductive_closure();
        prop_assert!(c.is_transitive());
        for (a, b) in r.pairs() {
            prop_assert!(c.has_pair(a, b));
        }
        let (cc, _) = c.deductive_closure();
        prop_assert_eq!(&cc, &c);
        let last = trace.stages.len() - 1;
        prop_assert_eq!(&trace.stages[last], &trace.stages[last - 1]);
        prop_assert_eq!(trace.stage_count, trace.stages.len() - 2);

        // monotone when the pair set only grows
        if denser.len() == r.len() {
            let union = RelationStructure::new(
                r.names().iter().map(String::as_str),
                r.pairs_by_name()
                    .into_iter()
                    .chain(denser.pairs_by_name())
                    .collect::<Vec<_>>()
                    .iter()
                    .map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .unwrap();
            let (cu, _) = union.deductive_closure();
            for (a, b) in c.pairs() {
                prop_assert!(cu.has_pair(a, b));
            }
        }
    }

    #[test]
    fn closed_structures_satisfy_the_symmetry_laws(r in arb_relation(6)) {
        let (c, _) = r.deductive_closure();
        let n = c.len();
        for a in 0..n {
            for b in 0..n {
                if c.has_pair(a, b) && c.has_pair(b, a) {
                    // symmetric pairs are reflexive
                    prop_assert!(c.has_pair(a, a) && c.has_pair(b, b));
                    for x in 0..n {
                        // symmetric to a third means symmetric to each other
                        if c.has_pair(a, x) && c.has_pair(x, a) {
                            prop_assert!(c.has_pair(b, x) && c.has_pair(x, b));
                        }
                    }
                }
            }
        }
        // every complete line holds all symmetric partners of its members
        for line in transitive::complete_lines(&c) {
            for m in line.iter() {
                for x in 0..n {
                    if x != m && c.has_pair(m, x) && c.has_pair(x, m) {
                        prop_assert!(line.contains(x));
                    }
                }
            }
        }
    }

    #[test]
    fn absolute_base_is_the_covering_relation(p in arb_poset(5)) {
        let closed = p.structure();
        let absolute = transitive::bases(closed, BaseMode::Absolute, 63).unwrap();
        prop_assert_eq!(absolute.len(), 1);
        prop_assert_eq!(&absolute[0], &p.covers());
        prop_assert!(transitive::is_base(closed, &absolute[0]).unwrap());
    }

    #[test]
    fn gap_order_laws(p in arb_poset(5)) {
        let go = p.gap_order(20).unwrap();
        for (i, g) in go.gaps.iter().enumerate() {
            for (j, h) in go.gaps.iter().enumerate() {
                if i == j { continue; }
                let gi = go.order.index_of(&go.tokens[i]).unwrap();
                let hj = go.order.index_of(&go.tokens[j]).unwrap();
                if go.order.less(gi, hj) {
                    // the lower part only grows along the natural order
                    prop_assert!(g.lower.is_subset(&h.lower));
                }
                if g.lower.is_subset(&h.lower) && g.upper.is_subset(&h.upper) {
                    prop_assert!(!go.order.comparable(gi, hj));
                }
            }
        }
    }

    #[test]
    fn narrow_gap_forms((p, a) in poset_and_subset(6)) {
        // gaps built from the two bound operators are narrow
        use ordcalc_core::gaps::Gap;
        let upper = p.bounds(&a, BoundSide::Upper);
        let lower_of_upper = p.bounds(&upper, BoundSide::Lower);
        let g = Gap::new(lower_of_upper, upper);
        let info = p.classify_gap(&g).unwrap();
        prop_assert!(info.narrow);
    }

    #[test]
    fn disjunctive_cuts_and_blocks(p in arb_poset(6)) {
        let cuts = p.disjunctive_chain();
        // total under the natural order, lower parts strictly growing
        for w in cuts.windows(2) {
            prop_assert!(w[0].lower.is_subset(&w[1].lower));
            prop_assert!(!w[0].upper.is_disjoint(&w[1].lower));
        }
        // jumps: the cuts around one element are adjacent
        for m in 0..p.len() {
            let before = cuts.iter().rposition(|g| g.upper.contains(m)).unwrap();
            let after = cuts.iter().position(|g| g.lower.contains(m)).unwrap();
            prop_assert_eq!(after, before + 1);
        }

        // blocks rebuild the order: all cross-block pairs related downward
        let blocks = p.block_decomposition();
        let mut total = 0;
        for (i, x) in blocks.iter().enumerate() {
            total += x.len();
            for y in blocks.iter().skip(i + 1) {
                prop_assert!(pointwise_below(&p, x, y));
            }
        }
        prop_assert_eq!(total, p.len());
    }

    #[test]
    fn lines_and_transversals_cross_thinly(p in arb_poset(5)) {
        let n = p.len();
        let lines = p.complete_lines();
        let transversals = p.complete_transversals();
        if n > 0 {
            prop_assert!(!lines.is_empty());
        }
        for line in &lines {
            let line_set = ElemSet::from_indices(n, line.iter().copied());
            for t in &transversals {
                prop_assert!(t.intersection(&line_set).len() <= 1);
            }
        }
        for t in &transversals {
            for z in t.complement().iter() {
                let below = !t.intersection(&p.down(z)).is_empty();
                let above = !t.intersection(p.up(z)).is_empty();
                prop_assert!(below != above);
            }
        }
        // maximal elements always form a transversal, maybe incomplete
        let maxima = p.extremes().maxima;
        for a in maxima.iter() {
            for b in maxima.iter() {
                prop_assert!(a == b || !p.comparable(a, b));
            }
        }
    }

    #[test]
    fn lines_pass_gaps_by_the_criterion(p in arb_poset(5)) {
        let gaps = p.enumerate_gaps(20).unwrap();
        let lines = p.complete_lines();
        for line in &lines {
            let line_set = ElemSet::from_indices(p.len(), line.iter().copied());
            for g in &gaps {
                let report = p.line_passes_gap(&line_set, g).unwrap();
                prop_assert!(report.criterion_agrees);

                // three-part lemma: L∩A < L∩N < L∩B pointwise, and L∩A is a
                // complete line of the induced order under L∩N
                let neutral = g.lower.union(&g.upper).complement();
                let la = line_set.intersection(&g.lower);
                let ln = line_set.intersection(&neutral);
                let lb = line_set.intersection(&g.upper);
                prop_assert!(pointwise_below(&p, &la, &ln));
                prop_assert!(pointwise_below(&p, &ln, &lb));
                prop_assert!(pointwise_below(&p, &la, &lb));
                if !ln.is_empty() {
                    let region = p.bounds(&ln, BoundSide::Lower);
                    let induced = p.induced(&region);
                    if !la.is_empty() {
                        let la_names = p.names_of(&la);
                        let la_in = induced.set_from_names(la_names.iter().map(String::as_str)).unwrap();
                        prop_assert!(induced.require_complete_line(&la_in).is_ok());
                    }
                }
            }
        }
        // every complete line passes every disjunctive gap
        for line in &lines {
            let line_set = ElemSet::from_indices(p.len(), line.iter().copied());
            for g in p.disjunctive_chain() {
                prop_assert!(p.line_passes_gap(&line_set, &g).unwrap().passes);
            }
        }
    }

    #[test]
    fn one_sided_crossing_gaps_of_a_complete_line_are_incomparable(p in arb_poset(5)) {
        use ordcalc_core::gaps::Gap;
        for line in p.complete_lines() {
            let line_set = ElemSet::from_indices(p.len(), line.iter().copied());
            for cut in p.induced(&line_set).disjunctive_chain() {
                let i: Vec<String> = p.induced(&line_set).names_of(&cut.lower);
                let f: Vec<String> = p.induced(&line_set).names_of(&cut.upper);
                let i_set = p.set_from_names(i.iter().map(String::as_str)).unwrap();
                let f_set = p.set_from_names(f.iter().map(String::as_str)).unwrap();
                let upper_i = p.bounds(&i_set, BoundSide::Upper);
                let lower_f = p.bounds(&f_set, BoundSide::Lower);
                let g1 = Gap::new(p.bounds(&upper_i, BoundSide::Lower), upper_i.clone());
                let g2 = Gap::new(lower_f.clone(), p.bounds(&lower_f, BoundSide::Upper));
                p.validate_gap(&g1).unwrap();
                p.validate_gap(&g2).unwrap();
                prop_assert!(g1.upper.is_disjoint(&g2.lower) && g2.upper.is_disjoint(&g1.lower));
            }
        }
    }

    #[test]
    fn quotient_classes_cut_lines_into_intervals(r in arb_relation(5)) {
        let (closed, _) = r.deductive_closure();
        let (pre, _) = ordcalc_core::quotient::Preorder::normalizing(closed).unwrap();
        let q = pre.quotient();
        let s = pre.structure();
        for line in transitive::complete_lines(s) {
            for class in &q.classes {
                let shared = class.intersection(&line);
                // anything the line puts between two class members joins the class
                for a in shared.iter() {
                    for b in shared.iter() {
                        for x in line.iter() {
                            if s.has_pair(a, x) && s.has_pair(x, b) {
                                prop_assert!(class.contains(x));
                            }
                        }
                    }
                }
            }
        }
        // the exchange law between the classification and the strict part
        let strict = pre.strict_part();
        for a in 0..pre.len() {
            for a2 in 0..pre.len() {
                if q.projection[a] != q.projection[a2] {
                    continue;
                }
                for b in 0..pre.len() {
                    if strict.less(a, b) {
                        prop_assert!(strict.less(a2, b));
                    }
                    if strict.less(b, a) {
                        prop_assert!(strict.less(b, a2));
                    }
                }
            }
        }
    }

    #[test]
    fn psi_embeddings_validate(p in arb_poset(5)) {
        let psi = universal::embed_via_psi(&p, 50_000, "a").unwrap();
        prop_assert!(universal::is_embedding(&p, &psi.host, &psi.map));
    }

    #[test]
    fn linear_basis_redundancy(p in arb_poset(5)) {
        let lines = p.complete_lines();
        if lines.len() > 12 {
            return Ok(());
        }
        let k = lines.len();
        let all: Vec<usize> = (0..k).collect();
        for drop in 0..k {
            // a line whose adjacent pairs all appear in other lines is redundant
            let covered = lines[drop].windows(2).all(|w| {
                (0..k).any(|other| {
                    other != drop
                        && lines[other]
                            .windows(2)
                            .any(|v| v[0] == w[0] && v[1] == w[1])
                })
            });
            if covered {
                let rest: Vec<usize> = all.iter().copied().filter(|&i| i != drop).collect();
                prop_assert!(p.is_linear_basis(&rest).unwrap());
            }
        }
    }
}
