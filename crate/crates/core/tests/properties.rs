use proptest::prelude::*;

use weylfock::characters::{
    self, apply_e, apply_f, enumerate, fock_coordinates, label_from_fock, label_from_weights, twist, weight_functions,
    EnumerateOptions, Twist,
};
use weylfock::symbols::CuspidalKind;
use weylfock::theta::{first_occurrence, is_theta_cuspidal, ThetaCase, TowerTag};
use weylfock::{
    Bipartition, CharacterLabel, ChargedMultipartition, ChargedPartition, Family, FqContext, GammaClass,
    GammaDescriptor, GlobalContext, Partition, QIndex, RootRatio, Sign, StarPart, Symbol, Weight,
};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..7, 0..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

fn qindex() -> impl Strategy<Value = QIndex> {
    (sign(), -12i64..12).prop_map(|(s, e)| QIndex::new(s, e))
}

fn ratio() -> impl Strategy<Value = RootRatio<QIndex>> {
    (prop::collection::vec(qindex(), 0..5), prop::collection::vec(qindex(), 0..5))
        .prop_map(|(z, p)| RootRatio::make(z, p))
}

fn row() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::btree_set(0u32..9, 0..5).prop_map(|s| s.into_iter().rev().collect())
}

fn symbol() -> impl Strategy<Value = Symbol> {
    (row(), row()).prop_map(|(x, y)| Symbol::new(x, y).unwrap())
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Sp), Just(Family::Oodd), Just(Family::Oeven)]
}

fn context() -> impl Strategy<Value = GlobalContext> {
    prop_oneof![Just(3u64), Just(5), Just(7), Just(9), Just(25), Just(27)].prop_map(|q| GlobalContext::new(q).unwrap())
}

fn pool() -> Vec<GammaDescriptor> {
    vec![
        GammaDescriptor::new(GammaClass::F1, 1, Sign::Minus),
        GammaDescriptor::new(GammaClass::F2, 1, Sign::Plus),
        GammaDescriptor::new(GammaClass::F2, 2, Sign::Minus),
    ]
}

/// A random label of rank at most 5, possibly with a star part.
fn label() -> impl Strategy<Value = CharacterLabel> {
    (family(), 0u32..=5, any::<prop::sample::Index>(), any::<bool>()).prop_map(|(f, n, idx, star)| {
        let opts = EnumerateOptions { quadratic_unipotent: !star, star_bound: 2, gammas: pool() };
        let all = enumerate(f, n, &opts);
        all[idx.index(all.len())].clone()
    })
}

/// An orthogonal label whose star part only involves `F2` polynomials.
fn orthogonal_f2_label() -> impl Strategy<Value = CharacterLabel> {
    let f = prop_oneof![Just(Family::Oodd), Just(Family::Oeven)];
    (f, 0u32..=5, any::<prop::sample::Index>(), any::<bool>()).prop_map(|(f, n, idx, star)| {
        let gammas = pool().into_iter().filter(|g| g.class == GammaClass::F2).collect();
        let opts = EnumerateOptions { quadratic_unipotent: !star, star_bound: 2, gammas };
        let all = enumerate(f, n, &opts);
        all[idx.index(all.len())].clone()
    })
}

fn qu_label() -> impl Strategy<Value = CharacterLabel> {
    (family(), 0u32..=5, any::<prop::sample::Index>()).prop_map(|(f, n, idx)| {
        let opts = EnumerateOptions { quadratic_unipotent: true, ..Default::default() };
        let all = enumerate(f, n, &opts);
        all[idx.index(all.len())].clone()
    })
}

fn colour() -> impl Strategy<Value = Sign> {
    sign()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }

    #[test]
    fn beta_sets_shift_and_reduce(p in partition(), extra in 0usize..4, d in 0u32..4) {
        let b = p.beta_set(p.len() + extra).unwrap();
        prop_assert_eq!(b.partition(), p.clone());
        prop_assert_eq!(b.shift(d).partition(), p.clone());
        prop_assert!(b.shift(d).equivalent(&b));
        prop_assert_eq!(b.reduce().partition(), p);
    }

    #[test]
    fn hooks_add_d_boxes(p in partition(), d in 1u32..5) {
        let b = p.beta_set(p.len() + d as usize).unwrap();
        for (x, _) in b.d_hooks(d) {
            let c = b.add_hook(x, d).unwrap();
            prop_assert_eq!(c.partition().weight(), p.weight() + d);
        }
    }

    #[test]
    fn ratio_group_laws(a in ratio(), b in ratio()) {
        prop_assert!(a.product(&a.inverse()).is_one());
        prop_assert_eq!(a.product(&b), b.product(&a));
        prop_assert_eq!(a.product(&b).degree(), a.degree() + b.degree());
        prop_assert_eq!(a.negate_variable().negate_variable(), a.clone());
        prop_assert_eq!(a.sign_part(Sign::Plus).product(&a.sign_part(Sign::Minus)), a);
    }

    #[test]
    fn qindex_text_roundtrip(a in qindex()) {
        prop_assert_eq!(QIndex::parse(&a.to_string()), Some(a));
    }

    #[test]
    fn ratio_json_roundtrip(a in ratio()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: RootRatio<QIndex> = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn symbols_are_reduced_and_upsilon_inverts(s in symbol()) {
        prop_assert!(s.is_reduced());
        let b = s.upsilon();
        prop_assert_eq!(Symbol::upsilon_inverse(&b, s.defect()), s.clone());
        prop_assert_eq!(b.weight() as i64, s.rank() - (s.defect() * s.defect()).div_euclid(4));
        prop_assert_eq!(s.shift().reduce(), s.clone());
        prop_assert_eq!(s.shift().rank(), s.rank());
        prop_assert_eq!(s.transpose().defect(), -s.defect());
    }

    #[test]
    fn one_hooks_move_rank_by_one(s in symbol()) {
        for m in s.one_hook_additions() {
            prop_assert_eq!(m.symbol.rank(), s.rank() + 1);
            prop_assert_eq!(m.symbol.defect(), s.defect());
            prop_assert!(m.symbol.one_hook_removals().iter().any(|r| r.symbol == s && r.row == m.row && r.content == m.content));
        }
        for m in s.one_hook_removals() {
            prop_assert_eq!(m.symbol.rank(), s.rank() - 1);
            prop_assert!(m.symbol.one_hook_additions().iter().any(|a| a.symbol == s));
        }
        prop_assert_eq!(s.one_hook_removals().is_empty(), s.is_cuspidal());
    }

    #[test]
    fn hook_contents_match_upsilon(s in symbol()) {
        let b = s.upsilon();
        for m in s.one_hook_additions() {
            let (before, after) = match m.row {
                weylfock::symbols::Row::X => (&b.first, m.symbol.upsilon().first),
                weylfock::symbols::Row::Y => (&b.second, m.symbol.upsilon().second),
            };
            let added: Vec<_> = before.addable_cells().into_iter().filter(|c| before.with_box(c.0) == after).collect();
            prop_assert_eq!(added.len(), 1);
            prop_assert_eq!(added[0].1 as i64 - added[0].0 as i64, m.content);
        }
    }

    #[test]
    fn interlacing_roundtrip(mu in partition(), c in -20i64..20) {
        let cp = ChargedPartition::new(mu, c);
        let seq = cp.to_interlacing();
        prop_assert_eq!(seq.center(), c);
        prop_assert_eq!(ChargedPartition::from_interlacing(&seq).unwrap(), cp.clone());
        for eps in [Sign::Plus, Sign::Minus] {
            prop_assert_eq!(ChargedPartition::invert_residue_function(&cp.residue_function(eps), eps).unwrap(), cp.clone());
        }
        prop_assert_eq!(cp.content_function().degree(), 1);
    }

    #[test]
    fn fock_f_lowers_weight_by_a_simple_root(a in partition(), b in partition(), xa in qindex(), xb in qindex(), i in qindex()) {
        let v = ChargedMultipartition::new(vec![a, b], vec![xa, xb]).unwrap();
        let w = v.weight();
        for (u, _) in v.f_apply(i).terms() {
            prop_assert_eq!(u.weight(), w.minus(&Weight::simple_root(i)));
        }
        for (u, _) in v.e_apply(i).terms() {
            prop_assert_eq!(u.weight(), w.plus(&Weight::simple_root(i)));
        }
        prop_assert_eq!(w.get(i), v.n_i(i));
    }

    #[test]
    fn fock_coordinates_roundtrip(l in label(), c in context()) {
        let sup = l.cuspidal_support(&c).unwrap();
        let coords = fock_coordinates(&l, &c).unwrap();
        prop_assert_eq!(label_from_fock(&coords, &sup, &c).unwrap(), l.clone());
        prop_assert!(l.validate(&c).is_ok());
    }

    #[test]
    fn weights_determine_quadratic_unipotent_labels(l in qu_label(), c in context()) {
        let (op, om) = weight_functions(&l, &c).unwrap();
        prop_assert_eq!(label_from_weights(&op, &om, l.family, &c).unwrap(), l);
    }

    #[test]
    fn weight_read_off_weight_functions(l in label(), c in context()) {
        let (op, om) = weight_functions(&l, &c).unwrap();
        let (wp, wm) = characters::weights(&l, &c).unwrap();
        for (o, w) in [(op, wp), (om, wm)] {
            let mut from_ratio = Weight::default();
            for (a, m) in o.support() {
                from_ratio.add(*a, m);
            }
            prop_assert_eq!(from_ratio, w);
        }
    }

    #[test]
    fn cuspidality_three_ways(l in label(), c in context(), i in qindex()) {
        let (op, om) = weight_functions(&l, &c).unwrap();
        for (colour, o) in [(Sign::Plus, op), (Sign::Minus, om)] {
            let cusp = l.lambda(colour).is_cuspidal();
            prop_assert_eq!(o.is_polynomial(), cusp);
            if cusp {
                prop_assert!(apply_e(&l, colour, i, &c).unwrap().is_empty());
            } else {
                let some = o.poles().into_iter().any(|p| !apply_e(&l, colour, p, &c).unwrap().is_empty());
                prop_assert!(some);
            }
        }
    }

    #[test]
    fn e_undoes_f(l in label(), c in context(), colour in colour()) {
        let coords = fock_coordinates(&l, &c).unwrap();
        let k = if colour.is_plus() { 0 } else { 1 };
        for i in coords[k].residue_function().zeros() {
            for l2 in apply_f(&l, colour, i, &c).unwrap() {
                prop_assert_eq!(l2.n, l.n + 1);
                prop_assert!(l2.validate(&c).is_ok());
                prop_assert!(apply_e(&l2, colour, i, &c).unwrap().contains(&l));
            }
        }
    }

    #[test]
    fn twists_are_involutions(l in label(), c in context()) {
        let gs: &[Twist] = match l.family {
            Family::Sp => &[Twist::Diag],
            Family::Oodd => &[Twist::Det, Twist::Sp],
            Family::Oeven => &[Twist::Det, Twist::Diag, Twist::Sp],
        };
        for &g in gs {
            let once = twist(&l, g, &c).unwrap();
            prop_assert!(once.validate(&c).is_ok());
            prop_assert_eq!(twist(&once, g, &c).unwrap(), l.clone());
        }
    }

    #[test]
    fn sp_swaps_weight_functions_on_f2_stars(l in orthogonal_f2_label(), c in context()) {
        let (op, om) = weight_functions(&l, &c).unwrap();
        let (sp, sm) = weight_functions(&twist(&l, Twist::Sp, &c).unwrap(), &c).unwrap();
        prop_assert_eq!((sp, sm), (om, op));
    }

    #[test]
    fn label_json_roundtrip(l in label()) {
        let s = serde_json::to_string(&l).unwrap();
        let back: CharacterLabel = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn first_occurrences_are_ordered(l in label(), c in context()) {
        let cases = match l.family {
            Family::Sp => vec![ThetaCase::II, ThetaCase::III { alpha: Sign::Plus }, ThetaCase::III { alpha: Sign::Minus }],
            _ => vec![ThetaCase::I],
        };
        for case in cases {
            if !is_theta_cuspidal(&l, case).unwrap() {
                prop_assert!(first_occurrence(&l, case, &c).is_err());
                continue;
            }
            let fo = first_occurrence(&l, case, &c).unwrap();
            let [a, b] = fo.entries;
            match case {
                // Both zeros of (u − 1)(u + 1) give the same dimension.
                ThetaCase::I => prop_assert!(a.dim < b.dim || l.lambda_plus.defect() == 0),
                ThetaCase::III { .. } => prop_assert!(a.dim < b.dim || l.lambda_minus.defect() == 0),
                ThetaCase::II => prop_assert!(a.dim < b.dim),
            }
            match case {
                ThetaCase::III { .. } => prop_assert!(a.dim % 2 == 1 && b.dim % 2 == 1),
                _ => prop_assert!(a.dim % 2 == 0 && b.dim % 2 == 0),
            }
            match case {
                ThetaCase::II => prop_assert_ne!(a.tower, b.tower),
                ThetaCase::III { .. } => prop_assert_ne!(a.tower, b.tower),
                ThetaCase::I => prop_assert!(a.tower != b.tower || a.tower == TowerTag::Unresolved),
            }
        }
    }
}

#[test]
fn negation_twists_sigma_by_class_sign() {
    for q in [3u64, 5, 7, 9, 11, 13] {
        let k = FqContext::new(q).unwrap();
        let zeta = k.zeta_minus_one();
        for delta in 1..=2usize {
            let mut gammas = k.self_dual_irreducibles(delta);
            gammas.extend(k.irreducibles(delta).unwrap().into_iter().filter(|f| k.descriptor(f).is_ok()));
            for f in gammas {
                let d = k.descriptor(&f).unwrap();
                let n = k.descriptor(&k.negate_class(&f)).unwrap();
                assert_eq!(n.sigma, d.sigma * d.epsilon() * zeta.pow(d.delta as i64), "q={q} Γ={f}");
                assert_eq!(d.negate(q).unwrap(), n);
                let abstract_neg = GammaDescriptor { poly: None, ..d.clone() }.negate(q).unwrap();
                assert_eq!(abstract_neg.sigma, n.sigma);
            }
        }
    }
}

#[test]
fn self_negating_quadratic_over_f3() {
    // x² + 1 = (−1)² (−x)² + 1, so σ(−Γ) = σ(Γ) whatever σ is, while ζ(−1) = −1 for q = 3.
    let k = FqContext::new(3).unwrap();
    let f = k.poly(vec![1, 0, 1]).unwrap();
    assert_eq!(k.negate_class(&f), f);
    assert_eq!(k.zeta_minus_one(), Sign::Minus);
}

#[test]
fn sp_twist_on_oodd_with_odd_f1_star_flips_weight_signs() {
    let c = GlobalContext::new(5).unwrap();
    let star = vec![StarPart {
        gamma: GammaDescriptor::new(GammaClass::F1, 1, Sign::Plus),
        partition: Partition::new(vec![1]).unwrap(),
    }];
    let l = CharacterLabel::new(
        Family::Oodd,
        Symbol::cuspidal(0, CuspidalKind::SpKind).unwrap(),
        Symbol::cuspidal(0, CuspidalKind::SpKind).unwrap(),
        star,
        Some(Sign::Plus),
    )
    .unwrap();
    let (op, om) = weight_functions(&l, &c).unwrap();
    let (sp, sm) = weight_functions(&twist(&l, Twist::Sp, &c).unwrap(), &c).unwrap();
    assert_eq!((sp.negate_variable(), sm.negate_variable()), (om, op));
}

#[test]
fn bipartition_counts() {
    let counts: Vec<usize> = (0..6).map(|n| Bipartition::all_of_weight(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 10, 20, 36]);
}
