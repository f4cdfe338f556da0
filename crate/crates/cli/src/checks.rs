//! Invariant suites run by `weylfock check`.

use rayon::prelude::*;

use weylfock::characters::{
    apply_f, enumerate, fock_coordinates, invariants_equal, label_from_fock, label_from_weights, twist,
    weight_functions, EnumerateOptions, Twist,
};
use weylfock::ffield::{necklace_count, Classification};
use weylfock::{
    CharacterLabel, ChargedMultipartition, ChargedPartition, Family, FockVector, FqContext, GlobalContext, Partition,
    QIndex, Sign,
};

pub const SUITES: [&str; 9] =
    ["kerov", "injectivity", "fock", "symbols", "separation", "twists", "branching", "roundtrip", "ff"];

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_weight: u32,
    pub max_rank: u32,
    pub max_charge: i64,
}

pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn collect(name: &'static str, results: Vec<Result<(), String>>) -> SuiteResult {
        let passed = results.iter().filter(|r| r.is_ok()).count();
        let failures = results.into_iter().filter_map(Result::err).collect();
        SuiteResult { name, passed, failures }
    }
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn qu_labels(max_rank: u32) -> Vec<CharacterLabel> {
    let opts = EnumerateOptions { quadratic_unipotent: true, ..Default::default() };
    let mut out = Vec::new();
    for f in Family::ALL {
        for n in 0..=max_rank {
            out.extend(enumerate(f, n, &opts));
        }
    }
    out
}

pub fn run(name: &str, limits: Limits, ctx: &GlobalContext) -> Option<SuiteResult> {
    let r = match name {
        "kerov" => kerov(limits),
        "injectivity" => injectivity(limits),
        "fock" => fock(limits),
        "symbols" => symbols(limits),
        "separation" => separation(limits, ctx),
        "twists" => twists(limits, ctx),
        "branching" => branching(limits, ctx),
        "roundtrip" => roundtrip(limits, ctx),
        "ff" => ff(ctx),
        _ => return None,
    };
    Some(r)
}

fn kerov(l: Limits) -> SuiteResult {
    let cases: Vec<_> = Partition::all_up_to(l.max_weight)
        .into_iter()
        .flat_map(|mu| (-l.max_charge..=l.max_charge).map(move |c| ChargedPartition::new(mu.clone(), c)))
        .collect();
    let results = cases
        .par_iter()
        .map(|cp| {
            let seq = cp.to_interlacing();
            let back = ChargedPartition::from_interlacing(&seq).ok();
            check(seq.center() == cp.charge && back.as_ref() == Some(cp), || format!("roundtrip of {cp}"))
        })
        .collect();
    SuiteResult::collect("kerov", results)
}

fn injectivity(l: Limits) -> SuiteResult {
    let mut results = Vec::new();
    for eps in [Sign::Plus, Sign::Minus] {
        let mut seen = std::collections::BTreeMap::new();
        for mu in Partition::all_up_to(l.max_weight) {
            for c in -l.max_charge..=l.max_charge {
                let cp = ChargedPartition::new(mu.clone(), c);
                let prev = seen.insert(cp.residue_function(eps), cp.clone());
                results.push(check(prev.is_none(), || format!("{} and {cp} collide", prev.unwrap())));
            }
        }
    }
    SuiteResult::collect("injectivity", results)
}

fn fock(l: Limits) -> SuiteResult {
    let mut roots = Vec::new();
    for e in -l.max_charge..=l.max_charge {
        roots.push(QIndex::pos(e));
        roots.push(QIndex::neg(e));
    }
    let pairs: Vec<(QIndex, QIndex)> = roots.iter().flat_map(|&a| roots.iter().map(move |&b| (a, b))).collect();
    let results = pairs
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            ChargedMultipartition::all_up_to(&[a, b], l.max_weight).into_iter().flat_map(|v| {
                let basis = FockVector::basis(v.clone());
                let residues = v.active_residues();
                let mut out = Vec::new();
                for &i in &residues {
                    let lhs = basis.f_apply(i).e_apply(i).minus(&basis.e_apply(i).f_apply(i));
                    out.push(check(lhs == basis.scale(v.n_i(i)), || format!("[e,f] at {i} on {:?}", v.lambdas)));
                    for &j in residues.iter().filter(|&&j| j != i) {
                        let ok = basis.f_apply(j).e_apply(i) == basis.e_apply(i).f_apply(j);
                        out.push(check(ok, || format!("e_{i} f_{j} on {:?}", v.lambdas)));
                    }
                }
                out
            })
        })
        .collect();
    SuiteResult::collect("fock", results)
}

fn symbols(l: Limits) -> SuiteResult {
    let mut results = Vec::new();
    for rank in 0..=l.max_rank as i64 {
        for d in -7..=7 {
            for s in weylfock::Symbol::with_rank_and_defect(rank, d) {
                results.push(check(s.rank() == rank && s.defect() == d && s.is_reduced(), || format!("{s}")));
                let back = weylfock::Symbol::upsilon_inverse(&s.upsilon(), d);
                results.push(check(back == s, || format!("Υ roundtrip of {s}")));
                for m in s.one_hook_additions() {
                    let undone = m.symbol.one_hook_removals().iter().any(|r| r.symbol == s);
                    results.push(check(undone && m.symbol.rank() == rank + 1, || format!("1-hook on {s}")));
                }
            }
        }
    }
    SuiteResult::collect("symbols", results)
}

fn separation(l: Limits, ctx: &GlobalContext) -> SuiteResult {
    let labels = qu_labels(l.max_rank);
    let results = labels
        .par_iter()
        .flat_map_iter(|a| {
            labels.iter().filter(|b| b.family == a.family).map(move |b| {
                let eq = invariants_equal(a, b, ctx).unwrap_or(false);
                check(eq == (a == b), || format!("{a} vs {b}"))
            })
        })
        .collect();
    SuiteResult::collect("separation", results)
}

fn twists(l: Limits, ctx: &GlobalContext) -> SuiteResult {
    let results = qu_labels(l.max_rank)
        .par_iter()
        .flat_map_iter(|lab| {
            let (op, om) = weight_functions(lab, ctx).expect("enumerated labels are valid");
            let gs: &[Twist] = match lab.family {
                Family::Sp => &[Twist::Diag],
                Family::Oodd => &[Twist::Det, Twist::Sp],
                Family::Oeven => &[Twist::Det, Twist::Sp, Twist::Diag],
            };
            gs.iter()
                .map(|&g| {
                    let t = twist(lab, g, ctx).expect("valid twist");
                    let got = weight_functions(&t, ctx).expect("twisted labels are valid");
                    let want = match g {
                        Twist::Det => (op.negate_variable(), om.negate_variable()),
                        Twist::Sp => (om.clone(), op.clone()),
                        Twist::Diag => (op.clone(), om.negate_variable()),
                    };
                    check(got == want, || format!("{g:?} on {lab}"))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    SuiteResult::collect("twists", results)
}

fn branching(l: Limits, ctx: &GlobalContext) -> SuiteResult {
    let results = qu_labels(l.max_rank)
        .par_iter()
        .flat_map_iter(|lab| {
            let coords = fock_coordinates(lab, ctx).expect("enumerated labels are valid");
            let mut out = Vec::new();
            for (k, colour) in [Sign::Plus, Sign::Minus].into_iter().enumerate() {
                for i in coords[k].active_residues() {
                    let mut predicted: Vec<_> = coords[k]
                        .f_apply(i)
                        .terms()
                        .map(|(v, _)| {
                            let mut w = coords.clone();
                            w[k] = v.clone();
                            w
                        })
                        .collect();
                    let mut actual: Vec<_> = apply_f(lab, colour, i, ctx)
                        .expect("branching on a valid label")
                        .iter()
                        .map(|x| fock_coordinates(x, ctx).expect("valid output"))
                        .collect();
                    predicted.sort();
                    actual.sort();
                    out.push(check(predicted == actual, || format!("F^{colour}_{i} on {lab}")));
                }
            }
            out
        })
        .collect();
    SuiteResult::collect("branching", results)
}

fn roundtrip(l: Limits, ctx: &GlobalContext) -> SuiteResult {
    let results = qu_labels(l.max_rank)
        .par_iter()
        .map(|lab| {
            let sup = lab.cuspidal_support(ctx).map_err(|e| e.to_string())?;
            let coords = fock_coordinates(lab, ctx).map_err(|e| e.to_string())?;
            let back = label_from_fock(&coords, &sup, ctx).map_err(|e| e.to_string())?;
            let (op, om) = weight_functions(lab, ctx).map_err(|e| e.to_string())?;
            let from_w = label_from_weights(&op, &om, lab.family, ctx).map_err(|e| e.to_string())?;
            check(back == *lab && from_w == *lab, || format!("roundtrip of {lab}"))
        })
        .collect();
    SuiteResult::collect("roundtrip", results)
}

fn ff(ctx: &GlobalContext) -> SuiteResult {
    let mut results = Vec::new();
    let k = match FqContext::new(ctx.q()) {
        Ok(k) => k,
        Err(e) => return SuiteResult { name: "ff", passed: 0, failures: vec![e.to_string()] },
    };
    for d in 1..=4usize {
        let Ok(irr) = k.irreducibles(d) else { break };
        let q = ctx.q();
        results.push(check(irr.len() as u64 == necklace_count(q, d as u32), || format!("count at degree {d}")));
        for f in irr.iter().filter(|f| f.coeffs() != [0, 1]) {
            let dd = k.dual(f).and_then(|g| k.dual(&g));
            results.push(check(dd.as_ref() == Ok(f), || format!("dual of {f}")));
            if let Ok(Classification::F1 { .. } | Classification::F2 { .. }) = k.classify(f) {
                let d = k.descriptor(f).expect("classified");
                let n = k.descriptor(&k.negate_class(f)).expect("negation keeps the class");
                let want = d.sigma * d.epsilon() * ctx.zeta_minus_one().pow(d.delta as i64);
                results.push(check(n.sigma == want, || format!("σ of −Γ for {f}")));
            }
        }
    }
    SuiteResult::collect("ff", results)
}
