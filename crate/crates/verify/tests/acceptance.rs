//! Acceptance run: one `PASS`/`FAIL` line per criterion.
//!
//! Criteria 3, 4, 9 and 10 do not hold as stated; their lines give the
//! counts that contradict them. The run exits nonzero only if the set of
//! failing criteria changes.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use polyperm_core::block::{block_permutation, l4d_partner, m4d, BlockParams};
use polyperm_core::realize::is_double_permutation_support;
use polyperm_core::trade::{
    complement_in_direction, complement_iterated, direct_sum, direction_coloring, direction_equivalence_classes,
    even_completion, is_unitrade,
};
use polyperm_core::{catalog, has_positive_diagonal, permanent_exact, EquivalenceElement, HyperMatrix, PermanentOptions};
use polyperm_core::{Shape, SupportSet, Q};
use polyperm_verify::claim_planes::PlanesSpace;
use polyperm_verify::lemmas::filled_intersection_profile;
use polyperm_verify::{run, ClaimId, EnumerationReport, RunConfig, Status};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria whose statement the searches contradict.
const EXPECTED_FAILURES: [usize; 4] = [3, 4, 9, 10];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn report(claim: ClaimId) -> EnumerationReport {
    run(claim, &RunConfig::default()).expect("claim run")
}

fn count(r: &EnumerationReport, key: &str) -> u64 {
    r.counts.get(key).copied().unwrap_or(u64::MAX)
}

fn random_element(r: &mut ChaCha8Rng, shape: Shape) -> EquivalenceElement {
    let mut pos: Vec<usize> = (0..shape.d()).collect();
    pos.shuffle(r);
    let sym = (0..shape.d())
        .map(|_| {
            let mut p: Vec<usize> = (0..shape.n()).collect();
            p.shuffle(r);
            p
        })
        .collect();
    EquivalenceElement::new(pos, sym).unwrap()
}

fn random_permutation(r: &mut ChaCha8Rng, d: usize) -> SupportSet {
    let eps = (0..d).map(|_| r.gen_range(1..=3)).collect();
    let lambda = (0..1 << d).map(|_| r.gen_bool(0.5)).collect();
    let p = block_permutation(&BlockParams::new(eps, r.gen_range(0..2), lambda).unwrap());
    random_element(r, p.shape()).apply_support(&p).unwrap()
}

fn naive_permanent(m: &HyperMatrix) -> Q {
    let perms: Vec<Vec<usize>> = {
        let mut out = vec![vec![]];
        for k in 0..4 {
            out = out
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (0..=p.len()).map(move |slot| {
                        let mut q = p.clone();
                        q.insert(slot, k);
                        q
                    })
                })
                .collect();
        }
        out
    };
    let mut total = Q::from_integer(0.into());
    for p1 in &perms {
        for p2 in &perms {
            let mut prod = Q::from_integer(1.into());
            for k in 0..4 {
                prod *= m.get(&[k, p1[k], p2[k]]);
            }
            total += prod;
        }
    }
    total
}

fn criterion_1() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(1);
    let shape = Shape::new(3, 4).unwrap();
    let mut agree = 0;
    for _ in 0..100 {
        let entries = (0..64)
            .map(|_| {
                if r.gen_bool(0.3) {
                    Q::from_integer(0.into())
                } else {
                    Q::new(r.gen_range(1..9).into(), r.gen_range(1..7).into())
                }
            })
            .collect();
        let m = HyperMatrix::new(shape, entries).unwrap();
        if permanent_exact(&m, PermanentOptions::default()).unwrap().value == naive_permanent(&m) {
            agree += 1;
        }
    }
    outcome(agree == 100, format!("{agree}/100 exact permanents equal the naive diagonal sum"))
}

fn criterion_2() -> Outcome {
    let r = report(ClaimId::Census44);
    let classes = count(&r, "classes");
    outcome(
        classes == 44 && r.status == Status::Confirmed,
        format!("{classes} classes over {} supports", count(&r, "supports")),
    )
}

fn criterion_3() -> Outcome {
    let r = report(ClaimId::ClaimAb);
    let ok_a = count(&r, "minimal-a-classes") == 2 && !r.notes.iter().any(|n| n.starts_with("minimal A"));
    let l1 = (count(&r, "list-1-size"), count(&r, "list-1-printed-found"));
    let l2 = (count(&r, "list-2-size"), count(&r, "list-2-printed-found"));
    let props = (count(&r, "property-1-counterexamples"), count(&r, "property-2-counterexamples"));
    outcome(
        ok_a && l1 == (5, 5) && l2 == (5, 5) && props == (0, 0),
        format!(
            "minimal A classes (A1),(A2): {ok_a}; List 1 has {} supports ({} printed); List 2 has {} ({} printed); \
             property counterexamples {} and {}",
            l1.0, l1.1, l2.0, l2.1, props.0, props.1
        ),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let space = PlanesSpace::new();
    let mut embedded = Vec::new();
    for (name, s) in catalog::plane_types() {
        if let Ok(Some(_)) = space.directed(s.word()) {
            embedded.push(name);
        }
    }
    let sub = embedded.len() == 8 && start.elapsed() < Duration::from_secs(300);
    let r = report(ClaimId::ClaimPlanes);
    let admitting = count(&r, "admitting-classes");
    let main = admitting == 8 && count(&r, "printed-types-admitting") == 8;
    outcome(
        main && sub,
        format!(
            "{admitting} classes admit a zero configuration ({} printed, {} unprinted); \
             directed search embeds {}/8 printed types in {:.1?}",
            count(&r, "printed-types-admitting"),
            count(&r, "unprinted-admitting"),
            embedded.len(),
            start.elapsed()
        ),
    )
}

fn criterion_5() -> Outcome {
    let r = report(ClaimId::CensusDouble3);
    let zero = count(&r, "zero-permanent-supports");
    outcome(
        zero == 0 && r.status == Status::Confirmed,
        format!("{} supports in {} classes, {zero} with zero permanent", count(&r, "supports"), count(&r, "classes")),
    )
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    for d in 2..=7 {
        let positive = has_positive_diagonal(&m4d(d).unwrap()).is_positive();
        if positive != (d % 2 == 0) {
            bad.push(format!("m4 d={d}"));
        }
    }
    for d in [3, 5] {
        let l = m4d(d).unwrap().union(&l4d_partner(d).unwrap()).unwrap();
        if has_positive_diagonal(&l).is_positive() {
            bad.push(format!("l4 d={d}"));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "m4 zero exactly at odd d, l4 zero at d=3,5".into() } else { bad.join(", ") })
}

fn criterion_7() -> Outcome {
    let r3 = report(ClaimId::AddToFilled3);
    let r5 = report(ClaimId::AddToFilled5);
    let ok = |r: &EnumerationReport, n: u64, printed: u64| {
        r.status == Status::Confirmed
            && count(r, "residue2-witnessed") == n
            && count(r, "residue2-indices") == n
            && count(r, "printed-completions-valid") == printed
    };
    outcome(
        ok(&r3, 16, 5) && ok(&r5, 256, 2),
        format!(
            "d=3: {}/16 witnessed, {}/5 printed valid; d=5: {}/256 witnessed, {}/2 printed valid",
            count(&r3, "residue2-witnessed"),
            count(&r3, "printed-completions-valid"),
            count(&r5, "residue2-witnessed"),
            count(&r5, "printed-completions-valid")
        ),
    )
}

fn criterion_8() -> Outcome {
    let (c3, f3) = filled_intersection_profile(3).unwrap();
    let (c4, f4) = filled_intersection_profile(4).unwrap();
    outcome(f3 == 0 && f4 == 0, format!("d=3: {f3} failures in {c3} cases; d=4: {f4} failures in {c4} cases"))
}

fn criterion_9() -> Outcome {
    let r = report(ClaimId::NoNewInFilled3);
    let largest = count(&r, "largest-configuration");
    let exceptions = count(&r, "exceptions");
    outcome(
        largest == 2 && exceptions == 0,
        format!(
            "largest compatible set {largest}; {} pairs ({} disjoint, {} L-type), {exceptions} exceptions; \
             {} triples, all with positive permanent unions: {}",
            count(&r, "compatible-pairs"),
            count(&r, "disjoint-pairs"),
            count(&r, "l-pairs"),
            count(&r, "triangles"),
            count(&r, "triangle-unions-positive") == count(&r, "triangles")
        ),
    )
}

/// Connected factors with all directions equivalent: a pair of cells, the
/// H plane and the (h) cube.
fn factor(r: &mut ChaCha8Rng, dim: usize) -> SupportSet {
    let base = match dim {
        1 => SupportSet::from_cells(Shape::new(1, 4).unwrap(), [0, 1]),
        2 => catalog::plane_h(),
        _ => catalog::plane_type("h").unwrap(),
    };
    let g = random_element(r, base.shape());
    let sym = EquivalenceElement::new((0..dim).collect(), g.sym_perms().to_vec()).unwrap();
    sym.apply_support(&base).unwrap()
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let mut r = ChaCha8Rng::seed_from_u64(10);
    let (mut double, mut contains, mut involution) = (0, 0, 0);
    for i in 0..500 {
        let d = 2 + i % 4;
        let m1 = random_permutation(&mut r, d);
        let m2 = random_permutation(&mut r, d);
        let u = m1.union(&m2).unwrap().difference(&m1.intersection(&m2).unwrap()).unwrap();
        assert!(is_unitrade(&u));
        let e = even_completion(&u).unwrap();
        double += usize::from(is_double_permutation_support(&e));
        contains += usize::from(u.is_subset(&e));
        involution += usize::from((0..d).all(|p| {
            complement_in_direction(&u, p).is_ok() && complement_iterated(&u, &[p, p]).unwrap() == u
        }));
    }
    let mut classes_ok = 0;
    for _ in 0..100 {
        let mut dims = vec![r.gen_range(1..=3)];
        while dims.iter().sum::<usize>() < 5 && r.gen_bool(0.6) {
            let room = 6 - dims.iter().sum::<usize>();
            dims.push(r.gen_range(1..=room.min(3)));
        }
        let mut s = factor(&mut r, dims[0]);
        for &k in &dims[1..] {
            s = direct_sum(&s, &factor(&mut r, k)).unwrap();
        }
        let g = random_element(&mut r, s.shape());
        let s = g.apply_support(&s).unwrap();
        let classes = direction_equivalence_classes(&s).unwrap();
        let cliques = direction_coloring(&s).map(|c| c.h_partition());
        let sizes: BTreeSet<usize> = classes.iter().map(Vec::len).collect();
        let expected: BTreeSet<usize> = dims.iter().copied().collect();
        if cliques.as_ref().ok() == Some(&classes) && classes.len() == dims.len() && sizes.is_subset(&expected) {
            classes_ok += 1;
        }
    }
    outcome(
        double == 500 && contains == 500 && involution == 500 && classes_ok == 100 && start.elapsed() < Duration::from_secs(300),
        format!(
            "E(U) double permutation {double}/500 (a 6-cycle in a plane gives a line of three), contains U {contains}/500, \
             involution {involution}/500; direction classes equal H cliques {classes_ok}/100"
        ),
    )
}

fn criterion_11() -> Outcome {
    let mut differing = Vec::new();
    for claim in [ClaimId::Census44, ClaimId::ClaimAb, ClaimId::ClaimPlanes, ClaimId::CensusDouble3] {
        let one = run(claim, &RunConfig::with_threads(1)).unwrap().to_json().unwrap();
        let eight = run(claim, &RunConfig::with_threads(8)).unwrap().to_json().unwrap();
        if one != eight {
            differing.push(claim.as_str());
        }
    }
    outcome(
        differing.is_empty(),
        if differing.is_empty() { "reports of criteria 2-5 identical at 1 and 8 threads".into() } else { differing.join(", ") },
    )
}

fn main() {
    let criteria: [(usize, &str, fn() -> Outcome); 11] = [
        (1, "permanent engine vs naive oracle", criterion_1),
        (2, "census of sesquialteral cubes", criterion_2),
        (3, "stacks with a 3-entry line", criterion_3),
        (4, "hyperplane types under zero permanent", criterion_4),
        (5, "double permutations are positive", criterion_5),
        (6, "zero-permanent family", criterion_6),
        (7, "adding to a filled subcube", criterion_7),
        (8, "filled-subcube intersection profile", criterion_8),
        (9, "compatible permutations at d=3", criterion_9),
        (10, "trade algebra", criterion_10),
        (11, "determinism across thread counts", criterion_11),
    ];
    let mut failed = Vec::new();
    for (id, title, check) in criteria {
        let start = Instant::now();
        let o = check();
        println!(
            "criterion {id:>2} {}: {title}: {} [{:.1?}]",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed()
        );
        if !o.pass {
            failed.push(id);
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed.len(), criteria.len());
    if failed != EXPECTED_FAILURES {
        eprintln!("failing criteria {failed:?}, expected {EXPECTED_FAILURES:?}");
        std::process::exit(1);
    }
}
