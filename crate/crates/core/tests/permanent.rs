mod common;

use common::*;
use polyperm_core::block::{l4d_partner, m4d};
use polyperm_core::catalog::{DIAGONALS_D3, DIAGONALS_D5};
use polyperm_core::permanent::{diagonal_through, diagonals, plane_decomposition_permanent};
use polyperm_core::{
    has_positive_diagonal, permanent_exact, q, Diagonal, HyperMatrix, PermanentOptions, PlaneSelector, Shape,
    SupportSet,
};
use proptest::prelude::*;
use rand::Rng;

fn opts() -> PermanentOptions {
    PermanentOptions::default()
}

#[test]
fn exact_permanent_matches_naive_sum() {
    let mut r = rng(11);
    let sh = Shape::new(3, 4).unwrap();
    for _ in 0..100 {
        let m = random_matrix(&mut r, sh, 0.3);
        assert_eq!(permanent_exact(&m, opts()).unwrap().value, naive_permanent(&m));
    }
}

#[test]
fn two_dimensional_row_expansion() {
    fn expand(rows: &[Vec<polyperm_core::Q>], used: u32) -> polyperm_core::Q {
        let Some((first, rest)) = rows.split_first() else { return q(1, 1) };
        let mut total = q(0, 1);
        for (j, e) in first.iter().enumerate() {
            if used >> j & 1 == 0 {
                total += e * expand(rest, used | 1 << j);
            }
        }
        total
    }
    let mut r = rng(12);
    for n in 2..=5 {
        let sh = Shape::new(2, n).unwrap();
        let m = random_matrix(&mut r, sh, 0.2);
        let rows: Vec<_> = m.entries().chunks(n).map(|c| c.to_vec()).collect();
        assert_eq!(permanent_exact(&m, opts()).unwrap().value, expand(&rows, 0));
    }
}

#[test]
fn diagonal_iterator_agrees_with_definition() {
    let sh = Shape::new(3, 4).unwrap();
    let all: Vec<Diagonal> = diagonals(sh, opts()).unwrap().collect();
    let mut set = std::collections::HashSet::new();
    for dg in &all {
        assert!(Diagonal::new(sh, dg.indices().to_vec()).is_ok());
        set.insert(dg.clone());
    }
    assert_eq!(set.len(), 576);
    let mut r = rng(13);
    let m = random_matrix(&mut r, sh, 0.1);
    let sum = all.iter().fold(q(0, 1), |acc, dg| {
        acc + dg.indices().iter().fold(q(1, 1), |p, idx| p * m.get(idx))
    });
    assert_eq!(sum, naive_permanent(&m));
}

#[test]
fn equivalence_preserves_permanent() {
    let mut r = rng(14);
    let sh = Shape::new(3, 4).unwrap();
    for _ in 0..20 {
        let m = random_matrix(&mut r, sh, 0.3);
        let g = random_element(&mut r, sh);
        let gm = g.apply_matrix(&m).unwrap();
        assert_eq!(permanent_exact(&gm, opts()).unwrap().value, permanent_exact(&m, opts()).unwrap().value);
    }
}

#[test]
fn plane_decomposition_matches_definition() {
    let mut r = rng(15);
    let sh = Shape::new(3, 4).unwrap();
    for k in 0..50 {
        let m = random_matrix(&mut r, sh, 0.3);
        let fixed: &[usize] = if k % 2 == 0 { &[0] } else { &[1, 2] };
        assert_eq!(plane_decomposition_permanent(&m, fixed, opts()).unwrap(), permanent_exact(&m, opts()).unwrap().value);
    }
    let sh4 = Shape::new(4, 3).unwrap();
    let m = random_matrix(&mut r, sh4, 0.2);
    for fixed in [vec![0], vec![1, 3], vec![0, 1, 2]] {
        assert_eq!(plane_decomposition_permanent(&m, &fixed, opts()).unwrap(), permanent_exact(&m, opts()).unwrap().value);
    }
}

#[test]
fn zero_hyperplane_kills_permanent() {
    let mut r = rng(16);
    let sh = Shape::new(3, 4).unwrap();
    let m = random_matrix(&mut r, sh, 0.0);
    let mut planes: Vec<HyperMatrix> =
        (0..4).map(|v| m.extract_plane(&PlaneSelector::hyperplane(0, v)).unwrap()).collect();
    planes[2] = HyperMatrix::zeros(planes[2].shape());
    let z = HyperMatrix::from_hyperplanes(0, &planes).unwrap();
    assert_eq!(permanent_exact(&z, opts()).unwrap().value, q(0, 1));
    assert_eq!(plane_decomposition_permanent(&z, &[1], opts()).unwrap(), q(0, 1));
}

#[test]
fn positivity_agrees_with_exact_permanent() {
    let mut r = rng(17);
    let sh = Shape::new(3, 4).unwrap();
    for _ in 0..300 {
        let size = r.gen_range(4..=20);
        let s = SupportSet::from_cells(sh, (0..size).map(|_| r.gen_range(0..64)));
        let per = permanent_exact(&HyperMatrix::indicator(&s), opts()).unwrap().value;
        let w = has_positive_diagonal(&s);
        assert_eq!(w.is_positive(), per > q(0, 1));
        assert_eq!(w.is_positive(), naive_positive(&s));
        if let Some(dg) = w.diagonal() {
            assert!(dg.within(&s));
        }
    }
}

#[test]
fn m4_family_positivity() {
    for d in 2..=7 {
        let m = m4d(d).unwrap();
        assert_eq!(has_positive_diagonal(&m).is_positive(), d % 2 == 0, "d = {d}");
    }
    for d in [3, 5] {
        let l = m4d(d).unwrap().union(&l4d_partner(d).unwrap()).unwrap();
        assert!(!has_positive_diagonal(&l).is_positive());
    }
    let m3 = HyperMatrix::indicator(&m4d(3).unwrap());
    assert_eq!(permanent_exact(&m3, opts()).unwrap().value, q(0, 1));
}

#[test]
fn printed_completions_are_diagonals() {
    let m3 = m4d(3).unwrap();
    for (forced, rest) in DIAGONALS_D3 {
        let mut idx = vec![forced.to_vec()];
        idx.extend(rest.iter().map(|x| x.to_vec()));
        let dg = Diagonal::new(m3.shape(), idx).unwrap();
        assert!(rest.iter().all(|x| m3.contains_index(x)));
        assert!(!m3.contains_index(&forced));
        let found = diagonal_through(&m3, &forced).unwrap().unwrap();
        assert!(found.indices().contains(&forced.to_vec()));
        let _ = dg;
    }
    let m5 = m4d(5).unwrap();
    for (forced, rest) in DIAGONALS_D5 {
        let mut idx = vec![forced.to_vec()];
        idx.extend(rest.iter().map(|x| x.to_vec()));
        assert!(Diagonal::new(m5.shape(), idx).is_ok());
        assert!(rest.iter().all(|x| m5.contains_index(x)));
        assert!(diagonal_through(&m5, &forced).unwrap().is_some());
    }
}

/// Positivity through pairwise diagonally located planes of one direction.
fn positive_by_planes(s: &SupportSet, fixed: &[usize]) -> bool {
    let m = HyperMatrix::indicator(s);
    let outer = Shape::new(fixed.len(), s.shape().n()).unwrap();
    diagonals(outer, opts()).unwrap().any(|dg| {
        let planes: Vec<HyperMatrix> = dg
            .indices()
            .iter()
            .map(|vals| m.extract_plane(&PlaneSelector::new(fixed, vals).unwrap()).unwrap())
            .collect();
        has_positive_diagonal(&HyperMatrix::from_hyperplanes(0, &planes).unwrap().support()).is_positive()
    })
}

#[test]
fn plane_reduction_both_directions() {
    let mut r = rng(18);
    for d in [3, 4] {
        let sh = Shape::new(d, 4).unwrap();
        for _ in 0..40 {
            let size = r.gen_range(8..(if d == 3 { 24 } else { 70 }));
            let s = SupportSet::from_cells(sh, (0..size).map(|_| r.gen_range(0..sh.cells())));
            let direct = has_positive_diagonal(&s).is_positive();
            assert_eq!(positive_by_planes(&s, &[0]), direct);
            assert_eq!(positive_by_planes(&s, &[d - 2, d - 1]), direct);
        }
    }
}

#[test]
fn fractional_entries_have_diagonally_located_partners() {
    let mut r = rng(19);
    for d in [3, 4] {
        for _ in 0..20 {
            let m = random_convex(&mut r, d, 3);
            let sh = m.shape();
            let frac: Vec<usize> =
                (0..sh.cells()).filter(|&c| *m.entry(c) > q(0, 1) && *m.entry(c) < q(1, 1)).collect();
            for &c in &frac {
                let a = sh.index(c);
                assert!(frac.iter().any(|&x| polyperm_core::hamming(&a, &sh.index(x)) == d));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witnesses_lie_in_support(word in any::<u64>()) {
        let sh = Shape::new(3, 4).unwrap();
        let s = SupportSet::from_word(sh, word & word.rotate_left(7));
        let w = has_positive_diagonal(&s);
        prop_assert_eq!(w.is_positive(), naive_positive(&s));
        if let Some(dg) = w.diagonal() {
            prop_assert!(dg.within(&s));
        }
    }
}
