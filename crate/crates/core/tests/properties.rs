use num_bigint::BigUint;
use proptest::prelude::*;

use coxeter2d::fp_group::{subgroup_table, DEFAULT_MAX_COSETS};
use coxeter2d::matrix_group::{phi_images, DEFAULT_ELEMENT_LIMIT};
use coxeter2d::parabolic::presentation;
use coxeter2d::{
    closure, coset_enumerate, generator_subset, group_order, order_bruteforce, order_recursive,
    stopovers, Decomposition, Generator,
};

/// Composition of `total` whose stopovers are the set bits of `cuts`.
fn from_cuts(total: usize, cuts: u32) -> Decomposition {
    let mut parts = Vec::new();
    let mut run = 1;
    for i in 1..total {
        if cuts >> (i - 1) & 1 == 1 {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    Decomposition::new(parts).unwrap()
}

fn pair(max_total: usize) -> impl Strategy<Value = (Decomposition, Decomposition)> {
    (1..=max_total).prop_flat_map(|t| {
        let masks = 0u32..(1 << (t - 1));
        (masks.clone(), masks).prop_map(move |(a, b)| (from_cuts(t, a), from_cuts(t, b)))
    })
}

fn strip_last(d: &Decomposition) -> Option<Decomposition> {
    (d.len() > 1).then(|| Decomposition::new(d.parts()[..d.len() - 1].to_vec()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn cuts_are_stopovers((t, cuts) in (1usize..=8).prop_flat_map(|t| (Just(t), 0u32..(1 << (t - 1))))) {
        let d = from_cuts(t, cuts);
        let expected: Vec<usize> = (1..t).filter(|i| cuts >> (i - 1) & 1 == 1).collect();
        prop_assert_eq!(stopovers(&d).into_iter().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn order_is_transpose_symmetric((l, m) in pair(8)) {
        prop_assert_eq!(order_recursive(&l, &m).unwrap(), order_recursive(&m, &l).unwrap());
    }

    #[test]
    fn subsets_swap_with_arguments((l, m) in pair(8)) {
        prop_assert_eq!(generator_subset(&l, &m).unwrap().swap_xy(), generator_subset(&m, &l).unwrap());
    }

    #[test]
    fn splitting_removes_last_y((l, m) in pair(8)) {
        prop_assume!(m.last() >= 2);
        let n = l.total() - 1;
        let mut expected = generator_subset(&l, &m).unwrap();
        prop_assert!(expected.remove(&Generator::Y(n)));
        prop_assert_eq!(generator_subset(&l, &m.split_last().unwrap()).unwrap(), expected);
    }

    #[test]
    fn stripping_trailing_ones((l, m) in pair(4)) {
        prop_assume!(l.last() == 1 && m.last() == 1 && l.len() > 1);
        let (lt, mt) = (strip_last(&l).unwrap(), strip_last(&m).unwrap());
        prop_assert_eq!(order_bruteforce(&l, &m, 4).unwrap(), order_bruteforce(&lt, &mt, 4).unwrap());
    }

    #[test]
    fn closure_image_matches_presentation((l, m) in pair(4)) {
        let n = l.total() - 1;
        let gens = phi_images(&generator_subset(&l, &m).unwrap(), n).unwrap();
        let img = closure(n + 1, &gens, DEFAULT_ELEMENT_LIMIT).unwrap();
        let mut reversed = gens.clone();
        reversed.reverse();
        let other = closure(n + 1, &reversed, DEFAULT_ELEMENT_LIMIT).unwrap();
        prop_assert_eq!(img.len(), other.len());
        prop_assert!(other.elements().all(|x| img.contains(&x).unwrap()));
        let pres = group_order(&presentation(&l, &m).unwrap(), DEFAULT_MAX_COSETS).unwrap();
        prop_assert_eq!(img.order(), pres);
    }

    #[test]
    fn coset_tables_are_involutive_and_deterministic((l, m) in pair(4)) {
        let g = presentation(&l, &m).unwrap();
        let h = generator_subset(&l, &m).unwrap();
        let mut subset = coxeter2d::GeneratorSubset::new();
        for x in h.iter().step_by(2) {
            subset.insert(x.clone());
        }
        let table = subgroup_table(&g, &subset, DEFAULT_MAX_COSETS).unwrap();
        for c in 0..table.num_cosets() {
            for z in 0..table.generators().len() {
                prop_assert_eq!(table.act(table.act(c, z), z), c);
            }
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        table.write_csv(&mut a).unwrap();
        subgroup_table(&g, &subset, DEFAULT_MAX_COSETS).unwrap().write_csv(&mut b).unwrap();
        prop_assert_eq!(a, b);
        let trivial = coset_enumerate(&g, &[], DEFAULT_MAX_COSETS).unwrap();
        prop_assert_eq!(BigUint::from(trivial.num_cosets()), order_recursive(&l, &m).unwrap());
    }
}
