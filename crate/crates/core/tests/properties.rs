//! Randomised invariants, exact equality throughout.

use proptest::collection::vec;
use proptest::prelude::*;

use octarray::array::{Array, Partition};
use octarray::bijections::{
    associate, associate_functional, associate_inverse, com_prime, commute, commute_sp,
    is_yamanouchi, lr_tableau_to_pair, pair_to_lr_tableau, rho1, rho2_prime,
};
use octarray::condense::{
    condense_down, condense_down_with, condense_left, condense_right, condense_up, shape, Schedule,
};
use octarray::hive::{
    hive_to_pair, is_discrete_concave, is_supermodular, pair_to_hive, rhombus_violations,
    AntiStandardPair, RhombusKind, StandardPair,
};
use octarray::lr::{enumerate_hives, lr_coefficient, lr_oracle, standard_pairs};
use octarray::octahedron::{prism_propagate, prism_top, rsk, rsk_inverse, PrismFunction};
use octarray::scalar::Scalar;

fn mass(max_mass: i64, max_denom: i64) -> impl Strategy<Value = Scalar> {
    (1..=max_denom)
        .prop_flat_map(move |d| (0..=max_mass * d).prop_map(move |k| Scalar::ratio(k, d)))
}

fn array_nm(n: usize, m: usize, max_mass: i64, max_denom: i64) -> impl Strategy<Value = Array> {
    vec(vec(mass(max_mass, max_denom), n), m).prop_map(|rows| Array::from_rows(rows).unwrap())
}

fn array(max_side: usize, max_mass: i64, max_denom: i64) -> impl Strategy<Value = Array> {
    (1..=max_side, 1..=max_side).prop_flat_map(move |(n, m)| array_nm(n, m, max_mass, max_denom))
}

fn square_arrays(
    count: usize,
    max_side: usize,
    max_mass: i64,
    max_denom: i64,
) -> impl Strategy<Value = Vec<Array>> {
    (1..=max_side).prop_flat_map(move |n| vec(array_nm(n, n, max_mass, max_denom), count))
}

// Halves of D(L x ⊗ L y).
fn standard_pair(
    max_side: usize,
    max_mass: i64,
    max_denom: i64,
) -> impl Strategy<Value = StandardPair> {
    square_arrays(2, max_side, max_mass, max_denom).prop_map(|xs| {
        let n = xs[0].n();
        let ab = condense_left(&xs[0])
            .concat(&condense_left(&xs[1]))
            .unwrap();
        StandardPair::from_concat(&condense_down(&ab)).unwrap_or_else(|e| panic!("{e} for n = {n}"))
    })
}

fn couple(max_side: usize, max_mass: i64) -> impl Strategy<Value = (StandardPair, StandardPair)> {
    square_arrays(3, max_side, max_mass, 1).prop_map(|xs| {
        let n = xs[0].n();
        let l: Vec<Array> = xs.iter().map(condense_left).collect();
        let whole = condense_down(&l[0].concat(&l[1]).unwrap().concat(&l[2]).unwrap());
        let (a, bc) = whole.split_at(n);
        let (b, c) = bc.split_at(n);
        let l_ab = condense_left(&a.concat(&b).unwrap()).split_at(n).0;
        (
            StandardPair::new(a, b).unwrap(),
            StandardPair::new(l_ab, c).unwrap(),
        )
    })
}

fn partition(len: usize, max_part: i64) -> impl Strategy<Value = Partition> {
    vec(0..=max_part, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_ints(&v)
    })
}

fn padded(v: &[Scalar], k: usize) -> Vec<Scalar> {
    (0..k)
        .map(|i| v.get(i).copied().unwrap_or(Scalar::ZERO))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn integral_and_mixed_derivative_are_inverse(a in array(5, 4, 4)) {
        let f = a.integrate();
        prop_assert!(is_supermodular(&f));
        prop_assert_eq!(f.mixed_derivative().unwrap(), a);
    }

    #[test]
    fn reversal_and_transpose(a in array(5, 4, 4)) {
        prop_assert_eq!(a.central_reverse().central_reverse(), a.clone());
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(a.central_reverse().transpose(), a.transpose().central_reverse());
    }

    #[test]
    fn d_tightness_is_a_rhombus_family(a in array(4, 3, 2)) {
        for x in [a.clone(), condense_down(&a), condense_left(&a)] {
            let family_ii = rhombus_violations(&x.integrate()).iter().all(|v| v.kind != RhombusKind::II);
            prop_assert_eq!(x.is_d_tight(), family_ii);
        }
    }

    #[test]
    fn bitight_arrays_are_diagonal(a in array(5, 4, 4)) {
        let b = condense_down(&condense_left(&a));
        prop_assert!(b.is_d_tight() && b.is_l_tight());
        let parts = shape(&a);
        for j in 1..=b.m() {
            for i in 1..=b.n() {
                let expected = if i == j { parts.parts().get(i - 1).copied().unwrap_or(Scalar::ZERO) } else { Scalar::ZERO };
                prop_assert_eq!(b.mass(i, j), expected);
            }
        }
        let d = Array::diag(&parts);
        prop_assert!(d.is_d_tight() && d.is_l_tight());
    }

    #[test]
    fn schedules_reach_one_fixpoint(a in array(5, 4, 4), seed in any::<u64>()) {
        let d = condense_down(&a);
        prop_assert!(d.is_d_tight());
        prop_assert_eq!(condense_down_with(&a, Schedule::RowInsertion), d.clone());
        prop_assert_eq!(condense_down_with(&a, Schedule::Random { seed }), d);
    }

    #[test]
    fn condensations_commute(a in array(5, 4, 4)) {
        prop_assert_eq!(condense_left(&condense_down(&a)), condense_down(&condense_left(&a)));
        prop_assert_eq!(condense_down(&condense_up(&a)), condense_down(&a));
        prop_assert_eq!(condense_left(&condense_right(&a)), condense_left(&a));
    }

    #[test]
    fn shape_survives_central_reversal(a in array(5, 4, 4)) {
        let (x, y) = (shape(&a), shape(&a.central_reverse()));
        let k = x.len().max(y.len());
        prop_assert_eq!(padded(x.parts(), k), padded(y.parts(), k));
    }

    #[test]
    fn condensation_keeps_the_transverse_sums(a in array(5, 4, 4)) {
        prop_assert_eq!(condense_down(&a).col_sums(), a.col_sums());
        prop_assert_eq!(condense_left(&a).row_sums(), a.row_sums());
    }

    #[test]
    fn ceiling_is_the_integral_of_the_down_condensation(a in array(4, 4, 3)) {
        prop_assert_eq!(prism_top(&prism_propagate(&a)).mixed_derivative().unwrap(), condense_down(&a));
    }

    #[test]
    fn every_layer_holds_a_condensed_prefix(a in array(4, 3, 3)) {
        let f = prism_propagate(&a);
        for k in 1..=a.m() {
            let prefix = Array::from_rows(a.to_rows()[..k].to_vec()).unwrap();
            let g = condense_down(&prefix).integrate();
            for y in 0..=k {
                for x in 0..=a.n() {
                    prop_assert_eq!(f.at(x, y, k), g.at(x, y), "layer {} at ({}, {})", k, x, y);
                }
            }
        }
    }

    #[test]
    fn propagation_commutes_with_separable_shifts(
        a in array(4, 3, 2),
        phi in vec(-5i64..=5, 5),
        psi in vec(-5i64..=5, 5),
    ) {
        let f = prism_propagate(&a);
        let s = |x: usize, z: usize| Scalar::int(phi[x] + psi[z]);
        let g = PrismFunction::propagate(
            a.n(),
            a.m(),
            |y, z| f.at(0, y, z) + s(0, z),
            |x, z| f.at(x, 0, z) + s(x, z),
            |x, j| f.at(x, j, j) + s(x, j),
        ).unwrap();
        for z in 0..=a.m() {
            for y in 0..=z {
                for x in 0..=a.n() {
                    prop_assert_eq!(g.at(x, y, z), f.at(x, y, z) + s(x, z));
                }
            }
        }
    }

    #[test]
    fn back_propagation_undoes_propagation(a in array(4, 3, 3)) {
        let f = prism_propagate(&a);
        let (n, m) = (a.n(), a.m());
        let back = PrismFunction::propagate_back(n, m, |x, y| f.at(x, y, m), |y, z| f.at(n, y, z)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn rsk_round_trips(a in array(5, 4, 4)) {
        let (d, l) = rsk(&a);
        prop_assert_eq!(rsk_inverse(&d, &l).unwrap(), a.clone());
        let l2 = condense_left(&condense_up(&a));
        let c = rsk_inverse(&d, &l2).unwrap();
        prop_assert_eq!(rsk(&c), (d, l2));
    }

    #[test]
    fn hive_increments(p in standard_pair(4, 3, 1)) {
        let h = pair_to_hive(&p);
        prop_assert!(is_discrete_concave(&h));
        let inc = h.increments();
        for side in [&inc.lambda, &inc.mu, &inc.nu] {
            prop_assert!(side.windows(2).all(|w| w[0] >= w[1]));
        }
        let total = |v: &[Scalar]| v.iter().copied().sum::<Scalar>();
        prop_assert_eq!(total(&inc.lambda) + total(&inc.mu), total(&inc.nu));
        prop_assert!(h.to_rows().iter().flatten().all(Scalar::is_integer));
    }

    #[test]
    fn pairs_and_hives_correspond(p in standard_pair(4, 3, 3)) {
        prop_assert_eq!(p.a(), &Array::diag(&Partition::new(p.a().col_sums()).unwrap()));
        let h = pair_to_hive(&p);
        let back = hive_to_pair(&h).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(pair_to_hive(&back), h);
    }

    #[test]
    fn commuter_is_an_involution_swapping_types(p in standard_pair(4, 3, 3)) {
        let q = AntiStandardPair::new(condense_right(p.a()), p.b().clone()).unwrap();
        let c = commute(&q);
        prop_assert_eq!(commute(&c), q.clone());
        let (t, u) = (q.hive_type(), c.hive_type());
        prop_assert_eq!((t.lambda, t.mu, t.nu), (u.mu, u.lambda, u.nu));
        let image = commute_sp(&p);
        prop_assert_eq!(commute_sp(&image), p.clone());
        prop_assert_eq!(p.hive_type().mu, image.hive_type().lambda);
    }

    #[test]
    fn symmetries_agree_with_the_commuter(p in standard_pair(3, 3, 1)) {
        let image = commute_sp(&p);
        prop_assert_eq!(rho1(&p), image.clone());
        let h = pair_to_hive(&p);
        prop_assert_eq!(com_prime(&h).unwrap(), pair_to_hive(&image));
        prop_assert_eq!(rho2_prime(&h).unwrap(), pair_to_hive(&image));
    }

    #[test]
    fn associativity_round_trips((x, y) in couple(3, 2)) {
        let (o1, o2) = associate(&x, &y).unwrap();
        let (tx, ty) = (x.hive_type(), y.hive_type());
        let (t1, t2) = (o1.hive_type(), o2.hive_type());
        prop_assert_eq!((&t1.lambda, &t1.mu), (&tx.mu, &ty.mu));
        prop_assert_eq!((&t2.lambda, &t2.mu, &t2.nu), (&tx.lambda, &t1.nu, &ty.nu));
        prop_assert_eq!(associate_inverse(&o1, &o2).unwrap(), (x.clone(), y.clone()));
        let functional = associate_functional(&pair_to_hive(&x), &pair_to_hive(&y)).unwrap();
        prop_assert_eq!(functional, (pair_to_hive(&o1), pair_to_hive(&o2)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn skew_tableaux_are_lattice_words(p in standard_pair(3, 3, 1)) {
        let t = pair_to_lr_tableau(&p).unwrap();
        prop_assert!(is_yamanouchi(&t.reading_word()));
        prop_assert!(t.validate().is_ok());
        prop_assert_eq!(lr_tableau_to_pair(&t).unwrap(), p);
    }

    #[test]
    fn coefficient_counts_agree(lambda in partition(3, 3), mu in partition(3, 3), nu in partition(3, 4)) {
        let hives = enumerate_hives(&lambda, &mu, &nu);
        for h in &hives {
            prop_assert!(is_discrete_concave(h));
            let t = h.hive_type().unwrap();
            prop_assert_eq!((&t.lambda, &t.mu, &t.nu), (&lambda, &mu, &nu));
        }
        let c = hives.len() as u64;
        prop_assert_eq!(standard_pairs(&lambda, &mu, &nu).len() as u64, c);
        prop_assert_eq!(lr_oracle(&lambda, &mu, &nu), c);
        prop_assert_eq!(lr_coefficient(&mu, &lambda, &nu), c);
    }
}
