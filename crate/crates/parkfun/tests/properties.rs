//! Property tests for the algebraic invariants that hold on every input,
//! not just on the acceptance grids.

use proptest::prelude::*;
use proptest::strategy::ValueTree;

use parkfun::bijection::{psi, psi_inv, WipfTuple};
use parkfun::parking::{enumerate_wipf, is_rk_parking, parking_statistic, PrefSeq};
use parkfun::partition::Partition;
use parkfun::rational::{rat_frac, Rat};
use parkfun::symfun::{Basis, SymFn};

fn arb_partition(max_size: u32) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..=max_size, 0..=max_size as usize).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        let mut kept = Vec::new();
        for p in parts {
            if total + p <= max_size {
                total += p;
                kept.push(p);
            }
        }
        Partition::new(kept).expect("weakly decreasing by construction")
    })
}

fn arb_coeff() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat_frac(n, d))
}

fn arb_symfn(max_degree: u32) -> impl Strategy<Value = SymFn> {
    let basis = proptest::sample::select(Basis::ALL.to_vec());
    let terms = proptest::collection::vec((arb_partition(max_degree), arb_coeff()), 0..=4);
    (basis, terms).prop_map(|(basis, terms)| SymFn::from_terms(basis, terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_round_trips_are_exact(f in arb_symfn(6), target in proptest::sample::select(Basis::ALL.to_vec())) {
        let there = f.to_basis(target).unwrap();
        let back = there.to_basis(f.basis()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn omega_is_an_involution(f in arb_symfn(6)) {
        let back = f.omega().unwrap().omega().unwrap();
        prop_assert!(back.eq_as_element(&f).unwrap());
    }

    #[test]
    fn omega_is_an_isometry(f in arb_symfn(5), g in arb_symfn(5)) {
        let direct = f.hall_scalar(&g).unwrap();
        let twisted = f.omega().unwrap().hall_scalar(&g.omega().unwrap()).unwrap();
        prop_assert_eq!(direct, twisted);
    }

    #[test]
    fn scalar_product_is_symmetric(f in arb_symfn(5), g in arb_symfn(5)) {
        prop_assert_eq!(
            f.hall_scalar(&g).unwrap(),
            g.hall_scalar(&f).unwrap()
        );
    }

    #[test]
    fn multiplication_agrees_across_bases(
        f in arb_symfn(3),
        g in arb_symfn(3),
        b1 in proptest::sample::select(Basis::ALL.to_vec()),
        b2 in proptest::sample::select(Basis::ALL.to_vec()),
    ) {
        let direct = f.multiply(&g).unwrap();
        let converted = f
            .to_basis(b1)
            .unwrap()
            .multiply(&g.to_basis(b2).unwrap())
            .unwrap();
        prop_assert!(direct.eq_as_element(&converted).unwrap());
    }

    #[test]
    fn statistic_is_permutation_invariant(
        entries in proptest::collection::vec(1u32..=6, 1..=6),
        r in 1u32..=3,
        k in 1u32..=3,
    ) {
        let seq = PrefSeq::new(entries.clone()).unwrap();
        let sorted = seq.sorted();
        prop_assert_eq!(is_rk_parking(&seq, r, k), is_rk_parking(&sorted, r, k));
        if is_rk_parking(&seq, r, k) {
            prop_assert_eq!(
                parking_statistic(&seq, r, k).unwrap(),
                parking_statistic(&sorted, r, k).unwrap()
            );
        }
    }
}

/// Random tuples drawn from the enumerated component pools.
fn arb_tuple(r: u32, k: u32, max_total: usize) -> impl Strategy<Value = WipfTuple> {
    let pools: Vec<Vec<PrefSeq>> = (0..=max_total as u32)
        .map(|n| enumerate_wipf(n, r, 1))
        .collect();
    proptest::collection::vec(0usize..=max_total, k as usize).prop_flat_map(move |lengths| {
        // trim lengths so the total stays within the bound
        let mut budget = max_total;
        let lengths: Vec<usize> = lengths
            .into_iter()
            .map(|l| {
                let take = l.min(budget);
                budget -= take;
                take
            })
            .collect();
        let parts: Vec<BoxedStrategy<PrefSeq>> = lengths
            .iter()
            .map(|&l| proptest::sample::select(pools[l].clone()).boxed())
            .collect();
        (parts, Just(r)).prop_map(|(components, r)| {
            WipfTuple::new(r, components).expect("components drawn from valid pools")
        })
    })
}

#[test]
fn random_tuple_roundtrip_bulk() {
    // 200 sampled tuples across the parameter box, deterministic seed
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let mut checked = 0;
    for r in 1..=3u32 {
        for k in 1..=4u32 {
            let strategy = arb_tuple(r, k, 7);
            for _ in 0..17 {
                let tuple = strategy.new_tree(&mut runner).unwrap().current();
                let beta = psi(&tuple);
                assert!(beta.is_weakly_increasing());
                assert!(is_rk_parking(&beta, r, k));
                assert_eq!(psi_inv(&beta, r, k).unwrap(), tuple, "r={r} k={k}");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 12 * 17);
}

#[test]
fn q_refinement_collapses_at_one() {
    for (n, r, k) in [(4u32, 1u32, 2u32), (3, 2, 3), (5, 1, 1)] {
        let q = parkfun::parking::parking_frobenius_q(n, r, k);
        assert_eq!(q.at_q_one(), parkfun::parking::parking_frobenius(n, r, k));
        // exponents never exceed the statistic bound
        let bound = (k * n + n * (n.saturating_sub(1)) / 2 * r) as u64;
        for (e, _) in q.terms() {
            assert!(*e <= bound);
        }
    }
}
