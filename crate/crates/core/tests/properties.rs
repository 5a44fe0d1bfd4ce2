use fibrook::board::{
    file_poly_sum, file_polys, file_product, rook_polys, rook_product_sum, tiled_heights,
    uncanceled_heights, FerrersBoard, Mode,
};
use fibrook::stirling::{build_triangle, involution_verify, Kind};
use fibrook::tiling::{enumerate_tilings, tiling_count, tree_rank, weight_table, TileFamily};
use fibrook::{PQRPoly, XPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn ferrers(max_len: usize, max_h: u32) -> impl Strategy<Value = FerrersBoard> {
    prop::collection::vec(0..=max_h, 0..=max_len).prop_map(|mut h| {
        h.sort_unstable();
        FerrersBoard::new(h).unwrap()
    })
}

fn family() -> impl Strategy<Value = TileFamily> {
    prop_oneof![Just(TileFamily::fibonacci()), Just(TileFamily::p_family())]
}

fn choose(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<bool>(), n).prop_map(|bits| {
        bits.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i + 1)
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recursion_matches_enumeration(b in ferrers(5, 5), fam in family()) {
        prop_assert_eq!(file_polys(&b, &fam, Mode::Recursion), file_polys(&b, &fam, Mode::Enumeration));
        prop_assert_eq!(rook_polys(&b, &fam, Mode::Recursion).unwrap(), rook_polys(&b, &fam, Mode::Enumeration).unwrap());
    }

    #[test]
    fn product_formulas(b in ferrers(7, 8), fam in family()) {
        prop_assert_eq!(file_product(&b, &fam), file_poly_sum(&b, &fam, Mode::Recursion));
        prop_assert_eq!(rook_product_sum(&b, &fam, Mode::Recursion).unwrap(), XPoly::x_pow(b.num_columns()));
    }

    #[test]
    fn cancellation_leaves_a_prefix(
        (b, chosen) in ferrers(8, 9).prop_flat_map(|b| {
            let n = b.num_columns();
            (Just(b), choose(n))
        })
    ) {
        let n = b.num_columns();
        let s = chosen.len();
        let free = uncanceled_heights(&b, &chosen).unwrap();
        prop_assert_eq!(&free[..], &b.heights()[..n - s]);
        let tiled = tiled_heights(&b, &chosen).unwrap();
        for (t, (i, c)) in tiled.iter().zip(chosen.iter().enumerate()) {
            prop_assert_eq!(*t, b.height(c - i));
        }
    }

    #[test]
    fn rook_and_file_agree_up_to_one_tiling(b in ferrers(6, 6), fam in family()) {
        let f = file_polys(&b, &fam, Mode::Recursion);
        let r = rook_polys(&b, &fam, Mode::Recursion).unwrap();
        prop_assert_eq!(&f[..2.min(f.len())], &r[..2.min(r.len())]);
    }

    #[test]
    fn weight_recursion(n in 3u32..30, fam in family()) {
        let w = weight_table(&fam, n);
        let n = n as usize;
        let expect = if fam.is_fibonacci() {
            &(&PQRPoly::q() * &w[n - 1]) + &(&PQRPoly::p() * &w[n - 2])
        } else {
            let mut e = &(&PQRPoly::q() * &w[n - 1]) + &(&PQRPoly::p() * &w[n - 2]);
            if n >= 4 {
                e += &PQRPoly::r() * &w[n - 3];
            }
            e
        };
        prop_assert_eq!(&w[n], &expect);
    }

    #[test]
    fn ranks_are_a_permutation(n in 1u32..14) {
        let fam = TileFamily::fibonacci();
        let mut ranks: Vec<u64> = enumerate_tilings(&fam, n).iter().map(|t| tree_rank(t).unwrap()).collect();
        ranks.sort_unstable();
        let total: u64 = tiling_count(&fam, n).try_into().unwrap();
        prop_assert_eq!(ranks, (0..total).collect::<Vec<_>>());
    }

    #[test]
    fn second_kind_at_p_zero_is_pascal(n in 1usize..25, k in 0usize..25) {
        // With p = 0 and q = 1 every weight is 1, so Sf(n,k) = C(n-1,k-1).
        let t = build_triangle(Kind::SfUpper, n);
        let want = if k >= 1 && k <= n {
            num_integer::binomial(BigInt::from(n - 1), BigInt::from(k - 1))
        } else {
            BigInt::from(0)
        };
        prop_assert_eq!(t.entry(n, k).eval_int(1, 0, 0), want);
    }

    #[test]
    fn matrix_inverse_rows(n in 0usize..13, k in 0usize..13, fib in any::<bool>()) {
        let (up, low) = if fib { (Kind::SfUpper, Kind::SfLower) } else { (Kind::SpUpper, Kind::SpLower) };
        let a = build_triangle(up, n);
        let b = build_triangle(low, n);
        let sum: PQRPoly = (0..=n).map(|j| a.entry(n, j) * b.entry(j, k)).sum();
        prop_assert_eq!(sum.is_one(), n == k);
        prop_assert_eq!(sum.is_zero(), n != k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn involution_is_sign_reversing(n in 2usize..6, k in 1usize..6) {
        prop_assume!(k < n);
        let r = involution_verify(n, k, &TileFamily::fibonacci());
        prop_assert!(r.violations.is_empty(), "{:?}", r.violations);
        prop_assert!(r.signed_sum.is_zero());
    }
}
