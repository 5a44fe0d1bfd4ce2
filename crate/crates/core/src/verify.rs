//! Verification suites: exhaustive and recursive computations cross-checked
//! against each other, fanned out with rayon and collected in a fixed order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::board::{
    all_ferrers_boards, aug_mixed_sum, file_poly_sum, file_polys, file_product, mixed_file_sum,
    rook_polys, rook_product_sum, FerrersBoard, Mode,
};
use crate::error::{Error, Result};
use crate::identities::verify_identities;
use crate::poly::{PQRPoly, XPoly};
use crate::report::CheckReport;
use crate::stirling::{
    build_triangle, involution_verify, matrix_inverse_check, triangle_from_boards,
    verify_basis_expansions, InvolutionReport, Kind,
};
use crate::tiling::{
    enumerate_tilings, q_int_of_fibonacci, rank_generating_poly, tiling_count, weight_poly,
    TileFamily,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    RecursionVsEnumeration,
    Products,
    Inverse,
    Involution,
    Identities,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "recursion-vs-enumeration",
        "products",
        "inverse",
        "involution",
        "identities",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "recursion-vs-enumeration" => Suite::RecursionVsEnumeration,
            "products" => Suite::Products,
            "inverse" => Suite::Inverse,
            "involution" => Suite::Involution,
            "identities" => Suite::Identities,
            "all" => Suite::All,
            _ => {
                return Err(Error::Parse {
                    what: "suite",
                    input: s.to_string(),
                })
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::RecursionVsEnumeration,
            Suite::Products,
            Suite::Inverse,
            Suite::Involution,
            Suite::Identities,
            Suite::All,
        ]
        .iter()
        .position(|s| s == self)
        .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    /// Tilings are checked up to this height.
    pub tiling_n: usize,
    /// Every Ferrers board with at most this many columns...
    pub board_len: usize,
    /// ...and heights at most this.
    pub board_height: u32,
    /// Staircase boards `B_n` up to this `n`.
    pub staircase_n: usize,
    /// Values of `x` for the mixed placement checks.
    pub x_max: u32,
    /// Boards used for the mixed placement checks.
    pub mixed_len: usize,
    /// Triangle size for the Fibonacci family.
    pub triangle_n: usize,
    /// Triangle size for the P family.
    pub triangle_p_n: usize,
    /// Involution checked for `1 <= k < n <= involution_n`.
    pub involution_n: usize,
    /// Identity suite size.
    pub identities_n: usize,
    /// Rank statistic checked up to this height.
    pub rank_n: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            tiling_n: 16,
            board_len: 6,
            board_height: 6,
            staircase_n: 9,
            x_max: 3,
            mixed_len: 4,
            triangle_n: 12,
            triangle_p_n: 10,
            involution_n: 7,
            identities_n: 20,
            rank_n: 14,
        }
    }
}

impl Bounds {
    /// Small bounds that run in well under a second.
    pub fn quick() -> Self {
        Bounds {
            tiling_n: 10,
            board_len: 4,
            board_height: 4,
            staircase_n: 6,
            x_max: 3,
            mixed_len: 3,
            triangle_n: 8,
            triangle_p_n: 6,
            involution_n: 5,
            identities_n: 10,
            rank_n: 10,
        }
    }
}

fn families() -> [TileFamily; 2] {
    [TileFamily::fibonacci(), TileFamily::p_family()]
}

fn board_set(b: &Bounds) -> Vec<FerrersBoard> {
    let mut boards = all_ferrers_boards(b.board_len, b.board_height);
    boards.extend((b.board_len + 1..=b.staircase_n).map(FerrersBoard::staircase));
    boards
}

fn range_label(b: &Bounds) -> String {
    format!(
        "Ferrers boards n <= {}, heights <= {}, and B_n for n <= {}",
        b.board_len, b.board_height, b.staircase_n
    )
}

/// Weight polynomials against enumerated tilings, and `F_n(1,1)`.
pub fn check_tilings(n_max: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for fam in families() {
        let failures = (0..=n_max as u32)
            .into_par_iter()
            .filter_map(|n| {
                let enumerated: PQRPoly =
                    enumerate_tilings(&fam, n).iter().map(|t| t.weight()).sum();
                let rec = weight_poly(&fam, n);
                (rec != enumerated).then(|| format!("n={n}: {rec} vs {enumerated}"))
            })
            .collect();
        out.push(CheckReport::from_failures(
            format!("{} weight polynomial = sum over tilings", fam.name()),
            format!("n <= {n_max}"),
            failures,
        ));
    }
    let fam = TileFamily::fibonacci();
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    let mut failures = Vec::new();
    for n in 1..=n_max as u32 {
        let got = weight_poly(&fam, n).eval_int(1, 1, 1);
        if got != b || tiling_count(&fam, n) != b {
            failures.push(format!("n={n}: {got} vs {b}"));
        }
        (a, b) = (b.clone(), a + b);
    }
    out.push(CheckReport::from_failures(
        "F_n(1,1) is the Fibonacci sequence",
        format!("1 <= n <= {n_max}"),
        failures,
    ));
    out
}

/// Recursion against enumeration for file and rook polynomials.
pub fn check_board_polys(b: &Bounds) -> Vec<CheckReport> {
    let boards = board_set(b);
    let mut out = Vec::new();
    for fam in families() {
        let failures: Vec<String> = boards
            .par_iter()
            .flat_map_iter(|board| {
                let mut f = Vec::new();
                if file_polys(board, &fam, Mode::Recursion)
                    != file_polys(board, &fam, Mode::Enumeration)
                {
                    f.push(format!("file {board}"));
                }
                let rook = rook_polys(board, &fam, Mode::Recursion);
                if rook.is_err() || rook != rook_polys(board, &fam, Mode::Enumeration) {
                    f.push(format!("rook {board}"));
                }
                f
            })
            .collect();
        out.push(CheckReport::from_failures(
            format!(
                "{} file/rook polynomials: recursion = enumeration",
                fam.name()
            ),
            range_label(b),
            failures,
        ));
    }
    out
}

/// Triangle entries against placements on `B_n`.
pub fn check_interpretations(n_max: usize) -> CheckReport {
    let failures = [Kind::Cf, Kind::SfUpper, Kind::Cp, Kind::SpUpper]
        .par_iter()
        .flat_map_iter(|&kind| {
            let from_boards = triangle_from_boards(kind, n_max).expect("board kind");
            let rec = build_triangle(kind, n_max);
            let mut f = Vec::new();
            for n in 0..=n_max {
                for k in 0..=n {
                    if from_boards.entry(n, k) != rec.entry(n, k) {
                        f.push(format!("{kind}({n},{k})"));
                    }
                }
            }
            f
        })
        .collect();
    CheckReport::from_failures(
        "cf, cp = file polynomials and Sf, Sp = rook polynomials on B_n",
        format!("n <= {n_max}"),
        failures,
    )
}

fn eval_x(p: &XPoly, x: u32) -> PQRPoly {
    let mut acc = PQRPoly::zero();
    let mut power = BigInt::from(1);
    for c in p.coeffs() {
        acc += c.scale(power.clone());
        power *= x;
    }
    acc
}

/// Both product formulas as identities in `x`, and the mixed placement sums
/// that prove them at integer `x`.
pub fn check_products(b: &Bounds) -> Vec<CheckReport> {
    let boards = board_set(b);
    let mut out = Vec::new();
    for fam in families() {
        let failures: Vec<String> = boards
            .par_iter()
            .flat_map_iter(|board| {
                let mut f = Vec::new();
                if file_product(board, &fam) != file_poly_sum(board, &fam, Mode::Recursion) {
                    f.push(format!("file product {board}"));
                }
                match rook_product_sum(board, &fam, Mode::Recursion) {
                    Ok(sum) if sum == XPoly::x_pow(board.num_columns()) => {}
                    _ => f.push(format!("rook product {board}")),
                }
                f
            })
            .collect();
        out.push(CheckReport::from_failures(
            format!("{} product formulas", fam.name()),
            range_label(b),
            failures,
        ));

        let small = all_ferrers_boards(b.mixed_len, b.mixed_len as u32);
        let failures: Vec<String> = small
            .par_iter()
            .flat_map_iter(|board| {
                let product = file_product(board, &fam);
                let n = board.num_columns() as u32;
                let mut f = Vec::new();
                for x in 0..=b.x_max {
                    if mixed_file_sum(board, &fam, x) != eval_x(&product, x) {
                        f.push(format!("mixed {board} x={x}"));
                    }
                    match aug_mixed_sum(board, &fam, x) {
                        Ok(s) if s == PQRPoly::constant(BigInt::from(x).pow(n)) => {}
                        _ => f.push(format!("augmented {board} x={x}")),
                    }
                }
                f
            })
            .collect();
        out.push(CheckReport::from_failures(
            format!("{} mixed placement sums", fam.name()),
            format!(
                "Ferrers boards n <= {0}, heights <= {0}, x <= {1}",
                b.mixed_len, b.x_max
            ),
            failures,
        ));
    }
    out
}

pub fn check_expansions_and_inverse(b: &Bounds) -> Vec<CheckReport> {
    let fib = TileFamily::fibonacci();
    let p = TileFamily::p_family();
    let mut out = verify_basis_expansions(&fib, b.triangle_n);
    out.extend(verify_basis_expansions(&p, b.triangle_p_n));
    out.push(matrix_inverse_check(&fib, b.triangle_n));
    out.push(matrix_inverse_check(&p, b.triangle_p_n));
    out
}

/// Every `(n, k)` with `1 <= k < n <= n_max`, in order.
pub fn involution_reports(n_max: usize, fam: &TileFamily) -> Vec<InvolutionReport> {
    let pairs: Vec<(usize, usize)> = (2..=n_max)
        .flat_map(|n| (1..n).map(move |k| (n, k)))
        .collect();
    pairs
        .par_iter()
        .map(|&(n, k)| involution_verify(n, k, fam))
        .collect()
}

pub fn check_involutions(n_max: usize) -> CheckReport {
    let reports = involution_reports(n_max, &TileFamily::fibonacci());
    let failures = reports
        .iter()
        .flat_map(|r| {
            r.violations
                .iter()
                .map(move |v| format!("(n,k)=({},{}): {v}", r.n, r.k))
        })
        .collect();
    let sizes = reports
        .iter()
        .map(|r| format!("({},{}):{}", r.n, r.k, r.domain_size))
        .collect::<Vec<_>>()
        .join(" ");
    CheckReport::from_failures(
        "involution I_{n,k}",
        format!("1 <= k < n <= {n_max}"),
        failures,
    )
    .with_note(format!("domain sizes {sizes}"))
}

pub fn check_rank(n_max: usize) -> CheckReport {
    let failures = (1..=n_max as u32)
        .filter(|&n| rank_generating_poly(n) != q_int_of_fibonacci(n))
        .map(|n| format!("n={n}"))
        .collect();
    CheckReport::from_failures(
        "sum of q^rank = [F_n]_q",
        format!("1 <= n <= {n_max}"),
        failures,
    )
}

pub fn run_suite(suite: Suite, b: &Bounds) -> Vec<CheckReport> {
    match suite {
        Suite::RecursionVsEnumeration => {
            let mut out = check_tilings(b.tiling_n);
            out.extend(check_board_polys(b));
            out.push(check_interpretations(b.staircase_n));
            out.push(check_rank(b.rank_n));
            out
        }
        Suite::Products => check_products(b),
        Suite::Inverse => check_expansions_and_inverse(b),
        Suite::Involution => vec![check_involutions(b.involution_n)],
        Suite::Identities => verify_identities(b.identities_n),
        Suite::All => [
            Suite::RecursionVsEnumeration,
            Suite::Products,
            Suite::Inverse,
            Suite::Involution,
            Suite::Identities,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, b))
        .collect(),
    }
}
