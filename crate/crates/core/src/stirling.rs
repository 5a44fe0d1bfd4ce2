//! Connection-coefficient triangles between the power basis and the
//! weighted falling/rising factorial bases, their board interpretations,
//! and the sign-reversing involution behind the matrix-inverse identity.

use std::collections::HashSet;
use std::fmt;
use std::io;
use std::str::FromStr;

use serde::Serialize;

use crate::board::{
    enumerate_file_placements, enumerate_rook_placements, file_polys, rook_polys, FerrersBoard,
    FilePlacement, Mode, RookPlacement,
};
use crate::error::{Error, Result};
use crate::poly::{xpoly_product, Monomial, PQRPoly, Sign, XPoly};
use crate::report::CheckReport;
use crate::tiling::{weight_table, TileFamily};

/// Which triangle. Lower-case first letters are first-kind numbers
/// (`cf`/`cp` signless, `sf`/`sp` signed), `Sf`/`Sp` are second-kind and
/// `Lf` is the Lah analogue. The `f` kinds use the Fibonacci tile family,
/// the `p` kinds the family with heights 1, 2, 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Cf,
    SfLower,
    SfUpper,
    Lf,
    Cp,
    SpLower,
    SpUpper,
}

#[derive(Clone, Copy)]
enum Rule {
    FirstSignless,
    FirstSigned,
    Second,
    Lah,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Cf,
        Kind::SfLower,
        Kind::SfUpper,
        Kind::Lf,
        Kind::Cp,
        Kind::SpLower,
        Kind::SpUpper,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Kind::Cf => "cf",
            Kind::SfLower => "sf",
            Kind::SfUpper => "Sf",
            Kind::Lf => "Lf",
            Kind::Cp => "cp",
            Kind::SpLower => "sp",
            Kind::SpUpper => "Sp",
        }
    }

    pub fn family(self) -> TileFamily {
        match self {
            Kind::Cf | Kind::SfLower | Kind::SfUpper | Kind::Lf => TileFamily::fibonacci(),
            Kind::Cp | Kind::SpLower | Kind::SpUpper => TileFamily::p_family(),
        }
    }

    fn rule(self) -> Rule {
        match self {
            Kind::Cf | Kind::Cp => Rule::FirstSignless,
            Kind::SfLower | Kind::SpLower => Rule::FirstSigned,
            Kind::SfUpper | Kind::SpUpper => Rule::Second,
            Kind::Lf => Rule::Lah,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Kind {
    type Err = Error;

    /// Case-sensitive: `sf` and `Sf` are different triangles.
    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.symbol() == s)
            .ok_or_else(|| Error::Parse {
                what: "triangle kind",
                input: s.to_string(),
            })
    }
}

/// Entries `T(n, k)` for `0 <= k <= n <= n_max`; anything outside the
/// triangle reads as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTriangle {
    kind: Kind,
    n_max: usize,
    rows: Vec<Vec<PQRPoly>>,
}

#[derive(Serialize)]
struct TriangleJson<'a> {
    kind: &'a str,
    #[serde(rename = "N")]
    n: usize,
    entries: Vec<Vec<String>>,
}

impl CoeffTriangle {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn entry(&self, n: usize, k: usize) -> &PQRPoly {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .unwrap_or(PQRPoly::zero_ref())
    }

    /// Same as [`entry`](Self::entry) but accepts negative `k`.
    pub fn entry_signed(&self, n: usize, k: i64) -> &PQRPoly {
        if k < 0 {
            PQRPoly::zero_ref()
        } else {
            self.entry(n, k as usize)
        }
    }

    pub fn row(&self, n: usize) -> &[PQRPoly] {
        &self.rows[n]
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries = self
            .rows
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        serde_json::to_value(TriangleJson {
            kind: self.kind.symbol(),
            n: self.n_max,
            entries,
        })
        .expect("triangle serializes")
    }

    /// One `n,k,poly` record per entry after a header line.
    pub fn write_csv<W: io::Write>(&self, w: W) -> csv::Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        wtr.write_record(["n", "k", "poly"])?;
        for (n, row) in self.rows.iter().enumerate() {
            for (k, e) in row.iter().enumerate() {
                wtr.write_record([n.to_string(), k.to_string(), e.to_string()])?;
            }
        }
        wtr.flush()?;
        Ok(())
    }

    /// Human-readable listing, one `kind(n,k) = poly` line per entry.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, row) in self.rows.iter().enumerate() {
            for (k, e) in row.iter().enumerate() {
                out.push_str(&format!("{}({n},{k}) = {e}\n", self.kind));
            }
        }
        out
    }
}

/// Fills the triangle row by row from its recursion, with `W_m` the weight
/// polynomial of the kind's tile family:
///
/// * `cf(n+1,k) = cf(n,k-1) + W_n cf(n,k)`
/// * `sf(n+1,k) = sf(n,k-1) - W_n sf(n,k)`
/// * `Sf(n+1,k) = Sf(n,k-1) + W_k Sf(n,k)`
/// * `Lf(n+1,k) = Lf(n,k-1) + (W_k + W_n) Lf(n,k)`
pub fn build_triangle(kind: Kind, n_max: usize) -> CoeffTriangle {
    let w = weight_table(&kind.family(), n_max as u32 + 1);
    let mut rows = vec![vec![PQRPoly::one()]];
    for n in 0..n_max {
        let prev = &rows[n];
        let mut next = Vec::with_capacity(n + 2);
        for k in 0..=n + 1 {
            let mut e = if k >= 1 {
                prev[k - 1].clone()
            } else {
                PQRPoly::zero()
            };
            if k <= n && !prev[k].is_zero() {
                let factor = match kind.rule() {
                    Rule::FirstSignless => w[n].clone(),
                    Rule::FirstSigned => -&w[n],
                    Rule::Second => w[k].clone(),
                    Rule::Lah => &w[k] + &w[n],
                };
                e += &factor * &prev[k];
            }
            next.push(e);
        }
        rows.push(next);
    }
    CoeffTriangle { kind, n_max, rows }
}

/// Builds `cf`/`cp` as `fT_{n-k}(B_n)` and `Sf`/`Sp` as `rT_{n-k}(B_n)` by
/// enumerating placements on the staircase boards.
pub fn triangle_from_boards(kind: Kind, n_max: usize) -> Result<CoeffTriangle> {
    let fam = kind.family();
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let b = FerrersBoard::staircase(n);
        let polys = match kind {
            Kind::Cf | Kind::Cp => file_polys(&b, &fam, Mode::Enumeration),
            Kind::SfUpper | Kind::SpUpper => rook_polys(&b, &fam, Mode::Enumeration)?,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "no board model for the {kind} triangle"
                )))
            }
        };
        // polys[j] counts placements with j tilings, i.e. entry (n, n-j).
        rows.push((0..=n).map(|k| polys[n - k].clone()).collect());
    }
    Ok(CoeffTriangle { kind, n_max, rows })
}

/// `x (x - W_1) ... (x - W_{n-1})`, or `1` for `n = 0`.
pub fn falling_factorial(fam: &TileFamily, n: usize) -> XPoly {
    factorial_basis(fam, n, Sign::Minus)
}

/// `x (x + W_1) ... (x + W_{n-1})`, or `1` for `n = 0`.
pub fn rising_factorial(fam: &TileFamily, n: usize) -> XPoly {
    factorial_basis(fam, n, Sign::Plus)
}

fn factorial_basis(fam: &TileFamily, n: usize, sign: Sign) -> XPoly {
    if n == 0 {
        return XPoly::one();
    }
    let w = weight_table(fam, n as u32);
    let zero = PQRPoly::zero();
    xpoly_product(std::iter::once((Sign::Plus, &zero)).chain((1..n).map(|i| (sign, &w[i]))))
}

/// `sum_k T(n,k) basis_k` for one row of a triangle.
fn expand_row(t: &CoeffTriangle, n: usize, basis: &[XPoly]) -> XPoly {
    let mut acc = XPoly::zero();
    for (k, b) in basis.iter().enumerate().take(n + 1) {
        let c = t.entry(n, k);
        if !c.is_zero() {
            acc = &acc + &b.scale(c);
        }
    }
    acc
}

/// Checks that each triangle really is the connection-coefficient matrix it
/// claims to be, as exact identities in `x`:
///
/// * falling_n = sum_k sf(n,k) x^k
/// * x^n = sum_k Sf(n,k) falling_k
/// * rising_n = sum_k Lf(n,k) falling_k
/// * rising_n = sum_k cf(n,k) x^k
///
/// and for the P family the `sp`, `Sp` and `cp` counterparts.
pub fn verify_basis_expansions(fam: &TileFamily, n_max: usize) -> Vec<CheckReport> {
    let falling: Vec<XPoly> = (0..=n_max).map(|n| falling_factorial(fam, n)).collect();
    let rising: Vec<XPoly> = (0..=n_max).map(|n| rising_factorial(fam, n)).collect();
    let powers: Vec<XPoly> = (0..=n_max).map(XPoly::x_pow).collect();

    let (lower, upper, signless, lah) = if fam.is_fibonacci() {
        (Kind::SfLower, Kind::SfUpper, Kind::Cf, Some(Kind::Lf))
    } else {
        (Kind::SpLower, Kind::SpUpper, Kind::Cp, None)
    };

    let mut checks: Vec<(String, Kind, &[XPoly], &[XPoly])> = vec![
        (
            format!("falling = sum {lower} x^k"),
            lower,
            &falling,
            &powers,
        ),
        (
            format!("x^n = sum {upper} falling_k"),
            upper,
            &powers,
            &falling,
        ),
        (
            format!("rising = sum {signless} x^k"),
            signless,
            &rising,
            &powers,
        ),
    ];
    if let Some(lah) = lah {
        checks.push((
            format!("rising = sum {lah} falling_k"),
            lah,
            &rising,
            &falling,
        ));
    }

    checks
        .into_iter()
        .map(|(name, kind, lhs, basis)| {
            let t = build_triangle(kind, n_max);
            let failures = (0..=n_max)
                .filter(|&n| expand_row(&t, n, basis) != lhs[n])
                .map(|n| format!("{name} fails at n={n}"))
                .collect();
            CheckReport::from_failures(name, format!("0 <= n <= {n_max}"), failures)
        })
        .collect()
}

/// `sum_j S(n,j) s(j,k) = [n = k]` for the second-kind triangle `S` and the
/// signed first-kind triangle `s` of the family.
pub fn matrix_inverse_check(fam: &TileFamily, n_max: usize) -> CheckReport {
    let (upper, lower) = if fam.is_fibonacci() {
        (Kind::SfUpper, Kind::SfLower)
    } else {
        (Kind::SpUpper, Kind::SpLower)
    };
    let s_up = build_triangle(upper, n_max);
    let s_low = build_triangle(lower, n_max);
    let mut failures = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            let sum: PQRPoly = (k..=n).map(|j| s_up.entry(n, j) * s_low.entry(j, k)).sum();
            let expect = if n == k {
                PQRPoly::one()
            } else {
                PQRPoly::zero()
            };
            if sum != expect {
                failures.push(format!("(n,k)=({n},{k}): got {sum}"));
            }
        }
    }
    CheckReport::from_failures(
        format!("sum_j {upper}(n,j) {lower}(j,k) = [n=k]"),
        format!("0 <= k <= n <= {n_max}"),
        failures,
    )
}

/// Element of `NT_{n-j}(B_n) x FT_{j-k}(B_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlacementPair {
    pub j: usize,
    /// Rook placement on `B_n` with `n - j` tilings.
    pub rook: RookPlacement,
    /// File placement on `B_j` with `j - k` tilings.
    pub file: FilePlacement,
}

impl PlacementPair {
    /// `(-1)^{tilings in the file placement}`.
    pub fn sign(&self) -> i64 {
        if self.file.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn monomial(&self) -> Monomial {
        self.rook.monomial() * self.file.monomial()
    }

    pub fn signed_weight(&self) -> PQRPoly {
        PQRPoly::term(self.sign(), self.monomial())
    }

    pub fn validate(&self, n: usize, k: usize, fam: &TileFamily) -> Result<()> {
        if self.j < k || self.j > n {
            return Err(Error::InvalidPair(format!(
                "j={} outside {k}..={n}",
                self.j
            )));
        }
        if self.rook.len() != n - self.j || self.file.len() != self.j - k {
            return Err(Error::InvalidPair(format!(
                "expected {} rook tilings and {} file tilings, got {} and {}",
                n - self.j,
                self.j - k,
                self.rook.len(),
                self.file.len()
            )));
        }
        self.rook
            .validate(&FerrersBoard::staircase(n), fam)
            .map_err(|e| Error::InvalidPair(e.to_string()))?;
        self.file
            .validate(&FerrersBoard::staircase(self.j), fam)
            .map_err(|e| Error::InvalidPair(e.to_string()))?;
        Ok(())
    }
}

impl fmt::Display for PlacementPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j={} P=[{}] Q=[{}]", self.j, self.rook, self.file)
    }
}

/// Which rule of the involution fired at the outermost level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionCase {
    /// Tiling in the last column of `P` moves to a new last column of `Q`.
    RookToFile,
    /// Tiling in the last column of `Q` moves into the last column of `P`.
    FileToRook,
    /// Both last columns empty: strip them, recurse on `(n-1, k-1)`, restore.
    /// Carries the recursion depth reached.
    Reduce(usize),
}

/// Applies `I_{n,k}` to a pair in its domain (`1 <= k < n`).
pub fn involution(
    n: usize,
    k: usize,
    pair: &PlacementPair,
    fam: &TileFamily,
) -> Result<PlacementPair> {
    involution_with_case(n, k, pair, fam).map(|(p, _)| p)
}

pub fn involution_with_case(
    n: usize,
    k: usize,
    pair: &PlacementPair,
    fam: &TileFamily,
) -> Result<(PlacementPair, InvolutionCase)> {
    if !(1 <= k && k < n) {
        return Err(Error::InvalidPair(format!(
            "involution needs 1 <= k < n, got n={n} k={k}"
        )));
    }
    pair.validate(n, k, fam)?;
    apply_involution(n, k, pair.clone(), 0)
}

fn apply_involution(
    n: usize,
    k: usize,
    mut pair: PlacementPair,
    depth: usize,
) -> Result<(PlacementPair, InvolutionCase)> {
    let j = pair.j;
    if let Some(t) = pair.rook.pop_at(n) {
        // Last column of B_n holds b_{n-(n-j-1)} = j cells, the height of the
        // new last column of B_{j+1}.
        pair.file.push(j + 1, t);
        pair.j = j + 1;
        return Ok((pair, InvolutionCase::RookToFile));
    }
    if let Some(t) = pair.file.pop_at(j) {
        // Column j of B_j has height j-1, as does the uncancelled part of the
        // last column of B_n when n-j columns are tiled before it.
        pair.rook.push(n, t);
        pair.j = j - 1;
        return Ok((pair, InvolutionCase::FileToRook));
    }
    if k <= 1 {
        return Err(Error::InvalidPair(format!(
            "reduction reached n={n} k={k} without a movable tiling"
        )));
    }
    // The stripped pair lives on B_{n-1} and B_{j-1}; entries are unchanged
    // because the removed columns are empty.
    pair.j = j - 1;
    let (mut image, case) = apply_involution(n - 1, k - 1, pair, depth + 1)?;
    image.j += 1;
    let depth = match case {
        InvolutionCase::Reduce(d) => d,
        _ => depth + 1,
    };
    Ok((image, InvolutionCase::Reduce(depth)))
}

/// `bigcup_{j=k}^{n} NT_{n-j}(B_n) x FT_{j-k}(B_j)`.
pub fn involution_domain(n: usize, k: usize, fam: &TileFamily) -> Vec<PlacementPair> {
    let bn = FerrersBoard::staircase(n);
    let mut out = Vec::new();
    for j in k..=n {
        let rooks = enumerate_rook_placements(&bn, fam, n - j).expect("staircase is Ferrers");
        let files = enumerate_file_placements(&FerrersBoard::staircase(j), fam, j - k);
        for r in &rooks {
            for f in &files {
                out.push(PlacementPair {
                    j,
                    rook: r.clone(),
                    file: f.clone(),
                });
            }
        }
    }
    out
}

/// Exhaustive check of `I_{n,k}` on its whole domain.
#[derive(Debug, Clone, Serialize)]
pub struct InvolutionReport {
    pub n: usize,
    pub k: usize,
    pub domain_size: usize,
    /// Pairs handled by each rule: rook-to-file, file-to-rook, reduction.
    pub case_counts: [usize; 3],
    pub max_reduction_depth: usize,
    #[serde(serialize_with = "serialize_display")]
    pub signed_sum: PQRPoly,
    pub violations: Vec<String>,
}

fn serialize_display<S: serde::Serializer>(p: &PQRPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl InvolutionReport {
    pub fn to_check(&self) -> CheckReport {
        CheckReport::from_failures(
            "involution I_{n,k}",
            format!("n={} k={}", self.n, self.k),
            self.violations.clone(),
        )
        .with_note(format!(
            "domain {} pairs; cases {:?}; signed sum {}",
            self.domain_size, self.case_counts, self.signed_sum
        ))
    }
}

const MAX_VIOLATIONS: usize = 20;

/// Enumerates the domain and checks that `I_{n,k}` is an involution without
/// fixed points that flips the sign and keeps the weight, so the signed sum
/// is zero. Outside `1 <= k < n` only the signed sum is computed (it is `1`
/// for `n = k` and `0` otherwise).
pub fn involution_verify(n: usize, k: usize, fam: &TileFamily) -> InvolutionReport {
    let domain = involution_domain(n, k, fam);
    let signed_sum: PQRPoly = domain.iter().map(PlacementPair::signed_weight).sum();
    let mut report = InvolutionReport {
        n,
        k,
        domain_size: domain.len(),
        case_counts: [0; 3],
        max_reduction_depth: 0,
        signed_sum,
        violations: Vec::new(),
    };
    let expected_sum = if n == k {
        PQRPoly::one()
    } else {
        PQRPoly::zero()
    };
    if report.signed_sum != expected_sum {
        report.violations.push(format!(
            "signed sum is {} not {}",
            report.signed_sum, expected_sum
        ));
    }
    if !(1 <= k && k < n) {
        return report;
    }

    let members: HashSet<&PlacementPair> = domain.iter().collect();
    let flag = |msg: String, report: &mut InvolutionReport| {
        if report.violations.len() < MAX_VIOLATIONS {
            report.violations.push(msg);
        }
    };
    for pair in &domain {
        let (image, case) = match involution_with_case(n, k, pair, fam) {
            Ok(r) => r,
            Err(e) => {
                flag(format!("{pair}: {e}"), &mut report);
                continue;
            }
        };
        match case {
            InvolutionCase::RookToFile => report.case_counts[0] += 1,
            InvolutionCase::FileToRook => report.case_counts[1] += 1,
            InvolutionCase::Reduce(d) => {
                report.case_counts[2] += 1;
                report.max_reduction_depth = report.max_reduction_depth.max(d);
            }
        }
        if image == *pair {
            flag(format!("fixed point {pair}"), &mut report);
        }
        if !members.contains(&image) {
            flag(
                format!("{pair} maps outside the domain to {image}"),
                &mut report,
            );
        }
        if image.sign() != -pair.sign() {
            flag(format!("{pair} -> {image} keeps its sign"), &mut report);
        }
        if image.monomial() != pair.monomial() {
            flag(format!("{pair} -> {image} changes the weight"), &mut report);
        }
        match involution(n, k, &image, fam) {
            Ok(back) if back == *pair => {}
            Ok(back) => flag(format!("{pair} -> {image} -> {back}"), &mut report),
            Err(e) => flag(format!("{image}: {e}"), &mut report),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_int;

    fn fib() -> TileFamily {
        TileFamily::fibonacci()
    }

    #[test]
    fn kind_symbols_round_trip() {
        for k in Kind::ALL {
            assert_eq!(k.symbol().parse::<Kind>().unwrap(), k);
        }
        assert!("SF".parse::<Kind>().is_err());
    }

    #[test]
    fn triangle_examples() {
        let sf = build_triangle(Kind::SfUpper, 6);
        assert_eq!(sf.entry(3, 1).to_string(), "q^2");
        assert_eq!(*sf.entry(4, 2), &PQRPoly::q_pow(2) * &q_int(3));
        let cf = build_triangle(Kind::Cf, 6);
        assert_eq!(cf.entry(4, 1).to_string(), "p*q^4 + q^6");
        let lf = build_triangle(Kind::Lf, 4);
        assert_eq!(lf.entry(2, 1).to_string(), "2*q");
        let sp = build_triangle(Kind::SpUpper, 4);
        assert_eq!(sp.entry(3, 1).to_string(), "q^2");
    }

    #[test]
    fn triangle_boundaries() {
        for kind in Kind::ALL {
            let t = build_triangle(kind, 8);
            assert!(t.entry(0, 0).is_one());
            for n in 0..=8 {
                assert!(t.entry(n, n).is_one(), "{kind} ({n},{n})");
                assert!(t.entry(n, n + 1).is_zero());
                assert!(t.entry_signed(n, -1).is_zero());
                if n >= 1 {
                    assert!(t.entry(n, 0).is_zero(), "{kind} ({n},0)");
                }
            }
        }
    }

    #[test]
    fn signed_and_signless_differ_by_sign() {
        for (signless, signed) in [(Kind::Cf, Kind::SfLower), (Kind::Cp, Kind::SpLower)] {
            let a = build_triangle(signless, 9);
            let b = build_triangle(signed, 9);
            for n in 0..=9 {
                for k in 0..=n {
                    let expect = if (n - k) % 2 == 0 {
                        a.entry(n, k).clone()
                    } else {
                        -a.entry(n, k)
                    };
                    assert_eq!(*b.entry(n, k), expect);
                }
            }
        }
    }

    #[test]
    fn boards_reproduce_small_triangles() {
        for kind in [Kind::Cf, Kind::SfUpper, Kind::Cp, Kind::SpUpper] {
            assert_eq!(
                triangle_from_boards(kind, 6).unwrap(),
                build_triangle(kind, 6)
            );
        }
        assert!(triangle_from_boards(Kind::Lf, 3).is_err());
        let sf = triangle_from_boards(Kind::SfUpper, 6).unwrap();
        let w = weight_table(&fib(), 6);
        for n in 2..=6 {
            let sum: PQRPoly = w[1..n].iter().sum();
            assert_eq!(*sf.entry(n, n - 1), sum);
        }
    }

    #[test]
    fn expansions_hold_for_small_n() {
        for fam in [fib(), TileFamily::p_family()] {
            for r in verify_basis_expansions(&fam, 6) {
                assert!(!r.is_fail(), "{r:?}");
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let fam = fib();
        let cf = build_triangle(Kind::Cf, 3);
        assert_eq!(cf.entry(2, 1).to_string(), "q");
        let sf = build_triangle(Kind::SfUpper, 3);
        let rhs = &(&falling_factorial(&fam, 1).scale(sf.entry(3, 1))
            + &falling_factorial(&fam, 2).scale(sf.entry(3, 2)))
            + &falling_factorial(&fam, 3);
        assert_eq!(rhs, XPoly::x_pow(3));
    }

    #[test]
    fn inverse_examples() {
        let up = build_triangle(Kind::SfUpper, 5);
        let low = build_triangle(Kind::SfLower, 5);
        let s21 = up.entry(2, 1) * low.entry(1, 1);
        let s22 = up.entry(2, 2) * low.entry(2, 1);
        assert_eq!(s21.to_string(), "q");
        assert_eq!(s22.to_string(), "-q");
        let s52: PQRPoly = (2..=5).map(|j| up.entry(5, j) * low.entry(j, 2)).sum();
        assert!(s52.is_zero());
        assert!(!matrix_inverse_check(&fib(), 8).is_fail());
    }

    #[test]
    fn base_involution_swaps_the_two_pairs() {
        let domain = involution_domain(2, 1, &fib());
        assert_eq!(domain.len(), 2);
        let a = involution(2, 1, &domain[0], &fib()).unwrap();
        assert_eq!(a, domain[1]);
        assert_eq!(involution(2, 1, &domain[1], &fib()).unwrap(), domain[0]);
        assert!(domain
            .iter()
            .all(|p| p.monomial() == Monomial::new(1, 0, 0)));
    }

    #[test]
    fn case_one_and_case_two_are_exchanged() {
        // n=6, k=2, j=3: P in NT_3(B_6) with a tiling in column 6.
        let rook: RookPlacement = "2:1;4:1,1;6:1,2".parse().unwrap();
        let file: FilePlacement = "2:1".parse().unwrap();
        let pair = PlacementPair { j: 3, rook, file };
        pair.validate(6, 2, &fib()).unwrap();
        let (image, case) = involution_with_case(6, 2, &pair, &fib()).unwrap();
        assert_eq!(case, InvolutionCase::RookToFile);
        assert_eq!(image.j, 4);
        assert_eq!(image.file.to_string(), "2:1;4:1,2");
        assert_eq!(image.rook.to_string(), "2:1;4:1,1");
        let (back, case) = involution_with_case(6, 2, &image, &fib()).unwrap();
        assert_eq!(case, InvolutionCase::FileToRook);
        assert_eq!(back, pair);
    }

    #[test]
    fn involution_rejects_bad_pairs() {
        let pair = PlacementPair {
            j: 2,
            rook: "2:1".parse().unwrap(),
            file: FilePlacement::empty(),
        };
        assert!(involution(3, 1, &pair, &fib()).is_err());
        assert!(involution(3, 3, &pair, &fib()).is_err());
    }

    #[test]
    fn involution_small_cases() {
        let r = involution_verify(2, 1, &fib());
        assert_eq!(r.domain_size, 2);
        assert!(r.signed_sum.is_zero());
        assert!(r.violations.is_empty());
        let r = involution_verify(4, 4, &fib());
        assert_eq!(r.domain_size, 1);
        assert!(r.signed_sum.is_one());
        let r = involution_verify(5, 2, &fib());
        assert!(r.signed_sum.is_zero());
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert!(r.case_counts[2] > 0);
        let r = involution_verify(7, 6, &fib());
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.max_reduction_depth, 5);
        let r = involution_verify(4, 2, &TileFamily::p_family());
        assert!(r.violations.is_empty(), "{:?}", r.violations);
    }

    #[test]
    fn exports() {
        let t = build_triangle(Kind::SfUpper, 2);
        let json = t.to_json();
        assert_eq!(json["kind"], "Sf");
        assert_eq!(json["N"], 2);
        assert_eq!(json["entries"][2][1], "q");
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("n,k,poly"));
        assert!(text.contains("2,1,q\n"));
        assert_eq!(text.lines().count(), 1 + 6);
        assert!(t.to_text().contains("Sf(2,2) = 1"));
    }
}
