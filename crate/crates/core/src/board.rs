//! Ferrers boards and tiling placements on them.
//!
//! Columns are numbered from 1. A file placement puts a full-height tiling in
//! each chosen column. A rook placement additionally cancels cells: the
//! `s`-th tiled column (left to right) has effective height
//! `b_{i_s - (s-1)}`, and once `s` columns are tiled the untiled columns keep
//! heights `b_1, ..., b_{n-s}` from left to right.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{xpoly_product, Monomial, PQRPoly, Sign, XPoly};
use crate::tiling::{enumerate_tilings, weight_table, TileFamily, Tiling};

/// Board `F(b_1, ..., b_n)`. Built with [`FerrersBoard::new`] the heights are
/// weakly increasing; [`FerrersBoard::arbitrary`] accepts any sequence and
/// flags it, which only the file-placement operations accept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FerrersBoard {
    heights: Vec<u32>,
    ferrers: bool,
}

impl FerrersBoard {
    pub fn new(heights: Vec<u32>) -> Result<Self> {
        if !is_weakly_increasing(&heights) {
            return Err(Error::NotFerrers(heights));
        }
        Ok(FerrersBoard {
            heights,
            ferrers: true,
        })
    }

    pub fn arbitrary(heights: Vec<u32>) -> Self {
        let ferrers = is_weakly_increasing(&heights);
        FerrersBoard { heights, ferrers }
    }

    /// `B_n = F(0, 1, ..., n-1)`.
    pub fn staircase(n: usize) -> Self {
        FerrersBoard {
            heights: (0..n as u32).collect(),
            ferrers: true,
        }
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn num_columns(&self) -> usize {
        self.heights.len()
    }

    pub fn is_ferrers(&self) -> bool {
        self.ferrers
    }

    pub fn max_height(&self) -> u32 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    /// Height of 1-based column `col`.
    pub fn height(&self, col: usize) -> u32 {
        self.heights[col - 1]
    }

    /// The board with its last column removed.
    pub fn without_last(&self) -> FerrersBoard {
        let mut heights = self.heights.clone();
        heights.pop();
        FerrersBoard::arbitrary(heights)
    }

    fn require_ferrers(&self) -> Result<()> {
        if self.ferrers {
            Ok(())
        } else {
            Err(Error::NotFerrers(self.heights.clone()))
        }
    }
}

fn is_weakly_increasing(h: &[u32]) -> bool {
    h.windows(2).all(|w| w[0] <= w[1])
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("F(")?;
        for (i, h) in self.heights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for FerrersBoard {
    type Err = Error;

    /// Parses `"F(0,1,2)"`; a sequence that is not weakly increasing comes
    /// back flagged as non-Ferrers rather than as an error.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "board",
            input: s.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix("F(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        if inner.trim().is_empty() {
            return Ok(FerrersBoard::arbitrary(Vec::new()));
        }
        let heights = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| err())?;
        Ok(FerrersBoard::arbitrary(heights))
    }
}

macro_rules! placement_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            entries: Vec<(usize, Tiling)>,
        }

        impl $name {
            pub fn empty() -> Self {
                Self::default()
            }

            /// Entries must be in strictly ascending column order.
            pub fn from_entries(entries: Vec<(usize, Tiling)>) -> Result<Self> {
                if entries.iter().any(|(c, _)| *c == 0)
                    || entries.windows(2).any(|w| w[0].0 >= w[1].0)
                {
                    return Err(Error::InvalidArgument(format!(
                        "placement columns must be ascending and 1-based: {:?}",
                        entries.iter().map(|e| e.0).collect::<Vec<_>>()
                    )));
                }
                Ok($name { entries })
            }

            pub fn entries(&self) -> &[(usize, Tiling)] {
                &self.entries
            }

            /// Number of tilings.
            pub fn len(&self) -> usize {
                self.entries.len()
            }

            pub fn is_empty(&self) -> bool {
                self.entries.is_empty()
            }

            pub fn columns(&self) -> Vec<usize> {
                self.entries.iter().map(|e| e.0).collect()
            }

            pub fn tiling_at(&self, col: usize) -> Option<&Tiling> {
                self.entries.iter().find(|e| e.0 == col).map(|e| &e.1)
            }

            pub fn monomial(&self) -> Monomial {
                self.entries
                    .iter()
                    .fold(Monomial::ONE, |m, (_, t)| m * t.monomial())
            }

            pub fn weight(&self) -> PQRPoly {
                PQRPoly::monomial(self.monomial())
            }

            pub(crate) fn push(&mut self, col: usize, t: Tiling) {
                debug_assert!(self.entries.last().map_or(true, |e| e.0 < col));
                self.entries.push((col, t));
            }

            pub(crate) fn pop_at(&mut self, col: usize) -> Option<Tiling> {
                match self.entries.last() {
                    Some((c, _)) if *c == col => self.entries.pop().map(|e| e.1),
                    _ => None,
                }
            }
        }

        impl fmt::Display for $name {
            /// `"2:1;4:1,2"`; the empty placement prints as an empty string.
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, (c, t)) in self.entries.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{c}:{t}")?;
                }
                Ok(())
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                let s = s.trim();
                if s.is_empty() {
                    return Ok(Self::empty());
                }
                let entries = s
                    .split(';')
                    .map(|part| {
                        let (c, t) = part.split_once(':').ok_or_else(|| Error::Parse {
                            what: "placement",
                            input: s.to_string(),
                        })?;
                        let c = c.trim().parse::<usize>().map_err(|_| Error::Parse {
                            what: "placement",
                            input: s.to_string(),
                        })?;
                        Ok((c, t.parse::<Tiling>()?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::from_entries(entries)
            }
        }
    };
}

placement_type!(
    /// Tilings of full column height in distinct columns.
    FilePlacement
);

placement_type!(
    /// Tilings in distinct columns under the cancellation scheme.
    RookPlacement
);

fn check_tiling(t: &Tiling, fam: &TileFamily, height: u32, col: usize) -> Result<()> {
    if t.tiles().iter().any(|h| !fam.contains(*h)) {
        return Err(Error::InvalidArgument(format!(
            "tiling {t} in column {col} uses a height outside the family"
        )));
    }
    if t.height() != height {
        return Err(Error::InvalidArgument(format!(
            "tiling {t} in column {col} has height {} but the column offers {height}",
            t.height()
        )));
    }
    Ok(())
}

impl FilePlacement {
    pub fn validate(&self, b: &FerrersBoard, fam: &TileFamily) -> Result<()> {
        for (col, t) in &self.entries {
            if *col > b.num_columns() {
                return Err(Error::InvalidArgument(format!(
                    "column {col} is off the board {b}"
                )));
            }
            check_tiling(t, fam, b.height(*col), *col)?;
        }
        Ok(())
    }
}

impl RookPlacement {
    pub fn validate(&self, b: &FerrersBoard, fam: &TileFamily) -> Result<()> {
        b.require_ferrers()?;
        if self.entries.iter().any(|(c, _)| *c > b.num_columns()) {
            return Err(Error::InvalidArgument(format!(
                "placement {self} is off the board {b}"
            )));
        }
        let heights = tiled_heights(b, &self.columns())?;
        for ((col, t), h) in self.entries.iter().zip(heights) {
            check_tiling(t, fam, h, *col)?;
        }
        Ok(())
    }
}

fn check_chosen(b: &FerrersBoard, chosen: &[usize]) -> Result<()> {
    let n = b.num_columns();
    if chosen.iter().any(|&c| c == 0 || c > n) || chosen.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(format!(
            "chosen columns {chosen:?} must be ascending within 1..={n}"
        )));
    }
    Ok(())
}

/// Heights of the untiled columns, left to right, after every tiling in
/// `chosen` has cancelled its cells.
pub fn uncanceled_heights(b: &FerrersBoard, chosen: &[usize]) -> Result<Vec<u32>> {
    check_chosen(b, chosen)?;
    let mut out = Vec::with_capacity(b.num_columns() - chosen.len());
    let mut seen = 0;
    for col in 1..=b.num_columns() {
        if chosen.get(seen) == Some(&col) {
            seen += 1;
        } else {
            out.push(b.height(col - seen));
        }
    }
    Ok(out)
}

/// Effective height of each chosen column when its tiling is placed:
/// `b_{i_s - (s-1)}` for the `s`-th chosen column `i_s`.
pub fn tiled_heights(b: &FerrersBoard, chosen: &[usize]) -> Result<Vec<u32>> {
    check_chosen(b, chosen)?;
    Ok(chosen
        .iter()
        .enumerate()
        .map(|(s, &col)| b.height(col - s))
        .collect())
}

/// Result of cancelling cells one by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMarking {
    /// Uncancelled height of each chosen column when it was tiled.
    pub tiled: Vec<u32>,
    /// Uncancelled heights of the untiled columns at the end.
    pub empty: Vec<u32>,
    /// Per column, bottom to top, the column whose tiling cancelled the cell.
    pub marks: Vec<Vec<Option<usize>>>,
}

/// Literal cell-by-cell version of the cancellation scheme: the `s`-th
/// tiling cancels the top `b_{j-(s-1)} - b_{j-s}` uncancelled cells of every
/// column `j` to its right.
pub fn cell_marking(b: &FerrersBoard, chosen: &[usize]) -> Result<CellMarking> {
    b.require_ferrers()?;
    check_chosen(b, chosen)?;
    let n = b.num_columns();
    let mut marks: Vec<Vec<Option<usize>>> = b
        .heights()
        .iter()
        .map(|&h| vec![None; h as usize])
        .collect();
    let uncancelled =
        |cells: &Vec<Option<usize>>| cells.iter().filter(|c| c.is_none()).count() as u32;
    let mut tiled = Vec::with_capacity(chosen.len());
    for (idx, &col) in chosen.iter().enumerate() {
        let s = idx + 1;
        tiled.push(uncancelled(&marks[col - 1]));
        for j in col + 1..=n {
            let amount = (b.height(j - (s - 1)) - b.height(j - s)) as usize;
            let cells = &mut marks[j - 1];
            let mut left = amount;
            for cell in cells.iter_mut().rev() {
                if left == 0 {
                    break;
                }
                if cell.is_none() {
                    *cell = Some(col);
                    left -= 1;
                }
            }
            if left > 0 {
                return Err(Error::InvalidArgument(format!(
                    "column {j} ran out of cells to cancel"
                )));
            }
        }
    }
    let empty = (1..=n)
        .filter(|c| !chosen.contains(c))
        .map(|c| uncancelled(&marks[c - 1]))
        .collect();
    Ok(CellMarking {
        tiled,
        empty,
        marks,
    })
}

/// How placement polynomials are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Recursion,
    Enumeration,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursion" => Ok(Mode::Recursion),
            "enumeration" => Ok(Mode::Enumeration),
            _ => Err(Error::Parse {
                what: "mode",
                input: s.to_string(),
            }),
        }
    }
}

/// Tilings of each height `0..=max` with their monomials.
pub(crate) fn tilings_by_height(fam: &TileFamily, max: u32) -> Vec<Vec<(Tiling, Monomial)>> {
    (0..=max)
        .map(|h| {
            enumerate_tilings(fam, h)
                .into_iter()
                .map(|t| {
                    let m = t.monomial();
                    (t, m)
                })
                .collect()
        })
        .collect()
}

type Visit<'a, 'v> = dyn FnMut(&[(usize, &'a Tiling)], Monomial) + 'v;

/// Depth-first walk over placements, columns ascending and tilings in
/// lexicographic order, with the empty choice for a column first.
struct Walker<'a> {
    heights: &'a [u32],
    tilings: &'a [Vec<(Tiling, Monomial)>],
    rook: bool,
    target: Option<usize>,
}

impl<'a> Walker<'a> {
    fn walk(
        &self,
        col: usize,
        stack: &mut Vec<(usize, &'a Tiling)>,
        mono: Monomial,
        visit: &mut Visit<'a, '_>,
    ) {
        let n = self.heights.len();
        if let Some(k) = self.target {
            if stack.len() > k || stack.len() + (n - col) < k {
                return;
            }
        }
        if col == n {
            visit(stack, mono);
            return;
        }
        self.walk(col + 1, stack, mono, visit);
        let h = if self.rook {
            self.heights[col - stack.len()]
        } else {
            self.heights[col]
        };
        for (t, m) in &self.tilings[h as usize] {
            stack.push((col + 1, t));
            self.walk(col + 1, stack, mono * *m, visit);
            stack.pop();
        }
    }
}

fn collect_placements<P>(
    b: &FerrersBoard,
    fam: &TileFamily,
    k: usize,
    rook: bool,
    make: impl Fn(Vec<(usize, Tiling)>) -> P,
) -> Vec<P> {
    let tilings = tilings_by_height(fam, b.max_height());
    let walker = Walker {
        heights: b.heights(),
        tilings: &tilings,
        rook,
        target: Some(k),
    };
    let mut out = Vec::new();
    walker.walk(0, &mut Vec::new(), Monomial::ONE, &mut |stack, _| {
        out.push(make(
            stack.iter().map(|(c, t)| (*c, (*t).clone())).collect(),
        ));
    });
    out
}

/// Counts placements by `(number of tilings, monomial)` without storing them.
fn count_placements(b: &FerrersBoard, fam: &TileFamily, rook: bool) -> Vec<PQRPoly> {
    let tilings = tilings_by_height(fam, b.max_height());
    let walker = Walker {
        heights: b.heights(),
        tilings: &tilings,
        rook,
        target: None,
    };
    let mut counts: Vec<HashMap<Monomial, u64>> = vec![HashMap::new(); b.num_columns() + 1];
    walker.walk(0, &mut Vec::new(), Monomial::ONE, &mut |stack, mono| {
        *counts[stack.len()].entry(mono).or_insert(0) += 1;
    });
    counts
        .into_iter()
        .map(|m| PQRPoly::from_terms(m.into_iter().map(|(mono, c)| (BigInt::from(c), mono))))
        .collect()
}

pub fn enumerate_file_placements(
    b: &FerrersBoard,
    fam: &TileFamily,
    k: usize,
) -> Vec<FilePlacement> {
    if k > b.num_columns() {
        return Vec::new();
    }
    collect_placements(b, fam, k, false, |entries| FilePlacement { entries })
}

pub fn enumerate_rook_placements(
    b: &FerrersBoard,
    fam: &TileFamily,
    k: usize,
) -> Result<Vec<RookPlacement>> {
    b.require_ferrers()?;
    if k > b.num_columns() {
        return Ok(Vec::new());
    }
    Ok(collect_placements(b, fam, k, true, |entries| {
        RookPlacement { entries }
    }))
}

/// `fT_k(B)` for every `k = 0..=n`.
pub fn file_polys(b: &FerrersBoard, fam: &TileFamily, mode: Mode) -> Vec<PQRPoly> {
    match mode {
        Mode::Enumeration => count_placements(b, fam, false),
        Mode::Recursion => {
            // fT_k(B) = fT_k(B^-) + W_{b_n} fT_{k-1}(B^-)
            let w = weight_table(fam, b.max_height());
            let mut row = vec![PQRPoly::one()];
            for &h in b.heights() {
                let mut next = row.clone();
                next.push(PQRPoly::zero());
                for k in 1..next.len() {
                    next[k] += &w[h as usize] * &row[k - 1];
                }
                row = next;
            }
            row
        }
    }
}

pub fn file_poly(b: &FerrersBoard, fam: &TileFamily, k: usize, mode: Mode) -> PQRPoly {
    file_polys(b, fam, mode)
        .into_iter()
        .nth(k)
        .unwrap_or_default()
}

/// `rT_k(B)` for every `k = 0..=n`.
pub fn rook_polys(b: &FerrersBoard, fam: &TileFamily, mode: Mode) -> Result<Vec<PQRPoly>> {
    b.require_ferrers()?;
    Ok(match mode {
        Mode::Enumeration => count_placements(b, fam, true),
        Mode::Recursion => {
            // rT_k(B) = rT_k(B^-) + W_{b_{m-(k-1)}} rT_{k-1}(B^-) on the
            // prefix board of m columns.
            let w = weight_table(fam, b.max_height());
            let mut row = vec![PQRPoly::one()];
            for m in 1..=b.num_columns() {
                let mut next = row.clone();
                next.push(PQRPoly::zero());
                for k in 1..=m {
                    let h = b.height(m - (k - 1));
                    next[k] += &w[h as usize] * &row[k - 1];
                }
                row = next;
            }
            row
        }
    })
}

pub fn rook_poly(b: &FerrersBoard, fam: &TileFamily, k: usize, mode: Mode) -> Result<PQRPoly> {
    Ok(rook_polys(b, fam, mode)?
        .into_iter()
        .nth(k)
        .unwrap_or_default())
}

/// `prod_i (x + W_{b_i})`.
pub fn file_product(b: &FerrersBoard, fam: &TileFamily) -> XPoly {
    let w = weight_table(fam, b.max_height());
    xpoly_product(b.heights().iter().map(|&h| (Sign::Plus, &w[h as usize])))
}

/// `sum_k fT_k(B) x^{n-k}`.
pub fn file_poly_sum(b: &FerrersBoard, fam: &TileFamily, mode: Mode) -> XPoly {
    let n = b.num_columns();
    let polys = file_polys(b, fam, mode);
    let mut coeffs = vec![PQRPoly::zero(); n + 1];
    for (k, f) in polys.into_iter().enumerate() {
        coeffs[n - k] = f;
    }
    XPoly::from_coeffs(coeffs)
}

/// `sum_k rT_{n-k}(B) prod_{i<=k} (x - W_{b_i})`, which must equal `x^n`.
pub fn rook_product_sum(b: &FerrersBoard, fam: &TileFamily, mode: Mode) -> Result<XPoly> {
    let n = b.num_columns();
    let polys = rook_polys(b, fam, mode)?;
    let w = weight_table(fam, b.max_height());
    let mut total = XPoly::zero();
    let mut falling = XPoly::one();
    for k in 0..=n {
        if k > 0 {
            falling = falling.mul_linear(&-&w[b.height(k) as usize]);
        }
        total = &total + &falling.scale(&polys[n - k]);
    }
    Ok(total)
}

/// Per-column choice in a mixed placement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MixedChoice {
    /// Tiling above the (upper) bar.
    Tiling(Tiling),
    /// Rook in row `1..=x` below the bar.
    Rook(u32),
    /// Flipped tiling in the reflected board below the lower bar.
    Flipped(Tiling),
}

/// One choice per column, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedPlacement {
    pub choices: Vec<MixedChoice>,
}

impl MixedPlacement {
    /// `(-1)^{flipped tilings} q^one p^two r^three` over all tilings.
    pub fn signed_weight(&self) -> PQRPoly {
        let mut m = Monomial::ONE;
        let mut negative = false;
        for c in &self.choices {
            match c {
                MixedChoice::Tiling(t) => m = m * t.monomial(),
                MixedChoice::Flipped(t) => {
                    m = m * t.monomial();
                    negative = !negative;
                }
                MixedChoice::Rook(_) => {}
            }
        }
        PQRPoly::term(if negative { -1 } else { 1 }, m)
    }
}

/// Every mixed placement on `B_x` with explicit rook rows.
pub fn enumerate_mixed_file_placements(
    b: &FerrersBoard,
    fam: &TileFamily,
    x: u32,
) -> Vec<MixedPlacement> {
    let tilings = tilings_by_height(fam, b.max_height());
    let mut out = vec![MixedPlacement {
        choices: Vec::new(),
    }];
    for &h in b.heights() {
        let mut next = Vec::new();
        for partial in &out {
            let options = tilings[h as usize]
                .iter()
                .map(|(t, _)| MixedChoice::Tiling(t.clone()))
                .chain((1..=x).map(MixedChoice::Rook));
            for choice in options {
                let mut p = partial.clone();
                p.choices.push(choice);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Sum of weights over mixed placements on `B_x`; each free column's rook
/// contributes its `x` row choices as a multiplicity.
pub fn mixed_file_sum(b: &FerrersBoard, fam: &TileFamily, x: u32) -> PQRPoly {
    let tilings = tilings_by_height(fam, b.max_height());
    let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
    fn go(
        col: usize,
        heights: &[u32],
        tilings: &[Vec<(Tiling, Monomial)>],
        x: u32,
        mono: Monomial,
        mult: BigInt,
        acc: &mut HashMap<Monomial, BigInt>,
    ) {
        if col == heights.len() {
            *acc.entry(mono).or_default() += mult;
            return;
        }
        if x > 0 {
            go(col + 1, heights, tilings, x, mono, &mult * x, acc);
        }
        for (_, m) in &tilings[heights[col] as usize] {
            go(col + 1, heights, tilings, x, mono * *m, mult.clone(), acc);
        }
    }
    go(
        0,
        b.heights(),
        &tilings,
        x,
        Monomial::ONE,
        BigInt::from(1),
        &mut acc,
    );
    PQRPoly::from_terms(acc.into_iter().map(|(m, c)| (c, m)))
}

/// Every mixed placement on the augmented board `AugB_x` with explicit rook
/// rows. Columns are processed left to right; a tiling in `B` cancels the
/// same cells in `B` and in the reflected board.
pub fn enumerate_aug_placements(
    b: &FerrersBoard,
    fam: &TileFamily,
    x: u32,
) -> Result<Vec<MixedPlacement>> {
    b.require_ferrers()?;
    let tilings = tilings_by_height(fam, b.max_height());
    // (placement, tilings in B so far)
    let mut out = vec![(
        MixedPlacement {
            choices: Vec::new(),
        },
        0usize,
    )];
    for col in 1..=b.num_columns() {
        let mut next = Vec::new();
        for (partial, s) in &out {
            let h = b.height(col - s);
            for (t, _) in &tilings[h as usize] {
                let mut p = partial.clone();
                p.choices.push(MixedChoice::Tiling(t.clone()));
                next.push((p, s + 1));
            }
            for row in 1..=x {
                let mut p = partial.clone();
                p.choices.push(MixedChoice::Rook(row));
                next.push((p, *s));
            }
            for (t, _) in &tilings[h as usize] {
                let mut p = partial.clone();
                p.choices.push(MixedChoice::Flipped(t.clone()));
                next.push((p, *s));
            }
        }
        out = next;
    }
    Ok(out.into_iter().map(|(p, _)| p).collect())
}

/// Signed weight sum over mixed placements on `AugB_x`, rook rows counted by
/// multiplicity. Equals the constant `x^n`.
pub fn aug_mixed_sum(b: &FerrersBoard, fam: &TileFamily, x: u32) -> Result<PQRPoly> {
    b.require_ferrers()?;
    let tilings = tilings_by_height(fam, b.max_height());
    let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        col: usize,
        s: usize,
        heights: &[u32],
        tilings: &[Vec<(Tiling, Monomial)>],
        x: u32,
        mono: Monomial,
        coeff: BigInt,
        acc: &mut HashMap<Monomial, BigInt>,
    ) {
        if col == heights.len() {
            *acc.entry(mono).or_default() += coeff;
            return;
        }
        // 0-based column `col` is 1-based column col+1, effective height b_{col+1-s}.
        let h = heights[col - s];
        for (_, m) in &tilings[h as usize] {
            go(
                col + 1,
                s + 1,
                heights,
                tilings,
                x,
                mono * *m,
                coeff.clone(),
                acc,
            );
        }
        if x > 0 {
            go(col + 1, s, heights, tilings, x, mono, &coeff * x, acc);
        }
        for (_, m) in &tilings[h as usize] {
            go(
                col + 1,
                s,
                heights,
                tilings,
                x,
                mono * *m,
                -coeff.clone(),
                acc,
            );
        }
    }
    go(
        0,
        0,
        b.heights(),
        &tilings,
        x,
        Monomial::ONE,
        BigInt::from(1),
        &mut acc,
    );
    Ok(PQRPoly::from_terms(acc.into_iter().map(|(m, c)| (c, m))))
}

/// All weakly increasing height sequences of length `0..=max_len` with
/// entries in `0..=max_height`.
pub fn all_ferrers_boards(max_len: usize, max_height: u32) -> Vec<FerrersBoard> {
    fn go(len: usize, min: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<FerrersBoard>) {
        if cur.len() == len {
            out.push(FerrersBoard::arbitrary(cur.clone()));
            return;
        }
        for h in min..=max {
            cur.push(h);
            go(len, h, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for len in 0..=max_len {
        go(len, 0, max_height, &mut Vec::new(), &mut out);
    }
    out
}
