//! Column tilings whose bottom tile has height 1, their weights, and the
//! Fibonacci-tree rank statistic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::{q_int, Monomial, PQRPoly, Var};

/// Allowed tile heights. Height 1 is weighted by `q`, height 2 by `p` and
/// height 3 by `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TileFamily {
    heights: Vec<u8>,
}

impl TileFamily {
    pub fn new(mut heights: Vec<u8>) -> Result<Self> {
        heights.sort_unstable();
        heights.dedup();
        if !heights.contains(&1) || heights.iter().any(|h| !(1..=3).contains(h)) {
            return Err(Error::InvalidFamily(heights));
        }
        Ok(TileFamily { heights })
    }

    /// Tiles of height 1 and 2.
    pub fn fibonacci() -> Self {
        TileFamily {
            heights: vec![1, 2],
        }
    }

    /// Tiles of height 1, 2 and 3.
    pub fn p_family() -> Self {
        TileFamily {
            heights: vec![1, 2, 3],
        }
    }

    pub fn heights(&self) -> &[u8] {
        &self.heights
    }

    pub fn is_fibonacci(&self) -> bool {
        self.heights == [1, 2]
    }

    pub fn contains(&self, h: u8) -> bool {
        self.heights.contains(&h)
    }

    pub fn var_for(h: u8) -> Var {
        match h {
            1 => Var::Q,
            2 => Var::P,
            _ => Var::R,
        }
    }

    /// Short name used on the command line: `F` or `P`.
    pub fn name(&self) -> String {
        if self.is_fibonacci() {
            "F".into()
        } else if self.heights == [1, 2, 3] {
            "P".into()
        } else {
            self.heights
                .iter()
                .map(u8::to_string)
                .collect::<Vec<_>>()
                .join("")
        }
    }
}

impl FromStr for TileFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" | "f" | "fib" | "fibonacci" | "12" => Ok(TileFamily::fibonacci()),
            "P" | "p" | "123" => Ok(TileFamily::p_family()),
            _ => Err(Error::Parse {
                what: "tile family",
                input: s.to_string(),
            }),
        }
    }
}

/// Tile heights listed bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    tiles: Vec<u8>,
}

impl Tiling {
    pub fn new(tiles: Vec<u8>, fam: &TileFamily) -> Result<Self> {
        if tiles.first() != Some(&1) {
            return Err(Error::InvalidArgument(format!(
                "tiling {tiles:?} must start with a tile of height 1"
            )));
        }
        if let Some(h) = tiles.iter().find(|h| !fam.contains(**h)) {
            return Err(Error::InvalidArgument(format!(
                "tile height {h} not in family {:?}",
                fam.heights()
            )));
        }
        Ok(Tiling { tiles })
    }

    pub fn tiles(&self) -> &[u8] {
        &self.tiles
    }

    pub fn height(&self) -> u32 {
        self.tiles.iter().map(|&h| h as u32).sum()
    }

    pub fn count(&self, h: u8) -> u32 {
        self.tiles.iter().filter(|&&t| t == h).count() as u32
    }

    /// Exponents of `q^one p^two r^three`.
    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.count(1), self.count(2), self.count(3))
    }

    pub fn weight(&self) -> PQRPoly {
        PQRPoly::monomial(self.monomial())
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, h) in self.tiles.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        Ok(())
    }
}

impl FromStr for Tiling {
    type Err = Error;

    /// Parses `"1,2,1"`. The tile family is not checked beyond heights 1..=3.
    fn from_str(s: &str) -> Result<Self> {
        let tiles = s
            .split(',')
            .map(|t| t.trim().parse::<u8>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse {
                what: "tiling",
                input: s.to_string(),
            })?;
        Tiling::new(tiles, &TileFamily::p_family())
    }
}

/// Every tiling of height `n`, in lexicographic order of the tile sequence.
pub fn enumerate_tilings(fam: &TileFamily, n: u32) -> Vec<Tiling> {
    fn extend(fam: &TileFamily, remaining: u32, cur: &mut Vec<u8>, out: &mut Vec<Tiling>) {
        if remaining == 0 {
            out.push(Tiling { tiles: cur.clone() });
            return;
        }
        for &h in fam.heights() {
            if u32::from(h) > remaining {
                break;
            }
            cur.push(h);
            extend(fam, remaining - u32::from(h), cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut cur = vec![1];
    extend(fam, n - 1, &mut cur, &mut out);
    out
}

pub fn tiling_weight(t: &Tiling) -> PQRPoly {
    t.weight()
}

/// Weight polynomials `W_0, ..., W_max` from the recursion
/// `W_n = sum_h var(h) W_{n-h}` with `W_0 = 0`, `W_1 = q`.
pub fn weight_table(fam: &TileFamily, max: u32) -> Vec<PQRPoly> {
    let mut table: Vec<PQRPoly> = Vec::with_capacity(max as usize + 1);
    for n in 0..=max {
        let w = match n {
            0 => PQRPoly::zero(),
            1 => PQRPoly::q(),
            _ => fam
                .heights()
                .iter()
                .filter(|&&h| u32::from(h) <= n)
                .map(|&h| {
                    let prev = &table[(n - u32::from(h)) as usize];
                    prev.mul_monomial(Monomial::var(TileFamily::var_for(h)))
                })
                .sum(),
        };
        table.push(w);
    }
    table
}

/// `F_n(p,q)` for the Fibonacci family, `P_n(q,p,r)` for the P family.
pub fn weight_poly(fam: &TileFamily, n: u32) -> PQRPoly {
    weight_table(fam, n).swap_remove(n as usize)
}

/// Integer count of tilings of height `n` (the weight at `q = p = r = 1`).
pub fn tiling_count(fam: &TileFamily, n: u32) -> BigInt {
    weight_poly(fam, n).eval_int(1, 1, 1)
}

/// Number of leaves strictly left of `t`'s path in the Fibonacci tree.
///
/// The path reads tiles top to bottom, a height-1 tile branching left and a
/// height-2 tile branching right. Branching right at remaining height `m`
/// passes the whole left subtree, which holds `F_{m-1}` leaves.
pub fn tree_rank(t: &Tiling) -> Result<u64> {
    if t.tiles.iter().any(|&h| h > 2) {
        return Err(Error::UnsupportedFamily("tree rank"));
    }
    let fib = fibonacci_numbers(t.height() as usize + 1);
    let mut remaining = t.height();
    let mut rank = 0u64;
    for &h in t.tiles.iter().rev() {
        if h == 2 {
            rank += fib[remaining as usize - 1];
        }
        remaining -= u32::from(h);
    }
    Ok(rank)
}

/// `sum_T q^rank(T)` over all Fibonacci tilings of height `n`.
pub fn rank_generating_poly(n: u32) -> PQRPoly {
    let mut out = PQRPoly::zero();
    for t in enumerate_tilings(&TileFamily::fibonacci(), n) {
        let rank = tree_rank(&t).expect("Fibonacci tiling");
        out.add_term(Monomial::new(rank as u32, 0, 0), BigInt::from(1));
    }
    out
}

/// `[F_n]_q`, the value [`rank_generating_poly`] must reproduce.
pub fn q_int_of_fibonacci(n: u32) -> PQRPoly {
    let f = tiling_count(&TileFamily::fibonacci(), n);
    q_int(f.to_u32().expect("Fibonacci number fits in u32"))
}

/// `F_0 = 0, F_1 = 1, F_2 = 1, ...` up to `F_{len-1}`.
pub(crate) fn fibonacci_numbers(len: usize) -> Vec<u64> {
    let mut fib = vec![0u64, 1];
    while fib.len() < len {
        let n = fib.len();
        fib.push(fib[n - 1] + fib[n - 2]);
    }
    fib.truncate(len.max(1));
    fib
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(tiles: &[u8]) -> Tiling {
        Tiling::new(tiles.to_vec(), &TileFamily::p_family()).unwrap()
    }

    #[test]
    fn family_validation() {
        assert!(TileFamily::new(vec![2, 3]).is_err());
        assert!(TileFamily::new(vec![1, 4]).is_err());
        assert_eq!(
            TileFamily::new(vec![2, 1]).unwrap(),
            TileFamily::fibonacci()
        );
        assert_eq!("P".parse::<TileFamily>().unwrap(), TileFamily::p_family());
    }

    #[test]
    fn tiling_must_start_with_unit_tile() {
        assert!(Tiling::new(vec![2, 1], &TileFamily::fibonacci()).is_err());
        assert!(Tiling::new(vec![1, 3], &TileFamily::fibonacci()).is_err());
        assert!(Tiling::new(vec![], &TileFamily::fibonacci()).is_err());
        assert_eq!("1,2,1".parse::<Tiling>().unwrap().to_string(), "1,2,1");
    }

    #[test]
    fn enumeration_examples() {
        let fib = TileFamily::fibonacci();
        assert_eq!(enumerate_tilings(&fib, 3), vec![t(&[1, 1, 1]), t(&[1, 2])]);
        assert_eq!(enumerate_tilings(&fib, 1), vec![t(&[1])]);
        assert!(enumerate_tilings(&fib, 0).is_empty());
        assert_eq!(enumerate_tilings(&TileFamily::p_family(), 5).len(), 7);
    }

    #[test]
    fn weights() {
        assert_eq!(tiling_weight(&t(&[1, 1, 1])).to_string(), "q^3");
        assert_eq!(tiling_weight(&t(&[1, 2])).to_string(), "p*q");
        assert_eq!(tiling_weight(&t(&[1, 2, 3])).to_string(), "p*q*r");
    }

    #[test]
    fn weight_poly_examples() {
        let fib = TileFamily::fibonacci();
        assert!(weight_poly(&fib, 0).is_zero());
        assert_eq!(weight_poly(&fib, 1).to_string(), "q");
        assert_eq!(weight_poly(&fib, 2).to_string(), "q^2");
        assert_eq!(weight_poly(&fib, 4).to_string(), "2*p*q^2 + q^4");
        assert_eq!(
            weight_poly(&TileFamily::p_family(), 3).to_string(),
            "p*q + q^3"
        );
        assert_eq!(
            weight_poly(&TileFamily::p_family(), 5).eval_int(1, 1, 1),
            7.into()
        );
        assert_eq!(weight_poly(&fib, 5).eval_int(1, 1, 0), 5.into());
    }

    #[test]
    fn rank_examples() {
        let fib = TileFamily::fibonacci();
        for n in 1..10 {
            assert_eq!(tree_rank(&t(&vec![1; n])).unwrap(), 0);
        }
        let mut ranks: Vec<u64> = enumerate_tilings(&fib, 5)
            .iter()
            .map(|t| tree_rank(t).unwrap())
            .collect();
        ranks.sort_unstable();
        assert_eq!(ranks, vec![0, 1, 2, 3, 4]);
        assert_eq!(rank_generating_poly(4).to_string(), "1 + q + q^2");
        assert!(rank_generating_poly(1).is_one());
        assert_eq!(rank_generating_poly(5), q_int(5));
        assert_eq!(rank_generating_poly(6), q_int(8));
        assert!(tree_rank(&t(&[1, 3])).is_err());
    }

    /// Explicit Fibonacci tree: leaves left to right, each leaf the tiling
    /// whose top-to-bottom reading is the path.
    fn tree_leaves(remaining: u32, above: &mut Vec<u8>, out: &mut Vec<Tiling>) {
        if remaining == 0 {
            let mut tiles = above.clone();
            tiles.reverse();
            out.push(Tiling { tiles });
            return;
        }
        // Left branch: a height-1 tile. Right branch: a height-2 tile, which
        // cannot be the bottom tile.
        above.push(1);
        tree_leaves(remaining - 1, above, out);
        above.pop();
        if remaining >= 3 {
            above.push(2);
            tree_leaves(remaining - 2, above, out);
            above.pop();
        }
    }

    #[test]
    fn rank_matches_explicit_tree() {
        for n in 1..=8 {
            let mut leaves = Vec::new();
            tree_leaves(n, &mut Vec::new(), &mut leaves);
            for (pos, leaf) in leaves.iter().enumerate() {
                assert_eq!(tree_rank(leaf).unwrap(), pos as u64, "n={n} leaf={leaf}");
            }
        }
    }
}
