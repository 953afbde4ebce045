//! Rank diagrams on the (m,n) lattice.
//!
//! The grid has `m` columns and `n` rows, rows numbered bottom-to-top
//! starting at 1.  Cell `(u,v)` is the cell whose northeast corner is the
//! lattice point `(u,v)`, and it carries the integer rank
//! `m*n - u*n - (n+1-v)*m`.  For coprime `m,n` all ranks are distinct; on
//! the non-coprime "modified" (3k,3) grids duplicate ranks are ordered by
//! declaring the more eastern cell slightly larger.

use std::cmp::Ordering;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Upper bound on each grid side, so that rank arithmetic fits i64 with
/// lots of headroom.  Enumeration blows up combinatorially long before this.
pub const MAX_SIDE: u32 = 1 << 20;

/// Which rank order a grid uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridKind {
    /// gcd(m,n) = 1; ranks are distinct integers.
    Coprime,
    /// (3k,3) grid; ties broken east-is-larger, only (tie-broken) positive
    /// ranks may lie above a path.
    Modified,
}

/// Validated dimensions of an (m,n) lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridParams {
    m: u32,
    n: u32,
    kind: GridKind,
}

impl GridParams {
    /// A coprime (m,n) grid.
    pub fn coprime(m: u32, n: u32) -> Result<Self> {
        Self::check_sides(m, n)?;
        if m.gcd(&n) != 1 {
            return Err(Error::InvalidGrid(format!(
                "gcd({m},{n}) != 1; coprime grid required"
            )));
        }
        Ok(GridParams { m, n, kind: GridKind::Coprime })
    }

    /// A modified (3k,3) grid.
    pub fn modified(m: u32, n: u32) -> Result<Self> {
        Self::check_sides(m, n)?;
        if n != 3 || m % 3 != 0 {
            return Err(Error::InvalidGrid(format!(
                "modified grids must be (3k,3); got ({m},{n})"
            )));
        }
        Ok(GridParams { m, n, kind: GridKind::Modified })
    }

    fn check_sides(m: u32, n: u32) -> Result<()> {
        if m < 1 || n < 1 || m > MAX_SIDE || n > MAX_SIDE {
            return Err(Error::InvalidGrid(format!(
                "sides must be in 1..={MAX_SIDE}; got ({m},{n})"
            )));
        }
        Ok(())
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn is_modified(&self) -> bool {
        self.kind == GridKind::Modified
    }

    /// Number of strictly positive ranks of a coprime diagram: (m-1)(n-1)/2.
    pub fn positive_rank_count(&self) -> u64 {
        (self.m as u64 - 1) * (self.n as u64 - 1) / 2
    }
}

/// A cell of the grid, 1-based; `u` is the column, `v` the row (bottom = 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub u: u32,
    pub v: u32,
}

impl Cell {
    pub fn new(u: u32, v: u32) -> Self {
        Cell { u, v }
    }
}

/// The (m,n) lattice together with its rank function and, for modified
/// grids, the east-is-larger total order on cells.
#[derive(Debug, Clone)]
pub struct RankDiagram {
    params: GridParams,
    /// Westernmost column holding a rank-0 cell (modified grids only).
    zero_rank_west_col: Option<u32>,
}

impl RankDiagram {
    pub fn new(params: GridParams) -> Self {
        let zero_rank_west_col = match params.kind {
            GridKind::Coprime => None,
            GridKind::Modified => {
                let mut west = None;
                for v in 1..=params.n {
                    for u in 1..=params.m {
                        if rank_raw(params.m, params.n, u, v) == 0 {
                            west = Some(west.map_or(u, |w: u32| w.min(u)));
                        }
                    }
                }
                west
            }
        };
        RankDiagram { params, zero_rank_west_col }
    }

    pub fn coprime(m: u32, n: u32) -> Result<Self> {
        Ok(Self::new(GridParams::coprime(m, n)?))
    }

    pub fn modified(m: u32, n: u32) -> Result<Self> {
        Ok(Self::new(GridParams::modified(m, n)?))
    }

    pub fn params(&self) -> GridParams {
        self.params
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        let GridParams { m, n, .. } = self.params;
        if cell.u < 1 || cell.u > m || cell.v < 1 || cell.v > n {
            return Err(Error::CellOutOfBounds { u: cell.u, v: cell.v, m, n });
        }
        Ok(())
    }

    /// The rank `m*n - u*n - (n+1-v)*m` of a cell.
    pub fn rank(&self, cell: Cell) -> Result<i64> {
        self.check_cell(cell)?;
        Ok(rank_raw(self.params.m, self.params.n, cell.u, cell.v))
    }

    /// Total order on the cells of a modified diagram: by rank, the more
    /// eastern cell larger on ties.
    pub fn compare_modified(&self, a: Cell, b: Cell) -> Result<Ordering> {
        if !self.params.is_modified() {
            return Err(Error::WrongDiagramKind(
                "compare_modified on a coprime diagram (ranks are distinct)".into(),
            ));
        }
        let ra = self.rank(a)?;
        let rb = self.rank(b)?;
        Ok(ra.cmp(&rb).then(a.u.cmp(&b.u)))
    }

    /// Whether a cell of a modified diagram counts as positive: rank > 0, or
    /// rank 0 with some rank-0 cell strictly to its west (the tie-break makes
    /// it slightly larger than zero).
    pub fn is_positive_modified(&self, cell: Cell) -> Result<bool> {
        if !self.params.is_modified() {
            return Err(Error::WrongDiagramKind(
                "is_positive_modified on a coprime diagram".into(),
            ));
        }
        let r = self.rank(cell)?;
        Ok(match r.cmp(&0) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => self.zero_rank_west_col.is_some_and(|w| w < cell.u),
        })
    }

    /// Positivity under whichever order the grid uses.
    pub(crate) fn is_positive(&self, cell: Cell) -> Result<bool> {
        match self.params.kind {
            GridKind::Coprime => Ok(self.rank(cell)? > 0),
            GridKind::Modified => self.is_positive_modified(cell),
        }
    }

    /// Rank comparison under whichever order the grid uses.  On coprime
    /// grids ranks are distinct, so this never consults the tie-break.
    pub(crate) fn compare(&self, a: Cell, b: Cell) -> Result<Ordering> {
        let ra = self.rank(a)?;
        let rb = self.rank(b)?;
        Ok(match self.params.kind {
            GridKind::Coprime => ra.cmp(&rb),
            GridKind::Modified => ra.cmp(&rb).then(a.u.cmp(&b.u)),
        })
    }

    /// All cells, row-major from the bottom row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let GridParams { m, n, .. } = self.params;
        (1..=n).flat_map(move |v| (1..=m).map(move |u| Cell::new(u, v)))
    }
}

fn rank_raw(m: u32, n: u32, u: u32, v: u32) -> i64 {
    let (m, n, u, v) = (m as i64, n as i64, u as i64, v as i64);
    m * n - u * n - (n + 1 - v) * m
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn rank_worked_values() {
        let d = RankDiagram::coprime(4, 7).unwrap();
        assert_eq!(d.rank(Cell::new(1, 5)).unwrap(), 9);
        assert_eq!(d.rank(Cell::new(4, 3)).unwrap(), -20);
    }

    #[test]
    fn rank_northeast_corner_is_minus_m() {
        for (m, n) in [(4u32, 7u32), (5, 3), (2, 5), (7, 2), (1, 1)] {
            let d = RankDiagram::coprime(m, n).unwrap();
            assert_eq!(d.rank(Cell::new(m, n)).unwrap(), -(m as i64));
        }
    }

    #[test]
    fn rank_out_of_bounds() {
        let d = RankDiagram::coprime(4, 7).unwrap();
        assert!(matches!(
            d.rank(Cell::new(5, 1)),
            Err(Error::CellOutOfBounds { .. })
        ));
        assert!(matches!(
            d.rank(Cell::new(0, 1)),
            Err(Error::CellOutOfBounds { .. })
        ));
    }

    #[test]
    fn grid_validation() {
        assert!(GridParams::coprime(4, 6).is_err());
        assert!(GridParams::coprime(0, 3).is_err());
        assert!(GridParams::modified(6, 3).is_ok());
        assert!(GridParams::modified(7, 3).is_err());
        assert!(GridParams::modified(6, 6).is_err());
    }

    #[test]
    fn coprime_ranks_distinct_small_grids() {
        for m in 1..25u32 {
            for n in 1..25u32 {
                if m + n > 25 || m.gcd(&n) != 1 {
                    continue;
                }
                let d = RankDiagram::coprime(m, n).unwrap();
                let ranks: HashSet<i64> =
                    d.cells().map(|c| d.rank(c).unwrap()).collect();
                assert_eq!(ranks.len(), (m * n) as usize, "({m},{n})");
            }
        }
    }

    #[test]
    fn coprime_positive_rank_count() {
        for m in 1..25u32 {
            for n in 1..25u32 {
                if m + n > 25 || m.gcd(&n) != 1 {
                    continue;
                }
                let d = RankDiagram::coprime(m, n).unwrap();
                let count = d.cells().filter(|&c| d.rank(c).unwrap() > 0).count();
                assert_eq!(count as u64, d.params().positive_rank_count(), "({m},{n})");
            }
        }
    }

    #[test]
    fn modified_tie_break_example() {
        // Both cells of the (6,3) grid hold rank 0; the eastern one wins.
        let d = RankDiagram::modified(6, 3).unwrap();
        let east = Cell::new(4, 3);
        let west = Cell::new(2, 2);
        assert_eq!(d.rank(east).unwrap(), 0);
        assert_eq!(d.rank(west).unwrap(), 0);
        assert_eq!(d.compare_modified(east, west).unwrap(), Ordering::Greater);
        assert_eq!(d.compare_modified(west, east).unwrap(), Ordering::Less);
        assert_eq!(d.compare_modified(west, west).unwrap(), Ordering::Equal);
        assert!(d.is_positive_modified(east).unwrap());
        assert!(!d.is_positive_modified(west).unwrap());
    }

    #[test]
    fn modified_distinct_ranks_compare_plainly() {
        let d = RankDiagram::modified(6, 3).unwrap();
        let a = Cell::new(1, 3); // rank 9
        let b = Cell::new(1, 2); // rank 3
        assert_eq!(d.compare_modified(a, b).unwrap(), Ordering::Greater);
    }

    #[test]
    fn negative_rank_never_positive() {
        let d = RankDiagram::modified(9, 3).unwrap();
        for c in d.cells() {
            if d.rank(c).unwrap() < 0 {
                assert!(!d.is_positive_modified(c).unwrap());
            }
        }
    }

    #[test]
    fn compare_modified_requires_modified_grid() {
        let d = RankDiagram::coprime(5, 3).unwrap();
        assert!(matches!(
            d.compare_modified(Cell::new(1, 1), Cell::new(2, 1)),
            Err(Error::WrongDiagramKind(_))
        ));
    }

    #[test]
    fn modified_order_is_strict_total_order() {
        for m in [6u32, 9] {
            let d = RankDiagram::modified(m, 3).unwrap();
            let cells: Vec<Cell> = d.cells().collect();
            for &a in &cells {
                for &b in &cells {
                    let ab = d.compare_modified(a, b).unwrap();
                    let ba = d.compare_modified(b, a).unwrap();
                    assert_eq!(ab, ba.reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    for &c in &cells {
                        let bc = d.compare_modified(b, c).unwrap();
                        if ab == Ordering::Less && bc == Ordering::Less {
                            assert_eq!(d.compare_modified(a, c).unwrap(), Ordering::Less);
                        }
                    }
                }
            }
        }
    }
}
