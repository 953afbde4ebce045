//! Rational Dyck paths and their q,t-statistics.
//!
//! A path on the (m,n) grid is stored as its above-path cell counts
//! `a_1..a_n`, bottom row first.  The counts are weakly increasing (the
//! above-region is a Ferrers diagram) and every above cell must be positive:
//! strictly positive rank on coprime grids, tie-broken positive on modified
//! (3k,3) grids.
//!
//! Two routes compute the Dinv set: the definitional arm/leg sandwich
//! ([`dinv_slow`]) and the rank-comparison characterization ([`dinv_fast`]).
//! They agree cell for cell on coprime grids; only the fast route is defined
//! on modified grids, where the comparisons use the east-is-larger order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{Cell, GridKind, GridParams, RankDiagram};
use crate::qtpoly::QtPoly;

/// A validated (m,n)-Dyck path; modified-ness comes from the grid kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    params: GridParams,
    counts: Vec<u32>,
}

/// The Area/Dinv/Skips partition of the positive cells of a path's diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStats {
    /// Positive cells below the path.
    pub area_set: Vec<Cell>,
    /// Above cells satisfying the dinv condition.
    pub dinv_set: Vec<Cell>,
    /// Above cells that fail it.
    pub skips_set: Vec<Cell>,
}

impl PathStats {
    pub fn area(&self) -> u32 {
        self.area_set.len() as u32
    }

    pub fn dinv(&self) -> u32 {
        self.dinv_set.len() as u32
    }

    pub fn skips(&self) -> u32 {
        self.skips_set.len() as u32
    }
}

/// Shape class of an (m,3)-path, per the above-count pair (k, l) of its top
/// two rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathType {
    T0,
    T1,
    T2a,
    T2b,
    T3a,
    T3b,
}

impl PathType {
    pub const ALL: [PathType; 6] = [
        PathType::T0,
        PathType::T1,
        PathType::T2a,
        PathType::T2b,
        PathType::T3a,
        PathType::T3b,
    ];
}

impl fmt::Display for PathType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PathType::T0 => "0",
            PathType::T1 => "1",
            PathType::T2a => "2a",
            PathType::T2b => "2b",
            PathType::T3a => "3a",
            PathType::T3b => "3b",
        };
        f.write_str(s)
    }
}

/// An (m,3)-path's type together with its (k, l) above-count pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathClass {
    pub path_type: PathType,
    pub k: u32,
    pub ell: u32,
}

/// The four auxiliary cells (with ranks) the fast dinv test compares for one
/// above cell, and the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DinvWitness {
    /// Easternmost above cell in the row, and its rank.
    pub east: (Cell, i64),
    /// The cell just east of `east` (below the path).
    pub past_east: (Cell, i64),
    /// Southernmost above cell in the column.
    pub south: (Cell, i64),
    /// The cell just south of `south` (below the path).
    pub past_south: (Cell, i64),
    pub in_dinv: bool,
}

impl DyckPath {
    /// Validate above-path counts into a path.
    pub fn from_counts(params: GridParams, counts: Vec<u32>) -> Result<Self> {
        let (m, n) = (params.m(), params.n());
        if counts.len() != n as usize {
            return Err(Error::InvalidPath(format!(
                "expected {n} counts, got {}",
                counts.len()
            )));
        }
        let diagram = RankDiagram::new(params);
        for v in 1..=n {
            let a = counts[v as usize - 1];
            if a > m {
                return Err(Error::InvalidPath(format!(
                    "row {v} has {a} above cells on a width-{m} grid"
                )));
            }
            if v > 1 && a < counts[v as usize - 2] {
                return Err(Error::InvalidPath(
                    "above counts must be weakly increasing bottom-to-top".into(),
                ));
            }
            // Ranks decrease going east, so the easternmost above cell is the
            // binding one for positivity.
            if a >= 1 && !diagram.is_positive(Cell::new(a, v))? {
                return Err(Error::InvalidPath(format!(
                    "cell ({a},{v}) above the path is not positive"
                )));
            }
        }
        Ok(DyckPath { params, counts })
    }

    /// The (m,3)-path with `k` above cells in the top row and `ell` in the
    /// middle row.
    pub fn m3(m: u32, k: u32, ell: u32) -> Result<Self> {
        DyckPath::from_counts(GridParams::coprime(m, 3)?, vec![0, ell, k])
    }

    /// Parse a path literal: comma-separated above counts bottom-to-top
    /// ("0,1,2") or an NE step string ("NENENEEE").
    pub fn parse(params: GridParams, literal: &str) -> Result<Self> {
        let s = literal.trim();
        if s.chars().all(|c| matches!(c, 'N' | 'E')) && s.contains('N') {
            return Self::from_steps(params, s);
        }
        let counts = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPath(format!("bad count `{part}` in `{literal}`")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::from_counts(params, counts)
    }

    fn from_steps(params: GridParams, steps: &str) -> Result<Self> {
        let (m, n) = (params.m() as usize, params.n() as usize);
        if steps.len() != m + n {
            return Err(Error::InvalidPath(format!(
                "step string must have {} letters for a ({},{}) grid",
                m + n,
                params.m(),
                params.n()
            )));
        }
        let mut counts = Vec::with_capacity(n);
        let mut x = 0u32;
        for c in steps.chars() {
            match c {
                'E' => x += 1,
                'N' => counts.push(x),
                _ => unreachable!(),
            }
        }
        if counts.len() != n {
            return Err(Error::InvalidPath(format!(
                "step string must contain exactly {n} N steps"
            )));
        }
        Self::from_counts(params, counts)
    }

    /// Render as an NE step string from (0,0) to (m,n).
    pub fn to_steps(&self) -> String {
        let mut out = String::new();
        let mut x = 0;
        for &a in &self.counts {
            for _ in x..a {
                out.push('E');
            }
            out.push('N');
            x = a;
        }
        for _ in x..self.params.m() {
            out.push('E');
        }
        out
    }

    pub fn params(&self) -> GridParams {
        self.params
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn is_modified(&self) -> bool {
        self.params.is_modified()
    }

    pub fn counts_string(&self) -> String {
        self.counts
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn diagram(&self) -> RankDiagram {
        RankDiagram::new(self.params)
    }

    /// Whether a cell lies above the path.
    pub fn is_above(&self, cell: Cell) -> bool {
        cell.v >= 1
            && cell.v <= self.params.n()
            && cell.u >= 1
            && cell.u <= self.counts[cell.v as usize - 1]
    }

    /// Above cells, row-major from the bottom row.
    pub fn above_cells(&self) -> Vec<Cell> {
        let mut cells = Vec::new();
        for (i, &a) in self.counts.iter().enumerate() {
            for u in 1..=a {
                cells.push(Cell::new(u, i as u32 + 1));
            }
        }
        cells
    }

    /// The cell of row v whose west edge lies on the path: (a_v + 1, v).
    pub fn on_path_cell(&self, v: u32) -> Cell {
        Cell::new(self.counts[v as usize - 1] + 1, v)
    }

    pub fn on_path_cells(&self) -> Vec<Cell> {
        (1..=self.params.n()).map(|v| self.on_path_cell(v)).collect()
    }

    /// Ranks of the on-path cells, bottom-to-top.
    pub fn ranks_on_path(&self) -> Vec<i64> {
        let diagram = self.diagram();
        self.on_path_cells()
            .into_iter()
            .map(|c| diagram.rank(c).expect("on-path cell in grid"))
            .collect()
    }

    /// Number of above cells strictly east of `cell` in its row.
    pub fn arm(&self, cell: Cell) -> Result<u32> {
        self.check_above(cell)?;
        Ok(self.counts[cell.v as usize - 1] - cell.u)
    }

    /// Number of above cells strictly south of `cell` in its column.
    pub fn leg(&self, cell: Cell) -> Result<u32> {
        self.check_above(cell)?;
        Ok(self
            .counts
            .iter()
            .take(cell.v as usize - 1)
            .filter(|&&a| a >= cell.u)
            .count() as u32)
    }

    fn check_above(&self, cell: Cell) -> Result<()> {
        if !self.is_above(cell) {
            return Err(Error::InvalidPath(format!(
                "cell ({},{}) is not above the path",
                cell.u, cell.v
            )));
        }
        Ok(())
    }

    /// Area/Dinv/Skips via the fast characterization (any grid kind).
    pub fn stats(&self) -> PathStats {
        dinv_fast(self)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.counts_string())
    }
}

/// All (m,n)-Dyck paths in ascending lexicographic order of above counts.
pub fn enumerate_paths(params: GridParams) -> Vec<DyckPath> {
    let n = params.n() as usize;
    let bounds = row_bounds(params);
    let mut out = Vec::new();
    let mut counts = vec![0u32; n];
    fn rec(
        params: GridParams,
        bounds: &[u32],
        counts: &mut Vec<u32>,
        row: usize,
        out: &mut Vec<DyckPath>,
    ) {
        if row == counts.len() {
            out.push(DyckPath {
                params,
                counts: counts.clone(),
            });
            return;
        }
        let lo = if row == 0 { 0 } else { counts[row - 1] };
        for a in lo..=bounds[row] {
            counts[row] = a;
            rec(params, bounds, counts, row + 1, out);
        }
        counts[row] = lo;
    }
    rec(params, &bounds, &mut counts, 0, &mut out);
    out
}

/// Exact number of (m,n)-Dyck paths without enumerating them.
pub fn path_count(params: GridParams) -> BigInt {
    let n = params.n() as usize;
    let bounds = row_bounds(params);
    // Count weakly increasing vectors under the per-row bounds by a running
    // prefix-sum table over the value of a_row.
    let width = bounds[n - 1] as usize + 1;
    let mut ways = vec![BigInt::from(0); width];
    for a in 0..=bounds[0] as usize {
        ways[a] = BigInt::from(1);
    }
    for row in 1..n {
        let mut next = vec![BigInt::from(0); width];
        let mut prefix = BigInt::from(0);
        for a in 0..width {
            prefix += &ways[a];
            if a <= bounds[row] as usize {
                next[a] = prefix.clone();
            }
        }
        ways = next;
    }
    ways.iter().sum()
}

/// Largest admissible above count per row.
fn row_bounds(params: GridParams) -> Vec<u32> {
    let (m, n) = (params.m(), params.n());
    let diagram = RankDiagram::new(params);
    (1..=n)
        .map(|v| match params.kind() {
            // Positive ranks in row v occupy columns u with u*n < m*(v-1).
            GridKind::Coprime => ((m as u64 * (v as u64 - 1)) / n as u64) as u32,
            // Positivity is a column prefix of each row; scan for its end.
            GridKind::Modified => {
                let mut bound = 0;
                for u in 1..=m {
                    if diagram.is_positive_modified(Cell::new(u, v)).unwrap() {
                        bound = u;
                    } else {
                        break;
                    }
                }
                bound
            }
        })
        .collect()
}

/// The definitional dinv: an above cell counts iff
/// `arm/(leg+1) < m/n < (arm+1)/leg`, with division by zero read as
/// infinity.  Coprime paths only.
pub fn dinv_slow(path: &DyckPath) -> Result<PathStats> {
    if path.is_modified() {
        return Err(Error::Unsupported(
            "arm/leg dinv is only defined on coprime grids; use dinv_fast".into(),
        ));
    }
    let (m, n) = (path.params.m() as u64, path.params.n() as u64);
    let mut dinv_set = Vec::new();
    let mut skips_set = Vec::new();
    for cell in path.above_cells() {
        let arm = path.arm(cell)? as u64;
        let leg = path.leg(cell)? as u64;
        let lower = arm * n < m * (leg + 1);
        let upper = leg == 0 || m * leg < n * (arm + 1);
        if lower && upper {
            dinv_set.push(cell);
        } else {
            skips_set.push(cell);
        }
    }
    Ok(PathStats {
        area_set: area_set(path),
        dinv_set,
        skips_set,
    })
}

/// The rank-comparison dinv.  Works on both grid kinds; modified grids use
/// the east-is-larger order in place of plain rank comparison.
pub fn dinv_fast(path: &DyckPath) -> PathStats {
    let diagram = path.diagram();
    let mut dinv_set = Vec::new();
    let mut skips_set = Vec::new();
    for cell in path.above_cells() {
        let w = witness(path, &diagram, cell);
        if w.in_dinv {
            dinv_set.push(cell);
        } else {
            skips_set.push(cell);
        }
    }
    PathStats {
        area_set: area_set(path),
        dinv_set,
        skips_set,
    }
}

/// The four cells and ranks the fast test consults for one above cell.
pub fn dinv_fast_witness(path: &DyckPath, cell: Cell) -> Result<DinvWitness> {
    path.check_above(cell)?;
    Ok(witness(path, &path.diagram(), cell))
}

fn witness(path: &DyckPath, diagram: &RankDiagram, cell: Cell) -> DinvWitness {
    let a_row = path.counts[cell.v as usize - 1];
    let east = Cell::new(a_row, cell.v);
    let past_east = Cell::new(a_row + 1, cell.v);
    // Bottom row never holds above cells, so the scan ends by row 2.
    let south_row = (1..=cell.v)
        .find(|&v| path.counts[v as usize - 1] >= cell.u)
        .expect("cell is above the path");
    let south = Cell::new(cell.u, south_row);
    let past_south = Cell::new(cell.u, south_row - 1);
    let gt = |a: Cell, b: Cell| diagram.compare(a, b).expect("cells in grid") == Ordering::Greater;
    let in_dinv = gt(east, past_south) && gt(south, past_east);
    let rank = |c: Cell| diagram.rank(c).expect("cells in grid");
    DinvWitness {
        east: (east, rank(east)),
        past_east: (past_east, rank(past_east)),
        south: (south, rank(south)),
        past_south: (past_south, rank(past_south)),
        in_dinv,
    }
}

fn area_set(path: &DyckPath) -> Vec<Cell> {
    let diagram = path.diagram();
    diagram
        .cells()
        .filter(|&c| !path.is_above(c) && diagram.is_positive(c).expect("cell in grid"))
        .collect()
}

/// Generating function `sum q^dinv t^area` over all paths of the grid.
pub fn catalan_polynomial(params: GridParams) -> QtPoly {
    let mut out = QtPoly::zero();
    for path in enumerate_paths(params) {
        let stats = dinv_fast(&path);
        out.add_term(stats.dinv(), stats.area(), 1);
    }
    out
}

/// Classify an (m,3)-path into its type, with its (k, l) pair.
pub fn classify(path: &DyckPath) -> Result<PathClass> {
    let (m, n) = (path.params.m(), path.params.n());
    if n != 3 || path.is_modified() {
        return Err(Error::Unsupported(format!(
            "path types are defined for coprime (m,3) grids; got ({m},{n})"
        )));
    }
    let ell = path.counts[1];
    let k = path.counts[2];
    let path_type = match (k, ell) {
        (0, 0) => PathType::T0,
        (k, ell) if ell == k && 3 * k < m => PathType::T1,
        (k, 0) if 3 * k < m => PathType::T2a,
        (k, 0) if 3 * k > m => PathType::T2b,
        (k, ell) if 0 < ell && ell < k && 3 * k < m => PathType::T3a,
        (k, ell) if 0 < ell && 3 * k > m => PathType::T3b,
        _ => {
            return Err(Error::InvariantViolation(format!(
                "({m},3)-path with (k,l)=({k},{ell}) matches no type"
            )))
        }
    };
    Ok(PathClass { path_type, k, ell })
}

/// Carry a modified (3k,3)-path to the (3k+1,3)-path with the same above
/// counts.  The image always has rank 1 below its path, and the rank order
/// of the two diagrams agrees, so dinv carries over exactly while area grows
/// by one (the rank-0 cell that did not count becomes the rank-1 cell that
/// does).
pub fn lift_3k_to_3k1(path: &DyckPath) -> Result<DyckPath> {
    if !path.is_modified() {
        return Err(Error::Unsupported(
            "lift_3k_to_3k1 takes a modified (3k,3) path".into(),
        ));
    }
    let m = path.params.m();
    let target = GridParams::coprime(m + 1, 3)?;
    let image = DyckPath::from_counts(target, path.counts.to_vec()).map_err(|e| {
        Error::InvariantViolation(format!("lift of {} is not a valid path: {e}", path))
    })?;
    // Rank 1 of the (3k+1,3) diagram sits at (k,2); "below the path" is the
    // complement of "above".
    let k = m / 3;
    if image.is_above(Cell::new(k, 2)) {
        return Err(Error::InvariantViolation(format!(
            "lift of {path} has rank 1 above the path"
        )));
    }
    Ok(image)
}

/// Inverse direction of the distinct-column correspondence: an (m,n)-path
/// whose on-path cells sit in pairwise distinct columns maps to the
/// (m-n,n)-path holding the same above-cell ranks (row v shifts west by
/// v-1 columns).
pub fn drop_distinct_column_path(path: &DyckPath) -> Result<DyckPath> {
    let (m, n) = (path.params.m(), path.params.n());
    if path.is_modified() {
        return Err(Error::Unsupported(
            "distinct-column drop takes a coprime path".into(),
        ));
    }
    if m <= n {
        return Err(Error::Unsupported(format!(
            "distinct-column drop needs m > n; got ({m},{n})"
        )));
    }
    // Distinct on-path columns <=> strictly increasing above counts.
    for v in 1..n as usize {
        if path.counts[v] <= path.counts[v - 1] {
            return Err(Error::Unsupported(format!(
                "on-path cells of rows {} and {} share a column",
                v,
                v + 1
            )));
        }
    }
    let target = GridParams::coprime(m - n, n)?;
    let counts = path
        .counts
        .iter()
        .enumerate()
        .map(|(i, &a)| a - i as u32)
        .collect::<Vec<u32>>();
    DyckPath::from_counts(target, counts)
        .map_err(|e| Error::InvariantViolation(format!("drop of {path} is invalid: {e}")))
}

/// Remove one above cell from each of rows 2 and 3 of an (m,3)-path with
/// l >= 1, landing on the (m-2,3) grid (modified when 3 | m-2).  Area is
/// preserved; dinv falls by 2 on type 3b and by 1 otherwise.
pub fn shrink_m3(path: &DyckPath) -> Result<DyckPath> {
    let class = classify(path)?;
    if class.ell == 0 {
        return Err(Error::Unsupported(
            "shrink_m3 needs at least one above cell in row 2".into(),
        ));
    }
    let m = path.params.m() - 2;
    let target = if m % 3 == 0 {
        GridParams::modified(m, 3)?
    } else {
        GridParams::coprime(m, 3)?
    };
    DyckPath::from_counts(target, vec![0, class.ell - 1, class.k - 1])
        .map_err(|e| Error::InvariantViolation(format!("shrink of {path} is invalid: {e}")))
}
