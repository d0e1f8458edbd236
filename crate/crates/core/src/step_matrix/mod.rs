//! Step matrices T_{k,λ}: the twists t at which λ + ρ - tλ_k meets a wall,
//! written down entry by entry from closed formulas.
//!
//! For k < n the matrix is split into blocks P (k×(n-k)), Q (k×(n-k)) and
//! an upper-triangular R (k×k). For k = n it is a single upper-triangular
//! n×n matrix T. Positions below (or, for type D, on) the diagonal of the
//! triangular parts carry no entry and are stored as `None`.

mod render;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{FlagSpace, HalfInt, LieType, WeightFW};

pub use render::{latex_matrix_body, plain_matrix, render, Format, StepMatrixJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Block {
    P,
    Q,
    R,
    T,
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Block::P => "P",
            Block::Q => "Q",
            Block::R => "R",
            Block::T => "T",
        };
        f.write_str(s)
    }
}

/// Position of an entry; `i` and `j` are one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EntryPos {
    pub block: Block,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for EntryPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.block, self.i, self.j)
    }
}

/// Dense row-major matrix whose cells may be structurally absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    cells: Vec<Option<HalfInt>>,
}

impl Matrix {
    fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<Option<HalfInt>>,
    ) -> Result<Self> {
        let mut cells = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                cells.push(f(i, j)?);
            }
        }
        Ok(Matrix { rows, cols, cells })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// One-based lookup.
    pub fn get(&self, i: usize, j: usize) -> Option<HalfInt> {
        if i == 0 || j == 0 || i > self.rows || j > self.cols {
            return None;
        }
        self.cells[(i - 1) * self.cols + (j - 1)]
    }

    pub fn to_rows(&self) -> Vec<Vec<Option<HalfInt>>> {
        self.cells
            .chunks(self.cols.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    /// Present entries with their one-based positions, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, HalfInt)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter_map(move |(idx, c)| c.map(|v| (idx / self.cols + 1, idx % self.cols + 1, v)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Layout {
    Blocks { p: Matrix, q: Matrix, r: Matrix },
    Triangular { t: Matrix },
}

/// The step matrix of an initialized weight on a flag space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepMatrix {
    space: FlagSpace,
    /// Coefficients as seen from the effective marked node.
    lambda: WeightFW,
    layout: Layout,
    max: HalfInt,
}

impl StepMatrix {
    pub fn space(&self) -> FlagSpace {
        self.space
    }

    pub fn lambda(&self) -> &WeightFW {
        &self.lambda
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    /// The closed-form maximum M_{k,λ}.
    pub fn max(&self) -> HalfInt {
        self.max
    }

    /// Every present entry in canonical order (P, Q, R row-major, or T).
    pub fn entries(&self) -> Vec<(EntryPos, HalfInt)> {
        let tag = |block: Block, m: &Matrix| {
            m.entries()
                .map(move |(i, j, v)| (EntryPos { block, i, j }, v))
                .collect::<Vec<_>>()
        };
        match &self.layout {
            Layout::Blocks { p, q, r } => {
                let mut all = tag(Block::P, p);
                all.extend(tag(Block::Q, q));
                all.extend(tag(Block::R, r));
                all
            }
            Layout::Triangular { t } => tag(Block::T, t),
        }
    }

    pub fn get(&self, pos: EntryPos) -> Option<HalfInt> {
        match (&self.layout, pos.block) {
            (Layout::Blocks { p, .. }, Block::P) => p.get(pos.i, pos.j),
            (Layout::Blocks { q, .. }, Block::Q) => q.get(pos.i, pos.j),
            (Layout::Blocks { r, .. }, Block::R) => r.get(pos.i, pos.j),
            (Layout::Triangular { t }, Block::T) => t.get(pos.i, pos.j),
            _ => None,
        }
    }

    /// Largest stored entry.
    pub fn max_entry(&self) -> Option<HalfInt> {
        self.entries().into_iter().map(|(_, v)| v).max()
    }

    /// Integer-valued entries with multiplicity, sorted ascending.
    pub fn integer_entries(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .entries()
            .into_iter()
            .filter_map(|(_, v)| v.to_integer())
            .collect();
        out.sort_unstable();
        out
    }
}

/// Validates `lambda` (dominant off the marked node, a_k = 0) and returns it
/// in effective coordinates.
fn prepare(space: &FlagSpace, lambda: &WeightFW) -> Result<WeightFW> {
    space.check_dominant_off_node(lambda)?;
    space.check_initialized(lambda)?;
    Ok(space.to_effective(lambda))
}

fn half(doubled: i128) -> Result<Option<HalfInt>> {
    i64::try_from(doubled)
        .map(|d| Some(HalfInt::from_doubled(d)))
        .map_err(|_| Error::Overflow("step matrix entry"))
}

/// Σ_{u=lo}^{hi} a_u in i128, one-based and inclusive.
fn s(a: &WeightFW, lo: usize, hi: usize) -> i128 {
    if lo > hi {
        return 0;
    }
    a.coeffs()[lo - 1..hi].iter().map(|&x| x as i128).sum()
}

/// Builds T_{k,λ}. `lambda` is given relative to the requested marked node
/// and must be initialized and dominant off that node.
pub fn build(space: &FlagSpace, lambda: &WeightFW) -> Result<StepMatrix> {
    let a = prepare(space, lambda)?;
    let max = closed_form_max(space, &a)?;
    let layout = if space.k() < space.n() {
        build_blocks(space, &a)?
    } else {
        build_triangular(space, &a)?
    };
    Ok(StepMatrix {
        space: *space,
        lambda: a,
        layout,
        max,
    })
}

fn build_blocks(space: &FlagSpace, a: &WeightFW) -> Result<Layout> {
    let n = space.n();
    let k = space.k();
    let (ni, ki) = (n as i128, k as i128);
    let two_e = space.lie_type().two_e() as i128;
    let an = a.a(n) as i128;
    let is_d = space.lie_type() == LieType::D;

    let p = Matrix::from_fn(k, n - k, |i, j| {
        let (ii, jj) = (i as i128, j as i128);
        half(2 * (s(a, 1 + k - i, k + j - 1) + jj + ii - 1))
    })?;

    let q = Matrix::from_fn(k, n - k, |i, j| {
        let (ii, jj) = (i as i128, j as i128);
        let v = if is_d {
            s(a, k + 1 - i, n - 2) + s(a, n + 1 - j, n) + ni - ki + jj + ii - 2
        } else {
            s(a, k + 1 - i, n - 1) + s(a, n + 1 - j, n - 1) + two_e * an + ni - ki + jj + ii - 2
                + two_e
        };
        half(2 * v)
    })?;

    let r = Matrix::from_fn(k, k, |i, j| {
        let (ii, jj) = (i as i128, j as i128);
        if is_d {
            if i >= j {
                return Ok(None);
            }
            half(2 * (ni - ki - 1) + s(a, 1 + k - i, n - 2) + s(a, 1 + k - j, n) + jj + ii)
        } else {
            if i > j {
                return Ok(None);
            }
            half(
                2 * (ni - ki - 1)
                    + two_e
                    + s(a, 1 + k - i, n - 1)
                    + s(a, 1 + k - j, n - 1)
                    + two_e * an
                    + jj
                    + ii,
            )
        }
    })?;

    Ok(Layout::Blocks { p, q, r })
}

fn build_triangular(space: &FlagSpace, a: &WeightFW) -> Result<Layout> {
    let n = space.n();
    let two_e = space.lie_type().two_e() as i128;
    let an = a.a(n) as i128;
    let t = match space.lie_type() {
        LieType::B | LieType::C => Matrix::from_fn(n, n, |i, j| {
            if i > j {
                return Ok(None);
            }
            let inner =
                s(a, n + 1 - i, n - 1) + s(a, n + 1 - j, n - 1) + two_e * an + (i + j) as i128 - 2
                    + two_e;
            // value = inner / 2e, stored doubled
            half(2 * inner / two_e)
        })?,
        LieType::D => Matrix::from_fn(n, n, |i, j| {
            if i >= j {
                return Ok(None);
            }
            half(2 * (s(a, n + 1 - i, n) + s(a, n + 1 - j, n - 2) + (i + j) as i128 - 2))
        })?,
    };
    Ok(Layout::Triangular { t })
}

/// M_{k,λ} from its closed formula, for `a` already in effective
/// coordinates with a_k = 0.
fn closed_form_max(space: &FlagSpace, a: &WeightFW) -> Result<HalfInt> {
    let n = space.n();
    let k = space.k();
    let (ni, ki) = (n as i128, k as i128);
    let two_e = space.lie_type().two_e() as i128;
    let an = a.a(n) as i128;
    let doubled = match (space.lie_type(), k < n) {
        (LieType::B | LieType::C, true) => {
            2 * (s(a, 1, n - 1) + s(a, k + 1, n - 1) + two_e * an + 2 * ni - ki - 2 + two_e)
        }
        (LieType::D, true) => 2 * (s(a, 1, n) + s(a, k + 1, n - 2) + 2 * ni - ki - 2),
        (LieType::B | LieType::C, false) => {
            2 * (2 * s(a, 1, n - 1) + two_e * an + 2 * ni - 2 + two_e) / two_e
        }
        (LieType::D, false) => 2 * (s(a, 1, n) + s(a, 2, n - 2) + 2 * ni - 3),
    };
    Ok(half(doubled)?.expect("present"))
}

/// The closed-form maximum entry M_{k,λ}, without building the matrix.
pub fn max_entry_closed_form(space: &FlagSpace, lambda: &WeightFW) -> Result<HalfInt> {
    let a = prepare(space, lambda)?;
    closed_form_max(space, &a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(t: LieType, n: usize, k: usize) -> FlagSpace {
        FlagSpace::new(t, n, k).unwrap()
    }

    fn w(v: &[i64]) -> WeightFW {
        WeightFW::new(v.to_vec())
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Option<HalfInt>>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Some(HalfInt::from_int(x))).collect())
            .collect()
    }

    #[test]
    fn p_block_shapes() {
        let sm = build(&space(LieType::C, 6, 2), &WeightFW::zero(6)).unwrap();
        let Layout::Blocks { p, q, r } = sm.layout() else {
            panic!("expected blocks")
        };
        assert_eq!((p.rows(), p.cols()), (2, 4));
        assert_eq!((q.rows(), q.cols()), (2, 4));
        assert_eq!((r.rows(), r.cols()), (2, 2));
        assert_eq!(r.get(2, 1), None);
    }

    #[test]
    fn c3_k1_lambda2() {
        let sm = build(&space(LieType::C, 3, 1), &w(&[0, 1, 0])).unwrap();
        assert_eq!(sm.integer_entries(), vec![1, 3, 4, 5, 7]);
        assert_eq!(sm.max(), HalfInt::from_int(7));
        assert_eq!(
            max_entry_closed_form(&space(LieType::C, 3, 1), &w(&[0, 1, 0])).unwrap(),
            HalfInt::from_int(7)
        );
    }

    #[test]
    fn zero_weight_type_b_max() {
        for n in 2..=7 {
            for k in 1..n {
                let m =
                    max_entry_closed_form(&space(LieType::B, n, k), &WeightFW::zero(n)).unwrap();
                assert_eq!(m, HalfInt::from_int((2 * n - k - 1) as i64));
            }
        }
    }

    #[test]
    fn zero_weight_contains_one() {
        for g in crate::lie::groups_up_to(6) {
            for sp in FlagSpace::all_in(g) {
                let sm = build(&sp, &WeightFW::zero(sp.n())).unwrap();
                assert!(sm.integer_entries().contains(&1), "{sp}");
            }
        }
    }

    #[test]
    fn d_k_equals_n_structure() {
        let sm = build(&space(LieType::D, 4, 4), &WeightFW::zero(4)).unwrap();
        let Layout::Triangular { t } = sm.layout() else {
            panic!()
        };
        assert!((1..=4).all(|i| t.get(i, 1).is_none() && t.get(4, i).is_none()));
        assert_eq!(t.get(1, 2), Some(HalfInt::from_int(1)));
        assert_eq!(sm.entries().len(), 6);
    }

    #[test]
    fn c_k_equals_n_has_half_integers() {
        let sm = build(&space(LieType::C, 3, 3), &w(&[1, 0, 0])).unwrap();
        let Layout::Triangular { t } = sm.layout() else {
            panic!()
        };
        // t_{12} = ½(a_2 + 2a_3 + 1 + 2) with a = (1,0,0) → 3/2
        assert_eq!(t.get(1, 2), Some(HalfInt::from_doubled(3)));
        assert_eq!(t.get(1, 1), Some(HalfInt::from_int(1)));
    }

    #[test]
    fn golden_b5_k3_mu() {
        let sm = build(&space(LieType::B, 5, 3), &w(&[4, 4, 0, 0, 0])).unwrap();
        let Layout::Blocks { p, q, r } = sm.layout() else {
            panic!()
        };
        assert_eq!(p.to_rows(), ints(&[&[1, 2], &[6, 7], &[11, 12]]));
        assert_eq!(q.to_rows(), ints(&[&[3, 4], &[8, 9], &[13, 14]]));
        let h = |d| Some(HalfInt::from_doubled(d));
        assert_eq!(
            r.to_rows(),
            vec![
                vec![h(5), h(10), h(15)],
                vec![None, h(15), h(20)],
                vec![None, None, h(25)],
            ]
        );
        assert_eq!(sm.max(), HalfInt::from_int(14));
    }

    #[test]
    fn rejects_non_initialized_and_non_dominant() {
        let sp = space(LieType::B, 3, 2);
        assert!(matches!(
            build(&sp, &w(&[0, 1, 0])),
            Err(Error::NotInitialized { .. })
        ));
        assert!(matches!(
            build(&sp, &w(&[-1, 0, 0])),
            Err(Error::NotDominant { .. })
        ));
        assert!(matches!(
            build(&sp, &w(&[0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn remapped_d_space_uses_swapped_coefficients() {
        let folded = space(LieType::D, 5, 4);
        let direct = space(LieType::D, 5, 5);
        let a = build(&folded, &w(&[1, 0, 2, 0, 3])).unwrap();
        let b = build(&direct, &w(&[1, 0, 2, 3, 0])).unwrap();
        assert_eq!(a.layout(), b.layout());
        assert_eq!(a.max(), b.max());
    }
}
