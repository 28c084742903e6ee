//! Rectangular label blocks with controlled column sums.
//!
//! Three constructions feed the product labelers:
//! - matrix A (`n` even): entries `1..=nm`, every column sums to `n(nm+1)/2`;
//! - matrices B and C (`n` odd): entries jointly `1..=2nm`, B-columns sum to
//!   `mn^2 - 4m + 2` and C-columns to `mn^2 + 4m + n - 2`, never equal;
//! - odd-by-odd rectangles with entries `1..=nm` and all columns summing to
//!   `n(nm+1)/2` (row sums are unconstrained; no labeler consumes them).

use crate::error::{Error, Result};

/// An `rows x cols` array whose entries permute
/// `offset+1 ..= offset+rows*cols`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectangularArray {
    rows: usize,
    cols: usize,
    offset: usize,
    entries: Vec<usize>,
}

impl RectangularArray {
    /// Validates bijectivity onto the contiguous range before accepting.
    pub fn new(rows: usize, cols: usize, offset: usize, entries: Vec<usize>) -> Result<Self> {
        let count = rows * cols;
        if entries.len() != count {
            return Err(Error::InvalidRectangle(format!(
                "{rows}x{cols} array needs {count} entries, got {}",
                entries.len()
            )));
        }
        let mut seen = vec![false; count];
        for &e in &entries {
            if e <= offset || e > offset + count {
                return Err(Error::InvalidRectangle(format!(
                    "entry {e} outside {}..={}",
                    offset + 1,
                    offset + count
                )));
            }
            if seen[e - offset - 1] {
                return Err(Error::InvalidRectangle(format!("entry {e} repeated")));
            }
            seen[e - offset - 1] = true;
        }
        Ok(RectangularArray {
            rows,
            cols,
            offset,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Entry at row `i`, column `j` (0-based).
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.cols + j]
    }

    /// Column of entries, top to bottom.
    pub fn column(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rows).map(move |i| self.entry(i, j))
    }

    /// The same array with every entry shifted by `k`; each column sum grows
    /// by `rows * k`.
    pub fn shifted(&self, k: usize) -> RectangularArray {
        RectangularArray {
            rows: self.rows,
            cols: self.cols,
            offset: self.offset + k,
            entries: self.entries.iter().map(|e| e + k).collect(),
        }
    }

    pub fn has_equal_column_sums(&self) -> bool {
        let sums = column_sums(self);
        sums.windows(2).all(|w| w[0] == w[1])
    }

    /// Dump format: header `rows cols offset`, then the rows.
    pub fn dump(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.offset);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Exact column sums, left to right.
pub fn column_sums(r: &RectangularArray) -> Vec<u64> {
    (0..r.cols())
        .map(|j| r.column(j).map(|e| e as u64).sum())
        .collect()
}

/// Matrix A: `n` even, rows alternate left-to-right and right-to-left runs of
/// `1..=nm`. Every column sums to `n(nm+1)/2`.
pub fn build_matrix_a(n: usize, m: usize) -> Result<RectangularArray> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidRectangle(format!(
            "matrix A needs an even row count >= 2, got {n}"
        )));
    }
    if m < 1 {
        return Err(Error::InvalidRectangle("matrix A needs at least 1 column".into()));
    }
    let mut entries = Vec::with_capacity(n * m);
    for i in 1..=n {
        for j in 1..=m {
            entries.push(if i % 2 == 1 { (i - 1) * m + j } else { i * m + 1 - j });
        }
    }
    RectangularArray::new(n, m, 0, entries)
}

fn odd_rows_check(name: &str, n: usize, m: usize) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidRectangle(format!(
            "matrix {name} needs an odd row count >= 3, got {n}"
        )));
    }
    if m < 1 {
        return Err(Error::InvalidRectangle(format!(
            "matrix {name} needs at least 1 column"
        )));
    }
    Ok(())
}

/// Matrix B: `n` odd. Together with matrix C of the same shape it permutes
/// `1..=2nm`; each column sums to `mn^2 - 4m + 2`.
pub fn build_matrix_b(n: usize, m: usize) -> Result<RectangularArray> {
    odd_rows_check("B", n, m)?;
    let mut entries = Vec::with_capacity(n * m);
    for i in 1..=n {
        for j in 1..=m {
            entries.push(match i {
                1 => j,
                2 => j + m,
                3 => 4 * m - (2 * j - 2),
                _ if i % 2 == 0 => 6 * m + 2 * j - 1 + 2 * m * (i - 4),
                _ => 2 * i * m - (2 * j - 1),
            });
        }
    }
    let array = RectangularArray {
        rows: n,
        cols: m,
        offset: 0,
        entries,
    };
    debug_assert!(column_sums(&array)
        .iter()
        .all(|&s| s == (m * n * n - 4 * m + 2) as u64));
    Ok(array)
}

/// Matrix C: `n` odd, the complementary half of `1..=2nm`; each column sums
/// to `mn^2 + 4m + n - 2`.
pub fn build_matrix_c(n: usize, m: usize) -> Result<RectangularArray> {
    odd_rows_check("C", n, m)?;
    let mut entries = Vec::with_capacity(n * m);
    for i in 1..=n {
        for j in 1..=m {
            entries.push(match i {
                1 => 4 * m + 1 - 2 * j,
                2 => 4 * m + j,
                3 => 5 * m + j,
                _ if i % 2 == 0 => 6 * m + 2 * j + 2 * m * (i - 4),
                _ => 2 * i * m - (2 * j - 2),
            });
        }
    }
    let array = RectangularArray {
        rows: n,
        cols: m,
        offset: 0,
        entries,
    };
    debug_assert!(column_sums(&array)
        .iter()
        .all(|&s| s == (m * n * n + 4 * m + n - 2) as u64));
    Ok(array)
}

/// Equal-column-sum rectangle for odd `n`, odd `m`: entries permute `1..=nm`
/// and every column sums to `n(nm+1)/2`.
///
/// Built from a 3-row seed (three stacked permutation rows with constant
/// column sums over `1..=3m`) plus `(n-3)/2` complementary row pairs, each
/// pair covering a fresh block of `2m` values with constant pairwise column
/// sums. `n = 1` is permitted but degenerate: the single row `1..=m` has
/// equal column sums only when `m = 1`.
pub fn build_magic_rectangle(n: usize, m: usize) -> Result<RectangularArray> {
    if n % 2 == 0 || m % 2 == 0 {
        return Err(Error::InvalidRectangle(format!(
            "magic rectangle needs odd dimensions, got {n}x{m}"
        )));
    }
    if n == 1 {
        return RectangularArray::new(1, m, 0, (1..=m).collect());
    }
    let half = (m - 1) / 2;
    let mut grid = vec![vec![0usize; m]; n];
    for j in 0..m {
        // Row trio on {1..3m}: j + sigma(j) + tau(j) is the constant 3(m-1)/2
        // over 0-based values, so the three stacked rows share column sums.
        let (sigma, tau) = if j <= half {
            (m - 1 - 2 * j, half + j)
        } else {
            (2 * m - 1 - 2 * j, j - half - 1)
        };
        grid[0][j] = j + 1;
        grid[1][j] = sigma + m + 1;
        grid[2][j] = tau + 2 * m + 1;
    }
    for p in 0..(n - 3) / 2 {
        let lo = 3 * m + 2 * p * m + 1;
        let r = 3 + 2 * p;
        for j in 0..m {
            grid[r][j] = lo + j;
            grid[r + 1][j] = lo + 2 * m - 1 - j;
        }
    }
    let array = RectangularArray::new(n, m, 0, grid.into_iter().flatten().collect())?;
    let target = (n * (n * m + 1) / 2) as u64;
    if column_sums(&array).iter().any(|&s| s != target) {
        return Err(Error::SelfCheck(format!(
            "magic rectangle {n}x{m} produced unequal column sums"
        )));
    }
    Ok(array)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_a_small_examples() {
        let a = build_matrix_a(2, 3).unwrap();
        assert_eq!((0..3).map(|j| a.entry(0, j)).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!((0..3).map(|j| a.entry(1, j)).collect::<Vec<_>>(), vec![6, 5, 4]);
        assert_eq!(column_sums(&a), vec![7, 7, 7]);

        let a = build_matrix_a(4, 3).unwrap();
        assert_eq!(a.column(0).collect::<Vec<_>>(), vec![1, 6, 7, 12]);
        assert_eq!(column_sums(&a)[0], 26);

        let a = build_matrix_a(2, 1).unwrap();
        assert_eq!(a.column(0).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(column_sums(&a), vec![3]);

        assert!(build_matrix_a(3, 2).is_err());
    }

    #[test]
    fn matrices_b_and_c_partition_the_range() {
        let b = build_matrix_b(3, 2).unwrap();
        let c = build_matrix_c(3, 2).unwrap();
        assert_eq!(b.entries, vec![1, 2, 3, 4, 8, 6]);
        assert_eq!(c.entries, vec![7, 5, 9, 10, 11, 12]);
        assert_eq!(column_sums(&b), vec![12, 12]);
        assert_eq!(column_sums(&c), vec![27, 27]);
        let mut all: Vec<usize> = b.entries.iter().chain(&c.entries).copied().collect();
        all.sort_unstable();
        assert_eq!(all, (1..=12).collect::<Vec<_>>());
        assert!(build_matrix_b(4, 2).is_err());
        assert!(build_matrix_c(1, 2).is_err());
    }

    #[test]
    fn magic_rectangle_columns() {
        let r = build_magic_rectangle(3, 3).unwrap();
        assert_eq!(column_sums(&r), vec![15, 15, 15]);
        let r = build_magic_rectangle(3, 5).unwrap();
        assert_eq!(column_sums(&r), vec![24; 5]);
        let r = build_magic_rectangle(1, 4).err().unwrap();
        assert!(matches!(r, Error::InvalidRectangle(_)));
        // Degenerate single row: permitted, columns differ for m > 1.
        let r = build_magic_rectangle(1, 5).unwrap();
        assert!(!r.has_equal_column_sums());
        assert!(build_magic_rectangle(1, 1).unwrap().has_equal_column_sums());
    }

    #[test]
    fn offset_shift_adds_rows_times_k_to_column_sums() {
        let a = build_matrix_a(4, 3).unwrap();
        let shifted = a.shifted(10);
        for (s0, s1) in column_sums(&a).iter().zip(column_sums(&shifted)) {
            assert_eq!(s1, s0 + 40);
        }
        assert_eq!(shifted.offset(), 10);
    }

    #[test]
    fn dump_format_is_stable() {
        let a = build_matrix_a(2, 3).unwrap();
        assert_eq!(a.dump(), "2 3 0\n1 2 3\n6 5 4\n");
    }
}
