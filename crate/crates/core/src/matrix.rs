use std::collections::HashSet;
use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// A dense square matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix<T> {
    size: usize,
    entries: Vec<T>,
}

impl<T: Clone> SquareMatrix<T> {
    pub fn filled(size: usize, value: T) -> Self {
        SquareMatrix {
            size,
            entries: vec![value; size * size],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::Dimension {
                    rows: size,
                    cols: row.len(),
                    labels: size,
                });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { size, entries })
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { size, entries }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.size, |i, j| self[(j, i)].clone())
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.size).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    /// Reindexes through `map`: entry `(i, j)` of the result is `self[(map[i], map[j])]`.
    pub fn pullback(&self, map: &[usize]) -> Self {
        Self::from_fn(map.len(), |i, j| self[(map[i], map[j])].clone())
    }
}

impl<T> SquareMatrix<T> {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn iter_indexed(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        let n = self.size;
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, v)| ((k / n, k % n), v))
    }
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.size && j < self.size, "index ({i}, {j}) out of range");
        &self.entries[i * self.size + j]
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.size && j < self.size, "index ({i}, {j}) out of range");
        &mut self.entries[i * self.size + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.size {
            list.entry(&&self.entries[i * self.size..(i + 1) * self.size]);
        }
        list.finish()
    }
}

impl<T: fmt::Display> fmt::Display for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.size {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.size {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[i * self.size + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Checks that `labels` are pairwise distinct and match the matrix size.
pub(crate) fn check_labels(labels: &[String], size: usize) -> Result<()> {
    if labels.len() != size {
        return Err(Error::Dimension {
            rows: size,
            cols: size,
            labels: labels.len(),
        });
    }
    let mut seen = HashSet::with_capacity(labels.len());
    for label in labels {
        if !seen.insert(label.as_str()) {
            return Err(Error::DuplicateLabel(label.clone()));
        }
    }
    Ok(())
}

pub(crate) fn position(labels: &[String], label: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_and_pullback() {
        let m = SquareMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.transpose().to_rows(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(m.pullback(&[1, 0]).to_rows(), vec![vec![4, 3], vec![2, 1]]);
        assert_eq!(m.pullback(&[0, 0]).to_rows(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(SquareMatrix::from_rows(vec![vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn duplicate_labels_rejected() {
        let labels = vec!["a".to_string(), "a".to_string()];
        assert_eq!(
            check_labels(&labels, 2),
            Err(Error::DuplicateLabel("a".into()))
        );
    }
}
