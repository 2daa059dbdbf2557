use std::fmt;

use crate::error::{Error, Result};

use super::Tropical;

/// A column vector over `R_max,+`.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalVector(Vec<Tropical>);

impl TropicalVector {
    pub fn new(entries: Vec<Tropical>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Shape("vector must have at least one entry".into()));
        }
        Ok(TropicalVector(entries))
    }

    /// Builds a vector from conventional numbers, reading `-∞` as `𝟘`.
    pub fn from_conventional(values: &[f64]) -> Result<Self> {
        let entries = values
            .iter()
            .map(|&v| Tropical::from_conventional(v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Tropical] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Tropical {
        self.0[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = Tropical> + '_ {
        self.0.iter().copied()
    }

    pub fn to_conventional(&self) -> Vec<f64> {
        self.0.iter().map(|x| x.to_f64()).collect()
    }

    pub fn is_all_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    pub fn oplus(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(TropicalVector(
            self.0.iter().zip(&other.0).map(|(&x, &y)| x + y).collect(),
        ))
    }

    pub fn scale(&self, c: Tropical) -> Self {
        TropicalVector(self.0.iter().map(|&x| c * x).collect())
    }

    /// The conjugate `x⁻` with entries `x_i⁻¹`; defined only for vectors
    /// without zero entries. The result is stored as a vector but is meant to
    /// be used as a row.
    pub fn conjugate(&self) -> Result<Self> {
        self.0
            .iter()
            .map(|x| x.inv())
            .collect::<Result<Vec<_>>>()
            .map(TropicalVector)
    }

    /// The row–column product `⊕_i self_i ⊗ other_i`.
    pub fn dot(&self, other: &Self) -> Result<Tropical> {
        self.check_len(other)?;
        Ok(self.0.iter().zip(&other.0).map(|(&x, &y)| x * y).sum())
    }

    /// Component-wise order `self ≤ other`.
    pub fn le(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(x, y)| x <= y))
    }

    /// Returns `c` with `self = c ⊗ other` when the two vectors are collinear
    /// up to `tol`, comparing supports exactly and finite entries by their
    /// differences.
    pub fn collinear_factor(&self, other: &Self, tol: f64) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (&x, &y) in self.0.iter().zip(&other.0) {
            match (x, y) {
                (Tropical::Zero, Tropical::Zero) => {}
                (Tropical::Finite(x), Tropical::Finite(y)) => {
                    lo = lo.min(x - y);
                    hi = hi.max(x - y);
                }
                _ => return None,
            }
        }
        if lo > hi {
            // both vectors are zero
            return Some(0.0);
        }
        (hi - lo <= tol).then_some(0.5 * (lo + hi))
    }

    /// Largest absolute difference between finite entries; infinite if the
    /// supports differ.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&x, &y)| match (x, y) {
                (Tropical::Zero, Tropical::Zero) => 0.0,
                (Tropical::Finite(x), Tropical::Finite(y)) => (x - y).abs(),
                _ => f64::INFINITY,
            })
            .fold(0.0, f64::max)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::Shape(format!(
                "vector lengths differ: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for TropicalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A dense row-major matrix over `R_max,+`.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Tropical>,
}

impl TropicalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Tropical>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(TropicalMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<Tropical>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("rows have different lengths".into()));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    /// Builds a matrix from conventional rows, reading `-∞` as `𝟘`.
    pub fn from_conventional(rows: &[Vec<f64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Tropical::from_conventional(v)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Self::from_rows(&rows)
    }

    /// The zero matrix `𝟘`.
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![Tropical::ZERO; rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, Tropical::ONE);
        }
        Ok(m)
    }

    /// Places columns side by side.
    pub fn from_columns(columns: &[TropicalVector]) -> Result<Self> {
        let rows = columns.first().map_or(0, TropicalVector::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Shape("columns have different lengths".into()));
        }
        let mut m = Self::zeros(rows, columns.len())?;
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Tropical {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Tropical) {
        self.data[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> TropicalVector {
        TropicalVector((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn columns(&self) -> impl Iterator<Item = TropicalVector> + '_ {
        (0..self.cols).map(|j| self.column(j))
    }

    pub fn to_conventional(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_f64()).collect())
            .collect()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = TropicalMatrix {
            rows: self.cols,
            cols: self.rows,
            data: vec![Tropical::ZERO; self.data.len()],
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// `A ⊕ B`.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{} matrices",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(TropicalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&x, &y)| x + y)
                .collect(),
        })
    }

    /// `A ⊗ B`.
    pub fn otimes(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols)?;
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s = (0..self.cols)
                    .map(|k| self.get(i, k) * other.get(k, j))
                    .sum();
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    /// `c ⊗ A`.
    pub fn scale(&self, c: Tropical) -> Self {
        TropicalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| c * x).collect(),
        }
    }

    /// `A ⊗ x`.
    pub fn apply(&self, x: &TropicalVector) -> Result<TropicalVector> {
        if self.cols != x.len() {
            return Err(Error::Shape(format!(
                "cannot apply a {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok(TropicalVector(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self.get(i, j) * x.get(j)).sum())
                .collect(),
        ))
    }

    /// `x⁻ ⊗ A ⊗ y` for a row vector given by its conjugate source `x`.
    pub fn bilinear(&self, x: &TropicalVector, y: &TropicalVector) -> Result<Tropical> {
        if self.rows != x.len() {
            return Err(Error::Shape(format!(
                "row vector of length {} does not conform to {} rows",
                x.len(),
                self.rows
            )));
        }
        x.conjugate()?.dot(&self.apply(y)?)
    }

    /// The form `x⁻ ⊗ A ⊗ x`; `x` must have no zero entries.
    pub fn quadratic_form(&self, x: &TropicalVector) -> Result<Tropical> {
        self.bilinear(x, x)
    }

    /// `Aᵖ`, with `A⁰ = I` for a nonzero square matrix.
    pub fn power(&self, p: u32) -> Result<Self> {
        self.require_square("power")?;
        if p == 0 {
            if self.is_zero_matrix() {
                return Err(Error::Domain(
                    "the zeroth power of the zero matrix is undefined".into(),
                ));
            }
            return Self::identity(self.rows);
        }
        let mut acc = self.clone();
        for _ in 1..p {
            acc = acc.otimes(self)?;
        }
        Ok(acc)
    }

    /// `tr A = a₁₁ ⊕ ⋯ ⊕ aₙₙ`.
    pub fn trace(&self) -> Result<Tropical> {
        self.require_square("trace")?;
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    /// Whether the support digraph (edge `i → j` when `a_ij ≠ 𝟘`) is strongly
    /// connected. A `1×1` matrix counts as irreducible only if its entry is
    /// finite, so that its eigenvalue is finite.
    pub fn is_irreducible(&self) -> Result<bool> {
        self.require_square("irreducibility test")?;
        let n = self.rows;
        if n == 1 {
            return Ok(self.get(0, 0).is_finite());
        }
        let forward = self.reachable_from_first(|i, j| self.get(i, j).is_finite());
        let backward = self.reachable_from_first(|i, j| self.get(j, i).is_finite());
        Ok(forward && backward)
    }

    fn reachable_from_first(&self, edge: impl Fn(usize, usize) -> bool) -> bool {
        let n = self.rows;
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, s) in seen.iter_mut().enumerate() {
                if !*s && edge(i, j) {
                    *s = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Largest absolute difference between entries; infinite if the supports differ.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        TropicalVector(self.data.clone()).max_abs_diff(&TropicalVector(other.data.clone()))
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }
}

impl fmt::Display for TropicalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str(if i == 0 { "[" } else { " " })?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str(if i + 1 == self.rows { "]" } else { "\n" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: f64 = f64::NEG_INFINITY;

    fn m(rows: &[&[f64]]) -> TropicalMatrix {
        TropicalMatrix::from_conventional(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn extended(a: f64, b: f64, c: f64, d: f64) -> TropicalMatrix {
        m(&[&[Z, a, Z], &[b, Z, c], &[Z, d, Z]])
    }

    #[test]
    fn identity_is_neutral() {
        let a = m(&[&[1.0, Z, 3.0], &[-2.0, 0.5, Z], &[4.0, 4.0, -1.0]]);
        let i = TropicalMatrix::identity(3).unwrap();
        assert_eq!(i.otimes(&a).unwrap(), a);
        assert_eq!(a.otimes(&i).unwrap(), a);
        assert_eq!(a.oplus(&a).unwrap(), a);
    }

    #[test]
    fn square_of_extended_matrix() {
        // naive expansion over conventional numbers
        let a = extended(2.0, 0.0, 2.0, 0.0);
        let conv = a.to_conventional();
        let mut expected = vec![vec![Z; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                expected[i][j] = (0..3).map(|k| conv[i][k] + conv[k][j]).fold(Z, f64::max);
            }
        }
        let sq = a.power(2).unwrap();
        assert_eq!(sq.to_conventional(), expected);
        assert_eq!(sq.get(0, 0), Tropical::finite(2.0));
        assert_eq!(sq.get(1, 1), Tropical::finite(2.0));
    }

    #[test]
    fn powers() {
        let a = m(&[&[Z, 1.0], &[1.0, Z]]);
        assert_eq!(a.power(1).unwrap(), a);
        assert_eq!(a.power(0).unwrap(), TropicalMatrix::identity(2).unwrap());
        assert_eq!(a.power(2).unwrap(), m(&[&[2.0, Z], &[Z, 2.0]]));
        assert!(matches!(
            TropicalMatrix::zeros(2, 2).unwrap().power(0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            TropicalMatrix::zeros(2, 3).unwrap().power(2),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn traces() {
        assert_eq!(
            extended(2.0, 0.0, 2.0, 0.0).trace().unwrap(),
            Tropical::ZERO
        );
        assert_eq!(
            TropicalMatrix::identity(4).unwrap().trace().unwrap(),
            Tropical::ONE
        );
        assert_eq!(
            m(&[&[2.0, Z], &[Z, 5.0]]).trace().unwrap(),
            Tropical::finite(5.0)
        );
        assert!(TropicalMatrix::zeros(1, 2).unwrap().trace().is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(extended(1.0, -2.0, 0.5, 3.0).is_irreducible().unwrap());
        assert!(!m(&[&[1.0, Z], &[Z, 2.0]]).is_irreducible().unwrap());
        assert!(!m(&[&[Z, 1.0], &[Z, Z]]).is_irreducible().unwrap());
        assert!(m(&[&[5.0]]).is_irreducible().unwrap());
        assert!(!m(&[&[Z]]).is_irreducible().unwrap());
        // a single directed 3-cycle
        assert!(m(&[&[Z, 1.0, Z], &[Z, Z, 1.0], &[1.0, Z, Z]])
            .is_irreducible()
            .unwrap());
        assert!(TropicalMatrix::zeros(2, 3)
            .unwrap()
            .is_irreducible()
            .is_err());
    }

    #[test]
    fn shape_errors() {
        let a = TropicalMatrix::zeros(2, 3).unwrap();
        let b = TropicalMatrix::zeros(2, 2).unwrap();
        assert!(matches!(a.otimes(&b), Err(Error::Shape(_))));
        assert!(matches!(a.oplus(&b), Err(Error::Shape(_))));
        assert!(b.otimes(&a).is_ok());
        let x = TropicalVector::from_conventional(&[0.0, 0.0, 0.0]).unwrap();
        assert!(matches!(b.apply(&x), Err(Error::Shape(_))));
        assert!(TropicalMatrix::new(2, 2, vec![Tropical::ONE; 3]).is_err());
    }

    #[test]
    fn quadratic_form_of_extended_matrix() {
        // y = (x1, x2, x1⁻¹) gives the four-term objective
        let (a, b, c, d) = (2.0, 0.0, 2.0, 0.0);
        let mat = extended(a, b, c, d);
        let (x1, x2) = (0.3, -1.2);
        let y = TropicalVector::from_conventional(&[x1, x2, -x1]).unwrap();
        let expected = (a - x1 + x2)
            .max(b + x1 - x2)
            .max(c - x1 - x2)
            .max(d + x1 + x2);
        let got = mat.quadratic_form(&y).unwrap().value().unwrap();
        assert!((got - expected).abs() < 1e-12);
    }

    #[test]
    fn conjugate_requires_finite_entries() {
        let x = TropicalVector::new(vec![Tropical::ONE, Tropical::ZERO]).unwrap();
        assert!(x.conjugate().is_err());
    }

    #[test]
    fn collinearity() {
        let g = TropicalVector::from_conventional(&[0.0, -2.0, -3.0]).unwrap();
        let h = g.scale(Tropical::finite(1.5));
        assert_eq!(h.collinear_factor(&g, 1e-9), Some(1.5));
        let k = TropicalVector::from_conventional(&[0.0, -2.0, -2.0]).unwrap();
        assert_eq!(k.collinear_factor(&g, 1e-9), None);
        let z = TropicalVector::from_conventional(&[0.0, Z, 1.0]).unwrap();
        assert_eq!(z.collinear_factor(&g, 1e-9), None);
    }
}
