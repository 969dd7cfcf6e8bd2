use serde::{Serialize, Serializer};

use super::AlexanderError;
use crate::algebra::{determinant, LaurentPoly, Matrix, Rational};

/// A Seifert matrix `A = [lk(κ(x_i), x_j)]` on a basis
/// `(α_1, β_1, …, α_g, β_g)` of `H_1(F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    matrix: Matrix<i64>,
    genus: usize,
}

impl SeifertData {
    /// Checks that `A` is `2g × 2g` with `det(A − Aᵀ) = 1`.
    pub fn new(matrix: Matrix<i64>) -> Result<Self, AlexanderError> {
        if !matrix.is_square() || !matrix.rows().is_multiple_of(2) {
            return Err(AlexanderError::BadSeifertShape {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let form = intersection_form(&matrix);
        let det = determinant(&form.map(|&v| LaurentPoly::from_int(v)));
        if det != LaurentPoly::one() {
            return Err(AlexanderError::NotUnimodular(det.to_string()));
        }
        let genus = matrix.rows() / 2;
        Ok(SeifertData { matrix, genus })
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self, AlexanderError> {
        Self::new(Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()))
    }

    /// Right-handed trefoil `T_{3,2}`: `[[1, 0], [−1, 1]]`.
    pub fn trefoil() -> Self {
        Self::from_rows(&[&[1, 0], &[-1, 1]]).unwrap()
    }

    /// `[[−1, 0], [1, −1]]`.
    pub fn mirror_trefoil() -> Self {
        Self::from_rows(&[&[-1, 0], &[1, -1]]).unwrap()
    }

    /// The square knot: `[[1, 0], [−1, 1]] ⊕ [[−1, 0], [1, −1]]`.
    pub fn square_knot() -> Self {
        SeifertData::new(
            Self::trefoil()
                .matrix
                .direct_sum(&Self::mirror_trefoil().matrix),
        )
        .unwrap()
    }

    /// Genus zero; its module is trivial.
    pub fn unknot() -> Self {
        SeifertData {
            matrix: Matrix::empty(),
            genus: 0,
        }
    }

    pub fn matrix(&self) -> &Matrix<i64> {
        &self.matrix
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn intersection_form(&self) -> Matrix<i64> {
        intersection_form(&self.matrix)
    }

    /// Connected sum: block direct sum of Seifert matrices.
    pub fn connected_sum(&self, other: &SeifertData) -> SeifertData {
        SeifertData {
            matrix: self.matrix.direct_sum(&other.matrix),
            genus: self.genus + other.genus,
        }
    }
}

fn intersection_form(a: &Matrix<i64>) -> Matrix<i64> {
    Matrix::from_fn(a.rows(), a.cols(), |i, j| a[(i, j)] - a[(j, i)])
}

/// A module presentation over `ℚ[t^{±1}]`: one relation per row, one
/// generator per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    matrix: Matrix<LaurentPoly>,
}

impl ModulePresentation {
    pub fn new(matrix: Matrix<LaurentPoly>) -> Self {
        ModulePresentation { matrix }
    }

    /// No generators and no relations: the trivial module.
    pub fn trivial() -> Self {
        Self::new(Matrix::empty())
    }

    pub fn matrix(&self) -> &Matrix<LaurentPoly> {
        &self.matrix
    }

    pub fn generators(&self) -> usize {
        self.matrix.cols()
    }

    /// Generator of the order ideal: the gcd of the maximal minors,
    /// normalized up to units `c·t^k`. Zero when there are fewer relations
    /// than generators.
    pub fn order_ideal(&self) -> LaurentPoly {
        let (r, c) = (self.matrix.rows(), self.matrix.cols());
        if c == 0 {
            return LaurentPoly::one();
        }
        if r < c {
            return LaurentPoly::zero();
        }
        if r == c {
            return determinant(&self.matrix);
        }
        let mut g = LaurentPoly::zero();
        for rows in combinations(r, c) {
            let minor = Matrix::from_fn(c, c, |i, j| self.matrix[(rows[i], j)].clone());
            g = g.gcd(&determinant(&minor));
        }
        g
    }

    /// `self ⊕ other`.
    pub fn direct_sum(&self, other: &ModulePresentation) -> ModulePresentation {
        Self::new(self.matrix.direct_sum(&other.matrix))
    }

    /// Every entry under `t ↦ t^w`.
    pub fn substitute_power(&self, w: i64) -> Result<ModulePresentation, AlexanderError> {
        Ok(Self::new(self.matrix.try_map(|p| p.substitute_power(w))?))
    }

    /// Entries as canonical Laurent-polynomial strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.matrix
            .iter_rows()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl Serialize for ModulePresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `tA − Aᵀ`, the relations of the Alexander module on the dual generators.
pub fn presentation_matrix(s: &SeifertData) -> ModulePresentation {
    let a = s.matrix();
    ModulePresentation::new(Matrix::from_fn(a.rows(), a.cols(), |i, j| {
        &LaurentPoly::t().scale(&Rational::from_integer(a[(i, j)].into()))
            - &LaurentPoly::from_int(a[(j, i)])
    }))
}

/// The satellite module `pattern ⊕ companion[t ↦ t^w]`.
pub fn litherland_sum(
    pattern: &ModulePresentation,
    companion: &ModulePresentation,
    w: i64,
) -> Result<ModulePresentation, AlexanderError> {
    if w == 0 {
        return Err(AlexanderError::ZeroWinding);
    }
    Ok(pattern.direct_sum(&companion.substitute_power(w)?))
}
