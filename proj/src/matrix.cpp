#include "downup/matrix.hpp"

namespace downup {

Matrix::Matrix(const NumberField& field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows * cols), field.zero()) {}

Matrix Matrix::identity(const NumberField& field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix r(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int l = 0; l < a.cols_; ++l) {
      const FieldElement& x = a(i, l);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(l, j).is_zero()) r(i, j) += x * b(l, j);
    }
  return r;
}

Matrix operator*(const FieldElement& s, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.a_) x *= s;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::pow(int e) const {
  Matrix r = identity(field_, rows_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    FieldElement inv = m(row, col).inv();
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      FieldElement f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<FieldElement>> nullspace(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<FieldElement> v(static_cast<size_t>(m.cols()), m.field().zero());
    v[static_cast<size_t>(free)] = m.field().one();
    for (size_t k = 0; k < pivots.size(); ++k) v[static_cast<size_t>(pivots[k])] = -r(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<FieldElement>> joint_kernel(const std::vector<Matrix>& ms) {
  int rows = 0;
  for (const auto& m : ms) rows += m.rows();
  Matrix stacked(ms.front().field(), rows, ms.front().cols());
  int r0 = 0;
  for (const auto& m : ms) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) stacked(r0 + i, j) = m(i, j);
    r0 += m.rows();
  }
  return nullspace(stacked);
}

int span_dim(const std::vector<std::vector<FieldElement>>& vectors, const NumberField& field) {
  if (vectors.empty()) return 0;
  Matrix m(field, static_cast<int>(vectors.size()), static_cast<int>(vectors.front().size()));
  for (size_t i = 0; i < vectors.size(); ++i)
    for (size_t j = 0; j < vectors[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = vectors[i][j];
  return rank(m);
}

std::vector<std::vector<FieldElement>> reduced_basis(const std::vector<std::vector<FieldElement>>& vectors,
                                                     const NumberField& field) {
  if (vectors.empty()) return {};
  const int cols = static_cast<int>(vectors.front().size());
  Matrix m(field, static_cast<int>(vectors.size()), cols);
  for (size_t i = 0; i < vectors.size(); ++i)
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = vectors[i][static_cast<size_t>(j)];
  const size_t r = rref(m).size();
  std::vector<std::vector<FieldElement>> out;
  for (size_t i = 0; i < r; ++i) {
    std::vector<FieldElement> row;
    for (int j = 0; j < cols; ++j) row.push_back(m(static_cast<int>(i), j));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix from_columns(const NumberField& field, int rows,
                    const std::vector<std::vector<FieldElement>>& columns) {
  Matrix m(field, rows, static_cast<int>(columns.size()));
  for (size_t j = 0; j < columns.size(); ++j)
    for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = columns[j][static_cast<size_t>(i)];
  return m;
}

std::vector<FieldElement> apply(const Matrix& m, const std::vector<FieldElement>& v) {
  std::vector<FieldElement> r(static_cast<size_t>(m.rows()), m.field().zero());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[static_cast<size_t>(j)].is_zero()) r[static_cast<size_t>(i)] += m(i, j) * v[static_cast<size_t>(j)];
  return r;
}

KPoly charpoly(const Matrix& a) {
  // Faddeev-LeVerrier (characteristic zero).
  const NumberField& K = a.field();
  const int n = a.rows();
  std::vector<FieldElement> c(static_cast<size_t>(n + 1), K.zero());
  c[static_cast<size_t>(n)] = K.one();
  Matrix m(K, n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    for (int i = 0; i < n; ++i) m(i, i) += c[static_cast<size_t>(n - k + 1)];
    Matrix am = a * m;
    FieldElement tr = K.zero();
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[static_cast<size_t>(n - k)] = -(tr / K.from_int(k));
  }
  return KPoly(K, std::move(c));
}

void EchelonBasis::reduce(std::vector<FieldElement>& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const FieldElement& coef = v[static_cast<size_t>(pivots_[r])];
    if (coef.is_zero()) continue;
    FieldElement f = coef;
    for (int j = pivots_[r]; j < n_; ++j)
      if (!rows_[r][static_cast<size_t>(j)].is_zero()) v[static_cast<size_t>(j)] -= f * rows_[r][static_cast<size_t>(j)];
  }
}

bool EchelonBasis::insert(std::vector<FieldElement> v) {
  reduce(v);
  int piv = -1;
  for (int j = 0; j < n_; ++j)
    if (!v[static_cast<size_t>(j)].is_zero()) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  FieldElement inv = v[static_cast<size_t>(piv)].inv();
  for (int j = piv; j < n_; ++j) v[static_cast<size_t>(j)] *= inv;
  // Keep rows fully reduced against each other so reduce() is one pass.
  for (auto& row : rows_) {
    const FieldElement& coef = row[static_cast<size_t>(piv)];
    if (coef.is_zero()) continue;
    FieldElement f = coef;
    for (int j = piv; j < n_; ++j)
      if (!v[static_cast<size_t>(j)].is_zero()) row[static_cast<size_t>(j)] -= f * v[static_cast<size_t>(j)];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool EchelonBasis::contains(std::vector<FieldElement> v) const {
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace downup
