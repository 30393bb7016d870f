#pragma once

#include <vector>

#include "downup/field.hpp"
#include "downup/kpoly.hpp"

namespace downup {

// Dense matrix over a number field, row-major.
class Matrix {
 public:
  Matrix(const NumberField& field, int rows, int cols);
  static Matrix identity(const NumberField& field, int n);

  const NumberField& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldElement& operator()(int i, int j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
  const FieldElement& operator()(int i, int j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElement& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix transpose() const;
  bool is_zero() const;
  Matrix pow(int e) const;

 private:
  NumberField field_;
  int rows_, cols_;
  std::vector<FieldElement> a_;
};

// Exact Gaussian elimination with first-nonzero pivoting.
int rank(Matrix m);
// Basis of {v : m v = 0}, each vector of length m.cols().
std::vector<std::vector<FieldElement>> nullspace(const Matrix& m);
// Basis of the intersection of the kernels of the given matrices (same cols).
std::vector<std::vector<FieldElement>> joint_kernel(const std::vector<Matrix>& ms);
// Dimension of the span of the given vectors.
int span_dim(const std::vector<std::vector<FieldElement>>& vectors, const NumberField& field);
// Reduced row echelon basis of the span of the given vectors.
std::vector<std::vector<FieldElement>> reduced_basis(const std::vector<std::vector<FieldElement>>& vectors,
                                                     const NumberField& field);
Matrix from_columns(const NumberField& field, int rows,
                    const std::vector<std::vector<FieldElement>>& columns);
std::vector<FieldElement> apply(const Matrix& m, const std::vector<FieldElement>& v);
KPoly charpoly(const Matrix& m);

// Incremental row-echelon basis of a subspace of K^n.
class EchelonBasis {
 public:
  EchelonBasis(const NumberField& field, int n) : field_(field), n_(n) {}
  // Adds v if it is independent of the current span; returns whether it was.
  bool insert(std::vector<FieldElement> v);
  bool contains(std::vector<FieldElement> v) const;
  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(std::vector<FieldElement>& v) const;
  NumberField field_;
  int n_;
  std::vector<std::vector<FieldElement>> rows_;
  std::vector<int> pivots_;
};

}  // namespace downup
