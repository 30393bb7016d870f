#include "downup/ext.hpp"

#include <functional>

namespace downup {

namespace {

// Matrix whose column k is the flattened image of the k-th unit input under a
// linear map from (rows x cols matrices)^inputs.
Matrix linear_map_matrix(const NumberField& K, int rows, int cols, int inputs,
                         const std::function<std::vector<Matrix>(const std::vector<Matrix>&)>& f) {
  const int vars = inputs * rows * cols;
  std::vector<std::vector<FieldElement>> columns;
  for (int k = 0; k < vars; ++k) {
    std::vector<Matrix> in(static_cast<size_t>(inputs), Matrix(K, rows, cols));
    const int which = k / (rows * cols), idx = k % (rows * cols);
    in[static_cast<size_t>(which)](idx / cols, idx % cols) = K.one();
    std::vector<FieldElement> col;
    for (const Matrix& out : f(in))
      for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) col.push_back(out(i, j));
    columns.push_back(std::move(col));
  }
  if (columns.empty()) return Matrix(K, 0, 0);
  return from_columns(K, static_cast<int>(columns.front().size()), columns);
}

std::vector<Matrix> coboundary(const FDModule& m, const FDModule& n, const Matrix& psi) {
  return {m.D * psi - psi * n.D, m.U * psi - psi * n.U};
}

Matrix coboundary_matrix(const FDModule& m, const FDModule& n) {
  return linear_map_matrix(m.params.field(), m.dim, n.dim, 1,
                           [&](const std::vector<Matrix>& in) { return coboundary(m, n, in[0]); });
}

}  // namespace

int hom_dim(const FDModule& m, const FDModule& n) {
  require_same(m.params, n.params);
  if (m.dim == 0 || n.dim == 0) return 0;
  Matrix sys = linear_map_matrix(m.params.field(), n.dim, m.dim, 1, [&](const std::vector<Matrix>& in) {
    const Matrix& phi = in[0];
    return std::vector<Matrix>{phi * m.D - n.D * phi, phi * m.U - n.U * phi};
  });
  return n.dim * m.dim - rank(sys);
}

Ext1Data ext1_data(const FDModule& m, const FDModule& n) {
  require_same(m.params, n.params);
  if (m.dim == 0 || n.dim == 0) return {0, 0};
  const Params& p = m.params;
  const Matrix &Dm = m.D, &Um = m.U, &Dn = n.D, &Un = n.U;
  // Upper-right blocks of the two relations for the block-triangular pair.
  Matrix cocycle = linear_map_matrix(p.field(), m.dim, n.dim, 2, [&](const std::vector<Matrix>& in) {
    const Matrix &F = in[0], &G = in[1];
    Matrix r1 = Dm * Dm * G + Dm * F * Un + F * Dn * Un -
                p.alpha() * (Dm * Um * F + Dm * G * Dn + F * Un * Dn) -
                p.beta() * (Um * Dm * F + Um * F * Dn + G * Dn * Dn) - p.gamma() * F;
    Matrix r2 = Dm * Um * G + Dm * G * Un + F * Un * Un -
                p.alpha() * (Um * Dm * G + Um * F * Un + G * Dn * Un) -
                p.beta() * (Um * Um * F + Um * G * Dn + G * Un * Dn) - p.gamma() * G;
    return std::vector<Matrix>{r1, r2};
  });
  const int vars = 2 * m.dim * n.dim;
  return {vars - rank(cocycle), rank(coboundary_matrix(m, n))};
}

int ext1_dim(const FDModule& m, const FDModule& n) { return ext1_data(m, n).dim(); }

bool is_coboundary(const FDModule& m, const FDModule& n, const Matrix& F, const Matrix& G) {
  require_same(m.params, n.params);
  Matrix B = coboundary_matrix(m, n);
  Matrix aug(B.field(), B.rows(), B.cols() + 1);
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) aug(i, j) = B(i, j);
  int row = 0;
  for (const Matrix* blk : {&F, &G})
    for (int i = 0; i < blk->rows(); ++i)
      for (int j = 0; j < blk->cols(); ++j) aug(row++, B.cols()) = (*blk)(i, j);
  return rank(B) == rank(aug);
}

ProbeReport semisimplicity_probe(const Params& p, int dim_bound) {
  ProbeReport rep{{}, {}, dim_bound, true, std::nullopt};
  std::vector<FDModule> modules;
  for (int n = 1; n <= dim_bound; ++n) {
    SimplesOfDim s = simples_of_dim(p, n);
    if (s.all_lambda) rep.complete = false;
    for (const auto& lambda : s.weights) {
      rep.simples.push_back({n, lambda});
      modules.push_back(simple_module(p, lambda, n));
    }
  }
  for (size_t i = 0; i < modules.size(); ++i)
    for (size_t j = 0; j < modules.size(); ++j) {
      int e = ext1_dim(modules[i], modules[j]);
      if (e != 0) rep.pairs.push_back({static_cast<int>(i), static_cast<int>(j), e});
    }
  if (p.type() == AlgebraType::d) {
    rep.verdict = semisimplicity_verdict(p);
    if (rep.verdict->answer == SemisimpleAnswer::Semisimple && !rep.pairs.empty())
      throw Error(ErrorKind::InternalConsistency, "nonsplit extension found although the verdict is semisimple");
  }
  return rep;
}

}  // namespace downup
