#include "dynr/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

namespace dynr {

namespace {

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

constexpr double kStructTol = 1e-12;

/// Null-space basis of M at relative singular-value cutoff.
Mat nullspace(const Mat& M, double cutoff = 1e-10) {
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double scale = sv.size() ? sv(0) : 0.0;
  int null_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= cutoff * (1.0 + scale)) ++null_dim;
  return svd.matrixV().rightCols(null_dim);
}

}  // namespace

double StructuralResiduals::max() const {
  return std::max({antisymmetry, jacobi, form_invariance});
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels,
                       std::vector<Mat> adjoint_basis, Mat gram)
    : dim_(static_cast<int>(adjoint_basis.size())),
      labels_(std::move(labels)),
      ad_(std::move(adjoint_basis)),
      gram_(std::move(gram)) {
  if (dim_ <= 0) throw ConstructionError("LieAlgebra: empty basis");
  if (labels_.empty()) {
    for (int i = 0; i < dim_; ++i) labels_.push_back("u" + std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != dim_ || gram_.rows() != dim_ ||
      gram_.cols() != dim_)
    throw ConstructionError("LieAlgebra: inconsistent dimensions");
  for (const Mat& a : ad_)
    if (a.rows() != dim_ || a.cols() != dim_)
      throw ConstructionError("LieAlgebra: bad adjoint matrix shape");

  // antisymmetry c[i][j][k] = -c[j][i][k]
  double anti = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        anti = std::max(anti,
                        std::abs(structure_constant(i, j, k) +
                                 structure_constant(j, i, k)));
  residuals_.antisymmetry = anti;

  // Jacobi: ad[u_i] ad[u_j] - ad[u_j] ad[u_i] = ad[[u_i,u_j]]
  double jac = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      Mat lhs = ad_[i] * ad_[j] - ad_[j] * ad_[i];
      Mat rhs = Mat::Zero(dim_, dim_);
      for (int k = 0; k < dim_; ++k) rhs += structure_constant(i, j, k) * ad_[k];
      jac = std::max(jac, max_abs(Mat(lhs - rhs)));
    }
  residuals_.jacobi = jac;

  if (max_abs(Mat(gram_ - gram_.transpose())) > kStructTol)
    throw ConstructionError("LieAlgebra: gram matrix not symmetric");

  double inv = 0.0;
  for (int i = 0; i < dim_; ++i)
    inv = std::max(inv, max_abs(Mat(ad_[i].transpose() * gram_ + gram_ * ad_[i])));
  residuals_.form_invariance = inv;

  Eigen::JacobiSVD<Mat> svd(gram_);
  const auto& sv = svd.singularValues();
  double smin = sv(sv.size() - 1), smax = sv(0);
  if (smin <= 1e-12 * smax)
    throw ConstructionError("LieAlgebra: gram matrix is singular");
  residuals_.gram_condition = smax / smin;
  gram_inv_ = gram_.inverse();

  if (residuals_.max() > kStructTol)
    throw ConstructionError("LieAlgebra: structural residual " +
                            std::to_string(residuals_.max()) +
                            " exceeds 1e-12");
}

Mat LieAlgebra::adjoint(const Vec& x) const {
  Mat a = Mat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x(i) != cplx(0)) a += x(i) * ad_[i];
  return a;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  return adjoint(x) * y;
}

cplx RootDatum::pairing(const Root& alpha, const Vec& lambda) const {
  cplx v = 0;
  for (int k = 0; k < rank(); ++k) v += lambda(cartan_indices[k]) * alpha.on_cartan(k);
  return v;
}

// ---------------------------------------------------------------------------
// sl_n in a Chevalley-style basis, trace form of the defining representation.

RootedAlgebra build_sl(int n) {
  if (n < 2) throw ConstructionError("build_sl: n must be >= 2");
  const int N = n, dim = n * n - 1, rank = n - 1;

  struct BasisEl {
    Eigen::MatrixXcd m;
    std::string label;
  };
  std::vector<BasisEl> basis;
  auto unit = [N](int i, int j) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
    m(i, j) = 1.0;
    return m;
  };
  for (int i = 0; i < rank; ++i)
    basis.push_back({unit(i, i) - unit(i + 1, i + 1), "h" + std::to_string(i + 1)});

  // positive roots eps_i - eps_j (i<j), ordered by height j-i then lexicographically
  std::vector<std::pair<int, int>> pos;
  for (int h = 1; h < N; ++h)
    for (int i = 0; i + h < N; ++i) pos.emplace_back(i, i + h);
  for (auto [i, j] : pos)
    basis.push_back({unit(i, j),
                     "e" + std::to_string(i + 1) + std::to_string(j + 1)});
  for (auto [i, j] : pos)
    basis.push_back({unit(j, i),
                     "f" + std::to_string(i + 1) + std::to_string(j + 1)});

  // expansion of an N x N traceless matrix in the basis
  Eigen::MatrixXcd flat(N * N, dim);
  for (int a = 0; a < dim; ++a)
    flat.col(a) = Eigen::Map<const Eigen::VectorXcd>(basis[a].m.data(), N * N);
  Eigen::ColPivHouseholderQR<Mat> qr(flat);
  auto expand = [&](const Eigen::MatrixXcd& m) {
    Vec c = qr.solve(Eigen::Map<const Eigen::VectorXcd>(m.data(), N * N));
    for (auto& v : c.reshaped())
      if (std::abs(v) < 1e-13) v = 0.0;
    return c;
  };

  std::vector<Mat> ad(dim, Mat::Zero(dim, dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec c = expand(basis[i].m * basis[j].m - basis[j].m * basis[i].m);
      for (int k = 0; k < dim; ++k) ad[i](k, j) = c(k);
    }
  Mat gram(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      gram(a, b) = (basis[a].m * basis[b].m).trace();

  std::vector<std::string> labels;
  for (auto& b : basis) labels.push_back(b.label);
  auto alg = std::make_shared<const LieAlgebra>(labels, std::move(ad), gram);

  RootDatum rd;
  for (int i = 0; i < rank; ++i) rd.cartan_indices.push_back(i);
  Mat cartan = Mat::Zero(dim, rank);
  for (int i = 0; i < rank; ++i) cartan(i, i) = 1.0;
  rd.cartan_orthonormal = bilinear_orthonormalize(cartan, gram);

  const int npos = static_cast<int>(pos.size());
  for (int p = 0; p < npos; ++p) {
    auto [i, j] = pos[p];
    Root r;
    r.on_cartan = Vec::Zero(rank);
    for (int k = 0; k < rank; ++k) {
      auto d = [&](int idx) { return (k == idx ? 1.0 : 0.0) - (k + 1 == idx ? 1.0 : 0.0); };
      r.on_cartan(k) = d(i) - d(j);
    }
    r.vector_index = rank + p;
    r.negative_index = rank + npos + p;
    r.positive = true;
    rd.roots.push_back(r);
    Root neg = r;
    neg.on_cartan = -r.on_cartan;
    neg.vector_index = r.negative_index;
    neg.negative_index = r.vector_index;
    neg.positive = false;
    rd.roots.push_back(neg);
  }
  return {alg, rd};
}

AlgebraPtr direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int da = a.dim(), db = b.dim(), dim = da + db;
  std::vector<Mat> ad(dim, Mat::Zero(dim, dim));
  for (int i = 0; i < da; ++i) ad[i].topLeftCorner(da, da) = a.adjoint_basis(i);
  for (int i = 0; i < db; ++i)
    ad[da + i].bottomRightCorner(db, db) = b.adjoint_basis(i);
  Mat gram = Mat::Zero(dim, dim);
  gram.topLeftCorner(da, da) = a.gram();
  gram.bottomRightCorner(db, db) = b.gram();
  std::vector<std::string> labels;
  for (auto& s : a.labels()) labels.push_back(s + "'");
  for (auto& s : b.labels()) labels.push_back(s + "''");
  return std::make_shared<const LieAlgebra>(labels, std::move(ad), gram);
}

AlgebraPtr induced_algebra(const LieAlgebra& parent, const Mat& basis,
                           std::vector<std::string> labels) {
  const int k = static_cast<int>(basis.cols());
  Eigen::ColPivHouseholderQR<Mat> qr(basis);
  std::vector<Mat> ad(k, Mat::Zero(k, k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec br = parent.bracket(basis.col(i), basis.col(j));
      Vec c = qr.solve(br);
      if (max_abs(Vec(basis * c - br)) > 1e-10)
        throw ConstructionError("induced_algebra: subspace not closed under bracket");
      for (int m = 0; m < k; ++m) ad[i](m, j) = std::abs(c(m)) < 1e-13 ? 0.0 : c(m);
    }
  Mat gram = basis.transpose() * parent.gram() * basis;
  return std::make_shared<const LieAlgebra>(std::move(labels), std::move(ad), gram);
}

Subalgebra levi_subalgebra(const RootedAlgebra& g,
                           const std::vector<int>& simple_root_subset) {
  const RootDatum& rd = g.roots;
  const int rank = rd.rank(), dim = g.algebra->dim();

  // simple roots = positive roots of height 1, in construction order
  std::vector<int> simple;
  for (int ri = 0; ri < static_cast<int>(rd.roots.size()); ++ri) {
    if (!rd.roots[ri].positive) continue;
    if (static_cast<int>(simple.size()) < rank) simple.push_back(ri);
  }
  for (int s : simple_root_subset)
    if (s < 0 || s >= rank)
      throw ConstructionError("levi_subalgebra: simple root index out of range");

  Mat S(rank, rank);
  for (int a = 0; a < rank; ++a) S.col(a) = rd.roots[simple[a]].on_cartan;
  Eigen::FullPivLU<Mat> lu(S);

  std::vector<bool> in_subset(rank, false);
  for (int s : simple_root_subset) in_subset[s] = true;

  // a root belongs to the Levi iff its simple-root support lies in the subset
  auto in_levi = [&](const Root& r) {
    Vec m = lu.solve(r.on_cartan);
    for (int a = 0; a < rank; ++a)
      if (std::abs(m(a)) > 1e-8 && !in_subset[a]) return false;
    return true;
  };

  std::vector<int> pos_in, neg_in, out;
  for (const Root& r : rd.roots) {
    if (!r.positive) continue;
    if (in_levi(r)) {
      pos_in.push_back(r.vector_index);
      neg_in.push_back(r.negative_index);
    } else {
      out.push_back(r.vector_index);
      out.push_back(r.negative_index);
    }
  }

  std::vector<int> members = rd.cartan_indices;
  members.insert(members.end(), pos_in.begin(), pos_in.end());
  members.insert(members.end(), neg_in.begin(), neg_in.end());

  const int dl = static_cast<int>(members.size());
  Mat incl = Mat::Zero(dim, dl);
  std::vector<std::string> labels;
  for (int c = 0; c < dl; ++c) {
    incl(members[c], c) = 1.0;
    labels.push_back(g.algebra->labels()[members[c]]);
  }
  Mat comp = Mat::Zero(dim, static_cast<int>(out.size()));
  for (int c = 0; c < static_cast<int>(out.size()); ++c) comp(out[c], c) = 1.0;

  Subalgebra sub;
  sub.parent = g.algebra;
  sub.inclusion = incl;
  sub.complement = comp;
  sub.algebra = induced_algebra(*g.algebra, incl, labels);

  RootDatum lrd;
  for (int i = 0; i < rank; ++i) lrd.cartan_indices.push_back(i);
  Mat cartan = Mat::Zero(dl, rank);
  for (int i = 0; i < rank; ++i) cartan(i, i) = 1.0;
  lrd.cartan_orthonormal = bilinear_orthonormalize(cartan, sub.algebra->gram());
  const int npos = static_cast<int>(pos_in.size());
  for (int p = 0; p < npos; ++p) {
    // locate the parent root whose vector index is pos_in[p]
    for (const Root& r : rd.roots) {
      if (r.vector_index != pos_in[p]) continue;
      Root lr = r;
      lr.vector_index = rank + p;
      lr.negative_index = rank + npos + p;
      lrd.roots.push_back(lr);
      Root ln = lr;
      ln.on_cartan = -lr.on_cartan;
      ln.vector_index = lr.negative_index;
      ln.negative_index = lr.vector_index;
      ln.positive = false;
      lrd.roots.push_back(ln);
      break;
    }
  }
  sub.roots = std::move(lrd);
  return sub;
}

Automorphism cyclic_automorphism(const LieAlgebra& g, int copies) {
  const int dim = g.dim();
  if (copies < 1 || dim % copies != 0)
    throw ConstructionError("cyclic_automorphism: dimension not divisible by copy count");
  const int bd = dim / copies;
  Mat B = Mat::Zero(dim, dim);
  for (int p = 0; p < copies; ++p)
    for (int a = 0; a < bd; ++a) B(((p + 1) % copies) * bd + a, p * bd + a) = 1.0;

  if (bracket_preservation_residual(g, B) > 1e-12 ||
      max_abs(Mat(B.transpose() * g.gram() * B - g.gram())) > 1e-12)
    throw ConstructionError("cyclic_automorphism: blocks are not identical summands");

  Automorphism aut;
  aut.matrix = B;
  aut.order = copies;
  int total = 0;
  for (int j = 0; j < copies; ++j) {
    cplx om = std::exp(cplx(0, 2.0 * std::numbers::pi * j / copies));
    Mat basis = nullspace(Mat(B - om * Mat::Identity(dim, dim)));
    total += static_cast<int>(basis.cols());
    aut.eigenspaces.push_back(std::move(basis));
  }
  if (total != dim)
    throw ConstructionError("cyclic_automorphism: eigenspace dimensions do not sum to dim");
  return aut;
}

Subalgebra diagonal_subalgebra(AlgebraPtr sum, const RootedAlgebra& summand,
                               int copies) {
  const int bd = summand.algebra->dim(), dim = sum->dim();
  if (dim != bd * copies)
    throw ConstructionError("diagonal_subalgebra: dimension mismatch");
  const double s = 1.0 / std::sqrt(static_cast<double>(copies));
  Mat incl = Mat::Zero(dim, bd);
  for (int a = 0; a < bd; ++a)
    for (int p = 0; p < copies; ++p) incl(p * bd + a, a) = s;

  Subalgebra sub;
  sub.parent = sum;
  sub.inclusion = incl;
  std::vector<std::string> labels;
  for (auto& l : summand.algebra->labels()) labels.push_back(l + "_diag");
  sub.algebra = induced_algebra(*sum, incl, labels);

  // complement: orthogonal to the diagonal w.r.t. the form; spanned by
  // (block p) - (block p+1) embeddings
  Mat comp = Mat::Zero(dim, dim - bd);
  int c = 0;
  for (int p = 0; p + 1 < copies; ++p)
    for (int a = 0; a < bd; ++a, ++c) {
      comp(p * bd + a, c) = s;
      comp((p + 1) * bd + a, c) = -s;
    }

  sub.complement = comp;

  RootDatum rd = summand.roots;
  for (Root& r : rd.roots) r.on_cartan *= s;  // [h/sqrt(n), e/sqrt(n)] scaling
  Mat cartan = Mat::Zero(bd, rd.rank());
  for (int i = 0; i < rd.rank(); ++i) cartan(rd.cartan_indices[i], i) = 1.0;
  rd.cartan_orthonormal = bilinear_orthonormalize(cartan, sub.algebra->gram());
  sub.roots = std::move(rd);
  return sub;
}

Subalgebra full_subalgebra(const RootedAlgebra& g) {
  Subalgebra sub;
  sub.parent = g.algebra;
  sub.inclusion = Mat::Identity(g.algebra->dim(), g.algebra->dim());
  sub.complement = Mat::Zero(g.algebra->dim(), 0);
  sub.algebra = g.algebra;
  sub.roots = g.roots;
  return sub;
}

Subalgebra cartan_subalgebra(const RootedAlgebra& g) {
  const int dim = g.algebra->dim(), rank = g.roots.rank();
  Mat incl = Mat::Zero(dim, rank);
  std::vector<std::string> labels;
  for (int i = 0; i < rank; ++i) {
    incl(g.roots.cartan_indices[i], i) = 1.0;
    labels.push_back(g.algebra->labels()[g.roots.cartan_indices[i]]);
  }
  Mat comp = Mat::Zero(dim, dim - rank);
  int c = 0;
  for (int a = 0; a < dim; ++a) {
    if (std::find(g.roots.cartan_indices.begin(), g.roots.cartan_indices.end(),
                  a) != g.roots.cartan_indices.end())
      continue;
    comp(a, c++) = 1.0;
  }
  Subalgebra sub;
  sub.parent = g.algebra;
  sub.inclusion = incl;
  sub.complement = comp;
  sub.algebra = induced_algebra(*g.algebra, incl, labels);
  RootDatum rd;
  for (int i = 0; i < rank; ++i) rd.cartan_indices.push_back(i);
  Mat cartan = Mat::Identity(rank, rank);
  rd.cartan_orthonormal = bilinear_orthonormalize(cartan, sub.algebra->gram());
  sub.roots = std::move(rd);
  return sub;
}

Mat bilinear_orthonormalize(const Mat& vectors, const Mat& form) {
  std::vector<Vec> remaining;
  for (int c = 0; c < vectors.cols(); ++c) remaining.push_back(vectors.col(c));
  std::vector<Vec> out;
  const double scale = max_abs(form) + 1.0;
  auto q = [&](const Vec& a, const Vec& b) { return cplx(a.transpose() * form * b); };

  int guard = 0;
  while (!remaining.empty()) {
    if (++guard > 4 * static_cast<int>(vectors.cols()) + 16)
      throw ConstructionError("bilinear_orthonormalize: no anisotropic pivot found");
    bool advanced = false;
    for (size_t i = 0; i < remaining.size(); ++i) {
      Vec w = remaining[i];
      for (const Vec& u : out) w -= q(w, u) * u;
      if (std::abs(q(w, w)) > 1e-8 * scale) {
        out.push_back(w / std::sqrt(q(w, w)));
        remaining.erase(remaining.begin() + i);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      // All remaining vectors are isotropic after projection. Mix a pair that
      // pairs nontrivially (e.g. opposite root vectors) to create a pivot.
      std::vector<Vec> proj;
      for (const Vec& v : remaining) {
        Vec w = v;
        for (const Vec& u : out) w -= q(w, u) * u;
        proj.push_back(std::move(w));
      }
      bool mixed = false;
      for (size_t i = 0; i < proj.size() && !mixed; ++i)
        for (size_t j = i + 1; j < proj.size() && !mixed; ++j)
          if (std::abs(q(proj[i], proj[j])) > 1e-8 * scale) {
            remaining[i] += remaining[j];
            mixed = true;
          }
      if (!mixed)
        throw ConstructionError("bilinear_orthonormalize: isotropic residue");
    }
  }
  Mat X(vectors.rows(), static_cast<int>(out.size()));
  for (size_t i = 0; i < out.size(); ++i) X.col(static_cast<int>(i)) = out[i];
  return X;
}

Mat orthonormal_basis_via_casimir(const LieAlgebra& l, const Mat& omega) {
  Eigen::FullPivLU<Mat> lu(omega);
  if (!lu.isInvertible())
    throw ConstructionError("orthonormal_basis_via_casimir: not factorizable");
  Mat form = lu.inverse();
  return bilinear_orthonormalize(Mat::Identity(l.dim(), l.dim()), form);
}

double bracket_preservation_residual(const LieAlgebra& g, const Mat& B) {
  double res = 0.0;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      Vec lhs = B * g.bracket(Vec(Mat::Identity(g.dim(), g.dim()).col(i)),
                              Vec(Mat::Identity(g.dim(), g.dim()).col(j)));
      Vec rhs = g.bracket(Vec(B.col(i)), Vec(B.col(j)));
      res = std::max(res, max_abs(Vec(lhs - rhs)));
    }
  return res;
}

double subalgebra_closure_residual(const LieAlgebra& g, const Mat& basis) {
  Eigen::ColPivHouseholderQR<Mat> qr(basis);
  double res = 0.0;
  for (int i = 0; i < basis.cols(); ++i)
    for (int j = 0; j < basis.cols(); ++j) {
      Vec br = g.bracket(basis.col(i), basis.col(j));
      res = std::max(res, max_abs(Vec(basis * qr.solve(br) - br)));
    }
  return res;
}

}  // namespace dynr
