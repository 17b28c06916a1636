#include "dynr/tensor.hpp"

#include <cmath>
#include <sstream>

namespace dynr {

namespace {
void check_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->dim() != b->dim())
    throw ConstructionError("tensor operation on mismatched algebras");
}
}  // namespace

Tensor2::Tensor2(AlgebraPtr algebra, Mat coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.rows() != algebra_->dim() || coords_.cols() != algebra_->dim())
    throw ConstructionError("Tensor2: coordinate shape mismatch");
  if (!coords_.allFinite()) throw ConstructionError("Tensor2: non-finite entries");
}

Tensor2 Tensor2::zero(AlgebraPtr algebra) {
  int d = algebra->dim();
  return Tensor2(std::move(algebra), Mat::Zero(d, d));
}

double Tensor2::max_norm() const {
  return coords_.size() ? coords_.cwiseAbs().maxCoeff() : 0.0;
}

double Tensor2::skewness() const {
  return (coords_ + coords_.transpose()).cwiseAbs().maxCoeff();
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
  check_same(algebra_, o.algebra_);
  return Tensor2(algebra_, coords_ + o.coords_);
}
Tensor2 Tensor2::operator-(const Tensor2& o) const {
  check_same(algebra_, o.algebra_);
  return Tensor2(algebra_, coords_ - o.coords_);
}
Tensor2 Tensor2::operator*(cplx s) const { return Tensor2(algebra_, coords_ * s); }

Tensor3::Tensor3(AlgebraPtr algebra)
    : algebra_(std::move(algebra)),
      dim_(algebra_->dim()),
      w_(static_cast<size_t>(dim_) * dim_ * dim_, cplx(0)) {}

double Tensor3::max_norm() const {
  double m = 0.0;
  for (const cplx& v : w_) m = std::max(m, std::abs(v));
  return m;
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
  check_same(algebra_, o.algebra_);
  Tensor3 r(algebra_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] + o.w_[i];
  return r;
}
Tensor3 Tensor3::operator-(const Tensor3& o) const {
  check_same(algebra_, o.algebra_);
  Tensor3 r(algebra_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] - o.w_[i];
  return r;
}
Tensor3 Tensor3::operator*(cplx s) const {
  Tensor3 r(algebra_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] * s;
  return r;
}

Tensor2 flip(const Tensor2& t) {
  return Tensor2(t.algebra(), t.coords().transpose());
}

Tensor2 leg_act(const Vec& x, const Tensor2& t, int leg) {
  Mat a = t.algebra()->adjoint(x);
  if (leg == 0) return Tensor2(t.algebra(), a * t.coords());
  if (leg == 1) return Tensor2(t.algebra(), t.coords() * a.transpose());
  throw ConstructionError("leg_act: leg out of range for Tensor2");
}

Tensor3 leg_act(const Vec& x, const Tensor3& t, int leg) {
  if (leg < 0 || leg > 2) throw ConstructionError("leg_act: leg out of range");
  const int d = t.dim();
  Mat a = t.algebra()->adjoint(x);
  Tensor3 r(t.algebra());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        cplx v = t(i, j, k);
        if (v == cplx(0)) continue;
        for (int m = 0; m < d; ++m) {
          switch (leg) {
            case 0: if (a(m, i) != cplx(0)) r(m, j, k) += a(m, i) * v; break;
            case 1: if (a(m, j) != cplx(0)) r(i, m, k) += a(m, j) * v; break;
            default: if (a(m, k) != cplx(0)) r(i, j, m) += a(m, k) * v; break;
          }
        }
      }
  return r;
}

// [A12,B13](m,j,l) = sum_{i,k} A(i,j) B(k,l) c[i][k][m]
Tensor3 bracket12_13(const Tensor2& a, const Tensor2& b) {
  check_same(a.algebra(), b.algebra());
  const LieAlgebra& g = *a.algebra();
  const int d = g.dim();
  Tensor3 r(a.algebra());
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const Mat& adi = g.adjoint_basis(i);
      for (int m = 0; m < d; ++m) {
        cplx c = adi(m, k);
        if (c == cplx(0)) continue;
        for (int j = 0; j < d; ++j) {
          cplx aij = a.coords()(i, j);
          if (aij == cplx(0)) continue;
          for (int l = 0; l < d; ++l) r(m, j, l) += aij * b.coords()(k, l) * c;
        }
      }
    }
  return r;
}

// [A12,B23](i,m,l) = sum_{j,k} A(i,j) B(k,l) c[j][k][m]
Tensor3 bracket12_23(const Tensor2& a, const Tensor2& b) {
  check_same(a.algebra(), b.algebra());
  const LieAlgebra& g = *a.algebra();
  const int d = g.dim();
  Tensor3 r(a.algebra());
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const Mat& adj = g.adjoint_basis(j);
      for (int m = 0; m < d; ++m) {
        cplx c = adj(m, k);
        if (c == cplx(0)) continue;
        for (int i = 0; i < d; ++i) {
          cplx aij = a.coords()(i, j);
          if (aij == cplx(0)) continue;
          for (int l = 0; l < d; ++l) r(i, m, l) += aij * b.coords()(k, l) * c;
        }
      }
    }
  return r;
}

// [A13,B23](i,k,m) = sum_{j,l} A(i,j) B(k,l) c[j][l][m]
Tensor3 bracket13_23(const Tensor2& a, const Tensor2& b) {
  check_same(a.algebra(), b.algebra());
  const LieAlgebra& g = *a.algebra();
  const int d = g.dim();
  Tensor3 r(a.algebra());
  for (int j = 0; j < d; ++j)
    for (int l = 0; l < d; ++l) {
      const Mat& adj = g.adjoint_basis(j);
      for (int m = 0; m < d; ++m) {
        cplx c = adj(m, l);
        if (c == cplx(0)) continue;
        for (int i = 0; i < d; ++i) {
          cplx aij = a.coords()(i, j);
          if (aij == cplx(0)) continue;
          for (int k = 0; k < d; ++k) r(i, k, m) += aij * b.coords()(k, l) * c;
        }
      }
    }
  return r;
}

Tensor3 cyb(const Tensor2& a) {
  return bracket12_13(a, a) + bracket12_23(a, a) + bracket13_23(a, a);
}

Tensor3 alt(const Tensor3& b) {
  const int d = b.dim();
  Tensor3 r(b.algebra());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        r(i, j, k) = b(i, j, k) - b(j, i, k) + b(k, i, j);
  return r;
}

Tensor3 alt_outer(const Vec& x, const Tensor2& t) {
  const int d = t.dim();
  Tensor3 b(t.algebra());
  for (int i = 0; i < d; ++i) {
    if (x(i) == cplx(0)) continue;
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) b(i, j, k) = x(i) * t.coords()(j, k);
  }
  return alt(b);
}

Tensor2 op_to_tensor(const Mat& op, AlgebraPtr algebra) {
  return Tensor2(algebra, algebra->gram_inverse() * op.transpose());
}

Mat tensor_to_op(const Tensor2& t) {
  return t.coords().transpose() * t.algebra()->gram();
}

Tensor2 casimir(AlgebraPtr algebra) {
  Mat ginv = algebra->gram_inverse();
  return Tensor2(std::move(algebra), std::move(ginv));
}

double invariance_defect(const Tensor2& t, const Mat& basis) {
  double r = 0.0;
  for (int c = 0; c < basis.cols(); ++c) {
    Vec xi = basis.col(c);
    r = std::max(r, (leg_act(xi, t, 0) + leg_act(xi, t, 1)).max_norm());
  }
  return r;
}

double invariance_defect(const Tensor3& t, const Mat& basis) {
  double r = 0.0;
  for (int c = 0; c < basis.cols(); ++c) {
    Vec xi = basis.col(c);
    r = std::max(
        r, (leg_act(xi, t, 0) + leg_act(xi, t, 1) + leg_act(xi, t, 2)).max_norm());
  }
  return r;
}

double relative_denominator(const Tensor2& r) {
  double n = r.max_norm();
  return 1.0 + n * n * r.dim();
}

Tensor2 embed_tensor(const Subalgebra& sub, const Tensor2& t_l) {
  Mat coords = sub.inclusion * t_l.coords() * sub.inclusion.transpose();
  return Tensor2(sub.parent, std::move(coords));
}

Tensor3 embed_tensor(const Subalgebra& sub, const Tensor3& t_l) {
  const int dl = t_l.dim(), dg = sub.parent->dim();
  Tensor3 r(sub.parent);
  const Mat& E = sub.inclusion;
  for (int a = 0; a < dl; ++a)
    for (int b = 0; b < dl; ++b)
      for (int c = 0; c < dl; ++c) {
        cplx v = t_l(a, b, c);
        if (v == cplx(0)) continue;
        for (int i = 0; i < dg; ++i) {
          if (E(i, a) == cplx(0)) continue;
          for (int j = 0; j < dg; ++j) {
            if (E(j, b) == cplx(0)) continue;
            for (int k = 0; k < dg; ++k)
              if (E(k, c) != cplx(0)) r(i, j, k) += E(i, a) * E(j, b) * E(k, c) * v;
          }
        }
      }
  return r;
}

std::string algebra_fingerprint(const LieAlgebra& g) {
  // FNV-1a over dim and labels; enough to catch report/algebra mixups
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  mix(std::to_string(g.dim()));
  for (const auto& l : g.labels()) mix(l);
  std::ostringstream os;
  os << "dim" << g.dim() << "-" << std::hex << h;
  return os.str();
}

namespace {
void write_entry(std::ostream& os, std::initializer_list<int> idx, cplx v) {
  os << "(";
  bool first = true;
  for (int i : idx) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << ") " << v.real() << " " << v.imag() << "\n";
}
}  // namespace

std::string to_text(const Tensor2& t) {
  std::ostringstream os;
  os << "algebra " << algebra_fingerprint(*t.algebra()) << "\n";
  for (int a = 0; a < t.dim(); ++a)
    for (int b = 0; b < t.dim(); ++b)
      if (std::abs(t.coords()(a, b)) > 0) write_entry(os, {a, b}, t.coords()(a, b));
  return os.str();
}

std::string to_text(const Tensor3& t) {
  std::ostringstream os;
  os << "algebra " << algebra_fingerprint(*t.algebra()) << "\n";
  for (int a = 0; a < t.dim(); ++a)
    for (int b = 0; b < t.dim(); ++b)
      for (int c = 0; c < t.dim(); ++c)
        if (std::abs(t(a, b, c)) > 0) write_entry(os, {a, b, c}, t(a, b, c));
  return os.str();
}

}  // namespace dynr
