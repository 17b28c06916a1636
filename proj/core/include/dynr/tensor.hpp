#ifndef DYNR_TENSOR_HPP
#define DYNR_TENSOR_HPP

#include <string>
#include <vector>

#include "dynr/liealg.hpp"

namespace dynr {

/// Element of g (x) g in coordinates over the algebra basis.
class Tensor2 {
 public:
  Tensor2() = default;
  Tensor2(AlgebraPtr algebra, Mat coords);
  static Tensor2 zero(AlgebraPtr algebra);

  const Mat& coords() const { return coords_; }
  Mat& coords() { return coords_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  int dim() const { return static_cast<int>(coords_.rows()); }

  double max_norm() const;
  double skewness() const;  // || T + flip(T) ||

  Tensor2 operator+(const Tensor2& o) const;
  Tensor2 operator-(const Tensor2& o) const;
  Tensor2 operator*(cplx s) const;

 private:
  AlgebraPtr algebra_;
  Mat coords_;
};

/// Element of g (x) g (x) g; dense row-major coordinates.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(AlgebraPtr algebra);

  cplx& operator()(int a, int b, int c) {
    return w_[(a * dim_ + b) * dim_ + c];
  }
  cplx operator()(int a, int b, int c) const {
    return w_[(a * dim_ + b) * dim_ + c];
  }
  const AlgebraPtr& algebra() const { return algebra_; }
  int dim() const { return dim_; }

  double max_norm() const;

  Tensor3 operator+(const Tensor3& o) const;
  Tensor3 operator-(const Tensor3& o) const;
  Tensor3 operator*(cplx s) const;

 private:
  AlgebraPtr algebra_;
  int dim_ = 0;
  std::vector<cplx> w_;
};

Tensor2 flip(const Tensor2& t);

/// ad(x) applied to one tensor leg (0-based).
Tensor2 leg_act(const Vec& x, const Tensor2& t, int leg);
Tensor3 leg_act(const Vec& x, const Tensor3& t, int leg);

/// Embedded brackets of two rank-2 tensors inside g^{(x)3}.
Tensor3 bracket12_13(const Tensor2& a, const Tensor2& b);
Tensor3 bracket12_23(const Tensor2& a, const Tensor2& b);
Tensor3 bracket13_23(const Tensor2& a, const Tensor2& b);

/// CYB(A) = [A12,A13] + [A12,A23] + [A13,A23].
Tensor3 cyb(const Tensor2& a);

/// Alt(B) = B_123 - B_213 + B_231.
Tensor3 alt(const Tensor3& b);

/// Alt(x (x) T) for a vector first leg.
Tensor3 alt_outer(const Vec& x, const Tensor2& t);

/// T(F) = sum_{a,b} (G^{-1})^{ab} u_a (x) F(u_b); inverse of tensor_to_op.
Tensor2 op_to_tensor(const Mat& op, AlgebraPtr algebra);
Mat tensor_to_op(const Tensor2& t);

/// Split Casimir = op_to_tensor(identity).
Tensor2 casimir(AlgebraPtr algebra);

/// Max over subalgebra basis columns xi of || sum_legs leg_act(xi, T, leg) ||.
double invariance_defect(const Tensor2& t, const Mat& subalgebra_basis);
double invariance_defect(const Tensor3& t, const Mat& subalgebra_basis);

/// Relative-norm denominator 1 + ||r||^2 * dim used in residual reports.
double relative_denominator(const Tensor2& r);

/// Push a tensor over a subalgebra forward to parent coordinates.
Tensor2 embed_tensor(const Subalgebra& sub, const Tensor2& t_l);
Tensor3 embed_tensor(const Subalgebra& sub, const Tensor3& t_l);

/// Sparse text serialization: one "(a,b[,c]) re im" entry per line, preceded
/// by an algebra fingerprint. Matches the JSON form used in reports.
std::string to_text(const Tensor2& t);
std::string to_text(const Tensor3& t);
std::string algebra_fingerprint(const LieAlgebra& g);

}  // namespace dynr

#endif
