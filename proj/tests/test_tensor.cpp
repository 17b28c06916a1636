#include <doctest.h>

#include "dynr/tensor.hpp"

using namespace dynr;

namespace {

// Independent oracle: the defining 2x2 representation of sl2. Rank-2/3
// tensors are mapped to 4x4 / 8x8 matrices with Kronecker products and the
// library's tensor operations are compared against plain matrix algebra.
using M2 = Eigen::Matrix2cd;

M2 rep(int i) {
  M2 m = M2::Zero();
  if (i == 0) m << 1, 0, 0, -1;      // h
  else if (i == 1) m << 0, 1, 0, 0;  // e
  else m << 0, 0, 1, 0;              // f
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

Mat rep_vec(const Vec& x) {
  Mat m = Mat::Zero(2, 2);
  for (int i = 0; i < 3; ++i) m += x(i) * rep(i);
  return m;
}

Mat rep2(const Tensor2& t) {
  Mat m = Mat::Zero(4, 4);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m += t.coords()(a, b) * kron(rep(a), rep(b));
  return m;
}

Mat rep3(const Tensor3& t) {
  Mat m = Mat::Zero(8, 8);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        m += t(a, b, c) * kron(kron(rep(a), rep(b)), rep(c));
  return m;
}

Mat leg1(const Mat& a) { return kron(kron(a, Mat::Identity(2, 2)), Mat::Identity(2, 2)); }
Mat leg2m(const Mat& a) { return kron(kron(Mat::Identity(2, 2), a), Mat::Identity(2, 2)); }
Mat leg3m(const Mat& a) { return kron(kron(Mat::Identity(2, 2), Mat::Identity(2, 2)), a); }

Mat embed12(const Tensor2& t) {
  Mat m = Mat::Zero(8, 8);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      m += t.coords()(a, b) * kron(kron(rep(a), rep(b)), Mat::Identity(2, 2));
  return m;
}
Mat embed13(const Tensor2& t) {
  Mat m = Mat::Zero(8, 8);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      m += t.coords()(a, b) * kron(kron(rep(a), Mat::Identity(2, 2)), rep(b));
  return m;
}
Mat embed23(const Tensor2& t) {
  Mat m = Mat::Zero(8, 8);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      m += t.coords()(a, b) * kron(kron(Mat::Identity(2, 2), rep(a)), rep(b));
  return m;
}

Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }

double mdiff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

Tensor2 sample_tensor(const AlgebraPtr& alg) {
  Mat c(3, 3);
  c << cplx(0.3, 0.1), cplx(-0.2, 0.4), cplx(0.5, -0.1),
       cplx(0.7, 0.0), cplx(0.1, -0.3), cplx(-0.4, 0.2),
       cplx(-0.6, 0.5), cplx(0.2, 0.2), cplx(0.0, -0.7);
  return Tensor2(alg, c);
}

}  // namespace

TEST_CASE("bracket embeddings match the matrix representation") {
  RootedAlgebra g = build_sl(2);
  Tensor2 A = sample_tensor(g.algebra);
  Tensor2 B = flip(A) * cplx(0.9, 0.2);

  CHECK(mdiff(rep3(bracket12_13(A, B)), comm(embed12(A), embed13(B))) < 1e-12);
  CHECK(mdiff(rep3(bracket12_23(A, B)), comm(embed12(A), embed23(B))) < 1e-12);
  CHECK(mdiff(rep3(bracket13_23(A, B)), comm(embed13(A), embed23(B))) < 1e-12);
  CHECK(mdiff(rep3(cyb(A)), comm(embed12(A), embed13(A)) +
                                comm(embed12(A), embed23(A)) +
                                comm(embed13(A), embed23(A))) < 1e-12);
}

TEST_CASE("leg actions match matrix commutators") {
  RootedAlgebra g = build_sl(2);
  Tensor2 A = sample_tensor(g.algebra);
  Vec x(3);
  x << cplx(0.2, 0.5), cplx(-0.3, 0.1), cplx(0.4, -0.2);
  Mat X = rep_vec(x), I2 = Mat::Identity(2, 2);

  CHECK(mdiff(rep2(leg_act(x, A, 0)), comm(kron(X, I2), rep2(A))) < 1e-12);
  CHECK(mdiff(rep2(leg_act(x, A, 1)), comm(kron(I2, X), rep2(A))) < 1e-12);

  Tensor3 W = bracket12_23(A, A);
  CHECK(mdiff(rep3(leg_act(x, W, 0)), comm(leg1(X), rep3(W))) < 1e-12);
  CHECK(mdiff(rep3(leg_act(x, W, 1)), comm(leg2m(X), rep3(W))) < 1e-12);
  CHECK(mdiff(rep3(leg_act(x, W, 2)), comm(leg3m(X), rep3(W))) < 1e-12);
}

TEST_CASE("alt of a pure tensor is the signed permutation sum") {
  RootedAlgebra g = build_sl(2);
  Vec x(3), y(3), z(3);
  x << cplx(0.1, 0.2), cplx(0.5, -0.1), cplx(-0.3, 0.4);
  y << cplx(-0.2, 0.3), cplx(0.4, 0.1), cplx(0.6, -0.5);
  z << cplx(0.7, -0.2), cplx(-0.1, 0.6), cplx(0.2, 0.3);

  Tensor2 yz(g.algebra, Mat(y * z.transpose()));
  Tensor3 a = alt_outer(x, yz);

  auto pure = [&](const Vec& u, const Vec& v, const Vec& w) {
    return kron(kron(rep_vec(u), rep_vec(v)), rep_vec(w));
  };
  // x(x)y(x)z - y(x)x(x)z + y(x)z(x)x
  Mat expect = pure(x, y, z) - pure(y, x, z) + pure(y, z, x);
  CHECK(mdiff(rep3(a), expect) < 1e-12);
}

TEST_CASE("operator-tensor conversion and the Casimir") {
  RootedAlgebra g = build_sl(2);
  Mat F(3, 3);
  F << cplx(0.2, 0.1), cplx(0.3, 0), cplx(-0.1, 0.4),
       cplx(0, -0.2), cplx(0.5, 0.3), cplx(0.2, 0),
       cplx(0.1, 0.1), cplx(-0.3, 0.2), cplx(0.4, -0.4);
  Tensor2 t = op_to_tensor(F, g.algebra);
  CHECK(mdiff(tensor_to_op(t), F) < 1e-12);

  Tensor2 om = casimir(g.algebra);
  CHECK(mdiff(tensor_to_op(om), Mat::Identity(3, 3)) < 1e-12);
  CHECK(invariance_defect(om, Mat(Mat::Identity(3, 3))) < 1e-12);
  // matrix-representation oracle: the split Casimir of sl2 in the defining
  // representation is (1/2)(h(x)h) + e(x)f + f(x)e
  Mat expect = 0.5 * kron(rep(0), rep(0)) + kron(rep(1), rep(2)) +
               kron(rep(2), rep(1));
  CHECK(mdiff(rep2(om), expect) < 1e-12);
}

TEST_CASE("embedding into a parent algebra preserves entries") {
  RootedAlgebra g = build_sl(3);
  Subalgebra l = levi_subalgebra(g, {0});
  Mat c = Mat::Zero(4, 4);
  c(0, 1) = cplx(0.4, -0.3);
  c(2, 3) = cplx(-0.1, 0.8);
  Tensor2 t(l.algebra, c);
  Tensor2 e = embed_tensor(l, t);
  // the Levi basis consists of standard basis vectors of sl3, so embedding
  // relocates entries without changing them
  CHECK(std::abs(e.max_norm() - t.max_norm()) < 1e-12);
  CHECK(mdiff(Mat(l.inclusion.transpose() * e.coords() * l.inclusion),
              t.coords()) < 1e-12);

  Tensor3 w(t.algebra());
  w(0, 1, 2) = cplx(0.3, 0.3);
  Tensor3 we = embed_tensor(l, w);
  CHECK(std::abs(we.max_norm() - w.max_norm()) < 1e-12);
}

TEST_CASE("norms and serialization") {
  RootedAlgebra g = build_sl(2);
  Tensor2 a = sample_tensor(g.algebra);
  CHECK(a.max_norm() == doctest::Approx(std::abs(cplx(-0.6, 0.5))));
  CHECK(flip(flip(a)).coords() == a.coords());
  Tensor2 skew = a - flip(a);
  CHECK(skew.skewness() < 1e-14);
  CHECK(relative_denominator(a) ==
        doctest::Approx(1.0 + a.max_norm() * a.max_norm() * 3.0));

  std::string txt = to_text(a);
  CHECK(txt.find("algebra dim3-") == 0);
  CHECK(to_text(cyb(a)).size() > txt.size() / 2);
}
