#include <doctest.h>

#include "dynr/liealg.hpp"

using namespace dynr;

namespace {

Vec unit(int dim, int i) {
  Vec v = Vec::Zero(dim);
  v(i) = 1.0;
  return v;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("sl2 structure and trace form") {
  RootedAlgebra g = build_sl(2);
  const LieAlgebra& a = *g.algebra;
  REQUIRE(a.dim() == 3);
  CHECK(a.residuals().max() < 1e-12);

  // basis order: h, then the positive root vector e, then f
  Vec h = unit(3, 0), e = unit(3, 1), f = unit(3, 2);
  CHECK((a.bracket(h, e) - 2.0 * e).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((a.bracket(h, f) + 2.0 * f).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((a.bracket(e, f) - h).cwiseAbs().maxCoeff() < 1e-14);

  // trace form of the defining representation
  CHECK(std::abs(a.gram()(0, 0) - cplx(2.0)) < 1e-14);
  CHECK(std::abs(a.gram()(1, 2) - cplx(1.0)) < 1e-14);
  CHECK(std::abs(a.gram()(1, 1)) < 1e-14);

  REQUIRE(g.roots.rank() == 1);
  REQUIRE(g.roots.roots.size() == 2);
  CHECK(std::abs(g.roots.pairing(g.roots.roots[0], h) - cplx(2.0)) < 1e-14);
}

TEST_CASE("sl3 roots and pairings") {
  RootedAlgebra g = build_sl(3);
  REQUIRE(g.algebra->dim() == 8);
  REQUIRE(g.roots.rank() == 2);
  REQUIRE(g.roots.roots.size() == 6);
  CHECK(g.algebra->residuals().max() < 1e-12);

  Vec h1 = unit(8, 0), h2 = unit(8, 1);
  // simple root alpha_1 (first listed positive root): alpha_1(h1) = 2,
  // alpha_1(h2) = -1 for the standard Cartan h_i = E_ii - E_{i+1,i+1}
  const Root& a1 = g.roots.roots[0];
  REQUIRE(a1.positive);
  CHECK(std::abs(g.roots.pairing(a1, h1) - cplx(2.0)) < 1e-14);
  CHECK(std::abs(g.roots.pairing(a1, h2) + cplx(1.0)) < 1e-14);

  // every root pairs to the negative of its mirror
  for (const Root& r : g.roots.roots) {
    const LieAlgebra& a = *g.algebra;
    Vec ev = unit(8, r.vector_index);
    // [h, e_alpha] = alpha(h) e_alpha
    Vec br = a.bracket(h1, ev);
    CHECK((br - g.roots.pairing(r, h1) * ev).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("direct sum has no cross brackets") {
  RootedAlgebra s = build_sl(2);
  AlgebraPtr sum = direct_sum(*s.algebra, *s.algebra);
  REQUIRE(sum->dim() == 6);
  CHECK(sum->residuals().max() < 1e-12);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j)
      CHECK(sum->bracket(unit(6, i), unit(6, j)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("gl2 Levi subalgebra of sl3") {
  RootedAlgebra g = build_sl(3);
  Subalgebra l = levi_subalgebra(g, {0});
  REQUIRE(l.dim() == 4);
  REQUIRE(l.complement.cols() == 4);
  CHECK(subalgebra_closure_residual(*g.algebra, l.inclusion) < 1e-12);
  CHECK(l.algebra->residuals().max() < 1e-12);
  REQUIRE(l.roots.has_value());
  CHECK(l.roots->rank() == 2);
  CHECK(l.roots->roots.size() == 2);

  // [l, l_perp] stays inside l_perp: no component along l w.r.t. the form
  const Mat& G = g.algebra->gram();
  for (int i = 0; i < l.dim(); ++i)
    for (int c = 0; c < l.complement.cols(); ++c) {
      Vec br = g.algebra->bracket(l.inclusion.col(i), l.complement.col(c));
      Vec overlap = l.inclusion.transpose() * G * br;
      CHECK(overlap.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("swap automorphism of sl2+sl2") {
  RootedAlgebra s = build_sl(2);
  AlgebraPtr sum = direct_sum(*s.algebra, *s.algebra);
  Automorphism b = cyclic_automorphism(*sum, 2);
  REQUIRE(b.order == 2);
  CHECK(max_abs(Mat(b.matrix * b.matrix - Mat::Identity(6, 6))) < 1e-14);
  CHECK(bracket_preservation_residual(*sum, b.matrix) < 1e-12);
  REQUIRE(b.eigenspaces.size() == 2);
  CHECK(b.eigenspaces[0].cols() == 3);
  CHECK(b.eigenspaces[1].cols() == 3);

  Subalgebra diag = diagonal_subalgebra(sum, s, 2);
  REQUIRE(diag.dim() == 3);
  CHECK(subalgebra_closure_residual(*sum, diag.inclusion) < 1e-12);
  // rescaled diagonal basis reproduces the sl2 gram matrix
  CHECK(max_abs(Mat(diag.algebra->gram() - s.algebra->gram())) < 1e-12);
}

TEST_CASE("bilinear orthonormalization handles isotropic root vectors") {
  for (int n : {2, 3}) {
    RootedAlgebra g = build_sl(n);
    const int d = g.algebra->dim();
    Mat X = bilinear_orthonormalize(Mat::Identity(d, d), g.algebra->gram());
    REQUIRE(X.cols() == d);
    CHECK(max_abs(Mat(X.transpose() * g.algebra->gram() * X -
                      Mat::Identity(d, d))) < 1e-10);
  }
}

TEST_CASE("construction errors") {
  RootedAlgebra g = build_sl(2);
  // tamper with a structure constant: Jacobi/antisymmetry must fail
  std::vector<Mat> ad;
  for (int i = 0; i < 3; ++i) ad.push_back(g.algebra->adjoint_basis(i));
  ad[0](1, 1) += 0.5;
  CHECK_THROWS_AS(LieAlgebra({"h", "e", "f"}, ad, g.algebra->gram()),
                  ConstructionError);

  // degenerate omega is not factorizable
  CHECK_THROWS_WITH_AS(
      orthonormal_basis_via_casimir(*g.algebra, Mat(Mat::Zero(3, 3))),
      doctest::Contains("not factorizable"), ConstructionError);
}
