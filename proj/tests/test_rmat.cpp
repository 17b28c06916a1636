#include <doctest.h>

#include <cmath>

#include "dynr/verify.hpp"

using namespace dynr;

namespace {
cplx coth(cplx s) { return std::cosh(s) / std::sinh(s); }
}  // namespace

TEST_CASE("standard quasitriangular structure on sl2") {
  RootedAlgebra g = build_sl(2);
  QuasiTriangular qt = standard_qt(full_subalgebra(g));

  // r_skew = (1/2)(e (x) f - f (x) e)
  Mat expect = Mat::Zero(3, 3);
  expect(1, 2) = 0.5;
  expect(2, 1) = -0.5;
  CHECK((qt.r_skew.coords() - expect).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((qt.omega.coords() - g.algebra->gram_inverse()).cwiseAbs().maxCoeff() <
        1e-13);

  // xi basis is orthonormal for the inverse of Omega
  Mat gramm = qt.orthobasis.transpose() * qt.omega_inv * qt.orthobasis;
  CHECK((gramm - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);

  // eta covectors are dual to the xi basis under the standard pairing
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cplx pairing = qt.eta_covector(i).transpose() * qt.orthobasis.col(j);
      CHECK(std::abs(pairing - (i == j ? cplx(1) : cplx(0))) < 1e-10);
    }
}

TEST_CASE("make_qt validates its inputs") {
  RootedAlgebra g = build_sl(2);
  Subalgebra full = full_subalgebra(g);
  Mat omega = g.algebra->gram_inverse();
  Mat not_skew = Mat::Zero(3, 3);
  not_skew(1, 2) = 0.5;  // missing the mirrored entry
  CHECK_THROWS_AS(make_qt(full, not_skew, omega), ConstructionError);

  Mat r_ok = Mat::Zero(3, 3);
  r_ok(1, 2) = 0.5;
  r_ok(2, 1) = -0.5;
  CHECK_THROWS_AS(make_qt(full, r_ok, Mat(Mat::Identity(3, 3))),
                  ConstructionError);  // identity is not an invariant form here
  CHECK_NOTHROW(make_qt(full, r_ok, omega));
}

TEST_CASE("Z element scales quadratically and is invariant") {
  RootedAlgebra g = build_sl(3);
  Tensor2 om = casimir(g.algebra);
  Tensor3 z1 = z_element(om, 1.0);
  Tensor3 z2 = z_element(om, 2.0);
  CHECK((z2 - z1 * cplx(4.0)).max_norm() < 1e-13);
  CHECK(invariance_defect(z1, Mat(Mat::Identity(8, 8))) < 1e-11);
}

TEST_CASE("Cartan r-matrix closed form on sl2") {
  RootedAlgebra g = build_sl(2);
  cplx eps(0.8, -0.2);
  Vec lam = Vec::Zero(3);
  lam(0) = cplx(0.31, 0.07);  // lambda = lam0 * h, alpha(lambda) = 2 lam0

  Tensor2 r = rho_cartan(g, eps, lam);
  cplx s = 2.0 * lam(0);
  CHECK(std::abs(r.coords()(1, 2) - (eps / 2.0) * coth((eps / 2.0) * s)) < 1e-13);
  CHECK(std::abs(r.coords()(2, 1) + r.coords()(1, 2)) < 1e-13);
  CHECK(std::abs(r.coords()(0, 0)) < 1e-14);

  // analytic derivative vs. a central difference
  Vec v = Vec::Zero(3);
  v(0) = cplx(0.4, 0.1);
  double h = 1e-6;
  Tensor2 fd = (rho_cartan(g, eps, Vec(lam + h * v)) -
                rho_cartan(g, eps, Vec(lam - h * v))) *
               cplx(1.0 / (2.0 * h));
  CHECK((rho_cartan_derivative(g, eps, lam, v) - fd).max_norm() < 1e-8);

  // dilation covariance is exact
  CHECK(dilation_residual(g, eps, lam) < 1e-13);
}

TEST_CASE("Levi r-matrix restriction identity") {
  RootedAlgebra g = build_sl(3);
  Subalgebra l = levi_subalgebra(g, {0});
  QuasiTriangular qt = standard_qt(l);
  RootedAlgebra l_rooted{l.algebra, *l.roots};
  cplx eps = 0.6;

  // lambda supported on the Cartan of l
  Vec lam_h = Vec::Zero(4);
  lam_h(l.roots->cartan_indices[0]) = cplx(0.33, 0.08);
  lam_h(l.roots->cartan_indices[1]) = cplx(-0.21, 0.12);

  RPair rp = rmat_levi(qt, eps, lam_h);
  Tensor2 rebuilt = rp.r + embed_tensor(l, rho_cartan(l_rooted, 1.0, lam_h)) +
                    qt.r_skew_g;
  Tensor2 target = rho_cartan(g, eps, Vec(l.inclusion * lam_h));
  CHECK((rebuilt - target).max_norm() < 1e-10);
}

TEST_CASE("graded r-matrices are skew") {
  RootedAlgebra g = build_sl(2);
  QuasiTriangular qt = standard_qt(full_subalgebra(g));
  Automorphism id;
  id.matrix = Mat::Identity(3, 3);
  id.order = 1;
  id.eigenspaces = {Mat::Identity(3, 3)};

  Vec lam(3);
  lam << cplx(0.25, 0.1), cplx(0.3, -0.15), cplx(-0.2, 0.05);
  RPair rp = rmat_fm(qt, id, cplx(0.5), lam);
  CHECK(rp.r_prime.skewness() < 1e-11);
  CHECK((rp.r_prime - rp.r - qt.r_skew_g).max_norm() < 1e-13);

  Subalgebra g0 = full_subalgebra(g);
  Tensor2 es = rmat_es(g0, id, lam);
  CHECK(es.skewness() < 1e-11);
}
