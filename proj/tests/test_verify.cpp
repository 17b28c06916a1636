#include <doctest.h>

#include "dynr/verify.hpp"

using namespace dynr;

namespace {

struct Sl2Fixture {
  RootedAlgebra g = build_sl(2);
  QuasiTriangular qt = standard_qt(full_subalgebra(g));
  Tensor3 z;
  Tensor3 z_l;
  Automorphism id;
  cplx eps{0.5};

  Sl2Fixture() {
    z = z_element(casimir(g.algebra), eps);
    z_l = embed_tensor(qt.sub, cyb(qt.r_skew));
    id.matrix = Mat::Identity(3, 3);
    id.order = 1;
    id.eigenspaces = {Mat::Identity(3, 3)};
  }

  TensorFn r_fn() {
    return [this](const Vec& lam) { return rmat_fm(qt, id, eps, lam).r; };
  }
  TensorFn rp_fn() {
    return [this](const Vec& lam) { return rmat_fm(qt, id, eps, lam).r_prime; };
  }
  Vec point() const {
    Vec lam(3);
    lam << cplx(0.28, 0.06), cplx(0.19, -0.12), cplx(-0.23, 0.09);
    return lam;
  }
};

}  // namespace

TEST_CASE("abelian residual with the analytic path is near machine precision") {
  RootedAlgebra g = build_sl(3);
  Subalgebra full = full_subalgebra(g);
  AbelianBase base = cartan_base(full);
  cplx eps(1.0, 0.3);
  Tensor3 z = z_element(casimir(g.algebra), eps);

  TensorFn r_fn = [&](const Vec& m) {
    return rho_cartan(g, eps, Vec(base.inclusion * m));
  };
  AnalyticDirectional an = [&](const Vec& m, const Vec& v) {
    return rho_cartan_derivative(g, eps, Vec(base.inclusion * m),
                                 Vec(base.inclusion * v));
  };
  Vec m(2);
  m << cplx(0.27, 0.11), cplx(-0.31, 0.06);
  ResidualReport rep = cdybe_residual_abelian(r_fn, base, m, z, 1e-9, &an);
  CHECK(rep.pass);
  CHECK(rep.residual_rel < 1e-12);

  // the finite-difference path agrees but is noisier
  ResidualReport fd = cdybe_residual_abelian(r_fn, base, m, z, 1e-6);
  CHECK(fd.pass);
  CHECK(fd.metadata["fd_error_estimate"] > 0.0);
}

TEST_CASE("reduced and group-chart residuals pass and agree") {
  Sl2Fixture fx;
  BasePoint p = make_base_point(*fx.qt.sub.algebra, fx.point(), Chart::sts);

  ResidualReport reduced =
      cdybe_residual_reduced(fx.rp_fn(), fx.qt, p, fx.z, fx.z_l, 1e-6);
  CHECK(reduced.pass);
  ResidualReport pl = cdybe_residual_pl(fx.r_fn(), fx.qt, p, fx.z, 1e-6);
  CHECK(pl.pass);

  EquivalenceResult eq =
      proposition_equivalence(fx.r_fn(), fx.qt, p, fx.z, 1e-6);
  CHECK(eq.verdicts_agree);
  CHECK(eq.pl.pass);
  CHECK(eq.reduced.pass);

  // flipped correction sign must fail by orders of magnitude
  ResidualReport wrong =
      cdybe_residual_reduced(fx.rp_fn(), fx.qt, p, fx.z, fx.z_l, 1e-6, -1);
  CHECK(!wrong.pass);
  CHECK(wrong.residual_rel > 100 * reduced.residual_rel);

  // flipped eta-field sign must fail as well
  ResidualReport wrong_eta =
      cdybe_residual_pl(fx.r_fn(), fx.qt, p, fx.z, 1e-6, -1);
  CHECK(!wrong_eta.pass);
}

TEST_CASE("quasi-invariance and invariance match within the FD budget") {
  Sl2Fixture fx;
  BasePoint p = make_base_point(*fx.qt.sub.algebra, fx.point(), Chart::sts);

  ResidualReport quasi = quasi_invariance_residual(fx.r_fn(), fx.qt, p, 1e-6);
  ResidualReport inv = invariance_residual(fx.rp_fn(), fx.qt.sub, p, 1e-6);
  CHECK(quasi.pass);
  CHECK(inv.pass);
  double budget = quasi.metadata["fd_error_estimate"] +
                  inv.metadata["fd_error_estimate"] + 1e-12;
  CHECK(std::abs(quasi.residual_abs - inv.residual_abs) <= budget);
}

TEST_CASE("base reduction cross-check") {
  RootedAlgebra g = build_sl(3);
  QuasiTriangular qt = standard_qt(levi_subalgebra(g, {0}));
  cplx eps = 0.5;
  TensorFn r_fn = [&](const Vec& lam) { return rmat_levi(qt, eps, lam).r; };

  Vec lam_h = Vec::Zero(4);
  lam_h(qt.sub.roots->cartan_indices[0]) = cplx(0.35, 0.04);
  lam_h(qt.sub.roots->cartan_indices[1]) = cplx(-0.27, 0.1);

  ReductionResult red = reduction_crosscheck(r_fn, g, qt, eps, lam_h, 1e-9);
  CHECK(red.abelian.pass);
  CHECK(red.restriction_identity < 1e-10);

  // wrong epsilon in the Z element must break the abelian residual
  ReductionResult bad =
      reduction_crosscheck(r_fn, g, qt, eps, lam_h, 1e-9, eps + 0.7);
  CHECK(!bad.abelian.pass);
}

TEST_CASE("chart consistency residuals on the Levi base") {
  RootedAlgebra g = build_sl(3);
  Subalgebra l = levi_subalgebra(g, {0});
  Vec lam(4);
  lam << cplx(0.3, 0.02), cplx(-0.2, 0.1), cplx(0.15, -0.07), cplx(0.1, 0.21);
  BasePoint p = make_base_point(*l.algebra, lam, Chart::sts);
  ChartConsistency cc = chart_consistency_residuals(*l.algebra, p);
  CHECK(cc.difference_identity < 1e-11);
  CHECK(cc.mean_identity < 1e-11);
}
