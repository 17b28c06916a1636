#include <doctest.h>

#include <cmath>

#include "dynr/matfun.hpp"

using namespace dynr;

namespace {
cplx coth(cplx s) { return std::cosh(s) / std::sinh(s); }
}  // namespace

TEST_CASE("scalar profile frozen values") {
  // coth(1/2) = 2.163953413738653
  CHECK(std::abs(coth(0.5) - cplx(2.163953413738653)) < 1e-14);

  // coth_scaled(1)(1) = (1/2) coth(1/2)
  CHECK(std::abs(ScalarFun::coth_scaled(1.0).eval(1.0) -
                 cplx(1.0819767068693265)) < 1e-12);

  // rational profile at 1: 1 - (1/2) coth(1/2) = -0.081976706869...
  CHECK(std::abs(ScalarFun::rational_trig_f0().eval(1.0) -
                 cplx(-0.0819767068693265)) < 1e-12);

  // trigonometric profile, eps = 2, s = 1: (1/2)coth(1/2) - coth(1)
  CHECK(std::abs(ScalarFun::trig_f0(2.0).eval(1.0) - cplx(-0.2310585786300049)) <
        1e-12);

  // shifted coth with j=1, n=2 at eps=1 equals -(1/2)tanh(s/2)
  cplx s(0.4, 0.3);
  CHECK(std::abs(ScalarFun::shifted_coth(1.0, 1, 2).eval(s) +
                 0.5 * std::tanh(s / 2.0)) < 1e-14);

  // chart profiles at 0
  CHECK(std::abs(ScalarFun::half_ad_coth().eval(0.0) - cplx(1.0)) < 1e-14);
  CHECK(std::abs(ScalarFun::exp_chart_left().eval(0.0) - cplx(1.0)) < 1e-14);
  CHECK(std::abs(ScalarFun::exp_chart_right().eval(0.0) - cplx(1.0)) < 1e-14);
}

TEST_CASE("series branch agrees with the direct formula near the switchover") {
  // s just inside the series radius: eval uses the series, the reference
  // value is computed directly (cancellation there is still ~1e-13)
  cplx s(0.999e-3, 0.2e-3);
  CHECK(std::abs(ScalarFun::rational_trig_f0().eval(s) -
                 (1.0 / s - 0.5 * coth(s / 2.0))) < 5e-12);
  CHECK(std::abs(ScalarFun::trig_f0(2.0).eval(s) -
                 (0.5 * coth(s / 2.0) - coth(s))) < 5e-12);
  CHECK(std::abs(ScalarFun::half_ad_coth().eval(s) - (s / 2.0) * coth(s / 2.0)) <
        5e-12);
  CHECK(std::abs(ScalarFun::exp_chart_left().eval(s) -
                 s / (1.0 - std::exp(-s))) < 5e-12);
  CHECK(std::abs(ScalarFun::exp_chart_right().eval(s) -
                 s / (std::exp(s) - 1.0)) < 5e-12);
  // odd profiles
  CHECK(ScalarFun::coth_scaled(2.0).odd());
  CHECK(ScalarFun::rational_trig_f0().odd());
  cplx t(0.2, -0.4);
  CHECK(std::abs(ScalarFun::trig_f0(1.5).eval(t) +
                 ScalarFun::trig_f0(1.5).eval(-t)) < 1e-13);
}

TEST_CASE("pole guard raises near singular arguments") {
  ScalarFun f = ScalarFun::coth_scaled(1.0);
  CHECK(f.pole_distance(cplx(0.5)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(f.eval(cplx(0.0, 2.0 * 3.14159265358979 + 0.01)),
                  PoleProximityError);
  CHECK_THROWS_AS(ScalarFun::shifted_coth(1.0, 0, 1).eval(cplx(0.02)),
                  PoleProximityError);
  // shifted pole lattice: eps=2, j=1, n=2 has a pole at s = i pi/2
  CHECK_THROWS_AS(ScalarFun::shifted_coth(2.0, 1, 2).eval(cplx(0, 1.5707963)),
                  PoleProximityError);
}

TEST_CASE("spectral decomposition with a repeated eigenvalue") {
  // block diag(2, 2, -1) conjugated by a non-orthogonal mixing
  Mat d = Mat::Zero(3, 3);
  d(0, 0) = 2.0;
  d(1, 1) = 2.0;
  d(2, 2) = -1.0;
  Mat p(3, 3);
  p << 1, 1, 0, 0, 1, 1, 1, 0, 1;
  Mat a = p * d * p.inverse();

  SpectralData s = spectral_decompose(a);
  REQUIRE(s.eigenvalues.size() == 2);
  CHECK(s.defect < 1e-12);
  Mat resum = Mat::Zero(3, 3);
  Mat psum = Mat::Zero(3, 3);
  for (int i = 0; i < 2; ++i) {
    resum += s.eigenvalues(i) * s.projectors[i];
    psum += s.projectors[i];
    // projector property and invariance
    CHECK((s.projectors[i] * s.projectors[i] - s.projectors[i])
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
  CHECK((resum - a).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((psum - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(s.multiplicities[0] + s.multiplicities[1] == 3);
}

TEST_CASE("Jordan blocks are rejected") {
  Mat j = Mat::Zero(2, 2);
  j(0, 1) = 1.0;
  CHECK(!try_spectral_decompose(j).has_value());
  CHECK_THROWS_AS(spectral_decompose(j), NonSemisimpleError);
}

TEST_CASE("apply_scalar agrees with a direct diagonal computation") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = cplx(0.8, 0.1);
  d(1, 1) = cplx(-0.3, 0.4);
  ScalarFun f = ScalarFun::half_ad_coth();
  Mat r = apply_scalar(f, spectral_decompose(d));
  CHECK(std::abs(r(0, 0) - f.eval(d(0, 0))) < 1e-12);
  CHECK(std::abs(r(1, 1) - f.eval(d(1, 1))) < 1e-12);
  CHECK(std::abs(r(0, 1)) < 1e-12);
}

TEST_CASE("block application matches the unrestricted path") {
  RootedAlgebra g = build_sl(2);
  Vec lam(3);
  lam << cplx(0.3, 0.1), cplx(0.2, -0.2), cplx(-0.1, 0.25);
  Mat a = g.algebra->adjoint(lam);
  ScalarFun f = ScalarFun::half_ad_coth();

  Mat full = apply_scalar(f, spectral_decompose(a));
  std::vector<std::pair<Mat, ScalarFun>> blocks;
  blocks.emplace_back(Mat::Identity(3, 3), f);
  Mat blocked = apply_scalar_blocks(a, blocks);
  CHECK((full - blocked).cwiseAbs().maxCoeff() < 1e-10);

  // restriction to an invariant subspace (the whole space here)
  Mat restricted = apply_scalar_restricted(f, a, Mat(Mat::Identity(3, 3)));
  CHECK((full - restricted).cwiseAbs().maxCoeff() < 1e-10);
}
