#include "dynr/dynfield.hpp"

#include <cmath>

namespace dynr {

BasePoint make_base_point(const LieAlgebra& l, Vec coords, Chart chart) {
  BasePoint p;
  p.chart = chart;
  Mat a = l.adjoint(coords);
  p.coords = std::move(coords);
  double defect = 0.0;
  auto sd = try_spectral_decompose(a, &defect);
  if (!sd)
    throw NonSemisimpleError("make_base_point: ad(lambda) is not semisimple");
  p.ad_spectrum = std::move(*sd);
  p.semisimple_defect = defect;
  return p;
}

Vec nabla_prime_coefficient(const LieAlgebra&, const BasePoint& p, const Vec& xi) {
  return apply_scalar(ScalarFun::half_ad_coth(), p.ad_spectrum) * xi;
}

Vec adjoint_action_coefficient(const LieAlgebra& l, const BasePoint& p,
                               const Vec& xi) {
  return l.adjoint(p.coords) * xi;
}

std::pair<Vec, Vec> left_right_coefficients(const LieAlgebra&, const BasePoint& p,
                                            const Vec& xi) {
  Vec left = apply_scalar(ScalarFun::exp_chart_left(), p.ad_spectrum) * xi;
  Vec right = apply_scalar(ScalarFun::exp_chart_right(), p.ad_spectrum) * xi;
  return {left, right};
}

Vec eta_field_coefficient(const QuasiTriangular& qt, const BasePoint& p,
                          const Vec& eta, int eta_sign) {
  const LieAlgebra& l = *qt.sub.algebra;
  Vec r_eta = QuasiTriangular::pair_first(qt.r_skew, eta);
  Vec om_eta = QuasiTriangular::pair_first(qt.omega, eta);
  // r^r - r^l = -(xi^l - xi^r) applied to r(eta); (1/2)(xi^l + xi^r) = nabla'
  Vec translation = -(l.adjoint(p.coords) * r_eta);
  Vec mean = apply_scalar(ScalarFun::half_ad_coth(), p.ad_spectrum) * om_eta;
  return cplx(eta_sign) * translation + mean;
}

DirectionalDerivative directional_derivative(const TensorFn& fn, const Vec& lambda,
                                             const Vec& v, double h0) {
  if (h0 <= 0.0) h0 = 1e-4 * (1.0 + lambda.norm());

  auto central = [&](double h) {
    Tensor2 plus = fn(lambda + h * v);
    Tensor2 minus = fn(lambda - h * v);
    return (plus - minus) * cplx(1.0 / (2.0 * h));
  };

  for (int attempt = 0; attempt < 2; ++attempt) {
    try {
      Tensor2 d1 = central(h0);
      Tensor2 d2 = central(h0 / 2.0);
      DirectionalDerivative out;
      out.value = d2 * cplx(4.0 / 3.0) - d1 * cplx(1.0 / 3.0);
      out.error_estimate = (d2 - d1).max_norm() / 3.0;
      return out;
    } catch (const PoleProximityError&) {
      if (attempt == 1) throw;
      h0 /= 4.0;  // one shrink, then propagate
    }
  }
  throw PoleProximityError("directional_derivative: unreachable");
}

}  // namespace dynr
