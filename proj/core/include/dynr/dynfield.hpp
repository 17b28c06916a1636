#ifndef DYNR_DYNFIELD_HPP
#define DYNR_DYNFIELD_HPP

#include <functional>

#include "dynr/rmat.hpp"

namespace dynr {

enum class Chart { abelian, sts };

/// Base-manifold point: lambda in subalgebra coordinates, with the cached
/// spectral data of ad(lambda) on l.
struct BasePoint {
  Vec coords;
  Chart chart = Chart::sts;
  SpectralData ad_spectrum;  // of ad(lambda) restricted to l
  double semisimple_defect = 0.0;
};

/// Builds a base point; throws NonSemisimpleError when ad(lambda) on l is not
/// diagonalizable.
BasePoint make_base_point(const LieAlgebra& l, Vec coords, Chart chart);

/// Chart coefficient of the nabla' field: (1/2 ad lambda) coth(1/2 ad lambda) xi.
Vec nabla_prime_coefficient(const LieAlgebra& l, const BasePoint& p, const Vec& xi);

/// Chart coefficient of the conjugation action: (ad lambda) xi.
Vec adjoint_action_coefficient(const LieAlgebra& l, const BasePoint& p,
                               const Vec& xi);

/// Exponential-chart pullbacks of the left/right translation fields:
/// xi^l -> ad/(1 - e^{-ad}) xi,  xi^r -> ad/(e^{ad} - 1) xi.
std::pair<Vec, Vec> left_right_coefficients(const LieAlgebra& l, const BasePoint& p,
                                            const Vec& xi);

/// Chart coefficient of the field generated by eta in l^*:
/// r^r(eta) - r^l(eta) + (1/2)(Omega^l(eta) + Omega^r(eta)).
/// eta is given in covector coordinates over l. eta_sign scales the r_l term
/// and exists for the negative-control scenarios.
Vec eta_field_coefficient(const QuasiTriangular& qt, const BasePoint& p,
                          const Vec& eta, int eta_sign = +1);

using TensorFn = std::function<Tensor2(const Vec& lambda_l)>;

struct DirectionalDerivative {
  Tensor2 value;
  double error_estimate = 0.0;
};

/// Richardson-extrapolated central difference of a tensor-valued function
/// along direction v. Steps h0 and h0/2 with h0 = 1e-4 (1 + |lambda|) unless
/// overridden. Pole-guard failures shrink the step once before giving up.
DirectionalDerivative directional_derivative(const TensorFn& fn, const Vec& lambda,
                                             const Vec& v, double h0 = 0.0);

}  // namespace dynr

#endif
