#ifndef DYNR_MATFUN_HPP
#define DYNR_MATFUN_HPP

#include <optional>
#include <span>
#include <utility>

#include "dynr/liealg.hpp"

namespace dynr {

struct NonSemisimpleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleProximityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Eigendecomposition with eigenvalue clustering; projectors are built from
/// SVD null spaces of (A - mu I), which stays well conditioned when a cluster
/// carries a multi-dimensional eigenspace.
struct SpectralData {
  Vec eigenvalues;                  // one representative per cluster
  std::vector<int> multiplicities;  // cluster sizes
  std::vector<Mat> projectors;
  double defect = 0.0;
};

SpectralData spectral_decompose(const Mat& a);  // throws NonSemisimpleError
std::optional<SpectralData> try_spectral_decompose(const Mat& a,
                                                   double* defect_out = nullptr);

/// Scalar holomorphic profile applied spectrally to ad(lambda). The kinds are
/// the coth family used by the r-matrix constructors and the chart fields.
class ScalarFun {
 public:
  enum class Kind {
    CothScaled,      // (eps/2) coth((eps/2) s); poles at (2 pi i / eps) Z
    RationalTrigF0,  // 1/s - (1/2) coth(s/2); removable at 0
    TrigF0,          // (1/2) coth(s/2) - (eps/2) coth((eps/2) s); removable at 0
    ShiftedCoth,     // -(eps/2) coth((eps/2) s + i pi j / n)
    HalfAdCoth,      // (s/2) coth(s/2); value 1 at 0
    ExpChartLeft,    // s / (1 - e^{-s}); value 1 at 0
    ExpChartRight,   // s / (e^s - 1); value 1 at 0
  };

  static ScalarFun coth_scaled(cplx eps);
  static ScalarFun rational_trig_f0();
  static ScalarFun trig_f0(cplx eps);
  static ScalarFun shifted_coth(cplx eps, int j, int n);
  static ScalarFun half_ad_coth();
  static ScalarFun exp_chart_left();
  static ScalarFun exp_chart_right();

  /// Value at s; uses the removable-singularity series for |s| < 1e-3 where
  /// applicable, throws PoleProximityError within pole_guard of a pole.
  cplx eval(cplx s) const;
  double pole_distance(cplx s) const;
  bool odd() const;
  std::string name() const;

  Kind kind() const { return kind_; }
  cplx epsilon() const { return eps_; }

  double pole_guard = 0.1;

 private:
  Kind kind_;
  cplx eps_{1.0};
  int j_ = 0, n_ = 1;
};

/// sum_i f(s_i) P_i; eigenvalue admissibility checked per cluster.
Mat apply_scalar(const ScalarFun& f, const SpectralData& s);

/// f applied to the restriction of A to an A-invariant subspace; returns the
/// operator in subspace coordinates.
Mat apply_scalar_restricted(const ScalarFun& f, const Mat& a, const Mat& subspace);

/// Operator on the full space acting as blocks[k].second(A|_{blocks[k].first});
/// the block bases must jointly span and be A-invariant.
Mat apply_scalar_blocks(const Mat& a,
                        std::span<const std::pair<Mat, ScalarFun>> blocks);

}  // namespace dynr

#endif
