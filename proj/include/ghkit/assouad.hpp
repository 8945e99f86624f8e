#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghkit/metric.hpp"

namespace ghkit {

/// Packing of near-identical point sets in [0, R]: every A_i lies within s of
/// A, while distinct A_i, A_j are at least 2s apart even after aligning by an
/// isometry of the line. With beta = 1/2 this defeats any covering bound
/// C * beta^-alpha.
struct WitnessFamily {
  double alpha = 0.0;
  double C = 0.0;
  double R = 0.0;
  std::int64_t M = 0;  // ceil(C * beta^-alpha + 1)
  double beta = 0.5;
  double l = 0.0;  // R / (2(M + 1))
  double r = 0.0;  // l / 6
  double s = 0.0;  // 2r / 3
  Point1DSet A{0.0};
  std::vector<Point1DSet> A_list;
};

inline constexpr std::int64_t kMaxWitnessM = 64;
inline constexpr std::int64_t kMaxVerifiedWitnessM = 12;

/// A = {j l | j = 0..M+1} U {R};
/// A_i = {j l + s | j = 1..M, j != i} U {i l - s} U {0, R/2, R}.
/// Throws InvalidInput for non-positive parameters, GuardExceeded if M > 64.
WitnessFamily generate_witness(double alpha, double C, double R);

struct WitnessReport {
  std::int64_t pairs_checked = 0;
  double max_eh_to_center = 0.0;   // max_i eh(A, A_i)
  double min_eh_between = 0.0;     // min_{i != j} eh(A_i, A_j)
  std::vector<std::string> violations;

  bool clean() const { return violations.empty(); }
};

/// Checks with the exact line solver, each within `eps`:
///  eh(A, A_i) < r and <= s; eh(A_i, A_j) >= 2s; hausdorff(A, A_i) = s;
///  hausdorff(A_i, A_j) = 2s. Reflections are included by the solver.
/// Throws GuardExceeded if M > kMaxVerifiedWitnessM.
WitnessReport verify_witness(const WitnessFamily& w, double eps = kEps);

struct BallCoveringCertificate {
  std::int64_t M = 0;
  double bound = 0.0;  // C * beta^-alpha
  std::string text;
};

/// Throws CertificateUnavailable unless `report` is clean and M > bound.
BallCoveringCertificate ball_covering_certificate(const WitnessFamily& w,
                                                  const WitnessReport& report);

}  // namespace ghkit
