#include "ghkit/assouad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ghkit/errors.hpp"
#include "ghkit/hausdorff1d.hpp"

namespace ghkit {

namespace {

double covering_bound(double alpha, double C, double beta) { return C * std::pow(beta, -alpha); }

}  // namespace

WitnessFamily generate_witness(double alpha, double C, double R) {
  if (!(alpha > 0) || !(C > 0) || !(R > 0) || !std::isfinite(alpha) || !std::isfinite(C) ||
      !std::isfinite(R)) {
    throw InvalidInput("witness parameters alpha, C, R must be positive and finite");
  }
  WitnessFamily w;
  w.alpha = alpha;
  w.C = C;
  w.R = R;
  const double m_real = std::ceil(covering_bound(alpha, C, w.beta) + 1.0);
  if (!(m_real <= static_cast<double>(kMaxWitnessM))) {
    throw GuardExceeded("witness family needs M = " + std::to_string(m_real) + " > " +
                        std::to_string(kMaxWitnessM) + " sets");
  }
  w.M = static_cast<std::int64_t>(m_real);
  w.l = R / (2.0 * static_cast<double>(w.M + 1));
  w.r = w.l / 6.0;
  w.s = 2.0 * w.r / 3.0;

  // (M + 1) l = R / 2; use the exact value so A and every A_i share it.
  std::vector<double> a;
  for (std::int64_t j = 0; j <= w.M; ++j) a.push_back(static_cast<double>(j) * w.l);
  a.push_back(R / 2.0);
  a.push_back(R);
  w.A = Point1DSet(std::move(a));

  for (std::int64_t i = 1; i <= w.M; ++i) {
    std::vector<double> ai{0.0};
    for (std::int64_t j = 1; j <= w.M; ++j) {
      const double base = static_cast<double>(j) * w.l;
      ai.push_back(j == i ? base - w.s : base + w.s);
    }
    ai.push_back(R / 2.0);
    ai.push_back(R);
    w.A_list.emplace_back(std::move(ai));
  }
  return w;
}

WitnessReport verify_witness(const WitnessFamily& w, double eps) {
  if (w.M > kMaxVerifiedWitnessM) {
    throw GuardExceeded("verify_witness is limited to M <= " +
                        std::to_string(kMaxVerifiedWitnessM));
  }
  WitnessReport rep;
  rep.min_eh_between = std::numeric_limits<double>::infinity();
  auto flag = [&](const std::string& what, double got, double want) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": got " << got << ", expected " << want;
    rep.violations.push_back(os.str());
  };
  for (std::size_t i = 0; i < w.A_list.size(); ++i) {
    const std::string tag = "A_" + std::to_string(i + 1);
    const double eh = eh_distance(w.A, w.A_list[i]).value;
    rep.max_eh_to_center = std::max(rep.max_eh_to_center, eh);
    if (!(eh < w.r)) flag("eh(A, " + tag + ") < r", eh, w.r);
    if (eh > w.s + eps) flag("eh(A, " + tag + ") <= s", eh, w.s);
    const double h = hausdorff(w.A, w.A_list[i]);
    if (std::abs(h - w.s) > eps) flag("hausdorff(A, " + tag + ") = s", h, w.s);
  }
  for (std::size_t i = 0; i < w.A_list.size(); ++i) {
    for (std::size_t j = i + 1; j < w.A_list.size(); ++j) {
      const std::string tag = "(A_" + std::to_string(i + 1) + ", A_" + std::to_string(j + 1) + ")";
      ++rep.pairs_checked;
      const double eh = eh_distance(w.A_list[i], w.A_list[j]).value;
      rep.min_eh_between = std::min(rep.min_eh_between, eh);
      if (eh < 2.0 * w.s - eps) flag("eh" + tag + " >= 2s", eh, 2.0 * w.s);
      const double h = hausdorff(w.A_list[i], w.A_list[j]);
      if (std::abs(h - 2.0 * w.s) > eps) flag("hausdorff" + tag + " = 2s", h, 2.0 * w.s);
    }
  }
  if (rep.pairs_checked == 0) rep.min_eh_between = 0.0;
  return rep;
}

BallCoveringCertificate ball_covering_certificate(const WitnessFamily& w,
                                                  const WitnessReport& report) {
  if (!report.clean()) {
    throw CertificateUnavailable("witness verification reported " +
                                 std::to_string(report.violations.size()) + " violations");
  }
  const double bound = covering_bound(w.alpha, w.C, w.beta);
  if (!(static_cast<double>(w.M) > bound)) {
    throw CertificateUnavailable("packing count does not exceed the covering bound");
  }
  std::ostringstream os;
  os.precision(17);
  os << "The open ball of radius r = " << w.r << " around A contains all " << w.M
     << " sets A_i (eh <= s = " << w.s << "). Distinct A_i, A_j are at eh distance >= 2s = "
     << 2.0 * w.s << " > 2 beta r = " << 2.0 * w.beta * w.r
     << ", so no ball of radius beta r holds two of them. Covering the ball needs at least M = "
     << w.M << " balls of radius beta r, more than C beta^-alpha = " << bound << ".";
  return {w.M, bound, os.str()};
}

}  // namespace ghkit
