#include "entbin/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entbin/channels.hpp"
#include "entbin/errors.hpp"
#include "entbin/fock.hpp"
#include "entbin/heterodyne.hpp"
#include "entbin/special_functions.hpp"
#include "entbin/srm.hpp"

namespace entbin::analysis {

namespace {

double log_curve(Comparison comparison, double n, std::optional<double> beta) {
  switch (comparison) {
    case Comparison::RE_VS_PE:
      return heterodyne::log_re_heterodyne(ChannelParams(n, beta.value_or(heterodyne::beta_opt_het(n))));
    case Comparison::QE_VS_PE:
      if (beta) return channels::log_qe_ideal(ChannelParams(n, *beta));
      return channels::log_qe_optimal(n);
  }
  throw DomainError("log_curve: unknown comparison");
}

}  // namespace

std::string to_string(Comparison c) {
  return c == Comparison::RE_VS_PE ? "RE_VS_PE" : "QE_VS_PE";
}

std::string to_string(AsymptoteKind k) {
  switch (k) {
    case AsymptoteKind::PE: return "PE";
    case AsymptoteKind::QE: return "QE";
    case AsymptoteKind::RE_PAPER: return "RE_PAPER";
    case AsymptoteKind::RE_CONSISTENT: return "RE_CONSISTENT";
  }
  return "?";
}

SweepResult sweep(double n_min, double n_max, int steps) {
  if (!(n_min >= 0.0 && n_min < n_max) || !std::isfinite(n_max)) {
    throw DomainError("sweep: need 0 <= n_min < n_max");
  }
  if (steps < 2) throw DomainError("sweep: need steps >= 2");
  SweepResult out;
  out.rows.reserve(static_cast<std::size_t>(steps));
  const double h = (n_max - n_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double n = i == steps - 1 ? n_max : n_min + i * h;
    const double b_ideal = channels::beta_opt_ideal(n);
    const double b_het = heterodyne::beta_opt_het(n);
    out.rows.push_back({n, channels::pe_coherent(n), channels::qe_optimal(n),
                        heterodyne::re_heterodyne(ChannelParams(n, b_het)), b_ideal, b_het});
  }
  return out;
}

double log_difference(Comparison comparison, double n, std::optional<double> beta) {
  return log_curve(comparison, n, beta) - channels::log_pe_coherent(n);
}

ThresholdResult find_threshold(Comparison comparison, double lo, double hi,
                               std::optional<double> beta) {
  if (!(lo >= 0.0 && lo < hi)) throw DomainError("find_threshold: need 0 <= lo < hi");
  const special::ScalarTolerance tol{1e-13, 1e-15, 400};
  double root;
  if (comparison == Comparison::QE_VS_PE && !beta) {
    root = special::bisect_root([](double n) { return (n - 1.0) / (2.0 * n); }, lo, hi, tol);
  } else {
    root = special::bisect_root([&](double n) { return log_difference(comparison, n, beta); }, lo,
                                hi, tol);
  }
  return {root, lo, hi, log_difference(comparison, root, beta), comparison};
}

double asymptote_ratio(AsymptoteKind kind, double n) {
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("asymptote_ratio: need N > 0");
  const double log_quarter = std::log(0.25);
  switch (kind) {
    case AsymptoteKind::PE:
      return std::exp(channels::log_pe_coherent(n) - (log_quarter - 2.0 * n));
    case AsymptoteKind::QE:
      return std::exp(channels::log_qe_optimal(n) - (log_quarter - 0.5 * (1.0 + n) * (1.0 + n)));
    case AsymptoteKind::RE_PAPER: {
      const ChannelParams p(n, heterodyne::beta_opt_het(n));
      const double log_asym = -std::log(std::sqrt(2.0 * std::numbers::pi) * n) - n * n / 8.0;
      return std::exp(heterodyne::log_re_heterodyne(p) - log_asym);
    }
    case AsymptoteKind::RE_CONSISTENT: {
      const ChannelParams p(n, heterodyne::beta_opt_het(n));
      const double x = heterodyne::erf_argument(p);
      const double log_asym = -x * x - std::log(2.0 * x * std::sqrt(std::numbers::pi));
      return std::exp(heterodyne::log_re_heterodyne(p) - log_asym);
    }
  }
  throw DomainError("asymptote_ratio: unknown kind");
}

std::vector<CheckResult> run_consistency_checks() {
  std::vector<CheckResult> out;
  const auto add = [&out](std::string name, double dev, double tol) {
    out.push_back({std::move(name), dev <= tol, dev, tol});
  };

  {
    const fock::TruncationPolicy policy{1e-14, 512};
    double dev = 0.0;
    for (double beta : {0.0, 0.25, 0.5, 0.75}) {
      for (double n : {0.5, 1.0, 2.0, 4.0}) {
        const ChannelParams p(n, beta);
        const auto twb = fock::twb_state(p.lambda(), policy);
        const auto shifted = fock::displace_mode_a(twb, p.alpha(), policy);
        const double overlap_sq = std::norm(fock::inner_product(twb, shifted));
        dev = std::max(dev, std::abs(overlap_sq - std::exp(-2.0 * n * (1.0 - beta) * (1.0 + beta * n))));
      }
    }
    add("two-mode overlap vs closed-form exponent", dev, 1e-8);
  }

  {
    double dev = 0.0;
    for (double n : {0.1, 0.5, 1.0, 2.0, 4.0}) {
      const auto psi1 = fock::coherent_state(0.0);
      const auto psi2 = fock::coherent_state(std::sqrt(2.0 * n));
      const double srm_pe = srm::srm_error_probability(srm::square_root_measurement(psi1, psi2), psi1, psi2);
      dev = std::max(dev, std::abs(srm_pe - srm::helstrom_bound(std::exp(-2.0 * n))));
    }
    add("square-root measurement vs Helstrom bound", dev, 1e-10);
  }

  const special::ScalarTolerance fine{1e-10, 1e-14, 400};
  {
    double dev = 0.0;
    for (double n : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
      const auto best = special::golden_section_max(
          [n](double b) { return (1.0 - b) * (1.0 + b * n); }, 0.0, 1.0, fine);
      dev = std::max(dev, std::abs(best.x - channels::beta_opt_ideal(n)));
    }
    add("ideal optimal fraction vs numeric maximizer", dev, 1e-4);
  }
  {
    double dev = 0.0;
    for (double n : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
      const auto best = special::golden_section_max(
          [n](double b) { return heterodyne::erf_argument(ChannelParams(n, b)); }, 0.0, 1.0, fine);
      dev = std::max(dev, std::abs(best.x - heterodyne::beta_opt_het(n)));
    }
    add("heterodyne optimal fraction vs numeric maximizer", dev, 1e-4);
  }
  {
    double dev = 0.0;
    for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
      for (double delta : {0.3, 0.7, 1.0}) {
        const auto best = special::golden_section_max(
            [&](double t) {
              const auto [r12, r21] = heterodyne::error_components(alpha, delta, t);
              return -std::log(r12 + r21);
            },
            0.0, alpha, fine);
        dev = std::max(dev, std::abs(best.x - 0.5 * alpha));
      }
    }
    add("threshold alpha/2 vs numeric minimizer", dev, 1e-6);
  }

  add("P_e asymptote ratio at N=15", std::abs(asymptote_ratio(AsymptoteKind::PE, 15.0) - 1.0), 1e-6);
  add("Q_e asymptote ratio at N=15", std::abs(asymptote_ratio(AsymptoteKind::QE, 15.0) - 1.0), 1e-6);
  add("R_e erfc-tail asymptote ratio at N=20",
      std::abs(asymptote_ratio(AsymptoteKind::RE_CONSISTENT, 20.0) - 1.0), 0.05);

  {
    const double ratio = asymptote_ratio(AsymptoteKind::RE_PAPER, 5.2);
    out.push_back({"R_e printed asymptote ratio at N=5.2", true, std::abs(ratio - 1.0), 0.0, true});
  }

  {
    const auto t = find_threshold(Comparison::RE_VS_PE, 3.0, 8.0);
    const double dev = t.crossover_n < 5.1 ? 5.1 - t.crossover_n
                       : t.crossover_n > 5.35 ? t.crossover_n - 5.35 : 0.0;
    add("R_e/P_e crossover inside [5.1, 5.35]", dev, 0.0);
  }
  return out;
}

}  // namespace entbin::analysis
