#include "entbin/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "entbin/errors.hpp"

namespace entbin::output {

std::string format_scientific(double value, int significant) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::scientific, std::max(0, significant - 1));
  return std::string(buf.data(), res.ptr);
}

std::string format_fixed(double value, int decimals) {
  std::array<char, 512> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, decimals);
  return std::string(buf.data(), res.ptr);
}

void write_sweep_csv(std::ostream& os, const analysis::SweepResult& sweep) {
  os << "N,Pe,Qe,Re,beta_ideal,beta_het\n";
  for (const auto& r : sweep.rows) {
    os << format_scientific(r.n) << ',' << format_scientific(r.pe) << ',' << format_scientific(r.qe)
       << ',' << format_scientific(r.re) << ',' << format_scientific(r.beta_ideal) << ','
       << format_scientific(r.beta_het) << '\n';
  }
}

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 770.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 530.0;

struct Axes {
  double n_lo;
  double n_hi;
  int decade_lo;  // log10 lower bound, the upper bound is 0

  double x(double n) const { return kLeft + (n - n_lo) / (n_hi - n_lo) * (kRight - kLeft); }
  double y(double p) const {
    const double lp = p > 0.0 ? std::max(std::log10(p), static_cast<double>(decade_lo)) : decade_lo;
    return kTop + (0.0 - lp) / (0.0 - decade_lo) * (kBottom - kTop);
  }
};

std::string px(double v) { return format_fixed(v, 2); }

}  // namespace

void write_sweep_svg(std::ostream& os, const analysis::SweepResult& sweep,
                     const analysis::ThresholdResult* crossover) {
  if (sweep.rows.size() < 2) throw DomainError("write_sweep_svg: need at least two rows");
  double min_p = 0.5;
  for (const auto& r : sweep.rows) {
    for (double p : {r.pe, r.qe, r.re}) {
      if (p > 0.0) min_p = std::min(min_p, p);
    }
  }
  const Axes ax{sweep.rows.front().n, sweep.rows.back().n,
                std::min(-1, static_cast<int>(std::floor(std::log10(min_p))))};

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << px(kWidth) << "\" height=\"" << px(kHeight)
     << "\" fill=\"white\"/>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";

  const int decades = -ax.decade_lo;
  const int label_every = std::max(1, (decades + 14) / 15);
  for (int d = ax.decade_lo; d <= 0; ++d) {
    const double y = ax.y(std::pow(10.0, d));
    os << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(y) << "\" x2=\"" << px(kRight) << "\" y2=\""
       << px(y) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    if ((-d) % label_every == 0) {
      os << "<text x=\"" << px(kLeft - 8) << "\" y=\"" << px(y + 4)
         << "\" text-anchor=\"end\">1e" << d << "</text>\n";
    }
  }
  for (int i = 0; i <= 10; ++i) {
    const double n = ax.n_lo + i * (ax.n_hi - ax.n_lo) / 10.0;
    const double x = ax.x(n);
    os << "<line x1=\"" << px(x) << "\" y1=\"" << px(kBottom) << "\" x2=\"" << px(x) << "\" y2=\""
       << px(kBottom + 5) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << px(x) << "\" y=\"" << px(kBottom + 20) << "\" text-anchor=\"middle\">"
       << format_fixed(n, 2) << "</text>\n";
  }
  os << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\"" << px(kRight - kLeft)
     << "\" height=\"" << px(kBottom - kTop) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "<text x=\"" << px(0.5 * (kLeft + kRight)) << "\" y=\"" << px(kBottom + 45)
     << "\" text-anchor=\"middle\">photon number N</text>\n";
  os << "<text x=\"20\" y=\"" << px(0.5 * (kTop + kBottom))
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << px(0.5 * (kTop + kBottom))
     << ")\">error probability</text>\n";
  os << "</g>\n";

  struct Series {
    const char* name;
    double analysis::SweepRow::*field;
    const char* dash;
  };
  const std::array<Series, 3> series{{{"Pe", &analysis::SweepRow::pe, ""},
                                      {"Qe", &analysis::SweepRow::qe, "2,4"},
                                      {"Re", &analysis::SweepRow::re, "8,6"}}};
  for (const Series& s : series) {
    os << "<polyline id=\"" << s.name << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
    if (*s.dash != '\0') os << " stroke-dasharray=\"" << s.dash << "\"";
    os << " points=\"";
    bool first = true;
    for (const auto& r : sweep.rows) {
      if (!first) os << ' ';
      first = false;
      os << px(ax.x(r.n)) << ',' << px(ax.y(r.*s.field));
    }
    os << "\"/>\n";
  }

  // legend
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double y = kTop + 20.0 + 18.0 * static_cast<double>(i);
    os << "<line x1=\"" << px(kRight - 150) << "\" y1=\"" << px(y) << "\" x2=\"" << px(kRight - 110)
       << "\" y2=\"" << px(y) << "\" stroke=\"black\" stroke-width=\"1.5\"";
    if (*series[i].dash != '\0') os << " stroke-dasharray=\"" << series[i].dash << "\"";
    os << "/>\n<text x=\"" << px(kRight - 100) << "\" y=\"" << px(y + 4)
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[i].name << "</text>\n";
  }

  if (crossover != nullptr) {
    const double n = crossover->crossover_n;
    const double p = heterodyne::re_heterodyne(ChannelParams(n, heterodyne::beta_opt_het(n)));
    os << "<circle id=\"crossover\" cx=\"" << px(ax.x(n)) << "\" cy=\"" << px(ax.y(p))
       << "\" r=\"5\" fill=\"none\" stroke=\"red\" stroke-width=\"2\" data-n=\""
       << format_scientific(n) << "\"/>\n";
    os << "<text x=\"" << px(ax.x(n) + 8) << "\" y=\"" << px(ax.y(p) - 8)
       << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"red\">N = " << format_fixed(n, 3)
       << "</text>\n";
  }
  os << "</svg>\n";
}

nlohmann::ordered_json to_json(const heterodyne::SimulationResult& r) {
  nlohmann::ordered_json j;
  j["empirical_error_rate"] = r.empirical_error_rate;
  j["errors_when_psi1"] = r.errors_when_psi1;
  j["errors_when_psi2"] = r.errors_when_psi2;
  j["n_samples"] = r.n_samples;
  j["std_error"] = r.std_error;
  j["seed"] = r.seed;
  return j;
}

nlohmann::ordered_json to_json(const analysis::ThresholdResult& r) {
  nlohmann::ordered_json j;
  j["comparison"] = analysis::to_string(r.comparison);
  j["crossover_N"] = r.crossover_n;
  j["bracket"] = {r.lo, r.hi};
  j["residual"] = r.residual;
  return j;
}

std::optional<analysis::ThresholdResult> locate_crossover(const analysis::SweepResult& sweep) {
  const auto& rows = sweep.rows;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].n <= 0.0) continue;
    const double a = analysis::log_difference(analysis::Comparison::RE_VS_PE, rows[i - 1].n);
    const double b = analysis::log_difference(analysis::Comparison::RE_VS_PE, rows[i].n);
    if (std::signbit(a) != std::signbit(b)) {
      return analysis::find_threshold(analysis::Comparison::RE_VS_PE, rows[i - 1].n, rows[i].n);
    }
  }
  return std::nullopt;
}

Figure1Files write_figure1(double n_max, int steps, const std::filesystem::path& out_dir) {
  if (!(n_max > 0.0)) throw DomainError("figure1: n_max must be > 0");
  const auto data = analysis::sweep(0.0, n_max, steps);
  Figure1Files files{out_dir / "figure1.csv", out_dir / "figure1.svg", locate_crossover(data)};

  std::filesystem::create_directories(out_dir);
  const auto write = [](const std::filesystem::path& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    f << body;
    f.close();
    if (!f) throw std::ios_base::failure("failed writing " + path.string());
  };
  std::ostringstream csv;
  write_sweep_csv(csv, data);
  write(files.csv, csv.str());
  std::ostringstream svg;
  write_sweep_svg(svg, data, files.crossover ? &*files.crossover : nullptr);
  write(files.svg, svg.str());
  return files;
}

}  // namespace entbin::output
