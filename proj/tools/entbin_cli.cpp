// entbin: error probabilities of binary coherent and twin-beam channels.
//
// Exit codes: 0 success, 1 usage error, 2 numerical-check failure, 3 IO error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "entbin/analysis.hpp"
#include "entbin/channels.hpp"
#include "entbin/errors.hpp"
#include "entbin/heterodyne.hpp"
#include "entbin/output.hpp"

namespace fs = std::filesystem;
using entbin::output::format_fixed;
using entbin::output::format_scientific;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;
constexpr int kIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path default_out_dir() {
  if (const char* env = std::getenv("ENTBIN_OUT"); env != nullptr && *env != '\0') return env;
  return fs::current_path();
}

fs::path resolve(const std::string& flag, const char* default_name) {
  if (!flag.empty()) return flag;
  return default_out_dir() / default_name;
}

void write_file(const fs::path& path, const std::string& body) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << body;
  f.close();
  if (!f) throw IoError("failed writing " + path.string());
}

std::string both(double v) { return format_fixed(v, 10) + "  (" + format_scientific(v) + ")"; }

int cmd_probabilities(double n, std::optional<double> beta, const std::string& format) {
  const double b_ideal = beta.value_or(entbin::channels::beta_opt_ideal(n));
  const double b_het = beta.value_or(entbin::heterodyne::beta_opt_het(n));
  const double pe = entbin::channels::pe_coherent(n);
  const double qe = entbin::channels::qe_ideal(entbin::ChannelParams(n, b_ideal));
  const double re = entbin::heterodyne::re_heterodyne(entbin::ChannelParams(n, b_het));

  if (format == "json") {
    nlohmann::ordered_json j;
    j["N"] = n;
    j["beta_ideal"] = b_ideal;
    j["beta_het"] = b_het;
    j["Pe"] = pe;
    j["Qe"] = qe;
    j["Re"] = re;
    j["Re_below_Pe"] = re < pe;
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "N          = " << both(n) << '\n'
            << "beta_ideal = " << both(b_ideal) << (beta ? "  [given]" : "  [optimal]") << '\n'
            << "beta_het   = " << both(b_het) << (beta ? "  [given]" : "  [optimal]") << '\n'
            << "Pe         = " << both(pe) << '\n'
            << "Qe         = " << both(qe) << '\n'
            << "Re         = " << both(re) << '\n'
            << (re < pe ? "Re < Pe: heterodyne twin-beam channel beats the coherent channel\n"
                        : "Re >= Pe: coherent channel is better\n");
  return kOk;
}

int cmd_sweep(double n_min, double n_max, int steps, const std::string& out) {
  const auto data = entbin::analysis::sweep(n_min, n_max, steps);
  std::ostringstream csv;
  entbin::output::write_sweep_csv(csv, data);
  const fs::path path = resolve(out, "sweep.csv");
  write_file(path, csv.str());
  std::cout << "wrote " << data.rows.size() << " rows to " << path.string() << '\n';
  return kOk;
}

int cmd_threshold(const std::string& comparison, double lo, double hi, std::optional<double> beta,
                  const std::string& out, const std::string& format) {
  const auto kind = comparison == "qe-vs-pe" ? entbin::analysis::Comparison::QE_VS_PE
                                             : entbin::analysis::Comparison::RE_VS_PE;
  const auto t = entbin::analysis::find_threshold(kind, lo, hi, beta);
  const auto j = entbin::output::to_json(t);
  if (!out.empty()) write_file(out, j.dump(2) + "\n");
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << entbin::analysis::to_string(kind) << " crossover at N = " << format_fixed(t.crossover_n, 10)
              << " (bracket [" << lo << ", " << hi << "], residual " << format_scientific(t.residual, 3)
              << ")\n";
  }
  return kOk;
}

int cmd_simulate(double n, std::optional<double> beta, std::uint64_t samples, std::uint64_t seed,
                 std::uint64_t chunk, unsigned threads, const std::string& out,
                 const std::string& format) {
  const entbin::ChannelParams params(n, beta.value_or(entbin::heterodyne::beta_opt_het(n)));
  const entbin::heterodyne::MonteCarloConfig config{seed, samples, chunk, threads};
  const auto result = entbin::heterodyne::simulate(params, config);
  const double closed = entbin::heterodyne::re_heterodyne(params);
  // Deviation in units of the binomial standard error at the closed-form rate.
  const double sigma = std::sqrt(closed * (1.0 - closed) / static_cast<double>(samples));
  const double dev = result.empirical_error_rate - closed;
  const double z = sigma > 0.0 ? dev / sigma : (dev == 0.0 ? 0.0 : INFINITY);
  const bool ok = std::abs(z) <= 4.0;

  auto j = entbin::output::to_json(result);
  j["N"] = n;
  j["beta"] = params.entanglement_fraction();
  j["chunk_size"] = chunk;
  j["closed_form_Re"] = closed;
  j["z_score"] = std::isfinite(z) ? nlohmann::ordered_json(z) : nlohmann::ordered_json(nullptr);
  j["consistent"] = ok;
  write_file(resolve(out, "simulation.json"), j.dump(2) + "\n");
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "empirical Re = " << format_scientific(result.empirical_error_rate) << " +/- "
              << format_scientific(result.std_error, 3) << "\nclosed-form Re = " << format_scientific(closed)
              << "\nz = " << (std::isfinite(z) ? format_fixed(z, 3) : std::string("inf"))
              << (ok ? "  (consistent)\n" : "  (INCONSISTENT)\n");
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_figure1(double n_max, int steps, const std::string& out) {
  const fs::path dir = out.empty() ? default_out_dir() : fs::path(out);
  try {
    const auto files = entbin::output::write_figure1(n_max, steps, dir);
    std::cout << "wrote " << files.csv.string() << " and " << files.svg.string() << '\n';
    if (files.crossover) {
      std::cout << "Re/Pe crossover at N = " << format_fixed(files.crossover->crossover_n, 6) << '\n';
    }
  } catch (const fs::filesystem_error& e) {
    throw IoError(e.what());
  } catch (const std::ios_base::failure& e) {
    throw IoError(e.what());
  }
  return kOk;
}

int cmd_verify() {
  bool ok = true;
  for (const auto& c : entbin::analysis::run_consistency_checks()) {
    const char* status = c.documented_discrepancy ? "NOTE" : (c.passed ? "PASS" : "FAIL");
    std::cout << status << "  " << c.name << "  max deviation " << format_scientific(c.max_deviation, 3);
    if (c.documented_discrepancy) {
      std::cout << "  (documented discrepancy, not a failure)";
    } else {
      std::cout << "  tolerance " << format_scientific(c.tolerance, 3);
    }
    std::cout << '\n';
    ok = ok && (c.passed || c.documented_discrepancy);
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary communication over coherent and twin-beam entangled channels"};
  app.require_subcommand(1);

  double n = 0.0;
  std::optional<double> beta;
  std::string format = "text";
  std::string out;

  auto* prob = app.add_subcommand("probabilities", "Print Pe, Qe and Re at one photon number");
  prob->add_option("--n", n, "Photon number N")->required()->check(CLI::NonNegativeNumber);
  prob->add_option("--beta", beta, "Entanglement fraction (default: optimal)")->check(CLI::Range(0.0, 1.0));
  prob->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  double n_min = 0.0;
  double n_max = 10.0;
  int steps = 200;
  auto* sw = app.add_subcommand("sweep", "Tabulate error probabilities over N as CSV");
  sw->add_option("--n-min", n_min)->check(CLI::NonNegativeNumber);
  sw->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  sw->add_option("--steps", steps)->check(CLI::Range(2, 10'000'000));
  sw->add_option("--out", out, "CSV path (default: $ENTBIN_OUT/sweep.csv)");

  std::string comparison = "re-vs-pe";
  double lo = 3.0;
  double hi = 8.0;
  auto* th = app.add_subcommand("threshold", "Locate the photon number where a curve crosses Pe");
  th->add_option("--comparison", comparison)->check(CLI::IsMember({"re-vs-pe", "qe-vs-pe"}));
  th->add_option("--lo", lo)->check(CLI::NonNegativeNumber);
  th->add_option("--hi", hi)->check(CLI::PositiveNumber);
  th->add_option("--beta", beta, "Fixed entanglement fraction (default: optimal)")->check(CLI::Range(0.0, 1.0));
  th->add_option("--out", out, "Optional JSON output path");
  th->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t chunk = 1 << 16;
  unsigned threads = 0;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo run of the heterodyne threshold receiver");
  sim->add_option("--n", n, "Photon number N")->required()->check(CLI::NonNegativeNumber);
  sim->add_option("--beta", beta, "Entanglement fraction (default: optimal)")->check(CLI::Range(0.0, 1.0));
  sim->add_option("--samples", samples)->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed);
  sim->add_option("--chunk-size", chunk)->check(CLI::PositiveNumber);
  sim->add_option("--threads", threads, "Worker threads (0: all cores); does not change the result");
  sim->add_option("--out", out, "JSON path (default: $ENTBIN_OUT/simulation.json)");
  sim->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* fig = app.add_subcommand("figure1", "Write figure1.csv and figure1.svg");
  fig->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  fig->add_option("--steps", steps)->check(CLI::Range(2, 10'000'000));
  fig->add_option("--out", out, "Output directory (default: $ENTBIN_OUT or the working directory)");

  auto* ver = app.add_subcommand("verify", "Run the numerical consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (prob->parsed()) return cmd_probabilities(n, beta, format);
    if (sw->parsed()) return cmd_sweep(n_min, n_max, steps, out);
    if (th->parsed()) return cmd_threshold(comparison, lo, hi, beta, out, format);
    if (sim->parsed()) return cmd_simulate(n, beta, samples, seed, chunk, threads, out, format);
    if (fig->parsed()) return cmd_figure1(n_max, steps, out);
    if (ver->parsed()) return cmd_verify();
  } catch (const IoError& e) {
    std::cerr << "entbin: " << e.what() << '\n';
    return kIo;
  } catch (const entbin::Error& e) {
    std::cerr << "entbin: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
