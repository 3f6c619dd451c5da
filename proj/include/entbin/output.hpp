#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "entbin/analysis.hpp"
#include "entbin/heterodyne.hpp"

namespace entbin::output {

/// Locale-independent scientific notation with `significant` digits, e.g. 7.608178636e-06.
std::string format_scientific(double value, int significant = 10);
/// Locale-independent fixed notation.
std::string format_fixed(double value, int decimals);

/// Header `N,Pe,Qe,Re,beta_ideal,beta_het`, then one row per sweep point.
void write_sweep_csv(std::ostream& os, const analysis::SweepResult& sweep);

/// Log-scale chart of the three error curves: P_e solid, Q_e dotted, R_e dashed.
/// A crossover abscissa, when given, is marked on the R_e curve.
void write_sweep_svg(std::ostream& os, const analysis::SweepResult& sweep,
                     const analysis::ThresholdResult* crossover);

nlohmann::ordered_json to_json(const heterodyne::SimulationResult& result);
nlohmann::ordered_json to_json(const analysis::ThresholdResult& result);

/// Files written by write_figure1.
struct Figure1Files {
  std::filesystem::path csv;
  std::filesystem::path svg;
  std::optional<analysis::ThresholdResult> crossover;
};

/// Sweeps N over [0, n_max] with `steps` rows, writes figure1.csv and figure1.svg into
/// `out_dir` (created if missing) and marks the R_e/P_e crossover if the range holds one.
/// Throws std::filesystem::filesystem_error or std::ios_base::failure on IO errors.
Figure1Files write_figure1(double n_max, int steps, const std::filesystem::path& out_dir);

/// Locates the first sign change of log R_e - log P_e between sweep rows and refines it.
std::optional<analysis::ThresholdResult> locate_crossover(const analysis::SweepResult& sweep);

}  // namespace entbin::output
