#pragma once

#include <map>
#include <string>
#include <vector>

#include "bellpos/grid.hpp"

#include "json.hpp"

namespace bellpos::io {

inline constexpr const char* kVersion = "0.1.0";

/// Shortest-exact formatting is locale-independent and round-trips through
/// strtod, so identical runs produce byte-identical files.
std::string format_double(double v);

/// One `#`-prefixed JSON provenance line: tool version, subcommand,
/// parameters, seed.
std::string provenance_header(const std::string& subcommand,
                              const nlohmann::json& params);

struct Table {
  std::string header_line;            // provenance
  std::vector<std::string> columns;   // column names
  std::vector<std::vector<double>> rows;
};

void write_csv(const Table& table, const std::string& path);
void write_json(const Table& table, const std::string& path);
Table read_csv(const std::string& path);

nlohmann::json grid_spec_json(const grid::GridSpec& spec);
grid::GridSpec grid_spec_from_json(const nlohmann::json& j);

/// (q_A, q_B, Re Ψ, Im Ψ) rows.
void write_wavefunction_csv(const grid::WaveFunction2D& psi,
                            const std::string& header,
                            const std::string& path);
grid::WaveFunction2D read_wavefunction_csv(const std::string& path);

/// (q_A, q_B, |Ψ|, arg Ψ) rows for plotting.
void write_wavefunction_polar_csv(const grid::WaveFunction2D& psi,
                                  const std::string& header,
                                  const std::string& path);

}  // namespace bellpos::io
