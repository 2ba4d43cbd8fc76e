#include "bellpos/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bellpos::io {
namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string provenance_header(const std::string& subcommand,
                              const nlohmann::json& params) {
  nlohmann::json j;
  j["tool"] = "bellpos";
  j["version"] = kVersion;
  j["subcommand"] = subcommand;
  j["params"] = params;
  return "# " + j.dump();
}

void write_csv(const Table& table, const std::string& path) {
  auto out = open_out(path);
  out << table.header_line << "\n";
  for (size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
}

void write_json(const Table& table, const std::string& path) {
  auto out = open_out(path);
  nlohmann::json j;
  if (!table.header_line.empty() && table.header_line.size() > 2)
    j["provenance"] = nlohmann::json::parse(table.header_line.substr(2));
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  out << j.dump(2) << "\n";
}

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Table t;
  std::string line;
  bool have_columns = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      t.header_line = line;
      continue;
    }
    if (!have_columns) {
      t.columns = split(line, ',');
      have_columns = true;
      continue;
    }
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) row.push_back(std::stod(cell));
    t.rows.push_back(std::move(row));
  }
  return t;
}

nlohmann::json grid_spec_json(const grid::GridSpec& spec) {
  return {{"n", spec.n}, {"x_min", spec.x_min}, {"x_max", spec.x_max}};
}

grid::GridSpec grid_spec_from_json(const nlohmann::json& j) {
  return grid::GridSpec(j.at("n").get<int>(), j.at("x_min").get<double>(),
                        j.at("x_max").get<double>());
}

void write_wavefunction_csv(const grid::WaveFunction2D& psi,
                            const std::string& header,
                            const std::string& path) {
  auto out = open_out(path);
  out << header << "\n";
  out << "q_a,q_b,re,im\n";
  for (int i = 0; i < psi.spec_a.n; ++i)
    for (int j = 0; j < psi.spec_b.n; ++j) {
      const Complex& a = psi.amplitudes(i, j);
      out << format_double(psi.spec_a.x(i)) << ","
          << format_double(psi.spec_b.x(j)) << ","
          << format_double(a.real()) << "," << format_double(a.imag())
          << "\n";
    }
}

grid::WaveFunction2D read_wavefunction_csv(const std::string& path) {
  Table t = read_csv(path);
  if (t.columns != std::vector<std::string>{"q_a", "q_b", "re", "im"})
    throw Error("unexpected wavefunction columns in " + path);
  // infer the product grid from the row structure
  std::vector<double> qa, qb;
  for (const auto& row : t.rows) {
    if (qa.empty() || row[0] != qa.back()) {
      if (qa.empty() || row[0] > qa.back()) qa.push_back(row[0]);
    }
  }
  size_t nb = t.rows.size() / qa.size();
  for (size_t j = 0; j < nb; ++j) qb.push_back(t.rows[j][1]);

  auto spec_from = [](const std::vector<double>& xs) {
    double dx = xs[1] - xs[0];
    return grid::GridSpec(static_cast<int>(xs.size()), xs.front(),
                          xs.back() + dx);
  };
  grid::WaveFunction2D psi;
  psi.spec_a = spec_from(qa);
  psi.spec_b = spec_from(qb);
  psi.amplitudes.resize(psi.spec_a.n, psi.spec_b.n);
  for (size_t r = 0; r < t.rows.size(); ++r) {
    size_t i = r / nb, j = r % nb;
    psi.amplitudes(i, j) = Complex(t.rows[r][2], t.rows[r][3]);
  }
  return psi;
}

void write_wavefunction_polar_csv(const grid::WaveFunction2D& psi,
                                  const std::string& header,
                                  const std::string& path) {
  auto out = open_out(path);
  out << header << "\n";
  out << "q_a,q_b,abs,arg\n";
  for (int i = 0; i < psi.spec_a.n; ++i)
    for (int j = 0; j < psi.spec_b.n; ++j) {
      const Complex& a = psi.amplitudes(i, j);
      out << format_double(psi.spec_a.x(i)) << ","
          << format_double(psi.spec_b.x(j)) << ","
          << format_double(std::abs(a)) << "," << format_double(std::arg(a))
          << "\n";
    }
}

}  // namespace bellpos::io
