#include "hardy/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/parallel.hpp"
#include "json.hpp"

namespace hardy {

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_function_file(const std::string& path, const CircleFunction& f,
                         FileKind kind) {
  const std::size_t n = f.size();
  const std::vector<cplx>& rows =
      kind == FileKind::Samples ? f.samples() : f.spectrum();
  std::ostringstream out;
  out << "# circle-function v1\n";
  out << "grid_size " << n << "\n";
  out << "kind " << (kind == FileKind::Samples ? "samples" : "spectrum") << "\n";
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(rows[j].real()) || !std::isfinite(rows[j].imag())) {
      fail(ErrorCode::IoError, "refusing to serialize non-finite values");
    }
    out << j << " " << format_sci(rows[j].real()) << " "
        << format_sci(rows[j].imag()) << "\n";
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  file << out.str();
  if (!file) fail(ErrorCode::IoError, "write failed for " + path);
}

namespace {

std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) return line;
  }
  return {};
}

}  // namespace

CircleFunction read_function_file(const std::string& path, FileKind* kind_out) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::IoError, "cannot open " + path);

  std::string line = next_content_line(file);
  if (line != "# circle-function v1") {
    fail(ErrorCode::ParseError, path + ": missing function-file header");
  }
  line = next_content_line(file);
  std::size_t n = 0;
  {
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag >> n) || tag != "grid_size") {
      fail(ErrorCode::ParseError, path + ": expected grid_size line");
    }
  }
  line = next_content_line(file);
  FileKind kind;
  {
    std::istringstream ss(line);
    std::string tag, value;
    if (!(ss >> tag >> value) || tag != "kind") {
      fail(ErrorCode::ParseError, path + ": expected kind line");
    }
    if (value == "samples") {
      kind = FileKind::Samples;
    } else if (value == "spectrum") {
      kind = FileKind::Spectrum;
    } else {
      fail(ErrorCode::ParseError, path + ": unknown kind '" + value + "'");
    }
  }

  Grid grid = Grid::make(n);  // validates the power-of-two contract
  std::vector<cplx> rows(n);
  for (std::size_t j = 0; j < n; ++j) {
    line = next_content_line(file);
    if (line.empty()) {
      fail(ErrorCode::ParseError,
           path + ": expected " + std::to_string(n) + " rows, found " +
               std::to_string(j));
    }
    std::istringstream ss(line);
    std::size_t idx = 0;
    double re = 0.0, im = 0.0;
    if (!(ss >> idx >> re >> im) || idx != j) {
      fail(ErrorCode::ParseError,
           path + ": malformed row " + std::to_string(j) + ": '" + line + "'");
    }
    std::string extra;
    if (ss >> extra) {
      fail(ErrorCode::ParseError,
           path + ": trailing tokens on row " + std::to_string(j));
    }
    rows[j] = cplx{re, im};
  }
  if (!next_content_line(file).empty()) {
    fail(ErrorCode::ParseError, path + ": trailing content after the last row");
  }
  if (kind_out) *kind_out = kind;
  return kind == FileKind::Samples ? CircleFunction::from_samples(grid, std::move(rows))
                                   : CircleFunction::from_spectrum(grid, std::move(rows));
}

GaugeNormSpec parse_norm_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("norm config: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("variant")) {
      fail(ErrorCode::ParseError, "norm config: missing variant tag");
    }
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "lp") {
      return GaugeNormSpec::lp(j.at("p").get<double>());
    }
    if (variant == "weighted_lp_mix") {
      return GaugeNormSpec::weighted_lp_mix(
          j.at("weights").get<std::vector<double>>(),
          j.at("exponents").get<std::vector<double>>());
    }
    if (variant == "lorentz") {
      if (j.contains("constant")) {
        return GaugeNormSpec::lorentz_with_constant(j.at("p").get<double>(),
                                                    j.at("q").get<double>(),
                                                    j.at("constant").get<double>());
      }
      return GaugeNormSpec::lorentz(j.at("p").get<double>(), j.at("q").get<double>());
    }
    if (variant == "orlicz") {
      YoungTable table = YoungTable::default_table();
      if (j.contains("young_table")) {
        std::vector<double> x, phi;
        for (const auto& pair : j.at("young_table")) {
          x.push_back(pair.at(0).get<double>());
          phi.push_back(pair.at(1).get<double>());
        }
        table = YoungTable(std::move(x), std::move(phi));
      }
      if (j.contains("constant")) {
        return GaugeNormSpec::orlicz_with_constant(std::move(table),
                                                   j.at("constant").get<double>());
      }
      return GaugeNormSpec::orlicz(std::move(table));
    }
    if (variant == "linfinity") {
      return GaugeNormSpec::linfinity();
    }
    fail(ErrorCode::ParseError, "norm config: unknown variant '" + variant + "'");
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("norm config: ") + e.what());
  }
}

GaugeNormSpec load_norm_config(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << file.rdbuf();
  return parse_norm_config(ss.str());
}

ReportBuilder::ReportBuilder(const std::string& command) {
  add("inputs", "command", command);
}

void ReportBuilder::add(const std::string& section, const std::string& key,
                        const std::string& value) {
  if (sections_.find(section) == sections_.end()) order_.push_back(section);
  sections_[section].emplace_back(key, value);
}

void ReportBuilder::add(const std::string& section, const std::string& key,
                        double value) {
  add(section, key, format_sci(value));
}

void ReportBuilder::add(const std::string& section, const std::string& key,
                        std::uint64_t value) {
  add(section, key, std::to_string(value));
}

void ReportBuilder::add_runtime_counters() {
  const Counters c = counters_snapshot();
  add("runtime", "fft_calls", c.fft_calls);
  add("runtime", "norm_evaluations", c.norm_evaluations);
  add("runtime", "ascent_iterations", c.ascent_iterations);
  add("runtime", "subspace_projections", c.subspace_projections);
}

std::string ReportBuilder::str() const {
  std::ostringstream out;
  out << "# hardy report v1\n";
  for (const std::string& section : order_) {
    out << "[" << section << "]\n";
    for (const auto& [key, value] : sections_.at(section)) {
      out << key << " = " << value << "\n";
    }
  }
  return out.str();
}

void ReportBuilder::write(const std::string& path) const {
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  file << str();
  if (!file) fail(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace hardy
