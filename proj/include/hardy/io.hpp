#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hardy/gauge_norm.hpp"
#include "hardy/grid.hpp"

namespace hardy {

enum class FileKind { Samples, Spectrum };

// Text serialization: header lines then one row "index real imag" per slot,
// values in %.16e (17 significant digits, lowercase scientific). Canonical
// files round-trip byte-identically.
void write_function_file(const std::string& path, const CircleFunction& f,
                         FileKind kind = FileKind::Samples);
CircleFunction read_function_file(const std::string& path,
                                  FileKind* kind_out = nullptr);

std::string format_sci(double v);

// Norm configs are JSON: {"variant": "lp", "p": 2.0}, weighted_lp_mix with
// "weights"/"exponents", lorentz with "p"/"q", orlicz with optional
// "young_table" [[x, Phi(x)], ...], linfinity.
GaugeNormSpec load_norm_config(const std::string& path);
GaugeNormSpec parse_norm_config(const std::string& text);

// Deterministic sectioned text report. Values are formatted once, in
// insertion order; equal inputs give byte-identical files.
class ReportBuilder {
 public:
  explicit ReportBuilder(const std::string& command);
  void add(const std::string& section, const std::string& key,
           const std::string& value);
  void add(const std::string& section, const std::string& key, double value);
  void add(const std::string& section, const std::string& key, std::uint64_t value);
  void add_runtime_counters();  // work counters, not wall-clock
  std::string str() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections_;
};

struct CorpusItem {
  std::string name;
  std::string file;
  std::string expected_verdict;     // "simply" | "doubly"
  std::string expected_phi_file;    // empty when no closed form
  std::string expected_outer_file;  // empty when no closed form
  bool approx_set = false;  // member of the bounded-approximation sweep
  std::string notes;
};

// Writes the canonical corpus (function files, closed-form factor files
// where they exist, manifest.json) into dir; byte-deterministic for a fixed
// seed. Returns the manifest.
std::vector<CorpusItem> generate_corpus(const std::string& dir, std::uint64_t seed);

std::vector<CorpusItem> read_manifest(const std::string& dir);

}  // namespace hardy
