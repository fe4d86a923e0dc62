#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "hardy/io.hpp"
#include "internal.hpp"
#include "json.hpp"

// Canonical corpus: monomials, arcs and unions of arcs, Blaschke factors and
// products, boundary-zero and low-frequency outer functions, and inner*outer
// mixes, all on one fixed grid. Arc placements rotate with the seed; measures,
// amplitudes, and pole locations are fixed so the expected verdicts and
// closed-form factors never depend on it.
namespace hardy {

namespace {

constexpr std::size_t kCorpusGrid = 4096;

template <class F>
CircleFunction from_rule(const Grid& g, F&& rule) {
  std::vector<cplx> s(g.n);
  for (std::size_t j = 0; j < g.n; ++j) s[j] = rule(g.node(j));
  return CircleFunction::from_samples(g, std::move(s));
}

CircleFunction blaschke(const Grid& g, cplx a) {
  return from_rule(g, [a](cplx w) { return (w - a) / (1.0 - std::conj(a) * w); });
}

// (A + B w)^2 with A^2+B^2 = 1 and 2AB = c has modulus 1 + c*cos(theta).
CircleFunction cosine_tilt_outer(const Grid& g, double c) {
  const double root = std::sqrt(1.0 - c * c);
  const double A = std::sqrt((1.0 + root) / 2.0);
  const double B = std::sqrt((1.0 - root) / 2.0);
  return from_rule(g, [&](cplx w) {
    const cplx lin = A + B * w;
    return lin * lin;
  });
}

// (a + b w)^2 with modulus (3 + cos(theta))/4.
CircleFunction quarter_lift_outer(const Grid& g) {
  const double a = (1.0 + std::sqrt(2.0)) / (2.0 * std::sqrt(2.0));
  const double b = (std::sqrt(2.0) - 1.0) / (2.0 * std::sqrt(2.0));
  return from_rule(g, [&](cplx w) {
    const cplx lin = a + b * w;
    return lin * lin;
  });
}

struct PendingItem {
  CorpusItem meta;
  CircleFunction fn;
  CircleFunction phi;    // empty when no closed form
  CircleFunction outer;  // empty when no closed form
};

}  // namespace

std::vector<CorpusItem> generate_corpus(const std::string& dir, std::uint64_t seed) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::IoError, "cannot create directory " + dir);

  const Grid g = Grid::make(kCorpusGrid);
  const std::size_t n = g.n;
  detail::Rng rng(seed);

  const CircleFunction one = constant_function(g, 1.0);
  const CircleFunction z = monomial(g, 1);
  const CircleFunction exp_z = from_rule(g, [](cplx w) { return std::exp(w); });
  const CircleFunction poly = quarter_lift_outer(g);
  const CircleFunction tilt9 = cosine_tilt_outer(g, 2.0 / 9.0);
  const CircleFunction tilt5 = cosine_tilt_outer(g, 1.0 / 5.0);
  const CircleFunction b_half = blaschke(g, 0.5);
  const CircleFunction b_neg3 = blaschke(g, -0.3);
  const CircleFunction b_3 = blaschke(g, 0.3);
  const CircleFunction b_3i = blaschke(g, cplx{0.0, 0.3});

  std::vector<PendingItem> items;
  auto add = [&](const std::string& name, CircleFunction fn,
                 const std::string& verdict, CircleFunction phi,
                 CircleFunction outer, bool approx, const std::string& notes) {
    PendingItem it;
    it.meta.name = name;
    it.meta.file = name + ".fn";
    it.meta.expected_verdict = verdict;
    if (!phi.empty()) it.meta.expected_phi_file = name + ".phi.fn";
    if (!outer.empty()) it.meta.expected_outer_file = name + ".outer.fn";
    it.meta.approx_set = approx;
    it.meta.notes = notes;
    it.fn = std::move(fn);
    it.phi = std::move(phi);
    it.outer = std::move(outer);
    items.push_back(std::move(it));
  };

  // Seed-rotated arc placement; lengths are fixed fractions of the circle.
  auto arc = [&](std::size_t count) {
    return indicator_arc(g, rng.index(n), count);
  };

  add("const_one", one, "simply", one, one, false, "analytic");
  add("mono_z", z, "simply", z, one, false, "analytic");
  add("mono_z2", monomial(g, 2), "simply", monomial(g, 2), one, false, "analytic");
  add("mono_z5", monomial(g, 5), "simply", monomial(g, 5), one, false, "analytic");
  add("mono_zm1", monomial(g, -1), "simply", monomial(g, -1), one, false,
      "conjugate-monomial");

  const CircleFunction near_outer = from_rule(g, [](cplx w) { return 1.0 + 0.5 * w; });
  const CircleFunction near_outer_third =
      from_rule(g, [](cplx w) { return 1.0 + w / 3.0; });
  add("near_outer", near_outer, "simply", one, near_outer, true, "analytic");
  add("near_outer_third", near_outer_third, "simply", one, near_outer_third, true,
      "analytic");
  const CircleFunction one_plus_z = from_rule(g, [](cplx w) { return 1.0 + w; });
  add("outer_one_plus_z", one_plus_z, "simply", one, one_plus_z, false, "analytic");
  add("outer_exp_cos", exp_z, "simply", one, exp_z, true, "analytic");
  add("outer_poly", poly, "simply", one, poly, true, "analytic");
  add("outer_tilt9", tilt9, "simply", one, tilt9, true, "analytic");
  add("outer_tilt5", tilt5, "simply", one, tilt5, true, "analytic");

  add("blaschke_half", b_half, "simply", b_half, one, false, "analytic");
  add("blaschke_03i", b_3i, "simply", b_3i, one, false, "analytic");
  add("blaschke_prod", b_half * b_neg3, "simply", b_half * b_neg3, one, false,
      "analytic");
  add("blaschke_sq", b_half * b_half, "simply", b_half * b_half, one, false,
      "analytic");

  add("inner_outer_mix", z * exp_z, "simply", z, exp_z, true, "analytic");
  add("blaschke_times_outer", b_half * poly, "simply", b_half, poly, true,
      "analytic");
  add("mix_z_tilt", z * tilt9, "simply", z, tilt9, true, "analytic");
  add("mix_bl_tilt", b_3 * tilt5, "simply", b_3, tilt5, true, "analytic");

  add("arc_quarter", arc(n / 4), "doubly", {}, {}, false, "arc-support");
  add("arc_half", arc(n / 2), "doubly", {}, {}, false, "arc-support");
  add("arc_eighth", arc(n / 8), "doubly", {}, {}, false, "arc-support");
  add("arc_three_eighths", arc(3 * n / 8), "doubly", {}, {}, false, "arc-support");
  {
    const std::size_t s = rng.index(n);
    add("arc_union2",
        indicator_arc(g, s, n / 8) + indicator_arc(g, (s + n / 2) % n, n / 4),
        "doubly", {}, {}, false, "arc-support");
  }
  {
    const std::size_t s = rng.index(n);
    add("arc_union3",
        indicator_arc(g, s, n / 16) + indicator_arc(g, (s + n / 4) % n, n / 8) +
            indicator_arc(g, (s + 5 * n / 8) % n, n / 16),
        "doubly", {}, {}, false, "arc-support");
  }
  {
    const CircleFunction chi = arc(n / 4);
    const CircleFunction weight =
        from_rule(g, [](cplx w) { return 2.0 + w.real(); });
    add("arc_weighted", weight * chi, "doubly", {}, {}, false, "arc-support");
  }

  const std::filesystem::path base(dir);
  nlohmann::ordered_json manifest;
  manifest["format"] = "hardy corpus v1";
  manifest["seed"] = seed;
  manifest["grid_size"] = n;
  manifest["items"] = nlohmann::ordered_json::array();

  std::vector<CorpusItem> out;
  for (const PendingItem& it : items) {
    write_function_file((base / it.meta.file).string(), it.fn);
    if (!it.phi.empty()) {
      write_function_file((base / it.meta.expected_phi_file).string(), it.phi);
    }
    if (!it.outer.empty()) {
      write_function_file((base / it.meta.expected_outer_file).string(), it.outer);
    }
    nlohmann::ordered_json entry;
    entry["name"] = it.meta.name;
    entry["file"] = it.meta.file;
    entry["expected_verdict"] = it.meta.expected_verdict;
    entry["expected_phi_file"] = it.meta.expected_phi_file;
    entry["expected_outer_file"] = it.meta.expected_outer_file;
    entry["approx_set"] = it.meta.approx_set;
    entry["notes"] = it.meta.notes;
    manifest["items"].push_back(std::move(entry));
    out.push_back(it.meta);
  }

  std::ofstream mf(base / "manifest.json", std::ios::binary);
  if (!mf) fail(ErrorCode::IoError, "cannot open manifest.json for writing");
  mf << manifest.dump(2) << "\n";
  if (!mf) fail(ErrorCode::IoError, "write failed for manifest.json");
  return out;
}

std::vector<CorpusItem> read_manifest(const std::string& dir) {
  const std::filesystem::path path = std::filesystem::path(dir) / "manifest.json";
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::IoError, "cannot open " + path.string());
  nlohmann::json j;
  try {
    file >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("manifest: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "hardy corpus v1") {
      fail(ErrorCode::ParseError, "manifest: unrecognized format tag");
    }
    std::vector<CorpusItem> out;
    for (const auto& entry : j.at("items")) {
      CorpusItem it;
      it.name = entry.at("name").get<std::string>();
      it.file = entry.at("file").get<std::string>();
      it.expected_verdict = entry.at("expected_verdict").get<std::string>();
      it.expected_phi_file = entry.at("expected_phi_file").get<std::string>();
      it.expected_outer_file = entry.at("expected_outer_file").get<std::string>();
      it.approx_set = entry.at("approx_set").get<bool>();
      it.notes = entry.at("notes").get<std::string>();
      out.push_back(std::move(it));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("manifest: ") + e.what());
  }
}

}  // namespace hardy
