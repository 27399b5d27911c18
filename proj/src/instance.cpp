#include "fewnomial/instance.hpp"

#include "fewnomial/error.hpp"
#include "fewnomial/random.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace fewnomial {

namespace {

using json = nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw InputError(InputError::Code::malformed, what); }

double number(const json& v, const char* where) {
  if (!v.is_number()) malformed(std::string(where) + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) malformed(std::string(where) + ": non-finite number");
  return x;
}

}  // namespace

Instance parse_instance_text(const std::string& text, const std::string& label_fallback) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("instance must be a JSON object");
  if (!doc.contains("exponents") || !doc.contains("coefficients")) {
    malformed("instance needs \"exponents\" and \"coefficients\"");
  }
  const json& ex = doc["exponents"];
  const json& co = doc["coefficients"];
  if (!ex.is_array() || !co.is_array()) malformed("\"exponents\" and \"coefficients\" must be arrays");
  if (ex.empty()) malformed("empty term list");
  if (ex.size() != co.size()) {
    throw InputError(InputError::Code::dimension_mismatch, "exponents and coefficients differ in length");
  }

  std::size_t width = 0;
  std::vector<Term> terms;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (!ex[i].is_array()) malformed("exponent " + std::to_string(i) + " is not an array");
    if (i == 0) {
      width = ex[i].size();
      if (width == 0) malformed("exponent vectors must be non-empty");
    } else if (ex[i].size() != width) {
      throw InputError(InputError::Code::dimension_mismatch,
                       "exponent " + std::to_string(i) + " has length " + std::to_string(ex[i].size()) +
                           ", expected " + std::to_string(width));
    }
    Vector a(static_cast<Eigen::Index>(width));
    for (std::size_t j = 0; j < width; ++j) a[static_cast<Eigen::Index>(j)] = number(ex[i][j], "exponent entry");
    const double c = number(co[i], "coefficient");
    if (c == 0.0) throw InputError(InputError::Code::zero_coefficient, "coefficient " + std::to_string(i) + " is zero");
    terms.push_back({c, std::move(a)});
  }

  Instance inst{label_fallback, ExponentialSum(static_cast<int>(width), std::move(terms)), Coordinates::z,
                Reduction::cylinder, std::nullopt, std::nullopt};
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) malformed("\"label\" must be a string");
    inst.label = doc["label"].get<std::string>();
  }
  if (doc.contains("coordinates")) {
    const json& c = doc["coordinates"];
    if (c == "z") {
      inst.coordinates = Coordinates::z;
    } else if (c == "x") {
      inst.coordinates = Coordinates::x;
    } else {
      malformed("\"coordinates\" must be \"x\" or \"z\"");
    }
  }
  if (doc.contains("reduce")) {
    const json& r = doc["reduce"];
    if (r == "cylinder") {
      inst.reduction = Reduction::cylinder;
    } else if (r == "ambient") {
      inst.reduction = Reduction::ambient;
    } else {
      malformed("\"reduce\" must be \"cylinder\" or \"ambient\"");
    }
  }
  if (doc.contains("betti")) {
    const json& b = doc["betti"];
    if (!b.is_array()) malformed("\"betti\" must be an array");
    std::vector<int> betti;
    for (const auto& v : b) {
      if (!v.is_number_integer() || v.get<long long>() < 0) malformed("\"betti\" entries must be non-negative integers");
      betti.push_back(v.get<int>());
    }
    inst.known_betti = std::move(betti);
  }
  if (doc.contains("M")) {
    const json& m = doc["M"];
    if (!m.is_array() || m.size() < 2) malformed("\"M\" must be an array of at least two numbers");
    Vector M(static_cast<Eigen::Index>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      M[static_cast<Eigen::Index>(i)] = number(m[i], "M entry");
      if (!(M[static_cast<Eigen::Index>(i)] > 0.0)) malformed("\"M\" entries must be positive");
    }
    inst.base_M = std::move(M);
  }
  return inst;
}

Instance parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open instance file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (const auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (const auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return parse_instance_text(buf.str(), stem);
}

std::string instance_to_json(const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["label"] = inst.label;
  doc["coordinates"] = inst.coordinates == Coordinates::x ? "x" : "z";
  if (inst.reduction == Reduction::ambient) doc["reduce"] = "ambient";
  auto ex = nlohmann::ordered_json::array();
  auto co = nlohmann::ordered_json::array();
  for (const auto& t : inst.raw.terms()) {
    ex.push_back(std::vector<double>(t.exponent.data(), t.exponent.data() + t.exponent.size()));
    co.push_back(t.coefficient);
  }
  doc["exponents"] = std::move(ex);
  doc["coefficients"] = std::move(co);
  if (inst.known_betti) doc["betti"] = *inst.known_betti;
  if (inst.base_M) doc["M"] = std::vector<double>(inst.base_M->data(), inst.base_M->data() + inst.base_M->size());
  return doc.dump(2);
}

Instance random_instance(int n, int l, std::uint64_t seed, const RandomInstanceOptions& options) {
  if (n < 1) throw std::invalid_argument("random_instance: n >= 1 required");
  if (l < 0) throw std::invalid_argument("random_instance: l >= 0 required");
  const auto [clo, chi] = options.coeff_range;
  const auto [elo, ehi] = options.exp_range;
  if (!(clo < chi) || !(elo < ehi)) throw std::invalid_argument("random_instance: empty range");
  if (!(clo < -0.01 || chi > 0.01)) throw std::invalid_argument("random_instance: coefficient range lies inside (-0.01, 0.01)");

  Rng rng(mix_seed(seed, 0x1257A9CEULL));
  const auto coefficient = [&] {
    for (;;) {
      const double c = rng.uniform(clo, chi);
      if (std::abs(c) >= 0.01) return c;
    }
  };
  std::vector<Term> terms;
  terms.push_back({coefficient(), Vector::Zero(n)});
  for (int j = 0; j < n; ++j) terms.push_back({coefficient(), Vector::Unit(n, j)});
  for (int k = 0; k < l; ++k) {
    Vector a(n);
    for (int j = 0; j < n; ++j) a[j] = rng.uniform(elo, ehi);
    terms.push_back({coefficient(), std::move(a)});
  }
  std::ostringstream label;
  label << "random-n" << n << "-l" << l << "-s" << seed;
  return Instance{label.str(), ExponentialSum(n, std::move(terms)), Coordinates::z, Reduction::cylinder, std::nullopt,
                  std::nullopt};
}

NormalizedSum normalize_instance(const Instance& inst) {
  NormalizeOptions opt;
  opt.reduction = inst.reduction;
  return normalize(inst.raw, opt);
}

}  // namespace fewnomial
