#pragma once

#include "fewnomial/exponential_sum.hpp"
#include "fewnomial/normalize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fewnomial {

/// "z": exponents are taken as-is. "x": each monomial x^a on the positive
/// orthant becomes e^{z . a} under x = e^z, so the data is identical.
enum class Coordinates { z, x };

struct Instance {
  std::string label;
  ExponentialSum raw;
  Coordinates coordinates = Coordinates::z;
  Reduction reduction = Reduction::cylinder;
  std::optional<std::vector<int>> known_betti;
  std::optional<Vector> base_M;  // simplex offsets in the normalized chart
};

/// Schema:
///   {"exponents": [[...], ...], "coefficients": [...],
///    "coordinates": "z" | "x", "label": str, "betti": [int, ...],
///    "M": [M_0, ..., M_n], "reduce": "cylinder" | "ambient"}
/// Only the first two keys are required. Throws InputError.
Instance parse_instance_text(const std::string& text, const std::string& label_fallback = "instance");
Instance parse_instance(const std::string& path);

/// Inverse of parse_instance_text up to number formatting.
std::string instance_to_json(const Instance& inst);

struct RandomInstanceOptions {
  std::pair<double, double> coeff_range{-1.0, 1.0};
  std::pair<double, double> exp_range{-2.0, 2.0};
};

/// Exponents 0, e_1, ..., e_n followed by l uniform vectors in exp_range^n;
/// coefficients uniform in coeff_range with |c| >= 0.01. Deterministic in seed.
Instance random_instance(int n, int l, std::uint64_t seed, const RandomInstanceOptions& options = {});

NormalizedSum normalize_instance(const Instance& inst);

}  // namespace fewnomial
