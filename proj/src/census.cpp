#include "fewnomial/bounds.hpp"
#include "fewnomial/critical.hpp"
#include "fewnomial/error.hpp"
#include "fewnomial/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fewnomial {

namespace {

std::string subset_string(const Subset& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

// Largest absolute gradient contribution of any equation at w; the scale the
// Jacobian's smallest singular value is judged against.
double jacobian_scale(const CriticalSystem& sys, const Vector& w) {
  double scale = 0.0;
  for (const auto& e : sys.equations) {
    double s = 0.0;
    for (const auto& t : e.terms()) s += std::abs(t.coefficient) * t.exponent.norm() * std::exp(t.exponent.dot(w));
    scale = std::max(scale, s);
  }
  return scale;
}

bool has_nonconstant_term(const ExponentialSum& sum) {
  return std::any_of(sum.terms().begin(), sum.terms().end(),
                     [](const Term& t) { return t.exponent.norm() > 0.0; });
}

StratumCensus census_stratum(const NormalizedSum& ns, const SimplexSpec& M, const Direction& u, const Subset& S,
                             const CensusConfig& cfg) {
  const int dim = ns.dim();
  const StratumSpec st = restrict(ns, M, S);
  StratumCensus sc;
  sc.S = S;
  sc.face_dim = st.face_dim();
  sc.terms = static_cast<int>(st.restricted.size());
  sc.bound = per_stratum_bound(dim, static_cast<int>(S.size()), st.contains_zero(), ns.l).value;

  if (st.restricted.empty()) {
    throw GenericityError(GenericityError::Target::simplex, "phi vanishes identically on face " + subset_string(S));
  }
  if (!has_nonconstant_term(st.restricted)) return sc;  // nonzero constant: Z_S is empty

  const Vector u_face = restrict_direction(u.u, st);
  const CriticalSystem sys = critical_system(st, u_face);
  const FaceBox box = face_box(st, M);

  SolveConfig scfg = cfg.solve;
  scfg.stream = mix_seed(u.seed, hash_subset(S));
  const int base = scfg.starts > 0 ? scfg.starts : default_starts(sc.face_dim);
  SolveResult result;
  extend_multistart(sys, box, scfg, 0, base, result);
  sc.starts_history.push_back(result.starts);
  sc.count_history.push_back(static_cast<int>(result.roots.size()));
  if (cfg.stability_check) {
    sc.stable = false;
    for (int round = 0; round < cfg.max_stability_rounds && !sc.stable; ++round) {
      const int before = static_cast<int>(result.roots.size());
      extend_multistart(sys, box, scfg, result.starts, result.starts, result);  // doubles the start count
      sc.starts_history.push_back(result.starts);
      sc.count_history.push_back(static_cast<int>(result.roots.size()));
      sc.stable = static_cast<int>(result.roots.size()) == before;
    }
  }
  sc.warnings = result.warnings;
  sc.root_count = static_cast<int>(result.roots.size());
  sc.within_bound = sc.root_count <= sc.bound;
  if (!sc.within_bound) {
    std::ostringstream msg;
    msg << "stratum " << subset_string(S) << " has " << sc.root_count << " critical points, bound is " << sc.bound;
    throw BoundViolation(msg.str());
  }

  const double face_tol = cfg.face_tol * std::max(1.0, M.extent());
  for (const auto& root : result.roots) {
    const Vector z = st.chart.apply(root.w);
    const FaceClass fc = face_classify(M, z, face_tol);
    if (fc.status == FaceStatus::exterior) continue;
    if (fc.active != S) {
      throw GenericityError(GenericityError::Target::simplex,
                            "critical point of stratum " + subset_string(S) + " lies on a smaller face");
    }
    if (root.jacobian_min_sv <= cfg.nondegeneracy_tol * jacobian_scale(sys, root.w)) {
      throw GenericityError(GenericityError::Target::direction,
                            "degenerate critical system on stratum " + subset_string(S));
    }
    CriticalRecord rec;
    rec.S = S;
    rec.z = z;
    rec.face_coords = root.w;
    rec.value = u.u.dot(z);
    rec.residual = root.residual;
    rec.jacobian_min_sv = root.jacobian_min_sv;
    rec.morse_index = morse_index(st.restricted, root.w, u_face);
    if (S.empty()) {
      rec.contributing = true;
    } else {
      const auto gens = cone_generators(z, S, ns);
      for (const auto& w : gens) rec.cone_derivatives.push_back(u.u.dot(w));
      rec.contributing = is_contributing(u.u, S, gens, cfg.genericity_tol);
    }
    sc.records.push_back(std::move(rec));
  }
  return sc;
}

}  // namespace

CensusReport census_once(const NormalizedSum& ns, const SimplexSpec& M, const Direction& u, const CensusConfig& cfg) {
  const int dim = ns.dim();
  if (M.dim() != dim) throw std::invalid_argument("census: simplex dimension differs from the sum");
  if (u.u.size() != dim) throw std::invalid_argument("census: direction dimension differs from the sum");

  CensusReport report;
  report.direction = u;
  report.requested_seed = u.seed;
  report.M = M.M();
  report.n = ns.n;
  report.l = ns.l;
  report.dim = dim;
  for (const auto& S : enumerate_strata(dim)) report.strata.push_back(census_stratum(ns, M, u, S, cfg));

  std::vector<double> values;
  for (const auto& st : report.strata) {
    report.stable = report.stable && st.stable;
    for (const auto& r : st.records) {
      values.push_back(r.value);
      report.record_count += 1;
      report.contributing_count += r.contributing ? 1 : 0;
    }
  }
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] <= cfg.distinct_value_tol * std::max(1.0, std::abs(values[i]))) {
      throw GenericityError(GenericityError::Target::direction, "critical values are not distinct");
    }
  }
  return report;
}

CensusReport morse_census(const NormalizedSum& ns, const SimplexSpec& M, const Direction& u, const CensusConfig& cfg) {
  std::vector<std::string> diagnostics;
  for (int attempt = 0; attempt <= cfg.max_direction_redraws; ++attempt) {
    const Direction dir =
        attempt == 0 ? u : Direction::random(ns.dim(), mix_seed(u.seed, 0xA77E3ULL + static_cast<std::uint64_t>(attempt)));
    try {
      CensusReport report = census_once(ns, M, dir, cfg);
      report.requested_seed = u.seed;
      report.direction_redraws = attempt;
      report.diagnostics = std::move(diagnostics);
      return report;
    } catch (const GenericityError& e) {
      if (e.target() != GenericityError::Target::direction) throw;
      diagnostics.push_back(std::string("direction re-drawn: ") + e.what());
    }
  }
  throw GenericityExhausted("no generic direction found after " + std::to_string(cfg.max_direction_redraws) +
                            " re-draws");
}

CensusReport census_generic(const NormalizedSum& ns, const Vector& base_M, std::uint64_t seed, const CensusConfig& cfg) {
  std::vector<std::string> diagnostics;
  for (int attempt = 0; attempt <= cfg.max_simplex_redraws; ++attempt) {
    const SimplexSpec M = generic_simplex(base_M, seed, attempt);
    try {
      CensusReport report = morse_census(ns, M, Direction::random(ns.dim(), seed), cfg);
      report.simplex_redraws = attempt;
      diagnostics.insert(diagnostics.end(), report.diagnostics.begin(), report.diagnostics.end());
      report.diagnostics = std::move(diagnostics);
      return report;
    } catch (const GenericityError& e) {
      diagnostics.push_back(std::string("simplex re-drawn: ") + e.what());
    }
  }
  throw GenericityExhausted("no generic simplex found after " + std::to_string(cfg.max_simplex_redraws) +
                            " re-draws");
}

ShiftResult choose_shift(const NormalizedSum& ns, const SimplexSpec& M, const Direction& u, const CensusConfig& cfg,
                         int max_doublings) {
  const Vector ones = Vector::Ones(ns.dim());
  std::vector<std::string> diagnostics;
  double lambda = 1.0;
  for (int k = 0; k <= max_doublings; ++k, lambda *= 2.0) {
    const Direction shifted = Direction::from_vector(u.u + lambda * ones, u.seed);
    try {
      CensusReport census = census_once(ns, M, shifted, cfg);
      if (census.contributing_on_zero_strata() == 0) {
        census.shift_lambda = lambda;
        census.requested_seed = u.seed;
        census.diagnostics = std::move(diagnostics);
        return {lambda, k, std::move(census)};
      }
    } catch (const GenericityError& e) {
      if (e.target() != GenericityError::Target::direction) throw;
      diagnostics.push_back("shift lambda = " + std::to_string(lambda) + " skipped: " + e.what());
    }
  }
  throw GenericityExhausted("shift search gave up after " + std::to_string(max_doublings) + " doublings");
}

}  // namespace fewnomial
