#include "fewnomial/verify.hpp"

#include "fewnomial/error.hpp"

#include <chrono>

namespace fewnomial {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string kind_of(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return "input";
  if (dynamic_cast<const GenericityExhausted*>(&e)) return "genericity_exhausted";
  if (dynamic_cast<const GenericityError*>(&e)) return "genericity";
  if (dynamic_cast<const BoundViolation*>(&e)) return "bound_violation";
  if (dynamic_cast<const StabilizationError*>(&e)) return "stabilization";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid_argument";
  return "error";
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (const auto* in = dynamic_cast<const InputError*>(&e)) return static_cast<int>(in->code());
  if (dynamic_cast<const GenericityExhausted*>(&e) || dynamic_cast<const GenericityError*>(&e)) return 3;
  if (dynamic_cast<const BoundViolation*>(&e)) return 2;
  return 1;
}

VerifyReport run_verify(const Instance& inst, const VerifyConfig& cfg) {
  VerifyReport rep;
  rep.label = inst.label;
  rep.seed = cfg.seed;
  std::string stage = "normalize";
  auto t0 = Clock::now();
  try {
    NormalizedSum ns;
    try {
      ns = normalize_instance(inst);
    } catch (const std::invalid_argument& e) {
      throw InputError(InputError::Code::malformed, std::string("instance does not normalize: ") + e.what());
    }
    rep.n = ns.n;
    rep.l = ns.l;
    rep.dim = ns.dim();
    rep.timings["normalize"] = seconds_since(t0);

    stage = "bounds";
    t0 = Clock::now();
    rep.bounds = compare_bounds(ns.n, ns.l);
    rep.timings["bounds"] = seconds_since(t0);

    const bool with_oracle = rep.dim <= cfg.oracle_max_dim;
    rep.mode = with_oracle ? "full" : "bounds+census only";
    Vector base = inst.base_M ? *inst.base_M : Vector::Constant(rep.dim + 1, cfg.base_M);
    if (base.size() != rep.dim + 1) {
      throw InputError(InputError::Code::dimension_mismatch,
                       "\"M\" needs " + std::to_string(rep.dim + 1) + " entries for this instance");
    }

    double t_oracle = 0.0;
    double t_census = 0.0;
    double t_shift = 0.0;
    bool done = false;
    for (int attempt = 0; attempt <= cfg.census.max_simplex_redraws && !done; ++attempt) {
      const SimplexSpec M = generic_simplex(base, cfg.seed, attempt);
      try {
        SimplexSpec chosen = M;
        if (with_oracle) {
          stage = "oracle";
          t0 = Clock::now();
          rep.oracle = betti_stable(ns, M, cfg.resolution, cfg.max_doublings);
          t_oracle += seconds_since(t0);
          chosen = SimplexSpec(rep.oracle->M);
        }
        stage = "census";
        t0 = Clock::now();
        rep.census = morse_census(ns, chosen, Direction::random(rep.dim, cfg.seed), cfg.census);
        t_census += seconds_since(t0);
        stage = "shift";
        t0 = Clock::now();
        ShiftResult shift = choose_shift(ns, chosen, rep.census->direction, cfg.census, cfg.shift_max_doublings);
        t_shift += seconds_since(t0);
        rep.shifted = std::move(shift.census);
        rep.simplex_redraws = attempt;
        done = true;
      } catch (const GenericityError& e) {
        if (e.target() != GenericityError::Target::simplex) throw;
        rep.diagnostics.push_back("simplex re-drawn during " + stage + ": " + e.what());
        rep.oracle.reset();
        rep.census.reset();
      }
    }
    if (with_oracle) rep.timings["oracle"] = t_oracle;
    rep.timings["census"] = t_census;
    rep.timings["shift"] = t_shift;
    if (!done) {
      throw GenericityExhausted("no generic simplex found after " + std::to_string(cfg.census.max_simplex_redraws) +
                                " re-draws");
    }

    stage = "chain";
    const double count = rep.shifted->contributing_count;
    if (rep.oracle) {
      const double bstar = rep.oracle->betti.sum();
      rep.chain.push_back({"betti_sum <= contributing_count", bstar, count, bstar <= count});
      if (inst.known_betti) {
        std::vector<int> known = *inst.known_betti;
        std::vector<int> got = rep.oracle->betti.b;
        known.resize(std::max(known.size(), got.size()), 0);
        got.resize(known.size(), 0);
        rep.known_betti_match = known == got;
      }
    }
    rep.chain.push_back({"contributing_count <= theorem1_bound", count, rep.bounds.theorem1.value,
                         count <= rep.bounds.theorem1.value});
    bool all = true;
    for (const auto& link : rep.chain) all = all && link.pass;
    if (rep.oracle) rep.verified = all;
    rep.exit_code = all ? 0 : 2;
  } catch (const std::exception& e) {
    rep.failure = StageFailure{stage, kind_of(e), e.what()};
    rep.exit_code = exit_code_for(e);
  }
  return rep;
}

}  // namespace fewnomial
