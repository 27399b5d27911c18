#include "fewnomial/bounds.hpp"
#include "fewnomial/critical.hpp"
#include "fewnomial/error.hpp"
#include "fewnomial/homology.hpp"
#include "fewnomial/instance.hpp"
#include "fewnomial/report.hpp"
#include "fewnomial/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace fewnomial;

namespace {

struct Common {
  std::string format = "json";
  std::string out;
};

int emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream f(c.out);
  if (!f) {
    std::cerr << "fewnomial: cannot write " << c.out << '\n';
    return 1;
  }
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  return 0;
}

template <class Report>
std::string render(const Common& c, const Report& r) {
  return c.format == "csv" ? to_csv(r) : to_json(r).dump(2);
}

Vector base_simplex(const Instance& inst, const NormalizedSum& ns, double scale) {
  if (inst.base_M) {
    if (inst.base_M->size() != ns.dim() + 1) {
      throw InputError(InputError::Code::dimension_mismatch,
                       "\"M\" needs " + std::to_string(ns.dim() + 1) + " entries for this instance");
    }
    return *inst.base_M;
  }
  return Vector::Constant(ns.dim() + 1, scale);
}

NormalizedSum normalized(const Instance& inst) {
  try {
    return normalize_instance(inst);
  } catch (const std::invalid_argument& e) {
    throw InputError(InputError::Code::malformed, std::string("instance does not normalize: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fewnomial bounds, Morse census and homology oracle"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", common.out, "Write the report to a file instead of stdout");

  int n = 1;
  int l = 0;
  std::optional<int> degree;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for (n, l)");
  bounds->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 1000));
  bounds->add_option("--l", l, "Extra terms beyond n + 1")->required()->check(CLI::Range(0, 1000));
  bounds->add_option("--d", degree, "Degree for the Milnor bound")->check(CLI::PositiveNumber);

  std::string instance_path;
  std::uint64_t seed = 1;
  int starts = 0;
  bool shift = false;
  double m_scale = 2.0;
  double res_tol = 1e-9;
  double dedupe = 1e-6;
  auto* census = app.add_subcommand("census", "Stratified Morse census over a generic simplex");
  census->add_option("--instance", instance_path, "Instance JSON")->required();
  census->add_option("--seed", seed, "Seed for the direction and simplex draws");
  census->add_option("--starts", starts, "Start points per stratum (0 = 200 m^2)")->check(CLI::NonNegativeNumber);
  census->add_flag("--shift", shift, "Apply the lambda shift before counting");
  census->add_option("--M", m_scale, "Simplex offset when the instance gives none")->check(CLI::PositiveNumber);
  census->add_option("--res-tol", res_tol, "Residual tolerance")->check(CLI::PositiveNumber);
  census->add_option("--dedupe", dedupe, "Dedupe radius in face coordinates")->check(CLI::PositiveNumber);

  int resolution = 32;
  std::string dump_path;
  bool single = false;
  auto* oracle = app.add_subcommand("oracle", "Betti numbers of the zero set in the simplex");
  oracle->add_option("--instance", instance_path, "Instance JSON")->required();
  oracle->add_option("--resolution", resolution, "Starting grid resolution")->check(CLI::Range(16, 4096));
  oracle->add_option("--seed", seed, "Seed for the simplex perturbation");
  oracle->add_option("--M", m_scale, "Simplex offset when the instance gives none")->check(CLI::PositiveNumber);
  oracle->add_option("--dump", dump_path, "Write the zero-set complex as OFF text");
  oracle->add_flag("--single", single, "One resolution, no stabilization");

  auto* verify = app.add_subcommand("verify", "Bounds, census and oracle with the inequality chain");
  verify->add_option("--instance", instance_path, "Instance JSON")->required();
  verify->add_option("--seed", seed, "Seed");
  verify->add_option("--starts", starts, "Start points per stratum (0 = 200 m^2)")->check(CLI::NonNegativeNumber);
  verify->add_option("--resolution", resolution, "Starting oracle resolution")->check(CLI::Range(16, 4096));
  verify->add_option("--M", m_scale, "Simplex offset when the instance gives none")->check(CLI::PositiveNumber);
  verify->add_option("--res-tol", res_tol, "Residual tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--dedupe", dedupe, "Dedupe radius in face coordinates")->check(CLI::PositiveNumber);

  double coeff_lo = -1.0, coeff_hi = 1.0, exp_lo = -2.0, exp_hi = 2.0;
  auto* random = app.add_subcommand("random", "Seeded random instance JSON");
  random->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 64));
  random->add_option("--l", l, "Extra terms")->required()->check(CLI::Range(0, 64));
  random->add_option("--seed", seed, "Seed");
  random->add_option("--coeff-lo", coeff_lo);
  random->add_option("--coeff-hi", coeff_hi);
  random->add_option("--exp-lo", exp_lo);
  random->add_option("--exp-hi", exp_hi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(InputError::Code::malformed);
  }

  CensusConfig ccfg;
  ccfg.solve.starts = starts;
  ccfg.solve.res_tol = res_tol;
  ccfg.solve.dedupe = dedupe;

  try {
    if (*bounds) return emit(common, render(common, compare_bounds(n, l, degree)));

    if (*random) {
      RandomInstanceOptions opt;
      opt.coeff_range = {coeff_lo, coeff_hi};
      opt.exp_range = {exp_lo, exp_hi};
      return emit(common, instance_to_json(random_instance(n, l, seed, opt)));
    }

    const Instance inst = parse_instance(instance_path);

    if (*verify) {
      VerifyConfig vcfg;
      vcfg.census = ccfg;
      vcfg.seed = seed;
      vcfg.base_M = m_scale;
      vcfg.resolution = resolution;
      const VerifyReport rep = run_verify(inst, vcfg);
      if (rep.failure) std::cerr << "fewnomial: " << rep.failure->stage << ": " << rep.failure->message << '\n';
      if (const int rc = emit(common, render(common, rep)); rc != 0) return rc;
      return rep.exit_code;
    }

    const NormalizedSum ns = normalized(inst);
    const Vector base = base_simplex(inst, ns, m_scale);

    if (*census) {
      CensusReport rep = census_generic(ns, base, seed, ccfg);
      if (shift) {
        ShiftResult s = choose_shift(ns, SimplexSpec(rep.M), rep.direction, ccfg);
        s.census.simplex_redraws = rep.simplex_redraws;
        s.census.direction_redraws = rep.direction_redraws;
        rep = std::move(s.census);
      }
      return emit(common, render(common, rep));
    }

    if (*oracle) {
      const SimplexSpec M = generic_simplex(base, seed, 0);
      StableBetti rep;
      if (single) {
        rep.betti = betti_at(ns, M, resolution);
        rep.M = M.M();
        rep.resolution = resolution;
        rep.history.push_back({rep.M, resolution, rep.betti});
      } else {
        rep = betti_stable(ns, M, resolution);
      }
      if (!dump_path.empty()) {
        if (ns.dim() < 2) throw std::invalid_argument("--dump needs a sum in 2 or 3 variables");
        std::ofstream f(dump_path);
        if (!f) throw std::runtime_error("cannot write " + dump_path);
        f << dump_off(marching_complex(ns, SimplexSpec(rep.M), rep.resolution));
      }
      return emit(common, render(common, rep));
    }
  } catch (const std::exception& e) {
    std::cerr << "fewnomial: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return 1;
}
