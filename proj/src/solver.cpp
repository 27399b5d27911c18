#include "fewnomial/solver.hpp"

#include "fewnomial/error.hpp"
#include "fewnomial/random.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace fewnomial {

namespace {

constexpr std::array<int, 8> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19};

double radical_inverse(std::uint64_t index, int base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
    f *= inv;
  }
  return r;
}

struct Box {
  Vector lo;
  Vector hi;

  bool contains(const Vector& w) const {
    return (w.array() >= lo.array()).all() && (w.array() <= hi.array()).all();
  }
};

Box grow(const FaceBox& box, double fraction) {
  const Vector width = box.hi - box.lo;
  return {box.lo - fraction * width, box.hi + fraction * width};
}

double merit(const Vector& f) { return 0.5 * f.squaredNorm(); }

// Damped Newton; returns false on divergence or stagnation.
bool newton(const CriticalSystem& sys, Vector w, const Box& far, double max_step, const SolveConfig& cfg,
            Vector& out) {
  Vector f = sys.values(w);
  if (!f.allFinite()) return false;
  for (int it = 0; it < cfg.max_iter; ++it) {
    if (sys.residual(w) <= cfg.res_tol) {
      out = w;
      return true;
    }
    const Matrix j = sys.jacobian(w);
    if (!j.allFinite()) return false;
    Vector step = j.completeOrthogonalDecomposition().solve(-f);
    if (!step.allFinite()) return false;
    const double len = step.norm();
    if (len > max_step) step *= max_step / len;

    const double m0 = merit(f);
    double t = 1.0;
    bool accepted = false;
    for (int k = 0; k < 40; ++k, t *= 0.5) {
      const Vector trial = w + t * step;
      const Vector ft = sys.values(trial);
      if (ft.allFinite() && merit(ft) <= (1.0 - 1e-4 * t) * m0) {
        w = trial;
        f = ft;
        accepted = true;
        break;
      }
    }
    if (!accepted || !far.contains(w)) return false;
  }
  if (sys.residual(w) <= cfg.res_tol) {
    out = w;
    return true;
  }
  return false;
}

void polish(const CriticalSystem& sys, Vector& w, double target) {
  double best = sys.residual(w);
  for (int it = 0; it < 12 && best > target; ++it) {
    const Vector f = sys.values(w);
    const Vector step = sys.jacobian(w).completeOrthogonalDecomposition().solve(-f);
    if (!step.allFinite()) return;
    const Vector trial = w + step;
    const double r = sys.residual(trial);
    if (!(r < best)) return;
    w = trial;
    best = r;
  }
}

}  // namespace

Matrix householder_complement(const Vector& u) {
  const auto m = u.size();
  const double norm = u.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("householder_complement: zero vector");
  Vector v = u / norm;
  // Reflect about the bisector of u and +-e_1, picking the sign that avoids cancellation.
  const double sign = v[0] >= 0 ? 1.0 : -1.0;
  v[0] += sign;
  Matrix h = Matrix::Identity(m, m) - (2.0 / v.squaredNorm()) * (v * v.transpose());
  return h.rightCols(m - 1);
}

Vector CriticalSystem::values(const Vector& w) const {
  Vector f(static_cast<Eigen::Index>(equations.size()));
  for (std::size_t k = 0; k < equations.size(); ++k) {
    // Unscaled values: Newton needs consistent magnitudes across equations.
    double s = 0.0;
    for (const auto& t : equations[k].terms()) s += t.coefficient * std::exp(t.exponent.dot(w));
    f[static_cast<Eigen::Index>(k)] = s;
  }
  return f;
}

Matrix CriticalSystem::jacobian(const Vector& w) const {
  Matrix j(static_cast<Eigen::Index>(equations.size()), w.size());
  for (std::size_t k = 0; k < equations.size(); ++k) j.row(static_cast<Eigen::Index>(k)) = gradient(equations[k], w);
  return j;
}

double CriticalSystem::residual(const Vector& w) const {
  double r = 0.0;
  for (const auto& e : equations) r = std::max(r, relative_residual(e, w));
  return r;
}

CriticalSystem critical_system(const StratumSpec& stratum, const Vector& u_face) {
  const int m = stratum.face_dim();
  if (u_face.size() != m) throw std::invalid_argument("critical_system: direction has wrong dimension");
  if (!(u_face.norm() > 1e-12)) {
    throw GenericityError(GenericityError::Target::direction, "direction vanishes on the face");
  }
  CriticalSystem sys;
  sys.u_face = u_face;
  sys.equations.push_back(stratum.restricted);
  if (m > 1) {
    sys.complement = householder_complement(u_face);
    for (int k = 0; k < m - 1; ++k) {
      sys.equations.push_back(directional_derivative(stratum.restricted, sys.complement.col(k)));
    }
  } else {
    sys.complement = Matrix(m, 0);
  }
  return sys;
}

int default_starts(int m) { return 200 * m * m; }

SolveResult solve_multistart(const CriticalSystem& system, const FaceBox& box, const SolveConfig& cfg) {
  SolveResult result;
  const int starts = cfg.starts > 0 ? cfg.starts : default_starts(system.dim());
  extend_multistart(system, box, cfg, 0, starts, result);
  return result;
}

void extend_multistart(const CriticalSystem& system, const FaceBox& box, const SolveConfig& cfg, int first,
                       int count, SolveResult& result) {
  const int m = system.dim();
  if (m < 1 || m > static_cast<int>(kPrimes.size())) throw std::invalid_argument("solve_multistart: bad dimension");
  if (count < 1) throw std::invalid_argument("solve_multistart: need at least one start");
  // Equations that vanish identically give no isolated roots.
  for (const auto& e : system.equations) {
    if (e.empty()) return;
  }

  Rng rng(cfg.stream);
  Vector rotation(m);
  for (int d = 0; d < m; ++d) rotation[d] = rng.uniform();

  const Box start_box = grow(box, cfg.margin);
  const Box far = grow(box, cfg.margin + 1.0);
  const double max_step = 0.25 * std::max(1.0, (box.hi - box.lo).norm());

  for (int i = first; i < first + count; ++i) {
    Vector start(m);
    for (int d = 0; d < m; ++d) {
      double x = radical_inverse(static_cast<std::uint64_t>(i) + 1, kPrimes[static_cast<std::size_t>(d)]) + rotation[d];
      x -= std::floor(x);
      start[d] = start_box.lo[d] + x * (start_box.hi[d] - start_box.lo[d]);
    }
    Vector w;
    if (!newton(system, start, far, max_step, cfg, w)) continue;
    polish(system, w, cfg.polish_tol);
    const double res = system.residual(w);
    if (res > cfg.res_tol || !start_box.contains(w)) continue;

    bool duplicate = false;
    for (const auto& r : result.roots) {
      const double dist = (r.w - w).norm();
      if (dist <= cfg.dedupe) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    for (const auto& r : result.roots) {
      if ((r.w - w).norm() <= 10.0 * cfg.dedupe) {
        std::ostringstream msg;
        msg << "suspect clustering: distinct roots " << (r.w - w).norm() << " apart";
        result.warnings.push_back(msg.str());
      }
    }
    const Vector sv = Eigen::JacobiSVD<Matrix>(system.jacobian(w)).singularValues();
    result.roots.push_back({w, res, sv[sv.size() - 1], sv[0]});
  }
  result.starts = std::max(result.starts, first + count);
}

}  // namespace fewnomial
