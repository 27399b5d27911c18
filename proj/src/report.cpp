#include "fewnomial/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace fewnomial {

namespace {

ReportJson vec(const Vector& v) {
  auto a = ReportJson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

// Infinite bounds serialize as null next to their finite logarithm.
ReportJson bound(const BoundValue& b) {
  ReportJson j;
  if (std::isfinite(b.value)) {
    j["value"] = b.value;
  } else {
    j["value"] = nullptr;
  }
  j["log_value"] = b.log_value;
  return j;
}

std::string num(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

std::string subset(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ";" : "") + std::to_string(s[i]);
  return out.empty() ? "-" : out;
}

}  // namespace

ReportJson to_json(const BoundReport& r) {
  ReportJson j;
  j["n"] = r.n;
  j["l"] = r.l;
  j["constant"] = bs_constant();
  j["khovanskii"] = bound(r.khovanskii);
  j["theorem1"] = bound(r.theorem1);
  j["theorem1_integer_cap"] = r.theorem1_cap;
  j["simple"] = r.simple ? bound(*r.simple) : ReportJson(nullptr);
  j["bs_system"] = bound(r.bs_system);
  if (r.d) {
    j["d"] = *r.d;
    j["milnor"] = bound(*r.milnor);
  }
  auto rows = ReportJson::array();
  for (const auto& row : r.per_stratum) {
    ReportJson x;
    x["s"] = row.s;
    x["zero_in_S"] = row.zero_in_s;
    x["bound"] = bound(row.bound);
    rows.push_back(std::move(x));
  }
  j["per_stratum"] = std::move(rows);
  return j;
}

ReportJson to_json(const CensusReport& r) {
  ReportJson j;
  j["n"] = r.n;
  j["l"] = r.l;
  j["dim"] = r.dim;
  j["seed"] = r.requested_seed;
  j["direction"] = vec(r.direction.u);
  j["direction_redraws"] = r.direction_redraws;
  j["simplex_redraws"] = r.simplex_redraws;
  j["M"] = vec(r.M);
  j["shift_lambda"] = r.shift_lambda ? ReportJson(*r.shift_lambda) : ReportJson(nullptr);
  j["contributing_count"] = r.contributing_count;
  j["record_count"] = r.record_count;
  j["stable"] = r.stable;
  auto strata = ReportJson::array();
  for (const auto& s : r.strata) {
    ReportJson x;
    x["S"] = s.S;
    x["face_dim"] = s.face_dim;
    x["terms"] = s.terms;
    x["bound"] = s.bound;
    x["root_count"] = s.root_count;
    x["within_bound"] = s.within_bound;
    x["stable"] = s.stable;
    x["starts"] = s.starts_history;
    x["counts"] = s.count_history;
    auto recs = ReportJson::array();
    for (const auto& c : s.records) {
      ReportJson y;
      y["z"] = vec(c.z);
      y["value"] = c.value;
      y["residual"] = c.residual;
      y["jacobian_min_sv"] = c.jacobian_min_sv;
      y["morse_index"] = c.morse_index;
      y["contributing"] = c.contributing;
      y["cone_derivatives"] = c.cone_derivatives;
      recs.push_back(std::move(y));
    }
    x["records"] = std::move(recs);
    x["warnings"] = s.warnings;
    strata.push_back(std::move(x));
  }
  j["strata"] = std::move(strata);
  j["diagnostics"] = r.diagnostics;
  return j;
}

ReportJson to_json(const StableBetti& r) {
  ReportJson j;
  j["betti"] = r.betti.b;
  j["betti_sum"] = r.betti.sum();
  j["coefficients"] = "GF(2)";
  j["M"] = vec(r.M);
  j["resolution"] = r.resolution;
  auto hist = ReportJson::array();
  for (const auto& a : r.history) {
    ReportJson x;
    x["M"] = vec(a.M);
    x["resolution"] = a.resolution;
    x["betti"] = a.betti.b;
    hist.push_back(std::move(x));
  }
  j["certificate"] = std::move(hist);
  return j;
}

ReportJson to_json(const VerifyReport& r, bool include_timings) {
  ReportJson j;
  j["label"] = r.label;
  j["n"] = r.n;
  j["l"] = r.l;
  j["dim"] = r.dim;
  j["seed"] = r.seed;
  j["mode"] = r.mode;
  j["simplex_redraws"] = r.simplex_redraws;
  j["bounds"] = to_json(r.bounds);
  j["oracle"] = r.oracle ? to_json(*r.oracle) : ReportJson(nullptr);
  j["known_betti_match"] = r.known_betti_match ? ReportJson(*r.known_betti_match) : ReportJson(nullptr);
  j["census"] = r.census ? to_json(*r.census) : ReportJson(nullptr);
  j["shifted_census"] = r.shifted ? to_json(*r.shifted) : ReportJson(nullptr);
  auto chain = ReportJson::array();
  for (const auto& link : r.chain) {
    ReportJson x;
    x["link"] = link.name;
    x["lhs"] = link.lhs;
    x["rhs"] = link.rhs;
    x["pass"] = link.pass;
    chain.push_back(std::move(x));
  }
  j["chain"] = std::move(chain);
  j["verified"] = r.verified ? ReportJson(*r.verified) : ReportJson(nullptr);
  if (r.failure) {
    j["failure"] = {{"stage", r.failure->stage}, {"kind", r.failure->kind}, {"message", r.failure->message}};
  } else {
    j["failure"] = nullptr;
  }
  j["diagnostics"] = r.diagnostics;
  j["exit_code"] = r.exit_code;
  if (include_timings) {
    ReportJson t = ReportJson::object();
    for (const auto& [k, v] : r.timings) t[k] = v;
    j["timings"] = std::move(t);
  }
  return j;
}

std::string to_csv(const BoundReport& r) {
  std::ostringstream out;
  out << "quantity,s,zero_in_S,value,log_value\n";
  const auto row = [&](const std::string& name, const BoundValue& b, const std::string& s = "", const std::string& z = "") {
    out << name << ',' << s << ',' << z << ',' << num(b.value) << ',' << num(b.log_value) << '\n';
  };
  row("khovanskii", r.khovanskii);
  row("theorem1", r.theorem1);
  if (r.simple) row("simple", *r.simple);
  row("bs_system", r.bs_system);
  if (r.milnor) row("milnor", *r.milnor);
  for (const auto& p : r.per_stratum) row("per_stratum", p.bound, std::to_string(p.s), p.zero_in_s ? "1" : "0");
  return out.str();
}

std::string to_csv(const CensusReport& r) {
  std::ostringstream out;
  out << "S,face_dim,terms,bound,root_count,records,contributing,stable\n";
  for (const auto& s : r.strata) {
    int contributing = 0;
    for (const auto& c : s.records) contributing += c.contributing ? 1 : 0;
    out << subset(s.S) << ',' << s.face_dim << ',' << s.terms << ',' << num(s.bound) << ',' << s.root_count << ','
        << s.records.size() << ',' << contributing << ',' << (s.stable ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string to_csv(const StableBetti& r) {
  std::ostringstream out;
  out << "k,betti\n";
  for (std::size_t k = 0; k < r.betti.b.size(); ++k) out << k << ',' << r.betti.b[k] << '\n';
  return out.str();
}

std::string to_csv(const VerifyReport& r) {
  std::ostringstream out;
  out << "label,n,l,seed,mode,betti_sum,contributing_count,theorem1,verified,exit_code\n";
  out << r.label << ',' << r.n << ',' << r.l << ',' << r.seed << ',' << r.mode << ','
      << (r.oracle ? std::to_string(r.oracle->betti.sum()) : "") << ','
      << (r.shifted ? std::to_string(r.shifted->contributing_count) : "") << ',' << num(r.bounds.theorem1.value)
      << ',' << (r.verified ? (*r.verified ? "pass" : "fail") : "") << ',' << r.exit_code << '\n';
  return out.str();
}

}  // namespace fewnomial
