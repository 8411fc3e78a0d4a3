#include "tsb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tsb/bip.hpp"
#include "tsb/error.hpp"
#include "tsb/linalg.hpp"

namespace tsb {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

long long floor_with_guard(double x) {
  return static_cast<long long>(std::floor(x + kFloorGuard));
}

// arccot over (0, pi): atan2(1, x) hits the right branch for every sign.
double arccot(double x) { return std::atan2(1.0, x); }

std::string join_cases(const std::array<bool, 4>& cases) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (!cases[i]) continue;
    if (!s.empty()) s += ",";
    s += std::to_string(i + 1);
  }
  return s;
}

BoundReport not_applicable(const std::string& method,
                           const std::string& note) {
  return {method, kNaN, 0, false, false, note};
}

BoundReport closed_case_report(long long m) {
  const ClosedCaseBound cc = closed_case_bound(m);
  BoundReport r;
  r.method = "thm54";
  r.raw_value = kNaN;
  r.integer_bound = cc.bound;
  r.applicable = true;
  r.exact = true;
  r.notes = "cases " + join_cases(cc.case_applicable) +
            (cc.epsilon_is_zero ? "; 1+12m is a perfect square" : "");
  return r;
}

BoundReport bip_report(long long m) {
  const BipScan scan = bip_scan(m);
  BoundReport r;
  r.method = "bip";
  r.raw_value = kNaN;
  r.integer_bound = scan.bound;
  r.applicable = true;
  r.exact = true;
  if (!scan.violations.empty()) {
    r.notes = "feasibility non-monotone at y =";
    for (long long y : scan.violations) r.notes += " " + std::to_string(y);
  }
  return r;
}

BestBound compose(std::vector<BoundReport> reports, long long v) {
  BestBound out;
  out.best = v;  // the trivial bound s <= v
  for (const auto& r : reports) {
    if (r.applicable) out.best = std::min(out.best, r.integer_bound);
  }
  out.reports = std::move(reports);
  return out;
}

}  // namespace

double interlacing_ratio(double theta_max) {
  return std::numbers::pi / (2.0 * arccot(theta_max));
}

BoundReport interlacing_bound(const SeidelSpectrum& spec) {
  const std::vector<double> theta = spec.expanded();
  const int v = spec.v;

  // Feasibility of size s: the i-th largest eigenvalue of a transitive
  // tournament on s vertices, cot((2i-1)pi/(2s)), must not exceed theta_i
  // for i up to floor(s/2) (the rest follows by +- symmetry).
  auto feasible = [&](int s) {
    for (int i = 1; 2 * i <= s; ++i) {
      const double angle = (2.0 * i - 1.0) * std::numbers::pi / (2.0 * s);
      if (1.0 / std::tan(angle) > theta[i - 1] + 1e-9) return false;
    }
    return true;
  };

  long long bound = 1;
  for (int s = v; s >= 1; --s) {
    if (feasible(s)) {
      bound = s;
      break;
    }
  }

  BoundReport r;
  r.method = "interlacing";
  // The closed-form first constraint; the feasibility search can only cut
  // further down, so report whichever is larger as the raw value.
  r.raw_value =
      std::max(interlacing_ratio(theta.front()), static_cast<double>(bound));
  r.integer_bound = bound;
  r.applicable = true;
  r.exact = false;
  return r;
}

BoundReport hoffman_general(const SeidelSpectrum& spec) {
  const std::string method = "hoffman_general";
  if (!spec.has_non_main()) {
    return not_applicable(method, "every eigenvalue is main");
  }
  const double alpha = spec.max_main();
  const double gamma = spec.max_non_main();
  if (alpha > gamma) {
    return not_applicable(method,
                          "largest main eigenvalue exceeds largest non-main "
                          "eigenvalue");
  }
  const double v = static_cast<double>(spec.v);
  const double a2 = alpha * alpha;
  const double g2 = gamma * gamma;
  const double raw =
      (3.0 * a2 - 3.0 * g2 +
       std::sqrt(4.0 * v * v * (1.0 + 3.0 * g2) + 9.0 * (g2 - a2) * (g2 - a2))) /
      (2.0 * v);

  BoundReport r;
  r.method = method;
  r.raw_value = raw;
  r.integer_bound = floor_with_guard(raw);
  r.applicable = true;
  r.exact = false;
  return r;
}

BoundReport hoffman_regular(double theta_max, long long v) {
  const double t2 = theta_max * theta_max;
  const double vv = static_cast<double>(v);
  const double raw =
      (-3.0 * t2 +
       std::sqrt(9.0 * t2 * t2 + 4.0 * vv * vv + 12.0 * t2 * vv * vv)) /
      (2.0 * vv);

  BoundReport r;
  r.method = "hoffman_regular";
  r.raw_value = raw;
  r.integer_bound = floor_with_guard(raw);
  r.applicable = true;
  r.exact = false;
  return r;
}

BoundReport drt_bound_exact(long long v) {
  if (v < 3 || v % 4 != 3) {
    throw InputError("doubly regular tournaments need v = 3 (mod 4), got " +
                     std::to_string(v));
  }
  const long long n = 13 + 12 * v;
  const long long root = integer_sqrt(n);
  const bool exact = root * root == n;
  // Largest s with (2s+3)^2 <= 13+12v; no floating point involved.
  const long long bound = (root - 3) / 2;

  BoundReport r;
  r.method = "drt";
  r.raw_value = (-3.0 + std::sqrt(static_cast<double>(n))) / 2.0;
  r.integer_bound = bound;
  r.applicable = true;
  r.exact = exact;
  if (exact) r.notes = "bound attained exactly (13+12v is a perfect square)";
  return r;
}

BoundReport parity_refine(const BoundReport& report,
                          bool is_regular_tournament) {
  BoundReport r = report;
  if (is_regular_tournament && r.applicable && r.exact &&
      r.integer_bound % 2 != 0) {
    // A transitive subtournament meeting the bound exactly must have even
    // size inside a regular tournament, so an exact odd bound is beatable.
    --r.integer_bound;
    r.exact = false;
    if (!r.notes.empty()) r.notes += "; ";
    r.notes += "parity refinement applied";
  }
  return r;
}

MethodSet MethodSet::all() { return {true, true, true, true, true}; }

MethodSet MethodSet::parse(const std::string& name) {
  if (name == "all") return all();
  MethodSet ms;
  if (name == "interlacing") {
    ms.interlacing = true;
  } else if (name == "hoffman") {
    ms.hoffman = true;
  } else if (name == "drt") {
    ms.drt = true;
  } else if (name == "bip") {
    ms.bip = true;
  } else if (name == "thm54") {
    ms.thm54 = true;
  } else {
    throw InputError(
        "unknown method '" + name +
        "' (expected interlacing, hoffman, drt, bip, thm54, or all)");
  }
  return ms;
}

BestBound best_bound(const Digraph& g, const MethodSet& methods) {
  const long long v = g.order();
  const DigraphClass cls = classify(g);
  const SeidelSpectrum spec = spectrum(g);
  const char* drt_note = "requires a doubly regular tournament";

  std::vector<BoundReport> reports;
  if (methods.interlacing) reports.push_back(interlacing_bound(spec));
  if (methods.hoffman) {
    reports.push_back(hoffman_general(spec));
    if (cls.is_regular) {
      reports.push_back(hoffman_regular(spec.classes.front().value, v));
    } else {
      reports.push_back(
          not_applicable("hoffman_regular", "digraph is not regular"));
    }
  }
  if (methods.drt) {
    if (cls.is_doubly_regular) {
      reports.push_back(parity_refine(drt_bound_exact(v), true));
    } else {
      reports.push_back(not_applicable("drt", drt_note));
    }
  }
  if (methods.thm54) {
    if (cls.is_doubly_regular) {
      reports.push_back(closed_case_report(*cls.m));
    } else {
      reports.push_back(not_applicable("thm54", drt_note));
    }
  }
  if (methods.bip) {
    if (cls.is_doubly_regular) {
      reports.push_back(bip_report(*cls.m));
    } else {
      reports.push_back(not_applicable("bip", drt_note));
    }
  }
  return compose(std::move(reports), v);
}

BestBound best_bound(const Digraph& g) { return best_bound(g, MethodSet::all()); }

BestBound drt_best_bound(long long v) {
  if (v < 3 || v % 4 != 3) {
    throw InputError("doubly regular tournaments need v = 3 (mod 4), got " +
                     std::to_string(v));
  }
  const long long m = (v + 1) / 4;
  const SeidelSpectrum spec = SeidelSpectrum::doubly_regular(static_cast<int>(v));

  std::vector<BoundReport> reports;
  reports.push_back(interlacing_bound(spec));
  reports.push_back(hoffman_general(spec));
  reports.push_back(hoffman_regular(std::sqrt(static_cast<double>(v)), v));
  reports.push_back(parity_refine(drt_bound_exact(v), true));
  reports.push_back(closed_case_report(m));
  reports.push_back(bip_report(m));
  return compose(std::move(reports), v);
}

}  // namespace tsb
