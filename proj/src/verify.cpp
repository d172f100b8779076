#include "cyclo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "cyclo/jacobi.hpp"

namespace cyclo {

namespace {

// Published values for specific setups. A mismatch becomes a note.
struct ReferenceValue {
  std::uint32_t p, r, e, generator, i, j;
  const char* value;
};

constexpr ReferenceValue kReferenceJacobi[] = {
    {7, 1, 3, 3, 2, 2, "1+3*z"},
};

template <typename F>
auto timed(F&& f, double& ms) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string pair_text(std::uint32_t a, std::uint32_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::optional<std::string> first_cyc_mismatch(const CycNumMatrix& x, const CycNumMatrix& y) {
  for (std::uint32_t a = 0; a < x.e; ++a) {
    for (std::uint32_t b = 0; b < x.e; ++b) {
      if (x.at(a, b) != y.at(a, b)) {
        return "mismatch at " + pair_text(a, b) + ": " + std::to_string(x.at(a, b)) + " vs " +
               std::to_string(y.at(a, b));
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> first_jacobi_mismatch(const JacobiMatrix& x, const JacobiMatrix& y) {
  for (std::uint32_t i = 0; i < x.e; ++i) {
    for (std::uint32_t j = 0; j < x.e; ++j) {
      if (!(x.at(i, j) == y.at(i, j))) {
        return "mismatch at " + pair_text(i, j) + ": " + x.at(i, j).to_string() + " vs " +
               y.at(i, j).to_string();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerifyReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = {
      "cyclotomic_direct_vs_reps",
      "jacobi_direct_vs_reps",
      "jacobi_single_pass_vs_per_entry",
      "jacobi_from_cyclotomic",
      "cyclotomic_from_jacobi",
      "cyclotomic_round_trip",
      "census",
      "jacobi_trivial_entry",
      "cyclotomic_orbit_constancy",
      "jacobi_signed_symmetry",
      "jacobi_norm",
      "jacobi_degenerate_entries",
      "class_count",
  };
  return names;
}

VerifyReport run_verify(const CharacterSetup& s, bool with_timing) {
  const std::uint32_t e = s.order();
  const std::uint32_t q = s.q();
  const Field& field = s.field();

  VerifyReport report;
  report.field = field.spec();
  report.e = e;
  report.k = s.cofactor();
  report.generator = field.to_string(s.generator());
  report.symmetry = s.symmetry();

  Timings t;
  const CycNumMatrix cyc_direct = timed([&] { return cyclotomic_direct(s); }, t.cyclotomic_direct_ms);
  const CycNumMatrix cyc_reps =
      timed([&] { return cyclotomic_via_reps(s, &report.cyclotomic_work); }, t.cyclotomic_reps_ms);
  const JacobiMatrix jac_direct = timed([&] { return jacobi_all_direct(s); }, t.jacobi_direct_ms);
  const JacobiMatrix jac_reps =
      timed([&] { return jacobi_via_reps(s, &report.jacobi_work); }, t.jacobi_reps_ms);
  if (with_timing) report.timings = t;

  const auto jacobi_classes = enumerate_classes(s.symmetry(), Family::Jacobi, s.cofactor());
  const auto cyc_classes = enumerate_classes(s.symmetry(), Family::Cyclotomic, s.cofactor());
  report.enumerated_classes = cyc_classes.size();

  using Check = std::function<std::optional<std::string>()>;
  const std::vector<std::pair<std::string, Check>> checks = {
      {"cyclotomic_direct_vs_reps", [&] { return first_cyc_mismatch(cyc_direct, cyc_reps); }},
      {"jacobi_direct_vs_reps", [&] { return first_jacobi_mismatch(jac_direct, jac_reps); }},
      {"jacobi_single_pass_vs_per_entry",
       [&]() -> std::optional<std::string> {
         for (std::uint32_t i = 0; i < e; ++i) {
           for (std::uint32_t j = 0; j < e; ++j) {
             if (!(jacobi_direct(s, i, j) == jac_direct.at(i, j))) {
               return "mismatch at " + pair_text(i, j);
             }
           }
         }
         return std::nullopt;
       }},
      {"jacobi_from_cyclotomic",
       [&] { return first_jacobi_mismatch(jacobi_from_cyclotomic(cyc_direct, s), jac_direct); }},
      {"cyclotomic_from_jacobi",
       [&] { return first_cyc_mismatch(cyclotomic_from_jacobi(jac_direct, s), cyc_direct); }},
      {"cyclotomic_round_trip",
       [&] {
         return first_cyc_mismatch(
             cyclotomic_from_jacobi(jacobi_from_cyclotomic(cyc_direct, s), s), cyc_direct);
       }},
      {"census",
       [&]() -> std::optional<std::string> {
         if (cyc_direct.total() == std::uint64_t{q} - 2) return std::nullopt;
         return "sum of cyclotomic numbers is " + std::to_string(cyc_direct.total());
       }},
      {"jacobi_trivial_entry",
       [&]() -> std::optional<std::string> {
         if (jac_direct.at(0, 0) == CycInt(s.ring(), Integer(q) - 2)) return std::nullopt;
         return "J(0,0) = " + jac_direct.at(0, 0).to_string();
       }},
      {"cyclotomic_orbit_constancy",
       [&]() -> std::optional<std::string> {
         for (const auto& c : cyc_classes) {
           const auto rep = cyc_direct.at(c.representative.first, c.representative.second);
           for (const auto& m : c.members) {
             if (cyc_direct.at(m.first, m.second) != rep) {
               return "orbit of " + pair_text(c.representative.first, c.representative.second) +
                      " differs at " + pair_text(m.first, m.second);
             }
           }
         }
         return std::nullopt;
       }},
      {"jacobi_signed_symmetry",
       [&]() -> std::optional<std::string> {
         for (const auto& c : jacobi_classes) {
           const CycInt& rep = jac_direct.at(c.representative.first, c.representative.second);
           for (std::size_t n = 0; n < c.members.size(); ++n) {
             const CycInt expected = c.signs[n] > 0 ? rep : -rep;
             if (!(jac_direct.at(c.members[n].first, c.members[n].second) == expected)) {
               return "orbit of " + pair_text(c.representative.first, c.representative.second) +
                      " differs at " + pair_text(c.members[n].first, c.members[n].second);
             }
           }
         }
         const bool odd = s.symmetry().kind == RuleKind::Odd;
         for (std::uint32_t i = 0; i < e; ++i) {
           for (std::uint32_t j = 0; j < e; ++j) {
             const std::uint32_t l = (2 * e - i - j) % e;
             const CycInt& x = jac_direct.at(i, j);
             bool ok;
             if (odd) {
               const int si = (i * s.cofactor()) % 2 ? -1 : 1;
               const int sj = (j * s.cofactor()) % 2 ? -1 : 1;
               const CycInt lhs = si > 0 ? x : -x;
               const CycInt& y = jac_direct.at(j, i);
               ok = lhs == (sj > 0 ? y : -y);
             } else {
               ok = x == jac_direct.at(j, i) && x == jac_direct.at(l, i);
             }
             if (!ok) return "relation fails at " + pair_text(i, j);
           }
         }
         return std::nullopt;
       }},
      {"jacobi_norm",
       [&]() -> std::optional<std::string> {
         const CycInt expected(s.ring(), Integer(q));
         for (std::uint32_t i = 1; i < e; ++i) {
           for (std::uint32_t j = 1; j < e; ++j) {
             if ((i + j) % e == 0) continue;
             const CycInt& x = jac_direct.at(i, j);
             if (!(x * x.conjugate(-1) == expected)) {
               return "J*conj(J) != q at " + pair_text(i, j);
             }
           }
         }
         return std::nullopt;
       }},
      {"jacobi_degenerate_entries",
       [&]() -> std::optional<std::string> {
         const CycInt minus_one(s.ring(), Integer(-1));
         for (std::uint32_t j = 1; j < e; ++j) {
           if (!(jac_direct.at(0, j) == minus_one)) {
             return "J(0," + std::to_string(j) + ") = " + jac_direct.at(0, j).to_string();
           }
         }
         return std::nullopt;
       }},
      {"class_count",
       [&]() -> std::optional<std::string> {
         const auto expected = class_count(e);
         if (cyc_classes.size() == expected && jacobi_classes.size() == expected) {
           return std::nullopt;
         }
         return "enumerated " + std::to_string(cyc_classes.size()) + " cyclotomic and " +
                std::to_string(jacobi_classes.size()) + " Jacobi classes, closed form " +
                std::to_string(expected);
       }},
  };

  for (const auto& [name, check] : checks) {
    CheckResult result{name, false, ""};
    try {
      const auto failure = check();
      result.pass = !failure;
      result.details = failure.value_or("ok");
    } catch (const std::exception& ex) {
      result.details = ex.what();
    }
    report.checks.push_back(std::move(result));
  }

  if (stated_class_count(e) != class_count(e)) {
    report.notes.push_back("class count: closed form with +1 gives " +
                           std::to_string(stated_class_count(e)) + ", enumeration gives " +
                           std::to_string(cyc_classes.size()));
  }
  for (const auto& ref : kReferenceJacobi) {
    if (ref.p != field.p() || ref.r != field.r() || ref.e != e ||
        ref.generator != s.generator().code) {
      continue;
    }
    const std::string computed = jac_direct.at(ref.i, ref.j).to_string();
    if (computed != ref.value) {
      report.notes.push_back("J" + pair_text(ref.i, ref.j) + ": reference value " + ref.value +
                             " differs from computed " + computed);
    }
  }
  return report;
}

Json to_json(const VerifyReport& report) {
  Json j;
  Json setup = to_json(report.field);
  setup["e"] = report.e;
  setup["k"] = report.k;
  setup["generator"] = report.generator;
  setup["case"] = std::string(to_string(report.symmetry.kind));
  j["setup"] = std::move(setup);

  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["details"] = c.details;
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  j["notes"] = report.notes;

  const std::size_t total = std::size_t{report.e} * report.e;
  auto work = [total](const WorkStats& w) {
    Json out;
    out["direct_entries"] = w.direct_entries;
    out["derived_entries"] = w.derived_entries;
    out["total_entries"] = total;
    return out;
  };
  Json stats;
  stats["cyclotomic"] = work(report.cyclotomic_work);
  stats["jacobi"] = work(report.jacobi_work);
  stats["enumerated_classes"] = report.enumerated_classes;
  stats["closed_form_classes"] = class_count(report.e);
  stats["stated_closed_form_classes"] = stated_class_count(report.e);
  j["statistics"] = std::move(stats);

  if (report.timings) {
    Json timing;
    timing["cyclotomic_direct_ms"] = report.timings->cyclotomic_direct_ms;
    timing["cyclotomic_reps_ms"] = report.timings->cyclotomic_reps_ms;
    timing["jacobi_direct_ms"] = report.timings->jacobi_direct_ms;
    timing["jacobi_reps_ms"] = report.timings->jacobi_reps_ms;
    j["timing"] = std::move(timing);
  }
  j["status"] = report.passed() ? "pass" : "fail";
  return j;
}

}  // namespace cyclo
