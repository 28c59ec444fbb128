// Acceptance runner: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "betti.hpp"
#include "json_io.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "taylor.hpp"
#include "test_util.hpp"

using namespace monres;
using test_util::ideal_in;
using test_util::ideal_of;
using test_util::mono;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string name)
      : number_(number), name_(std::move(name)),
        start_(std::chrono::steady_clock::now()) {}

  void check(bool condition, const std::string& detail) {
    if (!condition) problems_.push_back(detail);
  }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  ~Criterion() {
    double elapsed = seconds();
    if (problems_.empty()) {
      std::printf("PASS  criterion %2d: %s (%.2fs)\n", number_, name_.c_str(),
                  elapsed);
    } else {
      ++failures;
      std::printf("FAIL  criterion %2d: %s (%.2fs)\n", number_, name_.c_str(),
                  elapsed);
      for (const auto& p : problems_) {
        std::printf("      - %s\n", p.c_str());
      }
    }
  }

 private:
  int number_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> problems_;
};

MonomialIdeal reference_ideal() {
  return ideal_of("a^3*b^2, c^3*d, a*c^2, a^2*c, b^2*d, a*b*c, b*c*d");
}

BettiTable reference_table(const VariableSet& vars) {
  BettiTable table;
  auto put = [&](int hdeg, const char* text) {
    table.add(hdeg, mono(text, vars), 1);
  };
  put(0, "1");
  put(1, "a^3*b^2");
  put(1, "c^3*d");
  put(1, "a*c^2");
  put(1, "a^2*c");
  put(1, "b^2*d");
  put(1, "a*b*c");
  put(1, "b*c*d");
  put(2, "a^3*b^2*c");
  put(2, "a^3*b^2*d");
  put(2, "a*c^3*d");
  put(2, "b*c^3*d");
  put(2, "a^2*c^2");
  put(2, "a*b*c^2");
  put(2, "a^2*b*c");
  put(2, "b^2*c*d");
  put(2, "a*b*c*d");
  put(3, "a^3*b^2*c*d");
  put(3, "a*b*c^3*d");
  put(3, "a^2*b*c^2");
  return table;
}

// The seven-variable ideals: six dominant generators (squares everywhere,
// witness cubed, one variable omitted per generator, all omitted variables
// distinct) plus one, two, or three nondominant generators.
const char* kSevenVarDominant =
    "a^3*c^2*d^2*e^2*f^2*g^2, a^2*b^3*d^2*e^2*f^2*g^2, "
    "a^2*b^2*c^3*e^2*f^2*g^2, a^2*b^2*c^2*d^3*f^2*g^2, "
    "a^2*b^2*c^2*d*e^3*g^2, b^2*c^2*d^2*e^2*f^2*g^3";

void criterion_1() {
  Criterion c(1, "worked seven-generator example, three methods over Q");
  auto M = reference_ideal();
  BettiTable expected = reference_table(M.variables());
  for (Method method : {Method::Decompose, Method::Oracle, Method::Cancel}) {
    BettiTable table = compute_betti(M, method, FieldSpec::rationals());
    c.check(table.same_entries(expected),
            std::string(method_name(method)) + " table differs");
    c.check(table.pd() == 3,
            std::string(method_name(method)) + " pd != 3");
    c.check(table.totals() == std::vector<std::int64_t>{1, 7, 9, 3},
            std::string(method_name(method)) + " totals differ");
  }
  c.check(c.seconds() < 1.0, "runtime exceeded 1 s");
}

void criterion_2() {
  Criterion c(2, "shifted slice of the worked example");
  auto M = reference_ideal();
  const auto& vars = M.variables();
  BettiTable table = compute_betti(M, Method::Decompose,
                                   FieldSpec::rationals());
  c.check(table.at(1, mono("a^3*b^2", vars)) == 1, "beta[1, a^3b^2] != 1");
  c.check(table.at(2, mono("a^3*b^2*c", vars)) == 1, "beta[2, a^3b^2c] != 1");
  c.check(table.at(2, mono("a^3*b^2*d", vars)) == 1, "beta[2, a^3b^2d] != 1");
  c.check(table.at(3, mono("a^3*b^2*c*d", vars)) == 1,
          "beta[3, a^3b^2cd] != 1");
}

void criterion_3() {
  Criterion c(3, "shift set and contractions of the worked example");
  auto M = reference_ideal();
  const auto& vars = M.variables();
  auto shifts = build_shift_set(M, 2);
  std::set<std::pair<int, Monomial>> got;
  for (const auto& s : shifts) got.emplace(s.j, s.m);
  std::set<std::pair<int, Monomial>> expected = {
      {0, mono("1", vars)},
      {1, mono("a^3*b^2", vars)},
      {1, mono("c^3*d", vars)},
      {2, mono("a^3*b^2*c^3*d", vars)},
  };
  c.check(got == expected, "shift set differs");

  auto H = classify(M).nondominant_indices();
  c.check(contract(M, mono("a^3*b^2*c^3*d", vars), H).is_unit(),
          "contraction along a^3b^2c^3d is not the unit ideal");
  c.check(contract(M, mono("a^3*b^2", vars), H) == ideal_in(vars, "c, d"),
          "contraction along a^3b^2 is not (c, d)");
  c.check(contract(M, mono("c^3*d", vars), H) == ideal_in(vars, "a, b"),
          "contraction along c^3d is not (a, b)");
  c.check(contract(M, mono("1", vars), H) ==
              ideal_in(vars, "a*c^2, a^2*c, b^2*d, a*b*c, b*c*d"),
          "trivial contraction does not keep the nondominant part");
}

void criterion_4() {
  Criterion c(4, "seven-variable projective dimensions 6 / 2 / 2");
  auto M = ideal_of(kSevenVarDominant);
  auto M2 = ideal_of(std::string(kSevenVarDominant) +
                     ", a*b*c*d*e*f*g^2, a^2*b^2*c^2*d^2*e^2*f");
  auto M3 = ideal_of(std::string(kSevenVarDominant) +
                     ", a*b*c*d*e*f*g^2, a^2*b^2*c^2*d^2*e^2*f, "
                     "a^2*b^2*c^2*d^2*e*f*g");
  c.check(M2.generator_count() == 8, "M2 is not minimally 8 generators");
  c.check(M3.generator_count() == 9, "M3 is not minimally 9 generators");
  c.check(projective_dimension(M, Method::Oracle, FieldSpec::rationals()) == 6,
          "pd(S/M) != 6");
  c.check(projective_dimension(M2, Method::Oracle, FieldSpec::rationals()) ==
              2,
          "pd(S/M2) != 2");
  c.check(projective_dimension(M3, Method::Oracle, FieldSpec::rationals()) ==
              2,
          "pd(S/M3) != 2");
  c.check(c.seconds() < 30.0, "runtime exceeded 30 s");
}

void criterion_5() {
  Criterion c(5, "five-variable full-pivot ideal has pd 5");
  auto M = ideal_of("x1^3, x1*x2, x1*x3, x1*x4, x1*x5, x2*x4, x3*x5");
  c.check(projective_dimension(M, Method::Oracle, FieldSpec::rationals()) == 5,
          "pd != 5 (oracle)");
  c.check(projective_dimension(M, Method::Decompose,
                               FieldSpec::rationals()) == 5,
          "pd != 5 (decompose)");
}

void criterion_6() {
  Criterion c(6, "tri-method agreement on 200 random ideals over Q and F_2");
  RandomIdealParams params;
  params.vars = 5;
  params.max_gens = 7;
  params.max_exp = 4;
  const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime(2)};
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    std::mt19937_64 rng(derive_seed(600, static_cast<std::uint64_t>(i)));
    MonomialIdeal M = random_ideal(rng, params);
    for (const auto& field : fields) {
      BettiTable oracle = compute_betti(M, Method::Oracle, field);
      BettiTable decompose = compute_betti(M, Method::Decompose, field);
      BettiTable cancel = compute_betti(M, Method::Cancel, field);
      if (!oracle.same_entries(decompose) || !oracle.same_entries(cancel)) {
        ++mismatches;
      }
    }
  }
  c.check(mismatches == 0,
          std::to_string(mismatches) + " field/instance mismatches");
  c.check(c.seconds() < 60.0, "runtime exceeded 60 s");
}

void criterion_7() {
  Criterion c(7, "dominant suite: Taylor is minimal on 100 random ideals");
  RandomIdealParams params;
  params.vars = 5;
  params.max_gens = 5;
  params.max_exp = 3;
  params.constraint = RandomIdealParams::Constraint::Dominant;
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 rng(derive_seed(700, static_cast<std::uint64_t>(i)));
    MonomialIdeal M = random_ideal(rng, params);
    BettiTable direct = betti_dominant(M);
    BettiTable oracle = betti_oracle(M, FieldSpec::rationals());
    std::int64_t total = 0;
    for (auto t : direct.totals()) total += t;
    bool ok = direct.same_entries(oracle) &&
              total == (std::int64_t(1) << M.generator_count()) &&
              build_scarf(M).size() ==
                  (std::size_t(1) << M.generator_count());
    if (!ok) ++bad;
  }
  c.check(bad == 0, std::to_string(bad) + " dominant instances failed");
}

void criterion_8() {
  Criterion c(8, "Artinian suite: pd = n, binomial bounds, witnesses");
  RandomIdealParams params;
  params.vars = 4;
  params.max_gens = 7;
  params.max_exp = 3;
  params.constraint = RandomIdealParams::Constraint::Artinian;
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 rng(derive_seed(800, static_cast<std::uint64_t>(i)));
    MonomialIdeal M = random_ideal(rng, params);
    BettiTable table = compute_betti(M, Method::Decompose,
                                     FieldSpec::rationals());
    const int n = static_cast<int>(M.variables().size());
    bool ok = table.pd() == n && artinian_binomial_bound(M, table);
    if (ok) {
      Monomial witness = full_support_witness(M, table);
      ok = support(witness).size() == static_cast<std::size_t>(n) &&
           table.at(n, witness) > 0;
    }
    if (!ok) ++bad;
  }
  c.check(bad == 0, std::to_string(bad) + " Artinian instances failed");
}

void criterion_9() {
  Criterion c(9, "characteristic tables in minimal degrees (two families)");
  int bad_generic = 0;
  {
    RandomIdealParams params;
    params.vars = 4;
    params.max_gens = 5;
    params.max_exp = 6;
    params.constraint = RandomIdealParams::Constraint::AlmostGeneric;
    for (int i = 0; i < 100; ++i) {
      std::mt19937_64 rng(derive_seed(900, static_cast<std::uint64_t>(i)));
      MonomialIdeal M = random_ideal(rng, params);
      BettiTable table = betti_oracle(M, FieldSpec::rationals());
      auto report = characteristic_check(M, table);
      if (!report.is_characteristic || !report.min_hdeg_ok) ++bad_generic;
    }
  }
  c.check(bad_generic == 0,
          std::to_string(bad_generic) + " almost generic instances failed");
  int bad_semi = 0;
  {
    RandomIdealParams params;
    params.vars = 4;
    params.max_gens = 5;
    params.max_exp = 3;
    params.constraint = RandomIdealParams::Constraint::Semidominant;
    params.semidominant_p = 2;
    for (int i = 0; i < 100; ++i) {
      std::mt19937_64 rng(derive_seed(901, static_cast<std::uint64_t>(i)));
      MonomialIdeal M = random_ideal(rng, params);
      BettiTable table = betti_oracle(M, FieldSpec::rationals());
      auto report = characteristic_check(M, table);
      if (!report.is_characteristic || !report.min_hdeg_ok) ++bad_semi;
    }
  }
  c.check(bad_semi == 0,
          std::to_string(bad_semi) + " 2-semidominant instances failed");
}

// One random contraction setup: a subset of the first d dominant
// generators plus the complementary part H.
struct ContractSetup {
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> h;
  Monomial m = Monomial(0);
  std::vector<Monomial> contracted;
  int j = 0;
};

bool random_contract_setup(std::mt19937_64& rng, const MonomialIdeal& M,
                           ContractSetup& out) {
  if (!M.is_proper()) return false;
  auto report = classify(M);
  auto dominant = report.dominant_indices();
  if (dominant.empty()) return false;
  std::size_t d = 1 + rng() % dominant.size();
  out.chosen.clear();
  out.h.clear();
  std::uint64_t subset = rng() % (std::uint64_t(1) << d);
  std::set<std::size_t> chosen_set;
  for (std::size_t i = 0; i < d; ++i) {
    if (subset & (std::uint64_t(1) << i)) chosen_set.insert(dominant[i]);
  }
  std::set<std::size_t> prefix(dominant.begin(), dominant.begin() + d);
  for (std::size_t i = 0; i < M.generator_count(); ++i) {
    if (chosen_set.count(i)) {
      out.chosen.push_back(i);
    } else if (!prefix.count(i)) {
      out.h.push_back(i);
    }
  }
  if (out.h.empty()) return false;
  out.m = Monomial(M.variables().size());
  for (auto i : out.chosen) out.m = lcm(out.m, M.generators()[i]);
  out.contracted = contract_generators(M, out.m, out.h);
  out.j = static_cast<int>(out.chosen.size());
  return true;
}

void criterion_10() {
  Criterion c(10, "structural invariants: d o d = 0, lifts, bijections, signs");
  RandomIdealParams params;
  params.vars = 4;
  params.max_gens = 6;
  params.max_exp = 3;

  // d o d = 0 on every complex constructed here (sign sums cancel; the
  // monomial parts of the two routes through a middle facet agree).
  int dd_failures = 0;
  std::vector<MonomialIdeal> pool = {reference_ideal(),
                                     ideal_of("ab, bc, ac"),
                                     ideal_of("x^2, y^2, z^2")};
  for (int i = 0; i < 25; ++i) {
    std::mt19937_64 rng(derive_seed(1000, static_cast<std::uint64_t>(i)));
    pool.push_back(random_ideal(rng, params));
  }
  for (const auto& M : pool) {
    if (M.is_zero()) continue;
    TaylorComplex complex = build_taylor(M);
    for (FaceMask face = 0; face < complex.face_count(); ++face) {
      if (TaylorComplex::hdeg(face) < 2) continue;
      std::map<FaceMask, int> composite;
      for (const auto& outer : complex.differential(face)) {
        for (const auto& inner : complex.differential(outer.facet)) {
          composite[inner.facet] += outer.sign * inner.sign;
        }
      }
      for (const auto& [facet, total] : composite) {
        if (total != 0) ++dd_failures;
      }
    }
  }
  c.check(dd_failures == 0,
          std::to_string(dd_failures) + " nonzero double-boundary terms");

  // Multidegree identity and the homological-degree bijection on 1000
  // random (subset, contraction) pairs.
  int lift_failures = 0;
  int bijection_failures = 0;
  {
    std::mt19937_64 rng(derive_seed(1001, 0));
    int pairs = 0;
    while (pairs < 1000) {
      MonomialIdeal M = random_ideal(rng, params);
      ContractSetup setup;
      if (!random_contract_setup(rng, M, setup)) continue;
      TaylorComplex ambient = build_taylor(M);
      TaylorComplex contracted(setup.contracted, M.variables().size());
      std::map<std::pair<int, Monomial>, std::int64_t> contract_counts;
      for (FaceMask mask = 0; mask < contracted.face_count(); ++mask) {
        ++contract_counts[{TaylorComplex::hdeg(mask), contracted.mdeg(mask)}];
      }
      std::map<std::pair<int, Monomial>, std::int64_t> ambient_counts;
      for (FaceMask mask = 0; mask < ambient.face_count(); ++mask) {
        ++ambient_counts[{TaylorComplex::hdeg(mask), ambient.mdeg(mask)}];
      }
      for (int probe = 0; probe < 5 && pairs < 1000; ++probe, ++pairs) {
        FaceMask local =
            static_cast<FaceMask>(rng() % contracted.face_count());
        FaceMask lifted = lift_face(setup.chosen, setup.h, local);
        if (ambient.mdeg(lifted) !=
            product(setup.m, contracted.mdeg(local))) {
          ++lift_failures;
          continue;
        }
        const Monomial& mprime = contracted.mdeg(local);
        Monomial shifted = product(setup.m, mprime);
        for (int i = 0;
             i <= static_cast<int>(contracted.generator_count()); ++i) {
          auto lhs = contract_counts.find({i, mprime});
          auto rhs = ambient_counts.find({i + setup.j, shifted});
          std::int64_t l = lhs == contract_counts.end() ? 0 : lhs->second;
          std::int64_t r = rhs == ambient_counts.end() ? 0 : rhs->second;
          if (l != r) ++bijection_failures;
        }
        for (int i = 0; i < setup.j; ++i) {
          if (ambient_counts.count({i, shifted}) != 0) ++bijection_failures;
        }
      }
    }
  }
  c.check(lift_failures == 0,
          std::to_string(lift_failures) + " multidegree identity failures");
  c.check(bijection_failures == 0,
          std::to_string(bijection_failures) + " bijection count failures");

  // Sign relation on 1000 random facet pairs, in the ordered presentation
  // (chosen dominant generators first).
  int sign_failures = 0;
  {
    std::mt19937_64 rng(derive_seed(1002, 0));
    int pairs = 0;
    while (pairs < 1000) {
      MonomialIdeal M = random_ideal(rng, params);
      ContractSetup setup;
      if (!random_contract_setup(rng, M, setup)) continue;
      std::vector<Monomial> ordered;
      std::vector<std::size_t> chosen_positions, h_positions;
      for (auto i : setup.chosen) {
        chosen_positions.push_back(ordered.size());
        ordered.push_back(M.generators()[i]);
      }
      for (auto i : setup.h) {
        h_positions.push_back(ordered.size());
        ordered.push_back(M.generators()[i]);
      }
      TaylorComplex ambient(ordered, M.variables().size());
      TaylorComplex contracted(setup.contracted, M.variables().size());
      for (int probe = 0; probe < 5 && pairs < 1000; ++probe) {
        FaceMask local =
            static_cast<FaceMask>(rng() % contracted.face_count());
        if (local == 0) continue;
        auto entries = contracted.differential(local);
        const auto& entry = entries[rng() % entries.size()];
        FaceMask lifted_face =
            lift_face(chosen_positions, h_positions, local);
        FaceMask lifted_facet =
            lift_face(chosen_positions, h_positions, entry.facet);
        int lifted_sign = 0;
        for (const auto& ambient_entry : ambient.differential(lifted_face)) {
          if (ambient_entry.facet == lifted_facet) {
            lifted_sign = ambient_entry.sign;
            break;
          }
        }
        int expected = (setup.j % 2 == 0) ? entry.sign : -entry.sign;
        if (lifted_sign != expected) ++sign_failures;
        ++pairs;
      }
    }
  }
  c.check(sign_failures == 0,
          std::to_string(sign_failures) + " sign relation failures");
}

void criterion_11() {
  Criterion c(11, "conjecture fuzz smoke: well-formed, re-verified reports");
  RandomIdealParams params;
  params.vars = 3;
  params.max_gens = 4;
  params.max_exp = 3;
  for (Conjecture which : {Conjecture::C1, Conjecture::C2, Conjecture::C3}) {
    FuzzReport report = fuzz_conjecture(which, params, 50, 1100,
                                        FieldSpec::rationals());
    OrderedJson doc = fuzz_report_to_json(report);
    c.check(doc["conjecture"] == conjecture_name(which),
            "report names the wrong conjecture");
    c.check(doc["tested"].is_number_integer() && report.tested >= 0 &&
                report.tested <= 50,
            "tested count out of range");
    c.check(doc["counterexamples"].is_array(),
            "counterexamples is not an array");
    for (const auto& ce : report.counterexamples) {
      BettiTable table = betti_oracle(ce.ideal, FieldSpec::rationals());
      c.check(table.same_entries(ce.betti),
              "reported counterexample does not re-verify");
    }
  }
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
