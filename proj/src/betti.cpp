#include "betti.hpp"

#include <algorithm>

#include "oracle.hpp"
#include "taylor.hpp"

namespace monres {

Method parse_method(std::string_view text) {
  if (text == "decompose") return Method::Decompose;
  if (text == "oracle") return Method::Oracle;
  if (text == "cancel") return Method::Cancel;
  throw DomainError("unknown method '" + std::string(text) +
                    "' (expected decompose, oracle, or cancel)");
}

const char* method_name(Method method) {
  switch (method) {
    case Method::Decompose: return "decompose";
    case Method::Oracle: return "oracle";
    case Method::Cancel: return "cancel";
  }
  return "";
}

BettiTable betti_dominant(const MonomialIdeal& D, const EngineOptions& options) {
  if (!classify(D).is_dominant_ideal()) {
    throw DomainError("betti_dominant needs a dominant ideal");
  }
  TaylorComplex complex = build_taylor(D, options.max_generators);
  BettiTable table;
  for (FaceMask mask = 0; mask < complex.face_count(); ++mask) {
    table.add(TaylorComplex::hdeg(mask), complex.mdeg(mask), 1);
  }
  return table;
}

namespace {

void accumulate_leaves(const DecompositionNode& node, int j_acc,
                       const Monomial& m_acc, const FieldSpec& field,
                       const EngineOptions& options, BettiTable& out) {
  int j = j_acc + node.shift.j;
  Monomial m = product(m_acc, node.shift.m);
  switch (node.kind) {
    case NodeKind::Unit:
      return;  // S/S contributes nothing
    case NodeKind::Dominant: {
      BettiTable leaf = betti_dominant(node.ideal, options);
      for (const auto& [key, count] : leaf.entries) {
        out.add(key.first + j, product(key.second, m), count);
      }
      return;
    }
    case NodeKind::PurelyNondominant: {
      BettiTable leaf = betti_oracle(node.ideal, field, options.max_generators);
      for (const auto& [key, count] : leaf.entries) {
        out.add(key.first + j, product(key.second, m), count);
      }
      return;
    }
    case NodeKind::Internal:
      for (const auto& child : node.children) {
        accumulate_leaves(child, j, m, field, options, out);
      }
      return;
  }
}

}  // namespace

BettiTable compute_betti(const MonomialIdeal& M, Method method,
                         const FieldSpec& field, const EngineOptions& options) {
  if (M.is_zero()) {
    BettiTable table;
    table.field = field;
    table.add(0, Monomial(M.variables().size()), 1);
    return table;
  }
  if (M.is_unit()) {
    BettiTable table;
    table.field = field;
    return table;
  }
  switch (method) {
    case Method::Oracle:
      return betti_oracle(M, field, options.max_generators);
    case Method::Cancel:
      return cancel_minimize(build_taylor(M, options.max_generators), field,
                             options.seed);
    case Method::Decompose: {
      BettiTable table;
      table.field = field;
      accumulate_leaves(decomposition_tree(M), 0,
                        Monomial(M.variables().size()), field, options, table);
      return table;
    }
  }
  throw DomainError("unknown method");
}

int projective_dimension(const MonomialIdeal& M, Method method,
                         const FieldSpec& field, const EngineOptions& options) {
  return compute_betti(M, method, field, options).pd();
}

CharacteristicReport characteristic_check(const MonomialIdeal& M,
                                          const BettiTable& table,
                                          const EngineOptions& options) {
  TaylorComplex complex = build_taylor(M, options.max_generators);
  std::map<Monomial, std::int64_t> face_count;
  CharacteristicReport report;
  for (FaceMask mask = 0; mask < complex.face_count(); ++mask) {
    const Monomial& l = complex.mdeg(mask);
    ++face_count[l];
    int h = TaylorComplex::hdeg(mask);
    auto it = report.min_hdeg.find(l);
    if (it == report.min_hdeg.end()) {
      report.min_hdeg.emplace(l, h);
    } else if (h < it->second) {
      it->second = h;
    }
  }
  for (const auto& [l, count] : face_count) {
    if (count % 2 == 1) report.odd_face_count_mdegs.push_back(l);
  }

  std::map<Monomial, std::int64_t> column_sum;
  for (const auto& [key, count] : table.entries) {
    column_sum[key.second] += count;
  }
  for (const auto& [l, sum] : column_sum) {
    bool in_lattice = face_count.count(l) != 0;
    bool odd = in_lattice && face_count.at(l) % 2 == 1;
    if (!in_lattice || sum < 0 || sum > 1 || (sum == 1) != odd) {
      report.violations.push_back(l);
    }
  }
  for (const Monomial& l : report.odd_face_count_mdegs) {
    if (column_sum.count(l) == 0) report.violations.push_back(l);
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.is_characteristic = report.violations.empty();

  report.min_hdeg_ok = report.is_characteristic;
  if (report.min_hdeg_ok) {
    for (const Monomial& l : report.odd_face_count_mdegs) {
      if (table.at(report.min_hdeg.at(l), l) != 1) {
        report.min_hdeg_ok = false;
        break;
      }
    }
  }
  return report;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (n > 63) throw OverflowError("binomial coefficient out of range");
  if (k > n) return 0;
  // One row of Pascal's triangle; stays well inside 64 bits for n <= 63.
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i; j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

bool artinian_binomial_bound(const MonomialIdeal& M, const BettiTable& table) {
  if (!artinian_pure_powers(M).is_artinian) {
    throw DomainError("the binomial lower bound applies to Artinian ideals");
  }
  const unsigned n = static_cast<unsigned>(M.variables().size());
  auto totals = table.totals();
  for (unsigned i = 0; i <= n; ++i) {
    std::int64_t beta = i < totals.size() ? totals[i] : 0;
    if (beta < static_cast<std::int64_t>(binomial(n, i))) return false;
  }
  return true;
}

Monomial full_support_witness(const MonomialIdeal& M, const BettiTable& table) {
  if (!artinian_pure_powers(M).is_artinian) {
    throw DomainError("full-support witness applies to Artinian ideals");
  }
  const std::size_t n = M.variables().size();
  for (const auto& [key, count] : table.entries) {
    if (key.first == static_cast<int>(n) && count > 0 &&
        support(key.second).size() == n) {
      return key.second;
    }
  }
  throw Error("no full-support multidegree at the top homological degree; "
              "this contradicts a structural guarantee and needs "
              "investigation");
}

Conjecture parse_conjecture(std::string_view text) {
  if (text == "C1") return Conjecture::C1;
  if (text == "C2") return Conjecture::C2;
  if (text == "C3") return Conjecture::C3;
  throw DomainError("unknown conjecture '" + std::string(text) +
                    "' (expected C1, C2, or C3)");
}

const char* conjecture_name(Conjecture c) {
  switch (c) {
    case Conjecture::C1: return "C1";
    case Conjecture::C2: return "C2";
    case Conjecture::C3: return "C3";
  }
  return "";
}

namespace {

// Hypothesis-satisfying instance for one fuzz slot, or nullopt when the
// rejection budget runs out for the slot.
std::optional<MonomialIdeal> fuzz_instance(Conjecture which,
                                           std::mt19937_64& rng,
                                           const RandomIdealParams& params) {
  RandomIdealParams local = params;
  switch (which) {
    case Conjecture::C1:
      local.constraint = RandomIdealParams::Constraint::TwoExemptGeneric;
      return random_ideal(rng, local);
    case Conjecture::C2: {
      // Need: the subideal generated by the nondominant generators is
      // almost generic (trivially so when p <= 1).
      local.constraint = RandomIdealParams::Constraint::None;
      for (int attempt = 0; attempt < 500; ++attempt) {
        MonomialIdeal M = random_ideal(rng, local);
        if (!M.is_proper()) continue;
        auto report = classify(M);
        std::vector<Monomial> nondominant;
        for (auto i : report.nondominant_indices()) {
          nondominant.push_back(M.generators()[i]);
        }
        if (nondominant.empty()) return M;
        MonomialIdeal sub(M.variables(), std::move(nondominant));
        if (almost_generic_exemption(sub)) return M;
      }
      return std::nullopt;
    }
    case Conjecture::C3: {
      local.constraint = RandomIdealParams::Constraint::None;
      for (int attempt = 0; attempt < 500; ++attempt) {
        MonomialIdeal M = random_ideal(rng, local);
        if (M.generator_count() < 2) continue;
        if (pairwise_lcm_divisor(M)) return M;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool conclusion_holds(Conjecture which, const MonomialIdeal& M,
                      const BettiTable& table, const EngineOptions& options) {
  switch (which) {
    case Conjecture::C1:
      return characteristic_check(M, table, options).is_characteristic;
    case Conjecture::C2:
      return characteristic_check(M, table, options).min_hdeg_ok;
    case Conjecture::C3:
      return table.pd() == 2;
  }
  return false;
}

}  // namespace

FuzzReport fuzz_conjecture(Conjecture which, const RandomIdealParams& params,
                           int budget, std::uint64_t campaign_seed,
                           const FieldSpec& field,
                           const EngineOptions& options) {
  FuzzReport report;
  report.conjecture = conjecture_name(which);
  for (int i = 0; i < budget; ++i) {
    std::uint64_t instance_seed =
        derive_seed(campaign_seed, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(instance_seed);
    auto M = fuzz_instance(which, rng, params);
    if (!M) continue;
    ++report.tested;
    BettiTable table = betti_oracle(*M, field, options.max_generators);
    if (conclusion_holds(which, *M, table, options)) continue;
    // Re-verify through the independent routes before reporting.
    BettiTable via_decompose =
        compute_betti(*M, Method::Decompose, field, options);
    BettiTable via_cancel = compute_betti(*M, Method::Cancel, field, options);
    if (!table.same_entries(via_decompose) || !table.same_entries(via_cancel)) {
      throw Error("Betti routes disagree while re-verifying a fuzz "
                  "counterexample; the engine, not the conjecture, is wrong");
    }
    report.counterexamples.push_back(
        FuzzReport::Counterexample{instance_seed, *M, table});
  }
  return report;
}

VerifyResult verify_methods(const MonomialIdeal& M, const FieldSpec& field,
                            const EngineOptions& options) {
  VerifyResult result;
  result.instances = 1;
  BettiTable oracle = compute_betti(M, Method::Oracle, field, options);
  BettiTable decompose = compute_betti(M, Method::Decompose, field, options);
  BettiTable cancel = compute_betti(M, Method::Cancel, field, options);
  if (!oracle.same_entries(decompose)) {
    result.mismatches.push_back(
        {options.seed, M, "decompose disagrees with oracle"});
  }
  if (!oracle.same_entries(cancel)) {
    result.mismatches.push_back(
        {options.seed, M, "cancel disagrees with oracle"});
  }
  return result;
}

VerifyResult verify_random(const RandomIdealParams& params, int count,
                           std::uint64_t campaign_seed, const FieldSpec& field,
                           const EngineOptions& options) {
  VerifyResult result;
  for (int i = 0; i < count; ++i) {
    std::uint64_t instance_seed =
        derive_seed(campaign_seed, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(instance_seed);
    MonomialIdeal M = random_ideal(rng, params);
    ++result.instances;
    VerifyResult one = verify_methods(M, field, options);
    for (auto& mismatch : one.mismatches) {
      mismatch.seed = instance_seed;
      result.mismatches.push_back(std::move(mismatch));
    }
  }
  return result;
}

}  // namespace monres
