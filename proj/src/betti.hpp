#ifndef MONRES_BETTI_HPP
#define MONRES_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "betti_table.hpp"
#include "decompose.hpp"
#include "ideal.hpp"
#include "random_ideal.hpp"

namespace monres {

/// The three routes to a Betti table. They must agree entry for entry;
/// `verify_*` checks that they do.
enum class Method { Decompose, Oracle, Cancel };

Method parse_method(std::string_view text);
const char* method_name(Method method);

struct EngineOptions {
  int max_generators = 20;
  std::uint64_t seed = 0;  // cancellation pivot order
};

/// Betti numbers of a dominant ideal: every Taylor face survives, so
/// beta_{i,l} counts the i-element generator subsets with lcm l and the
/// totals sum to 2^q. Rejects non-dominant input.
BettiTable betti_dominant(const MonomialIdeal& D,
                          const EngineOptions& options = {});

/// Multigraded Betti numbers of S/M by the chosen route. The zero ideal
/// yields the single entry (0, 1); the unit ideal the empty table.
///
/// Decompose builds the decomposition tree, reads dominant leaves off their
/// Taylor complexes, sends purely nondominant leaves to the oracle, and
/// sums with the accumulated shifts.
BettiTable compute_betti(const MonomialIdeal& M, Method method,
                         const FieldSpec& field,
                         const EngineOptions& options = {});

/// max { i : beta_i != 0 }; 0 for the zero ideal, -1 for the unit ideal
/// (zero module).
int projective_dimension(const MonomialIdeal& M, Method method,
                         const FieldSpec& field,
                         const EngineOptions& options = {});

/// Betti-number support pattern against Taylor face-count parity: L is the
/// set of multidegrees carried by an odd number of faces; a table is
/// "characteristic" when each multidegree's total Betti value is 1 on L and
/// 0 elsewhere, and additionally "in minimal homological degrees" when each
/// surviving entry sits at the least homological degree realized by a face
/// of that multidegree.
struct CharacteristicReport {
  bool is_characteristic = false;
  bool min_hdeg_ok = false;
  std::vector<Monomial> odd_face_count_mdegs;  // L, sorted
  std::vector<Monomial> violations;
  std::map<Monomial, int> min_hdeg;  // least face hdeg per multidegree
};

CharacteristicReport characteristic_check(const MonomialIdeal& M,
                                          const BettiTable& table,
                                          const EngineOptions& options = {});

std::uint64_t binomial(unsigned n, unsigned k);

/// For an Artinian ideal in n variables: beta_i >= C(n, i) for all i.
bool artinian_binomial_bound(const MonomialIdeal& M, const BettiTable& table);

/// For an Artinian ideal in n variables: a multidegree with beta_{n,l} > 0
/// divisible by every variable. Its absence would falsify a structural
/// guarantee, so it is an error, not a result.
Monomial full_support_witness(const MonomialIdeal& M, const BettiTable& table);

/// Randomized falsification targets. None of these is a theorem; the
/// fuzzer only reports, it never asserts.
///   C1: two exemption variables instead of one still force a
///       characteristic table.
///   C2: if the ideal generated by the nondominant generators is almost
///       generic, the table is characteristic in minimal degrees.
///   C3: a generator dividing every pairwise lcm forces pd = 2 without any
///       semidominance restriction.
enum class Conjecture { C1, C2, C3 };

Conjecture parse_conjecture(std::string_view text);
const char* conjecture_name(Conjecture c);

struct FuzzReport {
  std::string conjecture;
  int tested = 0;
  struct Counterexample {
    std::uint64_t seed = 0;
    MonomialIdeal ideal;
    BettiTable betti;
  };
  std::vector<Counterexample> counterexamples;
};

/// Generates hypothesis-satisfying ideals from the seed stream and tests
/// the conclusion with the oracle. A failing instance is recomputed through
/// the other two routes before being reported; disagreement between routes
/// is an internal error, never a counterexample.
FuzzReport fuzz_conjecture(Conjecture which, const RandomIdealParams& params,
                           int budget, std::uint64_t campaign_seed,
                           const FieldSpec& field,
                           const EngineOptions& options = {});

/// Tri-method comparison on one ideal.
struct VerifyResult {
  int instances = 0;
  struct Mismatch {
    std::uint64_t seed = 0;
    MonomialIdeal ideal;
    std::string detail;
  };
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

VerifyResult verify_methods(const MonomialIdeal& M, const FieldSpec& field,
                            const EngineOptions& options = {});

/// Tri-method comparison on `count` seeded random ideals.
VerifyResult verify_random(const RandomIdealParams& params, int count,
                           std::uint64_t campaign_seed, const FieldSpec& field,
                           const EngineOptions& options = {});

}  // namespace monres

#endif
