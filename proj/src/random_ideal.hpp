#ifndef MONRES_RANDOM_IDEAL_HPP
#define MONRES_RANDOM_IDEAL_HPP

#include <cstdint>
#include <random>

#include "ideal.hpp"

namespace monres {

/// Seeded random monomial ideals for verification campaigns and fuzzing.
/// Exponents are uniform in [0, max_exp]; sampled generating sets are
/// minimalized, and constrained families are produced constructively where
/// possible and by rejection sampling (with a retry cap) otherwise.
struct RandomIdealParams {
  int vars = 4;     // variable count drawn in [1, vars]
  int max_gens = 6; // generator count drawn in [1, max_gens]
  int max_exp = 4;

  enum class Constraint {
    None,
    Artinian,         // a pure power of every variable
    Dominant,         // every generator has a strict witness variable
    AlmostGeneric,    // one variable exempted from the no-shared-exponent rule
    TwoExemptGeneric, // two variables exempted
    Semidominant,     // exactly `semidominant_p` nondominant generators
  };
  Constraint constraint = Constraint::None;
  int semidominant_p = 0;
};

/// Draws one ideal. Throws ResourceError when rejection sampling exhausts
/// its retry budget without meeting the constraint.
MonomialIdeal random_ideal(std::mt19937_64& rng,
                           const RandomIdealParams& params);

/// Derives a per-instance seed from a campaign seed (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t index);

}  // namespace monres

#endif
