#ifndef MONRES_IDEAL_HPP
#define MONRES_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace monres {

/// Returns the divisibility-minimal elements of `gens`, deduplicated and
/// canonically sorted by (total degree, lexicographic exponent vector).
/// Idempotent and insensitive to the input order. An input containing the
/// unit monomial collapses to {1}; an empty input stays empty (zero ideal).
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// A monomial ideal held by its canonical minimal generating set.
/// The zero ideal has no generators; the unit ideal has the single
/// generator 1.
class MonomialIdeal {
 public:
  /// Minimalizes and canonicalizes `gens`.
  MonomialIdeal(VariableSet vars, std::vector<Monomial> gens);

  static MonomialIdeal zero(VariableSet vars) {
    return MonomialIdeal(std::move(vars), {});
  }

  const VariableSet& variables() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  /// Proper: neither the unit ideal nor the zero ideal.
  bool is_proper() const { return !is_zero() && !is_unit(); }

  bool operator==(const MonomialIdeal& other) const {
    return vars_ == other.vars_ && gens_ == other.gens_;
  }
  bool operator!=(const MonomialIdeal& other) const {
    return !(*this == other);
  }

  /// Canonical text form: generators joined by ", ".
  std::string to_string() const;

 private:
  VariableSet vars_;
  std::vector<Monomial> gens_;
};

/// Dominance classification of a minimal generating set. A generator is
/// dominant when some variable appears in it with an exponent strictly
/// larger than in every other generator.
struct DominanceReport {
  enum class Label { Dominant, PurelyNondominant, Semidominant };

  struct GeneratorInfo {
    bool is_dominant = false;
    /// Smallest variable index certifying dominance, when dominant.
    std::optional<std::size_t> witness;
  };

  std::vector<GeneratorInfo> generators;
  std::size_t nondominant_count = 0;  // p
  Label label = Label::Dominant;

  bool is_dominant_ideal() const { return label == Label::Dominant; }
  bool is_purely_nondominant() const {
    return label == Label::PurelyNondominant;
  }
  /// "dominant", "purely nondominant", or "<p>-semidominant".
  std::string label_text() const;

  std::vector<std::size_t> dominant_indices() const;
  std::vector<std::size_t> nondominant_indices() const;
};

/// Classifies a proper ideal; the unit and zero ideals are rejected.
DominanceReport classify(const MonomialIdeal& M);

/// Per-variable pure-power witnesses. The ideal is Artinian iff every
/// variable has one.
struct ArtinianReport {
  bool is_artinian = false;
  /// For each variable, the index of a generator that is a pure power of it.
  std::vector<std::optional<std::size_t>> pure_power_generator;
};

ArtinianReport artinian_pure_powers(const MonomialIdeal& M);

/// Smallest variable index i such that no variable other than x_i appears
/// with the same nonzero exponent in two distinct generators, or nullopt.
std::optional<std::size_t> almost_generic_exemption(const MonomialIdeal& M);

/// Smallest generator index dividing lcm(g, h) for every pair of
/// generators, or nullopt. Requires at least two generators.
std::optional<std::size_t> pairwise_lcm_divisor(const MonomialIdeal& M);

/// True iff M is 2- or 3-semidominant and some generator divides every
/// pairwise lcm. Requires at least two generators.
bool pd2_hypothesis(const MonomialIdeal& M);

/// Smallest variable v such that for every variable x_i some generator has
/// the form v^a * x_i^b with b >= 1, or nullopt. Such a pivot forces the
/// projective dimension to reach the variable count.
std::optional<std::size_t> full_pd_pivot(const MonomialIdeal& M);

}  // namespace monres

#endif
