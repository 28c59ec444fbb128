#ifndef MONRES_TAYLOR_HPP
#define MONRES_TAYLOR_HPP

#include <cstdint>
#include <vector>

#include "betti_table.hpp"
#include "ideal.hpp"
#include "monomial.hpp"

namespace monres {

/// A face is a subset of generator indices, stored as a bitmask. Bit i set
/// means generator i is a member. The empty face has multidegree 1 and
/// homological degree 0.
using FaceMask = std::uint32_t;

struct Face {
  FaceMask members = 0;
  int hdeg = 0;
  Monomial mdeg;
};

/// All 2^q faces over an ordered generating sequence (not necessarily
/// minimal), with multidegrees memoized bottom-up and the signed monomial
/// differential evaluated on demand.
///
/// The coefficient of the facet obtained by dropping the j-th smallest
/// member of a face sigma is (-1)^(j+1) * lcm(sigma) / lcm(sigma \ member).
class TaylorComplex {
 public:
  static constexpr int kDefaultMaxGenerators = 20;

  /// Builds the complex; q above `max_generators` is a resource error
  /// naming the 2^q blowup.
  TaylorComplex(std::vector<Monomial> generators, std::size_t nvars,
                int max_generators = kDefaultMaxGenerators);

  std::size_t generator_count() const { return gens_.size(); }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t face_count() const { return mdeg_.size(); }  // 2^q

  const Monomial& mdeg(FaceMask face) const { return mdeg_.at(face); }
  static int hdeg(FaceMask face) { return __builtin_popcount(face); }
  Face face(FaceMask mask) const { return Face{mask, hdeg(mask), mdeg(mask)}; }

  struct DifferentialEntry {
    FaceMask facet = 0;
    int sign = 1;               // (-1)^(j+1), j = 1-based member position
    Monomial coefficient;       // lcm(face) / lcm(facet)
  };

  /// Facet list of `face` with signed monomial coefficients, in member
  /// order. The empty face has no facets.
  std::vector<DifferentialEntry> differential(FaceMask face) const;

 private:
  std::vector<Monomial> gens_;
  std::size_t nvars_;
  std::vector<Monomial> mdeg_;  // indexed by mask
};

TaylorComplex build_taylor(const MonomialIdeal& M,
                           int max_generators = TaylorComplex::kDefaultMaxGenerators);

/// Faces of the Taylor complex of M (minimal generators) whose multidegree
/// is unique among all 2^q faces. Closure under facets is asserted.
std::vector<Face> build_scarf(const MonomialIdeal& M,
                              int max_generators = TaylorComplex::kDefaultMaxGenerators);

/// Lifts a face of a contracted complex into the ambient complex by
/// adjoining the chosen dominant generators: members(result) =
/// chosen ∪ {h_positions[s] : s in contract_face}. Index collisions are a
/// domain error. The multidegree identity
/// mdeg(result) = lcm(chosen) * mdeg(contract face) is the point of the map.
FaceMask lift_face(const std::vector<std::size_t>& chosen,
                   const std::vector<std::size_t>& h_positions,
                   FaceMask contract_face);

/// Reduces the complex by consecutive cancellations over the given field:
/// repeatedly selects an invertible entry (equal multidegrees, nonzero
/// scalar), removes the face pair, and applies the bilinear update
/// b_ts -= b_tp * b_qs / b_qp to the remaining entries in the pivot's
/// homological degree. Returns the surviving (hdeg, mdeg) multiset, whose
/// counts are the multigraded Betti numbers.
///
/// Pivot order: lowest homological degree first, then smallest (face,
/// facet) mask pair; a nonzero `order_seed` instead draws pivots from a
/// seeded stream. The resulting multiset is order-independent.
BettiTable cancel_minimize(const TaylorComplex& complex, const FieldSpec& field,
                           std::uint64_t order_seed = 0);

}  // namespace monres

#endif
