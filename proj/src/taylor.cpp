#include "taylor.hpp"

#include <map>
#include <string>

namespace monres {

TaylorComplex::TaylorComplex(std::vector<Monomial> generators,
                             std::size_t nvars, int max_generators)
    : gens_(std::move(generators)), nvars_(nvars) {
  const std::size_t q = gens_.size();
  if (max_generators <= 0) max_generators = kDefaultMaxGenerators;
  if (max_generators > kDefaultMaxGenerators) {
    throw DomainError("face cap above the 2^20 hard limit");
  }
  if (q > static_cast<std::size_t>(max_generators)) {
    throw ResourceError("Taylor complex on " + std::to_string(q) +
                        " generators needs 2^" + std::to_string(q) +
                        " faces, above the cap of 2^" +
                        std::to_string(max_generators));
  }
  for (const auto& g : gens_) {
    if (g.nvars() != nvars_) {
      throw DimensionError("generator does not match the variable count");
    }
  }
  mdeg_.reserve(std::size_t(1) << q);
  mdeg_.emplace_back(nvars_);  // empty face: the unit monomial
  for (FaceMask mask = 1; mask < (FaceMask(1) << q); ++mask) {
    FaceMask low = mask & (mask - 1);  // mask without its lowest bit
    std::size_t gen = static_cast<std::size_t>(__builtin_ctz(mask));
    mdeg_.push_back(lcm(mdeg_[low], gens_[gen]));
  }
}

std::vector<TaylorComplex::DifferentialEntry> TaylorComplex::differential(
    FaceMask face) const {
  std::vector<DifferentialEntry> out;
  const Monomial& m = mdeg(face);
  int position = 0;
  for (FaceMask rest = face; rest != 0; rest &= rest - 1) {
    ++position;
    FaceMask bit = rest & (~rest + 1);
    FaceMask facet = face & ~bit;
    out.push_back(DifferentialEntry{facet, position % 2 == 1 ? 1 : -1,
                                    quotient(m, mdeg(facet))});
  }
  return out;
}

TaylorComplex build_taylor(const MonomialIdeal& M, int max_generators) {
  return TaylorComplex(M.generators(), M.variables().size(), max_generators);
}

std::vector<Face> build_scarf(const MonomialIdeal& M, int max_generators) {
  TaylorComplex complex = build_taylor(M, max_generators);
  std::map<Monomial, int> mdeg_count;
  for (FaceMask mask = 0; mask < complex.face_count(); ++mask) {
    ++mdeg_count[complex.mdeg(mask)];
  }
  std::vector<Face> scarf;
  std::vector<bool> in_scarf(complex.face_count(), false);
  for (FaceMask mask = 0; mask < complex.face_count(); ++mask) {
    if (mdeg_count[complex.mdeg(mask)] == 1) {
      scarf.push_back(complex.face(mask));
      in_scarf[mask] = true;
    }
  }
  // The restriction of the differential must stay inside the subcomplex:
  // every facet of a Scarf face is itself Scarf.
  for (const auto& face : scarf) {
    for (FaceMask rest = face.members; rest != 0; rest &= rest - 1) {
      FaceMask bit = rest & (~rest + 1);
      if (!in_scarf[face.members & ~bit]) {
        throw Error("Scarf faces are not closed under facets; this breaks a "
                    "structural guarantee and needs investigation");
      }
    }
  }
  return scarf;
}

FaceMask lift_face(const std::vector<std::size_t>& chosen,
                   const std::vector<std::size_t>& h_positions,
                   FaceMask contract_face) {
  FaceMask out = 0;
  for (std::size_t idx : chosen) {
    FaceMask bit = FaceMask(1) << idx;
    if (out & bit) throw DomainError("lift_face: duplicate generator index");
    out |= bit;
  }
  for (FaceMask rest = contract_face; rest != 0; rest &= rest - 1) {
    std::size_t s = static_cast<std::size_t>(__builtin_ctz(rest));
    if (s >= h_positions.size()) {
      throw DomainError("lift_face: contract face indexes past the H part");
    }
    FaceMask bit = FaceMask(1) << h_positions[s];
    if (out & bit) throw DomainError("lift_face: index collision");
    out |= bit;
  }
  return out;
}

}  // namespace monres
