#include "oracle.hpp"

#include <algorithm>
#include <map>

#include "linalg.hpp"

namespace monres {

namespace {

// Faces of each multidegree strand, grouped by homological degree and
// ordered by mask for deterministic matrix layouts.
using Strand = std::map<int, std::vector<FaceMask>>;

std::map<Monomial, Strand> strands_of(const TaylorComplex& complex) {
  std::map<Monomial, Strand> strands;
  for (FaceMask mask = 0; mask < complex.face_count(); ++mask) {
    strands[complex.mdeg(mask)][TaylorComplex::hdeg(mask)].push_back(mask);
  }
  return strands;
}

template <class F>
void strand_betti(const TaylorComplex& complex, const Monomial& mdeg,
                  const Strand& strand, const F& field, BettiTable& out) {
  // Position of each face within its homological degree.
  std::map<FaceMask, std::size_t> position;
  for (const auto& [hdeg, faces] : strand) {
    for (std::size_t i = 0; i < faces.size(); ++i) position[faces[i]] = i;
  }

  // rank of the strand boundary from degree i to degree i-1
  std::map<int, std::size_t> boundary_rank;
  for (const auto& [hdeg, faces] : strand) {
    if (hdeg == 0) continue;
    auto below = strand.find(hdeg - 1);
    if (below == strand.end()) continue;
    SparseMatrix<F> matrix;
    matrix.rows = below->second.size();
    matrix.cols = faces.size();
    for (std::size_t c = 0; c < faces.size(); ++c) {
      int member_position = 0;
      for (FaceMask rest = faces[c]; rest != 0; rest &= rest - 1) {
        ++member_position;
        FaceMask facet = faces[c] & ~(rest & (~rest + 1));
        if (complex.mdeg(facet) != mdeg) continue;  // non-unit coefficient
        int sign = member_position % 2 == 1 ? 1 : -1;
        matrix.add_entry(position.at(facet), c, field.from_int(sign));
      }
    }
    boundary_rank[hdeg] = matrix_rank(field, matrix);
  }

  for (const auto& [hdeg, faces] : strand) {
    auto rank_out = boundary_rank.count(hdeg) ? boundary_rank[hdeg] : 0;
    auto rank_in =
        boundary_rank.count(hdeg + 1) ? boundary_rank[hdeg + 1] : 0;
    std::int64_t betti = static_cast<std::int64_t>(faces.size()) -
                         static_cast<std::int64_t>(rank_out) -
                         static_cast<std::int64_t>(rank_in);
    out.add(hdeg, mdeg, betti);
  }
}

template <class F>
BettiTable oracle_impl(const MonomialIdeal& M, const FieldSpec& spec,
                       const F& field, int max_generators) {
  TaylorComplex complex = build_taylor(M, max_generators);
  BettiTable table;
  table.field = spec;
  for (const auto& [mdeg, strand] : strands_of(complex)) {
    strand_betti(complex, mdeg, strand, field, table);
  }
  return table;
}

}  // namespace

std::vector<Monomial> lcm_lattice(const MonomialIdeal& M, int max_generators) {
  TaylorComplex complex = build_taylor(M, max_generators);
  std::vector<Monomial> lattice;
  for (FaceMask mask = 0; mask < complex.face_count(); ++mask) {
    lattice.push_back(complex.mdeg(mask));
  }
  std::sort(lattice.begin(), lattice.end());
  lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());
  return lattice;
}

BettiTable betti_oracle(const MonomialIdeal& M, const FieldSpec& field,
                        int max_generators) {
  if (field.kind == FieldSpec::Kind::Rationals) {
    return oracle_impl(M, field, RationalField{}, max_generators);
  }
  return oracle_impl(M, field, PrimeField(field.p), max_generators);
}

}  // namespace monres
