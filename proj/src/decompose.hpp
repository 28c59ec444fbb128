#ifndef MONRES_DECOMPOSE_HPP
#define MONRES_DECOMPOSE_HPP

#include <vector>

#include "ideal.hpp"

namespace monres {

/// A (homological shift, multidegree shift) pair. The Betti numbers of a
/// contracted ideal enter the ambient table at (k + j, l * m).
struct Shift {
  int j = 0;
  Monomial m;

  bool operator==(const Shift& o) const { return j == o.j && m == o.m; }
  bool operator<(const Shift& o) const {
    if (j != o.j) return j < o.j;
    return m < o.m;
  }
};

/// A contracted ideal together with the shift it carries.
struct ShiftedIdeal {
  Shift shift;
  MonomialIdeal ideal;
};

/// The shift pairs over the first `d` dominant generators (canonical
/// order): (j, lcm of a j-subset) for every nonempty subset, as a set,
/// plus (0, 1). When the complementary part H is empty the result is just
/// {(0, 1)}. Distinct subsets of dominant generators always have distinct
/// lcms; a collision aborts, as it would break the decomposition's
/// disjointness.
std::vector<Shift> build_shift_set(const MonomialIdeal& M, int d);

/// Raw contraction along m over the generators indexed by H:
/// h' = lcm(m, h) / m, in H order, without minimalization.
std::vector<Monomial> contract_generators(const MonomialIdeal& M,
                                          const Monomial& m,
                                          const std::vector<std::size_t>& H);

/// Minimalized contraction; the ambient variable set is retained.
MonomialIdeal contract(const MonomialIdeal& M, const Monomial& m,
                       const std::vector<std::size_t>& H);

/// One decomposition level over all dominant generators: one term per
/// shift pair, with H = the nondominant generators. The Betti numbers of M
/// are the shifted sums of the terms' Betti numbers. A purely nondominant
/// ideal has no level to take and is rejected; a dominant ideal yields the
/// single term (0, 1, M).
std::vector<ShiftedIdeal> first_decomposition(const MonomialIdeal& M);

/// The two-term level that splits off the single first dominant generator:
/// (1, m_1, contraction) and (0, 1, ideal generated by the rest). Degenerate
/// single-generator case: just (0, 1, M).
std::vector<ShiftedIdeal> third_decomposition(const MonomialIdeal& M);

enum class NodeKind { Internal, Dominant, PurelyNondominant, Unit };

/// Recursive decomposition down to dominant / purely nondominant / unit
/// leaves. `shift` is the level shift relative to the parent; accumulated
/// shifts along a root-to-leaf path are sums of j and products of m.
struct DecompositionNode {
  Shift shift;
  MonomialIdeal ideal;
  NodeKind kind = NodeKind::Internal;
  std::vector<DecompositionNode> children;  // empty unless Internal
};

/// Builds the full tree by recursing through first decompositions. The
/// nondominant count strictly decreases into every internal child, so the
/// recursion terminates; that decrease is checked and its failure aborts.
DecompositionNode decomposition_tree(const MonomialIdeal& M);

const char* node_kind_name(NodeKind kind);

}  // namespace monres

#endif
