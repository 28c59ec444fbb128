#ifndef MONRES_ORACLE_HPP
#define MONRES_ORACLE_HPP

#include <vector>

#include "betti_table.hpp"
#include "ideal.hpp"
#include "taylor.hpp"

namespace monres {

/// All distinct subset lcms of the minimal generators, including 1,
/// sorted lexicographically.
std::vector<Monomial> lcm_lattice(
    const MonomialIdeal& M,
    int max_generators = TaylorComplex::kDefaultMaxGenerators);

/// Ground-truth multigraded Betti numbers: for each multidegree l in the
/// lcm lattice, the homology of the l-strand of the Taylor complex tensored
/// down to the field. The strand basis in homological degree i consists of
/// the faces with multidegree exactly l; boundary entries are the Taylor
/// signs where the facet keeps the multidegree, and are absent otherwise.
BettiTable betti_oracle(
    const MonomialIdeal& M, const FieldSpec& field,
    int max_generators = TaylorComplex::kDefaultMaxGenerators);

}  // namespace monres

#endif
