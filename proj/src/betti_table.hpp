#ifndef MONRES_BETTI_TABLE_HPP
#define MONRES_BETTI_TABLE_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace monres {

/// Finite map (homological degree, multidegree) -> positive count, together
/// with the field the numbers were computed over. Entries are kept sorted by
/// (hdeg, exponent vector), which is also the emission order.
struct BettiTable {
  FieldSpec field;
  std::map<std::pair<int, Monomial>, std::int64_t> entries;

  void add(int hdeg, const Monomial& mdeg, std::int64_t count);
  std::int64_t at(int hdeg, const Monomial& mdeg) const;

  /// Largest homological degree with a nonzero entry; -1 for the empty
  /// table (the zero module).
  int pd() const;

  /// Total Betti numbers beta_0 .. beta_pd.
  std::vector<std::int64_t> totals() const;

  /// Entry-level equality, ignoring the field tag.
  bool same_entries(const BettiTable& other) const {
    return entries == other.entries;
  }
};

}  // namespace monres

#endif
