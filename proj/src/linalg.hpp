#ifndef MONRES_LINALG_HPP
#define MONRES_LINALG_HPP

#include <cstddef>
#include <tuple>
#include <vector>

namespace monres {

/// Sparse matrix in triplet form over a field F.
template <class F>
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::tuple<std::size_t, std::size_t, typename F::Elem>> entries;

  void add_entry(std::size_t r, std::size_t c, typename F::Elem v) {
    entries.emplace_back(r, c, std::move(v));
  }
};

/// Exact rank by Gaussian elimination over the field. The matrices that
/// arise here are small strand boundaries, so a dense working copy is fine.
template <class F>
std::size_t matrix_rank(const F& field, const SparseMatrix<F>& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::vector<typename F::Elem>> a(
      m.rows, std::vector<typename F::Elem>(m.cols, field.zero()));
  for (const auto& [r, c, v] : m.entries) {
    a[r][c] = field.add(a[r][c], v);
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && field.is_zero(a[pivot][col])) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t row = rank + 1; row < m.rows; ++row) {
      if (field.is_zero(a[row][col])) continue;
      auto factor = field.div(a[row][col], a[rank][col]);
      for (std::size_t k = col; k < m.cols; ++k) {
        a[row][k] = field.sub(a[row][k], field.mul(factor, a[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace monres

#endif
