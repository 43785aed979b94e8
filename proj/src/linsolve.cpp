#include "taf/linsolve.hpp"

#include <algorithm>

namespace taf {

long row_reduce(RatMatrix& a) {
  std::erase_if(a, [](const RatRow& row) { return row.empty(); });
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  // forward elimination to echelon form; zero entries are skipped so sparse
  // inputs stay cheap
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    const Rat inv = Rat(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j)
      if (a[rank][j] != 0) a[rank][j] *= inv;
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      const Rat factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (a[rank][j] != 0) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  a.resize(rank);
  return static_cast<long>(rank);
}

RatMatrix nullspace(RatMatrix a, long cols) {
  const std::size_t n = static_cast<std::size_t>(cols);
  row_reduce(a);
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  for (const RatRow& row : a) {
    std::size_t col = 0;
    while (col < n && row[col] == 0) ++col;
    pivot_col_of_row.push_back(col);
    if (col < n) is_pivot[col] = true;
  }
  RatMatrix basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatRow v(n, Rat(0));
    v[free_col] = 1;
    // pivots are 1 after normalization, so back substitution needs no divide
    for (std::size_t i = a.size(); i-- > 0;) {
      const std::size_t p = pivot_col_of_row[i];
      if (p >= n) continue;
      Rat sum = 0;
      for (std::size_t j = p + 1; j < n; ++j)
        if (a[i][j] != 0 && v[j] != 0) sum += a[i][j] * v[j];
      v[p] = -sum;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace taf
