#include "fudg/kirchhoff.hpp"

#include <utility>

#include "counting.hpp"

namespace fudg {

namespace detail {

BigInt count_in_trees(std::span<const std::vector<std::uint32_t>> heads) {
  const std::size_t m = heads.size();
  if (m == 0) return 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m));
  for (std::size_t i = 0; i < m; ++i) {
    a[i][i] = static_cast<long>(heads[i].size());
    for (auto j : heads[i]) {
      if (j < m) a[i][j] -= 1;
    }
  }

  bool negate = false;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < m && a[r][k] == 0) ++r;
      if (r == m) return 0;
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    const BigInt& pivot = a[k][k];
    for (std::size_t i = k + 1; i < m; ++i) {
      const BigInt& aik = a[i][k];
      for (std::size_t j = k + 1; j < m; ++j) {
        BigInt v = a[i][j] * pivot;
        if (aik != 0) v -= aik * a[k][j];
        a[i][j] = v / prev;
      }
      a[i][k] = 0;
    }
    prev = pivot;
  }
  BigInt det = a[m - 1][m - 1];
  if (negate) det = -det;
  return det;
}

}  // namespace detail

BigInt count_arborescences(const SupportedEdgeGraph& g) { return detail::count_in_trees(g.heads); }

}  // namespace fudg
