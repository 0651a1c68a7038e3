// Root systems of the simple types from their Cartan matrices.

#include <algorithm>
#include <set>

#include "loghodge/exactlin.hpp"
#include "loghodge/grpcpt.hpp"

namespace loghodge::grpcpt {

namespace {

using Matrix = std::vector<std::vector<int>>;

void link(Matrix& c, int i, int j, int cij = -1, int cji = -1) {
  c[i][j] = cij;
  c[j][i] = cji;
}

}  // namespace

std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  const int n = t.rank;
  if (t.is_torus()) return Matrix(n, std::vector<int>(n, 0));
  Matrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 2, n - 1, -1, -2);
      break;
    case Series::C:
      for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 2, n - 1, -2, -1);
      break;
    case Series::D:
      for (int i = 0; i + 3 < n; ++i) link(c, i, i + 1);
      link(c, n - 3, n - 2);
      link(c, n - 3, n - 1);
      break;
    case Series::E:
      // 1 - 3 - 4 - 5 - 6 - 7 - 8 with 2 attached to 4 (1-based labels)
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Series::F:
      link(c, 0, 1);
      link(c, 1, 2, -2, -1);
      link(c, 2, 3);
      break;
    case Series::G:
      link(c, 0, 1, -1, -3);
      break;
    case Series::Torus:
      break;
  }
  return c;
}

std::vector<std::vector<int>> positive_roots(const CartanType& t) {
  if (t.is_torus()) return {};
  const int n = t.rank;
  const Matrix c = cartan_matrix(t);
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    all.insert(e);
  }
  std::vector<std::vector<int>> out = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          --down[i];
          if (!all.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int k = 0; k < n; ++k) pairing += beta[k] * c[i][k];
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          ++up[i];
          if (!all.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      all.insert(r);
      out.push_back(r);
    }
  }
  return out;
}

std::size_t positive_root_count(const CartanType& t) { return positive_roots(t).size(); }

std::uint64_t weyl_group_order(const CartanType& t) {
  if (t.is_torus()) return 1;
  const int n = t.rank;
  auto roots = positive_roots(t);
  auto highest = *std::max_element(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int v : a) ha += v;
    for (int v : b) hb += v;
    return ha < hb;
  });

  std::vector<std::vector<exactlin::Rational>> dense;
  for (const auto& row : cartan_matrix(t)) dense.emplace_back(row.begin(), row.end());
  exactlin::Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && sgn(dense[piv][col]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(dense[piv], dense[col]);
      det = -det;
    }
    det *= dense[col][col];
    for (int r = col + 1; r < n; ++r) {
      exactlin::Rational f = dense[r][col] / dense[col][col];
      for (int k = col; k < n; ++k) dense[r][k] -= f * dense[col][k];
    }
  }

  std::uint64_t order = static_cast<std::uint64_t>(det.get_num().get_si());
  for (int k = 2; k <= n; ++k) order *= static_cast<std::uint64_t>(k);
  for (int m : highest) order *= static_cast<std::uint64_t>(m);
  return order;
}

}  // namespace loghodge::grpcpt
