#include "loghodge/koszul.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "loghodge/error.hpp"

namespace loghodge::koszul {

std::vector<Subset> subsets(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  if (k > n) return out;
  Subset cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t pos = k;
    while (pos > 0 && cur[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++cur[pos - 1];
    for (std::size_t i = pos; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

std::size_t KoszulSlice::term_dim(int k) const {
  if (k < 0 || k > j_) return 0;
  return term_dims_[k];
}

const RatMatrix& KoszulSlice::differential(int k) const {
  if (k < 1 || k > j_) throw std::out_of_range("no differential d_" + std::to_string(k));
  return differentials_[k - 1];
}

void KoszulSlice::check_composition() const {
  for (int k = 2; k <= j_; ++k) {
    if (!exactlin::multiply(differential(k - 1), differential(k)).is_zero())
      throw InvariantViolation("Koszul slice j=" + std::to_string(j_) + ": d_" +
                               std::to_string(k - 1) + " o d_" + std::to_string(k) + " != 0");
  }
}

KoszulSlice build_slice(const gralg::GradedQuotientAlgebra& a, int j) {
  if (!a.ring().standard()) throw InputError("Koszul slices need every variable in degree 1");
  if (j < 0) throw InputError("internal degree must be non-negative");
  if (j > a.truncation_degree())
    throw TruncationError("internal degree " + std::to_string(j) + " exceeds truncation degree " +
                          std::to_string(a.truncation_degree()));

  const std::size_t n = a.ring().nvars();
  KoszulSlice s;
  s.j_ = j;
  s.nvars_ = n;

  std::vector<std::vector<Subset>> subs(j + 1);
  for (int k = 0; k <= j; ++k) {
    subs[k] = subsets(n, k);
    s.term_dims_.push_back(subs[k].size() * a.dim(j - k));
  }

  // mult_cols[v][d] row b = image of coset basis element b of A_d under x_v
  std::vector<std::vector<RatMatrix>> mult_cols(n, std::vector<RatMatrix>(j));
  for (std::size_t v = 0; v < n; ++v)
    for (int d = 0; d < j; ++d)
      mult_cols[v][d] = a.mult_linear_matrix(gralg::Polynomial::variable(n, v), d).transpose();

  for (int k = 1; k <= j; ++k) {
    const std::size_t src_dim_a = a.dim(j - k);
    const std::size_t dst_dim_a = a.dim(j - k + 1);
    std::map<Subset, std::size_t> dst_index;
    for (std::size_t t = 0; t < subs[k - 1].size(); ++t) dst_index.emplace(subs[k - 1][t], t);

    RatMatrix columns(s.term_dims_[k], s.term_dims_[k - 1]);
    for (std::size_t t = 0; t < subs[k].size(); ++t) {
      const Subset& idx = subs[k][t];
      // J = I minus its s-th element, sign (-1)^s with s counted from 0
      std::vector<std::pair<std::size_t, int>> faces;
      for (std::size_t pos = 0; pos < idx.size(); ++pos) {
        Subset face = idx;
        face.erase(face.begin() + static_cast<long>(pos));
        faces.push_back({dst_index.at(face), pos % 2 == 0 ? 1 : -1});
      }
      for (std::size_t b = 0; b < src_dim_a; ++b) {
        exactlin::SparseRow col;
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
          const auto& image = mult_cols[idx[pos]][j - k].row(b);
          const std::size_t base = faces[pos].first * dst_dim_a;
          for (const auto& e : image)
            col.push_back({base + e.col, faces[pos].second > 0 ? e.value : exactlin::Rational(-e.value)});
        }
        std::sort(col.begin(), col.end(),
                  [](const exactlin::Entry& x, const exactlin::Entry& y) { return x.col < y.col; });
        columns.set_row(t * src_dim_a + b, std::move(col));
      }
    }
    s.differentials_.push_back(columns.transpose());
  }
  return s;
}

std::vector<std::size_t> homology_dims(const KoszulSlice& s) {
  s.check_composition();
  const int j = s.internal_degree();
  std::vector<std::size_t> ranks(j + 2, 0);  // ranks[k] = rank ∂_k; ∂_0 = ∂_{j+1} = 0
  for (int k = 1; k <= j; ++k) ranks[k] = exactlin::rank(s.differential(k));
  std::vector<std::size_t> h(j + 1);
  for (int k = 0; k <= j; ++k) {
    const std::size_t t = s.term_dim(k);
    if (ranks[k] + ranks[k + 1] > t)
      throw InvariantViolation("Koszul slice j=" + std::to_string(j) + ": ranks exceed term " +
                               std::to_string(k));
    h[k] = t - ranks[k] - ranks[k + 1];
  }
  return h;
}

BigradedTable tor_table(const gralg::GradedQuotientAlgebra& a, int j_max) {
  if (j_max < 0) throw InputError("jmax must be non-negative");
  BigradedTable table;
  table.j_max = j_max;
  for (int j = 0; j <= j_max; ++j) {
    KoszulSlice s = build_slice(a, j);
    auto h = homology_dims(s);
    std::int64_t euler_terms = 0, euler_homology = 0;
    for (int k = 0; k <= j; ++k) {
      const std::int64_t sign = k % 2 == 0 ? 1 : -1;
      euler_terms += sign * static_cast<std::int64_t>(s.term_dim(k));
      euler_homology += sign * static_cast<std::int64_t>(h[k]);
      table.set(j - k, j, h[k]);
    }
    if (euler_terms != euler_homology)
      throw InvariantViolation("Euler checksum mismatch in internal degree " + std::to_string(j));
    table.euler_checksums[j] = euler_terms;
  }
  return table;
}

}  // namespace loghodge::koszul
