// Rank over Q by fraction-free sparse elimination.
//
// Each row is scaled to a primitive integer vector (denominators cleared,
// content divided out). Pivots follow a Markowitz rule: the shortest live row
// donates the pivot, taken in the column with the fewest live entries, ties
// broken towards unit coefficients and then the smallest column. Elimination
// replaces s by (p/g) s - (a/g) r with g = gcd(p, a) and re-normalizes s.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "loghodge/exactlin.hpp"

namespace loghodge::exactlin {
namespace {

struct IntRow {
  std::vector<std::size_t> cols;
  std::vector<mpz_class> vals;

  std::size_t size() const { return cols.size(); }
};

void make_primitive(IntRow& row) {
  if (row.vals.empty()) return;
  mpz_class g = 0;
  for (const auto& v : row.vals) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& v : row.vals) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const SparseRow& row) {
  mpz_class den = 1;
  for (const auto& e : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.value.get_den_mpz_t());
  IntRow out;
  out.cols.reserve(row.size());
  out.vals.reserve(row.size());
  for (const auto& e : row) {
    out.cols.push_back(e.col);
    mpz_class v = den / e.value.get_den();
    v *= e.value.get_num();
    out.vals.push_back(std::move(v));
  }
  make_primitive(out);
  return out;
}

class MarkowitzEliminator {
 public:
  explicit MarkowitzEliminator(const RatMatrix& m)
      : col_count_(m.ncols(), 0), col_rows_(m.ncols()) {
    rows_.reserve(m.nrows());
    for (const auto& r : m.rows()) {
      if (r.empty()) continue;
      std::size_t id = rows_.size();
      rows_.push_back(to_integer_row(r));
      alive_.push_back(true);
      for (std::size_t c : rows_[id].cols) {
        ++col_count_[c];
        col_rows_[c].push_back(id);
      }
      by_len_.insert({rows_[id].size(), id});
    }
  }

  std::size_t run() {
    std::size_t rank = 0;
    while (!by_len_.empty()) {
      std::size_t r = by_len_.begin()->second;
      by_len_.erase(by_len_.begin());
      alive_[r] = false;
      IntRow pivot_row = std::move(rows_[r]);
      rows_[r] = {};

      std::size_t best = 0;
      for (std::size_t k = 1; k < pivot_row.size(); ++k) {
        std::size_t cb = col_count_[pivot_row.cols[best]];
        std::size_t ck = col_count_[pivot_row.cols[k]];
        if (ck < cb) {
          best = k;
        } else if (ck == cb && !is_unit(pivot_row.vals[best]) && is_unit(pivot_row.vals[k])) {
          best = k;
        }
      }
      const std::size_t pc = pivot_row.cols[best];
      for (std::size_t c : pivot_row.cols) --col_count_[c];
      ++rank;

      std::vector<std::size_t> targets = std::move(col_rows_[pc]);
      col_rows_[pc].clear();
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (std::size_t s : targets) {
        if (!alive_[s]) continue;
        eliminate(s, pivot_row, best);
      }
    }
    return rank;
  }

 private:
  static bool is_unit(const mpz_class& v) { return v == 1 || v == -1; }

  void eliminate(std::size_t s, const IntRow& pivot, std::size_t pivot_pos) {
    IntRow& row = rows_[s];
    const std::size_t pc = pivot.cols[pivot_pos];
    auto it = std::lower_bound(row.cols.begin(), row.cols.end(), pc);
    if (it == row.cols.end() || *it != pc) return;
    const mpz_class& a = row.vals[it - row.cols.begin()];
    const mpz_class& p = pivot.vals[pivot_pos];

    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    mpz_class row_scale = p / g;
    mpz_class piv_scale = a / g;

    by_len_.erase({row.size(), s});

    IntRow out;
    out.cols.reserve(row.size() + pivot.size());
    out.vals.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    mpz_class tmp;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row.cols[i] < pivot.cols[j])) {
        out.cols.push_back(row.cols[i]);
        out.vals.push_back(row_scale * row.vals[i]);
        ++i;
      } else if (i == row.size() || pivot.cols[j] < row.cols[i]) {
        std::size_t c = pivot.cols[j];
        out.cols.push_back(c);
        tmp = piv_scale * pivot.vals[j];
        out.vals.push_back(-tmp);
        ++col_count_[c];
        col_rows_[c].push_back(s);
        ++j;
      } else {
        tmp = row_scale * row.vals[i];
        mpz_submul(tmp.get_mpz_t(), piv_scale.get_mpz_t(), pivot.vals[j].get_mpz_t());
        if (sgn(tmp) != 0) {
          out.cols.push_back(row.cols[i]);
          out.vals.push_back(tmp);
        } else {
          --col_count_[row.cols[i]];
        }
        ++i;
        ++j;
      }
    }
    make_primitive(out);
    row = std::move(out);
    if (row.size() == 0) {
      alive_[s] = false;
    } else {
      by_len_.insert({row.size(), s});
    }
  }

  std::vector<IntRow> rows_;
  std::vector<bool> alive_;
  std::vector<std::size_t> col_count_;
  std::vector<std::vector<std::size_t>> col_rows_;
  std::set<std::pair<std::size_t, std::size_t>> by_len_;
};

}  // namespace

std::size_t rank(const RatMatrix& m) {
  if (m.nrows() == 0 || m.ncols() == 0) return 0;
  return MarkowitzEliminator(m).run();
}

}  // namespace loghodge::exactlin
