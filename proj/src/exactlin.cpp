#include "loghodge/exactlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace loghodge::exactlin {

void axpy(SparseRow& y, const Rational& a, const SparseRow& x) {
  if (sgn(a) == 0 || x.empty()) return;
  SparseRow out;
  out.reserve(y.size() + x.size());
  auto yi = y.begin();
  auto xi = x.begin();
  while (yi != y.end() || xi != x.end()) {
    if (xi == x.end() || (yi != y.end() && yi->col < xi->col)) {
      out.push_back(std::move(*yi++));
    } else if (yi == y.end() || xi->col < yi->col) {
      out.push_back({xi->col, a * xi->value});
      ++xi;
    } else {
      Rational v = yi->value + a * xi->value;
      if (sgn(v) != 0) out.push_back({yi->col, std::move(v)});
      ++yi;
      ++xi;
    }
  }
  y = std::move(out);
}

RatMatrix::RatMatrix(std::size_t nrows, std::size_t ncols) : rows_(nrows), ncols_(ncols) {}

RatMatrix RatMatrix::from_triplets(std::size_t nrows, std::size_t ncols,
                                   std::span<const Triplet> entries) {
  RatMatrix m(nrows, ncols);
  for (const auto& t : entries) {
    if (t.row >= nrows || t.col >= ncols) throw std::invalid_argument("triplet index out of range");
    auto& row = m.rows_[t.row];
    auto it = std::lower_bound(row.begin(), row.end(), t.col,
                               [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != row.end() && it->col == t.col) throw std::invalid_argument("duplicate (row, col) key");
    if (sgn(t.value) != 0) row.insert(it, Entry{t.col, t.value});
  }
  return m;
}

RatMatrix RatMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < ncols; ++c)
      if (sgn(rows[r][c]) != 0) m.rows_[r].push_back({c, rows[r][c]});
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, Rational(1)});
  return m;
}

std::size_t RatMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Rational RatMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Rational(0);
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= nrows() || c >= ncols_) throw std::out_of_range("RatMatrix::set");
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  bool present = it != row.end() && it->col == c;
  if (sgn(v) == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = v;
  } else {
    row.insert(it, Entry{c, v});
  }
}

void RatMatrix::add_to(std::size_t r, std::size_t c, const Rational& v) {
  set(r, c, at(r, c) + v);
}

void RatMatrix::set_row(std::size_t r, SparseRow row) {
  if (r >= nrows()) throw std::out_of_range("RatMatrix::set_row");
  if (!row.empty() && row.back().col >= ncols_) throw std::out_of_range("RatMatrix::set_row column");
  rows_[r] = std::move(row);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(ncols_, nrows());
  for (std::size_t r = 0; r < nrows(); ++r)
    for (const auto& e : rows_[r]) t.rows_[e.col].push_back({r, e.value});
  return t;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.ncols() != b.nrows()) throw std::invalid_argument("multiply: dimension mismatch");
  RatMatrix out(a.nrows(), b.ncols());
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    SparseRow acc;
    for (const auto& e : a.row(r)) axpy(acc, e.value, b.row(e.col));
    out.set_row(r, std::move(acc));
  }
  return out;
}

std::size_t cokernel_dim(const RatMatrix& m) { return m.ncols() - rank(m); }

std::vector<std::size_t> pivot_columns(const RatMatrix& m) {
  RowEchelon ech(m.ncols());
  for (const auto& row : m.rows()) ech.insert(row);
  return ech.pivots();
}

std::vector<SparseRow> kernel_basis(const RatMatrix& m) {
  RowEchelon ech(m.ncols());
  for (const auto& row : m.rows()) ech.insert(row);
  ech.interreduce();

  std::vector<SparseRow> by_free(m.ncols());
  for (std::size_t p : ech.pivots()) {
    const auto& row = ech.pivot_row(p);
    for (std::size_t k = 1; k < row.size(); ++k) by_free[row[k].col].push_back({p, -row[k].value});
  }
  std::vector<SparseRow> basis;
  for (std::size_t f = 0; f < m.ncols(); ++f) {
    if (ech.is_pivot(f)) continue;
    SparseRow v = std::move(by_free[f]);
    v.push_back({f, Rational(1)});
    std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
    basis.push_back(std::move(v));
  }
  return basis;
}

RowEchelon::RowEchelon(std::size_t ncols) : ncols_(ncols), row_of_col_(ncols, -1) {}

bool RowEchelon::insert(SparseRow row) {
  while (!row.empty() && is_pivot(row.front().col)) {
    Rational a = -row.front().value;
    axpy(row, a, rows_[row_of_col_[row.front().col]]);
  }
  if (row.empty()) return false;
  if (row.front().col >= ncols_) throw std::out_of_range("RowEchelon::insert column");
  Rational lead = row.front().value;
  if (lead != 1)
    for (auto& e : row) e.value /= lead;
  std::size_t col = row.front().col;
  row_of_col_[col] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  pivots_.insert(std::upper_bound(pivots_.begin(), pivots_.end(), col), col);
  return true;
}

void RowEchelon::interreduce() {
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRow& row = rows_[row_of_col_[*it]];
    std::size_t pos = 1;
    while (pos < row.size()) {
      std::size_t c = row[pos].col;
      if (is_pivot(c)) {
        Rational a = -row[pos].value;
        axpy(row, a, rows_[row_of_col_[c]]);
      } else {
        ++pos;
      }
    }
  }
}

SparseRow RowEchelon::reduce(SparseRow row) const {
  std::size_t pos = 0;
  while (pos < row.size()) {
    std::size_t c = row[pos].col;
    if (c < ncols_ && is_pivot(c)) {
      Rational a = -row[pos].value;
      axpy(row, a, rows_[row_of_col_[c]]);
    } else {
      ++pos;
    }
  }
  return row;
}

std::vector<std::size_t> RowEchelon::pivots() const { return pivots_; }

const SparseRow& RowEchelon::pivot_row(std::size_t col) const {
  if (!is_pivot(col)) throw std::out_of_range("RowEchelon::pivot_row: not a pivot column");
  return rows_[row_of_col_[col]];
}

}  // namespace loghodge::exactlin
