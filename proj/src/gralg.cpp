#include <algorithm>
#include <numeric>
#include <string>

#include "loghodge/error.hpp"
#include "loghodge/gralg.hpp"

namespace loghodge::gralg {

namespace {

void check_generators(const GradedRing& ring, const std::vector<Polynomial>& gens,
                      std::vector<int>& degrees) {
  degrees.clear();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& g = gens[k];
    const std::string which = "generator " + std::to_string(k + 1);
    if (g.nvars() != ring.nvars()) throw InputError(which + " has the wrong number of variables");
    if (g.is_zero()) throw InputError(which + " is zero");
    auto d = g.homogeneous_degree(ring);
    if (!d) throw InputError(which + " is not homogeneous");
    if (*d < 1) throw InputError(which + " is a constant");
    degrees.push_back(*d);
  }
}

using MonomialIndex = std::unordered_map<Exponents, std::size_t, ExponentsHash>;

MonomialIndex index_of(const std::vector<Exponents>& monomials) {
  MonomialIndex idx;
  idx.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) idx.emplace(monomials[i], i);
  return idx;
}

// Calls emit(row) for each product m * g_k landing in degree d.
template <class Emit>
void for_each_ideal_row(const IdealPresentation& p, int d, const MonomialIndex& idx, Emit emit) {
  const auto& ring = p.ring();
  Exponents prod(ring.nvars());
  for (std::size_t k = 0; k < p.generators().size(); ++k) {
    const int rest = d - p.degrees()[k];
    if (rest < 0) continue;
    for (const auto& m : monomial_basis(ring, rest)) {
      SparseRow row;
      row.reserve(p.generators()[k].terms().size());
      for (const auto& [e, c] : p.generators()[k].terms()) {
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = m[i] + e[i];
        row.push_back({idx.at(prod), c});
      }
      std::sort(row.begin(), row.end(),
                [](const exactlin::Entry& a, const exactlin::Entry& b) { return a.col < b.col; });
      emit(std::move(row));
    }
  }
}

}  // namespace

IdealPresentation::IdealPresentation(GradedRing ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  check_generators(ring_, generators_, degrees_);
}

IdealPresentation::IdealPresentation(GradedRing ring, std::vector<Polynomial> generators,
                                     std::vector<int> declared_degrees)
    : IdealPresentation(std::move(ring), std::move(generators)) {
  if (declared_degrees != degrees_) throw InputError("declared generator degrees do not match");
}

IdealPresentation IdealPresentation::permuted(const std::vector<std::size_t>& perm) const {
  const std::size_t n = ring_.nvars();
  if (perm.size() != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t v : perm) {
    if (v >= n || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  // old variable perm[i] becomes new variable i
  std::vector<Polynomial> images(n);
  std::vector<int> degrees(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[perm[i]] = Polynomial::variable(n, i);
    degrees[i] = ring_.var_degree(perm[i]);
  }
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(g.substitute(images));
  return IdealPresentation(GradedRing(std::move(degrees)), std::move(gens));
}

RatMatrix ideal_degree_matrix(const IdealPresentation& p, int d) {
  auto monomials = monomial_basis(p.ring(), d);
  auto idx = index_of(monomials);
  std::vector<SparseRow> rows;
  for_each_ideal_row(p, d, idx, [&](SparseRow row) { rows.push_back(std::move(row)); });
  RatMatrix m(rows.size(), monomials.size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, std::move(rows[r]));
  return m;
}

std::vector<Exponents> quotient_basis(const IdealPresentation& p, int d) {
  auto monomials = monomial_basis(p.ring(), d);
  auto pivots = exactlin::pivot_columns(ideal_degree_matrix(p, d));
  std::vector<Exponents> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    if (next < pivots.size() && pivots[next] == c) {
      ++next;
      continue;
    }
    out.push_back(monomials[c]);
  }
  return out;
}

std::vector<std::int64_t> regular_sequence_hilbert(const GradedRing& ring,
                                                   const std::vector<int>& generator_degrees,
                                                   int max_degree) {
  std::vector<std::int64_t> series(max_degree + 1, 0);
  if (max_degree < 0) return {};
  series[0] = 1;
  for (int dk : generator_degrees) {
    for (int t = max_degree; t >= dk; --t) series[t] -= series[t - dk];
  }
  for (int w : ring.var_degrees()) {
    // multiply by 1 / (1 - t^w)
    for (int t = w; t <= max_degree; ++t) series[t] += series[t - w];
  }
  return series;
}

GradedQuotientAlgebra::GradedQuotientAlgebra(IdealPresentation presentation, int truncation_degree)
    : presentation_(std::move(presentation)), truncation_(truncation_degree) {
  if (truncation_ < 0) throw InputError("truncation degree must be non-negative");
  pieces_.resize(truncation_ + 1);
  for (int d = 0; d <= truncation_; ++d) {
    Piece& pc = pieces_[d];
    pc.monomials = monomial_basis(ring(), d);
    pc.index = index_of(pc.monomials);
    pc.echelon = exactlin::RowEchelon(pc.monomials.size());
    for_each_ideal_row(presentation_, d, pc.index,
                       [&](SparseRow row) { pc.echelon.insert(std::move(row)); });
    pc.echelon.interreduce();
    pc.coset_position.assign(pc.monomials.size(), -1);
    for (std::size_t c = 0; c < pc.monomials.size(); ++c) {
      if (pc.echelon.is_pivot(c)) continue;
      pc.coset_position[c] = static_cast<long>(pc.basis.size());
      pc.basis.push_back(pc.monomials[c]);
    }
  }
}

const GradedQuotientAlgebra::Piece& GradedQuotientAlgebra::piece(int d) const {
  if (d < 0) throw std::out_of_range("negative degree");
  if (d > truncation_)
    throw TruncationError("degree " + std::to_string(d) + " exceeds truncation degree " +
                          std::to_string(truncation_));
  return pieces_[d];
}

std::size_t GradedQuotientAlgebra::dim(int d) const { return piece(d).basis.size(); }

const std::vector<Exponents>& GradedQuotientAlgebra::coset_basis(int d) const {
  return piece(d).basis;
}

std::vector<std::size_t> GradedQuotientAlgebra::hilbert_function() const {
  std::vector<std::size_t> h;
  for (const auto& pc : pieces_) h.push_back(pc.basis.size());
  return h;
}

SparseRow GradedQuotientAlgebra::reduce(const Exponents& monomial) const {
  const Piece& pc = piece(ring().degree(monomial));
  const std::size_t col = pc.index.at(monomial);
  if (pc.coset_position[col] >= 0) return {{static_cast<std::size_t>(pc.coset_position[col]), 1}};
  const SparseRow& row = pc.echelon.pivot_row(col);
  SparseRow out;
  out.reserve(row.size() - 1);
  for (std::size_t k = 1; k < row.size(); ++k)
    out.push_back({static_cast<std::size_t>(pc.coset_position[row[k].col]), -row[k].value});
  return out;
}

SparseRow GradedQuotientAlgebra::reduce(const Polynomial& f, int d) const {
  SparseRow acc;
  for (const auto& [e, c] : f.terms()) {
    if (ring().degree(e) != d) throw std::invalid_argument("reduce: polynomial not homogeneous of degree d");
    exactlin::axpy(acc, c, reduce(e));
  }
  return acc;
}

RatMatrix GradedQuotientAlgebra::mult_linear_matrix(const Polynomial& form, int d) const {
  if (form.homogeneous_degree(ring()) != 1)
    throw std::invalid_argument("mult_linear_matrix: form must be homogeneous of degree 1");
  const Piece& src = piece(d);
  const Piece& dst = piece(d + 1);
  RatMatrix columns(src.basis.size(), dst.basis.size());
  Exponents prod(ring().nvars());
  for (std::size_t j = 0; j < src.basis.size(); ++j) {
    SparseRow col;
    for (const auto& [e, c] : form.terms()) {
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = src.basis[j][i] + e[i];
      exactlin::axpy(col, c, reduce(prod));
    }
    columns.set_row(j, std::move(col));
  }
  return columns.transpose();
}

}  // namespace loghodge::gralg
