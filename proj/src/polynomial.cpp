#include <algorithm>
#include <functional>
#include <stdexcept>

#include "loghodge/error.hpp"
#include "loghodge/gralg.hpp"

namespace loghodge::gralg {

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : e) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

GradedRing::GradedRing(std::size_t nvars) : degrees_(nvars, 1) {}

GradedRing::GradedRing(std::vector<int> var_degrees) : degrees_(std::move(var_degrees)) {
  for (int d : degrees_)
    if (d < 1) throw InputError("variable degrees must be >= 1");
}

bool GradedRing::standard() const {
  return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 1; });
}

int GradedRing::degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * degrees_[i];
  return d;
}

bool grevlex_greater(const GradedRing& ring, const Exponents& a, const Exponents& b) {
  int da = ring.degree(a), db = ring.degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

void enumerate(const GradedRing& ring, std::size_t var, int remaining, Exponents& cur,
               std::vector<Exponents>& out) {
  if (var == ring.nvars()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int w = ring.var_degree(var);
  for (int a = remaining / w; a >= 0; --a) {
    cur[var] = a;
    enumerate(ring, var + 1, remaining - a * w, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponents> monomial_basis(const GradedRing& ring, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents cur(ring.nvars(), 0);
  enumerate(ring, 0, d, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const Exponents& a, const Exponents& b) { return grevlex_greater(ring, a, b); });
  return out;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(std::move(e));
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  return monomial(Exponents(nvars, 0), c);
}

Polynomial Polynomial::monomial(Exponents e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial variable counts differ");
  Polynomial out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::optional<int> Polynomial::homogeneous_degree(const GradedRing& ring) const {
  if (terms_.empty() || ring.nvars() != nvars_) return std::nullopt;
  int d = ring.degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (ring.degree(e) != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitute: wrong number of images");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    out += term;
  }
  return out;
}

}  // namespace loghodge::gralg
