#include "loghodge/grpcpt.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>

#include "loghodge/error.hpp"

namespace loghodge::grpcpt {

namespace {

const char* series_letter(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::E: return "E";
    case Series::F: return "F";
    case Series::G: return "G";
    case Series::Torus: return "T";
  }
  return "?";
}

bool valid(Series s, int r) {
  switch (s) {
    case Series::A: return r >= 1;
    case Series::B: return r >= 2;
    case Series::C: return r >= 2;
    case Series::D: return r >= 3;
    case Series::E: return r >= 6 && r <= 8;
    case Series::F: return r == 4;
    case Series::G: return r == 2;
    case Series::Torus: return r >= 1;
  }
  return false;
}

}  // namespace

CartanType::CartanType(Series s, int r) : series(s), rank(r) {
  if (!valid(s, r))
    throw InputError(std::string("invalid Cartan type ") + series_letter(s) + std::to_string(r));
}

CartanType CartanType::parse(const std::string& text) {
  if (text.size() < 2) throw InputError("cannot parse Cartan type '" + text + "'");
  static const std::map<char, Series> letters = {
      {'A', Series::A}, {'B', Series::B}, {'C', Series::C}, {'D', Series::D},
      {'E', Series::E}, {'F', Series::F}, {'G', Series::G}, {'T', Series::Torus}};
  auto it = letters.find(static_cast<char>(std::toupper(static_cast<unsigned char>(text[0]))));
  if (it == letters.end()) throw InputError("unknown Cartan series in '" + text + "'");
  const std::string digits = text.substr(1);
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InputError("cannot parse Cartan type rank in '" + text + "'");
  return CartanType(it->second, std::stoi(digits));
}

std::string CartanType::name() const { return series_letter(series) + std::to_string(rank); }

InvariantDegrees invariant_degrees(const CartanType& t) {
  const int n = t.rank;
  std::vector<int> d;
  switch (t.series) {
    case Series::Torus:
      d.assign(n, 1);
      break;
    case Series::A:
      for (int k = 2; k <= n + 1; ++k) d.push_back(k);
      break;
    case Series::B:
    case Series::C:
      for (int k = 1; k <= n; ++k) d.push_back(2 * k);
      break;
    case Series::D:
      for (int k = 1; k < n; ++k) d.push_back(2 * k);
      d.push_back(n);
      break;
    case Series::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Series::F:
      d = {2, 6, 8, 12};
      break;
    case Series::G:
      d = {2, 6};
      break;
  }
  std::sort(d.begin(), d.end());
  return {d};
}

BigradedTable closed_form_table(const InvariantDegrees& d, std::optional<int> j_max) {
  std::map<std::pair<int, int>, std::uint64_t> poly{{{0, 0}, 1}};
  for (int dk : d.degrees) {
    auto next = poly;
    for (const auto& [key, c] : poly) next[{key.first + dk - 1, key.second + dk}] += c;
    poly = std::move(next);
  }
  BigradedTable t;
  for (const auto& [key, c] : poly)
    if (!j_max || key.second <= *j_max) t.set(key.first, key.second, c);
  t.j_max = j_max ? *j_max : std::accumulate(d.degrees.begin(), d.degrees.end(), 0);
  return t;
}

bool has_graph_ideal(const CartanType& t) {
  return t.is_torus() || (t.series == Series::A && (t.rank == 1 || t.rank == 2));
}

namespace {

using gralg::Polynomial;

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

// 3x3 traceless matrix over the variables offset..offset+7.
std::array<std::array<Polynomial, 3>, 3> sl3_matrix(std::size_t n, std::size_t offset) {
  std::array<std::array<Polynomial, 3>, 3> m;
  const std::array<std::pair<int, int>, 8> slots = {{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}};
  for (std::size_t k = 0; k < slots.size(); ++k) m[slots[k].first][slots[k].second] = var(n, offset + k);
  m[2][2] = -(m[0][0] + m[1][1]);
  return m;
}

Polynomial trace_power(const std::array<std::array<Polynomial, 3>, 3>& m, int power, std::size_t n) {
  Polynomial tr(n);
  if (power == 2) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) tr += m[a][b] * m[b][a];
  } else {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) tr += m[a][b] * m[b][c] * m[c][a];
  }
  return tr;
}

}  // namespace

gralg::IdealPresentation graph_ideal(const CartanType& t) {
  if (t.is_torus()) {
    const std::size_t r = static_cast<std::size_t>(t.rank);
    const std::size_t n = 2 * r;
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < r; ++k) gens.push_back(var(n, k) - var(n, r + k));
    return gralg::IdealPresentation(gralg::GradedRing(n), std::move(gens));
  }
  if (t.series == Series::A && t.rank == 1) {
    const std::size_t n = 6;
    auto kappa = [&](std::size_t o) { return var(n, o) * var(n, o) + var(n, o + 1) * var(n, o + 2); };
    return gralg::IdealPresentation(gralg::GradedRing(n), {kappa(0) - kappa(3)});
  }
  if (t.series == Series::A && t.rank == 2) {
    const std::size_t n = 16;
    auto x = sl3_matrix(n, 0);
    auto y = sl3_matrix(n, 8);
    return gralg::IdealPresentation(
        gralg::GradedRing(n),
        {trace_power(x, 2, n) - trace_power(y, 2, n), trace_power(x, 3, n) - trace_power(y, 3, n)});
  }
  throw InputError("no graph-ideal presentation for " + t.name() +
                   "; supported types: T1..T9 (any torus rank), A1, A2");
}

int dlog_row_rank(const CartanType& t) { return t.is_torus() ? t.rank : 0; }

}  // namespace loghodge::grpcpt
