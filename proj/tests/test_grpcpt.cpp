#include <doctest.h>

#include <numeric>
#include <random>

#include "loghodge/error.hpp"
#include "loghodge/grpcpt.hpp"
#include "loghodge/koszul.hpp"
#include "loghodge/verify.hpp"
#include "oracles.hpp"

using namespace loghodge;
using namespace loghodge::grpcpt;
using gralg::GradedQuotientAlgebra;
using gralg::IdealPresentation;
using gralg::Polynomial;
using exactlin::Rational;

namespace {

struct Classical {
  const char* name;
  std::uint64_t weyl_order;
  std::size_t positive_roots;
};

// Reference orders and root counts, independent of the Cartan-matrix code.
const Classical kClassical[] = {
    {"A1", 2, 1},          {"A2", 6, 3},        {"A3", 24, 6},        {"A4", 120, 10},
    {"B2", 8, 4},          {"B3", 48, 9},       {"B4", 384, 16},      {"C3", 48, 9},
    {"C4", 384, 16},       {"D4", 192, 12},     {"D5", 1920, 20},     {"G2", 12, 6},
    {"F4", 1152, 24},      {"E6", 51840, 36},   {"E7", 2903040, 63},  {"E8", 696729600, 120},
};

BigradedTable table_of(std::initializer_list<std::pair<std::pair<int, int>, std::uint64_t>> entries) {
  BigradedTable t;
  for (const auto& [k, v] : entries) t.set(k.first, k.second, v);
  return t;
}

BigradedTable engine(const IdealPresentation& p, int j_max) {
  return koszul::tor_table(GradedQuotientAlgebra(p, j_max), j_max);
}

}  // namespace

TEST_CASE("CartanType parsing and validity") {
  CHECK(CartanType::parse("a2") == CartanType(Series::A, 2));
  CHECK(CartanType::parse("T3").is_torus());
  CHECK(CartanType::parse("e8").name() == "E8");
  CHECK_THROWS_AS(CartanType::parse("B1"), InputError);
  CHECK_THROWS_AS(CartanType::parse("D2"), InputError);
  CHECK_THROWS_AS(CartanType::parse("E9"), InputError);
  CHECK_THROWS_AS(CartanType::parse("G3"), InputError);
  CHECK_THROWS_AS(CartanType::parse("Q2"), InputError);
  CHECK_THROWS_AS(CartanType::parse("A"), InputError);
}

TEST_CASE("invariant_degrees examples") {
  CHECK(invariant_degrees(CartanType::parse("A1")).degrees == std::vector<int>{2});
  CHECK(invariant_degrees(CartanType::parse("A2")).degrees == std::vector<int>{2, 3});
  CHECK(invariant_degrees(CartanType::parse("B2")).degrees == std::vector<int>{2, 4});
  CHECK(invariant_degrees(CartanType::parse("D4")).degrees == std::vector<int>{2, 4, 4, 6});
  CHECK(invariant_degrees(CartanType::parse("T2")).degrees == std::vector<int>{1, 1});
}

TEST_CASE("degree tables match Weyl group orders and positive-root counts") {
  for (const auto& c : kClassical) {
    CAPTURE(c.name);
    const auto t = CartanType::parse(c.name);
    const auto d = invariant_degrees(t).degrees;
    std::uint64_t prod = 1;
    std::size_t exps = 0;
    for (int k : d) {
      prod *= static_cast<std::uint64_t>(k);
      exps += static_cast<std::size_t>(k - 1);
    }
    CHECK(prod == c.weyl_order);
    CHECK(exps == c.positive_roots);
    CHECK(weyl_group_order(t) == c.weyl_order);
    CHECK(positive_root_count(t) == c.positive_roots);
    CHECK(d.size() == static_cast<std::size_t>(t.rank));
  }
  // the same cross-check over a wider range of classical ranks, computed
  for (int r = 1; r <= 8; ++r) {
    for (Series s : {Series::A, Series::B, Series::C, Series::D}) {
      if ((s == Series::B || s == Series::C) && r < 2) continue;
      if (s == Series::D && r < 3) continue;
      const CartanType t(s, r);
      CAPTURE(t.name());
      std::uint64_t prod = 1;
      std::size_t exps = 0;
      for (int k : invariant_degrees(t).degrees) {
        prod *= static_cast<std::uint64_t>(k);
        exps += static_cast<std::size_t>(k - 1);
      }
      CHECK(prod == weyl_group_order(t));
      CHECK(exps == positive_root_count(t));
    }
  }
}

TEST_CASE("closed_form_table examples") {
  CHECK(closed_form_table({{2}}).same_entries(table_of({{{0, 0}, 1}, {{1, 2}, 1}})));
  CHECK(closed_form_table({{}}).same_entries(table_of({{{0, 0}, 1}})));
  CHECK(closed_form_table({{2, 3}}).same_entries(
      table_of({{{0, 0}, 1}, {{1, 2}, 1}, {{2, 3}, 1}, {{3, 5}, 1}})));
  auto bounded = closed_form_table({{2, 3}}, 3);
  CHECK(bounded.same_entries(table_of({{{0, 0}, 1}, {{1, 2}, 1}, {{2, 3}, 1}})));
  CHECK(bounded.j_max == 3);
  CHECK(closed_form_table({{2, 3}}).j_max == 5);
}

TEST_CASE("closed form agrees with the subset count, has mass 2^r and lies in the strip") {
  for (const auto& c : kClassical) {
    CAPTURE(c.name);
    const auto t = CartanType::parse(c.name);
    const auto d = invariant_degrees(t);
    const auto table = closed_form_table(d);
    BigradedTable expected;
    for (const auto& [key, dim] : oracle::exterior_by_subsets(d.degrees)) expected.set(key.first, key.second, dim);
    CHECK(table.same_entries(expected));
    CHECK(table.total_mass() == (std::uint64_t{1} << t.rank));
    CHECK(verify::strip_check(table, {0, static_cast<unsigned>(t.rank)}).empty());
    // row 0 is the unit for semisimple types
    for (int j = 0; j <= table.max_j(); ++j) CHECK(table.at(0, j) == (j == 0 ? 1u : 0u));
  }
  for (int r = 1; r <= 6; ++r) {
    const auto table = closed_form_table(invariant_degrees(CartanType(Series::Torus, r)));
    for (int j = 0; j <= r; ++j) CHECK(table.at(0, j) == oracle::binomial(r, j));
    CHECK(table.total_mass() == (std::uint64_t{1} << r));
  }
}

TEST_CASE("graph_ideal examples") {
  auto t1 = graph_ideal(CartanType::parse("T1"));
  CHECK(t1.ring().nvars() == 2);
  REQUIRE(t1.generators().size() == 1);
  CHECK(t1.generators()[0] == Polynomial::variable(2, 0) - Polynomial::variable(2, 1));

  auto a1 = graph_ideal(CartanType::parse("A1"));
  CHECK(a1.ring().nvars() == 6);
  CHECK(a1.degrees() == std::vector<int>{2});

  auto a2 = graph_ideal(CartanType::parse("A2"));
  CHECK(a2.ring().nvars() == 16);
  CHECK(a2.degrees() == std::vector<int>{2, 3});

  CHECK_FALSE(has_graph_ideal(CartanType::parse("B2")));
  try {
    graph_ideal(CartanType::parse("B2"));
    FAIL("expected InputError");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("A1") != std::string::npos);
    CHECK(msg.find("A2") != std::string::npos);
    CHECK(msg.find("T1") != std::string::npos);
  }
}

TEST_CASE("A2 invariants match traces of explicit matrices") {
  // Evaluate at X = [[1,2,0],[0,-1,3],[1,0,0]], Y = 0 and compare with traces
  // computed from the matrix directly.
  const std::vector<long> xs = {1, 2, 0, 0, -1, 3, 1, 0};  // x11 x12 x13 x21 x22 x23 x31 x32
  long m[3][3] = {{xs[0], xs[1], xs[2]}, {xs[3], xs[4], xs[5]}, {xs[6], xs[7], -xs[0] - xs[4]}};
  long m2[3][3] = {}, tr2 = 0, tr3 = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m2[i][j] += m[i][k] * m[k][j];
  for (int i = 0; i < 3; ++i) tr2 += m2[i][i];
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) tr3 += m2[i][k] * m[k][i];

  const auto p = graph_ideal(CartanType::parse("A2"));
  std::vector<Polynomial> point;
  for (long v : xs) point.push_back(Polynomial::constant(1, Rational(v)));
  for (int k = 0; k < 8; ++k) point.push_back(Polynomial::constant(1, 0));  // Y = 0
  auto value = [&](const Polynomial& f) {
    auto s = f.substitute(point);
    return s.is_zero() ? Rational(0) : s.terms().begin()->second;
  };
  CHECK(value(p.generators()[0]) == tr2);
  CHECK(value(p.generators()[1]) == tr3);
}

TEST_CASE("dlog_row_rank examples") {
  CHECK(dlog_row_rank(CartanType::parse("T2")) == 2);
  CHECK(dlog_row_rank(CartanType::parse("A1")) == 0);
  CHECK(dlog_row_rank(CartanType::parse("A2")) == 0);
}

TEST_CASE("engine equals closed form for T1, T2, A1") {
  for (const auto& [name, jmax] : std::vector<std::pair<const char*, int>>{{"T1", 3}, {"T2", 3}, {"T3", 3}, {"A1", 4}}) {
    CAPTURE(name);
    const auto t = CartanType::parse(name);
    const auto e = engine(graph_ideal(t), jmax);
    CHECK(e.same_entries(closed_form_table(invariant_degrees(t), jmax)));
    CHECK(verify::strip_check(e, {0, static_cast<unsigned>(t.rank)}).empty());
    CHECK(verify::dlog_row_check(e, static_cast<unsigned>(dlog_row_rank(t))).pass());
  }
}

TEST_CASE("A1 table does not depend on the normalization of the invariant") {
  const std::size_t n = 6;
  auto v = [&](std::size_t i) { return Polynomial::variable(n, i); };
  const auto base = engine(graph_ideal(CartanType::parse("A1")), 4);

  SUBCASE("rational multiples") {
    for (const Rational& c : {Rational(3), Rational(-2, 7)}) {
      Polynomial kx = (v(0) * v(0) + v(1) * v(2)) * c;
      Polynomial ky = (v(3) * v(3) + v(4) * v(5)) * c;
      CHECK(engine(IdealPresentation(gralg::GradedRing(n), {kx - ky}), 4).same_entries(base));
    }
  }
  SUBCASE("trace form instead of the Casimir normalization") {
    // tr(X^2) = 2a^2 + 2bc
    Polynomial kx = (v(0) * v(0)) * Rational(2) + (v(1) * v(2)) * Rational(2);
    Polynomial ky = (v(3) * v(3)) * Rational(2) + (v(4) * v(5)) * Rational(2);
    CHECK(engine(IdealPresentation(gralg::GradedRing(n), {kx - ky}), 4).same_entries(base));
  }
  SUBCASE("random invertible linear change of variables") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coef(-2, 2);
    const auto p = graph_ideal(CartanType::parse("A1"));
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
      do {
        for (auto& row : g)
          for (auto& x : row) x = coef(rng);
      } while (exactlin::rank(exactlin::RatMatrix::from_dense(g)) != n);
      std::vector<Polynomial> images;
      for (std::size_t i = 0; i < n; ++i) {
        Polynomial img(n);
        for (std::size_t k = 0; k < n; ++k)
          if (g[i][k] != 0) img += v(k) * g[i][k];
        images.push_back(img);
      }
      IdealPresentation q(p.ring(), {p.generators()[0].substitute(images)});
      CHECK(engine(q, 4).same_entries(base));
    }
  }
}

TEST_CASE("torus table does not depend on a change of variables") {
  const std::size_t n = 4;
  auto v = [&](std::size_t i) { return Polynomial::variable(n, i); };
  const auto base = engine(graph_ideal(CartanType::parse("T2")), 3);
  IdealPresentation q(gralg::GradedRing(n), {v(0) + v(1) * Rational(2) - v(2) - v(3), v(1) - v(3) * Rational(5, 3)});
  CHECK(engine(q, 3).same_entries(base));
}
