#include <doctest.h>

#include "loghodge/bott.hpp"
#include "loghodge/error.hpp"
#include "oracles.hpp"

using namespace loghodge;
using namespace loghodge::bott;

TEST_CASE("bott_dims examples") {
  CHECK(bott_dims({1, 1, 0}) == std::map<int, std::uint64_t>{{1, 1}});
  CHECK(bott_dims({1, 1, 2}) == std::map<int, std::uint64_t>{{0, 1}});
  CHECK(bott_dims({2, 1, 2}) == std::map<int, std::uint64_t>{{0, 3}});
}

TEST_CASE("bott_dims input validation") {
  CHECK_THROWS_AS(bott_dims({0, 0, 0}), InputError);
  CHECK_THROWS_AS(bott_dims({2, 3, 0}), InputError);
  CHECK_THROWS_AS(bott_dims({2, -1, 0}), InputError);
  CHECK_THROWS_AS(bott_dims({3, 1, 1000000000}), InputError);
}

TEST_CASE("Cech oracle on line bundles and cotangent bundles") {
  // H^0(P^2, O(2)) = 6, H^2(P^2, O(-3)) = 1, H^1(P^1, O(-2)) = 1
  CHECK(oracle::cech_projective(2, 0, 2) == std::map<int, std::uint64_t>{{0, 6}});
  CHECK(oracle::cech_projective(2, 0, -3) == std::map<int, std::uint64_t>{{2, 1}});
  CHECK(oracle::cech_projective(1, 0, -2) == std::map<int, std::uint64_t>{{1, 1}});
  CHECK(oracle::cech_projective(2, 1, 0) == std::map<int, std::uint64_t>{{1, 1}});
}

TEST_CASE("bott_dims agrees with the Cech oracle for n <= 2 and |k| <= 3") {
  for (int n = 1; n <= 2; ++n)
    for (int j = 0; j <= n; ++j)
      for (long k = -3; k <= 3; ++k) {
        CAPTURE(n);
        CAPTURE(j);
        CAPTURE(k);
        CHECK(bott_dims({n, j, k}) == oracle::cech_projective(n, j, k));
      }
}

TEST_CASE("Serre duality and the trichotomy") {
  for (int n = 1; n <= 6; ++n)
    for (int j = 0; j <= n; ++j)
      for (long long k = -12; k <= 12; ++k) {
        const auto d = bott_dims({n, j, k});
        const auto dual = bott_dims({n, n - j, -k});
        CHECK(d.size() <= 1);
        for (const auto& [i, dim] : d) {
          REQUIRE(dual.count(n - i));
          CHECK(dual.at(n - i) == dim);
        }
        CHECK(d.size() == dual.size());
      }
}

TEST_CASE("Euler characteristic is a polynomial in k of degree n") {
  // finite differences of order n + 1 vanish
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= n; ++j) {
      std::vector<long long> chi;
      for (long long k = -10; k <= 10; ++k) {
        long long c = 0;
        for (const auto& [i, dim] : bott_dims({n, j, k})) c += (i % 2 ? -1 : 1) * static_cast<long long>(dim);
        chi.push_back(c);
      }
      for (int order = 0; order <= n; ++order)
        for (std::size_t t = 0; t + 1 < chi.size(); ++t) chi[t] = chi[t + 1] - chi[t];
      for (std::size_t t = 0; t + n + 1 < 21; ++t) CHECK(chi[t] == 0);
    }
}

TEST_CASE("broer_check examples") {
  CHECK(broer_check(3, 0, 5).ok());
  auto r = broer_check(1, 0, 0);
  CHECK(r.ok());
  CHECK(broer_check(2, 0, 3).ok());
  CHECK_THROWS_AS(broer_check(2, 3, 0), InputError);
}

TEST_CASE("negative twists are reported as context") {
  auto r = broer_check(2, -4, 0);
  CHECK(r.ok());
  bool found = false;
  for (const auto& l : r.negative_twist_loci) {
    CHECK(l.k < 0);
    if (l.i == 2 && l.j == 0 && l.k == -3) found = l.dim == 1;
  }
  CHECK(found);
}

TEST_CASE("no violations in the nef range") {
  for (int n = 1; n <= 5; ++n) CHECK(broer_check(n, 0, 8).violations.empty());
}
