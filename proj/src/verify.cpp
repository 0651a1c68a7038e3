#include "loghodge/verify.hpp"

#include <algorithm>

namespace loghodge::verify {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

std::vector<StripViolation> strip_check(const BigradedTable& t, StripParams p) {
  const long long bound = static_cast<long long>(p.q) + p.r;
  std::vector<StripViolation> out;
  for (const auto& [key, dim] : t.sorted_entries()) {
    const long long gap = static_cast<long long>(key.second) - key.first;
    if (dim > 0 && (gap < 0 || gap > bound)) out.push_back({key.first, key.second, dim});
  }
  return out;
}

RowReport dlog_row_check(const BigradedTable& t, unsigned char_rank) {
  RowReport rep;
  rep.j_max = t.j_max ? *t.j_max : std::max(t.max_j(), 0);
  for (int j = 0; j <= rep.j_max; ++j) {
    const std::uint64_t expected = binomial(char_rank, static_cast<std::uint64_t>(j));
    const std::uint64_t actual = t.at(0, j);
    if (expected != actual) rep.mismatches.push_back({j, expected, actual});
  }
  return rep;
}

BigradedTable toric_full_boundary_table(int n) {
  BigradedTable t;
  for (int j = 0; j <= n; ++j) t.set(0, j, binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(j)));
  t.j_max = n;
  return t;
}

}  // namespace loghodge::verify
