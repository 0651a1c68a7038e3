#pragma once
// Vanishing-strip and row predicates over bigraded tables. Failures are
// returned as data; nothing here throws on a failed check.

#include <cstdint>
#include <vector>

#include "loghodge/table.hpp"

namespace loghodge::verify {

struct StripViolation {
  int i;
  int j;
  std::uint64_t dim;
};

/// Non-zero entries outside 0 <= j - i <= q + r, ordered by (j, i).
std::vector<StripViolation> strip_check(const BigradedTable& t, StripParams p);

struct RowMismatch {
  int j;
  std::uint64_t expected;
  std::uint64_t actual;
};

struct RowReport {
  int j_max = 0;
  std::vector<RowMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Row i = 0 must read C(char_rank, j) for j = 0..j_max, where j_max is the
/// table's declared bound (or its largest j when none is declared).
RowReport dlog_row_check(const BigradedTable& t, unsigned char_rank);

/// Full toric boundary on an n-dimensional toric variety: Omega^1(log D) is
/// trivial of rank n, so h^{0,j} = C(n, j) and everything else vanishes.
BigradedTable toric_full_boundary_table(int n);

}  // namespace loghodge::verify
