#pragma once
// Cohomology of twisted differential forms Omega^j(k) on projective space.

#include <cstdint>
#include <map>
#include <vector>

namespace loghodge::bott {

struct BottQuery {
  int n = 1;        ///< P^n, n >= 1
  int j = 0;        ///< 0..n
  long long k = 0;  ///< twist O(k)
};

/// i -> dim H^i(P^n, Omega^j(k)), non-zero entries only:
///   i = 0, k > j:      C(k+n-j, k) C(k-1, j)
///   i = j, k = 0:      1
///   i = n, k < j - n:  C(-k+j, -k) C(-k-1, n-j)
/// Throws InputError on invalid ranges or if a dimension overflows 64 bits.
std::map<int, std::uint64_t> bott_dims(const BottQuery& q);

struct BottLocus {
  int i;
  int j;
  long long k;
  std::uint64_t dim;
};

struct BroerReport {
  int n = 0;
  long long k_min = 0;
  long long k_max = 0;
  /// (i, j, k) with k >= 0, i > j and non-zero cohomology. Expected empty.
  std::vector<BottLocus> violations;
  /// Every non-zero H^i at a negative twist in the scanned range (context:
  /// O(k) is not nef there, so no strip is claimed).
  std::vector<BottLocus> negative_twist_loci;
  bool ok() const { return violations.empty(); }
};

/// Scans j = 0..n and k_min..k_max. Throws InputError if k_min > k_max.
BroerReport broer_check(int n, long long k_min, long long k_max);

}  // namespace loghodge::bott
