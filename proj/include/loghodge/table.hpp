#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loghodge {

/// Bounds for the vanishing strip 0 <= j - i <= q + r.
struct StripParams {
  unsigned q = 0;  ///< irregularity
  unsigned r = 0;  ///< rank bound
};

/// Finite map (i, j) -> dim H^i(X, Omega^j(log D)). Absent keys mean 0; zero
/// dimensions are never stored.
class BigradedTable {
 public:
  using Key = std::pair<int, int>;  // (i, j)

  std::uint64_t at(int i, int j) const;
  void set(int i, int j, std::uint64_t dim);
  void add(int i, int j, std::uint64_t dim);

  /// Ordered by (j, i).
  std::vector<std::pair<Key, std::uint64_t>> sorted_entries() const;
  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::uint64_t total_mass() const;
  int max_j() const;

  /// Drops every entry with j > j_max.
  BigradedTable restricted(int j_max) const;

  /// Compares entries only.
  bool same_entries(const BigradedTable& other) const { return entries_ == other.entries_; }

  // metadata
  std::vector<std::pair<std::string, std::string>> source;
  std::optional<int> j_max;
  std::optional<StripParams> strip;
  /// Per internal degree j: the Euler characteristic sum_k (-1)^k dim(term_k).
  std::map<int, std::int64_t> euler_checksums;

 private:
  std::map<Key, std::uint64_t> entries_;
};

}  // namespace loghodge
