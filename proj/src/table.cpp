#include "loghodge/table.hpp"

#include <algorithm>

namespace loghodge {

std::uint64_t BigradedTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BigradedTable::set(int i, int j, std::uint64_t dim) {
  if (dim == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = dim;
}

void BigradedTable::add(int i, int j, std::uint64_t dim) {
  if (dim != 0) entries_[{i, j}] += dim;
}

std::vector<std::pair<BigradedTable::Key, std::uint64_t>> BigradedTable::sorted_entries() const {
  std::vector<std::pair<Key, std::uint64_t>> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second < b.first.second;
    return a.first.first < b.first.first;
  });
  return out;
}

std::uint64_t BigradedTable::total_mass() const {
  std::uint64_t s = 0;
  for (const auto& [k, v] : entries_) s += v;
  return s;
}

int BigradedTable::max_j() const {
  int m = -1;
  for (const auto& [k, v] : entries_) m = std::max(m, k.second);
  return m;
}

BigradedTable BigradedTable::restricted(int j_max_) const {
  BigradedTable out = *this;
  out.entries_.clear();
  for (const auto& [k, v] : entries_)
    if (k.second <= j_max_) out.entries_.emplace(k, v);
  out.j_max = j_max ? std::min(*j_max, j_max_) : j_max_;
  std::erase_if(out.euler_checksums, [&](const auto& kv) { return kv.first > j_max_; });
  return out;
}

}  // namespace loghodge
