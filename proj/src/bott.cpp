#include "loghodge/bott.hpp"

#include <gmpxx.h>

#include <string>

#include "loghodge/error.hpp"

namespace loghodge::bott {

namespace {

mpz_class binom(long long top, long long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

std::uint64_t to_u64(const mpz_class& v) {
  if (v < 0 || !v.fits_ulong_p()) throw InputError("cohomology dimension " + v.get_str() + " does not fit in 64 bits");
  return v.get_ui();
}

}  // namespace

std::map<int, std::uint64_t> bott_dims(const BottQuery& q) {
  if (q.n < 1) throw InputError("projective space dimension must be >= 1");
  if (q.j < 0 || q.j > q.n) throw InputError("form degree j must lie in 0.." + std::to_string(q.n));
  const int n = q.n, j = q.j;
  const long long k = q.k;
  std::map<int, std::uint64_t> out;
  if (k > j) {
    out[0] = to_u64(binom(k + n - j, k) * binom(k - 1, j));
  } else if (k == 0) {
    out[j] = 1;
  } else if (k < j - n) {
    out[n] = to_u64(binom(-k + j, -k) * binom(-k - 1, n - j));
  }
  return out;
}

BroerReport broer_check(int n, long long k_min, long long k_max) {
  if (k_min > k_max) throw InputError("twist range is empty (kmin > kmax)");
  BroerReport rep;
  rep.n = n;
  rep.k_min = k_min;
  rep.k_max = k_max;
  for (long long k = k_min; k <= k_max; ++k) {
    for (int j = 0; j <= n; ++j) {
      for (const auto& [i, dim] : bott_dims({n, j, k})) {
        if (dim == 0) continue;
        if (k >= 0 && i > j) rep.violations.push_back({i, j, k, dim});
        if (k < 0) rep.negative_twist_loci.push_back({i, j, k, dim});
      }
    }
  }
  return rep;
}

}  // namespace loghodge::bott
