#pragma once
// Internal-degree slices of the Koszul complex K(x_1..x_n) ⊗ A.
//
// For an algebra A over S = Q[x_1..x_n] (all variables in degree 1), the
// degree-j slice is
//   0 -> ∧^j V ⊗ A_0 -> ... -> ∧^1 V ⊗ A_{j-1} -> ∧^0 V ⊗ A_j -> 0
// and its homology in homological degree k is Tor_k(Q, A)_j, which is
// reported as h^{i,j} with i = j - k.

#include <cstddef>
#include <vector>

#include "loghodge/gralg.hpp"
#include "loghodge/table.hpp"

namespace loghodge::koszul {

using exactlin::RatMatrix;

/// Sorted index set, an exterior basis vector e_{i1} ∧ ... ∧ e_{ik}.
using Subset = std::vector<std::size_t>;

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Subset> subsets(std::size_t n, std::size_t k);

class KoszulSlice {
 public:
  int internal_degree() const { return j_; }
  std::size_t nvars() const { return nvars_; }

  /// dim (∧^k V) ⊗ A_{j-k}, for k = 0..j.
  std::size_t term_dim(int k) const;
  const std::vector<std::size_t>& term_dims() const { return term_dims_; }

  /// ∂_k : term_k -> term_{k-1}, for k = 1..j.
  const RatMatrix& differential(int k) const;

  /// Throws InvariantViolation unless ∂_{k-1} ∘ ∂_k = 0 for every k.
  void check_composition() const;

 private:
  friend KoszulSlice build_slice(const gralg::GradedQuotientAlgebra&, int);

  int j_ = 0;
  std::size_t nvars_ = 0;
  std::vector<std::size_t> term_dims_;
  std::vector<RatMatrix> differentials_;  // index k - 1
};

/// Basis of term k: subsets(n, k) crossed with coset_basis(j - k), subset-major.
/// Throws TruncationError if j exceeds the truncation of `a`, InputError if a
/// variable has degree != 1.
KoszulSlice build_slice(const gralg::GradedQuotientAlgebra& a, int j);

/// dim H_k for k = 0..j. Runs the composition check first.
std::vector<std::size_t> homology_dims(const KoszulSlice& s);

/// h^{i,j} for 0 <= i <= j <= j_max, with per-j Euler checksums. Each checksum
/// is asserted to agree between the term dimensions and the homology.
BigradedTable tor_table(const gralg::GradedQuotientAlgebra& a, int j_max);

}  // namespace loghodge::koszul
