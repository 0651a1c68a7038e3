#pragma once
// Equivariant compactifications of connected reductive groups.
//
// The logarithmic Hodge table of a G x G-equivariant compactification depends
// only on the fundamental invariant degrees d_1..d_r of G: it is the free
// exterior algebra on generators of bidegree (d_k - 1, d_k). The engine route
// recovers the same table from the coordinate ring of g x_{g//G} g.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loghodge/gralg.hpp"
#include "loghodge/table.hpp"

namespace loghodge::grpcpt {

enum class Series { A, B, C, D, E, F, G, Torus };

struct CartanType {
  Series series;
  int rank;

  /// Throws InputError for invalid series/rank combinations.
  CartanType(Series s, int r);

  /// "A1".."E8", "T1".."T9" (any positive torus rank); case-insensitive.
  static CartanType parse(const std::string& text);
  std::string name() const;
  bool is_torus() const { return series == Series::Torus; }

  bool operator==(const CartanType&) const = default;
};

struct InvariantDegrees {
  std::vector<int> degrees;  // sorted ascending
};

InvariantDegrees invariant_degrees(const CartanType& t);

/// Expansion of prod_k (1 + u^{d_k - 1} v^{d_k}); entries with j > j_max are
/// dropped when a bound is given. Metadata jmax is the bound, or sum d_k.
BigradedTable closed_form_table(const InvariantDegrees& d, std::optional<int> j_max = std::nullopt);

/// Types with an explicit graph-ideal presentation.
bool has_graph_ideal(const CartanType& t);

/// Q[g x g] / (P_k(x) - P_k(y)). Variables: the x-copy coordinates followed by
/// the y-copy coordinates.
///   Torus_r: x_1..x_r, y_1..y_r, generators x_k - y_k.
///   A1: (a, b, c | a', b', c') for the sl2 element [[a, b], [c, -a]],
///       generator (a^2 + bc) - (a'^2 + b'c').
///   A2: (x11, x12, x13, x21, x22, x23, x31, x32 | same for Y) with
///       x33 = -x11 - x22 substituted; generators tr(X^2) - tr(Y^2) and
///       tr(X^3) - tr(Y^3).
/// Throws InputError naming the supported list for any other type.
gralg::IdealPresentation graph_ideal(const CartanType& t);

/// Rank of the characters of G x G trivial on the diagonal.
int dlog_row_rank(const CartanType& t);

// Root-system data, computed from the Cartan matrix.
std::vector<std::vector<int>> cartan_matrix(const CartanType& t);
/// Positive roots in simple-root coordinates.
std::vector<std::vector<int>> positive_roots(const CartanType& t);
std::size_t positive_root_count(const CartanType& t);
/// |W| = r! * det(C) * prod(highest-root coefficients) for simple types.
std::uint64_t weyl_group_order(const CartanType& t);

}  // namespace loghodge::grpcpt
