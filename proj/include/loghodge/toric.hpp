#pragma once
// Smooth complete fans and rational Chow groups of the open complements
// X_0 = X minus (union of the divisors D_rho, rho in `removed`).

#include <cstdint>
#include <istream>
#include <set>
#include <string>
#include <vector>

#include "loghodge/exactlin.hpp"

namespace loghodge::toric {

using Cone = std::vector<std::size_t>;  // sorted ray indices
using RaySet = std::set<std::size_t>;

struct Fan {
  int dim = 0;
  std::vector<std::vector<long long>> rays;
  std::vector<Cone> max_cones;
};

struct Diagnostic {
  enum class Kind {
    BadRay,          // wrong length or zero vector
    NonPrimitive,
    BadCone,         // wrong size, repeated or out-of-range ray index, duplicate cone
    NotSmooth,       // rays of a maximal cone do not form a lattice basis
    OpenFacet,       // codim-1 face in fewer or more than two maximal cones
    Overlap,         // the two cones on a facet lie on the same side of it
    EulerMismatch,   // sum_k (-1)^k #Sigma(k) != (-1)^n
  };
  Kind kind;
  std::string message;
  Cone cone;
};

std::string to_string(Diagnostic::Kind k);

struct ValidationReport {
  std::vector<Diagnostic> issues;
  bool ok() const { return issues.empty(); }
  bool has(Diagnostic::Kind k) const;
};

ValidationReport validate(const Fan& f);

/// A fan that passed validate(). The only way to reach the Chow operations.
class ValidatedFan {
 public:
  /// Throws InputError carrying the first diagnostic if validation fails.
  static ValidatedFan make(Fan f);

  const Fan& fan() const { return fan_; }
  int dim() const { return fan_.dim; }
  std::size_t nrays() const { return fan_.rays.size(); }
  /// All cones with k rays, sorted.
  const std::vector<Cone>& cones(int k) const { return cones_.at(k); }
  /// #Sigma(k) for k = 0..n.
  std::vector<std::uint64_t> f_vector() const;

 private:
  explicit ValidatedFan(Fan f);
  Fan fan_;
  std::vector<std::vector<Cone>> cones_;
};

/// h_i = sum_k (-1)^{k-i} C(k, i) #Sigma(n - k), i = 0..n.
std::vector<std::uint64_t> h_vector(const ValidatedFan& f);

struct ChowPresentation {
  int codim = 0;
  std::vector<Cone> generators;  // Sigma(codim)
  exactlin::RatMatrix relations;  // rows: relations, columns: generators
  RaySet removed_rays;
};

/// Rational-equivalence rows for each tau in Sigma(i-1) and each basis vector m
/// of tau-perp, with coefficient <m, v> on sigma = tau + ray v; then one unit
/// row per generator containing a removed ray.
ChowPresentation chow_presentation(const ValidatedFan& f, int codim, const RaySet& removed);

/// dim_Q A^i(X_0).
std::size_t chow_dim(const ValidatedFan& f, int codim, const RaySet& removed = {});

/// Text format: "dim n", "ray c1 .. cn" lines, "cone i1 .. in" lines
/// (0-based ray indices), '#' comments. Integers only.
Fan parse_fan(std::istream& in);
Fan parse_fan_string(const std::string& text);

}  // namespace loghodge::toric
