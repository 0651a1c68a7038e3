#pragma once
// Graded polynomial rings and degree-truncated quotients A = S/I.
//
// Monomials of a fixed degree are listed in graded reverse lexicographic
// order, largest first (x1 > x2 > ... > xn). Standard monomials of A_d are the
// non-pivot columns of the degree-d ideal matrix in that order, so the pivots
// play the role of leading terms.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "loghodge/exactlin.hpp"

namespace loghodge::gralg {

using exactlin::RatMatrix;
using exactlin::Rational;
using exactlin::SparseRow;

using Exponents = std::vector<int>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept;
};

class GradedRing {
 public:
  GradedRing() = default;
  /// All variables in degree 1.
  explicit GradedRing(std::size_t nvars);
  /// Throws InputError if some degree is < 1.
  explicit GradedRing(std::vector<int> var_degrees);

  std::size_t nvars() const { return degrees_.size(); }
  const std::vector<int>& var_degrees() const { return degrees_; }
  int var_degree(std::size_t i) const { return degrees_[i]; }
  bool standard() const;
  int degree(const Exponents& e) const;

  bool operator==(const GradedRing&) const = default;

 private:
  std::vector<int> degrees_;
};

/// True if a > b in graded reverse lexicographic order.
bool grevlex_greater(const GradedRing& ring, const Exponents& a, const Exponents& b);

/// All monomials of weighted degree d, grevlex-descending.
std::vector<Exponents> monomial_basis(const GradedRing& ring, int d);

class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial monomial(Exponents e, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * Rational(-1); }

  /// Weighted degree if homogeneous and non-zero.
  std::optional<int> homogeneous_degree(const GradedRing& ring) const;

  /// x_i -> images[i]; all images must share one variable count.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

class IdealPresentation {
 public:
  IdealPresentation() = default;
  /// Generator degrees are computed. Throws InputError on a zero, constant,
  /// non-homogeneous or wrongly-sized generator.
  IdealPresentation(GradedRing ring, std::vector<Polynomial> generators);
  /// Same checks, plus each generator must have its declared degree.
  IdealPresentation(GradedRing ring, std::vector<Polynomial> generators,
                    std::vector<int> declared_degrees);

  const GradedRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// Relabel variables: variable i of the result is variable perm[i] here.
  IdealPresentation permuted(const std::vector<std::size_t>& perm) const;

 private:
  GradedRing ring_;
  std::vector<Polynomial> generators_;
  std::vector<int> degrees_;
};

/// Rows are the coefficient vectors of m * g_k over monomial_basis(ring, d),
/// generator-major, multipliers m in grevlex-descending order.
RatMatrix ideal_degree_matrix(const IdealPresentation& p, int d);

/// Standard monomials of degree d: monomials whose columns are not pivots of
/// ideal_degree_matrix(p, d).
std::vector<Exponents> quotient_basis(const IdealPresentation& p, int d);

/// Coefficients of prod_k (1 - t^{d_k}) / prod_i (1 - t^{w_i}) up to t^max_degree.
std::vector<std::int64_t> regular_sequence_hilbert(const GradedRing& ring,
                                                   const std::vector<int>& generator_degrees,
                                                   int max_degree);

class GradedQuotientAlgebra {
 public:
  GradedQuotientAlgebra(IdealPresentation presentation, int truncation_degree);

  const IdealPresentation& presentation() const { return presentation_; }
  const GradedRing& ring() const { return presentation_.ring(); }
  int truncation_degree() const { return truncation_; }

  std::size_t dim(int d) const;
  const std::vector<Exponents>& coset_basis(int d) const;
  std::vector<std::size_t> hilbert_function() const;

  /// Coordinates of the class of a monomial in coset_basis(deg).
  SparseRow reduce(const Exponents& monomial) const;
  /// Coordinates of the class of a homogeneous polynomial of degree d.
  SparseRow reduce(const Polynomial& f, int d) const;

  /// Matrix of multiplication by a degree-1 form A_d -> A_{d+1}, columns
  /// indexed by coset_basis(d), rows by coset_basis(d + 1).
  RatMatrix mult_linear_matrix(const Polynomial& form, int d) const;

 private:
  struct Piece {
    std::vector<Exponents> monomials;
    std::unordered_map<Exponents, std::size_t, ExponentsHash> index;
    exactlin::RowEchelon echelon{0};
    std::vector<Exponents> basis;
    std::vector<long> coset_position;
  };

  const Piece& piece(int d) const;

  IdealPresentation presentation_;
  int truncation_;
  std::vector<Piece> pieces_;
};

/// Text format:
///   vars n [d_1 ... d_n]
///   <generator>          one per line, e.g. "x1^2 + 3/2*x2 x3 - x4^2"
/// Variables are x1..xn. '#' starts a comment.
IdealPresentation parse_presentation(std::istream& in);
IdealPresentation parse_presentation_string(const std::string& text);
std::string format_presentation(const IdealPresentation& p);
std::string format_polynomial(const Polynomial& f);

}  // namespace loghodge::gralg
