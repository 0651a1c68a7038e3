#include "loghodge/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "loghodge/error.hpp"

namespace loghodge::toric {

namespace {

using exactlin::Rational;

std::string cone_str(const Cone& c) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  os << "}";
  return os.str();
}

// long is 64-bit on the supported platforms; gmpxx has no long long overloads
Rational rat(long long v) { return Rational(static_cast<long>(v)); }

mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
  // Bareiss
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Rational basis of the orthogonal complement of the span of the given rays.
std::vector<std::vector<Rational>> perp_basis(const Fan& f, const Cone& tau) {
  exactlin::RatMatrix m(tau.size(), static_cast<std::size_t>(f.dim));
  for (std::size_t r = 0; r < tau.size(); ++r)
    for (int c = 0; c < f.dim; ++c) m.set(r, c, rat(f.rays[tau[r]][c]));
  std::vector<std::vector<Rational>> out;
  for (const auto& v : exactlin::kernel_basis(m)) {
    std::vector<Rational> dense(f.dim, 0);
    for (const auto& e : v) dense[e.col] = e.value;
    out.push_back(std::move(dense));
  }
  return out;
}

Rational pair(const std::vector<Rational>& m, const std::vector<long long>& v) {
  Rational s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) s += m[k] * rat(v[k]);
  return s;
}

std::vector<std::vector<Cone>> all_cones(const Fan& f) {
  std::vector<std::set<Cone>> by_size(f.dim + 1);
  for (const auto& mc : f.max_cones) {
    const std::size_t n = mc.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Cone c;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (std::uint64_t{1} << k)) c.push_back(mc[k]);
      by_size[c.size()].insert(c);
    }
  }
  std::vector<std::vector<Cone>> out;
  for (auto& s : by_size) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace

std::string to_string(Diagnostic::Kind k) {
  switch (k) {
    case Diagnostic::Kind::BadRay: return "bad-ray";
    case Diagnostic::Kind::NonPrimitive: return "non-primitive";
    case Diagnostic::Kind::BadCone: return "bad-cone";
    case Diagnostic::Kind::NotSmooth: return "not-smooth";
    case Diagnostic::Kind::OpenFacet: return "open-facet";
    case Diagnostic::Kind::Overlap: return "overlap";
    case Diagnostic::Kind::EulerMismatch: return "euler-mismatch";
  }
  return "unknown";
}

bool ValidationReport::has(Diagnostic::Kind k) const {
  return std::any_of(issues.begin(), issues.end(), [k](const Diagnostic& d) { return d.kind == k; });
}

ValidationReport validate(const Fan& f) {
  using K = Diagnostic::Kind;
  ValidationReport rep;
  const int n = f.dim;
  if (n < 1) {
    rep.issues.push_back({K::BadCone, "fan dimension must be positive", {}});
    return rep;
  }
  for (std::size_t r = 0; r < f.rays.size(); ++r) {
    const auto& v = f.rays[r];
    if (static_cast<int>(v.size()) != n) {
      rep.issues.push_back({K::BadRay, "ray " + std::to_string(r) + " has wrong length", {r}});
      continue;
    }
    long long g = 0;
    for (long long c : v) g = std::gcd(g, c);
    if (g == 0)
      rep.issues.push_back({K::BadRay, "ray " + std::to_string(r) + " is zero", {r}});
    else if (g != 1)
      rep.issues.push_back({K::NonPrimitive, "ray " + std::to_string(r) + " is not primitive (gcd " +
                                                 std::to_string(g) + ")", {r}});
  }
  std::set<Cone> seen;
  for (const auto& c : f.max_cones) {
    Cone s = c;
    std::sort(s.begin(), s.end());
    bool bad = static_cast<int>(s.size()) != n || std::adjacent_find(s.begin(), s.end()) != s.end() ||
               std::any_of(s.begin(), s.end(), [&](std::size_t r) { return r >= f.rays.size(); });
    if (bad) {
      rep.issues.push_back({K::BadCone, "cone " + cone_str(c) + " must have " + std::to_string(n) +
                                            " distinct valid rays", c});
    } else if (!seen.insert(s).second) {
      rep.issues.push_back({K::BadCone, "cone " + cone_str(c) + " listed twice", c});
    }
  }
  if (f.max_cones.empty()) rep.issues.push_back({K::BadCone, "fan has no maximal cones", {}});
  if (!rep.ok()) return rep;

  for (const auto& c : seen) {
    std::vector<std::vector<mpz_class>> m;
    for (std::size_t r : c) {
      std::vector<mpz_class> row;
      for (long long v : f.rays[r]) row.emplace_back(static_cast<long>(v));
      m.push_back(std::move(row));
    }
    mpz_class det = determinant(m);
    if (abs(det) != 1)
      rep.issues.push_back({K::NotSmooth, "cone " + cone_str(c) + " has determinant " + det.get_str(), c});
  }
  if (!rep.ok()) return rep;

  // facet -> (cone, extra ray)
  std::map<Cone, std::vector<std::pair<Cone, std::size_t>>> facets;
  for (const auto& c : seen) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      Cone face = c;
      face.erase(face.begin() + static_cast<long>(k));
      facets[face].push_back({c, c[k]});
    }
  }
  for (const auto& [face, owners] : facets) {
    if (owners.size() != 2) {
      rep.issues.push_back({K::OpenFacet, "facet " + cone_str(face) + " lies in " +
                                              std::to_string(owners.size()) + " maximal cone(s)",
                            owners.front().first});
      continue;
    }
    auto normal = perp_basis(f, face);
    if (normal.size() != 1) continue;  // cannot happen for smooth cones
    int s1 = sgn(pair(normal[0], f.rays[owners[0].second]));
    int s2 = sgn(pair(normal[0], f.rays[owners[1].second]));
    if (s1 == s2)
      rep.issues.push_back({K::Overlap, "cones " + cone_str(owners[0].first) + " and " +
                                            cone_str(owners[1].first) + " overlap across facet " +
                                            cone_str(face),
                            owners[1].first});
  }

  Fan sorted = f;
  sorted.max_cones.assign(seen.begin(), seen.end());
  auto cones = all_cones(sorted);
  long long euler = 0;
  for (int k = 0; k <= n; ++k) euler += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(cones[k].size());
  const long long sphere = n % 2 == 0 ? 1 : -1;
  if (euler != sphere)
    rep.issues.push_back({K::EulerMismatch, "Euler count " + std::to_string(euler) + " != " +
                                                std::to_string(sphere), {}});
  return rep;
}

ValidatedFan::ValidatedFan(Fan f) : fan_(std::move(f)) {
  for (auto& c : fan_.max_cones) std::sort(c.begin(), c.end());
  std::sort(fan_.max_cones.begin(), fan_.max_cones.end());
  cones_ = all_cones(fan_);
}

ValidatedFan ValidatedFan::make(Fan f) {
  auto rep = validate(f);
  if (!rep.ok())
    throw InputError("invalid fan (" + to_string(rep.issues.front().kind) + "): " + rep.issues.front().message);
  return ValidatedFan(std::move(f));
}

std::vector<std::uint64_t> ValidatedFan::f_vector() const {
  std::vector<std::uint64_t> out;
  for (const auto& c : cones_) out.push_back(c.size());
  return out;
}

std::vector<std::uint64_t> h_vector(const ValidatedFan& f) {
  const int n = f.dim();
  auto fv = f.f_vector();
  std::vector<std::uint64_t> h(n + 1);
  for (int i = 0; i <= n; ++i) {
    mpz_class s = 0;
    for (int k = i; k <= n; ++k) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), k, i);
      mpz_class term = binom * fv[n - k];
      if ((k - i) % 2 == 0)
        s += term;
      else
        s -= term;
    }
    if (s < 0) throw InvariantViolation("negative h-vector entry");
    h[i] = s.get_ui();
  }
  return h;
}

ChowPresentation chow_presentation(const ValidatedFan& f, int codim, const RaySet& removed) {
  if (codim < 0 || codim > f.dim())
    throw InputError("codimension " + std::to_string(codim) + " out of range 0.." + std::to_string(f.dim()));
  for (std::size_t r : removed)
    if (r >= f.nrays()) throw InputError("removed ray " + std::to_string(r) + " does not exist");

  ChowPresentation p;
  p.codim = codim;
  p.generators = f.cones(codim);
  p.removed_rays = removed;

  std::vector<exactlin::SparseRow> rows;
  if (codim >= 1) {
    for (const Cone& tau : f.cones(codim - 1)) {
      auto perp = perp_basis(f.fan(), tau);
      std::vector<std::pair<std::size_t, std::size_t>> cofaces;  // (generator index, extra ray)
      for (std::size_t g = 0; g < p.generators.size(); ++g) {
        const Cone& sigma = p.generators[g];
        if (!std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end())) continue;
        Cone extra;
        std::set_difference(sigma.begin(), sigma.end(), tau.begin(), tau.end(), std::back_inserter(extra));
        cofaces.push_back({g, extra.front()});
      }
      for (const auto& m : perp) {
        exactlin::SparseRow row;
        for (const auto& [g, ray] : cofaces) {
          Rational c = pair(m, f.fan().rays[ray]);
          if (sgn(c) != 0) row.push_back({g, c});
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    const Cone& sigma = p.generators[g];
    bool hit = std::any_of(sigma.begin(), sigma.end(), [&](std::size_t r) { return removed.count(r) > 0; });
    if (hit) rows.push_back({{g, Rational(1)}});
  }
  p.relations = exactlin::RatMatrix(rows.size(), p.generators.size());
  for (std::size_t r = 0; r < rows.size(); ++r) p.relations.set_row(r, std::move(rows[r]));
  return p;
}

std::size_t chow_dim(const ValidatedFan& f, int codim, const RaySet& removed) {
  return exactlin::cokernel_dim(chow_presentation(f, codim, removed).relations);
}

}  // namespace loghodge::toric
