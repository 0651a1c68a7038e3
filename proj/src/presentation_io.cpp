#include <cctype>
#include <sstream>

#include "loghodge/error.hpp"
#include "loghodge/gralg.hpp"

namespace loghodge::gralg {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

class PolyParser {
 public:
  PolyParser(const std::string& text, std::size_t nvars, int line_no)
      : s_(text), nvars_(nvars), line_(line_no) {}

  Polynomial parse() {
    Polynomial out(nvars_);
    skip_ws();
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      parse_term(out, sign);
      first = false;
      skip_ws();
    }
    if (first) fail("empty generator");
    return out;
  }

 private:
  void parse_term(Polynomial& out, int sign) {
    Rational coeff = 1;
    bool have_coeff = false;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_rational();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      }
    }
    Exponents e(nvars_, 0);
    while (!at_end() && (peek() == 'x' || peek() == 'X')) {
      ++pos_;
      std::size_t var = parse_natural("variable index");
      if (var < 1 || var > nvars_) fail("variable x" + std::to_string(var) + " out of range");
      long power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        power = static_cast<long>(parse_natural("exponent"));
      }
      e[var - 1] += static_cast<int>(power);
      have_factor = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x' && peek() != 'X') fail("expected a variable after '*'");
      }
    }
    if (!have_coeff && !have_factor) fail("expected a term");
    out.add_term(e, sign * coeff);
  }

  Rational parse_rational() {
    std::string num = digits();
    std::string den = "1";
    if (peek() == '/') {
      ++pos_;
      den = digits();
      if (den.empty()) fail("missing denominator");
    }
    mpz_class d(den);
    if (d == 0) fail("zero denominator");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
  }

  std::size_t parse_natural(const char* what) {
    std::string d = digits();
    if (d.empty()) fail(std::string("expected ") + what);
    if (d.size() > 9) fail(std::string(what) + " too large");
    return std::stoul(d);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("presentation line " + std::to_string(line_) + ", column " +
                     std::to_string(pos_ + 1) + ": " + msg);
  }

  const std::string& s_;
  std::size_t nvars_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

IdealPresentation parse_presentation(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<GradedRing> ring;
  std::vector<Polynomial> gens;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (blank(line)) continue;
    if (!ring) {
      std::istringstream ls(line);
      std::string kw;
      long n = -1;
      ls >> kw >> n;
      if (kw != "vars" || ls.fail() || n < 0)
        throw InputError("presentation line " + std::to_string(line_no) +
                         ": expected 'vars n [d_1 ... d_n]'");
      std::vector<int> degs;
      long d;
      while (ls >> d) degs.push_back(static_cast<int>(d));
      if (!ls.eof()) throw InputError("presentation line " + std::to_string(line_no) + ": bad degree list");
      if (degs.empty()) degs.assign(n, 1);
      if (static_cast<long>(degs.size()) != n)
        throw InputError("presentation line " + std::to_string(line_no) + ": expected " +
                         std::to_string(n) + " degrees");
      ring = GradedRing(std::move(degs));
      continue;
    }
    gens.push_back(PolyParser(line, ring->nvars(), line_no).parse());
  }
  if (!ring) throw InputError("presentation is missing its 'vars' line");
  return IdealPresentation(std::move(*ring), std::move(gens));
}

IdealPresentation parse_presentation_string(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  GradedRing ring(f.nvars());
  std::vector<std::pair<Exponents, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return grevlex_greater(ring, a.first, b.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    if (mag != 1 || constant) {
      os << mag.get_str();
      if (!constant) os << "*";
    }
    bool sep = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (sep) os << " ";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      sep = true;
    }
  }
  return os.str();
}

std::string format_presentation(const IdealPresentation& p) {
  std::ostringstream os;
  os << "vars " << p.ring().nvars();
  if (!p.ring().standard())
    for (int d : p.ring().var_degrees()) os << " " << d;
  os << "\n";
  for (const auto& g : p.generators()) os << format_polynomial(g) << "\n";
  return os.str();
}

}  // namespace loghodge::gralg
