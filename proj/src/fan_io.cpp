#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <sstream>

#include "loghodge/error.hpp"
#include "loghodge/toric.hpp"

namespace loghodge::toric {

namespace {

long long parse_int(const std::string& tok, int line_no) {
  std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  bool ok = tok.size() > start;
  for (std::size_t k = start; k < tok.size(); ++k) ok = ok && std::isdigit(static_cast<unsigned char>(tok[k]));
  if (!ok) throw InputError("fan line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
  errno = 0;
  long long v = std::strtoll(tok.c_str(), nullptr, 10);
  if (errno == ERANGE) throw InputError("fan line " + std::to_string(line_no) + ": '" + tok + "' out of range");
  return v;
}

}  // namespace

Fan parse_fan(std::istream& in) {
  Fan f;
  bool have_dim = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::vector<long long> values;
    std::string tok;
    while (ls >> tok) values.push_back(parse_int(tok, line_no));
    const std::string where = "fan line " + std::to_string(line_no) + ": ";
    if (kw == "dim") {
      if (have_dim) throw InputError(where + "repeated 'dim'");
      if (values.size() != 1 || values[0] < 1) throw InputError(where + "expected 'dim n' with n >= 1");
      f.dim = static_cast<int>(values[0]);
      have_dim = true;
    } else if (kw == "ray") {
      if (!have_dim) throw InputError(where + "'ray' before 'dim'");
      if (static_cast<int>(values.size()) != f.dim) throw InputError(where + "ray needs " + std::to_string(f.dim) + " coordinates");
      f.rays.push_back(values);
    } else if (kw == "cone") {
      if (!have_dim) throw InputError(where + "'cone' before 'dim'");
      Cone c;
      for (long long v : values) {
        if (v < 0) throw InputError(where + "negative ray index");
        c.push_back(static_cast<std::size_t>(v));
      }
      f.max_cones.push_back(std::move(c));
    } else {
      throw InputError(where + "unknown keyword '" + kw + "'");
    }
  }
  if (!have_dim) throw InputError("fan file has no 'dim' line");
  return f;
}

Fan parse_fan_string(const std::string& text) {
  std::istringstream in(text);
  return parse_fan(in);
}

}  // namespace loghodge::toric
