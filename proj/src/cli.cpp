#include "loghodge/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "loghodge/bott.hpp"
#include "loghodge/error.hpp"
#include "loghodge/gralg.hpp"
#include "loghodge/grpcpt.hpp"
#include "loghodge/koszul.hpp"
#include "loghodge/table_io.hpp"
#include "loghodge/toric.hpp"
#include "loghodge/verify.hpp"

namespace loghodge::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kDefaultEngineJmax = 5;
constexpr int kA2ShortJmax = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render(const BigradedTable& t, const std::string& format) {
  if (format == "csv") return io::to_csv(t);
  if (format == "pretty") return io::to_pretty(t);
  return io::to_json(t);
}

ojson report_header(const std::vector<std::pair<std::string, std::string>>& source) {
  ojson doc;
  doc["schema"] = "loghodge/1";
  ojson src = ojson::object();
  for (const auto& [k, v] : source) src[k] = v;
  doc["source"] = src;
  return doc;
}

ojson violations_json(const std::vector<verify::StripViolation>& vs) {
  ojson arr = ojson::array();
  for (const auto& v : vs) arr.push_back(ojson{{"i", v.i}, {"j", v.j}, {"dim", v.dim}});
  return arr;
}

struct GrpcptOptions {
  std::string type;
  std::string mode = "closed";
  bool crosscheck = false;
  std::optional<int> jmax;
  std::string out = "json";
  bool long_running = false;
  bool emit_presentation = false;
};

struct EngineOptions {
  std::string presentation;
  int jmax = kDefaultEngineJmax;
  std::string out = "json";
};

struct ToricOptions {
  std::string fan;
  std::string remove;
  std::optional<int> codim;
  bool all = false;
  std::string out = "json";
};

struct BottOptions {
  int n = 1;
  int j = 0;
  long long twist = 0;
  bool broer = false;
  long long kmin = 0;
  long long kmax = 0;
  std::string out = "json";
};

struct VerifyOptions {
  std::string table;
  unsigned q = 0;
  unsigned r = 0;
  std::optional<unsigned> dlog_rank;
};

int engine_jmax_for(const grpcpt::CartanType& t, const GrpcptOptions& o, std::ostream& err) {
  const bool is_a2 = t == grpcpt::CartanType(grpcpt::Series::A, 2);
  if (o.jmax) {
    if (is_a2 && *o.jmax > kA2ShortJmax && !o.long_running)
      throw InputError("A2 engine runs beyond jmax " + std::to_string(kA2ShortJmax) +
                       " are long-running; pass --long to allow them");
    return *o.jmax;
  }
  if (is_a2 && !o.long_running) {
    err << "note: A2 engine jmax defaults to " << kA2ShortJmax << " without --long\n";
    return kA2ShortJmax;
  }
  return kDefaultEngineJmax;
}

BigradedTable engine_table(const grpcpt::CartanType& t, int jmax) {
  gralg::GradedQuotientAlgebra a(grpcpt::graph_ideal(t), jmax);
  return koszul::tor_table(a, jmax);
}

int run_grpcpt(const GrpcptOptions& o, std::ostream& out, std::ostream& err) {
  const auto type = grpcpt::CartanType::parse(o.type);
  const auto degrees = grpcpt::invariant_degrees(type);
  const StripParams strip{0, static_cast<unsigned>(type.rank)};

  if (o.emit_presentation) {
    out << gralg::format_presentation(grpcpt::graph_ideal(type));
    return kOk;
  }

  if (o.crosscheck || o.mode == "engine") {
    if (!grpcpt::has_graph_ideal(type))
      throw InputError("engine mode needs a graph-ideal presentation; supported types: T1..T9, A1, A2 (got " +
                       type.name() + ")");
  }

  if (o.crosscheck) {
    const int jmax = engine_jmax_for(type, o, err);
    auto engine = engine_table(type, jmax);
    auto closed = grpcpt::closed_form_table(degrees, jmax);
    ojson doc = report_header({{"subcommand", "grpcpt"}, {"type", type.name()}, {"mode", "crosscheck"}});
    doc["jmax"] = jmax;
    ojson mismatches = ojson::array();
    for (int j = 0; j <= jmax; ++j)
      for (int i = 0; i <= j; ++i)
        if (engine.at(i, j) != closed.at(i, j))
          mismatches.push_back(ojson{{"i", i}, {"j", j}, {"closed", closed.at(i, j)}, {"engine", engine.at(i, j)}});
    const bool equal = mismatches.empty();
    doc["equal"] = equal;
    doc["mismatches"] = mismatches;
    out << doc.dump() << "\n";
    if (!equal) err << "cross-check mismatch for " << type.name() << "\n";
    return equal ? kOk : kCheckFailed;
  }

  BigradedTable table;
  if (o.mode == "engine") {
    const int jmax = engine_jmax_for(type, o, err);
    table = engine_table(type, jmax);
  } else {
    table = grpcpt::closed_form_table(degrees, o.jmax);
  }
  table.source = {{"subcommand", "grpcpt"}, {"type", type.name()}, {"mode", o.mode}};
  table.strip = strip;
  out << render(table, o.out);
  auto violations = verify::strip_check(table, strip);
  auto row = verify::dlog_row_check(table, static_cast<unsigned>(grpcpt::dlog_row_rank(type)));
  if (!violations.empty() || !row.pass()) {
    err << "vanishing-strip or dlog-row check failed for " << type.name() << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int run_engine(const EngineOptions& o, std::ostream& out, std::ostream&) {
  auto p = gralg::parse_presentation_string(read_file(o.presentation));
  gralg::GradedQuotientAlgebra a(std::move(p), o.jmax);
  auto table = koszul::tor_table(a, o.jmax);
  table.source = {{"subcommand", "engine"}, {"presentation", o.presentation}};
  out << render(table, o.out);
  return kOk;
}

toric::RaySet parse_ray_list(const std::string& text) {
  toric::RaySet out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
      throw InputError("--remove expects comma-separated ray indices, got '" + text + "'");
    out.insert(std::stoul(tok));
  }
  return out;
}

int run_toric(const ToricOptions& o, std::ostream& out, std::ostream& err) {
  auto fan = toric::parse_fan_string(read_file(o.fan));
  auto report = toric::validate(fan);
  if (!report.ok()) {
    for (const auto& d : report.issues) err << "fan: " << toric::to_string(d.kind) << ": " << d.message << "\n";
    return kInputError;
  }
  auto vf = toric::ValidatedFan::make(std::move(fan));
  auto removed = o.remove.empty() ? toric::RaySet{} : parse_ray_list(o.remove);

  std::string removed_str;
  for (std::size_t r : removed) removed_str += (removed_str.empty() ? "" : ",") + std::to_string(r);
  std::string hvec;
  for (auto h : toric::h_vector(vf)) hvec += (hvec.empty() ? "" : ",") + std::to_string(h);

  BigradedTable table;
  table.source = {{"subcommand", "toric"}, {"fan", o.fan}, {"removed", removed_str}, {"h_vector", hvec}};
  if (o.codim) {
    table.set(*o.codim, *o.codim, toric::chow_dim(vf, *o.codim, removed));
    table.j_max = *o.codim;
  } else {
    for (int i = 0; i <= vf.dim(); ++i) table.set(i, i, toric::chow_dim(vf, i, removed));
    table.j_max = vf.dim();
  }
  out << render(table, o.out);
  return kOk;
}

int run_bott(const BottOptions& o, std::ostream& out, std::ostream& err) {
  if (o.broer) {
    auto rep = bott::broer_check(o.n, o.kmin, o.kmax);
    ojson doc = report_header({{"subcommand", "bott"},
                               {"mode", "broer"},
                               {"n", std::to_string(o.n)},
                               {"kmin", std::to_string(o.kmin)},
                               {"kmax", std::to_string(o.kmax)}});
    auto loci = [](const std::vector<bott::BottLocus>& v) {
      ojson arr = ojson::array();
      for (const auto& l : v) arr.push_back(ojson{{"i", l.i}, {"j", l.j}, {"k", l.k}, {"dim", l.dim}});
      return arr;
    };
    doc["pass"] = rep.ok();
    doc["violations"] = loci(rep.violations);
    doc["negative_twist_loci"] = loci(rep.negative_twist_loci);
    out << doc.dump() << "\n";
    if (!rep.ok()) err << "Broer vanishing violated on P^" << o.n << "\n";
    return rep.ok() ? kOk : kCheckFailed;
  }
  BigradedTable table;
  for (const auto& [i, dim] : bott::bott_dims({o.n, o.j, o.twist})) table.set(i, o.j, dim);
  table.j_max = o.j;
  table.source = {{"subcommand", "bott"},
                  {"n", std::to_string(o.n)},
                  {"j", std::to_string(o.j)},
                  {"twist", std::to_string(o.twist)}};
  out << render(table, o.out);
  return kOk;
}

int run_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  auto table = io::from_json(read_file(o.table));
  const StripParams p{o.q, o.r};
  auto violations = verify::strip_check(table, p);
  ojson doc = report_header({{"subcommand", "verify"},
                             {"table", o.table},
                             {"q", std::to_string(o.q)},
                             {"r", std::to_string(o.r)}});
  bool pass = violations.empty();
  doc["strip_violations"] = violations_json(violations);
  if (o.dlog_rank) {
    auto row = verify::dlog_row_check(table, *o.dlog_rank);
    ojson mm = ojson::array();
    for (const auto& m : row.mismatches)
      mm.push_back(ojson{{"j", m.j}, {"expected", m.expected}, {"actual", m.actual}});
    doc["dlog_row_mismatches"] = mm;
    pass = pass && row.pass();
  }
  doc["pass"] = pass;
  out << doc.dump() << "\n";
  if (!pass) err << "verification failed\n";
  return pass ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"loghodge: logarithmic Hodge tables, Koszul/Tor engine, toric Chow groups, Bott formula"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "csv", "pretty"};

  GrpcptOptions go;
  auto* g = app.add_subcommand("grpcpt", "Group compactifications: closed form, engine or cross-check");
  g->add_option("--type", go.type, "Cartan type: A1..E8, T1..T9")->required();
  g->add_option("--mode", go.mode, "closed|engine")->check(CLI::IsMember({"closed", "engine"}));
  g->add_flag("--crosscheck", go.crosscheck, "Run both modes and compare");
  g->add_option("--jmax", go.jmax, "Largest internal degree j")->check(CLI::NonNegativeNumber);
  g->add_option("--out", go.out, "json|csv|pretty")->check(CLI::IsMember(formats));
  g->add_flag("--long", go.long_running, "Allow long-running A2 engine runs (jmax > 3)");
  g->add_flag("--emit-presentation", go.emit_presentation, "Print the graph-ideal presentation and exit");

  EngineOptions eo;
  auto* e = app.add_subcommand("engine", "Koszul/Tor engine on an ideal presentation file");
  e->add_option("--presentation", eo.presentation, "Presentation file")->required();
  e->add_option("--jmax", eo.jmax, "Largest internal degree j")->check(CLI::NonNegativeNumber);
  e->add_option("--out", eo.out, "json|csv|pretty")->check(CLI::IsMember(formats));

  ToricOptions to;
  auto* t = app.add_subcommand("toric", "Chow dimensions of a smooth complete fan minus removed divisors");
  t->add_option("--fan", to.fan, "Fan file")->required();
  t->add_option("--remove", to.remove, "Comma-separated ray indices to remove");
  auto* codim = t->add_option("--codim", to.codim, "Single codimension")->check(CLI::NonNegativeNumber);
  auto* all = t->add_flag("--all", to.all, "All codimensions (default)");
  codim->excludes(all);
  t->add_option("--out", to.out, "json|csv|pretty")->check(CLI::IsMember(formats));

  BottOptions bo;
  auto* b = app.add_subcommand("bott", "Cohomology of Omega^j(k) on P^n, or a Broer vanishing scan");
  b->add_option("--n", bo.n, "Projective space dimension")->required()->check(CLI::PositiveNumber);
  auto* bj = b->add_option("--j", bo.j, "Form degree");
  auto* bt = b->add_option("--twist", bo.twist, "Twist k");
  auto* broer = b->add_flag("--broer", bo.broer, "Scan twists kmin..kmax for strip violations");
  auto* bkmin = b->add_option("--kmin", bo.kmin, "Smallest twist for --broer (default 0)");
  auto* bkmax = b->add_option("--kmax", bo.kmax, "Largest twist for --broer");
  broer->excludes(bj)->excludes(bt);
  bkmin->needs(broer);
  bkmax->needs(broer);
  b->add_option("--out", bo.out, "json|csv|pretty")->check(CLI::IsMember(formats));

  VerifyOptions vo;
  auto* v = app.add_subcommand("verify", "Vanishing-strip check of a JSON table");
  v->add_option("--table", vo.table, "Table file (loghodge/1 JSON)")->required();
  v->add_option("--q", vo.q, "Irregularity")->required();
  v->add_option("--r", vo.r, "Rank bound")->required();
  v->add_option("--dlog-rank", vo.dlog_rank, "Also check row 0 against C(rank, j)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      app.exit(ex, out, err);
      return kOk;
    }
    err << "error: " << ex.what() << "\n";
    return kInputError;
  }

  try {
    if (g->parsed()) return run_grpcpt(go, out, err);
    if (e->parsed()) return run_engine(eo, out, err);
    if (t->parsed()) return run_toric(to, out, err);
    if (b->parsed()) {
      if (!bo.broer && (bj->count() == 0 || bt->count() == 0))
        throw InputError("bott needs --j and --twist, or --broer with --kmax");
      if (bo.broer && bkmax->count() == 0) throw InputError("bott --broer needs --kmax");
      return run_bott(bo, out, err);
    }
    if (v->parsed()) return run_verify(vo, out, err);
  } catch (const InputError& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (const TruncationError& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}

}  // namespace loghodge::cli
