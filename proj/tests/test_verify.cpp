#include <doctest.h>

#include "loghodge/error.hpp"
#include "loghodge/grpcpt.hpp"
#include "loghodge/koszul.hpp"
#include "loghodge/table_io.hpp"
#include "loghodge/verify.hpp"

using namespace loghodge;
using namespace loghodge::verify;

namespace {

BigradedTable engine(const char* type, int j_max) {
  gralg::GradedQuotientAlgebra a(grpcpt::graph_ideal(grpcpt::CartanType::parse(type)), j_max);
  return koszul::tor_table(a, j_max);
}

}  // namespace

TEST_CASE("strip_check examples") {
  auto a2 = grpcpt::closed_form_table({{2, 3}});
  CHECK(strip_check(a2, {0, 2}).empty());

  BigradedTable bad;
  bad.set(0, 0, 1);
  bad.set(0, 3, 1);
  auto v = strip_check(bad, {0, 2});
  REQUIRE(v.size() == 1);
  CHECK(v[0].i == 0);
  CHECK(v[0].j == 3);

  CHECK(strip_check(BigradedTable{}, {0, 0}).empty());
}

TEST_CASE("strip_check flags entries below the diagonal") {
  BigradedTable t;
  t.set(2, 1, 4);
  auto v = strip_check(t, {5, 5});
  REQUIRE(v.size() == 1);
  CHECK(v[0].dim == 4);
}

TEST_CASE("strip_check is monotone under taking sub-tables") {
  auto full = grpcpt::closed_form_table(grpcpt::invariant_degrees(grpcpt::CartanType::parse("B3")));
  REQUIRE(strip_check(full, {0, 3}).empty());
  const auto entries = full.sorted_entries();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << entries.size()); mask += 7) {
    BigradedTable sub;
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (mask & (std::uint64_t{1} << k)) sub.set(entries[k].first.first, entries[k].first.second, entries[k].second);
    CHECK(strip_check(sub, {0, 3}).empty());
  }
}

TEST_CASE("a bound of j_max is vacuous for tables with i <= j") {
  for (const char* name : {"A3", "G2", "F4", "T4"}) {
    auto t = grpcpt::closed_form_table(grpcpt::invariant_degrees(grpcpt::CartanType::parse(name)));
    const unsigned jm = static_cast<unsigned>(t.max_j());
    CHECK(strip_check(t, {jm, jm}).empty());
  }
}

TEST_CASE("engine tables lie in the strip") {
  for (const auto& [name, jmax, rank] : std::vector<std::tuple<const char*, int, unsigned>>{
           {"T1", 3, 1}, {"T2", 3, 2}, {"A1", 4, 1}}) {
    CAPTURE(name);
    CHECK(strip_check(engine(name, jmax), {0, rank}).empty());
  }
}

TEST_CASE("dlog_row_check examples") {
  auto t2 = engine("T2", 3);
  CHECK(dlog_row_check(t2, 2).pass());
  CHECK(t2.at(0, 0) == 1);
  CHECK(t2.at(0, 1) == 2);
  CHECK(t2.at(0, 2) == 1);

  CHECK(dlog_row_check(engine("A1", 4), 0).pass());

  BigradedTable bad;
  bad.set(0, 0, 1);
  bad.set(0, 1, 1);
  auto r = dlog_row_check(bad, 0);
  CHECK_FALSE(r.pass());
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].j == 1);
}

TEST_CASE("dlog_row_check reads up to the declared bound") {
  BigradedTable t;
  t.set(0, 0, 1);
  t.j_max = 2;
  auto r = dlog_row_check(t, 1);
  CHECK_FALSE(r.pass());
  CHECK(r.j_max == 2);
}

TEST_CASE("full toric boundary table") {
  auto t = toric_full_boundary_table(3);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(0, 1) == 3);
  CHECK(t.at(0, 2) == 3);
  CHECK(t.at(0, 3) == 1);
  CHECK(t.total_mass() == 8);
  CHECK(dlog_row_check(t, 3).pass());
  CHECK(strip_check(t, {0, 3}).empty());
}

TEST_CASE("JSON round trip keeps entries and metadata") {
  auto t = engine("T2", 3);
  t.strip = StripParams{0, 2};
  t.source = {{"command", "test"}, {"type", "T2"}};
  const std::string json = io::to_json(t);
  const auto back = io::from_json(json);
  CHECK(back.same_entries(t));
  CHECK(back.j_max == t.j_max);
  CHECK(back.euler_checksums == t.euler_checksums);
  REQUIRE(back.strip.has_value());
  CHECK(back.strip->r == 2);
  CHECK(io::to_json(back) == json);
}

TEST_CASE("JSON layout") {
  BigradedTable t;
  t.set(1, 2, 1);
  t.set(0, 0, 1);
  t.j_max = 2;
  t.source = {{"command", "x"}};
  t.euler_checksums[0] = 1;
  const std::string json = io::to_json(t);
  const auto schema = json.find("\"schema\"");
  const auto source = json.find("\"source\"");
  const auto jmax = json.find("\"jmax\"");
  const auto entries = json.find("\"entries\"");
  const auto checks = json.find("\"checksums\"");
  CHECK(schema < source);
  CHECK(source < jmax);
  CHECK(jmax < entries);
  CHECK(entries < checks);
  CHECK(json.find("loghodge/1") != std::string::npos);
  CHECK(json.find("\"i\":0") < json.find("\"i\":1"));
}

TEST_CASE("malformed JSON is an input error") {
  CHECK_THROWS_AS(io::from_json("not json"), InputError);
  CHECK_THROWS_AS(io::from_json(R"({"schema":"other/2","entries":[]})"), InputError);
  CHECK_THROWS_AS(io::from_json(R"({"schema":"loghodge/1","entries":[{"i":0,"j":0,"dim":-1}]})"), InputError);
}

TEST_CASE("CSV and pretty forms") {
  auto t = grpcpt::closed_form_table({{2}});
  CHECK(io::to_csv(t) == "i,j,dim\n0,0,1\n1,2,1\n");
  const auto pretty = io::to_pretty(t);
  CHECK(pretty.find('.') != std::string::npos);
}
