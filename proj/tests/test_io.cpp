#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "betti/io.hpp"
#include "helpers.hpp"

using namespace betti;
using betti::testing::make_ideal;

namespace {

std::filesystem::path write_temp(const std::string& stem, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("betti_io_test_" + stem);
  std::ofstream out(path);
  out << text;
  return path;
}

BettiTable koszul2() {
  BettiTable t(1, 3);
  t.add(0, 0, 1);
  t.add(1, 1, 2);
  t.add(2, 2, 1);
  return t;
}

BettiTable powers() {
  BettiTable t(2, 3);
  t.add(0, 0, 1);
  t.add(1, 2, 3);
  t.add(2, 3, 2);
  return t;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("format names") {
  CHECK(parse_format("text") == TableFormat::text);
  CHECK(parse_format("csv") == TableFormat::csv);
  CHECK(parse_format("json") == TableFormat::json);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("text tables") {
  CHECK(render_table(koszul2(), TableFormat::text) ==
        "total: 1 2 1\n"
        "0:     1 2 1\n");
  CHECK(render_table(powers(), TableFormat::text) ==
        "total: 1 3 2\n"
        "0:     1 . .\n"
        "1:     . 3 2\n");

  BettiTable unit(1, 1);
  unit.add(0, 0, 1);
  CHECK(render_table(unit, TableFormat::text) == "total: 1\n0:     1\n");

  // columns right-align on the widest entry
  BettiTable wide(2, 2);
  wide.add(0, 0, 1);
  wide.add(1, 2, 12);
  CHECK(render_table(wide, TableFormat::text) ==
        "total: 1 12\n"
        "0:     1  .\n"
        "1:     . 12\n");

  CHECK_THROWS_AS(parse_table("total: 1\n", TableFormat::text), std::invalid_argument);
}

TEST_CASE("csv and json tables round-trip") {
  const BettiTable t = powers();
  CHECK(render_table(t, TableFormat::csv) ==
        "strand,0,1,2\n"
        "0,1,0,0\n"
        "1,0,3,2\n");
  CHECK(parse_table(render_table(t, TableFormat::csv), TableFormat::csv) == t);
  CHECK(parse_table(render_table(t, TableFormat::json), TableFormat::json) == t);

  // padding never leaks into the rendering
  BettiTable padded(6, 7);
  padded.add(0, 0, 1);
  padded.add(1, 2, 3);
  padded.add(2, 3, 2);
  CHECK(padded == t);
  CHECK(render_table(padded, TableFormat::csv) == render_table(t, TableFormat::csv));

  CHECK_THROWS_AS(parse_table("", TableFormat::csv), std::invalid_argument);
  CHECK_THROWS_AS(parse_table("strand,0\n5\n", TableFormat::csv), std::invalid_argument);
}

TEST_CASE("ideal input, text form") {
  std::istringstream in("# generators\n\nx1^2*x2\nx3\n");
  const MonomialIdeal i = read_ideal_text(in);
  CHECK(i.n_vars() == 3);
  REQUIRE(i.n_generators() == 2);
  CHECK(i.generator(0) == parse_monomial("x1^2*x2", 3));
  CHECK(i.generator(1) == parse_monomial("x3", 3));

  std::istringstream raised("x1*x2\n");
  CHECK(read_ideal_text(raised, 5).n_vars() == 5);
  std::istringstream lowered("x1*x3\n");
  CHECK(read_ideal_text(lowered, 2).n_vars() == 3);  // inference only raises
}

TEST_CASE("ideal input, json form") {
  const MonomialIdeal i = read_ideal_json(R"({"n": 2, "generators": [[2, 0], [1, 1]]})");
  CHECK(i == make_ideal(2, {"x1^2", "x1*x2"}));
  CHECK(read_ideal_json(R"({"n": 3, "generators": []})").n_generators() == 0);
  CHECK_THROWS_AS(read_ideal_json(R"({"n": 2, "generators": [[2]]})"), std::invalid_argument);
}

TEST_CASE("ideal files dispatch on the first byte") {
  const auto jpath = write_temp("ideal.json", R"(  {"n": 2, "generators": [[1, 1]]})");
  const auto tpath = write_temp("ideal.txt", "x1*x2\n");
  CHECK(read_ideal_file(jpath.string()) == read_ideal_file(tpath.string()));
  CHECK_THROWS_AS(read_ideal_file("/nonexistent/betti.txt"), std::runtime_error);
  std::filesystem::remove(jpath);
  std::filesystem::remove(tpath);
}

TEST_CASE("nonface input is 1-based") {
  const NonfaceComplex cx = read_nonfaces_json(R"({"n": 3, "nonfaces": [[1, 2, 3]]})");
  CHECK(cx.n == 3);
  REQUIRE(cx.nonfaces.size() == 1);
  CHECK(cx.nonfaces[0] == Face({0, 1, 2}));
  CHECK_THROWS_AS(read_nonfaces_json(R"({"n": 3, "nonfaces": [[0, 1]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_nonfaces_json(R"({"n": 3, "nonfaces": [[1, 1]]})"),
                  std::invalid_argument);
}

TEST_CASE("graph files") {
  const auto path = write_temp("path.graph", "# path\n1 2\n\n2 3\n");
  const NonfaceComplex cx = read_graph_file(path.string());
  CHECK(cx.n == 3);
  REQUIRE(cx.nonfaces.size() == 1);
  CHECK(cx.nonfaces[0] == Face({0, 2}));
  CHECK(read_graph_file(path.string(), 4).nonfaces.size() == 4);
  std::filesystem::remove(path);

  const auto bad = write_temp("bad.graph", "1 2 3\n");
  CHECK_THROWS_AS(read_graph_file(bad.string()), std::invalid_argument);
  std::filesystem::remove(bad);
  const auto zero = write_temp("zero.graph", "0 1\n");
  CHECK_THROWS_AS(read_graph_file(zero.string()), std::invalid_argument);
  std::filesystem::remove(zero);
}

TEST_CASE("multigraded rendering") {
  MultigradedBetti mg;
  Exponents zero = Exponents::Zero(2), two0(2);
  two0 << 2, 0;
  mg.add(0, zero);
  mg.add(1, two0);
  CHECK(render_multigraded(mg, TableFormat::text) ==
        "i=0 deg=(0,0) count=1\n"
        "i=1 deg=(2,0) count=1\n");
  CHECK(render_multigraded(mg, TableFormat::csv) ==
        "i,deg,count\n"
        "0,0 0,1\n"
        "1,2 0,1\n");
  const auto j = nlohmann::json::parse(render_multigraded(mg, TableFormat::json));
  CHECK(j.at("entries").size() == 2);
  CHECK(j.at("entries")[1].at("deg") == std::vector<int>({2, 0}));
}

TEST_CASE("homology rendering") {
  const std::vector<std::int64_t> dims = {0, 1, 2};
  CHECK(render_homology(dims, TableFormat::text) ==
        "H~_-1 = 0\n"
        "H~_0 = 1\n"
        "H~_1 = 2\n");
  CHECK(render_homology(dims, TableFormat::csv) == "dim,betti\n-1,0\n0,1\n1,2\n");
  const auto j = nlohmann::json::parse(render_homology(dims, TableFormat::json));
  CHECK(j.at("first_dimension") == -1);
  CHECK(j.at("dims") == std::vector<int>({0, 1, 2}));
}

TEST_CASE("ideal rendering") {
  CHECK(render_ideal(make_ideal(2, {"x1^2", "x1*x2"})) == "n=2; I = (x1^2, x1*x2)");
}

}  // TEST_SUITE
