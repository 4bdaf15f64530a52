#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dnt/io.hpp"
#include "dnt/reference.hpp"
#include "support.hpp"

namespace io = dnt::io;

namespace {

std::string sample(const std::string& name) {
  return io::read_file(std::string(DNT_SAMPLES_DIR) + "/" + name);
}

std::string data(const std::string& name) {
  return io::read_file(std::string(DNT_SAMPLES_DIR) + "/../tests/data/" + name);
}

}  // namespace

TEST_CASE("document kinds are detected from top-level keys") {
  CHECK(io::detect_kind(sample("linguistic_scale.json")) == io::DocumentKind::scale);
  CHECK(io::detect_kind(sample("combine_inputs.json")) == io::DocumentKind::dnumbers);
  CHECK(io::detect_kind(sample("combine_matrix.json")) == io::DocumentKind::nonexcl_matrix);
  CHECK(io::detect_kind(sample("dispute_scenario.json")) == io::DocumentKind::scenario);
  CHECK(io::detect_kind(sample("dispute_game.json")) == io::DocumentKind::game);
  CHECK(io::detect_kind("{\"what\": 1}") == io::DocumentKind::unknown);
}

TEST_CASE("the shipped samples equal the embedded reference data") {
  CHECK(sample("linguistic_scale.json") == io::serialize_scale(dnt::reference::scale()));
  CHECK(sample("dispute_scenario.json") ==
        io::serialize_scenario(dnt::reference::dispute_scenario()));
  CHECK(sample("dispute_game.json") == io::serialize_game(dnt::reference::dispute_game()));
  CHECK(sample("dispute_game_topsis.json") ==
        io::serialize_game(dnt::reference::dispute_game_topsis()));
  const auto& ex = dnt::reference::combination_example();
  CHECK(sample("combine_inputs.json") == io::serialize_dnumbers(ex.frame, {ex.d1, ex.d2}));
  CHECK(sample("combine_matrix.json") == io::serialize_nonexcl_matrix(ex.matrix));
}

TEST_CASE("scale round-trip") {
  const dnt::LinguisticScale scale = io::parse_scale(sample("linguistic_scale.json"));
  CHECK(scale == dnt::reference::scale());
  CHECK(io::parse_scale(io::serialize_scale(scale)) == scale);
}

TEST_CASE("scenario round-trip preserves everything") {
  const dnt::ScenarioSpec spec = io::parse_scenario(sample("dispute_scenario.json"));
  CHECK(spec.row_player == "Alpha");
  CHECK(spec.col_strategies.size() == 4);
  CHECK(spec.scale == dnt::reference::scale());
  CHECK(spec.cases.size() == 1);
  CHECK(spec.cases[0].votes.at("AS1").at("C1").size() == 10);
  CHECK(io::serialize_scenario(io::parse_scenario(io::serialize_scenario(spec))) ==
        io::serialize_scenario(spec));
}

TEST_CASE("dnumbers round-trip and augmentation on load") {
  const auto [frame, ds] = io::parse_dnumbers(sample("combine_inputs.json"));
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].mass(dnt::DFocalSet::of(frame, {"X"})) == doctest::Approx(0.2));

  // A partial assignment without an explicit X row is augmented on load.
  const auto [f2, partial] = io::parse_dnumbers(
      R"({"theta": ["a", "b"], "dnumbers": [[{"focal": ["a"], "mass": 0.5}]]})");
  CHECK(partial[0].mass(dnt::DFocalSet::of(f2, {"X"})) == doctest::Approx(0.5));

  CHECK(io::parse_dnumbers(io::serialize_dnumbers(frame, ds)).second.size() == 2);
}

TEST_CASE("game and matrix round-trips") {
  const dnt::BimatrixGame game = io::parse_game(sample("dispute_game.json"));
  CHECK(game.at(4, 2).u1 == 0.937);
  CHECK(io::serialize_game(io::parse_game(io::serialize_game(game))) ==
        io::serialize_game(game));

  const auto m = io::parse_nonexcl_matrix(sample("combine_matrix.json"));
  CHECK(m.base("a", "X") == 0.2);
  CHECK(io::parse_nonexcl_matrix(io::serialize_nonexcl_matrix(m)).rows() == m.rows());
}

TEST_CASE("parse errors carry the offending field path") {
  SUBCASE("malformed triangle") {
    try {
      io::parse_scale(data("bad_scale.json"));
      FAIL("expected ParseError");
    } catch (const dnt::ParseError& e) {
      CHECK(e.path() == "scale[1].tfn");
    }
  }
  SUBCASE("asymmetric matrix") {
    CHECK_THROWS_AS(io::parse_nonexcl_matrix(data("asymmetric_matrix.json")), dnt::ParseError);
  }
  SUBCASE("invalid JSON") {
    CHECK_THROWS_AS(io::parse_scale("not json at all"), dnt::ParseError);
  }
  SUBCASE("missing fields are named") {
    try {
      io::parse_scenario(R"({"players": ["A", "B"]})");
      FAIL("expected ParseError");
    } catch (const dnt::ParseError& e) {
      CHECK(e.path() == "strategies");
    }
  }
  SUBCASE("mass overflow on load") {
    CHECK_THROWS_AS(
        io::parse_dnumbers(
            R"({"theta": ["a"], "dnumbers": [[{"focal": ["a"], "mass": 1.4}]]})"),
        dnt::ParseError);
  }
  SUBCASE("matrix labels must end with X") {
    CHECK_THROWS_AS(
        io::parse_nonexcl_matrix(R"({"labels": ["a", "b"], "matrix": [[1, 0], [0, 1]]})"),
        dnt::ParseError);
  }
}

TEST_CASE("report serialization is deterministic") {
  const dnt::Report report = dnt::run_game(dnt::reference::dispute_game());
  const std::string once = io::serialize_report(report);
  const std::string twice = io::serialize_report(dnt::run_game(dnt::reference::dispute_game()));
  CHECK(once == twice);
  CHECK(once.find("\"equilibria\"") != std::string::npos);
  CHECK(once.find("AS5") != std::string::npos);
}

TEST_CASE("bpa documents") {
  const std::string text =
      R"({"frame": ["a", "b"], "masses": [{"subset": ["a"], "mass": 0.6}, {"subset": ["a", "b"], "mass": 0.4}]})";
  const auto m = io::parse_bpa(text);
  CHECK(m.mass(dnt::Subset::of(m.frame(), {"a"})) == 0.6);
  CHECK(io::parse_bpa(io::serialize_bpa(m)).masses() == m.masses());
  CHECK_THROWS_AS(
      io::parse_bpa(R"({"frame": ["a"], "masses": [{"subset": ["a"], "mass": 0.5}]})"),
      dnt::ParseError);
}
