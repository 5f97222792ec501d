#include <doctest.h>

#include <string>

#include "constructions/constructions.hpp"
#include "core/summary.hpp"
#include "io/labeling_json.hpp"

using ebi::build_f;
using ebi::build_f_prime;
using ebi::Error;
using ebi::ErrorCode;
using ebi::GraphParams;
using ebi::parse_labeling;
using ebi::serialize_labeling;

namespace {

void expect_parse_error(const std::string& text, const std::string& fragment) {
  try {
    parse_labeling(text);
    FAIL("expected a parse error for: " << text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("serialize and parse round trip") {
  const auto params = GraphParams::create(7, 4);
  const auto lab = build_f_prime(params);
  const auto text = serialize_labeling(params, lab);
  const auto [parsed_params, parsed_lab] = parse_labeling(text);
  CHECK(parsed_params == params);
  CHECK(parsed_lab == lab);
}

TEST_CASE("summary block is optional on write and ignored on read") {
  const auto params = GraphParams::create(5, 4);
  const auto lab = build_f(params);

  const auto with = serialize_labeling(params, lab, true);
  CHECK(with.find("\"summary\"") != std::string::npos);
  CHECK(with.find("\"signed_diff\"") != std::string::npos);

  const auto without = serialize_labeling(params, lab, false);
  CHECK(without.find("\"summary\"") == std::string::npos);
  CHECK(parse_labeling(without).second == lab);

  // A tampered summary does not survive the round trip; it is recomputed.
  const auto tampered = replace_once(with, "\"index\": 0", "\"index\": 77");
  const auto [_, relab] = parse_labeling(tampered);
  CHECK(ebi::ebi_index(relab) == 0);
}

TEST_CASE("top level keys keep a stable order") {
  const auto params = GraphParams::create(5, 4);
  const auto text = serialize_labeling(params, build_f(params));
  const auto pos_m = text.find("\"m\"");
  const auto pos_n = text.find("\"n\"");
  const auto pos_q = text.find("\"q\"");
  const auto pos_r = text.find("\"r\"");
  const auto pos_rows = text.find("\"rows\"");
  REQUIRE(pos_rows != std::string::npos);
  CHECK(pos_m < pos_n);
  CHECK(pos_n < pos_q);
  CHECK(pos_q < pos_r);
  CHECK(pos_r < pos_rows);
}

TEST_CASE("q and r are checked when present, optional otherwise") {
  const auto params = GraphParams::create(5, 4);
  const auto text = serialize_labeling(params, build_f(params), false);

  expect_parse_error(replace_once(text, "\"q\": 1", "\"q\": 3"), "does not match");
  expect_parse_error(replace_once(text, "\"r\": 2", "\"r\": 0"), "does not match");

  const auto stripped = replace_once(replace_once(text, "\"q\": 1,", ""), "\"r\": 2,", "");
  CHECK(parse_labeling(stripped).second == build_f(params));
}

TEST_CASE("malformed documents raise parse errors") {
  expect_parse_error("not json", "invalid JSON");
  expect_parse_error("[1, 2]", "must be a JSON object");
  expect_parse_error(R"({"n": 4})", "\"m\"");
  expect_parse_error(R"({"m": "5", "n": 4})", "\"m\"");
  expect_parse_error(R"({"m": 6, "n": 4, "rows": []})", "bad graph parameters");
  expect_parse_error(R"({"m": 3, "n": 2})", "\"rows\" array");
  expect_parse_error(R"({"m": 3, "n": 2, "rows": 5})", "\"rows\" array");
  expect_parse_error(R"({"m": 3, "n": 2, "rows": ["10", "01"]})", "expected 3 rows");
  expect_parse_error(R"({"m": 3, "n": 2, "rows": ["10", 7, "10"]})", "row 2 is not a string");
  expect_parse_error(R"({"m": 3, "n": 2, "rows": ["10", "011", "10"]})", "has length 3");
  expect_parse_error(R"({"m": 3, "n": 2, "rows": ["10", "0x", "10"]})", "strings over {0,1}");
  expect_parse_error(R"({"m": 3, "n": 2, "rows": ["11", "11", "11"]})", "edge-friendly");
}
