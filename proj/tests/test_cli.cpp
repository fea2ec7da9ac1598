#include <doctest.h>

#include <sstream>

#include "ado/cli.hpp"
#include "ado/serialize.hpp"

using namespace ado;

TEST_CASE("parse braid words") {
  BraidWord w = parse_braid("1 1 1", 2);
  CHECK(w.strands == 2);
  CHECK(w.letters == std::vector<int>{1, 1, 1});

  BraidWord fig8 = parse_braid("1 -2 1 -2", 3);
  CHECK(fig8.letters == std::vector<int>{1, -2, 1, -2});

  // caret syntax
  CHECK(parse_braid("s1^3", 2).letters == std::vector<int>{1, 1, 1});
  CHECK(parse_braid("s2^-2 s1", 3).letters == std::vector<int>{-2, -2, 1});
  CHECK(parse_braid("", 4).letters.empty());

  CHECK_THROWS_AS(parse_braid("3", 2), BraidParseError);
  CHECK_THROWS_AS(parse_braid("0", 2), BraidParseError);
  CHECK_THROWS_AS(parse_braid("1 x 2", 3), BraidParseError);
  CHECK_THROWS_AS(parse_braid("s9^2", 3), BraidParseError);
}

TEST_CASE("parse lambda") {
  CHECK(parse_lambda("0.5") == std::complex<double>(0.5, 0.0));
  CHECK(parse_lambda("-2") == std::complex<double>(-2.0, 0.0));
  CHECK(parse_lambda("1+2i") == std::complex<double>(1.0, 2.0));
  CHECK(parse_lambda("0.5-0.25i") == std::complex<double>(0.5, -0.25));
  CHECK(parse_lambda("2i") == std::complex<double>(0.0, 2.0));
  CHECK_THROWS_AS(parse_lambda("abc"), BraidParseError);
}

TEST_CASE("run: unknot") {
  RunConfig config;
  config.knot = "unknot";
  config.color = 2;
  std::ostringstream out, err;
  CHECK(run(config, out, err) == kExitOk);
  CHECK(out.str().find("equal: true") != std::string::npos);
}

TEST_CASE("run: trefoil json output round-trips and is deterministic") {
  RunConfig config;
  config.knot = "trefoil";
  config.color = 2;
  config.format = "json";
  std::ostringstream out1, out2, err;
  CHECK(run(config, out1, err) == kExitOk);
  CHECK(run(config, out2, err) == kExitOk);
  CHECK(out1.str() == out2.str());  // byte-identical

  nlohmann::json j = nlohmann::json::parse(out1.str());
  CHECK(j.at("n") == 2);
  CHECK(j.at("N") == 2);
  CHECK(j.at("writhe") == 3);
  CHECK(j.at("equal") == true);
  CHECK(j.at("tExp") == 3);
  ScalarExt value = scalar_from_json(j.at("value"), 2);
  ScalarExt expect = ScalarExt::s_power(2, 2) - ScalarExt::one(2) +
                     ScalarExt::s_power(2, -2);
  CHECK(value == expect);
}

TEST_CASE("run: numeric lambda matches the oracle") {
  RunConfig config;
  config.knot = "trefoil";
  config.color = 2;
  config.method = "direct";
  config.lambda = std::complex<double>(0.5, 0.0);
  config.format = "json";
  std::ostringstream out, err;
  CHECK(run(config, out, err) == kExitOk);
  nlohmann::json j = nlohmann::json::parse(out.str());
  auto v = j.at("valueAtLambda");
  // Burau oracle value at t = e^{-i pi / 2} is -1
  CHECK(std::abs(v[0].get<double>() - (-1.0)) < 1e-9);
  CHECK(std::abs(v[1].get<double>()) < 1e-9);
}

TEST_CASE("run: usage errors exit with code 2") {
  std::ostringstream out, err;
  RunConfig none;
  CHECK(run(none, out, err) == kExitParseError);

  RunConfig both;
  both.knot = "trefoil";
  both.braidText = "1";
  CHECK(run(both, out, err) == kExitParseError);

  RunConfig badColor;
  badColor.knot = "trefoil";
  badColor.color = 9;
  CHECK(run(badColor, out, err) == kExitParseError);

  RunConfig badBraid;
  badBraid.braidText = "7";
  badBraid.strands = 2;
  CHECK(run(badBraid, out, err) == kExitParseError);

  RunConfig badMethod;
  badMethod.knot = "trefoil";
  badMethod.method = "sideways";
  CHECK(run(badMethod, out, err) == kExitParseError);
}

TEST_CASE("run: braid input path") {
  RunConfig config;
  config.braidText = "s1^5";
  config.strands = 2;
  config.color = 3;
  config.method = "both";
  std::ostringstream out, err;
  CHECK(run(config, out, err) == kExitOk);
  CHECK(out.str().find("equal: true") != std::string::npos);
}
