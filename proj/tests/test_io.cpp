#include <doctest.h>

#include <filesystem>
#include <numbers>

#include <json.hpp>

#include "rcft/error.hpp"
#include "rcft/io.hpp"

using namespace rcft;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("modular data round trip") {
  for (const std::string spec : {"ising", "su2:1", "su2:4"}) {
    CAPTURE(spec);
    const ModularData md = resolve_modular_data(spec);
    const std::string text = modular_data_to_json(md);
    const ModularData back = parse_modular_data(text);
    CHECK(back.size() == md.size());
    CHECK(back.vacuum() == md.vacuum());
    CHECK(back.central_charge() == md.central_charge());
    CHECK(back.weights() == md.weights());
    CHECK((back.s() - md.s()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.t() - md.t()).cwiseAbs().maxCoeff() == 0.0);
    for (std::size_t i = 0; i < md.size(); ++i) CHECK(back.label(i).name == md.label(i).name);
    CHECK(modular_data_to_json(back) == text);
  }
}

TEST_CASE("modular data JSON layout") {
  const auto j = nlohmann::json::parse(modular_data_to_json(ising_modular_data()));
  CHECK(j["labels"].size() == 3);
  CHECK(j["central_charge"] == "1/2");
  CHECK(j["weights"][2] == "1/16");
  CHECK(j["S"].size() == 9);
  CHECK(j["S"][0][0].get<double>() == doctest::Approx(0.5));
  CHECK_FALSE(j.contains("T"));
}

TEST_CASE("file save and load") {
  const auto path = (std::filesystem::temp_directory_path() / "rcft_io_su2_3.json").string();
  save_modular_data(su2_modular_data(3), path);
  const ModularData md = resolve_modular_data(path);
  CHECK(md.size() == 4);
  std::filesystem::remove(path);
  CHECK(code_of([&] { load_modular_data(path); }) == ErrorCode::Io);
}

TEST_CASE("rejected modular data") {
  auto j = nlohmann::json::parse(modular_data_to_json(ising_modular_data()));
  j["S"][0] = {0.9, 0.0};
  try {
    parse_modular_data(j.dump());
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Validation);
    CHECK(std::string(e.what()).find("unitary") != std::string::npos);
  }
  auto k = nlohmann::json::parse(modular_data_to_json(ising_modular_data()));
  k["weights"][2] = "1/8";
  CHECK(code_of([&] { parse_modular_data(k.dump()); }) == ErrorCode::Validation);
  k["weights"][2] = "one";
  CHECK(code_of([&] { parse_modular_data(k.dump()); }) == ErrorCode::Validation);
  k.erase("weights");
  CHECK(code_of([&] { parse_modular_data(k.dump()); }) == ErrorCode::Validation);
  CHECK(code_of([] { parse_modular_data("{not json"); }) == ErrorCode::Validation);
  CHECK(code_of([] { parse_modular_data("[1, 2]"); }) == ErrorCode::Validation);
  CHECK(code_of([] { resolve_modular_data("su2:x"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("complex parsing") {
  CHECK(parse_complex("0.5,-1e-3") == Complex(0.5, -1e-3));
  CHECK(parse_complex("2") == Complex(2.0, 0.0));
  CHECK_THROWS_AS(parse_complex("1,x"), Error);
  CHECK_THROWS_AS(parse_complex("1.5e"), Error);
}

TEST_CASE("path files") {
  const PathSpec p = parse_path_spec("# loop around 0\nstart 0.1,0\narc 0,0 6.283185307179586\n");
  CHECK(p.start == Complex(0.1, 0.0));
  REQUIRE(p.segments.size() == 1);
  CHECK(p.segments[0].kind == PathSegment::Kind::Arc);
  const MonodromyResult file_loop = continue_along(p);
  const MonodromyResult builtin = continue_along(PathSpec::circle(0.0, 0.1));
  CHECK((file_loop.matrix - builtin.matrix).cwiseAbs().maxCoeff() < 1e-10);

  const PathSpec q = parse_path_spec("line 0.5,1\nline 0.2,0\nline 0.5,0\n");
  CHECK(q.start == Complex(0.5, 0.0));
  CHECK(q.segments.size() == 3);
  CHECK_THROWS_AS(parse_path_spec("spiral 0,0"), Error);
  CHECK_THROWS_AS(parse_path_spec("arc 0,0"), Error);
  CHECK_THROWS_AS(parse_path_spec("# nothing\n"), Error);
}

TEST_CASE("configuration sample files") {
  const ConfigPath p = parse_config_path(
      "0 1 2 3\n0 1.5,-0.5 1.5,0.5 3\n0 2 1 3\n");
  CHECK(p.permutation() == std::vector<std::size_t>{0, 2, 1, 3});
  const SpinSystem sys = SpinSystem::four_doublets(2);
  const auto m = kz_monodromy(sys, p);
  const auto swap = kz_monodromy(sys, ConfigPath::swap(ConfigPath::default_base(4), 1, 2));
  CHECK((m - swap).cwiseAbs().maxCoeff() < 1e-7);
  CHECK_THROWS_AS(parse_config_path("0 1 2 3\n0 1 2\n"), Error);
}
