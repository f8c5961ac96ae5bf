#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>

#include "rcft/error.hpp"
#include "rcft/orbifold.hpp"

using namespace rcft;

namespace {

// Independent count: loop over every 2g-tuple and multiply commutators directly.
std::size_t brute_force_flat(const FiniteGroup& g, int genus) {
  const int m = g.order();
  const int len = 2 * genus;
  std::vector<int> t(static_cast<std::size_t>(len), 0);
  std::size_t count = 0;
  while (true) {
    int prod = g.identity();
    for (int i = 0; i < len; i += 2) {
      const int a = t[static_cast<std::size_t>(i)], b = t[static_cast<std::size_t>(i + 1)];
      prod = g.mul(prod, g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    }
    if (prod == g.identity()) ++count;
    int pos = 0;
    while (pos < len && ++t[static_cast<std::size_t>(pos)] == m) t[static_cast<std::size_t>(pos++)] = 0;
    if (pos == len) break;
  }
  return count;
}

std::size_t element_order(const FiniteGroup& g, int a) {
  std::size_t n = 1;
  for (int x = a; x != g.identity(); x = g.mul(x, a)) ++n;
  return n;
}

std::size_t involutions(const FiniteGroup& g) {
  std::size_t n = 0;
  for (int a = 0; a < g.order(); ++a)
    if (element_order(g, a) == 2) ++n;
  return n;
}

}  // namespace

TEST_CASE("built-in groups") {
  const std::map<std::string, std::array<std::size_t, 3>> expected{
      // order, conjugacy classes, involutions
      {"trivial", {1, 1, 0}}, {"Z2", {2, 2, 1}}, {"Z3", {3, 3, 0}},  {"Z4", {4, 4, 1}},
      {"Z2xZ2", {4, 4, 3}},   {"S3", {6, 3, 3}}, {"D4", {8, 5, 5}},  {"Q8", {8, 5, 1}},
      {"A4", {12, 4, 3}},
  };
  for (const auto& name : FiniteGroup::builtin_names()) {
    CAPTURE(name);
    const FiniteGroup g = FiniteGroup::builtin(name);
    const auto& e = expected.at(name);
    CHECK(static_cast<std::size_t>(g.order()) == e[0]);
    CHECK(g.conjugacy_class_count() == e[1]);
    CHECK(involutions(g) == e[2]);
    const auto& d = g.character_degrees();
    CHECK(d.size() == g.conjugacy_class_count());
    CHECK(std::accumulate(d.begin(), d.end(), 0, [](int s, int x) { return s + x * x; }) == g.order());
    for (int a = 0; a < g.order(); ++a) CHECK(g.mul(a, g.inv(a)) == g.identity());
  }
  CHECK(FiniteGroup::builtin("Z4").is_abelian());
  CHECK_FALSE(FiniteGroup::builtin("Q8").is_abelian());
  CHECK_THROWS_AS(FiniteGroup::builtin("Z5"), Error);
}

TEST_CASE("group table validation") {
  CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}, {1}}), Error);
  CHECK_THROWS_AS(FiniteGroup("bad", {{0, 2}, {1, 0}}), Error);
  // A Latin square with identity 0 that is not associative.
  const std::vector<std::vector<int>> loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup("loop", loop);
    FAIL("expected non-associativity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Validation);
    CHECK(std::string(e.what()).find("associative") != std::string::npos);
  }
}

TEST_CASE("group table files") {
  const auto path = std::filesystem::temp_directory_path() / "rcft_z3_table.txt";
  {
    std::ofstream f(path);
    f << "3\n0 1 2\n1 2 0\n2 0 1\n";
  }
  const FiniteGroup g = FiniteGroup::load(path.string());
  CHECK(g.order() == 3);
  CHECK(g.mul(2, 2) == 1);
  CHECK(g.character_degrees().empty());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(FiniteGroup::parse("t", "2\n0 1\n1"), Error);
  CHECK_THROWS_AS(FiniteGroup::parse("t", "2\n0 1\n1 0\n5"), Error);
  CHECK_THROWS_AS(FiniteGroup::load("/nonexistent/table.txt"), Error);
}

TEST_CASE("flat tuple counts") {
  CHECK(enumerate_flat(FiniteGroup::builtin("Z2"), 1).size() == 4);
  CHECK(enumerate_flat(FiniteGroup::builtin("S3"), 1).size() == 18);
  CHECK(enumerate_flat(FiniteGroup::builtin("S3"), 2).size() == 486);
  CHECK(enumerate_flat(FiniteGroup::builtin("trivial"), 3).size() == 1);
  for (const auto& name : FiniteGroup::builtin_names()) {
    const FiniteGroup g = FiniteGroup::builtin(name);
    for (int genus = 1; genus <= 2; ++genus) {
      CAPTURE(name);
      CAPTURE(genus);
      const auto tuples = enumerate_flat(g, genus);
      CHECK(tuples.size() == brute_force_flat(g, genus));
      CHECK(mpz_class(tuples.size()) == mednykh_count(g, genus, g.character_degrees()));
      CHECK(std::is_sorted(tuples.begin(), tuples.end()));
      for (const auto& t : tuples) REQUIRE(is_flat(g, t));
    }
  }
  const FiniteGroup s3 = FiniteGroup::builtin("S3");
  CHECK(enumerate_flat(s3, 3).size() == brute_force_flat(s3, 3));
}

TEST_CASE("enumeration budget") {
  const FiniteGroup a4 = FiniteGroup::builtin("A4");
  try {
    enumerate_flat(a4, 4);
    FAIL("expected a budget refusal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Limit);
    CHECK(std::string(e.what()).find("4.30e+08") != std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_flat(a4, 2, 1000), Error);
  CHECK_THROWS_AS(enumerate_flat(a4, 0), Error);
}

TEST_CASE("Mednykh count") {
  const FiniteGroup s3 = FiniteGroup::builtin("S3");
  CHECK(mednykh_count(s3, 1, {1, 1, 2}) == 18);
  CHECK(mednykh_count(s3, 2, {1, 1, 2}) == 486);
  CHECK(mednykh_count(FiniteGroup::builtin("trivial"), 5, {1}) == 1);
  CHECK_THROWS_AS(mednykh_count(s3, 1, {1, 1, 1}), Error);
  CHECK_THROWS_AS(mednykh_count(s3, 1, {}), Error);
  // Squares sum to 8 but the count is not integral at genus 2.
  try {
    mednykh_count(FiniteGroup::builtin("D4"), 2, {2, 2});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Validation);
  }
  const mpz_class big = mednykh_count(FiniteGroup::builtin("A4"), 12, {1, 1, 1, 3});
  CHECK(big > mpz_class("1000000000000000000000"));
}

TEST_CASE("conjugation classes") {
  const FiniteGroup s3 = FiniteGroup::builtin("S3");
  const auto tuples = enumerate_flat(s3, 1);
  const auto classes = conjugation_classes(s3, tuples);
  CHECK(classes.size() == 8);
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.orbit_size;
    CHECK(canonical_form(s3, c.representative) == c.representative);
  }
  CHECK(total == tuples.size());
  CHECK(conjugation_classes(FiniteGroup::builtin("Z2"), enumerate_flat(FiniteGroup::builtin("Z2"), 1)).size() == 4);
  const FiniteGroup trivial = FiniteGroup::builtin("trivial");
  for (int genus = 1; genus <= 3; ++genus)
    CHECK(conjugation_classes(trivial, enumerate_flat(trivial, genus)).size() == 1);
  CHECK_THROWS_AS(conjugation_classes(s3, {{1, 2}}), Error);

  const std::map<std::string, std::size_t> double_ranks{{"D4", 22}, {"Q8", 22}, {"A4", 14}, {"Z2xZ2", 16}};
  for (const auto& name : FiniteGroup::builtin_names()) {
    CAPTURE(name);
    const FiniteGroup g = FiniteGroup::builtin(name);
    const std::size_t n = conjugation_classes(g, enumerate_flat(g, 1)).size();
    CHECK(n == centralizer_pair_count(g));
    if (g.is_abelian()) CHECK(n == static_cast<std::size_t>(g.order() * g.order()));
    if (double_ranks.count(name)) CHECK(n == double_ranks.at(name));
  }
}

TEST_CASE("torus action on Z2") {
  const TorusAction act = torus_sl2z_action(FiniteGroup::builtin("Z2"));
  REQUIRE(act.classes.size() == 4);
  auto idx = [&](int a, int b) {
    for (std::size_t i = 0; i < act.classes.size(); ++i)
      if (act.classes[i].representative == FlatTuple{a, b}) return i;
    FAIL("missing class");
    return std::size_t{0};
  };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(act.s[idx(a, b)] == idx(b, a));
  CHECK(act.t[idx(0, 0)] == idx(0, 0));
  CHECK(act.t[idx(0, 1)] == idx(0, 1));
  CHECK(act.t[idx(1, 0)] == idx(1, 1));
  CHECK(act.t[idx(1, 1)] == idx(1, 0));
  CHECK(act.relations_hold());
}

TEST_CASE("torus action relations") {
  for (const auto& name : FiniteGroup::builtin_names()) {
    CAPTURE(name);
    const TorusAction act = torus_sl2z_action(FiniteGroup::builtin(name));
    for (const auto& r : act.relations) {
      CAPTURE(r.name);
      CHECK(r.holds);
    }
    for (const auto& c : check_relations(act.to_mcg_rep(), 1e-15)) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
  const TorusAction s3 = torus_sl2z_action(FiniteGroup::builtin("S3"));
  CHECK(s3.classes.size() == 8);
  const TorusAction trivial = torus_sl2z_action(FiniteGroup::builtin("trivial"));
  CHECK(trivial.s == Permutation{0});
  CHECK(trivial.t == Permutation{0});
}

TEST_CASE("exponent-matrix action") {
  const SL2Matrix s{0, -1, 1, 0}, t{1, 1, 0, 1}, id{1, 0, 0, 1};
  auto mul = [](const SL2Matrix& x, const SL2Matrix& y) {
    return SL2Matrix{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                     x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  };
  const std::vector<SL2Matrix> samples{s, t, mul(s, t), mul(t, mul(t, s)), {2, 1, 1, 1}, {1, -3, 0, 1}};
  for (const auto& name : {"S3", "D4", "Q8", "A4"}) {
    CAPTURE(name);
    const FiniteGroup g = FiniteGroup::builtin(name);
    for (const auto& pair : enumerate_flat(g, 1)) {
      const int a = pair[0], b = pair[1];
      CHECK(exponent_action(g, s, a, b) == std::array<int, 2>{b, g.inv(a)});
      CHECK(exponent_action(g, t, a, b) == std::array<int, 2>{a, g.mul(a, b)});
      CHECK(exponent_action(g, id, a, b) == std::array<int, 2>{a, b});
      const SL2Matrix st = mul(s, t);
      CHECK(exponent_action(g, mul(st, mul(st, st)), a, b) == exponent_action(g, mul(s, s), a, b));
      for (const auto& m : samples) {
        for (const auto& n : samples) {
          const auto first = exponent_action(g, m, a, b);
          CHECK(exponent_action(g, n, first[0], first[1]) == exponent_action(g, mul(m, n), a, b));
        }
      }
    }
    CHECK_THROWS_AS(exponent_action(g, {2, 0, 0, 1}, g.identity(), g.identity()), Error);
  }
  const FiniteGroup s3 = FiniteGroup::builtin("S3");
  CHECK_THROWS_AS(exponent_action(s3, s, 1, 2), Error);
}
