#include "rcft/orbifold.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "rcft/error.hpp"

namespace rcft {

namespace {

using Perm = std::vector<int>;

std::vector<std::vector<int>> table_from_permutations(std::vector<Perm> elems) {
  std::sort(elems.begin(), elems.end());
  const std::size_t m = elems.size();
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < m; ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // Apply j first, then i.
      Perm c(elems[i].size());
      for (std::size_t x = 0; x < c.size(); ++x)
        c[x] = elems[i][static_cast<std::size_t>(elems[j][x])];
      table[i][j] = index.at(c);
    }
  }
  return table;
}

std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& g : gens) {
        Perm c(n);
        for (std::size_t x = 0; x < n; ++x) c[x] = g[static_cast<std::size_t>(p[x])];
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return t;
}

// Elements +-1, +-i, +-j, +-k as 4*sign + unit, units ordered 1, i, j, k.
std::vector<std::vector<int>> quaternion_table() {
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int s = (a / 4 + b / 4 + sign[ua][ub]) % 2;
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 4 * s + unit[ua][ub];
    }
  }
  return t;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), order_(static_cast<int>(table.size())) {
  const int m = order_;
  if (m == 0) fail(ErrorCode::Validation, "group table is empty");
  if (m > 4096) fail(ErrorCode::Limit, "group order above 4096");
  table_.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != m) fail(ErrorCode::Validation, "group table is not square");
    for (int v : row) {
      if (v < 0 || v >= m) fail(ErrorCode::Validation, "group table entry out of range");
      table_.push_back(v);
    }
  }
  identity_ = -1;
  for (int e = 0; e < m && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) fail(ErrorCode::Validation, "group table has no identity");
  inverse_.assign(static_cast<std::size_t>(m), -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      fail(ErrorCode::Validation, "element " + std::to_string(a) + " has no inverse");
  }
  auto check = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      fail(ErrorCode::Validation, "group table is not associative at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (m <= 24) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int n = 0; n < 20000; ++n) check(pick(rng), pick(rng), pick(rng));
  }
}

std::vector<std::string> FiniteGroup::builtin_names() {
  return {"trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "A4"};
}

FiniteGroup FiniteGroup::builtin(const std::string& name) {
  std::vector<std::vector<int>> table;
  std::vector<int> degrees;
  if (name == "trivial") {
    table = cyclic_table(1);
    degrees = {1};
  } else if (name == "Z2" || name == "Z3" || name == "Z4") {
    const int n = name[1] - '0';
    table = cyclic_table(n);
    degrees.assign(static_cast<std::size_t>(n), 1);
  } else if (name == "Z2xZ2") {
    table.assign(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
    degrees = {1, 1, 1, 1};
  } else if (name == "S3") {
    table = table_from_permutations(closure({{1, 0, 2}, {1, 2, 0}}, 3));
    degrees = {1, 1, 2};
  } else if (name == "D4") {
    table = table_from_permutations(closure({{1, 2, 3, 0}, {3, 2, 1, 0}}, 4));
    degrees = {1, 1, 1, 1, 2};
  } else if (name == "Q8") {
    table = quaternion_table();
    degrees = {1, 1, 1, 1, 2};
  } else if (name == "A4") {
    table = table_from_permutations(closure({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4));
    degrees = {1, 1, 1, 3};
  } else {
    fail(ErrorCode::InvalidArgument, "unknown group '" + name + "'");
  }
  FiniteGroup g(name, std::move(table));
  g.degrees_ = std::move(degrees);
  return g;
}

FiniteGroup FiniteGroup::parse(const std::string& name, const std::string& text) {
  std::istringstream in(text);
  long long m = 0;
  if (!(in >> m) || m <= 0) fail(ErrorCode::Validation, "group file: expected a positive order");
  if (m > 4096) fail(ErrorCode::Limit, "group order above 4096");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (auto& row : table)
    for (int& v : row)
      if (!(in >> v)) fail(ErrorCode::Validation, "group file: table truncated");
  std::string extra;
  if (in >> extra) fail(ErrorCode::Validation, "group file: trailing data");
  return FiniteGroup(name, std::move(table));
}

FiniteGroup FiniteGroup::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::Io, "cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse(path, buf.str());
}

int FiniteGroup::pow(int a, long long n) const {
  int base = n < 0 ? inv(a) : a;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
  int out = identity_;
  while (e) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t FiniteGroup::conjugacy_class_count() const {
  std::vector<bool> seen(static_cast<std::size_t>(order_), false);
  std::size_t count = 0;
  for (int a = 0; a < order_; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    ++count;
    for (int h = 0; h < order_; ++h) seen[static_cast<std::size_t>(conjugate(a, h))] = true;
  }
  return count;
}

bool is_flat(const FiniteGroup& group, const FlatTuple& tuple) {
  if (tuple.size() % 2 != 0) return false;
  int prod = group.identity();
  for (std::size_t i = 0; i < tuple.size(); i += 2) {
    if (tuple[i] < 0 || tuple[i] >= group.order() || tuple[i + 1] < 0 || tuple[i + 1] >= group.order())
      return false;
    prod = group.mul(prod, group.commutator(tuple[i], tuple[i + 1]));
  }
  return prod == group.identity();
}

std::vector<FlatTuple> enumerate_flat(const FiniteGroup& group, int genus, double budget) {
  if (genus < 1) fail(ErrorCode::InvalidArgument, "genus must be positive");
  const int m = group.order();
  const double size = std::pow(static_cast<double>(m), 2.0 * genus);
  if (size > budget) {
    std::ostringstream os;
    os.precision(2);
    os << "enumeration needs " << std::scientific << size << " tuples, above the budget of " << budget;
    fail(ErrorCode::Limit, os.str());
  }
  // Pairs grouped by the value of their commutator.
  std::vector<std::vector<std::array<int, 2>>> by_comm(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) by_comm[static_cast<std::size_t>(group.commutator(a, b))].push_back({a, b});

  std::vector<FlatTuple> out;
  FlatTuple cur(static_cast<std::size_t>(2 * genus));
  auto rec = [&](auto&& self, int pair, int prefix) -> void {
    if (pair == genus - 1) {
      for (const auto& ab : by_comm[static_cast<std::size_t>(group.inv(prefix))]) {
        cur[static_cast<std::size_t>(2 * pair)] = ab[0];
        cur[static_cast<std::size_t>(2 * pair + 1)] = ab[1];
        out.push_back(cur);
      }
      return;
    }
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        cur[static_cast<std::size_t>(2 * pair)] = a;
        cur[static_cast<std::size_t>(2 * pair + 1)] = b;
        self(self, pair + 1, group.mul(prefix, group.commutator(a, b)));
      }
    }
  };
  rec(rec, 0, group.identity());
  return out;
}

FlatTuple canonical_form(const FiniteGroup& group, const FlatTuple& tuple) {
  FlatTuple best = tuple, cur(tuple.size());
  for (int h = 0; h < group.order(); ++h) {
    for (std::size_t i = 0; i < tuple.size(); ++i) cur[i] = group.conjugate(tuple[i], h);
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<FlatClass> conjugation_classes(const FiniteGroup& group, const std::vector<FlatTuple>& tuples) {
  std::map<FlatTuple, std::size_t> orbits;
  for (const FlatTuple& t : tuples) {
    if (!is_flat(group, t)) fail(ErrorCode::InvalidArgument, "tuple is not flat");
    ++orbits[canonical_form(group, t)];
  }
  std::vector<FlatClass> out;
  out.reserve(orbits.size());
  for (auto& [rep, count] : orbits) out.push_back({rep, count});
  return out;
}

mpz_class mednykh_count(const FiniteGroup& group, int genus, const std::vector<int>& degrees) {
  if (genus < 1) fail(ErrorCode::InvalidArgument, "genus must be positive");
  mpz_class sum_sq = 0;
  for (int d : degrees) {
    if (d <= 0) fail(ErrorCode::Validation, "invalid degree list: degrees must be positive");
    sum_sq += mpz_class(d) * d;
  }
  if (degrees.empty() || sum_sq != group.order())
    fail(ErrorCode::Validation, "invalid degree list: squares do not sum to |G|");
  mpq_class total = 0;
  for (int d : degrees) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), mpz_class(d).get_mpz_t(), static_cast<unsigned long>(2 * genus - 2));
    total += mpq_class(1, power);
  }
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), mpz_class(group.order()).get_mpz_t(), static_cast<unsigned long>(2 * genus - 1));
  total *= scale;
  total.canonicalize();
  if (total.get_den() != 1) fail(ErrorCode::Validation, "invalid degree list: non-integral count");
  return total.get_num();
}

std::size_t centralizer_pair_count(const FiniteGroup& group) {
  const int m = group.order();
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  std::size_t total = 0;
  for (int x = 0; x < m; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    for (int h = 0; h < m; ++h) seen[static_cast<std::size_t>(group.conjugate(x, h))] = true;
    std::vector<int> cent;
    for (int h = 0; h < m; ++h)
      if (group.mul(x, h) == group.mul(h, x)) cent.push_back(h);
    // Conjugacy classes of the centralizer, computed inside it.
    std::set<int> done;
    for (int a : cent) {
      if (done.count(a)) continue;
      ++total;
      for (int h : cent) done.insert(group.conjugate(a, h));
    }
  }
  return total;
}

std::array<int, 2> exponent_action(const FiniteGroup& group, const SL2Matrix& mat, int a, int b) {
  if (group.mul(a, b) != group.mul(b, a)) fail(ErrorCode::InvalidArgument, "pair does not commute");
  const auto [p, q, r, s] = mat;
  if (p * s - q * r != 1) fail(ErrorCode::InvalidArgument, "matrix is not in SL(2,Z)");
  return {group.mul(group.pow(a, p), group.pow(b, r)), group.mul(group.pow(a, q), group.pow(b, s))};
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

bool TorusAction::relations_hold() const {
  return std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.holds; });
}

MCGRep TorusAction::to_mcg_rep() const {
  const auto n = static_cast<Eigen::Index>(classes.size());
  auto matrix = [n](const Permutation& p) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(static_cast<Eigen::Index>(p[static_cast<std::size_t>(i)]), i) = 1.0;
    return m;
  };
  MCGRep rep;
  rep.name = "torus permutation action";
  rep.generator_names = {"S", "T"};
  rep.generators = {matrix(s), matrix(t)};
  const Complex one(1.0, 0.0);
  rep.relations = {
      {"S^4=I", {1, 1, 1, 1}, {}, one},
      {"(ST)^3=S^2", {1, 2, 1, 2, 1, 2}, {1, 1}, one},
      {"S^2T=TS^2", {1, 1, 2}, {2, 1, 1}, one},
  };
  return rep;
}

TorusAction torus_sl2z_action(const FiniteGroup& group) {
  TorusAction act;
  const std::vector<FlatTuple> tuples = enumerate_flat(group, 1);
  act.classes = conjugation_classes(group, tuples);
  std::map<FlatTuple, std::size_t> index;
  for (std::size_t i = 0; i < act.classes.size(); ++i) index[act.classes[i].representative] = i;

  auto descend = [&](auto map) {
    Permutation perm(act.classes.size());
    std::vector<bool> set(act.classes.size(), false);
    for (const FlatTuple& t : tuples) {
      const std::size_t from = index.at(canonical_form(group, t));
      const FlatTuple image = map(t[0], t[1]);
      const auto it = index.find(canonical_form(group, image));
      if (it == index.end()) fail(ErrorCode::Internal, "group-table corruption: image is not flat");
      if (set[from] && perm[from] != it->second)
        fail(ErrorCode::Internal, "group-table corruption: action does not descend to classes");
      perm[from] = it->second;
      set[from] = true;
    }
    std::vector<bool> hit(perm.size(), false);
    for (std::size_t v : perm) hit[v] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      fail(ErrorCode::Internal, "group-table corruption: action is not a permutation");
    return perm;
  };
  act.s = descend([&](int a, int b) { return FlatTuple{b, group.inv(a)}; });
  act.t = descend([&](int a, int b) { return FlatTuple{a, group.mul(a, b)}; });
  act.inversion = descend([&](int a, int b) { return FlatTuple{group.inv(a), group.inv(b)}; });

  Permutation id(act.classes.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  const Permutation s2 = compose(act.s, act.s);
  const Permutation st = compose(act.s, act.t);
  act.relations = {
      {"S^4=id", compose(s2, s2) == id},
      {"(ST)^3=S^2", compose(st, compose(st, st)) == s2},
      {"S^2=(a,b)->(a^-1,b^-1)", s2 == act.inversion},
      {"S^2T=TS^2", compose(s2, act.t) == compose(act.t, s2)},
  };
  return act;
}

}  // namespace rcft
