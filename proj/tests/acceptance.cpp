// Acceptance checks, one line per criterion. With no arguments all criteria run;
// "--criterion N" runs one. The exit status is nonzero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "rcft/blocks.hpp"
#include "rcft/characters.hpp"
#include "rcft/fusion.hpp"
#include "rcft/invariants.hpp"
#include "rcft/kz.hpp"
#include "rcft/mcg_reps.hpp"
#include "rcft/modular_data.hpp"
#include "rcft/orbifold.hpp"
#include "rcft/series.hpp"

using namespace rcft;

namespace {

constexpr double kPi = std::numbers::pi;

class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool pass() const { return pass_; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    for (const auto& n : notes_) s += (s.empty() ? "" : "; ") + n;
    return s;
  }

 private:
  bool pass_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void time_limit(Outcome& out, double elapsed, double limit, const std::string& what) {
  out.require(elapsed < limit, what + " took " + sci(elapsed) + " s, limit " + sci(limit) + " s");
}

double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// ---- 1 ----
void criterion_1(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const ValidationReport report = validate_modular_data(ising_modular_data(), 1e-9);
  const double elapsed = seconds_since(t0);
  out.require(report.pass(), "validation failed");
  out.require(report.max_residual() < 1e-9, "max residual " + sci(report.max_residual()));
  time_limit(out, elapsed, 0.1, "validation");
  out.note("max residual " + sci(report.max_residual()));
}

// ---- 2 ----
// SU(2)_k selection rule in terms of doubled spins a, b, c.
unsigned su2_rule(int k, int a, int b, int c) {
  return (std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b) && (a + b + c) % 2 == 0) ? 1u : 0u;
}

void criterion_2(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const ModularData ising = ising_modular_data();
  const FusionTensor n = fusion_tensor(ising);
  const std::size_t v = ising.index_of("𝒱"), e = ising.index_of("ε"), s = ising.index_of("σ");
  auto product = [&](std::size_t a, std::size_t b) {
    return std::vector<unsigned>{n(a, b, v), n(a, b, e), n(a, b, s)};
  };
  out.require(product(s, s) == std::vector<unsigned>{1, 1, 0}, "σ×σ ≠ 𝒱+ε");
  out.require(product(s, e) == std::vector<unsigned>{0, 0, 1}, "σ×ε ≠ σ");
  out.require(product(e, e) == std::vector<unsigned>{1, 0, 0}, "ε×ε ≠ 𝒱");
  std::size_t compared = 0;
  for (int k = 1; k <= 6; ++k) {
    const FusionTensor t = fusion_tensor(su2_modular_data(k));
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c, ++compared)
          if (t(a, b, c) != su2_rule(k, a, b, c))
            out.require(false, "SU(2)_" + std::to_string(k) + " N_{" + std::to_string(a) + "," +
                                   std::to_string(b) + "}^" + std::to_string(c) + " mismatch");
  }
  time_limit(out, seconds_since(t0), 1.0, "fusion");
  out.note(std::to_string(compared) + " SU(2) coefficients compared");
}

// ---- 3 ----
void criterion_3(Outcome& out) {
  const ModularData ising = ising_modular_data();
  const std::size_t s = ising.index_of("σ"), v = ising.index_of("𝒱");
  const auto four = block_dimension(ising, {0, {s, s, s, s}});
  const auto torus = block_dimension(ising, {1, {v}});
  const auto genus2 = block_dimension(ising, {2, {}});
  out.require(four == 2, "dim F(0,4)σσσσ = " + std::to_string(four));
  out.require(torus == 3, "dim F(1,1)𝒱 = " + std::to_string(torus));
  out.require(genus2 == 10, "dim F(2,0) = " + std::to_string(genus2));
  out.note("dims " + std::to_string(four) + ", " + std::to_string(torus) + ", " + std::to_string(genus2));
}

// ---- 4 ----
struct Printed {
  const char* name;
  Rational lead;
  Rational step;
  std::vector<long> coefficients;
};

void compare_printed(Outcome& out, const PuiseuxSeries& series, const Printed& p) {
  for (std::size_t n = 0; n < p.coefficients.size(); ++n) {
    const Rational exponent = p.lead + p.step * static_cast<long>(n);
    const mpq_class actual = series.coefficient(exponent);
    if (actual != p.coefficients[n]) {
      std::ostringstream os;
      os << p.name << " at q^" << format_rational(exponent) << ": printed " << p.coefficients[n]
         << ", computed " << actual.get_str();
      out.require(false, os.str());
    }
  }
}

void criterion_4(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto chars = ising_characters(Rational(50));
  const Rational one(1);
  // Printed through q^7 relative to the leading power.
  compare_printed(out, chars[0], {"χ_𝒱", Rational(-1, 48), one, {1, 0, 1, 1, 2, 2, 3, 3}});
  compare_printed(out, chars[1], {"χ_ε", Rational(23, 48), one, {1, 1, 1, 1, 2, 2, 3, 3}});
  compare_printed(out, chars[2], {"χ_σ", Rational(1, 24), one, {1, 1, 1, 2, 2, 3, 4, 5}});
  const auto [f1, f2] = lift_to_tau(Rational(50));
  // Printed through q^3.
  compare_printed(out, f1, {"F1", Rational(-1, 16), Rational(1, 2), {1, 1, 3, 4, 5, 8, 11}});
  compare_printed(out, f2, {"F2", Rational(3, 16), Rational(1, 2), {2, 2, 2, 4, 8, 10, 12}});
  time_limit(out, seconds_since(t0), 5.0, "characters and lift at cutoff 50");
}

// ---- 5 ----
void criterion_5(Outcome& out) {
  const Complex tau_t(0.3, 0.8), tau_s(0.0, 1.0);
  double worst_t = 0, worst_s = 0;
  auto run = [&](const std::string& name, const ModularData& md, const std::vector<PuiseuxSeries>& chars) {
    const double rt = check_modular_transform(md, chars, tau_t, Transform::T, 1e-10);
    const double rs = check_modular_transform(md, chars, tau_s, Transform::S, 1e-6);
    out.require(rt < 1e-10, name + " T residual " + sci(rt));
    out.require(rs < 1e-6, name + " S residual " + sci(rs));
    worst_t = std::max(worst_t, rt);
    worst_s = std::max(worst_s, rs);
  };
  run("Ising", ising_modular_data(), ising_characters(Rational(50)));
  for (int k = 1; k <= 4; ++k)
    run("SU(2)_" + std::to_string(k), su2_modular_data(k), su2_characters(k, Rational(50)));
  out.note("worst T " + sci(worst_t) + ", worst S " + sci(worst_s));
}

// ---- 6 ----
void criterion_6(Outcome& out) {
  const Complex phase = std::polar(1.0, -kPi / 4);
  struct Loop {
    std::string name;
    PathSpec path;
    Eigen::Matrix2cd expected;
    double tol;
  };
  Eigen::Matrix2cd anti = Eigen::Matrix2cd::Zero();
  anti(0, 1) = anti(1, 0) = phase;
  const std::vector<Loop> loops{
      {"w=0", PathSpec::circle(0.0, 0.1), phase * Eigen::Matrix2cd::Identity(), 1e-6},
      {"w=1", PathSpec::circle(1.0, 0.1), anti, 1e-6},
      {"contractible", PathSpec::circle(Complex(0.5, 0.4), 0.2), Eigen::Matrix2cd::Identity(), 1e-10},
  };
  for (const Loop& l : loops) {
    const auto t0 = std::chrono::steady_clock::now();
    const MonodromyResult r = continue_along(l.path);
    const double elapsed = seconds_since(t0);
    const double d = max_diff(r.matrix, l.expected);
    out.require(r.closed, l.name + " loop not closed");
    out.require(d < l.tol, l.name + " deviation " + sci(d) + " (tol " + sci(l.tol) + ")");
    time_limit(out, elapsed, 2.0, l.name + " loop");
    if (d >= l.tol) {
      std::ostringstream os;
      os.precision(6);
      os << l.name << " computed diag " << r.matrix(0, 0) << ", " << r.matrix(1, 1);
      out.note(os.str());
    }
  }
}

// ---- 7 ----
void criterion_7(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ising = enumerate_invariants(ising_modular_data());
  out.require(ising.size() == 1, "Ising: " + std::to_string(ising.size()) + " invariants");
  if (ising.size() == 1)
    out.require(ising[0].z == Eigen::MatrixXi::Identity(3, 3), "Ising invariant is not diagonal");
  const int expected[] = {0, 1, 1, 1, 2};
  std::string counts;
  for (int k = 1; k <= 4; ++k) {
    const auto found = enumerate_invariants(su2_modular_data(k));
    out.require(static_cast<int>(found.size()) == expected[k],
                "SU(2)_" + std::to_string(k) + ": " + std::to_string(found.size()) + " invariants");
    counts += (counts.empty() ? "" : ",") + std::to_string(found.size());
  }
  time_limit(out, seconds_since(t0), 30.0, "invariant search");
  out.note("SU(2)_1..4 counts " + counts);
}

// ---- 8 ----
void criterion_8(Outcome& out) {
  const MCGRep rep = ising_braid_rep();
  const auto checks = check_relations(rep, 1e-9);
  for (const auto& c : checks) {
    if (c.exact_residual) {
      out.require(*c.exact_residual < 1e-12, c.name + " residual " + sci(*c.exact_residual));
    } else {
      out.require(c.projective_residual < 1e-9, c.name + " projective residual " + sci(c.projective_residual));
      out.require(c.unimodular_residual < 1e-9, c.name + " scalar modulus off by " + sci(c.unimodular_residual));
    }
  }
  const DualityData dd = ising_duality_data();
  const Eigen::Matrix2cd d = dd.d, b = dd.b;
  const double yb = max_diff(d * b * d, b * d * b);
  out.require(yb < 1e-9, "Yang-Baxter residual " + sci(yb));
  const ClosureResult closure = projective_image_closure(rep, 100000);
  out.require(closure.finite, "closure did not terminate");
  out.require(closure.elements == 24, "closure order " + std::to_string(closure.elements) + ", frozen 24");
  out.note("Yang-Baxter " + sci(yb) + ", closure order " + std::to_string(closure.elements));
}

// ---- 9 ----
void criterion_9(Outcome& out) {
  for (int k : {2, 3, 6}) {
    const auto t0 = std::chrono::steady_clock::now();
    const DrinfeldKohnoReport r = drinfeld_kohno_check(k);
    const double elapsed = seconds_since(t0);
    const std::string tag = "k=" + std::to_string(k);
    if (k == 2) {
      const double rb = r.braiding_residual.value_or(1.0);
      out.require(rb < 1e-6, tag + " eig(B) residual " + sci(rb));
    }
    const std::vector<Complex> rule{std::polar(1.0, 2 * kPi * 0.25 / (k + 2)),
                                    std::polar(1.0, 2 * kPi * -0.75 / (k + 2))};
    const double re = match_eigenvalues(r.kz_eigenvalues, rule);
    out.require(re < 1e-6, tag + " exponent rule residual " + sci(re));
    out.require(r.homotopy_spread < 1e-7, tag + " homotopy spread " + sci(r.homotopy_spread));
    time_limit(out, elapsed, 10.0, tag);
    out.note(tag + " residual " + sci(re) + ", spread " + sci(r.homotopy_spread));
  }
}

// ---- 10 ----
void criterion_10(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const FiniteGroup s3 = FiniteGroup::builtin("S3");
  const auto classes = conjugation_classes(s3, enumerate_flat(s3, 1));
  out.require(classes.size() == 8, "S3 torus classes " + std::to_string(classes.size()));
  out.require(enumerate_flat(s3, 1).size() == 18, "S3 genus-1 count");
  out.require(enumerate_flat(s3, 2).size() == 486, "S3 genus-2 count");
  for (const auto& name : FiniteGroup::builtin_names()) {
    const FiniteGroup g = FiniteGroup::builtin(name);
    for (int genus = 1; genus <= 2; ++genus) {
      const auto count = enumerate_flat(g, genus).size();
      const mpz_class oracle = mednykh_count(g, genus, g.character_degrees());
      out.require(mpz_class(count) == oracle, name + " genus " + std::to_string(genus) + ": " +
                                                  std::to_string(count) + " vs " + oracle.get_str());
    }
    const TorusAction act = torus_sl2z_action(g);
    for (const auto& r : act.relations)
      if (r.name == "S^4=id" || r.name == "(ST)^3=S^2") out.require(r.holds, name + " " + r.name);
  }
  time_limit(out, seconds_since(t0), 10.0, "orbifold");
}

const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> kCriteria{
    {"Ising modular data validation", criterion_1},
    {"Verlinde fusion", criterion_2},
    {"block dimensions", criterion_3},
    {"character and lift coefficients", criterion_4},
    {"modular transform checks", criterion_5},
    {"block monodromy", criterion_6},
    {"modular invariant search", criterion_7},
    {"braid representation", criterion_8},
    {"KZ / Drinfeld-Kohno", criterion_9},
    {"orbifold counts and torus action", criterion_10},
};

bool run(std::size_t i) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    kCriteria[i].second(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed = seconds_since(t0);
  std::printf("criterion %zu [%s]: %s (%.3f s) %s\n", i + 1, kCriteria[i].first, out.pass() ? "PASS" : "FAIL",
              elapsed, out.summary().c_str());
  return out.pass();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    const long n = std::strtol(argv[2], nullptr, 10);
    if (n < 1 || n > static_cast<long>(kCriteria.size())) {
      std::fprintf(stderr, "criterion must be 1..%zu\n", kCriteria.size());
      return 2;
    }
    return run(static_cast<std::size_t>(n - 1)) ? 0 : 1;
  }
  if (argc != 1) {
    std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) all = run(i) && all;
  return all ? 0 : 1;
}
