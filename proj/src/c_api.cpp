#include "rcft/rcft.h"

#include <cmath>
#include <cstring>
#include <numbers>
#include <optional>
#include <regex>
#include <string>

#include <json.hpp>

#include "rcft/blocks.hpp"
#include "rcft/characters.hpp"
#include "rcft/error.hpp"
#include "rcft/fusion.hpp"
#include "rcft/invariants.hpp"
#include "rcft/io.hpp"
#include "rcft/kz.hpp"
#include "rcft/mcg_reps.hpp"
#include "rcft/modular_data.hpp"
#include "rcft/orbifold.hpp"
#include "rcft/series.hpp"

using nlohmann::json;

struct rcft_modular_data {
  rcft::ModularData md;
  // Set for built-in data, which has known characters.
  std::optional<int> su2_level;
  bool ising = false;
};

struct rcft_series_list {
  std::vector<std::string> names;
  std::vector<rcft::PuiseuxSeries> series;
};

struct rcft_invariant_list {
  std::vector<rcft::InvariantMatrix> items;
};

struct rcft_group {
  rcft::FiniteGroup group;
};

namespace {

using rcft::Complex;
using rcft::Error;
using rcft::ErrorCode;

thread_local std::string last_error;

rcft_status record(rcft_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
rcft_status guard(F&& f) {
  try {
    f();
    return RCFT_OK;
  } catch (const Error& e) {
    return record(static_cast<rcft_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return record(RCFT_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return record(RCFT_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) rcft::fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  require(out, "output");
  *out = dup_string(s);
}

void put(char** out, const json& j) { put(out, j.dump()); }

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json relations_json(const std::vector<rcft::RelationCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json j{{"name", c.name},
           {"scalar", complex_json(c.scalar)},
           {"projective_residual", c.projective_residual},
           {"unimodular_residual", c.unimodular_residual},
           {"pass", c.pass}};
    if (c.exact_residual) j["residual"] = *c.exact_residual;
    arr.push_back(j);
  }
  return arr;
}

rcft::Rational cutoff_or_default(const char* cutoff) {
  return cutoff == nullptr ? rcft::kDefaultCutoff : rcft::parse_rational(cutoff);
}

const rcft_series_list& checked(const rcft_series_list* list, std::size_t i) {
  require(list, "series list");
  if (i >= list->series.size()) rcft::fail(ErrorCode::InvalidArgument, "series index out of range");
  return *list;
}

void fill_monodromy(const rcft::MonodromyResult& r, rcft_monodromy* out) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      out->matrix[2 * (2 * a + b)] = r.matrix(a, b).real();
      out->matrix[2 * (2 * a + b) + 1] = r.matrix(a, b).imag();
    }
  out->closed = r.closed ? 1 : 0;
  out->steps = r.steps;
  out->det_modulus = std::abs(r.matrix.determinant());
  out->start[0] = r.start.w.real();
  out->start[1] = r.start.w.imag();
  out->end[0] = r.end.w.real();
  out->end[1] = r.end.w.imag();
}

struct NamedMove {
  bool swap = false;
  std::size_t i = 0;
  std::size_t j = 0;
};

std::optional<NamedMove> parse_move(const std::string& name) {
  static const std::regex re("^(swap|loop)([1-9])([1-9])$");
  std::smatch m;
  if (!std::regex_match(name, m, re)) return std::nullopt;
  NamedMove mv{m[1] == "swap", static_cast<std::size_t>(std::stoi(m[2])) - 1,
               static_cast<std::size_t>(std::stoi(m[3])) - 1};
  if (mv.i == mv.j) rcft::fail(ErrorCode::InvalidArgument, "loop legs must differ");
  return mv;
}

rcft::SpinSystem spin_system(int level, const int* twice_spins, std::size_t n_legs) {
  if (twice_spins == nullptr) return rcft::SpinSystem::four_doublets(level);
  return rcft::SpinSystem(level, std::vector<int>(twice_spins, twice_spins + n_legs));
}

rcft::ConfigPath kz_path(const rcft::SpinSystem& sys, const char* loop, const char* path_text) {
  if (loop != nullptr) {
    const auto mv = parse_move(loop);
    if (!mv) rcft::fail(ErrorCode::InvalidArgument, std::string("unknown loop '") + loop + "'");
    if (mv->i >= sys.legs() || mv->j >= sys.legs())
      rcft::fail(ErrorCode::InvalidArgument, std::string("loop '") + loop + "' refers to a missing leg");
    const auto base = rcft::ConfigPath::default_base(sys.legs());
    return mv->swap ? rcft::ConfigPath::swap(base, mv->i, mv->j)
                    : rcft::ConfigPath::loop(base, mv->i, mv->j);
  }
  require(path_text, "loop and path text");
  return rcft::parse_config_path(path_text);
}

}  // namespace

extern "C" {

const char* rcft_version(void) { return "1.0.0"; }

const char* rcft_last_error(void) { return last_error.c_str(); }

const char* rcft_status_name(rcft_status status) {
  switch (status) {
    case RCFT_OK: return "ok";
    case RCFT_INVALID_ARGUMENT: return "invalid argument";
    case RCFT_VALIDATION: return "validation failure";
    case RCFT_NON_INTEGRAL: return "non-integral result";
    case RCFT_DOMAIN: return "domain error";
    case RCFT_LIMIT: return "limit exceeded";
    case RCFT_IO: return "i/o error";
    case RCFT_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void rcft_string_free(char* s) { std::free(s); }

rcft_status rcft_md_resolve(const char* spec, double tol, rcft_modular_data** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "output");
    const std::string s(spec);
    auto* h = new rcft_modular_data{rcft::resolve_modular_data(s, tol), std::nullopt, s == "ising"};
    if (s.rfind("su2:", 0) == 0) h->su2_level = std::stoi(s.substr(4));
    *out = h;
  });
}

rcft_status rcft_md_resolve_unvalidated(const char* spec, rcft_modular_data** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "output");
    const std::string s(spec);
    if (s == "ising" || s.rfind("su2:", 0) == 0) {
      auto* h = new rcft_modular_data{rcft::resolve_modular_data(s), std::nullopt, s == "ising"};
      if (s != "ising") h->su2_level = std::stoi(s.substr(4));
      *out = h;
      return;
    }
    *out = new rcft_modular_data{rcft::parse_modular_data_unvalidated(rcft::read_text_file(s)),
                                 std::nullopt, false};
  });
}

rcft_status rcft_md_parse_json(const char* text, double tol, rcft_modular_data** out) {
  return guard([&] {
    require(text, "text");
    require(out, "output");
    *out = new rcft_modular_data{rcft::parse_modular_data(text, tol), std::nullopt, false};
  });
}

void rcft_md_free(rcft_modular_data* md) { delete md; }

size_t rcft_md_size(const rcft_modular_data* md) { return md == nullptr ? 0 : md->md.size(); }

size_t rcft_md_vacuum(const rcft_modular_data* md) { return md == nullptr ? 0 : md->md.vacuum(); }

const char* rcft_md_label(const rcft_modular_data* md, size_t i) {
  if (md == nullptr || i >= md->md.size()) return nullptr;
  return md->md.label(i).name.c_str();
}

rcft_status rcft_md_find_label(const rcft_modular_data* md, const char* name, size_t* index) {
  return guard([&] {
    require(md, "modular data");
    require(name, "name");
    require(index, "output");
    *index = md->md.index_of(name);
  });
}

rcft_status rcft_md_s(const rcft_modular_data* md, size_t i, size_t j, double out[2]) {
  return guard([&] {
    require(md, "modular data");
    require(out, "output");
    if (i >= md->md.size() || j >= md->md.size()) rcft::fail(ErrorCode::InvalidArgument, "index out of range");
    const Complex z = md->md.s()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    out[0] = z.real();
    out[1] = z.imag();
  });
}

rcft_status rcft_md_t(const rcft_modular_data* md, size_t i, double out[2]) {
  return guard([&] {
    require(md, "modular data");
    require(out, "output");
    if (i >= md->md.size()) rcft::fail(ErrorCode::InvalidArgument, "index out of range");
    const Complex z = md->md.t()(static_cast<Eigen::Index>(i));
    out[0] = z.real();
    out[1] = z.imag();
  });
}

rcft_status rcft_md_central_charge(const rcft_modular_data* md, char** out) {
  return guard([&] {
    require(md, "modular data");
    put(out, rcft::format_rational(md->md.central_charge()));
  });
}

rcft_status rcft_md_weight(const rcft_modular_data* md, size_t i, char** out) {
  return guard([&] {
    require(md, "modular data");
    if (i >= md->md.size()) rcft::fail(ErrorCode::InvalidArgument, "index out of range");
    put(out, rcft::format_rational(md->md.weights()[i]));
  });
}

rcft_status rcft_md_to_json(const rcft_modular_data* md, char** out) {
  return guard([&] {
    require(md, "modular data");
    put(out, rcft::modular_data_to_json(md->md));
  });
}

rcft_status rcft_md_validate_report(const rcft_modular_data* md, double tol, char** out) {
  return guard([&] {
    require(md, "modular data");
    const rcft::ValidationReport report = rcft::validate_modular_data(md->md, tol);
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
    put(out, json{{"tolerance", tol}, {"pass", report.pass()}, {"checks", checks}});
  });
}

rcft_status rcft_sl2z_report(const rcft_modular_data* md, char** out) {
  bool pass = true;
  const rcft_status st = guard([&] {
    require(md, "modular data");
    require(out, "output");
    rcft::MCGRep rep;
    rep.name = "SL(2,Z)";
    rep.generator_names = {"S", "T"};
    rep.generators = {md->md.s(), md->md.t_matrix()};
    const Complex one(1.0, 0.0);
    rep.relations = {{"S^4=I", {1, 1, 1, 1}, {}, one},
                     {"(ST)^3=S^2", {1, 2, 1, 2, 1, 2}, {1, 1}, one},
                     {"S^2T=TS^2", {1, 1, 2}, {2, 1, 1}, one}};
    const auto checks = rcft::check_relations(rep, 1e-8);
    for (const auto& c : checks) pass = pass && c.pass;
    put(out, json{{"pass", pass},
                  {"unitarity_residual", rcft::unitarity_residual(rep)},
                  {"relations", relations_json(checks)}});
  });
  if (st == RCFT_OK && !pass) return record(RCFT_VALIDATION, "SL(2,Z) relation fails");
  return st;
}

rcft_status rcft_fusion_coefficient(const rcft_modular_data* md, size_t a, size_t b, size_t c,
                                    double tol, unsigned* out) {
  return guard([&] {
    require(md, "modular data");
    require(out, "output");
    *out = rcft::verlinde_coefficient(md->md, a, b, c, tol);
  });
}

rcft_status rcft_fusion_tensor(const rcft_modular_data* md, double tol, unsigned* out, size_t len) {
  return guard([&] {
    require(md, "modular data");
    require(out, "output");
    const std::size_t n = md->md.size();
    if (len < n * n * n) rcft::fail(ErrorCode::InvalidArgument, "output buffer too small");
    const rcft::FusionTensor t = rcft::fusion_tensor(md->md, tol);
    std::copy(t.data().begin(), t.data().end(), out);
  });
}

rcft_status rcft_block_dimension(const rcft_modular_data* md, size_t genus, const size_t* punctures,
                                 size_t n_punctures, double tol, uint64_t* out) {
  return guard([&] {
    require(md, "modular data");
    require(out, "output");
    if (n_punctures > 0) require(punctures, "punctures");
    rcft::SurfaceSpec surface{genus, std::vector<std::size_t>(punctures, punctures + n_punctures)};
    *out = rcft::block_dimension(md->md, surface, tol);
  });
}

rcft_status rcft_quantum_dimension(const rcft_modular_data* md, size_t a, double* out) {
  return guard([&] {
    require(md, "modular data");
    require(out, "output");
    *out = rcft::quantum_dimension(md->md, a);
  });
}

rcft_status rcft_characters(const rcft_modular_data* md, const char* cutoff, rcft_series_list** out) {
  return guard([&] {
    require(md, "modular data");
    require(out, "output");
    const rcft::Rational c = cutoff_or_default(cutoff);
    auto list = std::make_unique<rcft_series_list>();
    if (md->ising) {
      list->series = rcft::ising_characters(c);
    } else if (md->su2_level) {
      list->series = rcft::su2_characters(*md->su2_level, c);
    } else {
      rcft::fail(ErrorCode::InvalidArgument, "characters are available for built-in data only");
    }
    for (const auto& l : md->md.labels()) list->names.push_back(l.name);
    *out = list.release();
  });
}

rcft_status rcft_lift_to_tau(const char* cutoff, rcft_series_list** out) {
  return guard([&] {
    require(out, "output");
    auto list = std::make_unique<rcft_series_list>();
    const auto [f1, f2] = rcft::lift_to_tau(cutoff_or_default(cutoff));
    list->names = {"F1", "F2"};
    list->series = {f1, f2};
    *out = list.release();
  });
}

void rcft_series_free(rcft_series_list* list) { delete list; }

size_t rcft_series_count(const rcft_series_list* list) { return list == nullptr ? 0 : list->series.size(); }

const char* rcft_series_name(const rcft_series_list* list, size_t i) {
  if (list == nullptr || i >= list->names.size()) return nullptr;
  return list->names[i].c_str();
}

rcft_status rcft_series_listing(const rcft_series_list* list, size_t i, char** out) {
  return guard([&] { put(out, rcft::to_listing(checked(list, i).series[i])); });
}

rcft_status rcft_series_to_json(const rcft_series_list* list, char** out) {
  return guard([&] {
    require(list, "series list");
    json arr = json::array();
    for (std::size_t i = 0; i < list->series.size(); ++i) {
      const auto& s = list->series[i];
      json terms = json::array();
      for (const auto& [e, c] : s.terms()) terms.push_back({rcft::format_rational(e), c.get_str()});
      arr.push_back({{"name", list->names[i]}, {"cutoff", rcft::format_rational(s.cutoff())}, {"terms", terms}});
    }
    put(out, arr);
  });
}

rcft_status rcft_series_evaluate(const rcft_series_list* list, size_t i, double tau_re, double tau_im,
                                 double value[2], double* bound) {
  return guard([&] {
    require(value, "output");
    const rcft::Evaluation e = rcft::evaluate(checked(list, i).series[i], Complex(tau_re, tau_im));
    value[0] = e.value.real();
    value[1] = e.value.imag();
    if (bound != nullptr) *bound = e.truncation_bound;
  });
}

rcft_status rcft_check_transform(const rcft_modular_data* md, const rcft_series_list* chars,
                                 double tau_re, double tau_im, char which, double tol, double* residual) {
  return guard([&] {
    require(md, "modular data");
    require(chars, "characters");
    require(residual, "output");
    rcft::Transform t;
    if (which == 'S' || which == 's') {
      t = rcft::Transform::S;
    } else if (which == 'T' || which == 't') {
      t = rcft::Transform::T;
    } else {
      rcft::fail(ErrorCode::InvalidArgument, "transform must be S or T");
    }
    *residual = rcft::check_modular_transform(md->md, chars->series, Complex(tau_re, tau_im), t, tol);
  });
}

rcft_status rcft_invariants(const rcft_modular_data* md, int bound_slack, uint64_t max_candidates,
                            rcft_invariant_list** out) {
  return guard([&] {
    require(md, "modular data");
    require(out, "output");
    rcft::InvariantSearchOptions opt;
    opt.bound_slack = bound_slack;
    opt.max_candidates = max_candidates;
    *out = new rcft_invariant_list{rcft::enumerate_invariants(md->md, opt)};
  });
}

void rcft_invariants_free(rcft_invariant_list* list) { delete list; }

size_t rcft_invariants_count(const rcft_invariant_list* list) { return list == nullptr ? 0 : list->items.size(); }

rcft_status rcft_invariant_entries(const rcft_invariant_list* list, size_t k, int* out, size_t len) {
  return guard([&] {
    require(list, "invariant list");
    require(out, "output");
    if (k >= list->items.size()) rcft::fail(ErrorCode::InvalidArgument, "invariant index out of range");
    const Eigen::MatrixXi& z = list->items[k].z;
    if (len < static_cast<std::size_t>(z.size())) rcft::fail(ErrorCode::InvalidArgument, "output buffer too small");
    for (Eigen::Index r = 0; r < z.rows(); ++r)
      for (Eigen::Index c = 0; c < z.cols(); ++c) out[r * z.cols() + c] = z(r, c);
  });
}

rcft_status rcft_invariant_residual(const rcft_invariant_list* list, size_t k, double* out) {
  return guard([&] {
    require(list, "invariant list");
    require(out, "output");
    if (k >= list->items.size()) rcft::fail(ErrorCode::InvalidArgument, "invariant index out of range");
    *out = list->items[k].residual;
  });
}

rcft_status rcft_partition_function(const rcft_modular_data* md, const rcft_invariant_list* list,
                                    size_t k, const rcft_series_list* chars, double tau_re,
                                    double tau_im, double tol, double out[2]) {
  return guard([&] {
    require(md, "modular data");
    require(list, "invariant list");
    require(chars, "characters");
    require(out, "output");
    if (k >= list->items.size()) rcft::fail(ErrorCode::InvalidArgument, "invariant index out of range");
    const Complex z = rcft::partition_function(md->md, list->items[k], chars->series,
                                                Complex(tau_re, tau_im), tol);
    out[0] = z.real();
    out[1] = z.imag();
  });
}

rcft_status rcft_blocks_at(double w_re, double w_im, double out[4]) {
  return guard([&] {
    require(out, "output");
    const rcft::BlockPair b = rcft::blocks_at(Complex(w_re, w_im));
    out[0] = b.f1.real();
    out[1] = b.f1.imag();
    out[2] = b.f2.real();
    out[3] = b.f2.imag();
  });
}

rcft_status rcft_monodromy_circle(double center_re, double center_im, double radius, double turns,
                                  double clearance, rcft_monodromy* out) {
  return guard([&] {
    require(out, "output");
    rcft::ContinuationOptions opt;
    opt.clearance = clearance;
    const auto path = rcft::PathSpec::circle(Complex(center_re, center_im), radius, turns);
    fill_monodromy(rcft::continue_along(path, opt), out);
  });
}

rcft_status rcft_monodromy_path(const char* path_text, double clearance, rcft_monodromy* out) {
  return guard([&] {
    require(path_text, "path text");
    require(out, "output");
    rcft::ContinuationOptions opt;
    opt.clearance = clearance;
    fill_monodromy(rcft::continue_along(rcft::parse_path_spec(path_text), opt), out);
  });
}

rcft_status rcft_kz_monodromy(int level, const int* twice_spins, size_t n_legs, const char* loop,
                              const char* path_text, double* out, size_t capacity, size_t* dim) {
  return guard([&] {
    require(dim, "dimension output");
    const rcft::SpinSystem sys = spin_system(level, twice_spins, n_legs);
    *dim = sys.dimension();
    const std::size_t need = 2 * sys.dimension() * sys.dimension();
    if (need > 0) require(out, "output");
    if (capacity < need) rcft::fail(ErrorCode::InvalidArgument, "output buffer too small");
    const Eigen::MatrixXcd m = rcft::kz_monodromy(sys, kz_path(sys, loop, path_text));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        out[2 * (r * m.cols() + c)] = m(r, c).real();
        out[2 * (r * m.cols() + c) + 1] = m(r, c).imag();
      }
  });
}

rcft_status rcft_kz_report(int level, const int* twice_spins, size_t n_legs, const char* loop,
                           const char* path_text, char** out) {
  return guard([&] {
    require(out, "output");
    const rcft::SpinSystem sys = spin_system(level, twice_spins, n_legs);
    const Eigen::MatrixXcd m = rcft::kz_monodromy(sys, kz_path(sys, loop, path_text));
    json j{{"level", level},
           {"spins", sys.twice_spins()},
           {"loop", loop != nullptr ? loop : "file"},
           {"dimension", sys.dimension()},
           {"matrix", matrix_json(m)}};
    json eig = json::array();
    const auto ev = rcft::eigenvalues(m);
    for (const auto& z : ev) eig.push_back(complex_json(z));
    j["eigenvalues"] = eig;
    json residuals = json::object();
    if (m.size() > 0) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
      const auto& sv = svd.singularValues();
      j["condition_number"] = sv(0) / sv(sv.size() - 1);
      residuals["det_modulus_minus_one"] = std::abs(std::abs(m.determinant()) - 1.0);
    }
    if (loop != nullptr && m.size() > 0) {
      const auto mv = parse_move(loop);
      const std::size_t lo = std::min(mv->i, mv->j), hi = std::max(mv->i, mv->j);
      const auto base = rcft::ConfigPath::default_base(sys.legs());
      const double k2 = level + 2.0;
      const auto om = rcft::casimir_exchange(sys, lo, hi);
      if (mv->swap) {
        const Eigen::MatrixXcd full = rcft::kz_monodromy(sys, rcft::ConfigPath::loop(base, mv->i, mv->j));
        residuals["swap_squared_minus_loop"] = (m * m - full).cwiseAbs().maxCoeff();
      } else if (hi == lo + 1) {
        // Adjacent legs: the loop encircles no other point, so local exponents apply.
        std::vector<Complex> predicted;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(om.omega);
        for (Eigen::Index a = 0; a < es.eigenvalues().size(); ++a)
          predicted.push_back(std::polar(1.0, 2 * std::numbers::pi * es.eigenvalues()(a) / k2));
        residuals["exponent_rule"] = rcft::match_eigenvalues(ev, predicted);
        residuals["determinant"] =
            std::abs(m.determinant() - std::polar(1.0, 2 * std::numbers::pi * om.omega.trace() / k2));
      }
    }
    j["residuals"] = residuals;
    put(out, j);
  });
}

rcft_status rcft_drinfeld_kohno_report(int level, char** out) {
  return guard([&] {
    require(out, "output");
    const rcft::DrinfeldKohnoReport r = rcft::drinfeld_kohno_check(level);
    json kz = json::array(), pred = json::array();
    for (const auto& z : r.kz_eigenvalues) kz.push_back(complex_json(z));
    for (const auto& z : r.predicted) pred.push_back(complex_json(z));
    json j{{"level", r.level},
           {"monodromy", matrix_json(r.monodromy)},
           {"kz_eigenvalues", kz},
           {"predicted", pred},
           {"exponent_residual", r.exponent_residual},
           {"determinant_residual", r.determinant_residual},
           {"homotopy_spread", r.homotopy_spread},
           {"condition_number", r.condition_number}};
    if (r.braiding_residual) j["braiding_residual"] = *r.braiding_residual;
    put(out, j);
  });
}

rcft_status rcft_braid_report(char** out) {
  return guard([&] {
    require(out, "output");
    const rcft::DualityData dd = rcft::ising_duality_data();
    const rcft::MCGRep rep = rcft::ising_braid_rep();
    const auto checks = rcft::check_relations(rep, 1e-9);
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    const double fdf = (dd.f * dd.d * dd.f - dd.b).cwiseAbs().maxCoeff();
    const double f2 = (dd.f * dd.f - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    put(out, json{{"pass", pass},
                  {"F", matrix_json(dd.f)},
                  {"D", matrix_json(dd.d)},
                  {"B", matrix_json(dd.b)},
                  {"duality", {{"B=FDF", fdf}, {"F^2=I", f2}}},
                  {"unitarity_residual", rcft::unitarity_residual(rep)},
                  {"relations", relations_json(checks)}});
  });
}

rcft_status rcft_braid_closure(size_t max_elems, int* finite, size_t* elements) {
  return guard([&] {
    require(finite, "output");
    require(elements, "output");
    const rcft::ClosureResult r = rcft::projective_image_closure(rcft::ising_braid_rep(), max_elems);
    *finite = r.finite ? 1 : 0;
    *elements = r.elements;
  });
}

rcft_status rcft_group_resolve(const char* spec, rcft_group** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "output");
    const std::string s(spec);
    const auto names = rcft::FiniteGroup::builtin_names();
    if (std::find(names.begin(), names.end(), s) != names.end()) {
      *out = new rcft_group{rcft::FiniteGroup::builtin(s)};
    } else {
      *out = new rcft_group{rcft::FiniteGroup::load(s)};
    }
  });
}

void rcft_group_free(rcft_group* group) { delete group; }

size_t rcft_group_order(const rcft_group* group) {
  return group == nullptr ? 0 : static_cast<std::size_t>(group->group.order());
}

const char* rcft_group_name(const rcft_group* group) {
  return group == nullptr ? nullptr : group->group.name().c_str();
}

rcft_status rcft_flat_count(const rcft_group* group, int genus, double budget, uint64_t* out) {
  return guard([&] {
    require(group, "group");
    require(out, "output");
    *out = rcft::enumerate_flat(group->group, genus, budget).size();
  });
}

rcft_status rcft_mednykh_count(const rcft_group* group, int genus, const int* degrees, size_t n_degrees,
                               char** out) {
  return guard([&] {
    require(group, "group");
    std::vector<int> d;
    if (degrees != nullptr) {
      d.assign(degrees, degrees + n_degrees);
    } else {
      d = group->group.character_degrees();
      if (d.empty()) rcft::fail(ErrorCode::InvalidArgument, "character degrees are needed for a loaded group");
    }
    put(out, rcft::mednykh_count(group->group, genus, d).get_str());
  });
}

rcft_status rcft_flat_classes_report(const rcft_group* group, int genus, double budget, char** out) {
  return guard([&] {
    require(group, "group");
    const auto tuples = rcft::enumerate_flat(group->group, genus, budget);
    const auto classes = rcft::conjugation_classes(group->group, tuples);
    json arr = json::array();
    for (const auto& c : classes) arr.push_back({{"representative", c.representative}, {"orbit_size", c.orbit_size}});
    put(out, json{{"genus", genus}, {"tuples", tuples.size()}, {"classes", arr}});
  });
}

rcft_status rcft_torus_action_report(const rcft_group* group, char** out) {
  return guard([&] {
    require(group, "group");
    const rcft::TorusAction act = rcft::torus_sl2z_action(group->group);
    json classes = json::array(), relations = json::array();
    for (const auto& c : act.classes) classes.push_back({{"representative", c.representative}, {"orbit_size", c.orbit_size}});
    for (const auto& r : act.relations) relations.push_back({{"name", r.name}, {"holds", r.holds}});
    put(out, json{{"classes", classes},
                  {"S", act.s},
                  {"T", act.t},
                  {"inversion", act.inversion},
                  {"relations", relations},
                  {"pass", act.relations_hold()}});
  });
}

}  // extern "C"
