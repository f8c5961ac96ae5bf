// Command-line front end; uses only the C interface.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcft/rcft.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(rcft_status st) {
  return st == RCFT_VALIDATION || st == RCFT_NON_INTEGRAL ? kExitValidation : kExitUsage;
}

void call(rcft_status st) {
  if (st != RCFT_OK) throw Failure{exit_code_for(st), rcft_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  rcft_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", x);
  return buf;
}

std::string fmt_complex(double re, double im) { return fmt(re) + "," + fmt(im); }

std::string fmt_complex(const json& pair) {
  return fmt_complex(pair[0].get<double>(), pair[1].get<double>());
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Failure{kExitUsage, "not a number: '" + s + "'"};
  }
  if (used != s.size()) throw Failure{kExitUsage, "not a number: '" + s + "'"};
  return v;
}

std::pair<double, double> parse_complex(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return {parse_number(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_number(parts[0]), parse_number(parts[1])};
  throw Failure{kExitUsage, "expected re,im but got '" + s + "'"};
}

// Owns a C handle.
template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using MdHandle = Handle<rcft_modular_data, rcft_md_free>;
using SeriesHandle = Handle<rcft_series_list, rcft_series_free>;
using InvHandle = Handle<rcft_invariant_list, rcft_invariants_free>;
using GroupHandle = Handle<rcft_group, rcft_group_free>;

struct Globals {
  std::string data = "ising";
  std::optional<double> tol;
  std::string format = "text";
  std::string cutoff = "50";

  double tol_or(double fallback) const { return tol.value_or(fallback); }
};

// Collects text lines or one JSON document.
class Output {
 public:
  explicit Output(bool json_mode) : json_mode_(json_mode) {}
  bool json_mode() const { return json_mode_; }
  void line(const std::string& s) { text_ += s + "\n"; }
  json& doc() { return doc_; }
  void emit(const std::string& command, const json& config, int exit_code, const std::string& error) {
    if (json_mode_) {
      json out{{"command", command}, {"config", config}, {"exit_code", exit_code}};
      if (!error.empty()) out["error"] = error;
      if (!doc_.is_null()) out["result"] = doc_;
      std::cout << out.dump(2) << "\n";
      return;
    }
    std::string echo = "# " + command;
    for (const auto& [k, v] : config.items()) echo += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    std::cout << echo << "\n" << text_;
  }

 private:
  bool json_mode_;
  std::string text_;
  json doc_;
};

void load_md(const Globals& g, MdHandle& md, json& config, double tol = 1e-9) {
  config["data"] = g.data;
  call(rcft_md_resolve(g.data.c_str(), g.tol_or(tol), &md.p));
}

std::string label(const MdHandle& md, std::size_t i) { return rcft_md_label(md.p, i); }

// ---- commands ----

int cmd_validate(const Globals& g, Output& out, json& config) {
  const double tol = g.tol_or(1e-9);
  config["tol"] = tol;
  config["data"] = g.data;
  MdHandle md;
  call(rcft_md_resolve_unvalidated(g.data.c_str(), &md.p));
  char* text = nullptr;
  call(rcft_md_validate_report(md.p, tol, &text));
  const json report = take_json(text);
  out.doc() = report;
  for (const auto& c : report["checks"])
    out.line(c["name"].get<std::string>() + "  " + fmt(c["residual"].get<double>()) + "  " +
             (c["pass"].get<bool>() ? "pass" : "FAIL"));
  const bool pass = report["pass"].get<bool>();
  out.line(pass ? "valid" : "invalid");
  return pass ? kExitOk : kExitValidation;
}

int cmd_fusion(const Globals& g, Output& out, json& config) {
  const double tol = g.tol_or(1e-6);
  config["tol"] = tol;
  MdHandle md;
  load_md(g, md, config);
  const std::size_t n = rcft_md_size(md.p);
  std::vector<unsigned> t(n * n * n);
  call(rcft_fusion_tensor(md.p, tol, t.data(), t.size()));
  json rules = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::string rhs;
      json terms = json::object();
      for (std::size_t c = 0; c < n; ++c) {
        const unsigned m = t[(a * n + b) * n + c];
        if (m == 0) continue;
        if (!rhs.empty()) rhs += " + ";
        rhs += (m > 1 ? std::to_string(m) + " " : "") + label(md, c);
        terms[label(md, c)] = m;
      }
      out.line(label(md, a) + " x " + label(md, b) + " = " + (rhs.empty() ? "(empty)" : rhs));
      rules.push_back({{"a", label(md, a)}, {"b", label(md, b)}, {"product", terms}});
    }
  }
  json labels = json::array();
  for (std::size_t i = 0; i < n; ++i) labels.push_back(label(md, i));
  out.doc() = {{"labels", labels}, {"N", t}, {"rules", rules}};
  return kExitOk;
}

int cmd_dims(const Globals& g, Output& out, json& config, std::size_t genus, const std::string& punctures) {
  const double tol = g.tol_or(1e-6);
  config["tol"] = tol;
  config["genus"] = genus;
  config["punctures"] = punctures;
  MdHandle md;
  load_md(g, md, config);
  std::vector<std::size_t> idx;
  if (!punctures.empty()) {
    for (const auto& name : split(punctures, ',')) {
      std::size_t i = 0;
      call(rcft_md_find_label(md.p, name.c_str(), &i));
      idx.push_back(i);
    }
  }
  uint64_t dim = 0;
  call(rcft_block_dimension(md.p, genus, idx.data(), idx.size(), tol, &dim));
  out.line(std::to_string(dim));
  out.doc() = {{"dimension", dim}};
  return kExitOk;
}

void series_output(const SeriesHandle& list, Output& out) {
  const std::size_t n = rcft_series_count(list.p);
  for (std::size_t i = 0; i < n; ++i) {
    char* text = nullptr;
    call(rcft_series_listing(list.p, i, &text));
    out.line(std::string("[") + rcft_series_name(list.p, i) + "]");
    std::string body = take(text);
    if (!body.empty() && body.back() == '\n') body.pop_back();
    if (!body.empty()) out.line(body);
  }
  char* js = nullptr;
  call(rcft_series_to_json(list.p, &js));
  out.doc() = {{"series", take_json(js)}};
}

int cmd_chars(const Globals& g, Output& out, json& config) {
  config["cutoff"] = g.cutoff;
  MdHandle md;
  load_md(g, md, config);
  SeriesHandle chars;
  call(rcft_characters(md.p, g.cutoff.c_str(), &chars.p));
  series_output(chars, out);
  return kExitOk;
}

int cmd_check(const Globals& g, Output& out, json& config, const std::string& which, const std::string& tau) {
  const double tol = g.tol_or(1e-6);
  config["tol"] = tol;
  config["cutoff"] = g.cutoff;
  config["which"] = which;
  config["tau"] = tau;
  if (which != "S" && which != "T") throw Failure{kExitUsage, "--which must be S or T"};
  const auto [re, im] = parse_complex(tau);
  MdHandle md;
  load_md(g, md, config);
  SeriesHandle chars;
  call(rcft_characters(md.p, g.cutoff.c_str(), &chars.p));
  double residual = 0;
  call(rcft_check_transform(md.p, chars.p, re, im, which[0], tol, &residual));
  const bool pass = residual < tol;
  out.line("residual " + fmt(residual) + (pass ? "  pass" : "  FAIL"));
  out.doc() = {{"residual", residual}, {"pass", pass}};
  return pass ? kExitOk : kExitValidation;
}

int cmd_minv(const Globals& g, Output& out, json& config, int slack, uint64_t max_candidates) {
  config["slack"] = slack;
  MdHandle md;
  load_md(g, md, config);
  InvHandle inv;
  call(rcft_invariants(md.p, slack, max_candidates, &inv.p));
  const std::size_t n = rcft_md_size(md.p);
  const std::size_t count = rcft_invariants_count(inv.p);
  out.line(std::to_string(count) + " invariant" + (count == 1 ? "" : "s"));
  json items = json::array();
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<int> z(n * n);
    call(rcft_invariant_entries(inv.p, k, z.data(), z.size()));
    double residual = 0;
    call(rcft_invariant_residual(inv.p, k, &residual));
    out.line("Z" + std::to_string(k + 1) + ":");
    json rows = json::array();
    for (std::size_t r = 0; r < n; ++r) {
      std::string row = " ";
      std::vector<int> jr;
      for (std::size_t c = 0; c < n; ++c) {
        row += " " + std::to_string(z[r * n + c]);
        jr.push_back(z[r * n + c]);
      }
      out.line(row);
      rows.push_back(jr);
    }
    out.line("  residual " + fmt(residual));
    items.push_back({{"matrix", rows}, {"residual", residual}});
  }
  out.doc() = {{"invariants", items}};
  return kExitOk;
}

int cmd_monodromy(const Globals& g, Output& out, json& config, const std::string& loop,
                  const std::string& path, double clearance) {
  const double tol = g.tol_or(1e-8);
  config["tol"] = tol;
  config["clearance"] = clearance;
  rcft_monodromy m{};
  if (!path.empty()) {
    config["path"] = path;
    std::ifstream f(path);
    if (!f) throw Failure{kExitUsage, "cannot open " + path};
    std::stringstream buf;
    buf << f.rdbuf();
    call(rcft_monodromy_path(buf.str().c_str(), clearance, &m));
  } else {
    config["loop"] = loop;
    const auto parts = split(loop, ':');
    if ((parts.size() != 3 && parts.size() != 4) || parts[0] != "circle")
      throw Failure{kExitUsage, "--loop must be circle:CENTER:RADIUS[:turns]"};
    const auto [cre, cim] = parse_complex(parts[1]);
    const double radius = parse_number(parts[2]);
    const double turns = parts.size() == 4 ? parse_number(parts[3]) : 1.0;
    call(rcft_monodromy_circle(cre, cim, radius, turns, clearance, &m));
  }
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    out.line(fmt_complex(m.matrix[4 * r], m.matrix[4 * r + 1]) + "  " +
             fmt_complex(m.matrix[4 * r + 2], m.matrix[4 * r + 3]));
    rows.push_back({{m.matrix[4 * r], m.matrix[4 * r + 1]}, {m.matrix[4 * r + 2], m.matrix[4 * r + 3]}});
  }
  const double det_residual = std::abs(m.det_modulus - 1.0);
  const bool pass = !m.closed || det_residual < tol;
  out.line(std::string("closed ") + (m.closed ? "yes" : "no"));
  out.line("steps " + std::to_string(m.steps));
  out.line("|det|-1 " + fmt(det_residual) + (pass ? "  pass" : "  FAIL"));
  out.doc() = {{"matrix", rows},
               {"closed", m.closed != 0},
               {"steps", m.steps},
               {"det_modulus_residual", det_residual},
               {"start", {m.start[0], m.start[1]}},
               {"end", {m.end[0], m.end[1]}}};
  return pass ? kExitOk : kExitValidation;
}

int cmd_lift(const Globals& g, Output& out, json& config) {
  config["cutoff"] = g.cutoff;
  SeriesHandle lift;
  call(rcft_lift_to_tau(g.cutoff.c_str(), &lift.p));
  series_output(lift, out);
  return kExitOk;
}

std::vector<int> parse_spins(const std::string& spins) {
  std::vector<int> twice;
  for (const auto& s : split(spins, ',')) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      twice.push_back(2 * static_cast<int>(parse_number(s)));
    } else if (s.substr(slash + 1) == "2") {
      twice.push_back(static_cast<int>(parse_number(s.substr(0, slash))));
    } else {
      throw Failure{kExitUsage, "spins must be integers or halves: '" + s + "'"};
    }
  }
  return twice;
}

bool is_named_move(const std::string& s) {
  return s.size() == 6 && (s.rfind("swap", 0) == 0 || s.rfind("loop", 0) == 0) &&
         std::isdigit(static_cast<unsigned char>(s[4])) && std::isdigit(static_cast<unsigned char>(s[5]));
}

int cmd_kz(const Globals& g, Output& out, json& config, int level, const std::string& loop,
           const std::string& spins, bool drinfeld_kohno) {
  const double tol = g.tol_or(1e-6);
  config["tol"] = tol;
  config["level"] = level;
  config["loop"] = loop;
  config["spins"] = spins;
  const std::vector<int> twice = parse_spins(spins);
  char* text = nullptr;
  if (is_named_move(loop)) {
    call(rcft_kz_report(level, twice.data(), twice.size(), loop.c_str(), nullptr, &text));
  } else {
    std::ifstream f(loop);
    if (!f) throw Failure{kExitUsage, "unknown loop or missing file '" + loop + "'"};
    std::stringstream buf;
    buf << f.rdbuf();
    call(rcft_kz_report(level, twice.data(), twice.size(), nullptr, buf.str().c_str(), &text));
  }
  json report = take_json(text);
  out.line("dimension " + std::to_string(report["dimension"].get<std::size_t>()));
  out.line("monodromy:");
  for (const auto& row : report["matrix"]) {
    std::string line = " ";
    for (const auto& z : row) line += " " + fmt_complex(z);
    out.line(line);
  }
  out.line("eigenvalues:");
  for (const auto& z : report["eigenvalues"]) out.line("  " + fmt_complex(z));
  if (report.contains("condition_number"))
    out.line("condition number " + fmt(report["condition_number"].get<double>()));
  bool pass = true;
  for (const auto& [name, value] : report["residuals"].items()) {
    const double r = value.get<double>();
    const bool ok = name == "det_modulus_minus_one" || r < tol;
    pass = pass && ok;
    out.line("residual " + name + " " + fmt(r) + (ok ? "" : "  FAIL"));
  }
  if (drinfeld_kohno) {
    call(rcft_drinfeld_kohno_report(level, &text));
    json dk = take_json(text);
    out.line("Drinfeld-Kohno (loop23, four spin-1/2):");
    for (const char* key : {"exponent_residual", "braiding_residual", "determinant_residual", "homotopy_spread"}) {
      if (!dk.contains(key)) continue;
      const double r = dk[key].get<double>();
      const bool ok = r < tol;
      pass = pass && ok;
      out.line(std::string("  ") + key + " " + fmt(r) + (ok ? "" : "  FAIL"));
    }
    report["drinfeld_kohno"] = dk;
  }
  out.doc() = report;
  return pass ? kExitOk : kExitValidation;
}

int cmd_braid(const Globals& g, Output& out, json& config, bool check, bool closure, std::size_t max,
              bool sl2z) {
  if (!check && !closure && !sl2z) check = true;
  config["check"] = check;
  config["closure"] = closure;
  config["max"] = max;
  bool pass = true;
  json doc = json::object();
  auto relation_lines = [&](const json& rels) {
    for (const auto& r : rels) {
      std::string line = "  " + r["name"].get<std::string>() + "  scalar " + fmt_complex(r["scalar"]) +
                         "  projective " + fmt(r["projective_residual"].get<double>());
      if (r.contains("residual")) line += "  exact " + fmt(r["residual"].get<double>());
      line += r["pass"].get<bool>() ? "  pass" : "  FAIL";
      out.line(line);
    }
  };
  if (check) {
    char* text = nullptr;
    call(rcft_braid_report(&text));
    const json report = take_json(text);
    out.line("Ising braid relations:");
    relation_lines(report["relations"]);
    out.line("  B=FDF " + fmt(report["duality"]["B=FDF"].get<double>()));
    out.line("  F^2=I " + fmt(report["duality"]["F^2=I"].get<double>()));
    out.line("  unitarity " + fmt(report["unitarity_residual"].get<double>()));
    pass = pass && report["pass"].get<bool>();
    doc["check"] = report;
  }
  if (sl2z) {
    MdHandle md;
    load_md(g, md, config);
    char* text = nullptr;
    const rcft_status st = rcft_sl2z_report(md.p, &text);
    if (st != RCFT_OK && st != RCFT_VALIDATION) call(st);
    const json report = take_json(text);
    out.line("SL(2,Z) relations:");
    relation_lines(report["relations"]);
    pass = pass && report["pass"].get<bool>();
    doc["sl2z"] = report;
  }
  if (closure) {
    int finite = 0;
    std::size_t elements = 0;
    call(rcft_braid_closure(max, &finite, &elements));
    out.line(finite ? "finite projective image of order " + std::to_string(elements)
                    : "exceeds bound: more than " + std::to_string(elements) + " elements");
    doc["closure"] = {{"finite", finite != 0}, {"elements", elements}};
  }
  out.doc() = doc;
  return pass ? kExitOk : kExitValidation;
}

int cmd_orbifold(Output& out, json& config, const std::string& group, int genus, bool classes,
                 bool action, const std::string& degrees, double budget) {
  config["group"] = group;
  config["genus"] = genus;
  config["budget"] = budget;
  GroupHandle g;
  call(rcft_group_resolve(group.c_str(), &g.p));
  json doc{{"order", rcft_group_order(g.p)}};
  out.line("order " + std::to_string(rcft_group_order(g.p)));
  uint64_t count = 0;
  call(rcft_flat_count(g.p, genus, budget, &count));
  out.line("flat tuples " + std::to_string(count));
  doc["flat_tuples"] = count;
  bool pass = true;

  std::vector<int> deg;
  if (!degrees.empty())
    for (const auto& d : split(degrees, ',')) deg.push_back(static_cast<int>(parse_number(d)));
  char* text = nullptr;
  const rcft_status st = rcft_mednykh_count(g.p, genus, deg.empty() ? nullptr : deg.data(), deg.size(), &text);
  if (st == RCFT_OK) {
    const std::string m = take(text);
    const bool agree = m == std::to_string(count);
    pass = pass && agree;
    out.line("Mednykh count " + m + (agree ? "" : "  MISMATCH"));
    doc["mednykh_count"] = m;
  } else if (!(st == RCFT_INVALID_ARGUMENT && deg.empty())) {
    call(st);
  }

  if (classes) {
    call(rcft_flat_classes_report(g.p, genus, budget, &text));
    const json report = take_json(text);
    out.line("classes " + std::to_string(report["classes"].size()));
    for (const auto& c : report["classes"]) {
      std::string rep;
      for (const auto& v : c["representative"]) rep += (rep.empty() ? "" : " ") + std::to_string(v.get<int>());
      out.line("  (" + rep + ")  orbit " + std::to_string(c["orbit_size"].get<std::size_t>()));
    }
    doc["classes"] = report["classes"];
  }
  if (action) {
    if (genus != 1) throw Failure{kExitUsage, "--action needs --genus 1"};
    call(rcft_torus_action_report(g.p, &text));
    const json report = take_json(text);
    auto perm = [](const json& p) {
      std::string s;
      for (const auto& v : p) s += (s.empty() ? "" : " ") + std::to_string(v.get<std::size_t>());
      return s;
    };
    out.line("S: " + perm(report["S"]));
    out.line("T: " + perm(report["T"]));
    for (const auto& r : report["relations"])
      out.line("  " + r["name"].get<std::string>() + (r["holds"].get<bool>() ? "  holds" : "  FAILS"));
    pass = pass && report["pass"].get<bool>();
    doc["action"] = report;
  }
  out.doc() = doc;
  return pass ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular data, fusion, characters, monodromy and orbifold computations"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  Globals g;
  app.add_option("--data", g.data, "ising, su2:K, or a modular-data JSON file")->capture_default_str();
  app.add_option("--tol", g.tol, "tolerance override");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--cutoff", g.cutoff, "series cutoff (rational)")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "check the modular data identities");
  auto* fusion = app.add_subcommand("fusion", "print the fusion rules");
  auto* dims = app.add_subcommand("dims", "dimension of a space of chiral blocks");
  std::size_t genus = 0;
  std::string punctures;
  dims->add_option("--genus", genus)->capture_default_str();
  dims->add_option("--punctures", punctures, "comma-separated labels");

  auto* chars = app.add_subcommand("chars", "character q-series");
  chars->add_option("--model", g.data, "ising or su2:K");
  auto* check = app.add_subcommand("check", "numerical S or T check of the characters");
  std::string which = "S", tau = "0.1,1.1";
  check->add_option("--model", g.data, "ising or su2:K");
  check->add_option("--which", which)->check(CLI::IsMember({"S", "T"}))->capture_default_str();
  check->add_option("--tau", tau, "re,im")->capture_default_str();

  auto* minv = app.add_subcommand("minv", "modular invariants");
  int slack = 0;
  uint64_t max_candidates = 10'000'000;
  minv->add_option("--slack", slack)->capture_default_str();
  minv->add_option("--max-candidates", max_candidates)->capture_default_str();

  auto* mono = app.add_subcommand("monodromy", "monodromy of the Ising four-point blocks");
  std::string loop = "circle:0:0.1", path;
  double clearance = 1e-3;
  auto* loop_opt = mono->add_option("--loop", loop, "circle:CENTER:RADIUS[:turns]")->capture_default_str();
  mono->add_option("--path", path, "segment file")->excludes(loop_opt);
  mono->add_option("--clearance", clearance)->capture_default_str();

  auto* lift = app.add_subcommand("lift", "Ising blocks as q-series");

  auto* kz = app.add_subcommand("kz", "KZ monodromy");
  int level = 2;
  std::string kz_loop = "loop23", spins = "1/2,1/2,1/2,1/2";
  bool dk = false;
  kz->add_option("--level", level)->capture_default_str();
  kz->add_option("--loop", kz_loop, "swapIJ, loopIJ, or a configuration file")->capture_default_str();
  kz->add_option("--spins", spins)->capture_default_str();
  kz->add_flag("--drinfeld-kohno", dk, "compare loop23 with the quantum-group prediction");

  auto* braid = app.add_subcommand("braid", "Ising braid representation");
  bool braid_check = false, closure = false, sl2z = false;
  std::size_t max_elems = 10000;
  braid->add_flag("--check", braid_check);
  braid->add_flag("--closure", closure);
  braid->add_flag("--sl2z", sl2z, "also check the SL(2,Z) relations of --data");
  braid->add_option("--max", max_elems)->capture_default_str();

  auto* orb = app.add_subcommand("orbifold", "flat G-bundles on surfaces");
  std::string group = "S3", degrees;
  int orb_genus = 1;
  bool classes = false, action = false;
  double budget = 1e8;
  orb->add_option("--group", group, "group name or table file")->capture_default_str();
  orb->add_option("--genus", orb_genus)->capture_default_str();
  orb->add_flag("--classes", classes);
  orb->add_flag("--action", action);
  orb->add_option("--degrees", degrees, "character degrees for a table file");
  orb->add_option("--budget", budget)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Output out(g.format == "json");
  json config{{"format", g.format}};
  int code = kExitOk;
  std::string error;
  try {
    if (sub == validate) code = cmd_validate(g, out, config);
    else if (sub == fusion) code = cmd_fusion(g, out, config);
    else if (sub == dims) code = cmd_dims(g, out, config, genus, punctures);
    else if (sub == chars) code = cmd_chars(g, out, config);
    else if (sub == check) code = cmd_check(g, out, config, which, tau);
    else if (sub == minv) code = cmd_minv(g, out, config, slack, max_candidates);
    else if (sub == mono) code = cmd_monodromy(g, out, config, loop, path, clearance);
    else if (sub == lift) code = cmd_lift(g, out, config);
    else if (sub == kz) code = cmd_kz(g, out, config, level, kz_loop, spins, dk);
    else if (sub == braid) code = cmd_braid(g, out, config, braid_check, closure, max_elems, sl2z);
    else if (sub == orb) code = cmd_orbifold(out, config, group, orb_genus, classes, action, degrees, budget);
  } catch (const Failure& f) {
    code = f.exit_code;
    error = f.message;
  } catch (const json::exception& e) {
    code = kExitUsage;
    error = e.what();
  }
  out.emit(sub->get_name(), config, code, error);
  if (!error.empty()) std::cerr << "error: " << error << "\n";
  return code;
}
