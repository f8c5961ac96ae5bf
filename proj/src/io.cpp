#include "rcft/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcft/error.hpp"

namespace rcft {

namespace {

using nlohmann::json;

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line.erase(0, first);
    line.erase(line.find_last_not_of(" \t\r") + 1);
    out.push_back(line);
  }
  return out;
}

double parse_double(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "not a number: '" + s + "'");
  }
  if (used != s.size()) fail(ErrorCode::InvalidArgument, "not a number: '" + s + "'");
  return v;
}

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorCode::Validation, std::string("modular data: missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(ErrorCode::Validation, std::string("modular data: malformed \"") + key + "\"");
  }
}

Rational file_rational(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    fail(ErrorCode::Validation, std::string("modular data: malformed ") + what + " '" + text + "'");
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::Io, "cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

ModularData parse_modular_data_unvalidated(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Validation, std::string("modular data: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::Validation, "modular data: expected a JSON object");
  const auto names = get_field<std::vector<std::string>>(j, "labels");
  const auto vacuum = get_field<std::size_t>(j, "vacuum");
  const auto c = get_field<std::string>(j, "central_charge");
  const auto weight_strings = get_field<std::vector<std::string>>(j, "weights");
  const auto entries = get_field<std::vector<std::array<double, 2>>>(j, "S");

  const std::size_t n = names.size();
  if (weight_strings.size() != n) fail(ErrorCode::Validation, "modular data: weights and labels differ in length");
  if (entries.size() != n * n) fail(ErrorCode::Validation, "modular data: S must have labels^2 entries");
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back({i, names[i], {}});
  std::vector<Rational> weights;
  for (const auto& w : weight_strings) weights.push_back(file_rational(w, "weight"));
  Eigen::MatrixXcd s(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) {
      const auto& e = entries[r * n + col];
      s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) = Complex(e[0], e[1]);
    }
  return ModularData(std::move(labels), vacuum, s, file_rational(c, "central charge"), std::move(weights));
}

ModularData parse_modular_data(std::string_view json_text, double tol) {
  ModularData md = parse_modular_data_unvalidated(json_text);
  require_valid(md, tol);
  return md;
}

ModularData load_modular_data(const std::string& path, double tol) {
  return parse_modular_data(read_text_file(path), tol);
}

std::string modular_data_to_json(const ModularData& md) {
  json j;
  json labels = json::array();
  for (const auto& l : md.labels()) labels.push_back(l.name);
  j["labels"] = labels;
  j["vacuum"] = md.vacuum();
  j["central_charge"] = format_rational(md.central_charge());
  json weights = json::array();
  for (const auto& w : md.weights()) weights.push_back(format_rational(w));
  j["weights"] = weights;
  json s = json::array();
  for (Eigen::Index r = 0; r < md.s().rows(); ++r)
    for (Eigen::Index c = 0; c < md.s().cols(); ++c)
      s.push_back(json::array({md.s()(r, c).real(), md.s()(r, c).imag()}));
  j["S"] = s;
  return j.dump(2) + "\n";
}

void save_modular_data(const ModularData& md, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::Io, "cannot write " + path);
  f << modular_data_to_json(md);
  if (!f) fail(ErrorCode::Io, "write failed for " + path);
}

ModularData resolve_modular_data(const std::string& spec, double tol) {
  if (spec == "ising") return ising_modular_data();
  if (spec.rfind("su2:", 0) == 0) {
    int k = 0;
    const char* first = spec.data() + 4;
    const char* last = spec.data() + spec.size();
    const auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc() || ptr != last || first == last)
      fail(ErrorCode::InvalidArgument, "bad level in '" + spec + "'");
    return su2_modular_data(k);
  }
  return load_modular_data(spec, tol);
}

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(text), 0.0};
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

PathSpec parse_path_spec(std::string_view text) {
  PathSpec path;
  path.start = Complex(0.5, 0.0);
  bool first = true;
  std::size_t lineno = 0;
  for (const std::string& line : lines_of(text)) {
    ++lineno;
    std::istringstream in(line);
    std::string kind, point, extra;
    in >> kind >> point;
    if (kind == "start" && first) {
      if (in >> extra) fail(ErrorCode::InvalidArgument, "path line " + std::to_string(lineno) + ": trailing text");
      path.start = parse_complex(point);
    } else if (kind == "line") {
      if (in >> extra) fail(ErrorCode::InvalidArgument, "path line " + std::to_string(lineno) + ": trailing text");
      path.segments.push_back(PathSegment::line(parse_complex(point)));
    } else if (kind == "arc") {
      std::string angle;
      if (!(in >> angle) || (in >> extra))
        fail(ErrorCode::InvalidArgument, "path line " + std::to_string(lineno) + ": expected 'arc re,im angle'");
      path.segments.push_back(PathSegment::arc(parse_complex(point), parse_double(angle)));
    } else {
      fail(ErrorCode::InvalidArgument, "path line " + std::to_string(lineno) + ": unknown segment '" + kind + "'");
    }
    first = false;
  }
  if (path.segments.empty()) fail(ErrorCode::InvalidArgument, "path has no segments");
  return path;
}

PathSpec load_path_spec(const std::string& path) { return parse_path_spec(read_text_file(path)); }

ConfigPath parse_config_path(std::string_view text) {
  std::vector<ConfigPath::Config> samples;
  for (const std::string& line : lines_of(text)) {
    std::istringstream in(line);
    ConfigPath::Config z;
    std::string tok;
    while (in >> tok) z.push_back(parse_complex(tok));
    if (!samples.empty() && z.size() != samples.front().size())
      fail(ErrorCode::InvalidArgument, "configuration samples differ in size");
    samples.push_back(std::move(z));
  }
  return ConfigPath::polyline(std::move(samples));
}

ConfigPath load_config_path(const std::string& path) { return parse_config_path(read_text_file(path)); }

}  // namespace rcft
