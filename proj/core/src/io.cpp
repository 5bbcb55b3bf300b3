#include "flagprim/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace flagprim {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_ll(const std::string& raw, const std::string& whole) {
  const std::string s = trim(raw);
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw ParseError("malformed integer '" + s + "' in '" + whole + "'");
  return v;
}

template <class T>
void env_number(const char* name, T& out) {
  const char* v = std::getenv(name);
  if (!v || !*v) return;
  long long x = parse_ll(v, name);
  out = static_cast<T>(x);
}

}  // namespace

void RunConfig::apply_env() {
  env_number("FLAGPRIM_SEED", seed);
  env_number("FLAGPRIM_SEARCH_BOUND", search_bound);
  env_number("FLAGPRIM_SAMPLES", sample_count);
  env_number("FLAGPRIM_BUDGET_MS", time_budget_ms);
  env_number("FLAGPRIM_WORKERS", workers);
  if (const char* d = std::getenv("FLAGPRIM_CACHE_DIR")) cache_dir = d;
}

void RunConfig::validate() const {
  if (seed == 0) throw std::invalid_argument("seed must be positive");
  if (search_bound <= 0) throw std::invalid_argument("search bound must be positive");
  if (sample_count <= 0) throw std::invalid_argument("sample count must be positive");
  if (time_budget_ms <= 0) throw std::invalid_argument("time budget must be positive");
  if (workers <= 0) throw std::invalid_argument("worker count must be positive");
}

nlohmann::json RunConfig::to_json() const {
  return {{"seed", seed}, {"search_bound", search_bound}, {"sample_count", sample_count},
          {"time_budget_ms", time_budget_ms}, {"workers", workers}};
}

Weight parse_weight(const std::string& s) {
  if (trim(s).empty()) throw ParseError("empty weight");
  Weight w;
  for (const auto& part : split(s, ',')) {
    long long v = parse_ll(part, s);
    if (v < -1000000 || v > 1000000) throw ParseError("coordinate out of range in '" + s + "'");
    w.push_back(static_cast<int>(v));
  }
  return w;
}

std::vector<Weight> parse_weights(const std::string& s) {
  std::vector<Weight> out;
  for (const auto& part : split(s, ';')) out.push_back(parse_weight(part));
  for (const auto& w : out)
    if (w.size() != out[0].size()) throw ParseError("tuple members differ in length in '" + s + "'");
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  return parse_weight(s);
}

std::vector<Support> parse_supports(const std::string& s) {
  std::vector<Support> out;
  for (const auto& part : split(s, '|')) {
    if (trim(part).empty()) throw ParseError("empty support in '" + s + "'");
    Support sup;
    for (const auto& node : split(part, ',')) {
      long long v = parse_ll(node, s);
      if (v < 1 || v > 1000) throw ParseError("node out of range in '" + s + "'");
      sup.push_back(static_cast<int>(v));
    }
    std::sort(sup.begin(), sup.end());
    if (std::adjacent_find(sup.begin(), sup.end()) != sup.end()) throw ParseError("repeated node in '" + s + "'");
    out.push_back(sup);
  }
  return out;
}

std::string format_weight(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

nlohmann::json to_json(const Weight& w) {
  return nlohmann::json(w);
}

nlohmann::json to_json(const QVec& v) {
  auto a = nlohmann::json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

nlohmann::json to_json(const WeightMultiset& m) {
  auto a = nlohmann::json::array();
  for (const auto& [w, k] : m) a.push_back({{"weight", w}, {"mult", k}});
  return a;
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j{{"kind", to_string(c.kind)}};
  if (!c.rule.empty()) j["rule"] = c.rule;
  if (!c.weights.empty()) j["weights"] = c.weights;
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.target.empty()) j["target"] = c.target;
  if (c.kind == CertKind::Witness || c.kind == CertKind::Bound || c.kind == CertKind::OpenOrbit) j["value"] = c.value;
  if (c.kind == CertKind::OpenOrbit) j["seed"] = c.seed;
  if (c.index >= 0) j["index"] = c.index;
  if (!c.coefficients.empty()) j["coefficients"] = to_json(c.coefficients);
  if (!c.part.empty()) j["part"] = c.part;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"status", to_string(v.status)}, {"certificate", to_json(v.certificate)}};
  if (!v.extra.empty()) {
    j["supporting"] = nlohmann::json::array();
    for (const auto& c : v.extra) j["supporting"].push_back(to_json(c));
  }
  return j;
}

nlohmann::json to_json(const CanonicalDecomposition& c) {
  auto a = nlohmann::json::array();
  for (const auto& s : c.summands) a.push_back({{"root", s.root}, {"mult", s.multiplicity}, {"kind", to_string(s.kind)}});
  return {{"summands", a}, {"all_real", c.all_real()}};
}

nlohmann::json to_json(const OpenOrbitResult& r) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(r.witness_hash));
  return {{"open", r.open},
          {"samples_used", r.samples_used},
          {"min_stabilizer", r.min_stabilizer},
          {"expected", r.expected},
          {"witness_hash", hex},
          {"excluded_by_bound", r.excluded_by_bound}};
}

nlohmann::json to_json(const FlagOrbitResult& r) {
  return {{"status", to_string(r.status)},       {"by_dimension", r.by_dimension},
          {"samples_used", r.samples_used},      {"witness_seed", r.witness_seed},
          {"min_intersection", r.min_intersection}, {"expected", r.expected},
          {"codim_sum", r.codim_sum}};
}

nlohmann::json to_json(const WeylElement& w) {
  return {{"word", w.word}};
}

nlohmann::json to_json(const SepResult& r) {
  nlohmann::json j{{"exact", r.exact}, {"lower", r.lower}, {"upper", r.upper}, {"proof_cells", r.proof_cells}};
  if (r.exact) j["value"] = r.value;
  auto ch = nlohmann::json::array();
  for (const auto& w : r.certificate.chambers) ch.push_back(w.word);
  j["certificate"] = {{"chambers", ch}};
  return j;
}

std::string content_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

std::string ResultCache::path(const nlohmann::json& request) const {
  return (std::filesystem::path(dir_) / ("result-" + content_hash(request.dump()) + ".json")).string();
}

std::optional<nlohmann::json> ResultCache::get(const nlohmann::json& request) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path(request));
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    // a hash collision shows up as a different stored request
    if (j.at("request") != request) return std::nullopt;
    return j.at("result");
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::put(const nlohmann::json& request, const nlohmann::json& result) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  const std::string p = path(request);
  const std::string tmp = p + ".tmp";
  {
    std::ofstream out(tmp);
    out << nlohmann::json{{"request", request}, {"result", result}}.dump() << "\n";
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace flagprim
