#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagprim/chars.hpp"
#include "flagprim/flagorbit.hpp"
#include "flagprim/primcheck.hpp"
#include "flagprim/quiver.hpp"
#include "flagprim/sep.hpp"

namespace flagprim {

struct RunConfig {
  std::uint64_t seed = 42;
  int search_bound = 8;
  int sample_count = 20;
  long long time_budget_ms = 60000;
  std::string cache_dir;  // empty: no result cache
  int workers = 1;

  // FLAGPRIM_SEED, FLAGPRIM_SEARCH_BOUND, FLAGPRIM_SAMPLES, FLAGPRIM_BUDGET_MS, FLAGPRIM_CACHE_DIR, FLAGPRIM_WORKERS
  void apply_env();
  void validate() const;
  nlohmann::json to_json() const;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "1,0,2"
Weight parse_weight(const std::string& s);
// "1,0;0,1"
std::vector<Weight> parse_weights(const std::string& s);
// "1,2|3|1,2,3"
std::vector<Support> parse_supports(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);

std::string format_weight(const Weight& w);

nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const QVec& v);
nlohmann::json to_json(const WeightMultiset& m);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const CanonicalDecomposition& c);
nlohmann::json to_json(const OpenOrbitResult& r);
nlohmann::json to_json(const FlagOrbitResult& r);
nlohmann::json to_json(const SepResult& r);
nlohmann::json to_json(const WeylElement& w);

// stable 64-bit FNV-1a, rendered as 16 hex digits
std::string content_hash(const std::string& s);

// content-addressed JSON results; no-op when dir is empty
class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}
  std::optional<nlohmann::json> get(const nlohmann::json& request) const;
  void put(const nlohmann::json& request, const nlohmann::json& result) const;
  bool enabled() const { return !dir_.empty(); }

 private:
  std::string path(const nlohmann::json& request) const;
  std::string dir_;
};

}  // namespace flagprim
