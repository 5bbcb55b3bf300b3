#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

#include "flagprim/chars.hpp"
#include "flagprim/flagorbit.hpp"
#include "flagprim/io.hpp"
#include "flagprim/primcheck.hpp"
#include "flagprim/quiver.hpp"
#include "flagprim/report.hpp"
#include "flagprim/sep.hpp"
#include "trace_data.hpp"

using namespace flagprim;
using json = nlohmann::json;

namespace {

constexpr int kDefinite = 0;
constexpr int kUsage = 1;
constexpr int kUnknown = 2;

struct Outcome {
  json result;
  int code = kDefinite;
};

int status_code(Status s) {
  return s == Status::Unknown ? kUnknown : kDefinite;
}

std::shared_ptr<const RootSystem> system_for(const std::string& type) {
  return root_system(SimpleType::parse(type));
}

void check_length(const RootSystem& R, const Weight& w, const std::string& what) {
  if (static_cast<int>(w.size()) != R.rank())
    throw std::invalid_argument(what + " has " + std::to_string(w.size()) + " coordinates, type " + R.type().name() +
                                " needs " + std::to_string(R.rank()));
}

std::vector<Weight> weights_for(const RootSystem& R, const std::string& s) {
  auto ws = parse_weights(s);
  for (const auto& w : ws) check_length(R, w, "weight '" + format_weight(w) + "'");
  return ws;
}

// option values of the selected subcommand chain, for cache keys
json request_of(const CLI::App& app) {
  json args = json::object();
  const CLI::App* cur = &app;
  std::string path;
  while (cur) {
    for (const auto* opt : cur->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "--cache-dir" ||
          opt->get_name() == "--workers" || opt->get_name() == "--no-cache")
        continue;
      args[opt->get_name()] = opt->results();
    }
    auto subs = cur->get_subcommands();
    cur = subs.empty() ? nullptr : subs.front();
    if (cur) path += (path.empty() ? "" : " ") + cur->get_name();
  }
  return {{"command", path}, {"args", args}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagprim: primitive tuples of dominant weights"};
  app.require_subcommand(1);

  RunConfig cfg;
  try {
    cfg.apply_env();
  } catch (const std::exception& e) {
    std::cout << json{{"error", std::string("environment: ") + e.what()}}.dump() << "\n";
    return kUsage;
  }
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--samples", cfg.sample_count, "samples for randomized oracles")->capture_default_str();
  app.add_option("--budget-ms", cfg.time_budget_ms, "time budget per search in milliseconds")->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "directory for cached results and characters");
  app.add_option("--workers", cfg.workers, "worker threads")->capture_default_str();
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "ignore the cache directory");

  std::function<Outcome()> action;
  auto budget = [&] { return std::chrono::milliseconds(cfg.time_budget_ms); };
  auto check_options = [&](int bound) {
    CheckOptions o;
    o.search_bound = bound;
    o.samples = cfg.sample_count;
    o.seed = cfg.seed;
    o.budget = budget();
    return o;
  };

  // decompose
  std::string type, l_str, r_str, factors_str, weights_str, mu_str, gamma_str, indices_str, supports_str;
  int bound = -1;
  auto* dec = app.add_subcommand("decompose", "tensor product decomposition");
  dec->add_option("--type", type, "simple type, e.g. E6")->required();
  dec->add_option("--l", l_str, "left weight");
  dec->add_option("--r", r_str, "right weight");
  dec->add_option("--factors", factors_str, "tuple of weights separated by ';'");
  dec->callback([&] {
    action = [&]() -> Outcome {
      auto R = system_for(type);
      std::vector<Weight> fs;
      if (!factors_str.empty()) {
        fs = weights_for(*R, factors_str);
      } else {
        if (l_str.empty() || r_str.empty()) throw std::invalid_argument("decompose needs --l and --r, or --factors");
        fs = {parse_weight(l_str), parse_weight(r_str)};
        for (const auto& w : fs) check_length(*R, w, "weight");
      }
      auto m = tensor_decompose(*R, fs);
      Integer product = 1;
      for (const auto& f : fs) product *= weyl_dim(*R, f);
      return {{{"type", R->type().name()},
               {"factors", fs},
               {"summands", to_json(m)},
               {"dimension", {{"product", product.get_str()}, {"sum", module_dimension(*R, m).get_str()}}}}};
    };
  });

  auto* lr = app.add_subcommand("lr", "multiplicity of one module in a tensor product");
  lr->add_option("--type", type)->required();
  lr->add_option("--factors", factors_str, "tuple of weights separated by ';'")->required();
  lr->add_option("--mu", mu_str, "target weight (default 0)");
  lr->callback([&] {
    action = [&]() -> Outcome {
      auto R = system_for(type);
      auto fs = weights_for(*R, factors_str);
      Weight mu = mu_str.empty() ? Weight(R->rank(), 0) : parse_weight(mu_str);
      check_length(*R, mu, "mu");
      return {{{"type", R->type().name()}, {"factors", fs}, {"mu", mu}, {"value", lr_coefficient(*R, fs, mu)}}};
    };
  });

  auto* prim = app.add_subcommand("prim", "primitivity verdicts");
  prim->require_subcommand(1);
  auto* pcheck = prim->add_subcommand("check", "is the tuple primitive (at mu)");
  pcheck->add_option("--type", type)->required();
  pcheck->add_option("--weights", weights_str)->required();
  pcheck->add_option("--mu", mu_str, "check primitivity at this weight");
  pcheck->add_option("--bound", bound, "witness search bound on the sum of scalings");
  pcheck->callback([&] {
    action = [&]() -> Outcome {
      auto R = system_for(type);
      auto ws = weights_for(*R, weights_str);
      auto o = check_options(bound > 0 ? bound : cfg.search_bound);
      Verdict v;
      bool replayed;
      if (mu_str.empty()) {
        v = check_primitive(*R, ws, o);
        replayed = replay_primitive(*R, ws, v);
      } else {
        Weight mu = parse_weight(mu_str);
        check_length(*R, mu, "mu");
        v = check_primitive_at(*R, ws, mu, o);
        replayed = replay_primitive_at(*R, ws, mu, v);
      }
      json j = to_json(v);
      j["replayed"] = replayed;
      return {j, status_code(v.status)};
    };
  });
  auto* pbounds = prim->add_subcommand("bounds", "bounds on the longest primitive tuple");
  pbounds->add_option("--type", type)->required();
  pbounds->callback([&] {
    action = [&]() -> Outcome {
      auto R = system_for(type);
      auto b = prim_lower_bounds(*R);
      json j{{"type", R->type().name()}, {"lower", b.lower}, {"upper_weyl", b.upper_weyl}, {"exact", b.exact()}};
      if (b.upper_sep > 0) j["upper_sep"] = b.upper_sep;
      return {j};
    };
  });

  auto* inv = app.add_subcommand("invfree", "invariant-freeness verdict");
  inv->add_option("--type", type)->required();
  inv->add_option("--weights", weights_str)->required();
  inv->add_option("--bound", bound);
  inv->callback([&] {
    action = [&]() -> Outcome {
      auto R = system_for(type);
      auto ws = weights_for(*R, weights_str);
      auto v = check_invariant_free(*R, ws, check_options(bound > 0 ? bound : cfg.search_bound));
      json j = to_json(v);
      j["replayed"] = replay_invariant_free(*R, ws, v);
      return {j, status_code(v.status)};
    };
  });

  bool want_witness = false;
  auto* st = app.add_subcommand("stable", "stability verdict (yes or unknown)");
  st->add_option("--type", type)->required();
  st->add_option("--weights", weights_str)->required();
  st->add_flag("--witness", want_witness, "also build a closed-orbit witness from separating chambers");
  st->callback([&] {
    action = [&]() -> Outcome {
      auto R = system_for(type);
      auto ws = weights_for(*R, weights_str);
      auto v = check_stable(*R, ws);
      json j = to_json(v);
      j["replayed"] = replay_stable(*R, ws, v);
      if (want_witness) {
        auto w = stable_witness_point(*R, ws);
        json wj{{"applicable", w.applicable}, {"verified", w.verified}, {"reason", w.reason}};
        if (w.applicable) {
          wj["elements"] = json::array();
          for (const auto& e : w.elements) wj["elements"].push_back(e.word);
          wj["points"] = w.points;
        }
        j["witness"] = wj;
      }
      return {j, status_code(v.status)};
    };
  });

  int qd = 0, qn = 0;
  auto* quiver = app.add_subcommand("quiver", "star quiver computations");
  quiver->require_subcommand(1);
  auto* qcanon = quiver->add_subcommand("canon", "canonical decomposition");
  qcanon->add_option("--d", qd, "number of arms")->required();
  qcanon->add_option("--gamma", gamma_str, "dimension vector, centre first")->required();
  qcanon->callback([&] {
    action = [&]() -> Outcome {
      auto g = parse_int_list(gamma_str);
      return {{{"d", qd}, {"gamma", g}, {"decomposition", to_json(canonical_decomposition(qd, g, cfg.seed))}}};
    };
  });
  auto* qprim = quiver->add_subcommand("prim", "primitivity of fundamental weights of SL_n");
  qprim->add_option("--n", qn)->required();
  qprim->add_option("--indices", indices_str, "fundamental weight indices")->required();
  qprim->callback([&] {
    action = [&]() -> Outcome {
      auto idx = parse_int_list(indices_str);
      DimVector g{qn};
      g.insert(g.end(), idx.begin(), idx.end());
      bool p = is_primitive_sln_fund(qn, idx);
      auto dec = canonical_decomposition(static_cast<int>(idx.size()), g, cfg.seed);
      return {{{"n", qn}, {"indices", idx}, {"primitive", p}, {"decomposition", to_json(dec)}}};
    };
  });
  auto* qoracle = quiver->add_subcommand("oracle", "sampled open-orbit test");
  qoracle->add_option("--d", qd)->required();
  qoracle->add_option("--gamma", gamma_str)->required();
  qoracle->callback([&] {
    action = [&]() -> Outcome {
      auto g = parse_int_list(gamma_str);
      auto r = open_orbit_oracle(qd, g, cfg.sample_count, cfg.seed);
      return {{{"d", qd}, {"gamma", g}, {"result", to_json(r)}}, r.open ? kDefinite : kUnknown};
    };
  });

  auto* flags = app.add_subcommand("flags", "open orbits on products of flag varieties");
  flags->require_subcommand(1);
  auto* fopen = flags->add_subcommand("open", "sampled open-orbit test");
  fopen->add_option("--type", type)->required();
  fopen->add_option("--supports", supports_str, "supports separated by '|'")->required();
  fopen->callback([&] {
    action = [&]() -> Outcome {
      auto R = system_for(type);
      auto r = open_orbit_flags(*R, parse_supports(supports_str), cfg.sample_count, cfg.seed);
      return {to_json(r), r.status == OrbitStatus::ProbablyNotOpen ? kUnknown : kDefinite};
    };
  });

  int dihedral = 0;
  auto* sep = app.add_subcommand("sep", "separation index");
  auto* sep_type = sep->add_option("--type", type);
  auto* sep_dih = sep->add_option("--dihedral", dihedral, "order p of the dihedral group I2(p)");
  sep_type->excludes(sep_dih);
  sep->callback([&] {
    action = [&]() -> Outcome {
      if (dihedral > 0) {
        auto r = sep_index_dihedral(dihedral);
        return {{{"value", r.value}, {"arcs", r.arcs}, {"dihedral", dihedral}}};
      }
      if (type.empty()) throw std::invalid_argument("sep needs --type or --dihedral");
      auto R = system_for(type);
      SepOptions o;
      o.budget = budget();
      o.workers = cfg.workers;
      auto r = sep_index(*R, o);
      json j = to_json(r);
      j["type"] = R->type().name();
      j["verified"] = verify_separating(*R, r.certificate.chambers);
      return {j, r.exact ? kDefinite : kUnknown};
    };
  });

  int table = 0;
  auto* tables = app.add_subcommand("tables", "printed tables and traceability");
  tables->require_subcommand(1);
  auto* tverify = tables->add_subcommand("verify", "recompute a printed table");
  tverify->add_option("--table", table)->required()->check(CLI::Range(1, 4));
  tverify->callback([&] {
    action = [&]() -> Outcome {
      ReportOptions o;
      o.samples = cfg.sample_count;
      o.seed = cfg.seed;
      return {verify_table(table, o)};
    };
  });
  auto* ttrace = tables->add_subcommand("trace", "map printed results to operations and tests");
  ttrace->callback([&] {
    action = [&]() -> Outcome { return {json::parse(kTraceabilityJson)}; };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    cfg.validate();
    if (no_cache) cfg.cache_dir.clear();
    CharCacheOptions co;
    co.disk_dir = cfg.cache_dir.empty() ? "" : cfg.cache_dir + "/characters";
    set_char_cache_options(co);

    ResultCache cache(cfg.cache_dir);
    json request = request_of(app);
    request["config"] = {{"seed", cfg.seed}, {"samples", cfg.sample_count}, {"budget_ms", cfg.time_budget_ms},
                         {"search_bound", cfg.search_bound}};
    Outcome out;
    if (auto hit = cache.get(request)) {
      out.result = hit->at("result");
      out.code = hit->at("code").get<int>();
    } else {
      out = action();
      cache.put(request, {{"result", out.result}, {"code", out.code}});
    }
    std::cout << out.result.dump() << "\n";
    return out.code;
  } catch (const std::invalid_argument& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cout << json{{"error", std::string("internal: ") + e.what()}}.dump() << "\n";
    return kUsage;
  }
}
