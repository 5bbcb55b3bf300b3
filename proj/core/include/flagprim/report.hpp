#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

namespace flagprim {

struct ReportOptions {
  int samples = 20;
  std::uint64_t seed = 42;
};

// recomputes one of the four printed tables and reports entry-by-entry agreement
nlohmann::json verify_table(int table, const ReportOptions& opt = {});

}  // namespace flagprim
