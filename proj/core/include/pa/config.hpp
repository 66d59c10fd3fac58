#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "pa/analyst.hpp"

namespace pa {

/// Service/CLI configuration (keys documented in docs/configuration.md).
struct ServiceConfig {
  std::string listen_host = "127.0.0.1";
  std::uint16_t listen_port = 8080;
  std::filesystem::path storage_path = "pa-data";
  std::optional<std::filesystem::path> quiz_bank_path;  // default bank when unset
  AnalystOptions analyst;
  bool request_log = true;
};

/// Throws Error(invalid_config).
ServiceConfig parse_config(const nlohmann::json& doc);
ServiceConfig load_config_file(const std::filesystem::path& path);

/// Overrides from PA_LISTEN ("host:port"), PA_STORAGE_PATH and PA_QUIZ_BANK_PATH.
void apply_environment(ServiceConfig& config);

/// Parses "host:port"; throws Error(invalid_config).
void parse_listen(std::string_view text, ServiceConfig& config);

/// A weights document: either a bare weights object or a config with a "weights" key
/// (and optional "age_tolerance_years").
AnalystOptions parse_analyst_options(const nlohmann::json& doc);
AnalystOptions load_analyst_options(const std::filesystem::path& path);

}  // namespace pa
