#include "pa/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>

#include "pa/error.hpp"

namespace pa {
namespace {

using nlohmann::json;

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_config, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_config, path.string() + ": " + e.what());
  }
}

}  // namespace

void parse_listen(std::string_view text, ServiceConfig& config) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw Error(Errc::invalid_config, "listen must be host:port, got " + std::string(text));
  }
  unsigned port = 0;
  const auto digits = text.substr(colon + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || port > 65535) {
    throw Error(Errc::invalid_config, "bad port in listen address: " + std::string(text));
  }
  config.listen_host = std::string(text.substr(0, colon));
  config.listen_port = static_cast<std::uint16_t>(port);
}

AnalystOptions parse_analyst_options(const json& doc) {
  AnalystOptions options;
  if (!doc.is_object()) throw Error(Errc::invalid_config, "weights document must be an object");
  if (doc.contains("weights")) {
    options.weights = parse_weights(doc.at("weights"));
    if (doc.contains("age_tolerance_years")) {
      const auto& t = doc.at("age_tolerance_years");
      if (!t.is_number() || t.get<double>() <= 0.0) {
        throw Error(Errc::invalid_config, "age_tolerance_years must be a positive number");
      }
      options.age_tolerance_years = t.get<double>();
    }
  } else {
    options.weights = parse_weights(doc);
  }
  return options;
}

AnalystOptions load_analyst_options(const std::filesystem::path& path) {
  return parse_analyst_options(read_json(path));
}

ServiceConfig parse_config(const json& doc) {
  static const std::set<std::string> kKeys{"listen",  "storage_path", "quiz_bank_path",
                                           "weights", "age_tolerance_years", "request_log"};
  if (!doc.is_object()) throw Error(Errc::invalid_config, "configuration must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (!kKeys.contains(key)) throw Error(Errc::invalid_config, "unknown configuration key: " + key);
  }
  ServiceConfig config;
  try {
    if (doc.contains("listen")) parse_listen(doc.at("listen").get<std::string>(), config);
    if (doc.contains("storage_path")) config.storage_path = doc.at("storage_path").get<std::string>();
    if (doc.contains("quiz_bank_path")) {
      config.quiz_bank_path = doc.at("quiz_bank_path").get<std::string>();
    }
    if (doc.contains("request_log")) config.request_log = doc.at("request_log").get<bool>();
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_config, e.what());
  }
  if (doc.contains("weights")) config.analyst = parse_analyst_options(doc);
  return config;
}

ServiceConfig load_config_file(const std::filesystem::path& path) {
  return parse_config(read_json(path));
}

void apply_environment(ServiceConfig& config) {
  if (const char* v = std::getenv("PA_LISTEN"); v && *v) parse_listen(v, config);
  if (const char* v = std::getenv("PA_STORAGE_PATH"); v && *v) config.storage_path = v;
  if (const char* v = std::getenv("PA_QUIZ_BANK_PATH"); v && *v) config.quiz_bank_path = v;
}

}  // namespace pa
