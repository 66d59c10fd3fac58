// analyst: corpus generator, batch matcher and local API server.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pa/config.hpp"
#include "pa/date.hpp"
#include "pa/embedded_store.hpp"
#include "pa/error.hpp"
#include "pa/http_server.hpp"
#include "pa/snapshot.hpp"
#include "pa/synth.hpp"

namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw pa::Error(pa::Errc::io_error, "cannot write " + path.string());
  out << text;
  if (!out.flush()) throw pa::Error(pa::Errc::io_error, "write failed: " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pa::Error(pa::Errc::io_error, "cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct GenArgs {
  pa::synth::GenConfig config;
  std::string as_of;
  fs::path out = "corpus.ndjson";
};

struct MatchArgs {
  fs::path snapshot = "corpus.ndjson";
  std::optional<fs::path> weights;
  std::string as_of;
  fs::path out = "report";
};

struct ReportArgs {
  fs::path input = "report.json";
  bool json = false;
};

struct ServeArgs {
  std::optional<fs::path> config_file;
  std::optional<std::string> listen;
  std::optional<fs::path> storage;
  std::optional<fs::path> weights;
  std::optional<fs::path> quiz_bank;
  std::optional<fs::path> import;
  bool quiet = false;
};

int run_gen(GenArgs& args) {
  if (!args.as_of.empty()) args.config.as_of = pa::parse_date(args.as_of);
  const auto snapshot = pa::synth::generate(args.config);
  pa::write_snapshot_file(snapshot, args.out);
  std::cout << "wrote " << snapshot.records.size() << " records to " << args.out.string()
            << " (digest " << snapshot.digest << ")\n";
  return 0;
}

int run_match(const MatchArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  pa::AnalystOptions options;
  if (args.weights) options = pa::load_analyst_options(*args.weights);
  const auto corpus = pa::synth::load_corpus(pa::read_snapshot_file(args.snapshot));
  const pa::Date as_of = args.as_of.empty() ? pa::synth::GenConfig{}.as_of : pa::parse_date(args.as_of);
  const auto report = pa::synth::batch_match(corpus, options, as_of);

  fs::path txt = args.out, js = args.out;
  txt += ".txt";
  js += ".json";
  write_text(txt, pa::synth::render_text(report));
  write_text(js, pa::synth::report_to_json(report).dump(2) + "\n");
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started).count();
  std::cout << "jobs=" << report.open_job_count << " survivors=" << report.survivor_count
            << " elapsed_ms=" << ms << "\nwrote " << txt.string() << " and " << js.string() << '\n';
  return 0;
}

int run_report(const ReportArgs& args) {
  const auto doc = nlohmann::json::parse(read_text(args.input));
  const auto report = pa::synth::report_from_json(doc);
  if (args.json) {
    std::cout << pa::synth::report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << pa::synth::render_text(report);
  }
  return 0;
}

int run_serve(const ServeArgs& args) {
  pa::ServiceConfig config = args.config_file ? pa::load_config_file(*args.config_file) : pa::ServiceConfig{};
  pa::apply_environment(config);
  if (args.listen) pa::parse_listen(*args.listen, config);
  if (args.storage) config.storage_path = args.storage->string();
  if (args.quiz_bank) config.quiz_bank_path = args.quiz_bank->string();
  if (args.weights) config.analyst = pa::load_analyst_options(*args.weights);
  if (args.quiet) config.request_log = false;

  auto store = pa::EmbeddedStore::open(config.storage_path);
  if (args.import) {
    if (store->size() != 0) {
      throw pa::Error(pa::Errc::non_empty_target, "storage is not empty; refusing --import");
    }
    pa::import_snapshot(*store, pa::read_snapshot_file(*args.import));
  }
  pa::api::Service service(*store, config);
  pa::api::HttpServer server(service, config.request_log);
  const int port = server.bind(config.listen_host, config.listen_port);
  std::cerr << "listening on " << config.listen_host << ':' << port << '\n';
  server.run();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Profile analyst: synthetic corpora, batch matching and the local API server"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a deterministic synthetic corpus snapshot");
  gen_cmd->add_option("--seed", gen.config.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--candidates", gen.config.candidate_count, "Candidate count")->capture_default_str();
  gen_cmd->add_option("--jobs", gen.config.job_count, "Job count")->capture_default_str();
  gen_cmd->add_option("--employers", gen.config.employer_count, "Employer count")->capture_default_str();
  gen_cmd->add_option("--skills", gen.config.skill_count, "Skill catalog size")->capture_default_str();
  gen_cmd->add_option("--salary-floor", gen.config.salary_floor, "Lowest generated salary")->capture_default_str();
  gen_cmd->add_option("--salary-ceiling", gen.config.salary_ceiling, "Highest generated salary")->capture_default_str();
  gen_cmd->add_option("--closed-fraction", gen.config.closed_job_fraction, "Share of closed jobs")->capture_default_str();
  gen_cmd->add_option("--quiz-fraction", gen.config.quiz_taken_fraction, "Share of candidates with a quiz result")->capture_default_str();
  gen_cmd->add_option("--as-of", gen.as_of, "Reference date YYYY-MM-DD (default 2025-01-01)");
  gen_cmd->add_option("-o,--out", gen.out, "Snapshot output path")->capture_default_str();

  MatchArgs match;
  auto* match_cmd = app.add_subcommand("match", "Rank candidates for every open job in a snapshot");
  match_cmd->add_option("-s,--snapshot", match.snapshot, "Snapshot to import")->capture_default_str();
  match_cmd->add_option("-w,--weights", match.weights, "Weights JSON file");
  match_cmd->add_option("--as-of", match.as_of, "Scoring date YYYY-MM-DD (default 2025-01-01)");
  match_cmd->add_option("-o,--out", match.out, "Report path stem; writes <stem>.txt and <stem>.json")->capture_default_str();

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Render a JSON ranking report as text");
  report_cmd->add_option("input", report.input, "Report JSON file")->capture_default_str();
  report_cmd->add_flag("--json", report.json, "Re-emit normalized JSON instead of text");

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API against a local store");
  serve_cmd->add_option("-c,--config", serve.config_file, "Service config JSON");
  serve_cmd->add_option("-l,--listen", serve.listen, "Listen address host:port");
  serve_cmd->add_option("--storage", serve.storage, "Storage directory");
  serve_cmd->add_option("-w,--weights", serve.weights, "Weights JSON file");
  serve_cmd->add_option("--quiz-bank", serve.quiz_bank, "Quiz bank JSON file");
  serve_cmd->add_option("--import", serve.import, "Load a snapshot into an empty store first");
  serve_cmd->add_flag("-q,--quiet", serve.quiet, "Disable request logging");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*match_cmd) return run_match(match);
    if (*report_cmd) return run_report(report);
    if (*serve_cmd) return run_serve(serve);
  } catch (const pa::Error& e) {
    std::cerr << "analyst: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "analyst: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
