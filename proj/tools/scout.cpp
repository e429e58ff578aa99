// scout: offline runs, the HTTP service and run reports.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "scout/scout.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct PathOverrides {
  std::string config;
  std::string corpus;
  std::string web_fixtures;
  std::string taxonomy;
  std::optional<std::uint64_t> seed;
};

void add_overrides(CLI::App* cmd, PathOverrides& o) {
  cmd->add_option("--config", o.config, "run config JSON")->check(CLI::ExistingFile);
  cmd->add_option("--corpus", o.corpus, "patent corpus (JSON lines)")->check(CLI::ExistingFile);
  cmd->add_option("--web-fixtures", o.web_fixtures, "web fixture page directory")->check(CLI::ExistingDirectory);
  cmd->add_option("--taxonomy", o.taxonomy, "taxonomy JSON")->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "run seed");
}

scout::RunConfig build_config(const PathOverrides& o) {
  scout::RunConfig config = o.config.empty() ? scout::RunConfig{} : scout::RunConfig::load(o.config);
  if (!o.corpus.empty()) config.paths.corpus = o.corpus;
  if (!o.web_fixtures.empty()) config.paths.web_fixtures = o.web_fixtures;
  if (!o.taxonomy.empty()) config.paths.taxonomy = o.taxonomy;
  if (o.seed) config.seed = *o.seed;
  config.providers = scout::selection_from_env(config.providers);
  return config;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_run(const PathOverrides& o, const std::string& problem_path, const std::string& out) {
  scout::RunConfig config = build_config(o);
  for (const auto& [path, what] : {std::pair{config.paths.corpus, "--corpus"},
                                   std::pair{config.paths.web_fixtures, "--web-fixtures"},
                                   std::pair{config.paths.taxonomy, "--taxonomy"}}) {
    if (path.empty() || !fs::exists(path)) {
      std::cerr << "error: " << what << " is required (flag or config paths) and must exist\n";
      return kExitUsage;
    }
  }
  const fs::path out_dir = fs::absolute(out);
  if (fs::exists(out_dir)) {
    std::cerr << "error: --out " << out_dir << " already exists\n";
    return kExitUsage;
  }
  const auto problem = scout::make_problem(read_file(problem_path));
  const auto result =
      scout::execute_run(problem, config, out_dir.parent_path(), out_dir.filename().string());
  if (!result.output) {
    const auto& e = *result.state.error();
    std::cerr << "run failed at stage " << e.stage << ": " << e.message << "\n";
    return kExitFailure;
  }
  std::cout << "run complete: " << result.directory.string() << "\n";
  return kExitOk;
}

int cmd_serve(const PathOverrides& o, const std::string& addr, std::string data_dir) {
  if (data_dir.empty()) {
    if (const char* env = std::getenv("SCOUT_DATA_DIR")) data_dir = env;
  }
  if (data_dir.empty()) {
    std::cerr << "error: --data or SCOUT_DATA_DIR is required\n";
    return kExitUsage;
  }
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) {
    std::cerr << "error: --addr must be host:port\n";
    return kExitUsage;
  }
  const std::string host = addr.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(addr.substr(colon + 1));
  } catch (const std::exception&) {
    std::cerr << "error: invalid port in --addr\n";
    return kExitUsage;
  }

  scout::ScoutService service(scout::ServiceOptions{data_dir, build_config(o), {}});
  httplib::Server server;
  service.bind(server);
  std::cout << "serving on " << host << ":" << port << " (data " << data_dir << ")\n" << std::flush;
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot listen on " << addr << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Technology scouting pipeline"};
  app.require_subcommand(1);

  PathOverrides run_opts;
  std::string problem_path;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "execute one pipeline run");
  run->add_option("--problem", problem_path, "problem statement text file")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "run directory to create")->required();
  add_overrides(run, run_opts);

  PathOverrides serve_opts;
  std::string addr = "127.0.0.1:8080";
  std::string data_dir;
  auto* serve = app.add_subcommand("serve", "start the HTTP service");
  serve->add_option("--addr", addr, "host:port to bind");
  serve->add_option("--data", data_dir, "run data directory (default $SCOUT_DATA_DIR)");
  add_overrides(serve, serve_opts);

  std::string run_dir;
  auto* report = app.add_subcommand("report", "summarize a run directory");
  report->add_option("--run", run_dir, "run directory")->required()->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return cmd_run(run_opts, problem_path, out_dir);
    if (*serve) return cmd_serve(serve_opts, addr, data_dir);
    const auto r = scout::report_run(run_dir);
    (r.exit_code == 0 ? std::cout : std::cerr) << r.text;
    return r.exit_code;
  } catch (const scout::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == scout::ErrorCode::config ? kExitUsage : kExitFailure;
  }
}
