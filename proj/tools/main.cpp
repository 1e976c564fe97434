#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "sublink/cli.hpp"
#include "sublink/server.hpp"

namespace {

std::string slurp(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json read_json(const std::string& file) { return nlohmann::json::parse(slurp(file)); }

int default_port() {
  if (const char* p = std::getenv("PORT")) return std::atoi(p);
  return 8080;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof by subformula linking"};
  app.require_subcommand(1);

  auto* serve = app.add_subcommand("serve", "Start the HTTP API");
  int port = default_port();
  std::string host = "127.0.0.1";
  std::string persist;
  serve->add_option("--port", port, "Port (default $PORT or 8080)");
  serve->add_option("--host", host, "Address to bind")->capture_default_str();
  serve->add_option("--persist", persist, "Directory for session snapshots");

  auto* check = app.add_subcommand("check", "Replay a trace and check its final goal count");
  std::string trace_file;
  check->add_option("trace", trace_file)->required()->check(CLI::ExistingFile);

  auto* run = app.add_subcommand("run", "Replay a script against a problem and print the state");
  std::string problem_file, script_file;
  run->add_option("problem", problem_file)->required()->check(CLI::ExistingFile);
  run->add_option("--script", script_file)->required()->check(CLI::ExistingFile);

  auto* cands = app.add_subcommand("candidates", "Classify linkages between two selections");
  std::string src, dst;
  int goal = 1;
  cands->add_option("problem", problem_file)->required()->check(CLI::ExistingFile);
  cands->add_option("--src", src, "item or item:path, path as 0,1")->required();
  cands->add_option("--dst", dst, "item (all paths) or item:path")->required();
  cands->add_option("--goal", goal)->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Check the problem in all small finite models");
  int domain = 2;
  oracle->add_option("problem", problem_file)->required()->check(CLI::ExistingFile);
  oracle->add_option("--max-domain", domain)->capture_default_str()->check(CLI::Range(1, 3));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return sublink::cli::check(read_json(trace_file), std::cout);
    if (*run) return sublink::cli::run(slurp(problem_file), read_json(script_file), std::cout);
    if (*cands) return sublink::cli::candidates(slurp(problem_file), goal, src, dst, std::cout);
    if (*oracle) return sublink::cli::oracle(slurp(problem_file), domain, std::cout);
    if (*serve) {
      std::optional<std::filesystem::path> dir;
      if (!persist.empty()) dir = persist;
      sublink::SessionStore store(dir);
      httplib::Server server;
      sublink::install_routes(server, store);
      std::cout << "listening on " << host << ":" << port << std::endl;
      if (!server.listen(host, port)) {
        std::cerr << "cannot listen on " << host << ":" << port << "\n";
        return 2;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
