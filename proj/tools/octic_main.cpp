// Command-line front end: solve | verify | scan | plot, JSON run-configs in,
// JSON reports and CSV tables out.  Exit codes: 0 success, 1 verification
// failure, 2 usage/config error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "octic/commands.hpp"
#include "octic/run_config.hpp"

namespace {

std::string read_config_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw octic::config_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw octic::config_error("cannot open output file: " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form ground states of the radial Schrodinger equation "
               "with the degree-10 (octic) potential, with numerical verification"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  bool verify_rows = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run config ('-' reads standard input)")
        ->required();
    sub->add_option("--out", out_path, "output file (default: output_path from the config, "
                                       "else standard output)");
  };
  CLI::App* solve = app.add_subcommand("solve", "solve the constraint system for one channel");
  CLI::App* verify = app.add_subcommand("verify", "run all numerical oracles, JSON report");
  CLI::App* scan = app.add_subcommand("scan", "CSV table over channels / parameter grids");
  scan->add_flag("--verify", verify_rows, "verify every row with the full oracle suite");
  CLI::App* plot = app.add_subcommand("plot", "CSV wavefunction curve (r, R, N0 R, V_eff)");
  for (CLI::App* sub : {solve, verify, scan, plot}) add_common(sub);

  CLI11_PARSE(app, argc, argv);

  const std::string subcommand = app.get_subcommands().front()->get_name();
  try {
    octic::RunConfig cfg = octic::parse_run_config(read_config_text(config_path));
    if (!cfg.command.empty() && cfg.command != subcommand)
      throw octic::config_error("config command \"" + cfg.command +
                                "\" does not match subcommand \"" + subcommand + "\"");
    octic::CommandResult result;
    if (subcommand == "solve") result = octic::cmd_solve(cfg);
    if (subcommand == "verify") result = octic::cmd_verify(cfg);
    if (subcommand == "scan") result = octic::cmd_scan(cfg, verify_rows);
    if (subcommand == "plot") result = octic::cmd_plot(cfg);
    write_output(result.output, out_path.empty() ? cfg.output_path : out_path);
    return result.exit_code;
  } catch (const octic::config_error& err) {
    std::cerr << "config error: " << err.what() << '\n';
    return 2;
  } catch (const octic::domain_error& err) {
    std::cerr << "config error: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
