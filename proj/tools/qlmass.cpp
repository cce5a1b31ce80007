// Command-line front end: qlmass <command> --config <path> [--out <path>]
// [--format csv|json]. Exit codes: 0 success, 1 domain error, 2 usage or
// configuration error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qlm/commands.hpp"
#include "qlm/errors.hpp"

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qlm::ParseError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-local masses and horizon criteria for radial metrics"};
  app.set_version_flag("--version", std::string(qlm::tool_version()));
  app.require_subcommand(1, 1);

  std::string config_path, out_path, format = "csv";
  for (const char* name : {"masses", "horizons", "imcf", "momega", "criteria", "sweep"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON configuration file")->required();
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const auto config = qlm::parse_config(read_file(config_path));
    const auto doc = qlm::run_command(config, qlm::command_from_string(command));
    const auto text = qlm::render(doc, config,
                                  format == "json" ? qlm::Format::json : qlm::Format::csv);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kUsageError;
      }
      out << text;
    }
    return 0;
  } catch (const qlm::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsageError;
  } catch (const qlm::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
}
