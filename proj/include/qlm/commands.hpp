#pragma once

// Command dispatch and deterministic CSV/JSON rendering.

#include <string>
#include <variant>
#include <vector>

#include "qlm/config.hpp"

namespace qlm {

enum class Command { masses, horizons, imcf, momega, criteria, sweep };

const char* to_string(Command c);
/// Throws ValidationError for unknown names.
Command command_from_string(const std::string& name);

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Document {
  Command command = Command::masses;
  std::vector<Table> tables;  // the first table is the one sweeps collect
};

/// Domain errors propagate as qlm::Error subclasses; missing command
/// sections raise ValidationError.
Document run_command(const RunConfig& config, Command command);

enum class Format { csv, json };

std::string render(const Document& doc, const RunConfig& config, Format format);

/// Version string embedded in every output.
const char* tool_version();

}  // namespace qlm
