#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ordline {

// Machine-readable result envelope shared by every CLI command. Key order
// is part of the contract: command, instance, property, cases, failures,
// verdict, elapsed_ms. Output is byte-identical across runs except for
// elapsed_ms.
nlohmann::ordered_json make_report(const std::string& command,
                                   const std::string& instance,
                                   const std::string& property,
                                   std::uint64_t cases,
                                   const std::vector<std::string>& failures,
                                   const std::string& verdict,
                                   std::uint64_t elapsed_ms);

// Two-space indented dump with a trailing newline.
std::string render_report(const nlohmann::ordered_json& report);

// Structural check of a rendered report: exact key sequence, field types,
// and verdict vocabulary (pass | fail | error). Returns the problems found.
std::vector<std::string> validate_report(const std::string& text);

}  // namespace ordline
