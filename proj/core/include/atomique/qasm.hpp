#pragma once

#include "atomique/circuit.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace atomique {

class QasmError : public std::runtime_error {
public:
  QasmError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  [[nodiscard]] std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct ParsedQasm {
  Circuit circuit;
  std::vector<std::string> warnings;
};

/// Parses the OPENQASM 2.0 subset used by the benchmarks: a single qreg,
/// cregs (ignored), the standard one-qubit gates, cx/cz/swap, barrier and
/// measure (dropped with a warning). cx and swap stay as macro gates.
ParsedQasm parseQasmWithWarnings(std::string_view text);

Circuit parseQasm(std::string_view text);

Circuit readQasmFile(const std::string& path);

} // namespace atomique
