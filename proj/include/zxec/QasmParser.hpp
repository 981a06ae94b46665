#pragma once

#include "zxec/Circuit.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace zx {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line(line), col(col) {}
    std::size_t line;
    std::size_t col;
};

/// Parses an OpenQASM 2.0 program into a Circuit. Multiple quantum registers
/// flatten in declaration order; `// i` and `// o` comments populate the
/// initial layout and output permutation; trailing measurements are dropped
/// with a warning on `warnings`.
Circuit parseQasm(const std::string& text, std::ostream* warnings = nullptr);

/// parseQasm on a file's contents.
Circuit parseQasmFile(const std::string& path, std::ostream* warnings = nullptr);

} // namespace zx
