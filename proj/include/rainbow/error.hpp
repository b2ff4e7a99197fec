#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Contract violations (bad inputs, guard overruns) are thrown as Error.
// Search failures are ordinary return values, never exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

} // namespace rainbow
