#ifndef LLSHOM_ERROR_HPP
#define LLSHOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace llshom {

/// Error with a stable machine-readable code such as "parse" or "too-large".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message) : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, int line = 0)
        : Error("parse", line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

} // namespace llshom

#endif // LLSHOM_ERROR_HPP
