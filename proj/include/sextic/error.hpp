#pragma once

#include <stdexcept>
#include <string>

namespace sextic {

/// Structured rejection: `code` is a stable machine tag, what() a sentence.
class AnalyzerError : public std::runtime_error {
public:
    AnalyzerError(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace sextic
