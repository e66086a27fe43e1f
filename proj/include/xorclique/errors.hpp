#pragma once

#include <stdexcept>
#include <string>

namespace xorclique {

/// Library error carrying a stable machine-readable code alongside the
/// human-readable message. Codes are documented in the README and are what
/// the CLI prints on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void raise(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace xorclique
