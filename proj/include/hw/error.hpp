#pragma once

#include <stdexcept>
#include <string>

namespace hw {

// Every failure carries a short machine code (e.g. "PoleAtPoint") so the CLI
// can emit a structured error object.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)), message_(what) {}
    const std::string& code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string code_, message_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

} // namespace hw
