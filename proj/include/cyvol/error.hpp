#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace cyvol {

// Domain error with a stable machine-readable code and key/value context.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message,
          std::map<std::string, std::string> context = {})
        : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

    const std::string& code() const noexcept { return code_; }
    const std::map<std::string, std::string>& context() const noexcept { return context_; }

private:
    std::string code_;
    std::map<std::string, std::string> context_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message,
                              std::map<std::string, std::string> context = {}) {
    throw Error(std::move(code), message, std::move(context));
}

inline void require(bool ok, const std::string& code, const std::string& message,
                    std::map<std::string, std::string> context = {}) {
    if (!ok) fail(code, message, std::move(context));
}

}  // namespace cyvol
