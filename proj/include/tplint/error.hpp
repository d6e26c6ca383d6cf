#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tplint {

// Every fallible operation throws Error with a stable machine-readable code
// (e.g. "MissingBinding", "EmptyCorpus") plus a human message. Codes are part
// of the public contract; tests match on them.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace tplint
