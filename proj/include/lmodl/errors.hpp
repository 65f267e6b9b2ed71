#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lmodl {

/// Domain failure with a stable machine-readable kind ("PoleAtOne",
/// "Ramified", "HypothesisViolated", ...). The CLI turns these into
/// error JSON on stderr and exit code 1.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void raise(const std::string& kind, const std::string& what) {
    throw DomainError(kind, what);
}

} // namespace lmodl
