#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace skb {

// Structural validation failure. `kind` is a stable machine-readable tag
// ("NotAGroup", "BraceLawViolation", "InvalidCocycle", ...); `witness` holds
// the offending indices when a counterexample exists (-1 = unused slot).
class validation_error : public std::runtime_error {
public:
    validation_error(std::string kind, const std::string& what,
                     std::array<int, 3> witness = {-1, -1, -1})
        : std::runtime_error(what), kind_(std::move(kind)), witness_(witness) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::array<int, 3>& witness() const noexcept { return witness_; }

private:
    std::string kind_;
    std::array<int, 3> witness_;
};

// A computation would exceed the configured budget (class count, order cap,
// system size). Callers may retry with a larger budget.
class too_large_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independently computed values disagree. This is a bug trap, not a user
// error: it fires when a certified invariant fails to certify.
class inconsistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Builder-spec or JSON input could not be parsed.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace skb
