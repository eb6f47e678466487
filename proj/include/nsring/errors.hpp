#pragma once

#include <stdexcept>
#include <string>

namespace nsring {

/// Base class for everything this library throws on bad input.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_generators : error {
    empty_generators() : error("generator list is empty") {}
};

struct not_coprime : error {
    explicit not_coprime(long long g)
        : error("gcd of generators is " + std::to_string(g) +
                "; not a numerical semigroup") {}
};

struct exponent_not_in_semigroup : error {
    explicit exponent_not_in_semigroup(long long x)
        : error("exponent " + std::to_string(x) + " is not in the semigroup") {}
};

struct shift_not_in_semigroup : error {
    explicit shift_not_in_semigroup(long long c)
        : error("shift " + std::to_string(c) + " is not in the semigroup") {}
};

struct parent_mismatch : error {
    parent_mismatch() : error("ideals live over different semigroups") {}
};

struct not_subideal : error {
    not_subideal() : error("second ideal is not contained in the first") {}
};

struct invalid_ideal : error {
    explicit invalid_ideal(const std::string& what) : error("invalid ideal: " + what) {}
};

struct unit_ideal : error {
    unit_ideal() : error("ideal is the whole ring; expected a proper ideal") {}
};

struct cap_exceeded : error {
    explicit cap_exceeded(long long cap)
        : error("reduction iteration did not stabilize within cap " +
                std::to_string(cap) + " (engine bug)") {}
};

/// Two routes that must agree did not; this is always an engine bug
/// and maps to exit status 3 in the CLI.
struct internal_inconsistency : error {
    explicit internal_inconsistency(const std::string& what)
        : error("internal inconsistency: " + what) {}
};

struct profile_mismatch : error {
    explicit profile_mismatch(const std::string& what)
        : error("profile mismatch: " + what) {}
};

struct unclassified_case : error {
    explicit unclassified_case(const std::string& what)
        : error("no case of the classification covers this instance: " + what) {}
};

struct constraint_violation : error {
    explicit constraint_violation(const std::string& what)
        : error("family constraint violated: " + what) {}
};

}  // namespace nsring
