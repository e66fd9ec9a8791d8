#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammaforge {

/// Default cap on exhaustive enumerations (hom sets, tuple assignments,
/// plasma levels). Every operation that enumerates takes a guard parameter
/// defaulting to this.
inline constexpr std::size_t kDefaultGuard = 1'000'000;

/// A precondition or input was violated (bad partition, mismatched objects,
/// non-closed subobject, corrupt action table, ...).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its size guard.
struct guard_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A query needs a level above the truncation bound of the Γ-set.
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Outcome of a structural validation pass. Violations are human-readable,
/// one line each, in deterministic order.
struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string v) { violations.push_back(std::move(v)); }

    std::string to_string() const {
        if (ok()) return "ok";
        std::string out;
        for (const auto& v : violations) {
            out += v;
            out += '\n';
        }
        return out;
    }
};

}  // namespace gammaforge
