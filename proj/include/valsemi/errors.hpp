#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace valsemi {

/// Base class of everything this library throws.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic or comparison across different value-group variants.
class mixed_variant_error : public error {
public:
    using error::error;
};

/// A tau prefix too short to decide a comparison that must be decided.
class insufficient_precision_error : public error {
public:
    using error::error;
};

/// Quad-variant comparison attempted without a tau oracle.
class missing_tau_error : public error {
public:
    using error::error;
};

/// Empty or non-positive continued-fraction prefix for tau.
class tau_error : public error {
public:
    using error::error;
};

/// Hirzebruch-Jung evaluation hit 1/0 (degenerate trailing terms).
class zero_denominator_error : public error {
public:
    using error::error;
};

/// Classification invariants match no row of the type table.
class no_matching_row_error : public error {
public:
    using error::error;
};

/// Operation defined only for non-divisorial (or non-type-0) data.
class divisorial_unsupported_error : public error {
public:
    using error::error;
};

/// Type 1 enumeration or expansion without a usable completeness certificate.
class missing_next_beta_bound_error : public error {
public:
    using error::error;
};

/// Truncation bound malformed or incompatible with the value-group variant.
class bound_error : public error {
public:
    using error::error;
};

/// Two series truncations with different bounds cannot be diffed.
class bound_mismatch_error : public error {
public:
    using error::error;
};

/// Malformed text: value encodings, spec documents, CLI bound strings.
class parse_error : public error {
public:
    using error::error;
};

/// Spec document contains a key outside the schema.
class unknown_key_error : public parse_error {
public:
    using parse_error::parse_error;
};

/// qs and pieces are both present but piece simplification does not reproduce qs.
class qs_pieces_conflict_error : public parse_error {
public:
    using parse_error::parse_error;
};

enum class violation_code {
    bad_qs_length,
    bad_q_value,
    bad_beta_count,
    bad_beta_variant,
    non_positive_beta,
    missing_tau,
    type_mismatch,
    bad_field,
};

struct spec_violation {
    violation_code code;
    std::string message;
};

/// Validation failure; carries every violation found, not just the first.
class spec_error : public error {
public:
    explicit spec_error(std::vector<spec_violation> violations)
        : error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<spec_violation>& violations() const { return violations_; }

    bool has(violation_code code) const {
        for (const auto& v : violations_)
            if (v.code == code) return true;
        return false;
    }

private:
    static std::string join(const std::vector<spec_violation>& violations) {
        std::string out = "invalid valuation spec:";
        for (const auto& v : violations) {
            out += "\n  - ";
            out += v.message;
        }
        return out;
    }

    std::vector<spec_violation> violations_;
};

}  // namespace valsemi
