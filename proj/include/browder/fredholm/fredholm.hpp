#pragma once

#include "browder/op/bet_operator.hpp"
#include "browder/tri.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace browder {

/// Extended natural number: finite, infinite, or "larger than a search cap" (unknown).
class ExtNat {
public:
    enum class Kind { finite, infinite, exceeds_cap };

    static ExtNat finite(std::size_t k) { return ExtNat(Kind::finite, k); }
    static ExtNat infinite() { return ExtNat(Kind::infinite, 0); }
    /// The search stopped at `cap`; exceeds_cap(0) marks a value that was not attempted.
    static ExtNat exceeds_cap(std::size_t cap) { return ExtNat(Kind::exceeds_cap, cap); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_infinite() const { return kind_ == Kind::infinite; }
    bool is_exceeds_cap() const { return kind_ == Kind::exceeds_cap; }
    /// Finite value, or the cap for exceeds_cap.
    std::size_t value() const { return value_; }

    std::string to_string() const;
    friend bool operator==(const ExtNat&, const ExtNat&) = default;

private:
    ExtNat(Kind k, std::size_t v) : kind_(k), value_(v) {}
    Kind kind_;
    std::size_t value_;
};

/// Finite + finite adds; infinite absorbs; exceeds_cap propagates otherwise.
ExtNat operator+(const ExtNat& a, const ExtNat& b);
/// Equality as a tri-state: any exceeds_cap operand makes it undecided.
Tri ext_equal(const ExtNat& a, const ExtNat& b);
Tri ext_finite(const ExtNat& a);

struct PrecisionPolicy {
    long bits = 128;
    /// Precision is doubled on undecided rank decisions until this limit.
    long max_bits = 1024;
};

struct KernelData {
    std::size_t alpha = 0;
    std::vector<ExpPolyVector> basis;
};

/// l2 kernel of a Fredholm operator in the class, with a basis of exponential-polynomial vectors.
/// Throws CircleZero / ZeroSymbol outside the Fredholm regime and PrecisionExhausted when the
/// rank cannot be certified.
KernelData kernel_data(const BetOperator& t, const PrecisionPolicy& policy = {});

/// alpha(t) only; can succeed where a basis cannot be certified.
std::size_t kernel_dimension(const BetOperator& t, const PrecisionPolicy& policy = {});

struct FredholmData {
    ExtNat alpha = ExtNat::exceeds_cap(0);
    ExtNat beta = ExtNat::exceeds_cap(0);
    std::optional<long> index;
    bool semi_fredholm = false;
    /// det of the symbol vanishes identically.
    bool degenerate_symbol = false;
    bool kernel_basis_available = false;
    std::vector<ExpPolyVector> kernel_basis;
    ExtNat ascent = ExtNat::exceeds_cap(0);
    ExtNat descent = ExtNat::exceeds_cap(0);
};

FredholmData fredholm_data(const BetOperator& t, std::size_t cap = 16, const PrecisionPolicy& policy = {});

struct AscentDescentExt {
    ExtNat ascent;
    ExtNat descent;
};

/// Ascent and descent with the index shortcuts; descent is the ascent of the adjoint.
AscentDescentExt asc_des(const BetOperator& t, std::size_t cap = 16, const PrecisionPolicy& policy = {});

}  // namespace browder
