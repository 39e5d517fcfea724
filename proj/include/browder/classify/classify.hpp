#pragma once

#include "browder/fredholm/fredholm.hpp"
#include "browder/tri.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace browder {

/// Membership of an operator in each class of the Fredholm/Browder taxonomy.
struct OperatorClass {
    Tri invertible = Tri::undecided;
    Tri left_invertible = Tri::undecided;
    Tri right_invertible = Tri::undecided;
    Tri fredholm = Tri::undecided;
    Tri weyl = Tri::undecided;
    Tri left_semi_fredholm = Tri::undecided;
    Tri right_semi_fredholm = Tri::undecided;
    Tri browder = Tri::undecided;
    Tri left_semi_browder = Tri::undecided;
    Tri right_semi_browder = Tri::undecided;
    /// asc = des < infinity.
    Tri drazin_flag = Tri::undecided;

    bool all_decided() const;
    /// (name, value) pairs in a fixed order.
    std::vector<std::pair<std::string, Tri>> flags() const;
};

OperatorClass classify_from(const FredholmData& fd);
OperatorClass classify(const BetOperator& t, std::size_t cap = 16, const PrecisionPolicy& policy = {});

enum class SpectrumName { sigma, l, r, e, w, le, re, b, lb, rb };

/// Parses "sigma", "l", "r", "e", "w", "le", "re", "b", "lb", "rb".
SpectrumName parse_spectrum_name(std::string_view name);
/// The class flag whose failure defines the spectrum.
Tri class_flag(const OperatorClass& c, SpectrumName which);

/// lambda in sigma_which(t): the negated flag of classify(t - lambda).
Tri membership(const BetOperator& t, const GaussQ& lambda, SpectrumName which, std::size_t cap = 16,
               const PrecisionPolicy& policy = {});

}  // namespace browder
