#pragma once

#include <string_view>

namespace browder {

/// Three-valued truth. `undecided` never collapses to `no`.
enum class Tri { no, yes, undecided };

constexpr Tri tri(bool b) { return b ? Tri::yes : Tri::no; }

constexpr Tri operator&&(Tri a, Tri b) {
    if (a == Tri::no || b == Tri::no) return Tri::no;
    if (a == Tri::yes && b == Tri::yes) return Tri::yes;
    return Tri::undecided;
}

constexpr Tri operator||(Tri a, Tri b) {
    if (a == Tri::yes || b == Tri::yes) return Tri::yes;
    if (a == Tri::no && b == Tri::no) return Tri::no;
    return Tri::undecided;
}

constexpr Tri operator!(Tri a) {
    switch (a) {
        case Tri::no: return Tri::yes;
        case Tri::yes: return Tri::no;
        default: return Tri::undecided;
    }
}

constexpr std::string_view to_string(Tri t) {
    switch (t) {
        case Tri::no: return "no";
        case Tri::yes: return "yes";
        default: return "undecided";
    }
}

}  // namespace browder
