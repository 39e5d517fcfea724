#include "browder/classify/classify.hpp"

#include "browder/error.hpp"

namespace browder {

bool OperatorClass::all_decided() const {
    for (const auto& [name, v] : flags())
        if (v == Tri::undecided) return false;
    return true;
}

std::vector<std::pair<std::string, Tri>> OperatorClass::flags() const {
    return {{"invertible", invertible},
            {"left_invertible", left_invertible},
            {"right_invertible", right_invertible},
            {"fredholm", fredholm},
            {"weyl", weyl},
            {"left_semi_fredholm", left_semi_fredholm},
            {"right_semi_fredholm", right_semi_fredholm},
            {"browder", browder},
            {"left_semi_browder", left_semi_browder},
            {"right_semi_browder", right_semi_browder},
            {"drazin_flag", drazin_flag}};
}

OperatorClass classify_from(const FredholmData& fd) {
    OperatorClass c;
    if (!fd.semi_fredholm) {
        // In this class a symbol determinant that is not invertible on the circle rules out
        // semi-Fredholmness, hence every one-sided class.
        c.invertible = c.left_invertible = c.right_invertible = Tri::no;
        c.fredholm = c.weyl = c.left_semi_fredholm = c.right_semi_fredholm = Tri::no;
        c.browder = c.left_semi_browder = c.right_semi_browder = Tri::no;
        // A finite-rank operator may still have finite equal ascent and descent.
        c.drazin_flag = fd.degenerate_symbol ? Tri::undecided : Tri::no;
        return c;
    }
    // Polynomial symbols: semi-Fredholm implies Fredholm with both defects finite.
    const long index = *fd.index;
    c.left_semi_fredholm = c.right_semi_fredholm = c.fredholm = Tri::yes;
    c.weyl = tri(index == 0);
    c.left_invertible = tri(fd.alpha.value() == 0);
    c.right_invertible = tri(fd.beta.value() == 0);
    c.invertible = c.left_invertible && c.right_invertible;
    c.left_semi_browder = ext_finite(fd.ascent);
    c.right_semi_browder = ext_finite(fd.descent);
    if (index != 0)
        c.browder = Tri::no;
    else
        c.browder = c.left_semi_browder && c.right_semi_browder && ext_equal(fd.ascent, fd.descent);
    c.drazin_flag = c.browder;
    return c;
}

OperatorClass classify(const BetOperator& t, std::size_t cap, const PrecisionPolicy& policy) {
    return classify_from(fredholm_data(t, cap, policy));
}

SpectrumName parse_spectrum_name(std::string_view name) {
    if (name == "sigma") return SpectrumName::sigma;
    if (name == "l") return SpectrumName::l;
    if (name == "r") return SpectrumName::r;
    if (name == "e") return SpectrumName::e;
    if (name == "w") return SpectrumName::w;
    if (name == "le") return SpectrumName::le;
    if (name == "re") return SpectrumName::re;
    if (name == "b") return SpectrumName::b;
    if (name == "lb") return SpectrumName::lb;
    if (name == "rb") return SpectrumName::rb;
    throw ParseError("unknown spectrum name '" + std::string(name) + "'");
}

Tri class_flag(const OperatorClass& c, SpectrumName which) {
    switch (which) {
        case SpectrumName::sigma: return c.invertible;
        case SpectrumName::l: return c.left_invertible;
        case SpectrumName::r: return c.right_invertible;
        case SpectrumName::e: return c.fredholm;
        case SpectrumName::w: return c.weyl;
        case SpectrumName::le: return c.left_semi_fredholm;
        case SpectrumName::re: return c.right_semi_fredholm;
        case SpectrumName::b: return c.browder;
        case SpectrumName::lb: return c.left_semi_browder;
        case SpectrumName::rb: return c.right_semi_browder;
    }
    return Tri::undecided;
}

Tri membership(const BetOperator& t, const GaussQ& lambda, SpectrumName which, std::size_t cap,
               const PrecisionPolicy& policy) {
    return !class_flag(classify(translate(t, lambda), cap, policy), which);
}

}  // namespace browder
