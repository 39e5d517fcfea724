#pragma once

#include "browder/numeric/ball.hpp"
#include "browder/numeric/num.hpp"
#include "browder/symbol/polynomial.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace browder {

/// A root of a squarefree polynomial with no Gaussian-rational roots, isolated by a disk
/// that contains exactly one root of `poly`.
struct AlgebraicRoot {
    Poly poly;
    Ball enclosure;
};

/// A nonzero algebraic number: exact when Gaussian rational, otherwise an isolated root.
class Root {
public:
    Root() = default;
    explicit Root(GaussQ exact) : exact_(std::move(exact)) {}
    explicit Root(std::shared_ptr<const AlgebraicRoot> alg) : alg_(std::move(alg)) {}

    bool is_exact() const { return alg_ == nullptr; }
    const GaussQ& exact() const { return exact_; }
    const AlgebraicRoot& algebraic() const { return *alg_; }
    Num value() const { return is_exact() ? Num(exact_) : Num(alg_->enclosure); }

    /// Certified |r| < 1.
    bool inside_unit_disk() const;
    /// Modulus estimate used for deterministic ordering only.
    double modulus_estimate() const;

private:
    GaussQ exact_;
    std::shared_ptr<const AlgebraicRoot> alg_;
};

/// Decides whether two roots are the same number. Throws PrecisionExhausted when the
/// enclosures cannot separate or identify them.
bool same_root(const Root& a, const Root& b);

struct RootMultiplicity {
    Root root;
    std::size_t multiplicity;
};

/// All nonzero roots of p with multiplicities. Gaussian-rational roots are returned exactly;
/// the others are isolated at `prec` bits. When `separate_circle` is set every enclosure is
/// certified to lie strictly inside or strictly outside the unit circle.
/// Throws PrecisionExhausted when isolation fails at this precision.
std::vector<RootMultiplicity> nonzero_roots(const Poly& p, mpfr_prec_t prec, bool separate_circle);

}  // namespace browder
