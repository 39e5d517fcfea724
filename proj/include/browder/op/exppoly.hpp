#pragma once

#include "browder/numeric/num.hpp"
#include "browder/symbol/roots.hpp"
#include "browder/tri.hpp"

#include <cstddef>
#include <vector>

namespace browder {

/// q(n) * root^n for every n >= 0, with q(n) = sum_k poly[k] n^k.
struct Tail {
    Root root;
    std::vector<Num> poly;
};

/// One scalar component: value(n) = head[n] (zero past the head) + sum of all tails at n.
struct Sequence {
    std::vector<Num> head;
    std::vector<Tail> tails;

    Num at(std::size_t n) const;
};

/// Element of l2(N)^dim given by finite heads plus exponential-polynomial tails with |root| < 1.
class ExpPolyVector {
public:
    explicit ExpPolyVector(std::size_t dim = 1) : comps_(dim) {}

    static ExpPolyVector unit(std::size_t index, std::size_t comp = 0, std::size_t dim = 1);
    static ExpPolyVector from_head(std::vector<Num> head);
    /// scale * root^n (one-component).
    static ExpPolyVector geometric(const Root& root, const Num& scale = Num(1));

    std::size_t dim() const { return comps_.size(); }
    Sequence& comp(std::size_t c) { return comps_[c]; }
    const Sequence& comp(std::size_t c) const { return comps_[c]; }

    Num at(std::size_t comp, std::size_t n) const { return comps_[comp].at(n); }
    std::size_t head_length() const;
    bool has_tails() const;
    bool all_exact() const;

    /// Merges tails sharing a root and trims exact zeros. Throws PrecisionExhausted when two
    /// roots cannot be told apart.
    ExpPolyVector normalized() const;
    /// yes: identically zero; no: certified nonzero.
    Tri is_zero() const;

    /// Places this one-component vector into component `comp` of a `dim`-component vector.
    ExpPolyVector embed(std::size_t comp, std::size_t dim) const;
    ExpPolyVector component(std::size_t comp) const;

    friend ExpPolyVector operator+(const ExpPolyVector& a, const ExpPolyVector& b);
    friend ExpPolyVector operator-(const ExpPolyVector& a, const ExpPolyVector& b);
    friend ExpPolyVector operator*(const Num& s, const ExpPolyVector& v);

    /// Exact structural equality (identical heads and tails after normalization).
    bool same_as(const ExpPolyVector& other) const;

private:
    std::vector<Sequence> comps_;
};

/// <x, y> = sum_n sum_c x_c(n) conj(y_c(n)).
Num inner(const ExpPolyVector& x, const ExpPolyVector& y);

/// sum_{n>=0} n^m w^n for |w| < 1, in closed form.
Num power_sum(std::size_t m, const Num& w);

}  // namespace browder
