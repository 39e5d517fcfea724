#pragma once

#include "browder/classify/classify.hpp"
#include "browder/fredholm/fredholm.hpp"
#include "browder/linalg/certified_elimination.hpp"
#include "browder/op/bet_operator.hpp"
#include "browder/tri.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace browder {

struct OperatorData {
    FredholmData fredholm;
    OperatorClass cls;
};

OperatorData operator_data(const BetOperator& t, std::size_t cap = 16, const PrecisionPolicy& policy = {});

enum class CompletionKind { invertible, weyl, browder };

struct Existence {
    Tri answer = Tri::undecided;
    /// Every clause that failed or could not be decided.
    std::vector<std::string> reasons;
};

/// Whether some C places [[A, C], [0, B]] in the requested class (Hilbert-space dimension form).
Existence exists_completion(const OperatorData& a, const OperatorData& b, CompletionKind kind);

/// X1 = N(A^p) with p = asc(A); A maps X1 into itself and acts nilpotently there. The
/// compression of A to the orthogonal complement of X1 is injective with closed range.
struct LeftDecomposition {
    std::size_t p = 0;
    std::vector<ExpPolyVector> x1_basis;
    /// Column j holds the coordinates of A x_j in x1_basis.
    linalg::NumMatrix a1;
    std::size_t nilpotency_degree = 0;
};

/// Y1 = R(B^q) with q = des(B), described by the basis of its orthogonal complement N((B*)^q).
/// B* maps the complement into itself; the compression of B there is nilpotent.
struct RightDecomposition {
    std::size_t q = 0;
    std::vector<ExpPolyVector> complement_basis;
    /// B* on complement_basis, as coordinates.
    linalg::NumMatrix b2_adjoint;
    std::size_t nilpotency_degree = 0;
};

LeftDecomposition left_decompose(const BetOperator& a, std::size_t cap = 16, const PrecisionPolicy& policy = {});
RightDecomposition right_decompose(const BetOperator& b, std::size_t cap = 16, const PrecisionPolicy& policy = {});

enum class CertificateKind { browder, invertible_C };

struct DimensionCheck {
    std::string name;
    ExtNat lhs = ExtNat::finite(0);
    ExtNat rhs = ExtNat::finite(0);
    bool holds = false;
};

struct CompletionCertificate {
    CertificateKind kind = CertificateKind::browder;
    BetOperator a;
    BetOperator b;
    BetOperator c;
    LeftDecomposition left;
    RightDecomposition right;
    /// Compression of C from N(B1) to R(A2)^perp in the computed bases.
    linalg::NumMatrix corner;
    std::vector<DimensionCheck> dimension_checks;
};

struct Completion {
    BetOperator c;
    CompletionCertificate certificate;
};

/// Finite-rank C mapping a basis of N(B1) onto a basis of R(A2)^perp; M_C is Browder.
Completion construct_browder_C(const BetOperator& a, const BetOperator& b, std::size_t cap = 16,
                               const PrecisionPolicy& policy = {});

/// Invertible C = I + finite rank with the same corner; M_C is Browder.
Completion construct_invertible_C(const BetOperator& a, const BetOperator& b, std::size_t cap = 16,
                                  const PrecisionPolicy& policy = {});

struct CornerResult {
    Tri left_invertible = Tri::undecided;
    Tri right_invertible = Tri::undecided;
    Tri invertible = Tri::undecided;
    /// Compression of C from N(B) to R(A)^perp; empty when either kernel is not finite.
    linalg::NumMatrix c1;
    std::vector<std::string> notes;
};

/// One-sided and two-sided invertibility of M_C from A, B and the corner C1.
CornerResult corner_tests(const BetOperator& a, const BetOperator& b, const BetOperator& c, std::size_t cap = 16,
                          const PrecisionPolicy& policy = {});

struct Verification {
    bool ok = false;
    std::vector<std::string> reasons;
};

/// Re-derives every recorded fact from A, B and C alone.
Verification verify_certificate(const CompletionCertificate& cert, std::size_t cap = 16,
                                const PrecisionPolicy& policy = {});

}  // namespace browder
