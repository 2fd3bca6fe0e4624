#pragma once

// Matrix Laurent-series decomposition of the N-point DFT matrix, N ≡ 0 (mod 4).
//
// The DFT matrix is split as
//
//   F = M_0 + sum_{m=1}^{K} [w^m M_m + w^-m M_-m]  (+ w^{N/8} M_{N/8} when 8 | N)
//
// with w = exp(-j 2 pi / N) and K = floor((N/4 - 1) / 2). Each M_m has entries in
// {0, ±1, ±j}; expanding w^m = cos - j sin gives real-output and imaginary-output
// matrices that are ternary, so only the scalars cos(2 pi m/N), sin(2 pi m/N) and
// √2/2 cost multiplications.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "laurent/echelon.hpp"
#include "laurent/matrix.hpp"

namespace laurent {

/// m_{k,n} = k n mod N.
[[nodiscard]] IntMatrix exponent_matrix(std::size_t n);

/// 0/1 matrix marking the positions where k n ≡ l (mod N). Throws InvalidInput if l >= N.
[[nodiscard]] IntMatrix chi(std::size_t l, std::size_t n);

/// C_m = { l in [0, N) : l ≡ m (mod N/4) }, ascending; always four elements.
[[nodiscard]] std::vector<std::size_t> congruence_class(long m, std::size_t n);

/// M_m = sum_{l in C_m} (-j)^{4(l - m)/N} chi_l, with the signed label m in the exponent.
[[nodiscard]] GaussianIntegerMatrix build_M(long m, std::size_t n);

enum class TermKind { Unit, Cosine, Sine, Middle };

[[nodiscard]] const char* to_string(TermKind kind) noexcept;

/// One scalar-weighted pair of factored ternary matrices.
///
/// The term contributes scalar * realPart * v to Re(V) and scalar * imagPart * v
/// to Im(V). Signs from the decomposition (e.g. the minus on the sine term's
/// imaginary contribution) are folded into the matrices.
struct PlanTerm {
    TermKind kind = TermKind::Unit;
    long m = 0;
    std::string scalarName;
    double scalar = 1.0;
    IntMatrix realMatrix;
    IntMatrix imagMatrix;
    FactoredTernary realPart;
    FactoredTernary imagPart;

    [[nodiscard]] bool needs_multiplier() const noexcept { return kind != TermKind::Unit; }
};

/// Immutable decomposition for one blocklength. Safe to share across threads.
class LaurentPlan {
public:
    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] const std::vector<PlanTerm>& terms() const noexcept { return terms_; }
    /// True when every factorization reached its rational rank.
    [[nodiscard]] bool optimal() const noexcept;

private:
    friend LaurentPlan build_plan(std::size_t n);
    std::size_t order_ = 0;
    std::vector<PlanTerm> terms_;
};

/// Throws UnsupportedLength unless N ≡ 0 (mod 4), N >= 4.
[[nodiscard]] LaurentPlan build_plan(std::size_t n);

/// Sums every term back into a dense complex matrix (row-major, N x N).
[[nodiscard]] std::vector<std::complex<double>> reconstruct(const LaurentPlan& plan);

/// Human-readable listing: per term the scalar (10 significant digits), ranks and
/// both factors of each matrix as rows of '+', '-', '0'.
[[nodiscard]] std::string dump_plan(const LaurentPlan& plan);

}  // namespace laurent
