#pragma once

#include <cstddef>

#include "laurent/matrix.hpp"

namespace laurent {

/// T = combiner * reducedRows with both factors ternary.
///
/// Applying T to a vector through the factorization costs additions only, and a
/// scalar weight attached to T needs to touch just the `rank` intermediate
/// values between the two factors.
struct FactoredTernary {
    IntMatrix combiner;     ///< rows(T) x rank
    IntMatrix reducedRows;  ///< rank x cols(T)
    std::size_t rank = 0;
    /// False when the rank-r echelon factors were not ternary and the
    /// distinct-signed-rows fallback was used instead (rank may then exceed rank(T)).
    bool optimal = true;

    [[nodiscard]] IntMatrix product() const { return combiner * reducedRows; }
};

/// Rank of an integer matrix over the rationals (exact elimination).
[[nodiscard]] std::size_t rational_rank(const IntMatrix& m);

/// Column-space factorization T = C * R, where R is the nonzero part of the
/// reduced row-echelon form of T and C collects T's pivot columns.
/// Throws InvalidInput if T is not ternary.
[[nodiscard]] FactoredTernary echelon_factor(const IntMatrix& ternary);

/// Factorization by distinct nonzero rows up to sign. Always ternary, never rank-optimal
/// in general; exposed for tests and used as the echelon fallback.
[[nodiscard]] FactoredTernary distinct_rows_factor(const IntMatrix& ternary);

}  // namespace laurent
