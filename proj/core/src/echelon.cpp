#include "laurent/echelon.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "laurent/error.hpp"

namespace laurent {
namespace {

// Minimal exact rational for elimination on small integer matrices.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t n, std::int64_t d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const auto g = std::gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return {n, d};
    }

    [[nodiscard]] bool is_zero() const { return num == 0; }
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw InvalidInput("echelon: rational overflow");
    return out;
}

Rational operator-(Rational a, Rational b) {
    const auto g = std::gcd(a.den, b.den);
    const auto lhs = checked_mul(a.num, b.den / g);
    const auto rhs = checked_mul(b.num, a.den / g);
    std::int64_t num = 0;
    if (__builtin_sub_overflow(lhs, rhs, &num)) throw InvalidInput("echelon: rational overflow");
    return Rational::make(num, checked_mul(a.den, b.den / g));
}

Rational operator*(Rational a, Rational b) {
    const auto g1 = std::gcd(a.num, b.den);
    const auto g2 = std::gcd(b.num, a.den);
    const auto d1 = g1 == 0 ? 1 : g1;
    const auto d2 = g2 == 0 ? 1 : g2;
    return Rational::make(checked_mul(a.num / d1, b.num / d2), checked_mul(a.den / d2, b.den / d1));
}

Rational operator/(Rational a, Rational b) { return a * Rational::make(b.den, b.num); }

struct RrefResult {
    std::vector<std::vector<Rational>> rows;  // nonzero rows only
    std::vector<std::size_t> pivots;
};

RrefResult rref(const IntMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Rational{m(r, c), 1};

    RrefResult out;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && a[pivot][c].is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[lead], a[pivot]);
        const Rational p = a[lead][c];
        for (auto& x : a[lead]) x = x / p;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || a[r][c].is_zero()) continue;
            const Rational f = a[r][c];
            for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] = a[r][k] - f * a[lead][k];
        }
        out.pivots.push_back(c);
        ++lead;
    }
    a.resize(lead);
    out.rows = std::move(a);
    return out;
}

}  // namespace

std::size_t rational_rank(const IntMatrix& m) { return rref(m).pivots.size(); }

FactoredTernary distinct_rows_factor(const IntMatrix& t) {
    if (!t.is_ternary()) throw InvalidInput("distinct_rows_factor: matrix is not ternary");

    // Canonical sign: first nonzero entry positive.
    std::map<std::vector<int>, std::size_t> index;
    std::vector<std::vector<int>> distinct;
    std::vector<std::pair<std::size_t, int>> assignment(t.rows(), {0, 0});
    for (std::size_t r = 0; r < t.rows(); ++r) {
        const auto values = t.row(r);
        std::vector<int> row(values.begin(), values.end());
        int sign = 0;
        for (int x : row)
            if (x != 0) {
                sign = x;
                break;
            }
        if (sign == 0) continue;
        if (sign < 0)
            for (auto& x : row) x = -x;
        auto [it, inserted] = index.emplace(row, distinct.size());
        if (inserted) distinct.push_back(row);
        assignment[r] = {it->second, sign};
    }

    FactoredTernary f;
    f.rank = distinct.size();
    f.combiner = IntMatrix(t.rows(), f.rank);
    f.reducedRows = IntMatrix(f.rank, t.cols());
    for (std::size_t i = 0; i < distinct.size(); ++i)
        for (std::size_t c = 0; c < t.cols(); ++c) f.reducedRows(i, c) = distinct[i][c];
    for (std::size_t r = 0; r < t.rows(); ++r)
        if (assignment[r].second != 0) f.combiner(r, assignment[r].first) = assignment[r].second;
    f.optimal = f.rank == rational_rank(t);
    return f;
}

FactoredTernary echelon_factor(const IntMatrix& t) {
    if (!t.is_ternary()) throw InvalidInput("echelon_factor: matrix is not ternary");

    const auto reduced = rref(t);
    const auto rank = reduced.pivots.size();

    FactoredTernary f;
    f.rank = rank;
    f.combiner = IntMatrix(t.rows(), rank);
    f.reducedRows = IntMatrix(rank, t.cols());

    bool ternary = true;
    for (std::size_t i = 0; i < rank && ternary; ++i)
        for (std::size_t c = 0; c < t.cols(); ++c) {
            const auto& x = reduced.rows[i][c];
            if (x.den != 1 || x.num < -1 || x.num > 1) {
                ternary = false;
                break;
            }
            f.reducedRows(i, c) = static_cast<int>(x.num);
        }
    for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t i = 0; i < rank; ++i) f.combiner(r, i) = t(r, reduced.pivots[i]);

    if (ternary && f.product() == t) return f;

    auto fallback = distinct_rows_factor(t);
    fallback.optimal = false;
    return fallback;
}

}  // namespace laurent
