#include "laurent/matrix.hpp"

#include <algorithm>
#include <cstdlib>

#include "laurent/error.hpp"

namespace laurent {

bool IntMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](int x) { return x == 0; });
}

bool IntMatrix::is_ternary() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](int x) { return x >= -1 && x <= 1; });
}

std::size_t IntMatrix::nonzeros() const noexcept {
    return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](int x) { return x != 0; }));
}

std::size_t IntMatrix::row_nonzeros(std::size_t r) const {
    const auto values = row(r);
    return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](int x) { return x != 0; }));
}

namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix shape mismatch");
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require_same_shape(a, b);
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    require_same_shape(a, b);
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product: inner dimensions differ");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const int x = a(r, k);
            if (x == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += x * b(k, c);
        }
    return out;
}

bool GaussianIntegerMatrix::entries_are_units() const noexcept {
    for (std::size_t r = 0; r < re.rows(); ++r)
        for (std::size_t c = 0; c < re.cols(); ++c) {
            const int weight = std::abs(re(r, c)) + std::abs(im(r, c));
            if (weight != 0 && weight != 1) return false;
        }
    return true;
}

}  // namespace laurent
