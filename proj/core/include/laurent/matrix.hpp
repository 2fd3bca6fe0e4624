#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace laurent {

/// Dense row-major integer matrix. Sizes here never exceed a few thousand entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

    [[nodiscard]] int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    [[nodiscard]] bool is_zero() const noexcept;
    /// Every entry in {-1, 0, +1}.
    [[nodiscard]] bool is_ternary() const noexcept;
    [[nodiscard]] std::size_t nonzeros() const noexcept;
    [[nodiscard]] std::size_t row_nonzeros(std::size_t r) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<int> data_;
};

[[nodiscard]] IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
[[nodiscard]] IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
[[nodiscard]] IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Matrix with entries in {0, ±1, ±j}, stored as separate real and imaginary parts.
struct GaussianIntegerMatrix {
    IntMatrix re;
    IntMatrix im;

    [[nodiscard]] std::size_t order() const noexcept { return re.rows(); }
    /// Every nonzero entry has |Re| + |Im| = 1.
    [[nodiscard]] bool entries_are_units() const noexcept;
};

}  // namespace laurent
