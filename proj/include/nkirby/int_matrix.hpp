#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nkirby {

/// Dense row-major integer matrix. Zero-sized dimensions are allowed and
/// meaningful (a 0x3 matrix is the map Z^3 -> 0).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    bool is_zero() const noexcept;
    IntMatrix transpose() const;

    /// Overflow-checked product; throws Error(Overflow).
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);

}  // namespace checked

}  // namespace nkirby
