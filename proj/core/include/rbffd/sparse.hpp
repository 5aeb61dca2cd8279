#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace rbffd {

/// Square or rectangular matrix in compressed sparse row form.
///
/// Column indices are strictly increasing within each row.
class CsrMatrix {
public:
    CsrMatrix() = default;
    explicit CsrMatrix(std::size_t cols) : cols_(cols) {}

    /// Appends a row; entries must have distinct columns (they are sorted here).
    void append_row(std::vector<std::pair<std::size_t, double>> entries);

    [[nodiscard]] std::size_t rows() const { return row_ptr_.size() - 1; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t nonzeros() const { return values_.size(); }

    [[nodiscard]] std::span<const std::size_t> row_columns(std::size_t row) const {
        return {col_idx_.data() + row_ptr_[row], row_ptr_[row + 1] - row_ptr_[row]};
    }
    [[nodiscard]] std::span<const double> row_values(std::size_t row) const {
        return {values_.data() + row_ptr_[row], row_ptr_[row + 1] - row_ptr_[row]};
    }

    /// y = A x
    void multiply(std::span<const double> x, std::span<double> y) const;
    [[nodiscard]] std::vector<double> multiply(std::span<const double> x) const;

private:
    std::size_t cols_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::size_t> col_idx_;
    std::vector<double> values_;
};

}  // namespace rbffd
