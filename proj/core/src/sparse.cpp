#include "rbffd/sparse.hpp"

#include <algorithm>

#include "rbffd/errors.hpp"

namespace rbffd {

void CsrMatrix::append_row(std::vector<std::pair<std::size_t, double>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].first >= cols_ || (k > 0 && entries[k].first == entries[k - 1].first)) {
            throw AssemblyError("CsrMatrix: invalid or duplicate column in row " +
                                std::to_string(rows()));
        }
        col_idx_.push_back(entries[k].first);
        values_.push_back(entries[k].second);
    }
    row_ptr_.push_back(values_.size());
}

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    if (x.size() != cols_ || y.size() != rows()) {
        throw DimensionMismatch("CsrMatrix::multiply: operand sizes do not match the matrix");
    }
    for (std::size_t i = 0; i < rows(); ++i) {
        double sum = 0.0;
        for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
            sum += values_[k] * x[col_idx_[k]];
        }
        y[i] = sum;
    }
}

std::vector<double> CsrMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(rows());
    multiply(x, y);
    return y;
}

}  // namespace rbffd
