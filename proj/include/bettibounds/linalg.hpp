#ifndef BETTIBOUNDS_LINALG_HPP
#define BETTIBOUNDS_LINALG_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bettibounds/field.hpp"

namespace bb {

/// Dense matrix over a prime field. Strand boundary matrices are small but
/// dense, so plain Gaussian elimination is the workhorse.
class FpMat {
public:
    FpMat() : rows_(0), cols_(0) {}
    FpMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    PrimeField::elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    PrimeField::elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;

    std::size_t rank(const PrimeField& F) const;

    /// Basis of the right kernel, one column vector per basis element.
    std::vector<std::vector<PrimeField::elem>> kernel_basis(const PrimeField& F) const;

    /// One solution x of A x = b, if any.
    std::optional<std::vector<PrimeField::elem>> solve(const PrimeField& F,
                                                       const std::vector<PrimeField::elem>& b) const;

    FpMat multiply(const PrimeField& F, const FpMat& rhs) const;

private:
    std::size_t rows_, cols_;
    std::vector<PrimeField::elem> a_;
};

/// Row-compressed sparse matrix; only rank is needed on this path.
class SparseFpMat {
public:
    SparseFpMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void add_entry(std::size_t r, std::size_t c, PrimeField::elem v) {
        if (v != 0) data_[r].emplace_back(c, v);
    }

    std::size_t rank(const PrimeField& F) const;

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<std::pair<std::uint32_t, PrimeField::elem>>> data_;
};

} // namespace bb

#endif
