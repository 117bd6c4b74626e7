#include "bettibounds/linalg.hpp"

#include <algorithm>
#include <map>

namespace bb {

bool FpMat::is_zero() const {
    for (auto v : a_)
        if (v != 0) return false;
    return true;
}

std::size_t FpMat::rank(const PrimeField& F) const {
    FpMat m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m.at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        for (std::size_t k = 0; k < cols_; ++k) std::swap(m.at(r, k), m.at(piv, k));
        PrimeField::elem ipiv = F.inv(m.at(r, c));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            PrimeField::elem f = m.at(i, c);
            if (f == 0) continue;
            PrimeField::elem mult = F.mul(f, ipiv);
            for (std::size_t k = c; k < cols_; ++k)
                m.at(i, k) = F.sub(m.at(i, k), F.mul(mult, m.at(r, k)));
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<PrimeField::elem>> FpMat::kernel_basis(const PrimeField& F) const {
    FpMat m = *this;
    std::vector<long long> pivot_of_col(cols_, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m.at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        for (std::size_t k = 0; k < cols_; ++k) std::swap(m.at(r, k), m.at(piv, k));
        PrimeField::elem ipiv = F.inv(m.at(r, c));
        for (std::size_t k = 0; k < cols_; ++k) m.at(r, k) = F.mul(m.at(r, k), ipiv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            PrimeField::elem f = m.at(i, c);
            if (f == 0) continue;
            for (std::size_t k = c; k < cols_; ++k)
                m.at(i, k) = F.sub(m.at(i, k), F.mul(f, m.at(r, k)));
        }
        pivot_of_col[c] = static_cast<long long>(r);
        ++r;
    }
    std::vector<std::vector<PrimeField::elem>> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<PrimeField::elem> v(cols_, 0);
        v[c] = 1;
        for (std::size_t c2 = 0; c2 < cols_; ++c2) {
            if (pivot_of_col[c2] < 0) continue;
            // pivot row expresses x_{c2} + sum of free columns = 0
            v[c2] = F.neg(m.at(static_cast<std::size_t>(pivot_of_col[c2]), c));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<PrimeField::elem>> FpMat::solve(
    const PrimeField& F, const std::vector<PrimeField::elem>& b) const {
    FpMat m(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        m.at(i, cols_) = b[i];
    }
    std::vector<long long> pivot_of_col(cols_, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m.at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        for (std::size_t k = 0; k <= cols_; ++k) std::swap(m.at(r, k), m.at(piv, k));
        PrimeField::elem ipiv = F.inv(m.at(r, c));
        for (std::size_t k = 0; k <= cols_; ++k) m.at(r, k) = F.mul(m.at(r, k), ipiv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            PrimeField::elem f = m.at(i, c);
            if (f == 0) continue;
            for (std::size_t k = c; k <= cols_; ++k)
                m.at(i, k) = F.sub(m.at(i, k), F.mul(f, m.at(r, k)));
        }
        pivot_of_col[c] = static_cast<long long>(r);
        ++r;
    }
    // inconsistent iff a zero row has nonzero rhs
    for (std::size_t i = r; i < rows_; ++i)
        if (m.at(i, cols_) != 0) return std::nullopt;
    std::vector<PrimeField::elem> x(cols_, 0);
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivot_of_col[c] >= 0) x[c] = m.at(static_cast<std::size_t>(pivot_of_col[c]), cols_);
    return x;
}

FpMat FpMat::multiply(const PrimeField& F, const FpMat& rhs) const {
    FpMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            PrimeField::elem v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                PrimeField::elem w = rhs.at(k, j);
                if (w == 0) continue;
                out.at(i, j) = F.add(out.at(i, j), F.mul(v, w));
            }
        }
    return out;
}

std::size_t SparseFpMat::rank(const PrimeField& F) const {
    // column-ordered elimination on row lists, shortest eligible row as pivot
    using Row = std::map<std::uint32_t, PrimeField::elem>;
    std::vector<Row> rows;
    rows.reserve(rows_);
    for (const auto& rd : data_) {
        Row r;
        for (auto [c, v] : rd) {
            auto it = r.find(c);
            if (it == r.end()) r.emplace(c, v);
            else {
                it->second = F.add(it->second, v);
                if (it->second == 0) r.erase(it);
            }
        }
        if (!r.empty()) rows.push_back(std::move(r));
    }
    std::size_t rank = 0;
    std::vector<bool> used(rows.size(), false);
    for (std::uint32_t c = 0; c < cols_; ++c) {
        long long pivot = -1;
        std::size_t best = SIZE_MAX;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty()) continue;
            if (rows[i].begin()->first != c) continue;
            if (rows[i].size() < best) { best = rows[i].size(); pivot = static_cast<long long>(i); }
        }
        if (pivot < 0) continue;
        std::size_t p = static_cast<std::size_t>(pivot);
        used[p] = true;
        ++rank;
        PrimeField::elem ipiv = F.inv(rows[p].begin()->second);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty()) continue;
            auto it = rows[i].find(c);
            if (it == rows[i].end()) continue;
            PrimeField::elem mult = F.mul(it->second, ipiv);
            for (auto [cc, vv] : rows[p]) {
                auto jt = rows[i].find(cc);
                PrimeField::elem delta = F.mul(mult, vv);
                if (jt == rows[i].end()) rows[i].emplace(cc, F.neg(delta));
                else {
                    jt->second = F.sub(jt->second, delta);
                    if (jt->second == 0) rows[i].erase(jt);
                }
            }
        }
    }
    return rank;
}

} // namespace bb
