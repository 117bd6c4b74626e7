#ifndef BETTIBOUNDS_FIELD_HPP
#define BETTIBOUNDS_FIELD_HPP

#include <cstdint>
#include <string>

#include "bettibounds/errors.hpp"

namespace bb {

/// F_q arithmetic on canonical residues 0..q-1, q a prime below 2^31.
class PrimeField {
public:
    using elem = std::uint32_t;

    explicit PrimeField(std::uint32_t q) : q_(q) {
        if (!is_prime(q)) throw ArgumentError("field modulus " + std::to_string(q) + " is not prime");
    }

    std::uint32_t q() const { return q_; }

    elem add(elem a, elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= q_ ? elem(s - q_) : elem(s);
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : elem(a + q_ - b); }
    elem neg(elem a) const { return a == 0 ? 0 : q_ - a; }
    elem mul(elem a, elem b) const { return elem((std::uint64_t(a) * b) % q_); }

    elem pow(elem a, std::uint64_t e) const {
        elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    elem inv(elem a) const {
        if (a == 0) throw ArgumentError("division by zero in F_" + std::to_string(q_));
        // extended Euclid
        long long t = 0, nt = 1, r = q_, nr = a;
        while (nr != 0) {
            long long qq = r / nr;
            long long tmp = t - qq * nt; t = nt; nt = tmp;
            tmp = r - qq * nr; r = nr; nr = tmp;
        }
        return t < 0 ? elem(t + q_) : elem(t);
    }

    /// Canonical residue of an arbitrary signed integer.
    elem from_int(long long v) const {
        long long r = v % static_cast<long long>(q_);
        if (r < 0) r += q_;
        return elem(r);
    }

    bool operator==(const PrimeField& o) const { return q_ == o.q_; }

    static bool is_prime(std::uint32_t q) {
        if (q < 2) return false;
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) return false;
        return true;
    }

private:
    std::uint32_t q_;
};

} // namespace bb

#endif
