#pragma once

#include <complex>
#include <cstdint>
#include <numeric>

#include "flseq/field.hpp"
#include "flseq/projective.hpp"

namespace flseq {

/// Exact root of unity exp(2*pi*i * num/den) with 0 <= num < den.
/// Sequences carry these instead of floating complex values so equality
/// tests stay exact; the complex realization happens at correlation time.
struct UnitValue {
    uint64_t num;
    uint64_t den;

    std::complex<double> to_complex() const;

    /// (num, den) in lowest terms, for display.
    std::pair<uint64_t, uint64_t> reduced() const {
        uint64_t g = std::gcd(num, den);
        if (g == 0) return {0, 1};
        return {num / g, den / g};
    }

    bool operator==(const UnitValue& rhs) const = default;
};

/// Multiplicative character chi of F_q^* defined by chi(g^k) = zeta^(index*k)
/// with zeta = exp(2*pi*i/(q-1)), extended to the projective line by the
/// convention chi(0) = chi(infinity) = 1.
class Character {
public:
    Character(const Field& field, uint64_t index);

    /// Character of exact order d; requires d | q-1. The canonical index for
    /// order d is (q-1)/d.
    static Character by_order(const Field& field, uint64_t d);

    const Field& field() const { return *field_; }
    uint64_t index() const { return index_; }
    uint64_t order() const { return order_; }
    bool is_trivial() const { return index_ == 0; }

    UnitValue operator()(const FieldElement& x) const;
    UnitValue operator()(const ProjPoint& pt) const;

private:
    const Field* field_;
    uint64_t index_;
    uint64_t order_;
};

}  // namespace flseq
