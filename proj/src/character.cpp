#include "flseq/character.hpp"

#include <numbers>
#include <string>

namespace flseq {

std::complex<double> UnitValue::to_complex() const {
    // Quarter turns are exact so that +/-1 sequences stay integer-clean.
    if (num == 0) return {1.0, 0.0};
    if (2 * num == den) return {-1.0, 0.0};
    if (4 * num == den) return {0.0, 1.0};
    if (4 * num == 3 * den) return {0.0, -1.0};
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num) /
                   static_cast<double>(den);
    return std::polar(1.0, angle);
}

Character::Character(const Field& field, uint64_t index)
    : field_(&field), index_(index % (field.size() - 1)) {
    uint64_t n = field.size() - 1;
    order_ = n / std::gcd(index_, n);
}

Character Character::by_order(const Field& field, uint64_t d) {
    uint64_t n = field.size() - 1;
    if (d == 0 || n % d != 0)
        throw Error(ErrorCode::OrderDoesNotDivide,
                    "order " + std::to_string(d) + " does not divide q-1 = " +
                        std::to_string(n));
    return Character(field, d == 1 ? 0 : n / d);
}

UnitValue Character::operator()(const FieldElement& x) const {
    uint64_t n = field_->size() - 1;
    if (x.is_zero()) return UnitValue{0, n};  // chi(0) = 1 by convention
    uint64_t k = field_->dlog(x);
    return UnitValue{index_ * k % n, n};
}

UnitValue Character::operator()(const ProjPoint& pt) const {
    if (pt.is_infinity()) return UnitValue{0, field_->size() - 1};  // chi(inf) = 1
    return (*this)(pt.value());
}

}  // namespace flseq
