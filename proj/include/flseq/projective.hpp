#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flseq/field.hpp"

namespace flseq {

/// Point of the projective line P^1(F_q): a field element or infinity.
class ProjPoint {
public:
    explicit ProjPoint(FieldElement x) : value_(std::move(x)) {}

    static ProjPoint infinity() { return ProjPoint(); }

    bool is_infinity() const { return !value_.has_value(); }
    const FieldElement& value() const { return *value_; }

    /// Encoding in [0, q]: finite points by element encoding, infinity = q.
    uint64_t encode(const Field& field) const {
        return is_infinity() ? field.size() : value_->encode();
    }

    bool operator==(const ProjPoint& rhs) const {
        if (is_infinity() || rhs.is_infinity())
            return is_infinity() == rhs.is_infinity();
        return *value_ == *rhs.value_;
    }
    bool operator!=(const ProjPoint& rhs) const { return !(*this == rhs); }

private:
    ProjPoint() = default;
    std::optional<FieldElement> value_;
};

/// Fractional linear map z -> (az+b)/(cz+d) with ad != bc, stored in
/// canonical form: the first nonzero coefficient in scan order (a, b, c, d)
/// equals 1, so each group element has exactly one representation.
class MoebiusMap {
public:
    MoebiusMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d);

    static MoebiusMap identity(const Field& field);

    const Field& field() const { return a_.field(); }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const FieldElement& d() const { return d_; }

    ProjPoint operator()(const ProjPoint& pt) const;

    /// this after g: apply(compose(f, g), z) = apply(f, apply(g, z)).
    MoebiusMap compose(const MoebiusMap& g) const;
    MoebiusMap inverse() const;
    MoebiusMap pow(uint64_t k) const;

    bool is_identity() const;
    bool operator==(const MoebiusMap& rhs) const;
    bool operator!=(const MoebiusMap& rhs) const { return !(*this == rhs); }

private:
    FieldElement a_, b_, c_, d_;
};

struct MoebiusMapHash {
    size_t operator()(const MoebiusMap& f) const;
};

/// Points fixed by f, found by evaluating all q+1 points.
std::vector<ProjPoint> fixed_points(const MoebiusMap& f);

/// Smallest k >= 1 with f^k = identity.
uint64_t element_order(const MoebiusMap& f);

/// All q(q^2-1) canonical maps; guarded at q <= 64.
std::vector<MoebiusMap> enumerate_group(const Field& field);

/// Iterates f from start until the first repetition (which, f being a
/// bijection, is start itself).
std::vector<ProjPoint> orbit(const MoebiusMap& f, const ProjPoint& start);

/// True when the orbit of Finite(1) under psi has length exactly q+1. On a
/// (q+1)-point set this single check certifies both order q+1 and the
/// absence of fixed points.
bool is_full_cycle(const MoebiusMap& psi);

/// First map in companion form (c = 1, scanning a, then b, then d in
/// ascending encoding) whose orbit of Finite(1) sweeps all of P^1(F_q).
MoebiusMap find_psi(const Field& field);

}  // namespace flseq
