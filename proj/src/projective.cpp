#include "flseq/projective.hpp"

#include <functional>

namespace flseq {

MoebiusMap::MoebiusMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (&a_.field() != &b_.field() || &a_.field() != &c_.field() ||
        &a_.field() != &d_.field())
        throw Error(ErrorCode::FieldMismatch, "map coefficients from different fields");
    if ((a_ * d_ - b_ * c_).is_zero())
        throw Error(ErrorCode::SingularMap, "ad - bc = 0: not a fractional linear map");

    const FieldElement* lead = &a_;
    if (lead->is_zero()) lead = &b_;
    if (lead->is_zero()) lead = &c_;
    if (lead->is_zero()) lead = &d_;
    if (!lead->is_one()) {
        FieldElement scale = lead->inv();
        a_ = a_ * scale;
        b_ = b_ * scale;
        c_ = c_ * scale;
        d_ = d_ * scale;
    }
}

MoebiusMap MoebiusMap::identity(const Field& field) {
    return MoebiusMap(field.one(), field.zero(), field.zero(), field.one());
}

ProjPoint MoebiusMap::operator()(const ProjPoint& pt) const {
    if (pt.is_infinity()) {
        if (c_.is_zero()) return ProjPoint::infinity();
        return ProjPoint(a_ * c_.inv());
    }
    const FieldElement& z = pt.value();
    if (&z.field() != &field())
        throw Error(ErrorCode::FieldMismatch, "point belongs to a different field");
    FieldElement den = c_ * z + d_;
    if (den.is_zero()) return ProjPoint::infinity();  // az+b != 0 by nonsingularity
    return ProjPoint((a_ * z + b_) * den.inv());
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& g) const {
    if (&field() != &g.field())
        throw Error(ErrorCode::FieldMismatch, "composing maps over different fields");
    return MoebiusMap(a_ * g.a_ + b_ * g.c_, a_ * g.b_ + b_ * g.d_,
                      c_ * g.a_ + d_ * g.c_, c_ * g.b_ + d_ * g.d_);
}

MoebiusMap MoebiusMap::inverse() const {
    return MoebiusMap(d_, -b_, -c_, a_);
}

MoebiusMap MoebiusMap::pow(uint64_t k) const {
    MoebiusMap result = identity(field());
    MoebiusMap base = *this;
    while (k) {
        if (k & 1) result = result.compose(base);
        base = base.compose(base);
        k >>= 1;
    }
    return result;
}

bool MoebiusMap::is_identity() const {
    return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one();
}

bool MoebiusMap::operator==(const MoebiusMap& rhs) const {
    return a_ == rhs.a_ && b_ == rhs.b_ && c_ == rhs.c_ && d_ == rhs.d_;
}

size_t MoebiusMapHash::operator()(const MoebiusMap& f) const {
    size_t h = 0;
    for (uint64_t code : {f.a().encode(), f.b().encode(), f.c().encode(), f.d().encode()}) {
        h ^= std::hash<uint64_t>{}(code) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::vector<ProjPoint> fixed_points(const MoebiusMap& f) {
    const Field& field = f.field();
    std::vector<ProjPoint> fixed;
    for (uint64_t code = 0; code < field.size(); ++code) {
        ProjPoint pt(field.decode(code));
        if (f(pt) == pt) fixed.push_back(pt);
    }
    ProjPoint inf = ProjPoint::infinity();
    if (f(inf) == inf) fixed.push_back(inf);
    return fixed;
}

uint64_t element_order(const MoebiusMap& f) {
    uint64_t k = 1;
    MoebiusMap power = f;
    while (!power.is_identity()) {
        power = power.compose(f);
        ++k;
    }
    return k;
}

std::vector<MoebiusMap> enumerate_group(const Field& field) {
    uint64_t q = field.size();
    if (q > 64)
        throw Error(ErrorCode::FieldTooLarge, "group enumeration guarded at q <= 64");
    std::vector<MoebiusMap> maps;
    maps.reserve(q * (q * q - 1));
    FieldElement one = field.one();
    FieldElement zero = field.zero();
    // Canonical forms split by the leading coefficient: a = 1 with d != bc,
    // or a = 0, b = 1, c != 0.
    for (uint64_t bc = 0; bc < q; ++bc) {
        FieldElement b = field.decode(bc);
        for (uint64_t cc = 0; cc < q; ++cc) {
            FieldElement c = field.decode(cc);
            FieldElement excluded = b * c;
            for (uint64_t dc = 0; dc < q; ++dc) {
                FieldElement d = field.decode(dc);
                if (d == excluded) continue;
                maps.emplace_back(one, b, c, d);
            }
        }
    }
    for (uint64_t cc = 1; cc < q; ++cc) {
        FieldElement c = field.decode(cc);
        for (uint64_t dc = 0; dc < q; ++dc) {
            maps.emplace_back(zero, one, c, field.decode(dc));
        }
    }
    return maps;
}

std::vector<ProjPoint> orbit(const MoebiusMap& f, const ProjPoint& start) {
    std::vector<ProjPoint> points{start};
    ProjPoint current = f(start);
    while (current != start) {
        points.push_back(current);
        current = f(current);
    }
    return points;
}

bool is_full_cycle(const MoebiusMap& psi) {
    const Field& field = psi.field();
    ProjPoint start(field.one());
    ProjPoint current = psi(start);
    uint64_t steps = 1;
    while (current != start) {
        current = psi(current);
        ++steps;
        if (steps > field.size() + 1) return false;  // unreachable for a bijection
    }
    return steps == field.size() + 1;
}

MoebiusMap find_psi(const Field& field) {
    uint64_t q = field.size();
    FieldElement one = field.one();
    for (uint64_t ac = 0; ac < q; ++ac) {
        FieldElement a = field.decode(ac);
        for (uint64_t bc = 0; bc < q; ++bc) {
            FieldElement b = field.decode(bc);
            for (uint64_t dc = 0; dc < q; ++dc) {
                FieldElement d = field.decode(dc);
                if (a * d == b) continue;  // singular with c = 1
                MoebiusMap candidate(a, b, one, d);
                if (is_full_cycle(candidate)) return candidate;
            }
        }
    }
    throw Error(ErrorCode::NotFound, "no full-cycle map found (unexpected)");
}

}  // namespace flseq
