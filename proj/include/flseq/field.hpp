#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flseq/error.hpp"

namespace flseq {

class Field;

/// Element of GF(p^m) in the polynomial basis: coeffs[i] is the coefficient
/// of x^i, each in [0, p). Prime fields are the m = 1 case.
class FieldElement {
public:
    FieldElement(const Field& field, std::vector<uint32_t> coeffs);

    const Field& field() const { return *field_; }
    const std::vector<uint32_t>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    /// Mixed-radix encoding sum coeffs[i] * p^i; a bijection onto [0, q).
    uint64_t encode() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(uint64_t k) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

private:
    const Field* field_;
    std::vector<uint32_t> coeffs_;

    void require_same_field(const FieldElement& rhs) const;
};

/// GF(p^m) with a fixed monic irreducible modulus, a fixed primitive element,
/// and an eager discrete-log table for q <= 2^16. Immutable after
/// construction; all element operations are pure, so concurrent reads need
/// no coordination.
///
/// Both the modulus (when not supplied) and the generator are chosen as the
/// first candidate in ascending polynomial-basis encoding, so every run
/// picks the same field presentation.
class Field {
public:
    /// Builds GF(p^m). When modulus is omitted it is found by deterministic
    /// search; when given it must be monic of degree m (coefficient list,
    /// constant term first, length m+1) and irreducible over Z_p.
    Field(uint32_t p, uint32_t m,
          std::optional<std::vector<uint32_t>> modulus = std::nullopt);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;
    Field(Field&&) = delete;
    Field& operator=(Field&&) = delete;

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return m_; }
    uint64_t size() const { return q_; }

    /// Monic modulus, constant term first, length m+1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;

    /// Element from a coefficient list (constant term first); coefficients
    /// are reduced mod p, length must be <= m (padded with zeros).
    FieldElement element(std::vector<uint32_t> coeffs) const;

    /// Inverse of FieldElement::encode.
    FieldElement decode(uint64_t code) const;

    /// The fixed primitive element g of order q-1.
    const FieldElement& generator() const { return *generator_; }

    /// Exponent k in [0, q-1) with g^k = x. Requires x != 0 and a field
    /// small enough for the eager table.
    uint64_t dlog(const FieldElement& x) const;

    bool has_dlog_table() const { return !dlog_table_.empty(); }

    /// Eager dlog table limit; construction beyond kEncodingLimit refuses.
    static constexpr uint64_t kDlogLimit = 1u << 16;
    static constexpr uint64_t kEncodingLimit = 1u << 20;

private:
    uint32_t p_;
    uint32_t m_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    std::optional<FieldElement> generator_;
    std::vector<uint64_t> dlog_table_;  // indexed by encode(); empty above kDlogLimit

    friend class FieldElement;

    std::vector<uint32_t> reduce_product(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) const;
    FieldElement find_generator() const;
};

/// True when n is prime (trial division; inputs are desk scale).
bool is_prime(uint64_t n);

/// Prime factors of n, ascending, without multiplicity.
std::vector<uint64_t> prime_factors(uint64_t n);

/// Splits a prime power q into (p, m); throws BadInput otherwise.
std::pair<uint32_t, uint32_t> factor_prime_power(uint64_t q);

}  // namespace flseq
