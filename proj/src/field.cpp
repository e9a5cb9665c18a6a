#include "flseq/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace flseq {

namespace {

// Dense polynomial over Z_p, constant term first, trailing zeros allowed.
using Poly = std::vector<uint32_t>;

int poly_degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[i] != 0) return i;
    }
    return -1;
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
    // p is prime, a != 0: Fermat.
    uint64_t result = 1, base = a % p;
    uint64_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(result);
}

// In-place remainder of f by monic-leading divisor g (g need not be monic).
void poly_mod(Poly& f, const Poly& g, uint32_t p) {
    int dg = poly_degree(g);
    uint32_t lead_inv = mod_inverse(g[dg], p);
    for (int i = poly_degree(f); i >= dg; --i) {
        if (f[i] == 0) continue;
        uint64_t factor = static_cast<uint64_t>(f[i]) * lead_inv % p;
        for (int j = 0; j <= dg; ++j) {
            uint64_t sub = factor * g[j] % p;
            uint64_t cur = f[i - dg + j];
            f[i - dg + j] = static_cast<uint32_t>((cur + p - sub) % p);
        }
    }
}

bool poly_divides(const Poly& g, Poly f, uint32_t p) {
    poly_mod(f, g, p);
    return poly_degree(f) < 0;
}

// Irreducibility by trial division over all monic divisors of degree <= deg/2.
bool is_irreducible(const Poly& f, uint32_t p) {
    int deg = poly_degree(f);
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (int k = 1; 2 * k <= deg; ++k) {
        Poly g(k + 1, 0);
        g[k] = 1;
        // Odometer over the k lower coefficients.
        uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            uint64_t c = code;
            for (int i = 0; i < k; ++i) {
                g[i] = static_cast<uint32_t>(c % p);
                c /= p;
            }
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(uint32_t p, uint32_t m) {
    Poly f(m + 1, 0);
    f[m] = 1;
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
        uint64_t c = code;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<uint32_t>(c % p);
            c /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    // Unreachable: irreducibles of every degree exist over Z_p.
    throw Error(ErrorCode::NotFound, "no irreducible polynomial found");
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::pair<uint32_t, uint32_t> factor_prime_power(uint64_t q) {
    if (q < 2) throw Error(ErrorCode::BadInput, std::to_string(q) + " is not a prime power");
    auto factors = prime_factors(q);
    if (factors.size() != 1)
        throw Error(ErrorCode::BadInput, std::to_string(q) + " is not a prime power");
    uint64_t p = factors[0];
    uint32_t m = 0;
    uint64_t v = q;
    while (v > 1) {
        v /= p;
        ++m;
    }
    uint64_t check = 1;
    for (uint32_t i = 0; i < m; ++i) check *= p;
    if (check != q)
        throw Error(ErrorCode::BadInput, std::to_string(q) + " is not a prime power");
    return {static_cast<uint32_t>(p), m};
}

FieldElement::FieldElement(const Field& field, std::vector<uint32_t> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](uint32_t c) { return c == 0; });
}

uint64_t FieldElement::encode() const {
    uint64_t code = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        code = code * field_->p_ + coeffs_[i];
    }
    return code;
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
    if (field_ != rhs.field_)
        throw Error(ErrorCode::FieldMismatch, "elements belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(rhs);
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = (coeffs_[i] + rhs.coeffs_[i]) % field_->p_;
    return FieldElement(*field_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same_field(rhs);
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = (coeffs_[i] + field_->p_ - rhs.coeffs_[i]) % field_->p_;
    return FieldElement(*field_, std::move(out));
}

FieldElement FieldElement::operator-() const {
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = (field_->p_ - coeffs_[i]) % field_->p_;
    return FieldElement(*field_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(rhs);
    return FieldElement(*field_, field_->reduce_product(coeffs_, rhs.coeffs_));
}

FieldElement FieldElement::pow(uint64_t k) const {
    FieldElement result = field_->one();
    FieldElement base = *this;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return pow(field_->q_ - 2);
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

Field::Field(uint32_t p, uint32_t m, std::optional<std::vector<uint32_t>> modulus)
    : p_(p), m_(m) {
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");

    q_ = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > kEncodingLimit)
            throw Error(ErrorCode::FieldTooLarge,
                        "field size exceeds the supported limit of 2^20");
    }

    if (modulus) {
        modulus_ = std::move(*modulus);
        if (modulus_.size() != m + 1 || modulus_[m] != 1)
            throw Error(ErrorCode::DegreeMismatch,
                        "modulus must be monic of degree m (constant term first)");
        for (uint32_t& c : modulus_) c %= p;
        if (modulus_[m] != 1)
            throw Error(ErrorCode::DegreeMismatch, "modulus must be monic of degree m");
        if (!is_irreducible(modulus_, p))
            throw Error(ErrorCode::ReduciblePolynomial, "modulus is reducible over Z_p");
    } else {
        modulus_ = smallest_irreducible(p, m);
    }

    generator_ = find_generator();

    if (q_ <= kDlogLimit) {
        dlog_table_.assign(q_, 0);
        FieldElement x = one();
        for (uint64_t k = 0; k + 1 < q_; ++k) {
            dlog_table_[x.encode()] = k;
            x = x * *generator_;
        }
    }
}

FieldElement Field::zero() const {
    return FieldElement(*this, std::vector<uint32_t>(m_, 0));
}

FieldElement Field::one() const {
    std::vector<uint32_t> c(m_, 0);
    c[0] = 1;
    return FieldElement(*this, std::move(c));
}

FieldElement Field::element(std::vector<uint32_t> coeffs) const {
    if (coeffs.size() > m_)
        throw Error(ErrorCode::DegreeMismatch, "coefficient list longer than degree m");
    coeffs.resize(m_, 0);
    for (uint32_t& c : coeffs) c %= p_;
    return FieldElement(*this, std::move(coeffs));
}

FieldElement Field::decode(uint64_t code) const {
    std::vector<uint32_t> coeffs(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        coeffs[i] = static_cast<uint32_t>(code % p_);
        code /= p_;
    }
    return FieldElement(*this, std::move(coeffs));
}

std::vector<uint32_t> Field::reduce_product(const std::vector<uint32_t>& a,
                                            const std::vector<uint32_t>& b) const {
    std::vector<uint32_t> prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j) {
            prod[i + j] = static_cast<uint32_t>(
                (prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p_);
        }
    }
    poly_mod(prod, modulus_, p_);
    prod.resize(m_);
    return prod;
}

FieldElement Field::find_generator() const {
    auto factors = prime_factors(q_ - 1);
    for (uint64_t code = 1; code < q_; ++code) {
        FieldElement x = decode(code);
        bool primitive = true;
        for (uint64_t r : factors) {
            if (x.pow((q_ - 1) / r).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return x;
    }
    // q = 2 reaches here with no factor checks needed; code 1 already returned.
    return one();
}

uint64_t Field::dlog(const FieldElement& x) const {
    if (&x.field() != this)
        throw Error(ErrorCode::FieldMismatch, "element belongs to a different field");
    if (x.is_zero()) throw Error(ErrorCode::LogOfZero, "discrete log of zero");
    if (dlog_table_.empty())
        throw Error(ErrorCode::FieldTooLarge,
                    "discrete-log table not built for fields larger than 2^16");
    return dlog_table_[x.encode()];
}

}  // namespace flseq
