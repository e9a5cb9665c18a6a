#include "flseq/linear_span.hpp"

#include <string>

namespace flseq {

namespace {

uint32_t mod_pow(uint32_t base, uint32_t exp, uint32_t p) {
    uint64_t result = 1, b = base % p;
    while (exp) {
        if (exp & 1) result = result * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<uint32_t>(result);
}

uint32_t mod_inv(uint32_t a, uint32_t p) { return mod_pow(a % p, p - 2, p); }

}  // namespace

LinearSpanResult berlekamp_massey(const SymbolStream& stream) {
    uint32_t p = stream.modulus;
    if (!is_prime(p))
        throw Error(ErrorCode::NonPrimeModulus,
                    "modulus " + std::to_string(p) + " is not prime");
    if (stream.symbols.empty())
        throw Error(ErrorCode::BadInput, "empty symbol stream");

    const std::vector<uint32_t>& s = stream.symbols;
    // Massey's synthesis: C is the current connection polynomial
    // (constant 1), B the copy from the last length change.
    std::vector<uint32_t> c{1}, b{1};
    size_t span = 0, gap = 1;
    uint32_t last_discrepancy = 1;

    for (size_t n = 0; n < s.size(); ++n) {
        uint64_t discrepancy = s[n];
        for (size_t i = 1; i <= span && i <= n && i < c.size(); ++i)
            discrepancy += static_cast<uint64_t>(c[i]) * s[n - i];
        uint32_t delta = static_cast<uint32_t>(discrepancy % p);
        if (delta == 0) {
            ++gap;
            continue;
        }
        uint32_t factor =
            static_cast<uint32_t>(static_cast<uint64_t>(delta) * mod_inv(last_discrepancy, p) % p);
        if (2 * span <= n) {
            std::vector<uint32_t> saved = c;
            if (c.size() < b.size() + gap) c.resize(b.size() + gap, 0);
            for (size_t i = 0; i < b.size(); ++i) {
                uint64_t sub = static_cast<uint64_t>(factor) * b[i] % p;
                c[i + gap] = static_cast<uint32_t>((c[i + gap] + p - sub) % p);
            }
            span = n + 1 - span;
            b = std::move(saved);
            last_discrepancy = delta;
            gap = 1;
        } else {
            if (c.size() < b.size() + gap) c.resize(b.size() + gap, 0);
            for (size_t i = 0; i < b.size(); ++i) {
                uint64_t sub = static_cast<uint64_t>(factor) * b[i] % p;
                c[i + gap] = static_cast<uint32_t>((c[i + gap] + p - sub) % p);
            }
            ++gap;
        }
    }

    LinearSpanResult result;
    result.span = span;
    result.connection.assign(span, 0);
    for (size_t i = 1; i <= span && i < c.size(); ++i)
        result.connection[i - 1] = (p - c[i]) % p;
    return result;
}

SymbolStream lfsr_generate(uint32_t p, const std::vector<uint32_t>& connection,
                           const std::vector<uint32_t>& seed, size_t length) {
    if (seed.size() != connection.size())
        throw Error(ErrorCode::SeedLengthMismatch,
                    "seed length must match the connection length");
    if (length < seed.size())
        throw Error(ErrorCode::BadInput, "length shorter than the seed");
    SymbolStream out;
    out.modulus = p;
    out.symbols.reserve(length);
    for (uint32_t v : seed) out.symbols.push_back(v % p);
    for (size_t n = out.symbols.size(); n < length; ++n) {
        uint64_t acc = 0;
        for (size_t i = 0; i < connection.size(); ++i)
            acc += static_cast<uint64_t>(connection[i]) * out.symbols[n - 1 - i];
        out.symbols.push_back(static_cast<uint32_t>(acc % p));
    }
    return out;
}

bool regenerates(const LinearSpanResult& recursion, const SymbolStream& stream) {
    uint32_t p = stream.modulus;
    const std::vector<uint32_t>& s = stream.symbols;
    if (recursion.span > s.size()) return false;
    for (size_t n = recursion.span; n < s.size(); ++n) {
        uint64_t acc = 0;
        for (size_t i = 0; i < recursion.connection.size(); ++i)
            acc += static_cast<uint64_t>(recursion.connection[i]) * s[n - 1 - i];
        if (acc % p != s[n]) return false;
    }
    return true;
}

SymbolStream to_symbol_stream(const CharSequence& seq, size_t periods) {
    if (periods < 1) throw Error(ErrorCode::BadInput, "periods must be >= 1");
    uint64_t order = seq.provenance().chi.order();
    // Trivial chi: every exponent is 0; report over the smallest prime.
    uint64_t modulus = order == 1 ? 2 : order;
    if (!is_prime(modulus))
        throw Error(ErrorCode::CompositeCharacterOrder,
                    "character order " + std::to_string(order) +
                        " is composite; linear span is defined over prime orders");
    uint64_t n = seq.provenance().chi.field().size() - 1;
    SymbolStream out;
    out.modulus = static_cast<uint32_t>(modulus);
    out.symbols.reserve(periods * seq.length());
    for (size_t rep = 0; rep < periods; ++rep) {
        for (const UnitValue& v : seq.entries()) {
            uint64_t symbol = order == 1 ? 0 : v.num * order / n % order;
            out.symbols.push_back(static_cast<uint32_t>(symbol));
        }
    }
    return out;
}

}  // namespace flseq
