#pragma once

#include <cstdint>
#include <vector>

#include "flseq/sequence.hpp"

namespace flseq {

/// Symbols over a prime modulus, every value in [0, p).
struct SymbolStream {
    uint32_t modulus = 2;
    std::vector<uint32_t> symbols;
};

/// Span l and feedback coefficients (c_1..c_l) with
/// s_n = c_1*s_(n-1) + ... + c_l*s_(n-l) mod p for all n >= l.
struct LinearSpanResult {
    size_t span = 0;
    std::vector<uint32_t> connection;
};

/// Shortest linear recursion reproducing the stream (Berlekamp-Massey
/// synthesis over GF(p), p prime).
LinearSpanResult berlekamp_massey(const SymbolStream& stream);

/// Runs the recursion forward: the first |seed| symbols are the seed, each
/// later one follows the connection mod p.
SymbolStream lfsr_generate(uint32_t p, const std::vector<uint32_t>& connection,
                           const std::vector<uint32_t>& seed, size_t length);

/// Seeds the recursion with the stream's first `span` symbols and checks it
/// reproduces every symbol.
bool regenerates(const LinearSpanResult& recursion, const SymbolStream& stream);

/// Root-of-unity exponents reduced into Z_d for character order d, repeated
/// `periods` times. Order 2 gives the usual +1 -> 0, -1 -> 1 map; the
/// trivial character maps to an all-zero stream over modulus 2. Composite
/// orders are rejected.
SymbolStream to_symbol_stream(const CharSequence& seq, size_t periods);

}  // namespace flseq
