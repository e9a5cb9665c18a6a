#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "flseq/linear_span.hpp"

using flseq::Character;
using flseq::CharSequence;
using flseq::Error;
using flseq::ErrorCode;
using flseq::Field;
using flseq::LinearSpanResult;
using flseq::MoebiusMap;
using flseq::SymbolStream;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::BadInput;
}

// Exhaustive oracle: is there any recursion of length len consistent with
// the whole stream? Seeds are the first len symbols, so only the p^len
// connection vectors need trying.
bool some_recursion_of_length(uint32_t p, size_t len, const SymbolStream& stream) {
    std::vector<uint32_t> conn(len, 0);
    while (true) {
        LinearSpanResult candidate{len, conn};
        if (flseq::regenerates(candidate, stream)) return true;
        size_t i = 0;
        for (; i < len; ++i) {
            if (++conn[i] < p) break;
            conn[i] = 0;
        }
        if (i == len) return false;
    }
}

}  // namespace

TEST_CASE("all-zero stream has span 0") {
    for (uint32_t p : {2u, 3u, 5u}) {
        SymbolStream stream{p, std::vector<uint32_t>(10, 0)};
        LinearSpanResult r = flseq::berlekamp_massey(stream);
        CHECK(r.span == 0);
        CHECK(r.connection.empty());
    }
}

TEST_CASE("7-periodic m-sequence has span 3 with connection x^3 + x + 1") {
    // Oracle: generate the stream from s_n = s_(n-2) + s_(n-3) and demand
    // BM return exactly that rule.
    SymbolStream generated =
        flseq::lfsr_generate(2, {0, 1, 1}, {1, 0, 0}, 14);  // two periods
    CHECK(generated.symbols ==
          std::vector<uint32_t>{1, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1});
    LinearSpanResult r = flseq::berlekamp_massey(generated);
    CHECK(r.span == 3);
    CHECK(r.connection == std::vector<uint32_t>{0, 1, 1});
    CHECK(flseq::regenerates(r, generated));
}

TEST_CASE("0,0,1,0 repeated twice has span 4") {
    SymbolStream stream{2, {0, 0, 1, 0, 0, 0, 1, 0}};
    LinearSpanResult r = flseq::berlekamp_massey(stream);
    CHECK(r.span == 4);
    CHECK(flseq::regenerates(r, stream));
    // Oracle: no recursion of length <= 3 is consistent.
    for (size_t len = 0; len <= 3; ++len)
        CHECK(!some_recursion_of_length(2, len, stream));
    CHECK(some_recursion_of_length(2, 4, stream));
}

TEST_CASE("lfsr_generate") {
    SUBCASE("x^3 + x + 1 from seed 1,0,0") {
        SymbolStream s = flseq::lfsr_generate(2, {0, 1, 1}, {1, 0, 0}, 7);
        CHECK(s.symbols == std::vector<uint32_t>{1, 0, 0, 1, 0, 1, 1});
    }
    SUBCASE("empty connection generates zeros") {
        SymbolStream s = flseq::lfsr_generate(2, {}, {}, 5);
        CHECK(s.symbols == std::vector<uint32_t>(5, 0));
    }
    SUBCASE("p=3 constant recursion") {
        SymbolStream s = flseq::lfsr_generate(3, {1}, {2}, 4);
        CHECK(s.symbols == std::vector<uint32_t>{2, 2, 2, 2});
    }
    SUBCASE("seed length must match the connection") {
        CHECK(code_of([] { flseq::lfsr_generate(2, {1, 1}, {1}, 6); }) ==
              ErrorCode::SeedLengthMismatch);
    }
}

TEST_CASE("oracle round-trip: 200 random LFSRs") {
    std::mt19937_64 rng(1234);
    const uint32_t primes[] = {2, 3, 5};
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t p = primes[rng() % 3];
        size_t ell = 1 + rng() % 12;
        std::vector<uint32_t> conn(ell), seed(ell);
        bool nonzero_seed = false, nonzero_conn = false;
        for (size_t i = 0; i < ell; ++i) {
            conn[i] = static_cast<uint32_t>(rng() % p);
            seed[i] = static_cast<uint32_t>(rng() % p);
            nonzero_conn |= conn[i] != 0;
            nonzero_seed |= seed[i] != 0;
        }
        if (!nonzero_seed) seed[0] = 1;
        if (!nonzero_conn) conn[ell - 1] = 1;
        SymbolStream stream = flseq::lfsr_generate(p, conn, seed, 3 * ell);
        LinearSpanResult r = flseq::berlekamp_massey(stream);
        CAPTURE(trial);
        CHECK(r.span <= ell);
        CHECK(flseq::regenerates(r, stream));
    }
}

TEST_CASE("minimality by exhaustive search (span <= 6, p <= 3)") {
    std::mt19937_64 rng(77);
    for (uint32_t p : {2u, 3u}) {
        for (int trial = 0; trial < 20; ++trial) {
            size_t ell = 1 + rng() % 6;
            std::vector<uint32_t> conn(ell), seed(ell);
            for (size_t i = 0; i < ell; ++i) {
                conn[i] = static_cast<uint32_t>(rng() % p);
                seed[i] = static_cast<uint32_t>(rng() % p);
            }
            if (std::all_of(seed.begin(), seed.end(), [](uint32_t v) { return !v; }))
                seed[0] = 1;
            SymbolStream stream = flseq::lfsr_generate(p, conn, seed, 3 * ell + 4);
            LinearSpanResult r = flseq::berlekamp_massey(stream);
            CHECK(flseq::regenerates(r, stream));
            for (size_t shorter = 0; shorter < r.span; ++shorter)
                CHECK(!some_recursion_of_length(p, shorter, stream));
        }
    }
}

TEST_CASE("every 2l-window of a short-period stream recovers the recursion") {
    // Periodic streams with period <= 32; BM on any 2l consecutive symbols
    // must yield a recursion that regenerates the full period.
    struct Case {
        uint32_t p;
        std::vector<uint32_t> conn;
        std::vector<uint32_t> seed;
    };
    const Case cases[] = {
        {2, {0, 1, 1}, {1, 0, 0}},     // period 7
        {2, {1, 1}, {0, 1}},           // period 3
        {3, {0, 1}, {1, 0}},           // s_n = s_(n-2): period <= 4... period 2 pairs
        {3, {1, 1}, {1, 2}},           // Fibonacci mod 3, period 8
        {5, {1, 1}, {1, 3}},           // Fibonacci mod 5, period 20
    };
    for (const Case& c : cases) {
        // True span from two generous periods.
        SymbolStream long_stream = flseq::lfsr_generate(c.p, c.conn, c.seed, 96);
        LinearSpanResult truth = flseq::berlekamp_massey(long_stream);
        size_t ell = truth.span;
        REQUIRE(ell >= 1);
        // Find the period within 32.
        size_t period = 0;
        for (size_t cand = 1; cand <= 32; ++cand) {
            bool ok = true;
            for (size_t i = 0; i + cand < long_stream.symbols.size() && ok; ++i)
                ok = long_stream.symbols[i] == long_stream.symbols[i + cand];
            if (ok) {
                period = cand;
                break;
            }
        }
        REQUIRE(period >= 1);
        for (size_t offset = 0; offset < period; ++offset) {
            std::vector<uint32_t> window(2 * ell);
            for (size_t i = 0; i < 2 * ell; ++i)
                window[i] = long_stream.symbols[(offset + i) % period];
            LinearSpanResult local =
                flseq::berlekamp_massey(SymbolStream{c.p, window});
            // The window recursion must regenerate the stream starting at
            // the window's offset, across three full periods.
            std::vector<uint32_t> expect(3 * period);
            for (size_t i = 0; i < expect.size(); ++i)
                expect[i] = long_stream.symbols[(offset + i) % period];
            CHECK(flseq::regenerates(local, SymbolStream{c.p, expect}));
        }
    }
}

TEST_CASE("span of a prefix never exceeds the full span") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        uint32_t p = trial % 2 == 0 ? 2 : 3;
        std::vector<uint32_t> symbols(24);
        for (auto& s : symbols) s = static_cast<uint32_t>(rng() % p);
        SymbolStream full{p, symbols};
        size_t full_span = flseq::berlekamp_massey(full).span;
        for (size_t len = 1; len <= symbols.size(); ++len) {
            SymbolStream prefix{
                p, std::vector<uint32_t>(symbols.begin(), symbols.begin() + len)};
            CHECK(flseq::berlekamp_massey(prefix).span <= full_span);
        }
    }
}

TEST_CASE("to_symbol_stream") {
    Field f(3, 1);
    MoebiusMap psi(f.element({1}), f.element({1}), f.element({2}), f.element({1}));
    Character chi = Character::by_order(f, 2);
    CharSequence seq = flseq::build_sequence(MoebiusMap::identity(f), psi, chi);

    SUBCASE("the q=3 sequence maps -1 to 1") {
        SymbolStream s = flseq::to_symbol_stream(seq, 1);
        CHECK(s.modulus == 2);
        CHECK(s.symbols == std::vector<uint32_t>{0, 0, 1, 0});
    }
    SUBCASE("two periods repeat the symbols") {
        SymbolStream s = flseq::to_symbol_stream(seq, 2);
        CHECK(s.symbols == std::vector<uint32_t>{0, 0, 1, 0, 0, 0, 1, 0});
    }
    SUBCASE("trivial character maps to all zeros") {
        CharSequence ones =
            flseq::build_sequence(MoebiusMap::identity(f), psi, Character(f, 0));
        SymbolStream s = flseq::to_symbol_stream(ones, 2);
        CHECK(s.modulus == 2);
        CHECK(s.symbols == std::vector<uint32_t>(8, 0));
    }
    SUBCASE("composite character order is rejected") {
        Field f5(5, 1);
        MoebiusMap psi5 = flseq::find_psi(f5);
        Character chi4 = Character::by_order(f5, 4);
        CharSequence seq4 =
            flseq::build_sequence(MoebiusMap::identity(f5), psi5, chi4);
        CHECK(code_of([&] { flseq::to_symbol_stream(seq4, 1); }) ==
              ErrorCode::CompositeCharacterOrder);
    }
}

TEST_CASE("the q=3 perfect sequence has span 4 over two periods") {
    Field f(3, 1);
    MoebiusMap psi(f.element({1}), f.element({1}), f.element({2}), f.element({1}));
    Character chi = Character::by_order(f, 2);
    CharSequence seq = flseq::build_sequence(MoebiusMap::identity(f), psi, chi);
    SymbolStream stream = flseq::to_symbol_stream(seq, 2);
    LinearSpanResult r = flseq::berlekamp_massey(stream);
    CHECK(r.span == 4);
    CHECK(flseq::regenerates(r, stream));
}

TEST_CASE("berlekamp_massey input validation") {
    CHECK(code_of([] { flseq::berlekamp_massey(SymbolStream{4, {1, 0}}); }) ==
          ErrorCode::NonPrimeModulus);
    CHECK(code_of([] { flseq::berlekamp_massey(SymbolStream{2, {}}); }) ==
          ErrorCode::BadInput);
}
