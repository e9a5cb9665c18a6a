#pragma once

#include <cstdint>

namespace flseq {

enum class Alphabet { Binary, NonBinary };

/// Welch lower bound on T(A) for M unit-energy length-N sequences:
/// N * sqrt((M-1)/(N*M-1)). Zero for M = 1.
double welch_bound(uint64_t length, uint64_t family_size);

/// Lower estimate of T_max^2 when the family size is N^u:
///   binary:     N * (2u+1 - 1/(1*3*5*...*(2u-1)))
///   nonbinary:  N * (u+1 - 1/u!)
double sidelnikov_estimate(uint64_t length, uint64_t u, Alphabet alphabet);

/// The u = 1 simplification: sqrt(2N) for binary, sqrt(N) otherwise.
/// Applies to families with M close to N, not to single sequences.
double simplified_bound(uint64_t length, Alphabet alphabet);

/// Reduced fraction with positive denominator; antipodal-code bounds are
/// evaluated exactly so "meets the bound" is an equality test.
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }

    bool operator==(const Rational& rhs) const = default;
};

struct AntipodalBoundInput {
    long long n;  // code length
    long long d;  // code distance
};

/// Size bound for an antipodal binary code:
/// (2n^3 - 2n(n-2d)^2) / (3n - (n-2d)^2 - 2), exact.
Rational antipodal_code_bound(const AntipodalBoundInput& input);

struct KerdockParams {
    uint64_t n;     // 2^m
    uint64_t d;     // (n - sqrt(n)) / 2
    uint64_t size;  // n^2
};

/// Kerdock code parameters for even m >= 2.
KerdockParams kerdock_params(uint32_t m);

/// Every bound evaluated for one (N, M) pair. u is ln M / ln N; the
/// Sidelnikov forms need an integer exponent, so they are evaluated at
/// u_int = max(1, round(u)).
struct BoundReport {
    uint64_t N = 0;
    uint64_t M = 0;
    double u = 0.0;
    uint64_t u_int = 1;
    double welch = 0.0;
    double sidelnikov_sq_binary = 0.0;
    double sidelnikov_sq_nonbinary = 0.0;
    double simplified_binary = 0.0;
    double simplified_nonbinary = 0.0;
};

BoundReport make_bound_report(uint64_t length, uint64_t family_size);

}  // namespace flseq
