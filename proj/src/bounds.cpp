#include "flseq/bounds.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "flseq/error.hpp"

namespace flseq {

double welch_bound(uint64_t length, uint64_t family_size) {
    if (length < 1 || family_size < 1)
        throw Error(ErrorCode::BadInput, "welch_bound needs N >= 1 and M >= 1");
    if (family_size == 1) return 0.0;
    double n = static_cast<double>(length);
    double m = static_cast<double>(family_size);
    return n * std::sqrt((m - 1.0) / (n * m - 1.0));
}

double sidelnikov_estimate(uint64_t length, uint64_t u, Alphabet alphabet) {
    if (u < 1) throw Error(ErrorCode::BadInput, "sidelnikov_estimate needs u >= 1");
    double n = static_cast<double>(length);
    if (alphabet == Alphabet::Binary) {
        double odd_factorial = 1.0;  // 1*3*5*...*(2u-1)
        for (uint64_t k = 3; k <= 2 * u - 1; k += 2) odd_factorial *= static_cast<double>(k);
        return n * (2.0 * static_cast<double>(u) + 1.0 - 1.0 / odd_factorial);
    }
    double factorial = 1.0;
    for (uint64_t k = 2; k <= u; ++k) factorial *= static_cast<double>(k);
    return n * (static_cast<double>(u) + 1.0 - 1.0 / factorial);
}

double simplified_bound(uint64_t length, Alphabet alphabet) {
    if (length < 1) throw Error(ErrorCode::BadInput, "simplified_bound needs N >= 1");
    double n = static_cast<double>(length);
    return alphabet == Alphabet::Binary ? std::sqrt(2.0 * n) : std::sqrt(n);
}

Rational antipodal_code_bound(const AntipodalBoundInput& input) {
    long long n = input.n;
    long long off = n - 2 * input.d;  // n - 2d
    long long num = 2 * n * n * n - 2 * n * off * off;
    long long den = 3 * n - off * off - 2;
    if (den == 0)
        throw Error(ErrorCode::ZeroDenominator,
                    "antipodal bound denominator vanishes at n = " + std::to_string(n) +
                        ", d = " + std::to_string(input.d));
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

KerdockParams kerdock_params(uint32_t m) {
    if (m < 2 || m % 2 != 0)
        throw Error(ErrorCode::OddM, "Kerdock parameters need even m >= 2");
    uint64_t n = 1ull << m;
    uint64_t root = 1ull << (m / 2);
    return KerdockParams{n, (n - root) / 2, n * n};
}

BoundReport make_bound_report(uint64_t length, uint64_t family_size) {
    BoundReport report;
    report.N = length;
    report.M = family_size;
    report.u = length > 1 ? std::log(static_cast<double>(family_size)) /
                                std::log(static_cast<double>(length))
                          : 0.0;
    report.u_int = std::max<uint64_t>(
        1, static_cast<uint64_t>(std::llround(std::max(report.u, 1.0))));
    report.welch = welch_bound(length, family_size);
    report.sidelnikov_sq_binary =
        sidelnikov_estimate(length, report.u_int, Alphabet::Binary);
    report.sidelnikov_sq_nonbinary =
        sidelnikov_estimate(length, report.u_int, Alphabet::NonBinary);
    report.simplified_binary = simplified_bound(length, Alphabet::Binary);
    report.simplified_nonbinary = simplified_bound(length, Alphabet::NonBinary);
    return report;
}

}  // namespace flseq
