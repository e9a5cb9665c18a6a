#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "flseq/sequence.hpp"

namespace flseq {

/// Periodic cross-correlation sum_j a_j * conj(b_(j+s) mod N). For +/-1
/// sequences the sum is accumulated in integers, so the result is exact.
std::complex<double> cross_correlation(const CharSequence& a, const CharSequence& b,
                                       uint64_t s);

/// T_s of a sequence against its own left shift by s.
std::complex<double> autocorrelation(const CharSequence& seq, uint64_t s);

/// Full autocorrelation spectrum with the off-peak maximum.
struct CorrelationReport {
    size_t N = 0;
    std::vector<std::complex<double>> spectrum;  // T_s for s = 0..N-1
    double tmax = 0.0;                           // max |T_s| over s = 1..N-1
    size_t argmax_shift = 0;
};

CorrelationReport auto_spectrum(const CharSequence& seq);

std::vector<std::complex<double>> cross_spectrum(const CharSequence& a,
                                                 const CharSequence& b);

/// Max |T_s| over nontrivial shifts s = 1..N-1.
double tmax_auto(const CharSequence& seq);

/// Family-level maximum over all ordered pairs and shifts, excluding only
/// the in-phase diagonal (i = j, s = 0). Ties resolve to the
/// lexicographically smallest (i, j, s).
struct FamilyCorrelation {
    double tmax = 0.0;
    size_t i = 0;
    size_t j = 0;
    size_t s = 0;
    bool has_duplicates = false;  // two members with identical entries
};

FamilyCorrelation tmax_family(const Family& fam);

}  // namespace flseq
