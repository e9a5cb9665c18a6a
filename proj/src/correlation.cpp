#include "flseq/correlation.hpp"

#include <cmath>

namespace flseq {

namespace {

// +1 for exponent 0, -1 for the half turn; callers guarantee antipodal input.
int64_t sign_of(const UnitValue& v) { return v.num == 0 ? 1 : -1; }

std::complex<double> cross_exact_or_float(const CharSequence& a, const CharSequence& b,
                                          uint64_t s, bool antipodal) {
    size_t n = a.length();
    if (antipodal) {
        int64_t sum = 0;
        for (size_t j = 0; j < n; ++j) sum += sign_of(a[j]) * sign_of(b[(j + s) % n]);
        return {static_cast<double>(sum), 0.0};
    }
    std::complex<double> sum{0.0, 0.0};
    for (size_t j = 0; j < n; ++j)
        sum += a[j].to_complex() * std::conj(b[(j + s) % n].to_complex());
    return sum;
}

}  // namespace

std::complex<double> cross_correlation(const CharSequence& a, const CharSequence& b,
                                       uint64_t s) {
    if (a.length() != b.length())
        throw Error(ErrorCode::LengthMismatch, "sequences have different lengths");
    return cross_exact_or_float(a, b, s % a.length(),
                                a.is_antipodal() && b.is_antipodal());
}

std::complex<double> autocorrelation(const CharSequence& seq, uint64_t s) {
    return cross_correlation(seq, seq, s);
}

std::vector<std::complex<double>> cross_spectrum(const CharSequence& a,
                                                 const CharSequence& b) {
    if (a.length() != b.length())
        throw Error(ErrorCode::LengthMismatch, "sequences have different lengths");
    bool antipodal = a.is_antipodal() && b.is_antipodal();
    std::vector<std::complex<double>> spectrum;
    spectrum.reserve(a.length());
    for (size_t s = 0; s < a.length(); ++s)
        spectrum.push_back(cross_exact_or_float(a, b, s, antipodal));
    return spectrum;
}

CorrelationReport auto_spectrum(const CharSequence& seq) {
    CorrelationReport report;
    report.N = seq.length();
    report.spectrum = cross_spectrum(seq, seq);
    for (size_t s = 1; s < report.N; ++s) {
        double mag = std::abs(report.spectrum[s]);
        if (s == 1 || mag > report.tmax) {
            report.tmax = mag;
            report.argmax_shift = s;
        }
    }
    return report;
}

double tmax_auto(const CharSequence& seq) { return auto_spectrum(seq).tmax; }

FamilyCorrelation tmax_family(const Family& fam) {
    FamilyCorrelation best;
    if (fam.members.empty()) return best;
    size_t n = fam.length();

    std::vector<std::vector<std::complex<double>>> complex_members;
    complex_members.reserve(fam.size());
    for (const CharSequence& member : fam.members) {
        if (member.length() != n)
            throw Error(ErrorCode::LengthMismatch, "family members differ in length");
        complex_members.push_back(member.to_complex());
    }

    for (size_t i = 0; i < fam.size(); ++i) {
        for (size_t j = 0; j < fam.size(); ++j) {
            if (i != j && fam.members[i].same_entries(fam.members[j]))
                best.has_duplicates = true;
            const auto& vi = complex_members[i];
            const auto& vj = complex_members[j];
            for (size_t s = 0; s < n; ++s) {
                if (i == j && s == 0) continue;
                std::complex<double> sum{0.0, 0.0};
                for (size_t t = 0; t < n; ++t) sum += vi[t] * std::conj(vj[(t + s) % n]);
                double mag = std::abs(sum);
                if (mag > best.tmax) {
                    best.tmax = mag;
                    best.i = i;
                    best.j = j;
                    best.s = s;
                }
            }
        }
    }
    return best;
}

}  // namespace flseq
