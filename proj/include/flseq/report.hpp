#pragma once

#include <optional>
#include <string>

#include "flseq/bounds.hpp"
#include "flseq/correlation.hpp"
#include "flseq/json_io.hpp"
#include "flseq/linear_span.hpp"

namespace flseq {

/// Everything a run needs; reports embed it so results are reproducible
/// from the file alone.
struct RunConfig {
    uint32_t p = 0;
    uint32_t m = 0;
    std::optional<std::vector<uint32_t>> modulus;
    uint64_t char_order = 2;
    PhiStrategy phis;
    size_t periods = 2;

    static RunConfig from_q(uint64_t q);
};

json psi_report(const Field& field);

/// Per-member autocorrelation spectra and the family maximum; cross spectra
/// for every ordered pair on request.
json correlate_report(const Family& fam, bool include_pairs);

/// Spectrum rows "member,s,re,im,abs", one block per member.
std::string correlate_csv(const Family& fam);

json bounds_report(uint64_t length, uint64_t family_size, std::optional<double> measured);

json kerdock_report(uint32_t m);

/// Span and connection per member; null members where the character order
/// is unsupported never appear (the whole call rejects instead).
json linspan_report(const Family& fam, size_t periods);

/// One-shot pipeline: psi, family, correlation, bounds, linear span.
/// Output depends only on the config, so identical configs give
/// byte-identical JSON.
json full_report(const RunConfig& config);

}  // namespace flseq
