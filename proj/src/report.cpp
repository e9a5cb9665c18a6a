#include "flseq/report.hpp"

#include <cstdio>

namespace flseq {

namespace {

json complex_json(const std::complex<double>& z) {
    return json::array({z.real(), z.imag()});
}

json spectrum_json(const std::vector<std::complex<double>>& spectrum) {
    json j = json::array();
    for (const auto& z : spectrum) j.push_back(complex_json(z));
    return j;
}

std::string formatted(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

}  // namespace

RunConfig RunConfig::from_q(uint64_t q) {
    auto [p, m] = factor_prime_power(q);
    RunConfig config;
    config.p = p;
    config.m = m;
    return config;
}

json psi_report(const Field& field) {
    MoebiusMap psi = find_psi(field);
    json j;
    j["field"] = field_to_json(field);
    j["psi"] = map_to_json(psi);
    j["order"] = element_order(psi);
    json orbit_points = json::array();
    for (const ProjPoint& pt : orbit(psi, ProjPoint(field.one())))
        orbit_points.push_back(point_to_json(pt));
    j["orbit"] = std::move(orbit_points);
    return j;
}

json correlate_report(const Family& fam, bool include_pairs) {
    json j;
    j["N"] = fam.length();
    j["M"] = fam.size();
    json members = json::array();
    for (size_t i = 0; i < fam.size(); ++i) {
        CorrelationReport rep = auto_spectrum(fam.members[i]);
        json member;
        member["index"] = i;
        member["phi"] = map_to_json(fam.members[i].provenance().phi);
        member["T0"] = rep.spectrum.empty() ? 0.0 : rep.spectrum[0].real();
        member["tmax"] = rep.tmax;
        member["argmax_shift"] = rep.argmax_shift;
        member["spectrum"] = spectrum_json(rep.spectrum);
        members.push_back(std::move(member));
    }
    j["members"] = std::move(members);

    FamilyCorrelation family_max = tmax_family(fam);
    json fj;
    fj["TA"] = family_max.tmax;
    fj["i"] = family_max.i;
    fj["j"] = family_max.j;
    fj["s"] = family_max.s;
    if (family_max.has_duplicates) fj["note"] = "duplicate members";
    j["family"] = std::move(fj);

    if (include_pairs) {
        json pairs = json::array();
        for (size_t i = 0; i < fam.size(); ++i) {
            for (size_t k = 0; k < fam.size(); ++k) {
                if (i == k) continue;
                json pair;
                pair["i"] = i;
                pair["j"] = k;
                pair["spectrum"] =
                    spectrum_json(cross_spectrum(fam.members[i], fam.members[k]));
                pairs.push_back(std::move(pair));
            }
        }
        j["pairs"] = std::move(pairs);
    }
    return j;
}

std::string correlate_csv(const Family& fam) {
    std::string out = "member,s,re,im,abs\n";
    for (size_t i = 0; i < fam.size(); ++i) {
        CorrelationReport rep = auto_spectrum(fam.members[i]);
        for (size_t s = 0; s < rep.spectrum.size(); ++s) {
            const auto& z = rep.spectrum[s];
            out += std::to_string(i) + "," + std::to_string(s) + "," +
                   formatted(z.real()) + "," + formatted(z.imag()) + "," +
                   formatted(std::abs(z)) + "\n";
        }
    }
    return out;
}

json bounds_report(uint64_t length, uint64_t family_size, std::optional<double> measured) {
    BoundReport rep = make_bound_report(length, family_size);
    json j;
    j["N"] = rep.N;
    j["M"] = rep.M;
    j["u"] = rep.u;
    j["u_int"] = rep.u_int;
    j["welch"] = rep.welch;
    j["sidelnikov_sq_binary"] = rep.sidelnikov_sq_binary;
    j["sidelnikov_sq_nonbinary"] = rep.sidelnikov_sq_nonbinary;
    j["simplified_binary"] = rep.simplified_binary;
    j["simplified_nonbinary"] = rep.simplified_nonbinary;
    j["simplified_applicability"] =
        "family-level lower bounds, applicable when M is close to N";
    if (measured) {
        j["measured"] = *measured;
        j["measured_over_welch"] = rep.welch > 0.0 ? *measured / rep.welch : 0.0;
        j["consistent"] = *measured >= rep.welch - 1e-9;
    }
    return j;
}

json kerdock_report(uint32_t m) {
    KerdockParams params = kerdock_params(m);
    Rational bound = antipodal_code_bound(
        {static_cast<long long>(params.n), static_cast<long long>(params.d)});
    json j;
    j["m"] = m;
    j["n"] = params.n;
    j["d"] = params.d;
    j["size"] = params.size;
    json bj;
    bj["value"] = bound.value();
    bj["num"] = bound.num;
    bj["den"] = bound.den;
    j["antipodal_bound"] = std::move(bj);
    j["meets"] = bound.is_integer() &&
                 bound.num == static_cast<long long>(params.size);
    return j;
}

json linspan_report(const Family& fam, size_t periods) {
    json j;
    json members = json::array();
    for (size_t i = 0; i < fam.size(); ++i) {
        SymbolStream stream = to_symbol_stream(fam.members[i], periods);
        LinearSpanResult result = berlekamp_massey(stream);
        json member;
        member["index"] = i;
        member["span"] = result.span;
        member["connection"] = result.connection;
        member["modulus"] = stream.modulus;
        members.push_back(std::move(member));
    }
    j["periods"] = periods;
    j["members"] = std::move(members);
    return j;
}

json full_report(const RunConfig& config) {
    Field field(config.p, config.m, config.modulus);
    MoebiusMap psi = find_psi(field);
    Character chi = Character::by_order(field, config.char_order);
    std::vector<MoebiusMap> phis = select_phis(field, config.phis, psi);
    Family fam = build_family(phis, psi, chi);

    json j;
    json cfg;
    cfg["p"] = config.p;
    cfg["m"] = config.m;
    cfg["q"] = field.size();
    cfg["char_order"] = config.char_order;
    cfg["phis"] = config.phis.to_string();
    cfg["periods"] = config.periods;
    j["config"] = std::move(cfg);
    j["field"] = field_to_json(field);
    j["psi"] = map_to_json(psi);
    j["chi"] = character_to_json(chi);
    j["family"] = family_to_json(fam);
    j["correlation"] = correlate_report(fam, false);

    double measured = j["correlation"]["family"]["TA"].get<double>();
    j["bounds"] = bounds_report(fam.length(), fam.size(),
                                fam.size() >= 2 ? std::optional<double>(measured)
                                                : std::nullopt);

    uint64_t order = chi.order();
    if (order == 1 || is_prime(order)) {
        j["linear_span"] = linspan_report(fam, config.periods);
    } else {
        j["linear_span"] = nullptr;
        j["linear_span_note"] =
            "character order " + std::to_string(order) +
            "; linear span is only defined here for prime character orders";
    }
    return j;
}

}  // namespace flseq
