#include "flseq/sequence.hpp"

#include <random>
#include <unordered_set>

namespace flseq {

std::vector<std::complex<double>> CharSequence::to_complex() const {
    std::vector<std::complex<double>> out;
    out.reserve(entries_.size());
    for (const UnitValue& v : entries_) out.push_back(v.to_complex());
    return out;
}

bool CharSequence::is_antipodal() const {
    for (const UnitValue& v : entries_) {
        if (v.num != 0 && 2 * v.num != v.den) return false;
    }
    return true;
}

CharSequence build_sequence(const MoebiusMap& phi, const MoebiusMap& psi,
                            const Character& chi) {
    if (!is_full_cycle(psi))
        throw Error(ErrorCode::PsiNotFullCycle,
                    "psi does not sweep the projective line in one cycle");
    const Field& field = psi.field();
    std::vector<UnitValue> entries;
    entries.reserve(field.size() + 1);
    ProjPoint pt(field.one());
    for (uint64_t j = 0; j <= field.size(); ++j) {
        entries.push_back(chi(phi(pt)));
        pt = psi(pt);
    }
    return CharSequence(std::move(entries), SequenceProvenance{psi, phi, chi});
}

CharSequence cyclic_shift(const CharSequence& seq, uint64_t s) {
    size_t n = seq.length();
    s %= n;
    std::vector<UnitValue> entries(n);
    for (size_t j = 0; j < n; ++j) entries[j] = seq[(j + s) % n];
    SequenceProvenance prov = seq.provenance();
    prov.phi = prov.phi.compose(prov.psi.pow(s));
    return CharSequence(std::move(entries), std::move(prov));
}

Family build_family(const std::vector<MoebiusMap>& phis, const MoebiusMap& psi,
                    const Character& chi) {
    if (phis.empty())
        throw Error(ErrorCode::BadInput, "family needs at least one phi");
    Family fam;
    fam.members.reserve(phis.size());
    for (const MoebiusMap& phi : phis) fam.members.push_back(build_sequence(phi, psi, chi));
    return fam;
}

PhiStrategy PhiStrategy::parse(const std::string& text) {
    PhiStrategy s;
    if (text == "all") {
        s.kind = Kind::All;
        return s;
    }
    if (text == "coset-distinct") {
        s.kind = Kind::CosetDistinct;
        return s;
    }
    if (text.rfind("sample:", 0) == 0) {
        s.kind = Kind::Sample;
        std::string rest = text.substr(7);
        size_t comma = rest.find(',');
        std::string count = comma == std::string::npos ? rest : rest.substr(0, comma);
        try {
            s.sample_size = std::stoull(count);
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadInput, "bad sample size in phi strategy: " + text);
        }
        if (s.sample_size == 0)
            throw Error(ErrorCode::BadInput, "sample size must be positive");
        if (comma != std::string::npos) {
            std::string seed_part = rest.substr(comma + 1);
            if (seed_part.rfind("seed=", 0) != 0)
                throw Error(ErrorCode::BadInput, "bad phi strategy: " + text);
            try {
                s.seed = std::stoull(seed_part.substr(5));
            } catch (const std::exception&) {
                throw Error(ErrorCode::BadInput, "bad seed in phi strategy: " + text);
            }
        }
        return s;
    }
    throw Error(ErrorCode::BadInput, "unknown phi strategy: " + text);
}

std::string PhiStrategy::to_string() const {
    switch (kind) {
        case Kind::All:
            return "all";
        case Kind::CosetDistinct:
            return "coset-distinct";
        case Kind::Sample:
            return "sample:" + std::to_string(sample_size) +
                   ",seed=" + std::to_string(seed);
    }
    return "?";
}

std::vector<MoebiusMap> select_phis(const Field& field, const PhiStrategy& strategy,
                                    const MoebiusMap& psi) {
    uint64_t q = field.size();
    switch (strategy.kind) {
        case PhiStrategy::Kind::All:
            return enumerate_group(field);

        case PhiStrategy::Kind::Sample: {
            uint64_t group_order = q * (q * q - 1);
            if (strategy.sample_size > group_order)
                throw Error(ErrorCode::BadInput, "sample size exceeds the group order");
            std::mt19937_64 rng(strategy.seed);
            std::vector<MoebiusMap> picked;
            std::unordered_set<MoebiusMap, MoebiusMapHash> seen;
            while (picked.size() < strategy.sample_size) {
                FieldElement a = field.decode(rng() % q);
                FieldElement b = field.decode(rng() % q);
                FieldElement c = field.decode(rng() % q);
                FieldElement d = field.decode(rng() % q);
                if ((a * d - b * c).is_zero()) continue;
                MoebiusMap candidate(std::move(a), std::move(b), std::move(c),
                                     std::move(d));
                if (seen.insert(candidate).second) picked.push_back(candidate);
            }
            return picked;
        }

        case PhiStrategy::Kind::CosetDistinct: {
            // phi and phi.compose(psi^s) build shift-equivalent sequences, so
            // mark the whole left coset phi<psi> as soon as phi is kept.
            std::vector<MoebiusMap> psi_powers;
            psi_powers.reserve(q + 1);
            MoebiusMap power = MoebiusMap::identity(field);
            for (uint64_t s = 0; s <= q; ++s) {
                psi_powers.push_back(power);
                power = power.compose(psi);
            }
            std::vector<MoebiusMap> reps;
            std::unordered_set<MoebiusMap, MoebiusMapHash> seen;
            for (const MoebiusMap& f : enumerate_group(field)) {
                if (seen.contains(f)) continue;
                reps.push_back(f);
                for (const MoebiusMap& power_s : psi_powers)
                    seen.insert(f.compose(power_s));
            }
            return reps;
        }
    }
    throw Error(ErrorCode::BadInput, "unknown phi strategy");
}

}  // namespace flseq
