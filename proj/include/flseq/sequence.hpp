#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "flseq/character.hpp"
#include "flseq/projective.hpp"

namespace flseq {

/// Everything needed to rebuild a sequence from scratch.
struct SequenceProvenance {
    MoebiusMap psi;
    MoebiusMap phi;
    Character chi;
};

/// The length-(q+1) character sequence: entry j is chi(phi(psi^j(1))).
class CharSequence {
public:
    CharSequence(std::vector<UnitValue> entries, SequenceProvenance provenance)
        : entries_(std::move(entries)), provenance_(std::move(provenance)) {}

    size_t length() const { return entries_.size(); }
    const UnitValue& operator[](size_t j) const { return entries_[j]; }
    const std::vector<UnitValue>& entries() const { return entries_; }
    const SequenceProvenance& provenance() const { return provenance_; }

    std::vector<std::complex<double>> to_complex() const;

    /// All entries are +1 or -1 (order <= 2 values), so correlation sums
    /// can run in exact integer arithmetic.
    bool is_antipodal() const;

    bool same_entries(const CharSequence& rhs) const {
        return entries_ == rhs.entries_;
    }

private:
    std::vector<UnitValue> entries_;
    SequenceProvenance provenance_;
};

/// A set of sequences sharing (field, psi, chi), indexed by their phi maps.
struct Family {
    std::vector<CharSequence> members;

    size_t size() const { return members.size(); }
    size_t length() const { return members.empty() ? 0 : members.front().length(); }
};

/// Builds chi(phi(psi^j(1))) for j = 0..q. psi must sweep P^1(F_q) in a
/// single cycle.
CharSequence build_sequence(const MoebiusMap& phi, const MoebiusMap& psi,
                            const Character& chi);

/// Left rotation by s: entry j of the result is entry (j+s) mod N of the
/// input. The provenance phi becomes phi composed with psi^s, which is the
/// map that builds the shifted sequence directly.
CharSequence cyclic_shift(const CharSequence& seq, uint64_t s);

Family build_family(const std::vector<MoebiusMap>& phis, const MoebiusMap& psi,
                    const Character& chi);

/// How the family's phi maps are chosen; the choice is deterministic in
/// every mode.
struct PhiStrategy {
    enum class Kind { All, Sample, CosetDistinct };
    Kind kind = Kind::CosetDistinct;
    uint64_t sample_size = 0;
    uint64_t seed = 1;

    /// Parses "all", "coset-distinct", "sample:K" or "sample:K,seed=S".
    static PhiStrategy parse(const std::string& text);
    std::string to_string() const;
};

/// Deterministic phi list. "all" enumerates the whole group (q <= 64);
/// "sample" draws distinct maps from a seeded generator; "coset-distinct"
/// keeps one representative per left coset of <psi>, so no two chosen maps
/// produce cyclic shifts of each other.
std::vector<MoebiusMap> select_phis(const Field& field, const PhiStrategy& strategy,
                                    const MoebiusMap& psi);

}  // namespace flseq
