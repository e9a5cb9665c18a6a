#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "flseq/character.hpp"
#include "flseq/field.hpp"
#include "flseq/projective.hpp"
#include "flseq/sequence.hpp"

namespace flseq {

// Reports use ordered_json so identical inputs serialize byte-identically.
using json = nlohmann::ordered_json;

json field_to_json(const Field& field);

/// Rebuilds the field from {"p", "m", "modulus"} and cross-checks the stored
/// generator when present.
std::unique_ptr<Field> field_from_json(const json& j);

/// [a, b, c, d], each coefficient a constant-first vector.
json map_to_json(const MoebiusMap& f);
MoebiusMap map_from_json(const json& j, const Field& field);

/// Finite points as coefficient vectors, infinity as the string "inf".
json point_to_json(const ProjPoint& pt);

json character_to_json(const Character& chi);
Character character_from_json(const json& j, const Field& field);

/// Standalone sequence with full provenance.
json sequence_to_json(const CharSequence& seq);

/// Family manifest: field, psi, chi, and one {"phi", "entries"} per member.
json family_to_json(const Family& fam);

/// A family read back from JSON; the field owns every element the members
/// reference, so keep the pair together.
struct LoadedFamily {
    std::unique_ptr<Field> field;
    Family family;
};

LoadedFamily family_from_json(const json& j);

/// One CSV row of exponents per member; files stay exact.
std::string family_to_csv(const Family& fam);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace flseq
