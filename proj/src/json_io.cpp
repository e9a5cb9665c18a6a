#include "flseq/json_io.hpp"

#include <fstream>
#include <sstream>

namespace flseq {

namespace {

std::vector<uint32_t> coeff_vector(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::BadInput, "expected a coefficient array");
    std::vector<uint32_t> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_unsigned() && !v.is_number_integer())
            throw Error(ErrorCode::BadInput, "coefficients must be nonnegative integers");
        long long value = v.get<long long>();
        if (value < 0) throw Error(ErrorCode::BadInput, "coefficients must be nonnegative");
        out.push_back(static_cast<uint32_t>(value));
    }
    return out;
}

json coeffs_json(const std::vector<uint32_t>& coeffs) {
    json j = json::array();
    for (uint32_t c : coeffs) j.push_back(c);
    return j;
}

}  // namespace

json field_to_json(const Field& field) {
    json j;
    j["p"] = field.characteristic();
    j["m"] = field.degree();
    j["modulus"] = coeffs_json(field.modulus());
    j["generator"] = coeffs_json(field.generator().coeffs());
    return j;
}

std::unique_ptr<Field> field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("m"))
        throw Error(ErrorCode::BadInput, "field description needs \"p\" and \"m\"");
    uint32_t p = j.at("p").get<uint32_t>();
    uint32_t m = j.at("m").get<uint32_t>();
    std::optional<std::vector<uint32_t>> modulus;
    if (j.contains("modulus")) modulus = coeff_vector(j.at("modulus"));
    auto field = std::make_unique<Field>(p, m, std::move(modulus));
    if (j.contains("generator")) {
        FieldElement stored = field->element(coeff_vector(j.at("generator")));
        if (stored != field->generator())
            throw Error(ErrorCode::BadInput,
                        "stored generator differs from the deterministic choice");
    }
    return field;
}

json map_to_json(const MoebiusMap& f) {
    json j = json::array();
    j.push_back(coeffs_json(f.a().coeffs()));
    j.push_back(coeffs_json(f.b().coeffs()));
    j.push_back(coeffs_json(f.c().coeffs()));
    j.push_back(coeffs_json(f.d().coeffs()));
    return j;
}

MoebiusMap map_from_json(const json& j, const Field& field) {
    if (!j.is_array() || j.size() != 4)
        throw Error(ErrorCode::BadInput, "map must be a [a, b, c, d] array");
    return MoebiusMap(field.element(coeff_vector(j[0])), field.element(coeff_vector(j[1])),
                      field.element(coeff_vector(j[2])), field.element(coeff_vector(j[3])));
}

json point_to_json(const ProjPoint& pt) {
    if (pt.is_infinity()) return json("inf");
    return coeffs_json(pt.value().coeffs());
}

json character_to_json(const Character& chi) {
    json j;
    j["index"] = chi.index();
    j["order"] = chi.order();
    return j;
}

Character character_from_json(const json& j, const Field& field) {
    if (!j.is_object() || !j.contains("index"))
        throw Error(ErrorCode::BadInput, "character description needs \"index\"");
    Character chi(field, j.at("index").get<uint64_t>());
    if (j.contains("order") && j.at("order").get<uint64_t>() != chi.order())
        throw Error(ErrorCode::BadInput, "character order does not match its index");
    return chi;
}

namespace {

json entries_json(const CharSequence& seq) {
    json entries = json::array();
    for (const UnitValue& v : seq.entries()) entries.push_back(v.num);
    return entries;
}

}  // namespace

json sequence_to_json(const CharSequence& seq) {
    const SequenceProvenance& prov = seq.provenance();
    json j;
    j["field"] = field_to_json(prov.chi.field());
    j["psi"] = map_to_json(prov.psi);
    j["phi"] = map_to_json(prov.phi);
    j["chi"] = character_to_json(prov.chi);
    j["entries"] = entries_json(seq);
    return j;
}

json family_to_json(const Family& fam) {
    if (fam.members.empty()) throw Error(ErrorCode::BadInput, "empty family");
    const SequenceProvenance& prov = fam.members.front().provenance();
    json j;
    j["field"] = field_to_json(prov.chi.field());
    j["psi"] = map_to_json(prov.psi);
    j["chi"] = character_to_json(prov.chi);
    json members = json::array();
    for (const CharSequence& seq : fam.members) {
        json member;
        member["phi"] = map_to_json(seq.provenance().phi);
        member["entries"] = entries_json(seq);
        members.push_back(std::move(member));
    }
    j["members"] = std::move(members);
    return j;
}

LoadedFamily family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("psi") ||
        !j.contains("chi") || !j.contains("members"))
        throw Error(ErrorCode::BadInput,
                    "family file needs \"field\", \"psi\", \"chi\" and \"members\"");
    LoadedFamily loaded;
    loaded.field = field_from_json(j.at("field"));
    const Field& field = *loaded.field;
    MoebiusMap psi = map_from_json(j.at("psi"), field);
    Character chi = character_from_json(j.at("chi"), field);
    uint64_t n = field.size() - 1;
    for (const auto& member : j.at("members")) {
        if (!member.contains("phi") || !member.contains("entries"))
            throw Error(ErrorCode::BadInput, "family member needs \"phi\" and \"entries\"");
        MoebiusMap phi = map_from_json(member.at("phi"), field);
        std::vector<UnitValue> entries;
        for (const auto& e : member.at("entries")) {
            uint64_t num = e.get<uint64_t>();
            if (num >= n) throw Error(ErrorCode::BadInput, "entry exponent out of range");
            entries.push_back(UnitValue{num, n});
        }
        if (entries.size() != field.size() + 1)
            throw Error(ErrorCode::BadInput, "member length must be q + 1");
        loaded.family.members.push_back(
            CharSequence(std::move(entries), SequenceProvenance{psi, phi, chi}));
    }
    if (loaded.family.members.empty())
        throw Error(ErrorCode::BadInput, "family file has no members");
    return loaded;
}

std::string family_to_csv(const Family& fam) {
    std::ostringstream out;
    for (const CharSequence& seq : fam.members) {
        for (size_t j = 0; j < seq.length(); ++j) {
            if (j) out << ',';
            out << seq[j].num;
        }
        out << '\n';
    }
    return out.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadInput, path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "short write to " + path);
}

}  // namespace flseq
