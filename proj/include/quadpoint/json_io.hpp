#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadpoint/bitmat.hpp"
#include "quadpoint/bitvec.hpp"
#include "quadpoint/errors.hpp"
#include "quadpoint/invariant.hpp"
#include "quadpoint/oracle.hpp"
#include "quadpoint/quadform.hpp"
#include "quadpoint/subspace.hpp"
#include "quadpoint/tsd.hpp"

// JSON wire formats.  Vectors are '0'/'1' strings (position i holds the
// coefficient of the i-th reference basis vector); matrices are arrays of row
// strings; subspaces are arrays of spanning vectors, canonicalized on load.
// Loaders throw ParseError for malformed documents and let the constructors'
// own validation errors pass through untouched.

namespace quadpoint {

namespace jsondetail {

inline const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j[key];
}

inline std::size_t uint_field(const nlohmann::json& j, const char* key) {
    const nlohmann::json& v = field(j, key);
    if (v.is_number_unsigned()) return v.get<std::size_t>();
    // Documents built in memory store small literals as signed integers.
    if (v.is_number_integer() && v.get<long long>() >= 0) {
        return static_cast<std::size_t>(v.get<long long>());
    }
    throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
}

inline std::string string_item(const nlohmann::json& v, const char* what) {
    if (!v.is_string()) throw ParseError(std::string(what) + " must be a string of bits");
    return v.get<std::string>();
}

inline std::vector<std::string> string_array(const nlohmann::json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const nlohmann::json& item : v) out.push_back(string_item(item, what));
    return out;
}

}  // namespace jsondetail

inline nlohmann::json to_json(const BitVec& v) { return v.to_string(); }

inline BitVec bitvec_from_json(const nlohmann::json& j) {
    return BitVec::from_string(jsondetail::string_item(j, "vector"));
}

inline nlohmann::json to_json(const BitMat& m) { return m.to_strings(); }

inline BitMat bitmat_from_json(const nlohmann::json& j) {
    return BitMat::from_strings(jsondetail::string_array(j, "matrix"));
}

inline nlohmann::json to_json(const Subspace& s) { return s.basis().to_strings(); }

inline Subspace subspace_from_json(const nlohmann::json& j, std::size_t ambient) {
    std::vector<BitVec> rows;
    for (const std::string& s : jsondetail::string_array(j, "subspace")) {
        BitVec v = BitVec::from_string(s);
        if (v.dim() != ambient) throw ParseError("spanning vector of wrong dimension");
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(ambient, rows);
}

inline nlohmann::json to_json(const QuadForm& f) {
    return nlohmann::json{{"dim", f.dim()}, {"gram", to_json(f.gram())}, {"diag", to_json(f.diag())}};
}

inline QuadForm quadform_from_json(const nlohmann::json& j) {
    const std::size_t dim = jsondetail::uint_field(j, "dim");
    BitMat gram = bitmat_from_json(jsondetail::field(j, "gram"));
    if (dim == 0 && gram.rows() == 0) gram = BitMat(0, 0);
    if (gram.rows() != dim) throw ParseError("gram row count must equal dim");
    BitVec diag = bitvec_from_json(jsondetail::field(j, "diag"));
    if (diag.dim() != dim) throw ParseError("diag length must equal dim");
    return QuadForm(std::move(gram), std::move(diag));
}

inline nlohmann::json to_json(const Tsd& t) {
    return nlohmann::json{
        {"form", to_json(t.form())}, {"A", to_json(t.a())}, {"B", to_json(t.b())}};
}

inline Tsd tsd_from_json(const nlohmann::json& j) {
    QuadForm form = quadform_from_json(jsondetail::field(j, "form"));
    Subspace a = subspace_from_json(jsondetail::field(j, "A"), form.dim());
    Subspace b = subspace_from_json(jsondetail::field(j, "B"), form.dim());
    return Tsd(std::move(form), std::move(a), std::move(b));
}

inline nlohmann::json to_json(Orientation o) {
    return o == Orientation::positive ? "+" : "-";
}

inline Orientation orientation_from_json(const nlohmann::json& j) {
    const std::string s = jsondetail::string_item(j, "orientation");
    if (s == "+") return Orientation::positive;
    if (s == "-") return Orientation::negative;
    throw ParseError("orientation must be \"+\" or \"-\"");
}

inline nlohmann::json to_json(const EmbeddingData& e) {
    return nlohmann::json{{"genus", e.genus()},
                          {"A0", to_json(e.a0())},
                          {"A1", to_json(e.a1())},
                          {"orientation", to_json(e.orientation())}};
}

inline EmbeddingData embedding_from_json(const nlohmann::json& j) {
    const std::size_t genus = jsondetail::uint_field(j, "genus");
    Subspace a0 = subspace_from_json(jsondetail::field(j, "A0"), 2 * genus);
    Subspace a1 = subspace_from_json(jsondetail::field(j, "A1"), 2 * genus);
    return EmbeddingData(genus, std::move(a0), std::move(a1),
                         orientation_from_json(jsondetail::field(j, "orientation")));
}

inline nlohmann::json to_json(const DiffeoData& h) {
    return nlohmann::json{
        {"genus", h.genus()}, {"h_star", to_json(h.h_star())}, {"eps_h", h.eps_h() ? 1 : 0}};
}

inline DiffeoData diffeo_from_json(const nlohmann::json& j) {
    const std::size_t genus = jsondetail::uint_field(j, "genus");
    BitMat h = bitmat_from_json(jsondetail::field(j, "h_star"));
    if (genus == 0 && h.rows() == 0) h = BitMat(0, 0);
    const nlohmann::json& eps = jsondetail::field(j, "eps_h");
    if (!eps.is_number_integer() || (eps.get<int>() != 0 && eps.get<int>() != 1)) {
        throw ParseError("eps_h must be 0 or 1");
    }
    return DiffeoData(genus, std::move(h), eps.get<int>() == 1);
}

inline nlohmann::json to_json(const SystemEmbedding& s) {
    nlohmann::json components = nlohmann::json::array();
    for (const EmbeddingData& e : s.components) components.push_back(to_json(e));
    return nlohmann::json{{"components", components}};
}

inline SystemEmbedding system_from_json(const nlohmann::json& j) {
    const nlohmann::json& comps = jsondetail::field(j, "components");
    if (!comps.is_array()) throw ParseError("components must be an array");
    SystemEmbedding s;
    for (const nlohmann::json& c : comps) s.components.push_back(embedding_from_json(c));
    return s;
}

inline nlohmann::json to_json(const oracle::EnumerationReport& r) {
    return nlohmann::json{{"dim", r.dim},
                          {"group_order", r.group_order},
                          {"tsd_count", r.tsd_count},
                          {"class_count", r.class_count},
                          {"psi_kernel_index", r.psi_kernel_index},
                          {"violations", r.violations}};
}

}  // namespace quadpoint
