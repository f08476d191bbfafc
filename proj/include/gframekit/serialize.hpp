#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gframekit/gframe.hpp"
#include "gframekit/induced.hpp"
#include "gframekit/splitting.hpp"

namespace gframekit {

using json = nlohmann::ordered_json;

inline constexpr const char* kGFrameSchema = "gframe-1";
inline constexpr const char* kMatrixSchema = "matrix-1";
inline constexpr const char* kFormsSchema = "forms-1";
inline constexpr const char* kVectorFrameSchema = "vframe-1";

namespace detail_json {

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline const json& field(const json& j, const char* name, const std::string& path) {
    if (!j.is_object())
        throw ValidationError(path + ": expected an object");
    auto it = j.find(name);
    if (it == j.end())
        throw ValidationError(path + ": missing field '" + name + "'");
    return *it;
}

inline std::size_t size_field(const json& j, const char* name, const std::string& path) {
    const json& v = field(j, name, path);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ValidationError(path + "." + name + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

inline int int_field(const json& j, const char* name, const std::string& path) {
    const json& v = field(j, name, path);
    if (!v.is_number_integer())
        throw ValidationError(path + "." + name + ": expected an integer");
    return v.get<int>();
}

inline void check_schema(const json& j, const char* expected, const std::string& path) {
    const json& v = field(j, "schema_version", path);
    if (!v.is_string() || v.get<std::string>() != expected)
        throw ValidationError(path + ".schema_version: expected \"" + expected + "\"");
}

inline cplx entry_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError(path + ": expected a [re, im] pair");
    const cplx v(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw ValidationError(path + ": entry is not finite");
    return v;
}

inline ComplexMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                                      const std::string& path) {
    if (!j.is_array() || j.size() != rows)
        throw ValidationError(path + ": expected " + std::to_string(rows) + " rows");
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        const std::string row_path = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != cols)
            throw ValidationError(row_path + ": expected " + std::to_string(cols) + " columns");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = entry_from_json(row[c], row_path + "[" + std::to_string(c) + "]");
    }
    return m;
}

inline json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json vector_to_json(const ComplexVector& v) {
    json out = json::array();
    for (const cplx& x : v) out.push_back(json::array({x.real(), x.imag()}));
    return out;
}

} // namespace detail_json

// ---- GFrame files ------------------------------------------------------

inline json gframe_to_json(const GFrame& f) {
    std::vector<const GFrameElement*> order;
    order.reserve(f.size());
    for (const GFrameElement& e : f.elements()) order.push_back(&e);
    std::sort(order.begin(), order.end(),
              [](const GFrameElement* a, const GFrameElement* b) { return a->index < b->index; });

    json out;
    out["schema_version"] = kGFrameSchema;
    out["dim_u"] = f.dim_u();
    json elements = json::array();
    for (const GFrameElement* e : order) {
        json je;
        je["index"] = e->index;
        je["dim_v"] = e->block.rows();
        je["matrix"] = detail_json::matrix_to_json(e->block);
        elements.push_back(std::move(je));
    }
    out["elements"] = std::move(elements);
    return out;
}

inline std::string serialize_gframe(const GFrame& f) { return gframe_to_json(f).dump(2) + "\n"; }

inline GFrame gframe_from_json(const json& j) {
    detail_json::check_schema(j, kGFrameSchema, "$");
    const std::size_t dim_u = detail_json::size_field(j, "dim_u", "$");
    if (dim_u == 0) throw ValidationError("$.dim_u: must be positive");
    const json& elements = detail_json::field(j, "elements", "$");
    if (!elements.is_array()) throw ValidationError("$.elements: expected an array");

    std::vector<GFrameElement> elems;
    elems.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const std::string path = "$.elements[" + std::to_string(i) + "]";
        const json& je = elements[i];
        const int index = detail_json::int_field(je, "index", path);
        const std::size_t dim_v = detail_json::size_field(je, "dim_v", path);
        ComplexMatrix block = detail_json::matrix_from_json(
            detail_json::field(je, "matrix", path), dim_v, dim_u, path + ".matrix");
        elems.push_back({index, std::move(block)});
    }
    try {
        return GFrame(dim_u, std::move(elems));
    } catch (const Error& e) {
        throw ValidationError(std::string("$.elements: ") + e.what());
    }
}

inline GFrame parse_gframe(const std::string& text) {
    return gframe_from_json(detail_json::parse_text(text));
}

// ---- single-matrix (operator) files -------------------------------------

inline std::string serialize_matrix(const ComplexMatrix& m) {
    json out;
    out["schema_version"] = kMatrixSchema;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["matrix"] = detail_json::matrix_to_json(m);
    return out.dump(2) + "\n";
}

inline ComplexMatrix parse_matrix(const std::string& text) {
    const json j = detail_json::parse_text(text);
    detail_json::check_schema(j, kMatrixSchema, "$");
    const std::size_t rows = detail_json::size_field(j, "rows", "$");
    const std::size_t cols = detail_json::size_field(j, "cols", "$");
    return detail_json::matrix_from_json(detail_json::field(j, "matrix", "$"), rows, cols,
                                         "$.matrix");
}

// ---- bilinear-form files -------------------------------------------------

/// Forms are keyed by element index; alignment with a frame happens at use.
struct IndexedForm {
    int index;
    ComplexMatrix matrix;
};

inline std::string serialize_forms(const std::vector<IndexedForm>& forms) {
    std::vector<const IndexedForm*> order;
    for (const IndexedForm& f : forms) order.push_back(&f);
    std::sort(order.begin(), order.end(),
              [](const IndexedForm* a, const IndexedForm* b) { return a->index < b->index; });
    json out;
    out["schema_version"] = kFormsSchema;
    json arr = json::array();
    for (const IndexedForm* f : order) {
        json je;
        je["index"] = f->index;
        je["dim"] = f->matrix.rows();
        je["matrix"] = detail_json::matrix_to_json(f->matrix);
        arr.push_back(std::move(je));
    }
    out["forms"] = std::move(arr);
    return out.dump(2) + "\n";
}

inline std::vector<IndexedForm> parse_forms(const std::string& text) {
    const json j = detail_json::parse_text(text);
    detail_json::check_schema(j, kFormsSchema, "$");
    const json& arr = detail_json::field(j, "forms", "$");
    if (!arr.is_array()) throw ValidationError("$.forms: expected an array");
    std::vector<IndexedForm> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "$.forms[" + std::to_string(i) + "]";
        const int index = detail_json::int_field(arr[i], "index", path);
        const std::size_t dim = detail_json::size_field(arr[i], "dim", path);
        out.push_back({index,
                       detail_json::matrix_from_json(detail_json::field(arr[i], "matrix", path),
                                                     dim, dim, path + ".matrix")});
    }
    return out;
}

/// Aligns indexed forms with a frame's elements in element order.
inline BilinearFormFamily align_forms(const GFrame& f, const std::vector<IndexedForm>& forms) {
    std::vector<ComplexMatrix> aligned;
    aligned.reserve(f.size());
    for (const GFrameElement& e : f.elements()) {
        const IndexedForm* found = nullptr;
        for (const IndexedForm& form : forms)
            if (form.index == e.index) {
                found = &form;
                break;
            }
        if (!found)
            throw ValidationError("forms: no form supplied for element index " +
                                  std::to_string(e.index));
        aligned.push_back(found->matrix);
    }
    return BilinearFormFamily(f, std::move(aligned));
}

// ---- vector-frame files ---------------------------------------------------

inline std::string serialize_vector_frame(const VectorFrame& vf) {
    json out;
    out["schema_version"] = kVectorFrameSchema;
    out["dim"] = vf.dim();
    json arr = json::array();
    for (const LabeledVector& lv : vf.vectors()) {
        json je;
        je["j"] = lv.j;
        je["k"] = lv.k;
        je["v"] = detail_json::vector_to_json(lv.v);
        arr.push_back(std::move(je));
    }
    out["vectors"] = std::move(arr);
    return out.dump(2) + "\n";
}

inline VectorFrame parse_vector_frame(const std::string& text) {
    const json j = detail_json::parse_text(text);
    detail_json::check_schema(j, kVectorFrameSchema, "$");
    const std::size_t dim = detail_json::size_field(j, "dim", "$");
    const json& arr = detail_json::field(j, "vectors", "$");
    if (!arr.is_array()) throw ValidationError("$.vectors: expected an array");
    std::vector<LabeledVector> vectors;
    vectors.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "$.vectors[" + std::to_string(i) + "]";
        LabeledVector lv;
        lv.j = detail_json::int_field(arr[i], "j", path);
        lv.k = detail_json::int_field(arr[i], "k", path);
        const json& v = detail_json::field(arr[i], "v", path);
        if (!v.is_array() || v.size() != dim)
            throw ValidationError(path + ".v: expected " + std::to_string(dim) + " entries");
        lv.v.reserve(dim);
        for (std::size_t c = 0; c < dim; ++c)
            lv.v.push_back(
                detail_json::entry_from_json(v[c], path + ".v[" + std::to_string(c) + "]"));
        vectors.push_back(std::move(lv));
    }
    try {
        return VectorFrame(dim, std::move(vectors));
    } catch (const Error& e) {
        throw ValidationError(std::string("$.vectors: ") + e.what());
    }
}

// ---- file helpers ----------------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << contents;
}

/// FNV-1a 64-bit digest of a byte string, as fixed-width hex.
inline std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace gframekit
