#pragma once

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "ba/errors.hpp"
#include "ba/matrix.hpp"
#include "ba/prime_field.hpp"
#include "ba/rational.hpp"
#include "ba/triangle.hpp"
#include "ba/valuefn.hpp"

namespace ba {

using Json = nlohmann::ordered_json;

using AnyField = std::variant<RationalField, PrimeField>;
using AnyMatrix = std::variant<Matrix<RationalField>, Matrix<PrimeField>>;
using AnyValueFunction = std::variant<ValueFunction<RationalField>, ValueFunction<PrimeField>>;

/// Field tag: "rational" or {"prime": p}.
inline AnyField parse_field_tag(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "rational") return RationalField{};
    if (j.is_object() && j.contains("prime") && j["prime"].is_number_integer() &&
        (j["prime"].is_number_unsigned() || j["prime"].get<long long>() >= 0))
        return PrimeField(j["prime"].get<std::uint64_t>());
    throw ParseError("field tag must be \"rational\" or {\"prime\": p}");
}

inline Json field_tag(const RationalField&) { return Json("rational"); }
inline Json field_tag(const PrimeField& f) { return Json{{"prime", f.modulus()}}; }

/// Parses "gf:p" or "rational" (the CLI spelling of a field tag).
inline AnyField parse_field_name(const std::string& name) {
    if (name == "rational") return RationalField{};
    if (name.rfind("gf:", 0) == 0) {
        const std::string digits = name.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("invalid field name: \"" + name + "\"");
        return PrimeField(std::stoull(digits));
    }
    throw ParseError("invalid field name: \"" + name + "\" (want rational or gf:p)");
}

namespace detail {

inline int parsed_diameter(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j["d"].is_number_integer())
        throw ParseError("document needs an integer \"d\"");
    int d = j["d"].get<int>();
    if (d < 0) throw ParseError("\"d\" must be nonnegative");
    return d;
}

template <FieldType F>
Matrix<F> parse_matrix_entries(const F& field, int d, const Json& j, bool require_upper) {
    const Json& rows = j["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != d + 1)
        throw ParseError("\"entries\" must be a (d+1) x (d+1) array of scalar strings");
    Matrix<F> m(field, d + 1, d + 1);
    for (int i = 0; i <= d; ++i) {
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != d + 1)
            throw ParseError("\"entries\" must be a (d+1) x (d+1) array of scalar strings");
        for (int k = 0; k <= d; ++k) {
            const Json& cell = row[static_cast<std::size_t>(k)];
            if (!cell.is_string()) throw ParseError("matrix entries must be scalar strings");
            m(i, k) = field.parse(cell.get<std::string>());
            if (require_upper && k < i && !is_zero(m(i, k)))
                throw ParseError("upper triangular input has a nonzero entry below the diagonal");
        }
    }
    return m;
}

template <FieldType F>
ValueFunction<F> parse_value_entries(const F& field, int d, const Json& j) {
    const Json& items = j["values"];
    if (!items.is_array() || static_cast<int>(items.size()) != triangle_size(d))
        throw ParseError("\"values\" must list every location of the triangle exactly once");
    std::vector<typename F::Element> values(static_cast<std::size_t>(triangle_size(d)), field.one());
    std::vector<bool> seen(values.size(), false);
    for (const Json& item : items) {
        if (!item.is_object() || !item.contains("loc") || !item.contains("value"))
            throw ParseError("each value entry needs \"loc\" and \"value\"");
        const Json& loc = item["loc"];
        if (!loc.is_array() || loc.size() != 3 || !loc[0].is_number_integer() ||
            !loc[1].is_number_integer() || !loc[2].is_number_integer())
            throw ParseError("\"loc\" must be an integer triple [r,s,t]");
        Location x{loc[0].get<int>(), loc[1].get<int>(), loc[2].get<int>()};
        if (!in_triangle(x, d)) throw ParseError("location outside the triangle");
        std::size_t idx = static_cast<std::size_t>(location_index(x, d));
        if (seen[idx]) throw ParseError("duplicate location in \"values\"");
        seen[idx] = true;
        if (!item["value"].is_string()) throw ParseError("values must be scalar strings");
        values[idx] = field.parse(item["value"].get<std::string>());
    }
    return ValueFunction<F>(field, d, std::move(values));  // throws ZeroValue on zeros
}

}  // namespace detail

inline AnyMatrix parse_matrix_document(const Json& j, bool require_upper = false) {
    int d = detail::parsed_diameter(j);
    if (!j.contains("field") || !j.contains("entries")) throw ParseError("matrix document needs \"field\" and \"entries\"");
    AnyField field = parse_field_tag(j["field"]);
    return std::visit(
        [&](const auto& f) -> AnyMatrix { return detail::parse_matrix_entries(f, d, j, require_upper); }, field);
}

inline AnyValueFunction parse_value_function_document(const Json& j) {
    int d = detail::parsed_diameter(j);
    if (!j.contains("field") || !j.contains("values")) throw ParseError("value document needs \"field\" and \"values\"");
    AnyField field = parse_field_tag(j["field"]);
    return std::visit([&](const auto& f) -> AnyValueFunction { return detail::parse_value_entries(f, d, j); }, field);
}

template <FieldType F>
Json matrix_document(const Matrix<F>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(m.field().to_string(m(i, k)));
        rows.push_back(std::move(row));
    }
    Json j;
    j["d"] = m.rows() - 1;
    j["field"] = field_tag(m.field());
    j["entries"] = std::move(rows);
    return j;
}

/// Value documents always serialize in the canonical location order.
template <FieldType F>
Json value_function_document(const ValueFunction<F>& vf) {
    Json items = Json::array();
    for (const Location& x : locations(vf.d())) {
        Json item;
        item["loc"] = Json::array({x.r, x.s, x.t});
        item["value"] = vf.field().to_string(vf.at(x));
        items.push_back(std::move(item));
    }
    Json j;
    j["d"] = vf.d();
    j["field"] = field_tag(vf.field());
    j["values"] = std::move(items);
    return j;
}

inline std::string document_text(const Json& j) { return j.dump(2) + "\n"; }

enum class DocumentKind { matrix, value_function };

inline DocumentKind document_kind(const Json& j) {
    if (j.is_object() && j.contains("entries")) return DocumentKind::matrix;
    if (j.is_object() && j.contains("values")) return DocumentKind::value_function;
    throw ParseError("document is neither a matrix (\"entries\") nor a value function (\"values\")");
}

namespace detail {

/// Lays out triangle rows (top row first) in the standard centered picture.
inline std::string render_triangle_rows(const std::vector<std::vector<std::string>>& rows) {
    std::size_t w = 1;
    for (const auto& row : rows)
        for (const auto& cell : row) w = std::max(w, cell.size());
    if ((w + 1) % 2 != 0) ++w;  // keep half-cell offsets integral
    std::size_t n_rows = rows.size();
    std::string out;
    for (std::size_t k = 0; k < n_rows; ++k) {
        std::string line((n_rows - rows[k].size()) * (w + 1) / 2, ' ');
        for (std::size_t i = 0; i < rows[k].size(); ++i) {
            std::string cell = rows[k][i];
            if (cell.size() < w) cell = std::string(w - cell.size(), ' ') + cell;
            if (i > 0) line += ' ';
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace detail

/// Triangle of locations, one row per s-value (s = d at the top); cells are
/// the concatenated digits "rst" when d <= 9, else "r,s,t".
inline std::string render_locations(int d) {
    std::vector<std::vector<std::string>> rows;
    for (int s = d; s >= 0; --s) {
        std::vector<std::string> row;
        for (int r = d - s; r >= 0; --r) {
            int t = d - s - r;
            if (d <= 9)
                row.push_back(std::to_string(r) + std::to_string(s) + std::to_string(t));
            else
                row.push_back(std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t));
        }
        rows.push_back(std::move(row));
    }
    return detail::render_triangle_rows(rows);
}

/// Triangle of the entries of an upper triangular matrix: entry T_ij sits
/// at location (d-j, i, j-i), so matrix row i becomes the triangle row with
/// s = i and the top row of the matrix forms the bottom of the triangle.
template <FieldType F>
std::string render_matrix_triangle(const Matrix<F>& m) {
    int d = m.rows() - 1;
    std::vector<std::vector<std::string>> rows;
    for (int i = d; i >= 0; --i) {
        std::vector<std::string> row;
        for (int j = i; j <= d; ++j) row.push_back(m.field().to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return detail::render_triangle_rows(rows);
}

template <FieldType F>
std::string render_value_function(const ValueFunction<F>& vf) {
    int d = vf.d();
    std::vector<std::vector<std::string>> rows;
    for (int s = d; s >= 0; --s) {
        std::vector<std::string> row;
        for (int r = d - s; r >= 0; --r) row.push_back(vf.field().to_string(vf.at({r, s, d - s - r})));
        rows.push_back(std::move(row));
    }
    return detail::render_triangle_rows(rows);
}

}  // namespace ba
