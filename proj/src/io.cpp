#include "rascal/io.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

#include "rascal/errors.hpp"

namespace rascal {

namespace {

using nlohmann::json;

bool is_decimal_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

json parse_json(std::string_view text, const char* what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw ParseError(std::string("not valid JSON: ") + what);
    }
    return doc;
}

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den)) {
        throw ParseError("'" + s + "' is not an exact rational");
    }
    if (Int(den) == 0) throw ParseError("'" + s + "' has a zero denominator");
    return Rational(Int(num), Int(den));
}

} // namespace

std::string triangle_to_json(const Triangle& t) {
    json rows = json::array();
    for (const auto& row : t.rows()) {
        json out_row = json::array();
        for (const auto& value : row) out_row.push_back(value.str());
        rows.push_back(std::move(out_row));
    }
    const json doc{{"name", t.name()}, {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
}

Triangle triangle_from_json(std::string_view text) {
    const json doc = parse_json(text, "triangle document");
    if (!doc.is_object() || !doc.contains("name") || !doc.contains("rows")) {
        throw ParseError("triangle document must be an object with 'name' and 'rows'");
    }
    if (!doc["name"].is_string()) throw ParseError("triangle 'name' must be a string");
    if (!doc["rows"].is_array() || doc["rows"].empty()) {
        throw ParseError("triangle 'rows' must be a non-empty array");
    }
    std::vector<std::vector<Int>> rows;
    rows.reserve(doc["rows"].size());
    for (std::size_t n = 0; n < doc["rows"].size(); ++n) {
        const json& in_row = doc["rows"][n];
        if (!in_row.is_array() || in_row.size() != n + 1) {
            throw ParseError("row " + std::to_string(n) + " must be an array of " +
                             std::to_string(n + 1) + " entries");
        }
        std::vector<Int> row;
        row.reserve(in_row.size());
        for (const json& entry : in_row) {
            if (!entry.is_string() || !is_decimal_integer(entry.get<std::string>())) {
                throw ParseError("row " + std::to_string(n) +
                                 " holds an entry that is not a decimal integer string");
            }
            row.emplace_back(entry.get<std::string>());
        }
        rows.push_back(std::move(row));
    }
    return Triangle(doc["name"].get<std::string>(), std::move(rows));
}

std::string triangle_to_csv(const Triangle& t) {
    std::string out;
    for (const auto& row : t.rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) out += ',';
            out += row[k].str();
        }
        out += '\n';
    }
    return out;
}

std::string render_triangle(const Triangle& t, std::size_t min_cell_width) {
    std::size_t width = std::max<std::size_t>(min_cell_width, 1);
    for (const auto& row : t.rows()) {
        for (const auto& value : row) width = std::max(width, value.str().size());
    }
    std::string out;
    const auto num_rows = static_cast<std::size_t>(t.num_rows());
    for (std::size_t n = 0; n < num_rows; ++n) {
        std::string line((num_rows - 1 - n) * (width + 1) / 2, ' ');
        const auto& row = t.rows()[n];
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) line += ' ';
            std::string cell = row[k].str();
            cell.resize(width, ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string rule_to_json(const AffineDiamondRule& rule) {
    json terms = json::array();
    for (const auto& [off, coeff] : rule.terms()) {
        terms.push_back(json{{"drow", off.drow}, {"dcol", off.dcol}, {"coefficient", coeff.str()}});
    }
    const json doc{{"terms", std::move(terms)}, {"constant", rule.constant().str()}};
    return doc.dump(2) + "\n";
}

AffineDiamondRule rule_from_json(std::string_view text) {
    const json doc = parse_json(text, "rule document");
    if (!doc.is_object() || !doc.contains("terms") || !doc.contains("constant")) {
        throw ParseError("rule document must be an object with 'terms' and 'constant'");
    }
    if (!doc["terms"].is_array()) throw ParseError("rule 'terms' must be an array");
    AffineDiamondRule::TermMap terms;
    for (const json& term : doc["terms"]) {
        if (!term.is_object() || !term.contains("drow") || !term.contains("dcol") ||
            !term.contains("coefficient") || !term["drow"].is_number_integer() ||
            !term["dcol"].is_number_integer() || !term["coefficient"].is_string()) {
            throw ParseError("each rule term needs integer 'drow', 'dcol' and string 'coefficient'");
        }
        const RelativeOffset off{term["drow"].get<int>(), term["dcol"].get<int>()};
        terms[off] += rational_from_string(term["coefficient"].get<std::string>());
    }
    if (!doc["constant"].is_string()) throw ParseError("rule 'constant' must be a string");
    return AffineDiamondRule(std::move(terms), rational_from_string(doc["constant"].get<std::string>()));
}

} // namespace rascal
