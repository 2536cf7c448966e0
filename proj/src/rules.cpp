#include "rascal/rules.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

#include "rascal/errors.hpp"

namespace rascal {

std::optional<RelativeOffset> offset_for_name(std::string_view name) {
    if (name == "E") return kEast;
    if (name == "W") return kWest;
    if (name == "N") return kNorth;
    if (name == "NW") return kNorthWest;
    return std::nullopt;
}

std::optional<std::string> name_for_offset(RelativeOffset off) {
    if (off == kEast) return "E";
    if (off == kWest) return "W";
    if (off == kNorth) return "N";
    if (off == kNorthWest) return "NW";
    return std::nullopt;
}

AffineDiamondRule::AffineDiamondRule(TermMap terms, Rational constant)
    : terms_(std::move(terms)), constant_(std::move(constant)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        const auto off = it->first;
        if (off.drow > 0 || (off.drow == 0 && off.dcol == 0)) {
            throw RuleError("offset (" + std::to_string(off.drow) + "," +
                            std::to_string(off.dcol) + ") is not a neighbor above the south cell");
        }
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }
    if (terms_.empty() && constant_ == 0) {
        throw RuleError("rule must have at least one term or a nonzero constant");
    }
}

bool AffineDiamondRule::generatable() const {
    for (const auto& [off, coeff] : terms_) {
        if (off.drow == 0 && off.dcol >= 0) return false;
    }
    return true;
}

std::vector<RelativeOffset> AffineDiamondRule::offsets() const {
    std::vector<RelativeOffset> out;
    out.reserve(terms_.size());
    for (const auto& [off, coeff] : terms_) out.push_back(off);
    return out;
}

std::string to_text(const AffineDiamondRule& rule) {
    std::string out;
    for (const auto& [off, coeff] : rule.terms()) {
        if (!out.empty()) out += " + ";
        out += coeff.str();
        out += '*';
        if (auto name = name_for_offset(off)) {
            out += *name;
        } else {
            out += '[' + std::to_string(off.drow) + ',' + std::to_string(off.dcol) + ']';
        }
    }
    if (!out.empty()) out += " + ";
    out += rule.constant().str();
    return out;
}

namespace {

struct Cursor {
    std::string s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("bad rule text at position " + std::to_string(i) + ": " + why);
    }
};

Int parse_unsigned_int(Cursor& cur) {
    std::string digits;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        digits += cur.s[cur.i++];
    }
    if (digits.empty()) cur.fail("expected digits");
    return Int(digits);
}

Rational parse_unsigned_rational(Cursor& cur) {
    Int num = parse_unsigned_int(cur);
    if (!cur.done() && cur.peek() == '/') {
        ++cur.i;
        Int den = parse_unsigned_int(cur);
        if (den == 0) cur.fail("zero denominator");
        return Rational(num, den);
    }
    return Rational(num);
}

int parse_signed_small(Cursor& cur) {
    int sign = 1;
    if (!cur.done() && (cur.peek() == '-' || cur.peek() == '+')) {
        if (cur.peek() == '-') sign = -1;
        ++cur.i;
    }
    Int v = parse_unsigned_int(cur);
    if (v > 1000) cur.fail("offset component out of range");
    return sign * static_cast<int>(v);
}

RelativeOffset parse_direction(Cursor& cur) {
    if (cur.peek() == '[') {
        ++cur.i;
        const int drow = parse_signed_small(cur);
        if (cur.done() || cur.peek() != ',') cur.fail("expected ',' in offset");
        ++cur.i;
        const int dcol = parse_signed_small(cur);
        if (cur.done() || cur.peek() != ']') cur.fail("expected ']' in offset");
        ++cur.i;
        return RelativeOffset{drow, dcol};
    }
    std::string name;
    while (!cur.done() && std::isalpha(static_cast<unsigned char>(cur.peek()))) {
        name += cur.s[cur.i++];
    }
    if (auto off = offset_for_name(name)) return *off;
    cur.fail("unknown direction '" + name + "'");
}

} // namespace

AffineDiamondRule parse_rule_text(std::string_view text) {
    Cursor cur;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) cur.s += c;
    }
    if (cur.s.empty()) throw ParseError("empty rule text");

    AffineDiamondRule::TermMap terms;
    Rational constant = 0;
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        bool saw_operator = false;
        while (!cur.done() && (cur.peek() == '+' || cur.peek() == '-')) {
            if (cur.peek() == '-') sign = -sign;
            ++cur.i;
            saw_operator = true;
        }
        if (!first && !saw_operator) cur.fail("expected '+' or '-' between terms");
        if (cur.done()) cur.fail("dangling operator");

        std::optional<Rational> coeff;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = parse_unsigned_rational(cur);
        }
        std::optional<RelativeOffset> off;
        if (!cur.done() && cur.peek() == '*') {
            if (!coeff) cur.fail("'*' without a coefficient");
            ++cur.i;
            if (cur.done()) cur.fail("'*' without a direction");
            off = parse_direction(cur);
        } else if (!cur.done() && !coeff &&
                   (std::isalpha(static_cast<unsigned char>(cur.peek())) || cur.peek() == '[')) {
            off = parse_direction(cur);
        }

        if (off) {
            terms[*off] += sign * coeff.value_or(Rational(1));
        } else if (coeff) {
            constant += sign * *coeff;
        } else {
            cur.fail("expected a coefficient or direction");
        }
        first = false;
    }
    return AffineDiamondRule(std::move(terms), std::move(constant));
}

std::vector<RelativeOffset> parse_offset_list(std::string_view text) {
    std::vector<RelativeOffset> out;
    std::string item;
    auto flush = [&] {
        if (item.empty()) throw ParseError("empty entry in offset list");
        Cursor cur;
        cur.s = item;
        const RelativeOffset off = parse_direction(cur);
        if (!cur.done()) cur.fail("trailing characters after direction");
        if (off.drow > 0 || (off.drow == 0 && off.dcol == 0)) {
            throw ParseError("offset '" + item + "' is not a neighbor above the south cell");
        }
        bool known = false;
        for (auto seen : out) known = known || seen == off;
        if (!known) out.push_back(off);
        item.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == ',') {
            flush();
        } else {
            item += c;
        }
    }
    flush();
    return out;
}

} // namespace rascal
