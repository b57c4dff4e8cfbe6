#include "causal/document.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "causal/errors.hpp"

namespace causal::doc {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> offset_to_line_col(const std::string& text,
                                                       std::size_t byte) {
    // nlohmann reports the 1-based offset of the last read byte.
    std::size_t end = byte == 0 ? 0 : byte - 1;
    if (end > text.size()) end = text.size();
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = offset_to_line_col(text, e.byte);
        std::string msg = e.what();
        // Keep the diagnosis, drop the library prefix and its own position
        // text; line/column travel in the exception fields.
        if (const auto cut = msg.find("] "); cut != std::string::npos) msg.erase(0, cut + 2);
        if (msg.rfind("parse error at", 0) == 0)
            if (const auto colon = msg.find(": "); colon != std::string::npos)
                msg.erase(0, colon + 2);
        throw ParseError(msg, line, col);
    }
}

[[noreturn]] void bad(const std::string& where, const std::string& reason) {
    throw ParseError(where.empty() ? reason : where + ": " + reason, 0, 0, where);
}

Rational number_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const ParseError& e) {
            bad(where, e.what());
        }
    }
    if (j.is_number_float()) bad(where, "floating-point numbers are not accepted");
    if (j.is_number_integer()) {
        if (j.is_number_unsigned() &&
            j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
            bad(where, "integer too large, use a string");
        return Rational(j.get<std::int64_t>());
    }
    bad(where, "expected a decimal-integer or \"p/q\" string");
}

json function_to_json(const PLFunction& p) {
    json bps = json::array();
    for (const Breakpoint& b : p.breakpoints())
        bps.push_back(json::array({b.t.str(), b.value.str()}));
    return json{{"breakpoints", std::move(bps)},
                {"left_slope", p.left_slope().str()},
                {"right_slope", p.right_slope().str()}};
}

PLFunction function_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) bad(where, "expected a function record");
    for (const auto& [key, value] : j.items())
        if (key != "breakpoints" && key != "left_slope" && key != "right_slope")
            bad(where.empty() ? key : where + "." + key, "unknown key");
    for (const char* key : {"breakpoints", "left_slope", "right_slope"})
        if (!j.contains(key)) bad(where, std::string("missing key \"") + key + "\"");

    const std::string prefix = where.empty() ? "" : where + ".";
    const json& bps = j.at("breakpoints");
    if (!bps.is_array() || bps.empty()) bad(prefix + "breakpoints", "expected a non-empty list");
    std::vector<Breakpoint> points;
    points.reserve(bps.size());
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const std::string at = prefix + "breakpoints[" + std::to_string(i) + "]";
        const json& pair = bps[i];
        if (!pair.is_array() || pair.size() != 2) bad(at, "expected a [t, value] pair");
        points.push_back({number_from_json(pair[0], at + "[0]"),
                          number_from_json(pair[1], at + "[1]")});
    }
    return PLFunction(std::move(points),
                      number_from_json(j.at("left_slope"), prefix + "left_slope"),
                      number_from_json(j.at("right_slope"), prefix + "right_slope"));
}

void require_keys(const json& j, std::initializer_list<const char*> keys) {
    if (!j.is_object()) bad("", "expected a document object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) bad(key, "unknown key");
    }
    for (const char* k : keys)
        if (!j.contains(k)) bad("", std::string("missing key \"") + k + "\"");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string serialize(const PLFunction& p) { return dump(function_to_json(p)); }

std::string serialize(const HElement& a) {
    return dump(json{{"phi", function_to_json(a.phi().fn())},
                     {"psi", function_to_json(a.psi().fn())}});
}

std::string serialize(const FGPair& p) {
    return dump(json{{"f", function_to_json(p.f().fn())}, {"g", function_to_json(p.g())}});
}

PLFunction parse_function(const std::string& text) {
    return function_from_json(parse_text(text), "");
}

PLHomeo parse_homeo(const std::string& text) { return PLHomeo(parse_function(text)); }

HElement parse_helement(const std::string& text) {
    const json j = parse_text(text);
    require_keys(j, {"phi", "psi"});
    // Sequenced so errors always report the first offending component.
    PLHomeo phi{function_from_json(j.at("phi"), "phi")};
    PLHomeo psi{function_from_json(j.at("psi"), "psi")};
    return HElement(std::move(phi), std::move(psi));
}

FGPair parse_fg(const std::string& text) {
    const json j = parse_text(text);
    require_keys(j, {"f", "g"});
    PLHomeo f{function_from_json(j.at("f"), "f")};
    PLFunction g = function_from_json(j.at("g"), "g");
    return validate_fg(f, g);
}

std::string to_decimal(const Rational& r, int significant) {
    if (significant < 1) throw std::invalid_argument("to_decimal: significant must be positive");
    if (r.sign() == 0) return "0";

    mpz_class a = ::abs(r.numerator());
    mpz_class b = r.denominator();

    // Decimal exponent e: the value lies in [10^e, 10^(e+1)).
    long e;
    mpz_class q = a / b;
    if (q > 0) {
        e = static_cast<long>(q.get_str().size()) - 1;
    } else {
        e = 0;
        mpz_class scaled = a;
        while (scaled < b) {
            scaled *= 10;
            --e;
        }
    }

    // Round a/b to `significant` digits, half away from zero.
    const long shift = significant - 1 - e;
    mpz_class ten;
    if (shift >= 0) {
        mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        a *= ten;
    } else {
        mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        b *= ten;
    }
    mpz_class rounded = (2 * a + b) / (2 * b);
    std::string digits = rounded.get_str();
    if (digits.size() > static_cast<std::size_t>(significant)) {
        // 99.. rounded up to 100..; renormalize to one more exponent.
        ++e;
        digits.pop_back();
    }

    std::string out;
    if (e >= significant - 1) {
        out = digits + std::string(static_cast<std::size_t>(e - (significant - 1)), '0');
    } else if (e >= 0) {
        out = digits;
        out.insert(static_cast<std::size_t>(e) + 1, ".");
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
    if (out.find('.') != std::string::npos) {
        out.erase(out.find_last_not_of('0') + 1);
        if (out.back() == '.') out.pop_back();
    }
    return r.sign() < 0 ? "-" + out : out;
}

} // namespace causal::doc
