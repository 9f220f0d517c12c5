#include "geotype/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace geotype {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int to_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

GeometricType parse_type(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("type file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("type file must be a JSON object");

    static const char* known[] = {"format_version", "n", "hv", "rho", "epsilon"};
    for (const auto& item : doc.items()) {
        const std::string& key = item.key();
        if (std::find_if(std::begin(known), std::end(known),
                         [&key](const char* k) { return key == k; }) == std::end(known)) {
            fail("unknown field '" + key + "' in type file");
        }
    }
    for (const char* key : known) {
        if (!doc.contains(key)) fail(std::string("missing field '") + key + "' in type file");
    }
    if (!doc["format_version"].is_string() || doc["format_version"].get<std::string>() != "1") {
        fail("unsupported format_version, expected \"1\"");
    }

    GeometricType t;
    t.n = to_int(doc["n"], "n");
    if (!doc["hv"].is_array()) fail("hv must be an array");
    for (const auto& item : doc["hv"]) {
        if (!item.is_array() || item.size() != 2) fail("hv entries must be pairs [h, v]");
        t.hv.emplace_back(to_int(item[0], "h"), to_int(item[1], "v"));
    }
    if (!doc["rho"].is_array()) fail("rho must be an array");
    for (const auto& item : doc["rho"]) {
        if (!item.is_array() || item.size() != 2) fail("rho entries must be pairs [k, l]");
        t.rho.push_back({to_int(item[0], "k"), to_int(item[1], "l")});
    }
    if (!doc["epsilon"].is_array()) fail("epsilon must be an array");
    for (const auto& item : doc["epsilon"]) {
        t.eps.push_back(to_int(item, "epsilon entry"));
    }
    return t;
}

std::string serialize_type(const GeometricType& t) {
    // Hand-rolled so that pair arrays stay on one line; the output is still
    // plain JSON and fully canonical (fixed key order, fixed spacing).
    std::ostringstream os;
    os << "{\n";
    os << "  \"format_version\": \"1\",\n";
    os << "  \"n\": " << t.n << ",\n";
    os << "  \"hv\": [";
    for (size_t m = 0; m < t.hv.size(); ++m) {
        os << (m ? ", " : "") << "[" << t.hv[m].first << ", " << t.hv[m].second << "]";
    }
    os << "],\n";
    os << "  \"rho\": [";
    for (size_t m = 0; m < t.rho.size(); ++m) {
        os << (m ? ", " : "") << "[" << t.rho[m].k << ", " << t.rho[m].l << "]";
    }
    os << "],\n";
    os << "  \"epsilon\": [";
    for (size_t m = 0; m < t.eps.size(); ++m) os << (m ? ", " : "") << t.eps[m];
    os << "]\n}\n";
    return os.str();
}

namespace {

std::string format_word(const std::vector<int>& word) {
    const bool wide = std::any_of(word.begin(), word.end(), [](int s) { return s > 9; });
    std::ostringstream os;
    for (size_t m = 0; m < word.size(); ++m) {
        if (wide && m > 0) os << ",";
        os << word[m];
    }
    return os.str();
}

std::vector<int> parse_word(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string item;
        while (std::getline(is, item, ',')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) {
                    return std::isdigit(c);
                })) {
                fail(std::string("bad symbol '") + item + "' in " + what);
            }
            try {
                out.push_back(std::stoi(item));
            } catch (const std::out_of_range&) {
                fail(std::string("symbol '") + item + "' out of range in " + what);
            }
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                fail(std::string("bad character '") + c + "' in " + what);
            }
            out.push_back(c - '0');
        }
    }
    return out;
}

std::string strip_spaces(const std::string& text) {
    std::string out;
    std::copy_if(text.begin(), text.end(), std::back_inserter(out),
                 [](unsigned char c) { return !std::isspace(c); });
    return out;
}

// Consumes "(word)*" from position pos.
std::vector<int> parse_starred(const std::string& s, size_t& pos, const char* what) {
    if (pos >= s.size() || s[pos] != '(') fail(std::string("expected '(' in ") + what);
    const size_t close = s.find(')', pos);
    if (close == std::string::npos) fail(std::string("unterminated '(' in ") + what);
    std::vector<int> word = parse_word(s.substr(pos + 1, close - pos - 1), what);
    if (word.empty()) fail(std::string("empty period in ") + what);
    if (close + 1 >= s.size() || s[close + 1] != '*') {
        fail(std::string("expected '*' after ')' in ") + what);
    }
    pos = close + 2;
    return word;
}

}  // namespace

BiCode parse_bicode(const std::string& text) {
    const std::string s = strip_spaces(text);
    size_t pos = 0;
    std::vector<int> left = parse_starred(s, pos, "code literal");
    if (pos >= s.size() || s[pos] != '.') fail("expected '.' after left period");
    ++pos;
    const size_t dot = s.find('.', pos);
    if (dot == std::string::npos) fail("expected '.' after core");
    std::vector<int> core = parse_word(s.substr(pos, dot - pos), "core");
    pos = dot + 1;
    std::vector<int> right = parse_starred(s, pos, "code literal");
    if (pos >= s.size() || s[pos] != '@') fail("expected '@anchor' after right period");
    ++pos;
    const std::string anchor_text = s.substr(pos);
    if (anchor_text.empty()) fail("missing anchor value");
    long long anchor = 0;
    size_t used = 0;
    try {
        anchor = std::stoll(anchor_text, &used);
    } catch (const std::logic_error&) {
        fail("bad anchor value '" + anchor_text + "'");
    }
    if (used != anchor_text.size()) fail("trailing characters after anchor");
    return BiCode::make(std::move(left), std::move(core), std::move(right), anchor);
}

std::string format_bicode(const BiCode& w) {
    std::ostringstream os;
    os << "(" << format_word(w.left_period) << ")*." << format_word(w.core) << ".("
       << format_word(w.right_period) << ")*@" << w.core_start;
    return os.str();
}

std::string format_onesided(const OneSidedCode& c) {
    std::ostringstream os;
    if (!c.transient.empty()) os << format_word(c.transient) << ".";
    os << "(" << format_word(c.period) << ")*";
    return os.str();
}

BoundaryLabel parse_boundary_label(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.size() < 4 || s[1] != ':' || (s[0] != 's' && s[0] != 'u') ||
        (s[2] != '+' && s[2] != '-')) {
        fail("bad boundary label '" + text + "', expected e.g. \"s:+1\" or \"u:-2\"");
    }
    const std::string idx_text = s.substr(3);
    if (!std::all_of(idx_text.begin(), idx_text.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
        fail("bad rectangle index in boundary label '" + text + "'");
    }
    BoundaryLabel lbl;
    lbl.flavor = s[0] == 's' ? Flavor::s : Flavor::u;
    lbl.sign = s[2] == '+' ? 1 : -1;
    try {
        lbl.idx = std::stoi(idx_text);
    } catch (const std::out_of_range&) {
        fail("rectangle index out of range in boundary label '" + text + "'");
    }
    return lbl;
}

std::string format_boundary_label(const BoundaryLabel& lbl) {
    std::ostringstream os;
    os << (lbl.flavor == Flavor::s ? "s" : "u") << ":" << (lbl.sign > 0 ? "+" : "-") << lbl.idx;
    return os.str();
}

}  // namespace geotype
