// Command-line surface over the geometric-type library. Every command reads
// a type file, runs one library operation and prints a deterministic report,
// either as a compact table (default) or as JSON (--json).
//
// Exit codes: 0 success, 1 input or validation error, 2 property violation
// (wrong stratum, non-binary matrix, indeterminate class membership),
// 3 enumeration budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "geotype/boundary.hpp"
#include "geotype/core.hpp"
#include "geotype/equivalence.hpp"
#include "geotype/io.hpp"
#include "geotype/refinement.hpp"
#include "geotype/shift_space.hpp"

namespace {

using geotype::BiCode;
using geotype::GeometricType;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GeometricType load_valid_type(const std::string& path) {
    GeometricType t = geotype::parse_type(read_file(path));
    geotype::require_valid(t);
    return t;
}

struct Output {
    bool json = false;
    ordered_json doc;
    std::ostringstream table;

    void emit() const {
        if (json) {
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << table.str();
        }
    }
};

std::string verdict_name(geotype::CompareVerdict v) {
    return v == geotype::CompareVerdict::same_invariant ? "same-invariant" : "invariant-distinct";
}

int run_validate(const std::string& path, Output& out) {
    const GeometricType t = geotype::parse_type(read_file(path));
    const geotype::ValidationReport rep = geotype::validate(t);
    // Mixing is not one of the quadruple axioms, but a non-mixing matrix
    // rules out realizability, so a valid type still gets an advisory.
    std::vector<std::string> advisories;
    if (rep.ok && !geotype::is_mixing(geotype::incidence_matrix(t))) {
        advisories.push_back("incidence matrix is not mixing");
    }
    if (out.json) {
        out.doc["ok"] = rep.ok;
        ordered_json vs = ordered_json::array();
        for (const auto& v : rep.violations) vs.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
        out.doc["violations"] = std::move(vs);
        out.doc["advisories"] = advisories;
    } else {
        out.table << "ok: " << (rep.ok ? "true" : "false") << "\n";
        for (const auto& v : rep.violations) {
            out.table << "violation[" << v.axiom << "]: " << v.detail << "\n";
        }
        for (const auto& a : advisories) out.table << "advisory: " << a << "\n";
    }
    return rep.ok ? 0 : 1;
}

void run_refine(const std::string& path, Output& out) {
    const GeometricType t = load_valid_type(path);
    const auto [refined, applied] = geotype::refine_if_needed(t);
    if (out.json) {
        out.doc["applied"] = applied;
        out.doc["type"] = nlohmann::ordered_json::parse(geotype::serialize_type(refined));
    } else {
        out.table << "applied: " << (applied ? "true" : "false") << "\n";
        out.table << geotype::serialize_type(refined);
    }
}

void run_incidence(const std::string& path, Output& out) {
    const GeometricType t = load_valid_type(path);
    const geotype::IncidenceMatrix a = geotype::incidence_matrix(t);
    const bool binary = geotype::is_binary(a);
    const bool mixing = geotype::is_mixing(a);
    if (out.json) {
        out.doc["n"] = a.n;
        ordered_json rows = ordered_json::array();
        for (int i = 1; i <= a.n; ++i) {
            ordered_json row = ordered_json::array();
            for (int k = 1; k <= a.n; ++k) row.push_back(a.at(i, k));
            rows.push_back(std::move(row));
        }
        out.doc["matrix"] = std::move(rows);
        out.doc["binary"] = binary;
        out.doc["mixing"] = mixing;
    } else {
        out.table << "n: " << a.n << "\n";
        for (int i = 1; i <= a.n; ++i) {
            out.table << "row " << i << ":";
            for (int k = 1; k <= a.n; ++k) out.table << " " << a.at(i, k);
            out.table << "\n";
        }
        out.table << "binary: " << (binary ? "true" : "false") << "\n";
        out.table << "mixing: " << (mixing ? "true" : "false") << "\n";
    }
}

void run_orbit(const std::string& path, const std::string& label_text, Output& out) {
    const GeometricType t = load_valid_type(path);
    const geotype::BoundaryLabel lbl = geotype::parse_boundary_label(label_text);
    if (lbl.idx < 1 || lbl.idx > t.n) {
        throw std::invalid_argument("label index out of range for this type");
    }
    const geotype::OrbitDecomposition dec = geotype::orbit(t, lbl);
    auto names = [](const std::vector<geotype::BoundaryLabel>& labels) {
        std::vector<std::string> out_names;
        for (const auto& l : labels) out_names.push_back(geotype::format_boundary_label(l));
        return out_names;
    };
    if (out.json) {
        out.doc["transient"] = names(dec.transient);
        out.doc["cycle"] = names(dec.cycle);
    } else {
        out.table << "transient:";
        if (dec.transient.empty()) out.table << " -";
        for (const auto& l : dec.transient) {
            out.table << " " << geotype::format_boundary_label(l);
        }
        out.table << "\ncycle:";
        for (const auto& l : dec.cycle) out.table << " " << geotype::format_boundary_label(l);
        out.table << "\n";
    }
}

void run_boundary_codes(const std::string& path, Output& out) {
    const GeometricType t = load_valid_type(path);
    const geotype::BoundaryCodeTable table = geotype::build_boundary_table(t);
    const bool injective = geotype::check_injectivity(t);
    if (out.json) {
        ordered_json s_arr = ordered_json::array();
        for (const auto& [lbl, code] : table.s_codes) {
            s_arr.push_back({{"label", geotype::format_boundary_label(lbl)},
                             {"code", geotype::format_onesided(code)}});
        }
        ordered_json u_arr = ordered_json::array();
        for (const auto& [lbl, code] : table.u_codes) {
            u_arr.push_back({{"label", geotype::format_boundary_label(lbl)},
                             {"code", geotype::format_onesided(code)}});
        }
        out.doc["s_codes"] = std::move(s_arr);
        out.doc["u_codes"] = std::move(u_arr);
        out.doc["injective"] = injective;
    } else {
        for (const auto& [lbl, code] : table.s_codes) {
            out.table << geotype::format_boundary_label(lbl) << " code: "
                      << geotype::format_onesided(code) << "\n";
        }
        for (const auto& [lbl, code] : table.u_codes) {
            out.table << geotype::format_boundary_label(lbl) << " code: "
                      << geotype::format_onesided(code) << "\n";
        }
        out.table << "injective: " << (injective ? "true" : "false") << "\n";
    }
}

void run_classify(const std::string& path, const std::string& code_text, Output& out) {
    const GeometricType t = load_valid_type(path);
    const BiCode w = geotype::parse_bicode(code_text);
    const geotype::ClassificationFlags flags = geotype::classify(t, w);
    if (out.json) {
        out.doc["in_S"] = flags.in_s;
        out.doc["in_U"] = flags.in_u;
        out.doc["interior"] = flags.interior();
    } else {
        out.table << "in_S: " << (flags.in_s ? "true" : "false") << "\n";
        out.table << "in_U: " << (flags.in_u ? "true" : "false") << "\n";
        out.table << "interior: " << (flags.interior() ? "true" : "false") << "\n";
    }
}

void run_class(const std::string& path, const std::string& code_text, size_t cap, Output& out) {
    const GeometricType t = load_valid_type(path);
    const BiCode w = geotype::parse_bicode(code_text);
    const geotype::ClassReport rep = geotype::class_of(t, w, {cap});
    if (out.json) {
        ordered_json members = ordered_json::array();
        for (const auto& m : rep.members) members.push_back(geotype::format_bicode(m));
        out.doc["members"] = std::move(members);
        ordered_json chain = ordered_json::array();
        for (const auto& e : rep.chain) {
            chain.push_back({{"from", geotype::format_bicode(e.from)},
                             {"relation", std::string(1, e.relation)},
                             {"to", geotype::format_bicode(e.to)}});
        }
        out.doc["chain"] = std::move(chain);
        out.doc["truncated"] = rep.truncated;
    } else {
        out.table << "size: " << rep.members.size() << "\n";
        out.table << "truncated: " << (rep.truncated ? "true" : "false") << "\n";
        for (const auto& m : rep.members) {
            out.table << "member: " << geotype::format_bicode(m) << "\n";
        }
        for (const auto& e : rep.chain) {
            out.table << "edge: " << geotype::format_bicode(e.from) << " -" << e.relation << "- "
                      << geotype::format_bicode(e.to) << "\n";
        }
    }
}

void run_compare(const std::string& path1, const std::string& path2, Output& out) {
    const GeometricType t1 = load_valid_type(path1);
    const GeometricType t2 = load_valid_type(path2);
    const geotype::CompareReport rep = geotype::compare_types(t1, t2);
    if (out.json) {
        out.doc["inputs_equal"] = rep.inputs_equal;
        out.doc["refined_equal"] = rep.refined_equal;
        out.doc["applied_left"] = rep.applied1;
        out.doc["applied_right"] = rep.applied2;
        out.doc["verdict"] = verdict_name(rep.verdict);
    } else {
        out.table << "inputs_equal: " << (rep.inputs_equal ? "true" : "false") << "\n";
        out.table << "refined_equal: " << (rep.refined_equal ? "true" : "false") << "\n";
        out.table << "applied_left: " << (rep.applied1 ? "true" : "false") << "\n";
        out.table << "applied_right: " << (rep.applied2 ? "true" : "false") << "\n";
        out.table << "verdict: " << verdict_name(rep.verdict) << "\n";
    }
}

void run_words(const std::string& path, int m, bool list, Output& out) {
    const GeometricType t = load_valid_type(path);
    const geotype::IncidenceMatrix a = geotype::incidence_matrix(t);
    const geotype::BigInt count = geotype::word_count(a, m);

    std::vector<std::vector<int>> words;
    if (list) {
        const long long listing_budget = 4096;
        if (count > listing_budget) {
            throw geotype::BudgetError("word listing budget exceeded: count " + count.str() +
                                       " > " + std::to_string(listing_budget));
        }
        std::vector<int> word;
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(word.size()) == m) {
                words.push_back(word);
                return;
            }
            for (int s = 1; s <= t.n; ++s) {
                if (!word.empty() && a.at(word.back(), s) != 1) continue;
                word.push_back(s);
                self(self);
                word.pop_back();
            }
        };
        rec(rec);
    }

    if (out.json) {
        out.doc["m"] = m;
        out.doc["count"] = count.str();
        if (list) {
            ordered_json arr = ordered_json::array();
            for (const auto& wd : words) arr.push_back(wd);
            out.doc["words"] = std::move(arr);
        }
    } else {
        out.table << "count: " << count.str() << "\n";
        for (const auto& wd : words) {
            out.table << "word:";
            for (int s : wd) out.table << " " << s;
            out.table << "\n";
        }
    }
}

void run_periodic(const std::string& path, int p, long long budget, Output& out) {
    const GeometricType t = load_valid_type(path);
    const std::vector<BiCode> codes = geotype::enumerate_periodic(t, p, budget);
    if (out.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& w : codes) arr.push_back(geotype::format_bicode(w));
        out.doc["count"] = codes.size();
        out.doc["codes"] = std::move(arr);
    } else {
        out.table << "count: " << codes.size() << "\n";
        for (const auto& w : codes) out.table << "code: " << geotype::format_bicode(w) << "\n";
    }
}

void emit_diagnostic(const std::string& kind, const std::string& message) {
    ordered_json diag;
    diag["error"] = true;
    diag["kind"] = kind;
    diag["message"] = message;
    std::cerr << diag.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial calculus of geometric types of Markov partitions"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine output mode");

    std::string file, file2, label_text, code_text;
    int words_m = 1;
    int periodic_p = 1;
    bool words_list = false;
    size_t class_cap = 16;
    long long periodic_budget = 1'000'000;

    CLI::App* c_validate = app.add_subcommand("validate", "check the quadruple axioms");
    c_validate->add_option("file", file, "type file")->required();

    CLI::App* c_refine = app.add_subcommand("refine", "binary refinement, if needed");
    c_refine->add_option("file", file, "type file")->required();

    CLI::App* c_incidence = app.add_subcommand("incidence", "incidence matrix and flags");
    c_incidence->add_option("file", file, "type file")->required();

    CLI::App* c_orbit = app.add_subcommand("orbit", "orbit of a boundary label");
    c_orbit->add_option("file", file, "type file")->required();
    c_orbit->add_option("label", label_text, "label, e.g. s:+1 or u:-2")->required();

    CLI::App* c_codes = app.add_subcommand("boundary-codes", "all boundary codes + injectivity");
    c_codes->add_option("file", file, "type file")->required();

    CLI::App* c_classify = app.add_subcommand("classify", "stratum flags of a code");
    c_classify->add_option("file", file, "type file")->required();
    c_classify->add_option("code", code_text, "bi-infinite code literal")->required();

    CLI::App* c_class = app.add_subcommand("class", "identification class of a code");
    c_class->add_option("file", file, "type file")->required();
    c_class->add_option("code", code_text, "bi-infinite code literal")->required();
    c_class->add_option("--cap", class_cap, "closure size cap");

    CLI::App* c_compare = app.add_subcommand("compare", "compare two types via refinement");
    c_compare->add_option("file", file, "first type file")->required();
    c_compare->add_option("file2", file2, "second type file")->required();

    CLI::App* c_words = app.add_subcommand("words", "count admissible words of a length");
    c_words->add_option("file", file, "type file")->required();
    c_words->add_option("m", words_m, "word length")->required();
    c_words->add_flag("--list", words_list, "also list the words (small counts only)");

    CLI::App* c_periodic = app.add_subcommand("periodic", "purely periodic codes up to a period");
    c_periodic->add_option("file", file, "type file")->required();
    c_periodic->add_option("p", periodic_p, "period bound")->required();
    c_periodic->add_option("--budget", periodic_budget, "enumeration budget");

    // Let --json appear after the subcommand as well.
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int parse_code = app.exit(e);
        return parse_code == 0 ? 0 : 1;
    }

    Output out;
    out.json = json;
    int code = 0;
    try {
        if (c_validate->parsed()) {
            code = run_validate(file, out);
        } else if (c_refine->parsed()) {
            run_refine(file, out);
        } else if (c_incidence->parsed()) {
            run_incidence(file, out);
        } else if (c_orbit->parsed()) {
            run_orbit(file, label_text, out);
        } else if (c_codes->parsed()) {
            run_boundary_codes(file, out);
        } else if (c_classify->parsed()) {
            run_classify(file, code_text, out);
        } else if (c_class->parsed()) {
            run_class(file, code_text, class_cap, out);
        } else if (c_compare->parsed()) {
            run_compare(file, file2, out);
        } else if (c_words->parsed()) {
            run_words(file, words_m, words_list, out);
        } else if (c_periodic->parsed()) {
            run_periodic(file, periodic_p, periodic_budget, out);
        }
    } catch (const geotype::BudgetError& e) {
        emit_diagnostic("budget", e.what());
        return 3;
    } catch (const geotype::IndeterminateError& e) {
        emit_diagnostic("indeterminate", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        emit_diagnostic("property", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        emit_diagnostic("input", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_diagnostic("internal", e.what());
        return 2;
    }
    out.emit();
    return code;
}
