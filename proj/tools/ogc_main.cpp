// ogc: exact construction and verification of line orthogonal Grassmann
// codes. JSON on stdout (or --out); csv as a flat projection.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ogc/code.hpp"
#include "ogc/verify.hpp"

using nlohmann::json;
using namespace ogc;

namespace {

struct CommonArgs {
    unsigned q = 2;
    unsigned n = 2;
    unsigned k = 2;
    std::string form;
    std::string method = "exhaustive";
    std::uint64_t budget = std::uint64_t(1) << 24;
    unsigned workers = 0;
    std::string out;
    std::string format = "json";
};

std::pair<unsigned, unsigned> pe_of_q(unsigned q) {
    if (q < 2) fail(errc::unsupported_size, "q must be a prime power >= 2");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    unsigned t = q;
    while (t > 1) {
        if (t % p != 0) fail(errc::unsupported_size, std::to_string(q) + " is not a prime power");
        t /= p;
        ++e;
    }
    return {p, e};
}

SpacePtr make_space(const CommonArgs& a) {
    auto [p, e] = pe_of_q(a.q);
    return std::make_shared<QuadraticSpace>(Field::make(p, e), a.n);
}

AlternatingForm parse_form(const SpacePtr& space, const std::string& what) {
    if (what == "beta") return AlternatingForm::polarization(*space);
    if (what.rfind("elementary:", 0) == 0) {
        unsigned i = 0, j = 0;
        char comma = 0;
        std::istringstream is(what.substr(11));
        if (!(is >> i >> comma >> j) || comma != ',' || i < 1 || j < 1)
            fail(errc::parse_error, "expected elementary:i,j with 1-based indices");
        return AlternatingForm::elementary(*space, i - 1, j - 1);
    }
    std::ifstream in(what);
    if (!in) fail(errc::parse_error, "cannot open form file " + what);
    Matrix m = matrix_from_text(in, space->field());
    if (m.rows() != space->dim() || m.cols() != space->dim())
        fail(errc::dimension_mismatch, "form file must be (2n+1) x (2n+1)");
    return AlternatingForm(std::move(m));
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// flat projection: scalar fields of a json object become one header/data row
std::string to_csv(const json& j) {
    std::ostringstream head, row;
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object() || it->is_array()) continue;
        if (!first) {
            head << ',';
            row << ',';
        }
        first = false;
        head << csv_escape(it.key());
        row << csv_escape(it->is_string() ? it->get<std::string>() : it->dump());
    }
    return head.str() + "\n" + row.str() + "\n";
}

void emit(const json& j, const CommonArgs& a, const std::string& csv_override = "") {
    std::string text;
    if (a.format == "csv")
        text = csv_override.empty() ? to_csv(j) : csv_override;
    else
        text = j.dump(2) + "\n";
    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(a.out);
        if (!out) fail(errc::parse_error, "cannot write " + a.out);
        out << text;
    }
}

json profile_json(const RadicalProfile& prof) {
    return json{{"rad_dim", prof.rad_dim},
                {"contains_nucleus", prof.contains_nucleus},
                {"section_class", section_class_name(prof.section_class)},
                {"point_count", prof.point_count},
                {"sigma", prof.sigma}};
}

int cmd_build(const CommonArgs& a, const std::string& gen_out, const std::string& gen_full_out) {
    auto code = build_code(enumerate_delta_k(make_space(a), a.k));
    if (!gen_out.empty()) {
        std::ofstream out(gen_out);
        out << matrix_to_text(code.gen_reduced);
    }
    if (!gen_full_out.empty()) {
        std::ofstream out(gen_full_out);
        out << matrix_to_text(code.gen_full);
    }
    emit(json{{"q", a.q}, {"n", a.n}, {"k", a.k}, {"N", code.N}, {"K", code.K}}, a);
    return 0;
}

int cmd_dump(const CommonArgs& a, bool symplectic) {
    auto space = make_space(a);
    ProjectiveSystem sys =
        symplectic ? enumerate_symplectic_lines(space) : enumerate_delta_k(space, a.k);
    if (a.format == "json") {
        json cols = json::array();
        for (const auto& col : sys.columns) {
            json label = json::array();
            for (std::size_t r = 0; r < col.label.dim(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < col.label.ambient(); ++c)
                    row.push_back(col.label.basis().at(r, c));
                label.push_back(row);
            }
            cols.push_back(json{{"label", label}, {"plucker", col.coords}});
        }
        emit(json{{"q", a.q},
                  {"n", a.n},
                  {"k", sys.grade},
                  {"symplectic", sys.symplectic},
                  {"columns", cols}},
             a);
        return 0;
    }
    std::ostringstream os;
    for (const auto& col : sys.columns) {
        for (std::size_t r = 0; r < col.label.dim(); ++r) {
            if (r) os << " ; ";
            for (std::size_t c = 0; c < col.label.ambient(); ++c) {
                if (c) os << ' ';
                os << col.label.basis().at(r, c);
            }
        }
        os << " | ";
        for (std::size_t i = 0; i < col.coords.size(); ++i) {
            if (i) os << ' ';
            os << col.coords[i];
        }
        os << '\n';
    }
    if (a.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(a.out);
        out << os.str();
    }
    return 0;
}

int cmd_weight(const CommonArgs& a, const std::string& form_out) {
    const auto t0 = std::chrono::steady_clock::now();
    auto space = make_space(a);
    auto code = build_code(enumerate_delta_k(space, 2));
    auto f = parse_form(space, a.form);
    if (!form_out.empty()) {
        std::ofstream out(form_out);
        out << matrix_to_text(f.matrix());
    }

    json j{{"q", a.q}, {"n", a.n}, {"k", 2}, {"N", code.N}, {"K", code.K}};
    const auto direct = weight_direct(code, f);
    const auto recursive = weight_recursive(code, f);
    j["weight"] = direct;
    j["methods"] = json{{"direct", direct}, {"recursive", recursive}, {"census", nullptr}};
    j["census"] = nullptr;
    if (space->field()->char2() && !in_polarization_span(*space, f)) {
        auto rep = abc_census(code, f);
        j["methods"]["census"] = rep.census_weight;
        j["census"] = json{{"A_prime", rep.a_prime},
                           {"B", rep.b_count},
                           {"C", rep.c_count},
                           {"low", rep.low_count},
                           {"S", rep.s_count},
                           {"A", rep.a_value},
                           {"counting_convention", rep.counting_convention}};
        j["profile"] = profile_json(rep.profile);
        j["methods_agree"] = rep.methods_agree;
    } else {
        j["profile"] = profile_json(radical_profile(*space, f));
        j["methods_agree"] = direct == recursive;
    }
    j["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(j, a);
    return 0;
}

int cmd_mindist(const CommonArgs& a, const std::string& witness_out) {
    const auto t0 = std::chrono::steady_clock::now();
    auto space = make_space(a);
    auto code = build_code(enumerate_delta_k(space, a.k));
    json j{{"q", a.q}, {"n", a.n}, {"k", a.k}, {"N", code.N}, {"K", code.K}};
    if (a.method == "exhaustive") {
        ScanOptions opts;
        opts.budget = a.budget;
        opts.workers = a.workers;
        auto res = min_distance_exhaustive(code, opts);
        j["d_min"] = res.d_min;
        j["min_weight_count"] = res.min_count;
        if (!witness_out.empty() && a.k == 2 && !res.witness_messages.empty()) {
            std::ofstream out(witness_out);
            out << matrix_to_text(form_of_message(code, res.witness_messages.front()).matrix());
        }
    } else if (a.method == "structural") {
        if (a.k != 2) fail(errc::grade_mismatch, "structural method applies to k = 2");
        auto f = min_weight_form(*space, SectionClass::hyperbolic_cone);
        j["d_min"] = weight_direct(code, f);
        j["min_weight_count"] = nullptr;
        if (!witness_out.empty()) {
            std::ofstream out(witness_out);
            out << matrix_to_text(f.matrix());
        }
    } else {
        fail(errc::parse_error, "method must be exhaustive or structural");
    }
    j["method"] = a.method;
    j["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(j, a);
    return 0;
}

int cmd_spectrum(const CommonArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    auto code = build_code(enumerate_delta_k(make_space(a), a.k));
    ScanOptions opts;
    opts.budget = a.budget;
    opts.workers = a.workers;
    opts.spectrum = true;
    opts.witnesses = false;
    auto res = min_distance_exhaustive(code, opts);
    json dist = json::object();
    std::uint64_t total = 0;
    std::ostringstream csv;
    csv << "weight,count\n";
    for (auto [w, cnt] : res.spectrum) {
        dist[std::to_string(w)] = cnt;
        total += cnt;
        csv << w << ',' << cnt << '\n';
    }
    json j{{"q", a.q},       {"n", a.n},           {"k", a.k},
           {"N", code.N},    {"K", code.K},        {"d_min", res.d_min},
           {"total", total}, {"spectrum", dist}};
    j["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(j, a, csv.str());
    return 0;
}

int cmd_symplectic(const CommonArgs& a, bool with_mindist) {
    const auto t0 = std::chrono::steady_clock::now();
    auto space = make_space(a);
    auto orth = build_code(enumerate_delta_k(space, 2));
    auto symp = build_symplectic_code(space);
    auto sub = subcode_check(orth, symp);
    json j{{"q", a.q},
           {"n", a.n},
           {"N", orth.N},
           {"K_orth", orth.K},
           {"K_symp", symp.K},
           {"is_subcode", sub.is_subcode},
           {"codimension", sub.codimension}};
    if (with_mindist) {
        ScanOptions opts;
        opts.budget = a.budget;
        opts.workers = a.workers;
        j["symplectic_d_min"] = exhaustive_scan(symp.gen_reduced, opts).d_min;
    }
    j["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(j, a);
    return 0;
}

int cmd_verify(const CommonArgs& a, const std::string& suite) {
    auto rep = run_suite(suite, a.budget, a.workers);
    json checks = json::array();
    std::ostringstream csv;
    csv << "criterion,name,pass,skipped,expected,observed,reason\n";
    for (const auto& c : rep.checks) {
        checks.push_back(json{{"criterion", c.criterion},
                              {"name", c.name},
                              {"claim", c.claim},
                              {"expected", c.expected},
                              {"observed", c.observed},
                              {"pass", c.pass},
                              {"skipped", c.skipped},
                              {"reason", c.reason},
                              {"elapsed_ms", c.elapsed_ms}});
        csv << c.criterion << ',' << csv_escape(c.name) << ',' << (c.pass ? "true" : "false")
            << ',' << (c.skipped ? "true" : "false") << ',' << csv_escape(c.expected) << ','
            << csv_escape(c.observed) << ',' << csv_escape(c.reason) << '\n';
    }
    json j{{"suite", rep.suite},
           {"budget", rep.budget},
           {"workers", rep.workers},
           {"configs", rep.configs},
           {"checks", checks},
           {"totals",
            json{{"passed", rep.passed}, {"failed", rep.failed}, {"skipped", rep.skipped}}},
           {"all_pass", rep.all_pass()},
           {"elapsed_ms", rep.elapsed_ms}};
    emit(j, a, csv.str());
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"line orthogonal Grassmann codes: construction, weights, minimum distance"};
    app.require_subcommand(1);
    CommonArgs a;

    const auto add_common = [&](CLI::App* sub, bool with_k = true) {
        sub->add_option("--q", a.q, "field size (prime power)")->capture_default_str();
        sub->add_option("--n", a.n, "rank parameter; the ambient space has dimension 2n+1")
            ->capture_default_str();
        if (with_k) sub->add_option("--k", a.k, "grade")->capture_default_str();
        sub->add_option("--budget", a.budget, "codeword-evaluation budget for exhaustive scans")
            ->capture_default_str();
        sub->add_option("--workers", a.workers, "scan threads (0 = hardware)")
            ->capture_default_str();
        sub->add_option("--out", a.out, "write output to a file instead of stdout");
        sub->add_option("--format", a.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    };

    std::string gen_out, gen_full_out, suite = "core";
    bool dump_symplectic = false, symp_mindist = false;

    auto* build = app.add_subcommand("build", "construct the code and report [N, K]");
    add_common(build);
    build->add_option("--gen-out", gen_out, "write the reduced generator matrix (text format)");
    build->add_option("--gen-full-out", gen_full_out, "write the full wedge-row matrix");

    auto* dump = app.add_subcommand("dump", "list system columns as 'label-RREF | coords'");
    dump->add_option("--q", a.q, "field size (prime power)")->capture_default_str();
    dump->add_option("--n", a.n, "rank parameter")->capture_default_str();
    dump->add_option("--k", a.k, "grade")->capture_default_str();
    dump->add_option("--out", a.out, "write output to a file instead of stdout");
    std::string dump_format = "text";
    dump->add_option("--format", dump_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    dump->add_flag("--symplectic", dump_symplectic, "dump the symplectic quotient system");

    std::string form_out, witness_out;

    auto* weight = app.add_subcommand("weight", "weight report for one alternating form");
    add_common(weight, false);
    weight->add_option("--form", a.form, "beta | elementary:i,j | matrix file")->required();
    weight->add_option("--form-out", form_out, "write the parsed form matrix (text format)");

    auto* mindist = app.add_subcommand("mindist", "minimum distance of the code");
    add_common(mindist);
    mindist->add_option("--method", a.method, "exhaustive or structural")
        ->check(CLI::IsMember({"exhaustive", "structural"}))
        ->capture_default_str();
    mindist->add_option("--witness-out", witness_out,
                        "write one minimum-weight form matrix (text format, k = 2)");

    auto* spectrum = app.add_subcommand("spectrum", "full weight distribution");
    add_common(spectrum);

    auto* symp = app.add_subcommand("symplectic", "symplectic subcode comparison");
    add_common(symp, false);
    symp->add_flag("--mindist", symp_mindist, "also scan the symplectic code exhaustively");

    auto* verify = app.add_subcommand("verify", "replay the verification battery");
    add_common(verify, false);
    verify->add_option("--suite", suite, "core or extended")
        ->check(CLI::IsMember({"core", "extended"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(build)) return cmd_build(a, gen_out, gen_full_out);
        if (app.got_subcommand(dump)) {
            a.format = dump_format;
            return cmd_dump(a, dump_symplectic);
        }
        if (app.got_subcommand(weight)) return cmd_weight(a, form_out);
        if (app.got_subcommand(mindist)) return cmd_mindist(a, witness_out);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(a);
        if (app.got_subcommand(symp)) return cmd_symplectic(a, symp_mindist);
        if (app.got_subcommand(verify)) return cmd_verify(a, suite);
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
