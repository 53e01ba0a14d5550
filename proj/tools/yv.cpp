// yv: exact Yangian calculator and relation verifier.
//
//   yv verify --suite <name|all> [--n N] [--nu a,b,c] [--cutoff N]
//             [--only <glob>] [--seed S] [--report text|json] [--term-cap M]
//   yv list   --suite <name> [...]
//   yv show   --gen "E[1,2;1,1;3]" --n 3 --nu 2,1 --cutoff 4
//   yv apply  --map "psi:m=1,method=quasidet,cutoff=4" --n 2 --expr "T[1,1;1]"

#include "yv/parse.hpp"
#include "yv/suites/all.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace yv;

namespace {

std::vector<int> parse_nu(const std::string& text) {
    std::vector<int> nu;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        nu.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return nu;
}

// Generator addressing grammar for `yv show`:
//   D[a;i,j;r] | Dt[a;i,j;r] | E[a,b;i,j;r] | F[a,b;i,j;r] | C[r]
//   | minor(i1 i2 ..|j1 j2 ..)[r]
Element resolve_generator(const std::string& text, const ContextPtr& ctx,
                          const std::vector<int>& nu, int cutoff) {
    auto fail = [&](const std::string& why) -> Element {
        throw std::runtime_error("bad generator address '" + text + "': " + why);
    };
    std::size_t p = 0;
    auto expect = [&](char c) {
        if (p >= text.size() || text[p] != c) fail(std::string("expected '") + c + "'");
        ++p;
    };
    auto number = [&]() {
        std::size_t start = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (start == p) fail("expected number");
        return std::stoi(text.substr(start, p - start));
    };

    if (text.rfind("minor", 0) == 0) {
        p = 5;
        expect('(');
        QuantumMinorIndex idx;
        while (p < text.size() && text[p] != '|') {
            if (text[p] == ' ') {
                ++p;
                continue;
            }
            idx.i.push_back(number());
        }
        expect('|');
        while (p < text.size() && text[p] != ')') {
            if (text[p] == ' ') {
                ++p;
                continue;
            }
            idx.j.push_back(number());
        }
        expect(')');
        expect('[');
        int r = number();
        expect(']');
        return quantum_minor(ctx, idx, cutoff).at(r);
    }
    if (text.rfind("C[", 0) == 0) {
        p = 2;
        int r = number();
        expect(']');
        return center_series(ctx, cutoff, CenterMethod::minor).at(r);
    }

    std::string kind;
    while (p < text.size() && std::isalpha(static_cast<unsigned char>(text[p])))
        kind.push_back(text[p++]);
    expect('[');
    ParabolicGenerators table = parabolic_generators(ctx, nu, cutoff);
    if (kind == "D" || kind == "Dt") {
        int a = number();
        expect(';');
        int i = number();
        expect(',');
        int j = number();
        expect(';');
        int r = number();
        expect(']');
        return kind == "D" ? table.Dc(a, i, j, r) : table.Dtc(a, i, j, r);
    }
    if (kind == "E" || kind == "F") {
        int a = number();
        expect(',');
        int b = number();
        expect(';');
        int i = number();
        expect(',');
        int j = number();
        expect(';');
        int r = number();
        expect(']');
        return kind == "E" ? table.Ec(a, b, i, j, r) : table.Fc(a, b, i, j, r);
    }
    return fail("unknown kind '" + kind + "'");
}

// Morphism descriptor grammar: kind[:key=value[,key=value]*], e.g.
// "psi:m=1,method=quasidet,cutoff=4"; list values are ';'-separated.
struct ParsedMorphism {
    std::string kind;
    std::map<std::string, std::string> params;
};

ParsedMorphism parse_morphism(const std::string& text) {
    ParsedMorphism out;
    std::size_t colon = text.find(':');
    out.kind = text.substr(0, colon);
    if (colon == std::string::npos) return out;
    std::size_t pos = colon + 1;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string kv = text.substr(pos, next - pos);
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("bad morphism parameter '" + kv + "'");
        out.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        pos = next + 1;
    }
    return out;
}

int run_verify(const SuiteSpec& base, const std::string& format_name) {
    ReportFormat format = format_name == "json" ? ReportFormat::json : ReportFormat::text;
    std::vector<std::string> suites;
    if (base.suite == "all") {
        suites = suite_names();
    } else {
        suites = {base.suite};
    }
    bool all_pass = true;
    int total_passed = 0, total_failed = 0;
    nlohmann::json jall = nlohmann::json::array();
    for (const auto& name : suites) {
        SuiteSpec spec = base;
        spec.suite = name;
        SuiteReport report = run_suite(spec);
        all_pass = all_pass && report.failed == 0;
        total_passed += report.passed;
        total_failed += report.failed;
        if (format == ReportFormat::json) {
            jall.push_back(report_to_json(report));
        } else {
            std::cout << render_report(report, format);
        }
    }
    if (format == ReportFormat::json) {
        if (base.suite == "all") {
            std::cout << jall.dump(2) << "\n";
        } else {
            std::cout << jall[0].dump(2) << "\n";
        }
    } else if (base.suite == "all") {
        std::cout << "TOTAL " << (all_pass ? "PASS " : "FAIL ") << total_passed << "/"
                  << (total_passed + total_failed) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Yangian Y(gl_n) calculator and relation verifier"};
    app.require_subcommand(1);

    std::string suite, only, format = "text", nu_text, gen_text, map_text, expr_text;
    int n = 0, cutoff = 0;
    uint64_t seed = 20240801;
    std::size_t term_cap = AlgebraContext::kDefaultTermCap;

    auto add_common = [&](CLI::App* cmd, bool needs_suite) {
        if (needs_suite)
            cmd->add_option("--suite", suite, "suite name or 'all'")->required();
        cmd->add_option("--n", n, "algebra size n");
        cmd->add_option("--nu", nu_text, "composition, e.g. 2,1");
        cmd->add_option("--cutoff", cutoff, "series cutoff / level bound");
        cmd->add_option("--only", only, "case-id filter (glob or family prefix)");
        cmd->add_option("--seed", seed, "seed for randomized cases");
        cmd->add_option("--term-cap", term_cap, "intermediate term cap");
    };

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, true);
    verify->add_option("--report", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* list = app.add_subcommand("list", "list the cases of a suite");
    add_common(list, true);

    CLI::App* show = app.add_subcommand("show", "print the PBW expansion of a generator");
    show->add_option("--gen", gen_text, "generator address, e.g. E[1,2;1,1;3]")->required();
    show->add_option("--n", n, "algebra size n")->required();
    show->add_option("--nu", nu_text, "composition (default 1,1,...,1)");
    show->add_option("--cutoff", cutoff, "series cutoff (default 4)");
    show->add_option("--term-cap", term_cap, "intermediate term cap");

    CLI::App* apply = app.add_subcommand("apply", "apply a morphism to an element");
    apply->add_option("--map", map_text, "descriptor, e.g. psi:m=1,method=quasidet,cutoff=4")
        ->required();
    apply->add_option("--n", n, "source algebra size n")->required();
    apply->add_option("--expr", expr_text, "element in the text grammar")->required();
    apply->add_option("--term-cap", term_cap, "intermediate term cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify) || app.got_subcommand(list)) {
            SuiteSpec spec;
            spec.suite = suite;
            spec.n = n;
            if (!nu_text.empty()) spec.nu = parse_nu(nu_text);
            spec.cutoff = cutoff;
            spec.seed = seed;
            spec.only = only;
            spec.term_cap = term_cap;
            if (app.got_subcommand(list)) {
                if (suite == "all") throw std::runtime_error("list needs a single suite");
                for (const auto& info : list_cases(spec))
                    std::cout << info.id << "  [" << info.paper_ref << "]\n";
                return 0;
            }
            return run_verify(spec, format);
        }
        if (app.got_subcommand(show)) {
            if (cutoff == 0) cutoff = 4;
            auto ctx = AlgebraContext::yangian(n, term_cap);
            std::vector<int> nu =
                nu_text.empty() ? std::vector<int>(n, 1) : parse_nu(nu_text);
            Element e = resolve_generator(gen_text, ctx, nu, cutoff);
            std::cout << e.str() << "\n";
            return 0;
        }
        if (app.got_subcommand(apply)) {
            auto ctx = AlgebraContext::yangian(n, term_cap);
            Element x = parse_element(ctx, expr_text);
            ParsedMorphism pm = parse_morphism(map_text);
            auto iparam = [&](const std::string& key, int fallback) {
                auto it = pm.params.find(key);
                return it == pm.params.end() ? fallback : std::stoi(it->second);
            };
            Element out(ctx);
            if (pm.kind == "eta") {
                out = make_eta(ctx, Rational::parse(pm.params.at("c"))).apply(x);
            } else if (pm.kind == "mu") {
                std::vector<Rational> f;
                std::string lst = pm.params.at("f");
                std::size_t pos = 0;
                while (pos <= lst.size()) {
                    std::size_t next = lst.find(';', pos);
                    if (next == std::string::npos) next = lst.size();
                    f.push_back(Rational::parse(lst.substr(pos, next - pos)));
                    pos = next + 1;
                    if (next == lst.size()) break;
                }
                out = make_mu(ctx, f).apply(x);
            } else if (pm.kind == "sigma") {
                out = make_sigma(ctx).apply(x);
            } else if (pm.kind == "tau") {
                out = make_tau(ctx).apply(x);
            } else if (pm.kind == "omega") {
                out = make_omega(ctx, iparam("cutoff", 4)).apply(x);
            } else if (pm.kind == "antipode") {
                out = make_antipode(ctx, iparam("cutoff", 4)).apply(x);
            } else if (pm.kind == "phi") {
                out = make_phi(ctx, iparam("m", 1)).apply(x);
            } else if (pm.kind == "psi") {
                PsiMethod method = PsiMethod::via_quasidet;
                auto it = pm.params.find("method");
                if (it != pm.params.end() && it->second == "omega")
                    method = PsiMethod::via_omega;
                out = make_psi(ctx, iparam("m", 1), iparam("cutoff", 4), method).apply(x);
            } else if (pm.kind == "coproduct") {
                out = make_coproduct(ctx).apply(x);
            } else if (pm.kind == "counit") {
                std::cout << counit(x).str() << "\n";
                return 0;
            } else if (pm.kind == "kappa") {
                out = make_kappa(ctx, iparam("l", 1)).apply(x);
            } else {
                throw std::runtime_error("unknown morphism kind '" + pm.kind + "'");
            }
            std::cout << out.str() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
