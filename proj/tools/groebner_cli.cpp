#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "groebner/embedding.hpp"
#include "groebner/json_format.hpp"
#include "groebner/text_format.hpp"

namespace {

using namespace groebner;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string input_path;
    std::string order_name = "lex";
    std::string vars_csv;
    std::string strategy_name = "normal";
    bool coprime_skip = false;
    std::uint64_t budget = 100000;
    bool json = false;
    std::string cert_out;

    bool order_given = false;
    bool vars_given = false;
};

/// Thrown for user-input problems that CLI11 cannot catch itself; mapped to
/// exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const Options& opt) {
    if (opt.input_path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(opt.input_path);
    if (!in) throw InputError("cannot open input file \"" + opt.input_path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MonomialOrderSpec effective_order(const Options& opt, const ProblemFile& pf) {
    OrderKind kind = OrderKind::lex;
    if (opt.order_given) {
        auto k = order_kind_from_string(opt.order_name);
        if (!k) throw InputError("unknown order \"" + opt.order_name + "\"");
        kind = *k;
    } else if (pf.order) {
        kind = *pf.order;
    }
    std::vector<VarIndex> vars;
    if (opt.vars_given) {
        for (const std::string& tok : split_tokens(opt.vars_csv))
            vars.push_back(parse_var_name(tok));
    } else {
        vars = pf.vars;
    }
    return MonomialOrderSpec(kind, std::move(vars));
}

BuchbergerOptions effective_buchberger(const Options& opt) {
    BuchbergerOptions b;
    auto s = strategy_from_string(opt.strategy_name);
    if (!s) throw InputError("unknown strategy \"" + opt.strategy_name + "\"");
    b.strategy = *s;
    b.coprime_skip = opt.coprime_skip;
    b.budget = opt.budget;
    return b;
}

const std::string& require_field(const ProblemFile& pf, const std::string& key) {
    auto it = pf.fields.find(key);
    if (it == pf.fields.end())
        throw InputError("problem file is missing the \"" + key + ":\" field");
    return it->second;
}

const MvPoly& require_poly(const ProblemFile& pf, const std::string& name) {
    const MvPoly* p = pf.find(name);
    if (!p) throw InputError("no declared polynomial named \"" + name + "\"");
    return *p;
}

std::vector<MvPoly> polys_by_names(const ProblemFile& pf, const std::string& value,
                                   std::vector<std::string>* names_out = nullptr) {
    std::vector<MvPoly> out;
    for (const std::string& name : split_tokens(value)) {
        out.push_back(require_poly(pf, name));
        if (names_out) names_out->push_back(name);
    }
    return out;
}

/// The polynomials named by "basis:", or every declaration when absent.
std::vector<MvPoly> generators_of(const ProblemFile& pf,
                                  std::vector<std::string>* names_out = nullptr) {
    auto it = pf.fields.find("basis");
    if (it != pf.fields.end()) return polys_by_names(pf, it->second, names_out);
    std::vector<MvPoly> out;
    for (const auto& [name, p] : pf.decls) {
        out.push_back(p);
        if (names_out) names_out->push_back(name);
    }
    return out;
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run_gb_compute(const Options& opt) {
    ProblemFile pf = parse_problem_file(read_input(opt));
    MonomialOrderSpec order = effective_order(opt, pf);
    std::vector<MvPoly> gens = generators_of(pf);
    if (gens.empty()) throw InputError("no generators declared");

    GroebnerBasis G = reduced_groebner(order, gens, effective_buchberger(opt));
    CertificateBundle bundle = make_certificate_bundle(G);

    if (!opt.cert_out.empty()) {
        std::ofstream out(opt.cert_out);
        if (!out) throw InputError("cannot write certificate file \"" + opt.cert_out + "\"");
        out << serialize_bundle(bundle);
    }
    if (opt.json) {
        emit_json(bundle_to_json(bundle));
    } else {
        std::cout << "reduced Groebner basis (" << to_string(order.kind()) << ", "
                  << G.elements.size() << " element" << (G.elements.size() == 1 ? "" : "s")
                  << "):\n";
        for (const MvPoly& g : G.elements)
            std::cout << "  " << print_poly(order, g) << "\n";
        if (!opt.cert_out.empty())
            std::cout << "certificate bundle written to " << opt.cert_out << "\n";
    }
    return kExitOk;
}

int run_gb_check(const Options& opt) {
    ProblemFile pf = parse_problem_file(read_input(opt));
    MonomialOrderSpec order = effective_order(opt, pf);
    std::vector<MvPoly> basis = generators_of(pf);

    CriterionReport report = check_buchberger_criterion(order, basis);
    if (opt.json) {
        nlohmann::json j;
        j["ok"] = report.ok;
        if (report.ok) {
            j["pairs_checked"] = report.certificates.size();
        } else {
            j["failing_pair"] = {report.failing_pair->first, report.failing_pair->second};
            j["remainder"] = poly_to_json(order, report.failing_remainder);
        }
        emit_json(j);
    } else if (report.ok) {
        std::cout << "Groebner basis: all " << report.certificates.size()
                  << " S-pairs reduce to zero\n";
    } else {
        std::cout << "not a Groebner basis: pair (" << report.failing_pair->first << ","
                  << report.failing_pair->second << ") leaves remainder "
                  << print_poly(order, report.failing_remainder) << "\n";
    }
    return report.ok ? kExitOk : kExitFalse;
}

int run_divide(const Options& opt) {
    ProblemFile pf = parse_problem_file(read_input(opt));
    MonomialOrderSpec order = effective_order(opt, pf);
    const MvPoly& dividend = require_poly(pf, require_field(pf, "dividend"));
    std::vector<std::string> names;
    std::vector<MvPoly> divisors = polys_by_names(pf, require_field(pf, "divisors"), &names);

    DivisionResult res = divide(order, dividend, divisors);
    if (opt.json) {
        nlohmann::json q = nlohmann::json::object();
        for (std::size_t i = 0; i < res.quotients.size(); ++i)
            if (!res.quotients[i].is_zero())
                q[std::to_string(i)] = poly_to_json(order, res.quotients[i]);
        nlohmann::json j;
        j["quotients"] = std::move(q);
        j["remainder"] = poly_to_json(order, res.remainder);
        emit_json(j);
    } else {
        for (std::size_t i = 0; i < res.quotients.size(); ++i)
            std::cout << "quotient[" << i << "] (" << names[i]
                      << ") = " << print_poly(order, res.quotients[i]) << "\n";
        std::cout << "remainder = " << print_poly(order, res.remainder) << "\n";
    }
    return kExitOk;
}

int run_member(const Options& opt) {
    ProblemFile pf = parse_problem_file(read_input(opt));
    MonomialOrderSpec order = effective_order(opt, pf);
    const MvPoly& candidate = require_poly(pf, require_field(pf, "candidate"));
    std::vector<MvPoly> gens = generators_of(pf);
    if (gens.empty()) throw InputError("no generators declared");

    GroebnerBasis G = reduced_groebner(order, gens, effective_buchberger(opt));
    auto [member, cert] = member_of_ideal(G, candidate);

    if (opt.json) {
        nlohmann::json q = nlohmann::json::object();
        for (std::size_t i = 0; i < cert.quotients.size(); ++i)
            if (!cert.quotients[i].is_zero())
                q[std::to_string(i)] = poly_to_json(order, cert.quotients[i]);
        nlohmann::json j;
        j["member"] = member;
        j["basis"] = nlohmann::json::array();
        for (const MvPoly& g : G.elements) j["basis"].push_back(poly_to_json(order, g));
        j["quotients"] = std::move(q);
        j["remainder"] = poly_to_json(order, cert.remainder);
        emit_json(j);
    } else if (member) {
        std::cout << "member: yes\n";
        for (std::size_t i = 0; i < cert.quotients.size(); ++i)
            if (!cert.quotients[i].is_zero())
                std::cout << "  cofactor over basis[" << i
                          << "] = " << print_poly(order, cert.quotients[i]) << "\n";
    } else {
        std::cout << "member: no, fully reduced remainder = "
                  << print_poly(order, cert.remainder) << "\n";
    }
    return member ? kExitOk : kExitFalse;
}

int run_spoly(const Options& opt) {
    ProblemFile pf = parse_problem_file(read_input(opt));
    MonomialOrderSpec order = effective_order(opt, pf);
    std::vector<std::string> names = split_tokens(require_field(pf, "pair"));
    if (names.size() != 2) throw InputError("\"pair:\" must name exactly two polynomials");
    MvPoly s = s_polynomial(order, require_poly(pf, names[0]), require_poly(pf, names[1]));

    if (opt.json) {
        nlohmann::json j;
        j["spoly"] = poly_to_json(order, s);
        emit_json(j);
    } else {
        std::cout << "spoly(" << names[0] << ", " << names[1]
                  << ") = " << print_poly(order, s) << "\n";
    }
    return kExitOk;
}

int run_cert_verify(const Options& opt) {
    CertificateBundle bundle = parse_bundle(read_input(opt));
    VerifyResult res = verify_certificates(bundle);

    const char* status = res.status == VerifyStatus::ok         ? "ok"
                         : res.status == VerifyStatus::invalid ? "invalid"
                                                                : "malformed";
    if (opt.json) {
        nlohmann::json j;
        j["status"] = status;
        j["detail"] = res.detail;
        emit_json(j);
    } else if (res.status == VerifyStatus::ok) {
        std::cout << "certificates verify: " << bundle.spair_certs.size() << " S-pairs, "
                  << bundle.generator_certs.size() << " generators, "
                  << bundle.basis_certs.size() << " basis elements\n";
    } else {
        std::cout << "certificate " << status << ": " << res.detail << "\n";
    }
    switch (res.status) {
    case VerifyStatus::ok: return kExitOk;
    case VerifyStatus::invalid: return kExitFalse;
    case VerifyStatus::malformed: return kExitInput;
    }
    return kExitInput;
}

VarInjection parse_injection(const std::string& value) {
    std::vector<std::string> toks = split_tokens(value);
    if (toks.empty()) throw InputError("empty \"map:\" field");
    if (toks[0] == "shift") {
        if (toks.size() != 2) throw InputError("map: shift requires one offset");
        try {
            return VarInjection::shift(std::stoull(toks[1]));
        } catch (const std::exception&) {
            throw InputError("bad shift offset \"" + toks[1] + "\"");
        }
    }
    std::vector<std::pair<VarIndex, VarIndex>> pairs;
    for (const std::string& tok : toks) {
        std::size_t arrow = tok.find("->");
        if (arrow == std::string::npos)
            throw InputError("map entries look like x0->x5, got \"" + tok + "\"");
        pairs.emplace_back(parse_var_name(tok.substr(0, arrow)),
                           parse_var_name(tok.substr(arrow + 2)));
    }
    try {
        return VarInjection::finite_map(std::move(pairs));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

int run_embed_check(const Options& opt) {
    ProblemFile pf = parse_problem_file(read_input(opt));
    MonomialOrderSpec target = effective_order(opt, pf);
    VarInjection inj = parse_injection(require_field(pf, "map"));
    OrderEmbedding emb = OrderEmbedding::of_injective(target, inj);

    std::vector<MvPoly> polys;
    for (const auto& [name, p] : pf.decls) polys.push_back(p);
    if (polys.empty()) throw InputError("no polynomials declared");

    nlohmann::json checks = nlohmann::json::object();
    bool all_ok = true;
    auto record = [&](const char* name, bool ok) {
        checks[name] = ok;
        all_ok = all_ok && ok;
        if (!opt.json) std::cout << name << ": " << (ok ? "ok" : "FAILED") << "\n";
    };

    bool section = true;
    for (const MvPoly& p : polys)
        section = section && restrict_poly(inj, rename_poly(inj, p)) == p;
    record("rename_restrict_section", section);

    std::vector<ExponentVector> samples;
    for (const MvPoly& p : polys)
        for (const auto& [e, c] : p.terms()) samples.push_back(e);
    std::size_t base = samples.size();
    for (std::size_t a = 0; a < base; ++a)
        for (std::size_t b = a; b < base; ++b) samples.push_back(sum(samples[a], samples[b]));
    record("order_embedding_monotone", check_order_embedding(emb, samples));

    bool deg_ok = true;
    for (const MvPoly& p : polys)
        deg_ok = deg_ok && degree(emb.target_order, rename_poly(inj, p)) ==
                               lift_exponent(inj, degree(emb.source_order, p));
    record("degree_commutes", deg_ok);

    if (pf.fields.count("dividend") && pf.fields.count("divisors")) {
        const MvPoly& f = require_poly(pf, require_field(pf, "dividend"));
        std::vector<MvPoly> divisors = polys_by_names(pf, require_field(pf, "divisors"));
        DivisionResult witness = divide(emb.source_order, f, divisors);
        record("remainder_invariance",
               check_remainder_invariance(emb, f, divisors, witness));
    }
    if (pf.fields.count("basis")) {
        std::vector<MvPoly> basis = polys_by_names(pf, require_field(pf, "basis"));
        record("criterion_invariance", check_gb_invariance(emb, basis, basis));
    }

    if (opt.json) {
        nlohmann::json j;
        j["checks"] = std::move(checks);
        j["ok"] = all_ok;
        emit_json(j);
    }
    return all_ok ? kExitOk : kExitFalse;
}

int run_liminf_demo(const Options& opt) {
    ProblemFile pf = parse_problem_file(read_input(opt));
    MonomialOrderSpec order = effective_order(opt, pf);
    for (std::size_t i = 0; i < order.precedence().size(); ++i)
        if (order.precedence()[i] != i)
            throw InputError("liminf demo uses the default variable precedence");
    std::vector<MvPoly> gens = generators_of(pf);
    if (gens.empty()) throw InputError("no generators declared");

    std::vector<std::uint64_t> prefixes;
    if (auto it = pf.fields.find("prefixes"); it != pf.fields.end()) {
        for (const std::string& tok : split_tokens(it->second)) {
            try {
                prefixes.push_back(std::stoull(tok));
            } catch (const std::exception&) {
                throw InputError("bad prefix size \"" + tok + "\"");
            }
        }
    } else {
        std::uint64_t v = 0;
        for (const MvPoly& g : gens)
            for (const auto& [e, c] : g.terms())
                if (!e.is_zero()) v = std::max(v, e.max_var() + 1);
        for (std::uint64_t n = 1; n <= v + 2; ++n) prefixes.push_back(n);
        if (prefixes.empty()) prefixes.push_back(1);
    }

    LiminfResult res;
    try {
        res = liminf_reduced_gb(order.kind(), gens, prefixes, effective_buchberger(opt));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }

    const char* verdict = res.verdict == LiminfResult::Verdict::confirmed ? "confirmed"
                          : res.verdict == LiminfResult::Verdict::mismatch ? "mismatch"
                                                                            : "inconclusive";
    if (opt.json) {
        nlohmann::json j;
        j["prefixes"] = res.prefixes;
        j["per_prefix"] = nlohmann::json::array();
        for (const auto& basis : res.per_prefix) {
            nlohmann::json b = nlohmann::json::array();
            for (const MvPoly& p : basis) b.push_back(poly_to_json(order, p));
            j["per_prefix"].push_back(std::move(b));
        }
        j["liminf"] = nlohmann::json::array();
        for (const MvPoly& p : res.liminf) j["liminf"].push_back(poly_to_json(order, p));
        j["direct"] = nlohmann::json::array();
        for (const MvPoly& p : res.direct) j["direct"].push_back(poly_to_json(order, p));
        j["stabilized"] = res.stabilized;
        j["verdict"] = verdict;
        emit_json(j);
    } else {
        for (std::size_t k = 0; k < res.prefixes.size(); ++k) {
            std::cout << "G_" << res.prefixes[k] << " =";
            if (res.per_prefix[k].empty()) std::cout << " (empty)";
            for (const MvPoly& p : res.per_prefix[k])
                std::cout << "  " << print_poly(order, p) << " ;";
            std::cout << "\n";
        }
        std::cout << "liminf =";
        for (const MvPoly& p : res.liminf) std::cout << "  " << print_poly(order, p) << " ;";
        if (res.liminf.empty()) std::cout << " (empty)";
        std::cout << "\n";
        std::cout << "direct reduced basis =";
        for (const MvPoly& p : res.direct) std::cout << "  " << print_poly(order, p) << " ;";
        if (res.direct.empty()) std::cout << " (empty)";
        std::cout << "\n";
        std::cout << "verdict: " << verdict << "\n";
    }
    return res.verdict == LiminfResult::Verdict::confirmed ? kExitOk : kExitFalse;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--input", opt.input_path, "Problem file (default: stdin)");
    cmd->add_option("--order", opt.order_name, "Monomial order: lex|grlex|grevlex")
        ->each([&opt](const std::string&) { opt.order_given = true; });
    cmd->add_option("--vars", opt.vars_csv,
                    "Variable precedence, e.g. x0,x1,x2 (first = highest)")
        ->each([&opt](const std::string&) { opt.vars_given = true; });
    cmd->add_flag("--json", opt.json, "Emit a JSON result object");
}

void add_compute(CLI::App* cmd, Options& opt) {
    cmd->add_option("--strategy", opt.strategy_name, "Pair selection: normal|fifo");
    cmd->add_flag("--coprime-skip", opt.coprime_skip,
                  "Skip S-pairs with coprime leading monomials");
    cmd->add_option("--budget", opt.budget, "Maximum S-pair reductions");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Groebner basis engine with machine-checkable certificates"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* gb = app.add_subcommand("gb", "Groebner basis computations");
    gb->require_subcommand(1);
    CLI::App* gb_compute =
        gb->add_subcommand("compute", "Reduced basis of the declared generators");
    add_common(gb_compute, opt);
    add_compute(gb_compute, opt);
    gb_compute->add_option("--cert-out", opt.cert_out, "Write a certificate bundle here");
    CLI::App* gb_check = gb->add_subcommand("check", "Buchberger criterion for a claimed basis");
    add_common(gb_check, opt);

    CLI::App* divide_cmd = app.add_subcommand("divide", "Multivariate division with remainder");
    add_common(divide_cmd, opt);

    CLI::App* member_cmd = app.add_subcommand("member", "Ideal membership via division");
    add_common(member_cmd, opt);
    add_compute(member_cmd, opt);

    CLI::App* spoly_cmd = app.add_subcommand("spoly", "S-polynomial of a declared pair");
    add_common(spoly_cmd, opt);

    CLI::App* cert = app.add_subcommand("cert", "Certificate operations");
    cert->require_subcommand(1);
    CLI::App* cert_verify = cert->add_subcommand("verify", "Check a certificate bundle");
    add_common(cert_verify, opt);

    CLI::App* embed = app.add_subcommand("embed", "Variable embedding checks");
    embed->require_subcommand(1);
    CLI::App* embed_check = embed->add_subcommand("check", "Invariance under an injection");
    add_common(embed_check, opt);

    CLI::App* liminf = app.add_subcommand("liminf", "Prefix-restriction limit demo");
    liminf->require_subcommand(1);
    CLI::App* liminf_demo = liminf->add_subcommand("demo", "Reduced bases of prefix contractions");
    add_common(liminf_demo, opt);
    add_compute(liminf_demo, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (gb_compute->parsed()) return run_gb_compute(opt);
        if (gb_check->parsed()) return run_gb_check(opt);
        if (divide_cmd->parsed()) return run_divide(opt);
        if (member_cmd->parsed()) return run_member(opt);
        if (spoly_cmd->parsed()) return run_spoly(opt);
        if (cert_verify->parsed()) return run_cert_verify(opt);
        if (embed_check->parsed()) return run_embed_check(opt);
        if (liminf_demo->parsed()) return run_liminf_demo(opt);
        std::cerr << "no command selected\n";
        return kExitInput;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const MalformedCertificateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
}
