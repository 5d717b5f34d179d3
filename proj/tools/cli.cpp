#include "hc3/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hc3/nu.hpp"
#include "hc3/oplax.hpp"
#include "hc3/orientals.hpp"
#include "hc3/simplicial.hpp"
#include "hc3/strictify.hpp"

namespace hc3::cli {

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

namespace {

struct Malformed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::string command;
    std::filesystem::path out = ".";
    std::uint64_t budget_limit = Budget::kDefault;
    nlohmann::json inputs = nlohmann::json::array();
    nlohmann::json parameters = nlohmann::json::object();

    nlohmann::json read(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Malformed("cannot read " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string bytes = ss.str();
        inputs.push_back(sha256_hex(bytes));
        try {
            return nlohmann::json::parse(bytes);
        } catch (const nlohmann::json::exception& e) {
            throw Malformed(path + ": " + e.what());
        }
    }

    void write(const std::string& file, const nlohmann::json& j) const {
        std::filesystem::create_directories(out);
        std::ofstream o(out / file, std::ios::binary);
        o << dump(j);
        if (!o) throw std::runtime_error("cannot write " + (out / file).string());
    }

    int certify(const nlohmann::json& violations) const {
        nlohmann::json cert{{"command", command},
                            {"inputs", inputs},
                            {"parameters", parameters},
                            {"verdict", violations.empty() ? "pass" : "fail"},
                            {"violations", violations}};
        write("certificate.json", cert);
        std::cout << command << ": " << (violations.empty() ? "pass" : "fail") << "\n";
        return violations.empty() ? kPass : kFail;
    }
};

nlohmann::json oplax_violations(const OplaxReport& r) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : r.violations)
        v.push_back({{"kind", x.kind}, {"tree", x.family}, {"witness", x.witness}, {"detail", x.detail}});
    return v;
}

nlohmann::json cat_violations(const std::vector<Violation>& vs) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : vs) v.push_back({{"kind", x.kind}, {"tree", "category"}, {"witness", nlohmann::json::array()},
                                          {"detail", x.detail}});
    return v;
}

nlohmann::json simplicial_violations(const std::vector<SimplicialViolation>& vs) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : vs) v.push_back({{"kind", "simplicial"}, {"condition", x.condition}, {"witness", x.witness}});
    return v;
}

FiniteThreeCat load_cat(Context& ctx, const std::string& path) {
    auto j = ctx.read(path);
    FiniteThreeCat C = cat_from_json(j);
    auto bad = validate_cat(C);
    if (!bad.empty()) throw Malformed(path + ": " + bad.front().kind + ": " + bad.front().detail);
    return C;
}

OplaxData load_oplax(Context& ctx, const std::string& path) {
    auto j = ctx.read(path);
    OplaxData F = oplax_from_json(j);
    for (const auto* C : {F.source.get(), F.target.get()}) {
        auto bad = validate_cat(*C);
        if (!bad.empty()) throw Malformed(path + ": " + bad.front().kind + ": " + bad.front().detail);
    }
    return F;
}

SimplicialMap34 load_map(const FiniteThreeCat& A, const FiniteThreeCat& B, const nlohmann::json& j) {
    SimplicialMap34 M = map_from_json(A, B, j);
    auto bad = validate_map(M);
    if (!bad.empty()) throw Malformed("map: " + bad.front().kind + ": " + bad.front().detail);
    return M;
}

nlohmann::json map_document(const SimplicialMap34& M) {
    auto j = to_json(M);
    j["source"] = to_json(*M.source);
    j["target"] = to_json(*M.target);
    return j;
}

}  // namespace

int run(const std::vector<std::string>& argv) {
    CLI::App app{"Strict 3-categories, orientals and oplax 3-functors"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx;
    std::string out_dir = ".";
    app.add_option("--out", out_dir, "Directory for output artifacts");
    app.add_option("--budget", ctx.budget_limit, "Enumeration node budget")->capture_default_str();

    int n = 0, max_dim = 3, dim = 2;
    std::int64_t cap = 1;
    std::string p1, p2, p3;

    auto* oriental = app.add_subcommand("oriental", "ADC of the n-simplex and its cell census");
    oriental->add_option("n", n)->required()->check(CLI::Range(0, 6));
    oriental->add_option("--max-dim", max_dim)->check(CLI::Range(0, 6))->capture_default_str();
    oriental->add_option("--coeff-cap", cap)->check(CLI::Range(1, 8))->capture_default_str();

    auto* nerve = app.add_subcommand("nerve", "Simplices of the nerve of a category");
    nerve->add_option("category", p1)->required();
    nerve->add_option("--dim", dim)->check(CLI::Range(0, 4))->capture_default_str();

    auto* vop = app.add_subcommand("validate-oplax", "Validate a normalised oplax 3-functor");
    vop->add_option("functor", p1)->required();

    auto* cop = app.add_subcommand("compose-oplax", "Compose two oplax 3-functors, G after F");
    cop->add_option("G", p1)->required();
    cop->add_option("F", p2)->required();

    auto* tos = app.add_subcommand("to-simplicial", "Nerve image of an oplax 3-functor");
    tos->add_option("functor", p1)->required();

    auto* toc = app.add_subcommand("to-cellular", "Oplax 3-functor of a simplicial-oplax map");
    toc->add_option("map", p1)->required();

    auto* chk = app.add_subcommand("check-simplicial", "Check the simplicial-oplax conditions");
    chk->add_option("A", p1)->required();
    chk->add_option("B", p2)->required();
    chk->add_option("map", p3)->required();

    auto* str = app.add_subcommand("strictify", "Strictification of a split-free 1-category");
    str->add_option("category", p1)->required();

    auto* hom = app.add_subcommand("hom", "Cells between two paths of an oriental");
    hom->add_option("n", n)->required()->check(CLI::Range(0, 6));
    hom->add_option("f", p1, "Source path, e.g. 0-2")->required();
    hom->add_option("g", p2, "Target path, e.g. 0-1-2")->required();
    hom->add_option("--max-dim", max_dim)->check(CLI::Range(1, 5))->capture_default_str();

    std::vector<std::string> args(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kMalformed;
    }
    ctx.out = out_dir;
    Budget budget(ctx.budget_limit);

    try {
        if (*oriental) {
            ctx.command = "oriental";
            ctx.parameters = {{"n", n}, {"max_dim", max_dim}, {"coeff_cap", cap}};
            ADC K = simplex_complex(n);
            auto cells = enumerate_cells(K, max_dim, cap, &budget);
            nlohmann::json total = nlohmann::json::array(), nonid = nlohmann::json::array();
            for (int d = 0; d <= max_dim; ++d) {
                int t = 0, m = 0;
                for (const auto& c : cells)
                    if (c.dim == d) {
                        ++t;
                        m += !is_identity_cell(c);
                    }
                total.push_back(t);
                nonid.push_back(m);
            }
            ctx.write("oriental.json", {{"complex", to_json(K)}, {"cells", total}, {"non_identity_cells", nonid}});
            std::cout << "non-identity cells per dimension: " << nonid.dump() << "\n";
            return ctx.certify(nlohmann::json::array());
        }
        if (*nerve) {
            ctx.command = "nerve";
            ctx.parameters = {{"dim", dim}};
            auto C = load_cat(ctx, p1);
            nlohmann::json counts = nlohmann::json::array(), nondeg = nlohmann::json::array(), list = nlohmann::json::array();
            for (int k = 0; k <= dim; ++k) {
                auto all = simplices(C, k, &budget);
                std::size_t m = 0;
                for (const auto& x : all)
                    if (!is_degenerate(C, x)) {
                        ++m;
                        if (k == dim) list.push_back(to_json(C, x));
                    }
                counts.push_back(all.size());
                nondeg.push_back(m);
            }
            ctx.write("nerve.json", {{"simplices", counts}, {"non_degenerate", nondeg}, {"non_degenerate_top", list}});
            std::cout << "non-degenerate simplices per dimension: " << nondeg.dump() << "\n";
            return ctx.certify(nlohmann::json::array());
        }
        if (*vop) {
            ctx.command = "validate-oplax";
            auto F = load_oplax(ctx, p1);
            auto r = validate(F);
            ctx.write("report.json", to_json(r));
            return ctx.certify(oplax_violations(r));
        }
        if (*cop) {
            ctx.command = "compose-oplax";
            auto G = load_oplax(ctx, p1);
            auto F = load_oplax(ctx, p2);
            if (to_json(*F.target) != to_json(*G.source)) throw Malformed("target of F differs from source of G");
            for (const auto* X : {&G, &F})
                if (!validate(*X).ok()) throw Malformed("an input functor does not validate");
            G.source = F.target;
            auto H = compose(G, F);
            ctx.write("composite.json", to_json(H));
            return ctx.certify(oplax_violations(validate(H)));
        }
        if (*tos) {
            ctx.command = "to-simplicial";
            auto F = load_oplax(ctx, p1);
            auto r = validate(F);
            if (!r.ok()) return ctx.certify(oplax_violations(r));
            auto M = to_simplicial(F, &budget);
            ctx.write("map.json", map_document(M));
            return ctx.certify(simplicial_violations(simplicial_oplax_violations(M)));
        }
        if (*toc) {
            ctx.command = "to-cellular";
            auto j = ctx.read(p1);
            auto A = share(cat_from_json(j.at("source")));
            auto B = share(cat_from_json(j.at("target")));
            auto M = load_map(*A, *B, j);
            auto bad = simplicial_oplax_violations(M);
            if (!bad.empty()) return ctx.certify(simplicial_violations(bad));
            auto F = from_simplicial(M, A, B);
            ctx.write("functor.json", to_json(F));
            return ctx.certify(oplax_violations(validate(F)));
        }
        if (*chk) {
            ctx.command = "check-simplicial";
            auto A = load_cat(ctx, p1);
            auto B = load_cat(ctx, p2);
            auto M = load_map(A, B, ctx.read(p3));
            return ctx.certify(simplicial_violations(simplicial_oplax_violations(M)));
        }
        if (*str) {
            ctx.command = "strictify";
            auto A = one_category_from_json(ctx.read(p1));
            if (!is_split_free(A)) throw Malformed("category is not split-free");
            if (!is_direct(A)) throw Malformed("category has a cycle of non-identity arrows");
            auto S = strictify(A, &budget);
            auto E = eta(S);
            ctx.write("strictification.json", to_json(*S.cat));
            ctx.write("eta.json", to_json(E));
            auto v = cat_violations(validate_cat(*S.cat));
            for (const auto& x : oplax_violations(validate(E))) v.push_back(x);
            for (const auto& s : check_tau1(S))
                v.push_back({{"kind", "tau1"}, {"tree", "epsilon"}, {"witness", nlohmann::json::array()}, {"detail", s}});
            return ctx.certify(v);
        }
        if (*hom) {
            ctx.command = "hom";
            ctx.parameters = {{"n", n}, {"f", p1}, {"g", p2}, {"max_dim", max_dim}};
            auto O = OrientalHandle::simplex(n);
            auto cells = hom_cells(O, path_cell(O, name_tuple(p1)), path_cell(O, name_tuple(p2)), max_dim);
            nlohmann::json list = nlohmann::json::array();
            for (const auto& c : cells) list.push_back({{"dim", c.dim}, {"cell", to_json(c)}, {"name", c.str()}});
            ctx.write("hom.json", {{"cells", list}});
            std::cout << cells.size() << " cells\n";
            return ctx.certify(nlohmann::json::array());
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const Malformed& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kMalformed;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::out_of_range& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kMalformed;
    }
    return kMalformed;
}

}  // namespace hc3::cli
