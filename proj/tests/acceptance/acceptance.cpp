// Acceptance run: one PASS/FAIL line per criterion, each under a wall-clock limit.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include "hc3/cli.hpp"
#include "hc3/orientals.hpp"
#include "hc3/simplicial.hpp"
#include "hc3/strictify.hpp"

namespace fs = std::filesystem;
using namespace hc3;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "failed: " + what;
        }
    }
    void note(const std::string& s) {
        if (!detail.empty()) detail += "; ";
        detail += s;
    }
};

Chain ch(int degree, const std::string& text) { return parse_chain(degree, text); }
Chain vx(const std::string& name) { return Chain::basis(0, name); }

std::string matrix_diff(const CellMatrix& got, const CellMatrix& want) {
    std::string out;
    for (int k = 0; k <= want.dim; ++k)
        for (int row = 0; row < 2; ++row) {
            const auto& g = row == 0 ? got.row0 : got.row1;
            const auto& w = row == 0 ? want.row0 : want.row1;
            if (k < static_cast<int>(g.size()) && g[k] == w[k]) continue;
            out += " row" + std::to_string(row) + "[" + std::to_string(k) + "]: got " +
                   (k < static_cast<int>(g.size()) ? g[k].str() : "-") + ", displayed " + w[k].str() + ";";
        }
    return out;
}

// ---------------------------------------------------------------------------------------------

Outcome c1_atoms() {
    Outcome o;
    CellMatrix a2{2, {vx("0"), ch(1, "0-2"), ch(2, "0-1-2")}, {vx("2"), ch(1, "0-1 + 1-2"), ch(2, "0-1-2")}};
    CellMatrix a3{3,
                  {vx("0"), ch(1, "0-1 + 1-2 + 2-3"), ch(2, "0-1-2 + 0-2-3"), ch(3, "0-1-2-3")},
                  {vx("3"), ch(1, "0-3"), ch(2, "1-2-3 + 0-1-3"), ch(3, "0-1-2-3")}};
    auto K2 = simplex_complex(2);
    auto K3 = simplex_complex(3);
    auto g2 = atom(K2, Chain::basis(2, "0-1-2"));
    auto g3 = atom(K3, Chain::basis(3, "0-1-2-3"));
    o.require(g2 == a2, "<012> matches the displayed matrix" + matrix_diff(g2, a2));
    o.require(g3 == a3, "<0123> matches the displayed matrix" + matrix_diff(g3, a3));
    o.note(std::string("atom(<0123>) is a cell: ") + (is_cell(K3, g3) ? "yes" : "no") +
           ", displayed <0123> is a cell: " + (is_cell(K3, a3) ? "yes" : "no"));
    return o;
}

ADC loop_complex() {
    return ADC({{"a", "b"}, {"f", "g"}}, {{"f", ch(0, "b - a")}, {"g", ch(0, "a - b")}}, {{"a", 1}, {"b", 1}});
}

Outcome c2_steiner() {
    Outcome o;
    for (int n = 0; n <= 4; ++n) {
        auto K = simplex_complex(n);
        auto s = std::to_string(n);
        o.require(is_unital_basis(K), "unital n=" + s);
        o.require(is_loop_free(K), "loop-free n=" + s);
        o.require(is_strongly_loop_free(K), "strongly loop-free n=" + s);
    }
    auto L = loop_complex();
    o.require(!is_loop_free(L), "loop complex is not loop-free");
    o.require(!is_strongly_loop_free(L), "loop complex is not strongly loop-free");
    return o;
}

Outcome c3_nu_laws() {
    Outcome o;
    auto K = simplex_complex(3);
    auto cells = enumerate_cells(K, 3, 1);
    auto cells2 = enumerate_cells(K, 3, 2);
    o.require(cells2 == cells, "cap 2 adds no cells");
    std::size_t glob = 0, unit = 0, assoc = 0, exch = 0;
    for (const auto& x : cells) {
        o.require(is_cell(K, x), "enumerated cell is a cell");
        if (x.dim >= 2) {
            o.require(cell_source(cell_source(x)) == cell_source(cell_target(x)) &&
                          cell_target(cell_source(x)) == cell_target(cell_target(x)),
                      "globularity");
            ++glob;
        }
        for (int j = 0; j < x.dim; ++j) {
            o.require(cell_compose(x, cell_identity(cell_source(x, j), x.dim), j) == x &&
                          cell_compose(cell_identity(cell_target(x, j), x.dim), x, j) == x,
                      "unit law");
            ++unit;
        }
    }
    std::map<std::tuple<int, int, NuCell>, std::vector<const NuCell*>> by_target;  // (dim, j, t_j)
    for (const auto& x : cells)
        for (int j = 0; j < x.dim; ++j) by_target[{x.dim, j, cell_target(x, j)}].push_back(&x);
    auto before = [&](const NuCell& x, int j) -> const std::vector<const NuCell*>& {
        static const std::vector<const NuCell*> none;
        auto it = by_target.find({x.dim, j, cell_source(x, j)});
        return it == by_target.end() ? none : it->second;
    };
    for (const auto& x : cells)
        for (int j = 0; j < x.dim; ++j)
            for (const NuCell* y : before(x, j)) {
                auto xy = cell_compose(x, *y, j);
                o.require(is_cell(K, xy), "composite is a cell");
                for (const NuCell* z : before(*y, j)) {
                    o.require(cell_compose(xy, *z, j) == cell_compose(x, cell_compose(*y, *z, j), j), "associativity");
                    ++assoc;
                }
            }
    for (const auto& x : cells)
        for (int j = 1; j < x.dim; ++j)
            for (int k = 0; k < j; ++k)
                for (const NuCell* x2 : before(x, k)) {
                    for (const NuCell* y : before(x, j))
                        for (const NuCell* y2 : before(*x2, j)) {
                            if (!composable(*y, *y2, k)) continue;
                            auto lhs = cell_compose(cell_compose(x, *y, j), cell_compose(*x2, *y2, j), k);
                            auto rhs = cell_compose(cell_compose(x, *x2, k), cell_compose(*y, *y2, k), j);
                            o.require(lhs == rhs, "exchange");
                            ++exch;
                        }
                }
    o.note(std::to_string(cells.size()) + " cells, " + std::to_string(glob) + " globularity, " +
           std::to_string(unit) + " unit, " + std::to_string(assoc) + " associativity, " + std::to_string(exch) +
           " exchange instances");
    o.require(assoc > 0 && exch > 0, "law instances were found");
    return o;
}

Outcome c4_horizontal() {
    Outcome o;
    std::size_t checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> cuts{0};
            for (int i = 1; i < n; ++i)
                if (mask & (1u << (i - 1))) cuts.push_back(i);
            cuts.push_back(n);
            std::string s = "n=" + std::to_string(n) + " cuts=" + tuple_name(cuts);
            o.require(check_horizontal_iso(n, cuts, 3), s);
            ++checked;
        }
    o.note(std::to_string(checked) + " cut patterns");
    return o;
}

Outcome c5_nerve_census() {
    Outcome o;
    auto D2 = make_disk(2);
    NerveCache N(D2);
    std::string counts;
    for (int k = 2; k <= 4; ++k) {
        o.require(N.nondeg[k].size() == 2, "dimension " + std::to_string(k));
        counts += std::to_string(N.nondeg[k].size()) + (k < 4 ? "," : "");
    }
    o.note("non-degenerate counts dims 2-4: " + counts);
    return o;
}

Simplex rename(const FiniteThreeCat& A, const FiniteThreeCat& B, const Simplex& x) {
    Simplex z(x.k);
    for (unsigned m = 1; m < 32; ++m)
        if (x.lab[m] != kNoCell) z.lab[m] = B.at(A.name(x.lab[m]));
    return z;
}

Outcome c6_case_study() {
    Outcome o;
    auto D2 = make_disk(2);
    auto S = make_invertible_disk3();
    std::map<CellId, CellId> fixed;
    for (int d = 0; d <= 1; ++d)
        for (CellId x : D2.cells(d)) fixed[x] = S.at(D2.name(x));
    auto functors = enumerate_strict_functors(D2, S, fixed);
    NerveCache A(D2), B(S);
    std::map<Simplex, Simplex> fixed_simplices;
    for (int k = 0; k <= 1; ++k)
        for (const auto& y : A.nondeg[k]) fixed_simplices[y] = rename(D2, S, y);
    auto maps = enumerate_simplicial_maps(A, B, fixed_simplices);
    std::size_t oplax = 0;
    for (const auto& M : maps) oplax += is_simplicial_oplax(M) ? 1 : 0;
    o.require(functors.size() == 2, "2 strict functors");
    o.require(maps.size() == 4, "4 simplicial maps");
    o.require(oplax == 2, "2 simplicial-oplax maps");
    o.note(std::to_string(functors.size()) + " functors, " + std::to_string(maps.size()) + " maps, " +
           std::to_string(oplax) + " simplicial-oplax");
    return o;
}

Outcome c7_sup() {
    Outcome o;
    auto C = share(truncate_from_adc(simplex_complex(3)));
    auto s = sup_functor(C, 4);
    auto r = validate(s.F);
    o.require(r.ok(), "validate(sup) passes");
    for (const auto* fams : {&normalisation_families(), &coherence_families()})
        for (const auto& f : *fams) o.require(r.instances.count(f) == 1, "family " + f + " checked");
    o.note(std::to_string(s.elements.objects.size()) + " objects, " + std::to_string(s.F.W.size()) +
           " W entries, " + std::to_string(normalisation_families().size()) + "+" +
           std::to_string(coherence_families().size()) + " families");

    const auto& B = *s.F.target;
    std::size_t with_parallel = 0;
    for (const auto& [key, value] : s.F.W)
        if (B.hom(B.src(value), B.tgt(value)).size() != 1) ++with_parallel;
    o.note(std::to_string(with_parallel) + " W entries admit a parallel alternative");

    std::vector<std::tuple<CellId, CellId, CellId>> keys;
    for (const auto& [key, value] : s.F.W) keys.push_back(key);
    std::mt19937_64 rng(7);
    std::shuffle(keys.begin(), keys.end(), rng);
    std::size_t detected = 0, tried = 0;
    const auto& threes = B.cells(3);
    for (std::size_t i = 0; i < 25 && i < keys.size(); ++i) {
        auto M = s.F;
        CellId old = M.W.at(keys[i]);
        CellId repl = old;
        while (repl == old) repl = threes[std::uniform_int_distribution<std::size_t>(0, threes.size() - 1)(rng)];
        M.W[keys[i]] = repl;
        ++tried;
        auto rm = validate(M);
        bool hit = false;
        for (const auto& v : rm.violations) hit = hit || v.family == "W";
        detected += hit ? 1 : 0;
    }
    o.require(detected == tried, "every sampled W mutation is detected");
    o.note(std::to_string(detected) + "/" + std::to_string(tried) + " sampled W mutations detected");
    return o;
}

std::vector<FiniteThreeCat> small_corpus() {
    return {make_disk(1),
            make_disk(2),
            make_disk(3),
            make_invertible_disk3(),
            truncate_from_adc(simplex_complex(2)),
            truncate_from_adc(simplex_complex(3)),
            poset_category(Poset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}))};
}

Outcome c8_constraints() {
    Outcome o;
    auto cats = small_corpus();
    std::vector<NerveCache> nerves;
    for (const auto& C : cats) nerves.emplace_back(C);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> pick(0, cats.size() - 1);
    std::size_t maps = 0, oplax = 0;
    while (maps < 100) {
        std::size_t a = pick(rng), b = pick(rng);
        auto F = random_simplicial_map(nerves[a], nerves[b], rng);
        o.require(F.has_value(), "random map exists");
        if (!F) break;
        o.require(validate_map(*F).empty(), "random map is simplicial");
        auto bad = check_constraint_relations(*F);
        o.require(bad.empty(), bad.empty() ? "" : bad.front());
        if (is_simplicial_oplax(*F)) {
            ++oplax;
            auto t = check_trivial_consequences(*F);
            o.require(t.empty(), t.empty() ? "" : t.front());
        }
        ++maps;
    }
    o.note(std::to_string(maps) + " random maps, " + std::to_string(oplax) + " simplicial-oplax");
    return o;
}

// Validated oplax functors and simplicial-oplax maps shared by criteria 9 and 10.
struct Corpus {
    CatPtr D2 = share(make_disk(2));
    CatPtr S = share(make_invertible_disk3());
    CatPtr O2 = share(truncate_from_adc(simplex_complex(2)));
    CatPtr O3 = share(truncate_from_adc(simplex_complex(3)));
    Strictification S2 = strictify(poset_one_category(Poset::chain(3)));
    Strictification S3 = strictify(poset_one_category(Poset::chain(4)));
    std::vector<SupFunctor> sups;
    std::vector<OplaxData> functors;
    std::vector<SimplicialMap34> maps;

    void add_strict(const CatPtr& A, const CatPtr& B, std::size_t limit) {
        Budget budget(5'000'000);
        auto us = enumerate_strict_functors(*A, *B, {}, &budget);
        for (std::size_t i = 0; i < us.size() && i < limit; ++i) functors.push_back(from_strict(us[i], A, B));
    }

    Corpus() {
        for (const auto& C : {D2, S, O2, O3}) functors.push_back(identity_oplax(C));
        NerveCache A(*D2), B(*S);
        for (const auto& M : enumerate_simplicial_maps(A, B))
            if (is_simplicial_oplax(M)) {
                maps.push_back(M);
                functors.push_back(from_simplicial(M, D2, S));
            }
        for (const auto& M : enumerate_simplicial_maps(B, B))
            if (is_simplicial_oplax(M)) {
                maps.push_back(M);
                functors.push_back(from_simplicial(M, S, S));
            }
        add_strict(D2, S, 2);
        add_strict(O2, S, 4);
        add_strict(O3, S, 2);
        add_strict(O2, O3, 4);
        add_strict(S2.cat, S, 3);
        add_strict(S3.cat, S, 2);
        sups.push_back(sup_functor(O2, 4));
        sups.push_back(sup_functor(O3, 3));
        for (const auto& s : sups) functors.push_back(s.F);
        functors.push_back(eta(S2));
        functors.push_back(eta(S3));
    }
};

Outcome c9_correspondence(Corpus& K) {
    Outcome o;
    std::size_t roundtrips = 0;
    for (const auto& F : K.functors) {
        o.require(validate(F).ok(), "corpus functor validates");
        auto M = to_simplicial(F);
        o.require(is_simplicial_oplax(M), "image is simplicial-oplax");
        o.require(from_simplicial(M, F.source, F.target) == F, "from_simplicial o to_simplicial = id");
        K.maps.push_back(M);
        ++roundtrips;
    }
    std::size_t back = 0;
    for (const auto& M : K.maps) {
        CatPtr a, b;
        for (const auto& F : K.functors) {
            if (F.source.get() == M.source) a = F.source;
            if (F.target.get() == M.target) b = F.target;
            if (F.source.get() == M.target) b = F.source;
        }
        if (!a || !b) continue;
        o.require(to_simplicial(from_simplicial(M, a, b)).images == M.images, "to_simplicial o from_simplicial = id");
        ++back;
    }
    std::size_t pairs = 0, triples = 0;
    const auto& L = K.functors;
    for (const auto& F : L)
        for (const auto& G : L) {
            if (G.source.get() != F.target.get()) continue;
            auto GF = compose(G, F);
            o.require(validate(GF).ok(), "compose validates");
            ++pairs;
            for (const auto& H : L) {
                if (H.source.get() != G.target.get()) continue;
                o.require(compose(H, GF) == compose(compose(H, G), F), "compose is associative");
                ++triples;
            }
        }
    o.note(std::to_string(L.size()) + " functors, " + std::to_string(roundtrips) + "+" + std::to_string(back) +
           " round trips, " + std::to_string(pairs) + " composites, " + std::to_string(triples) +
           " associativity triples");
    return o;
}

Outcome c10_closure(const Corpus& K) {
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& F : K.maps)
        for (const auto& G : K.maps) {
            if (G.source != F.target) continue;
            auto GF = compose_maps(G, F);
            o.require(is_simplicial_oplax(GF), "composite is simplicial-oplax");
            ++pairs;
        }
    o.require(pairs > 0, "composable pairs exist");
    o.note(std::to_string(K.maps.size()) + " maps, " + std::to_string(pairs) + " composable pairs");
    return o;
}

Outcome c11_strictify() {
    Outcome o;
    for (int n = 0; n <= 4; ++n) {
        auto S = strictify(poset_one_category(Poset::chain(n + 1)));
        auto T = truncate_from_adc_full(simplex_complex(n));
        o.require(validate_cat(*S.cat).empty(), "strictify([" + std::to_string(n) + "]) is a 3-category");
        o.require(check_isomorphism(*S.cat, T.cat, oriental_comparison(S, T)).empty(),
                  "strictify([" + std::to_string(n) + "]) is isomorphic to the truncated oriental");
    }
    auto S3 = strictify(poset_one_category(Poset::chain(4)));
    o.require(validate(eta(S3)).ok(), "eta([3]) validates");
    auto u1 = check_universal_property(strictify(poset_one_category(Poset::chain(2))), make_disk(1));
    auto u2 = check_universal_property(strictify(poset_one_category(Poset::chain(3))),
                                       truncate_from_adc(simplex_complex(2)));
    o.require(u1.holds(), "universal property for ([1], disk(1))");
    o.require(u2.holds(), "universal property for ([2], O2)");
    o.note("UP counts " + std::to_string(u1.strict_functors) + "/" + std::to_string(u1.simplicial_maps) + " and " +
           std::to_string(u2.strict_functors) + "/" + std::to_string(u2.simplicial_maps));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5; ++i) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        auto A = poset_one_category(random_poset(n, 0.5, rng));
        o.require(is_split_free(A), "random poset is split-free");
        auto S = strictify(A);
        o.require(check_tau1(S).empty(), "tau_1 of the strictification of a random poset");
    }
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void put(const fs::path& p, const nlohmann::json& j) { std::ofstream(p, std::ios::binary) << cli::dump(j); }

Outcome c12_determinism() {
    Outcome o;
    fs::path base = fs::temp_directory_path() / ("hc3_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(base);
    fs::path in = base / "in";
    fs::create_directories(in);

    auto D2 = make_disk(2);
    auto S = make_invertible_disk3();
    put(in / "D2.json", to_json(D2));
    put(in / "D3s.json", to_json(S));
    NerveCache A(D2), B(S);
    for (const auto& M : enumerate_simplicial_maps(A, B))
        put(in / (is_simplicial_oplax(M) ? "good.json" : "exotic.json"), to_json(M));
    put(in / "P3.json", to_json(poset_one_category(Poset::chain(4))));
    put(in / "sup.json", to_json(sup_functor(share(truncate_from_adc(simplex_complex(2))), 3).F));
    put(in / "id.json", to_json(identity_oplax(share(make_invertible_disk3()))));

    auto p = [&](const char* f) { return (in / f).string(); };
    std::vector<std::vector<std::string>> commands = {
        {"oriental", "3"},
        {"hom", "3", "0-3", "0-1-2-3"},
        {"nerve", p("D2.json"), "--dim", "4"},
        {"validate-oplax", p("sup.json")},
        {"compose-oplax", p("id.json"), p("id.json")},
        {"to-simplicial", p("sup.json")},
        {"check-simplicial", p("D2.json"), p("D3s.json"), p("good.json")},
        {"check-simplicial", p("D2.json"), p("D3s.json"), p("exotic.json")},
        {"strictify", p("P3.json")},
    };
    std::size_t identical = 0;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::string bytes[2];
        for (int run = 0; run < 2; ++run) {
            fs::path out = base / ("run" + std::to_string(run)) / std::to_string(i);
            std::vector<std::string> argv{"hc3"};
            argv.insert(argv.end(), commands[i].begin(), commands[i].end());
            argv.push_back("--out");
            argv.push_back(out.string());
            std::ostringstream sink;
            auto* saved = std::cout.rdbuf(sink.rdbuf());
            int code = cli::run(argv);
            std::cout.rdbuf(saved);
            o.require(code == cli::kPass || code == cli::kFail, commands[i][0] + " ran");
            bytes[run] = slurp(out / "certificate.json");
        }
        bool same = !bytes[0].empty() && bytes[0] == bytes[1];
        o.require(same, commands[i][0] + " certificate is byte-identical");
        identical += same ? 1 : 0;
    }
    // The round trip through to-cellular is also byte-exact.
    fs::path strict_out = base / "run0" / "8";
    fs::path rt = base / "roundtrip";
    std::ostringstream sink;
    auto* saved = std::cout.rdbuf(sink.rdbuf());
    cli::run({"hc3", "to-simplicial", (strict_out / "eta.json").string(), "--out", rt.string()});
    cli::run({"hc3", "to-cellular", (rt / "map.json").string(), "--out", rt.string()});
    std::cout.rdbuf(saved);
    o.require(slurp(rt / "functor.json") == slurp(strict_out / "eta.json"), "to-simplicial/to-cellular round trip");
    o.note(std::to_string(identical) + "/" + std::to_string(commands.size()) + " certificates identical");
    fs::remove_all(base);
    return o;
}

}  // namespace

int main() {
    std::cout.setf(std::ios::unitbuf);
    std::unique_ptr<Corpus> corpus;
    struct Criterion {
        int id;
        double limit;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, 1, c1_atoms},
        {2, 5, c2_steiner},
        {3, 60, c3_nu_laws},
        {4, 60, c4_horizontal},
        {5, 5, c5_nerve_census},
        {6, 30, c6_case_study},
        {7, 120, c7_sup},
        {8, 60, c8_constraints},
        {9, 120,
         [&] {
             corpus = std::make_unique<Corpus>();
             return c9_correspondence(*corpus);
         }},
        {10, 30, [&] { return c10_closure(*corpus); }},
        {11, 300, c11_strictify},
        {12, 60, c12_determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.limit;
        if (!in_time) o.note("time limit exceeded");
        bool pass = o.ok && in_time;
        failed += pass ? 0 : 1;
        std::cout << "criterion " << std::setw(2) << c.id << ": " << (pass ? "PASS" : "FAIL") << "  [" << std::fixed
                  << std::setprecision(2) << secs << " s / " << std::setprecision(0) << c.limit << " s]  "
                  << o.detail << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
