#include <catch2/catch_amalgamated.hpp>

#include "hc3/oplax.hpp"
#include "hc3/simplicial.hpp"

using hc3::CellId;
using hc3::FiniteThreeCat;
using hc3::OplaxData;

namespace {

bool all_structure_identities(const OplaxData& F) {
    const auto& B = *F.target;
    for (const auto& [k, v] : F.V)
        if (!B.is_identity(v)) return false;
    for (const auto& [k, v] : F.W)
        if (!B.is_identity(v)) return false;
    for (const auto& [k, v] : F.VR)
        if (!B.is_identity(v)) return false;
    for (const auto& [k, v] : F.VL)
        if (!B.is_identity(v)) return false;
    return true;
}

std::set<std::string> families(const hc3::OplaxReport& r) {
    std::set<std::string> out;
    for (const auto& v : r.violations) out.insert(v.family);
    return out;
}

// 2-cells alpha, beta, gamma: f -> g, 3-cells G: alpha -> beta, H: beta -> gamma and two
// parallel cells P, Q: alpha -> gamma with H o_2 G = P.
FiniteThreeCat parallel_target() {
    hc3::CatBuilder b;
    CellId a = b.object("a");
    CellId a2 = b.object("a'");
    CellId f = b.cell("f", a, a2);
    CellId g = b.cell("g", a, a2);
    CellId alpha = b.cell("alpha", f, g);
    CellId beta = b.cell("beta", f, g);
    CellId gamma = b.cell("gamma", f, g);
    CellId G = b.cell("G", alpha, beta);
    CellId H = b.cell("H", beta, gamma);
    CellId P = b.cell("P", alpha, gamma);
    b.cell("Q", alpha, gamma);
    b.explicit_comp(2, H, G, P);
    return b.build();
}

}  // namespace

TEST_CASE("family names", "[oplax]") {
    CHECK(hc3::normalisation_families().size() == 7);
    CHECK(hc3::coherence_families().size() == 14);
}

TEST_CASE("strict functors are oplax with identity structure", "[oplax]") {
    auto S = hc3::share(hc3::make_invertible_disk3());
    auto id = hc3::identity_oplax(S);
    auto r = hc3::validate(id);
    CHECK(r.ok());
    CHECK(all_structure_identities(id));
    for (const auto& fam : hc3::coherence_families()) CHECK(r.instances.count(fam) == 1);

    auto D2 = hc3::share(hc3::make_disk(2));
    std::map<CellId, CellId> fixed;
    for (int d = 0; d <= 1; ++d)
        for (CellId x : D2->cells(d)) fixed[x] = S->at(D2->name(x));
    for (const auto& u : hc3::enumerate_strict_functors(*D2, *S, fixed)) {
        auto F = hc3::from_strict(u, D2, S);
        CHECK(hc3::validate(F).ok());
        CHECK(hc3::from_simplicial(hc3::nerve_of(u), D2, S) == F);
        CHECK(hc3::to_simplicial(F).images == hc3::nerve_of(u).images);
    }
}

TEST_CASE("sup on small categories", "[oplax]") {
    auto P = hc3::share(hc3::make_disk(0));
    auto s0 = hc3::sup_functor(P, 2);
    CHECK(s0.elements.objects.size() == 1);
    CHECK(hc3::validate(s0.F).ok());
    CHECK(all_structure_identities(s0.F));

    auto O2 = hc3::share(hc3::truncate_from_adc(hc3::simplex_complex(2)));
    auto s = hc3::sup_functor(O2, 4);
    auto r = hc3::validate(s.F);
    CHECK(r.ok());
    CHECK(r.instances.at("VV") > 0);
    const auto& src = *s.F.source;
    for (int x = 0; x < static_cast<int>(s.elements.objects.size()); ++x) {
        CellId ob = src.at(s.elements.one.objects[x]);
        CHECK(s.F.target->is_identity(s.F(src.identity(ob))));
    }
}

TEST_CASE("a replaced W value is detected", "[oplax]") {
    auto O2 = hc3::share(hc3::truncate_from_adc(hc3::simplex_complex(2)));
    auto s = hc3::sup_functor(O2, 3);
    REQUIRE(hc3::validate(s.F).ok());
    const auto& B = *s.F.target;
    std::size_t mutated = 0;
    for (auto& [key, value] : s.F.W) {
        for (CellId other : B.cells(3)) {
            if (other == value) continue;
            auto M = s.F;
            M.W[key] = other;
            auto r = hc3::validate(M);
            REQUIRE_FALSE(r.ok());
            REQUIRE(families(r).count("W") == 1);
            ++mutated;
        }
        if (mutated > 50) break;
    }
    CHECK(mutated > 0);
}

TEST_CASE("a parallel 3-cell mutation breaks a coherence", "[oplax]") {
    auto T = hc3::share(parallel_target());
    REQUIRE(hc3::validate_cat(*T).empty());
    auto F = hc3::identity_oplax(T);
    REQUIRE(hc3::validate(F).ok());
    auto M = F;
    M.cell[T->at("P")] = T->at("Q");
    auto r = hc3::validate(M);
    REQUIRE_FALSE(r.ok());
    CHECK(families(r) == std::set<std::string>{"LLL_Y"});
    bool witnessed = false;
    for (const auto& v : r.violations) {
        CHECK(v.kind == "coherence");
        witnessed = witnessed || v.witness == std::vector<std::string>{"H", "G"};
    }
    CHECK(witnessed);
}

TEST_CASE("broken tables are reported", "[oplax]") {
    auto S = hc3::share(hc3::make_invertible_disk3());
    auto F = hc3::identity_oplax(S);

    auto missing = F;
    missing.V.erase(missing.V.begin());
    auto r1 = hc3::validate(missing);
    REQUIRE_FALSE(r1.ok());
    CHECK(r1.violations.front().kind == "totality");

    auto unnormal = F;
    CellId a = S->at("a");
    unnormal.cell[S->identity(a)] = S->at("f");
    CHECK_FALSE(hc3::validate(unnormal).ok());

    auto swapped = F;
    swapped.cell[S->at("tau_d")] = S->at("tau_u");
    auto r3 = hc3::validate(swapped);
    REQUIRE_FALSE(r3.ok());
    CHECK(r3.violations.front().kind == "boundary");
}

TEST_CASE("simplicial round trips on the 2-disk case study", "[oplax]") {
    auto D2 = hc3::share(hc3::make_disk(2));
    auto S = hc3::share(hc3::make_invertible_disk3());
    hc3::NerveCache A(*D2), B(*S);
    int oplax = 0;
    for (const auto& M : hc3::enumerate_simplicial_maps(A, B)) {
        if (!hc3::is_simplicial_oplax(M)) {
            CHECK_FALSE(hc3::validate(hc3::extract_oplax_data(M, D2, S)).ok());
            continue;
        }
        ++oplax;
        auto F = hc3::from_simplicial(M, D2, S);
        CHECK(hc3::validate(F).ok());
        CHECK(hc3::to_simplicial(F).images == M.images);
        CHECK(hc3::from_simplicial(hc3::to_simplicial(F), D2, S) == F);
        CHECK(hc3::compose(hc3::identity_oplax(S), F) == F);
        CHECK(hc3::compose(F, hc3::identity_oplax(D2)) == F);
    }
    CHECK(oplax == 6);
}

TEST_CASE("sup round trips and composes", "[oplax]") {
    auto O2 = hc3::share(hc3::truncate_from_adc(hc3::simplex_complex(2)));
    auto s = hc3::sup_functor(O2, 3);
    auto M = hc3::to_simplicial(s.F);
    CHECK(hc3::validate_map(M).empty());
    CHECK(hc3::is_simplicial_oplax(M));
    CHECK(hc3::check_trivial_consequences(M).empty());
    auto back = hc3::from_simplicial(M, s.F.source, s.F.target);
    CHECK(back == s.F);

    auto G = hc3::identity_oplax(O2);
    auto GF = hc3::compose(G, s.F);
    CHECK(GF == s.F);
    CHECK(hc3::validate(GF).ok());
    CHECK(hc3::to_simplicial(GF).images == hc3::compose_maps(hc3::to_simplicial(G), M).images);

    // Every nerve simplex image is a simplex and degenerate inputs stay degenerate.
    hc3::NerveCache N(*s.F.source);
    for (int k = 0; k <= 3; ++k)
        for (const auto& x : N.all[k]) {
            auto y = hc3::nerve_image(s.F, x);
            REQUIRE(hc3::is_simplex(*s.F.target, y));
            if (hc3::is_degenerate(*s.F.source, x)) {
                auto ez = hc3::ez_decompose(*s.F.source, x);
                REQUIRE(y == hc3::reindex(*s.F.target, hc3::nerve_image(s.F, ez.base), ez.surjection));
            }
        }
}

TEST_CASE("compose is associative on oplax composites", "[oplax]") {
    auto D2 = hc3::share(hc3::make_disk(2));
    auto S = hc3::share(hc3::make_invertible_disk3());
    hc3::NerveCache A(*D2), B(*S);
    std::vector<OplaxData> fs, gs;
    for (const auto& M : hc3::enumerate_simplicial_maps(A, B))
        if (hc3::is_simplicial_oplax(M)) fs.push_back(hc3::from_simplicial(M, D2, S));
    for (const auto& M : hc3::enumerate_simplicial_maps(B, B))
        if (hc3::is_simplicial_oplax(M)) gs.push_back(hc3::from_simplicial(M, S, S));
    REQUIRE_FALSE(gs.empty());
    for (const auto& h : gs)
        for (const auto& g : gs)
            for (const auto& f : fs) {
                auto l = hc3::compose(h, hc3::compose(g, f));
                auto r = hc3::compose(hc3::compose(h, g), f);
                REQUIRE(l == r);
                REQUIRE(hc3::validate(l).ok());
            }
}

TEST_CASE("oplax json round trip", "[oplax]") {
    auto O2 = hc3::share(hc3::truncate_from_adc(hc3::simplex_complex(2)));
    auto s = hc3::sup_functor(O2, 2);
    auto j = hc3::to_json(s.F);
    auto G = hc3::oplax_from_json(j);
    CHECK(hc3::to_json(G) == j);
    CHECK(hc3::validate(G).ok());
    auto r = hc3::to_json(hc3::validate(s.F));
    CHECK(r.contains("violations"));
}
