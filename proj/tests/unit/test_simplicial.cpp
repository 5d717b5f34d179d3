#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hc3/simplicial.hpp"

using hc3::CellId;
using hc3::FiniteThreeCat;
using hc3::NerveCache;
using hc3::Simplex;
using hc3::SimplicialMap34;

namespace {

Simplex rename(const FiniteThreeCat& A, const FiniteThreeCat& B, const Simplex& x) {
    Simplex z(x.k);
    for (unsigned m = 1; m < 32; ++m)
        if (x.lab[m] != hc3::kNoCell) z.lab[m] = B.at(A.name(x.lab[m]));
    return z;
}

struct CaseStudy {
    FiniteThreeCat D2 = hc3::make_disk(2);
    FiniteThreeCat S = hc3::make_invertible_disk3();
    NerveCache A{D2};
    NerveCache B{S};

    std::vector<SimplicialMap34> skeleton_maps() const {
        std::map<Simplex, Simplex> fixed;
        for (int k = 0; k <= 1; ++k)
            for (const auto& y : A.nondeg[k]) fixed[y] = rename(D2, S, y);
        return hc3::enumerate_simplicial_maps(A, B, fixed);
    }
};

bool is_nerve_of_functor(const CaseStudy& c, const SimplicialMap34& F) {
    std::map<CellId, CellId> fixed;
    for (int d = 0; d <= 1; ++d)
        for (CellId x : c.D2.cells(d)) fixed[x] = c.S.at(c.D2.name(x));
    for (const auto& u : hc3::enumerate_strict_functors(c.D2, c.S, fixed))
        if (hc3::nerve_of(u).images == F.images) return true;
    return false;
}

}  // namespace

TEST_CASE("encoding templates are simplices", "[simplicial]") {
    CaseStudy c;
    const auto& A = c.D2;
    CellId alpha = A.at("alpha");
    for (const auto& x : {hc3::tmpl::alpha_l(A, alpha), hc3::tmpl::alpha_r(A, alpha), hc3::tmpl::tau_u(A, alpha),
                          hc3::tmpl::tau_d(A, alpha)})
        CHECK(hc3::is_simplex(A, x));
    for (const auto& t : hc3::triangle_data(A)) {
        CHECK(hc3::is_simplex(A, hc3::tmpl::bar(A, t.alpha, t.g, t.h)));
        CHECK(hc3::is_simplex(A, hc3::tmpl::gamma_l(A, t.alpha, t.g, t.h)));
        CHECK(hc3::is_simplex(A, hc3::tmpl::gamma_r(A, t.alpha, t.g, t.h)));
    }
    auto D3 = hc3::make_disk(3);
    CellId G = D3.at("gamma");
    for (int i = 1; i <= 4; ++i) CHECK(hc3::is_simplex(D3, hc3::tmpl::gamma_cell(D3, G, i)));
    auto O3 = hc3::truncate_from_adc(hc3::simplex_complex(3));
    for (const auto& p : hc3::vertical_pairs(O3)) {
        CHECK(hc3::is_simplex(O3, hc3::tmpl::sigma(O3, p.beta, p.alpha)));
        CHECK(hc3::is_simplex(O3, hc3::tmpl::omega_l(O3, p.beta, p.alpha)));
        CHECK(hc3::is_simplex(O3, hc3::tmpl::omega_r(O3, p.beta, p.alpha)));
    }
    for (const auto& e : hc3::eps_data(O3)) {
        CHECK(hc3::is_simplex(O3, hc3::tmpl::eps_l(O3, e.beta, e.alpha, e.h, e.i)));
        CHECK(hc3::is_simplex(O3, hc3::tmpl::eps_r(O3, e.beta, e.alpha, e.h, e.i)));
    }
}

TEST_CASE("the 2-disk case study", "[simplicial]") {
    CaseStudy c;
    auto maps = c.skeleton_maps();
    REQUIRE(maps.size() == 4);
    CellId alpha = c.D2.at("alpha");
    int oplax = 0;
    for (const auto& F : maps) {
        bool strict = is_nerve_of_functor(c, F);
        bool so = hc3::is_simplicial_oplax(F);
        CHECK(so == strict);
        if (so) {
            ++oplax;
            CHECK(hc3::simplicial_oplax_violations(F).empty());
            CHECK(hc3::check_trivial_consequences(F).empty());
            CHECK(c.S.is_identity(hc3::principal(F, hc3::tmpl::tau_d(c.D2, alpha))));
        } else {
            auto v = hc3::simplicial_oplax_violations(F);
            REQUIRE_FALSE(v.empty());
            CHECK(v.front().condition == 1);
            CellId td = hc3::principal(F, hc3::tmpl::tau_d(c.D2, alpha));
            CHECK_FALSE(c.S.is_identity(td));
            CHECK((c.S.name(td) == "tau_d" || c.S.name(td) == "tau_u"));
        }
        CHECK(hc3::check_constraint_relations(F).empty());
    }
    CHECK(oplax == 2);
}

TEST_CASE("nerves of strict functors have trivial constraint cells", "[simplicial]") {
    auto O3 = hc3::truncate_from_adc(hc3::simplex_complex(3));
    auto F = hc3::identity_map(O3);
    CHECK(hc3::is_simplicial_oplax(F));
    CHECK(hc3::check_trivial_consequences(F).empty());
    for (const auto& p : hc3::vertical_pairs(O3)) {
        CHECK(O3.is_identity(hc3::principal(F, hc3::tmpl::sigma(O3, p.beta, p.alpha))));
        CHECK(O3.is_identity(hc3::principal(F, hc3::tmpl::omega_l(O3, p.beta, p.alpha))));
    }
}

TEST_CASE("constraint relations hold for random maps", "[simplicial][property]") {
    std::vector<FiniteThreeCat> cats = {hc3::make_disk(2), hc3::make_invertible_disk3(),
                                        hc3::truncate_from_adc(hc3::simplex_complex(2)),
                                        hc3::truncate_from_adc(hc3::simplex_complex(3))};
    std::vector<NerveCache> nerves;
    for (const auto& C : cats) nerves.emplace_back(C);
    std::mt19937_64 rng(17);
    int done = 0;
    for (std::size_t a = 0; a < cats.size(); ++a)
        for (std::size_t b = 0; b < cats.size(); ++b)
            for (int i = 0; i < 4; ++i) {
                auto F = hc3::random_simplicial_map(nerves[a], nerves[b], rng);
                REQUIRE(F.has_value());
                REQUIRE(hc3::check_constraint_relations(*F).empty());
                if (hc3::is_simplicial_oplax(*F)) REQUIRE(hc3::check_trivial_consequences(*F).empty());
                ++done;
            }
    CHECK(done == 64);
}

TEST_CASE("composition of simplicial maps", "[simplicial]") {
    CaseStudy c;
    auto maps = hc3::enumerate_simplicial_maps(c.A, c.B);
    auto endo = hc3::enumerate_simplicial_maps(c.B, c.B);
    auto idB = hc3::identity_map(c.S);
    for (const auto& F : maps) {
        CHECK(hc3::compose_maps(idB, F).images == F.images);
        CHECK(hc3::compose_maps(F, hc3::identity_map(c.D2)).images == F.images);
    }
    std::size_t closed = 0;
    for (const auto& G : endo)
        for (const auto& F : maps) {
            auto GF = hc3::compose_maps(G, F);
            REQUIRE(hc3::validate_map(GF).empty());
            if (hc3::is_simplicial_oplax(G) && hc3::is_simplicial_oplax(F)) {
                REQUIRE(hc3::is_simplicial_oplax(GF));
                ++closed;
            }
        }
    CHECK(closed > 0);
    CHECK_THROWS(hc3::compose_maps(maps.front(), maps.front()));
}

TEST_CASE("composite of nerves is the nerve of the composite", "[simplicial]") {
    CaseStudy c;
    auto fs = hc3::enumerate_strict_functors(c.D2, c.S);
    auto gs = hc3::enumerate_strict_functors(c.S, c.S);
    REQUIRE_FALSE(fs.empty());
    REQUIRE_FALSE(gs.empty());
    for (const auto& g : gs)
        for (const auto& f : fs) {
            hc3::StrictFunctor gf{&c.D2, &c.S, {}};
            for (CellId x = 0; x < c.D2.size(); ++x) gf.map.push_back(g.map[f.map[x]]);
            CHECK(hc3::compose_maps(hc3::nerve_of(g), hc3::nerve_of(f)).images == hc3::nerve_of(gf).images);
        }
}

TEST_CASE("violation report json", "[simplicial]") {
    CaseStudy c;
    for (const auto& F : c.skeleton_maps()) {
        auto j = hc3::to_json(hc3::simplicial_oplax_violations(F));
        CHECK(j.is_array());
        CHECK(j.empty() == hc3::is_simplicial_oplax(F));
        for (const auto& v : j) {
            CHECK(v.contains("condition"));
            CHECK(v.contains("witness"));
        }
    }
}
