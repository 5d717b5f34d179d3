#include "hc3/simplicial.hpp"

#include <map>
#include <stdexcept>

namespace hc3 {

namespace tmpl {

Simplex triangle(const FiniteThreeCat& A, CellId e01, CellId e12, CellId e02, CellId label) {
    Simplex x(2);
    x[vertex_mask({0})] = A.src(e01);
    x[vertex_mask({1})] = A.tgt(e01);
    x[vertex_mask({2})] = A.tgt(e12);
    x[vertex_mask({0, 1})] = e01;
    x[vertex_mask({1, 2})] = e12;
    x[vertex_mask({0, 2})] = e02;
    x[vertex_mask({0, 1, 2})] = label;
    if (!is_simplex(A, x)) throw std::invalid_argument("template triangle is not a simplex");
    return x;
}

Simplex tetra_with_label(const FiniteThreeCat& A, CellId e01, CellId e12, CellId e23, CellId e02, CellId e03,
                         CellId e13, const Simplex& t012, const Simplex& t023, const Simplex& t013,
                         const Simplex& t123, CellId label) {
    const Mask full = vertex_mask({0, 1, 2});
    Simplex x(3);
    x[vertex_mask({0})] = A.src(e01);
    x[vertex_mask({1})] = A.tgt(e01);
    x[vertex_mask({2})] = A.tgt(e12);
    x[vertex_mask({3})] = A.tgt(e23);
    x[vertex_mask({0, 1})] = e01;
    x[vertex_mask({1, 2})] = e12;
    x[vertex_mask({2, 3})] = e23;
    x[vertex_mask({0, 2})] = e02;
    x[vertex_mask({0, 3})] = e03;
    x[vertex_mask({1, 3})] = e13;
    x[vertex_mask({0, 1, 2})] = t012[full];
    x[vertex_mask({0, 2, 3})] = t023[full];
    x[vertex_mask({0, 1, 3})] = t013[full];
    x[vertex_mask({1, 2, 3})] = t123[full];
    if (label == kNoCell) {
        CellId s = tetra_source(A, x, 0, 1, 2, 3);
        if (s != tetra_target(A, x, 0, 1, 2, 3)) throw std::invalid_argument("template tetrahedron is not thin");
        label = A.identity(s);
    }
    x[vertex_mask({0, 1, 2, 3})] = label;
    if (!is_simplex(A, x)) throw std::invalid_argument("template tetrahedron is not a simplex");
    return x;
}

Simplex tetra(const FiniteThreeCat& A, CellId e01, CellId e12, CellId e23, CellId e02, CellId e03, CellId e13,
              const Simplex& t012, const Simplex& t023, const Simplex& t013, const Simplex& t123) {
    return tetra_with_label(A, e01, e12, e23, e02, e03, e13, t012, t023, t013, t123, kNoCell);
}

namespace {

CellId id_src(const FiniteThreeCat& A, CellId f) { return A.identity(A.src(f)); }
CellId id_tgt(const FiniteThreeCat& A, CellId f) { return A.identity(A.tgt(f)); }
// Degenerate triangles (1, f; f) and (f, 1; f).
Simplex unit_l(const FiniteThreeCat& A, CellId f) { return triangle(A, id_src(A, f), f, f, A.identity(f)); }
Simplex unit_r(const FiniteThreeCat& A, CellId f) { return triangle(A, f, id_tgt(A, f), f, A.identity(f)); }

}  // namespace

Simplex alpha_l(const FiniteThreeCat& A, CellId alpha) {
    CellId f = A.src(alpha), g = A.tgt(alpha);
    return triangle(A, id_src(A, f), g, f, alpha);
}

Simplex alpha_r(const FiniteThreeCat& A, CellId alpha) {
    CellId f = A.src(alpha), g = A.tgt(alpha);
    return triangle(A, g, id_tgt(A, f), f, alpha);
}

Simplex bar(const FiniteThreeCat& A, CellId alpha, CellId g, CellId h) {
    return triangle(A, g, h, A.src(alpha), alpha);
}

Simplex composite(const FiniteThreeCat& A, CellId g, CellId f) {
    CellId gf = A.comp(0, g, f);
    return triangle(A, f, g, gf, A.identity(gf));
}

Simplex tau_u(const FiniteThreeCat& A, CellId alpha) {
    CellId f = A.src(alpha), g = A.tgt(alpha);
    return tetra(A, id_src(A, f), g, id_tgt(A, f), g, f, g, unit_l(A, g), alpha_r(A, alpha), alpha_l(A, alpha),
                 unit_r(A, g));
}

Simplex tau_d(const FiniteThreeCat& A, CellId alpha) {
    CellId f = A.src(alpha), g = A.tgt(alpha);
    return tetra(A, id_src(A, f), g, id_tgt(A, f), f, f, f, alpha_l(A, alpha), unit_r(A, f), unit_l(A, f),
                 alpha_r(A, alpha));
}

Simplex gamma_l(const FiniteThreeCat& A, CellId alpha, CellId g, CellId h) {
    CellId f = A.src(alpha), hg = A.comp(0, h, g);
    return tetra(A, id_src(A, f), g, h, g, f, hg, unit_l(A, g), bar(A, alpha, g, h), alpha_l(A, alpha),
                 composite(A, h, g));
}

Simplex gamma_r(const FiniteThreeCat& A, CellId alpha, CellId g, CellId h) {
    CellId f = A.src(alpha), hg = A.comp(0, h, g);
    return tetra(A, g, h, id_tgt(A, f), hg, f, h, composite(A, h, g), alpha_r(A, alpha), bar(A, alpha, g, h),
                 unit_r(A, h));
}

Simplex sigma(const FiniteThreeCat& A, CellId beta, CellId alpha) {
    CellId f = A.src(alpha), g = A.tgt(alpha), h = A.tgt(beta);
    return tetra(A, id_src(A, f), h, id_tgt(A, f), g, f, g, alpha_l(A, beta), alpha_r(A, alpha), alpha_l(A, alpha),
                 alpha_r(A, beta));
}

Simplex omega_r(const FiniteThreeCat& A, CellId beta, CellId alpha) {
    CellId f = A.src(alpha), g = A.tgt(alpha), h = A.tgt(beta);
    CellId ba = A.comp(1, beta, alpha);
    return tetra(A, id_src(A, f), h, id_tgt(A, f), g, f, f, alpha_l(A, beta), alpha_r(A, alpha), unit_l(A, f),
                 alpha_r(A, ba));
}

Simplex omega_l(const FiniteThreeCat& A, CellId beta, CellId alpha) {
    CellId f = A.src(alpha), g = A.tgt(alpha), h = A.tgt(beta);
    CellId ba = A.comp(1, beta, alpha);
    return tetra(A, id_src(A, f), h, id_tgt(A, f), f, f, g, alpha_l(A, ba), unit_r(A, f), alpha_l(A, alpha),
                 alpha_r(A, beta));
}

Simplex eps_l(const FiniteThreeCat& A, CellId beta, CellId alpha, CellId h, CellId i) {
    CellId f = A.src(alpha), g = A.tgt(alpha);
    CellId ba = A.comp(1, beta, alpha);
    return tetra(A, h, i, id_tgt(A, i), g, f, i, bar(A, beta, h, i), alpha_r(A, alpha), bar(A, ba, h, i),
                 unit_r(A, i));
}

Simplex eps_r(const FiniteThreeCat& A, CellId beta, CellId alpha, CellId h, CellId i) {
    CellId f = A.src(alpha), g = A.tgt(alpha);
    CellId ba = A.comp(1, beta, alpha);
    return tetra(A, id_src(A, h), h, i, h, f, g, unit_l(A, h), bar(A, ba, h, i), alpha_l(A, alpha),
                 bar(A, beta, h, i));
}

Simplex gamma_cell(const FiniteThreeCat& A, CellId Gamma, int which) {
    CellId alpha = A.src(Gamma), beta = A.tgt(Gamma);
    CellId f = A.src(alpha), g = A.tgt(alpha);
    CellId a = id_src(A, f), b = id_tgt(A, f);
    switch (which) {
        case 1:
            return tetra_with_label(A, a, g, b, f, f, f, alpha_l(A, alpha), unit_r(A, f), unit_l(A, f),
                                    alpha_r(A, beta), Gamma);
        case 2:
            return tetra_with_label(A, a, g, b, f, f, g, alpha_l(A, alpha), unit_r(A, f), alpha_l(A, beta),
                                    unit_r(A, g), Gamma);
        case 3:
            return tetra_with_label(A, a, g, b, g, f, f, unit_l(A, g), alpha_r(A, alpha), unit_l(A, f),
                                    alpha_r(A, beta), Gamma);
        case 4:
            return tetra_with_label(A, a, g, b, g, f, g, unit_l(A, g), alpha_r(A, alpha), alpha_l(A, beta),
                                    unit_r(A, g), Gamma);
        default:
            throw std::invalid_argument("gamma_cell: index must be 1..4");
    }
}

Simplex triple(const FiniteThreeCat& A, CellId h, CellId g, CellId f) {
    CellId gf = A.comp(0, g, f), hg = A.comp(0, h, g), hgf = A.comp(0, h, gf);
    return tetra(A, f, g, h, gf, hgf, hg, composite(A, g, f), composite(A, h, gf), composite(A, hg, f),
                 composite(A, h, g));
}

Simplex whisker_right(const FiniteThreeCat& A, CellId g, CellId alpha) {
    CellId f = A.src(alpha), f2 = A.tgt(alpha);
    CellId ga = A.comp(0, g, alpha);
    return tetra(A, id_src(A, f), f2, g, f, A.comp(0, g, f), A.comp(0, g, f2), alpha_l(A, alpha),
                 composite(A, g, f), alpha_l(A, ga), composite(A, g, f2));
}

Simplex whisker_left(const FiniteThreeCat& A, CellId beta, CellId f) {
    CellId g = A.src(beta), g2 = A.tgt(beta);
    CellId bf = A.comp(0, beta, f);
    return tetra(A, f, g2, id_tgt(A, g), A.comp(0, g2, f), A.comp(0, g, f), g, composite(A, g2, f),
                 alpha_r(A, bf), composite(A, g, f), alpha_r(A, beta));
}

}  // namespace tmpl

CellId principal(const SimplicialMap34& F, const Simplex& t) { return F.apply(t).h(0, 1, 2, 3); }

namespace {

std::map<CellId, std::vector<CellId>> out_of(const FiniteThreeCat& A) {
    std::map<CellId, std::vector<CellId>> m;
    for (CellId f : A.cells(1)) m[A.src(f)].push_back(f);
    return m;
}

// Factorisations c = i o h of each 1-cell.
std::map<CellId, std::vector<std::pair<CellId, CellId>>> factorisations(const FiniteThreeCat& A) {
    auto out = out_of(A);
    std::map<CellId, std::vector<std::pair<CellId, CellId>>> m;
    for (CellId h : A.cells(1))
        for (CellId i : out[A.tgt(h)]) m[A.comp(0, i, h)].push_back({h, i});
    return m;
}

CellId tri_label(const SimplicialMap34& F, const Simplex& t) { return F.apply(t)[vertex_mask({0, 1, 2})]; }

}  // namespace

std::vector<TriangleDatum> triangle_data(const FiniteThreeCat& A) {
    auto fact = factorisations(A);
    std::vector<TriangleDatum> out;
    for (CellId alpha : A.cells(2)) {
        auto it = fact.find(A.tgt(alpha));
        if (it == fact.end()) continue;
        for (auto [g, h] : it->second) out.push_back({alpha, g, h});
    }
    return out;
}

std::vector<PairDatum> vertical_pairs(const FiniteThreeCat& A) {
    std::vector<PairDatum> out;
    std::map<CellId, std::vector<CellId>> from;
    for (CellId b : A.cells(2)) from[A.src(b)].push_back(b);
    for (CellId alpha : A.cells(2))
        for (CellId beta : from[A.tgt(alpha)]) out.push_back({beta, alpha});
    return out;
}

std::vector<EpsDatum> eps_data(const FiniteThreeCat& A) {
    auto fact = factorisations(A);
    std::vector<EpsDatum> out;
    for (auto [beta, alpha] : vertical_pairs(A)) {
        auto it = fact.find(A.tgt(beta));
        if (it == fact.end()) continue;
        for (auto [h, i] : it->second) out.push_back({beta, alpha, h, i});
    }
    return out;
}

std::vector<SimplicialViolation> simplicial_oplax_violations(const SimplicialMap34& F) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    std::vector<SimplicialViolation> out;
    for (CellId alpha : A.cells(2))
        if (!B.is_identity(principal(F, tmpl::tau_d(A, alpha)))) out.push_back({1, {A.name(alpha)}});
    for (auto d : triangle_data(A))
        if (!B.is_identity(principal(F, tmpl::gamma_l(A, d.alpha, d.g, d.h))))
            out.push_back({2, {A.name(d.alpha), A.name(d.g), A.name(d.h)}});
    for (auto d : eps_data(A))
        if (!B.is_identity(principal(F, tmpl::eps_l(A, d.beta, d.alpha, d.h, d.i))))
            out.push_back({3, {A.name(d.beta), A.name(d.alpha), A.name(d.h), A.name(d.i)}});
    return out;
}

bool is_simplicial_oplax(const SimplicialMap34& F) { return simplicial_oplax_violations(F).empty(); }

SimplicialMap34 compose_maps(const SimplicialMap34& G, const SimplicialMap34& F) {
    if (F.target != G.source) throw std::invalid_argument("compose_maps: middle categories differ");
    SimplicialMap34 H{F.source, G.target, {}};
    for (const auto& [y, z] : F.images) H.images.emplace(y, G.apply(z));
    return H;
}

namespace {

bool invertible(const FiniteThreeCat& B, CellId w) {
    for (CellId u : B.hom(B.tgt(w), B.src(w)))
        if (B.comp(2, u, w) == B.identity(B.src(w)) && B.comp(2, w, u) == B.identity(B.tgt(w))) return true;
    return false;
}

}  // namespace

std::vector<std::string> check_constraint_relations(const SimplicialMap34& F) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    std::vector<std::string> fail;
    std::map<CellId, CellId> tu, td;
    for (CellId alpha : A.cells(2)) {
        tu[alpha] = principal(F, tmpl::tau_u(A, alpha));
        td[alpha] = principal(F, tmpl::tau_d(A, alpha));
        CellId l = tri_label(F, tmpl::alpha_l(A, alpha)), r = tri_label(F, tmpl::alpha_r(A, alpha));
        if (B.comp(2, td[alpha], tu[alpha]) != B.identity(r)) fail.push_back("tau_d o2 tau_u at " + A.name(alpha));
        if (B.comp(2, tu[alpha], td[alpha]) != B.identity(l)) fail.push_back("tau_u o2 tau_d at " + A.name(alpha));
    }
    for (auto [beta, alpha] : vertical_pairs(A)) {
        if (principal(F, tmpl::sigma(A, beta, alpha)) != B.comp(1, td[beta], tu[alpha]))
            fail.push_back("sigma at " + A.name(beta) + ", " + A.name(alpha));
        if (!invertible(B, principal(F, tmpl::omega_l(A, beta, alpha))))
            fail.push_back("omega_l at " + A.name(beta) + ", " + A.name(alpha));
        if (!invertible(B, principal(F, tmpl::omega_r(A, beta, alpha))))
            fail.push_back("omega_r at " + A.name(beta) + ", " + A.name(alpha));
    }
    for (auto d : triangle_data(A)) {
        CellId gl = principal(F, tmpl::gamma_l(A, d.alpha, d.g, d.h));
        CellId gr = principal(F, tmpl::gamma_r(A, d.alpha, d.g, d.h));
        CellId Fhg = tri_label(F, tmpl::composite(A, d.h, d.g));
        if (B.comp(2, gl, gr) != B.comp(1, Fhg, tu[d.alpha]))
            fail.push_back("gamma relation at " + A.name(d.alpha) + ", " + A.name(d.g) + ", " + A.name(d.h));
    }
    for (auto d : eps_data(A)) {
        CellId el = principal(F, tmpl::eps_l(A, d.beta, d.alpha, d.h, d.i));
        CellId er = principal(F, tmpl::eps_r(A, d.beta, d.alpha, d.h, d.i));
        CellId Fb = tri_label(F, tmpl::bar(A, d.beta, d.h, d.i));
        if (B.comp(2, er, el) != B.comp(1, Fb, tu[d.alpha]))
            fail.push_back("eps relation at " + A.name(d.beta) + ", " + A.name(d.alpha));
    }
    return fail;
}

std::vector<std::string> check_trivial_consequences(const SimplicialMap34& F) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    std::vector<std::string> fail;
    auto want_id = [&](CellId c, const std::string& what) {
        if (!B.is_identity(c)) fail.push_back(what);
    };
    for (CellId alpha : A.cells(2)) want_id(principal(F, tmpl::tau_u(A, alpha)), "tau_u at " + A.name(alpha));
    for (auto d : triangle_data(A))
        want_id(principal(F, tmpl::gamma_r(A, d.alpha, d.g, d.h)), "gamma_r at " + A.name(d.alpha));
    for (auto [beta, alpha] : vertical_pairs(A)) {
        std::string w = A.name(beta) + ", " + A.name(alpha);
        want_id(principal(F, tmpl::sigma(A, beta, alpha)), "sigma at " + w);
        want_id(principal(F, tmpl::omega_l(A, beta, alpha)), "omega_l at " + w);
        want_id(principal(F, tmpl::omega_r(A, beta, alpha)), "omega_r at " + w);
    }
    for (auto d : eps_data(A))
        want_id(principal(F, tmpl::eps_r(A, d.beta, d.alpha, d.h, d.i)), "eps_r at " + A.name(d.beta));
    for (CellId G : A.cells(3)) {
        CellId first = principal(F, tmpl::gamma_cell(A, G, 1));
        for (int i = 2; i <= 4; ++i)
            if (principal(F, tmpl::gamma_cell(A, G, i)) != first)
                fail.push_back("F Gamma_" + std::to_string(i) + " differs at " + A.name(G));
    }
    return fail;
}

nlohmann::json to_json(const std::vector<SimplicialViolation>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back({{"condition", x.condition}, {"witness", x.witness}});
    return arr;
}

}  // namespace hc3
