#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hc3/nerve.hpp"

namespace hc3 {

// Labelled simplices encoding cells and simple composites of a category A.
namespace tmpl {

Simplex triangle(const FiniteThreeCat& A, CellId e01, CellId e12, CellId e02, CellId label);
// The tetrahedron label is the identity on the common boundary 2-cell.
Simplex tetra(const FiniteThreeCat& A, CellId e01, CellId e12, CellId e23, CellId e02, CellId e03, CellId e13,
              const Simplex& t012, const Simplex& t023, const Simplex& t013, const Simplex& t123);
Simplex tetra_with_label(const FiniteThreeCat& A, CellId e01, CellId e12, CellId e23, CellId e02, CellId e03,
                         CellId e13, const Simplex& t012, const Simplex& t023, const Simplex& t013,
                         const Simplex& t123, CellId label);

// alpha: f -> g placed on (1_a, g; f) and (g, 1_b; f).
Simplex alpha_l(const FiniteThreeCat& A, CellId alpha);
Simplex alpha_r(const FiniteThreeCat& A, CellId alpha);
// alpha: f -> h o g placed on (g, h; f).
Simplex bar(const FiniteThreeCat& A, CellId alpha, CellId g, CellId h);
// The identity triangle on (f, g; g o f).
Simplex composite(const FiniteThreeCat& A, CellId g, CellId f);

Simplex tau_u(const FiniteThreeCat& A, CellId alpha);
Simplex tau_d(const FiniteThreeCat& A, CellId alpha);
Simplex gamma_l(const FiniteThreeCat& A, CellId alpha, CellId g, CellId h);
Simplex gamma_r(const FiniteThreeCat& A, CellId alpha, CellId g, CellId h);
// alpha: f -> g, beta: g -> h.
Simplex sigma(const FiniteThreeCat& A, CellId beta, CellId alpha);
Simplex omega_l(const FiniteThreeCat& A, CellId beta, CellId alpha);
Simplex omega_r(const FiniteThreeCat& A, CellId beta, CellId alpha);
// alpha: f -> g, beta: g -> i o h.
Simplex eps_l(const FiniteThreeCat& A, CellId beta, CellId alpha, CellId h, CellId i);
Simplex eps_r(const FiniteThreeCat& A, CellId beta, CellId alpha, CellId h, CellId i);
// Gamma: alpha -> beta between 2-cells f -> g; which = 1..4.
Simplex gamma_cell(const FiniteThreeCat& A, CellId Gamma, int which);
// The composable triple with identity triangles.
Simplex triple(const FiniteThreeCat& A, CellId h, CellId g, CellId f);
// alpha: f -> f' whiskered by g, and beta: g -> g' whiskered by f.
Simplex whisker_right(const FiniteThreeCat& A, CellId g, CellId alpha);
Simplex whisker_left(const FiniteThreeCat& A, CellId beta, CellId f);

}  // namespace tmpl

// Principal 3-cell of the image of a 3-simplex.
CellId principal(const SimplicialMap34& F, const Simplex& t);

struct TriangleDatum {
    CellId alpha, g, h;  // alpha: f -> h o g
};
struct PairDatum {
    CellId beta, alpha;  // alpha: f -> g, beta: g -> h
};
struct EpsDatum {
    CellId beta, alpha, h, i;  // alpha: f -> g, beta: g -> i o h
};
std::vector<TriangleDatum> triangle_data(const FiniteThreeCat& A);
std::vector<PairDatum> vertical_pairs(const FiniteThreeCat& A);
std::vector<EpsDatum> eps_data(const FiniteThreeCat& A);

struct SimplicialViolation {
    int condition;  // 1: tau_d, 2: gamma_l, 3: eps_l
    std::vector<std::string> witness;
};
std::vector<SimplicialViolation> simplicial_oplax_violations(const SimplicialMap34& F);
bool is_simplicial_oplax(const SimplicialMap34& F);

SimplicialMap34 compose_maps(const SimplicialMap34& G, const SimplicialMap34& F);

// Relations satisfied by the constraint cells of any simplicial map; returns failures.
std::vector<std::string> check_constraint_relations(const SimplicialMap34& F);
// For simplicial-oplax maps: the remaining constraint cells are identities and the four
// encodings of a 3-cell agree. Returns failures.
std::vector<std::string> check_trivial_consequences(const SimplicialMap34& F);

nlohmann::json to_json(const std::vector<SimplicialViolation>& v);

}  // namespace hc3
