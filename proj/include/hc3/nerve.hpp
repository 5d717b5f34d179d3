#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <json.hpp>

#include "hc3/cat3.hpp"

namespace hc3 {

// Vertex subsets of [k] (k <= 4) as bitmasks.
using Mask = unsigned;
constexpr int kMaxSimplexDim = 4;

Mask vertex_mask(std::initializer_list<int> vertices);
std::vector<int> mask_vertices(Mask m);

// An oriental-shaped diagram O_k -> A, stored with every sub-label: vertices, edges,
// triangles and tetrahedra, indexed by vertex subsets.
struct Simplex {
    int k = 0;
    std::array<CellId, 32> lab;

    Simplex() { lab.fill(kNoCell); }
    explicit Simplex(int dim) : k(dim) { lab.fill(kNoCell); }

    CellId operator[](Mask m) const { return lab[m]; }
    CellId& operator[](Mask m) { return lab[m]; }
    CellId v(int i) const { return lab[1u << i]; }
    CellId e(int i, int j) const { return lab[(1u << i) | (1u << j)]; }
    CellId t(int i, int j, int l) const { return lab[(1u << i) | (1u << j) | (1u << l)]; }
    CellId h(int a, int b, int c, int d) const { return lab[(1u << a) | (1u << b) | (1u << c) | (1u << d)]; }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

// Required boundary of the label on {a<b<c} and {a<b<c<d}.
CellId triangle_source(const FiniteThreeCat& A, const Simplex& x, int a, int b, int c);
CellId triangle_target(const FiniteThreeCat& A, const Simplex& x, int a, int b, int c);
CellId tetra_source(const FiniteThreeCat& A, const Simplex& x, int a, int b, int c, int d);
CellId tetra_target(const FiniteThreeCat& A, const Simplex& x, int a, int b, int c, int d);
// Both sides of the pentagon equation of a 4-simplex.
std::pair<CellId, CellId> pentagon_sides(const FiniteThreeCat& A, const Simplex& x);

bool is_simplex(const FiniteThreeCat& A, const Simplex& x);

std::vector<Simplex> simplices(const FiniteThreeCat& A, int k, Budget* budget = nullptr);
std::vector<Simplex> nondegenerate_simplices(const FiniteThreeCat& A, int k, Budget* budget = nullptr);

// theta^* x for a monotone theta: [m] -> [k] given by its values.
Simplex reindex(const FiniteThreeCat& A, const Simplex& x, const std::vector<int>& theta);
Simplex face(const FiniteThreeCat& A, const Simplex& x, int i);
Simplex degeneracy(const FiniteThreeCat& A, const Simplex& x, int i);
bool is_degenerate(const FiniteThreeCat& A, const Simplex& x);

struct EZDecomposition {
    std::vector<int> surjection;  // [k] -> [p]
    Simplex base;                 // non-degenerate p-simplex
};
EZDecomposition ez_decompose(const FiniteThreeCat& A, const Simplex& x);

// The simplex with every vertex on the object a.
Simplex constant_simplex(const FiniteThreeCat& A, CellId a, int k);

// A morphism of 4-truncated nerves, stored on non-degenerate source simplices.
struct SimplicialMap34 {
    const FiniteThreeCat* source = nullptr;
    const FiniteThreeCat* target = nullptr;
    std::map<Simplex, Simplex> images;

    Simplex apply(const Simplex& x) const;
};

struct MapViolation {
    std::string kind;
    std::string detail;
};
std::vector<MapViolation> validate_map(const SimplicialMap34& F);

SimplicialMap34 nerve_of(const StrictFunctor& u);
SimplicialMap34 identity_map(const FiniteThreeCat& A);

// Per-dimension cache of the non-degenerate simplices of a category.
struct NerveCache {
    const FiniteThreeCat* cat = nullptr;
    std::array<std::vector<Simplex>, 5> all;
    std::array<std::vector<Simplex>, 5> nondeg;

    NerveCache() = default;
    NerveCache(const FiniteThreeCat& A, Budget* budget = nullptr);
};

// All simplicial maps; `fixed` pins images of given non-degenerate source simplices.
std::vector<SimplicialMap34> enumerate_simplicial_maps(const NerveCache& A, const NerveCache& B,
                                                       const std::map<Simplex, Simplex>& fixed = {},
                                                       Budget* budget = nullptr);
// A uniformly shuffled depth-first search returning the first map found.
std::optional<SimplicialMap34> random_simplicial_map(const NerveCache& A, const NerveCache& B, std::mt19937_64& rng,
                                                     Budget* budget = nullptr);

nlohmann::json to_json(const FiniteThreeCat& A, const Simplex& x);
Simplex simplex_from_json(const FiniteThreeCat& A, const nlohmann::json& j);
nlohmann::json to_json(const SimplicialMap34& F);
// Source and target categories are supplied by the caller; the images are checked.
SimplicialMap34 map_from_json(const FiniteThreeCat& A, const FiniteThreeCat& B, const nlohmann::json& j);

}  // namespace hc3
