#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hc3/cat3.hpp"
#include "hc3/oplax.hpp"

namespace hc3 {

// No non-identity u, v with v o u an identity.
bool is_split_free(const OneCategory& A);
// No cycle of non-identity arrows, so that the nerve has finitely many non-degenerate simplices.
bool is_direct(const OneCategory& A);

// The 3-truncation of the strictification of a finite direct split-free 1-category.
struct Strictification {
    OneCategory base;
    CatPtr cat;
    // 1-cells: the tuple of arrow indices (empty for identities of objects).
    std::map<CellId, std::vector<int>> tuple;
    // Cells of dimension >= 2: the target tuple y and the cell of the truncated oriental on |y| + 1 vertices.
    struct Higher {
        CellId y;
        CellId oriental;
    };
    std::map<CellId, Higher> higher;
    // Truncated orientals used for the hom cells, by number of arrows in the target tuple.
    std::vector<std::shared_ptr<const Truncation>> orientals;

    CellId object(int a) const;
    CellId one_cell(const std::vector<int>& arrows, int source_object) const;

private:
    friend Strictification strictify(const OneCategory& A, Budget* budget);
    std::map<std::pair<int, std::vector<int>>, CellId> one_cell_index_;
};

Strictification strictify(const OneCategory& A, Budget* budget = nullptr);

// The full composite of each 1-cell, in the encoding of OneCategory::compose.
std::map<CellId, int> epsilon(const Strictification& S);

// tau_1 of the strictification against the base category: per hom-set, 2-connected classes of
// 1-cells correspond bijectively to arrows, compatibly with composition. Returns failures.
std::vector<std::string> check_tau1(const Strictification& S);

// The normalised oplax unit from the base category, embedded as a 3-category.
OplaxData eta(const Strictification& S);

// Candidate cell isomorphism from strictify([n]) to the truncated oriental on n + 1 vertices.
std::vector<CellId> oriental_comparison(const Strictification& S, const Truncation& On);

struct UniversalPropertyReport {
    std::size_t strict_functors = 0;
    std::size_t simplicial_maps = 0;
    bool injective = false;
    bool surjective = false;
    bool holds() const { return injective && surjective; }
};
// Precomposition with the nerve of eta compared against all simplicial maps N(A) -> N(B).
UniversalPropertyReport check_universal_property(const Strictification& S, const FiniteThreeCat& B,
                                                 Budget* budget = nullptr);

// Random poset on n elements: each pair i < j related with probability p, then closed.
Poset random_poset(int n, double p, std::mt19937_64& rng);

nlohmann::json to_json(const OneCategory& A);
OneCategory one_category_from_json(const nlohmann::json& j);

}  // namespace hc3
