#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "hc3/cat3.hpp"
#include "hc3/nerve.hpp"

namespace hc3 {

using CatPtr = std::shared_ptr<const FiniteThreeCat>;

// Non-owning handle for a category that outlives its users.
CatPtr borrow(const FiniteThreeCat& A);
CatPtr share(FiniteThreeCat A);

// A normalised oplax 3-functor, with every structure map stored as a total table.
struct OplaxData {
    CatPtr source;
    CatPtr target;
    // DOT, L, LL and LLL together, indexed by source cell.
    std::vector<CellId> cell;
    std::map<std::pair<CellId, CellId>, CellId> V;            // (g, f)
    std::map<std::tuple<CellId, CellId, CellId>, CellId> W;   // (h, g, f)
    std::map<std::pair<CellId, CellId>, CellId> VR;           // (g, alpha)
    std::map<std::pair<CellId, CellId>, CellId> VL;           // (beta, f)

    CellId operator()(CellId x) const { return cell.at(x); }
    CellId v(CellId g, CellId f) const;
    CellId w(CellId h, CellId g, CellId f) const;
    CellId vr(CellId g, CellId a) const;
    CellId vl(CellId b, CellId f) const;

    friend bool operator==(const OplaxData& a, const OplaxData& b) {
        return a.cell == b.cell && a.V == b.V && a.W == b.W && a.VR == b.VR && a.VL == b.VL;
    }
};

struct OplaxViolation {
    std::string kind;    // totality, boundary, normalisation, coherence
    std::string family;  // tree name
    std::vector<std::string> witness;
    std::string detail;
};

struct OplaxReport {
    std::vector<OplaxViolation> violations;
    std::map<std::string, std::size_t> instances;  // checked instances per family
    bool ok() const { return violations.empty(); }
};

const std::vector<std::string>& normalisation_families();
const std::vector<std::string>& coherence_families();

OplaxReport validate(const OplaxData& F);

// Fills V, W, VR and VL over every composable tuple of the source.
void fill_structure(OplaxData& F, const std::function<CellId(CellId, CellId)>& v,
                    const std::function<CellId(CellId, CellId, CellId)>& w,
                    const std::function<CellId(CellId, CellId)>& vr, const std::function<CellId(CellId, CellId)>& vl);

// Strict functor with identity structure cells.
OplaxData from_strict(const StrictFunctor& u, CatPtr source, CatPtr target);
OplaxData identity_oplax(CatPtr A);

// The 1-category of elements of N(C), restricted to non-degenerate simplices of
// dimension <= max_dim, together with its arrows as face maps.
struct ElementsCategory {
    std::vector<Simplex> objects;
    struct Arrow {
        int src, tgt;
        std::vector<int> theta;  // injective monotone [dim src] -> [dim tgt]
    };
    std::vector<Arrow> arrows;
    OneCategory one;
};
ElementsCategory elements_category(const FiniteThreeCat& C, int max_dim, Budget* budget = nullptr);

struct SupFunctor {
    ElementsCategory elements;
    OplaxData F;
};
SupFunctor sup_functor(CatPtr C, int max_dim, Budget* budget = nullptr);

Simplex nerve_image(const OplaxData& F, const Simplex& x);
SimplicialMap34 to_simplicial(const OplaxData& F, Budget* budget = nullptr);
OplaxData compose(const OplaxData& G, const OplaxData& F);
OplaxData from_simplicial(const SimplicialMap34& F, CatPtr source, CatPtr target);
// The same reading of structure cells without the simplicial-oplax precondition.
OplaxData extract_oplax_data(const SimplicialMap34& F, CatPtr source, CatPtr target);

nlohmann::json to_json(const OplaxData& F);
OplaxData oplax_from_json(const nlohmann::json& j);
nlohmann::json to_json(const OplaxReport& r);

}  // namespace hc3
