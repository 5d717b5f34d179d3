#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "hc3/adc.hpp"
#include "hc3/nu.hpp"
#include "hc3/errors.hpp"

namespace hc3 {

using CellId = std::int32_t;
constexpr CellId kNoCell = -1;

// Explicit finite strict 3-category: cells per dimension, boundary, identity and
// composition tables. Composition tables are total on composable pairs.
class FiniteThreeCat {
public:
    CellId add_cell(const std::string& name, int dim, CellId src = kNoCell, CellId tgt = kNoCell);
    void set_identity(CellId x, CellId id);
    void set_comp(int j, CellId x, CellId y, CellId out);
    void erase_comp(int j, CellId x, CellId y);

    int size() const { return static_cast<int>(dim_.size()); }
    int dim(CellId x) const { return dim_.at(x); }
    const std::string& name(CellId x) const { return name_.at(x); }
    CellId find(const std::string& name) const;
    CellId at(const std::string& name) const;  // throws if absent
    const std::vector<CellId>& cells(int d) const { return by_dim_.at(d); }

    CellId src(CellId x) const { return src_.at(x); }
    CellId tgt(CellId x) const { return tgt_.at(x); }
    CellId identity(CellId x) const { return id_.at(x); }
    // Iterated j-source / j-target for j <= dim(x).
    CellId source(CellId x, int j) const;
    CellId target(CellId x, int j) const;
    // Iterated identity up to dimension d.
    CellId lift(CellId x, int d) const;
    bool is_identity(CellId x) const;
    // True when x is an iterated identity of a cell of dimension <= j.
    bool is_j_identity(CellId x, int j) const;

    // Table lookup for two cells of equal dimension.
    std::optional<CellId> comp_entry(int j, CellId x, CellId y) const;
    // x o_j y (y first); lower-dimensional arguments are promoted to identities.
    CellId comp(int j, CellId x, CellId y) const;
    std::optional<CellId> try_comp(int j, CellId x, CellId y) const;
    bool composable(int j, CellId x, CellId y) const;
    const std::unordered_map<std::uint64_t, CellId>& comp_table(int j) const { return comp_.at(j); }

    // Cells with the given source and target (same dimension, one above theirs).
    const std::vector<CellId>& hom(CellId s, CellId t) const;
    void rebuild_index();

    static std::uint64_t key(CellId x, CellId y) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) | static_cast<std::uint32_t>(y);
    }
    static CellId key_x(std::uint64_t k) { return static_cast<CellId>(k >> 32); }
    static CellId key_y(std::uint64_t k) { return static_cast<CellId>(k & 0xffffffffu); }

private:
    std::vector<std::string> name_;
    std::vector<int> dim_;
    std::vector<CellId> src_, tgt_, id_;
    std::array<std::vector<CellId>, 4> by_dim_;
    std::array<std::unordered_map<std::uint64_t, CellId>, 3> comp_;
    std::unordered_map<std::string, CellId> index_;
    std::unordered_map<std::uint64_t, std::vector<CellId>> hom_;
};

struct Violation {
    std::string kind;
    std::string detail;
};

struct ValidateOptions {
    // 0 means exhaustive; otherwise at most this many randomly sampled tuples per law.
    std::size_t max_law_checks = 0;
    std::uint64_t seed = 1;
};

// Phased check: structure, table typing and totality, unit laws, then
// associativity, exchange and identity laws. Later phases run only when earlier ones pass.
std::vector<Violation> validate_cat(const FiniteThreeCat& A, const ValidateOptions& opt = {});

// Builds cells and identities, then fills every composition table from rules:
// units, identities of composites, and the explicit entries supplied.
class CatBuilder {
public:
    CellId object(const std::string& name);
    // Adds a non-identity cell together with its iterated identities up to dimension 3.
    CellId cell(const std::string& name, CellId src, CellId tgt);
    void explicit_comp(int j, CellId x, CellId y, CellId out);
    // Called for composable pairs not covered by the rules or explicit entries.
    void fallback(std::function<std::optional<CellId>(const FiniteThreeCat&, int, CellId, CellId)> f);
    FiniteThreeCat build();

    FiniteThreeCat& cat() { return C_; }

private:
    CellId add_with_identities(const std::string& name, int dim, CellId src, CellId tgt);
    FiniteThreeCat C_;
    std::map<std::tuple<int, CellId, CellId>, CellId> explicit_;
    std::function<std::optional<CellId>(const FiniteThreeCat&, int, CellId, CellId)> fallback_;
};

std::string identity_name(const std::string& name);

FiniteThreeCat make_disk(int i);
FiniteThreeCat make_invertible_disk3();

// A finite 1-category; identity arrows are implicit. A composition value v >= 0 is an
// arrow index, v < 0 stands for the identity of object -1 - v.
struct OneCategory {
    struct Arrow {
        std::string name;
        int src = 0, tgt = 0;
    };
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::map<std::pair<int, int>, int> composition;  // (g, f) -> g o f for non-identity g, f

    int compose(int g, int f) const;  // same encoding, identities allowed
    static int identity_code(int object) { return -1 - object; }
};
FiniteThreeCat embed_one_category(const OneCategory& A);
OneCategory poset_one_category(const Poset& P);
FiniteThreeCat poset_category(const Poset& P);

struct Truncation {
    FiniteThreeCat cat;
    // For each enumerated nu-cell of dimension <= 3, the cell (or 3-cell class) it lands on.
    std::map<NuCell, CellId> cell_of;
    std::vector<NuCell> representative;  // indexed by CellId
};
Truncation truncate_from_adc_full(const ADC& K, std::int64_t coeff_cap = 1, Budget* budget = nullptr);
FiniteThreeCat truncate_from_adc(const ADC& K, std::int64_t coeff_cap = 1, Budget* budget = nullptr);

// Strict 3-functor given on all cells.
struct StrictFunctor {
    const FiniteThreeCat* source = nullptr;
    const FiniteThreeCat* target = nullptr;
    std::vector<CellId> map;
};
std::vector<Violation> validate_functor(const StrictFunctor& u);
std::vector<StrictFunctor> enumerate_strict_functors(const FiniteThreeCat& A, const FiniteThreeCat& B,
                                                     const std::map<CellId, CellId>& fixed = {},
                                                     Budget* budget = nullptr);
StrictFunctor identity_functor(const FiniteThreeCat& A);

// Structural isomorphism test given a candidate bijection on cells.
std::vector<Violation> check_isomorphism(const FiniteThreeCat& A, const FiniteThreeCat& B,
                                         const std::vector<CellId>& map);

nlohmann::json to_json(const FiniteThreeCat& A);
FiniteThreeCat cat_from_json(const nlohmann::json& j);

}  // namespace hc3
