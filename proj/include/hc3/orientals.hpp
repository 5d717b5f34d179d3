#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hc3/nu.hpp"

namespace hc3 {

struct OrientalHandle {
    Poset poset;
    ADC complex;

    static OrientalHandle simplex(int n);
    static OrientalHandle of(const Poset& E);
};

// Monotone map between finite posets, given on elements.
struct PosetMap {
    Poset source;
    Poset target;
    std::vector<int> image;

    bool is_monotone() const;
    bool is_injective() const;
};

// Cells c of nu(O) with 2 <= dim(c) <= max_dim + 1, 1-source f and 1-target g.
std::vector<NuCell> hom_cells(const OrientalHandle& O, const NuCell& f, const NuCell& g, int max_dim = 3);

// Image of a chain of O_E under the chain map induced by j (degenerate tuples go to zero).
Chain map_chain(const PosetMap& j, const Chain& x);
NuCell induced_functor(const PosetMap& j, const NuCell& x);

// The 1-cell of O whose top entry is the given path of basis edges (vertices increasing).
NuCell path_cell(const OrientalHandle& O, const std::vector<int>& vertices);

bool check_horizontal_iso(int n, const std::vector<int>& cuts, int max_dim = 3);
bool check_suboriental_iso(const PosetMap& j, const NuCell& f, const NuCell& g, int max_dim = 3);

}  // namespace hc3
