#pragma once

#include <cstdint>
#include <vector>

#include "hc3/adc.hpp"
#include "hc3/errors.hpp"

namespace hc3 {

using NuCell = CellMatrix;

bool is_cell(const ADC& K, const NuCell& m);

NuCell cell_source(const NuCell& x);
NuCell cell_target(const NuCell& x);
// Iterated j-source / j-target, j < x.dim; j == x.dim returns x.
NuCell cell_source(const NuCell& x, int j);
NuCell cell_target(const NuCell& x, int j);
NuCell cell_identity(const NuCell& x);
// Iterated identity up to dimension d >= x.dim.
NuCell cell_identity(const NuCell& x, int d);
bool is_identity_cell(const NuCell& x);

// x *_j y with y applied first; throws CompositionError unless t_j(y) = s_j(x).
NuCell cell_compose(const NuCell& x, const NuCell& y, int j);
bool composable(const NuCell& x, const NuCell& y, int j);

// All cells of dimension <= max_dim whose entries have coefficients in [0, coeff_cap],
// identities included, in canonical order (by dimension, then matrix order).
std::vector<NuCell> enumerate_cells(const ADC& K, int max_dim, std::int64_t coeff_cap = 1,
                                    Budget* budget = nullptr);

}  // namespace hc3
