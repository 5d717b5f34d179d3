#include "hc3/nu.hpp"

#include <algorithm>
#include <map>

namespace hc3 {

bool is_cell(const ADC& K, const NuCell& m) {
    if (m.dim < 0 || static_cast<int>(m.row0.size()) != m.dim + 1 || static_cast<int>(m.row1.size()) != m.dim + 1)
        return false;
    for (int k = 0; k <= m.dim; ++k) {
        if (m.row0[k].degree() != k || m.row1[k].degree() != k) return false;
        for (const auto* c : {&m.row0[k], &m.row1[k]})
            for (const auto& kv : c->coeffs())
                if (!K.has(kv.first) || K.degree_of(kv.first) != k) return false;
    }
    for (int k = 0; k <= m.dim; ++k)
        if (!is_positive(m.row0[k]) || !is_positive(m.row1[k])) return false;
    for (int k = 1; k <= m.dim; ++k) {
        Chain diff = chain_sub(m.row1[k - 1], m.row0[k - 1]);
        if (K.d(m.row0[k]) != diff || K.d(m.row1[k]) != diff) return false;
    }
    if (K.e(m.row0[0]) != 1 || K.e(m.row1[0]) != 1) return false;
    return m.row0[m.dim] == m.row1[m.dim];
}

NuCell cell_source(const NuCell& x, int j) {
    if (j < 0 || j > x.dim) throw std::invalid_argument("cell_source: index out of range");
    if (j == x.dim) return x;
    NuCell s;
    s.dim = j;
    s.row0.assign(x.row0.begin(), x.row0.begin() + j + 1);
    s.row1.assign(x.row1.begin(), x.row1.begin() + j);
    s.row1.push_back(x.row0[j]);
    return s;
}

NuCell cell_target(const NuCell& x, int j) {
    if (j < 0 || j > x.dim) throw std::invalid_argument("cell_target: index out of range");
    if (j == x.dim) return x;
    NuCell t;
    t.dim = j;
    t.row0.assign(x.row0.begin(), x.row0.begin() + j);
    t.row0.push_back(x.row1[j]);
    t.row1.assign(x.row1.begin(), x.row1.begin() + j + 1);
    return t;
}

NuCell cell_source(const NuCell& x) {
    if (x.dim == 0) throw std::invalid_argument("cell_source: 0-cells have no source");
    return cell_source(x, x.dim - 1);
}

NuCell cell_target(const NuCell& x) {
    if (x.dim == 0) throw std::invalid_argument("cell_target: 0-cells have no target");
    return cell_target(x, x.dim - 1);
}

NuCell cell_identity(const NuCell& x) {
    NuCell i = x;
    ++i.dim;
    i.row0.emplace_back(i.dim);
    i.row1.emplace_back(i.dim);
    return i;
}

NuCell cell_identity(const NuCell& x, int d) {
    if (d < x.dim) throw std::invalid_argument("cell_identity: target dimension below cell dimension");
    NuCell i = x;
    while (i.dim < d) i = cell_identity(i);
    return i;
}

bool is_identity_cell(const NuCell& x) { return x.dim > 0 && x.top().is_zero(); }

bool composable(const NuCell& x, const NuCell& y, int j) {
    if (x.dim != y.dim || j < 0 || j >= x.dim) return false;
    return cell_target(y, j) == cell_source(x, j);
}

NuCell cell_compose(const NuCell& x, const NuCell& y, int j) {
    if (x.dim != y.dim) throw CompositionError("cell_compose: dimension mismatch");
    if (j < 0 || j >= x.dim) throw CompositionError("cell_compose: j out of range");
    if (cell_target(y, j) != cell_source(x, j)) throw CompositionError("cell_compose: cells are not j-composable");
    NuCell r;
    r.dim = x.dim;
    for (int k = 0; k <= x.dim; ++k) {
        if (k <= j) {
            r.row0.push_back(y.row0[k]);
            r.row1.push_back(x.row1[k]);
        } else {
            r.row0.push_back(chain_add(x.row0[k], y.row0[k]));
            r.row1.push_back(chain_add(x.row1[k], y.row1[k]));
        }
    }
    return r;
}

namespace {

// All chains of degree k with coefficients in [0, cap].
std::vector<Chain> positive_chains(const ADC& K, int k, std::int64_t cap, Budget* budget) {
    const auto& B = K.basis(k);
    std::vector<Chain> out;
    std::vector<std::int64_t> c(B.size(), 0);
    while (true) {
        if (budget) budget->tick();
        Chain::Coeffs m;
        for (std::size_t i = 0; i < B.size(); ++i)
            if (c[i]) m.emplace(B[i], c[i]);
        out.emplace_back(k, std::move(m));
        std::size_t i = 0;
        while (i < B.size() && c[i] == cap) c[i++] = 0;
        if (i == B.size()) break;
        ++c[i];
    }
    return out;
}

NuCell lower_part(const NuCell& x) {
    NuCell l = x;
    l.row0.pop_back();
    l.row1.pop_back();
    --l.dim;
    return l;
}

}  // namespace

std::vector<NuCell> enumerate_cells(const ADC& K, int max_dim, std::int64_t coeff_cap, Budget* budget) {
    if (coeff_cap < 1) throw std::invalid_argument("enumerate_cells: coeff_cap must be >= 1");
    std::vector<NuCell> all;
    std::vector<NuCell> prev;
    for (const auto& x : positive_chains(K, 0, coeff_cap, budget))
        if (K.e(x) == 1) {
            NuCell c;
            c.dim = 0;
            c.row0 = {x};
            c.row1 = {x};
            prev.push_back(c);
        }
    std::sort(prev.begin(), prev.end());
    all = prev;
    for (int i = 1; i <= max_dim; ++i) {
        std::map<Chain, std::vector<Chain>> by_boundary;
        if (i <= K.top_degree()) {
            for (auto& x : positive_chains(K, i, coeff_cap, budget)) {
                Chain dx = K.d(x);
                by_boundary[dx].push_back(std::move(x));
            }
        } else {
            by_boundary[Chain(i - 1)].push_back(Chain(i));
        }
        // Parallel (i-1)-cells share everything below their top column.
        std::map<NuCell, std::vector<const NuCell*>> groups;
        for (const auto& c : prev) {
            if (i == 1) groups[NuCell{}].push_back(&c);
            else groups[lower_part(c)].push_back(&c);
        }
        std::vector<NuCell> cur;
        for (const auto& [key, members] : groups) {
            for (const NuCell* s : members)
                for (const NuCell* t : members) {
                    if (budget) budget->tick();
                    auto it = by_boundary.find(chain_sub(t->top(), s->top()));
                    if (it == by_boundary.end()) continue;
                    for (const Chain& x : it->second) {
                        NuCell c;
                        c.dim = i;
                        c.row0.assign(s->row0.begin(), s->row0.end() - 1);
                        c.row0.push_back(s->top());
                        c.row0.push_back(x);
                        c.row1.assign(s->row1.begin(), s->row1.end() - 1);
                        c.row1.push_back(t->top());
                        c.row1.push_back(x);
                        cur.push_back(std::move(c));
                    }
                }
        }
        std::sort(cur.begin(), cur.end());
        all.insert(all.end(), cur.begin(), cur.end());
        prev = std::move(cur);
    }
    return all;
}

}  // namespace hc3
