#include "hc3/orientals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hc3 {

OrientalHandle OrientalHandle::simplex(int n) { return of(Poset::chain(n + 1)); }

OrientalHandle OrientalHandle::of(const Poset& E) { return OrientalHandle{E, oriental_complex(E)}; }

bool PosetMap::is_monotone() const {
    if (static_cast<int>(image.size()) != source.n) return false;
    for (int v : image)
        if (v < 0 || v >= target.n) return false;
    for (int a = 0; a < source.n; ++a)
        for (int b = 0; b < source.n; ++b)
            if (source.lt(a, b) && image[a] != image[b] && !target.lt(image[a], image[b])) return false;
    return true;
}

bool PosetMap::is_injective() const {
    std::set<int> s(image.begin(), image.end());
    return s.size() == image.size();
}

Chain map_chain(const PosetMap& j, const Chain& x) {
    Chain::Coeffs out;
    for (const auto& [name, c] : x.coeffs()) {
        auto t = name_tuple(name);
        for (int& v : t) v = j.image.at(v);
        bool ok = true;
        for (std::size_t i = 1; i < t.size(); ++i)
            if (!j.target.lt(t[i - 1], t[i])) ok = false;
        if (ok) out[tuple_name(t)] += c;
    }
    return Chain(x.degree(), std::move(out));
}

NuCell induced_functor(const PosetMap& j, const NuCell& x) {
    NuCell y;
    y.dim = x.dim;
    for (const auto& c : x.row0) y.row0.push_back(map_chain(j, c));
    for (const auto& c : x.row1) y.row1.push_back(map_chain(j, c));
    return y;
}

NuCell path_cell(const OrientalHandle& O, const std::vector<int>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("path_cell: empty vertex list");
    NuCell v;
    v.dim = 0;
    v.row0 = {Chain::basis(0, tuple_name({vertices.front()}))};
    v.row1 = v.row0;
    if (vertices.size() == 1) return cell_identity(v);
    Chain::Coeffs p;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (!O.poset.lt(vertices[i - 1], vertices[i])) throw std::invalid_argument("path_cell: not an increasing path");
        p[tuple_name({vertices[i - 1], vertices[i]})] += 1;
    }
    NuCell c;
    c.dim = 1;
    c.row0 = {v.row0[0], Chain(1, p)};
    c.row1 = {Chain::basis(0, tuple_name({vertices.back()})), Chain(1, p)};
    return c;
}

namespace {

std::vector<NuCell> filter_hom(const std::vector<NuCell>& cells, const NuCell& f, const NuCell& g) {
    std::vector<NuCell> out;
    for (const auto& c : cells)
        if (c.dim >= 2 && cell_source(c, 1) == f && cell_target(c, 1) == g) out.push_back(c);
    return out;
}

void check_parallel(const NuCell& f, const NuCell& g) {
    if (f.dim != 1 || g.dim != 1 || cell_source(f, 0) != cell_source(g, 0) || cell_target(f, 0) != cell_target(g, 0))
        throw std::invalid_argument("hom_cells: f and g are not parallel 1-cells");
}

}  // namespace

std::vector<NuCell> hom_cells(const OrientalHandle& O, const NuCell& f, const NuCell& g, int max_dim) {
    check_parallel(f, g);
    return filter_hom(enumerate_cells(O.complex, max_dim + 1), f, g);
}

bool check_horizontal_iso(int n, const std::vector<int>& cuts, int max_dim) {
    if (n < 1 || cuts.size() < 2 || cuts.front() != 0 || cuts.back() != n)
        throw std::invalid_argument("check_horizontal_iso: invalid cuts");
    for (std::size_t k = 1; k < cuts.size(); ++k)
        if (cuts[k - 1] >= cuts[k]) throw std::invalid_argument("check_horizontal_iso: cuts not increasing");
    auto O = OrientalHandle::simplex(n);
    auto cells = enumerate_cells(O.complex, max_dim + 1);
    std::vector<int> full(n + 1);
    for (int i = 0; i <= n; ++i) full[i] = i;
    auto whole = filter_hom(cells, path_cell(O, cuts), path_cell(O, full));
    std::vector<std::vector<NuCell>> pieces;
    for (std::size_t k = 1; k < cuts.size(); ++k) {
        std::vector<int> seg;
        for (int i = cuts[k - 1]; i <= cuts[k]; ++i) seg.push_back(i);
        pieces.push_back(filter_hom(cells, path_cell(O, {cuts[k - 1], cuts[k]}), path_cell(O, seg)));
    }
    for (int d = 2; d <= max_dim + 1; ++d) {
        std::vector<std::vector<NuCell>> by_dim;
        for (const auto& p : pieces) {
            by_dim.emplace_back();
            for (const auto& c : p)
                if (c.dim == d) by_dim.back().push_back(c);
        }
        std::set<NuCell> target;
        for (const auto& c : whole)
            if (c.dim == d) target.insert(c);
        std::set<NuCell> image;
        std::size_t count = 0;
        std::vector<std::size_t> idx(by_dim.size(), 0);
        bool empty = std::any_of(by_dim.begin(), by_dim.end(), [](const auto& v) { return v.empty(); });
        while (!empty) {
            NuCell acc = by_dim[0][idx[0]];
            for (std::size_t k = 1; k < by_dim.size(); ++k) acc = cell_compose(by_dim[k][idx[k]], acc, 0);
            if (!target.count(acc)) return false;
            image.insert(acc);
            ++count;
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == by_dim[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
        if (image.size() != count || image.size() != target.size()) return false;
    }
    return true;
}

bool check_suboriental_iso(const PosetMap& j, const NuCell& f, const NuCell& g, int max_dim) {
    if (!j.is_monotone() || !j.is_injective())
        throw std::invalid_argument("check_suboriental_iso: map is not injective and monotone");
    check_parallel(f, g);
    auto OE = OrientalHandle::of(j.source);
    auto OF = OrientalHandle::of(j.target);
    auto src = hom_cells(OE, f, g, max_dim);
    auto tgt = hom_cells(OF, induced_functor(j, f), induced_functor(j, g), max_dim);
    std::set<NuCell> image;
    for (const auto& c : src) image.insert(induced_functor(j, c));
    std::set<NuCell> target(tgt.begin(), tgt.end());
    return image.size() == src.size() && image == target;
}

}  // namespace hc3
