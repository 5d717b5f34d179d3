#include "hc3/cat3.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hc3 {

namespace {

const std::vector<CellId> kEmpty;

}  // namespace

CellId FiniteThreeCat::add_cell(const std::string& name, int dim, CellId src, CellId tgt) {
    if (dim < 0 || dim > 3) throw std::invalid_argument("cell dimension out of range: " + name);
    if (index_.count(name)) throw std::invalid_argument("duplicate cell name " + name);
    if (dim > 0 && (src < 0 || tgt < 0 || src >= size() || tgt >= size()))
        throw std::invalid_argument("cell " + name + " needs a source and a target");
    CellId id = size();
    name_.push_back(name);
    dim_.push_back(dim);
    src_.push_back(dim > 0 ? src : kNoCell);
    tgt_.push_back(dim > 0 ? tgt : kNoCell);
    id_.push_back(kNoCell);
    by_dim_[dim].push_back(id);
    index_.emplace(name, id);
    if (dim > 0) hom_[key(src, tgt)].push_back(id);
    return id;
}

void FiniteThreeCat::set_identity(CellId x, CellId id) { id_.at(x) = id; }

void FiniteThreeCat::set_comp(int j, CellId x, CellId y, CellId out) { comp_.at(j)[key(x, y)] = out; }

void FiniteThreeCat::erase_comp(int j, CellId x, CellId y) { comp_.at(j).erase(key(x, y)); }

CellId FiniteThreeCat::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? kNoCell : it->second;
}

CellId FiniteThreeCat::at(const std::string& name) const {
    CellId c = find(name);
    if (c == kNoCell) throw std::invalid_argument("unknown cell " + name);
    return c;
}

CellId FiniteThreeCat::source(CellId x, int j) const {
    while (dim(x) > j) x = src(x);
    return x;
}

CellId FiniteThreeCat::target(CellId x, int j) const {
    while (dim(x) > j) x = tgt(x);
    return x;
}

CellId FiniteThreeCat::lift(CellId x, int d) const {
    while (dim(x) < d) {
        CellId n = identity(x);
        if (n == kNoCell) throw std::invalid_argument("missing identity of " + name(x));
        x = n;
    }
    return x;
}

bool FiniteThreeCat::is_identity(CellId x) const { return dim(x) > 0 && identity(src(x)) == x; }

bool FiniteThreeCat::is_j_identity(CellId x, int j) const {
    return dim(x) <= j || lift(source(x, j), dim(x)) == x;
}

std::optional<CellId> FiniteThreeCat::comp_entry(int j, CellId x, CellId y) const {
    const auto& t = comp_.at(j);
    auto it = t.find(key(x, y));
    if (it == t.end()) return std::nullopt;
    return it->second;
}

bool FiniteThreeCat::composable(int j, CellId x, CellId y) const {
    if (j < 0 || j > 2 || std::min(dim(x), dim(y)) <= j) return false;
    return target(y, j) == source(x, j);
}

std::optional<CellId> FiniteThreeCat::try_comp(int j, CellId x, CellId y) const {
    if (!composable(j, x, y)) return std::nullopt;
    int d = std::max(dim(x), dim(y));
    return comp_entry(j, lift(x, d), lift(y, d));
}

CellId FiniteThreeCat::comp(int j, CellId x, CellId y) const {
    if (!composable(j, x, y))
        throw CompositionError("cells " + name(x) + " and " + name(y) + " are not " + std::to_string(j) +
                               "-composable");
    int d = std::max(dim(x), dim(y));
    auto r = comp_entry(j, lift(x, d), lift(y, d));
    if (!r) throw CompositionError("missing composite " + name(x) + " o" + std::to_string(j) + " " + name(y));
    return *r;
}

const std::vector<CellId>& FiniteThreeCat::hom(CellId s, CellId t) const {
    auto it = hom_.find(key(s, t));
    return it == hom_.end() ? kEmpty : it->second;
}

void FiniteThreeCat::rebuild_index() {
    hom_.clear();
    index_.clear();
    for (auto& v : by_dim_) v.clear();
    for (CellId x = 0; x < size(); ++x) {
        by_dim_[dim_[x]].push_back(x);
        index_.emplace(name_[x], x);
        if (dim_[x] > 0) hom_[key(src_[x], tgt_[x])].push_back(x);
    }
}

// ---------------------------------------------------------------------------------------------
// Validation

namespace {

struct LawIndex {
    // by_src[j][d][c]: cells of dimension d whose j-source is c; likewise by_tgt.
    std::map<CellId, std::vector<CellId>> by_src[3][4], by_tgt[3][4];

    explicit LawIndex(const FiniteThreeCat& A) {
        for (int d = 1; d <= 3; ++d)
            for (CellId x : A.cells(d))
                for (int j = 0; j < d; ++j) {
                    by_src[j][d][A.source(x, j)].push_back(x);
                    by_tgt[j][d][A.target(x, j)].push_back(x);
                }
    }
    const std::vector<CellId>& src_of(int j, int d, CellId c) const {
        auto it = by_src[j][d].find(c);
        return it == by_src[j][d].end() ? kEmpty : it->second;
    }
    const std::vector<CellId>& tgt_of(int j, int d, CellId c) const {
        auto it = by_tgt[j][d].find(c);
        return it == by_tgt[j][d].end() ? kEmpty : it->second;
    }
};

std::string entry_str(const FiniteThreeCat& A, int j, CellId x, CellId y) {
    return A.name(x) + " o" + std::to_string(j) + " " + A.name(y);
}

class Sampler {
public:
    explicit Sampler(const ValidateOptions& o) : limit_(o.max_law_checks), rng_(o.seed) {}
    template <class V>
    V order(V v) {
        if (limit_) std::shuffle(v.begin(), v.end(), rng_);
        return v;
    }
    bool more() { return limit_ == 0 || count_++ < limit_; }
    void reset() { count_ = 0; }

private:
    std::size_t limit_;
    std::size_t count_ = 0;
    std::mt19937_64 rng_;
};

void check_structure(const FiniteThreeCat& A, std::vector<Violation>& out) {
    for (CellId x = 0; x < A.size(); ++x) {
        int d = A.dim(x);
        auto bad = [&](const std::string& what) { out.push_back({"structure", A.name(x) + ": " + what}); };
        if (d > 0) {
            CellId s = A.src(x), t = A.tgt(x);
            if (s < 0 || t < 0 || s >= A.size() || t >= A.size() || A.dim(s) != d - 1 || A.dim(t) != d - 1) {
                bad("boundary has the wrong dimension");
                continue;
            }
            if (d > 1 && (A.src(s) != A.src(t) || A.tgt(s) != A.tgt(t))) bad("not globular");
        }
        if (d < 3) {
            CellId i = A.identity(x);
            if (i < 0 || i >= A.size()) {
                bad("missing identity");
                continue;
            }
            if (A.dim(i) != d + 1 || A.src(i) != x || A.tgt(i) != x) bad("identity has the wrong boundary");
        }
    }
}

void check_tables(const FiniteThreeCat& A, const LawIndex& I, std::vector<Violation>& out) {
    // Entries in order of dimension, so that an entry whose boundary composite is
    // already flagged (or missing) is not reported a second time.
    std::vector<std::tuple<int, int, std::uint64_t>> entries;
    for (int j = 0; j < 3; ++j)
        for (const auto& [k, v] : A.comp_table(j)) entries.emplace_back(A.dim(FiniteThreeCat::key_x(k)), j, k);
    std::sort(entries.begin(), entries.end());
    std::set<std::pair<int, std::uint64_t>> flagged;
    for (const auto& [dx, j, k] : entries) {
        CellId x = FiniteThreeCat::key_x(k), y = FiniteThreeCat::key_y(k), o = *A.comp_entry(j, x, y);
        auto bad = [&](const std::string& what) {
            flagged.insert({j, k});
            out.push_back({"table", entry_str(A, j, x, y) + " = " + A.name(o) + ": " + what});
        };
        int d = dx;
        if (A.dim(y) != d || d <= j || A.target(y, j) != A.source(x, j)) {
            bad("entry for a non-composable pair");
            continue;
        }
        if (A.dim(o) != d) {
            bad("result has the wrong dimension");
            continue;
        }
        CellId es, et;
        if (d - 1 == j) {
            es = A.src(y);
            et = A.tgt(x);
        } else {
            auto ks = FiniteThreeCat::key(A.src(x), A.src(y)), kt = FiniteThreeCat::key(A.tgt(x), A.tgt(y));
            auto s = A.comp_entry(j, A.src(x), A.src(y));
            auto t = A.comp_entry(j, A.tgt(x), A.tgt(y));
            if (!s || !t || flagged.count({j, ks}) || flagged.count({j, kt})) {
                flagged.insert({j, k});
                continue;
            }
            es = *s;
            et = *t;
        }
        if (A.src(o) != es || A.tgt(o) != et) bad("result has the wrong boundary");
    }
    for (int d = 1; d <= 3; ++d)
        for (int j = 0; j < d; ++j)
            for (CellId y : A.cells(d))
                for (CellId x : I.src_of(j, d, A.target(y, j)))
                    if (!A.comp_entry(j, x, y))
                        out.push_back({"table", "missing composite " + entry_str(A, j, x, y)});
}

void check_units(const FiniteThreeCat& A, std::vector<Violation>& out) {
    std::set<std::tuple<int, CellId, CellId>> seen;
    auto expect = [&](int j, CellId x, CellId y, CellId want, const char* law) {
        if (A.comp_entry(j, x, y) == want || !seen.insert({j, x, y}).second) return;
        out.push_back({"unit", std::string(law) + ": " + entry_str(A, j, x, y) + " should be " + A.name(want)});
    };
    for (int d = 1; d <= 3; ++d)
        for (CellId x : A.cells(d))
            for (int j = 0; j < d; ++j) {
                expect(j, x, A.lift(A.source(x, j), d), x, "right unit");
                expect(j, A.lift(A.target(x, j), d), x, x, "left unit");
            }
    // Identities of composites.
    for (int j = 0; j < 3; ++j) {
        std::vector<std::uint64_t> keys;
        for (const auto& [k, v] : A.comp_table(j)) keys.push_back(k);
        std::sort(keys.begin(), keys.end());
        for (auto k : keys) {
            CellId x = FiniteThreeCat::key_x(k), y = FiniteThreeCat::key_y(k);
            if (A.dim(x) >= 3) continue;
            expect(j, A.identity(x), A.identity(y), A.identity(*A.comp_entry(j, x, y)), "identity of composite");
        }
    }
}

void check_laws(const FiniteThreeCat& A, const LawIndex& I, const ValidateOptions& opt, std::vector<Violation>& out) {
    Sampler S(opt);
    auto c = [&](int j, CellId x, CellId y) { return *A.comp_entry(j, x, y); };
    for (int d = 1; d <= 3; ++d)
        for (int j = 0; j < d; ++j) {
            S.reset();
            for (CellId y : S.order(A.cells(d)))
                for (CellId x : I.src_of(j, d, A.target(y, j)))
                    for (CellId z : I.tgt_of(j, d, A.source(y, j))) {
                        if (!S.more()) goto next_assoc;
                        if (c(j, c(j, x, y), z) != c(j, x, c(j, y, z)))
                            out.push_back({"associativity", "(" + entry_str(A, j, x, y) + ") o" + std::to_string(j) +
                                                                " " + A.name(z)});
                    }
        next_assoc:;
        }
    for (int d = 2; d <= 3; ++d)
        for (int j = 1; j < d; ++j)
            for (int k = 0; k < j; ++k) {
                S.reset();
                for (CellId y : S.order(A.cells(d)))
                    for (CellId x : I.src_of(j, d, A.target(y, j)))
                        for (CellId x2 : I.tgt_of(k, d, A.source(x, k)))
                            for (CellId y2 : I.tgt_of(k, d, A.source(y, k))) {
                                if (A.target(y2, j) != A.source(x2, j)) continue;
                                if (!S.more()) goto next_exchange;
                                CellId lhs = c(k, c(j, x, y), c(j, x2, y2));
                                CellId rhs = c(j, c(k, x, x2), c(k, y, y2));
                                if (lhs != rhs)
                                    out.push_back({"exchange", "j=" + std::to_string(j) + " k=" + std::to_string(k) +
                                                                   " x=" + A.name(x) + " y=" + A.name(y) +
                                                                   " x'=" + A.name(x2) + " y'=" + A.name(y2)});
                            }
            next_exchange:;
            }
}

}  // namespace

std::vector<Violation> validate_cat(const FiniteThreeCat& A, const ValidateOptions& opt) {
    std::vector<Violation> out;
    check_structure(A, out);
    if (!out.empty()) return out;
    LawIndex I(A);
    check_tables(A, I, out);
    if (!out.empty()) return out;
    check_units(A, out);
    if (!out.empty()) return out;
    check_laws(A, I, opt, out);
    return out;
}

// ---------------------------------------------------------------------------------------------
// Builders

std::string identity_name(const std::string& name) { return "1(" + name + ")"; }

CellId CatBuilder::add_with_identities(const std::string& name, int dim, CellId src, CellId tgt) {
    CellId x = C_.add_cell(name, dim, src, tgt);
    CellId cur = x;
    for (int d = dim + 1; d <= 3; ++d) {
        CellId i = C_.add_cell(identity_name(C_.name(cur)), d, cur, cur);
        C_.set_identity(cur, i);
        cur = i;
    }
    return x;
}

CellId CatBuilder::object(const std::string& name) { return add_with_identities(name, 0, kNoCell, kNoCell); }

CellId CatBuilder::cell(const std::string& name, CellId src, CellId tgt) {
    return add_with_identities(name, C_.dim(src) + 1, src, tgt);
}

void CatBuilder::explicit_comp(int j, CellId x, CellId y, CellId out) { explicit_[{j, x, y}] = out; }

void CatBuilder::fallback(std::function<std::optional<CellId>(const FiniteThreeCat&, int, CellId, CellId)> f) {
    fallback_ = std::move(f);
}

FiniteThreeCat CatBuilder::build() {
    FiniteThreeCat& C = C_;
    for (int d = 1; d <= 3; ++d)
        for (int j = 0; j < d; ++j) {
            std::map<CellId, std::vector<CellId>> by_src;
            for (CellId x : C.cells(d)) by_src[C.source(x, j)].push_back(x);
            for (CellId y : C.cells(d))
                for (CellId x : by_src[C.target(y, j)]) {
                    std::optional<CellId> r;
                    if (auto it = explicit_.find({j, x, y}); it != explicit_.end()) r = it->second;
                    else if (C.is_j_identity(y, j)) r = x;
                    else if (C.is_j_identity(x, j)) r = y;
                    else if (C.is_identity(x) && C.is_identity(y) && d - 1 > j) {
                        auto inner = C.comp_entry(j, C.src(x), C.src(y));
                        if (inner) r = C.identity(*inner);
                    }
                    if (!r && fallback_) r = fallback_(C, j, x, y);
                    if (!r) throw std::logic_error("no rule for composite " + entry_str(C, j, x, y));
                    C.set_comp(j, x, y, *r);
                }
        }
    return C;
}

FiniteThreeCat make_disk(int i) {
    if (i < 0 || i > 3) throw std::invalid_argument("make_disk: dimension must be in 0..3");
    CatBuilder b;
    CellId a = b.object("a");
    if (i == 0) return b.build();
    CellId a2 = b.object("a'");
    CellId f = b.cell("f", a, a2);
    if (i == 1) return b.build();
    CellId g = b.cell("g", a, a2);
    CellId alpha = b.cell("alpha", f, g);
    if (i == 2) return b.build();
    CellId beta = b.cell("beta", f, g);
    b.cell("gamma", alpha, beta);
    return b.build();
}

FiniteThreeCat make_invertible_disk3() {
    CatBuilder b;
    CellId a = b.object("a");
    CellId a2 = b.object("a'");
    CellId f = b.cell("f", a, a2);
    CellId g = b.cell("g", a, a2);
    CellId alpha = b.cell("alpha", f, g);
    CellId beta = b.cell("beta", f, g);
    CellId td = b.cell("tau_d", alpha, beta);
    CellId tu = b.cell("tau_u", beta, alpha);
    auto& C = b.cat();
    b.explicit_comp(2, tu, td, C.identity(alpha));
    b.explicit_comp(2, td, tu, C.identity(beta));
    return b.build();
}

int OneCategory::compose(int g, int f) const {
    if (g < 0) return f;
    if (f < 0) return g;
    auto it = composition.find({g, f});
    if (it == composition.end())
        throw std::invalid_argument("no composite for " + arrows.at(g).name + " o " + arrows.at(f).name);
    return it->second;
}

FiniteThreeCat embed_one_category(const OneCategory& A) {
    CatBuilder b;
    std::vector<CellId> obj, arr;
    for (const auto& o : A.objects) obj.push_back(b.object(o));
    for (const auto& a : A.arrows) {
        if (a.src < 0 || a.tgt < 0 || a.src >= static_cast<int>(obj.size()) || a.tgt >= static_cast<int>(obj.size()))
            throw std::invalid_argument("arrow " + a.name + " has an unknown endpoint");
        arr.push_back(b.cell(a.name, obj[a.src], obj[a.tgt]));
    }
    const auto& C = b.cat();
    auto cell_of = [&](int code) { return code >= 0 ? arr.at(code) : C.identity(obj.at(-1 - code)); };
    for (std::size_t g = 0; g < arr.size(); ++g)
        for (std::size_t f = 0; f < arr.size(); ++f)
            if (A.arrows[f].tgt == A.arrows[g].src)
                b.explicit_comp(0, arr[g], arr[f], cell_of(A.compose(static_cast<int>(g), static_cast<int>(f))));
    return b.build();
}

OneCategory poset_one_category(const Poset& P) {
    OneCategory A;
    for (int i = 0; i < P.n; ++i) A.objects.push_back(std::to_string(i));
    std::map<std::pair<int, int>, int> idx;
    for (int i = 0; i < P.n; ++i)
        for (int j = 0; j < P.n; ++j)
            if (P.lt(i, j)) {
                idx[{i, j}] = static_cast<int>(A.arrows.size());
                A.arrows.push_back({tuple_name({i, j}), i, j});
            }
    for (const auto& [f, fi] : idx)
        for (const auto& [g, gi] : idx)
            if (f.second == g.first) A.composition[{gi, fi}] = idx.at({f.first, g.second});
    return A;
}

FiniteThreeCat poset_category(const Poset& P) { return embed_one_category(poset_one_category(P)); }

// ---------------------------------------------------------------------------------------------
// Truncation of nu(K)

namespace {

std::string cell_name(const NuCell& c) { return c.dim == 0 ? c.top().str() : c.str(); }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

Truncation truncate_from_adc_full(const ADC& K, std::int64_t coeff_cap, Budget* budget) {
    auto all = enumerate_cells(K, 4, coeff_cap, budget);
    std::vector<const NuCell*> low[4];
    std::vector<const NuCell*> top;
    for (const auto& c : all) (c.dim <= 3 ? low[c.dim] : top).push_back(&c);

    std::map<NuCell, int> pos3;
    for (std::size_t i = 0; i < low[3].size(); ++i) pos3[*low[3][i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(low[3].size()));
    for (const NuCell* c : top) uf.unite(pos3.at(cell_source(*c)), pos3.at(cell_target(*c)));

    Truncation T;
    FiniteThreeCat& C = T.cat;
    for (int d = 0; d <= 3; ++d)
        for (std::size_t i = 0; i < low[d].size(); ++i) {
            const NuCell& c = *low[d][i];
            if (d == 3 && uf.find(static_cast<int>(i)) != static_cast<int>(i)) continue;
            CellId s = d ? T.cell_of.at(cell_source(c)) : kNoCell;
            CellId t = d ? T.cell_of.at(cell_target(c)) : kNoCell;
            CellId id = C.add_cell(cell_name(c), d, s, t);
            T.cell_of[c] = id;
            T.representative.push_back(c);
        }
    for (std::size_t i = 0; i < low[3].size(); ++i)
        T.cell_of[*low[3][i]] = T.cell_of.at(*low[3][uf.find(static_cast<int>(i))]);
    for (int d = 0; d < 3; ++d)
        for (const NuCell* c : low[d]) C.set_identity(T.cell_of.at(*c), T.cell_of.at(cell_identity(*c)));

    for (int d = 1; d <= 3; ++d)
        for (int j = 0; j < d; ++j) {
            std::map<NuCell, std::vector<const NuCell*>> by_src;
            for (const NuCell* x : low[d]) by_src[cell_source(*x, j)].push_back(x);
            for (const NuCell* y : low[d]) {
                auto it = by_src.find(cell_target(*y, j));
                if (it == by_src.end()) continue;
                for (const NuCell* x : it->second) {
                    if (budget) budget->tick();
                    CellId out = T.cell_of.at(cell_compose(*x, *y, j));
                    CellId cx = T.cell_of.at(*x), cy = T.cell_of.at(*y);
                    auto prev = C.comp_entry(j, cx, cy);
                    if (prev && *prev != out)
                        throw std::runtime_error("truncation: composition not well defined on classes at " +
                                                 entry_str(C, j, cx, cy));
                    C.set_comp(j, cx, cy, out);
                }
            }
        }
    return T;
}

FiniteThreeCat truncate_from_adc(const ADC& K, std::int64_t coeff_cap, Budget* budget) {
    return truncate_from_adc_full(K, coeff_cap, budget).cat;
}

// ---------------------------------------------------------------------------------------------
// Strict functors

std::vector<Violation> validate_functor(const StrictFunctor& u) {
    const auto& A = *u.source;
    const auto& B = *u.target;
    std::vector<Violation> out;
    if (static_cast<int>(u.map.size()) != A.size()) return {{"functor", "map does not cover every cell"}};
    for (CellId x = 0; x < A.size(); ++x) {
        CellId y = u.map[x];
        if (y < 0 || y >= B.size() || B.dim(y) != A.dim(x)) {
            out.push_back({"functor", A.name(x) + " is sent to a cell of the wrong dimension"});
            continue;
        }
        if (A.dim(x) > 0 && (B.src(y) != u.map[A.src(x)] || B.tgt(y) != u.map[A.tgt(x)]))
            out.push_back({"functor", A.name(x) + ": boundary not preserved"});
        if (A.dim(x) < 3 && B.identity(y) != u.map[A.identity(x)])
            out.push_back({"functor", A.name(x) + ": identity not preserved"});
    }
    if (!out.empty()) return out;
    for (int j = 0; j < 3; ++j) {
        std::vector<std::uint64_t> keys;
        for (const auto& [k, v] : A.comp_table(j)) keys.push_back(k);
        std::sort(keys.begin(), keys.end());
        for (auto k : keys) {
            CellId x = FiniteThreeCat::key_x(k), y = FiniteThreeCat::key_y(k);
            if (B.comp_entry(j, u.map[x], u.map[y]) != u.map[*A.comp_entry(j, x, y)])
                out.push_back({"functor", "composite not preserved: " + entry_str(A, j, x, y)});
        }
    }
    return out;
}

StrictFunctor identity_functor(const FiniteThreeCat& A) {
    StrictFunctor u{&A, &A, std::vector<CellId>(A.size())};
    for (CellId x = 0; x < A.size(); ++x) u.map[x] = x;
    return u;
}

std::vector<StrictFunctor> enumerate_strict_functors(const FiniteThreeCat& A, const FiniteThreeCat& B,
                                                     const std::map<CellId, CellId>& fixed, Budget* budget) {
    std::vector<CellId> order;
    for (int d = 0; d <= 3; ++d)
        for (CellId x : A.cells(d)) order.push_back(x);
    std::vector<int> rank(A.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    // Table entries become checkable once their last cell (in order) is assigned.
    struct Entry {
        int j;
        CellId x, y, out;
    };
    std::vector<std::vector<Entry>> due(A.size());
    for (int j = 0; j < 3; ++j)
        for (const auto& [k, o] : A.comp_table(j)) {
            CellId x = FiniteThreeCat::key_x(k), y = FiniteThreeCat::key_y(k);
            CellId last = order[std::max({rank[x], rank[y], rank[o]})];
            due[last].push_back({j, x, y, o});
        }
    for (auto& v : due)
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) {
            return std::tie(a.j, a.x, a.y) < std::tie(b.j, b.x, b.y);
        });

    std::vector<StrictFunctor> out;
    std::vector<CellId> map(A.size(), kNoCell);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (budget) budget->tick();
        if (i == order.size()) {
            out.push_back({&A, &B, map});
            return;
        }
        CellId x = order[i];
        std::vector<CellId> cand;
        if (auto it = fixed.find(x); it != fixed.end()) cand = {it->second};
        else if (A.dim(x) == 0) cand = B.cells(0);
        else if (A.is_identity(x)) cand = {B.identity(map[A.src(x)])};
        else cand = B.hom(map[A.src(x)], map[A.tgt(x)]);
        for (CellId y : cand) {
            if (B.dim(y) != A.dim(x)) continue;
            if (A.dim(x) > 0 && (B.src(y) != map[A.src(x)] || B.tgt(y) != map[A.tgt(x)])) continue;
            if (A.is_identity(x) && y != B.identity(map[A.src(x)])) continue;
            map[x] = y;
            bool ok = true;
            for (const auto& e : due[x])
                if (B.comp_entry(e.j, map[e.x], map[e.y]) != map[e.out]) {
                    ok = false;
                    break;
                }
            if (ok) rec(i + 1);
        }
        map[x] = kNoCell;
    };
    rec(0);
    return out;
}

std::vector<Violation> check_isomorphism(const FiniteThreeCat& A, const FiniteThreeCat& B,
                                         const std::vector<CellId>& map) {
    if (A.size() != B.size()) return {{"iso", "cell counts differ"}};
    if (static_cast<int>(map.size()) != A.size()) return {{"iso", "map does not cover every cell"}};
    std::set<CellId> image(map.begin(), map.end());
    if (static_cast<int>(image.size()) != A.size() || *image.begin() < 0 || *image.rbegin() >= B.size())
        return {{"iso", "map is not a bijection"}};
    StrictFunctor u{&A, &B, map};
    auto v = validate_functor(u);
    for (int j = 0; j < 3; ++j)
        if (A.comp_table(j).size() != B.comp_table(j).size())
            v.push_back({"iso", "composition tables differ in size at j=" + std::to_string(j)});
    return v;
}

// ---------------------------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const FiniteThreeCat& A) {
    nlohmann::json j;
    j["cells"] = nlohmann::json::array();
    for (int d = 0; d <= 3; ++d) {
        nlohmann::json names = nlohmann::json::array();
        for (CellId x : A.cells(d)) names.push_back(A.name(x));
        j["cells"].push_back(names);
    }
    nlohmann::json src = nlohmann::json::object(), tgt = nlohmann::json::object(), id = nlohmann::json::object();
    for (CellId x = 0; x < A.size(); ++x) {
        if (A.dim(x) > 0) {
            src[A.name(x)] = A.name(A.src(x));
            tgt[A.name(x)] = A.name(A.tgt(x));
        }
        if (A.dim(x) < 3 && A.identity(x) != kNoCell) id[A.name(x)] = A.name(A.identity(x));
    }
    j["src"] = src;
    j["tgt"] = tgt;
    j["id"] = id;
    std::vector<std::tuple<int, std::string, std::string, std::string>> entries;
    for (int k = 0; k < 3; ++k)
        for (const auto& [key, o] : A.comp_table(k))
            entries.emplace_back(k, A.name(FiniteThreeCat::key_x(key)), A.name(FiniteThreeCat::key_y(key)), A.name(o));
    std::sort(entries.begin(), entries.end());
    nlohmann::json comp = nlohmann::json::array();
    for (const auto& [k, x, y, o] : entries) comp.push_back({{"j", k}, {"x", x}, {"y", y}, {"out", o}});
    j["comp"] = comp;
    return j;
}

FiniteThreeCat cat_from_json(const nlohmann::json& j) {
    FiniteThreeCat A;
    const auto& cells = j.at("cells");
    if (!cells.is_array() || cells.size() > 4) throw std::invalid_argument("cells must list at most 4 dimensions");
    for (std::size_t d = 0; d < cells.size(); ++d)
        for (const auto& n : cells[d]) {
            std::string name = n.get<std::string>();
            if (d == 0) {
                A.add_cell(name, 0);
            } else {
                CellId s = A.at(j.at("src").at(name).get<std::string>());
                CellId t = A.at(j.at("tgt").at(name).get<std::string>());
                A.add_cell(name, static_cast<int>(d), s, t);
            }
        }
    for (const auto& [name, idn] : j.at("id").items()) A.set_identity(A.at(name), A.at(idn.get<std::string>()));
    for (const auto& e : j.at("comp")) {
        int k = e.at("j").get<int>();
        if (k < 0 || k > 2) throw std::invalid_argument("composition index out of range");
        A.set_comp(k, A.at(e.at("x").get<std::string>()), A.at(e.at("y").get<std::string>()),
                   A.at(e.at("out").get<std::string>()));
    }
    return A;
}

}  // namespace hc3
