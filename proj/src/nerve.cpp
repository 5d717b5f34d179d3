#include "hc3/nerve.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "hc3/chains.hpp"

namespace hc3 {

Mask vertex_mask(std::initializer_list<int> vertices) {
    Mask m = 0;
    for (int v : vertices) m |= 1u << v;
    return m;
}

std::vector<int> mask_vertices(Mask m) {
    std::vector<int> out;
    for (int i = 0; i < 5; ++i)
        if (m & (1u << i)) out.push_back(i);
    return out;
}

CellId triangle_source(const FiniteThreeCat&, const Simplex& x, int a, int, int c) { return x.e(a, c); }

CellId triangle_target(const FiniteThreeCat& A, const Simplex& x, int a, int b, int c) {
    return A.comp(0, x.e(b, c), x.e(a, b));
}

CellId tetra_source(const FiniteThreeCat& A, const Simplex& x, int a, int b, int c, int d) {
    return A.comp(1, A.comp(0, x.e(c, d), x.t(a, b, c)), x.t(a, c, d));
}

CellId tetra_target(const FiniteThreeCat& A, const Simplex& x, int a, int b, int c, int d) {
    return A.comp(1, A.comp(0, x.t(b, c, d), x.e(a, b)), x.t(a, b, d));
}

std::pair<CellId, CellId> pentagon_sides(const FiniteThreeCat& A, const Simplex& x) {
    auto c0 = [&](CellId p, CellId q) { return A.comp(0, p, q); };
    auto c1 = [&](CellId p, CellId q) { return A.comp(1, p, q); };
    auto c2 = [&](CellId p, CellId q) { return A.comp(2, p, q); };
    CellId Y = c1(c0(x.e(3, 4), c0(x.e(2, 3), x.t(0, 1, 2))), x.h(0, 2, 3, 4));
    CellId X = c1(c0(x.t(2, 3, 4), c0(x.e(1, 2), x.e(0, 1))), x.h(0, 1, 2, 4));
    CellId Z = c1(c0(x.e(3, 4), x.h(0, 1, 2, 3)), x.t(0, 3, 4));
    CellId M = c1(c0(x.e(3, 4), c0(x.t(1, 2, 3), x.e(0, 1))), x.h(0, 1, 3, 4));
    CellId T = c1(c0(x.h(1, 2, 3, 4), x.e(0, 1)), x.t(0, 1, 4));
    return {c2(X, Y), c2(T, c2(M, Z))};
}

namespace {

// Label slots of a k-simplex in filling order: by largest vertex, then size.
const std::vector<Mask>& slots(int k) {
    static const auto table = [] {
        std::array<std::vector<Mask>, 5> t;
        for (int k = 0; k <= 4; ++k) {
            for (Mask m = 1; m < (1u << (k + 1)); ++m)
                if (std::popcount(m) <= 4) t[k].push_back(m);
            std::sort(t[k].begin(), t[k].end(), [](Mask a, Mask b) {
                int ha = std::bit_width(a), hb = std::bit_width(b);
                if (ha != hb) return ha < hb;
                if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
                return a < b;
            });
        }
        return t;
    }();
    return table.at(k);
}

// Expected boundary (source, target) of the label in slot m, or nullopt if a composite is undefined.
std::optional<std::pair<CellId, CellId>> slot_boundary(const FiniteThreeCat& A, const Simplex& x, Mask m) {
    auto v = mask_vertices(m);
    try {
        switch (v.size()) {
            case 2:
                return std::pair{x.v(v[0]), x.v(v[1])};
            case 3:
                return std::pair{triangle_source(A, x, v[0], v[1], v[2]), triangle_target(A, x, v[0], v[1], v[2])};
            case 4:
                return std::pair{tetra_source(A, x, v[0], v[1], v[2], v[3]),
                                 tetra_target(A, x, v[0], v[1], v[2], v[3])};
            default:
                return std::nullopt;
        }
    } catch (const CompositionError&) {
        return std::nullopt;
    }
}

bool pentagon_holds(const FiniteThreeCat& A, const Simplex& x) {
    try {
        auto [l, r] = pentagon_sides(A, x);
        return l == r;
    } catch (const CompositionError&) {
        return false;
    }
}

}  // namespace

bool is_simplex(const FiniteThreeCat& A, const Simplex& x) {
    if (x.k < 0 || x.k > kMaxSimplexDim) return false;
    for (Mask m = 1; m < 32; ++m) {
        bool used = m < (1u << (x.k + 1)) && std::popcount(m) <= 4;
        CellId c = x[m];
        if (!used) {
            if (c != kNoCell) return false;
            continue;
        }
        if (c < 0 || c >= A.size() || A.dim(c) != std::popcount(m) - 1) return false;
    }
    for (Mask m : slots(x.k)) {
        if (std::popcount(m) == 1) continue;
        auto b = slot_boundary(A, x, m);
        if (!b || A.src(x[m]) != b->first || A.tgt(x[m]) != b->second) return false;
    }
    return x.k < 4 || pentagon_holds(A, x);
}

std::vector<Simplex> simplices(const FiniteThreeCat& A, int k, Budget* budget) {
    if (k < 0 || k > kMaxSimplexDim) throw std::invalid_argument("simplices: dimension must be in 0..4");
    const auto& order = slots(k);
    std::vector<Simplex> out;
    Simplex x(k);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (budget) budget->tick();
        if (i == order.size()) {
            if (k < 4 || pentagon_holds(A, x)) out.push_back(x);
            return;
        }
        Mask m = order[i];
        if (std::popcount(m) == 1) {
            for (CellId a : A.cells(0)) {
                x[m] = a;
                rec(i + 1);
            }
        } else if (auto b = slot_boundary(A, x, m)) {
            for (CellId c : A.hom(b->first, b->second)) {
                x[m] = c;
                rec(i + 1);
            }
        }
        x[m] = kNoCell;
    };
    rec(0);
    return out;
}

std::vector<Simplex> nondegenerate_simplices(const FiniteThreeCat& A, int k, Budget* budget) {
    auto all = simplices(A, k, budget);
    std::vector<Simplex> out;
    for (auto& x : all)
        if (!is_degenerate(A, x)) out.push_back(std::move(x));
    return out;
}

Simplex reindex(const FiniteThreeCat& A, const Simplex& x, const std::vector<int>& theta) {
    int m = static_cast<int>(theta.size()) - 1;
    if (m < 0 || m > kMaxSimplexDim) throw std::invalid_argument("reindex: target dimension out of range");
    for (int i = 0; i <= m; ++i) {
        if (theta[i] < 0 || theta[i] > x.k) throw std::invalid_argument("reindex: value out of range");
        if (i > 0 && theta[i] < theta[i - 1]) throw std::invalid_argument("reindex: map is not monotone");
    }
    Simplex y(m);
    for (Mask T : slots(m)) {
        Mask S = 0;
        for (int v : mask_vertices(T)) S |= 1u << theta[v];
        y[T] = A.lift(x[S], std::popcount(T) - 1);
    }
    return y;
}

Simplex face(const FiniteThreeCat& A, const Simplex& x, int i) {
    if (x.k < 1 || i < 0 || i > x.k) throw std::invalid_argument("face: index out of range");
    std::vector<int> theta;
    for (int j = 0; j <= x.k; ++j)
        if (j != i) theta.push_back(j);
    return reindex(A, x, theta);
}

Simplex degeneracy(const FiniteThreeCat& A, const Simplex& x, int i) {
    if (x.k >= kMaxSimplexDim || i < 0 || i > x.k) throw std::invalid_argument("degeneracy: index out of range");
    std::vector<int> theta;
    for (int j = 0; j <= x.k + 1; ++j) theta.push_back(j <= i ? j : j - 1);
    return reindex(A, x, theta);
}

bool is_degenerate(const FiniteThreeCat& A, const Simplex& x) {
    for (int i = 0; i < x.k; ++i)
        if (degeneracy(A, face(A, x, i), i) == x) return true;
    return false;
}

EZDecomposition ez_decompose(const FiniteThreeCat& A, const Simplex& x) {
    EZDecomposition r;
    for (int j = 0; j <= x.k; ++j) r.surjection.push_back(j);
    r.base = x;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < r.base.k; ++i) {
            Simplex d = face(A, r.base, i);
            if (degeneracy(A, d, i) == r.base) {
                r.base = d;
                for (int& v : r.surjection)
                    if (v > i) --v;
                changed = true;
                break;
            }
        }
    }
    return r;
}

Simplex constant_simplex(const FiniteThreeCat& A, CellId a, int k) {
    Simplex p(0);
    p[1] = a;
    return reindex(A, p, std::vector<int>(k + 1, 0));
}

Simplex SimplicialMap34::apply(const Simplex& x) const {
    auto ez = ez_decompose(*source, x);
    auto it = images.find(ez.base);
    if (it == images.end()) throw std::invalid_argument("simplicial map has no image for a non-degenerate simplex");
    return reindex(*target, it->second, ez.surjection);
}

namespace {

std::string simplex_str(const FiniteThreeCat& A, const Simplex& x) { return to_json(A, x).dump(); }

}  // namespace

std::vector<MapViolation> validate_map(const SimplicialMap34& F) {
    std::vector<MapViolation> out;
    const auto& A = *F.source;
    const auto& B = *F.target;
    for (const auto& [y, z] : F.images) {
        if (!is_simplex(A, y) || is_degenerate(A, y)) {
            out.push_back({"source", "not a non-degenerate simplex: " + simplex_str(A, y)});
            continue;
        }
        if (z.k != y.k || !is_simplex(B, z)) {
            out.push_back({"image", "image is not a simplex of the right dimension: " + simplex_str(A, y)});
            continue;
        }
        for (int i = 0; y.k > 0 && i <= y.k; ++i) {
            try {
                if (F.apply(face(A, y, i)) != face(B, z, i))
                    out.push_back({"face", "d" + std::to_string(i) + " not preserved at " + simplex_str(A, y)});
            } catch (const std::invalid_argument& e) {
                out.push_back({"face", e.what()});
            }
        }
    }
    for (int k = 0; k <= kMaxSimplexDim; ++k)
        for (const auto& y : nondegenerate_simplices(A, k))
            if (!F.images.count(y)) out.push_back({"coverage", "missing image of " + simplex_str(A, y)});
    return out;
}

SimplicialMap34 nerve_of(const StrictFunctor& u) {
    SimplicialMap34 F{u.source, u.target, {}};
    for (int k = 0; k <= kMaxSimplexDim; ++k)
        for (const auto& y : nondegenerate_simplices(*u.source, k)) {
            Simplex z(k);
            for (Mask m : slots(k)) z[m] = u.map.at(y[m]);
            F.images.emplace(y, z);
        }
    return F;
}

SimplicialMap34 identity_map(const FiniteThreeCat& A) { return nerve_of(identity_functor(A)); }

NerveCache::NerveCache(const FiniteThreeCat& A, Budget* budget) : cat(&A) {
    for (int k = 0; k <= kMaxSimplexDim; ++k) {
        all[k] = simplices(A, k, budget);
        for (const auto& x : all[k])
            if (!is_degenerate(A, x)) nondeg[k].push_back(x);
    }
}

namespace {

using FaceKey = std::vector<Simplex>;

FaceKey faces_of(const FiniteThreeCat& A, const Simplex& x) {
    FaceKey f;
    for (int i = 0; i <= x.k; ++i) f.push_back(face(A, x, i));
    return f;
}

class MapSearch {
public:
    MapSearch(const NerveCache& A, const NerveCache& B, Budget* budget) : A_(A), B_(B), budget_(budget) {
        for (int k = 0; k <= kMaxSimplexDim; ++k)
            for (const auto& y : A.nondeg[k]) order_.push_back(&y);
        for (int k = 1; k <= kMaxSimplexDim; ++k)
            for (const auto& z : B.all[k]) by_faces_[k][faces_of(*B.cat, z)].push_back(&z);
        F_.source = A.cat;
        F_.target = B.cat;
    }

    // Visits maps depth first; the visitor returns false to stop.
    void run(const std::map<Simplex, Simplex>& fixed, std::mt19937_64* rng,
             const std::function<bool(const SimplicialMap34&)>& visit) {
        fixed_ = &fixed;
        rng_ = rng;
        visit_ = &visit;
        stop_ = false;
        rec(0);
    }

private:
    void rec(std::size_t i) {
        if (stop_) return;
        if (budget_) budget_->tick();
        if (i == order_.size()) {
            if (!(*visit_)(F_)) stop_ = true;
            return;
        }
        const Simplex& y = *order_[i];
        std::vector<const Simplex*> cand;
        if (y.k == 0) {
            for (const auto& z : B_.all[0]) cand.push_back(&z);
        } else {
            FaceKey want;
            for (int j = 0; j <= y.k; ++j) want.push_back(F_.apply(face(*A_.cat, y, j)));
            auto it = by_faces_[y.k].find(want);
            if (it != by_faces_[y.k].end()) cand = it->second;
        }
        if (auto it = fixed_->find(y); it != fixed_->end()) {
            std::vector<const Simplex*> keep;
            for (const Simplex* z : cand)
                if (*z == it->second) keep.push_back(z);
            cand = keep;
        }
        if (rng_) std::shuffle(cand.begin(), cand.end(), *rng_);
        for (const Simplex* z : cand) {
            F_.images[y] = *z;
            rec(i + 1);
            if (stop_) break;
        }
        F_.images.erase(y);
    }

    const NerveCache& A_;
    const NerveCache& B_;
    Budget* budget_;
    std::vector<const Simplex*> order_;
    std::array<std::map<FaceKey, std::vector<const Simplex*>>, 5> by_faces_;
    SimplicialMap34 F_;
    const std::map<Simplex, Simplex>* fixed_ = nullptr;
    std::mt19937_64* rng_ = nullptr;
    const std::function<bool(const SimplicialMap34&)>* visit_ = nullptr;
    bool stop_ = false;
};

}  // namespace

std::vector<SimplicialMap34> enumerate_simplicial_maps(const NerveCache& A, const NerveCache& B,
                                                       const std::map<Simplex, Simplex>& fixed, Budget* budget) {
    std::vector<SimplicialMap34> out;
    MapSearch S(A, B, budget);
    S.run(fixed, nullptr, [&](const SimplicialMap34& F) {
        out.push_back(F);
        return true;
    });
    return out;
}

std::optional<SimplicialMap34> random_simplicial_map(const NerveCache& A, const NerveCache& B, std::mt19937_64& rng,
                                                     Budget* budget) {
    std::optional<SimplicialMap34> out;
    MapSearch S(A, B, budget);
    std::map<Simplex, Simplex> none;
    S.run(none, &rng, [&](const SimplicialMap34& F) {
        out = F;
        return false;
    });
    return out;
}

nlohmann::json to_json(const FiniteThreeCat& A, const Simplex& x) {
    nlohmann::json labels = nlohmann::json::object();
    for (Mask m : slots(x.k))
        if (x[m] != kNoCell) labels[tuple_name(mask_vertices(m))] = A.name(x[m]);
    return {{"dim", x.k}, {"labels", labels}};
}

Simplex simplex_from_json(const FiniteThreeCat& A, const nlohmann::json& j) {
    int k = j.at("dim").get<int>();
    if (k < 0 || k > kMaxSimplexDim) throw std::invalid_argument("simplex dimension out of range");
    Simplex x(k);
    for (const auto& [key, val] : j.at("labels").items()) {
        Mask m = 0;
        for (int v : name_tuple(key)) {
            if (v < 0 || v > k) throw std::invalid_argument("simplex label on an unknown vertex: " + key);
            m |= 1u << v;
        }
        x[m] = A.at(val.get<std::string>());
    }
    if (!is_simplex(A, x)) throw std::invalid_argument("labels do not form a simplex");
    return x;
}

nlohmann::json to_json(const SimplicialMap34& F) {
    std::vector<std::pair<std::string, nlohmann::json>> rows;
    for (const auto& [y, z] : F.images) {
        nlohmann::json s = to_json(*F.source, y);
        rows.emplace_back(s.dump(), nlohmann::json{{"source", s}, {"image", to_json(*F.target, z)}});
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [k, e] : rows) arr.push_back(std::move(e));
    return {{"simplices", arr}};
}

SimplicialMap34 map_from_json(const FiniteThreeCat& A, const FiniteThreeCat& B, const nlohmann::json& j) {
    SimplicialMap34 F{&A, &B, {}};
    for (const auto& e : j.at("simplices")) {
        Simplex y = simplex_from_json(A, e.at("source"));
        Simplex z = simplex_from_json(B, e.at("image"));
        if (!F.images.emplace(y, z).second) throw std::invalid_argument("duplicate simplex in map");
    }
    return F;
}

}  // namespace hc3
