#include "hc3/strictify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hc3/orientals.hpp"
#include "hc3/simplicial.hpp"

namespace hc3 {

bool is_split_free(const OneCategory& A) {
    for (const auto& [gf, v] : A.composition)
        if (v < 0) return false;
    return true;
}

bool is_direct(const OneCategory& A) {
    int n = static_cast<int>(A.objects.size());
    std::vector<std::vector<int>> out(n);
    for (const auto& a : A.arrows) {
        if (a.src == a.tgt) return false;
        out[a.src].push_back(a.tgt);
    }
    std::vector<int> state(n, 0);
    std::function<bool(int)> acyclic = [&](int v) {
        state[v] = 1;
        for (int w : out[v]) {
            if (state[w] == 1) return false;
            if (state[w] == 0 && !acyclic(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (int v = 0; v < n; ++v)
        if (state[v] == 0 && !acyclic(v)) return false;
    return true;
}

CellId Strictification::object(int a) const { return cat->at(base.objects.at(a)); }

CellId Strictification::one_cell(const std::vector<int>& arrows, int source_object) const {
    return one_cell_index_.at({source_object, arrows});
}

namespace {

std::vector<int> iota_vec(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

NuCell vertex_cell(const OrientalHandle& O, int i) { return cell_source(path_cell(O, {i}), 0); }

// Truncated oriental on n + 1 vertices with its path 1-cells.
struct OrientalData {
    OrientalHandle O;
    std::shared_ptr<const Truncation> T;
    CellId full = kNoCell;
    std::map<CellId, std::vector<int>> path_of;  // 1-cell from 0 to n -> vertices

    OrientalData(int n, Budget* budget) : O(OrientalHandle::simplex(n)) {
        T = std::make_shared<const Truncation>(truncate_from_adc_full(O.complex, 1, budget));
        for (unsigned m = 0; m < (1u << (n + 1)); ++m) {
            if (!(m & 1u) || !(m & (1u << n))) continue;
            auto verts = mask_vertices(m);
            path_of[T->cell_of.at(path_cell(O, verts))] = verts;
        }
        full = T->cell_of.at(path_cell(O, iota_vec(n + 1)));
    }
    const FiniteThreeCat& cat() const { return T->cat; }
};

std::string tuple_label(const OneCategory& A, const std::vector<int>& t, int source) {
    if (t.empty()) return "()@" + A.objects.at(source);
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + A.arrows.at(t[i]).name;
    return s + ")";
}

int composite_code(const OneCategory& A, const std::vector<int>& t, std::size_t from, std::size_t to, int obj) {
    int code = OneCategory::identity_code(obj);
    for (std::size_t k = from; k < to; ++k) code = A.compose(t[k], code);
    return code;
}

}  // namespace

Strictification strictify(const OneCategory& A, Budget* budget) {
    if (!is_split_free(A)) throw std::invalid_argument("strictify: category is not split-free");
    if (!is_direct(A)) throw std::invalid_argument("strictify: category has a cycle of non-identity arrows");

    Strictification S;
    S.base = A;
    FiniteThreeCat C;

    // Tuples of composable non-identity arrows, by length.
    struct Tuple {
        int src, tgt;
        std::vector<int> arrows;
    };
    std::vector<Tuple> tuples;
    std::function<void(int, int, std::vector<int>&)> extend = [&](int s, int at, std::vector<int>& t) {
        tuples.push_back({s, at, t});
        for (int k = 0; k < static_cast<int>(A.arrows.size()); ++k)
            if (A.arrows[k].src == at) {
                t.push_back(k);
                extend(s, A.arrows[k].tgt, t);
                t.pop_back();
            }
    };
    for (int a = 0; a < static_cast<int>(A.objects.size()); ++a) {
        std::vector<int> t;
        extend(a, a, t);
    }
    std::stable_sort(tuples.begin(), tuples.end(),
                     [](const Tuple& x, const Tuple& y) { return x.arrows.size() < y.arrows.size(); });
    std::size_t longest = 0;
    for (const auto& t : tuples) longest = std::max(longest, t.arrows.size());

    std::vector<OrientalData> O;
    for (std::size_t n = 0; n <= longest; ++n) O.emplace_back(static_cast<int>(n), budget);
    for (const auto& o : O) S.orientals.push_back(o.T);

    std::vector<CellId> obj;
    for (const auto& name : A.objects) obj.push_back(C.add_cell(name, 0));
    for (const auto& t : tuples) {
        CellId y = C.add_cell(tuple_label(A, t.arrows, t.src), 1, obj[t.src], obj[t.tgt]);
        S.tuple[y] = t.arrows;
        S.one_cell_index_[{t.src, t.arrows}] = y;
    }
    std::map<std::pair<CellId, CellId>, CellId> hi;  // (target tuple, oriental cell)
    for (int d = 2; d <= 3; ++d)
        for (const auto& t : tuples) {
            CellId y = S.one_cell_index_.at({t.src, t.arrows});
            const auto& od = O[t.arrows.size()];
            const auto& T = od.cat();
            for (CellId c : T.cells(d)) {
                if (T.target(c, 1) != od.full) continue;
                CellId s, tg;
                if (d == 2) {
                    const auto& verts = od.path_of.at(T.src(c));
                    std::vector<int> x;
                    for (std::size_t i = 1; i < verts.size(); ++i)
                        x.push_back(composite_code(A, t.arrows, verts[i - 1], verts[i], t.src));
                    s = S.one_cell_index_.at({t.src, x});
                    tg = y;
                } else {
                    s = hi.at({y, T.src(c)});
                    tg = hi.at({y, T.tgt(c)});
                }
                CellId z = C.add_cell(C.name(y) + "|" + T.name(c), d, s, tg);
                hi[{y, c}] = z;
                S.higher[z] = {y, c};
            }
        }
    for (int a = 0; a < static_cast<int>(obj.size()); ++a) C.set_identity(obj[a], S.one_cell_index_.at({a, {}}));
    for (const auto& [y, t] : S.tuple) C.set_identity(y, hi.at({y, O[t.size()].cat().identity(O[t.size()].full)}));
    for (const auto& [z, h] : S.higher)
        if (C.dim(z) == 2) C.set_identity(z, hi.at({h.y, O[S.tuple.at(h.y).size()].cat().identity(h.oriental)}));

    auto source_object = [&](CellId y) {
        for (int a = 0; a < static_cast<int>(obj.size()); ++a)
            if (obj[a] == C.src(y)) return a;
        throw std::logic_error("strictify: unknown object");
    };
    // Pushes an oriental cell along a monotone injection of vertices.
    auto push = [&](std::size_t n, CellId c, std::size_t q, const std::vector<int>& image) {
        PosetMap j{Poset::chain(static_cast<int>(n) + 1), Poset::chain(static_cast<int>(q) + 1), image};
        return O[q].T->cell_of.at(induced_functor(j, O[n].T->representative.at(c)));
    };
    auto compose = [&](int j, CellId x, CellId y) -> CellId {
        if (C.dim(x) == 1) {
            auto t = S.tuple.at(y);
            const auto& tx = S.tuple.at(x);
            t.insert(t.end(), tx.begin(), tx.end());
            return S.one_cell_index_.at({source_object(y), t});
        }
        const auto& hx = S.higher.at(x);
        const auto& hy = S.higher.at(y);
        std::size_t nx = S.tuple.at(hx.y).size(), ny = S.tuple.at(hy.y).size();
        if (j == 0) {
            auto t = S.tuple.at(hy.y);
            const auto& tx = S.tuple.at(hx.y);
            t.insert(t.end(), tx.begin(), tx.end());
            std::size_t q = nx + ny;
            std::vector<int> shift_x(nx + 1);
            std::iota(shift_x.begin(), shift_x.end(), static_cast<int>(ny));
            CellId cx = push(nx, hx.oriental, q, shift_x);
            CellId cy = push(ny, hy.oriental, q, iota_vec(static_cast<int>(ny) + 1));
            CellId ty = S.one_cell_index_.at({source_object(hy.y), t});
            return hi.at({ty, O[q].cat().comp(0, cx, cy)});
        }
        if (j == 1) {
            const auto& T = O[nx].cat();
            const auto& psi = O[nx].path_of.at(T.source(hx.oriental, 1));
            CellId cy = push(ny, hy.oriental, nx, psi);
            return hi.at({hx.y, T.comp(1, hx.oriental, cy)});
        }
        return hi.at({hx.y, O[nx].cat().comp(2, hx.oriental, hy.oriental)});
    };
    for (int d = 1; d <= 3; ++d)
        for (int j = 0; j < d; ++j) {
            std::map<CellId, std::vector<CellId>> by_src;
            for (CellId x : C.cells(d)) by_src[C.source(x, j)].push_back(x);
            for (CellId y : C.cells(d)) {
                auto it = by_src.find(C.target(y, j));
                if (it == by_src.end()) continue;
                for (CellId x : it->second) {
                    if (budget) budget->tick();
                    C.set_comp(j, x, y, compose(j, x, y));
                }
            }
        }
    C.rebuild_index();
    S.cat = share(std::move(C));
    return S;
}

std::map<CellId, int> epsilon(const Strictification& S) {
    std::map<CellId, int> out;
    const auto& C = *S.cat;
    for (const auto& [y, t] : S.tuple) {
        int src = -1;
        for (int a = 0; a < static_cast<int>(S.base.objects.size()); ++a)
            if (S.object(a) == C.src(y)) src = a;
        out[y] = composite_code(S.base, t, 0, t.size(), src);
    }
    return out;
}

std::vector<std::string> check_tau1(const Strictification& S) {
    const auto& C = *S.cat;
    const auto& A = S.base;
    auto eps = epsilon(S);
    std::vector<std::string> bad;
    std::map<CellId, CellId> parent;
    for (CellId y : C.cells(1)) parent[y] = y;
    std::function<CellId(CellId)> find = [&](CellId x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (CellId a : C.cells(2)) parent[find(C.src(a))] = find(C.tgt(a));

    auto code_name = [&](int code) {
        return code < 0 ? "1(" + A.objects.at(-1 - code) + ")" : A.arrows.at(code).name;
    };
    std::map<CellId, int> class_code;
    for (CellId y : C.cells(1)) {
        auto [it, fresh] = class_code.emplace(find(y), eps.at(y));
        if (!fresh && it->second != eps.at(y)) bad.push_back("class of " + C.name(y) + " is not constant under epsilon");
    }
    // Per hom-set bijection between classes and arrows.
    for (int a = 0; a < static_cast<int>(A.objects.size()); ++a)
        for (int b = 0; b < static_cast<int>(A.objects.size()); ++b) {
            std::multiset<int> seen;
            for (const auto& [root, code] : class_code)
                if (C.src(root) == S.object(a) && C.tgt(root) == S.object(b)) seen.insert(code);
            std::multiset<int> expected;
            if (a == b) expected.insert(OneCategory::identity_code(a));
            for (int k = 0; k < static_cast<int>(A.arrows.size()); ++k)
                if (A.arrows[k].src == a && A.arrows[k].tgt == b) expected.insert(k);
            if (seen != expected) bad.push_back("hom " + A.objects[a] + " -> " + A.objects[b] + " is not bijective");
        }
    for (const auto& [key, out] : C.comp_table(0)) {
        CellId x = FiniteThreeCat::key_x(key), y = FiniteThreeCat::key_y(key);
        if (C.dim(x) != 1) continue;
        if (eps.at(out) != A.compose(eps.at(x), eps.at(y)))
            bad.push_back("epsilon does not preserve " + C.name(x) + " o " + C.name(y) + " as " +
                          code_name(eps.at(out)));
    }
    std::sort(bad.begin(), bad.end());
    return bad;
}

OplaxData eta(const Strictification& S) {
    auto src = share(embed_one_category(S.base));
    const auto& A = *src;
    const auto& B = *S.cat;
    OplaxData F{src, S.cat, {}, {}, {}, {}, {}};
    F.cell.assign(A.size(), kNoCell);
    for (int a = 0; a < static_cast<int>(S.base.objects.size()); ++a) {
        CellId x = A.at(S.base.objects[a]);
        F.cell[x] = S.object(a);
        F.cell[A.identity(x)] = B.identity(S.object(a));
    }
    for (int k = 0; k < static_cast<int>(S.base.arrows.size()); ++k)
        F.cell[A.at(S.base.arrows[k].name)] = S.one_cell({k}, S.base.arrows[k].src);
    for (int d = 2; d <= 3; ++d)
        for (CellId x : A.cells(d)) F.cell[x] = B.identity(F.cell[A.src(x)]);

    auto unique_in = [&](CellId s, CellId t) {
        const auto& h = B.hom(s, t);
        if (h.size() != 1) throw std::logic_error("eta: expected a unique cell between " + B.name(s) + " and " + B.name(t));
        return h.front();
    };
    auto V = [&](CellId g, CellId f) {
        if (A.is_identity(g)) return B.identity(F(f));
        if (A.is_identity(f)) return B.identity(F(g));
        return unique_in(F(A.comp(0, g, f)), B.comp(0, F(g), F(f)));
    };
    auto W = [&](CellId h, CellId g, CellId f) {
        if (A.is_identity(h)) return B.identity(V(g, f));
        if (A.is_identity(g)) return B.identity(V(h, f));
        if (A.is_identity(f)) return B.identity(V(h, g));
        CellId s = B.comp(1, B.comp(0, F(h), V(g, f)), V(h, A.comp(0, g, f)));
        CellId t = B.comp(1, B.comp(0, V(h, g), F(f)), V(A.comp(0, h, g), f));
        return unique_in(s, t);
    };
    fill_structure(
        F, V, W, [&](CellId g, CellId a) { return B.identity(V(g, A.src(a))); },
        [&](CellId b, CellId f) { return B.identity(V(A.src(b), f)); });
    return F;
}

std::vector<CellId> oriental_comparison(const Strictification& S, const Truncation& On) {
    const auto& C = *S.cat;
    const auto& A = S.base;
    int n = static_cast<int>(A.objects.size()) - 1;
    auto O = OrientalHandle::simplex(n);
    std::vector<CellId> map(C.size(), kNoCell);
    for (int a = 0; a <= n; ++a) map[S.object(a)] = On.cell_of.at(vertex_cell(O, std::stoi(A.objects[a])));
    auto vertices = [&](CellId y) {
        std::vector<int> v;
        for (int a = 0; a <= n; ++a)
            if (S.object(a) == C.src(y)) v.push_back(std::stoi(A.objects[a]));
        for (int k : S.tuple.at(y)) v.push_back(std::stoi(A.objects.at(A.arrows[k].tgt)));
        return v;
    };
    for (const auto& [y, t] : S.tuple) map[y] = On.cell_of.at(path_cell(O, vertices(y)));
    for (const auto& [z, h] : S.higher) {
        auto v = vertices(h.y);
        int m = static_cast<int>(v.size()) - 1;
        PosetMap j{Poset::chain(m + 1), Poset::chain(n + 1), v};
        map[z] = On.cell_of.at(induced_functor(j, S.orientals.at(m)->representative.at(h.oriental)));
    }
    return map;
}

UniversalPropertyReport check_universal_property(const Strictification& S, const FiniteThreeCat& B, Budget* budget) {
    UniversalPropertyReport r;
    OplaxData E = eta(S);
    SimplicialMap34 M = to_simplicial(E, budget);
    NerveCache NA(*E.source, budget), NB(B, budget);
    auto key = [&](const SimplicialMap34& F) {
        std::vector<Simplex> k;
        for (const auto& level : NA.nondeg)
            for (const auto& x : level) k.push_back(F.apply(x));
        return k;
    };
    auto functors = enumerate_strict_functors(*S.cat, B, {}, budget);
    r.strict_functors = functors.size();
    std::set<std::vector<Simplex>> image;
    for (const auto& u : functors) image.insert(key(compose_maps(nerve_of(u), M)));
    auto maps = enumerate_simplicial_maps(NA, NB, {}, budget);
    r.simplicial_maps = maps.size();
    r.injective = image.size() == functors.size();
    std::set<std::vector<Simplex>> all;
    for (const auto& F : maps) all.insert(key(F));
    r.surjective = all == image;
    return r;
}

Poset random_poset(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> lt;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) lt.emplace_back(i, j);
    return Poset::from_relations(n, lt);
}

nlohmann::json to_json(const OneCategory& A) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& a : A.arrows)
        arrows.push_back({{"name", a.name}, {"source", A.objects.at(a.src)}, {"target", A.objects.at(a.tgt)}});
    auto name = [&](int code) { return code < 0 ? identity_name(A.objects.at(-1 - code)) : A.arrows.at(code).name; };
    nlohmann::json comp = nlohmann::json::array();
    for (const auto& [gf, v] : A.composition)
        comp.push_back({{"g", name(gf.first)}, {"f", name(gf.second)}, {"value", name(v)}});
    return {{"objects", A.objects}, {"arrows", arrows}, {"composition", comp}};
}

namespace {

OneCategory from_three_category(const FiniteThreeCat& C) {
    OneCategory A;
    std::map<CellId, int> object_index, arrow_index;
    for (CellId a : C.cells(0)) {
        object_index[a] = static_cast<int>(A.objects.size());
        A.objects.push_back(C.name(a));
    }
    for (CellId f : C.cells(1)) {
        if (C.is_identity(f)) continue;
        arrow_index[f] = static_cast<int>(A.arrows.size());
        A.arrows.push_back({C.name(f), object_index.at(C.src(f)), object_index.at(C.tgt(f))});
    }
    for (int d = 2; d <= 3; ++d)
        for (CellId x : C.cells(d))
            if (!C.is_identity(x)) throw std::invalid_argument("category has non-identity cells above dimension 1");
    for (const auto& [g, gi] : arrow_index)
        for (const auto& [f, fi] : arrow_index) {
            if (C.tgt(f) != C.src(g)) continue;
            CellId h = C.comp(0, g, f);
            A.composition[{gi, fi}] = C.is_identity(h) ? OneCategory::identity_code(object_index.at(C.src(h)))
                                                       : arrow_index.at(h);
        }
    return A;
}

}  // namespace

OneCategory one_category_from_json(const nlohmann::json& j) {
    if (j.contains("cells")) return from_three_category(cat_from_json(j));
    OneCategory A;
    std::map<std::string, int> obj, arr;
    for (const auto& o : j.at("objects")) {
        obj[o.get<std::string>()] = static_cast<int>(A.objects.size());
        A.objects.push_back(o.get<std::string>());
    }
    for (const auto& a : j.at("arrows")) {
        std::string n = a.at("name").get<std::string>();
        if (arr.count(n) || obj.count(n)) throw std::invalid_argument("duplicate name " + n);
        arr[n] = static_cast<int>(A.arrows.size());
        A.arrows.push_back({n, obj.at(a.at("source").get<std::string>()), obj.at(a.at("target").get<std::string>())});
    }
    auto code = [&](const std::string& n) {
        if (auto it = arr.find(n); it != arr.end()) return it->second;
        for (const auto& [o, i] : obj)
            if (identity_name(o) == n) return OneCategory::identity_code(i);
        throw std::invalid_argument("unknown arrow " + n);
    };
    if (j.contains("composition"))
        for (const auto& e : j.at("composition")) {
            int g = code(e.at("g").get<std::string>()), f = code(e.at("f").get<std::string>());
            if (g < 0 || f < 0) continue;
            if (A.arrows[f].tgt != A.arrows[g].src) throw std::invalid_argument("composition entry is not composable");
            A.composition[{g, f}] = code(e.at("value").get<std::string>());
        }
    for (int g = 0; g < static_cast<int>(A.arrows.size()); ++g)
        for (int f = 0; f < static_cast<int>(A.arrows.size()); ++f)
            if (A.arrows[f].tgt == A.arrows[g].src && !A.composition.count({g, f}))
                throw std::invalid_argument("missing composite " + A.arrows[g].name + " o " + A.arrows[f].name);
    return A;
}

}  // namespace hc3
