#include "hc3/oplax.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hc3/simplicial.hpp"

namespace hc3 {

CatPtr borrow(const FiniteThreeCat& A) { return CatPtr(std::shared_ptr<void>(), &A); }

CatPtr share(FiniteThreeCat A) { return std::make_shared<const FiniteThreeCat>(std::move(A)); }

CellId OplaxData::v(CellId g, CellId f) const {
    auto it = V.find({g, f});
    if (it == V.end()) throw CompositionError("V undefined at a composable pair");
    return it->second;
}

CellId OplaxData::w(CellId h, CellId g, CellId f) const {
    auto it = W.find({h, g, f});
    if (it == W.end()) throw CompositionError("W undefined at a composable triple");
    return it->second;
}

CellId OplaxData::vr(CellId g, CellId a) const {
    auto it = VR.find({g, a});
    if (it == VR.end()) throw CompositionError("VR undefined at a whiskering pair");
    return it->second;
}

CellId OplaxData::vl(CellId b, CellId f) const {
    auto it = VL.find({b, f});
    if (it == VL.end()) throw CompositionError("VL undefined at a whiskering pair");
    return it->second;
}

const std::vector<std::string>& normalisation_families() {
    static const std::vector<std::string> v{"L", "LL", "V", "LLL", "W", "VR", "VL"};
    return v;
}

const std::vector<std::string>& coherence_families() {
    static const std::vector<std::string> v{"Y",    "VV",   "W_LL_L_L", "W_L_LL_L", "W_L_L_LL", "VR_Y",  "VL_Y",
                                            "VLR",  "YY",   "LLL_Y",    "LLL_LL",   "LL_LLL",   "LLL_L", "L_LLL"};
    return v;
}

namespace {

// Composable tuples of a source category.
struct Shape {
    const FiniteThreeCat& A;
    std::map<CellId, std::vector<CellId>> out1;  // 1-cells by source object
    std::map<CellId, std::vector<CellId>> up2;   // 2-cells by source 1-cell
    std::map<CellId, std::vector<CellId>> up3;   // 3-cells by source 2-cell

    explicit Shape(const FiniteThreeCat& a) : A(a) {
        for (CellId f : A.cells(1)) out1[A.src(f)].push_back(f);
        for (CellId x : A.cells(2)) up2[A.src(x)].push_back(x);
        for (CellId x : A.cells(3)) up3[A.src(x)].push_back(x);
    }
    const std::vector<CellId>& after(CellId f) const { return get(out1, A.tgt(f)); }
    const std::vector<CellId>& from1(CellId f) const { return get(up2, f); }
    const std::vector<CellId>& from2(CellId a) const { return get(up3, a); }

    // (g, f) with f first.
    void pairs(const std::function<void(CellId, CellId)>& k) const {
        for (CellId f : A.cells(1))
            for (CellId g : after(f)) k(g, f);
    }
    void triples(const std::function<void(CellId, CellId, CellId)>& k) const {
        for (CellId f : A.cells(1))
            for (CellId g : after(f))
                for (CellId h : after(g)) k(h, g, f);
    }
    // (g, alpha) with alpha: f -> f' and g after f.
    void right_whiskers(const std::function<void(CellId, CellId)>& k) const {
        for (CellId a : A.cells(2))
            for (CellId g : after(A.src(a))) k(g, a);
    }
    // (beta, f) with beta: g -> g' and f before g.
    void left_whiskers(const std::function<void(CellId, CellId)>& k) const {
        for (CellId f : A.cells(1))
            for (CellId g : after(f))
                for (CellId b : from1(g))
                    if (A.src(b) == g) k(b, f);
    }

private:
    static const std::vector<CellId>& get(const std::map<CellId, std::vector<CellId>>& m, CellId k) {
        static const std::vector<CellId> none;
        auto it = m.find(k);
        return it == m.end() ? none : it->second;
    }
};

// Target composites with whiskering promotion.
struct Ops {
    const FiniteThreeCat& B;
    CellId c0(CellId x, CellId y) const { return B.comp(0, x, y); }
    CellId c1(CellId x, CellId y) const { return B.comp(1, x, y); }
    CellId c2(CellId x, CellId y) const { return B.comp(2, x, y); }
    CellId id(CellId x) const { return B.identity(x); }
};

std::vector<std::string> names(const FiniteThreeCat& A, std::initializer_list<CellId> xs) {
    std::vector<std::string> out;
    for (CellId x : xs) out.push_back(A.name(x));
    return out;
}

class Validator {
public:
    explicit Validator(const OplaxData& F) : F_(F), A_(*F.source), B_(*F.target), S_(A_), o_{B_} {}

    OplaxReport run() {
        if (!check_data()) return std::move(r_);
        normalisation();
        coherences();
        return std::move(r_);
    }

private:
    using Cells = std::initializer_list<CellId>;

    void add(const std::string& kind, const std::string& family, Cells w, const std::string& detail) {
        r_.violations.push_back({kind, family, names(A_, w), detail});
    }

    // Evaluates an equation; ill-typed sides count as violations.
    void equation(const std::string& kind, const std::string& family, Cells w, const std::function<CellId()>& lhs,
                  const std::function<CellId()>& rhs) {
        ++r_.instances[family];
        try {
            CellId l = lhs(), r = rhs();
            if (l != r) add(kind, family, w, B_.name(l) + " != " + B_.name(r));
        } catch (const CompositionError& e) {
            add(kind, family, w, std::string("ill-typed: ") + e.what());
        }
    }

    void boundary(const std::string& family, Cells w, CellId x, const std::function<CellId()>& s,
                  const std::function<CellId()>& t) {
        try {
            CellId es = s(), et = t();
            if (B_.src(x) != es || B_.tgt(x) != et)
                add("boundary", family, w, "value " + B_.name(x) + " has the wrong source or target");
        } catch (const CompositionError& e) {
            add("boundary", family, w, std::string("ill-typed boundary: ") + e.what());
        }
    }

    bool check_data() {
        const auto& F = F_;
        if (static_cast<int>(F.cell.size()) != A_.size()) {
            add("totality", "DOT", {}, "cell map does not cover the source");
            return false;
        }
        static const char* fam[] = {"DOT", "L", "LL", "LLL"};
        for (CellId x = 0; x < A_.size(); ++x) {
            CellId y = F.cell[x];
            int d = A_.dim(x);
            if (y < 0 || y >= B_.size() || B_.dim(y) != d) {
                add("boundary", fam[d], {x}, "image has the wrong dimension");
                continue;
            }
            if (d > 0 && (B_.src(y) != F.cell[A_.src(x)] || B_.tgt(y) != F.cell[A_.tgt(x)]))
                add("boundary", fam[d], {x}, "image has the wrong source or target");
        }
        if (!r_.violations.empty()) return false;

        std::size_t nV = 0, nW = 0, nR = 0, nL = 0;
        S_.pairs([&](CellId g, CellId f) {
            ++nV;
            auto it = F.V.find({g, f});
            if (it == F.V.end()) return add("totality", "V", {g, f}, "missing value");
            boundary("V", {g, f}, it->second, [&] { return F(A_.comp(0, g, f)); },
                     [&] { return o_.c0(F(g), F(f)); });
        });
        S_.triples([&](CellId h, CellId g, CellId f) {
            ++nW;
            auto it = F.W.find({h, g, f});
            if (it == F.W.end()) return add("totality", "W", {h, g, f}, "missing value");
            boundary("W", {h, g, f}, it->second,
                     [&] { return o_.c1(o_.c0(F(h), F.v(g, f)), F.v(h, A_.comp(0, g, f))); },
                     [&] { return o_.c1(o_.c0(F.v(h, g), F(f)), F.v(A_.comp(0, h, g), f)); });
        });
        S_.right_whiskers([&](CellId g, CellId a) {
            ++nR;
            auto it = F.VR.find({g, a});
            if (it == F.VR.end()) return add("totality", "VR", {g, a}, "missing value");
            CellId f = A_.src(a), f2 = A_.tgt(a);
            boundary("VR", {g, a}, it->second, [&] { return o_.c1(o_.c0(F(g), F(a)), F.v(g, f)); },
                     [&] { return o_.c1(F.v(g, f2), F(A_.comp(0, g, a))); });
        });
        S_.left_whiskers([&](CellId b, CellId f) {
            ++nL;
            auto it = F.VL.find({b, f});
            if (it == F.VL.end()) return add("totality", "VL", {b, f}, "missing value");
            CellId g = A_.src(b), g2 = A_.tgt(b);
            boundary("VL", {b, f}, it->second, [&] { return o_.c1(F.v(g2, f), F(A_.comp(0, b, f))); },
                     [&] { return o_.c1(o_.c0(F(b), F(f)), F.v(g, f)); });
        });
        if (F.V.size() != nV) add("totality", "V", {}, "values at non-composable pairs");
        if (F.W.size() != nW) add("totality", "W", {}, "values at non-composable triples");
        if (F.VR.size() != nR) add("totality", "VR", {}, "values at non-composable pairs");
        if (F.VL.size() != nL) add("totality", "VL", {}, "values at non-composable pairs");
        return r_.violations.empty();
    }

    void normalisation() {
        const auto& F = F_;
        const auto& A = A_;
        auto is_id = [&](CellId x) { return A.is_identity(x); };
        for (CellId a : A.cells(0))
            equation("normalisation", "L", {a}, [&] { return F(A.identity(a)); },
                     [&] { return o_.id(F(a)); });
        for (CellId f : A.cells(1))
            equation("normalisation", "LL", {f}, [&] { return F(A.identity(f)); }, [&] { return o_.id(F(f)); });
        for (CellId a : A.cells(2))
            equation("normalisation", "LLL", {a}, [&] { return F(A.identity(a)); }, [&] { return o_.id(F(a)); });
        S_.pairs([&](CellId g, CellId f) {
            if (is_id(g)) equation("normalisation", "V", {g, f}, [&] { return F.v(g, f); }, [&] { return o_.id(F(f)); });
            if (is_id(f)) equation("normalisation", "V", {g, f}, [&] { return F.v(g, f); }, [&] { return o_.id(F(g)); });
        });
        S_.triples([&](CellId h, CellId g, CellId f) {
            if (is_id(h)) equation("normalisation", "W", {h, g, f}, [&] { return F.w(h, g, f); },
                                   [&] { return o_.id(F.v(g, f)); });
            if (is_id(g)) equation("normalisation", "W", {h, g, f}, [&] { return F.w(h, g, f); },
                                   [&] { return o_.id(F.v(h, f)); });
            if (is_id(f)) equation("normalisation", "W", {h, g, f}, [&] { return F.w(h, g, f); },
                                   [&] { return o_.id(F.v(h, g)); });
        });
        S_.right_whiskers([&](CellId g, CellId a) {
            if (is_id(a)) equation("normalisation", "VR", {g, a}, [&] { return F.vr(g, a); },
                                   [&] { return o_.id(F.v(g, A.src(a))); });
            if (is_id(g)) equation("normalisation", "VR", {g, a}, [&] { return F.vr(g, a); },
                                   [&] { return o_.id(F(a)); });
        });
        S_.left_whiskers([&](CellId b, CellId f) {
            if (is_id(b)) equation("normalisation", "VL", {b, f}, [&] { return F.vl(b, f); },
                                   [&] { return o_.id(F.v(A.src(b), f)); });
            if (is_id(f)) equation("normalisation", "VL", {b, f}, [&] { return F.vl(b, f); },
                                   [&] { return o_.id(F(b)); });
        });
        for (const auto& fam : normalisation_families()) r_.instances.try_emplace(fam, 0);
    }

    void coherences() {
        const auto& F = F_;
        const auto& A = A_;
        const Ops& o = o_;
        auto a0 = [&](CellId x, CellId y) { return A.comp(0, x, y); };
        auto a1 = [&](CellId x, CellId y) { return A.comp(1, x, y); };
        auto a2 = [&](CellId x, CellId y) { return A.comp(2, x, y); };
        const std::string C = "coherence";

        // Vertical composition of 2-cells.
        for (CellId a : A.cells(2))
            for (CellId b : S_.from1(A.tgt(a))) {
                equation(C, "Y", {b, a}, [&] { return o.c1(F(b), F(a)); }, [&] { return F(a1(b, a)); });
                for (CellId c : S_.from1(A.tgt(b)))
                    equation(C, "YY", {c, b, a}, [&] { return o.c1(F(c), o.c1(F(b), F(a))); },
                             [&] { return F(a1(c, a1(b, a))); });
            }

        // Pentagon.
        S_.triples([&](CellId h, CellId g, CellId f) {
            for (CellId i : S_.after(h))
                equation(
                    C, "VV", {i, h, g, f},
                    [&] {
                        CellId ih = a0(i, h), gf = a0(g, f);
                        CellId top = o.c1(o.c0(F.v(i, h), o.c0(F(g), F(f))), F.w(ih, g, f));
                        CellId bot = o.c1(o.c0(F(i), o.c0(F(h), F.v(g, f))), F.w(i, h, gf));
                        return o.c2(top, bot);
                    },
                    [&] {
                        CellId hg = a0(h, g), gf = a0(g, f);
                        CellId r1 = o.c1(o.c0(F.w(i, h, g), F(f)), F.v(a0(i, hg), f));
                        CellId r2 = o.c1(o.c0(F(i), o.c0(F.v(h, g), F(f))), F.w(i, hg, f));
                        CellId r3 = o.c1(o.c0(F(i), F.w(h, g, f)), F.v(i, a0(h, gf)));
                        return o.c2(r1, o.c2(r2, r3));
                    });
        });

        // W against a 2-cell in each position.
        for (CellId al : A.cells(2)) {
            CellId x = A.src(al), x2 = A.tgt(al);  // al: x -> x'
            // (alpha, g, f): alpha: h -> h'.
            for (CellId g : in_to(A.src(x)))
                for (CellId f : in_to(A.src(g))) {
                    CellId h = x, h2 = x2;
                    equation(
                        C, "W_LL_L_L", {al, g, f},
                        [&] {
                            CellId l1 = o.c1(o.c0(F(al), o.c0(F(g), F(f))), F.w(h, g, f));
                            CellId l2 = o.c1(o.c0(F(h2), F.v(g, f)), F.vl(al, a0(g, f)));
                            return o.c2(l1, l2);
                        },
                        [&] {
                            CellId r1 = o.c1(o.c0(F.vl(al, g), F(f)), F.v(a0(h, g), f));
                            CellId r2 = o.c1(o.c0(F.v(h2, g), F(f)), F.vl(a0(al, g), f));
                            CellId r3 = o.c1(F.w(h2, g, f), F(a0(al, a0(g, f))));
                            return o.c2(r1, o.c2(r2, r3));
                        });
                }
            // (h, alpha, f): alpha: g -> g'.
            for (CellId h : S_.after(x))
                for (CellId f : in_to(A.src(x))) {
                    CellId g = x, g2 = x2;
                    equation(
                        C, "W_L_LL_L", {h, al, f},
                        [&] {
                            CellId l1 = o.c1(o.c0(F.v(h, g2), F(f)), F.vl(a0(h, al), f));
                            CellId l2 = o.c1(F.w(h, g2, f), F(a0(h, a0(al, f))));
                            CellId l3 = o.c1(o.c0(F(h), F.v(g2, f)), F.vr(h, a0(al, f)));
                            return o.c2(l1, o.c2(l2, l3));
                        },
                        [&] {
                            CellId r1 = o.c1(o.c0(F.vr(h, al), F(f)), F.v(a0(h, g), f));
                            CellId r2 = o.c1(o.c0(F(h), o.c0(F(al), F(f))), F.w(h, g, f));
                            CellId r3 = o.c1(o.c0(F(h), F.vl(al, f)), F.v(h, a0(g, f)));
                            return o.c2(r1, o.c2(r2, r3));
                        });
                }
            // (h, g, alpha): alpha: f -> f'.
            for (CellId g : S_.after(x))
                for (CellId h : S_.after(g)) {
                    CellId f = x, f2 = x2;
                    equation(
                        C, "W_L_L_LL", {h, g, al},
                        [&] {
                            CellId l1 = o.c1(o.c0(F.v(h, g), F(f2)), F.vr(a0(h, g), al));
                            CellId l2 = o.c1(o.c0(F(h), o.c0(F(g), F(al))), F.w(h, g, f));
                            return o.c2(l1, l2);
                        },
                        [&] {
                            CellId r1 = o.c1(F.w(h, g, f2), F(a0(h, a0(g, al))));
                            CellId r2 = o.c1(o.c0(F(h), F.v(g, f2)), F.vr(h, a0(g, al)));
                            CellId r3 = o.c1(o.c0(F(h), F.vr(g, al)), F.v(h, a0(g, f)));
                            return o.c2(r1, o.c2(r2, r3));
                        });
                }
            // (g, beta, alpha) and (beta, alpha, f) with al as the first 2-cell.
            for (CellId be : S_.from1(x2)) {
                for (CellId g : S_.after(x))
                    equation(
                        C, "VR_Y", {g, be, al}, [&] { return F.vr(g, a1(be, al)); },
                        [&] {
                            return o.c2(o.c1(F.vr(g, be), F(a0(g, al))), o.c1(o.c0(F(g), F(be)), F.vr(g, al)));
                        });
                for (CellId f : in_to(A.src(x)))
                    equation(
                        C, "VL_Y", {be, al, f}, [&] { return F.vl(a1(be, al), f); },
                        [&] {
                            return o.c2(o.c1(o.c0(F(be), F(f)), F.vl(al, f)), o.c1(F.vl(be, f), F(a0(al, f))));
                        });
            }
            // (beta, alpha): alpha: f -> f', beta: g -> g'.
            for (CellId g : S_.after(x))
                for (CellId be : S_.from1(g)) {
                    CellId f = x, f2 = x2, g2 = A.tgt(be);
                    equation(
                        C, "VLR", {be, al},
                        [&] {
                            return o.c2(o.c1(o.c0(F(be), F(f2)), F.vr(g, al)),
                                        o.c1(o.c0(F(g2), F(al)), F.vl(be, f)));
                        },
                        [&] { return o.c2(o.c1(F.vl(be, f2), F(a0(g, al))), o.c1(F.vr(g2, al), F(a0(be, f)))); });
                }
        }

        // 3-cells.
        for (CellId ga : A.cells(3)) {
            for (CellId de : S_.from2(A.tgt(ga)))
                equation(C, "LLL_Y", {de, ga}, [&] { return F(a2(de, ga)); }, [&] { return o.c2(F(de), F(ga)); });
            CellId s2 = A.src(ga), t2 = A.tgt(ga);  // ga: s2 -> t2, 2-cells x -> y
            CellId x = A.src(s2), y = A.tgt(s2);
            for (CellId al : in_to2(x))
                equation(C, "LLL_LL", {ga, al}, [&] { return o.c1(F(ga), F(al)); }, [&] { return F(a1(ga, al)); });
            for (CellId be : S_.from1(y))
                equation(C, "LL_LLL", {be, ga}, [&] { return o.c1(F(be), F(ga)); }, [&] { return F(a1(be, ga)); });
            // Naturality of VL and VR in the 2-cell.
            for (CellId f : in_to(A.src(x))) {
                CellId g = x, g2 = y;
                equation(
                    C, "LLL_L", {ga, f},
                    [&] { return o.c2(F.vl(t2, f), o.c1(F.v(g2, f), F(a0(ga, f)))); },
                    [&] { return o.c2(o.c1(o.c0(F(ga), F(f)), F.v(g, f)), F.vl(s2, f)); });
            }
            for (CellId g : S_.after(x)) {
                CellId f = x, f2 = y;
                equation(
                    C, "L_LLL", {g, ga},
                    [&] { return o.c2(o.c1(F.v(g, f2), F(a0(g, ga))), F.vr(g, s2)); },
                    [&] { return o.c2(F.vr(g, t2), o.c1(o.c0(F(g), F(ga)), F.v(g, f))); });
            }
        }
        for (const auto& fam : coherence_families()) r_.instances.try_emplace(fam, 0);
    }

    const std::vector<CellId>& in_to(CellId object) {
        if (in1_.empty())
            for (CellId f : A_.cells(1)) in1_[A_.tgt(f)].push_back(f);
        static const std::vector<CellId> none;
        auto it = in1_.find(object);
        return it == in1_.end() ? none : it->second;
    }
    const std::vector<CellId>& in_to2(CellId one_cell) {
        if (in2_.empty())
            for (CellId a : A_.cells(2)) in2_[A_.tgt(a)].push_back(a);
        static const std::vector<CellId> none;
        auto it = in2_.find(one_cell);
        return it == in2_.end() ? none : it->second;
    }

    const OplaxData& F_;
    const FiniteThreeCat& A_;
    const FiniteThreeCat& B_;
    Shape S_;
    Ops o_;
    OplaxReport r_;
    std::map<CellId, std::vector<CellId>> in1_, in2_;
};

}  // namespace

OplaxReport validate(const OplaxData& F) { return Validator(F).run(); }

void fill_structure(OplaxData& F, const std::function<CellId(CellId, CellId)>& v,
                 const std::function<CellId(CellId, CellId, CellId)>& w,
                 const std::function<CellId(CellId, CellId)>& vr, const std::function<CellId(CellId, CellId)>& vl) {
    Shape S(*F.source);
    S.pairs([&](CellId g, CellId f) { F.V[{g, f}] = v(g, f); });
    S.triples([&](CellId h, CellId g, CellId f) { F.W[{h, g, f}] = w(h, g, f); });
    S.right_whiskers([&](CellId g, CellId a) { F.VR[{g, a}] = vr(g, a); });
    S.left_whiskers([&](CellId b, CellId f) { F.VL[{b, f}] = vl(b, f); });
}

OplaxData from_strict(const StrictFunctor& u, CatPtr source, CatPtr target) {
    OplaxData F{std::move(source), std::move(target), u.map, {}, {}, {}, {}};
    const auto& A = *F.source;
    const auto& B = *F.target;
    auto idv = [&](CellId g, CellId f) { return B.identity(u.map[A.comp(0, g, f)]); };
    fill_structure(
        F, idv, [&](CellId h, CellId g, CellId f) { return B.identity(idv(h, A.comp(0, g, f))); },
        [&](CellId g, CellId a) { return B.identity(u.map[A.comp(0, g, a)]); },
        [&](CellId b, CellId f) { return B.identity(u.map[A.comp(0, b, f)]); });
    return F;
}

OplaxData identity_oplax(CatPtr A) {
    auto u = identity_functor(*A);
    return from_strict(u, A, A);
}

// ---------------------------------------------------------------------------------------------
// sup

namespace {

CellId label_on(const FiniteThreeCat& C, const Simplex& z, std::initializer_list<int> vertices) {
    Mask m = 0;
    for (int v : vertices) m |= 1u << v;
    return C.lift(z[m], static_cast<int>(vertices.size()) - 1);
}

std::string theta_name(const std::vector<int>& t) { return tuple_name(t); }

}  // namespace

ElementsCategory elements_category(const FiniteThreeCat& C, int max_dim, Budget* budget) {
    if (max_dim < 0 || max_dim > kMaxSimplexDim) throw std::invalid_argument("elements_category: max_dim out of range");
    ElementsCategory E;
    std::map<Simplex, int> index;
    for (int k = 0; k <= max_dim; ++k)
        for (auto& x : nondegenerate_simplices(C, k, budget)) {
            index.emplace(x, static_cast<int>(E.objects.size()));
            E.objects.push_back(std::move(x));
        }
    std::map<std::tuple<int, std::vector<int>>, int> arrow_of;  // (target, theta)
    for (int t = 0; t < static_cast<int>(E.objects.size()); ++t) {
        const Simplex& y = E.objects[t];
        int n = y.k;
        for (unsigned sub = 1; sub + 1 < (1u << (n + 1)); ++sub) {
            std::vector<int> theta = mask_vertices(sub);
            auto it = index.find(reindex(C, y, theta));
            if (it == index.end()) continue;
            arrow_of[{t, theta}] = static_cast<int>(E.arrows.size());
            E.arrows.push_back({it->second, t, theta});
        }
    }
    for (std::size_t i = 0; i < E.objects.size(); ++i) E.one.objects.push_back("x" + std::to_string(i));
    for (const auto& a : E.arrows)
        E.one.arrows.push_back({"x" + std::to_string(a.tgt) + "." + theta_name(a.theta), a.src, a.tgt});
    // Composites of face maps: (g o f)(i) = g(f(i)).
    std::map<int, std::vector<int>> into;
    for (std::size_t i = 0; i < E.arrows.size(); ++i) into[E.arrows[i].tgt].push_back(static_cast<int>(i));
    for (std::size_t gi = 0; gi < E.arrows.size(); ++gi) {
        const auto& g = E.arrows[gi];
        for (int fi : into[g.src]) {
            const auto& f = E.arrows[fi];
            std::vector<int> theta;
            for (int v : f.theta) theta.push_back(g.theta[v]);
            E.one.composition[{static_cast<int>(gi), fi}] = arrow_of.at({g.tgt, theta});
        }
    }
    return E;
}

SupFunctor sup_functor(CatPtr Cp, int max_dim, Budget* budget) {
    const FiniteThreeCat& C = *Cp;
    SupFunctor S;
    S.elements = elements_category(C, max_dim, budget);
    const auto& E = S.elements;
    auto src = share(embed_one_category(E.one));
    const auto& A = *src;
    S.F.source = src;
    S.F.target = Cp;

    // Each 1-cell of A as (source object, target object, face map).
    struct Face {
        int s, t;
        std::vector<int> theta;
    };
    std::vector<Face> face(A.size());
    std::vector<int> obj_index(A.size(), -1);
    for (std::size_t i = 0; i < E.objects.size(); ++i) {
        CellId a = A.at(E.one.objects[i]);
        obj_index[a] = static_cast<int>(i);
        std::vector<int> id;
        for (int v = 0; v <= E.objects[i].k; ++v) id.push_back(v);
        face[A.identity(a)] = {static_cast<int>(i), static_cast<int>(i), id};
    }
    for (std::size_t i = 0; i < E.arrows.size(); ++i)
        face[A.at(E.one.arrows[i].name)] = {E.arrows[i].src, E.arrows[i].tgt, E.arrows[i].theta};

    auto& F = S.F;
    F.cell.assign(A.size(), kNoCell);
    for (CellId a : A.cells(0)) {
        const Simplex& x = E.objects[obj_index[a]];
        F.cell[a] = x.v(x.k);
    }
    for (CellId f : A.cells(1)) {
        const Face& fc = face[f];
        const Simplex& y = E.objects[fc.t];
        F.cell[f] = label_on(C, y, {fc.theta.back(), y.k});
    }
    for (int d = 2; d <= 3; ++d)
        for (CellId x : A.cells(d)) F.cell[x] = C.identity(F.cell[A.src(x)]);

    auto V = [&](CellId g, CellId f) {
        const Face &ff = face[f], &gg = face[g];
        const Simplex& z = E.objects[gg.t];
        int m = ff.theta.back();
        int n = static_cast<int>(gg.theta.size()) - 1;
        return label_on(C, z, {gg.theta[m], gg.theta[n], z.k});
    };
    auto W = [&](CellId h, CellId g, CellId f) {
        const Face &ff = face[f], &gg = face[g], &hh = face[h];
        const Simplex& t = E.objects[hh.t];
        int m = ff.theta.back();
        int n = static_cast<int>(gg.theta.size()) - 1;
        int p = static_cast<int>(hh.theta.size()) - 1;
        return label_on(C, t, {hh.theta[gg.theta[m]], hh.theta[gg.theta[n]], hh.theta[p], t.k});
    };
    fill_structure(
        F, V, W, [&](CellId g, CellId a) { return C.identity(V(g, A.src(a))); },
        [&](CellId b, CellId f) { return C.identity(V(A.src(b), f)); });
    return S;
}

// ---------------------------------------------------------------------------------------------
// Nerve image, composition and the inverse construction

Simplex nerve_image(const OplaxData& F, const Simplex& x) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    Ops o{B};
    Simplex y(x.k);
    for (int i = 0; i <= x.k; ++i) y[1u << i] = F(x.v(i));
    for (int i = 0; i <= x.k; ++i)
        for (int j = i + 1; j <= x.k; ++j) y[vertex_mask({i, j})] = F(x.e(i, j));
    for (int a = 0; a <= x.k; ++a)
        for (int b = a + 1; b <= x.k; ++b)
            for (int c = b + 1; c <= x.k; ++c)
                y[vertex_mask({a, b, c})] = o.c1(F.v(x.e(b, c), x.e(a, b)), F(x.t(a, b, c)));
    for (int a = 0; a <= x.k; ++a)
        for (int b = a + 1; b <= x.k; ++b)
            for (int c = b + 1; c <= x.k; ++c)
                for (int d = c + 1; d <= x.k; ++d) {
                    CellId f = x.e(a, b), g = x.e(b, c), h = x.e(c, d);
                    CellId beta = x.t(a, b, c), alpha = x.t(a, c, d), delta = x.t(b, c, d), gamma = x.t(a, b, d);
                    CellId Gamma = x.h(a, b, c, d);
                    CellId l1 = o.c1(o.c1(o.c0(F.v(h, g), F(f)), F.vl(delta, f)), F(gamma));
                    CellId l2 = o.c1(F.w(h, g, f), F(Gamma));
                    CellId l3 = o.c1(o.c1(o.c0(F(h), F.v(g, f)), F.vr(h, beta)), F(alpha));
                    y[vertex_mask({a, b, c, d})] = o.c2(l1, o.c2(l2, l3));
                }
    (void)A;
    return y;
}

SimplicialMap34 to_simplicial(const OplaxData& F, Budget* budget) {
    SimplicialMap34 M{F.source.get(), F.target.get(), {}};
    for (int k = 0; k <= kMaxSimplexDim; ++k)
        for (const auto& x : nondegenerate_simplices(*F.source, k, budget)) M.images.emplace(x, nerve_image(F, x));
    return M;
}

OplaxData compose(const OplaxData& G, const OplaxData& F) {
    if (F.target.get() != G.source.get() && to_json(*F.target) != to_json(*G.source))
        throw std::invalid_argument("compose: target of F differs from source of G");
    OplaxData H{F.source, G.target, {}, {}, {}, {}, {}};
    const auto& A = *F.source;
    Ops o{*G.target};
    H.cell.resize(A.size());
    for (CellId x = 0; x < A.size(); ++x) H.cell[x] = G(F(x));
    auto GFv = [&](CellId g, CellId f) { return o.c1(G.v(F(g), F(f)), G(F.v(g, f))); };
    auto GFw = [&](CellId h, CellId g, CellId f) {
        CellId hg = A.comp(0, h, g), gf = A.comp(0, g, f);
        CellId l1 = o.c1(o.c1(o.c0(G.v(F(h), F(g)), G(F(f))), G.vl(F.v(h, g), F(f))), G(F.v(hg, f)));
        CellId l2 = o.c1(G.w(F(h), F(g), F(f)), G(F.w(h, g, f)));
        CellId l3 = o.c1(o.c1(o.c0(G(F(h)), G.v(F(g), F(f))), G.vr(F(h), F.v(g, f))), G(F.v(h, gf)));
        return o.c2(l1, o.c2(l2, l3));
    };
    auto GFvr = [&](CellId g, CellId a) {
        CellId f = A.src(a), f2 = A.tgt(a);
        return o.c2(o.c1(G.v(F(g), F(f2)), G(F.vr(g, a))), o.c1(G.vr(F(g), F(a)), G(F.v(g, f))));
    };
    auto GFvl = [&](CellId b, CellId f) {
        CellId g = A.src(b), g2 = A.tgt(b);
        return o.c2(o.c1(G.vl(F(b), F(f)), G(F.v(g, f))), o.c1(G.v(F(g2), F(f)), G(F.vl(b, f))));
    };
    fill_structure(H, GFv, GFw, GFvr, GFvl);
    return H;
}

OplaxData from_simplicial(const SimplicialMap34& M, CatPtr source, CatPtr target) {
    if (M.source != source.get() || M.target != target.get())
        throw std::invalid_argument("from_simplicial: categories do not match the map");
    auto bad = simplicial_oplax_violations(M);
    if (!bad.empty()) throw std::invalid_argument("from_simplicial: map is not simplicial oplax");
    return extract_oplax_data(M, std::move(source), std::move(target));
}

OplaxData extract_oplax_data(const SimplicialMap34& M, CatPtr source, CatPtr target) {
    const auto& A = *source;
    OplaxData F{source, target, {}, {}, {}, {}, {}};
    F.cell.assign(A.size(), kNoCell);
    const Mask tri = vertex_mask({0, 1, 2});
    for (CellId a : A.cells(0)) {
        Simplex x(0);
        x[1] = a;
        F.cell[a] = M.apply(x).v(0);
    }
    for (CellId f : A.cells(1)) {
        Simplex x(1);
        x[1] = A.src(f);
        x[2] = A.tgt(f);
        x[3] = f;
        F.cell[f] = M.apply(x).e(0, 1);
    }
    for (CellId a : A.cells(2)) F.cell[a] = M.apply(tmpl::alpha_r(A, a))[tri];
    for (CellId g : A.cells(3)) F.cell[g] = principal(M, tmpl::gamma_cell(A, g, 3));
    fill_structure(
        F, [&](CellId g, CellId f) { return M.apply(tmpl::composite(A, g, f))[tri]; },
        [&](CellId h, CellId g, CellId f) { return principal(M, tmpl::triple(A, h, g, f)); },
        [&](CellId g, CellId a) { return principal(M, tmpl::whisker_right(A, g, a)); },
        [&](CellId b, CellId f) { return principal(M, tmpl::whisker_left(A, b, f)); });
    return F;
}

// ---------------------------------------------------------------------------------------------
// JSON

namespace {

template <class Map, class KeyFn>
nlohmann::json entries(const Map& m, const FiniteThreeCat& A, const FiniteThreeCat& B, KeyFn keys) {
    std::vector<std::pair<std::vector<std::string>, std::string>> rows;
    for (const auto& [k, v] : m) {
        std::vector<std::string> key;
        for (CellId c : keys(k)) key.push_back(A.name(c));
        rows.emplace_back(std::move(key), B.name(v));
    }
    std::sort(rows.begin(), rows.end());
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, v] : rows) arr.push_back({{"key", k}, {"value", v}});
    return arr;
}

}  // namespace

nlohmann::json to_json(const OplaxData& F) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    nlohmann::json j;
    j["source"] = to_json(A);
    j["target"] = to_json(B);
    static const char* fam[] = {"DOT", "L", "LL", "LLL"};
    for (int d = 0; d <= 3; ++d) {
        nlohmann::json arr = nlohmann::json::array();
        for (CellId x : A.cells(d)) arr.push_back({{"key", {A.name(x)}}, {"value", B.name(F(x))}});
        j[fam[d]] = arr;
    }
    auto pair_keys = [](const std::pair<CellId, CellId>& k) { return std::vector<CellId>{k.first, k.second}; };
    j["V"] = entries(F.V, A, B, pair_keys);
    j["W"] = entries(F.W, A, B, [](const std::tuple<CellId, CellId, CellId>& k) {
        return std::vector<CellId>{std::get<0>(k), std::get<1>(k), std::get<2>(k)};
    });
    j["VR"] = entries(F.VR, A, B, pair_keys);
    j["VL"] = entries(F.VL, A, B, pair_keys);
    return j;
}

OplaxData oplax_from_json(const nlohmann::json& j) {
    OplaxData F;
    F.source = share(cat_from_json(j.at("source")));
    F.target = share(cat_from_json(j.at("target")));
    const auto& A = *F.source;
    const auto& B = *F.target;
    F.cell.assign(A.size(), kNoCell);
    auto key_of = [&](const nlohmann::json& e, std::size_t n) {
        const auto& k = e.at("key");
        if (!k.is_array() || k.size() != n) throw std::invalid_argument("oplax entry key has the wrong length");
        std::vector<CellId> out;
        for (const auto& s : k) out.push_back(A.at(s.get<std::string>()));
        return out;
    };
    auto val = [&](const nlohmann::json& e) { return B.at(e.at("value").get<std::string>()); };
    for (const char* fam : {"DOT", "L", "LL", "LLL"})
        for (const auto& e : j.at(fam)) F.cell[key_of(e, 1)[0]] = val(e);
    for (const auto& e : j.at("V")) {
        auto k = key_of(e, 2);
        F.V[{k[0], k[1]}] = val(e);
    }
    for (const auto& e : j.at("W")) {
        auto k = key_of(e, 3);
        F.W[{k[0], k[1], k[2]}] = val(e);
    }
    for (const auto& e : j.at("VR")) {
        auto k = key_of(e, 2);
        F.VR[{k[0], k[1]}] = val(e);
    }
    for (const auto& e : j.at("VL")) {
        auto k = key_of(e, 2);
        F.VL[{k[0], k[1]}] = val(e);
    }
    return F;
}

nlohmann::json to_json(const OplaxReport& r) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : r.violations)
        v.push_back({{"kind", x.kind}, {"family", x.family}, {"witness", x.witness}, {"detail", x.detail}});
    nlohmann::json inst = nlohmann::json::object();
    for (const auto& [k, n] : r.instances) inst[k] = n;
    return {{"verdict", r.ok() ? "pass" : "fail"}, {"instances", inst}, {"violations", v}};
}

}  // namespace hc3
