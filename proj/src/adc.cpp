#include "hc3/adc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hc3 {

std::string CellMatrix::str() const {
    std::string s;
    for (int k = 0; k <= dim; ++k) s += (k ? " ; " : "") + row0[k].str();
    s += " | ";
    for (int k = 0; k <= dim; ++k) s += (k ? " ; " : "") + row1[k].str();
    return s;
}

ADC::ADC(std::vector<std::vector<std::string>> basis, std::map<std::string, Chain> diff,
         std::map<std::string, std::int64_t> aug)
    : basis_(std::move(basis)), diff_(std::move(diff)), aug_(std::move(aug)) {
    for (int k = 0; k <= top_degree(); ++k)
        for (const auto& b : basis_[k])
            if (!degree_.emplace(b, k).second) throw std::invalid_argument("duplicate basis element " + b);
    for (int k = 0; k <= top_degree(); ++k) {
        for (const auto& b : basis_[k]) {
            if (k == 0) {
                if (!aug_.count(b)) throw std::invalid_argument("missing augmentation for " + b);
                continue;
            }
            auto it = diff_.find(b);
            if (it == diff_.end()) throw std::invalid_argument("missing differential for " + b);
            if (it->second.degree() != k - 1)
                throw std::invalid_argument("differential of " + b + " has wrong degree");
            for (const auto& kv : it->second.coeffs())
                if (degree_of(kv.first) != k - 1)
                    throw std::invalid_argument("differential of " + b + " mentions " + kv.first);
        }
    }
    for (const auto& kv : diff_)
        if (!has(kv.first) || degree_of(kv.first) == 0)
            throw std::invalid_argument("differential given for unknown element " + kv.first);
    for (const auto& kv : aug_)
        if (!has(kv.first) || degree_of(kv.first) != 0)
            throw std::invalid_argument("augmentation given for non-vertex " + kv.first);
    for (int k = 1; k <= top_degree(); ++k) {
        for (const auto& b : basis_[k]) {
            const Chain& db = diff_.at(b);
            if (k == 1) {
                if (e(db) != 0) throw std::invalid_argument("e(d(" + b + ")) != 0");
            } else if (!d(db).is_zero()) {
                throw std::invalid_argument("d(d(" + b + ")) != 0");
            }
        }
    }
}

const std::vector<std::string>& ADC::basis(int k) const {
    static const std::vector<std::string> empty;
    if (k < 0 || k > top_degree()) return empty;
    return basis_[k];
}

int ADC::degree_of(const std::string& name) const {
    auto it = degree_.find(name);
    if (it == degree_.end()) throw std::invalid_argument("unknown basis element " + name);
    return it->second;
}

const Chain& ADC::diff_of(const std::string& name) const {
    auto it = diff_.find(name);
    if (it == diff_.end()) throw std::invalid_argument("no differential for " + name);
    return it->second;
}

Chain ADC::d(const Chain& x) const {
    if (x.degree() == 0) throw std::invalid_argument("differential of a degree-0 chain");
    Chain::Coeffs out;
    for (const auto& [n, c] : x.coeffs())
        for (const auto& [m, a] : diff_of(n).coeffs()) out[m] += c * a;
    return Chain(x.degree() - 1, std::move(out));
}

std::int64_t ADC::e(const Chain& x) const {
    if (x.degree() != 0) throw std::invalid_argument("augmentation of a positive-degree chain");
    std::int64_t s = 0;
    for (const auto& [n, c] : x.coeffs()) s += c * aug_of(n);
    return s;
}

std::int64_t ADC::aug_of(const std::string& name) const {
    auto it = aug_.find(name);
    if (it == aug_.end()) throw std::invalid_argument("no augmentation for " + name);
    return it->second;
}

Poset Poset::chain(int n_plus_one) {
    Poset p;
    p.n = n_plus_one;
    p.less.assign(p.n, std::vector<bool>(p.n, false));
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) p.less[i][j] = true;
    return p;
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& lt) {
    Poset p;
    p.n = n;
    p.less.assign(n, std::vector<bool>(n, false));
    for (auto [a, b] : lt) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("poset relation out of range");
        p.less[a][b] = true;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.less[i][k])
                for (int j = 0; j < n; ++j)
                    if (p.less[k][j]) p.less[i][j] = true;
    p.check();
    return p;
}

void Poset::check() const {
    for (int i = 0; i < n; ++i) {
        if (less[i][i]) throw std::invalid_argument("relation is not a partial order (reflexive pair)");
        for (int j = 0; j < n; ++j) {
            if (less[i][j] && less[j][i]) throw std::invalid_argument("relation is not a partial order (cycle)");
            if (less[i][j])
                for (int k = 0; k < n; ++k)
                    if (less[j][k] && !less[i][k])
                        throw std::invalid_argument("relation is not a partial order (not transitive)");
        }
    }
}

ADC simplex_complex(int n) {
    if (n < 0) throw std::invalid_argument("simplex_complex: negative dimension");
    return oriental_complex(Poset::chain(n + 1));
}

ADC oriental_complex(const Poset& E) {
    E.check();
    std::vector<std::vector<std::vector<int>>> chains(1);
    for (int i = 0; i < E.n; ++i) chains[0].push_back({i});
    while (true) {
        std::vector<std::vector<int>> next;
        for (const auto& c : chains.back())
            for (int j = 0; j < E.n; ++j)
                if (E.lt(c.back(), j)) {
                    auto c2 = c;
                    c2.push_back(j);
                    next.push_back(std::move(c2));
                }
        if (next.empty()) break;
        chains.push_back(std::move(next));
    }
    std::vector<std::vector<std::string>> basis;
    std::map<std::string, Chain> diff;
    std::map<std::string, std::int64_t> aug;
    for (std::size_t k = 0; k < chains.size(); ++k) {
        basis.emplace_back();
        for (const auto& c : chains[k]) {
            std::string name = tuple_name(c);
            basis.back().push_back(name);
            if (k == 0) {
                aug[name] = 1;
                continue;
            }
            Chain::Coeffs dc;
            for (std::size_t i = 0; i < c.size(); ++i) {
                auto face = c;
                face.erase(face.begin() + static_cast<long>(i));
                dc[tuple_name(face)] += (i % 2 == 0) ? 1 : -1;
            }
            diff[name] = Chain(static_cast<int>(k) - 1, std::move(dc));
        }
        std::sort(basis.back().begin(), basis.back().end(), [&](const std::string& a, const std::string& b) {
            return name_tuple(a) < name_tuple(b);
        });
    }
    return ADC(std::move(basis), std::move(diff), std::move(aug));
}

AtomMatrix atom(const ADC& K, const Chain& x) {
    AtomMatrix m;
    m.dim = x.degree();
    m.row0.assign(m.dim + 1, Chain());
    m.row1.assign(m.dim + 1, Chain());
    m.row0[m.dim] = x;
    m.row1[m.dim] = x;
    for (int k = m.dim; k > 0; --k) {
        m.row0[k - 1] = decompose_pm(K.d(m.row0[k])).minus;
        m.row1[k - 1] = decompose_pm(K.d(m.row1[k])).plus;
    }
    return m;
}

bool is_unital_basis(const ADC& K) {
    for (int k = 0; k <= K.top_degree(); ++k)
        for (const auto& b : K.basis(k)) {
            auto a = atom(K, Chain::basis(k, b));
            if (K.e(a.row0[0]) != 1 || K.e(a.row1[0]) != 1) return false;
        }
    return true;
}

namespace {

// True iff the preorder generated by the edges is antisymmetric.
bool generated_preorder_antisymmetric(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!reach[s][v]) {
                    reach[s][v] = true;
                    stack.push_back(v);
                }
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && reach[a][b] && reach[b][a]) return false;
    return true;
}

bool intersects(const Chain& a, const Chain& b) {
    for (const auto& kv : a.coeffs())
        if (b.coeff(kv.first) != 0) return true;
    return false;
}

}  // namespace

bool is_loop_free(const ADC& K) {
    std::vector<std::pair<int, AtomMatrix>> atoms;
    for (int k = 0; k <= K.top_degree(); ++k)
        for (const auto& b : K.basis(k)) atoms.emplace_back(k, atom(K, Chain::basis(k, b)));
    for (int i = 0; i < K.top_degree(); ++i) {
        std::vector<int> idx;
        for (int a = 0; a < static_cast<int>(atoms.size()); ++a)
            if (atoms[a].first > i) idx.push_back(a);
        int n = static_cast<int>(idx.size());
        std::vector<std::vector<int>> adj(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && intersects(atoms[idx[x]].second.row1[i], atoms[idx[y]].second.row0[i]))
                    adj[x].push_back(y);
        if (!generated_preorder_antisymmetric(n, adj)) return false;
    }
    return true;
}

bool is_strongly_loop_free(const ADC& K) {
    std::vector<std::string> names;
    std::map<std::string, int> index;
    for (int k = 0; k <= K.top_degree(); ++k)
        for (const auto& b : K.basis(k)) {
            index[b] = static_cast<int>(names.size());
            names.push_back(b);
        }
    std::vector<std::vector<int>> adj(names.size());
    for (int k = 1; k <= K.top_degree(); ++k)
        for (const auto& y : K.basis(k)) {
            auto pm = decompose_pm(K.diff_of(y));
            for (const auto& kv : pm.minus.coeffs()) adj[index[kv.first]].push_back(index[y]);
            for (const auto& kv : pm.plus.coeffs()) adj[index[y]].push_back(index[kv.first]);
        }
    return generated_preorder_antisymmetric(static_cast<int>(names.size()), adj);
}

nlohmann::json to_json(const ADC& K) {
    nlohmann::json basis = nlohmann::json::array();
    for (int k = 0; k <= K.top_degree(); ++k) basis.push_back(K.basis(k));
    nlohmann::json diff = nlohmann::json::object();
    for (const auto& [n, c] : K.diff_table()) diff[n] = to_json(c);
    nlohmann::json aug = nlohmann::json::object();
    for (const auto& [n, v] : K.aug_table()) aug[n] = v;
    return {{"basis", basis}, {"diff", diff}, {"aug", aug}};
}

ADC adc_from_json(const nlohmann::json& j) {
    std::vector<std::vector<std::string>> basis = j.at("basis").get<std::vector<std::vector<std::string>>>();
    std::map<std::string, Chain> diff;
    for (const auto& [n, c] : j.at("diff").items()) diff[n] = chain_from_json(c);
    std::map<std::string, std::int64_t> aug = j.at("aug").get<std::map<std::string, std::int64_t>>();
    return ADC(std::move(basis), std::move(diff), std::move(aug));
}

nlohmann::json to_json(const CellMatrix& m) {
    nlohmann::json r0 = nlohmann::json::array(), r1 = nlohmann::json::array();
    for (const auto& c : m.row0) r0.push_back(to_json(c));
    for (const auto& c : m.row1) r1.push_back(to_json(c));
    return {{"dim", m.dim}, {"row0", r0}, {"row1", r1}};
}

CellMatrix matrix_from_json(const nlohmann::json& j) {
    CellMatrix m;
    m.dim = j.at("dim").get<int>();
    for (const auto& c : j.at("row0")) m.row0.push_back(chain_from_json(c));
    for (const auto& c : j.at("row1")) m.row1.push_back(chain_from_json(c));
    if (static_cast<int>(m.row0.size()) != m.dim + 1 || static_cast<int>(m.row1.size()) != m.dim + 1)
        throw std::invalid_argument("matrix rows do not match dimension");
    for (int k = 0; k <= m.dim; ++k)
        if (m.row0[k].degree() != k || m.row1[k].degree() != k)
            throw std::invalid_argument("matrix entry has the wrong degree");
    return m;
}

}  // namespace hc3
