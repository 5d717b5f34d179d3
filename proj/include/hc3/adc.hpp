#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hc3/chains.hpp"

namespace hc3 {

// Two-row matrix of chains, entry k of degree k. Atoms and cells of nu(K) share it.
struct CellMatrix {
    int dim = 0;
    std::vector<Chain> row0;
    std::vector<Chain> row1;

    friend bool operator==(const CellMatrix&, const CellMatrix&) = default;
    friend auto operator<=>(const CellMatrix& a, const CellMatrix& b) {
        if (a.dim != b.dim) return a.dim <=> b.dim;
        if (auto c = a.row0 <=> b.row0; c != 0) return c;
        return a.row1 <=> b.row1;
    }

    const Chain& top() const { return row0.at(dim); }
    std::string str() const;
};

using AtomMatrix = CellMatrix;

// Augmented directed complex with a finite basis.
class ADC {
public:
    ADC() = default;
    // Throws std::invalid_argument unless d o d = 0 and e o d = 0.
    ADC(std::vector<std::vector<std::string>> basis, std::map<std::string, Chain> diff,
        std::map<std::string, std::int64_t> aug);

    int top_degree() const { return static_cast<int>(basis_.size()) - 1; }
    const std::vector<std::string>& basis(int k) const;
    int degree_of(const std::string& name) const;
    bool has(const std::string& name) const { return degree_.count(name) > 0; }

    const Chain& diff_of(const std::string& name) const;
    Chain d(const Chain& x) const;
    std::int64_t e(const Chain& x) const;
    std::int64_t aug_of(const std::string& name) const;

    const std::map<std::string, Chain>& diff_table() const { return diff_; }
    const std::map<std::string, std::int64_t>& aug_table() const { return aug_; }

private:
    std::vector<std::vector<std::string>> basis_;
    std::map<std::string, Chain> diff_;
    std::map<std::string, std::int64_t> aug_;
    std::map<std::string, int> degree_;
};

// Finite poset on {0, ..., n-1}; less[i][j] means i < j.
struct Poset {
    int n = 0;
    std::vector<std::vector<bool>> less;

    static Poset chain(int n_plus_one);
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& lt);  // closes transitively
    bool lt(int i, int j) const { return less[i][j]; }
    void check() const;  // throws unless a strict partial order
};

ADC simplex_complex(int n);
ADC oriental_complex(const Poset& E);

AtomMatrix atom(const ADC& K, const Chain& x);
bool is_unital_basis(const ADC& K);
bool is_loop_free(const ADC& K);
bool is_strongly_loop_free(const ADC& K);

nlohmann::json to_json(const ADC& K);
ADC adc_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CellMatrix& m);
CellMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace hc3
