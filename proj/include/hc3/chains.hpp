#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hc3 {

struct BasisElement {
    std::string name;
    int degree = 0;
};

// Integer linear combination of basis elements of a single degree.
// Zero coefficients are never stored, so structural equality is chain equality.
class Chain {
public:
    using Coeffs = std::map<std::string, std::int64_t>;

    Chain() = default;
    explicit Chain(int degree);
    Chain(int degree, Coeffs coeffs);

    static Chain basis(int degree, const std::string& name, std::int64_t c = 1);

    int degree() const { return degree_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t coeff(const std::string& name) const;

    Chain operator-() const;
    Chain scaled(std::int64_t k) const;

    friend bool operator==(const Chain&, const Chain&) = default;
    friend auto operator<=>(const Chain& a, const Chain& b) {
        if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
        return a.coeffs_ <=> b.coeffs_;
    }

    // "0-1 + 1-2", "2*0-1-2 - 0-2", "0" for the zero chain.
    std::string str() const;

private:
    int degree_ = 0;
    Coeffs coeffs_;
};

Chain chain_add(const Chain& a, const Chain& b);
Chain chain_sub(const Chain& a, const Chain& b);
std::set<std::string> support(const Chain& x);

struct PlusMinus {
    Chain plus;
    Chain minus;
};
PlusMinus decompose_pm(const Chain& x);
bool is_positive(const Chain& x);

// Parses the textual form produced by Chain::str().
Chain parse_chain(int degree, const std::string& text);

// Canonical basis name for a strictly increasing vertex tuple.
std::string tuple_name(const std::vector<int>& vertices);
std::vector<int> name_tuple(const std::string& name);

nlohmann::json to_json(const Chain& c);
Chain chain_from_json(const nlohmann::json& j);

}  // namespace hc3
