#include "hc3/chains.hpp"

#include <sstream>
#include <stdexcept>

namespace hc3 {

Chain::Chain(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative chain degree");
}

Chain::Chain(int degree, Coeffs coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) throw std::invalid_argument("negative chain degree");
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

Chain Chain::basis(int degree, const std::string& name, std::int64_t c) {
    return Chain(degree, Coeffs{{name, c}});
}

std::int64_t Chain::coeff(const std::string& name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? 0 : it->second;
}

Chain Chain::operator-() const { return scaled(-1); }

Chain Chain::scaled(std::int64_t k) const {
    Coeffs out;
    if (k != 0)
        for (const auto& [n, c] : coeffs_) out.emplace(n, c * k);
    return Chain(degree_, std::move(out));
}

std::string Chain::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [n, c] : coeffs_) {
        std::int64_t a = c;
        if (first) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        if (a < 0) a = -a;
        if (a != 1) out += std::to_string(a) + "*";
        out += n;
        first = false;
    }
    return out;
}

Chain chain_add(const Chain& a, const Chain& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("chain_add: degree mismatch (" + std::to_string(a.degree()) +
                                    " vs " + std::to_string(b.degree()) + ")");
    Chain::Coeffs out = a.coeffs();
    for (const auto& [n, c] : b.coeffs()) out[n] += c;
    return Chain(a.degree(), std::move(out));
}

Chain chain_sub(const Chain& a, const Chain& b) { return chain_add(a, -b); }

std::set<std::string> support(const Chain& x) {
    std::set<std::string> s;
    for (const auto& kv : x.coeffs()) s.insert(kv.first);
    return s;
}

PlusMinus decompose_pm(const Chain& x) {
    Chain::Coeffs p, m;
    for (const auto& [n, c] : x.coeffs()) {
        if (c > 0) p.emplace(n, c);
        else m.emplace(n, -c);
    }
    return {Chain(x.degree(), std::move(p)), Chain(x.degree(), std::move(m))};
}

bool is_positive(const Chain& x) {
    for (const auto& kv : x.coeffs())
        if (kv.second < 0) return false;
    return true;
}

Chain parse_chain(int degree, const std::string& text) {
    Chain::Coeffs out;
    std::stringstream ss(text);
    std::string tok;
    std::int64_t sign = 1;
    bool expect_term = true;
    while (ss >> tok) {
        if (!expect_term) {
            if (tok != "+" && tok != "-") throw std::invalid_argument("malformed chain: '" + text + "'");
            sign = tok == "-" ? -1 : 1;
            expect_term = true;
            continue;
        }
        if (tok == "0" && out.empty()) {
            expect_term = false;
            continue;
        }
        std::int64_t s = sign;
        if (tok.size() > 1 && tok[0] == '-') {
            s = -s;
            tok = tok.substr(1);
        }
        std::int64_t coef = 1;
        auto star = tok.find('*');
        if (star != std::string::npos) {
            coef = std::stoll(tok.substr(0, star));
            tok = tok.substr(star + 1);
        }
        if (tok.empty()) throw std::invalid_argument("malformed chain: '" + text + "'");
        out[tok] += s * coef;
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !text.empty() && text.find_first_not_of(' ') != std::string::npos)
        throw std::invalid_argument("malformed chain: '" + text + "'");
    return Chain(degree, std::move(out));
}

std::string tuple_name(const std::vector<int>& vertices) {
    std::string s;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(vertices[i]);
    }
    return s;
}

std::vector<int> name_tuple(const std::string& name) {
    std::vector<int> out;
    std::stringstream ss(name);
    std::string part;
    while (std::getline(ss, part, '-')) out.push_back(std::stoi(part));
    return out;
}

nlohmann::json to_json(const Chain& c) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [n, v] : c.coeffs()) coeffs[n] = v;
    return {{"degree", c.degree()}, {"coeffs", coeffs}};
}

Chain chain_from_json(const nlohmann::json& j) {
    Chain::Coeffs m;
    for (const auto& [k, v] : j.at("coeffs").items()) {
        if (v.get<std::int64_t>() == 0) throw std::invalid_argument("zero coefficient stored for " + k);
        m[k] = v.get<std::int64_t>();
    }
    return Chain(j.at("degree").get<int>(), std::move(m));
}

}  // namespace hc3
