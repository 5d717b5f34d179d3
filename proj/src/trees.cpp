#include "hc3/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace hc3 {

std::string Tree::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < children.size(); ++i) s += (i ? "," : "") + children[i].str();
    return s + "]";
}

namespace {

Tree parse_at(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || s[pos] != '[') throw std::invalid_argument("tree: expected '[' in " + s);
    ++pos;
    Tree t;
    while (pos < s.size() && s[pos] != ']') {
        t.children.push_back(parse_at(s, pos));
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
    if (pos >= s.size()) throw std::invalid_argument("tree: unbalanced brackets in " + s);
    ++pos;
    return t;
}

void leaves(const Tree& t, int depth, std::vector<int>& depths, std::vector<int>& forks, int& last_fork) {
    if (t.children.empty()) {
        if (!depths.empty()) forks.push_back(last_fork);
        depths.push_back(depth);
        return;
    }
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i > 0) last_fork = depth;
        leaves(t.children[i], depth + 1, depths, forks, last_fork);
    }
}

}  // namespace

Tree Tree::parse(const std::string& s) {
    std::string compact;
    for (char c : s)
        if (c != ' ') compact += c;
    std::size_t pos = 0;
    Tree t = parse_at(compact, pos);
    if (pos != compact.size()) throw std::invalid_argument("tree: trailing characters in " + s);
    return t;
}

bool DimensionMatrix::valid() const {
    if (upper.empty() || lower.size() + 1 != upper.size()) return false;
    for (int v : upper)
        if (v < 0) return false;
    for (std::size_t k = 0; k < lower.size(); ++k)
        if (lower[k] < 0 || !(upper[k] > lower[k] && lower[k] < upper[k + 1])) return false;
    return true;
}

int tree_dimension(const Tree& t) {
    int n = 0;
    for (const auto& c : t.children) n += 1 + tree_dimension(c);
    return n;
}

int tree_height(const Tree& t) {
    int h = 0;
    for (const auto& c : t.children) h = std::max(h, 1 + tree_height(c));
    return h;
}

Tree tree_from_matrix(const DimensionMatrix& m) {
    if (!m.valid()) throw std::invalid_argument("tree_from_matrix: matrix violates i_k > j_k < i_{k+1}");
    Tree root;
    // Rightmost branch as a path of pointers from the root.
    auto grow = [](Tree* from, int len, std::vector<Tree*>& path) {
        for (int i = 0; i < len; ++i) {
            from->children.emplace_back();
            from = &from->children.back();
            path.push_back(from);
        }
    };
    std::vector<Tree*> path{&root};
    grow(&root, m.upper[0], path);
    for (std::size_t k = 1; k < m.upper.size(); ++k) {
        int j = m.lower[k - 1];
        path.resize(j + 1);
        grow(path.back(), m.upper[k] - j, path);
    }
    return root;
}

DimensionMatrix matrix_from_tree(const Tree& t) {
    DimensionMatrix m;
    int last_fork = 0;
    leaves(t, 0, m.upper, m.lower, last_fork);
    return m;
}

const std::vector<NamedTree>& data_trees() {
    static const std::vector<NamedTree> v{
        {"DOT", "[]"},          {"L", "[[]]"},           {"V", "[[],[]]"},    {"LL", "[[[]]]"},
        {"W", "[[],[],[]]"},    {"VR", "[[],[[]]]"},     {"VL", "[[[]],[]]"}, {"LLL", "[[[[]]]]"},
    };
    return v;
}

const std::vector<NamedTree>& coherence_trees() {
    static const std::vector<NamedTree> v{
        {"Y", "[[[],[]]]"},
        {"VV", "[[],[],[],[]]"},
        {"W_LL_L_L", "[[[]],[],[]]"},
        {"W_L_LL_L", "[[],[[]],[]]"},
        {"W_L_L_LL", "[[],[],[[]]]"},
        {"VR_Y", "[[],[[],[]]]"},
        {"VL_Y", "[[[],[]],[]]"},
        {"VLR", "[[[]],[[]]]"},
        {"YY", "[[[],[],[]]]"},
        {"LLL_Y", "[[[[],[]]]]"},
        {"LLL_LL", "[[[[]],[]]]"},
        {"LL_LLL", "[[[],[[]]]]"},
        {"L_LLL", "[[],[[[]]]]"},
        {"LLL_L", "[[[[]]],[]]"},
    };
    return v;
}

Tree named_tree(const std::string& name) {
    for (const auto* list : {&data_trees(), &coherence_trees()})
        for (const auto& nt : *list)
            if (nt.name == name) return Tree::parse(nt.shape);
    throw std::invalid_argument("unknown tree name " + name);
}

}  // namespace hc3
