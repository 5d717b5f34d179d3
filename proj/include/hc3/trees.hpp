#pragma once

#include <string>
#include <vector>

namespace hc3 {

// Planar rooted tree; children are ordered left to right.
struct Tree {
    std::vector<Tree> children;

    friend bool operator==(const Tree&, const Tree&) = default;

    // Bracket notation: leaf "[]", "[[],[[]]]" etc.
    std::string str() const;
    static Tree parse(const std::string& s);
};

struct DimensionMatrix {
    std::vector<int> upper;  // i_1 .. i_l
    std::vector<int> lower;  // j_1 .. j_{l-1}

    friend bool operator==(const DimensionMatrix&, const DimensionMatrix&) = default;
    bool valid() const;
};

int tree_dimension(const Tree& t);
int tree_height(const Tree& t);
Tree tree_from_matrix(const DimensionMatrix& m);
DimensionMatrix matrix_from_tree(const Tree& t);

struct NamedTree {
    std::string name;
    std::string shape;
};

// Keys of the eight data maps of a normalised oplax 3-functor.
const std::vector<NamedTree>& data_trees();
// Shapes of the fourteen coherence families.
const std::vector<NamedTree>& coherence_trees();
Tree named_tree(const std::string& name);

}  // namespace hc3
