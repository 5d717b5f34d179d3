#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hc3/trees.hpp"

using hc3::DimensionMatrix;
using hc3::Tree;

namespace {

Tree linear(int height) {
    Tree t;
    for (int i = 0; i < height; ++i) t = Tree{{t}};
    return t;
}

DimensionMatrix random_matrix(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(1, 6), up(1, 4);
    DimensionMatrix m;
    int l = len(rng);
    for (int k = 0; k < l; ++k) m.upper.push_back(up(rng));
    for (int k = 0; k + 1 < l; ++k) {
        int hi = std::min(m.upper[k], m.upper[k + 1]) - 1;
        m.lower.push_back(std::uniform_int_distribution<int>(0, hi)(rng));
    }
    return m;
}

}  // namespace

TEST_CASE("tree dimension", "[trees]") {
    CHECK(hc3::tree_dimension(Tree{}) == 0);
    CHECK(hc3::tree_dimension(linear(3)) == 3);
    CHECK(hc3::tree_dimension(hc3::tree_from_matrix({{2, 2, 2}, {0, 1}})) == 5);
}

TEST_CASE("tree height", "[trees]") {
    CHECK(hc3::tree_height(Tree{}) == 0);
    CHECK(hc3::tree_height(hc3::tree_from_matrix({{2, 2}, {1}})) == 2);
    CHECK(hc3::tree_height(hc3::tree_from_matrix({{2, 2, 2, 2, 2, 2, 3, 2, 2}, {1, 1, 1, 0, 1, 0, 0, 1}})) == 3);
}

TEST_CASE("matrix and tree shapes", "[trees]") {
    CHECK(hc3::tree_from_matrix({{2, 2}, {0}}) == Tree::parse("[[[]],[[]]]"));
    CHECK(hc3::tree_from_matrix({{2, 2}, {1}}) == Tree::parse("[[[],[]]]"));
    CHECK(hc3::matrix_from_tree(Tree::parse("[[[],[]]]")) == DimensionMatrix{{2, 2}, {1}});
    CHECK(hc3::tree_from_matrix({{0}, {}}) == Tree{});
    CHECK_FALSE(DimensionMatrix{{2, 2}, {2}}.valid());
    CHECK_FALSE(DimensionMatrix{{2, 2}, {}}.valid());
    CHECK_THROWS(hc3::tree_from_matrix({{1, 2}, {1}}));
}

TEST_CASE("bracket notation round trips", "[trees]") {
    for (const auto& s : {"[]", "[[]]", "[[],[[]]]", "[[[[]]],[]]"}) CHECK(Tree::parse(s).str() == s);
    CHECK_THROWS(Tree::parse("[[]"));
    CHECK_THROWS(Tree::parse("x"));
}

TEST_CASE("matrix correspondence is a bijection", "[trees][property]") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        auto m = random_matrix(rng);
        REQUIRE(m.valid());
        auto t = hc3::tree_from_matrix(m);
        REQUIRE(hc3::matrix_from_tree(t) == m);
        REQUIRE(hc3::tree_from_matrix(hc3::matrix_from_tree(t)) == t);
        int sum = 0;
        for (int x : m.upper) sum += x;
        for (int x : m.lower) sum -= x;
        REQUIRE(hc3::tree_dimension(t) == sum);
        REQUIRE(hc3::tree_height(t) == *std::max_element(m.upper.begin(), m.upper.end()));
    }
}

TEST_CASE("named oplax shapes", "[trees]") {
    const auto& data = hc3::data_trees();
    REQUIRE(data.size() == 8);
    std::map<std::string, int> expected = {{"DOT", 0}, {"L", 1}, {"V", 2},  {"LL", 2},
                                           {"W", 3},   {"VR", 3}, {"VL", 3}, {"LLL", 3}};
    for (const auto& t : data) CHECK(hc3::tree_dimension(Tree::parse(t.shape)) == expected.at(t.name));

    const auto& coh = hc3::coherence_trees();
    std::set<std::string> names;
    for (const auto& t : coh) {
        names.insert(t.name);
        if (t.name == "Y")
            CHECK(hc3::tree_dimension(Tree::parse(t.shape)) == 3);
        else
            CHECK(hc3::tree_dimension(Tree::parse(t.shape)) == 4);
        CHECK(hc3::tree_height(Tree::parse(t.shape)) <= 4);
    }
    CHECK(coh.size() == 14);
    CHECK(names.size() == 14);
    CHECK(hc3::named_tree("VR") == Tree::parse("[[],[[]]]"));
    CHECK_THROWS(hc3::named_tree("nope"));
}
