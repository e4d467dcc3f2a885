#pragma once

#include "graycube/isomorphism.hpp"
#include "graycube/retractions.hpp"

#include <cctype>

namespace graycube {

/// A planar rooted tree; the leaf (no children) is □^0 and a node with
/// children c1..ck is Σc1 ∨ ... ∨ Σck.
struct ThetaTree {
    std::vector<ThetaTree> children;

    bool is_leaf() const { return children.empty(); }
    friend bool operator==(const ThetaTree&, const ThetaTree&) = default;
};

/// Nested parentheses, e.g. "()" leaf, "(()())" = [2], "((()))" 2-globe.
/// Whitespace is ignored.
inline ThetaTree parse_theta(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    std::size_t pos = 0;
    std::function<ThetaTree()> node = [&]() {
        if (pos >= s.size() || s[pos] != '(')
            throw DomainError("tree syntax: expected '(' at offset " + std::to_string(pos));
        ++pos;
        ThetaTree t;
        while (pos < s.size() && s[pos] == '(')
            t.children.push_back(node());
        if (pos >= s.size() || s[pos] != ')')
            throw DomainError("tree syntax: expected ')' at offset " + std::to_string(pos));
        ++pos;
        return t;
    };
    ThetaTree t = node();
    if (pos != s.size())
        throw DomainError("tree syntax: trailing characters at offset " + std::to_string(pos));
    return t;
}

inline std::string to_string(const ThetaTree& t)
{
    std::string out = "(";
    for (auto& c : t.children)
        out += to_string(c);
    return out + ")";
}

inline int dimension(const ThetaTree& t)
{
    int d = 0;
    for (auto& c : t.children)
        d = std::max(d, dimension(c) + 1);
    return d;
}

inline int point_count(const ThetaTree& t) { return t.is_leaf() ? 1 : static_cast<int>(t.children.size()) + 1; }

/// N(t): the cube dimension of the witness, Σ (N(ci) + 1).
inline int witness_cube_dim(const ThetaTree& t)
{
    int n = 0;
    for (auto& c : t.children)
        n += witness_cube_dim(c) + 1;
    return n;
}

/// Linear tree of depth d (the d-globe).
inline ThetaTree globe_tree(int d)
{
    ThetaTree t;
    for (int i = 0; i < d; ++i)
        t = ThetaTree{{t}};
    return t;
}

/// All trees with exactly `edges` non-root nodes, in canonical order.
inline std::vector<ThetaTree> trees_with_edges(int edges)
{
    if (edges == 0)
        return {ThetaTree{}};
    std::vector<ThetaTree> out;
    // first child uses k edges below it (plus its own), the rest is a forest
    for (int k = 0; k < edges; ++k)
        for (auto& first : trees_with_edges(k))
            for (auto& rest : trees_with_edges(edges - 1 - k)) {
                ThetaTree t{{first}};
                t.children.insert(t.children.end(), rest.children.begin(), rest.children.end());
                out.push_back(std::move(t));
            }
    return out;
}

inline ComplexPtr theta_to_adc(const ThetaTree& t)
{
    if (t.is_leaf())
        return point();
    ComplexPtr acc = suspension(theta_to_adc(t.children.front()));
    for (std::size_t i = 1; i < t.children.size(); ++i)
        acc = wedge(acc, suspension(theta_to_adc(t.children[i])));
    return acc;
}

/// Exhibits theta_to_adc(t) as a bipointed retract of □^N(t).
inline RetractWitness theta_witness(const ThetaTree& t)
{
    int n = witness_cube_dim(t);
    if (n > max_cube_dim())
        throw ResourceError("tree needs □^" + std::to_string(n) + ", above the configured bound " +
                            std::to_string(max_cube_dim()));
    static detail::Memo<std::string, RetractWitness> memo;
    return memo.get(to_string(t), [&] {
        if (t.is_leaf())
            return trivial_witness(0);
        RetractWitness acc = lift_retract(LiftOp::Suspension, theta_witness(t.children.front()));
        for (std::size_t i = 1; i < t.children.size(); ++i)
            acc = lift_retract(LiftOp::Wedge, acc, lift_retract(LiftOp::Suspension, theta_witness(t.children[i])));
        return acc;
    });
}

/// Witness invariants, plus agreement of the object with the tree's complex
/// (up to relabeling) when a tree is given.
inline std::vector<std::string> verify_theta_witness(const RetractWitness& w, const std::optional<ThetaTree>& tree = std::nullopt)
{
    auto report = verify_witness(w);
    if (tree && w.object) {
        auto expected = theta_to_adc(*tree);
        if (witness_cube_dim(*tree) != w.cube_dim)
            report.push_back("cube dimension differs from the tree's");
        bool same = *expected == *w.object;
        if (!same) {
            try {
                auto iso = find_isomorphism(expected, w.object);
                auto& eb = expected->bipointing();
                auto& ob = w.object->bipointing();
                same = iso && eb && ob && (*iso)(eb->bottom) == Chain::basis(0, ob->bottom) &&
                       (*iso)(eb->top) == Chain::basis(0, ob->top);
            }
            catch (const ResourceError&) {
                same = false;
            }
        }
        if (!same)
            report.push_back("object does not match the tree");
    }
    return report;
}

} // namespace graycube
