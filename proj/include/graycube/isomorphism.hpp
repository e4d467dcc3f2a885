#pragma once

#include "graycube/morphism.hpp"

#include <optional>
#include <tuple>

namespace graycube {

/// Searches for a basis bijection A -> B that carries ∂⁺ to ∂⁺ and ∂⁻ to ∂⁻.
/// Exhaustive backtracking in ascending degree, pruned by a local signature;
/// meant for the small complexes used to cross-check canonical identifications.
inline std::optional<Morphism> find_isomorphism(const ComplexPtr& a, const ComplexPtr& b, std::size_t node_cap = 5'000'000)
{
    if (a->size() != b->size() || a->dim() != b->dim())
        return std::nullopt;
    for (int k = 0; k <= a->dim(); ++k)
        if (a->count_of_degree(k) != b->count_of_degree(k))
            return std::nullopt;

    // signature: degree, |∂⁺|, |∂⁻|, and number of cofaces on each side
    auto signature = [](const Complex& k) {
        std::vector<std::tuple<int, std::size_t, std::size_t, int, int>> sig(k.size());
        std::vector<int> up_plus(k.size(), 0), up_minus(k.size(), 0);
        for (auto& x : k.basis()) {
            for (auto& [id, c] : x.plus.terms())
                up_plus[k.index_of(id)] += static_cast<int>(c);
            for (auto& [id, c] : x.minus.terms())
                up_minus[k.index_of(id)] += static_cast<int>(c);
        }
        for (std::size_t i = 0; i < k.size(); ++i) {
            auto& x = k.at(i);
            sig[i] = {x.degree, x.plus.size(), x.minus.size(), up_plus[i], up_minus[i]};
        }
        return sig;
    };
    auto sa = signature(*a);
    auto sb = signature(*b);

    std::vector<std::size_t> map(a->size(), b->size());
    std::vector<bool> used(b->size(), false);
    std::size_t nodes = 0;

    auto image_of = [&](const Chain& c, Chain& out) {
        out = Chain(c.degree());
        for (auto& [id, k] : c.terms())
            out.add(b->at(map[a->index_of(id)]).id, k);
    };

    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == a->size())
            return true;
        if (++nodes > node_cap)
            throw ResourceError("isomorphism search exceeded its node cap");
        auto& x = a->at(i);
        Chain plus, minus;
        if (x.degree > 0) {
            image_of(x.plus, plus);
            image_of(x.minus, minus);
        }
        for (auto j : b->of_degree(x.degree)) {
            if (used[j] || sa[i] != sb[j])
                continue;
            auto& y = b->at(j);
            if (x.degree > 0 && (!(plus == y.plus) || !(minus == y.minus)))
                continue;
            map[i] = j;
            used[j] = true;
            if (assign(i + 1))
                return true;
            used[j] = false;
        }
        map[i] = b->size();
        return false;
    };
    // basis is sorted by degree, so faces are always assigned before cofaces
    if (!assign(0))
        return std::nullopt;
    std::unordered_map<std::string, std::string> rename;
    for (std::size_t i = 0; i < a->size(); ++i)
        rename.emplace(a->at(i).id, b->at(map[i]).id);
    return relabeling(a, b, [&](const std::string& id) { return rename.at(id); });
}

inline bool isomorphic(const ComplexPtr& a, const ComplexPtr& b) { return find_isomorphism(a, b).has_value(); }

} // namespace graycube
