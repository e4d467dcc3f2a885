#pragma once

#include "graycube/morphism.hpp"

#include <unordered_set>

namespace graycube {

/// Result of gluing along a span C <-incl- A -general-> D.
struct Pushout {
    Morphism leg_inclusion; ///< A -> C, basis-monic
    Morphism leg_general;   ///< A -> D
    ComplexPtr object;
    Morphism from_inclusion_side; ///< C -> P
    Morphism from_general_side;   ///< D -> P
    /// For each basis element of P: true if it comes from C, with its original id.
    std::unordered_map<std::string, std::pair<bool, std::string>> origin;
};

inline bool is_basis_monic(const Morphism& f)
{
    std::unordered_set<std::string> seen;
    for (auto& c : f.images()) {
        if (c.size() != 1 || c.terms().begin()->second != 1)
            return false;
        if (!seen.insert(c.terms().begin()->first).second)
            return false;
    }
    return true;
}

/// Degreewise quotient of C ⊕ D by incl(a) ~ general(a). Basis of the result:
/// the elements of C outside the image of `incl` (tagged `inclusion_tag`) and
/// all elements of D (tagged `general_tag`). Throws PushoutError when the
/// quotient is not a based augmented directed complex.
inline Pushout pushout(const Morphism& incl, const Morphism& general, const std::string& inclusion_tag = "L:",
                       const std::string& general_tag = "R:")
{
    if (!incl.source()->same_structure(*general.source()))
        throw StructuralError("pushout legs must share their source");
    if (!is_basis_monic(incl))
        throw PushoutError("pushout requires a basis-monic inclusion leg");

    const Complex& a = *incl.source();
    const Complex& c = *incl.target();
    const Complex& d = *general.target();

    std::unordered_map<std::string, std::size_t> preimage; // id in C -> index in A
    for (std::size_t i = 0; i < a.size(); ++i)
        preimage.emplace(incl.image(i).terms().begin()->first, i);

    auto tag_d = [&](const Chain& ch) {
        Chain r(ch.degree());
        for (auto& [id, k] : ch.terms())
            r.add(general_tag + id, k);
        return r;
    };
    auto quotient_c = [&](const Chain& ch) {
        Chain r(ch.degree());
        for (auto& [id, k] : ch.terms()) {
            auto it = preimage.find(id);
            if (it == preimage.end())
                r.add(inclusion_tag + id, k);
            else
                r += tag_d(general.image(it->second)).scaled(k);
        }
        return r;
    };

    Pushout po{incl, general, nullptr, {}, {}, {}};
    std::vector<BasisElement> basis;
    for (auto& y : d.basis()) {
        basis.push_back({general_tag + y.id, y.degree, tag_d(y.plus), tag_d(y.minus)});
        po.origin[general_tag + y.id] = {false, y.id};
    }
    for (auto& x : c.basis()) {
        if (preimage.count(x.id))
            continue;
        Chain plus = quotient_c(x.plus);
        Chain minus = quotient_c(x.minus);
        if (plus.shares_support(minus))
            throw PushoutError("non-basic pushout: differential of '" + x.id + "' cancels in the quotient");
        std::string id = inclusion_tag + x.id;
        if (po.origin.count(id))
            throw PushoutError("pushout id collision at '" + id + "'");
        basis.push_back({id, x.degree, std::move(plus), std::move(minus)});
        po.origin[id] = {true, x.id};
    }
    Complex p = Complex::build(std::move(basis));
    auto report = validate_complex(p);
    if (!report.empty())
        throw PushoutError("non-basic pushout: " + report.front().to_string());
    po.object = make_complex(std::move(p));
    po.from_inclusion_side =
        Morphism::from_rule(incl.target(), po.object, [&](const BasisElement& x) { return quotient_c(Chain::basis(x.degree, x.id)); });
    po.from_general_side =
        Morphism::from_rule(general.target(), po.object, [&](const BasisElement& y) { return Chain::basis(y.degree, general_tag + y.id); });
    return po;
}

/// The pushout with a chosen bipointing on its object; the cocone maps are
/// rebased onto the new object.
inline Pushout with_bipointing(Pushout po, std::optional<Bipointing> b)
{
    auto obj = make_complex(po.object->with_bipointing(std::move(b)));
    po.from_inclusion_side = rebased(po.from_inclusion_side, po.from_inclusion_side.source(), obj);
    po.from_general_side = rebased(po.from_general_side, po.from_general_side.source(), obj);
    po.object = obj;
    return po;
}

/// The unique map out of the pushout restricting to `on_inclusion_side`
/// (C -> X) and `on_general_side` (D -> X).
inline Morphism induced_from_pushout(const Pushout& po, const Morphism& on_inclusion_side,
                                     const Morphism& on_general_side)
{
    if (!on_inclusion_side.source()->same_structure(*po.leg_inclusion.target()) ||
        !on_general_side.source()->same_structure(*po.leg_general.target()))
        throw CompositionError("cocone legs do not start at the span's feet");
    if (!on_inclusion_side.target()->same_structure(*on_general_side.target()))
        throw CompositionError("cocone legs have different targets");
    Morphism lhs = compose(on_inclusion_side, po.leg_inclusion);
    Morphism rhs = compose(on_general_side, po.leg_general);
    for (std::size_t i = 0; i < lhs.images().size(); ++i)
        if (!(lhs.image(i) == rhs.image(i)))
            throw CoconeError("cocone legs disagree at '" + lhs.source()->at(i).id + "': " + lhs.image(i).to_string() +
                              " vs " + rhs.image(i).to_string());
    Morphism out = Morphism::from_rule(po.object, on_general_side.target(), [&](const BasisElement& p) {
        auto& [from_c, id] = po.origin.at(p.id);
        return from_c ? on_inclusion_side(id) : on_general_side(id);
    });
    auto report = validate_morphism(out);
    if (!report.empty())
        throw ConstructionError("induced map is not a morphism: " + report.front().to_string());
    return out;
}

} // namespace graycube
