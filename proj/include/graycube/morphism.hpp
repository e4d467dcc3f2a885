#pragma once

#include "graycube/complex.hpp"

#include <functional>
#include <string>
#include <vector>

namespace graycube {

/// A map of augmented directed complexes, given by the image of each
/// source basis element as a chain in the target.
class Morphism {
public:
    Morphism() = default;

    /// Throws StructuralError if an assignment is missing, references an
    /// unknown target id, or has the wrong degree.
    Morphism(ComplexPtr source, ComplexPtr target, std::vector<Chain> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
    {
        if (images_.size() != source_->size())
            throw StructuralError("morphism assigns " + std::to_string(images_.size()) + " images to a complex of " +
                                  std::to_string(source_->size()) + " basis elements");
        for (std::size_t i = 0; i < images_.size(); ++i) {
            auto& x = source_->at(i);
            auto& c = images_[i];
            c.set_degree(x.degree);
            for (auto& [id, k] : c.terms()) {
                if (!target_->contains(id))
                    throw StructuralError("image of '" + x.id + "' references unknown target id '" + id + "'");
                if (target_->at(id).degree != x.degree)
                    throw StructuralError("image of '" + x.id + "' has the wrong degree");
            }
        }
    }

    /// Builds a morphism from a rule evaluated on each source basis element.
    static Morphism from_rule(ComplexPtr source, ComplexPtr target,
                              const std::function<Chain(const BasisElement&)>& rule)
    {
        std::vector<Chain> images;
        images.reserve(source->size());
        for (auto& x : source->basis())
            images.push_back(rule(x));
        return Morphism(std::move(source), std::move(target), std::move(images));
    }

    static Morphism identity(const ComplexPtr& k)
    {
        return from_rule(k, k, [](const BasisElement& x) { return Chain::basis(x.degree, x.id); });
    }

    const ComplexPtr& source() const { return source_; }
    const ComplexPtr& target() const { return target_; }
    const std::vector<Chain>& images() const { return images_; }

    const Chain& operator()(const std::string& id) const { return images_[source_->index_of(id)]; }
    const Chain& image(std::size_t i) const { return images_[i]; }

    /// Linear extension to a chain of the source.
    Chain apply(const Chain& c) const
    {
        Chain r(c.degree());
        for (auto& [id, k] : c.terms())
            r += (*this)(id).scaled(k);
        return r;
    }

    friend bool operator==(const Morphism& a, const Morphism& b)
    {
        return a.source_->same_structure(*b.source_) && a.target_->same_structure(*b.target_) &&
               a.images_ == b.images_;
    }

private:
    ComplexPtr source_;
    ComplexPtr target_;
    std::vector<Chain> images_;
};

enum class MorphismAxiom { ChainMap, Positive, Augmented };

inline const char* axiom_name(MorphismAxiom a)
{
    switch (a) {
    case MorphismAxiom::ChainMap: return "chain-map";
    case MorphismAxiom::Positive: return "positive";
    case MorphismAxiom::Augmented: return "augmented";
    }
    return "?";
}

struct MorphismViolation {
    MorphismAxiom axiom;
    std::string witness;
    std::string detail;
    std::string to_string() const { return std::string(axiom_name(axiom)) + " at " + witness + ": " + detail; }
};

using MorphismReport = std::vector<MorphismViolation>;

/// Lists the first basis element violating each morphism axiom.
inline MorphismReport validate_morphism(const Morphism& f)
{
    MorphismReport report;
    bool chain_ok = true, pos_ok = true, aug_ok = true;
    auto& src = *f.source();
    auto& tgt = *f.target();
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto& x = src.at(i);
        auto& fx = f.image(i);
        if (pos_ok && !fx.is_positive()) {
            pos_ok = false;
            report.push_back({MorphismAxiom::Positive, x.id, "f(x) = " + fx.to_string()});
        }
        if (x.degree == 0) {
            if (aug_ok && fx.augmentation() != 1) {
                aug_ok = false;
                report.push_back({MorphismAxiom::Augmented, x.id, "e(f(x)) = " + std::to_string(fx.augmentation())});
            }
        }
        else if (chain_ok) {
            Chain lhs = tgt.boundary(fx);
            Chain rhs = f.apply(src.boundary(x.id));
            if (!(lhs == rhs)) {
                chain_ok = false;
                report.push_back({MorphismAxiom::ChainMap, x.id,
                                  "d f(x) = " + lhs.to_string() + " but f(d x) = " + rhs.to_string()});
            }
        }
    }
    return report;
}

inline bool is_valid(const Morphism& f) { return validate_morphism(f).empty(); }

/// g ∘ f.
inline Morphism compose(const Morphism& g, const Morphism& f)
{
    if (!f.target()->same_structure(*g.source()))
        throw CompositionError("cannot compose: target of the first map differs from the source of the second");
    std::vector<Chain> images;
    images.reserve(f.images().size());
    for (auto& c : f.images())
        images.push_back(g.apply(c));
    return Morphism(f.source(), g.target(), std::move(images));
}

template <class... Rest>
Morphism compose(const Morphism& h, const Morphism& g, const Morphism& f, const Rest&... rest)
{
    return compose(compose(h, g), f, rest...);
}

inline bool is_identity(const Morphism& f)
{
    if (!f.source()->same_structure(*f.target()))
        return false;
    for (std::size_t i = 0; i < f.images().size(); ++i) {
        auto& c = f.image(i);
        auto& x = f.source()->at(i);
        if (c.size() != 1 || c.coefficient(x.id) != 1)
            return false;
    }
    return true;
}

/// Preserves both chosen points. False when either side is not bipointed.
inline bool is_bipointed(const Morphism& f)
{
    auto& a = f.source()->bipointing();
    auto& b = f.target()->bipointing();
    if (!a || !b)
        return false;
    return f(a->bottom) == Chain::basis(0, b->bottom) && f(a->top) == Chain::basis(0, b->top);
}

/// Basis bijection given by a renaming of ids; verified to be an
/// isomorphism of complexes (differential parts map onto differential parts).
inline Morphism relabeling(const ComplexPtr& from, const ComplexPtr& to,
                           const std::function<std::string(const std::string&)>& rename)
{
    if (from->size() != to->size())
        throw ConstructionError("relabeling between complexes of different sizes");
    std::vector<Chain> images;
    std::vector<bool> hit(to->size(), false);
    auto map_chain = [&](const Chain& c) {
        Chain r(c.degree());
        for (auto& [id, k] : c.terms())
            r.add(rename(id), k);
        return r;
    };
    for (auto& x : from->basis()) {
        std::string y = rename(x.id);
        if (!to->contains(y))
            throw ConstructionError("relabeling sends '" + x.id + "' to unknown id '" + y + "'");
        auto idx = to->index_of(y);
        if (hit[idx])
            throw ConstructionError("relabeling is not injective at '" + y + "'");
        hit[idx] = true;
        auto& e = to->at(idx);
        if (e.degree != x.degree || !(map_chain(x.plus) == e.plus) || !(map_chain(x.minus) == e.minus))
            throw ConstructionError("relabeling does not preserve the differential at '" + x.id + "'");
        images.push_back(Chain::basis(x.degree, y));
    }
    return Morphism(from, to, std::move(images));
}

/// Inverse of a morphism that maps basis elements bijectively onto basis elements.
inline Morphism inverse_relabeling(const Morphism& f)
{
    std::vector<std::string> back(f.target()->size());
    std::vector<bool> hit(f.target()->size(), false);
    for (std::size_t i = 0; i < f.images().size(); ++i) {
        auto& c = f.image(i);
        if (c.size() != 1 || c.terms().begin()->second != 1)
            throw ConstructionError("not a basis bijection at '" + f.source()->at(i).id + "'");
        auto j = f.target()->index_of(c.terms().begin()->first);
        if (hit[j])
            throw ConstructionError("not injective");
        hit[j] = true;
        back[j] = f.source()->at(i).id;
    }
    if (f.images().size() != f.target()->size())
        throw ConstructionError("not surjective");
    std::unordered_map<std::string, std::string> rename;
    for (std::size_t j = 0; j < back.size(); ++j)
        rename.emplace(f.target()->at(j).id, back[j]);
    return relabeling(f.target(), f.source(), [&](const std::string& id) { return rename.at(id); });
}

/// Same assignment viewed between complexes with different bipointings.
inline Morphism rebased(const Morphism& f, ComplexPtr source, ComplexPtr target)
{
    if (!source->same_structure(*f.source()) || !target->same_structure(*f.target()))
        throw CompositionError("rebased morphism must keep the underlying complexes");
    return Morphism(std::move(source), std::move(target), f.images());
}

} // namespace graycube
