#pragma once

#include "graycube/chain.hpp"
#include "graycube/error.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace graycube {

struct BasisElement {
    std::string id;
    int degree = 0;
    Chain plus;  ///< positive part of the differential
    Chain minus; ///< negative part of the differential
};

struct Bipointing {
    std::string bottom;
    std::string top;
    friend bool operator==(const Bipointing&, const Bipointing&) = default;
};

/// An augmented directed complex with basis. Immutable once built; the
/// basis is kept sorted by (degree, id) so that equal complexes compare
/// equal element by element.
class Complex {
public:
    /// Checks well-formedness (not the complex axioms) and throws
    /// StructuralError on unresolved ids or inconsistent degrees.
    static Complex build(std::vector<BasisElement> basis, std::optional<Bipointing> bipointing = std::nullopt)
    {
        Complex k;
        std::sort(basis.begin(), basis.end(), [](const BasisElement& a, const BasisElement& b) {
            return a.degree != b.degree ? a.degree < b.degree : a.id < b.id;
        });
        k.basis_ = std::move(basis);
        k.dim_ = -1;
        for (std::size_t i = 0; i < k.basis_.size(); ++i) {
            auto& x = k.basis_[i];
            if (x.degree < 0)
                throw StructuralError("basis element '" + x.id + "' has negative degree");
            if (!k.index_.emplace(x.id, i).second)
                throw StructuralError("duplicate basis id '" + x.id + "'");
            k.dim_ = std::max(k.dim_, x.degree);
        }
        k.by_degree_.assign(static_cast<std::size_t>(k.dim_ + 1), {});
        for (std::size_t i = 0; i < k.basis_.size(); ++i) {
            auto& x = k.basis_[i];
            k.by_degree_[static_cast<std::size_t>(x.degree)].push_back(i);
            x.plus.set_degree(x.degree - 1);
            x.minus.set_degree(x.degree - 1);
            if (x.degree == 0 && (!x.plus.is_zero() || !x.minus.is_zero()))
                throw StructuralError("degree-0 element '" + x.id + "' has a nonzero differential");
            for (const Chain* part : {&x.plus, &x.minus}) {
                if (!part->is_positive())
                    throw StructuralError("differential part of '" + x.id + "' is not positive");
                for (auto& [id, c] : part->terms()) {
                    auto it = k.index_.find(id);
                    if (it == k.index_.end())
                        throw StructuralError("differential of '" + x.id + "' references unknown id '" + id + "'");
                    if (k.basis_[it->second].degree != x.degree - 1)
                        throw StructuralError("differential of '" + x.id + "' references '" + id +
                                              "' of the wrong degree");
                }
            }
        }
        if (bipointing) {
            for (auto* id : {&bipointing->bottom, &bipointing->top}) {
                auto it = k.index_.find(*id);
                if (it == k.index_.end() || k.basis_[it->second].degree != 0)
                    throw StructuralError("bipointing id '" + *id + "' is not a degree-0 basis element");
            }
        }
        k.bipointing_ = std::move(bipointing);
        return k;
    }

    const std::vector<BasisElement>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }
    /// Highest degree present, -1 for the empty complex.
    int dim() const { return dim_; }

    bool contains(const std::string& id) const { return index_.count(id) != 0; }
    std::size_t index_of(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end())
            throw StructuralError("unknown basis id '" + id + "'");
        return it->second;
    }
    const BasisElement& at(const std::string& id) const { return basis_[index_of(id)]; }
    const BasisElement& at(std::size_t i) const { return basis_[i]; }

    /// Indices of the basis elements of degree k (empty when out of range).
    const std::vector<std::size_t>& of_degree(int k) const
    {
        static const std::vector<std::size_t> none;
        if (k < 0 || k > dim_)
            return none;
        return by_degree_[static_cast<std::size_t>(k)];
    }
    std::size_t count_of_degree(int k) const { return of_degree(k).size(); }

    const std::optional<Bipointing>& bipointing() const { return bipointing_; }
    bool is_bipointed() const { return bipointing_.has_value(); }

    Complex with_bipointing(std::optional<Bipointing> b) const
    {
        return build(basis_, std::move(b));
    }

    /// Net differential of a basis element.
    Chain boundary(const std::string& id) const
    {
        auto& x = at(id);
        return x.plus - x.minus;
    }

    /// Net differential of a chain, extended linearly.
    Chain boundary(const Chain& c) const
    {
        Chain r(c.degree() - 1);
        for (auto& [id, k] : c.terms()) {
            auto& x = at(id);
            r += x.plus.scaled(k);
            r -= x.minus.scaled(k);
        }
        return r;
    }

    /// Same basis and differentials; the bipointing is not compared.
    bool same_structure(const Complex& o) const
    {
        if (this == &o)
            return true;
        if (basis_.size() != o.basis_.size())
            return false;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            auto& a = basis_[i];
            auto& b = o.basis_[i];
            if (a.id != b.id || a.degree != b.degree || !(a.plus == b.plus) || !(a.minus == b.minus))
                return false;
        }
        return true;
    }

    friend bool operator==(const Complex& a, const Complex& b)
    {
        return a.same_structure(b) && a.bipointing_ == b.bipointing_;
    }

private:
    std::vector<BasisElement> basis_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> by_degree_;
    std::optional<Bipointing> bipointing_;
    int dim_ = -1;
};

using ComplexPtr = std::shared_ptr<const Complex>;

inline ComplexPtr make_complex(Complex k) { return std::make_shared<const Complex>(std::move(k)); }

/// Iterated ∂⁻ (sign = -1) or ∂⁺ (sign = +1) of a chain down to degree `to`,
/// taking positive/negative parts of the net differential at each step.
inline Chain iterated_face(const Complex& k, Chain c, int sign, int to)
{
    while (c.degree() > to) {
        Chain d = k.boundary(c);
        c = sign > 0 ? d.positive_part() : d.negative_part();
    }
    return c;
}

enum class Axiom { BoundarySquared, Augmentation, Unital, LoopFree };

inline const char* axiom_name(Axiom a)
{
    switch (a) {
    case Axiom::BoundarySquared: return "boundary-squared";
    case Axiom::Augmentation: return "augmentation";
    case Axiom::Unital: return "unital";
    case Axiom::LoopFree: return "strongly-loop-free";
    }
    return "?";
}

struct Violation {
    Axiom axiom;
    std::string witness; ///< offending basis element, or a cycle "a -> b -> a"
    std::string detail;
    std::string to_string() const { return std::string(axiom_name(axiom)) + " at " + witness + ": " + detail; }
};

using ValidationReport = std::vector<Violation>;

namespace detail {

// Precedence relation: x < y iff x occurs in ∂⁻y or y occurs in ∂⁺x.
// Returns a cycle (as basis indices) when one exists.
inline std::vector<std::size_t> find_precedence_cycle(const Complex& k)
{
    std::size_t n = k.size();
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t y = 0; y < n; ++y) {
        auto& e = k.at(y);
        for (auto& [id, c] : e.minus.terms())
            succ[k.index_of(id)].push_back(y);
        for (auto& [id, c] : e.plus.terms())
            succ[y].push_back(k.index_of(id));
    }
    // iterative DFS with colours
    std::vector<int> colour(n, 0);
    std::vector<std::size_t> parent(n, n);
    for (std::size_t root = 0; root < n; ++root) {
        if (colour[root])
            continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        colour[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < succ[v].size()) {
                std::size_t w = succ[v][next++];
                if (colour[w] == 1) {
                    std::vector<std::size_t> cycle{w};
                    for (std::size_t u = v; u != w; u = parent[u])
                        cycle.push_back(u);
                    cycle.push_back(w);
                    std::reverse(cycle.begin(), cycle.end());
                    return cycle;
                }
                if (colour[w] == 0) {
                    colour[w] = 1;
                    parent[w] = v;
                    stack.emplace_back(w, 0);
                }
            }
            else {
                colour[v] = 2;
                stack.pop_back();
            }
        }
    }
    return {};
}

} // namespace detail

/// Checks the complex axioms: ∂∂ = 0, e∂ = 0, unitality and strong
/// loop-freeness. An empty report means the complex is valid.
inline ValidationReport validate_complex(const Complex& k)
{
    ValidationReport report;
    for (auto& x : k.basis()) {
        if (x.degree >= 2) {
            Chain dd = k.boundary(k.boundary(x.id));
            if (!dd.is_zero())
                report.push_back({Axiom::BoundarySquared, x.id, "dd = " + dd.to_string()});
        }
        if (x.degree == 1) {
            Coefficient e = k.boundary(x.id).augmentation();
            if (e != 0)
                report.push_back({Axiom::Augmentation, x.id, "e(d x) = " + std::to_string(e)});
        }
        Chain atom = Chain::basis(x.degree, x.id);
        Coefficient lo = iterated_face(k, atom, -1, 0).augmentation();
        Coefficient hi = iterated_face(k, atom, +1, 0).augmentation();
        if (lo != 1 || hi != 1)
            report.push_back({Axiom::Unital, x.id,
                              "e(x-_0) = " + std::to_string(lo) + ", e(x+_0) = " + std::to_string(hi)});
    }
    auto cycle = detail::find_precedence_cycle(k);
    if (!cycle.empty()) {
        std::string w;
        for (auto i : cycle)
            w += (w.empty() ? "" : " -> ") + k.at(i).id;
        report.push_back({Axiom::LoopFree, w, "precedence relation has a cycle"});
    }
    return report;
}

inline bool is_valid(const Complex& k) { return validate_complex(k).empty(); }

} // namespace graycube
