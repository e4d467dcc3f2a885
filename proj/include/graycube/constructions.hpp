#pragma once

#include "graycube/ids.hpp"
#include "graycube/pushout.hpp"

#include <cstdlib>
#include <map>
#include <mutex>

namespace graycube {

inline int default_max_cube_dim() { return 12; }

/// The single-point complex, bipointed at its only point.
inline ComplexPtr point()
{
    static const ComplexPtr p = make_complex(Complex::build({{ids::point, 0, {}, {}}}, Bipointing{ids::point, ids::point}));
    return p;
}

/// The arrow: basis {0, 1, i} with ∂⁺i = 1, ∂⁻i = 0, bipointed at (0, 1).
inline ComplexPtr interval()
{
    static const ComplexPtr p = make_complex(Complex::build(
        {{"0", 0, {}, {}}, {"1", 0, {}, {}}, {"i", 1, Chain::basis(0, "1"), Chain::basis(0, "0")}}, Bipointing{"0", "1"}));
    return p;
}

namespace detail {

inline Chain tensor_chain(const Chain& a, const Chain& b)
{
    Chain r(a.degree() + b.degree());
    for (auto& [x, j] : a.terms())
        for (auto& [y, k] : b.terms())
            r.add(ids::tensor(x, y), j * k);
    return r;
}

} // namespace detail

/// Gray tensor product of based complexes:
///   ∂^ε(x⊗y) = ∂^ε x ⊗ y + x ⊗ ∂^{ε'} y,  ε' = ε for |x| even, -ε for |x| odd.
/// Bipointed with the diagonal bipointing when both factors are.
inline ComplexPtr tensor(const ComplexPtr& a, const ComplexPtr& b)
{
    std::vector<BasisElement> basis;
    basis.reserve(a->size() * b->size());
    for (auto& x : a->basis())
        for (auto& y : b->basis()) {
            Chain px = Chain::basis(x.degree, x.id);
            Chain py = Chain::basis(y.degree, y.id);
            bool odd = x.degree % 2 != 0;
            Chain plus = detail::tensor_chain(x.plus, py) + detail::tensor_chain(px, odd ? y.minus : y.plus);
            Chain minus = detail::tensor_chain(x.minus, py) + detail::tensor_chain(px, odd ? y.plus : y.minus);
            basis.push_back({ids::tensor(x.id, y.id), x.degree + y.degree, std::move(plus), std::move(minus)});
        }
    std::optional<Bipointing> bp;
    if (a->is_bipointed() && b->is_bipointed())
        bp = Bipointing{ids::tensor(a->bipointing()->bottom, b->bipointing()->bottom),
                        ids::tensor(a->bipointing()->top, b->bipointing()->top)};
    return make_complex(Complex::build(std::move(basis), std::move(bp)));
}

/// f ⊗ g by bilinear extension.
inline Morphism tensor_morphism(const Morphism& f, const Morphism& g)
{
    auto src = tensor(f.source(), g.source());
    auto tgt = tensor(f.target(), g.target());
    std::vector<Chain> images(src->size());
    for (auto& x : f.source()->basis())
        for (auto& y : g.source()->basis())
            images[src->index_of(ids::tensor(x.id, y.id))] = detail::tensor_chain(f(x.id), g(y.id));
    return Morphism(src, tgt, std::move(images));
}

namespace detail {
inline int& cube_guard()
{
    static int guard = [] {
        if (const char* env = std::getenv("GRAYCUBE_MAX_DIM"))
            return std::atoi(env);
        return default_max_cube_dim();
    }();
    return guard;
}
} // namespace detail

/// Largest cube dimension `cube` will build (env GRAYCUBE_MAX_DIM, default 12).
inline int max_cube_dim() { return detail::cube_guard(); }
inline void set_max_cube_dim(int n) { detail::cube_guard() = n; }

/// □^n with its natural bipointing (0⃗, 1⃗). Basis ids are n-tuples over {0,1,i}.
inline ComplexPtr cube(int n)
{
    if (n < 0)
        throw DomainError("cube dimension must be nonnegative");
    if (n > max_cube_dim())
        throw ResourceError("cube dimension " + std::to_string(n) + " exceeds the configured bound " +
                            std::to_string(max_cube_dim()));
    static std::mutex mu;
    static std::map<int, ComplexPtr> memo;
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    ComplexPtr k = point();
    for (int i = 0; i < n; ++i)
        k = tensor(k, interval());
    memo.emplace(n, k);
    return k;
}

/// Sub-complex of elements of degree <= k, with its inclusion.
inline std::pair<ComplexPtr, Morphism> skeleton(const ComplexPtr& k, int degree)
{
    if (degree < 0)
        throw DomainError("skeleton degree must be nonnegative");
    std::vector<BasisElement> basis;
    for (auto& x : k->basis())
        if (x.degree <= degree)
            basis.push_back(x);
    auto sk = make_complex(Complex::build(std::move(basis), k->bipointing()));
    auto incl = Morphism::from_rule(sk, k, [](const BasisElement& x) { return Chain::basis(x.degree, x.id); });
    return {sk, incl};
}

/// ∂□^n, the (n-1)-skeleton of the n-cube.
inline std::pair<ComplexPtr, Morphism> cube_boundary(int n)
{
    if (n < 1)
        throw DomainError("the boundary of □^0 is empty");
    return skeleton(cube(n), n - 1);
}

/// ΣC: poles "0", "1" and a shifted copy s(x) of every basis element.
inline ComplexPtr suspension(const ComplexPtr& c)
{
    auto shift = [](const Chain& ch) {
        Chain r(ch.degree() + 1);
        for (auto& [id, k] : ch.terms())
            r.add(ids::suspension(id), k);
        return r;
    };
    std::vector<BasisElement> basis{{"0", 0, {}, {}}, {"1", 0, {}, {}}};
    for (auto& x : c->basis()) {
        if (x.degree == 0)
            basis.push_back({ids::suspension(x.id), 1, Chain::basis(0, "1"), Chain::basis(0, "0")});
        else
            basis.push_back({ids::suspension(x.id), x.degree + 1, shift(x.plus), shift(x.minus)});
    }
    return make_complex(Complex::build(std::move(basis), Bipointing{"0", "1"}));
}

inline Morphism suspension_morphism(const Morphism& f)
{
    auto src = suspension(f.source());
    auto tgt = suspension(f.target());
    return Morphism::from_rule(src, tgt, [&](const BasisElement& x) {
        if (x.id == "0" || x.id == "1")
            return Chain::basis(0, x.id);
        std::string inner = x.id.substr(2, x.id.size() - 3);
        Chain r(x.degree);
        for (auto& [id, k] : f(inner).terms())
            r.add(ids::suspension(id), k);
        return r;
    });
}

/// Constant map K -> L at the degree-0 element `p` of L.
inline Morphism const_map(const ComplexPtr& k, const ComplexPtr& l, const std::string& p)
{
    if (!l->contains(p) || l->at(p).degree != 0)
        throw DomainError("'" + p + "' is not a degree-0 basis element");
    return Morphism::from_rule(k, l, [&](const BasisElement& x) {
        return x.degree == 0 ? Chain::basis(0, p) : Chain(x.degree);
    });
}

/// The point p as a map □^0 -> L.
inline Morphism point_map(const ComplexPtr& l, const std::string& p) { return const_map(point(), l, p); }

/// {x} ⊗ id_B : B -> A ⊗ B (the source □^0 ⊗ B has the same ids as B).
inline Morphism left_face(const ComplexPtr& a, const std::string& x, const ComplexPtr& b)
{
    auto f = tensor_morphism(point_map(a, x), Morphism::identity(b));
    return rebased(f, b, f.target());
}

/// id_A ⊗ {y} : A -> A ⊗ B.
inline Morphism right_face(const ComplexPtr& a, const ComplexPtr& b, const std::string& y)
{
    auto f = tensor_morphism(Morphism::identity(a), point_map(b, y));
    return rebased(f, a, f.target());
}

/// The span □^0 -> C (top), □^0 -> D (bottom) glued into C ∨ D. C's elements
/// are tagged "L:", D's "R:"; the join keeps C's id. Bipointed at (bottom C, top D).
inline Pushout wedge_pushout(const ComplexPtr& c, const ComplexPtr& d)
{
    if (!c->is_bipointed() || !d->is_bipointed())
        throw DomainError("wedge needs bipointed operands");
    auto incl = point_map(d, d->bipointing()->bottom);
    auto gen = point_map(c, c->bipointing()->top);
    auto po = pushout(incl, gen, "R:", "L:");
    std::string bottom = po.from_general_side(c->bipointing()->bottom).terms().begin()->first;
    std::string top = po.from_inclusion_side(d->bipointing()->top).terms().begin()->first;
    return with_bipointing(std::move(po), Bipointing{bottom, top});
}

inline ComplexPtr wedge(const ComplexPtr& c, const ComplexPtr& d) { return wedge_pushout(c, d).object; }

/// Left-hand inclusion C -> C ∨ D.
inline Morphism wedge_left(const Pushout& w) { return w.from_general_side; }
/// Right-hand inclusion D -> C ∨ D.
inline Morphism wedge_right(const Pushout& w) { return w.from_inclusion_side; }

/// f ∨ g for maps that agree on the join (f sends top to top, g bottom to
/// bottom); neither needs to be bipointed otherwise.
inline Morphism wedge_of_maps(const Morphism& f, const Morphism& g)
{
    auto src = wedge_pushout(f.source(), g.source());
    auto tgt = wedge_pushout(f.target(), g.target());
    return induced_from_pushout(src, compose(wedge_right(tgt), g), compose(wedge_left(tgt), f));
}

/// Functoriality of ∨ on bipointed maps; non-bipointed inputs are rejected.
inline Morphism wedge_morphism(const Morphism& f, const Morphism& g)
{
    if (!is_bipointed(f) || !is_bipointed(g))
        throw DomainError("wedge_morphism needs bipointed maps");
    return wedge_of_maps(f, g);
}

} // namespace graycube
