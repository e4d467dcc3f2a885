#pragma once

#include "graycube/constructions.hpp"
#include "graycube/sections.hpp"

#include <map>
#include <mutex>
#include <optional>

namespace graycube {

namespace detail {

// Thread-safe memo table. Values are computed outside the lock (construction
// recurses into other memo entries) and the first insertion wins; every
// computation of a key yields the same value.
template <class Key, class Value>
class Memo {
public:
    template <class F>
    const Value& get(const Key& key, F&& compute)
    {
        {
            std::lock_guard lock(mu_);
            if (auto it = table_.find(key); it != table_.end())
                return *it->second;
        }
        auto value = std::make_shared<const Value>(compute());
        std::lock_guard lock(mu_);
        return *table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, std::shared_ptr<const Value>> table_;
};

// Swap 0 <-> 1 in every coordinate of a cube id.
inline std::string flip_corners(const std::string& id)
{
    auto parts = ids::components(id);
    if (id == ids::point)
        return id;
    for (auto& p : parts)
        p = p == "0" ? "1" : p == "1" ? "0" : p;
    return ids::join(parts);
}

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw ConstructionError(what);
}

inline void require_valid(const Morphism& f, const std::string& name)
{
    auto report = validate_morphism(f);
    if (!report.empty())
        throw ConstructionError(name + " is not a valid morphism: " + report.front().to_string());
}

} // namespace detail

inline ComplexPtr suspended_cube(int n)
{
    static detail::Memo<int, ComplexPtr> memo;
    return memo.get(n, [&] { return suspension(cube(n)); });
}

/// □^m ∨ □^n as a pushout (left elements tagged "L:", right "R:").
inline const Pushout& cube_wedge(int m, int n)
{
    static detail::Memo<std::pair<int, int>, Pushout> memo;
    return memo.get({m, n}, [&] { return wedge_pushout(cube(m), cube(n)); });
}

/// (□^m ⊗ □^1) ∪_{□^1} (□^n ⊗ □^1), glued along 1⃗ ⊗ □^1 ~ 0⃗ ⊗ □^1.
inline const Pushout& tensor_split(int m, int n)
{
    static detail::Memo<std::pair<int, int>, Pushout> memo;
    return memo.get({m, n}, [&] {
        auto incl = left_face(cube(n), ids::cube_corner(n, '0'), interval());
        auto gen = left_face(cube(m), ids::cube_corner(m, '1'), interval());
        auto po = pushout(incl, gen, "R:", "L:");
        auto bottom = po.from_general_side(ids::tensor(ids::cube_corner(m, '0'), "0")).terms().begin()->first;
        auto top = po.from_inclusion_side(ids::tensor(ids::cube_corner(n, '1'), "1")).terms().begin()->first;
        return with_bipointing(std::move(po), Bipointing{bottom, top});
    });
}

/// (□^1 ⊗ □^m) ∪_{□^1} (□^1 ⊗ □^n), glued along □^1 ⊗ 1⃗ ~ □^1 ⊗ 0⃗.
inline const Pushout& tensor_split_dual(int m, int n)
{
    static detail::Memo<std::pair<int, int>, Pushout> memo;
    return memo.get({m, n}, [&] {
        auto incl = right_face(interval(), cube(n), ids::cube_corner(n, '0'));
        auto gen = right_face(interval(), cube(m), ids::cube_corner(m, '1'));
        auto po = pushout(incl, gen, "R:", "L:");
        auto bottom = po.from_general_side(ids::tensor("0", ids::cube_corner(m, '0'))).terms().begin()->first;
        auto top = po.from_inclusion_side(ids::tensor("1", ids::cube_corner(n, '1'))).terms().begin()->first;
        return with_bipointing(std::move(po), Bipointing{bottom, top});
    });
}

/// (□^m ∨ □^n) ⊗ □^1 ≅ tensor_split(m, n): "(T:x|c)" <-> "T:(x|c)".
inline Morphism split_tensor_identification(int m, int n)
{
    auto src = tensor(cube_wedge(m, n).object, interval());
    auto& p = tensor_split(m, n);
    return relabeling(src, p.object, [](const std::string& id) {
        auto parts = ids::components(id);
        return parts[0].substr(0, 2) + ids::tensor(parts[0].substr(2), parts[1]);
    });
}

/// □^1 ⊗ (□^m ∨ □^n) ≅ tensor_split_dual(m, n): "(c|T:x)" <-> "T:(c|x)".
inline Morphism split_tensor_identification_dual(int m, int n)
{
    auto src = tensor(interval(), cube_wedge(m, n).object);
    auto& p = tensor_split_dual(m, n);
    return relabeling(src, p.object, [](const std::string& id) {
        auto parts = ids::components(id);
        return parts[1].substr(0, 2) + ids::tensor(parts[0], parts[1].substr(2));
    });
}

/// ι_{m,n} : □^m ∨ □^n -> □^{m+n}, placing □^m along 0⃗ in the second factor
/// and □^n along 1⃗ in the first.
inline Morphism iota(int m, int n)
{
    static detail::Memo<std::pair<int, int>, Morphism> memo;
    return memo.get({m, n}, [&] {
        auto& w = cube_wedge(m, n);
        auto bottom_leg = right_face(cube(m), cube(n), ids::cube_corner(n, '0'));
        auto right_leg = left_face(cube(m), ids::cube_corner(m, '1'), cube(n));
        auto f = induced_from_pushout(w, right_leg, bottom_leg);
        f = rebased(f, w.object, cube(m + n));
        detail::require(is_bipointed(f), "iota is not bipointed");
        return f;
    });
}

Morphism rho(int m, int n);

/// η_{m,n} : □^m ∨ □^{n+1} -> tensor_split(m, n).
inline Morphism eta(int m, int n)
{
    static detail::Memo<std::pair<int, int>, Morphism> memo;
    return memo.get({m, n}, [&] {
        auto& w = cube_wedge(m, n + 1);
        auto& p = tensor_split(m, n);
        auto left = compose(p.from_general_side, right_face(cube(m), interval(), "0"));
        auto f = induced_from_pushout(w, p.from_inclusion_side, left);
        detail::require(is_bipointed(f), "eta is not bipointed");
        return f;
    });
}

/// ζ_{m,n} : tensor_split(m, n) -> □^m ∨ □^{n+1}, built from ρ_{m,1}.
inline Morphism zeta(int m, int n)
{
    static detail::Memo<std::pair<int, int>, Morphism> memo;
    return memo.get({m, n}, [&] {
        auto& p = tensor_split(m, n);
        auto& w = cube_wedge(m, n + 1);
        auto& w1 = cube_wedge(m, 1);
        // id_{□^m} ∨ (0⃗ ⊗ id_{□^1}) : □^m ∨ □^1 -> □^m ∨ □^{n+1}
        auto widen = induced_from_pushout(
            w1, compose(wedge_right(w), left_face(cube(n), ids::cube_corner(n, '0'), interval())), wedge_left(w));
        auto left = compose(widen, rho(m, 1));
        auto f = induced_from_pushout(p, wedge_right(w), left);
        detail::require(is_bipointed(f), "zeta is not bipointed");
        return f;
    });
}

/// Mirror of η: □^{m+1} ∨ □^n -> tensor_split_dual(m, n).
inline Morphism eta_dual(int m, int n)
{
    static detail::Memo<std::pair<int, int>, Morphism> memo;
    return memo.get({m, n}, [&] {
        auto& w = cube_wedge(m + 1, n);
        auto& p = tensor_split_dual(m, n);
        auto right = compose(p.from_inclusion_side, left_face(interval(), "1", cube(n)));
        auto f = induced_from_pushout(w, right, p.from_general_side);
        detail::require(is_bipointed(f), "dual eta is not bipointed");
        return f;
    });
}

/// Mirror of ζ: tensor_split_dual(m, n) -> □^{m+1} ∨ □^n, built from ρ_{1,n}.
inline Morphism zeta_dual(int m, int n)
{
    static detail::Memo<std::pair<int, int>, Morphism> memo;
    return memo.get({m, n}, [&] {
        auto& p = tensor_split_dual(m, n);
        auto& w = cube_wedge(m + 1, n);
        auto& w1 = cube_wedge(1, n);
        // (id_{□^1} ⊗ 1⃗) ∨ id_{□^n} : □^1 ∨ □^n -> □^{m+1} ∨ □^n
        auto widen = induced_from_pushout(
            w1, wedge_right(w), compose(wedge_left(w), right_face(interval(), cube(m), ids::cube_corner(m, '1'))));
        auto right = compose(widen, rho(1, n));
        auto f = induced_from_pushout(p, right, wedge_left(w));
        detail::require(is_bipointed(f), "dual zeta is not bipointed");
        return f;
    });
}

namespace detail {

// ρ_{1,1}: the point (0|1) goes to the join, the 2-cell to zero.
inline Morphism rho_base()
{
    auto& w = cube_wedge(1, 1);
    static const std::map<std::string, std::string> table{
        {"(0|0)", "L:0"}, {"(1|0)", "L:1"}, {"(0|1)", "L:1"}, {"(1|1)", "R:1"},
        {"(i|0)", "L:i"}, {"(0|i)", "L:i"}, {"(1|i)", "R:i"}, {"(i|1)", "R:i"},
    };
    return Morphism::from_rule(cube(2), w.object, [&](const BasisElement& x) {
        auto it = table.find(x.id);
        return it == table.end() ? Chain(x.degree) : Chain::basis(x.degree, it->second);
    });
}

} // namespace detail

/// ρ_{m,n} : □^{m+n} -> □^m ∨ □^n, a bipointed retraction of ι_{m,n}.
/// ρ_{m,n+1} = ζ_{m,n} ∘ (ρ_{m,n} ⊗ id) and, for ρ_{m+1,1}, the mirrored
/// composite ζ'_{m,1} ∘ (id ⊗ ρ_{m,1}).
inline Morphism rho(int m, int n)
{
    static detail::Memo<std::pair<int, int>, Morphism> memo;
    return memo.get({m, n}, [&] {
        auto& w = cube_wedge(m, n);
        Morphism r;
        if (m == 0 || n == 0)
            r = inverse_relabeling(iota(m, n));
        else if (m == 1 && n == 1)
            r = detail::rho_base();
        else if (n >= 2) {
            int k = n - 1;
            auto lifted = tensor_morphism(rho(m, k), Morphism::identity(interval()));
            r = compose(zeta(m, k), split_tensor_identification(m, k), lifted);
        }
        else {
            int k = m - 1;
            auto lifted = tensor_morphism(Morphism::identity(interval()), rho(k, n));
            r = compose(zeta_dual(k, n), split_tensor_identification_dual(k, n), lifted);
        }
        r = rebased(r, cube(m + n), w.object);
        detail::require_valid(r, "rho");
        detail::require(is_bipointed(r), "rho is not bipointed");
        detail::require(is_identity(compose(r, iota(m, n))), "rho does not retract iota");
        return r;
    });
}

/// ψ_n : □^{n+1} = □^1 ⊗ □^n -> Σ□^n, the quotient collapsing ∂□^1 ⊗ □^n.
/// With this tensor convention the collapse reverses every positive-degree
/// cell of □^n, so ι⊗y is sent to s(y') with y' = y with 0 and 1 swapped.
inline Morphism psi(int n)
{
    static detail::Memo<int, Morphism> memo;
    return memo.get(n, [&] {
        auto f = Morphism::from_rule(cube(n + 1), suspended_cube(n), [](const BasisElement& x) {
            auto parts = ids::components(x.id);
            std::string c = parts.front();
            std::string rest = ids::join({parts.begin() + 1, parts.end()});
            if (c == "i")
                return Chain::basis(x.degree, ids::suspension(detail::flip_corners(rest)));
            return x.degree == 0 ? Chain::basis(0, c) : Chain(x.degree);
        });
        detail::require_valid(f, "psi");
        detail::require(is_bipointed(f), "psi is not bipointed");
        return f;
    });
}

/// ξ_n : (Σ□^n) ⊗ □^1 -> Σ□^{n+1}, collapsing 0⊗□^1 and 1⊗□^1; satisfies
/// ψ_{n+1} = ξ_n ∘ (ψ_n ⊗ id).
inline Morphism xi(int n)
{
    static detail::Memo<int, Morphism> memo;
    return memo.get(n, [&] {
        auto src = tensor(suspended_cube(n), interval());
        auto f = Morphism::from_rule(src, suspended_cube(n + 1), [](const BasisElement& x) {
            auto parts = ids::components(x.id);
            const std::string& p = parts[0];
            const std::string& c = parts[1];
            if (p == "0" || p == "1")
                return c == "i" ? Chain(x.degree) : Chain::basis(0, p);
            std::string y = p.substr(2, p.size() - 3);
            std::string c2 = c == "0" ? "1" : c == "1" ? "0" : c;
            return Chain::basis(x.degree, ids::suspension(ids::tensor(y, c2)));
        });
        detail::require_valid(f, "xi");
        detail::require(is_bipointed(f), "xi is not bipointed");
        return f;
    });
}

/// Coefficient bound used when χ_n is computed by the section solver.
inline constexpr Coefficient chi_search_bound = 2;

/// χ_n : Σ□^{n+1} -> (Σ□^n) ⊗ □^1, the unique bipointed section of ξ_n.
inline Morphism chi(int n)
{
    static detail::Memo<int, Morphism> memo;
    return memo.get(n, [&] {
        auto found = solve_sections(xi(n), chi_search_bound, true);
        if (found.sections.size() != 1)
            throw ConstructionError("expected exactly one bipointed section of xi_" + std::to_string(n) + ", found " +
                                    std::to_string(found.sections.size()));
        return found.sections.front();
    });
}

/// φ_n : Σ□^n -> □^{n+1}, with φ_0 the identification Σ□^0 ≅ □^1 and
/// φ_{n+1} = (φ_n ⊗ id) ∘ χ_n.
inline Morphism phi(int n)
{
    static detail::Memo<int, Morphism> memo;
    return memo.get(n, [&] {
        Morphism f;
        if (n == 0)
            f = inverse_relabeling(psi(0));
        else {
            f = compose(tensor_morphism(phi(n - 1), Morphism::identity(interval())), chi(n - 1));
            f = rebased(f, suspended_cube(n), cube(n + 1));
        }
        detail::require_valid(f, "phi");
        detail::require(is_bipointed(f), "phi is not bipointed");
        detail::require(is_identity(compose(psi(n), f)), "phi is not a section of psi");
        return f;
    });
}

/// A bipointed retract of a cube: retraction ∘ section = id on `object`.
struct RetractWitness {
    ComplexPtr object;
    int cube_dim = 0;
    Morphism section;    ///< object -> □^N
    Morphism retraction; ///< □^N -> object
};

/// Lists every failed witness invariant; empty means verified.
inline std::vector<std::string> verify_witness(const RetractWitness& w)
{
    std::vector<std::string> report;
    if (!w.object || !w.object->is_bipointed())
        return {"object is missing or not bipointed"};
    for (auto& v : validate_complex(*w.object))
        report.push_back("object: " + v.to_string());
    ComplexPtr c;
    try {
        c = cube(w.cube_dim);
    }
    catch (const Error& e) {
        return {std::string("cube: ") + e.what()};
    }
    if (!w.section.source() || !w.section.source()->same_structure(*w.object) ||
        !w.section.target()->same_structure(*c))
        report.push_back("section does not go from the object to the cube");
    if (!w.retraction.source() || !w.retraction.source()->same_structure(*c) ||
        !w.retraction.target()->same_structure(*w.object))
        report.push_back("retraction does not go from the cube to the object");
    if (!report.empty())
        return report;
    Morphism s = rebased(w.section, w.object, c);
    Morphism r = rebased(w.retraction, c, w.object);
    for (auto& v : validate_morphism(s))
        report.push_back("section: " + v.to_string());
    for (auto& v : validate_morphism(r))
        report.push_back("retraction: " + v.to_string());
    if (!is_bipointed(s))
        report.push_back("section is not bipointed");
    if (!is_bipointed(r))
        report.push_back("retraction is not bipointed");
    if (!is_identity(compose(r, s)))
        report.push_back("retraction . section is not the identity");
    return report;
}

/// □^N as a retract of itself.
inline RetractWitness trivial_witness(int n)
{
    auto c = cube(n);
    return {c, n, Morphism::identity(c), Morphism::identity(c)};
}

enum class LiftOp { Tensor, Wedge, Suspension };

/// Closure of cube retracts under ⊗, ∨ and Σ; the result is re-verified.
inline RetractWitness lift_retract(LiftOp op, const RetractWitness& a, const std::optional<RetractWitness>& b = std::nullopt)
{
    RetractWitness out;
    switch (op) {
    case LiftOp::Suspension: {
        int n = a.cube_dim;
        out.object = suspension(a.object);
        out.cube_dim = n + 1;
        out.section = compose(phi(n), suspension_morphism(a.section));
        out.retraction = compose(suspension_morphism(a.retraction), psi(n));
        break;
    }
    case LiftOp::Wedge: {
        if (!b)
            throw DomainError("wedge lift needs two witnesses");
        int m = a.cube_dim, n = b->cube_dim;
        out.object = wedge(a.object, b->object);
        out.cube_dim = m + n;
        out.section = compose(iota(m, n), wedge_morphism(a.section, b->section));
        out.retraction = compose(wedge_morphism(a.retraction, b->retraction), rho(m, n));
        break;
    }
    case LiftOp::Tensor: {
        if (!b)
            throw DomainError("tensor lift needs two witnesses");
        out.object = tensor(a.object, b->object);
        out.cube_dim = a.cube_dim + b->cube_dim;
        out.section = tensor_morphism(a.section, b->section);
        out.retraction = tensor_morphism(a.retraction, b->retraction);
        break;
    }
    }
    auto c = cube(out.cube_dim);
    out.section = rebased(out.section, out.object, c);
    out.retraction = rebased(out.retraction, c, out.object);
    auto report = verify_witness(out);
    if (!report.empty())
        throw ConstructionError("lifted witness fails verification: " + report.front());
    return out;
}

} // namespace graycube
