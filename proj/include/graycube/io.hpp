#pragma once

#include "graycube/realization.hpp"
#include "graycube/theta.hpp"

#include <json.hpp>

namespace graycube {

using Json = nlohmann::json;

inline Json chain_to_json(const Chain& c)
{
    Json j = Json::object();
    for (auto& [id, k] : c.terms())
        j[id] = k;
    return j;
}

inline Chain chain_from_json(const Json& j, int degree)
{
    if (!j.is_object())
        throw FormatError("chain must be an object of id: coefficient");
    Chain c(degree);
    for (auto& [id, v] : j.items()) {
        if (!v.is_number_integer())
            throw FormatError("coefficient of '" + id + "' is not an integer");
        c.add(id, v.get<Coefficient>());
    }
    return c;
}

inline Json complex_to_json(const Complex& k)
{
    Json basis = Json::array();
    for (auto& x : k.basis())
        basis.push_back({{"id", x.id}, {"deg", x.degree}, {"dplus", chain_to_json(x.plus)}, {"dminus", chain_to_json(x.minus)}});
    Json bp = nullptr;
    if (auto& b = k.bipointing())
        bp = {{"bottom", b->bottom}, {"top", b->top}};
    return {{"dim", k.dim()}, {"basis", std::move(basis)}, {"bipointing", std::move(bp)}};
}

namespace detail {

inline const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline int int_suffix(const std::string& ref, std::size_t from)
{
    std::string digits = ref.substr(from);
    if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw FormatError("bad number in ref '" + ref + "'");
    return std::stoi(digits);
}

} // namespace detail

inline ComplexPtr complex_from_json(const Json& j)
{
    const Json& basis = detail::field(j, "basis");
    if (!basis.is_array())
        throw FormatError("'basis' must be an array");
    std::vector<BasisElement> elems;
    for (auto& e : basis) {
        auto& id = detail::field(e, "id");
        auto& deg = detail::field(e, "deg");
        if (!id.is_string() || !deg.is_number_integer())
            throw FormatError("basis element needs a string id and an integer deg");
        int d = deg.get<int>();
        elems.push_back({id.get<std::string>(), d, chain_from_json(detail::field(e, "dplus"), d - 1),
                         chain_from_json(detail::field(e, "dminus"), d - 1)});
    }
    std::optional<Bipointing> bp;
    if (j.contains("bipointing") && !j.at("bipointing").is_null()) {
        auto& b = j.at("bipointing");
        auto& bottom = detail::field(b, "bottom");
        auto& top = detail::field(b, "top");
        if (!bottom.is_string() || !top.is_string())
            throw FormatError("bipointing ids must be strings");
        bp = Bipointing{bottom.get<std::string>(), top.get<std::string>()};
    }
    auto k = make_complex(Complex::build(std::move(elems), std::move(bp)));
    if (j.contains("dim") && !(j.at("dim").is_number_integer() && j.at("dim").get<int>() == k->dim()))
        throw StructuralError("declared dim does not match the basis");
    return k;
}

/// Named complexes: point, interval, cube:N, globe:D, theta:<tree>.
inline std::optional<ComplexPtr> resolve_named(const std::string& ref)
{
    if (ref == "point")
        return point();
    if (ref == "interval")
        return interval();
    if (ref.starts_with("cube:"))
        return cube(detail::int_suffix(ref, 5));
    if (ref.starts_with("globe:"))
        return theta_to_adc(globe_tree(detail::int_suffix(ref, 6)));
    if (ref.starts_with("theta:")) {
        try {
            return theta_to_adc(parse_theta(ref.substr(6)));
        }
        catch (const DomainError& e) {
            throw FormatError(e.what());
        }
    }
    return std::nullopt;
}

/// A complex given inline or as a named ref string.
inline ComplexPtr complex_from_json_or_ref(const Json& j)
{
    if (j.is_string()) {
        if (auto k = resolve_named(j.get<std::string>()))
            return *k;
        throw FormatError("unknown complex ref '" + j.get<std::string>() + "'");
    }
    return complex_from_json(j);
}

inline Json morphism_to_json(const Morphism& f)
{
    Json map = Json::object();
    for (std::size_t i = 0; i < f.source()->size(); ++i)
        map[f.source()->at(i).id] = chain_to_json(f.image(i));
    return {{"source", complex_to_json(*f.source())}, {"target", complex_to_json(*f.target())}, {"map", std::move(map)}};
}

inline Morphism morphism_from_json(const Json& j)
{
    auto src = complex_from_json_or_ref(detail::field(j, "source"));
    auto tgt = complex_from_json_or_ref(detail::field(j, "target"));
    const Json& map = detail::field(j, "map");
    if (!map.is_object())
        throw FormatError("'map' must be an object");
    for (auto& [id, v] : map.items())
        if (!src->contains(id))
            throw StructuralError("map names '" + id + "', which is not in the source");
    std::vector<Chain> images;
    for (auto& x : src->basis()) {
        if (!map.contains(x.id))
            throw StructuralError("map has no entry for '" + x.id + "'");
        images.push_back(chain_from_json(map.at(x.id), x.degree));
    }
    return Morphism(src, tgt, std::move(images));
}

inline Json witness_to_json(const RetractWitness& w, bool verified, const std::optional<ThetaTree>& tree = std::nullopt)
{
    Json j{{"object", complex_to_json(*w.object)},
           {"cube_dim", w.cube_dim},
           {"section", morphism_to_json(w.section)},
           {"retraction", morphism_to_json(w.retraction)},
           {"verified", verified}};
    if (tree)
        j["tree"] = to_string(*tree);
    return j;
}

struct ParsedWitness {
    RetractWitness witness;
    std::optional<ThetaTree> tree;
};

inline ParsedWitness witness_from_json(const Json& j)
{
    ParsedWitness p;
    p.witness.object = complex_from_json_or_ref(detail::field(j, "object"));
    auto& n = detail::field(j, "cube_dim");
    if (!n.is_number_integer())
        throw FormatError("'cube_dim' must be an integer");
    p.witness.cube_dim = n.get<int>();
    p.witness.section = morphism_from_json(detail::field(j, "section"));
    p.witness.retraction = morphism_from_json(detail::field(j, "retraction"));
    if (j.contains("tree")) {
        if (!j.at("tree").is_string())
            throw FormatError("'tree' must be a string");
        try {
            p.tree = parse_theta(j.at("tree").get<std::string>());
        }
        catch (const DomainError& e) {
            throw FormatError(e.what());
        }
    }
    return p;
}

inline Json cell_to_json(const Cell& c)
{
    Json src = Json::array(), tgt = Json::array();
    for (auto& e : c.source)
        src.push_back(chain_to_json(e));
    for (auto& e : c.target)
        tgt.push_back(chain_to_json(e));
    return {{"dim", c.dimension()}, {"source", std::move(src)}, {"target", std::move(tgt)}};
}

inline Cell cell_from_json(const Json& j)
{
    auto& src = detail::field(j, "source");
    auto& tgt = detail::field(j, "target");
    if (!src.is_array() || !tgt.is_array() || src.size() != tgt.size() || src.empty())
        throw FormatError("cell needs equal-length nonempty source/target arrays");
    Cell c;
    for (std::size_t k = 0; k < src.size(); ++k) {
        c.source.push_back(chain_from_json(src[k], static_cast<int>(k)));
        c.target.push_back(chain_from_json(tgt[k], static_cast<int>(k)));
    }
    return c;
}

/// Canonical text: keys are sorted; `pretty` only adds whitespace.
inline std::string dump(const Json& j, bool pretty = false) { return pretty ? j.dump(2) : j.dump(); }

inline Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    }
    catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace graycube
