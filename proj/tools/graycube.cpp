// graycube: build, check and verify based complexes, cells and retract witnesses.
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource guard.

#include "graycube/graycube.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace graycube;

namespace {

enum Exit { Ok = 0, Failed = 1, Usage = 2, Resource = 3 };

std::string read_input(const std::string& path)
{
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot read '" + path + "'");
    ss << in.rdbuf();
    return ss.str();
}

ComplexPtr load_complex(const std::string& ref)
{
    if (auto k = resolve_named(ref))
        return *k;
    return complex_from_json_or_ref(parse_json(read_input(ref)));
}

std::pair<std::string, std::vector<int>> split_map_ref(const std::string& ref)
{
    auto colon = ref.find(':');
    std::pair<std::string, std::vector<int>> out{ref.substr(0, colon), {}};
    if (colon == std::string::npos)
        return out;
    std::stringstream ss(ref.substr(colon + 1));
    for (std::string part; std::getline(ss, part, ',');) {
        if (part.empty() || part.size() > 3 || part.find_first_not_of("0123456789") != std::string::npos)
            throw FormatError("bad index in '" + ref + "'");
        out.second.push_back(std::stoi(part));
    }
    return out;
}

Morphism named_map(const std::string& name, const std::vector<int>& idx)
{
    static const std::map<std::string, std::size_t> arity{
        {"iota", 2}, {"rho", 2},  {"eta", 2}, {"zeta", 2}, {"eta_dual", 2}, {"zeta_dual", 2},
        {"psi", 1},  {"phi", 1},  {"xi", 1},  {"chi", 1},
    };
    auto it = arity.find(name);
    if (it == arity.end())
        throw FormatError("unknown map '" + name + "'");
    if (idx.size() != it->second)
        throw FormatError(name + " takes " + std::to_string(it->second) + " indices");
    for (int i : idx)
        if (i < 0)
            throw DomainError("indices must be nonnegative");
    if (name == "iota") return iota(idx[0], idx[1]);
    if (name == "rho") return rho(idx[0], idx[1]);
    if (name == "eta") return eta(idx[0], idx[1]);
    if (name == "zeta") return zeta(idx[0], idx[1]);
    if (name == "eta_dual") return eta_dual(idx[0], idx[1]);
    if (name == "zeta_dual") return zeta_dual(idx[0], idx[1]);
    if (name == "psi") return psi(idx[0]);
    if (name == "phi") return phi(idx[0]);
    if (name == "xi") return xi(idx[0]);
    return chi(idx[0]);
}

Morphism load_morphism(const std::string& ref)
{
    if (ref != "-" && ref.find(':') != std::string::npos && !std::ifstream(ref)) {
        auto [name, idx] = split_map_ref(ref);
        return named_map(name, idx);
    }
    return morphism_from_json(parse_json(read_input(ref)));
}

Json checks_for(const std::string& name, const std::vector<int>& idx, const Morphism& f)
{
    Json checks = Json::object();
    checks["valid"] = validate_morphism(f).empty();
    checks["bipointed"] = is_bipointed(f);
    if (name == "rho")
        checks["rho∘iota = id"] = is_identity(compose(f, iota(idx[0], idx[1])));
    else if (name == "iota")
        checks["rho∘iota = id"] = is_identity(compose(rho(idx[0], idx[1]), f));
    else if (name == "phi")
        checks["psi∘phi = id"] = is_identity(compose(psi(idx[0]), f));
    else if (name == "psi")
        checks["psi∘phi = id"] = is_identity(compose(f, phi(idx[0])));
    else if (name == "chi")
        checks["xi∘chi = id"] = is_identity(compose(xi(idx[0]), f));
    else if (name == "xi") {
        int n = idx[0];
        auto lifted = tensor_morphism(psi(n), Morphism::identity(interval()));
        checks["psi(n+1) = xi∘(psi(n)⊗id)"] = compose(f, rebased(lifted, cube(n + 2), lifted.target())) == psi(n + 1);
    }
    else if (name == "eta") {
        int m = idx[0], n = idx[1];
        auto lifted = tensor_morphism(iota(m, n), Morphism::identity(interval()));
        auto via = compose(rebased(lifted, lifted.source(), cube(m + n + 1)),
                           inverse_relabeling(split_tensor_identification(m, n)), f);
        checks["iota(m,n+1) = (iota(m,n)⊗id)∘eta"] = via == iota(m, n + 1);
    }
    return checks;
}

bool all_true(const Json& checks)
{
    for (auto& [k, v] : checks.items())
        if (!v.get<bool>())
            return false;
    return true;
}

void emit(const Json& j, bool pretty, const std::string& out = {})
{
    if (out.empty() || out == "-") {
        std::cout << dump(j, pretty) << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw FormatError("cannot write '" + out + "'");
    f << dump(j, pretty) << '\n';
}

// Prints violations to stderr; returns the exit code for a --check run.
int report_violations(const Complex& k)
{
    auto report = validate_complex(k);
    for (auto& v : report)
        std::cerr << "violation: " << v.to_string() << '\n';
    return report.empty() ? Ok : Failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graycube: based complexes, Gray cubes and retract witnesses"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indent JSON output");

    int code = Ok;
    bool check = false;
    auto add_check = [&](CLI::App* sub) { sub->add_flag("--check", check, "Validate the result; exit 1 on violations"); };
    auto emit_complex = [&](const ComplexPtr& k) {
        emit(complex_to_json(*k), pretty);
        if (check)
            code = report_violations(*k);
    };

    int n = 0;
    std::string a, b, pa, pb, out, tree, name;
    std::vector<int> indices;
    int max_dim = 3;
    Coefficient bound = 2;
    bool verify = false, bipointed = false;

    auto* s_cube = app.add_subcommand("cube", "Emit the n-cube");
    s_cube->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    add_check(s_cube);
    s_cube->callback([&] { emit_complex(cube(n)); });

    auto* s_tensor = app.add_subcommand("tensor", "Gray tensor product of two complexes");
    s_tensor->add_option("a", a)->required();
    s_tensor->add_option("b", b)->required();
    add_check(s_tensor);
    s_tensor->callback([&] { emit_complex(tensor(load_complex(a), load_complex(b))); });

    auto* s_susp = app.add_subcommand("suspend", "Suspension of a complex");
    s_susp->add_option("a", a)->required();
    add_check(s_susp);
    s_susp->callback([&] { emit_complex(suspension(load_complex(a))); });

    auto* s_wedge = app.add_subcommand("wedge", "Wedge sum of two bipointed complexes");
    s_wedge->add_option("a", a)->required();
    s_wedge->add_option("b", b)->required();
    add_check(s_wedge);
    s_wedge->callback([&] { emit_complex(wedge(load_complex(a), load_complex(b))); });

    auto* s_skel = app.add_subcommand("skeleton", "Sub-complex of elements of degree <= k");
    s_skel->add_option("a", a)->required();
    s_skel->add_option("k", n)->required()->check(CLI::NonNegativeNumber);
    add_check(s_skel);
    s_skel->callback([&] { emit_complex(skeleton(load_complex(a), n).first); });

    auto* s_check = app.add_subcommand("check", "Validate the complex axioms");
    s_check->add_option("a", a)->required();
    s_check->callback([&] {
        auto k = load_complex(a);
        Json v = Json::array();
        for (auto& x : validate_complex(*k))
            v.push_back(x.to_string());
        emit({{"valid", v.empty()}, {"violations", v}}, pretty);
        code = v.empty() ? Ok : Failed;
    });

    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--max-dim", max_dim, "Largest cell dimension")->check(CLI::Range(0, 8));
        sub->add_option("--coeff-bound", bound, "Coefficient bound")->check(CLI::Range(1, 16));
    };

    auto* s_cells = app.add_subcommand("cells", "Enumerate bounded cells");
    s_cells->add_option("a", a)->required();
    add_limits(s_cells);
    s_cells->callback([&] {
        Json arr = Json::array();
        for (auto& c : enumerate_cells(*load_complex(a), {max_dim, bound}))
            arr.push_back(cell_to_json(c));
        emit(arr, pretty);
    });

    auto* s_hom = app.add_subcommand("hom", "Enumerate bounded cells between two points");
    s_hom->add_option("a", a)->required();
    s_hom->add_option("from", pa)->required();
    s_hom->add_option("to", pb)->required();
    add_limits(s_hom);
    s_hom->callback([&] {
        Json arr = Json::array();
        for (auto& c : hom_set(*load_complex(a), pa, pb, {max_dim, bound}))
            arr.push_back(cell_to_json(c));
        emit(arr, pretty);
    });

    auto* s_maps = app.add_subcommand("maps", "Emit a named map: iota rho eta zeta eta_dual zeta_dual psi phi xi chi");
    s_maps->add_option("name", name)->required();
    s_maps->add_option("indices", indices)->required();
    s_maps->add_flag("--verify", verify, "Attach identity checks; exit 1 if any fails");
    s_maps->callback([&] {
        auto f = named_map(name, indices);
        Json j = morphism_to_json(f);
        if (verify) {
            j["checks"] = checks_for(name, indices, f);
            code = all_true(j["checks"]) ? Ok : Failed;
        }
        emit(j, pretty);
    });

    auto* s_witness = app.add_subcommand("witness", "Retract-of-cube witness for a tree");
    s_witness->add_option("--tree", tree, "Nested parentheses, e.g. (()())")->required();
    s_witness->add_option("--out", out, "Output file (default stdout)");
    s_witness->callback([&] {
        auto t = parse_theta(tree);
        auto w = theta_witness(t);
        bool ok = verify_theta_witness(w, t).empty();
        emit(witness_to_json(w, ok, t), pretty, out);
        code = ok ? Ok : Failed;
    });

    auto* s_verify = app.add_subcommand("verify", "Re-check a witness file (or - for stdin)");
    s_verify->add_option("file", a)->required();
    s_verify->callback([&] {
        auto doc = parse_json(read_input(a));
        Json failures = Json::array();
        try {
            auto p = witness_from_json(doc);
            for (auto& f : verify_theta_witness(p.witness, p.tree))
                failures.push_back(f);
        }
        catch (const FormatError&) {
            throw;
        }
        catch (const ResourceError&) {
            throw;
        }
        catch (const Error& e) {
            failures.push_back(e.what());
        }
        emit({{"verified", failures.empty()}, {"failures", failures}}, pretty);
        code = failures.empty() ? Ok : Failed;
    });

    auto* s_sections = app.add_subcommand("sections", "Bounded search for sections of a map (file or name:i[,j])");
    s_sections->add_option("map", a)->required();
    s_sections->add_option("--coeff-bound", bound, "Coefficient bound")->check(CLI::Range(1, 16));
    s_sections->add_flag("--bipointed", bipointed, "Keep only bipointed sections");
    s_sections->callback([&] {
        auto found = solve_sections(load_morphism(a), bound, bipointed);
        Json arr = Json::array();
        for (auto& s : found.sections)
            arr.push_back(morphism_to_json(s));
        emit({{"coeff_bound", found.coeff_bound}, {"count", found.sections.size()}, {"sections", arr}}, pretty);
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }
    catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    }
    catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    }
    catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Resource;
    }
    catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Failed;
    }
    return code;
}
