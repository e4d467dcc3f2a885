#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace graycube;

namespace {

std::vector<ComplexPtr> corpus()
{
    return {point(),
            interval(),
            cube(3),
            suspension(cube(2)),
            wedge(interval(), suspension(interval())),
            skeleton(cube(2), 1).first,
            make_complex(interval()->with_bipointing(std::nullopt)),
            theta_to_adc(parse_theta("((())()(()))"))};
}

} // namespace

TEST(Json, ComplexRoundTrip)
{
    for (auto& k : corpus()) {
        auto j = complex_to_json(*k);
        auto text = dump(j);
        auto back = complex_from_json(parse_json(text));
        EXPECT_EQ(*back, *k);
        EXPECT_EQ(dump(complex_to_json(*back)), text);
        EXPECT_EQ(parse_json(dump(j, true)), j);
    }
}

TEST(Json, ComplexSchema)
{
    auto j = complex_to_json(*interval());
    EXPECT_EQ(j["dim"], 1);
    EXPECT_EQ(j["basis"].size(), 3u);
    EXPECT_EQ(j["basis"][2]["id"], "i");
    EXPECT_EQ(j["basis"][2]["deg"], 1);
    EXPECT_EQ(j["basis"][2]["dplus"]["1"], 1);
    EXPECT_EQ(j["bipointing"]["bottom"], "0");
    auto bare = interval()->with_bipointing(std::nullopt);
    EXPECT_TRUE(complex_to_json(bare)["bipointing"].is_null());
}

TEST(Json, KeysAreSorted)
{
    auto text = dump(complex_to_json(*cube(1)));
    EXPECT_EQ(text.find("\"basis\""), 1u);
    EXPECT_LT(text.find("\"deg\""), text.find("\"dminus\""));
    EXPECT_LT(text.find("\"dminus\""), text.find("\"dplus\""));
}

TEST(Json, MorphismRoundTrip)
{
    for (auto& f : {iota(2, 1), rho(1, 2), psi(2), phi(2), chi(1), Morphism::identity(cube(2))}) {
        auto text = dump(morphism_to_json(f));
        auto back = morphism_from_json(parse_json(text));
        EXPECT_EQ(back, f);
        EXPECT_EQ(dump(morphism_to_json(back)), text);
    }
}

TEST(Json, MorphismWithRefs)
{
    Json j = morphism_to_json(rho(1, 1));
    j["source"] = "cube:2";
    auto f = morphism_from_json(j);
    EXPECT_EQ(*f.source(), *cube(2));
    EXPECT_TRUE(is_identity(compose(f, iota(1, 1))));
}

TEST(Json, WitnessRoundTrip)
{
    for (auto text : {"()", "(()())", "((()))", "((())())"}) {
        auto t = parse_theta(text);
        auto w = theta_witness(t);
        auto j = witness_to_json(w, true, t);
        auto p = witness_from_json(parse_json(dump(j)));
        ASSERT_TRUE(p.tree.has_value());
        EXPECT_EQ(*p.tree, t);
        EXPECT_EQ(p.witness.cube_dim, w.cube_dim);
        EXPECT_EQ(dump(witness_to_json(p.witness, true, p.tree)), dump(j));
        EXPECT_TRUE(verify_theta_witness(p.witness, p.tree).empty());
    }
}

TEST(Json, TamperedWitnessFails)
{
    auto t = parse_theta("((())())");
    auto j = witness_to_json(theta_witness(t), true, t);
    // perturb every nonzero retraction coefficient in turn
    std::size_t tried = 0;
    for (auto& [id, img] : j["retraction"]["map"].items())
        for (auto& [tid, c] : img.items()) {
            Json bad = j;
            bad["retraction"]["map"][id][tid] = c.get<int>() + 1;
            auto p = witness_from_json(bad);
            EXPECT_FALSE(verify_theta_witness(p.witness, p.tree).empty()) << id;
            ++tried;
        }
    EXPECT_GT(tried, 0u);
}

TEST(Json, CellRoundTrip)
{
    auto k = cube(2);
    for (auto& c : enumerate_cells(*k, {2, 1})) {
        auto back = cell_from_json(parse_json(dump(cell_to_json(c))));
        EXPECT_EQ(back, c);
    }
}

TEST(Json, NamedRefs)
{
    EXPECT_EQ(**resolve_named("cube:3"), *cube(3));
    EXPECT_EQ(**resolve_named("globe:2"), *suspension(suspension(point())));
    EXPECT_EQ(**resolve_named("theta:(()())"), *wedge(suspension(point()), suspension(point())));
    EXPECT_EQ(**resolve_named("point"), *point());
    EXPECT_FALSE(resolve_named("file.json").has_value());
    EXPECT_THROW(resolve_named("cube:x"), FormatError);
    EXPECT_THROW(resolve_named("theta:(("), FormatError);
}

TEST(Json, MalformedInput)
{
    EXPECT_THROW(parse_json("{"), FormatError);
    EXPECT_THROW(complex_from_json(Json::parse(R"({"basis": 3})")), FormatError);
    EXPECT_THROW(complex_from_json(Json::parse(R"({"basis": [{"id": "x"}]})")), FormatError);
    EXPECT_THROW(complex_from_json(Json::parse(R"({"basis": [{"id": "x", "deg": 1, "dplus": {"y": 1}, "dminus": {}}]})")),
                 StructuralError);
    EXPECT_THROW(complex_from_json_or_ref("nowhere"), FormatError);
}
