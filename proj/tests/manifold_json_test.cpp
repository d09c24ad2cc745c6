#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "ellgen/ellgen.hpp"

using namespace ellgen;

namespace {

ChernVector cv(const std::string& name) { return catalog::lookup(name).cv; }

}  // namespace

TEST(ManifoldJson, ProjectiveSpace) {
    const auto m = load_manifold(R"({"type": "cp", "n": 3})");
    EXPECT_EQ(m.cv, cp_model(3).chern_vector());
    EXPECT_TRUE(m.model.has_value());
}

TEST(ManifoldJson, CatalogReferences) {
    EXPECT_EQ(load_manifold("catalog:W5").cv, cv("W5"));
    EXPECT_EQ(load_manifold(R"({"type": "catalog", "name": "W3"})").cv, cv("W3"));
    EXPECT_THROW(load_manifold("catalog:W0"), UnknownName);
}

TEST(ManifoldJson, QuarticSurfaceIsK3) {
    const auto m = load_manifold(R"({"type": "hypersurface", "ambient": {"type": "cp", "n": 3}, "c1": [4]})");
    EXPECT_EQ(m.cv, cv("W2"));
}

TEST(ManifoldJson, TwistedBundleMatchesCatalog) {
    const auto m = load_manifold(R"({"type": "twisted_bundle", "base": {"type": "cp", "n": 0}, "E": {"trivial": 3}, "F": {"trivial": 1}})");
    EXPECT_EQ(m.cv, cv("TwCP(3,1)"));
    const auto w5 = load_manifold(
        R"({"type": "twisted_bundle", "base": {"type": "catalog", "name": "K3"},
            "E": {"trivial": 1, "lines": [["8"]]}, "F": {"trivial": 0, "lines": [[-4], [-4]]}})");
    EXPECT_EQ(w5.cv, cv("W5"));
}

TEST(ManifoldJson, Products) {
    const auto m = load_manifold(R"({"type": "product", "factors": [{"type": "cp", "n": 1}, {"type": "cp", "n": 2}]})");
    EXPECT_EQ(m.cv, product_chern_vector(cv("CP1"), cv("CP2")));
    EXPECT_TRUE(m.model.has_value());
    // numbers-only factor falls back to convolution
    const auto n = load_manifold(R"({"type": "product", "factors": [{"type": "catalog", "name": "W3"}, {"type": "cp", "n": 1}]})");
    EXPECT_EQ(n.cv, product_chern_vector(cv("W3"), cv("CP1")));
    EXPECT_FALSE(n.model.has_value());
}

TEST(ManifoldJson, ChernNumbers) {
    const auto m = load_manifold(R"({"type": "chern_numbers", "dim": 4, "numbers": {"2,2": 2, "4": "6"}})");
    EXPECT_EQ(m.cv, cv("W4"));
    EXPECT_EQ(phi_ell(4).evaluate(m.cv), vars::D());
}

TEST(ManifoldJson, ReadsFiles) {
    const std::string path = ::testing::TempDir() + "ellgen_cp2.json";
    {
        std::ofstream out(path);
        out << R"({"type": "cp", "n": 2})";
    }
    EXPECT_EQ(load_manifold(path).cv, cv("CP2"));
    std::remove(path.c_str());
}

TEST(ManifoldJson, RejectsMalformedInput) {
    EXPECT_THROW(load_manifold("{not json"), ParseError);
    EXPECT_THROW(load_manifold(R"({"n": 3})"), ParseError);
    EXPECT_THROW(load_manifold(R"({"type": "torus"})"), ParseError);
    EXPECT_THROW(load_manifold(R"({"type": "cp", "n": "three"})"), ParseError);
    EXPECT_THROW(load_manifold(R"({"type": "chern_numbers", "dim": 4, "numbers": {"2,1": 1}})"), ParseError);
    EXPECT_THROW(load_manifold(R"({"type": "chern_numbers", "dim": 2, "numbers": {"x": 1}})"), ParseError);
    EXPECT_THROW(load_manifold(R"({"type": "product", "factors": []})"), ParseError);
    EXPECT_THROW(load_manifold(R"({"type": "hypersurface", "ambient": {"type": "catalog", "name": "W3"}, "c1": [1]})"), BadParams);
}
