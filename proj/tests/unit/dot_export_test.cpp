#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordamalg/dot_export.hpp"

namespace ordamalg {
namespace {

TEST(DotExport, ChainWithOp) {
  const auto s = testing::chain("D", {"b", "a", "0"}, {{"f", OpKind::preserving, {{"b", "b"}, {"a", "0"}, {"0", "0"}}}});
  EXPECT_EQ(export_dot(s),
            "digraph \"D\" {\n"
            "  \"b\";\n"
            "  \"a\";\n"
            "  \"0\";\n"
            "  \"b\" -> \"a\";\n"
            "  \"a\" -> \"0\";\n"
            "  \"b\" -> \"b\" [style=dashed, label=\"f\"];\n"
            "  \"a\" -> \"0\" [style=dashed, label=\"f\"];\n"
            "  \"0\" -> \"0\" [style=dashed, label=\"f\"];\n"
            "}\n");
}

TEST(DotExport, PosetCoversOnlyAndPartialOps) {
  const auto s = StructureBuilder("V")
                     .elements({"x", "y", "z"})
                     .less("x", "y")
                     .less("x", "z")
                     .linearity(Linearity::partial)
                     .op("g", OpKind::preserving, {{"y", "y"}})
                     .build();
  EXPECT_EQ(export_dot(s),
            "digraph \"V\" {\n"
            "  \"x\";\n"
            "  \"y\";\n"
            "  \"z\";\n"
            "  \"x\" -> \"y\";\n"
            "  \"x\" -> \"z\";\n"
            "  \"y\" -> \"y\" [style=dashed, label=\"g\"];\n"
            "}\n");
}

TEST(DotExport, EscapesQuotes) {
  const auto s = testing::chain("a\"b", {"p\\q"});
  EXPECT_EQ(export_dot(s), "digraph \"a\\\"b\" {\n  \"p\\\\q\";\n}\n");
}

}  // namespace
}  // namespace ordamalg
