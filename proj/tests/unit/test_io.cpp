#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "conlap/facet_io.hpp"
#include "conlap/families.hpp"
#include "conlap/fixtures.hpp"
#include "support.hpp"

using namespace conlap;
using support::gen;

TEST(Facets, ParsesCommentsAndBlankLines) {
  const auto c = parse_facets("# kite\n1,2,3\n\n  2 , 4  # trailing\n3\n");
  EXPECT_EQ(c, gen({{"1", "2", "3"}, {"2", "4"}}));
  EXPECT_EQ(c.size(), 9u);
}

TEST(Facets, EmptyInputIsEmptyComplex) {
  EXPECT_TRUE(parse_facets("").empty());
  EXPECT_TRUE(parse_facets("# nothing\n\n").empty());
}

TEST(Facets, ErrorsCarryLineNumbers) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"1,2\n1,,3\n", 2}, {"1,1\n", 1}, {"\n\n,\n", 3}, {"1,2\n3,\n", 2}};
  for (const auto& [text, line] : cases) {
    try {
      (void)parse_facets(text);
      ADD_FAILURE() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
    }
  }
}

TEST(Facets, FormatRoundTrip) {
  for (const auto& nc : named_complexes()) {
    EXPECT_EQ(parse_facets(format_facets(nc.complex)), nc.complex) << nc.name;
  }
  for (const auto& nc : random_complex_pool(3, 20)) {
    EXPECT_EQ(parse_facets(format_facets(nc.complex)), nc.complex) << nc.name;
  }
  EXPECT_EQ(format_facets(gen({{"2", "1"}, {"3"}})), "3\n1,2\n");
}

TEST(Facets, FormatRejectsUnwritableLabels) {
  EXPECT_THROW((void)format_facets(gen({{"a,b"}})), std::invalid_argument);
  EXPECT_THROW((void)format_facets(gen({{"a#"}})), std::invalid_argument);
  EXPECT_THROW((void)format_facets(gen({{" a"}})), std::invalid_argument);
}

TEST(Facets, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "conlap_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "octa.txt";
  write_facet_file(path, octahedron_complex());
  EXPECT_EQ(read_facet_file(path), octahedron_complex());
  EXPECT_THROW((void)read_facet_file(dir / "missing.txt"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST(Graphs, Parse) {
  const auto g = parse_graph("# kite\n1,2\n2,3\n3,1\n3,4\n5\n");
  EXPECT_EQ(g.size(), 5u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.degree(*g.index_of("5")), 0u);
  EXPECT_TRUE(parse_graph("").empty());
  EXPECT_THROW((void)parse_graph("1,2,3\n"), ParseError);
  EXPECT_THROW((void)parse_graph("1,1\n"), ParseError);
  EXPECT_THROW((void)parse_graph("1,\n"), ParseError);
}
