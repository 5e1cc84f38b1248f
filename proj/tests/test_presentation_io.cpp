#include "superhopf/presentation_io.hpp"

#include <gtest/gtest.h>

using namespace superhopf;

namespace {

const std::filesystem::path data_dir = SUPERHOPF_DATA_DIR;

// Runs the parser and returns the diagnostic, or "" when it accepted the input.
std::string diagnostic(std::string_view src) {
  try {
    parse_presentation(src);
  } catch (const parse_error& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST(PresentationIo, GoldenFiles) {
  EXPECT_EQ(load_presentation(data_dir / "exterior_2.shp"), exterior_hopf(2));
  EXPECT_EQ(load_presentation(data_dir / "gl_1_1.shp"), glmn_presentation(1, 1));
  EXPECT_EQ(load_presentation(data_dir / "ga_1_1.shp"), ga11_presentation());
  EXPECT_EQ(load_presentation(data_dir / "gl_1_1.shp").name, "gl_1_1");
  EXPECT_FALSE(load_presentation(data_dir / "gl_1_1.shp").antipode);
}

TEST(PresentationIo, RoundTrip) {
  std::vector<hopf_presentation> hs{exterior_hopf(3), ga11_presentation(), glmn_presentation(1, 1),
                                    glmn_presentation(2, 1), glmn_presentation(1, 2)};
  for (const auto& h : hs) {
    auto text = print_presentation(h);
    auto back = parse_presentation(text, h.name);
    EXPECT_EQ(back, h) << text;
    EXPECT_EQ(print_presentation(back), text);
  }
}

TEST(PresentationIo, DegreesAndCounitsRoundTrip) {
  const char* src = "even a; odd b;\ndegree a = 3;\n"
                    "delta a = a | 1 + 1 | a;\ndelta b = b | 1 + 1 | b;\n"
                    "counit a = 1/2;\nantipode pointwise;\n";
  auto h = parse_presentation(src);
  EXPECT_EQ(h.gens->degree(h.gens->lookup("a")), 3);
  EXPECT_EQ(h.counit[0], rational(1, 2));
  EXPECT_EQ(parse_presentation(print_presentation(h)), h);
}

TEST(PresentationIo, RejectsNonzeroOddCounit) {
  auto d = diagnostic("even t; odd tau;\ndelta t = t | 1 + 1 | t;\ndelta tau = tau | 1 + 1 | tau;\ncounit tau = 1;\n");
  EXPECT_NE(d.find("4:8"), std::string::npos) << d;
  EXPECT_NE(d.find("tau"), std::string::npos) << d;
  EXPECT_NE(d.find("counit"), std::string::npos) << d;
}

TEST(PresentationIo, UnknownSymbolIsLocated) {
  auto d = diagnostic("odd v;\ndelta v = v | 1 + 1 | w;\n");
  EXPECT_EQ(d.rfind("2:23:", 0), 0u) << d;
  EXPECT_NE(d.find("'w'"), std::string::npos) << d;
  d = diagnostic("odd v;\ndelta u = v | 1;\n");
  EXPECT_EQ(d.rfind("2:7:", 0), 0u) << d;
}

TEST(PresentationIo, ParityInconsistentCoproductNamesTheGenerator) {
  auto d = diagnostic("even x; odd p;\ndelta x = x | 1 + 1 | x;\ndelta p = p | p + 1 | p;\n");
  EXPECT_NE(d.find("generator 'p'"), std::string::npos) << d;
  EXPECT_EQ(d.rfind("3:7:", 0), 0u) << d;
}

TEST(PresentationIo, StructuralErrors) {
  EXPECT_NE(diagnostic("odd v;\n").find("missing coproduct"), std::string::npos);
  EXPECT_NE(diagnostic("odd v, w;\ndelta v = v|1+1|v;\ndelta w = w|1+1|w;\nantipode v = -v;\n").find("'w': missing antipode"),
            std::string::npos);
  EXPECT_NE(diagnostic("odd v;\ndelta v = v|1+1|v;\ndelta v = v|1+1|v;\n").find("given twice"), std::string::npos);
  EXPECT_NE(diagnostic("odd v;\ndelta v = v|1+1|v;\nodd w;\n").find("before structure maps"), std::string::npos);
  EXPECT_NE(diagnostic("odd v;\ndelta v = v 1;\n").find("2:13:"), std::string::npos);
  EXPECT_NE(diagnostic("even a;\ndelta a = a|1+1|a;\ncounit a = a;\n").find("unknown symbol 'a'"), std::string::npos);
  EXPECT_EQ(diagnostic("# nothing but a comment\n"), "");
}
