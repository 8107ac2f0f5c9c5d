#include "support.hpp"

#include <gtest/gtest.h>

using namespace oinst;
using namespace oinst::testing;

namespace {

std::vector<SchemaViolation> violations_of(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.violations();
  }
  return {};
}

}  // namespace

TEST(ParseSpec, BundledExamples) {
  const auto a = load_example("c6p3");
  EXPECT_EQ(a.c, 6u);
  EXPECT_EQ(a.n, 3u);
  EXPECT_EQ(a.r, 12u);
  ASSERT_EQ(a.terms.size(), 1u);
  EXPECT_EQ(a.name, std::optional<std::string>("c6p3"));
  EXPECT_EQ(a.terms[0].B(0, 1), Rat(2));
  EXPECT_EQ(a.terms[0].C(2, 3), Rat(-3));
  const auto b = load_example("c5p3");
  EXPECT_EQ(b.c, 5u);
  EXPECT_EQ(b.r, 10u);
  EXPECT_EQ(b.terms.size(), 3u);
}

TEST(ParseSpec, NotSkewPointer) {
  const auto v = violations_of(R"({"c":2,"n":1,"r":0,"terms":[{"B":[[0,1],[1,0]],"C":[[0,1],[-1,0]]}]})");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].pointer, "/terms/0/B");
  EXPECT_EQ(v[0].kind, ErrorKind::NotSkew);
}

TEST(ParseSpec, AllViolationsReported) {
  const auto v = violations_of(R"({"c":2,"n":1,"terms":[{"B":[[0,1],[-1,0]],"C":[[0,1],[-1,0.5]]},{"B":[[0]],"C":[[0,1],[-1,0]]}]})");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0].pointer, "/r");
  EXPECT_EQ(v[1].pointer, "/terms/0/C/1/1");
  EXPECT_EQ(v[1].kind, ErrorKind::SchemaError);
  EXPECT_EQ(v[2].pointer, "/terms/1/B");
  EXPECT_EQ(v[2].kind, ErrorKind::ShapeMismatch);
}

TEST(ParseSpec, MalformedAndRagged) {
  auto v = violations_of("{\"c\": 2,");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].pointer, "");
  v = violations_of(R"({"c":2,"n":1,"r":0,"terms":[{"B":[[0,1],[-1]],"C":[[0,1],[-1,0]]}]})");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].pointer, "/terms/0/B/1");
  v = violations_of(R"({"c":-1,"n":1,"r":0,"terms":[]})");
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].pointer, "/c");
  v = violations_of("[1,2]");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_THROW(load_spec("/nonexistent/spec.json"), Error);
}

TEST(ParseSpec, RoundTrip) {
  for (const char* name : {"c6p3", "c5p3"}) {
    const auto s = load_example(name);
    EXPECT_EQ(parse_spec_json(to_json(s)), s);
    EXPECT_EQ(parse_spec(to_json(s).dump(2)), s);
  }
}

TEST(ParseSpec, RoundTripRandom) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(131, seed);
    const auto t = random_spec(2 + seed % 4, 1 + seed % 4, 1 + seed % 3, rng, 50);
    SpecFile s{t.c, t.n, seed % 7, t.terms, std::nullopt};
    EXPECT_EQ(parse_spec(to_json(s).dump()), s);
  }
}

TEST(ToJson, ReportShapes) {
  const auto f = example_form("c6p3");
  const auto rep = to_json(check_conditions(f, 12));
  EXPECT_EQ(rep["a2_status"], "CertifiedFullRank");
  EXPECT_EQ(rep["rank_A"], 24);
  EXPECT_EQ(rep["pass"], true);
  const auto table = to_json(h_table(f, 12, -4, 0));
  EXPECT_EQ(table["(1,-1)"]["dim"], 6);
  EXPECT_EQ(table["(3,0)"]["cert"], "SerreDual");
  const auto v = to_json(splitting_type(f, pt({1, 2, 3, 4}), pt({5, 6, 7, 8})));
  EXPECT_EQ(v["verdict"], "Trivial");
  EXPECT_EQ(v["det"], "1048576");
  EXPECT_EQ(to_json(moduli_dim(6, 3))["dim"], 54);
  EXPECT_EQ(to_json(Rat(Int(-3), Int(6))), "-1/2");
}

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fnv1a_hex("foobar"), "85944171f73967e8");
}

TEST(Generate, PureEvenCharge) {
  const auto g = generate(6, 3, GenMode::Pure, 0);
  EXPECT_EQ(g.attempts, 1u);
  EXPECT_EQ(g.spec.r, 12u);
  ASSERT_EQ(g.spec.terms.size(), 1u);
  const auto f = flatten(g.spec.tensor());
  EXPECT_TRUE(check_conditions(f, 12).all_ok());
  EXPECT_TRUE(verify_instanton(f, 12).ok());
}

TEST(Generate, PureRejectsOddOrders) {
  for (auto [c, n] : {std::pair<std::size_t, std::size_t>{5, 3}, {4, 4}}) {
    try {
      generate(c, n, GenMode::Pure, 0);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolation);
      EXPECT_NE(std::string(e.what()).find("sum mode"), std::string::npos);
    }
  }
  EXPECT_THROW(generate(2, 3, GenMode::Sum, 0), Error);
}

TEST(Generate, SumModeDeterministic) {
  const auto a = generate(5, 3, GenMode::Sum, 7);
  const auto b = generate(5, 3, GenMode::Sum, 7);
  EXPECT_EQ(a.spec, b.spec);
  EXPECT_EQ(a.attempts, b.attempts);
  EXPECT_EQ(a.spec.terms.size(), 3u);
  const auto f = flatten(a.spec.tensor());
  EXPECT_TRUE(check_conditions(f, 10).all_ok());
  EXPECT_TRUE(verify_instanton(f, 10).ok());
  EXPECT_NE(generate(5, 3, GenMode::Sum, 8).spec, a.spec);
}
