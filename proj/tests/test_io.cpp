#include <gtest/gtest.h>

#include "arcx/errors.hpp"
#include "arcx/generate.hpp"
#include "arcx/io.hpp"
#include "util.hpp"

using namespace arcx;
using namespace arcx::test;

namespace {

InstanceFile named(const Graph& g) {
  InstanceFile f;
  f.graph = g;
  for (int v = 0; v < g.size(); ++v) f.names.push_back("x" + std::to_string(v));
  return f;
}

void expect_input_error(const std::string& text) {
  try {
    parse_instance(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput) << text;
  }
}

}  // namespace

TEST(Io, ParsesAMinimalInstance) {
  InstanceFile f = parse_instance(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"]],
      "predrawn": {"b": {"tail": "3/4", "head": "1/8"}}, "class": "NPHCA"})");
  EXPECT_EQ(f.graph.size(), 3);
  EXPECT_TRUE(f.graph.adjacent(0, 1));
  EXPECT_FALSE(f.graph.adjacent(1, 2));
  EXPECT_EQ(f.partial.at(1), arc("3/4", "1/8"));
  EXPECT_EQ(f.cls, RepClass::NPHCA);
  EXPECT_FALSE(f.representation);
}

TEST(Io, RationalsAreCanonicalized) {
  InstanceFile f = parse_instance(R"({"vertices": ["a"], "predrawn": {"a": {"tail": "2/4", "head": "5/4"}}})");
  EXPECT_EQ(f.partial.at(0), arc("1/2", "1/4"));
}

TEST(Io, RoundTripIsExact) {
  Rng rng(31);
  for (int it = 0; it < 100; ++it) {
    Representation r = random_of_class(it % 2 ? RepClass::NHCA : RepClass::NPHCA, 1 + static_cast<int>(rng() % 12), rng);
    Instance inst = erase_random(r, 1, 2, rng);
    InstanceFile f = named(inst.graph);
    f.partial = inst.partial;
    f.representation = r;
    if (it % 3) f.cls = RepClass::HCA;
    std::string text = serialize_instance(f);
    InstanceFile back = parse_instance(text);
    EXPECT_EQ(back.names, f.names);
    EXPECT_EQ(back.graph, f.graph);
    EXPECT_EQ(back.partial, f.partial);
    EXPECT_EQ(back.cls, f.cls);
    EXPECT_EQ(back.representation, f.representation);
    EXPECT_EQ(serialize_instance(back), text);
  }
}

TEST(Io, SharedEndpointsAreCounted) {
  InstanceFile f = parse_instance(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]],
      "predrawn": {"a": {"tail": "0", "head": "1/4"}, "b": {"tail": "1/4", "head": "1/2"}}})");
  EXPECT_EQ(shared_predrawn_endpoints(f.partial), 1u);
  EXPECT_EQ(instance_summary(f), "3 vertices, 2 edges, 2 predrawn, 1 shared predrawn endpoints");
}

TEST(Io, MalformedInput) {
  expect_input_error("{");
  expect_input_error(R"({"edges": []})");
  expect_input_error(R"({"vertices": ["a", "a"]})");
  expect_input_error(R"({"vertices": ["a"], "edges": [["a", "b"]]})");
  expect_input_error(R"({"vertices": ["a"], "edges": [["a", "a"]]})");
  expect_input_error(R"({"vertices": ["a"], "predrawn": {"a": {"tail": "0.5", "head": "1"}}})");
  expect_input_error(R"({"vertices": ["a"], "predrawn": {"a": {"tail": 0, "head": "1/2"}}})");
  expect_input_error(R"({"vertices": ["a"], "predrawn": {"a": {"tail": "1/0", "head": "1/2"}}})");
  expect_input_error(R"({"vertices": ["a"], "class": "interval"})");
  expect_input_error(R"({"vertices": ["a", "b"], "representation": {"a": {"tail": "0", "head": "1/2"}}})");
}

TEST(Io, CertificateRoundTrip) {
  std::vector<std::string> names{"a", "b", "c"};
  UcaCertificate c{{2, 0, 1}, {{2, 1}}, q("7/2")};
  std::string text = serialize_certificate(c, names);
  UcaCertificate back = parse_certificate(text, names);
  EXPECT_EQ(back.order, c.order);
  EXPECT_EQ(back.wrap_edges, c.wrap_edges);
  EXPECT_EQ(back.circumference, c.circumference);
  EXPECT_THROW(parse_certificate(R"({"order": ["a", "d"], "circumference": "3"})", names), Error);
  EXPECT_THROW(parse_certificate(R"({"order": ["a"]})", names), Error);
}
