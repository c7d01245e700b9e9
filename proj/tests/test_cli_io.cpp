#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"

#include "bgvd/errors.hpp"
#include "bgvd/generator.hpp"
#include "bgvd/instance_io.hpp"

using namespace bgvd;
using namespace testutil;

namespace {

Instance parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void expect_parse_error(const std::string& text, const std::string& needle) {
  try {
    (void)parse_text(text);
    FAIL("expected input_error for: ", text);
  } catch (const input_error& e) {
    std::string msg = e.what();
    INFO("message: ", msg);
    CHECK(msg.find(needle) != std::string::npos);
    CHECK(msg.find("line ") != std::string::npos);
  }
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("round trip keeps every instance intact") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 40; ++t) {
    Instance inst =
        t % 2 == 0
            ? gen_random_gnp(3 + (int)rnd(rng, 9),
                             0.1 * (double)(1 + rnd(rng, 9)), 41000 + t)
            : gen_random_wfvs(3 + (int)rnd(rng, 7), 20, (int)rnd(rng, 5),
                              42000 + t);
    Instance back = parse_text(serialize_instance(inst));
    CHECK(back.problem == inst.problem);
    CHECK(back.g == inst.g);
    CHECK(back.w == inst.w);
    CHECK(back.k == inst.k);
    CHECK(serialize_instance(back) == serialize_instance(inst));
  }
}

TEST_CASE("generators are deterministic in the seed") {
  CHECK(serialize_instance(gen_planted_bgvd(20, 3, 7)) ==
        serialize_instance(gen_planted_bgvd(20, 3, 7)));
  CHECK(serialize_instance(gen_random_gnp(12, 0.4, 9)) ==
        serialize_instance(gen_random_gnp(12, 0.4, 9)));
  CHECK(serialize_instance(gen_random_wfvs(8, 14, 2, 5)) ==
        serialize_instance(gen_random_wfvs(8, 14, 2, 5)));
  CHECK(serialize_instance(gen_flower(4, 11)) !=
        serialize_instance(gen_flower(4, 12)));
}

TEST_CASE("header, comments and defaults") {
  Instance inst = parse_text(
      "c a comment\n"
      "\n"
      "p wfvs 3 2 1\n"
      "e 1 2\n"
      "c another comment\n"
      "e 2 3\n"
      "w 2 3/2\n");
  CHECK(inst.problem == Instance::Problem::wfvs);
  CHECK(inst.g.n() == 3);
  CHECK(inst.g.m() == 2);
  CHECK(inst.k == 1);
  CHECK(inst.w.at(2) == rat(3, 2));
  CHECK(inst.w.at(1) == rat(1));  // defaulted
  CHECK(inst.w.at(3) == rat(1));

  Instance b = parse_text("p bgvd 2 1\ne 1 2\n");
  CHECK(b.problem == Instance::Problem::bgvd);
  CHECK(b.w.empty());

  // Repeated edge lines accumulate multiplicity; loops parse.
  Instance m = parse_text("p wfvs 2 3 1\ne 1 2\ne 1 2\ne 2 2\n");
  CHECK(m.g.multiplicity(1, 2) == 2);
  CHECK(m.g.has_loop(2));
}

TEST_CASE("weighted view checks out") {
  Instance inst = parse_text("p wfvs 2 1 1\ne 1 2\nw 1 2/3\n");
  WeightedGraph wg = inst.weighted();
  CHECK(wg.weight(1) == rat(2, 3));
  CHECK(wg.weight(2) == rat(1));

  Instance b = parse_text("p bgvd 1 0\n");
  CHECK_THROWS_AS((void)b.weighted(), invariant_error);
}

TEST_CASE("malformed files come back with line diagnostics") {
  expect_parse_error("e 1 2\n", "before header");
  expect_parse_error("p bgvd 2 1\ne 1 2\np bgvd 2 1\n", "duplicate header");
  expect_parse_error("p nope 2 1\n", "unknown problem");
  expect_parse_error("p bgvd 2 1\ne 1 3\n", "out of range");
  expect_parse_error("p bgvd 2 1\ne 0 1\n", "out of range");
  expect_parse_error("p bgvd 2 2\ne 1 2\n", "declares");
  expect_parse_error("p bgvd 2 0\ne 1 2\n", "declares");
  expect_parse_error("p bgvd 2 1\nx 1 2\n", "unknown line tag");
  expect_parse_error("p bgvd 2 1\ne 1 2\nw 1 1/2\n", "weight line in a bgvd");
  expect_parse_error("p wfvs 2 1 1\ne 1 2\nw 1 1/0\n", "denominator");
  expect_parse_error("p wfvs 2 1 1\ne 1 2\nw 1 -1/2\n", "negative");
  expect_parse_error("p wfvs 2 1 1\ne 1 2\nw 1 1/2\nw 1 1/3\n", "duplicate");
  expect_parse_error("p wfvs 2 1\ne 1 2\n", "without k");
  expect_parse_error("p bgvd two 1\n", "not an integer");
  expect_parse_error("p bgvd 2 1 junk\n", "trailing junk");
  expect_parse_error("p bgvd 2 1\ne 1 2 3\n", "trailing junk");
  expect_parse_error("p bgvd -1 0\n", "negative n");
  expect_parse_error("", "missing header");
}

TEST_CASE("missing files raise input errors") {
  CHECK_THROWS_AS((void)parse_instance_file("/no/such/file.graph"),
                  input_error);
}

TEST_CASE("serialization is canonical") {
  Instance inst;
  inst.problem = Instance::Problem::wfvs;
  for (int v = 1; v <= 3; ++v) inst.g.add_vertex(v);
  inst.g.add_edge(2, 3);
  inst.g.add_edge(1, 3);
  inst.g.add_edge(1, 3);
  inst.k = 2;
  inst.w[1] = rat(1);
  inst.w[2] = rat(5, 3);
  inst.w[3] = rat(2);
  CHECK(serialize_instance(inst) ==
        "p wfvs 3 3 2\n"
        "e 1 3\n"
        "e 1 3\n"
        "e 2 3\n"
        "w 1 1/1\n"
        "w 2 5/3\n"
        "w 3 2/1\n");

  Instance b;
  b.problem = Instance::Problem::bgvd;
  b.g.add_vertex(1);
  b.g.add_vertex(2);
  CHECK(serialize_instance(b) == "p bgvd 2 0\n");
}

TEST_CASE("planted instances stay feasible after a round trip") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    Instance inst = gen_planted_bgvd(14, 2, seed);
    Instance back = parse_text(serialize_instance(inst));
    CHECK(back.g == inst.g);
    CHECK(back.g.is_simple());
    VSet vs = back.g.vertices();
    CHECK((int)vs.size() == 14);
    CHECK(vs.front() == 1);
    CHECK(vs.back() == 14);
  }
}

}  // TEST_SUITE
