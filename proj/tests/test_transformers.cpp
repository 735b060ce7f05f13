#include <catch2/catch_amalgamated.hpp>

#include "wrcl/elaborate.hpp"
#include "wrcl/oracle.hpp"
#include "wrcl/parser.hpp"
#include "wrcl/transformers.hpp"

using namespace wrcl;

namespace {

std::pair<StateSpace, StmtPtr> parse_core(const std::string& text) {
  auto [space, prog] = Parser::parse_program_file(text);
  return {space, elaborate(prog)};
}

template <Semiring S>
Quantity<S> constant_quantity(const S& sr, const StateSpace& space,
                              typename S::value_type v) {
  Quantity<S> q(sr, space.size());
  for (auto& x : q.values) x = v;
  return q;
}

}  // namespace

TEST_CASE("sp of skip is the identity") {
  auto [space, prog] = parse_core("vars x; domain 3; skip");
  ProbSemiring p;
  Quantity<ProbSemiring> mu(p, space.size());
  mu[0] = 0.5;
  mu[2] = 0.25;
  REQUIRE(q_equal(p, sp(p, space, *prog, mu), mu));
}

TEST_CASE("sp of assume filters by the predicate") {
  auto [space, prog] = parse_core("vars x; domain 4; assume(x > 0)");
  BoolSemiring b;
  auto out = sp(b, space, *prog, one_quantity(b, space));
  auto expected =
      iverson_quantity(b, space, *Parser::parse_expression("x > 0", space));
  REQUIRE(q_equal(b, out, expected));
}

TEST_CASE("formal language example: both duality sides give {aab, abb}") {
  auto [space, prog] =
      parse_core("vars x; domain 2; { weight({a}) } [] { weight({b}) }");
  LangSemiring l{4};
  auto mu = constant_quantity(l, space, std::set<std::string>{"a"});
  auto g = constant_quantity(l, space, std::set<std::string>{"b"});

  auto spv = sp(l, space, *prog, mu);
  for (std::uint64_t id = 0; id < space.size(); ++id)
    REQUIRE(spv[id] == std::set<std::string>{"aa", "ab"});

  // sum_t sp(mu)(t) * g(t)
  auto lhs = l.zero();
  for (std::uint64_t id = 0; id < space.size(); ++id)
    lhs = l.add(lhs, l.mul(spv[id], g[id]));

  // sum_s mu(s) * wp(g)(s)
  auto wpv = wp(l, space, *prog, g);
  auto rhs = l.zero();
  for (std::uint64_t id = 0; id < space.size(); ++id)
    rhs = l.add(rhs, l.mul(mu[id], wpv[id]));

  std::set<std::string> expected{"aab", "abb"};
  REQUIRE(lhs == expected);
  REQUIRE(rhs == expected);
}

TEST_CASE("wp of assignment is substitution") {
  auto [space, prog] = parse_core("vars x; domain 3; x := 1");
  MaxMinSemiring m;
  Quantity<MaxMinSemiring> f(m, space.size());
  f[0] = 10.0;
  f[1] = 20.0;
  f[2] = 30.0;
  auto out = wp(m, space, *prog, f);
  for (std::uint64_t id = 0; id < space.size(); ++id) REQUIRE(out[id] == 20.0);
}

TEST_CASE("probabilistic choice wp splits by the branch weights") {
  auto [space, prog] =
      parse_core("vars x; domain 4; { x := 0 } [0.5] { x := x + 1 }");
  ProbSemiring p;
  FixpointConfig clamp;
  clamp.clamp_overflow = true;
  Quantity<ProbSemiring> f(p, space.size());
  for (std::uint64_t id = 0; id < space.size(); ++id)
    f[id] = static_cast<double>(id) / 8.0;

  auto whole = wp(p, space, *prog, f, clamp);

  auto [s1, c1] = parse_core("vars x; domain 4; x := 0");
  auto [s2, c2] = parse_core("vars x; domain 4; x := x + 1");
  auto w1 = wp(p, space, *c1, f, clamp);
  auto w2 = wp(p, space, *c2, f, clamp);
  for (std::uint64_t id = 0; id < space.size(); ++id)
    REQUIRE(whole[id] == Catch::Approx(0.5 * w1[id] + 0.5 * w2[id]).margin(1e-12));

  auto m = denote(p, space, *prog, clamp);
  auto via = wp_via_matrix(p, m, f);
  for (std::uint64_t id = 0; id < space.size(); ++id)
    REQUIRE(whole[id] == Catch::Approx(via[id]).margin(1e-9));
}

TEST_CASE("maxmin wp on diverge [] skip reproduces the angelic reading") {
  auto [space, prog] = parse_core("vars x; domain 2; { diverge } [] { skip }");
  MaxMinSemiring m;
  auto truth = one_quantity(m, space);  // [true] is the constant one
  auto out = wp(m, space, *prog, truth);
  REQUIRE(q_equal(m, out, truth));
  auto via = wp_via_matrix(m, denote(m, space, *prog), truth);
  REQUIRE(q_equal(m, out, via));
}

TEST_CASE("matrix route equals the rule route") {
  const char* programs[] = {
      "vars x, y; domain 3; x := 1; { y := 0 } [] { y := x }",
      "vars x, y; domain 3; assume(x > 0); y := nondet()",
      "vars x, y; domain 3; while x > 0 { x := x - 1 }",
  };
  BoolSemiring b;
  TropicalSemiring t;
  for (const char* text : programs) {
    auto [space, prog] = parse_core(text);
    auto check = [&](const auto& sr) {
      auto m = denote(sr, space, *prog);
      auto f = one_quantity(sr, space);
      REQUIRE(q_equal(sr, sp(sr, space, *prog, f), sp_via_matrix(sr, m, f)));
      REQUIRE(q_equal(sr, wp(sr, space, *prog, f), wp_via_matrix(sr, m, f)));
    };
    check(b);
    check(t);
  }
}

TEST_CASE("point mass sp extracts a matrix row") {
  auto [space, prog] =
      parse_core("vars x, y; domain 3; { x := 0 } [] { x := y }");
  BoolSemiring b;
  auto m = denote(b, space, *prog);
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    auto out = sp(b, space, *prog, point_mass(b, space, space.decode(id)));
    for (std::uint64_t col = 0; col < space.size(); ++col)
      REQUIRE(out[col] == m.at(id, col));
  }
}

TEST_CASE("bool wp of the constant one is the may-terminate predicate") {
  auto [space, prog] =
      parse_core("vars x; domain 3; assume(x > 0); x := x - 1");
  BoolSemiring b;
  auto out = wp(b, space, *prog, one_quantity(b, space));
  for (std::uint64_t id = 0; id < space.size(); ++id)
    REQUIRE(out[id] == (space.decode(id)[0] > 0 ? 1 : 0));
}

TEST_CASE("geometric loop sp matches the closed form") {
  auto [space, prog] = parse_core(
      "vars x; domain 32; x := 1; loop { x := x + 1 } weight 0.5 exit 0.5");
  ProbSemiring p;
  FixpointConfig clamp;
  clamp.clamp_overflow = true;
  State init(1, 0);
  auto out = sp(p, space, *prog, point_mass(p, space, init), clamp);
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    std::int64_t x = space.decode(id)[0];
    if (x >= 1 && x < 31)
      REQUIRE(out[id] == Catch::Approx(std::pow(0.5, x)).margin(1e-11));
    if (x == 0) REQUIRE(out[id] == 0.0);
  }
}

TEST_CASE("while(true) has empty strongest post but converges") {
  auto [space, prog] = parse_core("vars x; domain 2; while 1 == 1 { skip }");
  ProbSemiring p;
  auto out = sp(p, space, *prog, point_mass(p, space, State{0}));
  for (std::uint64_t id = 0; id < space.size(); ++id) REQUIRE(out[id] == 0.0);
  auto wout = wp(p, space, *prog, one_quantity(p, space));
  for (std::uint64_t id = 0; id < space.size(); ++id) REQUIRE(wout[id] == 0.0);
}

TEST_CASE("sp-wp duality on a mixed corpus") {
  const char* programs[] = {
      "vars x, y; domain 3; x := 1; { y := 0 } [] { y := x }",
      "vars x, y; domain 3; while x > 0 { x := x - 1 }",
      "vars x, y; domain 3; if x == y { x := 0 } else { y := 2 }",
  };
  MaxMinSemiring m;
  TropicalSemiring t;
  for (const char* text : programs) {
    auto [space, prog] = parse_core(text);
    auto dual = [&](const auto& sr) {
      Quantity<std::decay_t<decltype(sr)>> mu(sr, space.size());
      Quantity<std::decay_t<decltype(sr)>> g(sr, space.size());
      for (std::uint64_t id = 0; id < space.size(); ++id) {
        mu[id] = sr.from_number(static_cast<double>((id * 7 + 3) % 5)).value();
        g[id] = sr.from_number(static_cast<double>((id * 11 + 1) % 4)).value();
      }
      auto spv = sp(sr, space, *prog, mu);
      auto wpv = wp(sr, space, *prog, g);
      auto lhs = sr.zero();
      auto rhs = sr.zero();
      for (std::uint64_t id = 0; id < space.size(); ++id) {
        lhs = sr.add(lhs, sr.mul(spv[id], g[id]));
        rhs = sr.add(rhs, sr.mul(mu[id], wpv[id]));
      }
      REQUIRE(sr.eq(lhs, rhs));
    };
    dual(m);
    dual(t);
  }
}
