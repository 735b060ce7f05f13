#include <catch2/catch_amalgamated.hpp>

#include "wrcl/elaborate.hpp"
#include "wrcl/parser.hpp"
#include "wrcl/program.hpp"

using namespace wrcl;

namespace {

std::pair<StateSpace, StmtPtr> parse(const std::string& body,
                                     const std::string& header = "vars x, y; domain 4;") {
  return Parser::parse_program_file(header + "\n" + body);
}

}  // namespace

TEST_CASE("assignment parses") {
  auto [space, prog] = parse("x := 1");
  REQUIRE(prog->kind == StmtKind::Assign);
  REQUIRE(prog->var_name == "x");
  REQUIRE(prog->expr->kind == ExprKind::IntLit);
}

TEST_CASE("assume then assign parses to a sequence") {
  auto [space, prog] = parse("assume(y > 0); x := x + y");
  REQUIRE(prog->kind == StmtKind::Seq);
  REQUIRE(prog->a->kind == StmtKind::Assume);
  REQUIRE(prog->b->kind == StmtKind::Assign);
  auto core = elaborate(prog);
  REQUIRE(core->kind == StmtKind::Seq);
  REQUIRE(core->a->kind == StmtKind::Weight);
  REQUIRE(core->a->expr->kind == ExprKind::Iverson);
}

TEST_CASE("loop syntax parses") {
  auto [space, prog] = parse("loop { x := x + 1 } weight 0.5 exit 0.5");
  REQUIRE(prog->kind == StmtKind::Loop);
  REQUIRE(prog->a->kind == StmtKind::Assign);
  REQUIRE(prog->expr->num == 0.5);
  REQUIRE(prog->expr2->num == 0.5);
}

TEST_CASE("sugar elaborates to the core constructors") {
  SECTION("skip is the identity weighting") {
    auto [space, prog] = parse("skip");
    auto core = elaborate(prog);
    REQUIRE(core->kind == StmtKind::Weight);
    BoolSemiring b;
    REQUIRE(eval_weight(b, *core->expr, State{0, 0}) == b.one());
  }
  SECTION("diverge is the zero weighting") {
    auto [space, prog] = parse("diverge");
    auto core = elaborate(prog);
    REQUIRE(core->kind == StmtKind::Weight);
    BoolSemiring b;
    REQUIRE(eval_weight(b, *core->expr, State{0, 0}) == b.zero());
  }
  SECTION("while becomes a guarded loop") {
    auto [space, prog] = parse("while x > 0 { x := x - 1 }");
    auto core = elaborate(prog);
    REQUIRE(core->kind == StmtKind::Loop);
    BoolSemiring b;
    REQUIRE(eval_weight(b, *core->expr, State{2, 0}) == b.one());
    REQUIRE(eval_weight(b, *core->expr2, State{2, 0}) == b.zero());
    REQUIRE(eval_weight(b, *core->expr, State{0, 0}) == b.zero());
    REQUIRE(eval_weight(b, *core->expr2, State{0, 0}) == b.one());
  }
  SECTION("probabilistic choice splits into weighted branches") {
    auto [space, prog] = parse("{ x := 0 } [0.5] { x := 1 }");
    auto core = elaborate(prog);
    REQUIRE(core->kind == StmtKind::Choice);
    REQUIRE(core->a->kind == StmtKind::Seq);
    REQUIRE(core->a->a->kind == StmtKind::Weight);
    REQUIRE(core->b->a->kind == StmtKind::Weight);
    ProbSemiring p;
    REQUIRE(eval_weight(p, *core->a->a->expr, State{0, 0}) == 0.5);
    REQUIRE(eval_weight(p, *core->b->a->expr, State{0, 0}) == 0.5);
  }
  SECTION("if/else splits into assume-guarded branches") {
    auto [space, prog] = parse("if x > 0 { y := 1 } else { y := 0 }");
    auto core = elaborate(prog);
    REQUIRE(core->kind == StmtKind::Choice);
    REQUIRE(is_core(*core));
  }
  SECTION("kleene star becomes an unguarded loop") {
    auto [space, prog] = parse("{ x := x + 1 }*");
    auto core = elaborate(prog);
    REQUIRE(core->kind == StmtKind::Loop);
  }
}

TEST_CASE("elaborate is idempotent on core programs") {
  auto [space, prog] =
      parse("x := 1; { weight(0.5); y := 0 } [] { weight(0.5); y := nondet() }");
  auto once = elaborate(prog);
  auto twice = elaborate(once);
  REQUIRE(is_core(*once));
  REQUIRE(stmt_to_string(*once) == stmt_to_string(*twice));
}

TEST_CASE("pretty-print then reparse is a fixpoint") {
  const char* bodies[] = {
      "x := 1; y := x + 1",
      "assume(x > 0); y := nondet()",
      "{ x := 0 } [] { x := 1 }",
      "{ x := 0 } [0.25] { weight(x == 1); x := 1 }",
      "while x > 0 { x := x - 1 }",
      "loop { x := x + 1 } weight 0.5 exit 0.5",
      "if x > 0 { y := 1 } else { y := 0 }",
      "weight({a, ab}); weight({eps})",
  };
  for (const char* body : bodies) {
    auto [space, prog] = parse(body);
    std::string printed = stmt_to_string(*prog);
    Parser p(printed, &space);
    auto reparsed = p.parse_stmt();
    p.expect_end();
    REQUIRE(stmt_to_string(*reparsed) == printed);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("x := ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    REQUIRE(e.line() >= 1);
  }
  REQUIRE_THROWS_AS(parse("z := 1"), ParseError);         // unknown variable
  REQUIRE_THROWS_AS(parse("x := 1 y := 2"), ParseError);  // missing separator
}

TEST_CASE("well-definedness for partial semirings") {
  ProbSemiring p;
  BoolSemiring b;

  SECTION("compatible probabilistic loop is fine") {
    auto [space, prog] = parse("loop { x := x + 1 } weight 0.5 exit 0.5");
    REQUIRE_NOTHROW(check_well_defined(p, space, *elaborate(prog)));
  }
  SECTION("overweight guarded choice is rejected with a witness") {
    auto [space, prog] = parse("{ weight(0.8); skip } [] { weight(0.8); skip }");
    try {
      check_well_defined(p, space, *elaborate(prog));
      FAIL("expected a well-definedness error");
    } catch (const WellDefinednessError& e) {
      REQUIRE(std::string(e.what()).find("0.8") != std::string::npos);
    }
  }
  SECTION("nondeterministic assignment needs a total semiring") {
    auto [space, prog] = parse("x := nondet()");
    REQUIRE_NOTHROW(check_well_defined(b, space, *elaborate(prog)));
    REQUIRE_THROWS_AS(check_well_defined(p, space, *elaborate(prog)),
                      WellDefinednessError);
  }
  SECTION("bare choice is rejected for partial semirings") {
    auto [space, prog] = parse("{ x := 0 } [] { x := 1 }");
    REQUIRE_NOTHROW(check_well_defined(b, space, *elaborate(prog)));
    REQUIRE_THROWS_AS(check_well_defined(p, space, *elaborate(prog)),
                      WellDefinednessError);
  }
  SECTION("kleene star is rejected for partial semirings") {
    auto [space, prog] = parse("{ x := x }*");
    REQUIRE_THROWS_AS(check_well_defined(p, space, *elaborate(prog)),
                      WellDefinednessError);
  }
  SECTION("state-dependent guard weights are checked exhaustively") {
    // weights [x>0] and 0.5 sum above one exactly when x > 0
    auto [space, prog] = parse("{ weight(x > 0); skip } [] { weight(0.6); skip }");
    REQUIRE_THROWS_AS(check_well_defined(p, space, *elaborate(prog)),
                      WellDefinednessError);
  }
}
