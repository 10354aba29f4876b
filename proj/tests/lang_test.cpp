#include <doctest.h>

#include <fstream>
#include <sstream>

#include <cauchy/elaborate.hpp>
#include <cauchy/expr.hpp>

#include "support/corpus.hpp"

using namespace cauchy;

namespace
{

struct Case
{
    std::string input;
    std::string expected;
};

// Each line is "<input>\t<s-expression>" or "<input>\t!<byte offset>" for errors.
std::vector<Case> load_fixture(const std::string &name)
{
    std::ifstream in(std::string(CAUCHY_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::vector<Case> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto tab = line.rfind('\t');
        REQUIRE(tab != std::string::npos);
        out.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    return out;
}

std::string render(const Parsed &p)
{
    if (const auto *q = std::get_if<Query>(&p)) {
        return to_sexpr(*q);
    }
    return to_sexpr(*std::get<ExprPtr>(p));
}

} // namespace

TEST_CASE("golden parse fixtures")
{
    const auto cases = load_fixture("parse.tsv");
    CHECK(cases.size() > 20);
    for (const auto &c : cases) {
        CAPTURE(c.input);
        if (c.expected[0] == '!') {
            try {
                (void)parse(c.input);
                FAIL("expected a parse error");
            } catch (const ParseError &e) {
                CHECK(e.position() == std::stoul(c.expected.substr(1)));
            }
        } else {
            CHECK(render(parse(c.input)) == c.expected);
        }
    }
}

TEST_CASE("query shape")
{
    const Query q = parse_query("exp(pi) - pi < 20");
    CHECK(q.relation == Relation::less);
    CHECK(q.lhs->kind() == ExprKind::sub);
    CHECK(q.lhs->arg(0).kind() == ExprKind::exp);
    CHECK(q.lhs->arg(0).arg(0).kind() == ExprKind::pi);
    CHECK(q.rhs->kind() == ExprKind::int_lit);
    CHECK(q.rhs->value() == 20);
}

TEST_CASE("decimal literals are exact")
{
    const Query q = parse_query("ln(exp(2)) > 2 - 0.000000001");
    CHECK(q.relation == Relation::greater);
    const Expr &tiny = q.rhs->arg(1);
    CHECK(tiny.kind() == ExprKind::dec_lit);
    CHECK(tiny.value() == mpq_class(1, 1000000000));
    CHECK(parse_expression("0.1")->value() == mpq_class(1, 10));
}

TEST_CASE("spans cover the source text")
{
    const std::string src = "1 + sin(pi * 2)";
    const ExprPtr e = parse_expression(src);
    CHECK(e->span().begin == 0);
    CHECK(e->span().end == src.size());
    const Expr &s = e->arg(1);
    CHECK(src.substr(s.span().begin, s.span().end - s.span().begin) == "sin(pi * 2)");
}

TEST_CASE("entry points reject the wrong shape")
{
    CHECK_THROWS_AS(parse_expression("1 < 2"), ParseError);
    CHECK_THROWS_AS(parse_query("1 + 2"), ParseError);
    CHECK_THROWS_AS(parse_query("1 <= 2"), RelationUnsupported);
    CHECK_THROWS_AS(parse_query("1 >= 2"), RelationUnsupported);
    CHECK_THROWS_AS(parse_query("1 = 2"), RelationUnsupported);
}

TEST_CASE("printer round-trips")
{
    for (const char *src : {"1 - (2 - 3)", "-(1 + 2)", "1 / (2 * 3)", "(1 / 2) * 3", "--1", "exp(-pi) * 0.25",
                            "2 - -3", "ln(1 + 1/7) / tan(0.5)"}) {
        const ExprPtr e = parse_expression(src);
        CHECK(structurally_equal(*parse_expression(print(*e)), *e));
    }
    CHECK(print(*parse_expression("(1 + 2) + 3")) == "1 + 2 + 3");
    CHECK(print(*parse_expression("1 - (2 - 3)")) == "1 - (2 - 3)");
    CHECK(print(parse_query("exp(pi)-pi<20")) == "exp(pi) - pi < 20");

    corpus::Generator gen(2024);
    for (const ExprPtr &e : gen.batch(500, 5)) {
        const std::string text = print(*e);
        CAPTURE(text);
        CHECK(structurally_equal(*parse_expression(text), *e));
    }
}

TEST_CASE("factories validate literals")
{
    CHECK_THROWS(Expr::integer(-1));
    CHECK_THROWS(Expr::decimal(mpq_class(1, 3)));
    CHECK_THROWS(Expr::decimal(mpq_class(-1, 2)));
    CHECK_NOTHROW(Expr::decimal(mpq_class(7, 40)));
    CHECK_THROWS(Expr::unary(ExprKind::add, Expr::pi()));
}

TEST_CASE("elaboration and domain conditions")
{
    CHECK_NOTHROW(elaborate(*parse_expression("1/3")));
    try {
        (void)elaborate(*parse_expression("1/(1-1)"));
        FAIL("expected DomainUnverifiable");
    } catch (const DomainUnverifiable &e) {
        CHECK(e.kind() == ExprKind::div);
        CHECK(e.max_precision() == DomainBudget{}.max_k);
        CHECK(e.span().begin == 0);
    }
    try {
        (void)elaborate(*parse_expression("2 + ln(0-2)"));
        FAIL("expected DomainViolation");
    } catch (const DomainViolation &e) {
        CHECK(e.kind() == ExprKind::ln);
        CHECK(e.span().begin == 4);
        CHECK(e.certificate().sign == Sign::negative);
        CHECK(revalidate(e.operand(), e.certificate()));
    }
    CHECK_THROWS_AS(elaborate(*parse_expression("ln(0)")), DomainUnverifiable);
    CHECK_THROWS_AS(elaborate(*parse_expression("tan(pi/2)")), DomainUnverifiable);
    CHECK_NOTHROW(elaborate(*parse_expression("tan(1)")));
    DomainBudget tight{1, 4};
    CHECK_THROWS_AS(elaborate(*parse_expression("1/(pi - 3.14159)"), tight), DomainUnverifiable);
    CHECK_NOTHROW(elaborate(*parse_expression("1/(pi - 3.14159)")));
}

TEST_CASE("depth")
{
    CHECK(parse_expression("1")->depth() == 1);
    CHECK(parse_expression("sin(1 + 2)")->depth() == 3);
}
