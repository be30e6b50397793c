#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "likelic/dsl.hpp"
#include "likelic/errors.hpp"
#include "support.hpp"

using namespace likelic;

namespace {

ParseError parse_failure(std::string_view text)
{
    try {
        parse_context(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for: " << text);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("Snowbird fixture")
{
    auto g = test::snowbird();
    CHECK(g.vertex_count() == 6);
    CHECK(g.implication_count() == 9);
    CHECK(g.implication(test::id(g, "Snowbird"), test::id(g, "skiing")) == Likeliness(5));
    CHECK(g.implication(test::id(g, "travelling"), test::id(g, "accident")) == Likeliness(4));
    // skiing -> death is derived, not stored
    CHECK_FALSE(g.implication(test::id(g, "skiing"), test::id(g, "death")));
}

TEST_CASE("empty input gives an empty graph")
{
    CHECK(parse_context("").vertex_count() == 0);
    CHECK(parse_context("# only a comment\n\n   \n").vertex_count() == 0);
}

TEST_CASE("all directives")
{
    auto g = parse_context(R"(
node lonely
edge "at home in bed" -> death : 4   # trailing comment
0edge boot -> shoe
1edge cause -> flood
2edge cause -> burst
fact "at home in bed" = 4
)");
    CHECK(g.vertex_count() == 8);
    CHECK(g.find("lonely"));
    CHECK(g.implication(test::id(g, "at home in bed"), test::id(g, "death")) == Likeliness(4));
    CHECK(g.structural_edges().size() == 3);
    CHECK(g.base_valuation().get(test::id(g, "at home in bed")) == Likeliness(4));
}

TEST_CASE("errors carry line and column")
{
    auto e = parse_failure("edge A -> B : 9");
    CHECK(e.kind() == ParseError::Kind::Range);
    CHECK(e.line() == 1);
    CHECK(e.column() == 15);

    e = parse_failure("node a\n\nfrobnicate a");
    CHECK(e.kind() == ParseError::Kind::Syntax);
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);

    e = parse_failure("edge A -> B : x");
    CHECK(e.kind() == ParseError::Kind::Syntax);

    e = parse_failure("edge A B : 3");
    CHECK(e.kind() == ParseError::Kind::Syntax);
    CHECK(e.column() == 8);

    e = parse_failure("edge A -> B : 3 extra");
    CHECK(e.column() == 17);

    e = parse_failure("edge A -> B :");
    CHECK(e.kind() == ParseError::Kind::Syntax);

    e = parse_failure("edge A -> A : 3");
    CHECK(e.kind() == ParseError::Kind::Syntax);

    e = parse_failure("node \"unterminated");
    CHECK(e.kind() == ParseError::Kind::Syntax);

    e = parse_failure("fact A = 99999999999999999999999");
    CHECK(e.kind() == ParseError::Kind::Range);
}

TEST_CASE("contradictory duplicates are rejected, identical ones accepted")
{
    auto e = parse_failure("edge A -> B : 3\nedge A -> B : 4");
    CHECK(e.kind() == ParseError::Kind::Conflict);
    CHECK(e.line() == 2);
    CHECK(parse_context("edge A -> B : 3\nedge A -> B : 3").implication_count() == 1);

    e = parse_failure("fact A = 1\nfact A = 2");
    CHECK(e.kind() == ParseError::Kind::Conflict);
}

TEST_CASE("serialize_context")
{
    auto header_only = serialize_context(ContextGraph{});
    CHECK(header_only.rfind("# ", 0) == 0);
    CHECK(std::count(header_only.begin(), header_only.end(), '\n') == 1);

    auto g = parse_context("fact Snowbird = 4\nedge Snowbird -> skiing : 5");
    auto text = serialize_context(g);
    CHECK(text.find("fact Snowbird = 4\n") != std::string::npos);
    CHECK(text.find("edge Snowbird -> skiing : 5\n") != std::string::npos);

    auto fixture = test::snowbird();
    CHECK(test::label_view(parse_context(serialize_context(fixture))) == test::label_view(fixture));
    CHECK(serialize_context(parse_context(serialize_context(fixture))) == serialize_context(fixture));
}

TEST_CASE("awkward labels survive quoting")
{
    GraphBuilder b;
    auto a = b.add_vertex("by accident (non-ski)");
    auto c = b.add_vertex("say \"hi\"");
    auto d = b.add_vertex("->");
    auto e = b.add_vertex("#hash");
    auto f = b.add_vertex("back\\slash");
    b.add_implication(a, c, Likeliness(2));
    b.add_implication(d, e, Likeliness(6));
    b.add_structural(f, a, EdgeKind::Obj2);
    auto g = std::move(b).build();
    CHECK(test::label_view(parse_context(serialize_context(g))) == test::label_view(g));
}

TEST_CASE("round-trip on random graphs")
{
    std::mt19937 rng(2024);
    test::RandomGraphSpec spec{20, 0.2, 0.05, 0.3};
    for (int i = 0; i < 500; ++i) {
        auto g = test::random_graph(rng, spec, true);
        auto back = parse_context(serialize_context(g));
        REQUIRE(test::label_view(back) == test::label_view(g));
    }
}

TEST_CASE("random grade tokens either parse in range or fail with a range/syntax error")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(1, 4), digit(0, 9), pick(0, 9);
    for (int i = 0; i < 2000; ++i) {
        std::string tok;
        for (int n = len(rng); n > 0; --n)
            tok += pick(rng) == 0 ? 'x' : static_cast<char>('0' + digit(rng));
        try {
            auto g = parse_context("edge a -> b : " + tok);
            auto x = g.implication(test::id(g, "a"), test::id(g, "b"));
            REQUIRE(x);
            REQUIRE(x->grade() == std::stoi(tok));
        } catch (const ParseError& e) {
            bool numeric = tok.find('x') == std::string::npos;
            REQUIRE(e.kind() == (numeric ? ParseError::Kind::Range : ParseError::Kind::Syntax));
        }
    }
}

TEST_CASE("scenario blocks")
{
    auto text = test::read_data("mortality.ctx");
    auto g = parse_context(text);
    auto scenarios = parse_scenarios(text, g);
    REQUIRE(scenarios.size() == 3);
    CHECK(scenarios[0].name == "trip");
    REQUIRE(scenarios[0].evidence.size() == 1);
    CHECK(scenarios[0].evidence[0].mode == EvidenceMode::Source);
    CHECK(scenarios[0].evidence[0].value == Likeliness(6));
    CHECK(scenarios[2].exclusions.size() == 3);

    auto g2 = parse_context("node a\nnode b");
    auto ok = parse_scenarios("scenario s\n observe a = 4\n clamp b = 2\n exclude a -> b : 1\nend\n", g2);
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].evidence[1].mode == EvidenceMode::Clamp);

    auto fails = [&](std::string_view t, ParseError::Kind kind) {
        try {
            parse_scenarios(t, g2);
        } catch (const ParseError& e) {
            CHECK(e.kind() == kind);
            return;
        }
        FAIL("no error for " << t);
    };
    fails("scenario s\n observe zz = 4\nend", ParseError::Kind::UnknownLabel);
    fails("scenario s\n exclude a -> b : 3\nend", ParseError::Kind::Range);
    fails("scenario s\n observe a = 4\n clamp a = 4\nend", ParseError::Kind::Conflict);
    fails("scenario s\n observe a = 4\n", ParseError::Kind::Syntax);
    fails("end", ParseError::Kind::Syntax);
    fails("scenario s\n edge a -> b : 3\nend", ParseError::Kind::Syntax);
    fails("scenario s\nend\nscenario s\nend", ParseError::Kind::Conflict);
}

TEST_CASE("valuation files")
{
    auto g = test::snowbird();
    auto v = parse_valuation(test::read_data("john_in_snowbird.val"), g);
    CHECK(v.size() == 6);
    CHECK(v.get(test::id(g, "accident")) == Likeliness(1));
    CHECK_THROWS_AS(parse_valuation("fact nowhere = 3", g), ParseError);
    CHECK_THROWS_AS(parse_valuation("edge Snowbird -> death : 3", g), ParseError);
}
