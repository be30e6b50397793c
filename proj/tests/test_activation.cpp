#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "likelic/activation.hpp"
#include "likelic/errors.hpp"
#include "support.hpp"

using namespace likelic;

namespace {

ContextGraph boot_on_foot()
{
    return parse_context("1edge boot -> foot\nnode excursion\n");
}

ActivityMap random_activity(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<int> level(-1, 2);
    std::bernoulli_distribution keep_quiet(0.6);
    ActivityMap act(n);
    for (std::uint32_t v = 0; v < n; ++v)
        act.set({v}, keep_quiet(rng) ? Activity::Inactive : static_cast<Activity>(level(rng)));
    return act;
}

} // namespace

TEST_CASE("spreading reaches the out-neighbours of a spreading vertex")
{
    auto g = boot_on_foot();
    auto boot = g.require("boot"), foot = g.require("foot"), excursion = g.require("excursion");
    ActivityMap act(g.vertex_count());
    act.set(boot, Activity::Spreading);

    auto one = spread(g, act, 1);
    CHECK(one.get(foot) == Activity::Active);
    CHECK(one.get(boot) == Activity::Spreading);
    CHECK(one.get(excursion) == Activity::Inactive);

    auto two = spread(g, act, 2);
    CHECK(two.get(foot) == Activity::Spreading);
    CHECK(spread(g, act, 0) == act);
}

TEST_CASE("an active vertex spreads from the following step")
{
    auto g = parse_context("edge a -> b : 5\nedge b -> c : 5");
    ActivityMap act(g.vertex_count());
    act.set(g.require("a"), Activity::Active);
    auto s1 = spread(g, act, 1);
    CHECK(s1.get(g.require("a")) == Activity::Spreading);
    CHECK(s1.get(g.require("b")) == Activity::Active);
    CHECK(s1.get(g.require("c")) == Activity::Inactive);
    auto s2 = spread(g, act, 2);
    CHECK(s2.get(g.require("c")) == Activity::Active);
}

TEST_CASE("quiet graphs stay quiet; blocked vertices absorb")
{
    auto g = boot_on_foot();
    ActivityMap quiet(g.vertex_count());
    CHECK(spread(g, quiet, 10) == quiet);

    ActivityMap act(g.vertex_count());
    act.set(g.require("boot"), Activity::Spreading);
    act.set(g.require("foot"), Activity::Blocked);
    auto after = spread(g, act, 3);
    CHECK(after.get(g.require("foot")) == Activity::Blocked);
    CHECK(after.get(g.require("boot")) == Activity::Spreading);
}

TEST_CASE("activity never decreases and settles within |V| steps")
{
    std::mt19937 rng(321);
    test::RandomGraphSpec spec{12, 0.15, 0.1};
    for (int trial = 0; trial < 300; ++trial) {
        auto g = test::random_graph(rng, spec);
        const auto n = g.vertex_count();
        auto act = random_activity(rng, n);
        auto prev = act;
        for (std::size_t step = 1; step <= n + 2; ++step) {
            auto next = spread(g, prev, 1);
            for (std::uint32_t v = 0; v < n; ++v) {
                if (act.get({v}) == Activity::Blocked)
                    REQUIRE(next.get({v}) == Activity::Blocked);
                else
                    REQUIRE(next.get({v}) >= prev.get({v}));
            }
            prev = std::move(next);
        }
        auto settled = spread(g, act, n);
        REQUIRE(spread(g, settled, 1) == settled);
        REQUIRE(spread(g, act, n + 5) == settled);
    }
}

TEST_CASE("adjoin_vertex")
{
    auto g = parse_context("node shoe\nnode foot");
    auto shoe = g.require("shoe");

    auto isa = adjoin_vertex(g, "boot", shoe, EdgeKind::Is0);
    auto boot = isa.require("boot");
    REQUIRE(isa.structural_edges().size() == 1);
    CHECK(isa.structural_edges()[0].src == boot);
    CHECK(isa.structural_edges()[0].dst == shoe);
    CHECK(isa.structural_edges()[0].kind == EdgeKind::Is0);
    CHECK(g.vertex_count() == 2);

    auto imp = adjoin_vertex(g, "boot", shoe, EdgeKind::Implication);
    CHECK(imp.implication(imp.require("boot"), shoe) == Likeliness(5));

    CHECK_THROWS_AS(adjoin_vertex(g, "boot", VertexId{42}, EdgeKind::Is0), DomainError);
    CHECK_THROWS_AS(adjoin_vertex(g, "shoe", shoe, EdgeKind::Is0), DomainError);
    CHECK_THROWS_AS(adjoin_vertex(g, "", shoe, EdgeKind::Is0), std::invalid_argument);

    // an existing label is reused, as with add_vertex
    auto again = adjoin_vertex(isa, "foot", shoe, EdgeKind::Obj2);
    CHECK(again.vertex_count() == 3);
}

TEST_CASE("an adjoined vertex always has an edge")
{
    std::mt19937 rng(12);
    test::RandomGraphSpec spec{6, 0.3, 0.1};
    std::uniform_int_distribution<int> kind(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = test::random_graph(rng, spec);
        std::uniform_int_distribution<std::uint32_t> vtx(0, static_cast<std::uint32_t>(g.vertex_count() - 1));
        auto h = adjoin_vertex(g, "fresh", {vtx(rng)}, static_cast<EdgeKind>(kind(rng)));
        auto fresh = h.require("fresh");
        std::size_t degree = 0;
        for (const auto& e : h.edges())
            degree += (e.src == fresh || e.dst == fresh) ? 1 : 0;
        REQUIRE(degree >= 1);
    }
}

TEST_CASE("co-activation learning")
{
    auto g = boot_on_foot();
    auto boot = g.require("boot"), foot = g.require("foot"), excursion = g.require("excursion");

    ActivityMap pair(g.vertex_count());
    pair.set(boot, Activity::Active);
    pair.set(excursion, Activity::Spreading);
    auto learned = learn_edges_on_coactivation(g, pair);
    CHECK(learned.implication(boot, excursion) == Likeliness(5));
    CHECK(learned.implication(excursion, boot) == Likeliness(5));
    CHECK(learned.implication_count() == 2);

    ActivityMap alone(g.vertex_count());
    alone.set(boot, Activity::Active);
    alone.set(foot, Activity::Blocked);
    CHECK(test::label_view(learn_edges_on_coactivation(g, alone)) == test::label_view(g));

    auto h = parse_context("edge boot -> foot : 2");
    ActivityMap both(h.vertex_count());
    both.set(h.require("boot"), Activity::Active);
    both.set(h.require("foot"), Activity::Active);
    auto h2 = learn_edges_on_coactivation(h, both);
    CHECK(h2.implication(h.require("boot"), h.require("foot")) == Likeliness(2));
    CHECK(h2.implication(h.require("foot"), h.require("boot")) == Likeliness(5));
    CHECK(h2.implication_count() == 2);
}

TEST_CASE("co-activation learning is idempotent")
{
    std::mt19937 rng(77);
    test::RandomGraphSpec spec{8, 0.2, 0.1};
    for (int trial = 0; trial < 200; ++trial) {
        auto g = test::random_graph(rng, spec);
        auto act = random_activity(rng, g.vertex_count());
        auto once = learn_edges_on_coactivation(g, act);
        REQUIRE(test::label_view(learn_edges_on_coactivation(once, act)) == test::label_view(once));
        for (const auto& e : g.edges())
            if (e.kind == EdgeKind::Implication)
                REQUIRE(once.implication(e.src, e.dst) == e.value);
    }
}
