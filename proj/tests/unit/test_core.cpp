#include "tcycle/tcycle.hpp"

#include "../support/reference.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>

using namespace tcycle;

namespace {

Digraph chain(int n)
{
	Digraph g;
	for (int i = 0; i + 1 < n; ++i)
		g.add_arc(g.intern("p" + std::to_string(i)), g.intern("p" + std::to_string(i + 1)));
	return g;
}

} // namespace

TEST(Parse, MinimalArc)
{
	const auto d = parse_temporal_digraph("a u v 1");
	EXPECT_EQ(d.vertex_count(), 2u);
	EXPECT_EQ(d.arc_count(), 1u);
	EXPECT_EQ(d.lifetime(), 1);
}

TEST(Parse, AuxiliaryCycleFile)
{
	std::ifstream in(TCYCLE_SAMPLES_DIR "/aux5.tg");
	ASSERT_TRUE(in);
	const auto d = parse_temporal_digraph(in);
	EXPECT_EQ(d.vertex_count(), 5u);
	EXPECT_EQ(d.arc_count(), 5u);
	EXPECT_EQ(d.lifetime(), 20);
}

TEST(Parse, CommentsAndIsolatedVertices)
{
	const auto d = parse_temporal_digraph("# header\nv lonely\na x y 0,2  # trailing\n\n");
	EXPECT_EQ(d.vertex_count(), 3u);
	EXPECT_TRUE(d.graph().find_vertex("lonely"));
	EXPECT_EQ(d.times(0), (TimeSet{0, 2}));
}

TEST(Parse, Errors)
{
	auto line_of = [](std::string_view text) -> std::optional<std::size_t> {
		try {
			parse_temporal_digraph(text);
		} catch (const ParseError& e) {
			return e.line();
		}
		return std::nullopt;
	};
	EXPECT_EQ(line_of("a u u 1"), 1u);
	EXPECT_EQ(line_of("a u v 1\na u v 2"), 2u);
	EXPECT_EQ(line_of("a u v"), 1u);
	EXPECT_EQ(line_of("a u v 2,1"), 1u);
	EXPECT_EQ(line_of("a u v 1,1"), 1u);
	EXPECT_EQ(line_of("a u v -1"), 1u);
	EXPECT_EQ(line_of("a u v x"), 1u);
	EXPECT_EQ(line_of("\nedge u v 1"), 2u);
	EXPECT_EQ(line_of("a u v 1 2"), 1u);
}

TEST(Parse, RoundTrip)
{
	std::mt19937_64 rng(99);
	for (int i = 0; i < 200; ++i) {
		const auto d = random_temporal_digraph(rng, {});
		const auto text = serialize(d);
		const auto again = parse_temporal_digraph(text);
		EXPECT_EQ(serialize(again), text);
		ASSERT_EQ(again.arc_count(), d.arc_count());
		for (ArcId a = 0; a < d.arc_count(); ++a) {
			EXPECT_EQ(again.graph().arc(a).tail, d.graph().arc(a).tail);
			EXPECT_EQ(again.graph().arc(a).head, d.graph().arc(a).head);
			EXPECT_EQ(again.times(a), d.times(a));
		}
		EXPECT_EQ(again.lifetime(), d.lifetime());
	}
}

TEST(TemporalDigraph, LifetimeIsMaxLabel)
{
	const auto d = parse_temporal_digraph("a a b 3\na b c 1,7\n");
	EXPECT_EQ(d.lifetime(), 7);
	EXPECT_EQ(parse_temporal_digraph("v a").lifetime(), 0);
}

TEST(Girth, Examples)
{
	EXPECT_EQ(girth(parse_digraph("a u v\na v u")), 2u);
	EXPECT_EQ(girth(parse_digraph("a 1 2\na 2 3\na 3 1")), 3u);
	EXPECT_EQ(girth(chain(4)), std::nullopt);
	EXPECT_EQ(girth(parse_digraph("a a b\na b c\na c d\na d a\na b a")), 2u);
}

TEST(Girth, MatchesShortestEnumeratedCycle)
{
	std::mt19937_64 rng(5);
	for (int i = 0; i < 300; ++i) {
		const auto g = random_digraph(rng, {2, 8, 0, 16});
		const auto cycles = enumerate_cycles(g, 100000);
		ASSERT_FALSE(cycles.truncated);
		std::optional<std::size_t> shortest;
		for (const auto& c : cycles.cycles)
			shortest = std::min(shortest.value_or(c.length()), c.length());
		EXPECT_EQ(girth(g), shortest);
	}
}

TEST(EnumerateCycles, Examples)
{
	EXPECT_EQ(enumerate_cycles(parse_digraph("a 1 2\na 2 3\na 3 1"), 10).cycles.size(), 1u);
	EXPECT_TRUE(enumerate_cycles(chain(5), 10).cycles.empty());
	const auto one_clause = sat_to_strong_instance(make_formula(3, {{1, 2, 3}}));
	EXPECT_EQ(enumerate_cycles(one_clause.graph.graph(), 10).cycles.size(), 3u);
}

TEST(EnumerateCycles, MatchesReferenceDfs)
{
	std::mt19937_64 rng(17);
	for (int i = 0; i < 300; ++i) {
		const auto g = random_digraph(rng, {2, 7, 0, 14});
		auto want = ref::cycles(g);
		std::vector<std::vector<VertexId>> got;
		for (const auto& c : enumerate_cycles(g, 100000).cycles)
			got.push_back(c.vertices);
		std::sort(want.begin(), want.end());
		std::sort(got.begin(), got.end());
		EXPECT_EQ(got, want);
	}
}

TEST(EnumerateCycles, TruncationIsFlagged)
{
	Digraph g;
	for (int i = 0; i < 5; ++i)
		for (int j = 0; j < 5; ++j)
			if (i != j)
				g.add_arc(g.intern(std::to_string(i)), g.intern(std::to_string(j)));
	const auto r = enumerate_cycles(g, 7);
	EXPECT_TRUE(r.truncated);
	EXPECT_EQ(r.cycles.size(), 7u);
}

TEST(SimplifyWalk, ExcisesLoop)
{
	const auto d = parse_temporal_digraph("a u w 1\na w x 1\na x w 1\na w y 2\n");
	const auto& g = d.graph();
	const TemporalWalk w{{g.vertex("u"), g.vertex("w"), g.vertex("x"), g.vertex("w"), g.vertex("y")}, {1, 1, 1, 2}};
	ASSERT_TRUE(is_temporal_walk(d, w, PathModel::NonStrict));
	const auto p = simplify_walk(d, w, PathModel::NonStrict);
	EXPECT_EQ(p.vertices, (std::vector<VertexId>{g.vertex("u"), g.vertex("w"), g.vertex("y")}));
	EXPECT_EQ(p.times, (std::vector<Time>{1, 2}));
	EXPECT_TRUE(is_temporal_path(d, p, PathModel::NonStrict));
}

TEST(SimplifyWalk, IdentityAndClosedRejection)
{
	const auto d = parse_temporal_digraph("a u w 1\na w y 2\na y u 3\n");
	const auto& g = d.graph();
	const TemporalWalk path{{g.vertex("u"), g.vertex("w"), g.vertex("y")}, {1, 2}};
	const auto same = simplify_walk(d, path, PathModel::Strict);
	EXPECT_EQ(same.vertices, path.vertices);
	EXPECT_EQ(same.times, path.times);
	const TemporalWalk closed{{g.vertex("u"), g.vertex("w"), g.vertex("y"), g.vertex("u")}, {1, 2, 3}};
	EXPECT_THROW(simplify_walk(d, closed, PathModel::Strict), GraphError);
	const TemporalWalk invalid{{g.vertex("u"), g.vertex("w"), g.vertex("y")}, {2, 2}};
	EXPECT_THROW(simplify_walk(d, invalid, PathModel::Strict), GraphError);
}

TEST(SimplifyWalk, RandomWalksBecomeValidPaths)
{
	std::mt19937_64 rng(23);
	int checked = 0;
	for (int i = 0; i < 400; ++i) {
		const auto d = random_temporal_digraph(rng, {});
		const auto& g = d.graph();
		for (auto model : {PathModel::NonStrict, PathModel::Strict}) {
			TemporalWalk w{{static_cast<VertexId>(rng() % g.vertex_count())}, {}};
			std::optional<Time> prev;
			for (int step = 0; step < 8; ++step) {
				std::vector<std::pair<ArcId, Time>> options;
				for (auto a : g.out_arcs(w.end()))
					for (auto t : d.times(a))
						if (!prev || (model == PathModel::Strict ? t > *prev : t >= *prev))
							options.emplace_back(a, t);
				if (options.empty())
					break;
				const auto [a, t] = options[rng() % options.size()];
				w.vertices.push_back(g.head(a));
				w.times.push_back(t);
				prev = t;
			}
			if (w.times.empty() || w.closed())
				continue;
			const auto p = simplify_walk(d, w, model);
			EXPECT_TRUE(is_temporal_path(d, p, model));
			EXPECT_EQ(p.start(), w.start());
			EXPECT_EQ(p.end(), w.end());
			EXPECT_LE(p.arrival(), w.arrival());
			++checked;
		}
	}
	EXPECT_GT(checked, 200);
}

TEST(Witness, InvariantChecker)
{
	const auto d = parse_temporal_digraph("a a b 1\na b c 2\na c a 3\n");
	const auto& g = d.graph();
	const Cycle c{{g.vertex("a"), g.vertex("b"), g.vertex("c")}};
	CycleWitness simple{CycleKind::Simple, c, {{{0, 1, 2, 0}, {1, 2, 3}}}};
	EXPECT_EQ(witness_violation(d, simple, PathModel::Strict), std::nullopt);
	simple.paths[0].times = {1, 3, 3};
	EXPECT_TRUE(witness_violation(d, simple, PathModel::NonStrict).has_value());
	CycleWitness weak{CycleKind::Weak, c, {{{0, 1}, {1}}, {{1, 2, 0}, {2, 3}}}};
	EXPECT_EQ(witness_violation(d, weak, PathModel::Strict), std::nullopt);
	weak.paths[1] = {{1, 2}, {2}};
	EXPECT_TRUE(witness_violation(d, weak, PathModel::Strict).has_value());
}

TEST(Format, WalkAndCycle)
{
	const auto d = parse_temporal_digraph("a x y 1\na y x 4\n");
	const auto& g = d.graph();
	EXPECT_EQ(format_walk(g, {{0, 1, 0}, {1, 4}}), "x -[1]-> y -[4]-> x");
	EXPECT_EQ(format_cycle(g, Cycle{{0, 1}}), "x -> y -> x");
}
