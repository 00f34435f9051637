#include "tcycle/tcycle.hpp"

#include "../support/reference.hpp"

#include <gtest/gtest.h>

using namespace tcycle;

namespace {

constexpr PathModel kModels[] = {PathModel::NonStrict, PathModel::Strict};

const char* const kAlternating4 = "a a b 1\na b c 2\na c d 1\na d a 2\n";
const char* const kOnesTriangle = "a x y 1\na y z 1\na z x 1\n";

void expect_sound(const TemporalDigraph& d, const CycleWitness& w, CycleKind kind, PathModel model)
{
	EXPECT_EQ(w.kind, kind);
	EXPECT_EQ(witness_violation(d, w, model), std::nullopt);
	EXPECT_TRUE(classify_cycle(d, w.cycle, model).is(kind));
}

} // namespace

TEST(DetectWeak, Examples)
{
	const auto digon = parse_temporal_digraph("a u v 1\na v u 1\n");
	auto w = detect_weak(digon, PathModel::Strict);
	ASSERT_TRUE(w);
	EXPECT_EQ(w->cycle.length(), 2u);
	expect_sound(digon, *w, CycleKind::Weak, PathModel::Strict);

	const auto alt = parse_temporal_digraph(kAlternating4);
	w = detect_weak(alt, PathModel::NonStrict);
	ASSERT_TRUE(w);
	expect_sound(alt, *w, CycleKind::Weak, PathModel::NonStrict);
	ASSERT_EQ(w->paths.size(), 2u);
	for (const auto& p : w->paths) {
		EXPECT_EQ(p.length(), 2u);
		EXPECT_EQ(p.times, (std::vector<Time>{1, 2}));
	}

	EXPECT_FALSE(detect_weak(parse_temporal_digraph("a p q 1\na q r 2\na r s 3\n"), PathModel::NonStrict));
}

TEST(DetectSimple, Examples)
{
	const auto digon = parse_temporal_digraph("a u v 2\na v u 1\n");
	auto w = detect_simple(digon, PathModel::Strict);
	ASSERT_TRUE(w);
	expect_sound(digon, *w, CycleKind::Simple, PathModel::Strict);
	EXPECT_EQ(w->paths.at(0).start(), digon.graph().vertex("v"));
	EXPECT_EQ(w->paths.at(0).times, (std::vector<Time>{1, 2}));

	EXPECT_FALSE(detect_simple(parse_temporal_digraph(kAlternating4), PathModel::NonStrict));

	const auto tri = parse_temporal_digraph(kOnesTriangle);
	w = detect_simple(tri, PathModel::NonStrict);
	ASSERT_TRUE(w);
	expect_sound(tri, *w, CycleKind::Simple, PathModel::NonStrict);
	EXPECT_FALSE(detect_simple(tri, PathModel::Strict));
}

TEST(DetectStrong, Examples)
{
	const auto tri = parse_temporal_digraph(kOnesTriangle);
	auto r = detect_strong(tri, PathModel::NonStrict);
	ASSERT_TRUE(r.witness);
	expect_sound(tri, *r.witness, CycleKind::Strong, PathModel::NonStrict);
	EXPECT_EQ(r.witness->paths.size(), 3u);

	for (std::uint32_t n = 3; n <= 8; ++n) {
		const auto aux = auxiliary_cycle(n);
		r = detect_strong(aux, PathModel::NonStrict);
		ASSERT_TRUE(r.witness) << "n=" << n;
		expect_sound(aux, *r.witness, CycleKind::Strong, PathModel::NonStrict);
	}

	EXPECT_FALSE(detect_strong(parse_temporal_digraph(kAlternating4), PathModel::NonStrict).witness);
	EXPECT_FALSE(detect_strong(tri, PathModel::Strict).witness);
}

TEST(DetectStrong, BudgetAborts)
{
	StrongSearchOptions opts;
	opts.max_explorations = 1;
	const auto r = detect_strong(auxiliary_cycle(6), PathModel::NonStrict, opts);
	EXPECT_TRUE(r.stats.aborted);
	EXPECT_FALSE(r.witness);
}

TEST(Extend, StrictTrace)
{
	const auto r = extend(Timetable({1, 1, 0}), Timetable({0, 0, 1}), TimeSet{2}, PathModel::Strict);
	EXPECT_TRUE(r.extended);
	EXPECT_EQ(r.root, Timetable({2, 2, 0}));
	EXPECT_EQ(r.path, Timetable({2, 0, 2}));
}

TEST(Extend, FailsWithoutFeasibleLabel)
{
	for (auto model : kModels) {
		const auto r = extend(Timetable({1, 1, 1}), Timetable({0, 2, 0}), TimeSet{1}, model);
		EXPECT_FALSE(r.extended);
		EXPECT_EQ(r.path, Timetable({0, 2, 0}));
	}
}

TEST(Extend, AllZeroRootFails)
{
	for (auto model : kModels)
		EXPECT_FALSE(extend(Timetable(2), Timetable({0, 0, 1}), TimeSet{1}, model).extended);
}

TEST(Extend, RejectsMalformedInput)
{
	EXPECT_THROW(extend(Timetable(2), Timetable(3), TimeSet{1}, PathModel::Strict), std::invalid_argument);
	EXPECT_THROW(extend(Timetable({1, 1, 0}), Timetable(2), TimeSet{}, PathModel::Strict), std::invalid_argument);
	EXPECT_THROW(Timetable({0, 3, 0}), std::invalid_argument);
}

TEST(Extend, DeadlinesPerModel)
{
	EXPECT_EQ(path_deadline(PathModel::NonStrict, 3), 4);
	EXPECT_EQ(path_deadline(PathModel::Strict, 3), 3);
	EXPECT_TRUE(within_deadlines(Timetable({0, 2, 3, 0}), PathModel::NonStrict));
	EXPECT_FALSE(within_deadlines(Timetable({0, 2, 3, 0}), PathModel::Strict));
}

// Equal timetables give equal extensions, whatever path produced them.
TEST(Extend, PathIndependence)
{
	std::mt19937_64 rng(43);
	for (int i = 0; i < 2000; ++i) {
		const Time tau = 1 + static_cast<Time>(rng() % 4);
		std::vector<Time> rv(tau + 1), pv(tau + 1);
		for (auto& x : rv)
			x = static_cast<Time>(rng() % (tau + 1));
		for (auto& x : pv)
			x = rng() % 2 ? static_cast<Time>(rng() % (tau + 1)) : 0;
		std::vector<Time> labels;
		for (Time t = 0; t <= tau; ++t)
			if (rng() % 2)
				labels.push_back(t);
		if (labels.empty())
			labels.push_back(tau);
		const TimeSet times(labels);
		const auto model = kModels[rng() % 2];
		const auto a = extend(Timetable(rv), Timetable(pv), times, model);
		const auto b = extend(Timetable(std::vector<Time>(rv)), Timetable(std::vector<Time>(pv)), times, model);
		EXPECT_EQ(a.extended, b.extended);
		EXPECT_EQ(a.root, b.root);
		EXPECT_EQ(a.path, b.path);
	}
}

// Timetables hold labels shifted by one so that 0 can mean "no path". Each
// root-table entry t after following a path equals the greedy arrival over
// that path when the root arc is taken no earlier than t - 1.
TEST(Extend, RootTableMatchesGreedyTraversal)
{
	std::mt19937_64 rng(47);
	int compared = 0;
	for (int i = 0; i < 300; ++i) {
		const auto d = random_temporal_digraph(rng, {{3, 6, 3, 12}, 2, 4, 3});
		const auto& g = d.graph();
		const Time tau = d.lifetime() + 1;
		for (auto model : kModels)
			for (ArcId root = 0; root < g.arc_count(); ++root) {
				std::vector<ArcId> arcs{root};
				const auto first = d.times(root).shifted(1);
				std::vector<Time> rv(tau + 1, 0);
				for (Time t = 0; t <= first.max(); ++t)
					rv[t] = *first.earliest_at_least(t);
				Timetable tr(rv);
				Timetable tp(tau);
				tp[tau] = first.min();
				std::vector<char> used(g.vertex_count());
				used[g.tail(root)] = used[g.head(root)] = 1;
				VertexId x = g.head(root);
				for (int step = 0; step < 4; ++step) {
					std::vector<ArcId> next;
					for (auto a : g.out_arcs(x))
						if (!used[g.head(a)])
							next.push_back(a);
					if (next.empty())
						break;
					const auto a = next[rng() % next.size()];
					const auto e = extend(tr, tp, d.times(a).shifted(1), model);
					if (!e.extended)
						break;
					tr = e.root;
					tp = e.path;
					arcs.push_back(a);
					x = g.head(a);
					used[x] = 1;
					for (Time lo = 1; lo <= tau; ++lo) {
						const auto greedy = greedy_traverse(d, arcs, model, lo - 1);
						EXPECT_EQ(tr[lo], greedy ? greedy->back() + 1 : 0) << "lo=" << lo;
						++compared;
					}
				}
			}
	}
	EXPECT_GT(compared, 1000);
}

TEST(Detect, AgreesWithReferenceOnRandomGraphs)
{
	std::mt19937_64 rng(53);
	for (int i = 0; i < 300; ++i) {
		const auto d = random_temporal_digraph(rng, {{3, 7, 5, 14}, 2, 4, 3});
		for (auto model : kModels) {
			const auto want = [&](CycleKind k) { return ref::has_cycle(d, k, model); };
			const auto weak = detect_weak(d, model);
			const auto simple = detect_simple(d, model);
			const auto strong = detect_strong(d, model);
			EXPECT_EQ(weak.has_value(), want(CycleKind::Weak)) << serialize(d);
			EXPECT_EQ(simple.has_value(), want(CycleKind::Simple)) << serialize(d);
			EXPECT_EQ(strong.witness.has_value(), want(CycleKind::Strong)) << serialize(d);
			if (weak)
				expect_sound(d, *weak, CycleKind::Weak, model);
			if (simple)
				expect_sound(d, *simple, CycleKind::Simple, model);
			if (strong.witness)
				expect_sound(d, *strong.witness, CycleKind::Strong, model);
		}
	}
}

TEST(DetectStrong, ExplorationBudgetHolds)
{
	std::mt19937_64 rng(59);
	for (int i = 0; i < 200; ++i) {
		const auto d = random_temporal_digraph(rng, {{3, 7, 5, 14}, 2, 4, 3});
		for (auto model : kModels) {
			const auto r = detect_strong(d, model);
			EXPECT_EQ(r.stats.repeated_extensions, 0u);
			ASSERT_EQ(r.stats.explorations.size(), d.arc_count());
			for (ArcId a = 0; a < d.arc_count(); ++a)
				EXPECT_LE(r.stats.explorations[a], r.stats.distinct_timetables[a]);
		}
	}
}

TEST(BlockingStore, InsertAndLookup)
{
	BlockingStore store;
	const Timetable r({1, 2, 0}), p({0, 0, 1});
	EXPECT_FALSE(store.contains(BlockingStore::key(3, r, p)));
	store.insert(BlockingStore::key(3, r, p));
	EXPECT_TRUE(store.contains(BlockingStore::key(3, r, Timetable({0, 0, 1}))));
	EXPECT_FALSE(store.contains(BlockingStore::key(4, r, p)));
	EXPECT_FALSE(store.contains(BlockingStore::key(3, p, r)));
	EXPECT_EQ(store.size(), 1u);
}
