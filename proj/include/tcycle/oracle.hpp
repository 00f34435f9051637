#pragma once

// Definition-level brute-force checkers. Deliberately naive: every answer
// comes from enumerating underlying cycles or simple paths.

#include "core.hpp"
#include "reach.hpp"

namespace tcycle {

class OracleCapExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleCycleCap = 10'000;
inline constexpr std::size_t kOraclePathCap = 100'000;

struct CycleClassification {
	bool is_simple = false;
	bool is_weak = false;
	bool is_strong = false;

	bool is(CycleKind kind) const
	{
		switch (kind) {
		case CycleKind::Simple: return is_simple;
		case CycleKind::Weak: return is_weak;
		case CycleKind::Strong: return is_strong;
		}
		return false;
	}
};

namespace detail {

inline std::vector<ArcId> cyclic_slice(std::span<const ArcId> arcs, std::size_t from, std::size_t count)
{
	std::vector<ArcId> out;
	out.reserve(count);
	for (std::size_t k = 0; k < count; ++k)
		out.push_back(arcs[(from + k) % arcs.size()]);
	return out;
}

inline TemporalWalk walk_along(const Cycle& c, std::size_t from, std::size_t count, std::vector<Time> times)
{
	TemporalWalk w;
	for (std::size_t k = 0; k <= count; ++k)
		w.vertices.push_back(c.vertices[(from + k) % c.length()]);
	w.times = std::move(times);
	return w;
}

/// Latest first label over label choices along a fixed arc sequence.
inline std::optional<Time> reverse_greedy_departure(const TemporalDigraph& d, std::span<const ArcId> arcs,
                                                     PathModel model)
{
	std::optional<Time> next;
	for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
		std::optional<Time> t;
		if (!next)
			t = d.times(*it).max();
		else
			t = d.times(*it).latest_at_most(model == PathModel::Strict ? *next - 1 : *next);
		if (!t)
			return std::nullopt;
		next = t;
	}
	return next;
}

} // namespace detail

/**
 * Classifies an underlying cycle. A start vertex closes iff the greedy
 * traversal of the cycle's arc sequence from it succeeds. Simple: some
 * start closes. Strong: every start closes. Weak: some pair x != y splits
 * the cycle into two arc-disjoint greedy-traversable sub-paths.
 */
inline CycleClassification classify_cycle(const TemporalDigraph& d, const Cycle& c, PathModel model)
{
	const auto arcs = cycle_arcs(d.graph(), c);
	const auto q = arcs.size();
	CycleClassification out;
	std::size_t closing = 0;
	for (std::size_t s = 0; s < q; ++s)
		if (greedy_traverse(d, detail::cyclic_slice(arcs, s, q), model))
			++closing;
	out.is_simple = closing > 0;
	out.is_strong = closing == q;
	for (std::size_t i = 0; i < q && !out.is_weak; ++i) {
		for (std::size_t len = 1; len < q && !out.is_weak; ++len) {
			const auto forward = detail::cyclic_slice(arcs, i, len);
			const auto back = detail::cyclic_slice(arcs, (i + len) % q, q - len);
			out.is_weak = greedy_traverse(d, forward, model) && greedy_traverse(d, back, model);
		}
	}
	return out;
}

/// Witness of the requested kind for the fixed cycle `c`, if it has that kind.
inline std::optional<CycleWitness> cycle_witness(const TemporalDigraph& d, const Cycle& c, CycleKind kind,
                                                 PathModel model)
{
	const auto arcs = cycle_arcs(d.graph(), c);
	const auto q = arcs.size();
	CycleWitness w{kind, c, {}};
	switch (kind) {
	case CycleKind::Simple:
		for (std::size_t s = 0; s < q; ++s) {
			if (auto times = greedy_traverse(d, detail::cyclic_slice(arcs, s, q), model)) {
				w.paths.push_back(detail::walk_along(c, s, q, std::move(*times)));
				return w;
			}
		}
		return std::nullopt;
	case CycleKind::Strong:
		for (std::size_t s = 0; s < q; ++s) {
			auto times = greedy_traverse(d, detail::cyclic_slice(arcs, s, q), model);
			if (!times)
				return std::nullopt;
			w.paths.push_back(detail::walk_along(c, s, q, std::move(*times)));
		}
		return w;
	case CycleKind::Weak:
		for (std::size_t i = 0; i < q; ++i) {
			for (std::size_t len = 1; len < q; ++len) {
				auto forward = greedy_traverse(d, detail::cyclic_slice(arcs, i, len), model);
				if (!forward)
					continue;
				auto back = greedy_traverse(d, detail::cyclic_slice(arcs, (i + len) % q, q - len), model);
				if (!back)
					continue;
				w.paths.push_back(detail::walk_along(c, i, len, std::move(*forward)));
				w.paths.push_back(detail::walk_along(c, (i + len) % q, q - len, std::move(*back)));
				return w;
			}
		}
		return std::nullopt;
	}
	return std::nullopt;
}

/// Enumerates every underlying cycle and returns the first one of `kind`.
inline std::optional<CycleWitness> oracle_detect(const TemporalDigraph& d, CycleKind kind, PathModel model,
                                                 std::size_t cycle_cap = kOracleCycleCap)
{
	auto cycles = enumerate_cycles(d.graph(), cycle_cap);
	if (cycles.truncated)
		throw OracleCapExceeded("more than " + std::to_string(cycle_cap) + " cycles");
	for (const auto& c : cycles.cycles)
		if (auto w = cycle_witness(d, c, kind, model))
			return w;
	return std::nullopt;
}

struct OracleReach {
	ExtTime earliest_arrival;
	ExtTime latest_departure;
};

/**
 * EAT(u, v) and LDT(u, v) by enumerating every simple u -> v path and
 * evaluating its best label choice in each direction.
 */
inline OracleReach oracle_reachability(const TemporalDigraph& d, VertexId u, VertexId v, PathModel model,
                                       std::size_t path_cap = kOraclePathCap)
{
	const auto& g = d.graph();
	if (u >= g.vertex_count() || v >= g.vertex_count())
		throw GraphError("unknown vertex");
	if (u == v)
		return {ExtTime(0), ExtTime(d.lifetime())};
	OracleReach best{ExtTime::plus_infinity(), ExtTime::minus_infinity()};
	std::vector<char> on_path(g.vertex_count());
	std::vector<ArcId> arcs;
	std::size_t visited = 0;

	auto dfs = [&](auto&& self, VertexId x) -> void {
		if (++visited > path_cap)
			throw OracleCapExceeded("more than " + std::to_string(path_cap) + " paths");
		if (x == v) {
			if (auto times = greedy_traverse(d, arcs, model))
				best.earliest_arrival = std::min(best.earliest_arrival, ExtTime(times->back()));
			if (auto dep = detail::reverse_greedy_departure(d, arcs, model))
				best.latest_departure = std::max(best.latest_departure, ExtTime(*dep));
			return;
		}
		for (auto a : g.out_arcs(x)) {
			const auto y = g.head(a);
			if (on_path[y])
				continue;
			on_path[y] = 1;
			arcs.push_back(a);
			self(self, y);
			arcs.pop_back();
			on_path[y] = 0;
		}
	};
	on_path[u] = 1;
	dfs(dfs, u);
	return best;
}

/**
 * Every closed temporal path around `c` from position `start`, by
 * exhaustive label enumeration (pruned only by monotonicity).
 */
inline std::vector<TemporalWalk> enumerate_closed_paths(const TemporalDigraph& d, const Cycle& c,
                                                        std::size_t start, PathModel model,
                                                        std::size_t cap = kOraclePathCap)
{
	const auto arcs = detail::cyclic_slice(cycle_arcs(d.graph(), c), start, c.length());
	std::vector<TemporalWalk> out;
	std::vector<Time> times;
	auto rec = [&](auto&& self, std::size_t k) -> void {
		if (k == arcs.size()) {
			if (out.size() == cap)
				throw OracleCapExceeded("too many closed paths");
			out.push_back(detail::walk_along(c, start, arcs.size(), times));
			return;
		}
		for (auto t : d.times(arcs[k])) {
			if (k > 0 && !chains(model, times.back(), t))
				continue;
			times.push_back(t);
			self(self, k + 1);
			times.pop_back();
		}
	};
	rec(rec, 0);
	return out;
}

/// Length of a longest temporal path (distinct vertices), by exhaustive search.
inline std::size_t longest_temporal_path(const TemporalDigraph& d, PathModel model,
                                         std::size_t cap = kOraclePathCap)
{
	const auto& g = d.graph();
	std::vector<char> on_path(g.vertex_count());
	std::size_t best = 0;
	std::size_t visited = 0;
	auto dfs = [&](auto&& self, VertexId x, std::size_t len, std::optional<Time> prev) -> void {
		if (++visited > cap)
			throw OracleCapExceeded("too many temporal paths");
		best = std::max(best, len);
		for (auto a : g.out_arcs(x)) {
			const auto y = g.head(a);
			if (on_path[y])
				continue;
			auto t = prev ? d.times(a).earliest_at_least(next_allowed(model, *prev)) : d.times(a).min();
			if (!t)
				continue;
			on_path[y] = 1;
			self(self, y, len + 1, t);
			on_path[y] = 0;
		}
	};
	for (VertexId s = 0; s < g.vertex_count(); ++s) {
		on_path[s] = 1;
		dfs(dfs, s, 0, std::nullopt);
		on_path[s] = 0;
	}
	return best;
}

} // namespace tcycle
