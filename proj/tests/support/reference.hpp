#pragma once

// Test-side reference implementations, independent of the library's own
// oracle: plain DFS cycle listing and exhaustive label-tuple enumeration
// (no greedy shortcuts).

#include "tcycle/core.hpp"

#include <functional>
#include <limits>
#include <set>

namespace ref {

using namespace tcycle;

/// Every directed cycle once, rotated to start at its smallest vertex id.
inline std::vector<std::vector<VertexId>> cycles(const Digraph& g)
{
	std::vector<std::vector<VertexId>> out;
	std::vector<VertexId> path;
	std::vector<char> used(g.vertex_count());
	std::function<void(VertexId, VertexId)> dfs = [&](VertexId s, VertexId x) {
		for (auto a : g.out_arcs(x)) {
			const auto y = g.head(a);
			if (y == s)
				out.push_back(path);
			else if (y > s && !used[y]) {
				used[y] = 1;
				path.push_back(y);
				dfs(s, y);
				path.pop_back();
				used[y] = 0;
			}
		}
	};
	for (VertexId s = 0; s < g.vertex_count(); ++s) {
		path = {s};
		used[s] = 1;
		dfs(s, s);
		used[s] = 0;
	}
	return out;
}

inline std::vector<ArcId> arcs_of(const Digraph& g, const std::vector<VertexId>& cyc, std::size_t from,
                                  std::size_t count)
{
	std::vector<ArcId> out;
	const auto q = cyc.size();
	for (std::size_t k = 0; k < count; ++k)
		out.push_back(*g.find_arc(cyc[(from + k) % q], cyc[(from + k + 1) % q]));
	return out;
}

inline bool ok_step(PathModel model, Time prev, Time next)
{
	return model == PathModel::Strict ? prev < next : prev <= next;
}

/// Calls `visit` with every valid label tuple along `arcs`.
inline void label_tuples(const TemporalDigraph& d, const std::vector<ArcId>& arcs, PathModel model,
                         const std::function<void(const std::vector<Time>&)>& visit)
{
	std::vector<Time> t;
	std::function<void(std::size_t)> rec = [&](std::size_t k) {
		if (k == arcs.size()) {
			visit(t);
			return;
		}
		for (auto x : d.times(arcs[k]).labels()) {
			if (k > 0 && !ok_step(model, t.back(), x))
				continue;
			t.push_back(x);
			rec(k + 1);
			t.pop_back();
		}
	};
	rec(0);
}

inline bool traversable(const TemporalDigraph& d, const std::vector<ArcId>& arcs, PathModel model)
{
	bool any = false;
	label_tuples(d, arcs, model, [&](const std::vector<Time>&) { any = true; });
	return any;
}

struct Kinds {
	bool simple = false, weak = false, strong = false;
	bool has(CycleKind k) const
	{
		return k == CycleKind::Simple ? simple : k == CycleKind::Weak ? weak : strong;
	}
};

inline Kinds classify(const TemporalDigraph& d, const std::vector<VertexId>& cyc, PathModel model)
{
	const auto& g = d.graph();
	const auto q = cyc.size();
	Kinds k;
	std::size_t closing = 0;
	for (std::size_t s = 0; s < q; ++s)
		closing += traversable(d, arcs_of(g, cyc, s, q), model);
	k.simple = closing > 0;
	k.strong = closing == q;
	for (std::size_t x = 0; x < q && !k.weak; ++x)
		for (std::size_t y = 0; y < q && !k.weak; ++y) {
			if (x == y)
				continue;
			const auto len = (y + q - x) % q;
			k.weak = traversable(d, arcs_of(g, cyc, x, len), model) &&
			         traversable(d, arcs_of(g, cyc, y, q - len), model);
		}
	return k;
}

inline bool has_cycle(const TemporalDigraph& d, CycleKind kind, PathModel model)
{
	for (const auto& c : cycles(d.graph()))
		if (classify(d, c, model).has(kind))
			return true;
	return false;
}

struct Reach {
	long long eat = std::numeric_limits<long long>::max();
	long long ldt = std::numeric_limits<long long>::min();
};

/// Best arrival and departure over every simple u -> v path and every label tuple.
inline Reach reach(const TemporalDigraph& d, VertexId u, VertexId v, PathModel model)
{
	Reach r;
	if (u == v)
		return {0, d.lifetime()};
	const auto& g = d.graph();
	std::vector<ArcId> arcs;
	std::vector<char> used(g.vertex_count());
	std::function<void(VertexId)> dfs = [&](VertexId x) {
		if (x == v) {
			label_tuples(d, arcs, model, [&](const std::vector<Time>& t) {
				r.eat = std::min<long long>(r.eat, t.back());
				r.ldt = std::max<long long>(r.ldt, t.front());
			});
			return;
		}
		for (auto a : g.out_arcs(x)) {
			const auto y = g.head(a);
			if (used[y])
				continue;
			used[y] = 1;
			arcs.push_back(a);
			dfs(y);
			arcs.pop_back();
			used[y] = 0;
		}
	};
	used[u] = 1;
	dfs(u);
	return r;
}

/// Longest temporal path (number of arcs, distinct vertices).
inline std::size_t longest_path(const TemporalDigraph& d, PathModel model)
{
	const auto& g = d.graph();
	std::size_t best = 0;
	std::vector<char> used(g.vertex_count());
	std::function<void(VertexId, std::size_t, std::optional<Time>)> dfs = [&](VertexId x, std::size_t len,
	                                                                          std::optional<Time> prev) {
		best = std::max(best, len);
		for (auto a : g.out_arcs(x)) {
			const auto y = g.head(a);
			if (used[y])
				continue;
			for (auto t : d.times(a).labels()) {
				if (prev && !ok_step(model, *prev, t))
					continue;
				used[y] = 1;
				dfs(y, len + 1, t);
				used[y] = 0;
			}
		}
	};
	for (VertexId s = 0; s < g.vertex_count(); ++s) {
		used[s] = 1;
		dfs(s, 0, std::nullopt);
		used[s] = 0;
	}
	return best;
}

/// Every closed temporal path around `cyc` from position `start`, as label tuples.
inline std::vector<std::vector<Time>> closed_paths(const TemporalDigraph& d, const std::vector<VertexId>& cyc,
                                                   std::size_t start, PathModel model)
{
	std::vector<std::vector<Time>> out;
	label_tuples(d, arcs_of(d.graph(), cyc, start, cyc.size()), model,
	             [&](const std::vector<Time>& t) { out.push_back(t); });
	return out;
}

} // namespace ref
