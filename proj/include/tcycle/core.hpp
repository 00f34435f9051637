#pragma once

// Temporal digraph data model and static-graph utilities.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tcycle {

using VertexId = std::uint32_t;
using ArcId = std::uint32_t;
using Time = std::int32_t;

class GraphError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

enum class PathModel : std::uint8_t { NonStrict, Strict };

enum class CycleKind : std::uint8_t { Simple, Weak, Strong };

inline std::string_view to_string(PathModel model)
{
	return model == PathModel::Strict ? "strict" : "nonstrict";
}

inline std::string_view to_string(CycleKind kind)
{
	switch (kind) {
	case CycleKind::Simple: return "simple";
	case CycleKind::Weak: return "weak";
	case CycleKind::Strong: return "strong";
	}
	return "?";
}

/// Smallest label that may follow an arc traversed at `prev`.
constexpr Time next_allowed(PathModel model, Time prev)
{
	return model == PathModel::Strict ? prev + 1 : prev;
}

/// Whether label `next` may follow label `prev` on a temporal walk.
constexpr bool chains(PathModel model, Time prev, Time next)
{
	return model == PathModel::Strict ? prev < next : prev <= next;
}

/**
 * Sorted, duplicate-free set of non-negative time labels.
 */
class TimeSet {
public:
	TimeSet() = default;
	TimeSet(std::initializer_list<Time> labels)
	    : TimeSet(std::vector<Time>(labels))
	{
	}
	explicit TimeSet(std::vector<Time> labels) : labels_(std::move(labels))
	{
		std::sort(labels_.begin(), labels_.end());
		labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
		if (!labels_.empty() && labels_.front() < 0)
			throw GraphError("negative time label");
	}

	bool empty() const { return labels_.empty(); }
	std::size_t size() const { return labels_.size(); }
	Time min() const { return labels_.front(); }
	Time max() const { return labels_.back(); }
	std::span<const Time> labels() const { return labels_; }
	auto begin() const { return labels_.begin(); }
	auto end() const { return labels_.end(); }

	bool contains(Time t) const
	{
		return std::binary_search(labels_.begin(), labels_.end(), t);
	}

	std::optional<Time> earliest_at_least(Time t) const
	{
		auto it = std::lower_bound(labels_.begin(), labels_.end(), t);
		if (it == labels_.end())
			return std::nullopt;
		return *it;
	}

	/// Earliest label in the closed range [lo, hi].
	std::optional<Time> earliest_between(Time lo, Time hi) const
	{
		auto t = earliest_at_least(lo);
		if (!t || *t > hi)
			return std::nullopt;
		return t;
	}

	std::optional<Time> latest_at_most(Time t) const
	{
		auto it = std::upper_bound(labels_.begin(), labels_.end(), t);
		if (it == labels_.begin())
			return std::nullopt;
		return *std::prev(it);
	}

	TimeSet without(const TimeSet& other) const
	{
		std::vector<Time> out;
		std::set_difference(labels_.begin(), labels_.end(), other.begin(), other.end(),
		                    std::back_inserter(out));
		return TimeSet(std::move(out));
	}

	TimeSet united(const TimeSet& other) const
	{
		std::vector<Time> out;
		std::set_union(labels_.begin(), labels_.end(), other.begin(), other.end(),
		               std::back_inserter(out));
		return TimeSet(std::move(out));
	}

	TimeSet shifted(Time offset) const
	{
		std::vector<Time> out(labels_);
		for (auto& t : out)
			t += offset;
		return TimeSet(std::move(out));
	}

	friend bool operator==(const TimeSet&, const TimeSet&) = default;

private:
	std::vector<Time> labels_;
};

struct ArcEnds {
	VertexId tail;
	VertexId head;
	friend bool operator==(const ArcEnds&, const ArcEnds&) = default;
};

/**
 * Simple static digraph with named vertices.
 *
 * Vertex names are interned to dense ids in insertion order; arcs are
 * numbered in insertion order. Self-loops and parallel arcs are rejected.
 */
class Digraph {
public:
	/// Returns the id of `name`, adding the vertex if it is new.
	VertexId intern(std::string_view name)
	{
		if (auto it = index_.find(std::string(name)); it != index_.end())
			return it->second;
		const auto id = static_cast<VertexId>(names_.size());
		names_.emplace_back(name);
		index_.emplace(names_.back(), id);
		out_.emplace_back();
		in_.emplace_back();
		return id;
	}

	ArcId add_arc(VertexId tail, VertexId head)
	{
		if (tail >= vertex_count() || head >= vertex_count())
			throw GraphError("arc endpoint out of range");
		if (tail == head)
			throw GraphError("self-loop on " + names_[tail]);
		if (find_arc(tail, head))
			throw GraphError("duplicate arc " + names_[tail] + " -> " + names_[head]);
		const auto id = static_cast<ArcId>(arcs_.size());
		arcs_.push_back({tail, head});
		out_[tail].push_back(id);
		in_[head].push_back(id);
		lookup_.emplace(key(tail, head), id);
		return id;
	}

	ArcId add_arc(std::string_view tail, std::string_view head)
	{
		const auto u = intern(tail);
		const auto v = intern(head);
		return add_arc(u, v);
	}

	std::size_t vertex_count() const { return names_.size(); }
	std::size_t arc_count() const { return arcs_.size(); }

	const ArcEnds& arc(ArcId a) const { return arcs_.at(a); }
	VertexId tail(ArcId a) const { return arcs_.at(a).tail; }
	VertexId head(ArcId a) const { return arcs_.at(a).head; }
	std::span<const ArcEnds> arcs() const { return arcs_; }
	std::span<const ArcId> out_arcs(VertexId v) const { return out_.at(v); }
	std::span<const ArcId> in_arcs(VertexId v) const { return in_.at(v); }

	std::optional<ArcId> find_arc(VertexId tail, VertexId head) const
	{
		if (auto it = lookup_.find(key(tail, head)); it != lookup_.end())
			return it->second;
		return std::nullopt;
	}

	const std::string& name(VertexId v) const { return names_.at(v); }
	std::span<const std::string> names() const { return names_; }

	std::optional<VertexId> find_vertex(std::string_view name) const
	{
		if (auto it = index_.find(std::string(name)); it != index_.end())
			return it->second;
		return std::nullopt;
	}

	VertexId vertex(std::string_view name) const
	{
		if (auto v = find_vertex(name))
			return *v;
		throw GraphError("unknown vertex '" + std::string(name) + "'");
	}

	bool has_digon() const
	{
		return std::any_of(arcs_.begin(), arcs_.end(), [this](const ArcEnds& a) {
			return find_arc(a.head, a.tail).has_value();
		});
	}

	friend bool operator==(const Digraph& a, const Digraph& b)
	{
		return a.names_ == b.names_ && a.arcs_ == b.arcs_;
	}

private:
	static std::uint64_t key(VertexId u, VertexId v)
	{
		return (static_cast<std::uint64_t>(u) << 32) | v;
	}

	std::vector<std::string> names_;
	std::unordered_map<std::string, VertexId> index_;
	std::vector<ArcEnds> arcs_;
	std::vector<std::vector<ArcId>> out_;
	std::vector<std::vector<ArcId>> in_;
	std::unordered_map<std::uint64_t, ArcId> lookup_;
};

/**
 * A digraph plus a non-empty label set on each arc.
 *
 * The lifetime is the largest label present, 0 when there are no arcs.
 */
class TemporalDigraph {
public:
	TemporalDigraph() = default;

	TemporalDigraph(Digraph graph, std::vector<TimeSet> times)
	    : graph_(std::move(graph)), times_(std::move(times))
	{
		if (times_.size() != graph_.arc_count())
			throw GraphError("label sets do not match arc count");
		for (ArcId a = 0; a < times_.size(); ++a) {
			if (times_[a].empty())
				throw GraphError("empty time set on arc " + graph_.name(graph_.tail(a)) + " -> " +
				                 graph_.name(graph_.head(a)));
			lifetime_ = std::max(lifetime_, times_[a].max());
		}
	}

	VertexId intern(std::string_view name) { return graph_.intern(name); }

	ArcId add_arc(VertexId tail, VertexId head, TimeSet times)
	{
		if (times.empty())
			throw GraphError("empty time set");
		const auto a = graph_.add_arc(tail, head);
		lifetime_ = std::max(lifetime_, times.max());
		times_.push_back(std::move(times));
		return a;
	}

	ArcId add_arc(std::string_view tail, std::string_view head, TimeSet times)
	{
		const auto u = graph_.intern(tail);
		const auto v = graph_.intern(head);
		return add_arc(u, v, std::move(times));
	}

	const Digraph& graph() const { return graph_; }
	const TimeSet& times(ArcId a) const { return times_.at(a); }
	std::span<const TimeSet> all_times() const { return times_; }
	Time lifetime() const { return lifetime_; }
	std::size_t vertex_count() const { return graph_.vertex_count(); }
	std::size_t arc_count() const { return graph_.arc_count(); }

	friend bool operator==(const TemporalDigraph&, const TemporalDigraph&) = default;

private:
	Digraph graph_;
	std::vector<TimeSet> times_;
	Time lifetime_ = 0;
};

/**
 * Alternating vertex/time sequence v1, t1, v2, ..., tq, v(q+1).
 */
struct TemporalWalk {
	std::vector<VertexId> vertices;
	std::vector<Time> times;

	VertexId start() const { return vertices.front(); }
	VertexId end() const { return vertices.back(); }
	std::size_t length() const { return times.size(); }
	Time departure() const { return times.front(); }
	Time arrival() const { return times.back(); }
	bool closed() const { return !times.empty() && start() == end(); }

	friend bool operator==(const TemporalWalk&, const TemporalWalk&) = default;
};

using TemporalPath = TemporalWalk;

struct Cycle {
	/// v1..vq; the closing arc vq -> v1 is implied.
	std::vector<VertexId> vertices;

	std::size_t length() const { return vertices.size(); }
	friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct CycleWitness {
	CycleKind kind;
	Cycle cycle;
	std::vector<TemporalWalk> paths;
};

inline bool is_temporal_walk(const TemporalDigraph& d, const TemporalWalk& w, PathModel model)
{
	if (w.vertices.empty() || w.vertices.size() != w.times.size() + 1)
		return false;
	for (std::size_t i = 0; i < w.times.size(); ++i) {
		auto a = d.graph().find_arc(w.vertices[i], w.vertices[i + 1]);
		if (!a || !d.times(*a).contains(w.times[i]))
			return false;
		if (i > 0 && !chains(model, w.times[i - 1], w.times[i]))
			return false;
	}
	return true;
}

namespace detail {
inline bool distinct(std::span<const VertexId> vs)
{
	std::vector<VertexId> sorted(vs.begin(), vs.end());
	std::sort(sorted.begin(), sorted.end());
	return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}
} // namespace detail

inline bool is_temporal_path(const TemporalDigraph& d, const TemporalWalk& w, PathModel model)
{
	return is_temporal_walk(d, w, model) && detail::distinct(w.vertices);
}

/// Non-trivial temporal x,x-path: a closed walk whose inner vertices are distinct.
inline bool is_closed_temporal_path(const TemporalDigraph& d, const TemporalWalk& w, PathModel model)
{
	if (!w.closed() || !is_temporal_walk(d, w, model))
		return false;
	return detail::distinct(std::span(w.vertices).first(w.vertices.size() - 1));
}

/// Arcs of `c` in traversal order, or nullopt if `c` is not a cycle of `g`.
inline std::optional<std::vector<ArcId>> try_cycle_arcs(const Digraph& g, const Cycle& c)
{
	if (c.vertices.size() < 2 || !detail::distinct(c.vertices))
		return std::nullopt;
	std::vector<ArcId> arcs;
	arcs.reserve(c.vertices.size());
	for (std::size_t i = 0; i < c.vertices.size(); ++i) {
		const auto u = c.vertices[i];
		const auto v = c.vertices[(i + 1) % c.vertices.size()];
		if (u >= g.vertex_count() || v >= g.vertex_count())
			return std::nullopt;
		auto a = g.find_arc(u, v);
		if (!a)
			return std::nullopt;
		arcs.push_back(*a);
	}
	return arcs;
}

inline std::vector<ArcId> cycle_arcs(const Digraph& g, const Cycle& c)
{
	auto arcs = try_cycle_arcs(g, c);
	if (!arcs)
		throw GraphError("vertex sequence is not a cycle of the digraph");
	return std::move(*arcs);
}

/**
 * Traverses a fixed arc sequence picking the smallest feasible label at
 * each step. Over a fixed sequence the greedy choice succeeds whenever
 * any label choice does, and it minimises every intermediate arrival.
 */
inline std::optional<std::vector<Time>> greedy_traverse(const TemporalDigraph& d,
                                                        std::span<const ArcId> arcs,
                                                        PathModel model,
                                                        std::optional<Time> lower = std::nullopt)
{
	std::vector<Time> times;
	times.reserve(arcs.size());
	std::optional<Time> prev;
	for (auto a : arcs) {
		std::optional<Time> t;
		if (prev)
			t = d.times(a).earliest_at_least(next_allowed(model, *prev));
		else
			t = lower ? d.times(a).earliest_at_least(*lower) : d.times(a).min();
		if (!t)
			return std::nullopt;
		times.push_back(*t);
		prev = t;
	}
	return times;
}

/// Closed temporal path around `c` starting at position `start`, if one exists.
inline std::optional<TemporalWalk> traverse_cycle_from(const TemporalDigraph& d, const Cycle& c,
                                                       std::size_t start, PathModel model)
{
	const auto arcs = cycle_arcs(d.graph(), c);
	const auto q = arcs.size();
	std::vector<ArcId> rotated(q);
	for (std::size_t i = 0; i < q; ++i)
		rotated[i] = arcs[(start + i) % q];
	auto times = greedy_traverse(d, rotated, model);
	if (!times)
		return std::nullopt;
	TemporalWalk w;
	for (std::size_t i = 0; i <= q; ++i)
		w.vertices.push_back(c.vertices[(start + i) % q]);
	w.times = std::move(*times);
	return w;
}

/**
 * Checks the structural invariants of a witness: the cycle is a cycle of
 * the digraph and each claimed temporal path is valid under `model` and
 * covers the arcs required by the witness kind. Returns a description of
 * the first violation, or nullopt when the witness is sound.
 */
inline std::optional<std::string> witness_violation(const TemporalDigraph& d, const CycleWitness& w,
                                                    PathModel model)
{
	const auto arcs = try_cycle_arcs(d.graph(), w.cycle);
	if (!arcs)
		return "cycle is not a cycle of the digraph";
	std::vector<ArcId> cycle_set(*arcs);
	std::sort(cycle_set.begin(), cycle_set.end());

	auto arcs_of = [&](const TemporalWalk& p) {
		std::vector<ArcId> out;
		for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
			out.push_back(*d.graph().find_arc(p.vertices[i], p.vertices[i + 1]));
		return out;
	};

	switch (w.kind) {
	case CycleKind::Simple: {
		if (w.paths.size() != 1)
			return "simple witness needs exactly one path";
		if (!is_closed_temporal_path(d, w.paths[0], model))
			return "simple witness path is not a closed temporal path";
		auto used = arcs_of(w.paths[0]);
		std::sort(used.begin(), used.end());
		if (used != cycle_set)
			return "simple witness path does not cover the cycle";
		return std::nullopt;
	}
	case CycleKind::Weak: {
		if (w.paths.size() != 2)
			return "weak witness needs exactly two paths";
		const auto& p = w.paths[0];
		const auto& q = w.paths[1];
		if (!is_temporal_path(d, p, model) || !is_temporal_path(d, q, model))
			return "weak witness path is not a temporal path";
		if (p.length() == 0 || q.length() == 0 || p.start() != q.end() || p.end() != q.start() ||
		    p.start() == p.end())
			return "weak witness paths do not form an x->y, y->x pair";
		auto used = arcs_of(p);
		auto more = arcs_of(q);
		used.insert(used.end(), more.begin(), more.end());
		std::sort(used.begin(), used.end());
		if (used != cycle_set)
			return "weak witness paths do not partition the cycle";
		return std::nullopt;
	}
	case CycleKind::Strong: {
		if (w.paths.size() != w.cycle.length())
			return "strong witness needs one path per cycle vertex";
		std::vector<VertexId> starts;
		for (const auto& p : w.paths) {
			if (!is_closed_temporal_path(d, p, model))
				return "strong witness path is not a closed temporal path";
			auto used = arcs_of(p);
			std::sort(used.begin(), used.end());
			if (used != cycle_set)
				return "strong witness path does not cover the cycle";
			starts.push_back(p.start());
		}
		std::sort(starts.begin(), starts.end());
		std::vector<VertexId> expected(w.cycle.vertices);
		std::sort(expected.begin(), expected.end());
		if (starts != expected)
			return "strong witness does not start a path at every cycle vertex";
		return std::nullopt;
	}
	}
	return "unknown witness kind";
}

/// Length of a shortest directed cycle; nullopt for acyclic digraphs.
inline std::optional<std::size_t> girth(const Digraph& g)
{
	const auto n = g.vertex_count();
	std::optional<std::size_t> best;
	std::vector<std::size_t> dist(n);
	std::vector<VertexId> queue;
	constexpr auto unseen = std::numeric_limits<std::size_t>::max();
	for (VertexId s = 0; s < n; ++s) {
		std::fill(dist.begin(), dist.end(), unseen);
		dist[s] = 0;
		queue.assign(1, s);
		for (std::size_t head = 0; head < queue.size(); ++head) {
			const auto u = queue[head];
			if (best && dist[u] + 1 >= *best)
				break;
			for (auto a : g.out_arcs(u)) {
				const auto v = g.head(a);
				if (v == s) {
					best = dist[u] + 1;
					break;
				}
				if (dist[v] == unseen) {
					dist[v] = dist[u] + 1;
					queue.push_back(v);
				}
			}
		}
	}
	return best;
}

inline std::optional<std::size_t> girth(const TemporalDigraph& d) { return girth(d.graph()); }

struct CycleEnumeration {
	std::vector<Cycle> cycles;
	bool truncated = false;
};

/**
 * Elementary circuit enumeration (Johnson). Each cycle is reported once,
 * rotated to start at its smallest vertex id. Stops after `max_cycles`
 * and sets `truncated` if more cycles exist.
 */
inline CycleEnumeration enumerate_cycles(const Digraph& g, std::size_t max_cycles)
{
	const auto n = static_cast<VertexId>(g.vertex_count());
	CycleEnumeration out;
	std::vector<char> in_comp(n), blocked(n);
	std::vector<std::vector<VertexId>> blist(n);
	std::vector<VertexId> stack;
	bool stop = false;

	// Strongly connected component of s within vertices >= s (iterative Tarjan
	// would be overkill at this scale; forward/backward reachability suffices).
	auto component_of = [&](VertexId s) {
		std::vector<char> fwd(n), bwd(n);
		std::vector<VertexId> work{s};
		fwd[s] = 1;
		while (!work.empty()) {
			auto u = work.back();
			work.pop_back();
			for (auto a : g.out_arcs(u)) {
				auto v = g.head(a);
				if (v >= s && !fwd[v]) {
					fwd[v] = 1;
					work.push_back(v);
				}
			}
		}
		work.assign(1, s);
		bwd[s] = 1;
		while (!work.empty()) {
			auto u = work.back();
			work.pop_back();
			for (auto a : g.in_arcs(u)) {
				auto v = g.tail(a);
				if (v >= s && !bwd[v]) {
					bwd[v] = 1;
					work.push_back(v);
				}
			}
		}
		for (VertexId v = 0; v < n; ++v)
			in_comp[v] = fwd[v] && bwd[v];
	};

	std::function<void(VertexId)> unblock = [&](VertexId u) {
		blocked[u] = 0;
		auto pending = std::move(blist[u]);
		blist[u].clear();
		for (auto w : pending)
			if (blocked[w])
				unblock(w);
	};

	std::function<bool(VertexId, VertexId)> circuit = [&](VertexId s, VertexId v) {
		bool found = false;
		stack.push_back(v);
		blocked[v] = 1;
		for (auto a : g.out_arcs(v)) {
			if (stop)
				break;
			const auto w = g.head(a);
			if (!in_comp[w])
				continue;
			if (w == s) {
				if (out.cycles.size() == max_cycles) {
					out.truncated = true;
					stop = true;
					break;
				}
				out.cycles.push_back(Cycle{stack});
				found = true;
			} else if (!blocked[w] && circuit(s, w)) {
				found = true;
			}
		}
		if (found) {
			unblock(v);
		} else {
			for (auto a : g.out_arcs(v)) {
				const auto w = g.head(a);
				if (in_comp[w] && std::find(blist[w].begin(), blist[w].end(), v) == blist[w].end())
					blist[w].push_back(v);
			}
		}
		stack.pop_back();
		return found;
	};

	for (VertexId s = 0; s < n && !stop; ++s) {
		component_of(s);
		std::fill(blocked.begin(), blocked.end(), 0);
		for (auto& b : blist)
			b.clear();
		circuit(s, s);
	}
	return out;
}

/**
 * Removes loops from a temporal walk by excising the segment between
 * repeated vertices. The kept times form a subsequence of the original
 * monotone sequence, so the result is a temporal path with the same
 * endpoints and an arrival no later than the walk's.
 */
inline TemporalPath simplify_walk(const TemporalDigraph& d, const TemporalWalk& w, PathModel model)
{
	if (!is_temporal_walk(d, w, model))
		throw GraphError("not a temporal walk under the given model");
	if (w.closed())
		throw GraphError("closed walks cannot be simplified to a path");
	TemporalPath out;
	std::unordered_map<VertexId, std::size_t> position;
	out.vertices.push_back(w.vertices[0]);
	position[w.vertices[0]] = 0;
	for (std::size_t i = 0; i < w.times.size(); ++i) {
		const auto v = w.vertices[i + 1];
		if (auto it = position.find(v); it != position.end()) {
			const auto keep = it->second;
			for (std::size_t j = keep + 1; j < out.vertices.size(); ++j)
				position.erase(out.vertices[j]);
			out.vertices.resize(keep + 1);
			out.times.resize(keep);
			continue;
		}
		out.times.push_back(w.times[i]);
		position[v] = out.vertices.size();
		out.vertices.push_back(v);
	}
	return out;
}

/// Subgraph induced by `keep`, preserving vertex names, their relative order and labels.
inline TemporalDigraph induced_subgraph(const TemporalDigraph& d, std::span<const VertexId> keep)
{
	std::vector<char> mask(d.vertex_count());
	for (auto v : keep)
		mask.at(v) = 1;
	TemporalDigraph out;
	for (VertexId v = 0; v < d.vertex_count(); ++v)
		if (mask[v])
			out.intern(d.graph().name(v));
	for (ArcId a = 0; a < d.arc_count(); ++a) {
		const auto& e = d.graph().arc(a);
		if (mask[e.tail] && mask[e.head])
			out.add_arc(d.graph().name(e.tail), d.graph().name(e.head), d.times(a));
	}
	return out;
}

/// Renders `u -[t]-> v -[t]-> w` using vertex names.
inline std::string format_walk(const Digraph& g, const TemporalWalk& w)
{
	std::string s = g.name(w.vertices.front());
	for (std::size_t i = 0; i < w.times.size(); ++i) {
		s += " -[" + std::to_string(w.times[i]) + "]-> ";
		s += g.name(w.vertices[i + 1]);
	}
	return s;
}

inline std::string format_cycle(const Digraph& g, const Cycle& c)
{
	std::string s;
	for (auto v : c.vertices)
		s += g.name(v) + " -> ";
	return s + g.name(c.vertices.front());
}

} // namespace tcycle
