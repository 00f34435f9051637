#pragma once

// Cycle detection: polynomial weak- and simple-cycle detection from
// earliest-arrival searches, and the timetable-based depth-first search
// for strong cycles whose cost is exponential only in the lifetime.

#include "core.hpp"
#include "reach.hpp"

#include <chrono>
#include <unordered_set>

namespace tcycle {

/// Weak cycle through some pair x != y with EAT(x, y) and EAT(y, x) finite.
inline std::optional<CycleWitness> detect_weak(const TemporalDigraph& d, PathModel model)
{
	const auto n = static_cast<VertexId>(d.vertex_count());
	std::vector<ReachResult> eat;
	eat.reserve(n);
	for (VertexId x = 0; x < n; ++x)
		eat.push_back(earliest_arrival(d, x, model));

	for (VertexId x = 0; x < n; ++x) {
		for (VertexId y = 0; y < n; ++y) {
			if (x == y || !eat[x].reached(y) || !eat[y].reached(x))
				continue;
			auto there = *eat[x].witness(d, y, model);
			auto back = *eat[y].witness(d, x, model);

			// If the paths meet at an inner vertex z, take the first such z on
			// x -> y. Then x -> z (prefix of the first path) and z -> x (suffix
			// of the second) share only their endpoints.
			std::vector<char> on_back(n);
			for (std::size_t i = 1; i + 1 < back.vertices.size(); ++i)
				on_back[back.vertices[i]] = 1;
			for (std::size_t i = 1; i + 1 < there.vertices.size(); ++i) {
				const auto z = there.vertices[i];
				if (!on_back[z])
					continue;
				const auto j = static_cast<std::size_t>(
				    std::find(back.vertices.begin(), back.vertices.end(), z) - back.vertices.begin());
				there.vertices.resize(i + 1);
				there.times.resize(i);
				back.vertices.erase(back.vertices.begin(), back.vertices.begin() + static_cast<std::ptrdiff_t>(j));
				back.times.erase(back.times.begin(), back.times.begin() + static_cast<std::ptrdiff_t>(j));
				break;
			}
			Cycle c{there.vertices};
			c.vertices.insert(c.vertices.end(), back.vertices.begin() + 1, back.vertices.end() - 1);
			return CycleWitness{CycleKind::Weak, std::move(c), {std::move(there), std::move(back)}};
		}
	}
	return std::nullopt;
}

/**
 * Simple cycle closing through some arc v -> r: the earliest-arrival path
 * r -> v followed by a label of v -> r that may follow its arrival.
 */
inline std::optional<CycleWitness> detect_simple(const TemporalDigraph& d, PathModel model)
{
	const auto& g = d.graph();
	std::vector<std::optional<ReachResult>> eat(g.vertex_count());
	for (ArcId a = 0; a < g.arc_count(); ++a) {
		const auto v = g.tail(a);
		const auto r = g.head(a);
		if (!eat[r])
			eat[r] = earliest_arrival(d, r, model);
		if (!eat[r]->reached(v))
			continue;
		const auto arrival = eat[r]->value(v).value();
		const auto close = d.times(a).earliest_at_least(next_allowed(model, arrival));
		if (!close)
			continue;
		auto path = *eat[r]->witness(d, v, model);
		Cycle c{path.vertices};
		path.vertices.push_back(r);
		path.times.push_back(*close);
		return CycleWitness{CycleKind::Simple, std::move(c), {std::move(path)}};
	}
	return std::nullopt;
}

/**
 * Timetable of length lifetime + 1. Entry value 0 means "no path"; the
 * strong-cycle search therefore runs on labels shifted up by one so that
 * a genuine label is never 0.
 *
 * Root table: entry t holds the earliest arrival at the search path's last
 * vertex for walks leaving the root at time >= t.
 * Path table: entry x holds, over the path vertices u whose latest
 * departure from the root is x + 1, the largest earliest arrival from u at
 * the last vertex. Entry `lifetime` is the root's own entry.
 */
class Timetable {
public:
	explicit Timetable(Time lifetime) : entries_(static_cast<std::size_t>(lifetime) + 1, 0)
	{
		if (lifetime < 0)
			throw std::invalid_argument("negative lifetime");
	}
	explicit Timetable(std::vector<Time> entries) : entries_(std::move(entries))
	{
		if (entries_.empty())
			throw std::invalid_argument("timetable needs at least one entry");
		const auto tau = lifetime();
		for (auto e : entries_)
			if (e < 0 || e > tau)
				throw std::invalid_argument("timetable value out of range");
	}

	Time lifetime() const { return static_cast<Time>(entries_.size()) - 1; }
	std::size_t size() const { return entries_.size(); }
	Time operator[](std::size_t i) const { return entries_[i]; }
	Time& operator[](std::size_t i) { return entries_[i]; }
	std::span<const Time> entries() const { return entries_; }

	bool all_zero() const
	{
		return std::all_of(entries_.begin(), entries_.end(), [](Time e) { return e == 0; });
	}

	std::optional<std::size_t> max_nonzero_index() const
	{
		for (std::size_t i = entries_.size(); i-- > 0;)
			if (entries_[i] != 0)
				return i;
		return std::nullopt;
	}

	friend bool operator==(const Timetable&, const Timetable&) = default;

private:
	std::vector<Time> entries_;
};

struct Extension {
	Timetable root;
	Timetable path;
	bool extended;
};

/// Largest arrival value a path-table entry at index x may hold.
constexpr Time path_deadline(PathModel model, std::size_t x)
{
	return model == PathModel::Strict ? static_cast<Time>(x) : static_cast<Time>(x) + 1;
}

/**
 * Extends the timetables of a search path over an arc carrying `times`.
 * Pure function of its arguments. On failure the input tables are
 * returned unchanged with `extended == false`.
 */
inline Extension extend(const Timetable& root, const Timetable& path, const TimeSet& times, PathModel model)
{
	if (root.size() != path.size())
		throw std::invalid_argument("timetables differ in length");
	if (times.empty())
		throw std::invalid_argument("arc has no labels");
	if (times.max() > root.lifetime())
		throw std::invalid_argument("label exceeds timetable lifetime");

	const auto deepest = root.max_nonzero_index();
	// No walk from the root reaches the last vertex, or the only departure
	// would be at the reserved time 0.
	if (!deepest || *deepest == 0)
		return {root, path, false};

	Timetable next_root = root;
	Timetable next_path = path;
	for (std::size_t t = 0; t < root.size(); ++t) {
		if (root[t] != 0)
			next_root[t] = times.earliest_at_least(next_allowed(model, root[t])).value_or(0);
		if (path[t] != 0) {
			auto label = times.earliest_between(next_allowed(model, path[t]), path_deadline(model, t));
			if (!label)
				return {root, path, false};
			next_path[t] = *label;
		}
	}
	auto& entry = next_path[*deepest - 1];
	entry = std::max(entry, times.min());
	return {std::move(next_root), std::move(next_path), true};
}

inline bool within_deadlines(const Timetable& path, PathModel model)
{
	for (std::size_t x = 0; x < path.size(); ++x)
		if (path[x] != 0 && path[x] > path_deadline(model, x))
			return false;
	return true;
}

/**
 * Memo of (arc, root table, path table) states that were explored without
 * finding a strong cycle. Hash set in place of a dense boolean matrix.
 */
class BlockingStore {
public:
	static std::string key(ArcId arc, const Timetable& root, const Timetable& path)
	{
		std::string k;
		k.reserve(sizeof(ArcId) + (root.size() + path.size()) * sizeof(Time));
		auto put = [&k](const void* p, std::size_t n) { k.append(static_cast<const char*>(p), n); };
		put(&arc, sizeof arc);
		put(root.entries().data(), root.size() * sizeof(Time));
		put(path.entries().data(), path.size() * sizeof(Time));
		return k;
	}

	bool contains(const std::string& k) const { return blocked_.count(k) != 0; }
	void insert(std::string k) { blocked_.insert(std::move(k)); }
	std::size_t size() const { return blocked_.size(); }
	void clear() { blocked_.clear(); }

private:
	std::unordered_set<std::string> blocked_;
};

struct ExplorationStats {
	/// extend() calls per arc, over all root searches.
	std::vector<std::size_t> explorations;
	/// Distinct (root, path) table pairs seen per arc, summed over root searches.
	std::vector<std::size_t> distinct_timetables;
	std::size_t recursions = 0;
	/// Times an (arc, tables) triple was extended again within one root search.
	std::size_t repeated_extensions = 0;
	std::size_t blocked_skips = 0;
	std::size_t closure_attempts = 0;
	/// Closures the literal search would accept but whose path table misses a deadline.
	std::size_t closure_rejections = 0;
	/// Accepted closures whose cycle failed re-traversal; should stay 0.
	std::size_t witness_rejections = 0;
	std::size_t root_searches = 0;
	std::size_t max_blocking_store = 0;
	bool aborted = false;
};

struct StrongDetection {
	std::optional<CycleWitness> witness;
	ExplorationStats stats;
	/// The search reported success. Without closure validation this can
	/// hold while `witness` is empty (the closed cycle is not strong).
	bool accepted = false;
};

struct StrongSearchOptions {
	/// Stop after this many extend() calls; the result is then `aborted`.
	std::optional<std::size_t> max_explorations;
	/// Wall-clock limit, checked every 1024 extend() calls.
	std::optional<std::chrono::steady_clock::time_point> deadline;
	/// Check path-table deadlines before accepting a closure. Turning this
	/// off reproduces the unchecked closure rule for comparison.
	bool validate_closure = true;
};

namespace detail {

class StrongSearch {
public:
	StrongSearch(const TemporalDigraph& d, PathModel model, StrongSearchOptions options)
	    : d_(d), g_(d.graph()), model_(model), options_(options), on_path_(d.vertex_count())
	{
		shifted_.reserve(d.arc_count());
		for (auto& ts : d.all_times())
			shifted_.push_back(ts.shifted(1));
		lifetime_ = d.lifetime() + 1;
		stats_.explorations.assign(d.arc_count(), 0);
		stats_.distinct_timetables.assign(d.arc_count(), 0);
	}

	StrongDetection run()
	{
		for (ArcId a = 0; a < g_.arc_count() && !accepted_ && !stats_.aborted; ++a)
			search_root(a);
		return {std::move(found_), std::move(stats_), accepted_};
	}

private:
	void search_root(ArcId a)
	{
		++stats_.root_searches;
		const auto& times = shifted_[a];
		Timetable root(lifetime_), path(lifetime_);
		for (Time t = 0; t <= times.max(); ++t)
			root[static_cast<std::size_t>(t)] = *times.earliest_at_least(t);
		path[static_cast<std::size_t>(lifetime_)] = times.min();

		store_.clear();
		seen_.clear();
		path_ = {g_.tail(a), g_.head(a)};
		on_path_.assign(on_path_.size(), 0);
		on_path_[g_.tail(a)] = on_path_[g_.head(a)] = 1;
		search(root, path);
		stats_.max_blocking_store = std::max(stats_.max_blocking_store, store_.size());
	}

	bool search(const Timetable& root, const Timetable& path)
	{
		++stats_.recursions;
		const auto u = path_.back();
		for (auto a : g_.out_arcs(u)) {
			auto k = BlockingStore::key(a, root, path);
			if (store_.contains(k)) {
				++stats_.blocked_skips;
				continue;
			}
			if ((options_.max_explorations && total_explorations_ >= *options_.max_explorations) ||
			    (options_.deadline && total_explorations_ % 1024 == 0 &&
			     std::chrono::steady_clock::now() > *options_.deadline)) {
				stats_.aborted = true;
				return false;
			}
			++total_explorations_;
			++stats_.explorations[a];
			if (seen_.insert(k).second)
				++stats_.distinct_timetables[a];
			else
				++stats_.repeated_extensions;

			auto ext = extend(root, path, shifted_[a], model_);
			if (ext.extended) {
				const auto w = g_.head(a);
				if (on_path_[w]) {
					if (close_at(w, ext.path))
						return true;
				} else {
					path_.push_back(w);
					on_path_[w] = 1;
					if (search(ext.root, ext.path))
						return true;
					on_path_[w] = 0;
					path_.pop_back();
				}
				if (stats_.aborted)
					return false;
			}
			store_.insert(std::move(k));
		}
		return false;
	}

	bool close_at(VertexId w, const Timetable& path)
	{
		++stats_.closure_attempts;
		if (!within_deadlines(path, model_)) {
			++stats_.closure_rejections;
			if (options_.validate_closure)
				return false;
		}
		auto from = std::find(path_.begin(), path_.end(), w);
		Cycle c{std::vector<VertexId>(from, path_.end())};
		CycleWitness witness{CycleKind::Strong, c, {}};
		for (std::size_t s = 0; s < c.length(); ++s) {
			auto walk = traverse_cycle_from(d_, c, s, model_);
			if (!walk) {
				++stats_.witness_rejections;
				if (options_.validate_closure)
					return false;
				accepted_ = true;
				return true;
			}
			witness.paths.push_back(std::move(*walk));
		}
		found_ = std::move(witness);
		accepted_ = true;
		return true;
	}

	const TemporalDigraph& d_;
	const Digraph& g_;
	PathModel model_;
	StrongSearchOptions options_;
	std::vector<TimeSet> shifted_;
	Time lifetime_ = 0;
	BlockingStore store_;
	std::unordered_set<std::string> seen_;
	std::vector<VertexId> path_;
	std::vector<char> on_path_;
	std::optional<CycleWitness> found_;
	ExplorationStats stats_;
	std::size_t total_explorations_ = 0;
	bool accepted_ = false;
};

} // namespace detail

/**
 * Strong-cycle search. Each arc r -> v seeds a depth-first search over
 * simple paths from r with a fresh blocking store; an arc whose
 * (arc, tables) state already failed in this root search is skipped.
 * Meeting a vertex already on the path closes a cycle, accepted when every
 * path-table entry meets its deadline.
 */
inline StrongDetection detect_strong(const TemporalDigraph& d, PathModel model,
                                     StrongSearchOptions options = {})
{
	return detail::StrongSearch(d, model, options).run();
}

} // namespace tcycle
