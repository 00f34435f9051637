#pragma once

// Single-source earliest arrival and single-target latest departure.

#include "core.hpp"

#include <compare>
#include <map>

namespace tcycle {

/// A time value extended with +infinity and -infinity.
class ExtTime {
public:
	constexpr explicit ExtTime(Time t) : rep_(t) {}

	static constexpr ExtTime plus_infinity() { return ExtTime(kPlus, 0); }
	static constexpr ExtTime minus_infinity() { return ExtTime(kMinus, 0); }

	constexpr bool is_finite() const { return rep_ != kPlus && rep_ != kMinus; }
	constexpr bool is_plus_infinity() const { return rep_ == kPlus; }
	constexpr bool is_minus_infinity() const { return rep_ == kMinus; }

	Time value() const
	{
		if (!is_finite())
			throw std::logic_error("infinite time has no value");
		return static_cast<Time>(rep_);
	}

	friend constexpr auto operator<=>(const ExtTime&, const ExtTime&) = default;

	std::string str() const
	{
		if (is_plus_infinity())
			return "+inf";
		if (is_minus_infinity())
			return "-inf";
		return std::to_string(rep_);
	}

private:
	static constexpr std::int64_t kPlus = std::numeric_limits<std::int64_t>::max();
	static constexpr std::int64_t kMinus = std::numeric_limits<std::int64_t>::min();
	constexpr ExtTime(std::int64_t rep, int) : rep_(rep) {}
	std::int64_t rep_;
};

enum class ReachDirection : std::uint8_t { EarliestArrival, LatestDeparture };

struct ReachStep {
	ArcId arc;
	Time time;
};

/**
 * Per-vertex earliest arrival from (or latest departure to) an anchor
 * vertex, with one link per vertex for witness reconstruction.
 */
class ReachResult {
public:
	ReachResult(ReachDirection direction, VertexId anchor, std::vector<ExtTime> values,
	            std::vector<std::optional<ReachStep>> links)
	    : direction_(direction), anchor_(anchor), values_(std::move(values)), links_(std::move(links))
	{
	}

	ReachDirection direction() const { return direction_; }
	VertexId anchor() const { return anchor_; }
	ExtTime value(VertexId v) const { return values_.at(v); }
	std::span<const ExtTime> values() const { return values_; }
	bool reached(VertexId v) const { return values_.at(v).is_finite(); }

	/**
	 * Temporal path realising value(v): anchor -> v for earliest arrival,
	 * v -> anchor for latest departure. The anchor itself yields the
	 * trivial one-vertex path.
	 */
	std::optional<TemporalPath> witness(const TemporalDigraph& d, VertexId v, PathModel model) const
	{
		if (!reached(v))
			return std::nullopt;
		TemporalWalk w;
		if (v == anchor_) {
			w.vertices.push_back(v);
			return w;
		}
		const auto& g = d.graph();
		if (direction_ == ReachDirection::EarliestArrival) {
			auto cur = v;
			w.vertices.push_back(cur);
			while (cur != anchor_) {
				const auto step = links_.at(cur).value();
				w.times.push_back(step.time);
				cur = g.tail(step.arc);
				w.vertices.push_back(cur);
				if (w.times.size() > d.vertex_count())
					throw std::logic_error("cyclic predecessor links");
			}
			std::reverse(w.vertices.begin(), w.vertices.end());
			std::reverse(w.times.begin(), w.times.end());
		} else {
			auto cur = v;
			w.vertices.push_back(cur);
			while (cur != anchor_) {
				const auto step = links_.at(cur).value();
				w.times.push_back(step.time);
				cur = g.head(step.arc);
				w.vertices.push_back(cur);
				if (w.times.size() > d.vertex_count())
					throw std::logic_error("cyclic successor links");
			}
		}
		return simplify_walk(d, w, model);
	}

private:
	ReachDirection direction_;
	VertexId anchor_;
	std::vector<ExtTime> values_;
	std::vector<std::optional<ReachStep>> links_;
};

namespace detail {

/// Temporal arcs grouped by label, ascending.
inline std::map<Time, std::vector<ArcId>> arcs_by_label(const TemporalDigraph& d)
{
	std::map<Time, std::vector<ArcId>> groups;
	for (ArcId a = 0; a < d.arc_count(); ++a)
		for (auto t : d.times(a))
			groups[t].push_back(a);
	return groups;
}

} // namespace detail

/**
 * Earliest arrival from `source` to every vertex.
 *
 * Temporal arcs are processed in label order; a vertex is fixed the first
 * time it is reached. Under the non-strict model arcs sharing a label may
 * chain, so each label group is closed by a breadth-first sweep over the
 * arcs of that label. `min_departure` restricts the first arc's label.
 */
inline ReachResult earliest_arrival(const TemporalDigraph& d, VertexId source, PathModel model,
                                    std::optional<Time> min_departure = std::nullopt)
{
	const auto& g = d.graph();
	if (source >= g.vertex_count())
		throw GraphError("unknown source vertex");
	const auto n = g.vertex_count();
	std::vector<char> reached(n);
	std::vector<ExtTime> value(n, ExtTime::plus_infinity());
	std::vector<std::optional<ReachStep>> link(n);
	reached[source] = 1;

	for (const auto& [t, group] : detail::arcs_by_label(d)) {
		if (min_departure && t < *min_departure)
			continue;
		if (model == PathModel::Strict) {
			std::vector<std::pair<VertexId, ArcId>> fresh;
			for (auto a : group)
				if (reached[g.tail(a)] && !reached[g.head(a)])
					fresh.emplace_back(g.head(a), a);
			for (auto [v, a] : fresh) {
				if (reached[v])
					continue;
				reached[v] = 1;
				value[v] = ExtTime(t);
				link[v] = ReachStep{a, t};
			}
			continue;
		}
		std::unordered_map<VertexId, std::vector<ArcId>> out;
		std::vector<ArcId> frontier;
		for (auto a : group) {
			out[g.tail(a)].push_back(a);
			if (reached[g.tail(a)])
				frontier.push_back(a);
		}
		for (std::size_t i = 0; i < frontier.size(); ++i) {
			const auto a = frontier[i];
			const auto v = g.head(a);
			if (reached[v])
				continue;
			reached[v] = 1;
			value[v] = ExtTime(t);
			link[v] = ReachStep{a, t};
			if (auto it = out.find(v); it != out.end())
				frontier.insert(frontier.end(), it->second.begin(), it->second.end());
		}
	}
	value[source] = ExtTime(0);
	return ReachResult(ReachDirection::EarliestArrival, source, std::move(value), std::move(link));
}

/**
 * Latest departure from every vertex to `target`: the largest first-arc
 * label over temporal paths ending at `target`. Mirror image of
 * earliest_arrival, scanning labels in descending order.
 */
inline ReachResult latest_departure(const TemporalDigraph& d, VertexId target, PathModel model)
{
	const auto& g = d.graph();
	if (target >= g.vertex_count())
		throw GraphError("unknown target vertex");
	const auto n = g.vertex_count();
	std::vector<char> ready(n);
	std::vector<ExtTime> value(n, ExtTime::minus_infinity());
	std::vector<std::optional<ReachStep>> link(n);
	ready[target] = 1;

	const auto groups = detail::arcs_by_label(d);
	for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
		const auto t = it->first;
		const auto& group = it->second;
		if (model == PathModel::Strict) {
			std::vector<std::pair<VertexId, ArcId>> fresh;
			for (auto a : group)
				if (ready[g.head(a)] && !ready[g.tail(a)])
					fresh.emplace_back(g.tail(a), a);
			for (auto [u, a] : fresh) {
				if (ready[u])
					continue;
				ready[u] = 1;
				value[u] = ExtTime(t);
				link[u] = ReachStep{a, t};
			}
			continue;
		}
		std::unordered_map<VertexId, std::vector<ArcId>> in;
		std::vector<ArcId> frontier;
		for (auto a : group) {
			in[g.head(a)].push_back(a);
			if (ready[g.head(a)])
				frontier.push_back(a);
		}
		for (std::size_t i = 0; i < frontier.size(); ++i) {
			const auto a = frontier[i];
			const auto u = g.tail(a);
			if (ready[u])
				continue;
			ready[u] = 1;
			value[u] = ExtTime(t);
			link[u] = ReachStep{a, t};
			if (auto jt = in.find(u); jt != in.end())
				frontier.insert(frontier.end(), jt->second.begin(), jt->second.end());
		}
	}
	value[target] = ExtTime(d.lifetime());
	return ReachResult(ReachDirection::LatestDeparture, target, std::move(value), std::move(link));
}

} // namespace tcycle
