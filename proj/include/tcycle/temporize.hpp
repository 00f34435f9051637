#pragma once

// Acyclic temporizations: order-based constructions, the girth dispatcher,
// the strict-model shortcut, lifetime-bounded exhaustive search, and the
// lifetime-2 alternation conditions.

#include "core.hpp"
#include "io.hpp"
#include "oracle.hpp"

#include <map>
#include <numeric>

namespace tcycle {

/// Label set per arc, indexed by ArcId of the target digraph.
using Temporization = std::vector<TimeSet>;

enum class Verdict : std::uint8_t { Yes, No, Unknown, Aborted };

inline std::string_view to_string(Verdict v)
{
	switch (v) {
	case Verdict::Yes: return "yes";
	case Verdict::No: return "no";
	case Verdict::Unknown: return "unknown";
	case Verdict::Aborted: return "aborted";
	}
	return "?";
}

struct TemporizationDecision {
	Verdict verdict;
	std::optional<Temporization> temporization;
	std::string reason;
	/// Search nodes visited; 0 for closed-form answers.
	std::size_t nodes = 0;
};

inline TemporalDigraph apply_temporization(const Digraph& g, const Temporization& labels)
{
	return TemporalDigraph(g, labels);
}

inline std::vector<VertexId> identity_order(const Digraph& g)
{
	std::vector<VertexId> order(g.vertex_count());
	std::iota(order.begin(), order.end(), VertexId{0});
	return order;
}

namespace detail {

inline std::vector<std::size_t> ranks(const Digraph& g, std::span<const VertexId> order)
{
	const auto n = g.vertex_count();
	if (order.size() != n)
		throw std::invalid_argument("vertex order has " + std::to_string(order.size()) + " entries, expected " +
		                            std::to_string(n));
	std::vector<std::size_t> rank(n, n);
	for (std::size_t i = 0; i < n; ++i) {
		if (order[i] >= n || rank[order[i]] != n)
			throw std::invalid_argument("vertex order is not a permutation");
		rank[order[i]] = i;
	}
	return rank;
}

} // namespace detail

/**
 * Descending arcs (tail after head in the order) get labels 1..m' in
 * lexicographic order of (tail, head); ascending arcs get m'+1..m with the
 * lexicographically largest ascending arc getting m'+1.
 */
inline Temporization lexicographic_temporization(const Digraph& g, std::span<const VertexId> order)
{
	const auto rank = detail::ranks(g, order);
	std::vector<ArcId> down, up;
	for (ArcId a = 0; a < g.arc_count(); ++a)
		(rank[g.tail(a)] > rank[g.head(a)] ? down : up).push_back(a);
	auto lex = [&](ArcId x, ArcId y) {
		return std::pair(rank[g.tail(x)], rank[g.head(x)]) < std::pair(rank[g.tail(y)], rank[g.head(y)]);
	};
	std::sort(down.begin(), down.end(), lex);
	std::sort(up.begin(), up.end(), lex);

	Temporization out(g.arc_count());
	Time next = 1;
	for (auto a : down)
		out[a] = TimeSet{next++};
	for (auto it = up.rbegin(); it != up.rend(); ++it)
		out[*it] = TimeSet{next++};
	return out;
}

inline Temporization lexicographic_temporization(const Digraph& g)
{
	return lexicographic_temporization(g, identity_order(g));
}

/// Ascending arcs {1}, descending arcs {2}.
inline Temporization strong_acyclic_temporization(const Digraph& g, std::span<const VertexId> order)
{
	const auto rank = detail::ranks(g, order);
	Temporization out(g.arc_count());
	for (ArcId a = 0; a < g.arc_count(); ++a)
		out[a] = rank[g.tail(a)] < rank[g.head(a)] ? TimeSet{1} : TimeSet{2};
	return out;
}

inline Temporization strong_acyclic_temporization(const Digraph& g)
{
	return strong_acyclic_temporization(g, identity_order(g));
}

/// Closed-form answer for unbounded lifetime under the non-strict model.
inline TemporizationDecision acyclic_temporization(const Digraph& g, CycleKind kind,
                                                   std::optional<std::span<const VertexId>> order = std::nullopt)
{
	const auto ord = order ? std::vector<VertexId>(order->begin(), order->end()) : identity_order(g);
	const auto gi = girth(g);
	const auto girth_text = gi ? "girth " + std::to_string(*gi) : std::string("acyclic");
	switch (kind) {
	case CycleKind::Strong:
		return {Verdict::Yes, strong_acyclic_temporization(g, ord), "order-based two-label temporization"};
	case CycleKind::Simple:
		if (gi && *gi <= 2)
			return {Verdict::No, std::nullopt, "girth 2: a digon is always a simple cycle"};
		return {Verdict::Yes, lexicographic_temporization(g, ord), girth_text + ", lexicographic temporization"};
	case CycleKind::Weak:
		if (gi && *gi <= 3)
			return {Verdict::No, std::nullopt, girth_text + ": every temporization has a weak cycle"};
		if (gi && *gi == 4)
			return {Verdict::Unknown, std::nullopt, "girth 4: open case"};
		return {Verdict::Yes, lexicographic_temporization(g, ord), girth_text + ", lexicographic temporization"};
	}
	throw std::logic_error("unhandled cycle kind");
}

/// Strict model: label 1 everywhere; only digons force a weak cycle.
inline TemporizationDecision strict_acyclic_temporization(const Digraph& g, CycleKind kind)
{
	if (kind == CycleKind::Weak && g.has_digon())
		return {Verdict::No, std::nullopt, "digon: a 2-cycle is weak under any temporization"};
	return {Verdict::Yes, Temporization(g.arc_count(), TimeSet{1}), "all arcs at time 1"};
}

struct AlternationViolation {
	Cycle cycle;
	std::string reason;
};

/**
 * Necessary conditions for a lifetime-2 temporization without cycles of
 * `kind`: no cycles shorter than 4 (simple) or 6 (weak), and every cycle
 * of exactly that length carries singleton labels that alternate.
 */
inline std::vector<AlternationViolation> check_alternation_conditions(const Digraph& g, const Temporization& labels,
                                                                      CycleKind kind,
                                                                      std::size_t cycle_cap = kOracleCycleCap)
{
	if (kind == CycleKind::Strong)
		throw std::invalid_argument("alternation conditions are stated for simple and weak cycles");
	if (labels.size() != g.arc_count())
		throw std::invalid_argument("temporization does not cover every arc");
	for (const auto& ts : labels)
		for (auto t : ts)
			if (t != 1 && t != 2)
				throw std::invalid_argument("alternation conditions need labels in {1,2}, got " + std::to_string(t));

	const std::size_t critical = kind == CycleKind::Simple ? 4 : 6;
	auto cycles = enumerate_cycles(g, cycle_cap);
	if (cycles.truncated)
		throw OracleCapExceeded("more than " + std::to_string(cycle_cap) + " cycles");

	std::vector<AlternationViolation> out;
	for (auto& c : cycles.cycles) {
		if (c.length() < critical) {
			out.push_back({c, "cycle of length " + std::to_string(c.length()) + " < " + std::to_string(critical)});
			continue;
		}
		if (c.length() > critical)
			continue;
		const auto arcs = cycle_arcs(g, c);
		bool ok = true;
		for (std::size_t i = 0; i < arcs.size() && ok; ++i) {
			const auto& here = labels[arcs[i]];
			const auto& next = labels[arcs[(i + 1) % arcs.size()]];
			ok = here.size() == 1 && next.size() == 1 && here.min() != next.min();
		}
		if (!ok)
			out.push_back({c, "labels do not alternate as singletons"});
	}
	return out;
}

struct BoundedSearchOptions {
	/// Cycle-completion pruning plus the alternation conditions at lifetime 2.
	/// When false every assignment is generated and checked whole.
	bool pruned = true;
	/// Arcs whose label set is fixed in advance.
	std::map<ArcId, TimeSet> pinned;
	PathModel model = PathModel::NonStrict;
	std::size_t cycle_cap = kOracleCycleCap;
};

namespace detail {

/// Non-empty subsets of {1..tau}: singletons ascending, then larger subsets.
inline std::vector<TimeSet> label_domain(Time tau)
{
	std::vector<TimeSet> out;
	for (std::uint32_t mask = 1; mask < (1u << tau); ++mask) {
		std::vector<Time> labels;
		for (Time t = 1; t <= tau; ++t)
			if (mask & (1u << (t - 1)))
				labels.push_back(t);
		out.emplace_back(std::move(labels));
	}
	std::stable_sort(out.begin(), out.end(), [](const TimeSet& x, const TimeSet& y) { return x.size() < y.size(); });
	return out;
}

inline bool greedy_labels(const std::vector<const TimeSet*>& seq, std::size_t from, std::size_t count, PathModel model)
{
	std::optional<Time> prev;
	for (std::size_t k = 0; k < count; ++k) {
		const auto& ts = *seq[(from + k) % seq.size()];
		auto t = prev ? ts.earliest_at_least(next_allowed(model, *prev)) : std::optional<Time>(ts.min());
		if (!t)
			return false;
		prev = t;
	}
	return true;
}

/// Whether a cycle whose arcs carry `seq` (in cycle order) is of `kind`.
inline bool labels_form(const std::vector<const TimeSet*>& seq, CycleKind kind, PathModel model)
{
	const auto q = seq.size();
	switch (kind) {
	case CycleKind::Simple:
		for (std::size_t s = 0; s < q; ++s)
			if (greedy_labels(seq, s, q, model))
				return true;
		return false;
	case CycleKind::Strong:
		for (std::size_t s = 0; s < q; ++s)
			if (!greedy_labels(seq, s, q, model))
				return false;
		return true;
	case CycleKind::Weak:
		for (std::size_t i = 0; i < q; ++i)
			for (std::size_t len = 1; len < q; ++len)
				if (greedy_labels(seq, i, len, model) && greedy_labels(seq, (i + len) % q, q - len, model))
					return true;
		return false;
	}
	return false;
}

} // namespace detail

/**
 * Searches label assignments with labels in {1..tau_max} for one without
 * cycles of `kind`. Yes answers are re-checked with oracle_detect. The
 * budget bounds the number of search nodes (partial assignments).
 */
inline TemporizationDecision bounded_lifetime_search(const Digraph& g, CycleKind kind, Time tau_max,
                                                     std::size_t budget, const BoundedSearchOptions& options = {})
{
	if (tau_max < 1 || tau_max > 16)
		throw std::invalid_argument("lifetime bound must be in 1..16");
	for (const auto& [a, ts] : options.pinned) {
		if (a >= g.arc_count())
			throw std::invalid_argument("pinned arc out of range");
		if (ts.empty() || ts.min() < 1 || ts.max() > tau_max)
			throw std::invalid_argument("pinned labels outside 1..tau_max");
	}

	auto enumeration = enumerate_cycles(g, options.cycle_cap);
	if (enumeration.truncated)
		return {Verdict::Aborted, std::nullopt, "cycle enumeration exceeded its cap", 0};
	auto& cycles = enumeration.cycles;
	std::stable_sort(cycles.begin(), cycles.end(),
	                 [](const Cycle& x, const Cycle& y) { return x.length() < y.length(); });
	std::vector<std::vector<ArcId>> cycle_arc_lists;
	for (const auto& c : cycles)
		cycle_arc_lists.push_back(cycle_arcs(g, c));

	const auto full_domain = detail::label_domain(tau_max);
	std::vector<std::vector<TimeSet>> domain(g.arc_count(), full_domain);
	std::vector<char> on_cycle(g.arc_count());
	for (const auto& arcs : cycle_arc_lists)
		for (auto a : arcs)
			on_cycle[a] = 1;

	const bool alternation = options.pruned && tau_max == 2 && kind != CycleKind::Strong &&
	                         options.model == PathModel::NonStrict;
	const std::size_t critical = kind == CycleKind::Simple ? 4 : 6;
	if (alternation) {
		for (const auto& c : cycles)
			if (c.length() < critical)
				return {Verdict::No, std::nullopt,
				        "cycle of length " + std::to_string(c.length()) + " < " + std::to_string(critical) +
				            " cannot avoid a " + std::string(to_string(kind)) + " cycle at lifetime 2",
				        0};
		for (std::size_t i = 0; i < cycles.size(); ++i)
			if (cycles[i].length() == critical)
				for (auto a : cycle_arc_lists[i])
					domain[a] = {TimeSet{1}, TimeSet{2}};
	}
	if (options.pruned)
		for (ArcId a = 0; a < g.arc_count(); ++a)
			if (!on_cycle[a])
				domain[a] = {domain[a].front()};
	for (const auto& [a, ts] : options.pinned)
		domain[a] = {ts};

	// Arcs in cycle order (shortest cycles first); a cycle is checked when
	// its last arc in this order is assigned.
	std::vector<ArcId> arc_order;
	std::vector<std::size_t> position(g.arc_count(), g.arc_count());
	auto place = [&](ArcId a) {
		if (position[a] == g.arc_count()) {
			position[a] = arc_order.size();
			arc_order.push_back(a);
		}
	};
	for (const auto& arcs : cycle_arc_lists)
		for (auto a : arcs)
			place(a);
	for (ArcId a = 0; a < g.arc_count(); ++a)
		place(a);

	std::vector<std::vector<std::size_t>> completes(arc_order.size());
	for (std::size_t i = 0; i < cycle_arc_lists.size(); ++i) {
		std::size_t last = 0;
		for (auto a : cycle_arc_lists[i])
			last = std::max(last, position[a]);
		completes[options.pruned ? last : arc_order.size() - 1].push_back(i);
	}

	std::vector<const TimeSet*> current(g.arc_count(), nullptr);
	std::size_t nodes = 0;
	bool aborted = false;
	std::vector<const TimeSet*> seq;

	auto cycle_violates = [&](std::size_t i) {
		const auto& arcs = cycle_arc_lists[i];
		seq.clear();
		for (auto a : arcs)
			seq.push_back(current[a]);
		if (detail::labels_form(seq, kind, options.model))
			return true;
		if (alternation && arcs.size() == critical)
			for (std::size_t k = 0; k < arcs.size(); ++k)
				if (current[arcs[k]]->min() == current[arcs[(k + 1) % arcs.size()]]->min())
					return true;
		return false;
	};

	auto rec = [&](auto&& self, std::size_t k) -> bool {
		if (k == arc_order.size())
			return true;
		const auto a = arc_order[k];
		for (const auto& ts : domain[a]) {
			if (++nodes > budget) {
				aborted = true;
				return false;
			}
			current[a] = &ts;
			bool ok = true;
			for (auto i : completes[k])
				if (cycle_violates(i)) {
					ok = false;
					break;
				}
			if (ok && self(self, k + 1))
				return true;
			if (aborted)
				return false;
		}
		current[a] = nullptr;
		return false;
	};

	if (!rec(rec, 0)) {
		if (aborted)
			return {Verdict::Aborted, std::nullopt, "search budget of " + std::to_string(budget) + " nodes exhausted",
			        nodes};
		return {Verdict::No, std::nullopt, "no assignment with labels in 1.." + std::to_string(tau_max), nodes};
	}
	Temporization out(g.arc_count());
	for (ArcId a = 0; a < g.arc_count(); ++a)
		out[a] = *current[a];
	if (oracle_detect(apply_temporization(g, out), kind, options.model, options.cycle_cap))
		throw std::logic_error("bounded search produced a temporization with a forbidden cycle");
	return {Verdict::Yes, std::move(out), "found by search", nodes};
}

/// One line per arc: `t <tail> <head> <labels>`.
inline std::string serialize_temporization(const Digraph& g, const Temporization& labels)
{
	std::string out;
	for (ArcId a = 0; a < g.arc_count(); ++a)
		out += "t " + g.name(g.tail(a)) + " " + g.name(g.head(a)) + " " + format_labels(labels.at(a)) + "\n";
	return out;
}

inline Temporization parse_temporization(const Digraph& g, std::istream& in)
{
	Temporization out(g.arc_count());
	std::string line;
	std::size_t line_no = 0;
	while (std::getline(in, line)) {
		++line_no;
		auto f = detail::split_fields(line);
		if (f.empty())
			continue;
		if (f[0] != "t" || f.size() != 4)
			throw ParseError(line_no, "expected 't <tail> <head> <labels>'");
		auto u = g.find_vertex(f[1]);
		auto v = g.find_vertex(f[2]);
		std::optional<ArcId> a;
		if (u && v)
			a = g.find_arc(*u, *v);
		if (!a)
			throw ParseError(line_no, "no arc " + f[1] + " -> " + f[2] + " in the digraph");
		if (!out[*a].empty())
			throw ParseError(line_no, "arc " + f[1] + " -> " + f[2] + " labelled twice");
		out[*a] = detail::parse_labels(f[3], line_no);
	}
	for (ArcId a = 0; a < g.arc_count(); ++a)
		if (out[a].empty())
			throw GraphError("temporization misses arc " + g.name(g.tail(a)) + " -> " + g.name(g.head(a)));
	return out;
}

inline Temporization parse_temporization(const Digraph& g, std::string_view text)
{
	std::istringstream in{std::string(text)};
	return parse_temporization(g, in);
}

} // namespace tcycle
