#pragma once

// CNF formulas, brute-force solvers, and the hardness-reduction instance
// generators with the constructive maps between their solutions.

#include "core.hpp"
#include "temporize.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <map>
#include <numeric>

namespace tcycle {

struct Literal {
	std::uint32_t var; ///< 0-based
	bool positive = true;

	Literal negated() const { return {var, !positive}; }
	friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
	std::uint32_t variable_count = 0;
	std::vector<std::vector<Literal>> clauses;

	bool is_monotone() const
	{
		for (const auto& c : clauses)
			for (const auto& l : c)
				if (!l.positive)
					return false;
		return true;
	}

	bool is_three_cnf() const
	{
		return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.size() == 3; });
	}
};

/// Value per 0-based variable.
using Assignment = std::vector<bool>;

inline CnfFormula make_formula(std::uint32_t variables, std::initializer_list<std::initializer_list<int>> clauses)
{
	CnfFormula f{variables, {}};
	for (const auto& c : clauses) {
		std::vector<Literal> lits;
		for (int v : c) {
			if (v == 0 || static_cast<std::uint32_t>(std::abs(v)) > variables)
				throw std::invalid_argument("literal out of range");
			lits.push_back({static_cast<std::uint32_t>(std::abs(v) - 1), v > 0});
		}
		f.clauses.push_back(std::move(lits));
	}
	return f;
}

inline CnfFormula parse_dimacs(std::istream& in)
{
	CnfFormula f;
	std::optional<std::size_t> declared_clauses;
	std::vector<Literal> current;
	std::string line;
	std::size_t line_no = 0;
	while (std::getline(in, line)) {
		++line_no;
		std::istringstream ls(line);
		std::string tok;
		if (!(ls >> tok) || tok == "c")
			continue;
		if (tok == "%")
			break;
		if (tok == "p") {
			std::string fmt;
			long long n = -1, m = -1;
			if (declared_clauses || !(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
				throw ParseError(line_no, "expected a single 'p cnf <vars> <clauses>' header");
			f.variable_count = static_cast<std::uint32_t>(n);
			declared_clauses = static_cast<std::size_t>(m);
			continue;
		}
		if (!declared_clauses)
			throw ParseError(line_no, "clause before 'p cnf' header");
		do {
			long long v = 0;
			auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
			if (ec != std::errc() || ptr != tok.data() + tok.size())
				throw ParseError(line_no, "malformed literal '" + tok + "'");
			if (v == 0) {
				if (current.empty())
					throw ParseError(line_no, "empty clause");
				f.clauses.push_back(std::move(current));
				current.clear();
				continue;
			}
			if (static_cast<unsigned long long>(std::llabs(v)) > f.variable_count)
				throw ParseError(line_no, "variable " + std::to_string(std::llabs(v)) + " exceeds header");
			current.push_back({static_cast<std::uint32_t>(std::llabs(v) - 1), v > 0});
		} while (ls >> tok);
	}
	if (!declared_clauses)
		throw ParseError(line_no, "missing 'p cnf' header");
	if (!current.empty())
		throw ParseError(line_no, "last clause is not terminated by 0");
	if (f.clauses.size() != *declared_clauses)
		throw ParseError(line_no, "header declares " + std::to_string(*declared_clauses) + " clauses, found " +
		                              std::to_string(f.clauses.size()));
	return f;
}

inline CnfFormula parse_dimacs(std::string_view text)
{
	std::istringstream in{std::string(text)};
	return parse_dimacs(in);
}

inline std::string to_dimacs(const CnfFormula& f)
{
	std::string out = "p cnf " + std::to_string(f.variable_count) + " " + std::to_string(f.clauses.size()) + "\n";
	for (const auto& c : f.clauses) {
		for (const auto& l : c)
			out += (l.positive ? "" : "-") + std::to_string(l.var + 1) + " ";
		out += "0\n";
	}
	return out;
}

enum class SatMode : std::uint8_t { Sat, NaeSat };

inline bool literal_value(const Literal& l, const Assignment& s) { return s.at(l.var) == l.positive; }

inline bool satisfies(const CnfFormula& f, const Assignment& s)
{
	return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
		return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return literal_value(l, s); });
	});
}

inline bool nae_satisfies(const CnfFormula& f, const Assignment& s)
{
	return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
		bool t = false, u = false;
		for (const auto& l : c)
			(literal_value(l, s) ? t : u) = true;
		return t && u;
	});
}

inline constexpr std::uint32_t kSolverVariableLimit = 24;

/// First satisfying assignment in binary counting order (variable 0 is the low bit).
inline std::optional<Assignment> solve_formula(const CnfFormula& f, SatMode mode)
{
	if (f.variable_count > kSolverVariableLimit)
		throw std::invalid_argument("brute-force solver handles at most " + std::to_string(kSolverVariableLimit) +
		                            " variables");
	Assignment s(f.variable_count);
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.variable_count); ++mask) {
		for (std::uint32_t v = 0; v < f.variable_count; ++v)
			s[v] = (mask >> v) & 1;
		if (mode == SatMode::Sat ? satisfies(f, s) : nae_satisfies(f, s))
			return s;
	}
	return std::nullopt;
}

// ---------------------------------------------------------------------------
// Auxiliary cycles and the strong-cycle detection reduction

inline std::string aux_vertex_name(std::uint32_t i) { return "v" + std::to_string(i); }

/// Arc labels of the auxiliary cycle of order n: e_0 = v_{n-1} v_0 then e_i = v_{i-1} v_i.
inline TimeSet auxiliary_labels(std::uint32_t n, std::uint32_t i)
{
	std::vector<Time> labels;
	if (i == 0) {
		for (std::uint32_t j = 0; j < n; ++j)
			labels.push_back(static_cast<Time>(j * n));
	} else {
		for (std::uint32_t j = 1; j < n; ++j)
			labels.push_back(static_cast<Time>(j * n - i));
	}
	return TimeSet(std::move(labels));
}

inline TemporalDigraph auxiliary_cycle(std::uint32_t n)
{
	if (n < 2)
		throw std::invalid_argument("auxiliary cycle needs order at least 2");
	if (n > 40000)
		throw std::invalid_argument("auxiliary cycle order too large for 32-bit labels");
	TemporalDigraph d;
	for (std::uint32_t i = 0; i < n; ++i)
		d.intern(aux_vertex_name(i));
	for (std::uint32_t i = 1; i < n; ++i)
		d.add_arc(i - 1, i, auxiliary_labels(n, i));
	d.add_arc(n - 1, 0, auxiliary_labels(n, 0));
	return d;
}

/// Labels v_i uses on its unique closed temporal path in the order-n auxiliary cycle.
inline TimeSet l_circ(std::uint32_t n, std::uint32_t i)
{
	if (n < 2 || i > n - 2)
		throw std::invalid_argument("l_circ needs 0 <= i <= n-2");
	std::vector<Time> labels;
	for (std::uint32_t j = 1; j <= n; ++j)
		labels.push_back(static_cast<Time>(j * (n - 1) - i));
	return TimeSet(std::move(labels));
}

struct LabelRemoval {
	ArcId arc;
	TimeSet removed;
	std::size_t clause;  ///< clause of the literal whose times were removed
	std::size_t literal; ///< 1..3 within that clause
	std::size_t against_clause;
	std::size_t against_literal;
};

struct StrongInstance {
	TemporalDigraph graph;
	std::uint32_t order = 0; ///< 4m+1
	std::size_t clause_count = 0;
	/// position_vertex[p][k-1]: vertex v^k_p (identical across k when p is a multiple of 4).
	std::vector<std::array<VertexId, 3>> position_vertex;
	std::vector<std::string> roles;
	std::vector<LabelRemoval> removals;

	VertexId vertex(std::uint32_t branch, std::uint32_t position) const
	{
		if (branch < 1 || branch > 3)
			throw std::out_of_range("branch must be 1..3");
		return position_vertex.at(position)[branch - 1];
	}
};

/**
 * Three auxiliary cycles of order 4m+1 merged at every position 4i. The
 * three copies of e_0 = v_{4m} v_0 coincide after the merge and become one
 * arc, so the instance has 12m+1 arcs.
 */
inline StrongInstance sat_to_strong_instance(const CnfFormula& f)
{
	if (f.clauses.empty())
		throw std::invalid_argument("formula has no clauses");
	if (!f.is_three_cnf())
		throw std::invalid_argument("every clause needs exactly 3 literals");
	const auto m = static_cast<std::uint32_t>(f.clauses.size());
	const std::uint32_t n = 4 * m + 1;

	StrongInstance inst;
	inst.order = n;
	inst.clause_count = m;
	inst.position_vertex.resize(n);
	Digraph g;
	for (std::uint32_t p = 0; p < n; ++p) {
		if (p % 4 == 0) {
			const auto v = g.intern(aux_vertex_name(p));
			inst.position_vertex[p] = {v, v, v};
			inst.roles.push_back("merged position " + std::to_string(p));
			continue;
		}
		for (std::uint32_t k = 1; k <= 3; ++k) {
			inst.position_vertex[p][k - 1] = g.intern(aux_vertex_name(p) + "." + std::to_string(k));
			inst.roles.push_back("cycle " + std::to_string(k) + " position " + std::to_string(p) + " (clause " +
			                     std::to_string(p / 4) + ")");
		}
	}

	std::vector<TimeSet> labels;
	auto arc_between = [&](std::uint32_t k, std::uint32_t from, std::uint32_t to) {
		return *g.find_arc(inst.vertex(k, from), inst.vertex(k, to));
	};
	for (std::uint32_t k = 1; k <= 3; ++k)
		for (std::uint32_t p = 1; p < n; ++p) {
			g.add_arc(inst.vertex(k, p - 1), inst.vertex(k, p));
			labels.push_back(auxiliary_labels(n, p));
		}
	g.add_arc(inst.vertex(1, n - 1), inst.vertex(1, 0));
	labels.push_back(auxiliary_labels(n, 0));

	for (std::uint32_t i = 0; i < m; ++i) {
		const std::uint32_t b = 4 * i;
		const std::array<std::array<std::uint32_t, 3>, 6> zero_arcs{{
		    {1, b + 2, b + 3},
		    {1, b + 3, b + 4},
		    {2, b + 1, b + 2},
		    {2, b + 3, b + 4},
		    {3, b + 1, b + 2},
		    {3, b + 2, b + 3},
		}};
		for (const auto& [k, from, to] : zero_arcs) {
			auto& ts = labels[arc_between(k, from, to)];
			ts = ts.united(TimeSet{0});
		}
	}

	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 1; j <= 3; ++j)
			for (std::size_t gc = 0; gc < m; ++gc)
				for (std::size_t h = 1; h <= 3; ++h) {
					if (f.clauses[gc][h - 1] != f.clauses[i][j - 1].negated())
						continue;
					const auto a = arc_between(static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(4 * gc),
					                           static_cast<std::uint32_t>(4 * gc + 1));
					auto removed = l_circ(n, static_cast<std::uint32_t>(4 * i + j));
					labels[a] = labels[a].without(removed);
					if (labels[a].empty())
						throw std::logic_error("label removal emptied an arc");
					inst.removals.push_back({a, std::move(removed), i, j, gc, h});
				}

	inst.graph = TemporalDigraph(std::move(g), std::move(labels));
	return inst;
}

/**
 * Vertex set of a strong cycle from a satisfying assignment: all merged
 * vertices plus, per clause, the branch of its lowest-indexed true literal.
 */
inline std::vector<VertexId> assignment_to_strong_cycle(const CnfFormula& f, const StrongInstance& inst,
                                                        const Assignment& s)
{
	if (s.size() != f.variable_count || !satisfies(f, s))
		throw std::invalid_argument("assignment does not satisfy the formula");
	std::vector<VertexId> out;
	for (std::uint32_t i = 0; i < inst.clause_count; ++i) {
		out.push_back(inst.vertex(1, 4 * i));
		std::uint32_t k = 1;
		while (!literal_value(f.clauses[i][k - 1], s))
			++k;
		for (std::uint32_t p = 1; p <= 3; ++p)
			out.push_back(inst.vertex(k, 4 * i + p));
	}
	out.push_back(inst.vertex(1, 4 * inst.clause_count));
	return out;
}

/// Reads a satisfying assignment off a cycle through the instance: the branch used in clause i marks a true literal.
inline std::optional<Assignment> strong_cycle_to_assignment(const CnfFormula& f, const StrongInstance& inst,
                                                            const Cycle& c)
{
	Assignment s(f.variable_count, false);
	std::vector<char> fixed(f.variable_count);
	for (std::uint32_t i = 0; i < inst.clause_count; ++i) {
		std::optional<std::uint32_t> branch;
		for (std::uint32_t k = 1; k <= 3 && !branch; ++k)
			if (std::find(c.vertices.begin(), c.vertices.end(), inst.vertex(k, 4 * i + 1)) != c.vertices.end())
				branch = k;
		if (!branch)
			return std::nullopt;
		const auto& l = f.clauses[i][*branch - 1];
		if (fixed[l.var] && s[l.var] != l.positive)
			return std::nullopt;
		fixed[l.var] = 1;
		s[l.var] = l.positive;
	}
	return s;
}

// ---------------------------------------------------------------------------
// NAE-3-SAT reductions to lifetime-2 acyclic temporization

struct NaeInstance {
	CycleKind kind;
	Digraph graph;
	std::size_t columns = 0; ///< 2m-1
	/// Per variable: vertical arcs ordered by column.
	std::vector<std::vector<ArcId>> vertical;
	/// Per variable: arcs among the a-row.
	std::vector<std::vector<ArcId>> a_row;
	/// Per variable: arcs on the b-side, in consecutive triples (weak) or single arcs (simple), leaving b_{2j}.
	std::vector<std::vector<ArcId>> b_row;
	/// Per clause: the clause cycle's arcs in order, starting with the three vertical arcs e1, e2, e3.
	std::vector<std::vector<ArcId>> clause_cycle;
	std::vector<std::string> roles;
};

namespace detail {

class NameMerger {
public:
	std::size_t key(const std::string& name)
	{
		auto [it, fresh] = index_.try_emplace(name, parent_.size());
		if (fresh) {
			parent_.push_back(parent_.size());
			names_.push_back(name);
		}
		return it->second;
	}
	void unite(const std::string& x, const std::string& y)
	{
		auto a = find(key(x)), b = find(key(y));
		if (a != b)
			parent_[std::max(a, b)] = std::min(a, b);
	}
	std::string canonical(const std::string& name)
	{
		const auto root = find(key(name));
		std::string out;
		for (std::size_t i = 0; i < names_.size(); ++i)
			if (find(i) == root)
				out += (out.empty() ? "" : "=") + names_[i];
		return out;
	}

private:
	std::size_t find(std::size_t x)
	{
		while (parent_[x] != x)
			x = parent_[x] = parent_[parent_[x]];
		return x;
	}
	std::map<std::string, std::size_t> index_;
	std::vector<std::size_t> parent_;
	std::vector<std::string> names_;
};

inline std::string grid_name(char row, std::uint32_t var, std::size_t col)
{
	return std::string(1, row) + std::to_string(var + 1) + "." + std::to_string(col);
}

inline void check_nae_input(const CnfFormula& f)
{
	if (f.clauses.empty())
		throw std::invalid_argument("formula has no clauses");
	if (!f.is_three_cnf())
		throw std::invalid_argument("every clause needs exactly 3 literals");
	if (!f.is_monotone())
		throw std::invalid_argument("NAE reductions need a monotone formula");
	for (const auto& c : f.clauses)
		if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var)
			throw std::invalid_argument("clause repeats a variable; the gadget would need a self-loop");
}

inline NaeInstance build_nae_instance(const CnfFormula& f, CycleKind kind)
{
	check_nae_input(f);
	const auto n = f.variable_count;
	const auto m = f.clauses.size();
	const std::size_t cols = 2 * m - 1;

	NameMerger merge;
	for (std::uint32_t i = 0; i < n; ++i)
		for (std::size_t col = 1; col <= cols; ++col) {
			merge.key(grid_name('a', i, col));
			merge.key(grid_name('b', i, col));
		}
	for (std::size_t j = 1; j <= m; ++j) {
		const auto& c = f.clauses[j - 1];
		const auto col = 2 * j - 1;
		merge.unite(grid_name('a', c[0].var, col), grid_name('b', c[1].var, col));
		merge.unite(grid_name('a', c[1].var, col), grid_name('b', c[2].var, col));
	}

	NaeInstance inst;
	inst.kind = kind;
	inst.columns = cols;
	inst.vertical.resize(n);
	inst.a_row.resize(n);
	inst.b_row.resize(n);
	auto& g = inst.graph;
	auto vertex = [&](const std::string& name) {
		const auto canon = merge.canonical(name);
		const auto before = g.vertex_count();
		const auto v = g.intern(canon);
		if (g.vertex_count() > before)
			inst.roles.push_back(canon == name ? "grid " + name : "grid " + canon + " (clause identification)");
		return v;
	};
	auto fresh = [&](const std::string& name, const std::string& role) {
		const auto v = g.intern(name);
		inst.roles.push_back(role);
		return v;
	};
	auto arc = [&](VertexId u, VertexId v) { return g.add_arc(u, v); };

	for (std::uint32_t i = 0; i < n; ++i) {
		auto A = [&](std::size_t col) { return vertex(grid_name('a', i, col)); };
		auto B = [&](std::size_t col) { return vertex(grid_name('b', i, col)); };
		for (std::size_t col = 1; col <= cols; ++col) {
			A(col);
			B(col);
		}
		for (std::size_t col = 1; col <= cols; ++col)
			inst.vertical[i].push_back(col % 2 == 1 ? arc(B(col), A(col)) : arc(A(col), B(col)));
		for (std::size_t j = 1; j < m; ++j) {
			inst.a_row[i].push_back(arc(A(2 * j - 1), A(2 * j)));
			inst.a_row[i].push_back(arc(A(2 * j + 1), A(2 * j)));
			for (auto to : {2 * j - 1, 2 * j + 1}) {
				if (kind == CycleKind::Simple) {
					inst.b_row[i].push_back(arc(B(2 * j), B(to)));
					continue;
				}
				const auto stem = "w" + std::to_string(i + 1) + "." + std::to_string(2 * j) + "." + std::to_string(to);
				const auto role = "path b" + std::to_string(i + 1) + "." + std::to_string(2 * j) + " to b" +
				                  std::to_string(i + 1) + "." + std::to_string(to);
				const auto p = fresh(stem + ".1", role);
				const auto q = fresh(stem + ".2", role);
				inst.b_row[i].push_back(arc(B(2 * j), p));
				inst.b_row[i].push_back(arc(p, q));
				inst.b_row[i].push_back(arc(q, B(to)));
			}
		}
	}

	for (std::size_t j = 1; j <= m; ++j) {
		const auto& c = f.clauses[j - 1];
		const auto col = 2 * j - 1;
		const auto column = col - 1;
		std::vector<ArcId> cyc{inst.vertical[c[0].var][column], inst.vertical[c[1].var][column],
		                       inst.vertical[c[2].var][column]};
		const auto from = vertex(grid_name('a', c[2].var, col));
		const auto to = vertex(grid_name('b', c[0].var, col));
		const auto role = "clause " + std::to_string(j);
		if (kind == CycleKind::Simple) {
			const auto cj = fresh("c" + std::to_string(j), role);
			cyc.push_back(arc(from, cj));
			cyc.push_back(arc(cj, to));
		} else {
			VertexId prev = from;
			for (int k = 1; k <= 3; ++k) {
				const auto x = fresh("c" + std::to_string(j) + "." + std::to_string(k), role);
				cyc.push_back(arc(prev, x));
				prev = x;
			}
			cyc.push_back(arc(prev, to));
		}
		inst.clause_cycle.push_back(std::move(cyc));
	}
	return inst;
}

inline TimeSet opposite(const TimeSet& t) { return t == TimeSet{1} ? TimeSet{2} : TimeSet{1}; }

} // namespace detail

inline NaeInstance nae_to_simple_instance(const CnfFormula& f)
{
	return detail::build_nae_instance(f, CycleKind::Simple);
}

inline NaeInstance nae_to_weak_instance(const CnfFormula& f) { return detail::build_nae_instance(f, CycleKind::Weak); }

/// Lifetime-2 temporization without cycles of the instance's kind, built from an NAE assignment.
inline Temporization assignment_to_temporization(const CnfFormula& f, const NaeInstance& inst, const Assignment& s)
{
	if (s.size() != f.variable_count || !nae_satisfies(f, s))
		throw std::invalid_argument("assignment is not an NAE assignment");
	const TimeSet one{1}, two{2};
	Temporization out(inst.graph.arc_count());
	for (std::uint32_t i = 0; i < f.variable_count; ++i) {
		const auto& vert = s[i] ? one : two;
		const auto& horiz = s[i] ? two : one;
		for (auto a : inst.vertical[i])
			out[a] = vert;
		for (auto a : inst.a_row[i])
			out[a] = horiz;
		for (std::size_t k = 0; k < inst.b_row[i].size(); ++k)
			out[inst.b_row[i][k]] = inst.kind == CycleKind::Weak && k % 3 == 1 ? vert : horiz;
	}
	for (const auto& cyc : inst.clause_cycle) {
		const auto& e1 = out[cyc[0]];
		const auto& e3 = out[cyc[2]];
		if (inst.kind == CycleKind::Simple) {
			out[cyc[3]] = e1;
			out[cyc[4]] = detail::opposite(e1);
		} else if (e1 == e3) {
			out[cyc[3]] = detail::opposite(e1);
			out[cyc[4]] = e1;
			out[cyc[5]] = e1;
			out[cyc[6]] = detail::opposite(e1);
		} else {
			out[cyc[3]] = e1;
			out[cyc[4]] = detail::opposite(e1);
			out[cyc[5]] = e1;
			out[cyc[6]] = detail::opposite(e1);
		}
	}
	return out;
}

/// Variable values read off the vertical arcs; nullopt when a gadget's verticals disagree.
inline std::optional<Assignment> temporization_to_assignment(const CnfFormula& f, const NaeInstance& inst,
                                                             const Temporization& labels)
{
	Assignment s(f.variable_count);
	for (std::uint32_t i = 0; i < f.variable_count; ++i) {
		const auto& first = labels.at(inst.vertical[i].front());
		for (auto a : inst.vertical[i])
			if (labels.at(a) != first || first.size() != 1)
				return std::nullopt;
		s[i] = first == TimeSet{1};
	}
	return s;
}

} // namespace tcycle
