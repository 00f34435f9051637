#pragma once

// Line-based text format for temporal digraphs:
//
//   # comment
//   v <name>                   isolated vertex (optional)
//   a <tail> <head> 1,4,7      arc with strictly increasing labels
//
// Static digraphs use the same format with the label field omitted.

#include "core.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace tcycle {

class ParseError : public GraphError {
public:
	ParseError(std::size_t line, const std::string& what)
	    : GraphError("line " + std::to_string(line) + ": " + what), line_(line)
	{
	}
	std::size_t line() const { return line_; }

private:
	std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split_fields(std::string_view line)
{
	if (auto hash = line.find('#'); hash != std::string_view::npos)
		line = line.substr(0, hash);
	std::vector<std::string> fields;
	std::size_t i = 0;
	while (i < line.size()) {
		while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
			++i;
		std::size_t j = i;
		while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
			++j;
		if (j > i)
			fields.emplace_back(line.substr(i, j - i));
		i = j;
	}
	return fields;
}

inline TimeSet parse_labels(std::string_view field, std::size_t line_no)
{
	std::vector<Time> labels;
	std::size_t pos = 0;
	while (pos <= field.size()) {
		auto comma = field.find(',', pos);
		auto token = field.substr(pos, comma == std::string_view::npos ? field.npos : comma - pos);
		Time t = 0;
		auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), t);
		if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
			throw ParseError(line_no, "malformed time label '" + std::string(token) + "'");
		if (t < 0)
			throw ParseError(line_no, "negative time label");
		if (!labels.empty() && t <= labels.back())
			throw ParseError(line_no, "labels must be strictly increasing");
		labels.push_back(t);
		if (comma == std::string_view::npos)
			break;
		pos = comma + 1;
	}
	if (labels.empty())
		throw ParseError(line_no, "empty time set");
	return TimeSet(std::move(labels));
}

struct RawArc {
	std::string tail, head;
	std::optional<TimeSet> times;
	std::size_t line;
};

template <class OnVertex, class OnArc>
void scan_lines(std::istream& in, OnVertex on_vertex, OnArc on_arc)
{
	std::string line;
	std::size_t line_no = 0;
	while (std::getline(in, line)) {
		++line_no;
		auto f = split_fields(line);
		if (f.empty())
			continue;
		if (f[0] == "v") {
			if (f.size() != 2)
				throw ParseError(line_no, "expected 'v <name>'");
			on_vertex(f[1]);
		} else if (f[0] == "a") {
			if (f.size() != 3 && f.size() != 4)
				throw ParseError(line_no, "expected 'a <tail> <head> <labels>'");
			RawArc arc{f[1], f[2], std::nullopt, line_no};
			if (f.size() == 4)
				arc.times = parse_labels(f[3], line_no);
			if (arc.tail == arc.head)
				throw ParseError(line_no, "self-loop on " + arc.tail);
			on_arc(arc);
		} else {
			throw ParseError(line_no, "unknown record '" + f[0] + "'");
		}
	}
}

} // namespace detail

inline TemporalDigraph parse_temporal_digraph(std::istream& in)
{
	TemporalDigraph d;
	detail::scan_lines(
	    in, [&](const std::string& name) { d.intern(name); },
	    [&](const detail::RawArc& arc) {
		    if (!arc.times)
			    throw ParseError(arc.line, "empty time set");
		    const auto u = d.intern(arc.tail);
		    const auto v = d.intern(arc.head);
		    if (d.graph().find_arc(u, v))
			    throw ParseError(arc.line, "duplicate arc " + arc.tail + " -> " + arc.head);
		    d.add_arc(u, v, *arc.times);
	    });
	return d;
}

inline TemporalDigraph parse_temporal_digraph(std::string_view text)
{
	std::istringstream in{std::string(text)};
	return parse_temporal_digraph(in);
}

/// Reads a static digraph; arc labels, when present, are validated and dropped.
inline Digraph parse_digraph(std::istream& in)
{
	Digraph g;
	detail::scan_lines(
	    in, [&](const std::string& name) { g.intern(name); },
	    [&](const detail::RawArc& arc) {
		    const auto u = g.intern(arc.tail);
		    const auto v = g.intern(arc.head);
		    if (g.find_arc(u, v))
			    throw ParseError(arc.line, "duplicate arc " + arc.tail + " -> " + arc.head);
		    g.add_arc(u, v);
	    });
	return g;
}

inline Digraph parse_digraph(std::string_view text)
{
	std::istringstream in{std::string(text)};
	return parse_digraph(in);
}

inline std::string format_labels(const TimeSet& times)
{
	std::string s;
	for (auto t : times) {
		if (!s.empty())
			s += ',';
		s += std::to_string(t);
	}
	return s;
}

/// Emits every vertex first so that parsing the output preserves vertex ids.
inline std::string serialize(const TemporalDigraph& d)
{
	std::string out;
	for (const auto& name : d.graph().names())
		out += "v " + name + "\n";
	for (ArcId a = 0; a < d.arc_count(); ++a) {
		const auto& e = d.graph().arc(a);
		out += "a " + d.graph().name(e.tail) + " " + d.graph().name(e.head) + " " +
		       format_labels(d.times(a)) + "\n";
	}
	return out;
}

inline std::string serialize(const Digraph& g)
{
	std::string out;
	for (const auto& name : g.names())
		out += "v " + name + "\n";
	for (const auto& e : g.arcs())
		out += "a " + g.name(e.tail) + " " + g.name(e.head) + "\n";
	return out;
}

template <class Parser>
auto read_file(const std::string& path, Parser parse)
{
	std::ifstream in(path);
	if (!in)
		throw GraphError("cannot open " + path);
	return parse(in);
}

} // namespace tcycle
