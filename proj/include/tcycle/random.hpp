#pragma once

// Seeded random instances for property tests and `generate random`.

#include "core.hpp"

#include <random>

namespace tcycle {

struct RandomDigraphSpec {
	std::size_t min_vertices = 2;
	std::size_t max_vertices = 7;
	std::size_t min_arcs = 0;
	std::size_t max_arcs = 14;
};

struct RandomTemporalSpec {
	RandomDigraphSpec shape;
	/// A lifetime is drawn from min_lifetime..max_label, then labels from 0..lifetime.
	Time min_lifetime = 0;
	Time max_label = 4;
	std::size_t max_labels_per_arc = 3;
};

inline Digraph random_digraph(std::mt19937_64& rng, const RandomDigraphSpec& spec)
{
	if (spec.min_vertices < 1 || spec.min_vertices > spec.max_vertices)
		throw std::invalid_argument("bad vertex range");
	const auto n = std::uniform_int_distribution<std::size_t>(spec.min_vertices, spec.max_vertices)(rng);
	std::vector<ArcEnds> pairs;
	for (VertexId u = 0; u < n; ++u)
		for (VertexId v = 0; v < n; ++v)
			if (u != v)
				pairs.push_back({u, v});
	std::shuffle(pairs.begin(), pairs.end(), rng);
	const auto hi = std::min(spec.max_arcs, pairs.size());
	const auto m = std::uniform_int_distribution<std::size_t>(std::min(spec.min_arcs, hi), hi)(rng);
	Digraph g;
	for (VertexId v = 0; v < n; ++v)
		g.intern("x" + std::to_string(v));
	for (std::size_t i = 0; i < m; ++i)
		g.add_arc(pairs[i].tail, pairs[i].head);
	return g;
}

inline TemporalDigraph random_temporal_digraph(std::mt19937_64& rng, const RandomTemporalSpec& spec)
{
	if (spec.min_lifetime < 0 || spec.min_lifetime > spec.max_label || spec.max_labels_per_arc < 1)
		throw std::invalid_argument("bad label range");
	auto g = random_digraph(rng, spec.shape);
	const auto tau = std::uniform_int_distribution<Time>(spec.min_lifetime, spec.max_label)(rng);
	std::uniform_int_distribution<Time> label(0, tau);
	std::uniform_int_distribution<std::size_t> count(1, spec.max_labels_per_arc);
	std::vector<TimeSet> times;
	for (ArcId a = 0; a < g.arc_count(); ++a) {
		std::vector<Time> labels;
		for (auto k = count(rng); k > 0; --k)
			labels.push_back(label(rng));
		times.emplace_back(std::move(labels));
	}
	return TemporalDigraph(std::move(g), std::move(times));
}

} // namespace tcycle
