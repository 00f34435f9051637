// tcycle: command-line front end over the library headers.

#include "tcycle/tcycle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace tcycle;
using nlohmann::json;

namespace {

enum Exit : int {
	kYes = 0,
	kNo = 1,
	kUnknown = 2,
	kAborted = 3,
	kUsage = 10,
	kInputError = 11,
	kOracleCap = 12,
	kOracleDisagreement = 20,
};

struct InputError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

const std::map<std::string, CycleKind> kKinds{
    {"simple", CycleKind::Simple}, {"weak", CycleKind::Weak}, {"strong", CycleKind::Strong}};
const std::map<std::string, PathModel> kModels{{"nonstrict", PathModel::NonStrict}, {"strict", PathModel::Strict}};

std::ifstream open_input(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw InputError("cannot open " + path);
	return in;
}

TemporalDigraph load_temporal(const std::string& path)
{
	auto in = open_input(path);
	return parse_temporal_digraph(in);
}

Digraph load_static(const std::string& path)
{
	auto in = open_input(path);
	return parse_digraph(in);
}

CnfFormula load_cnf(const std::string& path)
{
	auto in = open_input(path);
	return parse_dimacs(in);
}

std::vector<VertexId> load_order(const Digraph& g, const std::string& path)
{
	auto in = open_input(path);
	std::vector<VertexId> order;
	std::string name;
	while (in >> name) {
		auto v = g.find_vertex(name);
		if (!v)
			throw InputError("order file names unknown vertex " + name);
		order.push_back(*v);
	}
	return order;
}

json walk_json(const Digraph& g, const TemporalWalk& w)
{
	json names = json::array();
	for (auto v : w.vertices)
		names.push_back(g.name(v));
	return {{"vertices", names}, {"times", w.times}};
}

json witness_json(const Digraph& g, const CycleWitness& w)
{
	json cycle = json::array();
	for (auto v : w.cycle.vertices)
		cycle.push_back(g.name(v));
	json paths = json::array();
	for (const auto& p : w.paths)
		paths.push_back(walk_json(g, p));
	return {{"kind", to_string(w.kind)}, {"cycle", cycle}, {"paths", paths}};
}

void print_witness(const Digraph& g, const CycleWitness& w)
{
	for (const auto& p : w.paths)
		std::cout << "cycle: " << format_walk(g, p) << "\n";
}

json temporization_json(const Digraph& g, const Temporization& t)
{
	json arcs = json::array();
	for (ArcId a = 0; a < g.arc_count(); ++a)
		arcs.push_back({{"tail", g.name(g.tail(a))}, {"head", g.name(g.head(a))},
		                {"times", std::vector<Time>(t[a].begin(), t[a].end())}});
	return arcs;
}

std::optional<CycleWitness> fast_detect(const TemporalDigraph& d, CycleKind kind, PathModel model,
                                        std::optional<ExplorationStats>* stats = nullptr)
{
	switch (kind) {
	case CycleKind::Simple: return detect_simple(d, model);
	case CycleKind::Weak: return detect_weak(d, model);
	case CycleKind::Strong: {
		auto r = detect_strong(d, model);
		if (stats)
			*stats = r.stats;
		return r.witness;
	}
	}
	return std::nullopt;
}

json stats_json(const ExplorationStats& s)
{
	std::size_t explorations = 0;
	for (auto e : s.explorations)
		explorations += e;
	return {{"explorations", explorations},
	        {"per_arc_explorations", s.explorations},
	        {"per_arc_distinct_timetables", s.distinct_timetables},
	        {"recursions", s.recursions},
	        {"repeated_extensions", s.repeated_extensions},
	        {"blocked_skips", s.blocked_skips},
	        {"closure_attempts", s.closure_attempts},
	        {"closure_rejections", s.closure_rejections},
	        {"root_searches", s.root_searches},
	        {"max_blocking_store", s.max_blocking_store}};
}

int verdict_exit(Verdict v)
{
	switch (v) {
	case Verdict::Yes: return kYes;
	case Verdict::No: return kNo;
	case Verdict::Unknown: return kUnknown;
	case Verdict::Aborted: return kAborted;
	}
	return kUsage;
}

struct DetectArgs {
	std::string file;
	CycleKind kind = CycleKind::Simple;
	PathModel model = PathModel::NonStrict;
	bool oracle = false;
	bool json = false;
};

int run_detect(const DetectArgs& a)
{
	const auto d = load_temporal(a.file);
	const auto& g = d.graph();
	std::optional<ExplorationStats> stats;
	const auto found = fast_detect(d, a.kind, a.model, &stats);
	std::optional<bool> oracle_says;
	if (a.oracle)
		oracle_says = oracle_detect(d, a.kind, a.model).has_value();

	if (a.json) {
		json out{{"kind", to_string(a.kind)}, {"model", to_string(a.model)}, {"found", found.has_value()}};
		if (found)
			out["witness"] = witness_json(g, *found);
		if (stats)
			out["stats"] = stats_json(*stats);
		if (oracle_says)
			out["oracle"] = *oracle_says;
		std::cout << out.dump(2) << "\n";
	} else {
		std::cout << (found ? "found" : "none") << ": " << to_string(a.kind) << " cycle (" << to_string(a.model)
		          << ")\n";
		if (found)
			print_witness(g, *found);
		if (stats) {
			std::size_t e = 0;
			for (auto x : stats->explorations)
				e += x;
			std::cout << "explorations: " << e << ", blocking store peak: " << stats->max_blocking_store << "\n";
		}
		if (oracle_says)
			std::cout << "oracle: " << (*oracle_says ? "found" : "none") << "\n";
	}
	if (oracle_says && *oracle_says != found.has_value()) {
		std::cerr << "oracle disagreement: detector " << (found ? "found" : "none") << ", oracle "
		          << (*oracle_says ? "found" : "none") << "\n";
		return kOracleDisagreement;
	}
	return found ? kYes : kNo;
}

struct TemporizeArgs {
	std::string file;
	CycleKind kind = CycleKind::Simple;
	PathModel model = PathModel::NonStrict;
	std::string order_file;
	Time tau = 0;
	std::size_t budget = 10'000'000;
	bool json = false;
};

int run_temporize(const TemporizeArgs& a)
{
	const auto g = load_static(a.file);
	TemporizationDecision r;
	if (a.tau > 0) {
		BoundedSearchOptions opts;
		opts.model = a.model;
		r = bounded_lifetime_search(g, a.kind, a.tau, a.budget, opts);
	} else if (a.model == PathModel::Strict) {
		r = strict_acyclic_temporization(g, a.kind);
	} else if (!a.order_file.empty()) {
		const auto order = load_order(g, a.order_file);
		r = acyclic_temporization(g, a.kind, std::span<const VertexId>(order));
	} else {
		r = acyclic_temporization(g, a.kind);
	}
	if (a.json) {
		json out{{"kind", to_string(a.kind)}, {"model", to_string(a.model)}, {"verdict", to_string(r.verdict)},
		         {"reason", r.reason}};
		if (r.temporization)
			out["temporization"] = temporization_json(g, *r.temporization);
		if (r.nodes)
			out["nodes"] = r.nodes;
		std::cout << out.dump(2) << "\n";
	} else {
		std::cout << "# " << to_string(r.verdict) << " (" << r.reason << ")\n";
		if (r.temporization)
			std::cout << serialize_temporization(g, *r.temporization);
	}
	return verdict_exit(r.verdict);
}

struct VerifyArgs {
	std::string graph_file, temporization_file;
	CycleKind kind = CycleKind::Simple;
	PathModel model = PathModel::NonStrict;
	bool oracle = false;
};

int run_verify(const VerifyArgs& a)
{
	const auto g = load_static(a.graph_file);
	auto in = open_input(a.temporization_file);
	const auto labels = parse_temporization(g, in);
	const auto d = apply_temporization(g, labels);
	const auto found = fast_detect(d, a.kind, a.model);
	if (a.oracle && oracle_detect(d, a.kind, a.model).has_value() != found.has_value()) {
		std::cerr << "oracle disagreement\n";
		return kOracleDisagreement;
	}
	if (found) {
		std::cout << "cyclic: contains a " << to_string(a.kind) << " cycle\n";
		print_witness(g, *found);
		return kNo;
	}
	std::cout << "acyclic: no " << to_string(a.kind) << " cycle (" << to_string(a.model) << ")\n";
	return kYes;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Temporal cycle detection and acyclic temporization"};
	app.require_subcommand(1);

	// Enum options are read as text and converted by the callback once parsed.
	auto add_kind = [](CLI::App* sub, CycleKind& kind) {
		sub->add_option_function<std::string>(
		       "--kind", [&kind](const std::string& s) { kind = kKinds.at(s); }, "simple, weak or strong")
		    ->required()
		    ->check(CLI::IsMember(kKinds));
	};
	auto add_model = [](CLI::App* sub, PathModel& model) {
		return sub
		    ->add_option_function<std::string>(
		        "--model", [&model](const std::string& s) { model = kModels.at(s); }, "nonstrict (default) or strict")
		    ->check(CLI::IsMember(kModels));
	};

	DetectArgs det;
	auto* detect = app.add_subcommand("detect", "Detect a temporal cycle of the given kind");
	detect->add_option("graph", det.file, "temporal digraph file")->required();
	add_kind(detect, det.kind);
	add_model(detect, det.model);
	detect->add_flag("--oracle", det.oracle, "cross-check against the brute-force oracle");
	detect->add_flag("--json", det.json, "machine-readable output");

	TemporizeArgs tem;
	auto* temporize = app.add_subcommand("temporize", "Build an acyclic temporization of a static digraph");
	temporize->add_option("graph", tem.file, "digraph file (labels ignored)")->required();
	add_kind(temporize, tem.kind);
	auto* tem_model = add_model(temporize, tem.model);
	auto* order = temporize->add_option("--order", tem.order_file, "file listing every vertex once, in order");
	auto* tau = temporize->add_option("--tau", tem.tau, "search for labels within 1..tau")->check(CLI::Range(1, 16));
	temporize->add_option("--budget", tem.budget, "node budget for --tau search")->needs(tau);
	temporize->add_flag("--json", tem.json, "machine-readable output");
	order->excludes(tau);
	order->excludes(tem_model);

	VerifyArgs ver;
	auto* verify = app.add_subcommand("verify", "Check a temporization for cycles of the given kind");
	verify->add_option("graph", ver.graph_file, "digraph file")->required();
	verify->add_option("temporization", ver.temporization_file, "temporization file ('t tail head labels')")
	    ->required();
	add_kind(verify, ver.kind);
	add_model(verify, ver.model);
	verify->add_flag("--oracle", ver.oracle, "cross-check against the brute-force oracle");

	auto* generate = app.add_subcommand("generate", "Emit a generated instance on standard output");
	generate->require_subcommand(1);
	std::uint32_t aux_order = 0;
	auto* aux = generate->add_subcommand("aux-cycle", "auxiliary cycle of order N");
	aux->add_option("N", aux_order)->required()->check(CLI::Range(2u, 1000u));
	std::string cnf_file;
	auto* sat_strong = generate->add_subcommand("sat-strong", "strong-cycle detection instance from 3-CNF");
	auto* nae_simple = generate->add_subcommand("nae-simple", "simple acyclic temporization instance from monotone 3-CNF");
	auto* nae_weak = generate->add_subcommand("nae-weak", "weak acyclic temporization instance from monotone 3-CNF");
	for (auto* sub : {sat_strong, nae_simple, nae_weak})
		sub->add_option("cnf", cnf_file, "DIMACS file")->required();
	std::uint64_t seed = 1;
	RandomTemporalSpec rspec;
	bool rstatic = false;
	auto* random = generate->add_subcommand("random", "random digraph from a seed");
	random->add_option("--seed", seed)->required();
	random->add_option("--min-vertices", rspec.shape.min_vertices)->capture_default_str();
	random->add_option("--max-vertices", rspec.shape.max_vertices)->capture_default_str();
	random->add_option("--max-arcs", rspec.shape.max_arcs)->capture_default_str();
	random->add_option("--max-label", rspec.max_label)->capture_default_str();
	random->add_flag("--static", rstatic, "emit arcs without labels");

	std::string girth_file;
	auto* girth_cmd = app.add_subcommand("girth", "Length of a shortest directed cycle");
	girth_cmd->add_option("graph", girth_file)->required();

	std::string reach_file, from, to;
	PathModel reach_model = PathModel::NonStrict;
	auto* reach = app.add_subcommand("reach", "Earliest arrival from --from or latest departure to --to");
	reach->add_option("graph", reach_file)->required();
	auto* from_opt = reach->add_option("--from", from, "source vertex (earliest arrival table)");
	auto* to_opt = reach->add_option("--to", to, "target vertex (latest departure table)");
	from_opt->excludes(to_opt);
	add_model(reach, reach_model);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : kUsage;
	}

	try {
		if (*detect)
			return run_detect(det);
		if (*temporize)
			return run_temporize(tem);
		if (*verify)
			return run_verify(ver);
		if (*aux) {
			std::cout << serialize(auxiliary_cycle(aux_order));
			return kYes;
		}
		if (*sat_strong) {
			std::cout << serialize(sat_to_strong_instance(load_cnf(cnf_file)).graph);
			return kYes;
		}
		if (*nae_simple || *nae_weak) {
			const auto f = load_cnf(cnf_file);
			std::cout << serialize((*nae_simple ? nae_to_simple_instance(f) : nae_to_weak_instance(f)).graph);
			return kYes;
		}
		if (*random) {
			std::mt19937_64 rng(seed);
			if (rstatic)
				std::cout << serialize(random_digraph(rng, rspec.shape));
			else
				std::cout << serialize(random_temporal_digraph(rng, rspec));
			return kYes;
		}
		if (*girth_cmd) {
			const auto gi = girth(load_static(girth_file));
			std::cout << (gi ? std::to_string(*gi) : std::string("infinite")) << "\n";
			return kYes;
		}
		if (*reach) {
			if (from.empty() == to.empty())
				throw CLI::ValidationError("reach", "give exactly one of --from or --to");
			const auto d = load_temporal(reach_file);
			const auto& g = d.graph();
			const bool forward = !from.empty();
			const auto anchor = g.find_vertex(forward ? from : to);
			if (!anchor)
				throw InputError("unknown vertex " + (forward ? from : to));
			const auto r = forward ? earliest_arrival(d, *anchor, reach_model)
			                       : latest_departure(d, *anchor, reach_model);
			std::cout << (forward ? "# earliest arrival from " + from : "# latest departure to " + to) << " ("
			          << to_string(reach_model) << ")\n";
			for (VertexId v = 0; v < g.vertex_count(); ++v)
				std::cout << g.name(v) << " " << r.value(v).str() << "\n";
			return kYes;
		}
	} catch (const CLI::ValidationError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	} catch (const OracleCapExceeded& e) {
		std::cerr << "error: oracle limit: " << e.what() << "\n";
		return kOracleCap;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kInputError;
	}
	return kUsage;
}
