#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ctov/io.hpp"
#include "ctov/kernel.hpp"
#include "ctov/longest_cycle.hpp"
#include "ctov/solvers.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct ExitError {
	int code;
	std::string message;
};

ctov::Instance load(const std::string &path) {
	std::ifstream in(path);
	if (!in) {
		throw ExitError{kExitParse, "cannot open " + path};
	}
	try {
		return ctov::parse_instance(in);
	} catch (const ctov::ParseError &e) {
		throw ExitError{kExitParse, path + ": " + e.what()};
	}
}

void emit(const std::string &path, const std::string &text) {
	if (path.empty() || path == "-") {
		std::cout << text;
		return;
	}
	std::ofstream out(path);
	if (!out) {
		throw ExitError{kExitPrecondition, "cannot write " + path};
	}
	out << text;
}

void print_set(std::ostream &out, const char *tag, const ctov::VertexSet &vs) {
	out << tag;
	for (ctov::Vertex v : vs) {
		out << ' ' << v;
	}
	out << '\n';
}

ctov::SSolver s_solver(const std::string &name) {
	return name == "approx" ? ctov::SSolver::Approx : ctov::SSolver::Exact;
}

struct KernelizeArgs {
	std::string input;
	std::string output;
	std::string trace_path;
	std::string solver = "exact";
	bool decide_residual = false;
};

int run_kernelize(const KernelizeArgs &a) {
	const ctov::Instance inst = load(a.input);
	ctov::KernelOptions opts;
	opts.s_solver = s_solver(a.solver);
	opts.decide_residual = a.decide_residual;
	const auto outcome = ctov::kernelize(inst, opts);
	if (!a.trace_path.empty()) {
		std::ostringstream t;
		ctov::write_trace(t, outcome.trace);
		emit(a.trace_path, t.str());
	}
	std::ostream &log = a.output.empty() ? std::cerr : std::cout;
	if (outcome.decided()) {
		std::cout << "Decided " << (outcome.answer() ? "yes" : "no") << '\n';
	} else {
		const auto &red = outcome.reduced();
		const int64_t bound = ctov::kernel_vertex_bound(red.k);
		const int64_t n = red.graph.num_vertices();
		log << "Reduced n " << n << " k " << red.k << '\n';
		log << "bound " << bound << ' ' << (n <= bound ? "holds" : "violated") << '\n';
		emit(a.output, ctov::serialize_instance(red));
	}
	log << "rules_fired " << outcome.diagnostics.rules_fired << '\n';
	for (const auto &v : outcome.diagnostics.invariant_violations) {
		std::cerr << "invariant: " << v << '\n';
	}
	if (outcome.diagnostics.measure_violations > 0) {
		std::cerr << "measure did not decrease " << outcome.diagnostics.measure_violations << " times\n";
	}
	return 0;
}

struct SolveArgs {
	std::string input;
	std::string solver = "exact";
	int budget = -1;
	int oracle_cap = ctov::kDefaultCtovOracleCap;
};

int run_solve(const SolveArgs &a) {
	const ctov::Instance inst = load(a.input);
	const int budget = a.budget >= 0 ? a.budget : inst.k;
	std::optional<ctov::VertexSet> sol;
	if (a.solver == "approx") {
		sol = ctov::approx_ctov(inst.graph);
	} else if (a.solver == "brute") {
		sol = ctov::brute_force_ctov(inst.graph, budget, a.oracle_cap);
	} else {
		sol = ctov::exact_ctov(inst.graph, budget);
	}
	if (!sol) {
		std::cout << "none\n";
	} else {
		print_set(std::cout, "s", *sol);
	}
	return 0;
}

struct CycleArgs {
	std::string input;
	std::string s_path;
};

int run_longest_cycle(const CycleArgs &a) {
	const ctov::Instance inst = load(a.input);
	if (!inst.graph.is_simple()) {
		throw ExitError{kExitPrecondition, "longest-cycle needs a simple graph"};
	}
	ctov::VertexSet s;
	if (!a.s_path.empty()) {
		std::ifstream in(a.s_path);
		if (!in) {
			throw ExitError{kExitParse, "cannot open " + a.s_path};
		}
		s = ctov::parse_vertex_set(in);
	} else {
		for (int b = 0;; ++b) {
			if (auto sol = ctov::exact_ctov(inst.graph, b)) {
				s = *sol;
				break;
			}
		}
	}
	const auto len = ctov::longest_cycle(inst.graph, s);
	if (len) {
		std::cout << *len << '\n';
	} else {
		std::cout << "none\n";
	}
	return 0;
}

struct VerifyArgs {
	std::string input;
	std::string trace_path;
	std::string solver = "exact";
};

int run_verify(const VerifyArgs &a) {
	ctov::Instance cur = load(a.input);
	std::ifstream in(a.trace_path);
	if (!in) {
		throw ExitError{kExitParse, "cannot open " + a.trace_path};
	}
	ctov::Trace trace;
	try {
		trace = ctov::read_trace(in);
	} catch (const std::runtime_error &e) {
		throw ExitError{kExitParse, a.trace_path + ": " + e.what()};
	}
	for (size_t i = 0; i < trace.size(); ++i) {
		const auto &rec = trace[i];
		const std::string where = "record " + std::to_string(i + 1) + " (" + ctov::to_string(rec.rule) + ")";
		if (rec.k_before != cur.k) {
			std::cerr << where << ": k mismatch\n";
			return kExitMismatch;
		}
		ctov::RuleOptions opts;
		opts.s_solver = s_solver(a.solver);
		opts.s_override = rec.s_used;
		std::optional<ctov::Firing> firing;
		try {
			firing = ctov::apply_rule(cur, rec.rule, opts);
		} catch (const std::invalid_argument &e) {
			std::cerr << where << ": " << e.what() << '\n';
			return kExitMismatch;
		}
		if (!firing) {
			std::cerr << where << ": trigger does not hold\n";
			return kExitMismatch;
		}
		if (!(firing->record == rec)) {
			std::cerr << where << ": recorded action differs from the rule's action\n";
			return kExitMismatch;
		}
		if (const auto *d = std::get_if<ctov::Decided>(&firing->result)) {
			if (i + 1 != trace.size()) {
				std::cerr << where << ": decision before the end of the trace\n";
				return kExitMismatch;
			}
			std::cout << "ok " << trace.size() << " records, Decided " << (d->answer ? "yes" : "no") << '\n';
			return 0;
		}
		auto next = std::get<ctov::Instance>(firing->result);
		if (!(ctov::measure(next) < ctov::measure(cur))) {
			std::cerr << where << ": measure did not decrease\n";
			return kExitMismatch;
		}
		cur = std::move(next);
	}
	std::cout << "ok " << trace.size() << " records, n " << cur.graph.num_vertices() << " k " << cur.k << '\n';
	return 0;
}

struct GenerateArgs {
	ctov::GeneratorSpec spec;
	std::string output;
};

int run_generate(const GenerateArgs &a) {
	const auto gen = ctov::generate(a.spec);
	std::ostringstream out;
	out << "c seed " << a.spec.seed << '\n';
	out << "c planted";
	for (ctov::Vertex v : gen.planted) {
		out << ' ' << v;
	}
	out << '\n';
	ctov::write_instance(out, gen.instance);
	emit(a.output, out.str());
	return 0;
}

struct BenchArgs {
	std::vector<int> ks{1, 2, 3};
	int seeds = 5;
	uint64_t seed = 1;
	std::string solver = "exact";
};

int run_bench(const BenchArgs &a) {
	std::cout << "k\tn_in\tn_out\trules_fired\ttime\n";
	for (int k : a.ks) {
		for (int i = 0; i < a.seeds; ++i) {
			ctov::GeneratorSpec spec;
			spec.seed = a.seed + static_cast<uint64_t>(i) * 1000003u + static_cast<uint64_t>(k);
			spec.k = k;
			spec.planted = k;
			spec.cliques = 3 * k;
			spec.clique_min = 3;
			spec.clique_max = 8 * k;
			spec.trees = 3 * k;
			spec.tree_max = 10 * k;
			spec.attach = 0.6;
			const auto gen = ctov::generate(spec);
			ctov::KernelOptions opts;
			opts.s_solver = s_solver(a.solver);
			opts.check_invariants = false;
			const auto t0 = std::chrono::steady_clock::now();
			const auto outcome = ctov::kernelize(gen.instance, opts);
			const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
			const int n_out = outcome.decided() ? 0 : outcome.reduced().graph.num_vertices();
			std::cout << k << '\t' << gen.instance.graph.num_vertices() << '\t' << n_out << '\t'
					  << outcome.diagnostics.rules_fired << '\t' << secs << '\n';
		}
	}
	return 0;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Cliques-or-trees vertex deletion: kernelization, exact solving, longest cycle"};
	app.require_subcommand(1);

	KernelizeArgs ka;
	auto *kern = app.add_subcommand("kernelize", "Reduce an instance with the rule catalog");
	kern->add_option("input", ka.input, "Instance file")->required();
	kern->add_option("-o,--output", ka.output, "Write the reduced instance here");
	kern->add_option("--emit-trace", ka.trace_path, "Write the rule trace here");
	kern->add_option("--solver", ka.solver, "How S is computed")->check(CLI::IsMember({"exact", "approx"}));
	kern->add_flag("--decide-residual", ka.decide_residual, "Solve small reduced instances exactly");

	SolveArgs sa;
	auto *solve = app.add_subcommand("solve", "Minimum deletion set within a budget");
	solve->add_option("input", sa.input, "Instance file")->required();
	solve->add_option("--budget", sa.budget, "Budget (default: k from the file)");
	solve->add_option("--solver", sa.solver)->check(CLI::IsMember({"exact", "approx", "brute"}));
	solve->add_option("--oracle-cap", sa.oracle_cap, "Vertex cap for the brute-force solver");

	CycleArgs ca;
	auto *cycle = app.add_subcommand("longest-cycle", "Longest cycle length given a deletion set");
	cycle->add_option("input", ca.input, "Instance file (simple graph)")->required();
	cycle->add_option("--s", ca.s_path, "File with the deletion set (default: a minimum one)");

	VerifyArgs va;
	auto *verify = app.add_subcommand("verify", "Replay a trace and re-check every firing");
	verify->add_option("input", va.input, "Original instance")->required();
	verify->add_option("trace", va.trace_path, "Trace file")->required();
	verify->add_option("--solver", va.solver)->check(CLI::IsMember({"exact", "approx"}));

	GenerateArgs ga;
	auto *gen = app.add_subcommand("generate", "Seeded instance with a planted solution");
	gen->add_option("--seed", ga.spec.seed);
	gen->add_option("--k", ga.spec.k);
	gen->add_option("--planted", ga.spec.planted);
	gen->add_option("--cliques", ga.spec.cliques);
	gen->add_option("--clique-min", ga.spec.clique_min);
	gen->add_option("--clique-max", ga.spec.clique_max);
	gen->add_option("--trees", ga.spec.trees);
	gen->add_option("--tree-min", ga.spec.tree_min);
	gen->add_option("--tree-max", ga.spec.tree_max);
	gen->add_option("--noise", ga.spec.noise);
	gen->add_option("--noise-min", ga.spec.noise_min);
	gen->add_option("--noise-max", ga.spec.noise_max);
	gen->add_option("--attach", ga.spec.attach);
	gen->add_option("--max-links", ga.spec.max_links);
	gen->add_option("-o,--output", ga.output);

	BenchArgs ba;
	auto *bench = app.add_subcommand("bench", "Kernelize generated instances, print a TSV table");
	bench->add_option("--k", ba.ks, "Budgets to sweep")->delimiter(',');
	bench->add_option("--seeds", ba.seeds, "Instances per budget");
	bench->add_option("--seed", ba.seed);
	bench->add_option("--solver", ba.solver)->check(CLI::IsMember({"exact", "approx"}));

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		return app.exit(e);
	}

	try {
		if (*kern) {
			return run_kernelize(ka);
		}
		if (*solve) {
			return run_solve(sa);
		}
		if (*cycle) {
			return run_longest_cycle(ca);
		}
		if (*verify) {
			return run_verify(va);
		}
		if (*gen) {
			return run_generate(ga);
		}
		if (*bench) {
			return run_bench(ba);
		}
	} catch (const ExitError &e) {
		std::cerr << "ctov: " << e.message << '\n';
		return e.code;
	} catch (const ctov::ParseError &e) {
		std::cerr << "ctov: " << e.what() << '\n';
		return kExitParse;
	} catch (const std::invalid_argument &e) {
		std::cerr << "ctov: " << e.what() << '\n';
		return kExitPrecondition;
	}
	return 0;
}
