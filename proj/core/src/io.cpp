#include "ctov/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace ctov {

namespace {

int64_t parse_int(const std::string &tok, int line) {
	int64_t value = 0;
	const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
	if (ec != std::errc() || ptr != tok.data() + tok.size()) {
		throw ParseError(line, "expected an integer, got '" + tok + "'");
	}
	return value;
}

} // namespace

Instance parse_instance(std::istream &in) {
	Instance inst;
	bool have_header = false;
	int64_t n = 0;
	int64_t m = 0;
	int64_t seen = 0;
	std::set<std::pair<int64_t, int64_t>> pairs;
	std::string text;
	int line = 0;
	while (std::getline(in, text)) {
		++line;
		std::istringstream ls(text);
		std::vector<std::string> toks;
		for (std::string t; ls >> t;) {
			toks.push_back(t);
		}
		if (toks.empty() || toks[0] == "c") {
			continue;
		}
		if (toks[0] == "p") {
			if (have_header) {
				throw ParseError(line, "duplicate header");
			}
			if (toks.size() != 5 || toks[1] != "ctov") {
				throw ParseError(line, "header must be 'p ctov <n> <m> <k>'");
			}
			n = parse_int(toks[2], line);
			m = parse_int(toks[3], line);
			const int64_t k = parse_int(toks[4], line);
			if (n < 0 || m < 0 || k < 0 || n > (int64_t{1} << 30) || k > (int64_t{1} << 30)) {
				throw ParseError(line, "header values out of range");
			}
			inst.graph = MultiGraph(static_cast<int>(n));
			inst.k = static_cast<int>(k);
			have_header = true;
			continue;
		}
		if (toks[0] == "e") {
			if (!have_header) {
				throw ParseError(line, "edge before header");
			}
			if (toks.size() != 4) {
				throw ParseError(line, "edge line must be 'e <u> <v> <multiplicity>'");
			}
			int64_t u = parse_int(toks[1], line);
			int64_t v = parse_int(toks[2], line);
			const int64_t mult = parse_int(toks[3], line);
			if (u < 0 || v < 0 || u >= n || v >= n) {
				throw ParseError(line, "vertex index out of range");
			}
			if (u == v) {
				throw ParseError(line, "self-loop");
			}
			if (mult < 1 || mult > (int64_t{1} << 30)) {
				throw ParseError(line, "multiplicity must be positive");
			}
			if (u > v) {
				std::swap(u, v);
			}
			if (!pairs.emplace(u, v).second) {
				throw ParseError(line, "duplicate pair");
			}
			if (++seen > m) {
				throw ParseError(line, "more edge lines than the header announced");
			}
			inst.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<int>(mult));
			continue;
		}
		throw ParseError(line, "unknown record '" + toks[0] + "'");
	}
	if (!have_header) {
		throw ParseError(line, "missing header");
	}
	if (seen != m) {
		throw ParseError(line, "header announced " + std::to_string(m) + " edges, found " + std::to_string(seen));
	}
	return inst;
}

Instance parse_instance_string(const std::string &text) {
	std::istringstream in(text);
	return parse_instance(in);
}

void write_instance(std::ostream &out, const Instance &inst) {
	const MultiGraph &g = inst.graph;
	const VertexSet vs = g.vertices();
	std::vector<int> id(g.capacity(), -1);
	for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
		id[vs[i]] = i;
	}
	out << "p ctov " << vs.size() << ' ' << g.num_adjacent_pairs() << ' ' << inst.k << '\n';
	for (Vertex u : vs) {
		for (const auto &[v, m] : g.incident(u)) {
			if (v > u) {
				out << "e " << id[u] << ' ' << id[v] << ' ' << m << '\n';
			}
		}
	}
}

std::string serialize_instance(const Instance &inst) {
	std::ostringstream out;
	write_instance(out, inst);
	return out.str();
}

VertexSet parse_vertex_set(std::istream &in) {
	VertexSet out;
	std::string tok;
	bool first = true;
	while (in >> tok) {
		if (first && (tok == "s" || tok == "S")) {
			first = false;
			continue;
		}
		first = false;
		int value = 0;
		const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
		if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
			throw ParseError(0, "bad vertex id '" + tok + "' in vertex set");
		}
		out.push_back(value);
	}
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

} // namespace ctov
