#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ctov/kernel.hpp"

namespace ctov {

std::string to_string(RuleId rule) {
	return "R" + std::to_string(static_cast<int>(rule));
}

std::optional<RuleId> parse_rule_id(std::string_view text) {
	if (text.size() < 2 || (text[0] != 'R' && text[0] != 'r')) {
		return std::nullopt;
	}
	int n = 0;
	const auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), n);
	if (ec != std::errc() || ptr != text.data() + text.size() || n < 1 || n > kNumRules) {
		return std::nullopt;
	}
	return static_cast<RuleId>(n);
}

std::variant<Instance, Decided> replay(const Instance &inst, const TraceRecord &record) {
	if (record.k_before != inst.k) {
		throw std::invalid_argument("trace record expects k = " + std::to_string(record.k_before) + " but instance has k = " +
				std::to_string(inst.k));
	}
	if (record.decided) {
		return Decided{*record.decided};
	}
	if (record.k_after < 0 || record.k_after > record.k_before) {
		throw std::invalid_argument("trace record has an invalid k transition");
	}
	Instance out = inst;
	for (Vertex v : record.deleted) {
		if (!out.graph.contains(v)) {
			throw GraphError("trace deletes unknown vertex " + std::to_string(v));
		}
	}
	out.graph.remove_vertices(record.deleted);
	for (const auto &c : record.changes) {
		out.graph.set_multiplicity(c.u, c.v, c.multiplicity);
	}
	out.k = record.k_after;
	return out;
}

// One record per line:
//   R4 k 2 2 del 1 3 mul 0:5:0 0:7:2 s 1 4 dec -
// `s -` marks "no S read"; `s` followed by nothing before `dec` is an empty S.
void write_trace(std::ostream &out, const Trace &trace) {
	for (const auto &r : trace) {
		out << to_string(r.rule) << " k " << r.k_before << ' ' << r.k_after << " del";
		for (Vertex v : r.deleted) {
			out << ' ' << v;
		}
		out << " mul";
		for (const auto &c : r.changes) {
			out << ' ' << c.u << ':' << c.v << ':' << c.multiplicity;
		}
		out << " s";
		if (r.s_used) {
			for (Vertex v : *r.s_used) {
				out << ' ' << v;
			}
		} else {
			out << " -";
		}
		out << " dec " << (r.decided ? (*r.decided ? "yes" : "no") : "-") << '\n';
	}
}

namespace {

[[noreturn]] void fail(int line, const std::string &what) {
	throw std::runtime_error("trace line " + std::to_string(line) + ": " + what);
}

int to_int(const std::string &tok, int line) {
	int value = 0;
	const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
	if (ec != std::errc() || ptr != tok.data() + tok.size()) {
		fail(line, "expected an integer, got '" + tok + "'");
	}
	return value;
}

} // namespace

Trace read_trace(std::istream &in) {
	Trace trace;
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
		size_t i = 0;
		auto expect = [&](const char *kw) {
			if (i >= toks.size() || toks[i] != kw) {
				fail(line, std::string("expected '") + kw + "'");
			}
			++i;
		};
		TraceRecord r;
		const auto rule = parse_rule_id(toks[i++]);
		if (!rule) {
			fail(line, "unknown rule '" + toks[0] + "'");
		}
		r.rule = *rule;
		expect("k");
		if (i + 2 > toks.size()) {
			fail(line, "missing k values");
		}
		r.k_before = to_int(toks[i++], line);
		r.k_after = to_int(toks[i++], line);
		expect("del");
		while (i < toks.size() && toks[i] != "mul") {
			r.deleted.push_back(to_int(toks[i++], line));
		}
		expect("mul");
		while (i < toks.size() && toks[i] != "s") {
			const std::string &t = toks[i++];
			const auto a = t.find(':');
			const auto b = t.find(':', a == std::string::npos ? a : a + 1);
			if (a == std::string::npos || b == std::string::npos) {
				fail(line, "malformed multiplicity change '" + t + "'");
			}
			r.changes.push_back({to_int(t.substr(0, a), line), to_int(t.substr(a + 1, b - a - 1), line),
					to_int(t.substr(b + 1), line)});
		}
		expect("s");
		if (i < toks.size() && toks[i] == "-") {
			++i;
		} else {
			r.s_used.emplace();
			while (i < toks.size() && toks[i] != "dec") {
				r.s_used->push_back(to_int(toks[i++], line));
			}
		}
		expect("dec");
		if (i >= toks.size()) {
			fail(line, "missing decision");
		}
		const std::string &d = toks[i++];
		if (d == "yes") {
			r.decided = true;
		} else if (d == "no") {
			r.decided = false;
		} else if (d != "-") {
			fail(line, "bad decision '" + d + "'");
		}
		if (i != toks.size()) {
			fail(line, "trailing tokens");
		}
		trace.push_back(std::move(r));
	}
	return trace;
}

} // namespace ctov
