#include "simemb/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace simemb {

namespace {

// Whitespace-separated tokens of each non-empty line, comments removed.
struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line line{number, {}};
        for (std::string t; ss >> t;) line.tokens.push_back(t);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return in;
}

int parse_int(const std::string& source, int line, const std::string& token) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError(source, line, "expected an integer, got '" + token + "'");
    }
}

bool parse_sign(const std::string& source, int line, const std::string& token) {
    if (token == "pos") return true;
    if (token == "neg") return false;
    throw ParseError(source, line, "expected pos or neg, got '" + token + "'");
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& what)
    : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

std::vector<ElementRecord> parse_pair_records(std::istream& in, const std::string& source) {
    std::vector<ElementRecord> records;
    for (const Line& line : tokenize(in)) {
        const auto& t = line.tokens;
        if (t[0] != "element") throw ParseError(source, line.number, "unknown keyword '" + t[0] + "'");
        if (t.size() < 2) throw ParseError(source, line.number, "element line without an id");
        if (t.size() > 4) throw ParseError(source, line.number, "too many fields on element line");
        records.push_back({t[1], t.size() > 2 ? t[2] : "", t.size() > 3 ? t[3] : ""});
    }
    return records;
}

PartitionPair read_pair(std::istream& in, const std::string& source) {
    return pair_from_records(parse_pair_records(in, source));
}

PartitionPair read_pair_file(const std::string& path) {
    auto in = open_input(path);
    return read_pair(in, path);
}

void write_pair(std::ostream& out, const PartitionPair& pair) {
    out << "# " << pair.element_count() << " elements, " << pair.block_count(0) << " + " << pair.block_count(1)
        << " blocks\n";
    for (const auto& r : pair.to_records()) out << "element " << r.element << ' ' << r.block0 << ' ' << r.block1 << '\n';
}

void write_graph(std::ostream& out, const SimpleGraph& graph) {
    for (int v = 0; v < graph.vertex_count(); ++v) out << "v " << graph.label(v) << '\n';
    for (auto [u, v] : graph.edges()) out << "e " << graph.label(u) << ' ' << graph.label(v) << '\n';
}

SimpleGraph read_graph(std::istream& in, const std::string& source) {
    SimpleGraph g;
    std::map<std::string, int> ids;
    for (const Line& line : tokenize(in)) {
        const auto& t = line.tokens;
        if (t[0] == "v" && t.size() == 2) {
            if (!ids.emplace(t[1], g.vertex_count()).second)
                throw ParseError(source, line.number, "duplicate vertex '" + t[1] + "'");
            g.add_vertex(t[1]);
        } else if (t[0] == "e" && t.size() == 3) {
            auto a = ids.find(t[1]), b = ids.find(t[2]);
            if (a == ids.end() || b == ids.end()) throw ParseError(source, line.number, "edge uses an undeclared vertex");
            if (a->second == b->second) throw ParseError(source, line.number, "self-loop");
            g.add_edge(a->second, b->second);
        } else {
            throw ParseError(source, line.number, "expected 'v <id>' or 'e <id> <id>'");
        }
    }
    return g;
}

MRRInstance read_mrr(std::istream& in, const std::string& source) {
    MRRInstance mrr;
    bool header = false;
    std::vector<std::pair<int, std::vector<std::string>>> deferred;
    for (const Line& line : tokenize(in)) {
        const auto& t = line.tokens;
        if (!header) {
            if (t[0] != "mrr" || t.size() != 2) throw ParseError(source, line.number, "expected header 'mrr <n_vars>'");
            mrr.n_vars = parse_int(source, line.number, t[1]);
            if (mrr.n_vars < 1) throw ParseError(source, line.number, "need at least one variable");
            header = true;
            continue;
        }
        if (t[0] == "clause") {
            if (t.size() != 5) throw ParseError(source, line.number, "expected 'clause <pos|neg> <v> <v> <v>'");
            Clause c;
            c.positive = parse_sign(source, line.number, t[1]);
            for (int q = 0; q < 3; ++q) {
                c.vars[q] = parse_int(source, line.number, t[2 + q]);
                if (c.vars[q] < 1 || c.vars[q] > mrr.n_vars)
                    throw ParseError(source, line.number, "variable " + t[2 + q] + " out of range");
            }
            mrr.clauses.push_back(c);
        } else if (t[0] == "legorder" || t[0] == "nesting") {
            deferred.emplace_back(line.number, t);
        } else {
            throw ParseError(source, line.number, "unknown keyword '" + t[0] + "'");
        }
    }
    if (!header) throw ParseError(source, 0, "missing 'mrr <n_vars>' header");

    // Orders refer to clause numbers, so they are read after all clauses.
    const int nc = static_cast<int>(mrr.clauses.size());
    auto clause_list = [&](int number, const std::vector<std::string>& t, std::size_t from) {
        std::vector<int> out;
        for (std::size_t i = from; i < t.size(); ++i) {
            const int c = parse_int(source, number, t[i]);
            if (c < 1 || c > nc) throw ParseError(source, number, "clause index " + t[i] + " out of range");
            out.push_back(c - 1);
        }
        return out;
    };
    for (const auto& [number, t] : deferred) {
        if (t[0] == "legorder") {
            if (t.size() < 3) throw ParseError(source, number, "expected 'legorder <var> <pos|neg> <clauses...>'");
            const int var = parse_int(source, number, t[1]);
            if (var < 1 || var > mrr.n_vars) throw ParseError(source, number, "variable " + t[1] + " out of range");
            const bool sign = parse_sign(source, number, t[2]);
            if (!mrr.leg_order.emplace(std::make_pair(var, sign), clause_list(number, t, 3)).second)
                throw ParseError(source, number, "repeated legorder line");
        } else {
            if (t.size() < 2) throw ParseError(source, number, "expected 'nesting <pos|neg> <clauses...>'");
            const bool sign = parse_sign(source, number, t[1]);
            if (!mrr.nesting.emplace(sign, clause_list(number, t, 2)).second)
                throw ParseError(source, number, "repeated nesting line");
        }
    }
    return mrr;
}

MRRInstance read_mrr_file(const std::string& path) {
    auto in = open_input(path);
    return read_mrr(in, path);
}

void write_mrr(std::ostream& out, const MRRInstance& mrr) {
    out << "mrr " << mrr.n_vars << '\n';
    for (const Clause& c : mrr.clauses)
        out << "clause " << (c.positive ? "pos" : "neg") << ' ' << c.vars[0] << ' ' << c.vars[1] << ' ' << c.vars[2]
            << '\n';
    for (const auto& [key, order] : mrr.leg_order) {
        out << "legorder " << key.first << ' ' << (key.second ? "pos" : "neg");
        for (int c : order) out << ' ' << c + 1;
        out << '\n';
    }
    for (const auto& [sign, order] : mrr.nesting) {
        out << "nesting " << (sign ? "pos" : "neg");
        for (int c : order) out << ' ' << c + 1;
        out << '\n';
    }
}

Rational parse_rational(const std::string& token) {
    auto fail = [&] { return Error("not a rational number: '" + token + "'"); };
    if (token.empty()) throw fail();
    Rational r;
    if (const auto dot = token.find('.'); dot != std::string::npos) {
        std::string digits = token.substr(0, dot) + token.substr(dot + 1);
        const std::size_t decimals = token.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") throw fail();
        if (digits[0] == '+') digits.erase(0, 1);
        if (digits.find_first_not_of("-0123456789", 0) != std::string::npos || digits.find('-', 1) != std::string::npos)
            throw fail();
        mpz_class num(digits, 10), den = 1;
        for (std::size_t i = 0; i < decimals; ++i) den *= 10;
        r = Rational(num, den);
    } else {
        std::string t = token[0] == '+' ? token.substr(1) : token;
        if (t.empty() || r.set_str(t, 10) != 0) throw fail();
        if (r.get_den() == 0) throw fail();
    }
    r.canonicalize();
    return r;
}

std::vector<Point> read_points(std::istream& in, const std::string& source) {
    std::vector<Point> pts;
    for (const Line& line : tokenize(in)) {
        if (line.tokens.size() != 2) throw ParseError(source, line.number, "expected 'x y'");
        try {
            pts.emplace_back(parse_rational(line.tokens[0]), parse_rational(line.tokens[1]));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(source, line.number, e.what());
        }
    }
    return pts;
}

std::vector<Point> read_points_file(const std::string& path) {
    auto in = open_input(path);
    return read_points(in, path);
}

Assignment parse_assignment(const std::string& text) {
    Assignment a;
    for (char ch : text) {
        switch (ch) {
            case 'T': case 't': case '1': a.values.push_back(true); break;
            case 'F': case 'f': case '0': a.values.push_back(false); break;
            case ' ': case ',': case '\t': case '\n': break;
            default: throw Error(std::string("assignment may only contain T, F, 1 or 0, got '") + ch + "'");
        }
    }
    return a;
}

std::string format_assignment(const Assignment& a) {
    std::string s;
    for (bool v : a.values) s += v ? 'T' : 'F';
    return s;
}

std::string Report::text() const {
    std::string s;
    for (const auto& [k, v] : entries_) s += k + ": " + v + "\n";
    return s;
}

}  // namespace simemb
