#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "simemb/core.hpp"
#include "simemb/geometry.hpp"
#include "simemb/graph.hpp"
#include "simemb/reduction.hpp"

namespace simemb {

/// Malformed line in one of the text formats. Partition invariants are not
/// parse errors; they surface as ValidationError.
class ParseError : public Error {
public:
    ParseError(const std::string& source, int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

// Pair format: `element <eid> <block0> <block1>` per line. A line with a
// missing block name is accepted here and reported as MissingAssignment by
// validation.
std::vector<ElementRecord> parse_pair_records(std::istream& in, const std::string& source = "<input>");
PartitionPair read_pair(std::istream& in, const std::string& source = "<input>");
PartitionPair read_pair_file(const std::string& path);
void write_pair(std::ostream& out, const PartitionPair& pair);

// Graph format: `v <id>` and `e <id> <id>` lines; ids are vertex labels.
void write_graph(std::ostream& out, const SimpleGraph& graph);
SimpleGraph read_graph(std::istream& in, const std::string& source = "<input>");

MRRInstance read_mrr(std::istream& in, const std::string& source = "<input>");
MRRInstance read_mrr_file(const std::string& path);
void write_mrr(std::ostream& out, const MRRInstance& mrr);

/// One `x y` pair per line; each coordinate is an integer, a fraction p/q or
/// a decimal.
std::vector<Point> read_points(std::istream& in, const std::string& source = "<input>");
std::vector<Point> read_points_file(const std::string& path);
Rational parse_rational(const std::string& token);

/// Characters T/F or 1/0, one per variable; spaces and commas are ignored.
Assignment parse_assignment(const std::string& text);
std::string format_assignment(const Assignment& a);

/// Ordered `key: value` lines.
class Report {
public:
    void add(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
    std::string text() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace simemb
