#pragma once

#include <array>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "simemb/core.hpp"
#include "simemb/structures.hpp"

namespace simemb {

// Hard instances for strong embeddability, built on top of a grid scaffold
// from a monotone rectilinear representation of a planar monotone 3SAT
// formula.
//
// Grid coordinates are (column, row) with row 0 at the top. A cell is named
// by its top-left grid vertex. The cells between rows m and m+1 are merged
// into n wide variable cells; variable x_j owns columns (j-1)m .. jm and its
// cell is named (m(j-1), m).

struct Clause {
    bool positive = true;
    std::array<int, 3> vars{};  // 1-based variable indices, distinct
};

/// A formula together with its layout: variables left to right, positive
/// clauses drawn above and negative clauses below the variable row.
struct MRRInstance {
    int n_vars = 0;
    std::vector<Clause> clauses;
    /// (variable, positive) -> clause indices in right-to-left leg order.
    /// Missing entries are filled in by a canonical default.
    std::map<std::pair<int, bool>, std::vector<int>> leg_order;
    /// positive -> clause indices from innermost to outermost. Missing
    /// entries are filled in by span width.
    std::map<bool, std::vector<int>> nesting;
};

struct Assignment {
    std::vector<bool> values;  // values[j-1] is x_j

    bool value(int var) const { return values.at(var - 1); }
};

using GridPoint = std::pair<int, int>;             // (column, row)
using GridEdge = std::pair<GridPoint, GridPoint>;  // lower coordinate first
using Cell = std::pair<int, int>;                  // top-left corner

struct EdgeChain {
    std::array<BlockRef, 4> blocks;  // B1..B4 from the lower endpoint on
    std::array<int, 5> elements;     // c0..c4; c0 is in the lower vertex block
};

/// One step of a clause route: moving between two adjacent cells across a
/// grid edge, which receives a fixing element.
struct RouteLink {
    Cell from;
    Cell to;
    GridEdge crossed;
    int fixing_element = -1;
};

struct ClauseBlock {
    BlockRef block;
    std::vector<Cell> cells;  // sorted, variable cells included
    std::vector<RouteLink> links;
    /// Per literal (in clause order): leg column above and below the
    /// variable cell.
    std::array<int, 3> upper_column{};
    std::array<int, 3> lower_column{};
    /// Per literal: fixing elements on the top and bottom edge of the
    /// variable cell.
    std::array<int, 3> upper_gate{};
    std::array<int, 3> lower_gate{};
    int upper_row = 0;  // row of the upper horizontal run
    int lower_row = 0;  // row of the lower horizontal run
};

/// (positive clause, negative clause, home cell) -> shared element.
using HomeKey = std::tuple<int, int, Cell>;

struct ReductionOutput {
    PartitionPair pair;
    int m = 0;  // clauses (grid parameter)
    int n = 0;  // variables
    int columns() const { return m * n + 1; }
    int rows() const { return 2 * m + 2; }

    std::map<GridPoint, BlockRef> vertex_blocks;
    std::map<GridEdge, EdgeChain> edge_chains;
    std::vector<ClauseBlock> clause_blocks;  // indexed like mrr.clauses
    std::map<HomeKey, int> home_elements;
    std::vector<Cell> variable_cells;
    MRRInstance mrr;  // with leg and nesting orders resolved

    int fixing_count() const;
};

class BadDimensions : public Error {
public:
    using Error::Error;
};

class InconsistentMRR : public Error {
public:
    using Error::Error;
};

class AssignmentDoesNotSatisfy : public Error {
public:
    using Error::Error;
};

/// The scaffold pair for grid parameters m >= 1, n >= 2.
ReductionOutput base_grid(int m, int n);

/// The grid with one clause block per clause. Throws InconsistentMRR when the
/// orders are incomplete or force two same-sign routes to share a cell.
ReductionOutput reduce(const MRRInstance& mrr);

/// Throws InconsistentMRR if the instance is malformed; returns it with
/// default orders filled in otherwise.
MRRInstance resolve_orders(const MRRInstance& mrr);

bool satisfies(const MRRInstance& mrr, const Assignment& a);

/// Planar support following the canonical embedding for a satisfying
/// assignment. The result is checked with is_support and is_planar.
SupportGraph canonical_support(const ReductionOutput& red, const Assignment& a);

/// Lexicographically first satisfying assignment (false < true, x_1 most
/// significant). Throws TooLarge above 24 variables.
std::optional<Assignment> brute_force_sat(const MRRInstance& mrr);

}  // namespace simemb
