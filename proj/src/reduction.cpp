#include "simemb/reduction.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "simemb/planarity.hpp"

namespace simemb {

namespace {

int parity(GridPoint p) { return (p.first + p.second) % 2; }

bool horizontal(const GridEdge& e) { return e.first.second == e.second.second; }

std::string point_tag(GridPoint p) { return std::to_string(p.first) + "_" + std::to_string(p.second); }

std::string edge_tag(const GridEdge& e) { return point_tag(e.first) + (horizontal(e) ? "h" : "v"); }

std::string vertex_block_name(GridPoint p) { return "V" + point_tag(p); }
std::string edge_block_name(const GridEdge& e, int k) { return "E" + edge_tag(e) + "b" + std::to_string(k + 1); }
std::string chain_element_name(const GridEdge& e, int t) { return "e" + edge_tag(e) + "c" + std::to_string(t); }
std::string clause_block_name(int c) { return "K" + std::to_string(c + 1); }
std::string fixing_name(int c, const GridEdge& e) { return "f" + std::to_string(c + 1) + "_" + edge_tag(e); }
std::string home_name(int p, int q, Cell cell) {
    return "h" + std::to_string(p + 1) + "_" + std::to_string(q + 1) + "_" + point_tag(cell);
}

std::vector<GridEdge> grid_edges(int m, int n) {
    std::vector<GridEdge> edges;
    const int cols = m * n + 1, rows = 2 * m + 2;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({{c, r}, {c + 1, r}});
            if (r + 1 < rows && (r != m || c % m == 0)) edges.push_back({{c, r}, {c, r + 1}});
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Blocks of the chain B_u - E1 - E2 - E3 - E4 - B_v holding chain element t.
std::pair<std::string, std::string> chain_blocks(const GridEdge& e, int t) {
    const std::string left = t == 0 ? vertex_block_name(e.first) : edge_block_name(e, t - 1);
    const std::string right = t == 4 ? vertex_block_name(e.second) : edge_block_name(e, t);
    return {left, right};
}

// Partition of the left block of chain element t (the right block is in the other one).
int chain_left_partition(const GridEdge& e, int t) {
    const int pu = parity(e.first);
    // B_u, E2, E4 share u's partition; E1, E3 are in the other one.
    return (t % 2 == 0) ? pu : 1 - pu;
}

// Partition of edge block k (0-based, E1..E4).
int edge_block_partition(const GridEdge& e, int k) { return k % 2 == 0 ? 1 - parity(e.first) : parity(e.first); }

ElementRecord record(const std::string& element, const std::string& a, int partition_a, const std::string& b) {
    return partition_a == 0 ? ElementRecord{element, a, b} : ElementRecord{element, b, a};
}

Cell variable_cell(int m, int var) { return {(var - 1) * m, m}; }

struct RouteDraft {
    std::set<Cell> cells;
    std::vector<std::pair<std::pair<Cell, Cell>, GridEdge>> links;
    std::array<int, 3> upper_column{}, lower_column{};
    std::array<int, 3> upper_link{}, lower_link{};  // index into links
    int upper_row = 0, lower_row = 0;
};

void add_run(RouteDraft& d, int row, int c_lo, int c_hi) {
    for (int c = c_lo; c <= c_hi; ++c) d.cells.insert({c, row});
    for (int c = c_lo; c < c_hi; ++c) d.links.push_back({{{c, row}, {c + 1, row}}, {{c + 1, row}, {c + 1, row + 1}}});
}

// Vertical leg in `column` from row `from` towards the variable row, then
// into the variable cell.
int add_leg(RouteDraft& d, int m, int var, int column, int from, bool upper) {
    const int step = upper ? 1 : -1;
    const int last = upper ? m - 1 : m + 1;
    for (int r = from;; r += step) {
        d.cells.insert({column, r});
        if (r == last) break;
        const int boundary = upper ? r + 1 : r;
        d.links.push_back({{{column, r}, {column, r + step}}, {{column, boundary}, {column + 1, boundary}}});
    }
    const Cell vc = variable_cell(m, var);
    d.cells.insert(vc);
    const int boundary = upper ? m : m + 1;
    d.links.push_back({{{column, last}, vc}, {{column, boundary}, {column + 1, boundary}}});
    return static_cast<int>(d.links.size()) - 1;
}

struct Draft {
    int m = 0, n = 0;
    std::vector<ElementRecord> records;
};

Draft draft_grid(int m, int n) {
    if (m < 1 || n < 2)
        throw BadDimensions("grid needs m >= 1 and n >= 2, got m=" + std::to_string(m) + " n=" + std::to_string(n));
    Draft d{m, n, {}};
    for (const auto& e : grid_edges(m, n))
        for (int t = 0; t < 5; ++t) {
            const auto [a, b] = chain_blocks(e, t);
            d.records.push_back(record(chain_element_name(e, t), a, chain_left_partition(e, t), b));
        }
    return d;
}

ReductionOutput finish(const Draft& d, const MRRInstance& mrr, const std::vector<RouteDraft>& routes,
                       const std::map<HomeKey, std::string>& homes) {
    ReductionOutput out{pair_from_records(d.records), d.m, d.n, {}, {}, {}, {}, {}, mrr};
    const PartitionPair& pair = out.pair;
    auto elem = [&](const std::string& name) { return *pair.find_element(name); };
    auto block = [&](int p, const std::string& name) { return *pair.find_block(p, name); };

    for (const auto& e : grid_edges(d.m, d.n)) {
        EdgeChain chain;
        for (int k = 0; k < 4; ++k) chain.blocks[k] = block(edge_block_partition(e, k), edge_block_name(e, k));
        for (int t = 0; t < 5; ++t) chain.elements[t] = elem(chain_element_name(e, t));
        out.edge_chains[e] = chain;
        for (GridPoint p : {e.first, e.second})
            if (!out.vertex_blocks.count(p)) out.vertex_blocks[p] = block(parity(p), vertex_block_name(p));
    }
    for (int j = 1; j <= d.n; ++j) out.variable_cells.push_back(variable_cell(d.m, j));

    for (std::size_t ci = 0; ci < routes.size(); ++ci) {
        const RouteDraft& r = routes[ci];
        const int c = static_cast<int>(ci);
        ClauseBlock cb;
        cb.block = block(mrr.clauses[ci].positive ? 0 : 1, clause_block_name(c));
        cb.cells.assign(r.cells.begin(), r.cells.end());
        for (const auto& [cells, edge] : r.links)
            cb.links.push_back({cells.first, cells.second, edge, elem(fixing_name(c, edge))});
        cb.upper_column = r.upper_column;
        cb.lower_column = r.lower_column;
        for (int q = 0; q < 3; ++q) {
            cb.upper_gate[q] = cb.links[r.upper_link[q]].fixing_element;
            cb.lower_gate[q] = cb.links[r.lower_link[q]].fixing_element;
        }
        cb.upper_row = r.upper_row;
        cb.lower_row = r.lower_row;
        out.clause_blocks.push_back(std::move(cb));
    }
    for (const auto& [key, name] : homes) out.home_elements[key] = elem(name);
    return out;
}

}  // namespace

int ReductionOutput::fixing_count() const {
    int total = 0;
    for (const auto& cb : clause_blocks) total += static_cast<int>(cb.links.size());
    return total;
}

ReductionOutput base_grid(int m, int n) {
    MRRInstance empty;
    empty.n_vars = n;
    return finish(draft_grid(m, n), empty, {}, {});
}

MRRInstance resolve_orders(const MRRInstance& mrr) {
    MRRInstance out = mrr;
    const int nc = static_cast<int>(mrr.clauses.size());
    for (int c = 0; c < nc; ++c) {
        auto v = mrr.clauses[c].vars;
        for (int x : v)
            if (x < 1 || x > mrr.n_vars)
                throw InconsistentMRR("clause " + std::to_string(c + 1) + " uses unknown variable " + std::to_string(x));
        if (v[0] == v[1] || v[0] == v[2] || v[1] == v[2])
            throw InconsistentMRR("clause " + std::to_string(c + 1) + " repeats a variable");
    }

    for (bool sign : {true, false}) {
        std::vector<int> members;
        for (int c = 0; c < nc; ++c)
            if (mrr.clauses[c].positive == sign) members.push_back(c);
        auto it = mrr.nesting.find(sign);
        if (it != mrr.nesting.end()) {
            std::vector<int> given = it->second;
            std::sort(given.begin(), given.end());
            if (given != members)
                throw InconsistentMRR(std::string("nesting order for ") + (sign ? "positive" : "negative") +
                                      " clauses must list each such clause exactly once");
            continue;
        }
        auto span = [&](int c) {
            const auto& v = mrr.clauses[c].vars;
            return *std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end());
        };
        std::stable_sort(members.begin(), members.end(), [&](int a, int b) { return span(a) < span(b); });
        out.nesting[sign] = members;
    }

    for (bool sign : {true, false}) {
        std::vector<int> rank(nc, -1);
        for (std::size_t i = 0; i < out.nesting[sign].size(); ++i) rank[out.nesting[sign][i]] = static_cast<int>(i);
        for (int j = 1; j <= mrr.n_vars; ++j) {
            std::vector<int> left, middle, right;
            for (int c = 0; c < nc; ++c) {
                const Clause& cl = mrr.clauses[c];
                if (cl.positive != sign) continue;
                auto v = cl.vars;
                std::sort(v.begin(), v.end());
                if (v[0] == j) left.push_back(c);
                else if (v[1] == j) middle.push_back(c);
                else if (v[2] == j) right.push_back(c);
            }
            std::vector<int> users;
            users.insert(users.end(), left.begin(), left.end());
            users.insert(users.end(), middle.begin(), middle.end());
            users.insert(users.end(), right.begin(), right.end());
            auto it = mrr.leg_order.find({j, sign});
            if (it != mrr.leg_order.end()) {
                std::vector<int> given = it->second, expected = users;
                std::sort(given.begin(), given.end());
                std::sort(expected.begin(), expected.end());
                if (given != expected)
                    throw InconsistentMRR("leg order of x" + std::to_string(j) + " must list each " +
                                          (sign ? "positive" : "negative") + " clause using it exactly once");
                continue;
            }
            if (users.empty()) continue;
            auto by_rank = [&](int a, int b) { return rank[a] < rank[b]; };
            std::sort(left.begin(), left.end(), by_rank);
            std::sort(middle.begin(), middle.end(), by_rank);
            std::sort(right.begin(), right.end(), [&](int a, int b) { return rank[a] > rank[b]; });
            std::vector<int> order = left;
            order.insert(order.end(), middle.begin(), middle.end());
            order.insert(order.end(), right.begin(), right.end());
            out.leg_order[{j, sign}] = order;
        }
    }
    return out;
}

ReductionOutput reduce(const MRRInstance& input) {
    const MRRInstance mrr = resolve_orders(input);
    const int m = static_cast<int>(mrr.clauses.size());
    const int n = mrr.n_vars;
    Draft d = draft_grid(m, n);

    const int l = static_cast<int>(mrr.nesting.at(true).size());
    auto leg_count = [&](int j, bool sign) {
        auto it = mrr.leg_order.find({j, sign});
        return it == mrr.leg_order.end() ? 0 : static_cast<int>(it->second.size());
    };
    auto leg_rank = [&](int j, bool sign, int c) {
        const auto& order = mrr.leg_order.at({j, sign});
        return static_cast<int>(std::find(order.begin(), order.end(), c) - order.begin()) + 1;
    };

    std::vector<RouteDraft> routes(m);
    for (bool sign : {true, false}) {
        const auto& nest = mrr.nesting.at(sign);
        for (std::size_t pos = 0; pos < nest.size(); ++pos) {
            const int c = nest[pos];
            const int i = static_cast<int>(pos) + 1;
            RouteDraft& r = routes[c];
            const auto& vars = mrr.clauses[c].vars;
            for (int q = 0; q < 3; ++q) {
                const int j = vars[q];
                const int k = leg_rank(j, sign, c);
                if (sign) {
                    r.upper_column[q] = j * m - k;
                    r.lower_column[q] = j * m - k - leg_count(j, false);
                } else {
                    r.upper_column[q] = j * m - k - leg_count(j, true);
                    r.lower_column[q] = j * m - k;
                }
            }
            r.upper_row = sign ? m - i : (m - l) - i;
            r.lower_row = sign ? 2 * m - l + i : m + i;
            add_run(r, r.upper_row, *std::min_element(r.upper_column.begin(), r.upper_column.end()),
                    *std::max_element(r.upper_column.begin(), r.upper_column.end()));
            add_run(r, r.lower_row, *std::min_element(r.lower_column.begin(), r.lower_column.end()),
                    *std::max_element(r.lower_column.begin(), r.lower_column.end()));
            for (int q = 0; q < 3; ++q) {
                r.upper_link[q] = add_leg(r, m, vars[q], r.upper_column[q], r.upper_row, true);
                r.lower_link[q] = add_leg(r, m, vars[q], r.lower_column[q], r.lower_row, false);
            }
        }
    }

    // Same-sign routes must be cell-disjoint outside the variable row.
    for (bool sign : {true, false}) {
        std::map<Cell, int> owner;
        for (int c : mrr.nesting.at(sign))
            for (const Cell& cell : routes[c].cells) {
                if (cell.second == m) continue;
                auto [it, fresh] = owner.emplace(cell, c);
                if (!fresh)
                    throw InconsistentMRR("clauses " + std::to_string(it->second + 1) + " and " + std::to_string(c + 1) +
                                          " cross; the leg and nesting orders admit no layout");
            }
    }

    const std::set<GridEdge> edge_set = [&] {
        auto v = grid_edges(m, n);
        return std::set<GridEdge>(v.begin(), v.end());
    }();
    for (int c = 0; c < m; ++c) {
        const int cp = mrr.clauses[c].positive ? 0 : 1;
        for (const auto& [cells, edge] : routes[c].links) {
            if (!edge_set.count(edge)) throw Error("route crosses a missing grid edge " + edge_tag(edge));
            // The middle edge block (E2 or E3) in the opposite partition.
            const int k = edge_block_partition(edge, 1) == 1 - cp ? 1 : 2;
            d.records.push_back(record(fixing_name(c, edge), clause_block_name(c), cp, edge_block_name(edge, k)));
        }
    }

    std::map<HomeKey, std::string> homes;
    for (int p : mrr.nesting.at(true))
        for (int q : mrr.nesting.at(false)) {
            std::vector<Cell> shared;
            std::set_intersection(routes[p].cells.begin(), routes[p].cells.end(), routes[q].cells.begin(),
                                  routes[q].cells.end(), std::back_inserter(shared));
            for (const Cell& cell : shared) {
                if (cell.second == m) continue;
                const std::string name = home_name(p, q, cell);
                homes[{p, q, cell}] = name;
                d.records.push_back({name, clause_block_name(p), clause_block_name(q)});
            }
        }
    return finish(d, mrr, routes, homes);
}

bool satisfies(const MRRInstance& mrr, const Assignment& a) {
    if (static_cast<int>(a.values.size()) != mrr.n_vars) return false;
    for (const Clause& c : mrr.clauses) {
        bool ok = false;
        for (int v : c.vars) ok = ok || (a.value(v) == c.positive);
        if (!ok) return false;
    }
    return true;
}

SupportGraph canonical_support(const ReductionOutput& red, const Assignment& a) {
    const MRRInstance& mrr = red.mrr;
    if (static_cast<int>(a.values.size()) != mrr.n_vars)
        throw AssignmentDoesNotSatisfy("assignment has " + std::to_string(a.values.size()) + " values for " +
                                       std::to_string(mrr.n_vars) + " variables");
    for (std::size_t c = 0; c < mrr.clauses.size(); ++c) {
        const Clause& cl = mrr.clauses[c];
        bool ok = false;
        for (int v : cl.vars) ok = ok || (a.value(v) == cl.positive);
        if (!ok) throw AssignmentDoesNotSatisfy("clause " + std::to_string(c + 1) + " is not satisfied");
    }

    SupportGraph s = empty_support(red.pair);
    SimpleGraph& g = s.graph;
    auto path = [&](const std::vector<int>& seq) {
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) g.add_edge(seq[i], seq[i + 1]);
    };

    // Fixing elements sitting on the middle edge blocks.
    std::map<GridEdge, std::array<std::vector<int>, 2>> fixings;
    for (const auto& cb : red.clause_blocks)
        for (const auto& link : cb.links) {
            const EdgeChain& chain = red.edge_chains.at(link.crossed);
            const int k = red.pair.block_of(chain.blocks[1].partition, link.fixing_element) == chain.blocks[1].index ? 0 : 1;
            fixings[link.crossed][k].push_back(link.fixing_element);
        }

    // Each grid edge: its chain as a path along the edge.
    for (const auto& [edge, chain] : red.edge_chains) {
        std::vector<int> seq{chain.elements[0], chain.elements[1]};
        auto it = fixings.find(edge);
        if (it != fixings.end()) seq.insert(seq.end(), it->second[0].begin(), it->second[0].end());
        seq.push_back(chain.elements[2]);
        if (it != fixings.end()) seq.insert(seq.end(), it->second[1].begin(), it->second[1].end());
        seq.push_back(chain.elements[3]);
        seq.push_back(chain.elements[4]);
        path(seq);
    }

    // Each vertex block: a path around the vertex, leaving out the widest gap.
    std::map<GridPoint, std::array<int, 4>> around;  // right, down, left, up
    for (const auto& [edge, chain] : red.edge_chains) {
        const bool h = horizontal(edge);
        around.try_emplace(edge.first, std::array<int, 4>{-1, -1, -1, -1});
        around.try_emplace(edge.second, std::array<int, 4>{-1, -1, -1, -1});
        around[edge.first][h ? 0 : 1] = chain.elements[0];
        around[edge.second][h ? 2 : 3] = chain.elements[4];
    }
    auto cyclic_path = [&](const std::array<int, 4>& slots) {
        std::vector<int> present;
        for (int d = 0; d < 4; ++d)
            if (slots[d] >= 0) present.push_back(d);
        if (present.size() < 2) return;
        std::size_t start = 0;
        int widest = -1;
        for (std::size_t i = 0; i < present.size(); ++i) {
            const int next = present[(i + 1) % present.size()];
            const int gap = (next - present[i] + 4) % 4 == 0 ? 4 : (next - present[i] + 4) % 4;
            if (gap > widest) {
                widest = gap;
                start = (i + 1) % present.size();
            }
        }
        std::vector<int> seq;
        for (std::size_t i = 0; i < present.size(); ++i) seq.push_back(slots[present[(start + i) % present.size()]]);
        path(seq);
    };
    for (const auto& [p, slots] : around) cyclic_path(slots);

    // Clause routes: inside each ordinary cell the clause's gates are joined
    // in boundary order, or through the home element when the cell has one.
    std::map<std::pair<int, Cell>, int> hub;
    for (const auto& [key, e] : red.home_elements) {
        hub[{std::get<0>(key), std::get<2>(key)}] = e;
        hub[{std::get<1>(key), std::get<2>(key)}] = e;
    }
    for (std::size_t ci = 0; ci < red.clause_blocks.size(); ++ci) {
        const ClauseBlock& cb = red.clause_blocks[ci];
        std::map<Cell, std::array<int, 4>> gates;  // sides: top, right, bottom, left
        auto put = [&](const Cell& cell, int side, int e) {
            if (cell.second == red.m) return;
            gates.try_emplace(cell, std::array<int, 4>{-1, -1, -1, -1});
            gates[cell][side] = e;
        };
        for (const auto& link : cb.links) {
            const bool vertical = link.from.second != link.to.second;
            const bool forward = vertical ? link.to.second > link.from.second : link.to.first > link.from.first;
            const int from_side = vertical ? (forward ? 2 : 0) : (forward ? 1 : 3);
            put(link.from, from_side, link.fixing_element);
            put(link.to, (from_side + 2) % 4, link.fixing_element);
        }
        for (const auto& [cell, slots] : gates) {
            auto h = hub.find({static_cast<int>(ci), cell});
            if (h == hub.end()) {
                cyclic_path(slots);
                continue;
            }
            for (int e : slots)
                if (e >= 0) g.add_edge(e, h->second);
        }

        // Variable cells: keep one lane through a satisfied literal.
        const Clause& cl = mrr.clauses[ci];
        for (int q = 0; q < 3; ++q)
            if (a.value(cl.vars[q]) == cl.positive) {
                g.add_edge(cb.upper_gate[q], cb.lower_gate[q]);
                break;
            }
    }

    const auto check = is_support(g, red.pair);
    if (!check) throw Error("canonical support misses block " + red.pair.block_label(*check.violating_block));
    if (!is_planar(g)) throw Error("canonical support is not planar");
    return s;
}

std::optional<Assignment> brute_force_sat(const MRRInstance& mrr) {
    const int n = mrr.n_vars;
    if (n > 24) throw TooLarge("brute_force_sat handles at most 24 variables, got " + std::to_string(n));
    Assignment a{std::vector<bool>(n, false)};
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        for (int j = 0; j < n; ++j) a.values[j] = (mask >> (n - 1 - j)) & 1U;
        if (satisfies(mrr, a)) return a;
    }
    return std::nullopt;
}

}  // namespace simemb
