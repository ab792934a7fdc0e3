#pragma once
// Random monotone formulas for property tests. Instances whose default orders
// admit no layout are skipped by the callers (reduce throws InconsistentMRR).

#include <algorithm>
#include <numeric>
#include <random>

#include "simemb/reduction.hpp"

namespace oracle {

inline simemb::MRRInstance random_mrr(std::mt19937_64& rng, int n_vars, int n_clauses) {
    simemb::MRRInstance mrr;
    mrr.n_vars = n_vars;
    std::vector<int> vars(n_vars);
    std::iota(vars.begin(), vars.end(), 1);
    for (int c = 0; c < n_clauses; ++c) {
        std::shuffle(vars.begin(), vars.end(), rng);
        simemb::Clause cl;
        cl.positive = rng() % 2 == 0;
        std::copy(vars.begin(), vars.begin() + 3, cl.vars.begin());
        std::sort(cl.vars.begin(), cl.vars.end());
        mrr.clauses.push_back(cl);
    }
    return mrr;
}

// Every assignment in lexicographic order, false before true.
inline std::optional<simemb::Assignment> first_model(const simemb::MRRInstance& mrr) {
    const int n = mrr.n_vars;
    for (long long bits = 0; bits < (1LL << n); ++bits) {
        simemb::Assignment a;
        for (int j = 0; j < n; ++j) a.values.push_back((bits >> (n - 1 - j)) & 1);
        bool all = true;
        for (const auto& c : mrr.clauses) {
            bool any = false;
            for (int v : c.vars) any = any || a.values[v - 1] == c.positive;
            all = all && any;
        }
        if (all) return a;
    }
    return std::nullopt;
}

}  // namespace oracle
