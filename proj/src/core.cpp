#include "simemb/core.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace simemb {

std::string_view to_string(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::MissingAssignment: return "MissingAssignment";
        case DiagnosticKind::DoubleAssignment: return "DoubleAssignment";
        case DiagnosticKind::EmptyBlock: return "EmptyBlock";
        case DiagnosticKind::UnknownElement: return "UnknownElement";
        case DiagnosticKind::DuplicateElement: return "DuplicateElement";
        case DiagnosticKind::DuplicateBlock: return "DuplicateBlock";
        case DiagnosticKind::BadToken: return "BadToken";
    }
    return "?";
}

std::string Diagnostic::message() const {
    std::string out(to_string(kind));
    out += "(";
    bool first = true;
    auto add = [&](const std::string& s) {
        if (!first) out += ", ";
        out += s;
        first = false;
    };
    if (!element.empty()) add(element);
    if (!block.empty()) add("block " + block);
    if (partition >= 0) add("partition " + std::to_string(partition));
    out += ")";
    return out;
}

namespace {

std::string join_messages(const std::vector<Diagnostic>& ds) {
    std::string out = "invalid partition pair:";
    for (const auto& d : ds) out += " " + d.message() + ";";
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : Error(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

bool ValidationError::has(DiagnosticKind kind) const {
    return std::any_of(diagnostics_.begin(), diagnostics_.end(),
                       [&](const Diagnostic& d) { return d.kind == kind; });
}

bool is_token(std::string_view s) {
    if (s.empty()) return false;
    for (unsigned char c : s) {
        if (c <= 0x20 || c == 0x7f) return false;
    }
    return true;
}

std::optional<int> PartitionPair::find_element(std::string_view id) const {
    auto it = element_index_.find(std::string(id));
    if (it == element_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<BlockRef> PartitionPair::find_block(int partition, std::string_view name) const {
    const auto& bs = blocks_.at(partition);
    for (int i = 0; i < static_cast<int>(bs.size()); ++i) {
        if (bs[i].name == name) return BlockRef{partition, i};
    }
    return std::nullopt;
}

std::vector<BlockRef> PartitionPair::all_blocks() const {
    std::vector<BlockRef> out;
    for (int p = 0; p < 2; ++p)
        for (int i = 0; i < block_count(p); ++i) out.push_back({p, i});
    return out;
}

BlockRef PartitionPair::from_flat_index(int flat) const {
    if (flat < block_count(0)) return {0, flat};
    return {1, flat - block_count(0)};
}

std::string PartitionPair::block_label(BlockRef ref) const {
    return "P" + std::to_string(ref.partition) + ":" + block(ref).name;
}

RawPair PartitionPair::to_raw() const {
    RawPair raw;
    raw.universe = elements_;
    for (int p = 0; p < 2; ++p) {
        for (const auto& b : blocks_[p]) {
            RawBlock rb{b.name, {}};
            for (int e : b.members) rb.members.push_back(elements_[e]);
            raw.partitions[p].push_back(std::move(rb));
        }
    }
    return raw;
}

std::vector<ElementRecord> PartitionPair::to_records() const {
    std::vector<ElementRecord> out;
    out.reserve(elements_.size());
    for (int e = 0; e < element_count(); ++e) {
        out.push_back({elements_[e], blocks_[0][block_of_[0][e]].name, blocks_[1][block_of_[1][e]].name});
    }
    return out;
}

PartitionPair validate_pair(const RawPair& raw) {
    std::vector<Diagnostic> diags;
    PartitionPair pair;

    for (const auto& id : raw.universe) {
        if (!is_token(id)) {
            diags.push_back({DiagnosticKind::BadToken, id, -1, ""});
            continue;
        }
        if (pair.element_index_.count(id)) {
            diags.push_back({DiagnosticKind::DuplicateElement, id, -1, ""});
            continue;
        }
        pair.element_index_.emplace(id, static_cast<int>(pair.elements_.size()));
        pair.elements_.push_back(id);
    }

    const int n = static_cast<int>(pair.elements_.size());
    for (int p = 0; p < 2; ++p) {
        pair.block_of_[p].assign(n, -1);
        std::set<std::string> names;
        for (const auto& rb : raw.partitions[p]) {
            if (!is_token(rb.name)) {
                diags.push_back({DiagnosticKind::BadToken, "", p, rb.name});
                continue;
            }
            if (!names.insert(rb.name).second) {
                diags.push_back({DiagnosticKind::DuplicateBlock, "", p, rb.name});
                continue;
            }
            if (rb.members.empty()) {
                diags.push_back({DiagnosticKind::EmptyBlock, "", p, rb.name});
                continue;
            }
            const int bi = static_cast<int>(pair.blocks_[p].size());
            Block block{rb.name, {}};
            for (const auto& m : rb.members) {
                auto it = pair.element_index_.find(m);
                if (it == pair.element_index_.end()) {
                    diags.push_back({DiagnosticKind::UnknownElement, m, p, rb.name});
                    continue;
                }
                int& slot = pair.block_of_[p][it->second];
                if (slot != -1) {
                    diags.push_back({DiagnosticKind::DoubleAssignment, m, p, rb.name});
                    continue;
                }
                slot = bi;
                block.members.push_back(it->second);
            }
            std::sort(block.members.begin(), block.members.end());
            pair.blocks_[p].push_back(std::move(block));
        }
        for (int e = 0; e < n; ++e) {
            if (pair.block_of_[p][e] == -1)
                diags.push_back({DiagnosticKind::MissingAssignment, pair.elements_[e], p, ""});
        }
    }

    if (!diags.empty()) throw ValidationError(std::move(diags));
    return pair;
}

RawPair raw_from_records(const std::vector<ElementRecord>& records) {
    RawPair raw;
    std::array<std::map<std::string, std::size_t>, 2> index;
    for (const auto& r : records) {
        raw.universe.push_back(r.element);
        const std::string* names[2] = {&r.block0, &r.block1};
        for (int p = 0; p < 2; ++p) {
            if (names[p]->empty()) continue;
            auto [it, inserted] = index[p].emplace(*names[p], raw.partitions[p].size());
            if (inserted) raw.partitions[p].push_back({*names[p], {}});
            raw.partitions[p][it->second].members.push_back(r.element);
        }
    }
    return raw;
}

PartitionPair pair_from_records(const std::vector<ElementRecord>& records) {
    return validate_pair(raw_from_records(records));
}

PartitionPair gen_all_pairs_instance(int a, int b) {
    if (a < 1 || b < 1) throw Error("gen_all_pairs_instance: a and b must be at least 1");
    std::vector<ElementRecord> recs;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            recs.push_back({"e_" + std::to_string(i) + "_" + std::to_string(j), "A" + std::to_string(i),
                            "B" + std::to_string(j)});
    return pair_from_records(recs);
}

PartitionPair gen_k5_subdivision_instance() {
    std::vector<ElementRecord> recs;
    for (int i = 1; i <= 5; ++i) {
        for (int j = i + 1; j <= 5; ++j) {
            const std::string d = "D" + std::to_string(i) + std::to_string(j);
            recs.push_back({"u" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(i),
                            "C" + std::to_string(i), d});
            recs.push_back({"u" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(j),
                            "C" + std::to_string(j), d});
        }
    }
    return pair_from_records(recs);
}

namespace {

// Uniform integer in [0, bound) by rejection sampling on raw engine output.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = bounded(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

std::vector<int> chunk_labels(int n, int max_block, std::mt19937_64& rng) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    shuffle(order, rng);
    std::vector<int> label(n);
    int pos = 0, block = 0;
    while (pos < n) {
        int size = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_block)));
        for (int k = 0; k < size && pos < n; ++k) label[order[pos++]] = block;
        ++block;
    }
    return label;
}

}  // namespace

PartitionPair gen_random_pair(std::uint64_t seed, int n_elements, int max_block) {
    if (n_elements < 1 || max_block < 1) throw Error("gen_random_pair: n_elements and max_block must be at least 1");
    std::mt19937_64 rng(seed);
    auto a = chunk_labels(n_elements, max_block, rng);
    auto b = chunk_labels(n_elements, max_block, rng);
    std::vector<ElementRecord> recs;
    for (int e = 0; e < n_elements; ++e)
        recs.push_back({"u" + std::to_string(e), "A" + std::to_string(a[e]), "B" + std::to_string(b[e])});
    return pair_from_records(recs);
}

}  // namespace simemb
