#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace simemb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DiagnosticKind {
    MissingAssignment,
    DoubleAssignment,
    EmptyBlock,
    UnknownElement,
    DuplicateElement,
    DuplicateBlock,
    BadToken,
};

std::string_view to_string(DiagnosticKind kind);

/// One violated invariant found while validating a candidate pair.
struct Diagnostic {
    DiagnosticKind kind;
    std::string element;  // offending element id, empty if not applicable
    int partition = -1;   // 0 or 1, -1 if not applicable
    std::string block;    // offending block name, empty if not applicable

    std::string message() const;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
    bool has(DiagnosticKind kind) const;

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Identifies a block by its partition (0 or 1) and its position inside it.
struct BlockRef {
    int partition = 0;
    int index = 0;

    friend bool operator==(const BlockRef&, const BlockRef&) = default;
    friend auto operator<=>(const BlockRef&, const BlockRef&) = default;
};

struct Block {
    std::string name;
    std::vector<int> members;  // element indices, ascending

    friend bool operator==(const Block&, const Block&) = default;
};

/// Unchecked description of a pair of partitions, as read from a file or
/// assembled by hand. validate_pair turns it into a PartitionPair.
struct RawBlock {
    std::string name;
    std::vector<std::string> members;
};

struct RawPair {
    std::vector<std::string> universe;
    std::array<std::vector<RawBlock>, 2> partitions;
};

/// Element record in the line-oriented pair format: an element together with
/// the names of its block in partition 0 and partition 1. An empty block name
/// stands for a missing assignment.
struct ElementRecord {
    std::string element;
    std::string block0;
    std::string block1;
};

/// Two partitions of a common universe. Immutable once built; the only way to
/// obtain one is through validate_pair (directly or via a generator), so every
/// instance satisfies the partition invariants.
class PartitionPair {
public:
    int element_count() const { return static_cast<int>(elements_.size()); }
    const std::string& element(int e) const { return elements_.at(e); }
    const std::vector<std::string>& elements() const { return elements_; }
    std::optional<int> find_element(std::string_view id) const;

    const std::vector<Block>& blocks(int partition) const { return blocks_.at(partition); }
    const Block& block(BlockRef ref) const { return blocks_.at(ref.partition).at(ref.index); }
    int block_count(int partition) const { return static_cast<int>(blocks_.at(partition).size()); }
    int block_count() const { return block_count(0) + block_count(1); }
    std::optional<BlockRef> find_block(int partition, std::string_view name) const;

    /// Index of the block of `partition` that contains element `e`.
    int block_of(int partition, int e) const { return block_of_.at(partition).at(e); }
    BlockRef block_ref_of(int partition, int e) const { return {partition, block_of(partition, e)}; }

    /// All blocks in a fixed order: partition 0 first, then partition 1.
    std::vector<BlockRef> all_blocks() const;
    /// Dense index of a block in all_blocks() order.
    int flat_index(BlockRef ref) const { return ref.partition == 0 ? ref.index : block_count(0) + ref.index; }
    BlockRef from_flat_index(int flat) const;

    /// "P0:name" style label, unique within the pair.
    std::string block_label(BlockRef ref) const;

    RawPair to_raw() const;
    std::vector<ElementRecord> to_records() const;

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;

private:
    friend PartitionPair validate_pair(const RawPair& raw);

    std::vector<std::string> elements_;
    std::array<std::vector<Block>, 2> blocks_;
    std::array<std::vector<int>, 2> block_of_;
    std::unordered_map<std::string, int> element_index_;
};

/// Checks every partition invariant and returns the verified pair. Throws
/// ValidationError listing all violations otherwise.
PartitionPair validate_pair(const RawPair& raw);

/// Builds a RawPair from element records (blocks implied by mention, in order of
/// first mention) and validates it.
PartitionPair pair_from_records(const std::vector<ElementRecord>& records);
RawPair raw_from_records(const std::vector<ElementRecord>& records);

bool is_token(std::string_view s);

/// a*b elements e_i_j; partition 0 groups by i, partition 1 groups by j.
PartitionPair gen_all_pairs_instance(int a, int b);

/// Partition 0 has blocks C1..C5 of four elements; partition 1 has a
/// two-element block Dij for every i<j linking Ci and Cj.
PartitionPair gen_k5_subdivision_instance();

/// Seeded random pair; block sizes never exceed max_block.
PartitionPair gen_random_pair(std::uint64_t seed, int n_elements, int max_block);

}  // namespace simemb
