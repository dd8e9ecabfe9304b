#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/sequence.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

/// Contiguous vertex interval [lo..hi] of K_n that is still uncoloured inside.
struct Block {
    Vertex lo = 1;
    Vertex hi = 1;
    int size() const { return hi - lo + 1; }
    friend bool operator==(const Block&, const Block&) = default;
};

/// One standard colouring step: split the top t vertices [hi-t+1..hi] off
/// block [lo..hi] and give all t * (size - t) crossing edges `colour`.
struct Step {
    Vertex lo = 1;
    Vertex hi = 1;
    int t = 1;
    Colour colour = 1;
    friend bool operator==(const Step&, const Step&) = default;
};

/// Replayable log of standard colouring steps; metadata lines are kept
/// verbatim (without the leading '#') for the certificate trailer.
struct SplitCertificate {
    int n = 1;
    int k = 1;
    std::vector<Step> steps;
    std::vector<std::string> metadata;
};

enum class SplitErrorKind {
    UnknownBlock,
    BadSize,
    TooLargeT,
    BudgetExceeded,
    BadColour,
    CushionTooSmall,
    BatchInfeasible,
};

const char* to_string(SplitErrorKind kind);

class SplitError : public std::runtime_error {
public:
    SplitError(SplitErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    SplitErrorKind kind() const { return kind_; }

private:
    SplitErrorKind kind_;
};

/// Live state S_l of the standard colouring algorithm: the active blocks
/// (singletons included) and the per-colour remaining budgets e_{l,j}.
///
/// Two running totals are kept on independent update paths (block sizes and
/// budgets) and compared after every step; a mismatch throws std::logic_error.
class SplitState {
public:
    /// Starts from S_0 = {[1..n]}; requires an n-good sequence.
    explicit SplitState(const DistributionSequence& seq);

    int n() const { return n_; }
    int k() const { return static_cast<int>(budgets_.size()); }
    Count budget(Colour c) const { return budgets_[c - 1]; }
    std::span<const Count> budgets() const { return budgets_; }
    std::size_t step_count() const { return log_.steps.size(); }

    bool is_active(Block b) const;
    /// Active blocks in ascending lo order.
    std::vector<Block> blocks() const;
    std::size_t block_count() const { return blocks_.size(); }
    bool finished() const { return uncoloured_ == 0; }

    /// Sum of C(size, 2) over active blocks (running total).
    Count uncoloured_edges() const { return uncoloured_; }
    Count budget_total() const { return budget_total_; }
    /// Recomputes both sides of the conservation identity from scratch.
    bool conservation_holds() const;

    void standard_step(Block b, int t, Colour c);
    void simple_step(Block b, Colour c) { standard_step(b, 1, c); }

    /// Remaining budget minus C(size,2); equals C(size,2) summed over the other blocks.
    Count cushion(Block b) const;

    /// Colour with the largest budget that is at least `need`, ties to the
    /// smallest index; kNoColour if none. An empty `allowed` means all colours.
    Colour best_colour(Count need, std::span<const Colour> allowed = {}) const;

    const SplitCertificate& certificate() const { return log_; }
    void add_metadata(std::string line) { log_.metadata.push_back(std::move(line)); }

private:
    int n_;
    std::map<Vertex, Vertex> blocks_;  // lo -> hi
    std::vector<Count> budgets_;
    Count uncoloured_ = 0;
    Count budget_total_ = 0;
    SplitCertificate log_;
};

/// Simple steps with the largest-budget colour while the block has size >= 2k.
/// Returns the surviving block (size < 2k).
Block reduce_large(SplitState& state, Block b);

/// m - 1 simple steps dissolving the block into singletons. Requires the
/// cushion to be at least min{(k^2 - k)/2, k * m}; throws CushionTooSmall otherwise.
void drain_with_cushion(SplitState& state, Block b);

/// `count` standard steps of size t on a shrinking block using colours from
/// `allowed` (all colours if empty). Requires size > t * count and the
/// allowed budgets to sum to more than t * size * (count + |allowed|).
/// Returns the continuing block; split-off blocks are appended to `split_off`.
Block batch_steps(SplitState& state, Block b, int t, int count, std::span<const Colour> allowed,
                  std::vector<Block>* split_off = nullptr);

/// Colouring obtained by applying the certificate's steps to K_n.
/// Throws std::invalid_argument when a step does not address an active block.
Colouring realize(const SplitCertificate& cert);

}  // namespace rainbow
