#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/sequence.hpp"

namespace rainbow {

enum class Verdict { Realizable, Unrealizable, Inconclusive };
const char* to_string(Verdict v);

struct OracleOptions {
    std::uint64_t node_budget = 50'000'000;
    bool colour_symmetry = true;  // unused colours with equal initial budgets are interchangeable
};

struct OracleResult {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Colouring> witness;
    std::uint64_t nodes = 0;
};

/// Exhaustive search for a rainbow-H-free colouring of K_n with distribution
/// seq. Edges are assigned in lexicographic order; after each assignment only
/// copies of H through the new edge are checked. Meant for n <= 8.
OracleResult is_realizable(const DistributionSequence& seq, const TargetGraph& h, const OracleOptions& options = {});

/// True iff some sequence of standard colouring steps realizes seq. Memoised
/// over (sorted block sizes, sorted budgets); tries every block, size and colour.
bool is_realizable_standard(const DistributionSequence& seq);

struct TableRow {
    std::vector<Count> e;  // non-increasing
    Verdict verdict = Verdict::Inconclusive;
};

struct TableSection {
    int n = 0;
    std::vector<TableRow> rows;
    bool complete = true;        // every n-good sequence was decided
    bool all_realizable = true;  // only meaningful when complete
};

struct GReport {
    int k = 0;
    int n_max = 0;
    std::vector<TableSection> sections;  // n = 2..n_max, possibly cut short
    bool partial = false;
    /// Least N with every n in [N, n_max] fully realizable, if any.
    std::optional<int> least_all_realizable;
};

struct ExactGOptions {
    OracleOptions oracle;
    std::uint64_t total_budget = 2'000'000'000;  // oracle nodes across the whole sweep
    std::uint64_t max_sequences = 1'000'000;
};

/// All non-increasing n-good sequences of length k for n = 2..n_max, in
/// reverse lexicographic order (colour permutations do not change realizability).
std::vector<std::vector<Count>> nonincreasing_sequences(int n, int k);

/// Decides every sequence up to n_max; sequences are fanned out with OpenMP.
GReport exact_g(const TargetGraph& h, int k, int n_max, const ExactGOptions& options = {});

/// "# n=..." headers followed by "e1 .. ek VERDICT" lines.
void write_table(std::ostream& out, const GReport& report);

}  // namespace rainbow
