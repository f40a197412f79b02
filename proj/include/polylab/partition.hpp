#pragma once

#include <span>
#include <vector>

// r-block partitions of {0,...,n-1} with block-l2 bookkeeping: the sum of
// block l2 norms is sandwiched between the exact polar gauge and the gauge
// divided by sqrt(2). Blocks are built round-robin over the nonincreasing
// rearrangement: sorted position k goes to block k mod r.

namespace polylab::partition {

struct BlockPartition {
    std::vector<std::vector<int>> blocks;  // original coordinate indices
    std::vector<double> block_l2;          // ||z restricted to block j||_2
};

BlockPartition round_robin_partition(std::span<const double> z, int r);

double block_l2_sum(const BlockPartition& p);

struct SandwichReport {
    bool lower_ok = false;  // block sum >= exact/sqrt(2) - tol
    bool upper_ok = false;  // block sum <= exact + tol
    double ratio = 0.0;     // block sum / exact (0 when exact = 0)
    double block_sum = 0.0;
    double exact = 0.0;
};

// Checks both sides of the block-l2 sandwich against the exact polar gauge.
// Reports rather than throws.
SandwichReport verify_sandwich(std::span<const double> z, int r);

}  // namespace polylab::partition
