#include "polylab/partition.hpp"

#include <cmath>

#include "polylab/errors.hpp"
#include "polylab/interp_norm.hpp"

namespace polylab::partition {

BlockPartition round_robin_partition(std::span<const double> z, int r) {
    int n = static_cast<int>(z.size());
    if (r < 1 || r > n) throw ConfigError("round_robin_partition: need 1 <= r <= n");
    auto sorted = interp::rearrange_desc(z);
    BlockPartition p;
    p.blocks.assign(r, {});
    std::vector<double> sq(r, 0.0);
    for (int k = 0; k < n; ++k) {
        int j = k % r;
        p.blocks[j].push_back(sorted.perm[k]);
        sq[j] += sorted.values[k] * sorted.values[k];
    }
    p.block_l2.resize(r);
    for (int j = 0; j < r; ++j) p.block_l2[j] = std::sqrt(sq[j]);
    return p;
}

double block_l2_sum(const BlockPartition& p) {
    double s = 0.0;
    for (double v : p.block_l2) s += v;
    return s;
}

SandwichReport verify_sandwich(std::span<const double> z, int r) {
    SandwichReport rep;
    rep.block_sum = block_l2_sum(round_robin_partition(z, r));
    rep.exact = interp::dual_gauge_exact(z, interp::InterpolationIndex(static_cast<int>(z.size()),
                                                                       static_cast<double>(r)));
    double tol = 1e-9 * std::max(1.0, rep.exact);
    rep.lower_ok = rep.block_sum >= rep.exact / std::sqrt(2.0) - tol;
    rep.upper_ok = rep.block_sum <= rep.exact + tol;
    rep.ratio = rep.exact > 0.0 ? rep.block_sum / rep.exact : 0.0;
    return rep;
}

}  // namespace polylab::partition
