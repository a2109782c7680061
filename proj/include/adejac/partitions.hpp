#pragma once

#include <vector>

#include "adejac/rational.hpp"

namespace adejac {

// Weakly decreasing sequence of positive integers; the empty partition is
// allowed and is its own dual.
using Partition = std::vector<Int>;

void require_partition(const Partition& p);

// Transpose of the Young diagram.
Partition dual_partition(const Partition& p);

struct IdentityReport {
    Int lhs = 0;
    Int rhs = 0;
    bool equal() const { return lhs == rhs; }
};

// sum_{k,k'} min(p_k, q_k') against sum_r p*_r q*_r.  The common value is the
// sharp bound for the Euler characteristic of the gluing cokernel at an
// intersection point with the given rank sequences.
IdentityReport min_sum_identity_check(const Partition& p, const Partition& q);

// sum_k p_k (2k - 1) against sum_r (p*_r)^2.
IdentityReport square_sum_identity_check(const Partition& p);

// All partitions of n, lexicographically descending parts, deterministic order.
std::vector<Partition> partitions_of(Int n);

} // namespace adejac
