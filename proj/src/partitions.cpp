#include "adejac/partitions.hpp"

#include <algorithm>

namespace adejac {

void require_partition(const Partition& p)
{
    for (std::size_t k = 0; k < p.size(); ++k) {
        require(p[k] >= 1, "NotAPartition", "parts must be positive");
        require(k == 0 || p[k - 1] >= p[k], "NotAPartition", "parts must be weakly decreasing");
    }
}

Partition dual_partition(const Partition& p)
{
    require_partition(p);
    Partition dual;
    if (p.empty())
        return dual;
    dual.reserve(static_cast<std::size_t>(p.front()));
    for (Int r = 1; r <= p.front(); ++r) {
        Int count = 0;
        for (Int part : p)
            if (part >= r)
                ++count;
        dual.push_back(count);
    }
    return dual;
}

IdentityReport min_sum_identity_check(const Partition& p, const Partition& q)
{
    require_partition(p);
    require_partition(q);
    IdentityReport report;
    for (Int a : p)
        for (Int b : q)
            report.lhs += std::min(a, b);
    Partition pd = dual_partition(p);
    Partition qd = dual_partition(q);
    std::size_t rows = std::min(pd.size(), qd.size());
    for (std::size_t r = 0; r < rows; ++r)
        report.rhs += pd[r] * qd[r];
    return report;
}

IdentityReport square_sum_identity_check(const Partition& p)
{
    require_partition(p);
    IdentityReport report;
    for (std::size_t k = 0; k < p.size(); ++k)
        report.lhs += p[k] * (2 * static_cast<Int>(k) + 1);
    for (Int part : dual_partition(p))
        report.rhs += part * part;
    return report;
}

namespace {

void emit_partitions(Int remaining, Int max_part, Partition& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (Int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(Int n)
{
    require(n >= 0, "NotAPartition", "cannot partition a negative integer");
    std::vector<Partition> out;
    Partition prefix;
    emit_partitions(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

} // namespace adejac
