#pragma once

#include <string>
#include <vector>

namespace wreathpow {

/// A partition is a weakly decreasing vector of positive parts; the empty
/// vector is the unique partition of 0.
using Partition = std::vector<int>;

int partition_sum(const Partition& p);
std::string partition_to_string(const Partition& p);

/// All partitions of n, each exactly once, in descending lexicographic order:
/// (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);

enum class FamilyKind { W, A, X };

/// A named family of partitions together with the parameters that define it.
/// Members always satisfy the family predicate; construction re-checks it.
struct PartitionFamily {
    FamilyKind kind;
    int m = 0; // W parameter
    int p = 0; // A/X prime
    int n = 0; // A/X size
    std::vector<Partition> members;

    std::size_t size() const { return members.size(); }
};

/// Partitions of m of shape (a^b, 1^{m-ab}) with a > 1, plus the all-ones
/// partition (the b = 0 case). m = 0 gives the singleton empty partition.
PartitionFamily w_partitions(int m);
/// |w_partitions(m)| by the closed-form count 1 + sum_{t=2}^m floor(m/t).
long w_count(int m);

/// Partitions of n of shape (r^a, 1^b) with r > 1 coprime to p, plus (1^n).
PartitionFamily a_partitions(int p, int n);
/// closed-form count 1 + sum_{1 < r <= n, (r,p)=1} floor(n/r)
long a_count(int p, int n);

/// Partitions of n whose parts are all coprime to p.
PartitionFamily x_partitions(int p, int n);

} // namespace wreathpow
