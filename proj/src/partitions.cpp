#include "wreathpow/partitions.hpp"

#include "wreathpow/nt.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wreathpow {

int partition_sum(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

namespace {

void gen_partitions(int remaining, int max_part, Partition& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

bool is_w_shape(const Partition& q) {
    // (a^b, 1^*) with a > 1, or all ones
    std::size_t i = 0;
    while (i < q.size() && q[i] > 1 && q[i] == q[0]) ++i;
    for (std::size_t j = i; j < q.size(); ++j)
        if (q[j] != 1) return false;
    return true;
}

} // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: n must be >= 0");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

PartitionFamily w_partitions(int m) {
    if (m < 0) throw std::invalid_argument("w_partitions: m must be >= 0");
    PartitionFamily fam;
    fam.kind = FamilyKind::W;
    fam.m = m;
    fam.members.push_back(Partition(m, 1)); // all ones; empty when m = 0
    for (int a = 2; a <= m; ++a) {
        for (int b = 1; a * b <= m; ++b) {
            Partition q(b, a);
            q.resize(b + (m - a * b), 1);
            fam.members.push_back(std::move(q));
        }
    }
    for (const auto& q : fam.members)
        if (partition_sum(q) != m || !is_w_shape(q))
            throw std::logic_error("w_partitions: member fails predicate");
    return fam;
}

long w_count(int m) {
    long total = 1;
    for (int t = 2; t <= m; ++t) total += m / t;
    return total;
}

PartitionFamily a_partitions(int p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("a_partitions: p must be prime");
    if (n < 1) throw std::invalid_argument("a_partitions: n must be >= 1");
    PartitionFamily fam;
    fam.kind = FamilyKind::A;
    fam.p = p;
    fam.n = n;
    fam.members.push_back(Partition(n, 1));
    for (int r = 2; r <= n; ++r) {
        if (r % p == 0) continue;
        for (int a = 1; r * a <= n; ++a) {
            Partition q(a, r);
            q.resize(a + (n - r * a), 1);
            fam.members.push_back(std::move(q));
        }
    }
    for (const auto& q : fam.members)
        if (partition_sum(q) != n)
            throw std::logic_error("a_partitions: member fails predicate");
    return fam;
}

long a_count(int p, int n) {
    long total = 1;
    for (int r = 2; r <= n; ++r)
        if (r % p != 0) total += n / r;
    return total;
}

PartitionFamily x_partitions(int p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("x_partitions: p must be prime");
    if (n < 0) throw std::invalid_argument("x_partitions: n must be >= 0");
    PartitionFamily fam;
    fam.kind = FamilyKind::X;
    fam.p = p;
    fam.n = n;
    for (const auto& q : partitions(n)) {
        bool ok = true;
        for (int part : q)
            if (part % p == 0) { ok = false; break; }
        if (ok) fam.members.push_back(q);
    }
    return fam;
}

} // namespace wreathpow
