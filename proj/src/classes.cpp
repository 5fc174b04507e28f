#include "wreathpow/classes.hpp"

#include "wreathpow/nt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wreathpow {

namespace {

void canonicalize_pairs(std::vector<std::pair<int, int>>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first; // part descending
        return a.second < b.second;                       // exponent ascending
    });
}

} // namespace

ClassLabel::ClassLabel(int k_, std::vector<std::pair<int, int>> pairs_)
    : k(k_), pairs(std::move(pairs_)) {
    if (k < 1) throw std::invalid_argument("ClassLabel: k must be >= 1");
    for (auto& [part, exp] : pairs) {
        if (part < 1) throw std::invalid_argument("ClassLabel: parts must be positive");
        exp %= k;
        if (exp < 0) exp += k;
    }
    canonicalize_pairs(pairs);
}

int ClassLabel::n() const {
    int total = 0;
    for (const auto& [part, exp] : pairs) total += part;
    return total;
}

Partition ClassLabel::cycle_type() const {
    Partition parts;
    parts.reserve(pairs.size());
    for (const auto& [part, exp] : pairs) parts.push_back(part);
    // pairs are part-descending already
    return parts;
}

std::string ClassLabel::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) os << ",";
        os << "(" << pairs[i].first << "," << pairs[i].second << ")";
    }
    os << "}";
    return os.str();
}

namespace {

// non-decreasing exponent multisets of size count over {0..k-1}
void gen_exponent_multisets(int count, int k, int min_exp, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
    if (count == 0) {
        out.push_back(cur);
        return;
    }
    for (int e = min_exp; e < k; ++e) {
        cur.push_back(e);
        gen_exponent_multisets(count - 1, k, e, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<ClassLabel> classes(int n, int k) {
    if (n < 0) throw std::invalid_argument("classes: n must be >= 0");
    if (k < 1) throw std::invalid_argument("classes: k must be >= 1");
    std::vector<ClassLabel> out;
    for (const auto& lambda : partitions(n)) {
        // group equal parts: each group independently receives a multiset
        // of exponents
        std::vector<std::pair<int, int>> groups; // (part, multiplicity)
        for (int part : lambda) {
            if (!groups.empty() && groups.back().first == part) ++groups.back().second;
            else groups.emplace_back(part, 1);
        }
        std::vector<std::vector<std::vector<int>>> choices(groups.size());
        for (std::size_t g = 0; g < groups.size(); ++g) {
            std::vector<int> cur;
            gen_exponent_multisets(groups[g].second, k, 0, cur, choices[g]);
        }
        // odometer over the per-group choices
        std::vector<std::size_t> idx(groups.size(), 0);
        while (true) {
            std::vector<std::pair<int, int>> pairs;
            pairs.reserve(lambda.size());
            for (std::size_t g = 0; g < groups.size(); ++g)
                for (int e : choices[g][idx[g]])
                    pairs.emplace_back(groups[g].first, e);
            out.emplace_back(k, std::move(pairs));
            std::size_t g = 0;
            while (g < groups.size() && ++idx[g] == choices[g].size()) {
                idx[g] = 0;
                ++g;
            }
            if (g == groups.size()) break;
        }
    }
    return out;
}

long r_p(long k, long p) {
    return p_prime_part(k, p); // validates p prime, k >= 1
}

bool is_p_regular(const ClassLabel& c, int p) {
    if (!is_prime(p)) throw std::invalid_argument("is_p_regular: p must be prime");
    for (const auto& [part, exp] : c.pairs) {
        if (part % p == 0) return false;
        long order = c.k / std::gcd(static_cast<long>(c.k), static_cast<long>(exp));
        if (order % p == 0) return false;
    }
    return true;
}

std::vector<std::vector<CycloNumber>> GenPerm::dense() const {
    const int size = n();
    std::vector<std::vector<CycloNumber>> m(size, std::vector<CycloNumber>(size, CycloNumber(k)));
    for (int j = 0; j < size; ++j)
        m[image[j]][j] = CycloNumber::zeta_power(k, exponent[j]);
    return m;
}

GenPerm class_representative(const ClassLabel& c) {
    GenPerm g;
    g.k = c.k;
    const int size = c.n();
    g.image.assign(size, 0);
    g.exponent.assign(size, 0);
    int base = 0;
    for (const auto& [part, exp] : c.pairs) {
        // cycle base -> base+1 -> ... -> base+part-1 -> base, with the
        // closing entry carrying zeta^exp
        for (int t = 0; t < part - 1; ++t) g.image[base + t] = base + t + 1;
        g.image[base + part - 1] = base;
        g.exponent[base + part - 1] = exp;
        base += part;
    }
    return g;
}

ClassLabel class_label_of(const GenPerm& g) {
    const int size = g.n();
    std::vector<bool> seen(size, false);
    std::vector<std::pair<int, int>> pairs;
    for (int start = 0; start < size; ++start) {
        if (seen[start]) continue;
        int len = 0;
        long exp_sum = 0;
        int j = start;
        do {
            seen[j] = true;
            exp_sum += g.exponent[j];
            j = g.image[j];
            ++len;
        } while (j != start);
        pairs.emplace_back(len, static_cast<int>(exp_sum % g.k));
    }
    return ClassLabel(g.k, std::move(pairs));
}

} // namespace wreathpow
