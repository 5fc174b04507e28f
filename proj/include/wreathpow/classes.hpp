#pragma once

#include "wreathpow/cyclotomic.hpp"
#include "wreathpow/partitions.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wreathpow {

/// A conjugacy class of C_k wr S_n: the cycle type of the underlying
/// permutation with, for each cycle, the exponent a of its cycle product
/// zeta^a. The pair multiset is kept canonical (part descending, then
/// exponent ascending), so equal classes compare equal memberwise.
struct ClassLabel {
    int k = 1;
    std::vector<std::pair<int, int>> pairs; // (part, exponent mod k)

    ClassLabel() = default;
    ClassLabel(int k, std::vector<std::pair<int, int>> pairs);

    int n() const;
    Partition cycle_type() const;

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
    friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;

    std::string to_string() const;
};

/// One label per conjugacy class of C_k wr S_n; the count equals the number
/// of k-tuples of partitions of total size n. Deterministic order: cycle
/// types in descending lexicographic order, exponent assignments ascending.
std::vector<ClassLabel> classes(int n, int k);

/// p'-part of k (k with all factors of p removed). p must be prime.
long r_p(long k, long p);

/// True iff the class consists of elements of order coprime to p: every part
/// of the cycle type is coprime to p and every cycle product has
/// multiplicative order k/gcd(k,a) coprime to p.
bool is_p_regular(const ClassLabel& c, int p);

/// Generalized permutation matrix in compact form: e_j maps to
/// zeta^exponent[j] * e_{image[j]}. Entries of the dense form lie in
/// {0} union {zeta^a}.
struct GenPerm {
    int k = 1;
    std::vector<int> image;
    std::vector<int> exponent;

    int n() const { return static_cast<int>(image.size()); }
    std::vector<std::vector<CycloNumber>> dense() const;
};

/// A representative of the class: the underlying permutation has cycle type
/// lambda(c) with consecutive supports, and each cycle carries zeta^{a} on
/// its closing entry and 1 elsewhere, so the cycle products realize the
/// exponents. Recomputing the label from the matrix returns c.
GenPerm class_representative(const ClassLabel& c);

/// Recover the ClassLabel of a generalized permutation matrix.
ClassLabel class_label_of(const GenPerm& g);

} // namespace wreathpow
