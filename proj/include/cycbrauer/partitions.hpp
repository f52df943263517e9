#pragma once

#include <string>
#include <vector>

#include "cycbrauer/rational.hpp"

namespace cycbrauer {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < length() ? parts[i] : 0; }
    bool empty() const { return parts.empty(); }

    bool contains(const Partition& other) const;
    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const;  // by size, then lex; a total order

    std::string to_string() const;  // "3,1" with "-" for the empty partition
    static Partition parse(const std::string& s);
};

/// All partitions of n, descending lexicographic.
std::vector<Partition> partitions_of(int n);

/// All partitions of N with every part even; N must be even.
std::vector<Partition> even_partitions(int N);

/// Number of standard Young tableaux of shape lambda (hook length formula).
mpz_class standard_tableaux_count(const Partition& lambda);

/// Littlewood-Richardson coefficient c^{nu}_{lambda,tau}, by enumerating
/// lattice-word skew semistandard fillings of nu/lambda with content tau.
long lr_coeff(const Partition& nu, const Partition& lambda, const Partition& tau);

/// An m-tuple of partitions.
struct MultiPartition {
    std::vector<Partition> components;

    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> comps) : components(std::move(comps)) {}
    static MultiPartition empty(int m) { return MultiPartition(std::vector<Partition>(m)); }

    int m() const { return static_cast<int>(components.size()); }
    int size() const;
    std::vector<int> component_sizes() const;

    bool contains(const MultiPartition& other) const;

    bool operator==(const MultiPartition& o) const { return components == o.components; }
    bool operator!=(const MultiPartition& o) const { return !(*this == o); }
    bool operator<(const MultiPartition& o) const;

    std::string to_string() const;  // components joined with '|'
    static MultiPartition parse(const std::string& s, int m);
};

/// A box position within an m-partition; rows and columns are 1-based.
struct Box {
    int component;
    int row;
    int col;
    bool operator==(const Box& o) const {
        return component == o.component && row == o.row && col == o.col;
    }
};

/// Removable/addable boxes split by the component carrying them: entry r of
/// each list holds the boxes of sign xi^r.
struct SignedBoxes {
    std::vector<std::vector<Box>> removable;
    std::vector<std::vector<Box>> addable;
};

SignedBoxes boxes(const MultiPartition& lambda);
MultiPartition remove_box(const MultiPartition& lambda, const Box& b);
MultiPartition add_box(const MultiPartition& lambda, const Box& b);

/// Dominance for m-partitions of equal total size: returns mu <= lambda.
bool dominance_leq(const MultiPartition& mu, const MultiPartition& lambda);

/// The extension to labels with different box counts: more boxes dominates,
/// ties fall back to dominance. Returns mu <= lambda.
bool extended_dominance_leq(const MultiPartition& mu, const MultiPartition& lambda);

}  // namespace cycbrauer
