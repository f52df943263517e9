#pragma once

#include <optional>

#include "cycbrauer/partitions.hpp"

namespace cycbrauer {

/// An m-tuple of nonnegative integers.
struct MComposition {
    std::vector<int> entries;

    MComposition() = default;
    explicit MComposition(std::vector<int> e);

    int m() const { return static_cast<int>(entries.size()); }
    int total() const;
    /// Prefix sums [w_0], [w_0]+[w_1], ...
    std::vector<int> brackets() const;
    /// The unique r with bracket(r-1) < i <= bracket(r), for 1 <= i <= total.
    int block_of(int i) const;

    bool operator==(const MComposition& o) const { return entries == o.entries; }
    bool operator!=(const MComposition& o) const { return !(*this == o); }
    bool operator<(const MComposition& o) const { return entries < o.entries; }

    /// "(a,b,c)", entries permuted by `display`: position k prints entry
    /// display[k]. Empty display means identity.
    std::string to_string(const std::vector<int>& display = {}) const;
    static MComposition parse(const std::string& s);
};

MComposition sizes_of(const MultiPartition& lambda);

/// Switches between the oriented algebra's order (paired growth in components
/// r and m-r, even growth in 0 and m/2) and the unoriented variant
/// (componentwise even growth).
enum class PosetVariant { oriented, unoriented };

/// Coefficients a_r of the signed relation. Oriented: indexed 0..floor(m/2).
/// Unoriented: indexed 0..m-1.
struct PosetSignature {
    std::vector<int> a;
    bool is_zero() const;
    int sum() const;
    bool operator==(const PosetSignature& o) const { return a == o.a; }
};

/// Returns the signature when omega precedes omega2, nullopt otherwise.
/// The relation points from the smaller composition to the larger.
std::optional<PosetSignature> poset_leq(const MComposition& omega, const MComposition& omega2,
                                        PosetVariant variant = PosetVariant::oriented);

/// The order on m-partitions: componentwise containment plus poset_leq of the
/// size compositions.
bool order_leq(const MultiPartition& lambda, const MultiPartition& mu,
               PosetVariant variant = PosetVariant::oriented);

/// All m-partitions with exactly `total` boxes, sorted.
std::vector<MultiPartition> mpartitions_of(int m, int total);
/// All m-compositions with exactly `total`, sorted.
std::vector<MComposition> mcompositions_of(int m, int total);

/// The label set of cell modules: m-partitions of n, n-2, n-4, ...
std::vector<MultiPartition> lambda_set(int m, int n);
/// The corresponding compositions: m-compositions of n, n-2, ...
std::vector<MComposition> lambda_abs(int m, int n);

/// The co-saturated label set below omega: all lambda in lambda_set(m, total)
/// with sizes_of(lambda) preceding omega.
std::vector<MultiPartition> lambda_omega(const MComposition& omega,
                                         PosetVariant variant = PosetVariant::oriented);

/// The down-set of omega inside lambda_abs(m, total(omega)).
std::vector<MComposition> downset(const MComposition& omega,
                                  PosetVariant variant = PosetVariant::oriented);

/// Covering edge of the poset; the label says the relation has unit signature
/// concentrated at index label_r (drawn as xi^label_r).
struct HasseEdge {
    MComposition from;  // lower vertex
    MComposition to;    // upper vertex
    int label_r;
};

struct HasseDiagram {
    std::vector<MComposition> vertices;
    std::vector<HasseEdge> edges;

    /// Vertex sets of the connected components.
    std::vector<std::vector<MComposition>> components() const;
    /// Minimal vertices (no incoming covering edge) per component.
    std::vector<std::vector<MComposition>> minimal_elements() const;
};

HasseDiagram hasse(const std::vector<MComposition>& vertices,
                   PosetVariant variant = PosetVariant::oriented);

/// The connected component of omega within lambda_abs(m, n).
std::vector<MComposition> poset_component(int m, int n, const MComposition& omega,
                                          PosetVariant variant = PosetVariant::oriented);

/// Deterministic Graphviz text: vertices and edges sorted by printed label.
std::string hasse_dot(const HasseDiagram& diagram, const std::vector<int>& display = {});

}  // namespace cycbrauer
