#pragma once

#include <map>

#include "cycbrauer/cyclotomic.hpp"

namespace cycbrauer {

/// One strand in canonical anchor order. Nodes are encoded 0..n-1 for the
/// northern boundary (left to right) and n..2n-1 for the southern boundary.
/// Anchors: through strands (north, south); arcs (smaller, larger). The label
/// is read along the anchor direction: north to south for through strands,
/// left to right for arcs.
struct Strand {
    int a;
    int b;
    int label;
    bool operator==(const Strand& o) const { return a == o.a && b == o.b && label == o.label; }
    bool operator<(const Strand& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return label < o.label;
    }
};

/// Raw strand as supplied by a caller: oriented from -> to with a label.
struct RawStrand {
    int from;
    int to;
    int label;
};

/// A reduced (m,n)-diagram in canonical form. Values are immutable once
/// built; equality is structural.
class MDiagram {
public:
    MDiagram() : m_(1), n_(0) {}

    /// Canonicalizes raw strands. In the oriented calculus, flipping a strand
    /// to anchor order replaces its label by the inverse; the unoriented
    /// calculus keeps labels as given. Throws on non-matchings.
    static MDiagram canonicalize(int m, int n, const std::vector<RawStrand>& raw,
                                 bool oriented = true);

    static MDiagram identity(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<Strand>& strands() const { return strands_; }

    bool is_north(int node) const { return node < n_; }
    /// The strand containing the given node.
    const Strand& strand_at(int node) const;

    int through_count() const;

    bool operator==(const MDiagram& o) const {
        return m_ == o.m_ && n_ == o.n_ && strands_ == o.strands_;
    }
    bool operator!=(const MDiagram& o) const { return !(*this == o); }
    bool operator<(const MDiagram& o) const;

    std::string to_string() const;

private:
    int m_, n_;
    std::vector<Strand> strands_;
};

MDiagram transposition_diagram(int m, int n, int i, int j);  // t_{i,j}, 1-based nodes
MDiagram label_diagram(int m, int n, int i, int r);          // t_i^r
MDiagram arc_diagram(int m, int n, int i, int j);            // e_{i,j}
/// The inclusion that appends a zero-labelled through strand at position n+1.
MDiagram embed_diagram(const MDiagram& x);

/// Deterministic enumeration of all m^n (2n-1)!! reduced diagrams.
std::vector<MDiagram> enumerate_basis(int m, int n);

/// A finite linear combination of diagrams with Q(xi) coefficients. Zero
/// coefficients are pruned eagerly; terms are kept in a sorted map so that
/// iteration order is deterministic.
class AlgebraElement {
public:
    AlgebraElement() : m_(1), n_(0), fm_(1) {}
    AlgebraElement(int m, int n, int field_order);

    static AlgebraElement from_diagram(const MDiagram& d, int field_order);
    static AlgebraElement unit(int m, int n, int field_order);
    static AlgebraElement zero(int m, int n, int field_order) { return AlgebraElement(m, n, field_order); }

    int m() const { return m_; }
    int n() const { return n_; }
    int field_order() const { return fm_; }

    const std::map<MDiagram, Cyclotomic>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MDiagram& d, const Cyclotomic& c);
    Cyclotomic coefficient(const MDiagram& d) const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const Cyclotomic& c) const;
    bool operator==(const AlgebraElement& o) const;

    std::string to_string() const;

private:
    int m_, n_, fm_;
    std::map<MDiagram, Cyclotomic> terms_;
};

/// Product of two single diagrams: the loop scalar, the reduced diagram, and
/// the loop labels in removal order for introspection.
struct DiagramProduct {
    Cyclotomic coeff;
    MDiagram diagram;
    std::vector<int> loop_labels;
};

DiagramProduct multiply_diagrams(const MDiagram& x, const MDiagram& y, const Params& p,
                                 bool oriented = true);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, const Params& p);
AlgebraElement unoriented_multiply(const AlgebraElement& x, const AlgebraElement& y,
                                   const Params& p);

MDiagram star_diagram(const MDiagram& d, bool oriented = true);
AlgebraElement star(const AlgebraElement& x, bool oriented = true);

/// t_{i,j} / t_i^r / e_{i,j} wrapped as elements over the given field.
AlgebraElement gen_t(int m, int n, int fm, int i, int j);
AlgebraElement gen_t_label(int m, int n, int fm, int i, int r);
AlgebraElement gen_e(int m, int n, int fm, int i, int j);

/// The idempotent e_{n-2}: (1/delta_r) t_{n-1}^r e_{n-1,n} for the least r
/// with delta_r nonzero, or the loop-free diagram form when delta = 0 and
/// n >= 3. Throws when delta = 0 and n = 2.
AlgebraElement corner_idempotent(int n, const Params& p);

}  // namespace cycbrauer
