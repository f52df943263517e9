#pragma once

#include "cycbrauer/diagrams.hpp"
#include "cycbrauer/linalg.hpp"
#include "cycbrauer/posets.hpp"

namespace cycbrauer {

/// A group element of (Z/mZ) wr Sigma_n, stored like its diagram: north node
/// i runs to south node perm[i], carrying labels[i]. Multiplication matches
/// diagram concatenation (this above other).
struct WreathElement {
    int m = 1;
    std::vector<int> labels;
    std::vector<int> perm;

    static WreathElement identity(int m, int n);
    int n() const { return static_cast<int>(perm.size()); }

    WreathElement mul(const WreathElement& o) const;
    WreathElement inverse() const;
    bool operator==(const WreathElement& o) const {
        return m == o.m && labels == o.labels && perm == o.perm;
    }
    bool operator<(const WreathElement& o) const {
        return std::tie(labels, perm) < std::tie(o.labels, o.perm);
    }

    MDiagram to_diagram() const;
    /// Requires a through-strand-only diagram.
    static WreathElement from_diagram(const MDiagram& d);
};

/// Young's natural integral representation of the symmetric group on the
/// Specht module S(lambda), with polytabloid basis indexed by standard
/// tableaux. Matrices live over Q(xi_fm) but have integer entries.
class SymmetricSpecht {
public:
    SymmetricSpecht(Partition lambda, int field_order);

    const Partition& label() const { return lambda_; }
    int n() const { return n_; }
    int dim() const { return dim_; }
    int field_order() const { return fm_; }

    /// Matrix of the adjacent transposition (i, i+1), 1 <= i <= n-1.
    const Mat& adjacent(int i) const;

    /// Matrix of an arbitrary permutation given in one-line images form
    /// (0-based, q[i] = image of i) under the convention M(p q) = M(p) M(q)
    /// for (p q)(i) = p(q(i)).
    Mat permutation_matrix(const std::vector<int>& images) const;

private:
    Partition lambda_;
    int n_, dim_, fm_;
    std::vector<Mat> adjacent_;
};

/// The Specht module of the wreath product algebra H_n^m, induced from the
/// twisted outer tensor product over the Young subgroup of |lambda|. Basis:
/// minimal coset representatives (encoded as block functions) times standard
/// tableau tuples.
class WreathSpecht {
public:
    WreathSpecht(MultiPartition lambda, int field_order);

    const MultiPartition& label() const { return lambda_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int dim() const { return dim_; }
    int field_order() const { return fm_; }

    Mat action(const WreathElement& g) const;
    /// Action of a linear combination of through-strand diagrams.
    Mat action(const AlgebraElement& x) const;

    Cyclotomic character(const WreathElement& g) const { return action(g).trace(); }

    /// Basis bookkeeping: block function of each coset and the factor
    /// dimensions, for callers that need to address basis vectors.
    const std::vector<std::vector<int>>& cosets() const { return cosets_; }
    const std::vector<int>& factor_dims() const { return factor_dims_; }
    int basis_index(int coset, const std::vector<int>& tableau_tuple) const;

private:
    MultiPartition lambda_;
    int n_, m_, fm_, dim_;
    std::vector<SymmetricSpecht> factors_;
    std::vector<int> factor_dims_;
    int tuple_count_;
    std::vector<std::vector<int>> cosets_;  // block functions, sorted
    std::map<std::vector<int>, int> coset_index_;
};

/// T_i^r = (1/m) sum_q xi^{qr} t_i^q, as an element of the diagram algebra.
AlgebraElement idempotent_T(int m, int n, int i, int r);

/// pi_omega: the product of the T_i^r over the blocks of omega, expanded.
/// The expansion has m^n terms; guarded at desk scale.
AlgebraElement pi_omega(const MComposition& omega);

/// The block function i -> r of omega, as a length-n vector (0-based nodes).
std::vector<int> omega_blocks(const MComposition& omega);

/// The truncation of a wreath Specht module by pi_omega: a module over the
/// group algebra of the Young subgroup Sigma_omega.
struct TruncatedSpecht {
    int dim = 0;
    /// Basis: tableau tuples of the surviving coset (present iff dim > 0).
    /// Matrices of the in-block adjacent transpositions, keyed by the ambient
    /// position i (transposition (i, i+1) inside a block of omega).
    std::map<int, Mat> block_adjacents;
};

TruncatedSpecht truncate_specht(const MComposition& omega, const MultiPartition& lambda);

/// All standard Young tableaux of a shape, each as rows of 1-based values.
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& lambda);

}  // namespace cycbrauer
