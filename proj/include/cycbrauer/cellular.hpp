#pragma once

#include "cycbrauer/wreath.hpp"

namespace cycbrauer {

/// An (m,n,l)-dangle: l disjoint labelled arcs on n nodes, the rest free.
/// Arcs are right-oriented, so the stored label is read from the smaller to
/// the larger node; free nodes are downward-oriented.
struct Dangle {
    int m = 1;
    int n = 0;
    std::vector<Strand> arcs;  // a < b < n, sorted

    static Dangle make(int m, int n, std::vector<Strand> arcs);
    int l() const { return static_cast<int>(arcs.size()); }
    std::vector<int> free_nodes() const;

    bool operator==(const Dangle& o) const { return m == o.m && n == o.n && arcs == o.arcs; }
    bool operator<(const Dangle& o) const;
    std::string to_string() const;
};

/// All (m,n,l)-dangles; count C(n,2l) (2l-1)!! m^l.
std::vector<Dangle> dangles(int m, int n, int l);

/// Result of stacking a diagram above a dangle: either annihilation (the
/// through-strand count dropped), or a loop scalar, the new dangle, and the
/// wreath element connecting the surviving free strands.
struct DangleAction {
    bool annihilated = false;
    Cyclotomic scalar;
    Dangle result;
    WreathElement sigma;
};

DangleAction act_on_dangle(const MDiagram& x, const Dangle& d, const Params& p,
                           bool oriented = true);

/// The cell module Delta_n(lambda) = V(m,n,l) (x) S(lambda), with the
/// concatenation action. Basis is dangle-major: index = dangle * dim S + j.
class CellModule {
public:
    CellModule(MultiPartition lambda, int n, const Params& p, bool oriented = true);

    const MultiPartition& label() const { return lambda_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int arc_count() const { return l_; }
    int dim() const { return dim_; }
    bool oriented() const { return oriented_; }
    const Params& params() const { return params_; }

    const std::vector<Dangle>& dangle_basis() const { return dangles_; }
    const WreathSpecht& specht() const { return specht_; }
    int basis_index(int dangle, int specht_vec) const { return dangle * specht_.dim() + specht_vec; }

    Mat action(const MDiagram& x) const;
    Mat action(const AlgebraElement& x) const;
    Cyclotomic character(const AlgebraElement& x) const { return action(x).trace(); }

    /// Generator matrices t_{i,i+1}, t_1^1, e_{1,2} (the algebra generators).
    std::vector<std::pair<std::string, Mat>> generator_matrices() const;

private:
    MultiPartition lambda_;
    int n_, m_, fm_, l_, dim_;
    bool oriented_;
    Params params_;
    std::vector<Dangle> dangles_;
    std::map<Dangle, int> dangle_index_;
    WreathSpecht specht_;
};

/// dim V(m,n,l) = C(n,2l) (2l-1)!! m^l.
long dangle_space_dim(int m, int n, int l);

/// Embeds an element of B_k^m into B_n^m by appending identity strands.
AlgebraElement embed_element(const AlgebraElement& x, int n);

/// The image of an idempotent inside a cell module, with the action of any
/// ambient element that preserves it.
class IdempotentImage {
public:
    IdempotentImage(const CellModule& parent, const AlgebraElement& idem);
    int dim() const { return dim_; }
    /// Matrix of x restricted to the image; throws verification_error if x
    /// does not preserve the image.
    Mat action(const AlgebraElement& x) const;

private:
    const CellModule& parent_;
    int dim_;
    std::vector<std::vector<Cyclotomic>> basis_;  // image basis, parent coords
    LinearSpan span_;
};

/// Localisation F_n = e_{n-2} * (-): the image module together with the
/// subalgebra dictionary y -> e embed(y) e.
struct LocalisedModule {
    std::shared_ptr<const CellModule> parent;
    std::shared_ptr<IdempotentImage> image;
    int n_low;  // modules over B_{n_low}^m
    AlgebraElement idem;
    /// action of y in B_{n_low}^m on the image
    Mat action(const AlgebraElement& y) const;
};

LocalisedModule localise(const CellModule& M);

/// Certificate that F_n Delta_n(lambda) is Delta_{n-2}(lambda) (or zero):
/// checks dimension and an explicit intertwiner on generators.
void verify_localisation(const CellModule& M);

/// Signed restriction: the T_n^r eigenspace as a module over B_{n-1}^m.
struct SignedRestriction {
    std::shared_ptr<IdempotentImage> image;
    int n_low;
    /// labels of the filtration layers: submodule layer then quotient layer,
    /// each sorted by dominance with the maximal label last
    std::vector<MultiPartition> sub_labels;
    std::vector<MultiPartition> quot_labels;
    Mat action(const AlgebraElement& y) const;
};

SignedRestriction signed_res(int r, const CellModule& M);

/// Signed induction of a cell module, realised through localisation two
/// steps up: xi^r-ind_n Delta_n(lambda) = xi^{m-r}-res_{n+2} Delta_{n+2}(lambda)
/// (with m-r replaced by r in the unoriented calculus).
SignedRestriction signed_ind(int r, const MultiPartition& lambda, int n, const Params& p,
                             bool oriented = true);

/// Desk-scale dimension of the literal bimodule presentation of the induced
/// module ind_{B_n (x) B_1}^{B_{n+1}} (M boxtimes k T^r).
int induced_dimension_presentation(const CellModule& M, int r);

/// Desk-scale dimension of B_{n+2} e_n (x)_{B_n} M from its presentation.
int globalised_dimension_presentation(const CellModule& M);

}  // namespace cycbrauer
