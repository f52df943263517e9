#pragma once

#include <optional>
#include <vector>

#include "cycbrauer/cyclotomic.hpp"

namespace cycbrauer {

/// Dense matrix over Q(xi_m). All arithmetic is exact.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, int m)
        : rows_(rows), cols_(cols), m_(m), a_(static_cast<size_t>(rows) * cols, Cyclotomic::zero(m)) {}

    static Mat identity(int n, int m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int order() const { return m_; }

    Cyclotomic& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Cyclotomic& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Cyclotomic& c) const;
    bool operator==(const Mat& o) const;

    Cyclotomic trace() const;
    bool is_zero() const;

    /// Kronecker product, row-major index pairing: (i1,i2) -> i1*o.rows+i2.
    Mat kronecker(const Mat& o) const;

    std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const;

private:
    int rows_, cols_;
    int m_ = 1;
    std::vector<Cyclotomic> a_;
};

/// Incremental row span with exact Gaussian elimination. Tracks, for each
/// accepted vector, nothing beyond the echelon form; use express() to write
/// further vectors over the accepted generators.
class LinearSpan {
public:
    explicit LinearSpan(int m) : m_(m) {}

    /// Adds v to the span. Returns true if the dimension grew.
    bool add(const std::vector<Cyclotomic>& v);

    /// Writes v as a combination of the vectors previously accepted by add()
    /// (in acceptance order); nullopt if v is outside the span.
    std::optional<std::vector<Cyclotomic>> express(const std::vector<Cyclotomic>& v) const;

    bool contains(const std::vector<Cyclotomic>& v) const;

    int dim() const { return static_cast<int>(rows_.size()); }

private:
    struct Row {
        std::vector<Cyclotomic> v;      // echelon row
        std::vector<Cyclotomic> combo;  // v as combination of accepted inputs
        size_t pivot;
    };
    int m_;
    std::vector<Row> rows_;
    int accepted_ = 0;
};

/// Basis of the right kernel {x : A x = 0}.
std::vector<std::vector<Cyclotomic>> nullspace(const Mat& a);

/// Solves A x = b exactly; nullopt if inconsistent. Returns one solution.
std::optional<std::vector<Cyclotomic>> solve(const Mat& a, const std::vector<Cyclotomic>& b);

int rank(const Mat& a);

}  // namespace cycbrauer
