#include "cycbrauer/wreath.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cycbrauer {

WreathElement WreathElement::identity(int m, int n) {
    WreathElement g;
    g.m = m;
    g.labels.assign(n, 0);
    g.perm.resize(n);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    return g;
}

WreathElement WreathElement::mul(const WreathElement& o) const {
    if (m != o.m || n() != o.n()) throw std::invalid_argument("wreath element mismatch");
    WreathElement r;
    r.m = m;
    r.labels.resize(n());
    r.perm.resize(n());
    for (int i = 0; i < n(); ++i) {
        r.perm[i] = o.perm[perm[i]];
        r.labels[i] = (labels[i] + o.labels[perm[i]]) % m;
    }
    return r;
}

WreathElement WreathElement::inverse() const {
    WreathElement r;
    r.m = m;
    r.labels.resize(n());
    r.perm.resize(n());
    for (int i = 0; i < n(); ++i) {
        r.perm[perm[i]] = i;
        r.labels[perm[i]] = (m - labels[i]) % m;
    }
    return r;
}

MDiagram WreathElement::to_diagram() const {
    std::vector<RawStrand> raw;
    for (int i = 0; i < n(); ++i) raw.push_back({i, n() + perm[i], labels[i]});
    return MDiagram::canonicalize(m, n(), raw);
}

WreathElement WreathElement::from_diagram(const MDiagram& d) {
    WreathElement g;
    g.m = d.m();
    g.labels.assign(d.n(), 0);
    g.perm.assign(d.n(), -1);
    for (const auto& s : d.strands()) {
        if (!d.is_north(s.a) || d.is_north(s.b))
            throw std::invalid_argument("diagram has arcs; not a wreath element");
        g.perm[s.a] = s.b - d.n();
        g.labels[s.a] = s.label;
    }
    return g;
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& lambda) {
    int n = lambda.size();
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> tab(lambda.length());
    // place values 1..n one at a time at the next free cell of some row
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            out.push_back(tab);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            int c = static_cast<int>(tab[r].size());
            if (c >= lambda.parts[r]) continue;
            if (r > 0 && static_cast<int>(tab[r - 1].size()) <= c) continue;
            tab[r].push_back(v);
            rec(v + 1);
            tab[r].pop_back();
        }
    };
    rec(1);
    return out;
}

namespace {

// Tabloid: the row number of each value 1..n (0-based rows).
std::vector<int> tabloid_of(const std::vector<std::vector<int>>& tab, int n) {
    std::vector<int> row(n, -1);
    for (int r = 0; r < static_cast<int>(tab.size()); ++r)
        for (int v : tab[r]) row[v - 1] = r;
    return row;
}

using SparseVec = std::map<int, long>;

}  // namespace

SymmetricSpecht::SymmetricSpecht(Partition lambda, int field_order)
    : lambda_(std::move(lambda)), n_(lambda_.size()), fm_(field_order) {
    auto tableaux = standard_tableaux(lambda_);
    dim_ = static_cast<int>(tableaux.size());

    std::map<std::vector<int>, int> tabloid_index;
    std::vector<std::vector<int>> tabloid_list;
    auto index_of = [&](const std::vector<int>& t) {
        auto it = tabloid_index.find(t);
        if (it == tabloid_index.end()) {
            it = tabloid_index.emplace(t, static_cast<int>(tabloid_list.size())).first;
            tabloid_list.push_back(t);
        }
        return it->second;
    };

    // Polytabloid of T: signed sum over the column stabilizer.
    auto polytabloid = [&](const std::vector<std::vector<int>>& tab) {
        int cols = lambda_.length() ? lambda_.parts[0] : 0;
        std::vector<std::vector<int>> columns(cols);
        for (int r = 0; r < static_cast<int>(tab.size()); ++r)
            for (int c = 0; c < static_cast<int>(tab[r].size()); ++c)
                columns[c].push_back(tab[r][c]);
        SparseVec v;
        std::vector<std::vector<int>> perms(cols);
        std::function<void(int, int)> rec = [&](int col, int sign) {
            if (col == cols) {
                std::vector<int> sub(n_ + 1);
                for (int c = 0; c < cols; ++c)
                    for (size_t k = 0; k < columns[c].size(); ++k)
                        sub[columns[c][k]] = perms[c][k];
                std::vector<std::vector<int>> image(tab.size());
                for (size_t r = 0; r < tab.size(); ++r)
                    for (int x : tab[r]) image[r].push_back(sub[x]);
                v[index_of(tabloid_of(image, n_))] += sign;
                return;
            }
            std::vector<int> p = columns[col];
            std::sort(p.begin(), p.end());
            do {
                int inv = 0;
                for (size_t a = 0; a < p.size(); ++a)
                    for (size_t b = a + 1; b < p.size(); ++b)
                        if (p[a] > p[b]) ++inv;
                perms[col] = p;
                rec(col + 1, sign * (inv % 2 ? -1 : 1));
            } while (std::next_permutation(p.begin(), p.end()));
            perms[col].clear();
        };
        rec(0, 1);
        return v;
    };

    std::vector<SparseVec> basis_vecs;
    basis_vecs.reserve(dim_);
    for (const auto& tab : tableaux) basis_vecs.push_back(polytabloid(tab));

    // tabloids reachable by one adjacent swap may be new; register them so the
    // dense coordinate space is fixed before elimination
    for (size_t idx = 0; idx < tabloid_list.size(); ++idx) {
        for (int i = 0; i + 1 < n_; ++i) {
            auto s = tabloid_list[idx];
            std::swap(s[i], s[i + 1]);
            index_of(s);
        }
    }
    int ambient = static_cast<int>(tabloid_list.size());

    LinearSpan span(fm_);
    auto densify = [&](const SparseVec& v) {
        std::vector<Cyclotomic> w(ambient, Cyclotomic::zero(fm_));
        for (const auto& [idx, c] : v) w[idx] = Cyclotomic::from_rational(fm_, Rational(c));
        return w;
    };
    for (const auto& v : basis_vecs) {
        if (!span.add(densify(v)))
            throw std::logic_error("standard polytabloids must be independent");
    }

    for (int i = 1; i <= n_ - 1; ++i) {
        Mat mat(dim_, dim_, fm_);
        for (int col = 0; col < dim_; ++col) {
            SparseVec moved;
            for (const auto& [idx, c] : basis_vecs[col]) {
                auto t = tabloid_list[idx];
                std::swap(t[i - 1], t[i]);
                moved[tabloid_index.at(t)] += c;
            }
            auto coeffs = span.express(densify(moved));
            if (!coeffs) throw std::logic_error("Specht module not closed under the action");
            for (int row = 0; row < dim_; ++row) mat.at(row, col) = (*coeffs)[row];
        }
        adjacent_.push_back(std::move(mat));
    }
}

const Mat& SymmetricSpecht::adjacent(int i) const {
    if (i < 1 || i >= n_) throw std::invalid_argument("adjacent transposition out of range");
    return adjacent_[i - 1];
}

Mat SymmetricSpecht::permutation_matrix(const std::vector<int>& images) const {
    if (static_cast<int>(images.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    // peel descents: appending s_i strips one inversion, so p = s_{i_k}...s_{i_1}
    std::vector<int> q = images;
    std::vector<int> word;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i + 1 < n_; ++i) {
            if (q[i] > q[i + 1]) {
                std::swap(q[i], q[i + 1]);
                word.push_back(i + 1);
                progress = true;
            }
        }
    }
    Mat out = Mat::identity(dim_, fm_);
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = out * adjacent(*it);
    return out;
}

namespace {

// Minimal coset representative of a block function: positions with block r,
// in increasing order, map onto the block-r slots in increasing order.
std::vector<int> coset_perm(const std::vector<int>& beta, const std::vector<int>& offsets) {
    int n = static_cast<int>(beta.size());
    std::vector<int> next = offsets;
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = next[beta[i]]++;
    return sigma;
}

}  // namespace

WreathSpecht::WreathSpecht(MultiPartition lambda, int field_order)
    : lambda_(std::move(lambda)), n_(lambda_.size()), m_(lambda_.m()), fm_(field_order) {
    if (fm_ != m_) throw std::invalid_argument("wreath Specht modules live over Q(xi_m)");
    tuple_count_ = 1;
    for (int r = 0; r < m_; ++r) {
        factors_.emplace_back(lambda_.components[r], fm_);
        factor_dims_.push_back(factors_.back().dim());
        tuple_count_ *= factors_.back().dim();
    }
    auto sizes = lambda_.component_sizes();
    std::vector<int> cur(n_);
    std::vector<int> left = sizes;
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n_) {
            cosets_.push_back(cur);
            return;
        }
        for (int r = 0; r < m_; ++r) {
            if (left[r] == 0) continue;
            --left[r];
            cur[pos] = r;
            rec(pos + 1);
            ++left[r];
        }
    };
    rec(0);
    std::sort(cosets_.begin(), cosets_.end());
    for (size_t c = 0; c < cosets_.size(); ++c) coset_index_[cosets_[c]] = static_cast<int>(c);
    dim_ = static_cast<int>(cosets_.size()) * tuple_count_;
}

int WreathSpecht::basis_index(int coset, const std::vector<int>& tuple) const {
    int t = 0;
    for (int r = 0; r < m_; ++r) t = t * factor_dims_[r] + tuple[r];
    return coset * tuple_count_ + t;
}

Mat WreathSpecht::action(const WreathElement& g) const {
    if (g.n() != n_ || g.m != m_) throw std::invalid_argument("wreath element mismatch");
    auto sizes = lambda_.component_sizes();
    std::vector<int> offsets(m_, 0);
    for (int r = 1; r < m_; ++r) offsets[r] = offsets[r - 1] + sizes[r - 1];

    Mat out(dim_, dim_, fm_);
    for (size_t c = 0; c < cosets_.size(); ++c) {
        const auto& beta = cosets_[c];
        std::vector<int> sigma_c = coset_perm(beta, offsets);
        std::vector<int> beta2(n_);
        for (int i = 0; i < n_; ++i) beta2[i] = beta[g.perm[i]];
        std::vector<int> sigma2 = coset_perm(beta2, offsets);
        int c2 = coset_index_.at(beta2);
        std::vector<int> sigma2_inv(n_);
        for (int i = 0; i < n_; ++i) sigma2_inv[sigma2[i]] = i;
        // h = g_{c2}^{-1} (g g_c): tau(i) = sigma_c(g.perm(sigma2^{-1}(i))),
        // label at slot i pulled back along sigma2^{-1}; t_j twists by
        // xi^{-r} on the component-r tensor factor
        std::vector<int> tau(n_);
        long twist = 0;
        for (int i = 0; i < n_; ++i) {
            int src = sigma2_inv[i];
            tau[i] = sigma_c[g.perm[src]];
            twist += static_cast<long>(beta2[src]) * g.labels[src];
        }
        Cyclotomic scalar = Cyclotomic::xi_pow(m_, -twist);
        Mat kron(1, 1, fm_);
        kron.at(0, 0) = scalar;
        for (int r = 0; r < m_; ++r) {
            int sz = sizes[r];
            std::vector<int> tau_r(sz), tau_r_inv(sz);
            for (int a = 0; a < sz; ++a) tau_r[a] = tau[offsets[r] + a] - offsets[r];
            for (int a = 0; a < sz; ++a) tau_r_inv[tau_r[a]] = a;
            kron = kron.kronecker(factors_[r].permutation_matrix(tau_r_inv));
        }
        for (int tcol = 0; tcol < tuple_count_; ++tcol)
            for (int trow = 0; trow < tuple_count_; ++trow) {
                const Cyclotomic& v = kron.at(trow, tcol);
                if (v.is_zero()) continue;
                out.at(c2 * tuple_count_ + trow, static_cast<int>(c) * tuple_count_ + tcol) = v;
            }
    }
    return out;
}

Mat WreathSpecht::action(const AlgebraElement& x) const {
    Mat out(dim_, dim_, fm_);
    for (const auto& [d, coeff] : x.terms()) {
        out = out + action(WreathElement::from_diagram(d)).scaled(coeff);
    }
    return out;
}

AlgebraElement idempotent_T(int m, int n, int i, int r) {
    if (i < 1 || i > n || r < 0 || r >= m)
        throw std::invalid_argument("idempotent index out of range");
    AlgebraElement out(m, n, m);
    Rational inv_m(1, m);
    for (int q = 0; q < m; ++q) {
        Cyclotomic coeff = Cyclotomic::xi_pow(m, static_cast<long>(q) * r).scaled(inv_m);
        out.add_term(label_diagram(m, n, i, q), coeff);
    }
    return out;
}

std::vector<int> omega_blocks(const MComposition& omega) {
    std::vector<int> blocks;
    for (int r = 0; r < omega.m(); ++r)
        for (int k = 0; k < omega.entries[r]; ++k) blocks.push_back(r);
    return blocks;
}

AlgebraElement pi_omega(const MComposition& omega) {
    int m = omega.m();
    int n = omega.total();
    double size = 1;
    for (int i = 0; i < n; ++i) size *= m;
    if (size > 600000) throw scale_error("pi_omega expansion exceeds the desk-scale bound");
    auto blocks = omega_blocks(omega);

    AlgebraElement out(m, n, m);
    Rational inv(1, 1);
    for (int i = 0; i < n; ++i) inv /= m;
    std::vector<int> q(n, 0);
    while (true) {
        long phase = 0;
        for (int i = 0; i < n; ++i) phase += static_cast<long>(q[i]) * blocks[i];
        std::vector<RawStrand> raw;
        for (int i = 0; i < n; ++i) raw.push_back({i, n + i, q[i]});
        out.add_term(MDiagram::canonicalize(m, n, raw), Cyclotomic::xi_pow(m, phase).scaled(inv));
        int pos = n - 1;
        while (pos >= 0 && q[pos] == m - 1) q[pos--] = 0;
        if (pos < 0) break;
        ++q[pos];
    }
    return out;
}

TruncatedSpecht truncate_specht(const MComposition& omega, const MultiPartition& lambda) {
    if (omega.m() != lambda.m()) throw std::invalid_argument("level mismatch");
    if (omega.total() != lambda.size())
        throw std::invalid_argument("omega must be a composition of the box count");
    TruncatedSpecht out;
    if (MComposition(lambda.component_sizes()) != omega) {
        out.dim = 0;
        return out;
    }
    int m = lambda.m();
    WreathSpecht spec(lambda, m);
    auto beta = omega_blocks(omega);
    int c0 = -1;
    for (size_t c = 0; c < spec.cosets().size(); ++c)
        if (spec.cosets()[c] == beta) c0 = static_cast<int>(c);
    if (c0 < 0) throw std::logic_error("surviving coset missing");

    int tuples = 1;
    for (int d : spec.factor_dims()) tuples *= d;
    out.dim = tuples;

    int n = omega.total();
    for (int i = 1; i < n; ++i) {
        if (omega.block_of(i) != omega.block_of(i + 1)) continue;
        WreathElement g = WreathElement::identity(m, n);
        std::swap(g.perm[i - 1], g.perm[i]);
        Mat full = spec.action(g);
        Mat sub(tuples, tuples, m);
        for (int a = 0; a < tuples; ++a)
            for (int b = 0; b < tuples; ++b)
                sub.at(a, b) = full.at(c0 * tuples + a, c0 * tuples + b);
        out.block_adjacents[i] = std::move(sub);
    }
    return out;
}

}  // namespace cycbrauer
