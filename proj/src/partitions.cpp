#include "cycbrauer/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace cycbrauer {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i) {
        if (other.parts[i] > parts[i]) return false;
    }
    return true;
}

Partition Partition::conjugate() const {
    if (parts.empty()) return Partition();
    std::vector<int> c(parts[0], 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

bool Partition::operator<(const Partition& o) const {
    if (size() != o.size()) return size() < o.size();
    return parts < o.parts;
}

std::string Partition::to_string() const {
    if (parts.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    if (s.empty() || s == "-") return Partition();
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("malformed partition: " + s);
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> even_partitions(int N) {
    if (N < 0 || N % 2 != 0) throw std::invalid_argument("even_partitions: N must be even and nonnegative");
    std::vector<Partition> out;
    for (const auto& p : partitions_of(N / 2)) {
        std::vector<int> doubled(p.parts);
        for (auto& x : doubled) x *= 2;
        out.push_back(Partition(std::move(doubled)));
    }
    return out;
}

mpz_class standard_tableaux_count(const Partition& lambda) {
    int n = lambda.size();
    if (n == 0) return 1;
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), n);
    Partition conj = lambda.conjugate();
    mpz_class den(1);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts[i]; ++j) {
            int hook = (lambda.parts[i] - j - 1) + (conj.parts[j] - i - 1) + 1;
            den *= hook;
        }
    return num / den;
}

long lr_coeff(const Partition& nu, const Partition& lambda, const Partition& tau) {
    if (nu.size() != lambda.size() + tau.size()) return 0;
    if (!nu.contains(lambda)) return 0;
    if (tau.empty()) return 1;

    // Cells of nu/lambda in reading order: rows top to bottom, right to left
    // within a row. The lattice condition is checked prefix-wise in this order.
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int i = 0; i < nu.length(); ++i)
        for (int j = nu.parts[i] - 1; j >= lambda.part(i); --j) cells.push_back({i, j});

    int k = tau.length();
    std::vector<int> remaining(tau.parts.begin(), tau.parts.end());
    std::vector<int> placed(k, 0);
    // filled values by grid position, 0 = empty
    int maxrow = nu.length();
    int maxcol = nu.parts.empty() ? 0 : nu.parts[0];
    std::vector<std::vector<int>> grid(maxrow, std::vector<int>(maxcol, 0));

    long count = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= k; ++v) {
            if (remaining[v - 1] == 0) continue;
            // lattice word: after placing v, #v <= #(v-1)
            if (v > 1 && placed[v - 1] + 1 > placed[v - 2]) continue;
            // row weakly increasing: right neighbour already filled in reading order
            if (c + 1 < nu.parts[r] && grid[r][c + 1] != 0 && v > grid[r][c + 1]) continue;
            // column strictly increasing: cell above filled in an earlier row
            if (r > 0 && c < nu.parts[r - 1] && grid[r - 1][c] != 0 && v <= grid[r - 1][c]) continue;
            grid[r][c] = v;
            --remaining[v - 1];
            ++placed[v - 1];
            rec(idx + 1);
            grid[r][c] = 0;
            ++remaining[v - 1];
            --placed[v - 1];
        }
    };
    rec(0);
    return count;
}

int MultiPartition::size() const {
    int s = 0;
    for (const auto& p : components) s += p.size();
    return s;
}

std::vector<int> MultiPartition::component_sizes() const {
    std::vector<int> s;
    s.reserve(components.size());
    for (const auto& p : components) s.push_back(p.size());
    return s;
}

bool MultiPartition::contains(const MultiPartition& other) const {
    if (m() != other.m()) throw std::invalid_argument("multipartition level mismatch");
    for (int i = 0; i < m(); ++i) {
        if (!components[i].contains(other.components[i])) return false;
    }
    return true;
}

bool MultiPartition::operator<(const MultiPartition& o) const {
    if (size() != o.size()) return size() < o.size();
    return components < o.components;
}

std::string MultiPartition::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < m(); ++i) {
        if (i) os << "|";
        os << components[i].to_string();
    }
    return os.str();
}

MultiPartition MultiPartition::parse(const std::string& s, int m) {
    std::vector<Partition> comps;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '|')) comps.push_back(Partition::parse(tok));
    if (static_cast<int>(comps.size()) != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " components in: " + s);
    return MultiPartition(std::move(comps));
}

SignedBoxes boxes(const MultiPartition& lambda) {
    int m = lambda.m();
    SignedBoxes out;
    out.removable.resize(m);
    out.addable.resize(m);
    for (int r = 0; r < m; ++r) {
        const Partition& p = lambda.components[r];
        int len = p.length();
        for (int i = 0; i < len; ++i) {
            if (i + 1 == len || p.parts[i] > p.parts[i + 1])
                out.removable[r].push_back({r, i + 1, p.parts[i]});
            if (i == 0 || p.parts[i - 1] > p.parts[i])
                out.addable[r].push_back({r, i + 1, p.parts[i] + 1});
        }
        out.addable[r].push_back({r, len + 1, 1});
    }
    return out;
}

MultiPartition remove_box(const MultiPartition& lambda, const Box& b) {
    MultiPartition out = lambda;
    std::vector<int> parts = out.components[b.component].parts;
    if (b.row < 1 || b.row > static_cast<int>(parts.size()) || parts[b.row - 1] != b.col)
        throw std::invalid_argument("box is not removable");
    if (--parts[b.row - 1] == 0) parts.erase(parts.begin() + (b.row - 1));
    out.components[b.component] = Partition(std::move(parts));
    return out;
}

MultiPartition add_box(const MultiPartition& lambda, const Box& b) {
    MultiPartition out = lambda;
    std::vector<int> parts = out.components[b.component].parts;
    if (b.row == static_cast<int>(parts.size()) + 1) {
        if (b.col != 1) throw std::invalid_argument("box is not addable");
        parts.push_back(1);
    } else {
        if (b.row < 1 || b.row > static_cast<int>(parts.size()) || parts[b.row - 1] + 1 != b.col)
            throw std::invalid_argument("box is not addable");
        ++parts[b.row - 1];
    }
    out.components[b.component] = Partition(std::move(parts));
    return out;
}

bool dominance_leq(const MultiPartition& mu, const MultiPartition& lambda) {
    if (mu.m() != lambda.m()) throw std::invalid_argument("multipartition level mismatch");
    if (mu.size() != lambda.size())
        throw std::invalid_argument("dominance compares m-partitions of equal size");
    int m = mu.m();
    auto lam_sizes = lambda.component_sizes();
    auto mu_sizes = mu.component_sizes();
    int lam_prefix = 0, mu_prefix = 0;
    for (int j = 0; j < m; ++j) {
        const Partition& lj = lambda.components[j];
        const Partition& mj = mu.components[j];
        int maxk = std::max(lj.length(), mj.length());
        int lsum = lam_prefix, msum = mu_prefix;
        for (int k = 0; k <= maxk; ++k) {
            if (k > 0) {
                lsum += lj.part(k - 1);
                msum += mj.part(k - 1);
            }
            if (lsum < msum) return false;
        }
        lam_prefix += lam_sizes[j];
        mu_prefix += mu_sizes[j];
    }
    return true;
}

bool extended_dominance_leq(const MultiPartition& mu, const MultiPartition& lambda) {
    if (mu.m() != lambda.m()) throw std::invalid_argument("multipartition level mismatch");
    if (lambda.size() != mu.size()) return lambda.size() > mu.size();
    return dominance_leq(mu, lambda);
}

}  // namespace cycbrauer
