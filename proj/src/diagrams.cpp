#include "cycbrauer/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cycbrauer {

namespace {

int norm_label(int label, int m) { return ((label % m) + m) % m; }

// Anchor order: through strands run north -> south, arcs left -> right.
bool in_anchor_order(int n, int u, int v) {
    bool un = u < n, vn = v < n;
    if (un != vn) return un;  // through: north first
    return u < v;
}

}  // namespace

MDiagram MDiagram::canonicalize(int m, int n, const std::vector<RawStrand>& raw, bool oriented) {
    if (m < 1 || n < 0) throw std::invalid_argument("bad diagram parameters");
    if (static_cast<int>(raw.size()) != n) throw std::invalid_argument("diagram needs exactly n strands");
    std::vector<int> seen(2 * n, 0);
    MDiagram d;
    d.m_ = m;
    d.n_ = n;
    for (const auto& s : raw) {
        if (s.from < 0 || s.from >= 2 * n || s.to < 0 || s.to >= 2 * n || s.from == s.to)
            throw std::invalid_argument("strand endpoint out of range");
        ++seen[s.from];
        ++seen[s.to];
        int a = s.from, b = s.to, label = s.label;
        if (!in_anchor_order(n, a, b)) {
            std::swap(a, b);
            if (oriented) label = -label;
        }
        d.strands_.push_back({a, b, norm_label(label, m)});
    }
    for (int i = 0; i < 2 * n; ++i) {
        if (seen[i] != 1) throw std::invalid_argument("strands do not form a perfect matching");
    }
    std::sort(d.strands_.begin(), d.strands_.end());
    return d;
}

MDiagram MDiagram::identity(int m, int n) {
    std::vector<RawStrand> raw;
    for (int i = 0; i < n; ++i) raw.push_back({i, n + i, 0});
    return canonicalize(m, n, raw);
}

const Strand& MDiagram::strand_at(int node) const {
    for (const auto& s : strands_) {
        if (s.a == node || s.b == node) return s;
    }
    throw std::invalid_argument("node out of range");
}

int MDiagram::through_count() const {
    int c = 0;
    for (const auto& s : strands_) {
        if (is_north(s.a) && !is_north(s.b)) ++c;
    }
    return c;
}

bool MDiagram::operator<(const MDiagram& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (m_ != o.m_) return m_ < o.m_;
    return strands_ < o.strands_;
}

std::string MDiagram::to_string() const {
    auto node_name = [this](int v) {
        return v < n_ ? std::to_string(v + 1) : std::to_string(v - n_ + 1) + "bar";
    };
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < strands_.size(); ++i) {
        if (i) os << ", ";
        os << node_name(strands_[i].a) << "-" << node_name(strands_[i].b);
        if (strands_[i].label) os << ":" << strands_[i].label;
    }
    os << "}";
    return os.str();
}

MDiagram transposition_diagram(int m, int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("bad node indices");
    std::vector<RawStrand> raw;
    for (int k = 1; k <= n; ++k) {
        int target = k == i ? j : (k == j ? i : k);
        raw.push_back({k - 1, n + target - 1, 0});
    }
    return MDiagram::canonicalize(m, n, raw);
}

MDiagram label_diagram(int m, int n, int i, int r) {
    if (i < 1 || i > n) throw std::invalid_argument("bad node index");
    std::vector<RawStrand> raw;
    for (int k = 1; k <= n; ++k) raw.push_back({k - 1, n + k - 1, k == i ? r : 0});
    return MDiagram::canonicalize(m, n, raw);
}

MDiagram arc_diagram(int m, int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("bad node indices");
    std::vector<RawStrand> raw;
    raw.push_back({i - 1, j - 1, 0});
    raw.push_back({n + i - 1, n + j - 1, 0});
    for (int k = 1; k <= n; ++k) {
        if (k != i && k != j) raw.push_back({k - 1, n + k - 1, 0});
    }
    return MDiagram::canonicalize(m, n, raw);
}

MDiagram embed_diagram(const MDiagram& x) {
    int n = x.n();
    std::vector<RawStrand> raw;
    for (const auto& s : x.strands()) {
        int a = s.a < n ? s.a : s.a + 1;
        int b = s.b < n ? s.b : s.b + 1;
        raw.push_back({a, b, s.label});
    }
    raw.push_back({n, 2 * n + 1, 0});
    return MDiagram::canonicalize(x.m(), n + 1, raw);
}

std::vector<MDiagram> enumerate_basis(int m, int n) {
    if (m < 1 || n < 0) throw std::invalid_argument("bad basis parameters");
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(2 * n, false);
    std::function<void()> rec = [&]() {
        int a = 0;
        while (a < 2 * n && used[a]) ++a;
        if (a == 2 * n) {
            matchings.push_back(cur);
            return;
        }
        used[a] = true;
        for (int b = a + 1; b < 2 * n; ++b) {
            if (used[b]) continue;
            used[b] = true;
            cur.emplace_back(a, b);
            rec();
            cur.pop_back();
            used[b] = false;
        }
        used[a] = false;
    };
    rec();

    std::vector<MDiagram> out;
    for (const auto& match : matchings) {
        std::vector<int> labels(n, 0);
        while (true) {
            std::vector<RawStrand> raw;
            for (int s = 0; s < n; ++s) raw.push_back({match[s].first, match[s].second, labels[s]});
            out.push_back(MDiagram::canonicalize(m, n, raw));
            int pos = n - 1;
            while (pos >= 0 && labels[pos] == m - 1) labels[pos--] = 0;
            if (pos < 0) break;
            ++labels[pos];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

AlgebraElement::AlgebraElement(int m, int n, int field_order) : m_(m), n_(n), fm_(field_order) {}

AlgebraElement AlgebraElement::from_diagram(const MDiagram& d, int field_order) {
    AlgebraElement e(d.m(), d.n(), field_order);
    e.add_term(d, Cyclotomic::one(field_order));
    return e;
}

AlgebraElement AlgebraElement::unit(int m, int n, int field_order) {
    return from_diagram(MDiagram::identity(m, n), field_order);
}

void AlgebraElement::add_term(const MDiagram& d, const Cyclotomic& c) {
    if (d.m() != m_ || d.n() != n_) throw std::invalid_argument("diagram shape mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Cyclotomic AlgebraElement::coefficient(const MDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Cyclotomic::zero(fm_) : it->second;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r(*this);
    for (const auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r(*this);
    for (const auto& [d, c] : o.terms_) r.add_term(d, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Cyclotomic& c) const {
    AlgebraElement r(m_, n_, fm_);
    if (c.is_zero()) return r;
    for (const auto& [d, x] : terms_) r.add_term(d, x * c);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return m_ == o.m_ && n_ == o.n_ && terms_ == o.terms_;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")*" << d.to_string();
        first = false;
    }
    return os.str();
}

DiagramProduct multiply_diagrams(const MDiagram& x, const MDiagram& y, const Params& p,
                                 bool oriented) {
    int n = x.n(), m = x.m();
    if (y.n() != n || y.m() != m) throw std::invalid_argument("diagram size/modulus mismatch");
    if (p.m != m) throw std::invalid_argument("parameter length must equal the label modulus");
    int fm = p.field_order();

    // Node spaces: x-north 0..n-1, middle 0..n-1 (x south = y north), y-south
    // 0..n-1. A walk alternates x-strands and y-strands through the middle.
    enum Side { IN_X, IN_Y };
    std::vector<bool> x_done(n, false), y_done(n, false);  // by strand index
    auto strand_index = [](const MDiagram& d, int node) {
        for (size_t i = 0; i < d.strands().size(); ++i) {
            const auto& s = d.strands()[i];
            if (s.a == node || s.b == node) return static_cast<int>(i);
        }
        throw std::logic_error("missing strand");
    };

    // Walks one strand from `node` in the given diagram; returns (other
    // endpoint, signed label contribution).
    auto step = [&](const MDiagram& d, int node, std::vector<bool>& done) {
        int idx = strand_index(d, node);
        done[idx] = true;
        const Strand& s = d.strands()[idx];
        int other = s.a == node ? s.b : s.a;
        int contrib = (!oriented || s.a == node) ? s.label : -s.label;
        return std::pair<int, int>(other, contrib);
    };

    std::vector<RawStrand> raw;
    // Trace from the boundaries. Middle node i is x-node n+i and y-node i.
    // The composite reuses x's northern indices 0..n-1 and y's southern
    // indices n..2n-1, so trace endpoints need no re-encoding.
    auto trace = [&](int start, Side side) {
        int label = 0;
        Side cur = side;
        int node = start;  // in x node space when IN_X, y node space when IN_Y
        while (true) {
            if (cur == IN_X) {
                auto [other, c] = step(x, node, x_done);
                label += c;
                if (other < n) return std::pair<int, int>(other, label);  // composite north
                node = other - n;
                cur = IN_Y;
            } else {
                auto [other, c] = step(y, node, y_done);
                label += c;
                if (other >= n) return std::pair<int, int>(other, label);  // composite south
                node = n + other;
                cur = IN_X;
            }
        }
    };

    for (int a = 0; a < n; ++a) {
        if (x_done[strand_index(x, a)]) continue;
        auto [end, label] = trace(a, IN_X);
        raw.push_back({a, end, label});
    }
    for (int b = n; b < 2 * n; ++b) {
        if (y_done[strand_index(y, b)]) continue;
        auto [end, label] = trace(b, IN_Y);
        if (end < n) throw std::logic_error("southern trace ended at the northern boundary");
        raw.push_back({b, end, label});
    }

    // Remaining strands form closed loops through the middle. Each is read
    // from its leftmost middle node, moving downward (into y) first.
    std::vector<int> loop_labels;
    Cyclotomic coeff = Cyclotomic::one(fm);
    while (true) {
        int start = -1;
        for (int i = 0; i < n && start < 0; ++i) {
            int idx = strand_index(y, i);
            if (!y_done[idx] && !x_done[strand_index(x, n + i)]) start = i;
        }
        if (start < 0) break;
        int label = 0;
        int node = start;
        Side cur = IN_Y;
        while (true) {
            if (cur == IN_Y) {
                auto [other, c] = step(y, node, y_done);
                label += c;
                if (other >= n) throw std::logic_error("loop left the middle boundary");
                node = other;  // y-north index = middle index
                cur = IN_X;
            } else {
                auto [other, c] = step(x, n + node, x_done);
                label += c;
                if (other < n) throw std::logic_error("loop left the middle boundary");
                node = other - n;
                cur = IN_Y;
            }
            if (node == start && cur == IN_Y) break;
        }
        int ell = norm_label(label, m);
        loop_labels.push_back(ell);
        coeff *= p.delta[ell];
    }

    DiagramProduct out{coeff, MDiagram::canonicalize(m, n, raw, oriented), std::move(loop_labels)};
    return out;
}

namespace {
AlgebraElement multiply_impl(const AlgebraElement& x, const AlgebraElement& y, const Params& p,
                             bool oriented) {
    if (x.m() != y.m() || x.n() != y.n())
        throw std::invalid_argument("algebra element size/modulus mismatch");
    AlgebraElement out(x.m(), x.n(), x.field_order());
    for (const auto& [dx, cx] : x.terms()) {
        for (const auto& [dy, cy] : y.terms()) {
            DiagramProduct prod = multiply_diagrams(dx, dy, p, oriented);
            Cyclotomic c = cx * cy * prod.coeff;
            out.add_term(prod.diagram, c);
        }
    }
    return out;
}
}  // namespace

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, const Params& p) {
    return multiply_impl(x, y, p, true);
}

AlgebraElement unoriented_multiply(const AlgebraElement& x, const AlgebraElement& y,
                                   const Params& p) {
    return multiply_impl(x, y, p, false);
}

MDiagram star_diagram(const MDiagram& d, bool oriented) {
    // Reflection through the horizontal axis, transporting each strand's
    // orientation along with it: through strands keep their label while arcs
    // pick up the inverse. (Plain reflection without the orientation
    // transport fails the anti-automorphism law whenever a removed loop has
    // label different from its inverse.)
    int n = d.n();
    std::vector<RawStrand> raw;
    for (const auto& s : d.strands()) {
        bool a_north = d.is_north(s.a), b_north = d.is_north(s.b);
        if (a_north && !b_north) {
            raw.push_back({s.b - n, s.a + n, s.label});  // through a -> b-bar becomes b -> a-bar
        } else if (a_north && b_north) {
            raw.push_back({s.a + n, s.b + n, oriented ? -s.label : s.label});  // north -> south arc
        } else {
            raw.push_back({s.a - n, s.b - n, oriented ? -s.label : s.label});  // south -> north arc
        }
    }
    return MDiagram::canonicalize(d.m(), n, raw, oriented);
}

AlgebraElement star(const AlgebraElement& x, bool oriented) {
    AlgebraElement out(x.m(), x.n(), x.field_order());
    for (const auto& [d, c] : x.terms()) out.add_term(star_diagram(d, oriented), c);
    return out;
}

AlgebraElement gen_t(int m, int n, int fm, int i, int j) {
    return AlgebraElement::from_diagram(transposition_diagram(m, n, i, j), fm);
}

AlgebraElement gen_t_label(int m, int n, int fm, int i, int r) {
    return AlgebraElement::from_diagram(label_diagram(m, n, i, r), fm);
}

AlgebraElement gen_e(int m, int n, int fm, int i, int j) {
    return AlgebraElement::from_diagram(arc_diagram(m, n, i, j), fm);
}

AlgebraElement corner_idempotent(int n, const Params& p) {
    int m = p.m;
    int fm = p.field_order();
    if (n < 2) throw std::invalid_argument("corner idempotent needs n >= 2");
    if (!p.all_zero()) {
        int r = 0;
        while (p.delta[r].is_zero()) ++r;
        // (1/delta_r) t_{n-1}^r e_{n-1,n}: a single diagram with the northern
        // arc labelled r.
        std::vector<RawStrand> raw;
        raw.push_back({n - 2, n - 1, r});
        raw.push_back({2 * n - 2, 2 * n - 1, 0});
        for (int k = 1; k <= n - 2; ++k) raw.push_back({k - 1, n + k - 1, 0});
        AlgebraElement e(m, n, fm);
        e.add_term(MDiagram::canonicalize(m, n, raw), p.delta[r].inverse());
        return e;
    }
    if (n < 3) throw std::invalid_argument("corner idempotent needs n >= 3 when delta = 0");
    std::vector<RawStrand> raw;
    for (int i = 1; i <= n - 3; ++i) raw.push_back({i - 1, n + i - 1, 0});
    raw.push_back({n - 3, 2 * n - 1, 0});      // n-2 -> n-bar
    raw.push_back({n - 2, n - 1, 0});          // arc {n-1, n}
    raw.push_back({2 * n - 3, 2 * n - 2, 0});  // arc {(n-2)-bar, (n-1)-bar}
    return AlgebraElement::from_diagram(MDiagram::canonicalize(m, n, raw), fm);
}

}  // namespace cycbrauer
