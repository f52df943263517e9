#include "cycbrauer/posets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cycbrauer {

MComposition::MComposition(std::vector<int> e) : entries(std::move(e)) {
    for (int x : entries)
        if (x < 0) throw std::invalid_argument("composition entries must be nonnegative");
}

int MComposition::total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

std::vector<int> MComposition::brackets() const {
    std::vector<int> b(entries.size());
    int s = 0;
    for (size_t i = 0; i < entries.size(); ++i) {
        s += entries[i];
        b[i] = s;
    }
    return b;
}

int MComposition::block_of(int i) const {
    if (i < 1 || i > total()) throw std::invalid_argument("node index out of range");
    int s = 0;
    for (size_t r = 0; r < entries.size(); ++r) {
        s += entries[r];
        if (i <= s) return static_cast<int>(r);
    }
    throw std::logic_error("block_of: unreachable");
}

std::string MComposition::to_string(const std::vector<int>& display) const {
    std::ostringstream os;
    os << "(";
    for (int k = 0; k < m(); ++k) {
        if (k) os << ",";
        os << entries[display.empty() ? k : display[k]];
    }
    os << ")";
    return os.str();
}

MComposition MComposition::parse(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
    std::vector<int> e;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) e.push_back(std::stoi(tok));
    if (e.empty()) throw std::invalid_argument("empty composition literal");
    return MComposition(std::move(e));
}

MComposition sizes_of(const MultiPartition& lambda) {
    return MComposition(lambda.component_sizes());
}

bool PosetSignature::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

int PosetSignature::sum() const { return std::accumulate(a.begin(), a.end(), 0); }

std::optional<PosetSignature> poset_leq(const MComposition& omega, const MComposition& omega2,
                                        PosetVariant variant) {
    int m = omega.m();
    if (m != omega2.m()) throw std::invalid_argument("composition length mismatch");
    if (variant == PosetVariant::unoriented) {
        PosetSignature sig;
        sig.a.resize(m);
        for (int r = 0; r < m; ++r) {
            int d = omega2.entries[r] - omega.entries[r];
            if (d < 0 || d % 2 != 0) return std::nullopt;
            sig.a[r] = d / 2;
        }
        return sig;
    }
    PosetSignature sig;
    sig.a.resize(m / 2 + 1, 0);
    for (int r = 0; r < m; ++r) {
        int d = omega2.entries[r] - omega.entries[r];
        if (d < 0) return std::nullopt;
        int rbar = (m - r) % m;
        if (r == rbar) {
            if (d % 2 != 0) return std::nullopt;
            sig.a[r == 0 ? 0 : m / 2] = d / 2;
        } else {
            int d2 = omega2.entries[rbar] - omega.entries[rbar];
            if (d != d2) return std::nullopt;
            if (r <= m / 2) sig.a[r] = d;
        }
    }
    return sig;
}

bool order_leq(const MultiPartition& lambda, const MultiPartition& mu, PosetVariant variant) {
    if (lambda.m() != mu.m()) throw std::invalid_argument("multipartition level mismatch");
    if (!mu.contains(lambda)) return false;
    return poset_leq(sizes_of(lambda), sizes_of(mu), variant).has_value();
}

std::vector<MComposition> mcompositions_of(int m, int total) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    std::vector<MComposition> out;
    std::vector<int> cur(m, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == m - 1) {
            cur[pos] = rem;
            out.push_back(MComposition(cur));
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, total);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiPartition> mpartitions_of(int m, int total) {
    std::vector<MultiPartition> out;
    for (const auto& comp : mcompositions_of(m, total)) {
        std::vector<std::vector<Partition>> choices(m);
        for (int r = 0; r < m; ++r) choices[r] = partitions_of(comp.entries[r]);
        std::vector<Partition> cur(m);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == m) {
                out.push_back(MultiPartition(cur));
                return;
            }
            for (const auto& p : choices[pos]) {
                cur[pos] = p;
                rec(pos + 1);
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiPartition> lambda_set(int m, int n) {
    std::vector<MultiPartition> out;
    for (int k = n; k >= 0; k -= 2) {
        auto part = mpartitions_of(m, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MComposition> lambda_abs(int m, int n) {
    std::vector<MComposition> out;
    for (int k = n; k >= 0; k -= 2) {
        auto comp = mcompositions_of(m, k);
        out.insert(out.end(), comp.begin(), comp.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiPartition> lambda_omega(const MComposition& omega, PosetVariant variant) {
    std::vector<MultiPartition> out;
    for (const auto& lam : lambda_set(omega.m(), omega.total())) {
        if (poset_leq(sizes_of(lam), omega, variant)) out.push_back(lam);
    }
    return out;
}

std::vector<MComposition> downset(const MComposition& omega, PosetVariant variant) {
    std::vector<MComposition> out;
    for (const auto& w : lambda_abs(omega.m(), omega.total())) {
        if (poset_leq(w, omega, variant)) out.push_back(w);
    }
    return out;
}

HasseDiagram hasse(const std::vector<MComposition>& vertices, PosetVariant variant) {
    HasseDiagram d;
    d.vertices = vertices;
    std::sort(d.vertices.begin(), d.vertices.end());
    int n = static_cast<int>(d.vertices.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            leq[i][j] = poset_leq(d.vertices[i], d.vertices[j], variant).has_value();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq[i][j]) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k) {
                if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
            }
            if (!cover) continue;
            auto sig = poset_leq(d.vertices[i], d.vertices[j], variant);
            if (sig->sum() != 1)
                throw verification_error("covering relation without unit signature");
            int r = 0;
            while (sig->a[r] == 0) ++r;
            d.edges.push_back({d.vertices[i], d.vertices[j], r});
        }
    return d;
}

std::vector<std::vector<MComposition>> HasseDiagram::components() const {
    std::map<MComposition, int> idx;
    for (size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = static_cast<int>(i);
    std::vector<int> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : edges) parent[find(idx.at(e.from))] = find(idx.at(e.to));
    std::map<int, std::vector<MComposition>> groups;
    for (size_t i = 0; i < vertices.size(); ++i) groups[find(static_cast<int>(i))].push_back(vertices[i]);
    std::vector<std::vector<MComposition>> out;
    for (auto& [root, verts] : groups) out.push_back(std::move(verts));
    return out;
}

std::vector<std::vector<MComposition>> HasseDiagram::minimal_elements() const {
    std::set<MComposition> has_lower;
    for (const auto& e : edges) has_lower.insert(e.to);
    std::vector<std::vector<MComposition>> out;
    for (const auto& comp : components()) {
        std::vector<MComposition> mins;
        for (const auto& v : comp) {
            if (!has_lower.count(v)) mins.push_back(v);
        }
        out.push_back(std::move(mins));
    }
    return out;
}

std::vector<MComposition> poset_component(int m, int n, const MComposition& omega,
                                          PosetVariant variant) {
    if (omega.m() != m) throw std::invalid_argument("composition length mismatch");
    auto all = lambda_abs(m, n);
    HasseDiagram d = hasse(all, variant);
    for (const auto& comp : d.components()) {
        if (std::find(comp.begin(), comp.end(), omega) != comp.end()) return comp;
    }
    throw std::invalid_argument("composition lies outside the enumerated set");
}

std::string hasse_dot(const HasseDiagram& diagram, const std::vector<int>& display) {
    auto name = [&](const MComposition& w) { return w.to_string(display); };
    std::vector<std::string> vnames;
    for (const auto& v : diagram.vertices) vnames.push_back(name(v));
    std::sort(vnames.begin(), vnames.end());
    std::vector<std::string> elines;
    for (const auto& e : diagram.edges) {
        std::string label = e.label_r == 0 ? "1" : (e.label_r == 1 ? "xi" : "xi^" + std::to_string(e.label_r));
        elines.push_back("  \"" + name(e.from) + "\" -- \"" + name(e.to) + "\" [label=\"" + label + "\"];");
    }
    std::sort(elines.begin(), elines.end());
    std::ostringstream os;
    os << "graph hasse {\n";
    for (const auto& v : vnames) os << "  \"" << v << "\";\n";
    for (const auto& e : elines) os << e << "\n";
    os << "}\n";
    return os.str();
}

}  // namespace cycbrauer
