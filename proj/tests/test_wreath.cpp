#include <doctest.h>

#include <random>

#include "cycbrauer/wreath.hpp"

using namespace cycbrauer;

namespace {

WreathElement random_element(int m, int n, std::mt19937_64& rng) {
    WreathElement g = WreathElement::identity(m, n);
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(g.perm[i], g.perm[pick(rng)]);
    }
    std::uniform_int_distribution<int> lab(0, m - 1);
    for (auto& l : g.labels) l = lab(rng);
    return g;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("wreath group structure and the diagram dictionary") {
    std::mt19937_64 rng(20240910);
    int m = 3, n = 4;
    Params p = Params::from_rationals(m, {Rational(1), Rational(2), Rational(3)});
    for (int trial = 0; trial < 40; ++trial) {
        WreathElement g = random_element(m, n, rng);
        WreathElement h = random_element(m, n, rng);
        CHECK(g.mul(g.inverse()) == WreathElement::identity(m, n));
        CHECK(g.inverse().mul(g) == WreathElement::identity(m, n));
        CHECK(WreathElement::from_diagram(g.to_diagram()) == g);
        // group multiplication matches diagram concatenation
        auto prod = multiply_diagrams(g.to_diagram(), h.to_diagram(), p);
        CHECK(prod.loop_labels.empty());
        CHECK(prod.diagram == g.mul(h).to_diagram());
    }
}

TEST_CASE("natural representation of the symmetric group") {
    SUBCASE("one dimensional cases") {
        SymmetricSpecht triv(Partition({4}), 1);
        CHECK(triv.dim() == 1);
        for (int i = 1; i <= 3; ++i) CHECK(triv.adjacent(i).at(0, 0) == Cyclotomic::one(1));
        SymmetricSpecht sign(Partition({1, 1, 1, 1}), 1);
        CHECK(sign.dim() == 1);
        for (int i = 1; i <= 3; ++i) CHECK(sign.adjacent(i).at(0, 0) == -Cyclotomic::one(1));
    }
    SUBCASE("the two dimensional module of Sigma_3") {
        SymmetricSpecht s(Partition({2, 1}), 1);
        CHECK(s.dim() == 2);
        CHECK(s.adjacent(1).trace().is_zero());
        CHECK(s.adjacent(2).trace().is_zero());
    }
    SUBCASE("coxeter relations for shapes up to five boxes") {
        for (int n = 2; n <= 5; ++n) {
            for (const auto& lam : partitions_of(n)) {
                SymmetricSpecht s(lam, 1);
                CHECK(s.dim() == standard_tableaux_count(lam));
                Mat id = Mat::identity(s.dim(), 1);
                for (int i = 1; i < n; ++i) CHECK(s.adjacent(i) * s.adjacent(i) == id);
                for (int i = 1; i + 1 < n; ++i)
                    CHECK(s.adjacent(i) * s.adjacent(i + 1) * s.adjacent(i) ==
                          s.adjacent(i + 1) * s.adjacent(i) * s.adjacent(i + 1));
                for (int i = 1; i < n; ++i)
                    for (int j = i + 2; j < n; ++j)
                        CHECK(s.adjacent(i) * s.adjacent(j) == s.adjacent(j) * s.adjacent(i));
            }
        }
    }
    SUBCASE("permutation matrices compose functorially") {
        std::mt19937_64 rng(20240911);
        SymmetricSpecht s(Partition({3, 2}), 1);
        for (int trial = 0; trial < 30; ++trial) {
            auto g = random_element(1, 5, rng).perm;
            auto h = random_element(1, 5, rng).perm;
            std::vector<int> gh(5);
            for (int i = 0; i < 5; ++i) gh[i] = g[h[i]];  // (g h)(i) = g(h(i))
            CHECK(s.permutation_matrix(gh) == s.permutation_matrix(g) * s.permutation_matrix(h));
        }
    }
}

TEST_CASE("idempotents T_i^r") {
    for (int m = 1; m <= 6; ++m) {
        int n = 2;
        Params p = Params::from_rationals(m, std::vector<Rational>(m, Rational(1)));
        AlgebraElement sum(m, n, m);
        for (int r = 0; r < m; ++r) {
            AlgebraElement t = idempotent_T(m, n, 1, r);
            sum = sum + t;
            for (int s = 0; s < m; ++s) {
                AlgebraElement prod = multiply(t, idempotent_T(m, n, 1, s), p);
                if (r == s)
                    CHECK(prod == t);
                else
                    CHECK(prod.is_zero());
            }
        }
        CHECK(sum == AlgebraElement::unit(m, n, m));
    }
}

TEST_CASE("pi_omega is idempotent and eats labels") {
    for (auto omega : {MComposition({2, 1}), MComposition({1, 1, 1}), MComposition({0, 3})}) {
        int m = omega.m(), n = omega.total();
        Params p = Params::from_rationals(m, std::vector<Rational>(m, Rational(1)));
        AlgebraElement pi = pi_omega(omega);
        CHECK(multiply(pi, pi, p) == pi);
        CHECK(star(pi) == pi);
        // pi t_i^k pi = xi^{-kr} pi for i in block r
        for (int i = 1; i <= n; ++i) {
            int r = omega.block_of(i);
            for (int k = 0; k < m; ++k) {
                AlgebraElement mid = multiply(pi, gen_t_label(m, n, m, i, k), p);
                CHECK(multiply(mid, pi, p) ==
                      pi.scaled(Cyclotomic::xi_pow(m, -static_cast<long>(k) * r)));
            }
        }
    }
}

TEST_CASE("wreath Specht dimensions") {
    // dim = multinomial * product of tableau counts
    WreathSpecht a(MultiPartition::parse("1|1", 2), 2);
    CHECK(a.dim() == 2);
    WreathSpecht b(MultiPartition::parse("2|1", 2), 2);
    CHECK(b.dim() == 3);
    WreathSpecht c(MultiPartition::parse("1,1|-|1", 3), 3);
    CHECK(c.dim() == 3);

    for (int m = 1; m <= 3; ++m) {
        for (int n = 0; n <= (m == 3 ? 3 : 4); ++n) {
            long total = 0;
            for (const auto& lam : mpartitions_of(m, n)) {
                long d = WreathSpecht(lam, m).dim();
                total += d * d;
            }
            long expected = factorial(n);
            for (int i = 0; i < n; ++i) expected *= m;
            CHECK(total == expected);
        }
    }
}

TEST_CASE("wreath Specht matrices satisfy the group relations") {
    std::mt19937_64 rng(20240912);
    for (const auto& spec : {std::make_pair(2, std::string("1|1")), {2, "2|-"}, {2, "1|1,1"},
                             {3, "1|1|-"}, {3, "-|2|-"}}) {
        int m = spec.first;
        MultiPartition lam = MultiPartition::parse(spec.second, m);
        int n = lam.size();
        WreathSpecht w(lam, m);
        Mat id = Mat::identity(w.dim(), m);

        // homomorphism on random pairs
        for (int trial = 0; trial < 20; ++trial) {
            WreathElement g = random_element(m, n, rng);
            WreathElement h = random_element(m, n, rng);
            CHECK(w.action(g.mul(h)) == w.action(g) * w.action(h));
        }

        // defining relations
        WreathElement t1 = WreathElement::identity(m, n);
        t1.labels[0] = 1;
        Mat mt1 = w.action(t1);
        Mat pow = id;
        for (int k = 0; k < m; ++k) pow = pow * mt1;
        CHECK(pow == id);
        for (int i = 1; i < n; ++i) {
            WreathElement s = WreathElement::identity(m, n);
            std::swap(s.perm[i - 1], s.perm[i]);
            CHECK(w.action(s) * w.action(s) == id);
        }
    }
}

TEST_CASE("the two dimensional module at m=2 splits t_1 with both signs") {
    WreathSpecht w(MultiPartition::parse("1|1", 2), 2);
    WreathElement t1 = WreathElement::identity(2, 2);
    t1.labels[0] = 1;
    Mat a = w.action(t1);
    CHECK(a * a == Mat::identity(2, 2));
    CHECK(a.trace().is_zero());  // eigenvalues +1 and -1
}

TEST_CASE("m=1 wreath module is the plain Specht module") {
    Partition lam({2, 1});
    SymmetricSpecht s(lam, 1);
    WreathSpecht w(MultiPartition(std::vector<Partition>{lam}), 1);
    REQUIRE(w.dim() == s.dim());
    for (int i = 1; i <= 2; ++i) {
        WreathElement g = WreathElement::identity(1, 3);
        std::swap(g.perm[i - 1], g.perm[i]);
        CHECK(w.action(g) == s.adjacent(i));
    }
}

TEST_CASE("regular character vanishes off the identity") {
    std::mt19937_64 rng(20240913);
    for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 3; ++n) {
            auto labels = mpartitions_of(m, n);
            std::vector<WreathSpecht> mods;
            for (const auto& lam : labels) mods.emplace_back(lam, m);
            long order = factorial(n);
            for (int i = 0; i < n; ++i) order *= m;
            for (int trial = 0; trial < 20; ++trial) {
                WreathElement g = random_element(m, n, rng);
                Cyclotomic total = Cyclotomic::zero(m);
                for (const auto& mod : mods)
                    total += mod.character(g).scaled(Rational(mod.dim()));
                bool is_id = g == WreathElement::identity(m, n);
                if (is_id)
                    CHECK(total == Cyclotomic::from_rational(m, Rational(order)));
                else
                    CHECK(total.is_zero());
            }
        }
    }
}

TEST_CASE("truncating wreath Specht modules by pi_omega") {
    SUBCASE("mismatched sizes vanish") {
        CHECK(truncate_specht(MComposition({1, 1}), MultiPartition::parse("2|-", 2)).dim == 0);
        CHECK(truncate_specht(MComposition({0, 2}), MultiPartition::parse("1|1", 2)).dim == 0);
    }
    SUBCASE("two routes to the truncated dimension") {
        for (int m = 1; m <= 2; ++m) {
            for (int n = 1; n <= 3; ++n) {
                for (const auto& lam : mpartitions_of(m, n)) {
                    WreathSpecht w(lam, m);
                    for (const auto& omega : mcompositions_of(m, n)) {
                        int direct = truncate_specht(omega, lam).dim;
                        CHECK(direct == rank(w.action(pi_omega(omega))));
                    }
                }
            }
        }
    }
    SUBCASE("m=2, ((1),(1)) truncates to dimension one") {
        CHECK(truncate_specht(MComposition({1, 1}), MultiPartition::parse("1|1", 2)).dim == 1);
    }
    SUBCASE("m=1 truncation is the identity functor") {
        Partition lam({2, 1});
        auto tr = truncate_specht(MComposition({3}), MultiPartition(std::vector<Partition>{lam}));
        SymmetricSpecht s(lam, 1);
        REQUIRE(tr.dim == s.dim());
        for (int i = 1; i <= 2; ++i) CHECK(tr.block_adjacents.at(i) == s.adjacent(i));
    }
    SUBCASE("the surviving block matches the tensor product of Specht factors") {
        MultiPartition lam = MultiPartition::parse("2|1", 2);
        auto tr = truncate_specht(MComposition({2, 1}), lam);
        SymmetricSpecht s0(Partition({2}), 2);
        SymmetricSpecht s1(Partition({1}), 2);
        REQUIRE(tr.dim == s0.dim() * s1.dim());
        CHECK(tr.block_adjacents.at(1) == s0.adjacent(1).kronecker(Mat::identity(s1.dim(), 2)));
        CHECK(tr.block_adjacents.count(2) == 0);  // (2,3) crosses the blocks

        MultiPartition lam2 = MultiPartition::parse("1,1|2", 2);
        auto tr2 = truncate_specht(MComposition({2, 2}), lam2);
        SymmetricSpecht a(Partition({1, 1}), 2), b(Partition({2}), 2);
        REQUIRE(tr2.dim == 1);
        CHECK(tr2.block_adjacents.at(1) == a.adjacent(1).kronecker(Mat::identity(1, 2)));
        CHECK(tr2.block_adjacents.at(3) == Mat::identity(1, 2).kronecker(b.adjacent(1)));
    }
}
