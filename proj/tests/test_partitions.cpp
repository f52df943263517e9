#include <doctest.h>

#include <functional>
#include <set>

#include "cycbrauer/partitions.hpp"
#include "cycbrauer/posets.hpp"

using namespace cycbrauer;

namespace {

// Independent oracle: number of standard fillings of the skew shape nu/lambda,
// counted by peeling maximal entries off removable skew corners.
long skew_syt_count(const Partition& nu, const Partition& lambda) {
    if (!nu.contains(lambda)) return 0;
    std::function<long(std::vector<int>)> rec = [&](std::vector<int> shape) -> long {
        int cells = 0;
        for (int i = 0; i < static_cast<int>(shape.size()); ++i) cells += shape[i] - lambda.part(i);
        if (cells == 0) return 1;
        long total = 0;
        for (int i = 0; i < static_cast<int>(shape.size()); ++i) {
            bool corner = shape[i] > lambda.part(i) &&
                          (i + 1 == static_cast<int>(shape.size()) || shape[i] > shape[i + 1]);
            if (!corner) continue;
            auto next = shape;
            --next[i];
            total += rec(next);
        }
        return total;
    };
    return rec(nu.parts);
}

}  // namespace

TEST_CASE("partition basics") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(8).size() == 22);
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, 0}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition::parse("3,1").to_string() == "3,1");
    CHECK(Partition::parse("-") == Partition());
}

TEST_CASE("standard tableaux counts via hooks") {
    CHECK(standard_tableaux_count(Partition()) == 1);
    CHECK(standard_tableaux_count(Partition({4})) == 1);
    CHECK(standard_tableaux_count(Partition({1, 1, 1})) == 1);
    CHECK(standard_tableaux_count(Partition({2, 1})) == 2);
    CHECK(standard_tableaux_count(Partition({3, 2})) == 5);
    CHECK(standard_tableaux_count(Partition({2, 2, 1})) == 5);
    // sum of squares over partitions of n equals n!
    long total = 0;
    for (const auto& p : partitions_of(5)) {
        long d = standard_tableaux_count(p).get_si();
        total += d * d;
    }
    CHECK(total == 120);
}

TEST_CASE("dominance order") {
    MultiPartition a(std::vector<Partition>{Partition({1, 1, 1})});
    MultiPartition b(std::vector<Partition>{Partition({2, 1})});
    CHECK(dominance_leq(a, b));       // (1,1,1) below (2,1), classical sums 2>=1, 3>=2
    CHECK_FALSE(dominance_leq(b, a));
    CHECK(dominance_leq(a, a));

    // m=2: ((1),-) dominates (-,(1)) but not conversely
    MultiPartition lam(std::vector<Partition>{Partition({1}), Partition()});
    MultiPartition mu(std::vector<Partition>{Partition(), Partition({1})});
    CHECK(dominance_leq(mu, lam));
    CHECK_FALSE(dominance_leq(lam, mu));

    // extended order: strictly more boxes dominates
    MultiPartition big(std::vector<Partition>{Partition({3}), Partition()});
    MultiPartition small(std::vector<Partition>{Partition({1}), Partition()});
    CHECK(extended_dominance_leq(small, big));
    CHECK_FALSE(extended_dominance_leq(big, small));
}

TEST_CASE("signed boxes") {
    SUBCASE("empty multipartition has one addable box per component") {
        MultiPartition empty = MultiPartition::empty(3);
        auto bx = boxes(empty);
        for (int r = 0; r < 3; ++r) {
            CHECK(bx.removable[r].empty());
            REQUIRE(bx.addable[r].size() == 1);
            CHECK(bx.addable[r][0] == Box{r, 1, 1});
        }
    }
    SUBCASE("m=2, ((2,1), -)") {
        MultiPartition lam(std::vector<Partition>{Partition({2, 1}), Partition()});
        auto bx = boxes(lam);
        REQUIRE(bx.removable[0].size() == 2);
        CHECK(bx.removable[0][0] == Box{0, 1, 2});
        CHECK(bx.removable[0][1] == Box{0, 2, 1});
        REQUIRE(bx.addable[1].size() == 1);
        CHECK(bx.addable[1][0] == Box{1, 1, 1});
        CHECK(bx.addable[0].size() == 3);
    }
    SUBCASE("addable exceeds removable by one per component, n <= 6") {
        for (int m = 1; m <= 3; ++m) {
            for (int n = 0; n <= 6; ++n) {
                for (const auto& lam : mpartitions_of(m, n)) {
                    auto bx = boxes(lam);
                    for (int r = 0; r < m; ++r)
                        CHECK(static_cast<int>(bx.addable[r].size()) ==
                              static_cast<int>(bx.removable[r].size()) + 1);
                }
            }
        }
    }
    SUBCASE("add and remove round trip") {
        MultiPartition lam(std::vector<Partition>{Partition({2, 1}), Partition({1})});
        auto bx = boxes(lam);
        for (int r = 0; r < 2; ++r) {
            for (const auto& b : bx.removable[r]) CHECK(add_box(remove_box(lam, b), b) == lam);
            for (const auto& b : bx.addable[r]) CHECK(remove_box(add_box(lam, b), b) == lam);
        }
    }
}

TEST_CASE("littlewood-richardson coefficients") {
    CHECK(lr_coeff(Partition({2, 1}), Partition({2, 1}), Partition()) == 1);
    CHECK(lr_coeff(Partition({2, 1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(lr_coeff(Partition({2, 2}), Partition({1}), Partition({2, 1})) == 1);
    CHECK(lr_coeff(Partition({2, 2}), Partition({1}), Partition({1, 1, 1})) == 0);
    CHECK(lr_coeff(Partition({3}), Partition({1}), Partition({1})) == 0);  // size mismatch
    // the classical multiplicity-2 entry of s_{21} * s_{21}
    CHECK(lr_coeff(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
}

TEST_CASE("lr symmetry in the two tensor factors") {
    for (int nsize = 0; nsize <= 8; ++nsize) {
        for (const auto& nu : partitions_of(nsize)) {
            for (int lsize = 0; lsize <= nsize; ++lsize) {
                for (const auto& lam : partitions_of(lsize)) {
                    if (!nu.contains(lam)) continue;
                    for (const auto& tau : partitions_of(nsize - lsize)) {
                        CHECK(lr_coeff(nu, lam, tau) == lr_coeff(nu, tau, lam));
                    }
                }
            }
        }
    }
}

TEST_CASE("lr coefficients against skew tableau counting") {
    for (int nsize = 0; nsize <= 6; ++nsize) {
        for (const auto& nu : partitions_of(nsize)) {
            for (int lsize = 0; lsize <= nsize; ++lsize) {
                for (const auto& lam : partitions_of(lsize)) {
                    if (!nu.contains(lam)) continue;
                    mpz_class sum = 0;
                    for (const auto& tau : partitions_of(nsize - lsize))
                        sum += mpz_class(lr_coeff(nu, lam, tau)) * standard_tableaux_count(tau);
                    CHECK(sum == skew_syt_count(nu, lam));
                }
            }
        }
    }
}

TEST_CASE("even partitions") {
    CHECK(even_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(even_partitions(2) == std::vector<Partition>{Partition({2})});
    auto e4 = even_partitions(4);
    REQUIRE(e4.size() == 2);
    CHECK(std::set<Partition>(e4.begin(), e4.end()) ==
          std::set<Partition>{Partition({4}), Partition({2, 2})});
    CHECK_THROWS(even_partitions(3));
}

TEST_CASE("multipartition parsing and sizes") {
    MultiPartition lam = MultiPartition::parse("1,1|2,1|2,2", 3);
    CHECK(lam.size() == 9);
    CHECK(sizes_of(lam) == MComposition({2, 3, 4}));
    CHECK(lam.to_string() == "1,1|2,1|2,2");
    CHECK_THROWS(MultiPartition::parse("1|2", 3));
}
