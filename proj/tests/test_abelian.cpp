#include <doctest.h>

#include <map>

#include "dicyclic/abelian.hpp"
#include "oracles.hpp"

using namespace dicyclic;

namespace {

// Element-order multiset of a raw direct product, no canonicalization.
std::map<int, int> order_multiset_raw(const std::vector<int>& factors) {
    std::map<int, int> out;
    std::vector<int> r(factors.size(), 0);
    for (;;) {
        long long o = 1;
        for (std::size_t i = 0; i < factors.size(); ++i)
            o = std::lcm(o, (long long)factors[i] / std::gcd(factors[i], r[i]));
        ++out[int(o)];
        std::size_t i = 0;
        for (; i < factors.size(); ++i) {
            if (++r[i] < factors[i]) break;
            r[i] = 0;
        }
        if (i == factors.size()) break;
    }
    return out;
}

std::map<int, int> order_multiset(const AbelianGroup& a) {
    std::map<int, int> out;
    for (int i = 0; i < a.order(); ++i) ++out[a.element_order(a.element_at(i))];
    return out;
}

int involution_count_raw(const std::vector<int>& factors) {
    int count = 0;
    std::vector<int> r(factors.size(), 0);
    for (;;) {
        bool zero = true, doubled_zero = true;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (r[i] != 0) zero = false;
            if ((2 * r[i]) % factors[i] != 0) doubled_zero = false;
        }
        if (!zero && doubled_zero) ++count;
        std::size_t i = 0;
        for (; i < factors.size(); ++i) {
            if (++r[i] < factors[i]) break;
            r[i] = 0;
        }
        if (i == factors.size()) break;
    }
    return count;
}

} // namespace

TEST_SUITE("abelian") {

TEST_CASE("canonical invariant factors") {
    CHECK(AbelianGroup({4}).invariant_factors() == std::vector<int>{4});
    CHECK(AbelianGroup({4}).order() == 4);
    CHECK(AbelianGroup({2, 2}).invariant_factors() == std::vector<int>{2, 2});
    CHECK(AbelianGroup({2, 6}).invariant_factors() == std::vector<int>{2, 6});
    CHECK(AbelianGroup({2, 6}).order() == 12);
    CHECK(AbelianGroup({6, 2}).invariant_factors() == std::vector<int>{2, 6});
    CHECK(AbelianGroup({8, 12, 3}).invariant_factors() == std::vector<int>{12, 24});

    // same abstract group: element-order multisets match the raw product
    for (const std::vector<int>& factors :
         {std::vector<int>{2, 6}, {6, 2}, {8, 12, 3}, {4, 10}, {9, 3}}) {
        AbelianGroup a(factors);
        CHECK(order_multiset(a) == order_multiset_raw(factors));
    }
    // divisibility chain
    for (const std::vector<int>& factors : {std::vector<int>{12, 8}, {30, 4}, {2, 2, 2}}) {
        auto inv = AbelianGroup(factors).invariant_factors();
        for (std::size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
    }
}

TEST_CASE("constructor rejects bad factor lists") {
    CHECK_THROWS_AS(AbelianGroup({}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({1}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({4, 0}), std::invalid_argument);
}

TEST_CASE("element indexing is lexicographic and bijective") {
    AbelianGroup a({3, 6});
    CHECK(a.index_of({0, 0}) == 0);
    CHECK(a.index_of({0, 1}) == 1);
    CHECK(a.index_of({1, 0}) == 6);
    for (int i = 0; i < a.order(); ++i) CHECK(a.index_of(a.element_at(i)) == i);
}

TEST_CASE("involutions") {
    CHECK(AbelianGroup({4}).involutions() == std::vector<Residues>{{2}});
    CHECK(AbelianGroup({2, 2}).involutions() == std::vector<Residues>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(AbelianGroup({12}).involutions() == std::vector<Residues>{{6}});
    CHECK(AbelianGroup({3}).involutions().empty());
}

TEST_CASE("abelian groups with a unique involution") {
    auto factor_lists = [](const std::vector<AbelianGroup>& gs) {
        std::vector<std::vector<int>> out;
        for (const auto& g : gs) out.push_back(g.invariant_factors());
        return out;
    };
    CHECK(factor_lists(abelian_groups_with_unique_involution(4)) ==
          std::vector<std::vector<int>>{{4}});
    CHECK(factor_lists(abelian_groups_with_unique_involution(8)) ==
          std::vector<std::vector<int>>{{8}});
    CHECK(factor_lists(abelian_groups_with_unique_involution(12)) ==
          std::vector<std::vector<int>>{{12}});
    CHECK(factor_lists(abelian_groups_with_unique_involution(18)) ==
          std::vector<std::vector<int>>{{3, 6}, {18}});

    // oracle: enumerate every abelian group of the order, count involutions
    // by scanning elements, keep those with exactly one
    for (int order : {4, 8, 12, 16, 18, 20, 24, 36}) {
        std::vector<std::vector<int>> expected;
        for (const auto& factors : oracles::all_abelian_factor_lists(order))
            if (involution_count_raw(factors) == 1)
                expected.push_back(AbelianGroup(factors).invariant_factors());
        std::sort(expected.begin(), expected.end());
        CHECK(factor_lists(abelian_groups_with_unique_involution(order)) == expected);
    }
}

TEST_CASE("unique-involution enumeration rejects odd or tiny orders") {
    CHECK_THROWS_AS(abelian_groups_with_unique_involution(9), std::invalid_argument);
    CHECK_THROWS_AS(abelian_groups_with_unique_involution(2), std::invalid_argument);
}

} // TEST_SUITE
