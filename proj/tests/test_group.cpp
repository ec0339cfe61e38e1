#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "pfa/group.hpp"

using namespace pfa;

namespace {

// Independent oracle: enumerate automorphisms by elementwise backtracking over
// all bijections preserving the table (no generator-word machinery).
int count_automorphisms_bruteforce(const GroupPtr& g) {
    int n = g->order();
    std::vector<int> im(n, -1);
    std::vector<char> used(n, 0);
    int count = 0;
    // fix f(e) = e
    im[g->identity()] = g->identity();
    used[g->identity()] = 1;
    std::vector<int> order_of(n);
    for (int i = 0; i < n; ++i) order_of[i] = g->element_order(i);

    auto consistent = [&](int x) {
        for (int a = 0; a < n; ++a) {
            if (im[a] < 0) continue;
            int ax = g->mul(a, x), xa = g->mul(x, a);
            if (im[ax] >= 0 && im[ax] != g->mul(im[a], im[x])) return false;
            if (im[xa] >= 0 && im[xa] != g->mul(im[x], im[a])) return false;
        }
        return true;
    };

    std::function<void(int)> rec = [&](int x) {
        while (x < n && im[x] >= 0) ++x;
        if (x == n) { ++count; return; }
        for (int y = 0; y < n; ++y) {
            if (used[y] || order_of[y] != order_of[x]) continue;
            im[x] = y;
            used[y] = 1;
            if (consistent(x)) rec(x + 1);
            im[x] = -1;
            used[y] = 0;
        }
    };
    rec(0);
    return count;
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) r -= r / n;
    return r;
}

}  // namespace

TEST_CASE("named family orders and presentations") {
    CHECK(cyclic_group(1)->order() == 1);
    CHECK(cyclic_group(12)->order() == 12);
    CHECK(dihedral_group(6)->order() == 12);
    CHECK(binary_dihedral_group(3)->order() == 12);
    CHECK(tetrahedral_group()->order() == 12);
    CHECK(octahedral_group()->order() == 24);
    CHECK(icosahedral_group()->order() == 60);

    auto d5 = dihedral_group(5);
    int s = d5->generators()[0].second, t = d5->generators()[1].second;
    CHECK(d5->element_order(s) == 5);
    CHECK(d5->element_order(t) == 2);
    CHECK(d5->mul(d5->mul(t, s), t) == d5->inv(s));

    auto bd2 = binary_dihedral_group(2);  // quaternion group
    int k = bd2->generators()[0].second, q = bd2->generators()[1].second;
    CHECK(bd2->order() == 8);
    CHECK(bd2->mul(q, q) == bd2->pow(k, 2));
    CHECK(bd2->conj(q, k) == bd2->inv(k));
    // one involution only
    int involutions = 0;
    for (int x = 0; x < 8; ++x)
        if (bd2->element_order(x) == 2) ++involutions;
    CHECK(involutions == 1);
}

TEST_CASE("icosahedral group is simple") {
    auto g = icosahedral_group();
    // no normal proper nontrivial subgroup: every nontrivial conjugacy class
    // generates the whole group
    for (const auto& cls : conjugacy_classes(g)) {
        if (cls.size() == 1 && cls[0] == g->identity()) continue;
        CHECK(subgroup_generated(g, cls).elements.size() == 60);
    }
}

TEST_CASE("direct and semidirect products") {
    auto z6 = direct_product(cyclic_group(2), cyclic_group(3));
    CHECK(z6->order() == 6);
    CHECK(z6->is_cyclic());

    // Z3 x| Z2 by inversion = D3
    auto z3 = cyclic_group(3);
    std::vector<std::vector<int>> action{{0, 1, 2}, {0, 2, 1}};
    auto sd = semidirect_product(z3, cyclic_group(2), action);
    CHECK(sd->order() == 6);
    CHECK(isomorphic(sd, dihedral_group(3)));
    CHECK_FALSE(isomorphic(sd, cyclic_group(6)));

    // x -> x+1 does not fix the identity, so it is not an automorphism
    CHECK_THROWS_AS(semidirect_product(z3, cyclic_group(2),
                                       std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 0}}),
                    ParameterError);
}

TEST_CASE("automorphism groups of small groups") {
    SUBCASE("D2 has Aut = S3") {
        auto a = automorphism_group(dihedral_group(2));
        CHECK(a.group->order() == 6);
        CHECK(isomorphic(a.group, symmetric_group(3)));
    }
    SUBCASE("A4 has Aut = S4") {
        auto a = automorphism_group(tetrahedral_group());
        CHECK(a.group->order() == 24);
        CHECK(isomorphic(a.group, symmetric_group(4)));
    }
    SUBCASE("Aut(D_n) has order n phi(n) for 3 <= n <= 12") {
        for (int n = 3; n <= 12; ++n) {
            auto a = automorphism_group(dihedral_group(n));
            CHECK(a.group->order() == n * euler_phi(n));
        }
    }
    SUBCASE("generator-image method agrees with elementwise brute force") {
        std::vector<GroupPtr> corpus{cyclic_group(8), dihedral_group(4), dihedral_group(6),
                                     binary_dihedral_group(2),
                                     direct_product(cyclic_group(2), cyclic_group(4))};
        for (const auto& g : corpus) {
            auto a = automorphism_group(g);
            CHECK(static_cast<int>(a.maps.size()) == count_automorphisms_bruteforce(g));
            CHECK(a.group->order() == static_cast<int>(a.maps.size()));
        }
    }
    SUBCASE("composition in the abstract group matches map composition") {
        auto g = dihedral_group(4);
        auto a = automorphism_group(g);
        for (size_t i = 0; i < a.maps.size(); ++i)
            for (size_t j = 0; j < a.maps.size(); ++j) {
                auto comp = GroupHom::compose(a.maps[i], a.maps[j]);
                int k = a.group->mul(static_cast<int>(i), static_cast<int>(j));
                CHECK(a.maps[k].image == comp.image);
            }
    }
}

TEST_CASE("inner and outer automorphisms") {
    SUBCASE("A5: Out has order 2") {
        auto g = icosahedral_group();
        auto a = automorphism_group(g, 200);
        CHECK(a.group->order() == 120);
        auto io = inner_and_outer(g, a);
        CHECK(io.outer.group->order() == 2);
    }
    SUBCASE("S4 is complete") {
        auto g = octahedral_group();
        auto a = automorphism_group(g);
        auto io = inner_and_outer(g, a);
        CHECK(io.outer.group->order() == 1);
        CHECK(center(g).elements.size() == 1);
    }
    SUBCASE("cyclic groups: Inn trivial") {
        auto g = cyclic_group(10);
        auto a = automorphism_group(g);
        auto io = inner_and_outer(g, a);
        CHECK(io.inner.elements.size() == 1);
        CHECK(io.outer.group->order() == a.group->order());
    }
    SUBCASE("|Inn| * |Z| = |G| on a corpus") {
        std::vector<GroupPtr> corpus{dihedral_group(4), dihedral_group(5), tetrahedral_group(),
                                     binary_dihedral_group(3), octahedral_group()};
        for (const auto& g : corpus) {
            auto a = automorphism_group(g);
            auto io = inner_and_outer(g, a);
            CHECK(static_cast<int>(io.inner.elements.size()) *
                      static_cast<int>(center(g).elements.size()) ==
                  g->order());
        }
    }
}

TEST_CASE("isomorphism testing") {
    CHECK(isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
    CHECK(isomorphic(direct_product(cyclic_group(3), cyclic_group(4)), cyclic_group(12)));
    CHECK_FALSE(isomorphic(dihedral_group(6), cyclic_group(12)));
    CHECK_FALSE(isomorphic(binary_dihedral_group(2),
                           direct_product(cyclic_group(2), cyclic_group(4))));
    CHECK(isomorphic(dihedral_group(2), direct_product(cyclic_group(2), cyclic_group(2))));

    SUBCASE("witness is a genuine isomorphism") {
        auto g = direct_product(cyclic_group(2), cyclic_group(3));
        auto h = cyclic_group(6);
        auto iso = isomorphism(g, h);
        REQUIRE(iso.has_value());
        CHECK(iso->is_homomorphism());
        CHECK(iso->is_injective());
    }
    SUBCASE("equivalence relation on a corpus") {
        std::vector<GroupPtr> corpus{cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2)),
                                     dihedral_group(2), binary_dihedral_group(1)};
        // reflexive
        for (const auto& g : corpus) CHECK(isomorphic(g, g));
        // symmetric on all pairs
        for (const auto& g : corpus)
            for (const auto& h : corpus) CHECK(isomorphic(g, h) == isomorphic(h, g));
        // D2 = Z2xZ2, Dstar1 = Z4
        CHECK(isomorphic(corpus[1], corpus[2]));
        CHECK(isomorphic(corpus[0], corpus[3]));
        CHECK_FALSE(isomorphic(corpus[0], corpus[1]));
    }
}

TEST_CASE("subgroup machinery") {
    SUBCASE("center of D4") {
        auto d4 = dihedral_group(4);
        auto z = center(d4);
        CHECK(z.elements.size() == 2);
        int s = d4->generators()[0].second;
        CHECK(z.contains(d4->pow(s, 2)));
    }
    SUBCASE("center of Icos is trivial") {
        CHECK(center(icosahedral_group()).elements.size() == 1);
    }
    SUBCASE("normalizer of <s> in D4 is all of D4") {
        auto d4 = dihedral_group(4);
        int s = d4->generators()[0].second;
        auto h = subgroup_generated(d4, {s});
        CHECK(normalizer(d4, h).elements.size() == 8);
        CHECK(is_normal(d4, h));
    }
    SUBCASE("conjugacy classes of S4 have sizes 1,6,3,8,6") {
        auto cc = conjugacy_classes(octahedral_group());
        std::multiset<size_t> sizes;
        for (auto& c : cc) sizes.insert(c.size());
        CHECK(sizes == std::multiset<size_t>{1, 3, 6, 6, 8});
    }
    SUBCASE("quotient of D4 by center") {
        auto d4 = dihedral_group(4);
        auto q = quotient_by(d4, center(d4));
        CHECK(q.group->order() == 4);
        CHECK_FALSE(q.group->is_cyclic());
    }
}

TEST_CASE("short exact sequence validation") {
    auto z3 = cyclic_group(3);
    auto d3 = dihedral_group(3);
    int s = d3->generators()[0].second;
    GroupHom inc{z3, d3, {0, s, d3->mul(s, s)}};
    auto sub = subgroup_generated(d3, {s});
    auto q = quotient_by(d3, sub);
    ShortExactSequence seq{z3, d3, q.group, inc, q.projection};
    CHECK(seq.validate());

    // broken inclusion: not injective
    GroupHom bad{z3, d3, {0, 0, 0}};
    ShortExactSequence seq2{z3, d3, q.group, bad, q.projection};
    CHECK_FALSE(seq2.validate());
}

TEST_CASE("splitting detection for index-2 kernels") {
    // Z8 over its Z4 subgroup: no involution outside -> does not split
    auto z8 = cyclic_group(8);
    CHECK_FALSE(splits_over_index2(z8, {0, 2, 4, 6}));
    // Z2 x Z4 over the Z4 factor: splits
    auto z2z4 = direct_product(cyclic_group(2), cyclic_group(4));
    auto z4part = subgroup_generated(z2z4, {z2z4->generators()[1].second});
    CHECK(splits_over_index2(z2z4, z4part.elements));
}

TEST_CASE("element order profiles distinguish Q8 from Z2xZ4") {
    auto q8 = binary_dihedral_group(2);
    auto z2z4 = direct_product(cyclic_group(2), cyclic_group(4));
    CHECK(q8->order_profile() != z2z4->order_profile());
}
