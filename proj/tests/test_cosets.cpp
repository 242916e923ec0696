#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "qcq/cosets.hpp"
#include "qcq/cyclic.hpp"

using namespace qcq;

TEST(Cosets, PartitionForManyModuli) {
    for (unsigned q2 : {4u, 9u, 16u, 25u}) {
        for (unsigned n = 1; n <= 500; ++n) {
            if (std::gcd(n, q2) != 1) continue;
            const auto cosets = all_cosets(n, q2);
            std::vector<int> hits(n, 0);
            unsigned prev = 0;
            for (std::size_t i = 0; i < cosets.size(); ++i) {
                const auto& c = cosets[i];
                if (i) {
                    ASSERT_GT(c.rep, prev);
                }
                prev = c.rep;
                ASSERT_EQ(c.members.front(), c.rep);
                ASSERT_EQ(*std::min_element(c.members.begin(), c.members.end()), c.rep);
                for (unsigned x : c.members) {
                    ++hits[x];
                    // closed under multiplication by q^2
                    ASSERT_TRUE(c.contains(static_cast<unsigned>((1ULL * x * q2) % n)));
                }
            }
            for (unsigned x = 0; x < n; ++x) ASSERT_EQ(hits[x], 1) << "n=" << n << " x=" << x;
        }
    }
}

TEST(Cosets, ExampleModulus41) {
    const auto cosets = all_cosets(41, 4);
    ASSERT_EQ(cosets.size(), 5u);
    EXPECT_EQ(cosets[1].rep, 1u);
    EXPECT_EQ(cosets[1].members.size(), 10u);
    EXPECT_EQ(cosets[2].rep, 2u);
    EXPECT_EQ(cosets[3].rep, 3u);
    // -2 * 1 = 39 lies in the partner coset C_2.
    const auto s = skew_classify(cosets[1], 41, 2);
    EXPECT_FALSE(s.symmetric);
    EXPECT_TRUE(cosets[coset_index_of(cosets, 39)].rep == s.partner_rep);
}

TEST(Cosets, PartnerIsAnInvolution) {
    for (auto [q, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 21}, {2, 35}, {2, 41}, {3, 13}, {3, 26}, {4, 15}, {5, 13}, {5, 24}, {3, 247}}) {
        const auto cosets = all_cosets(n, q * q);
        for (const auto& c : cosets) {
            const auto s = skew_classify(c, n, q);
            const auto& partner = cosets[coset_index_of(cosets, s.partner_rep)];
            EXPECT_EQ(skew_classify(partner, n, q).partner_rep, c.rep);
            EXPECT_EQ(s.symmetric, s.partner_rep == c.rep);
        }
    }
    // C_0 is always skew symmetric.
    EXPECT_TRUE(skew_classify(all_cosets(7, 4)[0], 7, 2).symmetric);
}

TEST(Cosets, RejectsNonCoprimeLength) {
    EXPECT_THROW(all_cosets(10, 4), DomainError);
    EXPECT_THROW(DefiningSet(9, 9), DomainError);
    EXPECT_THROW(all_cosets(0, 4), DomainError);
}

TEST(DefiningSet, ClosureValidated) {
    EXPECT_THROW(DefiningSet::from_elements(7, 4, {1, 2}), DomainError);
    EXPECT_NO_THROW(DefiningSet::from_elements(7, 4, {1, 2, 4}));
    EXPECT_THROW(DefiningSet::from_reps(7, 4, {7}), DomainError);
    const auto t = DefiningSet::from_reps(7, 4, {2});
    EXPECT_EQ(t.elements(), (std::vector<unsigned>{1, 2, 4}));
    EXPECT_EQ(t.reps(), (std::vector<unsigned>{1}));
}

TEST(DefiningSet, DualContainingExamples) {
    EXPECT_TRUE(ds_dual_containing(DefiningSet::from_reps(41, 4, {1}), 2));
    EXPECT_TRUE(ds_dual_containing(DefiningSet(41, 4), 2));
    // C_0 is skew symmetric.
    EXPECT_FALSE(ds_dual_containing(DefiningSet::from_reps(41, 4, {0}), 2));
    // C_1 and its partner together.
    const auto cosets = all_cosets(41, 4);
    const unsigned partner = skew_classify(cosets[1], 41, 2).partner_rep;
    EXPECT_FALSE(ds_dual_containing(DefiningSet::from_reps(41, 4, {1, partner}), 2));
    EXPECT_THROW((void)ds_dual_containing(DefiningSet::from_reps(41, 4, {1}), 3), DomainError);
}

// The coset test agrees with direct divisibility g | g^{⊥h} on the cyclic code.
TEST(DefiningSet, AgreesWithCyclicDualContainment) {
    std::mt19937_64 rng(21);
    int positives = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned q = rng() % 2 ? 2 : 3;
        const unsigned q2 = q * q;
        unsigned n = 2 + rng() % 29;
        if (std::gcd(n, q2) != 1) continue;
        const auto cosets = all_cosets(n, q2);
        std::vector<unsigned> reps;
        for (const auto& c : cosets) {
            if (rng() % 3 == 0) reps.push_back(c.rep);
        }
        const auto t = DefiningSet::from_reps(n, q2, reps);
        const auto F = field_make(q2);
        const Poly g = gen_from_defining_set(n, F, t);
        const bool dc = ds_dual_containing(t, q);
        positives += dc;
        EXPECT_EQ(dc, p_divides(g, p_dual_gen(g, n))) << "n=" << n << " q=" << q;
    }
    EXPECT_GT(positives, 20);
}
