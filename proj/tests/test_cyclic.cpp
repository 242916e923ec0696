#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcq/cyclic.hpp"

using namespace qcq;

TEST(Cyclic, GeneratorsForModulus41) {
    const auto F = field_make(4);
    const Poly g1 = gen_from_defining_set(41, F, DefiningSet::from_reps(41, 4, {1}));
    const Poly g2 = gen_from_defining_set(41, F, DefiningSet::from_reps(41, 4, {3}));
    EXPECT_EQ(p_format(g1), "10320102301");
    EXPECT_EQ(p_format(g2, RunStyle::braced), "12^{3}1312^{3}1");
}

TEST(Cyclic, DefiningSetRoundTripOverAllDivisors) {
    for (unsigned q2 : {4u, 9u, 16u, 25u}) {
        const auto F = field_make(q2);
        for (unsigned n : {3u, 7u, 8u, 11u, 12u, 13u}) {
            if (n % F->characteristic() == 0) continue;
            for (const Poly& g : oracle::monic_divisors(F, n)) {
                const DefiningSet t = defining_set_of(g, n);
                EXPECT_EQ(static_cast<long>(t.size()), g.degree());
                EXPECT_EQ(gen_from_defining_set(n, F, t), g) << "q2=" << q2 << " n=" << n << " g=" << p_format(g);
                const CyclicCode c(n, g);
                EXPECT_EQ(cyclic_dim(c), n - t.size());
                EXPECT_EQ(oracle::rank(*F, oracle::cyclic_rows(g, n)), cyclic_dim(c));
            }
        }
    }
}

TEST(Cyclic, EveryFixtureGeneratorDividesXnMinus1) {
    for (const auto& f : test_fixtures()) {
        if (!f.has_code()) continue;
        const auto F = field_make(f.q2);
        for (const auto* s : {&*f.g1, &*f.g2}) {
            const Poly g = p_parse(*s, F);
            const auto t = defining_set_of(g, *f.n);
            EXPECT_EQ(gen_from_defining_set(*f.n, F, t), g.monic()) << f.id;
        }
    }
}

TEST(Cyclic, RejectsNonDivisors) {
    const auto F = field_make(4);
    EXPECT_THROW(CyclicCode(5, p_parse("12", F)), DomainError);
    EXPECT_THROW((void)defining_set_of(p_parse("111", F), 5), DomainError);
    EXPECT_THROW((void)gen_from_defining_set(5, F, DefiningSet::from_reps(7, 4, {1})), DomainError);
}

TEST(Cyclic, EmptyAndFullDefiningSets) {
    const auto F = field_make(9);
    EXPECT_EQ(gen_from_defining_set(10, F, DefiningSet(10, 9)), Poly::one(F));
    std::vector<unsigned> all(10);
    for (unsigned i = 0; i < 10; ++i) all[i] = i;
    EXPECT_EQ(gen_from_defining_set(10, F, DefiningSet::from_elements(10, 9, all)), Poly::xn_minus_1(F, 10));
}
