#include <gtest/gtest.h>

#include "klsf/formulas.hpp"
#include "klsf/sumset.hpp"
#include "klsf/witness.hpp"

using namespace klsf;
using namespace klsf::witness;

namespace {

const KLParams k21{2, 1};
const KLParams k31{3, 1};

void expect_certificate(const APWitness& w) {
    ASSERT_TRUE(w.certificate.has_value());
    const auto& c = *w.certificate;
    const Int d = w.modulus;
    const Int dl = formulas::delta(d, w.kl);
    const Int len = w.length - 1;
    EXPECT_EQ(w.kl.l * len, dl * c.q - c.r);
    EXPECT_GE(c.r, 1);
    EXPECT_LE(c.r, dl);
    EXPECT_EQ(dl, w.kl.difference() * c.u + d * c.w);
    EXPECT_GE(c.u, 0);
    EXPECT_LT(c.u, d);
    EXPECT_EQ(w.start, mod_floor(c.u * c.q, d));
    EXPECT_TRUE(w.certificate_holds());
}

}  // namespace

TEST(APWitnessTest, Z10_31) {
    const auto w = ap_witness(10, k31, 1);
    ASSERT_TRUE(w.certificate.has_value());
    EXPECT_EQ(w.certificate->q, 1);
    EXPECT_EQ(w.certificate->r, 1);
    EXPECT_EQ(w.certificate->u, 1);
    EXPECT_EQ(w.certificate->w, 0);
    EXPECT_EQ(w.start, 1);
    EXPECT_EQ(w.elements(), (std::vector<Int>{1, 2}));
    expect_certificate(w);
}

TEST(APWitnessTest, Z7_21) {
    const auto w = ap_witness(7, k21, 1);
    EXPECT_EQ(w.certificate->q, 2);
    EXPECT_EQ(w.certificate->r, 1);
    EXPECT_EQ(w.certificate->u, 1);
    EXPECT_EQ(w.elements(), (std::vector<Int>{2, 3}));
    EXPECT_EQ(h_fold(w.to_subset(), 2), Subset::from_indices(GroupSpec::cyclic(7), {4, 5, 6}));
}

TEST(APWitnessTest, Singleton) {
    for (Int d = 2; d <= 40; ++d) {
        for (Int k = 2; k <= 6; ++k) {
            for (Int l = 1; l < k; ++l) {
                const auto kl = KLParams::make(k, l);
                if (d - 1 - formulas::delta(d, kl) < 0) {
                    EXPECT_THROW(ap_witness(d, kl, 0), std::invalid_argument);
                    continue;
                }
                const auto w = ap_witness(d, kl, 0);
                EXPECT_EQ(w.length, 1);
                EXPECT_NE(mod_floor(k * w.start, d), mod_floor(l * w.start, d));
                expect_certificate(w);
            }
        }
    }
}

TEST(APWitnessTest, RejectsTooLong) {
    EXPECT_THROW(ap_witness(10, k31, 2), std::invalid_argument);
    EXPECT_THROW(ap_witness(10, k31, -1), std::invalid_argument);
}

TEST(APWitnessMax, Examples) {
    EXPECT_EQ(ap_witness_max(10, k31)->length, 2);
    EXPECT_EQ(ap_witness_max(7, k21)->length, 2);
    EXPECT_EQ(ap_witness_max(3, KLParams::make(5, 1))->length, 1);
    EXPECT_FALSE(ap_witness_max(2, k31).has_value());
    EXPECT_FALSE(ap_witness_max(1, k21).has_value());
}

TEST(APWitnessMax, SizeMatchesLowerTerm) {
    for (Int d = 2; d <= 300; ++d) {
        for (Int k = 2; k <= 6; ++k) {
            for (Int l = 1; l < k; ++l) {
                const auto kl = KLParams::make(k, l);
                const auto w = ap_witness_max(d, kl);
                const Int term = formulas::lower_term(d, d, kl);
                EXPECT_EQ(w ? w->length : 0, term) << d << " " << k << " " << l;
                if (w) {
                    expect_certificate(*w);
                    EXPECT_TRUE(is_kl_sum_free(w->to_subset(), k, l));
                }
            }
        }
    }
}

TEST(CosetWitnessTest, Examples) {
    EXPECT_EQ(coset_union_witness(10, 5, k31).members(), (std::vector<std::size_t>{1, 6}));
    EXPECT_EQ(coset_union_witness(9, 3, k21).members(), (std::vector<std::size_t>{1, 4, 7}));
    EXPECT_THROW(coset_union_witness(10, 2, k31), std::invalid_argument);
    EXPECT_THROW(coset_union_witness(10, 3, k31), std::invalid_argument);
}

TEST(CosetWitnessTest, LiesInOneCoset) {
    for (Int n = 2; n <= 120; ++n) {
        for (Int k = 2; k <= 6; ++k) {
            for (Int l = 1; l < k; ++l) {
                const auto kl = KLParams::make(k, l);
                for (Int d : divisor_sets(n, kl).d1) {
                    const auto s = coset_union_witness(n, d, kl);
                    EXPECT_EQ(static_cast<Int>(s.size()), n / d);
                    for (auto x : s.members()) EXPECT_EQ(static_cast<Int>(x) % d, 1 % d);
                    EXPECT_TRUE(is_kl_sum_free(s, k, l));
                }
            }
        }
    }
}

TEST(SixModEight, Examples) {
    const auto a = six_mod_eight_witness(14);
    EXPECT_EQ(a.start, 2);
    EXPECT_EQ(a.elements(), (std::vector<Int>{2, 3, 4, 5}));
    const auto b = six_mod_eight_witness(22);
    EXPECT_EQ(b.start, 3);
    EXPECT_EQ(b.length, 6);
    EXPECT_THROW(six_mod_eight_witness(10), std::invalid_argument);
    EXPECT_THROW(six_mod_eight_witness(30), std::invalid_argument);
}

TEST(SixModEight, CoversEveryNonzeroResidue) {
    int exercised = 0;
    for (Int n = 6; n <= 500; n += 8) {
        if (n % 3 == 0) continue;
        ++exercised;
        const auto w = six_mod_eight_witness(n);
        EXPECT_EQ(w.length, formulas::alpha_31(n));
        const auto diff = difference_sumset(w.to_subset(), 3, 1);
        auto expect = Subset::full(GroupSpec::cyclic(n));
        expect.erase(0);
        EXPECT_EQ(diff, expect) << n;
    }
    EXPECT_GT(exercised, 30);
}

TEST(Lift, Examples) {
    const auto z5 = GroupSpec::cyclic(5);
    EXPECT_FALSE(is_kl_sum_free(Subset::from_indices(z5, {1, 2}), 3, 1));
    EXPECT_THROW(lift_witness(Subset::from_indices(z5, {1, 2}), GroupSpec::cyclic(10), k31), std::invalid_argument);

    const auto a = lift_witness(Subset::from_indices(z5, {1}), GroupSpec::cyclic(10), k31);
    EXPECT_EQ(a.members.members(), (std::vector<std::size_t>{1, 6}));

    const auto z2 = GroupSpec::cyclic(2);
    const auto g = make_group({2, 2});
    const auto b = lift_witness(Subset::from_indices(z2, {1}), g, k21);
    EXPECT_EQ(b.members, Subset::from_elements(g, std::vector<Element>{{{0, 1}}, {{1, 1}}}));

    EXPECT_TRUE(lift_witness(Subset(z5), GroupSpec::cyclic(10), k31).members.empty());
    EXPECT_THROW(lift_witness(Subset::from_indices(z5, {1}), GroupSpec::cyclic(8), k31), std::invalid_argument);
}

TEST(BestWitness, Examples) {
    EXPECT_EQ(best_witness(GroupSpec::cyclic(10), k31).members.size(), 2u);
    EXPECT_EQ(best_witness(make_group({2, 4}), k21).members.size(), 4u);
    const auto none = best_witness(GroupSpec::cyclic(4), KLParams::make(5, 1));
    EXPECT_TRUE(none.members.empty());
    EXPECT_TRUE(std::holds_alternative<std::monostate>(none.base));
}

TEST(BestWitness, TiesGoToSmallestDivisor) {
    // Z_10, (3,1): d = 5 and d = 10 both give 2.
    const auto w = best_witness(GroupSpec::cyclic(10), k31);
    EXPECT_EQ(w.base_modulus, 5);
}

TEST(BestWitness, MeetsLowerBound) {
    for (Int n = 2; n <= 60; ++n) {
        for (const auto& g : abelian_groups_of_order(n)) {
            for (Int k = 2; k <= 5; ++k) {
                for (Int l = 1; l < k; ++l) {
                    const auto kl = KLParams::make(k, l);
                    const auto w = best_witness(g, kl);
                    EXPECT_EQ(static_cast<Int>(w.members.size()), formulas::lambda_bounds_general(g, kl).lower)
                        << g.to_string() << " " << k << "," << l;
                    EXPECT_TRUE(is_kl_sum_free(w.members, k, l));
                    EXPECT_EQ(w.members.size(), static_cast<std::size_t>(w.base_size * n / w.base_modulus));
                    if (const auto* ap = std::get_if<APWitness>(&w.base)) expect_certificate(*ap);
                }
            }
        }
    }
}
