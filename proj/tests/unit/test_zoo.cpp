#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "twistlab/knum.hpp"
#include "twistlab/zoo.hpp"

using namespace twistlab;

namespace {

std::map<int, long long> as_map(const HomSpaceDims& d) { return {d.begin(), d.end()}; }

}  // namespace

TEST_SUITE("zoo") {
    TEST_CASE("constructors") {
        for (int n = 2; n <= 5; ++n) CHECK(make_zigzag(n).dim() == static_cast<std::size_t>(4 * n - 2));
        for (int d = 1; d <= 4; ++d) {
            CHECK(make_lambda(d).dim() == 2);
            CHECK(make_truncated(d).dim() == static_cast<std::size_t>(d + 1));
            CHECK(hom_space(make_truncated(d), 0, 0).size() == static_cast<std::size_t>(d + 1));
        }
        CHECK_THROWS(make_lambda(0));
        CHECK_THROWS(make_zigzag(1));
        CHECK(make_zigzag(3, Field::rationals()).field().characteristic() == 0);
    }

    TEST_CASE("catalog: Euler form, objects, perp, predictions") {
        CHECK(catalog().size() >= 10);
        for (const auto& inst : catalog()) {
            INFO(inst.name);
            const AlgebraPtr a = inst.algebra();
            CHECK(cartan_euler(*a) == inst.expected_euler);
            const TwistedComplex e = inst.object(a);
            const ObjectCheck oc = inst.kind == TwistKind::spherical ? check_spherical(e, inst.d) : check_p_object(e, inst.d);
            CHECK(oc.ok());
            CHECK(oc.failures.empty());
            std::vector<std::string> perp;
            const auto ps = projectives(a);
            for (std::size_t i : find_perp(e, ps)) perp.push_back("P" + a->vertices()[i]);
            CHECK(perp == inst.expected_perp);
            // independent check of the perp: Hom*(E, P) vanishes exactly there
            for (std::size_t i = 0; i < ps.size(); ++i) {
                const bool in_perp = oracle::hom_dims(e, ps[i]).empty();
                CHECK(in_perp == (std::find(perp.begin(), perp.end(), "P" + a->vertices()[i]) != perp.end()));
            }
            CHECK_FALSE(inst.predictions.empty());
            CHECK_NOTHROW(EndofunctorSpec::parse(inst.default_functor, a, e));
            CHECK(&find_instance(inst.name) == &inst);
        }
        CHECK_THROWS_AS(find_instance("zigzag99"), std::out_of_range);
    }

    TEST_CASE("object checks reject the wrong objects") {
        const AlgebraPtr a = std::make_shared<const GradedAlgebra>(make_zigzag(3));
        const auto p = projectives(a);
        CHECK_FALSE(check_spherical(p[0], 3).ok());
        CHECK_FALSE(check_spherical(direct_sum(p[0], p[1]), 2).ok());
        CHECK_FALSE(check_p_object(p[0], 2).ok());
        // P1 is a P^1-object
        CHECK(check_p_object(p[0], 1).ok());
    }

    TEST_CASE("split generation criterion") {
        CHECK(split_gen_criterion(TwistKind::spherical, -3, 5));
        CHECK_FALSE(split_gen_criterion(TwistKind::spherical, 0, 5));
        CHECK_FALSE(split_gen_criterion(TwistKind::p_object, 0, 5));
        CHECK(split_gen_criterion(TwistKind::p_object, 1, 2));
        CHECK_FALSE(split_gen_criterion(TwistKind::p_object, 1, 1));
        for (const auto& inst : catalog()) CHECK(split_gen_criterion(inst.functor(inst.algebra()), 6));
    }

    TEST_CASE("Hom dims against G survive minimize, every zoo algebra") {
        for (const auto& inst : catalog()) {
            const AlgebraPtr a = inst.algebra();
            const TwistedComplex g = TwistedComplex::generator(a);
            gen::Rng rng(300 + inst.parameter * 7 + static_cast<int>(inst.family.size()));
            for (int k = 0; k < 20; ++k) {
                const TwistedComplex x = gen::random_complex(a, rng);
                INFO(inst.name);
                const auto before = oracle::hom_dims(g, x);
                CHECK(oracle::hom_dims(g, minimize(x)) == before);
                CHECK(as_map(hom_dims(g, minimize(x))) == before);
            }
        }
    }
}
