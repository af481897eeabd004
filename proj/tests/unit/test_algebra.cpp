#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "twistlab/io.hpp"
#include "twistlab/zoo.hpp"

using namespace twistlab;

namespace {

GradedAlgebra one_vertex() {
    GradedAlgebra k(Field(), {"1"}, {{"e1", 0, 0, 0}}, {0});
    k.set_product(0, 0, {{0, 1}});
    return k;
}

// every basis triple, straight from the structure constants
std::set<std::vector<std::string>> failing_triples(const GradedAlgebra& a) {
    const oracle::i64 p = 32003;
    std::set<std::vector<std::string>> out;
    for (int x = 0; x < static_cast<int>(a.dim()); ++x)
        for (int y = 0; y < static_cast<int>(a.dim()); ++y)
            for (int z = 0; z < static_cast<int>(a.dim()); ++z) {
                const oracle::Entry ex{{x, 1}}, ey{{y, 1}}, ez{{z, 1}};
                if (oracle::mul(a, oracle::mul(a, ex, ey, p), ez, p) != oracle::mul(a, ex, oracle::mul(a, ey, ez, p), p))
                    out.insert({a.element(x).name, a.element(y).name, a.element(z).name});
            }
    return out;
}

std::set<std::pair<std::string, std::vector<std::string>>> violation_set(const ValidationReport& r) {
    std::set<std::pair<std::string, std::vector<std::string>>> s;
    for (const auto& v : r.violations) s.insert({v.kind, v.elements});
    return s;
}

}  // namespace

TEST_SUITE("algebra-core") {
    TEST_CASE("one-vertex algebra") {
        const GradedAlgebra k = one_vertex();
        CHECK(validate(k).ok());
        CHECK(hom_space(k, 0, 0) == HomSpaceDims{{0, 1}});
        CHECK(cartan_euler(k) == IntMatrix{{1}});
    }

    TEST_CASE("A_3 zigzag is valid, with 10 basis elements") {
        const GradedAlgebra z = make_zigzag(3);
        CHECK(z.dim() == 10);
        CHECK(validate(z).ok());
        CHECK(failing_triples(z).empty());
    }

    TEST_CASE("all zoo algebras validate, over both fields") {
        for (const auto& inst : catalog())
            for (const Field& f : {Field::prime(), Field::rationals()}) {
                const AlgebraPtr a = inst.algebra(f);
                INFO(inst.name);
                CHECK(validate(*a).ok());
                CHECK(failing_triples(*a).empty());
            }
    }

    TEST_CASE("A_3 zigzag with one relation omitted: the associativity failure is located") {
        const GradedAlgebra z = make_zigzag(3);
        nlohmann::json doc = algebra_to_json(z);
        auto& mult = doc["mult"];
        mult.erase(std::remove_if(mult.begin(), mult.end(),
                                  [](const nlohmann::json& m) { return m["left"] == "x1" && m["right"] == "e1"; }),
                   mult.end());
        const GradedAlgebra broken = algebra_from_json(doc);
        const ValidationReport rep = validate(broken);
        CHECK_FALSE(rep.ok());
        std::set<std::vector<std::string>> reported;
        for (const auto& v : rep.violations)
            if (v.kind == "associativity") reported.insert(v.elements);
        const auto expected = failing_triples(broken);
        CHECK_FALSE(expected.empty());
        CHECK(reported == expected);
        CHECK(expected.contains({"b1", "a1", "e1"}));
    }

    TEST_CASE("hom_space examples") {
        const GradedAlgebra z = make_zigzag(3);
        CHECK(hom_space(z, 0, 0) == HomSpaceDims{{0, 1}, {2, 1}});
        CHECK(hom_space(z, 0, 2).empty());
        CHECK(hom_space(z, 0, 1) == HomSpaceDims{{1, 1}});
        CHECK_THROWS(z.vertex_index("7"));
    }

    TEST_CASE("cartan_euler examples") {
        CHECK(cartan_euler(make_zigzag(3)) == IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
        for (int d = 1; d <= 5; ++d) CHECK(cartan_euler(make_lambda(d)) == IntMatrix{{d % 2 == 0 ? 2 : 0}});
    }

    TEST_CASE("hom_space dims add up to the basis count") {
        for (const auto& inst : catalog()) {
            const AlgebraPtr a = inst.algebra();
            for (int i = 0; i < static_cast<int>(a->num_vertices()); ++i)
                for (int j = 0; j < static_cast<int>(a->num_vertices()); ++j) {
                    long long count = 0;
                    for (const auto& b : a->basis()) count += (b.src == i && b.dst == j);
                    CHECK(total_dim(hom_space(*a, i, j)) == count);
                }
        }
    }

    TEST_CASE("graded-symmetric zoo algebras: chi(j, i) = (-1)^top chi(i, j)") {
        for (const auto& inst : catalog()) {
            const AlgebraPtr a = inst.algebra();
            int top = 0;
            for (const auto& b : a->basis()) top = std::max(top, b.degree);
            const IntMatrix chi = cartan_euler(*a);
            for (std::size_t i = 0; i < chi.rows(); ++i)
                for (std::size_t j = 0; j < chi.cols(); ++j) CHECK(chi(j, i) == (top % 2 == 0 ? 1 : -1) * chi(i, j));
        }
    }

    TEST_CASE("validate is deterministic and independent of input order") {
        const GradedAlgebra z = make_zigzag(4);
        nlohmann::json doc = algebra_to_json(z);
        // break two products
        auto& mult = doc["mult"];
        mult.erase(std::remove_if(mult.begin(), mult.end(),
                                  [](const nlohmann::json& m) {
                                      return (m["left"] == "x2" && m["right"] == "e2") || (m["left"] == "e3" && m["right"] == "a2");
                                  }),
                   mult.end());
        doc.erase("idempotents");
        const auto base = violation_set(validate(algebra_from_json(doc)));
        CHECK_FALSE(base.empty());
        CHECK(validate(algebra_from_json(doc)).to_string() == validate(algebra_from_json(doc)).to_string());
        std::mt19937_64 rng(3);
        for (int k = 0; k < 5; ++k) {
            nlohmann::json shuffled = doc;
            std::shuffle(shuffled["mult"].begin(), shuffled["mult"].end(), rng);
            std::shuffle(shuffled["basis"].begin(), shuffled["basis"].end(), rng);
            CHECK(violation_set(validate(algebra_from_json(shuffled))) == base);
        }
    }

    TEST_CASE("degree and bookkeeping violations are reported, not thrown") {
        GradedAlgebra a(Field(), {"1", "2"}, {{"e1", 0, 0, 0}, {"e2", 1, 1, 0}, {"a", 0, 1, 1}}, {0, 1});
        a.set_product(0, 0, {{0, 1}});
        a.set_product(1, 1, {{1, 1}});
        a.set_product(1, 2, {{2, 1}});
        a.set_product(2, 0, {{2, 1}});
        CHECK(validate(a).ok());
        a.set_product(2, 2, {{0, 1}});  // a * a: endpoints do not compose
        const ValidationReport rep = validate(a);
        CHECK_FALSE(rep.ok());
        bool seen = false;
        for (const auto& v : rep.violations) seen = seen || v.kind == "bookkeeping" || v.kind == "degree";
        CHECK(seen);
    }
}
