#include "twistlab/zoo.hpp"

#include <cstdlib>
#include <memory>
#include <tuple>
#include <set>
#include <stdexcept>

namespace twistlab {

namespace {

// Basis builder for one-vertex and quiver presentations.
struct Builder {
    std::vector<std::string> vertices;
    std::vector<BasisElement> basis;
    std::vector<int> idempotents;

    int add(std::string name, int src, int dst, int degree) {
        basis.push_back({std::move(name), src, dst, degree});
        return static_cast<int>(basis.size()) - 1;
    }

    GradedAlgebra finish(Field field, const std::vector<std::tuple<int, int, int>>& products) const {
        GradedAlgebra a(field, vertices, basis, idempotents);
        for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
            const int e = idempotents[static_cast<std::size_t>(v)];
            for (int x = 0; x < static_cast<int>(basis.size()); ++x) {
                if (basis[static_cast<std::size_t>(x)].dst == v) a.set_product(e, x, {{x, 1}});
                if (basis[static_cast<std::size_t>(x)].src == v) a.set_product(x, e, {{x, 1}});
            }
        }
        for (const auto& [l, r, result] : products) a.set_product(l, r, {{result, 1}});
        return a;
    }
};

std::string power_name(int k) { return k == 1 ? "h" : "h^" + std::to_string(k); }

}  // namespace

GradedAlgebra make_lambda(int d, Field field) {
    if (d < 1) throw std::invalid_argument("make_lambda needs d >= 1");
    Builder b;
    b.vertices = {"1"};
    b.idempotents = {b.add("e1", 0, 0, 0)};
    b.add("eps", 0, 0, d);
    return b.finish(field, {});
}

GradedAlgebra make_zigzag(int n, Field field) {
    if (n < 2) throw std::invalid_argument("make_zigzag needs n >= 2");
    Builder b;
    for (int i = 1; i <= n; ++i) b.vertices.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i) b.idempotents.push_back(b.add("e" + std::to_string(i + 1), i, i, 0));
    std::vector<int> a, bb, x;
    for (int i = 0; i + 1 < n; ++i) a.push_back(b.add("a" + std::to_string(i + 1), i, i + 1, 1));
    for (int i = 0; i + 1 < n; ++i) bb.push_back(b.add("b" + std::to_string(i + 1), i + 1, i, 1));
    for (int i = 0; i < n; ++i) x.push_back(b.add("x" + std::to_string(i + 1), i, i, 2));
    std::vector<std::tuple<int, int, int>> products;
    for (int i = 0; i + 1 < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        products.emplace_back(bb[k], a[k], x[k]);      // i -> i+1 -> i
        products.emplace_back(a[k], bb[k], x[k + 1]);  // i+1 -> i -> i+1
    }
    return b.finish(field, products);
}

GradedAlgebra make_truncated(int d, Field field) {
    if (d < 1) throw std::invalid_argument("make_truncated needs d >= 1");
    Builder b;
    b.vertices = {"1"};
    b.idempotents = {b.add("e1", 0, 0, 0)};
    std::vector<int> pw{b.idempotents[0]};
    for (int k = 1; k <= d; ++k) pw.push_back(b.add(power_name(k), 0, 0, 2 * k));
    std::vector<std::tuple<int, int, int>> products;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; i + j <= d; ++j)
            products.emplace_back(pw[static_cast<std::size_t>(i)], pw[static_cast<std::size_t>(j)],
                                  pw[static_cast<std::size_t>(i + j)]);
    return b.finish(field, products);
}

std::vector<TwistedComplex> projectives(const AlgebraPtr& algebra) {
    std::vector<TwistedComplex> out;
    for (int v = 0; v < static_cast<int>(algebra->num_vertices()); ++v)
        out.push_back(TwistedComplex::projective(algebra, v));
    return out;
}

namespace {

ObjectCheck check_object(const TwistedComplex& e, const HomSpaceDims& expected_end, int serre) {
    ObjectCheck out;
    const HomSpaceDims end = hom_dims(e, e);
    out.end_ok = end == expected_end;
    if (!out.end_ok) out.failures.push_back("End cohomology " + to_string(end) + ", expected " + to_string(expected_end));
    out.duality_ok = true;
    const int reach = std::abs(serre) + 2;
    for (int v = 0; v < static_cast<int>(e.algebra().num_vertices()); ++v)
        for (int k = -reach; k <= reach; ++k) {
            const TwistedComplex f = TwistedComplex::projective(e.algebra_ptr(), v, k);
            const HomSpaceDims forward = hom_dims(e, f);
            const HomSpaceDims backward = hom_dims(f, e);
            HomSpaceDims mirrored;
            for (const auto& [m, dim] : backward) mirrored[serre - m] = dim;
            if (forward != mirrored) {
                out.duality_ok = false;
                out.failures.push_back("duality fails against P" + e.algebra().vertices()[static_cast<std::size_t>(v)] +
                                       "[" + std::to_string(k) + "]: " + to_string(forward) + " vs " +
                                       to_string(mirrored));
            }
        }
    return out;
}

}  // namespace

ObjectCheck check_spherical(const TwistedComplex& e, int d) {
    return check_object(e, expected_end_dims(TwistKind::spherical, d), d);
}

ObjectCheck check_p_object(const TwistedComplex& e, int d) {
    return check_object(e, expected_end_dims(TwistKind::p_object, d), 2 * d);
}

std::vector<std::size_t> find_perp(const TwistedComplex& e, const std::vector<TwistedComplex>& candidates) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (hom_dims(e, candidates[i]).empty()) out.push_back(i);
    return out;
}

bool split_gen_criterion(TwistKind kind, int cotwist_shift, int n_max) {
    const std::set<int> ext = kind == TwistKind::spherical ? std::set<int>{0} : std::set<int>{0, -1};
    // Hom(G[n c], G) = Ext^{-n c}(G, G).
    for (int n = 1; n <= n_max; ++n)
        if (!ext.contains(-n * cotwist_shift)) return true;
    return false;
}

bool split_gen_criterion(const ModelSphericalFunctor& s, int n_max) {
    return split_gen_criterion(s.kind(), s.cotwist_shift(), n_max);
}

// ------------------------------------------------------------------ catalog

AlgebraPtr InstanceDescriptor::algebra(Field field) const {
    if (family == "lambda") return std::make_shared<const GradedAlgebra>(make_lambda(parameter, field));
    if (family == "zigzag") return std::make_shared<const GradedAlgebra>(make_zigzag(parameter, field));
    if (family == "truncated") return std::make_shared<const GradedAlgebra>(make_truncated(parameter, field));
    throw std::logic_error("unknown family " + family);
}

TwistedComplex InstanceDescriptor::object(const AlgebraPtr& algebra) const {
    return TwistedComplex::projective(algebra, algebra->vertex_index(object_label));
}

ModelSphericalFunctor InstanceDescriptor::functor(const AlgebraPtr& algebra) const {
    return ModelSphericalFunctor(object(algebra), kind, d);
}

namespace {

IntMatrix diagonal1(long long v) {
    IntMatrix m(1, 1);
    m(0, 0) = v;
    return m;
}

IntMatrix cartan_a(int n) {
    IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        m(i, i) = 2;
        if (i + 1 < static_cast<std::size_t>(n)) m(i, i + 1) = m(i + 1, i) = -1;
    }
    return m;
}

std::vector<InstanceDescriptor> build_catalog() {
    std::vector<InstanceDescriptor> out;
    for (int d = 1; d <= 5; ++d) {
        InstanceDescriptor i;
        i.name = "lambda" + std::to_string(d);
        i.family = "lambda";
        i.parameter = d;
        i.kind = TwistKind::spherical;
        i.d = d;
        i.object_label = "1";
        i.default_functor = "stwist:E";
        i.expected_euler = diagonal1(1 + (d % 2 == 0 ? 1 : -1));
        i.predictions = {
            {"entropy lower bound", "(1-d)t = " + std::to_string(1 - d) + "t", "theorem: twist entropy lower bound"},
            {"entropy upper bound", "max(0, " + std::to_string(1 - d) + "t)", "theorem: twist entropy upper bound"},
            {"twist of E", "E[" + std::to_string(1 - d) + "]", "oracle: chain computation"},
            {"perp among projectives", "none", "oracle: Hom(E, E) nonzero"},
        };
        out.push_back(std::move(i));
    }
    for (int n = 2; n <= 5; ++n) {
        InstanceDescriptor i;
        i.name = "zigzag" + std::to_string(n);
        i.family = "zigzag";
        i.parameter = n;
        i.kind = TwistKind::spherical;
        i.d = 2;
        i.object_label = "1";
        i.default_functor = "stwist:P1";
        i.expected_euler = cartan_a(n);
        for (int v = 3; v <= n; ++v) i.expected_perp.push_back("P" + std::to_string(v));
        i.predictions = {
            {"entropy lower bound", "-t", "theorem: twist entropy lower bound"},
            {"entropy upper bound", "max(0, -t)", "theorem: twist entropy upper bound"},
            {"entropy for t >= 0", n >= 3 ? "0" : "undetermined", "theorem: nonempty perp"},
            {"twist of P1", "P1[-1]", "oracle: chain computation"},
            {"spectral radius of [T_P1]", "1", "oracle: reflection matrix"},
        };
        out.push_back(std::move(i));
    }
    for (int d = 1; d <= 3; ++d) {
        InstanceDescriptor i;
        i.name = "truncated" + std::to_string(d);
        i.family = "truncated";
        i.parameter = d;
        i.kind = TwistKind::p_object;
        i.d = d;
        i.object_label = "1";
        i.default_functor = "ptwist:E";
        i.expected_euler = diagonal1(d + 1);
        i.predictions = {
            {"entropy lower bound", std::to_string(-2 * d) + "t", "theorem: P-twist entropy lower bound"},
            {"entropy upper bound", "max(0, " + std::to_string(-2 * d) + "t)", "theorem: P-twist entropy upper bound"},
            {"P-twist of E", "E[" + std::to_string(-2 * d) + "]", "oracle: chain computation"},
        };
        out.push_back(std::move(i));
    }
    return out;
}

}  // namespace

const std::vector<InstanceDescriptor>& catalog() {
    static const std::vector<InstanceDescriptor> c = build_catalog();
    return c;
}

const InstanceDescriptor& find_instance(const std::string& name) {
    for (const InstanceDescriptor& i : catalog())
        if (i.name == name) return i;
    throw std::out_of_range("unknown instance '" + name + "'");
}

}  // namespace twistlab
