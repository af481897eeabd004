#include "twistlab/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace twistlab {

long long total_dim(const HomSpaceDims& dims) {
    long long s = 0;
    for (const auto& [m, d] : dims) s += d;
    return s;
}

HomSpaceDims translate(const HomSpaceDims& dims, int n) {
    HomSpaceDims out;
    for (const auto& [m, d] : dims) out[m - n] = d;
    return out;
}

HomSpaceDims& operator+=(HomSpaceDims& a, const HomSpaceDims& b) {
    for (const auto& [m, d] : b) {
        if (d == 0) continue;
        a[m] += d;
    }
    return a;
}

std::string to_string(const HomSpaceDims& dims) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [m, d] : dims) {
        if (!first) os << ", ";
        os << m << ':' << d;
        first = false;
    }
    os << '}';
    return os.str();
}

GradedAlgebra::GradedAlgebra(Field field, std::vector<std::string> vertices, std::vector<BasisElement> basis,
                             std::vector<int> idempotents)
    : field_(field),
      vertices_(std::move(vertices)),
      basis_(std::move(basis)),
      idempotents_(std::move(idempotents)),
      mult_(basis_.size() * basis_.size()) {
    const int nv = static_cast<int>(vertices_.size());
    if (idempotents_.size() != vertices_.size())
        throw std::invalid_argument("need exactly one idempotent per vertex");
    for (const BasisElement& b : basis_)
        if (b.src < 0 || b.src >= nv || b.dst < 0 || b.dst >= nv)
            throw std::invalid_argument("basis element '" + b.name + "' has an unknown endpoint");
    for (int e : idempotents_)
        if (e < 0 || e >= static_cast<int>(basis_.size())) throw std::invalid_argument("idempotent index out of range");
    std::map<std::string, int> seen;
    for (const BasisElement& b : basis_)
        if (!seen.emplace(b.name, 0).second) throw std::invalid_argument("duplicate basis name '" + b.name + "'");
    between_.assign(vertices_.size() * vertices_.size(), {});
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i)
        between_[static_cast<std::size_t>(basis_[i].src * nv + basis_[i].dst)].push_back(i);
}

GradedAlgebra GradedAlgebra::with_field(Field field) const {
    GradedAlgebra copy = *this;
    copy.field_ = field;
    return copy;
}

bool GradedAlgebra::is_idempotent(int basis_index) const {
    return std::find(idempotents_.begin(), idempotents_.end(), basis_index) != idempotents_.end();
}

int GradedAlgebra::vertex_index(const std::string& name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) throw std::out_of_range("unknown vertex '" + name + "'");
    return static_cast<int>(it - vertices_.begin());
}

int GradedAlgebra::basis_index(const std::string& name) const {
    auto it = std::find_if(basis_.begin(), basis_.end(), [&](const BasisElement& b) { return b.name == name; });
    if (it == basis_.end()) throw std::out_of_range("unknown basis element '" + name + "'");
    return static_cast<int>(it - basis_.begin());
}

void GradedAlgebra::set_product(int left, int right, Product result) {
    const std::size_t n = basis_.size();
    if (left < 0 || right < 0 || static_cast<std::size_t>(left) >= n || static_cast<std::size_t>(right) >= n)
        throw std::out_of_range("product index out of range");
    std::map<int, long long> merged;
    for (const Term& t : result) {
        if (t.basis < 0 || static_cast<std::size_t>(t.basis) >= n) throw std::out_of_range("product term out of range");
        merged[t.basis] += t.coeff;
    }
    Product canon;
    for (const auto& [b, c] : merged)
        if (c != 0) canon.push_back({b, c});
    mult_[static_cast<std::size_t>(left) * n + static_cast<std::size_t>(right)] = std::move(canon);
}

const Product& GradedAlgebra::product(int left, int right) const {
    return mult_[static_cast<std::size_t>(left) * basis_.size() + static_cast<std::size_t>(right)];
}

const std::vector<int>& GradedAlgebra::elements_between(int src, int dst) const {
    return between_.at(static_cast<std::size_t>(src) * vertices_.size() + static_cast<std::size_t>(dst));
}

// ------------------------------------------------------------------ validate

namespace {

using Combo = std::map<int, Scalar>;

Combo to_combo(const GradedAlgebra& a, const Product& p) {
    Combo c;
    for (const Term& t : p) {
        Scalar v = a.field().from_int(t.coeff);
        if (!a.field().is_zero(v)) c[t.basis] = v;
    }
    return c;
}

Combo multiply(const GradedAlgebra& a, const Combo& x, const Combo& y) {
    const Field& f = a.field();
    Combo out;
    for (const auto& [bx, cx] : x)
        for (const auto& [by, cy] : y)
            for (const Term& t : a.product(bx, by)) {
                Scalar& slot = out[t.basis];
                slot = f.add(slot, f.mul(f.mul(cx, cy), f.from_int(t.coeff)));
            }
    std::erase_if(out, [&](const auto& e) { return f.is_zero(e.second); });
    return out;
}

std::string describe(const GradedAlgebra& a, const Combo& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, v] : c) {
        if (!first) os << " + ";
        os << to_string(v) << '*' << a.element(b).name;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string ValidationReport::to_string() const {
    if (ok()) return "valid\n";
    std::ostringstream os;
    os << violations.size() << " violation(s)\n";
    for (const Violation& v : violations) {
        os << "  " << v.kind << " (";
        for (std::size_t i = 0; i < v.elements.size(); ++i) os << (i ? ", " : "") << v.elements[i];
        os << "): " << v.detail << '\n';
    }
    return os.str();
}

ValidationReport validate(const GradedAlgebra& a) {
    ValidationReport report;
    const int n = static_cast<int>(a.dim());
    const auto name = [&](int i) { return a.element(i).name; };

    for (int v = 0; v < static_cast<int>(a.num_vertices()); ++v) {
        const BasisElement& e = a.element(a.idempotent(v));
        if (e.src != v || e.dst != v || e.degree != 0)
            report.violations.push_back(
                {"structure", {e.name}, "idempotent of vertex " + a.vertices()[v] + " must be a degree-0 loop at it"});
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Product& p = a.product(x, y);
            if (p.empty()) continue;
            const BasisElement& bx = a.element(x);
            const BasisElement& by = a.element(y);
            if (by.dst != bx.src) {
                report.violations.push_back({"bookkeeping", {name(x), name(y)},
                                             "nonzero product of non-composable elements"});
                continue;
            }
            for (const Term& t : p) {
                const BasisElement& bt = a.element(t.basis);
                if (bt.src != by.src || bt.dst != bx.dst)
                    report.violations.push_back({"bookkeeping", {name(x), name(y)},
                                                 "term " + bt.name + " has the wrong endpoints"});
                if (bt.degree != bx.degree + by.degree)
                    report.violations.push_back({"degree", {name(x), name(y)},
                                                 "term " + bt.name + " has degree " + std::to_string(bt.degree) +
                                                     ", expected " + std::to_string(bx.degree + by.degree)});
            }
        }

    for (int v = 0; v < static_cast<int>(a.num_vertices()); ++v) {
        const int e = a.idempotent(v);
        for (int w = 0; w < static_cast<int>(a.num_vertices()); ++w) {
            const int f = a.idempotent(w);
            Combo got = to_combo(a, a.product(e, f));
            Combo want;
            if (v == w) want[e] = a.field().one();
            if (got != want)
                report.violations.push_back({"idempotent", {name(e), name(f)},
                                             "product is " + describe(a, got) + ", expected " + describe(a, want)});
        }
    }

    for (int x = 0; x < n; ++x) {
        const BasisElement& bx = a.element(x);
        Combo self{{x, a.field().one()}};
        for (int w = 0; w < static_cast<int>(a.num_vertices()); ++w) {
            const int e = a.idempotent(w);
            if (e == x) continue;
            Combo left = to_combo(a, a.product(e, x));
            Combo right = to_combo(a, a.product(x, e));
            Combo want_left = bx.dst == w ? self : Combo{};
            Combo want_right = bx.src == w ? self : Combo{};
            if (left != want_left)
                report.violations.push_back({"unit", {name(e), name(x)},
                                             "product is " + describe(a, left) + ", expected " + describe(a, want_left)});
            if (right != want_right)
                report.violations.push_back({"unit", {name(x), name(e)},
                                             "product is " + describe(a, right) + ", expected " + describe(a, want_right)});
        }
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Combo xy = to_combo(a, a.product(x, y));
            for (int z = 0; z < n; ++z) {
                const Combo yz = to_combo(a, a.product(y, z));
                const Combo lhs = multiply(a, xy, Combo{{z, a.field().one()}});
                const Combo rhs = multiply(a, Combo{{x, a.field().one()}}, yz);
                if (lhs != rhs)
                    report.violations.push_back({"associativity", {name(x), name(y), name(z)},
                                                 "(xy)z = " + describe(a, lhs) + " but x(yz) = " + describe(a, rhs)});
            }
        }
    return report;
}

HomSpaceDims hom_space(const GradedAlgebra& a, int i, int j) {
    const int nv = static_cast<int>(a.num_vertices());
    if (i < 0 || i >= nv || j < 0 || j >= nv) throw std::out_of_range("unknown vertex index");
    HomSpaceDims dims;
    for (int b : a.elements_between(i, j)) ++dims[a.element(b).degree];
    return dims;
}

IntMatrix cartan_euler(const GradedAlgebra& a) {
    const std::size_t nv = a.num_vertices();
    IntMatrix chi(nv, nv);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j)
            for (const auto& [m, d] : hom_space(a, static_cast<int>(i), static_cast<int>(j)))
                chi(j, i) += (m % 2 == 0 ? d : -d);
    return chi;
}

}  // namespace twistlab
