#include "twistlab/functor.hpp"

#include <sstream>

namespace twistlab {

HomSpaceDims expected_end_dims(TwistKind kind, int d) {
    HomSpaceDims out;
    if (kind == TwistKind::spherical) {
        out[0] += 1;
        out[d] += 1;
    } else {
        for (int k = 0; k <= d; ++k) out[2 * k] = 1;
    }
    return out;
}

namespace {

void check_spherical_dims(const TwistedComplex& e) {
    const HomSpaceDims dims = hom_dims(e, e);
    if (dims.size() == 2 && dims.count(0) && dims.at(0) == 1 && dims.rbegin()->first >= 1 && dims.rbegin()->second == 1)
        return;
    throw std::invalid_argument("object is not spherical: End cohomology " + to_string(dims));
}

void check_p_dims(const TwistedComplex& e) {
    const HomSpaceDims dims = hom_dims(e, e);
    const int d = dims.empty() ? 0 : dims.rbegin()->first / 2;
    if (d >= 1 && dims == expected_end_dims(TwistKind::p_object, d)) return;
    throw std::invalid_argument("object is not a P-object: End cohomology " + to_string(dims));
}

// Direct sum of shifted copies of E, one per representative, with the
// evaluation components into F.
struct Evaluation {
    TwistedComplex source;
    MorphismMatrix components;
};

struct RepBlock {
    int degree;
    ChainMap rep;
};

std::vector<RepBlock> all_representatives(const HomComplex& h) {
    std::vector<RepBlock> out;
    for (const auto& [m, dim] : h.cohomology())
        for (ChainMap& r : h.representatives(m)) out.push_back({m, std::move(r)});
    return out;
}

Evaluation evaluation(const TwistedComplex& e, const std::vector<RepBlock>& reps, int extra_shift = 0) {
    std::vector<TwistedComplex> parts;
    MorphismMatrix comp;
    int off = 0;
    for (const RepBlock& r : reps) {
        parts.push_back(shift(e, -r.degree - extra_shift));
        for (const auto& [key, el] : r.rep.components()) comp[{key.first, key.second + off}] = el;
        off += static_cast<int>(e.size());
    }
    return {direct_sum(parts, e.algebra_ptr()), std::move(comp)};
}

}  // namespace

ModelSphericalFunctor::ModelSphericalFunctor(TwistedComplex e, TwistKind kind, int d, bool check)
    : e_(std::move(e)), kind_(kind), d_(d) {
    if (d < 1) throw std::invalid_argument("model functor needs d >= 1");
    if (check) {
        const HomSpaceDims dims = hom_dims(e_, e_);
        if (dims != expected_end_dims(kind, d))
            throw std::invalid_argument("End cohomology " + to_string(dims) + " does not match " +
                                        to_string(expected_end_dims(kind, d)));
    }
}

TwistedComplex ModelSphericalFunctor::twist(const TwistedComplex& f) const {
    return kind_ == TwistKind::spherical ? spherical_twist(e_, f, false) : p_twist(e_, f, false);
}

TwistedComplex spherical_twist(const TwistedComplex& e, const TwistedComplex& f, bool check, bool reduce) {
    if (check) check_spherical_dims(e);
    const HomComplex h(e, f);
    const std::vector<RepBlock> reps = all_representatives(h);
    if (reps.empty()) return reduce ? minimize(f) : f;
    Evaluation ev = evaluation(e, reps);
    TwistedComplex out = cone(ChainMap(ev.source, f, 0, std::move(ev.components)));
    return reduce ? minimize(out) : out;
}

TwistedComplex p_twist(const TwistedComplex& e, const TwistedComplex& f, bool check, bool reduce) {
    if (check) check_p_dims(e);
    const HomComplex end(e, e);
    const std::vector<ChainMap> hs = end.representatives(2);
    if (hs.size() != 1) throw DegenerateInstance("no unique degree-2 endomorphism class h");
    const ChainMap& h = hs.front();

    const HomComplex hom(e, f);
    const std::vector<RepBlock> reps = all_representatives(hom);
    if (reps.empty()) return reduce ? minimize(f) : f;

    const Field& field = e.algebra().field();
    const int block = static_cast<int>(e.size());
    // Position of each representative inside its degree, to locate the
    // B-block of a class expressed in the representatives(m) basis.
    std::map<int, std::vector<int>> block_of_degree;
    for (int k = 0; k < static_cast<int>(reps.size()); ++k) block_of_degree[reps[static_cast<std::size_t>(k)].degree].push_back(k);

    const Evaluation b = evaluation(e, reps);
    const Evaluation a = evaluation(e, reps, 2);

    MorphismMatrix mu;
    const Scalar minus_one = field.neg(field.one());
    for (int k = 0; k < static_cast<int>(reps.size()); ++k) {
        const RepBlock& r = reps[static_cast<std::size_t>(k)];
        for (const auto& [key, el] : h.components())
            mu[{key.first + k * block, key.second + k * block}] = element_scale(field, el, minus_one);
        const auto coords = hom.class_coordinates(compose(r.rep, h));
        if (!coords) throw DegenerateInstance("h* of a representative is not closed");
        const auto& targets = block_of_degree[r.degree + 2];
        for (std::size_t j = 0; j < coords->size(); ++j) {
            const Scalar& c = (*coords)[j];
            if (field.is_zero(c)) continue;
            const int t = targets.at(j);
            for (int s = 0; s < block; ++s) {
                const int vertex = e.summands()[static_cast<std::size_t>(s)].vertex;
                Element& slot = mu[{t * block + s, k * block + s}];
                element_axpy(field, slot, c, basis_element(e.algebra(), e.algebra().idempotent(vertex)));
            }
        }
    }
    const ChainMap mu_map(a.source, b.source, 0, std::move(mu));
    const ChainMap ev(b.source, f, 0, b.components);
    const auto kappa = HomComplex(a.source, f).primitive(compose(ev, mu_map));
    if (!kappa) throw DegenerateInstance("evaluation of h* (x) id - id (x) h is not null-homotopic");

    const TwistedComplex inner = cone(mu_map);
    MorphismMatrix g = b.components;
    const int nb = static_cast<int>(b.source.size());
    for (const auto& [key, el] : kappa->components()) g[{key.first, key.second + nb}] = el;
    TwistedComplex out = cone(ChainMap(inner, f, 0, std::move(g)));
    return reduce ? minimize(out) : out;
}

// ---------------------------------------------------------------- words

EndofunctorSpec::EndofunctorSpec(std::vector<FunctorStep> steps) : steps_(std::move(steps)) {
    const GradedAlgebra* alg = nullptr;
    for (const FunctorStep& s : steps_) {
        if (!s.object) continue;
        if (alg && !(*alg == s.object->algebra())) throw std::invalid_argument("functor word mixes algebras");
        alg = &s.object->algebra();
    }
}

EndofunctorSpec EndofunctorSpec::identity() { return EndofunctorSpec({FunctorStep{}}); }

EndofunctorSpec EndofunctorSpec::shift(int n) {
    return EndofunctorSpec({FunctorStep{FunctorStep::Kind::shift, n, {}, std::nullopt}});
}

EndofunctorSpec EndofunctorSpec::spherical_twist(const TwistedComplex& e, std::string label) {
    check_spherical_dims(e);
    return EndofunctorSpec({FunctorStep{FunctorStep::Kind::spherical_twist, 0, std::move(label), e}});
}

EndofunctorSpec EndofunctorSpec::p_twist(const TwistedComplex& e, std::string label) {
    check_p_dims(e);
    return EndofunctorSpec({FunctorStep{FunctorStep::Kind::p_twist, 0, std::move(label), e}});
}

EndofunctorSpec EndofunctorSpec::parse(const std::string& word, const AlgebraPtr& algebra,
                                       const std::optional<TwistedComplex>& distinguished) {
    std::vector<FunctorStep> steps;
    std::stringstream in(word);
    std::string letter;
    while (std::getline(in, letter, ';')) {
        const auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        letter = trim(letter);
        if (letter.empty()) throw std::invalid_argument("empty letter in functor word '" + word + "'");
        if (letter == "id") {
            steps.push_back(FunctorStep{});
            continue;
        }
        const auto colon = letter.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("unknown functor letter '" + letter + "'");
        const std::string head = letter.substr(0, colon);
        const std::string arg = trim(letter.substr(colon + 1));
        if (head == "shift") {
            std::size_t used = 0;
            int n = 0;
            try {
                n = std::stoi(arg, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != arg.size()) throw std::invalid_argument("bad shift amount in '" + letter + "'");
            steps.push_back(FunctorStep{FunctorStep::Kind::shift, n, {}, std::nullopt});
            continue;
        }
        if (head != "stwist" && head != "ptwist") throw std::invalid_argument("unknown functor letter '" + letter + "'");
        TwistedComplex object;
        if (arg == "E") {
            if (!distinguished) throw std::invalid_argument("label E needs an instance object");
            object = *distinguished;
        } else if (arg.size() > 1 && arg[0] == 'P') {
            int v = -1;
            try {
                v = algebra->vertex_index(arg.substr(1));
            } catch (const std::out_of_range&) {
                throw std::invalid_argument("unknown vertex in label '" + arg + "'");
            }
            object = TwistedComplex::projective(algebra, v);
        } else {
            throw std::invalid_argument("bad object label '" + arg + "'");
        }
        if (head == "stwist") {
            check_spherical_dims(object);
            steps.push_back(FunctorStep{FunctorStep::Kind::spherical_twist, 0, arg, object});
        } else {
            check_p_dims(object);
            steps.push_back(FunctorStep{FunctorStep::Kind::p_twist, 0, arg, object});
        }
    }
    if (steps.empty()) throw std::invalid_argument("empty functor word");
    return EndofunctorSpec(std::move(steps));
}

std::string EndofunctorSpec::to_string() const {
    std::string out;
    for (const FunctorStep& s : steps_) {
        if (!out.empty()) out += ';';
        switch (s.kind) {
            case FunctorStep::Kind::identity: out += "id"; break;
            case FunctorStep::Kind::shift: out += "shift:" + std::to_string(s.amount); break;
            case FunctorStep::Kind::spherical_twist: out += "stwist:" + s.label; break;
            case FunctorStep::Kind::p_twist: out += "ptwist:" + s.label; break;
        }
    }
    return out;
}

TwistedComplex EndofunctorSpec::apply(const TwistedComplex& x) const {
    TwistedComplex cur = x;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        switch (it->kind) {
            case FunctorStep::Kind::identity: break;
            case FunctorStep::Kind::shift: cur = twistlab::shift(cur, it->amount); break;
            case FunctorStep::Kind::spherical_twist: cur = twistlab::spherical_twist(*it->object, cur, false, reduce_); break;
            case FunctorStep::Kind::p_twist: cur = twistlab::p_twist(*it->object, cur, false, reduce_); break;
        }
    }
    return cur;
}

EndofunctorSpec compose(const EndofunctorSpec& outer, const EndofunctorSpec& inner) {
    std::vector<FunctorStep> steps = outer.steps();
    steps.insert(steps.end(), inner.steps().begin(), inner.steps().end());
    EndofunctorSpec out(std::move(steps));
    out.set_reduce(outer.reduce() && inner.reduce());
    return out;
}

Iteration iterate(const EndofunctorSpec& phi, const TwistedComplex& g, int n_max) {
    if (n_max < 1) throw std::invalid_argument("iterate needs n_max >= 1");
    Iteration out;
    TwistedComplex cur = g;
    out.steps.push_back({0, cur, hom_dims(g, cur)});
    for (int n = 1; n <= n_max; ++n) {
        try {
            cur = phi.apply(cur);
            out.steps.push_back({n, cur, hom_dims(g, cur)});
        } catch (const CapExceeded& e) {
            out.incomplete = true;
            out.note = "stopped at n = " + std::to_string(n) + ": " + e.what();
            break;
        }
    }
    return out;
}

bool is_dim_fixed_point(const EndofunctorSpec& phi, const TwistedComplex& f) {
    return hom_profile(f) == hom_profile(phi.apply(f));
}

std::optional<std::size_t> ker_SR_witness(const ModelSphericalFunctor& s, const std::vector<TwistedComplex>& candidates) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (hom_dims(s.object(), candidates[i]).empty()) return i;
    return std::nullopt;
}

}  // namespace twistlab
