#include "twistlab/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace twistlab {

using nlohmann::json;

namespace {

const json& field_of(const json& obj, const char* key, const char* where) {
    if (!obj.is_object()) throw ParseError(std::string(where) + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string(where) + ": missing field '" + key + "'");
    return *it;
}

template <class T>
T get_as(const json& v, const std::string& what) {
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw ParseError(what + ": wrong type");
    }
}

int find_vertex(const std::vector<std::string>& names, const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw ParseError("unknown vertex '" + name + "'");
}

int find_basis(const GradedAlgebra& a, const std::string& name) {
    try {
        return a.basis_index(name);
    } catch (const std::out_of_range&) {
        throw ParseError("unknown basis element '" + name + "'");
    }
}

}  // namespace

json scalar_to_json(const Scalar& s) {
    if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
    return s.get_str();
}

Scalar scalar_from_json(const json& v) {
    if (v.is_number_integer()) return Scalar(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            return parse_scalar(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("coefficient must be an integer or a \"p/q\" string");
}

GradedAlgebra algebra_from_json(const json& doc) {
    const long long ch = get_as<long long>(field_of(doc, "field_characteristic", "algebra"), "field_characteristic");
    if (ch < 0 || ch > std::numeric_limits<std::uint32_t>::max()) throw ParseError("field_characteristic out of range");
    Field field;
    try {
        field = Field::from_characteristic(static_cast<std::uint32_t>(ch));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    const auto vertices = get_as<std::vector<std::string>>(field_of(doc, "vertices", "algebra"), "vertices");
    std::vector<BasisElement> basis;
    const json& jb = field_of(doc, "basis", "algebra");
    if (!jb.is_array()) throw ParseError("basis: expected an array");
    for (const json& b : jb) {
        BasisElement e;
        e.name = get_as<std::string>(field_of(b, "name", "basis entry"), "basis name");
        e.src = find_vertex(vertices, get_as<std::string>(field_of(b, "src", "basis entry"), "src"));
        e.dst = find_vertex(vertices, get_as<std::string>(field_of(b, "dst", "basis entry"), "dst"));
        e.degree = get_as<int>(field_of(b, "deg", "basis entry"), "deg");
        basis.push_back(std::move(e));
    }
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!index.emplace(basis[i].name, static_cast<int>(i)).second)
            throw ParseError("duplicate basis name '" + basis[i].name + "'");
    const auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) throw ParseError("unknown basis element '" + name + "'");
        return it->second;
    };

    // products first, since idempotent inference looks at u*u
    std::map<std::pair<int, int>, Product> products;
    const json& jm = field_of(doc, "mult", "algebra");
    if (!jm.is_array()) throw ParseError("mult: expected an array");
    for (const json& m : jm) {
        const int l = lookup(get_as<std::string>(field_of(m, "left", "mult entry"), "left"));
        const int r = lookup(get_as<std::string>(field_of(m, "right", "mult entry"), "right"));
        const json& res = field_of(m, "result", "mult entry");
        if (!res.is_array()) throw ParseError("mult result: expected an array");
        Product p;
        for (const json& t : res) {
            const Scalar c = scalar_from_json(field_of(t, "coeff", "result term"));
            if (c.get_den() != 1 || !c.get_num().fits_slong_p())
                throw ParseError("structure constants must be machine integers");
            p.push_back({lookup(get_as<std::string>(field_of(t, "name", "result term"), "name")), c.get_num().get_si()});
        }
        if (!products.emplace(std::pair{l, r}, std::move(p)).second)
            throw ParseError("duplicate product " + basis[static_cast<std::size_t>(l)].name + " * " +
                             basis[static_cast<std::size_t>(r)].name);
    }

    std::vector<int> idempotents;
    if (auto it = doc.find("idempotents"); it != doc.end()) {
        for (const auto& name : get_as<std::vector<std::string>>(*it, "idempotents")) idempotents.push_back(lookup(name));
        if (idempotents.size() != vertices.size()) throw ParseError("need one idempotent per vertex");
    } else {
        for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
            int pick = -1, fallback = -1;
            for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
                const BasisElement& b = basis[static_cast<std::size_t>(i)];
                if (b.src != v || b.dst != v || b.degree != 0) continue;
                if (fallback < 0) fallback = i;
                auto p = products.find({i, i});
                if (p != products.end() && p->second == Product{{i, 1}}) {
                    pick = i;
                    break;
                }
            }
            if (pick < 0) pick = fallback;
            if (pick < 0) throw ParseError("vertex '" + vertices[static_cast<std::size_t>(v)] + "' has no degree-0 loop");
            idempotents.push_back(pick);
        }
    }

    try {
        GradedAlgebra a(field, vertices, std::move(basis), std::move(idempotents));
        for (auto& [key, p] : products) a.set_product(key.first, key.second, std::move(p));
        return a;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json algebra_to_json(const GradedAlgebra& a) {
    json doc;
    doc["field_characteristic"] = a.field().characteristic();
    doc["vertices"] = a.vertices();
    json basis = json::array();
    for (const BasisElement& b : a.basis())
        basis.push_back({{"name", b.name},
                         {"src", a.vertices()[static_cast<std::size_t>(b.src)]},
                         {"dst", a.vertices()[static_cast<std::size_t>(b.dst)]},
                         {"deg", b.degree}});
    doc["basis"] = std::move(basis);
    json mult = json::array();
    for (int l = 0; l < static_cast<int>(a.dim()); ++l)
        for (int r = 0; r < static_cast<int>(a.dim()); ++r) {
            const Product& p = a.product(l, r);
            if (p.empty()) continue;
            json res = json::array();
            for (const Term& t : p) res.push_back({{"coeff", t.coeff}, {"name", a.element(t.basis).name}});
            mult.push_back({{"left", a.element(l).name}, {"right", a.element(r).name}, {"result", std::move(res)}});
        }
    doc["mult"] = std::move(mult);
    json idem = json::array();
    for (int e : a.idempotents()) idem.push_back(a.element(e).name);
    doc["idempotents"] = std::move(idem);
    return doc;
}

GradedAlgebra parse_algebra(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return algebra_from_json(doc);
}

std::string dump_algebra(const GradedAlgebra& a) { return algebra_to_json(a).dump(2) + "\n"; }

GradedAlgebra load_algebra(const std::string& path) { return parse_algebra(read_text_file(path)); }

void save_algebra(const GradedAlgebra& a, const std::string& path) { write_text_file(path, dump_algebra(a)); }

TwistedComplex complex_from_json(const json& doc, AlgebraPtr algebra) {
    const GradedAlgebra& a = *algebra;
    std::vector<Summand> summands;
    const json& js = field_of(doc, "summands", "complex");
    if (!js.is_array()) throw ParseError("summands: expected an array");
    for (const json& s : js) {
        const std::string v = get_as<std::string>(field_of(s, "vertex", "summand"), "vertex");
        summands.push_back({find_vertex(a.vertices(), v), get_as<int>(field_of(s, "shift", "summand"), "shift")});
    }
    MorphismMatrix d;
    const json& jd = field_of(doc, "differential", "complex");
    if (!jd.is_array()) throw ParseError("differential: expected an array");
    const int n = static_cast<int>(summands.size());
    for (const json& e : jd) {
        const int row = get_as<int>(field_of(e, "row", "differential entry"), "row");
        const int col = get_as<int>(field_of(e, "col", "differential entry"), "col");
        if (row < 0 || row >= n || col < 0 || col >= n) throw ParseError("differential index out of range");
        const int b = find_basis(a, get_as<std::string>(field_of(e, "element", "differential entry"), "element"));
        Scalar c;
        try {
            c = a.field().from_rational(scalar_from_json(field_of(e, "coeff", "differential entry")));
        } catch (const std::domain_error& err) {
            throw ParseError(err.what());
        }
        Element& slot = d[{row, col}];
        element_axpy(a.field(), slot, c, basis_element(a, b));
        if (slot.empty()) d.erase({row, col});
    }
    try {
        return TwistedComplex(std::move(algebra), std::move(summands), std::move(d));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json complex_to_json(const TwistedComplex& x) {
    const GradedAlgebra& a = x.algebra();
    json doc;
    json summands = json::array();
    for (const Summand& s : x.summands())
        summands.push_back({{"vertex", a.vertices()[static_cast<std::size_t>(s.vertex)]}, {"shift", s.shift}});
    doc["summands"] = std::move(summands);
    json d = json::array();
    for (const auto& [key, el] : x.differential())
        for (const auto& [b, c] : el)
            d.push_back({{"row", key.first}, {"col", key.second}, {"element", a.element(b).name}, {"coeff", scalar_to_json(c)}});
    doc["differential"] = std::move(d);
    return doc;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace twistlab
