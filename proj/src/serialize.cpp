#include "adelic/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace adelic {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing key '") + key + "'");
    return *it;
}

std::size_t as_index(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        fail(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

const Json& as_array(const Json& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + " must be an array");
    return j;
}

std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) fail(std::string(what) + " must be a string");
    return j.get<std::string>();
}

bool as_bool(const Json& j, const char* what) {
    if (!j.is_boolean()) fail(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

Json word_to_json(const std::vector<WordLetter>& word) {
    Json out = Json::array();
    for (const auto& w : word) out.push_back(Json::array({w.generator, format_rational(w.t)}));
    return out;
}

std::vector<WordLetter> word_from_json(const Json& j) {
    std::vector<WordLetter> out;
    for (const auto& letter : as_array(j, "word")) {
        if (!letter.is_array() || letter.size() != 2) fail("word letters must be [generator, \"t\"]");
        out.push_back({as_index(letter[0], "word generator"), rational_from_json(letter[1])});
    }
    return out;
}

Json phases_to_json(const std::vector<Phase>& phases) {
    Json out = Json::array();
    for (const auto& p : phases) out.push_back(p.str());
    return out;
}

std::vector<Phase> phases_from_json(const Json& j) {
    std::vector<Phase> out;
    for (const auto& p : as_array(j, "phases")) out.emplace_back(rational_from_json(p));
    return out;
}

}  // namespace

Json to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail("rational must be a \"num/den\" string or an integer");
}

Json to_json(const RatVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(format_rational(x));
    return out;
}

RatVector vector_from_json(const Json& j) {
    RatVector v;
    for (const auto& x : as_array(j, "vector")) v.push_back(rational_from_json(x));
    return v;
}

Json to_json(const RatMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

RatMatrix matrix_from_json(const Json& j) {
    std::vector<RatVector> rows;
    for (const auto& r : as_array(j, "matrix")) rows.push_back(vector_from_json(r));
    if (rows.empty()) return RatMatrix(0, 0);
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) fail("matrix rows have different lengths");
    }
    return RatMatrix::from_rows(rows, rows.front().size());
}

Json to_json(const Subspace& s) {
    Json basis = Json::array();
    for (const auto& b : s.basis_vectors()) basis.push_back(to_json(b));
    return Json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

Subspace subspace_from_json(const Json& j) {
    const std::size_t d = as_index(field(j, "ambient_dim"), "ambient_dim");
    std::vector<RatVector> rows;
    for (const auto& r : as_array(field(j, "basis"), "basis")) {
        rows.push_back(vector_from_json(r));
        if (rows.back().size() != d) fail("basis vector length differs from ambient_dim");
    }
    Subspace s = Subspace::span(d, rows);
    if (s.dim() != as_index(field(j, "dim"), "dim")) fail("subspace dim does not match its basis");
    return s;
}

Json to_json(const AdeleCharacter& lambda) {
    Json comps = Json::array();
    for (const auto& [place, a] : lambda.components()) {
        Json p = place.is_infinity() ? Json("inf") : Json(place.p());
        comps.push_back(Json{{"place", p}, {"vector", to_json(a)}});
    }
    return Json{{"dim", lambda.dim()}, {"components", comps}};
}

AdeleCharacter lambda_from_json(const Json& j) {
    const std::size_t d = as_index(field(j, "dim"), "dim");
    AdeleCharacter::Components comps;
    for (const auto& c : as_array(field(j, "components"), "components")) {
        const Json& pj = field(c, "place");
        Place place = Place::infinity();
        if (pj.is_string()) {
            if (pj.get<std::string>() != "inf") fail("place must be \"inf\" or a prime");
        } else {
            const std::size_t p = as_index(pj, "place");
            if (!is_prime(p)) fail("place " + std::to_string(p) + " is not prime");
            place = Place::prime(p);
        }
        RatVector a = vector_from_json(field(c, "vector"));
        if (a.size() != d) {
            throw DimensionError("component at place " + place.str() + " has length " + std::to_string(a.size()) +
                                 ", expected " + std::to_string(d));
        }
        if (comps.count(place)) fail("place " + place.str() + " listed twice");
        comps.emplace(place, std::move(a));
    }
    return AdeleCharacter(d, std::move(comps));
}

Json to_json(const LeviSystem& system, const std::vector<NamedLeviElement>& named) {
    Json structure = Json::array();
    for (const auto& c : system.algebra().sparse_brackets()) {
        structure.push_back(Json::array({c.i, c.j, c.k, format_rational(c.value)}));
    }
    Json gens = Json::array();
    for (const auto& g : system.one_param_gens()) gens.push_back(to_json(g));
    const auto& ct = system.central_table();
    Json actions = Json::array(), table = Json::array();
    for (const auto& a : ct.actions) actions.push_back(to_json(a));
    for (const auto& row : ct.table) {
        Json r = Json::array();
        for (auto c : row) r.push_back(ct.labels[c]);
        table.push_back(r);
    }
    Json out{{"dim", system.dim()},
             {"structure", structure},
             {"levi_generators", gens},
             {"central_table", Json{{"labels", ct.labels}, {"actions", actions}, {"table", table}}},
             {"basis_names", system.basis_names()}};
    if (!named.empty()) {
        Json elems = Json::array();
        for (const auto& n : named) {
            elems.push_back(Json{{"name", n.name}, {"label", ct.labels[n.element.label]}, {"word", word_to_json(n.element.word)}});
        }
        out["named_elements"] = elems;
    }
    return out;
}

SystemDocument system_from_json(const Json& j) {
    const std::size_t d = as_index(field(j, "dim"), "dim");
    std::vector<StructureConstant> brackets;
    for (const auto& t : as_array(field(j, "structure"), "structure")) {
        if (!t.is_array() || t.size() != 4) fail("structure entries must be [i, j, k, \"num/den\"]");
        StructureConstant c{as_index(t[0], "i"), as_index(t[1], "j"), as_index(t[2], "k"), rational_from_json(t[3])};
        if (c.i >= d || c.j >= d || c.k >= d) {
            throw DimensionError("structure triple (" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                                 std::to_string(c.k) + ") out of range for dim " + std::to_string(d));
        }
        brackets.push_back(c);
    }
    LieAlgebra alg = LieAlgebra::from_brackets(d, brackets);

    std::vector<RatMatrix> gens;
    for (const auto& g : as_array(field(j, "levi_generators"), "levi_generators")) {
        gens.push_back(matrix_from_json(g));
        if (gens.back().rows() != d || gens.back().cols() != d) {
            throw DimensionError("Levi generator " + std::to_string(gens.size() - 1) + " is not " + std::to_string(d) +
                                 "x" + std::to_string(d));
        }
    }

    CentralTable ct;
    if (j.contains("central_table")) {
        const Json& cj = j["central_table"];
        for (const auto& l : as_array(field(cj, "labels"), "labels")) ct.labels.push_back(as_string(l, "label"));
        for (const auto& a : as_array(field(cj, "actions"), "actions")) {
            ct.actions.push_back(matrix_from_json(a));
            if (ct.actions.back().rows() != d || ct.actions.back().cols() != d) {
                throw DimensionError("central action is not " + std::to_string(d) + "x" + std::to_string(d));
            }
        }
        if (ct.actions.size() != ct.labels.size()) fail("central_table needs one action per label");
        for (const auto& row : as_array(field(cj, "table"), "table")) {
            std::vector<std::size_t> r;
            for (const auto& c : as_array(row, "table row")) {
                const auto name = as_string(c, "table entry");
                const auto it = std::find(ct.labels.begin(), ct.labels.end(), name);
                if (it == ct.labels.end()) fail("table entry '" + name + "' is not a label");
                r.push_back(static_cast<std::size_t>(it - ct.labels.begin()));
            }
            ct.table.push_back(std::move(r));
        }
    } else {
        ct = CentralTable::trivial(d);
    }

    std::vector<std::string> names;
    if (j.contains("basis_names")) {
        for (const auto& n : as_array(j["basis_names"], "basis_names")) names.push_back(as_string(n, "basis name"));
    }

    SystemDocument doc{LeviSystem(std::move(alg), std::move(gens), std::move(ct), std::move(names)), {}};
    if (j.contains("named_elements")) {
        const auto& sys = doc.system;
        for (const auto& e : as_array(j["named_elements"], "named_elements")) {
            const auto label = sys.central_table().index_of(as_string(field(e, "label"), "label"));
            const auto word = word_from_json(field(e, "word"));
            for (const auto& w : word) {
                if (w.generator >= sys.one_param_gens().size()) fail("word generator out of range");
            }
            doc.named_elements.push_back(
                {as_string(field(e, "name"), "name"), sys.levi_multiply(sys.central(label), sys.word(word))});
        }
    }
    return doc;
}

Json to_json(const ClassificationReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.l_lambda_samples) samples.push_back(Json{{"element", s.element}, {"member", s.member}});
    return Json{{"lambda", to_json(r.lambda)},
                {"k", to_json(r.k)},
                {"p", to_json(r.p)},
                {"chi_on_p_basis", phases_to_json(r.chi_on_p_basis)},
                {"orbit_V", to_json(r.orbit_V)},
                {"duality_ok", r.duality_ok},
                {"l_lambda_samples", samples}};
}

ClassificationReport report_from_json(const Json& j) {
    ClassificationReport r;
    r.lambda = lambda_from_json(field(j, "lambda"));
    r.k = subspace_from_json(field(j, "k"));
    r.p = subspace_from_json(field(j, "p"));
    r.chi_on_p_basis = phases_from_json(field(j, "chi_on_p_basis"));
    r.orbit_V = subspace_from_json(field(j, "orbit_V"));
    r.duality_ok = as_bool(field(j, "duality_ok"), "duality_ok");
    for (const auto& s : as_array(field(j, "l_lambda_samples"), "l_lambda_samples")) {
        r.l_lambda_samples.push_back({as_string(field(s, "element"), "element"), as_bool(field(s, "member"), "member")});
    }
    return r;
}

Json to_json(const VerificationRecord& r) {
    return Json{{"check", r.check},
                {"samples", r.samples},
                {"seed", r.seed},
                {"result", r.result ? "pass" : "fail"},
                {"tolerance", r.tolerance ? Json(*r.tolerance) : Json(nullptr)}};
}

VerificationRecord record_from_json(const Json& j) {
    VerificationRecord r;
    r.check = as_string(field(j, "check"), "check");
    r.samples = as_index(field(j, "samples"), "samples");
    r.seed = field(j, "seed").get<std::uint64_t>();
    const auto res = as_string(field(j, "result"), "result");
    if (res != "pass" && res != "fail") fail("result must be \"pass\" or \"fail\"");
    r.result = res == "pass";
    const Json& tol = field(j, "tolerance");
    if (!tol.is_null()) {
        if (!tol.is_number()) fail("tolerance must be a number or null");
        r.tolerance = tol.get<double>();
    }
    return r;
}

Json to_json(const ReportDocument& d) {
    Json out{{"tool", d.tool}, {"version", d.version}, {"seed", d.seed}};
    if (d.report) out["report"] = to_json(*d.report);
    if (!d.verification.empty()) {
        Json v = Json::array();
        for (const auto& r : d.verification) v.push_back(to_json(r));
        out["verification"] = v;
    }
    return out;
}

ReportDocument document_from_json(const Json& j) {
    ReportDocument d;
    d.tool = as_string(field(j, "tool"), "tool");
    d.version = as_string(field(j, "version"), "version");
    d.seed = field(j, "seed").get<std::uint64_t>();
    if (j.contains("report")) d.report = report_from_json(j["report"]);
    if (j.contains("verification")) {
        for (const auto& r : as_array(j["verification"], "verification")) d.verification.push_back(record_from_json(r));
    }
    return d;
}

Json to_json(const QuasiOrbitKey& key) {
    return Json{{"p", to_json(key.p)}, {"chi_values", phases_to_json(key.chi_values)},
                {"restriction", to_json(key.restriction)}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

}  // namespace adelic
