#include "ncsa/io.hpp"

#include "ncsa/errors.hpp"

#include <fstream>
#include <sstream>

namespace ncsa {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::schema, what); }

const json& field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object()) schema(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(where + ": missing field '" + key + "'");
    return *it;
}

double number(const json& j, const std::string& where)
{
    if (!j.is_number()) schema(where + ": expected a number");
    return j.get<double>();
}

int integer(const json& j, const std::string& where)
{
    if (!j.is_number_integer()) schema(where + ": expected an integer");
    return j.get<int>();
}

cplx complex_value(const json& j, const std::string& where)
{
    if (j.is_number()) return j.get<double>();
    double re = 0.0, im = 0.0;
    if (!j.is_object()) schema(where + ": expected {re, im}");
    if (j.contains("re")) re = number(j["re"], where + ".re");
    if (j.contains("im")) im = number(j["im"], where + ".im");
    return {re, im};
}

PBWElem pbw_list(const json& j, const std::string& where)
{
    if (!j.is_array() || j.empty()) schema(where + ": expected a non-empty list of monomials");
    PBWElem out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        const json& m = j[i];
        if (!m.is_object()) schema(w + ": expected an object");
        const int a = m.contains("a") ? integer(m["a"], w + ".a") : 0;
        const int b = m.contains("b") ? integer(m["b"], w + ".b") : 0;
        const int bs = m.contains("bstar") ? integer(m["bstar"], w + ".bstar") : 0;
        if (b < 0 || bs < 0) schema(w + ": b and bstar exponents must be >= 0");
        const cplx c = m.contains("coeff") ? complex_value(m["coeff"], w + ".coeff") : cplx(1.0);
        out += PBWElem::monomial(a, b, bs, c);
    }
    return out;
}

}  // namespace

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) schema("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::exception& e) {
        schema(path + ": " + e.what());
    }
}

TorusInput parse_torus(const json& j)
{
    TorusInput t;
    t.n = integer(field(j, "n", "torus"), "torus.n");
    if (t.n < 1) schema("torus.n must be >= 1");
    const json& th = field(j, "theta", "torus");
    if (!th.is_array() || static_cast<int>(th.size()) != t.n) schema("torus.theta must be an n x n array");
    Eigen::MatrixXd m(t.n, t.n);
    for (int r = 0; r < t.n; ++r) {
        const json& row = th[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != t.n) schema("torus.theta must be an n x n array");
        for (int c = 0; c < t.n; ++c) m(r, c) = number(row[static_cast<std::size_t>(c)], "torus.theta");
    }
    if ((m + m.transpose()).cwiseAbs().maxCoeff() > 1e-14) schema("torus.theta must be skew-symmetric");
    t.theta = Theta::from_matrix(m);
    const json& flag = field(j, "diophantine_asserted", "torus");
    if (!flag.is_boolean()) schema("torus.diophantine_asserted must be a boolean");
    t.diophantine_asserted = flag.get<bool>();
    const json& A = field(j, "A", "torus");
    if (!A.is_array()) schema("torus.A must be a list");
    std::vector<std::tuple<int, IVec, cplx>> entries;
    for (std::size_t i = 0; i < A.size(); ++i) {
        const std::string w = "torus.A[" + std::to_string(i) + "]";
        const int alpha = integer(field(A[i], "alpha", w), w + ".alpha");
        const json& l = field(A[i], "l", w);
        if (!l.is_array() || static_cast<int>(l.size()) != t.n) schema(w + ".l must have n integer entries");
        IVec k;
        for (const auto& v : l) k.push_back(integer(v, w + ".l"));
        const double re = number(field(A[i], "re", w), w + ".re");
        const double im = number(field(A[i], "im", w), w + ".im");
        entries.emplace_back(alpha, k, cplx(re, im));
    }
    t.A = OneFormTorus::from_entries(t.n, entries);
    return t;
}

SuqInput parse_suq_one_form(const json& j)
{
    SuqInput s;
    if (j.contains("q")) s.q = number(j["q"], "q");
    const json& forms = field(j, "one_form", "suq2");
    if (!forms.is_array()) schema("one_form must be a list");
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const std::string w = "one_form[" + std::to_string(i) + "]";
        const PBWElem x = pbw_list(field(forms[i], "x", w), w + ".x");
        const PBWElem y = pbw_list(field(forms[i], "y", w), w + ".y");
        const cplx c = forms[i].contains("coeff") ? complex_value(forms[i]["coeff"], w + ".coeff") : cplx(1.0);
        s.A += c * delta_one_form(x, y);
        ++s.forms;
    }
    return s;
}

Cutoff parse_cutoff(const json& j)
{
    if (!j.is_object()) schema("cutoff: expected an object");
    if (j.contains("table")) {
        const json& t = j["table"];
        if (!t.is_array()) schema("cutoff.table must be a list of [t, value] pairs");
        std::vector<std::pair<double, double>> rows;
        for (const auto& r : t) {
            if (!r.is_array() || r.size() != 2) schema("cutoff.table rows must be [t, value]");
            rows.emplace_back(number(r[0], "cutoff.table"), number(r[1], "cutoff.table"));
        }
        return Cutoff::tabulated(rows);
    }
    const json& fam = field(j, "family", "cutoff");
    if (!fam.is_string()) schema("cutoff.family must be a string");
    double amplitude = 1.0;
    if (j.contains("params")) {
        const json& p = j["params"];
        if (!p.is_object()) schema("cutoff.params must be an object");
        if (p.contains("amplitude")) amplitude = number(p["amplitude"], "cutoff.params.amplitude");
    }
    const std::string f = fam.get<std::string>();
    if (f == "exponential") return Cutoff::exponential(amplitude);
    if (f == "gaussian") return Cutoff::gaussian(amplitude);
    schema("cutoff.family must be 'exponential' or 'gaussian'");
}

ActionInput parse_action(const json& j)
{
    ActionInput a;
    a.cutoff = parse_cutoff(field(j, "cutoff", "action"));
    if (j.contains("lambda")) a.lambda = number(j["lambda"], "action.lambda");
    if (j.contains("integrals")) {
        const json& ints = j["integrals"];
        if (!ints.is_object()) schema("action.integrals must map weights to values");
        for (const auto& [key, v] : ints.items()) {
            int k = 0;
            try {
                k = std::stoi(key);
            } catch (const std::exception&) {
                schema("action.integrals keys must be integers");
            }
            if (k < 1) schema("action.integrals keys must be >= 1");
            a.integrals[k] = complex_value(v, "action.integrals");
        }
    }
    if (j.contains("zeta0")) a.zeta0 = complex_value(j["zeta0"], "action.zeta0");
    return a;
}

json to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const ExpansionReport& r)
{
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back({{"power", t.power}, {"tag", t.tag}, {"coeff", to_json(t.coeff)}});
    return json{{"lambda", r.lambda}, {"terms", terms}, {"total", to_json(r.total)}};
}

json to_json(const CutoffMoments& m)
{
    json out{{"phi0", m.phi0}};
    json ks = json::object();
    for (const auto& [k, e] : m.phi)
        ks[std::to_string(k)] = {{"value", e.value}, {"provenance", e.provenance}, {"error_bound", e.error_bound}};
    out["phi"] = ks;
    return out;
}

}  // namespace ncsa
