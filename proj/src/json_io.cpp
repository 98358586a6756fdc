#include "iwa/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace iwa::io {

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, bool strict,
                const std::string& where) {
    if (!strict) return;
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw SchemaError("unknown field '" + it.key() + "' in " + where);
}

void check_schema(const json& j) {
    if (!j.is_object()) throw SchemaError("document must be a JSON object");
    if (!j.contains("schema") || j.at("schema") != kSchemaTag)
        throw SchemaError(std::string("missing or unsupported schema tag (expected ") +
                          kSchemaTag + ")");
}

template <typename T>
T field(const json& j, const std::string& key) {
    if (!j.contains(key)) throw SchemaError("missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw SchemaError("field '" + key + "': " + e.what());
    }
}

std::vector<u64> coeff_array(const json& j) {
    std::vector<u64> v;
    if (!j.is_array()) throw SchemaError("coefficient field must be an array");
    for (const auto& x : j) {
        if (!x.is_number_unsigned() && !x.is_number_integer())
            throw SchemaError("coefficients must be integers");
        i64 s = x.get<i64>();
        if (s < 0) throw SchemaError("coefficients must be canonical (nonnegative)");
        v.push_back(static_cast<u64>(s));
    }
    return v;
}

}  // namespace

json parse_document(const std::string& text, bool strict) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("malformed JSON");
    check_schema(j);
    (void)strict;
    return j;
}

json load_file(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), strict);
}

void save_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << doc.dump(2) << '\n';
}

CurveInput curve_input_from_json(const json& j, bool strict) {
    check_keys(j,
               {"schema", "a1", "a2", "a3", "a4", "a6", "N", "D_K", "p", "assertions",
                "reduction"},
               strict, "curve input");
    CurveInput in;
    in.curve.a1 = field<i64>(j, "a1");
    in.curve.a2 = field<i64>(j, "a2");
    in.curve.a3 = field<i64>(j, "a3");
    in.curve.a4 = field<i64>(j, "a4");
    in.curve.a6 = field<i64>(j, "a6");
    in.N = field<u64>(j, "N");
    in.D_K = field<i64>(j, "D_K");
    in.p = field<u64>(j, "p");
    if (j.contains("assertions")) {
        const json& a = j.at("assertions");
        check_keys(a,
                   {"irreducible_mod_p", "ramification_Nminus", "inertia_Nplus", "h_K_coprime"},
                   strict, "assertions");
        in.assertions.irreducible_mod_p = a.value("irreducible_mod_p", true);
        in.assertions.ramification_Nminus = a.value("ramification_Nminus", true);
        in.assertions.inertia_Nplus = a.value("inertia_Nplus", true);
        in.assertions.h_K_coprime = a.value("h_K_coprime", true);
    }
    if (j.contains("reduction")) {
        const std::string r = field<std::string>(j, "reduction");
        if (r == "ordinary")
            in.reduction = ReductionType::ordinary;
        else if (r == "supersingular")
            in.reduction = ReductionType::supersingular;
        else
            throw SchemaError("reduction must be 'ordinary' or 'supersingular'");
    }
    return in;
}

json curve_input_to_json(const CurveInput& in) {
    json j{{"schema", kSchemaTag}, {"a1", in.curve.a1}, {"a2", in.curve.a2},
           {"a3", in.curve.a3},    {"a4", in.curve.a4}, {"a6", in.curve.a6},
           {"N", in.N},            {"D_K", in.D_K},     {"p", in.p}};
    j["assertions"] = {{"irreducible_mod_p", in.assertions.irreducible_mod_p},
                       {"ramification_Nminus", in.assertions.ramification_Nminus},
                       {"inertia_Nplus", in.assertions.inertia_Nplus},
                       {"h_K_coprime", in.assertions.h_K_coprime}};
    return j;
}

json sequence_to_json(const PointSequence& s) {
    json j{{"schema", kSchemaTag}, {"p", s.p},     {"k", s.k},
           {"n_max", s.n_max},     {"a_p", s.a_p}, {"split", s.split},
           {"u_K", s.u_K},         {"c_K", s.c_K}, {"seed", s.seed}};
    j["levels"] = json::array();
    for (const auto& lv : s.levels) j["levels"].push_back(lv);
    return j;
}

PointSequence sequence_from_json(const json& j, bool strict) {
    check_keys(j, {"schema", "p", "k", "n_max", "a_p", "split", "u_K", "c_K", "seed", "levels"},
               strict, "point sequence");
    PointSequence s;
    s.p = field<u64>(j, "p");
    s.k = field<unsigned>(j, "k");
    s.n_max = field<unsigned>(j, "n_max");
    s.a_p = field<i64>(j, "a_p");
    s.split = field<int>(j, "split");
    s.u_K = field<unsigned>(j, "u_K");
    s.c_K = field<u64>(j, "c_K");
    s.seed = j.value("seed", 0ULL);
    if (s.split != 1 && s.split != -1) throw SchemaError("split must be +1 or -1");
    s.u_p = u_p_factor(s.p, s.split, s.u_K);
    s.c_minus1 = mulmod(s.u_p % s.modulus(), s.c_K % s.modulus(), s.modulus());
    if (!j.contains("levels") || !j.at("levels").is_array())
        throw SchemaError("missing levels array");
    u64 expect = 1;
    for (const auto& lv : j.at("levels")) {
        std::vector<u64> v = coeff_array(lv);
        if (v.size() != expect) throw SchemaError("levels[n] must have p^n entries");
        for (u64 x : v)
            if (x >= s.modulus()) throw SchemaError("level entries must be reduced mod p^k");
        s.levels.push_back(std::move(v));
        expect *= s.p;
    }
    if (s.levels.size() != static_cast<std::size_t>(s.n_max) + 1)
        throw SchemaError("levels array must run from 0 to n_max");
    return s;
}

json element_to_json(const IwasawaElement& e) {
    return json{{"p", e.p()}, {"k", e.k()}, {"n", e.level()}, {"coeffs", e.coeffs()}};
}

IwasawaElement element_from_json(const json& j, bool strict) {
    check_keys(j, {"p", "k", "n", "coeffs"}, strict, "Iwasawa element");
    return IwasawaElement(field<u64>(j, "p"), field<unsigned>(j, "k"), field<unsigned>(j, "n"),
                          coeff_array(j.at("coeffs")));
}

json tower_to_json(const LFunctionTower& t) {
    json j{{"schema", kSchemaTag},
           {"mode", t.mode == TowerMode::ordinary ? "ordinary" : "supersingular"},
           {"p", t.p},
           {"k", t.k},
           {"n_max", t.n_max},
           {"split", t.split},
           {"a_p", t.a_p},
           {"u_K", t.u_K},
           {"c_K", t.c_K},
           {"seed", t.seed}};
    if (t.alpha) j["alpha"] = t.alpha->value();
    j["theta"] = json::array();
    for (const auto& th : t.theta) j["theta"].push_back(th.coeffs());
    auto signed_family = [](const std::vector<std::optional<IwasawaElement>>& f) {
        json arr = json::array();
        for (const auto& e : f) {
            if (e)
                arr.push_back(e->coeffs());
            else
                arr.push_back(nullptr);
        }
        return arr;
    };
    j["signed_plus"] = signed_family(t.signed_plus);
    j["signed_minus"] = signed_family(t.signed_minus);

    json certs;
    certs["divisibility"] = json::array();
    for (const auto& c : t.divisibility)
        certs["divisibility"].push_back(
            {{"n", c.n}, {"ok", c.ok}, {"obstruction", c.obstruction}});
    certs["recursion"] = json::array();
    for (const auto& c : t.recursion)
        certs["recursion"].push_back({{"m", c.m}, {"ok", c.ok}});
    certs["norm_compat"] = json::array();
    for (const auto& c : t.norm_compat)
        certs["norm_compat"].push_back(
            {{"eps", eps_str(c.eps)}, {"from", c.from}, {"to", c.to}, {"ok", c.ok}});
    j["certificates"] = certs;
    return j;
}

LFunctionTower tower_from_json(const json& j, bool strict) {
    check_keys(j,
               {"schema", "mode", "p", "k", "n_max", "split", "a_p", "u_K", "c_K", "seed",
                "alpha", "theta", "signed_plus", "signed_minus", "certificates"},
               strict, "tower");
    LFunctionTower t;
    const std::string mode = field<std::string>(j, "mode");
    if (mode == "ordinary")
        t.mode = TowerMode::ordinary;
    else if (mode == "supersingular")
        t.mode = TowerMode::supersingular;
    else
        throw SchemaError("mode must be 'ordinary' or 'supersingular'");
    t.p = field<u64>(j, "p");
    t.k = field<unsigned>(j, "k");
    t.n_max = field<unsigned>(j, "n_max");
    t.split = field<int>(j, "split");
    t.a_p = field<i64>(j, "a_p");
    t.u_K = field<unsigned>(j, "u_K");
    t.c_K = field<u64>(j, "c_K");
    t.seed = j.value("seed", 0ULL);
    if (j.contains("alpha") && !j.at("alpha").is_null())
        t.alpha = PadicResidue(t.p, t.k, field<i64>(j, "alpha"));
    const json& th = j.at("theta");
    for (unsigned n = 0; n < th.size(); ++n)
        t.theta.push_back(IwasawaElement(t.p, t.k, n, coeff_array(th.at(n))));
    if (t.theta.size() != static_cast<std::size_t>(t.n_max) + 1)
        throw SchemaError("theta array must run from level 0 to n_max");
    auto read_family = [&](const char* key) {
        std::vector<std::optional<IwasawaElement>> f(t.n_max + 1, std::nullopt);
        if (!j.contains(key)) return f;
        const json& arr = j.at(key);
        for (unsigned n = 0; n < arr.size() && n <= t.n_max; ++n)
            if (!arr.at(n).is_null())
                f[n] = IwasawaElement(t.p, t.k, n, coeff_array(arr.at(n)));
        return f;
    };
    t.signed_plus = read_family("signed_plus");
    t.signed_minus = read_family("signed_minus");
    if (j.contains("certificates")) {
        const json& c = j.at("certificates");
        for (const auto& d : c.value("divisibility", json::array()))
            t.divisibility.push_back(
                {d.at("n").get<unsigned>(), d.at("ok").get<bool>(),
                 d.value("obstruction", -1L), std::nullopt});
        for (const auto& d : c.value("recursion", json::array()))
            t.recursion.push_back({d.at("m").get<unsigned>(), d.at("ok").get<bool>()});
        for (const auto& d : c.value("norm_compat", json::array()))
            t.norm_compat.push_back({eps_from_str(d.at("eps").get<std::string>()),
                                     d.at("from").get<unsigned>(), d.at("to").get<unsigned>(),
                                     d.at("ok").get<bool>()});
    }
    return t;
}

json bound_report_to_json(const BoundReport& r, const CurveAssertions& a) {
    json j{{"schema", kSchemaTag},
           {"p", r.p},
           {"chi_conductor_exponent", r.n_chi},
           {"eps", eps_str(r.eps)},
           {"correction", r.correction},
           {"bound_length", r.bound_length},
           {"equality_claimed", r.equality_claimed},
           {"selmer_finite_at_precision", r.selmer_finite_at_precision},
           {"conditional_on", r.conditionality},
           {"text", r.text()}};
    j["t_chi"] = {{"finite", r.t_chi.is_finite()}, {"value", r.t_chi.value}};
    j["assertions_echo"] = {{"irreducible_mod_p", a.irreducible_mod_p},
                            {"ramification_Nminus", a.ramification_Nminus},
                            {"inertia_Nplus", a.inertia_Nplus},
                            {"h_K_coprime", a.h_K_coprime}};
    return j;
}

json clause_report_to_json(const ClauseReport& r) {
    json j{{"ell", r.ell}, {"A1", r.a1}, {"A2", r.a2}, {"A3", r.a3}, {"A4", r.a4},
           {"admissible", r.admissible()}};
    if (r.a_ell) j["a_ell"] = *r.a_ell;
    if (r.eps_ell) j["eps_ell"] = *r.eps_ell;
    return j;
}

}  // namespace iwa::io
