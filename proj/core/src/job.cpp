#include "takeuchi/job.hpp"

#include "takeuchi/catalog.hpp"
#include "takeuchi/regular.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace takeuchi {

namespace {

// ---------------------------------------------------------------- schema

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const char* type_name(const json& j) {
    if (j.is_object()) return "object";
    if (j.is_array()) return "array";
    if (j.is_string()) return "string";
    if (j.is_boolean()) return "boolean";
    if (j.is_number_integer()) return "integer";
    if (j.is_number()) return "number";
    return "null";
}

void expect_type(const json& j, bool ok, const std::string& path, const char* want) {
    if (!ok) throw JobError(path, std::string("expected ") + want + ", found " + type_name(j));
}

// Rejects keys outside the allowed set.
void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw JobError(child(path, key), "unknown key");
    }
}

const json& need(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) throw JobError(child(path, key), "missing required key");
    return obj.at(key);
}

std::string get_string(const json& obj, const std::string& path, const char* key) {
    const json& v = need(obj, path, key);
    expect_type(v, v.is_string(), child(path, key), "string");
    return v.get<std::string>();
}

std::optional<std::string> opt_string(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) return std::nullopt;
    return get_string(obj, path, key);
}

int get_int(const json& obj, const std::string& path, const char* key) {
    const json& v = need(obj, path, key);
    expect_type(v, v.is_number_integer(), child(path, key), "integer");
    return v.get<int>();
}

std::vector<std::string> get_strings(const json& obj, const std::string& path, const char* key, bool required) {
    if (!obj.contains(key)) {
        if (required) throw JobError(child(path, key), "missing required key");
        return {};
    }
    const json& v = obj.at(key);
    const std::string p = child(path, key);
    expect_type(v, v.is_array(), p, "array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        expect_type(v[i], v[i].is_string(), child(p, i), "string");
        out.push_back(v[i].get<std::string>());
    }
    return out;
}

// Scalars may be written as integers or as strings such as "-2/5".
json scalar_json(const json& v, const std::string& path) {
    expect_type(v, v.is_string() || v.is_number_integer(), path, "scalar (integer or string)");
    return v.is_string() ? v : json(std::to_string(v.get<long long>()));
}

json scalar_list(const json& v, const std::string& path) {
    expect_type(v, v.is_array(), path, "array of scalars");
    json out = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar_json(v[i], child(path, i)));
    return out;
}

json canonical_algebra(const json& a, const std::string& path) {
    expect_type(a, a.is_object(), path, "object");
    std::string type = a.contains("type") ? get_string(a, path, "type") : "presentation";
    json c;
    c["type"] = type;
    if (type == "presentation") {
        only_keys(a, path, {"type", "generators", "relations", "degrees"});
        auto gens = get_strings(a, path, "generators", true);
        if (gens.empty()) throw JobError(child(path, "generators"), "at least one generator required");
        c["generators"] = gens;
        c["relations"] = get_strings(a, path, "relations", false);
        std::vector<int> deg(gens.size(), 1);
        if (a.contains("degrees")) {
            const json& d = a.at("degrees");
            const std::string p = child(path, "degrees");
            expect_type(d, d.is_array(), p, "array of integers");
            if (d.size() != gens.size()) throw JobError(p, "one degree per generator required");
            for (std::size_t i = 0; i < d.size(); ++i) {
                expect_type(d[i], d[i].is_number_integer(), child(p, i), "integer");
                deg[i] = d[i].get<int>();
                if (deg[i] <= 0) throw JobError(child(p, i), "degrees must be positive");
            }
        }
        c["degrees"] = deg;
    } else if (type == "polynomial") {
        only_keys(a, path, {"type", "variables"});
        c["variables"] = get_strings(a, path, "variables", true);
    } else if (type == "quantum_plane") {
        only_keys(a, path, {"type", "q"});
        c["q"] = scalar_json(need(a, path, "q"), child(path, "q"));
    } else if (type == "dual_numbers") {
        only_keys(a, path, {"type"});
    } else if (type == "hopf") {
        only_keys(a, path, {"type", "hopf"});
        c["hopf"] = get_string(a, path, "hopf");
    } else if (type == "ore") {
        only_keys(a, path, {"type", "base", "sigma", "delta", "variable"});
        c["base"] = get_string(a, path, "base");
        c["sigma"] = get_strings(a, path, "sigma", true);
        c["delta"] = get_strings(a, path, "delta", false);
        c["variable"] = opt_string(a, path, "variable").value_or("x");
    } else {
        throw JobError(child(path, "type"), "unknown algebra type '" + type + "'");
    }
    return c;
}

json canonical_hopf(const json& h, const std::string& path) {
    expect_type(h, h.is_object(), path, "object");
    const std::string type = get_string(h, path, "type");
    json c;
    c["type"] = type;
    if (type == "cyclic") {
        only_keys(h, path, {"type", "order"});
        int n = get_int(h, path, "order");
        if (n < 1) throw JobError(child(path, "order"), "order must be positive");
        c["order"] = n;
    } else if (type == "trivial" || type == "s3" || type == "sweedler") {
        only_keys(h, path, {"type"});
    } else if (type == "group") {
        only_keys(h, path, {"type", "table", "labels"});
        const json& t = need(h, path, "table");
        const std::string p = child(path, "table");
        expect_type(t, t.is_array() && !t.empty(), p, "non-empty square array");
        for (std::size_t i = 0; i < t.size(); ++i) {
            expect_type(t[i], t[i].is_array() && t[i].size() == t.size(), child(p, i), "row of the square table");
            for (std::size_t j = 0; j < t.size(); ++j) {
                const json& e = t[i][j];
                expect_type(e, e.is_number_integer(), child(child(p, i), j), "integer");
                if (e.get<long long>() < 0 || e.get<std::size_t>() >= t.size())
                    throw JobError(child(child(p, i), j), "group element index out of range");
            }
        }
        c["table"] = t;
        c["labels"] = get_strings(h, path, "labels", false);
    } else if (type == "raw") {
        only_keys(h, path, {"type", "labels", "mult", "unit", "comult", "counit"});
        auto labels = get_strings(h, path, "labels", true);
        const std::size_t n = labels.size();
        if (n == 0) throw JobError(child(path, "labels"), "at least one basis element required");
        c["labels"] = labels;
        auto vectors = [&](const char* key, std::size_t count, std::size_t len) {
            const json& v = need(h, path, key);
            const std::string p = child(path, key);
            expect_type(v, v.is_array() && v.size() == count, p, "array with one vector per entry");
            json out = json::array();
            for (std::size_t i = 0; i < count; ++i) {
                json s = scalar_list(v[i], child(p, i));
                if (s.size() != len) throw JobError(child(p, i), "vector of length " + std::to_string(len) + " expected");
                out.push_back(std::move(s));
            }
            return out;
        };
        c["mult"] = vectors("mult", n * n, n);
        c["unit"] = scalar_list(need(h, path, "unit"), child(path, "unit"));
        if (c["unit"].size() != n) throw JobError(child(path, "unit"), "vector of length " + std::to_string(n) + " expected");
        c["comult"] = vectors("comult", n, n * n);
        c["counit"] = scalar_list(need(h, path, "counit"), child(path, "counit"));
        if (c["counit"].size() != n)
            throw JobError(child(path, "counit"), "vector of length " + std::to_string(n) + " expected");
    } else {
        throw JobError(child(path, "type"), "unknown Hopf algebra type '" + type + "'");
    }
    return c;
}

// images: {outer: {inner: polynomial}} with string leaves.
json string_table(const json& v, const std::string& path) {
    expect_type(v, v.is_object(), path, "object");
    json out = json::object();
    for (const auto& [k1, inner] : v.items()) {
        const std::string p = child(path, k1);
        expect_type(inner, inner.is_object(), p, "object");
        json row = json::object();
        for (const auto& [k2, leaf] : inner.items()) {
            expect_type(leaf, leaf.is_string() || leaf.is_number_integer(), child(p, k2), "polynomial string");
            row[k2] = leaf.is_string() ? leaf.get<std::string>() : std::to_string(leaf.get<long long>());
        }
        out[k1] = std::move(row);
    }
    return out;
}

json canonical_structure(const json& a, const std::string& path, bool coaction) {
    expect_type(a, a.is_object(), path, "object");
    std::string type = a.contains("type") ? get_string(a, path, "type") : "images";
    if (type != "images" && type != "trivial" && !(coaction && type == "regular"))
        throw JobError(child(path, "type"), "unknown type '" + type + "'");
    only_keys(a, path, {"type", "hopf", "algebra", "images"});
    json c;
    c["type"] = type;
    c["hopf"] = get_string(a, path, "hopf");
    c["algebra"] = get_string(a, path, "algebra");
    if (type == "images") c["images"] = string_table(need(a, path, "images"), child(path, "images"));
    else if (a.contains("images")) throw JobError(child(path, "images"), "images given for a " + type + " structure");
    return c;
}

json canonical_module(const json& m, const std::string& path) {
    expect_type(m, m.is_object(), path, "object");
    only_keys(m, path, {"type", "algebra", "action", "coaction", "side", "kind"});
    const std::string type = get_string(m, path, "type");
    json c;
    c["type"] = type;
    const char* ref = type == "module" ? "algebra" : type == "hmodule" ? "action" : type == "hopf_module" ? "coaction" : nullptr;
    if (!ref) throw JobError(child(path, "type"), "unknown module type '" + type + "'");
    for (const char* k : {"algebra", "action", "coaction"})
        if (std::string(k) != ref && m.contains(k)) throw JobError(child(path, k), "not used by a " + type);
    c[ref] = get_string(m, path, ref);
    const std::string side = opt_string(m, path, "side").value_or("right");
    if (side != "left" && side != "right") throw JobError(child(path, "side"), "side must be left or right");
    c["side"] = side;
    const std::string kind = opt_string(m, path, "kind").value_or("trivial");
    if (kind != "trivial" && kind != "regular") throw JobError(child(path, "kind"), "kind must be trivial or regular");
    c["kind"] = kind;
    return c;
}

struct ArgSpec {
    const char* key;
    const char* table;  // which entity table the name must come from
    bool required;
};

const std::map<std::string, std::vector<ArgSpec>>& command_args() {
    static const std::map<std::string, std::vector<ArgSpec>> m{
        {"validate", {}},
        {"smash", {{"action", "actions", true}, {"coaction", "coactions", true}}},
        {"resolve", {{"module", "modules", true}}},
        {"ext", {{"module", "modules", false}, {"algebra", "algebras", false}}},
        {"verify-ext-theorem",
         {{"action", "actions", true}, {"coaction", "coactions", true}, {"M", "modules", true}, {"X", "modules", true}}},
        {"tor-check",
         {{"action", "actions", true},
          {"coaction", "coactions", true},
          {"N", "modules", true},
          {"Y", "modules", true},
          {"M", "modules", true},
          {"X", "modules", true}}},
        {"as-regular", {{"algebra", "algebras", false}, {"action", "actions", false}, {"coaction", "coactions", false}}},
        {"nakayama", {{"action", "actions", true}, {"coaction", "coactions", true}}},
    };
    return m;
}

void check_refs(const JobSpec& j) {
    auto has = [&](const std::map<std::string, json>& t, const std::string& name) { return t.count(name) > 0; };
    auto require = [&](const std::map<std::string, json>& t, const std::string& name, const std::string& path,
                       const char* what) {
        if (!has(t, name)) throw JobError(path, "undefined " + std::string(what) + " '" + name + "'");
    };
    for (const auto& [name, a] : j.algebras) {
        const std::string p = "/algebras/" + name;
        if (a["type"] == "hopf") require(j.hopf, a["hopf"], p + "/hopf", "Hopf algebra");
        if (a["type"] == "ore") require(j.algebras, a["base"], p + "/base", "algebra");
    }
    // ore chains must not loop
    for (const auto& [name, a] : j.algebras) {
        std::set<std::string> seen{name};
        const json* cur = &a;
        while ((*cur)["type"] == "ore") {
            std::string base = (*cur)["base"];
            if (!seen.insert(base).second) throw JobError("/algebras/" + name + "/base", "cyclic algebra definition");
            cur = &j.algebras.at(base);
        }
    }
    for (const auto* tbl : {&j.actions, &j.coactions})
        for (const auto& [name, s] : *tbl) {
            const std::string p = (tbl == &j.actions ? "/actions/" : "/coactions/") + name;
            require(j.hopf, s["hopf"], p + "/hopf", "Hopf algebra");
            require(j.algebras, s["algebra"], p + "/algebra", "algebra");
            if (s["type"] == "regular") {
                const json& b = j.algebras.at(s["algebra"]);
                if (b["type"] != "hopf" || b["hopf"] != s["hopf"])
                    throw JobError(p + "/algebra", "a regular coaction needs the algebra {type: hopf} of the same H");
            }
        }
    for (const auto& [name, m] : j.modules) {
        const std::string p = "/modules/" + name;
        if (m["type"] == "module") require(j.algebras, m["algebra"], p + "/algebra", "algebra");
        if (m["type"] == "hmodule") require(j.actions, m["action"], p + "/action", "action");
        if (m["type"] == "hopf_module") require(j.coactions, m["coaction"], p + "/coaction", "coaction");
    }
    const std::map<std::string, const std::map<std::string, json>*> tables{
        {"algebras", &j.algebras}, {"actions", &j.actions}, {"coactions", &j.coactions}, {"modules", &j.modules}};
    for (const auto& a : command_args().at(j.command))
        if (j.arguments.contains(a.key))
            {
            std::string what = a.table;
            what.pop_back();  // singular
            require(*tables.at(a.table), j.arguments[a.key], std::string("/command/") + a.key, what.c_str());
        }
    if (j.command == "ext" && j.arguments.contains("module") == j.arguments.contains("algebra"))
        throw JobError("/command", "ext needs exactly one of module, algebra");
    if (j.command == "as-regular") {
        const bool alg = j.arguments.contains("algebra");
        const bool datum = j.arguments.contains("action") && j.arguments.contains("coaction");
        if (alg == datum) throw JobError("/command", "as-regular needs an algebra or an action and a coaction");
    }
    if (j.command == "validate")
        for (const auto& t : j.arguments.value("targets", json::array())) {
            const std::string n = t;
            bool found = has(j.algebras, n) || has(j.hopf, n) || has(j.actions, n) || has(j.coactions, n) ||
                         has(j.modules, n);
            if (!found) throw JobError("/command/targets", "undefined name '" + n + "'");
        }
}

// ---------------------------------------------------------------- building

struct Env {
    const JobSpec& job;
    Field k;
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, HopfPtr> hopf;
    std::map<std::string, ActionData> actions;
    std::map<std::string, CoactionData> coactions;
    std::map<std::string, OreExtension> ores;

    explicit Env(const JobSpec& j) : job(j), k(Field::parse(j.field)) {}

    HopfPtr get_hopf(const std::string& name) {
        if (auto it = hopf.find(name); it != hopf.end()) return it->second;
        const json& c = job.hopf.at(name);
        const std::string t = c["type"];
        HopfData h;
        if (t == "cyclic") h = cyclic_group_algebra(k, c["order"].get<std::size_t>());
        else if (t == "trivial") h = trivial_hopf(k);
        else if (t == "s3") h = symmetric_group_s3(k);
        else if (t == "sweedler") h = sweedler_hopf(k);
        else if (t == "group") {
            h = group_algebra(k, c["table"].get<std::vector<std::vector<std::size_t>>>(),
                              c["labels"].get<std::vector<std::string>>(), name);
        } else {
            h.field = k;
            h.labels = c["labels"].get<std::vector<std::string>>();
            h.n = h.labels.size();
            auto vec = [&](const json& v) {
                Vec out;
                for (const auto& s : v) out.push_back(k.parse_scalar(s.get<std::string>()));
                return out;
            };
            for (const auto& v : c["mult"]) h.mult.push_back(vec(v));
            for (const auto& v : c["comult"]) h.comult.push_back(vec(v));
            h.unit = vec(c["unit"]);
            h.counit = vec(c["counit"]);
            auto s = solve_antipode(h);
            if (!s) throw JobError("/hopf/" + name, "no antipode exists for these structure constants");
            h.antipode = *s;
        }
        if (h.name.empty()) h.name = name;
        auto p = finalize_hopf(std::move(h));
        Report v = validate_hopf(*p);
        if (!v.ok()) throw JobError("/hopf/" + name, "not a Hopf algebra: " + v.summary());
        return hopf[name] = p;
    }

    AlgebraPtr get_algebra(const std::string& name) {
        if (auto it = algebras.find(name); it != algebras.end()) return it->second;
        const json& c = job.algebras.at(name);
        const std::string t = c["type"];
        const int D = job.bound;
        AlgebraPtr a;
        if (t == "presentation") {
            a = realize_shared(make_presentation(k, c["generators"].get<std::vector<std::string>>(),
                                                 c["relations"].get<std::vector<std::string>>(), D, name,
                                                 c["degrees"].get<std::vector<int>>()));
        } else if (t == "polynomial") {
            a = polynomial_algebra(k, c["variables"].get<std::vector<std::string>>(), D);
        } else if (t == "quantum_plane") {
            a = quantum_plane(k, k.parse_scalar(c["q"].get<std::string>()), D);
        } else if (t == "dual_numbers") {
            a = dual_numbers(k, D);
        } else if (t == "hopf") {
            a = hopf_as_algebra(get_hopf(c["hopf"]), D);
        } else {
            AlgebraPtr base = get_algebra(c["base"]);
            if (!base->presentation()) throw JobError("/algebras/" + name + "/base", "base needs a presentation");
            const auto& gens = base->presentation()->generators;
            const auto sig = c["sigma"].get<std::vector<std::string>>();
            auto del = c["delta"].get<std::vector<std::string>>();
            if (sig.size() != gens.size())
                throw JobError("/algebras/" + name + "/sigma", "one image per generator of the base required");
            if (del.empty()) del.assign(gens.size(), "0");
            if (del.size() != gens.size())
                throw JobError("/algebras/" + name + "/delta", "one image per generator of the base required");
            std::vector<Vec> s, d;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                s.push_back(poly(base, sig[g], gens[g].degree, "/algebras/" + name + "/sigma/" + std::to_string(g)));
                d.push_back(poly(base, del[g], gens[g].degree + 1, "/algebras/" + name + "/delta/" + std::to_string(g)));
            }
            auto ore = ore_extension(base, s, d, D, c["variable"]);
            ores.emplace(name, ore);
            a = ore.algebra;
        }
        return algebras[name] = a;
    }

    // A homogeneous polynomial as coordinates in degree deg (zero past the bound).
    static Vec poly(const AlgebraPtr& a, const std::string& text, int deg, const std::string& path) {
        if (!a->presentation()) throw JobError(path, "algebra has no presentation to parse polynomials against");
        const Field& k = a->field();
        if (deg > a->bound()) return {};
        Vec out = zero_vec(k, a->dim(deg));
        Polynomial p;
        try {
            p = parse_polynomial(text, *a->presentation());
        } catch (const std::exception& e) {
            throw JobError(path, e.what());
        }
        for (const auto& t : p) {
            if (a->presentation()->word_degree(t.word) != deg)
                throw JobError(path, "'" + text + "' is not homogeneous of degree " + std::to_string(deg));
            axpy(out, k.coerce(t.coeff), a->normal_form(t.word));
        }
        return out;
    }

    std::size_t hopf_index(const HopfData& h, const std::string& label, const std::string& path) {
        for (std::size_t i = 0; i < h.n; ++i)
            if (h.labels[i] == label) return i;
        throw JobError(path, "unknown basis element '" + label + "' of " + h.name);
    }

    std::size_t gen_index(const AlgebraPtr& a, const std::string& g, const std::string& path) {
        try {
            return a->presentation()->generator_index(g);
        } catch (const std::exception&) {
            throw JobError(path, "unknown generator '" + g + "'");
        }
    }

    const ActionData& get_action(const std::string& name) {
        if (auto it = actions.find(name); it != actions.end()) return it->second;
        const json& c = job.actions.at(name);
        const std::string p = "/actions/" + name;
        HopfPtr h = get_hopf(c["hopf"]);
        AlgebraPtr a = get_algebra(c["algebra"]);
        if (c["type"] == "trivial") return actions.emplace(name, trivial_action(h, a)).first->second;
        if (!a->presentation()) throw JobError(p + "/algebra", "images need an algebra with a presentation");
        const auto& gens = a->presentation()->generators;
        std::vector<std::vector<std::optional<Vec>>> im(h->n, std::vector<std::optional<Vec>>(gens.size()));
        for (const auto& [label, row] : c["images"].items()) {
            const std::size_t kk = hopf_index(*h, label, p + "/images/" + label);
            for (const auto& [gen, text] : row.items()) {
                const std::string q = p + "/images/" + label + "/" + gen;
                const std::size_t g = gen_index(a, gen, q);
                im[kk][g] = poly(a, text.get<std::string>(), gens[g].degree, q);
            }
        }
        std::vector<std::vector<Vec>> images(h->n);
        for (std::size_t kk = 0; kk < h->n; ++kk)
            for (std::size_t g = 0; g < gens.size(); ++g) {
                if (!im[kk][g])
                    throw JobError(p + "/images", "missing image of " + gens[g].name + " under " + h->labels[kk]);
                images[kk].push_back(*im[kk][g]);
            }
        try {
            return actions.emplace(name, extend_action(h, a, images)).first->second;
        } catch (const ActionError& e) {
            throw JobError(p, e.what());
        }
    }

    const CoactionData& get_coaction(const std::string& name) {
        if (auto it = coactions.find(name); it != coactions.end()) return it->second;
        const json& c = job.coactions.at(name);
        const std::string p = "/coactions/" + name;
        HopfPtr h = get_hopf(c["hopf"]);
        AlgebraPtr b = get_algebra(c["algebra"]);
        if (c["type"] == "trivial") return coactions.emplace(name, trivial_coaction(h, b)).first->second;
        if (c["type"] == "regular") return coactions.emplace(name, regular_coaction(h, b)).first->second;
        if (!b->presentation()) throw JobError(p + "/algebra", "images need an algebra with a presentation");
        const auto& gens = b->presentation()->generators;
        std::vector<Vec> images(gens.size());
        std::vector<bool> given(gens.size(), false);
        for (const auto& [gen, row] : c["images"].items()) {
            const std::string q = p + "/images/" + gen;
            const std::size_t g = gen_index(b, gen, q);
            const int deg = gens[g].degree;
            const std::size_t len = deg <= b->bound() ? b->dim(deg) : 0;
            images[g] = zero_vec(k, h->n * len);
            given[g] = true;
            for (const auto& [label, text] : row.items()) {
                const std::size_t kk = hopf_index(*h, label, q + "/" + label);
                Vec v = poly(b, text.get<std::string>(), deg, q + "/" + label);
                for (std::size_t z = 0; z < v.size(); ++z) images[g][kk * len + z] += v[z];
            }
        }
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (!given[g]) throw JobError(p + "/images", "missing coaction image of " + gens[g].name);
        try {
            return coactions.emplace(name, extend_coaction(h, b, images)).first->second;
        } catch (const ActionError& e) {
            throw JobError(p, e.what());
        }
    }

    Side side_of(const std::string& name) { return job.modules.at(name)["side"] == "left" ? Side::left : Side::right; }

    ModulePtr get_module(const std::string& name) {
        const json& c = job.modules.at(name);
        const Side s = side_of(name);
        const bool reg = c["kind"] == "regular";
        if (c["type"] == "module") {
            AlgebraPtr a = get_algebra(c["algebra"]);
            return reg ? regular_module(a, s) : trivial_module(a, s);
        }
        if (c["type"] == "hmodule") return get_hmodule(name).module;
        return get_hopf_module(name).module;
    }

    HModule get_hmodule(const std::string& name) {
        const json& c = job.modules.at(name);
        if (c["type"] != "hmodule") throw JobError("/modules/" + name + "/type", "an hmodule is required here");
        const ActionData& act = get_action(c["action"]);
        const Side s = side_of(name);
        return c["kind"] == "regular" ? regular_hmodule(act, s) : trivial_hmodule(trivial_module(act.algebra, s), act.hopf);
    }

    HopfModule get_hopf_module(const std::string& name) {
        const json& c = job.modules.at(name);
        if (c["type"] != "hopf_module") throw JobError("/modules/" + name + "/type", "a hopf_module is required here");
        const CoactionData& co = get_coaction(c["coaction"]);
        const Side s = side_of(name);
        return c["kind"] == "regular" ? regular_hopf_module(co, s)
                                      : trivial_hopf_module(trivial_module(co.algebra, s), co.hopf);
    }

    void require_side(const std::string& name, Side s) {
        if (side_of(name) != s)
            throw JobError("/modules/" + name + "/side", std::string("must be ") + (s == Side::left ? "left" : "right"));
    }
};

json dims_json(const BigradedAlgebra& e) {
    json t = json::array();
    for (int n = 0; n <= e.max_level; ++n) t.push_back(e.total_dim(n));
    return t;
}

// Bigraded table rows: one per homological degree, entries over internal degrees.
json bigraded_json(const BigradedAlgebra& e) {
    json rows = json::array();
    for (int n = 0; n <= e.max_level; ++n) {
        json r = json::array();
        for (int d = e.d_min; d <= e.d_max; ++d) r.push_back(e.dim(n, d));
        rows.push_back(r);
    }
    return {{"internal_degrees", {e.d_min, e.d_max}}, {"dims", rows}};
}

struct Stage {
    std::string name;
    double seconds;
    Report report;
};

class Runner {
public:
    explicit Runner(Env& env) : env_(env) {}

    template <class F>
    void stage(const std::string& name, F&& f) {
        const auto t0 = std::chrono::steady_clock::now();
        Report r = f();
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        stages_.push_back({name, s, std::move(r)});
    }

    json tables = json::object();
    std::vector<Stage> stages_;

    void run() {
        const JobSpec& j = env_.job;
        const json& args = j.arguments;
        const int N = j.max_level, D = j.bound;
        auto arg = [&](const char* key) { return args.at(key).get<std::string>(); };

        if (j.command == "validate") {
            std::vector<std::string> targets = args.value("targets", std::vector<std::string>{});
            auto wanted = [&](const std::string& n) {
                return targets.empty() || std::find(targets.begin(), targets.end(), n) != targets.end();
            };
            for (const auto& [n, _] : j.hopf)
                if (wanted(n)) stage("hopf " + n, [&] { return validate_hopf(*env_.get_hopf(n)); });
            for (const auto& [n, _] : j.algebras)
                if (wanted(n)) stage("algebra " + n, [&] {
                    Report r = validate_algebra(*env_.get_algebra(n));
                    r.data()["dims"] = env_.get_algebra(n)->dims();
                    if (env_.ores.count(n)) r.merge(ore_cross_check(env_.ores.at(n)), "ore: ");
                    return r;
                });
            for (const auto& [n, _] : j.actions)
                if (wanted(n)) stage("action " + n, [&] { return validate_action(env_.get_action(n)); });
            for (const auto& [n, _] : j.coactions)
                if (wanted(n)) stage("coaction " + n, [&] { return validate_coaction(env_.get_coaction(n)); });
            for (const auto& [n, c] : j.modules)
                if (wanted(n)) stage("module " + n, [&, n = n, c = c] {
                    if (c["type"] == "hmodule")
                        return validate_hmodule(env_.get_hmodule(n), env_.get_action(c["action"]));
                    if (c["type"] == "hopf_module")
                        return validate_hopf_module(env_.get_hopf_module(n), env_.get_coaction(c["coaction"]));
                    return validate_module(*env_.get_module(n));
                });
        } else if (j.command == "smash") {
            const auto& act = env_.get_action(arg("action"));
            const auto& co = env_.get_coaction(arg("coaction"));
            SmashAlgebra s = smash_algebra(act, co, D);
            stage("smash product", [&] {
                Report r("smash product");
                r.merge(validate_algebra(*s.algebra));
                r.data()["algebra"] = s.algebra->to_json();
                return r;
            });
            stage("freeness isomorphism", [&] { return freeness_isomorphism(s); });
            stage("twisted tensor", [&] { return twisted_tensor_check(s); });
            tables["dims"] = s.algebra->dims();
        } else if (j.command == "resolve") {
            const std::string m = arg("module");
            const json& c = j.modules.at(m);
            Resolution r = c["type"] == "hmodule"
                               ? equivariant_module_resolution(env_.get_hmodule(m), env_.get_action(c["action"]), N, D)
                           : c["type"] == "hopf_module"
                               ? equivariant_comodule_resolution(env_.get_hopf_module(m), env_.get_coaction(c["coaction"]), N, D)
                               : minimal_resolution(env_.get_module(m), N, D);
            stage("resolution", [&] {
                Report rep = validate_resolution(r);
                rep.data()["resolution"] = r.to_json();
                return rep;
            });
            json counts = json::array();
            for (const auto& lvl : r.levels) counts.push_back(lvl.generator_counts());
            tables["generators"] = counts;
            tables["terminated"] = r.terminated;
        } else if (j.command == "ext") {
            ModulePtr m = args.contains("module") ? env_.get_module(arg("module"))
                                                  : trivial_module(env_.get_algebra(arg("algebra")), Side::right);
            if (m->side() != Side::right) throw JobError("/command/module", "ext needs a right module");
            auto r = std::make_shared<const Resolution>(minimal_resolution(m, N + 1, D));
            stage("ext algebra", [&] {
                ExtAlgebra e = ext_algebra(r, r->terminated ? std::min(N, r->length()) : N);
                Report rep = e.validation;
                rep.data()["ext"] = e.to_json();
                tables["ext_dims"] = bigraded_json(e.algebra);
                tables["total_dims"] = dims_json(e.algebra);
                return rep;
            });
        } else if (j.command == "verify-ext-theorem") {
            env_.require_side(arg("M"), Side::right);
            env_.require_side(arg("X"), Side::right);
            const auto& act = env_.get_action(arg("action"));
            const auto& co = env_.get_coaction(arg("coaction"));
            const HModule m = env_.get_hmodule(arg("M"));
            const HopfModule x = env_.get_hopf_module(arg("X"));
            stage("ext theorem", [&] {
                auto res = verify_ext_theorem(act, co, m, x, N, D);
                if (res.ext_smash) tables["total_dims"] = dims_json(res.ext_smash->algebra);
                return res.report;
            });
        } else if (j.command == "tor-check") {
            env_.require_side(arg("N"), Side::right);
            env_.require_side(arg("Y"), Side::right);
            env_.require_side(arg("M"), Side::left);
            env_.require_side(arg("X"), Side::left);
            const auto& act = env_.get_action(arg("action"));
            const auto& co = env_.get_coaction(arg("coaction"));
            const std::string xn = arg("X");
            if (j.modules.at(xn)["type"] == "hmodule") throw JobError("/modules/" + xn + "/type", "X must be a B-module");
            stage("tor decomposition", [&] {
                Report r = tor_decomposition_check(act, co, env_.get_module(arg("N")), env_.get_hopf_module(arg("Y")),
                                                   env_.get_hmodule(arg("M")), env_.get_module(xn), N, D);
                if (r.data().contains("tor_total_dims")) tables["tor_total_dims"] = r.data()["tor_total_dims"];
                return r;
            });
        } else if (j.command == "as-regular") {
            if (args.contains("algebra")) {
                stage("AS-regularity", [&] {
                    auto c = as_regular_check(env_.get_algebra(arg("algebra")), N, D);
                    tables["regularity"] = to_string(c.verdict);
                    tables["dimension"] = c.dimension;
                    tables["as_index"] = c.as_index;
                    Report r = c.report;
                    // the verdict itself is the outcome of this command
                    if (c.verdict == RegularityVerdict::refuted) r.fail("AS-regular", c.reason);
                    else if (c.verdict == RegularityVerdict::inconclusive) r.add("AS-regular", Verdict::inconclusive, c.reason);
                    else r.pass("AS-regular", c.reason);
                    r.data()["certificate"] = c.to_json();
                    return r;
                });
            } else {
                const auto& act = env_.get_action(arg("action"));
                const auto& co = env_.get_coaction(arg("coaction"));
                stage("AS-regularity of the smash product", [&] {
                    Report r = regularity_smash_check(act, co, N, D);
                    if (r.data().contains("dimension")) tables["dimension"] = r.data()["dimension"];
                    if (r.data().contains("as_index")) tables["as_index"] = r.data()["as_index"];
                    return r;
                });
            }
        } else if (j.command == "nakayama") {
            const auto& act = env_.get_action(arg("action"));
            const auto& co = env_.get_coaction(arg("coaction"));
            stage("Nakayama", [&] {
                Report r = nakayama_smash_check(act, co, N, D);
                if (r.data().contains("ext_route")) {
                    tables["ext_route"] = r.data()["ext_route"];
                    tables["formula_route"] = r.data()["formula_route"];
                }
                return r;
            });
        }
    }

private:
    Env& env_;
};

json base_report(const JobSpec& job) {
    json r;
    r["schema"] = job_schema_version;
    r["command"] = job.command;
    r["arguments"] = job.arguments;
    r["field"] = job.field;
    r["bounds"] = {{"N", job.max_level}, {"D", job.bound}};
    return r;
}

}  // namespace

const std::vector<std::string>& job_commands() {
    static const std::vector<std::string> c = [] {
        std::vector<std::string> out;
        for (const auto& [k, _] : command_args()) out.push_back(k);
        return out;
    }();
    return c;
}

std::size_t JobSpec::entity_count() const {
    return 1 + algebras.size() + hopf.size() + actions.size() + coactions.size() + modules.size();
}

json JobSpec::to_json() const {
    json j;
    j["schema"] = job_schema_version;
    j["field"] = field;
    j["bounds"] = {{"N", max_level}, {"D", bound}};
    auto table = [](const std::map<std::string, json>& t) {
        json o = json::object();
        for (const auto& [k, v] : t) o[k] = v;
        return o;
    };
    j["algebras"] = table(algebras);
    j["hopf"] = table(hopf);
    j["actions"] = table(actions);
    j["coactions"] = table(coactions);
    j["modules"] = table(modules);
    json c = arguments;
    c["name"] = command;
    j["command"] = c;
    if (!output.empty()) j["output"] = output;
    return j;
}

JobSpec parse_job(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw JobError("", std::string("invalid JSON: ") + e.what());
    }
    return parse_job(doc);
}

JobSpec parse_job(const json& doc) {
    expect_type(doc, doc.is_object(), "", "object");
    only_keys(doc, "", {"schema", "field", "bounds", "algebras", "hopf", "actions", "coactions", "modules", "command", "output"});
    JobSpec j;
    const int schema = get_int(doc, "", "schema");
    if (schema != job_schema_version)
        throw JobError("/schema", "unsupported schema version " + std::to_string(schema));
    j.field = get_string(doc, "", "field");
    try {
        j.field = Field::parse(j.field).name();
    } catch (const std::exception& e) {
        throw JobError("/field", e.what());
    }
    if (doc.contains("bounds")) {
        const json& b = doc.at("bounds");
        expect_type(b, b.is_object(), "/bounds", "object");
        only_keys(b, "/bounds", {"N", "D"});
        j.max_level = get_int(b, "/bounds", "N");
        j.bound = get_int(b, "/bounds", "D");
        if (j.max_level < 1) throw JobError("/bounds/N", "must be positive");
        if (j.bound < 1) throw JobError("/bounds/D", "must be positive");
    }
    auto section = [&](const char* key, std::map<std::string, json>& out, auto&& canon) {
        if (!doc.contains(key)) return;
        const json& s = doc.at(key);
        const std::string p = std::string("/") + key;
        expect_type(s, s.is_object(), p, "object");
        for (const auto& [name, v] : s.items()) out[name] = canon(v, child(p, name));
    };
    section("algebras", j.algebras, canonical_algebra);
    section("hopf", j.hopf, canonical_hopf);
    section("actions", j.actions, [](const json& v, const std::string& p) { return canonical_structure(v, p, false); });
    section("coactions", j.coactions, [](const json& v, const std::string& p) { return canonical_structure(v, p, true); });
    section("modules", j.modules, canonical_module);

    const json& c = need(doc, "", "command");
    if (c.is_string()) {
        j.command = c.get<std::string>();
    } else {
        expect_type(c, c.is_object(), "/command", "string or object");
        j.command = get_string(c, "/command", "name");
        for (const auto& [k, v] : c.items())
            if (k != "name") j.arguments[k] = v;
    }
    auto it = command_args().find(j.command);
    if (it == command_args().end()) throw JobError("/command", "unknown command '" + j.command + "'");
    for (const auto& [k, v] : j.arguments.items()) {
        const std::string p = "/command/" + k;
        if (j.command == "validate" && k == "targets") {
            expect_type(v, v.is_array(), p, "array of names");
            for (std::size_t i = 0; i < v.size(); ++i) expect_type(v[i], v[i].is_string(), child(p, i), "string");
            continue;
        }
        bool known = false;
        for (const auto& a : it->second) known = known || k == a.key;
        if (!known) throw JobError(p, "unknown argument for " + j.command);
        expect_type(v, v.is_string(), p, "name");
    }
    for (const auto& a : it->second)
        if (a.required && !j.arguments.contains(a.key)) throw JobError(std::string("/command/") + a.key, "missing required argument");
    if (doc.contains("output")) j.output = get_string(doc, "", "output");
    check_refs(j);
    return j;
}

JobResult run_job(const JobSpec& job) {
    JobResult out;
    out.report = base_report(job);
    json stages = json::array();
    Verdict overall = Verdict::pass;
    try {
        Env env(job);
        Runner runner(env);
        try {
            runner.run();
        } catch (const JobError&) {
            throw;
        } catch (const std::exception& e) {
            runner.stages_.push_back({"error", 0.0, Report("error")});
            runner.stages_.back().report.fail("computation", e.what());
        }
        for (const auto& s : runner.stages_) {
            json sj;
            sj["name"] = s.name;
            sj["wall_clock_seconds"] = s.seconds;
            sj["report"] = s.report.to_json();
            stages.push_back(std::move(sj));
            const Verdict v = s.report.verdict();
            if (v == Verdict::fail || (v == Verdict::inconclusive && overall == Verdict::pass)) overall = v;
        }
        out.report["tables"] = runner.tables;
        out.report["stages"] = stages;
        out.report["verdict"] = to_string(overall);
        out.exit_code = overall == Verdict::pass ? 0 : 1;
    } catch (const JobError& e) {
        out.report["verdict"] = "input error";
        out.report["error"] = {{"path", e.path()}, {"message", e.what()}};
        out.exit_code = 2;
    } catch (const std::exception& e) {
        // invalid inputs detected while building objects, e.g. a non-stable ideal
        out.report["verdict"] = "input error";
        out.report["error"] = {{"path", ""}, {"message", e.what()}};
        out.exit_code = 2;
    }
    out.report["exit_code"] = out.exit_code;
    return out;
}

std::string render_report(const json& r) {
    std::ostringstream os;
    os << "command: " << r.value("command", "");
    if (r.contains("field")) os << "  field: " << r["field"].get<std::string>();
    if (r.contains("bounds")) os << "  bounds: N=" << r["bounds"]["N"] << " D=" << r["bounds"]["D"];
    os << "\n";
    if (r.contains("error")) {
        os << "input error: " << r["error"]["message"].get<std::string>() << "\n";
        return os.str();
    }
    for (const auto& s : r.value("stages", json::array())) {
        const json& rep = s["report"];
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3fs", s["wall_clock_seconds"].get<double>());
        os << "[" << rep["verdict"].get<std::string>() << "] " << s["name"].get<std::string>() << " (" << buf << ", "
           << rep["checks"].size() << " checks)\n";
        for (const auto& c : rep["checks"])
            if (c["verdict"] != "pass")
                os << "    " << c["verdict"].get<std::string>() << ": " << c["name"].get<std::string>() << ": "
                   << c.value("message", "") << "\n";
    }
    const json& t = r.value("tables", json::object());
    for (const auto& [k, v] : t.items()) {
        if (k == "ext_dims") {
            os << "Ext dims (rows: homological degree, columns: internal degree " << v["internal_degrees"][0] << ".."
               << v["internal_degrees"][1] << ")\n";
            for (std::size_t n = 0; n < v["dims"].size(); ++n) {
                os << "  " << n << ":";
                for (const auto& x : v["dims"][n]) os << " " << x;
                os << "\n";
            }
        } else {
            os << k << ": " << v.dump() << "\n";
        }
    }
    os << "verdict: " << r.value("verdict", "") << "\n";
    return os.str();
}

}  // namespace takeuchi
