#include "corack/io.hpp"

#include <fstream>

namespace corack {

namespace {

std::string scalar_text(const FieldElem &c) { return c.to_string(); }

std::string elem_to_text(const AlgElem &a) {
    if (a.den_pow == 0)
        return a.num.to_string();
    return "(" + a.num.to_string() + ")/d^" + std::to_string(a.den_pow);
}

AlgElem elem_from_text(const PresPtr &A, const std::string &text) {
    auto cut = text.rfind(")/d^");
    if (cut != std::string::npos && !text.empty() && text.front() == '(') {
        std::string inner = text.substr(1, cut - 1);
        int m = std::stoi(text.substr(cut + 4));
        return AlgElem::parse(A, inner, m);
    }
    return AlgElem::parse(A, text);
}

const Json &need(const Json &j, const char *key) {
    auto it = j.find(key);
    if (it == j.end())
        throw IoError(std::string("missing key \"") + key + "\"");
    return *it;
}

std::vector<std::vector<int>> table_from_json(const Json &j) {
    std::vector<std::vector<int>> t;
    if (!j.is_array())
        throw IoError("table must be an array of rows");
    for (const auto &row : j) {
        if (!row.is_array())
            throw IoError("table row must be an array");
        t.push_back(row.get<std::vector<int>>());
    }
    return t;
}

} // namespace

Json field_to_json(const Field &f) {
    Json j;
    if (f.kind == Field::Kind::Rational) {
        j["type"] = "Q";
    } else {
        j["type"] = "Fp";
        j["p"] = f.p;
    }
    return j;
}

Field field_from_json(const Json &j) {
    std::string type = need(j, "type").get<std::string>();
    if (type == "Q")
        return Field::rationals();
    if (type == "Fp")
        return Field::prime(need(j, "p").get<std::int64_t>());
    throw IoError("unknown field type \"" + type + "\"");
}

Json presentation_to_json(const PresPtr &A) {
    Json j;
    j["field"] = field_to_json(A->field);
    j["generators"] = *A->gens;
    Json rels = Json::array();
    for (const auto &r : A->relations)
        rels.push_back(r.to_string());
    j["relations"] = std::move(rels);
    j["denominator"] =
        A->denominator ? Json(A->denominator->to_string()) : Json(nullptr);
    Json counit = Json::object();
    for (std::size_t i = 0; i < A->ngens(); ++i)
        counit[(*A->gens)[i]] = scalar_text(A->counit[i]);
    j["counit"] = std::move(counit);
    return j;
}

PresPtr presentation_from_json(const Json &j) {
    Field field = field_from_json(need(j, "field"));
    VarList names = need(j, "generators").get<VarList>();
    auto vars = make_vars(names);
    std::vector<MultiPoly> relations;
    for (const auto &r : need(j, "relations"))
        relations.push_back(
            MultiPoly::parse(vars, field, r.get<std::string>()));
    std::optional<MultiPoly> den;
    const Json &dj = need(j, "denominator");
    if (!dj.is_null())
        den = MultiPoly::parse(vars, field, dj.get<std::string>());
    const Json &cj = need(j, "counit");
    std::vector<FieldElem> counit;
    for (const auto &name : names) {
        auto it = cj.find(name);
        if (it == cj.end())
            throw IoError("counit misses generator \"" + name + "\"");
        counit.push_back(FieldElem::parse(field, it->get<std::string>()));
    }
    try {
        return Presentation::make(field, std::move(names),
                                  std::move(relations), std::move(den),
                                  std::move(counit));
    } catch (const std::runtime_error &e) {
        throw IoError(e.what());
    }
}

Json corack_to_json(const CorackAlgebra &C) {
    Json j = presentation_to_json(C.A);
    Json nabla = Json::object();
    for (std::size_t i = 0; i < C.A->ngens(); ++i)
        nabla[(*C.A->gens)[i]] = elem_to_text(C.nabla.images[i]);
    j["nabla"] = std::move(nabla);
    if (C.nabla_inv) {
        Json inv = Json::object();
        for (std::size_t i = 0; i < C.A->ngens(); ++i)
            inv[(*C.A->gens)[i]] = elem_to_text(C.nabla_inv->images[i]);
        j["nabla_inv"] = std::move(inv);
    }
    return j;
}

CorackAlgebra corack_from_json(const Json &j) {
    PresPtr A = presentation_from_json(j);
    PresPtr A2 = tensor_power(A, 2);
    auto read_table = [&](const Json &t) {
        std::vector<AlgElem> images;
        for (std::size_t i = 0; i < A->ngens(); ++i) {
            auto it = t.find((*A->gens)[i]);
            if (it == t.end())
                throw IoError("operation table misses generator \"" +
                              (*A->gens)[i] + "\"");
            images.push_back(elem_from_text(A2, it->get<std::string>()));
        }
        return images;
    };
    std::vector<AlgElem> nabla = read_table(need(j, "nabla"));
    std::optional<std::vector<AlgElem>> inv;
    if (auto it = j.find("nabla_inv"); it != j.end())
        inv = read_table(*it);
    try {
        return make_corack(std::move(A), std::move(nabla), std::move(inv));
    } catch (const std::runtime_error &e) {
        throw IoError(e.what());
    }
}

Json rack_to_json(const FiniteRack &R) {
    Json j;
    j["size"] = R.size;
    j["unit"] = R.unit;
    j["op"] = R.op;
    j["op_inv"] = R.op_inv;
    return j;
}

FiniteRack rack_from_json(const Json &j) {
    std::optional<std::vector<std::vector<int>>> inv;
    if (auto it = j.find("op_inv"); it != j.end() && !it->is_null())
        inv = table_from_json(*it);
    try {
        return make_rack(need(j, "size").get<int>(), need(j, "unit").get<int>(),
                         table_from_json(need(j, "op")), std::move(inv));
    } catch (const FiniteError &e) {
        throw IoError(e.what());
    }
}

Json group_to_json(const FiniteGroup &G) {
    Json j;
    j["size"] = G.size;
    j["mul"] = G.mul;
    return j;
}

FiniteGroup group_from_json(const Json &j) {
    try {
        return make_group(table_from_json(need(j, "mul")));
    } catch (const FiniteError &e) {
        throw IoError(e.what());
    }
}

Json leibniz_to_json(const LeibnizAlgebra &g) {
    Json j;
    j["dim"] = g.dim;
    j["basis"] = g.basis;
    j["field"] = field_to_json(g.field);
    Json cs = Json::array();
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t jj = 0; jj < g.dim; ++jj)
            for (std::size_t k = 0; k < g.dim; ++k) {
                if (g.c[i][jj][k].is_zero())
                    continue;
                Json e;
                e["i"] = i;
                e["j"] = jj;
                e["k"] = k;
                e["c"] = scalar_text(g.c[i][jj][k]);
                cs.push_back(std::move(e));
            }
    j["constants"] = std::move(cs);
    return j;
}

LeibnizAlgebra leibniz_from_json(const Json &j) {
    LeibnizAlgebra g;
    g.dim = need(j, "dim").get<std::size_t>();
    g.basis = need(j, "basis").get<std::vector<std::string>>();
    g.field = j.contains("field") ? field_from_json(j["field"])
                                  : Field::rationals();
    if (g.basis.size() != g.dim)
        throw IoError("basis length does not match dim");
    g.c.assign(g.dim, std::vector<Vec>(
                          g.dim, Vec(g.dim, FieldElem::zero(g.field))));
    for (const auto &e : need(j, "constants")) {
        std::size_t i = need(e, "i").get<std::size_t>();
        std::size_t jj = need(e, "j").get<std::size_t>();
        std::size_t k = need(e, "k").get<std::size_t>();
        if (i >= g.dim || jj >= g.dim || k >= g.dim)
            throw IoError("constant index out of range");
        g.c[i][jj][k] =
            FieldElem::parse(g.field, need(e, "c").get<std::string>());
    }
    return g;
}

Json report_to_json(const CheckReport &r) {
    Json j;
    j["all_pass"] = r.all_pass();
    Json items = Json::array();
    for (const auto &e : r.entries) {
        Json it;
        it["item"] = e.item;
        it["pass"] = e.pass;
        it["detail"] = e.detail;
        items.push_back(std::move(it));
    }
    j["items"] = std::move(items);
    return j;
}

Json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception &e) {
        throw IoError(path + ": " + e.what());
    }
}

} // namespace corack
