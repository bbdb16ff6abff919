#include "cla/specfile.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cla {

using json = nlohmann::ordered_json;

AlgebraBundle to_bundle(const CatalogEntry& e) {
    return AlgebraBundle{e.name,   e.algebra,          e.jform,         e.cartan,
                         e.root_coord_names, e.normalization, e.expected_commutants};
}

namespace {

std::string mat_entry_str(const Cyc& v) { return v.is_zero() ? "0" : v.str(); }

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(mat_entry_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json bichar_to_json(const Bicharacter& b) {
    json out;
    out["root_order"] = b.root_order;
    out["matrix"] = b.exponent_matrix;
    return out;
}

const json& need(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end()) throw SpecError(std::string(where) + ": missing \"" + key + "\"");
    return *it;
}

Mat mat_from_json(const json& j, unsigned conductor, size_t rows, size_t cols, const char* where) {
    if (!j.is_array() || j.size() != rows)
        throw SpecError(std::string(where) + ": expected " + std::to_string(rows) + " rows");
    Mat m(conductor, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw SpecError(std::string(where) + ": row " + std::to_string(i + 1) + " needs " +
                            std::to_string(cols) + " entries");
        for (size_t c = 0; c < cols; ++c) {
            if (!row[c].is_string())
                throw SpecError(std::string(where) + ": entries must be scalar strings");
            try {
                m.at(i, c) = parse_scalar(row[c].get<std::string>(), conductor);
            } catch (const std::invalid_argument& ex) {
                throw SpecError(std::string(where) + ": bad scalar \"" +
                                row[c].get<std::string>() + "\": " + ex.what());
            }
        }
    }
    return m;
}

Bicharacter bichar_from_json(const json& j, size_t components, const char* where) {
    Bicharacter b;
    const json& ro = need(j, "root_order", where);
    if (!ro.is_number_unsigned() || ro.get<unsigned>() == 0)
        throw SpecError(std::string(where) + ": root_order must be a positive integer");
    b.root_order = ro.get<unsigned>();
    const json& m = need(j, "matrix", where);
    if (!m.is_array() || m.size() != components)
        throw SpecError(std::string(where) + ": matrix must be " + std::to_string(components) +
                        "x" + std::to_string(components));
    for (const json& row : m) {
        if (!row.is_array() || row.size() != components)
            throw SpecError(std::string(where) + ": matrix must be square over the components");
        std::vector<long> r;
        for (const json& v : row) {
            if (!v.is_number_integer())
                throw SpecError(std::string(where) + ": matrix entries must be integers");
            r.push_back(v.get<long>());
        }
        b.exponent_matrix.push_back(std::move(r));
    }
    return b;
}

Cyc scalar_from_json(const json& j, unsigned conductor, const char* where) {
    if (!j.is_string()) throw SpecError(std::string(where) + ": expected a scalar string");
    try {
        return parse_scalar(j.get<std::string>(), conductor);
    } catch (const std::invalid_argument& ex) {
        throw SpecError(std::string(where) + ": bad scalar \"" + j.get<std::string>() +
                        "\": " + ex.what());
    }
}

int degree_code(const GradingContext& ctx, const std::string& text, const char* where) {
    try {
        return ctx.code(ctx.parse_degree(text));
    } catch (const std::invalid_argument& ex) {
        throw SpecError(std::string(where) + ": " + ex.what());
    }
}

} // namespace

std::string bundle_text(const AlgebraBundle& b) {
    const GradingContext& ctx = b.algebra.ctx();
    const GradedSpace& sp = b.algebra.space();
    json out;
    out["name"] = b.name;

    json grading;
    grading["orders"] = ctx.orders();
    grading["conductor"] = ctx.conductor();
    grading["omega"] = bichar_to_json(ctx.omega_factor());
    if (ctx.has_sigma()) grading["sigma"] = bichar_to_json(*ctx.sigma_factor());
    json order = json::array();
    for (const auto& g : ctx.elements()) order.push_back(degree_str(g));
    grading["element_order"] = std::move(order);
    out["grading"] = std::move(grading);

    json dims;
    for (size_t d = 0; d < ctx.group_size(); ++d)
        if (sp.dim(static_cast<int>(d)) > 0)
            dims[degree_str(ctx.element(static_cast<int>(d)))] = sp.dim(static_cast<int>(d));
    out["space"] = std::move(dims);

    json gens = json::array();
    for (const auto& e : b.algebra.basis()) {
        json g;
        g["name"] = e.name;
        g["degree"] = degree_str(ctx.element(e.degree));
        g["matrix"] = mat_to_json(e.matrix.dense());
        gens.push_back(std::move(g));
    }
    out["generators"] = std::move(gens);

    if (b.jform) {
        json jf;
        jf["matrix"] = mat_to_json(b.jform->matrix);
        jf["symmetry"] = b.jform->symmetry == FormSymmetry::symmetric ? "symmetric"
                         : b.jform->symmetry == FormSymmetry::skew    ? "skew"
                                                                      : "none";
        if (!b.jform->twists.empty()) {
            json tw;
            for (const auto& [d, phi] : b.jform->twists)
                tw[degree_str(ctx.element(d))] = mat_entry_str(phi);
            jf["twists"] = std::move(tw);
        }
        out["j_form"] = std::move(jf);
    }

    if (!b.cartan.empty()) out["cartan"] = b.cartan;
    if (!b.root_coord_names.empty()) out["root_coords"] = b.root_coord_names;
    out["normalization"] = mat_entry_str(b.normalization);

    if (!b.form_seeds.empty()) {
        json seeds;
        for (const auto& [d, m] : b.form_seeds)
            seeds[degree_str(ctx.element(d))] = mat_to_json(m.dense());
        out["commutants"] = std::move(seeds);
    }
    return out.dump(2) + "\n";
}

AlgebraBundle parse_bundle(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw SpecError(std::string("not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw SpecError("top level must be an object");

    const json& gr = need(doc, "grading", "grading");
    const json& jorders = need(gr, "orders", "grading");
    if (!jorders.is_array() || jorders.empty())
        throw SpecError("grading.orders must be a nonempty array");
    std::vector<int> orders;
    for (const json& v : jorders) {
        if (!v.is_number_integer() || v.get<int>() < 2)
            throw SpecError("grading.orders entries must be integers >= 2");
        orders.push_back(v.get<int>());
    }
    unsigned conductor = 12;
    if (gr.contains("conductor")) {
        const json& c = gr["conductor"];
        if (!c.is_number_unsigned() || c.get<unsigned>() == 0)
            throw SpecError("grading.conductor must be a positive integer");
        conductor = c.get<unsigned>();
    }
    Bicharacter omega = bichar_from_json(need(gr, "omega", "grading"), orders.size(), "grading.omega");
    std::optional<Bicharacter> sigma;
    if (gr.contains("sigma"))
        sigma = bichar_from_json(gr["sigma"], orders.size(), "grading.sigma");

    std::optional<std::vector<GroupElement>> element_order;
    if (gr.contains("element_order")) {
        GradingContext plain(orders, omega, sigma, conductor);
        const json& jo = gr["element_order"];
        if (!jo.is_array() || jo.size() != plain.group_size())
            throw SpecError("grading.element_order must list every group element once");
        std::vector<GroupElement> eo;
        std::set<GroupElement> seen;
        for (const json& v : jo) {
            if (!v.is_string()) throw SpecError("grading.element_order entries must be strings");
            GroupElement g;
            try {
                g = plain.parse_degree(v.get<std::string>());
            } catch (const std::invalid_argument& ex) {
                throw SpecError(std::string("grading.element_order: ") + ex.what());
            }
            if (!seen.insert(g).second)
                throw SpecError("grading.element_order repeats " + degree_str(g));
            eo.push_back(std::move(g));
        }
        element_order = std::move(eo);
    }
    auto ctx = std::make_shared<const GradingContext>(orders, omega, sigma, conductor,
                                                      element_order);

    const json& jdims = need(doc, "space", "space");
    if (!jdims.is_object()) throw SpecError("space must map degrees to dimensions");
    std::vector<size_t> dims(ctx->group_size(), 0);
    for (auto it = jdims.begin(); it != jdims.end(); ++it) {
        int code = degree_code(*ctx, it.key(), "space");
        if (!it.value().is_number_unsigned())
            throw SpecError("space." + it.key() + " must be a nonnegative integer");
        dims[code] = it.value().get<size_t>();
    }
    GradedSpace space(ctx, dims);
    size_t total = space.total_dim();

    const json& jgens = need(doc, "generators", "generators");
    if (!jgens.is_array() || jgens.empty())
        throw SpecError("generators must be a nonempty array");
    std::vector<BasisElement> basis;
    std::set<std::string> names;
    for (const json& jg : jgens) {
        if (!jg.is_object()) throw SpecError("generators entries must be objects");
        const json& jn = need(jg, "name", "generator");
        if (!jn.is_string()) throw SpecError("generator name must be a string");
        std::string nm = jn.get<std::string>();
        if (!names.insert(nm).second) throw SpecError("duplicate generator name " + nm);
        int code = degree_code(*ctx, need(jg, "degree", nm.c_str()).get<std::string>(), nm.c_str());
        Mat m = mat_from_json(need(jg, "matrix", nm.c_str()), conductor, total, total, nm.c_str());
        basis.push_back({std::move(nm), code, GradedMatrix::from_dense(space, m)});
    }
    ColorAlgebra alg = ColorAlgebra::from_representation(space, std::move(basis));

    AlgebraBundle b{doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>()
                                                                    : std::string(),
                    std::move(alg),
                    std::nullopt,
                    {},
                    {},
                    Cyc::one(conductor),
                    {}};

    if (doc.contains("j_form")) {
        const json& jf = doc["j_form"];
        JForm form{space, mat_from_json(need(jf, "matrix", "j_form"), conductor, total, total,
                                        "j_form"),
                   FormSymmetry::none,
                   {}};
        if (jf.contains("symmetry")) {
            std::string s = jf["symmetry"].get<std::string>();
            if (s == "symmetric")
                form.symmetry = FormSymmetry::symmetric;
            else if (s == "skew")
                form.symmetry = FormSymmetry::skew;
            else if (s == "none")
                form.symmetry = FormSymmetry::none;
            else
                throw SpecError("j_form.symmetry must be symmetric, skew or none");
        }
        if (jf.contains("twists")) {
            const json& tw = jf["twists"];
            if (!tw.is_object()) throw SpecError("j_form.twists must map degrees to scalars");
            for (auto it = tw.begin(); it != tw.end(); ++it)
                form.twists[degree_code(*ctx, it.key(), "j_form.twists")] =
                    scalar_from_json(it.value(), conductor, "j_form.twists");
        }
        b.jform = std::move(form);
    }

    if (doc.contains("cartan")) {
        for (const json& v : doc["cartan"]) {
            if (!v.is_string()) throw SpecError("cartan entries must be generator names");
            std::string nm = v.get<std::string>();
            if (b.algebra.find(nm) < 0) throw SpecError("cartan lists unknown generator " + nm);
            b.cartan.push_back(std::move(nm));
        }
    }
    if (doc.contains("root_coords"))
        for (const json& v : doc["root_coords"]) {
            if (!v.is_string()) throw SpecError("root_coords entries must be strings");
            b.root_coord_names.push_back(v.get<std::string>());
        }
    if (doc.contains("normalization"))
        b.normalization = scalar_from_json(doc["normalization"], conductor, "normalization");

    if (doc.contains("commutants")) {
        const json& seeds = doc["commutants"];
        if (!seeds.is_object()) throw SpecError("commutants must map degrees to matrices");
        for (auto it = seeds.begin(); it != seeds.end(); ++it) {
            int code = degree_code(*ctx, it.key(), "commutants");
            GradedMatrix m = GradedMatrix::from_dense(
                space, mat_from_json(it.value(), conductor, total, total, "commutants"));
            if (!m.is_zero() && (!m.homogeneous() || m.degree() != code))
                throw SpecError("commutants." + it.key() + " is not homogeneous of that degree");
            b.form_seeds.emplace(code, std::move(m));
        }
    }
    return b;
}

AlgebraBundle load_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bundle(buf.str());
}

void save_bundle(const AlgebraBundle& b, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SpecError("cannot write " + path);
    out << bundle_text(b);
}

} // namespace cla
