#include "orbicheck/scenario.hpp"

#include "orbicheck/errors.hpp"
#include "orbicheck/scalar_expr.hpp"

#include <json.hpp>

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>

namespace orbicheck {

using nlohmann::json;

std::string tri_str(Tri t) {
    switch (t) {
    case Tri::Yes: return "Y";
    case Tri::No: return "N";
    default: return "—"; // em dash
    }
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ValidationError(path + ": " + msg);
}

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing field '" + std::string(key) + "'");
    return *it;
}

const json* opt(const json& j, const char* key) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::string need_str(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_string()) fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

long need_int(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
    return v.get<long>();
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& kv : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (kv.key() == a) {
                ok = true;
                break;
            }
        if (!ok) fail(path, "unknown field '" + kv.key() + "'");
    }
}

// ---------------------------------------------------------------------------
// scalars, vectors, matrices, builders

CycNum scalar_at(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a scalar string");
    try {
        return parse_scalar(v.get<std::string>());
    } catch (const ParseError& e) {
        fail(path, std::string("bad scalar: ") + e.what());
    }
}

Rational rational_at(const json& v, const std::string& path) {
    CycNum c = scalar_at(v, path);
    if (!c.is_rational()) fail(path, "expected a rational scalar, got " + c.str());
    return c.rational_value();
}

CycVector vector_at(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of scalars");
    CycVector out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out.push_back(scalar_at(v[size_t(i)], path + "[" + std::to_string(i) + "]"));
    return out;
}

CycMatrix rotation_matrix(long order, const std::string& path) {
    if (order < 1) fail(path, "rotation order must be positive");
    CycNum z = CycNum::zeta(order);
    CycNum zi = z.inverse();
    CycNum c = (z + zi) * CycNum(Rational(1, 2));
    CycNum s = (z - zi) / (CycNum(2) * CycNum::zeta(4));
    CycMatrix m(2, 2);
    m.at(0, 0) = c;
    m.at(0, 1) = -s;
    m.at(1, 0) = s;
    m.at(1, 1) = c;
    return m;
}

CycMatrix reflection_matrix(long axis, const std::string& path) {
    if (axis != 0 && axis != 1) fail(path, "reflection axis must be 0 or 1");
    CycMatrix m = CycMatrix::identity(2);
    m.at(axis == 0 ? 1 : 0, axis == 0 ? 1 : 0) = CycNum(-1);
    return m;
}

CycMatrix diag_matrix(const CycVector& entries) {
    CycMatrix m(int(entries.size()), int(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) m.at(int(i), int(i)) = entries[i];
    return m;
}

CycMatrix generator_at(const json& g, const std::string& path) {
    if (g.is_array()) {
        std::vector<CycVector> rows;
        rows.reserve(g.size());
        for (size_t r = 0; r < g.size(); ++r)
            rows.push_back(vector_at(g[size_t(r)], path + "[" + std::to_string(r) + "]"));
        try {
            return CycMatrix::from_rows(rows);
        } catch (const ValidationError& e) {
            fail(path, e.what());
        }
    }
    if (g.is_object()) {
        std::string kind = need_str(g, "kind", path);
        if (kind == "rotation") {
            check_keys(g, {"kind", "order"}, path);
            return rotation_matrix(need_int(g, "order", path), path);
        }
        if (kind == "reflection") {
            check_keys(g, {"kind", "axis"}, path);
            return reflection_matrix(need_int(g, "axis", path), path);
        }
        if (kind == "diag") {
            check_keys(g, {"kind", "entries"}, path);
            return diag_matrix(vector_at(need(g, "entries", path), path + ".entries"));
        }
        fail(path, "unknown builder kind '" + kind + "'");
    }
    fail(path, "expected a matrix (array of rows) or a builder object");
}

// ---------------------------------------------------------------------------
// charts

struct ChartTable {
    std::vector<std::pair<std::string, Chart>> list;
    const Chart& get(const std::string& n, const std::string& path) const {
        for (const auto& [nm, c] : list)
            if (nm == n) return c;
        fail(path, "unknown chart '" + n + "'");
    }
    bool has(const std::string& n) const {
        for (const auto& [nm, c] : list)
            if (nm == n) return true;
        return false;
    }
};

Chart chart_at(const json& cj, const ChartTable& defined, int cap, const std::string& path) {
    if (opt(cj, "product")) {
        check_keys(cj, {"name", "product"}, path);
        std::string name = need_str(cj, "name", path);
        const json& pr = need(cj, "product", path);
        if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
            fail(path + ".product", "expected two chart names");
        const Chart& a = defined.get(pr[0].get<std::string>(), path + ".product[0]");
        const Chart& b = defined.get(pr[1].get<std::string>(), path + ".product[1]");
        try {
            return make_chart(name, a.dim + b.dim, direct_product(a.group, b.group, cap));
        } catch (const ValidationError& e) {
            fail(path, e.what());
        }
    }
    check_keys(cj, {"name", "dim", "generators"}, path);
    std::string name = need_str(cj, "name", path);
    long dim = need_int(cj, "dim", path);
    if (dim < 1 || dim > 16) fail(path + ".dim", "dimension must be between 1 and 16");
    const json& gj = need(cj, "generators", path);
    if (!gj.is_array()) fail(path + ".generators", "expected an array");
    std::vector<CycMatrix> gens;
    gens.reserve(gj.size());
    for (size_t i = 0; i < gj.size(); ++i)
        gens.push_back(generator_at(gj[size_t(i)], path + ".generators[" + std::to_string(i) + "]"));
    try {
        return make_chart(name, int(dim), MatrixGroup::generate(int(dim), gens, cap));
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

// ---------------------------------------------------------------------------
// shapes, targets, lambda

Shape shape_at(const json& sj, const Chart& chart, const std::string& path) {
    std::string kind = need_str(sj, "kind", path);
    if (kind == "span") {
        check_keys(sj, {"kind", "vectors"}, path);
        const json& vj = need(sj, "vectors", path);
        if (!vj.is_array()) fail(path + ".vectors", "expected an array of vectors");
        std::vector<CycVector> vecs;
        for (size_t i = 0; i < vj.size(); ++i) {
            CycVector v = vector_at(vj[size_t(i)], path + ".vectors[" + std::to_string(i) + "]");
            if (int(v.size()) != chart.dim)
                fail(path + ".vectors[" + std::to_string(i) + "]",
                     "expected " + std::to_string(chart.dim) + " entries");
            vecs.push_back(std::move(v));
        }
        return Subspace::span(chart.dim, vecs);
    }
    if (kind == "whole") {
        check_keys(sj, {"kind"}, path);
        return Subspace::whole(chart.dim);
    }
    if (kind == "diagonal") {
        check_keys(sj, {"kind"}, path);
        if (chart.dim % 2 != 0)
            fail(path, "diagonal shapes need an even-dimensional (product) chart");
        int h = chart.dim / 2;
        std::vector<CycVector> vecs;
        for (int i = 0; i < h; ++i) {
            CycVector v(size_t(chart.dim), CycNum(0));
            v[size_t(i)] = CycNum(1);
            v[size_t(h + i)] = CycNum(1);
            vecs.push_back(std::move(v));
        }
        return Subspace::span(chart.dim, vecs);
    }
    if (kind == "graph") {
        check_keys(sj, {"kind", "p"}, path);
        const json& pj = need(sj, "p", path);
        if (!pj.is_array()) fail(path + ".p", "expected an array of rational coefficients");
        std::vector<Rational> coeffs;
        for (size_t i = 0; i < pj.size(); ++i)
            coeffs.push_back(rational_at(pj[size_t(i)], path + ".p[" + std::to_string(i) + "]"));
        return GraphShape{RatPoly(std::move(coeffs))};
    }
    fail(path, "unknown shape kind '" + kind + "'");
}

RecognitionTarget target_at(const json& sj, const Chart& chart, const std::string& path) {
    std::string kind = need_str(sj, "kind", path);
    if (kind == "ray") {
        check_keys(sj, {"kind", "v"}, path);
        CycVector v = vector_at(need(sj, "v", path), path + ".v");
        if (int(v.size()) != chart.dim)
            fail(path + ".v", "expected " + std::to_string(chart.dim) + " entries");
        return RayTarget{std::move(v)};
    }
    Shape s = shape_at(sj, chart, path);
    if (auto* sp = std::get_if<Subspace>(&s)) return *sp;
    return std::get<GraphShape>(s);
}

Subgroup lambda_at(const json& lj, const Chart& chart, const Shape& shape,
                   const std::string& path) {
    if (lj.is_string()) {
        std::string s = lj.get<std::string>();
        if (s == "auto") return setwise_stabilizer(chart, shape);
        if (s == "full") {
            Subgroup all;
            for (int i = 0; i < chart.group.order(); ++i) all.elems.push_back(i);
            return all;
        }
        fail(path, "lambda must be \"auto\", \"full\", or a generator list");
    }
    if (lj.is_array()) {
        std::vector<int> seed;
        for (size_t i = 0; i < lj.size(); ++i) {
            std::string p = path + "[" + std::to_string(i) + "]";
            CycMatrix m = generator_at(lj[size_t(i)], p);
            std::optional<int> idx = chart.group.find(m);
            if (!idx)
                fail(p, "matrix is not an element of chart '" + chart.name + "': " + m.str());
            seed.push_back(*idx);
        }
        return subgroup_closure(chart.group.table(), seed);
    }
    fail(path, "lambda must be \"auto\", \"full\", or a generator list");
}

// ---------------------------------------------------------------------------
// expectations

ExpectSpec expect_at(const json& ej, const std::string& path) {
    check_keys(ej,
               {"suborbifold", "full", "saturated", "split", "embeddable", "omega", "lambda",
                "gamma_p", "candidates"},
               path);
    ExpectSpec e;
    auto get_bool = [&](const char* key, std::optional<bool>& slot) {
        if (const json* v = opt(ej, key)) {
            if (!v->is_boolean()) fail(path + "." + key, "expected a boolean");
            slot = v->get<bool>();
        }
    };
    auto get_str = [&](const char* key, std::optional<std::string>& slot) {
        if (const json* v = opt(ej, key)) {
            if (!v->is_string()) fail(path + "." + key, "expected a string");
            slot = v->get<std::string>();
        }
    };
    get_bool("suborbifold", e.suborbifold);
    get_bool("full", e.full);
    get_bool("saturated", e.saturated);
    get_bool("split", e.split);
    get_bool("embeddable", e.embeddable);
    get_str("omega", e.omega);
    get_str("lambda", e.lambda_name);
    get_str("gamma_p", e.gamma_p);
    if (const json* v = opt(ej, "candidates")) {
        if (!v->is_number_integer()) fail(path + ".candidates", "expected an integer");
        e.candidates = v->get<int>();
    }
    return e;
}

} // namespace

// ---------------------------------------------------------------------------
// parsing

Scenario parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), long(e.byte));
    }
    const std::string path = "scenario";
    check_keys(doc, {"name", "cap", "charts", "subcharts", "recognitions"}, path);
    Scenario s;
    s.name = need_str(doc, "name", path);
    int cap = 64;
    if (const json* c = opt(doc, "cap")) {
        if (!c->is_number_integer()) fail(path + ".cap", "expected an integer");
        long v = c->get<long>();
        if (v < 1 || v > 4096) fail(path + ".cap", "cap must be between 1 and 4096");
        cap = int(v);
    }
    ChartTable charts;
    const json& cj = need(doc, "charts", path);
    if (!cj.is_array()) fail(path + ".charts", "expected an array");
    for (size_t i = 0; i < cj.size(); ++i) {
        std::string p = "charts[" + std::to_string(i) + "]";
        Chart c = chart_at(cj[size_t(i)], charts, cap, p);
        if (charts.has(c.name)) fail(p, "duplicate chart name '" + c.name + "'");
        charts.list.emplace_back(c.name, std::move(c));
    }
    std::set<std::string> item_names;
    auto claim_name = [&item_names](const std::string& n, const std::string& p) {
        if (!item_names.insert(n).second) fail(p, "duplicate item name '" + n + "'");
    };
    if (const json* sj = opt(doc, "subcharts")) {
        if (!sj->is_array()) fail(path + ".subcharts", "expected an array");
        for (size_t i = 0; i < sj->size(); ++i) {
            std::string p = "subcharts[" + std::to_string(i) + "]";
            const json& it = (*sj)[size_t(i)];
            check_keys(it, {"name", "chart", "shape", "lambda", "notes", "expect"}, p);
            std::string name = need_str(it, "name", p);
            claim_name(name, p);
            const Chart& chart = charts.get(need_str(it, "chart", p), p + ".chart");
            Shape shape = shape_at(need(it, "shape", p), chart, p + ".shape");
            Subgroup lam = lambda_at(need(it, "lambda", p), chart, shape, p + ".lambda");
            SubchartItem item;
            try {
                item.sub = make_subchart(name, chart, std::move(shape), std::move(lam));
            } catch (const ValidationError& e) {
                fail(p, e.what());
            }
            if (const json* n = opt(it, "notes")) {
                if (!n->is_string()) fail(p + ".notes", "expected a string");
                item.notes = n->get<std::string>();
            }
            if (const json* e = opt(it, "expect")) item.expect = expect_at(*e, p + ".expect");
            s.subcharts.push_back(std::move(item));
        }
    }
    if (const json* rj = opt(doc, "recognitions")) {
        if (!rj->is_array()) fail(path + ".recognitions", "expected an array");
        for (size_t i = 0; i < rj->size(); ++i) {
            std::string p = "recognitions[" + std::to_string(i) + "]";
            const json& it = (*rj)[size_t(i)];
            check_keys(it, {"name", "chart", "target", "require_gamma_p", "notes", "expect"}, p);
            RecognitionItem item;
            item.name = need_str(it, "name", p);
            claim_name(item.name, p);
            item.chart = charts.get(need_str(it, "chart", p), p + ".chart");
            item.target = target_at(need(it, "target", p), item.chart, p + ".target");
            if (const json* g = opt(it, "require_gamma_p")) {
                if (!g->is_string()) fail(p + ".require_gamma_p", "expected a string");
                item.require_gamma_p = g->get<std::string>();
            }
            if (const json* n = opt(it, "notes")) {
                if (!n->is_string()) fail(p + ".notes", "expected a string");
                item.notes = n->get<std::string>();
            }
            if (const json* e = opt(it, "expect")) item.expect = expect_at(*e, p + ".expect");
            s.recognitions.push_back(std::move(item));
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

std::string witness_summary_of(const Verdict& v) {
    std::string out;
    if (!v.saturation.saturated && v.saturation.witness) {
        const SaturationWitness& w = *v.saturation.witness;
        out += "not saturated: gamma = " + w.gamma_str;
        if (w.point) out += ", point = " + vec_str(*w.point);
        if (w.graph_param) out += ", t = " + rat_str(*w.graph_param);
        out += " (" + w.detail + ")";
    }
    if (!v.split.split) {
        if (!out.empty()) out += "; ";
        out += "not split: no complement of the kernel among the " +
               std::to_string(v.split.subgroups_examined) + " subgroups of lambda";
    }
    return out;
}

void diff_bool(std::vector<std::string>& diffs, const char* field, bool expected, bool actual) {
    if (expected != actual)
        diffs.push_back(std::string(field) + ": expected " + (expected ? "yes" : "no") +
                        ", got " + (actual ? "yes" : "no"));
}

void diff_str(std::vector<std::string>& diffs, const char* field, const std::string& expected,
              const std::string& actual) {
    if (expected != actual)
        diffs.push_back(std::string(field) + ": expected " + expected + ", got " + actual);
}

ItemReport eval_subchart(const SubchartItem& it) {
    ItemReport r;
    r.kind = "subchart";
    r.name = it.sub.name;
    Verdict v = embeddability(it.sub);
    r.suborbifold = Tri::Yes;
    r.full = tri_of(v.full);
    r.saturated = tri_of(v.saturation.saturated);
    r.split = tri_of(v.split.split);
    r.embeddable = tri_of(v.embeddable_completely);
    r.witness_summary = witness_summary_of(v);
    const ExpectSpec& e = it.expect;
    if (e.suborbifold) diff_bool(r.expect_diffs, "suborbifold", *e.suborbifold, true);
    if (e.full) diff_bool(r.expect_diffs, "full", *e.full, v.full);
    if (e.saturated) diff_bool(r.expect_diffs, "saturated", *e.saturated, v.saturation.saturated);
    if (e.split) diff_bool(r.expect_diffs, "split", *e.split, v.split.split);
    if (e.embeddable) diff_bool(r.expect_diffs, "embeddable", *e.embeddable, v.embeddable_completely);
    if (e.omega) diff_str(r.expect_diffs, "omega", *e.omega, v.isotropy.omega_name);
    if (e.lambda_name) diff_str(r.expect_diffs, "lambda", *e.lambda_name, v.isotropy.lambda_name);
    if (e.gamma_p) diff_str(r.expect_diffs, "gamma_p", *e.gamma_p, v.isotropy.gamma_p_name);
    if (e.candidates) r.expect_diffs.push_back("candidates: not applicable to a subchart");
    r.verdict = std::move(v);
    return r;
}

ItemReport eval_recognition(const RecognitionItem& it) {
    ItemReport r;
    r.kind = "recognition";
    r.name = it.name;
    r.candidates = recognize_suborbifold(it.chart, it.target, it.require_gamma_p);
    bool any = !r.candidates.empty();
    bool emb = std::any_of(r.candidates.begin(), r.candidates.end(),
                           [](const RecognitionCandidate& c) {
                               return c.verdict.embeddable_completely;
                           });
    r.suborbifold = tri_of(any);
    r.embeddable = tri_of(emb);
    if (!any) r.witness_summary = "no admissible lambda realizes the target";
    const ExpectSpec& e = it.expect;
    if (e.suborbifold) diff_bool(r.expect_diffs, "suborbifold", *e.suborbifold, any);
    if (e.embeddable) diff_bool(r.expect_diffs, "embeddable", *e.embeddable, emb);
    if (e.candidates && *e.candidates != int(r.candidates.size()))
        r.expect_diffs.push_back("candidates: expected " + std::to_string(*e.candidates) +
                                 ", got " + std::to_string(r.candidates.size()));
    if (e.full || e.saturated || e.split)
        r.expect_diffs.push_back("full/saturated/split: not applicable to a recognition");
    return r;
}

/** Conjunction over the non-NA values; NA when nothing applies. */
template <class Proj>
Tri tri_and_over(const std::vector<ItemReport>& items, Proj proj) {
    bool any = false, all_yes = true;
    for (const ItemReport& it : items) {
        Tri t = proj(it);
        if (t == Tri::NA) continue;
        any = true;
        if (t == Tri::No) all_yes = false;
    }
    if (!any) return Tri::NA;
    return all_yes ? Tri::Yes : Tri::No;
}

} // namespace

bool ScenarioReport::expectations_met() const {
    for (const ItemReport& it : items)
        if (!it.expect_diffs.empty()) return false;
    return true;
}

ScenarioReport evaluate_scenario(const Scenario& s) {
    ScenarioReport rep;
    rep.name = s.name;
    for (const SubchartItem& it : s.subcharts) rep.items.push_back(eval_subchart(it));
    for (const RecognitionItem& it : s.recognitions) rep.items.push_back(eval_recognition(it));
    rep.suborbifold = tri_and_over(rep.items, [](const ItemReport& i) { return i.suborbifold; });
    rep.embeddable = tri_and_over(rep.items, [](const ItemReport& i) { return i.embeddable; });
    if (rep.suborbifold == Tri::No) {
        rep.full = rep.saturated = rep.split = Tri::NA;
    } else {
        rep.full = tri_and_over(rep.items, [](const ItemReport& i) { return i.full; });
        rep.saturated = tri_and_over(rep.items, [](const ItemReport& i) { return i.saturated; });
        rep.split = tri_and_over(rep.items, [](const ItemReport& i) { return i.split; });
    }
    return rep;
}

// ---------------------------------------------------------------------------
// rendering

std::vector<ReportRow> table_rows(const std::vector<ScenarioReport>& reports) {
    std::vector<ReportRow> rows;
    rows.reserve(reports.size());
    for (const ScenarioReport& r : reports)
        rows.push_back(ReportRow{r.name, r.suborbifold, r.full, r.saturated, r.split, r.embeddable});
    return rows;
}

std::string render_md(const std::vector<ScenarioReport>& reports, bool witness) {
    std::string out =
        "| Example | Suborbifold | Full | Saturated | Split | Image of Orbifold Embedding |\n"
        "| --- | --- | --- | --- | --- | --- |\n";
    for (const ReportRow& row : table_rows(reports))
        out += "| " + row.example + " | " + tri_str(row.suborbifold) + " | " + tri_str(row.full) +
               " | " + tri_str(row.saturated) + " | " + tri_str(row.split) + " | " +
               tri_str(row.embeddable) + " |\n";
    if (witness) {
        std::string lines;
        for (const ScenarioReport& r : reports)
            for (const ItemReport& it : r.items)
                if (!it.witness_summary.empty())
                    lines += "witness " + r.name + "/" + it.name + ": " + it.witness_summary + "\n";
        if (!lines.empty()) out += "\n" + lines;
    }
    return out;
}

std::string render_tsv(const std::vector<ScenarioReport>& reports) {
    std::string out = "example\tsuborbifold\tfull\tsaturated\tsplit\tembeddable\n";
    for (const ReportRow& row : table_rows(reports))
        out += row.example + "\t" + tri_str(row.suborbifold) + "\t" + tri_str(row.full) + "\t" +
               tri_str(row.saturated) + "\t" + tri_str(row.split) + "\t" +
               tri_str(row.embeddable) + "\n";
    return out;
}

namespace {

json tri_json(Tri t) {
    switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "na";
    }
}

Tri tri_from_json(const json& v, const std::string& path) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "yes") return Tri::Yes;
        if (s == "no") return Tri::No;
        if (s == "na") return Tri::NA;
    }
    fail(path, "expected \"yes\", \"no\", or \"na\"");
}

json verdicts_json(Tri sub, Tri full, Tri sat, Tri split, Tri emb) {
    json v;
    v["suborbifold"] = tri_json(sub);
    v["full"] = tri_json(full);
    v["saturated"] = tri_json(sat);
    v["split"] = tri_json(split);
    v["embeddable"] = tri_json(emb);
    return v;
}

json orders_json(const IsotropyData& iso) {
    json o;
    o["omega"] = iso.omega.size();
    o["lambda"] = iso.lambda.size();
    o["gamma_p"] = iso.gamma_p.n;
    return o;
}

json names_json(const IsotropyData& iso) {
    json n;
    n["omega"] = iso.omega_name;
    n["lambda"] = iso.lambda_name;
    n["gamma_p"] = iso.gamma_p_name;
    return n;
}

} // namespace

std::string render_json(const std::vector<ScenarioReport>& reports) {
    json doc;
    doc["rows"] = json::array();
    for (const ReportRow& row : table_rows(reports)) {
        json r;
        r["example"] = row.example;
        r["suborbifold"] = tri_json(row.suborbifold);
        r["full"] = tri_json(row.full);
        r["saturated"] = tri_json(row.saturated);
        r["split"] = tri_json(row.split);
        r["embeddable"] = tri_json(row.embeddable);
        doc["rows"].push_back(std::move(r));
    }
    doc["records"] = json::array();
    for (const ScenarioReport& s : reports) {
        for (const ItemReport& it : s.items) {
            json rec;
            rec["scenario"] = s.name;
            rec["kind"] = it.kind;
            rec["subchart"] = it.name;
            rec["verdicts"] = verdicts_json(it.suborbifold, it.full, it.saturated, it.split,
                                            it.embeddable);
            rec["witness"] = it.witness_summary.empty() ? json(nullptr) : json(it.witness_summary);
            if (it.verdict) {
                rec["orders"] = orders_json(it.verdict->isotropy);
                rec["names"] = names_json(it.verdict->isotropy);
            }
            if (it.kind == "recognition") {
                rec["candidate_count"] = it.candidates.size();
                json arr = json::array();
                for (const RecognitionCandidate& c : it.candidates) {
                    json cd;
                    cd["name"] = c.subchart.name;
                    cd["orders"] = orders_json(c.verdict.isotropy);
                    cd["names"] = names_json(c.verdict.isotropy);
                    cd["verdicts"] = verdicts_json(
                        Tri::Yes, tri_of(c.verdict.full), tri_of(c.verdict.saturation.saturated),
                        tri_of(c.verdict.split.split), tri_of(c.verdict.embeddable_completely));
                    arr.push_back(std::move(cd));
                }
                rec["candidates"] = std::move(arr);
            }
            doc["records"].push_back(std::move(rec));
        }
    }
    return doc.dump(2) + "\n";
}

std::vector<ReportRow> rows_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), long(e.byte));
    }
    const json& rows = need(doc, "rows", "report");
    if (!rows.is_array()) fail("report.rows", "expected an array");
    std::vector<ReportRow> out;
    for (size_t i = 0; i < rows.size(); ++i) {
        const json& r = rows[size_t(i)];
        std::string p = "report.rows[" + std::to_string(i) + "]";
        ReportRow row;
        row.example = need_str(r, "example", p);
        row.suborbifold = tri_from_json(need(r, "suborbifold", p), p + ".suborbifold");
        row.full = tri_from_json(need(r, "full", p), p + ".full");
        row.saturated = tri_from_json(need(r, "saturated", p), p + ".saturated");
        row.split = tri_from_json(need(r, "split", p), p + ".split");
        row.embeddable = tri_from_json(need(r, "embeddable", p), p + ".embeddable");
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<ScenarioReport> run_examples() {
    std::vector<ScenarioReport> out;
    for (const auto& [file, text] : builtin_scenarios())
        out.push_back(evaluate_scenario(parse_scenario(text)));
    return out;
}

} // namespace orbicheck
