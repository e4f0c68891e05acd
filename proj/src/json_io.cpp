#include "bimat/json_io.hpp"

#include <fstream>
#include <sstream>

#include "bimat/errors.hpp"

namespace bimat {

namespace {

json labels_json(const std::vector<std::string>& labels, Mask s) {
    json a = json::array();
    for (int i : mask_to_indices(s)) a.push_back(labels[i]);
    return a;
}

Mask mask_from_labels(const std::vector<std::string>& labels, const json& arr,
                      const char* what) {
    if (!arr.is_array()) throw parse_error(std::string(what) + ": expected an array of labels");
    Mask s = 0;
    for (const auto& x : arr) {
        if (!x.is_string()) throw parse_error(std::string(what) + ": labels must be strings");
        auto it = std::find(labels.begin(), labels.end(), x.get<std::string>());
        if (it == labels.end())
            throw parse_error(std::string(what) + ": unknown label '" + x.get<std::string>() + "'");
        s |= (1u << (it - labels.begin()));
    }
    return s;
}

std::vector<std::string> strings_from(const json& j, const char* what) {
    if (!j.is_array()) throw parse_error(std::string(what) + ": expected an array");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string()) throw parse_error(std::string(what) + ": expected strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(std::string("missing field '") + key + "'");
    return *it;
}

}  // namespace

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

json matrix_to_json(const QMatrix& m) {
    json entries = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    return json{{"field", "Q"}, {"entries", std::move(entries)}};
}

json matrix_to_json(const FpMatrix& m) {
    uint32_t p = (m.rows() && m.cols()) ? m.at(0, 0).modulus() : kDefaultPrime;
    json entries = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).value());
        entries.push_back(std::move(row));
    }
    return json{{"field", "Fp"}, {"p", p}, {"entries", std::move(entries)}};
}

bool matrix_json_is_fp(const json& j) {
    return j.is_object() && j.contains("field") && field(j, "field") == "Fp";
}

namespace {
std::pair<size_t, size_t> entry_shape(const json& entries) {
    if (!entries.is_array()) throw parse_error("matrix: 'entries' must be an array of rows");
    size_t rows = entries.size(), cols = rows ? entries[0].size() : 0;
    for (const auto& r : entries)
        if (!r.is_array() || r.size() != cols) throw parse_error("matrix: ragged rows");
    return {rows, cols};
}
}  // namespace

QMatrix qmatrix_from_json(const json& j) {
    const json& entries = field(j, "entries");
    auto [rows, cols] = entry_shape(entries);
    QMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t jj = 0; jj < cols; ++jj) {
            const json& e = entries[i][jj];
            if (e.is_string()) m.at(i, jj) = Rational::from_string(e.get<std::string>());
            else if (e.is_number_integer()) m.at(i, jj) = Rational(e.get<long>());
            else throw parse_error("matrix: Q entries must be strings or integers");
        }
    return m;
}

FpMatrix fpmatrix_from_json(const json& j) {
    uint32_t p = j.contains("p") ? field(j, "p").get<uint32_t>() : kDefaultPrime;
    const json& entries = field(j, "entries");
    auto [rows, cols] = entry_shape(entries);
    FpMatrix m(rows, cols, Fp(0, p));
    for (size_t i = 0; i < rows; ++i)
        for (size_t jj = 0; jj < cols; ++jj) {
            const json& e = entries[i][jj];
            if (!e.is_number_integer()) throw parse_error("matrix: Fp entries must be integers");
            m.at(i, jj) = Fp::from_int(e.get<long long>(), p);
        }
    return m;
}

json matroid_to_json(const Matroid& m) {
    json bases = json::array();
    for (Mask b : m.bases()) bases.push_back(labels_json(m.ground(), b));
    return json{{"ground", m.ground()}, {"bases", std::move(bases)}};
}

Matroid matroid_from_json(const json& j) {
    std::vector<std::string> ground = strings_from(field(j, "ground"), "matroid.ground");
    const json& jb = field(j, "bases");
    if (!jb.is_array()) throw parse_error("matroid.bases: expected an array");
    std::vector<Mask> bases;
    for (const auto& b : jb) bases.push_back(mask_from_labels(ground, b, "matroid.bases"));
    return Matroid::from_bases(std::move(ground), std::move(bases));
}

json bimatroid_to_json(const Bimatroid& b) {
    json minors = json::array();
    for (const auto& p : b.minors())
        minors.push_back(json{{"I", labels_json(b.rows(), p.I)}, {"J", labels_json(b.cols(), p.J)}});
    return json{{"view", "minors"}, {"rows", b.rows()}, {"cols", b.cols()},
                {"minors", std::move(minors)}};
}

json bimatroid_extended_json(const Bimatroid& b) {
    Matroid ext = extended_matroid(b);
    json e = json::array();
    for (int i = 0; i < b.m(); ++i) e.push_back(ext.ground()[i]);
    json out = matroid_to_json(ext);
    return json{{"view", "extended"}, {"ground", out["ground"]}, {"E", std::move(e)},
                {"bases", out["bases"]}};
}

json bimatroid_rank_table_json(const Bimatroid& b) {
    RelativeRankTable t = b.rank_table();
    json table = json::array();
    for (Mask s = 0; s < (Mask{1} << t.m()); ++s) {
        json row = json::array();
        for (Mask tt = 0; tt < (Mask{1} << t.n()); ++tt) row.push_back(int(t.at(s, tt)));
        table.push_back(std::move(row));
    }
    return json{{"view", "rank-table"}, {"rows", b.rows()}, {"cols", b.cols()},
                {"table", std::move(table)}};
}

json bimatroid_rectangles_json(const Bimatroid& b, Orientation o) {
    json rects = json::array();
    for (const auto& p : regular_rectangles(b, o))
        rects.push_back(json{{"S", labels_json(b.rows(), p.I)}, {"T", labels_json(b.cols(), p.J)}});
    return json{{"view", o == Orientation::vertical ? "rectangles-vertical"
                                                    : "rectangles-horizontal"},
                {"rows", b.rows()}, {"cols", b.cols()}, {"rectangles", std::move(rects)}};
}

Bimatroid bimatroid_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("bimatroid: expected an object");
    if (j.contains("minors")) {
        std::vector<std::string> rows = strings_from(field(j, "rows"), "bimatroid.rows");
        std::vector<std::string> cols = strings_from(field(j, "cols"), "bimatroid.cols");
        std::vector<MinorPair> minors;
        for (const auto& p : field(j, "minors"))
            minors.push_back({mask_from_labels(rows, field(p, "I"), "minor.I"),
                              mask_from_labels(cols, field(p, "J"), "minor.J")});
        return Bimatroid::from_minors(std::move(rows), std::move(cols), std::move(minors));
    }
    if (j.contains("bases")) {  // extended view
        Matroid ext = matroid_from_json(j);
        Mask e = mask_from_labels(ext.ground(), field(j, "E"), "bimatroid.E");
        return from_extended_matroid(ext, e);
    }
    if (j.contains("table")) {  // rank-table view
        std::vector<std::string> rows = strings_from(field(j, "rows"), "bimatroid.rows");
        std::vector<std::string> cols = strings_from(field(j, "cols"), "bimatroid.cols");
        const json& table = field(j, "table");
        RelativeRankTable t(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        if (table.size() != (size_t{1} << rows.size()))
            throw parse_error("bimatroid.table: wrong row count");
        for (size_t s = 0; s < table.size(); ++s) {
            if (table[s].size() != (size_t{1} << cols.size()))
                throw parse_error("bimatroid.table: wrong column count");
            for (size_t tt = 0; tt < table[s].size(); ++tt)
                t.at(static_cast<Mask>(s), static_cast<Mask>(tt)) =
                    static_cast<int8_t>(table[s][tt].get<int>());
        }
        return from_rank_table(std::move(rows), std::move(cols), t);
    }
    if (j.contains("rectangles")) {  // equal-sided rectangles are the minors
        std::vector<std::string> rows = strings_from(field(j, "rows"), "bimatroid.rows");
        std::vector<std::string> cols = strings_from(field(j, "cols"), "bimatroid.cols");
        std::vector<MinorPair> minors;
        for (const auto& p : field(j, "rectangles")) {
            MinorPair mp{mask_from_labels(rows, field(p, "S"), "rectangle.S"),
                         mask_from_labels(cols, field(p, "T"), "rectangle.T")};
            if (popcount(mp.I) == popcount(mp.J)) minors.push_back(mp);
        }
        return Bimatroid::from_minors(std::move(rows), std::move(cols), std::move(minors));
    }
    throw parse_error("bimatroid: unrecognized view");
}

json relation_to_json(const Relation& r) {
    json pairs = json::array();
    for (size_t i = 0; i < r.adj.size(); ++i)
        for (int jj : mask_to_indices(r.adj[i]))
            pairs.push_back(json::array({r.rows[i], r.cols[jj]}));
    return json{{"rows", r.rows}, {"cols", r.cols}, {"pairs", std::move(pairs)}};
}

Relation relation_from_json(const json& j) {
    Relation r;
    r.rows = strings_from(field(j, "rows"), "relation.rows");
    r.cols = strings_from(field(j, "cols"), "relation.cols");
    r.adj.assign(r.rows.size(), 0);
    for (const auto& p : field(j, "pairs")) {
        if (!p.is_array() || p.size() != 2) throw parse_error("relation.pairs: expected [row, col]");
        auto ri = std::find(r.rows.begin(), r.rows.end(), p[0].get<std::string>());
        auto ci = std::find(r.cols.begin(), r.cols.end(), p[1].get<std::string>());
        if (ri == r.rows.end() || ci == r.cols.end())
            throw parse_error("relation.pairs: unknown label");
        r.adj[ri - r.rows.begin()] |= (1u << (ci - r.cols.begin()));
    }
    return r;
}

json morphism_to_json(const MatroidMorphism& phi) {
    json map = json::object();
    for (int i = 0; i < phi.source().n(); ++i)
        map[phi.source().ground()[i]] = phi.target().ground()[phi.map()[i]];
    return json{{"source", matroid_to_json(phi.source())},
                {"target", matroid_to_json(phi.target())},
                {"map", std::move(map)}};
}

MorphismParts morphism_parts_from_json(const json& j) {
    MorphismParts parts{matroid_from_json(field(j, "source")),
                        matroid_from_json(field(j, "target")),
                        {}};
    const json& map = field(j, "map");
    parts.map.assign(parts.source.n(), -1);
    for (auto it = map.begin(); it != map.end(); ++it) {
        int s = parts.source.label_index(it.key());
        int t = parts.target.label_index(it.value().get<std::string>());
        if (s < 0 || t < 0) throw parse_error("morphism.map: unknown label");
        parts.map[s] = t;
    }
    for (int v : parts.map)
        if (v < 0) throw parse_error("morphism.map: not total");
    return parts;
}

MatroidMorphism morphism_from_json(const json& j) {
    MorphismParts parts = morphism_parts_from_json(j);
    return MatroidMorphism::make(std::move(parts.source), std::move(parts.target),
                                 std::move(parts.map));
}

json poly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exp = json::array();
        for (uint8_t x : e) exp.push_back(int(x));
        terms.push_back(json{{"exp", std::move(exp)}, {"coef", c.str()}});
    }
    return json{{"vars", p.vars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const json& j) {
    MultiPoly p(strings_from(field(j, "vars"), "poly.vars"));
    for (const auto& t : field(j, "terms")) {
        const json& je = field(t, "exp");
        Exponent e;
        for (const auto& x : je) {
            int v = x.get<int>();
            if (v < 0 || v > 255) throw parse_error("poly.exp: exponent out of range");
            e.push_back(static_cast<uint8_t>(v));
        }
        const json& jc = field(t, "coef");
        Rational c = jc.is_string() ? Rational::from_string(jc.get<std::string>())
                                    : Rational(jc.get<long>());
        p.add_term(e, c);
    }
    return p;
}

json report_to_json(const TheoremReport& r) {
    json seqs = json::object();
    for (const auto& [name, seq] : r.sequences) {
        json a = json::array();
        for (const auto& x : seq) a.push_back(x.str());
        seqs[name] = std::move(a);
    }
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"k", c.k}, {"part", c.part}, {"lhs", c.lhs.str()},
                              {"rhs", c.rhs.str()}, {"holds", c.holds}});
    return json{{"theorem", r.theorem},
                {"instance", parse_json_text(r.instance.empty() ? "{}" : r.instance)},
                {"seed", r.seed},
                {"sequences", std::move(seqs)},
                {"checks", std::move(checks)},
                {"verdict", r.verdict}};
}

TheoremReport report_from_json(const json& j) {
    TheoremReport r;
    r.theorem = field(j, "theorem").get<std::string>();
    r.instance = field(j, "instance").dump();
    r.seed = field(j, "seed").get<uint64_t>();
    for (auto it = field(j, "sequences").begin(); it != field(j, "sequences").end(); ++it) {
        std::vector<Rational> seq;
        for (const auto& x : it.value()) seq.push_back(Rational::from_string(x.get<std::string>()));
        r.sequences.emplace_back(it.key(), std::move(seq));
    }
    for (const auto& c : field(j, "checks"))
        r.checks.push_back({field(c, "k").get<int>(), field(c, "part").get<std::string>(),
                            Rational::from_string(field(c, "lhs").get<std::string>()),
                            Rational::from_string(field(c, "rhs").get<std::string>()),
                            field(c, "holds").get<bool>()});
    r.verdict = field(j, "verdict").get<bool>();
    return r;
}

std::string report_to_csv(const TheoremReport& r) {
    std::ostringstream out;
    out << "theorem,seed,part,k,lhs,rhs,holds,verdict\n";
    for (const auto& c : r.checks)
        out << r.theorem << ',' << r.seed << ',' << c.part << ',' << c.k << ',' << c.lhs.str()
            << ',' << c.rhs.str() << ',' << (c.holds ? "true" : "false") << ','
            << (r.verdict ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace bimat
