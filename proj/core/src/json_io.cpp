#include "mdet/json_io.hpp"

#include "mdet/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mdet {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Rat rat_from_json(const json& v, const std::string& where) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    throw ParseError("expected exact rational (string or integer) in " + where);
}

ordered_json flat_to_json(Subset f) {
    ordered_json arr = ordered_json::array();
    for (int e : subset_to_list(f)) arr.push_back(e);
    return arr;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string matrix_to_json(const QMat& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m.at(i, k)));
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j.dump(2);
}

QMat matrix_from_json(const std::string& text) {
    json j = json::parse(text);
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows) throw ParseError("matrix entries row count mismatch");
    QMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw ParseError("matrix entries column count mismatch");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = rat_from_json(entries[i][k], "matrix entry");
    }
    return m;
}

QMat matrix_from_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(cell);
        rows.push_back(std::move(row));
    }
    return QMat::from_strings(rows);
}

QMat matrix_from_text(const std::string& text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return matrix_from_json(text);
    return matrix_from_csv(text);
}

QMat matrix_from_file(const std::string& path) { return matrix_from_text(read_file(path)); }

std::string poly_to_json(const SparsePoly& p) {
    ordered_json j;
    j["nvars"] = p.nvars();
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        ordered_json t;
        t["exp"] = e;
        t["coef"] = to_string(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j.dump(2);
}

SparsePoly poly_from_json(const std::string& text) {
    json j = json::parse(text);
    SparsePoly p(j.at("nvars").get<unsigned>());
    for (const json& t : j.at("terms")) {
        Exponent e = t.at("exp").get<Exponent>();
        p.add_term(e, rat_from_json(t.at("coef"), "polynomial coefficient"));
    }
    return p;
}

SparsePoly poly_from_file(const std::string& path) { return poly_from_json(read_file(path)); }

std::string fan_to_json(const WeightedFan& fan) {
    ordered_json j;
    j["dimension"] = fan.dimension;
    ordered_json cones = ordered_json::array();
    for (const auto& [cone, weight] : fan.cones) {
        ordered_json c;
        ordered_json gens = ordered_json::array();
        for (std::size_t col = 0; col < cone.generators.cols(); ++col) {
            ordered_json g = ordered_json::array();
            for (std::size_t row = 0; row < cone.generators.rows(); ++row)
                g.push_back(to_string(cone.generators.at(row, col)));
            gens.push_back(g);
        }
        c["generators"] = gens;
        c["weight"] = to_string(weight);
        cones.push_back(c);
    }
    j["cones"] = cones;
    return j.dump(2);
}

std::string polytope_to_json(const LatticePolytope& p, const Int& degree) {
    ordered_json j;
    j["n"] = p.n;
    j["degree"] = to_string(degree);
    ordered_json verts = ordered_json::array();
    for (const auto& v : p.vertices) {
        ordered_json row = ordered_json::array();
        for (const Int& x : v) row.push_back(to_string(x));
        verts.push_back(row);
    }
    j["vertices"] = verts;
    return j.dump(2);
}

std::string weyl_op_to_json(const WeylOp& op) {
    ordered_json j;
    j["n"] = op.nvars();
    ordered_json terms = ordered_json::array();
    for (const WeylTerm& t : op.terms()) {
        ordered_json jt;
        jt["coef"] = to_string(t.coef);
        jt["zExp"] = t.z_exp;
        jt["dExp"] = t.d_exp;
        terms.push_back(jt);
    }
    j["terms"] = terms;
    return j.dump(2);
}

std::string series_to_json(const GenSeries& g) {
    ordered_json j;
    ordered_json base = ordered_json::array();
    for (const Rat& b : g.base()) base.push_back(to_string(b));
    j["base"] = base;
    j["distinguished"] = g.distinguished();
    ordered_json terms = ordered_json::array();
    for (const auto& [shift, coef] : g.terms()) {
        ordered_json t;
        t["shift"] = shift;
        t["coef"] = to_string(coef);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j.dump(2);
}

MultiplicityMap multiplicities_from_json(const std::string& text) {
    json j = json::parse(text);
    MultiplicityMap out;
    for (const json& entry : j.at("multiplicities")) {
        Subset f = subset_from_list(entry.at("flat").get<std::vector<int>>());
        const json& mv = entry.at("m");
        Int m = mv.is_string() ? Int(mv.get<std::string>()) : Int(mv.get<long long>());
        out.emplace_back(f, m);
    }
    return out;
}

MultiplicityMap multiplicities_from_file(const std::string& path) {
    return multiplicities_from_json(read_file(path));
}

namespace {

ordered_json row_to_json(const FlatRow& row) {
    ordered_json r;
    r["flat"] = flat_to_json(row.flat);
    r["rank"] = row.rank;
    r["connected"] = row.connected;
    if (row.defective.has_value())
        r["defective"] = *row.defective;
    else
        r["defective"] = nullptr;
    r["defectiveCertain"] = row.defective_certain;
    if (row.degree.has_value())
        r["degree"] = to_string(*row.degree);
    else
        r["degree"] = nullptr;
    if (row.multiplicity.has_value())
        r["multiplicity"] = to_string(*row.multiplicity);
    else
        r["multiplicity"] = nullptr;
    r["conjectural"] = row.conjectural;
    return r;
}

}  // namespace

std::string descriptor_to_json(const FactorizationDescriptor& d) {
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (const FlatRow& row : d.rows) rows.push_back(row_to_json(row));
    j["flats"] = rows;
    j["expectedDegree"] = to_string(d.expected_degree);
    if (d.degree_sum.has_value()) j["degreeSum"] = to_string(*d.degree_sum);
    if (d.sum_matches.has_value()) j["sumMatches"] = *d.sum_matches;
    return j.dump(2);
}

std::string harness_report_to_json(const HarnessReport& rep) {
    ordered_json j;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["conjectural"] = rep.conjectural;
    ordered_json rows = ordered_json::array();
    for (const HarnessRow& row : rep.rows) {
        ordered_json r;
        r["kind"] = row.kind;
        r["components"] = row.components;
        r["connected"] = row.connected;
        r["hasColoops"] = row.has_coloops;
        r["verdict"] = row.verdict;
        r["agrees"] = row.agrees;
        r["candidate"] = row.candidate;
        rows.push_back(r);
    }
    j["rows"] = rows;
    j["agreements"] = rep.agreements;
    j["candidates"] = rep.candidates;
    return j.dump(2);
}

std::string analysis_to_json(const Matroid& m, const FactorizationDescriptor& descriptor) {
    ordered_json j;
    const int n1 = m.n_elements();
    j["n"] = n1 - 1;
    j["d"] = m.d();
    j["rank"] = m.full_rank();
    FlatLattice lat = m.flats();
    ordered_json flats = ordered_json::array();
    for (std::size_t i = 0; i < lat.flats.size(); ++i) {
        ordered_json f;
        f["flat"] = flat_to_json(lat.flats[i]);
        f["rank"] = lat.ranks[i];
        flats.push_back(f);
    }
    j["flats"] = flats;
    ordered_json circuits = ordered_json::array();
    for (const Circuit& c : m.circuits()) {
        ordered_json cj;
        cj["support"] = flat_to_json(c.support);
        ordered_json dep = ordered_json::array();
        for (int e : subset_to_list(c.support)) dep.push_back(to_string(c.dependency[e]));
        cj["dependency"] = dep;
        circuits.push_back(cj);
    }
    j["circuits"] = circuits;
    j["components"] = m.n_components();
    j["characteristicPolynomial"] = m.characteristic_polynomial().to_string("q");
    j["mu"] = to_string(m.mobius_invariant());
    j["beta"] = to_string(m.beta_invariant());
    ordered_json degrees;
    degrees["L^1"] = to_string(degree_lk(m, 1));
    degrees["L^2"] = to_string(degree_lk(m, 2));
    degrees["L^-1"] = to_string(degree_lk(m, -1));
    degrees["L^-2"] = to_string(degree_lk(m, -2));
    degrees["E_L"] = to_string(degree_el(m));
    j["degrees"] = degrees;
    if (m.is_connected()) {
        PredictedDegree pd = predicted_discriminant_degree(m);
        ordered_json pj;
        pj["degree"] = to_string(pd.degree);
        pj["conjectural"] = pd.conjectural;
        j["predictedDiscriminantDegree"] = pj;
    }
    j["factorization"] = ordered_json::parse(descriptor_to_json(descriptor));
    return j.dump(2);
}

}  // namespace mdet
