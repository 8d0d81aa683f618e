#include "csmfan/io.hpp"

#include <algorithm>

namespace csmfan {

namespace {

json subset_to_array(Subset s) { return json(s.elements()); }

Subset subset_from_array(const json& arr, int ground_size) {
    if (!arr.is_array()) throw ParseError("subset must be an array of elements");
    Subset s;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw ParseError("subset element must be an integer");
        int e = v.get<int>();
        if (e < 0 || e >= ground_size) throw ParseError("subset element out of range");
        s = s.with(e);
    }
    return s;
}

}  // namespace

json matroid_to_json(const Matroid& m) {
    if (m.elements() != Subset::full(m.ground_size()))
        throw Error("only full-support matroids are serialized");
    std::vector<Subset> bases = m.bases();
    std::sort(bases.begin(), bases.end(), lex_less);
    json doc;
    doc["ground_size"] = m.ground_size();
    doc["bases"] = json::array();
    for (const Subset& b : bases) doc["bases"].push_back(subset_to_array(b));
    if (!m.name().empty()) doc["name"] = m.name();
    return doc;
}

Matroid matroid_from_json(const json& doc) {
    if (!doc.contains("ground_size") || !doc["ground_size"].is_number_integer())
        throw ParseError("matroid document needs integer \"ground_size\"");
    int n = doc["ground_size"].get<int>();
    if (n < 1 || n > kMaxGroundSize) throw ParseError("ground_size out of range");
    if (!doc.contains("bases") || !doc["bases"].is_array())
        throw ParseError("matroid document needs \"bases\" array");
    std::vector<Subset> bases;
    for (const auto& b : doc["bases"]) bases.push_back(subset_from_array(b, n));
    Matroid m = Matroid::from_bases(n, std::move(bases));
    if (doc.contains("name")) m = m.named(doc["name"].get<std::string>());
    return m;
}

Matroid matroid_from_document(const json& doc) {
    if (!doc.is_object()) throw ParseError("matroid document must be a JSON object");
    if (doc.contains("bases")) return matroid_from_json(doc);
    if (doc.contains("edges")) {
        if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
            throw ParseError("graph document needs integer \"vertices\"");
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("graph edge must be a pair of vertices");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        Matroid m = Matroid::from_graph(doc["vertices"].get<int>(), edges);
        if (doc.contains("name")) m = m.named(doc["name"].get<std::string>());
        return m;
    }
    if (doc.contains("matrix")) {
        long long field = 0;
        if (doc.contains("field")) field = doc["field"].get<long long>();
        std::vector<std::vector<long long>> rows;
        for (const auto& r : doc["matrix"]) {
            rows.emplace_back();
            for (const auto& v : r) rows.back().push_back(v.get<long long>());
        }
        Matroid m = Matroid::from_matrix(field, rows);
        if (doc.contains("name")) m = m.named(doc["name"].get<std::string>());
        return m;
    }
    throw ParseError("unrecognized matroid document (expected bases, edges, or matrix)");
}

json tutte_to_json(const TuttePolynomial& t) {
    json doc;
    doc["terms"] = json::array();
    for (const auto& [ij, c] : t.terms)  // map order is (i,j)-sorted
        doc["terms"].push_back({{"i", ij.first}, {"j", ij.second}, {"c", to_int64(c)}});
    return doc;
}

TuttePolynomial tutte_from_json(const json& doc) {
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw ParseError("tutte document needs \"terms\" array");
    TuttePolynomial t;
    for (const auto& term : doc["terms"])
        t.add(term.at("i").get<int>(), term.at("j").get<int>(),
              Int(term.at("c").get<long>()));
    return t;
}

json fan_to_json(const WeightedFan& fan) {
    json doc;
    doc["ambient"] = fan.ambient();
    doc["dim"] = fan.dim();
    doc["cones"] = json::array();
    for (const WeightedCone& wc : fan.cones()) {
        json cone;
        cone["rays"] = json::array();
        for (const IVec& r : wc.cone.rays) {
            json ray = json::array();
            for (const Int& x : r) ray.push_back(to_int64(x));
            cone["rays"].push_back(ray);
        }
        cone["weight"] = to_int64(wc.weight);
        doc["cones"].push_back(cone);
    }
    return doc;
}

WeightedFan fan_from_json(const json& doc) {
    if (!doc.contains("ambient") || !doc.contains("dim") || !doc.contains("cones"))
        throw ParseError("fan document needs ambient, dim and cones");
    int ambient = doc["ambient"].get<int>();
    int dim = doc["dim"].get<int>();
    std::vector<WeightedCone> cones;
    for (const auto& c : doc["cones"]) {
        std::vector<IVec> rays;
        for (const auto& r : c.at("rays")) {
            IVec ray;
            for (const auto& x : r) ray.push_back(Int(x.get<long>()));
            rays.push_back(std::move(ray));
        }
        cones.push_back({Cone(ambient, std::move(rays)), Int(c.at("weight").get<long>())});
    }
    return WeightedFan(ambient, dim, std::move(cones));
}

json flag_to_json(const FlagOfFlats& flag) {
    json arr = json::array();
    for (const Subset& f : flag.chain()) arr.push_back(subset_to_array(f));
    return arr;
}

std::string render_flag(const FlagOfFlats& flag) {
    std::string out;
    for (const Subset& f : flag.chain()) {
        if (!out.empty()) out += " ⊂ ";
        out += f.empty() ? "∅" : f.to_string();
    }
    return out;
}

json intersection_report_to_json(const std::vector<IntersectionPoint>& points) {
    json doc;
    doc["points"] = json::array();
    Int total = 0;
    for (const IntersectionPoint& p : points) {
        json coords = json::array();
        for (const Rat& c : p.point) coords.push_back(rat_to_string(c));
        doc["points"].push_back({{"coords", coords}, {"mult", to_int64(p.multiplicity)}});
        total += p.multiplicity;
    }
    doc["degree"] = to_int64(total);
    return doc;
}

json balance_report_to_json(const BalanceReport& report) {
    json doc;
    doc["balanced"] = report.balanced;
    doc["ridges_checked"] = report.ridges_checked;
    doc["failures"] = json::array();
    for (const RidgeFailure& f : report.failures) {
        json rays = json::array();
        for (const IVec& r : f.ridge_rays) {
            json ray = json::array();
            for (const Int& x : r) ray.push_back(to_int64(x));
            rays.push_back(ray);
        }
        json defect = json::array();
        for (const Int& x : f.defect) defect.push_back(to_int64(x));
        doc["failures"].push_back({{"ridge_rays", rays}, {"defect", defect}});
    }
    return doc;
}

json theorem_report_to_json(const TheoremReport& report) {
    json doc;
    doc["matroid"] = report.matroid_name;
    doc["rank"] = report.rank;
    doc["rows"] = json::array();
    for (const TheoremRow& r : report.rows)
        doc["rows"].push_back({{"k", r.k},
                               {"geometric", to_int64(r.geometric)},
                               {"combinatorial", to_int64(r.combinatorial)},
                               {"tutte", to_int64(r.tutte)},
                               {"pass", r.pass}});
    return doc;
}

}  // namespace csmfan
