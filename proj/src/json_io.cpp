#include "kocalc/json_io.hpp"

namespace kocalc {

json int_to_json(const Int& v) {
    static const Int kMax = Int(1) << 53;
    if (v >= -kMax && v <= kMax) return static_cast<std::int64_t>(v);
    return v.str();
}

json complex_to_json(const DeltaComplex& X) {
    json j;
    json dims = json::array();
    for (int d = 0; d <= X.dim(); ++d) dims.push_back(X.count(d));
    j["dims"] = dims;
    json faces = json::object();
    for (int d = 1; d <= X.dim(); ++d) {
        json level = json::array();
        for (int s = 0; s < X.count(d); ++s) level.push_back(X.faces_of(d, s));
        faces[std::to_string(d)] = level;
    }
    j["faces"] = faces;
    bool any_label = false;
    for (int d = 0; d <= X.dim(); ++d)
        for (int s = 0; s < X.count(d); ++s)
            if (!X.labels(d)[s].empty()) any_label = true;
    if (any_label) {
        json labels = json::object();
        for (int d = 0; d <= X.dim(); ++d) {
            json level = json::array();
            for (int s = 0; s < X.count(d); ++s) level.push_back(X.labels(d)[s]);
            labels[std::to_string(d)] = level;
        }
        j["labels"] = labels;
    }
    return j;
}

DeltaComplex complex_from_json(const json& j) {
    if (!j.contains("dims") || !j["dims"].is_array())
        throw ValidationError("complex JSON: missing dims");
    std::vector<int> dims = j["dims"].get<std::vector<int>>();
    DeltaComplex X;
    if (dims.empty()) throw ValidationError("complex JSON: empty dims");
    for (int s = 0; s < dims[0]; ++s) X.add_simplex(0, {});
    for (std::size_t d = 1; d < dims.size(); ++d) {
        std::string key = std::to_string(d);
        if (!j.contains("faces") || !j["faces"].contains(key))
            throw ValidationError("complex JSON: missing faces for dimension " + key);
        const json& level = j["faces"][key];
        if (static_cast<int>(level.size()) != dims[d])
            throw ValidationError("complex JSON: face count disagrees with dims");
        for (const auto& f : level) X.add_simplex(static_cast<int>(d), f.get<std::vector<int>>());
    }
    X.validate();
    return X;
}

json sign_cocycle_to_json(const SignCocycle& c) { return f2_cocycle_to_json(1, c.values); }

SignCocycle sign_cocycle_from_json(const json& j, const DeltaComplex& X) {
    SignCocycle c;
    c.values = f2_cocycle_from_json(j, 1, X);
    c.require_valid(X);
    return c;
}

json f2_cocycle_to_json(int degree, const F2Vec& c) {
    json j;
    j["degree"] = degree;
    json vals = json::object();
    for (int s = 0; s < c.size(); ++s)
        if (c.get(s)) vals[std::to_string(s)] = 1;
    j["values"] = vals;
    return j;
}

F2Vec f2_cocycle_from_json(const json& j, int expected_degree, const DeltaComplex& X) {
    if (!j.contains("degree") || j["degree"].get<int>() != expected_degree)
        throw ValidationError("cocycle JSON: wrong or missing degree");
    F2Vec out(X.count(expected_degree));
    if (j.contains("values")) {
        for (auto it = j["values"].begin(); it != j["values"].end(); ++it) {
            int idx = std::stoi(it.key());
            if (idx < 0 || idx >= out.size()) throw ValidationError("cocycle JSON: index out of range");
            int v = it.value().get<int>();
            if (v != 0 && v != 1) throw ValidationError("cocycle JSON: values must be 0 or 1");
            if (v) out.set(idx, true);
        }
    }
    return out;
}

json group_to_json(const AbelianGroup& g) {
    json j;
    j["free_rank"] = g.free_rank;
    json tors = json::array();
    for (const Int& d : g.torsion) tors.push_back(int_to_json(d));
    j["torsion"] = tors;
    return j;
}

json ko_report_to_json(const KOGroupReport& r) {
    json j;
    j["degree"] = r.degree;
    j["reduced"] = r.reduced;
    json qs = json::array();
    for (const auto& q : r.quotients) qs.push_back(group_to_json(q));
    j["quotients"] = qs;
    j["order"] = int_to_json(r.finite_order);
    j["free_rank"] = r.free_rank;
    j["extension_ambiguous"] = r.extension_ambiguous;
    j["undetermined"] = r.undetermined;
    return j;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace kocalc
