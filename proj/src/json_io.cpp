#include "polyprod/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyprod {

using nlohmann::json;

json face_to_json(Face f) { return json(face_vertices(f)); }

json complex_to_json(const SimplicialComplex& K) {
    json facets = json::array();
    for (Face f : K.facets()) facets.push_back(face_to_json(f));
    return json{{"m", K.ambient_vertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets"))
        throw std::invalid_argument("complex object needs \"m\" and \"facets\"");
    int m = j.at("m").get<int>();
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
    return SimplicialComplex::from_facets(m, facets);
}

json profile_to_json(const HomologyProfile& H) {
    json out = json::object();
    for (const auto& [q, g] : H.groups)
        out[std::to_string(q)] = json{{"betti", g.betti}, {"torsion", g.torsion}};
    return out;
}

json summand_to_json(const WedgeSummand& s, const SphereAssignment& X) {
    return json{{"I", face_to_json(s.I)},
                {"F", face_to_json(s.F)},
                {"dim", summand_dimension(s, X)}};
}

json wedge_report_to_json(const WedgeReport& report) {
    json per = json::array();
    for (const auto& check : report.per_subset)
        per.push_back(json{{"I", face_to_json(check.I)},
                           {"lhs", profile_to_json(check.lhs)},
                           {"rhs", profile_to_json(check.rhs)},
                           {"ok", check.ok}});
    return json{{"shifted", report.shifted}, {"per_I", per}, {"ok", report.ok}};
}

namespace {

// Walk the fixed expression shape: optional twist, bracket chain, omega.
void collect(const ExprPtr& e, json& out) {
    switch (e->kind) {
        case WhiteheadExpr::Kind::PermTwist:
            out["sign"] = e->twist_sign;
            out["perm"] = e->perm->image();
            collect(e->left, out);
            return;
        case WhiteheadExpr::Kind::Bracket:
            if (e->left->kind == WhiteheadExpr::Kind::Gen)
                out["chain"].push_back(e->left->vertex);
            collect(e->right, out);
            return;
        case WhiteheadExpr::Kind::Inclusion:
            collect(e->left, out);
            return;
        case WhiteheadExpr::Kind::HigherProduct:
            out["omega"] = face_vertices(e->product_support);
            return;
        case WhiteheadExpr::Kind::Gen:
            out["gen"] = e->vertex;
            return;
    }
}

}  // namespace

json expr_to_json(const ExprPtr& e, int m) {
    json out;
    out["sign"] = 1;
    out["perm"] = Permutation::identity(m).image();
    out["chain"] = json::array();
    collect(e, out);
    out["text"] = render_expr(e);
    return out;
}

}  // namespace polyprod
