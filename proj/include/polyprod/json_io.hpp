#ifndef POLYPROD_JSON_IO_HPP
#define POLYPROD_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "polyprod/decomposition.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/simplicial_complex.hpp"
#include "polyprod/whitehead.hpp"

namespace polyprod {

// Interchange format: {"m": integer, "facets": [[ints]...]}, 1-based sorted
// vertex lists, facets in lexicographic order on output.
nlohmann::json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const HomologyProfile& H);
nlohmann::json face_to_json(Face f);

nlohmann::json summand_to_json(const WedgeSummand& s, const SphereAssignment& X);
nlohmann::json wedge_report_to_json(const WedgeReport& report);

// {"sign": s, "perm": [...], "chain": [...], "omega": [...]} plus the text
// rendering.  The permutation entry is the one-line image on [m] (identity
// when no twist is attached).
nlohmann::json expr_to_json(const ExprPtr& e, int m);

}  // namespace polyprod

#endif
