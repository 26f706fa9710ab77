#include "polyprod/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyprod {

SphereAssignment SphereAssignment::constant(int m, int value) {
    SphereAssignment X;
    X.n.assign(m, value);
    X.validate();
    return X;
}

void SphereAssignment::validate() const {
    for (int v : n)
        if (v < 1) throw std::invalid_argument("sphere dimensions must be >= 1");
}

std::vector<WedgeSummand> decompose(const SimplicialComplex& K) {
    if (!K.is_shifted())
        throw std::invalid_argument("decomposition requires a shifted complex");
    if (K.has_ghost_vertices())
        throw std::invalid_argument("decomposition requires every vertex of [m] to be a face");
    const int m = K.ambient_vertices();
    std::vector<Face> subsets;
    for (Face I = 1; I < (Face{1} << m); ++I) subsets.push_back(I);
    std::sort(subsets.begin(), subsets.end(), face_lex_less);
    std::vector<WedgeSummand> out;
    for (Face I : subsets) {
        auto KI = K.induced(I);
        for (Face F : minimal_nonfaces_max(KI, face_max_vertex(I)))
            out.push_back({I, F});
    }
    return out;
}

int summand_dimension(const WedgeSummand& s, const SphereAssignment& X) {
    int total = 1 + (face_card(s.F) - 2);
    for (int v : face_vertices(s.I)) total += X.at(v);
    return total;
}

WedgeReport verify_wedge_equivalence(const SimplicialComplex& K) {
    WedgeReport report;
    report.shifted = K.is_shifted();
    report.ok = report.shifted;
    if (!report.shifted) return report;
    const int m = K.ambient_vertices();
    std::vector<Face> subsets;
    for (Face I = 1; I < (Face{1} << m); ++I) subsets.push_back(I);
    std::sort(subsets.begin(), subsets.end(), face_lex_less);
    for (Face I : subsets) {
        PerSubsetCheck check;
        check.I = I;
        auto KI = K.induced(I);
        std::vector<int> dims;
        for (Face F : minimal_nonfaces_max(KI, face_max_vertex(I)))
            dims.push_back(face_card(F) - 2);
        check.rhs = sphere_wedge_profile(dims);
        // A full simplex K_I is contractible: empty profile on both sides.
        check.lhs = reduced_homology(KI);
        check.ok = check.lhs == check.rhs;
        report.ok = report.ok && check.ok;
        report.per_subset.push_back(std::move(check));
    }
    return report;
}

HomologyProfile total_homology(const SimplicialComplex& K, const SphereAssignment& X) {
    std::vector<int> dims;
    for (const auto& s : decompose(K)) dims.push_back(summand_dimension(s, X));
    return sphere_wedge_profile(dims);
}

HomologyProfile hochster_cross_check(const SimplicialComplex& K) {
    const int m = K.ambient_vertices();
    HomologyProfile out;
    for (Face I = 1; I < (Face{1} << m); ++I) {
        auto KI = K.induced(I);
        if ((KI.support() & I) == 0) continue;  // no vertex of I is a face
        auto h = reduced_homology(KI);
        int shift = face_card(I) + 1;
        for (const auto& [q, g] : h.groups) {
            auto& target = out.groups[q + shift];
            target.betti += g.betti;
            target.torsion.insert(target.torsion.end(), g.torsion.begin(), g.torsion.end());
        }
    }
    for (auto& [q, g] : out.groups) g.torsion = torsion_normal_form(std::move(g.torsion));
    std::erase_if(out.groups,
                  [](const auto& kv) { return kv.second.betti == 0 && kv.second.torsion.empty(); });
    return out;
}

}  // namespace polyprod
