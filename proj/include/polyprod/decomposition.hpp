#ifndef POLYPROD_DECOMPOSITION_HPP
#define POLYPROD_DECOMPOSITION_HPP

#include <map>
#include <vector>

#include "polyprod/homology.hpp"
#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

// X_i = S^{n_i} with n_i >= 1 for every vertex of [m].
struct SphereAssignment {
    std::vector<int> n;  // n[i-1] = dimension of the sphere at vertex i

    static SphereAssignment constant(int m, int value);
    int at(int vertex) const { return n.at(vertex - 1); }
    int size() const { return static_cast<int>(n.size()); }
    void validate() const;
};

// One wedge summand (I, F) with F a minimal non-face of K_I containing max I.
struct WedgeSummand {
    Face I = 0;
    Face F = 0;
    bool operator==(const WedgeSummand&) const = default;
};

// All summands of the wedge splitting of Z_K(CX, X), ordered by I then F
// lexicographically.  Rejects non-shifted K and ghost vertices.
std::vector<WedgeSummand> decompose(const SimplicialComplex& K);

// Dimension of the sphere Sigma|bd Delta^F| ^ X^I: 1 + (|F|-2) + sum n_i.
int summand_dimension(const WedgeSummand& s, const SphereAssignment& X);

struct PerSubsetCheck {
    Face I = 0;
    HomologyProfile lhs;  // reduced homology of K_I
    HomologyProfile rhs;  // wedge of spheres S^{|F|-2}, F in m(K_I)
    bool ok = false;
};

struct WedgeReport {
    bool shifted = false;
    bool ok = false;
    std::vector<PerSubsetCheck> per_subset;
};

// Check, for every nonempty I, that K_I has the homology of the wedge of
// boundary spheres indexed by m(K_I).
WedgeReport verify_wedge_equivalence(const SimplicialComplex& K);

// Homology of the full wedge: one sphere per summand at its dimension.
HomologyProfile total_homology(const SimplicialComplex& K, const SphereAssignment& X);

// Independent moment-angle oracle: H_q(Z_K(D^2, S^1)) assembled from the
// reduced homology of every induced subcomplex shifted by |I| + 1.
HomologyProfile hochster_cross_check(const SimplicialComplex& K);

}  // namespace polyprod

#endif
