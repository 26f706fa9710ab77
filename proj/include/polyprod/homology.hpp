#ifndef POLYPROD_HOMOLOGY_HPP
#define POLYPROD_HOMOLOGY_HPP

#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

// Reduced homology, degree by degree: free rank plus torsion coefficients
// in divisibility order (each entry >= 2 and dividing the next).  Degrees
// with trivial homology are absent.
struct HomologyProfile {
    struct Group {
        long long betti = 0;
        std::vector<long long> torsion;
        bool operator==(const Group&) const = default;
    };
    std::map<int, Group> groups;

    bool operator==(const HomologyProfile&) const = default;
    bool trivial() const { return groups.empty(); }
    // Alternating sum of betti numbers (torsion ignored), reduced convention.
    long long euler_characteristic() const;
};

// The boundary operator from q-faces to (q-1)-faces with the alternating-sum
// signs, faces ordered lexicographically in each dimension.  q = 0 maps
// vertices to the empty face (augmentation).
struct BoundaryMatrix {
    int q = 0;
    std::vector<Face> rows;  // (q-1)-faces
    std::vector<Face> cols;  // q-faces
    IntMatrix entries;       // rows.size() x cols.size(), values in {-1,0,1}
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& K, int q);

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, r = rank.
// Exact arithmetic; the smallest-magnitude nonzero entry is chosen as pivot,
// ties broken row-major.
std::vector<BigInt> smith_normal_form(IntMatrix M);

// Exact reduced integral homology via Smith normal form of the augmented
// chain complex.  Throws on complexes without vertices.
HomologyProfile reduced_homology(const SimplicialComplex& K);

// Homology of a wedge of spheres with the given dimension multiset.
HomologyProfile sphere_wedge_profile(const std::vector<int>& dims);

// Normalize a multiset of cyclic orders into a divisibility chain, dropping
// trivial factors.
std::vector<long long> torsion_normal_form(std::vector<long long> orders);

}  // namespace polyprod

#endif
