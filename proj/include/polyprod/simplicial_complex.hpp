#ifndef POLYPROD_SIMPLICIAL_COMPLEX_HPP
#define POLYPROD_SIMPLICIAL_COMPLEX_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace polyprod {

// A face on the vertex set [m], m <= 16: bit (v-1) is set iff vertex v lies
// in the face.  The empty face is mask 0.
using Face = std::uint32_t;

constexpr int kMaxVertices = 16;

Face face_from_vertices(const std::vector<int>& vertices);
std::vector<int> face_vertices(Face f);
int face_card(Face f);
inline int face_dim(Face f) { return face_card(f) - 1; }
int face_max_vertex(Face f);  // 0 for the empty face

// Compare faces as strictly increasing vertex sequences.
bool face_lex_less(Face a, Face b);

// A finite simplicial complex on the ordered vertex set [m].  Faces form a
// downward-closed family; the empty face belongs to every nonempty complex.
// Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // the empty complex, m = 0

    // Downward closure of the given facets.  Throws std::invalid_argument on
    // vertices outside [1, m], m outside [0, kMaxVertices], or (unless
    // allow_ghosts) a vertex of [m] missing from the closure.
    static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets,
                                         bool allow_ghosts = false);
    static SimplicialComplex from_faces(int m, std::set<Face> faces, bool allow_ghosts = false);

    // The full simplex on [m].
    static SimplicialComplex simplex(int m);

    // All proper subsets of F.  Requires |F| >= 2; the ambient vertex count
    // is max(F) unless a larger m is given.
    static SimplicialComplex boundary_simplex(Face big_f, int m = 0);

    int ambient_vertices() const { return m_; }
    const std::set<Face>& faces() const { return faces_; }
    bool contains(Face f) const { return faces_.count(f) != 0; }
    bool empty() const { return faces_.empty(); }
    int dim() const;                 // -2 for the empty complex, -1 for {emptyset}
    Face support() const;            // union of all faces
    bool has_ghost_vertices() const;
    std::vector<Face> facets() const;  // maximal faces, lexicographic

    // K is shifted iff i in sigma in K and i < j <= m imply (sigma - i) u j in K.
    bool is_shifted() const;

    // K_I = { sigma in K : sigma subset I }.  Keeps original labels and the
    // ambient m, so the result may have ghost vertices.  Throws on empty I.
    SimplicialComplex induced(Face I) const;

    // Faces of dimension <= k; k < -1 gives the empty complex.
    SimplicialComplex skeleton(int k) const;

    // The smallest shifted complex on [m] containing K.
    SimplicialComplex shifted_closure() const;

    // Join with a fresh vertex: every face sigma contributes sigma and
    // sigma u {apex}.  Requires apex not in the support.
    SimplicialComplex cone(int apex) const;

    bool operator==(const SimplicialComplex& other) const {
        return m_ == other.m_ && faces_ == other.faces_;
    }

    // Canonical textual encoding (used for dedupe and cache keys).
    std::string encode() const;

private:
    int m_ = 0;
    std::set<Face> faces_;
};

// Order-isomorphic copy: vertices of I become 1..|I| preserving order.
// Requires every face of K to lie inside I.
SimplicialComplex relabel_compress(const SimplicialComplex& K, Face I);

// Relabel through an arbitrary bijection image[v-1] = new label of v.
SimplicialComplex relabel(const SimplicialComplex& K, const std::vector<int>& image);

// m(K) relative to the given top vertex: all F with top in F, F not a face,
// and every proper subset of F a face.  Lexicographic order.
std::vector<Face> minimal_nonfaces_max(const SimplicialComplex& K, int top);

// F = {d_1 < ... < d_l} viewed with the sentinel d_{l+1} = m + 1.
struct FSequence {
    std::vector<int> d;
    int m = 0;

    FSequence(std::vector<int> vertices, int ambient);
    int length() const { return static_cast<int>(d.size()); }
    int sentinel() const { return m + 1; }
};

// The index step function: i - 1 when d_i <= c < d_{i+1} and i <= k + 1,
// otherwise k.  Requires d_1 <= c <= m.
int d_function(int c, int k, const FSequence& F);

// Delta(G cap [a,b], [a,b]): the minimum shifted complex on the interval
// [a,b] (relabeled internally, returned in original labels) containing the
// simplex on G cap [a,b].  An empty interval yields the complex {emptyset}.
std::set<Face> delta_interval(const std::vector<int>& G, int a, int b);

// Delta(F, [m]) as a complex on [m] (ghost vertices below min F permitted).
SimplicialComplex delta_shifted(const std::vector<int>& F, int m);

// Skeleton identity: Delta(F_i,[d_1,c])^k = Delta(F_i,[d_1,c])^{d(c,k)}
// for all i <= l and d_i <= c < d_{i+1}.
bool verify_skeleton_identity(const FSequence& F, int k);

// Induction step (2): for 2 <= i <= l and d_i <= c < d_{i+1}, the complex
// Delta(F_i,[d_1,c])^{d(c,k)} decomposes as the faces avoiding c union the
// cone over the link of c:
//   Delta(F_i - c,[d_1,c-1])^{d(c,k)} u (Delta(F_i - c,[d_1,c-1])^{d(c,k)-1} * c).
bool verify_induction_step2(const FSequence& F, int k);

}  // namespace polyprod

#endif
