#include "polyprod/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace polyprod {

Face face_from_vertices(const std::vector<int>& vertices) {
    Face f = 0;
    for (int v : vertices) {
        if (v < 1 || v > kMaxVertices)
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        f |= Face{1} << (v - 1);
    }
    return f;
}

std::vector<int> face_vertices(Face f) {
    std::vector<int> out;
    for (int v = 1; v <= kMaxVertices; ++v)
        if (f >> (v - 1) & 1) out.push_back(v);
    return out;
}

int face_card(Face f) { return std::popcount(f); }

int face_max_vertex(Face f) {
    return f == 0 ? 0 : std::bit_width(f);
}

bool face_lex_less(Face a, Face b) {
    // Compare the strictly increasing vertex sequences lexicographically.
    while (a != 0 && b != 0) {
        int va = std::countr_zero(a), vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

namespace {

void check_ambient(int m) {
    if (m < 0 || m > kMaxVertices)
        throw std::invalid_argument("ambient vertex count out of range: " + std::to_string(m));
}

std::set<Face> downward_closure(const std::set<Face>& seed) {
    std::set<Face> out;
    std::deque<Face> todo(seed.begin(), seed.end());
    while (!todo.empty()) {
        Face f = todo.front();
        todo.pop_front();
        if (!out.insert(f).second) continue;
        for (Face g = f; g != 0; g &= g - 1) {
            Face sub = f & ~(g & -g);  // drop one vertex
            if (!out.count(sub)) todo.push_back(sub);
        }
    }
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<std::vector<int>>& facets,
                                                bool allow_ghosts) {
    std::set<Face> seed;
    for (const auto& f : facets) seed.insert(face_from_vertices(f));
    return from_faces(m, std::move(seed), allow_ghosts);
}

SimplicialComplex SimplicialComplex::from_faces(int m, std::set<Face> faces, bool allow_ghosts) {
    check_ambient(m);
    SimplicialComplex K;
    K.m_ = m;
    K.faces_ = downward_closure(faces);
    for (Face f : K.faces_)
        if (face_max_vertex(f) > m)
            throw std::invalid_argument("face has a vertex above the ambient bound");
    if (!allow_ghosts && K.has_ghost_vertices())
        throw std::invalid_argument("ghost vertex present (pass allow_ghosts to permit)");
    return K;
}

SimplicialComplex SimplicialComplex::simplex(int m) {
    check_ambient(m);
    SimplicialComplex K;
    K.m_ = m;
    Face full = (Face{1} << m) - 1;
    for (Face f = 0; f <= full; ++f) K.faces_.insert(K.faces_.end(), f);
    return K;
}

SimplicialComplex SimplicialComplex::boundary_simplex(Face big_f, int m) {
    if (face_card(big_f) < 2)
        throw std::invalid_argument("boundary of a simplex needs |F| >= 2");
    if (m == 0) m = face_max_vertex(big_f);
    check_ambient(m);
    if (face_max_vertex(big_f) > m)
        throw std::invalid_argument("F exceeds the ambient bound");
    SimplicialComplex K;
    K.m_ = m;
    // Proper subsets of F, enumerated via the subset-lattice walk.
    for (Face sub = big_f; sub != 0; sub = (sub - 1) & big_f)
        if (sub != big_f) K.faces_.insert(sub);
    K.faces_.insert(0);
    K.faces_.erase(big_f);
    return K;
}

int SimplicialComplex::dim() const {
    if (faces_.empty()) return -2;
    int d = -1;
    for (Face f : faces_) d = std::max(d, face_dim(f));
    return d;
}

Face SimplicialComplex::support() const {
    Face s = 0;
    for (Face f : faces_) s |= f;
    return s;
}

bool SimplicialComplex::has_ghost_vertices() const {
    if (faces_.empty()) return m_ > 0;
    return support() != (Face{1} << m_) - 1;
}

std::vector<Face> SimplicialComplex::facets() const {
    std::vector<Face> out;
    for (Face f : faces_) {
        bool maximal = true;
        for (int v = 1; v <= m_ && maximal; ++v)
            if (!(f >> (v - 1) & 1) && contains(f | Face{1} << (v - 1))) maximal = false;
        if (maximal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

bool SimplicialComplex::is_shifted() const {
    for (Face f : faces_) {
        for (int i = 1; i <= m_; ++i) {
            if (!(f >> (i - 1) & 1)) continue;
            for (int j = i + 1; j <= m_; ++j) {
                if (f >> (j - 1) & 1) continue;  // (f - i) u j is a subset of f
                Face g = (f & ~(Face{1} << (i - 1))) | Face{1} << (j - 1);
                if (!contains(g)) return false;
            }
        }
    }
    return true;
}

SimplicialComplex SimplicialComplex::induced(Face I) const {
    if (I == 0) throw std::invalid_argument("induced subcomplex needs a nonempty vertex set");
    SimplicialComplex K;
    K.m_ = m_;
    for (Face f : faces_)
        if ((f & ~I) == 0) K.faces_.insert(K.faces_.end(), f);
    return K;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
    SimplicialComplex K;
    K.m_ = m_;
    if (k < -1) return K;
    for (Face f : faces_)
        if (face_dim(f) <= k) K.faces_.insert(K.faces_.end(), f);
    return K;
}

SimplicialComplex SimplicialComplex::shifted_closure() const {
    SimplicialComplex K;
    K.m_ = m_;
    std::deque<Face> todo(faces_.begin(), faces_.end());
    while (!todo.empty()) {
        Face f = todo.front();
        todo.pop_front();
        if (!K.faces_.insert(f).second) continue;
        for (Face g = f; g != 0; g &= g - 1) {
            Face bit = g & -g;
            Face sub = f & ~bit;
            if (!K.faces_.count(sub)) todo.push_back(sub);
            int i = std::countr_zero(bit) + 1;
            for (int j = i + 1; j <= m_; ++j) {
                if (f >> (j - 1) & 1) continue;
                Face bumped = sub | Face{1} << (j - 1);
                if (!K.faces_.count(bumped)) todo.push_back(bumped);
            }
        }
    }
    return K;
}

SimplicialComplex SimplicialComplex::cone(int apex) const {
    if (apex < 1 || apex > kMaxVertices)
        throw std::invalid_argument("cone apex out of range");
    Face bit = Face{1} << (apex - 1);
    if (support() & bit)
        throw std::invalid_argument("cone apex already a vertex");
    SimplicialComplex K;
    K.m_ = std::max(m_, apex);
    for (Face f : faces_) {
        K.faces_.insert(f);
        K.faces_.insert(f | bit);
    }
    return K;
}

std::string SimplicialComplex::encode() const {
    std::ostringstream os;
    os << m_ << ':';
    for (Face f : faces_) os << f << ',';
    return os.str();
}

SimplicialComplex relabel_compress(const SimplicialComplex& K, Face I) {
    std::vector<int> image(kMaxVertices, 0);
    int next = 1;
    for (int v : face_vertices(I)) image[v - 1] = next++;
    SimplicialComplex out;
    std::set<Face> faces;
    for (Face f : K.faces()) {
        if (f & ~I) throw std::invalid_argument("face outside the relabeling set");
        Face g = 0;
        for (int v : face_vertices(f)) g |= Face{1} << (image[v - 1] - 1);
        faces.insert(g);
    }
    return SimplicialComplex::from_faces(next - 1, std::move(faces), /*allow_ghosts=*/true);
}

SimplicialComplex relabel(const SimplicialComplex& K, const std::vector<int>& image) {
    int m = K.ambient_vertices();
    if (static_cast<int>(image.size()) != m)
        throw std::invalid_argument("relabeling image has the wrong length");
    std::set<Face> faces;
    for (Face f : K.faces()) {
        Face g = 0;
        for (int v : face_vertices(f)) g |= Face{1} << (image[v - 1] - 1);
        faces.insert(g);
    }
    return SimplicialComplex::from_faces(m, std::move(faces), /*allow_ghosts=*/true);
}

std::vector<Face> minimal_nonfaces_max(const SimplicialComplex& K, int top) {
    if (top < 1 || top > K.ambient_vertices())
        throw std::invalid_argument("top vertex out of range");
    if (K.ambient_vertices() > kMaxVertices)
        throw std::invalid_argument("subset enumeration refused above m = 16");
    Face top_bit = Face{1} << (top - 1);
    // Candidates live inside the face support plus the top vertex: every
    // proper subset of F must be a face, so singletons of F - top are faces.
    Face universe = K.support() | top_bit;
    Face rest = universe & ~top_bit;
    std::vector<Face> out;
    Face sub = rest;
    while (true) {
        Face F = sub | top_bit;
        if (!K.contains(F)) {
            bool boundary_in = true;
            for (Face g = F; g != 0 && boundary_in; g &= g - 1)
                if (!K.contains(F & ~(g & -g))) boundary_in = false;
            if (boundary_in) out.push_back(F);
        }
        if (sub == 0) break;
        sub = (sub - 1) & rest;
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

FSequence::FSequence(std::vector<int> vertices, int ambient) : d(std::move(vertices)), m(ambient) {
    if (d.empty()) throw std::invalid_argument("FSequence needs at least one vertex");
    if (!std::is_sorted(d.begin(), d.end()) ||
        std::adjacent_find(d.begin(), d.end()) != d.end())
        throw std::invalid_argument("FSequence vertices must be strictly increasing");
    if (d.front() < 1 || d.back() > m)
        throw std::invalid_argument("FSequence vertex outside [1, m]");
}

int d_function(int c, int k, const FSequence& F) {
    if (c < F.d.front() || c > F.m)
        throw std::invalid_argument("d(c,k) needs d_1 <= c <= m");
    // The unique i with d_i <= c < d_{i+1}, using the sentinel d_{l+1} = m+1.
    int i = 0;
    for (int t = 0; t < F.length(); ++t)
        if (F.d[t] <= c) i = t + 1;
    if (i <= k + 1) return i - 1;
    return k;
}

namespace {

std::set<Face> join_vertex(const std::set<Face>& faces, int apex) {
    Face bit = Face{1} << (apex - 1);
    std::set<Face> out;
    for (Face f : faces) {
        out.insert(f);
        out.insert(f | bit);
    }
    return out;
}

std::set<Face> skeleton_faces(const std::set<Face>& faces, int k) {
    std::set<Face> out;
    if (k < -1) return out;
    for (Face f : faces)
        if (face_dim(f) <= k) out.insert(f);
    return out;
}

}  // namespace

std::set<Face> delta_interval(const std::vector<int>& G, int a, int b) {
    if (a > b) return {Face{0}};
    std::vector<int> local;
    for (int v : G)
        if (a <= v && v <= b) local.push_back(v - a + 1);
    if (local.empty()) return {Face{0}};
    int len = b - a + 1;
    auto closed = SimplicialComplex::from_faces(len, {face_from_vertices(local)},
                                                /*allow_ghosts=*/true)
                      .shifted_closure();
    std::set<Face> out;
    for (Face f : closed.faces()) out.insert(f << (a - 1));
    return out;
}

SimplicialComplex delta_shifted(const std::vector<int>& F, int m) {
    return SimplicialComplex::from_faces(m, {face_from_vertices(F)}, /*allow_ghosts=*/true)
        .shifted_closure();
}

bool verify_skeleton_identity(const FSequence& F, int k) {
    for (int i = 1; i <= F.length(); ++i) {
        std::vector<int> Fi(F.d.begin(), F.d.begin() + i);
        int hi = (i < F.length() ? F.d[i] : F.sentinel()) - 1;
        for (int c = F.d[i - 1]; c <= hi; ++c) {
            auto delta = delta_interval(Fi, F.d.front(), c);
            if (skeleton_faces(delta, k) != skeleton_faces(delta, d_function(c, k, F)))
                return false;
        }
    }
    return true;
}

bool verify_induction_step2(const FSequence& F, int k) {
    for (int i = 2; i <= F.length(); ++i) {
        std::vector<int> Fi(F.d.begin(), F.d.begin() + i);
        int di = F.d[i - 1];
        int hi = (i < F.length() ? F.d[i] : F.sentinel()) - 1;
        for (int c = di; c <= hi; ++c) {
            int dck = d_function(c, k, F);
            std::vector<int> Fi_minus_c;
            for (int v : Fi)
                if (v != c) Fi_minus_c.push_back(v);
            auto lhs = skeleton_faces(delta_interval(Fi, F.d.front(), c), dck);
            auto base = skeleton_faces(delta_interval(Fi_minus_c, F.d.front(), c - 1), dck);
            auto cone_piece = join_vertex(
                skeleton_faces(delta_interval(Fi_minus_c, F.d.front(), c - 1), dck - 1), c);
            base.insert(cone_piece.begin(), cone_piece.end());
            if (lhs != base) return false;
        }
    }
    return true;
}

}  // namespace polyprod
