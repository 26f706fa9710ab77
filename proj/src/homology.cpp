#include "polyprod/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polyprod {

long long HomologyProfile::euler_characteristic() const {
    long long chi = 0;
    for (const auto& [q, g] : groups) chi += (q % 2 == 0 ? 1 : -1) * g.betti;
    return chi;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& K, int q) {
    if (q < 0) throw std::invalid_argument("boundary matrix needs q >= 0");
    BoundaryMatrix B;
    B.q = q;
    for (Face f : K.faces()) {
        if (face_dim(f) == q) B.cols.push_back(f);
        if (face_dim(f) == q - 1) B.rows.push_back(f);
    }
    std::sort(B.rows.begin(), B.rows.end(), face_lex_less);
    std::sort(B.cols.begin(), B.cols.end(), face_lex_less);
    std::map<Face, int> row_index;
    for (std::size_t i = 0; i < B.rows.size(); ++i) row_index[B.rows[i]] = static_cast<int>(i);
    B.entries.assign(B.rows.size(), std::vector<BigInt>(B.cols.size(), 0));
    for (std::size_t j = 0; j < B.cols.size(); ++j) {
        auto verts = face_vertices(B.cols[j]);
        for (std::size_t t = 0; t < verts.size(); ++t) {
            Face sub = B.cols[j] & ~(Face{1} << (verts[t] - 1));
            B.entries[row_index.at(sub)][j] = (t % 2 == 0) ? 1 : -1;
        }
    }
    return B;
}

std::vector<BigInt> smith_normal_form(IntMatrix M) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows == 0 ? 0 : M[0].size();
    std::vector<BigInt> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Smallest-magnitude nonzero entry in the trailing submatrix.
        std::size_t pr = rows, pc = cols;
        BigInt best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (M[i][j] == 0) continue;
                BigInt a = abs(M[i][j]);
                if (pr == rows || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break;
        std::swap(M[t], M[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][t], M[i][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (M[i][t] == 0) continue;
                BigInt q = M[i][t] / M[t][t];
                for (std::size_t j = t; j < cols; ++j) M[i][j] -= q * M[t][j];
                if (M[i][t] != 0) {  // remainder smaller than the pivot
                    std::swap(M[t], M[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (M[t][j] == 0) continue;
                BigInt q = M[t][j] / M[t][t];
                for (std::size_t i = t; i < rows; ++i) M[i][j] -= q * M[i][t];
                if (M[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][t], M[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(M[t][t]));
        ++t;
    }
    // Enforce the divisibility chain on the diagonal.
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j)
            if (diag[j] % diag[i] != 0) {
                BigInt g = gcd(diag[i], diag[j]);
                diag[j] = diag[i] / g * diag[j];
                diag[i] = g;
            }
    std::sort(diag.begin(), diag.end());
    return diag;
}

HomologyProfile reduced_homology(const SimplicialComplex& K) {
    if (K.empty()) throw std::invalid_argument("homology of the empty complex");
    if (K.dim() < 0) throw std::invalid_argument("homology needs at least one vertex");
    int top = K.dim();
    // rank and invariant factors of each boundary map, q = 0 .. top+1
    std::vector<std::vector<BigInt>> factors(top + 2);
    std::vector<long long> cells(top + 2, 0);
    for (Face f : K.faces())
        if (face_dim(f) >= 0) ++cells[face_dim(f)];
    for (int q = 0; q <= top + 1; ++q) {
        if (q <= top) factors[q] = smith_normal_form(boundary_matrix(K, q).entries);
        // q = top+1 has no cells; factors stay empty
    }
    HomologyProfile H;
    for (int q = 0; q <= top; ++q) {
        long long rank_q = static_cast<long long>(factors[q].size());
        long long rank_q1 = q + 1 <= top ? static_cast<long long>(factors[q + 1].size()) : 0;
        HomologyProfile::Group g;
        g.betti = cells[q] - rank_q - rank_q1;
        if (q + 1 <= top)
            for (const BigInt& d : factors[q + 1])
                if (d > 1) g.torsion.push_back(d.convert_to<long long>());
        if (g.betti != 0 || !g.torsion.empty()) H.groups[q] = std::move(g);
    }
    return H;
}

HomologyProfile sphere_wedge_profile(const std::vector<int>& dims) {
    HomologyProfile H;
    for (int d : dims) ++H.groups[d].betti;
    return H;
}

std::vector<long long> torsion_normal_form(std::vector<long long> orders) {
    orders.erase(std::remove_if(orders.begin(), orders.end(),
                                [](long long d) { return d <= 1; }),
                 orders.end());
    for (std::size_t i = 0; i + 1 < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j)
            if (orders[j] % orders[i] != 0) {
                long long g = std::gcd(orders[i], orders[j]);
                orders[j] = orders[i] / g * orders[j];
                orders[i] = g;
            }
    std::sort(orders.begin(), orders.end());
    orders.erase(std::remove(orders.begin(), orders.end(), 1), orders.end());
    return orders;
}

}  // namespace polyprod
