#ifndef POLYPROD_WHITEHEAD_HPP
#define POLYPROD_WHITEHEAD_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyprod/decomposition.hpp"
#include "polyprod/permutation.hpp"
#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

// Symbolic description of (compositions of) maps into the wedge of
// suspensions: generators e_i, higher products omega_F, iterated brackets,
// inclusions j o -, and permutation twists (sgn ^ sigma-hat followed by the
// relabeling homeomorphism).
struct WhiteheadExpr;
using ExprPtr = std::shared_ptr<const WhiteheadExpr>;

struct WhiteheadExpr {
    enum class Kind { Gen, HigherProduct, Bracket, Inclusion, PermTwist };

    Kind kind;
    int vertex = 0;                     // Gen
    Face product_support = 0;           // HigherProduct: F
    ExprPtr left, right;                // Bracket; left doubles as the inner
                                        // expression of Inclusion / PermTwist
    int twist_sign = 1;                 // PermTwist
    std::optional<Permutation> perm;    // PermTwist
};

ExprPtr make_gen(int vertex);
ExprPtr make_omega(Face F);  // |F| = 2 is the ordinary universal product
ExprPtr make_bracket(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_inclusion(ExprPtr inner);
ExprPtr make_perm_twist(int sign, Permutation perm, ExprPtr inner);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Dimension of the source sphere: Gen(i) -> n_i + 1; omega_F ->
// |F| - 1 + sum_{i in F} n_i; brackets add degrees minus one; inclusions
// and twists preserve it.
int degree_of(const ExprPtr& e, const SphereAssignment& X);

std::string render_expr(const ExprPtr& e);

struct FormalSum {
    std::vector<std::pair<long long, ExprPtr>> terms;
};

// Pull permutation-twist signs out into the coefficient.
std::pair<long long, ExprPtr> normalize_term(long long coeff, const ExprPtr& e);

// The bracket description of the pinch map restricted to the summand (I, F):
//   sgn(sigma(F,I)) . [e_{i_1},[...,[e_{i_l}, j o omega_F]...]] o (1 ^ sigma-hat)
// with I - F = {i_1 < ... < i_l}.  The twist is omitted when sigma(F,I) is
// the identity, and the inclusion when omega_F already lands in the full
// target (K = bd Delta^{[m]} and F = [m]).
ExprPtr pinch_expression(const SimplicialComplex& K, const WedgeSummand& s,
                         const SphereAssignment& X);

// One expression per summand of decompose(K), in that order.
std::vector<std::pair<WedgeSummand, ExprPtr>> full_pinch_map(const SimplicialComplex& K,
                                                             const SphereAssignment& X);

// The m-term Jacobi identity on the (m-3)-skeleton of the full simplex:
// sum_i (-1)^{i-1} [e_i, j_i o omega_{[m]-i}] o (1 ^ sigma_i-hat) = 0.
FormalSum jacobi_sum(int m);

}  // namespace polyprod

#endif
