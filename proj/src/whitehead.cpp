#include "polyprod/whitehead.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyprod {

namespace {

ExprPtr node(WhiteheadExpr e) { return std::make_shared<const WhiteheadExpr>(std::move(e)); }

}  // namespace

ExprPtr make_gen(int vertex) {
    if (vertex < 1) throw std::invalid_argument("generator vertex must be positive");
    WhiteheadExpr e{WhiteheadExpr::Kind::Gen};
    e.vertex = vertex;
    return node(std::move(e));
}

ExprPtr make_omega(Face F) {
    if (face_card(F) < 2)
        throw std::invalid_argument("omega_F needs |F| >= 2");
    WhiteheadExpr e{WhiteheadExpr::Kind::HigherProduct};
    e.product_support = F;
    return node(std::move(e));
}

ExprPtr make_bracket(ExprPtr lhs, ExprPtr rhs) {
    if (!lhs || !rhs) throw std::invalid_argument("bracket of a null expression");
    WhiteheadExpr e{WhiteheadExpr::Kind::Bracket};
    e.left = std::move(lhs);
    e.right = std::move(rhs);
    return node(std::move(e));
}

ExprPtr make_inclusion(ExprPtr inner) {
    if (!inner) throw std::invalid_argument("inclusion of a null expression");
    WhiteheadExpr e{WhiteheadExpr::Kind::Inclusion};
    e.left = std::move(inner);
    return node(std::move(e));
}

ExprPtr make_perm_twist(int sign, Permutation perm, ExprPtr inner) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +-1");
    if (!inner) throw std::invalid_argument("twist of a null expression");
    WhiteheadExpr e{WhiteheadExpr::Kind::PermTwist};
    e.twist_sign = sign;
    e.perm = std::move(perm);
    e.left = std::move(inner);
    return node(std::move(e));
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case WhiteheadExpr::Kind::Gen:
            return a->vertex == b->vertex;
        case WhiteheadExpr::Kind::HigherProduct:
            return a->product_support == b->product_support;
        case WhiteheadExpr::Kind::Bracket:
            return expr_equal(a->left, b->left) && expr_equal(a->right, b->right);
        case WhiteheadExpr::Kind::Inclusion:
            return expr_equal(a->left, b->left);
        case WhiteheadExpr::Kind::PermTwist:
            return a->twist_sign == b->twist_sign && a->perm == b->perm &&
                   expr_equal(a->left, b->left);
    }
    return false;
}

int degree_of(const ExprPtr& e, const SphereAssignment& X) {
    if (!e) throw std::invalid_argument("degree of a null expression");
    switch (e->kind) {
        case WhiteheadExpr::Kind::Gen:
            return X.at(e->vertex) + 1;
        case WhiteheadExpr::Kind::HigherProduct: {
            int deg = face_card(e->product_support) - 1;
            for (int v : face_vertices(e->product_support)) deg += X.at(v);
            return deg;
        }
        case WhiteheadExpr::Kind::Bracket:
            return degree_of(e->left, X) + degree_of(e->right, X) - 1;
        case WhiteheadExpr::Kind::Inclusion:
        case WhiteheadExpr::Kind::PermTwist:
            return degree_of(e->left, X);
    }
    throw std::invalid_argument("malformed expression");
}

namespace {

std::string render_set(Face F) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : face_vertices(F)) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace

std::string render_expr(const ExprPtr& e) {
    if (!e) return "<null>";
    switch (e->kind) {
        case WhiteheadExpr::Kind::Gen:
            return "e" + std::to_string(e->vertex);
        case WhiteheadExpr::Kind::HigherProduct:
            return "ω" + render_set(e->product_support);
        case WhiteheadExpr::Kind::Bracket:
            return "[" + render_expr(e->left) + ", " + render_expr(e->right) + "]";
        case WhiteheadExpr::Kind::Inclusion:
            return "j∘" + render_expr(e->left);
        case WhiteheadExpr::Kind::PermTwist: {
            std::ostringstream os;
            if (e->twist_sign == -1) os << "(-1)^1 ";
            os << render_expr(e->left) << " ∘ (1∧σ̂(";
            const auto& image = e->perm->image();
            for (std::size_t i = 0; i < image.size(); ++i)
                os << (i ? " " : "") << image[i];
            os << "))";
            return os.str();
        }
    }
    return "<malformed>";
}

std::pair<long long, ExprPtr> normalize_term(long long coeff, const ExprPtr& e) {
    if (e && e->kind == WhiteheadExpr::Kind::PermTwist && e->twist_sign == -1)
        return {-coeff, make_perm_twist(1, *e->perm, e->left)};
    return {coeff, e};
}

ExprPtr pinch_expression(const SimplicialComplex& K, const WedgeSummand& s,
                         const SphereAssignment& X) {
    X.validate();
    if (!K.is_shifted())
        throw std::invalid_argument("pinch description requires a shifted complex");
    if (s.I == 0 || (s.F & ~s.I) != 0 || face_card(s.F) < 2)
        throw std::invalid_argument("invalid wedge summand");
    auto KI = K.induced(s.I);
    if (KI.contains(s.F))
        throw std::invalid_argument("F is a face of K_I, not a minimal non-face");
    for (Face g = s.F; g != 0; g &= g - 1)
        if (!KI.contains(s.F & ~(g & -g)))
            throw std::invalid_argument("bd Delta^F is not contained in K_I");

    const int m = K.ambient_vertices();
    const Face full = (Face{1} << m) - 1;
    ExprPtr expr = make_omega(s.F);
    // omega_F already lands in the full target exactly in Porter's case.
    if (!(s.F == full && K == SimplicialComplex::boundary_simplex(full, m)))
        expr = make_inclusion(expr);
    auto chain = face_vertices(s.I & ~s.F);  // i_1 < ... < i_l
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        expr = make_bracket(make_gen(*it), expr);
    auto sigma = sigma_permutation(s.F, s.I, m);
    if (!sigma.is_identity())
        expr = make_perm_twist(sigma.sign(), sigma, expr);
    return expr;
}

std::vector<std::pair<WedgeSummand, ExprPtr>> full_pinch_map(const SimplicialComplex& K,
                                                             const SphereAssignment& X) {
    std::vector<std::pair<WedgeSummand, ExprPtr>> out;
    for (const auto& s : decompose(K)) out.emplace_back(s, pinch_expression(K, s, X));
    return out;
}

FormalSum jacobi_sum(int m) {
    if (m < 3) throw std::invalid_argument("the Jacobi identity needs m >= 3");
    const Face full = (Face{1} << m) - 1;
    FormalSum sum;
    for (int i = 1; i <= m; ++i) {
        Face F = full & ~(Face{1} << (i - 1));
        ExprPtr expr = make_bracket(make_gen(i), make_inclusion(make_omega(F)));
        auto sigma = sigma_permutation(F, full, m);
        if (!sigma.is_identity()) expr = make_perm_twist(1, sigma, expr);
        sum.terms.emplace_back((i - 1) % 2 == 0 ? 1 : -1, expr);
    }
    return sum;
}

}  // namespace polyprod
