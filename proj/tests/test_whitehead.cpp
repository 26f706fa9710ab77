#include <doctest.h>

#include <vector>

#include "polyprod/corpus.hpp"
#include "polyprod/sign_polynomial.hpp"
#include "polyprod/whitehead.hpp"

using namespace polyprod;

namespace {

Face f(std::vector<int> v) { return face_from_vertices(v); }

SimplicialComplex discrete_points(int m) {
    std::vector<std::vector<int>> facets;
    for (int v = 1; v <= m; ++v) facets.push_back({v});
    return SimplicialComplex::from_facets(m, facets);
}

}  // namespace

TEST_CASE("sigma(F, I) basics") {
    // F = I: every block is already in order
    auto id = sigma_permutation(f({2, 4, 5}), f({2, 4, 5}), 5);
    CHECK(id.is_identity());
    CHECK(id.sign() == 1);

    // m=5, I={2,4,5}, F={2,5}: swaps 2 and 4, fixes 1, 3, 5
    auto sigma = sigma_permutation(f({2, 5}), f({2, 4, 5}), 5);
    CHECK(sigma.image() == std::vector<int>{1, 4, 3, 2, 5});
    CHECK(sigma.sign() == -1);

    CHECK_THROWS_AS(sigma_permutation(f({1, 3}), f({1, 2}), 3), std::invalid_argument);
}

TEST_CASE("sigma_i has sign (-1)^{i-1}") {
    for (int m = 1; m <= 10; ++m) {
        Face full = (Face{1} << m) - 1;
        for (int i = 1; i <= m; ++i) {
            Face F = full & ~(Face{1} << (i - 1));
            if (F == 0) continue;  // m = 1
            auto sigma = sigma_permutation(F, full, m);
            CHECK(sigma.sign() == ((i - 1) % 2 == 0 ? 1 : -1));
            // bottom row is (i, 1, ..., i-hat, ..., m)
            CHECK(sigma(1) == i);
        }
    }
}

TEST_CASE("sign is multiplicative and matches transposition parity") {
    std::uint64_t state = 17;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 16;
    };
    for (int trial = 0; trial < 50; ++trial) {
        int m = 2 + static_cast<int>(next() % 7);
        std::vector<int> a(m), b(m);
        for (int i = 0; i < m; ++i) a[i] = b[i] = i + 1;
        for (int i = m - 1; i > 0; --i) std::swap(a[i], a[next() % (i + 1)]);
        for (int i = m - 1; i > 0; --i) std::swap(b[i], b[next() % (i + 1)]);
        Permutation pa(a), pb(b);
        CHECK(pa.compose(pb).sign() == pa.sign() * pb.sign());
        // parity via an explicit transposition decomposition
        auto arr = a;
        int swaps = 0;
        for (int i = 0; i < m; ++i)
            while (arr[i] != i + 1) {
                std::swap(arr[i], arr[arr[i] - 1]);
                ++swaps;
            }
        CHECK(pa.sign() == (swaps % 2 == 0 ? 1 : -1));
        CHECK(pa.compose(pa.inverse()).is_identity());
    }
}

TEST_CASE("sigma(F, I) block structure") {
    std::uint64_t state = 3;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 16;
    };
    for (int trial = 0; trial < 80; ++trial) {
        int m = 2 + static_cast<int>(next() % 7);
        Face full = (Face{1} << m) - 1;
        Face I = static_cast<Face>(next()) & full;
        if (I == 0) continue;
        Face F = static_cast<Face>(next()) & I;
        if (F == 0) continue;
        auto sigma = sigma_permutation(F, I, m);
        for (int v = 1; v <= m; ++v)
            if (!(I >> (v - 1) & 1)) CHECK(sigma(v) == v);  // complement fixed
        // positions of I map onto I - F then F, order preserved in blocks
        auto positions = face_vertices(I);
        auto b_block = face_vertices(I & ~F);
        auto a_block = face_vertices(F);
        std::vector<int> bottom = b_block;
        bottom.insert(bottom.end(), a_block.begin(), a_block.end());
        for (std::size_t t = 0; t < positions.size(); ++t)
            CHECK(sigma(positions[t]) == bottom[t]);
    }
}

TEST_CASE("pinch expression: Porter's higher product") {
    for (int m = 2; m <= 6; ++m) {
        Face full = (Face{1} << m) - 1;
        auto bd = SimplicialComplex::boundary_simplex(full, m);
        auto X = SphereAssignment::constant(m, 1);
        auto expr = pinch_expression(bd, {full, full}, X);
        CHECK(expr->kind == WhiteheadExpr::Kind::HigherProduct);
        CHECK(expr->product_support == full);
    }
}

TEST_CASE("pinch expression: a bracket with one generator") {
    auto K = discrete_points(3);
    auto X = SphereAssignment::constant(3, 1);
    auto expr = pinch_expression(K, {f({1, 2, 3}), f({1, 3})}, X);
    // sign(sigma({1,3},{1,2,3})) . [e_2, j o omega_{1,3}] o (1 ^ sigma-hat)
    REQUIRE(expr->kind == WhiteheadExpr::Kind::PermTwist);
    auto sigma = sigma_permutation(f({1, 3}), f({1, 2, 3}), 3);
    CHECK(expr->twist_sign == sigma.sign());
    CHECK(*expr->perm == sigma);
    auto inner = expr->left;
    REQUIRE(inner->kind == WhiteheadExpr::Kind::Bracket);
    CHECK(inner->left->kind == WhiteheadExpr::Kind::Gen);
    CHECK(inner->left->vertex == 2);
    REQUIRE(inner->right->kind == WhiteheadExpr::Kind::Inclusion);
    CHECK(inner->right->left->product_support == f({1, 3}));
}

TEST_CASE("pinch expression rejects invalid summands") {
    auto K = discrete_points(3);
    auto X = SphereAssignment::constant(3, 1);
    CHECK_THROWS_AS(pinch_expression(K, {f({1, 2, 3}), f({1, 2, 3})}, X),
                    std::invalid_argument);  // bd Delta^F not inside K_I
    CHECK_THROWS_AS(pinch_expression(SimplicialComplex::from_facets(3, {{1, 2}, {3}}),
                                     {f({1, 2, 3}), f({1, 3})}, X),
                    std::invalid_argument);  // not shifted
}

TEST_CASE("degree bookkeeping") {
    auto ones = SphereAssignment::constant(3, 1);
    CHECK(degree_of(make_gen(2), ones) == 2);
    CHECK(degree_of(make_omega(f({1, 2, 3})), ones) == 5);
    auto expr = make_bracket(make_gen(2), make_inclusion(make_omega(f({1, 3}))));
    CHECK(degree_of(expr, ones) == 4);
    CHECK(degree_of(expr, ones) ==
          summand_dimension({f({1, 2, 3}), f({1, 3})}, ones));
}

TEST_CASE("degree of every pinch expression matches the summand dimension") {
    for (const auto& K : random_shifted_corpus(5, 25, 77)) {
        for (int n = 1; n <= 3; ++n) {
            auto X = SphereAssignment::constant(5, n);
            for (const auto& [s, e] : full_pinch_map(K, X))
                CHECK(degree_of(e, X) == summand_dimension(s, X));
        }
    }
}

TEST_CASE("full pinch map summaries") {
    auto X3 = SphereAssignment::constant(3, 1);
    CHECK(full_pinch_map(SimplicialComplex::simplex(4), SphereAssignment::constant(4, 1))
              .empty());

    auto bd3 = SimplicialComplex::boundary_simplex(f({1, 2, 3}));
    auto porter = full_pinch_map(bd3, X3);
    REQUIRE(porter.size() == 1);
    CHECK(render_expr(porter[0].second) == "ω{1,2,3}");

    auto two = discrete_points(2);
    auto universal = full_pinch_map(two, SphereAssignment::constant(2, 1));
    REQUIRE(universal.size() == 1);
    CHECK(render_expr(universal[0].second) == "ω{1,2}");
}

TEST_CASE("jacobi sum structure") {
    auto sum = jacobi_sum(3);
    REQUIRE(sum.terms.size() == 3);
    CHECK(sum.terms[0].first == 1);
    CHECK(sum.terms[1].first == -1);
    CHECK(sum.terms[2].first == 1);
    CHECK_THROWS_AS(jacobi_sum(2), std::invalid_argument);

    // coefficients equal sgn(sigma_i)
    for (int m = 3; m <= 8; ++m) {
        auto s = jacobi_sum(m);
        Face full = (Face{1} << m) - 1;
        for (int i = 1; i <= m; ++i) {
            auto sigma = sigma_permutation(full & ~(Face{1} << (i - 1)), full, m);
            CHECK(s.terms[i - 1].first == sigma.sign());
        }
    }
}

TEST_CASE("jacobi terms equal pinch expressions on the codimension-two skeleton") {
    for (int m = 3; m <= 7; ++m) {
        auto K = SimplicialComplex::simplex(m).skeleton(m - 3);
        auto X = SphereAssignment::constant(m, 1);
        auto sum = jacobi_sum(m);
        Face full = (Face{1} << m) - 1;
        for (int i = 1; i <= m; ++i) {
            Face F = full & ~(Face{1} << (i - 1));
            auto pinch = pinch_expression(K, {full, F}, X);
            auto [pc, pe] = normalize_term(1, pinch);
            auto [jc, je] = normalize_term(sum.terms[i - 1].first, sum.terms[i - 1].second);
            CHECK(pc == jc);
            CHECK(expr_equal(pe, je));
        }
    }
}

TEST_CASE("sign polynomial ring and evaluation") {
    auto p = SignPolynomial::var(0), q = SignPolynomial::var(1);
    CHECK((p + p).zero());
    CHECK(p * q == q * p);
    CHECK((p + q) * (p + q) == p + q);  // squares collapse over GF(2)
    for (std::uint32_t parities = 0; parities < 4; ++parities) {
        auto lhs = ((p + q) * p).evaluate(parities);
        auto rhs = (p * p + q * p).evaluate(parities);
        CHECK(lhs == rhs);
    }
    CHECK(SignPolynomial::one().sign_at(0) == -1);
}

TEST_CASE("corollary proof arithmetic") {
    CHECK(corollary_proof_check());
    // concrete parities reproduce the same verdict
    auto p = SignPolynomial::var(0);
    for (std::uint32_t parities = 0; parities < 8; ++parities)
        CHECK(p.sign_at(parities) == (parities & 1 ? -1 : 1));
    ProofCheckOptions flipped;
    flipped.flip_antisymmetry_sign = true;
    CHECK_FALSE(corollary_proof_check(flipped));
    ProofCheckOptions dropped;
    dropped.drop_multiplier = true;
    CHECK_FALSE(corollary_proof_check(dropped));
}
