#include "polyprod/sign_polynomial.hpp"

#include <bit>
#include <map>

namespace polyprod {

SignPolynomial SignPolynomial::one() {
    SignPolynomial p;
    p.monomials_.insert(0);
    return p;
}

SignPolynomial SignPolynomial::var(int index) {
    SignPolynomial p;
    p.monomials_.insert(std::uint32_t{1} << index);
    return p;
}

SignPolynomial SignPolynomial::operator+(const SignPolynomial& other) const {
    SignPolynomial out = *this;
    out += other;
    return out;
}

SignPolynomial& SignPolynomial::operator+=(const SignPolynomial& other) {
    for (auto mon : other.monomials_) {
        auto [it, inserted] = monomials_.insert(mon);
        if (!inserted) monomials_.erase(it);  // coefficients live in GF(2)
    }
    return *this;
}

SignPolynomial SignPolynomial::operator*(const SignPolynomial& other) const {
    SignPolynomial out;
    for (auto a : monomials_)
        for (auto b : other.monomials_) {
            auto [it, inserted] = out.monomials_.insert(a | b);  // x^2 = x
            if (!inserted) out.monomials_.erase(it);
        }
    return out;
}

int SignPolynomial::evaluate(std::uint32_t parities) const {
    int value = 0;
    for (auto mon : monomials_)
        if ((mon & parities) == mon) value ^= 1;
    return value;
}

std::string SignPolynomial::to_string(const std::vector<std::string>& names) const {
    if (monomials_.empty()) return "0";
    std::string out;
    for (auto mon : monomials_) {
        if (!out.empty()) out += " + ";
        if (mon == 0) {
            out += "1";
            continue;
        }
        for (std::size_t i = 0; i < names.size(); ++i)
            if (mon >> i & 1) out += names[i];
    }
    return out;
}

namespace {

// Bracket shapes appearing in the Corollary's proof, identified by the cyclic
// arrangement of alpha, beta, gamma.
enum class Term { A_BC, B_AC, G_AB, B_GA };

using TermSum = std::map<Term, SignPolynomial>;

}  // namespace

bool corollary_proof_check(const ProofCheckOptions& options) {
    const auto p = SignPolynomial::var(0);
    const auto q = SignPolynomial::var(1);
    const auto r = SignPolynomial::var(2);
    const auto one = SignPolynomial::one();

    // Intermediate identity read off the wedge description:
    //   (-1)^p [a,[b,c]] - (-1)^{q+pq} [b,[a,c]] + (-1)^{r+(p+q)r} [g,[a,b]] = 0.
    TermSum lhs;
    lhs[Term::A_BC] = p;
    lhs[Term::B_AC] = q + p * q + one;  // explicit minus folded into the exponent
    lhs[Term::G_AB] = r + (p + q) * r;

    if (!options.drop_multiplier)
        for (auto& [term, exponent] : lhs) exponent += p * r;

    // Rewrite the inner [a,c] as a sign times [c,a].
    SignPolynomial rewrite = p * r;
    if (!options.flip_antisymmetry_sign) rewrite += one;
    lhs[Term::B_GA] = lhs[Term::B_AC] + rewrite;
    lhs.erase(Term::B_AC);

    TermSum target;
    target[Term::A_BC] = p * (r + one);
    target[Term::B_GA] = q * (p + one);
    target[Term::G_AB] = r * (q + one);
    return lhs == target;
}

}  // namespace polyprod
