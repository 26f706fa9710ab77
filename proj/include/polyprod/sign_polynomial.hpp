#ifndef POLYPROD_SIGN_POLYNOMIAL_HPP
#define POLYPROD_SIGN_POLYNOMIAL_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace polyprod {

// A multilinear polynomial over GF(2) in formal degree variables, used as
// the exponent of (-1).  A monomial is a set of variable indices (bitmask);
// the empty monomial is the constant 1.
class SignPolynomial {
public:
    SignPolynomial() = default;  // the zero polynomial, i.e. sign +1
    static SignPolynomial one();               // constant exponent 1, sign -1
    static SignPolynomial var(int index);

    SignPolynomial operator+(const SignPolynomial& other) const;
    SignPolynomial operator*(const SignPolynomial& other) const;
    SignPolynomial& operator+=(const SignPolynomial& other);

    bool operator==(const SignPolynomial&) const = default;
    bool zero() const { return monomials_.empty(); }

    // Evaluate the exponent at a parity vector (bit i = parity of variable i).
    int evaluate(std::uint32_t parities) const;
    // The sign (-1)^exponent at the parity vector.
    int sign_at(std::uint32_t parities) const { return evaluate(parities) ? -1 : 1; }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::set<std::uint32_t> monomials_;
};

struct ProofCheckOptions {
    // Mutation hooks: flip the antisymmetry rewrite sign (-1)^{pr+1} to
    // (-1)^{pr}, or drop the (-1)^{pr} multiplication step.
    bool flip_antisymmetry_sign = false;
    bool drop_multiplier = false;
};

// Replay the sign arithmetic deriving the classical three-term Jacobi
// identity from the intermediate one, entirely in GF(2) exponents:
// multiply by (-1)^{pr}, rewrite [alpha,gamma] -> (-1)^{pr+1}[gamma,alpha],
// and compare term by term with the target identity.
bool corollary_proof_check(const ProofCheckOptions& options = {});

}  // namespace polyprod

#endif
