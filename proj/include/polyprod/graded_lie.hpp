#ifndef POLYPROD_GRADED_LIE_HPP
#define POLYPROD_GRADED_LIE_HPP

#include <map>
#include <string>
#include <vector>

namespace polyprod {

// Generators of the free graded Lie algebra, modeled inside the graded
// tensor algebra.  Degrees are the desuspended ones (p - 1 for a class in
// pi_p).
struct GradedGenerator {
    std::string name;
    int degree = 1;
};

// An integer linear combination of tensor words over a fixed generator list,
// homogeneous in total degree.
class GradedLieElement {
public:
    using Word = std::vector<int>;  // generator indices

    explicit GradedLieElement(std::vector<GradedGenerator> generators);
    static GradedLieElement generator(std::vector<GradedGenerator> generators, int index);

    const std::map<Word, long long>& words() const { return words_; }
    const std::vector<GradedGenerator>& generators() const { return generators_; }
    bool zero() const { return words_.empty(); }
    // Total degree; requires a nonzero homogeneous element.
    int degree() const;

    GradedLieElement operator+(const GradedLieElement& other) const;
    GradedLieElement operator-(const GradedLieElement& other) const;
    GradedLieElement operator*(long long scalar) const;

    bool operator==(const GradedLieElement& other) const {
        return words_ == other.words_;
    }

    void add_word(Word w, long long coefficient);
    std::string to_string() const;

private:
    std::vector<GradedGenerator> generators_;
    std::map<Word, long long> words_;
    int word_degree(const Word& w) const;
    void check_compatible(const GradedLieElement& other) const;
};

// Graded commutator <x,y> = xy - (-1)^{|x||y|} yx on homogeneous elements.
GradedLieElement bracket(const GradedLieElement& x, const GradedLieElement& y);

// (-1)^{|a||c|}<a,<b,c>> + (-1)^{|b||a|}<b,<c,a>> + (-1)^{|c||b|}<c,<a,b>>;
// identically zero for graded commutators.
GradedLieElement graded_jacobi_residual(const GradedLieElement& a, const GradedLieElement& b,
                                        const GradedLieElement& c);

// The classical Whitehead Jacobi sum for classes of dimensions p, q, r >= 2,
// translated into the tensor algebra through the desuspension dictionary
// lambda[u,v] = (-1)^{dim(u)} <lambda u, lambda v>.  Zero iff the identity
// holds.  use_dictionary_sign = false drops the per-bracket sign (a mutation
// hook; the sum is then nonzero whenever the parities of p, q, r differ).
GradedLieElement whitehead_jacobi_residual(int p, int q, int r,
                                           bool use_dictionary_sign = true);

}  // namespace polyprod

#endif
