#ifndef POLYPROD_PERMUTATION_HPP
#define POLYPROD_PERMUTATION_HPP

#include <vector>

#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

// A permutation of [m] in one-line notation: image(j) is where j goes.
// The sign is cached at construction from the inversion count.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int m);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int j) const { return image_.at(j - 1); }
    const std::vector<int>& image() const { return image_; }
    int sign() const { return sign_; }
    bool is_identity() const;

    // (*this o other)(j) = this(other(j)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
    int sign_ = 1;
};

// sigma(F, I): fixes [m] - I pointwise and sends the ordered positions of I
// first onto I - F and then onto F, each block in increasing order.
// Requires the nonempty F to be contained in I.
Permutation sigma_permutation(Face F, Face I, int m);

}  // namespace polyprod

#endif
