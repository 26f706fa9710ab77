#include "polyprod/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polyprod {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int m = static_cast<int>(image_.size());
    std::vector<bool> seen(m, false);
    for (int v : image_) {
        if (v < 1 || v > m || seen[v - 1])
            throw std::invalid_argument("one-line array is not a bijection of [m]");
        seen[v - 1] = true;
    }
    int inversions = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (image_[i] > image_[j]) ++inversions;
    sign_ = inversions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::identity(int m) {
    std::vector<int> image(m);
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
    for (int j = 1; j <= size(); ++j)
        if ((*this)(j) != j) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size())
        throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> image(size());
    for (int j = 1; j <= size(); ++j) image[j - 1] = (*this)(other(j));
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<int> image(size());
    for (int j = 1; j <= size(); ++j) image[(*this)(j)-1] = j;
    return Permutation(std::move(image));
}

Permutation sigma_permutation(Face F, Face I, int m) {
    if (F == 0 || (F & ~I) != 0)
        throw std::invalid_argument("sigma(F, I) needs a nonempty F inside I");
    if (face_max_vertex(I) > m)
        throw std::invalid_argument("I exceeds the ambient bound");
    std::vector<int> image(m, 0);
    for (int v = 1; v <= m; ++v)
        if (!(I >> (v - 1) & 1)) image[v - 1] = v;  // [m] - I fixed
    auto positions = face_vertices(I);                     // j_1 < ... < j_{m-k}
    std::vector<int> bottom = face_vertices(I & ~F);       // b-block first
    for (int a : face_vertices(F)) bottom.push_back(a);    // then the a-block
    for (std::size_t t = 0; t < positions.size(); ++t) image[positions[t] - 1] = bottom[t];
    return Permutation(std::move(image));
}

}  // namespace polyprod
