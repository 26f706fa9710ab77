#include "polyprod/graded_lie.hpp"

#include <sstream>
#include <stdexcept>

namespace polyprod {

GradedLieElement::GradedLieElement(std::vector<GradedGenerator> generators)
    : generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (g.degree < 1) throw std::invalid_argument("generator degree must be >= 1");
}

GradedLieElement GradedLieElement::generator(std::vector<GradedGenerator> generators, int index) {
    GradedLieElement e(std::move(generators));
    if (index < 0 || index >= static_cast<int>(e.generators_.size()))
        throw std::invalid_argument("generator index out of range");
    e.add_word({index}, 1);
    return e;
}

int GradedLieElement::word_degree(const Word& w) const {
    int deg = 0;
    for (int i : w) deg += generators_.at(i).degree;
    return deg;
}

int GradedLieElement::degree() const {
    if (words_.empty()) throw std::invalid_argument("degree of the zero element");
    int deg = word_degree(words_.begin()->first);
    for (const auto& [w, c] : words_)
        if (word_degree(w) != deg)
            throw std::invalid_argument("element is not homogeneous");
    return deg;
}

void GradedLieElement::add_word(Word w, long long coefficient) {
    auto it = words_.find(w);
    if (it == words_.end()) {
        if (coefficient != 0) words_.emplace(std::move(w), coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second == 0) words_.erase(it);
}

void GradedLieElement::check_compatible(const GradedLieElement& other) const {
    if (generators_.size() != other.generators_.size())
        throw std::invalid_argument("elements over different generator lists");
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].degree != other.generators_[i].degree)
            throw std::invalid_argument("elements over different generator lists");
}

GradedLieElement GradedLieElement::operator+(const GradedLieElement& other) const {
    check_compatible(other);
    GradedLieElement out = *this;
    for (const auto& [w, c] : other.words_) out.add_word(w, c);
    return out;
}

GradedLieElement GradedLieElement::operator-(const GradedLieElement& other) const {
    check_compatible(other);
    GradedLieElement out = *this;
    for (const auto& [w, c] : other.words_) out.add_word(w, -c);
    return out;
}

GradedLieElement GradedLieElement::operator*(long long scalar) const {
    GradedLieElement out(generators_);
    if (scalar != 0)
        for (const auto& [w, c] : words_) out.add_word(w, c * scalar);
    return out;
}

std::string GradedLieElement::to_string() const {
    if (words_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : words_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        long long a = c > 0 ? c : -c;
        if (a != 1) os << a << "*";
        for (int i : w) os << generators_.at(i).name;
    }
    return os.str();
}

GradedLieElement bracket(const GradedLieElement& x, const GradedLieElement& y) {
    if (x.zero() || y.zero()) {
        GradedLieElement out(x.generators());
        return out;
    }
    const int dx = x.degree();
    const int dy = y.degree();
    const long long koszul = (dx * dy) % 2 == 0 ? 1 : -1;
    GradedLieElement out(x.generators());
    for (const auto& [u, cu] : x.words())
        for (const auto& [v, cv] : y.words()) {
            GradedLieElement::Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            out.add_word(std::move(uv), cu * cv);
            GradedLieElement::Word vu = v;
            vu.insert(vu.end(), u.begin(), u.end());
            out.add_word(std::move(vu), -koszul * cu * cv);
        }
    return out;
}

GradedLieElement graded_jacobi_residual(const GradedLieElement& a, const GradedLieElement& b,
                                        const GradedLieElement& c) {
    auto sign = [](int d1, int d2) -> long long { return (d1 * d2) % 2 == 0 ? 1 : -1; };
    const int da = a.degree(), db = b.degree(), dc = c.degree();
    return bracket(a, bracket(b, c)) * sign(da, dc) +
           bracket(b, bracket(c, a)) * sign(db, da) +
           bracket(c, bracket(a, b)) * sign(dc, db);
}

GradedLieElement whitehead_jacobi_residual(int p, int q, int r, bool use_dictionary_sign) {
    if (p < 2 || q < 2 || r < 2)
        throw std::invalid_argument("the classical identity needs p, q, r >= 2");
    std::vector<GradedGenerator> gens{{"a", p - 1}, {"b", q - 1}, {"c", r - 1}};
    auto a = GradedLieElement::generator(gens, 0);
    auto b = GradedLieElement::generator(gens, 1);
    auto c = GradedLieElement::generator(gens, 2);
    auto parity = [](int d) -> long long { return d % 2 == 0 ? 1 : -1; };
    // lambda[u,v] = (-1)^{dim u} <lambda u, lambda v>; a nested bracket picks
    // up the dimension of each first argument.
    long long s1 = use_dictionary_sign ? parity(p) * parity(q) : 1;
    long long s2 = use_dictionary_sign ? parity(q) * parity(r) : 1;
    long long s3 = use_dictionary_sign ? parity(r) * parity(p) : 1;
    auto coeff = [&parity](int exponent_base, int shift) -> long long {
        return parity(exponent_base * shift);
    };
    long long c1 = coeff(p, r - 1);
    long long c2 = coeff(q, p - 1);
    long long c3 = coeff(r, q - 1);
    return bracket(a, bracket(b, c)) * (c1 * s1) +
           bracket(b, bracket(c, a)) * (c2 * s2) +
           bracket(c, bracket(a, b)) * (c3 * s3);
}

}  // namespace polyprod
