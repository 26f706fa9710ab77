#include "polyprod/corpus.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace polyprod {

std::vector<SimplicialComplex> all_shifted_complexes(int m) {
    if (m < 1 || m > 4)
        throw std::invalid_argument("exhaustive shifted enumeration supported for m <= 4");
    const Face full = (Face{1} << m) - 1;
    std::vector<Face> nonempty;
    for (Face f = 1; f <= full; ++f) nonempty.push_back(f);
    const int n = static_cast<int>(nonempty.size());
    std::vector<SimplicialComplex> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::set<Face> fam{0};
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) fam.insert(nonempty[i]);
        // all singletons present
        bool ok = true;
        for (int v = 1; v <= m && ok; ++v)
            if (!fam.count(Face{1} << (v - 1))) ok = false;
        // downward closed
        for (Face f : fam) {
            if (!ok) break;
            for (Face g = f; g != 0 && ok; g &= g - 1)
                if (!fam.count(f & ~(g & -g))) ok = false;
        }
        if (!ok) continue;
        auto K = SimplicialComplex::from_faces(m, fam);
        if (K.is_shifted()) out.push_back(std::move(K));
    }
    return out;
}

ShiftedComplexSampler::ShiftedComplexSampler(int m, std::uint64_t seed) : m_(m), state_(seed) {
    if (m < 1 || m > kMaxVertices)
        throw std::invalid_argument("sampler vertex count out of range");
}

std::uint64_t ShiftedComplexSampler::next_u64() {
    // splitmix64; fixed here so corpora are reproducible across platforms.
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SimplicialComplex ShiftedComplexSampler::next() {
    const Face full = (Face{1} << m_) - 1;
    std::set<Face> seed{0};
    for (int v = 1; v <= m_; ++v) seed.insert(Face{1} << (v - 1));
    const int facet_count = 1 + static_cast<int>(next_u64() % static_cast<std::uint64_t>(m_));
    for (int t = 0; t < facet_count; ++t) {
        Face f = static_cast<Face>(next_u64()) & full;
        if (f != 0) seed.insert(f);
    }
    return SimplicialComplex::from_faces(m_, std::move(seed)).shifted_closure();
}

std::vector<SimplicialComplex> random_shifted_corpus(int m, std::size_t count,
                                                     std::uint64_t seed) {
    ShiftedComplexSampler sampler(m, seed);
    std::set<std::string> seen;
    std::vector<SimplicialComplex> out;
    std::size_t attempts = 0;
    const std::size_t budget = count * 200 + 1000;
    while (out.size() < count && attempts < budget) {
        ++attempts;
        auto K = sampler.next();
        if (seen.insert(K.encode()).second) out.push_back(std::move(K));
    }
    return out;
}

}  // namespace polyprod
