#ifndef POLYPROD_CORPUS_HPP
#define POLYPROD_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

// Every shifted complex on [m] with all of [m] as vertices, by brute force
// over face families.  Practical for m <= 4.
std::vector<SimplicialComplex> all_shifted_complexes(int m);

// Seeded stream of random shifted complexes on [m] (all singletons present):
// downward closure of a random facet list followed by the shifted closure.
// Samples may repeat; see random_shifted_corpus for a deduplicated list.
class ShiftedComplexSampler {
public:
    ShiftedComplexSampler(int m, std::uint64_t seed);
    SimplicialComplex next();

private:
    int m_;
    std::uint64_t state_;
    std::uint64_t next_u64();
};

// Up to `count` distinct shifted complexes from the sampler; stops early if
// the attempt budget runs out (the population can be smaller than `count`).
std::vector<SimplicialComplex> random_shifted_corpus(int m, std::size_t count,
                                                     std::uint64_t seed);

}  // namespace polyprod

#endif
