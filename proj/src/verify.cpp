#include "locinv/synthesizer.hpp"

namespace locinv {

bool verify_certified(const Graph& g, const CertifiedWord& cw, std::mt19937_64& rng, std::size_t random_colorings) {
    const std::size_t n = g.order();
    if (cw.target_flip.universe() != n) {
        return false;
    }
    for (Vertex a : cw.word) {
        if (!g.valid(a)) {
            return false;
        }
    }
    for (std::size_t round = 0; round <= random_colorings; ++round) {
        const Coloring beta = round == 0 ? Coloring(n, Color::plus) : random_coloring(n, rng);
        const BicoloredGraph b(g, beta);
        if (apply_word(b, cw.word) != flip(b, cw.target_flip)) {
            return false;
        }
    }
    return true;
}

}  // namespace locinv
