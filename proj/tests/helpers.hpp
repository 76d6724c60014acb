#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "plotkin/codes.hpp"

namespace testing_support {

using namespace plotkin;

// Random generator matrix with k rows; the code may have smaller dimension.
inline LinearCode random_code(std::mt19937_64& rng, const FieldPtr& F, std::size_t n, std::size_t k) {
    std::uniform_int_distribution<Elem> sym(0, F->order() - 1);
    Mat g(F, k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) g.set(r, c, sym(rng));
    return LinearCode::from_generator(g);
}

inline LinearCode random_code_of_dim(std::mt19937_64& rng, const FieldPtr& F, std::size_t n, std::size_t k) {
    for (;;) {
        auto c = random_code(rng, F, n, k);
        if (c.dimension() == k) return c;
    }
}

// Every codeword, by counting through all messages and encoding each.
inline std::vector<std::vector<Elem>> all_codewords(const LinearCode& c) {
    const Elem q = c.field()->order();
    const std::size_t k = c.dimension();
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> msg(k, 0);
    for (;;) {
        out.push_back(c.encode(msg));
        std::size_t i = 0;
        while (i < k && ++msg[i] == q) msg[i++] = 0;
        if (i == k) break;
    }
    return out;
}

inline std::size_t weight_of(const std::vector<Elem>& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem x) { return x != 0; }));
}

// Minimum nonzero weight by plain enumeration; n + 1 for the zero code.
inline int brute_distance(const LinearCode& c) {
    std::size_t best = c.length() + 1;
    for (const auto& w : all_codewords(c)) {
        const std::size_t wt = weight_of(w);
        if (wt) best = std::min(best, wt);
    }
    return static_cast<int>(best);
}

inline LinearCode hamming74() {
    auto F = Field::of_order(2);
    return LinearCode::from_generator(Mat(F, 7,
                                          {{1, 0, 0, 0, 1, 1, 0},
                                           {0, 1, 0, 0, 1, 0, 1},
                                           {0, 0, 1, 0, 0, 1, 1},
                                           {0, 0, 0, 1, 1, 1, 1}}));
}

inline LinearCode repetition(const FieldPtr& F, std::size_t n) {
    return LinearCode::from_generator(Mat(F, n, {std::vector<Elem>(n, 1)}));
}

inline std::vector<Elem> cyclic_shift(const std::vector<Elem>& w) {
    std::vector<Elem> s(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) s[(i + 1) % w.size()] = w[i];
    return s;
}

}  // namespace testing_support
