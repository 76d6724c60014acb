#include "plotkin/distance.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "plotkin/packed.hpp"

namespace plotkin {

using packed::Rows;
using packed::Word;

std::string to_string(DistanceStatus s) {
    switch (s) {
        case DistanceStatus::Exact:
            return "Exact";
        case DistanceStatus::BoundsOnly:
            return "BoundsOnly";
        case DistanceStatus::WitnessOnly:
            return "WitnessOnly";
    }
    return "?";
}

std::string DistanceResult::describe() const {
    std::ostringstream os;
    os << to_string(status) << ' ';
    switch (status) {
        case DistanceStatus::Exact:
            os << "d=" << lower;
            break;
        case DistanceStatus::BoundsOnly:
            os << "d>=" << lower << " d<=" << upper;
            break;
        case DistanceStatus::WitnessOnly:
            os << "d<=" << upper;
            break;
    }
    return os.str();
}

DistanceInfo DistanceResult::as_info() const {
    if (status == DistanceStatus::Exact) return DistanceInfo::exact(lower);
    return DistanceInfo::bounds(lower, upper);
}

bool verify_witness(const LinearCode& code, const DistanceResult& r) {
    if (!r.witness) return true;
    return code.contains(r.witness->symbols) && static_cast<int>(r.witness->weight()) == r.upper;
}

namespace {

DistanceResult zero_code_result(const LinearCode& code) {
    const int d = static_cast<int>(code.length()) + 1;
    return {d, d, DistanceStatus::Exact, std::nullopt, 0};
}

std::uint64_t checked_size(const LinearCode& code, std::uint64_t ceiling) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        total *= code.field()->order();
        if (total > ceiling)
            throw EngineError("q^k exceeds the exhaustive ceiling of " + std::to_string(ceiling) + " for " +
                              code.parameters());
    }
    return total;
}

// Visits every codeword once (p-ary Gray order over the GF(p)-coordinates
// of the message); fn(ops, word) is called for each nonzero codeword.
template <class Ops, class Fn>
void for_each_codeword(const Ops& ops, const LinearCode& code, Fn&& fn) {
    const auto& F = *code.field();
    const int p = F.characteristic();
    const int e = F.prime_degree();
    const std::size_t k = code.dimension();
    auto G = Rows<Ops>::from_matrix(ops, code.generator());
    // gens[i*e + b] = p^b * row_i, where p^b encodes the b-th basis element.
    Rows<Ops> gens(ops, k * e);
    Elem basis = 1;
    for (int b = 0; b < e; ++b) {
        for (std::size_t i = 0; i < k; ++i) ops.axpy(gens.row(i * e + b), G.row(i), basis);
        basis *= static_cast<Elem>(p);
    }
    const std::size_t digits = k * e;
    std::vector<int> counter(digits + 1, 0);
    std::vector<Word> cw(ops.stride(), 0);
    for (;;) {
        // Next step: the lowest digit that does not wrap in a base-p counter.
        std::size_t v = 0;
        while (v < digits && counter[v] == p - 1) counter[v++] = 0;
        if (v == digits) break;
        ++counter[v];
        ops.axpy(cw.data(), gens.row(v), 1);
        fn(cw.data());
    }
}

}  // namespace

DistanceResult min_distance_exhaustive(const LinearCode& code, std::uint64_t ceiling) {
    checked_size(code, ceiling);
    if (code.dimension() == 0) return zero_code_result(code);
    return packed::with_kernel(*code.field(), code.length(), [&](const auto& ops) {
        using Ops = std::decay_t<decltype(ops)>;
        DistanceResult r;
        std::size_t best = code.length() + 1;
        std::vector<Elem> best_word;
        for_each_codeword(ops, code, [&](const Word* cw) {
            ++r.work;
            const std::size_t w = ops.weight(cw);
            if (w < best) {
                best = w;
                best_word = Rows<Ops>::unpack_vector(ops, cw);
            }
        });
        r.lower = r.upper = static_cast<int>(best);
        r.status = DistanceStatus::Exact;
        r.witness = Codeword{std::move(best_word)};
        return r;
    });
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& code, std::uint64_t ceiling) {
    checked_size(code, ceiling);
    std::vector<std::uint64_t> counts(code.length() + 1, 0);
    counts[0] = 1;
    if (code.dimension() == 0) return counts;
    packed::with_kernel(*code.field(), code.length(), [&](const auto& ops) {
        for_each_codeword(ops, code, [&](const Word* cw) { ++counts[ops.weight(cw)]; });
        return 0;
    });
    return counts;
}

// ---------------------------------------------------------------------------
// Brouwer-Zimmermann

namespace {

struct InfoMatrix {
    Mat generator;  // systematic, k rows
    int deficiency = 0;
};

std::vector<InfoMatrix> disjoint_information_sets(const LinearCode& code) {
    const std::size_t n = code.length(), k = code.dimension();
    std::vector<bool> used(n, false);
    std::vector<InfoMatrix> out;
    for (;;) {
        std::vector<std::size_t> fresh;
        for (std::size_t c = 0; c < n; ++c)
            if (!used[c]) fresh.push_back(c);
        if (fresh.empty()) break;
        auto sys = systematic_form(code.generator(), fresh);
        std::size_t new_pivots = 0;
        for (auto c : sys.info_cols)
            if (!used[c]) {
                used[c] = true;
                ++new_pivots;
            }
        if (new_pivots == 0) break;
        out.push_back({std::move(sys.generator), static_cast<int>(k - new_pivots)});
    }
    return out;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max() / 2;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > cap) return cap;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t block_size(std::size_t k, int w, std::uint32_t q) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max() / 2;
    unsigned __int128 s = binomial_capped(k, static_cast<std::uint64_t>(w));
    for (int i = 1; i < w; ++i) {
        s *= (q - 1);
        if (s > cap) return cap;
    }
    return static_cast<std::uint64_t>(s);
}

struct Best {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    std::vector<Elem> word;

    void offer(std::size_t w, std::vector<Elem> cand) {
        if (w < weight || (w == weight && cand < word)) {
            weight = w;
            word = std::move(cand);
        }
    }
};

// Enumerates all messages of weight w with first nonzero coefficient 1
// whose first index lies in `firsts`; returns evaluations performed.
template <class Ops>
std::uint64_t enumerate_block(const Ops& ops, const Rows<Ops>& rows, int w, const std::vector<std::size_t>& firsts,
                              std::size_t stop_at, const std::atomic<bool>& stop, Best& best) {
    const std::size_t k = rows.rows();
    const Elem q = ops.order();
    std::uint64_t work = 0;
    std::vector<std::vector<Word>> partial(static_cast<std::size_t>(w), std::vector<Word>(ops.stride(), 0));
    std::vector<std::size_t> idx(static_cast<std::size_t>(w));
    std::vector<Elem> coef(static_cast<std::size_t>(w), 1);

    auto record = [&](const Word* base, std::size_t j, Elem c, std::size_t wt) {
        std::vector<Word> tmp(base, base + ops.stride());
        ops.axpy(tmp.data(), rows.row(j), c);
        best.offer(wt, Rows<Ops>::unpack_vector(ops, tmp.data()));
    };

    // Depth-first over index sets; partial[d] holds the sum of the first
    // d+1 chosen terms.
    auto recurse = [&](auto&& self, int depth, std::size_t start) -> void {
        const Word* base = partial[depth - 1].data();
        const std::size_t last = k - static_cast<std::size_t>(w - depth);
        if (depth == w - 1) {
            for (std::size_t j = start; j <= last; ++j) {
                for (Elem c = 1; c < q; ++c) {
                    ++work;
                    const std::size_t wt = ops.weight_axpy(base, rows.row(j), c);
                    if (wt <= best.weight) record(base, j, c, wt);
                }
                if (best.weight <= stop_at || stop.load(std::memory_order_relaxed)) return;
            }
            return;
        }
        for (std::size_t j = start; j <= last; ++j) {
            for (Elem c = 1; c < q; ++c) {
                auto& dst = partial[depth];
                std::copy(base, base + ops.stride(), dst.begin());
                ops.axpy(dst.data(), rows.row(j), c);
                self(self, depth + 1, j + 1);
                if (best.weight <= stop_at || stop.load(std::memory_order_relaxed)) return;
            }
        }
    };

    for (auto first : firsts) {
        if (w == 1) {
            ++work;
            const std::size_t wt = ops.weight(rows.row(first));
            if (wt <= best.weight) best.offer(wt, rows.unpack(first));
        } else {
            std::copy(rows.row(first), rows.row(first) + ops.stride(), partial[0].begin());
            recurse(recurse, 1, first + 1);
        }
        if (best.weight <= stop_at || stop.load(std::memory_order_relaxed)) break;
    }
    return work;
}

template <class Ops>
DistanceResult run_bz(const Ops& ops, const LinearCode& code, const BzOptions& opts) {
    const std::size_t n = code.length(), k = code.dimension();
    const auto q = code.field()->order();
    auto infos = disjoint_information_sets(code);
    std::vector<Rows<Ops>> packed_infos;
    for (const auto& im : infos) packed_infos.push_back(Rows<Ops>::from_matrix(ops, im.generator));

    DistanceResult r;
    r.lower = 1;
    r.upper = static_cast<int>(n - k + 1);
    r.status = DistanceStatus::BoundsOnly;
    Best best;
    best.weight = n - k + 1 + 1;  // Singleton bound, no witness yet

    auto bound_after = [&](int w, std::size_t done) {
        // Matrices [0, done) completed round w, the rest round w-1.
        int s = 0;
        for (std::size_t i = 0; i < infos.size(); ++i) {
            const int reached = i < done ? w : w - 1;
            s += std::max(0, reached + 1 - infos[i].deficiency);
        }
        return s;
    };

    const unsigned threads = std::max(1u, opts.threads);
    for (int w = 1; w <= static_cast<int>(k); ++w) {
        for (std::size_t i = 0; i < infos.size(); ++i) {
            if (w + 1 - infos[i].deficiency <= 0) continue;
            const std::uint64_t size = block_size(k, w, q);
            if (r.work + size > opts.budget) {
                r.lower = std::min(r.lower, r.upper);
                return r;
            }
            const int proven = bound_after(w, i);  // before this block
            const std::size_t stop_at = static_cast<std::size_t>(std::max(proven, 0));

            std::atomic<bool> stop{false};
            std::vector<Best> bests(threads, best);
            std::vector<std::uint64_t> works(threads, 0);
            auto worker = [&](unsigned t) {
                std::vector<std::size_t> firsts;
                for (std::size_t j = t; j + static_cast<std::size_t>(w) <= k; j += threads) firsts.push_back(j);
                works[t] = enumerate_block(ops, packed_infos[i], w, firsts, stop_at, stop, bests[t]);
                if (bests[t].weight <= stop_at) stop.store(true);
            };
            if (threads == 1) {
                worker(0);
            } else {
                std::vector<std::thread> pool;
                for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
                for (auto& th : pool) th.join();
            }
            for (unsigned t = 0; t < threads; ++t) {
                r.work += works[t];
                if (!bests[t].word.empty()) best.offer(bests[t].weight, std::move(bests[t].word));
            }
            if (!best.word.empty() && static_cast<int>(best.weight) <= r.upper &&
                (!r.witness || static_cast<int>(best.weight) < r.upper)) {
                r.upper = static_cast<int>(best.weight);
                r.witness = Codeword{best.word};
            }
            r.lower = std::min(bound_after(w, i + 1), r.upper);
            if (opts.log) {
                std::ostringstream os;
                os << "round w=" << w << " matrix " << i + 1 << "/" << infos.size() << " rho=" << infos[i].deficiency
                   << " lower=" << r.lower << " upper=" << r.upper << " work=" << r.work;
                opts.log(os.str());
            }
            if (r.lower >= r.upper || stop.load()) {
                r.lower = r.upper;
                r.status = DistanceStatus::Exact;
                return r;
            }
        }
    }
    // Every message enumerated against the first (full-rank) matrix.
    r.lower = r.upper;
    r.status = DistanceStatus::Exact;
    return r;
}

}  // namespace

DistanceResult min_distance_bz(const LinearCode& code, const BzOptions& opts) {
    if (code.dimension() == 0) return zero_code_result(code);
    return packed::with_kernel(*code.field(), code.length(),
                               [&](const auto& ops) { return run_bz(ops, code, opts); });
}

// ---------------------------------------------------------------------------
// Lee-Brickell witness search

namespace {

std::size_t bounded(std::mt19937_64& rng, std::size_t n) {
    // Rejection sampling; portable across standard libraries.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return static_cast<std::size_t>(x % n);
}

// Row-reduces rows so row i is 1 at pivots[i] and every other row is 0
// there, choosing pivot columns in `order`. Returns the pivots.
template <class Ops>
std::vector<std::size_t> reduce(const Ops& ops, const Field& F, Rows<Ops>& rows, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (auto c : order) {
        if (row == rows.rows()) break;
        std::size_t r = row;
        while (r < rows.rows() && ops.get(rows.row(r), c) == 0) ++r;
        if (r == rows.rows()) continue;
        rows.swap(row, r);
        const Elem lead = ops.get(rows.row(row), c);
        if (lead != 1) ops.scale(rows.row(row), F.inv(lead));
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            if (i == row) continue;
            const Elem v = ops.get(rows.row(i), c);
            if (v) ops.axpy(rows.row(i), rows.row(row), F.neg(v));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

template <class Ops>
DistanceResult run_witness(const Ops& ops, const LinearCode& code, int target, const WitnessOptions& opts) {
    const auto& F = *code.field();
    const std::size_t n = code.length(), k = code.dimension();
    const Elem q = F.order();
    std::mt19937_64 rng(opts.seed);
    auto rows = Rows<Ops>::from_matrix(ops, code.generator());

    DistanceResult r;
    r.lower = 1;
    r.upper = static_cast<int>(n - k + 1);
    r.status = DistanceStatus::WitnessOnly;
    std::size_t best = n + 1;
    const std::size_t goal = static_cast<std::size_t>(std::max(target, 0));

    auto offer = [&](std::size_t wt, std::vector<Word> word) {
        if (wt < best) {
            best = wt;
            r.upper = static_cast<int>(wt);
            r.witness = Codeword{Rows<Ops>::unpack_vector(ops, word.data())};
        }
    };

    std::vector<std::size_t> order(n);
    for (std::size_t c = 0; c < n; ++c) order[c] = c;
    std::vector<Word> tmp(ops.stride());
    while (r.work < opts.budget && best > goal) {
        for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[bounded(rng, i)]);
        reduce(ops, F, rows, order);

        for (std::size_t i = 0; i < k && r.work < opts.budget && best > goal; ++i) {
            ++r.work;
            const std::size_t wt = ops.weight(rows.row(i));
            if (wt < best) offer(wt, std::vector<Word>(rows.row(i), rows.row(i) + ops.stride()));
        }
        for (std::size_t i = 0; i < k && r.work < opts.budget && best > goal; ++i) {
            for (std::size_t j = i + 1; j < k && best > goal; ++j) {
                for (Elem c = 1; c < q && r.work < opts.budget; ++c) {
                    ++r.work;
                    const std::size_t wt = ops.weight_axpy(rows.row(i), rows.row(j), c);
                    if (wt < best) {
                        std::copy(rows.row(i), rows.row(i) + ops.stride(), tmp.begin());
                        ops.axpy(tmp.data(), rows.row(j), c);
                        offer(wt, tmp);
                    }
                }
            }
        }
    }
    if (!r.witness) r.upper = static_cast<int>(n - k + 1);
    return r;
}

}  // namespace

DistanceResult low_weight_witness(const LinearCode& code, int target, const WitnessOptions& opts) {
    if (target < 1) throw EngineError("witness target must be >= 1");
    if (code.dimension() == 0) return zero_code_result(code);
    return packed::with_kernel(*code.field(), code.length(),
                               [&](const auto& ops) { return run_witness(ops, code, target, opts); });
}

}  // namespace plotkin
