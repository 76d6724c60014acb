#include "plotkin/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <thread>
#include <tuple>

namespace plotkin {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Improves: return "Improves";
        case Classification::Matches: return "Matches";
        case Classification::Below: return "Below";
        case Classification::NoTableEntry: return "NoTableEntry";
    }
    return "?";
}

Classification classify(int plotkin_d, const std::optional<Bounds>& cell) {
    if (!cell) return Classification::NoTableEntry;
    if (cell->d_high && plotkin_d > *cell->d_high)
        throw DataError("inconsistent table: a Plotkin sum reaches d = " + std::to_string(plotkin_d) +
                        " above the recorded upper bound " + std::to_string(*cell->d_high));
    if (plotkin_d > cell->d_low) return Classification::Improves;
    if (plotkin_d == cell->d_low) return Classification::Matches;
    return Classification::Below;
}

namespace {

std::vector<std::pair<std::size_t, int>> entries_at(const BoundsTable& t, unsigned q, std::size_t n) {
    std::vector<std::pair<std::size_t, int>> out;
    auto it = t.entries().lower_bound({q, n, 0});
    for (; it != t.entries().end() && it->first.q == q && it->first.n == n; ++it)
        out.emplace_back(it->first.k, it->second.d_low);
    return out;
}

std::vector<Finding> scan_length(const BoundsTable& t, unsigned q, std::size_t n) {
    std::vector<Finding> out;
    const auto ks = entries_at(t, q, n);
    for (const auto& [k1, d1] : ks) {
        for (const auto& [k2, d2] : ks) {
            Finding f;
            f.q = q;
            f.n = n;
            f.k1 = k1;
            f.k2 = k2;
            f.plotkin_d = std::min(2 * d1, d2);
            auto cell = t.query(q, 2 * n, k1 + k2);
            if (cell) {
                f.table_d_low = cell->d_low;
                f.table_d_high = cell->d_high;
            }
            try {
                f.cls = classify(f.plotkin_d, cell);
            } catch (const DataError& e) {
                throw DataError(std::string(e.what()) + " at (" + std::to_string(q) + "," + std::to_string(2 * n) +
                                "," + std::to_string(k1 + k2) + ") from k1=" + std::to_string(k1) +
                                ", k2=" + std::to_string(k2));
            }
            out.push_back(f);
        }
    }
    return out;
}

auto sort_key(const Finding& f) { return std::make_tuple(f.length(), f.dimension(), f.n, f.k1, f.k2, f.shortened); }

}  // namespace

std::vector<Finding> plotkin_scan(const BoundsTable& t, unsigned q,
                                  std::optional<std::pair<std::size_t, std::size_t>> n_range, unsigned threads) {
    const std::size_t half = BoundsTable::limit(q) / 2;
    std::size_t lo = 1, hi = half;
    if (n_range) {
        lo = std::max<std::size_t>(n_range->first, 1);
        hi = std::min(n_range->second, half);
    }
    if (lo > hi) return {};

    const std::size_t count = hi - lo + 1;
    std::vector<std::vector<Finding>> per_length(count);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) per_length[i] = scan_length(t, q, lo + i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i; (i = next.fetch_add(1)) < count;) per_length[i] = scan_length(t, q, lo + i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::vector<Finding> out;
    for (auto& v : per_length) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<Finding> shortened_findings(const BoundsTable& t, const std::vector<Finding>& plain) {
    // Best plain finding per cell; larger d first, then the smallest (n, k1, k2).
    std::map<std::pair<std::size_t, std::size_t>, const Finding*> direct;
    for (const auto& f : plain) {
        if (f.shortened != 0) continue;
        auto [it, fresh] = direct.emplace(std::make_pair(f.length(), f.dimension()), &f);
        if (!fresh && (f.plotkin_d > it->second->plotkin_d ||
                       (f.plotkin_d == it->second->plotkin_d &&
                        std::make_tuple(f.n, f.k1, f.k2) <
                            std::make_tuple(it->second->n, it->second->k1, it->second->k2))))
            it->second = &f;
    }
    if (direct.empty()) return {};
    const unsigned q = direct.begin()->second->q;

    // Shortening keeps the redundancy length - dimension fixed, so sweep each
    // diagonal from long to short carrying the best sum seen so far.
    std::map<std::size_t, std::vector<const Finding*>> by_redundancy;
    for (const auto& [cell, f] : direct) by_redundancy[cell.first - cell.second].push_back(f);

    std::vector<Finding> out;
    for (auto& [r, fs] : by_redundancy) {
        std::sort(fs.begin(), fs.end(), [](const Finding* a, const Finding* b) { return a->length() > b->length(); });
        const Finding* carry = nullptr;
        std::size_t idx = 0;
        const std::size_t top = fs.front()->length();
        for (std::size_t len = top; len > r; --len) {
            const Finding* here = nullptr;
            while (idx < fs.size() && fs[idx]->length() == len) here = fs[idx++];
            if (carry && len < top) {
                auto cell = t.query(q, len, len - r);
                if (cell && (!here || here->plotkin_d < carry->plotkin_d)) {
                    Finding g = *carry;
                    g.shortened = carry->length() - len;
                    g.table_d_low = cell->d_low;
                    g.table_d_high = cell->d_high;
                    try {
                        g.cls = classify(g.plotkin_d, cell);
                    } catch (const DataError& e) {
                        throw DataError(std::string(e.what()) + " at (" + std::to_string(q) + "," +
                                        std::to_string(len) + "," + std::to_string(len - r) + ") by shortening");
                    }
                    out.push_back(g);
                }
            }
            if (here && (!carry || here->plotkin_d >= carry->plotkin_d)) carry = here;
        }
    }
    std::sort(out.begin(), out.end(), [](const Finding& a, const Finding& b) { return sort_key(a) < sort_key(b); });
    return out;
}

std::vector<Finding> scan_with_shortening(const BoundsTable& t, unsigned q,
                                          std::optional<std::pair<std::size_t, std::size_t>> n_range,
                                          unsigned threads) {
    auto plain = plotkin_scan(t, q, n_range, threads);
    auto extra = shortened_findings(t, plain);
    plain.insert(plain.end(), extra.begin(), extra.end());
    return plain;
}

std::string CoverageStats::percent() const {
    if (total_even_entries == 0) return "0.00";
    const std::uint64_t hundredths = plotkin_achievable * 10000 / total_even_entries;
    std::string frac = std::to_string(hundredths % 100);
    if (frac.size() < 2) frac.insert(0, "0");
    return std::to_string(hundredths / 100) + "." + frac;
}

CoverageStats coverage_stats(const BoundsTable& t, unsigned q) {
    CoverageStats s;
    s.q = q;
    const std::size_t lim = BoundsTable::limit(q);
    for (std::size_t n = 2; n <= lim; n += 2) s.total_even_entries += n;

    for (std::size_t n = 2; n <= lim; n += 2) {
        const auto halves = entries_at(t, q, n / 2);
        if (halves.empty()) continue;
        // best[k] = largest min(2 d1, d2) over k1 + k2 = k
        std::map<std::size_t, int> best;
        for (const auto& [k1, d1] : halves)
            for (const auto& [k2, d2] : halves) {
                int& b = best[k1 + k2];
                b = std::max(b, std::min(2 * d1, d2));
            }
        for (const auto& [k, d] : entries_at(t, q, n)) {
            auto it = best.find(k);
            if (it != best.end() && it->second >= d) ++s.plotkin_achievable;
        }
    }
    return s;
}

void write_findings_tsv(std::ostream& out, const std::vector<Finding>& findings) {
    out << "q\tlength\tk\tplotkin_d\ttable_d_low\ttable_d_high\tclass\tn\tk1\tk2\n";
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
    for (const auto& f : findings) {
        out << f.q << '\t' << f.length() << '\t' << f.dimension() << '\t' << f.plotkin_d << '\t'
            << opt(f.table_d_low) << '\t' << opt(f.table_d_high) << '\t' << to_string(f.cls) << '\t' << f.n
            << '\t' << f.k1 << '\t' << f.k2 << '\n';
    }
}

}  // namespace plotkin
