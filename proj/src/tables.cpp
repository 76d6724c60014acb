#include "plotkin/tables.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace plotkin {

namespace {

std::string key_text(const TableKey& k) {
    return "(" + std::to_string(k.q) + "," + std::to_string(k.n) + "," + std::to_string(k.k) + ")";
}

long long parse_int(const std::string& t) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw DataError("not an integer: '" + t + "'");
    }
    if (used != t.size()) throw DataError("not an integer: '" + t + "'");
    return v;
}

}  // namespace

bool BoundsTable::supported(unsigned q) {
    switch (q) {
        case 2: case 3: case 4: case 5: case 7: case 8: case 9: return true;
        default: return false;
    }
}

std::size_t BoundsTable::limit(unsigned q) {
    switch (q) {
        case 2: return 256;
        case 3: return 243;
        case 4: return 256;
        case 5: return 130;
        case 7: return 100;
        case 8: return 130;
        case 9: return 130;
        default: throw DataError("no table limits for q = " + std::to_string(q));
    }
}

void BoundsTable::insert(TableKey key, Bounds b) {
    const std::size_t lim = limit(key.q);
    if (key.k < 1 || key.k > key.n) throw DataError("entry " + key_text(key) + ": need 1 <= k <= n");
    if (key.n > lim)
        throw DataError("entry " + key_text(key) + ": length exceeds the limit " + std::to_string(lim));
    const int singleton = static_cast<int>(key.n - key.k + 1);
    if (b.d_low < 1) throw DataError("entry " + key_text(key) + ": d_low must be >= 1");
    if (b.d_low > singleton)
        throw DataError("entry " + key_text(key) + ": d_low exceeds the Singleton bound " + std::to_string(singleton));
    if (b.d_high) {
        if (*b.d_high < b.d_low) throw DataError("entry " + key_text(key) + ": d_high < d_low");
        if (*b.d_high > singleton)
            throw DataError("entry " + key_text(key) + ": d_high exceeds the Singleton bound " +
                            std::to_string(singleton));
    }
    if (!entries_.emplace(key, b).second) throw DataError("duplicate entry " + key_text(key));
}

std::optional<Bounds> BoundsTable::query(unsigned q, std::size_t n, std::size_t k) const {
    auto it = entries_.find({q, n, k});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

BoundsTable parse_snapshot(std::istream& in, const std::string& source) {
    BoundsTable t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::vector<std::string> f;
        for (std::string tok; ls >> tok;) f.push_back(tok);
        if (f.empty()) continue;
        try {
            if (f.size() != 5) throw DataError("expected 'q n k d_low d_high', got " + std::to_string(f.size()) + " fields");
            const long long q = parse_int(f[0]), n = parse_int(f[1]), k = parse_int(f[2]), lo = parse_int(f[3]);
            std::optional<int> hi;
            if (f[4] != "-") hi = static_cast<int>(parse_int(f[4]));
            if (q < 0 || n < 0 || k < 0) throw DataError("negative value");
            if (!BoundsTable::supported(static_cast<unsigned>(q)))
                throw DataError("unsupported q = " + std::to_string(q));
            t.insert({static_cast<unsigned>(q), static_cast<std::size_t>(n), static_cast<std::size_t>(k)},
                     {static_cast<int>(lo), hi});
        } catch (const DataError& e) {
            throw DataError(source + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return t;
}

BoundsTable load_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return parse_snapshot(in, path);
}

void save_snapshot(std::ostream& out, const BoundsTable& t) {
    for (const auto& [key, b] : t.entries()) {
        out << key.q << ' ' << key.n << ' ' << key.k << ' ' << b.d_low << ' ';
        if (b.d_high)
            out << *b.d_high;
        else
            out << '-';
        out << '\n';
    }
}

void save_snapshot_file(const std::string& path, const BoundsTable& t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path);
    save_snapshot(out, t);
}

}  // namespace plotkin
