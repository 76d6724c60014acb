#include "plotkin/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>

#include "plotkin/distance.hpp"
#include "plotkin/recipe.hpp"
#include "plotkin/search.hpp"

namespace plotkin {

unsigned default_threads() {
    if (const char* v = std::getenv("PLOTKIN_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(v, &end, 10);
        if (end != v && *end == '\0' && n > 0) return static_cast<unsigned>(n);
    }
    return 1;
}

namespace {

// Never prints "d=" unless the value is exact.
std::string lower_text(const DistanceInfo& d) {
    switch (d.kind) {
        case DistanceInfo::Kind::Exact: return "d=" + std::to_string(d.lo);
        case DistanceInfo::Kind::Bounds: return "d>=" + std::to_string(d.lo);
        case DistanceInfo::Kind::Unknown: return "d unknown";
    }
    return "";
}

std::string range_text(const DistanceInfo& d) {
    switch (d.kind) {
        case DistanceInfo::Kind::Exact: return "d=" + std::to_string(d.lo);
        case DistanceInfo::Kind::Bounds: return std::to_string(d.lo) + "<=d<=" + std::to_string(d.hi);
        case DistanceInfo::Kind::Unknown: return "d unknown";
    }
    return "";
}

struct EvalArgs {
    std::string recipe, out, table;
};

struct DistanceArgs {
    std::string matrix, method, table;
    std::uint64_t budget = 0;
    int target = 1;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool verbose = false;
};

struct ScanArgs {
    std::string table, out;
    unsigned q = 0;
    std::size_t nmin = 0, nmax = 0;
    unsigned threads = 1;
};

struct StatsArgs {
    std::string table;
    std::vector<unsigned> qs;
};

void cmd_eval(const EvalArgs& a, std::ostream& out) {
    std::optional<BoundsTable> table;
    if (!a.table.empty()) table = load_snapshot(a.table);
    const Evaluation ev = eval_recipe_file(a.recipe, table ? &*table : nullptr);
    const LinearCode& c = ev.code;
    out << c.parameters() << ' ' << lower_text(c.distance()) << " (propagated)\n";
    const int singleton = static_cast<int>(c.length() - c.dimension() + 1);
    if (c.distance().kind == DistanceInfo::Kind::Bounds && c.distance().hi < singleton)
        out << "upper bound: d<=" << c.distance().hi << '\n';
    for (const auto& u : ev.table_uses)
        out << "table bounds used for " << u.name << ' ' << u.parameters << ": " << range_text(u.before) << " -> "
            << range_text(u.after) << " (ingested, not certified)\n";
    if (!a.out.empty()) {
        write_generator_file(a.out, c.generator());
        out << "wrote " << a.out << '\n';
    }
}

void cmd_distance(const DistanceArgs& a, std::ostream& out, std::ostream& err) {
    const LinearCode code = LinearCode::from_generator(read_generator_file(a.matrix));
    out << code.parameters() << " over GF(" << code.field()->order() << ")\n";
    DistanceResult r;
    if (a.method == "exhaustive") {
        r = min_distance_exhaustive(code, a.budget ? a.budget : kExhaustiveCeiling);
    } else if (a.method == "bz") {
        BzOptions o;
        o.budget = a.budget ? a.budget : kDefaultBzBudget;
        o.threads = a.threads;
        if (a.verbose) o.log = [&err](const std::string& line) { err << line << '\n'; };
        r = min_distance_bz(code, o);
    } else {
        WitnessOptions o;
        if (a.budget) o.budget = a.budget;
        o.seed = a.seed;
        out << "seed=" << a.seed << " target=" << a.target << '\n';
        r = low_weight_witness(code, a.target, o);
    }
    out << r.describe() << '\n';
    out << "work=" << r.work << '\n';
    if (r.witness) {
        out << "witness:";
        for (auto s : r.witness->symbols) out << ' ' << s;
        out << '\n';
    }
    if (!a.table.empty()) {
        const BoundsTable t = load_snapshot(a.table);
        if (auto b = t.query(code.field()->order(), code.length(), code.dimension())) {
            out << "table: d>=" << b->d_low;
            if (b->d_high) out << " d<=" << *b->d_high;
            out << " (ingested, not certified)\n";
        } else {
            out << "table: no entry\n";
        }
    }
}

void cmd_scan(const ScanArgs& a, std::ostream& out) {
    const BoundsTable t = load_snapshot(a.table);
    if (!BoundsTable::supported(a.q)) throw DataError("no table limits for q = " + std::to_string(a.q));
    std::optional<std::pair<std::size_t, std::size_t>> range;
    if (a.nmin || a.nmax)
        range = std::make_pair(a.nmin ? a.nmin : std::size_t{1}, a.nmax ? a.nmax : BoundsTable::limit(a.q) / 2);
    const auto findings = scan_with_shortening(t, a.q, range, a.threads);
    if (a.out.empty()) {
        write_findings_tsv(out, findings);
        return;
    }
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw DataError("cannot write " + a.out);
    write_findings_tsv(f, findings);
    std::map<Classification, std::size_t> counts;
    for (const auto& x : findings) ++counts[x.cls];
    out << "findings: " << findings.size() << '\n';
    for (auto c : {Classification::Improves, Classification::Matches, Classification::Below,
                   Classification::NoTableEntry})
        out << to_string(c) << ": " << counts[c] << '\n';
    for (const auto& x : findings)
        if (x.cls == Classification::Improves || x.cls == Classification::Matches)
            out << to_string(x.cls) << " [" << x.length() << ',' << x.dimension() << ',' << x.plotkin_d
                << "] from [" << x.n << ',' << x.k1 << "] and [" << x.n << ',' << x.k2 << ']'
                << (x.shortened ? " shortened by " + std::to_string(x.shortened) : std::string()) << '\n';
    out << "wrote " << a.out << '\n';
}

void cmd_stats(const StatsArgs& a, std::ostream& out) {
    const BoundsTable t = load_snapshot(a.table);
    std::vector<unsigned> qs = a.qs;
    if (qs.empty()) qs = {2, 3, 4, 5, 7, 8, 9};
    out << "q\t# n even\t# Plotkin sum\t%\n";
    for (unsigned q : qs) {
        if (!BoundsTable::supported(q)) throw DataError("no table limits for q = " + std::to_string(q));
        const auto s = coverage_stats(t, q);
        out << q << '\t' << s.total_even_entries << '\t' << s.plotkin_achievable << '\t' << s.percent() << '\n';
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear code constructions, minimum distance engines and Plotkin-sum table scans", "plotkin"};
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate a recipe; print [n,k] and distance knowledge");
    eval->add_option("recipe", ea.recipe, "Recipe file (.rcp)")->required()->check(CLI::ExistingFile);
    eval->add_option("--out", ea.out, "Write the generator matrix here");
    eval->add_option("--table", ea.table, "Bounds table whose entries are trusted for intermediate codes")
        ->check(CLI::ExistingFile);

    DistanceArgs da;
    da.threads = default_threads();
    auto* dist = app.add_subcommand("distance", "Minimum distance of a code given by a generator matrix");
    dist->add_option("matrix", da.matrix, "Generator matrix file")->required()->check(CLI::ExistingFile);
    dist->add_option("--method", da.method, "exhaustive, bz or witness")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "bz", "witness"}));
    dist->add_option("--budget", da.budget,
                     "Evaluation budget (default: 2^24 exhaustive, 10^9 bz, 10^7 witness)");
    dist->add_option("--target", da.target, "Witness search stops at this weight or below")
        ->check(CLI::PositiveNumber);
    dist->add_option("--seed", da.seed, "Witness search seed")->capture_default_str();
    dist->add_option("--threads", da.threads, "Worker threads for bz (default PLOTKIN_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    dist->add_option("--table", da.table, "Also report the table entry for these parameters")
        ->check(CLI::ExistingFile);
    dist->add_flag("--verbose", da.verbose, "Log each bz round on standard error");

    ScanArgs sa;
    sa.threads = default_threads();
    auto* scan = app.add_subcommand("scan", "Plotkin sums of table entries compared with the table at length 2n");
    scan->add_option("--table", sa.table, "Bounds table")->required()->check(CLI::ExistingFile);
    scan->add_option("--q", sa.q, "Alphabet size")->required();
    scan->add_option("--nmin", sa.nmin, "Smallest ingredient length");
    scan->add_option("--nmax", sa.nmax, "Largest ingredient length");
    scan->add_option("--out", sa.out, "Write findings TSV here instead of standard output");
    scan->add_option("--threads", sa.threads, "Worker threads")->check(CLI::PositiveNumber);

    StatsArgs sta;
    auto* stats = app.add_subcommand("stats", "Share of even-length table cells reached by a Plotkin sum");
    stats->add_option("--table", sta.table, "Bounds table")->required()->check(CLI::ExistingFile);
    stats->add_option("--q", sta.qs, "Alphabet sizes (default: 2 3 4 5 7 8 9)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (*eval) cmd_eval(ea, out);
        if (*dist) cmd_distance(da, out, err);
        if (*scan) cmd_scan(sa, out);
        if (*stats) cmd_stats(sta, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace plotkin
