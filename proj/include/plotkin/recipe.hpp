#pragma once

// A small construction language for codes:
//
//   c1 = bch(4, 63, 5)          # q, n, designed distance [, first root b]
//   c2 = extend(c1)
//   c3 = shorten(c2, {62..64})  # 1-based positions, ranges inclusive
//   c4 = cyclic(4, 65, "x^21 + a*x^20 + ... + 1")
//   c5 = puncture(c4, {1, 3..5})
//   c6 = plotkin(c3, c4)
//   c7 = dual(c6)
//   c8 = load("generator.mat")
//
// The last statement is the result.

#include <cstddef>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "plotkin/codes.hpp"
#include "plotkin/tables.hpp"

namespace plotkin {

struct SourceLoc {
    std::size_t line = 0;
    std::size_t column = 0;
};

/// what() reads "[file: ]line L, column C: message".
struct RecipeError : std::runtime_error {
    RecipeError(SourceLoc at, const std::string& message, const std::string& file = "");
    SourceLoc loc;
    std::string message;
    std::string file;
};

struct PosRange {
    std::size_t first = 0;
    std::size_t last = 0;
    friend bool operator==(const PosRange&, const PosRange&) = default;
};

enum class Op { Bch, Cyclic, Extend, Shorten, Puncture, Plotkin, Dual, Load };

std::string to_string(Op op);

struct Call {
    Op op = Op::Bch;
    /// bch: q, n, delta [, b]; cyclic: q, n.
    std::vector<std::size_t> numbers;
    /// Polynomial text for cyclic, path for load.
    std::string text;
    std::vector<std::string> operands;
    std::vector<PosRange> positions;
    /// Location of each operand name.
    std::vector<SourceLoc> operand_locs;

    std::set<std::size_t> position_set() const;
};

struct Statement {
    std::string name;
    Call call;
    SourceLoc loc;
};

struct Recipe {
    std::vector<Statement> statements;
    const std::string& result() const { return statements.back().name; }
};

/// Equality of content; source locations are ignored.
bool operator==(const Call& a, const Call& b);
bool operator==(const Statement& a, const Statement& b);
bool operator==(const Recipe& a, const Recipe& b);

Recipe parse_recipe(const std::string& text);
Recipe parse_recipe_file(const std::string& path);

/// Canonical text; parse_recipe(print_recipe(r)) == r.
std::string print_recipe(const Recipe& r);

struct EvalOptions {
    /// Base directory for relative load() paths.
    std::filesystem::path working_dir = ".";
    /// When set, every intermediate code whose (q, n, k) has an entry takes
    /// the entry's bounds as trusted input.
    const BoundsTable* trusted = nullptr;
};

struct TableUse {
    std::string name;
    std::string parameters;
    DistanceInfo before;
    DistanceInfo after;
};

struct Evaluation {
    LinearCode code;
    /// Statements whose distance knowledge came from the trusted table.
    std::vector<TableUse> table_uses;
};

/// Construction errors are rethrown as RecipeError naming the statement.
Evaluation eval_recipe(const Recipe& r, const EvalOptions& opts = {});

/// Parses and evaluates a file; load() paths are relative to its directory.
Evaluation eval_recipe_file(const std::string& path, const BoundsTable* trusted = nullptr);

}  // namespace plotkin
