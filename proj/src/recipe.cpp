#include "plotkin/recipe.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace plotkin {

namespace {

std::string where(SourceLoc at) {
    return "line " + std::to_string(at.line) + ", column " + std::to_string(at.column);
}

struct Token {
    enum Kind { Ident, Int, String, Punct, End } kind = End;
    std::string text;
    SourceLoc loc;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip();
        Token t;
        t.loc = {line_, col_};
        if (i_ >= s_.size()) return t;
        const char c = s_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Ident;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                t.text += take();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Int;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) t.text += take();
        } else if (c == '"') {
            t.kind = Token::String;
            take();
            while (i_ < s_.size() && s_[i_] != '"') t.text += take();
            if (i_ >= s_.size()) throw RecipeError(t.loc, "unterminated string");
            take();
        } else if (c == '.' && i_ + 1 < s_.size() && s_[i_ + 1] == '.') {
            t.kind = Token::Punct;
            t.text = "..";
            take();
            take();
        } else if (std::string("=(),{}").find(c) != std::string::npos) {
            t.kind = Token::Punct;
            t.text = take();
        } else {
            throw RecipeError(t.loc, std::string("unexpected character '") + c + "'");
        }
        return t;
    }

private:
    char take() {
        const char c = s_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip() {
        while (i_ < s_.size()) {
            if (s_[i_] == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
                take();
            } else {
                break;
            }
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

const std::map<std::string, Op>& op_names() {
    static const std::map<std::string, Op> names = {
        {"bch", Op::Bch},         {"cyclic", Op::Cyclic},   {"extend", Op::Extend}, {"shorten", Op::Shorten},
        {"puncture", Op::Puncture}, {"plotkin", Op::Plotkin}, {"dual", Op::Dual},     {"load", Op::Load},
    };
    return names;
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { advance(); }

    Recipe parse() {
        Recipe r;
        std::map<std::string, SourceLoc> defined;
        while (cur_.kind != Token::End) {
            Statement st;
            if (cur_.kind != Token::Ident) fail("expected a statement name");
            st.name = cur_.text;
            st.loc = cur_.loc;
            if (op_names().count(st.name)) fail("'" + st.name + "' is a reserved word");
            if (auto it = defined.find(st.name); it != defined.end())
                fail("duplicate name '" + st.name + "' (first defined at " + where(it->second) + ")");
            advance();
            expect("=");
            st.call = call();
            for (std::size_t i = 0; i < st.call.operands.size(); ++i)
                if (!defined.count(st.call.operands[i]))
                    throw RecipeError(st.call.operand_locs[i], "undefined name '" + st.call.operands[i] + "'");
            defined.emplace(st.name, st.loc);
            r.statements.push_back(std::move(st));
        }
        if (r.statements.empty()) throw RecipeError(cur_.loc, "empty recipe");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw RecipeError(cur_.loc, msg); }

    void advance() { cur_ = lex_.next(); }

    bool at(const char* punct) const { return cur_.kind == Token::Punct && cur_.text == punct; }

    void expect(const char* punct) {
        if (!at(punct)) fail(std::string("expected '") + punct + "'" + found());
        advance();
    }

    std::string found() const {
        if (cur_.kind == Token::End) return ", found end of input";
        return ", found '" + cur_.text + "'";
    }

    std::size_t integer(const char* what) {
        if (cur_.kind != Token::Int) fail(std::string("expected ") + what + found());
        std::size_t v = 0;
        try {
            v = std::stoull(cur_.text);
        } catch (const std::exception&) {
            fail("integer out of range");
        }
        advance();
        return v;
    }

    std::string string_literal(const char* what) {
        if (cur_.kind != Token::String) fail(std::string("expected ") + what + " in double quotes" + found());
        std::string s = cur_.text;
        advance();
        return s;
    }

    void operand(Call& c) {
        if (cur_.kind != Token::Ident) fail("expected a code name" + found());
        c.operands.push_back(cur_.text);
        c.operand_locs.push_back(cur_.loc);
        advance();
    }

    void posset(Call& c) {
        expect("{");
        for (;;) {
            const SourceLoc loc = cur_.loc;
            PosRange r;
            r.first = r.last = integer("a position");
            if (at("..")) {
                advance();
                r.last = integer("a position");
            }
            if (r.first < 1) throw RecipeError(loc, "positions are 1-based");
            if (r.last < r.first) throw RecipeError(loc, "empty range");
            c.positions.push_back(r);
            if (at(",")) {
                advance();
                continue;
            }
            expect("}");
            return;
        }
    }

    Call call() {
        if (cur_.kind != Token::Ident) fail("expected a constructor" + found());
        auto it = op_names().find(cur_.text);
        if (it == op_names().end()) fail("unknown constructor '" + cur_.text + "'");
        Call c;
        c.op = it->second;
        advance();
        expect("(");
        switch (c.op) {
            case Op::Bch:
                c.numbers.push_back(integer("q"));
                expect(",");
                c.numbers.push_back(integer("a length"));
                expect(",");
                c.numbers.push_back(integer("a designed distance"));
                if (at(",")) {
                    advance();
                    c.numbers.push_back(integer("a first root exponent"));
                }
                break;
            case Op::Cyclic:
                c.numbers.push_back(integer("q"));
                expect(",");
                c.numbers.push_back(integer("a length"));
                expect(",");
                c.text = string_literal("a polynomial");
                break;
            case Op::Extend:
            case Op::Dual:
                operand(c);
                break;
            case Op::Shorten:
            case Op::Puncture:
                operand(c);
                expect(",");
                posset(c);
                break;
            case Op::Plotkin:
                operand(c);
                expect(",");
                operand(c);
                break;
            case Op::Load:
                c.text = string_literal("a path");
                break;
        }
        expect(")");
        return c;
    }

    Lexer lex_;
    Token cur_;
};

std::string positions_text(const std::vector<PosRange>& ps) {
    std::string s = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(ps[i].first);
        if (ps[i].last != ps[i].first) s += ".." + std::to_string(ps[i].last);
    }
    return s + "}";
}

}  // namespace

RecipeError::RecipeError(SourceLoc at, const std::string& message, const std::string& file)
    : std::runtime_error((file.empty() ? "" : file + ": ") + where(at) + ": " + message),
      loc(at),
      message(message),
      file(file) {}

std::string to_string(Op op) {
    for (const auto& [name, o] : op_names())
        if (o == op) return name;
    return "?";
}

std::set<std::size_t> Call::position_set() const {
    std::set<std::size_t> s;
    for (const auto& r : positions)
        for (std::size_t p = r.first; p <= r.last; ++p) s.insert(p);
    return s;
}

bool operator==(const Call& a, const Call& b) {
    return a.op == b.op && a.numbers == b.numbers && a.text == b.text && a.operands == b.operands &&
           a.positions == b.positions;
}

bool operator==(const Statement& a, const Statement& b) { return a.name == b.name && a.call == b.call; }

bool operator==(const Recipe& a, const Recipe& b) { return a.statements == b.statements; }

Recipe parse_recipe(const std::string& text) { return Parser(text).parse(); }

Recipe parse_recipe_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_recipe(ss.str());
    } catch (const RecipeError& e) {
        throw RecipeError(e.loc, e.message, path);
    }
}

std::string print_recipe(const Recipe& r) {
    std::ostringstream out;
    for (const auto& st : r.statements) {
        const Call& c = st.call;
        out << st.name << " = " << to_string(c.op) << '(';
        switch (c.op) {
            case Op::Bch:
                for (std::size_t i = 0; i < c.numbers.size(); ++i) out << (i ? ", " : "") << c.numbers[i];
                break;
            case Op::Cyclic:
                out << c.numbers[0] << ", " << c.numbers[1] << ", \"" << c.text << '"';
                break;
            case Op::Extend:
            case Op::Dual:
                out << c.operands[0];
                break;
            case Op::Shorten:
            case Op::Puncture:
                out << c.operands[0] << ", " << positions_text(c.positions);
                break;
            case Op::Plotkin:
                out << c.operands[0] << ", " << c.operands[1];
                break;
            case Op::Load:
                out << '"' << c.text << '"';
                break;
        }
        out << ")\n";
    }
    return out.str();
}

namespace {

FieldPtr field_for(std::size_t q) {
    if (q > 65536) throw CodeError("field order " + std::to_string(q) + " too large");
    return Field::of_order(static_cast<std::uint32_t>(q));
}

LinearCode construct(const Statement& st, const std::map<std::string, LinearCode>& env, const EvalOptions& opts) {
    const Call& c = st.call;
    auto arg = [&](std::size_t i) -> const LinearCode& { return env.at(c.operands[i]); };
    auto check_positions = [&](const LinearCode& code) {
        const auto s = c.position_set();
        if (!s.empty() && *s.rbegin() > code.length())
            throw CodeError("position " + std::to_string(*s.rbegin()) + " exceeds the length " +
                            std::to_string(code.length()) + " of '" + c.operands[0] + "'");
        return s;
    };
    switch (c.op) {
        case Op::Bch:
            return bch_code(field_for(c.numbers[0]), c.numbers[1], c.numbers[2], c.numbers.size() > 3 ? c.numbers[3] : 1);
        case Op::Cyclic: {
            auto F = field_for(c.numbers[0]);
            return cyclic_code(F, c.numbers[1], Poly::parse(F, c.text));
        }
        case Op::Extend:
            return extend(arg(0));
        case Op::Dual:
            return dual(arg(0));
        case Op::Shorten:
            return shorten(arg(0), check_positions(arg(0)));
        case Op::Puncture:
            return puncture(arg(0), check_positions(arg(0)));
        case Op::Plotkin:
            if (!arg(0).field()->same_as(*arg(1).field()))
                throw CodeError("'" + c.operands[0] + "' is over " + arg(0).field()->name() + " but '" +
                                c.operands[1] + "' is over " + arg(1).field()->name());
            if (arg(0).length() != arg(1).length())
                throw CodeError("'" + c.operands[0] + "' has length " + std::to_string(arg(0).length()) + " but '" +
                                c.operands[1] + "' has length " + std::to_string(arg(1).length()));
            return plotkin_sum(arg(0), arg(1));
        case Op::Load: {
            std::filesystem::path p(c.text);
            if (p.is_relative()) p = opts.working_dir / p;
            return LinearCode::from_generator(read_generator_file(p.string()));
        }
    }
    throw CodeError("unhandled constructor");
}

}  // namespace

Evaluation eval_recipe(const Recipe& r, const EvalOptions& opts) {
    std::map<std::string, LinearCode> env;
    std::vector<TableUse> uses;
    for (const auto& st : r.statements) {
        try {
            LinearCode code = construct(st, env, opts);
            if (opts.trusted && code.dimension() > 0) {
                const unsigned q = code.field()->order();
                if (auto b = opts.trusted->query(q, code.length(), code.dimension())) {
                    const DistanceInfo before = code.distance();
                    const int singleton = static_cast<int>(code.length() - code.dimension() + 1);
                    int lo = before.known() ? before.lo : 1;
                    int hi = before.known() ? before.hi : singleton;
                    if (b->d_low > hi)
                        throw CodeError("table lower bound " + std::to_string(b->d_low) + " for " + code.parameters() +
                                        " exceeds the proven upper bound " + std::to_string(hi));
                    lo = std::max(lo, b->d_low);
                    if (b->d_high) hi = std::min(hi, *b->d_high);
                    if (lo > hi)
                        throw CodeError("table upper bound " + std::to_string(hi) + " for " + code.parameters() +
                                        " is below the proven lower bound " + std::to_string(lo));
                    const DistanceInfo after = DistanceInfo::bounds(lo, hi);
                    if (!(after == before)) {
                        code = code.with_distance(after);
                        uses.push_back({st.name, code.parameters(), before, after});
                    }
                }
            }
            env.insert_or_assign(st.name, std::move(code));
        } catch (const RecipeError&) {
            throw;
        } catch (const std::exception& e) {
            throw RecipeError(st.loc, "statement '" + st.name + "' (" + to_string(st.call.op) + "): " + e.what());
        }
    }
    return {env.at(r.result()), std::move(uses)};
}

Evaluation eval_recipe_file(const std::string& path, const BoundsTable* trusted) {
    const Recipe r = parse_recipe_file(path);
    EvalOptions opts;
    opts.working_dir = std::filesystem::path(path).parent_path();
    if (opts.working_dir.empty()) opts.working_dir = ".";
    opts.trusted = trusted;
    try {
        return eval_recipe(r, opts);
    } catch (const RecipeError& e) {
        throw RecipeError(e.loc, e.message, path);
    }
}

}  // namespace plotkin
