#include "pptor/formula.hpp"

#include "pptor/error.hpp"
#include "pptor/normal_form.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace pptor {

Int Term::value() const {
    Int v = coef ? *coef : Int(1);
    return negative ? Int(-v) : v;
}

Atom Atom::make_equation(Equation e) {
    Atom a;
    a.kind = Kind::Equation;
    a.equation = std::move(e);
    return a;
}

Atom Atom::make_group(std::vector<Atom> body) {
    Atom a;
    a.kind = Kind::Group;
    a.body = std::move(body);
    return a;
}

Atom Atom::make_exists(std::vector<std::string> vars, std::vector<Atom> body) {
    Atom a;
    a.kind = Kind::Exists;
    a.vars = std::move(vars);
    a.body = std::move(body);
    return a;
}

namespace {

// ---- scoping -------------------------------------------------------------

void collect_names(const Conjunction& conj, std::set<std::string>& out) {
    for (const Atom& a : conj) {
        switch (a.kind) {
        case Atom::Kind::Equation:
            for (const LinComb* side : {&a.equation.lhs, &a.equation.rhs})
                for (const Term& t : side->terms)
                    if (t.var) out.insert(*t.var);
            break;
        case Atom::Kind::Exists:
            out.insert(a.vars.begin(), a.vars.end());
            [[fallthrough]];
        case Atom::Kind::Group:
            collect_names(a.body, out);
            break;
        }
    }
}

void collect_free(const Conjunction& conj, std::set<std::string>& scope, std::vector<std::string>& out) {
    for (const Atom& a : conj) {
        switch (a.kind) {
        case Atom::Kind::Equation:
            for (const LinComb* side : {&a.equation.lhs, &a.equation.rhs})
                for (const Term& t : side->terms)
                    if (t.var && !scope.count(*t.var) &&
                        std::find(out.begin(), out.end(), *t.var) == out.end())
                        out.push_back(*t.var);
            break;
        case Atom::Kind::Group:
            collect_free(a.body, scope, out);
            break;
        case Atom::Kind::Exists: {
            std::set<std::string> inner = scope;
            inner.insert(a.vars.begin(), a.vars.end());
            collect_free(a.body, inner, out);
            break;
        }
        }
    }
}

struct Renamer {
    std::set<std::string> used;   // every name that must not be invented
    std::set<std::string> taken;  // free names and bound names assigned so far
    std::vector<std::string> bound;

    std::string fresh(const std::string& base) {
        for (unsigned k = 1;; ++k) {
            std::string candidate = base + std::to_string(k);
            if (!used.count(candidate) && !taken.count(candidate)) {
                used.insert(candidate);
                return candidate;
            }
        }
    }

    void walk(Conjunction& conj, const std::map<std::string, std::string>& env) {
        for (Atom& a : conj) {
            switch (a.kind) {
            case Atom::Kind::Equation:
                for (LinComb* side : {&a.equation.lhs, &a.equation.rhs})
                    for (Term& t : side->terms)
                        if (t.var) {
                            auto it = env.find(*t.var);
                            if (it != env.end()) t.var = it->second;
                        }
                break;
            case Atom::Kind::Group:
                walk(a.body, env);
                break;
            case Atom::Kind::Exists: {
                std::map<std::string, std::string> inner = env;
                for (std::string& v : a.vars) {
                    std::string chosen = taken.count(v) ? fresh(v) : v;
                    taken.insert(chosen);
                    bound.push_back(chosen);
                    inner[v] = chosen;
                    v = chosen;
                }
                walk(a.body, inner);
                break;
            }
            }
        }
    }
};

// ---- lexer ----------------------------------------------------------------

enum class Tok { Ident, Int, Star, Plus, Minus, Eq, Amp, LParen, RParen, Dot, Caret, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), line, col});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                throw ParseError("malformed integer", line, col, std::string(s.substr(i, j - i + 1)));
            out.push_back({Tok::Int, std::string(s.substr(i, j - i)), line, col});
            advance(j - i);
            continue;
        }
        Tok kind;
        switch (ch) {
        case '*': kind = Tok::Star; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '=': kind = Tok::Eq; break;
        case '&': kind = Tok::Amp; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '.': kind = Tok::Dot; break;
        case '^': kind = Tok::Caret; break;
        default: throw ParseError("unexpected character", line, col, std::string(1, ch));
        }
        out.push_back({kind, std::string(1, ch), line, col});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// ---- parser ---------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Conjunction parse() {
        Conjunction c = conj();
        if (peek().kind != Tok::End) fail("unexpected token");
        return c;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg, t.line, t.col, t.kind == Tok::End ? "<end of input>" : t.text);
    }
    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(std::string("expected ") + what);
        ++pos_;
    }
    bool is_quantifier() const { return peek().kind == Tok::Ident && peek().text == "E"; }

    Conjunction conj() {
        Conjunction out;
        for (;;) {
            out.push_back(atom());
            // A quantifier swallows the rest of the conjunction.
            if (out.back().kind == Atom::Kind::Exists) break;
            if (peek().kind != Tok::Amp) break;
            take();
        }
        return out;
    }

    Atom atom() {
        if (is_quantifier()) {
            take();
            std::vector<std::string> vars;
            while (peek().kind == Tok::Ident && peek().text != "E") {
                if (std::find(vars.begin(), vars.end(), peek().text) != vars.end())
                    fail("variable bound twice");
                vars.push_back(take().text);
            }
            if (vars.empty()) fail("expected variable after quantifier");
            expect(Tok::Dot, "'.'");
            return Atom::make_exists(std::move(vars), conj());
        }
        if (peek().kind == Tok::LParen) {
            take();
            Conjunction inner = conj();
            expect(Tok::RParen, "')'");
            return Atom::make_group(std::move(inner));
        }
        Equation e;
        e.lhs = lincomb();
        expect(Tok::Eq, "'='");
        e.rhs = lincomb();
        return Atom::make_equation(std::move(e));
    }

    LinComb lincomb() {
        LinComb out;
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            take();
            negative = true;
        }
        out.terms.push_back(term(negative));
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            negative = take().kind == Tok::Minus;
            out.terms.push_back(term(negative));
        }
        return out;
    }

    Int integer() {
        const Token& t = take();
        Int v(t.text);
        if (peek().kind == Tok::Caret) {
            take();
            if (peek().kind != Tok::Int) fail("malformed integer: exponent expected");
            const Token& e = take();
            Int ev(e.text);
            if (!ev.fits_ulong_p() || ev > 100000) throw ParseError("exponent too large", e.line, e.col, e.text);
            v = power(v, ev.get_ui());
        }
        return v;
    }

    Term term(bool negative) {
        Term t;
        t.negative = negative;
        if (peek().kind == Tok::Ident) {
            if (peek().text == "E") fail("quantifier inside a linear combination");
            t.var = take().text;
            return t;
        }
        if (peek().kind != Tok::Int) fail("expected term");
        const Token start = peek();
        Int v = integer();
        if (peek().kind == Tok::Star) {
            take();
            if (peek().kind != Tok::Ident || peek().text == "E") fail("coefficient not followed by a variable");
            t.coef = v;
            t.var = take().text;
            return t;
        }
        if (v != 0) throw ParseError("non-homogeneous constant", start.line, start.col, start.text);
        t.coef = v;
        return t;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---- printer --------------------------------------------------------------

void print_lincomb(const LinComb& l, std::string& out) {
    for (std::size_t i = 0; i < l.terms.size(); ++i) {
        const Term& t = l.terms[i];
        if (i == 0)
            out += t.negative ? "-" : "";
        else
            out += t.negative ? " - " : " + ";
        if (t.coef) {
            out += t.coef->get_str();
            if (t.var) out += "*";
        }
        if (t.var) out += *t.var;
    }
}

void print_conj(const Conjunction& c, std::string& out) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) out += " & ";
        const Atom& a = c[i];
        switch (a.kind) {
        case Atom::Kind::Equation:
            print_lincomb(a.equation.lhs, out);
            out += " = ";
            print_lincomb(a.equation.rhs, out);
            break;
        case Atom::Kind::Group:
            out += "(";
            print_conj(a.body, out);
            out += ")";
            break;
        case Atom::Kind::Exists:
            out += "E";
            for (const auto& v : a.vars) out += " " + v;
            out += " . ";
            print_conj(a.body, out);
            break;
        }
    }
}

void collect_equations(const Conjunction& c, std::vector<LinearEquation>& out) {
    for (const Atom& a : c) {
        if (a.kind != Atom::Kind::Equation) {
            collect_equations(a.body, out);
            continue;
        }
        LinearEquation eq;
        auto add = [&](const Term& t, int sign) {
            if (!t.var) return;
            Int v = sign * t.value();
            for (auto& [name, coef] : eq.coefficients)
                if (name == *t.var) {
                    coef += v;
                    return;
                }
            eq.coefficients.emplace_back(*t.var, v);
        };
        for (const Term& t : a.equation.lhs.terms) add(t, 1);
        for (const Term& t : a.equation.rhs.terms) add(t, -1);
        out.push_back(std::move(eq));
    }
}

std::set<std::string> names_of(const PpFormula& f) {
    std::set<std::string> s(f.free_vars().begin(), f.free_vars().end());
    s.insert(f.bound_vars().begin(), f.bound_vars().end());
    return s;
}

std::string pick_name(const std::set<std::string>& avoid) {
    for (const char* c : {"y", "z", "u", "v", "w"})
        if (!avoid.count(c)) return c;
    for (unsigned k = 1;; ++k) {
        std::string c = "y" + std::to_string(k);
        if (!avoid.count(c)) return c;
    }
}

void require_unary(const PpFormula& f, const char* op) {
    if (f.arity() != 1)
        throw ArityError(std::string(op) + " needs exactly one free variable, got " + std::to_string(f.arity()));
}

Term var_term(const std::string& name, bool negative = false, std::optional<Int> coef = std::nullopt) {
    Term t;
    t.negative = negative;
    t.coef = std::move(coef);
    t.var = name;
    return t;
}

}  // namespace

// A quantifier that is not the last conjunct only makes sense parenthesized.
static void wrap_inner_quantifiers(Conjunction& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        wrap_inner_quantifiers(c[i].body);
        if (c[i].kind == Atom::Kind::Exists && i + 1 < c.size()) c[i] = Atom::make_group({std::move(c[i])});
    }
}

PpFormula PpFormula::from_body(Conjunction body) {
    wrap_inner_quantifiers(body);
    PpFormula f;
    std::set<std::string> scope;
    collect_free(body, scope, f.free_);
    Renamer r;
    collect_names(body, r.used);
    r.taken.insert(f.free_.begin(), f.free_.end());
    r.walk(body, {});
    f.bound_ = std::move(r.bound);
    f.body_ = std::move(body);
    return f;
}

std::vector<LinearEquation> PpFormula::equations() const {
    std::vector<LinearEquation> out;
    collect_equations(body_, out);
    return out;
}

PpFormula parse_formula(std::string_view text) { return PpFormula::from_body(Parser(text).parse()); }

std::string to_string(const PpFormula& f) {
    std::string out;
    print_conj(f.body(), out);
    return out;
}

MatrixForm normalize(const PpFormula& f) {
    auto eqs = f.equations();
    MatrixForm m{IntMatrix(eqs.size(), f.free_vars().size()), IntMatrix(eqs.size(), f.bound_vars().size())};
    auto index_of = [](const std::vector<std::string>& names, const std::string& v) -> std::optional<std::size_t> {
        auto it = std::find(names.begin(), names.end(), v);
        if (it == names.end()) return std::nullopt;
        return static_cast<std::size_t>(it - names.begin());
    };
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (const auto& [name, coef] : eqs[r].coefficients) {
            if (auto i = index_of(f.free_vars(), name))
                m.c(r, *i) += coef;
            else
                m.d(r, *index_of(f.bound_vars(), name)) += coef;
        }
    return m;
}

Int solution_generator_over_z(const PpFormula& f) {
    require_unary(f, "lowness");
    MatrixForm m = normalize(f);
    IntMatrix k = right_kernel(concat(m.c, m.d));
    Int d = 0;
    for (std::size_t r = 0; r < k.rows(); ++r) d = gcd(d, k(r, 0));
    return d;
}

bool is_low(const PpFormula& f) { return solution_generator_over_z(f) == 0; }

PpFormula rename_free(const PpFormula& f, const std::vector<std::string>& names) {
    if (names.size() != f.arity()) throw ArityError("rename_free: wrong number of names");
    std::set<std::string> avoid = names_of(f);
    avoid.insert(names.begin(), names.end());
    std::map<std::string, std::string> subst;
    // Move bound variables out of the way first so the new free names cannot be captured.
    std::set<std::string> targets(names.begin(), names.end());
    for (const auto& b : f.bound_vars())
        if (targets.count(b)) {
            std::string fresh;
            for (unsigned k = 1;; ++k) {
                fresh = b + std::to_string(k);
                if (!avoid.count(fresh)) break;
            }
            avoid.insert(fresh);
            subst[b] = fresh;
        }
    for (std::size_t i = 0; i < names.size(); ++i) subst[f.free_vars()[i]] = names[i];

    Conjunction body = f.body();
    // Names are already unique per role, so a flat substitution respects scope.
    auto apply = [&](auto& self, Conjunction& c) -> void {
        for (Atom& a : c) {
            if (a.kind == Atom::Kind::Equation) {
                for (LinComb* side : {&a.equation.lhs, &a.equation.rhs})
                    for (Term& t : side->terms)
                        if (t.var && subst.count(*t.var)) t.var = subst.at(*t.var);
                continue;
            }
            for (auto& v : a.vars)
                if (subst.count(v)) v = subst.at(v);
            self(self, a.body);
        }
    };
    apply(apply, body);
    return PpFormula::from_body(std::move(body));
}

PpFormula sum_formulas(const PpFormula& f1, const PpFormula& f2) {
    require_unary(f1, "sum_formulas");
    require_unary(f2, "sum_formulas");
    const std::string x = f1.free_vars()[0];
    std::set<std::string> avoid = names_of(f1);
    auto n2 = names_of(f2);
    avoid.insert(n2.begin(), n2.end());
    std::string y = pick_name(avoid);
    avoid.insert(y);
    std::string z = pick_name(avoid);

    Equation link;
    link.lhs.terms.push_back(var_term(x));
    link.rhs.terms.push_back(var_term(y));
    link.rhs.terms.push_back(var_term(z));
    Conjunction inner{Atom::make_group(rename_free(f1, {y}).body()), Atom::make_group(rename_free(f2, {z}).body()),
                      Atom::make_equation(std::move(link))};
    return PpFormula::from_body({Atom::make_exists({y, z}, std::move(inner))});
}

PpFormula scalar_formula(const Int& r, const PpFormula& f) {
    require_unary(f, "scalar_formula");
    const std::string x = f.free_vars()[0];
    std::set<std::string> avoid = names_of(f);
    std::string y = pick_name(avoid);

    Equation link;
    link.lhs.terms.push_back(var_term(x));
    link.rhs.terms.push_back(var_term(y, r < 0, Int(abs(r))));
    Conjunction inner{Atom::make_group(rename_free(f, {y}).body()), Atom::make_equation(std::move(link))};
    return PpFormula::from_body({Atom::make_exists({y}, std::move(inner))});
}

}  // namespace pptor
