#include "pptor/cardinal.hpp"

#include "pptor/error.hpp"

#include <algorithm>
#include <cctype>

namespace pptor {

std::string to_string(TriBool t) {
    switch (t) {
    case TriBool::True: return "true";
    case TriBool::False: return "false";
    case TriBool::Unknown: break;
    }
    return "unknown";
}

CardinalExpr CardinalExpr::finite(Int n) {
    if (n < 0) throw DomainError("negative cardinal");
    CardinalExpr e;
    e.kind_ = Kind::Finite;
    e.value_ = std::move(n);
    return e;
}

CardinalExpr CardinalExpr::aleph(CardIndex i) {
    CardinalExpr e;
    e.kind_ = Kind::Aleph;
    e.index_ = i;
    return e;
}

CardinalExpr CardinalExpr::beth(CardIndex i) {
    CardinalExpr e;
    e.kind_ = Kind::Beth;
    e.index_ = i;
    return e;
}

CardinalExpr CardinalExpr::var(std::string name) {
    CardinalExpr e;
    e.kind_ = Kind::Var;
    e.name_ = std::move(name);
    return e;
}

CardinalExpr CardinalExpr::power(CardinalExpr base, CardinalExpr exponent) {
    CardinalExpr e;
    e.kind_ = Kind::Power;
    e.args_ = {std::move(base), std::move(exponent)};
    return e;
}

CardinalExpr CardinalExpr::product(std::vector<CardinalExpr> factors) {
    if (factors.empty()) return finite(1);
    if (factors.size() == 1) return std::move(factors[0]);
    CardinalExpr e;
    e.kind_ = Kind::Product;
    e.args_ = std::move(factors);
    return e;
}

CardinalExpr CardinalExpr::sum(std::vector<CardinalExpr> terms) {
    if (terms.empty()) return finite(0);
    if (terms.size() == 1) return std::move(terms[0]);
    CardinalExpr e;
    e.kind_ = Kind::Sum;
    e.args_ = std::move(terms);
    return e;
}

std::strong_ordering syntactic_compare(const CardinalExpr& a, const CardinalExpr& b) {
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (int c = cmp(a.value(), b.value()); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = a.index() <=> b.index(); c != 0) return c;
    if (auto c = a.name() <=> b.name(); c != 0) return c;
    if (auto c = a.args().size() <=> b.args().size(); c != 0) return c;
    for (std::size_t i = 0; i < a.args().size(); ++i)
        if (auto c = syntactic_compare(a.args()[i], b.args()[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

// ---- printing ------------------------------------------------------------

namespace {

using Kind = CardinalExpr::Kind;
using E = CardinalExpr;

int precedence(const E& e) {
    switch (e.kind()) {
    case Kind::Sum: return 1;
    case Kind::Product: return 2;
    case Kind::Power: return 3;
    default: return 4;
    }
}

const std::pair<const char*, const char*> greek[] = {
    {"lambda", "λ"}, {"mu", "μ"}, {"kappa", "κ"}, {"nu", "ν"}, {"theta", "θ"}, {"chi", "χ"},
};

std::string index_text(CardIndex i, Notation n) {
    if (i.omega) return n == Notation::Unicode ? "_ω" : "(w)";
    return std::to_string(i.n);
}

void print(const E& e, Notation n, std::string& out) {
    auto child = [&](const E& c, bool parens) {
        if (parens) out += '(';
        print(c, n, out);
        if (parens) out += ')';
    };
    switch (e.kind()) {
    case Kind::Finite: out += e.value().get_str(); break;
    case Kind::Aleph:
        out += n == Notation::Unicode ? "ℵ" : "aleph";
        out += index_text(e.index(), n);
        break;
    case Kind::Beth:
        out += n == Notation::Unicode ? "ℶ" : "beth";
        out += index_text(e.index(), n);
        break;
    case Kind::Var: {
        std::string name = e.name();
        if (n == Notation::Unicode)
            for (auto [ascii, uni] : greek)
                if (name == ascii) name = uni;
        out += name;
        break;
    }
    case Kind::Power:
        child(e.base(), precedence(e.base()) <= 3);
        out += '^';
        child(e.exponent(), precedence(e.exponent()) < 3);
        break;
    case Kind::Product:
    case Kind::Sum: {
        const int p = precedence(e);
        const char* sep = e.kind() == Kind::Sum ? " + " : (n == Notation::Unicode ? " · " : " * ");
        for (std::size_t i = 0; i < e.args().size(); ++i) {
            if (i) out += sep;
            child(e.args()[i], precedence(e.args()[i]) <= p);
        }
        break;
    }
    }
}

}  // namespace

std::string to_string(const CardinalExpr& e, Notation notation) {
    std::string out;
    print(e, notation, out);
    return out;
}

// ---- parsing -------------------------------------------------------------

namespace {

class CardParser {
public:
    explicit CardParser(std::string_view s) : s_(s) {}

    E parse() {
        E e = sum();
        skip();
        if (pos_ < s_.size()) fail("unexpected input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        skip();
        std::string token = pos_ < s_.size() ? std::string(s_.substr(pos_, 1)) : "<end of input>";
        // Whole UTF-8 sequence for the offending character.
        if (pos_ < s_.size() && (static_cast<unsigned char>(s_[pos_]) & 0x80)) {
            std::size_t j = pos_ + 1;
            while (j < s_.size() && (static_cast<unsigned char>(s_[j]) & 0xC0) == 0x80) ++j;
            token = std::string(s_.substr(pos_, j - pos_));
        }
        throw ParseError(msg, 1, pos_ + 1, token);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok) {
        if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
    }

    E sum() {
        std::vector<E> terms{product()};
        while (eat("+")) terms.push_back(product());
        return E::sum(std::move(terms));
    }

    E product() {
        std::vector<E> factors{power()};
        while (eat("*") || eat("·")) factors.push_back(power());
        return E::product(std::move(factors));
    }

    E power() {
        E base = atom();
        if (eat("^")) return E::power(std::move(base), power());
        return base;
    }

    unsigned small_number() {
        std::size_t j = pos_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == pos_) fail("expected an index");
        if (j - pos_ > 6) fail("index too large");
        unsigned v = static_cast<unsigned>(std::stoul(std::string(s_.substr(pos_, j - pos_))));
        pos_ = j;
        return v;
    }

    // After "aleph"/"beth" or their symbols: digits, "(k|w|omega|ω)", or "_ω"/"ω".
    CardIndex index() {
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return CardIndex::finite(small_number());
        if (s_.substr(pos_, 1) == "_") ++pos_;
        if (eat("ω")) return CardIndex::w();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return CardIndex::finite(small_number());
        expect("(");
        skip();
        CardIndex i;
        if (eat("ω") || eat("omega") || eat("w"))
            i = CardIndex::w();
        else
            i = CardIndex::finite(small_number());
        expect(")");
        return i;
    }

    E atom() {
        skip();
        if (pos_ >= s_.size()) fail("expected a cardinal");
        if (eat("(")) {
            E e = sum();
            expect(")");
            return e;
        }
        if (eat("ℵ")) return E::aleph(index());
        if (eat("ℶ")) return E::beth(index());
        for (auto [ascii, uni] : greek)
            if (eat(uni)) return E::var(ascii);
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = pos_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Int v(std::string(s_.substr(pos_, j - pos_)));
            pos_ = j;
            return E::finite(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = pos_;
            while (j < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            std::string word(s_.substr(pos_, j - pos_));
            if (word == "aleph" || word == "beth") {
                pos_ = j;
                CardIndex i = index();
                return word == "aleph" ? E::aleph(i) : E::beth(i);
            }
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            std::string name(s_.substr(pos_, j - pos_));
            if (name.rfind("aleph", 0) == 0 || name.rfind("beth", 0) == 0) {
                // aleph12, beth3
                pos_ += word.size();
                CardIndex i = index();
                return word == "aleph" ? E::aleph(i) : E::beth(i);
            }
            if (name == "w" || name == "omega") fail("omega is only an index");
            pos_ = j;
            return E::var(name);
        }
        fail("unexpected character");
    }
};

}  // namespace

CardinalExpr parse_cardinal(std::string_view text) { return CardParser(text).parse(); }

// ---- rule engine ---------------------------------------------------------

namespace {

using Steps = std::vector<std::string>;

bool fin(const E& e) { return e.kind() == Kind::Finite; }

E two() { return E::finite(2); }
E aleph0() { return E::aleph(CardIndex::finite(0)); }

std::string str(const E& e) { return to_string(e); }

// Bounds e <= beth_u and e >= beth_l for terms built from known atoms.
struct Level {
    bool omega = false;
    unsigned n = 0;
    friend auto operator<=>(const Level&, const Level&) = default;
};

Level succ(Level l) { return {l.omega, l.n + 1}; }

std::optional<Level> upper(const E& e) {
    switch (e.kind()) {
    case Kind::Finite: return Level{};
    case Kind::Aleph:
    case Kind::Beth: return Level{e.index().omega, e.index().n};
    case Kind::Var: return std::nullopt;
    case Kind::Power: {
        auto b = upper(e.base()), x = upper(e.exponent());
        if (!b || !x) return std::nullopt;
        return succ(std::max(*b, *x));
    }
    default: {
        Level m;
        for (const E& a : e.args()) {
            auto u = upper(a);
            if (!u) return std::nullopt;
            m = std::max(m, *u);
        }
        return m;
    }
    }
}

// Only meaningful for infinite e.
Level lower(const E& e) {
    switch (e.kind()) {
    case Kind::Beth: return Level{e.index().omega, e.index().n};
    case Kind::Power: return std::max(lower(e.base()), succ(lower(e.exponent())));
    case Kind::Sum:
    case Kind::Product: {
        Level m;
        for (const E& a : e.args())
            if (!fin(a)) m = std::max(m, lower(a));
        return m;
    }
    default: return Level{};
    }
}

std::string level_text(Level l) {
    if (!l.omega) return "beth" + std::to_string(l.n);
    return l.n ? "beth(w+" + std::to_string(l.n) + ")" : "beth(w)";
}

// Cofinality where it is a ZFC fact: aleph_0, successor alephs, aleph_w, beth_w.
std::optional<E> cf_exact(const E& e) {
    if (e.kind() == Kind::Aleph) return e.index().omega ? aleph0() : e;
    if (e.kind() == Kind::Beth && e.index().omega) return aleph0();
    return std::nullopt;
}

bool lt(const E& a, const E& b, Steps& out);

bool le(const E& a, const E& b, Steps& out) {
    if (a == b) {
        out.push_back("reflexivity: " + str(a) + " = " + str(b));
        return true;
    }
    if (fin(a) && fin(b)) {
        if (a.value() > b.value()) return false;
        out.push_back("finite-arithmetic: " + str(a) + " <= " + str(b));
        return true;
    }
    if (fin(a)) {
        out.push_back("finite-below-infinite: " + str(a) + " < " + str(b));
        return true;
    }
    if (fin(b)) return false;
    Steps s;
    if (a.kind() == Kind::Sum) {
        bool all = true;
        for (const E& x : a.args()) all = all && le(x, b, s);
        if (all) {
            out.insert(out.end(), s.begin(), s.end());
            out.push_back("max-bound: every term of " + str(a) + " is <= " + str(b));
            return true;
        }
        s.clear();
    }
    if (b.kind() == Kind::Sum)
        for (const E& y : b.args())
            if (le(a, y, s)) {
                out.insert(out.end(), s.begin(), s.end());
                out.push_back("max-bound: " + str(a) + " <= " + str(y) + " <= " + str(b));
                return true;
            }
    auto ua = upper(a);
    if (ua && *ua <= lower(b)) {
        out.push_back("beth-bounds: " + str(a) + " <= " + level_text(*ua) + " <= " + str(b));
        return true;
    }
    if (a == aleph0()) {
        out.push_back("aleph0-least: aleph0 <= " + str(b));
        return true;
    }
    if (a.kind() == Kind::Aleph && b.kind() == Kind::Aleph && a.index() <= b.index()) {
        out.push_back("aleph-index: " + str(a) + " <= " + str(b));
        return true;
    }
    if (a.kind() == Kind::Aleph && !a.index().omega) {
        E prev = E::aleph(CardIndex::finite(a.index().n - 1));
        if (lt(prev, b, s)) {
            out.insert(out.end(), s.begin(), s.end());
            out.push_back("successor: " + str(prev) + " < " + str(b) + " gives " + str(a) + " <= " + str(b));
            return true;
        }
        s.clear();
    }
    if (b.kind() == Kind::Power) {
        const E& c = b.base();
        const E& f = b.exponent();
        if (le(a, c, s)) {
            out.insert(out.end(), s.begin(), s.end());
            out.push_back("monotonicity: " + str(a) + " <= " + str(c) + " <= " + str(b));
            return true;
        }
        s.clear();
        if (le(a, f, s)) {
            out.insert(out.end(), s.begin(), s.end());
            out.push_back("Cantor: " + str(a) + " <= " + str(f) + " < 2^" + str(f) + " <= " + str(b));
            return true;
        }
        s.clear();
        if (a.kind() == Kind::Power) {
            if (le(a.base(), c, s) && le(a.exponent(), f, s)) {
                out.insert(out.end(), s.begin(), s.end());
                out.push_back("monotonicity: " + str(a) + " <= " + str(b) + " termwise");
                return true;
            }
            s.clear();
            if (le(a.base(), E::power(two(), f), s) && le(a.exponent(), f, s)) {
                out.insert(out.end(), s.begin(), s.end());
                out.push_back("squeeze-bound: " + str(a) + " <= (2^" + str(f) + ")^" + str(f) + " = 2^" + str(f) +
                              " <= " + str(b));
                return true;
            }
            s.clear();
        }
    }
    return lt(a, b, out);
}

bool lt(const E& a, const E& b, Steps& out) {
    if (a == b) return false;
    if (fin(a) && fin(b)) {
        if (a.value() >= b.value()) return false;
        out.push_back("finite-arithmetic: " + str(a) + " < " + str(b));
        return true;
    }
    if (fin(a)) {
        out.push_back("finite-below-infinite: " + str(a) + " < " + str(b));
        return true;
    }
    if (fin(b)) return false;
    Steps s;
    if (a.kind() == Kind::Sum) {
        bool all = true;
        for (const E& x : a.args()) all = all && lt(x, b, s);
        if (all) {
            out.insert(out.end(), s.begin(), s.end());
            out.push_back("max-bound: every term of " + str(a) + " is < " + str(b));
            return true;
        }
        s.clear();
    }
    if (b.kind() == Kind::Sum)
        for (const E& y : b.args())
            if (lt(a, y, s)) {
                out.insert(out.end(), s.begin(), s.end());
                out.push_back("max-bound: " + str(a) + " < " + str(y) + " <= " + str(b));
                return true;
            }
    if (b.kind() == Kind::Power) {
        const E& c = b.base();
        const E& f = b.exponent();
        if (le(a, f, s)) {
            out.insert(out.end(), s.begin(), s.end());
            out.push_back("Cantor: " + str(a) + " <= " + str(f) + " < 2^" + str(f) + " <= " + str(b));
            return true;
        }
        s.clear();
        if (lt(a, c, s)) {
            out.insert(out.end(), s.begin(), s.end());
            out.push_back("monotonicity: " + str(a) + " < " + str(c) + " <= " + str(b));
            return true;
        }
        s.clear();
        if (auto k = cf_exact(c); k && le(a, c, s) && le(*k, f, s)) {
            out.insert(out.end(), s.begin(), s.end());
            out.push_back("König: cf(" + str(c) + ") = " + str(*k) + " <= " + str(f) + ", so " + str(a) + " <= " + str(c) +
                          " < " + str(b));
            return true;
        }
        s.clear();
    }
    auto ua = upper(a);
    if (ua && *ua < lower(b)) {
        out.push_back("beth-bounds: " + str(a) + " <= " + level_text(*ua) + " < " + str(b));
        return true;
    }
    if (a.kind() == Kind::Aleph && b.kind() == Kind::Aleph && a.index() < b.index()) {
        out.push_back("aleph-index: " + str(a) + " < " + str(b));
        return true;
    }
    return false;
}

const Int finite_power_cap_bits = Int(1) << 22;

class Normalizer {
public:
    explicit Normalizer(Steps* trace) : trace_(trace) {}

    E run(const E& e) {
        switch (e.kind()) {
        case Kind::Finite:
        case Kind::Aleph:
        case Kind::Var: return e;
        case Kind::Beth: {
            if (e.index().omega) return e;
            E t = aleph0();
            for (unsigned k = 0; k < e.index().n; ++k) t = E::power(two(), t);
            if (e.index().n) note("beth-recursion: " + str(e) + " = " + str(t));
            else note("beth-recursion: beth0 = aleph0");
            return t;
        }
        case Kind::Power: return power(run(e.base()), run(e.exponent()));
        case Kind::Product:
        case Kind::Sum: {
            std::vector<E> args;
            for (const E& a : e.args()) args.push_back(run(a));
            return e.kind() == Kind::Sum ? sum(std::move(args)) : product(std::move(args));
        }
        }
        return e;
    }

private:
    Steps* trace_;

    void note(std::string s) {
        if (trace_) trace_->push_back(std::move(s));
    }

    // Split normalized operands into finite values and infinite terms (flattening maxima).
    static void split(const std::vector<E>& args, std::vector<Int>& finite, std::vector<E>& infinite) {
        for (const E& a : args) {
            if (fin(a))
                finite.push_back(a.value());
            else if (a.kind() == Kind::Sum)
                infinite.insert(infinite.end(), a.args().begin(), a.args().end());
            else
                infinite.push_back(a);
        }
    }

    E sum(std::vector<E> args) {
        std::vector<Int> f;
        std::vector<E> inf;
        split(args, f, inf);
        Int total = 0;
        for (const Int& v : f) total += v;
        if (inf.empty()) {
            E r = E::finite(total);
            if (args.size() > 1) note("finite-arithmetic: " + str(E::sum(args)) + " = " + str(r));
            return r;
        }
        return max_of(std::move(inf), args);
    }

    E product(std::vector<E> args) {
        std::vector<Int> f;
        std::vector<E> inf;
        split(args, f, inf);
        Int prod = 1;
        for (const Int& v : f) prod *= v;
        if (prod == 0) {
            if (args.size() > 1) note("zero-product: " + str(E::product(args)) + " = 0");
            return E::finite(0);
        }
        if (inf.empty()) {
            E r = E::finite(prod);
            if (args.size() > 1) note("finite-arithmetic: " + str(E::product(args)) + " = " + str(r));
            return r;
        }
        return max_of(std::move(inf), args, true);
    }

    // kappa + mu = kappa * mu = max(kappa, mu) once one side is infinite.
    E max_of(std::vector<E> terms, const std::vector<E>& source, bool product = false) {
        std::sort(terms.begin(), terms.end(), [](const E& x, const E& y) { return syntactic_compare(x, y) < 0; });
        terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
        std::vector<E> kept;
        for (const E& t : terms) {
            bool dominated = false;
            for (const E& u : terms) {
                if (u == t) continue;
                Steps s;
                if (!le(t, u, s)) continue;
                Steps back;
                if (le(u, t, back) && syntactic_compare(t, u) < 0) continue;
                dominated = true;
                break;
            }
            if (!dominated) kept.push_back(t);
        }
        if (kept.empty()) kept.push_back(terms.front());
        E r = E::sum(kept);
        if (source.size() > 1) {
            E orig = product ? E::product(source) : E::sum(source);
            if (orig != r) note("infinite-idempotence: " + str(orig) + " = " + str(r));
        }
        return r;
    }

    E power(const E& b, const E& e) {
        const E orig = E::power(b, e);
        if (fin(e)) {
            if (e.value() == 0) {
                note("zero-exponent: " + str(orig) + " = 1");
                return E::finite(1);
            }
            if (fin(b)) {
                if (b.value() > 1 && Int(mpz_sizeinbase(b.value().get_mpz_t(), 2)) * e.value() > finite_power_cap_bits)
                    throw DomainError("finite power too large: " + str(orig));
                E r = E::finite(b.value() <= 1 ? b.value() : pptor::power(b.value(), e.value().get_ui()));
                note("finite-arithmetic: " + str(orig) + " = " + str(r));
                return r;
            }
            note("finite-exponent: " + str(orig) + " = " + str(b));
            return b;
        }
        if (fin(b)) {
            if (b.value() <= 1) {
                note("trivial-base: " + str(orig) + " = " + str(b));
                return b;
            }
            if (b.value() > 2) {
                note("squeeze: 2 <= " + str(b) + " <= 2^" + str(e) + ", so " + str(orig) + " = 2^" + str(e));
                return power(two(), e);
            }
        }
        if (e.kind() == Kind::Sum) {
            std::vector<E> parts;
            for (const E& x : e.args()) parts.push_back(power(b, x));
            note("max-distribution: " + str(orig) + " = max over exponents");
            return sum(std::move(parts));
        }
        if (b.kind() == Kind::Sum) {
            std::vector<E> parts;
            for (const E& x : b.args()) parts.push_back(power(x, e));
            note("max-distribution: " + str(orig) + " = max over bases");
            return sum(std::move(parts));
        }
        if (b.kind() == Kind::Power) {
            E x = product({b.exponent(), e});
            note("exponent-absorption: " + str(orig) + " = " + str(b.base()) + "^" + str(x));
            return power(b.base(), x);
        }
        if (b == two()) return orig;
        if (b.kind() == Kind::Aleph && !b.index().omega && b.index().n > 0) {
            E prev = E::aleph(CardIndex::finite(b.index().n - 1));
            note("Hausdorff: " + str(orig) + " = " + str(prev) + "^" + str(e) + " * " + str(b));
            return sum({power(prev, e), b});
        }
        Steps s;
        if (le(b, E::power(two(), e), s)) {
            note("squeeze: 2 <= " + str(b) + " <= 2^" + str(e) + ", so " + str(orig) + " = 2^" + str(e));
            return E::power(two(), e);
        }
        return orig;
    }
};

std::string rule_of(const std::string& step) { return step.substr(0, step.find(':')); }

}  // namespace

CardinalExpr normalize(const CardinalExpr& e, std::vector<std::string>* trace) { return Normalizer(trace).run(e); }

bool is_finite(const CardinalExpr& e) { return normalize(e).kind() == Kind::Finite; }

Verdict compare(const CardinalExpr& a, const CardinalExpr& b, Relation r) {
    Verdict v;
    Steps na, nb;
    const E x = normalize(a, &na);
    const E y = normalize(b, &nb);
    v.trace = na;
    v.trace.insert(v.trace.end(), nb.begin(), nb.end());
    auto decide = [&](TriBool t, const Steps& s) {
        v.value = t;
        v.trace.insert(v.trace.end(), s.begin(), s.end());
        v.rule = s.empty() ? "reflexivity" : rule_of(s.back());
    };
    Steps s;
    switch (r) {
    case Relation::Less:
        if (lt(x, y, s)) decide(TriBool::True, s);
        else if (s.clear(), le(y, x, s)) decide(TriBool::False, s);
        break;
    case Relation::LessEqual:
        if (le(x, y, s)) decide(TriBool::True, s);
        else if (s.clear(), lt(y, x, s)) decide(TriBool::False, s);
        break;
    case Relation::Equal: {
        if (x == y) {
            Steps all = na;
            all.insert(all.end(), nb.begin(), nb.end());
            v.value = TriBool::True;
            v.rule = all.empty() ? "reflexivity" : rule_of(all.back());
            v.trace.push_back("normal-form: both sides normalize to " + str(x));
            break;
        }
        if (lt(x, y, s) || (s.clear(), lt(y, x, s))) {
            decide(TriBool::False, s);
            break;
        }
        s.clear();
        Steps t;
        if (le(x, y, s) && le(y, x, t)) {
            s.insert(s.end(), t.begin(), t.end());
            decide(TriBool::True, s);
            break;
        }
        // cf(kappa^mu) > mu, so kappa^mu differs from every cardinal of cofinality <= mu.
        for (auto [p, q] : {std::pair{&x, &y}, std::pair{&y, &x}}) {
            s.clear();
            auto k = cf_exact(*p);
            if (k && q->kind() == Kind::Power && le(*k, q->exponent(), s)) {
                s.push_back("König: cf(" + str(*q) + ") > " + str(q->exponent()) + " >= cf(" + str(*p) +
                            ") = " + str(*k) + ", so they differ");
                decide(TriBool::False, s);
                break;
            }
        }
        break;
    }
    }
    if (v.value == TriBool::Unknown) {
        const E c = E::power(two(), aleph0());
        const E a1 = E::aleph(CardIndex::finite(1));
        if ((x == c && y == a1) || (x == a1 && y == c))
            v.trace.push_back("undecided: 2^aleph0 versus aleph1 is the continuum hypothesis, independent of ZFC");
        else
            v.trace.push_back("undecided: no rule relates " + str(x) + " and " + str(y));
    }
    return v;
}

Verdict stability_predicate(const CardinalExpr& lambda) {
    const E l = normalize(lambda);
    if (fin(l)) throw DomainError("stability predicate needs an infinite cardinal, got " + str(l));
    Verdict v = compare(E::power(lambda, aleph0()), lambda, Relation::Equal);
    v.trace.insert(v.trace.begin(), "question: " + str(E::power(l, aleph0())) + " = " + str(l));
    return v;
}

std::optional<CardinalExpr> cofinality(const CardinalExpr& e) {
    const E n = normalize(e);
    if (fin(n)) return E::finite(n.value() == 0 ? 0 : 1);
    return cf_exact(n);
}

}  // namespace pptor
