#include "pptor/group_dsl.hpp"

#include "pptor/error.hpp"

#include <cctype>

namespace pptor {

namespace {

constexpr std::size_t max_summands = 4096;

class Reader {
public:
    explicit Reader(std::string_view s) : s_(s) {}

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_end() {
        skip();
        return pos_ == s_.size();
    }
    [[noreturn]] void fail(const std::string& msg) {
        skip();
        std::string token = pos_ < s_.size() ? std::string(1, s_[pos_]) : "<end of input>";
        throw ParseError(msg, 1, pos_ + 1, token);
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    Int integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) {
            if (neg) --pos_;
            fail("expected an integer");
        }
        Int v(std::string(s_.substr(start, pos_ - start)));
        return neg ? Int(-v) : v;
    }
    bool peek_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

void group_sum(Reader& r, std::vector<Int>& out);

void group_atom(Reader& r, std::vector<Int>& out) {
    if (r.eat('(')) {
        group_sum(r, out);
        r.expect(')');
    } else if (r.eat('Z')) {
        Int m = 0;
        if (r.eat('/')) {
            m = r.integer();
            if (m < 1) r.fail("modulus must be positive");
        }
        if (m != 1) out.push_back(m);
    } else if (r.peek_digit()) {
        if (r.integer() != 0) r.fail("only 0 may stand for a group");
    } else {
        r.fail("expected 'Z', '0' or '('");
    }
}

void group_power(Reader& r, std::vector<Int>& out) {
    std::vector<Int> base;
    group_atom(r, base);
    if (!r.eat('^')) {
        out.insert(out.end(), base.begin(), base.end());
        return;
    }
    Int k = r.integer();
    if (k < 0 || (!base.empty() && k * static_cast<unsigned long>(base.size()) + out.size() > max_summands))
        r.fail("bad exponent");
    for (unsigned long i = 0; i < k.get_ui(); ++i) out.insert(out.end(), base.begin(), base.end());
}

void group_sum(Reader& r, std::vector<Int>& out) {
    group_power(r, out);
    while (r.eat('+')) group_power(r, out);
    if (out.size() > max_summands) r.fail("too many summands");
}

std::vector<Int> tuple(Reader& r) {
    std::vector<Int> v;
    r.expect('(');
    if (r.eat(')')) return v;
    do v.push_back(r.integer());
    while (r.eat(','));
    r.expect(')');
    return v;
}

Element to_element(const std::vector<Int>& coords, const ParsedGroup& g) {
    if (coords.size() != g.moduli.size())
        throw MembershipError("element has " + std::to_string(coords.size()) + " coordinates, the group has " +
                              std::to_string(g.moduli.size()) + " summands");
    return g.presentation.to_canonical(coords);
}

}  // namespace

ParsedGroup parse_group(std::string_view text) {
    Reader r(text);
    std::vector<Int> moduli;
    group_sum(r, moduli);
    if (!r.at_end()) r.fail("unexpected input after group");
    PresentedGroup p = present_cyclic_sum(moduli);
    return ParsedGroup{std::move(moduli), std::move(p)};
}

Element parse_element(std::string_view text, const ParsedGroup& g) {
    Reader r(text);
    std::vector<Int> v = tuple(r);
    if (!r.at_end()) r.fail("unexpected input after element");
    return to_element(v, g);
}

Subgroup parse_subgroup(std::string_view text, const ParsedGroup& g) {
    Reader r(text);
    std::vector<Element> gens;
    if (r.peek_digit()) {
        if (r.integer() != 0) r.fail("only 0 may stand for a subgroup");
    } else {
        r.expect('<');
        if (!r.eat('>')) {
            do gens.push_back(to_element(tuple(r), g));
            while (r.eat(','));
            r.expect('>');
        }
    }
    if (!r.at_end()) r.fail("unexpected input after subgroup");
    return Subgroup(g.group(), gens);
}

std::string format_element(const Element& a, const ParsedGroup& g) {
    IntVector v = g.presentation.from_canonical(a);
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int x = v[i];
        if (g.moduli[i] != 0) {
            x %= g.moduli[i];
            if (x < 0) x += g.moduli[i];
        }
        out += (i ? "," : "") + x.get_str();
    }
    return out + ")";
}

std::string format_subgroup(const Subgroup& h, const ParsedGroup& g) {
    std::string out = "<";
    bool first = true;
    for (const auto& e : h.generators()) {
        out += (first ? "" : ",") + format_element(e, g);
        first = false;
    }
    return out + ">";
}

std::string format_tuple(const Element& a, const ParsedGroup& g, std::size_t n) {
    if (n == 1) return format_element(a, g);
    std::string out = "(";
    std::size_t i = 0;
    for (const auto& c : split_tuple(g.group(), n, a)) out += (i++ ? "," : "") + format_element(c, g);
    return out + ")";
}

}  // namespace pptor
