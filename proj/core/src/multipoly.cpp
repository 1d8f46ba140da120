#include "jumploci/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace jumploci {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    long long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(int nvars, Scalar c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw input_error("variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(nvars, std::move(e), Scalar(1));
}

MultiPoly MultiPoly::monomial(int nvars, Exponents e, Scalar c) {
    if (static_cast<int>(e.size()) != nvars) throw input_error("exponent vector arity mismatch");
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
}

bool MultiPoly::has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
        for (int v : e)
            if (v < 0) return true;
    return false;
}

Scalar MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(e.size()) != nvars_) throw input_error("exponent vector arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_arity(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("polynomial arity mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    // The 0-ary zero polynomial acts as a neutral element of any arity.
    if (is_zero() && nvars_ == 0) return o;
    if (o.is_zero() && o.nvars_ == 0) return *this;
    check_arity(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if ((is_zero() && nvars_ == 0) || (o.is_zero() && o.nvars_ == 0))
        return MultiPoly(std::max(nvars_, o.nvars_));
    check_arity(o);
    MultiPoly r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (is_zero() && o.is_zero()) return true;
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Scalar MultiPoly::eval(std::span<const Scalar> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw input_error("evaluation point arity mismatch");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (point[i].is_zero() && e[i] < 0)
                throw input_error("evaluation at zero under a negative exponent");
            term *= point[i].pow(e[i]);
        }
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::unit_normalized() const {
    if (terms_.empty()) return *this;
    Exponents mins = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], e[i]);
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents shifted(e);
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= mins[i];
        r.terms_.emplace(std::move(shifted), c);
    }
    return r;
}

namespace {

// Single-divisor reduction; the remainder is zero iff f divides g. Both
// operands must be free of negative exponents.
bool reduce(const MultiPoly& g, const MultiPoly& f, MultiPoly* quotient) {
    const auto& flead = *f.terms().rbegin();
    MultiPoly q(g.nvars());
    MultiPoly r = g;
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        Exponents diff(rlead.first);
        bool ok = true;
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] -= flead.first[i];
            if (diff[i] < 0) ok = false;
        }
        if (!ok) return false;
        MultiPoly t = MultiPoly::monomial(g.nvars(), diff, rlead.second / flead.second);
        q += t;
        r -= t * f;
    }
    if (quotient) *quotient = q;
    return true;
}

} // namespace

MultiPoly MultiPoly::divided_by(const MultiPoly& f) const {
    if (f.is_zero()) throw input_error("division by the zero polynomial");
    if (is_zero()) return MultiPoly(nvars_);
    check_arity(f);

    Exponents shift(static_cast<std::size_t>(nvars_), 0);
    Exponents gmin = terms_.begin()->first, fmin = f.terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < gmin.size(); ++i) gmin[i] = std::min(gmin[i], e[i]);
    for (const auto& [e, c] : f.terms_)
        for (std::size_t i = 0; i < fmin.size(); ++i) fmin[i] = std::min(fmin[i], e[i]);
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = gmin[i] - fmin[i];

    MultiPoly q(nvars_);
    if (!reduce(unit_normalized(), f.unit_normalized(), &q))
        throw std::logic_error("inexact polynomial division");
    return q * MultiPoly::monomial(nvars_, shift, Scalar(1));
}

bool MultiPoly::divides(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero()) throw input_error("divisibility by the zero polynomial is undefined");
    if (g.is_zero()) return true;
    if (f.nvars() != g.nvars()) throw input_error("polynomial arity mismatch");
    return reduce(g.unit_normalized(), f.unit_normalized(), nullptr);
}

std::string MultiPoly::str(const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Scalar& c = it->second;
        bool neg = false;
        std::string mag;
        bool composite = c.rational_part() != 0 && c.radical_part() != 0;
        if (composite) {
            mag = "(" + c.str() + ")";
        } else {
            const Rational& lead = c.is_rational() ? c.rational_part() : c.radical_part();
            neg = lead < 0;
            mag = (neg ? (-c) : c).str();
        }
        std::string mono;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_prefix + std::to_string(i + 1);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        std::string term;
        if (mono.empty()) {
            term = mag;
        } else if (mag == "1") {
            term = mono;
        } else {
            term = mag + "*" + mono;
        }
        if (first) {
            out += neg ? "-" : "";
            out += term;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

namespace {

struct PolyToken {
    enum Kind { Number, Radical, Var, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    Rational number;   // Number
    long long radical; // Radical
    int var;           // Var (0-based)
    long long integer; // exponent payload after '^'
};

class PolyLexer {
public:
    PolyLexer(std::string_view text, int nvars) : nvars_(nvars) {
        // Normalize the U+2212 minus and drop whitespace up front.
        for (std::size_t i = 0; i < text.size(); ++i) {
            unsigned char c = static_cast<unsigned char>(text[i]);
            if (std::isspace(c)) continue;
            if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                static_cast<unsigned char>(text[i + 2]) == 0x92) {
                s_.push_back('-');
                i += 2;
                continue;
            }
            s_.push_back(static_cast<char>(c));
        }
    }

    PolyToken next() {
        if (pos_ >= s_.size()) return {PolyToken::End, 0, 0, 0, 0};
        unsigned char c = static_cast<unsigned char>(s_[pos_]);
        switch (c) {
        case '+': ++pos_; return {PolyToken::Plus, 0, 0, 0, 0};
        case '-': ++pos_; return {PolyToken::Minus, 0, 0, 0, 0};
        case '*': ++pos_; return {PolyToken::Star, 0, 0, 0, 0};
        case '^': ++pos_; return {PolyToken::Caret, 0, 0, 0, 0};
        case '(': ++pos_; return {PolyToken::LParen, 0, 0, 0, 0};
        case ')': ++pos_; return {PolyToken::RParen, 0, 0, 0, 0};
        default: break;
        }
        if (c == 0xE2 && pos_ + 2 < s_.size() && static_cast<unsigned char>(s_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(s_[pos_ + 2]) == 0x9A) {
            pos_ += 3;
            return radical_token();
        }
        if (std::isdigit(c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            // "p/q" literal: only when followed by digits (so t1^1/… cannot arise; '^' takes integers)
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            return {PolyToken::Number, parse_rational(s_.substr(start, pos_ - start)), 0, 0, 0};
        }
        if (std::isalpha(c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string word = s_.substr(start, pos_ - start);
            if (word == "sqrt") return radical_token();
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (dstart == pos_) {
                if (nvars_ == 1) return {PolyToken::Var, 0, 0, 0, 0};
                throw input_error("unindexed variable '" + word + "' in a polynomial with " +
                                  std::to_string(nvars_) + " variables");
            }
            long long idx = std::strtoll(s_.c_str() + dstart, nullptr, 10);
            if (idx < 1 || idx > nvars_)
                throw input_error("variable index " + std::to_string(idx) + " out of range 1.." +
                                  std::to_string(nvars_));
            return {PolyToken::Var, 0, 0, static_cast<int>(idx - 1), 0};
        }
        throw input_error(std::string("unexpected character '") + static_cast<char>(c) +
                          "' in polynomial");
    }

    long long integer_after_caret() {
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw input_error("missing integer exponent after '^'");
        long long v = std::strtoll(s_.c_str() + start, nullptr, 10);
        if (v > 1000000) throw resource_error("exponent too large");
        return neg ? -v : v;
    }

private:
    PolyToken radical_token() {
        bool paren = false;
        if (pos_ < s_.size() && s_[pos_] == '(') {
            paren = true;
            ++pos_;
        }
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw input_error("missing radicand");
        long long d = std::strtoll(s_.c_str() + start, nullptr, 10);
        if (paren) {
            if (pos_ >= s_.size() || s_[pos_] != ')') throw input_error("missing ')' after radicand");
            ++pos_;
        }
        return {PolyToken::Radical, 0, neg ? -d : d, 0, 0};
    }

    std::string s_;
    std::size_t pos_ = 0;
    int nvars_;
};

class PolyParser {
public:
    PolyParser(std::string_view text, int nvars) : lex_(text, nvars), nvars_(nvars) { advance(); }

    MultiPoly parse_expression() {
        bool neg = false;
        if (tok_.kind == PolyToken::Minus) {
            neg = true;
            advance();
        } else if (tok_.kind == PolyToken::Plus) {
            advance();
        }
        MultiPoly acc = parse_term();
        if (neg) acc = -acc;
        while (tok_.kind == PolyToken::Plus || tok_.kind == PolyToken::Minus) {
            bool minus = tok_.kind == PolyToken::Minus;
            advance();
            MultiPoly t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    void expect_end() const {
        if (tok_.kind != PolyToken::End) throw input_error("trailing input in polynomial");
    }

private:
    void advance() { tok_ = lex_.next(); }

    bool starts_factor() const {
        return tok_.kind == PolyToken::Number || tok_.kind == PolyToken::Radical ||
               tok_.kind == PolyToken::Var || tok_.kind == PolyToken::LParen;
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        while (true) {
            if (tok_.kind == PolyToken::Star) {
                advance();
                acc *= parse_factor();
            } else if (starts_factor()) {
                acc *= parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_primary();
        if (tok_.kind == PolyToken::Caret) {
            long long e = lex_.integer_after_caret();
            advance();
            base = power(base, e);
        }
        return base;
    }

    MultiPoly power(const MultiPoly& base, long long e) {
        if (e < 0) {
            // Only monomials are invertible in the Laurent ring.
            if (base.term_count() != 1)
                throw input_error("negative exponent applied to a non-monomial");
            const auto& [exps, coeff] = *base.terms().begin();
            Exponents inv(exps);
            for (auto& v : inv) v = -v;
            MultiPoly m = MultiPoly::monomial(nvars_, inv, coeff.inverse());
            return power(m, -e);
        }
        MultiPoly acc = MultiPoly::constant(nvars_, Scalar(1));
        for (long long i = 0; i < e; ++i) acc *= base;
        return acc;
    }

    MultiPoly parse_primary() {
        switch (tok_.kind) {
        case PolyToken::Number: {
            MultiPoly p = MultiPoly::constant(nvars_, Scalar(tok_.number));
            advance();
            return p;
        }
        case PolyToken::Radical: {
            MultiPoly p = MultiPoly::constant(nvars_, Scalar::sqrt_of(tok_.radical));
            advance();
            return p;
        }
        case PolyToken::Var: {
            MultiPoly p = MultiPoly::variable(nvars_, tok_.var);
            advance();
            return p;
        }
        case PolyToken::LParen: {
            advance();
            MultiPoly p = parse_expression();
            if (tok_.kind != PolyToken::RParen) throw input_error("missing ')'");
            advance();
            return p;
        }
        default:
            throw input_error("malformed polynomial");
        }
    }

    PolyLexer lex_;
    PolyToken tok_{};
    int nvars_;
};

} // namespace

MultiPoly MultiPoly::parse(std::string_view text, int nvars) {
    if (nvars < 0) throw input_error("negative variable count");
    PolyParser p(text, nvars);
    MultiPoly r = p.parse_expression();
    p.expect_end();
    return r;
}

} // namespace jumploci
