#include "jumploci/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace jumploci {

namespace {

bool denominator_is_one(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

// Strip whitespace and normalize the U+2212 minus to '-'.
std::string preclean(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) continue;
        if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-'); // U+2212
            i += 2;
            continue;
        }
        out.push_back(static_cast<char>(c));
    }
    return out;
}

// Finds the radical marker ("√" or "sqrt") in a precleaned string; returns
// npos when absent, else sets len to the marker's byte length.
std::size_t find_radical(const std::string& s, std::size_t& len) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c == 0xE2 && i + 2 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x88 &&
            static_cast<unsigned char>(s[i + 2]) == 0x9A) {
            len = 3;
            return i;
        }
        if (s.compare(i, 4, "sqrt") == 0) {
            len = 4;
            return i;
        }
    }
    len = 0;
    return std::string::npos;
}

} // namespace

bool is_valid_extension(long long d) {
    if (d == 0 || d == 1) return false;
    long long m = d < 0 ? -d : d;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) return false;
    }
    return true;
}

long long merge_extension(long long a, long long b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw input_error("cannot mix quadratic extensions sqrt(" + std::to_string(a) + ") and sqrt(" +
                      std::to_string(b) + ") in one computation");
}

Scalar::Scalar(Rational a, Rational b, long long d) : rat_(std::move(a)), irr_(std::move(b)), ext_(d) {
    if (irr_ != 0 && !is_valid_extension(ext_))
        throw input_error("extension discriminant must be a squarefree integer != 0, 1; got " +
                          std::to_string(d));
    normalize();
}

void Scalar::normalize() {
    if (irr_ == 0) ext_ = 0;
}

bool Scalar::is_integral() const {
    return denominator_is_one(rat_) && denominator_is_one(irr_);
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.rat_ = -rat_;
    r.irr_ = -irr_;
    r.ext_ = ext_;
    r.normalize();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r;
    r.ext_ = merge_extension(ext_, o.ext_);
    r.rat_ = rat_ + o.rat_;
    r.irr_ = irr_ + o.irr_;
    r.normalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    r.ext_ = merge_extension(ext_, o.ext_);
    r.rat_ = rat_ * o.rat_ + irr_ * o.irr_ * Rational(r.ext_);
    r.irr_ = rat_ * o.irr_ + irr_ * o.rat_;
    r.normalize();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw input_error("division by zero");
    if (irr_ == 0) {
        Scalar r;
        r.rat_ = Rational(1) / rat_;
        return r;
    }
    // 1/(a+b√d) = (a-b√d)/(a²-b²d); the norm is nonzero since √d is irrational.
    Rational norm = rat_ * rat_ - irr_ * irr_ * Rational(ext_);
    Scalar r;
    r.ext_ = ext_;
    r.rat_ = rat_ / norm;
    r.irr_ = -irr_ / norm;
    r.normalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc(1);
    Scalar base = *this;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

int Scalar::compare_key(const Scalar& x, const Scalar& y) {
    if (x.rat_ != y.rat_) return x.rat_ < y.rat_ ? -1 : 1;
    if (x.irr_ != y.irr_) return x.irr_ < y.irr_ ? -1 : 1;
    if (x.ext_ != y.ext_) return x.ext_ < y.ext_ ? -1 : 1;
    return 0;
}

std::string rational_str(const Rational& r) {
    return r.str();
}

Rational parse_rational(std::string_view text) {
    std::string s = preclean(text);
    if (s.empty()) throw input_error("empty number");
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw input_error("malformed number '" + std::string(text) + "'");
    BigInt num(s.substr(start, pos - start));
    BigInt den(1);
    if (pos < s.size()) {
        if (s[pos] != '/') throw input_error("malformed number '" + std::string(text) + "'");
        ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart || pos != s.size())
            throw input_error("malformed number '" + std::string(text) + "'");
        den = BigInt(s.substr(dstart));
        if (den == 0) throw input_error("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

std::string Scalar::str() const {
    if (irr_ == 0) return rational_str(rat_);
    std::string out;
    if (rat_ != 0) out += rational_str(rat_);
    if (irr_ > 0 && rat_ != 0) out += "+";
    if (irr_ == -1) {
        out += "-";
    } else if (irr_ != 1) {
        out += rational_str(irr_);
    }
    out += "\xE2\x88\x9A"; // √
    out += std::to_string(ext_);
    return out;
}

Scalar Scalar::parse(std::string_view text) {
    std::string s = preclean(text);
    if (s.empty()) throw input_error("empty scalar");
    std::size_t marker_len = 0;
    std::size_t at = find_radical(s, marker_len);
    if (at == std::string::npos) return Scalar(parse_rational(s));

    // Radicand: digits, optionally parenthesized (the "sqrt(2)" form).
    std::string tail = s.substr(at + marker_len);
    if (!tail.empty() && tail.front() == '(') {
        if (tail.back() != ')') throw input_error("malformed radical in '" + std::string(text) + "'");
        tail = tail.substr(1, tail.size() - 2);
    }
    if (tail.empty()) throw input_error("missing radicand in '" + std::string(text) + "'");
    bool dneg = false;
    std::size_t dpos = 0;
    if (tail[0] == '-') {
        dneg = true;
        dpos = 1;
    }
    for (std::size_t i = dpos; i < tail.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tail[i])))
            throw input_error("malformed radicand in '" + std::string(text) + "'");
    long long d = std::strtoll(tail.c_str() + dpos, nullptr, 10);
    if (dneg) d = -d;

    // Prefix: "", "-", "b", "a+", "a-", "a+b", "a-b".
    std::string head = s.substr(0, at);
    Rational a(0), b(1);
    if (head == "-") {
        b = -1;
    } else if (!head.empty()) {
        // Scan one rational, then an optional sign and optional second rational.
        std::size_t pos = 0;
        auto scan_rational = [&](bool sign_allowed) -> Rational {
            std::size_t begin = pos;
            if (sign_allowed && pos < head.size() && (head[pos] == '+' || head[pos] == '-')) ++pos;
            while (pos < head.size() && std::isdigit(static_cast<unsigned char>(head[pos]))) ++pos;
            if (pos < head.size() && head[pos] == '/') {
                ++pos;
                while (pos < head.size() && std::isdigit(static_cast<unsigned char>(head[pos]))) ++pos;
            }
            return parse_rational(head.substr(begin, pos - begin));
        };
        Rational first = scan_rational(true);
        if (pos == head.size()) {
            b = first; // "b√d"
        } else {
            a = first;
            if (head[pos] != '+' && head[pos] != '-')
                throw input_error("malformed scalar '" + std::string(text) + "'");
            bool bneg = head[pos] == '-';
            ++pos;
            if (pos == head.size()) {
                b = bneg ? Rational(-1) : Rational(1);
            } else {
                b = scan_rational(false);
                if (pos != head.size()) throw input_error("malformed scalar '" + std::string(text) + "'");
                if (bneg) b = -b;
            }
        }
    }
    return Scalar(std::move(a), std::move(b), d);
}

} // namespace jumploci
