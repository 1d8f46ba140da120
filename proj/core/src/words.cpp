#include "jumploci/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace jumploci {

GroupWord GroupWord::from_letters(std::vector<Letter> letters) {
    GroupWord w;
    for (const Letter& l : letters) {
        if (l.exp != 1 && l.exp != -1) throw input_error("letter exponent must be +-1");
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
            w.letters_.back().exp == -l.exp) {
            w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
    for (Letter& l : rev) l.exp = -l.exp;
    GroupWord w;
    w.letters_ = std::move(rev); // reversal of a reduced word is reduced
    return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
    return from_letters(std::move(cat));
}

GroupWord GroupWord::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    GroupWord acc;
    for (long long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::vector<long long> GroupWord::exponent_sums(int n) const {
    std::vector<long long> eps(static_cast<std::size_t>(n), 0);
    for (const Letter& l : letters_) {
        if (l.gen < 0 || l.gen >= n) throw input_error("generator index out of range");
        eps[static_cast<std::size_t>(l.gen)] += l.exp;
    }
    return eps;
}

std::string GroupWord::str(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < letters_.size()) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j].gen == letters_[i].gen &&
               letters_[j].exp == letters_[i].exp)
            ++j;
        long long run = static_cast<long long>(j - i) * letters_[i].exp;
        if (!out.empty()) out += "*";
        out += names.at(static_cast<std::size_t>(letters_[i].gen));
        if (run != 1) out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class WordParser {
public:
    WordParser(std::string_view text, const std::vector<std::string>& gens)
        : s_(text), gens_(gens) {}

    GroupWord parse() {
        GroupWord w = parse_word_seq();
        skip_separators();
        if (pos_ != s_.size())
            throw input_error("unexpected '" + std::string(1, s_[pos_]) + "' in word");
        return w;
    }

private:
    // whitespace and '*' separate tokens and carry no meaning
    void skip_separators() {
        while (pos_ < s_.size() &&
               (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*'))
            ++pos_;
    }

    GroupWord parse_word_seq() {
        GroupWord acc;
        skip_separators();
        while (pos_ < s_.size() &&
               (is_ident_start(s_[pos_]) || s_[pos_] == '(' || s_[pos_] == '1')) {
            acc = acc * parse_factor();
            skip_separators();
        }
        return acc;
    }

    GroupWord parse_factor() {
        GroupWord atom = parse_atom();
        skip_separators();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_separators();
            atom = atom.pow(parse_integer());
        }
        return atom;
    }

    GroupWord parse_atom() {
        skip_separators();
        if (pos_ >= s_.size()) throw input_error("unexpected end of word");
        if (s_[pos_] == '1') { // the identity
            ++pos_;
            return GroupWord();
        }
        if (s_[pos_] == '(') {
            ++pos_;
            GroupWord u = parse_word_seq();
            skip_separators();
            if (pos_ >= s_.size() || s_[pos_] != ',')
                throw input_error("expected ',' in commutator");
            ++pos_;
            GroupWord v = parse_word_seq();
            skip_separators();
            if (pos_ >= s_.size() || s_[pos_] != ')')
                throw input_error("expected ')' closing commutator");
            ++pos_;
            return u * v * u.inverse() * v.inverse();
        }
        if (!is_ident_start(s_[pos_])) throw input_error("expected generator or '('");
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        auto it = std::find(gens_.begin(), gens_.end(), name);
        if (it == gens_.end()) throw input_error("unknown generator '" + name + "'");
        GroupWord w = GroupWord::from_letters({{static_cast<int>(it - gens_.begin()), 1}});
        return w;
    }

    long long parse_integer() {
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        // Normalize a U+2212 minus if present.
        if (pos_ + 2 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xE2 &&
            static_cast<unsigned char>(s_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(s_[pos_ + 2]) == 0x92) {
            neg = true;
            pos_ += 3;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw input_error("missing integer exponent after '^'");
        long long v = std::strtoll(s_.c_str() + start, nullptr, 10);
        if (v > 1000000) throw resource_error("word exponent too large");
        return neg ? -v : v;
    }

    std::string s_;
    std::size_t pos_ = 0;
    const std::vector<std::string>& gens_;
};

} // namespace

GroupWord parse_word(std::string_view text, const std::vector<std::string>& generators) {
    return WordParser(text, generators).parse();
}

Presentation Presentation::make(std::vector<std::string> generators,
                                const std::vector<std::string>& relator_words) {
    Presentation p;
    p.generators = std::move(generators);
    for (const std::string& w : relator_words) p.relators.push_back(parse_word(w, p.generators));
    p.validate();
    return p;
}

void Presentation::validate() const {
    std::set<std::string> seen;
    for (const std::string& g : generators) {
        if (g.empty() || !is_ident_start(g[0]))
            throw input_error("generator name '" + g + "' is not an identifier");
        for (char c : g)
            if (!is_ident_char(c))
                throw input_error("generator name '" + g + "' is not an identifier");
        if (!seen.insert(g).second) throw input_error("duplicate generator name '" + g + "'");
    }
    for (const GroupWord& w : relators)
        for (const Letter& l : w.letters())
            if (l.gen < 0 || l.gen >= rank())
                throw input_error("relator references generator out of range");
}

MultiPoly fox_derivative_ab(const GroupWord& w, int var, int n) {
    if (var < 0 || var >= n) throw input_error("Fox derivative index out of range");
    MultiPoly d(n);
    Exponents prefix(static_cast<std::size_t>(n), 0); // abelianized prefix monomial
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || l.gen >= n) throw input_error("generator index out of range");
        if (l.gen == var) {
            if (l.exp == 1) {
                d.add_term(prefix, Scalar(1));
            } else {
                Exponents e(prefix);
                e[static_cast<std::size_t>(var)] -= 1;
                d.add_term(e, Scalar(-1));
            }
        }
        prefix[static_cast<std::size_t>(l.gen)] += l.exp;
    }
    return d;
}

bool MagnusQuad::eps_zero() const {
    return std::all_of(eps.begin(), eps.end(), [](long long v) { return v == 0; });
}

MagnusQuad magnus_degree2(const GroupWord& w, int n) {
    MagnusQuad m;
    m.eps.assign(static_cast<std::size_t>(n), 0);
    m.c = Matrix<Scalar>(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Scalar(0));
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || l.gen >= n) throw input_error("generator index out of range");
        std::size_t g = static_cast<std::size_t>(l.gen);
        // (1 + a + c) * (1 + b + d) truncated: c += d + a (x) b, with
        // b = +-e_g and d = E_gg for an inverse letter.
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
            if (m.eps[i] == 0) continue;
            Scalar add{Rational(m.eps[i])};
            m.c(i, g) += l.exp == 1 ? add : -add;
        }
        if (l.exp == -1) m.c(g, g) += Scalar(1);
        m.eps[g] += l.exp;
    }
    return m;
}

} // namespace jumploci
