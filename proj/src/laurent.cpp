#include "exgraph/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace exg {

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    if (rank() != o.rank()) throw RankMismatch("ExponentVector: rank mismatch");
    ExponentVector r = *this;
    for (std::size_t i = 0; i < rank(); ++i) r.e_[i] += o.e_[i];
    return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    if (rank() != o.rank()) throw RankMismatch("ExponentVector: rank mismatch");
    ExponentVector r = *this;
    for (std::size_t i = 0; i < rank(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

long ExponentVector::total_degree() const {
    long d = 0;
    for (int x : e_) d += x;
    return d;
}

bool ExponentVector::grlex_less(const ExponentVector& o) const {
    long da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    return e_ < o.e_;
}

LaurentPoly LaurentPoly::constant(std::size_t rank, Int c) {
    LaurentPoly p(rank);
    if (c != 0) p.terms_.emplace(ExponentVector(rank), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t rank, std::size_t i) {
    LaurentPoly p(rank);
    ExponentVector e(rank);
    e[i] = 1;
    p.terms_.emplace(std::move(e), 1);
    return p;
}

LaurentPoly LaurentPoly::monomial(ExponentVector e, Int c) {
    LaurentPoly p(e.rank());
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

void LaurentPoly::add_term(const ExponentVector& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_rank(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_same_rank(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_rank(o);
    LaurentPoly r(rank_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r = constant(rank_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

namespace {

// Largest common Laurent monomial of p: entrywise minimum exponent.
ExponentVector common_monomial(const LaurentPoly& p) {
    ExponentVector m(p.rank());
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < p.rank(); ++i)
                m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly shift(const LaurentPoly& p, const ExponentVector& by) {
    LaurentPoly r(p.rank());
    for (const auto& [e, c] : p.terms()) r = r + LaurentPoly::monomial(e + by, c);
    return r;
}

using TermRef = std::pair<ExponentVector, Int>;

// Leading term under graded lex.
TermRef grlex_leading(const LaurentPoly& p) {
    auto it = p.terms().begin();
    TermRef best{it->first, it->second};
    for (++it; it != p.terms().end(); ++it)
        if (best.first.grlex_less(it->first)) best = {it->first, it->second};
    return best;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& den) const {
    check_same_rank(den);
    if (den.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly(rank_);

    // Pull out the common Laurent monomial of each operand, then run ordinary
    // multivariate long division with graded-lex leading terms.
    ExponentVector mn = common_monomial(*this);
    ExponentVector md = common_monomial(den);
    LaurentPoly num = shift(*this, ExponentVector(rank_) - mn);
    LaurentPoly div = shift(den, ExponentVector(rank_) - md);

    LaurentPoly quot(rank_);
    TermRef lead_d = grlex_leading(div);
    while (!num.is_zero()) {
        TermRef lead_n = grlex_leading(num);
        if (!divides(lead_d.first, lead_n.first) ||
            lead_n.second % lead_d.second != 0)
            throw DivisionNotExact("LaurentPoly: nonzero remainder");
        LaurentPoly t = monomial(lead_n.first - lead_d.first,
                                 lead_n.second / lead_d.second);
        quot = quot + t;
        num = num - t * div;
    }
    return shift(quot, mn - md);
}

int LaurentPoly::cmp(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_rank(b);
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first > ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = false;
        for (std::size_t i = 0; i < rank_; ++i)
            if (e[i] != 0) has_var = true;
        if (!has_var || mag != 1) os << mag;
        bool need_star = !has_var || mag != 1;
        for (std::size_t i = 0; i < rank_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << "x" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& s, std::size_t rank) {
    LaurentPoly p(rank);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    auto parse_int = [&]() -> long long {
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("LaurentPoly::parse: expected integer in '" + s + "'");
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    };

    skip_ws();
    if (s.substr(i) == "0") return p;
    bool neg = false;
    if (i < s.size() && s[i] == '-') {
        neg = true;
        ++i;
    }
    while (i < s.size()) {
        skip_ws();
        Int coeff = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = parse_int();
            if (i < s.size() && s[i] == '*') ++i;
        }
        ExponentVector e(rank);
        while (i < s.size() && s[i] == 'x') {
            ++i;
            long long idx = parse_int();
            if (idx < 1 || static_cast<std::size_t>(idx) > rank)
                throw std::invalid_argument("LaurentPoly::parse: variable index out of range");
            long long exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                exp = parse_int();
            }
            e[static_cast<std::size_t>(idx - 1)] += static_cast<int>(exp);
            if (i < s.size() && s[i] == '*') ++i;
        }
        if (neg) coeff = -coeff;
        p.add_term(e, coeff);
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] == '+') {
            neg = false;
        } else if (s[i] == '-') {
            neg = true;
        } else {
            throw std::invalid_argument("LaurentPoly::parse: unexpected character in '" + s + "'");
        }
        ++i;
    }
    return p;
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = rank_;
    std::hash<std::string> hs;
    for (const auto& [e, c] : terms_) {
        for (int x : e.entries())
            h = h * 1000003u + static_cast<std::size_t>(x + 0x7fff);
        h = h * 1000003u + hs(c.str());
    }
    return h;
}

}  // namespace exg
