#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace exg {

using Int = boost::multiprecision::cpp_int;

// Rank is the number of initial variables x_1..x_n; everything is dense in it.
inline constexpr std::size_t kMaxRank = 32;

struct RankMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Division had a nonzero remainder. In a seed-mutation run this means the
// Laurent phenomenon was violated upstream, so callers must treat it as fatal.
struct DivisionNotExact : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exponent of each initial variable; fixed length = rank.
class ExponentVector {
public:
    explicit ExponentVector(std::size_t rank) : e_(rank, 0) {
        if (rank == 0 || rank > kMaxRank)
            throw std::invalid_argument("ExponentVector: rank out of range");
    }
    ExponentVector(std::initializer_list<int> e) : e_(e) {
        if (e_.empty() || e_.size() > kMaxRank)
            throw std::invalid_argument("ExponentVector: rank out of range");
    }
    explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) {
        if (e_.empty() || e_.size() > kMaxRank)
            throw std::invalid_argument("ExponentVector: rank out of range");
    }

    std::size_t rank() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    const std::vector<int>& entries() const { return e_; }

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector operator-(const ExponentVector& o) const;

    long total_degree() const;

    // Lexicographic order; this is the canonical term order.
    bool operator==(const ExponentVector& o) const { return e_ == o.e_; }
    bool operator<(const ExponentVector& o) const { return e_ < o.e_; }
    bool operator>(const ExponentVector& o) const { return o.e_ < e_; }

    // Graded lex: total degree first, then lex. Used to pick leading terms
    // during long division.
    bool grlex_less(const ExponentVector& o) const;

private:
    std::vector<int> e_;
};

/// Exact multivariate Laurent polynomial over arbitrary-precision integers.
/// Terms are kept in descending lex order on exponent vectors; zero
/// coefficients are never stored, so the representation is canonical and
/// equality is structural.
class LaurentPoly {
public:
    using TermMap = std::map<ExponentVector, Int, std::greater<ExponentVector>>;

    explicit LaurentPoly(std::size_t rank) : rank_(check_rank(rank)) {}

    static LaurentPoly constant(std::size_t rank, Int c);
    /// x_{i+1} (zero-based index i).
    static LaurentPoly variable(std::size_t rank, std::size_t i);
    static LaurentPoly monomial(ExponentVector e, Int c);

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly pow(unsigned e) const;

    /// Exact division in the Laurent ring; throws DivisionNotExact on a
    /// nonzero remainder and std::domain_error on a zero divisor.
    LaurentPoly exact_div(const LaurentPoly& den) const;

    bool operator==(const LaurentPoly& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }

    /// Deterministic total order: canonical term lists compared
    /// lexicographically, exponent vector first, then coefficient.
    /// Returns <0, 0, >0.
    static int cmp(const LaurentPoly& a, const LaurentPoly& b);

    /// Canonical text rendering, e.g. "x1^-1 + x1^-1*x2". Stable; used as the
    /// string key in JSON/DOT output.
    std::string to_string() const;

    /// Inverse of to_string (accepts exactly the canonical rendering).
    static LaurentPoly parse(const std::string& s, std::size_t rank);

    std::size_t hash() const;

private:
    static std::size_t check_rank(std::size_t rank) {
        if (rank == 0 || rank > kMaxRank)
            throw std::invalid_argument("LaurentPoly: rank out of range");
        return rank;
    }
    void check_same_rank(const LaurentPoly& o) const {
        if (rank_ != o.rank_)
            throw RankMismatch("LaurentPoly: operands have different rank");
    }
    void add_term(const ExponentVector& e, const Int& c);

    std::size_t rank_;
    TermMap terms_;
};

}  // namespace exg

template <>
struct std::hash<exg::LaurentPoly> {
    std::size_t operator()(const exg::LaurentPoly& p) const { return p.hash(); }
};
