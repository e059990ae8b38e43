#include "exgraph/seed.hpp"

#include <nlohmann/json.hpp>

#include <numeric>

namespace exg {

std::vector<long long> find_symmetrizer(
    const std::vector<std::vector<long long>>& b) {
    const std::size_t n = b.size();
    if (n == 0) throw NotSkewSymmetrizable("empty matrix");
    for (const auto& row : b)
        if (row.size() != n) throw NotSkewSymmetrizable("matrix not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i][i] != 0) throw NotSkewSymmetrizable("nonzero diagonal entry");
        for (std::size_t j = 0; j < n; ++j) {
            if ((b[i][j] == 0) != (b[j][i] == 0))
                throw NotSkewSymmetrizable("zero pattern not symmetric");
            if (b[i][j] != 0 && (b[i][j] > 0) == (b[j][i] > 0))
                throw NotSkewSymmetrizable("sign pattern violated");
        }
    }

    // Propagate s_i / s_j = -b_ji / b_ij along the nonzero pattern, carrying
    // exact rationals num/den per component, then scale to smallest integers.
    std::vector<long long> num(n, 0), den(n, 0);
    std::vector<long long> result(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (num[start] != 0) continue;
        num[start] = den[start] = 1;
        stack.push_back(start);
        std::vector<std::size_t> component{start};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (b[i][j] == 0) continue;
                // s_i b_ij = -s_j b_ji  =>  s_j = s_i * b_ij / (-b_ji)
                long long pn = num[i] * b[i][j];
                long long pd = den[i] * -b[j][i];
                if (pd < 0) {
                    pn = -pn;
                    pd = -pd;
                }
                long long g = std::gcd(std::abs(pn), pd);
                if (g > 1) {
                    pn /= g;
                    pd /= g;
                }
                if (num[j] == 0) {
                    num[j] = pn;
                    den[j] = pd;
                    stack.push_back(j);
                    component.push_back(j);
                } else if (num[j] * pd != pn * den[j]) {
                    throw NotSkewSymmetrizable("inconsistent symmetrizer ratios");
                }
            }
        }
        long long l = 1;
        for (std::size_t i : component) l = std::lcm(l, den[i]);
        for (std::size_t i : component) result[i] = num[i] * (l / den[i]);
        long long g = 0;
        for (std::size_t i : component) g = std::gcd(g, result[i]);
        for (std::size_t i : component) result[i] /= g;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (result[i] <= 0)
            throw NotSkewSymmetrizable("symmetrizer not positive");
        for (std::size_t j = 0; j < n; ++j)
            if (result[i] * b[i][j] != -result[j] * b[j][i])
                throw NotSkewSymmetrizable("not skew-symmetrizable");
    }
    return result;
}

ExchangeMatrix::ExchangeMatrix(std::vector<std::vector<long long>> entries) {
    symmetrizer_ = find_symmetrizer(entries);
    n_ = entries.size();
    if (n_ > kMaxRank) throw NotSkewSymmetrizable("rank above limit");
    b_.reserve(n_ * n_);
    for (const auto& row : entries)
        b_.insert(b_.end(), row.begin(), row.end());
}

std::vector<std::vector<long long>> ExchangeMatrix::rows() const {
    std::vector<std::vector<long long>> r(n_, std::vector<long long>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r[i][j] = at(i, j);
    return r;
}

ExchangeMatrix ExchangeMatrix::mutated(std::size_t k) const {
    if (k >= n_) throw IndexOutOfRange("ExchangeMatrix: direction out of range");
    ExchangeMatrix r;
    r.n_ = n_;
    r.symmetrizer_ = symmetrizer_;
    r.b_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            long long v;
            if (i == k || j == k)
                v = -at(i, j);
            else
                v = at(i, j) + positive_part(at(i, k)) * at(k, j) +
                    at(i, k) * positive_part(-at(k, j));
            r.b_[i * n_ + j] = v;
        }
    }
    // The symmetrizer is mutation-invariant; keep it asserted.
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (symmetrizer_[i] * r.at(i, j) != -symmetrizer_[j] * r.at(j, i))
                throw NotSkewSymmetrizable("mutation broke the symmetrizer");
    return r;
}

ExchangeMatrix ExchangeMatrix::negated() const {
    ExchangeMatrix r = *this;
    for (auto& v : r.b_) v = -v;
    return r;
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) c.at(i, i) = 1;
    return c;
}

std::vector<long long> CMatrix::column(std::size_t j) const {
    std::vector<long long> c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<std::vector<long long>> CMatrix::rows() const {
    std::vector<std::vector<long long>> r(n_, std::vector<long long>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r[i][j] = at(i, j);
    return r;
}

bool CMatrix::column_sign_coherent(std::size_t j) const {
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < n_; ++i) {
        if (at(i, j) > 0) pos = true;
        if (at(i, j) < 0) neg = true;
    }
    return !(pos && neg);
}

bool CMatrix::column_nonzero(std::size_t j) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (at(i, j) != 0) return true;
    return false;
}

Int CMatrix::determinant() const {
    // Fraction-free Gaussian elimination (Bareiss).
    std::vector<Int> m(n_ * n_);
    for (std::size_t i = 0; i < n_ * n_; ++i) m[i] = a_[i];
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        if (m[k * n_ + k] == 0) {
            std::size_t p = k + 1;
            while (p < n_ && m[p * n_ + k] == 0) ++p;
            if (p == n_) return 0;
            for (std::size_t j = 0; j < n_; ++j)
                std::swap(m[k * n_ + j], m[p * n_ + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n_; ++i)
            for (std::size_t j = k + 1; j < n_; ++j)
                m[i * n_ + j] = (m[i * n_ + j] * m[k * n_ + k] -
                                 m[i * n_ + k] * m[k * n_ + j]) /
                                prev;
        prev = m[k * n_ + k];
    }
    return sign * m[(n_ - 1) * n_ + (n_ - 1)];
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (n_ != o.n_) throw RankMismatch("CMatrix: rank mismatch");
    CMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            long long v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

CMatrix CMatrix::mutated(std::size_t k, const ExchangeMatrix& b_pre) const {
    if (k >= n_) throw IndexOutOfRange("CMatrix: direction out of range");
    if (b_pre.rank() != n_) throw RankMismatch("CMatrix: matrix rank mismatch");
    CMatrix r(n_);
    std::vector<long long> ck = column(k);
    for (std::size_t j = 0; j < n_; ++j) {
        if (j == k) {
            for (std::size_t i = 0; i < n_; ++i) r.at(i, k) = -ck[i];
        } else {
            long long bkj = b_pre.at(k, j);
            for (std::size_t i = 0; i < n_; ++i)
                r.at(i, j) = at(i, j) + positive_part(bkj) * ck[i] +
                             bkj * positive_part(-ck[i]);
        }
    }
    return r;
}

int epsilon(const CMatrix& c, std::size_t k) {
    if (k >= c.rank()) throw IndexOutOfRange("epsilon: index out of range");
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < c.rank(); ++i) {
        if (c.at(i, k) > 0) pos = true;
        if (c.at(i, k) < 0) neg = true;
    }
    if (pos && neg) throw SignCoherenceViolated("mixed-sign c-vector column");
    if (!pos && !neg) throw SignCoherenceViolated("zero c-vector column");
    return pos ? 1 : -1;
}

LabeledSeed LabeledSeed::initial(const ExchangeMatrix& b) {
    const std::size_t n = b.rank();
    std::vector<LaurentPoly> vars;
    vars.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        vars.push_back(LaurentPoly::variable(n, i));
    return LabeledSeed(std::move(vars), b, CMatrix::identity(n), {});
}

LabeledSeed LabeledSeed::mutated(std::size_t k) const {
    const std::size_t n = rank();
    if (k >= n) throw IndexOutOfRange("LabeledSeed: direction out of range");

    LaurentPoly pos = LaurentPoly::constant(n, 1);
    LaurentPoly neg = LaurentPoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        long long bik = matrix_.at(i, k);
        if (bik > 0)
            pos = pos * variables_[i].pow(static_cast<unsigned>(bik));
        else if (bik < 0)
            neg = neg * variables_[i].pow(static_cast<unsigned>(-bik));
    }
    std::vector<LaurentPoly> vars = variables_;
    vars[k] = (pos + neg).exact_div(variables_[k]);

    std::vector<int> path = path_;
    if (!path.empty() && path.back() == static_cast<int>(k))
        path.pop_back();
    else
        path.push_back(static_cast<int>(k));

    return LabeledSeed(std::move(vars), matrix_.mutated(k),
                       cmatrix_.mutated(k, matrix_), std::move(path));
}

LabeledSeed LabeledSeed::rerooted() const {
    return LabeledSeed(variables_, matrix_, CMatrix::identity(rank()), {});
}

LabeledSeed replay(LabeledSeed seed, std::span<const int> path) {
    for (int k : path) seed = seed.mutated(static_cast<std::size_t>(k));
    return seed;
}

CMatrix cmatrix_along(ExchangeMatrix b, std::span<const int> path) {
    CMatrix c = CMatrix::identity(b.rank());
    for (int k : path) {
        auto ku = static_cast<std::size_t>(k);
        c = c.mutated(ku, b);
        b = b.mutated(ku);
    }
    return c;
}

std::vector<int> reduce_path(std::span<const int> path) {
    std::vector<int> r;
    for (int k : path) {
        if (!r.empty() && r.back() == k)
            r.pop_back();
        else
            r.push_back(k);
    }
    return r;
}

std::vector<int> reversed_path(std::span<const int> path) {
    return std::vector<int>(path.rbegin(), path.rend());
}

CMatrix transition_cmatrix(const ExchangeMatrix& b_s, std::size_t k,
                           std::span<const int> target_path) {
    const std::size_t n = b_s.rank();
    if (k >= n) throw IndexOutOfRange("transition_cmatrix: edge label out of range");
    std::vector<int> to_t = reduce_path(target_path);

    // B_t, then C_s^{-B_t;t}: rerun the recurrence from t with -B_t along the
    // reversed path back to s.
    ExchangeMatrix b_t = b_s;
    for (int d : to_t) b_t = b_t.mutated(static_cast<std::size_t>(d));
    CMatrix c_s_from_t = cmatrix_along(b_t.negated(), reversed_path(to_t));
    int eps = epsilon(c_s_from_t, k);

    // J_k + [-eps * B_s]_+^{k.}
    CMatrix factor = CMatrix::identity(n);
    factor.at(k, k) = -1;
    for (std::size_t j = 0; j < n; ++j)
        factor.at(k, j) += positive_part(-eps * b_s.at(k, j));

    return factor * cmatrix_along(b_s, to_t);
}

std::string seed_to_json(const LabeledSeed& seed) {
    nlohmann::json j;
    j["B"] = seed.matrix().rows();
    j["symmetrizer"] = seed.matrix().symmetrizer();
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : seed.variables()) vars.push_back(v.to_string());
    j["variables"] = vars;
    j["C"] = seed.cmatrix().rows();
    nlohmann::json path = nlohmann::json::array();
    for (int k : seed.path()) path.push_back(k + 1);
    j["path"] = path;
    return j.dump(2);
}

}  // namespace exg
