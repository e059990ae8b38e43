#pragma once

#include "exgraph/laurent.hpp"

#include <span>
#include <string>
#include <vector>

namespace exg {

struct NotSkewSymmetrizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed C-matrix column had mixed signs. The sign-coherence theorem says
// this cannot happen, so it always indicates a bug upstream.
struct SignCoherenceViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

inline long long positive_part(long long b) { return b > 0 ? b : 0; }

/// Skew-symmetrizable n x n integer matrix with its symmetrizer diagonal.
class ExchangeMatrix {
public:
    /// Validates skew-symmetrizability and computes the smallest positive
    /// integer symmetrizer; throws NotSkewSymmetrizable.
    explicit ExchangeMatrix(std::vector<std::vector<long long>> entries);

    std::size_t rank() const { return n_; }
    long long at(std::size_t i, std::size_t j) const { return b_[i * n_ + j]; }
    const std::vector<long long>& symmetrizer() const { return symmetrizer_; }
    std::vector<std::vector<long long>> rows() const;

    /// Matrix mutation in direction k (0-based).
    ExchangeMatrix mutated(std::size_t k) const;
    ExchangeMatrix negated() const;

    bool operator==(const ExchangeMatrix& o) const {
        return n_ == o.n_ && b_ == o.b_;
    }

private:
    ExchangeMatrix() = default;
    std::size_t n_ = 0;
    std::vector<long long> b_;
    std::vector<long long> symmetrizer_;
};

/// Smallest positive integer diagonal S with s_i b_ij = -s_j b_ji, or throws
/// NotSkewSymmetrizable (nonzero diagonal, sign-pattern violation, or
/// inconsistent ratios).
std::vector<long long> find_symmetrizer(
    const std::vector<std::vector<long long>>& b);

/// Square integer matrix holding c-vectors as columns.
class CMatrix {
public:
    explicit CMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
    static CMatrix identity(std::size_t n);

    std::size_t rank() const { return n_; }
    long long at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    long long& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    std::vector<long long> column(std::size_t j) const;
    std::vector<std::vector<long long>> rows() const;

    bool column_sign_coherent(std::size_t j) const;
    bool column_nonzero(std::size_t j) const;
    Int determinant() const;

    CMatrix operator*(const CMatrix& o) const;
    bool operator==(const CMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    /// One step of the c-vector recurrence across an edge labeled k, reading
    /// the coefficients b_{kj} from the pre-mutation exchange matrix.
    CMatrix mutated(std::size_t k, const ExchangeMatrix& b_pre) const;

private:
    std::size_t n_;
    std::vector<long long> a_;
};

/// The sign of column k of a sign-coherent C-matrix (0-based k).
/// Throws SignCoherenceViolated on a mixed-sign or zero column.
int epsilon(const CMatrix& c, std::size_t k);

/// Labeled seed: cluster variables, exchange matrix, C-matrix relative to the
/// current root, and the reduced tree path from that root.
class LabeledSeed {
public:
    static LabeledSeed initial(const ExchangeMatrix& b);

    std::size_t rank() const { return matrix_.rank(); }
    const std::vector<LaurentPoly>& variables() const { return variables_; }
    const ExchangeMatrix& matrix() const { return matrix_; }
    const CMatrix& cmatrix() const { return cmatrix_; }
    const std::vector<int>& path() const { return path_; }

    /// Seed mutation in direction k (0-based): variables by the exchange
    /// relation, matrix and C-matrix by their respective rules, path kept
    /// reduced.
    LabeledSeed mutated(std::size_t k) const;

    /// Same seed re-rooted at its own vertex: C-matrix reset to the identity,
    /// path cleared.
    LabeledSeed rerooted() const;

    bool operator==(const LabeledSeed& o) const {
        return variables_ == o.variables_ && matrix_ == o.matrix_ &&
               cmatrix_ == o.cmatrix_ && path_ == o.path_;
    }

private:
    LabeledSeed(std::vector<LaurentPoly> v, ExchangeMatrix b, CMatrix c,
                std::vector<int> p)
        : variables_(std::move(v)),
          matrix_(std::move(b)),
          cmatrix_(std::move(c)),
          path_(std::move(p)) {}

    std::vector<LaurentPoly> variables_;
    ExchangeMatrix matrix_;
    CMatrix cmatrix_;
    std::vector<int> path_;
};

/// Applies a sequence of mutations (0-based directions).
LabeledSeed replay(LabeledSeed seed, std::span<const int> path);

/// C-matrix at the end of `path` relative to its start, without tracking
/// cluster variables.
CMatrix cmatrix_along(ExchangeMatrix b, std::span<const int> path);

/// Word reduction in the n-regular tree: cancel adjacent equal labels.
std::vector<int> reduce_path(std::span<const int> path);
std::vector<int> reversed_path(std::span<const int> path);

/// C-matrix transition across the root edge s --k-- s' (k 0-based):
/// computes C_t^{B_{s'};s'} from C_t^{B_s;s} by the one-row correction
/// (J_k + [-eps * B_s]_+^{k.}) C_t, where eps is the k-th column sign of
/// C_s^{-B_t;t}. `target_path` locates t from s.
CMatrix transition_cmatrix(const ExchangeMatrix& b_s, std::size_t k,
                           std::span<const int> target_path);

std::string seed_to_json(const LabeledSeed& seed);

}  // namespace exg
