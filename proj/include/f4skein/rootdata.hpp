#pragma once
/**
 * @file rootdata.hpp
 * @brief Root system of type F4 and quantum dimensions via the Weyl formula.
 */

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "qring.hpp"

namespace f4skein {

constexpr int kRank = 4;

/// Vector in simple-root coordinates.
using RootVec = std::array<long, kRank>;

inline RootVec operator+(RootVec a, const RootVec& b) {
    for (int i = 0; i < kRank; ++i)
        a[i] += b[i];
    return a;
}
inline RootVec operator-(RootVec a, const RootVec& b) {
    for (int i = 0; i < kRank; ++i)
        a[i] -= b[i];
    return a;
}
inline RootVec operator*(long k, RootVec a) {
    for (auto& x : a)
        x *= k;
    return a;
}

/// Weight given by its coordinates in the fundamental-weight basis.
struct Weight {
    std::array<long, kRank> fund{};

    static Weight zero() { return {}; }
    static Weight omega(int i, long mult = 1) {
        Weight w;
        w.fund[static_cast<std::size_t>(i - 1)] = mult;
        return w;
    }
    friend Weight operator+(Weight a, const Weight& b) {
        for (int i = 0; i < kRank; ++i)
            a.fund[i] += b.fund[i];
        return a;
    }
    friend bool operator==(const Weight&, const Weight&) = default;

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < kRank; ++i) {
            if (fund[i] == 0)
                continue;
            if (!out.empty())
                out += "+";
            if (fund[i] != 1)
                out += std::to_string(fund[i]);
            out += "w" + std::to_string(i + 1);
        }
        return out.empty() ? "0" : out;
    }
};

class RootDatum {
  public:
    RootDatum() {
        // a_ij = <alpha_i, alpha_j^vee>; alpha_1, alpha_2 long
        cartan_ = {{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}};
        half_norm_ = {2, 2, 1, 1};
        for (int i = 0; i < kRank; ++i)
            for (int j = 0; j < kRank; ++j)
                form_[i][j] = cartan_[i][j] * half_norm_[j];
        build_positive_roots();
        build_fundamental_weights();
        for (const auto& r : positive_)
            two_rho_ = two_rho_ + r;
    }

    const std::array<std::array<long, kRank>, kRank>& cartan() const { return cartan_; }
    /// Gram matrix of the simple roots.
    const std::array<std::array<long, kRank>, kRank>& form() const { return form_; }
    const std::vector<RootVec>& positive_roots() const { return positive_; }
    const RootVec& fundamental_weight(int i) const { return fundamental_[static_cast<std::size_t>(i - 1)]; }
    const RootVec& two_rho() const { return two_rho_; }

    long inner(const RootVec& a, const RootVec& b) const {
        long s = 0;
        for (int i = 0; i < kRank; ++i)
            for (int j = 0; j < kRank; ++j)
                s += a[i] * form_[i][j] * b[j];
        return s;
    }
    /// <v, alpha_i^vee> = 2 (v, alpha_i) / (alpha_i, alpha_i)
    long coroot_pairing(const RootVec& v, int i) const {
        long s = 0;
        for (int k = 0; k < kRank; ++k)
            s += v[k] * form_[k][i];
        return s / half_norm_[i];
    }

    RootVec to_root_coords(const Weight& w) const {
        RootVec r{};
        for (int i = 0; i < kRank; ++i)
            r = r + w.fund[i] * fundamental_[static_cast<std::size_t>(i)];
        return r;
    }

    bool is_dominant(const Weight& w) const {
        return std::all_of(w.fund.begin(), w.fund.end(), [](long c) { return c >= 0; });
    }

    /// Quantum dimension of the irreducible module of highest weight w.
    ScalarQ qdim(const Weight& w) const {
        if (!is_dominant(w))
            throw NotDominant("weight " + w.to_string() + " is not dominant");
        RootVec lam2 = 2L * to_root_coords(w) + two_rho_;
        LaurentPoly num(1), den(1);
        for (const auto& nu : positive_) {
            // (lambda+rho, nu) and (rho, nu) are integers
            long a = inner(lam2, nu) / 2;
            long b = inner(two_rho_, nu) / 2;
            num *= qint(static_cast<int>(a)).num();
            den *= qint(static_cast<int>(b)).num();
        }
        return ScalarQ(num, den);
    }

    std::size_t classical_dim(const Weight& w) const { return static_cast<std::size_t>(qdim(w).specialize(1).get_num().get_ui()); }

  private:
    void build_positive_roots() {
        std::set<RootVec> seen;
        std::vector<RootVec> layer;
        for (int i = 0; i < kRank; ++i) {
            RootVec e{};
            e[i] = 1;
            layer.push_back(e);
            seen.insert(e);
        }
        while (!layer.empty()) {
            positive_.insert(positive_.end(), layer.begin(), layer.end());
            std::vector<RootVec> next;
            for (const auto& beta : layer) {
                for (int i = 0; i < kRank; ++i) {
                    RootVec e{};
                    e[i] = 1;
                    // r = largest k with beta - k alpha_i a root
                    long r = 0;
                    while (seen.count(beta - (r + 1) * e))
                        ++r;
                    if (r - coroot_pairing(beta, i) > 0) {
                        RootVec up = beta + e;
                        if (seen.insert(up).second)
                            next.push_back(up);
                    }
                }
            }
            layer = std::move(next);
        }
    }

    void build_fundamental_weights() {
        // solve sum_k c_k <alpha_k, alpha_j^vee> = delta_ij, i.e. C^T c = e_i
        for (int i = 0; i < kRank; ++i) {
            std::array<std::array<mpq_class, kRank + 1>, kRank> m;
            for (int j = 0; j < kRank; ++j) {
                for (int k = 0; k < kRank; ++k)
                    m[j][k] = cartan_[k][j];
                m[j][kRank] = (i == j) ? 1 : 0;
            }
            for (int col = 0; col < kRank; ++col) {
                int piv = col;
                while (sgn(m[piv][col]) == 0)
                    ++piv;
                std::swap(m[piv], m[col]);
                for (int row = 0; row < kRank; ++row) {
                    if (row == col || sgn(m[row][col]) == 0)
                        continue;
                    mpq_class f = m[row][col] / m[col][col];
                    for (int k = col; k <= kRank; ++k)
                        m[row][k] -= f * m[col][k];
                }
            }
            RootVec w{};
            for (int k = 0; k < kRank; ++k) {
                mpq_class v = m[k][kRank] / m[k][k];
                if (v.get_den() != 1)
                    throw ValidationFailed("fundamental weight outside the root lattice");
                w[k] = v.get_num().get_si();
            }
            fundamental_[static_cast<std::size_t>(i)] = w;
        }
    }

    std::array<std::array<long, kRank>, kRank> cartan_{};
    std::array<long, kRank> half_norm_{};
    std::array<std::array<long, kRank>, kRank> form_{};
    std::vector<RootVec> positive_;
    std::array<RootVec, kRank> fundamental_{};
    RootVec two_rho_{};
};

inline const RootDatum& f4_root_datum() {
    static const RootDatum rd;
    return rd;
}

inline ScalarQ qdim(const Weight& w) { return f4_root_datum().qdim(w); }

/// Highest weights of the summands of V (x) V for the 26-dimensional V.
inline std::vector<Weight> tensor_square_weights() {
    return {Weight::zero(), Weight::omega(1), Weight::omega(3), Weight::omega(4), Weight::omega(4, 2)};
}

/// Checks sum of qdim over the given weights equals the square of the loop value.
inline bool tensor_square_dim_check(const std::vector<Weight>& summands = tensor_square_weights()) {
    ScalarQ s;
    for (const auto& w : summands)
        s += qdim(w);
    return s == loop_value() * loop_value();
}

} // namespace f4skein
