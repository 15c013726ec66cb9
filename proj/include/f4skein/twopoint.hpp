#pragma once
/**
 * @file twopoint.hpp
 * @brief The five-dimensional algebra of two-strand endomorphisms.
 *
 * Coordinates are over the ordered basis jail, hourglass, H, I, X where X is
 * the positive crossing. Products come from a table derived once by the
 * rewriter and shipped as data (mul_table.inc).
 */

#include <array>
#include <string>
#include <vector>

#include "rewrite.hpp"
#include "rootdata.hpp"

namespace f4skein {

inline constexpr int kTwoDim = 5;
enum BasisIndex : int { kJail = 0, kHourglass = 1, kHIndex = 2, kIIndex = 3, kXIndex = 4 };

inline const std::array<std::string_view, kTwoDim>& basis_words() {
    static const std::array<std::string_view, kTwoDim> w = {relations::kJail, relations::kHourglass, relations::kH,
                                                          relations::kI, relations::kX};
    return w;
}
inline const std::array<std::string_view, kTwoDim>& basis_names() {
    static const std::array<std::string_view, kTwoDim> n = {"jail", "hourglass", "H", "I", "X"};
    return n;
}
inline const std::array<std::string_view, kTwoDim>& planar_basis_names() {
    static const std::array<std::string_view, kTwoDim> n = {"jail", "hourglass", "H", "I", "square"};
    return n;
}

using Coords = std::array<ScalarQ, kTwoDim>;

/// Element of End(V (x) V) in the crossing basis.
struct TwoStrand {
    Coords c{};

    static TwoStrand basis(int i) {
        TwoStrand t;
        t.c[static_cast<std::size_t>(i)] = ScalarQ(1);
        return t;
    }
    static TwoStrand parse(const std::array<std::string_view, kTwoDim>& coeffs) {
        TwoStrand t;
        for (int i = 0; i < kTwoDim; ++i)
            t.c[static_cast<std::size_t>(i)] = ScalarQ::parse(coeffs[static_cast<std::size_t>(i)]);
        return t;
    }

    const ScalarQ& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    ScalarQ& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero())
                return false;
        return true;
    }

    TwoStrand& operator+=(const TwoStrand& o) {
        for (int i = 0; i < kTwoDim; ++i)
            (*this)[i] += o[i];
        return *this;
    }
    TwoStrand& operator-=(const TwoStrand& o) {
        for (int i = 0; i < kTwoDim; ++i)
            (*this)[i] -= o[i];
        return *this;
    }
    friend TwoStrand operator+(TwoStrand a, const TwoStrand& b) { return a += b; }
    friend TwoStrand operator-(TwoStrand a, const TwoStrand& b) { return a -= b; }
    friend TwoStrand operator*(const ScalarQ& s, TwoStrand a) {
        for (auto& x : a.c)
            x *= s;
        return a;
    }
    friend bool operator==(const TwoStrand& a, const TwoStrand& b) { return a.c == b.c; }

    std::string to_string(const std::array<std::string_view, kTwoDim>& names = basis_names()) const {
        std::string out;
        for (int i = 0; i < kTwoDim; ++i) {
            if ((*this)[i].is_zero())
                continue;
            if (!out.empty())
                out += " + ";
            out += "(" + (*this)[i].to_string() + ")*" + std::string(names[static_cast<std::size_t>(i)]);
        }
        return out.empty() ? "0" : out;
    }
};

inline std::ostream& operator<<(std::ostream& os, const TwoStrand& t) { return os << t.to_string(); }

inline const std::array<DiagramKey, kTwoDim>& basis_keys() {
    static const std::array<DiagramKey, kTwoDim> keys = [] {
        std::array<DiagramKey, kTwoDim> k;
        for (int i = 0; i < kTwoDim; ++i)
            k[static_cast<std::size_t>(i)] = parse_expr(basis_words()[static_cast<std::size_t>(i)]).begin()->first;
        return k;
    }();
    return keys;
}

inline LinComb to_lincomb(const TwoStrand& t) {
    LinComb r(2, 2);
    for (int i = 0; i < kTwoDim; ++i)
        r += t[i] * parse_expr(basis_words()[static_cast<std::size_t>(i)]);
    return r;
}

/// Coordinates of a 2 -> 2 combination after normalization.
inline TwoStrand from_lincomb(const LinComb& f, long budget = default_step_budget()) {
    if (f.inputs() != 2 || f.outputs() != 2)
        throw ArityMismatch("two-strand element needs signature 2 -> 2");
    auto r = normalize(f, crossing_pack(), budget);
    TwoStrand t;
    for (const auto& [k, term] : r.reduced) {
        int idx = -1;
        for (int i = 0; i < kTwoDim; ++i)
            if (basis_keys()[static_cast<std::size_t>(i)] == k)
                idx = i;
        if (idx < 0)
            throw DerivationFailed("term outside the two-strand basis: " + print_diagram(term.diagram));
        t[idx] = term.coeff;
    }
    return t;
}

using MulTable = std::array<std::array<TwoStrand, kTwoDim>, kTwoDim>;

/// Entry [i][j] is b_i after b_j, computed by the rewriter.
inline MulTable derive_mul_table() {
    MulTable m;
    for (int i = 0; i < kTwoDim; ++i)
        for (int j = 0; j < kTwoDim; ++j) {
            LinComb bi = parse_expr(basis_words()[static_cast<std::size_t>(i)]);
            LinComb bj = parse_expr(basis_words()[static_cast<std::size_t>(j)]);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = from_lincomb(compose(bi, bj));
        }
    return m;
}

namespace detail {
#include "mul_table.inc"
} // namespace detail

/// The shipped table.
inline const MulTable& mul_table() {
    static const MulTable m = [] {
        MulTable t;
        for (int i = 0; i < kTwoDim; ++i)
            for (int j = 0; j < kTwoDim; ++j)
                for (int k = 0; k < kTwoDim; ++k)
                    t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][k] =
                        ScalarQ::parse(detail::kFrozenMulTable[i][j][k]);
        return t;
    }();
    return m;
}

/// a after b.
inline TwoStrand mul(const TwoStrand& a, const TwoStrand& b) {
    const MulTable& m = mul_table();
    TwoStrand r;
    for (int i = 0; i < kTwoDim; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; j < kTwoDim; ++j)
            if (!b[j].is_zero())
                r += (a[i] * b[j]) * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return r;
}

inline TwoStrand power(const TwoStrand& a, int n) {
    TwoStrand r = TwoStrand::basis(kJail);
    for (int i = 0; i < n; ++i)
        r = mul(a, r);
    return r;
}

/// jail - hourglass + H - I.
inline TwoStrand skein_planar_part() {
    TwoStrand t;
    t[kJail] = ScalarQ(1);
    t[kHourglass] = ScalarQ(-1);
    t[kHIndex] = ScalarQ(1);
    t[kIIndex] = ScalarQ(-1);
    return t;
}

/// The negative crossing.
inline TwoStrand xminus() { return TwoStrand::basis(kXIndex) - zparam() * skein_planar_part(); }

/// Rotation by one boundary point; an involution on this space.
inline TwoStrand rot2(const TwoStrand& a) {
    TwoStrand r;
    r[kJail] = a[kHourglass];
    r[kHourglass] = a[kJail];
    r[kHIndex] = a[kIIndex];
    r[kIIndex] = a[kHIndex];
    return r + a[kXIndex] * xminus();
}

/// Bar functor: conjugate coefficients and swap the crossings.
inline TwoStrand xi2(const TwoStrand& a) {
    TwoStrand r;
    for (int i = 0; i < kXIndex; ++i)
        r[i] = a[i].bar();
    return r + a[kXIndex].bar() * xminus();
}

/// Crossing-basis coordinates to planar coordinates (jail, hourglass, H, I, square).
inline Coords planar_basis_change(const TwoStrand& a) {
    static const TwoStrand p = TwoStrand::parse(relations::kCrossingPlanar);
    Coords r;
    for (int i = 0; i < kXIndex; ++i)
        r[static_cast<std::size_t>(i)] = a[i] + a[kXIndex] * p[i];
    r[kXIndex] = a[kXIndex] * p[kXIndex];
    return r;
}

inline TwoStrand from_planar(const Coords& b) {
    static const TwoStrand p = TwoStrand::parse(relations::kCrossingPlanar);
    TwoStrand a;
    a[kXIndex] = b[kXIndex] / p[kXIndex];
    for (int i = 0; i < kXIndex; ++i)
        a[i] = b[static_cast<std::size_t>(i)] - a[kXIndex] * p[i];
    return a;
}

struct Idempotent {
    std::string name;
    Weight weight;
    TwoStrand e;
};

/// The five idempotents as entered, without validation.
inline std::vector<Idempotent> idempotent_data() {
    const std::array<const char*, 5> names = {"0", "w1", "w3", "w4", "2w4"};
    auto weights = tensor_square_weights();
    std::vector<Idempotent> out;
    for (std::size_t i = 0; i < 5; ++i)
        out.push_back({names[i], weights[i], TwoStrand::parse(relations::kIdempotents[i])});
    return out;
}

/// Orthogonality, idempotency and completeness; empty when all hold.
inline std::vector<std::string> idempotent_failures(const std::vector<Idempotent>& es) {
    std::vector<std::string> bad;
    TwoStrand sum;
    for (std::size_t i = 0; i < es.size(); ++i) {
        sum += es[i].e;
        for (std::size_t j = 0; j < es.size(); ++j) {
            TwoStrand p = mul(es[i].e, es[j].e);
            TwoStrand want = i == j ? es[i].e : TwoStrand{};
            if (!(p == want))
                bad.push_back("e_" + es[i].name + " * e_" + es[j].name + " = " + p.to_string());
        }
    }
    if (!(sum == TwoStrand::basis(kJail)))
        bad.push_back("sum of idempotents = " + sum.to_string());
    return bad;
}

/// Validated idempotents for the weights 0, w1, w3, w4, 2w4.
inline const std::vector<Idempotent>& idempotents() {
    static const std::vector<Idempotent> es = [] {
        auto d = idempotent_data();
        auto bad = idempotent_failures(d);
        if (!bad.empty())
            throw ValidationFailed(bad.front());
        return d;
    }();
    return es;
}

/// Scalar c with X e = c e, or NotEigen.
inline ScalarQ eigenvalue(const TwoStrand& x, const TwoStrand& e) {
    TwoStrand xe = mul(x, e);
    int pivot = -1;
    for (int i = 0; i < kTwoDim && pivot < 0; ++i)
        if (!e[i].is_zero())
            pivot = i;
    if (pivot < 0)
        throw NotEigen("zero vector has no eigenvalue");
    ScalarQ c = xe[pivot] / e[pivot];
    if (!(xe == c * e))
        throw NotEigen("not proportional: " + xe.to_string());
    return c;
}

/// Eigenvalue of the crossing on each idempotent, in idempotent order.
inline std::vector<ScalarQ> crossing_eigenvalues() {
    std::vector<ScalarQ> out;
    for (const auto& e : idempotents())
        out.push_back(eigenvalue(TwoStrand::basis(kXIndex), e.e));
    return out;
}

/// Three-rung ladder computed in the algebra.
inline TwoStrand ladder() {
    TwoStrand h = TwoStrand::basis(kHIndex);
    return mul(h, mul(h, h));
}

} // namespace f4skein
