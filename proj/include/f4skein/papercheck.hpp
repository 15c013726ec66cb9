#pragma once
/**
 * @file papercheck.hpp
 * @brief Catalog of exact identities behind the relations, re-derived on demand.
 *
 * Each entry is a named closure returning both sides in canonical form.
 * Entries never throw out of run(); an exception becomes a failing result.
 */

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evaluate.hpp"

namespace f4skein {

struct CheckResult {
    int index = 0;
    std::string name;
    std::string claim;
    bool passed = false;
    std::string lhs;
    std::string rhs;
};

struct Check {
    int index;
    std::string name;
    std::string claim;
    std::function<CheckResult()> run;
};

namespace detail {

inline ScalarQ sq(std::string_view s) { return ScalarQ::parse(s); }

inline CheckResult compare(const ScalarQ& lhs, const ScalarQ& rhs) {
    return {0, {}, {}, lhs == rhs, lhs.to_string(), rhs.to_string()};
}
inline CheckResult compare(const TwoStrand& lhs, const TwoStrand& rhs,
                           const std::array<std::string_view, kTwoDim>& names = basis_names()) {
    return {0, {}, {}, lhs == rhs, lhs.to_string(names), rhs.to_string(names)};
}

/// Exact solution of A x = b, or nullopt if inconsistent or underdetermined.
inline std::optional<std::vector<ScalarQ>> solve_exact(std::vector<std::vector<ScalarQ>> a, std::vector<ScalarQ> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        ScalarQ inv = ScalarQ(1) / a[r][c];
        for (auto& x : a[r])
            x *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero())
                continue;
            ScalarQ f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero())
            return std::nullopt;
    if (pivots.size() != cols)
        return std::nullopt;
    std::vector<ScalarQ> x(cols);
    for (std::size_t i = 0; i < r; ++i)
        x[pivots[i]] = b[i];
    return x;
}

inline TwoStrand square_element() { return TwoStrand::parse(relations::kSquareCoeffs); }

inline TwoStrand positive_dotted() { return TwoStrand::parse(relations::kDottedCoeffs); }

inline TwoStrand negative_dotted() {
    ScalarQ k = ScalarQ(1) / (ScalarQ::q(2) + ScalarQ::q(-2));
    TwoStrand t = k * (ScalarQ::q(8) * TwoStrand::basis(kJail) + ScalarQ::q(-8) * TwoStrand::basis(kHourglass) + xminus());
    t[kHIndex] -= ScalarQ::q(2);
    t[kIIndex] -= ScalarQ::q(-2);
    return t;
}

inline ScalarQ z1_formula(const ScalarQ& delta) {
    auto b = [](int n) { return ScalarQ::q(n) + ScalarQ::q(-n); };
    return b(10) * b(6) * (ScalarQ::q(-8) - ScalarQ::q(8)) / (delta - b(4));
}

inline ScalarQ z2_formula(const ScalarQ& delta, const ScalarQ& phi) {
    auto b = [](int n) { return ScalarQ::q(n) + ScalarQ::q(-n); };
    return (delta + b(16)) * b(6) * b(4) * (ScalarQ::q(2) - ScalarQ::q(-2)) / (phi * (b(4) - delta));
}

} // namespace detail

/// The excluded values of the loop parameter, as a standalone predicate.
inline CheckResult nondegeneracy_guard(const ScalarQ& delta) {
    ScalarQ a = ScalarQ::q(4) + ScalarQ::q(-4);
    ScalarQ b = -(ScalarQ::q(16) + ScalarQ::q(-16));
    CheckResult r;
    r.passed = !(delta == a) && !(delta == b);
    r.lhs = delta.to_string();
    r.rhs = "not in {" + a.to_string() + ", " + b.to_string() + "}";
    return r;
}

/// Coefficients (trees, arc with vertex, crossed vertex) forced by capping the pentagon with a merge.
inline std::optional<std::vector<ScalarQ>> solve_pentagon_coefficients() {
    using detail::sq;
    const ScalarQ phi = bigon_value();
    const ScalarQ t = triangle_value();
    const TwoStrand square = detail::square_element();
    const TwoStrand jail = TwoStrand::basis(kJail), e = TwoStrand::basis(kHourglass);
    const TwoStrand h = TwoStrand::basis(kHIndex), i = TwoStrand::basis(kIIndex), x = TwoStrand::basis(kXIndex);
    TwoStrand v1 = (phi + t) * (h + i) + square;
    TwoStrand v2 = phi * (jail + e) + h + i;
    TwoStrand v3 = ScalarQ::q(12) * h + ScalarQ::q(-12) * i + phi * x +
                   (ScalarQ::q(6) + ScalarQ::q(-6)) * detail::negative_dotted();
    TwoStrand rhs = t * square;
    std::vector<std::vector<ScalarQ>> a(kTwoDim, std::vector<ScalarQ>(3));
    std::vector<ScalarQ> b(kTwoDim);
    for (int k = 0; k < kTwoDim; ++k) {
        a[static_cast<std::size_t>(k)] = {v1[k], v2[k], v3[k]};
        b[static_cast<std::size_t>(k)] = rhs[k];
    }
    return detail::solve_exact(a, b);
}

inline std::vector<Check> check_catalog() {
    using detail::compare;
    using detail::sq;
    std::vector<Check> c;
    auto add = [&](std::string name, std::string claim, std::function<CheckResult()> f) {
        c.push_back({static_cast<int>(c.size()) + 1, std::move(name), std::move(claim), std::move(f)});
    };

    add("natural-coefficients", "delta and phi are Laurent polynomials with nonnegative integer coefficients", [] {
        ScalarQ d = loop_value(), p = bigon_value();
        bool ok = d.is_laurent() && p.is_laurent() && d.num().has_natural_coeffs() && p.num().has_natural_coeffs();
        return CheckResult{0, {}, {}, ok, d.to_string() + " ; " + p.to_string(), "N[q, q^-1]"};
    });
    add("cap-balance", "(1 - delta) z + phi z = q^24 - q^-24", [] {
        ScalarQ z = zparam();
        return compare((ScalarQ(1) - loop_value()) * z + bigon_value() * z, ScalarQ::q(24) - ScalarQ::q(-24));
    });
    add("z1-formula", "z1 from delta alone equals (q^-4 - q^4)/[3]",
        [] { return compare(detail::z1_formula(loop_value()), zparam()); });
    add("z2-formula", "z2 from delta and phi equals (q^-4 - q^4)/[3]",
        [] { return compare(detail::z2_formula(loop_value(), bigon_value()), zparam()); });
    add("balance-condition", "phi = (delta + q^16 + q^-16)/((q^10 + q^-10)(q^2 + q^-2))", [] {
        auto b = [](int n) { return ScalarQ::q(n) + ScalarQ::q(-n); };
        return compare(bigon_value(), (loop_value() + b(16)) / (b(10) * b(2)));
    });
    add("triangle-coefficient", "[3](q^12 - q^-12)/(q^-4 - q^4) + phi - 1 = -[9]/[3]", [] {
        ScalarQ lhs = qint(3) * (ScalarQ::q(12) - ScalarQ::q(-12)) / (ScalarQ::q(-4) - ScalarQ::q(4)) + bigon_value() -
                      ScalarQ(1);
        return compare(lhs, triangle_value());
    });
    add("triangle-from-z", "(q^12 - q^-12)/z + phi - 1 = -[9]/[3]", [] {
        ScalarQ lhs = (ScalarQ::q(12) - ScalarQ::q(-12)) / zparam() + bigon_value() - ScalarQ(1);
        return compare(lhs, triangle_value());
    });
    add("square-from-dotted", "the square relation follows from the dotted crossings of both signs", [] {
        ScalarQ z = zparam(), phi = bigon_value();
        TwoStrand jail = TwoStrand::basis(kJail), e = TwoStrand::basis(kHourglass);
        TwoStrand hi = TwoStrand::basis(kHIndex) + TwoStrand::basis(kIIndex);
        TwoStrand twice = (ScalarQ::q(6) - ScalarQ::q(-6)) * (detail::positive_dotted() + detail::negative_dotted()) +
                          phi * z * (jail + e) +
                          (ScalarQ::q(12) - ScalarQ::q(-12) + phi * z - ScalarQ(2) * z) * hi;
        return compare((ScalarQ(1) / (ScalarQ(2) * z)) * twice, detail::square_element());
    });
    add("pentagon-solve", "the five capped pentagon equations have the unique solution -1, -[7]/[4]^2, [3]^2/[4]^2", [] {
        auto sol = solve_pentagon_coefficients();
        std::string want;
        std::vector<ScalarQ> expected;
        for (auto s : relations::kPentagonCoeffs) {
            expected.push_back(sq(s));
            want += (want.empty() ? "" : " ; ") + expected.back().to_string();
        }
        if (!sol)
            return CheckResult{0, {}, {}, false, "no unique solution", want};
        std::string got;
        for (const auto& x : *sol)
            got += (got.empty() ? "" : " ; ") + x.to_string();
        return CheckResult{0, {}, {}, *sol == expected, got, want};
    });
    add("nondegeneracy", "delta avoids q^4 + q^-4 and -q^16 - q^-16", [] { return nondegeneracy_guard(loop_value()); });
    add("planar-pentagon", "crossing elimination turns the pentagon coefficients into the planar ones", [] {
        TwoStrand p = TwoStrand::parse(relations::kCrossingPlanar);
        ScalarQ r = sq("[3]^2/[4]^2");
        std::array<ScalarQ, 3> got = {sq("-1") + r * (p[2] + p[3]), sq("-[7]/[4]^2") + r * (p[0] + p[1]), r * p[4]};
        std::string l, rr;
        bool ok = true;
        for (std::size_t k = 0; k < 3; ++k) {
            ScalarQ want = sq(relations::kPlanarPentagonCoeffs[k]);
            ok = ok && got[k] == want;
            l += (k ? " ; " : "") + got[k].to_string();
            rr += (k ? " ; " : "") + want.to_string();
        }
        return CheckResult{0, {}, {}, ok, l, rr};
    });
    add("symmetric-square", "twice the square in the rotation-invariant crossing form", [] {
        TwoStrand s;
        ScalarQ a = sq(relations::kSymmetricSquare[0]), b = sq(relations::kSymmetricSquare[1]),
                cc = sq(relations::kSymmetricSquare[2]);
        s = a * (TwoStrand::basis(kJail) + TwoStrand::basis(kHourglass)) +
            b * (TwoStrand::basis(kHIndex) + TwoStrand::basis(kIIndex)) + cc * (TwoStrand::basis(kXIndex) + xminus());
        return compare(ScalarQ(2) * detail::square_element(), s);
    });
    add("ladder", "three-rung ladder in the planar basis", [] {
        Coords got = planar_basis_change(ladder());
        TwoStrand g;
        g.c = got;
        return compare(g, TwoStrand::parse(relations::kLadderCoeffs), planar_basis_names());
    });
    add("idempotents", "orthogonal idempotents summing to the identity with traces equal to quantum dimensions", [] {
        auto es = idempotent_data();
        auto bad = idempotent_failures(es);
        std::string traces, dims;
        for (const auto& e : es) {
            ScalarQ t = closure(e.e), d = qdim(e.weight);
            if (!(t == d))
                bad.push_back("closure(e_" + e.name + ") = " + t.to_string());
            traces += (traces.empty() ? "" : " ; ") + t.specialize(1).get_str();
            dims += (dims.empty() ? "" : " ; ") + d.specialize(1).get_str();
        }
        CheckResult r{0, {}, {}, bad.empty(), bad.empty() ? "traces at q=1: " + traces : bad.front(),
                      "qdims at q=1: " + dims};
        return r;
    });
    add("planar-idempotents", "idempotents w1, w3, 2w4 rewritten without crossings", [] {
        auto es = idempotent_data();
        const std::array<std::size_t, 3> which = {1, 2, 4};
        std::string l, rr;
        bool ok = true;
        for (std::size_t k = 0; k < 3; ++k) {
            TwoStrand got;
            got.c = planar_basis_change(es[which[k]].e);
            TwoStrand want = TwoStrand::parse(relations::kPlanarIdempotents[k]);
            if (!(got == want)) {
                ok = false;
                l += "e_" + es[which[k]].name + ": " + got.to_string(planar_basis_names()) + "  ";
                rr += "e_" + es[which[k]].name + ": " + want.to_string(planar_basis_names()) + "  ";
            }
        }
        return CheckResult{0, {}, {}, ok, ok ? "match" : l, ok ? "match" : rr};
    });
    return c;
}

inline std::size_t check_count() { return check_catalog().size(); }

/// Runs the selected entries (all when empty) in catalog order.
inline std::vector<CheckResult> run_checks(const std::set<int>& only = {}) {
    std::vector<CheckResult> out;
    for (const auto& ch : check_catalog()) {
        if (!only.empty() && !only.count(ch.index))
            continue;
        CheckResult r;
        try {
            r = ch.run();
        } catch (const std::exception& ex) {
            r.passed = false;
            r.lhs = std::string("error: ") + ex.what();
        }
        r.index = ch.index;
        r.name = ch.name;
        r.claim = ch.claim;
        out.push_back(std::move(r));
    }
    return out;
}

inline bool all_passed(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.passed)
            return false;
    return true;
}

} // namespace f4skein
