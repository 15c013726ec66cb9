#pragma once
/**
 * @file relations.hpp
 * @brief Named diagrams and the coefficients of the local relations, as text.
 *
 * Everything here is data: scalar expressions in the syntax of ScalarQ::parse
 * and diagram words in the syntax of parse_expr.
 */

#include <array>
#include <string_view>

namespace f4skein::relations {

// Two-strand basis words.
inline constexpr std::string_view kJail = "id(2)";
inline constexpr std::string_view kHourglass = "cap ; cup";
inline constexpr std::string_view kH = "split * id(1) ; id(1) * merge";
inline constexpr std::string_view kI = "merge ; split";
inline constexpr std::string_view kX = "x+";
inline constexpr std::string_view kSquare = "split * id(1) ; id(1) * merge ; split * id(1) ; id(1) * merge";
inline constexpr std::string_view kLadder =
    "split * id(1) ; id(1) * merge ; split * id(1) ; id(1) * merge ; split * id(1) ; id(1) * merge";

// Small faces.
inline constexpr std::string_view kLollipop = "split ; cap";
inline constexpr std::string_view kCurl = "x+ ; cap";
inline constexpr std::string_view kBigon = "split ; merge";
inline constexpr std::string_view kSlide = "x+ ; merge";
inline constexpr std::string_view kTriangle = "split * id(1) ; id(1) * merge ; merge";
inline constexpr std::string_view kReidemeister2 = "x+ ; x-";
inline constexpr std::string_view kClasp = "x+ ; x+";
/// Crossing beside two vertices; q^6 times this is the dotted crossing.
inline constexpr std::string_view kDotted = "split * id(1) ; id(1) * x+ ; merge * id(1)";
inline constexpr std::string_view kPentagon =
    "split * id(1) ; id(1) * merge ; split * split ; id(1) * merge * id(1)";

// Representatives of the rotation orbits on five boundary points.
inline constexpr std::string_view kPentTree = "split * split ; id(1) * merge * id(1)";
inline constexpr std::string_view kPentArc = "cap ; cup ; split * id(1)";
inline constexpr std::string_view kPentCrossed = "merge ; cup * id(1) ; id(1) * x+";
inline constexpr std::string_view kPentSquare =
    "merge ; cup * id(1) ; id(1) * split * id(1) ; id(2) * merge ; id(1) * split * id(1) ; id(2) * merge";

inline constexpr std::string_view kDelta = "[3]*[8]*[13]*[18]/([4]*[6]*[9])";
inline constexpr std::string_view kPhi = "[2]*[7]*[12]/([4]*[6])";
inline constexpr std::string_view kZ = "(q^-4 - q^4)/[3]";

/// Square in the crossing basis: jail, hourglass, H, I, X.
inline constexpr std::array<std::string_view, 5> kSquareCoeffs = {
    "(q^10 + q^8 + q^6 + q^4 + 1)/(q^4*(q^4+1)^2)",
    "q^2*(q^10 + q^6 + q^4 + q^2 + 1)/(q^4+1)^2",
    "(q^10 + 2*q^6 + q^2 + 1)/(q^8 + q^4)",
    "(q^10 + q^8 + 2*q^4 + 1)/(q^6 + q^2)",
    "-[2]*[3]*[6]/[4]^2",
};

/// Positive crossing in the planar basis: jail, hourglass, H, I, square.
inline constexpr std::array<std::string_view, 5> kCrossingPlanar = {
    "(q^10 + q^8 + q^6 + q^4 + 1)*[4]^2/(q^4*(q^4+1)^2*[2]*[3]*[6])",
    "q^2*(q^10 + q^6 + q^4 + q^2 + 1)*[4]^2/((q^4+1)^2*[2]*[3]*[6])",
    "(q^10 + 2*q^6 + q^2 + 1)*[4]^2/((q^8 + q^4)*[2]*[3]*[6])",
    "(q^10 + q^8 + 2*q^4 + 1)*[4]^2/((q^6 + q^2)*[2]*[3]*[6])",
    "-[4]^2/([2]*[3]*[6])",
};

/// Dotted crossing: coefficients of jail, hourglass, H, I, X.
inline constexpr std::array<std::string_view, 5> kDottedCoeffs = {
    "q^-8/(q^2+q^-2)", "q^8/(q^2+q^-2)", "-q^-2", "-q^2", "1/(q^2+q^-2)",
};
inline constexpr std::string_view kDottedScale = "q^6";

/// Pentagon with crossings: trees, arc with vertex, crossed vertex.
inline constexpr std::array<std::string_view, 3> kPentagonCoeffs = {"-1", "-[7]/[4]^2", "[3]^2/[4]^2"};
/// Planar pentagon: trees, arc with vertex, square with a leg.
inline constexpr std::array<std::string_view, 3> kPlanarPentagonCoeffs = {
    "1/[2]^2", "[2]*[3]^2/([4]^2*[6])", "-[3]/([2]*[6])"};

/// Three-rung ladder in the planar basis.
inline constexpr std::array<std::string_view, 5> kLadderCoeffs = {
    "-[2]^2*[7]/[4]^2",
    "[2]^3*[7]*[10]/([4]^2*[5])",
    "[2]^2*(q^8+q^4+2*q^2+1+2*q^-2+q^-4+q^-8)/[4]^2",
    "-([3]-2)*([9]+[5]-1)/([3]-1)",
    "[5]-2",
};

/// Symmetrized square: coefficients of (jail + hourglass), (H + I) and (X + X^-), times 1/2.
inline constexpr std::array<std::string_view, 3> kSymmetricSquare = {
    "(q^8 + q^4 + 2*q^2 + 2 + 2*q^-2 + q^-4 + q^-8)/(q^2+q^-2)^2",
    "(q^2 - 1 + q^-2)*(q^2 + 3 + q^-2)",
    "-[2]*[3]*[6]/[4]^2",
};

/// Idempotents in the crossing basis, ordered 0, w1, w3, w4, 2w4.
inline constexpr std::array<std::array<std::string_view, 5>, 5> kIdempotents = {{
    {"0", "1/([3]*[8]*[13]*[18]/([4]*[6]*[9]))", "0", "0", "0"},
    {"q^-4*[4]/([3]^2*[8])", "(q^10-q^4-q^2)*[4]*[6]*[9]/([3]^3*[8]*[18])", "q^-1*[4]^2/([3]^2*[8])",
     "q^2*[4]^2/([2]*[3]^2*[8])", "-[4]/([3]*[8])"},
    {"q^-1*[4]/[3]^2", "q^8*[4]/([3]^2*[8])", "-q^2*[4]/([2]*[3]^2)", "(q^8-q^4-1)*[4]*[6]/([2]*[3]^2*[12])",
     "-1/[3]"},
    {"0", "0", "0", "1/([2]*[7]*[12]/([4]*[6]))", "0"},
    {"(q^6+q^2+q^-4)*[4]/([3]*[8])", "-(q^18+q^14+q^12+q^8-1)*[4]/([3]*[8]*[13])", "(q^4-q^2)*[4]^2/([2]*[3]*[8])",
     "-(q^10+q^4+1)*[4]^2/([2]*[3]*[7]*[8])", "[4]*[6]/([2]*[3]*[8])"},
}};

/// Idempotents w1, w3, 2w4 in the planar basis.
inline constexpr std::array<std::array<std::string_view, 5>, 3> kPlanarIdempotents = {{
    {"-[4]^2/([3]^2*[6]*[8])", "-(q^4-q^2+1-q^-2+q^-4)*[2]^2*[4]^2*[9]/([3]^3*[8]*[18])", "[4]^2/([2]*[3]^3*[8])",
     "-[4]^3/([2]^2*[3]^3*[8])", "[4]^3/([2]*[3]^2*[6]*[8])"},
    {"[2]*[7]/([3]^2*[6])", "-[2]*[4]*[7]/([3]^2*[6]*[8])", "-[4]^2/[3]^3", "-([9]+[5]-1)*[4]*[6]/([2]*[3]^3*[12])",
     "[4]^2/([2]*[3]^2*[6])"},
    {"[4]^2*[7]/([2]*[3]^2*[8])", "(q^4-q^2+1-q^-2+q^-4)*[2]*[4]^2*[7]/([3]^2*[8]*[13])",
     "(q^6+q^4+1+q^-4+q^-6)*[4]^2/([2]*[3]^2*[8])", "([9]+[5]-1)*[4]^3/([2]^2*[3]^2*[7]*[8])",
     "-[4]^3/([2]^2*[3]^2*[8])"},
}};

} // namespace f4skein::relations
