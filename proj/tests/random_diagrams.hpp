#pragma once

#include <random>
#include <string>

#include "f4skein/dsl.hpp"

namespace testgen {

// Random word with the given signature, as DSL text.
inline std::string random_word(std::mt19937& rng, int inputs, int outputs, int layers, bool crossings = true) {
    int w = inputs;
    std::string out;
    auto add = [&](int left, const std::string& g, int right) {
        std::string l;
        if (left)
            l += "id(" + std::to_string(left) + ") * ";
        l += g;
        if (right)
            l += " * id(" + std::to_string(right) + ")";
        out += out.empty() ? l : " ; " + l;
    };
    std::uniform_int_distribution<int> pick(0, crossings ? 5 : 3);
    for (int i = 0; i < layers; ++i) {
        int g = pick(rng);
        if (w < 2 && (g == 0 || g == 3 || g >= 4))
            g = (g == 0 || g == 3) ? 1 : 2;
        if (w > 5 && (g == 1 || g == 2))
            g = 0;
        if (w == 0)
            g = 2;
        auto pos = [&](int span) { return std::uniform_int_distribution<int>(0, w - span)(rng); };
        switch (g) {
        case 0: {
            int p = pos(2);
            add(p, "merge", w - p - 2);
            w -= 1;
            break;
        }
        case 1: {
            int p = pos(1);
            add(p, "split", w - p - 1);
            w += 1;
            break;
        }
        case 2: {
            int p = std::uniform_int_distribution<int>(0, w)(rng);
            add(p, "cup", w - p);
            w += 2;
            break;
        }
        case 3: {
            int p = pos(2);
            add(p, "cap", w - p - 2);
            w -= 2;
            break;
        }
        default: {
            int p = pos(2);
            add(p, g == 4 ? "x+" : "x-", w - p - 2);
            break;
        }
        }
    }
    while (w > outputs) {
        if (w == 1) {
            add(0, "split", 0);
            add(0, "cap", 0);
            w = 0;
            continue;
        }
        int p = std::uniform_int_distribution<int>(0, w - 2)(rng);
        add(p, "merge", w - p - 2);
        w -= 1;
    }
    while (w < outputs) {
        int p = std::uniform_int_distribution<int>(0, w > 0 ? w - 1 : 0)(rng);
        if (w == 0) {
            add(0, "cup", 0);
            w += 2;
            if (w > outputs) {
                add(0, "split", 1);
                add(0, "merge", 1);
                add(0, "merge", 0);
                w = 1;
            }
            continue;
        }
        add(p, "split", w - p - 1);
        w += 1;
    }
    if (out.empty())
        out = "id(" + std::to_string(inputs) + ")";
    return out;
}

inline f4skein::Diagram random_diagram(std::mt19937& rng, int inputs, int outputs, int layers, bool crossings = true) {
    auto lc = f4skein::parse_expr(random_word(rng, inputs, outputs, layers, crossings));
    return lc.begin()->second.diagram;
}

} // namespace testgen
