#pragma once
/**
 * @file dsl.hpp
 * @brief Text form of diagrams and linear combinations.
 *
 * Grammar:
 *   lin    := ['-'] term (('+' | '-') term)*
 *   term   := [scalar '.'] chain
 *   chain  := tensor (';' tensor)*        bottom to top
 *   tensor := atom ('*' atom)*            left to right
 *   atom   := id(n) | merge | split | cup | cap | x+ | x- | '(' lin ')'
 * A scalar is a parenthesized Q(q) expression, or one starting with a digit, q or '['.
 */

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lincomb.hpp"

namespace f4skein {

namespace detail {

class ExprParser {
  public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    LinComb run() {
        LinComb v = lin();
        skip();
        if (pos_ != s_.size())
            fail("unexpected input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("expression: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) +
                         "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }
    bool eat_word(std::string_view w) {
        skip();
        if (s_.substr(pos_, w.size()) != w)
            return false;
        std::size_t end = pos_ + w.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    LinComb lin() {
        bool neg = eat('-');
        LinComb v = term();
        if (neg)
            v = -v;
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    // Returns the end of a scalar prefix starting at pos_, or npos.
    std::size_t scalar_prefix_end() {
        skip();
        if (pos_ >= s_.size())
            return std::string_view::npos;
        char c = s_[pos_];
        std::size_t i = pos_;
        if (c == '(') {
            int depth = 0;
            for (; i < s_.size(); ++i) {
                if (s_[i] == '(')
                    ++depth;
                else if (s_[i] == ')' && --depth == 0)
                    break;
            }
            if (i >= s_.size())
                return std::string_view::npos;
            std::size_t j = i + 1;
            while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j])))
                ++j;
            return (j < s_.size() && s_[j] == '.') ? j : std::string_view::npos;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '[') {
            std::size_t j = s_.find('.', pos_);
            if (j == std::string_view::npos)
                fail("scalar prefix without '.'");
            return j;
        }
        return std::string_view::npos;
    }

    LinComb term() {
        std::size_t end = scalar_prefix_end();
        if (end != std::string_view::npos) {
            ScalarQ c;
            try {
                c = ScalarQ::parse(s_.substr(pos_, end - pos_));
            } catch (const ParseError& e) {
                fail(std::string("bad scalar (") + e.what() + ")");
            }
            pos_ = end + 1;
            return c * chain();
        }
        return chain();
    }

    LinComb chain() {
        LinComb v = tens();
        while (eat(';')) {
            LinComb next = tens();
            v = compose(next, v);
        }
        return v;
    }

    LinComb tens() {
        LinComb v = atom();
        while (eat('*'))
            v = tensor(v, atom());
        return v;
    }

    LinComb atom() {
        skip();
        if (eat('(')) {
            LinComb v = lin();
            if (!eat(')'))
                fail("expected ')'");
            return v;
        }
        if (eat_word("id")) {
            if (!eat('('))
                fail("expected '(' after id");
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_ || pos_ - start > 6)
                fail("expected strand count");
            int n = std::stoi(std::string(s_.substr(start, pos_ - start)));
            if (!eat(')'))
                fail("expected ')'");
            return LinComb(Diagram::identity(n));
        }
        if (eat_word("merge"))
            return LinComb(Diagram::merge());
        if (eat_word("split"))
            return LinComb(Diagram::split());
        if (eat_word("cup"))
            return LinComb(Diagram::cup());
        if (eat_word("cap"))
            return LinComb(Diagram::cap());
        skip();
        if (s_.substr(pos_, 2) == "x+") {
            pos_ += 2;
            return LinComb(Diagram::crossing(true));
        }
        if (s_.substr(pos_, 2) == "x-") {
            pos_ += 2;
            return LinComb(Diagram::crossing(false));
        }
        fail("expected a generator");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline LinComb parse_expr(std::string_view text) { return detail::ExprParser(text).run(); }

namespace detail {

// Word for a lone node with `a` legs below and `b` above, matched by key.
inline std::string node_word(const Diagram& d, int v, int first_slot, int a) {
    struct Entry {
        DiagramKey key;
        std::string word;
    };
    static const std::vector<Entry> table = [] {
        std::vector<std::string> words = {"cup ; split * id(1)", "split", "merge", "merge * id(1) ; cap"};
        for (const char* x : {"x+", "x-"}) {
            std::string c(x);
            words.push_back("cup * cup ; id(1) * " + c + " * id(1)");
            words.push_back("id(1) * cup ; " + c + " * id(1)");
            words.push_back(c);
            words.push_back(c + " * id(1) ; id(1) * cap");
            words.push_back("id(1) * " + c + " * id(1) ; cap * cap");
        }
        std::vector<Entry> t;
        for (auto& w : words) {
            LinComb lc = parse_expr(w);
            t.push_back({lc.begin()->first, w});
        }
        return t;
    }();
    NodeKind k = d.kind(v);
    DiagramKey want = Diagram::single_node(k, a, degree(k) - a, first_slot).key();
    for (const auto& e : table)
        if (e.key == want)
            return e.word;
    throw Error("internal: no word for node");
}

inline std::string layer(int left, const std::string& word, int right, bool composite) {
    std::string out;
    if (left)
        out += "id(" + std::to_string(left) + ") * ";
    bool wrap = composite && (left || right);
    out += wrap ? "(" + word + ")" : word;
    if (right)
        out += " * id(" + std::to_string(right) + ")";
    return out;
}

/// Peels nodes, caps and cups off the bottom and top until only straight strands remain.
class Peeler {
  public:
    Peeler(const Diagram& d, std::vector<int> bottom, std::vector<int> top, std::vector<int> partner)
        : d_(d), bottom_(std::move(bottom)), top_(std::move(top)), partner_(std::move(partner)),
          alive_(static_cast<std::size_t>(d.node_count()), 1) {}

    std::string run() {
        while (step()) {
        }
        std::vector<std::string> layers = below_;
        for (auto it = above_.rbegin(); it != above_.rend(); ++it)
            layers.push_back(*it);
        if (layers.empty())
            return "id(" + std::to_string(bottom_.size()) + ")";
        std::string out;
        for (std::size_t i = 0; i < layers.size(); ++i)
            out += (i ? " ; " : "") + layers[i];
        return out;
    }

  private:
    int node(int x) const { return x >= d_.dart_count() ? -1 : d_.node_of(x); }
    int p(int x) const { return partner_[static_cast<std::size_t>(x)]; }

    // Replaces the slots of v listed in `outer` by fresh port darts.
    std::vector<int> open_up(int v, const std::vector<int>& outer) {
        std::vector<int> darts;
        for (int s : outer)
            darts.push_back(d_.dart(v, s));
        std::vector<int> res;
        std::size_t base = partner_.size();
        partner_.resize(base + darts.size(), -1);
        for (std::size_t i = 0; i < darts.size(); ++i) {
            int x = darts[i];
            int y = p(x);
            int port = static_cast<int>(base + i);
            auto it = std::find(darts.begin(), darts.end(), y);
            if (it != darts.end()) {
                partner_[static_cast<std::size_t>(port)] = static_cast<int>(base) + static_cast<int>(it - darts.begin());
            } else {
                partner_[static_cast<std::size_t>(port)] = y;
                partner_[static_cast<std::size_t>(y)] = port;
            }
            res.push_back(port);
        }
        alive_[static_cast<std::size_t>(v)] = 0;
        return res;
    }

    bool step() {
        const int w = static_cast<int>(bottom_.size());
        // node touching the bottom: take the longest consecutive block
        int best_i = -1, best_k = 0, best_v = -1, best_s = 0;
        for (int i = 0; i < w; ++i) {
            int x = p(bottom_[static_cast<std::size_t>(i)]);
            int v = node(x);
            if (v < 0)
                continue;
            int s = d_.slot_of(x), deg = d_.deg(v), k = 1;
            while (i + k < w && k < deg && p(bottom_[static_cast<std::size_t>(i + k)]) == d_.dart(v, (s + k) % deg))
                ++k;
            if (k > best_k) {
                best_i = i, best_k = k, best_v = v, best_s = s;
            }
        }
        for (int i = 0; i + 1 < w && best_k < 2; ++i)
            if (p(bottom_[static_cast<std::size_t>(i)]) == bottom_[static_cast<std::size_t>(i + 1)]) {
                below_.push_back(layer(i, "cap", w - i - 2, false));
                bottom_.erase(bottom_.begin() + i, bottom_.begin() + i + 2);
                return true;
            }
        if (best_v >= 0) {
            int deg = d_.deg(best_v);
            std::vector<int> upper;
            for (int s = deg - 1; s >= best_k; --s)
                upper.push_back((best_s + s) % deg);
            std::string word = node_word(d_, best_v, best_s, best_k);
            below_.push_back(layer(best_i, word, w - best_i - best_k, word.find(';') != std::string::npos));
            auto ports = open_up(best_v, upper);
            bottom_.erase(bottom_.begin() + best_i, bottom_.begin() + best_i + best_k);
            bottom_.insert(bottom_.begin() + best_i, ports.begin(), ports.end());
            return true;
        }
        const int t = static_cast<int>(top_.size());
        for (int j = 0; j + 1 < t; ++j)
            if (p(top_[static_cast<std::size_t>(j)]) == top_[static_cast<std::size_t>(j + 1)]) {
                above_.push_back(layer(j, "cup", t - j - 2, false));
                top_.erase(top_.begin() + j, top_.begin() + j + 2);
                return true;
            }
        int tj = -1, tk = 0, tv = -1, ts = 0;
        for (int j = t - 1; j >= 0; --j) {
            int x = p(top_[static_cast<std::size_t>(j)]);
            int v = node(x);
            if (v < 0)
                continue;
            // top_[j] is the rightmost of the block; walk left while slots continue ccw
            int s = d_.slot_of(x), deg = d_.deg(v), k = 1;
            while (j - k >= 0 && k < deg && p(top_[static_cast<std::size_t>(j - k)]) == d_.dart(v, (s + k) % deg))
                ++k;
            if (k > tk) {
                tj = j - k + 1, tk = k, tv = v, ts = s;
            }
        }
        if (tv >= 0) {
            int deg = d_.deg(tv);
            std::vector<int> lower;
            for (int s = tk; s < deg; ++s)
                lower.push_back((ts + s) % deg);
            int first = (ts + tk) % deg;
            std::string word = node_word(d_, tv, first, deg - tk);
            above_.push_back(layer(tj, word, t - tj - tk, word.find(';') != std::string::npos));
            auto ports = open_up(tv, lower);
            top_.erase(top_.begin() + tj, top_.begin() + tj + tk);
            top_.insert(top_.begin() + tj, ports.begin(), ports.end());
            return true;
        }
        return false;
    }

    const Diagram& d_;
    std::vector<int> bottom_, top_;
    std::vector<int> partner_;
    std::vector<char> alive_;
    std::vector<std::string> below_, above_;
};

inline std::string print_open(const Diagram& d) {
    std::vector<int> partner(static_cast<std::size_t>(d.dart_count()));
    for (int x = 0; x < d.dart_count(); ++x)
        partner[static_cast<std::size_t>(x)] = d.partner(x);
    std::vector<int> bottom, top;
    for (int j = 0; j < d.inputs(); ++j)
        bottom.push_back(d.bottom_port(j));
    for (int j = 0; j < d.outputs(); ++j)
        top.push_back(d.top_port(j));
    return Peeler(d, bottom, top, partner).run();
}

// A connected closed diagram, cut open along one edge and capped.
inline std::string print_closed(const Diagram& c) {
    if (c.node_count() == 0)
        return "cup ; cap";
    std::vector<int> partner(static_cast<std::size_t>(c.dart_count()));
    for (int x = 0; x < c.dart_count(); ++x)
        partner[static_cast<std::size_t>(x)] = c.partner(x);
    int x = c.dart(0, 0), y = c.partner(x);
    int px = static_cast<int>(partner.size()), py = px + 1;
    partner.push_back(x);
    partner.push_back(y);
    partner[static_cast<std::size_t>(x)] = px;
    partner[static_cast<std::size_t>(y)] = py;
    return Peeler(c, {}, {px, py}, partner).run() + " ; cap";
}

} // namespace detail

/// Word in the generators whose value is the diagram.
inline std::string print_diagram(const Diagram& d) {
    auto [open, closed] = d.split_closed();
    std::string main = detail::print_open(open);
    if (closed.empty())
        return main;
    std::string out;
    for (const auto& c : closed) {
        out += out.empty() ? "" : " * ";
        out += "(" + detail::print_closed(c) + ")";
    }
    if (open.ports() == 0 && open.node_count() == 0)
        return out;
    return out + " * (" + main + ")";
}

inline std::string print_lincomb(const LinComb& f) {
    if (f.is_zero()) {
        if (f.inputs() == f.outputs())
            return "0 . id(" + std::to_string(f.inputs()) + ")";
        return "0";
    }
    std::string out;
    for (const auto& [k, t] : f) {
        std::string word = print_diagram(t.diagram);
        const ScalarQ& c = t.coeff;
        if (c == ScalarQ(1)) {
            out += out.empty() ? "" : " + ";
            out += word;
        } else if (c == ScalarQ(-1)) {
            out += out.empty() ? "- " : " - ";
            out += word;
        } else {
            out += out.empty() ? "" : " + ";
            out += "(" + c.to_string() + ") . " + word;
        }
    }
    return out;
}

} // namespace f4skein
