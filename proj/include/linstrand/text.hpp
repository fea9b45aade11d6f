#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linstrand/errors.hpp"
#include "linstrand/polynomial.hpp"

namespace linstrand {

/// Renders a monomial as `x0*y1^2*T(2,3)`; `1` for the empty monomial.
/// `index_base` shifts printed vertex indices (0 or 1).
inline std::string render_monomial(const Monomial& m, unsigned index_base = 0) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : m.entries()) {
        if (!out.empty()) out += "*";
        switch (v.kind()) {
            case VarKind::X: out += "x" + std::to_string(v.first() + index_base); break;
            case VarKind::Y: out += "y" + std::to_string(v.first() + index_base); break;
            case VarKind::TEdge:
                out += "T(" + std::to_string(v.first() + index_base) + "," +
                       std::to_string(v.second() + index_base) + ")";
                break;
            case VarKind::Rees: out += "T"; break;
        }
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

/// Renders terms descending under `order`, e.g. `x0*y1 - x1*y0`.
template <class F>
std::string render_polynomial(const F& field, const Polynomial<F>& poly,
                              const MonomialOrder& order, unsigned index_base = 0) {
    if (poly.is_zero()) return "0";
    std::string out;
    for (const auto& t : poly.sorted_terms(order)) {
        bool neg = field.prints_negative(t.coeff);
        std::string mag = field.abs_string(t.coeff);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = render_monomial(t.mono, index_base);
        if (mag != "1") {
            out += mag;
            if (mono != "1") out += "*" + mono;
        } else {
            out += mono;
        }
    }
    return out;
}

/// Recursive-descent parser for the same grammar render_polynomial emits:
/// signed sums of `coeff*var^e*...` products, with variables `x<i>`, `y<i>`,
/// `T(<i>,<j>)` and the bare Rees variable `T`.
template <class F>
class PolynomialParser {
public:
    PolynomialParser(const F& field, std::string_view text, unsigned index_base = 0)
        : field_(field), text_(text), base_(index_base) {}

    Polynomial<F> parse() {
        std::vector<std::pair<Monomial, typename F::Element>> raw;
        skip_ws();
        bool first = true;
        while (pos_ < text_.size()) {
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            auto [mono, coeff] = parse_term();
            raw.emplace_back(std::move(mono), neg ? field_.neg(coeff) : coeff);
            skip_ws();
            first = false;
        }
        if (first) fail("empty polynomial text");
        return Polynomial<F>::from_terms(field_, std::move(raw));
    }

private:
    std::pair<Monomial, typename F::Element> parse_term() {
        typename F::Element coeff = field_.one();
        std::vector<Monomial::Entry> entries;
        bool any = false;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = field_.mul(coeff, field_.from_int(parse_int()));
                any = true;
            } else if (c == 'x' || c == 'y' || c == 'T') {
                auto [var, exp] = parse_power();
                entries.emplace_back(var, exp);
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (pos_ < text_.size() && peek() == '*') {
                ++pos_;
                continue;
            }
            // juxtaposition without '*' is also accepted for variables
            if (pos_ < text_.size() &&
                (peek() == 'x' || peek() == 'y' || peek() == 'T'))
                continue;
            break;
        }
        if (!any) fail("expected a term");
        return {Monomial(std::move(entries)), coeff};
    }

    std::pair<VariableId, std::uint32_t> parse_power() {
        char c = take();
        VariableId var = VariableId::rees();
        if (c == 'x' || c == 'y') {
            long long i = parse_int();
            check_index(i);
            var = c == 'x' ? VariableId::x(unsigned(i - base_))
                           : VariableId::y(unsigned(i - base_));
        } else { // 'T'
            skip_ws();
            if (pos_ < text_.size() && peek() == '(') {
                ++pos_;
                long long i = parse_int();
                expect(',');
                long long j = parse_int();
                expect(')');
                check_index(i);
                check_index(j);
                if (i - base_ >= j - base_) fail("edge variable requires i < j");
                var = VariableId::t(unsigned(i - base_), unsigned(j - base_));
            }
        }
        std::uint32_t exp = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
            ++pos_;
            long long e = parse_int();
            if (e <= 0) fail("exponent must be positive");
            exp = static_cast<std::uint32_t>(e);
        }
        return {var, exp};
    }

    long long parse_int() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (take() - '0');
            if (v > (1ll << 60)) fail("integer literal too large");
        }
        return v;
    }

    void check_index(long long i) {
        if (i < static_cast<long long>(base_)) fail("variable index below index base");
        if (i - base_ > VariableId::kMaxIndex) fail("variable index too large");
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" +
                         std::string(text_) + "\"");
    }

    const F& field_;
    std::string_view text_;
    unsigned base_;
    std::size_t pos_ = 0;
};

template <class F>
Polynomial<F> parse_polynomial(const F& field, std::string_view text,
                               unsigned index_base = 0) {
    return PolynomialParser<F>(field, text, index_base).parse();
}

} // namespace linstrand
