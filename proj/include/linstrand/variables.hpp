#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linstrand {

/// Variable kinds across both ambient rings:
///   X(i), Y(i): the 2n base-ring variables, indexed by vertex,
///   T(i,j):     one presentation variable per edge {i,j}, i < j,
///   Rees:       the single auxiliary variable of R[T].
enum class VarKind : std::uint32_t { X = 0, Y = 1, TEdge = 2, Rees = 3 };

/// A variable identifier packed into 32 bits. The packed value gives a fixed
/// structural order (all x's, then y's, then T's by edge, then the Rees
/// variable) that monomial storage relies on; it is unrelated to any
/// monomial order used for leading terms.
class VariableId {
public:
    static constexpr unsigned kIndexBits = 14;
    static constexpr unsigned kMaxIndex = (1u << kIndexBits) - 1;

    static VariableId x(unsigned i) { return VariableId(VarKind::X, i, 0); }
    static VariableId y(unsigned i) { return VariableId(VarKind::Y, i, 0); }
    static VariableId t(unsigned i, unsigned j) {
        if (i >= j) throw std::invalid_argument("T-variable requires i < j");
        return VariableId(VarKind::TEdge, i, j);
    }
    static VariableId rees() { return VariableId(VarKind::Rees, 0, 0); }

    VarKind kind() const { return static_cast<VarKind>(code_ >> (2 * kIndexBits)); }
    unsigned first() const { return (code_ >> kIndexBits) & kMaxIndex; }
    unsigned second() const { return code_ & kMaxIndex; }

    std::uint32_t code() const { return code_; }

    bool operator==(const VariableId& o) const { return code_ == o.code_; }
    bool operator!=(const VariableId& o) const { return code_ != o.code_; }
    bool operator<(const VariableId& o) const { return code_ < o.code_; }

    std::string str() const {
        switch (kind()) {
            case VarKind::X: return "x" + std::to_string(first());
            case VarKind::Y: return "y" + std::to_string(first());
            case VarKind::TEdge:
                return "T(" + std::to_string(first()) + "," + std::to_string(second()) + ")";
            case VarKind::Rees: return "T";
        }
        return "?";
    }

private:
    VariableId(VarKind k, unsigned i, unsigned j)
        : code_((static_cast<std::uint32_t>(k) << (2 * kIndexBits)) |
                ((i & kMaxIndex) << kIndexBits) | (j & kMaxIndex)) {
        if (i > kMaxIndex || j > kMaxIndex)
            throw std::invalid_argument("variable index out of range");
    }

    std::uint32_t code_;
};

} // namespace linstrand
