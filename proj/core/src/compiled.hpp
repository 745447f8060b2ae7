#pragma once

// Postfix programs over indexed atoms, evaluated in the Goedel algebra
// FF < FT < TT. On the two-world frame this agrees with the Kripke clauses;
// the unit tests check that agreement exhaustively on small formulas.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "g3af/three_val.hpp"

namespace g3af::detail {

constexpr ThreeVal g_and(ThreeVal a, ThreeVal b) noexcept { return std::min(a, b); }
constexpr ThreeVal g_or(ThreeVal a, ThreeVal b) noexcept { return std::max(a, b); }
constexpr ThreeVal g_imp(ThreeVal a, ThreeVal b) noexcept { return a <= b ? ThreeVal::TT : b; }
constexpr ThreeVal g_neg(ThreeVal a) noexcept { return a == ThreeVal::FF ? ThreeVal::TT : ThreeVal::FF; }

enum class Op : std::uint8_t { Atom, Const, Neg, And, Or, Imp };

struct Instr {
    Op op;
    std::uint32_t arg;
};

class Program {
public:
    void atom(std::uint32_t index) { emit({Op::Atom, index}, 1); }
    void constant(ThreeVal v) { emit({Op::Const, static_cast<std::uint32_t>(v)}, 1); }
    void op(Op o) { emit({o, 0}, o == Op::Neg ? 0 : -1); }

    ThreeVal run(const ThreeVal* atoms) const {
        if (max_depth_ <= kInline) {
            std::array<ThreeVal, kInline> stack;
            return exec(atoms, stack.data());
        }
        std::vector<ThreeVal> stack(static_cast<std::size_t>(max_depth_));
        return exec(atoms, stack.data());
    }

    std::set<std::uint32_t> atom_indices() const {
        std::set<std::uint32_t> out;
        for (const auto& ins : code_) {
            if (ins.op == Op::Atom) out.insert(ins.arg);
        }
        return out;
    }

    bool empty() const noexcept { return code_.empty(); }

private:
    static constexpr int kInline = 128;

    void emit(Instr ins, int delta) {
        code_.push_back(ins);
        depth_ += delta;
        max_depth_ = std::max(max_depth_, depth_);
    }

    ThreeVal exec(const ThreeVal* atoms, ThreeVal* stack) const {
        std::size_t sp = 0;
        for (const auto& ins : code_) {
            switch (ins.op) {
                case Op::Atom: stack[sp++] = atoms[ins.arg]; break;
                case Op::Const: stack[sp++] = static_cast<ThreeVal>(ins.arg); break;
                case Op::Neg: stack[sp - 1] = g_neg(stack[sp - 1]); break;
                case Op::And: --sp; stack[sp - 1] = g_and(stack[sp - 1], stack[sp]); break;
                case Op::Or: --sp; stack[sp - 1] = g_or(stack[sp - 1], stack[sp]); break;
                case Op::Imp: --sp; stack[sp - 1] = g_imp(stack[sp - 1], stack[sp]); break;
            }
        }
        return stack[0];
    }

    std::vector<Instr> code_;
    int depth_ = 0;
    int max_depth_ = 0;
};

}  // namespace g3af::detail
