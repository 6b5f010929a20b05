#pragma once

#include "kleinian/errors.hpp"
#include "kleinian/poly.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace kleinian {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ['^' nat]
// atom   := rational | 'i' | 'zeta' | var | '(' expr ')'
// No implicit multiplication.
struct ExprNode {
    enum class Kind { Number, Imag, Zeta, Variable, Add, Sub, Mul, Pow, Neg };
    Kind kind = Kind::Number;
    mpq_class number;
    char var = 0;
    unsigned exponent = 0;
    std::size_t offset = 0;
    std::vector<std::unique_ptr<ExprNode>> kids;
};

// Throws SyntaxError with the offset of the offending character, or
// UnknownVariable for identifiers outside {x, y, z, t, i, zeta}.
std::unique_ptr<ExprNode> parse_expr_tree(const std::string &text);

// Evaluates a tree in any ring type with +, -, unary -, and *. Products are
// taken left to right, so noncommutative targets see the words as written.
template <class T>
T eval_expr(const ExprNode &node, const std::function<T(const CycScalar &)> &constant,
            const std::function<T(char, std::size_t)> &variable) {
    using K = ExprNode::Kind;
    switch (node.kind) {
    case K::Number:
        return constant(CycScalar(node.number));
    case K::Imag:
        return constant(CycScalar::imag());
    case K::Zeta:
        return constant(CycScalar::zeta());
    case K::Variable:
        return variable(node.var, node.offset);
    case K::Neg:
        return -eval_expr<T>(*node.kids[0], constant, variable);
    case K::Pow: {
        T base = eval_expr<T>(*node.kids[0], constant, variable);
        T out = constant(CycScalar(1));
        for (unsigned e = 0; e < node.exponent; ++e)
            out = out * base;
        return out;
    }
    default:
        break;
    }
    T acc = eval_expr<T>(*node.kids[0], constant, variable);
    for (std::size_t j = 1; j < node.kids.size(); ++j) {
        T rhs = eval_expr<T>(*node.kids[j], constant, variable);
        if (node.kind == K::Add)
            acc = acc + rhs;
        else if (node.kind == K::Sub)
            acc = acc - rhs;
        else
            acc = acc * rhs;
    }
    return acc;
}

// Commutative polynomial in the allowed variables (a subset of "xyzt").
MPoly parse_poly(const std::string &text, const std::string &allowed = "xyzt");
// Expression without variables.
CycScalar parse_scalar(const std::string &text);

} // namespace kleinian
