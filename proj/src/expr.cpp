#include "kleinian/expr.hpp"

#include <cctype>

namespace kleinian {

namespace {

using Node = ExprNode;
using NodePtr = std::unique_ptr<ExprNode>;

class Parser {
public:
    explicit Parser(const std::string &s) : s_(s) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip();
        if (pos_ < s_.size())
            throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    NodePtr make(Node::Kind k, std::size_t at) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->offset = at;
        return n;
    }

    NodePtr expr() {
        skip();
        const std::size_t start = pos_;
        NodePtr first;
        if (accept('-')) {
            first = make(Node::Kind::Neg, start);
            first->kids.push_back(term());
        } else {
            accept('+');
            first = term();
        }
        for (;;) {
            skip();
            const std::size_t at = pos_;
            Node::Kind k;
            if (accept('+'))
                k = Node::Kind::Add;
            else if (accept('-'))
                k = Node::Kind::Sub;
            else
                return first;
            NodePtr n = make(k, at);
            n->kids.push_back(std::move(first));
            n->kids.push_back(term());
            first = std::move(n);
        }
    }

    NodePtr term() {
        NodePtr first = factor();
        while (true) {
            skip();
            const std::size_t at = pos_;
            if (!accept('*'))
                return first;
            NodePtr n = make(Node::Kind::Mul, at);
            n->kids.push_back(std::move(first));
            n->kids.push_back(factor());
            first = std::move(n);
        }
    }

    NodePtr factor() {
        NodePtr a = atom();
        skip();
        const std::size_t at = pos_;
        if (!accept('^'))
            return a;
        skip();
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (digits == pos_)
            throw SyntaxError("expected a nonnegative integer exponent", pos_);
        const std::string e = s_.substr(digits, pos_ - digits);
        if (e.size() > 6)
            throw SyntaxError("exponent too large", digits);
        NodePtr n = make(Node::Kind::Pow, at);
        n->exponent = static_cast<unsigned>(std::stoul(e));
        n->kids.push_back(std::move(a));
        return n;
    }

    NodePtr atom() {
        skip();
        const std::size_t at = pos_;
        if (pos_ >= s_.size())
            throw SyntaxError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!accept(')'))
                throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw SyntaxError("expected a denominator", pos_);
                const std::size_t den_at = pos_;
                std::string den = digits();
                if (mpz_class(den) == 0)
                    throw SyntaxError("zero denominator", den_at);
                num += "/" + den;
            }
            NodePtr n = make(Node::Kind::Number, at);
            n->number = mpq_class(num);
            n->number.canonicalize();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
                id += s_[pos_++];
            if (id == "i")
                return make(Node::Kind::Imag, at);
            if (id == "zeta")
                return make(Node::Kind::Zeta, at);
            if (id.size() == 1 && std::string("xyzt").find(id[0]) != std::string::npos) {
                NodePtr n = make(Node::Kind::Variable, at);
                n->var = id[0];
                return n;
            }
            throw UnknownVariable("unknown identifier '" + id + "' at offset " + std::to_string(at));
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string digits() {
        std::string out;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            out += s_[pos_++];
        return out;
    }

    const std::string &s_;
    std::size_t pos_ = 0;
};

Var to_var(char c) {
    switch (c) {
    case 'x':
        return Var::X;
    case 'y':
        return Var::Y;
    case 'z':
        return Var::Z;
    default:
        return Var::T;
    }
}

} // namespace

std::unique_ptr<ExprNode> parse_expr_tree(const std::string &text) { return Parser(text).parse(); }

MPoly parse_poly(const std::string &text, const std::string &allowed) {
    NodePtr tree = parse_expr_tree(text);
    return eval_expr<MPoly>(
        *tree, [](const CycScalar &c) { return MPoly(c); },
        [&](char v, std::size_t at) {
            if (allowed.find(v) == std::string::npos)
                throw UnknownVariable(std::string("variable '") + v + "' at offset " + std::to_string(at) +
                                      " is not allowed here");
            return MPoly::var(to_var(v));
        });
}

CycScalar parse_scalar(const std::string &text) { return parse_poly(text, "").constant_term(); }

} // namespace kleinian
