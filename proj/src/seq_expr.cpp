#include "tptri/seq_expr.hpp"

#include "tptri/errors.hpp"

#include <cctype>
#include <utility>

namespace tptri {

struct SeqExpr::Node {
    enum class Kind { constant, var_k, var_q, add, sub, mul, div, pow };

    Kind kind;
    Rational value;               // constant
    unsigned long exponent = 0;   // pow
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = SeqExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_leaf(Node::Kind kind, Rational value = 0) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->value = std::move(value);
    return n;
}

NodePtr make_binary(Node::Kind kind, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

// Recursive-descent parser.  Grammar, loosest binding first:
//   expr   := term (('+' | '-') term)*
//   term   := signed (('*' | '/') signed)*
//   signed := ('+' | '-')* power
//   power  := atom ('^' UINT)?
//   atom   := UINT | 'k' | 'q' | '(' expr ')'
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    NodePtr run() {
        NodePtr root = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing text");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("bad expression \"" + std::string(text_) + "\": " + why +
                         " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (eat('+'))
                lhs = make_binary(Node::Kind::add, lhs, parse_term());
            else if (eat('-'))
                lhs = make_binary(Node::Kind::sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_signed();
        for (;;) {
            if (eat('*'))
                lhs = make_binary(Node::Kind::mul, lhs, parse_signed());
            else if (eat('/'))
                lhs = make_binary(Node::Kind::div, lhs, parse_signed());
            else
                return lhs;
        }
    }

    NodePtr parse_signed() {
        if (eat('-')) {
            // -x parses as 0 - x.
            return make_binary(Node::Kind::sub, make_leaf(Node::Kind::constant, 0),
                               parse_signed());
        }
        if (eat('+')) return parse_signed();
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (eat('^')) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::pow;
            n->lhs = base;
            n->exponent = parse_uint();
            return n;
        }
        return base;
    }

    unsigned long parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer exponent");
        unsigned long value = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            if (value > 1000) fail("exponent too large");
            value = value * 10 + static_cast<unsigned long>(text_[i] - '0');
        }
        return value;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a value");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'k') {
            ++pos_;
            return make_leaf(Node::Kind::var_k);
        }
        if (c == 'q') {
            ++pos_;
            return make_leaf(Node::Kind::var_q);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return make_leaf(Node::Kind::constant,
                             Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        fail("unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void scan_vars(const NodePtr& node, bool& uses_k, bool& uses_q) {
    if (!node) return;
    if (node->kind == Node::Kind::var_k) uses_k = true;
    if (node->kind == Node::Kind::var_q) uses_q = true;
    scan_vars(node->lhs, uses_k, uses_q);
    scan_vars(node->rhs, uses_k, uses_q);
}

QPoly eval_node(const Node& node, const Rational& k_value) {
    switch (node.kind) {
        case Node::Kind::constant:
            return QPoly(node.value);
        case Node::Kind::var_k:
            return QPoly(k_value);
        case Node::Kind::var_q:
            return QPoly::variable();
        case Node::Kind::add:
            return eval_node(*node.lhs, k_value) + eval_node(*node.rhs, k_value);
        case Node::Kind::sub:
            return eval_node(*node.lhs, k_value) - eval_node(*node.rhs, k_value);
        case Node::Kind::mul:
            return eval_node(*node.lhs, k_value) * eval_node(*node.rhs, k_value);
        case Node::Kind::div: {
            QPoly denom = eval_node(*node.rhs, k_value);
            if (!denom.is_constant())
                throw Error("division by a q-dependent expression");
            Rational d = denom.constant_value();
            if (d == 0) throw Error("division by zero in expression");
            QPoly numer = eval_node(*node.lhs, k_value);
            std::vector<Rational> scaled = numer.coeffs();
            for (Rational& c : scaled) c /= d;
            return QPoly(std::move(scaled));
        }
        case Node::Kind::pow: {
            QPoly base = eval_node(*node.lhs, k_value);
            QPoly acc = 1;
            for (unsigned long i = 0; i < node.exponent; ++i) acc *= base;
            return acc;
        }
    }
    throw Error("corrupt expression tree");
}

std::string trimmed(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return std::string(text);
}

}  // namespace

SeqExpr SeqExpr::parse(std::string_view text) {
    NodePtr root = ExprParser(text).run();
    bool uses_k = false, uses_q = false;
    scan_vars(root, uses_k, uses_q);
    return SeqExpr(std::move(root), trimmed(text), uses_k, uses_q);
}

QPoly SeqExpr::eval(const Rational& k_value) const {
    return eval_node(*root_, k_value);
}

QPoly parse_qpoly(std::string_view text) {
    SeqExpr expr = SeqExpr::parse(text);
    if (expr.uses_k())
        throw ParseError("polynomial \"" + std::string(text) + "\" may not reference k");
    return expr.eval(0);
}

SeqGen SeqGen::from_text(std::string_view text, long index_base) {
    std::string body = trimmed(text);
    if (body.empty()) throw ParseError("empty sequence generator");

    SeqGen gen;
    gen.index_base_ = index_base;
    gen.text_ = body;

    if (body.front() == '[') {
        std::size_t close = body.find(']');
        if (close == std::string::npos)
            throw ParseError("unterminated list in \"" + body + "\"");
        std::string items = body.substr(1, close - 1);
        std::size_t start = 0;
        bool any = trimmed(items).size() > 0;
        while (any) {
            std::size_t comma = items.find(',', start);
            std::string item = (comma == std::string::npos)
                                   ? items.substr(start)
                                   : items.substr(start, comma - start);
            SeqExpr e = SeqExpr::parse(item);
            if (e.uses_k())
                throw ParseError("list element \"" + trimmed(item) + "\" may not reference k");
            gen.prefix_.push_back(e.eval(0));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        std::string rest = trimmed(std::string_view(body).substr(close + 1));
        if (!rest.empty()) {
            if (rest.size() < 2 || rest[0] != '+' || rest[1] != '+')
                throw ParseError("expected \"++ expression\" after list in \"" + body + "\"");
            gen.tail_ = SeqExpr::parse(std::string_view(rest).substr(2));
        }
    } else {
        gen.tail_ = SeqExpr::parse(body);
    }
    return gen;
}

SeqGen SeqGen::constant(const Rational& value) {
    SeqGen gen;
    gen.tail_ = SeqExpr::parse(to_string(value));
    gen.text_ = to_string(value);
    return gen;
}

SeqGen SeqGen::from_list(std::vector<Rational> values, long index_base) {
    SeqGen gen;
    gen.index_base_ = index_base;
    std::string text = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) text += ", ";
        text += to_string(values[i]);
        gen.prefix_.push_back(QPoly(values[i]));
    }
    gen.text_ = text + "]";
    return gen;
}

SeqGen SeqGen::from_poly_list(std::vector<QPoly> values, long index_base) {
    SeqGen gen;
    gen.index_base_ = index_base;
    std::string text = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) text += ", ";
        text += to_string(values[i]);
    }
    gen.prefix_ = std::move(values);
    gen.text_ = text + "]";
    return gen;
}

QPoly SeqGen::at_poly(long index) const {
    long offset = index - index_base_;
    if (offset < 0) throw UndefinedIndexError(index);
    QPoly value;
    if (offset < static_cast<long>(prefix_.size())) {
        value = prefix_[static_cast<std::size_t>(offset)];
    } else if (tail_) {
        value = tail_->eval(Rational(index));
    } else {
        throw UndefinedIndexError(index);
    }
    if (q_subst_) return QPoly(value.eval(*q_subst_));
    return value;
}

Rational SeqGen::at(long index) const {
    QPoly value = at_poly(index);
    if (!value.is_constant())
        throw Error("sequence term at index " + std::to_string(index) +
                    " is q-dependent: " + to_string(value));
    return value.constant_value();
}

bool SeqGen::uses_q() const {
    if (q_subst_) return false;
    for (const QPoly& p : prefix_) {
        if (!p.is_constant()) return true;
    }
    return tail_ && tail_->uses_q();
}

SeqGen SeqGen::specialized(const Rational& q0) const {
    SeqGen copy = *this;
    copy.q_subst_ = q0;
    return copy;
}

}  // namespace tptri
