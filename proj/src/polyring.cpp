#include "polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mfwb {

VarsPtr make_vars(Vars names)
{
    return std::make_shared<const Vars>(std::move(names));
}

bool same_vars(const VarsPtr& a, const VarsPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

std::vector<Exps> monomials_of_degree(int nvars, int degree)
{
    std::vector<Exps> out;
    Exps cur(nvars, 0);
    // Distribute `degree` over `nvars` slots, first slot taking the rest.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, remaining - k);
        }
        cur[pos] = 0;
    };
    if (nvars == 0) {
        if (degree == 0)
            out.push_back({});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

std::vector<Exps> monomials_below_degree(int nvars, int bound)
{
    std::vector<Exps> out;
    for (int d = 0; d < bound; ++d) {
        auto layer = monomials_of_degree(nvars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

Polynomial Polynomial::constant(VarsPtr vars, Rat c)
{
    Polynomial p(std::move(vars));
    if (!c.is_zero())
        p.terms_.emplace(Exps(p.nvars(), 0), std::move(c));
    return p;
}

Polynomial Polynomial::variable(const VarsPtr& vars, int index)
{
    if (index < 0 || index >= static_cast<int>(vars->size()))
        fail(Errc::validation, "variable index out of range");
    Exps e(vars->size(), 0);
    e[index] = 1;
    return monomial(vars, std::move(e), Rat(1));
}

Polynomial Polynomial::monomial(VarsPtr vars, Exps e, Rat c)
{
    Polynomial p(std::move(vars));
    if (static_cast<int>(e.size()) != p.nvars())
        fail(Errc::validation, "exponent tuple length mismatch");
    if (!c.is_zero())
        p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const
{
    if (terms_.empty())
        return -1;
    return total_degree(terms_.rbegin()->first);
}

int Polynomial::degree_in(int var) const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[var]);
    return d;
}

Rat Polynomial::coefficient(const Exps& e) const
{
    if (static_cast<int>(e.size()) != nvars())
        fail(Errc::validation, "exponent tuple length mismatch");
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Polynomial::constant_term() const
{
    if (terms_.empty())
        return Rat(0);
    const auto& first = *terms_.begin();
    return total_degree(first.first) == 0 ? first.second : Rat(0);
}

Rat Polynomial::leading_coefficient() const
{
    if (terms_.empty())
        return Rat(0);
    return terms_.rbegin()->second;
}

const Exps& Polynomial::leading_monomial() const
{
    if (terms_.empty())
        fail(Errc::compute, "leading monomial of zero polynomial");
    return terms_.rbegin()->first;
}

void Polynomial::require_compatible(const Polynomial& o) const
{
    if (!same_vars(vars_, o.vars_))
        fail(Errc::validation, "polynomial ring context mismatch");
}

void Polynomial::add_term(const Exps& e, const Rat& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    require_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.require_compatible(b);
    Polynomial r(a.vars_);
    Exps e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const
{
    Polynomial r(vars_);
    if (c.is_zero())
        return r;
    for (const auto& [e, k] : terms_)
        r.terms_.emplace(e, k * c);
    return r;
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0)
        fail(Errc::validation, "negative exponent");
    Polynomial r = Polynomial::constant(vars_, Rat(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const
{
    if (var < 0 || var >= nvars())
        fail(Errc::validation, "derivative index out of range");
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exps d = e;
        d[var] -= 1;
        r.terms_.emplace(std::move(d), c * Rat(e[var]));
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& assignment,
                                  const VarsPtr& target) const
{
    for (const auto& [idx, p] : assignment) {
        if (idx < 0 || idx >= nvars())
            fail(Errc::validation, "substitution index out of range");
        if (!same_vars(p.vars(), target))
            fail(Errc::validation, "substitution target context mismatch");
    }
    // Map unassigned variables into the target ring by name.
    std::vector<int> passthrough(nvars(), -1);
    for (int i = 0; i < nvars(); ++i) {
        if (assignment.count(i))
            continue;
        const std::string& name = (*vars_)[i];
        auto it = std::find(target->begin(), target->end(), name);
        if (it == target->end())
            fail(Errc::validation, "variable '" + name + "' missing from substitution target");
        passthrough[i] = static_cast<int>(it - target->begin());
    }

    std::map<std::pair<int, int>, Polynomial> power_cache;
    auto power_of = [&](int var, int e) -> const Polynomial& {
        auto key = std::make_pair(var, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end())
            return it->second;
        const Polynomial& base = assignment.at(var);
        return power_cache.emplace(key, base.pow(e)).first->second;
    };

    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        Exps direct(target->size(), 0);
        for (int i = 0; i < nvars(); ++i) {
            if (e[i] == 0)
                continue;
            if (passthrough[i] >= 0)
                direct[passthrough[i]] += e[i];
            else
                term = term * power_of(i, e[i]);
        }
        if (total_degree(direct) > 0)
            term = term * Polynomial::monomial(target, direct, Rat(1));
        r += term;
    }
    return r;
}

Polynomial Polynomial::remap(const VarsPtr& target, const std::vector<int>& var_map) const
{
    if (static_cast<int>(var_map.size()) != nvars())
        fail(Errc::validation, "variable map length mismatch");
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Exps d(target->size(), 0);
        for (int i = 0; i < nvars(); ++i) {
            if (e[i] == 0)
                continue;
            int t = var_map[i];
            if (t < 0 || t >= static_cast<int>(target->size()))
                fail(Errc::validation, "variable map index out of range");
            d[t] += e[i];
        }
        r.add_term(d, c);
    }
    return r;
}

Polynomial Polynomial::merge_var(int from, int to) const
{
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        Exps d = e;
        d[to] += d[from];
        d[from] = 0;
        r.add_term(d, c);
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (!same_vars(a.vars_, b.vars_))
        return false;
    return a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Graded-lex descending: leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            a = a.abs();
        }
        first = false;
        bool has_vars = total_degree(e) > 0;
        bool coeff_shown = !a.is_one() || !has_vars;
        if (coeff_shown)
            os << a.to_string();
        if (has_vars) {
            bool first_var = !coeff_shown;
            for (int i = 0; i < nvars(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!first_var)
                    os << "*";
                first_var = false;
                os << (*vars_)[i];
                if (e[i] > 1)
                    os << "^" << e[i];
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take()
    {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance()
    {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
            ++i_;
        size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Token::End, "", start};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_])))
                ++i_;
            tok_ = {Token::Number, std::string(src_.substr(start, i_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            tok_ = {Token::Ident, std::string(src_.substr(start, i_ - start)), start};
            return;
        }
        ++i_;
        switch (c) {
        case '+': tok_ = {Token::Plus, "+", start}; return;
        case '-': tok_ = {Token::Minus, "-", start}; return;
        case '*': tok_ = {Token::Star, "*", start}; return;
        case '^': tok_ = {Token::Caret, "^", start}; return;
        case '/': tok_ = {Token::Slash, "/", start}; return;
        case '(': tok_ = {Token::LParen, "(", start}; return;
        case ')': tok_ = {Token::RParen, ")", start}; return;
        default:
            fail(Errc::io, "unexpected character '" + std::string(1, c) + "' at position " +
                               std::to_string(start));
        }
    }

    std::string_view src_;
    size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(std::string_view src, const VarsPtr& vars) : lex_(src), vars_(vars) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        if (lex_.peek().kind != Token::End)
            fail(Errc::io, "unexpected token '" + lex_.peek().text + "' at position " +
                               std::to_string(lex_.peek().pos));
        return p;
    }

private:
    Polynomial expr()
    {
        bool negate = false;
        if (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus)
            negate = lex_.take().kind == Token::Minus;
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.take().kind == Token::Minus;
            Polynomial t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor()
    {
        Polynomial b = base();
        if (lex_.peek().kind == Token::Caret) {
            Token caret = lex_.take();
            if (lex_.peek().kind == Token::Minus)
                fail(Errc::io,
                     "negative exponent at position " + std::to_string(lex_.peek().pos));
            if (lex_.peek().kind != Token::Number)
                fail(Errc::io,
                     "expected exponent after '^' at position " + std::to_string(caret.pos));
            Token e = lex_.take();
            b = b.pow(std::stoi(e.text));
        }
        return b;
    }

    Polynomial base()
    {
        Token t = lex_.peek();
        switch (t.kind) {
        case Token::Number: {
            lex_.take();
            std::string lit = t.text;
            if (lex_.peek().kind == Token::Slash) {
                lex_.take();
                if (lex_.peek().kind != Token::Number)
                    fail(Errc::io, "expected denominator at position " +
                                       std::to_string(lex_.peek().pos));
                lit += "/" + lex_.take().text;
            }
            return Polynomial::constant(vars_, Rat::from_string(lit));
        }
        case Token::Ident: {
            lex_.take();
            auto it = std::find(vars_->begin(), vars_->end(), t.text);
            if (it == vars_->end())
                fail(Errc::io, "unknown identifier '" + t.text + "' at position " +
                                   std::to_string(t.pos));
            return Polynomial::variable(vars_, static_cast<int>(it - vars_->begin()));
        }
        case Token::LParen: {
            lex_.take();
            Polynomial p = expr();
            if (lex_.peek().kind != Token::RParen)
                fail(Errc::io,
                     "expected ')' at position " + std::to_string(lex_.peek().pos));
            lex_.take();
            return p;
        }
        case Token::Minus:
        case Token::Plus: {
            // Signed sub-expression, e.g. "2*-3" is rejected but "(-3)" and a
            // leading sign inside parentheses are handled in expr().
            fail(Errc::io, "unexpected '" + t.text + "' at position " + std::to_string(t.pos));
        }
        default:
            fail(Errc::io, "unexpected token at position " + std::to_string(t.pos));
        }
    }

    Lexer lex_;
    const VarsPtr& vars_;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const VarsPtr& vars)
{
    return Parser(text, vars).parse();
}

RingContext make_ring(Vars names, const std::string& potential_expr)
{
    VarsPtr vars = make_vars(std::move(names));
    Polynomial w = parse_polynomial(potential_expr, vars);
    return make_ring(vars, std::move(w));
}

RingContext make_ring(VarsPtr vars, Polynomial w)
{
    if (vars->empty())
        fail(Errc::validation, "ring needs at least one variable");
    for (size_t i = 0; i < vars->size(); ++i) {
        const std::string& name = (*vars)[i];
        if (name.empty() || (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_'))
            fail(Errc::validation, "invalid variable name '" + name + "'");
        for (char c : name)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                fail(Errc::validation, "invalid variable name '" + name + "'");
        for (size_t j = i + 1; j < vars->size(); ++j)
            if ((*vars)[i] == (*vars)[j])
                fail(Errc::validation, "duplicate variable name '" + name + "'");
    }
    if (!same_vars(w.vars(), vars))
        fail(Errc::validation, "potential context mismatch");
    if (!w.constant_term().is_zero())
        fail(Errc::validation, "potential must vanish at the origin");
    if (w.is_zero())
        fail(Errc::validation, "potential must be nonzero");
    return RingContext{std::move(vars), std::move(w)};
}

} // namespace mfwb
