#include "liscount/tpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace liscount {

long weighted_degree(const ExponentVector& e) {
    long deg = 0;
    for (std::size_t j = 0; j < e.size(); ++j)
        deg += static_cast<long>(j + 1) * e[j];
    return deg;
}

bool GradedLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const long da = weighted_degree(a);
    const long db = weighted_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

TPoly::TPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0)
        throw std::invalid_argument("TPoly: negative variable count");
}

TPoly TPoly::constant(int nvars, const Rational& c) {
    TPoly p(nvars);
    p.add_term(ExponentVector(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

TPoly TPoly::variable(int nvars, int j) {
    if (j < 1 || j > nvars)
        throw std::invalid_argument("TPoly::variable: index out of range");
    ExponentVector e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(j - 1)] = 1;
    TPoly p(nvars);
    p.add_term(e, Rational(1));
    return p;
}

Rational TPoly::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TPoly::add_term(const ExponentVector& e, const Rational& c) {
    if (e.size() != static_cast<std::size_t>(nvars_))
        throw std::invalid_argument("TPoly::add_term: exponent vector length mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TPoly& TPoly::operator+=(const TPoly& other) {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("TPoly: variable count mismatch");
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("TPoly: variable count mismatch");
    for (const auto& [e, c] : other.terms_)
        add_term(e, Rational(-c));
    return *this;
}

TPoly& TPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= scalar;
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly p(nvars_);
    for (const auto& [e, c] : terms_)
        p.terms_.emplace(e, Rational(-c));
    return p;
}

TPoly TPoly::operator*(const TPoly& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("TPoly: variable count mismatch");
    TPoly result(nvars_);
    ExponentVector e(static_cast<std::size_t>(nvars_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (std::size_t j = 0; j < e.size(); ++j)
                e[j] = ea[j] + eb[j];
            result.add_term(e, ca * cb);
        }
    }
    return result;
}

TPoly TPoly::pow(unsigned n) const {
    TPoly result = constant(nvars_, Rational(1));
    TPoly base = *this;
    while (n > 0) {
        if (n & 1u)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

long TPoly::max_weighted_degree() const {
    if (terms_.empty())
        return -1;
    return weighted_degree(terms_.rbegin()->first);  // graded order: last is largest
}

bool TPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    const long deg = weighted_degree(terms_.begin()->first);
    return deg == weighted_degree(terms_.rbegin()->first);
}

void TPoly::prune_above(long limit) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (weighted_degree(it->first) > limit)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Rational TPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != static_cast<std::size_t>(nvars_))
        throw std::invalid_argument("TPoly::eval: point dimension mismatch");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (unsigned k = 0; k < e[j]; ++k)
                term *= point[j];
        sum += term;
    }
    return sum;
}

std::string TPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0)
                continue;
            os << "*t" << j + 1;
            if (e[j] > 1)
                os << "^" << e[j];
        }
    }
    return os.str();
}

Rational gaussian_pairing(const TPoly& p, const TPoly& q) {
    if (p.nvars() != q.nvars())
        throw std::invalid_argument("gaussian_pairing: variable count mismatch");
    const TPoly& small = p.terms().size() <= q.terms().size() ? p : q;
    const TPoly& large = p.terms().size() <= q.terms().size() ? q : p;
    Rational sum(0);
    for (const auto& [e, c] : small.terms()) {
        auto it = large.terms().find(e);
        if (it == large.terms().end())
            continue;
        BigInt weight(1);
        for (unsigned exp : e)
            weight *= factorial(exp);
        sum += c * it->second * Rational(weight);
    }
    return sum;
}

}  // namespace liscount
