#include "liscount/vseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace liscount {

VSeries::VSeries(int nvars, int order) : nvars_(nvars), order_(order), zero_(nvars) {
    if (order < 0)
        throw std::invalid_argument("VSeries: negative truncation order");
}

VSeries VSeries::one(int nvars, int order) {
    VSeries s(nvars, order);
    s.set_coefficient(0, TPoly::constant(nvars, Rational(1)));
    return s;
}

void VSeries::set_coefficient(int m, TPoly p) {
    if (m < 0 || m > order_)
        throw std::out_of_range("VSeries::set_coefficient: degree beyond truncation order");
    if (p.nvars() != nvars_)
        throw std::invalid_argument("VSeries::set_coefficient: variable count mismatch");
    if (p.is_zero())
        coeffs_.erase(m);
    else
        coeffs_.insert_or_assign(m, std::move(p));
}

const TPoly& VSeries::coefficient(int m) const {
    if (m < 0 || m > order_)
        throw std::out_of_range("VSeries::coefficient: degree beyond truncation order");
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? zero_ : it->second;
}

namespace {

long combine_limits(long a, long b) {
    if (a < 0)
        return b;
    if (b < 0)
        return a;
    return std::min(a, b);
}

}  // namespace

VSeries VSeries::operator+(const VSeries& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("VSeries: variable count mismatch");
    VSeries result(nvars_, std::min(order_, other.order_));
    result.degree_limit_ = combine_limits(degree_limit_, other.degree_limit_);
    for (const auto& [m, p] : coeffs_) {
        if (m > result.order_)
            break;
        result.coeffs_.emplace(m, p);
    }
    for (const auto& [m, p] : other.coeffs_) {
        if (m > result.order_)
            break;
        auto it = result.coeffs_.find(m);
        if (it == result.coeffs_.end()) {
            result.coeffs_.emplace(m, p);
        } else {
            it->second += p;
            if (it->second.is_zero())
                result.coeffs_.erase(it);
        }
    }
    return result;
}

VSeries VSeries::operator-(const VSeries& other) const {
    return *this + (-other);
}

VSeries VSeries::operator-() const {
    VSeries result(nvars_, order_);
    result.degree_limit_ = degree_limit_;
    for (const auto& [m, p] : coeffs_)
        result.coeffs_.emplace(m, -p);
    return result;
}

VSeries VSeries::operator*(const VSeries& other) const {
    return vseries_mul(*this, other, std::min(order_, other.order_),
                       combine_limits(degree_limit_, other.degree_limit_));
}

bool VSeries::operator==(const VSeries& other) const {
    return nvars_ == other.nvars_ && order_ == other.order_ && coeffs_ == other.coeffs_;
}

VSeries vseries_mul(const VSeries& a, const VSeries& b, int order, long degree_limit) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("vseries_mul: variable count mismatch");
    if (order < 0)
        throw std::invalid_argument("vseries_mul: negative order");
    VSeries result(a.nvars(), order);
    result.set_degree_limit(degree_limit);
    std::map<int, TPoly> acc;
    for (const auto& [ma, pa] : a.coefficients()) {
        if (ma > order)
            break;
        for (const auto& [mb, pb] : b.coefficients()) {
            if (ma + mb > order)
                break;
            TPoly prod = pa * pb;
            if (degree_limit >= 0)
                prod.prune_above(degree_limit);
            if (prod.is_zero())
                continue;
            auto it = acc.find(ma + mb);
            if (it == acc.end())
                acc.emplace(ma + mb, std::move(prod));
            else
                it->second += prod;
        }
    }
    for (auto& [m, p] : acc)
        result.set_coefficient(m, std::move(p));
    return result;
}

}  // namespace liscount
