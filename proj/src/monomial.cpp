#include "oreg/monomial.hpp"

#include <stdexcept>

namespace oreg {

Monomial::Monomial(std::map<std::string, int> exponents) {
    for (auto& [id, e] : exponents) {
        if (e < 0) throw std::invalid_argument("negative exponent for " + id);
        if (e > 0) exps_.emplace(id, e);
    }
}

Monomial Monomial::variable(const std::string& id, int exponent) {
    return Monomial({{id, exponent}});
}

int Monomial::exponent(const std::string& id) const {
    auto it = exps_.find(id);
    return it == exps_.end() ? 0 : it->second;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [id, e] : exps_) d += e;
    return d;
}

bool Monomial::is_squarefree() const {
    for (const auto& [id, e] : exps_)
        if (e > 1) return false;
    return true;
}

std::vector<std::string> Monomial::support() const {
    std::vector<std::string> out;
    for (const auto& [id, e] : exps_) out.push_back(id);
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    for (const auto& [id, e] : exps_)
        if (other.exponent(id) < e) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::map<std::string, int> exps = exps_;
    for (const auto& [id, e] : other.exps_) exps[id] += e;
    return Monomial(std::move(exps));
}

Monomial Monomial::colon(const Monomial& other) const {
    std::map<std::string, int> exps;
    for (const auto& [id, e] : exps_) {
        int r = e - other.exponent(id);
        if (r > 0) exps[id] = r;
    }
    return Monomial(std::move(exps));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    std::map<std::string, int> exps;
    for (const auto& [id, e] : a.exps_) {
        int m = std::min(e, b.exponent(id));
        if (m > 0) exps[id] = m;
    }
    return Monomial(std::move(exps));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::map<std::string, int> exps = a.exps_;
    for (const auto& [id, e] : b.exps_) {
        int& cur = exps[id];
        cur = std::max(cur, e);
    }
    return Monomial(std::move(exps));
}

}  // namespace oreg
