#pragma once

#include <map>
#include <string>
#include <vector>

namespace oreg {

// Sparse monomial: variable id -> positive exponent. Zero exponents are
// never stored, so the unit monomial has an empty map.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::map<std::string, int> exponents);

    static Monomial one() { return Monomial(); }
    static Monomial variable(const std::string& id, int exponent = 1);

    int exponent(const std::string& id) const;
    const std::map<std::string, int>& exponents() const { return exps_; }
    int degree() const;
    bool is_one() const { return exps_.empty(); }
    bool is_squarefree() const;
    std::vector<std::string> support() const;

    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    // this / gcd(this, other)
    Monomial colon(const Monomial& other) const;

    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }
    // Order by the exponent maps; containers only. Ideal display order is
    // decided by the ideal's variable order instead.
    bool operator<(const Monomial& other) const { return exps_ < other.exps_; }

private:
    std::map<std::string, int> exps_;
};

}  // namespace oreg
