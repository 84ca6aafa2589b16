#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oreg/errors.hpp"
#include "oreg/graph.hpp"
#include "oreg/monomial.hpp"

namespace oreg {

// Ordered variable set. The order decides generator sorting and rendering.
// Each variable may carry a display name distinct from its id (polarized
// slot 1 displays as the base variable).
class VariableSet {
public:
    VariableSet() = default;
    explicit VariableSet(const std::vector<std::string>& ids);

    void add(const std::string& id, const std::string& display = "");
    bool contains(const std::string& id) const { return index_.count(id) > 0; }
    int index_of(const std::string& id) const;
    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& display(const std::string& id) const;

    // Left operand's order first, then right-only variables in their order.
    static VariableSet unite(const VariableSet& a, const VariableSet& b);

    bool operator==(const VariableSet& other) const {
        return ids_ == other.ids_;
    }

private:
    std::vector<std::string> ids_;
    std::vector<std::string> display_;
    std::map<std::string, int> index_;
};

// Slot bookkeeping for polarization: (base variable, slot j >= 1) <-> the
// polarized variable id. Covers exactly the slots the ideal uses.
class PolarizationMap {
public:
    struct Slot {
        std::string base;
        int slot = 0;
        std::string polar;
    };

    void add(const std::string& base, int slot, const std::string& polar);
    const std::vector<Slot>& slots() const { return slots_; }
    const std::string& polar_id(const std::string& base, int slot) const;
    std::optional<std::pair<std::string, int>> origin(const std::string& polar) const;

private:
    std::vector<Slot> slots_;
    std::map<std::pair<std::string, int>, int> by_base_;
    std::map<std::string, int> by_polar_;
};

// Monomial ideal held as its unique minimal monomial generating set, sorted
// by ascending lexicographic comparison of exponent vectors in variable
// order. The zero ideal has no generators.
class MonomialIdeal {
public:
    MonomialIdeal(VariableSet variables, std::vector<Monomial> generators);
    static MonomialIdeal zero(VariableSet variables);

    const VariableSet& variables() const { return vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_squarefree() const;
    // Membership by divisibility: m lies in the ideal iff some generator
    // divides it.
    bool contains(const Monomial& m) const;

    std::vector<std::string> support() const;

    std::string render_monomial(const Monomial& m) const;
    std::string render() const;

    // Equality of minimal generating sets; ambient variables are ignored.
    bool same_generators(const MonomialIdeal& other) const;

private:
    VariableSet vars_;
    std::vector<Monomial> gens_;
};

// Removes duplicates and every monomial strictly divisible by another.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

// Generators x_i * x_j^{w_j} over the directed edges (x_i, x_j); the zero
// ideal when D has no edges. Variable set = V(D) in declared order.
MonomialIdeal edge_ideal(const WeightedOrientedGraph& d);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
// Pairwise lcms; exponential in the generator counts, fine at desk scale
// (<= ~20 generators a side).
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_colon(const MonomialIdeal& a, const Monomial& m);

// Squarefree image of the ideal: x^a becomes the product of slot variables
// x@1..x@a. Slot 1 of x displays as "x". Throws ZeroIdeal.
std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& ideal);

// Parses "x^2*y" style monomial strings.
Monomial parse_monomial(const std::string& text);

}  // namespace oreg
