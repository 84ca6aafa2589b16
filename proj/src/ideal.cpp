#include "oreg/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace oreg {

VariableSet::VariableSet(const std::vector<std::string>& ids) {
    for (const auto& id : ids) add(id);
}

void VariableSet::add(const std::string& id, const std::string& display) {
    auto [it, inserted] = index_.emplace(id, static_cast<int>(ids_.size()));
    if (!inserted) throw DuplicateVertex("variable '" + id + "' declared twice");
    ids_.push_back(id);
    display_.push_back(display.empty() ? id : display);
}

int VariableSet::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UndeclaredVertex("variable '" + id + "'");
    return it->second;
}

const std::string& VariableSet::display(const std::string& id) const {
    return display_[index_of(id)];
}

VariableSet VariableSet::unite(const VariableSet& a, const VariableSet& b) {
    VariableSet out;
    for (const auto& id : a.ids()) out.add(id, a.display(id));
    for (const auto& id : b.ids())
        if (!out.contains(id)) out.add(id, b.display(id));
    return out;
}

void PolarizationMap::add(const std::string& base, int slot, const std::string& polar) {
    by_base_[{base, slot}] = static_cast<int>(slots_.size());
    by_polar_[polar] = static_cast<int>(slots_.size());
    slots_.push_back({base, slot, polar});
}

const std::string& PolarizationMap::polar_id(const std::string& base, int slot) const {
    auto it = by_base_.find({base, slot});
    if (it == by_base_.end())
        throw UndeclaredVertex("no polarization slot (" + base + "," + std::to_string(slot) + ")");
    return slots_[it->second].polar;
}

std::optional<std::pair<std::string, int>> PolarizationMap::origin(
    const std::string& polar) const {
    auto it = by_polar_.find(polar);
    if (it == by_polar_.end()) return std::nullopt;
    const Slot& s = slots_[it->second];
    return std::make_pair(s.base, s.slot);
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

namespace {

// Ascending lexicographic comparison of exponent vectors in variable order.
bool generator_less(const VariableSet& vars, const Monomial& a, const Monomial& b) {
    for (const auto& id : vars.ids()) {
        int ea = a.exponent(id), eb = b.exponent(id);
        if (ea != eb) return ea < eb;
    }
    return false;
}

}  // namespace

MonomialIdeal::MonomialIdeal(VariableSet variables, std::vector<Monomial> generators)
    : vars_(std::move(variables)) {
    for (const auto& g : generators)
        for (const auto& id : g.support())
            if (!vars_.contains(id))
                throw UndeclaredVertex("generator uses unknown variable '" + id + "'");
    gens_ = minimalize(std::move(generators));
    std::sort(gens_.begin(), gens_.end(), [this](const Monomial& a, const Monomial& b) {
        return generator_less(vars_, a, b);
    });
}

MonomialIdeal MonomialIdeal::zero(VariableSet variables) {
    return MonomialIdeal(std::move(variables), {});
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&m](const Monomial& g) { return g.divides(m); });
}

std::vector<std::string> MonomialIdeal::support() const {
    std::set<std::string> seen;
    for (const auto& g : gens_)
        for (const auto& id : g.support()) seen.insert(id);
    std::vector<std::string> out;
    for (const auto& id : vars_.ids())
        if (seen.count(id)) out.push_back(id);
    return out;
}

std::string MonomialIdeal::render_monomial(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& id : vars_.ids()) {
        int e = m.exponent(id);
        if (e == 0) continue;
        if (!first) os << "*";
        os << vars_.display(id);
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string MonomialIdeal::render() const {
    if (is_zero()) return "(0)";
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << render_monomial(gens_[i]);
    }
    os << ")";
    return os.str();
}

bool MonomialIdeal::same_generators(const MonomialIdeal& other) const {
    return std::set<Monomial>(gens_.begin(), gens_.end()) ==
           std::set<Monomial>(other.gens_.begin(), other.gens_.end());
}

MonomialIdeal edge_ideal(const WeightedOrientedGraph& d) {
    VariableSet vars(d.vertices());
    std::vector<Monomial> gens;
    for (const auto& [tail, head] : d.edges())
        gens.push_back(Monomial::variable(tail) * Monomial::variable(head, d.weight(head)));
    return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(VariableSet::unite(a.variables(), b.variables()), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens;
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators()) gens.push_back(ga * gb);
    return MonomialIdeal(VariableSet::unite(a.variables(), b.variables()), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens;
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators()) gens.push_back(Monomial::lcm(ga, gb));
    return MonomialIdeal(VariableSet::unite(a.variables(), b.variables()), std::move(gens));
}

MonomialIdeal ideal_colon(const MonomialIdeal& a, const Monomial& m) {
    std::vector<Monomial> gens;
    for (const auto& g : a.generators()) gens.push_back(g.colon(m));
    return MonomialIdeal(a.variables(), std::move(gens));
}

std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw ZeroIdeal("cannot polarize the zero ideal");
    PolarizationMap map;
    VariableSet polar_vars;
    for (const auto& id : ideal.variables().ids()) {
        int max_exp = 0;
        for (const auto& g : ideal.generators())
            max_exp = std::max(max_exp, g.exponent(id));
        for (int j = 1; j <= max_exp; ++j) {
            std::string polar = id + "@" + std::to_string(j);
            map.add(id, j, polar);
            polar_vars.add(polar, j == 1 ? ideal.variables().display(id) : polar);
        }
    }
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        Monomial p;
        for (const auto& [id, e] : g.exponents())
            for (int j = 1; j <= e; ++j) p = p * Monomial::variable(map.polar_id(id, j));
        gens.push_back(p);
    }
    return {MonomialIdeal(std::move(polar_vars), std::move(gens)), std::move(map)};
}

Monomial parse_monomial(const std::string& text) {
    std::map<std::string, int> exps;
    std::string trimmed;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) throw ParseError("empty monomial");
    if (trimmed == "1") return Monomial::one();
    std::stringstream ss(trimmed);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        if (factor.empty()) throw ParseError("empty factor in '" + text + "'");
        auto caret = factor.find('^');
        std::string id = factor.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) {
            try {
                e = std::stoi(factor.substr(caret + 1));
            } catch (const std::exception&) {
                throw ParseError("bad exponent in '" + factor + "'");
            }
        }
        if (id.empty() || e < 1) throw ParseError("bad factor '" + factor + "'");
        exps[id] += e;
    }
    return Monomial(std::move(exps));
}

}  // namespace oreg
