#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oreg/homology.hpp"
#include "oreg/ideal.hpp"

namespace oreg {

// Graded Betti numbers of an ideal or of its quotient ring, as a sparse
// (homological index i, internal degree j) -> count table.
struct BettiTable {
    enum class Subject { Ideal, Quotient };

    Subject subject = Subject::Ideal;
    Field field = Field::GF2;
    std::map<std::pair<int, int>, long long> entries;  // nonzero cells only

    long long at(int i, int j) const;
    // max j - i over nonzero cells
    int regularity() const;
    // beta_{i,j}(I) = beta_{i+1,j}(R/I)
    BettiTable to_ideal() const;

    bool operator==(const BettiTable& other) const { return entries == other.entries; }
};

struct OracleOptions {
    Field field = Field::GF2;
    int max_polar_vars = 18;
    // 0 = decide from ORIENTED_REG_THREADS or hardware concurrency
    int threads = 0;
};

// Graded Betti table of R/I via a Hochster sweep on the polarized ideal:
// only the vertex subsets in which every vertex is covered by a generator
// contribute (induced subcomplexes with a cone point are skipped), and those
// subsets are exactly the unions of generator supports. Each contribution is
// the homology of the induced Stanley-Reisner subcomplex, computed either
// directly or through the nerve of its Alexander-dual cover, whichever is
// smaller. Throws ZeroIdeal / UnitIdeal / TooLarge.
BettiTable graded_betti_quotient(const MonomialIdeal& ideal, const OracleOptions& opts = {});
BettiTable graded_betti(const MonomialIdeal& ideal, const OracleOptions& opts = {});

// reg(I) = max { j - i : beta_{i,j}(I) != 0 }
int regularity_oracle(const MonomialIdeal& ideal, const OracleOptions& opts = {});
int regularity_oracle_quotient(const MonomialIdeal& ideal, const OracleOptions& opts = {});

struct SplittingReport {
    bool ok = false;
    std::vector<std::string> violations;  // "(i,j): lhs != rhs" cells
    BettiTable whole, left, right, meet;
};

// Checks beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J cap K)
// cell by cell, with the i = 0 convention dropping the last term. Requires
// G(I) to be the disjoint union of the nonempty G(J) and G(K); throws
// NotAPartition otherwise.
SplittingReport betti_splitting_check(const MonomialIdeal& whole, const MonomialIdeal& left,
                                      const MonomialIdeal& right,
                                      const OracleOptions& opts = {});

// Equigenerated with reg equal to the generator degree; false for mixed
// degrees.
bool has_linear_resolution(const MonomialIdeal& ideal, const OracleOptions& opts = {});

struct VariableSplit {
    MonomialIdeal left;   // generators divisible by the pivot variable
    MonomialIdeal right;  // the rest
    bool applies = false;
    std::string note;
};

// Splits off the generators divisible by `pivot` and reports whether the
// linear-resolution splitting criterion applies to the pair.
VariableSplit splitting_condition_check(const MonomialIdeal& ideal, const std::string& pivot,
                                        const OracleOptions& opts = {});

}  // namespace oreg
